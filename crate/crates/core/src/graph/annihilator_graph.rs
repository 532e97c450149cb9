use crate::annihilator::{all_annihilators, DEFAULT_ORACLE_CAP};
use crate::error::{Error, Result};
use crate::graph::{metrics, twin_classes, GraphMetrics, SimpleGraph};
use crate::group::{cyclic_orbits, FiniteAbelianGroup, IdealZ};
use crate::partition::IntPartition;

pub const DEFAULT_GRAPH_CAP: u64 = 10_000;

/// `Γ(G)`: vertices are the elements of `G` in index order, `x ~ y` iff
/// `[x:G][y:G]G = 0`, i.e. `exp(G) | d_x d_y`.
#[derive(Debug, Clone)]
pub struct AnnGraph {
    group: FiniteAbelianGroup,
    graph: SimpleGraph,
    vertex_gen: Vec<u64>,
}

pub fn build_graph(group: &FiniteAbelianGroup) -> Result<AnnGraph> {
    build_graph_capped(group, DEFAULT_GRAPH_CAP)
}

pub fn build_graph_capped(group: &FiniteAbelianGroup, max_vertices: u64) -> Result<AnnGraph> {
    if group.order() > max_vertices {
        return Err(Error::GraphTooLarge {
            vertices: group.order(),
            cap: max_vertices,
        });
    }
    let n = group.order() as usize;
    let exp = group.exponent() as u128;
    let vertex_gen = all_annihilators(group, DEFAULT_ORACLE_CAP.max(group.order()))?;

    // bucket vertices by generator; adjacency only depends on the pair of generators
    let mut classes: Vec<(u64, Vec<usize>)> = Vec::new();
    for (v, &d) in vertex_gen.iter().enumerate() {
        match classes.iter_mut().find(|(g, _)| *g == d) {
            Some((_, members)) => members.push(v),
            None => classes.push((d, vec![v])),
        }
    }

    let mut graph = SimpleGraph::empty(n);
    for (ci, (d1, m1)) in classes.iter().enumerate() {
        for (d2, m2) in &classes[ci..] {
            if !(*d1 as u128 * *d2 as u128).is_multiple_of(exp) {
                continue;
            }
            for &u in m1 {
                for &v in m2 {
                    if u != v {
                        graph.add_edge(u, v);
                    }
                }
            }
        }
    }

    Ok(AnnGraph {
        group: group.clone(),
        graph,
        vertex_gen,
    })
}

impl AnnGraph {
    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// Annihilator generator `d_v` of each vertex.
    pub fn vertex_gen(&self) -> &[u64] {
        &self.vertex_gen
    }

    pub fn annihilator_of(&self, v: usize) -> IdealZ {
        IdealZ::new(self.vertex_gen[v], self.group.exponent()).expect("stored generators divide exp(G)")
    }

    pub fn label(&self, v: usize) -> String {
        self.group.label(&self.group.element_at(v as u64))
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.vertex_count()).map(|v| self.label(v)).collect()
    }

    pub fn degree_sequence(&self) -> IntPartition {
        self.graph.degree_sequence()
    }

    pub fn metrics(&self) -> GraphMetrics {
        metrics(&self.graph)
    }

    /// Twin classes (`N(u)∖{v} = N(v)∖{u}`), each sorted, ordered by least member.
    pub fn twin_orbits(&self) -> Vec<Vec<usize>> {
        twin_classes(&self.graph)
    }

    /// Equitable quotient of `Γ(Z/p^α)` over the valuation classes.
    pub fn quotient(&self) -> Result<QuotientGraph> {
        let orbits = cyclic_orbits(&self.group)?;
        // V_1 = O_{α,p^α} = {0}, ..., V_{α+1} = O_{α,1}
        let parts: Vec<Vec<usize>> = orbits
            .iter()
            .rev()
            .map(|o| o.members.iter().map(|&m| m as usize).collect())
            .collect();
        QuotientGraph::from_partition(&self.graph, parts)
    }
}

/// Quotient of an equitable partition: `m_ij = |N(u) ∩ V_j|` for any `u ∈ V_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientGraph {
    pub parts: Vec<Vec<usize>>,
    pub sizes: Vec<usize>,
    pub matrix: Vec<Vec<i64>>,
}

impl QuotientGraph {
    /// Computes the quotient matrix, checking every vertex of every part.
    pub fn from_partition(graph: &SimpleGraph, parts: Vec<Vec<usize>>) -> Result<Self> {
        let mut part_of = vec![usize::MAX; graph.vertex_count()];
        for (pi, part) in parts.iter().enumerate() {
            for &v in part {
                part_of[v] = pi;
            }
        }
        let s = parts.len();
        let mut matrix = vec![vec![0i64; s]; s];
        for (pi, part) in parts.iter().enumerate() {
            for (k, &u) in part.iter().enumerate() {
                let mut counts = vec![0usize; s];
                for w in graph.neighbors(u) {
                    counts[part_of[w]] += 1;
                }
                if k == 0 {
                    matrix[pi] = counts.iter().map(|&c| c as i64).collect();
                    continue;
                }
                if let Some(j) = (0..s).find(|&j| counts[j] as i64 != matrix[pi][j]) {
                    return Err(Error::EquitabilityViolated {
                        vertex: u,
                        part: j,
                        got: counts[j],
                        expected: matrix[pi][j] as usize,
                    });
                }
            }
        }
        let sizes = parts.iter().map(Vec::len).collect();
        Ok(Self { parts, sizes, matrix })
    }
}
