use std::collections::HashMap;

use serde::Serialize;

use super::{iter_bits, SimpleGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GraphMetrics {
    /// `None` when the graph is disconnected.
    pub diameter: Option<usize>,
    /// `None` for forests.
    pub girth: Option<usize>,
    pub eccentricity_of_zero: Option<usize>,
}

pub fn metrics(g: &SimpleGraph) -> GraphMetrics {
    let n = g.vertex_count();
    let mut diameter = Some(0);
    let mut ecc0 = None;
    for s in 0..n {
        let ecc = eccentricity(g, s);
        if s == 0 {
            ecc0 = ecc;
        }
        diameter = match (diameter, ecc) {
            (Some(d), Some(e)) => Some(d.max(e)),
            _ => None,
        };
    }
    GraphMetrics {
        diameter: if n == 0 { None } else { diameter },
        girth: girth(g),
        eccentricity_of_zero: ecc0,
    }
}

/// Level-synchronous BFS on bitset rows.
pub fn eccentricity(g: &SimpleGraph, source: usize) -> Option<usize> {
    let n = g.vertex_count();
    let words = g.row(0).len();
    let mut seen = vec![0u64; words];
    let mut frontier = vec![0u64; words];
    seen[source / 64] |= 1 << (source % 64);
    frontier[source / 64] |= 1 << (source % 64);
    let mut reached = 1;
    let mut depth = 0;
    loop {
        let mut next = vec![0u64; words];
        for u in iter_bits(&frontier) {
            for (nw, rw) in next.iter_mut().zip(g.row(u)) {
                *nw |= rw;
            }
        }
        let mut grew = 0;
        for (nw, sw) in next.iter_mut().zip(seen.iter_mut()) {
            *nw &= !*sw;
            *sw |= *nw;
            grew += nw.count_ones() as usize;
        }
        if grew == 0 {
            break;
        }
        reached += grew;
        depth += 1;
        frontier = next;
    }
    (reached == n).then_some(depth)
}

fn girth(g: &SimpleGraph) -> Option<usize> {
    let has_triangle = g
        .edges()
        .any(|(u, v)| g.row(u).iter().zip(g.row(v)).any(|(a, b)| a & b != 0));
    if has_triangle {
        return Some(3);
    }
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = std::collections::VecDeque::from([s]);
        dist[s] = 0;
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Classes of the twin relation `u ~ v ⇔ N(u)∖{v} = N(v)∖{u}`.
///
/// Non-adjacent twins share `N(u)`, adjacent twins share `N[u]`; the relation
/// is an equivalence, so merging both groupings gives the classes.
pub fn twin_classes(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut uf: Vec<usize> = (0..n).collect();
    fn find(uf: &mut [usize], mut x: usize) -> usize {
        while uf[x] != x {
            uf[x] = uf[uf[x]];
            x = uf[x];
        }
        x
    }

    let mut open: HashMap<&[u64], usize> = HashMap::new();
    let mut closed: HashMap<Vec<u64>, usize> = HashMap::new();
    for u in 0..n {
        let row = g.row(u);
        let mut closed_row = row.to_vec();
        closed_row[u / 64] |= 1 << (u % 64);
        for rep in [*open.entry(row).or_insert(u), *closed.entry(closed_row).or_insert(u)] {
            let (a, b) = (find(&mut uf, rep), find(&mut uf, u));
            if a != b {
                uf[a.max(b)] = a.min(b);
            }
        }
    }

    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut slot: HashMap<usize, usize> = HashMap::new();
    for u in 0..n {
        let r = find(&mut uf, u);
        let idx = *slot.entry(r).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[idx].push(u);
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use crate::group::FiniteAbelianGroup;

    fn gamma(m: &[u64]) -> SimpleGraph {
        build_graph(&FiniteAbelianGroup::new(m).unwrap()).unwrap().graph().clone()
    }

    #[test]
    fn metric_examples() {
        let m = metrics(&gamma(&[8]));
        assert_eq!((m.diameter, m.girth, m.eccentricity_of_zero), (Some(2), Some(3), Some(1)));
        let m = metrics(&gamma(&[3]));
        assert_eq!((m.diameter, m.girth, m.eccentricity_of_zero), (Some(2), None, Some(1)));
        let m = metrics(&gamma(&[2, 2]));
        assert_eq!((m.diameter, m.girth), (Some(1), Some(3)));
    }

    #[test]
    fn girth_of_plain_graphs() {
        assert_eq!(metrics(&SimpleGraph::cycle(5)).girth, Some(5));
        assert_eq!(metrics(&SimpleGraph::cycle(4)).girth, Some(4));
        assert_eq!(metrics(&SimpleGraph::path(6)).girth, None);
        assert_eq!(metrics(&SimpleGraph::path(6)).diameter, Some(5));
        assert_eq!(metrics(&SimpleGraph::empty(3)).diameter, None);
    }

    #[test]
    fn twin_examples() {
        assert_eq!(
            twin_classes(&gamma(&[8])),
            vec![vec![0], vec![1, 3, 5, 7], vec![2, 6], vec![4]]
        );
        assert_eq!(twin_classes(&gamma(&[2, 2])), vec![vec![0, 1, 2, 3]]);
        // K_{1,3}: the three leaves are pairwise twins
        assert_eq!(twin_classes(&gamma(&[4])), vec![vec![0], vec![1, 2, 3]]);
        assert_eq!(twin_classes(&gamma(&[2])), vec![vec![0, 1]]);
        assert_eq!(twin_classes(&gamma(&[9])), vec![vec![0], vec![1, 2, 4, 5, 7, 8], vec![3, 6]]);
    }
}
