//! Threshold-graph recognition, creation sequences and Laplacian spectra
//! read off the Ferrers conjugate of the degree sequence.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::arith;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::group::orbit_size;
use crate::partition::{conjugate_runs, IntPartition};

/// Binary build word: vertex `i` is added isolated (`0`) or dominating (`1`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct CreationSequence {
    bits: Vec<bool>,
}

impl CreationSequence {
    pub fn new(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    /// Concatenation of `(bit, run length)` blocks.
    pub fn from_runs(runs: &[(bool, u64)]) -> Self {
        let bits = runs
            .iter()
            .flat_map(|&(b, len)| std::iter::repeat_n(b, len as usize))
            .collect();
        Self { bits }
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Vertex `i` is the `i`-th added vertex.
    pub fn to_graph(&self) -> SimpleGraph {
        let n = self.bits.len();
        let mut g = SimpleGraph::empty(n);
        for (v, &dominating) in self.bits.iter().enumerate() {
            if dominating {
                for u in 0..v {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Connected iff the last vertex dominates (or the graph is `K_1`).
    pub fn is_connected(&self) -> bool {
        self.bits.len() == 1 || self.bits.last() == Some(&true)
    }
}

impl fmt::Display for CreationSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for CreationSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(pos, c)| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse {
                    pos,
                    msg: format!("expected 0 or 1, found {c:?}"),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }
}

/// `true` if `(a,b)`, `(c,d)` are edges and `(a,c)`, `(b,d)` are not.
pub fn is_alternating_4cycle(g: &SimpleGraph, [a, b, c, d]: [usize; 4]) -> bool {
    let distinct = a != b && a != c && a != d && b != c && b != d && c != d;
    distinct && g.has_edge(a, b) && g.has_edge(c, d) && !g.has_edge(a, c) && !g.has_edge(b, d)
}

/// Earliest alternating 4-cycle, or `None` iff `g` is threshold.
///
/// A graph is threshold iff for all `u < v` one of `N(u)∖{v}`, `N(v)∖{u}`
/// contains the other. If neither does, pick the least `c ∈ N(u)∖N[v]` and
/// `d ∈ N(v)∖N[u]`; then `[u, c, d, v]` is a witness.
pub fn find_alternating_4cycle(g: &SimpleGraph) -> Option<[usize; 4]> {
    let n = g.vertex_count();
    for u in 0..n {
        let ru = g.row(u);
        for v in u + 1..n {
            let rv = g.row(v);
            let mut c = None;
            let mut d = None;
            for (w, (&a, &b)) in ru.iter().zip(rv).enumerate() {
                let mut only_u = a & !b;
                let mut only_v = b & !a;
                // drop u and v themselves from the differences
                for x in [u, v] {
                    if x / 64 == w {
                        only_u &= !(1 << (x % 64));
                        only_v &= !(1 << (x % 64));
                    }
                }
                if c.is_none() && only_u != 0 {
                    c = Some(w * 64 + only_u.trailing_zeros() as usize);
                }
                if d.is_none() && only_v != 0 {
                    d = Some(w * 64 + only_v.trailing_zeros() as usize);
                }
                if c.is_some() && d.is_some() {
                    break;
                }
            }
            if let (Some(c), Some(d)) = (c, d) {
                return Some([u, c, d, v]);
            }
        }
    }
    None
}

/// Peel isolated / dominating vertices; `None` if the graph gets stuck.
///
/// Independent of [`find_alternating_4cycle`], so the two can check each other.
pub fn try_peel(g: &SimpleGraph) -> Option<CreationSequence> {
    let n = g.vertex_count();
    let mut alive = vec![true; n];
    let mut deg = g.degrees();
    let mut rev = Vec::with_capacity(n);
    for remaining in (1..=n).rev() {
        let pick = (0..n)
            .filter(|&v| alive[v])
            .find(|&v| deg[v] == 0)
            .map(|v| (v, false))
            .or_else(|| {
                (0..n)
                    .filter(|&v| alive[v])
                    .find(|&v| deg[v] == remaining - 1)
                    .map(|v| (v, true))
            })?;
        let (v, bit) = pick;
        alive[v] = false;
        for w in g.neighbors(v) {
            if alive[w] {
                deg[w] -= 1;
            }
        }
        rev.push(bit);
    }
    if let Some(first) = rev.last_mut() {
        *first = false;
    }
    rev.reverse();
    Some(CreationSequence::new(rev))
}

pub fn peel_creation_sequence(g: &SimpleGraph) -> Result<CreationSequence> {
    if let Some(w) = find_alternating_4cycle(g) {
        return Err(Error::NotThreshold(w));
    }
    Ok(try_peel(g).expect("graphs without an alternating 4-cycle always peel"))
}

/// Run-length form of the creation word of `Γ(Z/p^α)`.
///
/// Even `α = 2k`: `0 1^{|O_k|-1} 0^{|O_{k-1}|} 1^{|O_{k+1}|} … 0^{|O_0|} 1^{|O_{2k}|}`.
/// Odd `α = 2k-1`: `0^{|O_{k-1}|} 1^{|O_k|} 0^{|O_{k-2}|} 1^{|O_{k+1}|} … 0^{|O_0|} 1^{|O_{2k-1}|}`.
pub fn closed_form_runs(p: u64, alpha: u32) -> Vec<(bool, u64)> {
    let size = |i: u32| orbit_size(p, alpha, i);
    let mut runs = Vec::new();
    if alpha.is_multiple_of(2) {
        let k = alpha / 2;
        runs.push((false, 1));
        runs.push((true, size(k) - 1));
        for t in 1..=k {
            runs.push((false, size(k - t)));
            runs.push((true, size(k + t)));
        }
    } else {
        let k = alpha.div_ceil(2);
        for t in 0..k {
            runs.push((false, size(k - 1 - t)));
            runs.push((true, size(k + t)));
        }
    }
    runs.retain(|&(_, len)| len > 0);
    runs
}

pub fn closed_form_creation_sequence(p: u64, alpha: u32) -> CreationSequence {
    CreationSequence::from_runs(&closed_form_runs(p, alpha))
}

/// `conjugate(degree sequence)` padded with zeros to `n` values, non-increasing.
pub fn laplacian_spectrum_threshold(g: &SimpleGraph) -> Result<Vec<u64>> {
    if let Some(w) = find_alternating_4cycle(g) {
        return Err(Error::NotThreshold(w));
    }
    let mut spec = g.degree_sequence().conjugate().parts().to_vec();
    spec.resize(g.vertex_count(), 0);
    Ok(spec)
}

/// Degree multiset of `Γ(Z/p^α)` as `degree -> count`, without building the graph.
pub fn degree_runs(p: u64, alpha: u32) -> BTreeMap<u64, u64> {
    let mut runs = BTreeMap::new();
    *runs.entry(arith::pow(p, alpha) - 1).or_insert(0) += 1;
    for i in 0..alpha {
        let d = if 2 * i < alpha { arith::pow(p, i) } else { arith::pow(p, i) - 1 };
        *runs.entry(d).or_insert(0) += orbit_size(p, alpha, i);
    }
    runs
}

/// Laplacian eigenvalue multiplicities of `Γ(Z/p^α)` as `eigenvalue -> multiplicity`.
pub fn laplacian_multiplicity_table(p: u64, alpha: u32) -> BTreeMap<u64, u64> {
    let conj = conjugate_runs(&degree_runs(p, alpha));
    let nonzero: u64 = conj.values().sum();
    let mut table = conj;
    table.insert(0, arith::pow(p, alpha) - nonzero);
    table
}

/// Expands a multiplicity table into a non-increasing list.
pub fn expand_table(table: &BTreeMap<u64, u64>) -> Vec<u64> {
    let parts = table
        .iter()
        .flat_map(|(&v, &m)| std::iter::repeat_n(v, m as usize))
        .collect();
    IntPartition::new(parts).parts().to_vec()
}
