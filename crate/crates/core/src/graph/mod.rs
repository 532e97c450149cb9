//! Simple undirected graphs with bitset adjacency rows, and the
//! group-annihilator graph built on top of them.

mod annihilator_graph;
pub mod export;
mod metrics;

pub use annihilator_graph::{build_graph, build_graph_capped, AnnGraph, QuotientGraph, DEFAULT_GRAPH_CAP};
pub use metrics::{metrics, twin_classes, GraphMetrics};

use num_traits::Float;

use crate::partition::IntPartition;
use crate::spectra::SymMatrix;

/// Simple graph on vertices `0..n`; row `u` is a bitset of `N(u)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Self {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// `K_{1,n-1}` centred at vertex 0.
    pub fn star(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (0, v)))
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|v| (v - 1, v)))
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0);
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Self-loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "edge ({u}, {v}) out of range for n = {}", self.n);
        if u == v {
            return;
        }
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn row(&self, u: usize) -> &[u64] {
        &self.bits[u * self.words..(u + 1) * self.words]
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(u))
    }

    pub fn degree(&self, u: usize) -> usize {
        self.row(u).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|u| self.degree(u)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.degrees().iter().sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Non-increasing sequence of the non-zero vertex degrees.
    pub fn degree_sequence(&self) -> IntPartition {
        IntPartition::new(
            self.degrees()
                .into_iter()
                .filter(|&d| d > 0)
                .map(|d| d as u64)
                .collect(),
        )
    }

    pub fn adjacency_matrix<T: Float>(&self) -> SymMatrix<T> {
        let mut m = SymMatrix::zeros(self.n);
        for (u, v) in self.edges() {
            m.set(u, v, T::one());
            m.set(v, u, T::one());
        }
        m
    }

    /// `D − A`.
    pub fn laplacian_matrix<T: Float>(&self) -> SymMatrix<T> {
        let mut m = SymMatrix::zeros(self.n);
        for u in 0..self.n {
            m.set(u, u, T::from(self.degree(u)).unwrap());
        }
        for (u, v) in self.edges() {
            m.set(u, v, -T::one());
            m.set(v, u, -T::one());
        }
        m
    }

    /// Dense 0/1 rows, handy for exact integer work.
    pub fn adjacency_rows(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| self.has_edge(u, v) as i64).collect())
            .collect()
    }
}

pub(crate) fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut w = w;
        std::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(wi * 64 + b)
        })
    })
}
