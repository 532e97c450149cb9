//! Adjacency and Laplacian spectra, energy, and the exact polynomial tools
//! used to pin down eigenvalues of small quotient matrices.

mod eigen;
mod energy;
mod matrix;
mod multiplicity;
pub mod poly;

pub use eigen::{symmetric_eigenvalues, JacobiConfig};
pub use energy::{
    classify_energy, conjecture_scan, thm6_f, thm6_g, thm6_sign_checks, verify_thm6, EnergyClass, ScanRow, SignCheck,
    Thm6Report, Verdict, ENERGY_GUARD,
};
pub use matrix::SymMatrix;
pub use multiplicity::{adjacency_mult_closed_form, predict_adjacency_spectrum, AdjacencyMultiplicities, SpectrumPrediction};

use num_traits::Float;
use serde::Serialize;

use crate::error::Result;
use crate::graph::SimpleGraph;

/// Eigenvalues in ascending order plus the off-diagonal norm left by the solver.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum<T> {
    eigenvalues: Vec<T>,
    achieved_tol: T,
}

impl<T: Float> Spectrum<T> {
    pub fn new(mut eigenvalues: Vec<T>, achieved_tol: T) -> Self {
        eigenvalues.sort_by(|a, b| a.partial_cmp(b).expect("eigenvalues are finite"));
        Self {
            eigenvalues,
            achieved_tol,
        }
    }

    pub fn eigenvalues(&self) -> &[T] {
        &self.eigenvalues
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn achieved_tol(&self) -> T {
        self.achieved_tol
    }

    /// `Σ |λ|`.
    pub fn energy(&self) -> T {
        self.eigenvalues.iter().fold(T::zero(), |acc, x| acc + x.abs())
    }

    pub fn sum(&self) -> T {
        self.eigenvalues.iter().fold(T::zero(), |acc, &x| acc + x)
    }

    pub fn sum_of_squares(&self) -> T {
        self.eigenvalues.iter().fold(T::zero(), |acc, &x| acc + x * x)
    }

    /// Eigenvalues within `radius` of `x`.
    pub fn count_near(&self, x: T, radius: T) -> usize {
        self.eigenvalues.iter().filter(|&&l| (l - x).abs() <= radius).count()
    }
}

pub fn adjacency_spectrum<T: Float>(g: &SimpleGraph, cfg: &JacobiConfig<T>) -> Result<Spectrum<T>> {
    symmetric_eigenvalues(&g.adjacency_matrix(), cfg)
}

pub fn laplacian_spectrum<T: Float>(g: &SimpleGraph, cfg: &JacobiConfig<T>) -> Result<Spectrum<T>> {
    symmetric_eigenvalues(&g.laplacian_matrix(), cfg)
}

pub fn energy<T: Float>(s: &Spectrum<T>) -> T {
    s.energy()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn energies_of_known_graphs() {
        let cfg = JacobiConfig::<f64>::default();
        for p in [3usize, 5, 7, 11] {
            let e = adjacency_spectrum(&SimpleGraph::star(p), &cfg).unwrap().energy();
            assert!((e - 2.0 * ((p - 1) as f64).sqrt()).abs() < 1e-9);
        }
        for n in [2usize, 4, 9] {
            let e = adjacency_spectrum(&SimpleGraph::complete(n), &cfg).unwrap().energy();
            assert!((e - 2.0 * (n - 1) as f64).abs() < 1e-9);
        }
        assert_eq!(adjacency_spectrum(&SimpleGraph::empty(6), &cfg).unwrap().energy(), 0.0);
    }

    #[test]
    fn moments_match_edges() {
        let g = SimpleGraph::cycle(9);
        let s = adjacency_spectrum(&g, &JacobiConfig::<f64>::default()).unwrap();
        assert!(s.sum().abs() < 1e-9);
        assert!((s.sum_of_squares() - 2.0 * g.edge_count() as f64).abs() < 1e-9);
        let l = laplacian_spectrum(&g, &JacobiConfig::<f64>::default()).unwrap();
        assert_eq!(l.count_near(0.0, 1e-9), 1);
    }
}
