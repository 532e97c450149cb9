use serde::Serialize;

use super::poly::{charpoly, int_matrix, real_roots_with_multiplicity, Poly, RootBracket};
use crate::arith;
use crate::error::{Error, Result};
use crate::graph::build_graph;
use crate::group::FiniteAbelianGroup;

/// Adjacency eigenvalue counts of `Γ(Z/p^α)`: `0`, `−1`, and everything else.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AdjacencyMultiplicities {
    pub zero: u64,
    pub neg_one: u64,
    pub residual: u64,
}

/// Even `α = 2k`: `(p^α − p^k − k, p^k − k − 1, 2k + 1)`;
/// odd `α = 2k − 1`: `(p^α − p^{k−1} − k, p^{k−1} − k, 2k)`; `(2, 1)` gives `(0, 1, 1)`.
pub fn adjacency_mult_closed_form(p: u64, alpha: u32) -> Result<AdjacencyMultiplicities> {
    if !arith::is_prime(p) {
        return Err(Error::NonPrimeBase(p));
    }
    if alpha == 0 {
        return Err(Error::InvalidGroup("exponent must be at least 1".into()));
    }
    if (p, alpha) == (2, 1) {
        return Ok(AdjacencyMultiplicities { zero: 0, neg_one: 1, residual: 1 });
    }
    let n = arith::pow(p, alpha);
    let m = if alpha.is_multiple_of(2) {
        let k = alpha / 2;
        let pk = arith::pow(p, k);
        AdjacencyMultiplicities {
            zero: n - pk - k as u64,
            neg_one: pk - k as u64 - 1,
            residual: 2 * k as u64 + 1,
        }
    } else {
        let k = alpha.div_ceil(2);
        let pk = arith::pow(p, k - 1);
        AdjacencyMultiplicities {
            zero: n - pk - k as u64,
            neg_one: pk - k as u64,
            residual: 2 * k as u64,
        }
    };
    Ok(m)
}

/// Adjacency spectrum of `Γ(Z/p^α)` assembled from the closed-form counts and
/// the exact roots of the valuation quotient's characteristic polynomial.
#[derive(Debug, Clone, Serialize)]
pub struct SpectrumPrediction {
    pub closed_form: AdjacencyMultiplicities,
    pub quotient_matrix: Vec<Vec<i64>>,
    pub quotient_charpoly: Poly<num_bigint::BigInt>,
    /// Root midpoints with multiplicity, ascending.
    pub quotient_roots: Vec<(f64, u32)>,
    /// Copies of `0` and `−1` outside the quotient's eigenspace.
    pub complement_zero: u64,
    pub complement_neg_one: u64,
    /// Full predicted spectrum, ascending.
    pub predicted: Vec<f64>,
}

impl SpectrumPrediction {
    /// Predicted size of the eigenvalue cluster at `x`.
    pub fn cluster(&self, x: f64, radius: f64) -> usize {
        self.predicted.iter().filter(|&&l| (l - x).abs() <= radius).count()
    }

    /// Quotient roots within `radius` of `x`, with multiplicity.
    pub fn quotient_roots_near(&self, x: f64, radius: f64) -> u64 {
        self.quotient_roots
            .iter()
            .filter(|(r, _)| (r - x).abs() <= radius)
            .map(|&(_, m)| m as u64)
            .sum()
    }
}

/// Builds `Γ(Z/p^α)`, its equitable quotient, and the predicted spectrum.
///
/// For `(2, 1)` the graph is `K_2`, the quotient is the whole graph and the
/// closed form's single `−1` is one of the quotient roots, so the complement is empty.
pub fn predict_adjacency_spectrum(p: u64, alpha: u32, root_tol: f64) -> Result<SpectrumPrediction> {
    let closed_form = adjacency_mult_closed_form(p, alpha)?;
    let group = FiniteAbelianGroup::cyclic_p(p, alpha)?;
    let q = build_graph(&group)?.quotient()?;
    let quotient_charpoly = charpoly(&int_matrix(&q.matrix));
    let roots: Vec<RootBracket> = real_roots_with_multiplicity(&quotient_charpoly, root_tol);
    let quotient_roots: Vec<(f64, u32)> = roots.iter().map(|r| (r.midpoint(), r.multiplicity)).collect();
    let (complement_zero, complement_neg_one) = if (p, alpha) == (2, 1) {
        (0, 0)
    } else {
        (closed_form.zero, closed_form.neg_one)
    };
    let mut predicted: Vec<f64> = quotient_roots
        .iter()
        .flat_map(|&(r, m)| std::iter::repeat_n(r, m as usize))
        .chain(std::iter::repeat_n(0.0, complement_zero as usize))
        .chain(std::iter::repeat_n(-1.0, complement_neg_one as usize))
        .collect();
    predicted.sort_by(f64::total_cmp);
    Ok(SpectrumPrediction {
        closed_form,
        quotient_matrix: q.matrix,
        quotient_charpoly,
        quotient_roots,
        complement_zero,
        complement_neg_one,
        predicted,
    })
}
