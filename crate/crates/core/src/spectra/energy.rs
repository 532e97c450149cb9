use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

use super::poly::Poly;
use super::{adjacency_spectrum, JacobiConfig};
use crate::arith;
use crate::error::{Error, Result};
use crate::graph::{build_graph_capped, SimpleGraph};
use crate::group::FiniteAbelianGroup;
use crate::threshold::CreationSequence;

/// Band around each energy threshold inside which no strict inequality is claimed.
pub const ENERGY_GUARD: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnergyClass {
    pub energy: f64,
    pub n: usize,
    /// `E > 2(n−1) + guard`.
    pub hyperenergetic: bool,
    /// `E < n − guard`.
    pub hypoenergetic: bool,
    /// `|E − 2(n−1)| ≤ guard` or `|E − n| ≤ guard`.
    pub borderline: bool,
}

pub fn classify_energy(energy: f64, n: usize) -> EnergyClass {
    let hyper_line = 2.0 * (n as f64 - 1.0);
    let hypo_line = n as f64;
    EnergyClass {
        energy,
        n,
        hyperenergetic: energy > hyper_line + ENERGY_GUARD,
        hypoenergetic: energy < hypo_line - ENERGY_GUARD,
        borderline: (energy - hyper_line).abs() <= ENERGY_GUARD || (energy - hypo_line).abs() <= ENERGY_GUARD,
    }
}

/// Outcome of testing "hypoenergetic and not hyperenergetic" on one graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Supports,
    Refutes,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Supports => "SUPPORTS",
            Verdict::Refutes => "REFUTES",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

impl EnergyClass {
    pub fn verdict(&self) -> Verdict {
        if self.hyperenergetic {
            Verdict::Refutes
        } else if self.borderline {
            Verdict::Inconclusive
        } else if self.hypoenergetic {
            Verdict::Supports
        } else {
            Verdict::Refutes
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanRow {
    pub p: u64,
    pub alpha: u32,
    pub n: usize,
    pub energy: f64,
    pub hyper_line: f64,
    pub verdict: Verdict,
    /// Full spectrum, kept only for refuting rows.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<Vec<f64>>,
}

/// One row per `(p, α)` case, in input order.
pub fn conjecture_scan(
    cases: &[(u64, u32)],
    max_vertices: u64,
    cfg: &JacobiConfig<f64>,
) -> Result<Vec<ScanRow>> {
    cases
        .iter()
        .map(|&(p, alpha)| {
            let group = FiniteAbelianGroup::cyclic_p(p, alpha)?;
            let g = build_graph_capped(&group, max_vertices)?;
            let s = adjacency_spectrum(g.graph(), cfg)?;
            let class = classify_energy(s.energy(), g.vertex_count());
            let verdict = class.verdict();
            Ok(ScanRow {
                p,
                alpha,
                n: class.n,
                energy: class.energy,
                hyper_line: 2.0 * (class.n as f64 - 1.0),
                verdict,
                spectrum: (verdict == Verdict::Refutes).then(|| s.eigenvalues().to_vec()),
            })
        })
        .collect()
}

/// `x³ − (p−2)x² − (p²−1)x + p(p−1)(p−2)`.
pub fn thm6_f(p: u64) -> Poly<BigInt> {
    let p = BigInt::from(p);
    let one = BigInt::from(1);
    let two = BigInt::from(2);
    Poly::from_descending(vec![
        one.clone(),
        -(&p - &two),
        -(&p * &p - &one),
        &p * (&p - &one) * (&p - &two),
    ])
}

/// `x³ − (4m−1)x² − 4m(2m+1)x + 16m³`.
pub fn thm6_g(m: u64) -> Poly<BigInt> {
    let m = BigInt::from(m);
    let one = BigInt::from(1);
    let four = BigInt::from(4);
    Poly::from_descending(vec![
        one.clone(),
        -(&four * &m - &one),
        -(&four * &m * (BigInt::from(2) * &m + &one)),
        BigInt::from(16) * &m * &m * &m,
    ])
}

/// One sign evaluation from the root-bracketing argument.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignCheck {
    pub poly: &'static str,
    pub at: String,
    pub value: String,
    pub expected_positive: bool,
    pub holds: bool,
}

fn check(poly: &'static str, f: &Poly<BigInt>, x: BigRational, expected_positive: bool) -> SignCheck {
    let v = f.to_rational().eval(&x);
    SignCheck {
        poly,
        at: x.to_string(),
        value: v.to_string(),
        expected_positive,
        holds: if expected_positive { v.is_positive() } else { v.is_negative() },
    }
}

/// `f(−p) < 0 < f(0)`, `f(p) < 0 < f(2p)`, and the four `g` evaluations.
pub fn thm6_sign_checks(p: u64) -> Vec<SignCheck> {
    let m = (p * p - 1) / 8;
    let f = thm6_f(p);
    let g = thm6_g(m);
    let r = |num: i64, den: i64| BigRational::new(num.into(), den.into());
    let (pi, mi) = (p as i64, m as i64);
    vec![
        check("f", &f, r(-pi, 1), false),
        check("f", &f, r(0, 1), true),
        check("f", &f, r(pi, 1), false),
        check("f", &f, r(2 * pi, 1), true),
        check("g", &g, r(-5 * mi, 2), false),
        check("g", &g, r(0, 1), true),
        check("g", &g, r(3 * mi, 2), false),
        check("g", &g, r(13 * mi, 2), true),
    ]
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Thm6Report {
    pub p: u64,
    pub m: u64,
    pub creation_word: String,
    pub e_gamma: f64,
    pub e_threshold: f64,
    pub e_complete: f64,
    pub e_complete_exact: f64,
    pub bound_7p_minus_2: f64,
    /// `E(Γ) < E(G) < E(K_{p²})`, each with the guard band.
    pub chain_holds: bool,
    pub bound_holds: bool,
    pub sign_checks: Vec<SignCheck>,
    pub inequalities_hold: bool,
}

/// Comparison graph `0 1^{2m} 0^{4m} 1^{2m}` on `p²` vertices.
pub fn thm6_comparison_graph(p: u64) -> SimpleGraph {
    let m = (p * p - 1) / 8;
    CreationSequence::from_runs(&[(false, 1), (true, 2 * m), (false, 4 * m), (true, 2 * m)]).to_graph()
}

pub fn verify_thm6(p: u64, cfg: &JacobiConfig<f64>) -> Result<Thm6Report> {
    if !arith::is_prime(p) {
        return Err(Error::NonPrimeBase(p));
    }
    if p < 7 {
        return Err(Error::NotApplicable(format!("requires an odd prime p ≥ 7, got {p}")));
    }
    let n = p * p;
    let m = (n - 1) / 8;
    let gamma = build_graph_capped(&FiniteAbelianGroup::cyclic_p(p, 2)?, n)?;
    let comparison = thm6_comparison_graph(p);
    let e_gamma = adjacency_spectrum(gamma.graph(), cfg)?.energy();
    let e_threshold = adjacency_spectrum(&comparison, cfg)?.energy();
    let e_complete = adjacency_spectrum(&SimpleGraph::complete(n as usize), cfg)?.energy();
    let e_complete_exact = 2.0 * (n as f64 - 1.0);
    let bound = 7.0 * p as f64 - 2.0;
    let chain_holds = e_gamma + ENERGY_GUARD < e_threshold && e_threshold + ENERGY_GUARD < e_complete;
    let bound_holds = e_gamma <= bound + ENERGY_GUARD;
    let sign_checks = thm6_sign_checks(p);
    let inequalities_hold = chain_holds && bound_holds && sign_checks.iter().all(|c| c.holds);
    Ok(Thm6Report {
        p,
        m,
        creation_word: format!("0 1^{} 0^{} 1^{}", 2 * m, 4 * m, 2 * m),
        e_gamma,
        e_threshold,
        e_complete,
        e_complete_exact,
        bound_7p_minus_2: bound,
        chain_holds,
        bound_holds,
        sign_checks,
        inequalities_hold,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::poly::{charpoly, int_matrix, real_roots, rational};

    #[test]
    fn classification_examples() {
        let k5 = classify_energy(8.0, 5);
        assert!(!k5.hyperenergetic && !k5.hypoenergetic && k5.borderline);
        let star = classify_energy(2.0 * 8f64.sqrt(), 9);
        assert!(star.hypoenergetic && !star.hyperenergetic);
        assert_eq!(star.verdict(), Verdict::Supports);
        assert_eq!(classify_energy(2.0, 2).verdict(), Verdict::Inconclusive);
        assert_eq!(classify_energy(20.0, 6).verdict(), Verdict::Refutes);
        assert_eq!(classify_energy(7.0, 6).verdict(), Verdict::Refutes);
    }

    #[test]
    fn z49_is_hypoenergetic() {
        let rows = conjecture_scan(&[(7, 2)], 10_000, &JacobiConfig::default()).unwrap();
        assert_eq!(rows[0].verdict, Verdict::Supports);
        assert!(rows[0].energy <= 47.0);
        assert!(rows[0].spectrum.is_none());
    }

    #[test]
    fn small_scan() {
        let cases: Vec<(u64, u32)> = (1..=6).map(|a| (2, a)).collect();
        let rows = conjecture_scan(&cases, 10_000, &JacobiConfig::default()).unwrap();
        assert_eq!(rows[0].verdict, Verdict::Inconclusive);
        assert!(rows[1..].iter().all(|r| r.verdict == Verdict::Supports));
    }

    #[test]
    fn sign_checks_hold() {
        for p in [7u64, 11, 13, 17, 19] {
            let checks = thm6_sign_checks(p);
            assert!(checks.iter().all(|c| c.holds), "{p}: {checks:?}");
        }
        // f(0) = 210 and f(7) = −28 for p = 7
        assert_eq!(thm6_f(7).eval(&0.into()), 210.into());
        assert_eq!(thm6_f(7).eval(&7.into()), (-28).into());
        assert_eq!(thm6_g(6).eval(&0.into()), (16 * 216).into());
    }

    #[test]
    fn f_and_g_roots() {
        let f = thm6_f(7);
        let roots = real_roots(&f, &rational(-7.0), &rational(14.0), 1e-9).unwrap();
        assert_eq!(roots.len(), 3);
        let r = real_roots(&f, &rational(0.0), &rational(7.0), 1e-9).unwrap();
        assert_eq!(r.len(), 1);
        let g = thm6_g(6);
        let r: Vec<f64> = real_roots(&g, &rational(-100.0), &rational(100.0), 1e-9)
            .unwrap()
            .iter()
            .map(|b| b.midpoint())
            .collect();
        assert!((r[1] - 8.0).abs() < 1e-9);
    }

    #[test]
    fn comparison_graph_charpoly() {
        // x^{4m−1} (x+1)^{4m−1} g(x) for p = 7, m = 6
        let g = thm6_comparison_graph(7);
        let cp = charpoly(&int_matrix(&g.adjacency_rows()));
        let expect = &(&Poly::x().pow(23) * &Poly::from_i64(&[1, 1]).pow(23)) * &thm6_g(6);
        assert_eq!(cp, expect);
    }

    #[test]
    fn thm6_for_seven() {
        let r = verify_thm6(7, &JacobiConfig::default()).unwrap();
        assert!(r.inequalities_hold, "{r:?}");
        assert!((r.e_complete - 96.0).abs() < 1e-9);
        assert!(r.e_gamma <= 47.0);
        assert!(matches!(verify_thm6(5, &JacobiConfig::default()), Err(Error::NotApplicable(_))));
        assert!(matches!(verify_thm6(9, &JacobiConfig::default()), Err(Error::NonPrimeBase(9))));
    }
}
