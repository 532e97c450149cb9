//! Cyclic Jacobi eigenvalue iteration for dense symmetric matrices.

use num_traits::Float;

use super::{Spectrum, SymMatrix};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JacobiConfig<T> {
    /// Stop once the off-diagonal Frobenius norm is at most this.
    pub tol: T,
    pub max_sweeps: usize,
    pub max_dim: usize,
    /// Symmetry check on input.
    pub symmetry_tol: T,
}

impl Default for JacobiConfig<f64> {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_sweeps: 100,
            max_dim: 3000,
            symmetry_tol: 1e-12,
        }
    }
}

impl Default for JacobiConfig<f32> {
    fn default() -> Self {
        Self {
            tol: 1e-4,
            max_sweeps: 100,
            max_dim: 3000,
            symmetry_tol: 1e-6,
        }
    }
}

/// Eigenvalues of a symmetric matrix, ascending.
///
/// Threshold sweeps for the first three passes, then every nonzero entry is
/// rotated; entries negligible against both diagonal neighbours are zeroed
/// outright after pass four.
pub fn symmetric_eigenvalues<T: Float>(a: &SymMatrix<T>, cfg: &JacobiConfig<T>) -> Result<Spectrum<T>> {
    let n = a.dim();
    if n > cfg.max_dim {
        return Err(Error::MatrixTooLarge { dim: n, cap: cfg.max_dim });
    }
    if let Some((row, col)) = a.asymmetry(cfg.symmetry_tol) {
        return Err(Error::NotSymmetric { row, col });
    }

    let mut m = a.as_slice().to_vec();
    let idx = |r: usize, c: usize| r * n + c;
    let mut d: Vec<T> = (0..n).map(|i| m[idx(i, i)]).collect();
    let mut b = d.clone();
    let mut z = vec![T::zero(); n];
    let two = T::one() + T::one();
    let half = T::one() / two;
    let hundred = T::from(100.0).unwrap();

    let off_norm = |m: &[T]| -> T {
        let mut s = T::zero();
        for p in 0..n {
            for q in p + 1..n {
                s = s + m[idx(p, q)] * m[idx(p, q)];
            }
        }
        (two * s).sqrt()
    };

    for sweep in 1..=cfg.max_sweeps {
        let off = off_norm(&m);
        if off <= cfg.tol {
            return Ok(Spectrum::new(d, off));
        }
        let mut sm = T::zero();
        for p in 0..n {
            for q in p + 1..n {
                sm = sm + m[idx(p, q)].abs();
            }
        }
        let thresh = if sweep < 4 {
            T::from(0.2).unwrap() * sm / T::from(n * n).unwrap()
        } else {
            T::zero()
        };

        for p in 0..n.saturating_sub(1) {
            for q in p + 1..n {
                let apq = m[idx(p, q)];
                if apq == T::zero() {
                    continue;
                }
                let g = hundred * apq.abs();
                if sweep > 4 && d[p].abs() + g == d[p].abs() && d[q].abs() + g == d[q].abs() {
                    m[idx(p, q)] = T::zero();
                    continue;
                }
                if apq.abs() <= thresh {
                    continue;
                }
                let h = d[q] - d[p];
                let t = if h.abs() + g == h.abs() {
                    apq / h
                } else {
                    let theta = half * h / apq;
                    let t = T::one() / (theta.abs() + (T::one() + theta * theta).sqrt());
                    if theta < T::zero() {
                        -t
                    } else {
                        t
                    }
                };
                let c = T::one() / (T::one() + t * t).sqrt();
                let s = t * c;
                let tau = s / (T::one() + c);
                let h = t * apq;
                z[p] = z[p] - h;
                z[q] = z[q] + h;
                d[p] = d[p] - h;
                d[q] = d[q] + h;
                m[idx(p, q)] = T::zero();

                // only the upper triangle is referenced
                let mut rotate = |i: usize, j: usize, k: usize, l: usize| {
                    let g = m[idx(i, j)];
                    let h = m[idx(k, l)];
                    m[idx(i, j)] = g - s * (h + g * tau);
                    m[idx(k, l)] = h + s * (g - h * tau);
                };
                for j in 0..p {
                    rotate(j, p, j, q);
                }
                for j in p + 1..q {
                    rotate(p, j, j, q);
                }
                for j in q + 1..n {
                    rotate(p, j, q, j);
                }
            }
        }
        for i in 0..n {
            b[i] = b[i] + z[i];
            d[i] = b[i];
            z[i] = T::zero();
        }
    }

    let off = off_norm(&m);
    if off <= cfg.tol {
        Ok(Spectrum::new(d, off))
    } else {
        Err(Error::NoConvergence {
            sweeps: cfg.max_sweeps,
            off_norm: off.to_f64().unwrap_or(f64::NAN),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SimpleGraph;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn eig(m: &SymMatrix<f64>) -> Vec<f64> {
        symmetric_eigenvalues(m, &JacobiConfig::default()).unwrap().eigenvalues().to_vec()
    }

    fn close(a: &[f64], b: &[f64], tol: f64) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn complete_star_and_zero() {
        let k4 = SimpleGraph::complete(4).adjacency_matrix::<f64>();
        assert!(close(&eig(&k4), &[-1.0, -1.0, -1.0, 3.0], 1e-12));
        for p in [3usize, 5, 7, 11] {
            let s = eig(&SimpleGraph::star(p).adjacency_matrix());
            let r = ((p - 1) as f64).sqrt();
            let mut expect = vec![0.0; p];
            expect[0] = -r;
            expect[p - 1] = r;
            assert!(close(&s, &expect, 1e-12), "{s:?}");
        }
        assert_eq!(eig(&SymMatrix::zeros(5)), vec![0.0; 5]);
        assert!(eig(&SymMatrix::zeros(0)).is_empty());
    }

    #[test]
    fn diagonal_two_by_two() {
        let m = SymMatrix::from_rows(&[vec![2.0, 1.0], vec![1.0, 2.0]]);
        assert!(close(&eig(&m), &[1.0, 3.0], 1e-14));
    }

    #[test]
    fn path_spectrum() {
        // eigenvalues of P_n are 2 cos(kπ/(n+1))
        let n = 40;
        let mut expect: Vec<f64> = (1..=n)
            .map(|k| 2.0 * (k as f64 * std::f64::consts::PI / (n as f64 + 1.0)).cos())
            .collect();
        expect.sort_by(f64::total_cmp);
        assert!(close(&eig(&SimpleGraph::path(n).adjacency_matrix()), &expect, 1e-10));
    }

    #[test]
    fn random_symmetric_invariants() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in [1usize, 2, 3, 10, 37, 80] {
            let mut m = SymMatrix::<f64>::zeros(n);
            for r in 0..n {
                for c in r..n {
                    let v = rng.gen_range(-5.0..5.0);
                    m.set(r, c, v);
                    m.set(c, r, v);
                }
            }
            let s = symmetric_eigenvalues(&m, &JacobiConfig::default()).unwrap();
            let tol = 1e-9 * (1.0 + m.frobenius_sq());
            assert!((s.sum() - m.trace()).abs() < tol);
            assert!((s.sum_of_squares() - m.frobenius_sq()).abs() < tol);
            assert!(s.eigenvalues().windows(2).all(|w| w[0] <= w[1]));
        }
    }

    #[test]
    fn single_precision() {
        let k5 = SimpleGraph::complete(5).adjacency_matrix::<f32>();
        let s = symmetric_eigenvalues(&k5, &JacobiConfig::default()).unwrap();
        assert!((s.eigenvalues()[4] - 4.0).abs() < 1e-4);
    }

    #[test]
    fn rejects_bad_input() {
        let m = SymMatrix::from_rows(&[vec![0.0, 1.0], vec![2.0, 0.0]]);
        assert!(matches!(
            symmetric_eigenvalues(&m, &JacobiConfig::default()),
            Err(Error::NotSymmetric { row: 0, col: 1 })
        ));
        let cfg = JacobiConfig { max_dim: 3, ..JacobiConfig::default() };
        assert!(matches!(
            symmetric_eigenvalues(&SymMatrix::<f64>::zeros(4), &cfg),
            Err(Error::MatrixTooLarge { dim: 4, cap: 3 })
        ));
        let cfg = JacobiConfig { max_sweeps: 1, tol: 0.0, ..JacobiConfig::default() };
        let m = SimpleGraph::path(30).adjacency_matrix::<f64>();
        assert!(matches!(symmetric_eigenvalues(&m, &cfg), Err(Error::NoConvergence { sweeps: 1, .. })));
    }
}
