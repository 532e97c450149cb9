//! Dense univariate polynomials over exact rings, characteristic polynomials
//! and Sturm-sequence real-root isolation.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};

/// Coefficients low degree first; no trailing zeros, so the zero polynomial is empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Clone + Num> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Highest degree first, the way polynomials are usually written.
    pub fn from_descending(mut coeffs: Vec<T>) -> Self {
        coeffs.reverse();
        Self::new(coeffs)
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `x`.
    pub fn x() -> Self {
        Self::new(vec![T::zero(), T::one()])
    }

    /// `x − r`.
    pub fn linear_root(r: T) -> Self {
        Self::new(vec![T::zero() - r, T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn map<U: Clone + Num>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Clone + Num + FromPrimitive> Poly<T> {
    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_usize(i).expect("degree fits the ring"))
                .collect(),
        )
    }
}

/// Field operations.
impl<T: Clone + Num> Poly<T> {
    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&nd| nd >= dd) else {
            return (Self::zero(), self.clone());
        };
        let mut quot = vec![T::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let q = rem[k + dd].clone() / lead.clone();
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] = rem[k + i].clone() - q.clone() * dc.clone();
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => {
                let l = l.clone();
                self.map(|c| c.clone() / l.clone())
            }
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl<T: Clone + Num> Add for &Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: Self) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &Poly<T>, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(T::zero);
        Poly::new((0..n).map(|i| get(self, i) + get(rhs, i)).collect())
    }
}

impl<T: Clone + Num> Sub for &Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: Self) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &Poly<T>, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(T::zero);
        Poly::new((0..n).map(|i| get(self, i) - get(rhs, i)).collect())
    }
}

impl<T: Clone + Num> Neg for &Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        self.map(|c| T::zero() - c.clone())
    }
}

impl<T: Clone + Num> Mul for &Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: Self) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Clone + Num + fmt::Display + PartialOrd> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < T::zero();
            let mag = if neg { T::zero() - c.clone() } else { c.clone() };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            first = false;
            let unit = mag.is_one();
            match i {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("x")?,
                1 => write!(f, "{mag}x")?,
                _ if unit => write!(f, "x^{i}")?,
                _ => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Coefficients as decimal strings, low degree first, so consumers never
/// truncate large integers.
impl<T: Clone + Num + fmt::Display> Serialize for Poly<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

impl Poly<BigInt> {
    pub fn from_i64(coeffs_low_first: &[i64]) -> Self {
        Self::new(coeffs_low_first.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn to_rational(&self) -> Poly<BigRational> {
        self.map(|c| BigRational::from_integer(c.clone()))
    }
}

/// `det(xI − A)` by Faddeev–LeVerrier.
///
/// Uses exact division by `k`, so `T` must be a ring in which those quotients
/// are exact (integers for integer matrices, or any field).
pub fn charpoly<T: Clone + Num + FromPrimitive>(a: &[Vec<T>]) -> Poly<T> {
    let n = a.len();
    let mut coeffs = vec![T::zero(); n + 1];
    coeffs[n] = T::one();
    // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = −tr(A M_k)/k
    let mut mk: Vec<Vec<T>> = vec![vec![T::zero(); n]; n];
    for k in 1..=n {
        let mut next = matmul(a, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] = row[i].clone() + coeffs[n - k + 1].clone();
        }
        mk = next;
        let am = matmul(a, &mk);
        let tr = (0..n).fold(T::zero(), |acc, i| acc + am[i][i].clone());
        coeffs[n - k] = T::zero() - tr / T::from_usize(k).expect("dimension fits the ring");
    }
    Poly::new(coeffs)
}

fn matmul<T: Clone + Num>(a: &[Vec<T>], b: &[Vec<T>]) -> Vec<Vec<T>> {
    let n = a.len();
    let mut out = vec![vec![T::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = &a[i][k];
            if aik.is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] = out[i][j].clone() + aik.clone() * b[k][j].clone();
                }
            }
        }
    }
    out
}

pub fn int_matrix(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

/// Yun's algorithm: `f = c · Π a_i^i` with each `a_i` monic, squarefree and
/// pairwise coprime. Returns the non-constant `(a_i, i)`.
pub fn squarefree_decomposition(f: &Poly<BigRational>) -> Vec<(Poly<BigRational>, u32)> {
    let mut out = Vec::new();
    if f.degree().unwrap_or(0) == 0 {
        return out;
    }
    let fp = f.derivative();
    let a0 = f.gcd(&fp);
    let mut b = f.div_rem(&a0).0;
    let mut c = fp.div_rem(&a0).0;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        b = b.div_rem(&a).0;
        c = d.div_rem(&a).0;
        d = &c - &b.derivative();
        if a.degree().unwrap_or(0) > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

pub fn is_squarefree(f: &Poly<BigRational>) -> bool {
    f.gcd(&f.derivative()).degree().unwrap_or(0) == 0
}

/// Canonical Sturm chain `f, f', −rem(f_{k−1}, f_k), …`.
pub fn sturm_chain(f: &Poly<BigRational>) -> Vec<Poly<BigRational>> {
    let mut chain = vec![f.clone(), f.derivative()];
    while !chain.last().expect("chain is non-empty").is_zero() {
        let k = chain.len();
        let r = chain[k - 2].div_rem(&chain[k - 1]).1;
        chain.push(-&r);
    }
    chain.pop();
    chain
}

fn sign_changes(chain: &[Poly<BigRational>], x: &BigRational) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for p in chain {
        let v = p.eval(x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                changes += 1;
            }
            last = s;
        }
    }
    changes
}

/// Number of distinct real roots in `(lo, hi]`.
pub fn count_roots(chain: &[Poly<BigRational>], lo: &BigRational, hi: &BigRational) -> usize {
    sign_changes(chain, lo).saturating_sub(sign_changes(chain, hi))
}

/// A real root bracketed by `lo ≤ r ≤ hi` with exact rational ends.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootBracket {
    pub lo: BigRational,
    pub hi: BigRational,
    pub multiplicity: u32,
}

impl RootBracket {
    pub fn midpoint(&self) -> f64 {
        ((&self.lo + &self.hi) / BigRational::from_integer(2.into()))
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    pub fn width(&self) -> f64 {
        (&self.hi - &self.lo).to_f64().unwrap_or(f64::NAN)
    }
}

pub fn rational(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite float")
}

/// Real roots of a squarefree polynomial in `(lo, hi]`, each bracketed to width ≤ `tol`.
pub fn real_roots(f: &Poly<BigInt>, lo: &BigRational, hi: &BigRational, tol: f64) -> Result<Vec<RootBracket>> {
    let fr = f.to_rational();
    if !is_squarefree(&fr) {
        return Err(Error::NotSquarefree);
    }
    Ok(isolate(&fr, lo, hi, tol, 1))
}

/// All real roots of any nonzero polynomial, with multiplicities, ascending.
pub fn real_roots_with_multiplicity(f: &Poly<BigInt>, tol: f64) -> Vec<RootBracket> {
    let fr = f.to_rational();
    let bound = cauchy_bound(&fr);
    let lo = -&bound;
    let mut out: Vec<RootBracket> = squarefree_decomposition(&fr)
        .iter()
        .flat_map(|(factor, m)| isolate(factor, &lo, &bound, tol, *m))
        .collect();
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

/// `1 + max |a_i / a_n|`, strictly above every root's modulus.
pub fn cauchy_bound(f: &Poly<BigRational>) -> BigRational {
    let Some(lead) = f.leading() else {
        return BigRational::one();
    };
    let max = f.coeffs()[..f.coeffs().len() - 1]
        .iter()
        .map(|c| (c / lead).abs())
        .max()
        .unwrap_or_else(BigRational::zero);
    max + BigRational::one()
}

fn isolate(f: &Poly<BigRational>, lo: &BigRational, hi: &BigRational, tol: f64, multiplicity: u32) -> Vec<RootBracket> {
    let chain = sturm_chain(f);
    let tol = rational(tol);
    let two = BigRational::from_integer(2.into());
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone())];
    while let Some((a, b)) = stack.pop() {
        match count_roots(&chain, &a, &b) {
            0 => {}
            1 => out.push(refine(f, a, b, &tol, multiplicity)),
            _ => {
                let mid = (&a + &b) / &two;
                stack.push((mid.clone(), b));
                stack.push((a, mid));
            }
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

/// Bisects `(a, b]` holding exactly one root of squarefree `f`.
fn refine(f: &Poly<BigRational>, mut a: BigRational, mut b: BigRational, tol: &BigRational, multiplicity: u32) -> RootBracket {
    let two = BigRational::from_integer(2.into());
    let fb = f.eval(&b);
    if fb.is_zero() {
        return RootBracket { lo: b.clone(), hi: b, multiplicity };
    }
    // root lies strictly inside (a, b): sign flips between the ends unless f(a) = 0, which
    // the half-open count excludes
    let sb = fb.is_positive();
    while &(&b - &a) > tol {
        let mid = (&a + &b) / &two;
        let fm = f.eval(&mid);
        if fm.is_zero() {
            return RootBracket { lo: mid.clone(), hi: mid, multiplicity };
        }
        if fm.is_positive() == sb {
            b = mid;
        } else {
            a = mid;
        }
    }
    RootBracket { lo: a, hi: b, multiplicity }
}
