//! The a-annihilator `[a:G] = { r ∈ Z : rG ⊆ Za }`.
//!
//! [`annihilator_bruteforce`] is the ground truth: it enumerates the cyclic
//! subgroup `Za` and returns the least divisor `d` of `exp(G)` with
//! `d·g_i ∈ Za` for every canonical generator `g_i`. The closed forms for
//! cyclic p-groups, homogeneous p-groups and rank-3 p-groups with strictly
//! increasing exponents are validated against it.

use std::fmt;

use crate::arith;
use crate::error::{Error, Result};
use crate::group::{FiniteAbelianGroup, GroupElement, IdealZ};

pub const DEFAULT_ORACLE_CAP: u64 = 100_000;

/// Reusable brute-force evaluator; keeps a membership buffer of size `|G|`.
pub struct AnnihilatorOracle<'g> {
    group: &'g FiniteAbelianGroup,
    divisors: Vec<u64>,
    in_span: Vec<bool>,
    touched: Vec<usize>,
}

impl<'g> AnnihilatorOracle<'g> {
    pub fn new(group: &'g FiniteAbelianGroup, cap: u64) -> Result<Self> {
        if group.order() > cap {
            return Err(Error::OracleCapExceeded {
                order: group.order(),
                cap,
            });
        }
        Ok(Self {
            group,
            divisors: arith::divisors(group.exponent()),
            in_span: vec![false; group.order() as usize],
            touched: Vec::new(),
        })
    }

    pub fn annihilator(&mut self, a: &GroupElement) -> IdealZ {
        let g = self.group;
        for &i in &self.touched {
            self.in_span[i] = false;
        }
        self.touched.clear();

        let mut cur = g.zero();
        loop {
            let idx = g.index_of(&cur) as usize;
            if self.in_span[idx] {
                break;
            }
            self.in_span[idx] = true;
            self.touched.push(idx);
            cur = g.add(&cur, a);
        }

        let exp = g.exponent();
        let d = self
            .divisors
            .iter()
            .copied()
            .find(|&d| {
                (0..g.rank()).all(|i| {
                    let img = g.scale(d, &g.generator(i));
                    self.in_span[g.index_of(&img) as usize]
                })
            })
            .unwrap_or(exp);
        IdealZ::new_unchecked(d, exp)
    }
}

pub fn annihilator_bruteforce(group: &FiniteAbelianGroup, a: &GroupElement) -> Result<IdealZ> {
    annihilator_bruteforce_capped(group, a, DEFAULT_ORACLE_CAP)
}

pub fn annihilator_bruteforce_capped(
    group: &FiniteAbelianGroup,
    a: &GroupElement,
    cap: u64,
) -> Result<IdealZ> {
    Ok(AnnihilatorOracle::new(group, cap)?.annihilator(a))
}

/// `[a:G] = p^i Z` for `a` of valuation `i` in `Z/p^alpha`.
pub fn annihilator_cyclic(group: &FiniteAbelianGroup, a: &GroupElement) -> Result<IdealZ> {
    let (p, alpha) = group
        .as_cyclic_p()
        .ok_or_else(|| Error::WrongGroupKind(format!("{group} is not a cyclic p-group")))?;
    let i = arith::valuation_mod(a.coords()[0], p, alpha);
    Ok(IdealZ::new_unchecked(arith::pow(p, i), group.exponent()))
}

/// `(Z/p^alpha)^l` with `l >= 2`: every element has annihilator `p^alpha Z`.
pub fn annihilator_homogeneous(group: &FiniteAbelianGroup, _a: &GroupElement) -> Result<IdealZ> {
    if !is_homogeneous(group) {
        return Err(Error::WrongGroupKind(format!(
            "{group} is not a homogeneous p-group of rank >= 2"
        )));
    }
    Ok(IdealZ::new_unchecked(group.exponent(), group.exponent()))
}

fn is_homogeneous(group: &FiniteAbelianGroup) -> bool {
    match group.p_group_view() {
        Some(v) => v.exponents.len() >= 2 && v.exponents.iter().all(|&e| e == v.exponents[0]),
        None => false,
    }
}

/// Branch of the rank-3 closed form that produced a value.
///
/// `A` rows have `a = 0`, `B` rows have `a ≠ 0`; `.1` means `b = 0`, `.2`
/// means `b ≠ 0`; the trailing number is the row within that block. `B2.4b`
/// covers `j = β−α < i`, which no other row reaches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rank3Case(pub &'static str);

impl fmt::Display for Rank3Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

/// Exponent `e` with `[(a,b,c):G] = p^e Z`, plus the case that fired.
///
/// `k, j, i` are the valuations of `a, b, c` in `Z/p^α, Z/p^β, Z/p^γ`
/// (valuation of zero is the full exponent). Guards are tried in order and
/// the first match wins; several of them overlap.
pub fn rank3_exponent(alpha: u32, beta: u32, gamma: u32, k: u32, j: u32, i: u32) -> Option<(Rank3Case, u32)> {
    let (al, be, ga) = (alpha as i64, beta as i64, gamma as i64);
    let (k, j, i) = (k as i64, j as i64, i as i64);
    let hit = |label: &'static str, e: i64| Some((Rank3Case(label), e as u32));

    if k == al {
        if j == be {
            if i == ga {
                return hit("A1.1", ga);
            }
            if (0..=be - 1).contains(&i) {
                return hit("A1.2", be);
            }
            if (be..=ga - 1).contains(&i) {
                return hit("A1.3", i);
            }
        } else {
            if i == ga {
                return hit("A2.1", ga);
            }
            if (0..=j).contains(&i) {
                return hit("A2.2", be);
            }
            if (j + 1..=ga - be + j).contains(&i) {
                return hit("A2.3", i + be - j);
            }
            if (ga - be + j + 1..=ga - 1).contains(&i) {
                return hit("A2.4", ga);
            }
        }
        return None;
    }

    if j == be {
        if i == ga {
            return hit("B1.1", ga);
        }
        if (0..=be - al + k).contains(&i) {
            return hit("B1.2", be);
        }
        if (be - al + k + 1..=ga - al + k - 1).contains(&i) {
            return hit("B1.3", i + al - k);
        }
        if (ga - al + k..=ga - 1).contains(&i) {
            return hit("B1.4", ga);
        }
        return None;
    }

    let upper = ga - be + j;
    if i == ga {
        return hit("B2.1", ga);
    }
    if i <= j && 0 <= i && i <= be - al && i <= upper {
        return hit("B2.2", be);
    }
    if i > j && 0 <= i && i <= be - al && i <= upper {
        return hit("B2.3", be + i - j);
    }
    if upper >= i && i >= j && be - al < i && be - al > j {
        return hit("B2.4", i + be - j);
    }
    if upper >= i && i >= j && be - al < i && be - al == j {
        return hit("B2.4b", i + be - j);
    }
    if upper >= i && i >= j && ga - al + k > i && j > be - al + k {
        return hit("B2.5", al - k + i);
    }
    if upper >= i && i >= j && ga - al + k <= i && j > be - al + k {
        return hit("B2.6", ga);
    }
    if upper >= i && i >= j && be - al < j && j <= be - al + k {
        return hit("B2.7", be + i - j);
    }
    if i < j && upper >= i && i > be - al && j <= be - al + k {
        return hit("B2.8", be);
    }
    if i < j && upper >= i && be - al + k > i && i > be - al && j > be - al + k {
        return hit("B2.9", be);
    }
    if i < j && upper >= i && ga - al + k > i && i >= be - al + k {
        return hit("B2.10", al + i - k);
    }
    if i < j && upper >= i && i >= ga - al + k && j > be - al + k {
        return hit("B2.11", ga);
    }
    if upper <= i && i < ga {
        return hit("B2.12", ga);
    }
    None
}

fn rank3_shape(group: &FiniteAbelianGroup) -> Option<(u64, u32, u32, u32)> {
    let v = group.p_group_view()?;
    match v.exponents[..] {
        [al, be, ga] if al < be && be < ga => Some((v.p, al, be, ga)),
        _ => None,
    }
}

/// Closed form for `Z/p^α × Z/p^β × Z/p^γ` with `α < β < γ` in that factor order.
pub fn annihilator_rank3(group: &FiniteAbelianGroup, a: &GroupElement) -> Result<(IdealZ, Rank3Case)> {
    let (p, al, be, ga) = rank3_shape(group).ok_or_else(|| {
        Error::WrongGroupKind(format!(
            "{group} is not Z/p^α × Z/p^β × Z/p^γ with α < β < γ"
        ))
    })?;
    let c = a.coords();
    let k = arith::valuation_mod(c[0], p, al);
    let j = arith::valuation_mod(c[1], p, be);
    let i = arith::valuation_mod(c[2], p, ga);
    let (case, e) = rank3_exponent(al, be, ga, k, j, i).ok_or_else(|| {
        Error::NotApplicable(format!("no rank-3 case covers valuations (k,j,i) = ({k},{j},{i})"))
    })?;
    if e > ga {
        return Err(Error::NotApplicable(format!(
            "rank-3 case {case} produced p^{e}, beyond the group exponent p^{ga}"
        )));
    }
    Ok((IdealZ::new_unchecked(arith::pow(p, e), group.exponent()), case))
}

/// Closed form and oracle disagree on a rank-3 element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rank3Mismatch {
    pub element: GroupElement,
    pub case: Option<Rank3Case>,
    pub closed_form: Option<u64>,
    pub oracle: u64,
}

impl fmt::Display for Rank3Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let case = self.case.map_or("none".to_string(), |c| c.to_string());
        let cf = self.closed_form.map_or("none".to_string(), |d| format!("{d}Z"));
        write!(
            f,
            "element {} case {} closed form {} oracle {}Z",
            self.element, case, cf, self.oracle
        )
    }
}

/// Per-case hit counts and the disagreements found by [`audit_rank3`].
pub type Rank3Audit = (Vec<(Rank3Case, usize)>, Vec<Rank3Mismatch>);

/// Runs the rank-3 closed form against the oracle for every element of the
/// group, returning the per-case hit counts and any disagreements.
pub fn audit_rank3(
    group: &FiniteAbelianGroup,
    cap: u64,
) -> Result<Rank3Audit> {
    if rank3_shape(group).is_none() {
        return Err(Error::WrongGroupKind(format!(
            "{group} is not Z/p^α × Z/p^β × Z/p^γ with α < β < γ"
        )));
    }
    let mut oracle = AnnihilatorOracle::new(group, cap)?;
    let mut counts: Vec<(Rank3Case, usize)> = Vec::new();
    let mut mismatches = Vec::new();
    for a in group.elements() {
        let truth = oracle.annihilator(&a).generator();
        match annihilator_rank3(group, &a) {
            Ok((ideal, case)) => {
                match counts.iter_mut().find(|(c, _)| *c == case) {
                    Some((_, n)) => *n += 1,
                    None => counts.push((case, 1)),
                }
                if ideal.generator() != truth {
                    log::warn!("rank-3 mismatch at {a}: case {case} gives {ideal}, oracle {truth}Z");
                    mismatches.push(Rank3Mismatch {
                        element: a,
                        case: Some(case),
                        closed_form: Some(ideal.generator()),
                        oracle: truth,
                    });
                }
            }
            Err(_) => {
                log::warn!("rank-3 closed form has no case for {a}; oracle {truth}Z");
                mismatches.push(Rank3Mismatch {
                    element: a,
                    case: None,
                    closed_form: None,
                    oracle: truth,
                });
            }
        }
    }
    counts.sort_by_key(|(c, _)| c.0);
    Ok((counts, mismatches))
}

/// How an annihilator was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Cyclic,
    Homogeneous,
    Rank3(Rank3Case),
    BruteForce,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Cyclic => f.write_str("cyclic"),
            Method::Homogeneous => f.write_str("homogeneous"),
            Method::Rank3(c) => write!(f, "rank3:{c}"),
            Method::BruteForce => f.write_str("bruteforce"),
        }
    }
}

/// Closed form when one applies, brute force otherwise.
pub fn annihilator(group: &FiniteAbelianGroup, a: &GroupElement) -> Result<IdealZ> {
    annihilator_with_method(group, a, DEFAULT_ORACLE_CAP).map(|(ideal, _)| ideal)
}

pub fn annihilator_with_method(
    group: &FiniteAbelianGroup,
    a: &GroupElement,
    cap: u64,
) -> Result<(IdealZ, Method)> {
    if group.as_cyclic_p().is_some() {
        return Ok((annihilator_cyclic(group, a)?, Method::Cyclic));
    }
    if is_homogeneous(group) {
        return Ok((annihilator_homogeneous(group, a)?, Method::Homogeneous));
    }
    if rank3_shape(group).is_some() {
        if let Ok((ideal, case)) = annihilator_rank3(group, a) {
            return Ok((ideal, Method::Rank3(case)));
        }
    }
    Ok((annihilator_bruteforce_capped(group, a, cap)?, Method::BruteForce))
}

/// Annihilator generators of every element, indexed by element index.
pub fn all_annihilators(group: &FiniteAbelianGroup, cap: u64) -> Result<Vec<u64>> {
    let closed = group.as_cyclic_p().is_some() || is_homogeneous(group) || rank3_shape(group).is_some();
    if closed {
        return group
            .elements()
            .map(|a| annihilator_with_method(group, &a, cap).map(|(i, _)| i.generator()))
            .collect();
    }
    let mut oracle = AnnihilatorOracle::new(group, cap)?;
    Ok(group.elements().map(|a| oracle.annihilator(&a).generator()).collect())
}
