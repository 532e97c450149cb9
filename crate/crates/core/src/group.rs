//! Finite abelian groups given as direct sums of cyclic factors, their
//! elements, ideals of `Z`, and the valuation orbits of cyclic p-groups.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};

/// `Z/n_1 ⊕ … ⊕ Z/n_r`, factors kept in the order supplied.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiniteAbelianGroup {
    moduli: Vec<u64>,
    order: u64,
    exponent: u64,
    p_group: Option<PGroupView>,
}

/// Present when every modulus is a power of the same prime.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PGroupView {
    pub p: u64,
    /// `log_p` of each modulus, in factor order.
    pub exponents: Vec<u32>,
}

impl PGroupView {
    /// The type of the group as a non-increasing partition.
    pub fn lambda(&self) -> Vec<u32> {
        let mut l = self.exponents.clone();
        l.sort_unstable_by(|a, b| b.cmp(a));
        l
    }
}

impl FiniteAbelianGroup {
    pub fn new(moduli: &[u64]) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::InvalidGroup("at least one cyclic factor is required".into()));
        }
        if let Some(&bad) = moduli.iter().find(|&&n| n < 2) {
            return Err(Error::InvalidGroup(format!("modulus {bad} < 2")));
        }
        let order = moduli
            .iter()
            .try_fold(1u64, |acc, &n| acc.checked_mul(n))
            .ok_or_else(|| Error::InvalidGroup("group order overflows u64".into()))?;
        let exponent = arith::lcm_all(moduli);

        let mut p_group = None;
        let powers: Option<Vec<(u64, u32)>> = moduli.iter().map(|&n| arith::prime_power(n)).collect();
        if let Some(powers) = powers {
            let p = powers[0].0;
            if powers.iter().all(|&(q, _)| q == p) {
                p_group = Some(PGroupView {
                    p,
                    exponents: powers.iter().map(|&(_, k)| k).collect(),
                });
            }
        }

        Ok(Self {
            moduli: moduli.to_vec(),
            order,
            exponent,
            p_group,
        })
    }

    /// `Z/p^alpha`.
    pub fn cyclic_p(p: u64, alpha: u32) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::NonPrimeBase(p));
        }
        if alpha == 0 {
            return Err(Error::InvalidGroup("exponent must be at least 1".into()));
        }
        Self::new(&[arith::pow(p, alpha)])
    }

    /// `Z/p^{e_1} ⊕ … ⊕ Z/p^{e_r}` in the given factor order.
    pub fn p_group(p: u64, exponents: &[u32]) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::NonPrimeBase(p));
        }
        if exponents.contains(&0) {
            return Err(Error::InvalidGroup("exponents must be at least 1".into()));
        }
        let moduli: Vec<u64> = exponents.iter().map(|&e| arith::pow(p, e)).collect();
        Self::new(&moduli)
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn p_group_view(&self) -> Option<&PGroupView> {
        self.p_group.as_ref()
    }

    /// `(p, alpha)` when the group is `Z/p^alpha`.
    pub fn as_cyclic_p(&self) -> Option<(u64, u32)> {
        match &self.p_group {
            Some(v) if v.exponents.len() == 1 => Some((v.p, v.exponents[0])),
            _ => None,
        }
    }

    pub fn element(&self, coords: &[u64]) -> Result<GroupElement> {
        if coords.len() != self.moduli.len() {
            return Err(Error::InvalidGroup(format!(
                "element has {} coordinates, group has rank {}",
                coords.len(),
                self.moduli.len()
            )));
        }
        Ok(GroupElement {
            coords: coords.iter().zip(&self.moduli).map(|(&c, &n)| c % n).collect(),
        })
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            coords: vec![0; self.moduli.len()],
        }
    }

    /// Mixed-radix decode, little-endian in factor order.
    pub fn element_at(&self, mut index: u64) -> GroupElement {
        debug_assert!(index < self.order);
        let coords = self
            .moduli
            .iter()
            .map(|&n| {
                let c = index % n;
                index /= n;
                c
            })
            .collect();
        GroupElement { coords }
    }

    pub fn index_of(&self, e: &GroupElement) -> u64 {
        e.coords
            .iter()
            .zip(&self.moduli)
            .rev()
            .fold(0u64, |acc, (&c, &n)| acc * n + c)
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order).map(move |i| self.element_at(i))
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .zip(&self.moduli)
                .map(|((&x, &y), &n)| (x + y) % n)
                .collect(),
        }
    }

    pub fn scale(&self, k: u64, a: &GroupElement) -> GroupElement {
        GroupElement {
            coords: a
                .coords
                .iter()
                .zip(&self.moduli)
                .map(|(&x, &n)| ((k % n) as u128 * x as u128 % n as u128) as u64)
                .collect(),
        }
    }

    /// Additive order of `a`.
    pub fn element_order(&self, a: &GroupElement) -> u64 {
        use num_integer::Integer;
        a.coords
            .iter()
            .zip(&self.moduli)
            .fold(1u64, |acc, (&x, &n)| acc.lcm(&(n / x.gcd(&n))))
    }

    /// The `i`-th canonical generator (1 in factor `i`, 0 elsewhere).
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut coords = vec![0; self.moduli.len()];
        coords[i] = 1;
        GroupElement { coords }
    }

    /// Display label of an element: bare residue for cyclic groups, tuple otherwise.
    pub fn label(&self, e: &GroupElement) -> String {
        if self.rank() == 1 {
            e.coords[0].to_string()
        } else {
            e.to_string()
        }
    }
}

impl fmt::Display for FiniteAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.moduli.iter().map(|n| format!("Z/{n}Z")).collect();
        f.write_str(&parts.join(" ⊕ "))
    }
}

/// Residue tuple; reduced modulo the factors of the group that created it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    coords: Vec<u64>,
}

impl GroupElement {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The ideal `dZ` of the integers, tagged with the exponent of the group it
/// was computed for. For an `[a:G]` the generator always divides `exp(G)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IdealZ {
    generator: u64,
    context_exponent: u64,
}

impl IdealZ {
    pub fn new(generator: u64, context_exponent: u64) -> Result<Self> {
        if generator == 0 || !context_exponent.is_multiple_of(generator) {
            return Err(Error::InvalidGroup(format!(
                "ideal {generator}Z does not contain {context_exponent}Z"
            )));
        }
        Ok(Self {
            generator,
            context_exponent,
        })
    }

    pub(crate) fn new_unchecked(generator: u64, context_exponent: u64) -> Self {
        debug_assert!(generator != 0 && context_exponent.is_multiple_of(generator));
        Self {
            generator,
            context_exponent,
        }
    }

    pub fn generator(&self) -> u64 {
        self.generator
    }

    pub fn context_exponent(&self) -> u64 {
        self.context_exponent
    }

    /// Whether `(self · other) G = 0`, i.e. `exp(G) | d_1 d_2`.
    pub fn product_annihilates(&self, other: &IdealZ) -> bool {
        let prod = self.generator as u128 * other.generator as u128;
        prod.is_multiple_of(self.context_exponent as u128)
    }
}

impl fmt::Display for IdealZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}Z", self.generator)
    }
}

/// Elements of `Z/p^alpha` with p-adic valuation exactly `valuation`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orbit {
    pub p: u64,
    pub alpha: u32,
    pub valuation: u32,
    pub members: Vec<u64>,
}

/// Valuation of `a` in `Z/p^alpha`; `alpha` for the zero element.
pub fn p_valuation(group: &FiniteAbelianGroup, a: &GroupElement) -> Result<u32> {
    let (p, alpha) = group
        .as_cyclic_p()
        .ok_or_else(|| Error::WrongGroupKind(format!("{group} is not a cyclic p-group")))?;
    Ok(arith::valuation_mod(a.coords()[0], p, alpha))
}

/// `|O_{alpha, p^i}|`: `phi(p^alpha) / p^i` for `i < alpha`, 1 for `i = alpha`.
pub fn orbit_size(p: u64, alpha: u32, i: u32) -> u64 {
    if i >= alpha {
        1
    } else {
        arith::phi_prime_power(p, alpha) / arith::pow(p, i)
    }
}

/// The `alpha + 1` valuation classes of `Z/p^alpha`, ordered by valuation.
pub fn cyclic_orbits(group: &FiniteAbelianGroup) -> Result<Vec<Orbit>> {
    let (p, alpha) = group
        .as_cyclic_p()
        .ok_or_else(|| Error::WrongGroupKind(format!("{group} is not a cyclic p-group")))?;
    let mut orbits: Vec<Orbit> = (0..=alpha)
        .map(|valuation| Orbit {
            p,
            alpha,
            valuation,
            members: Vec::new(),
        })
        .collect();
    for x in 0..group.order() {
        let v = arith::valuation_mod(x, p, alpha);
        orbits[v as usize].members.push(x);
    }
    Ok(orbits)
}
