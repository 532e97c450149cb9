//! Orbits of `Aut(G)` on a finite abelian group: closed-form counts for
//! p-groups and an exact oracle for groups of order at most 64.

use std::collections::HashMap;

use serde::Serialize;

use crate::arith;
use crate::error::{Error, Result};
use crate::group::FiniteAbelianGroup;

/// Largest group the orbit oracle accepts; subsets are `u64` bitmasks.
pub const AUT_ORACLE_CAP: u64 = 64;

/// Type `λ_1 ≥ … ≥ λ_r ≥ 1` of `G_{λ,p} = ⊕ Z/p^{λ_i}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PartitionType {
    lambda: Vec<u32>,
    p: u64,
}

impl PartitionType {
    /// Sorts `lambda` into non-increasing order.
    pub fn new(mut lambda: Vec<u32>, p: u64) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::NonPrimeBase(p));
        }
        if lambda.is_empty() || lambda.contains(&0) {
            return Err(Error::InvalidGroup("partition parts must be positive and non-empty".into()));
        }
        lambda.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { lambda, p })
    }

    pub fn lambda(&self) -> &[u32] {
        &self.lambda
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn group(&self) -> Result<FiniteAbelianGroup> {
        FiniteAbelianGroup::p_group(self.p, &self.lambda)
    }
}

/// `(λ_r + 1) Π_{i<r} (λ_i − λ_{i+1} + 1)`; independent of `p`.
pub fn miller_orbit_count(t: &PartitionType) -> u64 {
    let l = &t.lambda;
    let last = *l.last().expect("partition is non-empty") as u64;
    l.windows(2)
        .map(|w| (w[0] - w[1]) as u64 + 1)
        .product::<u64>()
        * (last + 1)
}

/// Alternative orbit-count sum, evaluated literally over the distinct
/// parts `τ_1 < … < τ_s`:
/// `Σ_k Σ_{i_1<…<i_k} τ_{i_k} Π_{j<k} (τ_{i_j} − τ_{i_{j+1}} − 1)`, with the
/// `k = 0` term taken as 1. Experimental: reported, never asserted.
pub fn ss_orbit_count_experimental(t: &PartitionType) -> i64 {
    let mut tau: Vec<i64> = t.lambda.iter().map(|&x| x as i64).collect();
    tau.sort_unstable();
    tau.dedup();
    let s = tau.len();
    let mut total = 1i64;
    for mask in 1u32..(1 << s) {
        let idx: Vec<usize> = (0..s).filter(|&i| mask >> i & 1 == 1).collect();
        let prod: i64 = idx.windows(2).map(|w| tau[w[0]] - tau[w[1]] - 1).product();
        total += tau[*idx.last().expect("mask is non-empty")] * prod;
    }
    total
}

/// Dense tables over element indices of a group with at most 64 elements.
struct SmallGroup {
    n: usize,
    add: Vec<Vec<u8>>,
    /// `(index of e_t, n_t)` per cyclic factor.
    gens: Vec<(usize, u64)>,
    /// Coordinates of each element.
    coords: Vec<Vec<u64>>,
}

impl SmallGroup {
    fn new(group: &FiniteAbelianGroup) -> Result<Self> {
        if group.order() > AUT_ORACLE_CAP {
            return Err(Error::GroupTooLarge {
                order: group.order(),
                cap: AUT_ORACLE_CAP,
            });
        }
        let n = group.order() as usize;
        let elems: Vec<_> = group.elements().collect();
        let add = elems
            .iter()
            .map(|a| elems.iter().map(|b| group.index_of(&group.add(a, b)) as u8).collect())
            .collect();
        let gens = (0..group.rank())
            .map(|t| (group.index_of(&group.generator(t)) as usize, group.moduli()[t]))
            .collect();
        let coords = elems.iter().map(|e| e.coords().to_vec()).collect();
        Ok(Self { n, add, gens, coords })
    }

    fn scale(&self, k: u64, y: usize) -> usize {
        let mut acc = 0usize;
        for _ in 0..k {
            acc = self.add[acc][y] as usize;
        }
        acc
    }

    fn translate(&self, mask: u64, z: usize) -> u64 {
        let mut out = 0u64;
        let mut m = mask;
        while m != 0 {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            out |= 1 << self.add[b][z];
        }
        out
    }

    /// `⟨H, y⟩` for a subgroup mask `H`.
    fn span(&self, h: u64, y: usize) -> u64 {
        let mut out = h;
        let mut shift = y;
        while h >> shift & 1 == 0 {
            out |= self.translate(h, shift);
            shift = self.add[shift][y] as usize;
        }
        out
    }

    /// Elements killed by `k`.
    fn torsion(&self, k: u64) -> Vec<usize> {
        (0..self.n).filter(|&y| self.scale(k, y) == 0).collect()
    }
}

/// Choices for the image of generator `t` given the span `H` of earlier images:
/// `n_t y = 0` and `|⟨H, y⟩| = |H| n_t`, which together force a bijection.
fn extensions(g: &SmallGroup, torsion: &[Vec<usize>], t: usize, h: u64, span_memo: &mut HashMap<(u64, usize), u64>) -> Vec<(usize, u64)> {
    let nt = g.gens[t].1;
    torsion[t]
        .iter()
        .filter_map(|&y| {
            let s = *span_memo.entry((h, y)).or_insert_with(|| g.span(h, y));
            (s.count_ones() as u64 == h.count_ones() as u64 * nt).then_some((y, s))
        })
        .collect()
}

/// Exact `Aut(G)`-orbits, each sorted, ordered by least element index.
///
/// An automorphism is a choice of images `y_t` for the canonical generators;
/// the orbit of `x = Σ x_t e_t` is the set of all `Σ x_t y_t`. The reachable
/// sums depend only on the generator index and the span of the images chosen so
/// far, so the search tree collapses to a DP over `(t, span)`.
pub fn bruteforce_aut_orbits(group: &FiniteAbelianGroup) -> Result<Vec<Vec<u64>>> {
    let g = SmallGroup::new(group)?;
    let torsion: Vec<Vec<usize>> = g.gens.iter().map(|&(_, nt)| g.torsion(nt)).collect();
    let mut span_memo = HashMap::new();
    let mut assigned = 0u64;
    let mut orbits = Vec::new();
    for x in 0..g.n {
        if assigned >> x & 1 == 1 {
            continue;
        }
        let mut memo: HashMap<(usize, u64), u64> = HashMap::new();
        let reach = reachable(&g, &torsion, &g.coords[x], 0, 1, &mut memo, &mut span_memo);
        assigned |= reach;
        orbits.push((0..g.n as u64).filter(|&i| reach >> i & 1 == 1).collect());
    }
    Ok(orbits)
}

fn reachable(
    g: &SmallGroup,
    torsion: &[Vec<usize>],
    x: &[u64],
    t: usize,
    h: u64,
    memo: &mut HashMap<(usize, u64), u64>,
    span_memo: &mut HashMap<(u64, usize), u64>,
) -> u64 {
    if t == g.gens.len() {
        return 1;
    }
    if let Some(&r) = memo.get(&(t, h)) {
        return r;
    }
    let mut out = 0u64;
    for (y, s) in extensions(g, torsion, t, h, span_memo) {
        let tail = reachable(g, torsion, x, t + 1, s, memo, span_memo);
        out |= g.translate(tail, g.scale(x[t], y));
    }
    memo.insert((t, h), out);
    out
}

/// Every automorphism as a permutation of element indices, or `NotApplicable`
/// once more than `limit` have been found.
pub fn enumerate_automorphisms(group: &FiniteAbelianGroup, limit: usize) -> Result<Vec<Vec<u64>>> {
    let g = SmallGroup::new(group)?;
    let torsion: Vec<Vec<usize>> = g.gens.iter().map(|&(_, nt)| g.torsion(nt)).collect();
    let mut span_memo = HashMap::new();
    let mut out = Vec::new();
    let mut images = Vec::new();
    enumerate_rec(&g, &torsion, 0, 1, &mut images, &mut span_memo, &mut out, limit)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn enumerate_rec(
    g: &SmallGroup,
    torsion: &[Vec<usize>],
    t: usize,
    h: u64,
    images: &mut Vec<usize>,
    span_memo: &mut HashMap<(u64, usize), u64>,
    out: &mut Vec<Vec<u64>>,
    limit: usize,
) -> Result<()> {
    if t == g.gens.len() {
        if out.len() == limit {
            return Err(Error::NotApplicable(format!("more than {limit} automorphisms")));
        }
        let perm = g
            .coords
            .iter()
            .map(|c| {
                c.iter()
                    .zip(images.iter())
                    .fold(0usize, |acc, (&k, &y)| g.add[acc][g.scale(k, y)] as usize) as u64
            })
            .collect();
        out.push(perm);
        return Ok(());
    }
    for (y, s) in extensions(g, torsion, t, h, span_memo) {
        images.push(y);
        enumerate_rec(g, torsion, t + 1, s, images, span_memo, out, limit)?;
        images.pop();
    }
    Ok(())
}

/// Orbits of the group generated by `perms` on `0..n`.
pub fn orbits_of_permutations(perms: &[Vec<u64>], n: usize) -> Vec<Vec<u64>> {
    let mut seen = vec![false; n];
    let mut orbits = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start as u64];
        seen[start] = true;
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i] as usize;
            for p in perms {
                let y = p[x] as usize;
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y as u64);
                }
            }
            i += 1;
        }
        orbit.sort_unstable();
        orbits.push(orbit);
    }
    orbits
}

/// All partitions of `n` into positive parts, each non-increasing.
pub fn partitions_of(n: u32) -> Vec<Vec<u32>> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            rec(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every type `λ` with `p^{|λ|} ≤ cap`.
pub fn partition_types_up_to(p: u64, cap: u64) -> Result<Vec<PartitionType>> {
    let mut out = Vec::new();
    let mut size = 1u32;
    while p.checked_pow(size).is_some_and(|o| o <= cap) {
        for lambda in partitions_of(size) {
            out.push(PartitionType::new(lambda, p)?);
        }
        size += 1;
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    pub lambda: Vec<u32>,
    pub p: u64,
    pub miller: u64,
    /// Absent above the oracle cap.
    pub oracle: Option<u64>,
    pub ss_experimental: i64,
    /// `ss_experimental == miller`.
    pub agree: bool,
    pub oracle_matches_miller: Option<bool>,
}

pub fn orbit_report(t: &PartitionType) -> Result<OrbitReport> {
    let miller = miller_orbit_count(t);
    let group = t.group()?;
    let oracle = if group.order() <= AUT_ORACLE_CAP {
        Some(bruteforce_aut_orbits(&group)?.len() as u64)
    } else {
        None
    };
    let ss = ss_orbit_count_experimental(t);
    Ok(OrbitReport {
        lambda: t.lambda.clone(),
        p: t.p,
        miller,
        oracle,
        ss_experimental: ss,
        agree: ss == miller as i64,
        oracle_matches_miller: oracle.map(|o| o == miller),
    })
}
