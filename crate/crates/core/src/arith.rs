//! Small integer helpers shared by the group and orbit code.

use num_integer::Integer;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Returns `(p, k)` with `n = p^k`, `p` prime, `k >= 1`, or `None`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = smallest_prime_factor(n);
    let mut m = n;
    let mut k = 0;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

pub fn smallest_prime_factor(n: u64) -> u64 {
    debug_assert!(n >= 2);
    if n.is_multiple_of(2) {
        return 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 2;
    }
    n
}

/// Exponent of `p` in `x`, where `x` is a residue of `Z/p^alpha`; zero maps to `alpha`.
pub fn valuation_mod(x: u64, p: u64, alpha: u32) -> u32 {
    if x == 0 {
        return alpha;
    }
    let mut x = x;
    let mut v = 0;
    while x.is_multiple_of(p) {
        x /= p;
        v += 1;
    }
    v.min(alpha)
}

/// Positive divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn lcm_all(xs: &[u64]) -> u64 {
    xs.iter().fold(1u64, |acc, &x| acc.lcm(&x))
}

pub fn pow(p: u64, e: u32) -> u64 {
    p.checked_pow(e).expect("integer overflow in p^e")
}

/// Euler's totient of `p^alpha`.
pub fn phi_prime_power(p: u64, alpha: u32) -> u64 {
    if alpha == 0 {
        1
    } else {
        pow(p, alpha) - pow(p, alpha - 1)
    }
}

/// Every `(p, α)` with `α ≥ min_alpha` and `p^α ≤ limit`, ordered by `p^α`.
pub fn prime_powers_up_to(limit: u64, min_alpha: u32) -> Vec<(u64, u32)> {
    let mut out: Vec<(u64, u32)> = (2..=limit)
        .filter_map(prime_power)
        .filter(|&(_, a)| a >= min_alpha.max(1))
        .collect();
    out.sort_by_key(|&(p, a)| pow(p, a));
    out
}
