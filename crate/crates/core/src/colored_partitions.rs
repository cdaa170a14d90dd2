//! The parts-weighted crank statistic for k-colored partitions.
//!
//! A k-colored partition of n is a k-tuple (p1, ..., pk) of ordinary
//! partitions whose sizes sum to n. Its crank is #(p1) - #(p2), the part
//! counts of the first two colors, and the statistic tabulated here weights
//! each k-colored partition by #(p1):
//!
//! `NB_k(r, m, n) = sum over k-colored partitions of n with crank ≡ r (mod m)
//!  of #(p1)`.
//!
//! Two independent computations are provided. `nb_series` works analytically
//! over the group ring Z[C_m], specializing the crank variable to the group
//! generator g so that the coefficient of q^n carries all m residue classes
//! at once:
//!
//! `(q;q)_inf^(2-k) * 1/((g q;q)_inf (g^(m-1) q;q)_inf) * sum_{n,j>=1} g^j q^(nj)`
//!
//! `nb_enumerate` counts partitions directly and knows nothing about series.

use crate::coeff::{BigRat, GroupRing, IntRing, RatRing, Ring};
use crate::series::TruncatedSeries;
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};
use thiserror::Error;

#[derive(Error, Clone, PartialEq, Eq, Debug)]
pub enum EnumerationError {
    #[error("direct enumeration of k = {k}, n = {n} exceeds the size guard")]
    SizeGuard { k: u32, n: u64 },
    #[error("the statistic needs k >= 2 colors, got {k}")]
    TooFewColors { k: u32 },
}

pub type CrankSeries = TruncatedSeries<GroupRing<IntRing>>;

fn crank_ring(m: u32) -> GroupRing<IntRing> {
    assert!(m >= 2, "residue modulus must be at least 2");
    GroupRing::new(IntRing, m as usize)
}

/// The crank-weighted statistic series over Z[C_m]: the coefficient of q^n
/// has NB_k(r, m, n) as its g^r component.
pub fn nb_series(k: u32, m: u32, precision: i64) -> CrankSeries {
    assert!(k >= 2, "the statistic needs k >= 2 colors");
    let statistic = statistic_factor(m, precision);
    let weightless = crank_count_series(k, m, precision);
    &weightless * &statistic
}

/// The crank histogram without the parts weight: the coefficient of q^n
/// counts k-colored partitions of n by crank residue.
pub fn crank_count_series(k: u32, m: u32, precision: i64) -> CrankSeries {
    assert!(k >= 2, "the statistic needs k >= 2 colors");
    let ring = crank_ring(m);
    let g = ring.generator_pow(1);
    let g_inv = ring.generator_pow(-1);
    let minus_g = ring.neg(&g);
    let minus_g_inv = ring.neg(&g_inv);
    let minus_one = ring.from_i64(-1);
    let mut acc = TruncatedSeries::one(ring.clone(), precision);
    for j in 1..precision.max(1) {
        let j = j as u32;
        // 1/((g q; q)(g^(m-1) q; q)): the crank of the first two colors.
        acc.div_binomial(&minus_g, j);
        acc.div_binomial(&minus_g_inv, j);
        // (q; q)^(2-k): the remaining k-2 colors, crank-neutral.
        for _ in 2..k {
            acc.div_binomial(&minus_one, j);
        }
    }
    acc
}

/// `sum_{n,j>=1} g^j q^(nj)`: what differentiating the crank variable at 1
/// turns the first color's weight into.
fn statistic_factor(m: u32, precision: i64) -> CrankSeries {
    let ring = crank_ring(m);
    let len = precision.max(0) as usize;
    let mut cols: Vec<Vec<BigInt>> = vec![vec![BigInt::from(0); m as usize]; len];
    for n in 1..precision.max(0) {
        let mut j = 1i64;
        while n * j < precision {
            cols[(n * j) as usize][(j % m as i64) as usize] += 1;
            j += 1;
        }
    }
    let coeffs = cols
        .into_iter()
        .map(|c| ring.from_components(c))
        .collect();
    TruncatedSeries::from_coeffs(ring, 0, coeffs)
}

/// Reads the g^r component of every coefficient: the single-residue series
/// `sum_n NB_k(r, m, n) q^n` when applied to [`nb_series`].
pub fn component_series(f: &CrankSeries, r: u32) -> TruncatedSeries<IntRing> {
    let ring = f.ring().clone();
    assert!((r as usize) < ring.order(), "residue outside the group");
    f.map_coeffs(IntRing, |c| ring.component(c, r as usize).clone())
}

/// Specializes g to the j-th power of a primitive fifth root of unity.
/// Requires m = 5; every character is a ring morphism, so this commutes
/// with all series arithmetic.
pub fn character_series(
    f: &CrankSeries,
    j: u32,
) -> TruncatedSeries<crate::coeff::CycRing5> {
    assert_eq!(f.ring().order(), 5, "character specialization needs m = 5");
    f.map_coeffs(crate::coeff::CycRing5, |c| {
        crate::coeff::apply_character(c, j)
    })
}

/// `dissect(sum_r weights[r] * component_r(nb), residue, step)` over the
/// rationals. The caller supplies an `nb` window deep enough for the final
/// dissection; [`nb_combo_series`] computes that headroom itself.
pub fn combine_and_dissect(
    nb: &CrankSeries,
    weights: &[BigRat],
    residue: u32,
    step: u32,
) -> TruncatedSeries<RatRing> {
    let m = nb.ring().order();
    assert_eq!(weights.len(), m, "one weight per residue class");
    let mut acc = TruncatedSeries::zero(RatRing, nb.precision());
    for (r, w) in weights.iter().enumerate() {
        if w.is_zero() {
            continue;
        }
        let comp = component_series(nb, r as u32).to_rational().scale(w);
        acc = &acc + &comp;
    }
    acc.dissect(residue, step)
}

/// The weighted residue combination
/// `sum_n (sum_r weights[r] NB_k(r, m, step*n + residue)) q^n`,
/// computed with enough internal precision to prove `precision` terms.
pub fn nb_combo_series(
    k: u32,
    m: u32,
    weights: &[BigRat],
    residue: u32,
    step: u32,
    precision: i64,
) -> TruncatedSeries<RatRing> {
    assert!(residue < step, "progression residue must be below the step");
    let internal = step as i64 * precision + residue as i64 + 1;
    let nb = nb_series(k, m, internal);
    combine_and_dissect(&nb, weights, residue, step)
}

/// A dense table of NB_k(r, m, n) for all r < m, n <= max_n.
pub struct NbTable {
    k: u32,
    m: u32,
    values: Vec<Vec<BigInt>>,
}

impl NbTable {
    pub fn build(k: u32, m: u32, max_n: u64) -> Self {
        let f = nb_series(k, m, max_n as i64 + 1);
        let ring = f.ring().clone();
        let values = (0..=max_n as i64)
            .map(|n| {
                let c = f.coeff(n).expect("window covers the table");
                (0..m as usize)
                    .map(|r| ring.component(&c, r).clone())
                    .collect()
            })
            .collect();
        NbTable { k, m, values }
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn max_n(&self) -> u64 {
        self.values.len() as u64 - 1
    }

    pub fn value(&self, r: u32, n: u64) -> &BigInt {
        &self.values[n as usize][r as usize]
    }

    pub fn row(&self, n: u64) -> &[BigInt] {
        &self.values[n as usize]
    }

    pub fn row_sum(&self, n: u64) -> BigInt {
        self.values[n as usize].iter().sum()
    }
}

/// Shares crank series across verification cases; windows only ever grow.
#[derive(Default)]
pub struct NbCache {
    entries: Mutex<HashMap<(u32, u32), Arc<CrankSeries>>>,
}

impl NbCache {
    pub fn new() -> Self {
        NbCache::default()
    }

    /// A `(k, m)` series with precision at least `precision`, computing and
    /// caching it if the stored window is too short.
    pub fn at_least(&self, k: u32, m: u32, precision: i64) -> Arc<CrankSeries> {
        {
            let entries = self.entries.lock().expect("cache lock");
            if let Some(s) = entries.get(&(k, m)) {
                if s.precision() >= precision {
                    return Arc::clone(s);
                }
            }
        }
        let fresh = Arc::new(nb_series(k, m, precision));
        let mut entries = self.entries.lock().expect("cache lock");
        let slot = entries.entry((k, m)).or_insert_with(|| Arc::clone(&fresh));
        if slot.precision() < precision {
            *slot = Arc::clone(&fresh);
        }
        Arc::clone(slot)
    }
}

// ---------------------------------------------------------------------------
// Enumeration oracles. Everything below counts partitions literally and must
// stay free of the series engine, so the two paths are independent checks.
// ---------------------------------------------------------------------------

/// Calls `f` with the part count of every partition of n.
fn for_each_partition_size(n: u64, f: &mut impl FnMut(u64)) {
    fn rec(remaining: u64, max_part: u64, parts: u64, f: &mut impl FnMut(u64)) {
        if remaining == 0 {
            f(parts);
            return;
        }
        let top = remaining.min(max_part);
        for next in (1..=top).rev() {
            rec(remaining - next, next, parts + 1, f);
        }
    }
    rec(n, n.max(1), 0, f);
}

/// Partition counts p(0..=n) by direct enumeration: every partition is
/// generated and counted, so this is an oracle independent of any series.
pub fn partition_counts(n: u64) -> Vec<u64> {
    (0..=n)
        .map(|a| {
            let mut count = 0u64;
            for_each_partition_size(a, &mut |_| count += 1);
            count
        })
        .collect()
}

/// Number of j-colored partitions of each size up to n, from enumerated
/// partition counts only.
fn colored_counts(j: u32, n: u64) -> Vec<BigInt> {
    let p: Vec<BigInt> = partition_counts(n).into_iter().map(BigInt::from).collect();
    let mut acc: Vec<BigInt> = vec![BigInt::from(0); n as usize + 1];
    acc[0] = BigInt::from(1);
    for _ in 0..j {
        let mut next = vec![BigInt::from(0); n as usize + 1];
        for (a, x) in acc.iter().enumerate() {
            for (b, y) in p.iter().enumerate() {
                if a + b <= n as usize {
                    next[a + b] += x * y;
                }
            }
        }
        acc = next;
    }
    acc
}

/// Brute-force NB_k(., m, n): enumerates the first two colors literally and
/// collapses colors 3..k into a colored-partition count of the remainder.
pub fn nb_enumerate(k: u32, m: u32, n: u64) -> Result<Vec<BigInt>, EnumerationError> {
    if k < 2 {
        return Err(EnumerationError::TooFewColors { k });
    }
    let guard = if k == 2 { 14 } else { 10 };
    if n > guard {
        return Err(EnumerationError::SizeGuard { k, n });
    }
    let rest = colored_counts(k - 2, n);
    let mut nb = vec![BigInt::from(0); m as usize];
    for n1 in 0..=n {
        for n2 in 0..=n - n1 {
            let mult = &rest[(n - n1 - n2) as usize];
            let mut sizes1 = Vec::new();
            for_each_partition_size(n1, &mut |c| sizes1.push(c as i64));
            let mut sizes2 = Vec::new();
            for_each_partition_size(n2, &mut |c| sizes2.push(c as i64));
            for &c1 in &sizes1 {
                if c1 == 0 {
                    continue;
                }
                for &c2 in &sizes2 {
                    let r = (c1 - c2).rem_euclid(m as i64) as usize;
                    nb[r] += mult * c1;
                }
            }
        }
    }
    Ok(nb)
}

/// Fully literal version: iterates over actual k-tuples of partitions.
/// Exponentially slower, so the guard is tight; kept as a third route that
/// exercises no collapsing argument at all.
pub fn nb_enumerate_literal(k: u32, m: u32, n: u64) -> Result<Vec<BigInt>, EnumerationError> {
    if k < 2 {
        return Err(EnumerationError::TooFewColors { k });
    }
    if n > 6 || k > 6 {
        return Err(EnumerationError::SizeGuard { k, n });
    }
    let mut nb = vec![BigInt::from(0); m as usize];
    // sizes[color] = list of part counts over partitions of each size.
    let mut stack = Vec::new();
    fn rec(
        color: u32,
        k: u32,
        remaining: u64,
        m: u32,
        stack: &mut Vec<i64>,
        nb: &mut [BigInt],
    ) {
        if color == k {
            if remaining == 0 {
                let crank = stack[0] - stack[1];
                let r = crank.rem_euclid(m as i64) as usize;
                nb[r] += stack[0];
            }
            return;
        }
        for size in 0..=remaining {
            let mut counts = Vec::new();
            for_each_partition_size(size, &mut |c| counts.push(c as i64));
            for c in counts {
                stack.push(c);
                rec(color + 1, k, remaining - size, m, stack, nb);
                stack.pop();
            }
        }
    }
    rec(0, k, n, m, &mut stack, &mut nb);
    Ok(nb)
}
