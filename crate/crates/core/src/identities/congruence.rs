//! Arithmetic-progression congruences for the weighted crank statistic:
//! each case asserts `sum_(m=1..4) w(m) NB_k(m, 5, step*n + residue)
//! == 0 (mod 5)` for every n up to a bound, with `w(m) = m` or `m^3`.

use crate::colored_partitions::NbCache;
use num_bigint::BigInt;
use num_traits::Zero;
use std::time::{Duration, Instant};

/// The residue-class weighting applied to `m = 1..4`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WeightKind {
    /// `w(m) = m`.
    Linear,
    /// `w(m) = m^3`.
    Cubic,
}

impl WeightKind {
    pub fn apply(self, m: u32) -> i64 {
        match self {
            WeightKind::Linear => m as i64,
            WeightKind::Cubic => (m as i64).pow(3),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CongruenceCase {
    pub id: &'static str,
    pub k: u32,
    pub modulus: u32,
    pub weight: WeightKind,
    pub residue: u32,
    pub step: u32,
    pub citation: &'static str,
}

/// One progression index where the weighted sum fails the congruence.
#[derive(Clone, PartialEq, Debug)]
pub struct Violation {
    pub n: u64,
    pub argument: u64,
    pub value: BigInt,
}

#[derive(Clone, Debug)]
pub struct CongruenceReport {
    pub id: String,
    pub n_max: u64,
    pub violations: Vec<Violation>,
    pub elapsed: Duration,
}

impl CongruenceReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// All congruence cases: linear weights for two, three, and four colors
/// on their stated residues, cubic weights for five colors.
pub fn congruence_registry() -> &'static [CongruenceCase] {
    const CASES: &[CongruenceCase] = &[
        CongruenceCase {
            id: "eq-1-2-i0",
            k: 2,
            modulus: 5,
            weight: WeightKind::Linear,
            residue: 0,
            step: 5,
            citation: "(1.2), i=0: sum m NB2(m,5,5n) == 0 (mod 5)",
        },
        CongruenceCase {
            id: "eq-1-2-i2",
            k: 2,
            modulus: 5,
            weight: WeightKind::Linear,
            residue: 2,
            step: 5,
            citation: "(1.2), i=2: sum m NB2(m,5,5n+2) == 0 (mod 5)",
        },
        CongruenceCase {
            id: "eq-1-2-i3",
            k: 2,
            modulus: 5,
            weight: WeightKind::Linear,
            residue: 3,
            step: 5,
            citation: "(1.2), i=3: sum m NB2(m,5,5n+3) == 0 (mod 5)",
        },
        CongruenceCase {
            id: "eq-1-2-i4",
            k: 2,
            modulus: 5,
            weight: WeightKind::Linear,
            residue: 4,
            step: 5,
            citation: "(1.2), i=4: sum m NB2(m,5,5n+4) == 0 (mod 5)",
        },
        CongruenceCase {
            id: "eq-1-3",
            k: 3,
            modulus: 5,
            weight: WeightKind::Linear,
            residue: 0,
            step: 5,
            citation: "(1.3): sum m NB3(m,5,5n) == 0 (mod 5)",
        },
        CongruenceCase {
            id: "eq-1-4-j0",
            k: 4,
            modulus: 5,
            weight: WeightKind::Linear,
            residue: 0,
            step: 5,
            citation: "(1.4), j=0: sum m NB4(m,5,5n) == 0 (mod 5)",
        },
        CongruenceCase {
            id: "eq-1-4-j3",
            k: 4,
            modulus: 5,
            weight: WeightKind::Linear,
            residue: 3,
            step: 5,
            citation: "(1.4), j=3: sum m NB4(m,5,5n+3) == 0 (mod 5)",
        },
        CongruenceCase {
            id: "eq-1-4-j4",
            k: 4,
            modulus: 5,
            weight: WeightKind::Linear,
            residue: 4,
            step: 5,
            citation: "(1.4), j=4: sum m NB4(m,5,5n+4) == 0 (mod 5)",
        },
        CongruenceCase {
            id: "eq-1-5-t2",
            k: 5,
            modulus: 5,
            weight: WeightKind::Cubic,
            residue: 2,
            step: 5,
            citation: "(1.5), t=2: sum m^3 NB5(m,5,5n+2) == 0 (mod 5)",
        },
        CongruenceCase {
            id: "eq-1-5-t4",
            k: 5,
            modulus: 5,
            weight: WeightKind::Cubic,
            residue: 4,
            step: 5,
            citation: "(1.5), t=4: sum m^3 NB5(m,5,5n+4) == 0 (mod 5)",
        },
    ];
    CASES
}

pub fn find_congruence(id: &str) -> Option<&'static CongruenceCase> {
    congruence_registry().iter().find(|c| c.id == id)
}

/// Checks the case for every `n <= n_max` and lists each failure with its
/// exact weighted sum.
pub fn verify_congruence(
    case: &CongruenceCase,
    n_max: u64,
    cache: &NbCache,
) -> CongruenceReport {
    let start = Instant::now();
    let needed = case.step as i64 * n_max as i64 + case.residue as i64 + 1;
    let nb = cache.at_least(case.k, case.modulus, needed);
    let ring = nb.ring().clone();
    let modulus = BigInt::from(case.modulus);
    let mut violations = Vec::new();
    for n in 0..=n_max {
        let argument = case.step as u64 * n + case.residue as u64;
        let c = nb
            .coeff(argument as i64)
            .expect("window sized for the progression");
        let mut sum = BigInt::zero();
        for m in 1..case.modulus {
            sum += ring.component(&c, m as usize) * case.weight.apply(m);
        }
        if !(&sum % &modulus).is_zero() {
            violations.push(Violation {
                n,
                argument,
                value: sum,
            });
        }
    }
    CongruenceReport {
        id: case.id.to_string(),
        n_max,
        violations,
        elapsed: start.elapsed(),
    }
}
