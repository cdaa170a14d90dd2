//! A registry of exact q-series identities and the verifier that checks
//! them coefficient-by-coefficient.
//!
//! Each case pairs a left side (a weighted residue combination of the
//! crank statistic, a plain product expression, or a Lambert block) with a
//! right-side product expression. The verifier evaluates both sides
//! independently to the requested order, with headroom on any arithmetic
//! progression extraction, and reports either agreement on the whole
//! window or the first differing exponent with both coefficients.

pub mod congruence;
mod registry;

pub use registry::registry;

use crate::coeff::{BigRat, RatRing};
use crate::colored_partitions::{combine_and_dissect, NbCache};
use crate::lambert::LambertExpr;
use crate::products::ProductExpr;
use crate::series::TruncatedSeries;
use std::time::{Duration, Instant};

/// Default verification depth differs by how expensive the left side is.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CaseClass {
    /// Weighted crank combinations; the series behind them need 5x to 25x
    /// internal headroom, so the default order stays moderate.
    Theorem,
    /// Product and Lambert identities; cheap, verified deep.
    Lemma,
    /// Single-difference crank extractions.
    Dissection,
    /// Classical sanity fixtures.
    Fixture,
}

impl CaseClass {
    pub fn default_order(self) -> i64 {
        match self {
            CaseClass::Theorem => 60,
            CaseClass::Lemma => 200,
            CaseClass::Dissection => 60,
            CaseClass::Fixture => 100,
        }
    }
}

/// How a case's left side is computed.
#[derive(Clone, Debug)]
pub enum LhsSpec {
    /// `sum_n (sum_r weights[r] NB_k(r, 5, step*n + residue)) q^n`.
    NbCombo {
        k: u32,
        weights: [i64; 5],
        residue: u32,
        step: u32,
    },
    /// `sum_n (NB_k(r_plus, 5, step*n + residue)
    ///         - NB_k(r_minus, 5, step*n + residue)) q^n`.
    NbDifference {
        k: u32,
        r_plus: u32,
        r_minus: u32,
        residue: u32,
        step: u32,
    },
    /// A product expression, optionally followed by extracting the
    /// progression `step*n + residue` and mapping `q^(step*n+residue)` to
    /// `q^n`.
    Product {
        expr: ProductExpr,
        dissect: Option<(u32, u32)>,
    },
    /// A Lambert block from the [`crate::lambert`] module.
    Lambert(LambertExpr),
}

/// One verifiable identity: an id, a left side, a product right side, and
/// an ASCII transcription of the source display.
#[derive(Clone, Debug)]
pub struct IdentityCase {
    pub id: &'static str,
    pub class: CaseClass,
    pub lhs: LhsSpec,
    pub rhs: ProductExpr,
    pub citation: &'static str,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Status {
    Verified,
    Mismatch,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Mismatch => "mismatch",
            Status::Error => "error",
        }
    }
}

/// The first differing exponent with both exact coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct MismatchDetail {
    pub exponent: i64,
    pub lhs: BigRat,
    pub rhs: BigRat,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub id: String,
    pub order: i64,
    pub status: Status,
    pub first_mismatch: Option<MismatchDetail>,
    /// Present only when status is [`Status::Error`]; never part of the
    /// serialized report schema.
    pub error: Option<String>,
    pub elapsed: Duration,
}

/// Matches `pattern` against `s` where `*` stands for any substring and
/// every other byte matches itself.
pub fn glob_match(pattern: &str, s: &str) -> bool {
    let parts: Vec<&str> = pattern.split('*').collect();
    if parts.len() == 1 {
        return pattern == s;
    }
    let mut rest = match s.strip_prefix(parts[0]) {
        Some(r) => r,
        None => return false,
    };
    for mid in &parts[1..parts.len() - 1] {
        if mid.is_empty() {
            continue;
        }
        match rest.find(mid) {
            Some(i) => rest = &rest[i + mid.len()..],
            None => return false,
        }
    }
    rest.ends_with(parts[parts.len() - 1])
}

/// Registry entries whose id matches the glob, in registry order.
pub fn find_cases(pattern: &str) -> Vec<&'static IdentityCase> {
    registry()
        .iter()
        .filter(|c| glob_match(pattern, c.id))
        .collect()
}

/// Evaluates and compares identity cases, sharing crank-series windows
/// across cases through an internal cache.
#[derive(Default)]
pub struct Verifier {
    cache: NbCache,
}

impl Verifier {
    pub fn new() -> Self {
        Verifier::default()
    }

    pub fn cache(&self) -> &NbCache {
        &self.cache
    }

    /// Internal crank-series precision needed to prove `order` terms of a
    /// progression extraction with the given step: one full period past
    /// the last extracted exponent, whatever the residue.
    fn combo_precision(step: u32, order: i64) -> i64 {
        step as i64 * (order + 1)
    }

    /// The left side of a case as a rational series covering `[.., order)`.
    pub fn lhs_series(&self, lhs: &LhsSpec, order: i64) -> TruncatedSeries<RatRing> {
        match lhs {
            LhsSpec::NbCombo {
                k,
                weights,
                residue,
                step,
            } => {
                let nb = self
                    .cache
                    .at_least(*k, 5, Self::combo_precision(*step, order));
                let weights: Vec<BigRat> =
                    weights.iter().map(|&w| BigRat::from(w)).collect();
                combine_and_dissect(&nb, &weights, *residue, *step)
            }
            LhsSpec::NbDifference {
                k,
                r_plus,
                r_minus,
                residue,
                step,
            } => {
                let nb = self
                    .cache
                    .at_least(*k, 5, Self::combo_precision(*step, order));
                let mut weights = vec![BigRat::from(0); 5];
                weights[*r_plus as usize] = BigRat::from(1);
                weights[*r_minus as usize] = BigRat::from(-1);
                combine_and_dissect(&nb, &weights, *residue, *step)
            }
            LhsSpec::Product { expr, dissect } => match dissect {
                None => expr.eval(order),
                Some((r, m)) => {
                    let inner = expr.eval(*m as i64 * order + *r as i64 + 1);
                    inner.dissect(*r, *m)
                }
            },
            LhsSpec::Lambert(e) => e.eval(order),
        }
    }

    /// Compares both sides of a case on `[min valuation, order)`.
    pub fn verify(&self, case: &IdentityCase, order: i64) -> VerificationReport {
        assert!(order >= 1, "verification order must be positive");
        let start = Instant::now();
        let lhs = self.lhs_series(&case.lhs, order);
        let rhs = case.rhs.eval(order);
        let (status, first_mismatch, error) = match lhs.first_difference(&rhs, order) {
            Ok(None) => (Status::Verified, None, None),
            Ok(Some((exponent, l, r))) => (
                Status::Mismatch,
                Some(MismatchDetail {
                    exponent,
                    lhs: l,
                    rhs: r,
                }),
                None,
            ),
            Err(e) => (
                Status::Error,
                None,
                Some(format!("case {}: {}", case.id, e)),
            ),
        };
        VerificationReport {
            id: case.id.to_string(),
            order,
            status,
            first_mismatch,
            error,
            elapsed: start.elapsed(),
        }
    }

    /// Verifies the given cases, each at `order` or its class default.
    /// Reports come back in input order; with the `parallel` feature the
    /// work fans out across cases after the shared crank series are built.
    pub fn verify_selected(
        &self,
        cases: &[&IdentityCase],
        order: Option<i64>,
    ) -> Vec<VerificationReport> {
        self.prewarm(cases, order);
        let run = |case: &&IdentityCase| {
            let at = order.unwrap_or_else(|| case.class.default_order());
            self.verify(case, at)
        };
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            cases.par_iter().map(run).collect()
        }
        #[cfg(not(feature = "parallel"))]
        {
            cases.iter().map(run).collect()
        }
    }

    /// Verifies the whole registry in registry order.
    pub fn verify_all(&self, order: Option<i64>) -> Vec<VerificationReport> {
        self.verify_selected(&find_cases("*"), order)
    }

    /// Builds each needed `(k, precision)` crank series once up front so
    /// that concurrent cases never race to recompute the expensive ones.
    fn prewarm(&self, cases: &[&IdentityCase], order: Option<i64>) {
        use std::collections::HashMap;
        let mut needs: HashMap<u32, i64> = HashMap::new();
        for case in cases {
            let at = order.unwrap_or_else(|| case.class.default_order());
            let (k, step) = match &case.lhs {
                LhsSpec::NbCombo { k, step, .. } => (*k, *step),
                LhsSpec::NbDifference { k, step, .. } => (*k, *step),
                _ => continue,
            };
            let p = Self::combo_precision(step, at);
            let slot = needs.entry(k).or_insert(p);
            *slot = (*slot).max(p);
        }
        let mut plan: Vec<(u32, i64)> = needs.into_iter().collect();
        plan.sort_unstable();
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            plan.par_iter().for_each(|&(k, p)| {
                self.cache.at_least(k, 5, p);
            });
        }
        #[cfg(not(feature = "parallel"))]
        for &(k, p) in &plan {
            self.cache.at_least(k, 5, p);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::products::ProductTerm;

    #[test]
    fn glob_semantics() {
        assert!(glob_match("eq-2-*", "eq-2-13"));
        assert!(!glob_match("eq-2-*", "eq-12-3"));
        assert!(glob_match("*", "anything"));
        assert!(glob_match("eq-1-6", "eq-1-6"));
        assert!(!glob_match("eq-1-6", "eq-1-60"));
        assert!(glob_match("*-5n4", "ramanujan-5n4"));
        assert!(glob_match("eq-*-3", "eq-1-3"));
        assert!(!glob_match("eq-*-3", "eq-1-30"));
    }

    #[test]
    fn registry_has_every_advertised_entry() {
        let ids: Vec<&str> = registry().iter().map(|c| c.id).collect();
        assert!(ids.len() >= 33, "registry holds {} cases", ids.len());
        for id in [
            "eq-1-6",
            "eq-1-8",
            "eq-1-17",
            "eq-2-3",
            "eq-2-15",
            "theta-10n1",
            "theta-jtp",
            "eq-3-5",
            "eq-3-15",
            "ramanujan-5n4",
        ] {
            assert!(ids.contains(&id), "missing {id}");
        }
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), ids.len(), "duplicate case ids");
    }

    #[test]
    fn lemma_glob_selects_thirteen_cases() {
        assert_eq!(find_cases("eq-2-*").len(), 13);
    }

    #[test]
    fn zero_rhs_case_is_registered() {
        let case = find_cases("eq-1-8");
        assert_eq!(case.len(), 1);
        assert!(case[0].rhs.terms.is_empty());
    }

    #[test]
    fn verify_flags_a_corrupted_constant() {
        // Negative control: bump the constant of a known-good case and the
        // verifier must localize the damage at the exponent where that
        // term first contributes.
        let verifier = Verifier::new();
        let good = &find_cases("eq-2-4")[0];
        let ok = verifier.verify(good, 40);
        assert_eq!(ok.status, Status::Verified);

        let mut bad = (*good).clone();
        bad.rhs = ProductExpr::of(vec![ProductTerm::new(2, 1)
            .p(5, 5, 2)
            .p(2, 5, -1)
            .p(3, 5, -1)]);
        let report = verifier.verify(&bad, 40);
        assert_eq!(report.status, Status::Mismatch);
        let detail = report.first_mismatch.unwrap();
        assert_eq!(detail.exponent, 0);
        assert_eq!(detail.lhs, BigRat::from(1));
        assert_eq!(detail.rhs, BigRat::from(2));
    }

    #[test]
    fn empty_selection_yields_no_reports() {
        let verifier = Verifier::new();
        let reports = verifier.verify_selected(&find_cases("no-such-*"), None);
        assert!(reports.is_empty());
    }

    #[test]
    fn reports_preserve_selection_order() {
        let verifier = Verifier::new();
        let cases = find_cases("eq-2-1*");
        let ids: Vec<&str> = cases.iter().map(|c| c.id).collect();
        assert_eq!(
            ids,
            ["eq-2-10", "eq-2-11", "eq-2-12", "eq-2-13", "eq-2-14", "eq-2-15"]
        );
        let reports = verifier.verify_selected(&cases, Some(25));
        let got: Vec<String> = reports.iter().map(|r| r.id.clone()).collect();
        assert_eq!(got, ids);
    }
}
