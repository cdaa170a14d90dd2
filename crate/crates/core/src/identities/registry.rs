//! The identity registry: every case the verifier knows about.
//!
//! Citations transcribe the source displays into ASCII with the shorthand
//! `P(a,m) = (q^a; q^m)_inf`, `E = (q;q)_inf`, `theta = sum_(-inf..inf)
//! (-1)^n q^(n(5n+1)/2)`, and `thetaN = sum (-1)^n n q^(n(5n+1)/2)`.
//! Right sides are encoded term-for-term as printed, including one
//! suspiciously large coefficient (see `eq-1-17`), so a mismatch report
//! localizes the offending term rather than hiding it.

use super::{CaseClass, IdentityCase, LhsSpec};
use crate::lambert::LambertExpr;
use crate::products::{five_dissection_expr, ProductExpr, ProductTerm, ThetaKind};
use std::sync::OnceLock;

fn t(num: i64, den: i64) -> ProductTerm {
    ProductTerm::new(num, den)
}

fn combo(k: u32, weights: [i64; 5], residue: u32) -> LhsSpec {
    LhsSpec::NbCombo {
        k,
        weights,
        residue,
        step: 5,
    }
}

fn combo25(k: u32, weights: [i64; 5], residue: u32) -> LhsSpec {
    LhsSpec::NbCombo {
        k,
        weights,
        residue,
        step: 25,
    }
}

fn diff(k: u32, r_plus: u32, r_minus: u32, residue: u32) -> LhsSpec {
    LhsSpec::NbDifference {
        k,
        r_plus,
        r_minus,
        residue,
        step: 5,
    }
}

fn product(terms: Vec<ProductTerm>) -> LhsSpec {
    LhsSpec::Product {
        expr: ProductExpr::of(terms),
        dissect: None,
    }
}

/// The complete, immutable case list. Order is the reporting order.
pub fn registry() -> &'static [IdentityCase] {
    static REGISTRY: OnceLock<Vec<IdentityCase>> = OnceLock::new();
    REGISTRY.get_or_init(build)
}

fn build() -> Vec<IdentityCase> {
    let mut cases = Vec::new();

    // ----- Weighted two-color combinations per residue class -----

    cases.push(IdentityCase {
        id: "eq-1-6",
        class: CaseClass::Theorem,
        lhs: combo(2, [0, 1, -3, 3, -1], 0),
        rhs: ProductExpr::of(vec![t(5, 1)
            .q(1)
            .p(1, 5, 1)
            .p(4, 5, 1)
            .p(5, 5, 2)
            .p(2, 5, -3)
            .p(3, 5, -3)]),
        citation: "(1.6): sum [NB2(1,5,5n) - 3 NB2(2,5,5n) + 3 NB2(3,5,5n) \
                   - NB2(4,5,5n)] q^n = 5q P(1,5) P(4,5) P(5,5)^2 / (P(2,5)^3 P(3,5)^3)",
    });

    cases.push(IdentityCase {
        id: "eq-1-7",
        class: CaseClass::Theorem,
        lhs: combo(2, [0, 1, 2, -2, -1], 2),
        rhs: ProductExpr::of(vec![t(5, 1).p(5, 5, 2).p(1, 5, -2).p(4, 5, -2)]),
        citation: "(1.7): sum [NB2(1,5,5n+2) + 2 NB2(2,5,5n+2) - 2 NB2(3,5,5n+2) \
                   - NB2(4,5,5n+2)] q^n = 5 P(5,5)^2 / (P(1,5)^2 P(4,5)^2)",
    });

    cases.push(IdentityCase {
        id: "eq-1-8",
        class: CaseClass::Theorem,
        lhs: combo(2, [0, 1, 2, -2, -1], 3),
        rhs: ProductExpr::zero(),
        citation: "(1.8): NB2(1,5,5n+3) + 2 NB2(2,5,5n+3) - 2 NB2(3,5,5n+3) \
                   - NB2(4,5,5n+3) = 0",
    });

    cases.push(IdentityCase {
        id: "eq-1-9",
        class: CaseClass::Theorem,
        lhs: combo25(2, [0, 1, 0, 0, -1], 23),
        rhs: ProductExpr::of(vec![t(10, 1).p(5, 5, 5).p(1, 1, -3)]),
        citation: "(1.9): sum [NB2(1,5,25n+23) - NB2(4,5,25n+23)] q^n \
                   = 10 P(5,5)^5 / E^3",
    });

    cases.push(IdentityCase {
        id: "eq-1-10",
        class: CaseClass::Theorem,
        lhs: combo25(2, [0, 0, 1, -1, 0], 23),
        rhs: ProductExpr::of(vec![t(-5, 1).p(5, 5, 5).p(1, 1, -3)]),
        citation: "(1.10): sum [NB2(2,5,25n+23) - NB2(3,5,25n+23)] q^n \
                   = -5 P(5,5)^5 / E^3",
    });

    cases.push(IdentityCase {
        id: "eq-1-11",
        class: CaseClass::Theorem,
        lhs: combo(2, [0, 1, 2, -2, -1], 4),
        rhs: ProductExpr::of(vec![t(5, 1).p(5, 5, 2).p(2, 5, -2).p(3, 5, -2)]),
        citation: "(1.11): sum [NB2(1,5,5n+4) + 2 NB2(2,5,5n+4) - 2 NB2(3,5,5n+4) \
                   - NB2(4,5,5n+4)] q^n = 5 P(5,5)^2 / (P(2,5)^2 P(3,5)^2)",
    });

    // ----- Three colors, residue 0 -----

    cases.push(IdentityCase {
        id: "eq-1-12",
        class: CaseClass::Theorem,
        lhs: combo(3, [0, 1, 2, -2, -1], 0),
        rhs: ProductExpr::of(vec![
            t(1, 2).p(2, 5, 1).p(3, 5, 1).p(5, 5, 1).p(1, 5, -3).p(4, 5, -3),
            t(-1, 2)
                .p(2, 5, 1)
                .p(3, 5, 1)
                .p(5, 5, 2)
                .p(1, 1, -5)
                .p(1, 5, -3)
                .p(4, 5, -3),
            t(-5, 1)
                .theta(ThetaKind::Weighted)
                .p(2, 5, 1)
                .p(3, 5, 1)
                .p(5, 5, 2)
                .p(1, 1, -6)
                .p(1, 5, -2)
                .p(4, 5, -2),
            t(30, 1)
                .q(1)
                .p(2, 5, 1)
                .p(3, 5, 1)
                .p(5, 5, 7)
                .p(1, 1, -6)
                .p(1, 5, -3)
                .p(4, 5, -3),
            t(45, 2)
                .q(2)
                .p(1, 5, 2)
                .p(4, 5, 2)
                .p(5, 5, 7)
                .p(1, 1, -6)
                .p(2, 5, -4)
                .p(3, 5, -4),
            t(-5, 2).q(1).p(5, 5, 5).p(1, 1, -6).p(2, 5, -1).p(3, 5, -1),
        ]),
        citation: "(1.12): sum [NB3(1,5,5n) - NB3(4,5,5n) + 2 NB3(2,5,5n) \
                   - 2 NB3(3,5,5n)] q^n = P(2,5)P(3,5)P(5,5)/(2 P(1,5)^3 P(4,5)^3) \
                   - P(2,5)P(3,5)P(5,5)^2/(2 E^5 P(1,5)^3 P(4,5)^3) \
                   - 5 thetaN P(2,5)P(3,5)P(5,5)^2/(E^6 P(1,5)^2 P(4,5)^2) \
                   + (15q P(2,5)P(3,5)P(5,5)^7/(2 E^6 P(1,5)^3 P(4,5)^3)) \
                   (4 + 3q P(1,5)^5 P(4,5)^5/(P(2,5)^5 P(3,5)^5)) \
                   - 5q P(5,5)^5/(2 E^6 P(2,5) P(3,5)), distributed",
    });

    // ----- Four colors -----

    cases.push(IdentityCase {
        id: "eq-1-13",
        class: CaseClass::Theorem,
        lhs: combo(4, [0, 1, 2, -2, -1], 0),
        rhs: ProductExpr::of(vec![
            // Bracket multiplied by 5 thetaN, distributed into the constants.
            t(-35, 1)
                .q(3)
                .theta(ThetaKind::Weighted)
                .p(1, 5, 6)
                .p(4, 5, 6)
                .p(5, 5, 9)
                .p(2, 5, -8)
                .p(3, 5, -8)
                .p(1, 1, -12),
            t(60, 1)
                .q(2)
                .theta(ThetaKind::Weighted)
                .p(1, 5, 1)
                .p(4, 5, 1)
                .p(5, 5, 9)
                .p(2, 5, -3)
                .p(3, 5, -3)
                .p(1, 1, -12),
            t(-20, 1)
                .q(1)
                .theta(ThetaKind::Weighted)
                .p(2, 5, 2)
                .p(3, 5, 2)
                .p(5, 5, 9)
                .p(1, 5, -4)
                .p(4, 5, -4)
                .p(1, 1, -12),
            t(-45, 1)
                .theta(ThetaKind::Weighted)
                .p(2, 5, 7)
                .p(3, 5, 7)
                .p(5, 5, 9)
                .p(1, 5, -9)
                .p(4, 5, -9)
                .p(1, 1, -12),
            t(100, 1)
                .q(2)
                .theta(ThetaKind::Weighted)
                .p(1, 5, 4)
                .p(4, 5, 4)
                .p(5, 5, 7)
                .p(2, 5, -5)
                .p(3, 5, -5)
                .p(1, 1, -12),
            t(-25, 1)
                .q(1)
                .theta(ThetaKind::Weighted)
                .p(5, 5, 7)
                .p(1, 5, -1)
                .p(4, 5, -1)
                .p(1, 1, -12),
            t(25, 1)
                .theta(ThetaKind::Weighted)
                .p(2, 5, 5)
                .p(3, 5, 5)
                .p(5, 5, 7)
                .p(1, 5, -6)
                .p(4, 5, -6)
                .p(1, 1, -12),
            // Plain terms.
            t(10, 1)
                .q(2)
                .p(1, 5, 4)
                .p(4, 5, 4)
                .p(5, 5, 8)
                .p(2, 5, -4)
                .p(3, 5, -4)
                .p(1, 1, -12),
            t(-5, 2)
                .q(1)
                .p(2, 5, 1)
                .p(3, 5, 1)
                .p(5, 5, 8)
                .p(1, 5, -1)
                .p(4, 5, -1)
                .p(1, 1, -12),
            t(5, 2)
                .p(2, 5, 6)
                .p(3, 5, 6)
                .p(5, 5, 8)
                .p(1, 5, -6)
                .p(4, 5, -6)
                .p(1, 1, -12),
            t(-305, 2)
                .q(3)
                .p(1, 5, 3)
                .p(4, 5, 3)
                .p(5, 5, 12)
                .p(2, 5, -5)
                .p(3, 5, -5)
                .p(1, 1, -12),
            t(335, 2)
                .q(2)
                .p(5, 5, 12)
                .p(1, 5, -2)
                .p(4, 5, -2)
                .p(1, 1, -12),
            t(85, 1)
                .q(1)
                .p(2, 5, 5)
                .p(3, 5, 5)
                .p(5, 5, 12)
                .p(1, 5, -7)
                .p(4, 5, -7)
                .p(1, 1, -12),
            t(5, 1)
                .p(2, 5, 10)
                .p(3, 5, 10)
                .p(5, 5, 12)
                .p(1, 5, -12)
                .p(4, 5, -12)
                .p(1, 1, -12),
            t(25, 1)
                .q(3)
                .p(1, 5, 6)
                .p(4, 5, 6)
                .p(5, 5, 10)
                .p(2, 5, -7)
                .p(3, 5, -7)
                .p(1, 1, -12),
            t(-15, 1)
                .q(2)
                .p(1, 5, 1)
                .p(4, 5, 1)
                .p(5, 5, 10)
                .p(2, 5, -2)
                .p(3, 5, -2)
                .p(1, 1, -12),
            t(-10, 1)
                .q(1)
                .p(2, 5, 3)
                .p(3, 5, 3)
                .p(5, 5, 10)
                .p(1, 5, -4)
                .p(4, 5, -4)
                .p(1, 1, -12),
            t(-15, 2)
                .p(2, 5, 8)
                .p(3, 5, 8)
                .p(5, 5, 10)
                .p(1, 5, -9)
                .p(4, 5, -9)
                .p(1, 1, -12),
        ]),
        citation: "(1.13): sum [NB4(1,5,5n) - NB4(4,5,5n) + 2 NB4(2,5,5n) \
                   - 2 NB4(3,5,5n)] q^n = 5 thetaN (-7q^3 ... + 5 ...) + 10q^2 ... \
                   - 15/2 ...; 18 eta-quotient terms over E^12, encoded as printed",
    });

    cases.push(IdentityCase {
        id: "eq-1-14",
        class: CaseClass::Theorem,
        lhs: combo(4, [0, 1, 2, -2, -1], 3),
        rhs: ProductExpr::of(vec![
            t(55, 1)
                .q(3)
                .p(1, 5, 6)
                .p(4, 5, 6)
                .p(5, 5, 12)
                .p(2, 5, -8)
                .p(3, 5, -8)
                .p(1, 1, -12),
            t(-335, 2)
                .q(2)
                .p(1, 5, 1)
                .p(4, 5, 1)
                .p(5, 5, 12)
                .p(2, 5, -3)
                .p(3, 5, -3)
                .p(1, 1, -12),
            t(260, 1)
                .q(1)
                .p(2, 5, 2)
                .p(3, 5, 2)
                .p(5, 5, 12)
                .p(1, 5, -4)
                .p(4, 5, -4)
                .p(1, 1, -12),
            t(45, 2)
                .p(2, 5, 7)
                .p(3, 5, 7)
                .p(5, 5, 12)
                .p(1, 5, -9)
                .p(4, 5, -9)
                .p(1, 1, -12),
            t(-5, 1)
                .q(2)
                .p(1, 5, 4)
                .p(4, 5, 4)
                .p(5, 5, 10)
                .p(2, 5, -5)
                .p(3, 5, -5)
                .p(1, 1, -12),
            t(-35, 2)
                .q(1)
                .p(5, 5, 10)
                .p(1, 5, -1)
                .p(4, 5, -1)
                .p(1, 1, -12),
            t(-15, 2)
                .p(2, 5, 5)
                .p(3, 5, 5)
                .p(5, 5, 10)
                .p(1, 5, -6)
                .p(4, 5, -6)
                .p(1, 1, -12),
        ]),
        citation: "(1.14): sum [NB4(1,5,5n+3) - NB4(4,5,5n+3) + 2 NB4(2,5,5n+3) \
                   - 2 NB4(3,5,5n+3)] q^n = 55q^3 P(1,5)^6 P(4,5)^6 P(5,5)^12 / \
                   (P(2,5)^8 P(3,5)^8 E^12) - 335/2 q^2 ... - 15/2 ...; 7 terms",
    });

    cases.push(IdentityCase {
        id: "eq-1-15",
        class: CaseClass::Theorem,
        lhs: combo(4, [0, 1, 2, -2, -1], 4),
        rhs: ProductExpr::of(vec![
            t(-45, 2)
                .q(3)
                .p(1, 5, 7)
                .p(4, 5, 7)
                .p(5, 5, 12)
                .p(2, 5, -9)
                .p(3, 5, -9)
                .p(1, 1, -12),
            t(260, 1)
                .q(2)
                .p(1, 5, 2)
                .p(4, 5, 2)
                .p(5, 5, 12)
                .p(2, 5, -4)
                .p(3, 5, -4)
                .p(1, 1, -12),
            t(335, 2)
                .q(1)
                .p(2, 5, 1)
                .p(3, 5, 1)
                .p(5, 5, 12)
                .p(1, 5, -3)
                .p(4, 5, -3)
                .p(1, 1, -12),
            t(55, 1)
                .p(2, 5, 6)
                .p(3, 5, 6)
                .p(5, 5, 12)
                .p(1, 5, -8)
                .p(4, 5, -8)
                .p(1, 1, -12),
            t(5, 2)
                .q(2)
                .p(1, 5, 5)
                .p(4, 5, 5)
                .p(5, 5, 10)
                .p(2, 5, -6)
                .p(3, 5, -6)
                .p(1, 1, -12),
            t(5, 2)
                .q(1)
                .p(5, 5, 10)
                .p(2, 5, -1)
                .p(3, 5, -1)
                .p(1, 1, -12),
            t(-15, 1)
                .p(2, 5, 4)
                .p(3, 5, 4)
                .p(5, 5, 10)
                .p(1, 5, -5)
                .p(4, 5, -5)
                .p(1, 1, -12),
        ]),
        citation: "(1.15): sum [NB4(1,5,5n+4) - NB4(4,5,5n+4) + 2 NB4(2,5,5n+4) \
                   - 2 NB4(3,5,5n+4)] q^n = -45/2 q^3 P(1,5)^7 P(4,5)^7 P(5,5)^12 / \
                   (P(2,5)^9 P(3,5)^9 E^12) + 260q^2 ... - 15 ...; 7 terms",
    });

    // ----- Five colors -----

    cases.push(IdentityCase {
        id: "eq-1-16",
        class: CaseClass::Theorem,
        lhs: combo(5, [0, 1, 3, -3, -1], 2),
        rhs: ProductExpr::of(vec![
            t(-70, 1)
                .q(5)
                .p(1, 5, 11)
                .p(4, 5, 11)
                .p(5, 5, 17)
                .p(2, 5, -13)
                .p(3, 5, -13)
                .p(1, 1, -18),
            t(2165, 1)
                .q(4)
                .p(1, 5, 6)
                .p(4, 5, 6)
                .p(5, 5, 17)
                .p(2, 5, -8)
                .p(3, 5, -8)
                .p(1, 1, -18),
            t(-3265, 2)
                .q(3)
                .p(1, 5, 1)
                .p(4, 5, 1)
                .p(5, 5, 17)
                .p(2, 5, -3)
                .p(3, 5, -3)
                .p(1, 1, -18),
            t(5745, 2)
                .q(2)
                .p(2, 5, 2)
                .p(3, 5, 2)
                .p(5, 5, 17)
                .p(1, 5, -4)
                .p(4, 5, -4)
                .p(1, 1, -18),
            t(1965, 2)
                .q(1)
                .p(2, 5, 7)
                .p(3, 5, 7)
                .p(5, 5, 17)
                .p(1, 5, -9)
                .p(4, 5, -9)
                .p(1, 1, -18),
            t(35, 2)
                .p(2, 5, 12)
                .p(3, 5, 12)
                .p(5, 5, 17)
                .p(1, 5, -14)
                .p(4, 5, -14)
                .p(1, 1, -18),
            t(10, 1)
                .q(4)
                .p(1, 5, 9)
                .p(4, 5, 9)
                .p(5, 5, 15)
                .p(2, 5, -10)
                .p(3, 5, -10)
                .p(1, 1, -18),
            t(-45, 1)
                .q(3)
                .p(1, 5, 4)
                .p(4, 5, 4)
                .p(5, 5, 15)
                .p(2, 5, -5)
                .p(3, 5, -5)
                .p(1, 1, -18),
            t(-165, 2)
                .q(2)
                .p(5, 5, 15)
                .p(1, 5, -1)
                .p(4, 5, -1)
                .p(1, 1, -18),
            t(-200, 1)
                .q(1)
                .p(2, 5, 5)
                .p(3, 5, 5)
                .p(5, 5, 15)
                .p(1, 5, -6)
                .p(4, 5, -6)
                .p(1, 1, -18),
            t(-15, 2)
                .p(2, 5, 10)
                .p(3, 5, 10)
                .p(5, 5, 15)
                .p(1, 5, -11)
                .p(4, 5, -11)
                .p(1, 1, -18),
        ]),
        citation: "(1.16): sum [NB5(1,5,5n+2) - NB5(4,5,5n+2) + 3 NB5(2,5,5n+2) \
                   - 3 NB5(3,5,5n+2)] q^n = -70q^5 P(1,5)^11 P(4,5)^11 P(5,5)^17 / \
                   (P(2,5)^13 P(3,5)^13 E^18) + 2165q^4 ... - 15/2 ...; 11 terms",
    });

    cases.push(IdentityCase {
        id: "eq-1-17",
        class: CaseClass::Theorem,
        lhs: combo(5, [0, 1, 3, -3, -1], 4),
        rhs: ProductExpr::of(vec![
            // Bracket multiplied by 5 thetaN. The 10540 below is 5 * 2108,
            // the coefficient exactly as printed in the source display; it
            // is far out of scale with its neighbors and is expected to be
            // a misprint. Encoded verbatim so the verifier can localize it.
            t(10, 1)
                .q(4)
                .theta(ThetaKind::Weighted)
                .p(1, 5, 11)
                .p(4, 5, 11)
                .p(5, 5, 14)
                .p(2, 5, -13)
                .p(3, 5, -13)
                .p(1, 1, -18),
            t(-5, 1)
                .q(3)
                .theta(ThetaKind::Weighted)
                .p(1, 5, 6)
                .p(4, 5, 6)
                .p(5, 5, 14)
                .p(2, 5, -8)
                .p(3, 5, -8)
                .p(1, 1, -18),
            t(10540, 1)
                .q(2)
                .theta(ThetaKind::Weighted)
                .p(1, 5, 1)
                .p(4, 5, 1)
                .p(5, 5, 14)
                .p(2, 5, -3)
                .p(3, 5, -3)
                .p(1, 1, -18),
            t(-20, 1)
                .q(1)
                .theta(ThetaKind::Weighted)
                .p(2, 5, 2)
                .p(3, 5, 2)
                .p(5, 5, 14)
                .p(1, 5, -4)
                .p(4, 5, -4)
                .p(1, 1, -18),
            t(-15, 1)
                .theta(ThetaKind::Weighted)
                .p(2, 5, 7)
                .p(3, 5, 7)
                .p(5, 5, 14)
                .p(1, 5, -9)
                .p(4, 5, -9)
                .p(1, 1, -18),
            t(-25, 1)
                .q(3)
                .theta(ThetaKind::Weighted)
                .p(1, 5, 9)
                .p(4, 5, 9)
                .p(5, 5, 12)
                .p(2, 5, -10)
                .p(3, 5, -10)
                .p(1, 1, -18),
            t(150, 1)
                .q(2)
                .theta(ThetaKind::Weighted)
                .p(1, 5, 4)
                .p(4, 5, 4)
                .p(5, 5, 12)
                .p(2, 5, -5)
                .p(3, 5, -5)
                .p(1, 1, -18),
            // Plain terms.
            t(-5, 2)
                .q(5)
                .p(1, 5, 13)
                .p(4, 5, 13)
                .p(5, 5, 17)
                .p(2, 5, -15)
                .p(3, 5, -15)
                .p(1, 1, -18),
            t(825, 1)
                .q(4)
                .p(1, 5, 8)
                .p(4, 5, 8)
                .p(5, 5, 17)
                .p(2, 5, -10)
                .p(3, 5, -10)
                .p(1, 1, -18),
            t(1865, 2)
                .q(2)
                .p(5, 5, 17)
                .p(1, 5, -2)
                .p(4, 5, -2)
                .p(1, 1, -18),
            t(4125, 2)
                .q(1)
                .p(2, 5, 5)
                .p(3, 5, 5)
                .p(5, 5, 17)
                .p(1, 5, -7)
                .p(4, 5, -7)
                .p(1, 1, -18),
            t(275, 2)
                .p(2, 5, 10)
                .p(3, 5, 10)
                .p(5, 5, 17)
                .p(1, 5, -12)
                .p(4, 5, -12)
                .p(1, 1, -18),
            t(-5, 1)
                .q(4)
                .p(1, 5, 11)
                .p(4, 5, 11)
                .p(5, 5, 15)
                .p(2, 5, -12)
                .p(3, 5, -12)
                .p(1, 1, -18),
            t(1895, 2)
                .q(2)
                .p(1, 5, 1)
                .p(4, 5, 1)
                .p(5, 5, 15)
                .p(2, 5, -2)
                .p(3, 5, -2)
                .p(1, 1, -18),
            t(-245, 1)
                .q(1)
                .p(2, 5, 3)
                .p(3, 5, 3)
                .p(5, 5, 15)
                .p(1, 5, -4)
                .p(4, 5, -4)
                .p(1, 1, -18),
            t(-95, 2)
                .p(2, 5, 8)
                .p(3, 5, 8)
                .p(5, 5, 15)
                .p(1, 5, -9)
                .p(4, 5, -9)
                .p(1, 1, -18),
            t(-5, 2)
                .q(3)
                .p(1, 5, 9)
                .p(4, 5, 9)
                .p(5, 5, 13)
                .p(2, 5, -9)
                .p(3, 5, -9)
                .p(1, 1, -18),
            t(15, 1)
                .q(2)
                .p(1, 5, 4)
                .p(4, 5, 4)
                .p(5, 5, 13)
                .p(2, 5, -4)
                .p(3, 5, -4)
                .p(1, 1, -18),
        ]),
        citation: "(1.17): sum [NB5(1,5,5n+4) - NB5(4,5,5n+4) + 3 NB5(2,5,5n+4) \
                   - 3 NB5(3,5,5n+4)] q^n = 5 thetaN (2q^4 ... + 2108q^2 \
                   P(1,5)P(4,5)P(5,5)^14/(P(2,5)^3 P(3,5)^3 E^18) ... + 30q^2 ...) \
                   - 5/2 q^5 ... + 15q^2 ...; 18 terms, 2108 as printed",
    });

    // ----- Lambert blocks -----

    cases.push(IdentityCase {
        id: "eq-2-3",
        class: CaseClass::Lemma,
        lhs: LhsSpec::Lambert(LambertExpr::x(4, 1, 0).expect("valid block")),
        rhs: ProductExpr::zero(),
        citation: "(2.3): X(4,1,0) = 0",
    });

    cases.push(IdentityCase {
        id: "eq-2-4",
        class: CaseClass::Lemma,
        lhs: LhsSpec::Lambert(LambertExpr::x(3, 1, 0).expect("valid block")),
        rhs: ProductExpr::of(vec![t(1, 1).p(5, 5, 2).p(2, 5, -1).p(3, 5, -1)]),
        citation: "(2.4): X(3,1,0) = P(5,5)^2 / (P(2,5) P(3,5))",
    });

    cases.push(IdentityCase {
        id: "eq-2-5",
        class: CaseClass::Lemma,
        lhs: LhsSpec::Lambert(LambertExpr::x(2, 1, 0).expect("valid block")),
        rhs: ProductExpr::of(vec![t(1, 1).p(5, 5, 2).p(1, 5, -1).p(4, 5, -1)]),
        citation: "(2.5): X(2,1,0) = P(5,5)^2 / (P(1,5) P(4,5))",
    });

    cases.push(IdentityCase {
        id: "eq-2-6",
        class: CaseClass::Lemma,
        lhs: LhsSpec::Lambert(LambertExpr::x(1, 1, 0).expect("valid block")),
        rhs: ProductExpr::of(vec![t(1, 1)
            .p(2, 5, 1)
            .p(3, 5, 1)
            .p(5, 5, 2)
            .p(1, 5, -2)
            .p(4, 5, -2)]),
        citation: "(2.6): X(1,1,0) = P(2,5) P(3,5) P(5,5)^2 / (P(1,5)^2 P(4,5)^2)",
    });

    cases.push(IdentityCase {
        id: "eq-2-7",
        class: CaseClass::Lemma,
        lhs: LhsSpec::Lambert(LambertExpr::x(2, 2, 0).expect("valid block")),
        rhs: ProductExpr::of(vec![t(1, 1)
            .p(1, 5, 1)
            .p(4, 5, 1)
            .p(5, 5, 2)
            .p(2, 5, -2)
            .p(3, 5, -2)]),
        citation: "(2.7): X(2,2,0) = P(1,5) P(4,5) P(5,5)^2 / (P(2,5)^2 P(3,5)^2)",
    });

    cases.push(IdentityCase {
        id: "eq-2-8",
        class: CaseClass::Lemma,
        lhs: LhsSpec::Lambert(LambertExpr::x(4, 2, 1).expect("valid block")),
        rhs: ProductExpr::of(vec![t(-1, 1).p(5, 5, 2).p(2, 5, -1).p(3, 5, -1)]),
        citation: "(2.8): X(4,2,1) = -P(5,5)^2 / (P(2,5) P(3,5))",
    });

    cases.push(IdentityCase {
        id: "eq-2-9",
        class: CaseClass::Lemma,
        lhs: LhsSpec::Lambert(LambertExpr::x(1, 2, 0).expect("valid block")),
        rhs: ProductExpr::of(vec![t(1, 1).p(5, 5, 2).p(1, 5, -1).p(4, 5, -1)]),
        citation: "(2.9): X(1,2,0) = P(5,5)^2 / (P(1,5) P(4,5))",
    });

    cases.push(IdentityCase {
        id: "eq-2-10",
        class: CaseClass::Lemma,
        lhs: LhsSpec::Lambert(LambertExpr::x(3, 2, 1).expect("valid block")),
        rhs: ProductExpr::zero(),
        citation: "(2.10): X(3,2,1) = 0",
    });

    cases.push(IdentityCase {
        id: "eq-2-11",
        class: CaseClass::Lemma,
        lhs: LhsSpec::Lambert(LambertExpr::y(1).expect("valid block")),
        rhs: ProductExpr::of(vec![
            t(3, 10).p(2, 5, 2).p(3, 5, 2).p(5, 5, 2).p(1, 5, -3).p(4, 5, -3),
            t(1, 10).q(1).p(1, 5, 2).p(4, 5, 2).p(5, 5, 2).p(2, 5, -3).p(3, 5, -3),
            t(-3, 10),
        ]),
        citation: "(2.11): Y(1) = 3 P(2,5)^2 P(3,5)^2 P(5,5)^2 / (10 P(1,5)^3 \
                   P(4,5)^3) + q P(1,5)^2 P(4,5)^2 P(5,5)^2 / (10 P(2,5)^3 \
                   P(3,5)^3) - 3/10",
    });

    cases.push(IdentityCase {
        id: "eq-2-12",
        class: CaseClass::Lemma,
        lhs: LhsSpec::Lambert(LambertExpr::y(2).expect("valid block")),
        rhs: ProductExpr::of(vec![
            t(1, 10).p(2, 5, 2).p(3, 5, 2).p(5, 5, 2).p(1, 5, -3).p(4, 5, -3),
            t(-3, 10).q(1).p(1, 5, 2).p(4, 5, 2).p(5, 5, 2).p(2, 5, -3).p(3, 5, -3),
            t(-1, 10),
        ]),
        citation: "(2.12): Y(2) = P(2,5)^2 P(3,5)^2 P(5,5)^2 / (10 P(1,5)^3 \
                   P(4,5)^3) - 3q P(1,5)^2 P(4,5)^2 P(5,5)^2 / (10 P(2,5)^3 \
                   P(3,5)^3) - 1/10",
    });

    // ----- Quotient and dissection identities -----
    // The next two displays involve the Rogers-Ramanujan quotient
    // R = q^(1/5) P(1,5) P(4,5) / (P(2,5) P(3,5)); both sides here are the
    // integral-exponent normalizations (multiplied through by the
    // fractional power).

    cases.push(IdentityCase {
        id: "eq-2-13",
        class: CaseClass::Lemma,
        lhs: product(vec![
            t(1, 1).p(2, 5, 5).p(3, 5, 5).p(1, 5, -5).p(4, 5, -5),
            t(-11, 1).q(1),
            t(-1, 1).q(2).p(1, 5, 5).p(4, 5, 5).p(2, 5, -5).p(3, 5, -5),
        ]),
        rhs: ProductExpr::of(vec![t(1, 1).p(1, 1, 6).p(5, 5, -6)]),
        citation: "(2.13): q/R^5 - 11q - q R^5 = E^6 / P(5,5)^6, \
                   with q/R^5 = P(2,5)^5 P(3,5)^5 / (P(1,5)^5 P(4,5)^5)",
    });

    cases.push(IdentityCase {
        id: "eq-2-14",
        class: CaseClass::Lemma,
        lhs: product(vec![
            t(1, 1).p(2, 5, 3).p(3, 5, 3).p(1, 5, -3).p(4, 5, -3),
            t(-3, 1).q(1).p(1, 5, 2).p(4, 5, 2).p(2, 5, -2).p(3, 5, -2),
        ]),
        rhs: ProductExpr::of(vec![
            t(10, 1).theta(ThetaKind::Weighted).p(5, 5, -3),
            t(1, 1).p(2, 5, 1).p(3, 5, 1).p(5, 5, -2),
        ]),
        citation: "(2.14): q^(3/5)/R^3 - 3 q^(3/5) R^2 = 10 thetaN / P(5,5)^3 \
                   + P(2,5) P(3,5) / P(5,5)^2",
    });

    cases.push(IdentityCase {
        id: "eq-2-15",
        class: CaseClass::Lemma,
        lhs: product(vec![t(1, 1).p(1, 1, -1)]),
        rhs: five_dissection_expr(),
        citation: "(2.15): 1/E = P(25,25)^5/P(5,5)^6 (T^4 + qT^3 + 2q^2 T^2 \
                   + 3q^3 T + 5q^4 - 3q^5/T + 2q^6/T^2 - q^7/T^3 + q^8/T^4), \
                   T = P(10,25) P(15,25) / (P(5,25) P(20,25))",
    });

    cases.push(IdentityCase {
        id: "theta-10n1",
        class: CaseClass::Lemma,
        lhs: product(vec![
            t(1, 1).p(2, 5, 3).p(3, 5, 3).p(1, 5, -3).p(4, 5, -3),
            t(-3, 1).q(1).p(1, 5, 2).p(4, 5, 2).p(2, 5, -2).p(3, 5, -2),
        ]),
        rhs: ProductExpr::of(vec![
            t(10, 1).theta(ThetaKind::Weighted).p(5, 5, -3),
            t(1, 1).theta(ThetaKind::Plain).p(5, 5, -3),
        ]),
        citation: "(2.17): q^(3/5)/R^3 - 3 q^(3/5) R^2 = (1/P(5,5)^3) \
                   sum (-1)^n (10n+1) q^(n(5n+1)/2)",
    });

    cases.push(IdentityCase {
        id: "theta-jtp",
        class: CaseClass::Lemma,
        lhs: product(vec![t(1, 1).theta(ThetaKind::Plain)]),
        rhs: ProductExpr::of(vec![t(1, 1).p(2, 5, 1).p(3, 5, 1).p(5, 5, 1)]),
        citation: "(2.18): sum (-1)^n q^(n(5n+1)/2) = P(2,5) P(3,5) P(5,5) \
                   (triple product)",
    });

    // ----- Single-difference extractions, two colors -----
    // V = 1/(P(1,5) P(4,5)) and W = 1/(P(2,5) P(3,5)); the first case in
    // each residue pair keeps the V/W-block structure, the second carries
    // the collected form, so the two encodings check each other.

    cases.push(IdentityCase {
        id: "eq-3-5",
        class: CaseClass::Dissection,
        lhs: diff(2, 1, 4, 0),
        rhs: ProductExpr::of(vec![
            // V(q) Y(1), by the Y(1) product form, term by term.
            t(3, 10).p(2, 5, 2).p(3, 5, 2).p(5, 5, 2).p(1, 5, -4).p(4, 5, -4),
            t(1, 10).q(1).p(1, 5, 1).p(4, 5, 1).p(5, 5, 2).p(2, 5, -3).p(3, 5, -3),
            t(-3, 10).p(1, 5, -1).p(4, 5, -1),
            // q W(q) X(2,2,0), by the X(2,2,0) product form.
            t(1, 1).q(1).p(1, 5, 1).p(4, 5, 1).p(5, 5, 2).p(2, 5, -3).p(3, 5, -3),
        ]),
        citation: "(3.5): sum [NB2(1,5,5n) - NB2(4,5,5n)] q^n = V Y(1) + qW X(2,2,0)",
    });

    cases.push(IdentityCase {
        id: "eq-3-6",
        class: CaseClass::Dissection,
        lhs: diff(2, 1, 4, 0),
        rhs: ProductExpr::of(vec![
            t(3, 10).p(2, 5, 2).p(3, 5, 2).p(5, 5, 2).p(1, 5, -4).p(4, 5, -4),
            t(11, 10).q(1).p(1, 5, 1).p(4, 5, 1).p(5, 5, 2).p(2, 5, -3).p(3, 5, -3),
            t(-3, 10).p(1, 5, -1).p(4, 5, -1),
        ]),
        citation: "(3.6): sum [NB2(1,5,5n) - NB2(4,5,5n)] q^n = 3 P(2,5)^2 P(3,5)^2 \
                   P(5,5)^2 / (10 P(1,5)^4 P(4,5)^4) + 11q P(1,5) P(4,5) P(5,5)^2 / \
                   (10 P(2,5)^3 P(3,5)^3) - 3 / (10 P(1,5) P(4,5))",
    });

    cases.push(IdentityCase {
        id: "eq-3-7",
        class: CaseClass::Dissection,
        lhs: diff(2, 2, 3, 0),
        rhs: ProductExpr::of(vec![
            t(1, 10).p(2, 5, 2).p(3, 5, 2).p(5, 5, 2).p(1, 5, -4).p(4, 5, -4),
            t(-13, 10).q(1).p(1, 5, 1).p(4, 5, 1).p(5, 5, 2).p(2, 5, -3).p(3, 5, -3),
            t(-1, 10).p(1, 5, -1).p(4, 5, -1),
        ]),
        citation: "(3.7): sum [NB2(2,5,5n) - NB2(3,5,5n)] q^n = P(2,5)^2 P(3,5)^2 \
                   P(5,5)^2 / (10 P(1,5)^4 P(4,5)^4) - 13q P(1,5) P(4,5) P(5,5)^2 / \
                   (10 P(2,5)^3 P(3,5)^3) - 1 / (10 P(1,5) P(4,5))",
    });

    cases.push(IdentityCase {
        id: "eq-3-8",
        class: CaseClass::Dissection,
        lhs: diff(2, 1, 4, 2),
        rhs: ProductExpr::of(vec![t(1, 1).p(5, 5, 2).p(1, 5, -2).p(4, 5, -2)]),
        citation: "(3.8): sum [NB2(1,5,5n+2) - NB2(4,5,5n+2)] q^n \
                   = P(5,5)^2 / (P(1,5)^2 P(4,5)^2)",
    });

    cases.push(IdentityCase {
        id: "eq-3-9",
        class: CaseClass::Dissection,
        lhs: diff(2, 2, 3, 2),
        rhs: ProductExpr::of(vec![t(2, 1).p(5, 5, 2).p(1, 5, -2).p(4, 5, -2)]),
        citation: "(3.9): sum [NB2(2,5,5n+2) - NB2(3,5,5n+2)] q^n \
                   = 2 P(5,5)^2 / (P(1,5)^2 P(4,5)^2)",
    });

    cases.push(IdentityCase {
        id: "eq-3-10",
        class: CaseClass::Dissection,
        lhs: diff(2, 1, 4, 3),
        rhs: ProductExpr::of(vec![
            // V X(3,1,0) + W X(1,2,0): the two blocks contribute equal
            // products, which is why the collected form has the factor 2.
            t(1, 1).p(5, 5, 2).p(1, 5, -1).p(4, 5, -1).p(2, 5, -1).p(3, 5, -1),
            t(1, 1).p(5, 5, 2).p(2, 5, -1).p(3, 5, -1).p(1, 5, -1).p(4, 5, -1),
        ]),
        citation: "(3.10): sum [NB2(1,5,5n+3) - NB2(4,5,5n+3)] q^n \
                   = V X(3,1,0) + W X(1,2,0)",
    });

    cases.push(IdentityCase {
        id: "eq-3-11",
        class: CaseClass::Dissection,
        lhs: diff(2, 2, 3, 3),
        rhs: ProductExpr::of(vec![
            // V X(4,2,1) + W (X(2,1,0) - X(1,2,0)); the last two cancel.
            t(-1, 1).p(5, 5, 2).p(1, 5, -1).p(4, 5, -1).p(2, 5, -1).p(3, 5, -1),
            t(1, 1).p(5, 5, 2).p(2, 5, -1).p(3, 5, -1).p(1, 5, -1).p(4, 5, -1),
            t(-1, 1).p(5, 5, 2).p(2, 5, -1).p(3, 5, -1).p(1, 5, -1).p(4, 5, -1),
        ]),
        citation: "(3.11): sum [NB2(2,5,5n+3) - NB2(3,5,5n+3)] q^n \
                   = V X(4,2,1) + W (X(2,1,0) - X(1,2,0))",
    });

    cases.push(IdentityCase {
        id: "eq-3-12",
        class: CaseClass::Dissection,
        lhs: diff(2, 1, 4, 3),
        rhs: ProductExpr::of(vec![t(2, 1).p(5, 5, 3).p(1, 1, -1)]),
        citation: "(3.12): sum [NB2(1,5,5n+3) - NB2(4,5,5n+3)] q^n = 2 P(5,5)^3 / E",
    });

    cases.push(IdentityCase {
        id: "eq-3-13",
        class: CaseClass::Dissection,
        lhs: diff(2, 2, 3, 3),
        rhs: ProductExpr::of(vec![t(-1, 1).p(5, 5, 3).p(1, 1, -1)]),
        citation: "(3.13): sum [NB2(2,5,5n+3) - NB2(3,5,5n+3)] q^n = -P(5,5)^3 / E",
    });

    cases.push(IdentityCase {
        id: "eq-3-14",
        class: CaseClass::Dissection,
        lhs: diff(2, 1, 4, 4),
        rhs: ProductExpr::of(vec![t(-1, 1).p(5, 5, 2).p(2, 5, -2).p(3, 5, -2)]),
        citation: "(3.14): sum [NB2(1,5,5n+4) - NB2(4,5,5n+4)] q^n \
                   = -P(5,5)^2 / (P(2,5)^2 P(3,5)^2)",
    });

    cases.push(IdentityCase {
        id: "eq-3-15",
        class: CaseClass::Dissection,
        lhs: diff(2, 2, 3, 4),
        rhs: ProductExpr::of(vec![t(3, 1).p(5, 5, 2).p(2, 5, -2).p(3, 5, -2)]),
        citation: "(3.15): sum [NB2(2,5,5n+4) - NB2(3,5,5n+4)] q^n \
                   = 3 P(5,5)^2 / (P(2,5)^2 P(3,5)^2)",
    });

    // ----- Classical fixture -----

    cases.push(IdentityCase {
        id: "ramanujan-5n4",
        class: CaseClass::Fixture,
        lhs: LhsSpec::Product {
            expr: ProductExpr::of(vec![t(1, 1).p(1, 1, -1)]),
            dissect: Some((4, 5)),
        },
        rhs: ProductExpr::of(vec![t(5, 1).p(5, 5, 5).p(1, 1, -6)]),
        citation: "sum p(5n+4) q^n = 5 P(5,5)^5 / E^6 (Ramanujan)",
    });

    cases
}
