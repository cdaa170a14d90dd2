//! Infinite-product and theta-series builders, plus a small value-level
//! expression tree for linear combinations of Pochhammer quotients.
//!
//! The building block is the truncated infinite product
//! `(q^a; q^m)_inf = prod_{j>=0} (1 - q^(a + j m))`, written `P(a, m)` in
//! expression text. Expressions evaluate over the integers internally (every
//! factor has unit constant term) and only pick up rational constants at the
//! end, so no precision or exactness is lost on the way.

use crate::coeff::{BigRat, IntRing, RatRing, Ring};
use crate::series::TruncatedSeries;
use std::collections::HashMap;

/// `(q^offset; q^step)_inf` truncated to the window `[0, precision)`.
pub fn pochhammer(offset: u32, step: u32, precision: i64) -> TruncatedSeries<IntRing> {
    assert!(offset >= 1 && step >= 1, "pochhammer needs offset, step >= 1");
    let mut acc = TruncatedSeries::one(IntRing, precision);
    let minus_one = IntRing.from_i64(-1);
    let mut e = offset as i64;
    while e < precision {
        acc.mul_binomial(&minus_one, e as u32);
        e += step as i64;
    }
    acc
}

/// `(q^offset; q^step)_inf^exponent`; negative exponents invert the product.
pub fn pochhammer_pow(
    offset: u32,
    step: u32,
    exponent: i64,
    precision: i64,
) -> TruncatedSeries<IntRing> {
    pochhammer(offset, step, precision)
        .pow(exponent)
        .expect("pochhammer products have unit constant term")
}

/// `(q; q)_inf`, whose coefficients are the pentagonal-number signs.
pub fn euler(precision: i64) -> TruncatedSeries<IntRing> {
    pochhammer(1, 1, precision)
}

/// `1/(q; q)_inf`; the coefficient of `q^n` counts the partitions of n.
pub fn euler_inverse(precision: i64) -> TruncatedSeries<IntRing> {
    euler(precision)
        .invert()
        .expect("euler product has unit constant term")
}

/// `sum_{n in Z} (-1)^n q^(n(5n+1)/2)`.
pub fn theta_plain(precision: i64) -> TruncatedSeries<IntRing> {
    theta_sum(precision, false)
}

/// `sum_{n in Z} (-1)^n n q^(n(5n+1)/2)`.
pub fn theta_weighted(precision: i64) -> TruncatedSeries<IntRing> {
    theta_sum(precision, true)
}

fn theta_sum(precision: i64, weighted: bool) -> TruncatedSeries<IntRing> {
    let len = precision.max(0) as usize;
    let mut coeffs = vec![IntRing.zero(); len];
    let mut add_term = |n: i64| {
        let e = n * (5 * n + 1) / 2;
        if e < precision && e >= 0 {
            let sign = if n.rem_euclid(2) == 0 { 1 } else { -1 };
            let w = if weighted { n * sign } else { sign };
            coeffs[e as usize] += IntRing.from_i64(w);
        }
    };
    // Exponents grow monotonically in |n| on each side, so stop once both
    // sides have left the window.
    let mut n = 0i64;
    loop {
        let e_pos = n * (5 * n + 1) / 2;
        let e_neg = -n * (-5 * n + 1) / 2;
        if e_pos >= precision && e_neg >= precision && n > 0 {
            break;
        }
        add_term(n);
        if n > 0 {
            add_term(-n);
        }
        n += 1;
    }
    TruncatedSeries::from_coeffs(IntRing, 0, coeffs)
}

/// The de-fractionalized Rogers-Ramanujan quotient
/// `(q, q^4; q^5)_inf / (q^2, q^3; q^5)_inf`, a unit with constant term 1.
pub fn rr_quotient(precision: i64) -> TruncatedSeries<RatRing> {
    let num = &pochhammer(1, 5, precision) * &pochhammer(4, 5, precision);
    let den = &pochhammer(2, 5, precision) * &pochhammer(3, 5, precision);
    let q = &num * &den.invert().expect("denominator has unit constant term");
    q.to_rational()
}

/// One factor `(q^offset; q^step)_inf^exponent` inside a product term.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PochFactor {
    pub offset: u32,
    pub step: u32,
    pub exponent: i64,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ThetaKind {
    Plain,
    Weighted,
}

/// `constant * q^qpower * prod factors [* theta]`.
#[derive(Clone, PartialEq, Debug)]
pub struct ProductTerm {
    pub constant: BigRat,
    pub qpower: i64,
    pub factors: Vec<PochFactor>,
    pub theta: Option<ThetaKind>,
}

impl ProductTerm {
    pub fn new(num: i64, den: i64) -> Self {
        ProductTerm {
            constant: BigRat::new(num, den),
            qpower: 0,
            factors: Vec::new(),
            theta: None,
        }
    }

    pub fn q(mut self, qpower: i64) -> Self {
        self.qpower = qpower;
        self
    }

    pub fn p(mut self, offset: u32, step: u32, exponent: i64) -> Self {
        self.factors.push(PochFactor {
            offset,
            step,
            exponent,
        });
        self
    }

    pub fn theta(mut self, kind: ThetaKind) -> Self {
        self.theta = Some(kind);
        self
    }
}

/// A finite sum of product terms. The empty sum is the zero expression.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct ProductExpr {
    pub terms: Vec<ProductTerm>,
}

impl ProductExpr {
    pub fn of(terms: Vec<ProductTerm>) -> Self {
        ProductExpr { terms }
    }

    pub fn zero() -> Self {
        ProductExpr { terms: Vec::new() }
    }

    /// Evaluates the expression exactly on `[.., precision)`.
    ///
    /// Terms with positive q-shift are individually provable a little
    /// further; the sum is reported at exactly `precision`.
    pub fn eval(&self, precision: i64) -> TruncatedSeries<RatRing> {
        let mut cache = EvalCache::new(precision);
        let mut acc = TruncatedSeries::zero(RatRing, precision);
        for term in &self.terms {
            acc = &acc + &cache.eval_term(term);
        }
        acc
    }
}

/// Shares Pochhammer powers and theta series across the terms of one
/// evaluation; identity right sides reuse the same handful of factors.
struct EvalCache {
    precision: i64,
    powers: HashMap<(u32, u32, i64), TruncatedSeries<IntRing>>,
    thetas: HashMap<bool, TruncatedSeries<IntRing>>,
}

impl EvalCache {
    fn new(precision: i64) -> Self {
        EvalCache {
            precision,
            powers: HashMap::new(),
            thetas: HashMap::new(),
        }
    }

    fn power(&mut self, f: &PochFactor) -> TruncatedSeries<IntRing> {
        let key = (f.offset, f.step, f.exponent);
        if let Some(s) = self.powers.get(&key) {
            return s.clone();
        }
        let s = pochhammer_pow(f.offset, f.step, f.exponent, self.precision);
        self.powers.insert(key, s.clone());
        s
    }

    fn theta(&mut self, kind: ThetaKind) -> TruncatedSeries<IntRing> {
        let weighted = matches!(kind, ThetaKind::Weighted);
        self.thetas
            .entry(weighted)
            .or_insert_with(|| theta_sum(self.precision, weighted))
            .clone()
    }

    fn eval_term(&mut self, term: &ProductTerm) -> TruncatedSeries<RatRing> {
        let mut acc = TruncatedSeries::one(IntRing, self.precision);
        for f in &term.factors {
            acc = &acc * &self.power(f);
        }
        if let Some(kind) = term.theta {
            acc = &acc * &self.theta(kind);
        }
        acc.to_rational()
            .scale(&term.constant)
            .shift(term.qpower)
    }
}

/// The exact 5-dissection unit for `1/(q; q)_inf`: with
/// `T = (q^10, q^15; q^25)_inf / (q^5, q^20; q^25)_inf`,
///
/// `1/(q;q)_inf = (q^25;q^25)^5/(q^5;q^5)^6 * (T^4 + q T^3 + 2 q^2 T^2
///  + 3 q^3 T + 5 q^4 - 3 q^5/T + 2 q^6/T^2 - q^7/T^3 + q^8/T^4)`.
pub fn five_dissection_expr() -> ProductExpr {
    let coefficients: [(i64, i64); 9] = [
        (4, 1),
        (3, 1),
        (2, 2),
        (1, 3),
        (0, 5),
        (-1, -3),
        (-2, 2),
        (-3, -1),
        (-4, 1),
    ];
    let terms = coefficients
        .iter()
        .map(|&(tpow, c)| {
            ProductTerm::new(c, 1)
                .q(4 - tpow)
                .p(25, 25, 5)
                .p(5, 5, -6)
                .p(10, 25, tpow)
                .p(15, 25, tpow)
                .p(5, 25, -tpow)
                .p(20, 25, -tpow)
        })
        .collect();
    ProductExpr::of(terms)
}

/// Evaluates [`five_dissection_expr`]; equal to `1/(q; q)_inf` on the window.
pub fn five_dissection_unit(precision: i64) -> TruncatedSeries<RatRing> {
    five_dissection_expr().eval(precision)
}
