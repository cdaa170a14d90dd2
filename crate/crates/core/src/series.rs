//! Truncated Laurent series with explicit precision tracking.
//!
//! A series stores exact coefficients on the window `[valuation, precision)`.
//! Exponents below the valuation are known to be zero; exponents at or above
//! the precision are unknown, and asking for one is an error rather than a
//! silent zero. Every operation derives how far its result is provable from
//! the operands:
//!
//! * `f + g`, `f - g`: `min(prec f, prec g)`
//! * `f * g`: `min(prec f + val g, prec g + val f)`
//! * `dissect(f, r, m)`: `floor((prec f - r - 1)/m) + 1`
//! * `substitute_q_power(f, k)`: `k * prec f`
//!
//! A window holding no nonzero coefficient is canonicalized to an empty
//! vector with `valuation == precision`, so the valuation of an inexact zero
//! is never reported as smaller than what is actually known.

use crate::coeff::{IntRing, RatRing, Ring, ToRational};
use std::cmp::{max, min};
use std::fmt;
use thiserror::Error;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Output windows at least this long are worth fanning out per coefficient.
#[cfg(feature = "parallel")]
const PARALLEL_MUL_MIN: usize = 64;

#[derive(Error, Clone, PartialEq, Eq, Debug)]
pub enum SeriesError {
    #[error("coefficient of q^{exponent} requested at or beyond precision {precision}")]
    PrecisionExceeded { exponent: i64, precision: i64 },
    #[error("series is not invertible: {reason}")]
    NotInvertible { reason: &'static str },
    #[error("comparison through q^{needed} needs more precision than the {available} available")]
    PrecisionShortfall { needed: i64, available: i64 },
}

#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedSeries<R: Ring> {
    ring: R,
    valuation: i64,
    precision: i64,
    coeffs: Vec<R::Elem>,
}

impl<R: Ring> TruncatedSeries<R> {
    /// The zero series, exact on `[.., precision)`.
    pub fn zero(ring: R, precision: i64) -> Self {
        TruncatedSeries {
            ring,
            valuation: precision,
            precision,
            coeffs: Vec::new(),
        }
    }

    /// The constant one, known on `[0, precision)`.
    pub fn one(ring: R, precision: i64) -> Self {
        Self::monomial(ring.one(), ring, 0, precision)
    }

    /// `c * q^exponent`, known on `[exponent, precision)`.
    pub fn monomial(c: R::Elem, ring: R, exponent: i64, precision: i64) -> Self {
        assert!(exponent < precision, "monomial exponent outside the window");
        let len = (precision - exponent) as usize;
        let mut coeffs = vec![ring.zero(); len];
        coeffs[0] = c;
        let mut s = TruncatedSeries {
            ring,
            valuation: exponent,
            precision,
            coeffs,
        };
        s.normalize();
        s
    }

    /// Builds a series from the dense coefficient slice starting at
    /// `valuation`; the precision is the end of the given window.
    pub fn from_coeffs(ring: R, valuation: i64, coeffs: Vec<R::Elem>) -> Self {
        let precision = valuation + coeffs.len() as i64;
        let mut s = TruncatedSeries {
            ring,
            valuation,
            precision,
            coeffs,
        };
        s.normalize();
        s
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    /// Exponent of the first stored coefficient. For a window holding no
    /// nonzero coefficient this equals [`Self::precision`].
    pub fn valuation(&self) -> i64 {
        self.valuation
    }

    pub fn precision(&self) -> i64 {
        self.precision
    }

    /// True when no nonzero coefficient is known (which does not prove the
    /// underlying object is zero beyond the window).
    pub fn is_zero_window(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The exact coefficient of `q^exponent`, or an error when the window
    /// does not reach that far.
    pub fn coeff(&self, exponent: i64) -> Result<R::Elem, SeriesError> {
        if exponent >= self.precision {
            return Err(SeriesError::PrecisionExceeded {
                exponent,
                precision: self.precision,
            });
        }
        if exponent < self.valuation {
            return Ok(self.ring.zero());
        }
        Ok(self.coeffs[(exponent - self.valuation) as usize].clone())
    }

    fn normalize(&mut self) {
        let lead = self
            .coeffs
            .iter()
            .position(|c| !self.ring.is_zero(c))
            .unwrap_or(self.coeffs.len());
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.valuation += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.valuation = self.precision;
        }
    }

    /// Lowers the precision to `precision`, discarding higher coefficients.
    pub fn truncate(mut self, precision: i64) -> Self {
        assert!(
            precision <= self.precision,
            "truncation cannot raise precision"
        );
        self.precision = precision;
        let keep = max(0, precision - self.valuation) as usize;
        self.coeffs.truncate(keep);
        if self.coeffs.is_empty() {
            self.valuation = self.precision;
        }
        self
    }

    /// Multiplies by `q^shift`.
    pub fn shift(mut self, shift: i64) -> Self {
        self.valuation += shift;
        self.precision += shift;
        self
    }

    /// Multiplies every coefficient by the ring element `c`.
    pub fn scale(&self, c: &R::Elem) -> Self {
        let mut out = TruncatedSeries {
            ring: self.ring.clone(),
            valuation: self.valuation,
            precision: self.precision,
            coeffs: self.coeffs.iter().map(|x| self.ring.mul(x, c)).collect(),
        };
        out.normalize();
        out
    }

    /// Maps each coefficient into another ring. The map is applied to stored
    /// coefficients only, so it must send zero to zero.
    pub fn map_coeffs<D: Ring>(
        &self,
        dst: D,
        f: impl Fn(&R::Elem) -> D::Elem,
    ) -> TruncatedSeries<D> {
        let mut out = TruncatedSeries {
            ring: dst,
            valuation: self.valuation,
            precision: self.precision,
            coeffs: self.coeffs.iter().map(f).collect(),
        };
        out.normalize();
        out
    }

    /// Single-threaded product. Always available, whatever features are on;
    /// useful inside loops that are already running in parallel.
    pub fn mul_sequential(&self, other: &Self) -> Self {
        self.mul_impl(other, false)
    }

    fn mul_impl(&self, other: &Self, allow_parallel: bool) -> Self {
        assert!(
            self.ring == other.ring,
            "series over mismatched rings cannot be multiplied"
        );
        let precision = min(
            self.precision + other.valuation,
            other.precision + self.valuation,
        );
        let valuation = self.valuation + other.valuation;
        let len = max(0, precision - valuation) as usize;
        if self.coeffs.is_empty() || other.coeffs.is_empty() || len == 0 {
            return TruncatedSeries {
                ring: self.ring.clone(),
                valuation: precision,
                precision,
                coeffs: Vec::new(),
            };
        }
        let a = &self.coeffs;
        let b = &other.coeffs;
        let ring = &self.ring;
        let convolve = |i: usize| {
            let lo = (i + 1).saturating_sub(b.len());
            let hi = min(i, a.len() - 1);
            let mut acc = ring.zero();
            for j in lo..=hi {
                ring.add_mul(&mut acc, &a[j], &b[i - j]);
            }
            acc
        };
        #[cfg(feature = "parallel")]
        let coeffs: Vec<R::Elem> = if allow_parallel && len >= PARALLEL_MUL_MIN {
            (0..len).into_par_iter().map(convolve).collect()
        } else {
            (0..len).map(convolve).collect()
        };
        #[cfg(not(feature = "parallel"))]
        let coeffs: Vec<R::Elem> = {
            let _ = allow_parallel;
            (0..len).map(convolve).collect()
        };
        let mut out = TruncatedSeries {
            ring: self.ring.clone(),
            valuation,
            precision,
            coeffs,
        };
        out.normalize();
        out
    }

    /// Multiplies in place by the exact binomial `1 + c*q^step`.
    pub fn mul_binomial(&mut self, c: &R::Elem, step: u32) {
        assert!(step >= 1, "binomial step must be positive");
        let step = step as usize;
        if self.coeffs.len() > step {
            for i in (step..self.coeffs.len()).rev() {
                let add = self.ring.mul(&self.coeffs[i - step], c);
                self.coeffs[i] = self.ring.add(&self.coeffs[i], &add);
            }
        }
        self.normalize();
    }

    /// Divides in place by the exact binomial `1 + c*q^step`.
    pub fn div_binomial(&mut self, c: &R::Elem, step: u32) {
        assert!(step >= 1, "binomial step must be positive");
        let step = step as usize;
        if self.coeffs.len() > step {
            for i in step..self.coeffs.len() {
                let sub = self.ring.mul(&self.coeffs[i - step], c);
                self.coeffs[i] = self.ring.sub(&self.coeffs[i], &sub);
            }
        }
        self.normalize();
    }

    /// Multiplicative inverse. Requires a window with a unit leading
    /// coefficient; the result is provable on a window of the same length.
    pub fn invert(&self) -> Result<Self, SeriesError> {
        let lead = self.coeffs.first().ok_or(SeriesError::NotInvertible {
            reason: "no nonzero coefficient within the window",
        })?;
        let lead_inv = self
            .ring
            .try_inv(lead)
            .ok_or(SeriesError::NotInvertible {
                reason: "leading coefficient is not a unit",
            })?;
        let len = self.coeffs.len();
        let mut out = Vec::with_capacity(len);
        out.push(lead_inv.clone());
        for i in 1..len {
            let mut acc = self.ring.zero();
            for j in 1..=min(i, len - 1) {
                self.ring.add_mul(&mut acc, &self.coeffs[j], &out[i - j]);
            }
            let neg = self.ring.neg(&self.ring.mul(&lead_inv, &acc));
            out.push(neg);
        }
        Ok(TruncatedSeries {
            ring: self.ring.clone(),
            valuation: -self.valuation,
            precision: -self.valuation + len as i64,
            coeffs: out,
        })
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, exponent: i64) -> Result<Self, SeriesError> {
        if exponent < 0 {
            return self.invert()?.pow(-exponent);
        }
        let window = self.precision - self.valuation;
        let mut result = Self::one(self.ring.clone(), window);
        let mut base = self.clone();
        let mut e = exponent;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// Picks the arithmetic progression `exponent ≡ r (mod m)` and maps
    /// `q^(m*n + r)` to `q^n`.
    pub fn dissect(&self, r: u32, m: u32) -> Self {
        assert!(m >= 1 && r < m, "dissection residue must satisfy r < m");
        let (r, m) = (r as i64, m as i64);
        let precision = (self.precision - r - 1).div_euclid(m) + 1;
        if self.coeffs.is_empty() {
            return TruncatedSeries {
                ring: self.ring.clone(),
                valuation: precision,
                precision,
                coeffs: Vec::new(),
            };
        }
        let n_start = (self.valuation - r + m - 1).div_euclid(m);
        let mut coeffs = Vec::new();
        let mut n = n_start;
        while m * n + r < self.precision {
            coeffs.push(self.coeffs[(m * n + r - self.valuation) as usize].clone());
            n += 1;
        }
        let mut out = TruncatedSeries {
            ring: self.ring.clone(),
            valuation: n_start,
            precision,
            coeffs,
        };
        out.normalize();
        out
    }

    /// Substitutes q -> q^k. The result is provable through `k * prec - 1`
    /// because every exponent not divisible by k is exactly zero.
    pub fn substitute_q_power(&self, k: u32) -> Self {
        assert!(k >= 1, "substitution power must be positive");
        let k = k as i64;
        let precision = k * self.precision;
        if self.coeffs.is_empty() {
            return TruncatedSeries {
                ring: self.ring.clone(),
                valuation: precision,
                precision,
                coeffs: Vec::new(),
            };
        }
        let len = k * (self.precision - self.valuation);
        let mut coeffs = vec![self.ring.zero(); len as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k as usize] = c.clone();
        }
        TruncatedSeries {
            ring: self.ring.clone(),
            valuation: k * self.valuation,
            precision,
            coeffs,
        }
    }

    /// First exponent below `upto` where the two series disagree, with both
    /// coefficients. Errors when either window stops short of `upto`.
    pub fn first_difference(
        &self,
        other: &Self,
        upto: i64,
    ) -> Result<Option<(i64, R::Elem, R::Elem)>, SeriesError> {
        let available = min(self.precision, other.precision);
        if available < upto {
            return Err(SeriesError::PrecisionShortfall {
                needed: upto,
                available,
            });
        }
        let start = min(min(self.valuation, other.valuation), upto);
        for e in start..upto {
            let a = self.coeff(e).expect("window checked above");
            let b = other.coeff(e).expect("window checked above");
            if a != b {
                return Ok(Some((e, a, b)));
            }
        }
        Ok(None)
    }
}

impl TruncatedSeries<IntRing> {
    /// Embeds an integer series into the rationals.
    pub fn to_rational(&self) -> TruncatedSeries<RatRing> {
        self.map_coeffs(RatRing, |c| c.to_rational())
    }
}

impl<R: Ring> std::ops::Add for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn add(self, other: Self) -> TruncatedSeries<R> {
        assert!(
            self.ring == other.ring,
            "series over mismatched rings cannot be added"
        );
        let precision = min(self.precision, other.precision);
        let valuation = min(min(self.valuation, other.valuation), precision);
        let len = (precision - valuation) as usize;
        let mut coeffs = vec![self.ring.zero(); len];
        for s in [self, other] {
            for (i, c) in s.coeffs.iter().enumerate() {
                let e = s.valuation + i as i64;
                if e >= precision {
                    break;
                }
                let idx = (e - valuation) as usize;
                coeffs[idx] = self.ring.add(&coeffs[idx], c);
            }
        }
        let mut out = TruncatedSeries {
            ring: self.ring.clone(),
            valuation,
            precision,
            coeffs,
        };
        out.normalize();
        out
    }
}

impl<R: Ring> std::ops::Sub for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn sub(self, other: Self) -> TruncatedSeries<R> {
        self + &(-other)
    }
}

impl<R: Ring> std::ops::Neg for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn neg(self) -> TruncatedSeries<R> {
        TruncatedSeries {
            ring: self.ring.clone(),
            valuation: self.valuation,
            precision: self.precision,
            coeffs: self.coeffs.iter().map(|c| self.ring.neg(c)).collect(),
        }
    }
}

impl<R: Ring> std::ops::Mul for &TruncatedSeries<R> {
    type Output = TruncatedSeries<R>;
    fn mul(self, other: Self) -> TruncatedSeries<R> {
        self.mul_impl(other, true)
    }
}

impl<R: Ring> fmt::Display for TruncatedSeries<R>
where
    R::Elem: fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if self.ring.is_zero(c) {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            write!(f, "({})*q^{}", c, self.valuation + i as i64)?;
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.precision)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::BigRat;
    use num_bigint::BigInt;

    fn int_series(valuation: i64, coeffs: &[i64]) -> TruncatedSeries<IntRing> {
        TruncatedSeries::from_coeffs(
            IntRing,
            valuation,
            coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        )
    }

    #[test]
    fn coefficients_beyond_precision_are_an_error() {
        let f = int_series(0, &[1, 2, 3]);
        assert_eq!(f.coeff(2), Ok(BigInt::from(3)));
        assert_eq!(
            f.coeff(3),
            Err(SeriesError::PrecisionExceeded {
                exponent: 3,
                precision: 3
            })
        );
        assert_eq!(f.coeff(-5), Ok(BigInt::from(0)));
    }

    #[test]
    fn zero_window_canonicalizes_valuation_to_precision() {
        let f = int_series(2, &[0, 0, 0]);
        assert!(f.is_zero_window());
        assert_eq!(f.valuation(), 5);
        assert_eq!(f.precision(), 5);
    }

    #[test]
    fn addition_takes_the_shorter_window() {
        let f = int_series(0, &[1, 1, 1, 1, 1]);
        let g = int_series(-2, &[5, 0, 7]);
        let s = &f + &g;
        assert_eq!(s.valuation(), -2);
        assert_eq!(s.precision(), 1);
        assert_eq!(s.coeff(-2), Ok(BigInt::from(5)));
        assert_eq!(s.coeff(0), Ok(BigInt::from(8)));
        assert!(s.coeff(1).is_err());
    }

    #[test]
    fn multiplication_precision_follows_the_min_rule() {
        // prec(f*g) = min(prec f + val g, prec g + val f)
        let f = int_series(1, &[1, 1]); // q + q^2, prec 3
        let g = int_series(2, &[1, 0, 0, 4]); // q^2 + 4 q^5, prec 6
        let p = &f * &g;
        assert_eq!(p.valuation(), 3);
        assert_eq!(p.precision(), 5);
        assert_eq!(p.coeff(3), Ok(BigInt::from(1)));
        assert_eq!(p.coeff(4), Ok(BigInt::from(1)));
        assert!(p.coeff(5).is_err());
    }

    #[test]
    fn laurent_inverse_of_a_shifted_unit() {
        // 1/(q - q^2) = q^-1 * 1/(1 - q) = q^-1 + 1 + q + ...
        let f = int_series(1, &[1, -1, 0, 0, 0]);
        let inv = f.invert().unwrap();
        assert_eq!(inv.valuation(), -1);
        assert_eq!(inv.precision(), 4);
        for e in -1..4 {
            assert_eq!(inv.coeff(e), Ok(BigInt::from(1)), "coefficient of q^{e}");
        }
        let check = &f * &inv;
        assert_eq!(check.coeff(0), Ok(BigInt::from(1)));
        assert_eq!(check.coeff(1), Ok(BigInt::from(0)));
    }

    #[test]
    fn inversion_rejects_non_units_and_zero_windows() {
        let f = int_series(0, &[2, 1]);
        assert!(matches!(
            f.invert(),
            Err(SeriesError::NotInvertible { .. })
        ));
        let z = TruncatedSeries::zero(IntRing, 10);
        assert!(z.invert().is_err());
    }

    #[test]
    fn dissection_window_and_values() {
        // f = sum n q^n for n < 10; dissect(2, 5) = 2 + 7 q, precision 2.
        let f = int_series(0, &[0, 1, 2, 3, 4, 5, 6, 7, 8, 9]);
        let d = f.dissect(2, 5);
        assert_eq!(d.valuation(), 0);
        assert_eq!(d.precision(), 2);
        assert_eq!(d.coeff(0), Ok(BigInt::from(2)));
        assert_eq!(d.coeff(1), Ok(BigInt::from(7)));
    }

    #[test]
    fn dissection_reconstruction_round_trip() {
        let f = int_series(-3, &[4, 0, -2, 7, 1, 1, 9, -5, 3, 2, 6]);
        for m in [2u32, 3, 5] {
            let mut acc = TruncatedSeries::zero(IntRing, f.precision());
            for r in 0..m {
                let piece = f
                    .dissect(r, m)
                    .substitute_q_power(m)
                    .shift(r as i64);
                acc = &acc + &piece;
            }
            assert_eq!(acc.precision(), f.precision(), "m = {m}");
            assert_eq!(
                f.first_difference(&acc, f.precision()).unwrap(),
                None,
                "m = {m}"
            );
        }
    }

    #[test]
    fn substitution_precision_scales_by_k() {
        let f = int_series(1, &[3, 0, 5]); // prec 4
        let s = f.substitute_q_power(3);
        assert_eq!(s.valuation(), 3);
        assert_eq!(s.precision(), 12);
        assert_eq!(s.coeff(3), Ok(BigInt::from(3)));
        assert_eq!(s.coeff(4), Ok(BigInt::from(0)));
        assert_eq!(s.coeff(9), Ok(BigInt::from(5)));
        assert_eq!(s.coeff(11), Ok(BigInt::from(0)));
        assert!(s.coeff(12).is_err());
    }

    #[test]
    fn binomial_multiply_then_divide_is_identity() {
        let mut f = int_series(0, &[1, 4, -2, 0, 3, 1, 1, 8]);
        let orig = f.clone();
        let c = BigInt::from(-7);
        f.mul_binomial(&c, 2);
        f.div_binomial(&c, 2);
        assert_eq!(f, orig);
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let f = int_series(0, &[1, -1, 0, 2, 5, -3]);
        let cubed = f.pow(3).unwrap();
        let manual = &(&f * &f) * &f;
        assert_eq!(cubed, manual);
        let inv2 = f.pow(-2).unwrap();
        let unit = &(&f * &f) * &inv2;
        assert_eq!(unit.coeff(0), Ok(BigInt::from(1)));
        assert_eq!(unit.coeff(3), Ok(BigInt::from(0)));
    }

    #[test]
    fn first_difference_reports_shortfall() {
        let f = int_series(0, &[1, 2]);
        let g = int_series(0, &[1, 2, 3]);
        assert_eq!(
            f.first_difference(&g, 3),
            Err(SeriesError::PrecisionShortfall {
                needed: 3,
                available: 2
            })
        );
        assert_eq!(f.first_difference(&g, 2), Ok(None));
    }

    #[test]
    fn rational_scaling_keeps_exactness() {
        let f = TruncatedSeries::from_coeffs(
            RatRing,
            0,
            vec![BigRat::new(1, 2), BigRat::new(2, 3)],
        );
        let s = f.scale(&BigRat::new(3, 1));
        assert_eq!(s.coeff(0), Ok(BigRat::new(3, 2)));
        assert_eq!(s.coeff(1), Ok(BigRat::new(2, 1)));
    }
}
