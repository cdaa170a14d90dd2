//! Lambert-type block sums: the two-sided blocks that 5-dissection lemmas
//! are phrased in, and the single-residue tails they decompose into.
//!
//! With all exponents reduced against modulus 5:
//!
//! * `X(a, b, c) = sum_{n>=0} q^(b n + c)/(1 - q^(5n + a))
//!    - sum_{n>=0} q^((5-b) n + (5 + c - a - b))/(1 - q^(5n + 5 - a))`
//! * `Y(d) = sum_{n>=1} (q^(d n) - q^((5-d) n))/(1 - q^(5n))`
//! * `R_t  = sum_{n>=1} q^(t n)/(1 - q^(5n))`
//!
//! Each geometric tail is accumulated term by term, so every coefficient is
//! an exact integer; no division ever happens.

use crate::coeff::{IntRing, RatRing};
use crate::series::TruncatedSeries;
use num_bigint::BigInt;
use thiserror::Error;

#[derive(Error, Clone, PartialEq, Eq, Debug)]
pub enum LambertError {
    #[error("block parameter {name} = {value} is outside 1..=4")]
    ResidueOutOfRange { name: &'static str, value: u32 },
    #[error("mirrored numerator exponent 5 + c - a - b = {exponent} is negative")]
    NegativeExponent { exponent: i64 },
}

/// A validated Lambert block; construction checks the parameter ranges, so
/// evaluation cannot fail.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LambertExpr {
    X { a: u32, b: u32, c: u32 },
    Y { d: u32 },
    Rt { t: u32 },
}

impl LambertExpr {
    pub fn x(a: u32, b: u32, c: u32) -> Result<Self, LambertError> {
        check_residue("a", a)?;
        check_residue("b", b)?;
        let exponent = 5 + c as i64 - a as i64 - b as i64;
        if exponent < 0 {
            return Err(LambertError::NegativeExponent { exponent });
        }
        Ok(LambertExpr::X { a, b, c })
    }

    pub fn y(d: u32) -> Result<Self, LambertError> {
        check_residue("d", d)?;
        Ok(LambertExpr::Y { d })
    }

    pub fn rt(t: u32) -> Result<Self, LambertError> {
        check_residue("t", t)?;
        Ok(LambertExpr::Rt { t })
    }

    pub fn eval(&self, precision: i64) -> TruncatedSeries<RatRing> {
        match *self {
            LambertExpr::X { a, b, c } => lambert_x(a, b, c, precision)
                .expect("validated at construction")
                .to_rational(),
            LambertExpr::Y { d } => lambert_y(d, precision).expect("validated at construction"),
            LambertExpr::Rt { t } => lambert_rt(t, precision)
                .expect("validated at construction")
                .to_rational(),
        }
    }
}

fn check_residue(name: &'static str, value: u32) -> Result<(), LambertError> {
    if (1..=4).contains(&value) {
        Ok(())
    } else {
        Err(LambertError::ResidueOutOfRange { name, value })
    }
}

/// Adds `sign * q^start / (1 - q^step)` into the dense window.
fn add_geometric(coeffs: &mut [BigInt], start: i64, step: i64, sign: i64) {
    debug_assert!(step >= 1);
    let mut e = start;
    while e < coeffs.len() as i64 {
        coeffs[e as usize] += sign;
        e += step;
    }
}

/// The two-sided block `X(a, b, c)`; see the module doc for the definition.
pub fn lambert_x(
    a: u32,
    b: u32,
    c: u32,
    precision: i64,
) -> Result<TruncatedSeries<IntRing>, LambertError> {
    let expr = LambertExpr::x(a, b, c)?;
    let LambertExpr::X { a, b, c } = expr else {
        unreachable!()
    };
    let (a, b, c) = (a as i64, b as i64, c as i64);
    let len = precision.max(0) as usize;
    let mut coeffs = vec![BigInt::from(0); len];
    // Direct sum: numerator exponent b n + c, denominator step 5 n + a.
    let mut n = 0;
    while b * n + c < precision {
        add_geometric(&mut coeffs, b * n + c, 5 * n + a, 1);
        n += 1;
    }
    // Mirrored sum: residues reflected through 5.
    let mut n = 0;
    while (5 - b) * n + (5 + c - a - b) < precision {
        add_geometric(
            &mut coeffs,
            (5 - b) * n + (5 + c - a - b),
            5 * n + (5 - a),
            -1,
        );
        n += 1;
    }
    Ok(TruncatedSeries::from_coeffs(IntRing, 0, coeffs))
}

/// The antisymmetric tail pair `Y(d) = R_d - R_(5-d)`, reported over the
/// rationals for uniform comparison against identity right sides.
pub fn lambert_y(d: u32, precision: i64) -> Result<TruncatedSeries<RatRing>, LambertError> {
    check_residue("d", d)?;
    let direct = lambert_rt(d, precision)?;
    let mirrored = lambert_rt(5 - d, precision)?;
    Ok((&direct - &mirrored).to_rational())
}

/// The single tail `R_t = sum_{n>=1} q^(t n)/(1 - q^(5n))`.
pub fn lambert_rt(t: u32, precision: i64) -> Result<TruncatedSeries<IntRing>, LambertError> {
    check_residue("t", t)?;
    let t = t as i64;
    let len = precision.max(0) as usize;
    let mut coeffs = vec![BigInt::from(0); len];
    let mut n = 1;
    while t * n < precision {
        add_geometric(&mut coeffs, t * n, 5 * n, 1);
        n += 1;
    }
    Ok(TruncatedSeries::from_coeffs(IntRing, 0, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::BigRat;

    #[test]
    fn parameters_outside_the_window_are_rejected() {
        assert!(matches!(
            LambertExpr::x(0, 1, 0),
            Err(LambertError::ResidueOutOfRange { name: "a", .. })
        ));
        assert!(matches!(
            LambertExpr::x(1, 5, 0),
            Err(LambertError::ResidueOutOfRange { name: "b", .. })
        ));
        // 5 + 0 - 4 - 2 < 0: the mirrored numerator would have a negative
        // exponent, so the block is not defined as a power series.
        assert!(matches!(
            LambertExpr::x(4, 2, 0),
            Err(LambertError::NegativeExponent { exponent: -1 })
        ));
        assert!(LambertExpr::x(4, 2, 1).is_ok());
        assert!(LambertExpr::y(0).is_err());
        assert!(LambertExpr::rt(5).is_err());
    }

    #[test]
    fn x_block_hand_expansion() {
        // X(3,1,0) through q^4. Direct sum: n=0 contributes 1 + q^3, and
        // n = 1..4 contribute q^n each. Mirrored sum (q^(4n+1)/(1-q^(5n+2))):
        // n=0 contributes q + q^3. Difference: 1 + q^2 + q^3 + q^4.
        let x = lambert_x(3, 1, 0, 5).unwrap();
        let expect = [1i64, 0, 1, 1, 1];
        for (e, &c) in expect.iter().enumerate() {
            assert_eq!(x.coeff(e as i64), Ok(BigInt::from(c)), "q^{e}");
        }
    }

    #[test]
    fn x_block_with_shift_has_constant_minus_one() {
        // X(4,2,1): mirrored sum opens with q^0/(1-q), the direct sum with q.
        let x = lambert_x(4, 2, 1, 3).unwrap();
        assert_eq!(x.coeff(0), Ok(BigInt::from(-1)));
    }

    #[test]
    fn y_is_the_difference_of_single_tails() {
        let p = 60;
        for d in 1..=4u32 {
            let y = lambert_y(d, p).unwrap();
            let direct = lambert_rt(d, p).unwrap().to_rational();
            let mirrored = lambert_rt(5 - d, p).unwrap().to_rational();
            let diff = &direct - &mirrored;
            assert_eq!(y.first_difference(&diff, p).unwrap(), None, "d = {d}");
        }
    }

    #[test]
    fn y_pairs_cancel() {
        let p = 40;
        let y1 = lambert_y(1, p).unwrap();
        let y4 = lambert_y(4, p).unwrap();
        let sum = &y1 + &y4;
        assert!(sum.is_zero_window());
        assert_eq!(
            lambert_y(2, p).unwrap().coeff(0),
            Ok(BigRat::from(0))
        );
    }

    #[test]
    fn rt_counts_divisor_pairs_in_residue_class() {
        // Coefficient of q^N in R_t counts pairs (n >= 1, j >= 0) with
        // N = t n + 5 n j, i.e. divisors n of gcd-compatible splittings.
        // Hand check R_1 through q^6: n=1 gives q(1+q^5)..., n=2..6 give
        // q^2..q^6; so 1,1,1,1,1,2 starting at q.
        let r = lambert_rt(1, 7).unwrap();
        let expect = [0i64, 1, 1, 1, 1, 1, 2];
        for (e, &c) in expect.iter().enumerate() {
            assert_eq!(r.coeff(e as i64), Ok(BigInt::from(c)), "q^{e}");
        }
    }
}
