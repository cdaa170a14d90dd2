//! Exact coefficient rings for the series engine.
//!
//! Four rings are supported: arbitrary-precision integers, rationals kept in
//! lowest terms, the group ring of a finite cyclic group (over either base),
//! and the degree-4 field obtained by adjoining a primitive fifth root of
//! unity. Rings are small descriptor objects so that runtime parameters such
//! as the group order live in one place and elements stay plain data.

mod cyclotomic;
mod group_ring;

pub use cyclotomic::{apply_character, CycRing5, Cyclotomic5};
pub use group_ring::{GroupRing, GroupRingElem};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A commutative ring whose elements the series engine can store.
///
/// Mixing elements from rings with different runtime parameters (for example
/// group rings of different order) is a programming error and panics.
pub trait Ring: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// `acc += a * b`. Overridden where the element type supports it in place.
    fn add_mul(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        let p = self.mul(a, b);
        *acc = self.add(acc, &p);
    }

    fn from_i64(&self, n: i64) -> Self::Elem;

    /// Multiplicative inverse, or `None` when `a` is not a unit.
    fn try_inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
}

/// The ring of arbitrary-precision integers.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct IntRing;

impl Ring for IntRing {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn add_mul(&self, acc: &mut BigInt, a: &BigInt, b: &BigInt) {
        *acc += a * b;
    }
    fn from_i64(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }
    fn try_inv(&self, a: &BigInt) -> Option<BigInt> {
        if a.is_one() || (-a).is_one() {
            Some(a.clone())
        } else {
            None
        }
    }
}

/// The field of arbitrary-precision rationals.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct RatRing;

impl Ring for RatRing {
    type Elem = BigRat;

    fn zero(&self) -> BigRat {
        BigRat::zero()
    }
    fn one(&self) -> BigRat {
        BigRat::one()
    }
    fn is_zero(&self, a: &BigRat) -> bool {
        a.is_zero()
    }
    fn neg(&self, a: &BigRat) -> BigRat {
        BigRat(-&a.0)
    }
    fn add(&self, a: &BigRat, b: &BigRat) -> BigRat {
        BigRat(&a.0 + &b.0)
    }
    fn sub(&self, a: &BigRat, b: &BigRat) -> BigRat {
        BigRat(&a.0 - &b.0)
    }
    fn mul(&self, a: &BigRat, b: &BigRat) -> BigRat {
        BigRat(&a.0 * &b.0)
    }
    fn add_mul(&self, acc: &mut BigRat, a: &BigRat, b: &BigRat) {
        acc.0 += &a.0 * &b.0;
    }
    fn from_i64(&self, n: i64) -> BigRat {
        BigRat::from(n)
    }
    fn try_inv(&self, a: &BigRat) -> Option<BigRat> {
        if a.is_zero() {
            None
        } else {
            Some(BigRat(self.one().0 / &a.0))
        }
    }
}

/// An exact rational number, always in lowest terms with positive denominator.
///
/// The invariant is maintained eagerly by the wrapped representation: every
/// arithmetic result is reduced before it is observable.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct BigRat(BigRational);

impl BigRat {
    /// Builds `num/den`, reducing to lowest terms. Panics when `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "rational with zero denominator");
        BigRat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_bigints(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "rational with zero denominator");
        BigRat(BigRational::new(num, den))
    }

    pub fn from_int(n: &BigInt) -> Self {
        BigRat(BigRational::from_integer(n.clone()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }
}

impl Zero for BigRat {
    fn zero() -> Self {
        BigRat(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for BigRat {
    fn one() -> Self {
        BigRat(BigRational::one())
    }
}

impl From<i64> for BigRat {
    fn from(n: i64) -> Self {
        BigRat(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<BigInt> for BigRat {
    fn from(n: BigInt) -> Self {
        BigRat(BigRational::from_integer(n))
    }
}

/// Prints `p/q`, or just `p` for integers.
impl fmt::Display for BigRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

macro_rules! bigrat_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for BigRat {
            type Output = BigRat;
            fn $method(self, rhs: BigRat) -> BigRat {
                BigRat(self.0 $op rhs.0)
            }
        }
        impl $trait for &BigRat {
            type Output = BigRat;
            fn $method(self, rhs: &BigRat) -> BigRat {
                BigRat(&self.0 $op &rhs.0)
            }
        }
    };
}

bigrat_binop!(Add, add, +);
bigrat_binop!(Sub, sub, -);
bigrat_binop!(Mul, mul, *);

impl Div for &BigRat {
    type Output = BigRat;
    fn div(self, rhs: &BigRat) -> BigRat {
        assert!(!rhs.is_zero(), "division by zero rational");
        BigRat(&self.0 / &rhs.0)
    }
}

impl Div for BigRat {
    type Output = BigRat;
    fn div(self, rhs: BigRat) -> BigRat {
        (&self).div(&rhs)
    }
}

impl Neg for BigRat {
    type Output = BigRat;
    fn neg(self) -> BigRat {
        BigRat(-self.0)
    }
}

impl Neg for &BigRat {
    type Output = BigRat;
    fn neg(self) -> BigRat {
        BigRat(-&self.0)
    }
}

/// Conversion into the rational field, for maps that land in Q or Q(zeta).
pub trait ToRational {
    fn to_rational(&self) -> BigRat;
}

impl ToRational for BigInt {
    fn to_rational(&self) -> BigRat {
        BigRat::from_int(self)
    }
}

impl ToRational for BigRat {
    fn to_rational(&self) -> BigRat {
        self.clone()
    }
}
