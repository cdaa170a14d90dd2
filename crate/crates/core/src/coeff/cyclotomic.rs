//! The field Q(zeta) for a primitive fifth root of unity zeta, in the
//! reduced basis {1, zeta, zeta^2, zeta^3} with zeta^4 = -(1+zeta+zeta^2+zeta^3).
//!
//! Used as an independent cross-check ring: specializing the cyclic-group
//! generator to zeta^j must commute with every series computation.

use super::{BigRat, GroupRingElem, Ring, ToRational};
use num_traits::{One, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cyclotomic5 {
    coords: [BigRat; 4],
}

impl Cyclotomic5 {
    pub fn from_rat(c: BigRat) -> Self {
        Cyclotomic5 {
            coords: [c, BigRat::zero(), BigRat::zero(), BigRat::zero()],
        }
    }

    /// zeta^t for any integer t; t = 4 lands in the reduced basis.
    pub fn zeta_pow(t: i64) -> Self {
        let t = t.rem_euclid(5) as usize;
        let mut coords = [
            BigRat::zero(),
            BigRat::zero(),
            BigRat::zero(),
            BigRat::zero(),
        ];
        if t < 4 {
            coords[t] = BigRat::one();
        } else {
            for c in coords.iter_mut() {
                *c = -BigRat::one();
            }
        }
        Cyclotomic5 { coords }
    }

    pub fn coords(&self) -> &[BigRat; 4] {
        &self.coords
    }

    /// The rational part, when the element lies in Q.
    pub fn as_rational(&self) -> Option<&BigRat> {
        if self.coords[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coords[0])
        } else {
            None
        }
    }

    /// The field automorphism zeta -> zeta^j, for j coprime to 5.
    pub fn conjugate(&self, j: u32) -> Self {
        assert!(j % 5 != 0, "conjugation exponent must be coprime to 5");
        let mut acc = CycRing5.zero();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let basis = Cyclotomic5::zeta_pow((i as i64) * (j as i64));
            acc = CycRing5.add(&acc, &basis.scaled(c));
        }
        acc
    }

    fn scaled(&self, c: &BigRat) -> Self {
        Cyclotomic5 {
            coords: [
                &self.coords[0] * c,
                &self.coords[1] * c,
                &self.coords[2] * c,
                &self.coords[3] * c,
            ],
        }
    }
}

impl fmt::Display for Cyclotomic5 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "({c})*z^{i}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Ring descriptor for [`Cyclotomic5`].
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct CycRing5;

impl Ring for CycRing5 {
    type Elem = Cyclotomic5;

    fn zero(&self) -> Cyclotomic5 {
        Cyclotomic5::from_rat(BigRat::zero())
    }

    fn one(&self) -> Cyclotomic5 {
        Cyclotomic5::from_rat(BigRat::one())
    }

    fn is_zero(&self, a: &Cyclotomic5) -> bool {
        a.coords.iter().all(|c| c.is_zero())
    }

    fn neg(&self, a: &Cyclotomic5) -> Cyclotomic5 {
        Cyclotomic5 {
            coords: [
                -&a.coords[0],
                -&a.coords[1],
                -&a.coords[2],
                -&a.coords[3],
            ],
        }
    }

    fn add(&self, a: &Cyclotomic5, b: &Cyclotomic5) -> Cyclotomic5 {
        Cyclotomic5 {
            coords: [
                &a.coords[0] + &b.coords[0],
                &a.coords[1] + &b.coords[1],
                &a.coords[2] + &b.coords[2],
                &a.coords[3] + &b.coords[3],
            ],
        }
    }

    fn mul(&self, a: &Cyclotomic5, b: &Cyclotomic5) -> Cyclotomic5 {
        // Polynomial product of degree <= 6, then zeta^5 = 1 and
        // zeta^4 = -(1 + zeta + zeta^2 + zeta^3).
        let mut prod = vec![BigRat::zero(); 7];
        for (i, x) in a.coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coords.iter().enumerate() {
                prod[i + j] = &prod[i + j] + &(x * y);
            }
        }
        for e in (5..7).rev() {
            let c = std::mem::replace(&mut prod[e], BigRat::zero());
            prod[e - 5] = &prod[e - 5] + &c;
        }
        let c4 = std::mem::replace(&mut prod[4], BigRat::zero());
        let mut coords = [
            BigRat::zero(),
            BigRat::zero(),
            BigRat::zero(),
            BigRat::zero(),
        ];
        for (i, slot) in coords.iter_mut().enumerate() {
            *slot = &prod[i] - &c4;
        }
        Cyclotomic5 { coords }
    }

    fn from_i64(&self, n: i64) -> Cyclotomic5 {
        Cyclotomic5::from_rat(BigRat::from(n))
    }

    /// Field inverse via the product of conjugates: the norm is rational,
    /// so 1/a = conj_2(a)*conj_3(a)*conj_4(a) / N(a).
    fn try_inv(&self, a: &Cyclotomic5) -> Option<Cyclotomic5> {
        if self.is_zero(a) {
            return None;
        }
        let mut cofactor = a.conjugate(2);
        cofactor = self.mul(&cofactor, &a.conjugate(3));
        cofactor = self.mul(&cofactor, &a.conjugate(4));
        let norm = self.mul(a, &cofactor);
        let n = norm
            .as_rational()
            .expect("norm of a cyclotomic element is rational")
            .clone();
        assert!(!n.is_zero(), "nonzero field element has nonzero norm");
        let scale = BigRat::one() / n;
        Some(cofactor.scaled(&scale))
    }
}

/// Specializes a length-5 group-ring element at g -> zeta^j.
///
/// j = 0 is the augmentation embedded in Q(zeta); j = 1 is the quotient map
/// by the cyclotomic relation. Every choice is a ring morphism.
pub fn apply_character<E: ToRational>(x: &GroupRingElem<E>, j: u32) -> Cyclotomic5 {
    assert_eq!(
        x.components().len(),
        5,
        "character specialization needs a C5 group-ring element"
    );
    let ring = CycRing5;
    let mut acc = ring.zero();
    for (t, c) in x.components().iter().enumerate() {
        let c = c.to_rational();
        if c.is_zero() {
            continue;
        }
        let term = Cyclotomic5::zeta_pow((t as i64) * (j as i64)).scaled(&c);
        acc = ring.add(&acc, &term);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{GroupRing, IntRing};
    use num_bigint::BigInt;

    #[test]
    fn zeta_powers_satisfy_the_cyclotomic_relation() {
        let r = CycRing5;
        // 1 + z + z^2 + z^3 + z^4 = 0
        let mut s = r.zero();
        for t in 0..5 {
            s = r.add(&s, &Cyclotomic5::zeta_pow(t));
        }
        assert!(r.is_zero(&s));
        // z^2 * z^3 = 1
        assert_eq!(
            r.mul(&Cyclotomic5::zeta_pow(2), &Cyclotomic5::zeta_pow(3)),
            r.one()
        );
    }

    #[test]
    fn inverse_of_one_minus_zeta() {
        let r = CycRing5;
        let a = r.sub(&r.one(), &Cyclotomic5::zeta_pow(1));
        let inv = r.try_inv(&a).expect("1 - zeta is a unit");
        assert_eq!(r.mul(&a, &inv), r.one());
    }

    #[test]
    fn character_is_a_ring_morphism() {
        let g5 = GroupRing::new(IntRing, 5);
        let a = g5.from_components(vec![
            BigInt::from(2),
            BigInt::from(-1),
            BigInt::from(0),
            BigInt::from(3),
            BigInt::from(1),
        ]);
        let b = g5.from_components(vec![
            BigInt::from(1),
            BigInt::from(4),
            BigInt::from(-2),
            BigInt::from(0),
            BigInt::from(5),
        ]);
        let r = CycRing5;
        for j in 0..5 {
            let lhs = apply_character(&g5.mul(&a, &b), j);
            let rhs = r.mul(&apply_character(&a, j), &apply_character(&b, j));
            assert_eq!(lhs, rhs, "character {j} must commute with products");
        }
    }

    #[test]
    fn character_zero_is_the_augmentation() {
        let g5 = GroupRing::new(IntRing, 5);
        let a = g5.from_components(vec![
            BigInt::from(7),
            BigInt::from(-3),
            BigInt::from(2),
            BigInt::from(0),
            BigInt::from(1),
        ]);
        let chi0 = apply_character(&a, 0);
        assert_eq!(
            chi0.as_rational().unwrap(),
            &BigRat::from_int(&g5.augmentation(&a))
        );
    }
}
