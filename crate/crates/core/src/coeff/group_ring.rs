//! Group ring of a finite cyclic group over an exact base ring.
//!
//! An element is the dense vector of its components indexed by group
//! exponent: `components[t]` multiplies `g^t` for the distinguished
//! generator `g`. A crank series over this ring carries, in each q-power
//! coefficient, the full residue histogram of the statistic at once.

use super::Ring;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GroupRing<R: Ring> {
    base: R,
    order: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupRingElem<E> {
    components: Vec<E>,
}

impl<E> GroupRingElem<E> {
    /// Immutable view of the components; index t is the coefficient of g^t.
    pub fn components(&self) -> &[E] {
        &self.components
    }
}

impl<R: Ring> GroupRing<R> {
    pub fn new(base: R, order: usize) -> Self {
        assert!(order >= 1, "group ring needs a positive order");
        GroupRing { base, order }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    /// The basis element g^t; `t` is reduced into the group.
    pub fn generator_pow(&self, t: i64) -> GroupRingElem<R::Elem> {
        let mut components = vec![self.base.zero(); self.order];
        let idx = t.rem_euclid(self.order as i64) as usize;
        components[idx] = self.base.one();
        GroupRingElem { components }
    }

    /// Embeds a base-ring scalar as the g^0 component.
    pub fn scalar(&self, c: R::Elem) -> GroupRingElem<R::Elem> {
        let mut components = vec![self.base.zero(); self.order];
        components[0] = c;
        GroupRingElem { components }
    }

    pub fn from_components(&self, components: Vec<R::Elem>) -> GroupRingElem<R::Elem> {
        assert_eq!(
            components.len(),
            self.order,
            "component vector does not match group order"
        );
        GroupRingElem { components }
    }

    pub fn component<'a>(&self, a: &'a GroupRingElem<R::Elem>, r: usize) -> &'a R::Elem {
        assert!(r < self.order, "component index outside the group");
        &a.components[r]
    }

    /// The sum of all components: the image of the map sending g to 1.
    pub fn augmentation(&self, a: &GroupRingElem<R::Elem>) -> R::Elem {
        let mut acc = self.base.zero();
        for c in &a.components {
            acc = self.base.add(&acc, c);
        }
        acc
    }

    fn check(&self, a: &GroupRingElem<R::Elem>) {
        assert_eq!(
            a.components.len(),
            self.order,
            "group ring elements of mismatched order"
        );
    }
}

impl<R: Ring> Ring for GroupRing<R> {
    type Elem = GroupRingElem<R::Elem>;

    fn zero(&self) -> Self::Elem {
        GroupRingElem {
            components: vec![self.base.zero(); self.order],
        }
    }

    fn one(&self) -> Self::Elem {
        self.generator_pow(0)
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.check(a);
        a.components.iter().all(|c| self.base.is_zero(c))
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        self.check(a);
        GroupRingElem {
            components: a.components.iter().map(|c| self.base.neg(c)).collect(),
        }
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.check(a);
        self.check(b);
        GroupRingElem {
            components: a
                .components
                .iter()
                .zip(&b.components)
                .map(|(x, y)| self.base.add(x, y))
                .collect(),
        }
    }

    /// Cyclic convolution; zero components are skipped, so multiplying by a
    /// monomial `c*g^t` costs one pass.
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut out = self.zero();
        self.add_mul(&mut out, a, b);
        out
    }

    fn add_mul(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        self.check(a);
        self.check(b);
        self.check(acc);
        for (i, x) in a.components.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.components.iter().enumerate() {
                if self.base.is_zero(y) {
                    continue;
                }
                let idx = (i + j) % self.order;
                self.base.add_mul(&mut acc.components[idx], x, y);
            }
        }
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.scalar(self.base.from_i64(n))
    }

    /// Only monomials `c*g^t` with `c` a base-ring unit are recognized as
    /// units; that covers every inversion the series engine performs.
    fn try_inv(&self, a: &Self::Elem) -> Option<Self::Elem> {
        self.check(a);
        let mut found: Option<(usize, &R::Elem)> = None;
        for (t, c) in a.components.iter().enumerate() {
            if !self.base.is_zero(c) {
                if found.is_some() {
                    return None;
                }
                found = Some((t, c));
            }
        }
        let (t, c) = found?;
        let cinv = self.base.try_inv(c)?;
        let mut components = vec![self.base.zero(); self.order];
        components[(self.order - t) % self.order] = cinv;
        Some(GroupRingElem { components })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::IntRing;
    use num_bigint::BigInt;

    fn ring(order: usize) -> GroupRing<IntRing> {
        GroupRing::new(IntRing, order)
    }

    #[test]
    fn generator_powers_wrap_around() {
        let r = ring(5);
        assert_eq!(r.generator_pow(7), r.generator_pow(2));
        assert_eq!(r.generator_pow(-1), r.generator_pow(4));
        assert_eq!(r.mul(&r.generator_pow(3), &r.generator_pow(4)), r.generator_pow(2));
    }

    #[test]
    fn convolution_matches_hand_product() {
        // (1 + g)(1 + g + g^2) in C_3: 1 + 2g + 2g^2 + g^3 = 2 + 2g + 2g^2.
        let r = ring(3);
        let a = r.from_components(vec![BigInt::from(1), BigInt::from(1), BigInt::from(0)]);
        let b = r.from_components(vec![BigInt::from(1), BigInt::from(1), BigInt::from(1)]);
        let p = r.mul(&a, &b);
        assert_eq!(
            p.components(),
            &[BigInt::from(2), BigInt::from(2), BigInt::from(2)]
        );
    }

    #[test]
    fn augmentation_is_multiplicative() {
        let r = ring(4);
        let a = r.from_components(vec![1.into(), 2.into(), 0.into(), (-1).into()]);
        let b = r.from_components(vec![3.into(), 0.into(), 5.into(), 1.into()]);
        let lhs = r.augmentation(&r.mul(&a, &b));
        let rhs = r.augmentation(&a) * r.augmentation(&b);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn monomial_units_invert_and_sums_do_not() {
        let r = ring(5);
        let u = r.neg(&r.generator_pow(2));
        let inv = r.try_inv(&u).expect("-g^2 is a unit");
        assert_eq!(r.mul(&u, &inv), r.one());
        let s = r.add(&r.one(), &r.generator_pow(1));
        assert_eq!(r.try_inv(&s), None);
    }

    #[test]
    #[should_panic(expected = "mismatched order")]
    fn mixing_orders_panics() {
        let r3 = ring(3);
        let r5 = ring(5);
        let _ = r3.add(&r3.one(), &r5.one());
    }
}
