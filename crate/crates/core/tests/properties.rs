//! Property tests with shrinking for the series engine and coefficient
//! rings: window bookkeeping laws, arithmetic axioms, and the operations
//! that must be mutually inverse.

use num_bigint::BigInt;
use proptest::prelude::*;

use qcrank::{
    apply_character, BigRat, CycRing5, GroupRing, IntRing, RatRing, Ring, SeriesError,
    TruncatedSeries,
};

fn rat_strategy() -> impl Strategy<Value = BigRat> {
    (-50i64..50, 1i64..20).prop_map(|(n, d)| BigRat::new(n, d))
}

fn series_strategy() -> impl Strategy<Value = TruncatedSeries<RatRing>> {
    (-4i64..5, prop::collection::vec(rat_strategy(), 0..12))
        .prop_map(|(v, coeffs)| TruncatedSeries::from_coeffs(RatRing, v, coeffs))
}

/// A series whose leading coefficient is a unit, for inversion tests.
fn unit_series_strategy() -> impl Strategy<Value = TruncatedSeries<RatRing>> {
    (
        -4i64..5,
        (1i64..50, 1i64..20),
        prop::collection::vec(rat_strategy(), 0..10),
    )
        .prop_map(|(v, (ln, ld), tail)| {
            let mut coeffs = vec![BigRat::new(ln, ld)];
            coeffs.extend(tail);
            TruncatedSeries::from_coeffs(RatRing, v, coeffs)
        })
}

fn agree(a: &TruncatedSeries<RatRing>, b: &TruncatedSeries<RatRing>) -> Result<(), String> {
    let upto = a.precision().min(b.precision());
    match a.first_difference(b, upto) {
        Ok(None) => Ok(()),
        Ok(Some((e, x, y))) => Err(format!("differ at q^{e}: {x} vs {y}")),
        Err(e) => Err(e.to_string()),
    }
}

proptest! {
    #[test]
    fn windows_are_consistent(f in series_strategy()) {
        prop_assert!(f.valuation() <= f.precision());
        // Every in-window coefficient is readable; the first out-of-window
        // exponent is a hard error, not a silent zero.
        for e in f.valuation()..f.precision() {
            prop_assert!(f.coeff(e).is_ok());
        }
        match f.coeff(f.precision()) {
            Err(SeriesError::PrecisionExceeded { exponent, precision }) => {
                prop_assert_eq!(exponent, f.precision());
                prop_assert_eq!(precision, f.precision());
            }
            other => return Err(TestCaseError::fail(format!(
                "read past precision returned {other:?}"
            ))),
        }
    }

    #[test]
    fn multiplication_window_law(f in series_strategy(), g in series_strategy()) {
        let prod = &f * &g;
        if f.is_zero_window() || g.is_zero_window() {
            prop_assert!(prod.is_zero_window());
        } else {
            let expected = (f.precision() + g.valuation())
                .min(g.precision() + f.valuation());
            prop_assert_eq!(prod.precision(), expected);
            prop_assert!(prod.valuation() >= f.valuation() + g.valuation());
        }
    }

    #[test]
    fn addition_window_law(f in series_strategy(), g in series_strategy()) {
        let sum = &f + &g;
        prop_assert_eq!(sum.precision(), f.precision().min(g.precision()));
    }

    #[test]
    fn ring_axioms_hold(
        f in series_strategy(),
        g in series_strategy(),
        h in series_strategy(),
    ) {
        agree(&(&f + &g), &(&g + &f)).map_err(TestCaseError::fail)?;
        agree(&(&f * &g), &(&g * &f)).map_err(TestCaseError::fail)?;
        agree(&(&(&f * &g) * &h), &(&f * &(&g * &h))).map_err(TestCaseError::fail)?;
        agree(&(&f * &(&g + &h)), &(&(&f * &g) + &(&f * &h)))
            .map_err(TestCaseError::fail)?;
    }

    #[test]
    fn parallel_and_sequential_products_match(
        f in series_strategy(),
        g in series_strategy(),
    ) {
        let par = &f * &g;
        let seq = f.mul_sequential(&g);
        prop_assert_eq!(par.valuation(), seq.valuation());
        prop_assert_eq!(par.precision(), seq.precision());
        agree(&par, &seq).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn inversion_roundtrip(f in unit_series_strategy()) {
        let inv = f.invert().expect("leading coefficient is a unit");
        // Inversion preserves the window length and negates the valuation.
        prop_assert_eq!(
            inv.precision() - inv.valuation(),
            f.precision() - f.valuation()
        );
        prop_assert_eq!(inv.valuation(), -f.valuation());
        let prod = &f * &inv;
        let one = TruncatedSeries::monomial(RatRing.one(), RatRing, 0, prod.precision());
        agree(&prod, &one).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn binomial_division_inverts_multiplication(
        f in series_strategy(),
        c in rat_strategy(),
        step in 1u32..6,
    ) {
        let mut g = f.clone();
        g.mul_binomial(&c, step);
        g.div_binomial(&c, step);
        agree(&g, &f).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn substitution_then_dissection_roundtrips(
        f in series_strategy(),
        m in 1u32..6,
    ) {
        let sub = f.substitute_q_power(m);
        prop_assert_eq!(sub.precision(), m as i64 * f.precision());
        let back = sub.dissect(0, m);
        agree(&back, &f).map_err(TestCaseError::fail)?;
        // Off-residue strands of a pure q^m-series hold no nonzero terms.
        for r in 1..m {
            prop_assert!(sub.dissect(r, m).is_zero_window());
        }
    }

    #[test]
    fn dissection_strands_reassemble(f in series_strategy(), m in 1u32..6) {
        let mut sum: Option<TruncatedSeries<RatRing>> = None;
        for r in 0..m {
            let strand = f.dissect(r, m).substitute_q_power(m).shift(r as i64);
            sum = Some(match sum {
                None => strand,
                Some(acc) => &acc + &strand,
            });
        }
        agree(&sum.expect("m >= 1"), &f).map_err(TestCaseError::fail)?;
    }

    #[test]
    fn shift_and_truncate_compose(f in series_strategy(), s in -5i64..6) {
        let back = f.clone().shift(s).shift(-s);
        prop_assert_eq!(back.valuation(), f.valuation());
        prop_assert_eq!(back.precision(), f.precision());
        agree(&back, &f).map_err(TestCaseError::fail)?;

        let cut = f.precision().min(f.valuation().max(0));
        let truncated = f.clone().truncate(cut);
        prop_assert_eq!(truncated.precision(), cut);
    }

    #[test]
    fn scalar_rationals_form_a_field(a in rat_strategy(), b in rat_strategy(), c in rat_strategy()) {
        let ring = RatRing;
        prop_assert_eq!(ring.add(&a, &b), ring.add(&b, &a));
        prop_assert_eq!(ring.mul(&a, &b), ring.mul(&b, &a));
        prop_assert_eq!(
            ring.mul(&a, &ring.add(&b, &c)),
            ring.add(&ring.mul(&a, &b), &ring.mul(&a, &c))
        );
        if !ring.is_zero(&a) {
            let inv = ring.try_inv(&a).expect("nonzero rational inverts");
            prop_assert_eq!(ring.mul(&a, &inv), ring.one());
        }
    }

    #[test]
    fn group_ring_axioms_hold(
        m in 2usize..8,
        xs in prop::collection::vec(-30i64..31, 8),
        ys in prop::collection::vec(-30i64..31, 8),
        zs in prop::collection::vec(-30i64..31, 8),
    ) {
        let ring = GroupRing::new(IntRing, m);
        let take = |v: &[i64]| {
            ring.from_components(v[..m].iter().map(|&x| BigInt::from(x)).collect())
        };
        let (x, y, z) = (take(&xs), take(&ys), take(&zs));
        prop_assert_eq!(ring.mul(&x, &y), ring.mul(&y, &x));
        prop_assert_eq!(
            ring.mul(&x, &ring.mul(&y, &z)),
            ring.mul(&ring.mul(&x, &y), &z)
        );
        prop_assert_eq!(
            ring.mul(&x, &ring.add(&y, &z)),
            ring.add(&ring.mul(&x, &y), &ring.mul(&x, &z))
        );
        // g^m = 1: multiplying by the generator m times is the identity.
        let mut rotated = x.clone();
        for _ in 0..m {
            rotated = ring.mul(&rotated, &ring.generator_pow(1));
        }
        prop_assert_eq!(rotated, x.clone());
        // The augmentation is a ring morphism onto Z.
        prop_assert_eq!(
            ring.augmentation(&ring.mul(&x, &y)),
            ring.augmentation(&x) * ring.augmentation(&y)
        );
    }

    #[test]
    fn characters_are_ring_morphisms(
        xs in prop::collection::vec(-30i64..31, 5),
        ys in prop::collection::vec(-30i64..31, 5),
        j in 0u32..5,
    ) {
        let ring = GroupRing::new(IntRing, 5);
        let cyc = CycRing5;
        let x = ring.from_components(xs.iter().map(|&v| BigInt::from(v)).collect());
        let y = ring.from_components(ys.iter().map(|&v| BigInt::from(v)).collect());
        prop_assert_eq!(
            apply_character(&ring.add(&x, &y), j),
            cyc.add(&apply_character(&x, j), &apply_character(&y, j))
        );
        prop_assert_eq!(
            apply_character(&ring.mul(&x, &y), j),
            cyc.mul(&apply_character(&x, j), &apply_character(&y, j))
        );
    }

    #[test]
    fn cyclotomic_inverses_roundtrip(coords in prop::collection::vec((-9i64..10, 1i64..5), 4)) {
        let cyc = CycRing5;
        let mut x = cyc.zero();
        for (t, (n, d)) in coords.iter().enumerate() {
            let basis = qcrank::Cyclotomic5::zeta_pow(t as i64);
            let scaled = cyc.mul(&basis, &qcrank::Cyclotomic5::from_rat(BigRat::new(*n, *d)));
            x = cyc.add(&x, &scaled);
        }
        match cyc.try_inv(&x) {
            Some(inv) => prop_assert_eq!(cyc.mul(&x, &inv), cyc.one()),
            None => prop_assert!(cyc.is_zero(&x)),
        }
    }
}
