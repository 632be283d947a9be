use multibrot_core::algebraic::root_valuations;
use multibrot_core::exact::resultant::sylvester_resultant;
use multibrot_core::exact::sturm::count_closed;
use multibrot_core::exact::valuation::{int_valuation, poly_valuation};
use multibrot_core::exact::{discriminant, factor_irreducible, isolate_real_roots, resultant, sturm_count, Bound, IntPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn poly(max_deg: usize, range: i64) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-range..=range, 1..=max_deg + 1)
        .prop_map(|c| IntPoly::from_i64(&c))
        .prop_filter("nonzero", |p| !p.is_zero())
}

fn nonconstant(max_deg: usize, range: i64) -> impl Strategy<Value = IntPoly> {
    poly(max_deg, range).prop_filter("degree >= 1", |p| p.deg() >= 1)
}

const PRIMES: [u64; 5] = [2, 3, 5, 7, 11];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]
    #[test]
    fn gauss_content_is_multiplicative(f in poly(6, 60), g in poly(6, 60), i in 0usize..5) {
        let p = PRIMES[i];
        let fg = &f * &g;
        prop_assert_eq!(
            poly_valuation(&fg, p).unwrap(),
            poly_valuation(&f, p).unwrap() + poly_valuation(&g, p).unwrap()
        );
        prop_assert_eq!(fg.content(), f.content() * g.content());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]
    #[test]
    fn newton_valuations_sum_to_end_valuations(f in nonconstant(7, 200), i in 0usize..5) {
        prop_assume!(!f.coeff(0).is_zero());
        let p = PRIMES[i];
        let vals = root_valuations(&f, p).unwrap();
        prop_assert_eq!(vals.len(), f.deg());
        let sum: BigRational = vals.iter().sum();
        let expect = int_valuation(&f.coeff(0), p).unwrap() as i64
            - int_valuation(f.leading().unwrap(), p).unwrap() as i64;
        prop_assert_eq!(sum, BigRational::from_integer(BigInt::from(expect)));
    }

    #[test]
    fn sturm_agrees_with_isolation(f in nonconstant(8, 30)) {
        let sf = f.square_free_part();
        let ivs = isolate_real_roots(&sf).unwrap();
        let total = sturm_count(&sf, &Bound::NegInf, &Bound::PosInf).unwrap();
        prop_assert_eq!(ivs.len(), total);
        for iv in &ivs {
            prop_assert_eq!(count_closed(&sf, &iv.lo, &iv.hi).unwrap(), 1);
        }
        for w in ivs.windows(2) {
            prop_assert!(w[0].hi < w[1].lo);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]
    #[test]
    fn resultant_matches_sylvester_and_swaps_sign(f in nonconstant(5, 20), g in nonconstant(5, 20)) {
        let rfg = resultant(&f, &g).unwrap();
        prop_assert_eq!(&rfg, &sylvester_resultant(&f, &g));
        let sign = if (f.deg() * g.deg()) % 2 == 1 { -1 } else { 1 };
        prop_assert_eq!(resultant(&g, &f).unwrap(), rfg * sign);
    }

    #[test]
    fn discriminant_vanishes_iff_repeated_root(f in nonconstant(6, 12), g in nonconstant(2, 5), square in any::<bool>()) {
        let f = if square { &f * &(&g * &g) } else { f };
        let disc = discriminant(&f).unwrap();
        let common = f.gcd(&f.derivative());
        prop_assert_eq!(disc.is_zero(), common.deg() > 0);
    }

    #[test]
    fn factors_multiply_back(f in nonconstant(4, 15), g in nonconstant(4, 15)) {
        let h = &f * &g;
        let fac = factor_irreducible(&h);
        prop_assert_eq!(fac.expand(), h);
        for (q, m) in &fac.factors {
            prop_assert!(*m >= 1);
            prop_assert!(q.is_primitive());
            prop_assert!(q.leading().unwrap().is_positive());
        }
    }
}
