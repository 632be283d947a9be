use std::cmp::Ordering;

use multibrot_core::algebraic::AlgebraicNumber;
use multibrot_core::dynamics::{
    attracting_cycle_probe, constants, critical_orbit, is_pcf, lambda_to_x, real_slice, x_to_c, x_to_c_enclosure, Outcome,
    Parameter,
};
use multibrot_core::exact::rational::{int, rat};
use multibrot_core::exact::IntPoly;

#[test]
fn constants_have_closed_forms() {
    let k3 = constants(3).unwrap();
    // alpha(3) = 2 sqrt 3 / 9, so 27 alpha^2 = 4
    assert_eq!(k3.alpha.minpoly(), &IntPoly::from_i64(&[-4, 0, 27]));
    assert!((k3.alpha.to_f64() - 2.0 * 3f64.sqrt() / 9.0).abs() < 1e-15);
    let k2 = constants(2).unwrap();
    assert_eq!(k2.alpha.as_rational(), Some(rat(1, 4)));
    assert_eq!(k2.beta.as_rational(), Some(int(-2)));
    assert_eq!(k2.gamma.as_rational(), Some(rat(-3, 4)));
    let k4 = constants(4).unwrap();
    assert!((k4.beta.to_f64() + 2f64.cbrt()).abs() < 1e-15);
    assert!((k4.alpha.to_f64() - 3.0 * 4f64.powf(-4.0 / 3.0)).abs() < 1e-15);
    let (lo, hi) = real_slice(5).unwrap();
    assert_eq!(lo.cmp_real(&hi.neg()), Ordering::Equal);
}

#[test]
fn period_doubling_multipliers() {
    for d in [2, 4, 6] {
        for lambda in [rat(1, 4), rat(1, 2), rat(3, 4)] {
            let x = lambda_to_x(d, &lambda).unwrap();
            let c = x_to_c_enclosure(d, &x.enclosure(128).unwrap()).unwrap();
            let probe = attracting_cycle_probe(d, c.mid_f64(), 200_000).expect("attracting cycle");
            assert_eq!(probe.period, 2, "d={d} lambda={lambda}");
            let target = lambda.numer().to_string().parse::<f64>().unwrap() / lambda.denom().to_string().parse::<f64>().unwrap();
            assert!((probe.multiplier - target).abs() < 1e-6, "d={d} {} vs {target}", probe.multiplier);
        }
        assert_eq!(x_to_c(d, &int(0)).unwrap().as_rational(), Some(int(-1)));
        let gamma = constants(d).unwrap().gamma;
        let end: AlgebraicNumber = x_to_c(d, &int(1)).unwrap();
        assert_eq!(end.minpoly(), gamma.minpoly());
        assert_eq!(end.cmp_real(&gamma), Ordering::Equal);
    }
}

#[test]
fn critical_orbits() {
    let rec = critical_orbit(3, &Parameter::Rational(int(-1)), 20).unwrap();
    assert!(matches!(rec.outcome, Outcome::Escaped { .. }));
    assert!(is_pcf(2, &int(-2)));
    assert!(is_pcf(4, &int(-1)));
    assert!(!is_pcf(4, &int(-2)));
    assert!(!is_pcf(2, &rat(-3, 4)));
}
