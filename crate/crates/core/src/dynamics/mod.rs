//! The unicritical family `f_c(z) = z^d + c` on the real line.
//!
//! Holds the special parameters `alpha`, `beta`, `gamma`, `delta` of each
//! degree, the real slice of the multibrot set, and the exact classification
//! of real fixed points. Orbits live in [`orbit`], the period-doubling
//! parametrization in [`bifurcation`].

pub mod bifurcation;
pub mod orbit;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebraic::{AlgebraicNumber, RootLocation};
use crate::exact::dyadic::DyadicInterval;
use crate::exact::factor::factor_irreducible;
use crate::exact::poly::IntPoly;
use crate::exact::rational::RationalSerde;
use crate::exact::sturm::{isolate_real_roots, refine_root, Bound, RationalInterval};
use crate::Error;

pub use bifurcation::{g_lambda, lambda_to_x, x_to_c, x_to_c_enclosure};
pub use orbit::{attracting_cycle_probe, critical_orbit, is_pcf, pcf_decision, CycleProbe, OrbitRecord, Outcome};

/// A parameter of the family: exact rational, real algebraic number, or
/// an enclosure of a real value.
#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Parameter {
    Rational(#[serde(with = "RationalSerde")] BigRational),
    Algebraic(AlgebraicNumber),
    Interval(DyadicInterval),
}

impl From<BigRational> for Parameter {
    fn from(r: BigRational) -> Self {
        Parameter::Rational(r)
    }
}

impl From<AlgebraicNumber> for Parameter {
    fn from(a: AlgebraicNumber) -> Self {
        match a.as_rational() {
            Some(r) => Parameter::Rational(r),
            None => Parameter::Algebraic(a),
        }
    }
}

/// `(d, c)` for `f_c(z) = z^d + c`.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyParams {
    pub d: u32,
    pub c: Parameter,
}

impl FamilyParams {
    pub fn new(d: u32, c: Parameter) -> Result<Self, Error> {
        check_degree(d)?;
        Ok(FamilyParams { d, c })
    }
}

pub(crate) fn check_degree(d: u32) -> Result<(), Error> {
    if d < 2 {
        Err(Error::InvalidArgument(format!("degree must be at least 2, got {d}")))
    } else {
        Ok(())
    }
}

/// The four special parameters of degree `d`.
#[derive(Clone, Debug, Serialize)]
pub struct Constants {
    pub d: u32,
    /// `(d - 1) d^(-d/(d-1))`, the cusp of the main component.
    pub alpha: AlgebraicNumber,
    /// `-2^(1/(d-1))`, the left end of the real slice for even `d`.
    pub beta: AlgebraicNumber,
    /// `-(d + 1) d^(-d/(d-1))`, where the attracting fixed point doubles.
    pub gamma: AlgebraicNumber,
    /// `d^(-1/(d-1))`, the parabolic fixed point at `c = alpha`.
    pub delta: AlgebraicNumber,
}

fn big(n: u64) -> BigInt {
    BigInt::from(n)
}

/// `a T^k + b`.
fn binomial_poly(a: BigInt, k: usize, b: BigInt) -> IntPoly {
    &IntPoly::monomial(a, k) + &IntPoly::constant(b)
}

fn sign_pow(k: u32) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn positive_root(p: &IntPoly) -> AlgebraicNumber {
    AlgebraicNumber::unique_root_in(p, &Bound::from(0), &Bound::PosInf).expect("one positive root")
}

fn negative_root(p: &IntPoly) -> AlgebraicNumber {
    AlgebraicNumber::unique_root_in(p, &Bound::NegInf, &Bound::from(0)).expect("one negative root")
}

pub fn constants(d: u32) -> Result<Constants, Error> {
    check_degree(d)?;
    let k = (d - 1) as usize;
    let dd = big(d as u64).pow(d);
    let alpha = positive_root(&binomial_poly(dd.clone(), k, -big(d as u64 - 1).pow(d - 1)));
    let beta = negative_root(&binomial_poly(BigInt::one(), k, -sign_pow(d - 1) * 2));
    let gamma = negative_root(&binomial_poly(dd, k, -sign_pow(d - 1) * big(d as u64 + 1).pow(d - 1)));
    let delta = positive_root(&binomial_poly(big(d as u64), k, -BigInt::one()));
    Ok(Constants {
        d,
        alpha,
        beta,
        gamma,
        delta,
    })
}

/// `M_d` meets the real line in `[-alpha, alpha]` for odd `d` and in
/// `[beta, alpha]` for even `d`.
pub fn real_slice(d: u32) -> Result<(AlgebraicNumber, AlgebraicNumber), Error> {
    let k = constants(d)?;
    let lo = if d % 2 == 1 { k.alpha.neg() } else { k.beta };
    Ok((lo, k.alpha))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FixedPointClass {
    Superattracting,
    Attracting,
    Parabolic,
    Repelling,
}

/// The multiplier `d z^(d-1)`: exact when rational, always enclosed.
#[derive(Clone, Debug, Serialize)]
pub struct Multiplier {
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "opt_rational")]
    pub exact: Option<BigRational>,
    pub enclosure: DyadicInterval,
}

fn opt_rational<S: serde::Serializer>(r: &Option<BigRational>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => RationalSerde::serialize(r, s),
        None => s.serialize_none(),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassifiedFixedPoint {
    pub location: AlgebraicNumber,
    pub multiplier: Multiplier,
    pub class: FixedPointClass,
}

const FIXED_POINT_BITS: u32 = 64;

/// Every real fixed point of `f_c`, ascending, with its certified class.
///
/// For algebraic `c` with minimal polynomial `M`, the fixed points are real
/// roots of `M(z - z^d)`; a root belongs to this `c` (rather than to a
/// conjugate) once the enclosure of `z - z^d` falls inside the isolating
/// interval of `c`.
pub fn real_fixed_points(d: u32, c: &Parameter) -> Result<Vec<ClassifiedFixedPoint>, Error> {
    check_degree(d)?;
    let shift = &IntPoly::x() - &IntPoly::monomial(BigInt::one(), d as usize);
    let (minpoly, target) = match c {
        Parameter::Rational(r) => (IntPoly::new(vec![-r.numer().clone(), r.denom().clone()]), None),
        Parameter::Algebraic(a) => match a.locator() {
            RootLocation::Real(iv) => (a.minpoly().clone(), Some(iv.clone())),
            RootLocation::Complex(_) => {
                return Err(Error::InvalidArgument("fixed points need a real parameter".into()))
            }
        },
        Parameter::Interval(_) => {
            return Err(Error::InvalidArgument("fixed points need an exact parameter".into()))
        }
    };
    let q = minpoly.compose(&shift);
    let mut out = Vec::new();
    for g in factor_irreducible(&q).irreducibles() {
        for iv in isolate_real_roots(g)? {
            let keep = match &target {
                None => true,
                Some(civ) => maps_into(g, &iv, d, civ),
            };
            if keep {
                let z = AlgebraicNumber::real_root(g, iv)?;
                out.push(classify(d, z));
            }
        }
    }
    out.sort_by(|a, b| a.location.cmp_real(&b.location));
    Ok(out)
}

/// Whether the root of `g` isolated by `iv` is sent by `z - z^d` into the
/// isolating interval `civ` of an irrational parameter.
fn maps_into(g: &IntPoly, iv: &RationalInterval, d: u32, civ: &RationalInterval) -> bool {
    let mut iv = iv.clone();
    let mut bits = FIXED_POINT_BITS;
    loop {
        let z = DyadicInterval::from_bounds(&iv.lo, &iv.hi, bits);
        let img = z.sub(&z.powi(d));
        if img.hi() < civ.lo || img.lo() > civ.hi {
            return false;
        }
        if civ.lo < img.lo() && img.hi() < civ.hi {
            return true;
        }
        let w = iv.width() / BigInt::from(1u64 << 16);
        iv = refine_root(g, &iv, &w);
        bits += 32;
    }
}

fn classify(d: u32, z: AlgebraicNumber) -> ClassifiedFixedPoint {
    let dd = BigRational::from_integer(BigInt::from(d));
    if z.is_zero() {
        return ClassifiedFixedPoint {
            location: z,
            multiplier: Multiplier {
                exact: Some(BigRational::zero()),
                enclosure: DyadicInterval::from_int(0, FIXED_POINT_BITS),
            },
            class: FixedPointClass::Superattracting,
        };
    }
    let k = (d - 1) as usize;
    for sign in [1i64, -1] {
        // d z^(d-1) = sign exactly when the minimal polynomial divides it
        let p = binomial_poly(BigInt::from(d), k, BigInt::from(-sign));
        if p.divisible_by(z.minpoly()) {
            return ClassifiedFixedPoint {
                location: z,
                multiplier: Multiplier {
                    exact: Some(BigRational::from_integer(sign.into())),
                    enclosure: DyadicInterval::from_int(sign, FIXED_POINT_BITS),
                },
                class: FixedPointClass::Parabolic,
            };
        }
    }
    let exact = z.as_rational().map(|r| &dd * num_traits::pow(r, k));
    let one = BigRational::one();
    let mut bits = FIXED_POINT_BITS;
    loop {
        let zi = z.enclosure(bits).expect("real fixed point");
        let m = zi.powi(k as u32).mul_rational(&dd);
        let class = if m.abs_upper() < one {
            Some(FixedPointClass::Attracting)
        } else if m.abs_lower() > one {
            Some(FixedPointClass::Repelling)
        } else {
            None
        };
        if let Some(class) = class {
            return ClassifiedFixedPoint {
                location: z,
                multiplier: Multiplier { exact, enclosure: m },
                class,
            };
        }
        bits *= 2;
    }
}

impl ClassifiedFixedPoint {
    pub fn is_attracting(&self) -> bool {
        matches!(self.class, FixedPointClass::Attracting | FixedPointClass::Superattracting)
    }

    pub fn multiplier_is(&self, v: i64) -> bool {
        self.multiplier.exact.as_ref() == Some(&BigRational::from_integer(v.into()))
    }

    pub fn multiplier_f64(&self) -> f64 {
        self.multiplier.enclosure.mid_f64()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn degree_two_constants() {
        let k = constants(2).unwrap();
        assert_eq!(k.alpha.as_rational(), Some(rat(1, 4)));
        assert_eq!(k.beta.as_rational(), Some(int(-2)));
        assert_eq!(k.gamma.as_rational(), Some(rat(-3, 4)));
        assert_eq!(k.delta.as_rational(), Some(rat(1, 2)));
        assert!(constants(1).is_err());
    }

    #[test]
    fn cubic_and_quartic_constants() {
        let k3 = constants(3).unwrap();
        assert_eq!(k3.alpha.minpoly(), &p(&[-4, 0, 27]));
        assert!((k3.alpha.to_f64() - 2.0 * 3f64.sqrt() / 9.0).abs() < 1e-15);
        let k4 = constants(4).unwrap();
        assert_eq!(k4.beta.minpoly(), &p(&[2, 0, 0, 1]));
        assert!((k4.beta.to_f64() + 2f64.cbrt()).abs() < 1e-15);
        let g4 = -5.0 * 4f64.powf(-4.0 / 3.0);
        assert!((k4.gamma.to_f64() - g4).abs() < 1e-14);
        let k5 = constants(5).unwrap();
        assert!((k5.delta.to_f64() - 5f64.powf(-0.25)).abs() < 1e-15);
    }

    #[test]
    fn slices() {
        let (lo, hi) = real_slice(2).unwrap();
        assert_eq!((lo.as_rational(), hi.as_rational()), (Some(int(-2)), Some(rat(1, 4))));
        let (lo, hi) = real_slice(3).unwrap();
        assert_eq!(lo, hi.neg());
        let (lo, hi) = real_slice(4).unwrap();
        assert!((lo.to_f64() + 2f64.cbrt()).abs() < 1e-15);
        assert!((hi.to_f64() - 3.0 * 4f64.powf(-4.0 / 3.0)).abs() < 1e-15);
    }

    #[test]
    fn fixed_points_at_zero() {
        let fps = real_fixed_points(2, &Parameter::Rational(int(0))).unwrap();
        assert_eq!(fps.len(), 2);
        assert_eq!(fps[0].class, FixedPointClass::Superattracting);
        assert_eq!(fps[1].location.as_rational(), Some(int(1)));
        assert_eq!(fps[1].class, FixedPointClass::Repelling);
        assert!(fps[1].multiplier_is(2));
    }

    #[test]
    fn parabolic_fixed_points() {
        let fps = real_fixed_points(2, &Parameter::Rational(rat(1, 4))).unwrap();
        assert_eq!(fps.len(), 1);
        assert_eq!(fps[0].location.as_rational(), Some(rat(1, 2)));
        assert!(fps[0].multiplier_is(1));
        let k = constants(3).unwrap();
        let fps = real_fixed_points(3, &Parameter::from(k.alpha.clone())).unwrap();
        let para: Vec<_> = fps.iter().filter(|f| f.class == FixedPointClass::Parabolic).collect();
        assert_eq!(para.len(), 1);
        assert_eq!(para[0].location, k.delta);
        assert!(para[0].multiplier_is(1));
        assert_eq!(fps.len(), 2);
    }

    #[test]
    fn gamma_is_flip() {
        let fps = real_fixed_points(2, &Parameter::Rational(rat(-3, 4))).unwrap();
        assert!(fps.iter().any(|f| f.multiplier_is(-1)));
    }
}
