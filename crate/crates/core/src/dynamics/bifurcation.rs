//! Period-doubling parametrization. A 2-cycle `{z, w}` with `w = x z` and
//! multiplier `lambda` exists exactly when `g_lambda(x) = 0`, and the
//! parameter is then `c(x) = -S_d(x) / S_{d-1}(x)^(d/(d-1))` with
//! `S_k(x) = 1 + x + ... + x^k`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::check_degree;
use crate::algebraic::AlgebraicNumber;
use crate::exact::dyadic::DyadicInterval;
use crate::exact::poly::IntPoly;
use crate::exact::sturm::Bound;
use crate::Error;

/// `1 + x + ... + x^k` as an integer polynomial.
fn geometric(k: u32) -> IntPoly {
    IntPoly::new(vec![BigInt::one(); k as usize + 1])
}

/// `q g_lambda(x)` for `lambda = p / q`, where
/// `g_lambda(x) = lambda S_{d-1}(x)^2 - d^2 x^(d-1)`.
pub fn g_lambda(d: u32, lambda: &BigRational) -> Result<IntPoly, Error> {
    check_degree(d)?;
    let s = geometric(d - 1);
    let sq = &s * &s;
    let lead = IntPoly::monomial(lambda.denom() * BigInt::from(d * d), (d - 1) as usize);
    Ok(&sq.scale(lambda.numer()) - &lead)
}

/// The unique root of `g_lambda` in `(0, 1)`, certified by Sturm counts.
pub fn lambda_to_x(d: u32, lambda: &BigRational) -> Result<AlgebraicNumber, Error> {
    check_degree(d)?;
    if !lambda.is_positive() || lambda >= &BigRational::one() {
        return Err(Error::InvalidArgument(format!("lambda must lie in (0, 1), got {lambda}")));
    }
    let g = g_lambda(d, lambda)?;
    AlgebraicNumber::unique_root_in(&g, &Bound::from(0), &Bound::from(1))
        .ok_or_else(|| Error::InvalidArgument("g_lambda has no unique root in (0, 1)".into()))
}

fn check_unit_interval(x: &BigRational) -> Result<(), Error> {
    if x.is_negative() || x > &BigRational::one() {
        Err(Error::InvalidArgument(format!("x must lie in [0, 1], got {x}")))
    } else {
        Ok(())
    }
}

/// Exact `c(x)` for rational `x`: the negative real root of
/// `S_{d-1}^d T^(d-1) - (-1)^(d-1) S_d^(d-1)`.
pub fn x_to_c(d: u32, x: &BigRational) -> Result<AlgebraicNumber, Error> {
    check_degree(d)?;
    check_unit_interval(x)?;
    let s0 = geometric(d - 1).eval_rational(x);
    let s1 = geometric(d).eval_rational(x);
    let lead = num_traits::pow(s0, d as usize);
    let mut tail = num_traits::pow(s1, (d - 1) as usize);
    if d.is_multiple_of(2) {
        tail = -tail;
    }
    // clear denominators of lead T^(d-1) - tail
    let den = lead.denom() * tail.denom();
    let a = lead.numer() * (&den / lead.denom());
    let b = tail.numer() * (&den / tail.denom());
    let p = &IntPoly::monomial(a, (d - 1) as usize) - &IntPoly::constant(b);
    AlgebraicNumber::unique_root_in(&p, &Bound::NegInf, &Bound::from(0))
        .ok_or_else(|| Error::InvalidArgument("no negative root for c(x)".into()))
}

/// Enclosure of `c(x)` for `x` known only through an enclosure.
pub fn x_to_c_enclosure(d: u32, x: &DyadicInterval) -> Result<DyadicInterval, Error> {
    check_degree(d)?;
    check_unit_interval(&x.lo())?;
    check_unit_interval(&x.hi())?;
    let bits = x.bits();
    let mut s0 = DyadicInterval::from_int(0, bits);
    let mut pw = DyadicInterval::from_int(1, bits);
    for _ in 0..d {
        s0 = s0.add(&pw);
        pw = pw.mul(x);
    }
    let s1 = s0.add(&pw);
    let denom = s0.pow_rational(d as i64, d - 1);
    Ok(s1.div(&denom).neg())
}

/// Multiplier `lambda` of the 2-cycle at `x`, recovered from `g_lambda = 0`.
pub fn multiplier_of_x(d: u32, x: &BigRational) -> BigRational {
    let s = geometric(d - 1).eval_rational(x);
    if s.is_zero() {
        return BigRational::zero();
    }
    BigRational::from_integer(BigInt::from(d * d)) * num_traits::pow(x.clone(), (d - 1) as usize) / (&s * &s)
}
