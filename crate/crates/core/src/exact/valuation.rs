//! p-adic valuations of integers, rationals and integer polynomials.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use super::modp::is_prime_u64;
use super::poly::IntPoly;
use crate::Error;

/// `nu_p(n)` for nonzero `n`; `None` for zero (valuation infinity).
pub fn int_valuation(n: &BigInt, p: u64) -> Option<u64> {
    if n.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    loop {
        let (q, r) = n.div_rem(&p);
        if !r.is_zero() {
            return Some(v);
        }
        n = q;
        v += 1;
    }
}

pub fn rational_valuation(r: &BigRational, p: u64) -> Option<i64> {
    let num = int_valuation(r.numer(), p)?;
    let den = int_valuation(r.denom(), p).unwrap_or(0);
    Some(num as i64 - den as i64)
}

fn check_prime(p: u64) -> Result<(), Error> {
    if is_prime_u64(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Gauss content valuation: the minimum of `nu_p` over the coefficients.
pub fn poly_valuation(f: &IntPoly, p: u64) -> Result<u64, Error> {
    check_prime(p)?;
    f.coeffs()
        .iter()
        .filter_map(|c| int_valuation(c, p))
        .min()
        .ok_or(Error::ZeroPolynomial)
}

/// Distinct prime divisors of a positive machine integer.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn content_valuations() {
        assert_eq!(poly_valuation(&p(&[-1, 4]), 2).unwrap(), 0);
        assert_eq!(poly_valuation(&p(&[16, 4, 8]), 2).unwrap(), 2);
        let prod = &p(&[2, 2]) * &p(&[6, 4]);
        assert_eq!(prod, p(&[12, 20, 8]));
        assert_eq!(poly_valuation(&prod, 2).unwrap(), 2);
    }

    #[test]
    fn composite_modulus_rejected() {
        assert_eq!(poly_valuation(&p(&[1, 2]), 6), Err(Error::NotPrime(6)));
        assert_eq!(poly_valuation(&IntPoly::zero(), 3), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn rational_and_divisors() {
        let r = BigRational::new(BigInt::from(3), BigInt::from(4));
        assert_eq!(rational_valuation(&r, 2), Some(-2));
        assert_eq!(rational_valuation(&r, 3), Some(1));
        assert_eq!(prime_divisors(12), vec![2, 3]);
        assert_eq!(prime_divisors(97), vec![97]);
    }
}
