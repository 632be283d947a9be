//! Resultants and discriminants over the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::IntPoly;
use crate::Error;

/// `Res(P, Q) = lc(P)^deg Q * prod Q(alpha_i)` over the roots of `P`,
/// computed by the subresultant PRS.
pub fn resultant(p: &IntPoly, q: &IntPoly) -> Result<BigInt, Error> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::UndefinedResultant);
    }
    Ok(subresultant(p, q))
}

fn subresultant(p: &IntPoly, q: &IntPoly) -> BigInt {
    let (mut a, mut b, mut s) = if p.deg() >= q.deg() {
        (p.clone(), q.clone(), BigInt::one())
    } else {
        let sign = if p.deg() % 2 == 1 && q.deg() % 2 == 1 {
            -BigInt::one()
        } else {
            BigInt::one()
        };
        (q.clone(), p.clone(), sign)
    };
    if b.deg() == 0 {
        return s * b.coeff(0).pow(a.deg() as u32);
    }
    let ca = a.content();
    let cb = b.content();
    a = a.div_scalar_exact(&ca);
    b = b.div_scalar_exact(&cb);
    let t = ca.pow(b.deg() as u32) * cb.pow(a.deg() as u32);
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = a.deg();
        let db = b.deg();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return BigInt::zero();
        }
        a = b;
        let divisor = &g * h.pow(delta as u32);
        b = r.div_scalar_exact(&divisor);
        g = a.leading().unwrap().clone();
        h = match delta {
            0 => h,
            1 => g.clone(),
            _ => g.pow(delta as u32) / h.pow(delta as u32 - 1),
        };
        if b.deg() == 0 {
            let lb = b.coeff(0);
            let da = a.deg() as u32;
            let num = lb.pow(da);
            let h_final = if da == 0 {
                num
            } else {
                num / h.pow(da - 1)
            };
            return s * t * h_final;
        }
    }
}

/// `Delta(P) = (-1)^(n(n-1)/2) Res(P, P') / a_n`.
pub fn discriminant(p: &IntPoly) -> Result<BigInt, Error> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if n == 0 {
        return Err(Error::InvalidArgument(
            "discriminant needs degree at least 1".into(),
        ));
    }
    if n == 1 {
        return Ok(BigInt::one());
    }
    let r = resultant(p, &p.derivative())?;
    let lc = p.leading().unwrap();
    let (q, rem) = r.div_rem(lc);
    debug_assert!(rem.is_zero());
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -q } else { q })
}

/// Resultant by the Sylvester determinant (fraction-free Bareiss). Only used
/// as an independent check of [`resultant`] on small inputs.
pub fn sylvester_resultant(p: &IntPoly, q: &IntPoly) -> BigInt {
    let m = p.deg();
    let n = q.deg();
    let size = m + n;
    if size == 0 {
        return BigInt::one();
    }
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for i in 0..n {
        for (j, c) in p.coeffs().iter().rev().enumerate() {
            mat[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in q.coeffs().iter().rev().enumerate() {
            mat[n + i][i + j] = c.clone();
        }
    }
    bareiss_det(mat)
}

pub(crate) fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}
