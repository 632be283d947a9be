//! Exact polynomial interpolation through integer nodes.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::poly::IntPoly;
use crate::Error;

/// The unique polynomial of degree `< nodes.len()` through the points;
/// fails if its coefficients are not integers.
pub fn interpolate(nodes: &[BigInt], values: &[BigInt]) -> Result<IntPoly, Error> {
    assert_eq!(nodes.len(), values.len());
    let n = nodes.len();
    if n == 0 {
        return Ok(IntPoly::zero());
    }
    // Newton divided differences, in place.
    let mut dd: Vec<BigRational> = values
        .iter()
        .map(|v| BigRational::from_integer(v.clone()))
        .collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &nodes[i] - &nodes[i - level];
            dd[i] = num / BigRational::from_integer(den);
        }
    }
    // Expand the Newton form by Horner from the top coefficient.
    let mut acc: Vec<BigRational> = vec![dd[n - 1].clone()];
    for k in (0..n - 1).rev() {
        // acc = acc * (T - x_k) + dd[k]
        let xk = BigRational::from_integer(nodes[k].clone());
        let mut next = vec![BigRational::zero(); acc.len() + 1];
        for (i, a) in acc.iter().enumerate() {
            next[i + 1] += a;
            next[i] -= a * &xk;
        }
        next[0] += &dd[k];
        acc = next;
    }
    let coeffs = acc
        .into_iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::InvalidArgument(
                    "interpolant has non-integer coefficients".into(),
                ))
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IntPoly::new(coeffs))
}

/// `count` integer nodes symmetric about zero: 0, 1, -1, 2, -2, ...
pub fn symmetric_nodes(count: usize) -> Vec<BigInt> {
    (0..count)
        .map(|i| {
            let k = (i as i64 + 1) / 2;
            BigInt::from(if i % 2 == 1 { k } else { -k })
        })
        .collect()
}
