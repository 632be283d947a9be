//! Newton polygons and the p-adic valuations of polynomial roots.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::exact::poly::IntPoly;
use crate::exact::rational::RationalSerde;
use crate::exact::valuation::int_valuation;
use crate::exact::modp::is_prime_u64;
use crate::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Segment {
    #[serde(with = "RationalSerde")]
    pub slope: BigRational,
    pub length: usize,
}

/// Lower convex hull of the points `(i, nu_p(a_i))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NewtonPolygon {
    pub p: u64,
    pub points: Vec<(usize, u64)>,
    pub segments: Vec<Segment>,
}

impl NewtonPolygon {
    pub fn new(f: &IntPoly, p: u64) -> Result<Self, Error> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p));
        }
        let points: Vec<(usize, u64)> = f
            .coeffs()
            .iter()
            .enumerate()
            .filter_map(|(i, c)| int_valuation(c, p).map(|v| (i, v)))
            .collect();
        let mut hull: Vec<(usize, u64)> = Vec::new();
        for &pt in &points {
            while hull.len() >= 2 {
                let (x1, y1) = hull[hull.len() - 2];
                let (x2, y2) = hull[hull.len() - 1];
                // drop the middle point unless it lies strictly below the chord
                let lhs = (y2 as i128 - y1 as i128) * (pt.0 as i128 - x1 as i128);
                let rhs = (pt.1 as i128 - y1 as i128) * (x2 as i128 - x1 as i128);
                if lhs >= rhs {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(pt);
        }
        let segments = hull
            .windows(2)
            .map(|w| Segment {
                slope: BigRational::new(
                    BigInt::from(w[1].1 as i64 - w[0].1 as i64),
                    BigInt::from((w[1].0 - w[0].0) as i64),
                ),
                length: w[1].0 - w[0].0,
            })
            .collect();
        Ok(NewtonPolygon { p, points, segments })
    }

    /// Valuations of the nonzero roots, ascending, with multiplicity.
    pub fn root_valuations(&self) -> Vec<BigRational> {
        let mut out = Vec::new();
        for s in self.segments.iter().rev() {
            for _ in 0..s.length {
                out.push(-s.slope.clone());
            }
        }
        out
    }
}

/// `nu_p` of every nonzero root of `f`, as negated hull slopes repeated by
/// segment length. Roots at zero (valuation infinity) are omitted.
pub fn root_valuations(f: &IntPoly, p: u64) -> Result<Vec<BigRational>, Error> {
    Ok(NewtonPolygon::new(f, p)?.root_valuations())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn examples() {
        assert_eq!(root_valuations(&p(&[-4, 0, 27]), 3).unwrap(), vec![rat(-3, 2); 2]);
        assert_eq!(root_valuations(&p(&[-2, 0, 1]), 2).unwrap(), vec![rat(1, 2); 2]);
        assert_eq!(root_valuations(&p(&[-1, 4]), 2).unwrap(), vec![int(-2)]);
    }

    #[test]
    fn mixed_slopes() {
        // (T - 2)(4T - 1)(T - 1): valuations 1, -2, 0 at p = 2
        let f = &(&p(&[-2, 1]) * &p(&[-1, 4])) * &p(&[-1, 1]);
        let v = root_valuations(&f, 2).unwrap();
        assert_eq!(v, vec![int(-2), int(0), int(1)]);
        let np = NewtonPolygon::new(&f, 2).unwrap();
        let total: usize = np.segments.iter().map(|s| s.length).sum();
        assert_eq!(total, 3);
        assert!(np.segments.windows(2).all(|w| w[0].slope < w[1].slope));
    }

    #[test]
    fn zero_roots_skipped() {
        let v = root_valuations(&p(&[0, 0, -3, 1]), 3).unwrap();
        assert_eq!(v, vec![int(1)]);
    }
}
