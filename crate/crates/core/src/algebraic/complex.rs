//! Certified isolation of all complex roots of a square-free integer
//! polynomial.
//!
//! Approximations come from Aberth iteration (first in `f64`, then in
//! rounded dyadic arithmetic). They are certified with exact rational
//! arithmetic through the Gerschgorin inclusion for polynomial roots: with
//! Weierstrass corrections `W_i = P(z_i) / (a_n prod_{j != i} (z_i - z_j))`,
//! every root lies in a disc `|z - (z_i - W_i)| <= (n - 1)|W_i|`, and a
//! union of `k` discs disjoint from the others holds exactly `k` roots.
//! Each disc is enclosed in a rational square; pairwise disjoint squares
//! therefore isolate one root each.

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::dyadic::Dyadic;
use crate::exact::poly::IntPoly;
use crate::exact::rational::to_f64;
use crate::exact::sturm::{isolate_real_roots, RationalInterval};
use crate::Error;

type CQ = Complex<BigRational>;

/// Axis-parallel rectangle with rational corners.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalRect {
    pub re: RationalInterval,
    pub im: RationalInterval,
}

impl RationalRect {
    pub fn center_f64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64_mid(), self.im.to_f64_mid())
    }

    pub fn disjoint(&self, other: &RationalRect) -> bool {
        !self.re.overlaps(&other.re) || !self.im.overlaps(&other.im)
    }

    pub fn meets_real_axis(&self) -> bool {
        self.im.contains(&BigRational::zero())
    }
}

/// Where one root lives.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RootLocation {
    Real(RationalInterval),
    Complex(RationalRect),
}

const MAX_BITS: u32 = 4096;

/// One location per distinct root of `f`: real roots as Sturm intervals in
/// ascending order, then non-real roots as disjoint rectangles that avoid
/// the real axis.
pub fn isolate_all_roots(f: &IntPoly) -> Result<Vec<RootLocation>, Error> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = f.square_free_part();
    let reals = isolate_real_roots(&f)?;
    let mut out: Vec<RootLocation> = reals.iter().cloned().map(RootLocation::Real).collect();
    if reals.len() == f.deg() {
        return Ok(out);
    }
    let mut bits = 64;
    let mut zs: Vec<CQ> = aberth_f64(&f)
        .iter()
        .map(|z| round_c(&to_cq(*z), bits))
        .collect();
    loop {
        if let Some(rects) = certify(&f, &zs, bits, reals.len()) {
            out.extend(rects.into_iter().map(RootLocation::Complex));
            return Ok(out);
        }
        if bits >= MAX_BITS {
            return Err(Error::InvalidArgument(format!(
                "complex root isolation did not converge for {f}"
            )));
        }
        bits *= 2;
        for _ in 0..4 {
            zs = aberth_step_exact(&f, &zs, bits);
        }
    }
}

fn to_cq(z: Complex64) -> CQ {
    let conv = |x: f64| BigRational::from_float(x).unwrap_or_else(BigRational::zero);
    Complex::new(conv(z.re), conv(z.im))
}

fn round_c(z: &CQ, bits: u32) -> CQ {
    Complex::new(
        Dyadic::round_rational(&z.re, bits, false).to_rational(),
        Dyadic::round_rational(&z.im, bits, false).to_rational(),
    )
}

fn eval_cq(f: &IntPoly, z: &CQ) -> CQ {
    let mut acc = CQ::zero();
    for c in f.coeffs().iter().rev() {
        acc = acc * z + CQ::new(BigRational::from_integer(c.clone()), BigRational::zero());
    }
    acc
}

/// Squares around each non-real root, or `None` if the current
/// approximations are not good enough to certify.
fn certify(f: &IntPoly, zs: &[CQ], bits: u32, real_count: usize) -> Option<Vec<RationalRect>> {
    let n = f.deg();
    let lc = BigRational::from_integer(f.leading().unwrap().clone());
    let mut rects = Vec::with_capacity(n);
    for (i, zi) in zs.iter().enumerate() {
        let mut denom = CQ::new(lc.clone(), BigRational::zero());
        for (j, zj) in zs.iter().enumerate() {
            if i != j {
                let diff = zi - zj;
                if diff.is_zero() {
                    return None;
                }
                denom *= diff;
            }
        }
        let w = eval_cq(f, zi) / denom;
        let center = zi - &w;
        let r = BigRational::from_integer(BigInt::from(n as u64 - 1)) * (w.re.abs() + w.im.abs());
        let side = |c: &BigRational| {
            RationalInterval::new(
                Dyadic::round_rational(&(c - &r), bits + 8, false).to_rational(),
                Dyadic::round_rational(&(c + &r), bits + 8, true).to_rational(),
            )
        };
        rects.push(RationalRect {
            re: side(&center.re),
            im: side(&center.im),
        });
    }
    for i in 0..n {
        for j in i + 1..n {
            if !rects[i].disjoint(&rects[j]) {
                return None;
            }
        }
    }
    let (on_axis, off_axis): (Vec<_>, Vec<_>) = rects.into_iter().partition(|r| r.meets_real_axis());
    if on_axis.len() != real_count {
        return None;
    }
    Some(off_axis)
}

fn aberth_step_exact(f: &IntPoly, zs: &[CQ], bits: u32) -> Vec<CQ> {
    let df = f.derivative();
    let one = CQ::new(BigRational::from_integer(1.into()), BigRational::zero());
    zs.iter()
        .enumerate()
        .map(|(i, zi)| {
            let fz = eval_cq(f, zi);
            let dfz = eval_cq(&df, zi);
            if fz.is_zero() || dfz.is_zero() {
                return zi.clone();
            }
            let ratio = round_c(&(fz / dfz), bits);
            let mut s = CQ::zero();
            for (j, zj) in zs.iter().enumerate() {
                if i != j {
                    let d = zi - zj;
                    if !d.is_zero() {
                        s += round_c(&(&one / d), bits);
                    }
                }
            }
            let denom = &one - &ratio * &s;
            if denom.is_zero() {
                return zi.clone();
            }
            round_c(&(zi - ratio / denom), bits)
        })
        .collect()
}

/// Simultaneous approximation of all roots by Aberth's method in `f64`.
pub fn aberth_f64(f: &IntPoly) -> Vec<Complex64> {
    let n = f.deg();
    let lc = BigRational::from_integer(f.leading().unwrap().clone());
    let a: Vec<Complex64> = f
        .coeffs()
        .iter()
        .map(|c| Complex64::new(to_f64(&(BigRational::from_integer(c.clone()) / &lc)), 0.0))
        .collect();
    let da: Vec<Complex64> = (1..=n).map(|i| a[i] * i as f64).collect();
    let eval = |p: &[Complex64], z: Complex64| p.iter().rev().fold(Complex64::zero(), |acc, &c| acc * z + c);
    // Fujiwara bound for the initial circle
    let mut radius: f64 = 0.0;
    for k in 1..=n {
        let c = a[n - k].norm();
        if c > 0.0 {
            radius = radius.max(c.powf(1.0 / k as f64));
        }
    }
    radius = (2.0 * radius).max(1e-3);
    let mut zs: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4))
        .collect();
    for _ in 0..2000 {
        let mut max_step: f64 = 0.0;
        for i in 0..n {
            let z = zs[i];
            let fz = eval(&a, z);
            let dfz = eval(&da, z);
            if fz == Complex64::zero() {
                continue;
            }
            let ratio = fz / dfz;
            let s: Complex64 = (0..n).filter(|&j| j != i).map(|j| 1.0 / (z - zs[j])).sum();
            let step = ratio / (1.0 - ratio * s);
            if step.is_finite() {
                zs[i] = z - step;
                max_step = max_step.max(step.norm() / (1.0 + z.norm()));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    zs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn complex_boxes(f: &IntPoly) -> Vec<RationalRect> {
        isolate_all_roots(f)
            .unwrap()
            .into_iter()
            .filter_map(|l| match l {
                RootLocation::Complex(r) => Some(r),
                RootLocation::Real(_) => None,
            })
            .collect()
    }

    #[test]
    fn imaginary_pair() {
        // 27T^2 + 16: roots +-4i/(3 sqrt 3)
        let boxes = complex_boxes(&p(&[16, 0, 27]));
        assert_eq!(boxes.len(), 2);
        let target = 4.0 / (3.0 * 3f64.sqrt());
        for b in &boxes {
            assert!((b.center_f64().im.abs() - target).abs() < 1e-9);
            assert!(!b.meets_real_axis());
        }
        assert!(boxes[0].disjoint(&boxes[1]));
    }

    #[test]
    fn mixed_real_and_complex() {
        // (T^2 - 2)(T^2 + T + 1)(T^3 - 5)
        let f = &(&p(&[-2, 0, 1]) * &p(&[1, 1, 1])) * &p(&[-5, 0, 0, 1]);
        let locs = isolate_all_roots(&f).unwrap();
        assert_eq!(locs.len(), 7);
        let reals = locs.iter().filter(|l| matches!(l, RootLocation::Real(_))).count();
        assert_eq!(reals, 3);
    }

    #[test]
    fn clustered_roots() {
        // (T - 1)(T - 1 - 1/1000 i)(T - 1 + 1/1000 i) scaled to integers
        let f = &p(&[-1, 1]) * &p(&[1_000_001, -2_000_000, 1_000_000]);
        let boxes = complex_boxes(&f);
        assert_eq!(boxes.len(), 2);
    }
}
