//! Algebraic numbers given by a minimal polynomial and an isolating
//! locator, with the Galois-level tests built on them: total reality,
//! integrality and unit conditions via Newton polygons, and roots of unity.

pub mod complex;
pub mod cyclotomic;
pub mod newton;

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::exact::dyadic::DyadicInterval;
use crate::exact::factor::factor_irreducible;
use crate::exact::interp::{interpolate, symmetric_nodes};
use crate::exact::poly::{canonical_cmp, IntPoly};
use crate::exact::rational::format_rational;
use crate::exact::resultant::resultant;
use crate::exact::sturm::{count_closed, isolate_real_roots, refine_root, sturm_count, Bound, RationalInterval};
use crate::exact::valuation::{int_valuation, prime_divisors};
use crate::Error;

pub use complex::{isolate_all_roots, RationalRect, RootLocation};
pub use cyclotomic::{arc_unit_images, cyclotomic, is_root_of_unity};
pub use newton::{root_valuations, NewtonPolygon};

/// A root of an irreducible primitive integer polynomial, pinned down by a
/// locator that contains no other root.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AlgebraicNumber {
    minpoly: IntPoly,
    locator: RootLocation,
}

impl AlgebraicNumber {
    pub fn from_rational(r: &BigRational) -> Self {
        AlgebraicNumber {
            minpoly: IntPoly::new(vec![-r.numer().clone(), r.denom().clone()]),
            locator: RootLocation::Real(RationalInterval::point(r.clone())),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    /// Root of the irreducible `minpoly` inside the closed interval; fails
    /// unless exactly one root lies there.
    pub fn real_root(minpoly: &IntPoly, iv: RationalInterval) -> Result<Self, Error> {
        let minpoly = minpoly.primitive();
        if minpoly.deg() == 0 {
            return Err(Error::InvalidArgument("constant minimal polynomial".into()));
        }
        if count_closed(&minpoly, &iv.lo, &iv.hi)? != 1 {
            return Err(Error::InvalidArgument(format!(
                "interval does not isolate a root of {minpoly}"
            )));
        }
        let mut a = AlgebraicNumber {
            minpoly,
            locator: RootLocation::Real(iv),
        };
        a.normalize_rational();
        Ok(a)
    }

    fn normalize_rational(&mut self) {
        if self.minpoly.deg() == 1 {
            let r = BigRational::new(-self.minpoly.coeff(0), self.minpoly.coeff(1));
            self.locator = RootLocation::Real(RationalInterval::point(r));
        }
    }

    /// Every real root of `p`, one number per distinct root, ascending.
    pub fn real_roots_of(p: &IntPoly) -> Vec<AlgebraicNumber> {
        let mut out = Vec::new();
        for f in factor_irreducible(p).irreducibles() {
            for iv in isolate_real_roots(f).expect("nonzero factor") {
                let mut a = AlgebraicNumber {
                    minpoly: f.clone(),
                    locator: RootLocation::Real(iv),
                };
                a.normalize_rational();
                out.push(a);
            }
        }
        out.sort_by(|a, b| a.cmp_real(b));
        out
    }

    /// Every complex root of the irreducible `f` (real ones first).
    pub fn conjugates_of(f: &IntPoly) -> Result<Vec<AlgebraicNumber>, Error> {
        let f = f.primitive();
        Ok(isolate_all_roots(&f)?
            .into_iter()
            .map(|locator| {
                let mut a = AlgebraicNumber {
                    minpoly: f.clone(),
                    locator,
                };
                a.normalize_rational();
                a
            })
            .collect())
    }

    /// The unique real root of `p` in `(a, b]`, if there is exactly one.
    pub fn unique_root_in(p: &IntPoly, a: &Bound, b: &Bound) -> Option<AlgebraicNumber> {
        let mut found = None;
        for f in factor_irreducible(p).irreducibles() {
            for iv in isolate_real_roots(f).ok()? {
                if root_in_half_open(f, &iv, a, b) {
                    if found.is_some() {
                        return None;
                    }
                    let mut n = AlgebraicNumber {
                        minpoly: f.clone(),
                        locator: RootLocation::Real(iv),
                    };
                    n.normalize_rational();
                    found = Some(n);
                }
            }
        }
        found
    }

    pub fn minpoly(&self) -> &IntPoly {
        &self.minpoly
    }

    pub fn locator(&self) -> &RootLocation {
        &self.locator
    }

    pub fn degree(&self) -> usize {
        self.minpoly.deg()
    }

    pub fn is_real(&self) -> bool {
        matches!(self.locator, RootLocation::Real(_))
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        (self.degree() == 1).then(|| BigRational::new(-self.minpoly.coeff(0), self.minpoly.coeff(1)))
    }

    pub fn is_zero(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_zero())
    }

    /// Isolating interval of a real number, refined to at most `width`.
    pub fn real_interval(&self, width: &BigRational) -> Option<RationalInterval> {
        match &self.locator {
            RootLocation::Real(iv) => Some(refine_root(&self.minpoly, iv, width)),
            RootLocation::Complex(_) => None,
        }
    }

    /// Dyadic enclosure of a real number with relative width about `2^-bits`.
    pub fn enclosure(&self, bits: u32) -> Option<DyadicInterval> {
        let RootLocation::Real(iv) = &self.locator else {
            return None;
        };
        let mag = iv.lo.abs().max(iv.hi.abs()).max(BigRational::one());
        let width = mag / BigRational::from_integer(BigInt::one() << (bits as usize + 2));
        let iv = refine_root(&self.minpoly, iv, &width);
        Some(DyadicInterval::from_bounds(&iv.lo, &iv.hi, bits))
    }

    pub fn to_f64(&self) -> f64 {
        match &self.locator {
            RootLocation::Real(iv) => {
                let w = BigRational::new(BigInt::one(), BigInt::one() << 60);
                let iv = refine_root(&self.minpoly, iv, &w);
                iv.to_f64_mid()
            }
            RootLocation::Complex(r) => r.center_f64().re,
        }
    }

    pub fn approx(&self) -> num_complex::Complex64 {
        match &self.locator {
            RootLocation::Real(_) => num_complex::Complex64::new(self.to_f64(), 0.0),
            RootLocation::Complex(r) => r.center_f64(),
        }
    }

    pub fn neg(&self) -> AlgebraicNumber {
        let locator = match &self.locator {
            RootLocation::Real(iv) => RootLocation::Real(RationalInterval::new(-iv.hi.clone(), -iv.lo.clone())),
            RootLocation::Complex(r) => RootLocation::Complex(RationalRect {
                re: RationalInterval::new(-r.re.hi.clone(), -r.re.lo.clone()),
                im: RationalInterval::new(-r.im.hi.clone(), -r.im.lo.clone()),
            }),
        };
        AlgebraicNumber {
            minpoly: self.minpoly.negate_var().primitive(),
            locator,
        }
    }

    /// Total order on real numbers (`Equal` only for the same number).
    pub fn cmp_real(&self, other: &AlgebraicNumber) -> Ordering {
        let (RootLocation::Real(a), RootLocation::Real(b)) = (&self.locator, &other.locator) else {
            return canonical_cmp(&self.minpoly, &other.minpoly);
        };
        if self == other {
            return Ordering::Equal;
        }
        let (mut a, mut b) = (a.clone(), b.clone());
        loop {
            if a.hi < b.lo {
                return Ordering::Less;
            }
            if b.hi < a.lo {
                return Ordering::Greater;
            }
            let wa = a.width() / BigInt::from(2);
            let wb = b.width() / BigInt::from(2);
            a = refine_root(&self.minpoly, &a, &wa);
            b = refine_root(&other.minpoly, &b, &wb);
        }
    }

    pub fn is_totally_real(&self) -> bool {
        is_totally_real(self)
    }

    pub fn conjugates_in_interval(&self, lo: &BigRational, hi: &BigRational) -> bool {
        all_roots_in(&self.minpoly, lo, hi)
    }
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.minpoly != other.minpoly {
            return false;
        }
        match (&self.locator, &other.locator) {
            (RootLocation::Real(a), RootLocation::Real(b)) => {
                // each interval holds exactly one root, so they name the same
                // root iff their intersection holds a root
                let lo = a.lo.clone().max(b.lo.clone());
                let hi = a.hi.clone().min(b.hi.clone());
                lo <= hi && count_closed(&self.minpoly, &lo, &hi).unwrap_or(0) > 0
            }
            (RootLocation::Complex(a), RootLocation::Complex(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for AlgebraicNumber {}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return f.write_str(&format_rational(&r));
        }
        let z = self.approx();
        if self.is_real() {
            write!(f, "root of {} near {:.12}", self.minpoly, z.re)
        } else {
            write!(f, "root of {} near {:.12}{:+.12}i", self.minpoly, z.re, z.im)
        }
    }
}

/// Whether the root isolated by `iv` lies in `(a, b]`.
fn root_in_half_open(f: &IntPoly, iv: &RationalInterval, a: &Bound, b: &Bound) -> bool {
    let mut iv = iv.clone();
    loop {
        let below_a = match a {
            Bound::NegInf => Some(false),
            Bound::PosInf => Some(true),
            Bound::Finite(x) if iv.contains(x) => {
                if f.sign_at(x) == Ordering::Equal {
                    Some(true)
                } else {
                    None
                }
            }
            Bound::Finite(x) => Some(&iv.hi < x),
        };
        let above_b = match b {
            Bound::PosInf => Some(false),
            Bound::NegInf => Some(true),
            Bound::Finite(y) if iv.contains(y) => {
                if f.sign_at(y) == Ordering::Equal {
                    Some(false)
                } else {
                    None
                }
            }
            Bound::Finite(y) => Some(&iv.lo > y),
        };
        match (below_a, above_b) {
            (Some(x), Some(y)) => return !x && !y,
            (Some(true), _) | (_, Some(true)) => return false,
            _ => {
                let w = iv.width() / BigInt::from(2);
                iv = refine_root(f, &iv, &w);
            }
        }
    }
}

/// All roots of `f` real and inside the closed interval `[lo, hi]`.
pub fn all_roots_in(f: &IntPoly, lo: &BigRational, hi: &BigRational) -> bool {
    let sf = f.square_free_part();
    count_closed(&sf, lo, hi).map(|c| c == sf.deg()).unwrap_or(false)
}

pub fn is_totally_real(a: &AlgebraicNumber) -> bool {
    all_roots_real(a.minpoly())
}

/// Whether the square-free `f` has only real roots. High derivatives are
/// tried first: by Rolle, each derivative of a polynomial with `n` distinct
/// real roots has `n - 1` distinct real roots.
pub fn all_roots_real(f: &IntPoly) -> bool {
    let n = f.deg();
    let mut derivs = vec![f.clone()];
    for _ in 0..n.saturating_sub(2) {
        let next = derivs.last().unwrap().derivative().primitive();
        derivs.push(next);
    }
    let real_count = |g: &IntPoly| sturm_count(g, &Bound::NegInf, &Bound::PosInf).unwrap_or(0);
    derivs
        .iter()
        .rev()
        .take(8)
        .chain(std::iter::once(f))
        .all(|g| real_count(g) == g.deg())
}

/// Whether every conjugate of `a` lies in `[lo, hi]` (false if some
/// conjugate is not real).
pub fn conjugates_in_interval(a: &AlgebraicNumber, lo: &BigRational, hi: &BigRational) -> bool {
    a.conjugates_in_interval(lo, hi)
}

/// Canonical minimal polynomial of `r * a` for a nonzero rational `r`.
pub fn scaled_minpoly(a: &AlgebraicNumber, r: &BigRational) -> Result<IntPoly, Error> {
    if r.is_zero() {
        return Err(Error::InvalidArgument("scale must be nonzero".into()));
    }
    Ok(a.minpoly().scale_roots(r.numer(), r.denom()).primitive())
}

/// Integer polynomial whose roots are all products `alpha * beta` with
/// `P(alpha) = 0`, `S(beta) = 0`: `Res_y(S(y), y^n P(T / y))`, by
/// evaluation at integer `T` and interpolation. Requires `P(0) != 0`.
pub fn product_polynomial(p: &IntPoly, s: &IntPoly) -> Result<IntPoly, Error> {
    if p.coeff(0).is_zero() {
        return Err(Error::InvalidArgument("product polynomial needs P(0) != 0".into()));
    }
    let n = p.deg();
    let m = s.deg();
    let nodes = symmetric_nodes(n * m + 1);
    let mut values = Vec::with_capacity(nodes.len());
    for t in &nodes {
        // y^n P(t / y) = sum a_i t^i y^(n - i)
        let mut coeffs = vec![BigInt::zero(); n + 1];
        let mut tp = BigInt::one();
        for i in 0..=n {
            coeffs[n - i] = p.coeff(i) * &tp;
            tp *= t;
        }
        values.push(resultant(s, &IntPoly::new(coeffs))?);
    }
    interpolate(&nodes, &values)
}

/// Canonical minimal polynomial of `s * a` for real algebraic `a` and `s`.
pub fn scaled_minpoly_algebraic(a: &AlgebraicNumber, s: &AlgebraicNumber) -> Result<IntPoly, Error> {
    if a.is_zero() {
        return Ok(IntPoly::x());
    }
    if s.is_zero() {
        return Err(Error::InvalidArgument("scale must be nonzero".into()));
    }
    if !(a.is_real() && s.is_real()) {
        return Err(Error::InvalidArgument("algebraic scaling needs real numbers".into()));
    }
    let w = product_polynomial(a.minpoly(), s.minpoly())?;
    let factors: Vec<IntPoly> = factor_irreducible(&w).irreducibles().cloned().collect();
    let mut width = BigRational::one();
    for _ in 0..200 {
        let ia = a.real_interval(&width).unwrap();
        let is = s.real_interval(&width).unwrap();
        let prods = [&ia.lo * &is.lo, &ia.lo * &is.hi, &ia.hi * &is.lo, &ia.hi * &is.hi];
        let lo = prods.iter().min().unwrap().clone();
        let hi = prods.iter().max().unwrap().clone();
        let hits: Vec<&IntPoly> = factors
            .iter()
            .filter(|f| count_closed(f, &lo, &hi).unwrap_or(0) > 0)
            .collect();
        if hits.len() == 1 && count_closed(hits[0], &lo, &hi)? == 1 {
            return Ok(hits[0].clone());
        }
        width /= BigInt::from(1u64 << 20);
    }
    Err(Error::InvalidArgument("could not separate the scaled root".into()))
}

/// `d^(d/(d-1)) c` is an algebraic integer coprime to `d`.
///
/// Decided on the minimal polynomial `P` of `c`: integrality away from `d`
/// means no prime outside `d` divides `lc(P)`, and at each `p | d` every
/// Newton-polygon root valuation of `c` must be exactly
/// `-(d/(d-1)) nu_p(d)`, which makes `nu_p(u) = 0` on every extension.
pub fn is_milnor_unit(c: &AlgebraicNumber, d: u64) -> bool {
    assert!(d >= 2);
    if c.is_zero() {
        return false;
    }
    let f = c.minpoly();
    let mut rest = f.leading().unwrap().abs();
    let dd = BigInt::from(d);
    loop {
        let g = rest.gcd(&dd);
        if g.is_one() {
            break;
        }
        while (&rest % &g).is_zero() {
            rest /= &g;
        }
    }
    if !rest.is_one() {
        return false;
    }
    prime_divisors(d).into_iter().all(|p| {
        let vd = int_valuation(&dd, p).unwrap() as i64;
        let target = BigRational::new(BigInt::from(-(d as i64) * vd), BigInt::from(d as i64 - 1));
        root_valuations(f, p)
            .map(|vals| vals.len() == f.deg() && vals.iter().all(|v| v == &target))
            .unwrap_or(false)
    })
}

/// The same predicate computed through the polynomial of all
/// `zeta d^(d/(d-1)) c_j` (roots of `Res_y(y^(d-1) - d^d, y^n P(T/y))`):
/// its primitive part must be monic with unit constant term at each `p | d`.
pub fn is_milnor_unit_by_composition(c: &AlgebraicNumber, d: u64) -> Result<bool, Error> {
    if c.is_zero() {
        return Ok(false);
    }
    let dd = BigInt::from(d);
    let s = IntPoly::monomial(BigInt::one(), d as usize - 1) - IntPoly::constant(dd.pow(d as u32));
    let w = product_polynomial(c.minpoly(), &s)?.primitive();
    if !w.is_monic() {
        return Ok(false);
    }
    Ok(prime_divisors(d)
        .into_iter()
        .all(|p| int_valuation(&w.coeff(0), p) == Some(0)))
}
