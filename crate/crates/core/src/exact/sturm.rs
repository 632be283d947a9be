//! Sturm sequences, real-root counting and isolation with exact rationals.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::poly::IntPoly;
use super::rational::{format_rational, parse_rational};
use crate::Error;

/// An endpoint on the extended real line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl From<BigRational> for Bound {
    fn from(r: BigRational) -> Self {
        Bound::Finite(r)
    }
}

impl From<i64> for Bound {
    fn from(v: i64) -> Self {
        Bound::Finite(BigRational::from_integer(BigInt::from(v)))
    }
}

/// Closed interval `[lo, hi]` with rational endpoints; JSON `["lo", "hi"]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "[String; 2]", try_from = "[String; 2]")]
pub struct RationalInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl From<RationalInterval> for [String; 2] {
    fn from(iv: RationalInterval) -> Self {
        [format_rational(&iv.lo), format_rational(&iv.hi)]
    }
}

impl TryFrom<[String; 2]> for RationalInterval {
    type Error = Error;

    fn try_from([lo, hi]: [String; 2]) -> Result<Self, Error> {
        let (lo, hi) = (parse_rational(&lo)?, parse_rational(&hi)?);
        if lo > hi {
            return Err(Error::InvalidArgument("empty interval".into()));
        }
        Ok(RationalInterval { lo, hi })
    }
}

impl RationalInterval {
    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "empty interval");
        RationalInterval { lo, hi }
    }

    pub fn point(x: BigRational) -> Self {
        RationalInterval { lo: x.clone(), hi: x }
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigInt::from(2)
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn overlaps(&self, other: &RationalInterval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn is_subset_of(&self, other: &RationalInterval) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }

    pub fn to_f64_mid(&self) -> f64 {
        super::rational::to_f64(&self.midpoint())
    }
}

/// Signed remainder sequence `S_0 = a, S_1 = b, S_{k+1} = -rem(S_{k-1}, S_k)`,
/// each member scaled by a positive constant to stay primitive.
#[derive(Clone, Debug)]
pub struct SturmChain {
    seq: Vec<IntPoly>,
}

impl SturmChain {
    /// The classical chain of `(p, p')`.
    pub fn new(p: &IntPoly) -> Self {
        Self::generalized(p, &p.derivative())
    }

    pub fn generalized(a: &IntPoly, b: &IntPoly) -> Self {
        let mut seq = vec![positive_primitive(a)];
        if !b.is_zero() {
            seq.push(positive_primitive(b));
        }
        while seq.len() >= 2 {
            let n = seq.len();
            let (prev, cur) = (&seq[n - 2], &seq[n - 1]);
            if cur.deg() == 0 {
                break;
            }
            let r = prev.pseudo_rem(cur);
            if r.is_zero() {
                break;
            }
            // prem = lc^(delta+1) * rem; undo the sign of that factor.
            let delta = prev.deg() - cur.deg();
            let lc_neg = cur.leading().unwrap().is_negative();
            let flip = !(lc_neg && (delta + 1) % 2 == 1);
            let next = if flip { -r } else { r };
            seq.push(positive_primitive(&next));
        }
        SturmChain { seq }
    }

    pub fn members(&self) -> &[IntPoly] {
        &self.seq
    }

    /// The last member: a gcd of the two seeds up to a constant.
    pub fn last(&self) -> &IntPoly {
        self.seq.last().unwrap()
    }

    pub fn variations_at(&self, b: &Bound) -> usize {
        let signs = self.seq.iter().map(|p| match b {
            Bound::NegInf => p.sign_at_infinity(false),
            Bound::PosInf => p.sign_at_infinity(true),
            Bound::Finite(x) => p.sign_at(x),
        });
        count_variations(signs)
    }

    /// Sturm difference `V(a) - V(b)`.
    pub fn index(&self, a: &Bound, b: &Bound) -> i64 {
        self.variations_at(a) as i64 - self.variations_at(b) as i64
    }
}

fn positive_primitive(p: &IntPoly) -> IntPoly {
    if p.is_zero() {
        return IntPoly::zero();
    }
    // Divide by the positive content only; the sign must survive.
    let c = p.content();
    p.div_scalar_exact(&c)
}

pub(crate) fn count_variations(signs: impl Iterator<Item = Ordering>) -> usize {
    let mut last = Ordering::Equal;
    let mut count = 0;
    for s in signs {
        if s == Ordering::Equal {
            continue;
        }
        if last != Ordering::Equal && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of `p` in `(a, b]`.
pub fn sturm_count(p: &IntPoly, a: &Bound, b: &Bound) -> Result<usize, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if let (Bound::Finite(x), Bound::Finite(y)) = (a, b) {
        if x >= y {
            return Err(Error::InvalidArgument("sturm_count needs a < b".into()));
        }
    }
    let sf = p.square_free_part();
    if sf.deg() == 0 {
        return Ok(0);
    }
    let chain = SturmChain::new(&sf);
    let idx = chain.index(a, b);
    Ok(idx.max(0) as usize)
}

/// Number of distinct real roots in the closed interval `[a, b]`.
pub fn count_closed(p: &IntPoly, a: &BigRational, b: &BigRational) -> Result<usize, Error> {
    if a == b {
        return Ok(usize::from(p.sign_at(a) == Ordering::Equal));
    }
    let open = sturm_count(p, &Bound::Finite(a.clone()), &Bound::Finite(b.clone()))?;
    Ok(open + usize::from(p.sign_at(a) == Ordering::Equal))
}

/// Disjoint closed intervals, one per distinct real root, sorted ascending.
/// Endpoints are never roots unless the interval is a single point.
pub fn isolate_real_roots(p: &IntPoly) -> Result<Vec<RationalInterval>, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sf = p.square_free_part();
    if sf.deg() == 0 {
        return Ok(Vec::new());
    }
    let chain = SturmChain::new(&sf);
    let k = sf.root_bound_log2();
    let bound = BigRational::from_integer(BigInt::one() << k);
    let lo = -bound.clone();
    let hi = bound;
    let vlo = chain.variations_at(&Bound::Finite(lo.clone()));
    let vhi = chain.variations_at(&Bound::Finite(hi.clone()));
    let mut out = Vec::new();
    let mut stack = vec![(lo, hi, vlo, vhi)];
    while let Some((lo, hi, vlo, vhi)) = stack.pop() {
        let count = vlo.saturating_sub(vhi);
        if count == 0 {
            continue;
        }
        if count == 1 {
            out.push(RationalInterval::new(lo, hi));
            continue;
        }
        let mid = split_point(&sf, &lo, &hi);
        let vmid = chain.variations_at(&Bound::Finite(mid.clone()));
        stack.push((lo, mid.clone(), vlo, vmid));
        stack.push((mid, hi, vmid, vhi));
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    // Neighbours may share a split point; shrink them apart.
    for i in 1..out.len() {
        while out[i - 1].hi >= out[i].lo {
            let half = |iv: &RationalInterval| iv.width() / BigInt::from(2);
            let (a, b) = (half(&out[i - 1]), half(&out[i]));
            out[i - 1] = refine_root(&sf, &out[i - 1], &a);
            out[i] = refine_root(&sf, &out[i], &b);
        }
    }
    Ok(out)
}

/// A point strictly inside `(lo, hi)` that is not a root of `p`, as close to
/// the midpoint as the dyadic grid allows.
pub(crate) fn split_point(p: &IntPoly, lo: &BigRational, hi: &BigRational) -> BigRational {
    let w = hi - lo;
    let mid = lo + &w / BigInt::from(2);
    if p.sign_at(&mid) != Ordering::Equal {
        return mid;
    }
    let mut den = BigInt::from(4);
    loop {
        for offset in [1i64, -1] {
            let cand = &mid + &w * BigRational::new(BigInt::from(offset), den.clone());
            if p.sign_at(&cand) != Ordering::Equal {
                return cand;
            }
        }
        den *= 2;
    }
}

/// Shrinks an isolating interval of a square-free `p` until its width is at
/// most `width`. Bisection by sign, which is valid because the single root
/// inside is simple and the endpoints are not roots.
pub fn refine_root(p: &IntPoly, iv: &RationalInterval, width: &BigRational) -> RationalInterval {
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    if lo == hi {
        return iv.clone();
    }
    let mut slo = p.sign_at(&lo);
    debug_assert_ne!(slo, Ordering::Equal);
    while &(&hi - &lo) > width {
        let mid = (&lo + &hi) / BigInt::from(2);
        let sm = p.sign_at(&mid);
        if sm == Ordering::Equal {
            return RationalInterval::point(mid);
        }
        if sm == slo {
            lo = mid;
            slo = sm;
        } else {
            hi = mid;
        }
    }
    RationalInterval::new(lo, hi)
}

/// Rational roots of `p`, found by isolating and then testing the unique
/// candidate fraction with denominator dividing `lc(p)` inside each interval.
pub fn rational_roots(p: &IntPoly) -> Result<Vec<BigRational>, Error> {
    let sf = p.square_free_part();
    if sf.deg() == 0 {
        return Ok(Vec::new());
    }
    let lc = sf.leading().unwrap().abs();
    let mut out = Vec::new();
    for iv in isolate_real_roots(&sf)? {
        // Two fractions with denominators <= lc differ by >= 1/lc^2.
        let w = BigRational::new(BigInt::one(), &lc * &lc * BigInt::from(2));
        let r = refine_root(&sf, &iv, &w);
        if r.lo == r.hi {
            out.push(r.lo);
            continue;
        }
        let guess = (&r.midpoint() * BigRational::from_integer(lc.clone())).round();
        let cand = BigRational::new(guess.to_integer(), lc.clone());
        if r.contains(&cand) && sf.sign_at(&cand) == Ordering::Equal {
            out.push(cand);
        }
    }
    Ok(out)
}
