//! Outward-rounded interval arithmetic on dyadic rationals `m * 2^e`.
//!
//! Every operation computes exact endpoints and then rounds the lower one
//! down and the upper one up to the working precision, so the true value is
//! always enclosed.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::rational::{format_rational, to_f64};

/// Exact dyadic rational `mant * 2^exp`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dyadic {
    pub mant: BigInt,
    pub exp: i64,
}

impl Dyadic {
    pub fn zero() -> Self {
        Dyadic {
            mant: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn from_int(n: BigInt) -> Self {
        Dyadic { mant: n, exp: 0 }
    }

    pub fn to_rational(&self) -> BigRational {
        let one = BigInt::one();
        if self.exp >= 0 {
            BigRational::from_integer(&self.mant << self.exp as usize)
        } else {
            BigRational::new(self.mant.clone(), one << (-self.exp) as usize)
        }
    }

    /// Round `r` to at most `bits` significant bits, downward or upward.
    pub fn round_rational(r: &BigRational, bits: u32, up: bool) -> Self {
        if r.is_zero() {
            return Dyadic::zero();
        }
        let nb = r.numer().bits() as i64;
        let db = r.denom().bits() as i64;
        // |r| lies in [2^(nb-db-1), 2^(nb-db+1)); keep `bits` bits of it.
        let shift = bits as i64 - (nb - db);
        let (num, den) = if shift >= 0 {
            (r.numer() << shift as usize, r.denom().clone())
        } else {
            (r.numer().clone(), r.denom() << (-shift) as usize)
        };
        let m = if up {
            num.div_ceil(&den)
        } else {
            num.div_floor(&den)
        };
        Dyadic {
            mant: m,
            exp: -shift,
        }
        .normalized()
    }

    fn normalized(mut self) -> Self {
        if self.mant.is_zero() {
            return Dyadic::zero();
        }
        let tz = self.mant.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.mant >>= tz as usize;
            self.exp += tz as i64;
        }
        self
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_rational(&self.to_rational()))
    }
}

/// A closed interval `[lo, hi]` with dyadic endpoints and a working
/// precision in bits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyadicInterval {
    lo: Dyadic,
    hi: Dyadic,
    bits: u32,
}

impl DyadicInterval {
    /// Enclosure of a rational at the given precision (a point interval when
    /// the rational is dyadic and fits).
    pub fn from_rational(r: &BigRational, bits: u32) -> Self {
        DyadicInterval {
            lo: Dyadic::round_rational(r, bits, false),
            hi: Dyadic::round_rational(r, bits, true),
            bits,
        }
    }

    pub fn from_int(n: i64, bits: u32) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)), bits)
    }

    /// Outward-rounded enclosure of `[lo, hi]`.
    pub fn from_bounds(lo: &BigRational, hi: &BigRational, bits: u32) -> Self {
        debug_assert!(lo <= hi);
        DyadicInterval {
            lo: Dyadic::round_rational(lo, bits, false),
            hi: Dyadic::round_rational(hi, bits, true),
            bits,
        }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn lo(&self) -> BigRational {
        self.lo.to_rational()
    }

    pub fn hi(&self) -> BigRational {
        self.hi.to_rational()
    }

    pub fn lo_dyadic(&self) -> &Dyadic {
        &self.lo
    }

    pub fn hi_dyadic(&self) -> &Dyadic {
        &self.hi
    }

    pub fn width(&self) -> BigRational {
        self.hi() - self.lo()
    }

    pub fn midpoint(&self) -> BigRational {
        (self.lo() + self.hi()) / BigInt::from(2)
    }

    pub fn mid_f64(&self) -> f64 {
        to_f64(&self.midpoint())
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo() <= x && x <= &self.hi()
    }

    /// Re-round at a lower precision; the result contains `self`.
    pub fn with_bits(&self, bits: u32) -> Self {
        Self::from_bounds(&self.lo(), &self.hi(), bits)
    }

    /// `Less` if the whole interval is below `x`, `Greater` if above,
    /// `None` when it straddles or touches `x`.
    pub fn compare_rational(&self, x: &BigRational) -> Option<Ordering> {
        if &self.hi() < x {
            Some(Ordering::Less)
        } else if &self.lo() > x {
            Some(Ordering::Greater)
        } else {
            None
        }
    }

    /// Certified comparison of two enclosures; `None` when they overlap.
    pub fn compare(&self, other: &DyadicInterval) -> Option<Ordering> {
        if self.hi() < other.lo() {
            Some(Ordering::Less)
        } else if self.lo() > other.hi() {
            Some(Ordering::Greater)
        } else {
            None
        }
    }

    pub fn is_positive(&self) -> bool {
        self.lo.mant.is_positive()
    }

    fn prec(&self, other: &DyadicInterval) -> u32 {
        self.bits.max(other.bits)
    }

    pub fn add(&self, other: &DyadicInterval) -> Self {
        let bits = self.prec(other);
        Self::from_bounds(&(self.lo() + other.lo()), &(self.hi() + other.hi()), bits)
    }

    pub fn sub(&self, other: &DyadicInterval) -> Self {
        let bits = self.prec(other);
        Self::from_bounds(&(self.lo() - other.hi()), &(self.hi() - other.lo()), bits)
    }

    pub fn neg(&self) -> Self {
        DyadicInterval {
            lo: Dyadic {
                mant: -&self.hi.mant,
                exp: self.hi.exp,
            },
            hi: Dyadic {
                mant: -&self.lo.mant,
                exp: self.lo.exp,
            },
            bits: self.bits,
        }
    }

    pub fn mul(&self, other: &DyadicInterval) -> Self {
        let bits = self.prec(other);
        let (a, b, c, d) = (self.lo(), self.hi(), other.lo(), other.hi());
        let prods = [&a * &c, &a * &d, &b * &c, &b * &d];
        let lo = prods.iter().min().unwrap();
        let hi = prods.iter().max().unwrap();
        Self::from_bounds(lo, hi, bits)
    }

    pub fn mul_rational(&self, r: &BigRational) -> Self {
        self.mul(&Self::from_rational(r, self.bits))
    }

    /// Panics if `other` contains zero.
    pub fn div(&self, other: &DyadicInterval) -> Self {
        let (c, d) = (other.lo(), other.hi());
        assert!(
            c.is_positive() || d.is_negative(),
            "division by an interval containing zero"
        );
        let bits = self.prec(other);
        let (a, b) = (self.lo(), self.hi());
        let quots = [&a / &c, &a / &d, &b / &c, &b / &d];
        let lo = quots.iter().min().unwrap();
        let hi = quots.iter().max().unwrap();
        Self::from_bounds(lo, hi, bits)
    }

    /// Tight enclosure of `x^k`: endpoint powers, with `0` as the lower
    /// end for even `k` when the interval straddles zero.
    pub fn powi(&self, k: u32) -> Self {
        let (a, b) = (self.lo(), self.hi());
        let (lo, hi) = if k % 2 == 1 || !a.is_negative() {
            (pow_rat(&a, k), pow_rat(&b, k))
        } else if !b.is_positive() {
            (pow_rat(&b, k), pow_rat(&a, k))
        } else {
            (BigRational::zero(), pow_rat(&a.abs().max(b.abs()), k))
        };
        Self::from_bounds(&lo, &hi, self.bits)
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.mant.is_positive() && !self.hi.mant.is_negative()
    }

    /// Lower bound for `|x|` over the interval.
    pub fn abs_lower(&self) -> BigRational {
        if self.contains_zero() {
            BigRational::zero()
        } else {
            self.lo().abs().min(self.hi().abs())
        }
    }

    /// Upper bound for `|x|` over the interval.
    pub fn abs_upper(&self) -> BigRational {
        self.lo().abs().max(self.hi().abs())
    }

    /// Enclosure of the positive real `k`-th root; the interval must be
    /// nonnegative.
    pub fn root(&self, k: u32) -> Self {
        assert!(k >= 1);
        assert!(!self.lo.mant.is_negative(), "root of a negative interval");
        if k == 1 {
            return self.clone();
        }
        let lo = root_bound(&self.lo(), k, self.bits, false);
        let hi = root_bound(&self.hi(), k, self.bits, true);
        Self::from_bounds(&lo, &hi, self.bits)
    }

    /// `x^(p/q)` for a positive enclosure and `q > 0`.
    pub fn pow_rational(&self, p: i64, q: u32) -> Self {
        assert!(self.is_positive(), "rational power of a non-positive interval");
        let r = self.powi(p.unsigned_abs() as u32).root(q);
        if p < 0 {
            Self::from_int(1, self.bits).div(&r)
        } else {
            r
        }
    }
}

fn pow_rat(x: &BigRational, k: u32) -> BigRational {
    num_traits::pow(x.clone(), k as usize)
}

/// Dyadic lower or upper bound of `x^(1/k)` for rational `x >= 0`, good to
/// roughly `bits` significant bits; computed with integer k-th roots.
fn root_bound(x: &BigRational, k: u32, bits: u32, up: bool) -> BigRational {
    if x.is_zero() {
        return BigRational::zero();
    }
    let log2 = x.numer().bits() as i64 - x.denom().bits() as i64;
    // Choose s with x * 2^(s k) around 2^(bits k + ...), so the root has
    // about `bits + 2` bits.
    let s = bits as i64 + 2 - log2.div_euclid(k as i64);
    let scaled = if s >= 0 {
        x * BigRational::from_integer(BigInt::one() << (s as usize * k as usize))
    } else {
        x / BigRational::from_integer(BigInt::one() << ((-s) as usize * k as usize))
    };
    let r = if up {
        let c = scaled.ceil().to_integer();
        let r = floor_root(&c, k);
        if r.pow(k) < c {
            r + 1
        } else {
            r
        }
    } else {
        floor_root(&scaled.floor().to_integer(), k)
    };
    let r = BigRational::from_integer(r);
    if s >= 0 {
        r / BigRational::from_integer(BigInt::one() << s as usize)
    } else {
        r * BigRational::from_integer(BigInt::one() << (-s) as usize)
    }
}

/// `floor(c^(1/k))` for `c >= 0`: Newton's method seeded from a `f64`
/// estimate of `log2 c`, then corrected by exact comparison.
fn floor_root(c: &BigInt, k: u32) -> BigInt {
    let nbits = c.bits();
    if nbits <= 64 || k == 1 {
        return c.nth_root(k);
    }
    let shift = nbits - 64;
    let top = (c >> shift as usize).to_u64().unwrap() as f64;
    let log2 = (top.log2() + shift as f64) / k as f64;
    let whole = log2.floor();
    let frac = (log2 - whole).exp2();
    let mut r = if whole >= 52.0 {
        BigInt::from((frac * (1u64 << 52) as f64) as u64) << (whole as usize - 52)
    } else {
        BigInt::from((frac * whole.exp2()) as u64)
    };
    let kk = BigInt::from(k);
    for _ in 0..64 {
        if r.is_zero() {
            r = BigInt::one();
        }
        let next = (&r * (k - 1) + c / r.pow(k - 1)) / &kk;
        let diff = (&next - &r).abs();
        r = next;
        if diff <= BigInt::one() {
            break;
        }
    }
    while r.pow(k) > *c {
        r -= 1;
    }
    while (&r + 1u32).pow(k) <= *c {
        r += 1;
    }
    r
}

/// Enclosure of `ln 2 = sum_{k>=1} 1 / (k 2^k)`, truncated after `bits + 2`
/// terms with the tail bounded by `1 / ((N + 1) 2^N)`.
pub fn ln2(bits: u32) -> DyadicInterval {
    let n = bits as usize + 2;
    let mut lo = BigRational::zero();
    for k in 1..=n {
        lo += BigRational::new(BigInt::one(), BigInt::from(k) << k);
    }
    let tail = BigRational::new(BigInt::one(), BigInt::from(n + 1) << n);
    let hi = &lo + tail;
    DyadicInterval::from_bounds(&lo, &hi, bits)
}

#[derive(Serialize)]
struct IntervalJson {
    lo: String,
    hi: String,
    bits: u32,
    approx: f64,
}

impl Serialize for DyadicInterval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        IntervalJson {
            lo: self.lo.to_string(),
            hi: self.hi.to_string(),
            bits: self.bits,
            approx: self.mid_f64(),
        }
        .serialize(s)
    }
}

impl fmt::Display for DyadicInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{:.17e}, {:.17e}]",
            to_f64(&self.lo()),
            to_f64(&self.hi())
        )
    }
}
