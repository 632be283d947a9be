//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::modp::Fp;

/// A polynomial `a_0 + a_1 T + ... + a_n T^n` over the integers.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and `coeffs().last()` is the leading
/// coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The identity polynomial `T`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// `c * T^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// `T - r`
    pub fn linear_root(r: i64) -> Self {
        Self::from_i64(&[-r, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn trailing(&self) -> Option<&BigInt> {
        self.coeffs.first()
    }

    /// Non-negative gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Canonical form: content 1 and positive leading coefficient.
    pub fn primitive(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().unwrap().is_negative() {
            g = -g;
        }
        self.div_scalar_exact(&g)
    }

    pub fn is_primitive(&self) -> bool {
        !self.is_zero() && self.content().is_one() && self.leading().unwrap().is_positive()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Divides every coefficient by `k`; `k` must divide the content.
    pub fn div_scalar_exact(&self, k: &BigInt) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| {
                    debug_assert!((c % k).is_zero());
                    c / k
                })
                .collect(),
        )
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// `den^n * P(num/den)` as an integer, with `n = deg P`.
    pub fn eval_homogeneous(&self, num: &BigInt, den: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        // Horner in num with den powers pushed onto the lower coefficients.
        for c in self.coeffs.iter().rev() {
            acc = acc * num + c * &dpow;
            dpow *= den;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of `P(x)` at a rational point.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        // den > 0, so den^n > 0 and the homogeneous value has the sign of P(x).
        self.eval_homogeneous(x.numer(), x.denom()).sign().into_ordering()
    }

    /// Sign of `P` as `x -> +inf` (`positive == true`) or `x -> -inf`.
    pub fn sign_at_infinity(&self, positive: bool) -> Ordering {
        match self.leading() {
            None => Ordering::Equal,
            Some(lc) => {
                let s = lc.sign().into_ordering();
                if positive || self.deg().is_multiple_of(2) {
                    s
                } else {
                    s.reverse()
                }
            }
        }
    }

    /// `P(Q(T))`
    pub fn compose(&self, q: &IntPoly) -> IntPoly {
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &IntPoly::constant(c.clone());
        }
        acc
    }

    /// Integer polynomial with roots `r * root(P)`, `r = num/den`:
    /// returns `sum a_i den^i num^(n-i) T^i`.
    pub fn scale_roots(&self, num: &BigInt, den: &BigInt) -> IntPoly {
        let n = self.deg();
        let mut out = Vec::with_capacity(n + 1);
        for (i, a) in self.coeffs.iter().enumerate() {
            out.push(a * num.pow((n - i) as u32) * den.pow(i as u32));
        }
        IntPoly::new(out)
    }

    /// `T^n P(1/T)`
    pub fn reverse(&self) -> IntPoly {
        let mut v = self.coeffs.clone();
        v.reverse();
        IntPoly::new(v)
    }

    /// `P(-T)`
    pub fn negate_var(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// `P(T + a)` by repeated synthetic division.
    pub fn shift(&self, a: &BigInt) -> IntPoly {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &c[j + 1] * a;
                c[j] += t;
            }
        }
        IntPoly::new(c)
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) a = q b + r`.
    pub fn pseudo_rem(&self, b: &IntPoly) -> IntPoly {
        self.pseudo_div_rem(b).1
    }

    pub fn pseudo_div_rem(&self, b: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(!b.is_zero(), "pseudo-division by zero polynomial");
        if self.deg() < b.deg() || self.is_zero() {
            return (IntPoly::zero(), self.clone());
        }
        let db = b.deg();
        let lb = b.leading().unwrap().clone();
        let mut r = self.coeffs.clone();
        let delta = self.deg() - db;
        let mut q = vec![BigInt::zero(); delta + 1];
        for k in (0..=delta).rev() {
            let top = r[k + db].clone();
            for qi in q.iter_mut() {
                *qi *= &lb;
            }
            q[k] += &top;
            for c in r.iter_mut().take(k + db) {
                *c *= &lb;
            }
            for (j, bc) in b.coeffs.iter().enumerate().take(db) {
                r[k + j] -= &top * bc;
            }
            r[k + db] = BigInt::zero();
        }
        r.truncate(db);
        (IntPoly::new(q), IntPoly::new(r))
    }

    /// Exact division in `Z[T]`; `None` if `b` does not divide `self` there.
    pub fn div_exact(&self, b: &IntPoly) -> Option<IntPoly> {
        assert!(!b.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.deg() < b.deg() {
            return None;
        }
        let db = b.deg();
        let lb = b.leading().unwrap();
        let mut r = self.coeffs.clone();
        let delta = self.deg() - db;
        let mut q = vec![BigInt::zero(); delta + 1];
        for k in (0..=delta).rev() {
            let top = &r[k + db];
            if top.is_zero() {
                continue;
            }
            let (qk, rem) = top.div_rem(lb);
            if !rem.is_zero() {
                return None;
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[k + j] -= &qk * bc;
            }
            q[k] = qk;
        }
        if r.iter().all(Zero::is_zero) {
            Some(IntPoly::new(q))
        } else {
            None
        }
    }

    /// True when `b` divides `self` in `Q[T]`.
    pub fn divisible_by(&self, b: &IntPoly) -> bool {
        self.pseudo_rem(b).is_zero()
    }

    /// Primitive gcd with positive leading coefficient (primitive PRS).
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        let (mut a, mut b) = if self.deg() >= other.deg() {
            (self.primitive(), other.primitive())
        } else {
            (other.primitive(), self.primitive())
        };
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = if r.is_zero() { r } else { r.primitive() };
        }
        a.primitive()
    }

    /// Yun's square-free decomposition of the primitive part:
    /// `P = c * prod f_i^i` with each `f_i` square-free and pairwise coprime.
    pub fn square_free_decomposition(&self) -> Vec<(IntPoly, usize)> {
        let p = self.primitive();
        if p.deg() == 0 {
            return Vec::new();
        }
        if p.square_free_mod_small_prime() {
            return vec![(p, 1)];
        }
        let mut out = Vec::new();
        let dp = p.derivative();
        let a = p.gcd(&dp);
        let mut b = p.div_exact_q(&a);
        let mut c = dp.div_exact_q(&a);
        let mut d = &c - &b.derivative();
        let mut i = 1;
        loop {
            let g = b.gcd(&d);
            if g.deg() > 0 {
                out.push((g.clone(), i));
            }
            b = b.div_exact_q(&g);
            if b.deg() == 0 {
                break;
            }
            c = d.div_exact_q(&g);
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Product of the distinct irreducible factors (primitive).
    pub fn square_free_part(&self) -> IntPoly {
        let p = self.primitive();
        if p.deg() == 0 || p.square_free_mod_small_prime() {
            return p;
        }
        let g = p.gcd(&p.derivative());
        p.div_exact_q(&g).primitive()
    }

    pub fn is_square_free(&self) -> bool {
        self.square_free_mod_small_prime() || self.gcd(&self.derivative()).deg() == 0
    }

    /// Sufficient test: square-free modulo a prime not dividing the leading
    /// coefficient implies square-free over `Q`.
    fn square_free_mod_small_prime(&self) -> bool {
        let Some(lc) = self.leading() else {
            return false;
        };
        [1009u64, 10007, 65537, 1_000_003]
            .into_iter()
            .map(Fp::new)
            .filter(|f| f.reduce_int(lc) != 0)
            .take(2)
            .any(|f| {
                let g = f.from_intpoly(self);
                f.is_square_free(&g)
            })
    }

    /// Division that is exact in `Q[T]`, returning an integer multiple of
    /// the rational quotient. Used where only the roots matter.
    fn div_exact_q(&self, b: &IntPoly) -> IntPoly {
        if let Some(q) = self.div_exact(b) {
            return q;
        }
        let (q, r) = self.pseudo_div_rem(b);
        debug_assert!(r.is_zero(), "inexact division in Q[T]");
        q
    }

    /// `Q` with `Q^n = self`, if one exists in `Z[T]`. The reversed
    /// polynomial `B = rev Q` is the power series with `B^n = A = rev P`,
    /// read off from `n A B' = A' B`.
    pub fn nth_root(&self, n: u32) -> Option<IntPoly> {
        if n == 0 || self.is_zero() {
            return None;
        }
        if n == 1 {
            return Some(self.clone());
        }
        let big_n = self.deg();
        if !big_n.is_multiple_of(n as usize) {
            return None;
        }
        let m = big_n / n as usize;
        let a: Vec<BigRational> = (0..=big_n)
            .map(|i| BigRational::from_integer(self.coeffs[big_n - i].clone()))
            .collect();
        let a0 = a[0].to_integer();
        if n.is_multiple_of(2) && a0.is_negative() {
            return None;
        }
        let b0 = if a0.is_negative() { -(-&a0).nth_root(n) } else { a0.nth_root(n) };
        let nn = BigRational::from_integer(BigInt::from(n));
        let mut b = vec![BigRational::from_integer(b0)];
        for k in 1..=m {
            let mut acc = BigRational::zero();
            for i in 0..k {
                if let Some(ai) = a.get(i + 1) {
                    acc += BigRational::from_integer(BigInt::from(i + 1)) * ai * &b[k - 1 - i];
                }
            }
            for i in 1..k {
                if let Some(ai) = a.get(i) {
                    acc -= &nn * ai * BigRational::from_integer(BigInt::from(k - i)) * &b[k - i];
                }
            }
            b.push(acc / (&nn * BigRational::from_integer(BigInt::from(k)) * &a[0]));
        }
        if b.iter().any(|x| !x.is_integer()) {
            return None;
        }
        let q = IntPoly::new(b.into_iter().rev().map(|x| x.to_integer()).collect());
        (q.pow(n) == *self).then_some(q)
    }

    /// Maximum coefficient bit length.
    pub fn max_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0)
    }

    /// Bound `2^k` with every complex root strictly inside `|z| < 2^k`
    /// (Cauchy bound `1 + max |a_i / a_n|`).
    pub fn root_bound_log2(&self) -> u64 {
        let lc = self.leading().expect("root bound of zero polynomial").abs();
        let mut best = BigRational::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            let r = BigRational::new(c.abs(), lc.clone());
            if r > best {
                best = r;
            }
        }
        let bound = best + BigRational::one();
        let ceil = bound.ceil().to_integer();
        ceil.bits() + 1
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.sign() == Sign::Minus;
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "T")?,
                _ => write!(f, "T^{i}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = rhs.coeffs.get(i);
            v.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        IntPoly::new(v)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::new(v)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

/// JSON form: coefficient strings indexed by degree, `4T - 1` as `["-1", "4"]`.
impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|c| c.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntPoly::new(coeffs))
    }
}

/// Ordering used to sort canonical factor lists: by degree, then coefficients
/// from the leading one down.
pub fn canonical_cmp(a: &IntPoly, b: &IntPoly) -> Ordering {
    a.deg()
        .cmp(&b.deg())
        .then_with(|| a.coeffs.iter().rev().cmp(b.coeffs.iter().rev()))
}

trait SignOrd {
    fn into_ordering(self) -> Ordering;
}

impl SignOrd for Sign {
    fn into_ordering(self) -> Ordering {
        match self {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }
}

/// Sign of an integer as an `Ordering` relative to zero.
pub fn sign_of(x: &BigInt) -> Ordering {
    x.sign().into_ordering()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn nth_roots() {
        let q = p(&[3, 0, -2, 5]);
        for n in 1..5 {
            assert_eq!(q.pow(n).nth_root(n), Some(q.clone()));
        }
        assert_eq!((-&q).pow(3).nth_root(3), Some(-&q));
        let t2 = p(&[0, 0, 1]);
        assert_eq!((&t2 * &q).pow(2).nth_root(2), Some(&t2 * &q));
        assert_eq!(p(&[1, 0, 2]).nth_root(2), None);
        assert_eq!(p(&[-1, 0, 1]).nth_root(2), None);
    }

    #[test]
    fn trims_and_degrees() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0, 0]).degree(), None);
    }

    #[test]
    fn primitive_normal_form() {
        assert_eq!(p(&[4, -6, -2]).primitive(), p(&[-2, 3, 1]));
        assert!(p(&[-1, 4]).is_primitive());
    }

    #[test]
    fn pseudo_division_identity() {
        let a = p(&[3, 0, 5, 7, 2]);
        let b = p(&[1, 3, 4]);
        let (q, r) = a.pseudo_div_rem(&b);
        let lc = BigInt::from(4).pow(3);
        assert_eq!(a.scale(&lc), &(&q * &b) + &r);
        assert!(r.deg() < b.deg());
    }

    #[test]
    fn exact_division() {
        let a = p(&[-1, 0, 1]);
        assert_eq!(a.div_exact(&p(&[1, 1])), Some(p(&[-1, 1])));
        assert_eq!(a.div_exact(&p(&[1, 2])), None);
    }

    #[test]
    fn gcd_and_square_free() {
        let f = &p(&[-1, 1]).pow(3) * &p(&[2, 0, 1]);
        assert_eq!(f.gcd(&f.derivative()), p(&[-1, 1]).pow(2));
        let sf = f.square_free_decomposition();
        assert_eq!(sf, vec![(p(&[2, 0, 1]), 1), (p(&[-1, 1]), 3)]);
        assert_eq!(f.square_free_part(), &p(&[-1, 1]) * &p(&[2, 0, 1]));
    }

    #[test]
    fn shift_and_compose_agree() {
        let f = p(&[5, -3, 0, 2]);
        assert_eq!(f.shift(&BigInt::from(2)), f.compose(&p(&[2, 1])));
    }

    #[test]
    fn homogeneous_sign() {
        let f = p(&[-1, 4]);
        let q = BigRational::new(1.into(), 4.into());
        assert_eq!(f.sign_at(&q), Ordering::Equal);
        let q = BigRational::new(1.into(), 5.into());
        assert_eq!(f.sign_at(&q), Ordering::Less);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[-1, 4]).to_string(), "4T - 1");
        assert_eq!(p(&[-4, 0, 27]).to_string(), "27T^2 - 4");
    }
}
