//! Polynomials over a small prime field `F_p` (`p < 2^31`), enough for
//! distinct-degree and Cantor–Zassenhaus factorization.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use rand::Rng;

use super::poly::IntPoly;

pub type PolyP = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        assert!(p > 2 && p < (1 << 31), "prime out of range");
        Fp { p }
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero");
        self.pow(a, self.p - 2)
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn reduce_int(&self, c: &BigInt) -> u64 {
        c.mod_floor(&BigInt::from(self.p)).to_u64().unwrap()
    }

    pub fn from_intpoly(&self, f: &IntPoly) -> PolyP {
        let mut v: PolyP = f.coeffs().iter().map(|c| self.reduce_int(c)).collect();
        trim(&mut v);
        v
    }

    pub fn mul_poly(&self, a: &PolyP, b: &PolyP) -> PolyP {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        trim(&mut out);
        out
    }

    pub fn sub_poly(&self, a: &PolyP, b: &PolyP) -> PolyP {
        let n = a.len().max(b.len());
        let mut out: PolyP = (0..n)
            .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        trim(&mut out);
        out
    }

    pub fn add_poly(&self, a: &PolyP, b: &PolyP) -> PolyP {
        let n = a.len().max(b.len());
        let mut out: PolyP = (0..n)
            .map(|i| self.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        trim(&mut out);
        out
    }

    pub fn scale_poly(&self, a: &PolyP, k: u64) -> PolyP {
        let mut out: PolyP = a.iter().map(|&x| self.mul(x, k)).collect();
        trim(&mut out);
        out
    }

    pub fn monic(&self, a: &PolyP) -> PolyP {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => self.scale_poly(a, self.inv(lc)),
        }
    }

    pub fn div_rem(&self, a: &PolyP, b: &PolyP) -> (PolyP, PolyP) {
        assert!(!b.is_empty(), "division by zero polynomial mod p");
        if a.len() < b.len() {
            return (Vec::new(), a.clone());
        }
        let inv = self.inv(*b.last().unwrap());
        let mut r = a.clone();
        let db = b.len() - 1;
        let mut q = vec![0u64; a.len() - db];
        for k in (0..q.len()).rev() {
            let coef = self.mul(r[k + db], inv);
            q[k] = coef;
            if coef == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                r[k + j] = self.sub(r[k + j], self.mul(coef, bj));
            }
        }
        r.truncate(db);
        trim(&mut r);
        trim(&mut q);
        (q, r)
    }

    pub fn rem(&self, a: &PolyP, b: &PolyP) -> PolyP {
        self.div_rem(a, b).1
    }

    pub fn gcd(&self, a: &PolyP, b: &PolyP) -> PolyP {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `(g, s, t)` with `s a + t b = g`, `g` monic.
    pub fn ext_gcd(&self, a: &PolyP, b: &PolyP) -> (PolyP, PolyP, PolyP) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1): (PolyP, PolyP) = (vec![1], Vec::new());
        let (mut t0, mut t1): (PolyP, PolyP) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = self.div_rem(&r0, &r1);
            let s2 = self.sub_poly(&s0, &self.mul_poly(&q, &s1));
            let t2 = self.sub_poly(&t0, &self.mul_poly(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let inv = self.inv(*r0.last().expect("ext_gcd of zeros"));
        (
            self.scale_poly(&r0, inv),
            self.scale_poly(&s0, inv),
            self.scale_poly(&t0, inv),
        )
    }

    pub fn derivative(&self, a: &PolyP) -> PolyP {
        let mut out: PolyP = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.mul(c, i as u64 % self.p))
            .collect();
        trim(&mut out);
        out
    }

    pub fn eval(&self, a: &PolyP, x: u64) -> u64 {
        a.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// `Res(a, b)` over `F_p` by the Euclidean remainder sequence.
    pub fn resultant(&self, a: &PolyP, b: &PolyP) -> u64 {
        if a.is_empty() || b.is_empty() {
            return 0;
        }
        let (mut a, mut b) = (a.clone(), b.clone());
        let mut acc = 1u64;
        loop {
            let (da, db) = (a.len() - 1, b.len() - 1);
            if db == 0 {
                return self.mul(acc, self.pow(b[0], da as u64));
            }
            if da == 0 {
                return self.mul(acc, self.pow(a[0], db as u64));
            }
            let r = self.rem(&a, &b);
            if r.is_empty() {
                return 0;
            }
            if da % 2 == 1 && db % 2 == 1 {
                acc = self.sub(0, acc);
            }
            let lc = *b.last().unwrap();
            acc = self.mul(acc, self.pow(lc, (da - (r.len() - 1)) as u64));
            a = std::mem::replace(&mut b, r);
        }
    }

    pub fn mul_mod(&self, a: &PolyP, b: &PolyP, m: &PolyP) -> PolyP {
        self.rem(&self.mul_poly(a, b), m)
    }

    pub fn pow_mod(&self, base: &PolyP, e: &BigUint, m: &PolyP) -> PolyP {
        let mut result: PolyP = vec![1];
        let base = self.rem(base, m);
        let bits = e.bits();
        for i in (0..bits).rev() {
            result = self.mul_mod(&result, &result, m);
            if e.bit(i) {
                result = self.mul_mod(&result, &base, m);
            }
        }
        self.rem(&result, m)
    }

    pub fn is_square_free(&self, f: &PolyP) -> bool {
        let d = self.derivative(f);
        !d.is_empty() && self.gcd(f, &d).len() == 1
    }

    /// Distinct-degree factorization of a monic square-free `f`: pairs
    /// `(product of all irreducible factors of degree k, k)`.
    pub fn distinct_degree(&self, f: &PolyP) -> Vec<(PolyP, usize)> {
        let mut out = Vec::new();
        let mut f = f.clone();
        let x: PolyP = vec![0, 1];
        let mut h = x.clone();
        let p = BigUint::from(self.p);
        let mut k = 1;
        while f.len() > 2 * k {
            h = self.pow_mod(&h, &p, &f);
            let g = self.gcd(&self.sub_poly(&h, &x), &f);
            if g.len() > 1 {
                f = self.div_rem(&f, &g).0;
                h = self.rem(&h, &f);
                out.push((g, k));
            }
            k += 1;
        }
        if f.len() > 1 {
            let d = f.len() - 1;
            out.push((f, d));
        }
        out
    }

    /// Number of irreducible factors of a monic square-free `f`.
    pub fn factor_count(&self, f: &PolyP) -> usize {
        self.distinct_degree(f)
            .iter()
            .map(|(g, k)| (g.len() - 1) / k)
            .sum()
    }

    /// Cantor–Zassenhaus equal-degree splitting.
    pub fn equal_degree<R: Rng>(&self, f: &PolyP, k: usize, rng: &mut R) -> Vec<PolyP> {
        let n = f.len() - 1;
        if n == k {
            return vec![self.monic(f)];
        }
        let exp = (BigUint::from(self.p).pow(k as u32) - BigUint::one()) / BigUint::from(2u32);
        loop {
            let mut a: PolyP = (0..n).map(|_| rng.gen_range(0..self.p)).collect();
            trim(&mut a);
            if a.len() <= 1 {
                continue;
            }
            let b = self.sub_poly(&self.pow_mod(&a, &exp, f), &vec![1]);
            let g = self.gcd(&b, f);
            let dg = g.len().saturating_sub(1);
            if dg > 0 && dg < n {
                let h = self.div_rem(f, &g).0;
                let mut out = self.equal_degree(&g, k, rng);
                out.extend(self.equal_degree(&self.monic(&h), k, rng));
                return out;
            }
        }
    }

    /// Full factorization of a monic square-free polynomial into monic
    /// irreducibles.
    pub fn factor_square_free<R: Rng>(&self, f: &PolyP, rng: &mut R) -> Vec<PolyP> {
        let mut out = Vec::new();
        for (g, k) in self.distinct_degree(f) {
            out.extend(self.equal_degree(&g, k, rng));
        }
        out
    }
}

pub fn trim(v: &mut PolyP) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub fn to_intpoly(v: &PolyP) -> IntPoly {
    IntPoly::new(v.iter().map(|&c| BigInt::from(c)).collect())
}

/// Deterministic Miller–Rabin for all `u64` (the first twelve prime bases
/// suffice below `3.3 * 10^24`).
pub fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut a: u64, mut e: u64| {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, a);
            }
            a = mulmod(a, a);
            e >>= 1;
        }
        r
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'bases: for a in BASES {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// The `count` largest primes below `2^31`, descending.
pub fn large_primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut n = (1u64 << 31) - 1;
    while out.len() < count {
        if is_prime_u64(n) {
            out.push(n);
        }
        n -= 2;
    }
    out
}
