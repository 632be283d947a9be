//! Factorization of integer polynomials into irreducibles over the rationals:
//! square-free decomposition, a modular factorization at a well-chosen small
//! prime, multifactor Hensel lifting and subset recombination.

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::modp::{is_prime_u64, Fp, PolyP};
use super::poly::{canonical_cmp, IntPoly};
use super::rational::BigIntSerde;

/// `P = unit * prod f_i^{m_i}` with each `f_i` primitive, irreducible and of
/// positive leading coefficient; factors sorted by [`canonical_cmp`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Factorization {
    #[serde(with = "BigIntSerde")]
    pub unit: BigInt,
    pub factors: Vec<(IntPoly, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> IntPoly {
        let mut acc = IntPoly::constant(self.unit.clone());
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m as u32);
        }
        acc
    }

    pub fn irreducibles(&self) -> impl Iterator<Item = &IntPoly> {
        self.factors.iter().map(|(f, _)| f)
    }
}

/// Factor `p` over `Q`, normalized to integer primitive factors.
pub fn factor_irreducible(p: &IntPoly) -> Factorization {
    if p.is_zero() {
        return Factorization {
            unit: BigInt::zero(),
            factors: Vec::new(),
        };
    }
    let mut unit = p.content();
    if p.leading().unwrap().is_negative() {
        unit = -unit;
    }
    let prim = p.div_scalar_exact(&unit);
    let mut factors: Vec<(IntPoly, usize)> = Vec::new();
    for (sf, mult) in prim.square_free_decomposition() {
        for f in factor_square_free(&sf) {
            factors.push((f, mult));
        }
    }
    factors.sort_by(|a, b| canonical_cmp(&a.0, &b.0));
    Factorization { unit, factors }
}

/// Irreducible factors of a primitive square-free polynomial.
pub fn factor_square_free(f: &IntPoly) -> Vec<IntPoly> {
    factor_sf(f, true)
}

fn factor_sf(f: &IntPoly, deflate: bool) -> Vec<IntPoly> {
    let f = f.primitive();
    let mut out = Vec::new();
    let mut f = strip_t(&f, &mut out);
    if f.deg() == 0 {
        return out;
    }
    // f = g(T^k): factor g first, then each g_i(T^k) on its own.
    let k = exponent_gcd(&f);
    if deflate && k > 1 {
        let g = IntPoly::new(f.coeffs().iter().step_by(k).cloned().collect());
        for gi in factor_sf(&g, true) {
            out.extend(factor_sf(&inflate(&gi, k), false));
        }
        return out;
    }
    if f.deg() == 1 {
        out.push(f);
        return out;
    }
    // Small degrees: pull out rational roots directly.
    if f.deg() <= 3 {
        for r in super::sturm::rational_roots(&f).unwrap_or_default() {
            let lin = IntPoly::new(vec![-r.numer().clone(), r.denom().clone()]).primitive();
            f = f.div_exact(&lin).expect("rational root factor divides");
            out.push(lin);
        }
        if f.deg() > 0 {
            out.push(f.primitive());
        }
        return out;
    }
    out.extend(zassenhaus(&f));
    out
}

fn exponent_gcd(f: &IntPoly) -> usize {
    f.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(0, |g, (i, _)| g.gcd(&i))
}

fn inflate(g: &IntPoly, k: usize) -> IntPoly {
    let mut coeffs = vec![BigInt::zero(); g.deg() * k + 1];
    for (i, c) in g.coeffs().iter().enumerate() {
        coeffs[i * k] = c.clone();
    }
    IntPoly::new(coeffs)
}

fn strip_t(f: &IntPoly, out: &mut Vec<IntPoly>) -> IntPoly {
    let zeros = f.coeffs().iter().take_while(|c| c.is_zero()).count();
    if zeros == 0 {
        return f.clone();
    }
    // square-free input: at most one factor T
    out.push(IntPoly::x());
    IntPoly::new(f.coeffs()[zeros..].to_vec())
}

const PRIME_TRIALS: usize = 8;

fn choose_prime(f: &IntPoly) -> (Fp, PolyP, usize) {
    let lc = f.leading().unwrap();
    let mut best: Option<(Fp, PolyP, usize)> = None;
    let mut tried = 0;
    let mut p = 3u64;
    while tried < PRIME_TRIALS || best.is_none() {
        p += 2;
        if !is_prime_u64(p) {
            continue;
        }
        let field = Fp::new(p);
        if field.reduce_int(lc) == 0 {
            continue;
        }
        let fp = field.monic(&field.from_intpoly(f));
        if !field.is_square_free(&fp) {
            continue;
        }
        tried += 1;
        let count = field.factor_count(&fp);
        if best.as_ref().is_none_or(|b| count < b.2) {
            best = Some((field, fp, count));
        }
        if count == 1 {
            break;
        }
    }
    best.unwrap()
}

fn zassenhaus(f: &IntPoly) -> Vec<IntPoly> {
    let (field, fp, count) = choose_prime(f);
    if count == 1 {
        return vec![f.clone()];
    }
    let mut rng = ChaCha8Rng::seed_from_u64(field.p ^ (f.deg() as u64) << 32);
    let mut modular = field.factor_square_free(&fp, &mut rng);
    modular.sort();
    let p = BigInt::from(field.p);
    let lc = f.leading().unwrap().clone();
    // coefficient bound for lc * (any factor), doubled for the symmetric range
    let norm_inf = f.coeffs().iter().map(|c| c.abs()).max().unwrap();
    let n = f.deg();
    let sqrt_n1 = BigInt::from(n as u64 + 1).sqrt() + 1u32;
    let bound = sqrt_n1 * (BigInt::one() << n) * norm_inf * lc.abs() * 2u32;
    let mut k = 1u32;
    let mut pk = p.clone();
    while pk <= bound {
        pk *= &p;
        k += 1;
    }
    let lifted = multifactor_lift(f, &modular, field, &p, k);
    recombine(f, lifted, &pk)
}

fn recombine(f: &IntPoly, mut lifted: Vec<IntPoly>, pk: &BigInt) -> Vec<IntPoly> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let lc = f.leading().unwrap().clone();
        let target_const = &lc * f.coeff(0);
        let mut found: Option<(Vec<usize>, IntPoly)> = None;
        for subset in (0..lifted.len()).combinations(size) {
            // trailing-coefficient test before forming the product
            let mut c0 = lc.clone();
            for &i in &subset {
                c0 = (c0 * lifted[i].coeff(0)).mod_floor(pk);
            }
            let c0 = symmetric(&c0, pk);
            if c0.is_zero() || !(&target_const % &c0).is_zero() {
                continue;
            }
            let mut g = IntPoly::constant(lc.clone());
            for &i in &subset {
                g = reduce_sym(&(&g * &lifted[i]), pk);
            }
            let g = g.primitive();
            if let Some(q) = f.div_exact(&g) {
                found = Some((subset, g));
                f = q;
                break;
            }
        }
        match found {
            Some((subset, g)) => {
                out.push(g);
                let mut idx = 0;
                lifted.retain(|_| {
                    let keep = !subset.contains(&idx);
                    idx += 1;
                    keep
                });
            }
            None => size += 1,
        }
    }
    if f.deg() > 0 {
        out.push(f.primitive());
    }
    out
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let c = c.mod_floor(m);
    if &c * 2 > *m {
        c - m
    } else {
        c
    }
}

fn reduce_sym(f: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|c| symmetric(c, m)).collect())
}

fn reduce_nonneg(f: &IntPoly, m: &BigInt) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

/// Division by a monic polynomial modulo `m`.
fn div_rem_monic(a: &IntPoly, b: &IntPoly, m: &BigInt) -> (IntPoly, IntPoly) {
    debug_assert!(b.is_monic());
    if a.is_zero() || a.deg() < b.deg() {
        return (IntPoly::zero(), reduce_nonneg(a, m));
    }
    let db = b.deg();
    let mut r: Vec<BigInt> = a.coeffs().iter().map(|c| c.mod_floor(m)).collect();
    let mut q = vec![BigInt::zero(); a.deg() - db + 1];
    for k in (0..q.len()).rev() {
        let coef = r[k + db].mod_floor(m);
        if coef.is_zero() {
            continue;
        }
        for (j, bj) in b.coeffs().iter().enumerate() {
            r[k + j] = (&r[k + j] - &coef * bj).mod_floor(m);
        }
        q[k] = coef;
    }
    r.truncate(db);
    (IntPoly::new(q), IntPoly::new(r))
}

fn mul_mod(a: &IntPoly, b: &IntPoly, m: &BigInt) -> IntPoly {
    reduce_nonneg(&(a * b), m)
}

/// One quadratic Hensel step taking `f = g h (mod m)`, `s g + t h = 1 (mod m)`
/// to the same identities modulo `m2` (a divisor of `m^2`).
fn hensel_step(
    f: &IntPoly,
    g: &IntPoly,
    h: &IntPoly,
    s: &IntPoly,
    t: &IntPoly,
    m2: &BigInt,
) -> (IntPoly, IntPoly, IntPoly, IntPoly) {
    let e = reduce_nonneg(&(f - &(g * h)), m2);
    let (q, r) = div_rem_monic(&mul_mod(s, &e, m2), h, m2);
    let g2 = reduce_nonneg(&(&(g + &(t * &e)) + &(&q * g)), m2);
    let h2 = reduce_nonneg(&(h + &r), m2);
    let b = reduce_nonneg(&(&(&(s * &g2) + &(t * &h2)) - &IntPoly::one()), m2);
    let (c, d) = div_rem_monic(&mul_mod(s, &b, m2), &h2, m2);
    let s2 = reduce_nonneg(&(s - &d), m2);
    let t2 = reduce_nonneg(&(&(t - &(t * &b)) - &(&c * &g2)), m2);
    (g2, h2, s2, t2)
}

/// Lift the monic modular factors of `f` (leading coefficient `lc(f)`) to
/// monic factors modulo `p^k`.
fn multifactor_lift(f: &IntPoly, factors: &[PolyP], field: Fp, p: &BigInt, k: u32) -> Vec<IntPoly> {
    let pk = p.pow(k);
    if factors.len() == 1 {
        let lc = f.leading().unwrap();
        let inv = lc.modinv(&pk).expect("leading coefficient invertible mod p^k");
        return vec![reduce_nonneg(&f.scale(&inv), &pk)];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let lcp = field.reduce_int(f.leading().unwrap());
    let mut g0 = vec![lcp];
    for u in left {
        g0 = field.mul_poly(&g0, u);
    }
    let mut h0: PolyP = vec![1];
    for u in right {
        h0 = field.mul_poly(&h0, u);
    }
    let (one, s0, t0) = field.ext_gcd(&g0, &h0);
    debug_assert_eq!(one, vec![1]);
    let mut g = super::modp::to_intpoly(&g0);
    let mut h = super::modp::to_intpoly(&h0);
    let mut s = super::modp::to_intpoly(&s0);
    let mut t = super::modp::to_intpoly(&t0);
    let mut e = 1u32;
    while e < k {
        let e2 = (2 * e).min(k);
        let m2 = p.pow(e2);
        (g, h, s, t) = hensel_step(&reduce_nonneg(f, &m2), &g, &h, &s, &t, &m2);
        e = e2;
    }
    let mut out = multifactor_lift(&g, left, field, p, k);
    out.extend(multifactor_lift(&h, right, field, p, k));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn small_examples() {
        let f = factor_irreducible(&p(&[-1, 0, 1]));
        assert_eq!(f.factors, vec![(p(&[-1, 1]), 1), (p(&[1, 1]), 1)]);
        let f = factor_irreducible(&p(&[-1, 3, 4]));
        assert_eq!(f.factors, vec![(p(&[1, 1]), 1), (p(&[-1, 4]), 1)]);
        let f = factor_irreducible(&p(&[-4, 0, 27]));
        assert_eq!(f.factors, vec![(p(&[-4, 0, 27]), 1)]);
    }

    #[test]
    fn content_and_multiplicity() {
        let g = &(&p(&[-1, 4]).pow(2) * &p(&[2, 0, 1])).scale(&BigInt::from(-6)) * &p(&[0, 1]);
        let f = factor_irreducible(&g);
        assert_eq!(f.unit, BigInt::from(-6));
        assert_eq!(f.expand(), g);
        assert_eq!(f.factors.len(), 3);
    }

    #[test]
    fn swinnerton_dyer_like_irreducible() {
        // x^4 - 10x^2 + 1 is irreducible but splits modulo every prime.
        let f = p(&[1, 0, -10, 0, 1]);
        assert_eq!(factor_irreducible(&f).factors, vec![(f, 1)]);
    }

    #[test]
    fn cyclotomic_product() {
        // x^12 - 1 = Phi_1 Phi_2 Phi_3 Phi_4 Phi_6 Phi_12
        let mut c = vec![0i64; 13];
        c[0] = -1;
        c[12] = 1;
        let f = factor_irreducible(&p(&c));
        assert_eq!(f.factors.len(), 6);
        assert_eq!(f.expand(), p(&c));
    }

    #[test]
    fn non_monic_high_degree() {
        let a = p(&[3, -1, 0, 7, 2]);
        let b = p(&[-5, 0, 2, 0, 0, 9]);
        let c = p(&[1, 1, 0, 0, 0, 0, 4]);
        let prod = &(&a * &b) * &c;
        let f = factor_irreducible(&prod);
        assert_eq!(f.expand(), prod);
        let degs: Vec<usize> = f.factors.iter().map(|(g, _)| g.deg()).collect();
        assert_eq!(degs.iter().sum::<usize>(), 15);
        for (g, _) in &f.factors {
            assert!(g.is_primitive());
        }
    }
}
