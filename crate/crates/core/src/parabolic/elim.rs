//! Elimination of the cycle variable. For an integer polynomial `h`,
//!
//! `R_h(c) = Res_z(f_c^m(z) - z, h((f_c^m)'(z)))`
//!
//! is computed modulo many word-size primes, by evaluation at
//! `c = 0, 1, ..., D` and interpolation, then lifted by Chinese remaindering.
//! The degree bound `D` and the coefficient bound are both rigorous, so the
//! result is exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::modp::{large_primes, Fp, PolyP};
use crate::exact::poly::IntPoly;
use crate::par::Exec;
use crate::Error;

/// `deg_c R_h <= deg(h) m (d - 1) d^(m-1)`: every `m`-periodic point grows
/// like `|c|^(1/d)`, so `|h((f^m)')| = O(|c|^(deg(h) m (d-1)/d))` at each of
/// the `d^m` roots.
pub fn degree_bound(d: u32, m: u32, h: &IntPoly) -> usize {
    h.deg() * (m * (d - 1)) as usize * (d as usize).pow(m - 1)
}

/// Iterate `f^m` with `c = 1` and every coefficient nonnegative; it bounds
/// the `l1` norm in `c` of each `z`-coefficient of `f_c^m`.
fn iterate_abs(d: u32, m: u32) -> IntPoly {
    let mut f = IntPoly::x();
    for _ in 0..m {
        f = &f.pow(d) + &IntPoly::one();
    }
    f
}

fn abs_poly(f: &IntPoly) -> IntPoly {
    IntPoly::new(f.coeffs().iter().map(|c| c.abs()).collect())
}

fn log2_norm2_upper(f: &IntPoly) -> u64 {
    let sq: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    sq.bits() / 2 + 1
}

/// `log2` of a bound on every coefficient of `R_h`: Hadamard's inequality
/// on the Sylvester matrix at `|c| = 1`, then Cauchy's estimate.
pub fn coefficient_bits(d: u32, m: u32, h: &IntPoly) -> u64 {
    let f = iterate_abs(d, m);
    let big_f = &f + &IntPoly::x();
    let g = abs_poly(h).compose(&f.derivative());
    let (df, dg) = (big_f.deg() as u64, g.deg() as u64);
    dg * log2_norm2_upper(&big_f) + df * log2_norm2_upper(&g)
}

fn pow_poly(field: &Fp, f: &PolyP, mut e: u32) -> PolyP {
    let mut base = f.clone();
    let mut acc: PolyP = vec![1];
    while e > 0 {
        if e & 1 == 1 {
            acc = field.mul_poly(&acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = field.mul_poly(&base, &base);
        }
    }
    acc
}

/// `R_h(t) mod p`.
fn eval_mod(field: &Fp, d: u32, m: u32, h: &PolyP, t: u64) -> u64 {
    let mut f: PolyP = vec![0, 1];
    for _ in 0..m {
        f = pow_poly(field, &f, d);
        f[0] = field.add(f[0], t);
    }
    let df = field.derivative(&f);
    f[1] = field.sub(f[1], 1);
    // F is monic, so Res(F, G) only depends on G mod F
    let mut g: PolyP = Vec::new();
    for &coef in h.iter().rev() {
        g = field.mul_mod(&g, &df, &f);
        g = field.add_poly(&g, &vec![coef]);
    }
    field.resultant(&f, &g)
}

/// Coefficients mod `p` of the polynomial of degree `<= values.len() - 1`
/// taking `values[i]` at `i`.
fn interpolate_mod(field: &Fp, values: &[u64]) -> PolyP {
    let n = values.len();
    let mut dd = values.to_vec();
    for j in 1..n {
        let inv = field.inv(j as u64);
        for i in (j..n).rev() {
            dd[i] = field.mul(field.sub(dd[i], dd[i - 1]), inv);
        }
    }
    let mut poly: PolyP = vec![dd[n - 1]];
    for j in (0..n - 1).rev() {
        // poly * (x - j) + dd[j]
        let mut next = vec![0u64; poly.len() + 1];
        for (k, &a) in poly.iter().enumerate() {
            next[k + 1] = field.add(next[k + 1], a);
            next[k] = field.sub(next[k], field.mul(a, j as u64));
        }
        next[0] = field.add(next[0], dd[j]);
        poly = next;
    }
    poly.resize(n, 0);
    poly
}

/// `Res_z(f_c^m(z) - z, h((f_c^m)'(z)))` in `Z[c]`, exactly.
pub fn cycle_resultant(d: u32, m: u32, h: &IntPoly, exec: Exec) -> Result<IntPoly, Error> {
    if h.is_zero() {
        return Err(Error::UndefinedResultant);
    }
    let deg = degree_bound(d, m, h);
    let bits = coefficient_bits(d, m, h) + 2;
    // every prime exceeds 2^30
    let primes = large_primes((bits / 30 + 1) as usize);
    let residues = exec.map(primes.clone(), |p| {
        let field = Fp::new(p);
        let hp = field.from_intpoly(h);
        let values: Vec<u64> = (0..=deg as u64).map(|t| eval_mod(&field, d, m, &hp, t)).collect();
        let poly = interpolate_mod(&field, &values);
        let check = eval_mod(&field, d, m, &hp, deg as u64 + 1);
        let ok = field.eval(&poly, deg as u64 + 1) == check;
        (poly, ok)
    });
    if residues.iter().any(|(_, ok)| !ok) {
        return Err(Error::InvalidArgument("degree bound violated in elimination".into()));
    }
    Ok(crt(&primes, residues.into_iter().map(|(r, _)| r).collect()))
}

/// Garner reconstruction in the symmetric range.
fn crt(primes: &[u64], residues: Vec<PolyP>) -> IntPoly {
    let n = residues[0].len();
    let mut x = vec![BigInt::zero(); n];
    let mut modulus = BigInt::one();
    for (p, r) in primes.iter().zip(residues) {
        let field = Fp::new(*p);
        let bp = BigInt::from(*p);
        let minv = field.inv(modulus.mod_floor(&bp).to_u64().unwrap());
        for (xi, &ri) in x.iter_mut().zip(&r) {
            let cur = xi.mod_floor(&bp).to_u64().unwrap();
            let t = field.mul(field.sub(ri, cur), minv);
            *xi += &modulus * t;
        }
        modulus *= bp;
    }
    let half = &modulus >> 1;
    IntPoly::new(
        x.into_iter()
            .map(|v| if v > half { v - &modulus } else { v })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::resultant::resultant;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    /// Direct oracle: exact integer resultants at integer `c`.
    fn oracle(d: u32, m: u32, h: &IntPoly, t: i64) -> BigInt {
        let mut f = IntPoly::x();
        for _ in 0..m {
            f = &f.pow(d) + &IntPoly::constant(BigInt::from(t));
        }
        let g = h.compose(&f.derivative());
        resultant(&(&f - &IntPoly::x()), &g).unwrap()
    }

    #[test]
    fn fixed_point_eliminations() {
        // Res_z(z^2 + c - z, 2z - 1) = 4c - 1
        let r = cycle_resultant(2, 1, &p(&[-1, 1]), Exec::Sequential).unwrap();
        assert_eq!(r, p(&[-1, 4]));
        let r = cycle_resultant(2, 1, &p(&[1, 1]), Exec::Sequential).unwrap();
        assert_eq!(r, p(&[3, 4]));
    }

    #[test]
    fn matches_integer_resultants() {
        for (d, m, h) in [(2, 2, p(&[-1, 1])), (3, 1, p(&[1, 0, 1])), (2, 3, p(&[1, 1])), (3, 2, p(&[-1, 1]))] {
            let r = cycle_resultant(d, m, &h, Exec::Parallel).unwrap();
            assert!(r.deg() <= degree_bound(d, m, &h));
            for t in [-3, -1, 0, 2, 5] {
                assert_eq!(r.eval_i64(t), oracle(d, m, &h, t), "d={d} m={m} t={t}");
            }
        }
    }

    #[test]
    fn interpolation_mod_p() {
        let f = Fp::new(1_000_003);
        let target: PolyP = vec![5, 0, 7, 1];
        let vals: Vec<u64> = (0..4).map(|t| f.eval(&target, t)).collect();
        assert_eq!(interpolate_mod(&f, &vals), target);
    }
}
