//! Cyclotomic polynomials, root-of-unity recognition and the images of
//! roots of unity under `z -> z + 1/z`.

use num_bigint::BigInt;
use num_traits::One;

use super::AlgebraicNumber;
use crate::exact::poly::IntPoly;
use crate::exact::rational::int;
use crate::par::Exec;

pub fn euler_phi(m: u64) -> u64 {
    let mut n = m;
    let mut phi = m;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

pub fn divisors(m: u64) -> Vec<u64> {
    (1..=m).filter(|k| m.is_multiple_of(*k)).collect()
}

/// `Phi_m`, by dividing `T^m - 1` by the cyclotomic polynomials of the
/// proper divisors.
pub fn cyclotomic(m: u64) -> IntPoly {
    assert!(m >= 1);
    let mut f = IntPoly::monomial(BigInt::one(), m as usize) - IntPoly::one();
    for k in divisors(m) {
        if k < m {
            f = f.div_exact(&cyclotomic(k)).expect("cyclotomic division");
        }
    }
    f
}

/// All `m` with `phi(m) = n`. Since `phi(m) >= sqrt(m / 2)`, it suffices to
/// search `m <= 2 n^2`.
pub fn phi_inverse(n: u64) -> Vec<u64> {
    (1..=2 * n * n.max(1)).filter(|&m| euler_phi(m) == n).collect()
}

/// Order of `a` as a root of unity, or `None`.
pub fn is_root_of_unity(a: &AlgebraicNumber) -> Option<u64> {
    let f = a.minpoly();
    let n = f.deg() as u64;
    if !f.is_monic() {
        return None;
    }
    let mut cands = phi_inverse(n);
    cands.sort_unstable();
    cands.into_iter().find(|&m| &cyclotomic(m) == f)
}

/// Minimal polynomial of `2 cos(2 pi / m)`, from the palindromic form of
/// `Phi_m` and the Dickson polynomials `D_j(z + 1/z) = z^j + z^-j`.
pub fn cos_minpoly(m: u64) -> IntPoly {
    match m {
        1 => return IntPoly::from_i64(&[-2, 1]),
        2 => return IntPoly::from_i64(&[2, 1]),
        _ => {}
    }
    let phi = cyclotomic(m);
    let k = phi.deg() / 2;
    let x = IntPoly::x();
    let two = IntPoly::constant(BigInt::from(2));
    let mut dickson = vec![two, x.clone()];
    for j in 2..=k {
        let next = &(&x * &dickson[j - 1]) - &dickson[j - 2];
        dickson.push(next);
    }
    let mut out = IntPoly::constant(phi.coeff(k));
    for (j, dj) in dickson.iter().enumerate().skip(1) {
        out = &out + &dj.scale(&phi.coeff(k + j));
    }
    out
}

/// `z + 1/z` over all roots of unity of order `m <= bound` whose whole
/// Galois orbit lies on the arc `Re z <= 0`, deduplicated and sorted.
pub fn arc_unit_images(bound: u64, exec: Exec) -> Vec<AlgebraicNumber> {
    let (lo, hi) = (int(-2), int(0));
    let hits = exec.map((1..=bound).collect(), |m| {
        let psi = cos_minpoly(m);
        if super::all_roots_in(&psi, &lo, &hi) {
            AlgebraicNumber::real_roots_of(&psi)
        } else {
            Vec::new()
        }
    });
    let mut out: Vec<AlgebraicNumber> = hits.into_iter().flatten().collect();
    out.sort_by(|a, b| a.cmp_real(b));
    out.dedup();
    out
}

/// Smallest `n <= max` with `f | T^n - 1`.
pub fn order_by_division(f: &IntPoly, max: u64) -> Option<u64> {
    (1..=max).find(|&n| {
        let t = IntPoly::monomial(BigInt::one(), n as usize) - IntPoly::one();
        t.pseudo_rem(f).is_zero()
    })
}
