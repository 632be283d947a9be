//! Parabolic parameters with real multiplier `lambda = +1` or `-1`.
//!
//! `per_resultant` eliminates the cycle point. Splitting it by least period
//! uses `T_j = Res_z(f^j - z, ((f^j)')^(n/j) - lambda)`, which factors as
//! `prod_{i | j} P_i` where `P_i` runs over points of exact period `i`; the
//! top part is `P_n = Per_n^n` with `Per_n = prod_{n-cycles} (mu - lambda)`.
//! Roots of `Per_n` that are really `m`-cycles with primitive `(n/m)`-th
//! root of unity multiplier are detected exactly by divisibility.

pub mod elim;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::algebraic::cyclotomic::divisors;
use crate::algebraic::{all_roots_real, cyclotomic, is_milnor_unit, AlgebraicNumber};
use crate::exact::factor::factor_irreducible;
use crate::exact::poly::{canonical_cmp, IntPoly};
use crate::par::Exec;
use crate::Error;

pub use elim::cycle_resultant;

/// Largest `d^n` handled.
pub const INSTANCE_CAP: u64 = 100;

fn check_instance(d: u32, n: u32, lambda: i64) -> Result<(), Error> {
    if d < 2 || n < 1 {
        return Err(Error::InvalidArgument(format!("need d >= 2 and n >= 1, got d={d}, n={n}")));
    }
    if lambda != 1 && lambda != -1 {
        return Err(Error::InvalidArgument(format!("lambda must be +1 or -1, got {lambda}")));
    }
    let size = (d as u64).checked_pow(n).unwrap_or(u64::MAX);
    if size > INSTANCE_CAP {
        return Err(Error::InstanceTooLarge(format!("d^n = {d}^{n} exceeds {INSTANCE_CAP}")));
    }
    Ok(())
}

/// `w^k - lambda`.
fn power_minus(k: u32, lambda: i64) -> IntPoly {
    &IntPoly::monomial(BigInt::one(), k as usize) - &IntPoly::constant(BigInt::from(lambda))
}

/// `Res_z(f_c^n(z) - z, (f_c^n)'(z) - lambda)`, primitive with positive
/// leading coefficient.
pub fn per_resultant(d: u32, n: u32, lambda: i64) -> Result<IntPoly, Error> {
    check_instance(d, n, lambda)?;
    Ok(cycle_resultant(d, n, &power_minus(1, lambda), Exec::default())?.primitive())
}

/// `(j, P_j)` for every divisor `j` of `n`.
pub fn period_parts(d: u32, n: u32, lambda: i64, exec: Exec) -> Result<Vec<(u32, IntPoly)>, Error> {
    check_instance(d, n, lambda)?;
    let mut parts: Vec<(u32, IntPoly)> = Vec::new();
    for j in divisors(n as u64).into_iter().map(|j| j as u32) {
        let mut t = cycle_resultant(d, j, &power_minus(n / j, lambda), exec)?;
        for (i, p) in &parts {
            if j % i == 0 {
                t = t
                    .div_exact(p)
                    .ok_or_else(|| Error::InvalidArgument(format!("P_{i} does not divide T_{j}")))?;
            }
        }
        parts.push((j, t));
    }
    Ok(parts)
}

/// `Per_n(lambda)`: one factor `mu - lambda` per cycle of exact period `n`.
pub fn per_polynomial(d: u32, n: u32, lambda: i64, exec: Exec) -> Result<IntPoly, Error> {
    let (_, top) = period_parts(d, n, lambda, exec)?.pop().expect("n divides n");
    top.nth_root(n)
        .ok_or_else(|| Error::InvalidArgument(format!("P_{n} is not an {n}-th power")))
}

/// Parameters where an `m`-cycle (`m | n`, `m < n`) has multiplier a
/// primitive `(n/m)`-th root of unity; there `Per_n(+1)` vanishes on the
/// degenerate cycle.
fn satellite_loci(d: u32, n: u32, lambda: i64, exec: Exec) -> Result<Vec<IntPoly>, Error> {
    if lambda != 1 {
        return Ok(Vec::new());
    }
    divisors(n as u64)
        .into_iter()
        .filter(|&m| m < n as u64)
        .map(|m| cycle_resultant(d, m as u32, &cyclotomic(n as u64 / m), exec))
        .collect()
}

fn is_satellite(q: &IntPoly, loci: &[IntPoly]) -> bool {
    loci.iter().any(|s| s.divisible_by(q))
}

#[derive(Clone, Debug, Serialize)]
pub struct ParabolicCandidate {
    pub d: u32,
    pub n: u32,
    pub lambda: i64,
    #[serde(flatten)]
    pub parameter: AlgebraicNumber,
    pub verified: bool,
}

pub fn solve_parabolic(d: u32, n: u32, lambda: i64) -> Result<Vec<ParabolicCandidate>, Error> {
    solve_parabolic_with(d, n, lambda, Exec::default())
}

/// Every root of `Per_n(lambda)`, one candidate per complex root. Verified
/// means the root carries a cycle of least period `n` with multiplier
/// exactly `lambda`.
pub fn solve_parabolic_with(d: u32, n: u32, lambda: i64, exec: Exec) -> Result<Vec<ParabolicCandidate>, Error> {
    let per = per_polynomial(d, n, lambda, exec)?;
    let loci = satellite_loci(d, n, lambda, exec)?;
    let mut out = Vec::new();
    for q in factor_irreducible(&per).irreducibles() {
        let verified = !is_satellite(q, &loci);
        for parameter in AlgebraicNumber::conjugates_of(q)? {
            out.push(ParabolicCandidate {
                d,
                n,
                lambda,
                parameter,
                verified,
            });
        }
    }
    Ok(out)
}

/// Totally real parameters with a parabolic cycle of period at most
/// `n_max` and multiplier `+1` or `-1`, sorted by minimal polynomial.
pub fn totally_real_parabolic_search(d: u32, n_max: u32) -> Result<Vec<AlgebraicNumber>, Error> {
    totally_real_parabolic_search_with(d, n_max, Exec::default())
}

pub fn totally_real_parabolic_search_with(d: u32, n_max: u32, exec: Exec) -> Result<Vec<AlgebraicNumber>, Error> {
    check_instance(d, n_max, 1)?;
    let jobs: Vec<(u32, i64)> = (1..=n_max).flat_map(|n| [(n, 1), (n, -1)]).collect();
    let found = exec.map(jobs, |(n, lambda)| -> Result<Vec<AlgebraicNumber>, Error> {
        let per = per_polynomial(d, n, lambda, Exec::Sequential)?;
        let real: Vec<IntPoly> = factor_irreducible(&per)
            .irreducibles()
            .filter(|q| all_roots_real(q))
            .cloned()
            .collect();
        if real.is_empty() {
            return Ok(Vec::new());
        }
        let loci = satellite_loci(d, n, lambda, Exec::Sequential)?;
        Ok(real
            .iter()
            .filter(|q| !is_satellite(q, &loci))
            .flat_map(AlgebraicNumber::real_roots_of)
            .collect())
    });
    let mut all = Vec::new();
    for batch in found {
        all.extend(batch?);
    }
    all.sort_by(|a, b| canonical_cmp(a.minpoly(), b.minpoly()).then_with(|| a.cmp_real(b)));
    all.dedup();
    Ok(all)
}

/// Outcome of checking the Milnor unit condition on candidates.
#[derive(Clone, Debug, Serialize)]
pub struct MilnorAudit {
    pub checked: usize,
    pub failures: Vec<ParabolicCandidate>,
    pub pass: bool,
}

pub fn milnor_audit(candidates: &[ParabolicCandidate]) -> MilnorAudit {
    let failures: Vec<ParabolicCandidate> = candidates
        .iter()
        .filter(|c| !is_milnor_unit(&c.parameter, c.d as u64))
        .cloned()
        .collect();
    MilnorAudit {
        checked: candidates.len(),
        pass: failures.is_empty(),
        failures,
    }
}
