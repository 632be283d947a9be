use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::algebraic::root_valuations;
use crate::capacity::discriminant_upper_bound;
use crate::exact::dyadic::DyadicInterval;
use crate::exact::poly::IntPoly;
use crate::exact::rational::{format_rational, BigIntSerde};
use crate::exact::resultant::discriminant;
use crate::exact::valuation::{int_valuation, prime_divisors};

/// `d^(nd/(d-1))` when it is an integer.
pub fn required_leading_coeff(d: u64, n: usize) -> Option<BigInt> {
    let mut out = BigInt::one();
    for p in prime_divisors(d) {
        let e = int_valuation(&BigInt::from(d), p).unwrap();
        let num = e * n as u64 * d;
        if !num.is_multiple_of(d - 1) {
            return None;
        }
        out *= BigInt::from(p).pow((num / (d - 1)) as u32);
    }
    Some(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LeadingCoeffVerdict {
    Pass,
    Fail,
    NotInteger,
}

#[derive(Clone, Debug, Serialize)]
pub struct LeadingCoeffCheck {
    pub d: u64,
    pub n: usize,
    #[serde(with = "BigIntSerde")]
    pub leading: BigInt,
    pub required: Option<String>,
    pub verdict: LeadingCoeffVerdict,
}

/// Compares `lc(P)` with `d^(nd/(d-1))`, `n = deg P`.
pub fn leading_coeff_check(p: &IntPoly, d: u64) -> LeadingCoeffCheck {
    let n = p.deg();
    let leading = p.leading().cloned().unwrap_or_default();
    let required = required_leading_coeff(d, n);
    let verdict = match &required {
        None => LeadingCoeffVerdict::NotInteger,
        Some(r) if r == &leading => LeadingCoeffVerdict::Pass,
        Some(_) => LeadingCoeffVerdict::Fail,
    };
    LeadingCoeffCheck {
        d,
        n,
        leading,
        required: required.map(|r| r.to_string()),
        verdict,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PrimeValuation {
    pub p: u64,
    pub valuations: Vec<String>,
    /// Exact required value for `p | d`, or `">= 0"` otherwise.
    pub expected: String,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ValuationCheck {
    pub d: u64,
    pub primes: Vec<PrimeValuation>,
    /// Part of `lc(P)` coprime to `d`; any prime factor of it gives a root
    /// of negative valuation away from `d`.
    pub foreign_leading_part: String,
    pub pass: bool,
}

const SAMPLE_LIMIT: u64 = 1000;

/// Root valuations of `P` at every `p | d` must equal
/// `-(d/(d-1)) nu_p(d)`; at sampled primes `p` not dividing `d` that
/// divide `a_0 a_n` they must be nonnegative.
pub fn valuation_check(p: &IntPoly, d: u64) -> ValuationCheck {
    let dd = BigInt::from(d);
    let d_primes = prime_divisors(d);
    let mut primes = Vec::new();
    for &q in &d_primes {
        let vd = int_valuation(&dd, q).unwrap() as i64;
        let target = BigRational::new(BigInt::from(-(d as i64) * vd), BigInt::from(d as i64 - 1));
        let vals = root_valuations(p, q).unwrap_or_default();
        let ok = vals.len() == p.deg() && vals.iter().all(|v| v == &target);
        primes.push(PrimeValuation {
            p: q,
            valuations: vals.iter().map(format_rational).collect(),
            expected: format_rational(&target),
            ok,
        });
    }
    let mut foreign = p.leading().map(|c| c.abs()).unwrap_or_default();
    for &q in &d_primes {
        let q = BigInt::from(q);
        while !foreign.is_zero() && foreign.is_multiple_of(&q) {
            foreign /= &q;
        }
    }
    let ends = p.coeff(0) * p.leading().cloned().unwrap_or_default();
    for q in (2..SAMPLE_LIMIT).filter(|q| !d.is_multiple_of(*q) && is_small_prime(*q)) {
        if ends.is_zero() || !ends.is_multiple_of(&BigInt::from(q)) {
            continue;
        }
        let vals = root_valuations(p, q).unwrap_or_default();
        let ok = vals.iter().all(|v| !v.is_negative());
        primes.push(PrimeValuation {
            p: q,
            valuations: vals.iter().map(format_rational).collect(),
            expected: ">= 0".into(),
            ok,
        });
    }
    let pass = foreign.is_one() && primes.iter().all(|v| v.ok);
    ValuationCheck {
        d,
        primes,
        foreign_leading_part: foreign.to_string(),
        pass,
    }
}

fn is_small_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|k| k * k <= q).all(|k| !q.is_multiple_of(k))
}

#[derive(Clone, Debug, Serialize)]
pub struct DiscriminantCheck {
    pub d: u64,
    pub n: usize,
    #[serde(with = "BigIntSerde")]
    pub discriminant: BigInt,
    /// `a_n^(n-1)`.
    #[serde(with = "BigIntSerde")]
    pub lower: BigInt,
    pub divisible: bool,
    pub above_lower: bool,
    /// Present for even `d >= 4` and `n >= 2`.
    pub upper: Option<DyadicInterval>,
    pub below_upper: Option<bool>,
    pub pass: bool,
}

/// `a_n^(n-1) | Delta(P)`, `a_n^(n-1) <= Delta(P)` and, for even `d >= 4`,
/// `Delta(P) <= a_n^(2(n-1)) (2^(1/(d-1)) - 1)^(n(n-1)) D_n`.
pub fn discriminant_bound_check(p: &IntPoly, d: u64, bits: u32) -> DiscriminantCheck {
    let n = p.deg();
    let a_n = p.leading().cloned().unwrap_or_default();
    let disc = if n <= 1 { BigInt::one() } else { discriminant(p).unwrap_or_default() };
    let lower = a_n.abs().pow(n.saturating_sub(1) as u32);
    let divisible = !lower.is_zero() && disc.is_multiple_of(&lower);
    let above_lower = disc >= lower;
    let (upper, below_upper) = if d >= 4 && d.is_multiple_of(2) && n >= 2 {
        let target = BigRational::from_integer(disc.clone());
        let mut b = bits.max(32);
        let mut out = None;
        while b <= crate::capacity::MAX_BITS {
            let bound = discriminant_upper_bound(&a_n, d as u32, n, b).expect("n >= 2");
            match bound.compare_rational(&target) {
                Some(ord) => {
                    out = Some((bound, ord == Ordering::Greater));
                    break;
                }
                None => b *= 2,
            }
        }
        match out {
            Some((bound, ok)) => (Some(bound), Some(ok)),
            None => (None, Some(false)),
        }
    } else {
        (None, None)
    };
    let pass = divisible && above_lower && below_upper.unwrap_or(true);
    DiscriminantCheck {
        d,
        n,
        discriminant: disc,
        lower,
        divisible,
        above_lower,
        upper,
        below_upper,
        pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn leading_coefficients() {
        assert_eq!(leading_coeff_check(&p(&[-1, 4]), 2).verdict, LeadingCoeffVerdict::Pass);
        assert_eq!(leading_coeff_check(&p(&[-4, 0, 27]), 3).verdict, LeadingCoeffVerdict::Pass);
        assert_eq!(required_leading_coeff(4, 3), Some(BigInt::from(256)));
        assert_eq!(required_leading_coeff(4, 1), None);
        assert_eq!(required_leading_coeff(6, 2), None);
        assert_eq!(leading_coeff_check(&p(&[-1, 2]), 2).verdict, LeadingCoeffVerdict::Fail);
        assert_eq!(leading_coeff_check(&p(&[1, 1]), 4).verdict, LeadingCoeffVerdict::NotInteger);
    }

    #[test]
    fn valuations() {
        let v = valuation_check(&p(&[-4, 0, 27]), 3);
        assert!(v.pass);
        assert_eq!(v.primes[0].valuations, vec!["-3/2", "-3/2"]);
        assert!(valuation_check(&p(&[-1, 4]), 2).pass);
        let v = valuation_check(&p(&[3, 4]), 2);
        assert!(v.pass);
        let three = v.primes.iter().find(|q| q.p == 3).unwrap();
        assert_eq!(three.valuations, vec!["1"]);
        assert!(!valuation_check(&p(&[-1, 2]), 2).pass);
        assert!(!valuation_check(&p(&[-1, 12]), 2).pass);
    }

    #[test]
    fn discriminant_bounds() {
        let c = discriminant_bound_check(&p(&[-4, 0, 27]), 3, 64);
        assert_eq!(c.discriminant, BigInt::from(432));
        assert!(c.pass && c.divisible && c.upper.is_none());
        let lin = discriminant_bound_check(&p(&[-1, 4]), 2, 64);
        assert!(lin.pass);
        assert_eq!(lin.lower, BigInt::one());
        // roots -1, 0, 1 scaled: 256 T^3 - 16 T is far from a parabolic
        // minimal polynomial and violates the upper bound
        let wide = discriminant_bound_check(&p(&[0, -16, 0, 256]), 4, 64);
        assert_eq!(wide.below_upper, Some(false));
    }
}
