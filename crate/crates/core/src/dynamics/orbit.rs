//! Critical orbits `0, c, c^d + c, ...` in exact or enclosure arithmetic,
//! the PCF decision for rational parameters, and a floating-point probe
//! for attracting cycles.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{check_degree, Parameter};
use crate::algebraic::RootLocation;
use crate::exact::dyadic::DyadicInterval;
use crate::exact::rational::{format_rational, RationalSerde};
use crate::Error;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Outcome {
    Escaped { step: usize },
    Cycle { preperiod: usize, period: usize },
    Converged { limit: f64, period: usize },
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Exact,
    Enclosure,
}

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Iterate {
    Exact(#[serde(with = "RationalSerde")] BigRational),
    Enclosure(DyadicInterval),
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitRecord {
    pub d: u32,
    pub mode: Mode,
    pub iterates: Vec<Iterate>,
    #[serde(flatten)]
    pub outcome: Outcome,
}

/// Default working precision of enclosure-mode orbits.
pub const ORBIT_BITS: u32 = 256;

/// Exact iterates stop once numerators or denominators pass this size.
const MAX_EXACT_BITS: u64 = 1 << 16;

pub fn critical_orbit(d: u32, c: &Parameter, budget: usize) -> Result<OrbitRecord, Error> {
    critical_orbit_with_bits(d, c, budget, ORBIT_BITS)
}

pub fn critical_orbit_with_bits(d: u32, c: &Parameter, budget: usize, bits: u32) -> Result<OrbitRecord, Error> {
    check_degree(d)?;
    if budget == 0 {
        return Err(Error::InvalidArgument("orbit budget must be positive".into()));
    }
    match c {
        Parameter::Rational(r) => Ok(exact_orbit(d, r, budget)),
        Parameter::Algebraic(a) => {
            if let RootLocation::Complex(_) = a.locator() {
                return Err(Error::InvalidArgument("orbits are traced for real parameters".into()));
            }
            let enc = a.enclosure(bits).expect("real parameter");
            Ok(enclosure_orbit(d, &enc, budget))
        }
        Parameter::Interval(iv) => Ok(enclosure_orbit(d, iv, budget)),
    }
}

/// `|z| > max(|c|, 2^(1/(d-1)))`, decided exactly.
fn escaped_exact(z: &BigRational, c: &BigRational, d: u32) -> bool {
    let a = z.abs();
    a > c.abs() && num_traits::pow(a, (d - 1) as usize) > BigRational::from_integer(2.into())
}

fn exact_orbit(d: u32, c: &BigRational, budget: usize) -> OrbitRecord {
    let mut seen: HashMap<BigRational, usize> = HashMap::new();
    let mut iterates = Vec::new();
    let mut z = BigRational::zero();
    let mut outcome = Outcome::BudgetExhausted;
    for step in 0..=budget {
        if let Some(&j) = seen.get(&z) {
            outcome = Outcome::Cycle {
                preperiod: j,
                period: step - j,
            };
            break;
        }
        seen.insert(z.clone(), step);
        iterates.push(Iterate::Exact(z.clone()));
        if escaped_exact(&z, c, d) {
            outcome = Outcome::Escaped { step };
            break;
        }
        if z.numer().bits() > MAX_EXACT_BITS || z.denom().bits() > MAX_EXACT_BITS {
            break;
        }
        z = num_traits::pow(z, d as usize) + c;
    }
    OrbitRecord {
        d,
        mode: Mode::Exact,
        iterates,
        outcome,
    }
}

const CONVERGENCE_TOL: f64 = 1e-12;
const MAX_DETECTED_PERIOD: usize = 16;

fn enclosure_orbit(d: u32, c: &DyadicInterval, budget: usize) -> OrbitRecord {
    let two = BigRational::from_integer(2.into());
    let c_abs = c.abs_upper();
    let mut z = DyadicInterval::from_int(0, c.bits());
    let mut mids: Vec<f64> = Vec::new();
    let mut iterates = Vec::new();
    let mut outcome = Outcome::BudgetExhausted;
    for step in 0..=budget {
        iterates.push(Iterate::Enclosure(z.clone()));
        let lower = z.abs_lower();
        if lower > c_abs && num_traits::pow(lower, (d - 1) as usize) > two {
            outcome = Outcome::Escaped { step };
            break;
        }
        if z.width() > BigRational::one() {
            break;
        }
        mids.push(z.mid_f64());
        if let Some(period) = settled(&mids) {
            outcome = Outcome::Converged {
                limit: *mids.last().unwrap(),
                period,
            };
            break;
        }
        z = z.powi(d).add(c);
    }
    OrbitRecord {
        d,
        mode: Mode::Enclosure,
        iterates,
        outcome,
    }
}

/// Smallest `p` such that the last two iterates repeat with period `p`
/// up to the tolerance.
fn settled(mids: &[f64]) -> Option<usize> {
    let n = mids.len();
    (1..=MAX_DETECTED_PERIOD).find(|&p| {
        n >= p + 2
            && (0..2).all(|k| {
                let (a, b) = (mids[n - 1 - k], mids[n - 1 - k - p]);
                (a - b).abs() <= CONVERGENCE_TOL * (1.0 + a.abs())
            })
    })
}

/// Why a rational parameter is or is not postcritically finite.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum PcfReason {
    Cycle { preperiod: usize, period: usize },
    Escaped { step: usize },
    /// With `c = p/q`, `q > 1`, the iterate `z_n` has denominator exactly
    /// `q^(d^(n-1))`, so no two iterates coincide.
    DenominatorGrowth { denominators: Vec<String> },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PcfDecision {
    pub d: u32,
    #[serde(with = "RationalSerde")]
    pub c: BigRational,
    pub pcf: bool,
    #[serde(flatten)]
    pub reason: PcfReason,
}

/// Decides whether the critical orbit of `z^d + c` is finite.
pub fn pcf_decision(d: u32, c: &BigRational) -> Result<PcfDecision, Error> {
    check_degree(d)?;
    if !c.denom().is_one() {
        let mut z = BigRational::zero();
        let mut denominators = Vec::new();
        for _ in 0..3 {
            z = num_traits::pow(z, d as usize) + c;
            denominators.push(z.denom().to_string());
        }
        return Ok(PcfDecision {
            d,
            c: c.clone(),
            pcf: false,
            reason: PcfReason::DenominatorGrowth { denominators },
        });
    }
    // Integer orbits either escape or stay in a finite set of integers.
    let bound = c.abs().to_integer().max(BigInt::from(2));
    let budget = usize::try_from(&bound * 2 + 4).unwrap_or(usize::MAX);
    let rec = exact_orbit(d, c, budget);
    let (pcf, reason) = match rec.outcome {
        Outcome::Cycle { preperiod, period } => (true, PcfReason::Cycle { preperiod, period }),
        Outcome::Escaped { step } => (false, PcfReason::Escaped { step }),
        _ => unreachable!("integer orbit neither cycled nor escaped"),
    };
    Ok(PcfDecision {
        d,
        c: c.clone(),
        pcf,
        reason,
    })
}

pub fn is_pcf(d: u32, c: &BigRational) -> bool {
    pcf_decision(d, c).map(|r| r.pcf).unwrap_or(false)
}

impl OrbitRecord {
    /// Iterates as display strings (fractions or `[lo, hi]`).
    pub fn iterate_strings(&self) -> Vec<String> {
        self.iterates
            .iter()
            .map(|it| match it {
                Iterate::Exact(r) => format_rational(r),
                Iterate::Enclosure(iv) => iv.to_string(),
            })
            .collect()
    }
}

/// Period and multiplier of the cycle attracting the critical orbit.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CycleProbe {
    pub period: usize,
    pub multiplier: f64,
}

const PROBE_TOL: f64 = 1e-9;
const PROBE_MAX_PERIOD: usize = 64;

/// Floating-point diagnostic: iterate the critical orbit `budget` times and
/// look for a cycle of period at most 64 among the final iterates.
pub fn attracting_cycle_probe(d: u32, c: f64, budget: usize) -> Option<CycleProbe> {
    let radius = c.abs().max(2f64.powf(1.0 / (d as f64 - 1.0)));
    let f = |z: f64| z.powi(d as i32) + c;
    let mut z = 0.0;
    for _ in 0..budget {
        z = f(z);
        if !z.is_finite() || z.abs() > radius {
            return None;
        }
    }
    let mut w = z;
    for period in 1..=PROBE_MAX_PERIOD {
        w = f(w);
        if (w - z).abs() <= PROBE_TOL * (1.0 + z.abs()) {
            let mut multiplier = 1.0;
            let mut u = z;
            for _ in 0..period {
                multiplier *= d as f64 * u.powi(d as i32 - 1);
                u = f(u);
            }
            return Some(CycleProbe { period, multiplier });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::constants;
    use crate::exact::rational::{int, rat};

    fn orbit(d: u32, c: BigRational) -> OrbitRecord {
        critical_orbit(d, &Parameter::Rational(c), 100).unwrap()
    }

    #[test]
    fn exact_orbits() {
        let r = orbit(2, int(-1));
        assert_eq!(r.outcome, Outcome::Cycle { preperiod: 0, period: 2 });
        let r = orbit(2, int(-2));
        assert_eq!(r.outcome, Outcome::Cycle { preperiod: 2, period: 1 });
        assert_eq!(r.iterate_strings(), ["0", "-2", "2"]);
        let r = orbit(4, int(-2));
        assert_eq!(r.outcome, Outcome::Escaped { step: 2 });
        assert_eq!(r.iterate_strings(), ["0", "-2", "14"]);
    }

    #[test]
    fn pcf_examples() {
        assert!(is_pcf(2, &int(0)));
        assert!(!is_pcf(3, &int(1)));
        let dec = pcf_decision(2, &rat(-1, 2)).unwrap();
        assert!(!dec.pcf);
        assert_eq!(
            dec.reason,
            PcfReason::DenominatorGrowth {
                denominators: vec!["2".into(), "4".into(), "16".into()]
            }
        );
        assert!(!is_pcf(3, &int(-1)));
        assert!(is_pcf(4, &int(-1)));
        assert!(!is_pcf(4, &int(-2)));
    }

    #[test]
    fn enclosure_mode() {
        let k = constants(3).unwrap();
        let r = critical_orbit(3, &Parameter::Algebraic(k.alpha.neg()), 2000).unwrap();
        assert_eq!(r.mode, Mode::Enclosure);
        assert!(!matches!(r.outcome, Outcome::Escaped { .. }));
        let r = critical_orbit(2, &Parameter::Interval(DyadicInterval::from_rational(&rat(3, 10), 128)), 200).unwrap();
        assert!(matches!(r.outcome, Outcome::Escaped { .. }));
        let r = critical_orbit(2, &Parameter::Interval(DyadicInterval::from_rational(&rat(-1, 10), 128)), 500).unwrap();
        assert!(matches!(r.outcome, Outcome::Converged { period: 1, .. }));
    }

    #[test]
    fn probes() {
        let p = attracting_cycle_probe(2, -1.0, 1000).unwrap();
        assert_eq!(p.period, 2);
        assert!(p.multiplier.abs() < 1e-12);
        let k = constants(4).unwrap();
        let (g, a) = (k.gamma.to_f64(), k.alpha.to_f64());
        assert_eq!(attracting_cycle_probe(4, (g + a) / 2.0, 100_000).unwrap().period, 1);
        assert_eq!(attracting_cycle_probe(4, (g - 1.0) / 2.0, 100_000).unwrap().period, 2);
        assert!(attracting_cycle_probe(2, 0.3, 1000).is_none());
    }

    #[test]
    fn json_record() {
        let v = serde_json::to_value(orbit(2, int(-1))).unwrap();
        assert_eq!(v["outcome"], "cycle");
        assert_eq!(v["period"], 2);
        assert_eq!(v["iterates"], serde_json::json!(["0", "-1"]));
    }
}
