//! n-th diameters of real intervals and the quantities `sigma(d)`,
//! `tau(n)` compared in the even-degree case analysis.

pub mod fekete;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::exact::dyadic::DyadicInterval;
use crate::exact::rational::format_rational;
use crate::Error;

pub use fekete::{fekete_oracle, FeketeResult};

/// Exact `D_2, ..., D_N` from `D_2 = 1` and
/// `D_n = n^n (n-2)^(n-2) / (2^(2n-2) (2n-3)^(2n-3)) D_(n-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiameterTable {
    values: Vec<BigRational>,
}

impl DiameterTable {
    pub fn new(max_n: usize) -> Result<Self, Error> {
        if max_n < 2 {
            return Err(Error::InvalidArgument("diameter table needs N >= 2".into()));
        }
        let mut values = vec![BigRational::one()];
        for n in 3..=max_n {
            let prev = values.last().unwrap();
            values.push(prev * ratio(n));
        }
        Ok(DiameterTable { values })
    }

    /// `D_n` for `2 <= n <= N`.
    pub fn get(&self, n: usize) -> Option<&BigRational> {
        n.checked_sub(2).and_then(|i| self.values.get(i))
    }

    pub fn max_n(&self) -> usize {
        self.values.len() + 1
    }

    /// Whether every entry satisfies the recursion.
    pub fn check_recursion(&self) -> bool {
        self.values[0].is_one() && self.values.windows(2).enumerate().all(|(i, w)| w[1] == &w[0] * ratio(i + 3))
    }
}

fn ratio(n: usize) -> BigRational {
    let big = |x: usize| BigInt::from(x);
    let num = big(n).pow(n as u32) * big(n - 2).pow((n - 2) as u32);
    let den = (BigInt::one() << (2 * n - 2)) * big(2 * n - 3).pow((2 * n - 3) as u32);
    BigRational::new(num, den)
}

impl Serialize for DiameterTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.values.len()))?;
        for (i, v) in self.values.iter().enumerate() {
            map.serialize_entry(&format!("D_{}", i + 2), &format_rational(v))?;
        }
        map.end()
    }
}

pub fn d_table(max_n: usize) -> Result<DiameterTable, Error> {
    DiameterTable::new(max_n)
}

fn check_n(n: usize) -> Result<(), Error> {
    if n < 2 {
        Err(Error::InvalidArgument(format!("n must be at least 2, got {n}")))
    } else {
        Ok(())
    }
}

/// Enclosure of `tau(n) = D_n^(1/(n(n-1)))`.
pub fn tau(n: usize, bits: u32) -> Result<DyadicInterval, Error> {
    check_n(n)?;
    let table = DiameterTable::new(n)?;
    let dn = DyadicInterval::from_rational(table.get(n).unwrap(), bits + 8);
    Ok(dn.root((n * (n - 1)) as u32).with_bits(bits))
}

/// Enclosure of `d_n([a, b]) = (b - a) tau(n)`.
pub fn dn_interval(a: &BigRational, b: &BigRational, n: usize, bits: u32) -> Result<DyadicInterval, Error> {
    if a >= b {
        return Err(Error::InvalidArgument("need a < b".into()));
    }
    Ok(tau(n, bits)?.mul_rational(&(b - a)))
}

/// `d_infinity([a, b]) = (b - a) / 4`.
pub fn transfinite_diameter(a: &BigRational, b: &BigRational) -> BigRational {
    (b - a) / BigInt::from(4)
}

/// Enclosure of `2^(1/(d-1)) - 1`.
pub fn root_two_gap(d: u32, bits: u32) -> Result<DyadicInterval, Error> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("degree must be at least 2, got {d}")));
    }
    let r = DyadicInterval::from_int(2, bits + 8).root(d - 1);
    Ok(r.sub(&DyadicInterval::from_int(1, bits + 8)))
}

/// Enclosure of `sigma(d) = d^(d/(d-1)) (2^(1/(d-1)) - 1)`.
pub fn sigma(d: u32, bits: u32) -> Result<DyadicInterval, Error> {
    let gap = root_two_gap(d, bits)?;
    let scale = DyadicInterval::from_int(d as i64, bits + 8).pow_rational(d as i64, d - 1);
    Ok(scale.mul(&gap).with_bits(bits))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
}

/// Certified comparison of `sigma(d) tau(n)` with 1.
#[derive(Clone, Debug, Serialize)]
pub struct CapacityInequality {
    pub d: u32,
    pub n: usize,
    pub product_enclosure: DyadicInterval,
    pub verdict: Verdict,
}

pub const MAX_BITS: u32 = 4096;

/// Decides `sigma(d) tau(n) >= 1`, doubling the precision from `bits`
/// until the enclosure of the product avoids 1.
pub fn capacity_inequality(d: u32, n: usize, bits: u32) -> Result<CapacityInequality, Error> {
    let mut bits = bits.max(16);
    loop {
        let prod = sigma(d, bits)?.mul(&tau(n, bits)?);
        if let Some(ord) = prod.compare_rational(&BigRational::one()) {
            let verdict = if ord.is_gt() { Verdict::Holds } else { Verdict::Fails };
            return Ok(CapacityInequality {
                d,
                n,
                product_enclosure: prod,
                verdict,
            });
        }
        if bits >= MAX_BITS {
            return Err(Error::InvalidArgument(format!(
                "sigma({d}) tau({n}) not separated from 1 at {MAX_BITS} bits"
            )));
        }
        bits *= 2;
    }
}

/// Enclosure of `a_n^(2(n-1)) (2^(1/(d-1)) - 1)^(n(n-1)) D_n`, the upper
/// bound for the discriminant of a degree-`n` minimal polynomial of a
/// totally real parameter.
pub fn discriminant_upper_bound(lead: &BigInt, d: u32, n: usize, bits: u32) -> Result<DyadicInterval, Error> {
    check_n(n)?;
    let table = DiameterTable::new(n)?;
    let gap = root_two_gap(d, bits)?.powi((n * (n - 1)) as u32);
    let scale = BigRational::from_integer(lead.abs().pow(2 * (n as u32 - 1))) * table.get(n).unwrap();
    Ok(gap.mul_rational(&scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::dyadic::ln2;
    use crate::exact::rational::{int, rat};

    #[test]
    fn table_values() {
        let t = d_table(10).unwrap();
        assert_eq!(t.get(2), Some(&int(1)));
        assert_eq!(t.get(3), Some(&rat(1, 16)));
        assert_eq!(t.get(4), Some(&rat(1, 3125)));
        assert!(t.check_recursion());
        assert_eq!(t.max_n(), 10);
        let v = serde_json::to_value(&t).unwrap();
        assert_eq!(v["D_4"], "1/3125");
    }

    #[test]
    fn small_diameters() {
        let d2 = dn_interval(&int(0), &int(4), 2, 64).unwrap();
        assert!(d2.contains(&int(4)));
        let d3 = dn_interval(&int(-1), &int(1), 3, 128).unwrap();
        assert!((d3.mid_f64() - 2f64.cbrt()).abs() < 1e-15);
        assert!(d3.width() < rat(1, 1 << 40));
        let t3 = tau(3, 128).unwrap();
        assert!((t3.mid_f64() - 2f64.powf(-2.0 / 3.0)).abs() < 1e-15);
        assert!(tau(2, 64).unwrap().contains(&int(1)));
        assert!(sigma(2, 64).unwrap().contains(&int(4)));
        assert_eq!(transfinite_diameter(&int(0), &int(1)), rat(1, 4));
    }

    #[test]
    fn scaling_is_exact() {
        for n in 2..8 {
            let unit = dn_interval(&int(0), &int(1), n, 96).unwrap();
            let wide = dn_interval(&rat(-3, 2), &rat(5, 2), n, 96).unwrap();
            assert_eq!(wide, unit.mul_rational(&int(4)));
        }
    }

    #[test]
    fn corners() {
        assert_eq!(capacity_inequality(6, 3, 64).unwrap().verdict, Verdict::Fails);
        assert_eq!(capacity_inequality(4, 4, 64).unwrap().verdict, Verdict::Fails);
        assert_eq!(capacity_inequality(4, 3, 64).unwrap().verdict, Verdict::Holds);
        let bound = discriminant_upper_bound(&BigInt::from(256), 4, 3, 128).unwrap();
        assert_eq!(bound.compare_rational(&int(1 << 17)), Some(std::cmp::Ordering::Less));
        assert_eq!(bound.compare_rational(&int(1 << 16)), Some(std::cmp::Ordering::Greater));
    }

    #[test]
    fn limits() {
        let l2 = ln2(64);
        let s100 = sigma(100, 64).unwrap();
        assert!(s100.sub(&l2).hi() < rat(1, 20));
        assert!(s100.compare(&l2) == Some(std::cmp::Ordering::Greater));
    }
}
