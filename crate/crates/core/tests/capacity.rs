use std::cmp::Ordering;

use multibrot_core::capacity::{d_table, dn_interval, fekete_oracle, capacity_inequality, sigma, tau, Verdict};
use multibrot_core::exact::dyadic::ln2;
use multibrot_core::exact::rational::{int, rat};
use multibrot_core::exact::{discriminant, IntPoly};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

type RPoly = Vec<BigRational>;

fn mul_x(p: &RPoly) -> RPoly {
    let mut out = vec![BigRational::zero()];
    out.extend(p.iter().cloned());
    out
}

fn lin(a: &RPoly, x: &BigRational, b: &RPoly, y: &BigRational) -> RPoly {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() * x + b.get(i).cloned().unwrap_or_default() * y)
        .collect()
}

fn legendre(n: usize) -> RPoly {
    let mut prev = vec![BigRational::one()];
    let mut cur = vec![BigRational::zero(), BigRational::one()];
    if n == 0 {
        return prev;
    }
    for k in 1..n {
        let k = k as i64;
        let next = lin(&mul_x(&cur), &rat(2 * k + 1, k + 1), &prev, &rat(-k, k + 1));
        prev = cur;
        cur = next;
    }
    cur
}

/// `(1 - x^2) P'_(n-1)(x)` cleared to integers: its roots are the Fekete
/// points of `[-1, 1]`.
fn fekete_polynomial(n: usize) -> IntPoly {
    let p = legendre(n - 1);
    let dp: RPoly = (1..p.len()).map(|i| &p[i] * BigInt::from(i)).collect();
    let x2 = mul_x(&mul_x(&dp));
    let q = lin(&dp, &int(1), &x2, &int(-1));
    let l = q.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    IntPoly::new(q.iter().map(|c| (c * &l).to_integer()).collect())
}

#[test]
fn table_matches_fekete_discriminants() {
    let table = d_table(14).unwrap();
    assert_eq!(table.get(3), Some(&rat(1, 16)));
    assert_eq!(table.get(4), Some(&rat(1, 3125)));
    for n in 2..=14 {
        let q = fekete_polynomial(n);
        assert_eq!(q.deg(), n);
        let lc = BigRational::from_integer(q.leading().unwrap().clone());
        let prod = BigRational::from_integer(discriminant(&q).unwrap()) / num_traits::pow(lc, 2 * (n - 1));
        let dn = prod / BigRational::from_integer(BigInt::one() << (n * (n - 1)));
        assert_eq!(table.get(n), Some(&dn), "n = {n}");
    }
}

#[test]
fn oracle_agrees_with_enclosures() {
    for n in 2..=8 {
        let res = fekete_oracle(-1.0, 1.0, n, 4, 1).unwrap();
        let enc = dn_interval(&int(-1), &int(1), n, 128).unwrap();
        assert!((res.value - enc.mid_f64()).abs() < 1e-6, "n={n}: {} vs {}", res.value, enc.mid_f64());
    }
}

#[test]
fn diameters_decrease() {
    let vals: Vec<_> = (2..=50).map(|n| dn_interval(&int(0), &int(1), n, 96).unwrap()).collect();
    for w in vals.windows(2) {
        assert_eq!(w[1].compare(&w[0]), Some(Ordering::Less));
    }
    for n in 2..=50 {
        assert_eq!(vals[n - 2].compare_rational(&rat(1, 4)), Some(Ordering::Greater));
    }
}

#[test]
fn limits() {
    let quarter = rat(1, 4);
    let gaps: Vec<_> = [50, 100, 200].iter().map(|&n| tau(n, 64).unwrap().hi() - &quarter).collect();
    assert!(gaps[2] < rat(1, 50));
    assert!(gaps[0] > gaps[1] && gaps[1] > gaps[2]);
    let s = sigma(100, 64).unwrap();
    let gap = s.sub(&ln2(64));
    assert!(gap.hi() < rat(1, 20));
    assert!(gap.lo() > BigRational::zero());
}

#[test]
fn scaling_covariance() {
    for (a, b) in [(rat(-1, 3), rat(2, 7)), (int(5), int(9)), (int(-4), int(-1))] {
        for n in [2, 5, 9] {
            let unit = dn_interval(&int(0), &int(1), n, 80).unwrap();
            assert_eq!(dn_interval(&a, &b, n, 80).unwrap(), unit.mul_rational(&(&b - &a)));
        }
    }
}

#[test]
fn corner_inequalities() {
    for (d, n, v) in [(6, 3, Verdict::Fails), (4, 4, Verdict::Fails), (4, 3, Verdict::Holds)] {
        let r = capacity_inequality(d, n, 64).unwrap();
        assert_eq!(r.verdict, v, "({d}, {n})");
        assert!(r.product_enclosure.bits() <= 256);
    }
}
