//! End-to-end acceptance checks. Each test prints one PASS/FAIL line
//! (visible with `--nocapture`) and fails when its criterion is not met.

use std::cmp::Ordering;
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use multibrot_cli::render::{escape_map, real_axis_span, render, RenderSpec};
use multibrot_core::algebraic::{arc_unit_images, root_valuations};
use multibrot_core::capacity::{d_table, discriminant_upper_bound, dn_interval, fekete_oracle, capacity_inequality, Verdict};
use multibrot_core::certificates::{cubic_residue_certificate, leading_coeff_check, valuation_check, LeadingCoeffVerdict};
use multibrot_core::dynamics::{attracting_cycle_probe, constants, lambda_to_x, real_slice, x_to_c, x_to_c_enclosure};
use multibrot_core::exact::rational::{int, rat, to_f64};
use multibrot_core::exact::sturm::count_closed;
use multibrot_core::exact::valuation::{int_valuation, poly_valuation};
use multibrot_core::exact::{isolate_real_roots, sturm_count, Bound, IntPoly};
use multibrot_core::par::Exec;
use multibrot_core::parabolic::{milnor_audit, solve_parabolic};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use serde_json::{json, Value};

fn report(id: u32, name: &str, ok: bool, elapsed: Duration, limit: Duration) {
    let within = elapsed <= limit;
    let verdict = if ok && within { "PASS" } else { "FAIL" };
    println!("criterion {id:>2} {verdict}  {name} ({:.2}s, limit {}s)", elapsed.as_secs_f64(), limit.as_secs());
    assert!(ok, "criterion {id} failed: {name}");
    assert!(within, "criterion {id} exceeded its time limit");
}

fn cli(args: &[&str]) -> (i32, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_multibrot")).args(args).output().expect("run multibrot");
    let json = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (out.status.code().unwrap_or(-1), json)
}

fn witness(report: &Value, claim: &str) -> Value {
    report["steps"]
        .as_array()
        .and_then(|steps| steps.iter().find(|s| s["claim"].as_str().is_some_and(|c| c.starts_with(claim))))
        .map(|s| s["witness"].clone())
        .unwrap_or(Value::Null)
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

#[test]
fn criterion_01_quadratic_parabolic_set() {
    let t = Instant::now();
    let (code, r) = cli(&["verify", "thm12"]);
    let params = witness(&r, "totally real parabolic parameters for d = 2")["parameters"].clone();
    let ok = code == 0 && r["verdict"] == "pass" && params == json!(["-7/4", "-5/4", "-3/4", "1/4"]);
    report(1, "verify thm12 gives exactly {1/4, -3/4, -5/4, -7/4}", ok, t.elapsed(), secs(60));
}

#[test]
fn criterion_02_higher_degree_parabolic_sets() {
    let t = Instant::now();
    let (code, r) = cli(&["verify", "thm13", "--d-min", "3", "--d-max", "10", "--n-max", "3"]);
    let params = |d: u32| witness(&r, &format!("totally real parabolic parameters for d = {d}"))["parameters"].clone();
    let three = params(3);
    let mut ok = code == 0 && r["verdict"] == "pass";
    ok &= three.as_array().is_some_and(|a| a.len() == 2 && a.iter().all(|x| x["minpoly"] == "27T^2 - 4"));
    if let Some(a) = three.as_array() {
        let target = 2.0 * 3f64.sqrt() / 9.0;
        let mut approx: Vec<f64> = a.iter().map(|x| x["enclosure"]["approx"].as_f64().unwrap_or(f64::NAN)).collect();
        approx.sort_by(f64::total_cmp);
        ok &= approx.len() == 2 && (approx[0] + target).abs() < 1e-12 && (approx[1] - target).abs() < 1e-12;
    }
    for d in 4..=10 {
        ok &= params(d).as_array().is_some_and(|a| a.is_empty());
    }
    let table = witness(&r, "d = 4, degree 3: Delta = 5 * 2^16 mod 2^19");
    ok &= table.as_array().is_some_and(|rows| rows.len() == 16);
    report(2, "verify thm13 for 3 <= d <= 10 gives {+-2 sqrt3/9} and then empty sets", ok, t.elapsed(), secs(600));
}

#[test]
fn criterion_03_pcf_table() {
    let t = Instant::now();
    let (code, r) = cli(&["verify", "thm11", "--d-min", "2", "--d-max", "9"]);
    let mut ok = code == 0 && r["verdict"] == "pass";
    for d in 2..=9u32 {
        let expect = match d {
            2 => json!(["-2", "-1", "0"]),
            d if d % 2 == 0 => json!(["-1", "0"]),
            _ => json!(["0"]),
        };
        ok &= witness(&r, &format!("real PCF parameters for d = {d}"))["pcf"] == expect;
    }
    report(3, "verify thm11 for 2 <= d <= 9 reproduces the PCF table", ok, t.elapsed(), secs(30));
}

#[test]
fn criterion_04_residue_certificate() {
    let t = Instant::now();
    let r = cubic_residue_certificate();
    let v = serde_json::to_value(&r).unwrap();
    let rows = witness(&v, "Delta = 5 * 2^16 mod 2^19");
    let target = 5u64 << 16;
    let ok = r.passed()
        && rows.as_array().is_some_and(|rows| {
            rows.len() == 16 && rows.iter().all(|row| row["delta_mod"].as_u64() == Some(target))
        });
    report(4, "all 16 residue classes give Delta = 5 * 2^16 mod 2^19", ok, t.elapsed(), secs(1));
}

#[test]
fn criterion_05_certified_corners() {
    let t = Instant::now();
    let mut ok = true;
    for (d, n, want) in [(6, 3, Verdict::Fails), (4, 4, Verdict::Fails), (4, 3, Verdict::Holds)] {
        let r = capacity_inequality(d, n, 64).unwrap();
        let side = if want == Verdict::Fails { Ordering::Less } else { Ordering::Greater };
        ok &= r.verdict == want && r.product_enclosure.bits() <= 256;
        ok &= r.product_enclosure.compare_rational(&int(1)) == Some(side);
    }
    let bound = discriminant_upper_bound(&BigInt::from(256), 4, 3, 256).unwrap();
    ok &= bound.compare_rational(&int(1 << 17)) == Some(Ordering::Less);
    report(5, "sigma(6)tau(3) < 1, sigma(4)tau(4) < 1, sigma(4)tau(3) > 1, 2^28(2^(1/3)-1)^6 < 2^17", ok, t.elapsed(), secs(1));
}

#[test]
fn criterion_06_capacity_agreement() {
    let t = Instant::now();
    let table = d_table(8).unwrap();
    let mut ok = table.get(3) == Some(&rat(1, 16)) && table.get(4) == Some(&rat(1, 3125));
    for n in 2..=8 {
        let oracle = fekete_oracle(-1.0, 1.0, n, 8, 2024).unwrap();
        let enc = dn_interval(&int(-1), &int(1), n, 128).unwrap();
        ok &= (oracle.value - to_f64(&enc.midpoint())).abs() <= 1e-6;
    }
    report(6, "Fekete oracle matches certified n-th diameters for n = 2..8", ok, t.elapsed(), secs(30));
}

#[test]
fn criterion_07_period_doubling() {
    let t = Instant::now();
    let mut ok = true;
    for d in [2u32, 4, 6] {
        for (p, q) in [(1, 4), (1, 2), (3, 4)] {
            let lambda = rat(p, q);
            let x = lambda_to_x(d, &lambda).unwrap();
            let c = x_to_c_enclosure(d, &x.enclosure(128).unwrap()).unwrap();
            match attracting_cycle_probe(d, c.mid_f64(), 200_000) {
                Some(probe) => ok &= probe.period == 2 && (probe.multiplier - p as f64 / q as f64).abs() < 1e-6,
                None => ok = false,
            }
        }
        ok &= x_to_c(d, &int(0)).unwrap().as_rational() == Some(int(-1));
        let gamma = constants(d).unwrap().gamma;
        let end = x_to_c(d, &int(1)).unwrap();
        ok &= end.minpoly() == gamma.minpoly() && end.cmp_real(&gamma) == Ordering::Equal;
    }
    report(7, "period-2 cycles carry the prescribed multiplier; endpoints -1 and gamma(d)", ok, t.elapsed(), secs(30));
}

#[test]
fn criterion_08_arithmetic_audit() {
    let t = Instant::now();
    let (mut checked, mut passed) = (0usize, 0usize);
    for d in 2..=4u32 {
        for n in 1..=3 {
            for lambda in [1, -1] {
                let cands = solve_parabolic(d, n, lambda).unwrap();
                let audit = milnor_audit(&cands);
                for c in &cands {
                    let p = c.parameter.minpoly();
                    let lead = leading_coeff_check(p, d as u64).verdict != LeadingCoeffVerdict::Fail;
                    let val = valuation_check(p, d as u64).pass;
                    let milnor = !audit.failures.iter().any(|f| f.parameter.minpoly() == p);
                    checked += 1;
                    passed += usize::from(lead && val && milnor);
                }
            }
        }
    }
    let ok = checked > 0 && passed == checked;
    report(8, &format!("{passed}/{checked} parabolic candidates pass the Milnor and valuation audits"), ok, t.elapsed(), secs(120));
}

#[test]
fn criterion_09_renderer() {
    let t = Instant::now();
    let mut ok = true;
    for d in [2, 3, 4] {
        let spec = RenderSpec::overview(d, 800, 800, 2000);
        let map = escape_map(&spec, Exec::Parallel);
        let (lo, hi) = real_slice(d).unwrap();
        match real_axis_span(&spec, &map) {
            Some((a, b)) => {
                ok &= (a - lo.to_f64()).abs() <= spec.pixel_size() && (b - hi.to_f64()).abs() <= spec.pixel_size();
            }
            None => ok = false,
        }
    }
    let golden_path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", "m2_96x64.ppm"].iter().collect();
    let golden = std::fs::read(&golden_path).unwrap_or_default();
    let spec = RenderSpec::overview(2, 96, 64, 200);
    ok &= render(&spec, Exec::Parallel).to_ppm() == golden;
    ok &= render(&spec, Exec::Sequential).to_ppm() == golden;
    report(9, "real-axis interior matches the real slice for d = 2, 3, 4; golden image is byte-identical", ok, t.elapsed(), secs(60));
}

fn small_poly(max_deg: usize, range: i64) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-range..=range, 2..=max_deg + 1)
        .prop_map(|c| IntPoly::from_i64(&c))
        .prop_filter("degree >= 1", |p| p.deg() >= 1)
}

#[test]
fn criterion_10_property_suites() {
    let t = Instant::now();
    let primes = [2u64, 3, 5, 7];

    let gauss = TestRunner::new(Config::with_cases(1000)).run(&(small_poly(6, 60), small_poly(6, 60), 0usize..4), |(f, g, i)| {
        let p = primes[i];
        prop_assert_eq!(
            poly_valuation(&(&f * &g), p).unwrap(),
            poly_valuation(&f, p).unwrap() + poly_valuation(&g, p).unwrap()
        );
        Ok(())
    });

    let newton = TestRunner::new(Config::with_cases(500)).run(&(small_poly(7, 200), 0usize..4), |(f, i)| {
        prop_assume!(!f.coeff(0).is_zero());
        let p = primes[i];
        let sum: BigRational = root_valuations(&f, p).unwrap().iter().sum();
        let expect = int_valuation(&f.coeff(0), p).unwrap() as i64 - int_valuation(f.leading().unwrap(), p).unwrap() as i64;
        prop_assert_eq!(sum, int(expect));
        Ok(())
    });

    let sturm = TestRunner::new(Config::with_cases(500)).run(&small_poly(8, 30), |f| {
        let sf = f.square_free_part();
        let ivs = isolate_real_roots(&sf).unwrap();
        prop_assert_eq!(ivs.len(), sturm_count(&sf, &Bound::NegInf, &Bound::PosInf).unwrap());
        for iv in &ivs {
            prop_assert_eq!(count_closed(&sf, &iv.lo, &iv.hi).unwrap(), 1);
        }
        Ok(())
    });

    let stable: Vec<BigRational> = vec![int(-2), int(-1), int(0)];
    let arcs = (4..=200u64).all(|b| {
        arc_unit_images(b, Exec::Parallel).iter().map(|a| a.as_rational()).collect::<Option<Vec<_>>>() == Some(stable.clone())
    });

    let ok = gauss.is_ok() && newton.is_ok() && sturm.is_ok() && arcs;
    report(10, "Gauss content, Newton polygon sums, Sturm isolation and arc stabilization", ok, t.elapsed(), secs(120));
}
