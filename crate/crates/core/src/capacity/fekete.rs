//! Numerical Fekete configurations on a real interval.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::par::Exec;
use crate::Error;

#[derive(Clone, Debug, Serialize)]
pub struct FeketeResult {
    pub points: Vec<f64>,
    /// `sum_{i<j} ln|x_i - x_j|` at the best configuration.
    pub log_product: f64,
    /// `(prod_{i<j} |x_i - x_j|)^(2/(n(n-1)))`.
    pub value: f64,
    pub restarts: usize,
}

const MAX_SWEEPS: usize = 20_000;
const TOL: f64 = 1e-15;

/// Maximizes the product of pairwise distances of `n` points in `[a, b]`
/// by coordinate ascent. The first start is the Chebyshev-Lobatto grid,
/// the other `restarts` are seeded random perturbations of it.
pub fn fekete_oracle(a: f64, b: f64, n: usize, restarts: usize, seed: u64) -> Result<FeketeResult, Error> {
    fekete_oracle_with(a, b, n, restarts, seed, Exec::default())
}

pub fn fekete_oracle_with(
    a: f64,
    b: f64,
    n: usize,
    restarts: usize,
    seed: u64,
    exec: Exec,
) -> Result<FeketeResult, Error> {
    if n < 2 || a.partial_cmp(&b) != Some(std::cmp::Ordering::Less) || !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidArgument(format!("bad Fekete request: n={n}, [{a}, {b}]")));
    }
    let base = lobatto(a, b, n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut starts = vec![base.clone()];
    let gap = (b - a) / (n as f64 * 4.0);
    for _ in 0..restarts {
        let mut x: Vec<f64> = base
            .iter()
            .map(|&v| (v + rng.gen_range(-gap..gap)).clamp(a, b))
            .collect();
        x.sort_by(f64::total_cmp);
        x.dedup();
        while x.len() < n {
            x.push(rng.gen_range(a..b));
            x.sort_by(f64::total_cmp);
            x.dedup();
        }
        starts.push(x);
    }
    let runs = exec.map(starts, |x| {
        let x = ascend(x, a, b);
        let l = log_product(&x);
        (x, l)
    });
    let (points, log_product) = runs
        .into_iter()
        .max_by(|p, q| p.1.total_cmp(&q.1))
        .unwrap();
    let value = (2.0 * log_product / (n * (n - 1)) as f64).exp();
    Ok(FeketeResult {
        points,
        log_product,
        value,
        restarts,
    })
}

fn lobatto(a: f64, b: f64, n: usize) -> Vec<f64> {
    let (m, h) = ((a + b) / 2.0, (b - a) / 2.0);
    (0..n)
        .map(|k| m - h * (std::f64::consts::PI * k as f64 / (n - 1) as f64).cos())
        .collect()
}

fn log_product(x: &[f64]) -> f64 {
    let mut s = 0.0;
    for i in 0..x.len() {
        for j in i + 1..x.len() {
            s += (x[j] - x[i]).abs().ln();
        }
    }
    s
}

fn ascend(mut x: Vec<f64>, a: f64, b: f64) -> Vec<f64> {
    let n = x.len();
    x[0] = a;
    x[n - 1] = b;
    for _ in 0..MAX_SWEEPS {
        let mut moved: f64 = 0.0;
        for i in 1..n - 1 {
            let new = best_position(&x, i);
            moved = moved.max((new - x[i]).abs());
            x[i] = new;
        }
        if moved <= TOL * (b - a) {
            break;
        }
    }
    x
}

/// The zero of `sum_{j != i} 1/(t - x_j)` between the neighbours of `x_i`,
/// where the log-product is concave in `t`.
fn best_position(x: &[f64], i: usize) -> f64 {
    let (mut lo, mut hi) = (x[i - 1], x[i + 1]);
    let grad = |t: f64| -> (f64, f64) {
        let mut g = 0.0;
        let mut h = 0.0;
        for (j, &xj) in x.iter().enumerate() {
            if j != i {
                let r = 1.0 / (t - xj);
                g += r;
                h -= r * r;
            }
        }
        (g, h)
    };
    let mut t = x[i].clamp(lo, hi);
    if t <= lo || t >= hi {
        t = 0.5 * (lo + hi);
    }
    for _ in 0..200 {
        let (g, h) = grad(t);
        if g > 0.0 {
            lo = t;
        } else {
            hi = t;
        }
        let newton = t - g / h;
        let next = if newton > lo && newton < hi { newton } else { 0.5 * (lo + hi) };
        if (next - t).abs() <= 1e-17 * (1.0 + t.abs()) || hi - lo <= f64::EPSILON * (1.0 + t.abs()) {
            return next;
        }
        t = next;
    }
    t
}
