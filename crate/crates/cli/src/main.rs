use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use multibrot_cli::render::{render, RenderSpec};
use multibrot_core::capacity::{self, fekete::fekete_oracle_with};
use multibrot_core::certificates::{real_pcf_driver, quadratic_parabolic_driver, higher_degree_parabolic_driver, CertificateReport};
use multibrot_core::exact::rational::{format_rational, parse_rational};
use multibrot_core::par::Exec;
use multibrot_core::parabolic::{milnor_audit, solve_parabolic};
use multibrot_core::Error;
use serde_json::{json, Value};

const BITS_VAR: &str = "MULTIBROT_BITS";
const DEFAULT_BITS: u32 = 128;

#[derive(Parser)]
#[command(name = "multibrot", version, about = "Totally real parabolic and PCF parameters of z^d + c")]
struct Cli {
    /// Seed for randomized restarts.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Run data-parallel loops on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Re-derive a classification theorem and print its certificate.
    Verify(VerifyArgs),
    #[command(subcommand)]
    Parabolic(ParabolicCmd),
    #[command(subcommand)]
    Capacity(CapacityCmd),
    /// Escape-time image of M_d (binary PPM, or PNG for a .png path).
    Render(RenderArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    Thm11,
    Thm12,
    Thm13,
}

#[derive(Args)]
struct VerifyArgs {
    theorem: Theorem,
    #[arg(long)]
    d_min: Option<u32>,
    #[arg(long)]
    d_max: Option<u32>,
    #[arg(long, default_value_t = 3)]
    n_max: u32,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ParabolicCmd {
    /// Parameters with a cycle of period n and multiplier lambda.
    Solve {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        lambda: i64,
    },
}

#[derive(Subcommand)]
enum CapacityCmd {
    /// Certified n-th diameter of [a, b].
    Dn {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        bits: Option<u32>,
    },
    /// Numerical Fekete points of [a, b].
    Fekete {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true, default_value_t = -1.0)]
        a: f64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 1.0)]
        b: f64,
        #[arg(long, default_value_t = 8)]
        restarts: usize,
    },
    /// Certified comparison of sigma(d) tau(n) with 1.
    Ineq41 {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        bits: Option<u32>,
    },
}

#[derive(Args)]
struct RenderArgs {
    #[arg(long)]
    d: u32,
    /// Window center as re,im.
    #[arg(long, allow_hyphen_values = true)]
    center: Option<String>,
    #[arg(long)]
    width: Option<f64>,
    /// Resolution as WxH.
    #[arg(long, default_value = "800x800")]
    res: String,
    #[arg(long, default_value_t = 2000)]
    max_iter: u32,
    #[arg(long, default_value_t = 0)]
    palette: u8,
    #[arg(long)]
    out: PathBuf,
}

enum Failure {
    Usage(String),
    Cap(String),
    Runtime(String),
    Verdict,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InstanceTooLarge(m) => Failure::Cap(m),
            Error::InvalidArgument(m) => Failure::Usage(m),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

fn bits(flag: Option<u32>) -> Result<u32, Failure> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BITS_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{BITS_VAR} must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_BITS),
    }
}

fn emit(value: &Value, out: Option<&PathBuf>) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("serializable") + "\n";
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Runtime(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn report(r: CertificateReport, out: Option<&PathBuf>) -> Result<(), Failure> {
    emit(&serde_json::to_value(&r).expect("serializable"), out)?;
    if r.passed() {
        Ok(())
    } else {
        Err(Failure::Verdict)
    }
}

fn parse_pair(s: &str, sep: char) -> Result<(String, String), Failure> {
    s.split_once(sep)
        .map(|(a, b)| (a.trim().to_string(), b.trim().to_string()))
        .ok_or_else(|| Failure::Usage(format!("expected two values separated by {sep:?}, got {s:?}")))
}

fn run(cli: Cli) -> Result<(), Failure> {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::Parallel };
    match cli.command {
        Command::Verify(v) => {
            let r = match v.theorem {
                Theorem::Thm11 => real_pcf_driver(v.d_min.unwrap_or(2), v.d_max.unwrap_or(9))?,
                Theorem::Thm12 => quadratic_parabolic_driver()?,
                Theorem::Thm13 => higher_degree_parabolic_driver(v.d_min.unwrap_or(3), v.d_max.unwrap_or(10), v.n_max)?,
            };
            report(r, v.out.as_ref())
        }
        Command::Parabolic(ParabolicCmd::Solve { d, n, lambda }) => {
            let cands = solve_parabolic(d, n, lambda)?;
            let audit = milnor_audit(&cands);
            emit(
                &json!({ "d": d, "n": n, "lambda": lambda, "candidates": cands, "milnor_audit": audit }),
                None,
            )
        }
        Command::Capacity(CapacityCmd::Dn { a, b, n, bits: flag }) => {
            let bits = bits(flag)?;
            let (a, b) = (parse_rational(&a)?, parse_rational(&b)?);
            let enc = capacity::dn_interval(&a, &b, n, bits)?;
            let table = capacity::d_table(n)?;
            emit(
                &json!({
                    "a": format_rational(&a),
                    "b": format_rational(&b),
                    "n": n,
                    "bits": bits,
                    "D_n": format_rational(table.get(n).unwrap()),
                    "enclosure": enc,
                }),
                None,
            )
        }
        Command::Capacity(CapacityCmd::Fekete { n, a, b, restarts }) => {
            let res = fekete_oracle_with(a, b, n, restarts, cli.seed, exec)?;
            emit(&json!({ "a": a, "b": b, "n": n, "seed": cli.seed, "result": res }), None)
        }
        Command::Capacity(CapacityCmd::Ineq41 { d, n, bits: flag }) => {
            let res = capacity::capacity_inequality(d, n, bits(flag)?)?;
            emit(&serde_json::to_value(res).expect("serializable"), None)
        }
        Command::Render(r) => {
            let (w, h) = parse_pair(&r.res, 'x')?;
            let parse_usize = |s: &str| s.parse::<usize>().map_err(|_| Failure::Usage(format!("bad resolution {s:?}")));
            let mut spec = RenderSpec::overview(r.d, parse_usize(&w)?, parse_usize(&h)?, r.max_iter);
            if let Some(c) = r.center {
                let (re, im) = parse_pair(&c, ',')?;
                let num = |s: &str| s.parse::<f64>().map_err(|_| Failure::Usage(format!("bad center {s:?}")));
                spec.center_re = num(&re)?;
                spec.center_im = num(&im)?;
            }
            if let Some(wd) = r.width {
                spec.width = wd;
            }
            spec.palette = r.palette;
            spec.validate().map_err(Failure::Usage)?;
            render(&spec, exec)
                .save(&r.out)
                .map_err(|e| Failure::Runtime(format!("{}: {e}", r.out.display())))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verdict) => ExitCode::from(1),
        Err(Failure::Runtime(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}
