use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;
use trivlim_core::classification::{
    brill_noether_rho, is_globally_generated, is_limit_of_trivial, simple_decomposition, split_criterion,
};
use trivlim_core::io::{divisor_to_json, parse_class, parse_curve, parse_divisor, parse_function};
use trivlim_core::pairing::{koszul_pair, u2e_functional, Differential};
use trivlim_core::plane::prop4_certificate;
use trivlim_core::riemann_roch::{function_divisor, h0};
use trivlim_core::survey::{run_survey, SurveyConfig, DEFAULT_P, DEFAULT_TRIALS};
use trivlim_core::{Curve, Error};

/// Worker threads for `survey`.
const WORKERS_ENV: &str = "TRIVLIM_WORKERS";

#[derive(Parser)]
#[command(name = "trivlim", version, about = "Line bundles and rank-2 limits on hyperelliptic curves")]
struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct CurveArg {
    /// Curve as {"p": P, "f": [f0, f1, ...]}.
    #[arg(long)]
    curve: String,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of L(D).
    H0 {
        #[command(flatten)]
        curve: CurveArg,
        /// Divisor as [[place, mult], ...], place = [x, y] or "inf".
        #[arg(long)]
        divisor: String,
    },
    /// Divisor of a function.
    DivisorOf {
        #[command(flatten)]
        curve: CurveArg,
        /// Function as {"a": [...], "b": [...], "c": [...]}.
        #[arg(long)]
        function: String,
    },
    /// Write L = k H + D with D simple.
    Decompose {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long)]
        divisor: String,
    },
    /// Whether |L| is base point free.
    Gg {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long)]
        divisor: String,
    },
    /// Whether L + L^-1 is a limit of the trivial bundle.
    ClassifyLimit {
        #[command(flatten)]
        curve: CurveArg,
        /// Class as {"u": [...], "v": [...], "degree": d} or H^k.
        #[arg(long)]
        class: String,
    },
    /// Whether h^1(L^2) = 0, so that every extension of L^-1 by L splits.
    ExtSplit {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long)]
        class: String,
    },
    /// Pairing of the Koszul class of (s, t) with w dx/y.
    KoszulPair {
        #[command(flatten)]
        curve: CurveArg,
        /// Divisor D_L of the line bundle.
        #[arg(long)]
        divisor: String,
        #[arg(long)]
        s: String,
        #[arg(long)]
        t: String,
        #[arg(long)]
        w: String,
    },
    /// The functional u^2 e against a basis of H^0(K L^-2).
    U2e {
        #[command(flatten)]
        curve: CurveArg,
        #[arg(long)]
        divisor: String,
        #[arg(long)]
        s: String,
        #[arg(long)]
        t: String,
        #[arg(long)]
        u: String,
    },
    /// Dimension-chase certificate for smooth plane curves.
    Prop4 {
        #[arg(long)]
        d: i64,
        #[arg(long)]
        k: i64,
    },
    /// Brill-Noether number g - (r+1)(r+g-d).
    Rho {
        #[arg(long)]
        g: i64,
        #[arg(long)]
        r: i64,
        #[arg(long)]
        d: i64,
    },
    /// Randomized sweep of the invariants.
    Survey {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_P)]
        p: u64,
        /// Comma-separated genera.
        #[arg(long, value_delimiter = ',', default_values_t = [2, 3, 4])]
        genera: Vec<i64>,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidCurve(_) | Error::NotOnCurve(_) | Error::BadModulus(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Domain(e.to_string()),
        }
    }
}

fn curve(arg: &CurveArg) -> Result<Curve, Failure> {
    Ok(parse_curve(&arg.curve)?)
}

fn run(cli: Cli) -> Result<String, Failure> {
    let json_out = cli.json;
    let out = match cli.command {
        Command::H0 { curve: c, divisor } => {
            let c = curve(&c)?;
            let d = parse_divisor(&c, &divisor)?;
            h0(&c, &d)?.to_string()
        }
        Command::DivisorOf { curve: c, function } => {
            let c = curve(&c)?;
            let h = parse_function(&c, &function)?;
            let d = function_divisor(&c, &h)?;
            if json_out {
                divisor_to_json(&d).to_string()
            } else {
                d.to_string()
            }
        }
        Command::Decompose { curve: c, divisor } => {
            let c = curve(&c)?;
            let dec = simple_decomposition(&c, &parse_divisor(&c, &divisor)?)?;
            if json_out {
                json!({ "k": dec.k, "d": divisor_to_json(&dec.d), "class": dec.class }).to_string()
            } else {
                format!("k = {}, D = {}", dec.k, dec.d)
            }
        }
        Command::Gg { curve: c, divisor } => {
            let c = curve(&c)?;
            let gg = is_globally_generated(&c, &parse_divisor(&c, &divisor)?)?;
            json!({ "globally_generated": gg }).to_string()
        }
        Command::ClassifyLimit { curve: c, class } => {
            let c = curve(&c)?;
            let v = is_limit_of_trivial(&c, &parse_class(&c, &class)?)?;
            serde_json::to_string(&v).expect("plain data")
        }
        Command::ExtSplit { curve: c, class } => {
            let c = curve(&c)?;
            let split = split_criterion(&c, &parse_class(&c, &class)?)?;
            json!({ "h1_of_square_vanishes": split }).to_string()
        }
        Command::KoszulPair { curve: c, divisor, s, t, w } => {
            let c = curve(&c)?;
            let d = parse_divisor(&c, &divisor)?;
            let (s, t) = (parse_function(&c, &s)?, parse_function(&c, &t)?);
            let w = Differential::new(parse_function(&c, &w)?);
            koszul_pair(&c, &d, &s, &t, &w)?.to_string()
        }
        Command::U2e { curve: c, divisor, s, t, u } => {
            let c = curve(&c)?;
            let d = parse_divisor(&c, &divisor)?;
            let (s, t, u) = (parse_function(&c, &s)?, parse_function(&c, &t)?, parse_function(&c, &u)?);
            let r = u2e_functional(&c, &d, &s, &t, &u)?;
            serde_json::to_string(&r).expect("plain data")
        }
        Command::Prop4 { d, k } => {
            let cert = prop4_certificate(d, k)?;
            if json_out {
                serde_json::to_string(&cert).expect("plain data")
            } else {
                cert.to_string()
            }
        }
        Command::Rho { g, r, d } => {
            if g < 0 || r < 0 {
                return Err(Failure::Usage(format!("need g >= 0 and r >= 0, got g = {g}, r = {r}")));
            }
            brill_noether_rho(g, r, d).to_string()
        }
        Command::Survey { seed, trials, p, genera } => {
            let workers = match std::env::var(WORKERS_ENV) {
                Ok(v) => Some(
                    v.parse::<usize>()
                        .map_err(|_| Failure::Usage(format!("{WORKERS_ENV}={v:?} is not a count")))?,
                ),
                Err(_) => None,
            };
            let cfg = SurveyConfig { seed, p, genera, trials, workers };
            let report = run_survey(&cfg)?;
            let text = if json_out {
                serde_json::to_string(&report).expect("plain data")
            } else {
                report.to_string()
            };
            if report.total_violations() > 0 {
                println!("{text}");
                return Err(Failure::Domain(format!("{} invariant violations", report.total_violations())));
            }
            text
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
