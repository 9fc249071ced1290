use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use pnil_cli::io;
use pnil_cli::suites::{run_suite, Params};
use pnil_core::constructions::{sl2_baby_verma, sl2_simple, w_module, KroneckerRep};
use pnil_core::field::Field;
use pnil_core::homological::{ar_sequence, component_slice, resolution, syzygy};
use pnil_core::jordan::{constancy_certificates, is_eip, is_ekp};
use pnil_core::{F2, F3, F5, F7};
use serde_json::json;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "pnil", version, about = "Modules over k[x,y]/(x^p,y^p): constructions, Jordan types, Heller shifts")]
struct Cli {
    /// Characteristic (2, 3, 5 or 7).
    #[arg(long, global = true)]
    p: Option<u32>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest extension degree for closed-point scans.
    #[arg(long, global = true, default_value_t = 3)]
    ext_degree: usize,
    /// Output file; standard output when omitted.
    #[arg(long, global = true)]
    out: Option<String>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Exit with status 3 when a check is inconclusive within its window.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite.
    Suite {
        name: String,
        /// Largest n in the w-jordan table.
        #[arg(long)]
        n_max: Option<usize>,
        /// Random cases per property battery.
        #[arg(long, default_value_t = 100)]
        cases: usize,
    },
    /// Emit a module as JSON.
    Make {
        #[command(subcommand)]
        what: Make,
    },
    /// Generic Jordan type with constancy, EIP and EKP certificates.
    Jordan { file: String },
    /// Heller shift Ω^n.
    Syzygy {
        file: String,
        #[arg(long, allow_hyphen_values = true)]
        shift: i64,
    },
    /// Minimal graded resolution.
    Resolution {
        file: String,
        #[arg(long, default_value_t = 3)]
        len: usize,
    },
    /// Almost split sequence ending in the module.
    Ar { file: String },
    /// Window of the AR component containing a quasi-simple module.
    Slice {
        file: String,
        #[arg(long, default_value_t = 1)]
        width: i64,
        #[arg(long, default_value_t = 2)]
        height: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KroneckerKind {
    Preinjective,
    Preprojective,
    Regular,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Sl2Kind {
    Simple,
    Verma,
}

#[derive(Subcommand)]
enum Make {
    /// W_{n,d}.
    W {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
    },
    /// Image of a Kronecker representation.
    Kronecker {
        #[arg(long, value_enum)]
        kind: KroneckerKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        lambda: u64,
    },
    /// Restricted sl(2)-module.
    Sl2 {
        #[arg(long, value_enum)]
        kind: Sl2Kind,
        #[arg(long, default_value_t = 0)]
        lambda: i64,
    },
}

macro_rules! with_field {
    ($p:expr, $F:ident => $body:expr) => {
        match $p {
            2 => {
                type $F = F2;
                $body
            }
            3 => {
                type $F = F3;
                $body
            }
            5 => {
                type $F = F5;
                $body
            }
            7 => {
                type $F = F7;
                $body
            }
            other => Err(anyhow!("unsupported characteristic {other} (use 2, 3, 5 or 7)")),
        }
    };
}

/// Result of a command: text to emit and the exit status.
struct Outcome {
    text: String,
    code: u8,
}

fn ok(text: String) -> Result<Outcome> {
    Ok(Outcome { text, code: 0 })
}

fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serialisable");
    s.push('\n');
    s
}

/// Characteristic of a module file, checked against `--p`.
fn file_p(cli: &Cli, text: &str) -> Result<u32> {
    let v: serde_json::Value = serde_json::from_str(text).context("invalid JSON")?;
    let p = v.get("p").and_then(|x| x.as_u64()).ok_or_else(|| anyhow!("field `p`: missing or not an integer"))? as u32;
    if let Some(q) = cli.p {
        if q != p {
            bail!("--p {q} does not match the module's p = {p}");
        }
    }
    Ok(p)
}

fn run(cli: &Cli) -> Result<Outcome> {
    let p = cli.p.unwrap_or(3);
    match &cli.command {
        Command::Suite { name, n_max, cases } => {
            let params = Params { p, seed: cli.seed, ext_degree: cli.ext_degree, n_max: *n_max, cases: *cases };
            let report = run_suite(name, &params)?;
            if let Some(path) = &cli.out {
                io::write_text(Some(path), &pretty(&report))?;
            }
            let text = match cli.format.unwrap_or(Format::Table) {
                Format::Json => pretty(&report),
                Format::Table => report.to_table(),
                Format::Dot => bail!("suite reports have no DOT form"),
            };
            let code = if report.has_fail() {
                1
            } else if cli.strict && report.has_inconclusive() {
                3
            } else {
                0
            };
            if cli.out.is_some() && cli.format.is_none() {
                print!("{text}");
                return Ok(Outcome { text: String::new(), code });
            }
            Ok(Outcome { text, code })
        }
        Command::Make { what } => with_field!(p, F => make::<F>(what)),
        Command::Jordan { file } => {
            let text = io::read_text(file)?;
            with_field!(file_p(cli, &text)?, F => {
                let m = io::module_from_str::<F>(&text)?;
                let rep = constancy_certificates(&m);
                let eip = is_eip(&m);
                let ekp = is_ekp(&m);
                match cli.format.unwrap_or(Format::Table) {
                    Format::Json => ok(pretty(&json!({
                        "generic_jordan_type": rep.generic_jordan_type,
                        "constancy": rep,
                        "eip": eip,
                        "ekp": ekp,
                    }))),
                    Format::Table => ok(format!(
                        "dim {}\ngeneric Jordan type {}\nconstant Jordan type {}\nEIP {} (class {})\nEKP {}\n",
                        m.dim(), rep.generic_jordan_type, rep.cjt, eip.eip, eip.class, ekp.verdict
                    )),
                    Format::Dot => bail!("no DOT form for Jordan data"),
                }
            })
        }
        Command::Syzygy { file, shift } => {
            let text = io::read_text(file)?;
            with_field!(file_p(cli, &text)?, F => {
                let m = io::module_from_str::<F>(&text)?;
                ok(io::module_to_string(&syzygy(&m, *shift)))
            })
        }
        Command::Resolution { file, len } => {
            let text = io::read_text(file)?;
            with_field!(file_p(cli, &text)?, F => {
                let m = io::module_from_str::<F>(&text)?;
                ok(pretty(&resolution(&m, *len).to_json()))
            })
        }
        Command::Ar { file } => {
            let text = io::read_text(file)?;
            with_field!(file_p(cli, &text)?, F => {
                let m = io::module_from_str::<F>(&text)?;
                let s = ar_sequence(&m)?;
                ok(pretty(&json!({
                    "tau": s.tau.to_json(),
                    "middle": s.middle.to_json(),
                    "end": s.end.to_json(),
                    "alpha": s.alpha.to_ints(),
                    "beta": s.beta.to_ints(),
                    "checks": s.checks,
                })))
            })
        }
        Command::Slice { file, width, height } => {
            let text = io::read_text(file)?;
            with_field!(file_p(cli, &text)?, F => {
                let m = io::module_from_str::<F>(&text)?;
                let s = component_slice(&m, *width, *height)?;
                match cli.format.unwrap_or(Format::Dot) {
                    Format::Dot => ok(s.to_dot()),
                    Format::Json => ok(pretty(&s)),
                    Format::Table => {
                        let mut t = String::new();
                        for v in &s.vertices {
                            t += &format!("{}\tdim {}\t{}\tEIP {}\tEKP {}\n", v.label, v.dim, v.jordan_type, v.eip, v.ekp);
                        }
                        ok(t)
                    }
                }
            })
        }
    }
}

fn make<F: Field>(what: &Make) -> Result<Outcome> {
    match what {
        Make::W { n, d } => ok(io::module_to_string(&w_module::<F>(*n, *d)?)),
        Make::Kronecker { kind, n, lambda } => {
            let rep = match kind {
                KroneckerKind::Preinjective => KroneckerRep::<F>::preinjective(*n),
                KroneckerKind::Preprojective => KroneckerRep::<F>::preprojective(*n),
                KroneckerKind::Regular => {
                    if *lambda >= F::order() {
                        bail!("lambda {lambda} is not a field element index");
                    }
                    KroneckerRep::<F>::regular(*n, F::from_index(*lambda))
                }
            };
            ok(io::module_to_string(&rep.module()))
        }
        Make::Sl2 { kind, lambda } => {
            let m = match kind {
                Sl2Kind::Simple => sl2_simple::<F>(*lambda)?,
                Sl2Kind::Verma => sl2_baby_verma::<F>(*lambda)?,
            };
            ok(io::sl2_to_string(&m))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            let is_suite = matches!(cli.command, Command::Suite { .. });
            let target = if is_suite { None } else { cli.out.as_deref() };
            if let Err(e) = io::write_text(target, &out.text) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
