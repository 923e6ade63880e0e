use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use strathom::config::FuzzConfig;
use strathom::core::certificate::{certificate, compare, ComparisonVerdict};
use strathom::core::knot_group::peripheral_system;
use strathom::core::KnotDiagram;
use strathom::formats::{self, parse_diagram};
use strathom::{batch, fuzz, json, Error, Format, Result, RunConfig};

#[derive(Parser)]
#[command(name = "strathom", version, about = "Peripheral-system certificates for knot diagrams")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Common {
    /// Input notation.
    #[arg(long, value_enum, default_value_t = Format::Pd)]
    format: Format,
    /// Largest n with an S_n quotient signature (1..=5).
    #[arg(long, default_value_t = 5)]
    quotients: usize,
    /// Apply K random Reidemeister moves before computing.
    #[arg(long, value_name = "K")]
    fuzz: Option<usize>,
    /// Seed for --fuzz.
    #[arg(long, value_name = "S", default_value_t = 0)]
    seed: u64,
    /// Write the main output here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

impl Common {
    fn run_config(&self) -> RunConfig {
        RunConfig {
            format: self.format,
            quotient_depth: self.quotients,
            fuzz: self.fuzz.map(|moves| FuzzConfig { moves, seed: self.seed }),
            out: self.out.clone(),
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Certificate JSON for one diagram (code argument or stdin).
    Invariant {
        #[command(flatten)]
        common: Common,
        code: Option<String>,
    },
    /// Compare two diagrams; --fuzz applies to the second one.
    Compare {
        #[command(flatten)]
        common: Common,
        first: String,
        second: String,
    },
    /// Certify every knot in a table and print the pairwise verdicts.
    Table {
        /// Table file; defaults to $STRATHOM_TABLE, then the bundled table.
        #[arg(long)]
        table: Option<PathBuf>,
        /// Largest n with an S_n quotient signature (1..=5).
        #[arg(long, default_value_t = 5)]
        quotients: usize,
        /// Write per-knot certificates (JSON lines) here.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Print the PD code after a seeded random Reidemeister walk.
    Fuzz {
        #[arg(long, value_enum, default_value_t = Format::Pd)]
        format: Format,
        #[arg(long, value_name = "K", default_value_t = 10)]
        moves: usize,
        #[arg(long, value_name = "S", default_value_t = 0)]
        seed: u64,
        /// Also list the moves on stderr.
        #[arg(long)]
        verbose: bool,
        code: Option<String>,
    },
    /// Wirtinger presentation with meridian and longitude.
    Presentation {
        #[arg(long, value_enum, default_value_t = Format::Pd)]
        format: Format,
        /// Run Tietze simplification first.
        #[arg(long)]
        simplify: bool,
        code: Option<String>,
    },
    /// Strata poset of a filtered complex file.
    Strata { file: PathBuf },
    /// Reduced chains of a poset literal file.
    Chains { file: PathBuf },
}

fn input(code: Option<String>) -> Result<String> {
    match code {
        Some(c) if c != "-" => Ok(c),
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|source| Error::Io { path: "<stdin>".into(), source })?;
            Ok(s)
        }
    }
}

fn read_file(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.clone(), source })
}

fn emit(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|source| Error::Io { path: p.clone(), source }),
        None => {
            let mut so = std::io::stdout().lock();
            so.write_all(text.as_bytes())
                .and_then(|_| so.flush())
                .map_err(|source| Error::Io { path: "<stdout>".into(), source })
        }
    }
}

fn load(cfg: &RunConfig, text: &str, fuzzed: bool) -> Result<KnotDiagram> {
    let d = parse_diagram(cfg.format, text)?;
    match cfg.fuzz {
        Some(f) if fuzzed => Ok(fuzz::fuzz(&d, f.moves, f.seed)?.diagram),
        _ => Ok(d),
    }
}

fn run(cmd: Cmd) -> Result<i32> {
    match cmd {
        Cmd::Invariant { common, code } => {
            let cfg = common.run_config();
            let cc = cfg.certificate_config()?;
            let d = load(&cfg, &input(code)?, true)?;
            let c = certificate(&d, &cc)?;
            emit(cfg.out.as_ref(), &(json::certificate_json(&c)? + "\n"))?;
            Ok(0)
        }
        Cmd::Compare { common, first, second } => {
            let cfg = common.run_config();
            let cc = cfg.certificate_config()?;
            let a = certificate(&load(&cfg, &first, false)?, &cc)?;
            let b = certificate(&load(&cfg, &second, true)?, &cc)?;
            let v = compare(&a, &b);
            emit(cfg.out.as_ref(), &format!("{v}\n"))?;
            Ok(match v {
                ComparisonVerdict::Distinct { .. } => 3,
                ComparisonVerdict::Indistinguishable { .. } => 0,
            })
        }
        Cmd::Table { table, quotients, out } => {
            let cfg = RunConfig { quotient_depth: quotients, ..RunConfig::default() };
            let cc = cfg.certificate_config()?;
            let entries = batch::load_table(table.as_deref())?;
            let report = batch::run(&entries, &cc)?;
            if let Some(p) = &out {
                emit(Some(p), &report.certificates_jsonl()?)?;
            }
            emit(None, &report.matrix_text())?;
            Ok(0)
        }
        Cmd::Fuzz { format, moves, seed, verbose, code } => {
            let d = parse_diagram(format, &input(code)?)?;
            let r = fuzz::fuzz(&d, moves, seed)?;
            if verbose {
                for m in &r.moves {
                    eprintln!("{m}");
                }
            }
            emit(None, &format!("{}\n", r.diagram))?;
            Ok(0)
        }
        Cmd::Presentation { format, simplify, code } => {
            let d = parse_diagram(format, &input(code)?)?;
            let p = peripheral_system(&d);
            let text = if simplify {
                let s = p.group().tietze_simplify_tracked();
                format!(
                    "{}meridian: {}\nlongitude: {}\n",
                    s.presentation,
                    s.map_word(&p.meridian).free_reduce(),
                    s.map_word(&p.longitude).free_reduce()
                )
            } else {
                format!("{}meridian: {}\nlongitude: {}\n", p.group(), p.meridian, p.longitude)
            };
            emit(None, &text)?;
            Ok(0)
        }
        Cmd::Strata { file } => {
            let k = formats::complex::parse(&read_file(&file)?)?;
            emit(None, &formats::poset::serialize(&k.strata_poset()))?;
            Ok(0)
        }
        Cmd::Chains { file } => {
            let p = formats::poset::parse(&read_file(&file)?)?;
            let text: String = p.enumerate_reduced().iter().map(|c| format!("{}\n", c.display(&p))).collect();
            emit(None, &text)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
