use std::io::{self, BufRead, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use cliffordt::matrix::{bloch, enumerate_cliffords, Gate, Mat2, Mat3};
use cliffordt::normal::{eval_word, BSForm, ETForm, MAForm, XYZForm};
use cliffordt::random::{random_form, seeded};
use cliffordt::residues::analyze;
use cliffordt::selftest;
use cliffordt::synthesis::{synth_so3, synth_u2};
use cliffordt::{Error, ErrorClass, Result};

/// Exact normalization, synthesis and analysis of single-qubit Clifford+T circuits.
#[derive(Parser)]
#[command(name = "cliffordt", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormKind {
    Ma,
    Et,
    Xyz,
    Bs,
}

#[derive(Subcommand)]
enum Command {
    /// Normalize a gate word and print the form with its T- and H-count.
    Normalize {
        /// Gate word over H S T X Y Z W E, or `-` for standard input.
        word: String,
        #[arg(long, value_enum, default_value = "ma")]
        form: FormKind,
        /// Treat every line of the input as a separate word.
        #[arg(long)]
        each_line: bool,
    },
    /// Synthesize the normal form of an exact matrix read from a file.
    Synth {
        /// Bloch rotation over Z[1/√2], 3x3.
        #[arg(long, value_name = "FILE", conflicts_with = "u2", required_unless_present = "u2")]
        so3: Option<String>,
        /// Unitary over Z[ω, 1/√2], 2x2.
        #[arg(long, value_name = "FILE")]
        u2: Option<String>,
        /// Re-evaluate the result and compare exactly.
        #[arg(long)]
        verify: bool,
    },
    /// Print the exact unitary of a gate word.
    Matrix {
        word: String,
        #[arg(long)]
        each_line: bool,
    },
    /// Print the exact Bloch rotation of a gate word.
    Bloch {
        word: String,
        #[arg(long)]
        each_line: bool,
    },
    /// Read T-count and H-count off the residue class of a gate word.
    Counts {
        word: String,
        /// Print the full residue report line.
        #[arg(long)]
        report: bool,
        #[arg(long)]
        each_line: bool,
    },
    /// Convert a normal form between the supported shapes.
    Convert {
        form: String,
        #[arg(long, value_enum)]
        from: FormKind,
        #[arg(long, value_enum)]
        to: FormKind,
        #[arg(long)]
        each_line: bool,
    },
    /// List the 192 Clifford operators as exponent tuples.
    Cliffords,
    /// Run the acceptance suite.
    Selftest {
        /// Run a single criterion.
        #[arg(long)]
        criterion: Option<u8>,
    },
    /// Emit a reproducible random normal form.
    Rand {
        #[arg(long)]
        tcount: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print the expanded gate word instead of the form.
        #[arg(long)]
        word: bool,
    },
}

fn read_source(path: &str) -> Result<String> {
    let mut s = String::new();
    let res = if path == "-" {
        io::stdin().read_to_string(&mut s).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| s = t)
    };
    res.map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    Ok(s)
}

/// A matrix may be given on one line or with one row per line.
fn matrix_text(s: &str) -> String {
    let rows: Vec<&str> = s.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
    if rows.len() > 1 && rows.iter().all(|r| !r.contains(';')) {
        rows.join(";")
    } else {
        rows.join("")
    }
}

fn to_ma(text: &str, from: FormKind) -> Result<MAForm> {
    Ok(match from {
        FormKind::Ma => text.parse()?,
        FormKind::Et => MAForm::from_et(&text.parse::<ETForm>()?),
        FormKind::Bs => MAForm::from_bs(&text.parse::<BSForm>()?),
        FormKind::Xyz => MAForm::from_xyz(&text.parse::<XYZForm>()?),
    })
}

fn render(m: &MAForm, to: FormKind) -> String {
    match to {
        FormKind::Ma => m.to_string(),
        FormKind::Et => m.to_et().to_string(),
        FormKind::Bs => m.to_bs().to_string(),
        FormKind::Xyz => m.to_xyz().to_string(),
    }
}

/// Applies `f` to the argument, or to each line of standard input.
fn per_input(arg: &str, each_line: bool, f: impl Fn(&str) -> Result<String>) -> Result<()> {
    let mut out = io::stdout().lock();
    let mut emit = |s: String| writeln!(out, "{s}").map_err(|e| Error::Parse(e.to_string()));
    if each_line {
        let input: Box<dyn BufRead> = if arg == "-" {
            Box::new(io::stdin().lock())
        } else {
            Box::new(io::Cursor::new(read_source(arg)?))
        };
        for line in input.lines() {
            let line = line.map_err(|e| Error::Parse(e.to_string()))?;
            emit(f(line.trim())?)?;
        }
        Ok(())
    } else if arg == "-" {
        emit(f(read_source("-")?.trim())?)
    } else {
        emit(f(arg)?)
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Normalize { word, form, each_line } => per_input(&word, each_line, |w| {
            let m = MAForm::normalize(&Gate::parse_word(w)?);
            Ok(format!("{} t={} h={}", render(&m, form), m.t_count(), m.h_count()))
        })?,
        Command::Synth { so3, u2, verify } => {
            let form = match (so3, u2) {
                (Some(path), _) => {
                    let v: Mat3 = matrix_text(&read_source(&path)?).parse()?;
                    let m = synth_so3(&v)?;
                    if verify && bloch(&m.eval()) != v {
                        return Err(Error::NoMatch);
                    }
                    m
                }
                (None, Some(path)) => {
                    let u: Mat2 = matrix_text(&read_source(&path)?).parse()?;
                    let m = synth_u2(&u)?;
                    if verify && m.eval() != u {
                        return Err(Error::NoMatch);
                    }
                    m
                }
                (None, None) => return Err(Error::Parse("one of --so3 or --u2 is required".into())),
            };
            println!("{form}");
        }
        Command::Matrix { word, each_line } => {
            per_input(&word, each_line, |w| Ok(eval_word(&Gate::parse_word(w)?).to_string()))?
        }
        Command::Bloch { word, each_line } => {
            per_input(&word, each_line, |w| Ok(bloch(&eval_word(&Gate::parse_word(w)?)).to_string()))?
        }
        Command::Counts { word, report, each_line } => per_input(&word, each_line, |w| {
            let u = eval_word(&Gate::parse_word(w)?);
            let c = analyze(&u)?;
            if report {
                c.report(&u)
            } else {
                Ok(c.to_string())
            }
        })?,
        Command::Convert { form, from, to, each_line } => {
            per_input(&form, each_line, |f| Ok(render(&to_ma(f, from)?, to)))?
        }
        Command::Cliffords => {
            let mut out = io::stdout().lock();
            for c in enumerate_cliffords() {
                writeln!(out, "{c}").map_err(|e| Error::Parse(e.to_string()))?;
            }
        }
        Command::Selftest { criterion } => {
            let reports = match criterion {
                Some(id) => vec![selftest::run_criterion(id)
                    .ok_or_else(|| Error::Parse(format!("no criterion {id}")))?],
                None => selftest::run_all(),
            };
            for r in &reports {
                println!("{r}");
            }
            let failed = reports.iter().filter(|r| !r.passed).count();
            println!("{} passed, {failed} failed", reports.len() - failed);
            return Ok(failed == 0);
        }
        Command::Rand { tcount, seed, word } => {
            let m = random_form(&mut seeded(seed), tcount);
            if word {
                println!("{}", m.word());
            } else {
                println!("{m}");
            }
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e.class() {
                ErrorClass::Parse => 2,
                ErrorClass::Precondition => 3,
                ErrorClass::Internal => 4,
            })
        }
    }
}
