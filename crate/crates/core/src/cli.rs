//! Command-line front end.
//!
//! Exit codes: 0 success, 1 identity mismatch or I/O failure, 2 unparsable input,
//! 3 input that parses but violates an invariant, 4 resource budget exceeded.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::{self, Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::abacus::{self, AbacusDiagram, AbacusJson};
use crate::enumerate::{enumerate_bounded, enumerate_lecture_hall};
use crate::partition::{ceiling_stats, BoundedPartition, LectureHallPartition, PartitionJson, PartitionKind};
use crate::render::render;
use crate::series::{verify_plain, verify_refined};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_MISMATCH: i32 = EXIT_FAILURE;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

const DEFAULT_BUDGET: u64 = 2000;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("refusing to run: {0}")]
    Budget(String),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Validation(_) => EXIT_VALIDATION,
            CliError::Budget(_) => EXIT_BUDGET,
            CliError::Io(_) => EXIT_FAILURE,
        }
    }
}

fn invalid(e: impl std::fmt::Display) -> CliError {
    CliError::Validation(e.to_string())
}

#[derive(Debug, Parser)]
#[command(
    name = "lecture-hall",
    version,
    about = "Lecture hall partitions, abacus diagrams and bounded partitions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Lecture hall partition -> abacus diagram
    Encode(PartitionArgs),
    /// Abacus diagram -> lecture hall partition
    Decode(AbacusArgs),
    /// Abacus diagram -> bounded partition
    ToBounded(AbacusArgs),
    /// Bounded partition -> abacus diagram
    FromBounded(PartitionArgs),
    /// Stream every partition of a family up to a weight
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_weight: i64,
        #[arg(long, value_enum, default_value_t = Family::LectureHall)]
        family: Family,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Compare both sides of the lecture hall generating-function identity
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_x: u32,
        /// Check the refined identity in x, u, v
        #[arg(long)]
        refined: bool,
        /// Largest allowed n * max_x
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Draw an abacus as text
    Render {
        #[command(flatten)]
        abacus: AbacusArgs,
        /// Render the abacus of this lecture hall partition instead
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with = "beads")]
        parts: Option<Vec<i64>>,
        /// Inclusive row range, e.g. -4..3
        #[arg(long, allow_hyphen_values = true, default_value = "-2..2")]
        rows: String,
        /// Append the column classes as a bracketed footer
        #[arg(long)]
        classes: bool,
    },
    /// Weight, ceiling statistics, window vector and bounded image of a lecture hall partition
    Stats(PartitionArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    #[value(name = "lecture_hall", alias = "lecture-hall")]
    LectureHall,
    Bounded,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// A partition from `--n`/`--parts`, or JSON on stdin when `--parts` is absent.
#[derive(Debug, Args)]
pub struct PartitionArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, num_args = 0..=1)]
    parts: Option<Vec<i64>>,
}

/// An abacus from `--n`/`--beads`, or JSON on stdin when `--beads` is absent.
#[derive(Debug, Args)]
pub struct AbacusArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    beads: Option<Vec<i64>>,
}

#[derive(Serialize)]
struct Weighted<T: Serialize> {
    #[serde(flatten)]
    inner: T,
    weight: i64,
}

#[derive(Serialize)]
struct StatsReport {
    n: usize,
    parts: Vec<i64>,
    weight: i64,
    ceilings: Vec<i64>,
    ceiling_weight: i64,
    odd_ceilings: usize,
    window_vector: Vec<i64>,
    bounded: Vec<i64>,
    small_parts: Vec<i64>,
    large_parts: Vec<i64>,
}

fn read_json<T: serde::de::DeserializeOwned>(stdin: &mut dyn Read) -> Result<T, CliError> {
    let mut text = String::new();
    stdin.read_to_string(&mut text)?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse(e.to_string()))
}

impl PartitionArgs {
    fn raw(&self, stdin: &mut dyn Read, kind: PartitionKind) -> Result<PartitionJson, CliError> {
        match &self.parts {
            Some(parts) => {
                let parts = parts.clone();
                let n = match (self.n, kind) {
                    (Some(n), _) => n,
                    (None, PartitionKind::LectureHall) => parts.len(),
                    (None, PartitionKind::Bounded) => {
                        return Err(CliError::Parse("--n is required for a bounded partition".into()))
                    }
                };
                Ok(PartitionJson {
                    kind: Some(kind),
                    n,
                    parts,
                })
            }
            None => read_json(stdin),
        }
    }

    fn lecture_hall(&self, stdin: &mut dyn Read) -> Result<LectureHallPartition, CliError> {
        LectureHallPartition::try_from(self.raw(stdin, PartitionKind::LectureHall)?).map_err(invalid)
    }

    fn bounded(&self, stdin: &mut dyn Read) -> Result<BoundedPartition, CliError> {
        BoundedPartition::try_from(self.raw(stdin, PartitionKind::Bounded)?).map_err(invalid)
    }
}

impl AbacusArgs {
    fn abacus(&self, stdin: &mut dyn Read) -> Result<AbacusDiagram, CliError> {
        let json = match &self.beads {
            Some(beads) => AbacusJson {
                n: self.n.unwrap_or(beads.len()),
                defining_beads: beads.clone(),
            },
            None => read_json(stdin)?,
        };
        AbacusDiagram::try_from(json).map_err(invalid)
    }
}

fn parse_rows(text: &str) -> Result<(i64, i64), CliError> {
    let bad = || CliError::Parse(format!("row range {text:?} is not of the form lo..hi"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(CliError::Validation(format!("row range {lo}..{hi} is empty")));
    }
    Ok((lo, hi))
}

fn emit_json(out: &mut dyn Write, value: &impl Serialize) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value).map_err(|e| CliError::Io(e.into()))?;
    writeln!(out)?;
    Ok(())
}

fn weighted_abacus(a: &AbacusDiagram, weight: i64) -> Weighted<AbacusJson> {
    Weighted {
        inner: AbacusJson::from(a),
        weight,
    }
}

/// Runs one command. Returns the process exit code; errors are reported on
/// `stderr`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, stdin, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "{e}");
            e.exit_code()
        }
    }
}

fn execute(command: Command, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Encode(args) => {
            let lambda = args.lecture_hall(stdin)?;
            let a = abacus::encode(&lambda).map_err(invalid)?;
            emit_json(out, &weighted_abacus(&a, lambda.weight()))?;
        }
        Command::Decode(args) => {
            let a = args.abacus(stdin)?;
            let lambda = abacus::decode(&a);
            emit_json(
                out,
                &Weighted {
                    inner: PartitionJson::from(&lambda),
                    weight: lambda.weight(),
                },
            )?;
        }
        Command::ToBounded(args) => {
            let a = args.abacus(stdin)?;
            let p = abacus::to_bounded(&a);
            emit_json(
                out,
                &Weighted {
                    inner: PartitionJson::from(&p),
                    weight: p.weight(),
                },
            )?;
        }
        Command::FromBounded(args) => {
            let p = args.bounded(stdin)?;
            let a = abacus::from_bounded(&p).map_err(invalid)?;
            emit_json(out, &weighted_abacus(&a, p.weight()))?;
        }
        Command::Enumerate {
            n,
            max_weight,
            family,
            format,
        } => {
            if n == 0 {
                return Err(CliError::Validation("n must be positive".into()));
            }
            let items: Box<dyn Iterator<Item = PartitionJson>> = match family {
                Family::LectureHall => Box::new(enumerate_lecture_hall(n, max_weight).map(|l| PartitionJson::from(&l))),
                Family::Bounded => Box::new(enumerate_bounded(n, max_weight).map(|p| PartitionJson::from(&p))),
            };
            let mut counts: BTreeMap<i64, u64> = BTreeMap::new();
            if format == Format::Csv {
                writeln!(out, "weight,parts")?;
            }
            for item in items {
                let w = crate::partition::weight(&item.parts);
                *counts.entry(w).or_default() += 1;
                match format {
                    Format::Json => emit_json(out, &item)?,
                    Format::Csv => {
                        let parts: Vec<String> = item.parts.iter().map(i64::to_string).collect();
                        writeln!(out, "{w},{}", parts.join("|"))?;
                    }
                }
            }
            let total: u64 = counts.values().sum();
            let per_weight: Vec<String> = counts.iter().map(|(w, c)| format!("{w}:{c}")).collect();
            writeln!(err, "total {total}; by weight {}", per_weight.join(" "))?;
        }
        Command::Verify {
            n,
            max_x,
            refined,
            budget,
        } => {
            if n == 0 {
                return Err(CliError::Validation("n must be positive".into()));
            }
            let cost = n as u64 * max_x as u64;
            if cost > budget {
                return Err(CliError::Budget(format!(
                    "n * max_x = {cost} exceeds the budget of {budget}"
                )));
            }
            let report = if refined {
                verify_refined(n, max_x)
            } else {
                verify_plain(n, max_x)
            }
            .map_err(|e| CliError::Budget(e.to_string()))?;
            match report.mismatch {
                None => writeln!(out, "OK {} coefficients compared", report.compared)?,
                Some(m) => {
                    writeln!(out, "MISMATCH at {}: lhs={} rhs={}", m.exponent, m.left, m.right)?;
                    return Ok(EXIT_MISMATCH);
                }
            }
        }
        Command::Render {
            abacus: args,
            parts,
            rows,
            classes,
        } => {
            let rows = parse_rows(&rows)?;
            let a = match parts {
                Some(parts) => {
                    let lambda = LectureHallPartition::new(parts).map_err(invalid)?;
                    abacus::encode(&lambda).map_err(invalid)?
                }
                None => args.abacus(stdin)?,
            };
            write!(out, "{}", render(&a, rows, classes))?;
        }
        Command::Stats(args) => {
            let lambda = args.lecture_hall(stdin)?;
            let a = abacus::encode(&lambda).map_err(invalid)?;
            let ceilings = ceiling_stats(&lambda);
            let bounded = abacus::to_bounded(&a);
            let report = StatsReport {
                n: lambda.n(),
                parts: lambda.parts().to_vec(),
                weight: lambda.weight(),
                ceilings: ceilings.entries,
                ceiling_weight: ceilings.weight,
                odd_ceilings: ceilings.odd_count,
                window_vector: a.window_vector(),
                small_parts: bounded.small_parts().to_vec(),
                large_parts: bounded.large_parts().to_vec(),
                bounded: bounded.into_parts(),
            };
            emit_json(out, &report)?;
        }
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut argv = vec!["lecture-hall"];
        argv.extend_from_slice(args);
        let mut stdout = Vec::new();
        let mut stderr = Vec::new();
        let code = run(argv, &mut input.as_bytes(), &mut stdout, &mut stderr);
        (
            code,
            String::from_utf8(stdout).unwrap(),
            String::from_utf8(stderr).unwrap(),
        )
    }

    #[test]
    fn rows_parse() {
        assert_eq!(parse_rows("-4..3").unwrap(), (-4, 3));
        assert!(matches!(parse_rows("4"), Err(CliError::Parse(_))));
        assert!(matches!(parse_rows("3..1"), Err(CliError::Validation(_))));
    }

    #[test]
    fn encode_from_flags() {
        let (code, out, _) = call(&["encode", "--parts", "0,1,4,8,14,30"], "");
        assert_eq!(code, 0);
        assert_eq!(out.trim(), r#"{"n":6,"defining_beads":[-2,2,8,12,16,30],"weight":57}"#);
    }

    #[test]
    fn bounded_flags_need_n() {
        let (code, _, err) = call(&["from-bounded", "--parts", "2,3"], "");
        assert_eq!(code, EXIT_PARSE, "{err}");
        let (code, out, _) = call(&["from-bounded", "--n", "2", "--parts", "2,3"], "");
        assert_eq!(code, 0);
        assert_eq!(out.trim(), r#"{"n":2,"defining_beads":[2,4],"weight":5}"#);
    }

    #[test]
    fn unknown_subcommand_is_parse_error() {
        assert_eq!(call(&["frobnicate"], "").0, EXIT_PARSE);
        assert_eq!(call(&["--help"], "").0, EXIT_OK);
    }
}
