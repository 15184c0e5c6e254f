//! Command-line front end: `expand`, `count`, `list`, and `verify`.
//!
//! Output goes to stdout only and is deterministic for a given command.
//! Exit status is 2 for malformed input, 1 for a failed verification, and 0
//! otherwise.

use std::collections::BTreeMap;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::combinatorics::Partition;
use crate::error::Error;
use crate::genomic_schur::{descent_expansion, qy_expansion, u_two_row_closed_form};
use crate::sym_poly::{fundamental_to_schur, BasisIndex, Expansion, SparsePolynomial};
use crate::tableaux::{
    enumerate_gapless_increasing_limited, enumerate_genomic_limited, enumerate_qy_genomic_limited,
    enumerate_standard,
};
use crate::verify::verify;

pub const FORMAT_ENV: &str = "GENOMIC_SCHUR_FORMAT";

/// Reference commands (arguments after the program name) with their exact
/// stdout.
pub const GOLDEN_COMMANDS: [(&[&str], &str); 3] = [
    (
        &[
            "expand", "--shape", "3,3", "--basis", "schur", "--format", "text",
        ],
        "s[3,3] + s[2,2,1] + s[1,1,1,1]\n",
    ),
    (
        &[
            "count",
            "--shape",
            "3,3,3",
            "--kind",
            "gapless",
            "--max-entry",
            "8",
        ],
        "84\n",
    ),
    (
        &[
            "expand", "--shape", "3,3,3", "--basis", "schur", "--degree", "8",
        ],
        "s[2,2,2,1,1] - s[2,2,2,2] + s[3,2,2,1]\n",
    ),
];

#[derive(Debug, Parser)]
#[command(
    name = "genomic-schur",
    version,
    about = "Genomic Schur functions and their expansions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, env = FORMAT_ENV, default_value = "text")]
    pub format: Format,

    /// Abort with status 2 when an enumeration would exceed this many tableaux.
    #[arg(long, global = true, default_value_t = 2_000_000)]
    pub limit: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print U_lambda in a basis, optionally restricted to one degree.
    Expand(ExpandArgs),
    /// Count genomic, quasiYamanouchi, gapless increasing, or standard tableaux.
    Count(TableauArgs),
    /// List tableaux, one per line.
    List(TableauArgs),
    /// Cross-check every construction of U_lambda.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    /// Shape as comma-separated parts, e.g. 3,3,1.
    #[arg(long, value_parser = parse_shape)]
    pub shape: Partition,

    #[arg(long, value_enum)]
    pub basis: Basis,

    /// Number of variables (required for the monomial basis).
    #[arg(long)]
    pub vars: Option<u32>,

    /// Keep only terms of this degree.
    #[arg(long)]
    pub degree: Option<u32>,
}

#[derive(Debug, Args)]
pub struct TableauArgs {
    /// Shape as comma-separated parts, e.g. 3,3,1.
    #[arg(long, value_parser = parse_shape)]
    pub shape: Partition,

    /// Which tableaux; `count` without a kind reports every applicable kind.
    #[arg(long, value_enum)]
    pub kind: Option<Kind>,

    /// Entry bound for genomic (required) and quasiYamanouchi tableaux.
    #[arg(long)]
    pub vars: Option<u32>,

    /// Exact maximum entry of gapless increasing tableaux.
    #[arg(long)]
    pub max_entry: Option<u32>,

    /// Break gapless counts down by maximum entry.
    #[arg(long)]
    pub by_max_entry: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Shape as comma-separated parts, e.g. 3,3,1.
    #[arg(long, value_parser = parse_shape)]
    pub shape: Partition,

    /// Number of variables; defaults to one more than the number of rows.
    #[arg(long)]
    pub vars: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    Monomial,
    FundamentalQy,
    FundamentalInc,
    Schur,
    TwoRow,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Genomic,
    Qy,
    Gapless,
    Standard,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::Genomic => "genomic",
            Kind::Qy => "qy",
            Kind::Gapless => "gapless",
            Kind::Standard => "standard",
        }
    }
}

fn parse_shape(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// JSON document for `expand`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionDoc {
    pub shape: Vec<u32>,
    pub basis: String,
    pub terms: Vec<TermDoc>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub index: Vec<u32>,
    pub coeff: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountDoc {
    pub shape: Vec<u32>,
    pub counts: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub by_max_entry: Option<BTreeMap<u32, usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListDoc {
    pub shape: Vec<u32>,
    pub kind: String,
    pub tableaux: Vec<String>,
}

/// Result of running one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            status: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Outcome {
            status: 2,
            stdout: String::new(),
            stderr: msg.into(),
        }
    }
}

impl From<Error> for Outcome {
    fn from(e: Error) -> Self {
        Outcome::usage(format!("error: {e}\n"))
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            if status == 0 {
                Outcome::ok(rendered)
            } else {
                Outcome::usage(rendered)
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Expand(a) => expand(a, cli),
        Command::Count(a) => count(a, cli),
        Command::List(a) => list(a, cli),
        Command::Verify(a) => return run_verify(a, cli.format),
    };
    result.unwrap_or_else(Outcome::from)
}

fn json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string(doc).expect("serializable document");
    s.push('\n');
    s
}

fn expansion_doc<K: BasisIndex>(shape: &Partition, basis: &str, e: &Expansion<K>) -> ExpansionDoc {
    ExpansionDoc {
        shape: shape.parts().to_vec(),
        basis: basis.to_string(),
        terms: e
            .terms()
            .into_iter()
            .map(|(k, c)| TermDoc {
                index: k.entries().to_vec(),
                coeff: c,
            })
            .collect(),
    }
}

fn render_expansion<K: BasisIndex>(
    shape: &Partition,
    basis: &str,
    e: Expansion<K>,
    degree: Option<u32>,
    format: Format,
) -> String {
    let e = match degree {
        Some(d) => e.degree_slice(d),
        None => e,
    };
    match format {
        Format::Text => format!("{e}\n"),
        Format::Json => json(&expansion_doc(shape, basis, &e)),
    }
}

fn expand(a: &ExpandArgs, cli: &Cli) -> Result<Outcome, Error> {
    let limit = Some(cli.limit);
    let shape = &a.shape;
    let out = match a.basis {
        Basis::Monomial => {
            let Some(n) = a.vars.filter(|&n| n >= 1) else {
                return Ok(Outcome::usage(
                    "error: --basis monomial requires --vars N with N >= 1\n",
                ));
            };
            let mut poly = SparsePolynomial::zero(n as usize);
            for t in enumerate_genomic_limited(shape, n, limit)? {
                poly.add_term(t.weight().padded(n as usize).entries().to_vec(), 1);
            }
            if let Some(d) = a.degree {
                poly = poly.degree_slice(d);
            }
            match cli.format {
                Format::Text => format!("{poly}\n"),
                Format::Json => {
                    let doc = ExpansionDoc {
                        shape: shape.parts().to_vec(),
                        basis: "monomial".into(),
                        terms: poly
                            .terms()
                            .into_iter()
                            .map(|(e, c)| TermDoc {
                                index: e.to_vec(),
                                coeff: c,
                            })
                            .collect(),
                    };
                    json(&doc)
                }
            }
        }
        Basis::FundamentalQy => {
            let tableaux = enumerate_qy_genomic_limited(shape, a.vars, limit)?;
            render_expansion(
                shape,
                "fundamental-qy",
                qy_expansion(&tableaux),
                a.degree,
                cli.format,
            )
        }
        Basis::FundamentalInc | Basis::Schur => {
            let tableaux = enumerate_gapless_increasing_limited(shape, None, limit)?;
            let fundamental = descent_expansion(&tableaux);
            if a.basis == Basis::Schur {
                let schur = fundamental_to_schur(&fundamental);
                render_expansion(shape, "schur", schur, a.degree, cli.format)
            } else {
                render_expansion(shape, "fundamental-inc", fundamental, a.degree, cli.format)
            }
        }
        Basis::TwoRow => {
            let closed = u_two_row_closed_form(shape)?;
            render_expansion(shape, "two-row", closed, a.degree, cli.format)
        }
    };
    Ok(Outcome::ok(out))
}

fn count_kind(a: &TableauArgs, kind: Kind, limit: Option<usize>) -> Result<usize, Error> {
    Ok(match kind {
        Kind::Genomic => {
            let n = a.vars.ok_or_else(|| missing_vars(kind))?;
            enumerate_genomic_limited(&a.shape, n, limit)?.len()
        }
        Kind::Qy => enumerate_qy_genomic_limited(&a.shape, a.vars, limit)?.len(),
        Kind::Gapless => enumerate_gapless_increasing_limited(&a.shape, a.max_entry, limit)?.len(),
        Kind::Standard => enumerate_standard(&a.shape).len(),
    })
}

fn missing_vars(kind: Kind) -> Error {
    Error::Parse {
        what: "arguments",
        input: format!("--kind {}", kind.name()),
        reason: "requires --vars N".into(),
    }
}

fn count(a: &TableauArgs, cli: &Cli) -> Result<Outcome, Error> {
    let limit = Some(cli.limit);
    let kinds: Vec<Kind> = match a.kind {
        Some(k) => vec![k],
        None => {
            let mut ks = vec![Kind::Qy, Kind::Gapless];
            if a.vars.is_some() {
                ks.insert(0, Kind::Genomic);
            }
            ks
        }
    };
    let mut counts = Vec::new();
    for &k in &kinds {
        counts.push((k, count_kind(a, k, limit)?));
    }
    let by_max = if a.by_max_entry {
        let mut table = BTreeMap::new();
        for t in enumerate_gapless_increasing_limited(&a.shape, None, limit)? {
            *table.entry(t.max_entry()).or_insert(0usize) += 1;
        }
        Some(table)
    } else {
        None
    };

    let out = match cli.format {
        Format::Json => json(&CountDoc {
            shape: a.shape.parts().to_vec(),
            counts: counts
                .iter()
                .map(|&(k, c)| (k.name().to_string(), c))
                .collect(),
            by_max_entry: by_max,
        }),
        Format::Text => {
            let mut s = String::new();
            if let [(_, c)] = counts.as_slice() {
                s.push_str(&format!("{c}\n"));
            } else {
                for (k, c) in &counts {
                    s.push_str(&format!("{}: {c}\n", k.name()));
                }
            }
            for (m, c) in by_max.iter().flatten() {
                s.push_str(&format!("max entry {m}: {c}\n"));
            }
            s
        }
    };
    Ok(Outcome::ok(out))
}

fn list(a: &TableauArgs, cli: &Cli) -> Result<Outcome, Error> {
    let limit = Some(cli.limit);
    let Some(kind) = a.kind else {
        return Ok(Outcome::usage("error: list requires --kind\n"));
    };
    let lines: Vec<String> = match kind {
        Kind::Genomic => {
            let n = a.vars.ok_or_else(|| missing_vars(kind))?;
            enumerate_genomic_limited(&a.shape, n, limit)?
                .iter()
                .map(ToString::to_string)
                .collect()
        }
        Kind::Qy => enumerate_qy_genomic_limited(&a.shape, a.vars, limit)?
            .iter()
            .map(ToString::to_string)
            .collect(),
        Kind::Gapless => enumerate_gapless_increasing_limited(&a.shape, a.max_entry, limit)?
            .iter()
            .map(ToString::to_string)
            .collect(),
        Kind::Standard => enumerate_standard(&a.shape)
            .iter()
            .map(ToString::to_string)
            .collect(),
    };
    let out = match cli.format {
        Format::Json => json(&ListDoc {
            shape: a.shape.parts().to_vec(),
            kind: kind.name().to_string(),
            tableaux: lines,
        }),
        Format::Text => lines.into_iter().map(|l| l + "\n").collect(),
    };
    Ok(Outcome::ok(out))
}

fn run_verify(a: &VerifyArgs, format: Format) -> Outcome {
    let n = a.vars.unwrap_or(a.shape.len() as u32 + 1);
    if n == 0 {
        return Outcome::usage("error: --vars must be at least 1\n");
    }
    let report = verify(&a.shape, n as usize);
    let stdout = match format {
        Format::Text => format!("{report}\n"),
        Format::Json => json(&report),
    };
    Outcome {
        status: if report.passed() { 0 } else { 1 },
        stdout,
        stderr: String::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Outcome {
        run_args(std::iter::once("genomic-schur").chain(args.iter().copied()))
    }

    #[test]
    fn expand_schur_text() {
        let o = run(&[
            "expand", "--shape", "3,3", "--basis", "schur", "--format", "text",
        ]);
        assert_eq!(o.status, 0);
        assert_eq!(o.stdout, "s[3,3] + s[2,2,1] + s[1,1,1,1]\n");
    }

    #[test]
    fn golden_commands() {
        for (args, expected) in GOLDEN_COMMANDS {
            let o = run(args);
            assert_eq!((o.status, o.stdout.as_str()), (0, expected), "{args:?}");
        }
    }

    #[test]
    fn malformed_input_exits_2() {
        assert_eq!(
            run(&["expand", "--shape", "1,3", "--basis", "schur"]).status,
            2
        );
        assert_eq!(
            run(&["expand", "--shape", "3,3", "--basis", "monomial"]).status,
            2
        );
        assert_eq!(
            run(&["expand", "--shape", "3,2,1", "--basis", "two-row"]).status,
            2
        );
        assert_eq!(
            run(&["count", "--shape", "2,1", "--kind", "genomic"]).status,
            2
        );
        assert_eq!(run(&["list", "--shape", "2,1"]).status, 2);
        assert_eq!(run(&["bogus"]).status, 2);
    }

    #[test]
    fn limit_exits_2() {
        let o = run(&[
            "count", "--shape", "3,3,3", "--kind", "gapless", "--limit", "10",
        ]);
        assert_eq!(o.status, 2);
        assert!(o.stderr.contains("limit"));
    }

    #[test]
    fn monomial_text() {
        let o = run(&[
            "expand", "--shape", "2", "--basis", "monomial", "--vars", "2",
        ]);
        assert_eq!(o.stdout, "1*x1^2 + 1*x1*x2 + 1*x2^2\n");
    }

    #[test]
    fn count_all_kinds() {
        let o = run(&["count", "--shape", "2,1", "--vars", "2"]);
        assert_eq!(o.stdout, "genomic: 3\nqy: 3\ngapless: 3\n");
        let o = run(&[
            "count",
            "--shape",
            "3,3",
            "--kind",
            "gapless",
            "--by-max-entry",
        ]);
        assert_eq!(
            o.stdout,
            "11\nmax entry 4: 1\nmax entry 5: 5\nmax entry 6: 5\n"
        );
    }

    #[test]
    fn list_gapless() {
        let o = run(&["list", "--shape", "2,1", "--kind", "gapless"]);
        assert_eq!(o.stdout, "1 2/2\n1 2/3\n1 3/2\n");
        let o = run(&["list", "--shape", "1,1", "--kind", "qy", "--format", "json"]);
        assert_eq!(
            o.stdout,
            "{\"shape\":[1,1],\"kind\":\"qy\",\"tableaux\":[\"1/2 | 1/2\"]}\n"
        );
    }

    #[test]
    fn verify_small() {
        let o = run(&["verify", "--shape", "2,1"]);
        assert_eq!(o.status, 0, "{}", o.stdout);
        assert!(o.stdout.contains("PASS FIBER-LAW"));
    }
}
