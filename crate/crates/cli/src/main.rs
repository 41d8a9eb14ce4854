//! One-shot command line interface to the exact decision procedures:
//! James numbers, section/free-summand decisions, realization-range
//! classification, charts, and the abelian-group calculus, plus a
//! `verify` subcommand running the acceptance suite.
//!
//! Every invocation is a pure query. Identical argument vectors produce
//! byte-identical output. Exit codes: 0 for any well-formed query (the
//! verdict lives in the payload), 2 for malformed invocations, 1 for
//! internal invariant violations (never expected) and for `verify`
//! failures.

mod render;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};
use std::process::ExitCode;

use stiefel_core::acceptance::{run_all, Mode};
use stiefel_core::chart::chart;
use stiefel_core::classify::{
    classify_sphere_unstable, classify_stable_realization, classify_stiefel_injective,
    classify_stiefel_surjective, Assumptions,
};
use stiefel_core::completion::{completion_decomposition, ext_completion};
use stiefel_core::enumerate;
use stiefel_core::fractions::RationalMod1;
use stiefel_core::group::{group_from_presentation, AbGroupFQ, PrimeSet};
use stiefel_core::james::james_number;
use stiefel_core::matrix::Mat;
use stiefel_core::snf::smith_normal_form;
use stiefel_core::splitting::{
    decide_section, free_summand_decision, verify_splitting_proof_inequalities,
};
use stiefel_core::{Error, IntMatrix};

#[derive(Parser)]
#[command(
    name = "stiefel",
    version,
    about = "Exact James numbers, Stiefel section decisions, and realization-range classification",
    after_help = "All answers are exact. Output defaults to JSON; pass --format text for prose."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format (charts accept tsv or svg instead)
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Tsv,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// The James number b_q, with its prime factorization
    James {
        /// Index q >= 1
        q: u64,
    },
    /// Does the projection from r-frames to 1-frames of affine n-space
    /// admit a right inverse?
    Split {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        r: u64,
        /// Append the replayed inequality chain of the positive direction
        #[arg(long)]
        verify: bool,
    },
    /// Does the universal stably free module of type (n, n-1) admit a
    /// free summand of the given rank?
    Summand {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        rank: u64,
    },
    /// Classify a realization map by bidegree
    Classify {
        #[command(subcommand)]
        map: ClassifyCmd,
    },
    /// Chart of unstable sphere verdicts over a (d, e) rectangle
    #[command(allow_negative_numbers = true)]
    Chart {
        #[arg(long)]
        x: i64,
        #[arg(long)]
        y: i64,
        #[arg(long)]
        d0: i64,
        #[arg(long)]
        d1: i64,
        #[arg(long)]
        e0: i64,
        #[arg(long)]
        e1: i64,
        /// Assume the vanishing conjecture for the ground field
        #[arg(long)]
        bs: bool,
    },
    /// Exact operations on finitely generated abelian groups
    Group {
        #[command(subcommand)]
        op: GroupCmd,
    },
    /// Run the acceptance suite; exits nonzero on any failure
    Verify {
        /// Smaller sweeps, same assertions
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Subcommand)]
enum ClassifyCmd {
    /// Stable realization at stem-weight (s, w)
    #[command(allow_negative_numbers = true)]
    Stable {
        #[arg(long)]
        s: i64,
        #[arg(long)]
        w: i64,
        #[arg(long)]
        bs: bool,
    },
    /// Unstable sphere realization: sphere (x, y), degree (d, e)
    #[command(allow_negative_numbers = true)]
    Sphere {
        #[arg(long)]
        x: i64,
        #[arg(long)]
        y: i64,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        e: i64,
        #[arg(long)]
        bs: bool,
    },
    /// Stiefel realization, surjectivity range
    #[command(allow_negative_numbers = true)]
    StiefelSurj {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        r: i64,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        e: i64,
        #[arg(long)]
        bs: bool,
    },
    /// Stiefel realization, injectivity range
    #[command(allow_negative_numbers = true)]
    StiefelInj {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        r: i64,
        #[arg(long)]
        d: i64,
        #[arg(long)]
        e: i64,
        #[arg(long)]
        bs: bool,
    },
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Smith normal form D = U * M * V of an integer matrix
    Snf {
        /// Matrix as JSON: {"rows": r, "cols": c, "entries": [...]}
        #[arg(long)]
        matrix: String,
    },
    /// The cokernel of a matrix of relations, in canonical form
    Presentation {
        #[arg(long)]
        matrix: String,
    },
    /// The m-torsion subgroup A[m]
    MTorsion {
        /// Group as JSON: {"q_rank": a, "free_rank": r, "invariant_factors": [...]}
        #[arg(long)]
        group: String,
        #[arg(long)]
        m: u64,
    },
    /// The quotient A/mA
    ModM {
        #[arg(long)]
        group: String,
        #[arg(long)]
        m: u64,
    },
    /// The p-primary component of the torsion subgroup
    PrimaryPart {
        #[arg(long)]
        group: String,
        #[arg(long)]
        p: u64,
    },
    /// Divisibility and torsion predicates relative to a prime set
    Predicates {
        #[arg(long)]
        group: String,
        /// "all" or a comma-separated list of primes
        #[arg(long, default_value = "all")]
        primes: String,
    },
    /// The completion at a prime set
    ExtCompletion {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "all")]
        primes: String,
    },
    /// Split a group along its completion at a prime set
    Decompose {
        #[arg(long)]
        group: String,
        #[arg(long, default_value = "all")]
        primes: String,
    },
    /// Split a residue num/den in Q/Z into prime-power parts
    #[command(allow_negative_numbers = true)]
    Pfd {
        #[arg(long)]
        num: i64,
        #[arg(long)]
        den: i64,
        #[arg(long, default_value = "all")]
        primes: String,
    },
    /// Count homomorphisms between two finite groups by enumeration
    HomCount {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// Enumeration budget in element-pairs
        #[arg(long, default_value_t = enumerate::DEFAULT_BUDGET)]
        budget: u64,
    },
}

/// A malformed invocation: reported on stderr with usage, exit 2.
struct UsageError(String);

/// Rendered result of a well-formed invocation.
enum Output {
    Payload { json: Value, text: String },
    Raw(String),
}

fn main() -> ExitCode {
    // a panic is an internal invariant violation
    std::panic::set_hook(Box::new(|info| {
        eprintln!("internal error: {info}");
        std::process::exit(1);
    }));

    let cli = Cli::parse();
    let format = cli.format;

    if let Command::Verify { quick } = cli.command {
        return run_verify(quick, format);
    }

    match dispatch(cli.command, format) {
        Ok(Output::Payload { json, text }) => {
            match format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&json).expect("valid JSON"))
                }
                Format::Text => print!("{text}"),
                other => {
                    eprintln!("error: --format {other:?} only applies to charts");
                    eprintln!("usage: pass --format json or --format text here");
                    return ExitCode::from(2);
                }
            }
            ExitCode::SUCCESS
        }
        Ok(Output::Raw(bytes)) => {
            print!("{bytes}");
            ExitCode::SUCCESS
        }
        Err(UsageError(message)) => {
            eprintln!("error: {message}");
            eprintln!("usage: run with --help for the full interface");
            ExitCode::from(2)
        }
    }
}

fn run_verify(quick: bool, format: Format) -> ExitCode {
    let mode = if quick { Mode::Quick } else { Mode::Full };
    let reports = run_all(mode);
    match format {
        Format::Json => {
            let entries: Vec<Value> = reports
                .iter()
                .map(|r| {
                    json!({
                        "id": r.id,
                        "name": r.name,
                        "passed": r.passed,
                        "detail": r.detail,
                        "elapsed_seconds": r.elapsed.as_secs_f64(),
                        "budget_seconds": r.budget.as_secs(),
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&entries).expect("valid JSON"));
        }
        _ => {
            for r in &reports {
                println!("{}", r.line());
            }
        }
    }
    if reports.iter().all(|r| r.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn dispatch(command: Command, format: Format) -> Result<Output, UsageError> {
    match command {
        Command::James { q } => {
            if q == 0 {
                return Err(UsageError("q must be at least 1".into()));
            }
            let j = james_number(q);
            Ok(Output::Payload {
                json: render::james_json(&j),
                text: render::james_text(&j) + "\n",
            })
        }
        Command::Split { n, r, verify } => {
            if n == 0 || r == 0 {
                return Err(UsageError("n and r must be at least 1".into()));
            }
            let d = decide_section(n, r);
            let trace = verify.then(|| verify_splitting_proof_inequalities(n, r));
            let trace_ref = trace.as_ref().map(|t| t.as_ref().map_err(|e| e.to_string()));
            Ok(Output::Payload {
                json: render::section_json(&d, trace_ref.clone()),
                text: render::section_text(&d, trace_ref),
            })
        }
        Command::Summand { n, rank } => {
            if n == 0 {
                return Err(UsageError("n must be at least 1".into()));
            }
            let d = free_summand_decision(n, rank);
            Ok(Output::Payload {
                json: render::section_json(&d, None),
                text: render::section_text(&d, None),
            })
        }
        Command::Classify { map } => {
            let verdict = match map {
                ClassifyCmd::Stable { s, w, bs } => {
                    classify_stable_realization(s, w, assumptions(bs))
                }
                ClassifyCmd::Sphere { x, y, d, e, bs } => {
                    classify_sphere_unstable(x, y, d, e, assumptions(bs))
                }
                ClassifyCmd::StiefelSurj { n, r, d, e, bs } => {
                    classify_stiefel_surjective(n, r, d, e, assumptions(bs))
                        .map_err(|e| UsageError(e.to_string()))?
                }
                ClassifyCmd::StiefelInj { n, r, d, e, bs } => {
                    classify_stiefel_injective(n, r, d, e, assumptions(bs))
                        .map_err(|e| UsageError(e.to_string()))?
                }
            };
            Ok(Output::Payload {
                json: render::verdict_json(&verdict),
                text: render::verdict_text(&verdict),
            })
        }
        Command::Chart { x, y, d0, d1, e0, e1, bs } => {
            let c = chart(x, y, (d0, d1), (e0, e1), assumptions(bs))
                .map_err(|e| UsageError(e.to_string()))?;
            match format {
                Format::Svg => Ok(Output::Raw(c.to_svg())),
                Format::Tsv => Ok(Output::Raw(c.to_tsv())),
                _ => Err(UsageError("charts are emitted as --format tsv or --format svg".into())),
            }
        }
        Command::Group { op } => group_dispatch(op),
        Command::Verify { .. } => unreachable!("handled in main"),
    }
}

fn group_dispatch(op: GroupCmd) -> Result<Output, UsageError> {
    match op {
        GroupCmd::Snf { matrix } => {
            let m = parse_matrix(&matrix)?;
            let snf = smith_normal_form(&m);
            let json = json!({
                "d": render::matrix_json(&snf.d),
                "u": render::matrix_json(&snf.u),
                "v": render::matrix_json(&snf.v),
            });
            let text = format!(
                "invariant factors: [{}]\nrank: {}\n",
                snf.nontrivial_factors()
                    .iter()
                    .map(|d| d.to_string())
                    .collect::<Vec<_>>()
                    .join(", "),
                snf.rank()
            );
            Ok(Output::Payload { json, text })
        }
        GroupCmd::Presentation { matrix } => {
            let m = parse_matrix(&matrix)?;
            let g = group_from_presentation(&m);
            Ok(Output::Payload { json: render::group_json(&g), text: render::group_text(&g) })
        }
        GroupCmd::MTorsion { group, m } => {
            if m == 0 {
                return Err(UsageError("m must be at least 1".into()));
            }
            let g = parse_group(&group)?;
            let result = g.m_torsion(m);
            Ok(Output::Payload {
                json: render::group_json(&result),
                text: render::group_text(&result),
            })
        }
        GroupCmd::ModM { group, m } => {
            if m == 0 {
                return Err(UsageError("m must be at least 1".into()));
            }
            let g = parse_group(&group)?;
            let result = g.mod_m(m);
            Ok(Output::Payload {
                json: render::group_json(&result),
                text: render::group_text(&result),
            })
        }
        GroupCmd::PrimaryPart { group, p } => {
            let g = parse_group(&group)?;
            match g.primary_part(p) {
                Ok(part) => {
                    let result = AbGroupFQ::finite(part);
                    Ok(Output::Payload {
                        json: render::group_json(&result),
                        text: render::group_text(&result),
                    })
                }
                Err(e) => Err(UsageError(e.to_string())),
            }
        }
        GroupCmd::Predicates { group, primes } => {
            let g = parse_group(&group)?;
            let set = parse_primes(&primes)?;
            let report = g.divisibility(&set);
            let json = serde_json::to_value(report).expect("reports serialize");
            let text = format!(
                "I-divisible: {}\nuniquely I-divisible: {}\nI-torsion-free: {}\nI-bounded torsion: {}\n",
                report.is_i_divisible,
                report.is_uniquely_i_divisible,
                report.is_i_torsion_free,
                report.is_i_bounded_torsion
            );
            Ok(Output::Payload { json, text })
        }
        GroupCmd::ExtCompletion { group, primes } => {
            let g = parse_group(&group)?;
            let set = parse_primes(&primes)?;
            match ext_completion(&g, &set) {
                Ok(c) => Ok(Output::Payload {
                    json: render::completion_json(&c),
                    text: render::completion_text(&c),
                }),
                Err(e) => Err(UsageError(e.to_string())),
            }
        }
        GroupCmd::Decompose { group, primes } => {
            let g = parse_group(&group)?;
            let set = parse_primes(&primes)?;
            match completion_decomposition(&g, &set) {
                Ok(d) => Ok(Output::Payload {
                    json: render::decomposition_json(&d),
                    text: render::decomposition_text(&d),
                }),
                Err(e @ Error::HypothesisViolated(_)) => Ok(Output::Payload {
                    json: render::error_json("hypothesis_violated", e.to_string()),
                    text: format!("{e}\n"),
                }),
                Err(e) => Err(UsageError(e.to_string())),
            }
        }
        GroupCmd::Pfd { num, den, primes } => {
            let set = parse_primes(&primes)?;
            let x = RationalMod1::new(num, den).map_err(|e| UsageError(e.to_string()))?;
            match x.partial_fractions(&set) {
                Ok(parts) => {
                    let mut obj = serde_json::Map::new();
                    for (p, part) in &parts {
                        obj.insert(p.to_string(), render::fraction_json(part));
                    }
                    let json = json!({ "residue": render::fraction_json(&x), "parts": obj });
                    let rendered: Vec<String> = parts.values().map(|p| p.to_string()).collect();
                    let text = format!(
                        "{x} = {} (mod 1)\n",
                        if rendered.is_empty() { "0".to_string() } else { rendered.join(" + ") }
                    );
                    Ok(Output::Payload { json, text })
                }
                Err(e @ Error::PrimeOutsideSet { .. }) => Ok(Output::Payload {
                    json: render::error_json("prime_outside_set", e.to_string()),
                    text: format!("{e}\n"),
                }),
                Err(e) => Err(UsageError(e.to_string())),
            }
        }
        GroupCmd::HomCount { a, b, budget } => {
            let ga = parse_group(&a)?;
            let gb = parse_group(&b)?;
            if !ga.is_finite() || !gb.is_finite() {
                return Err(UsageError("hom counting requires finite groups".into()));
            }
            match enumerate::hom_count(&ga.torsion, &gb.torsion, budget) {
                Ok(count) => Ok(Output::Payload {
                    json: json!({ "count": count, "budget": budget }),
                    text: format!("{count} homomorphisms\n"),
                }),
                Err(e @ Error::BoundExceeded { .. }) => Ok(Output::Payload {
                    json: render::error_json("bound_exceeded", e.to_string()),
                    text: format!("{e}\n"),
                }),
                Err(e) => Err(UsageError(e.to_string())),
            }
        }
    }
}

fn assumptions(bs: bool) -> Assumptions {
    Assumptions { beilinson_soule: bs }
}

fn parse_matrix(s: &str) -> Result<IntMatrix, UsageError> {
    #[derive(serde::Deserialize)]
    #[serde(deny_unknown_fields)]
    struct Wire {
        rows: usize,
        cols: usize,
        entries: Vec<i64>,
    }
    let wire: Wire =
        serde_json::from_str(s).map_err(|e| UsageError(format!("cannot parse matrix JSON: {e}")))?;
    Mat::new(wire.rows, wire.cols, wire.entries.into_iter().map(BigInt::from).collect())
        .map_err(|e| UsageError(e.to_string()))
}

fn parse_group(s: &str) -> Result<AbGroupFQ, UsageError> {
    serde_json::from_str(s).map_err(|e| UsageError(format!("cannot parse group JSON: {e}")))
}

fn parse_primes(s: &str) -> Result<PrimeSet, UsageError> {
    if s.trim() == "all" {
        return Ok(PrimeSet::all());
    }
    if s.trim().is_empty() {
        return PrimeSet::explicit([]).map_err(|e| UsageError(e.to_string()));
    }
    let mut primes = Vec::new();
    for part in s.split(',') {
        let p: u64 = part
            .trim()
            .parse()
            .map_err(|_| UsageError(format!("cannot parse prime {part:?}")))?;
        primes.push(p);
    }
    PrimeSet::explicit(primes).map_err(|e| UsageError(e.to_string()))
}
