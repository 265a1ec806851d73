//! Command-line front end for `ffrt-core`: the divisor DSL, subcommands and
//! JSON or text reports.

pub mod dsl;
pub mod poly;
pub mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ffrt_core::citation;
use ffrt_core::decision::{fedder_is_fpure, Poly3};
use ffrt_core::elliptic::{
    cover_model, cross_ratio_lambda, is_ordinary, point_count, summand_census_delta0, CensusMode,
    DetClass, EllipticError, DEFAULT_MAX_FIELD,
};
use ffrt_core::frobcalc::{
    c1_pushforward, frob_split_p1, indecomposability_verdict, orb_degree, pushforward_determinant,
    slope, type_of_pushforward, IndecomposabilityVerdict,
};
use ffrt_core::rootlattice::{enumerate_positive_roots, RootClass};
use ffrt_core::{
    analyze, fsplit_delta0, graded_piece_dims, AnalyzeOptions, HatVector, Rational,
    RationalDivisor, StarGraph, VerdictStatus, Weights,
};
use serde::Serialize;

use crate::dsl::{divisor_from_weights, parse_divisor, parse_weights, render_divisor, ParseError};
use crate::report::*;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

/// Environment variable bounding the field size for point counts.
pub const MAX_FIELD_ENV: &str = "FFRT_LAB_MAX_FIELD";

#[derive(Parser, Debug)]
#[command(name = "ffrt-lab", version, about = "Finite F-representation type of graded rings R(P^1, D)")]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Exit with status 3 when the verdict is UNKNOWN.
    #[arg(long, global = true)]
    pub strict: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Singularity class, F-purity, FFRT verdict and Frobenius summaries.
    Analyze(AnalyzeArgs),
    /// Hilbert function of R(P^1, D), or one graded piece of R^{1/q}.
    Hilbert(HilbertArgs),
    /// Frobenius push-forwards on P^1 and on a weighted projective line.
    Pushforward(PushforwardArgs),
    /// Star-shaped root system of a weight list.
    Roots(RootsArgs),
    /// Elliptic cover of a delta = 0 weight list and the summand census.
    Elliptic(EllipticArgs),
    /// Fedder's criterion for k[x,y,z]/(f).
    Fedder(FedderArgs),
    /// Splits the type of F^e_* O into positive roots.
    Decompose(DecomposeArgs),
}

#[derive(Args, Debug)]
pub struct DivisorSource {
    /// Divisor such as "1/2*[inf] - 1/3*[0] - 1/7*[1]".
    #[arg(allow_hyphen_values = true)]
    pub divisor: Option<String>,
    /// Weights r_1,...,r_n, read as the divisor sum of 1/r_i at inf, 0, 1, ...
    #[arg(long, conflicts_with = "divisor")]
    pub weights: Option<String>,
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub source: DivisorSource,
    #[arg(short, long)]
    pub p: u64,
    /// Largest Frobenius exponent in the summary.
    #[arg(long, default_value_t = 2)]
    pub e_max: u32,
    /// Genus of the base curve.
    #[arg(long, default_value_t = 0)]
    pub genus: u32,
    /// Legendre parameter for weights (2,2,2,2).
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
}

#[derive(Args, Debug)]
pub struct HilbertArgs {
    #[arg(allow_hyphen_values = true)]
    pub divisor: String,
    /// Last degree (or last index m in graded-piece mode).
    #[arg(short, default_value_t = 20)]
    pub n: u64,
    /// Characteristic; selects graded-piece mode together with --index.
    #[arg(short, long, requires = "index")]
    pub p: Option<u64>,
    #[arg(short, long, default_value_t = 1)]
    pub e: u32,
    /// Residue i in [0, q) of the graded piece.
    #[arg(short, long, requires = "p")]
    pub index: Option<u64>,
}

#[derive(Args, Debug)]
pub struct PushforwardArgs {
    #[arg(short, long)]
    pub p: u64,
    #[arg(short, long, default_value_t = 1)]
    pub e: u32,
    /// Degree of the line bundle O(a) on P^1.
    #[arg(short, long, default_value_t = 0, allow_hyphen_values = true)]
    pub a: i64,
    /// Weights of the weighted projective line.
    #[arg(long)]
    pub weights: Option<String>,
    /// Line bundle "l_1,...,l_n;d" on the weighted projective line.
    #[arg(long, requires = "weights", allow_hyphen_values = true)]
    pub gamma: Option<String>,
}

#[derive(Args, Debug)]
pub struct RootsArgs {
    #[arg(long)]
    pub weights: String,
    /// List every positive root (finite type only).
    #[arg(long)]
    pub enumerate: bool,
    /// Coefficients "rho,c_11,c_12,...,c_21,..." of a vector to classify.
    #[arg(long, allow_hyphen_values = true)]
    pub classify: Option<String>,
    /// Coefficient of delta for the classified vector.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub dhat: i64,
}

#[derive(Args, Debug)]
pub struct EllipticArgs {
    #[arg(long)]
    pub weights: String,
    #[arg(short, long)]
    pub p: u64,
    #[arg(short, long, default_value_t = 1)]
    pub e: u32,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    /// Count points over F_{p^k} for k = 1..=extension.
    #[arg(long, default_value_t = 1)]
    pub extension: u32,
}

#[derive(Args, Debug)]
pub struct FedderArgs {
    #[arg(short, long)]
    pub p: u64,
    #[arg(allow_hyphen_values = true)]
    pub polynomial: String,
}

#[derive(Args, Debug)]
pub struct DecomposeArgs {
    #[arg(long)]
    pub weights: String,
    #[arg(short, long)]
    pub p: u64,
    #[arg(short, long, default_value_t = 1)]
    pub e: u32,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Input(String),
}

fn input<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

/// A rendered report and whether its verdict is undecided.
struct Rendered {
    json: String,
    text: String,
    unknown: bool,
}

fn render<T: Serialize>(report: &T, unknown: bool) -> Rendered {
    let value = serde_json::to_value(report).expect("reports serialize");
    Rendered {
        json: serde_json::to_string_pretty(report).expect("reports serialize") + "\n",
        text: to_text(&value),
        unknown,
    }
}

pub fn run(cli: &Cli) -> Outcome {
    run_with_env(cli, std::env::var(MAX_FIELD_ENV).ok())
}

/// [`run`] with the field-size limit passed explicitly.
pub fn run_with_env(cli: &Cli, max_field: Option<String>) -> Outcome {
    let result = match &cli.command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::Hilbert(a) => cmd_hilbert(a),
        Command::Pushforward(a) => cmd_pushforward(a),
        Command::Roots(a) => cmd_roots(a),
        Command::Elliptic(a) => parse_max_field(max_field).and_then(|m| cmd_elliptic(a, m)),
        Command::Fedder(a) => cmd_fedder(a),
        Command::Decompose(a) => cmd_decompose(a),
    };
    match result {
        Ok(r) => Outcome {
            code: if cli.strict && r.unknown { EXIT_UNKNOWN } else { EXIT_OK },
            stdout: match cli.format {
                Format::Json => r.json,
                Format::Text => r.text,
            },
            stderr: if r.unknown && cli.strict {
                "verdict is UNKNOWN\n".into()
            } else {
                String::new()
            },
        },
        Err(e) => Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn parse_max_field(raw: Option<String>) -> Result<u64, CliError> {
    match raw {
        None => Ok(DEFAULT_MAX_FIELD),
        Some(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("{MAX_FIELD_ENV}={s:?} is not a non-negative integer"))),
    }
}

fn weights_of(text: &str) -> Result<Weights, CliError> {
    Weights::new(parse_weights(text)?).map_err(input)
}

fn rational_arg(text: &str) -> Result<Rational, CliError> {
    let text = text.trim();
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    // Reuse the divisor grammar for the literal.
    let d = parse_divisor(&format!("{body}*[inf]"))?;
    let value = d.terms().first().map(|t| t.coefficient()).unwrap_or_default();
    Ok(if negative { -value } else { value })
}

fn source_divisor(src: &DivisorSource) -> Result<RationalDivisor, CliError> {
    match (&src.divisor, &src.weights) {
        (Some(text), None) => Ok(parse_divisor(text)?),
        (None, Some(w)) => {
            let r = parse_weights(w)?;
            Weights::new(r.clone()).map_err(input)?;
            Ok(divisor_from_weights(&r))
        }
        _ => Err(CliError::Input("give a divisor or --weights".into())),
    }
}

fn cmd_analyze(a: &AnalyzeArgs) -> Result<Rendered, CliError> {
    let divisor = source_divisor(&a.source)?;
    let lambda = a.lambda.as_deref().map(rational_arg).transpose()?;
    let options = AnalyzeOptions { e_max: a.e_max, genus: a.genus, lambda };
    let r = analyze(&divisor, a.p, &options).map_err(input)?;
    let report = AnalyzeReport {
        schema_version: SCHEMA_VERSION,
        input: AnalyzeInput {
            divisor: render_divisor(&r.divisor),
            weights: r.weights.weights().to_vec(),
            p: r.p,
            e: a.e_max,
            genus: r.genus,
        },
        delta: rat(&r.delta),
        singularity: r.singularity.as_str(),
        fpure: r.fpure.as_str(),
        verdict: (&r.verdict).into(),
        frobenius: r.frobenius.iter().map(Into::into).collect(),
        citations: r.citations.clone(),
    };
    Ok(render(&report, r.verdict.status == VerdictStatus::Unknown))
}

fn cmd_hilbert(a: &HilbertArgs) -> Result<Rendered, CliError> {
    let divisor = parse_divisor(&a.divisor)?;
    let dims = match (a.p, a.index) {
        (Some(p), Some(i)) => graded_piece_dims(&divisor, p, a.e, i, a.n).map_err(input)?,
        _ => divisor.hilbert_series_window(a.n).map_err(input)?,
    };
    let piece = a.p.is_some();
    let report = HilbertReport {
        schema_version: SCHEMA_VERSION,
        input: HilbertInput {
            divisor: render_divisor(&divisor),
            n: a.n,
            p: a.p,
            e: piece.then_some(a.e),
            index: a.index,
        },
        degree: rat(&divisor.degree()),
        dims,
        citations: Vec::new(),
    };
    Ok(render(&report, false))
}

fn parse_gamma(weights: &Weights, text: &str) -> Result<ffrt_core::PicElement, CliError> {
    let bad = || CliError::Input(format!("line bundle {text:?} is not of the form \"l_1,...,l_n;d\""));
    let (ls, d) = text.split_once(';').ok_or_else(bad)?;
    let l: Vec<i64> = if ls.trim().is_empty() {
        Vec::new()
    } else {
        ls.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect::<Result<_, _>>()?
    };
    let d: i64 = d.trim().parse().map_err(|_| bad())?;
    weights.normalize(&l, d).map_err(input)
}

fn cmd_pushforward(a: &PushforwardArgs) -> Result<Rendered, CliError> {
    let split = frob_split_p1(a.a, a.p, a.e).map_err(input)?;
    let mut citations = Vec::new();
    let orbifold = match &a.weights {
        None => None,
        Some(w) => {
            let weights = weights_of(w)?;
            let gamma = match &a.gamma {
                Some(g) => parse_gamma(&weights, g)?,
                None => weights.zero(),
            };
            let t = type_of_pushforward(&weights, &gamma, a.p, a.e).map_err(input)?;
            let degree = orb_degree(&t, &weights).map_err(input)?;
            let det = if gamma.is_zero() {
                pushforward_determinant(&weights, a.p, a.e).map_err(input)?.map(|d| d.to_string())
            } else {
                None
            };
            citations.push(citation::POSITIVE_ROOT_CLASSIFICATION);
            Some(OrbifoldPushforward {
                orb_type: (&t).into(),
                degree: rat(&degree),
                slope: rat(&slope(&t, &weights).map_err(input)?),
                c1: rat(&c1_pushforward(&gamma.degree(), 1, a.p, a.e, &weights)),
                determinant: det,
            })
        }
    };
    let report = PushforwardReport {
        schema_version: SCHEMA_VERSION,
        input: PushforwardInput {
            a: a.a,
            p: a.p,
            e: a.e,
            weights: a.weights.as_deref().map(parse_weights).transpose()?,
            gamma: a.gamma.clone(),
        },
        splitting_p1: split.degrees().to_vec(),
        orbifold,
        citations,
    };
    Ok(render(&report, false))
}

fn cmd_roots(a: &RootsArgs) -> Result<Rendered, CliError> {
    let weights = weights_of(&a.weights)?;
    let graph = StarGraph::new(&weights);
    let ade = graph.ade_type();
    let roots = if ade.is_some() { Some(enumerate_positive_roots(&weights).map_err(input)?) } else { None };
    let classification = match &a.classify {
        None => None,
        Some(text) => {
            let flat = parse_weights(text)?;
            if flat.len() != graph.vertex_count() {
                return Err(CliError::Input(format!(
                    "vector has {} coefficients, the graph has {} vertices",
                    flat.len(),
                    graph.vertex_count()
                )));
            }
            let v = graph.unflatten(&flat);
            let hat = HatVector::new(v.clone(), a.dhat);
            let class = if v.is_zero() {
                "not_root"
            } else {
                match graph.classify_root(&v).map_err(input)? {
                    RootClass::Real => "real",
                    RootClass::Imaginary => "imaginary",
                    RootClass::NotRoot => "not_root",
                }
            };
            Some(Classification {
                vector: (&v).into(),
                dhat: a.dhat,
                class,
                positive_root_hat: graph.is_positive_root_hat(&hat).map_err(input)?,
            })
        }
    };
    let report = RootsReport {
        schema_version: SCHEMA_VERSION,
        input: WeightsInput { weights: weights.weights().to_vec() },
        delta: rat(&weights.delta()),
        vertex_count: graph.vertex_count(),
        finite_type: ade.is_some(),
        ade_type: ade.map(|t| t.to_string()),
        positive_root_count: roots.as_ref().map(Vec::len),
        rmax: roots.as_ref().map(|r| r.iter().map(|v| v.rho).max().unwrap_or(0)),
        roots: if a.enumerate { roots.as_ref().map(|r| r.iter().map(Into::into).collect()) } else { None },
        classification,
        citations: vec![citation::POSITIVE_ROOT_CLASSIFICATION],
    };
    Ok(render(&report, false))
}

fn cmd_elliptic(a: &EllipticArgs, max_field: u64) -> Result<Rendered, CliError> {
    let weights = weights_of(&a.weights)?;
    let lambda = match &a.lambda {
        Some(text) => Some(rational_arg(text)?),
        None => cross_ratio_lambda(weights.points()),
    };
    let curve = cover_model(&weights, a.p, lambda.as_ref()).map_err(input)?;
    let ord = is_ordinary(&curve).map_err(input)?;
    let point_counts = (1..=a.extension)
        .map(|k| {
            point_count(&curve, k, max_field)
                .map(|count| PointCount { k, count })
                .map_err(|e| match e {
                    EllipticError::FieldTooLarge { .. } => CliError::Input(format!("{e} (set {MAX_FIELD_ENV})")),
                    e => input(e),
                })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let fsplit = fsplit_delta0(&weights, a.p, lambda.as_ref()).map_err(input)?;
    let census = summand_census_delta0(&weights, a.p, a.e, lambda.as_ref()).map_err(input)?;
    let (mode, census_key) = match census.mode {
        CensusMode::Ordinary => ("ordinary", citation::ORDINARY_PUSHFORWARD),
        CensusMode::Supersingular => ("supersingular", citation::SUPERSINGULAR_PUSHFORWARD),
    };
    let report = EllipticReport {
        schema_version: SCHEMA_VERSION,
        input: EllipticInput {
            weights: weights.weights().to_vec(),
            p: a.p,
            e: a.e,
            lambda: lambda.as_ref().filter(|_| weights.len() == 4).map(rat),
        },
        model: curve.to_string(),
        automorphism_order: curve.automorphism().order(),
        hasse: ord.hasse,
        trace: ord.trace,
        ordinary: ord.ordinary,
        fsplit,
        point_counts,
        census: CensusJson {
            mode,
            total_rank: census.total_rank(),
            summands: census
                .summands
                .iter()
                .map(|s| SummandJson { rank: s.rank, multiplicity: s.multiplicity, label: s.label.clone() })
                .collect(),
            det: match &census.det_class {
                DetClass::Class(c) => c.to_string(),
                DetClass::DegreeOnly(d) => format!("degree {}", rat(d)),
            },
            orbits: census.orbits.as_ref().map(|o| o.orbits.clone()),
        },
        citations: vec![citation::ELLIPTIC_COVER_FSPLIT, census_key],
    };
    Ok(render(&report, false))
}

fn cmd_fedder(a: &FedderArgs) -> Result<Rendered, CliError> {
    let terms = poly::parse_polynomial(&a.polynomial)?;
    let f = Poly3::from_terms(a.p, &terms);
    let fpure = fedder_is_fpure(&f).map_err(input)?;
    let report = FedderReport {
        schema_version: SCHEMA_VERSION,
        input: FedderInput { polynomial: a.polynomial.clone(), p: a.p },
        reduced: f.to_string(),
        fpure,
        citations: vec![citation::FEDDER_CRITERION],
    };
    Ok(render(&report, false))
}

fn cmd_decompose(a: &DecomposeArgs) -> Result<Rendered, CliError> {
    let weights = weights_of(&a.weights)?;
    let verdict = indecomposability_verdict(&weights, a.p, a.e).map_err(input)?;
    let input_rec = DecomposeInput { weights: weights.weights().to_vec(), p: a.p, e: a.e };
    let total = type_of_pushforward(&weights, &weights.zero(), a.p, a.e).map_err(input)?;
    let mut report = DecomposeReport {
        schema_version: SCHEMA_VERSION,
        input: input_rec,
        status: "",
        reason: None,
        orb_type: Some((&total).into()),
        ade_type: None,
        rmax: None,
        pieces: Vec::new(),
        citations: Vec::new(),
    };
    let mut unknown = false;
    match verdict {
        IndecomposabilityVerdict::Indecomposable { citation } => {
            report.status = "indecomposable";
            report.citations.push(citation);
        }
        IndecomposabilityVerdict::Decomposes(cert) => {
            report.status = "decomposes";
            report.ade_type = Some(cert.ade.to_string());
            report.rmax = Some(cert.rmax);
            report.pieces = cert.pieces.iter().map(Into::into).collect();
            report.citations.push(citation::POSITIVE_ROOT_CLASSIFICATION);
        }
        IndecomposabilityVerdict::DelegatedDelta0 => {
            report.status = "delta_zero";
            report.reason = Some("decided by the elliptic-cover census; see the elliptic command");
            report.citations.push(citation::ELLIPTIC_COVER_FSPLIT);
        }
        IndecomposabilityVerdict::Unknown { reason } => {
            report.status = "unknown";
            report.reason = Some(reason);
            unknown = true;
        }
    }
    Ok(render(&report, unknown))
}
