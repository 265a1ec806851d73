//! JSON report records. Field order is declaration order, rationals are
//! `"n"` or `"n/d"` strings.

use ffrt_core::decision::FrobeniusSummary;
use ffrt_core::{HatVector, LatticeVector, Rational, Verdict};
use serde::Serialize;
use serde_json::Value;

use crate::dsl::RatText;

pub const SCHEMA_VERSION: u32 = 1;

pub fn rat(x: &Rational) -> String {
    RatText(x).to_string()
}

#[derive(Serialize)]
pub struct TypeJson {
    pub rho: i64,
    pub flags: Vec<Vec<i64>>,
    pub dhat: i64,
}

impl From<&HatVector> for TypeJson {
    fn from(t: &HatVector) -> Self {
        TypeJson { rho: t.base.rho, flags: t.base.arms.clone(), dhat: t.dhat }
    }
}

#[derive(Serialize)]
pub struct VectorJson {
    pub rho: i64,
    pub flags: Vec<Vec<i64>>,
}

impl From<&LatticeVector> for VectorJson {
    fn from(v: &LatticeVector) -> Self {
        VectorJson { rho: v.rho, flags: v.arms.clone() }
    }
}

#[derive(Serialize)]
pub struct VerdictJson {
    pub status: &'static str,
    pub citation: &'static str,
    pub notes: Vec<String>,
}

impl From<&Verdict> for VerdictJson {
    fn from(v: &Verdict) -> Self {
        VerdictJson { status: v.status.as_str(), citation: v.citation, notes: v.notes.clone() }
    }
}

#[derive(Serialize)]
pub struct FrobeniusJson {
    pub e: u32,
    #[serde(rename = "type")]
    pub orb_type: TypeJson,
    pub slope: String,
    #[serde(rename = "splitting_P1")]
    pub splitting_p1: Vec<i64>,
}

impl From<&FrobeniusSummary> for FrobeniusJson {
    fn from(s: &FrobeniusSummary) -> Self {
        FrobeniusJson {
            e: s.e,
            orb_type: (&s.orb_type).into(),
            slope: rat(&s.slope),
            splitting_p1: s.splitting_p1.degrees().to_vec(),
        }
    }
}

#[derive(Serialize)]
pub struct AnalyzeInput {
    pub divisor: String,
    pub weights: Vec<i64>,
    pub p: u64,
    pub e: u32,
    pub genus: u32,
}

#[derive(Serialize)]
pub struct AnalyzeReport {
    pub schema_version: u32,
    pub input: AnalyzeInput,
    pub delta: String,
    pub singularity: &'static str,
    pub fpure: &'static str,
    pub verdict: VerdictJson,
    pub frobenius: Vec<FrobeniusJson>,
    pub citations: Vec<&'static str>,
}

#[derive(Serialize)]
pub struct HilbertInput {
    pub divisor: String,
    pub n: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub index: Option<u64>,
}

#[derive(Serialize)]
pub struct HilbertReport {
    pub schema_version: u32,
    pub input: HilbertInput,
    pub degree: String,
    /// `dim R_m` for `m = 0..=n`, or `dim R_{qm+i}` in graded-piece mode.
    pub dims: Vec<u64>,
    pub citations: Vec<&'static str>,
}

#[derive(Serialize)]
pub struct PushforwardInput {
    pub a: i64,
    pub p: u64,
    pub e: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gamma: Option<String>,
}

#[derive(Serialize)]
pub struct OrbifoldPushforward {
    #[serde(rename = "type")]
    pub orb_type: TypeJson,
    pub degree: String,
    pub slope: String,
    pub c1: String,
    pub determinant: Option<String>,
}

#[derive(Serialize)]
pub struct PushforwardReport {
    pub schema_version: u32,
    pub input: PushforwardInput,
    #[serde(rename = "splitting_P1")]
    pub splitting_p1: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbifold: Option<OrbifoldPushforward>,
    pub citations: Vec<&'static str>,
}

#[derive(Serialize)]
pub struct Classification {
    pub vector: VectorJson,
    pub dhat: i64,
    pub class: &'static str,
    pub positive_root_hat: bool,
}

#[derive(Serialize)]
pub struct RootsReport {
    pub schema_version: u32,
    pub input: WeightsInput,
    pub delta: String,
    pub vertex_count: usize,
    pub finite_type: bool,
    pub ade_type: Option<String>,
    pub positive_root_count: Option<usize>,
    pub rmax: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub roots: Option<Vec<VectorJson>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classification: Option<Classification>,
    pub citations: Vec<&'static str>,
}

#[derive(Serialize)]
pub struct WeightsInput {
    pub weights: Vec<i64>,
}

#[derive(Serialize)]
pub struct EllipticInput {
    pub weights: Vec<i64>,
    pub p: u64,
    pub e: u32,
    pub lambda: Option<String>,
}

#[derive(Serialize)]
pub struct PointCount {
    pub k: u32,
    pub count: u64,
}

#[derive(Serialize)]
pub struct SummandJson {
    pub rank: u64,
    pub multiplicity: u64,
    pub label: String,
}

#[derive(Serialize)]
pub struct CensusJson {
    pub mode: &'static str,
    pub summands: Vec<SummandJson>,
    pub total_rank: u64,
    pub det: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbits: Option<Vec<Vec<u64>>>,
}

#[derive(Serialize)]
pub struct EllipticReport {
    pub schema_version: u32,
    pub input: EllipticInput,
    pub model: String,
    pub automorphism_order: u64,
    pub hasse: u64,
    pub trace: i64,
    pub ordinary: bool,
    pub fsplit: bool,
    pub point_counts: Vec<PointCount>,
    pub census: CensusJson,
    pub citations: Vec<&'static str>,
}

#[derive(Serialize)]
pub struct FedderInput {
    pub polynomial: String,
    pub p: u64,
}

#[derive(Serialize)]
pub struct FedderReport {
    pub schema_version: u32,
    pub input: FedderInput,
    pub reduced: String,
    pub fpure: bool,
    pub citations: Vec<&'static str>,
}

#[derive(Serialize)]
pub struct DecomposeInput {
    pub weights: Vec<i64>,
    pub p: u64,
    pub e: u32,
}

#[derive(Serialize)]
pub struct DecomposeReport {
    pub schema_version: u32,
    pub input: DecomposeInput,
    pub status: &'static str,
    pub reason: Option<&'static str>,
    #[serde(rename = "type")]
    pub orb_type: Option<TypeJson>,
    pub ade_type: Option<String>,
    pub rmax: Option<i64>,
    pub pieces: Vec<TypeJson>,
    pub citations: Vec<&'static str>,
}

/// `key: value` lines for the text format, nested keys joined by dots.
pub fn to_text(value: &Value) -> String {
    let mut out = String::new();
    flatten(value, "", &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => Some(format!(
            "[{}]",
            items.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")
        )),
        Value::Array(items) if items.iter().all(|x| x.is_array()) => Some(format!(
            "[{}]",
            items.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")
        )),
        _ => None,
    }
}

fn flatten(value: &Value, prefix: &str, out: &mut String) {
    if let Some(s) = scalar(value) {
        out.push_str(&format!("{prefix}: {s}\n"));
        return;
    }
    let join = |key: &str| if prefix.is_empty() { key.to_string() } else { format!("{prefix}.{key}") };
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(v, &join(k), out);
            }
        }
        Value::Array(items) => {
            for (k, v) in items.iter().enumerate() {
                flatten(v, &join(&k.to_string()), out);
            }
        }
        _ => unreachable!("scalars handled above"),
    }
}
