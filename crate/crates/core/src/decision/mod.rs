//! Verdicts: singularity class, F-purity and finite F-representation type.

mod fedder;

pub use fedder::{fedder_is_fpure, FedderError, Poly3};

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::arith::{is_prime, Rational};
use crate::citation;
use crate::elliptic::{cover_model, cross_ratio_lambda, is_ordinary, Delta0Kind, EllipticError};
use crate::frobcalc::{frob_split_p1, slope, type_of_pushforward, FrobError, OrbType, SplittingType};
use crate::picard::{PicardError, Weights};
use crate::qdiv::{QdivError, RationalDivisor};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DecisionError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("graded piece index {i} is outside [0, {q})")]
    IndexOutOfRange { i: u64, q: u64 },
    #[error(transparent)]
    Divisor(#[from] QdivError),
    #[error(transparent)]
    Picard(#[from] PicardError),
    #[error(transparent)]
    Frobenius(#[from] FrobError),
    #[error(transparent)]
    Elliptic(#[from] EllipticError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SingularityClass {
    LogTerminal,
    LogCanonicalNotLogTerminal,
    NotLogCanonical,
}

impl SingularityClass {
    pub fn as_str(self) -> &'static str {
        match self {
            SingularityClass::LogTerminal => "log_terminal",
            SingularityClass::LogCanonicalNotLogTerminal => "log_canonical_not_lt",
            SingularityClass::NotLogCanonical => "not_log_canonical",
        }
    }
}

impl fmt::Display for SingularityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Sign of `δ`: negative is log terminal, zero is log canonical only.
pub fn singularity_class(weights: &Weights) -> SingularityClass {
    let delta = weights.delta();
    if delta.is_negative() {
        SingularityClass::LogTerminal
    } else if delta.is_zero() {
        SingularityClass::LogCanonicalNotLogTerminal
    } else {
        SingularityClass::NotLogCanonical
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VerdictStatus {
    Ffrt,
    NotFfrt,
    Unknown,
}

impl VerdictStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictStatus::Ffrt => "FFRT",
            VerdictStatus::NotFfrt => "NOT_FFRT",
            VerdictStatus::Unknown => "UNKNOWN",
        }
    }
}

impl fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `citation` is empty only for `Unknown`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub citation: &'static str,
    pub notes: Vec<String>,
}

impl Verdict {
    fn decided(status: VerdictStatus, citation: &'static str) -> Self {
        Verdict { status, citation, notes: Vec::new() }
    }
}

/// FFRT verdict for `R(C, D)` with `C` of the given genus and fractional
/// weights `W`.
pub fn ffrt_verdict(weights: &Weights, p: u64, genus: u32) -> Result<Verdict, DecisionError> {
    if !is_prime(p) {
        return Err(DecisionError::NotPrime(p));
    }
    if genus >= 1 {
        return Ok(Verdict::decided(VerdictStatus::NotFfrt, citation::POSITIVE_GENUS_NOT_FFRT));
    }
    let r = weights.weights();
    if !r.is_empty() && r.iter().all(|&ri| ri as u64 == p) {
        return Ok(Verdict::decided(VerdictStatus::Ffrt, citation::FROBENIUS_SANDWICH_FFRT));
    }
    if r.iter().all(|&ri| !(ri as u64).is_multiple_of(p)) {
        return Ok(if weights.delta().is_negative() {
            Verdict::decided(VerdictStatus::Ffrt, citation::FINITE_TYPE_FFRT)
        } else {
            Verdict::decided(VerdictStatus::NotFfrt, citation::NONNEGATIVE_DELTA_NOT_FFRT)
        });
    }
    Ok(Verdict {
        status: VerdictStatus::Unknown,
        citation: "",
        notes: alloc::vec![
            alloc::format!("p = {p} divides some weight of {weights} but not every weight equals p"),
            citation::describe(citation::EXTERNAL_SANDWICH_EXAMPLES).to_string(),
        ],
    })
}

/// F-splitting of a `δ = 0` weighted projective line: `p ≡ 1 (mod m)` and the
/// elliptic cover is ordinary.
pub fn fsplit_delta0(
    weights: &Weights,
    p: u64,
    lambda: Option<&Rational>,
) -> Result<bool, DecisionError> {
    let kind = Delta0Kind::of(weights)?;
    let curve = cover_model(weights, p, lambda)?;
    let ordinary = is_ordinary(&curve)?.ordinary;
    Ok(p % kind.m() == 1 && ordinary)
}

/// `[hilbert_dim(D, qm + i) for m in 0..=N]`: the graded piece of `R^{1/q}`
/// in degrees `≡ i/q mod Z`.
pub fn graded_piece_dims(
    divisor: &RationalDivisor,
    p: u64,
    e: u32,
    i: u64,
    n: u64,
) -> Result<Vec<u64>, DecisionError> {
    if !is_prime(p) {
        return Err(DecisionError::NotPrime(p));
    }
    let q = crate::frobcalc::frobenius_degree(p, e)? as u64;
    if i >= q {
        return Err(DecisionError::IndexOutOfRange { i, q });
    }
    (0..=n).map(|m| Ok(divisor.hilbert_dim(q * m + i)?)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FPurity {
    Yes,
    No,
    Undetermined,
}

impl FPurity {
    pub fn as_str(self) -> &'static str {
        match self {
            FPurity::Yes => "yes",
            FPurity::No => "no",
            FPurity::Undetermined => "undetermined",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub e_max: u32,
    pub genus: u32,
    /// Legendre parameter for `(2,2,2,2)`; defaults to the cross-ratio of the
    /// four stacky points.
    pub lambda: Option<Rational>,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { e_max: 2, genus: 0, lambda: None }
    }
}

/// Type, slope and `P^1` splitting of `F^e_* O`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusSummary {
    pub e: u32,
    pub orb_type: OrbType,
    pub slope: Rational,
    pub splitting_p1: SplittingType,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisReport {
    pub divisor: RationalDivisor,
    pub weights: Weights,
    pub p: u64,
    pub genus: u32,
    pub delta: Rational,
    pub singularity: SingularityClass,
    pub fpure: FPurity,
    pub verdict: Verdict,
    pub frobenius: Vec<FrobeniusSummary>,
    /// Report keys used, verdict first, without repeats.
    pub citations: Vec<&'static str>,
}

pub fn analyze(
    divisor: &RationalDivisor,
    p: u64,
    options: &AnalyzeOptions,
) -> Result<AnalysisReport, DecisionError> {
    divisor.validate().map_err(QdivError::InvalidDivisor)?;
    if !is_prime(p) {
        return Err(DecisionError::NotPrime(p));
    }
    let (weights, _) = Weights::from_divisor(divisor)?;
    let delta = weights.delta();
    let singularity = singularity_class(&weights);
    let verdict = ffrt_verdict(&weights, p, options.genus)?;

    let mut citations = Vec::new();
    if !verdict.citation.is_empty() {
        citations.push(verdict.citation);
    }
    citations.push(citation::SINGULARITY_CLASS);

    let mut fpure = FPurity::Undetermined;
    if options.genus == 0 && delta.is_zero() {
        let lambda = options.lambda.clone().or_else(|| cross_ratio_lambda(weights.points()));
        match fsplit_delta0(&weights, p, lambda.as_ref()) {
            Ok(split) => {
                fpure = if split { FPurity::Yes } else { FPurity::No };
                citations.push(citation::ELLIPTIC_COVER_FSPLIT);
            }
            Err(DecisionError::Elliptic(
                EllipticError::CharacteristicDividesWeight { .. }
                | EllipticError::UnsupportedCharacteristic(_)
                | EllipticError::BadLambda,
            )) => {}
            Err(e) => return Err(e),
        }
    }

    let coprime = weights.weights().iter().all(|&r| !(r as u64).is_multiple_of(p));
    let mut frobenius = Vec::new();
    if options.genus == 0 && coprime {
        for e in 1..=options.e_max {
            let orb_type = type_of_pushforward(&weights, &weights.zero(), p, e)?;
            let slope = slope(&orb_type, &weights)?;
            let splitting_p1 = frob_split_p1(0, p, e)?;
            frobenius.push(FrobeniusSummary { e, orb_type, slope, splitting_p1 });
        }
    }

    Ok(AnalysisReport {
        divisor: divisor.clone(),
        weights,
        p,
        genus: options.genus,
        delta,
        singularity,
        fpure,
        verdict,
        frobenius,
        citations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::qdiv::{DivisorTerm, PointLabel};
    use alloc::vec;

    fn w(r: &[i64]) -> Weights {
        Weights::new(r.to_vec()).unwrap()
    }

    fn div(terms: &[(PointLabel, i64, i64)]) -> RationalDivisor {
        RationalDivisor::new(
            terms.iter().map(|(pt, s, r)| DivisorTerm::new(pt.clone(), *s, *r)).collect(),
        )
    }

    fn brenner() -> RationalDivisor {
        div(&[
            (PointLabel::Infinity, 1, 2),
            (PointLabel::integer(0), -1, 3),
            (PointLabel::integer(1), -1, 7),
        ])
    }

    #[test]
    fn singularity_examples() {
        assert_eq!(singularity_class(&w(&[2, 3, 5])), SingularityClass::LogTerminal);
        assert_eq!(singularity_class(&w(&[3, 3, 3])), SingularityClass::LogCanonicalNotLogTerminal);
        assert_eq!(singularity_class(&w(&[2, 3, 7])), SingularityClass::NotLogCanonical);
    }

    #[test]
    fn verdict_examples() {
        let v = ffrt_verdict(&w(&[2, 3, 7]), 5, 0).unwrap();
        assert_eq!(v.status, VerdictStatus::NotFfrt);
        assert_eq!(v.citation, citation::NONNEGATIVE_DELTA_NOT_FFRT);
        let v = ffrt_verdict(&w(&[2, 2, 2, 2]), 2, 0).unwrap();
        assert_eq!(v.status, VerdictStatus::Ffrt);
        assert_eq!(v.citation, citation::FROBENIUS_SANDWICH_FFRT);
        let v = ffrt_verdict(&w(&[2, 3, 7]), 7, 0).unwrap();
        assert_eq!(v.status, VerdictStatus::Unknown);
        assert!(!v.notes.is_empty());
        assert_eq!(ffrt_verdict(&w(&[2, 3, 5]), 7, 0).unwrap().status, VerdictStatus::Ffrt);
        assert_eq!(ffrt_verdict(&w(&[2, 3, 5]), 7, 1).unwrap().status, VerdictStatus::NotFfrt);
        assert_eq!(ffrt_verdict(&w(&[2, 3]), 4, 0), Err(DecisionError::NotPrime(4)));
    }

    #[test]
    fn fsplit_examples() {
        assert_eq!(fsplit_delta0(&w(&[3, 3, 3]), 7, None), Ok(true));
        assert_eq!(fsplit_delta0(&w(&[3, 3, 3]), 5, None), Ok(false));
        assert_eq!(fsplit_delta0(&w(&[2, 3, 6]), 11, None), Ok(false));
        assert_eq!(fsplit_delta0(&w(&[2, 3, 6]), 7, None), Ok(true));
        assert!(matches!(
            fsplit_delta0(&w(&[2, 3, 6]), 3, None),
            Err(DecisionError::Elliptic(EllipticError::CharacteristicDividesWeight { .. }))
        ));
    }

    #[test]
    fn graded_piece_examples() {
        let d = brenner();
        assert_eq!(graded_piece_dims(&d, 5, 1, 3, 2), Ok(vec![0, 0, 0]));
        assert_eq!(graded_piece_dims(&d, 5, 2, 0, 0), Ok(vec![1]));
        assert_eq!(
            graded_piece_dims(&d, 5, 1, 5, 2),
            Err(DecisionError::IndexOutOfRange { i: 5, q: 5 })
        );
    }

    #[test]
    fn analyze_examples() {
        let r = analyze(&brenner(), 5, &AnalyzeOptions::default()).unwrap();
        assert_eq!(r.delta, rat(1, 42));
        assert_eq!(r.singularity, SingularityClass::NotLogCanonical);
        assert_eq!(r.verdict.status, VerdictStatus::NotFfrt);
        assert_eq!(r.fpure, FPurity::Undetermined);
        assert_eq!(r.frobenius.len(), 2);
        assert_eq!(r.frobenius[0].slope, rat(2, 5) * rat(1, 42));

        let d = div(&[
            (PointLabel::Infinity, 1, 3),
            (PointLabel::integer(0), 1, 3),
            (PointLabel::integer(1), -1, 3),
        ]);
        let r = analyze(&d, 7, &AnalyzeOptions::default()).unwrap();
        assert!(r.delta.is_zero());
        assert_eq!(r.singularity, SingularityClass::LogCanonicalNotLogTerminal);
        assert_eq!(r.verdict.status, VerdictStatus::NotFfrt);
        assert_eq!(r.fpure, FPurity::Yes);

        let d = div(&[(PointLabel::Infinity, 1, 2), (PointLabel::integer(0), 1, 3)]);
        let r = analyze(&d, 7, &AnalyzeOptions::default()).unwrap();
        assert_eq!(r.delta, rat(-5, 6));
        assert_eq!(r.verdict.status, VerdictStatus::Ffrt);
        assert_eq!(r.citations[0], citation::FINITE_TYPE_FFRT);
    }
}
