//! Frobenius push-forwards on `P^1` and on weighted projective lines.
//!
//! On `P^1` the push-forward `F^e_* O(a)` splits as `⊕_{j<q} O(⌊(a − j)/q⌋)`
//! with `q = p^e`. On the weighted projective line the type of
//! `F^e_* O(γ)` is read off through `π_* F^e_* = F^e_* π_*`: the rank is `q`,
//! the `δ`-coefficient is the degree of `F^e_* O(π_* γ)`, and each flag
//! dimension `c_ij` is `q` minus the drop in that degree after twisting by
//! `−j a_i`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_traits::Zero;
use thiserror::Error;

use crate::arith::{checked_pow, int, is_prime, rat, Rational};
use crate::citation;
use crate::picard::{PicElement, PicardError, Weights};
use crate::qdiv::h0_p1;
use crate::rootlattice::{
    enumerate_positive_roots, AdeType, HatVector, LatticeVector, RootError, StarGraph,
};

/// Type `t(E) = (rk F) α_∗ + Σ (dim F_ij) α_ij + (deg F) δ` of a sheaf, with
/// `F = π_* E`.
pub type OrbType = HatVector;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FrobError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("Frobenius exponent must be at least 1")]
    ZeroExponent,
    #[error("p^e = {p}^{e} overflows")]
    Overflow { p: u64, e: u32 },
    #[error("characteristic {p} divides weight {r}")]
    CharacteristicDividesWeight { p: u64, r: i64 },
    #[error("type has rank zero")]
    ZeroRank,
    #[error("h0 profile window is too small to recover a splitting type")]
    WindowTooSmall,
    #[error("no bundle on P^1 has this h0 profile")]
    InconsistentProfile,
    #[error(transparent)]
    Picard(#[from] PicardError),
    #[error(transparent)]
    Root(#[from] RootError),
}

/// `q = p^e`, checking that `p` is prime and `e ≥ 1`.
pub fn frobenius_degree(p: u64, e: u32) -> Result<i64, FrobError> {
    if !is_prime(p) {
        return Err(FrobError::NotPrime(p));
    }
    if e == 0 {
        return Err(FrobError::ZeroExponent);
    }
    checked_pow(p, e)
        .and_then(|q| i64::try_from(q).ok())
        .ok_or(FrobError::Overflow { p, e })
}

fn check_coprime(weights: &Weights, p: u64) -> Result<(), FrobError> {
    match weights.weights().iter().find(|&&r| (r as u64).is_multiple_of(p)) {
        Some(&r) => Err(FrobError::CharacteristicDividesWeight { p, r }),
        None => Ok(()),
    }
}

/// Grothendieck splitting type: a multiset of degrees, kept sorted in
/// decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SplittingType {
    degrees: Vec<i64>,
}

impl SplittingType {
    pub fn new(mut degrees: Vec<i64>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        SplittingType { degrees }
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn rank(&self) -> usize {
        self.degrees.len()
    }

    /// Total degree `Σ b`.
    pub fn degree(&self) -> i64 {
        self.degrees.iter().sum()
    }

    /// `h^0(⊕ O(b) ⊗ O(k))`.
    pub fn h0_twist(&self, k: i64) -> u64 {
        self.degrees.iter().map(|&b| h0_p1(b + k)).sum()
    }
}

/// Splitting type of `F^e_* O_{P^1}(a)`: `{⌊(a − j)/q⌋ : 0 ≤ j < q}`.
pub fn frob_split_p1(a: i64, p: u64, e: u32) -> Result<SplittingType, FrobError> {
    let q = frobenius_degree(p, e)?;
    Ok(SplittingType::new((0..q).map(|j| (a - j).div_euclid(q)).collect()))
}

/// Total degree of `F^e_* O_{P^1}(a)` without materialising the splitting.
fn pushforward_degree_p1(a: i64, q: i64) -> i64 {
    // Each unit step in a crosses exactly one floor boundary.
    a - q + 1
}

/// `h^0` of the twists `E ⊗ O(k)` for `k = start, start + 1, …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H0Profile {
    pub start: i64,
    pub values: Vec<u64>,
}

impl H0Profile {
    pub fn of(split: &SplittingType, start: i64, end: i64) -> Self {
        H0Profile { start, values: (start..=end).map(|k| split.h0_twist(k)).collect() }
    }

    fn at(&self, k: i64) -> u64 {
        if k < self.start {
            0
        } else {
            self.values[(k - self.start) as usize]
        }
    }
}

/// Recovers a splitting type from its twisted `h^0` values.
///
/// The second difference `h(k) − 2h(k−1) + h(k−2)` counts the summands of
/// degree `−k`. The window must start where `h^0` vanishes and end where all
/// `rank` summands are globally generated.
pub fn splitting_from_h0_profile(
    profile: &H0Profile,
    rank: usize,
) -> Result<SplittingType, FrobError> {
    if profile.values.len() < 2 || profile.values[0] != 0 {
        return Err(FrobError::WindowTooSmall);
    }
    let end = profile.start + profile.values.len() as i64 - 1;
    let mut degrees = Vec::new();
    for k in profile.start..=end {
        let second =
            profile.at(k) as i64 - 2 * profile.at(k - 1) as i64 + profile.at(k - 2) as i64;
        if second < 0 {
            return Err(FrobError::InconsistentProfile);
        }
        degrees.extend(core::iter::repeat_n(-k, second as usize));
    }
    let top_slope = profile.at(end) as i64 - profile.at(end - 1) as i64;
    if degrees.len() != rank || top_slope != rank as i64 {
        return Err(FrobError::InconsistentProfile);
    }
    Ok(SplittingType::new(degrees))
}

/// Projection formula: `F^e_*(O(γ)) ⊗ O(γ') = F^e_*(O(γ + q γ'))`.
pub fn frob_twist(
    gamma: &PicElement,
    twist: &PicElement,
    p: u64,
    e: u32,
) -> Result<PicElement, FrobError> {
    let q = frobenius_degree(p, e)?;
    Ok(gamma.add(&twist.scale(q))?)
}

/// Type of `O(γ)`: rank one, flag `c_ij = 1` for `j ≤ l_i`, degree `d`.
pub fn line_bundle_type(gamma: &PicElement) -> OrbType {
    let arms = gamma
        .weights()
        .iter()
        .zip(gamma.l())
        .map(|(&r, &l)| (1..r).map(|j| i64::from(j <= l)).collect())
        .collect();
    HatVector::new(LatticeVector { rho: 1, arms }, gamma.d())
}

/// Type of `F^e_* O(γ)` by the degree-drop method.
pub fn type_of_pushforward(
    weights: &Weights,
    gamma: &PicElement,
    p: u64,
    e: u32,
) -> Result<OrbType, FrobError> {
    let q = frobenius_degree(p, e)?;
    check_coprime(weights, p)?;
    if gamma.weights() != weights.weights() {
        return Err(PicardError::WeightsMismatch.into());
    }
    let d0 = pushforward_degree_p1(gamma.pushforward_to_p1(), q);
    let mut arms = Vec::with_capacity(weights.len());
    for (i, &r) in weights.weights().iter().enumerate() {
        let a_i = weights.a(i);
        let arm = (1..r)
            .map(|j| {
                let twisted = frob_twist(gamma, &a_i.scale(-j), p, e)?;
                let dj = pushforward_degree_p1(twisted.pushforward_to_p1(), q);
                Ok(q - (d0 - dj))
            })
            .collect::<Result<Vec<_>, FrobError>>()?;
        arms.push(arm);
    }
    Ok(HatVector::new(LatticeVector { rho: q, arms }, d0))
}

/// `deg c_1(F^e_* E)` by iterating `c_1(F_* E) = (p−1)/2 · rk E · K + c_1(E)`
/// `e` times, the rank growing by a factor `p` each step.
pub fn c1_pushforward(c1_deg: &Rational, rank: u64, p: u64, e: u32, weights: &Weights) -> Rational {
    let deg_k = weights.delta();
    let half_step = rat(p as i64 - 1, 2);
    let mut c1 = c1_deg.clone();
    let mut r = rank as i64;
    for _ in 0..e {
        c1 += &half_step * int(r) * &deg_k;
        r *= p as i64;
    }
    c1
}

/// Closed form of [`c1_pushforward`]: `rk · (q − 1)/2 · deg K + c_1`.
pub fn c1_pushforward_closed(c1_deg: &Rational, rank: u64, p: u64, e: u32, weights: &Weights) -> Rational {
    let q = (p as i64).pow(e);
    int(rank as i64) * rat(q - 1, 2) * weights.delta() + c1_deg
}

/// Determinant of `F^e_* O` in `Γ`, `(q − 1)/2 · K`, when `(q − 1)/2` is an
/// integer. For `p = 2` the class only exists with rational coefficients.
pub fn pushforward_determinant(weights: &Weights, p: u64, e: u32) -> Result<Option<PicElement>, FrobError> {
    let q = frobenius_degree(p, e)?;
    if (q - 1) % 2 != 0 {
        return Ok(None);
    }
    Ok(Some(weights.canonical_class().scale((q - 1) / 2)))
}

/// `deg = dhat + Σ_{i,j} c_ij / r_i`, the orbifold degree of a sheaf with
/// type `t`.
pub fn orb_degree(t: &OrbType, weights: &Weights) -> Result<Rational, FrobError> {
    let graph = StarGraph::new(weights);
    if t.base.arms.iter().map(Vec::len).collect::<Vec<_>>() != graph.arm_lengths() {
        return Err(RootError::GraphMismatch.into());
    }
    Ok(t.base
        .arms
        .iter()
        .zip(weights.weights())
        .fold(int(t.dhat), |acc, (arm, &r)| acc + rat(arm.iter().sum(), r)))
}

/// `μ = deg / rk`.
pub fn slope(t: &OrbType, weights: &Weights) -> Result<Rational, FrobError> {
    if t.rho() == 0 {
        return Err(FrobError::ZeroRank);
    }
    Ok(orb_degree(t, weights)? / int(t.rho()))
}

/// Slopes of the successive quotients of the canonical filtration of
/// `F^* F_* W` for a bundle `W` of slope `mu_w`: `mu_w + ℓ δ`, `ℓ < p`.
///
/// The quotient `F_ℓ / F_{ℓ+1}` is `W ⊗ Ω^ℓ`; the top quotient is read as
/// `W` itself.
pub fn canonical_filtration_slopes(mu_w: &Rational, p: u64, weights: &Weights) -> Vec<Rational> {
    let delta = weights.delta();
    (0..p as i64).map(|l| mu_w + int(l) * &delta).collect()
}

/// A type written as a sum of positive roots of the extended lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionCertificate {
    pub ade: AdeType,
    pub rmax: i64,
    pub total: OrbType,
    pub pieces: Vec<OrbType>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IndecomposabilityVerdict {
    Indecomposable { citation: &'static str },
    Decomposes(DecompositionCertificate),
    DelegatedDelta0,
    Unknown { reason: &'static str },
}

/// Indecomposability of `F^e_* O` on the weighted projective line.
///
/// * `δ > 0`: indecomposable by slope stability.
/// * `δ = 0`: answered by the elliptic-cover census.
/// * `δ < 0`: every indecomposable has rank at most `r_max`; when `q`
///   exceeds it the type splits into positive roots, and the certificate
///   lists such a splitting.
pub fn indecomposability_verdict(
    weights: &Weights,
    p: u64,
    e: u32,
) -> Result<IndecomposabilityVerdict, FrobError> {
    frobenius_degree(p, e)?;
    check_coprime(weights, p)?;
    let delta = weights.delta();
    if delta > Rational::zero() {
        return Ok(IndecomposabilityVerdict::Indecomposable {
            citation: citation::STABLE_PUSHFORWARD,
        });
    }
    if delta.is_zero() {
        return Ok(IndecomposabilityVerdict::DelegatedDelta0);
    }
    let total = type_of_pushforward(weights, &weights.zero(), p, e)?;
    let graph = StarGraph::new(weights);
    let ade = graph.ade_type().ok_or_else(|| RootError::NotFiniteType(weights.clone()))?;
    let roots: Vec<LatticeVector> = enumerate_positive_roots(weights)?;
    let rmax = roots.iter().map(|r| r.rho).max().unwrap_or(0);
    match decompose_into_roots(&graph, &total, &roots) {
        Some(pieces) if pieces.len() >= 2 => {
            Ok(IndecomposabilityVerdict::Decomposes(DecompositionCertificate { ade, rmax, total, pieces }))
        }
        _ => Ok(IndecomposabilityVerdict::Unknown {
            reason: "type is itself a positive root of rank at most r_max",
        }),
    }
}

/// Writes `t` as a sum of positive roots `β + mδ` with `rk β ≥ 1`.
///
/// Roots are tried in decreasing `(ρ, height, coefficients)` order with
/// backtracking, and pieces are emitted in that order, so the answer is
/// canonical. The whole `δ`-coefficient goes to the first piece, which is
/// allowed because `α_∗ + mδ` generates the positive cone for every `m`.
pub fn decompose_into_roots(
    graph: &StarGraph,
    t: &OrbType,
    roots: &[LatticeVector],
) -> Option<Vec<OrbType>> {
    let mut flat_roots: Vec<Vec<i64>> =
        roots.iter().filter(|r| r.rho >= 1).map(|r| graph.flatten(r)).collect();
    flat_roots.sort_by(|a, b| {
        let key = |v: &Vec<i64>| (v[0], v.iter().sum::<i64>());
        key(b).cmp(&key(a)).then_with(|| b.cmp(a))
    });
    let target = graph.flatten(&t.base);
    if target.iter().any(|&c| c < 0) {
        return None;
    }
    let mut chosen = Vec::new();
    let mut failed = BTreeSet::new();
    if !search(&flat_roots, target, 0, &mut chosen, &mut failed) {
        return None;
    }
    let mut pieces: Vec<OrbType> = chosen
        .iter()
        .map(|&k| HatVector::new(graph.unflatten(&flat_roots[k]), 0))
        .collect();
    if let Some(first) = pieces.first_mut() {
        first.dhat = t.dhat;
    }
    Some(pieces)
}

fn search(
    roots: &[Vec<i64>],
    rem: Vec<i64>,
    from: usize,
    chosen: &mut Vec<usize>,
    failed: &mut BTreeSet<(Vec<i64>, usize)>,
) -> bool {
    if rem.iter().all(|&c| c == 0) {
        return true;
    }
    if rem[0] == 0 || failed.contains(&(rem.clone(), from)) {
        return false;
    }
    for k in from..roots.len() {
        let root = &roots[k];
        if root.iter().zip(&rem).any(|(a, b)| a > b) {
            continue;
        }
        let next: Vec<i64> = rem.iter().zip(root).map(|(a, b)| a - b).collect();
        chosen.push(k);
        if search(roots, next, k, chosen, failed) {
            return true;
        }
        chosen.pop();
    }
    failed.insert((rem, from));
    false
}
