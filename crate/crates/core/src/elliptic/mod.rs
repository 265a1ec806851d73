//! Weighted projective lines with `δ = 0` through their elliptic covers.
//!
//! The four weight lists with `δ = 0` are `(2,3,6)`, `(2,4,4)`, `(3,3,3)` and
//! `(2,2,2,2)`. Each is `[E / μ_m]` for an elliptic curve `E` with a `μ_m`
//! action fixing the origin, `m = lcm(r_i)`. The curve is modelled in
//! Weierstrass form `y² = f(x)` over `F_p`:
//!
//! | weights     | model                     | `m` |
//! |-------------|---------------------------|-----|
//! | `(2,3,6)`   | `y² = x³ + 1`             | 6   |
//! | `(3,3,3)`   | `y² = x³ + 1`             | 3   |
//! | `(2,4,4)`   | `y² = x³ − x`             | 4   |
//! | `(2,2,2,2)` | `y² = x(x − 1)(x − λ)`    | 2   |
//!
//! Ordinarity of `E` decides the shape of `F^e_* O`: a single indecomposable
//! `G_q` when `E` is supersingular, and `r + 1` indecomposables with
//! `r = (q − 1)/m` when `E` is ordinary.

pub mod field;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::arith::{is_prime, pow_mod, Rational};
use crate::frobcalc::c1_pushforward;
use crate::picard::{PicElement, Weights};
use field::{inverse_mod_p, FiniteField};

/// Largest field size [`point_count`] enumerates by default.
pub const DEFAULT_MAX_FIELD: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EllipticError {
    #[error("weights {0} do not have delta = 0")]
    NotDeltaZero(Weights),
    #[error("characteristic {p} divides weight {r}")]
    CharacteristicDividesWeight { p: u64, r: i64 },
    #[error("characteristic {0} is not supported by Weierstrass models y^2 = f(x)")]
    UnsupportedCharacteristic(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("Legendre parameter is missing or degenerate mod p (must avoid 0 and 1)")]
    BadLambda,
    #[error("field of size {size} exceeds the enumeration limit {limit}")]
    FieldTooLarge { size: u128, limit: u64 },
    #[error("(q - 1)/m = ({q} - 1)/{m} is not an integer")]
    NonIntegralOrbitCount { q: u64, m: u64 },
    #[error("Hasse invariant and trace of Frobenius disagree for {0}")]
    HasseTraceMismatch(WeierstrassCurve),
}

/// The four `δ = 0` weight lists.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Delta0Kind {
    W236,
    W244,
    W333,
    W2222,
}

impl Delta0Kind {
    pub fn of(weights: &Weights) -> Result<Self, EllipticError> {
        let mut r = weights.weights().to_vec();
        r.sort_unstable();
        match r.as_slice() {
            [2, 3, 6] => Ok(Delta0Kind::W236),
            [2, 4, 4] => Ok(Delta0Kind::W244),
            [3, 3, 3] => Ok(Delta0Kind::W333),
            [2, 2, 2, 2] => Ok(Delta0Kind::W2222),
            _ => Err(EllipticError::NotDeltaZero(weights.clone())),
        }
    }

    /// `m = lcm(r_i)`, the order of `ω` and of the `μ_m` action.
    pub fn m(self) -> u64 {
        match self {
            Delta0Kind::W236 => 6,
            Delta0Kind::W244 => 4,
            Delta0Kind::W333 => 3,
            Delta0Kind::W2222 => 2,
        }
    }
}

/// Generator of the `μ_m` action on the Weierstrass model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Automorphism {
    /// `(x, y) ↦ (x, −y)`, `m = 2`.
    Negation,
    /// `(x, y) ↦ (ωx, y)`, `m = 3`.
    CubeRootTwist,
    /// `(x, y) ↦ (−x, iy)`, `m = 4`.
    SquareRootOfMinusOne,
    /// `(x, y) ↦ (ωx, −y)`, `m = 6`.
    SixthRootTwist,
}

impl Automorphism {
    pub fn order(self) -> u64 {
        match self {
            Automorphism::Negation => 2,
            Automorphism::CubeRootTwist => 3,
            Automorphism::SquareRootOfMinusOne => 4,
            Automorphism::SixthRootTwist => 6,
        }
    }
}

/// `y² = f(x)` over `F_p` with monic cubic `f`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeierstrassCurve {
    p: u64,
    /// `f = c0 + c1 x + c2 x² + x³`, coefficients reduced mod `p`.
    f: [u64; 4],
    automorphism: Automorphism,
}

impl WeierstrassCurve {
    /// Builds `y² = f(x)`; `f` is given lowest degree first and must be a
    /// squarefree monic cubic mod `p`.
    pub fn new(p: u64, f: [i64; 4], automorphism: Automorphism) -> Result<Self, EllipticError> {
        if !is_prime(p) {
            return Err(EllipticError::NotPrime(p));
        }
        if p == 2 {
            return Err(EllipticError::UnsupportedCharacteristic(p));
        }
        let f = f.map(|c| c.rem_euclid(p as i64) as u64);
        assert_eq!(f[3], 1, "cubic must be monic");
        let curve = WeierstrassCurve { p, f, automorphism };
        if curve.discriminant() == 0 {
            return Err(EllipticError::UnsupportedCharacteristic(p));
        }
        Ok(curve)
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn coefficients(&self) -> [u64; 4] {
        self.f
    }

    pub fn automorphism(&self) -> Automorphism {
        self.automorphism
    }

    /// Discriminant of the monic cubic `x³ + b x² + c x + d`, mod `p`.
    pub fn discriminant(&self) -> u64 {
        let p = self.p as i128;
        let [d, c, b, _] = self.f.map(|x| x as i128);
        let disc = b * b * c * c - 4 * c * c * c - 4 * b * b * b * d - 27 * d * d + 18 * b * c * d;
        disc.rem_euclid(p) as u64
    }

    /// Coefficient of `x^{p−1}` in `f^{(p−1)/2}` over `F_p`.
    pub fn hasse_invariant(&self) -> u64 {
        let p = self.p;
        let mut acc = vec![1u64];
        for _ in 0..(p - 1) / 2 {
            let mut next = vec![0u64; acc.len() + 3];
            for (i, &a) in acc.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (j, &c) in self.f.iter().enumerate() {
                    next[i + j] = (next[i + j] + a * c) % p;
                }
            }
            acc = next;
        }
        acc.get((p - 1) as usize).copied().unwrap_or(0)
    }

    /// Affine points `(x, y)` over `F_p`, without the point at infinity.
    pub fn affine_points(&self) -> Vec<(u64, u64)> {
        let p = self.p;
        let mut pts = Vec::new();
        for x in 0..p {
            let fx = eval_mod(&self.f, x, p);
            for y in 0..p {
                if y * y % p == fx {
                    pts.push((x, y));
                }
            }
        }
        pts
    }
}

impl fmt::Display for WeierstrassCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = x^3")?;
        let [c0, c1, c2, _] = self.f;
        if c2 != 0 {
            write!(f, " + {c2}x^2")?;
        }
        if c1 != 0 {
            write!(f, " + {c1}x")?;
        }
        if c0 != 0 {
            write!(f, " + {c0}")?;
        }
        write!(f, " over F_{}", self.p)
    }
}

fn eval_mod(f: &[u64; 4], x: u64, p: u64) -> u64 {
    f.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
}

fn check_characteristic(weights: &Weights, p: u64) -> Result<(), EllipticError> {
    if !is_prime(p) {
        return Err(EllipticError::NotPrime(p));
    }
    if let Some(&r) = weights.weights().iter().find(|&&r| (r as u64).is_multiple_of(p)) {
        return Err(EllipticError::CharacteristicDividesWeight { p, r });
    }
    if p == 2 {
        return Err(EllipticError::UnsupportedCharacteristic(p));
    }
    Ok(())
}

/// Reduces a rational Legendre parameter mod `p`, rejecting `0`, `1` and
/// denominators divisible by `p`.
pub fn reduce_lambda(lambda: &Rational, p: u64) -> Result<u64, EllipticError> {
    let pm = BigInt::from(p);
    let num = lambda.numer().mod_floor(&pm).to_u64().expect("reduced mod p");
    let den = lambda.denom().mod_floor(&pm).to_u64().expect("reduced mod p");
    let inv = inverse_mod_p(den, p).ok_or(EllipticError::BadLambda)?;
    let l = num * inv % p;
    if l == 0 || l == 1 {
        return Err(EllipticError::BadLambda);
    }
    Ok(l)
}

/// Legendre parameter of four points of `P^1`: the image of the fourth
/// point under the Möbius map sending the first three to `∞, 0, 1`.
pub fn cross_ratio_lambda(points: &[crate::qdiv::PointLabel]) -> Option<Rational> {
    use crate::qdiv::PointLabel::{Affine, Infinity};
    let [a, b, c, d] = points else {
        return None;
    };
    let val = |x: &crate::qdiv::PointLabel| match x {
        Affine(v) => Some(v.clone()),
        Infinity => None,
    };
    let (a, b, c, d) = (val(a), val(b), val(c), val(d));
    // T(z) = (z − b)(c − a) / ((z − a)(c − b)) with the factors involving ∞
    // cancelled.
    let lam = match (a, b, c, d) {
        (None, Some(b), Some(c), Some(d)) => (d - &b) / (c - b),
        (Some(a), None, Some(c), Some(d)) => (c - &a) / (d - a),
        (Some(a), Some(b), None, Some(d)) => (d.clone() - b) / (d - a),
        (Some(a), Some(b), Some(c), None) => (c.clone() - &a) / (c - b),
        (Some(a), Some(b), Some(c), Some(d)) => {
            ((d.clone() - &b) * (c.clone() - &a)) / ((d - a) * (c - b))
        }
        _ => return None,
    };
    Some(lam)
}

/// The Weierstrass model of the elliptic cover of a `δ = 0` weighted
/// projective line.
pub fn cover_model(
    weights: &Weights,
    p: u64,
    lambda: Option<&Rational>,
) -> Result<WeierstrassCurve, EllipticError> {
    let kind = Delta0Kind::of(weights)?;
    check_characteristic(weights, p)?;
    match kind {
        Delta0Kind::W236 => WeierstrassCurve::new(p, [1, 0, 0, 1], Automorphism::SixthRootTwist),
        Delta0Kind::W333 => WeierstrassCurve::new(p, [1, 0, 0, 1], Automorphism::CubeRootTwist),
        Delta0Kind::W244 => {
            WeierstrassCurve::new(p, [0, -1, 0, 1], Automorphism::SquareRootOfMinusOne)
        }
        Delta0Kind::W2222 => {
            let lam = reduce_lambda(lambda.ok_or(EllipticError::BadLambda)?, p)? as i64;
            // x(x − 1)(x − λ) = x³ − (1 + λ)x² + λx
            WeierstrassCurve::new(p, [0, lam, -(1 + lam), 1], Automorphism::Negation)
        }
    }
}

/// `#E(F_{p^k})`, including the point at infinity, by enumeration.
pub fn point_count(curve: &WeierstrassCurve, k: u32, max_field: u64) -> Result<u64, EllipticError> {
    let p = curve.p;
    let size = (p as u128).pow(k);
    if k == 0 || size > max_field as u128 {
        return Err(EllipticError::FieldTooLarge { size, limit: max_field });
    }
    if k == 1 {
        let mut squares = vec![0u64; p as usize];
        for y in 0..p {
            squares[(y * y % p) as usize] += 1;
        }
        let affine: u64 = (0..p).map(|x| squares[eval_mod(&curve.f, x, p) as usize]).sum();
        return Ok(affine + 1);
    }
    let field = FiniteField::new(p, k);
    let q = field.order();
    let mut squares = vec![0u32; q as usize];
    for idx in 0..q {
        let y = field.element(idx);
        squares[field.index(&field.mul(&y, &y)) as usize] += 1;
    }
    let affine: u64 = (0..q)
        .map(|idx| squares[field.index(&field.eval(&curve.f, &field.element(idx))) as usize] as u64)
        .sum();
    Ok(affine + 1)
}

/// Ordinarity of `E` by its Hasse invariant, with the trace of Frobenius
/// `a_p = p + 1 − #E(F_p)` as a second witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ordinarity {
    pub ordinary: bool,
    pub hasse: u64,
    pub trace: i64,
}

pub fn is_ordinary(curve: &WeierstrassCurve) -> Result<Ordinarity, EllipticError> {
    let p = curve.p;
    let hasse = curve.hasse_invariant();
    let count = point_count(curve, 1, u64::MAX)?;
    let trace = p as i64 + 1 - count as i64;
    let ordinary = hasse != 0;
    if ordinary != (trace.rem_euclid(p as i64) != 0) {
        return Err(EllipticError::HasseTraceMismatch(curve.clone()));
    }
    Ok(Ordinarity { ordinary, hasse, trace })
}

/// Number of geometric `q`-torsion points: `q` for ordinary curves, only the
/// origin for supersingular ones.
pub fn torsion_count(ordinary: bool, q: u64) -> u64 {
    if ordinary {
        q
    } else {
        1
    }
}

/// The `μ_m` action on the non-trivial `q`-torsion of an ordinary curve.
///
/// `E[q] ≅ Z/q` and a generator of `μ_m` acts by multiplication by an
/// element `ζ` of order `m` in `(Z/q)^×`, which exists when `m | q − 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionOrbits {
    pub q: u64,
    pub m: u64,
    pub zeta: u64,
    /// Orbits of `x ↦ ζx` on `{1, …, q − 1}`, each listed from its least
    /// element, ordered by that element.
    pub orbits: Vec<Vec<u64>>,
}

impl TorsionOrbits {
    /// `r = (q − 1)/m`.
    pub fn r(&self) -> u64 {
        self.orbits.len() as u64
    }

    /// `dim Hom(φ_* L_x, φ_* L_y)` for non-trivial `q`-torsion indices.
    pub fn hom_dim(&self, x: u64, y: u64) -> u64 {
        let ox = self.orbits.iter().position(|o| o.contains(&(x % self.q)));
        let oy = self.orbits.iter().position(|o| o.contains(&(y % self.q)));
        u64::from(ox.is_some() && ox == oy)
    }

    /// `hom_dim` on orbit representatives.
    pub fn hom_table(&self) -> Vec<Vec<u64>> {
        let reps: Vec<u64> = self.orbits.iter().map(|o| o[0]).collect();
        reps.iter().map(|&x| reps.iter().map(|&y| self.hom_dim(x, y)).collect()).collect()
    }
}

pub fn orbit_count(q: u64, m: u64) -> Result<TorsionOrbits, EllipticError> {
    if q == 0 || m == 0 || !(q - 1).is_multiple_of(m) {
        return Err(EllipticError::NonIntegralOrbitCount { q, m });
    }
    if q == 1 {
        return Ok(TorsionOrbits { q, m, zeta: 0, orbits: Vec::new() });
    }
    let zeta = (2..q)
        .chain(core::iter::once(1))
        .find(|&z| {
            z.gcd(&q) == 1
                && pow_mod(z, m, q) == 1
                && (1..m).all(|k| pow_mod(z, k, q) != 1)
        })
        .ok_or(EllipticError::NonIntegralOrbitCount { q, m })?;
    let mut seen = vec![false; q as usize];
    let mut orbits = Vec::new();
    for start in 1..q {
        if seen[start as usize] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut x = start;
        while !seen[x as usize] {
            seen[x as usize] = true;
            orbit.push(x);
            x = x * zeta % q;
        }
        orbits.push(orbit);
    }
    Ok(TorsionOrbits { q, m, zeta, orbits })
}

/// Rank and determinant of `G_r`, built from `G_1 = O` by the extensions
/// `0 → O → G_r → G_{r−1} ⊗ ω^{−1} → 0`.
pub fn gq_ledger(r: u64, weights: &Weights) -> Result<(u64, PicElement), EllipticError> {
    if !weights.delta().is_zero() {
        return Err(EllipticError::NotDeltaZero(weights.clone()));
    }
    let omega = weights.canonical_class();
    let mut det = weights.zero();
    for step in 2..=r {
        det = det.sub(&omega.scale(step as i64 - 1)).expect("same weights");
    }
    Ok((r, det))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CensusMode {
    Ordinary,
    Supersingular,
}

/// Determinant of a census: a class in `Γ` when known, otherwise only its
/// degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DetClass {
    Class(PicElement),
    DegreeOnly(Rational),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub rank: u64,
    pub multiplicity: u64,
    pub label: String,
}

/// Indecomposable summands of `F^e_* O` on a `δ = 0` weighted projective line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Delta0Census {
    pub weights: Weights,
    pub p: u64,
    pub e: u32,
    pub mode: CensusMode,
    pub curve: WeierstrassCurve,
    pub ordinarity: Ordinarity,
    pub summands: Vec<Summand>,
    pub det_class: DetClass,
    pub orbits: Option<TorsionOrbits>,
}

impl Delta0Census {
    pub fn total_rank(&self) -> u64 {
        self.summands.iter().map(|s| s.rank * s.multiplicity).sum()
    }

    /// Number of pairwise non-isomorphic indecomposable summands.
    pub fn distinct_indecomposables(&self) -> u64 {
        self.summands.iter().map(|s| s.multiplicity).sum()
    }
}

pub fn summand_census_delta0(
    weights: &Weights,
    p: u64,
    e: u32,
    lambda: Option<&Rational>,
) -> Result<Delta0Census, EllipticError> {
    let kind = Delta0Kind::of(weights)?;
    let curve = cover_model(weights, p, lambda)?;
    let ordinarity = is_ordinary(&curve)?;
    let q = p.pow(e);
    let m = kind.m();
    if ordinarity.ordinary {
        let orbits = orbit_count(q, m)?;
        let mut summands = vec![Summand { rank: 1, multiplicity: 1, label: String::from("omega^0") }];
        summands.extend(orbits.orbits.iter().map(|o| Summand {
            rank: m,
            multiplicity: 1,
            label: format!("phi_*L_{}", o[0]),
        }));
        let deg = c1_pushforward(&Rational::zero(), 1, p, e, weights);
        Ok(Delta0Census {
            weights: weights.clone(),
            p,
            e,
            mode: CensusMode::Ordinary,
            curve,
            ordinarity,
            summands,
            det_class: DetClass::DegreeOnly(deg),
            orbits: Some(orbits),
        })
    } else {
        let (rank, det) = gq_ledger(q, weights)?;
        Ok(Delta0Census {
            weights: weights.clone(),
            p,
            e,
            mode: CensusMode::Supersingular,
            curve,
            ordinarity,
            summands: vec![Summand { rank, multiplicity: 1, label: format!("G_{q}") }],
            det_class: DetClass::Class(det),
            orbits: None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn w(r: &[i64]) -> Weights {
        Weights::new(r.to_vec()).unwrap()
    }

    #[test]
    fn models() {
        let e = cover_model(&w(&[2, 4, 4]), 5, None).unwrap();
        assert_eq!(e.coefficients(), [0, 4, 0, 1]);
        assert_eq!(e.automorphism().order(), 4);
        let e = cover_model(&w(&[3, 3, 3]), 7, None).unwrap();
        assert_eq!(e.coefficients(), [1, 0, 0, 1]);
        assert_eq!(e.automorphism().order(), 3);
        assert_eq!(
            cover_model(&w(&[2, 3, 6]), 2, None),
            Err(EllipticError::CharacteristicDividesWeight { p: 2, r: 2 })
        );
        assert_eq!(
            cover_model(&w(&[3, 3, 3]), 2, None),
            Err(EllipticError::UnsupportedCharacteristic(2))
        );
        assert!(matches!(cover_model(&w(&[2, 3, 7]), 5, None), Err(EllipticError::NotDeltaZero(_))));
    }

    #[test]
    fn legendre_parameter_checks() {
        let ws = w(&[2, 2, 2, 2]);
        assert_eq!(cover_model(&ws, 3, None), Err(EllipticError::BadLambda));
        assert_eq!(cover_model(&ws, 3, Some(&rat(4, 1))), Err(EllipticError::BadLambda));
        assert_eq!(cover_model(&ws, 5, Some(&rat(1, 5))), Err(EllipticError::BadLambda));
        let e = cover_model(&ws, 3, Some(&rat(2, 1))).unwrap();
        assert_eq!(e.coefficients(), [0, 2, 0, 1]);
    }

    #[test]
    fn cross_ratio() {
        use crate::qdiv::PointLabel;
        let pts = [
            PointLabel::Infinity,
            PointLabel::integer(0),
            PointLabel::integer(1),
            PointLabel::integer(5),
        ];
        assert_eq!(cross_ratio_lambda(&pts), Some(rat(5, 1)));
        // Moving every point by the same translation leaves λ unchanged.
        let moved = [
            PointLabel::integer(3),
            PointLabel::integer(4),
            PointLabel::integer(5),
            PointLabel::Infinity,
        ];
        let shifted = [
            PointLabel::integer(10),
            PointLabel::integer(11),
            PointLabel::integer(12),
            PointLabel::Infinity,
        ];
        assert_eq!(cross_ratio_lambda(&moved), cross_ratio_lambda(&shifted));
    }

    #[test]
    fn counts() {
        let j0 = |p| WeierstrassCurve::new(p, [1, 0, 0, 1], Automorphism::CubeRootTwist).unwrap();
        assert_eq!(point_count(&j0(5), 1, DEFAULT_MAX_FIELD), Ok(6));
        assert_eq!(point_count(&j0(7), 1, DEFAULT_MAX_FIELD), Ok(12));
        let j1728 = WeierstrassCurve::new(3, [0, -1, 0, 1], Automorphism::SquareRootOfMinusOne).unwrap();
        assert_eq!(point_count(&j1728, 1, DEFAULT_MAX_FIELD), Ok(4));
        assert_eq!(
            point_count(&j0(7), 8, DEFAULT_MAX_FIELD),
            Err(EllipticError::FieldTooLarge { size: 5_764_801, limit: DEFAULT_MAX_FIELD })
        );
    }

    #[test]
    fn ordinarity_examples() {
        let j0 = |p| WeierstrassCurve::new(p, [1, 0, 0, 1], Automorphism::CubeRootTwist).unwrap();
        let o5 = is_ordinary(&j0(5)).unwrap();
        assert!(!o5.ordinary);
        assert_eq!((o5.hasse, o5.trace), (0, 0));
        assert!(is_ordinary(&j0(7)).unwrap().ordinary);
        let j1728 = WeierstrassCurve::new(5, [0, -1, 0, 1], Automorphism::SquareRootOfMinusOne).unwrap();
        let o = is_ordinary(&j1728).unwrap();
        assert!(o.ordinary);
        assert_ne!(o.hasse, 0);
    }

    #[test]
    fn torsion_and_orbits() {
        assert_eq!(torsion_count(true, 5), 5);
        assert_eq!(torsion_count(false, 125), 1);
        assert_eq!(torsion_count(true, 1), 1);
        assert_eq!(orbit_count(7, 3).unwrap().r(), 2);
        assert_eq!(orbit_count(25, 4).unwrap().r(), 6);
        assert_eq!(orbit_count(5, 3), Err(EllipticError::NonIntegralOrbitCount { q: 5, m: 3 }));
        let o = orbit_count(13, 6).unwrap();
        assert!(o.orbits.iter().all(|orb| orb.len() == 6));
        assert_eq!(o.hom_table(), vec![vec![1, 0], vec![0, 1]]);
        assert_eq!(o.hom_dim(o.orbits[0][0], o.orbits[0][3]), 1);
    }

    #[test]
    fn gq_examples() {
        let ws = w(&[3, 3, 3]);
        assert_eq!(gq_ledger(1, &ws), Ok((1, ws.zero())));
        let omega = ws.canonical_class();
        assert_eq!(gq_ledger(2, &ws), Ok((2, omega.scale(-1))));
        assert_eq!(gq_ledger(5, &ws).unwrap().1, omega.scale(-1));
        assert_eq!(gq_ledger(5, &ws).unwrap().1, omega.scale(-10));
        assert!(matches!(gq_ledger(3, &w(&[2, 3])), Err(EllipticError::NotDeltaZero(_))));
    }

    #[test]
    fn census_examples() {
        let ws = w(&[3, 3, 3]);
        let c = summand_census_delta0(&ws, 7, 1, None).unwrap();
        assert_eq!(c.mode, CensusMode::Ordinary);
        let ranks: Vec<u64> = c.summands.iter().map(|s| s.rank).collect();
        assert_eq!(ranks, vec![1, 3, 3]);
        assert_eq!(c.total_rank(), 7);
        assert_eq!(c.distinct_indecomposables(), 3);

        let c = summand_census_delta0(&ws, 5, 1, None).unwrap();
        assert_eq!(c.mode, CensusMode::Supersingular);
        assert_eq!(c.summands, vec![Summand { rank: 5, multiplicity: 1, label: "G_5".into() }]);

        let c = summand_census_delta0(&w(&[2, 2, 2, 2]), 3, 1, Some(&rat(2, 1))).unwrap();
        let expected_mode = if cover_model(&w(&[2, 2, 2, 2]), 3, Some(&rat(2, 1)))
            .unwrap()
            .hasse_invariant()
            != 0
        {
            CensusMode::Ordinary
        } else {
            CensusMode::Supersingular
        };
        assert_eq!(c.mode, expected_mode);
        assert_eq!(c.total_rank(), 3);
    }
}
