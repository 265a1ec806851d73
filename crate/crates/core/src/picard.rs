//! The Picard group of a weighted projective line.
//!
//! For weights `r_1, …, r_n ≥ 2` at distinct points of `P^1`,
//! `Γ = (⊕ Z a_i ⊕ Z c) / ⟨r_i a_i − c⟩`, where `a_i` is the class of the
//! stacky point `Q_i` and `c` the pull-back of a point of `P^1`. Every element
//! has a unique normal form `Σ l_i a_i + d c` with `0 ≤ l_i < r_i`, and all
//! arithmetic here renormalises eagerly.

use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::arith::{floor_div, int, lcm_all, rat, Rational};
use crate::qdiv::{h0_p1, PointLabel, RationalDivisor};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PicardError {
    #[error("weight {0} is smaller than 2")]
    BadWeight(i64),
    #[error("expected {expected} coefficients, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("elements live on different weighted projective lines")]
    WeightsMismatch,
    #[error("point [{0}] carries more than one weight")]
    DuplicatePoint(PointLabel),
}

/// Weights `(r_1, …, r_n)` at distinct points `P_1, …, P_n`.
///
/// `n = 0` is allowed and stands for `P^1` itself.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weights {
    r: Vec<i64>,
    points: Vec<PointLabel>,
}

impl Weights {
    /// Weights at the default points `∞, 0, 1, 2, …`.
    pub fn new(r: Vec<i64>) -> Result<Self, PicardError> {
        let points = (0..r.len())
            .map(|k| match k {
                0 => PointLabel::Infinity,
                k => PointLabel::integer(k as i64 - 1),
            })
            .collect();
        Weights::with_points(r, points)
    }

    pub fn with_points(r: Vec<i64>, points: Vec<PointLabel>) -> Result<Self, PicardError> {
        if r.len() != points.len() {
            return Err(PicardError::LengthMismatch { expected: r.len(), found: points.len() });
        }
        if let Some(&bad) = r.iter().find(|&&ri| ri < 2) {
            return Err(PicardError::BadWeight(bad));
        }
        for (k, p) in points.iter().enumerate() {
            if points[..k].contains(p) {
                return Err(PicardError::DuplicatePoint(p.clone()));
            }
        }
        Ok(Weights { r, points })
    }

    /// The weighted projective line of the fractional part of `D` together
    /// with `L = O(π^* D)`.
    ///
    /// Terms with `r_i = 1` are not stacky; their integral coefficients land
    /// in the `c` part of `L`, as does nothing else since
    /// `π^*((s_i/r_i) P_i) = s_i Q_i`. The divisor is assumed to be in lowest
    /// terms with distinct points.
    pub fn from_divisor(divisor: &RationalDivisor) -> Result<(Weights, PicElement), PicardError> {
        let mut r = Vec::new();
        let mut points = Vec::new();
        let mut l = Vec::new();
        let mut d = 0i64;
        for t in divisor.terms() {
            if t.r == 1 {
                d += t.s;
            } else {
                r.push(t.r);
                points.push(t.point.clone());
                l.push(t.s);
            }
        }
        let w = Weights::with_points(r, points)?;
        let bundle = w.normalize(&l, d)?;
        Ok((w, bundle))
    }

    pub fn weights(&self) -> &[i64] {
        &self.r
    }

    pub fn points(&self) -> &[PointLabel] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.r.len()
    }

    pub fn is_empty(&self) -> bool {
        self.r.is_empty()
    }

    /// `lcm(r_1, …, r_n)`.
    pub fn lcm(&self) -> u64 {
        lcm_all(self.r.iter().map(|&x| x as u64))
    }

    /// Reduces `Σ raw_l_i a_i + raw_d c` to normal form.
    pub fn normalize(&self, raw_l: &[i64], raw_d: i64) -> Result<PicElement, PicardError> {
        if raw_l.len() != self.r.len() {
            return Err(PicardError::LengthMismatch { expected: self.r.len(), found: raw_l.len() });
        }
        Ok(PicElement::renormalized(&self.r, raw_l.to_vec(), raw_d))
    }

    pub fn zero(&self) -> PicElement {
        PicElement { r: self.r.clone(), l: alloc::vec![0; self.r.len()], d: 0 }
    }

    /// `a_i`, the class of the `i`-th stacky point (0-based).
    pub fn a(&self, i: usize) -> PicElement {
        let mut l = alloc::vec![0; self.r.len()];
        l[i] = 1;
        PicElement { r: self.r.clone(), l, d: 0 }
    }

    /// `c`, the pull-back of a point of `P^1`.
    pub fn c(&self) -> PicElement {
        PicElement { r: self.r.clone(), l: alloc::vec![0; self.r.len()], d: 1 }
    }

    /// The dualizing sheaf `ω = π^* ω_{P^1} ⊗ O(Σ (r_i − 1) Q_i)`, i.e.
    /// `l_i = r_i − 1`, `d = −2`.
    pub fn canonical_class(&self) -> PicElement {
        PicElement { r: self.r.clone(), l: self.r.iter().map(|&ri| ri - 1).collect(), d: -2 }
    }

    /// `δ = deg ω = n − 2 − Σ 1/r_i`.
    pub fn delta(&self) -> Rational {
        self.r.iter().fold(int(self.r.len() as i64 - 2), |acc, &ri| acc - rat(1, ri))
    }

    /// Degree of `π_* O(Σ raw_l_i Q_i + raw_d c)` on `P^1`, i.e.
    /// `raw_d + Σ ⌊raw_l_i / r_i⌋`. Accepts non-normal input.
    pub fn pushforward_raw(&self, raw_l: &[i64], raw_d: i64) -> Result<i64, PicardError> {
        Ok(self.normalize(raw_l, raw_d)?.d)
    }
}

impl fmt::Display for Weights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, r) in self.r.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{r}")?;
        }
        f.write_str(")")
    }
}

/// An element `Σ l_i a_i + d c` of `Γ` in normal form `0 ≤ l_i < r_i`.
///
/// Also read as the orbifold line bundle `O(Σ l_i Q_i + d π^*(pt))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PicElement {
    r: Vec<i64>,
    l: Vec<i64>,
    d: i64,
}

pub type OrbLineBundle = PicElement;

impl PicElement {
    pub fn weights(&self) -> &[i64] {
        &self.r
    }

    pub fn l(&self) -> &[i64] {
        &self.l
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    fn same_group(&self, other: &PicElement) -> Result<(), PicardError> {
        if self.r == other.r {
            Ok(())
        } else {
            Err(PicardError::WeightsMismatch)
        }
    }

    fn renormalized(r: &[i64], raw_l: Vec<i64>, raw_d: i64) -> PicElement {
        let mut d = raw_d;
        let l = raw_l
            .iter()
            .zip(r)
            .map(|(&li, &ri)| {
                let carry = floor_div(li as i128, ri as i128) as i64;
                d += carry;
                li - carry * ri
            })
            .collect();
        PicElement { r: r.to_vec(), l, d }
    }

    pub fn add(&self, other: &PicElement) -> Result<PicElement, PicardError> {
        self.same_group(other)?;
        let l = self.l.iter().zip(&other.l).map(|(a, b)| a + b).collect();
        Ok(Self::renormalized(&self.r, l, self.d + other.d))
    }

    pub fn sub(&self, other: &PicElement) -> Result<PicElement, PicardError> {
        self.add(&other.scale(-1))
    }

    /// `k · γ`.
    pub fn scale(&self, k: i64) -> PicElement {
        let l = self.l.iter().map(|&li| li * k).collect();
        Self::renormalized(&self.r, l, self.d * k)
    }

    pub fn is_zero(&self) -> bool {
        self.d == 0 && self.l.iter().all(|&li| li == 0)
    }

    /// `deg γ = d + Σ l_i / r_i`.
    pub fn degree(&self) -> Rational {
        self.l
            .iter()
            .zip(&self.r)
            .fold(int(self.d), |acc, (&li, &ri)| acc + rat(li, ri))
    }

    /// Order of `γ` in `Γ`; `None` when it has infinite order, which happens
    /// exactly when `deg γ ≠ 0`.
    pub fn torsion_order(&self) -> Option<u64> {
        if !self.degree().is_zero() {
            return None;
        }
        // A degree-zero element is killed by lcm(r_i).
        let horizon = lcm_all(self.r.iter().map(|&x| x as u64));
        (1..=horizon).find(|&m| self.scale(m as i64).is_zero())
    }

    /// Degree of `π_* O(γ)` on `P^1`; on a normal form this is `d`.
    pub fn pushforward_to_p1(&self) -> i64 {
        self.d
    }

    /// `h^0(O(γ)) = h^0(P^1, π_* O(γ))`.
    pub fn h0(&self) -> u64 {
        h0_p1(self.pushforward_to_p1())
    }
}

impl fmt::Display for PicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, l) in self.l.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, ";{})", self.d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qdiv::DivisorTerm;
    use alloc::vec;

    fn w(r: &[i64]) -> Weights {
        Weights::new(r.to_vec()).unwrap()
    }

    #[test]
    fn normalize_examples() {
        let g = w(&[2, 3]).normalize(&[-5, 0], 0).unwrap();
        assert_eq!((g.l(), g.d()), (&[1, 0][..], -3));
        let g = w(&[2, 3]).normalize(&[0, 0], 4).unwrap();
        assert_eq!((g.l(), g.d()), (&[0, 0][..], 4));
        let g = w(&[2, 3, 7]).normalize(&[1, 2, 7], 0).unwrap();
        assert_eq!((g.l(), g.d()), (&[1, 2, 0][..], 1));
        assert_eq!(
            w(&[2, 3]).normalize(&[1], 0),
            Err(PicardError::LengthMismatch { expected: 2, found: 1 })
        );
    }

    #[test]
    fn normalize_is_idempotent() {
        let ws = w(&[4, 5, 6]);
        let g = ws.normalize(&[-17, 33, 5], -2).unwrap();
        assert_eq!(ws.normalize(g.l(), g.d()).unwrap(), g);
    }

    #[test]
    fn group_law() {
        let ws = w(&[2, 3]);
        let a1 = ws.a(0);
        assert_eq!(a1.add(&ws.zero()).unwrap(), a1);
        assert_eq!(a1.add(&a1).unwrap(), ws.c());
        assert_eq!(ws.a(1).scale(3), ws.c());
        assert!(a1.add(&a1.scale(-1)).unwrap().is_zero());
        assert_eq!(a1.add(&w(&[3, 2]).a(0)), Err(PicardError::WeightsMismatch));
    }

    #[test]
    fn degrees_and_canonical_class() {
        let ws = w(&[2, 3, 7]);
        assert_eq!(ws.zero().degree(), rat(0, 1));
        assert_eq!(ws.c().degree(), rat(1, 1));
        let k = ws.canonical_class();
        assert_eq!((k.l(), k.d()), (&[1, 2, 6][..], -2));
        assert_eq!(k.degree(), rat(1, 42));
        assert_eq!(ws.delta(), rat(1, 42));
        assert_eq!(w(&[2, 3, 6]).delta(), rat(0, 1));
        assert_eq!(w(&[2, 3, 5]).delta(), rat(-1, 30));
        assert_eq!(w(&[]).delta(), rat(-2, 1));
    }

    #[test]
    fn torsion() {
        assert_eq!(w(&[2, 3, 6]).canonical_class().torsion_order(), Some(6));
        assert_eq!(w(&[2, 2, 2, 2]).canonical_class().torsion_order(), Some(2));
        assert_eq!(w(&[2, 4, 4]).canonical_class().torsion_order(), Some(4));
        assert_eq!(w(&[3, 3, 3]).canonical_class().torsion_order(), Some(3));
        assert_eq!(w(&[2, 3, 7]).canonical_class().torsion_order(), None);
        assert_eq!(w(&[2, 3]).zero().torsion_order(), Some(1));
    }

    #[test]
    fn pushforward_and_h0() {
        let ws = w(&[2, 3]);
        let g = ws.normalize(&[1, 2], 5).unwrap();
        assert_eq!(g.pushforward_to_p1(), 5);
        assert_eq!(ws.pushforward_raw(&[-5, 0], 0), Ok(-3));
        assert_eq!(w(&[2, 3, 7]).pushforward_raw(&[1, -1, -1], 0), Ok(-2));
        assert_eq!(ws.zero().h0(), 1);
        assert_eq!(ws.c().h0(), 2);
        for r in [vec![2, 3], vec![2, 3, 5], vec![2, 2, 7]] {
            assert_eq!(w(&r).canonical_class().h0(), 0);
        }
    }

    #[test]
    fn bundle_from_divisor() {
        let d = RationalDivisor::new(vec![
            DivisorTerm::new(PointLabel::Infinity, 1, 2),
            DivisorTerm::new(PointLabel::integer(0), -1, 3),
            DivisorTerm::new(PointLabel::integer(1), -1, 7),
            DivisorTerm::new(PointLabel::integer(2), 2, 1),
        ]);
        let (ws, l) = Weights::from_divisor(&d).unwrap();
        assert_eq!(ws.weights(), &[2, 3, 7]);
        assert_eq!(l.degree(), d.degree());
        assert_eq!((l.l(), l.d()), (&[1, 2, 6][..], 0));
    }

    #[test]
    fn bad_weights() {
        assert_eq!(Weights::new(vec![2, 1]), Err(PicardError::BadWeight(1)));
        assert_eq!(
            Weights::with_points(vec![2, 3], vec![PointLabel::Infinity, PointLabel::Infinity]),
            Err(PicardError::DuplicatePoint(PointLabel::Infinity))
        );
    }
}
