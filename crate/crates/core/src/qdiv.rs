//! Rational divisors on `P^1` and the graded pieces of their section rings.
//!
//! For an ample `Q`-divisor `D = Σ (s_i / r_i) P_i` the section ring is
//! `R = ⊕_m H^0(P^1, O(⌊mD⌋)) t^m`, and on the projective line
//! `h^0(O(a)) = max(0, a + 1)`.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::arith::{floor_div, gcd, lcm_all, rat, Rational};

/// A closed point of `P^1`: either the point at infinity or an affine point
/// with an exact rational coordinate.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PointLabel {
    Infinity,
    Affine(Rational),
}

impl PointLabel {
    pub fn affine(n: i64, d: i64) -> Self {
        PointLabel::Affine(rat(n, d))
    }

    pub fn integer(n: i64) -> Self {
        PointLabel::Affine(Rational::from_integer(BigInt::from(n)))
    }
}

impl fmt::Display for PointLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointLabel::Infinity => f.write_str("inf"),
            PointLabel::Affine(x) => write!(f, "{x}"),
        }
    }
}

/// One term `(s / r) P` of a rational divisor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DivisorTerm {
    pub point: PointLabel,
    pub s: i64,
    pub r: i64,
}

impl DivisorTerm {
    pub fn new(point: PointLabel, s: i64, r: i64) -> Self {
        DivisorTerm { point, s, r }
    }

    pub fn coefficient(&self) -> Rational {
        rat(self.s, self.r)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DivisorError {
    #[error("coefficient {s}/{r} at [{point}] is not in lowest terms")]
    NotCoprime { point: PointLabel, s: i64, r: i64 },
    #[error("denominator {r} at [{point}] is not positive")]
    NonPositiveDenominator { point: PointLabel, r: i64 },
    #[error("point [{0}] appears more than once")]
    DuplicatePoint(PointLabel),
    #[error("divisor is not ample: degree {0} is not positive")]
    NotAmple(Rational),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum QdivError {
    #[error("invalid divisor ({} problem(s))", .0.len())]
    InvalidDivisor(Vec<DivisorError>),
}

/// `D = Σ (s_i / r_i) P_i`, stored term by term in input order.
///
/// Terms with `s = 0` are dropped on construction. Coprimality, distinct
/// points and ampleness are checked by [`RationalDivisor::validate`] rather
/// than on construction, so that every violation can be reported at once.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RationalDivisor {
    terms: Vec<DivisorTerm>,
}

impl RationalDivisor {
    pub fn new(terms: Vec<DivisorTerm>) -> Self {
        let terms = terms.into_iter().filter(|t| t.s != 0).collect();
        RationalDivisor { terms }
    }

    pub fn empty() -> Self {
        RationalDivisor::default()
    }

    pub fn terms(&self) -> &[DivisorTerm] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Returns the divisor with every coefficient in lowest terms and a
    /// positive denominator. Terms with a zero denominator are kept as is so
    /// that [`validate`](Self::validate) can report them.
    pub fn reduced(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                if t.r == 0 {
                    return t.clone();
                }
                let g = gcd(t.s, t.r);
                let sign = if t.r < 0 { -1 } else { 1 };
                DivisorTerm::new(t.point.clone(), sign * t.s / g, sign * t.r / g)
            })
            .collect();
        RationalDivisor::new(terms)
    }

    /// Checks coprimality, distinctness of points and `deg D > 0`.
    pub fn validate(&self) -> Result<(), Vec<DivisorError>> {
        let mut errors = Vec::new();
        let mut seen: Vec<&PointLabel> = Vec::new();
        let mut duplicated: Vec<&PointLabel> = Vec::new();
        for t in &self.terms {
            if t.r <= 0 {
                errors.push(DivisorError::NonPositiveDenominator {
                    point: t.point.clone(),
                    r: t.r,
                });
            } else if gcd(t.s, t.r) != 1 {
                errors.push(DivisorError::NotCoprime {
                    point: t.point.clone(),
                    s: t.s,
                    r: t.r,
                });
            }
            if !seen.contains(&&t.point) {
                seen.push(&t.point);
            } else if !duplicated.contains(&&t.point) {
                duplicated.push(&t.point);
                errors.push(DivisorError::DuplicatePoint(t.point.clone()));
            }
        }
        if errors.iter().all(|e| !matches!(e, DivisorError::NonPositiveDenominator { .. })) {
            let deg = self.degree();
            if !deg.is_positive() {
                errors.push(DivisorError::NotAmple(deg));
            }
        }
        if errors.is_empty() {
            Ok(())
        } else {
            Err(errors)
        }
    }

    fn checked(&self) -> Result<(), QdivError> {
        self.validate().map_err(QdivError::InvalidDivisor)
    }

    /// `deg D = Σ s_i / r_i`, exactly. Terms with a zero denominator are
    /// skipped (they never pass validation).
    pub fn degree(&self) -> Rational {
        self.terms
            .iter()
            .filter(|t| t.r != 0)
            .fold(Rational::zero(), |acc, t| acc + t.coefficient())
    }

    /// Least common multiple of the denominators.
    pub fn denominator_lcm(&self) -> u64 {
        lcm_all(self.terms.iter().map(|t| t.r.unsigned_abs().max(1)))
    }

    /// `⌊mD⌋`, coefficientwise with floors toward negative infinity.
    pub fn floor_multiple(&self, m: u64) -> IntegerDivisor {
        let terms = self
            .terms
            .iter()
            .filter(|t| t.r > 0)
            .map(|t| {
                let c = floor_div(m as i128 * t.s as i128, t.r as i128);
                (t.point.clone(), c as i64)
            })
            .collect();
        IntegerDivisor { terms }
    }

    /// `dim_k R_m = h^0(P^1, O(⌊mD⌋))`.
    pub fn hilbert_dim(&self, m: u64) -> Result<u64, QdivError> {
        self.checked()?;
        Ok(self.hilbert_dim_unchecked(m))
    }

    pub(crate) fn hilbert_dim_unchecked(&self, m: u64) -> u64 {
        h0_p1(self.floor_multiple(m).degree())
    }

    /// `[dim R_0, …, dim R_N]`.
    pub fn hilbert_series_window(&self, n: u64) -> Result<Vec<u64>, QdivError> {
        self.checked()?;
        Ok((0..=n).map(|m| self.hilbert_dim_unchecked(m)).collect())
    }
}

/// `h^0(P^1, O(a)) = max(0, a + 1)`.
pub fn h0_p1(a: i64) -> u64 {
    if a < 0 {
        0
    } else {
        a as u64 + 1
    }
}

/// An integral divisor `Σ c_i P_i` on `P^1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegerDivisor {
    pub terms: Vec<(PointLabel, i64)>,
}

impl IntegerDivisor {
    pub fn coefficients(&self) -> Vec<i64> {
        self.terms.iter().map(|(_, c)| *c).collect()
    }

    pub fn degree(&self) -> i64 {
        self.terms.iter().map(|(_, c)| c).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    pub(crate) fn brenner() -> RationalDivisor {
        RationalDivisor::new(vec![
            DivisorTerm::new(PointLabel::Infinity, 1, 2),
            DivisorTerm::new(PointLabel::integer(0), -1, 3),
            DivisorTerm::new(PointLabel::integer(1), -1, 7),
        ])
    }

    fn example_333() -> RationalDivisor {
        RationalDivisor::new(vec![
            DivisorTerm::new(PointLabel::Infinity, 1, 3),
            DivisorTerm::new(PointLabel::integer(0), 1, 3),
            DivisorTerm::new(PointLabel::integer(1), -1, 3),
        ])
    }

    #[test]
    fn validate_examples() {
        assert_eq!(brenner().validate(), Ok(()));
        let bad = RationalDivisor::new(vec![DivisorTerm::new(PointLabel::Infinity, 2, 4)]);
        assert!(matches!(
            bad.validate().unwrap_err()[0],
            DivisorError::NotCoprime { s: 2, r: 4, .. }
        ));
        let neg = RationalDivisor::new(vec![DivisorTerm::new(PointLabel::Infinity, -1, 2)]);
        assert_eq!(neg.validate(), Err(vec![DivisorError::NotAmple(rat(-1, 2))]));
    }

    #[test]
    fn validate_collects_every_violation() {
        let d = RationalDivisor::new(vec![
            DivisorTerm::new(PointLabel::Infinity, 2, 4),
            DivisorTerm::new(PointLabel::Infinity, -3, 1),
            DivisorTerm::new(PointLabel::Infinity, 1, 5),
        ]);
        let errs = d.validate().unwrap_err();
        assert_eq!(
            errs,
            vec![
                DivisorError::NotCoprime { point: PointLabel::Infinity, s: 2, r: 4 },
                DivisorError::DuplicatePoint(PointLabel::Infinity),
                DivisorError::NotAmple(rat(-23, 10)),
            ]
        );
    }

    #[test]
    fn zero_terms_are_dropped() {
        let d = RationalDivisor::new(vec![
            DivisorTerm::new(PointLabel::Infinity, 0, 3),
            DivisorTerm::new(PointLabel::integer(0), 1, 1),
        ]);
        assert_eq!(d.terms().len(), 1);
    }

    #[test]
    fn degrees() {
        assert_eq!(brenner().degree(), rat(1, 42));
        assert_eq!(example_333().degree(), rat(1, 3));
        assert_eq!(RationalDivisor::empty().degree(), rat(0, 1));
    }

    #[test]
    fn floors() {
        assert_eq!(brenner().floor_multiple(1).coefficients(), vec![0, -1, -1]);
        assert_eq!(brenner().floor_multiple(42).coefficients(), vec![21, -14, -6]);
        assert_eq!(example_333().floor_multiple(2).coefficients(), vec![0, 0, -1]);
    }

    #[test]
    fn hilbert_dims() {
        assert_eq!(brenner().hilbert_dim(1), Ok(0));
        assert_eq!(brenner().hilbert_dim(6), Ok(1));
        assert_eq!(brenner().hilbert_dim(0), Ok(1));
        let line = RationalDivisor::new(vec![DivisorTerm::new(PointLabel::Infinity, 1, 1)]);
        assert_eq!(line.hilbert_series_window(3), Ok(vec![1, 2, 3, 4]));
        assert_eq!(example_333().hilbert_series_window(3), Ok(vec![1, 0, 0, 2]));
    }

    #[test]
    fn invalid_divisor_is_rejected() {
        let neg = RationalDivisor::new(vec![DivisorTerm::new(PointLabel::Infinity, -1, 2)]);
        assert!(matches!(neg.hilbert_dim(3), Err(QdivError::InvalidDivisor(_))));
    }

    #[test]
    fn reduce_normalises_sign_and_gcd() {
        let d = RationalDivisor::new(vec![DivisorTerm::new(PointLabel::Infinity, 2, -4)]);
        assert_eq!(d.reduced().terms()[0], DivisorTerm::new(PointLabel::Infinity, -1, 2));
    }
}
