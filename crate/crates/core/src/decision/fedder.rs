//! Fedder's criterion for hypersurfaces `k[x, y, z] / (f)` over `F_p`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::arith::is_prime;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FedderError {
    #[error("polynomial is zero mod {0}")]
    ZeroPolynomial(u64),
    #[error("{0} is not prime")]
    NotPrime(u64),
}

/// A polynomial in `x, y, z` with coefficients in `F_p`, keyed by exponent
/// vector. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly3 {
    p: u64,
    terms: BTreeMap<[u32; 3], u64>,
}

impl Poly3 {
    /// Reduces integer terms mod `p`, merging repeated monomials.
    pub fn from_terms(p: u64, terms: &[(i64, [u32; 3])]) -> Self {
        let mut poly = Poly3 { p, terms: BTreeMap::new() };
        for &(c, exps) in terms {
            poly.add_term(exps, c.rem_euclid(p as i64) as u64);
        }
        poly
    }

    fn add_term(&mut self, exps: [u32; 3], c: u64) {
        let entry = self.terms.entry(exps).or_insert(0);
        *entry = (*entry + c) % self.p;
        if *entry == 0 {
            self.terms.remove(&exps);
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = ([u32; 3], u64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    /// Product with every monomial having an exponent `≥ bound` dropped.
    fn mul_truncated(&self, other: &Poly3, bound: u32) -> Poly3 {
        let mut out = Poly3 { p: self.p, terms: BTreeMap::new() };
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let e = [a[0] + b[0], a[1] + b[1], a[2] + b[2]];
                if e.iter().all(|&x| x < bound) {
                    out.add_term(e, ca * cb % self.p);
                }
            }
        }
        out
    }

    /// `f^k` modulo the ideal `(x^bound, y^bound, z^bound)`.
    pub fn pow_truncated(&self, k: u64, bound: u32) -> Poly3 {
        let mut acc = Poly3::from_terms(self.p, &[(1, [0, 0, 0])]);
        let base = self.mul_truncated(&acc, bound);
        for _ in 0..k {
            acc = acc.mul_truncated(&base, bound);
        }
        acc
    }
}

impl fmt::Display for Poly3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let names = ["x", "y", "z"];
        let mut parts: Vec<alloc::string::String> = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mut s = alloc::string::String::new();
            let mono: Vec<alloc::string::String> = e
                .iter()
                .zip(names)
                .filter(|(&k, _)| k > 0)
                .map(|(&k, v)| if k == 1 { v.into() } else { alloc::format!("{v}^{k}") })
                .collect();
            if *c != 1 || mono.is_empty() {
                s.push_str(&alloc::format!("{c}"));
                if !mono.is_empty() {
                    s.push('*');
                }
            }
            s.push_str(&mono.join("*"));
            parts.push(s);
        }
        f.write_str(&parts.join(" + "))
    }
}

/// `f^{p−1} ∉ (x^p, y^p, z^p)`.
pub fn fedder_is_fpure(f: &Poly3) -> Result<bool, FedderError> {
    let p = f.characteristic();
    if !is_prime(p) {
        return Err(FedderError::NotPrime(p));
    }
    if f.is_zero() {
        return Err(FedderError::ZeroPolynomial(p));
    }
    Ok(!f.pow_truncated(p - 1, p as u32).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fermat(p: u64) -> Poly3 {
        Poly3::from_terms(p, &[(1, [3, 0, 0]), (1, [0, 3, 0]), (1, [0, 0, 3])])
    }

    #[test]
    fn fermat_cubic() {
        assert_eq!(fedder_is_fpure(&fermat(7)), Ok(true));
        assert_eq!(fedder_is_fpure(&fermat(5)), Ok(false));
    }

    #[test]
    fn linear_form_is_fpure() {
        assert_eq!(fedder_is_fpure(&Poly3::from_terms(3, &[(1, [1, 0, 0])])), Ok(true));
    }

    #[test]
    fn zero_polynomial_rejected() {
        let f = Poly3::from_terms(5, &[(5, [1, 0, 0]), (3, [0, 1, 0]), (-3, [0, 1, 0])]);
        assert_eq!(fedder_is_fpure(&f), Err(FedderError::ZeroPolynomial(5)));
    }

    #[test]
    fn truncated_power_matches_binomial_expansion() {
        // (x + y)^2 = x^2 + 2xy + y^2 over F_5, nothing truncated below bound 3.
        let f = Poly3::from_terms(5, &[(1, [1, 0, 0]), (1, [0, 1, 0])]);
        let sq = f.pow_truncated(2, 3);
        let expected: Vec<_> = [([0, 2, 0], 1), ([1, 1, 0], 2), ([2, 0, 0], 1)].into();
        assert_eq!(sq.terms().collect::<Vec<_>>(), expected);
        assert!(f.pow_truncated(3, 3).terms().all(|(e, _)| e.iter().all(|&k| k < 3)));
    }
}
