//! Finite fields `F_{p^k} = F_p[t] / (g)` for small `p^k`.
//!
//! Elements are coefficient vectors of length `k` (lowest degree first). The
//! modulus `g` is the first monic irreducible polynomial of degree `k` in
//! base-`p` index order, found by trial division against every monic
//! polynomial of degree at most `k / 2`.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    k: u32,
    /// Monic modulus, `k + 1` coefficients, lowest degree first.
    modulus: Vec<u64>,
}

pub type Element = Vec<u64>;

impl FiniteField {
    /// `F_{p^k}`; `p` must be prime and `k ≥ 1`.
    pub fn new(p: u64, k: u32) -> Self {
        assert!(k >= 1, "extension degree must be positive");
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            (0..p.pow(k))
                .map(|idx| {
                    let mut g = digits(idx, p, k as usize);
                    g.push(1);
                    g
                })
                .find(|g| is_irreducible(g, p))
                .expect("irreducible polynomials exist in every degree")
        };
        FiniteField { p, k, modulus }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.k)
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// The element with base-`p` digit expansion `idx`.
    pub fn element(&self, idx: u64) -> Element {
        digits(idx, self.p, self.k as usize)
    }

    pub fn index(&self, x: &[u64]) -> u64 {
        x.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn from_base(&self, c: u64) -> Element {
        let mut x = vec![0; self.k as usize];
        x[0] = c % self.p;
        x
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Element {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Element {
        let p = self.p;
        let k = self.k as usize;
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        // Reduce by the monic modulus from the top down.
        for top in (k..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (s, &g) in self.modulus[..k].iter().enumerate() {
                let idx = top - k + s;
                prod[idx] = (prod[idx] + (p - c) * g) % p;
            }
        }
        prod.truncate(k);
        prod
    }

    /// Evaluates `Σ coeffs[i] x^i` with base-field coefficients.
    pub fn eval(&self, coeffs: &[u64], x: &[u64]) -> Element {
        coeffs.iter().rev().fold(vec![0; self.k as usize], |acc, &c| {
            let shifted = self.mul(&acc, x);
            self.add(&shifted, &self.from_base(c))
        })
    }
}

fn digits(mut idx: u64, p: u64, len: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(idx % p);
        idx /= p;
    }
    out
}

fn inv_mod(a: u64, p: u64) -> u64 {
    crate::arith::pow_mod(a, p - 2, p)
}

/// Remainder of `f` modulo the monic `g` over `F_p`.
fn poly_rem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    debug_assert_eq!(g[dg], 1);
    while r.len() > dg {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dg;
        if c != 0 {
            for (s, &gs) in g.iter().enumerate() {
                r[shift + s] = (r[shift + s] + (p - c) * gs % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn is_irreducible(g: &[u64], p: u64) -> bool {
    let k = g.len() - 1;
    for d in 1..=k / 2 {
        for idx in 0..p.pow(d as u32) {
            let mut h = digits(idx, p, d);
            h.push(1);
            if poly_rem(g, &h, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Multiplicative inverse in `F_p`.
pub fn inverse_mod_p(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        None
    } else {
        Some(inv_mod(a % p, p))
    }
}
