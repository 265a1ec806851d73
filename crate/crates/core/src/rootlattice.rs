//! The star-shaped Kac–Moody lattice attached to a list of weights.
//!
//! The graph has a central vertex `∗` and one arm `(i,1) — (i,2) — … —
//! (i, r_i − 1)` per weight, with `∗` joined to every `(i,1)`. The lattice
//! `L = Z α_∗ ⊕ ⊕ Z α_ij` carries the Cartan pairing `C = 2E − A`, and the
//! extended lattice `L̂ = L ⊕ Z δ` receives the types of sheaves.
//!
//! Vectors are stored per arm; internally every algorithm works on the flat
//! coordinate list `[ρ, arm 1…, arm 2…, …]`.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::picard::Weights;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("vectors belong to different star graphs")]
    GraphMismatch,
    #[error("vertex {0} is not on the graph")]
    NoSuchVertex(Vertex),
    #[error("the zero vector is not a root")]
    ZeroVector,
    #[error("weights {0} do not give a finite-type graph")]
    NotFiniteType(Weights),
}

/// A vertex of the star graph. Arm and position indices are 1-based, so
/// `Arm(i, j)` is the simple root `α_ij`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    Star,
    Arm(usize, usize),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Star => f.write_str("*"),
            Vertex::Arm(i, j) => write!(f, "({i},{j})"),
        }
    }
}

/// Element of `L`: `ρ α_∗ + Σ c_ij α_ij`, with `arms[i-1][j-1] = c_ij`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVector {
    pub rho: i64,
    pub arms: Vec<Vec<i64>>,
}

impl LatticeVector {
    pub fn zero(graph: &StarGraph) -> Self {
        LatticeVector { rho: 0, arms: graph.arm_lengths.iter().map(|&a| vec![0; a]).collect() }
    }

    pub fn simple(graph: &StarGraph, v: Vertex) -> Result<Self, RootError> {
        let idx = graph.index(v)?;
        let mut flat = vec![0; graph.vertex_count()];
        flat[idx] = 1;
        Ok(graph.unflatten(&flat))
    }

    pub fn is_zero(&self) -> bool {
        self.rho == 0 && self.arms.iter().flatten().all(|&c| c == 0)
    }

    pub fn add(&self, other: &LatticeVector) -> LatticeVector {
        LatticeVector {
            rho: self.rho + other.rho,
            arms: self
                .arms
                .iter()
                .zip(&other.arms)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
                .collect(),
        }
    }

    pub fn scale(&self, k: i64) -> LatticeVector {
        LatticeVector {
            rho: self.rho * k,
            arms: self.arms.iter().map(|a| a.iter().map(|x| x * k).collect()).collect(),
        }
    }

    /// Sum of all coefficients.
    pub fn height(&self) -> i64 {
        self.rho + self.arms.iter().flatten().sum::<i64>()
    }

    fn shape(&self) -> Vec<usize> {
        self.arms.iter().map(Vec::len).collect()
    }
}

/// Element of `L̂ = L ⊕ Z δ`. Types of sheaves live here.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HatVector {
    pub base: LatticeVector,
    pub dhat: i64,
}

impl HatVector {
    pub fn new(base: LatticeVector, dhat: i64) -> Self {
        HatVector { base, dhat }
    }

    pub fn rho(&self) -> i64 {
        self.base.rho
    }

    pub fn add(&self, other: &HatVector) -> HatVector {
        HatVector { base: self.base.add(&other.base), dhat: self.dhat + other.dhat }
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}a*", self.rho)?;
        for (i, arm) in self.arms.iter().enumerate() {
            for (j, c) in arm.iter().enumerate() {
                if *c != 0 {
                    write!(f, " {:+}a{},{}", c, i + 1, j + 1)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for HatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:+}d", self.base, self.dhat)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootClass {
    Real,
    Imaginary,
    NotRoot,
}

/// The classical Dynkin type of a finite-type star graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AdeType {
    A(usize),
    D(usize),
    E(usize),
}

impl AdeType {
    /// Number of positive roots of the classical root system.
    pub fn positive_root_count(self) -> usize {
        match self {
            AdeType::A(n) => n * (n + 1) / 2,
            AdeType::D(n) => n * (n - 1),
            AdeType::E(6) => 36,
            AdeType::E(7) => 63,
            AdeType::E(8) => 120,
            AdeType::E(_) => unreachable!("only E6, E7 and E8 exist"),
        }
    }

    pub fn rank(self) -> usize {
        match self {
            AdeType::A(n) | AdeType::D(n) | AdeType::E(n) => n,
        }
    }
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdeType::A(n) => write!(f, "A{n}"),
            AdeType::D(n) => write!(f, "D{n}"),
            AdeType::E(n) => write!(f, "E{n}"),
        }
    }
}

/// The star graph of a list of weights; arm `i` has `r_i − 1` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StarGraph {
    arm_lengths: Vec<usize>,
    offsets: Vec<usize>,
    neighbors: Vec<Vec<usize>>,
}

impl StarGraph {
    pub fn new(weights: &Weights) -> Self {
        StarGraph::from_arm_lengths(weights.weights().iter().map(|&r| (r - 1) as usize).collect())
    }

    pub fn from_arm_lengths(arm_lengths: Vec<usize>) -> Self {
        let mut offsets = Vec::with_capacity(arm_lengths.len());
        let mut next = 1;
        for &a in &arm_lengths {
            offsets.push(next);
            next += a;
        }
        let mut neighbors = vec![Vec::new(); next];
        for (&off, &len) in offsets.iter().zip(&arm_lengths) {
            if len == 0 {
                continue;
            }
            neighbors[0].push(off);
            neighbors[off].push(0);
            for k in off..off + len - 1 {
                neighbors[k].push(k + 1);
                neighbors[k + 1].push(k);
            }
        }
        StarGraph { arm_lengths, offsets, neighbors }
    }

    pub fn arm_lengths(&self) -> &[usize] {
        &self.arm_lengths
    }

    /// `1 + Σ (r_i − 1)`.
    pub fn vertex_count(&self) -> usize {
        self.neighbors.len()
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        (0..self.vertex_count()).map(|k| self.vertex(k)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn index(&self, v: Vertex) -> Result<usize, RootError> {
        match v {
            Vertex::Star => Ok(0),
            Vertex::Arm(i, j) => {
                if i == 0 || i > self.arm_lengths.len() || j == 0 || j > self.arm_lengths[i - 1] {
                    Err(RootError::NoSuchVertex(v))
                } else {
                    Ok(self.offsets[i - 1] + j - 1)
                }
            }
        }
    }

    pub fn vertex(&self, idx: usize) -> Vertex {
        if idx == 0 {
            return Vertex::Star;
        }
        let arm = (0..self.offsets.len())
            .rposition(|a| self.arm_lengths[a] > 0 && self.offsets[a] <= idx)
            .expect("index on graph");
        Vertex::Arm(arm + 1, idx - self.offsets[arm] + 1)
    }

    pub fn neighbors_of(&self, idx: usize) -> &[usize] {
        &self.neighbors[idx]
    }

    fn check(&self, v: &LatticeVector) -> Result<(), RootError> {
        if v.shape() == self.arm_lengths {
            Ok(())
        } else {
            Err(RootError::GraphMismatch)
        }
    }

    pub fn flatten(&self, v: &LatticeVector) -> Vec<i64> {
        let mut flat = Vec::with_capacity(self.vertex_count());
        flat.push(v.rho);
        for arm in &v.arms {
            flat.extend_from_slice(arm);
        }
        flat
    }

    pub fn unflatten(&self, flat: &[i64]) -> LatticeVector {
        let arms = self
            .offsets
            .iter()
            .zip(&self.arm_lengths)
            .map(|(&o, &len)| flat[o..o + len].to_vec())
            .collect();
        LatticeVector { rho: flat[0], arms }
    }

    /// `(α_s, v) = 2 v_s − Σ_{t ~ s} v_t`.
    fn simple_pairing(&self, s: usize, flat: &[i64]) -> i64 {
        2 * flat[s] - self.neighbors[s].iter().map(|&t| flat[t]).sum::<i64>()
    }

    fn flat_pairing(&self, u: &[i64], v: &[i64]) -> i64 {
        (0..u.len()).map(|s| u[s] * self.simple_pairing(s, v)).sum()
    }

    /// `uᵀ C v` with `C = 2E − A`.
    pub fn cartan_pairing(&self, u: &LatticeVector, v: &LatticeVector) -> Result<i64, RootError> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.flat_pairing(&self.flatten(u), &self.flatten(v)))
    }

    /// The simple reflection `λ ↦ λ − (α_s, λ) α_s`.
    pub fn reflect(&self, v: &LatticeVector, s: Vertex) -> Result<LatticeVector, RootError> {
        self.check(v)?;
        let idx = self.index(s)?;
        let mut flat = self.flatten(v);
        flat[idx] -= self.simple_pairing(idx, &flat);
        Ok(self.unflatten(&flat))
    }

    fn support_connected(&self, flat: &[i64]) -> bool {
        let Some(start) = flat.iter().position(|&c| c != 0) else {
            return false;
        };
        let mut seen = vec![false; flat.len()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(x) = queue.pop_front() {
            for &y in &self.neighbors[x] {
                if flat[y] != 0 && !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        flat.iter().zip(&seen).all(|(&c, &s)| c == 0 || s)
    }

    /// Reflection budget for [`classify_root`](Self::classify_root).
    pub fn descent_bound(&self) -> usize {
        10 * self.vertex_count() * self.vertex_count()
    }

    /// Decides whether `v` is a real root, an imaginary root or no root.
    ///
    /// Works on the representative with non-negative coefficients and
    /// repeatedly applies a simple reflection whose pairing with it is
    /// positive, which lowers the height. The descent ends at a simple root
    /// (real), in the fundamental set (imaginary), or leaves the positive
    /// cone (not a root).
    pub fn classify_root(&self, v: &LatticeVector) -> Result<RootClass, RootError> {
        self.check(v)?;
        if v.is_zero() {
            return Err(RootError::ZeroVector);
        }
        let mut flat = self.flatten(v);
        let has_pos = flat.iter().any(|&c| c > 0);
        let has_neg = flat.iter().any(|&c| c < 0);
        if has_pos && has_neg {
            return Ok(RootClass::NotRoot);
        }
        if has_neg {
            flat.iter_mut().for_each(|c| *c = -*c);
        }
        for _ in 0..self.descent_bound() {
            if flat.iter().sum::<i64>() == 1 {
                return Ok(RootClass::Real);
            }
            let Some((s, k)) = (0..flat.len())
                .map(|s| (s, self.simple_pairing(s, &flat)))
                .find(|&(_, k)| k > 0)
            else {
                return Ok(if self.support_connected(&flat) {
                    RootClass::Imaginary
                } else {
                    RootClass::NotRoot
                });
            };
            flat[s] -= k;
            if flat[s] < 0 {
                return Ok(RootClass::NotRoot);
            }
        }
        Ok(RootClass::NotRoot)
    }

    /// `t ∈ L̂⁺`: a non-negative combination of `α_∗ + mδ`, `δ`, `α_ij` and
    /// `δ − Σ_j α_ij`.
    ///
    /// With `k_i` copies of `δ − Σ_j α_ij`, the arm coefficients need
    /// `c_ij + k_i ≥ 0`; the minimal choice is `k_i = max(0, −min_j c_ij)`.
    /// When `ρ ≥ 1` the `α_∗ + mδ` generators absorb any `δ` coefficient;
    /// when `ρ = 0` the remaining `δ` coefficient must cover `Σ k_i`.
    pub fn in_hat_cone(&self, t: &HatVector) -> Result<bool, RootError> {
        self.check(&t.base)?;
        if t.base.rho < 0 {
            return Ok(false);
        }
        if t.base.rho >= 1 {
            return Ok(true);
        }
        let k_total: i64 = t
            .base
            .arms
            .iter()
            .map(|arm| arm.iter().map(|&c| (-c).max(0)).max().unwrap_or(0))
            .sum();
        Ok(t.dhat >= k_total)
    }

    /// `t ∈ Δ̂ ∩ L̂⁺`.
    pub fn is_positive_root_hat(&self, t: &HatVector) -> Result<bool, RootError> {
        let in_delta = if t.base.is_zero() {
            self.check(&t.base)?;
            t.dhat != 0
        } else {
            self.classify_root(&t.base)? != RootClass::NotRoot
        };
        Ok(in_delta && self.in_hat_cone(t)?)
    }

    /// Classical type of the graph, when it is a Dynkin diagram.
    pub fn ade_type(&self) -> Option<AdeType> {
        let mut arms: Vec<usize> = self.arm_lengths.iter().copied().filter(|&a| a > 0).collect();
        arms.sort_unstable();
        let n = self.vertex_count();
        match arms.as_slice() {
            [] | [_] | [_, _] => Some(AdeType::A(n)),
            [1, 1, _] => Some(AdeType::D(n)),
            [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => Some(AdeType::E(n)),
            _ => None,
        }
    }

    pub fn is_finite_type(&self) -> bool {
        self.ade_type().is_some()
    }

    fn positive_roots_flat(&self) -> BTreeSet<Vec<i64>> {
        let n = self.vertex_count();
        let mut roots = BTreeSet::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            let mut e = vec![0; n];
            e[s] = 1;
            roots.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(root) = queue.pop_front() {
            for s in 0..n {
                let k = self.simple_pairing(s, &root);
                if k >= 0 {
                    continue;
                }
                let mut next = root.clone();
                next[s] -= k;
                if roots.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        roots
    }
}

/// Finite-type test on the weights, by recognising the ADE diagrams.
pub fn is_finite_type(weights: &Weights) -> bool {
    StarGraph::new(weights).is_finite_type()
}

/// All positive roots of a finite-type star graph, sorted.
///
/// Closes the simple roots under the simple reflections that raise the
/// height; in finite type this reaches every positive root.
pub fn enumerate_positive_roots(weights: &Weights) -> Result<Vec<LatticeVector>, RootError> {
    let graph = StarGraph::new(weights);
    if !graph.is_finite_type() {
        return Err(RootError::NotFiniteType(weights.clone()));
    }
    Ok(graph.positive_roots_flat().iter().map(|f| graph.unflatten(f)).collect())
}

/// Largest `α_∗` coefficient of a positive root; the maximal rank of an
/// indecomposable bundle.
pub fn rmax(weights: &Weights) -> Result<i64, RootError> {
    Ok(enumerate_positive_roots(weights)?.iter().map(|r| r.rho).max().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(r: &[i64]) -> Weights {
        Weights::new(r.to_vec()).unwrap()
    }

    fn graph(r: &[i64]) -> StarGraph {
        StarGraph::new(&w(r))
    }

    #[test]
    fn graph_shape() {
        let g = graph(&[2, 3, 7]);
        assert_eq!(g.vertex_count(), 1 + 1 + 2 + 6);
        assert_eq!(g.edge_count(), g.vertex_count() - 1);
        assert_eq!(g.vertex(0), Vertex::Star);
        for idx in 0..g.vertex_count() {
            assert_eq!(g.index(g.vertex(idx)), Ok(idx));
        }
        assert!(g.index(Vertex::Arm(1, 2)).is_err());
    }

    #[test]
    fn pairing_examples() {
        let g = graph(&[2, 3]);
        let star = LatticeVector::simple(&g, Vertex::Star).unwrap();
        let a11 = LatticeVector::simple(&g, Vertex::Arm(1, 1)).unwrap();
        let a21 = LatticeVector::simple(&g, Vertex::Arm(2, 1)).unwrap();
        assert_eq!(g.cartan_pairing(&star, &star), Ok(2));
        assert_eq!(g.cartan_pairing(&star, &a11), Ok(-1));
        assert_eq!(g.cartan_pairing(&a11, &a21), Ok(0));
        let other = LatticeVector::zero(&graph(&[3, 3]));
        assert_eq!(g.cartan_pairing(&star, &other), Err(RootError::GraphMismatch));
    }

    #[test]
    fn reflection_examples() {
        let g = graph(&[3]);
        let a11 = LatticeVector::simple(&g, Vertex::Arm(1, 1)).unwrap();
        let a12 = LatticeVector::simple(&g, Vertex::Arm(1, 2)).unwrap();
        assert_eq!(g.reflect(&a11, Vertex::Arm(1, 1)).unwrap(), a11.scale(-1));
        assert_eq!(g.reflect(&a11, Vertex::Arm(1, 2)).unwrap(), a11.add(&a12));
        let v = LatticeVector { rho: 3, arms: vec![vec![-1, 4]] };
        let back = g.reflect(&g.reflect(&v, Vertex::Star).unwrap(), Vertex::Star).unwrap();
        assert_eq!(back, v);
    }

    #[test]
    fn finite_type_examples() {
        assert!(is_finite_type(&w(&[2, 3, 5])));
        assert!(!is_finite_type(&w(&[2, 3, 6])));
        assert!(!is_finite_type(&w(&[2, 3, 7])));
        assert!(is_finite_type(&w(&[])));
        assert!(is_finite_type(&w(&[9, 11])));
        assert!(is_finite_type(&w(&[2, 2, 30])));
        assert!(!is_finite_type(&w(&[2, 2, 2, 2])));
    }

    #[test]
    fn classify_examples() {
        let g = graph(&[2, 2, 2, 2]);
        let null = LatticeVector { rho: 2, arms: vec![vec![1]; 4] };
        assert_eq!(g.classify_root(&null), Ok(RootClass::Imaginary));
        assert_eq!(g.classify_root(&LatticeVector::simple(&g, Vertex::Star).unwrap()), Ok(RootClass::Real));
        assert_eq!(g.classify_root(&null.scale(-1)), Ok(RootClass::Imaginary));

        let e8 = graph(&[2, 3, 5]);
        let v = LatticeVector { rho: 1, arms: vec![vec![3], vec![0, 0], vec![0, 0, 0, 0]] };
        assert_eq!(e8.classify_root(&v), Ok(RootClass::NotRoot));
        assert_eq!(e8.classify_root(&LatticeVector::zero(&e8)), Err(RootError::ZeroVector));

        let mixed = LatticeVector { rho: 1, arms: vec![vec![-1], vec![0, 0], vec![0, 0, 0, 0]] };
        assert_eq!(e8.classify_root(&mixed), Ok(RootClass::NotRoot));
    }

    #[test]
    fn sum_of_orthogonal_simple_roots_is_not_a_root() {
        // α_{1,1} + α_{2,1}: two orthogonal simple roots.
        let g = graph(&[2, 2, 2, 2]);
        let v = LatticeVector { rho: 0, arms: vec![vec![1], vec![1], vec![0], vec![0]] };
        assert_eq!(g.classify_root(&v), Ok(RootClass::NotRoot));
    }

    #[test]
    fn enumerations() {
        assert_eq!(enumerate_positive_roots(&w(&[2, 3, 5])).unwrap().len(), 120);
        assert_eq!(enumerate_positive_roots(&w(&[2, 2])).unwrap().len(), 6);
        assert_eq!(enumerate_positive_roots(&w(&[2])).unwrap().len(), 3);
        assert_eq!(rmax(&w(&[2, 3, 5])), Ok(6));
        assert_eq!(rmax(&w(&[2, 2])), Ok(1));
        assert_eq!(rmax(&w(&[2, 3, 4])), Ok(4));
        assert!(matches!(
            enumerate_positive_roots(&w(&[3, 3, 3])),
            Err(RootError::NotFiniteType(_))
        ));
    }

    #[test]
    fn hat_membership_examples() {
        let g = graph(&[2, 3]);
        let star = LatticeVector::simple(&g, Vertex::Star).unwrap();
        assert_eq!(g.is_positive_root_hat(&HatVector::new(star.clone(), 0)), Ok(true));
        assert_eq!(g.is_positive_root_hat(&HatVector::new(LatticeVector::zero(&g), 1)), Ok(true));
        assert_eq!(g.is_positive_root_hat(&HatVector::new(star.scale(-1), 0)), Ok(false));
        assert_eq!(g.is_positive_root_hat(&HatVector::new(LatticeVector::zero(&g), -1)), Ok(false));
        // δ − α_{2,1} − α_{2,2}: type of a torsion sheaf at the second stacky point.
        let torsion = LatticeVector { rho: 0, arms: vec![vec![0], vec![-1, -1]] };
        assert_eq!(g.is_positive_root_hat(&HatVector::new(torsion.clone(), 1)), Ok(true));
        assert_eq!(g.is_positive_root_hat(&HatVector::new(torsion, 0)), Ok(false));
    }
}
