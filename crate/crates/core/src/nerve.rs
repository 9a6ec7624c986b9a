//! Čech cochain algebra over an abstract nerve: the differential δ, front/
//! back-face cup products with both sign conventions, cocycle checks, exact
//! coboundary solving over ℚ, and the flat-bundle pairing that evaluates a
//! degree-2 × degree-1 cup against a user-supplied cycle.
//!
//! Nerves are abstract simplicial complexes supplied as data; no geometric
//! cover construction happens here. Missing cochain entries denote zero.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalars::{rational_from_str, rational_to_str, CircleNumber, ExactScalar, Rational};

#[derive(Debug, Error, PartialEq)]
pub enum NerveError {
    #[error("simplex {0:?} is not strictly increasing or has out-of-range vertices")]
    BadSimplex(Vec<usize>),
    #[error("face {0:?} of a listed simplex is missing from the nerve")]
    MissingFace(Vec<usize>),
    #[error("cochain key {0:?} is not a simplex of the nerve")]
    KeyNotInNerve(Vec<usize>),
    #[error("expected a cochain of degree {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("input is not a cocycle: δ is nonzero on {0:?}")]
    NotACocycle(Vec<usize>),
    #[error("the transition cochain is not flat: δb is not integer-valued on {0:?}")]
    NotFlat(Vec<usize>),
    #[error("evaluation data is not a cycle: ∂ is nonzero on {0:?}")]
    NotACycle(Vec<usize>),
    #[error("linear system has no solution")]
    NoSolution,
}

/// Simplex of the nerve: a strictly increasing vertex tuple.
pub type Simplex = Vec<usize>;

/// Abstract nerve of a good cover: a finite simplicial complex closed under
/// taking faces, with every singleton present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nerve {
    vertex_count: usize,
    simplices: BTreeSet<Simplex>,
}

impl Nerve {
    /// Builds a nerve from its maximal (or any generating) simplices; all
    /// faces and all singletons are added automatically.
    pub fn generated_by(vertex_count: usize, generators: &[Simplex]) -> Result<Self, NerveError> {
        let mut simplices = BTreeSet::new();
        for v in 0..vertex_count {
            simplices.insert(vec![v]);
        }
        let mut stack: Vec<Simplex> = generators.to_vec();
        while let Some(s) = stack.pop() {
            if s.is_empty() || s.windows(2).any(|w| w[0] >= w[1]) || s.iter().any(|&v| v >= vertex_count) {
                return Err(NerveError::BadSimplex(s));
            }
            if !simplices.insert(s.clone()) {
                continue;
            }
            for m in 0..s.len() {
                if s.len() > 1 {
                    let mut face = s.clone();
                    face.remove(m);
                    stack.push(face);
                }
            }
        }
        Ok(Nerve {
            vertex_count,
            simplices,
        })
    }

    /// Validates an explicit simplex list: faces present, singletons present.
    pub fn from_simplices(vertex_count: usize, simplices: Vec<Simplex>) -> Result<Self, NerveError> {
        let set: BTreeSet<Simplex> = simplices.into_iter().collect();
        for s in &set {
            if s.is_empty() || s.windows(2).any(|w| w[0] >= w[1]) || s.iter().any(|&v| v >= vertex_count) {
                return Err(NerveError::BadSimplex(s.clone()));
            }
            if s.len() > 1 {
                for m in 0..s.len() {
                    let mut face = s.clone();
                    face.remove(m);
                    if !set.contains(&face) {
                        return Err(NerveError::MissingFace(face));
                    }
                }
            }
        }
        for v in 0..vertex_count {
            if !set.contains(&vec![v]) {
                return Err(NerveError::MissingFace(vec![v]));
            }
        }
        Ok(Nerve {
            vertex_count,
            simplices: set,
        })
    }

    /// The triangle boundary: nerve of the three-arc circle cover
    /// (all pairs, no triple overlap).
    pub fn circle_triangle() -> Self {
        Nerve::generated_by(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn contains(&self, s: &[usize]) -> bool {
        self.simplices.contains(s)
    }

    /// All simplices of the given Čech degree (dimension = degree).
    pub fn simplices_of_degree(&self, r: usize) -> Vec<&Simplex> {
        self.simplices.iter().filter(|s| s.len() == r + 1).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.simplices.iter().map(|s| s.len() - 1).max().unwrap_or(0)
    }
}

// ---------------------------------------------------------------------------
// Coefficient rings
// ---------------------------------------------------------------------------

/// Commutative coefficient ring for Čech cochains.
pub trait Ring: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn is_zero(&self) -> bool;
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Ring for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Ring for ExactScalar {
    fn zero() -> Self {
        ExactScalar::zero()
    }
    fn one() -> Self {
        ExactScalar::one()
    }
    fn add(&self, other: &Self) -> Self {
        ExactScalar::add(self, other)
    }
    fn neg(&self) -> Self {
        ExactScalar::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        ExactScalar::mul(self, other)
    }
    fn is_zero(&self) -> bool {
        ExactScalar::is_zero(self)
    }
}

impl Ring for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
}

// ---------------------------------------------------------------------------
// Cochains
// ---------------------------------------------------------------------------

/// Sparse Čech cochain of fixed degree; absent simplices carry zero.
#[derive(Debug, Clone, PartialEq)]
pub struct Cochain<R: Ring> {
    degree: usize,
    values: BTreeMap<Simplex, R>,
}

impl<R: Ring> Cochain<R> {
    pub fn zero(degree: usize) -> Self {
        Cochain {
            degree,
            values: BTreeMap::new(),
        }
    }

    pub fn from_entries(
        nerve: &Nerve,
        degree: usize,
        entries: impl IntoIterator<Item = (Simplex, R)>,
    ) -> Result<Self, NerveError> {
        let mut values = BTreeMap::new();
        for (s, v) in entries {
            if s.len() != degree + 1 {
                return Err(NerveError::DegreeMismatch {
                    expected: degree,
                    got: s.len().saturating_sub(1),
                });
            }
            if !nerve.contains(&s) {
                return Err(NerveError::KeyNotInNerve(s));
            }
            if !v.is_zero() {
                values.insert(s, v);
            }
        }
        Ok(Cochain { degree, values })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn get(&self, s: &[usize]) -> R {
        self.values.get(s).cloned().unwrap_or_else(R::zero)
    }

    pub fn set(&mut self, s: Simplex, v: R) {
        assert_eq!(s.len(), self.degree + 1, "key degree mismatch");
        if v.is_zero() {
            self.values.remove(&s);
        } else {
            self.values.insert(s, v);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Simplex, &R)> {
        self.values.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn add(&self, other: &Cochain<R>) -> Cochain<R> {
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (s, v) in &other.values {
            let merged = out.get(s).add(v);
            out.set(s.clone(), merged);
        }
        out
    }

    pub fn neg(&self) -> Cochain<R> {
        Cochain {
            degree: self.degree,
            values: self.values.iter().map(|(s, v)| (s.clone(), v.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Cochain<R>) -> Cochain<R> {
        self.add(&other.neg())
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Cochain<S> {
        let mut values = BTreeMap::new();
        for (s, v) in &self.values {
            let w = f(v);
            if !w.is_zero() {
                values.insert(s.clone(), w);
            }
        }
        Cochain {
            degree: self.degree,
            values,
        }
    }
}

/// Čech differential: (δc)_{i₀…i_{r+1}} = Σₘ (−1)ᵐ c_{i₀…îₘ…i_{r+1}},
/// restricted to simplices of the nerve.
pub fn cech_delta<R: Ring>(nerve: &Nerve, c: &Cochain<R>) -> Cochain<R> {
    let r = c.degree();
    let mut out = Cochain::zero(r + 1);
    for s in nerve.simplices_of_degree(r + 1) {
        let mut acc = R::zero();
        for m in 0..s.len() {
            let mut face = s.clone();
            face.remove(m);
            let v = c.get(&face);
            acc = if m % 2 == 0 { acc.add(&v) } else { acc.sub(&v) };
        }
        if !acc.is_zero() {
            out.set(s.clone(), acc);
        }
    }
    out
}

/// Front-face/back-face cup product:
/// (a∪b)_{i₀…i_{r+s}} = a_{i₀…i_r}·b_{i_r…i_{r+s}}.
pub fn cech_cup<R: Ring>(nerve: &Nerve, a: &Cochain<R>, b: &Cochain<R>) -> Cochain<R> {
    let (r, s) = (a.degree(), b.degree());
    let mut out = Cochain::zero(r + s);
    for simplex in nerve.simplices_of_degree(r + s) {
        let front = simplex[..=r].to_vec();
        let back = simplex[r..].to_vec();
        let v = a.get(&front).mul(&b.get(&back));
        if !v.is_zero() {
            out.set(simplex.clone(), v);
        }
    }
    out
}

pub fn is_cocycle<R: Ring>(nerve: &Nerve, c: &Cochain<R>) -> bool {
    cech_delta(nerve, c).is_zero()
}

// ---------------------------------------------------------------------------
// Bigraded cochains and the signed cup of the hypercohomology product
// ---------------------------------------------------------------------------

/// Coefficient complex for bigraded cochains: graded values with a product
/// and a differential, supplied by the caller.
pub trait CoefficientComplex {
    type Elem: Clone + PartialEq + std::fmt::Debug;
    fn zero(&self) -> Self::Elem;
    fn is_zero(&self, e: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Product of an element of degree p with one of degree q; must land in
    /// degree p + q (zero when that exceeds the complex length).
    fn mul(&self, p: usize, a: &Self::Elem, q: usize, b: &Self::Elem) -> Self::Elem;
    /// Differential from degree p to p + 1.
    fn d(&self, p: usize, a: &Self::Elem) -> Self::Elem;
    fn max_degree(&self) -> usize;
}

/// Element of a Čech double complex over an abstract coefficient complex,
/// stored by bidegree (Čech degree r, coefficient degree j).
#[derive(Debug, Clone, PartialEq)]
pub struct BigradedCochain<E: Clone + PartialEq + std::fmt::Debug> {
    components: BTreeMap<(usize, usize), BTreeMap<Simplex, E>>,
}

impl<E: Clone + PartialEq + std::fmt::Debug> BigradedCochain<E> {
    pub fn new() -> Self {
        BigradedCochain {
            components: BTreeMap::new(),
        }
    }

    pub fn get(&self, r: usize, j: usize, s: &[usize]) -> Option<&E> {
        self.components.get(&(r, j)).and_then(|m| m.get(s))
    }

    pub fn components(&self) -> impl Iterator<Item = (&(usize, usize), &BTreeMap<Simplex, E>)> {
        self.components.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn insert<A: CoefficientComplex<Elem = E>>(
        &mut self,
        alg: &A,
        r: usize,
        j: usize,
        s: Simplex,
        v: E,
    ) {
        assert_eq!(s.len(), r + 1, "key degree mismatch");
        let comp = self.components.entry((r, j)).or_default();
        let merged = match comp.get(&s) {
            Some(old) => alg.add(old, &v),
            None => v,
        };
        if alg.is_zero(&merged) {
            comp.remove(&s);
        } else {
            comp.insert(s, merged);
        }
        if self.components.get(&(r, j)).map_or(false, |m| m.is_empty()) {
            self.components.remove(&(r, j));
        }
    }

    pub fn add<A: CoefficientComplex<Elem = E>>(&self, alg: &A, other: &Self) -> Self {
        let mut out = self.clone();
        for ((r, j), m) in &other.components {
            for (s, v) in m {
                out.insert(alg, *r, *j, s.clone(), v.clone());
            }
        }
        out
    }

    pub fn neg<A: CoefficientComplex<Elem = E>>(&self, alg: &A) -> Self {
        let mut out = BigradedCochain::new();
        for ((r, j), m) in &self.components {
            for (s, v) in m {
                out.insert(alg, *r, *j, s.clone(), alg.neg(v));
            }
        }
        out
    }
}

impl<E: Clone + PartialEq + std::fmt::Debug> Default for BigradedCochain<E> {
    fn default() -> Self {
        Self::new()
    }
}

/// Total differential D = δ + (−1)^r d on the double complex.
pub fn bigraded_total_d<A: CoefficientComplex>(
    nerve: &Nerve,
    alg: &A,
    c: &BigradedCochain<A::Elem>,
) -> BigradedCochain<A::Elem> {
    let mut out = BigradedCochain::new();
    for ((r, j), m) in c.components() {
        // δ part
        for s in nerve.simplices_of_degree(r + 1) {
            let mut acc = alg.zero();
            for idx in 0..s.len() {
                let mut face = s.clone();
                face.remove(idx);
                if let Some(v) = m.get(&face) {
                    let signed = if idx % 2 == 0 { v.clone() } else { alg.neg(v) };
                    acc = alg.add(&acc, &signed);
                }
            }
            if !alg.is_zero(&acc) {
                out.insert(alg, r + 1, *j, s.clone(), acc);
            }
        }
        // (−1)^r d part
        if *j < alg.max_degree() {
            for (s, v) in m {
                let mut dv = alg.d(*j, v);
                if r % 2 == 1 {
                    dv = alg.neg(&dv);
                }
                if !alg.is_zero(&dv) {
                    out.insert(alg, *r, j + 1, s.clone(), dv);
                }
            }
        }
    }
    out
}

/// Signed cup product of the hypercohomology pairing: componentwise
/// front/back cup weighted by (−1)^{p·s} for a component of coefficient
/// degree p against one of Čech degree s. This is the chain map realising
/// the induced product on Čech hypercohomology.
pub fn graded_cup<A: CoefficientComplex>(
    nerve: &Nerve,
    alg: &A,
    a: &BigradedCochain<A::Elem>,
    b: &BigradedCochain<A::Elem>,
) -> BigradedCochain<A::Elem> {
    let mut out = BigradedCochain::new();
    for ((r, p), ma) in a.components() {
        for ((s, q), mb) in b.components() {
            if p + q > alg.max_degree() {
                continue;
            }
            let negate = (p * s) % 2 == 1;
            for simplex in nerve.simplices_of_degree(r + s) {
                let front = &simplex[..=*r];
                let back = &simplex[*r..];
                let (Some(va), Some(vb)) = (ma.get(front), mb.get(back)) else {
                    continue;
                };
                let mut v = alg.mul(*p, va, *q, vb);
                if negate {
                    v = alg.neg(&v);
                }
                if !alg.is_zero(&v) {
                    out.insert(alg, r + s, p + q, simplex.clone(), v);
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Chains, cycles, and the flat-bundle pairing
// ---------------------------------------------------------------------------

/// Formal integer combination of simplices of one dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct Chain {
    dimension: usize,
    coefficients: BTreeMap<Simplex, BigInt>,
}

impl Chain {
    pub fn zero(dimension: usize) -> Self {
        Chain {
            dimension,
            coefficients: BTreeMap::new(),
        }
    }

    pub fn from_entries(
        dimension: usize,
        entries: impl IntoIterator<Item = (Simplex, BigInt)>,
    ) -> Self {
        let mut c = Chain::zero(dimension);
        for (s, v) in entries {
            c.push(s, v);
        }
        c
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn push(&mut self, s: Simplex, v: BigInt) {
        assert_eq!(s.len(), self.dimension + 1, "chain key dimension mismatch");
        let merged = self.coefficients.get(&s).cloned().unwrap_or_else(BigInt::zero) + v;
        if merged.is_zero() {
            self.coefficients.remove(&s);
        } else {
            self.coefficients.insert(s, merged);
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Simplex, &BigInt)> {
        self.coefficients.iter()
    }

    /// Simplicial boundary ∂.
    pub fn boundary(&self) -> Chain {
        let mut out = Chain::zero(self.dimension.saturating_sub(1));
        if self.dimension == 0 {
            return out;
        }
        for (s, v) in &self.coefficients {
            for m in 0..s.len() {
                let mut face = s.clone();
                face.remove(m);
                let signed = if m % 2 == 0 { v.clone() } else { -v.clone() };
                out.push(face, signed);
            }
        }
        out
    }

    pub fn is_cycle(&self) -> bool {
        self.boundary().coefficients.is_empty()
    }

    /// Pairing ⟨c, z⟩ = Σ z_σ·c_σ over the chain's simplices.
    pub fn pair(&self, c: &Cochain<BigRational>) -> BigRational {
        let mut acc = BigRational::zero();
        for (s, v) in &self.coefficients {
            acc += c.get(s) * BigRational::from_integer(v.clone());
        }
        acc
    }
}

/// Shuffle (Eilenberg–Zilber) product of two chains living on a common
/// nerve whose vertices are products of the factors' vertices. `combine`
/// maps a vertex pair to a vertex of the ambient nerve.
///
/// For simplices σ = (a₀…a_p), τ = (b₀…b_q) the product is the signed sum
/// over (p,q)-shuffles of the staircase simplices in σ × τ. Useful for
/// assembling torus fundamental cycles from circle cycles.
pub fn shuffle_product(
    a: &Chain,
    b: &Chain,
    combine: impl Fn(usize, usize) -> usize,
) -> Chain {
    let p = a.dimension();
    let q = b.dimension();
    let mut out = Chain::zero(p + q);
    for (sa, va) in a.entries() {
        for (sb, vb) in b.entries() {
            for (path, sign) in staircase_paths(p, q) {
                let mut simplex = Vec::with_capacity(p + q + 1);
                for &(i, j) in &path {
                    simplex.push(combine(sa[i], sb[j]));
                }
                let coeff = va * vb * BigInt::from(sign);
                out.push(simplex, coeff);
            }
        }
    }
    out
}

/// All monotone staircase paths from (0,0) to (p,q) with the shuffle sign.
fn staircase_paths(p: usize, q: usize) -> Vec<(Vec<(usize, usize)>, i64)> {
    let mut out = Vec::new();
    // A path is a choice of which steps move in the first coordinate.
    // The shuffle sign is (−1)^{#inversions} between the two step sets.
    fn rec(
        i: usize,
        j: usize,
        p: usize,
        q: usize,
        path: &mut Vec<(usize, usize)>,
        steps: &mut Vec<bool>, // true = step in first coordinate
        out: &mut Vec<(Vec<(usize, usize)>, i64)>,
    ) {
        if i == p && j == q {
            // Count inversions: pairs (second-step before first-step).
            let mut sign = 1i64;
            let mut firsts_seen = 0i64;
            let mut inversions = 0i64;
            for &s in steps.iter() {
                if s {
                    firsts_seen += 1;
                } else {
                    inversions += p as i64 - firsts_seen;
                }
            }
            if inversions % 2 == 1 {
                sign = -1;
            }
            out.push((path.clone(), sign));
            return;
        }
        if i < p {
            path.push((i + 1, j));
            steps.push(true);
            rec(i + 1, j, p, q, path, steps, out);
            path.pop();
            steps.pop();
        }
        if j < q {
            path.push((i, j + 1));
            steps.push(false);
            rec(i, j + 1, p, q, path, steps, out);
            path.pop();
            steps.pop();
        }
    }
    let mut path = vec![(0, 0)];
    let mut steps = Vec::new();
    rec(0, 0, p, q, &mut path, &mut steps, &mut out);
    out
}

/// Product of a flat line bundle with a degree-(n−2) character, evaluated
/// Čech-combinatorially: pairs the cup cocycle r∪b ∈ C³(𝒰,ℚ) against the
/// supplied fundamental cycle and reduces mod ℤ.
///
/// Preconditions: δr = 0, δb integer-valued (constant transition data of a
/// flat bundle), and the evaluation data is a cycle.
pub fn flat_bundle_product(
    nerve: &Nerve,
    r: &Cochain<BigInt>,
    b10: &Cochain<BigRational>,
    cycle: &Chain,
) -> Result<CircleNumber, NerveError> {
    if r.degree() != 2 {
        return Err(NerveError::DegreeMismatch {
            expected: 2,
            got: r.degree(),
        });
    }
    if b10.degree() != 1 {
        return Err(NerveError::DegreeMismatch {
            expected: 1,
            got: b10.degree(),
        });
    }
    let dr = cech_delta(nerve, r);
    if let Some((s, _)) = dr.entries().next() {
        return Err(NerveError::NotACocycle(s.clone()));
    }
    let db = cech_delta(nerve, b10);
    for (s, v) in db.entries() {
        if !v.denom().is_one() {
            return Err(NerveError::NotFlat(s.clone()));
        }
    }
    if !cycle.is_cycle() {
        let witness = cycle
            .boundary()
            .entries()
            .next()
            .map(|(s, _)| s.clone())
            .unwrap_or_default();
        return Err(NerveError::NotACycle(witness));
    }
    let r_q = r.map(|v| BigRational::from_integer(v.clone()));
    let cup = cech_cup(nerve, &r_q, b10);
    let value = cycle.pair(&cup);
    Ok(CircleNumber::reduce(&ExactScalar::from_rational(value)))
}

// ---------------------------------------------------------------------------
// Exact linear algebra over ℚ: coboundary solving and cocycle bases
// ---------------------------------------------------------------------------

/// Solves δx = target over ℚ by Gaussian elimination on the coboundary
/// matrix; returns a preimage cochain when one exists.
pub fn solve_coboundary(
    nerve: &Nerve,
    target: &Cochain<BigRational>,
) -> Result<Cochain<BigRational>, NerveError> {
    let r = target
        .degree()
        .checked_sub(1)
        .ok_or(NerveError::NoSolution)?;
    let domain: Vec<Simplex> = nerve.simplices_of_degree(r).into_iter().cloned().collect();
    let codomain: Vec<Simplex> = nerve
        .simplices_of_degree(r + 1)
        .into_iter()
        .cloned()
        .collect();
    let mut matrix = vec![vec![BigRational::zero(); domain.len() + 1]; codomain.len()];
    for (row, s) in codomain.iter().enumerate() {
        for m in 0..s.len() {
            let mut face = s.clone();
            face.remove(m);
            if let Some(col) = domain.iter().position(|d| d == &face) {
                let sign = if m % 2 == 0 {
                    BigRational::one()
                } else {
                    -BigRational::one()
                };
                matrix[row][col] += sign;
            }
        }
        matrix[row][domain.len()] = target.get(s);
    }
    let solution = gaussian_solve(&mut matrix, domain.len()).ok_or(NerveError::NoSolution)?;
    let entries = domain.into_iter().zip(solution);
    Ok(Cochain::from_entries(nerve, r, entries).expect("domain simplices are in the nerve"))
}

/// Basis of the kernel of δ on degree-r cochains over ℚ.
pub fn cocycle_basis(nerve: &Nerve, r: usize) -> Vec<Cochain<BigRational>> {
    let domain: Vec<Simplex> = nerve.simplices_of_degree(r).into_iter().cloned().collect();
    let codomain: Vec<Simplex> = nerve
        .simplices_of_degree(r + 1)
        .into_iter()
        .cloned()
        .collect();
    let mut matrix = vec![vec![BigRational::zero(); domain.len()]; codomain.len()];
    for (row, s) in codomain.iter().enumerate() {
        for m in 0..s.len() {
            let mut face = s.clone();
            face.remove(m);
            if let Some(col) = domain.iter().position(|d| d == &face) {
                let sign = if m % 2 == 0 {
                    BigRational::one()
                } else {
                    -BigRational::one()
                };
                matrix[row][col] += sign;
            }
        }
    }
    nullspace(&matrix, domain.len())
        .into_iter()
        .map(|vec| {
            let entries = domain.iter().cloned().zip(vec);
            Cochain::from_entries(nerve, r, entries).expect("domain simplices are in the nerve")
        })
        .collect()
}

/// Row-reduces an augmented matrix [A | b]; returns a solution of Ax = b.
fn gaussian_solve(matrix: &mut [Vec<BigRational>], cols: usize) -> Option<Vec<BigRational>> {
    let rows = matrix.len();
    let mut pivot_of_col = vec![usize::MAX; cols];
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows).find(|&r| !matrix[r][col].is_zero()) else {
            continue;
        };
        matrix.swap(rank, pivot_row);
        let inv = BigRational::one() / matrix[rank][col].clone();
        for v in matrix[rank].iter_mut() {
            *v *= &inv;
        }
        for r in 0..rows {
            if r != rank && !matrix[r][col].is_zero() {
                let factor = matrix[r][col].clone();
                for c in 0..=cols {
                    let delta = &factor * &matrix[rank][c];
                    matrix[r][c] -= delta;
                }
            }
        }
        pivot_of_col[col] = rank;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    // Inconsistent row: all zeros with nonzero augment.
    for row in matrix.iter() {
        if row[..cols].iter().all(|v| v.is_zero()) && !row[cols].is_zero() {
            return None;
        }
    }
    let mut solution = vec![BigRational::zero(); cols];
    for (col, &p) in pivot_of_col.iter().enumerate() {
        if p != usize::MAX {
            solution[col] = matrix[p][cols].clone();
        }
    }
    Some(solution)
}

/// Nullspace basis of A (rows × cols) over ℚ.
fn nullspace(matrix: &[Vec<BigRational>], cols: usize) -> Vec<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> = matrix.to_vec();
    let rows = m.len();
    let mut pivot_of_col = vec![usize::MAX; cols];
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot_row) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let inv = BigRational::one() / m[rank][col].clone();
        for v in m[rank].iter_mut() {
            *v *= &inv;
        }
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in 0..cols {
                    let delta = &factor * &m[rank][c];
                    m[r][c] -= delta;
                }
            }
        }
        pivot_of_col[col] = rank;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free] != usize::MAX {
            continue;
        }
        let mut vec = vec![BigRational::zero(); cols];
        vec[free] = BigRational::one();
        for (col, &p) in pivot_of_col.iter().enumerate() {
            if p != usize::MAX {
                vec[col] = -m[p][free].clone();
            }
        }
        basis.push(vec);
    }
    basis
}

// ---------------------------------------------------------------------------
// Wire formats
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize)]
pub struct NerveRepr {
    pub vertices: usize,
    pub simplices: Vec<Vec<usize>>,
}

impl NerveRepr {
    pub fn to_nerve(&self) -> Result<Nerve, NerveError> {
        Nerve::from_simplices(self.vertices, self.simplices.clone())
    }

    pub fn from_nerve(n: &Nerve) -> NerveRepr {
        NerveRepr {
            vertices: n.vertex_count,
            simplices: n.simplices.iter().cloned().collect(),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CochainEntryRepr {
    pub simplex: Vec<usize>,
    pub value: serde_json::Value,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CochainRepr {
    pub degree: usize,
    pub ring: String,
    pub values: Vec<CochainEntryRepr>,
}

/// A cochain file together with its declared coefficient ring.
#[derive(Debug)]
pub enum AnyCochain {
    Int(Cochain<BigInt>),
    Rat(Cochain<BigRational>),
    QPi(Cochain<ExactScalar>),
    Float(Cochain<f64>),
}

impl AnyCochain {
    pub fn degree(&self) -> usize {
        match self {
            AnyCochain::Int(c) => c.degree(),
            AnyCochain::Rat(c) => c.degree(),
            AnyCochain::QPi(c) => c.degree(),
            AnyCochain::Float(c) => c.degree(),
        }
    }

    /// Embeds into ℚ(π) when the ring permits (float is rejected).
    pub fn to_qpi(&self) -> Option<Cochain<ExactScalar>> {
        match self {
            AnyCochain::Int(c) => Some(c.map(ExactScalar::from_bigint)),
            AnyCochain::Rat(c) => Some(c.map(|v| ExactScalar::from_rational(v.clone()))),
            AnyCochain::QPi(c) => Some(c.clone()),
            AnyCochain::Float(_) => None,
        }
    }
}

impl CochainRepr {
    pub fn to_cochain(&self, nerve: &Nerve) -> Result<AnyCochain, String> {
        fn collect<R: Ring>(
            nerve: &Nerve,
            degree: usize,
            entries: Vec<(Simplex, R)>,
        ) -> Result<Cochain<R>, String> {
            Cochain::from_entries(nerve, degree, entries).map_err(|e| e.to_string())
        }
        match self.ring.as_str() {
            "Z" => {
                let mut entries = Vec::new();
                for e in &self.values {
                    let v: BigInt = value_as_string(&e.value)?
                        .parse()
                        .map_err(|err: num_bigint::ParseBigIntError| err.to_string())?;
                    entries.push((e.simplex.clone(), v));
                }
                collect(nerve, self.degree, entries).map(AnyCochain::Int)
            }
            "Q" => {
                let mut entries = Vec::new();
                for e in &self.values {
                    let v = rational_from_str(&value_as_string(&e.value)?)
                        .map_err(|err| err.to_string())?;
                    entries.push((e.simplex.clone(), v));
                }
                collect(nerve, self.degree, entries).map(AnyCochain::Rat)
            }
            "QPi" => {
                let mut entries = Vec::new();
                for e in &self.values {
                    let repr: crate::scalars::ScalarRepr =
                        serde_json::from_value(e.value.clone()).map_err(|err| err.to_string())?;
                    entries.push((e.simplex.clone(), repr.to_scalar().map_err(|err| err.to_string())?));
                }
                collect(nerve, self.degree, entries).map(AnyCochain::QPi)
            }
            "float" => {
                let mut entries = Vec::new();
                for e in &self.values {
                    let v = e
                        .value
                        .as_f64()
                        .ok_or_else(|| format!("not a float: {}", e.value))?;
                    entries.push((e.simplex.clone(), v));
                }
                collect(nerve, self.degree, entries).map(AnyCochain::Float)
            }
            other => Err(format!("unknown coefficient ring {other:?}")),
        }
    }

    pub fn from_any(c: &AnyCochain) -> CochainRepr {
        match c {
            AnyCochain::Int(c) => CochainRepr {
                degree: c.degree(),
                ring: "Z".into(),
                values: c
                    .entries()
                    .map(|(s, v)| CochainEntryRepr {
                        simplex: s.clone(),
                        value: serde_json::Value::String(v.to_string()),
                    })
                    .collect(),
            },
            AnyCochain::Rat(c) => CochainRepr {
                degree: c.degree(),
                ring: "Q".into(),
                values: c
                    .entries()
                    .map(|(s, v)| CochainEntryRepr {
                        simplex: s.clone(),
                        value: serde_json::Value::String(rational_to_str(v)),
                    })
                    .collect(),
            },
            AnyCochain::QPi(c) => CochainRepr {
                degree: c.degree(),
                ring: "QPi".into(),
                values: c
                    .entries()
                    .map(|(s, v)| CochainEntryRepr {
                        simplex: s.clone(),
                        value: serde_json::to_value(crate::scalars::ScalarRepr::from_scalar(v))
                            .unwrap(),
                    })
                    .collect(),
            },
            AnyCochain::Float(c) => CochainRepr {
                degree: c.degree(),
                ring: "float".into(),
                values: c
                    .entries()
                    .map(|(s, v)| CochainEntryRepr {
                        simplex: s.clone(),
                        value: serde_json::json!(v),
                    })
                    .collect(),
            },
        }
    }
}

fn value_as_string(v: &serde_json::Value) -> Result<String, String> {
    match v {
        serde_json::Value::String(s) => Ok(s.clone()),
        serde_json::Value::Number(n) => Ok(n.to_string()),
        other => Err(format!("expected a string value, got {other}")),
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct CycleEntryRepr {
    pub simplex: Vec<usize>,
    pub coefficient: i64,
}

pub fn cycle_from_repr(entries: &[CycleEntryRepr]) -> Result<Chain, String> {
    let dim = entries
        .first()
        .map(|e| e.simplex.len().saturating_sub(1))
        .unwrap_or(3);
    for e in entries {
        if e.simplex.len() != dim + 1 {
            return Err("mixed-dimension cycle entries".into());
        }
    }
    Ok(Chain::from_entries(
        dim,
        entries
            .iter()
            .map(|e| (e.simplex.clone(), BigInt::from(e.coefficient))),
    ))
}

pub fn cycle_to_repr(c: &Chain) -> Vec<CycleEntryRepr> {
    c.entries()
        .map(|(s, v)| CycleEntryRepr {
            simplex: s.clone(),
            coefficient: v.try_into().unwrap_or(0),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat_int;

    fn int_cochain(n: &Nerve, deg: usize, entries: &[(&[usize], i64)]) -> Cochain<BigInt> {
        Cochain::from_entries(
            n,
            deg,
            entries.iter().map(|(s, v)| (s.to_vec(), BigInt::from(*v))),
        )
        .unwrap()
    }

    #[test]
    fn delta_on_triangle_vertices() {
        let n = Nerve::circle_triangle();
        let c = int_cochain(&n, 0, &[(&[0], 1), (&[1], 4), (&[2], 9)]);
        let dc = cech_delta(&n, &c);
        assert_eq!(dc.get(&[0, 1]), BigInt::from(3));
        assert_eq!(dc.get(&[1, 2]), BigInt::from(5));
        assert_eq!(dc.get(&[0, 2]), BigInt::from(8));
        // constants are closed on a connected nerve with all pairs present
        let k = int_cochain(&n, 0, &[(&[0], 7), (&[1], 7), (&[2], 7)]);
        assert!(is_cocycle(&n, &k));
        // δδ = 0
        assert!(cech_delta(&n, &dc).is_zero());
    }

    #[test]
    fn cup_on_triangle() {
        let n = Nerve::circle_triangle();
        // degree-0 cup is the pointwise product
        let a = int_cochain(&n, 0, &[(&[0], 2), (&[1], 3), (&[2], 5)]);
        let b = int_cochain(&n, 0, &[(&[0], 7), (&[1], 11), (&[2], 13)]);
        let ab = cech_cup(&n, &a, &b);
        assert_eq!(ab.get(&[1]), BigInt::from(33));
        // C¹ ∪ C⁰: (a∪b)_{ij} = a_{ij}·b_j
        let c1 = int_cochain(&n, 1, &[(&[0, 2], 4)]);
        let cup = cech_cup(&n, &c1, &b);
        assert_eq!(cup.get(&[0, 2]), BigInt::from(4 * 13));
        // the winding cocycle squares to zero: no 2-simplices
        let w = int_cochain(&n, 1, &[(&[0, 2], 5)]);
        assert!(cech_cup(&n, &w, &w).is_zero());
        assert!(is_cocycle(&n, &w));
    }

    #[test]
    fn leibniz_rule_on_a_tetrahedron() {
        let n = Nerve::generated_by(4, &[vec![0, 1, 2, 3]]).unwrap();
        let a = int_cochain(&n, 1, &[(&[0, 1], 2), (&[1, 2], -3), (&[0, 3], 5)]);
        let b = int_cochain(&n, 0, &[(&[0], 1), (&[1], -4), (&[2], 2), (&[3], 7)]);
        let lhs = cech_delta(&n, &cech_cup(&n, &a, &b));
        // δ(a∪b) = δa∪b + (−1)^deg(a) a∪δb
        let rhs = cech_cup(&n, &cech_delta(&n, &a), &b)
            .add(&cech_cup(&n, &a, &cech_delta(&n, &b)).neg());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn coboundary_solver_finds_preimages() {
        let n = Nerve::generated_by(4, &[vec![0, 1, 2, 3]]).unwrap();
        let x = Cochain::from_entries(
            &n,
            0,
            [
                (vec![0], BigRational::from_integer(BigInt::from(3))),
                (vec![2], BigRational::from_integer(BigInt::from(-5))),
            ],
        )
        .unwrap();
        let target = cech_delta(&n, &x);
        let solved = solve_coboundary(&n, &target).unwrap();
        assert_eq!(cech_delta(&n, &solved), target);
        // an inconsistent target: a 1-cochain that is not closed cannot be δ of anything
        let bad = Cochain::from_entries(
            &n,
            1,
            [(vec![0, 1], BigRational::from_integer(BigInt::one()))],
        )
        .unwrap();
        assert!(solve_coboundary(&n, &bad).is_err());
    }

    #[test]
    fn cocycle_basis_spans_kernel() {
        let n = Nerve::circle_triangle();
        // H¹ of the triangle boundary is ℤ: kernel of δ on C¹ is all of C¹
        // (no 2-simplices), dimension 3.
        let basis = cocycle_basis(&n, 1);
        assert_eq!(basis.len(), 3);
        for c in &basis {
            assert!(is_cocycle(&n, c));
        }
    }

    #[test]
    fn flat_product_trivial_cases() {
        let n = Nerve::generated_by(5, &[vec![0, 1, 2, 3, 4]]).unwrap();
        // r = 0 → 0
        let r = Cochain::zero(2);
        let b = Cochain::from_entries(
            &n,
            1,
            [(vec![0, 1], BigRational::new(BigInt::from(1), BigInt::from(3)))],
        )
        .unwrap();
        // ∂Δ⁴ fundamental cycle
        let mut z = Chain::zero(3);
        for m in 0..5 {
            let mut s: Vec<usize> = (0..5).collect();
            s.remove(m);
            let sign = if m % 2 == 0 { 1 } else { -1 };
            z.push(s, BigInt::from(sign));
        }
        assert!(z.is_cycle());
        let value = flat_bundle_product(&n, &r, &b, &z).unwrap();
        assert!(value.is_zero());
        // b integer-valued → 0 mod ℤ
        let u = int_cochain(&n, 1, &[(&[0, 1], 2), (&[2, 3], -1)]);
        let r2 = cech_delta(&n, &int_cochain(&n, 1, &[(&[0, 1], 1), (&[1, 3], 4)]));
        let b_int = u.map(|v| BigRational::from_integer(v.clone()));
        let value2 = flat_bundle_product(&n, &r2, &b_int, &z).unwrap();
        assert!(value2.is_zero());
    }

    #[test]
    fn flat_product_rejects_bad_inputs() {
        let n = Nerve::generated_by(4, &[vec![0, 1, 2, 3]]).unwrap();
        let not_cocycle = int_cochain(&n, 2, &[(&[0, 1, 2], 1)]);
        let b = Cochain::zero(1);
        let z = Chain::from_entries(3, [(vec![0, 1, 2, 3], BigInt::one())]);
        assert!(matches!(
            flat_bundle_product(&n, &not_cocycle, &b, &z),
            Err(NerveError::NotACocycle(_))
        ));
    }

    #[test]
    fn shuffle_square_is_a_cycle() {
        // Circle fundamental cycle on the triangle boundary.
        let mut c = Chain::zero(1);
        c.push(vec![0, 1], BigInt::one());
        c.push(vec![1, 2], BigInt::one());
        c.push(vec![0, 2], -BigInt::one());
        assert!(c.is_cycle());
        // Torus cycle on the 9-vertex product nerve, v = 3i + j.
        let z = shuffle_product(&c, &c, |i, j| 3 * i + j);
        assert!(z.is_cycle());
        // 9 edge pairs × 2 shuffles
        let count: i64 = z.entries().map(|(_, v)| v.abs().try_into().unwrap_or(0)).sum::<i64>();
        assert_eq!(count, 18);
    }

    #[test]
    fn staircase_signs_for_unit_square() {
        let paths = staircase_paths(1, 1);
        assert_eq!(paths.len(), 2);
        let signs: Vec<i64> = paths.iter().map(|(_, s)| *s).collect();
        assert!(signs.contains(&1) && signs.contains(&-1));
    }
}
