//! Exact calculus on the function class Σⱼ tʲ·(finite trigonometric series).
//!
//! This class is the closure of winding lifts `N·t + periodic` under the
//! operations the circle engine performs: products (via product-to-sum
//! identities), differentiation (factors 2πk), antidifferentiation (factors
//! 1/(2πk) and integration by parts), and integer coordinate shifts. All
//! coefficients live in ℚ(π), so every operation here is exact.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalars::{rat, rat_int, ExactScalar, Rational, ScalarError, ScalarRepr};

#[derive(Debug, Error, PartialEq)]
pub enum TrigError {
    #[error("winding defect is not constant: shift difference has a non-constant part")]
    NonConstantWinding,
    #[error("winding defect {0} is not an integer")]
    NonIntegerWinding(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// One harmonic: `sin_coeff·sin(2πkt) + cos_coeff·cos(2πkt)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Harmonic {
    pub sin: ExactScalar,
    pub cos: ExactScalar,
}

impl Harmonic {
    fn zero() -> Self {
        Harmonic {
            sin: ExactScalar::zero(),
            cos: ExactScalar::zero(),
        }
    }

    fn is_zero(&self) -> bool {
        self.sin.is_zero() && self.cos.is_zero()
    }
}

/// Finite trigonometric series `constant + Σₖ (Aₖ sin(2πkt) + Bₖ cos(2πkt))`.
///
/// Harmonic entries with both coefficients zero are never stored, so the
/// representation is unique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrigSeries {
    pub constant: ExactScalar,
    harmonics: BTreeMap<u32, Harmonic>,
}

impl TrigSeries {
    pub fn zero() -> Self {
        TrigSeries {
            constant: ExactScalar::zero(),
            harmonics: BTreeMap::new(),
        }
    }

    pub fn constant(c: ExactScalar) -> Self {
        TrigSeries {
            constant: c,
            harmonics: BTreeMap::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.harmonics.is_empty()
    }

    pub fn harmonics(&self) -> impl Iterator<Item = (u32, &Harmonic)> {
        self.harmonics.iter().map(|(k, h)| (*k, h))
    }

    pub fn harmonic(&self, k: u32) -> Harmonic {
        self.harmonics.get(&k).cloned().unwrap_or_else(Harmonic::zero)
    }

    /// Adds `a·sin(2πkt) + b·cos(2πkt)`, merging with any existing entry.
    pub fn add_harmonic(&mut self, k: u32, sin: &ExactScalar, cos: &ExactScalar) {
        if k == 0 {
            // sin(0) = 0, cos(0) = 1: folds into the constant.
            self.constant = self.constant.add(cos);
            return;
        }
        let entry = self.harmonics.entry(k).or_insert_with(Harmonic::zero);
        entry.sin = entry.sin.add(sin);
        entry.cos = entry.cos.add(cos);
        if entry.is_zero() {
            self.harmonics.remove(&k);
        }
    }

    pub fn add(&self, other: &TrigSeries) -> TrigSeries {
        let mut out = self.clone();
        out.constant = out.constant.add(&other.constant);
        for (k, h) in &other.harmonics {
            out.add_harmonic(*k, &h.sin, &h.cos);
        }
        out
    }

    pub fn neg(&self) -> TrigSeries {
        let mut out = TrigSeries::constant(self.constant.neg());
        for (k, h) in &self.harmonics {
            out.add_harmonic(*k, &h.sin.neg(), &h.cos.neg());
        }
        out
    }

    pub fn scale(&self, c: &ExactScalar) -> TrigSeries {
        if c.is_zero() {
            return TrigSeries::zero();
        }
        let mut out = TrigSeries::constant(self.constant.mul(c));
        for (k, h) in &self.harmonics {
            out.add_harmonic(*k, &h.sin.mul(c), &h.cos.mul(c));
        }
        out
    }

    /// Exact product via the product-to-sum identities
    /// sin·sin, sin·cos, cos·cos ↦ harmonics at k ± k′.
    pub fn mul(&self, other: &TrigSeries) -> TrigSeries {
        let mut out = TrigSeries::zero();
        out.constant = self.constant.mul(&other.constant);
        for (k, h) in &self.harmonics {
            out.add_harmonic(*k, &h.sin.mul(&other.constant), &h.cos.mul(&other.constant));
        }
        for (k, h) in &other.harmonics {
            out.add_harmonic(*k, &h.sin.mul(&self.constant), &h.cos.mul(&self.constant));
        }
        let half = ExactScalar::from_rational(rat(1, 2));
        for (&k, a) in &self.harmonics {
            for (&m, b) in &other.harmonics {
                let sum = k + m;
                let diff = k as i64 - m as i64;
                // sin(x)sin(y) = ½[cos(x−y) − cos(x+y)]
                let ss = a.sin.mul(&b.sin).mul(&half);
                if !ss.is_zero() {
                    add_cos_signed(&mut out, diff, &ss);
                    out.add_harmonic(sum, &ExactScalar::zero(), &ss.neg());
                }
                // cos(x)cos(y) = ½[cos(x−y) + cos(x+y)]
                let cc = a.cos.mul(&b.cos).mul(&half);
                if !cc.is_zero() {
                    add_cos_signed(&mut out, diff, &cc);
                    out.add_harmonic(sum, &ExactScalar::zero(), &cc);
                }
                // sin(x)cos(y) = ½[sin(x+y) + sin(x−y)]
                let sc = a.sin.mul(&b.cos).mul(&half);
                if !sc.is_zero() {
                    out.add_harmonic(sum, &sc, &ExactScalar::zero());
                    add_sin_signed(&mut out, diff, &sc);
                }
                // cos(x)sin(y) = ½[sin(x+y) − sin(x−y)]
                let cs = a.cos.mul(&b.sin).mul(&half);
                if !cs.is_zero() {
                    out.add_harmonic(sum, &cs, &ExactScalar::zero());
                    add_sin_signed(&mut out, diff, &cs.neg());
                }
            }
        }
        out
    }

    /// Termwise derivative: Aₖ sin ↦ 2πk Aₖ cos, Bₖ cos ↦ −2πk Bₖ sin.
    pub fn derivative(&self) -> TrigSeries {
        let mut out = TrigSeries::zero();
        for (&k, h) in &self.harmonics {
            let two_pi_k = ExactScalar::pi().scale(&rat_int(2 * k as i64));
            out.add_harmonic(k, &h.cos.mul(&two_pi_k).neg(), &h.sin.mul(&two_pi_k));
        }
        out
    }

    fn eval_f64(&self, t: f64) -> f64 {
        let mut acc = self.constant.to_f64_fast();
        for (&k, h) in &self.harmonics {
            let arg = 2.0 * std::f64::consts::PI * k as f64 * t;
            acc += h.sin.to_f64_fast() * arg.sin() + h.cos.to_f64_fast() * arg.cos();
        }
        acc
    }
}

/// Adds c·cos(2πdt) handling a signed frequency d (cos is even).
fn add_cos_signed(out: &mut TrigSeries, d: i64, c: &ExactScalar) {
    out.add_harmonic(d.unsigned_abs() as u32, &ExactScalar::zero(), c);
}

/// Adds c·sin(2πdt) handling a signed frequency d (sin is odd).
fn add_sin_signed(out: &mut TrigSeries, d: i64, c: &ExactScalar) {
    if d >= 0 {
        out.add_harmonic(d as u32, c, &ExactScalar::zero());
    } else {
        out.add_harmonic((-d) as u32, &c.neg(), &ExactScalar::zero());
    }
}

/// Element of the class Σⱼ tʲ·(trig series), in the lifted coordinate t.
///
/// Terms with zero series are never stored; since the functions
/// tʲ·sin(2πkt), tʲ·cos(2πkt), tʲ are linearly independent the
/// representation is unique and equality is structural.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyTrig {
    terms: BTreeMap<u32, TrigSeries>,
}

impl PolyTrig {
    pub fn zero() -> Self {
        PolyTrig {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: ExactScalar) -> Self {
        PolyTrig::from_series(0, TrigSeries::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        PolyTrig::constant(ExactScalar::from_int(n))
    }

    /// The monomial c·tʲ.
    pub fn monomial(j: u32, c: ExactScalar) -> Self {
        PolyTrig::from_series(j, TrigSeries::constant(c))
    }

    /// The coordinate function t.
    pub fn t() -> Self {
        PolyTrig::monomial(1, ExactScalar::one())
    }

    pub fn sin(k: u32) -> Self {
        let mut s = TrigSeries::zero();
        s.add_harmonic(k, &ExactScalar::one(), &ExactScalar::zero());
        PolyTrig::from_series(0, s)
    }

    pub fn cos(k: u32) -> Self {
        let mut s = TrigSeries::zero();
        s.add_harmonic(k, &ExactScalar::zero(), &ExactScalar::one());
        PolyTrig::from_series(0, s)
    }

    pub fn from_series(j: u32, s: TrigSeries) -> Self {
        let mut terms = BTreeMap::new();
        if !s.is_zero() {
            terms.insert(j, s);
        }
        PolyTrig { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &TrigSeries)> {
        self.terms.iter().map(|(j, s)| (*j, s))
    }

    pub fn series_at(&self, j: u32) -> TrigSeries {
        self.terms.get(&j).cloned().unwrap_or_else(TrigSeries::zero)
    }

    fn insert(&mut self, j: u32, s: TrigSeries) {
        let merged = self.series_at(j).add(&s);
        if merged.is_zero() {
            self.terms.remove(&j);
        } else {
            self.terms.insert(j, merged);
        }
    }

    pub fn add(&self, other: &PolyTrig) -> PolyTrig {
        let mut out = self.clone();
        for (j, s) in &other.terms {
            out.insert(*j, s.clone());
        }
        out
    }

    pub fn neg(&self) -> PolyTrig {
        PolyTrig {
            terms: self.terms.iter().map(|(j, s)| (*j, s.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &PolyTrig) -> PolyTrig {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &ExactScalar) -> PolyTrig {
        if c.is_zero() {
            return PolyTrig::zero();
        }
        PolyTrig {
            terms: self.terms.iter().map(|(j, s)| (*j, s.scale(c))).collect(),
        }
    }

    /// True when the value is a bare constant (possibly zero).
    pub fn as_constant(&self) -> Option<ExactScalar> {
        match self.terms.len() {
            0 => Some(ExactScalar::zero()),
            1 => {
                let (j, s) = self.terms.iter().next().unwrap();
                if *j == 0 && s.harmonics.is_empty() {
                    Some(s.constant.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    /// True when f(t+1) = f(t), i.e. no t-powers occur.
    pub fn is_periodic(&self) -> bool {
        self.terms.keys().all(|&j| j == 0)
    }
}

/// Exact product; t-powers add, trig factors resolve through
/// product-to-sum identities.
pub fn pt_mul(f: &PolyTrig, g: &PolyTrig) -> PolyTrig {
    let mut out = PolyTrig::zero();
    for (j1, s1) in &f.terms {
        for (j2, s2) in &g.terms {
            out.insert(j1 + j2, s1.mul(s2));
        }
    }
    out
}

/// Exact derivative d/dt.
pub fn pt_derivative(f: &PolyTrig) -> PolyTrig {
    let mut out = PolyTrig::zero();
    for (&j, s) in &f.terms {
        if j > 0 {
            out.insert(j - 1, s.scale(&ExactScalar::from_int(j as i64)));
        }
        out.insert(j, s.derivative());
    }
    out
}

/// Exact antiderivative with the j = 0 series constant normalised to zero.
///
/// Monomial–harmonic terms integrate by parts recursively, introducing
/// 1/(2πk) factors; the choice of integration constant is immaterial to
/// every downstream circle reduction.
pub fn pt_antiderivative(f: &PolyTrig) -> PolyTrig {
    let mut out = PolyTrig::zero();
    for (&j, s) in &f.terms {
        // ∫ c·tʲ dt = c·t^{j+1}/(j+1)
        if !s.constant.is_zero() {
            let c = s.constant.scale(&rat(1, j as i64 + 1));
            out.insert(j + 1, TrigSeries::constant(c));
        }
        for (k, h) in s.harmonics() {
            if !h.sin.is_zero() {
                out = out.add(&integral_monomial_trig(j, k, false).scale(&h.sin));
            }
            if !h.cos.is_zero() {
                out = out.add(&integral_monomial_trig(j, k, true).scale(&h.cos));
            }
        }
    }
    // Normalise: drop any constant term the recursion produced.
    let c0 = out.series_at(0).constant.clone();
    if !c0.is_zero() {
        out.insert(0, TrigSeries::constant(c0.neg()));
    }
    out
}

/// ∫ tʲ·sin(2πkt) dt (cos = false) or ∫ tʲ·cos(2πkt) dt (cos = true),
/// with k ≥ 1, by recursive integration by parts.
fn integral_monomial_trig(j: u32, k: u32, cos: bool) -> PolyTrig {
    let inv = ExactScalar::pi()
        .scale(&rat_int(2 * k as i64))
        .inv()
        .expect("k ≥ 1");
    if cos {
        // ∫ tʲ cos = tʲ sin/(2πk) − j/(2πk) ∫ t^{j−1} sin
        let mut lead = TrigSeries::zero();
        lead.add_harmonic(k, &inv, &ExactScalar::zero());
        let mut out = PolyTrig::from_series(j, lead);
        if j > 0 {
            let rec = integral_monomial_trig(j - 1, k, false);
            out = out.add(&rec.scale(&inv.scale(&rat_int(j as i64)).neg()));
        }
        out
    } else {
        // ∫ tʲ sin = −tʲ cos/(2πk) + j/(2πk) ∫ t^{j−1} cos
        let mut lead = TrigSeries::zero();
        lead.add_harmonic(k, &ExactScalar::zero(), &inv.neg());
        let mut out = PolyTrig::from_series(j, lead);
        if j > 0 {
            let rec = integral_monomial_trig(j - 1, k, true);
            out = out.add(&rec.scale(&inv.scale(&rat_int(j as i64))));
        }
        out
    }
}

/// Exact shift t ↦ f(t + m) for integer m. Trig parts are invariant;
/// t-powers expand binomially.
pub fn pt_shift(f: &PolyTrig, m: i64) -> PolyTrig {
    if m == 0 {
        return f.clone();
    }
    let mut out = PolyTrig::zero();
    for (&j, s) in &f.terms {
        // (t+m)ʲ = Σᵢ C(j,i) m^{j−i} tⁱ
        let mut binom = BigInt::one();
        let mut pow = BigInt::one();
        let mut coeffs = vec![BigInt::zero(); j as usize + 1];
        for i in (0..=j).rev() {
            coeffs[i as usize] = &binom * &pow;
            if i > 0 {
                binom = binom * BigInt::from(i) / BigInt::from(j - i + 1);
                pow *= BigInt::from(m);
            }
        }
        for (i, c) in coeffs.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            out.insert(i as u32, s.scale(&ExactScalar::from_bigint(&c)));
        }
    }
    out
}

/// Exact evaluation at an integer point, where sin(2πkt) = 0 and
/// cos(2πkt) = 1. Off-integer exact evaluation is not defined for this
/// class; use [`pt_eval_float`].
pub fn pt_eval_integer(f: &PolyTrig, t: i64) -> ExactScalar {
    let mut acc = ExactScalar::zero();
    for (&j, s) in &f.terms {
        let mut v = s.constant.clone();
        for (_, h) in s.harmonics() {
            v = v.add(&h.cos);
        }
        let tj = BigInt::from(t).pow(j);
        acc = acc.add(&v.mul(&ExactScalar::from_bigint(&tj)));
    }
    acc
}

/// Floating-point evaluation at an arbitrary point.
pub fn pt_eval_float(f: &PolyTrig, t: f64) -> f64 {
    let mut acc = 0.0;
    for (&j, s) in &f.terms {
        acc += t.powi(j as i32) * s.eval_f64(t);
    }
    acc
}

// ---------------------------------------------------------------------------
// Winding functions
// ---------------------------------------------------------------------------

/// A lift of a circle-valued function: f(t+1) − f(t) = N identically for an
/// integer winding number N. Structurally this forces f = N·t + periodic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindingFunction {
    winding: BigInt,
    body: PolyTrig,
}

impl WindingFunction {
    /// Validates the winding property via the shift operator.
    pub fn new(body: PolyTrig) -> Result<Self, TrigError> {
        let defect = pt_shift(&body, 1).sub(&body);
        let c = defect
            .as_constant()
            .ok_or(TrigError::NonConstantWinding)?;
        let winding = c
            .as_integer()
            .ok_or_else(|| TrigError::NonIntegerWinding(c.to_string()))?;
        Ok(WindingFunction { winding, body })
    }

    pub fn winding(&self) -> &BigInt {
        &self.winding
    }

    pub fn body(&self) -> &PolyTrig {
        &self.body
    }
}

// ---------------------------------------------------------------------------
// Wire format
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize)]
pub struct HarmonicRepr {
    pub k: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sin: Option<ScalarRepr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cos: Option<ScalarRepr>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PolyTrigTermRepr {
    pub power: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constant: Option<ScalarRepr>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub harmonics: Vec<HarmonicRepr>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct PolyTrigRepr {
    pub terms: Vec<PolyTrigTermRepr>,
}

impl PolyTrigRepr {
    pub fn to_polytrig(&self) -> Result<PolyTrig, ScalarError> {
        let mut out = PolyTrig::zero();
        for term in &self.terms {
            let mut series = TrigSeries::zero();
            if let Some(c) = &term.constant {
                series.constant = c.to_scalar()?;
            }
            for h in &term.harmonics {
                let sin = h.sin.as_ref().map(|s| s.to_scalar()).transpose()?;
                let cos = h.cos.as_ref().map(|s| s.to_scalar()).transpose()?;
                series.add_harmonic(
                    h.k,
                    &sin.unwrap_or_else(ExactScalar::zero),
                    &cos.unwrap_or_else(ExactScalar::zero),
                );
            }
            out.insert(term.power, series);
        }
        Ok(out)
    }

    pub fn from_polytrig(f: &PolyTrig) -> PolyTrigRepr {
        let terms = f
            .terms()
            .map(|(j, s)| PolyTrigTermRepr {
                power: j,
                constant: if s.constant.is_zero() {
                    None
                } else {
                    Some(ScalarRepr::from_scalar(&s.constant))
                },
                harmonics: s
                    .harmonics()
                    .map(|(k, h)| HarmonicRepr {
                        k,
                        sin: if h.sin.is_zero() {
                            None
                        } else {
                            Some(ScalarRepr::from_scalar(&h.sin))
                        },
                        cos: if h.cos.is_zero() {
                            None
                        } else {
                            Some(ScalarRepr::from_scalar(&h.cos))
                        },
                    })
                    .collect(),
            })
            .collect();
        PolyTrigRepr { terms }
    }
}

/// Render a PolyTrig for reports, e.g. `2·t + sin(2π·3t)`.
impl std::fmt::Display for PolyTrig {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (j, s) in self.terms() {
            let pow = match j {
                0 => String::new(),
                1 => "t·".to_string(),
                _ => format!("t^{j}·"),
            };
            if !s.constant.is_zero() {
                if j == 0 {
                    parts.push(format!("{}", s.constant));
                } else {
                    parts.push(format!("{}({})", pow, s.constant));
                }
            }
            for (k, h) in s.harmonics() {
                if !h.sin.is_zero() {
                    parts.push(format!("{}({})·sin(2π·{}t)", pow, h.sin, k));
                }
                if !h.cos.is_zero() {
                    parts.push(format!("{}({})·cos(2π·{}t)", pow, h.cos, k));
                }
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    #[test]
    fn product_to_sum_identity() {
        // sin(2πt)·cos(2πt) = ½ sin(4πt)
        let p = pt_mul(&PolyTrig::sin(1), &PolyTrig::cos(1));
        let expected = PolyTrig::sin(2).scale(&ExactScalar::from_rational(rat(1, 2)));
        assert_eq!(p, expected);
    }

    #[test]
    fn formal_monomial_products() {
        let t = PolyTrig::t();
        assert_eq!(pt_mul(&t, &t), PolyTrig::monomial(2, ExactScalar::one()));
        let ts = pt_mul(&t, &PolyTrig::sin(1));
        let mut series = TrigSeries::zero();
        series.add_harmonic(1, &ExactScalar::one(), &ExactScalar::zero());
        assert_eq!(ts, PolyTrig::from_series(1, series));
    }

    #[test]
    fn derivative_examples() {
        // d/dt (N·t) = N
        let f = PolyTrig::t().scale(&ExactScalar::from_int(5));
        assert_eq!(pt_derivative(&f), PolyTrig::from_int(5));
        // d/dt sin(2πkt) = 2πk cos(2πkt)
        let d = pt_derivative(&PolyTrig::sin(3));
        let expected = PolyTrig::cos(3).scale(&ExactScalar::pi().scale(&rat_int(6)));
        assert_eq!(d, expected);
        // constants die
        assert!(pt_derivative(&PolyTrig::from_int(7)).is_zero());
    }

    #[test]
    fn antiderivative_inverts_derivative() {
        // ∫ c·t dt = c/2·t²
        let f = PolyTrig::t().scale(&ExactScalar::from_int(6));
        let af = pt_antiderivative(&f);
        assert_eq!(af, PolyTrig::monomial(2, ExactScalar::from_int(3)));
        // ∫ sin(2πt) dt = −cos(2πt)/(2π), constant term zero
        let s = pt_antiderivative(&PolyTrig::sin(1));
        assert_eq!(pt_derivative(&s), PolyTrig::sin(1));
        assert!(s.series_at(0).constant.is_zero());
        // ∫ 0 = 0
        assert!(pt_antiderivative(&PolyTrig::zero()).is_zero());
        // mixed: t·cos(2π·2t)
        let m = pt_mul(&PolyTrig::t(), &PolyTrig::cos(2));
        assert_eq!(pt_derivative(&pt_antiderivative(&m)), m);
    }

    #[test]
    fn shift_examples() {
        let t = PolyTrig::t();
        assert_eq!(pt_shift(&t, 1), t.add(&PolyTrig::from_int(1)));
        assert_eq!(pt_shift(&PolyTrig::sin(2), -1), PolyTrig::sin(2));
        let t2 = PolyTrig::monomial(2, ExactScalar::one());
        let expected = t2
            .add(&PolyTrig::t().scale(&ExactScalar::from_int(2)))
            .add(&PolyTrig::from_int(1));
        assert_eq!(pt_shift(&t2, 1), expected);
        // round trip
        let f = pt_mul(&PolyTrig::t(), &PolyTrig::cos(1)).add(&t2);
        assert_eq!(pt_shift(&pt_shift(&f, 3), -3), f);
    }

    #[test]
    fn integer_evaluation() {
        // f = 2t + 1/3 + sin + 4cos at t=0 → 1/3 + 4
        let f = PolyTrig::t()
            .scale(&ExactScalar::from_int(2))
            .add(&PolyTrig::constant(ExactScalar::from_rational(rat(1, 3))))
            .add(&PolyTrig::sin(1))
            .add(&PolyTrig::cos(2).scale(&ExactScalar::from_int(4)));
        assert_eq!(
            pt_eval_integer(&f, 0),
            ExactScalar::from_rational(rat(13, 3))
        );
        let t2 = PolyTrig::monomial(2, ExactScalar::one());
        assert_eq!(pt_eval_integer(&t2, 2), ExactScalar::from_int(4));
        assert!(pt_eval_integer(&PolyTrig::sin(1), 5).is_zero());
    }

    #[test]
    fn float_evaluation() {
        assert!((pt_eval_float(&PolyTrig::sin(1), 0.25) - 1.0).abs() < 1e-12);
        assert!((pt_eval_float(&PolyTrig::t(), 0.5) - 0.5).abs() < 1e-15);
        assert!((pt_eval_float(&PolyTrig::cos(1), 0.5) + 1.0).abs() < 1e-12);
    }

    #[test]
    fn leibniz_rule_spot_check() {
        let f = pt_mul(&PolyTrig::t(), &PolyTrig::sin(2)).add(&PolyTrig::cos(1));
        let g = PolyTrig::t().add(&PolyTrig::cos(3));
        let lhs = pt_derivative(&pt_mul(&f, &g));
        let rhs = pt_mul(&pt_derivative(&f), &g).add(&pt_mul(&f, &pt_derivative(&g)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn winding_function_validation() {
        // N·t + sin: winding N
        let body = PolyTrig::t()
            .scale(&ExactScalar::from_int(3))
            .add(&PolyTrig::sin(1));
        let w = WindingFunction::new(body).unwrap();
        assert_eq!(w.winding(), &BigInt::from(3));
        // t² is not a winding function
        assert_eq!(
            WindingFunction::new(PolyTrig::monomial(2, ExactScalar::one())),
            Err(TrigError::NonConstantWinding)
        );
        // t/2 has non-integer winding
        let half_t = PolyTrig::t().scale(&ExactScalar::from_rational(rat(1, 2)));
        assert!(matches!(
            WindingFunction::new(half_t),
            Err(TrigError::NonIntegerWinding(_))
        ));
    }

    #[test]
    fn polytrig_repr_roundtrip() {
        let f = PolyTrig::t()
            .scale(&ExactScalar::pi())
            .add(&PolyTrig::sin(2).scale(&ExactScalar::from_rational(rat(-7, 3))));
        let repr = PolyTrigRepr::from_polytrig(&f);
        let json = serde_json::to_string(&repr).unwrap();
        let back: PolyTrigRepr = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_polytrig().unwrap(), f);
    }
}
