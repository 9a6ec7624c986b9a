//! Smooth hypersparks on the circle: canonical Fourier form, the spark
//! equation Da = e − r and its validation, the curvature and class maps
//! δ₁/δ₂, the cup-product representative of the degree-0 × degree-0
//! product, its reduction to ℝ/ℤ, and the closed-form product
//!
//! ```text
//! a*b = NN′/2 + CN′ − C′N + Σₖ (A′ₖBₖ − AₖB′ₖ)·πk   (mod ℤ)
//! ```
//!
//! The reduction algorithm integrates the global 1-form part, corrects by
//! the Čech part on the overlaps, and pairs the resulting constant cocycle
//! with the fundamental cycle of the triangle nerve. Its orientation is
//! pinned by two calibration identities: a global form c·dt reduces to the
//! class of c, and the winding lifts satisfy [Nx]*[N′x] = NN′/2.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bicomplex::{delta_sections, total_d, ArcSections, BiCochain, Overlap};
use crate::scalars::{CircleNumber, ExactScalar, Rational, ScalarError, ScalarRepr};
use crate::trigpoly::{
    pt_antiderivative, pt_derivative, pt_mul, pt_shift, Harmonic, PolyTrig, TrigError, TrigSeries,
    WindingFunction,
};

#[derive(Debug, Error, PartialEq)]
pub enum SparkError {
    #[error("spark equation violated: {0}")]
    EquationViolated(&'static str),
    #[error("not a degree-1 cocycle: δ(a^{{0,1}}) ≠ d(a^{{1,0}})")]
    NotACocycle,
    #[error("overlap residue is not constant; input is not a product cocycle")]
    NonConstantResidue,
    #[error(transparent)]
    Trig(#[from] TrigError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

// ---------------------------------------------------------------------------
// Integer Čech cochains on the circle cover
// ---------------------------------------------------------------------------

/// Integer cochain on the three-arc nerve: three values indexed by arcs
/// (degree 0) or overlaps (degree 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleIntCochain {
    pub degree: u8,
    pub values: [BigInt; 3],
}

impl CircleIntCochain {
    pub fn zero(degree: u8) -> Self {
        CircleIntCochain {
            degree,
            values: [BigInt::zero(), BigInt::zero(), BigInt::zero()],
        }
    }

    pub fn new(degree: u8, values: [BigInt; 3]) -> Self {
        CircleIntCochain { degree, values }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    pub fn add(&self, other: &CircleIntCochain) -> CircleIntCochain {
        assert_eq!(self.degree, other.degree);
        CircleIntCochain {
            degree: self.degree,
            values: [
                &self.values[0] + &other.values[0],
                &self.values[1] + &other.values[1],
                &self.values[2] + &other.values[2],
            ],
        }
    }

    pub fn neg(&self) -> CircleIntCochain {
        CircleIntCochain {
            degree: self.degree,
            values: [
                -self.values[0].clone(),
                -self.values[1].clone(),
                -self.values[2].clone(),
            ],
        }
    }

    /// Čech differential; degree-1 cochains map to zero (no triple
    /// overlaps). Constants are blind to the seam shift.
    pub fn delta(&self) -> CircleIntCochain {
        if self.degree != 0 {
            return CircleIntCochain::zero(self.degree + 1);
        }
        let [a, b, c] = &self.values;
        CircleIntCochain::new(1, [b - a, c - b, c - a])
    }

    /// Embeds as constant sections of the bicomplex at bidegree (degree, 0).
    pub fn as_bicochain(&self) -> BiCochain {
        let mut sections = ArcSections::zero();
        for (i, v) in self.values.iter().enumerate() {
            sections.set(i as u8, PolyTrig::constant(ExactScalar::from_bigint(v)));
        }
        BiCochain::from_component(self.degree, 0, sections)
    }

    /// Pairing of a degree-1 cochain with the fundamental cycle
    /// [12] + [23] − [13] of the triangle nerve.
    pub fn pair_fundamental(&self) -> BigInt {
        assert_eq!(self.degree, 1);
        &self.values[0] + &self.values[1] - &self.values[2]
    }
}

// ---------------------------------------------------------------------------
// Canonical degree-0 sparks
// ---------------------------------------------------------------------------

/// Canonical degree-0 smooth hyperspark on the circle, i.e. the Fourier
/// data (N, C, {Aₖ, Bₖ}) of a lifted circle-valued function
/// N·t + C + Σ (Aₖ sin(2πkt) + Bₖ cos(2πkt)).
///
/// Normalisation: the value at t = 0, which is C + ΣBₖ, lies in [0,1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleSpark0 {
    winding: BigInt,
    constant: ExactScalar,
    harmonics: BTreeMap<u32, Harmonic>,
}

impl CircleSpark0 {
    pub fn zero() -> Self {
        CircleSpark0 {
            winding: BigInt::zero(),
            constant: ExactScalar::zero(),
            harmonics: BTreeMap::new(),
        }
    }

    /// Builds and canonicalises from raw Fourier data.
    pub fn new(
        winding: BigInt,
        constant: ExactScalar,
        harmonics: impl IntoIterator<Item = (u32, Harmonic)>,
    ) -> Self {
        let mut h = BTreeMap::new();
        for (k, harm) in harmonics {
            if k >= 1 && !(harm.sin.is_zero() && harm.cos.is_zero()) {
                h.insert(k, harm);
            }
        }
        let mut spark = CircleSpark0 {
            winding,
            constant,
            harmonics: h,
        };
        spark.normalize();
        spark
    }

    pub fn from_winding(n: i64) -> Self {
        CircleSpark0::new(BigInt::from(n), ExactScalar::zero(), [])
    }

    pub fn from_constant(c: ExactScalar) -> Self {
        CircleSpark0::new(BigInt::zero(), c, [])
    }

    pub fn from_sin(k: u32, coeff: ExactScalar) -> Self {
        CircleSpark0::new(
            BigInt::zero(),
            ExactScalar::zero(),
            [(
                k,
                Harmonic {
                    sin: coeff,
                    cos: ExactScalar::zero(),
                },
            )],
        )
    }

    pub fn from_cos(k: u32, coeff: ExactScalar) -> Self {
        CircleSpark0::new(
            BigInt::zero(),
            ExactScalar::zero(),
            [(
                k,
                Harmonic {
                    sin: ExactScalar::zero(),
                    cos: coeff,
                },
            )],
        )
    }

    /// Shifts the constant by an integer so the value at 0 lands in [0,1).
    /// When the value at 0 is an exact integer the fractional part is 0.
    fn normalize(&mut self) {
        let at_zero = self.value_at_zero();
        let shift = at_zero.floor();
        if !shift.is_zero() {
            self.constant = self.constant.sub(&ExactScalar::from_bigint(&shift));
        }
    }

    pub fn value_at_zero(&self) -> ExactScalar {
        let mut v = self.constant.clone();
        for h in self.harmonics.values() {
            v = v.add(&h.cos);
        }
        v
    }

    pub fn winding(&self) -> &BigInt {
        &self.winding
    }

    pub fn constant(&self) -> &ExactScalar {
        &self.constant
    }

    pub fn harmonics(&self) -> impl Iterator<Item = (u32, &Harmonic)> {
        self.harmonics.iter().map(|(k, h)| (*k, h))
    }

    pub fn harmonic(&self, k: u32) -> Harmonic {
        self.harmonics.get(&k).cloned().unwrap_or(Harmonic {
            sin: ExactScalar::zero(),
            cos: ExactScalar::zero(),
        })
    }

    /// The lift N·t + C + Σ harmonics as a function of the lifted
    /// coordinate.
    pub fn lift(&self) -> PolyTrig {
        let mut series = TrigSeries::constant(self.constant.clone());
        for (&k, h) in &self.harmonics {
            series.add_harmonic(k, &h.sin, &h.cos);
        }
        let mut out = PolyTrig::from_series(0, series);
        if !self.winding.is_zero() {
            out = out.add(&PolyTrig::monomial(1, ExactScalar::from_bigint(&self.winding)));
        }
        out
    }

    /// Pointwise sum of Fourier data (the group law of degree-0 classes).
    pub fn add(&self, other: &CircleSpark0) -> CircleSpark0 {
        let mut harmonics: BTreeMap<u32, Harmonic> = self.harmonics.clone();
        for (&k, h) in &other.harmonics {
            let entry = harmonics.entry(k).or_insert(Harmonic {
                sin: ExactScalar::zero(),
                cos: ExactScalar::zero(),
            });
            entry.sin = entry.sin.add(&h.sin);
            entry.cos = entry.cos.add(&h.cos);
        }
        harmonics.retain(|_, h| !(h.sin.is_zero() && h.cos.is_zero()));
        CircleSpark0::new(
            &self.winding + &other.winding,
            self.constant.add(&other.constant),
            harmonics,
        )
    }

    pub fn scale_int(&self, n: i64) -> CircleSpark0 {
        let c = ExactScalar::from_int(n);
        let harmonics: Vec<(u32, Harmonic)> = self
            .harmonics
            .iter()
            .map(|(&k, h)| {
                (
                    k,
                    Harmonic {
                        sin: h.sin.mul(&c),
                        cos: h.cos.mul(&c),
                    },
                )
            })
            .collect();
        CircleSpark0::new(
            &self.winding * BigInt::from(n),
            self.constant.mul(&c),
            harmonics,
        )
    }
}

/// Canonicalises a winding function into its Fourier data: subtracts the
/// integer floor of f(0) so the value at 0 lands in [0,1). The floor of a
/// π-laden value is decided by interval refinement.
pub fn canonicalize0(f: &WindingFunction) -> CircleSpark0 {
    let periodic = f.body().series_at(0);
    let harmonics: Vec<(u32, Harmonic)> = periodic.harmonics().map(|(k, h)| (k, h.clone())).collect();
    CircleSpark0::new(f.winding().clone(), periodic.constant.clone(), harmonics)
}

// ---------------------------------------------------------------------------
// Spark triples and validation
// ---------------------------------------------------------------------------

/// A spark a together with the unique e and r of its spark equation
/// Da = e − r: e a global form, r an integer Čech cochain.
#[derive(Debug, Clone, PartialEq)]
pub struct SparkTriple {
    pub degree: u8,
    pub a: BiCochain,
    /// Global (0, degree+1) form, as equal sections on the arcs.
    pub e: ArcSections,
    /// Integer cochain of Čech degree degree+1.
    pub r: CircleIntCochain,
}

/// Builds the spark triple of a canonical degree-0 spark: the lift on all
/// three arcs, curvature e = f′·dt, and r = −δa = (0, 0, −N).
pub fn spark_from_data(s: &CircleSpark0) -> SparkTriple {
    let lift = s.lift();
    let a = BiCochain::from_component(0, 0, ArcSections::global(&lift));
    let e = ArcSections::global(&pt_derivative(&lift));
    let r = CircleIntCochain::new(
        1,
        [BigInt::zero(), BigInt::zero(), -s.winding().clone()],
    );
    SparkTriple { degree: 0, a, e, r }
}

/// Checks the spark equation Da = e − r exactly, that e is a genuine
/// global section, and that r is integer-valued.
pub fn validate_spark(t: &SparkTriple) -> Result<(), SparkError> {
    if t.r.degree != t.degree + 1 {
        return Err(SparkError::EquationViolated("r has the wrong Čech degree"));
    }
    if !t.e.is_global() {
        return Err(SparkError::EquationViolated(
            "e is not a global form: sections disagree or are not periodic",
        ));
    }
    let mut expected = BiCochain::zero();
    // Nonzero e is only possible at form degree 1 on the circle.
    if !t.e.is_zero() {
        if t.degree != 0 {
            return Err(SparkError::EquationViolated(
                "a top-degree spark has no room for a nonzero curvature form",
            ));
        }
        expected = expected.add(&BiCochain::from_component(0, 1, t.e.clone()));
    }
    // Integer cochains of Čech degree 2 have no simplices to live on.
    if !t.r.is_zero() {
        if t.r.degree > 1 {
            return Err(SparkError::EquationViolated(
                "r lives beyond the nerve of the cover",
            ));
        }
        expected = expected.sub(&t.r.as_bicochain());
    }
    if total_d(&t.a) != expected {
        return Err(SparkError::EquationViolated("Da ≠ e − r"));
    }
    Ok(())
}

pub fn is_valid_spark(t: &SparkTriple) -> bool {
    validate_spark(t).is_ok()
}

/// Curvature map δ₁: the global form e. For degree-1 sparks on the circle
/// this is identically zero.
pub fn delta1(t: &SparkTriple) -> ArcSections {
    t.e.clone()
}

/// Characteristic class map δ₂: the class of r in H^{degree+1} of the
/// nerve. In degree 0 this is the pairing of r with the fundamental cycle
/// of the triangle, oriented so that the spark of N·t maps to N; in top
/// degree it is zero.
pub fn delta2(t: &SparkTriple) -> BigInt {
    if t.r.degree == 1 {
        t.r.pair_fundamental()
    } else {
        BigInt::zero()
    }
}

// ---------------------------------------------------------------------------
// Degree-1 cocycles and the product
// ---------------------------------------------------------------------------

/// Degree-1 spark on the circle: a^{0,1} ⊕ a^{1,0} with
/// δ(a^{0,1}) = d(a^{1,0}) exactly. Top degree forces e = 0 and r = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spark1Cocycle {
    one_forms: ArcSections,
    functions: ArcSections,
}

impl Spark1Cocycle {
    /// Validates the cocycle condition exactly.
    pub fn new(one_forms: ArcSections, functions: ArcSections) -> Result<Self, SparkError> {
        let lhs = delta_sections(&one_forms);
        let rhs = functions.map(pt_derivative);
        if lhs != rhs {
            return Err(SparkError::NotACocycle);
        }
        Ok(Spark1Cocycle {
            one_forms,
            functions,
        })
    }

    pub fn zero() -> Self {
        Spark1Cocycle {
            one_forms: ArcSections::zero(),
            functions: ArcSections::zero(),
        }
    }

    /// dt-coefficients of the (0,1) part, per arc.
    pub fn one_forms(&self) -> &ArcSections {
        &self.one_forms
    }

    /// The (1,0) part, per overlap.
    pub fn functions(&self) -> &ArcSections {
        &self.functions
    }

    /// A global 1-form c·dt as a degree-1 cocycle.
    pub fn from_global_form(coefficient: &PolyTrig) -> Result<Self, SparkError> {
        Spark1Cocycle::new(ArcSections::global(coefficient), ArcSections::zero())
    }

    pub fn as_bicochain(&self) -> BiCochain {
        let mut c = BiCochain::from_component(0, 1, self.one_forms.clone());
        c.set_component(1, 0, self.functions.clone());
        c
    }

    /// Perturbs by D(b) for a degree-0 bicochain b and by an integer
    /// 1-cochain; both leave the class unchanged.
    pub fn perturb(
        &self,
        b: &BiCochain,
        s: &CircleIntCochain,
    ) -> Result<Spark1Cocycle, SparkError> {
        assert_eq!(s.degree, 1);
        let total = self
            .as_bicochain()
            .add(&total_d(b))
            .add(&s.as_bicochain());
        Spark1Cocycle::new(total.component(0, 1), total.component(1, 0))
    }
}

/// Cup-product representative of the product of two degree-0 classes:
/// a∪f − r∪b through the bicomplex, assembled into a degree-1 cocycle.
pub fn product_engine(x: &CircleSpark0, y: &CircleSpark0) -> Spark1Cocycle {
    let tx = spark_from_data(x);
    let ty = spark_from_data(y);
    let f = BiCochain::from_component(0, 1, ty.e.clone());
    let a_cup_f = crate::bicomplex::bicx_cup(&tx.a, &f);
    let r_cup_b = crate::bicomplex::bicx_cup(&tx.r.as_bicochain(), &ty.a);
    let rep = a_cup_f.sub(&r_cup_b);
    Spark1Cocycle::new(rep.component(0, 1), rep.component(1, 0))
        .expect("cup representative of sparks satisfies the cocycle condition")
}

/// Reduces a degree-1 cocycle to its class in ℝ/ℤ.
///
/// Primitives Fᵢ of the 1-form parts are corrected by the function parts:
/// w = a^{1,0} − δF is constant on each overlap (proved symbolically via
/// the derivative), and the value is the pairing w₁₂ + w₂₃ − w₁₃ with the
/// fundamental cycle, reduced mod ℤ. Calibration: a global form c·dt
/// reduces to the class of c.
pub fn reduce_to_circle(c: &Spark1Cocycle) -> Result<CircleNumber, SparkError> {
    let primitives = c.one_forms.map(pt_antiderivative);
    let delta_f = delta_sections(&primitives);
    let mut consts = Vec::with_capacity(3);
    for i in 0..3 {
        let w = c.functions.get(i).sub(&delta_f.get(i));
        if !pt_derivative(&w).is_zero() {
            return Err(SparkError::NonConstantResidue);
        }
        consts.push(w.as_constant().ok_or(SparkError::NonConstantResidue)?);
    }
    let total = consts[0].add(&consts[1]).sub(&consts[2]);
    Ok(CircleNumber::reduce(&total))
}

/// The closed-form product of two canonical degree-0 sparks, evaluated
/// exactly in ℚ(π) and reduced mod ℤ:
/// NN′/2 + CN′ − C′N + Σₖ (A′ₖBₖ − AₖB′ₖ)·πk.
pub fn product_closed_form(x: &CircleSpark0, y: &CircleSpark0) -> CircleNumber {
    let n = ExactScalar::from_bigint(x.winding());
    let n_p = ExactScalar::from_bigint(y.winding());
    let half = ExactScalar::from_rational(Rational::new(BigInt::from(1), BigInt::from(2)));
    let mut total = n.mul(&n_p).mul(&half);
    total = total.add(&x.constant().mul(&n_p));
    total = total.sub(&y.constant().mul(&n));
    let keys: std::collections::BTreeSet<u32> = x
        .harmonics()
        .map(|(k, _)| k)
        .chain(y.harmonics().map(|(k, _)| k))
        .collect();
    for k in keys {
        let hx = x.harmonic(k);
        let hy = y.harmonic(k);
        let cross = hy.sin.mul(&hx.cos).sub(&hx.sin.mul(&hy.cos));
        if cross.is_zero() {
            continue;
        }
        let pi_k = ExactScalar::pi().scale(&Rational::from_integer(BigInt::from(k)));
        total = total.add(&cross.mul(&pi_k));
    }
    CircleNumber::reduce(&total)
}

/// Full engine pipeline: cup representative, then reduction.
pub fn product_via_engine(x: &CircleSpark0, y: &CircleSpark0) -> CircleNumber {
    reduce_to_circle(&product_engine(x, y)).expect("engine representative reduces")
}

/// Equality of canonical forms (classes of degree-0 sparks).
pub fn spark0_eq(x: &CircleSpark0, y: &CircleSpark0) -> bool {
    x == y
}

// ---------------------------------------------------------------------------
// Wire format
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize, Default)]
pub struct CircleSpark0Repr {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub winding: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constant: Option<ScalarRepr>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub harmonics: Vec<crate::trigpoly::HarmonicRepr>,
}

impl CircleSpark0Repr {
    pub fn to_spark(&self) -> Result<CircleSpark0, String> {
        let winding: BigInt = match &self.winding {
            None => BigInt::zero(),
            Some(s) => s.trim().parse().map_err(|_| format!("bad winding {s:?}"))?,
        };
        let constant = match &self.constant {
            None => ExactScalar::zero(),
            Some(repr) => repr.to_scalar().map_err(|e| e.to_string())?,
        };
        let mut harmonics = Vec::new();
        for h in &self.harmonics {
            if h.k == 0 {
                return Err("harmonic index k must be ≥ 1".into());
            }
            let sin = h
                .sin
                .as_ref()
                .map(|s| s.to_scalar())
                .transpose()
                .map_err(|e| e.to_string())?
                .unwrap_or_else(ExactScalar::zero);
            let cos = h
                .cos
                .as_ref()
                .map(|s| s.to_scalar())
                .transpose()
                .map_err(|e| e.to_string())?
                .unwrap_or_else(ExactScalar::zero);
            harmonics.push((h.k, Harmonic { sin, cos }));
        }
        Ok(CircleSpark0::new(winding, constant, harmonics))
    }

    pub fn from_spark(s: &CircleSpark0) -> CircleSpark0Repr {
        CircleSpark0Repr {
            winding: if s.winding().is_zero() {
                None
            } else {
                Some(s.winding().to_string())
            },
            constant: if s.constant().is_zero() {
                None
            } else {
                Some(ScalarRepr::from_scalar(s.constant()))
            },
            harmonics: s
                .harmonics()
                .map(|(k, h)| crate::trigpoly::HarmonicRepr {
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
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn sc(n: i64, d: i64) -> ExactScalar {
        ExactScalar::from_rational(rat(n, d))
    }

    #[test]
    fn canonicalization_examples() {
        // t + 5/2 → winding 1, constant 1/2
        let body = PolyTrig::t().add(&PolyTrig::constant(sc(5, 2)));
        let f = WindingFunction::new(body).unwrap();
        let s = canonicalize0(&f);
        assert_eq!(s.winding(), &BigInt::from(1));
        assert_eq!(s.constant(), &sc(1, 2));
        // sin(2πt) is already canonical (value at 0 is 0)
        let g = WindingFunction::new(PolyTrig::sin(1)).unwrap();
        let sg = canonicalize0(&g);
        assert_eq!(sg, CircleSpark0::from_sin(1, ExactScalar::one()));
        // t + π − 3 is unchanged: π − 3 ∈ (0,1) by interval refinement
        let c = ExactScalar::pi().sub(&sc(3, 1));
        let h = WindingFunction::new(PolyTrig::t().add(&PolyTrig::constant(c.clone()))).unwrap();
        let sh = canonicalize0(&h);
        assert_eq!(sh.constant(), &c);
        // integer value at 0 normalises to 0
        let k = WindingFunction::new(PolyTrig::constant(sc(7, 1))).unwrap();
        assert!(canonicalize0(&k).constant().is_zero());
    }

    #[test]
    fn canonical_classes_identify_integer_shifts() {
        let a = CircleSpark0::from_constant(sc(1, 2));
        let b = CircleSpark0::from_constant(sc(3, 2));
        assert!(spark0_eq(&a, &b));
        let s = CircleSpark0::from_sin(1, ExactScalar::one());
        let c = CircleSpark0::from_cos(1, ExactScalar::one());
        assert!(!spark0_eq(&s, &c));
    }

    #[test]
    fn spark_equation_of_basic_sparks() {
        // N·t: e = N dt, r = (0,0,−N)
        let s = CircleSpark0::from_winding(3);
        let t = spark_from_data(&s);
        assert!(validate_spark(&t).is_ok());
        assert_eq!(t.e.get(0), PolyTrig::from_int(3));
        assert_eq!(t.r.values[2], BigInt::from(-3));
        assert_eq!(delta2(&t), BigInt::from(3));
        // constants: e = 0, r = 0
        let c = spark_from_data(&CircleSpark0::from_constant(sc(1, 3)));
        assert!(validate_spark(&c).is_ok());
        assert!(c.e.is_zero() && c.r.is_zero());
        assert_eq!(delta2(&c), BigInt::zero());
        // sin(2πkt): e = 2πk cos dt, r = 0
        let k = spark_from_data(&CircleSpark0::from_sin(2, ExactScalar::one()));
        assert!(validate_spark(&k).is_ok());
        assert_eq!(k.e.get(1), pt_derivative(&PolyTrig::sin(2)));
        assert_eq!(delta2(&k), BigInt::zero());
    }

    #[test]
    fn validate_rejects_corrupted_triples() {
        let s = CircleSpark0::from_winding(1);
        let mut t = spark_from_data(&s);
        // corrupt e by dt/2
        t.e = t.e.map(|f| f.add(&PolyTrig::constant(sc(1, 2))));
        assert!(matches!(
            validate_spark(&t),
            Err(SparkError::EquationViolated(_))
        ));
        // corrupt r
        let mut t2 = spark_from_data(&s);
        t2.r.values[0] = BigInt::from(1);
        assert!(validate_spark(&t2).is_err());
    }

    #[test]
    fn global_form_reduces_to_its_integral() {
        // c·dt ↦ class of c
        let c = sc(5, 7);
        let cocycle = Spark1Cocycle::from_global_form(&PolyTrig::constant(c.clone())).unwrap();
        let v = reduce_to_circle(&cocycle).unwrap();
        assert!(v.circle_eq(&CircleNumber::reduce(&c)));
        // a periodic exact form integrates to zero
        let exact = Spark1Cocycle::from_global_form(&pt_derivative(&PolyTrig::sin(3))).unwrap();
        assert!(reduce_to_circle(&exact).unwrap().is_zero());
    }

    #[test]
    fn winding_product_is_half_nnprime() {
        let x = CircleSpark0::from_winding(1);
        let v = product_via_engine(&x, &x);
        assert!(v.circle_eq(&CircleNumber::reduce(&sc(1, 2))));
        assert!(product_closed_form(&x, &x).circle_eq(&v));
    }

    #[test]
    fn sin_cos_product_is_minus_pi_k() {
        for k in 1u32..=3 {
            let x = CircleSpark0::from_sin(k, ExactScalar::one());
            let y = CircleSpark0::from_cos(k, ExactScalar::one());
            let expected = CircleNumber::reduce(
                &ExactScalar::pi()
                    .scale(&Rational::from_integer(BigInt::from(k)))
                    .neg(),
            );
            assert!(product_via_engine(&x, &y).circle_eq(&expected));
            assert!(product_closed_form(&x, &y).circle_eq(&expected));
        }
        // off-diagonal vanishes
        let x = CircleSpark0::from_sin(1, ExactScalar::one());
        let y = CircleSpark0::from_cos(2, ExactScalar::one());
        assert!(product_via_engine(&x, &y).is_zero());
        assert!(product_closed_form(&x, &y).is_zero());
    }

    #[test]
    fn product_with_zero_vanishes() {
        let x = CircleSpark0::new(
            BigInt::from(2),
            sc(1, 3),
            [(
                2,
                Harmonic {
                    sin: sc(1, 2),
                    cos: sc(-2, 5),
                },
            )],
        );
        let zero = CircleSpark0::zero();
        let p = product_engine(&x, &zero);
        assert_eq!(p, Spark1Cocycle::zero());
        assert!(product_closed_form(&x, &zero).is_zero());
    }

    #[test]
    fn constant_times_winding() {
        // [C]*[N′x] = CN′
        let x = CircleSpark0::from_constant(sc(1, 3));
        let y = CircleSpark0::from_winding(2);
        let expected = CircleNumber::reduce(&sc(2, 3));
        assert!(product_via_engine(&x, &y).circle_eq(&expected));
        assert!(product_closed_form(&x, &y).circle_eq(&expected));
        // [Nx]*[C′] = −C′N
        let v = product_via_engine(&y, &x);
        assert!(v.circle_eq(&CircleNumber::reduce(&sc(-2, 3))));
    }

    #[test]
    fn engine_matches_closed_form_on_mixed_data() {
        let x = CircleSpark0::new(
            BigInt::from(2),
            sc(1, 5),
            [
                (
                    1,
                    Harmonic {
                        sin: sc(3, 4),
                        cos: sc(-1, 2),
                    },
                ),
                (
                    3,
                    Harmonic {
                        sin: sc(0, 1),
                        cos: sc(2, 7),
                    },
                ),
            ],
        );
        let y = CircleSpark0::new(
            BigInt::from(-1),
            sc(2, 3),
            [
                (
                    1,
                    Harmonic {
                        sin: sc(-1, 3),
                        cos: sc(1, 6),
                    },
                ),
                (
                    2,
                    Harmonic {
                        sin: sc(5, 2),
                        cos: sc(0, 1),
                    },
                ),
            ],
        );
        assert!(product_via_engine(&x, &y).circle_eq(&product_closed_form(&x, &y)));
        // graded commutativity at class level
        let xy = product_closed_form(&x, &y);
        let yx = product_closed_form(&y, &x);
        assert!(xy.circle_eq(&yx.neg()));
    }

    #[test]
    fn representative_independence_spot_check() {
        let x = CircleSpark0::from_winding(1);
        let y = CircleSpark0::from_sin(1, ExactScalar::one());
        let p = product_engine(&x, &y);
        let base = reduce_to_circle(&p).unwrap();
        let b = BiCochain::from_component(
            0,
            0,
            ArcSections::from_three(
                PolyTrig::monomial(2, sc(1, 2)),
                PolyTrig::sin(1),
                PolyTrig::t(),
            ),
        );
        let s = CircleIntCochain::new(1, [BigInt::from(2), BigInt::from(-1), BigInt::from(3)]);
        let perturbed = p.perturb(&b, &s).unwrap();
        let v = reduce_to_circle(&perturbed).unwrap();
        assert!(v.circle_eq(&base));
    }

    #[test]
    fn spark_repr_parses_short_forms() {
        let json = r#"{"winding":"1"}"#;
        let repr: CircleSpark0Repr = serde_json::from_str(json).unwrap();
        assert_eq!(repr.to_spark().unwrap(), CircleSpark0::from_winding(1));
        let json2 = r#"{"harmonics":[{"k":2,"sin":"1"}]}"#;
        let repr2: CircleSpark0Repr = serde_json::from_str(json2).unwrap();
        assert_eq!(
            repr2.to_spark().unwrap(),
            CircleSpark0::from_sin(2, ExactScalar::one())
        );
    }
}
