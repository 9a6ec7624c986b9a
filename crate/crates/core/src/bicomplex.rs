//! The Čech–de Rham bicomplex ⊕ Cᵖ(𝒰,ℰ^q) on the fixed three-arc cover of
//! the circle, with total differential D = δ + (−1)ᵖd and the signed cup
//! product (−1)^{js} a ∧ b on front/back faces.
//!
//! Every section is stored as a global lift (a [`PolyTrig`] in the lifted
//! coordinate t). The lifted coordinate jumps by 1 exactly once, on the
//! overlap of the first and third arcs — the seam. On that overlap all
//! sections are expressed in the third arc's coordinate (t near 1), so the
//! first arc's section enters comparisons shifted by −1. The calibration
//! identity δ(lift with winding N) = (0,0,N) fixes this convention and
//! propagates to every downstream sign.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalars::ScalarError;
use crate::trigpoly::{pt_derivative, pt_mul, pt_shift, PolyTrig, PolyTrigRepr};

#[derive(Debug, Error, PartialEq)]
pub enum BicomplexError {
    #[error("form degree {0} exceeds the top degree of the circle")]
    BadFormDegree(usize),
    #[error("Čech degree {0} exceeds the cover's nerve dimension")]
    BadCechDegree(usize),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Index of an arc of the cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Arc {
    U1,
    U2,
    U3,
}

pub const ARCS: [Arc; 3] = [Arc::U1, Arc::U2, Arc::U3];

/// Index of a double overlap. `U13` is the seam: the lifted coordinate
/// jumps by one there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Overlap {
    U12,
    U23,
    U13,
}

pub const OVERLAPS: [Overlap; 3] = [Overlap::U12, Overlap::U23, Overlap::U13];

impl Overlap {
    /// Front and back vertices of the overlap as a nerve edge.
    pub fn ends(self) -> (Arc, Arc) {
        match self {
            Overlap::U12 => (Arc::U1, Arc::U2),
            Overlap::U23 => (Arc::U2, Arc::U3),
            Overlap::U13 => (Arc::U1, Arc::U3),
        }
    }
}

/// Sections assigned to the three arcs (Čech degree 0) or the three
/// overlaps (Čech degree 1), with zero defaults.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ArcSections {
    sections: BTreeMap<u8, PolyTrig>,
}

impl ArcSections {
    pub fn zero() -> Self {
        ArcSections::default()
    }

    pub fn global(f: &PolyTrig) -> Self {
        let mut s = ArcSections::zero();
        for i in 0..3 {
            s.set(i, f.clone());
        }
        s
    }

    pub fn from_three(a: PolyTrig, b: PolyTrig, c: PolyTrig) -> Self {
        let mut s = ArcSections::zero();
        s.set(0, a);
        s.set(1, b);
        s.set(2, c);
        s
    }

    pub fn get(&self, i: u8) -> PolyTrig {
        self.sections.get(&i).cloned().unwrap_or_else(PolyTrig::zero)
    }

    pub fn set(&mut self, i: u8, f: PolyTrig) {
        assert!(i < 3);
        if f.is_zero() {
            self.sections.remove(&i);
        } else {
            self.sections.insert(i, f);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sections.is_empty()
    }

    pub fn add(&self, other: &ArcSections) -> ArcSections {
        let mut out = self.clone();
        for i in 0..3 {
            out.set(i, self.get(i).add(&other.get(i)));
        }
        out
    }

    pub fn neg(&self) -> ArcSections {
        let mut out = ArcSections::zero();
        for i in 0..3 {
            out.set(i, self.get(i).neg());
        }
        out
    }

    pub fn map(&self, f: impl Fn(&PolyTrig) -> PolyTrig) -> ArcSections {
        let mut out = ArcSections::zero();
        for i in 0..3 {
            out.set(i, f(&self.get(i)));
        }
        out
    }

    /// True when the three sections agree as one global object: identical
    /// lifts that are genuinely periodic, so the seam shift is invisible.
    pub fn is_global(&self) -> bool {
        let f = self.get(0);
        self.get(1) == f && self.get(2) == f && pt_shift(&f, 1) == f
    }
}

fn arc_index(a: Arc) -> u8 {
    match a {
        Arc::U1 => 0,
        Arc::U2 => 1,
        Arc::U3 => 2,
    }
}

fn overlap_index(o: Overlap) -> u8 {
    match o {
        Overlap::U12 => 0,
        Overlap::U23 => 1,
        Overlap::U13 => 2,
    }
}

/// Element of the bicomplex, stored by bidegree (Čech degree p ∈ {0,1},
/// form degree q ∈ {0,1}). A form-degree-1 section is recorded by its
/// dt-coefficient. There are no 2-forms and no triple overlaps, so all
/// components with p + q > 2 or p > 1 or q > 1 vanish identically.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BiCochain {
    components: BTreeMap<(u8, u8), ArcSections>,
}

impl BiCochain {
    pub fn zero() -> Self {
        BiCochain::default()
    }

    pub fn from_component(p: u8, q: u8, sections: ArcSections) -> Self {
        let mut c = BiCochain::zero();
        c.set_component(p, q, sections);
        c
    }

    pub fn component(&self, p: u8, q: u8) -> ArcSections {
        self.components
            .get(&(p, q))
            .cloned()
            .unwrap_or_else(ArcSections::zero)
    }

    pub fn set_component(&mut self, p: u8, q: u8, sections: ArcSections) {
        assert!(p < 2 && q < 2, "bidegree out of range for the circle cover");
        if sections.is_zero() {
            self.components.remove(&(p, q));
        } else {
            self.components.insert((p, q), sections);
        }
    }

    pub fn components(&self) -> impl Iterator<Item = (&(u8, u8), &ArcSections)> {
        self.components.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn add(&self, other: &BiCochain) -> BiCochain {
        let mut out = self.clone();
        for (&(p, q), s) in &other.components {
            out.set_component(p, q, out.component(p, q).add(s));
        }
        out
    }

    pub fn neg(&self) -> BiCochain {
        let mut out = BiCochain::zero();
        for (&(p, q), s) in &self.components {
            out.set_component(p, q, s.neg());
        }
        out
    }

    pub fn sub(&self, other: &BiCochain) -> BiCochain {
        self.add(&other.neg())
    }

    pub fn section(&self, p: u8, q: u8, i: u8) -> PolyTrig {
        self.component(p, q).get(i)
    }
}

/// Čech differential of a degree-0 family of sections:
/// (δc)₁₂ = c₂ − c₁, (δc)₂₃ = c₃ − c₂, (δc)₁₃ = c₃ − c₁(t−1).
pub fn delta_sections(c: &ArcSections) -> ArcSections {
    let c1 = c.get(0);
    let c2 = c.get(1);
    let c3 = c.get(2);
    let mut out = ArcSections::zero();
    out.set(overlap_index(Overlap::U12), c2.sub(&c1));
    out.set(overlap_index(Overlap::U23), c3.sub(&c2));
    out.set(overlap_index(Overlap::U13), c3.sub(&pt_shift(&c1, -1)));
    out
}

/// Čech part of the total differential. Degree-1 components map to zero:
/// the cover has no triple overlaps.
pub fn circle_delta(c: &BiCochain) -> BiCochain {
    let mut out = BiCochain::zero();
    for (&(p, q), sections) in c.components() {
        if p == 0 {
            out.set_component(1, q, out.component(1, q).add(&delta_sections(sections)));
        }
    }
    out
}

/// Form part of the total differential: componentwise d/dt, raising the
/// form degree. Degree-1 forms map to zero on the circle.
pub fn circle_d(c: &BiCochain) -> BiCochain {
    let mut out = BiCochain::zero();
    for (&(p, q), sections) in c.components() {
        if q == 0 {
            out.set_component(p, 1, out.component(p, 1).add(&sections.map(pt_derivative)));
        }
    }
    out
}

/// Total differential D = δ + (−1)ᵖ d.
pub fn total_d(c: &BiCochain) -> BiCochain {
    let mut out = circle_delta(c);
    for (&(p, q), sections) in c.components() {
        if q == 0 {
            let mut dv = sections.map(pt_derivative);
            if p % 2 == 1 {
                dv = dv.neg();
            }
            out.set_component(p, 1, out.component(p, 1).add(&dv));
        }
    }
    out
}

/// Signed cup product (a∪b)_{i₀…i_{r+s}} = (−1)^{js} a_front ∧ b_back.
///
/// Wedge on coefficients is [`pt_mul`]; two 1-forms multiply to zero. When
/// the combined tuple is the seam and the front face is a single vertex,
/// the front section is re-expressed in the seam coordinate by a −1 shift.
pub fn bicx_cup(a: &BiCochain, b: &BiCochain) -> BiCochain {
    let mut out = BiCochain::zero();
    for (&(r, j), sa) in a.components() {
        for (&(s, k), sb) in b.components() {
            if j + k > 1 || r + s > 1 {
                // wedge of two 1-forms, or a Čech degree needing triple
                // overlaps: identically zero on this cover
                continue;
            }
            let negate = (j * s) % 2 == 1;
            let mut sections = ArcSections::zero();
            match (r, s) {
                (0, 0) => {
                    for arc in ARCS {
                        let i = arc_index(arc);
                        sections.set(i, pt_mul(&sa.get(i), &sb.get(i)));
                    }
                }
                (0, 1) => {
                    for ov in OVERLAPS {
                        let (front_arc, _) = ov.ends();
                        let mut front = sa.get(arc_index(front_arc));
                        if ov == Overlap::U13 {
                            front = pt_shift(&front, -1);
                        }
                        sections.set(overlap_index(ov), pt_mul(&front, &sb.get(overlap_index(ov))));
                    }
                }
                (1, 0) => {
                    for ov in OVERLAPS {
                        let (_, back_arc) = ov.ends();
                        sections.set(
                            overlap_index(ov),
                            pt_mul(&sa.get(overlap_index(ov)), &sb.get(arc_index(back_arc))),
                        );
                    }
                }
                _ => unreachable!(),
            }
            if negate {
                sections = sections.neg();
            }
            out.set_component(r + s, j + k, out.component(r + s, j + k).add(&sections));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Wire format
// ---------------------------------------------------------------------------

#[derive(Debug, Serialize, Deserialize)]
pub struct BiCochainComponentRepr {
    pub cech: u8,
    pub form: u8,
    /// Keys "1", "2", "3" for arcs or "12", "23", "13" for overlaps.
    pub sections: BTreeMap<String, PolyTrigRepr>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BiCochainRepr {
    pub components: Vec<BiCochainComponentRepr>,
}

fn section_key(p: u8, i: u8) -> String {
    if p == 0 {
        format!("{}", i + 1)
    } else {
        ["12", "23", "13"][i as usize].to_string()
    }
}

fn section_index(p: u8, key: &str) -> Result<u8, String> {
    let names: [&str; 3] = if p == 0 {
        ["1", "2", "3"]
    } else {
        ["12", "23", "13"]
    };
    names
        .iter()
        .position(|n| *n == key)
        .map(|i| i as u8)
        .ok_or_else(|| format!("unknown section key {key:?} for Čech degree {p}"))
}

impl BiCochainRepr {
    pub fn to_bicochain(&self) -> Result<BiCochain, String> {
        let mut out = BiCochain::zero();
        for comp in &self.components {
            if comp.cech > 1 || comp.form > 1 {
                return Err(format!(
                    "bidegree ({}, {}) out of range for the circle cover",
                    comp.cech, comp.form
                ));
            }
            let mut sections = out.component(comp.cech, comp.form);
            for (key, val) in &comp.sections {
                let i = section_index(comp.cech, key)?;
                let f = val.to_polytrig().map_err(|e| e.to_string())?;
                sections.set(i, sections.get(i).add(&f));
            }
            out.set_component(comp.cech, comp.form, sections);
        }
        Ok(out)
    }

    pub fn from_bicochain(c: &BiCochain) -> BiCochainRepr {
        let components = c
            .components()
            .map(|(&(p, q), sections)| BiCochainComponentRepr {
                cech: p,
                form: q,
                sections: (0..3)
                    .filter(|&i| !sections.get(i).is_zero())
                    .map(|i| (section_key(p, i), PolyTrigRepr::from_polytrig(&sections.get(i))))
                    .collect(),
            })
            .collect();
        BiCochainRepr { components }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, ExactScalar};
    use crate::trigpoly::pt_eval_integer;

    fn lift(n: i64) -> PolyTrig {
        PolyTrig::t().scale(&ExactScalar::from_int(n))
    }

    #[test]
    fn delta_of_winding_lift_is_the_seam_integer() {
        // all three sections the lift N·t: δ = (0, 0, N)
        let c = ArcSections::global(&lift(4));
        let d = delta_sections(&c);
        assert!(d.get(0).is_zero());
        assert!(d.get(1).is_zero());
        assert_eq!(d.get(2), PolyTrig::from_int(4));
    }

    #[test]
    fn delta_of_periodic_global_section_vanishes() {
        let c = ArcSections::global(&PolyTrig::sin(2));
        let d = delta_sections(&c);
        assert!(d.get(0).is_zero() && d.get(1).is_zero() && d.get(2).is_zero());
    }

    #[test]
    fn delta_of_t_squared() {
        // t² on every arc: seam value t² − (t−1)² = 2t − 1
        let t2 = PolyTrig::monomial(2, ExactScalar::one());
        let d = delta_sections(&ArcSections::global(&t2));
        let expected = PolyTrig::t()
            .scale(&ExactScalar::from_int(2))
            .sub(&PolyTrig::from_int(1));
        assert_eq!(d.get(2), expected);
    }

    #[test]
    fn total_d_squares_to_zero() {
        let c = BiCochain::from_component(
            0,
            0,
            ArcSections::from_three(
                PolyTrig::monomial(2, ExactScalar::from_rational(rat(1, 3))),
                PolyTrig::sin(1),
                pt_mul(&PolyTrig::t(), &PolyTrig::cos(2)),
            ),
        );
        assert!(total_d(&total_d(&c)).is_zero());
    }

    #[test]
    fn d_kills_integer_one_cochains() {
        let c = BiCochain::from_component(
            1,
            0,
            ArcSections::from_three(PolyTrig::from_int(1), PolyTrig::zero(), PolyTrig::from_int(-3)),
        );
        assert!(total_d(&c).is_zero());
    }

    #[test]
    fn spark_equation_shape_for_a_lift() {
        // D(lift of N·t + sin) = (0,1) derivative part + (1,0) seam part
        let f = lift(2).add(&PolyTrig::sin(1));
        let c = BiCochain::from_component(0, 0, ArcSections::global(&f));
        let dc = total_d(&c);
        let e = dc.component(0, 1);
        assert!(e.is_global());
        assert_eq!(e.get(0), pt_derivative(&f));
        let r = dc.component(1, 0);
        assert!(r.get(0).is_zero() && r.get(1).is_zero());
        assert_eq!(r.get(2), PolyTrig::from_int(2));
    }

    #[test]
    fn cup_of_global_zero_forms_is_pointwise() {
        let a = BiCochain::from_component(0, 0, ArcSections::global(&PolyTrig::sin(1)));
        let b = BiCochain::from_component(0, 0, ArcSections::global(&PolyTrig::cos(1)));
        let ab = bicx_cup(&a, &b);
        let expected = pt_mul(&PolyTrig::sin(1), &PolyTrig::cos(1));
        assert_eq!(ab.component(0, 0).get(0), expected);
    }

    #[test]
    fn cup_integer_cochain_with_lift_matches_seam_product() {
        // r at (1,0) = (0,0,−N), b at (0,0) the lift N′t:
        // (r∪b)₁₃ = −N·N′t in the seam coordinate
        let r = BiCochain::from_component(
            1,
            0,
            ArcSections::from_three(PolyTrig::zero(), PolyTrig::zero(), PolyTrig::from_int(-2)),
        );
        let b = BiCochain::from_component(0, 0, ArcSections::global(&lift(3)));
        let cup = bicx_cup(&r, &b);
        let seam = cup.component(1, 0).get(2);
        assert_eq!(seam, lift(-6));
        // form-degree sign: a at (0,1) against b at (1,0) flips sign
        let a1 = BiCochain::from_component(0, 1, ArcSections::global(&PolyTrig::from_int(1)));
        let b10 = BiCochain::from_component(
            1,
            0,
            ArcSections::from_three(PolyTrig::from_int(1), PolyTrig::zero(), PolyTrig::zero()),
        );
        let signed = bicx_cup(&a1, &b10);
        assert_eq!(signed.component(1, 1).get(0), PolyTrig::from_int(-1));
    }

    #[test]
    fn cup_front_face_shifts_at_the_seam() {
        // a = t on arcs (Čech 0), b = 1 on the seam (Čech 1, form 0):
        // (a∪b)₁₃ = shift(a₁, −1)·b₁₃ = t − 1
        let a = BiCochain::from_component(0, 0, ArcSections::global(&PolyTrig::t()));
        let b = BiCochain::from_component(
            1,
            0,
            ArcSections::from_three(PolyTrig::zero(), PolyTrig::zero(), PolyTrig::from_int(1)),
        );
        let cup = bicx_cup(&a, &b);
        let seam = cup.component(1, 0).get(2);
        assert_eq!(
            pt_eval_integer(&seam, 1),
            ExactScalar::zero(),
        );
        assert_eq!(seam, PolyTrig::t().sub(&PolyTrig::from_int(1)));
    }

    #[test]
    fn leibniz_rule_spot_check() {
        // homogeneous a at (0,0), b at (0,1): D(a∪b) = Da∪b + (−1)^0 a∪Db
        let a = BiCochain::from_component(
            0,
            0,
            ArcSections::from_three(lift(1), PolyTrig::sin(1), PolyTrig::cos(2)),
        );
        let b = BiCochain::from_component(
            0,
            1,
            ArcSections::from_three(PolyTrig::cos(1), PolyTrig::t(), PolyTrig::from_int(2)),
        );
        let lhs = total_d(&bicx_cup(&a, &b));
        let rhs = bicx_cup(&total_d(&a), &b).add(&bicx_cup(&a, &total_d(&b)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn bicochain_repr_roundtrip() {
        let c = BiCochain::from_component(
            0,
            1,
            ArcSections::from_three(PolyTrig::sin(1), PolyTrig::zero(), lift(2)),
        );
        let repr = BiCochainRepr::from_bicochain(&c);
        let json = serde_json::to_string(&repr).unwrap();
        let back: BiCochainRepr = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_bicochain().unwrap(), c);
    }
}
