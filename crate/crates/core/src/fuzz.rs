//! Deterministic generators for the property suites: seeded ChaCha streams
//! produce rationals, scalars, trig polynomials, bicochains, sparks, nerves
//! and cochains with bounded sizes, so every suite is reproducible from its
//! seed alone.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bicomplex::{ArcSections, BiCochain};
use crate::nerve::{Cochain, Nerve, Simplex};
use crate::scalars::{ExactScalar, Rational};
use crate::spark::{CircleIntCochain, CircleSpark0};
use crate::trigpoly::{Harmonic, PolyTrig, TrigSeries};

pub struct Fuzzer {
    rng: ChaCha8Rng,
}

impl Fuzzer {
    pub fn new(seed: u64) -> Self {
        Fuzzer {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn int(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    /// Rational with numerator and denominator bounded by `bound`.
    pub fn rational(&mut self, bound: i64) -> Rational {
        let num = self.rng.gen_range(-bound..=bound);
        let den = self.rng.gen_range(1..=bound);
        Rational::new(BigInt::from(num), BigInt::from(den))
    }

    pub fn scalar(&mut self, bound: i64) -> ExactScalar {
        ExactScalar::from_rational(self.rational(bound))
    }

    /// Element of ℚ(π) with the given degree bound on numerator and
    /// denominator.
    pub fn pi_scalar(&mut self, degree: usize, bound: i64) -> ExactScalar {
        loop {
            let num_deg = self.rng.gen_range(0..=degree);
            let den_deg = self.rng.gen_range(0..=degree);
            let coeffs = |f: &mut Self, d: usize| {
                (0..=d).map(|_| f.rational(bound)).collect::<Vec<_>>()
            };
            let num = crate::scalars::PiPoly::from_coeffs(coeffs(self, num_deg));
            let den = crate::scalars::PiPoly::from_coeffs(coeffs(self, den_deg));
            if let Ok(x) = ExactScalar::new(num, den) {
                return x;
            }
        }
    }

    /// Trig series with harmonics up to `max_k` and rational coefficients.
    pub fn trig_series(&mut self, max_k: u32, bound: i64) -> TrigSeries {
        let mut s = TrigSeries::constant(self.scalar(bound));
        let count = self.rng.gen_range(0..=max_k.min(3));
        for _ in 0..count {
            let k = self.rng.gen_range(1..=max_k);
            s.add_harmonic(k, &self.scalar(bound), &self.scalar(bound));
        }
        s
    }

    /// PolyTrig with t-degree ≤ `max_j`, harmonics ≤ `max_k`.
    pub fn polytrig(&mut self, max_j: u32, max_k: u32, bound: i64) -> PolyTrig {
        let mut out = PolyTrig::zero();
        let terms = self.rng.gen_range(1..=2);
        for _ in 0..terms {
            let j = self.rng.gen_range(0..=max_j);
            out = out.add(&PolyTrig::from_series(j, self.trig_series(max_k, bound)));
        }
        out
    }

    pub fn arc_sections(&mut self, max_j: u32, max_k: u32, bound: i64) -> ArcSections {
        ArcSections::from_three(
            self.polytrig(max_j, max_k, bound),
            self.polytrig(max_j, max_k, bound),
            self.polytrig(max_j, max_k, bound),
        )
    }

    /// Homogeneous bicomplex element at the given bidegree.
    pub fn bicochain_component(&mut self, p: u8, q: u8) -> BiCochain {
        BiCochain::from_component(p, q, self.arc_sections(2, 3, 6))
    }

    /// Random bidegree on the circle cover.
    pub fn bidegree(&mut self) -> (u8, u8) {
        (self.rng.gen_range(0..=1), self.rng.gen_range(0..=1))
    }

    /// General (possibly mixed) bicochain.
    pub fn bicochain(&mut self) -> BiCochain {
        let mut out = BiCochain::zero();
        for _ in 0..self.rng.gen_range(1..=2) {
            let (p, q) = self.bidegree();
            out = out.add(&self.bicochain_component(p, q));
        }
        out
    }

    /// Canonical spark with harmonics up to `max_k` and rational
    /// coefficients with parts bounded by `bound`.
    pub fn spark(&mut self, max_k: u32, bound: i64) -> CircleSpark0 {
        let winding = BigInt::from(self.rng.gen_range(-4i64..=4));
        let constant = self.scalar(bound);
        let mut harmonics = Vec::new();
        let count = self.rng.gen_range(0..=3u32);
        for _ in 0..count {
            let k = self.rng.gen_range(1..=max_k);
            harmonics.push((
                k,
                Harmonic {
                    sin: self.scalar(bound),
                    cos: self.scalar(bound),
                },
            ));
        }
        CircleSpark0::new(winding, constant, harmonics)
    }

    /// Spark with no winding (flat characteristic class).
    pub fn flat_spark(&mut self, max_k: u32, bound: i64) -> CircleSpark0 {
        let mut s = self.spark(max_k, bound);
        let w: i64 = {
            use num_traits::ToPrimitive;
            s.winding().to_i64().unwrap_or(0)
        };
        if w != 0 {
            s = s.add(&CircleSpark0::from_winding(-w));
        }
        s
    }

    /// Spark built from a dyadic float model: every f64 is an exact
    /// rational, so the exact and float pipelines share the same data.
    pub fn float_spark(&mut self, max_k: u32) -> CircleSpark0 {
        let dyadic = |f: &mut Self| {
            let v: f64 = f.rng.gen_range(-2.0..2.0);
            let v = (v * 1024.0).round() / 1024.0;
            ExactScalar::from_rational(Rational::from_float(v).unwrap())
        };
        let winding = BigInt::from(self.rng.gen_range(-3i64..=3));
        let constant = dyadic(self);
        let mut harmonics = Vec::new();
        for _ in 0..self.rng.gen_range(0..=3u32) {
            let k = self.rng.gen_range(1..=max_k);
            harmonics.push((
                k,
                Harmonic {
                    sin: dyadic(self),
                    cos: dyadic(self),
                },
            ));
        }
        CircleSpark0::new(winding, constant, harmonics)
    }

    pub fn int_cochain(&mut self, degree: u8, bound: i64) -> CircleIntCochain {
        CircleIntCochain::new(
            degree,
            [
                BigInt::from(self.int(-bound, bound)),
                BigInt::from(self.int(-bound, bound)),
                BigInt::from(self.int(-bound, bound)),
            ],
        )
    }

    /// Random nerve on at most `max_vertices` vertices, generated by a
    /// handful of random simplices plus all faces.
    pub fn nerve(&mut self, max_vertices: usize) -> Nerve {
        let n = self.rng.gen_range(3..=max_vertices);
        let mut generators: Vec<Simplex> = Vec::new();
        let count = self.rng.gen_range(1..=3);
        for _ in 0..count {
            let size = self.rng.gen_range(2..=(n.min(4)));
            let mut vertices: Vec<usize> = (0..n).collect();
            for i in (1..vertices.len()).rev() {
                let j = self.rng.gen_range(0..=i);
                vertices.swap(i, j);
            }
            let mut simplex: Vec<usize> = vertices.into_iter().take(size).collect();
            simplex.sort_unstable();
            generators.push(simplex);
        }
        Nerve::generated_by(n, &generators).expect("generated nerves are valid")
    }

    /// Random rational cochain on the nerve.
    pub fn cochain_q(&mut self, nerve: &Nerve, degree: usize, bound: i64) -> Cochain<BigRational> {
        let mut c = Cochain::zero(degree);
        for s in nerve.simplices_of_degree(degree) {
            if self.rng.gen_bool(0.7) {
                c.set(s.clone(), self.rational(bound));
            }
        }
        c
    }

    /// Random rational cocycle: a random combination of a kernel basis.
    pub fn cocycle_q(&mut self, nerve: &Nerve, degree: usize, bound: i64) -> Cochain<BigRational> {
        let basis = crate::nerve::cocycle_basis(nerve, degree);
        let mut out = Cochain::zero(degree);
        for b in basis {
            let c = self.rational(bound);
            if !num_traits::Zero::is_zero(&c) {
                out = out.add(&b.map(|v| v * &c));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::nerve::is_cocycle;

    #[test]
    fn seeded_generation_is_deterministic() {
        let mut a = Fuzzer::new(42);
        let mut b = Fuzzer::new(42);
        for _ in 0..10 {
            assert_eq!(a.spark(6, 16), b.spark(6, 16));
            assert_eq!(a.polytrig(2, 3, 8), b.polytrig(2, 3, 8));
        }
    }

    #[test]
    fn generated_cocycles_are_closed() {
        let mut f = Fuzzer::new(7);
        for _ in 0..5 {
            let nerve = f.nerve(6);
            let deg = f.int(0, 2) as usize;
            let c = f.cocycle_q(&nerve, deg, 5);
            assert!(is_cocycle(&nerve, &c));
        }
    }
}
