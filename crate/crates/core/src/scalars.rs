//! Exact arithmetic in the field ℚ(π) of rational functions of a formal
//! transcendental π, together with circle-value (mod ℤ) semantics and a
//! rigorous float embedding.
//!
//! Every scalar produced by the circle engine — Fourier coefficients,
//! derivatives (factors 2πk), antiderivatives (factors 1/(2πk)) — lives in
//! this field. Because π is transcendental, two values are equal as real
//! numbers exactly when their canonical polynomial-fraction forms coincide,
//! so equality is decidable and structural.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Arbitrary-precision rational number, always reduced with positive
/// denominator.
pub type Rational = BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero scalar")]
    DivisionByZero,
    #[error("cannot parse rational from {0:?}")]
    BadRational(String),
    #[error("cannot parse scalar from {0:?}")]
    BadScalar(String),
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses the `"p/q"` wire form (`"p"` when q = 1).
pub fn rational_from_str(s: &str) -> Result<Rational, ScalarError> {
    let s = s.trim();
    let bad = || ScalarError::BadRational(s.to_string());
    match s.split_once('/') {
        None => s.parse::<BigInt>().map(Rational::from_integer).map_err(|_| bad()),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Renders a rational in the `"p/q"` wire form (`"p"` when q = 1).
pub fn rational_to_str(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

// ---------------------------------------------------------------------------
// Polynomials in the formal symbol π
// ---------------------------------------------------------------------------

/// Polynomial in the formal symbol π with rational coefficients.
///
/// Coefficient `i` multiplies πⁱ. The zero polynomial is the empty
/// coefficient vector; otherwise the trailing coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PiPoly {
    coeffs: Vec<Rational>,
}

impl PiPoly {
    pub fn zero() -> Self {
        PiPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PiPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        PiPoly::from_coeffs(vec![c])
    }

    /// The monomial πⁿ.
    pub fn pi_power(n: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = Rational::one();
        PiPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        PiPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &PiPoly) -> PiPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + other.coeff(i));
        }
        PiPoly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> PiPoly {
        PiPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn sub(&self, other: &PiPoly) -> PiPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &PiPoly) -> PiPoly {
        if self.is_zero() || other.is_zero() {
            return PiPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PiPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> PiPoly {
        if c.is_zero() {
            return PiPoly::zero();
        }
        PiPoly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Euclidean division: returns (quotient, remainder) with
    /// deg(remainder) < deg(divisor).
    pub fn div_rem(&self, divisor: &PiPoly) -> (PiPoly, PiPoly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.coeffs.len();
        if self.coeffs.len() < dd {
            return (PiPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len() - dd + 1];
        let lead = divisor.leading();
        for k in (0..quot.len()).rev() {
            let top = rem[k + dd - 1].clone();
            if top.is_zero() {
                continue;
            }
            let q = top / &lead;
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * b;
            }
            quot[k] = q;
        }
        (PiPoly::from_coeffs(quot), PiPoly::from_coeffs(rem))
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &PiPoly) -> PiPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading();
        a.scale(&(Rational::one() / lead))
    }

    /// Positive rational c such that `self / c` has coprime integer
    /// coefficients; the sign of the leading coefficient stays in c.
    fn signed_content(&self) -> Rational {
        use num_integer::Integer;
        assert!(!self.is_zero());
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = Rational::new(num_gcd, den_lcm);
        if self.leading().is_negative() {
            content = -content;
        }
        content
    }

    fn eval_interval(&self, x: &QInterval) -> QInterval {
        let mut acc = QInterval::point(Rational::zero());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(&QInterval::point(c.clone()));
        }
        acc
    }

    fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }
}

// ---------------------------------------------------------------------------
// The field ℚ(π)
// ---------------------------------------------------------------------------

/// Element of ℚ(π): a reduced fraction of polynomials in the formal π.
///
/// Canonical form: gcd(num, den) = 1 and the denominator is a primitive
/// integer polynomial with positive leading coefficient. Structural equality
/// therefore agrees with real-number equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactScalar {
    num: PiPoly,
    den: PiPoly,
}

impl ExactScalar {
    pub fn zero() -> Self {
        ExactScalar {
            num: PiPoly::zero(),
            den: PiPoly::one(),
        }
    }

    pub fn one() -> Self {
        ExactScalar {
            num: PiPoly::one(),
            den: PiPoly::one(),
        }
    }

    pub fn pi() -> Self {
        ExactScalar {
            num: PiPoly::pi_power(1),
            den: PiPoly::one(),
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        ExactScalar {
            num: PiPoly::constant(r),
            den: PiPoly::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        ExactScalar::from_rational(rat_int(n))
    }

    pub fn from_bigint(n: &BigInt) -> Self {
        ExactScalar::from_rational(Rational::from_integer(n.clone()))
    }

    /// Builds the canonical reduced form of num/den.
    pub fn new(num: PiPoly, den: PiPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(ExactScalar::zero());
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let content = den.signed_content();
        let inv = Rational::one() / content;
        Ok(ExactScalar {
            num: num.scale(&inv),
            den: den.scale(&inv),
        })
    }

    pub fn numerator(&self) -> &PiPoly {
        &self.num
    }

    pub fn denominator(&self) -> &PiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the value is a plain rational (no π dependence).
    pub fn as_rational(&self) -> Option<Rational> {
        if self.num.is_constant() && self.den.is_constant() {
            if self.num.is_zero() {
                return Some(Rational::zero());
            }
            Some(self.num.coeff(0) / self.den.coeff(0))
        } else {
            None
        }
    }

    /// Exact integer value, when the scalar is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        let r = self.as_rational()?;
        if r.denom().is_one() {
            Some(r.numer().clone())
        } else {
            None
        }
    }

    pub fn add(&self, other: &ExactScalar) -> ExactScalar {
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        ExactScalar::new(num, den).expect("nonzero denominators")
    }

    pub fn sub(&self, other: &ExactScalar) -> ExactScalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ExactScalar {
        ExactScalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &ExactScalar) -> ExactScalar {
        let num = self.num.mul(&other.num);
        let den = self.den.mul(&other.den);
        ExactScalar::new(num, den).expect("nonzero denominators")
    }

    pub fn inv(&self) -> Result<ExactScalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        ExactScalar::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &ExactScalar) -> Result<ExactScalar, ScalarError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn scale(&self, c: &Rational) -> ExactScalar {
        self.mul(&ExactScalar::from_rational(c.clone()))
    }

    /// Exact sign: −1, 0, or +1.
    ///
    /// Zero is decided symbolically; otherwise π is enclosed in rational
    /// intervals refined until both numerator and denominator have
    /// determined sign. Termination relies on the transcendence of π: a
    /// nonzero polynomial cannot vanish there.
    pub fn sign(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        if let Some(r) = self.as_rational() {
            return match r.cmp(&Rational::zero()) {
                Ordering::Less => -1,
                Ordering::Equal => 0,
                Ordering::Greater => 1,
            };
        }
        for level in 0.. {
            let pi = pi_enclosure(level);
            let n = self.num.eval_interval(&pi);
            let d = self.den.eval_interval(&pi);
            if let (Some(sn), Some(sd)) = (n.sign(), d.sign()) {
                return sn * sd;
            }
        }
        unreachable!()
    }

    /// Exact comparison through the sign of the difference.
    pub fn cmp_exact(&self, other: &ExactScalar) -> Ordering {
        match self.sub(other).sign() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }

    /// Exact floor. A π-free value takes the rational floor; an irrational
    /// value is bracketed by interval refinement until both endpoints floor
    /// to the same integer.
    pub fn floor(&self) -> BigInt {
        if let Some(r) = self.as_rational() {
            return r.floor().to_integer();
        }
        for level in 0.. {
            let pi = pi_enclosure(level);
            let n = self.num.eval_interval(&pi);
            let d = self.den.eval_interval(&pi);
            if d.sign().is_none() {
                continue;
            }
            let v = n.div(&d);
            let lo = v.lo.floor().to_integer();
            let hi = v.hi.floor().to_integer();
            if lo == hi {
                return lo;
            }
        }
        unreachable!()
    }

    /// Rational enclosure of width below `tol`.
    fn enclose(&self, tol: &Rational) -> QInterval {
        for level in 0.. {
            let pi = pi_enclosure(level);
            let n = self.num.eval_interval(&pi);
            let d = self.den.eval_interval(&pi);
            if d.sign().is_none() {
                continue;
            }
            let v = n.div(&d);
            if &v.width() < tol {
                return v;
            }
        }
        unreachable!()
    }

    /// Float embedding with π evaluated to `precision` decimal digits.
    /// The result differs from the true value by less than 10^(2−precision).
    pub fn to_float(&self, precision: u32) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let digits = precision.clamp(1, 40) + 2;
        let tol = Rational::new(BigInt::one(), BigInt::from(10u32).pow(digits));
        let v = self.enclose(&tol);
        v.midpoint().to_f64().unwrap_or(f64::NAN)
    }

    /// Fast non-rigorous float value (used by the numeric oracle only).
    pub fn to_f64_fast(&self) -> f64 {
        let pi = std::f64::consts::PI;
        self.num.eval_f64(pi) / self.den.eval_f64(pi)
    }
}

impl fmt::Display for ExactScalar {
    /// Human rendering: polynomial numerator like `1/2 + 3·π`, with a
    /// parenthesised denominator when the value is a genuine fraction.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn poly(p: &PiPoly) -> String {
            if p.is_zero() {
                return "0".to_string();
            }
            let mut parts: Vec<String> = Vec::new();
            for (i, c) in p.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mag = rational_to_str(&c.abs());
                let body = match i {
                    0 => mag,
                    1 if c.abs().is_one() => "π".to_string(),
                    1 => format!("{mag}·π"),
                    _ if c.abs().is_one() => format!("π^{i}"),
                    _ => format!("{mag}·π^{i}"),
                };
                if parts.is_empty() {
                    parts.push(if c.is_negative() { format!("-{body}") } else { body });
                } else if c.is_negative() {
                    parts.push(format!("- {body}"));
                } else {
                    parts.push(format!("+ {body}"));
                }
            }
            parts.join(" ")
        }
        if self.den.is_constant() && self.den.coeff(0).is_one() {
            write!(f, "{}", poly(&self.num))
        } else {
            write!(f, "({}) / ({})", poly(&self.num), poly(&self.den))
        }
    }
}

// ---------------------------------------------------------------------------
// Circle numbers: ℝ/ℤ classes of exact scalars
// ---------------------------------------------------------------------------

/// A class in ℝ/ℤ represented by an [`ExactScalar`].
///
/// The representative is canonical: after splitting off the polynomial part
/// by Euclidean division, the π-free constant coefficient is shifted into
/// [0,1). Two classes are equal exactly when their difference is an integer,
/// which the canonical form turns into structural equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CircleNumber {
    rep: ExactScalar,
}

impl CircleNumber {
    pub fn zero() -> Self {
        CircleNumber {
            rep: ExactScalar::zero(),
        }
    }

    /// Reduces an exact scalar modulo ℤ.
    pub fn reduce(x: &ExactScalar) -> Self {
        let (poly_part, _) = x.numerator().div_rem(x.denominator());
        let c0 = poly_part.coeff(0);
        let shift = c0.floor();
        let rep = x.sub(&ExactScalar::from_rational(shift));
        CircleNumber { rep }
    }

    pub fn representative(&self) -> &ExactScalar {
        &self.rep
    }

    /// Equality in ℝ/ℤ: the difference must be an integer.
    pub fn circle_eq(&self, other: &CircleNumber) -> bool {
        self.rep.sub(&other.rep).as_integer().is_some()
    }

    pub fn add(&self, other: &CircleNumber) -> CircleNumber {
        CircleNumber::reduce(&self.rep.add(&other.rep))
    }

    pub fn neg(&self) -> CircleNumber {
        CircleNumber::reduce(&self.rep.neg())
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    /// Float value folded into [0,1).
    pub fn to_float_unit(&self, precision: u32) -> f64 {
        self.rep.to_float(precision).rem_euclid(1.0)
    }
}

impl fmt::Display for CircleNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod 1", self.rep)
    }
}

/// Distance between two points of ℝ/ℤ in the float model.
pub fn circle_distance_f64(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(1.0);
    d.min(1.0 - d)
}

// ---------------------------------------------------------------------------
// Rational interval arithmetic and π enclosures
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
struct QInterval {
    lo: Rational,
    hi: Rational,
}

impl QInterval {
    fn point(x: Rational) -> Self {
        QInterval { lo: x.clone(), hi: x }
    }

    fn add(&self, other: &QInterval) -> QInterval {
        QInterval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    fn mul(&self, other: &QInterval) -> QInterval {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        QInterval { lo, hi }
    }

    /// Division; requires the divisor interval to exclude zero.
    fn div(&self, other: &QInterval) -> QInterval {
        debug_assert!(other.sign().is_some());
        let inv = QInterval {
            lo: Rational::one() / &other.hi,
            hi: Rational::one() / &other.lo,
        };
        self.mul(&inv)
    }

    /// Sign when determined: the interval lies strictly on one side of 0.
    fn sign(&self) -> Option<i32> {
        if self.lo.is_positive() {
            Some(1)
        } else if self.hi.is_negative() {
            Some(-1)
        } else if self.lo.is_zero() && self.hi.is_zero() {
            Some(0)
        } else {
            None
        }
    }

    fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / rat_int(2)
    }
}

/// Rigorous enclosure of arctan(1/x) from the alternating partial sums.
fn atan_inv_bounds(x: i64, terms: usize) -> (Rational, Rational) {
    let x = BigInt::from(x);
    let x2 = &x * &x;
    let mut sum = Rational::zero();
    let mut power = x.clone(); // x^(2i+1)
    let mut prev = Rational::zero();
    for i in 0..=terms {
        let term = Rational::new(BigInt::one(), &power * BigInt::from(2 * i as i64 + 1));
        prev = sum.clone();
        if i % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
        power *= &x2;
    }
    // Consecutive partial sums bracket the limit.
    if prev < sum {
        (prev, sum)
    } else {
        (sum, prev)
    }
}

/// Machin's formula π = 16·arctan(1/5) − 4·arctan(1/239), with rigorous
/// interval combination. Level ℓ uses 8·2^ℓ series terms (≈ 11·2^ℓ digits).
fn compute_pi_enclosure(level: usize) -> QInterval {
    let terms = 8usize << level;
    let (a_lo, a_hi) = atan_inv_bounds(5, terms);
    let (b_lo, b_hi) = atan_inv_bounds(239, terms);
    let sixteen = rat_int(16);
    let four = rat_int(4);
    QInterval {
        lo: &sixteen * a_lo - &four * b_hi,
        hi: &sixteen * a_hi - &four * b_lo,
    }
}

fn pi_enclosure(level: usize) -> QInterval {
    static CACHE: Mutex<Vec<QInterval>> = Mutex::new(Vec::new());
    let mut cache = CACHE.lock().unwrap();
    while cache.len() <= level {
        let next = cache.len();
        cache.push(compute_pi_enclosure(next));
    }
    cache[level].clone()
}

// ---------------------------------------------------------------------------
// Wire format
// ---------------------------------------------------------------------------

/// JSON form of an [`ExactScalar`]: either a bare rational string `"p/q"`
/// or the full `{"num": [...], "den": [...]}` with index = π-power.
#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarRepr {
    Short(String),
    Full { num: Vec<String>, den: Vec<String> },
}

impl ScalarRepr {
    pub fn to_scalar(&self) -> Result<ExactScalar, ScalarError> {
        match self {
            ScalarRepr::Short(s) => Ok(ExactScalar::from_rational(rational_from_str(s)?)),
            ScalarRepr::Full { num, den } => {
                let parse = |v: &[String]| -> Result<PiPoly, ScalarError> {
                    let coeffs = v
                        .iter()
                        .map(|s| rational_from_str(s))
                        .collect::<Result<Vec<_>, _>>()?;
                    Ok(PiPoly::from_coeffs(coeffs))
                };
                ExactScalar::new(parse(num)?, parse(den)?)
            }
        }
    }

    pub fn from_scalar(x: &ExactScalar) -> ScalarRepr {
        if let Some(r) = x.as_rational() {
            return ScalarRepr::Short(rational_to_str(&r));
        }
        let render = |p: &PiPoly| p.coeffs().iter().map(rational_to_str).collect();
        ScalarRepr::Full {
            num: render(x.numerator()),
            den: render(x.denominator()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn es(n: i64, d: i64) -> ExactScalar {
        ExactScalar::from_rational(rat(n, d))
    }

    #[test]
    fn rational_field_basics() {
        // add(1/2, 1/2) = 1
        assert_eq!(es(1, 2).add(&es(1, 2)), ExactScalar::one());
        // mul(π, 1/π) = 1
        let pi = ExactScalar::pi();
        assert_eq!(pi.mul(&pi.inv().unwrap()), ExactScalar::one());
        // eq(2π/2, π)
        let two_pi_over_two = ExactScalar::new(
            PiPoly::from_coeffs(vec![Rational::zero(), rat_int(2)]),
            PiPoly::constant(rat_int(2)),
        )
        .unwrap();
        assert_eq!(two_pi_over_two, pi);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(ExactScalar::zero().inv(), Err(ScalarError::DivisionByZero));
        assert_eq!(
            ExactScalar::new(PiPoly::one(), PiPoly::zero()),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn canonical_form_is_idempotent() {
        // (π² − 1)/(π − 1) reduces to π + 1.
        let num = PiPoly::from_coeffs(vec![rat_int(-1), rat_int(0), rat_int(1)]);
        let den = PiPoly::from_coeffs(vec![rat_int(-1), rat_int(1)]);
        let x = ExactScalar::new(num, den).unwrap();
        let expected = ExactScalar::pi().add(&ExactScalar::one());
        assert_eq!(x, expected);
        assert_eq!(x.denominator(), &PiPoly::one());
    }

    #[test]
    fn circle_reduce_examples() {
        // −1/2 ↦ 1/2
        let half = CircleNumber::reduce(&es(-1, 2));
        assert_eq!(half.representative(), &es(1, 2));
        // 3 ↦ 0
        assert!(CircleNumber::reduce(&es(3, 1)).is_zero());
        // π is untouched: only the π-free part admits integer shifts.
        let pi = CircleNumber::reduce(&ExactScalar::pi());
        assert_eq!(pi.representative(), &ExactScalar::pi());
    }

    #[test]
    fn circle_eq_is_integer_shift_invariant() {
        let x = es(7, 3);
        for n in [-3i64, -1, 0, 2, 5] {
            let shifted = x.add(&ExactScalar::from_int(n));
            assert!(CircleNumber::reduce(&x).circle_eq(&CircleNumber::reduce(&shifted)));
        }
        assert!(!CircleNumber::reduce(&x).circle_eq(&CircleNumber::reduce(&es(1, 2))));
    }

    #[test]
    fn to_float_examples() {
        assert!((ExactScalar::pi().to_float(15) - std::f64::consts::PI).abs() < 1e-13);
        assert!((es(1, 3).to_float(15) - 1.0 / 3.0).abs() < 1e-13);
        let x = ExactScalar::one().add(&ExactScalar::pi().scale(&rat_int(2)));
        assert!((x.to_float(15) - 7.283185307179586).abs() < 1e-12);
    }

    #[test]
    fn sign_of_pi_expressions() {
        // π − 3 > 0, π − 22/7 < 0 (classic bounds).
        let pi = ExactScalar::pi();
        assert_eq!(pi.sub(&es(3, 1)).sign(), 1);
        assert_eq!(pi.sub(&es(22, 7)).sign(), -1);
        assert_eq!(ExactScalar::zero().sign(), 0);
    }

    #[test]
    fn floor_of_pi_expressions() {
        let pi = ExactScalar::pi();
        assert_eq!(pi.floor(), BigInt::from(3));
        assert_eq!(pi.neg().floor(), BigInt::from(-4));
        assert_eq!(es(7, 2).floor(), BigInt::from(3));
        assert_eq!(es(-7, 2).floor(), BigInt::from(-4));
        // 1/π ∈ (0, 1)
        assert_eq!(ExactScalar::pi().inv().unwrap().floor(), BigInt::zero());
    }

    #[test]
    fn scalar_repr_roundtrip() {
        let x = ExactScalar::new(
            PiPoly::from_coeffs(vec![rat(1, 2), rat_int(3)]),
            PiPoly::from_coeffs(vec![rat_int(0), rat_int(1)]),
        )
        .unwrap();
        let repr = ScalarRepr::from_scalar(&x);
        let json = serde_json::to_string(&repr).unwrap();
        let back: ScalarRepr = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_scalar().unwrap(), x);
        // Short form parses too.
        let short: ScalarRepr = serde_json::from_str("\"-5/3\"").unwrap();
        assert_eq!(short.to_scalar().unwrap(), es(-5, 3));
    }
}
