//! Run reports and the command implementations behind the thin binary:
//! product pipelines over spark files, seeded property-suite fuzzing, and
//! Čech operations over nerve/cochain/cycle files.
//!
//! Reports are deterministic: identical inputs and seed produce identical
//! output. Exact values render before floats so logs stay diff-stable.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::deligne::{class_to_circle, deligne_cup, DeligneClass};
use crate::fuzz::Fuzzer;
use crate::nerve::{
    cech_cup, cech_delta, cycle_from_repr, flat_bundle_product, solve_coboundary, AnyCochain,
    Cochain, CochainRepr, Nerve, NerveRepr,
};
use crate::quadrature::quadrature_product;
use crate::scalars::{circle_distance_f64, CircleNumber};
use crate::spark::{
    product_closed_form, product_engine, product_via_engine, reduce_to_circle, CircleSpark0,
    CircleSpark0Repr,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;
pub const EXIT_DEGREES: i32 = 4;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("mathematical disagreement: {0}")]
    Disagreement(String),
    #[error("invalid input degrees: {0}")]
    Degrees(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Disagreement(_) => EXIT_DISAGREEMENT,
            CliError::Degrees(_) => EXIT_DEGREES,
        }
    }
}

/// One named check inside a report.
#[derive(Debug, Serialize, Deserialize)]
pub struct CheckLine {
    pub name: String,
    pub passed: bool,
}

/// Outcome of one command: the command echoed, canonicalised inputs, exact
/// and float renderings, oracle data when requested, and per-check status.
#[derive(Debug, Serialize, Deserialize, Default)]
pub struct RunReport {
    pub command: String,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub inputs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub float: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_distance: Option<f64>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub checks: Vec<CheckLine>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub lines: Vec<String>,
}

impl RunReport {
    pub fn new(command: impl Into<String>) -> Self {
        RunReport {
            command: command.into(),
            ..Default::default()
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&mut self, name: impl Into<String>, passed: bool) {
        self.checks.push(CheckLine {
            name: name.into(),
            passed,
        });
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        for i in &self.inputs {
            writeln!(out, "input: {i}").unwrap();
        }
        if let Some(e) = &self.exact {
            writeln!(out, "exact: {e}").unwrap();
        }
        if let Some(f) = self.float {
            writeln!(out, "float: {f:.15}").unwrap();
        }
        if let Some(o) = self.oracle {
            writeln!(out, "oracle: {o:.15}").unwrap();
        }
        if let Some(d) = self.oracle_distance {
            writeln!(out, "oracle-distance: {d:.3e}").unwrap();
        }
        for l in &self.lines {
            writeln!(out, "{l}").unwrap();
        }
        for c in &self.checks {
            writeln!(out, "[{}] {}", if c.passed { "PASS" } else { "FAIL" }, c.name).unwrap();
        }
        out
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.render_text(),
            OutputFormat::Json => serde_json::to_string_pretty(self).unwrap(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductMode {
    Closed,
    Engine,
    Deligne,
    All,
}

impl std::str::FromStr for ProductMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "closed" => Ok(ProductMode::Closed),
            "engine" => Ok(ProductMode::Engine),
            "deligne" => Ok(ProductMode::Deligne),
            "all" => Ok(ProductMode::All),
            other => Err(format!("unknown mode {other:?}")),
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn load_spark(path: &Path) -> Result<CircleSpark0, CliError> {
    let repr: CircleSpark0Repr = read_json(path)?;
    repr.to_spark()
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn spark_summary(s: &CircleSpark0) -> String {
    serde_json::to_string(&CircleSpark0Repr::from_spark(s)).unwrap()
}

fn deligne_pipeline(x: &CircleSpark0, y: &CircleSpark0) -> Result<CircleNumber, CliError> {
    let product = deligne_cup(
        &DeligneClass::Level1(x.clone()),
        &DeligneClass::Level1(y.clone()),
    )
    .map_err(|e| CliError::Disagreement(e.to_string()))?;
    class_to_circle(&product).map_err(|e| CliError::Disagreement(e.to_string()))
}

/// Computes the product of two spark files through the requested
/// pipelines; in mode `all` every pipeline must agree exactly, and the
/// numeric oracle must agree within `tol` when requested.
pub fn cmd_product(
    lhs: &Path,
    rhs: &Path,
    mode: ProductMode,
    check_oracle: bool,
    tol: f64,
) -> Result<RunReport, CliError> {
    let x = load_spark(lhs)?;
    let y = load_spark(rhs)?;
    let mut report = RunReport::new(format!(
        "product --lhs {} --rhs {} --mode {}",
        lhs.display(),
        rhs.display(),
        match mode {
            ProductMode::Closed => "closed",
            ProductMode::Engine => "engine",
            ProductMode::Deligne => "deligne",
            ProductMode::All => "all",
        }
    ));
    report.inputs.push(spark_summary(&x));
    report.inputs.push(spark_summary(&y));

    let value: CircleNumber = match mode {
        ProductMode::Closed => product_closed_form(&x, &y),
        ProductMode::Engine => product_via_engine(&x, &y),
        ProductMode::Deligne => deligne_pipeline(&x, &y)?,
        ProductMode::All => {
            let closed = product_closed_form(&x, &y);
            let engine = product_via_engine(&x, &y);
            let deligne = deligne_pipeline(&x, &y)?;
            let engine_ok = closed.circle_eq(&engine);
            let deligne_ok = closed.circle_eq(&deligne);
            report.check("engine agrees with closed form", engine_ok);
            report.check("Deligne pipeline agrees with closed form", deligne_ok);
            if !engine_ok || !deligne_ok {
                return Err(CliError::Disagreement(format!(
                    "pipelines disagree: closed={closed}, engine={engine}, deligne={deligne}"
                )));
            }
            closed
        }
    };
    report.exact = Some(value.to_string());
    report.float = Some(value.to_float_unit(15));
    if check_oracle {
        let oracle = quadrature_product(&x, &y).rem_euclid(1.0);
        let distance = circle_distance_f64(oracle, value.to_float_unit(15));
        report.oracle = Some(oracle);
        report.oracle_distance = Some(distance);
        let ok = distance < tol;
        report.check(format!("quadrature oracle within {tol:.1e}"), ok);
        if !ok {
            return Err(CliError::Disagreement(format!(
                "oracle distance {distance:.3e} exceeds tolerance {tol:.1e}"
            )));
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FuzzSuite {
    Leibniz,
    Assoc,
    Commut,
    Roundtrip,
    Agreement,
}

impl std::str::FromStr for FuzzSuite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "leibniz" => Ok(FuzzSuite::Leibniz),
            "assoc" => Ok(FuzzSuite::Assoc),
            "commut" => Ok(FuzzSuite::Commut),
            "roundtrip" => Ok(FuzzSuite::Roundtrip),
            "agreement" => Ok(FuzzSuite::Agreement),
            other => Err(format!("unknown suite {other:?}")),
        }
    }
}

/// Runs a named property suite with a deterministic generator; the first
/// counterexample is reported verbatim.
pub fn cmd_fuzz(suite: FuzzSuite, cases: u32, seed: u64) -> Result<RunReport, CliError> {
    let name = match suite {
        FuzzSuite::Leibniz => "leibniz",
        FuzzSuite::Assoc => "assoc",
        FuzzSuite::Commut => "commut",
        FuzzSuite::Roundtrip => "roundtrip",
        FuzzSuite::Agreement => "agreement",
    };
    let mut report = RunReport::new(format!("fuzz {name} --cases {cases} --seed {seed}"));
    let mut fuzzer = Fuzzer::new(seed);
    let mut failure: Option<String> = None;
    for case in 0..cases {
        let outcome: Result<(), String> = match suite {
            FuzzSuite::Leibniz => run_leibniz_case(&mut fuzzer),
            FuzzSuite::Assoc => run_assoc_case(&mut fuzzer),
            FuzzSuite::Commut => run_commut_case(&mut fuzzer),
            FuzzSuite::Roundtrip => run_roundtrip_case(&mut fuzzer),
            FuzzSuite::Agreement => run_agreement_case(&mut fuzzer),
        };
        if let Err(witness) = outcome {
            failure = Some(format!("case {case}: {witness}"));
            break;
        }
    }
    match failure {
        None => {
            report.check(format!("{name}: {cases} cases"), true);
            Ok(report)
        }
        Some(witness) => {
            report.check(format!("{name}: {witness}"), false);
            report.lines.push(witness.clone());
            Err(CliError::Disagreement(witness))
        }
    }
}

fn run_leibniz_case(f: &mut Fuzzer) -> Result<(), String> {
    use crate::bicomplex::{bicx_cup, total_d};
    let (r, j) = f.bidegree();
    let (s, k) = f.bidegree();
    let a = f.bicochain_component(r, j);
    let b = f.bicochain_component(s, k);
    let lhs = total_d(&bicx_cup(&a, &b));
    let mut rhs = bicx_cup(&total_d(&a), &b);
    let second = bicx_cup(&a, &total_d(&b));
    if (r + j) % 2 == 0 {
        rhs = rhs.add(&second);
    } else {
        rhs = rhs.sub(&second);
    }
    if lhs != rhs {
        return Err(format!(
            "Leibniz failed for bidegrees ({r},{j}) and ({s},{k}): a={a:?} b={b:?}"
        ));
    }
    Ok(())
}

fn run_assoc_case(f: &mut Fuzzer) -> Result<(), String> {
    use crate::bicomplex::bicx_cup;
    let a = f.bicochain();
    let b = f.bicochain();
    let c = f.bicochain();
    let lhs = bicx_cup(&bicx_cup(&a, &b), &c);
    let rhs = bicx_cup(&a, &bicx_cup(&b, &c));
    if lhs != rhs {
        return Err(format!("associativity failed: a={a:?} b={b:?} c={c:?}"));
    }
    // and on a random nerve over ℚ
    let nerve = f.nerve(6);
    let max_deg = nerve.max_degree();
    let d1 = f.int(0, max_deg as i64) as usize;
    let d2 = f.int(0, max_deg as i64) as usize;
    let d3 = f.int(0, max_deg as i64) as usize;
    let x = f.cochain_q(&nerve, d1, 5);
    let y = f.cochain_q(&nerve, d2, 5);
    let z = f.cochain_q(&nerve, d3, 5);
    let lhs2 = cech_cup(&nerve, &cech_cup(&nerve, &x, &y), &z);
    let rhs2 = cech_cup(&nerve, &x, &cech_cup(&nerve, &y, &z));
    if lhs2 != rhs2 {
        return Err("Čech cup associativity failed".to_string());
    }
    Ok(())
}

fn run_commut_case(f: &mut Fuzzer) -> Result<(), String> {
    let x = f.spark(6, 16);
    let y = f.spark(6, 16);
    let xy = product_closed_form(&x, &y);
    let yx = product_closed_form(&y, &x);
    if !xy.circle_eq(&yx.neg()) {
        return Err(format!("commutativity failed for {x:?} and {y:?}"));
    }
    Ok(())
}

fn run_roundtrip_case(f: &mut Fuzzer) -> Result<(), String> {
    use crate::deligne::{deligne_to_spark_p1, deligne_to_spark_p2, spark_to_deligne_p1, spark_to_deligne_p2};
    let s = f.spark(6, 16);
    let back = deligne_to_spark_p1(&spark_to_deligne_p1(&s)).map_err(|e| e.to_string())?;
    if back != s {
        return Err(format!("level-1 round trip failed for {s:?}"));
    }
    let t = f.spark(4, 8);
    let cocycle = product_engine(&s, &t);
    let back2 = deligne_to_spark_p2(&spark_to_deligne_p2(&cocycle)).map_err(|e| e.to_string())?;
    if back2 != cocycle {
        return Err(format!("level-2 round trip failed for {s:?} × {t:?}"));
    }
    Ok(())
}

fn run_agreement_case(f: &mut Fuzzer) -> Result<(), String> {
    let x = f.spark(6, 16);
    let y = f.spark(6, 16);
    let closed = product_closed_form(&x, &y);
    let engine = reduce_to_circle(&product_engine(&x, &y)).map_err(|e| e.to_string())?;
    if !closed.circle_eq(&engine) {
        return Err(format!(
            "engine/closed-form disagreement for {x:?} × {y:?}: {engine} vs {closed}"
        ));
    }
    if !crate::deligne::ring_agreement_check(&x, &y) {
        return Err(format!("Deligne/closed-form disagreement for {x:?} × {y:?}"));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CechOp {
    Delta,
    Cup,
    FlatProduct,
}

impl std::str::FromStr for CechOp {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "delta" => Ok(CechOp::Delta),
            "cup" => Ok(CechOp::Cup),
            "flat-product" => Ok(CechOp::FlatProduct),
            other => Err(format!("unknown Čech operation {other:?}")),
        }
    }
}

/// Čech operations over nerve/cochain/cycle files: the differential, the
/// cup product, or the flat-bundle pairing against a cycle.
pub fn cmd_cech(
    nerve_path: &Path,
    cochain_paths: &[std::path::PathBuf],
    op: CechOp,
    cycle_path: Option<&Path>,
) -> Result<RunReport, CliError> {
    let nerve_repr: NerveRepr = read_json(nerve_path)?;
    let nerve: Nerve = nerve_repr
        .to_nerve()
        .map_err(|e| CliError::Parse(format!("{}: {e}", nerve_path.display())))?;
    let mut cochains = Vec::new();
    for p in cochain_paths {
        let repr: CochainRepr = read_json(p)?;
        let c = repr
            .to_cochain(&nerve)
            .map_err(|e| CliError::Parse(format!("{}: {e}", p.display())))?;
        cochains.push(c);
    }
    let mut report = RunReport::new(format!(
        "cech {} --nerve {}",
        match op {
            CechOp::Delta => "delta",
            CechOp::Cup => "cup",
            CechOp::FlatProduct => "flat-product",
        },
        nerve_path.display()
    ));
    match op {
        CechOp::Delta => {
            let [c] = &cochains[..] else {
                return Err(CliError::Degrees(
                    "delta takes exactly one cochain".to_string(),
                ));
            };
            let result = match c {
                AnyCochain::Int(c) => AnyCochain::Int(cech_delta(&nerve, c)),
                AnyCochain::Rat(c) => AnyCochain::Rat(cech_delta(&nerve, c)),
                AnyCochain::QPi(c) => AnyCochain::QPi(cech_delta(&nerve, c)),
                AnyCochain::Float(c) => AnyCochain::Float(cech_delta(&nerve, c)),
            };
            report.lines.push(
                serde_json::to_string(&CochainRepr::from_any(&result))
                    .expect("cochain serialises"),
            );
        }
        CechOp::Cup => {
            let [a, b] = &cochains[..] else {
                return Err(CliError::Degrees(
                    "cup takes exactly two cochains".to_string(),
                ));
            };
            let (Some(aq), Some(bq)) = (a.to_qpi(), b.to_qpi()) else {
                return Err(CliError::Degrees(
                    "cup over float coefficients is not supported; use Z, Q or QPi".to_string(),
                ));
            };
            if a.degree() + b.degree() > nerve.max_degree() {
                return Err(CliError::Degrees(format!(
                    "cup degree {} exceeds the nerve dimension {}",
                    a.degree() + b.degree(),
                    nerve.max_degree()
                )));
            }
            let result = cech_cup(&nerve, &aq, &bq);
            report.lines.push(
                serde_json::to_string(&CochainRepr::from_any(&AnyCochain::QPi(result)))
                    .expect("cochain serialises"),
            );
        }
        CechOp::FlatProduct => {
            let [r, b] = &cochains[..] else {
                return Err(CliError::Degrees(
                    "flat-product takes the integer 2-cocycle and the transition 1-cochain"
                        .to_string(),
                ));
            };
            let AnyCochain::Int(r) = r else {
                return Err(CliError::Degrees(
                    "the first cochain must have ring Z".to_string(),
                ));
            };
            let b = match b {
                AnyCochain::Rat(b) => b.clone(),
                AnyCochain::Int(b) => b.map(|v| num_rational::BigRational::from_integer(v.clone())),
                _ => {
                    return Err(CliError::Degrees(
                        "the second cochain must have ring Q or Z".to_string(),
                    ))
                }
            };
            let cycle_path = cycle_path.ok_or_else(|| {
                CliError::Degrees("flat-product requires --cycle".to_string())
            })?;
            let entries: Vec<crate::nerve::CycleEntryRepr> = read_json(cycle_path)?;
            let cycle = cycle_from_repr(&entries).map_err(CliError::Parse)?;
            let value = flat_bundle_product(&nerve, r, &b, &cycle).map_err(|e| match e {
                crate::nerve::NerveError::DegreeMismatch { .. } => {
                    CliError::Degrees(e.to_string())
                }
                other => CliError::Disagreement(other.to_string()),
            })?;
            report.exact = Some(value.to_string());
            report.float = Some(value.to_float_unit(15));
        }
    }
    Ok(report)
}

/// Solves δx = target over ℚ and reports the witness; used by the examples
/// and exposed for symmetry with the other commands.
pub fn coboundary_witness(
    nerve: &Nerve,
    target: &Cochain<num_rational::BigRational>,
) -> Result<Cochain<num_rational::BigRational>, CliError> {
    solve_coboundary(nerve, target).map_err(|e| CliError::Disagreement(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fuzz_suites_pass_small_runs() {
        for suite in [
            FuzzSuite::Leibniz,
            FuzzSuite::Assoc,
            FuzzSuite::Commut,
            FuzzSuite::Roundtrip,
            FuzzSuite::Agreement,
        ] {
            let report = cmd_fuzz(suite, 5, 12345).expect("suite passes");
            assert!(report.all_passed());
        }
    }

    #[test]
    fn fuzz_reports_are_deterministic() {
        let a = cmd_fuzz(FuzzSuite::Commut, 8, 99).unwrap();
        let b = cmd_fuzz(FuzzSuite::Commut, 8, 99).unwrap();
        assert_eq!(a.render_text(), b.render_text());
        assert_eq!(
            a.render(OutputFormat::Json),
            b.render(OutputFormat::Json)
        );
    }

    #[test]
    fn product_command_roundtrip() {
        let dir = std::env::temp_dir().join("sparkchar-report-test");
        std::fs::create_dir_all(&dir).unwrap();
        let lhs = dir.join("lhs.json");
        let rhs = dir.join("rhs.json");
        std::fs::write(&lhs, r#"{"winding":"1"}"#).unwrap();
        std::fs::write(&rhs, r#"{"winding":"1"}"#).unwrap();
        let report = cmd_product(&lhs, &rhs, ProductMode::All, true, 1e-8).unwrap();
        assert!(report.all_passed());
        assert_eq!(report.exact.as_deref(), Some("1/2 mod 1"));
        let text = report.render_text();
        assert!(text.contains("exact: 1/2 mod 1"));
    }

    #[test]
    fn parse_errors_have_exit_code_two() {
        let missing = Path::new("/nonexistent/spark.json");
        let err = cmd_product(missing, missing, ProductMode::Closed, false, 1e-8).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_PARSE);
    }
}
