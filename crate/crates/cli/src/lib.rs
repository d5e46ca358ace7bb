//! Command-line front end for the intersecting-set analyses: build the
//! named constructions, run EKR checks on them or on user-supplied
//! permutation groups, and replay the full battery of desk-scale
//! claims as a pass/fail manifest.
//!
//! All output is deterministic: identical inputs and configuration
//! produce byte-identical output regardless of worker count.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use ekr_core::action::Action;
use ekr_core::analysis::{
    self, is_intersecting_subgroup, max_intersecting, Method,
    SharplyTransitiveOutcome, TriVerdict,
};
use ekr_core::constructions::{
    build_agl_example, build_asc, build_nobo, build_pglexam_transversal, build_psl2_action,
    build_table1, wreath_product, ConstructionResult,
};
use ekr_core::psl2::Psl2Family;
use ekr_core::ratio::Ratio;
use ekr_core::{Error as CoreError, Permutation};

pub mod actions;
pub mod verify;

/// Version tag carried by every machine-readable document.
pub const SCHEMA: &str = "ekr/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Csv,
    Table,
}

impl FromStr for OutputFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "table" => Ok(OutputFormat::Table),
            other => Err(format!("unknown format {other:?} (json | csv | table)")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    /// Group enumeration cap (elements).
    pub cap: usize,
    /// Clique-search vertex cap.
    pub clique_cap: usize,
    /// Limit on enumerated maximum sets in strict sweeps.
    pub enum_limit: usize,
    /// Worker threads for the verify manifest.
    pub workers: usize,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            cap: 2_000_000,
            clique_cap: 2500,
            enum_limit: 10_000,
            workers: 1,
            format: OutputFormat::Json,
        }
    }
}

/// CLI-level failure, carrying the documented exit code.
#[derive(Clone, Debug)]
pub enum CliError {
    /// Bad parameters or unparseable input → exit 2.
    Invalid(String),
    /// A configured cap was exceeded → exit 3.
    Cap(String),
    /// A requested check could not be completed under the caps → exit 4.
    NotComputed(String),
    /// Verification mismatch → exit 1.
    VerifyFailed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::VerifyFailed(_) => 1,
            CliError::Invalid(_) => 2,
            CliError::Cap(_) => 3,
            CliError::NotComputed(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Invalid(m)
            | CliError::Cap(m)
            | CliError::NotComputed(m)
            | CliError::VerifyFailed(m) => m,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::EnumerationCap { .. }
            | CoreError::PointCap { .. }
            | CoreError::CliqueCap { .. }
            | CoreError::DegreeTooLarge(_) => CliError::Cap(format!("{e}")),
            other => CliError::Invalid(format!("{other}")),
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct RatioDoc {
    pub num: u64,
    pub den: u64,
}

impl From<Ratio> for RatioDoc {
    fn from(r: Ratio) -> Self {
        RatioDoc {
            num: r.numer(),
            den: r.denom(),
        }
    }
}

impl RatioDoc {
    fn render(&self) -> String {
        if self.den == 1 {
            format!("{}", self.num)
        } else {
            format!("{}/{}", self.num, self.den)
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SubgroupDoc {
    pub order: usize,
    /// Present for genuine subgroups realized as permutations; absent
    /// for plain sets (transversals) and structural-only builds.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub intersecting: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructionDoc {
    pub schema: &'static str,
    pub kind: &'static str,
    pub name: String,
    pub degree: usize,
    pub group_order: u64,
    pub metrics: BTreeMap<String, RatioDoc>,
    pub subgroups: BTreeMap<String, SubgroupDoc>,
    /// True when the ambient group is represented only through its
    /// coset table (no enumerated permutation action).
    pub structural: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub psl_restriction: Option<Box<ConstructionDoc>>,
}

impl ConstructionDoc {
    pub fn from_result(r: &ConstructionResult) -> ConstructionDoc {
        let mut subgroups = BTreeMap::new();
        for (role, elements) in &r.subgroups {
            let intersecting = if role == "C" {
                None
            } else {
                Some(is_intersecting_subgroup(elements))
            };
            subgroups.insert(
                role.clone(),
                SubgroupDoc {
                    order: elements.len(),
                    intersecting,
                },
            );
        }
        if let Some(s) = &r.structural {
            for (role, elements) in &s.subgroups {
                subgroups.insert(
                    role.clone(),
                    SubgroupDoc {
                        order: elements.len(),
                        intersecting: None,
                    },
                );
            }
        }
        ConstructionDoc {
            schema: SCHEMA,
            kind: "construction",
            name: r.name.clone(),
            degree: r.degree,
            group_order: r.group_order,
            metrics: r.metrics.iter().map(|(k, &v)| (k.clone(), v.into())).collect(),
            subgroups,
            structural: r.structural.is_some(),
            psl_restriction: None,
        }
    }

    /// Flat key/value rows for the csv and table formats.
    fn rows(&self) -> Vec<(String, String)> {
        let mut rows = vec![
            ("name".into(), self.name.clone()),
            ("degree".into(), self.degree.to_string()),
            ("group_order".into(), self.group_order.to_string()),
            ("structural".into(), self.structural.to_string()),
        ];
        for (k, v) in &self.metrics {
            rows.push((format!("metric.{k}"), v.render()));
        }
        for (role, s) in &self.subgroups {
            rows.push((format!("subgroup.{role}.order"), s.order.to_string()));
            if let Some(i) = s.intersecting {
                rows.push((format!("subgroup.{role}.intersecting"), i.to_string()));
            }
        }
        if let Some(psl) = &self.psl_restriction {
            for (k, v) in psl.rows() {
                rows.push((format!("psl.{k}"), v));
            }
        }
        rows
    }

    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                serde_json::to_string_pretty(self).expect("serialization cannot fail")
            }
            OutputFormat::Csv => {
                let mut out = String::from("key,value\n");
                for (k, v) in self.rows() {
                    let _ = writeln!(out, "{k},{v}");
                }
                out
            }
            OutputFormat::Table => {
                let rows = self.rows();
                let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                let mut out = String::new();
                for (k, v) in rows {
                    let _ = writeln!(out, "{k:width$}  {v}");
                }
                out
            }
        }
    }
}

/// Parameter bag for the construction dispatch; each construction
/// reads the flags it needs and rejects missing ones.
#[derive(Clone, Debug, Default)]
pub struct ConstructParams {
    pub p: Option<u64>,
    pub d: Option<usize>,
    pub f: Option<usize>,
    pub row: Option<usize>,
    pub q: Option<u64>,
    pub family: Option<String>,
    pub n: Option<usize>,
    pub ell: Option<usize>,
}

fn need<T: Copy>(v: Option<T>, flag: &str, id: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Invalid(format!("construction {id} requires --{flag}")))
}

/// A built construction: the main result plus, for the transversal
/// example at q = 3 mod 4, the PSL restriction.
#[derive(Debug)]
pub struct Built {
    pub main: ConstructionResult,
    pub restriction: Option<ConstructionResult>,
}

pub const CONSTRUCTION_IDS: [&str; 7] = [
    "nobo",
    "agl-example",
    "wreath",
    "asc",
    "table1",
    "psl2",
    "pglexam",
];

pub fn build_construction(
    id: &str,
    params: &ConstructParams,
    cfg: &RunConfig,
) -> Result<Built, CliError> {
    let single = |r: ConstructionResult| Built {
        main: r,
        restriction: None,
    };
    match id {
        "nobo" => Ok(single(build_nobo(
            need(params.p, "p", id)?,
            need(params.d, "d", id)?,
            cfg.cap,
        )?)),
        "agl-example" => Ok(single(build_agl_example(
            need(params.p, "p", id)?,
            need(params.d, "d", id)?,
            cfg.cap,
        )?)),
        "asc" => Ok(single(build_asc(need(params.f, "f", id)?, cfg.cap)?)),
        "table1" => Ok(single(build_table1(need(params.row, "row", id)?, cfg.cap)?)),
        "psl2" => {
            let p = need(params.p, "p", id)?;
            let family_text = params
                .family
                .as_deref()
                .ok_or_else(|| CliError::Invalid("construction psl2 requires --family".into()))?;
            let family = Psl2Family::parse(family_text).ok_or_else(|| {
                CliError::Invalid(format!(
                    "unknown family {family_text:?} (borel | d-minus | d-plus | a4 | s4 | a5)"
                ))
            })?;
            Ok(single(build_psl2_action(p, family, cfg.cap)?))
        }
        "pglexam" => {
            let (main, restriction) =
                build_pglexam_transversal(need(params.q, "q", id)?, cfg.cap)?;
            Ok(Built { main, restriction })
        }
        "wreath" => {
            let n = need(params.n, "n", id)?;
            let ell = need(params.ell, "ell", id)?;
            let base = actions::symmetric_action(n, cfg.cap)?;
            let wreath = wreath_product(&base, ell, cfg.cap)?;
            let degree = wreath.action.degree();
            let order = wreath.action.order() as u64;
            let mut metrics = BTreeMap::new();
            metrics.insert("omega".to_string(), Ratio::from_integer(degree as u64));
            Ok(single(ConstructionResult {
                name: format!("wreath-s{n}-l{ell}"),
                degree,
                group_order: order,
                action: Some(wreath.action),
                subgroups: BTreeMap::new(),
                metrics,
                structural: None,
            }))
        }
        other => Err(CliError::Invalid(format!(
            "unknown construction {other:?} (expected one of {})",
            CONSTRUCTION_IDS.join(", ")
        ))),
    }
}

pub fn construction_doc(built: &Built) -> ConstructionDoc {
    let mut doc = ConstructionDoc::from_result(&built.main);
    if let Some(r) = &built.restriction {
        doc.psl_restriction = Some(Box::new(ConstructionDoc::from_result(r)));
    }
    doc
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Check {
    Max,
    Strict,
    Sharply,
    Frobenius,
    PrimePower,
}

impl FromStr for Check {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "max" => Ok(Check::Max),
            "strict" => Ok(Check::Strict),
            "sharply" => Ok(Check::Sharply),
            "frobenius" => Ok(Check::Frobenius),
            "prime-power" => Ok(Check::PrimePower),
            other => Err(format!(
                "unknown check {other:?} (max | strict | sharply | frobenius | prime-power)"
            )),
        }
    }
}

pub fn parse_checks(text: &str) -> Result<BTreeSet<Check>, CliError> {
    text.split(',')
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<Check>().map_err(CliError::Invalid))
        .collect()
}

/// The analysis report document (external interface, schema ekr/1).
#[derive(Clone, Debug, Serialize)]
pub struct ReportDoc {
    pub schema: &'static str,
    pub kind: &'static str,
    pub name: String,
    pub degree: usize,
    pub group_order: usize,
    pub stabilizer_order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_intersecting: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rho: Option<RatioDoc>,
    pub verdicts: BTreeMap<String, String>,
    pub witness: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    pub bound_checks: BTreeMap<String, bool>,
}

/// Run the requested checks on a transitive action. The bool is the
/// "not computed" flag: true when some verdict stopped at a cap.
pub fn analyze_action(
    action: &Action,
    name: &str,
    checks: &BTreeSet<Check>,
    cfg: &RunConfig,
) -> Result<(ReportDoc, bool), CliError> {
    if checks.is_empty() {
        return Err(CliError::Invalid("no checks requested".into()));
    }
    let mut doc = ReportDoc {
        schema: SCHEMA,
        kind: "ekr-report",
        name: name.to_string(),
        degree: action.degree(),
        group_order: action.order(),
        stabilizer_order: action.stabilizer_order(0)?,
        max_intersecting: None,
        rho: None,
        verdicts: BTreeMap::new(),
        witness: Vec::new(),
        method: None,
        bound_checks: BTreeMap::new(),
    };
    let mut not_computed = false;

    if checks.contains(&Check::Max) || checks.contains(&Check::Strict) {
        let strict_limit = if checks.contains(&Check::Strict) {
            cfg.enum_limit
        } else {
            1
        };
        let report = max_intersecting(action, cfg.clique_cap, strict_limit)?;
        doc.max_intersecting = Some(report.max_intersecting);
        doc.rho = Some(report.rho.into());
        doc.witness = analysis::witness_strings(&report.witness);
        doc.method = Some(report.method.as_str().to_string());
        doc.verdicts.insert(
            "ekr".into(),
            if report.ekr { "holds" } else { "fails" }.into(),
        );
        if checks.contains(&Check::Strict) {
            doc.verdicts
                .insert("strict-ekr".into(), report.strict_ekr.as_str().into());
            if report.strict_ekr == TriVerdict::NotComputed {
                not_computed = true;
            }
        }
        doc.bound_checks
            .insert("rho_at_least_one".into(), report.rho_at_least_one);
        doc.bound_checks
            .insert("rms_bound_ok".into(), report.rms_bound_ok);
    }

    if checks.contains(&Check::Sharply) {
        let verdict = match analysis::find_sharply_transitive(action, cfg.cap)? {
            SharplyTransitiveOutcome::Found(_) => "holds",
            SharplyTransitiveOutcome::NoneExists => "fails",
            SharplyTransitiveOutcome::BudgetExhausted => {
                not_computed = true;
                "not-computed"
            }
        };
        doc.verdicts
            .insert("sharply-transitive".into(), verdict.into());
    }

    if checks.contains(&Check::Frobenius) {
        let info = ekr_core::action::is_frobenius(action)?;
        doc.verdicts.insert(
            "frobenius".into(),
            if info.is_frobenius && info.kernel_closed {
                "holds"
            } else {
                "fails"
            }
            .into(),
        );
    }

    if checks.contains(&Check::PrimePower) {
        let report = analysis::prime_power_ekr(action, cfg.cap)?;
        doc.verdicts.insert("prime-power-ekr".into(), "holds".into());
        if doc.max_intersecting.is_none() {
            doc.max_intersecting = Some(report.max_intersecting);
            doc.rho = Some(report.rho.into());
            doc.witness = analysis::witness_strings(&report.witness);
            doc.method = Some(Method::SharplyTransitiveCertificate.as_str().to_string());
            doc.bound_checks
                .insert("rho_at_least_one".into(), report.rho_at_least_one);
            doc.bound_checks
                .insert("rms_bound_ok".into(), report.rms_bound_ok);
        }
    }

    Ok((doc, not_computed))
}

/// Parse the versioned group-description document:
/// `{"schema": "ekr/1", "kind": "group", "degree": n,
///   "generators": ["(0 1 2)", ...]}`.
pub fn parse_group_description(text: &str, cap: usize) -> Result<Action, CliError> {
    #[derive(serde::Deserialize)]
    struct GroupDoc {
        schema: String,
        kind: String,
        degree: usize,
        generators: Vec<String>,
    }
    let doc: GroupDoc = serde_json::from_str(text)
        .map_err(|e| CliError::Invalid(format!("group description parse error: {e}")))?;
    if doc.schema != SCHEMA {
        return Err(CliError::Invalid(format!(
            "unsupported schema {:?} (expected {SCHEMA:?})",
            doc.schema
        )));
    }
    if doc.kind != "group" {
        return Err(CliError::Invalid(format!(
            "unsupported kind {:?} (expected \"group\")",
            doc.kind
        )));
    }
    let gens = doc
        .generators
        .iter()
        .map(|t| Permutation::parse_cycles(t, doc.degree))
        .collect::<Result<Vec<_>, _>>()
        .map_err(CliError::from)?;
    Ok(Action::from_perm_generators(doc.degree, gens, cap)?)
}

/// Extract the analyzable action from a built construction.
pub fn action_of(built: &Built) -> Result<&Action, CliError> {
    built.main.action.as_ref().ok_or_else(|| {
        CliError::Invalid(format!(
            "construction {} is structural-only; its ambient group is not enumerated",
            built.main.name
        ))
    })
}

/// Sorted verdict check: true if any verdict string is "not-computed".
pub fn any_not_computed(doc: &ReportDoc) -> bool {
    doc.verdicts.values().any(|v| v == "not-computed")
}

pub fn render_report(doc: &ReportDoc, format: OutputFormat) -> Result<String, CliError> {
    match format {
        OutputFormat::Json => {
            Ok(serde_json::to_string_pretty(doc).expect("serialization cannot fail"))
        }
        // Structured verdicts are JSON-only by design; csv and table
        // are reserved for flat metric output.
        OutputFormat::Csv | OutputFormat::Table => Err(CliError::Invalid(
            "analysis reports are JSON-only; use --format json".into(),
        )),
    }
}

/// Helper for claims and tests: exact maximum and rho for an action.
pub fn exact_max(action: &Action, cfg: &RunConfig) -> Result<(usize, Ratio), CliError> {
    let report = max_intersecting(action, cfg.clique_cap, 1)?;
    Ok((report.max_intersecting, report.rho))
}

pub use verify::{run_manifest, ClaimRecord, ManifestDoc};

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construct_dispatch_and_doc() {
        let cfg = RunConfig::default();
        let params = ConstructParams {
            p: Some(5),
            d: Some(1),
            ..Default::default()
        };
        let built = build_construction("nobo", &params, &cfg).unwrap();
        let doc = construction_doc(&built);
        assert_eq!(doc.degree, 30);
        assert_eq!(doc.group_order, 600);
        assert_eq!(doc.subgroups["S"].order, 100);
        assert_eq!(doc.subgroups["S"].intersecting, Some(true));
        let json = doc.render(OutputFormat::Json);
        assert!(json.contains("\"schema\": \"ekr/1\""));
        // Determinism: repeated rendering is byte-identical.
        assert_eq!(json, construction_doc(&built).render(OutputFormat::Json));
    }

    #[test]
    fn construct_rejects_unknown_and_missing() {
        let cfg = RunConfig::default();
        let err = build_construction("nope", &ConstructParams::default(), &cfg).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let err = build_construction("nobo", &ConstructParams::default(), &cfg).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }

    #[test]
    fn cap_errors_map_to_exit_3() {
        let cfg = RunConfig {
            cap: 10,
            ..RunConfig::default()
        };
        let params = ConstructParams {
            p: Some(5),
            d: Some(1),
            ..Default::default()
        };
        let err = build_construction("nobo", &params, &cfg).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn group_description_round_trip() {
        let text = r#"{"schema":"ekr/1","kind":"group","degree":3,
                       "generators":["(0 1 2)","(0 1)"]}"#;
        let action = parse_group_description(text, 1000).unwrap();
        assert_eq!(action.order(), 6);
        let bad = parse_group_description("{\"schema\":\"ekr/2\"}", 1000).unwrap_err();
        assert_eq!(bad.exit_code(), 2);
    }

    #[test]
    fn analyze_sym3() {
        let cfg = RunConfig::default();
        let action = actions::symmetric_action(3, cfg.cap).unwrap();
        let checks: BTreeSet<Check> = [Check::Max, Check::Strict].into_iter().collect();
        let (doc, not_computed) = analyze_action(&action, "sym3", &checks, &cfg).unwrap();
        assert!(!not_computed);
        assert_eq!(doc.max_intersecting, Some(2));
        assert_eq!(doc.verdicts["ekr"], "holds");
        assert_eq!(doc.verdicts["strict-ekr"], "holds");
        assert!(doc.bound_checks["rho_at_least_one"]);
    }
}
