//! Built-in examples with the outcome recorded in the literature (or derived
//! by hand), run against the engines and compared.
//!
//! A disagreement with a recorded claim is reported as `FLAGGED` and never
//! hidden; `FAILED` is reserved for violated internal invariants (for
//! instance two engines disagreeing on the same question).

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{parse_polynomial, Rational};
use crate::budget::Budget;
use crate::criteria::{
    divisorial_freg_test, fpure_test_ci, fpure_test_general, strong_freg_test_ci,
    validate_implications, CriteriaError, Mode, PairSpec, Verdict, VerdictKind,
};
use crate::discrepancy::{graded_discrepancy, graph_report, DualGraph, FClassPrediction, GraphType, LcClass};
use crate::thresholds::{fpt_report, multiplicity_bounds};
use crate::toric::{toric_fpure_verify, Cone};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Basis {
    /// Stated in the literature.
    Published,
    /// Worked out by hand from the definitions.
    Derived,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum Status {
    /// The computation decides the question and matches the claim.
    Agree,
    /// Not decided within the computed levels, and nothing contradicts the
    /// claim.
    Consistent,
    /// The computation contradicts the claim.
    Flagged,
    /// A budget stopped the computation.
    Budget,
    /// An internal invariant failed.
    Failed,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Agree => "AGREE",
            Status::Consistent => "CONSISTENT",
            Status::Flagged => "FLAGGED",
            Status::Budget => "BUDGET",
            Status::Failed => "FAILED",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub computed: String,
    pub status: Status,
    pub notes: Vec<String>,
    pub detail: Value,
}

type Runner = Arc<dyn Fn(u32, &Budget) -> Result<Outcome, String> + Send + Sync>;

#[derive(Clone)]
pub struct CatalogEntry {
    pub id: String,
    pub description: String,
    pub claim: String,
    pub basis: Basis,
    run: Runner,
}

impl fmt::Debug for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CatalogEntry")
            .field("id", &self.id)
            .field("claim", &self.claim)
            .finish()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogRow {
    pub id: String,
    pub description: String,
    pub claim: String,
    pub basis: Basis,
    pub computed: String,
    pub status: Status,
    pub notes: Vec<String>,
    pub detail: Value,
}

impl CatalogEntry {
    pub fn run(&self, e_max: u32, budget: &Budget) -> CatalogRow {
        let outcome = (self.run)(e_max, budget).unwrap_or_else(|err| Outcome {
            computed: format!("error: {err}"),
            status: if err.contains("budget") {
                Status::Budget
            } else {
                Status::Failed
            },
            notes: Vec::new(),
            detail: Value::Null,
        });
        CatalogRow {
            id: self.id.clone(),
            description: self.description.clone(),
            claim: self.claim.clone(),
            basis: self.basis,
            computed: outcome.computed,
            status: outcome.status,
            notes: outcome.notes,
            detail: outcome.detail,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogReport {
    pub e_max: u32,
    pub rows: Vec<CatalogRow>,
    pub counts: BTreeMap<String, usize>,
}

impl CatalogReport {
    pub fn internal_failure(&self) -> bool {
        self.rows.iter().any(|r| r.status == Status::Failed)
    }

    pub fn flagged(&self) -> Vec<&CatalogRow> {
        self.rows.iter().filter(|r| r.status == Status::Flagged).collect()
    }

    pub fn row(&self, id: &str) -> Option<&CatalogRow> {
        self.rows.iter().find(|r| r.id == id)
    }

    pub fn to_table(&self) -> String {
        let w_id = self.rows.iter().map(|r| r.id.len()).max().unwrap_or(2).max(2);
        let w_st = 10;
        let mut out = format!("{:<w_id$}  {:<w_st$}  {}\n", "id", "status", "computed / claim");
        for r in &self.rows {
            out.push_str(&format!(
                "{:<w_id$}  {:<w_st$}  {}\n{:<w_id$}  {:<w_st$}  claim ({}): {}\n",
                r.id,
                r.status.to_string(),
                r.computed,
                "",
                "",
                match r.basis {
                    Basis::Published => "published",
                    Basis::Derived => "derived",
                },
                r.claim
            ));
            for n in &r.notes {
                out.push_str(&format!("{:<w_id$}  {:<w_st$}  note: {n}\n", "", ""));
            }
        }
        let counts: Vec<String> = self.counts.iter().map(|(k, v)| format!("{k} {v}")).collect();
        out.push_str(&format!("summary: {}\n", counts.join(", ")));
        out
    }
}

/// Runs the entries whose id contains `filter`, in parallel on `jobs`
/// threads (all cores when `None`); rows come back sorted by id.
pub fn run_catalog(
    entries: &[CatalogEntry],
    filter: Option<&str>,
    e_max: u32,
    budget: &Budget,
    jobs: Option<usize>,
) -> CatalogReport {
    let selected: Vec<&CatalogEntry> = entries
        .iter()
        .filter(|e| filter.is_none_or(|f| e.id.contains(f)))
        .collect();
    let work = || -> Vec<CatalogRow> { selected.par_iter().map(|e| e.run(e_max, budget)).collect() };
    let mut rows = match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map(|pool| pool.install(work))
            .unwrap_or_else(|_| work()),
        None => work(),
    };
    rows.sort_by(|a, b| a.id.cmp(&b.id));
    let mut counts = BTreeMap::new();
    for r in &rows {
        *counts.entry(r.status.to_string()).or_insert(0) += 1;
    }
    CatalogReport {
        e_max,
        rows,
        counts,
    }
}

fn entry(
    id: impl Into<String>,
    description: impl Into<String>,
    claim: impl Into<String>,
    basis: Basis,
    run: impl Fn(u32, &Budget) -> Result<Outcome, String> + Send + Sync + 'static,
) -> CatalogEntry {
    CatalogEntry {
        id: id.into(),
        description: description.into(),
        claim: claim.into(),
        basis,
        run: Arc::new(run),
    }
}

fn err(e: CriteriaError) -> String {
    if e.is_budget() {
        format!("budget exceeded: {e}")
    } else {
        e.to_string()
    }
}

/// Status of a test whose claim is "the property holds" (`expect = true`)
/// or "fails" (`false`).
fn judge(v: &Verdict, expect: bool) -> Status {
    if v.budget_exceeded.is_some() && !v.verdict.is_refuted() {
        return Status::Budget;
    }
    match (&v.verdict, expect) {
        (VerdictKind::Refuted { .. }, false) => Status::Agree,
        (VerdictKind::Refuted { .. }, true) => Status::Flagged,
        (VerdictKind::CertifiedPositive { .. }, true) => Status::Agree,
        (VerdictKind::CertifiedPositive { .. }, false) => Status::Flagged,
        // a finite level can only refute F-purity, never prove it
        (VerdictKind::HoldsUpToLevel { .. }, true) => Status::Agree,
        (VerdictKind::HoldsUpToLevel { .. }, false) => Status::Consistent,
        (VerdictKind::Inconclusive { .. }, _) => Status::Consistent,
    }
}

fn verdict_detail(v: &Verdict) -> Value {
    serde_json::to_value(v).unwrap_or(Value::Null)
}

struct PairData {
    p: u64,
    vars: &'static [&'static str],
    ci: &'static [&'static str],
    g: Option<&'static str>,
    t: &'static str,
}

impl PairData {
    fn pair(&self, mode: Mode) -> Result<PairSpec, String> {
        PairSpec::parse(self.p, self.vars, self.ci, self.g.map(|g| (g, self.t)), mode)
            .map_err(err)
    }
}

/// F-purity entry; for pairs with a boundary the implications between
/// modes and coefficients are validated, and principal ideals are re-run
/// through the general-ideal engine.
fn fpure_entry(
    id: &str,
    description: &str,
    claim: &str,
    basis: Basis,
    data: PairData,
    mode: Mode,
    expect: bool,
) -> CatalogEntry {
    entry(id, description, claim, basis, move |e_max, budget| {
        let pair = data.pair(mode)?;
        let v = fpure_test_ci(&pair, e_max, budget).map_err(err)?;
        let mut status = judge(&v, expect);
        let mut notes = v.notes.clone();

        if pair.boundary().is_some() {
            let weak = if mode == Mode::Weak {
                v.clone()
            } else {
                fpure_test_ci(&pair.with_mode(Mode::Weak), e_max, budget).map_err(err)?
            };
            let strong =
                fpure_test_ci(&pair.with_mode(Mode::Strong), e_max, budget).map_err(err)?;
            let half_t = &pair.t() / &Rational::from_int(2);
            let half =
                fpure_test_ci(&pair.with_mode(Mode::Weak).with_t(half_t.clone()).map_err(err)?, e_max, budget)
                    .map_err(err)?;
            let report = validate_implications(&pair, &weak, &strong, &[(half_t, half)]);
            for violation in &report.violations {
                status = Status::Failed;
                notes.push(format!("invariant violated: {}", violation.detail));
            }
        }

        if pair.ci().len() == 1 {
            let general = fpure_test_general(&pair.defining_ideal(), pair.boundary(), mode, e_max, budget);
            match general {
                Ok(g) => {
                    let same = (1..=e_max).all(|e| g.passed_at(e) == v.passed_at(e));
                    if !same {
                        status = Status::Failed;
                        notes.push(format!("general-ideal engine disagrees: {}", g.verdict));
                    }
                }
                Err(e) if e.is_budget() => notes.push(format!("general-ideal cross-check skipped: {e}")),
                Err(e) => return Err(e.to_string()),
            }
        }
        Ok(Outcome {
            computed: v.to_string(),
            status,
            notes,
            detail: verdict_detail(&v),
        })
    })
}

fn sfr_entry(
    id: &str,
    description: &str,
    claim: &str,
    basis: Basis,
    data: PairData,
    witness: Option<&'static str>,
    expect: bool,
) -> CatalogEntry {
    entry(id, description, claim, basis, move |e_max, budget| {
        let pair = data.pair(Mode::Weak)?;
        let c = match witness {
            Some(w) => Some(parse_polynomial(w, pair.ring()).map_err(|e| e.to_string())?),
            None => None,
        };
        let v = strong_freg_test_ci(&pair, e_max, c.as_ref(), budget).map_err(err)?;
        let mut status = judge(&v, expect);
        let mut notes = v.notes.clone();
        if let VerdictKind::CertifiedPositive { level, .. } = v.verdict {
            if v.passed_at(level) != Some(true) {
                status = Status::Failed;
                notes.push(format!("certified at level {level} without F-purity at that level"));
            }
        }
        Ok(Outcome {
            computed: v.to_string(),
            status,
            notes,
            detail: verdict_detail(&v),
        })
    })
}

fn divfr_entry(
    id: &str,
    description: &str,
    claim: &str,
    basis: Basis,
    data: PairData,
    expect: bool,
) -> CatalogEntry {
    entry(id, description, claim, basis, move |e_max, budget| {
        let pair = data.pair(Mode::Weak)?;
        let v = divisorial_freg_test(&pair, e_max, None, budget).map_err(err)?;
        let mut status = judge(&v, expect);
        let mut notes = v.notes.clone();
        // the same question asked directly of the quotient ring
        let mut ci = pair.ci().to_vec();
        ci.push(pair.boundary().expect("divisorial entries carry g").g.clone());
        let quotient = PairSpec::new(pair.ring(), ci, None, Mode::Weak).map_err(err)?;
        let direct = strong_freg_test_ci(&quotient, e_max, None, budget).map_err(err)?;
        if std::mem::discriminant(&direct.verdict) != std::mem::discriminant(&v.verdict) {
            status = Status::Failed;
            notes.push(format!("quotient ring computation gives {}", direct.verdict));
        }
        Ok(Outcome {
            computed: v.to_string(),
            status,
            notes,
            detail: verdict_detail(&v),
        })
    })
}

fn cusp_threshold_entry(p: u64) -> CatalogEntry {
    entry(
        format!("cusp-fpt-p{p:02}"),
        format!("threshold data of x^2 - y^3 over F_{p}"),
        "(k[[x,y]], t div(x^2 - y^3)) is F-pure iff t <= 5/6, the log canonical threshold",
        Basis::Published,
        move |e_max, budget| {
            let f = crate::algebra::poly_parse("x^2 - y^3", &["x", "y"], p).map_err(|e| e.to_string())?;
            let r = fpt_report(&f, e_max, budget).map_err(|e| e.to_string())?;
            let lct = Rational::new(5, 6);
            let (lower, _) = multiplicity_bounds(&f).map_err(|e| e.to_string())?;
            let mut notes = Vec::new();
            let mut status = if r.level_watermark >= lct && r.upper > lct {
                Status::Agree
            } else {
                notes.push(format!("t = 5/6 fails a computed level (watermark {})", r.level_watermark));
                Status::Flagged
            };
            if r.level_watermark < lower {
                status = Status::Failed;
                notes.push(format!("t = {lower} = 1/mult fails a computed level"));
            }
            let js: Vec<String> = r.nu.entries.iter().map(|x| format!("j{}={}", x.e, x.j)).collect();
            Ok(Outcome {
                computed: format!(
                    "{}; upper {}, watermark {}, estimate {}",
                    js.join(" "),
                    r.upper,
                    r.level_watermark,
                    r.estimate
                ),
                status,
                notes,
                detail: serde_json::to_value(&r).unwrap_or(Value::Null),
            })
        },
    )
}

fn graph_entry(
    id: &str,
    description: &str,
    claim: &str,
    graph: fn() -> DualGraph,
    p: u32,
    expect: FClassPrediction,
) -> CatalogEntry {
    entry(id, description, claim, Basis::Published, move |_, _| {
        let g = graph();
        let r = graph_report(&g, Some(p)).map_err(|e| e.to_string())?;
        let dv = &r.discrepancies;
        let min = dv.min();
        let minus_one = Rational::from_int(-1);
        let mut notes = Vec::new();
        // F-class of the type must match the log class of the discrepancies
        let consistent = match r.graph_type {
            Some(GraphType::A) => min > minus_one && dv.lc_class == LcClass::Plt,
            Some(GraphType::B) | Some(GraphType::C) => min == minus_one && dv.lc_class == LcClass::Lc,
            _ => true,
        };
        let mut status = if r.prediction == Some(expect) {
            Status::Agree
        } else {
            Status::Flagged
        };
        if !consistent {
            status = Status::Failed;
            notes.push("graph type and discrepancies disagree".into());
        }
        let a: Vec<String> = dv.a.iter().map(|x| x.to_string()).collect();
        Ok(Outcome {
            computed: format!(
                "a = ({}), {}, type {}, {}",
                a.join(", "),
                dv.lc_class,
                r.graph_type.map_or("-".into(), |t| t.to_string()),
                r.prediction.map_or("-".into(), |x| x.to_string())
            ),
            status,
            notes,
            detail: serde_json::to_value(&r).unwrap_or(Value::Null),
        })
    })
}

fn graded_entry(id: &str, description: &str, claim: &str, index: u64, b: i64, expect: Rational) -> CatalogEntry {
    entry(id, description, claim, Basis::Published, move |_, _| {
        let a = graded_discrepancy(index, b).map_err(|e| e.to_string())?;
        Ok(Outcome {
            computed: format!("a0 = {a}"),
            status: if a == expect { Status::Agree } else { Status::Flagged },
            notes: Vec::new(),
            detail: json!({ "index": index, "b": b, "a0": a }),
        })
    })
}

fn toric_entry(id: &str, description: &str, rays: &'static str, delta: &'static [usize], e: u32) -> CatalogEntry {
    entry(
        id,
        description,
        if delta.len() > 1 {
            "A(qK_A + (q-1)Δ) = K_A for Δ the sum of all toric boundary divisors"
        } else {
            "A(qK_A + (q-1)Δ) ⊆ K_A, with strict witnesses when Δ misses a divisor"
        },
        Basis::Published,
        move |_, _| {
            let cone = Cone::parse(rays).map_err(|e| e.to_string())?;
            let v = toric_fpure_verify(&cone, delta, 2, e, 8).map_err(|e| e.to_string())?;
            Ok(Outcome {
                computed: format!(
                    "q = {}: identity {}, containment {}, {} strict witnesses",
                    v.q,
                    v.identity_holds,
                    v.containment_holds,
                    v.strict_witnesses.len()
                ),
                status: if v.verified() { Status::Agree } else { Status::Failed },
                notes: Vec::new(),
                detail: serde_json::to_value(&v).unwrap_or(Value::Null),
            })
        },
    )
}

const XY: &[&str] = &["x", "y"];
const XYZ: &[&str] = &["x", "y", "z"];
const XYZW: &[&str] = &["x", "y", "z", "w"];

/// All built-in entries, sorted by id.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut out = Vec::new();

    // regular ring with a normal crossing boundary
    let reg = |g: &'static str, t: &'static str, p: u64, vars: &'static [&'static str]| PairData {
        p,
        vars,
        ci: &[],
        g: Some(g),
        t,
    };
    let nc_claim_fp = "regular ring with t div(x_1...x_i): F-pure for t <= 1";
    let nc_claim_sfr = "regular ring with t div(x_1...x_i): strongly F-regular for t < 1";
    out.push(fpure_entry("regular-xy-t1-p5", "F_5[x,y], div(xy)", nc_claim_fp, Basis::Published, reg("x*y", "1", 5, XY), Mode::Weak, true));
    out.push(fpure_entry("regular-xyz-t1-p3", "F_3[x,y,z], div(xyz)", nc_claim_fp, Basis::Published, reg("x*y*z", "1", 3, XYZ), Mode::Weak, true));
    out.push(fpure_entry(
        "regular-xy-t3/2-p5",
        "F_5[x,y], 3/2 div(xy)",
        "a boundary coefficient above 1 is never F-pure",
        Basis::Derived,
        reg("x*y", "3/2", 5, XY),
        Mode::Weak,
        false,
    ));
    out.push(sfr_entry("regular-xy-t1/2-p5-sfr", "F_5[x,y], 1/2 div(xy)", nc_claim_sfr, Basis::Published, reg("x*y", "1/2", 5, XY), None, true));
    out.push(sfr_entry("regular-x-t1/2-p5-sfr", "F_5[x,y], 1/2 div(x), witness 1", nc_claim_sfr, Basis::Published, reg("x", "1/2", 5, XY), Some("1"), true));
    out.push(divfr_entry(
        "regular-x-p5-divfr",
        "F_5[x,y], div(x)",
        "F_5[x,y]/(x) is regular, so (A, div x) is divisorially F-regular",
        Basis::Derived,
        reg("x", "1", 5, XY),
        true,
    ));
    out.push(divfr_entry(
        "regular-xy-p5-divfr",
        "F_5[x,y], div(xy)",
        "F_5[x,y]/(xy) is not a domain, so (A, div xy) is not divisorially F-regular",
        Basis::Derived,
        reg("x*y", "1", 5, XY),
        false,
    ));

    // quadric cone with boundary div(z)
    for p in [3u64, 5, 7] {
        let cone = |t: &'static str| PairData {
            p,
            vars: XYZ,
            ci: &["x*y - z^2"],
            g: Some("z"),
            t,
        };
        let claim_fp = "k[[X,Y,Z]]/(XY - Z^2) with t div(z) is F-pure for t <= 1";
        for (t, tag) in [("1/2", "t1/2"), ("1", "t1")] {
            out.push(fpure_entry(
                &format!("cone-{tag}-p{p}"),
                &format!("F_{p}[x,y,z]/(xy - z^2), {t} div(z)"),
                claim_fp,
                Basis::Published,
                cone(t),
                Mode::Weak,
                true,
            ));
        }
        out.push(fpure_entry(
            &format!("cone-t3/2-p{p}"),
            &format!("F_{p}[x,y,z]/(xy - z^2), 3/2 div(z)"),
            "a boundary coefficient above 1 is never F-pure",
            Basis::Derived,
            cone("3/2"),
            Mode::Weak,
            false,
        ));
        out.push(sfr_entry(
            &format!("cone-t1/2-p{p}-sfr"),
            &format!("F_{p}[x,y,z]/(xy - z^2), 1/2 div(z)"),
            "k[[X,Y,Z]]/(XY - Z^2) with t div(z) is strongly F-regular for t < 1",
            Basis::Published,
            cone("1/2"),
            None,
            true,
        ));
        out.push(sfr_entry(
            &format!("cone-t1-p{p}-sfr"),
            &format!("F_{p}[x,y,z]/(xy - z^2), div(z)"),
            "a pair with nonzero round-down is not strongly F-regular",
            Basis::Published,
            cone("1"),
            None,
            false,
        ));
    }
    out.push(sfr_entry(
        "cone-p5-sfr-witness-x",
        "F_5[x,y,z]/(xy - z^2), no boundary, witness x",
        "x f^4 keeps the term -4x^4y^3z^2 outside m^[5]",
        Basis::Derived,
        PairData {
            p: 5,
            vars: XYZ,
            ci: &["x*y - z^2"],
            g: None,
            t: "0",
        },
        Some("x"),
        true,
    ));
    out.push(divfr_entry(
        "cone-p5-divfr",
        "F_5[x,y,z]/(xy - z^2), div(z)",
        "the quotient k[x,y]/(xy) is not a domain, so the pair is not divisorially F-regular",
        Basis::Derived,
        PairData {
            p: 5,
            vars: XYZ,
            ci: &["x*y - z^2"],
            g: Some("z"),
            t: "1",
        },
        false,
    ));

    // cusp
    for p in [5u64, 7, 13] {
        let cusp = |t: &'static str| PairData {
            p,
            vars: XY,
            ci: &[],
            g: Some("x^2 - y^3"),
            t,
        };
        out.push(fpure_entry(
            &format!("cusp-t5/6-p{p:02}"),
            &format!("F_{p}[x,y], 5/6 div(x^2 - y^3)"),
            "(k[[x,y]], 5/6 div(x^2 - y^3)) is F-pure in any characteristic",
            Basis::Published,
            cusp("5/6"),
            Mode::Weak,
            true,
        ));
        out.push(fpure_entry(
            &format!("cusp-t5/6-p{p:02}-strong"),
            &format!("F_{p}[x,y], 5/6 div(x^2 - y^3), strong mode"),
            "(k[[x,y]], 5/6 div(x^2 - y^3)) is strongly F-pure iff p = 1 mod 3",
            Basis::Published,
            cusp("5/6"),
            Mode::Strong,
            p % 3 == 1,
        ));
        out.push(fpure_entry(
            &format!("cusp-t11/12-p{p:02}"),
            &format!("F_{p}[x,y], 11/12 div(x^2 - y^3)"),
            "(k[[x,y]], t div(x^2 - y^3)) is F-pure iff t <= 5/6",
            Basis::Published,
            cusp("11/12"),
            Mode::Weak,
            false,
        ));
        out.push(sfr_entry(
            &format!("cusp-t5/6-p{p:02}-sfr"),
            &format!("F_{p}[x,y], 5/6 div(x^2 - y^3)"),
            "(k[[x,y]], 5/6 div(x^2 - y^3)) is not strongly F-regular",
            Basis::Published,
            cusp("5/6"),
            None,
            false,
        ));
        out.push(cusp_threshold_entry(p));
    }

    // Fermat quartic
    for p in [3u64, 5, 7, 11, 13] {
        out.push(fpure_entry(
            &format!("quartic-p{p:02}"),
            &format!("F_{p}[x,y,z,w]/(x^4 + y^4 + z^4 + w^4)"),
            "the Fermat quartic cone is F-pure iff p = 1 mod 4",
            Basis::Published,
            PairData {
                p,
                vars: XYZW,
                ci: &["x^4+y^4+z^4+w^4"],
                g: None,
                t: "0",
            },
            Mode::Weak,
            p % 4 == 1,
        ));
    }

    // graded discrepancies
    out.push(graded_entry(
        "graded-veronese-n2-r3",
        "third Veronese of k[X1,X2], index 3, b = -2",
        "a0 = -1 + n/r",
        3,
        -2,
        Rational::new(-1, 3),
    ));
    out.push(graded_entry(
        "graded-quartic-cone",
        "cone over the Fermat quartic surface, index 1, b = 0",
        "a0 = -1",
        1,
        0,
        Rational::from_int(-1),
    ));
    for d in 2..=4i64 {
        out.push(graded_entry(
            &format!("graded-smooth-d{d}"),
            &format!("blowup of a smooth point in dimension {d}"),
            "a0 = d - 1",
            1,
            -d,
            Rational::from_int(d - 1),
        ));
    }

    // dual graph templates
    out.push(graph_entry(
        "graph-a-chain3",
        "(a): boundary - (-2) - (-2) - (-2)",
        "type (a) is divisorially F-regular",
        || DualGraph::chain(&[2, 2, 2], &[1, 0, 0]).expect("valid"),
        5,
        FClassPrediction::DivisoriallyFRegular,
    ));
    out.push(graph_entry(
        "graph-b-chain3",
        "(b): boundary - (-2) - (-3) - (-2) - boundary",
        "type (b) is F-pure, not divisorially F-regular",
        || DualGraph::chain(&[2, 3, 2], &[1, 0, 1]).expect("valid"),
        3,
        FClassPrediction::FPureNotDivisoriallyFRegular,
    ));
    out.push(graph_entry(
        "graph-c-fork-p2",
        "(c): boundary - (-2) with two (-2) leaves, p = 2",
        "type (c) is F-pure iff p != 2",
        || DualGraph::new(&[2, 2, 2], &[(0, 1), (0, 2)], &[1, 0, 0]).expect("valid"),
        2,
        FClassPrediction::NotFPure,
    ));
    out.push(graph_entry(
        "graph-c-fork-p3",
        "(c): boundary - (-2) with two (-2) leaves, p = 3",
        "type (c) is F-pure iff p != 2",
        || DualGraph::new(&[2, 2, 2], &[(0, 1), (0, 2)], &[1, 0, 0]).expect("valid"),
        3,
        FClassPrediction::FPureNotDivisoriallyFRegular,
    ));
    out.push(graph_entry(
        "graph-other-star",
        "three boundary branches through one (-2)-curve",
        "F-pure pairs with reduced boundary have graphs of type (a), (b) or (c)",
        || DualGraph::chain(&[2], &[3]).expect("valid"),
        5,
        FClassPrediction::NotFPure,
    ));

    // toric
    out.push(toric_entry("toric-a1-full-e1", "A_1 cone, rays (1,0),(1,2), full boundary, e = 1", "1,0;1,2", &[0, 1], 1));
    out.push(toric_entry("toric-a1-full-e2", "A_1 cone, rays (1,0),(1,2), full boundary, e = 2", "1,0;1,2", &[0, 1], 2));
    out.push(toric_entry("toric-quadrant-full-e2", "first quadrant, full boundary, e = 2", "1,0;0,1", &[0, 1], 2));
    out.push(toric_entry("toric-quadrant-partial-e1", "first quadrant, boundary D_1 only, e = 1", "1,0;0,1", &[0], 1));

    out.sort_by(|a, b| a.id.cmp(&b.id));
    out
}
