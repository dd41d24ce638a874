//! Machine-readable analysis report. Field order is fixed by the struct
//! declarations and all maps are ordered, so serialization is
//! deterministic.

use num_bigint::BigUint;
use plumbing::decision::{self, EngineError, GammaStatus, GammaVerdict};
use plumbing::graph::{self, PlumbingGraph, ShapeKind};
use plumbing::oracle::{self, EnumLimits, EnumOutcome, FpPresentation};
use plumbing::presentation::{build_presentation, export_text};
use plumbing::word::Gen;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;

#[derive(Serialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
}

#[derive(Serialize)]
pub struct MinimalReport {
    pub minimal: bool,
    pub violations: Vec<u32>,
}

#[derive(Serialize)]
pub struct VerdictReport {
    pub vertex: u32,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<String>,
    pub trace: Vec<String>,
}

#[derive(Serialize)]
pub struct ElementReport {
    pub vertex: u32,
    pub oracle_order: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agrees: Option<bool>,
}

#[derive(Serialize)]
pub struct OracleReport {
    pub group_order: String,
    pub elements: Vec<ElementReport>,
}

#[derive(Serialize)]
pub struct Report {
    pub graph: GraphSummary,
    pub shape: String,
    pub nef_genus_zero: BTreeMap<u32, bool>,
    pub minimal_gnc: MinimalReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub engine: Option<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub engine_errors: BTreeMap<String, String>,
    pub verdicts: Vec<VerdictReport>,
    pub presentation: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleReport>,
}

fn shape_string(g: &PlumbingGraph) -> String {
    match graph::classify_shape(g).kind {
        ShapeKind::LinearTree => "linear-tree".into(),
        ShapeKind::Comb(rim) => format!("comb(rim={rim})"),
        ShapeKind::GeneralTree => "general-tree".into(),
        ShapeKind::HasCycles => "has-cycles".into(),
    }
}

fn verdict_report(v: &GammaVerdict) -> VerdictReport {
    let (status, order) = match &v.status {
        GammaStatus::Trivial => ("trivial".into(), None),
        GammaStatus::NontrivialOrderUnknown => ("nontrivial-order-unknown".into(), None),
        GammaStatus::Finite(k) => ("finite".into(), Some(k.to_string())),
        GammaStatus::Infinite => ("infinite".into(), None),
        GammaStatus::Unknown => ("unknown".into(), None),
    };
    VerdictReport {
        vertex: v.vertex,
        status,
        order,
        trace: v.trace.iter().map(|f| f.to_string()).collect(),
    }
}

pub enum TheoremChoice {
    A,
    B,
    C,
    Auto,
}

type Verdicts = BTreeMap<u32, GammaVerdict>;
type EngineFn = fn(&PlumbingGraph) -> Result<Verdicts, EngineError>;

fn run_engine(
    g: &PlumbingGraph,
    choice: &TheoremChoice,
) -> (Option<String>, BTreeMap<String, String>, Option<Verdicts>) {
    let attempts: Vec<(&str, EngineFn)> =
        match choice {
            TheoremChoice::A => vec![("a", decision::theorem_a)],
            TheoremChoice::B => vec![("b", decision::theorem_b)],
            TheoremChoice::C => vec![("c", decision::theorem_c)],
            TheoremChoice::Auto => vec![
                ("c", decision::theorem_c),
                ("b", decision::theorem_b),
                ("a", decision::theorem_a),
            ],
        };
    let mut errors = BTreeMap::new();
    for (name, run) in attempts {
        match run(g) {
            Ok(verdicts) => return (Some(name.to_string()), errors, Some(verdicts)),
            Err(e) => {
                errors.insert(name.to_string(), e.to_string());
            }
        }
    }
    (None, errors, None)
}

fn oracle_report(
    g: &PlumbingGraph,
    verdicts: Option<&BTreeMap<u32, GammaVerdict>>,
    max_cosets: usize,
) -> OracleReport {
    let p = build_presentation(g);
    let (fp, index) = FpPresentation::from_presentation(&p);
    let lim = EnumLimits::cosets(max_cosets);
    match oracle::enumerate(&fp, &[], &lim) {
        EnumOutcome::Complete(table) => {
            let mut elements = Vec::new();
            for v in g.vertex_ids() {
                let cols = fp.encode(&[(index[&Gen::Gamma(v)] + 1) as i64]);
                let ord = table.permutation_order(&cols);
                let agrees = verdicts.map(|m| claim_agrees(&m[&v].status, &ord));
                elements.push(ElementReport {
                    vertex: v,
                    oracle_order: ord.to_string(),
                    agrees,
                });
            }
            OracleReport {
                group_order: table.coset_count().to_string(),
                elements,
            }
        }
        EnumOutcome::Exhausted { high_water } => OracleReport {
            group_order: format!("exhausted(high_water={high_water})"),
            elements: Vec::new(),
        },
    }
}

fn claim_agrees(status: &GammaStatus, oracle_order: &BigUint) -> bool {
    let one = BigUint::from(1u8);
    match status {
        GammaStatus::Trivial => *oracle_order == one,
        GammaStatus::NontrivialOrderUnknown => *oracle_order > one,
        GammaStatus::Finite(k) => oracle_order == k,
        // A finite enumeration contradicts an infinity claim.
        GammaStatus::Infinite => false,
        GammaStatus::Unknown => true,
    }
}

pub fn analyze_report(
    g: &PlumbingGraph,
    choice: &TheoremChoice,
    oracle_check: bool,
    max_cosets: usize,
) -> Report {
    let (engine, engine_errors, verdicts) = run_engine(g, choice);
    let (minimal, violations) = graph::is_minimal_gnc(g);
    let p = build_presentation(g);
    Report {
        graph: GraphSummary {
            vertices: g.vertices().len(),
            edges: g.edges().len(),
        },
        shape: shape_string(g),
        nef_genus_zero: graph::nef_on_genus_zero(g).into_iter().collect(),
        minimal_gnc: MinimalReport {
            minimal,
            violations,
        },
        engine,
        engine_errors,
        verdicts: verdicts
            .as_ref()
            .map(|m| m.values().map(verdict_report).collect())
            .unwrap_or_default(),
        presentation: export_text(&p),
        oracle: oracle_check.then(|| oracle_report(g, verdicts.as_ref(), max_cosets)),
    }
}

pub fn render_pretty(r: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "graph: {} vertices, {} edges, shape {}",
        r.graph.vertices, r.graph.edges, r.shape
    );
    let nef = r.nef_genus_zero.values().all(|&b| b);
    let _ = writeln!(
        out,
        "nef on genus-zero curves: {nef}; minimal: {}{}",
        r.minimal_gnc.minimal,
        if r.minimal_gnc.violations.is_empty() {
            String::new()
        } else {
            format!(" (violations at {:?})", r.minimal_gnc.violations)
        }
    );
    match &r.engine {
        Some(e) => {
            let _ = writeln!(out, "engine: {e}");
        }
        None => {
            let _ = writeln!(out, "engine: none applicable");
        }
    }
    for (engine, err) in &r.engine_errors {
        let _ = writeln!(out, "  engine {engine} not applicable: {err}");
    }
    for v in &r.verdicts {
        let order = v
            .order
            .as_ref()
            .map(|o| format!(" (order {o})"))
            .unwrap_or_default();
        let _ = writeln!(out, "gamma_{}: {}{}", v.vertex, v.status, order);
        for t in &v.trace {
            let _ = writeln!(out, "    - {t}");
        }
    }
    if let Some(o) = &r.oracle {
        let _ = writeln!(out, "oracle group order: {}", o.group_order);
        for e in &o.elements {
            let agrees = match e.agrees {
                Some(true) => "agrees",
                Some(false) => "MISMATCH",
                None => "no claim",
            };
            let _ = writeln!(
                out,
                "    gamma_{}: oracle order {} ({agrees})",
                e.vertex, e.oracle_order
            );
        }
    }
    let _ = writeln!(out, "presentation: {}", r.presentation);
    out
}
