//! Exact analysis of circular graph drawings.
//!
//! A circular drawing places the vertices of a graph on a circle and draws
//! every edge as a straight chord. This crate builds the combinatorial objects
//! derived from such a drawing — the crossing graph (chords as vertices,
//! adjacent when they cross), the planarisation (crossings replaced by
//! degree-4 dummy vertices), and the map graph (faces of the planarisation,
//! adjacent when they share a vertex) — entirely in exact rational arithmetic,
//! and verifies the quantitative relationships between them on concrete
//! instances.
//!
//! Supporting that are desk-scale exact solvers (treewidth, degeneracy,
//! Hadwiger and Hajós numbers, each with checkable witnesses), generators for
//! the extremal drawing families whose crossing structure is interesting
//! enough to test against, and verification suites that sweep random or
//! exhaustive instance sets. Suites accept a `jobs` knob and fan out across
//! threads when the `parallel` feature (default) is enabled.

pub mod decompositions;
pub mod dominance;
pub mod drawing;
pub mod exec;
pub mod extremal;
pub mod geom;
pub mod graph;
pub mod suites;

pub use graph::{EdgeId, EdgeIndex, Graph, GraphError, VertexId};

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::time::Instant;

/// Size caps for the exponential-time exact solvers and the drawing-order
/// enumerator. Instances above a cap are rejected (or skipped, when forced)
/// instead of silently running for hours.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Max vertex count for exact treewidth.
    pub treewidth: usize,
    /// Max vertex count for the exact Hadwiger number.
    pub hadwiger: usize,
    /// Max vertex count for the exact Hajós number.
    pub hajos: usize,
    /// Max circle points for exhaustive circular-order enumeration.
    pub enumeration: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            treewidth: graph::treewidth::DEFAULT_TREEWIDTH_CAP,
            hadwiger: graph::minors::DEFAULT_HADWIGER_CAP,
            hajos: graph::topminors::DEFAULT_HAJOS_CAP,
            enumeration: 10,
        }
    }
}

impl Caps {
    /// Parses an override string of the form
    /// `"treewidth=20,hadwiger=12,hajos=10,enumeration=9"`. Keys may appear in
    /// any order and omitted keys keep their defaults. This is the format of
    /// the `CHORDAL_CAPS` environment variable.
    pub fn parse_overrides(spec: &str) -> Result<Caps, String> {
        let mut caps = Caps::default();
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| format!("expected key=value, got `{part}`"))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| format!("invalid number in `{part}`"))?;
            match key.trim() {
                "treewidth" => caps.treewidth = value,
                "hadwiger" => caps.hadwiger = value,
                "hajos" => caps.hajos = value,
                "enumeration" => caps.enumeration = value,
                other => return Err(format!("unknown cap `{other}`")),
            }
        }
        Ok(caps)
    }
}

/// Exact invariant values for one graph. Every field is optional so callers
/// can skip solvers whose cap is exceeded. Solver wall times are collected in
/// `solver_ms` but deliberately left out of the serialized form: written
/// reports must be byte-identical across runs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub treewidth: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degeneracy: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hadwiger: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hajos: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub radius: Option<i64>,
    #[serde(skip)]
    pub solver_ms: BTreeMap<String, u64>,
}

impl InvariantReport {
    /// The chain `hajos <= hadwiger <= treewidth + 1` must hold whenever all
    /// three values are present.
    pub fn chain_holds(&self) -> bool {
        match (self.hajos, self.hadwiger, self.treewidth) {
            (Some(ht), Some(h), Some(tw)) => ht <= h && h <= tw + 1,
            _ => true,
        }
    }
}

/// Computes all invariants of `g` that fit under `caps`. With `force` set,
/// over-cap solvers are skipped (field left `None`); otherwise the first
/// over-cap solver aborts with an error. The radius is reported only for
/// connected graphs.
pub fn invariant_report(g: &Graph, caps: &Caps, force: bool) -> Result<InvariantReport, GraphError> {
    let mut report = InvariantReport::default();

    let t = Instant::now();
    let (degen, _) = graph::degeneracy::degeneracy(g);
    report.degeneracy = Some(degen as i64);
    report.solver_ms.insert("degeneracy".into(), t.elapsed().as_millis() as u64);

    let t = Instant::now();
    match graph::treewidth::treewidth_exact(g, caps.treewidth) {
        Ok((tw, _)) => {
            report.treewidth = Some(tw);
            report.solver_ms.insert("treewidth".into(), t.elapsed().as_millis() as u64);
        }
        Err(e @ GraphError::SizeAboveCap { .. }) if !force => return Err(e),
        Err(_) => {}
    }

    let t = Instant::now();
    match graph::minors::hadwiger_exact(g, caps.hadwiger) {
        Ok((h, _)) => {
            report.hadwiger = Some(h as i64);
            report.solver_ms.insert("hadwiger".into(), t.elapsed().as_millis() as u64);
        }
        Err(e @ GraphError::SizeAboveCap { .. }) if !force => return Err(e),
        Err(_) => {}
    }

    let t = Instant::now();
    match graph::topminors::hajos_exact(g, caps.hajos) {
        Ok((h, _)) => {
            report.hajos = Some(h as i64);
            report.solver_ms.insert("hajos".into(), t.elapsed().as_millis() as u64);
        }
        Err(e @ GraphError::SizeAboveCap { .. }) if !force => return Err(e),
        Err(_) => {}
    }

    if let Ok(r) = g.radius() {
        report.radius = Some(r as i64);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caps_parse_and_default() {
        let caps = Caps::parse_overrides("treewidth=20, hajos=9").unwrap();
        assert_eq!(caps.treewidth, 20);
        assert_eq!(caps.hajos, 9);
        assert_eq!(caps.hadwiger, Caps::default().hadwiger);
        assert!(Caps::parse_overrides("tree=1").is_err());
        assert!(Caps::parse_overrides("treewidth=x").is_err());
        assert_eq!(Caps::parse_overrides("").unwrap(), Caps::default());
    }

    #[test]
    fn report_on_a_small_clique() {
        let g = graph::generate::complete(4);
        let report = invariant_report(&g, &Caps::default(), false).unwrap();
        assert_eq!(report.treewidth, Some(3));
        assert_eq!(report.degeneracy, Some(3));
        assert_eq!(report.hadwiger, Some(4));
        assert_eq!(report.hajos, Some(4));
        assert_eq!(report.radius, Some(1));
        assert!(report.chain_holds());
    }

    #[test]
    fn forced_reports_skip_capped_solvers() {
        let g = graph::generate::complete_bipartite(8, 8);
        let caps = Caps {
            treewidth: 10,
            hadwiger: 10,
            hajos: 10,
            enumeration: 10,
        };
        assert!(invariant_report(&g, &caps, false).is_err());
        let report = invariant_report(&g, &caps, true).unwrap();
        assert_eq!(report.treewidth, None);
        assert_eq!(report.hadwiger, None);
        assert_eq!(report.degeneracy, Some(8));
        assert!(report.chain_holds());
    }

    #[test]
    fn serialized_report_omits_missing_fields_and_timings() {
        let g = graph::generate::path(3).unwrap();
        let report = invariant_report(&g, &Caps::default(), false).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert!(!json.contains("solver_ms"));
        assert!(json.contains("\"treewidth\":1"));
    }
}
