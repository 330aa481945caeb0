use std::io::Write;

use serde::Serialize;

use super::theorem::{CheckResult, Outcome, TheoremId};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::StructureProfile;

/// One CSV line of a sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub instance: String,
    /// Hex fingerprint of the labeled graph.
    pub hash: String,
    pub vertices: usize,
    pub edges: usize,
    pub alpha_l: Option<usize>,
    pub omega: Option<usize>,
    /// Bone indices joined by `/`.
    pub admitting: Option<String>,
    pub theorem: Option<TheoremId>,
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub p: Option<usize>,
    pub hypotheses_met: Option<bool>,
    pub bound: Option<usize>,
    pub deficiency: usize,
    pub outcome: Option<Outcome>,
    pub pass: Option<bool>,
    pub note: Option<String>,
}

fn join(a: &[usize]) -> String {
    a.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("/")
}

impl ReportRow {
    /// Row without a theorem; structural columns are filled when a profile is given.
    pub fn plain(
        instance: String,
        g: &Graph,
        profile: Option<&StructureProfile>,
        d: usize,
    ) -> Self {
        ReportRow {
            instance,
            hash: format!("{:016x}", g.fingerprint()),
            vertices: g.n(),
            edges: g.edge_count(),
            alpha_l: profile.map(|p| p.alpha_l),
            omega: profile.map(|p| p.omega),
            admitting: profile.map(|p| join(&p.admitting)),
            theorem: None,
            m: None,
            n: None,
            p: None,
            hypotheses_met: None,
            bound: None,
            deficiency: d,
            outcome: None,
            pass: None,
            note: None,
        }
    }

    pub fn from_check(instance: String, g: &Graph, r: &CheckResult) -> Self {
        ReportRow {
            theorem: Some(r.theorem),
            pass: Some(r.pass()),
            m: r.m,
            n: r.n,
            p: r.p,
            hypotheses_met: Some(r.hypotheses_met),
            bound: r.bound,
            deficiency: r.actual_deficiency,
            outcome: Some(r.outcome),
            note: r.note.clone(),
            ..ReportRow::plain(instance, g, r.profile.as_ref(), r.actual_deficiency)
        }
    }
}

pub fn write_csv<W: Write>(rows: &[ReportRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in rows {
        w.serialize(r)
            .map_err(|e| Error::InvalidInput(e.to_string()))?;
    }
    w.flush().map_err(|e| Error::InvalidInput(e.to_string()))
}
