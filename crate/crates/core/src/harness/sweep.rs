use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use super::iso::canonical_form;
use super::report::ReportRow;
use super::theorem::{check_theorem, CheckResult, Outcome, TheoremSpec};
use crate::error::{guard, Error, Result};
use crate::families::FamilySpec;
use crate::graph::Graph;
use crate::matching::deficiency;
use crate::structure::structure_profile;

pub const SWEEP_LIMIT: usize = 7;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SweepOptions {
    /// Keep one report row per instance.
    pub keep_rows: bool,
    /// Count isomorphism classes among instances meeting the hypotheses.
    pub dedup: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub instances: usize,
    pub hypotheses_met: usize,
    pub passes: usize,
    pub vacuous: usize,
    pub violations: usize,
    pub indeterminate: usize,
    /// Largest deficiency among instances meeting the hypotheses.
    pub max_deficiency: Option<usize>,
    pub distinct_classes: Option<usize>,
    pub violating: Vec<CheckResult>,
    #[serde(skip)]
    pub rows: Vec<ReportRow>,
}

impl SweepReport {
    fn absorb(&mut self, r: CheckResult, canon: Option<u64>, classes: &mut BTreeSet<u64>) {
        self.instances += 1;
        if r.hypotheses_met {
            self.hypotheses_met += 1;
            self.max_deficiency = self.max_deficiency.max(Some(r.actual_deficiency));
            classes.extend(canon);
        }
        match r.outcome {
            Outcome::Pass => self.passes += 1,
            Outcome::Vacuous => self.vacuous += 1,
            Outcome::Indeterminate => self.indeterminate += 1,
            Outcome::Violation => {
                self.violations += 1;
                self.violating.push(r);
            }
        }
    }

    pub fn all_pass(&self) -> bool {
        self.violations == 0 && self.indeterminate == 0
    }
}

/// Checks `spec` on every labeled connected graph with `1..=n_max` vertices.
/// Row, verdict and canonical form of one swept instance.
type Checked = (Option<ReportRow>, CheckResult, Option<u64>);

pub fn exhaustive_sweep(
    spec: &TheoremSpec,
    n_max: usize,
    opts: SweepOptions,
) -> Result<SweepReport> {
    guard("exhaustive sweep vertices", SWEEP_LIMIT, n_max)?;
    spec.validate()?;
    let mut report = SweepReport::default();
    let mut classes = BTreeSet::new();
    for n in 1..=n_max {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        let total = 1u64 << pairs.len();
        let results: Vec<Checked> = (0..total)
            .into_par_iter()
            .map(|mask| -> Result<Option<Checked>> {
                let edges = pairs
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &e)| e);
                let g = Graph::from_edges(n, edges)?;
                if !g.is_connected() {
                    return Ok(None);
                }
                let mut r = check_theorem(&g, spec)?;
                let row = opts
                    .keep_rows
                    .then(|| ReportRow::from_check(format!("n{n}-mask{mask}"), &g, &r));
                r.profile = None;
                let canon = if opts.dedup && r.hypotheses_met {
                    canonical_form(&g)
                } else {
                    None
                };
                Ok(Some((row, r, canon)))
            })
            .filter_map(|r| r.transpose())
            .collect::<Result<_>>()?;
        for (row, r, canon) in results {
            report.rows.extend(row);
            report.absorb(r, canon, &mut classes);
        }
    }
    if opts.dedup {
        report.distinct_classes = Some(classes.len());
    }
    Ok(report)
}

/// Parses `m=3..7:2,n=4..6,a=1/2` into per-key value lists. Ranges are
/// inclusive with an optional step; other values are taken literally.
pub fn parse_ranges(text: &str) -> Result<BTreeMap<String, Vec<String>>> {
    let mut out = BTreeMap::new();
    for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key=value, got {part:?}")))?;
        let values = match value.split_once("..") {
            Some((lo, rest)) => {
                let (hi, step) = rest.split_once(':').unwrap_or((rest, "1"));
                let num = |s: &str| {
                    s.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad range bound {s:?} in {part:?}")))
                };
                let (lo, hi, step) = (num(lo)?, num(hi)?, num(step)?);
                if step == 0 || lo > hi {
                    return Err(Error::Parse(format!("empty range {part:?}")));
                }
                (lo..=hi).step_by(step).map(|v| v.to_string()).collect()
            }
            None => vec![value.trim().to_string()],
        };
        if out.insert(key.trim().to_string(), values).is_some() {
            return Err(Error::Parse(format!("parameter {key} given twice")));
        }
    }
    Ok(out)
}

fn product(ranges: &BTreeMap<String, Vec<String>>) -> Vec<BTreeMap<String, String>> {
    let mut acc = vec![BTreeMap::new()];
    for (k, values) in ranges {
        acc = acc
            .into_iter()
            .flat_map(|base| {
                values.iter().map(move |v| {
                    let mut m = base.clone();
                    m.insert(k.clone(), v.clone());
                    m
                })
            })
            .collect();
    }
    acc
}

/// Builds every family member in the parameter grid and, if a theorem is
/// given, checks it. For `t_tree`, whose `m` and `n` are the theorem's,
/// theorem parameters left unset are taken from the family parameters.
pub fn family_sweep(
    family: &str,
    ranges: &BTreeMap<String, Vec<String>>,
    theorem: Option<&TheoremSpec>,
) -> Result<SweepReport> {
    let mut report = SweepReport::default();
    let mut classes = BTreeSet::new();
    for params in product(ranges) {
        let spec = FamilySpec::from_params(family, &params)?;
        let g = spec.build()?;
        let label = std::iter::once(family.to_string())
            .chain(params.iter().map(|(k, v)| format!("{k}={v}")))
            .collect::<Vec<_>>()
            .join(" ");
        match theorem {
            Some(t) => {
                let int = |k: &str| {
                    (family == "t_tree")
                        .then(|| params.get(k).and_then(|v| v.parse().ok()))
                        .flatten()
                };
                let mut t = t.clone();
                t.m = t.m.or(int("m"));
                t.n = t.n.or(int("n"));
                let mut r = check_theorem(&g, &t)?;
                report.rows.push(ReportRow::from_check(label, &g, &r));
                r.profile = None;
                report.absorb(r, None, &mut classes);
            }
            None => {
                let d = deficiency(&g);
                let profile = structure_profile(&g, None).ok();
                report.instances += 1;
                report.max_deficiency = report.max_deficiency.max(Some(d));
                report
                    .rows
                    .push(ReportRow::plain(label, &g, profile.as_ref(), d));
            }
        }
    }
    Ok(report)
}
