use rand::Rng;
use serde::Serialize;

use super::random::{gnp, random_tree_with, rng};
use super::theorem::congruent_one_mod;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, GraphDoc};
use crate::matching::deficiency;
use crate::structure::{admitting_set, clique_number, full_cap, local_independence_number};

/// Allowed admitting sets for the searched graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "indices")]
pub enum AdmittingPredicate {
    Any,
    Empty,
    Nonempty,
    AllOdd,
    AllEven,
    /// Exactly one index, and it is odd.
    OddSingleton,
    /// Every bone index lies in the given set.
    SubsetOf(Vec<usize>),
}

impl AdmittingPredicate {
    pub fn accepts(&self, a: &[usize]) -> bool {
        match self {
            AdmittingPredicate::Any => true,
            AdmittingPredicate::Empty => a.is_empty(),
            AdmittingPredicate::Nonempty => !a.is_empty(),
            AdmittingPredicate::AllOdd => a.iter().all(|x| x % 2 == 1),
            AdmittingPredicate::AllEven => a.iter().all(|x| x % 2 == 0),
            AdmittingPredicate::OddSingleton => matches!(a, [x] if x % 2 == 1),
            AdmittingPredicate::SubsetOf(s) => a.iter().all(|x| s.contains(x)),
        }
    }

    /// `any`, `empty`, `nonempty`, `odd`, `even`, `odd-singleton`, or a `/`-joined index list.
    pub fn parse(text: &str) -> Result<Self> {
        Ok(match text {
            "any" => AdmittingPredicate::Any,
            "empty" => AdmittingPredicate::Empty,
            "nonempty" => AdmittingPredicate::Nonempty,
            "odd" => AdmittingPredicate::AllOdd,
            "even" => AdmittingPredicate::AllEven,
            "odd-singleton" => AdmittingPredicate::OddSingleton,
            list => AdmittingPredicate::SubsetOf(
                list.split('/')
                    .map(|s| {
                        s.trim()
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad admitting predicate {text:?}")))
                    })
                    .collect::<Result<_>>()?,
            ),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchConstraints {
    pub vertices: usize,
    /// Largest allowed `α_l`; the bound parameter is `n = alpha_l_max + 1`.
    pub alpha_l_max: usize,
    /// Largest allowed clique size.
    pub omega_max: Option<usize>,
    pub admitting: AdmittingPredicate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub iterations: usize,
    /// Restart from a fresh random tree after this many moves without a
    /// strict improvement.
    pub patience: usize,
    pub seed: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            iterations: 2000,
            patience: 200,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub constraints: SearchConstraints,
    pub seed: u64,
    pub iterations: usize,
    pub feasible_visits: usize,
    pub restarts: usize,
    pub best_deficiency: Option<usize>,
    pub best: Option<GraphDoc>,
    /// Whether the best deficiency is `1 mod (n - 3)` with `n = α_l max + 1`;
    /// absent when `n <= 3` or nothing feasible was found.
    pub congruent_one_mod: Option<bool>,
}

fn feasible(g: &Graph, c: &SearchConstraints) -> Result<bool> {
    if !g.is_connected() || local_independence_number(g)? > c.alpha_l_max {
        return Ok(false);
    }
    if let Some(w) = c.omega_max {
        if clique_number(g)? > w {
            return Ok(false);
        }
    }
    if c.admitting == AdmittingPredicate::Any {
        return Ok(true);
    }
    Ok(c.admitting.accepts(&admitting_set(g, full_cap(g))?))
}

fn toggle(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    let edges = g
        .edges()
        .filter(|&e| e != (u.min(v), u.max(v)))
        .chain((!g.has_edge(u, v)).then_some((u, v)));
    let mut b = GraphBuilder::new(g.n());
    for (a, c) in edges {
        b.add_edge(a, c);
    }
    b.build()
}

/// Hill climbing over single edge toggles. Restarts alternate between random
/// trees and `G(n, 1/2)` samples, since dense starts suit small `α_l`.
/// Sideways moves are accepted; the first graph reaching the best value is kept.
pub fn extremal_search(c: &SearchConstraints, cfg: &SearchConfig) -> Result<SearchReport> {
    if c.vertices < 2 {
        return Err(Error::InvalidParameter(
            "search needs at least 2 vertices".into(),
        ));
    }
    let mut r = rng(cfg.seed);
    let mut report = SearchReport {
        constraints: c.clone(),
        seed: cfg.seed,
        iterations: cfg.iterations,
        feasible_visits: 0,
        restarts: 0,
        best_deficiency: None,
        best: None,
        congruent_one_mod: None,
    };
    let mut current: Option<(Graph, usize)> = None;
    let mut stale = 0;
    for _ in 0..cfg.iterations {
        let Some((g, d)) = current.as_ref() else {
            report.restarts += 1;
            let t = if report.restarts % 2 == 1 {
                random_tree_with(c.vertices, &mut r)?
            } else {
                gnp(c.vertices, 0.5, &mut r)?
            };
            if feasible(&t, c)? {
                report.feasible_visits += 1;
                let d = deficiency(&t);
                if report.best_deficiency.is_none_or(|b| d > b) {
                    report.best_deficiency = Some(d);
                    report.best = Some(GraphDoc::from(&t));
                }
                current = Some((t, d));
                stale = 0;
            }
            continue;
        };
        let u = r.gen_range(0..c.vertices);
        let v = (u + r.gen_range(1..c.vertices)) % c.vertices;
        let h = toggle(g, u, v)?;
        if feasible(&h, c)? {
            report.feasible_visits += 1;
            let dh = deficiency(&h);
            if dh >= *d {
                if dh > *d {
                    stale = 0;
                }
                if report.best_deficiency.is_none_or(|b| dh > b) {
                    report.best_deficiency = Some(dh);
                    report.best = Some(GraphDoc::from(&h));
                }
                current = Some((h, dh));
            }
        }
        stale += 1;
        if stale >= cfg.patience {
            current = None;
        }
    }
    let n = c.alpha_l_max + 1;
    report.congruent_one_mod = report
        .best_deficiency
        .filter(|_| n > 3)
        .map(|d| congruent_one_mod(d, n));
    Ok(report)
}
