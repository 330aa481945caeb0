use serde::Serialize;

use super::algorithm::LmTrace;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::levelling::Levelling;
use crate::matching::deficiency;
use crate::structure::StructureProfile;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// `|Z_1| <= α_l - 1`.
    FirstLevel,
    /// `|Z_i| <= (α_l - 2) |X_{i-1}|` for `i > 1`.
    PerParent,
    /// Clean levels leave nothing unmatched.
    CleanLevel,
    /// A nonempty `Z_i` needs `i` in the admitting set or `i = 1`.
    AdmittedLevel,
    /// The matchings of all levels are pairwise vertex-disjoint.
    Disjoint,
    /// The bound is at least the exact deficiency.
    Sound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: Rule,
    pub level: Option<usize>,
    pub detail: String,
}

/// Checks a trace against the per-level inequalities it must satisfy.
///
/// The admitting-set rule is only evaluated for levels within the profile's
/// search cap.
pub fn validate_trace(g: &Graph, t: &LmTrace, p: &StructureProfile) -> Result<Vec<Violation>> {
    let lev = Levelling::new(g, t.root)?;
    if lev.levels() != t.levels.as_slice() {
        return Err(Error::InvalidInput(
            "trace levels do not match the graph".into(),
        ));
    }
    let mut out = Vec::new();
    let alpha = p.alpha_l as i64;
    for r in &t.records {
        let z = r.z.len() as i64;
        let i = r.level;
        if i == 1 && z > alpha - 1 {
            out.push(Violation {
                rule: Rule::FirstLevel,
                level: Some(i),
                detail: format!("|Z_1| = {z} > α_l - 1 = {}", alpha - 1),
            });
        }
        if i > 1 {
            let cap = (alpha - 2) * r.x_prev.len() as i64;
            if z > cap {
                out.push(Violation {
                    rule: Rule::PerParent,
                    level: Some(i),
                    detail: format!("|Z_{i}| = {z} > (α_l - 2)|X_{}| = {cap}", i - 1),
                });
            }
        }
        if z > 0 && lev.is_clean_level(i)? {
            out.push(Violation {
                rule: Rule::CleanLevel,
                level: Some(i),
                detail: format!("L_{i} is clean but |Z_{i}| = {z}"),
            });
        }
        if z > 0 && i > 1 && i <= p.admitting_cap && !p.admitting.contains(&i) {
            out.push(Violation {
                rule: Rule::AdmittedLevel,
                level: Some(i),
                detail: format!("|Z_{i}| = {z} but {i} is not in the admitting set"),
            });
        }
    }
    let mut seen = vec![false; g.n()];
    for (a, b) in t.combined_matching() {
        for v in [a, b] {
            if std::mem::replace(&mut seen[v], true) {
                out.push(Violation {
                    rule: Rule::Disjoint,
                    level: None,
                    detail: format!("vertex {v} is matched twice"),
                });
            }
        }
    }
    let exact = deficiency(g);
    if t.bound < exact {
        out.push(Violation {
            rule: Rule::Sound,
            level: None,
            detail: format!("bound {} < deficiency {exact}", t.bound),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lm::lm_run;
    use crate::structure::structure_profile;

    #[test]
    fn bs23_trace_is_valid() {
        let g = Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (0, 4), (2, 5), (2, 6)]).unwrap();
        let t = lm_run(&g, 0).unwrap();
        let p = structure_profile(&g, None).unwrap();
        assert!(validate_trace(&g, &t, &p).unwrap().is_empty());
    }

    #[test]
    fn star_boundary_case() {
        let g = Graph::from_edges(5, (1..5).map(|i| (0, i))).unwrap();
        let t = lm_run(&g, 0).unwrap();
        let p = structure_profile(&g, None).unwrap();
        assert_eq!(t.records[0].z.len(), p.alpha_l - 1);
        assert!(validate_trace(&g, &t, &p).unwrap().is_empty());
    }

    #[test]
    fn tampered_trace_is_flagged() {
        let g = Graph::from_edges(5, (1..5).map(|i| (0, i))).unwrap();
        let mut t = lm_run(&g, 0).unwrap();
        let p = structure_profile(&g, None).unwrap();
        t.bound = 1;
        t.records[0].z.push(1);
        let v = validate_trace(&g, &t, &p).unwrap();
        assert!(v.iter().any(|v| v.rule == Rule::Sound));
        assert!(v.iter().any(|v| v.rule == Rule::FirstLevel));

        let other = Graph::from_edges(5, [(0, 1), (1, 2), (0, 3), (0, 4)]).unwrap();
        assert!(validate_trace(&other, &t, &p).is_err());
    }
}
