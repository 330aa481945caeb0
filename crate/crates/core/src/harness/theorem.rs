//! Executable forms of the deficiency bounds.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::families::t_tree;
use crate::graph::{Graph, GraphDoc};
use crate::matching::{deficiency, is_deficiency_critical, CriticalityMode, Verdict};
use crate::structure::{structure_profile, StructureProfile};

use super::iso::trees_isomorphic;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// Connected claw-free graphs: deficiency at most 1.
    ClawFree,
    /// Bone-free graphs with `α_l < n`: at most `n - 2`.
    BoneFree,
    /// Odd admitting sets closed under the `p + q ± 1` exclusion.
    OddBonesMain,
    /// The `m = 3` case of the above: at most `2n - 5`.
    OddBonesM3,
    /// Bones in `{p, 2p + 1}`: at most `3n - 8`.
    TwoOddBonesPlus,
    /// Bones in `{p, 2p - 1}`: at most `n² - 3n + 1`.
    TwoOddBonesMinus,
    /// A single even bone and no `K_m`: at most `(m - 1)(n - 3) + 1`.
    SingleEvenBone,
    /// Only even bones and triangle-free: at most `2n - 6`.
    AllEvenBones,
    /// Exact deficiency of `T_{m,n}`.
    TreeDeficiency,
    /// Nontrivial deficiency-critical graphs have a snail horn.
    SnailHorn,
    /// Reports whether the deficiency is `1 mod (n - 3)`; never fails.
    ModuloQuestion,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::ClawFree,
        TheoremId::BoneFree,
        TheoremId::OddBonesMain,
        TheoremId::OddBonesM3,
        TheoremId::TwoOddBonesPlus,
        TheoremId::TwoOddBonesMinus,
        TheoremId::SingleEvenBone,
        TheoremId::AllEvenBones,
        TheoremId::TreeDeficiency,
        TheoremId::SnailHorn,
        TheoremId::ModuloQuestion,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::ClawFree => "thm-1.2-clawfree",
            TheoremId::BoneFree => "thm-1.3-bonefree",
            TheoremId::OddBonesMain => "thm-1.4-main",
            TheoremId::OddBonesM3 => "thm-1.4-m3",
            TheoremId::TwoOddBonesPlus => "thm-1.6-q=2p+1",
            TheoremId::TwoOddBonesMinus => "thm-1.6-q=2p-1",
            TheoremId::SingleEvenBone => "thm-1.8-single-even",
            TheoremId::AllEvenBones => "thm-1.8-all-even",
            TheoremId::TreeDeficiency => "cor-1.3",
            TheoremId::SnailHorn => "cor-2.3-snailhorn",
            TheoremId::ModuloQuestion => "prop-5.1-mod",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown theorem {s:?}")))
    }
}

impl Serialize for TheoremId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// A theorem with its numeric parameters. Parameters left as `None` are
/// chosen per graph: `n = max(α_l + 1, 4)`, `m = max(ω + 1, 4)` for the
/// clique-bounded statements, and the bone parameter `p` from the admitting set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremSpec {
    pub id: TheoremId,
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub p: Option<usize>,
}

impl TheoremSpec {
    pub fn new(id: TheoremId) -> Self {
        TheoremSpec {
            id,
            m: None,
            n: None,
            p: None,
        }
    }

    pub fn with(mut self, m: Option<usize>, n: Option<usize>, p: Option<usize>) -> Self {
        self.m = m.or(self.m);
        self.n = n.or(self.n);
        self.p = p.or(self.p);
        self
    }

    /// Rejects parameters outside the statement's domain.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParameter(format!("{}: {msg}", self.id)));
        if let Some(n) = self.n {
            if n <= 3 && self.id != TheoremId::ClawFree && self.id != TheoremId::SnailHorn {
                return bad(format!("n must exceed 3, got {n}"));
            }
        }
        match self.id {
            TheoremId::OddBonesMain => match self.m {
                Some(m) if m >= 3 && m % 2 == 1 => Ok(()),
                Some(m) => bad(format!("m must be odd and at least 3, got {m}")),
                None => bad("m is required".into()),
            },
            TheoremId::TreeDeficiency => match (self.m, self.n) {
                (Some(m), Some(_)) if m >= 3 && m % 2 == 1 => Ok(()),
                _ => bad("needs odd m >= 3 and n > 3".into()),
            },
            TheoremId::TwoOddBonesPlus | TheoremId::TwoOddBonesMinus => match self.p {
                Some(p) if p < 3 || p % 2 == 0 => {
                    bad(format!("p must be odd and at least 3, got {p}"))
                }
                _ => Ok(()),
            },
            TheoremId::SingleEvenBone => match self.m {
                Some(m) if m <= 3 => bad(format!("m must exceed 3, got {m}")),
                _ => match self.p {
                    Some(0) => bad("p must be positive".into()),
                    _ => Ok(()),
                },
            },
            TheoremId::ModuloQuestion => match self.m {
                Some(m) if m <= 3 => bad(format!("m must exceed 3, got {m}")),
                _ => Ok(()),
            },
            _ => Ok(()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypothesis {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    /// Hypotheses hold and the conclusion holds.
    Pass,
    /// Some hypothesis fails, so nothing is claimed.
    Vacuous,
    /// Hypotheses hold and the conclusion fails.
    Violation,
    /// A size guard prevented evaluating the hypotheses or the claim.
    Indeterminate,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub theorem: TheoremId,
    /// Parameters actually used after per-graph defaults.
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub p: Option<usize>,
    pub hypotheses: Vec<Hypothesis>,
    pub hypotheses_met: bool,
    /// Upper bound (or exact target for the tree corollary), when the
    /// statement has one.
    pub bound: Option<usize>,
    pub actual_deficiency: usize,
    pub outcome: Outcome,
    pub note: Option<String>,
    pub profile: Option<StructureProfile>,
    pub witness: Option<GraphDoc>,
}

impl CheckResult {
    pub fn pass(&self) -> bool {
        matches!(self.outcome, Outcome::Pass | Outcome::Vacuous)
    }
}

fn hyp(name: impl Into<String>, holds: bool) -> Hypothesis {
    Hypothesis {
        name: name.into(),
        holds,
    }
}

/// Odd admitting set with no `p + q ± 1` for `p, q >= m` in it.
fn odd_exclusion(a: &[usize], m: usize) -> (bool, bool) {
    let all_odd = a.iter().all(|x| x % 2 == 1);
    let big: Vec<usize> = a.iter().copied().filter(|&x| x >= m).collect();
    let closed = big.iter().all(|&p| {
        big.iter()
            .all(|&q| !a.contains(&(p + q + 1)) && !a.contains(&(p + q - 1)))
    });
    (all_odd, closed)
}

/// Smallest odd `p >= 3` with `A ⊆ {p, q(p)}`.
fn two_bone_p(a: &[usize], q: impl Fn(usize) -> usize) -> Option<usize> {
    let fits = |p: usize| a.iter().all(|&x| x == p || x == q(p));
    let mut candidates: Vec<usize> = vec![3];
    for &x in a {
        if x >= 3 && x % 2 == 1 {
            candidates.push(x);
        }
        // x = 2p + 1 or x = 2p - 1
        for p in [(x.saturating_sub(1)) / 2, x.div_ceil(2)] {
            if p >= 3 && p % 2 == 1 {
                candidates.push(p);
            }
        }
    }
    candidates.sort_unstable();
    candidates.into_iter().find(|&p| fits(p))
}

pub fn tree_deficiency_formula(m: usize, n: usize) -> usize {
    (n - 1) * (n - 2).pow(((m - 3) / 2) as u32) - 1
}

pub fn main_bound(m: usize, n: usize) -> usize {
    m * (n - 3) * (n - 2).pow(((m - 3) / 2) as u32) + 1
}

/// `d ≡ 1 (mod n - 3)` for `n > 3`.
pub fn congruent_one_mod(d: usize, n: usize) -> bool {
    let modulus = n - 3;
    modulus == 1 || d % modulus == 1 % modulus
}

/// Evaluates one theorem on one connected graph against the exact deficiency.
pub fn check_theorem(g: &Graph, spec: &TheoremSpec) -> Result<CheckResult> {
    spec.validate()?;
    if g.n() == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let actual = deficiency(g);
    let indeterminate = |note: String| CheckResult {
        theorem: spec.id,
        m: spec.m,
        n: spec.n,
        p: spec.p,
        hypotheses: Vec::new(),
        hypotheses_met: false,
        bound: None,
        actual_deficiency: actual,
        outcome: Outcome::Indeterminate,
        note: Some(note),
        profile: None,
        witness: Some(GraphDoc::from(g)),
    };
    let needs_profile = !matches!(spec.id, TheoremId::TreeDeficiency | TheoremId::SnailHorn);
    let profile = if needs_profile {
        match structure_profile(g, None) {
            Ok(p) => Some(p),
            Err(e @ Error::SizeGuard { .. }) => return Ok(indeterminate(e.to_string())),
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let auto_n = |p: &StructureProfile| spec.n.unwrap_or((p.alpha_l + 1).max(4));
    let auto_m = |p: &StructureProfile| spec.m.unwrap_or((p.omega + 1).max(4));

    let mut m = spec.m;
    let mut n = spec.n;
    let mut p_used = spec.p;
    let mut note = None;
    let (hypotheses, bound, holds): (Vec<Hypothesis>, Option<usize>, bool) = match spec.id {
        TheoremId::ClawFree => {
            let pr = profile.as_ref().unwrap();
            (vec![hyp("α_l < 3", pr.alpha_l < 3)], Some(1), actual <= 1)
        }
        TheoremId::BoneFree => {
            let pr = profile.as_ref().unwrap();
            let nn = auto_n(pr);
            n = Some(nn);
            let b = nn - 2;
            (
                vec![
                    hyp("no induced bone", pr.admitting.is_empty()),
                    hyp(format!("α_l < {nn}"), pr.alpha_l < nn),
                ],
                Some(b),
                actual <= b,
            )
        }
        TheoremId::OddBonesMain | TheoremId::OddBonesM3 => {
            let pr = profile.as_ref().unwrap();
            let mm = if spec.id == TheoremId::OddBonesM3 {
                3
            } else {
                spec.m.unwrap()
            };
            let nn = auto_n(pr);
            m = Some(mm);
            n = Some(nn);
            let (all_odd, closed) = odd_exclusion(&pr.admitting, mm);
            let b = if mm == 3 {
                2 * nn - 5
            } else {
                main_bound(mm, nn)
            };
            (
                vec![
                    hyp("admitting set is odd", all_odd),
                    hyp(format!("p + q ± 1 ∉ A for p, q ∈ A, p, q >= {mm}"), closed),
                    hyp(format!("α_l < {nn}"), pr.alpha_l < nn),
                ],
                Some(b),
                actual <= b,
            )
        }
        TheoremId::TwoOddBonesPlus | TheoremId::TwoOddBonesMinus => {
            let pr = profile.as_ref().unwrap();
            let nn = auto_n(pr);
            n = Some(nn);
            let plus = spec.id == TheoremId::TwoOddBonesPlus;
            let q = move |p: usize| if plus { 2 * p + 1 } else { 2 * p - 1 };
            let pp = spec.p.or_else(|| two_bone_p(&pr.admitting, q));
            p_used = pp;
            let fits = pp.is_some_and(|p| pr.admitting.iter().all(|&x| x == p || x == q(p)));
            let b = if plus {
                3 * nn - 8
            } else {
                nn * nn - 3 * nn + 1
            };
            let label = match pp {
                Some(p) => format!("A ⊆ {{{p}, {}}}", q(p)),
                None => "A ⊆ {p, q} for some odd p >= 3".into(),
            };
            (
                vec![
                    hyp(label, fits),
                    hyp(format!("α_l < {nn}"), pr.alpha_l < nn),
                ],
                Some(b),
                actual <= b,
            )
        }
        TheoremId::SingleEvenBone => {
            let pr = profile.as_ref().unwrap();
            let nn = auto_n(pr);
            let mm = auto_m(pr);
            n = Some(nn);
            m = Some(mm);
            let pp = spec.p.or(match pr.admitting[..] {
                [] => Some(1),
                [x] if x % 2 == 0 => Some(x / 2),
                _ => None,
            });
            p_used = pp;
            let fits = pp.is_some_and(|p| pr.admitting.iter().all(|&x| x == 2 * p));
            let b = (mm - 1) * (nn - 3) + 1;
            (
                vec![
                    hyp(
                        match pp {
                            Some(p) => format!("A ⊆ {{{}}}", 2 * p),
                            None => "A is a single even index".into(),
                        },
                        fits,
                    ),
                    hyp(format!("ω < {mm}"), pr.omega < mm),
                    hyp(format!("α_l < {nn}"), pr.alpha_l < nn),
                ],
                Some(b),
                actual <= b,
            )
        }
        TheoremId::AllEvenBones => {
            let pr = profile.as_ref().unwrap();
            let nn = auto_n(pr);
            n = Some(nn);
            let b = 2 * nn - 6;
            (
                vec![
                    hyp(
                        "admitting set is even",
                        pr.admitting.iter().all(|x| x % 2 == 0),
                    ),
                    hyp("triangle-free", pr.omega < 3),
                    hyp(format!("α_l < {nn}"), pr.alpha_l < nn),
                ],
                Some(b),
                actual <= b,
            )
        }
        TheoremId::TreeDeficiency => {
            let (mm, nn) = (spec.m.unwrap(), spec.n.unwrap());
            let target = t_tree(mm, nn)?;
            let same = trees_isomorphic(g, &target);
            let b = tree_deficiency_formula(mm, nn);
            (
                vec![hyp(format!("G ≅ T_({mm},{nn})"), same)],
                Some(b),
                actual == b,
            )
        }
        TheoremId::SnailHorn => {
            if g.n() < 2 {
                (vec![hyp("nontrivial", false)], None, true)
            } else {
                match is_deficiency_critical(g, CriticalityMode::Exhaustive) {
                    Ok(c) => (
                        vec![
                            hyp("nontrivial", true),
                            hyp("deficiency-critical", c.verdict == Verdict::Critical),
                        ],
                        None,
                        !g.snail_horns().is_empty(),
                    ),
                    Err(e @ Error::SizeGuard { .. }) => return Ok(indeterminate(e.to_string())),
                    Err(e) => return Err(e),
                }
            }
        }
        TheoremId::ModuloQuestion => {
            let pr = profile.as_ref().unwrap();
            let nn = auto_n(pr);
            let mm = auto_m(pr);
            n = Some(nn);
            m = Some(mm);
            let congruent = congruent_one_mod(actual, nn);
            note = Some(format!(
                "deficiency {actual} {} 1 (mod {})",
                if congruent { "≡" } else { "≢" },
                nn - 3
            ));
            (
                vec![
                    hyp(format!("ω < {mm}"), pr.omega < mm),
                    hyp(format!("α_l < {nn}"), pr.alpha_l < nn),
                ],
                None,
                true,
            )
        }
    };
    let hypotheses_met = hypotheses.iter().all(|h| h.holds);
    let outcome = match (hypotheses_met, holds) {
        (false, _) => Outcome::Vacuous,
        (true, true) => Outcome::Pass,
        (true, false) => Outcome::Violation,
    };
    Ok(CheckResult {
        theorem: spec.id,
        m,
        n,
        p: p_used,
        hypotheses,
        hypotheses_met,
        bound,
        actual_deficiency: actual,
        outcome,
        note,
        profile,
        witness: (outcome == Outcome::Violation).then(|| GraphDoc::from(g)),
    })
}
