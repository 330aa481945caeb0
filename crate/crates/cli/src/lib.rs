//! Command-line front end for the `deficiency` library.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use deficiency::graph::{from_edge_list_text, to_dot};
use deficiency::harness::{
    exhaustive_sweep, extremal_search, family_sweep, parse_ranges, write_csv, AdmittingPredicate,
    CheckResult, Outcome, SearchConfig, SearchConstraints, SweepOptions, SweepReport,
};
use deficiency::lm::{lm_best_root, lm_run, lm_run_auto};
use deficiency::matching::{is_deficiency_critical, CriticalityMode};
use deficiency::{
    check_theorem, deficiency, maximum_matching, structure_profile, validate_trace, Error,
    FamilySpec, Graph, GraphDoc, TheoremId, TheoremSpec,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "deficiency",
    version,
    about = "Matching deficiency, bones and bound checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a family member and write its JSON.
    Construct {
        #[arg(long)]
        family: String,
        /// Comma-separated key=value pairs; sequences use '/', e.g. a=1/2.
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print deficiency and structural parameters.
    Analyze {
        file: PathBuf,
        /// Largest bone index searched (default n - 4).
        #[arg(long)]
        max_bone: Option<usize>,
        #[arg(long, value_enum, default_value_t = Critical::Skip)]
        critical: Critical,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the levelling-matching bound.
    Lm {
        file: PathBuf,
        /// `auto` (smallest snail head), `best` (all heads) or a vertex id.
        #[arg(long, default_value = "auto")]
        root: String,
        #[arg(long)]
        explain: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check one theorem on one graph.
    Verify {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive sweep over small graphs, or a sweep over a family grid.
    Sweep {
        #[arg(long)]
        theorem: Option<String>,
        #[arg(long, default_value_t = 6)]
        nmax: usize,
        #[arg(long)]
        family: Option<String>,
        /// Grid such as m=3..7:2,n=4..6.
        #[arg(long)]
        range: Option<String>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<usize>,
        /// Count isomorphism classes meeting the hypotheses.
        #[arg(long)]
        dedup: bool,
        /// CSV report path.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Directory for JSON dumps of violating graphs.
        #[arg(long)]
        witness_dir: Option<PathBuf>,
    },
    /// Hill-climbing search for large deficiency under constraints.
    Search {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        alpha_l_max: usize,
        #[arg(long)]
        omega_max: Option<usize>,
        /// any, empty, nonempty, odd, even, odd-singleton, or indices like 3/7.
        #[arg(long, default_value = "any")]
        admitting: String,
        #[arg(long, default_value_t = 2000)]
        iters: usize,
        #[arg(long, default_value_t = 200)]
        patience: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Convert a graph file to DOT or canonical JSON.
    Export {
        #[arg(long, value_enum)]
        format: Format,
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Critical {
    Exhaustive,
    DeleteOne,
    Skip,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Dot,
    Json,
}

/// Reads graph JSON, or the edge-list text format when the file does not
/// start with `{`.
pub fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let g = if text.trim_start().starts_with('{') {
        Graph::from_json(&text)?
    } else {
        from_edge_list_text(&text)?
    };
    Ok(g)
}

fn write_file(path: &Path, text: &str) -> anyhow::Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn fmt_set(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn parse_params(text: &str) -> anyhow::Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let Some((k, v)) = part.split_once('=') else {
            bail!("expected key=value, got {part:?}");
        };
        out.insert(k.trim().to_string(), v.trim().to_string());
    }
    Ok(out)
}

fn print_check(out: &mut dyn Write, r: &CheckResult) -> anyhow::Result<()> {
    writeln!(out, "theorem     {}", r.theorem)?;
    let param = |v: Option<usize>| v.map_or("-".to_string(), |x| x.to_string());
    writeln!(
        out,
        "parameters  m={} n={} p={}",
        param(r.m),
        param(r.n),
        param(r.p)
    )?;
    for h in &r.hypotheses {
        writeln!(out, "  [{}] {}", if h.holds { "x" } else { " " }, h.name)?;
    }
    writeln!(
        out,
        "hypotheses  {}",
        if r.hypotheses_met { "met" } else { "not met" }
    )?;
    if let Some(b) = r.bound {
        writeln!(out, "bound       {b}")?;
    }
    writeln!(out, "deficiency  {}", r.actual_deficiency)?;
    if let Some(note) = &r.note {
        writeln!(out, "note        {note}")?;
    }
    let verdict = match r.outcome {
        Outcome::Pass => "pass",
        Outcome::Vacuous => "pass (vacuous)",
        Outcome::Violation => "VIOLATION",
        Outcome::Indeterminate => "indeterminate",
    };
    writeln!(out, "result      {verdict}")?;
    Ok(())
}

fn outcome_code(o: Outcome) -> i32 {
    match o {
        Outcome::Pass | Outcome::Vacuous => EXIT_PASS,
        Outcome::Violation => EXIT_VIOLATION,
        Outcome::Indeterminate => EXIT_USAGE,
    }
}

fn print_sweep(out: &mut dyn Write, r: &SweepReport) -> anyhow::Result<()> {
    writeln!(out, "instances       {}", r.instances)?;
    writeln!(out, "hypotheses met  {}", r.hypotheses_met)?;
    writeln!(out, "passes          {}", r.passes)?;
    writeln!(out, "vacuous         {}", r.vacuous)?;
    writeln!(out, "violations      {}", r.violations)?;
    writeln!(out, "indeterminate   {}", r.indeterminate)?;
    if let Some(d) = r.max_deficiency {
        writeln!(out, "max deficiency  {d}")?;
    }
    if let Some(c) = r.distinct_classes {
        writeln!(out, "classes         {c}")?;
    }
    Ok(())
}

/// Parameters may still be filled per instance by a family sweep, so
/// validation is left to the callers that have the final values.
fn spec_for(
    theorem: &str,
    m: Option<usize>,
    n: Option<usize>,
    p: Option<usize>,
) -> anyhow::Result<TheoremSpec> {
    let id: TheoremId = theorem.parse()?;
    Ok(TheoremSpec::new(id).with(m, n, p))
}

fn execute(cmd: Command, out: &mut dyn Write) -> anyhow::Result<i32> {
    match cmd {
        Command::Construct {
            family,
            params,
            out: path,
        } => {
            let spec = FamilySpec::from_params(&family, &parse_params(&params)?)?;
            let g = spec.build()?;
            let mut doc = GraphDoc::from(&g);
            doc.family = Some(spec.annotation());
            match path {
                Some(p) => {
                    write_file(&p, &doc.to_json())?;
                    writeln!(
                        out,
                        "{}: {} vertices, {} edges -> {}",
                        g.name().unwrap_or(&family),
                        g.n(),
                        g.edge_count(),
                        p.display()
                    )?;
                }
                None => writeln!(out, "{}", doc.to_json())?,
            }
            Ok(EXIT_PASS)
        }
        Command::Analyze {
            file,
            max_bone,
            critical,
            out: path,
        } => {
            let g = read_graph(&file)?;
            let mm = maximum_matching(&g);
            let profile = structure_profile(&g, max_bone)?;
            writeln!(out, "vertices        {}", g.n())?;
            writeln!(out, "edges           {}", g.edge_count())?;
            writeln!(out, "matching size   {}", mm.edges.len())?;
            writeln!(out, "deficiency      {}", mm.deficiency)?;
            writeln!(out, "unsaturated     {}", fmt_set(&mm.unsaturated))?;
            writeln!(out, "alpha_l         {}", profile.alpha_l)?;
            writeln!(out, "omega           {}", profile.omega)?;
            let complete = if profile.admitting_is_complete(&g) {
                ""
            } else {
                " (partial)"
            };
            writeln!(
                out,
                "admitting       {} up to {}{complete}",
                fmt_set(&profile.admitting),
                profile.admitting_cap
            )?;
            writeln!(out, "snail horns     {}", profile.snail_horns)?;
            writeln!(out, "claw-free       {}", profile.claw_free)?;
            writeln!(out, "triangle-free   {}", profile.triangle_free)?;
            let crit = match critical {
                Critical::Skip => None,
                Critical::Exhaustive => {
                    Some(is_deficiency_critical(&g, CriticalityMode::Exhaustive)?)
                }
                Critical::DeleteOne => {
                    Some(is_deficiency_critical(&g, CriticalityMode::DeleteOne)?)
                }
            };
            if let Some(c) = &crit {
                let verdict = serde_json::to_value(c.verdict)?;
                writeln!(
                    out,
                    "critical        {}",
                    verdict.as_str().unwrap_or_default()
                )?;
                if let Some(w) = &c.witness {
                    writeln!(
                        out,
                        "  witness       {} (deficiency {})",
                        fmt_set(&w.vertices),
                        w.deficiency
                    )?;
                }
            }
            if let Some(p) = path {
                let doc = serde_json::json!({
                    "matching": mm,
                    "profile": profile,
                    "critical": crit,
                });
                write_file(&p, &serde_json::to_string_pretty(&doc)?)?;
            }
            Ok(EXIT_PASS)
        }
        Command::Lm {
            file,
            root,
            explain,
            out: path,
        } => {
            let g = read_graph(&file)?;
            let trace = match root.as_str() {
                "auto" => lm_run_auto(&g)?,
                "best" => lm_best_root(&g)?,
                v => lm_run(&g, v.parse().with_context(|| format!("bad root {v:?}"))?)?,
            };
            let exact = deficiency(&g);
            if explain {
                write!(out, "{}", trace.explain())?;
            }
            let tight = if trace.bound == exact { " (tight)" } else { "" };
            writeln!(out, "root            {}", trace.root)?;
            writeln!(out, "bound           {}", trace.bound)?;
            writeln!(out, "deficiency      {exact}{tight}")?;
            let violations = match structure_profile(&g, None) {
                Ok(p) => Some(validate_trace(&g, &trace, &p)?),
                Err(Error::SizeGuard { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            match &violations {
                Some(v) if v.is_empty() => writeln!(out, "trace checks    ok")?,
                Some(v) => {
                    for x in v {
                        writeln!(out, "trace violation {}", x.detail)?;
                    }
                }
                None => writeln!(out, "trace checks    skipped (size guard)")?,
            }
            if let Some(p) = path {
                write_file(&p, &serde_json::to_string_pretty(&trace)?)?;
            }
            let failed = trace.bound < exact || violations.is_some_and(|v| !v.is_empty());
            Ok(if failed { EXIT_VIOLATION } else { EXIT_PASS })
        }
        Command::Verify {
            theorem,
            m,
            n,
            p,
            file,
            out: path,
        } => {
            let spec = spec_for(&theorem, m, n, p)?;
            let g = read_graph(&file)?;
            let r = check_theorem(&g, &spec)?;
            print_check(out, &r)?;
            if let Some(path) = path {
                write_file(&path, &serde_json::to_string_pretty(&r)?)?;
            }
            Ok(outcome_code(r.outcome))
        }
        Command::Sweep {
            theorem,
            nmax,
            family,
            range,
            m,
            n,
            p,
            dedup,
            out: path,
            witness_dir,
        } => {
            let spec = theorem
                .as_deref()
                .map(|t| spec_for(t, m, n, p))
                .transpose()?;
            let report = match (family, spec) {
                (Some(fam), spec) => {
                    let ranges = parse_ranges(range.as_deref().unwrap_or(""))?;
                    family_sweep(&fam, &ranges, spec.as_ref())?
                }
                (None, Some(spec)) => {
                    let opts = SweepOptions {
                        keep_rows: path.is_some(),
                        dedup,
                    };
                    exhaustive_sweep(&spec, nmax, opts)?
                }
                (None, None) => bail!("sweep needs --theorem or --family"),
            };
            print_sweep(out, &report)?;
            if let Some(p) = path {
                let file =
                    fs::File::create(&p).with_context(|| format!("writing {}", p.display()))?;
                write_csv(&report.rows, file)?;
            }
            if let Some(dir) = witness_dir {
                fs::create_dir_all(&dir)?;
                for (k, r) in report.violating.iter().enumerate() {
                    write_file(
                        &dir.join(format!("violation-{k:04}.json")),
                        &serde_json::to_string_pretty(r)?,
                    )?;
                }
            }
            Ok(if report.violations > 0 {
                EXIT_VIOLATION
            } else if report.indeterminate > 0 {
                EXIT_USAGE
            } else {
                EXIT_PASS
            })
        }
        Command::Search {
            vertices,
            alpha_l_max,
            omega_max,
            admitting,
            iters,
            patience,
            seed,
            out: path,
        } => {
            let c = SearchConstraints {
                vertices,
                alpha_l_max,
                omega_max,
                admitting: AdmittingPredicate::parse(&admitting)?,
            };
            let cfg = SearchConfig {
                iterations: iters,
                patience,
                seed,
            };
            let r = extremal_search(&c, &cfg)?;
            writeln!(out, "iterations      {}", r.iterations)?;
            writeln!(out, "feasible visits {}", r.feasible_visits)?;
            writeln!(out, "restarts        {}", r.restarts)?;
            match (&r.best, r.best_deficiency) {
                (Some(doc), Some(d)) => {
                    writeln!(out, "best deficiency {d}")?;
                    writeln!(
                        out,
                        "best graph      {} vertices, {} edges",
                        doc.n,
                        doc.edges.len()
                    )?;
                    if let Some(c) = r.congruent_one_mod {
                        writeln!(out, "d = 1 mod {}     {c}", alpha_l_max + 1 - 3)?;
                    }
                }
                _ => writeln!(out, "no graph satisfies the constraints within the budget")?,
            }
            if let Some(p) = path {
                write_file(&p, &serde_json::to_string_pretty(&r)?)?;
            }
            Ok(EXIT_PASS)
        }
        Command::Export {
            format,
            file,
            out: path,
        } => {
            let g = read_graph(&file)?;
            let text = match format {
                Format::Dot => to_dot(&g),
                Format::Json => g.to_json() + "\n",
            };
            match path {
                Some(p) => write_file(&p, &text)?,
                None => write!(out, "{text}")?,
            }
            Ok(EXIT_PASS)
        }
    }
}

/// Parses `argv` (including the program name), runs the command and returns
/// the exit code. Output goes to `out`, diagnostics to `err`.
pub fn run_cli<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_USAGE
        }
    }
}
