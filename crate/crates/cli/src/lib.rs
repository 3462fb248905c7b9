//! Command implementations for the `cluster-recog` binary.

pub mod format;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{ArgGroup, Parser, Subcommand};
use serde::Serialize;

use cluster_recog::bm::{bm_equivalent, invariants, DEFAULT_ORBIT_LIMIT};
use cluster_recog::catalog::{
    generate_exceptional, load_catalog, match_entry, render_catalog, Catalog, CatalogEntry, CatalogError,
};
use cluster_recog::explorer::{enumerate_class, Decider, ExploreError};
use cluster_recog::recognizer::{recognize_with, RecognizeError, RecognizeOptions, RecognizedVerdict};
use cluster_recog::{mutate_seq, Diagram, DiagramError, ExplorationLimits};

pub use format::{parse_diagram, render_diagram, render_dot, FormatError};

/// Environment variable holding default exploration limits, e.g.
/// `max_members=200000,max_weight=4`.
pub const LIMITS_ENV: &str = "CLUSTER_RECOG_LIMITS";

pub const EXIT_OK: u8 = 0;
pub const EXIT_INFINITE: u8 = 1;
pub const EXIT_INCONCLUSIVE: u8 = 2;
pub const EXIT_INPUT: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "cluster-recog", version, about = "Mutation, finite-type recognition and catalogs of diagrams")]
pub struct Cli {
    /// Worker threads (output does not depend on this).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Exploration limits `max_members=N,max_weight=W`; overrides the environment.
    #[arg(long, global = true)]
    pub limits: Option<String>,
    /// Prose instead of JSON.
    #[arg(long, global = true)]
    pub human: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that a file describes a valid diagram.
    Validate { path: PathBuf },
    /// Mutate at the given vertices, in order (`--at` steps first).
    #[command(group(ArgGroup::new("steps").required(true).multiple(true).args(["at", "seq"])))]
    Mutate {
        path: PathBuf,
        #[arg(long)]
        at: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        seq: Vec<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide 2-finiteness.
    Recognize {
        path: PathBuf,
        /// Report the vertices of a minimal 2-infinite subdiagram.
        #[arg(long)]
        witness: bool,
        /// Report the catalog label of the witness.
        #[arg(long)]
        label: bool,
        /// Report a mutation path to a (extended) Dynkin member.
        #[arg(long)]
        reduce: bool,
    },
    /// Size of the mutation class.
    Class {
        path: PathBuf,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        stats: bool,
    },
    /// Invariants of the underlying graph over F2.
    #[command(group(ArgGroup::new("query").required(true).args(["invariants", "equiv"])))]
    Bm {
        path: PathBuf,
        #[arg(long)]
        invariants: bool,
        /// Basic-move equivalence with the graph of another file.
        #[arg(long)]
        equiv: Option<PathBuf>,
    },
    /// Catalog of minimal 2-infinite diagrams.
    Catalog {
        #[command(subcommand)]
        action: CatalogCommand,
    },
    /// Graphviz output.
    ExportDot { path: PathBuf },
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    /// Regenerate the table for E6, E7 or E8 extensions.
    Generate {
        #[arg(long, value_parser = clap::value_parser!(u8).range(6..=8))]
        base: u8,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// List the built-in catalog or a catalog file.
    List {
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Catalog entry matching a diagram.
    Match { path: PathBuf },
}

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn input(m: impl ToString) -> Self {
        Failure { code: EXIT_INPUT, message: m.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::input(e)
    }
}

impl From<ExploreError> for Failure {
    fn from(e: ExploreError) -> Self {
        let code = if matches!(e, ExploreError::LimitExceeded { .. }) { EXIT_INCONCLUSIVE } else { EXIT_INPUT };
        Failure { code, message: e.to_string() }
    }
}

impl From<RecognizeError> for Failure {
    fn from(e: RecognizeError) -> Self {
        match e {
            RecognizeError::Explore(e) => e.into(),
            e => Failure::input(e),
        }
    }
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::Explore(e) => e.into(),
            CatalogError::Inconclusive(_) => Failure { code: EXIT_INCONCLUSIVE, message: e.to_string() },
            e => Failure::input(e),
        }
    }
}

impl From<DiagramError> for Failure {
    fn from(e: DiagramError) -> Self {
        Failure::input(e)
    }
}

pub fn resolve_limits(flag: Option<&str>, env: Option<&str>) -> Result<ExplorationLimits, Failure> {
    let mut lim = ExplorationLimits::default();
    for (src, spec) in [(LIMITS_ENV, env), ("--limits", flag)] {
        if let Some(spec) = spec {
            lim = ExplorationLimits::parse(spec).map_err(|e| Failure::input(format!("{src}: {e}")))?;
        }
    }
    Ok(lim)
}

fn read_diagram(path: &Path) -> Result<Diagram, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    parse_diagram(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn emit<T: Serialize>(out: &mut dyn Write, v: &T) -> Result<(), Failure> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("serializable"))?;
    Ok(())
}

/// Runs a parsed command line; returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write) -> Result<u8, Failure> {
    let env = std::env::var(LIMITS_ENV).ok();
    let limits = resolve_limits(cli.limits.as_deref(), env.as_deref())?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(Failure::input("--threads must be positive"));
        }
        pool = pool.num_threads(t);
    }
    let pool = pool.build().map_err(|e| Failure::input(e.to_string()))?;
    let mut buf: Vec<u8> = Vec::new();
    let code = pool.install(|| dispatch(&cli, limits, &mut buf));
    out.write_all(&buf)?;
    code
}

fn dispatch(cli: &Cli, limits: ExplorationLimits, out: &mut dyn Write) -> Result<u8, Failure> {
    let human = cli.human;
    match &cli.command {
        Command::Validate { path } => cmd_validate(path, human, out),
        Command::Mutate { path, at, seq, output } => {
            let d = read_diagram(path)?;
            let steps: Vec<usize> = at.iter().chain(seq).copied().collect();
            let m = mutate_seq(&d, &steps)?;
            match output {
                Some(p) => std::fs::write(p, render_diagram(&m))?,
                None => out.write_all(render_diagram(&m).as_bytes())?,
            }
            Ok(EXIT_OK)
        }
        Command::Recognize { path, witness, label, reduce } => {
            cmd_recognize(&read_diagram(path)?, limits, [*witness, *label, *reduce], human, out)
        }
        Command::Class { path, limit, stats } => {
            let mut lim = limits;
            if let Some(l) = limit {
                lim.max_members = *l;
            }
            cmd_class(&read_diagram(path)?, lim, *stats, human, out)
        }
        Command::Bm { path, equiv, .. } => cmd_bm(&read_diagram(path)?, equiv.as_deref(), human, out),
        Command::Catalog { action } => cmd_catalog(action, limits, human, out),
        Command::ExportDot { path } => {
            out.write_all(render_dot(&read_diagram(path)?).as_bytes())?;
            Ok(EXIT_OK)
        }
    }
}

#[derive(Serialize)]
struct ValidateReport {
    valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    vertices: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    edges: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cycle: Option<Vec<usize>>,
}

/// Exit 0 for a valid diagram, 1 for a well-formed file violating the
/// diagram conditions, 3 for unreadable or malformed input.
pub fn cmd_validate(path: &Path, human: bool, out: &mut dyn Write) -> Result<u8, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let report = match parse_diagram(&text) {
        Ok(d) => ValidateReport {
            valid: true,
            vertices: Some(d.n()),
            edges: Some(d.edge_count()),
            error: None,
            cycle: None,
        },
        Err(FormatError::Invalid(e)) => {
            let cycle = match &e {
                DiagramError::CycleNotSquare { cycle } => Some(cycle.clone()),
                _ => None,
            };
            ValidateReport { valid: false, vertices: None, edges: None, error: Some(e.to_string()), cycle }
        }
        Err(e) => return Err(Failure::input(format!("{}: {e}", path.display()))),
    };
    if human {
        match &report.error {
            None => writeln!(out, "valid diagram: {} vertices, {} edges", report.vertices.unwrap(), report.edges.unwrap())?,
            Some(e) => writeln!(out, "invalid diagram: {e}")?,
        }
    } else {
        emit(out, &report)?;
    }
    Ok(if report.valid { EXIT_OK } else { EXIT_INFINITE })
}

#[derive(Serialize)]
struct LimitsJson {
    max_members: usize,
    max_weight: u64,
}

#[derive(Serialize)]
struct ReductionJson {
    vertices: Vec<usize>,
    target: String,
    path: Vec<usize>,
}

#[derive(Serialize)]
struct RecognizeJson {
    verdict: String,
    method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reduction: Option<ReductionJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    limits_hit: Option<LimitsJson>,
}

pub fn cmd_recognize(
    d: &Diagram,
    limits: ExplorationLimits,
    [witness, label, reduce]: [bool; 3],
    human: bool,
    out: &mut dyn Write,
) -> Result<u8, Failure> {
    let decider = Decider::new(limits);
    let r = recognize_with(d, RecognizeOptions { limits, reduce }, &decider)?;
    let json = RecognizeJson {
        verdict: r.verdict.to_string(),
        method: r.method.to_string(),
        witness: r.witness.as_ref().filter(|_| witness).map(|w| w.vertices.as_slice().to_vec()),
        label: r.witness.as_ref().filter(|_| label).map(|w| w.label.clone()),
        reduction: r.reduction.as_ref().map(|x| ReductionJson {
            vertices: x.vertices.as_slice().to_vec(),
            target: x.target.clone(),
            path: x.path.iter().map(|s| s.vertex()).collect(),
        }),
        limits_hit: r.limits_hit.map(|l| LimitsJson { max_members: l.max_members, max_weight: l.max_weight }),
    };
    if human {
        writeln!(out, "{} (decided by {})", json.verdict, json.method)?;
        if let Some(w) = &json.witness {
            writeln!(out, "minimal 2-infinite subdiagram on vertices {w:?}")?;
        }
        if let Some(l) = &json.label {
            writeln!(out, "catalog label: {l}")?;
        }
        if let Some(x) = &json.reduction {
            writeln!(out, "mutating at {:?} on vertices {:?} reaches {}", x.path, x.vertices, x.target)?;
        }
        if let Some(l) = &json.limits_hit {
            writeln!(out, "limits hit: max_members={} max_weight={}", l.max_members, l.max_weight)?;
        }
    } else {
        emit(out, &json)?;
    }
    Ok(match r.verdict {
        RecognizedVerdict::Finite => EXIT_OK,
        RecognizedVerdict::Infinite => EXIT_INFINITE,
        RecognizedVerdict::Inconclusive => EXIT_INCONCLUSIVE,
    })
}

#[derive(Serialize)]
struct ClassStats {
    max_weight: u64,
    min_edges: usize,
    max_edges: usize,
}

#[derive(Serialize)]
struct ClassJson {
    size: usize,
    truncated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    stats: Option<ClassStats>,
}

pub fn cmd_class(
    d: &Diagram,
    limits: ExplorationLimits,
    stats: bool,
    human: bool,
    out: &mut dyn Write,
) -> Result<u8, Failure> {
    let (summary, code) = match enumerate_class(d, limits) {
        Ok(s) => (s, EXIT_OK),
        Err(ExploreError::LimitExceeded { partial, .. }) => (*partial, EXIT_INCONCLUSIVE),
        Err(e) => return Err(e.into()),
    };
    let stats = stats.then(|| {
        let edges: Vec<usize> = summary.members.iter().map(|f| f.edges().map_or(0, |e| e.len())).collect();
        ClassStats {
            max_weight: summary.max_weight_seen,
            min_edges: edges.iter().copied().min().unwrap_or(0),
            max_edges: edges.iter().copied().max().unwrap_or(0),
        }
    });
    let json = ClassJson { size: summary.size, truncated: summary.truncated, stats };
    if human {
        if json.truncated {
            writeln!(out, "class exceeds {} members; stopped after {}", limits.max_members, json.size)?;
        } else {
            writeln!(out, "class size {}", json.size)?;
        }
        if let Some(s) = &json.stats {
            writeln!(out, "max weight {}, edges {}..={}", s.max_weight, s.min_edges, s.max_edges)?;
        }
    } else {
        emit(out, &json)?;
    }
    Ok(code)
}

#[derive(Serialize)]
struct BmJson {
    dim_v0: usize,
    dim_v00: usize,
    arf: serde_json::Value,
}

pub fn cmd_bm(d: &Diagram, equiv: Option<&Path>, human: bool, out: &mut dyn Write) -> Result<u8, Failure> {
    let g = d.odd_weight_skeleton();
    if let Some(other) = equiv {
        let h = read_diagram(other)?.odd_weight_skeleton();
        let eq = bm_equivalent(&g, &h, DEFAULT_ORBIT_LIMIT).map_err(|e| Failure {
            code: EXIT_INCONCLUSIVE,
            message: e.to_string(),
        })?;
        if human {
            writeln!(out, "{}", if eq { "BM-equivalent" } else { "not BM-equivalent" })?;
        } else {
            emit(out, &serde_json::json!({ "equivalent": eq }))?;
        }
        return Ok(if eq { EXIT_OK } else { EXIT_INFINITE });
    }
    let inv = invariants(&g);
    if human {
        let arf = inv.arf.map_or("undefined".to_string(), |a| a.to_string());
        writeln!(out, "dim V0: {}\ndim V00: {}\narf: {arf}", inv.dim_v0, inv.dim_v00)?;
    } else {
        let arf = inv.arf.map_or(serde_json::Value::from("undefined"), serde_json::Value::from);
        emit(out, &BmJson { dim_v0: inv.dim_v0, dim_v00: inv.dim_v00, arf })?;
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct EntryJson {
    label: String,
    kind: String,
    vertices: usize,
}

impl From<&CatalogEntry> for EntryJson {
    fn from(e: &CatalogEntry) -> Self {
        EntryJson { label: e.label.clone(), kind: e.kind.to_string(), vertices: e.form.n() }
    }
}

pub fn cmd_catalog(
    action: &CatalogCommand,
    limits: ExplorationLimits,
    human: bool,
    out: &mut dyn Write,
) -> Result<u8, Failure> {
    match action {
        CatalogCommand::Generate { base, output } => {
            let text = render_catalog(&generate_exceptional(*base as usize, limits)?);
            match output {
                Some(p) => std::fs::write(p, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
        CatalogCommand::List { file } => {
            let owned;
            let entries: &[CatalogEntry] = match file {
                Some(p) => {
                    owned = load_catalog(p).map_err(|e| Failure::input(format!("{}: {e}", p.display())))?;
                    &owned
                }
                None => Catalog::builtin().entries(),
            };
            if human {
                for e in entries {
                    writeln!(out, "{}\t{}\t{} vertices", e.label, e.kind, e.form.n())?;
                }
            } else {
                emit(out, &entries.iter().map(EntryJson::from).collect::<Vec<_>>())?;
            }
            Ok(EXIT_OK)
        }
        CatalogCommand::Match { path } => {
            let d = read_diagram(path)?;
            let m = match_entry(&d);
            if human {
                match &m {
                    Some(e) => writeln!(out, "{} ({})", e.label, e.kind)?,
                    None => writeln!(out, "no match")?,
                }
            } else {
                emit(out, &serde_json::json!({ "match": m.as_ref().map(EntryJson::from) }))?;
            }
            Ok(if m.is_some() { EXIT_OK } else { EXIT_INFINITE })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn limits_precedence() {
        let l = resolve_limits(None, Some("max_members=10")).unwrap();
        assert_eq!(l.max_members, 10);
        let l = resolve_limits(Some("max_weight=5"), Some("max_members=10")).unwrap();
        assert_eq!((l.max_members, l.max_weight), (ExplorationLimits::default().max_members, 5));
        assert_eq!(resolve_limits(Some("bogus=1"), None).unwrap_err().code, EXIT_INPUT);
    }
}
