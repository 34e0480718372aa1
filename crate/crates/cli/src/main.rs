//! `surjhom`: command-line front end.
//!
//! Reports are JSON on stdout, a one-line summary goes to stderr. Exit
//! status: 0 on success, 1 when no witness exists or a check fails, 2 on
//! input errors, 3 when a size bound refuses the input.

use std::io::Write as _;
use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use surjhom::catalogue;
use surjhom::checks::{check_names, run_checks};
use surjhom::classify::{classify_reflexive_tournament, classify_small_digraph};
use surjhom::endo::{endomorphisms, is_endo_trivial, is_retract_trivial};
use surjhom::figures::search_figure_tournaments;
use surjhom::gadget::{
    build_cyl, connectify, reduce_base_i, reduce_base_ii, reduce_components, reduce_general_i,
    reduce_general_ii, spill, EmbeddedSubgraph, ReductionInstance,
};
use surjhom::io;
use surjhom::poly::{all_polymorphisms_essentially_unary, enumerate_polymorphisms, find_majority, find_wnu};
use surjhom::{
    find_compaction, find_homomorphism, find_list_homomorphism, find_retraction,
    find_surjective_homomorphism, induced_subgraph, Digraph, HamiltonCycle, ListAssignment,
    RetractionInstance,
};

#[derive(Parser)]
#[command(name = "surjhom", version, about = "Homomorphism problems on small digraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Structure report: predicates, components, endomorphisms.
    Analyze { h: String },
    /// Decide a homomorphism problem and print a witness.
    Solve {
        problem: Problem,
        g: String,
        h: String,
        /// Retraction embedding, a JSON array giving the G vertex of each H vertex.
        #[arg(long)]
        embedding: Option<String>,
        /// Lists, a JSON array of arrays indexed by G vertex.
        #[arg(long)]
        lists: Option<String>,
        /// For compaction, also demand vertex-surjectivity.
        #[arg(long)]
        strict: bool,
    },
    /// Polymorphisms of a given arity.
    Poly {
        h: String,
        #[arg(long)]
        arity: usize,
        #[arg(long, group = "mode")]
        wnu: bool,
        #[arg(long, group = "mode")]
        majority: bool,
        #[arg(long = "essentially-unary", group = "mode")]
        essentially_unary: bool,
    },
    /// Emit a gadget digraph.
    Gadget {
        #[command(subcommand)]
        kind: GadgetKind,
    },
    /// Spill set of a subtournament with a Hamilton cycle.
    Spill {
        h: String,
        #[arg(long, value_delimiter = ',')]
        sub: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        cycle: Option<Vec<usize>>,
    },
    /// Build a reduction instance from a source instance G.
    Reduce(ReduceArgs),
    /// Complexity verdict with witness.
    Classify { h: String },
    /// Run the bundled verification suite.
    VerifyPaper {
        /// Run only these checks.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
    /// Search the 512 cross orientations for the two figure tournaments.
    SearchFigures,
}

#[derive(Clone, Copy, ValueEnum)]
enum Problem {
    Hom,
    Surj,
    Retract,
    Compact,
    List,
}

#[derive(Subcommand)]
enum GadgetKind {
    /// The cylinder Cyl_m.
    Cyl { m: usize },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReduceKind {
    Base1,
    Base2,
    Gen1,
    Gen2,
    Components,
    Connectify,
}

#[derive(Args)]
struct ReduceArgs {
    kind: ReduceKind,
    /// Source instance.
    g: String,
    /// Template.
    h: String,
    /// Base cases: vertex set of the link.
    #[arg(long, value_delimiter = ',')]
    sub: Option<Vec<usize>>,
    /// Base cases: Hamilton cycle of the link, found by search when absent.
    #[arg(long, value_delimiter = ',')]
    cycle: Option<Vec<usize>>,
    /// General cases: links as Hamilton cycles, separated by `;`.
    #[arg(long)]
    chain: Option<String>,
    /// Retraction embedding of the source template into G, as a JSON array.
    #[arg(long)]
    embedding: Option<String>,
    /// Components: index of the strong component in topological order.
    #[arg(long)]
    component: Option<usize>,
    /// Also solve both sides and report whether they agree.
    #[arg(long)]
    check: bool,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] surjhom::Error),
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(surjhom::Error::SizeBound { .. }) => 3,
            _ => 2,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// What a command produced: the JSON report, a summary line and whether
/// the answer was positive.
struct Outcome {
    report: Value,
    summary: String,
    positive: bool,
}

impl Outcome {
    fn yes(report: Value, summary: impl Into<String>) -> Self {
        Outcome { report, summary: summary.into(), positive: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            let text = serde_json::to_string_pretty(&out.report).expect("serialisable");
            // a closed pipe downstream is not an error worth reporting
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            eprintln!("{}", out.summary);
            ExitCode::from(if out.positive { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

/// Reads a digraph from `bundled:<name>` or a JSON/plain-text file.
fn load(spec: &str) -> CliResult<Digraph> {
    if let Some(name) = spec.strip_prefix("bundled:") {
        return Ok(catalogue::bundled(name)?);
    }
    let text = std::fs::read_to_string(Path::new(spec)).map_err(|source| CliError::Read {
        path: spec.to_string(),
        source,
    })?;
    Ok(io::parse(&text)?)
}

fn parse_json<T: serde::de::DeserializeOwned>(what: &str, s: &str) -> CliResult<T> {
    serde_json::from_str(s).map_err(|e| CliError::Usage(format!("bad {what}: {e}")))
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serialisable")
}

fn run(cmd: Command) -> CliResult<Outcome> {
    match cmd {
        Command::Analyze { h } => analyze(&load(&h)?),
        Command::Solve { problem, g, h, embedding, lists, strict } => {
            solve(problem, &load(&g)?, &load(&h)?, embedding, lists, strict)
        }
        Command::Poly { h, arity, wnu, majority, essentially_unary } => {
            poly(&load(&h)?, arity, wnu, majority, essentially_unary)
        }
        Command::Gadget { kind: GadgetKind::Cyl { m } } => gadget_cyl(m),
        Command::Spill { h, sub, cycle } => spill_cmd(&load(&h)?, sub, cycle),
        Command::Reduce(args) => reduce(args),
        Command::Classify { h } => classify(&load(&h)?),
        Command::VerifyPaper { only } => verify_paper(&only),
        Command::SearchFigures => {
            let s = search_figure_tournaments()?;
            let summary = format!(
                "caption one: {} orientations, caption two: {}",
                s.caption_one.len(),
                s.caption_two.len()
            );
            Ok(Outcome::yes(to_value(&s), summary))
        }
    }
}

fn analyze(h: &Digraph) -> CliResult<Outcome> {
    let tournament = h.is_tournament();
    let transitive = if tournament { Some(h.is_transitive_tournament()?) } else { None };
    let comps = h.strong_components();
    let hamilton = if tournament && comps.len() == 1 { Some(h.hamilton_cycle()?.order) } else { None };
    let endos = endomorphisms(h)?;
    let endo_trivial = is_endo_trivial(h)?;
    let retract_trivial = is_retract_trivial(h)?;
    let report = json!({
        "n": h.n(),
        "edges": h.edge_count(),
        "reflexive": h.is_reflexive(),
        "irreflexive": h.is_irreflexive(),
        "tournament": tournament,
        "semicomplete": h.is_semicomplete(),
        "transitive": transitive,
        "strong_components": comps,
        "hamilton_cycle": hamilton,
        "endomorphisms": {
            "total": endos.len(),
            "automorphisms": endos.automorphisms().count(),
            "constants": endos.constants().count(),
            "retractions": endos.retractions().count(),
        },
        "endo_trivial": endo_trivial,
        "retract_trivial": retract_trivial,
    });
    let summary = format!(
        "{} vertices, {} strong components, {} endomorphisms, endo-trivial: {}",
        h.n(),
        comps.len(),
        endos.len(),
        endo_trivial.holds
    );
    Ok(Outcome::yes(report, summary))
}

fn solve(
    problem: Problem,
    g: &Digraph,
    h: &Digraph,
    embedding: Option<String>,
    lists: Option<String>,
    strict: bool,
) -> CliResult<Outcome> {
    let witness = match problem {
        Problem::Hom => find_homomorphism(g, h)?,
        Problem::Surj => find_surjective_homomorphism(g, h)?,
        Problem::Compact => find_compaction(g, h, strict)?,
        Problem::Retract => {
            let e = embedding.ok_or_else(|| CliError::Usage("retract needs --embedding".into()))?;
            let inst = RetractionInstance::new(g.clone(), parse_json("embedding", &e)?, h)?;
            find_retraction(&inst, h)?
        }
        Problem::List => {
            let l = lists.ok_or_else(|| CliError::Usage("list needs --lists".into()))?;
            let lists: ListAssignment = parse_json("lists", &l)?;
            find_list_homomorphism(g, h, &lists)?
        }
    };
    let exists = witness.is_some();
    let mut report = json!({ "exists": exists });
    if let Some(w) = witness {
        report["witness"] = json!(w.image());
    }
    Ok(Outcome {
        report,
        summary: if exists { "witness found".into() } else { "no witness".into() },
        positive: exists,
    })
}

fn poly(h: &Digraph, arity: usize, wnu: bool, majority: bool, unary: bool) -> CliResult<Outcome> {
    let codec = "table[i] is the value on the tuple whose base-n digits, most significant first, spell i";
    let (report, summary, positive) = if wnu {
        let p = find_wnu(h, arity)?;
        let found = p.is_some();
        (json!({ "wnu": p }), format!("WNU of arity {arity}: {found}"), found)
    } else if majority {
        if arity != 3 {
            return Err(CliError::Usage("majority operations are ternary".into()));
        }
        let p = find_majority(h)?;
        let found = p.is_some();
        (json!({ "majority": p }), format!("majority: {found}"), found)
    } else if unary {
        let v = all_polymorphisms_essentially_unary(h, arity)?;
        let s = format!("all {arity}-ary polymorphisms essentially unary: {} ({} inspected)", v.holds, v.inspected);
        (to_value(&v), s, true)
    } else {
        let all = enumerate_polymorphisms(h, arity)?;
        let s = format!("{} polymorphisms of arity {arity}", all.len());
        (json!({ "count": all.len(), "polymorphisms": all }), s, true)
    };
    let mut report = report;
    report["codec"] = json!(codec);
    Ok(Outcome { report, summary, positive })
}

fn gadget_cyl(m: usize) -> CliResult<Outcome> {
    let cyl = build_cyl(m)?;
    let provenance: Vec<Value> = (0..cyl.digraph.n())
        .map(|v| json!({ "copy": cyl.copy_of(v), "position": cyl.position_of(v) }))
        .collect();
    let summary = format!("Cyl_{m}: {} vertices, {} edges", cyl.digraph.n(), cyl.digraph.edge_count());
    let report = json!({
        "n": cyl.digraph.n(),
        "edges": cyl.digraph.edges().map(|(u, v)| [u, v]).collect::<Vec<_>>(),
        "m": m,
        "bottom": cyl.bottom,
        "top": cyl.top,
        "provenance": provenance,
    });
    Ok(Outcome::yes(report, summary))
}

fn link(h: &Digraph, sub: &[usize], cycle: Option<Vec<usize>>) -> CliResult<EmbeddedSubgraph> {
    Ok(match cycle {
        Some(c) => EmbeddedSubgraph::new(h, sub.to_vec(), HamiltonCycle::new(c))?,
        None => EmbeddedSubgraph::with_cycle(h, sub)?,
    })
}

fn spill_cmd(h: &Digraph, sub: Vec<usize>, cycle: Option<Vec<usize>>) -> CliResult<Outcome> {
    let l = link(h, &sub, cycle)?;
    let s = spill(h, &l.cycle)?;
    let summary = format!("spill {}/{} vertices", s.vertices.len(), h.n());
    let report = json!({
        "sub": l.vertices,
        "cycle": l.cycle.order,
        "spill": s.vertices,
        "full": s.is_full(),
        "witnesses": s.witnesses,
    });
    Ok(Outcome::yes(report, summary))
}

fn parse_chain(h: &Digraph, s: &str) -> CliResult<Vec<EmbeddedSubgraph>> {
    s.split(';')
        .map(|part| {
            let cycle: Vec<usize> = part
                .split(',')
                .map(|x| x.trim().parse())
                .collect::<Result<_, _>>()
                .map_err(|_| CliError::Usage(format!("bad chain link `{part}`")))?;
            link(h, &cycle, Some(cycle.clone()))
        })
        .collect()
}

fn reduce(a: ReduceArgs) -> CliResult<Outcome> {
    let g = load(&a.g)?;
    let h = load(&a.h)?;
    let need = |what: &str| CliError::Usage(format!("this reduction needs --{what}"));
    let instance = |template: &Digraph| -> CliResult<RetractionInstance> {
        let e = a.embedding.as_deref().ok_or_else(|| need("embedding"))?;
        Ok(RetractionInstance::new(g.clone(), parse_json("embedding", e)?, template)?)
    };
    let r: ReductionInstance = match a.kind {
        ReduceKind::Base1 | ReduceKind::Base2 => {
            let sub = a.sub.as_deref().ok_or_else(|| need("sub"))?;
            let h0 = link(&h, sub, a.cycle.clone())?;
            if a.kind == ReduceKind::Base1 {
                let src = instance(&induced_subgraph(&h, &h0.vertices)?.0)?;
                reduce_base_i(&h, &h0, &src)?
            } else {
                reduce_base_ii(&h, &h0, &instance(&h)?)?
            }
        }
        ReduceKind::Gen1 | ReduceKind::Gen2 => {
            let chain = parse_chain(&h, a.chain.as_deref().ok_or_else(|| need("chain"))?)?;
            if a.kind == ReduceKind::Gen1 {
                let top = &chain.last().expect("split yields a link").vertices;
                let src = instance(&induced_subgraph(&h, top)?.0)?;
                reduce_general_i(&h, &chain, &src)?
            } else {
                reduce_general_ii(&h, &chain, &instance(&h)?)?
            }
        }
        ReduceKind::Components => {
            reduce_components(&h, a.component.ok_or_else(|| need("component"))?, &g)?
        }
        ReduceKind::Connectify => connectify(&h, &instance(&h)?)?,
    };
    let mut report = json!({
        "digraph": r.digraph,
        "provenance": r.provenance,
        "claim": r.claim,
    });
    if let Some(e) = &r.embedding {
        report["embedding"] = json!(e);
    }
    let mut summary = format!("output has {} vertices", r.digraph.n());
    let mut positive = true;
    if a.check {
        let s = r.check_soundness()?;
        report["soundness"] = to_value(&s);
        positive = s.agrees();
        summary.push_str(&format!("; source {}, target {}", s.source, s.target));
    }
    Ok(Outcome { report, summary, positive })
}

fn classify(h: &Digraph) -> CliResult<Outcome> {
    let c = if h.is_reflexive() && h.is_tournament() && h.n() >= 2 {
        classify_reflexive_tournament(h)?
    } else if h.n() <= 3 {
        classify_small_digraph(h)?
    } else {
        return Err(CliError::Usage(
            "classify takes reflexive tournaments or digraphs on at most 3 vertices".into(),
        ));
    };
    let summary = format!("verdict {:?}", c.verdict);
    Ok(Outcome::yes(to_value(&c), summary))
}

fn verify_paper(only: &[String]) -> CliResult<Outcome> {
    let reports = run_checks(only)?;
    for r in &reports {
        eprintln!("{}", r.line());
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    let summary = format!("{} of {} checks passed", reports.len() - failed, reports.len());
    let report = json!({ "checks": reports, "available": check_names() });
    Ok(Outcome { report, summary, positive: failed == 0 })
}
