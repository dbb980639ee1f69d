//! Command-line frontend. Subcommands wrap the library pipeline stages;
//! all outputs are plain text tables and byte-identical across reruns.
//!
//! Exit codes: 0 success, 2 input error, 3 logical conflict, 4
//! verification failure.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use knotless::classify::{classify_family, Catalogs, ClassifyError};
use knotless::exec::ExecMode;
use knotless::family::{family_closure, Family};
use knotless::fixtures;
use knotless::graph::Graph;
use knotless::graph6::decode_graph6;
use knotless::minor::{one_step_minors, verify_minor_witness, MinorWitness};
use knotless::{
    audit_minimality, canonical_key, edge_additions, expansions_to_size, standard_catalogs,
    vertex_splits, KnotlessEvidence,
};

#[derive(Parser)]
#[command(name = "knotless", version, about = "Obstruction-set search toolkit")]
struct Cli {
    /// Run single-threaded even when the parallel feature is compiled in.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Close a seed graph under the triangle-Y moves and summarize.
    Family {
        #[command(flatten)]
        input: GraphInput,
        /// Write the family dump (one member per line) here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Stage-by-stage obstruction screening of a family dump.
    Classify {
        /// Family dump produced by the family subcommand.
        #[arg(long)]
        family: PathBuf,
        /// Catalog file from the catalogs subcommand; built in-process
        /// when omitted.
        #[arg(long)]
        catalogs: Option<PathBuf>,
        /// Write per-member status lines here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Fail (exit 4) if any member is left unresolved.
        #[arg(long)]
        strict: bool,
    },
    /// Order and size histograms of a graph6 catalog or family dump.
    Stats {
        /// File with one graph6 string per line (first tab field is used,
        /// so family dumps work unchanged).
        #[arg(long)]
        input: PathBuf,
    },
    /// Write the knotted/knotless seed catalogs used by classify.
    Catalogs {
        #[arg(long)]
        out: PathBuf,
    },
    /// One-edge additions, vertex splits, or iterated growth of a graph.
    Expand {
        #[command(flatten)]
        input: GraphInput,
        #[command(flatten)]
        op: ExpandOp,
        /// Restrict vertex splits to disjoint neighborhood halves.
        #[arg(long)]
        disjoint_only: bool,
        /// Write one canonical graph6 per resulting class here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// One-step minor classes of a graph, optional audits.
    Minors {
        #[command(flatten)]
        input: GraphInput,
        /// Verify this minor-witness file against the input graph
        /// (exit 4 if it does not check out).
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Audit every minor class for knotless embeddability.
        #[arg(long)]
        audit: bool,
        /// Write one canonical graph6 per minor class here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Built-in graph: K6, K7, K3311, Heawood, H1, H2, G1-G3, T1-T6.
    #[arg(long)]
    fixture: Option<String>,
    /// Graph given directly as a graph6 string.
    #[arg(long)]
    seed: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct ExpandOp {
    /// All one-edge additions up to isomorphism.
    #[arg(long)]
    additions: bool,
    /// All vertex splits up to isomorphism.
    #[arg(long)]
    splits: bool,
    /// Everything reachable at exactly this edge count.
    #[arg(long)]
    to_size: Option<usize>,
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> CliError {
        CliError { code: 2, message: message.into() }
    }

    fn conflict(message: impl Into<String>) -> CliError {
        CliError { code: 3, message: message.into() }
    }

    fn verify(message: impl Into<String>) -> CliError {
        CliError { code: 4, message: message.into() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mode = if cli.sequential { ExecMode::Sequential } else { ExecMode::Parallel };
    match run(cli.command, mode) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn run(command: Command, mode: ExecMode) -> Result<(), CliError> {
    match command {
        Command::Family { input, out } => cmd_family(&input.resolve()?, out.as_deref(), mode),
        Command::Classify { family, catalogs, out, strict } => {
            cmd_classify(&family, catalogs.as_deref(), out.as_deref(), strict, mode)
        }
        Command::Stats { input } => cmd_stats(&input),
        Command::Catalogs { out } => cmd_catalogs(&out, mode),
        Command::Expand { input, op, disjoint_only, out } => {
            cmd_expand(&input.resolve()?, &op, disjoint_only, out.as_deref(), mode)
        }
        Command::Minors { input, witness, audit, out } => {
            cmd_minors(&input.resolve()?, witness.as_deref(), audit, out.as_deref(), mode)
        }
    }
}

impl GraphInput {
    fn resolve(&self) -> Result<Graph, CliError> {
        if let Some(name) = &self.fixture {
            return fixture_by_name(name)
                .ok_or_else(|| CliError::input(format!("unknown fixture {name}")));
        }
        let seed = self.seed.as_deref().expect("clap enforces one input source");
        decode_graph6(seed).map_err(|e| CliError::input(format!("bad graph6 seed: {e}")))
    }
}

fn fixture_by_name(name: &str) -> Option<Graph> {
    let t = fixtures::t_graphs();
    match name.to_ascii_lowercase().as_str() {
        "k6" => Some(Graph::complete(6)),
        "k7" => Some(Graph::complete(7)),
        "k3311" => Some(Graph::complete_multipartite(&[3, 3, 1, 1])),
        "heawood" => Some(fixtures::heawood()),
        "h1" => Some(fixtures::h1()),
        "h2" => Some(fixtures::h2()),
        "g1" => Some(fixtures::g1()),
        "g2" => Some(fixtures::g2()),
        "g3" => Some(fixtures::g3()),
        "t1" => Some(t[0].clone()),
        "t2" => Some(t[1].clone()),
        "t3" => Some(t[2].clone()),
        "t4" => Some(t[3].clone()),
        "t5" => Some(t[4].clone()),
        "t6" => Some(t[5].clone()),
        _ => None,
    }
}

fn cmd_family(seed: &Graph, out: Option<&Path>, mode: ExecMode) -> Result<(), CliError> {
    let fam = family_closure(seed, mode);
    let size = fam.members().next().map(|r| r.graph.size()).unwrap_or(0);
    println!("{} members, size {}", fam.len(), size);
    let orders = fam.members().map(|r| r.graph.order());
    print_histogram("order", orders);
    if let Some(path) = out {
        write_file(path, &fam.dump())?;
    }
    Ok(())
}

fn cmd_classify(
    family_path: &Path,
    catalog_path: Option<&Path>,
    out: Option<&Path>,
    strict: bool,
    mode: ExecMode,
) -> Result<(), CliError> {
    let family = Family::from_dump(&read_file(family_path)?)
        .map_err(|e| CliError::input(format!("{}: {e}", family_path.display())))?;
    let catalogs = match catalog_path {
        Some(path) => Catalogs::from_text(&read_file(path)?).map_err(classify_error)?,
        None => standard_catalogs(mode).map_err(classify_error)?,
    };
    let report = classify_family(&family, &catalogs, mode);
    report.validate(&family, &catalogs).map_err(CliError::conflict)?;

    let c = report.counts;
    println!("stage\tcount");
    println!("total\t{}", c.total);
    println!("criterion1\t{}", c.criterion1);
    println!("criterion2\t{}", c.criterion2);
    println!("ancestor-criterion2\t{}", c.ancestor_criterion2);
    println!("nik-descendant\t{}", c.nik_descendant);
    println!("contraction-ik\t{}", c.contraction_ik);
    println!("unresolved\t{}", c.unresolved);
    for key in &report.axioms_used {
        println!("external-figure axiom\t{}", key.as_str());
    }
    if let Some(path) = out {
        write_file(path, &report.status_lines())?;
    }
    if strict && c.unresolved > 0 {
        return Err(CliError::verify(format!("{} members unresolved", c.unresolved)));
    }
    Ok(())
}

fn classify_error(e: ClassifyError) -> CliError {
    match e {
        ClassifyError::BadCatalogLine { .. } => CliError::input(e.to_string()),
        _ => CliError::conflict(e.to_string()),
    }
}

fn cmd_stats(input: &Path) -> Result<(), CliError> {
    let text = read_file(input)?;
    let mut orders: Vec<usize> = Vec::new();
    let mut sizes: Vec<usize> = Vec::new();
    let mut bad = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        if raw.trim().is_empty() {
            continue;
        }
        let head = raw.split('\t').next().unwrap();
        match decode_graph6(head) {
            Ok(g) => {
                orders.push(g.order());
                sizes.push(g.size());
            }
            Err(e) => bad.push((idx + 1, e)),
        }
    }
    if !bad.is_empty() {
        for (line, e) in &bad {
            eprintln!("line {line}: {e}");
        }
        return Err(CliError::input(format!("{} undecodable lines", bad.len())));
    }
    print_histogram("order", orders.into_iter());
    println!();
    print_histogram("size", sizes.into_iter());
    Ok(())
}

fn cmd_catalogs(out: &Path, mode: ExecMode) -> Result<(), CliError> {
    let catalogs = standard_catalogs(mode).map_err(classify_error)?;
    write_file(out, &catalogs.to_text())?;
    println!("{} knotted, {} knotless", catalogs.ik.len(), catalogs.nik.len());
    Ok(())
}

fn cmd_expand(
    seed: &Graph,
    op: &ExpandOp,
    disjoint_only: bool,
    out: Option<&Path>,
    mode: ExecMode,
) -> Result<(), CliError> {
    let classes = if op.additions {
        edge_additions(seed).map_err(|e| CliError::input(e.to_string()))?
    } else if op.splits {
        vertex_splits(seed, disjoint_only)
    } else {
        let target = op.to_size.expect("clap enforces one operation");
        expansions_to_size(seed, target, mode).map_err(|e| CliError::input(e.to_string()))?
    };
    println!("{} classes", classes.len());
    let lines: String = classes.keys().map(|k| format!("{}\n", k.as_str())).collect();
    print!("{lines}");
    if let Some(path) = out {
        write_file(path, &lines)?;
    }
    Ok(())
}

fn cmd_minors(
    host: &Graph,
    witness: Option<&Path>,
    audit: bool,
    out: Option<&Path>,
    mode: ExecMode,
) -> Result<(), CliError> {
    if let Some(path) = witness {
        let w = MinorWitness::parse(&read_file(path)?)
            .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
        if !verify_minor_witness(host, &w) {
            return Err(CliError::verify(format!("witness {} does not verify", w.name)));
        }
        println!("witness {} verifies", w.name);
        return Ok(());
    }
    if audit {
        let report = audit_minimality(host, |_| false, mode);
        println!("minor\tevidence");
        for m in &report.minors {
            let evidence = match &m.evidence {
                KnotlessEvidence::TwoApex(w) => format!("2-apex {:?}", w.deleted),
                KnotlessEvidence::TwoApexDescendant(d) => {
                    format!("2-apex descendant {}", d.as_str())
                }
                KnotlessEvidence::Catalog => "catalog".to_string(),
                KnotlessEvidence::Unresolved => "unresolved".to_string(),
            };
            println!("{}\t{}", m.key.as_str(), evidence);
        }
        if !report.all_resolved() {
            return Err(CliError::verify(format!(
                "{} minor classes unresolved",
                report.unresolved().count()
            )));
        }
        return Ok(());
    }
    let classes = one_step_minors(host);
    println!("{} classes", classes.len());
    let lines: String = classes.keys().map(|k| format!("{}\n", k.as_str())).collect();
    print!("{lines}");
    if let Some(path) = out {
        write_file(path, &lines)?;
    }
    let _ = canonical_key(host);
    Ok(())
}

fn print_histogram(label: &str, values: impl Iterator<Item = usize>) {
    let mut hist: BTreeMap<usize, usize> = BTreeMap::new();
    for v in values {
        *hist.entry(v).or_default() += 1;
    }
    println!("{label}\tcount");
    for (value, count) in hist {
        println!("{value}\t{count}");
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, content: &str) -> Result<(), CliError> {
    std::fs::write(path, content)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}
