//! File formats and the `arbor` command line.
//!
//! [`run`] is the whole program: it parses arguments, executes one
//! subcommand and returns the exit status.
//!
//! | status | meaning |
//! |---|---|
//! | 0 | success, or the property holds |
//! | 1 | the property is false |
//! | 2 | input error |
//! | 3 | precondition violation |
//! | 4 | search budget exhausted |

pub mod formats;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use arbor::discharging::{apply_r1, apply_r2, apply_r3, audit, initial_charges};
use arbor::embedding::{check_preconditions, trace_faces};
use arbor::generate::{gen_instance, Family, GenError, GenParams};
use arbor::graph::find_monochromatic_cycle;
use arbor::oracle::{arboricity_at_most, vertex_arboricity};
use arbor::partition::{partition_with, PartitionError, PartitionOptions};
use arbor::structures::{build_aux_graph, find_triangular_cycle_config_with, DEFAULT_SEARCH_BUDGET};
use arbor::{Graph, RotationSystem};
use clap::{Args, Parser, Subcommand};

use formats::*;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FALSE: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_PRECONDITION: u8 = 3;
pub const EXIT_BUDGET: u8 = 4;

/// A parsed command line.
#[derive(Parser, Debug, Clone)]
#[command(name = "arbor", version, about = "Partition 4-cycle-free toroidal graphs into two induced forests")]
pub struct CommandRequest {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Compute a good 2-coloring and write it as `v c` lines.
    Partition(PartitionArgs),
    /// Check that a coloring has no monochromatic cycle.
    Verify { graph: PathBuf, coloring: PathBuf },
    /// Run the discharging rules on an embedded instance and check every claim.
    Audit {
        graph: PathBuf,
        rotation: PathBuf,
        /// Write the ledger here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exhaustive vertex arboricity for small graphs.
    Oracle {
        graph: PathBuf,
        /// Decide `a(G) <= k` instead of computing `a(G)`.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Generate an instance.
    Gen(GenArgs),
    /// Report genus, 4-cycles, degrees and connectivity.
    Check {
        graph: PathBuf,
        #[arg(long)]
        rotation: Option<PathBuf>,
        #[arg(long)]
        require_embedding: bool,
        /// Also write the triangle graph H with its legend.
        #[arg(long)]
        aux: Option<PathBuf>,
        /// Node budget for the configuration search.
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct PartitionArgs {
    pub graph: PathBuf,
    #[arg(long)]
    pub rotation: Option<PathBuf>,
    /// Refuse inputs that are not certified 4-cycle-free with genus at most 1.
    #[arg(long)]
    pub require_embedding: bool,
    /// Write the reduction steps here.
    #[arg(long)]
    pub trace: Option<PathBuf>,
    /// Node budget for each configuration search.
    #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
    pub budget: u64,
    /// Write the coloring here instead of standard output.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct GenArgs {
    #[arg(long)]
    pub family: Family,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// `MAX` or `MIN..MAX` vertices.
    #[arg(long, default_value = "6..60", value_parser = parse_size)]
    pub size: (usize, usize),
    /// Output prefix: writes PREFIX.adj, PREFIX.rot when embedded, and
    /// PREFIX.manifest.
    #[arg(short, long)]
    pub output: PathBuf,
}

fn parse_size(s: &str) -> Result<(usize, usize), String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("`{t}` is not a size"));
    match s.split_once("..") {
        Some((a, b)) => Ok((num(a)?, num(b.trim_start_matches('='))?)),
        None => Ok((1, num(s)?)),
    }
}

/// An error and the status it maps to.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("budget exhausted: {0}")]
    Budget(String),
    #[error("{0}")]
    False(String),
}

impl CliError {
    pub fn status(&self) -> u8 {
        match self {
            CliError::False(_) => EXIT_FALSE,
            CliError::Input(_) => EXIT_INPUT,
            CliError::Precondition(_) => EXIT_PRECONDITION,
            CliError::Budget(_) => EXIT_BUDGET,
        }
    }
}

type Res = Result<u8, CliError>;

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match CommandRequest::try_parse_from(args) {
        Ok(req) => execute(&req, out, err),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_INPUT
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            }
        }
    }
}

/// Runs an already-parsed request.
pub fn execute(req: &CommandRequest, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let res = match &req.command {
        Command::Partition(a) => cmd_partition(a, out, err),
        Command::Verify { graph, coloring } => cmd_verify(graph, coloring, out),
        Command::Audit { graph, rotation, output } => cmd_audit(graph, rotation, output.as_deref(), out),
        Command::Oracle { graph, k } => cmd_oracle(graph, *k, out),
        Command::Gen(a) => cmd_gen(a, out),
        Command::Check { graph, rotation, require_embedding, aux, budget } => {
            cmd_check(graph, rotation.as_deref(), *require_embedding, aux.as_deref(), *budget, out)
        }
    };
    match res {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.status()
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn emit(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) => write_file(p, text),
        None => out.write_all(text.as_bytes()).map_err(|e| CliError::Input(format!("stdout: {e}"))),
    }
}

fn located(path: &Path, e: ParseError) -> CliError {
    if e.line == 0 {
        CliError::Input(format!("{}: {}", path.display(), e.message))
    } else {
        CliError::Input(format!("{}:{}: {}", path.display(), e.line, e.message))
    }
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    parse_graph(&read(path)?).map_err(|e| located(path, e))
}

fn load_rotation(path: &Path, g: &Graph) -> Result<RotationSystem, CliError> {
    parse_rotation(&read(path)?, g).map_err(|e| located(path, e))
}

/// The first reason `g` falls outside the solver's guarantee, if any.
fn precondition_failure(g: &Graph, rot: Option<&RotationSystem>) -> Option<String> {
    let r = check_preconditions(g, rot);
    if let Some(c) = r.four_cycle {
        return Some(format!("4-cycle {} {} {} {}", c[0], c[1], c[2], c[3]));
    }
    if let Some(e) = r.rotation_error {
        return Some(format!("rotation: {e}"));
    }
    match r.genus {
        Some(gen) if gen > 1 => Some(format!("embedding has genus {gen}")),
        _ => None,
    }
}

fn cmd_partition(a: &PartitionArgs, out: &mut dyn Write, err: &mut dyn Write) -> Res {
    if a.require_embedding && a.rotation.is_none() {
        return Err(CliError::Input("--require-embedding needs --rotation".into()));
    }
    let g = load_graph(&a.graph)?;
    let rot = a.rotation.as_deref().map(|p| load_rotation(p, &g)).transpose()?;
    if let Some(why) = precondition_failure(&g, rot.as_ref()) {
        if a.require_embedding {
            return Err(CliError::Precondition(why));
        }
        let _ = writeln!(err, "warning: {why}; trying anyway");
    }
    let part = partition_with(&g, &PartitionOptions { budget: a.budget }).map_err(|e| match e {
        PartitionError::BudgetExhausted { .. } => CliError::Budget(e.to_string()),
        PartitionError::NoReduction { .. } | PartitionError::BaseCaseInfeasible { .. } => {
            CliError::Precondition(e.to_string())
        }
        PartitionError::Extension(_) => CliError::False(e.to_string()),
    })?;
    if let Some(path) = &a.trace {
        write_file(path, &write_trace(&part.trace))?;
    }
    emit(a.output.as_deref(), &write_coloring(&part.coloring), out)?;
    Ok(EXIT_OK)
}

fn cmd_verify(graph: &Path, coloring: &Path, out: &mut dyn Write) -> Res {
    let g = load_graph(graph)?;
    let f = parse_coloring(&read(coloring)?, g.vertex_count()).map_err(|e| located(coloring, e))?;
    let uncolored = g.vertex_count() - f.colored_count();
    match find_monochromatic_cycle(&g, &f) {
        Some(c) => {
            let cycle: Vec<String> = c.cycle.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "NOT_GOOD color {} cycle {}", c.color.number(), cycle.join(" "));
            Ok(EXIT_FALSE)
        }
        None => {
            let _ = writeln!(out, "GOOD uncolored {uncolored}");
            Ok(EXIT_OK)
        }
    }
}

fn cmd_audit(graph: &Path, rotation: &Path, output: Option<&Path>, out: &mut dyn Write) -> Res {
    let g = load_graph(graph)?;
    let rot = load_rotation(rotation, &g)?;
    if !g.is_connected() {
        return Err(CliError::Precondition("graph is disconnected".into()));
    }
    let faces = trace_faces(&g, &rot).map_err(|e| CliError::Input(format!("{}: {e}", rotation.display())))?;
    let h = build_aux_graph(&g).map_err(|e| CliError::Precondition(e.to_string()))?;
    let mismatch = |e: arbor::discharging::DischargeError| CliError::Input(e.to_string());

    let mut dump = String::new();
    let ledger = initial_charges(&g, &faces, &h);
    dump += &write_ledger(&ledger);
    let ledger = apply_r1(ledger, &faces).map_err(mismatch)?;
    dump += &write_ledger(&ledger);
    let ledger = apply_r2(ledger, &g, &h).map_err(mismatch)?;
    dump += &write_ledger(&ledger);
    let ledger = apply_r3(ledger, &g, &h).map_err(mismatch)?;
    dump += &write_ledger(&ledger);
    let report = audit(&ledger, &g, &faces, &h).map_err(mismatch)?;
    emit(output, &dump, out)?;

    let _ = out.write_all(write_audit(&report).as_bytes());
    let _ = out.write_all(write_total(&ledger, report.genus).as_bytes());
    Ok(if report.all_passed() { EXIT_OK } else { EXIT_FALSE })
}

fn cmd_oracle(graph: &Path, k: Option<usize>, out: &mut dyn Write) -> Res {
    let g = load_graph(graph)?;
    let too_large = |e: arbor::oracle::OracleError| CliError::Precondition(e.to_string());
    match k {
        Some(k) => {
            let yes = arboricity_at_most(&g, k).map_err(too_large)?;
            let _ = writeln!(out, "ARBORICITY_AT_MOST {k} {yes}");
            Ok(if yes { EXIT_OK } else { EXIT_FALSE })
        }
        None => {
            let a = vertex_arboricity(&g).map_err(too_large)?;
            let _ = writeln!(out, "ARBORICITY {a}");
            Ok(EXIT_OK)
        }
    }
}

fn with_suffix(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn cmd_gen(a: &GenArgs, out: &mut dyn Write) -> Res {
    let (min_vertices, max_vertices) = a.size;
    let p = GenParams { seed: a.seed, min_vertices, max_vertices, family: a.family };
    let inst = gen_instance(&p).map_err(|e| match e {
        GenError::Unsatisfiable { .. } => CliError::Precondition(e.to_string()),
        _ => CliError::Input(e.to_string()),
    })?;
    let manifest = manifest_line(&p);
    let graph_path = with_suffix(&a.output, "adj");
    write_file(&graph_path, &format!("# {manifest}{}", write_graph(&inst.graph)))?;
    let _ = writeln!(out, "wrote {}", graph_path.display());
    if let Some(rot) = &inst.rotation {
        let rot_path = with_suffix(&a.output, "rot");
        write_file(&rot_path, &write_rotation(rot))?;
        let _ = writeln!(out, "wrote {}", rot_path.display());
    }
    write_file(&with_suffix(&a.output, "manifest"), &manifest)?;
    let _ = out.write_all(manifest.as_bytes());
    Ok(EXIT_OK)
}

fn cmd_check(
    graph: &Path,
    rotation: Option<&Path>,
    require_embedding: bool,
    aux: Option<&Path>,
    budget: Option<u64>,
    out: &mut dyn Write,
) -> Res {
    if require_embedding && rotation.is_none() {
        return Err(CliError::Input("--require-embedding needs --rotation".into()));
    }
    let g = load_graph(graph)?;
    let rot = rotation.map(|p| load_rotation(p, &g)).transpose()?;
    let report = check_preconditions(&g, rot.as_ref());
    let _ = out.write_all(write_embedding_report(&report).as_bytes());

    if report.four_cycle.is_none() {
        let h = build_aux_graph(&g).expect("no 4-cycle");
        if let Some(path) = aux {
            write_file(path, &write_aux_graph(&h))?;
        }
        let _ = writeln!(out, "aux_nodes {}", h.node_count());
        let _ = writeln!(out, "aux_edges {}", h.edge_count());
        let search = find_triangular_cycle_config_with(&g, budget.unwrap_or(DEFAULT_SEARCH_BUDGET));
        match search {
            arbor::structures::ConfigSearch::Found(c) => {
                let cycle: Vec<String> = c.cycle.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(out, "configuration {} ; apex {}", cycle.join(" "), c.apex);
            }
            arbor::structures::ConfigSearch::NotFound => {
                let _ = writeln!(out, "configuration none");
            }
            arbor::structures::ConfigSearch::BudgetExhausted => {
                let _ = writeln!(out, "configuration budget_exhausted");
                return Err(CliError::Budget("configuration search".into()));
            }
        }
    } else if aux.is_some() {
        return Err(CliError::Precondition("H is only defined without 4-cycles".into()));
    }

    if !report.satisfies_preconditions() || (require_embedding && !report.certifies_toroidal()) {
        return Err(CliError::Precondition(precondition_failure(&g, rot.as_ref()).unwrap_or_else(|| "no embedding".into())));
    }
    Ok(EXIT_OK)
}
