use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use planar_stc::congestion::edge_congestion_cuts;
use planar_stc::dual_bounds::{bfs_upper_bound, congestion_indicator, validate_cts};
use planar_stc::exact::{exact_stc, Budget, ExactError};
use planar_stc::format::{
    parse_cts, parse_plane_graph, parse_tree, write_cts, write_plane_graph, write_tree,
};
use planar_stc::grids::{
    canonical_cts, closed_form, hexagonal_grid, recognize_triangular, rectangular_grid, spiderweb,
    transport_cts, triangular_grid, Side,
};
use planar_stc::plane_graph::{EdgeId, PlaneGraph};
use planar_stc::render::{labels, to_dot, to_svg, LabelMode};
use planar_stc::CenterTailSystem;

const EXIT_DISAGREEMENT: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_INPUT: u8 = 4;

/// Spanning tree congestion of plane graphs: generators, bounds, exact
/// search and figures.
#[derive(Parser)]
#[command(name = "stc", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph (and its center-tail system or tree) to files.
    Gen(GenArgs),
    /// Lower bound from a center-tail system and upper bound from a
    /// breadth-first dual tree.
    Bounds(BoundsArgs),
    /// Exact spanning tree congestion with a witness tree.
    Exact(ExactArgs),
    /// Closed form, bounds and exact values over a range of sizes.
    Table(TableArgs),
    /// Draw a graph with face or edge labels.
    Render(RenderArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Triangular,
    Rectangular,
    Hexagonal,
    Spiderweb,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum ReportFormat {
    #[default]
    Json,
    Text,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Side length for triangular grids, radius for hexagonal grids.
    #[arg(long)]
    size: Option<usize>,
    #[arg(long)]
    rows: Option<usize>,
    #[arg(long)]
    cols: Option<usize>,
    #[arg(long)]
    rings: Option<usize>,
    #[arg(long)]
    spokes: Option<usize>,
    /// Output directory.
    #[arg(long, default_value = ".")]
    out: PathBuf,
}

#[derive(Args)]
struct Limits {
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long)]
    limit_ms: Option<u64>,
    #[arg(long)]
    limit_nodes: Option<u64>,
}

impl Limits {
    fn budget(&self) -> Budget {
        Budget {
            max_nodes: self.limit_nodes,
            time_limit: self.limit_ms.map(Duration::from_millis),
            workers: self.workers,
            ..Budget::default()
        }
    }
}

#[derive(Args)]
struct BoundsArgs {
    graph: PathBuf,
    /// Center-tail system; triangular grids get the canonical one otherwise.
    #[arg(long)]
    cts: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    format: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ExactArgs {
    graph: PathBuf,
    #[command(flatten)]
    limits: Limits,
    /// Tree file for the witness.
    #[arg(long)]
    tree_out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    format: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Inclusive range such as `5..14` or a single size.
    #[arg(long, value_parser = parse_range)]
    range: (usize, usize),
    /// Compute exact values for sizes up to this bound.
    #[arg(long, default_value_t = 4)]
    exact_up_to: usize,
    #[command(flatten)]
    limits: Limits,
    #[arg(long, value_enum, default_value_t)]
    format: ReportFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum FigureFormat {
    #[default]
    Dot,
    Svg,
}

#[derive(Clone, Debug)]
enum LabelArg {
    None,
    AbsoluteIndex,
    Side(Side),
    Congestion(PathBuf),
}

#[derive(Args)]
struct RenderArgs {
    graph: PathBuf,
    /// none, absolute-index, ibot:<bottom|right|left> or congestion:<tree file>.
    #[arg(long, value_parser = parse_label_mode, default_value = "none")]
    labels: LabelArg,
    #[arg(long, value_enum, default_value_t)]
    format: FigureFormat,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let bad = || format!("expected `a..b` or `a`, got `{s}`");
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn parse_label_mode(s: &str) -> Result<LabelArg, String> {
    match s {
        "none" => return Ok(LabelArg::None),
        "absolute-index" => return Ok(LabelArg::AbsoluteIndex),
        _ => {}
    }
    if let Some(side) = s.strip_prefix("ibot:") {
        return Side::parse(side)
            .map(LabelArg::Side)
            .ok_or_else(|| format!("unknown side `{side}`"));
    }
    if let Some(path) = s.strip_prefix("congestion:") {
        if !path.is_empty() {
            return Ok(LabelArg::Congestion(PathBuf::from(path)));
        }
    }
    Err(format!("unknown label mode `{s}`"))
}

/// Failures with their own exit status.
#[derive(Debug)]
enum Outcome {
    Disagreement,
    BudgetExceeded,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_INPUT)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Gen(args) => cmd_gen(&args),
        Command::Bounds(args) => cmd_bounds(&args),
        Command::Exact(args) => cmd_exact(&args),
        Command::Table(args) => cmd_table(&args),
        Command::Render(args) => cmd_render(&args),
    };
    match result {
        Ok(None) => ExitCode::SUCCESS,
        Ok(Some(Outcome::Disagreement)) => ExitCode::from(EXIT_DISAGREEMENT),
        Ok(Some(Outcome::BudgetExceeded)) => ExitCode::from(EXIT_BUDGET),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn need(value: Option<usize>, flag: &str) -> Result<usize> {
    value.with_context(|| format!("--{flag} is required for this family"))
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).with_context(|| format!("writing {}", path.display()))
}

fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn read_graph(path: &Path) -> Result<PlaneGraph> {
    parse_plane_graph(&read_file(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => write_file(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn cmd_gen(args: &GenArgs) -> Result<Option<Outcome>> {
    fs::create_dir_all(&args.out).with_context(|| format!("creating {}", args.out.display()))?;
    let mut files: Vec<(String, String)> = Vec::new();
    match args.family {
        Family::Triangular => {
            let k = need(args.size, "size")?;
            let grid = triangular_grid(k)?;
            files.push((format!("T_{k}.pg"), write_plane_graph(&grid.graph)));
            if k >= 5 {
                let (grid, system) = canonical_cts(k)?;
                files.push((
                    format!("S_{k}.cts"),
                    write_cts(&system, grid.graph.outer_face()),
                ));
            }
        }
        Family::Rectangular => {
            let (m, n) = (need(args.rows, "rows")?, need(args.cols, "cols")?);
            files.push((
                format!("R_{m}x{n}.pg"),
                write_plane_graph(&rectangular_grid(m, n)?),
            ));
        }
        Family::Hexagonal => {
            let r = need(args.size, "size")?;
            files.push((format!("H_{r}.pg"), write_plane_graph(&hexagonal_grid(r)?)));
        }
        Family::Spiderweb => {
            let (n, k) = (need(args.rings, "rings")?, need(args.spokes, "spokes")?);
            let web = spiderweb(n, k)?;
            files.push((format!("W_{n}_{k}.pg"), write_plane_graph(&web.graph)));
            files.push((format!("W_{n}_{k}.tree"), write_tree(&web.balanced_tree())));
        }
    }
    for (name, contents) in &files {
        let path = args.out.join(name);
        write_file(&path, contents)?;
        println!("{}", path.display());
    }
    Ok(None)
}

#[derive(Serialize)]
struct GraphSummary {
    vertices: usize,
    edges: usize,
    faces: usize,
}

impl GraphSummary {
    fn of(g: &PlaneGraph) -> Self {
        GraphSummary {
            vertices: g.vertex_count(),
            edges: g.edge_count(),
            faces: g.face_count(),
        }
    }
}

#[derive(Serialize)]
struct BoundsReport {
    graph: GraphSummary,
    lower: Option<usize>,
    lower_term: Option<u8>,
    lower_source: Option<&'static str>,
    upper: usize,
    absolute_index_bound: usize,
    certified: Option<usize>,
    sandwich_ok: bool,
    per_edge: BTreeMap<EdgeId, usize>,
    elapsed_ms: u64,
}

/// A system for `g`: the given file, else the canonical one if `g` is a
/// triangular grid of side at least 5.
fn find_system(
    g: &PlaneGraph,
    cts: Option<&Path>,
) -> Result<Option<(CenterTailSystem, &'static str)>> {
    if let Some(path) = cts {
        let s = parse_cts(&read_file(path)?, g.outer_face())
            .with_context(|| format!("parsing {}", path.display()))?;
        validate_cts(g, &s).with_context(|| format!("checking {}", path.display()))?;
        return Ok(Some((s, "file")));
    }
    let Some((grid, iso)) = recognize_triangular(g) else {
        return Ok(None);
    };
    if grid.k < 5 {
        return Ok(None);
    }
    let (_, canonical) = canonical_cts(grid.k)?;
    Ok(Some((transport_cts(&canonical, &iso), "canonical")))
}

fn lower_bound(
    g: &PlaneGraph,
    cts: Option<&Path>,
) -> Result<(Option<usize>, Option<u8>, Option<&'static str>)> {
    match find_system(g, cts)? {
        Some((s, source)) => {
            let ci = congestion_indicator(g, &s)?;
            Ok((ci.value, ci.binding_term(), Some(source)))
        }
        None => Ok((None, None, None)),
    }
}

fn cmd_bounds(args: &BoundsArgs) -> Result<Option<Outcome>> {
    let start = Instant::now();
    let g = read_graph(&args.graph)?;
    let (lower, lower_term, lower_source) = lower_bound(&g, args.cts.as_deref())?;
    let bfs = bfs_upper_bound(&g);
    let sandwich_ok = lower.is_none_or(|l| l <= bfs.ec);
    let report = BoundsReport {
        graph: GraphSummary::of(&g),
        lower,
        lower_term,
        lower_source,
        upper: bfs.ec,
        absolute_index_bound: bfs.bound,
        certified: lower.filter(|&l| l == bfs.ec),
        sandwich_ok,
        per_edge: bfs.report.per_edge.clone(),
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    let text = match args.format {
        ReportFormat::Json => json(&report),
        ReportFormat::Text => {
            let show = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
            format!(
                "vertices {}\nedges {}\nfaces {}\nlower {}\nupper {}\nabsolute_index_bound {}\ncertified {}\n",
                report.graph.vertices,
                report.graph.edges,
                report.graph.faces,
                show(report.lower),
                report.upper,
                report.absolute_index_bound,
                show(report.certified),
            )
        }
    };
    emit(args.out.as_deref(), &text)?;
    Ok((!sandwich_ok).then_some(Outcome::Disagreement))
}

#[derive(Serialize)]
struct ExactReport {
    graph: GraphSummary,
    status: &'static str,
    exact: Option<usize>,
    lower: usize,
    upper: usize,
    witness: Vec<EdgeId>,
    per_edge: BTreeMap<EdgeId, usize>,
    nodes: u64,
    elapsed_ms: u64,
}

fn cmd_exact(args: &ExactArgs) -> Result<Option<Outcome>> {
    let start = Instant::now();
    let g = read_graph(&args.graph)?;
    let (status, exact, lower, upper, witness, nodes) = match exact_stc(&g, &args.limits.budget()) {
        Ok(out) => (
            "exact",
            Some(out.value),
            out.value,
            out.value,
            out.witness,
            out.nodes,
        ),
        Err(ExactError::BudgetExceeded {
            lower,
            upper,
            witness,
            nodes,
        }) => ("budget_exceeded", None, lower, upper, witness, nodes),
    };
    if let Some(path) = &args.tree_out {
        write_file(path, &write_tree(&witness))?;
    }
    let report = ExactReport {
        graph: GraphSummary::of(&g),
        status,
        exact,
        lower,
        upper,
        witness: witness.edges().to_vec(),
        per_edge: edge_congestion_cuts(&g, &witness)?.per_edge,
        nodes,
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    let text = match args.format {
        ReportFormat::Json => json(&report),
        ReportFormat::Text => match exact {
            Some(v) => format!("s(G) = {v}\nnodes {nodes}\n"),
            None => format!("budget exceeded: {lower} <= s(G) <= {upper}\nnodes {nodes}\n"),
        },
    };
    emit(args.out.as_deref(), &text)?;
    Ok(exact.is_none().then_some(Outcome::BudgetExceeded))
}

#[derive(Serialize)]
struct TableRow {
    k: usize,
    closed_form: usize,
    ci: Option<usize>,
    ci_term: Option<u8>,
    bfs: usize,
    exact: Option<usize>,
    agree: bool,
}

fn cmd_table(args: &TableArgs) -> Result<Option<Outcome>> {
    if !matches!(args.family, Family::Triangular) {
        bail!("table supports only the triangular family");
    }
    let (from, to) = args.range;
    let budget = args.limits.budget();
    let mut rows = Vec::new();
    let mut budget_hit = false;
    for k in from..=to {
        let grid = triangular_grid(k)?;
        let (ci, ci_term) = if k >= 5 {
            let (grid, s) = canonical_cts(k)?;
            let ci = congestion_indicator(&grid.graph, &s)?;
            (ci.value, ci.binding_term())
        } else {
            (None, None)
        };
        let bfs = bfs_upper_bound(&grid.graph).ec;
        let exact = if k <= args.exact_up_to {
            match exact_stc(&grid.graph, &budget) {
                Ok(out) => Some(out.value),
                Err(_) => {
                    budget_hit = true;
                    None
                }
            }
        } else {
            None
        };
        let expected = closed_form(k);
        let agree = bfs == expected
            && ci.is_none_or(|v| v == expected)
            && exact.is_none_or(|v| v == expected);
        rows.push(TableRow {
            k,
            closed_form: expected,
            ci,
            ci_term,
            bfs,
            exact,
            agree,
        });
    }
    let text = match args.format {
        ReportFormat::Json => json(&rows),
        ReportFormat::Text => {
            let show = |v: Option<usize>| v.map_or("-".to_string(), |v| v.to_string());
            let mut s = format!(
                "{:>4} {:>8} {:>4} {:>4} {:>6} {:>6}\n",
                "k", "formula", "CI", "BFS", "exact", "agree"
            );
            for r in &rows {
                s.push_str(&format!(
                    "{:>4} {:>8} {:>4} {:>4} {:>6} {:>6}\n",
                    r.k,
                    r.closed_form,
                    show(r.ci),
                    r.bfs,
                    show(r.exact),
                    if r.agree { "yes" } else { "NO" }
                ));
            }
            s
        }
    };
    emit(args.out.as_deref(), &text)?;
    if rows.iter().any(|r| !r.agree) {
        Ok(Some(Outcome::Disagreement))
    } else if budget_hit {
        Ok(Some(Outcome::BudgetExceeded))
    } else {
        Ok(None)
    }
}

fn cmd_render(args: &RenderArgs) -> Result<Option<Outcome>> {
    let g = read_graph(&args.graph)?;
    let mode = match &args.labels {
        LabelArg::None => LabelMode::None,
        LabelArg::AbsoluteIndex => LabelMode::AbsoluteIndex,
        LabelArg::Side(side) => {
            let (grid, iso) =
                recognize_triangular(&g).context("ibot labels need a triangular grid")?;
            let edges = grid
                .side_edges(*side)
                .iter()
                .map(|e| iso.edges[e.0])
                .collect();
            LabelMode::RestrictedIndex(edges)
        }
        LabelArg::Congestion(path) => {
            let tree = parse_tree(&read_file(path)?, &g)
                .with_context(|| format!("parsing {}", path.display()))?;
            LabelMode::Congestion(tree)
        }
    };
    let l = labels(&g, &mode)?;
    let text = match args.format {
        FigureFormat::Dot => to_dot(&g, &l),
        FigureFormat::Svg => to_svg(&g, &l)?,
    };
    emit(args.out.as_deref(), &text)?;
    Ok(None)
}
