//! Command-line front end: parses plumbing graphs, Seifert data, and
//! Brieskorn triples, runs the library pipelines (signature, Wu class, μ̄,
//! graded roots, mapping degrees, real Frøyshov values, the cable sliceness
//! obstruction), and emits text, JSON, Graphviz DOT, or CSV reports.
//!
//! Exit codes: 0 on success, 2 on domain errors (violated mathematical
//! preconditions), 1 on usage errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use latticeroot::equivariant::{
    build_cell_model, conjugation_fixed_model, euler_char_closed_form, euler_char_fixed,
    miyazawa_degree,
};
use latticeroot::knots::{self, TorusKnot};
use latticeroot::lattice::{self, GradedRoot, TruncationPolicy};
use latticeroot::obstruction::{self, ObstructionReport, RealFroyshov, Verdict};
use latticeroot::plumbing::{self, PlumbingGraph, SeifertData};
use latticeroot::Rat;
use serde::{Deserialize, Serialize};

#[derive(Parser)]
#[command(name = "latticeroot", version, about = "Lattice-homology calculator for plumbed 3-manifolds and knot concordance obstructions", max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Parse and validate a plumbing graph and echo it back.
    Graph {
        #[command(flatten)]
        input: InputOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Signature of the intersection form.
    Signature {
        #[command(flatten)]
        input: InputOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Spherical Wu class and its square.
    Wu {
        #[command(flatten)]
        input: InputOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Neumann–Siebenmann invariant μ̄ = (σ − w²)/8.
    Mubar {
        #[command(flatten)]
        input: InputOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Signature of the torus knot T_{p,q}.
    TorusSig {
        #[arg(allow_negative_numbers = true)]
        p: i64,
        #[arg(allow_negative_numbers = true)]
        q: i64,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Graded root of the self-conjugate spin-c structure.
    GradedRoot {
        #[command(flatten)]
        input: InputOpts,
        #[command(flatten)]
        path: PathOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Mapping degree |χ| of the real fixed-point model.
    Degree {
        #[command(flatten)]
        input: InputOpts,
        #[command(flatten)]
        path: PathOpts,
        /// Stabilization level for the cross-checking cell model (even, ≥ the
        /// minimal level).
        #[arg(long)]
        h: Option<i64>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Real Frøyshov triple of a torus knot (two-bridge or even).
    Froyshov {
        /// Torus knot parameters "p,q"; q may be negative (mirror).
        #[arg(long, value_name = "P,Q", value_delimiter = ',', required = true)]
        torus: Vec<i64>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Branched-cover inequality report for the (2n,1)-cable of the
    /// figure-eight knot.
    Obstruct {
        /// Odd cable parameter n.
        n: i64,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Human-readable sliceness ledger for one odd cable parameter.
    CableCase {
        /// Odd cable parameter n.
        n: i64,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Batch CSV families.
    Tables {
        #[arg(value_enum)]
        family: Family,
        /// Inclusive parameter range "a..b"; an empty range yields a
        /// header-only table.
        #[arg(long, default_value = "1..10")]
        range: String,
        #[command(flatten)]
        output: OutputOpts,
    },
}

#[derive(Args)]
struct InputOpts {
    /// Plumbing graph JSON file: {"vertices":[{"id":int,"weight":int},...],
    /// "edges":[[id,id],...]}.
    #[arg(long, visible_alias = "pretzel-graph", value_name = "FILE")]
    graph: Option<PathBuf>,
    /// Seifert data JSON file: {"central":int,"orbits":[[alpha,beta],...]}.
    #[arg(long, value_name = "FILE")]
    seifert: Option<PathBuf>,
    /// Brieskorn multiplicities "a1,a2,a3". Pairwise-coprime triples use the
    /// Brieskorn normalization; (2, even, odd) triples are routed through the
    /// double-branched-cover presentation.
    #[arg(long, value_name = "A1,A2,A3", value_delimiter = ',')]
    brieskorn: Option<Vec<i64>>,
    /// Fail unless the graph passes the almost-rational star-shape check.
    #[arg(long)]
    assert_ar: bool,
}

#[derive(Args)]
struct PathOpts {
    /// Base vertex id for the computation sequence (default: the central
    /// vertex of a star graph, otherwise a vertex of maximal degree).
    #[arg(long, value_name = "VERTEX_ID")]
    base: Option<i64>,
    /// Stabilization policy: "auto" or "cap=N".
    #[arg(long, default_value = "auto")]
    truncation: String,
}

#[derive(Args)]
struct OutputOpts {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Family {
    /// (n, σ(T_{2n,1−20n})).
    TorusSignature,
    /// (n, σ(Γ), w², μ̄) over odd n for the Σ(2,2n,20n−1) graphs.
    SigmaGammaWu,
    /// (k, n, degree) for the Σ(2,3,12k∓5/12k+1) families.
    #[value(name = "sigma-2-3-n-degrees")]
    Sigma23NDegrees,
}

/// Usage errors exit 1, domain errors (violated mathematical preconditions)
/// exit 2.
enum CliError {
    Usage(anyhow::Error),
    Domain(anyhow::Error),
}

fn usage(e: impl Into<anyhow::Error>) -> CliError {
    CliError::Usage(e.into())
}

fn domain(e: impl Into<anyhow::Error>) -> CliError {
    CliError::Domain(e.into())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help/version requests are successes, everything else is a
            // usage error.
            let code = if e.exit_code() == 0 { 0 } else { 1 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(e)) => {
            eprintln!("usage error: {e:#}");
            ExitCode::from(1)
        }
        Err(CliError::Domain(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

// ---------------------------------------------------------------------------
// JSON documents

#[derive(Serialize, Deserialize, PartialEq, Eq)]
struct GraphDoc {
    vertices: Vec<VertexDoc>,
    edges: Vec<(i64, i64)>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq)]
struct VertexDoc {
    id: i64,
    weight: i64,
}

#[derive(Deserialize)]
struct SeifertDoc {
    central: i64,
    orbits: Vec<(i64, i64)>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq)]
struct RootDoc {
    leaves: Vec<GradingDoc>,
    angles: Vec<GradingDoc>,
    shift: String,
}

#[derive(Serialize, Deserialize, PartialEq, Eq)]
struct GradingDoc {
    gr: i64,
}

fn graph_doc(g: &PlumbingGraph) -> GraphDoc {
    GraphDoc {
        vertices: g
            .ids()
            .iter()
            .zip(g.weights())
            .map(|(&id, &weight)| VertexDoc { id, weight })
            .collect(),
        edges: g.edges().iter().map(|&(a, b)| (g.ids()[a], g.ids()[b])).collect(),
    }
}

fn root_doc(root: &GradedRoot) -> RootDoc {
    RootDoc {
        leaves: root.leaves.iter().map(|&(_, gr)| GradingDoc { gr }).collect(),
        angles: root.angles.iter().map(|&(_, gr)| GradingDoc { gr }).collect(),
        shift: root.grading_shift.to_string(),
    }
}

// ---------------------------------------------------------------------------
// Input resolution

fn load_graph(input: &InputOpts) -> Result<PlumbingGraph, CliError> {
    let sources =
        input.graph.is_some() as u8 + input.seifert.is_some() as u8 + input.brieskorn.is_some() as u8;
    if sources != 1 {
        return Err(usage(anyhow!(
            "exactly one of --graph, --seifert, --brieskorn must be given"
        )));
    }
    let g = if let Some(path) = &input.graph {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))
            .map_err(usage)?;
        let doc: GraphDoc = serde_json::from_str(&text)
            .with_context(|| format!("parsing {}", path.display()))
            .map_err(usage)?;
        let vertices: Vec<(i64, i64)> = doc.vertices.iter().map(|v| (v.id, v.weight)).collect();
        plumbing::build_graph(&vertices, &doc.edges).map_err(domain)?
    } else if let Some(path) = &input.seifert {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))
            .map_err(usage)?;
        let doc: SeifertDoc = serde_json::from_str(&text)
            .with_context(|| format!("parsing {}", path.display()))
            .map_err(usage)?;
        let data = SeifertData::new(doc.central, doc.orbits).map_err(domain)?;
        plumbing::seifert_to_plumbing(&data).map_err(domain)?
    } else {
        let abc = input.brieskorn.as_ref().unwrap();
        if abc.len() != 3 {
            return Err(usage(anyhow!("--brieskorn expects three integers a1,a2,a3")));
        }
        let (a1, a2, a3) = (abc[0], abc[1], abc[2]);
        plumbing::seifert_to_plumbing(&brieskorn_seifert(a1, a2, a3)?).map_err(domain)?
    };
    if input.assert_ar {
        if let Some(warning) = g.ar_warning() {
            return Err(domain(anyhow!("almost-rational check failed: {warning}")));
        }
    }
    Ok(g)
}

/// Pairwise-coprime triples use the Brieskorn normalization; (2, even, odd)
/// triples describe the double branched cover of an even torus knot and are
/// routed through that presentation.
fn brieskorn_seifert(a1: i64, a2: i64, a3: i64) -> Result<SeifertData, CliError> {
    match plumbing::brieskorn_to_seifert(a1, a2, a3) {
        Ok(data) => Ok(data),
        Err(coprime_err) => {
            let mut rest = [a2, a3];
            if a1 == 2 && rest.iter().any(|a| a % 2 == 0) {
                rest.sort_by_key(|a| a % 2 != 0);
                let (p, q) = (rest[0], rest[1]);
                plumbing::branched_cover_seifert(p, q).map_err(domain)
            } else {
                Err(domain(coprime_err))
            }
        }
    }
}

fn parse_truncation(opts: &PathOpts) -> Result<TruncationPolicy, CliError> {
    if opts.truncation == "auto" {
        Ok(TruncationPolicy::default())
    } else if let Some(n) = opts.truncation.strip_prefix("cap=") {
        let cap: usize = n
            .parse()
            .map_err(|_| usage(anyhow!("--truncation cap must be an integer, got {n:?}")))?;
        Ok(TruncationPolicy { cap: Some(cap), ..TruncationPolicy::default() })
    } else {
        Err(usage(anyhow!("--truncation must be \"auto\" or \"cap=N\", got {:?}", opts.truncation)))
    }
}

fn resolve_base(g: &PlumbingGraph, opts: &PathOpts) -> Result<usize, CliError> {
    match opts.base {
        Some(id) => g
            .index_of_id(id)
            .ok_or_else(|| usage(anyhow!("--base {id} is not a vertex id of the graph"))),
        None => Ok(match g.star() {
            Some(star) => star.central,
            None => (0..g.vertex_count())
                .max_by_key(|&v| (g.neighbors(v).len(), usize::MAX - v))
                .expect("nonempty graph"),
        }),
    }
}

fn spin_root(
    g: &PlumbingGraph,
    path_opts: &PathOpts,
) -> Result<(lattice::WeightedPath, GradedRoot), CliError> {
    let policy = parse_truncation(path_opts)?;
    let base = resolve_base(g, path_opts)?;
    let class = lattice::spin_class(g).map_err(domain)?;
    let path = lattice::full_sequence(g, &class, base, policy).map_err(domain)?;
    let root = lattice::graded_root(&path);
    Ok((path, root))
}

// ---------------------------------------------------------------------------
// Emission

fn emit(output: &OutputOpts, content: String) -> Result<(), CliError> {
    match &output.out {
        Some(path) => std::fs::write(path, content)
            .with_context(|| format!("writing {}", path.display()))
            .map_err(usage),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn reject_formats(output: &OutputOpts, allowed: &[Format], verb: &str) -> Result<(), CliError> {
    if allowed.contains(&output.format) {
        Ok(())
    } else {
        Err(usage(anyhow!("this output format is not supported by `{verb}`")))
    }
}

fn graph_dot(g: &PlumbingGraph) -> String {
    let mut s = String::from("graph plumbing {\n");
    for (&id, &w) in g.ids().iter().zip(g.weights()) {
        let _ = writeln!(s, "  v{id} [label=\"{w}\"];");
    }
    for &(a, b) in g.edges() {
        let _ = writeln!(s, "  v{} -- v{};", g.ids()[a], g.ids()[b]);
    }
    s.push_str("}\n");
    s
}

/// DOT rendering of a graded root: leaves filled, angles unfilled, nodes
/// labeled by grading, edges along the merge tree.
fn root_dot(root: &GradedRoot) -> String {
    let mut s = String::from("graph gradedroot {\n");
    for &(node, gr) in &root.leaves {
        let _ = writeln!(s, "  n{node} [label=\"{gr}\", shape=circle, style=filled];");
    }
    for &(node, gr) in &root.angles {
        let _ = writeln!(s, "  n{node} [label=\"{gr}\", shape=circle];");
    }
    for (node, parent) in root.parents.iter().enumerate() {
        if let Some(p) = parent {
            let _ = writeln!(s, "  n{node} -- n{p};");
        }
    }
    s.push_str("}\n");
    s
}

fn root_text(root: &GradedRoot) -> String {
    let (leaves, angles) = root.grading_multisets();
    format!(
        "leaves: {leaves:?}\nangles: {angles:?}\nshift: {}\n",
        root.grading_shift
    )
}

fn froyshov_text(f: &RealFroyshov) -> String {
    let fmt = |v: &Option<Rat>| match v {
        Some(r) => r.to_string(),
        None => "unknown".into(),
    };
    format!(
        "delta_under: {}\ndelta: {}\ndelta_bar: {}\n",
        fmt(&f.delta_under),
        fmt(&f.delta),
        fmt(&f.delta_bar)
    )
}

#[derive(Serialize)]
struct FroyshovDoc {
    delta_under: Option<String>,
    delta: Option<String>,
    delta_bar: Option<String>,
}

#[derive(Serialize)]
struct ReportDoc {
    b2plus_diff: i64,
    sigma_branched: i64,
    inequality_used: String,
    bound_on_delta_under: String,
    verdict: String,
    trace: Vec<String>,
}

fn report_doc(r: &ObstructionReport) -> ReportDoc {
    ReportDoc {
        b2plus_diff: r.b2plus_diff,
        sigma_branched: r.sigma_branched,
        inequality_used: format!("{:?}", r.inequality_used).to_lowercase(),
        bound_on_delta_under: r.bound_on_delta_under.to_string(),
        verdict: format!("{:?}", r.verdict).to_lowercase(),
        trace: r.trace.clone(),
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value).map_err(usage)?;
    s.push('\n');
    Ok(s)
}

// ---------------------------------------------------------------------------
// Verbs

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.verb {
        Verb::Graph { input, output } => {
            reject_formats(&output, &[Format::Text, Format::Json, Format::Dot], "graph")?;
            let g = load_graph(&input)?;
            let content = match output.format {
                Format::Json => to_json(&graph_doc(&g))?,
                Format::Dot => graph_dot(&g),
                _ => {
                    let definite =
                        if plumbing::is_negative_definite(&g) { "negative definite" } else { "not negative definite" };
                    format!(
                        "vertices: {}\nweights: {:?}\nedges: {:?}\n{definite}\n",
                        g.vertex_count(),
                        g.weights(),
                        g.edges()
                    )
                }
            };
            emit(&output, content)
        }
        Verb::Signature { input, output } => {
            reject_formats(&output, &[Format::Text, Format::Json], "signature")?;
            let g = load_graph(&input)?;
            let sig = plumbing::signature(&g);
            let content = match output.format {
                Format::Json => to_json(&serde_json::json!({ "signature": sig }))?,
                _ => format!("{sig}\n"),
            };
            emit(&output, content)
        }
        Verb::Wu { input, output } => {
            reject_formats(&output, &[Format::Text, Format::Json], "wu")?;
            let g = load_graph(&input)?;
            let wu = plumbing::wu_class(&g).map_err(domain)?;
            let square = wu.square(&g);
            let support: Vec<i64> = wu
                .coefficients
                .iter()
                .enumerate()
                .filter(|&(_, &c)| c == 1)
                .map(|(v, _)| g.ids()[v])
                .collect();
            let content = match output.format {
                Format::Json => to_json(&serde_json::json!({
                    "coefficients": wu.coefficients,
                    "support_ids": support,
                    "square": square,
                }))?,
                _ => format!("support: {support:?}\nsquare: {square}\n"),
            };
            emit(&output, content)
        }
        Verb::Mubar { input, output } => {
            reject_formats(&output, &[Format::Text, Format::Json], "mubar")?;
            let g = load_graph(&input)?;
            let mu = plumbing::mubar(&g).map_err(domain)?;
            let content = match output.format {
                Format::Json => to_json(&serde_json::json!({ "mubar": mu.to_string() }))?,
                _ => format!("{mu}\n"),
            };
            emit(&output, content)
        }
        Verb::TorusSig { p, q, output } => {
            reject_formats(&output, &[Format::Text, Format::Json], "torus-sig")?;
            let sig = knots::torus_signature_pq(p, q).map_err(domain)?;
            let content = match output.format {
                Format::Json => to_json(&serde_json::json!({ "p": p, "q": q, "signature": sig }))?,
                _ => format!("{sig}\n"),
            };
            emit(&output, content)
        }
        Verb::GradedRoot { input, path, output } => {
            reject_formats(&output, &[Format::Text, Format::Json, Format::Dot], "graded-root")?;
            let g = load_graph(&input)?;
            let (_, root) = spin_root(&g, &path)?;
            let content = match output.format {
                Format::Json => to_json(&root_doc(&root))?,
                Format::Dot => root_dot(&root),
                _ => root_text(&root),
            };
            emit(&output, content)
        }
        Verb::Degree { input, path, h, output } => {
            reject_formats(&output, &[Format::Text, Format::Json], "degree")?;
            let g = load_graph(&input)?;
            let (weighted_path, root) = spin_root(&g, &path)?;
            let degree = miyazawa_degree(&root).map_err(domain)?;
            // Cross-check the closed form against an explicit cell model at
            // the requested (or minimal) stabilization level.
            let model = build_cell_model(&weighted_path, h).map_err(domain)?;
            let fixed = conjugation_fixed_model(&model);
            let chi = euler_char_fixed(&fixed, &root).map_err(domain)?;
            debug_assert_eq!(chi, euler_char_closed_form(&root).unwrap());
            let content = match output.format {
                Format::Json => to_json(&serde_json::json!({ "degree": degree, "chi": chi }))?,
                _ => format!("{degree}\n"),
            };
            emit(&output, content)
        }
        Verb::Froyshov { torus, output } => {
            reject_formats(&output, &[Format::Text, Format::Json], "froyshov")?;
            if torus.len() != 2 {
                return Err(usage(anyhow!("--torus expects two integers p,q")));
            }
            let f = torus_froyshov(torus[0], torus[1])?;
            let content = match output.format {
                Format::Json => to_json(&FroyshovDoc {
                    delta_under: f.delta_under.as_ref().map(Rat::to_string),
                    delta: f.delta.as_ref().map(Rat::to_string),
                    delta_bar: f.delta_bar.as_ref().map(Rat::to_string),
                })?,
                _ => froyshov_text(&f),
            };
            emit(&output, content)
        }
        Verb::Obstruct { n, output } => {
            reject_formats(&output, &[Format::Text, Format::Json], "obstruct")?;
            let r = obstruction::e2n1_pipeline(n).map_err(domain)?;
            let content = match output.format {
                Format::Json => to_json(&report_doc(&r))?,
                _ => {
                    let mut s = r.trace.join("\n");
                    s.push('\n');
                    s
                }
            };
            emit(&output, content)
        }
        Verb::CableCase { n, output } => {
            reject_formats(&output, &[Format::Text], "cable-case")?;
            let r = obstruction::e2n1_pipeline(n).map_err(domain)?;
            let mut s = format!("E_{{{},1}} sliceness ledger (n = {n})\n", 2 * n);
            for line in &r.trace {
                let _ = writeln!(s, "  {line}");
            }
            match r.verdict {
                Verdict::Obstructed => {
                    let _ = writeln!(
                        s,
                        "underline delta_R <= {} : NOT SLICE (odd n)",
                        r.bound_on_delta_under
                    );
                }
                Verdict::NoConclusion => {
                    let _ = writeln!(s, "bound is nonnegative : no conclusion");
                }
            }
            emit(&output, s)
        }
        Verb::Tables { family, range, output } => {
            reject_formats(&output, &[Format::Text, Format::Csv], "tables")?;
            let (lo, hi) = parse_range(&range)?;
            emit(&output, table(family, lo, hi)?)
        }
    }
}

/// Frøyshov triple of T_{p,q}: the lens formula for two-bridge knots, the
/// even-torus μ̄ formula otherwise, composed with mirror duality for negative
/// parameters.
fn torus_froyshov(p: i64, q: i64) -> Result<RealFroyshov, CliError> {
    let k = TorusKnot::new(p, q).map_err(domain)?;
    if p.abs() == 2 || q.abs() == 2 {
        return obstruction::lens_froyshov(&k).map_err(domain);
    }
    let mirrors = (p < 0) as u32 + (q < 0) as u32;
    let (ap, aq) = (p.abs(), q.abs());
    let f = if ap % 2 == 0 {
        obstruction::even_torus_froyshov(ap, aq).map_err(domain)?
    } else if aq % 2 == 0 {
        obstruction::even_torus_froyshov(aq, ap).map_err(domain)?
    } else {
        return Err(domain(anyhow!(
            "no pinned-down formula for T_{{{p},{q}}}: need a two-bridge or even torus knot"
        )));
    };
    Ok(if mirrors % 2 == 1 { obstruction::mirror_dual(&f) } else { f })
}

fn parse_range(range: &str) -> Result<(i64, i64), CliError> {
    let (lo, hi) = range
        .split_once("..")
        .ok_or_else(|| usage(anyhow!("--range must look like \"a..b\", got {range:?}")))?;
    let parse = |s: &str| {
        s.trim()
            .parse::<i64>()
            .map_err(|_| usage(anyhow!("--range bound {s:?} is not an integer")))
    };
    Ok((parse(lo)?, parse(hi)?))
}

fn table(family: Family, lo: i64, hi: i64) -> Result<String, CliError> {
    let mut s = String::new();
    match family {
        Family::TorusSignature => {
            s.push_str("n,signature\n");
            for n in lo..=hi {
                if n < 1 {
                    continue;
                }
                let sig = knots::torus_signature_pq(2 * n, 1 - 20 * n).map_err(domain)?;
                let _ = writeln!(s, "{n},{sig}");
            }
        }
        Family::SigmaGammaWu => {
            s.push_str("n,sigma,w_squared,mubar\n");
            for n in lo..=hi {
                if n < 1 || n % 2 == 0 {
                    continue;
                }
                let data = plumbing::branched_cover_seifert(2 * n, 20 * n - 1).map_err(domain)?;
                let g = plumbing::seifert_to_plumbing(&data).map_err(domain)?;
                let sigma = plumbing::signature(&g);
                let wu = plumbing::wu_class(&g).map_err(domain)?;
                let mu = plumbing::mubar(&g).map_err(domain)?;
                let _ = writeln!(s, "{n},{sigma},{},{mu}", wu.square(&g));
            }
        }
        Family::Sigma23NDegrees => {
            s.push_str("k,n,degree\n");
            for k in lo..=hi {
                if k < 1 {
                    continue;
                }
                for n in [12 * k - 5, 12 * k + 1] {
                    let data = plumbing::brieskorn_to_seifert(2, 3, n).map_err(domain)?;
                    let g = plumbing::seifert_to_plumbing(&data).map_err(domain)?;
                    let class = lattice::spin_class(&g).map_err(domain)?;
                    let path =
                        lattice::full_sequence(&g, &class, 0, TruncationPolicy::default())
                            .map_err(domain)?;
                    let root = lattice::graded_root(&path);
                    let degree = miyazawa_degree(&root).map_err(domain)?;
                    let _ = writeln!(s, "{k},{n},{degree}");
                }
            }
        }
    }
    Ok(s)
}
