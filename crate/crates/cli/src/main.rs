mod output;

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kst_core::constructions::{
    extremal_gstar, f_st, h_abc, h_st, h_st_complement, petersen, petersen_complement, s1, GStarPlan, StParams,
};
use kst_core::minor::{
    clique_dominating_set, find_kab_minor, has_minor, has_st_property, is_kst_minor_free, verify_lemma210, verify_lemma211,
    verify_lemma24, Pattern, GENERIC_HOST_LIMIT,
};
use kst_core::search::{
    brute_force_extremal, component_census, verify_degree_majorization_maximality, verify_lemma212, verify_lemma215,
    verify_local_edge_maximality, verify_structure, SearchOptions,
};
use kst_core::spectral::{
    perron_component_bounds, q_index, regular_circulant, spectral_radius, verify_join_lower_bound, verify_lemma23,
    verify_lemma25, verify_lemma26, AlphaParam,
};
use kst_core::{graph6, Graph, VertexSet};
use output::{object, to_value, write_records, Format};
use serde_json::Value;

/// Spectral extremal tools for K_{s,t}-minor-free graphs.
#[derive(Parser)]
#[command(name = "kst", version)]
struct Cli {
    /// Output format; `construct` defaults to graph6, everything else to json.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named graph family.
    Construct(ConstructArgs),
    /// A_α spectral radius of one or more graphs.
    Rho(RhoArgs),
    /// Search a host graph for a minor.
    MinorCheck(MinorArgs),
    /// Run a verifier; exit status 1 if it fails.
    Verify(VerifyArgs),
    /// Brute-force the A_α maximizer among K_{s,t}-minor-free graphs.
    Search(SearchArgs),
    /// Spectral and structural profile of a graph.
    Report(ReportArgs),
}

#[derive(Args, Clone, Default)]
struct GraphInput {
    /// Graph in graph6 notation.
    #[arg(long)]
    graph6: Option<String>,
    /// File with one graph6 string per line.
    #[arg(long, conflicts_with = "graph6")]
    file: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    /// F_{s,t}(n)
    Fst,
    /// The extremal graph G* of order n
    Gstar,
    /// The star forest H_{s,t}
    Hst,
    HstComplement,
    /// The complement of H_{s,t} with one edge subdivided
    HstSubdivided,
    Petersen,
    PetersenComplement,
    Habc,
    Complete,
    Cycle,
    Path,
    CompleteBipartite,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    b: Option<usize>,
    #[arg(long)]
    c: Option<usize>,
}

#[derive(Args)]
struct RhoArgs {
    #[command(flatten)]
    input: GraphInput,
    /// One or more values in [0, 1), comma separated.
    #[arg(long, value_delimiter = ',', default_value = "0.5")]
    alpha: Vec<AlphaParam>,
    /// Include the Perron vector.
    #[arg(long)]
    perron: bool,
}

#[derive(Args)]
struct MinorArgs {
    #[command(flatten)]
    input: GraphInput,
    /// graph6 string or `Kst:s,t`.
    #[arg(long)]
    pattern: Pattern,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Check {
    #[value(alias = "2.1")]
    JoinBound,
    #[value(alias = "2.3")]
    Sandwich,
    #[value(alias = "2.4")]
    StarBound,
    #[value(alias = "2.5")]
    Cubic,
    #[value(alias = "2.6")]
    RegularJoin,
    #[value(alias = "2.10")]
    Reduction,
    #[value(alias = "2.11")]
    ComplementComponents,
    #[value(alias = "2.12")]
    EdgeMaximal,
    #[value(alias = "2.15")]
    TwoExtra,
    #[value(alias = "3.1")]
    Perron,
    #[value(alias = "3.2")]
    LocalEdges,
    #[value(alias = "3.4")]
    Majorization,
    Structure,
    MinorFree,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    lemma: Check,
    #[command(flatten)]
    input: GraphInput,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    alpha: Option<AlphaParam>,
    /// Constant C of the regular-join check; defaults to ⌈1/α⌉.
    #[arg(long)]
    c: Option<f64>,
    /// Largest part for the local checks.
    #[arg(long, default_value_t = 7)]
    max_part: usize,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    s: usize,
    #[arg(long)]
    t: usize,
    #[arg(long, default_value = "0.5")]
    alpha: AlphaParam,
    /// Evaluate only edge-maximal graphs (default).
    #[arg(long, conflicts_with = "full")]
    pruned: bool,
    /// Evaluate every minor-free graph.
    #[arg(long)]
    full: bool,
    /// Worker threads.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Args)]
struct ReportArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Without a graph, report on G* of this order.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long, default_value = "0.5")]
    alpha: AlphaParam,
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<kst_core::Error> for Failure {
    fn from(e: kst_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Run<T> = std::result::Result<T, Failure>;

fn need<T>(x: Option<T>, flag: &str) -> Run<T> {
    x.ok_or_else(|| Failure::Usage(format!("--{flag} is required here")))
}

fn params(s: Option<usize>, t: Option<usize>) -> Run<StParams> {
    Ok(StParams::new(need(s, "s")?, need(t, "t")?)?)
}

impl GraphInput {
    fn given(&self) -> bool {
        self.graph6.is_some() || self.file.is_some()
    }

    /// Every graph from --graph6, --file or stdin.
    fn read_all(&self) -> Run<Vec<Graph>> {
        let text = match (&self.graph6, &self.file) {
            (Some(g), _) => g.clone(),
            (None, Some(path)) => std::fs::read_to_string(path)?,
            (None, None) => {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s)?;
                s
            }
        };
        let graphs = graph6::decode_lines(&text)?;
        if graphs.is_empty() {
            return Err(Failure::Usage("no graph given".into()));
        }
        Ok(graphs)
    }

    fn read_one(&self) -> Run<Graph> {
        let mut all = self.read_all()?;
        if all.len() > 1 {
            return Err(Failure::Usage(format!("expected one graph, got {}", all.len())));
        }
        Ok(all.remove(0))
    }
}

fn construct(a: &ConstructArgs) -> Run<Graph> {
    let n = || need(a.n, "n");
    let g = match a.family {
        Family::Fst => f_st(n()?, params(a.s, a.t)?)?,
        Family::Gstar => extremal_gstar(n()?, params(a.s, a.t)?)?,
        Family::Hst => h_st(params(a.s, a.t)?)?,
        Family::HstComplement => h_st_complement(params(a.s, a.t)?)?,
        Family::HstSubdivided => s1(&h_st_complement(params(a.s, a.t)?)?)?,
        Family::Petersen => petersen(),
        Family::PetersenComplement => petersen_complement(),
        Family::Habc => h_abc(need(a.a, "a")?, need(a.b, "b")?, need(a.c, "c")?)?,
        Family::Complete => Graph::complete(n()?)?,
        Family::Cycle => Graph::cycle(n()?)?,
        Family::Path => Graph::path(n()?)?,
        Family::CompleteBipartite => Graph::complete_bipartite(need(a.a, "a")?, need(a.b, "b")?)?,
    };
    Ok(g)
}

fn graph_record(g: &Graph) -> Value {
    object([
        ("graph6", Value::from(graph6::encode(g))),
        ("order", Value::from(g.order())),
        ("edges", Value::from(g.edge_count())),
    ])
}

fn rho_records(a: &RhoArgs) -> Run<Vec<Value>> {
    let mut out = Vec::new();
    for g in a.input.read_all()? {
        for &alpha in &a.alpha {
            let r = spectral_radius(&g, alpha)?;
            let mut rec = graph_record(&g);
            let m = rec.as_object_mut().expect("object");
            m.insert("alpha".into(), to_value(&alpha));
            m.insert("rho".into(), to_value(&r.rho));
            m.insert("converged".into(), Value::from(r.converged));
            if a.perron {
                m.insert("perron".into(), to_value(&r.perron));
            }
            out.push(rec);
        }
    }
    Ok(out)
}

fn minor_check(a: &MinorArgs) -> Run<Option<Value>> {
    let host = a.input.read_one()?;
    let witness = match &a.pattern {
        Pattern::CompleteBipartite(s, t) if host.order() > GENERIC_HOST_LIMIT => find_kab_minor(&host, *s, *t),
        p => has_minor(&host, &p.graph()?)?,
    };
    Ok(witness.map(|w| to_value(&w.branch_sets)))
}

/// The graph from --graph6/--file, or G* built from --n --s --t.
fn graph_or_gstar(input: &GraphInput, n: Option<usize>, p: StParams) -> Run<Graph> {
    if input.given() {
        input.read_one()
    } else {
        Ok(extremal_gstar(need(n, "n")?, p)?)
    }
}

fn clique_of(g: &Graph, p: StParams) -> Run<VertexSet> {
    clique_dominating_set(g, p.s - 1)
        .ok_or_else(|| Failure::Usage(format!("graph has no clique dominating set of size {}", p.s - 1)))
}

/// K_{s,t}-minor freedom: direct up to the generic limit, through the
/// clique reduction above it.
fn minor_free_record(g: &Graph, p: StParams) -> Run<(Value, bool)> {
    if g.order() <= GENERIC_HOST_LIMIT {
        let fast = is_kst_minor_free(g, p.s, p.t);
        let generic = has_minor(g, &Graph::complete_bipartite(p.s, p.t)?)?.is_none();
        let rec = object([
            ("method", Value::from("direct")),
            ("minor_free", Value::from(fast && generic)),
            ("engines_agree", Value::from(fast == generic)),
        ]);
        return Ok((rec, fast && generic));
    }
    let k = clique_of(g, p)?;
    let comps = g.components_within(g.vertices().difference(k).mask());
    let failing: Vec<Value> =
        comps.iter().filter(|&&c| !has_st_property(&g.induced(c), p)).map(to_value).collect();
    let ok = failing.is_empty();
    let rec = object([
        ("method", Value::from("reduction")),
        ("clique", to_value(&k)),
        ("components", Value::from(comps.len())),
        ("failing_components", Value::Array(failing)),
        ("minor_free", Value::from(ok)),
    ]);
    Ok((rec, ok))
}

fn verify(a: &VerifyArgs) -> Run<(Value, bool)> {
    let alpha = || need(a.alpha, "alpha");
    let n = || need(a.n, "n");
    let p = || params(a.s, a.t);
    macro_rules! report {
        ($r:expr) => {{
            let r = $r;
            let ok = r.passed();
            let mut v = to_value(&r);
            if let Value::Object(m) = &mut v {
                m.insert("passed".into(), Value::from(ok));
            }
            Ok((v, ok))
        }};
    }
    match a.lemma {
        Check::JoinBound => {
            let r = verify_join_lower_bound(n()?, need(a.s, "s")?, alpha()?)?;
            let ok = r.holds;
            Ok((to_value(&r), ok))
        }
        Check::Sandwich => report!(verify_lemma23(n()?, p()?, alpha()?)?),
        Check::StarBound => report!(verify_lemma24(need(a.t, "t")?, n()?)?),
        Check::Cubic => report!(verify_lemma25(n()?, need(a.s, "s")?, alpha()?)?),
        Check::RegularJoin => {
            let (n, p) = (n()?, p()?);
            let h = if a.input.given() {
                a.input.read_one()?
            } else {
                regular_circulant((n + 1).saturating_sub(p.s), p.t - 1)?
            };
            report!(verify_lemma26(n, p.s, p.t, alpha()?, &h, a.c)?)
        }
        Check::Reduction => {
            let p = p()?;
            report!(verify_lemma210(&a.input.read_one()?, p.s, p.t)?)
        }
        Check::ComplementComponents => {
            let p = p()?;
            report!(verify_lemma211(p.t, p.s)?)
        }
        Check::EdgeMaximal => {
            let p = p()?;
            report!(verify_lemma212(p.t, p.s)?)
        }
        Check::TwoExtra => {
            let p = p()?;
            report!(verify_lemma215(p.t, p.s)?)
        }
        Check::Perron => {
            let p = p()?;
            let g = graph_or_gstar(&a.input, a.n, p)?;
            let k = clique_of(&g, p)?;
            report!(perron_component_bounds(&g, k, p, alpha()?)?)
        }
        Check::LocalEdges | Check::Majorization => {
            let p = p()?;
            let g = graph_or_gstar(&a.input, a.n, p)?;
            let k = clique_of(&g, p)?;
            let r = if a.lemma == Check::LocalEdges {
                verify_local_edge_maximality(&g, k, p.s, p.t, a.max_part)?
            } else {
                verify_degree_majorization_maximality(&g, k, p.s, p.t, a.max_part)?
            };
            let ok = if a.lemma == Check::LocalEdges { r.edges_ok() } else { r.majorization_ok() };
            let mut v = to_value(&r);
            if let Value::Object(m) = &mut v {
                m.insert("passed".into(), Value::from(ok));
            }
            Ok((v, ok))
        }
        Check::Structure => {
            let p = p()?;
            report!(verify_structure(&graph_or_gstar(&a.input, a.n, p)?, p.s, p.t)?)
        }
        Check::MinorFree => {
            let p = p()?;
            minor_free_record(&graph_or_gstar(&a.input, a.n, p)?, p)
        }
    }
}

fn search(a: &SearchArgs) -> Run<(Value, Graph)> {
    let opts = SearchOptions { pruned: !a.full, jobs: a.jobs };
    let r = brute_force_extremal(a.n, StParams::new(a.s, a.t)?, a.alpha, opts)?;
    Ok((to_value(&r), r.best_graph))
}

fn report(a: &ReportArgs) -> Run<Value> {
    let st = match (a.s, a.t) {
        (None, None) => None,
        (s, t) => Some(params(s, t)?),
    };
    let g = match st {
        Some(p) if !a.input.given() => extremal_gstar(need(a.n, "n")?, p)?,
        _ => a.input.read_one()?,
    };
    let mut rec = graph_record(&g);
    let m = rec.as_object_mut().expect("object");
    m.insert("degree_sequence".into(), to_value(&g.degree_sequence()));
    m.insert("connected".into(), Value::from(g.is_connected()));
    m.insert("components".into(), Value::from(g.components().len()));
    m.insert("alpha".into(), to_value(&a.alpha));
    m.insert("rho".into(), to_value(&spectral_radius(&g, a.alpha)?.rho));
    m.insert("q_index".into(), to_value(&q_index(&g)?));
    if let Some(p) = st {
        m.insert("beta".into(), Value::from(p.beta()));
        m.insert("gamma".into(), Value::from(p.gamma()));
        if let Ok(plan) = GStarPlan::new(g.order(), p) {
            m.insert("gstar_case".into(), Value::from(plan.case.number()));
        }
        if let Some(k) = clique_dominating_set(&g, p.s - 1) {
            m.insert("clique".into(), to_value(&k));
            m.insert("census".into(), to_value(&component_census(&g, k, p.t)));
        }
        if g.order() <= GENERIC_HOST_LIMIT || clique_dominating_set(&g, p.s - 1).is_some() {
            let (v, _) = minor_free_record(&g, p)?;
            m.insert("kst_minor_free".into(), v);
        }
    }
    Ok(rec)
}

fn run(cli: &Cli, out: &mut impl Write) -> Run<()> {
    let json_default = cli.format.unwrap_or(Format::Json);
    let no_graph6 = |what: &str| Failure::Usage(format!("{what} has no graph6 output"));
    match &cli.command {
        Command::Construct(a) => {
            let g = construct(a)?;
            match cli.format.unwrap_or(Format::Graph6) {
                Format::Graph6 => writeln!(out, "{}", graph6::encode(&g))?,
                f => write_records(out, &[graph_record(&g)], f)?,
            }
        }
        Command::Rho(a) => {
            if json_default == Format::Graph6 {
                return Err(no_graph6("rho"));
            }
            write_records(out, &rho_records(a)?, json_default)?
        }
        Command::MinorCheck(a) => match (minor_check(a)?, json_default) {
            (_, Format::Graph6) => return Err(no_graph6("minor-check")),
            (None, _) => writeln!(out, "minor-free")?,
            (Some(w), Format::Json) => writeln!(out, "{w}")?,
            (Some(w), f) => write_records(out, &[object([("branch_sets", w)])], f)?,
        },
        Command::Verify(a) => {
            if json_default == Format::Graph6 {
                return Err(no_graph6("verify"));
            }
            let (v, ok) = verify(a)?;
            write_records(out, &[v], json_default)?;
            if !ok {
                return Err(Failure::Verification);
            }
        }
        Command::Search(a) => {
            let (v, best) = search(a)?;
            match json_default {
                Format::Graph6 => writeln!(out, "{}", graph6::encode(&best))?,
                f => write_records(out, &[v], f)?,
            }
        }
        Command::Report(a) => {
            if json_default == Format::Graph6 {
                return Err(no_graph6("report"));
            }
            write_records(out, &[report(a)?], json_default)?
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
