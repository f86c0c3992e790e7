use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use geodometer::gallery::{
    basis_graph, basis_graph_z, quotient_hn_graph, word_graph_h, word_graph_hz, CayleyGraph,
    EdgeRule, GraphSpec, GraphTask, WordGraph,
};
use geodometer::geodesy::{
    erasure_rank, generalized_radius, is_zigzag_free, max_zigzag_geodesic, pset,
};
use geodometer::graph::{
    ball, distance, eccentricity, is_geodesic, GeodPath, ImplicitGraph, DEFAULT_BUDGET,
};
use geodometer::harness::{reproduce, Bundle, RunReport};
use geodometer::isometry::{
    h_component_analysis, rule_one_cut_check, weak_iso_specs, weak_transitive_check,
    SEARCH_BUDGET,
};
use geodometer::ordinal::{parse_ordinal, ExtOrdinal};
use geodometer::transfinite::{dist_eta, label_eta, label_eta_truncated, radius_eta, EtaElement};
use geodometer::Error;

const EXIT_ASSERTION: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "geodometer", version, about = "Geodesics, generalised radii and weak isomorphism on graph truncations")]
struct Cli {
    /// Cap on vertices explored by any single search.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: usize,

    /// Seed for randomised checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Generalised radius at a vertex (label of the root).
    Radius {
        graph: GraphSpec,
        #[arg(long)]
        root: Option<String>,
        /// Fail unless the radius equals this ordinal.
        #[arg(long)]
        expect: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
    },
    /// Brute-force erasure of all geodesic paths from a vertex.
    Erasure {
        graph: GraphSpec,
        #[arg(long)]
        maxlen: usize,
        #[arg(long)]
        root: Option<String>,
        /// Also list every path with its rank.
        #[arg(long)]
        paths: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
    },
    /// Longest zigzag-free geodesic from a vertex, up to a horizon.
    Zigzag {
        graph: GraphSpec,
        #[arg(long)]
        horizon: usize,
        #[arg(long)]
        root: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
    },
    /// Checks a path file against the path set of a basis graph.
    Pset {
        graph: GraphSpec,
        /// File with a `base: <int>` header and one vertex per line.
        #[arg(long)]
        check: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
    },
    /// Generalised radius of the group G_eta.
    EtaRadius {
        eta: String,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
    },
    /// Distance and label of one element of G_eta.
    EtaLabel {
        eta: String,
        #[arg(long)]
        element: String,
        /// Use the truncation keeping coefficients below k at limit levels.
        #[arg(long)]
        truncate: Option<u32>,
        #[arg(long)]
        expect: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
    },
    /// Largest radius up to which two matched families have isomorphic balls.
    Weakiso {
        family_a: GraphSpec,
        family_b: GraphSpec,
        #[arg(long)]
        radius: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
    },
    /// Whether all balls around the region vertices are rooted isomorphic.
    Weaktrans {
        graph: GraphSpec,
        #[arg(long = "region", required = true)]
        region: Vec<String>,
        #[arg(long)]
        radius: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
    },
    /// Component analysis of a word in the word graph.
    Hcomp {
        word: String,
        #[arg(long, default_value = "wordH:M=5,depth=3")]
        graph: GraphSpec,
        #[arg(long)]
        horizon: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
    },
    /// Writes a ball as JSON or Graphviz.
    Export {
        graph: GraphSpec,
        #[arg(long, value_enum)]
        format: ExportFormat,
        #[arg(long)]
        radius: usize,
        #[arg(long)]
        root: Option<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Runs one reproduction bundle.
    Reproduce {
        bundle: String,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
    },
    /// Graph distance between two vertices.
    Distance {
        graph: GraphSpec,
        u: String,
        v: String,
        #[arg(long, default_value_t = 64)]
        cap: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: ReportFormat,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_budget() { EXIT_BUDGET } else { EXIT_USAGE })
        }
    }
}

fn emit(report: RunReport, format: ReportFormat) -> ExitCode {
    match format {
        ReportFormat::Json => println!("{}", report.to_json()),
        ReportFormat::Text => print!("{}", report.to_text()),
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_ASSERTION)
    }
}

fn parse_expected(text: &Option<String>) -> Result<Option<ExtOrdinal>, Error> {
    text.as_deref().map(parse_ordinal).transpose()
}

fn root_of<G: ImplicitGraph>(g: &G, root: &Option<String>) -> Result<G::Vertex, Error> {
    match root {
        Some(text) => g.parse_vertex(text),
        None => Ok(g.origin()),
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let budget = cli.budget;
    let started = Instant::now();
    match cli.command {
        Command::Radius { graph, root, expect, format } => {
            let expect = parse_expected(&expect)?;
            let mut report = RunReport::new("radius", Some(graph.to_string()));
            graph.dispatch(RadiusTask { root, budget, report: &mut report }, budget)??;
            if let Some(want) = expect {
                let got = report.results["radius"].as_str().unwrap_or_default().to_string();
                report.check(format!("radius = {want}"), got == want.notation(), Some(got));
            }
            Ok(emit(report.finish(started), format))
        }
        Command::Erasure { graph, maxlen, root, paths, format } => {
            let mut report = RunReport::new("erasure", Some(graph.to_string()));
            graph.dispatch(ErasureTask { root, maxlen, paths, budget, report: &mut report }, budget)??;
            Ok(emit(report.finish(started), format))
        }
        Command::Zigzag { graph, horizon, root, format } => {
            let mut report = RunReport::new("zigzag", Some(graph.to_string()));
            graph.dispatch(ZigzagTask { root, horizon, budget, report: &mut report }, budget)??;
            Ok(emit(report.finish(started), format))
        }
        Command::Pset { graph, check, format } => {
            let g = cayley_for(&graph)?;
            let text = fs::read_to_string(&check)
                .map_err(|e| Error::InvalidPath(format!("{}: {e}", check.display())))?;
            let path = parse_path_file(&g, &text)?;
            let labels = pset::path_labels(&g, &path)?;
            let mut report = RunReport::new("pset", Some(graph.to_string()));
            report.result("base", path.base);
            report.result("labels", &labels);
            report.result("member", pset::pset_member(&labels));
            report.result("member_one_sided", pset::pset_member_one_sided(&labels));
            if labels.len() >= 3 {
                let prog = pset::pset_progression(&labels, path.base)?;
                report.result(
                    "progression",
                    prog.map(|(a, b)| serde_json::json!({ "a": a, "b": b })),
                );
            }
            report.result("geodesic", is_geodesic(&g, &path, budget)?);
            report.result("zigzag_free", is_zigzag_free(&g, &path)?);
            Ok(emit(report.finish(started), format))
        }
        Command::EtaRadius { eta, format } => {
            let eta = finite_eta(&eta)?;
            let r = radius_eta(&eta);
            let mut report = RunReport::new("eta-radius", Some(format!("eta:eta={eta}")));
            report.result("eta", eta.notation());
            report.result("radius", r.notation());
            report.check("radius = eta", r == ExtOrdinal::Ord(eta.clone()), Some(r.notation()));
            Ok(emit(report.finish(started), format))
        }
        Command::EtaLabel { eta, element, truncate, expect, format } => {
            let eta = finite_eta(&eta)?;
            let expect = parse_expected(&expect)?;
            let e: EtaElement = element.parse()?;
            let label = match truncate {
                Some(k) => label_eta_truncated(&eta, &e, k)?,
                None => label_eta(&eta, &e)?,
            };
            let graph = match truncate {
                Some(k) => format!("eta:eta={eta},k={k}"),
                None => format!("eta:eta={eta}"),
            };
            let mut report = RunReport::new("eta-label", Some(graph));
            report.result("element", e.to_string());
            report.result("distance", dist_eta(&eta, &e)?);
            report.result("label", label.notation());
            if let Some(want) = expect {
                report.check(format!("label = {want}"), label == want, Some(label.notation()));
            }
            Ok(emit(report.finish(started), format))
        }
        Command::Weakiso { family_a, family_b, radius, format } => {
            let (a, b, result) = weak_iso_specs(&family_a, &family_b, radius, budget, SEARCH_BUDGET)?;
            let mut report = RunReport::new("weakiso", Some(format!("{a} | {b}")));
            report.result("matched", [a.to_string(), b.to_string()]);
            report.result("K", result.k);
            report.result("local_distance", result.local_distance);
            report.result("isomorphic", &result.isomorphic);
            report.check(
                "isomorphic radii are downward closed",
                result.downward_closed,
                None,
            );
            Ok(emit(report.finish(started), format))
        }
        Command::Weaktrans { graph, region, radius, format } => {
            let mut report = RunReport::new("weaktrans", Some(graph.to_string()));
            graph.dispatch(WeakTransTask { region, radius, budget, report: &mut report }, budget)??;
            Ok(emit(report.finish(started), format))
        }
        Command::Hcomp { word, graph, horizon, format } => {
            let h = word_graph_for(&graph)?;
            let w = h.parse_vertex(&word)?;
            let analysis = h_component_analysis(&h, &w, horizon, budget)?;
            let mut report = RunReport::new("hcomp", Some(graph.to_string()));
            report.result("component", &analysis);
            let neighbours = h.neighbors(&w);
            if let Some(other) = neighbours
                .iter()
                .find(|x| h.edge_kind(&w, x) == Some(EdgeRule::AppendZero))
            {
                let cut = rule_one_cut_check(&h, &w, other, horizon, budget)?;
                report.result("append_zero_neighbour", h.vertex_id(other));
                report.check(
                    format!("no detour of length <= {} around the append-zero edge", 2 * horizon),
                    cut,
                    None,
                );
            }
            Ok(emit(report.finish(started), format))
        }
        Command::Export { graph, format, radius, root, output } => {
            let text = graph.dispatch(ExportTask { root, radius, budget, format }, budget)??;
            match output {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| Error::InvalidPath(format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Reproduce { bundle, format } => {
            let bundle: Bundle = bundle.parse()?;
            Ok(emit(reproduce(bundle, budget, cli.seed), format))
        }
        Command::Distance { graph, u, v, cap, format } => {
            let mut report = RunReport::new("distance", Some(graph.to_string()));
            graph.dispatch(DistanceTask { u, v, cap, budget, report: &mut report }, budget)??;
            Ok(emit(report.finish(started), format))
        }
    }
}

fn finite_eta(text: &str) -> Result<geodometer::Ordinal, Error> {
    match parse_ordinal(text)? {
        ExtOrdinal::Ord(o) => Ok(o),
        ExtOrdinal::Inf => Err(Error::InvalidSpec("eta must not be INF".into())),
    }
}

fn cayley_for(spec: &GraphSpec) -> Result<CayleyGraph, Error> {
    match *spec {
        GraphSpec::Basis { m } => basis_graph(m),
        GraphSpec::BasisZ { m } => basis_graph_z(m),
        GraphSpec::Hn { n, m } => quotient_hn_graph(n, m),
        _ => Err(Error::InvalidSpec(format!("{spec} is not a basis Cayley graph"))),
    }
}

fn word_graph_for(spec: &GraphSpec) -> Result<WordGraph, Error> {
    match *spec {
        GraphSpec::WordH { m, depth } => word_graph_h(m, depth),
        GraphSpec::WordHz { m, depth } => word_graph_hz(m, depth),
        _ => Err(Error::InvalidSpec(format!("{spec} is not a word graph"))),
    }
}

/// `base: <int>` then one vertex per line; blank lines and `#` comments are
/// skipped.
fn parse_path_file<G: ImplicitGraph>(g: &G, text: &str) -> Result<GeodPath<G::Vertex>, Error> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::InvalidPath("empty path file".into()))?;
    let base = header
        .strip_prefix("base:")
        .and_then(|b| b.trim().parse::<i64>().ok())
        .ok_or_else(|| Error::InvalidPath(format!("expected `base: <int>`, got {header:?}")))?;
    let vertices = lines.map(|l| g.parse_vertex(l)).collect::<Result<Vec<_>, _>>()?;
    let path = GeodPath::with_base(base, vertices);
    path.validate(g)?;
    Ok(path)
}

struct RadiusTask<'a> {
    root: Option<String>,
    budget: usize,
    report: &'a mut RunReport,
}

impl GraphTask for RadiusTask<'_> {
    type Output = Result<(), Error>;
    fn run<G: ImplicitGraph>(self, g: &G) -> Result<(), Error> {
        let o = root_of(g, &self.root)?;
        let r = generalized_radius(g, &o, self.budget)?;
        self.report.result("root", g.vertex_id(&o));
        self.report.result("radius", r.notation());
        if let Some(e) = eccentricity(g, &o, self.budget, self.budget)? {
            self.report.result("eccentricity", e);
        }
        Ok(())
    }
}

struct ErasureTask<'a> {
    root: Option<String>,
    maxlen: usize,
    paths: bool,
    budget: usize,
    report: &'a mut RunReport,
}

impl GraphTask for ErasureTask<'_> {
    type Output = Result<(), Error>;
    fn run<G: ImplicitGraph>(self, g: &G) -> Result<(), Error> {
        let o = root_of(g, &self.root)?;
        let e = erasure_rank(g, &o, self.maxlen, self.budget, self.budget)?;
        let label = generalized_radius(g, &o, self.budget)?;
        self.report.result("root", g.vertex_id(&o));
        self.report.result("radius", e.radius.notation());
        self.report.result("path_count", e.path_count());
        self.report.result("rounds", e.rounds);
        if self.paths {
            let ranks: Vec<serde_json::Value> = e
                .ranks()
                .into_iter()
                .map(|(p, r)| {
                    let ids: Vec<String> = p.vertices.iter().map(|v| g.vertex_id(v)).collect();
                    serde_json::json!({ "path": ids, "rank": r })
                })
                .collect();
            self.report.result("paths", ranks);
        }
        self.report.check(
            "erasure radius = root label",
            e.radius == label,
            Some(format!("label {label}")),
        );
        Ok(())
    }
}

struct ZigzagTask<'a> {
    root: Option<String>,
    horizon: usize,
    budget: usize,
    report: &'a mut RunReport,
}

impl GraphTask for ZigzagTask<'_> {
    type Output = Result<(), Error>;
    fn run<G: ImplicitGraph>(self, g: &G) -> Result<(), Error> {
        let o = root_of(g, &self.root)?;
        let len = max_zigzag_geodesic(g, &o, self.horizon, self.budget)?;
        self.report.result("root", g.vertex_id(&o));
        self.report.result("horizon", self.horizon);
        self.report.result("max_zigzag_geodesic", len);
        Ok(())
    }
}

struct WeakTransTask<'a> {
    region: Vec<String>,
    radius: usize,
    budget: usize,
    report: &'a mut RunReport,
}

impl GraphTask for WeakTransTask<'_> {
    type Output = Result<(), Error>;
    fn run<G: ImplicitGraph>(self, g: &G) -> Result<(), Error> {
        let region = self
            .region
            .iter()
            .map(|v| g.parse_vertex(v))
            .collect::<Result<Vec<_>, _>>()?;
        let r = weak_transitive_check(g, &region, self.radius, self.budget, SEARCH_BUDGET)?;
        let passed = r.passed;
        let detail = r.counterexample.as_ref().map(|(a, b)| format!("{a} vs {b}"));
        self.report.result("weak_transitivity", r);
        self.report.check(
            format!("balls of radius {} are rooted isomorphic", self.radius),
            passed,
            detail,
        );
        Ok(())
    }
}

struct ExportTask {
    root: Option<String>,
    radius: usize,
    budget: usize,
    format: ExportFormat,
}

impl GraphTask for ExportTask {
    type Output = Result<String, Error>;
    fn run<G: ImplicitGraph>(self, g: &G) -> Result<String, Error> {
        let o = root_of(g, &self.root)?;
        let b = ball(g, &o, self.radius, self.budget)?;
        Ok(match self.format {
            ExportFormat::Json => b.to_json() + "\n",
            ExportFormat::Dot => b.to_dot(&format!("{} at {}", g.describe(), g.vertex_id(&o))),
        })
    }
}

struct DistanceTask<'a> {
    u: String,
    v: String,
    cap: usize,
    budget: usize,
    report: &'a mut RunReport,
}

impl GraphTask for DistanceTask<'_> {
    type Output = Result<(), Error>;
    fn run<G: ImplicitGraph>(self, g: &G) -> Result<(), Error> {
        let u = g.parse_vertex(&self.u)?;
        let v = g.parse_vertex(&self.v)?;
        let d = distance(g, &u, &v, self.cap, self.budget)?;
        self.report.result("u", g.vertex_id(&u));
        self.report.result("v", g.vertex_id(&v));
        self.report.result("cap", self.cap);
        self.report.result("distance", d);
        Ok(())
    }
}
