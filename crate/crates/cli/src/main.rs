//! Command-line surface over the exact M-spectra library.
//!
//! Exit codes: 0 success (and true verdicts), 1 false verdict under
//! --strict, 2 input/usage errors, 3 internal invariant violations (two
//! theorem routes disagreeing — never expected on valid builds).

use clap::{Args, Parser, Subcommand, ValueEnum};
use mspectra_core::analysis;
use mspectra_core::census;
use mspectra_core::constructions;
use mspectra_core::control::{self, BmuScope};
use mspectra_core::error::Error as CoreError;
use mspectra_core::family::{charpoly_m, deleted_charpoly};
use mspectra_core::fixtures;
use mspectra_core::graph6;
use mspectra_core::products::{self, CMatrix};
use mspectra_core::rat::parse_rat;
use mspectra_core::verify::{self, VerifyConfig};
use mspectra_core::{Graph, MatrixKind};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

const CORPUS_ENV: &str = "MSPECTRA_CORPUS_DIR";

#[derive(Parser)]
#[command(
    name = "mspectra",
    about = "Exact M-spectra of graphs and graph products: separability, Wronskian vertices, controllability, cospectral constructions, census",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Single-graph input: a fixture spec, an inline graph6 string, or an
/// edge-list file (`n;` header then `i j [w]` lines).
#[derive(Args, Clone)]
struct GraphInput {
    /// Fixture spec: H1..H10, P:n, G1:n:k, Fig1Product, optional +v:len pendant suffix
    #[arg(long, conflicts_with_all = ["graph6", "edges"])]
    fixture: Option<String>,
    /// Inline graph6 string
    #[arg(long, conflicts_with = "edges")]
    graph6: Option<String>,
    /// Edge-list file path
    #[arg(long)]
    edges: Option<PathBuf>,
}

impl GraphInput {
    fn load(&self) -> Result<Graph, CoreError> {
        if let Some(f) = &self.fixture {
            return fixtures::fixture(f);
        }
        if let Some(g6) = &self.graph6 {
            return graph6::parse_graph6(g6);
        }
        if let Some(path) = &self.edges {
            let text = std::fs::read_to_string(path)?;
            return Graph::parse_edge_list(&text);
        }
        Err(CoreError::invalid(
            "no graph given: use --fixture, --graph6, or --edges",
        ))
    }
}

/// Two-factor graph spec string: the fixture grammar, `g6:<string>`, or
/// `file:<path>` (edge-list format).
fn parse_spec(spec: &str) -> Result<Graph, CoreError> {
    if let Some(rest) = spec.strip_prefix("g6:") {
        return graph6::parse_graph6(rest);
    }
    if let Some(rest) = spec.strip_prefix("file:") {
        let text = std::fs::read_to_string(rest)?;
        return Graph::parse_edge_list(&text);
    }
    fixtures::fixture(spec)
}

fn parse_kind(s: &str) -> Result<MatrixKind, String> {
    s.parse().map_err(|e: CoreError| e.to_string())
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductKind {
    Rooted,
    C,
    Cartesian,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// M-characteristic polynomial of a graph
    Charpoly {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_parser = parse_kind, default_value = "A")]
        kind: MatrixKind,
        #[arg(long)]
        json: bool,
    },
    /// Charpoly of the principal submatrix with one vertex deleted
    DeletedCharpoly {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_parser = parse_kind, default_value = "A")]
        kind: MatrixKind,
        #[arg(long)]
        vertex: usize,
        #[arg(long)]
        json: bool,
    },
    /// Construct a graph product and print it
    Product {
        /// rooted | c | cartesian
        #[arg(long, value_enum)]
        kind: ProductKind,
        #[arg(long, value_parser = parse_spec)]
        g: Graph,
        #[arg(long, value_parser = parse_spec)]
        h: Graph,
        /// Root vertex of H (rooted products)
        #[arg(long)]
        root: Option<usize>,
        /// 0/1 text grid file for the C matrix (C products)
        #[arg(long)]
        cmatrix: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Separability (squarefree charpoly) of a graph or product
    Separable {
        #[command(flatten)]
        graph: GraphInput,
        /// Decide for the rooted product --g o --h instead of a single graph
        #[arg(long, requires = "g", requires = "h", requires = "root")]
        rooted: bool,
        /// Decide for the Cartesian product --g x --h
        #[arg(long, requires = "g", requires = "h")]
        cartesian: bool,
        /// Decide for the C-product --g o_C --h with --cmatrix
        #[arg(long, requires = "g", requires = "h", requires = "cmatrix")]
        cproduct: bool,
        #[arg(long, value_parser = parse_spec)]
        g: Option<Graph>,
        #[arg(long, value_parser = parse_spec)]
        h: Option<Graph>,
        #[arg(long)]
        root: Option<usize>,
        #[arg(long)]
        cmatrix: Option<PathBuf>,
        #[arg(long, value_parser = parse_kind, default_value = "A")]
        kind: MatrixKind,
        /// Exit 1 when the verdict is false
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        json: bool,
    },
    /// Wronskian-vertex verdict for one vertex (or all with --all)
    Wronskian {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_parser = parse_kind, default_value = "A")]
        kind: MatrixKind,
        #[arg(long, required_unless_present = "all")]
        vertex: Option<usize>,
        /// List all Wronskian vertices instead
        #[arg(long)]
        all: bool,
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        json: bool,
    },
    /// Factored spectrum of a rooted product (resultant route, verified)
    FactorSpectrum {
        #[arg(long, value_parser = parse_spec)]
        g: Graph,
        #[arg(long, value_parser = parse_spec)]
        h: Graph,
        #[arg(long)]
        root: usize,
        #[arg(long, value_parser = parse_kind, default_value = "A")]
        kind: MatrixKind,
        #[arg(long)]
        json: bool,
    },
    /// M-controllability of a graph (walk-matrix rank)
    Controllable {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long, value_parser = parse_kind, default_value = "A")]
        kind: MatrixKind,
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        json: bool,
    },
    /// Rooted-product controllability with the three-condition decomposition
    RootedControllable {
        #[arg(long, value_parser = parse_spec)]
        g: Graph,
        #[arg(long, value_parser = parse_spec)]
        h: Graph,
        #[arg(long)]
        root: usize,
        #[arg(long, value_parser = parse_kind, default_value = "A")]
        kind: MatrixKind,
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        json: bool,
    },
    /// Symbolic B(mu) controllability over all reals or over a spectrum
    Bmu {
        #[arg(long, value_parser = parse_spec)]
        h: Graph,
        #[arg(long)]
        root: usize,
        #[arg(long, value_parser = parse_kind, default_value = "A")]
        kind: MatrixKind,
        /// Check over every real mu
        #[arg(long, conflicts_with = "spectrum_of")]
        universal: bool,
        /// Check over the spectrum of this graph
        #[arg(long, value_parser = parse_spec)]
        spectrum_of: Option<Graph>,
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        json: bool,
    },
    /// Verified cospectral separable pair from two cospectral bases
    CospectralPair {
        #[arg(long, value_parser = parse_spec)]
        g1: Graph,
        #[arg(long, value_parser = parse_spec)]
        g2: Graph,
        #[arg(long, value_parser = parse_spec)]
        h: Graph,
        #[arg(long)]
        root: usize,
        #[arg(long, value_parser = parse_kind, default_value = "A")]
        kind: MatrixKind,
        #[arg(long)]
        json: bool,
    },
    /// Pendant-path family with verified Wronskian pendants
    WronskianFamily {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        vertex: usize,
        #[arg(long, value_parser = parse_kind, default_value = "A")]
        kind: MatrixKind,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        json: bool,
    },
    /// Wronskian verdicts over an exact rational alpha grid
    AlphaSweep {
        #[command(flatten)]
        graph: GraphInput,
        #[arg(long)]
        vertex: usize,
        /// Grid denominator: sweeps k/DENOM for k = 0..DENOM-1
        #[arg(long, default_value_t = 64)]
        grid: u32,
        /// Extra exact alphas, comma separated (e.g. 2/3,1/5)
        #[arg(long)]
        extra: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Census of connected graphs: separable / controllable / Wronskian counts
    Census {
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_parser = parse_kind, default_value = "A")]
        kind: MatrixKind,
        /// graph6 corpus file (one graph per line); relative paths resolve
        /// against $MSPECTRA_CORPUS_DIR when set
        #[arg(long, conflicts_with = "order")]
        graph6: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "tsv")]
        out: OutFormat,
        /// Also group the corpus into cospectral classes
        #[arg(long)]
        classes: bool,
        /// Also check that every controllable graph has a Wronskian vertex
        #[arg(long)]
        subset_check: bool,
    },
    /// Run the full theorem cross-check suite
    Verify {
        #[arg(long, default_value_t = verify::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                CoreError::InvariantViolation(_) => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn verdict_exit(verdict: bool, strict: bool) -> ExitCode {
    if verdict || !strict {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn graph_json(g: &Graph) -> serde_json::Value {
    let mut v = serde_json::to_value(g).expect("graph serializes");
    if !g.is_weighted() && g.order() <= 62 {
        if let Ok(enc) = graph6::encode_graph6(g) {
            v["graph6"] = json!(enc);
        }
    }
    v
}

fn load_cmatrix(path: &PathBuf) -> Result<CMatrix, CoreError> {
    let text = std::fs::read_to_string(path)?;
    CMatrix::parse_grid(&text)
}

fn run(cli: Cli) -> Result<ExitCode, CoreError> {
    match cli.command {
        Command::Charpoly { graph, kind, json } => {
            let g = graph.load()?;
            let phi = charpoly_m(&g, &kind);
            if json {
                println!(
                    "{}",
                    json!({"kind": kind.to_string(), "charpoly": phi, "display": phi.to_string()})
                );
            } else {
                println!("{phi}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::DeletedCharpoly {
            graph,
            kind,
            vertex,
            json,
        } => {
            let g = graph.load()?;
            let phi = deleted_charpoly(&g, &kind, vertex)?;
            if json {
                println!(
                    "{}",
                    json!({"kind": kind.to_string(), "vertex": vertex, "charpoly": phi, "display": phi.to_string()})
                );
            } else {
                println!("{phi}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Product {
            kind,
            g,
            h,
            root,
            cmatrix,
            json,
        } => {
            let prod = match kind {
                ProductKind::Rooted => {
                    let root =
                        root.ok_or_else(|| CoreError::invalid("rooted product needs --root"))?;
                    products::rooted_product(&g, &h, root)?
                }
                ProductKind::Cartesian => products::cartesian_product(&g, &h)?,
                ProductKind::C => {
                    let path =
                        cmatrix.ok_or_else(|| CoreError::invalid("c product needs --cmatrix"))?;
                    products::c_product(&g, &h, &load_cmatrix(&path)?)?
                }
            };
            if json {
                println!("{}", graph_json(&prod.graph));
            } else {
                print!("{}", prod.graph.to_edge_list());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Separable {
            graph,
            rooted,
            cartesian,
            cproduct,
            g,
            h,
            root,
            cmatrix,
            kind,
            strict,
            json,
        } => {
            let theorem_route = rooted.then_some(());
            let v = if rooted {
                analysis::rooted_separability(&g.unwrap(), &h.unwrap(), root.unwrap(), &kind)?
            } else if cartesian {
                analysis::cartesian_separability(&g.unwrap(), &h.unwrap(), &kind)?
            } else if cproduct {
                let c = load_cmatrix(&cmatrix.unwrap())?;
                analysis::general_c_separability(&g.unwrap(), &h.unwrap(), &c, &kind)?
            } else {
                analysis::is_separable(&graph.load()?, &kind)?
            };
            if json {
                println!(
                    "{}",
                    json!({
                        "verdict": v.separable,
                        "certificate": {
                            "gcd_with_derivative": v.certificate,
                            "attribution": v.attribution,
                        },
                        "routes": {
                            "direct_squarefree": v.separable,
                            "theorem": theorem_route.map(|_| v.separable),
                        },
                        "charpoly": v.charpoly,
                    })
                );
            } else {
                println!(
                    "separable: {} (gcd with derivative: {})",
                    v.separable, v.certificate
                );
            }
            Ok(verdict_exit(v.separable, strict))
        }
        Command::Wronskian {
            graph,
            kind,
            vertex,
            all,
            strict,
            json,
        } => {
            let g = graph.load()?;
            if all {
                let vs = analysis::all_wronskian_vertices(&g, &kind)?;
                if json {
                    println!("{}", json!({"wronskian_vertices": vs}));
                } else {
                    println!(
                        "wronskian vertices: {}",
                        vs.iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>()
                            .join(" ")
                    );
                }
                return Ok(ExitCode::SUCCESS);
            }
            let rep = analysis::wronskian_vertex(&g, &kind, vertex.unwrap())?;
            if json {
                println!(
                    "{}",
                    json!({
                        "verdict": rep.is_wronskian,
                        "certificate": {"gcd": rep.gcd, "wronskian_real_roots": rep.wronskian_real_roots},
                        "routes": {
                            "gcd_trivial": rep.gcd.is_one(),
                            "wronskian_root_free": rep.wronskian_real_roots == 0,
                        },
                        "order_one_convention": rep.order_one_convention,
                    })
                );
            } else {
                println!(
                    "wronskian vertex: {} (gcd {}, W real roots {}{})",
                    rep.is_wronskian,
                    rep.gcd,
                    rep.wronskian_real_roots,
                    if rep.order_one_convention {
                        ", order-1 convention"
                    } else {
                        ""
                    }
                );
            }
            Ok(verdict_exit(rep.is_wronskian, strict))
        }
        Command::FactorSpectrum {
            g,
            h,
            root,
            kind,
            json,
        } => {
            let s = analysis::rooted_spectrum_factors(&g, &h, root, &kind)?;
            if json {
                println!("{}", serde_json::to_string(&s).expect("serializable"));
            } else {
                println!("product charpoly: {}", s.product_charpoly);
                println!("h charpoly: {}", s.h_charpoly);
                println!("h deleted charpoly: {}", s.h_deleted_charpoly);
                for f in &s.factors {
                    println!(
                        "  factor at mu in ({}, {}] multiplicity {}",
                        mspectra_core::rat::format_rat(&f.mu_interval.lo),
                        mspectra_core::rat::format_rat(&f.mu_interval.hi),
                        f.multiplicity
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Controllable {
            graph,
            kind,
            strict,
            json,
        } => {
            let rep = control::is_controllable_graph(&graph.load()?, &kind)?;
            if json {
                println!("{}", serde_json::to_string(&rep).expect("serializable"));
            } else {
                println!(
                    "controllable: {} (walk rank {}/{}, connected {})",
                    rep.controllable, rep.walk_matrix_rank, rep.order, rep.connected
                );
            }
            Ok(verdict_exit(rep.controllable, strict))
        }
        Command::RootedControllable {
            g,
            h,
            root,
            kind,
            strict,
            json,
        } => {
            let rep = control::rooted_controllability(&g, &h, root, &kind)?;
            if json {
                println!("{}", serde_json::to_string(&rep).expect("serializable"));
            } else {
                println!(
                    "controllable: {} (product walk rank {}/{}; base {}; gcd {}; B(mu) over spectrum {})",
                    rep.product.controllable,
                    rep.product.walk_matrix_rank,
                    rep.product.order,
                    rep.base.controllable,
                    rep.charpoly_gcd,
                    rep.bmu.controllable
                );
            }
            Ok(verdict_exit(rep.product.controllable, strict))
        }
        Command::Bmu {
            h,
            root,
            kind,
            universal,
            spectrum_of,
            strict,
            json,
        } => {
            let scope = if universal {
                BmuScope::AllReals
            } else {
                let sg = spectrum_of.ok_or_else(|| {
                    CoreError::invalid("bmu needs --universal or --spectrum-of <graph>")
                })?;
                BmuScope::Spectrum(charpoly_m(&sg, &kind))
            };
            let rep = control::bmu_controllable(&h, root, &kind, &scope)?;
            if json {
                println!("{}", serde_json::to_string(&rep).expect("serializable"));
            } else {
                println!(
                    "B(mu) controllable on scope: {} (deficiency locus {})",
                    rep.controllable, rep.locus
                );
            }
            Ok(verdict_exit(rep.controllable, strict))
        }
        Command::CospectralPair {
            g1,
            g2,
            h,
            root,
            kind,
            json,
        } => {
            let rep = constructions::cospectral_rooted_pair(&g1, &g2, &h, root, &kind)?;
            if json {
                println!("{}", serde_json::to_string(&rep).expect("serializable"));
            } else {
                println!("shared charpoly: {}", rep.charpoly);
                println!(
                    "separable: {}; non-isomorphic: {}{}",
                    rep.separable,
                    rep.non_isomorphic,
                    if rep.degenerate {
                        " (degenerate: isomorphic bases)"
                    } else {
                        ""
                    }
                );
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::WronskianFamily {
            graph,
            vertex,
            kind,
            n_max,
            json,
        } => {
            let g = graph.load()?;
            let fam = constructions::wronskian_family(&g, vertex, &kind, n_max)?;
            if json {
                println!("{}", serde_json::to_string(&fam).expect("serializable"));
            } else {
                for (i, m) in fam.iter().enumerate() {
                    println!(
                        "n={}: order {}, pendant v{}, verified {}",
                        i + 1,
                        m.graph.order(),
                        m.pendant,
                        m.verified
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::AlphaSweep {
            graph,
            vertex,
            grid,
            extra,
            json,
        } => {
            let g = graph.load()?;
            let mut points = constructions::unit_grid(grid);
            if let Some(extra) = extra {
                for part in extra.split(',') {
                    points.push(parse_rat(part)?);
                }
            }
            let sweep = constructions::alpha_sweep(&g, vertex, &points)?;
            if json {
                println!("{}", serde_json::to_string(&sweep).expect("serializable"));
            } else {
                println!("grid points: {}", sweep.verdicts.len());
                if sweep.hits.is_empty() {
                    println!("hits: none");
                } else {
                    for (alpha, gcd) in &sweep.hits {
                        println!("hit alpha={alpha} gcd={gcd}");
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Census {
            order,
            kind,
            graph6: corpus,
            jobs,
            out,
            classes,
            subset_check,
        } => {
            let graphs = match (order, corpus) {
                (Some(n), None) => census::generate_connected(n)?,
                (None, Some(path)) => {
                    let path = resolve_corpus_path(path);
                    let text = std::fs::read_to_string(&path)?;
                    graph6::parse_graph6_lines(&text)?
                }
                _ => {
                    return Err(CoreError::invalid(
                        "census needs exactly one of --order or --graph6",
                    ))
                }
            };
            let row = census::census_graphs(&graphs, &kind, jobs)?;
            match out {
                OutFormat::Tsv => {
                    println!("{}", census::CensusRow::TSV_HEADER);
                    println!("{}", row.to_tsv());
                }
                OutFormat::Json => println!("{}", serde_json::to_string(&row).expect("row")),
            }
            if classes {
                let cls = census::cospectral_classes(&graphs, &kind);
                let nontrivial: Vec<_> = cls.iter().filter(|(_, m)| m.len() > 1).collect();
                println!(
                    "cospectral classes: {} total, {} nontrivial",
                    cls.len(),
                    nontrivial.len()
                );
                for (p, members) in nontrivial {
                    println!("  {} members share {}", members.len(), p);
                }
            }
            if subset_check {
                let (ok, cex) = census::subset_observation(&graphs, &kind)?;
                println!("controllable-implies-wronskian: {ok} (counterexamples: {cex:?})");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { seed, cases } => {
            let cfg = VerifyConfig { seed, cases };
            let results = verify::run_all(&cfg)?;
            let mut all_ok = true;
            for r in &results {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                println!("[{status}] {} ({} cases)", r.name, r.cases);
                for f in &r.failures {
                    println!("    {f}");
                }
                all_ok &= r.passed();
            }
            if all_ok {
                Ok(ExitCode::SUCCESS)
            } else {
                Err(CoreError::invariant("verification suite failed"))
            }
        }
    }
}

fn resolve_corpus_path(path: PathBuf) -> PathBuf {
    if path.is_relative() {
        if let Ok(dir) = std::env::var(CORPUS_ENV) {
            let joined = PathBuf::from(dir).join(&path);
            if joined.exists() {
                return joined;
            }
        }
    }
    path
}
