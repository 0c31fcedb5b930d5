//! Command-line front end: chromatic numbers and clique covers with
//! certificates, criticality scans, the H-free complexity classifier,
//! hardness-instance generation, and the verification suites.
//!
//! Exit codes: 0 success/verified, 1 counterexample found, 2 usage error,
//! 3 resource cap exceeded.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use critgraph::chromatic::{
    chi, chi_exact_capped, clique_cover_number_capped, ChromaticError, DEFAULT_VERTEX_CAP,
};
use critgraph::criticality::{
    criticality_report, has_contraction_critical_edge, has_critical_edge, has_critical_vertex,
    ScanOptions,
};
use critgraph::dimacs;
use critgraph::graph::Graph;
use critgraph::hfree::{classify_h, is_h_free};
use critgraph::reductions::{
    build_clique_proof_instance, build_edge_gadget, build_grotzsch_instance, build_vertex_gadget,
    oracle_1in3, parse_formula, to_target_instance, FormulaError,
};
use critgraph::verify::{self, VerifyReport};

const EXIT_OK: i32 = 0;
const EXIT_COUNTEREXAMPLE: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_RESOURCE: i32 = 3;

#[derive(Parser)]
#[command(
    name = "critgraph",
    version,
    about = "Critical vertices and edges of graphs: exact coloring, clique covers, \
             H-free complexity classification, hardness-instance generation, and \
             machine-checked verification suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit reports as JSON
    #[arg(long, global = true)]
    json: bool,

    /// Seed for randomized suites (default: M1IN3_SEED env var, then 0)
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Number of worker threads (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Suppress timestamps and timings so reports are byte-identical
    #[arg(long, global = true)]
    deterministic: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Chromatic number of a DIMACS graph, with the method used
    Chi {
        file: PathBuf,
        /// Print the certificate coloring
        #[arg(long)]
        certificate: bool,
        /// Raise the exact solver's vertex cap
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Clique covering number and a certifying cover
    Sigma {
        file: PathBuf,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Critical vertices / edges / contraction-critical edges
    Critical {
        file: PathBuf,
        #[arg(long)]
        vertices: bool,
        #[arg(long)]
        edges: bool,
        #[arg(long)]
        contraction: bool,
        /// Scan everything (default when no kind is selected)
        #[arg(long)]
        all: bool,
        /// Existence only, with early exit
        #[arg(long)]
        exists: bool,
        /// Derive contraction-critical edges from deletion-critical ones
        #[arg(long)]
        assume_prop1: bool,
        /// Keep a witness coloring per critical element
        #[arg(long)]
        witness: bool,
    },
    /// Complexity of Critical Vertex / Critical Edge / Contraction-Critical
    /// Edge restricted to H-free graphs, for the given H
    Classify {
        /// DIMACS file holding H
        #[arg(value_name = "H")]
        file: PathBuf,
    },
    /// Check a graph against a family of forbidden induced subgraphs
    Hfree {
        /// The host graph
        #[arg(long)]
        g: PathBuf,
        /// Comma-separated pattern files
        #[arg(long, value_delimiter = ',', required = true)]
        patterns: Vec<PathBuf>,
    },
    /// 1-in-3 satisfiability of a Monotone 1-in-3-SAT formula
    Oracle { file: PathBuf },
    /// Generate hardness instances (DIMACS to stdout or --out)
    Gen {
        #[command(subcommand)]
        what: GenCommand,
    },
    /// Run a verification suite; exit 1 on any counterexample
    Verify {
        suite: Suite,
        /// prop1: enumerate all labeled graphs on this many vertices
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        /// Sample count for randomized suites
        #[arg(long)]
        samples: Option<usize>,
        /// Formula size for claim2 (must be divisible by 3)
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// poly-colorers: cograph sample count
        #[arg(long, default_value_t = 200)]
        cograph_samples: usize,
        /// poly-colorers: (P1+P3)-free sample count
        #[arg(long, default_value_t = 500)]
        p1p3_samples: usize,
        /// poly-colorers: exhaustive brute-force check up to this order
        #[arg(long, default_value_t = 7)]
        brute_max_n: usize,
        /// Directory for counterexample artifacts
        #[arg(long, value_name = "DIR", default_value = "counterexamples")]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// 2G + K_{l+1}
    CliqueProof {
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        ell: usize,
        /// Emit the complement instead
        #[arg(long)]
        complement: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// 2G + the Grötzsch graph (G must be triangle-free)
    Grotzsch {
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        complement: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// C7 clause gadget graph of a formula (the vertex reduction)
    SatVertex {
        #[arg(long)]
        f: PathBuf,
        /// Emit the complement: the target-class instance
        #[arg(long)]
        complement: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// C11 clause gadget graph of a formula (the edge reduction)
    SatEdge {
        #[arg(long)]
        f: PathBuf,
        #[arg(long)]
        complement: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Prop1,
    Thm3,
    Thm4,
    Claim2,
    Claim3,
    MainVertex,
    MainEdge,
    PolyColorers,
    GadgetStructure,
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn resource(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_RESOURCE,
            message: message.into(),
        }
    }
}

impl From<ChromaticError> for Failure {
    fn from(e: ChromaticError) -> Failure {
        match e {
            ChromaticError::VertexCap { .. } | ChromaticError::ColorCap { .. } => {
                Failure::resource(e.to_string())
            }
            ChromaticError::NotP1P3Free { .. } => Failure::usage(e.to_string()),
        }
    }
}

impl From<FormulaError> for Failure {
    fn from(e: FormulaError) -> Failure {
        match e {
            FormulaError::OracleCap { .. } => Failure::resource(e.to_string()),
            _ => Failure::usage(e.to_string()),
        }
    }
}

fn main() {
    std::process::exit(real_main());
}

fn real_main() -> i32 {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .is_err()
        {
            eprintln!("error: could not configure {jobs} worker threads");
            return EXIT_USAGE;
        }
    }
    let seed = cli.seed.unwrap_or_else(|| {
        std::env::var("M1IN3_SEED")
            .ok()
            .and_then(|s| s.parse().ok())
            .unwrap_or(0)
    });
    match run(cli, seed) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

fn read_graph_file(path: &Path) -> Result<Graph, Failure> {
    let text = read_to_string(path)?;
    dimacs::parse_graph(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn read_formula_file(path: &Path) -> Result<critgraph::reductions::Monotone1in3Formula, Failure> {
    let text = read_to_string(path)?;
    parse_formula(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

fn read_to_string(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    fs::File::open(path)
        .and_then(|mut f| f.read_to_string(&mut text))
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn emit_json(cli: &Cli, command: &str, seed: Option<u64>, payload: serde_json::Value) {
    let mut obj = json!({
        "schema": 1,
        "command": command,
    });
    let map = obj.as_object_mut().expect("object");
    if let Some(seed) = seed {
        map.insert("seed".into(), json!(seed));
    }
    if !cli.deterministic {
        let now = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        map.insert("timestamp".into(), json!(now));
    }
    if let serde_json::Value::Object(fields) = payload {
        map.extend(fields);
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&obj).expect("serializable")
    );
}

fn run(cli: Cli, seed: u64) -> Result<i32, Failure> {
    match &cli.command {
        Command::Chi {
            file,
            certificate,
            cap,
        } => {
            let g = read_graph_file(file)?;
            let result = match cap {
                Some(cap) => chi_exact_capped(&g, *cap)?,
                None => chi(&g)?,
            };
            if cli.json {
                let mut payload = json!({
                    "chi": result.chi,
                    "method": result.method,
                });
                if *certificate {
                    payload["coloring"] = json!(result.coloring);
                }
                emit_json(&cli, "chi", None, payload);
            } else {
                println!("chi={} method={:?}", result.chi, result.method);
                if *certificate {
                    let colors: Vec<String> =
                        result.coloring.iter().map(|c| c.to_string()).collect();
                    println!("coloring: {}", colors.join(" "));
                }
            }
            Ok(EXIT_OK)
        }
        Command::Sigma { file, cap } => {
            let g = read_graph_file(file)?;
            let (sigma, cover) = clique_cover_number_capped(&g, cap.unwrap_or(DEFAULT_VERTEX_CAP))?;
            if cli.json {
                emit_json(
                    &cli,
                    "sigma",
                    None,
                    json!({ "sigma": sigma, "cover": cover.cliques }),
                );
            } else {
                println!("sigma={sigma}");
                for clique in &cover.cliques {
                    let verts: Vec<String> = clique.iter().map(|v| v.to_string()).collect();
                    println!("clique: {}", verts.join(" "));
                }
            }
            Ok(EXIT_OK)
        }
        Command::Critical {
            file,
            vertices,
            edges,
            contraction,
            all,
            exists,
            assume_prop1,
            witness,
        } => {
            let g = read_graph_file(file)?;
            let none_selected = !vertices && !edges && !contraction;
            let opts = ScanOptions {
                vertices: *vertices || *all || none_selected,
                edges: *edges || *all || none_selected,
                contraction: *contraction || *all || none_selected,
                witnesses: *witness,
                assume_prop1: *assume_prop1,
            };
            if *exists {
                let mut payload = serde_json::Map::new();
                let mut lines = Vec::new();
                if opts.vertices {
                    let has = has_critical_vertex(&g)?;
                    payload.insert("has_critical_vertex".into(), json!(has));
                    lines.push(format!("has_critical_vertex={has}"));
                }
                if opts.edges {
                    let has = has_critical_edge(&g)?;
                    payload.insert("has_critical_edge".into(), json!(has));
                    lines.push(format!("has_critical_edge={has}"));
                }
                if opts.contraction {
                    let has = has_contraction_critical_edge(&g)?;
                    payload.insert("has_contraction_critical_edge".into(), json!(has));
                    lines.push(format!("has_contraction_critical_edge={has}"));
                }
                if cli.json {
                    emit_json(&cli, "critical", None, serde_json::Value::Object(payload));
                } else {
                    for l in lines {
                        println!("{l}");
                    }
                }
                return Ok(EXIT_OK);
            }
            let report = criticality_report(&g, opts)?;
            if cli.json {
                emit_json(
                    &cli,
                    "critical",
                    None,
                    serde_json::to_value(&report).expect("serializable"),
                );
            } else {
                println!("chi={}", report.chi);
                if let Some(vs) = &report.critical_vertices {
                    let parts: Vec<String> = vs.iter().map(|v| v.to_string()).collect();
                    println!("critical_vertices ({}): {}", vs.len(), parts.join(" "));
                }
                if let Some(es) = &report.critical_edges {
                    let parts: Vec<String> = es.iter().map(|e| e.to_string()).collect();
                    println!("critical_edges ({}): {}", es.len(), parts.join(" "));
                }
                if let Some(es) = &report.contraction_critical_edges {
                    let parts: Vec<String> = es.iter().map(|e| e.to_string()).collect();
                    println!(
                        "contraction_critical_edges ({}): {}",
                        es.len(),
                        parts.join(" ")
                    );
                }
            }
            Ok(EXIT_OK)
        }
        Command::Classify { file } => {
            let h = read_graph_file(file)?;
            let c = classify_h(&h).map_err(|e| Failure::usage(e.to_string()))?;
            if cli.json {
                emit_json(
                    &cli,
                    "classify",
                    None,
                    serde_json::to_value(c).expect("serializable"),
                );
            } else {
                println!("{:?} (rule: {:?})", c.verdict, c.rule);
            }
            Ok(EXIT_OK)
        }
        Command::Hfree { g, patterns } => {
            let host = read_graph_file(g)?;
            let pattern_graphs: Vec<Graph> = patterns
                .iter()
                .map(|p| read_graph_file(p))
                .collect::<Result<_, _>>()?;
            let report = is_h_free(&host, &pattern_graphs);
            if cli.json {
                let entries: Vec<serde_json::Value> = patterns
                    .iter()
                    .zip(&report.hits)
                    .map(|(p, hit)| {
                        json!({
                            "pattern": p.display().to_string(),
                            "present": hit.is_some(),
                            "witness": hit,
                        })
                    })
                    .collect();
                emit_json(
                    &cli,
                    "hfree",
                    None,
                    json!({ "free": report.all_free(), "patterns": entries }),
                );
            } else {
                for (p, hit) in patterns.iter().zip(&report.hits) {
                    match hit {
                        Some(w) => println!("{}: present witness={w:?}", p.display()),
                        None => println!("{}: absent", p.display()),
                    }
                }
                println!("family-free: {}", report.all_free());
            }
            Ok(EXIT_OK)
        }
        Command::Oracle { file } => {
            let f = read_formula_file(file)?;
            let assignment = oracle_1in3(&f)?;
            if cli.json {
                emit_json(
                    &cli,
                    "oracle",
                    None,
                    json!({
                        "one_satisfiable": assignment.is_some(),
                        "assignment": assignment,
                    }),
                );
            } else {
                match assignment {
                    Some(a) => {
                        let bits: Vec<&str> =
                            a.iter().map(|&b| if b { "1" } else { "0" }).collect();
                        println!("1-satisfiable: true");
                        println!("assignment: {}", bits.join(" "));
                    }
                    None => println!("1-satisfiable: false"),
                }
            }
            Ok(EXIT_OK)
        }
        Command::Gen { what } => {
            let (graph, out) = match what {
                GenCommand::CliqueProof {
                    g,
                    ell,
                    complement,
                    out,
                } => {
                    if *ell < 1 {
                        return Err(Failure::usage("--ell must be at least 1"));
                    }
                    let base = read_graph_file(g)?;
                    let inst = build_clique_proof_instance(&base, *ell);
                    (maybe_complement(inst, *complement), out)
                }
                GenCommand::Grotzsch { g, complement, out } => {
                    let base = read_graph_file(g)?;
                    let inst = build_grotzsch_instance(&base)
                        .map_err(|e| Failure::usage(e.to_string()))?;
                    (maybe_complement(inst, *complement), out)
                }
                GenCommand::SatVertex { f, complement, out } => {
                    let formula = read_formula_file(f)?;
                    let gg = build_vertex_gadget(&formula);
                    let inst = if *complement {
                        to_target_instance(&gg)
                    } else {
                        gg.graph
                    };
                    (inst, out)
                }
                GenCommand::SatEdge { f, complement, out } => {
                    let formula = read_formula_file(f)?;
                    let gg = build_edge_gadget(&formula);
                    let inst = if *complement {
                        to_target_instance(&gg)
                    } else {
                        gg.graph
                    };
                    (inst, out)
                }
            };
            let text = dimacs::graph_to_string(&graph);
            match out {
                Some(path) => fs::write(path, text)
                    .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            suite,
            max_n,
            samples,
            n,
            cograph_samples,
            p1p3_samples,
            brute_max_n,
            out,
        } => {
            let report = match suite {
                Suite::Prop1 => {
                    if *max_n > 7 {
                        return Err(Failure::usage(
                            "prop1 enumerates 2^(n choose 2) graphs; --max-n over 7 is not practical",
                        ));
                    }
                    verify::run_prop1(*max_n)
                }
                Suite::Thm3 => verify::run_thm3(samples.unwrap_or(50), seed),
                Suite::Thm4 => verify::run_thm4(samples.unwrap_or(30), seed),
                Suite::Claim2 => {
                    if n % 3 != 0 {
                        return Err(Failure::usage("claim2 needs --n divisible by 3"));
                    }
                    verify::run_claim2(*n, samples.unwrap_or(20), seed)
                }
                Suite::Claim3 => verify::run_claim3(),
                Suite::MainVertex => verify::run_main_vertex(samples.unwrap_or(20), seed),
                Suite::MainEdge => verify::run_main_edge(),
                Suite::PolyColorers => {
                    verify::run_poly_colorers(*cograph_samples, *p1p3_samples, *brute_max_n, seed)
                }
                Suite::GadgetStructure => {
                    verify::run_gadget_structure(&[3, 6, 9], samples.unwrap_or(3), seed)
                }
            };
            report_verify(&cli, seed, report, out)
        }
    }
}

fn maybe_complement(g: Graph, complement: bool) -> Graph {
    if complement {
        g.complement()
    } else {
        g
    }
}

fn report_verify(
    cli: &Cli,
    seed: u64,
    mut report: VerifyReport,
    out: &Path,
) -> Result<i32, Failure> {
    if cli.deterministic {
        report.wall_seconds = None;
    }
    // counterexample persistence is mandatory: any failure here would
    // contradict a theorem and must be replayable
    if !report.passed() {
        fs::create_dir_all(out).map_err(|e| Failure::usage(format!("{}: {e}", out.display())))?;
        for (i, ce) in report.counterexamples.iter().enumerate() {
            for (name, contents) in &ce.artifacts {
                let path = out.join(format!("{:03}-{name}", i));
                fs::write(&path, contents)
                    .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            }
            let path = out.join(format!("{:03}-replay.txt", i));
            fs::write(&path, format!("{}\nreplay: {}\n", ce.label, ce.replay))
                .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
        }
    }
    if cli.json {
        emit_json(
            cli,
            "verify",
            Some(seed),
            serde_json::to_value(&report).expect("serializable"),
        );
    } else {
        let wall = report
            .wall_seconds
            .map(|s| format!(" wall={s:.2}s"))
            .unwrap_or_default();
        println!(
            "suite={} seed={seed} cases={} passed={}{wall}",
            report.suite, report.cases_run, report.cases_passed
        );
        for ce in &report.counterexamples {
            println!("counterexample: {}", ce.label);
        }
        if !report.passed() {
            println!("artifacts written to {}", out.display());
        }
    }
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    })
}
