//! `zf`: command-line front end for the zforcing library.
//!
//! Exit codes: 0 success, 1 a check failed or a solver precondition does not
//! hold, 2 usage or input parse error.

use std::fmt::Write as _;
use std::io::Read;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use zforcing::exact::{
    connected_forcing_number_exact_with, spread_zc, zero_forcing_number_with, ExactOptions, SpreadTarget,
};
use zforcing::family::{
    applicable_method, block_graph_zc, cactus_zc, greedy_zc, solve_auto, tree_zc, unicyclic_zc, Method,
    MethodResult,
};
use zforcing::forcing::{derive, ForceOrder};
use zforcing::generate::{generate, GeneratorSpec};
use zforcing::graph::io::{parse_auto, to_dot, write_dimacs, write_edge_list};
use zforcing::graph::{classify_family, BlockDecomposition};
use zforcing::reduction::{czf_reduction, equality_report, verify_reduction};
use zforcing::setsystem::{check_axioms, AxiomOptions, SetFamily};
use zforcing::structure::{lower_bounds, structural_sets};
use zforcing::validate::{validate_corpus, CorpusSizes, ValidationConfig};
use zforcing::{DuplicatePolicy, Error, Graph};

#[derive(Parser)]
#[command(name = "zf", version, about = "Zero forcing and connected zero forcing toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GraphInput {
    /// Edge-list or DIMACS file; `-` reads stdin.
    graph: String,
    /// Drop repeated edges instead of rejecting the input.
    #[arg(long)]
    dedup: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph.
    Gen(GenArgs),
    /// Exact Z(G), or Z_c(G) with --connected.
    Exact {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        connected: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        json: bool,
    },
    /// Z_c(G) by the closed-form solver for the graph's family.
    Family {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum)]
        expect: Option<Expect>,
        #[arg(long)]
        witness: bool,
        #[arg(long)]
        json: bool,
    },
    /// Minimal connected forcing set by greedy vertex removal.
    Greedy {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        json: bool,
    },
    /// Vertex classes, pendant paths, lower bounds and block depths.
    Structure {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        json: bool,
    },
    /// Run the color change rule from a vertex set.
    Trace {
        #[command(flatten)]
        input: GraphInput,
        /// Comma-separated initial vertices.
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<usize>,
        /// Pick eligible forcers at random from this seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Print DOT with initial, forced and uncolored vertices filled differently.
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Change in Z_c after deleting a vertex or an edge.
    Spread {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_delimiter = ',', num_args = 1, conflicts_with = "vertex", required_unless_present = "vertex")]
        edge: Option<Vec<usize>>,
        #[arg(long)]
        vertex: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Build the reduction graph G′ (hub plus two leaves).
    Reduce {
        #[command(flatten)]
        input: GraphInput,
        /// Also check Z_c(G′) = Z(G) + 2 exactly.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check (M1)-(M3) on the complements of all connected forcing sets.
    Axioms {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, default_value_t = 20)]
        cap: usize,
        #[arg(long)]
        json: bool,
    },
    /// Compare Z(G) and Z_c(G) via the minimum zero forcing sets.
    Equality {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        json: bool,
    },
    /// Cross-check family solvers, exact solver and bounds on a random corpus.
    Validate(ValidateArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Expect {
    Tree,
    Unicyclic,
    Cactus,
    Block,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFamily {
    Path,
    Cycle,
    Star,
    Complete,
    Spider,
    RandomTree,
    RandomUnicyclic,
    RandomCactus,
    RandomBlock,
    RandomOuterCactus,
    RandomConnected,
    G1Spread,
    G2Spread,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Edges,
    Dimacs,
    Dot,
    Json,
}

#[derive(Args)]
struct GenArgs {
    #[arg(value_enum)]
    family: GenFamily,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    leaves: Option<usize>,
    #[arg(long)]
    legs: Option<usize>,
    #[arg(long)]
    len: Option<usize>,
    #[arg(long, default_value_t = 0)]
    extra: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "edges")]
    format: GraphFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Table,
    Csv,
    Json,
}

#[derive(Args)]
struct ValidateArgs {
    #[arg(long, default_value_t = 500)]
    trees: usize,
    #[arg(long, default_value_t = 500)]
    unicyclic: usize,
    #[arg(long, default_value_t = 200)]
    cactus: usize,
    #[arg(long, default_value_t = 200)]
    block: usize,
    #[arg(long, default_value_t = 4)]
    min_n: usize,
    #[arg(long, default_value_t = 12)]
    max_n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads; 0 uses all cores.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[arg(long, value_enum, default_value = "table")]
    format: ReportFormat,
    /// Print failing rows only (table format).
    #[arg(long)]
    failures_only: bool,
}

/// A command outcome: output text and whether the run counts as a failure.
struct Outcome {
    text: String,
    failed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, failed: false }
    }
}

enum Failure {
    Usage(anyhow::Error),
    Check(anyhow::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::InvalidParameter(_) => Failure::Usage(e.into()),
            _ => Failure::Check(e.into()),
        }
    }
}

type CmdResult = Result<Outcome, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Check(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn load(input: &GraphInput) -> Result<Graph, Failure> {
    let text = if input.graph == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")
            .map_err(Failure::Usage)?;
        s
    } else {
        std::fs::read_to_string(&input.graph)
            .with_context(|| format!("reading {}", input.graph))
            .map_err(Failure::Usage)?
    };
    let policy = if input.dedup {
        DuplicatePolicy::Dedup
    } else {
        DuplicatePolicy::Strict
    };
    parse_auto(&text, policy).map_err(|e| Failure::Usage(anyhow!(e).context(format!("parsing {}", input.graph))))
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn set_str(s: &[usize]) -> String {
    let parts: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn run(cmd: Command) -> CmdResult {
    match cmd {
        Command::Gen(args) => cmd_gen(args),
        Command::Exact {
            input,
            connected,
            jobs,
            witness,
            json: as_json,
        } => {
            let g = load(&input)?;
            let opts = ExactOptions { jobs: jobs.max(1) };
            let r = if connected {
                connected_forcing_number_exact_with(&g, opts)?
            } else {
                zero_forcing_number_with(&g, opts)?
            };
            if as_json {
                return Ok(Outcome::ok(json(&r)));
            }
            let name = if connected { "Z_c" } else { "Z" };
            let mut out = format!(
                "{name} = {}\nsets examined: {}\nelapsed: {:.3}s\n",
                r.value,
                r.sets_examined,
                r.elapsed.as_secs_f64()
            );
            if witness {
                writeln!(out, "witness: {}", set_str(&r.witness)).unwrap();
            }
            Ok(Outcome::ok(out))
        }
        Command::Family {
            input,
            expect,
            witness,
            json: as_json,
        } => cmd_family(&load(&input)?, expect, witness, as_json),
        Command::Greedy { input, json: as_json } => {
            let g = load(&input)?;
            let r = greedy_zc(&g)?;
            let r = MethodResult {
                method: Method::Greedy,
                result: r,
            };
            if as_json {
                return Ok(Outcome::ok(json(&r)));
            }
            Ok(Outcome::ok(format!(
                "greedy value = {}\nwitness: {}\n",
                r.result.value,
                set_str(&r.result.witness)
            )))
        }
        Command::Structure { input, json: as_json } => cmd_structure(&load(&input)?, as_json),
        Command::Trace {
            input,
            set,
            seed,
            dot,
            json: as_json,
        } => {
            let g = load(&input)?;
            let order = seed.map_or(ForceOrder::Deterministic, ForceOrder::Seeded);
            let t = derive(&g, &set, order)?;
            if as_json {
                return Ok(Outcome::ok(json(&t)));
            }
            if dot {
                let mut fill: Vec<Option<&str>> = vec![None; g.n()];
                for &v in &t.derived_set {
                    fill[v] = Some("lightblue");
                }
                for &v in &t.initial_set {
                    fill[v] = Some("steelblue");
                }
                return Ok(Outcome::ok(to_dot(&g, Some(&fill))));
            }
            let mut out = String::new();
            writeln!(out, "initial: {}", set_str(&t.initial_set)).unwrap();
            for (i, (u, v)) in t.forces.iter().enumerate() {
                writeln!(out, "{:>4}. {u} -> {v}", i + 1).unwrap();
            }
            writeln!(out, "derived: {} of {} vertices", t.derived_set.len(), g.n()).unwrap();
            for chain in &t.chains {
                let parts: Vec<String> = chain.iter().map(|v| v.to_string()).collect();
                writeln!(out, "chain: {}", parts.join(" -> ")).unwrap();
            }
            writeln!(out, "forcing set: {}", if t.is_complete(&g) { "yes" } else { "no" }).unwrap();
            Ok(Outcome::ok(out))
        }
        Command::Spread {
            input,
            edge,
            vertex,
            json: as_json,
        } => {
            let g = load(&input)?;
            let target = match (edge, vertex) {
                (Some(e), _) if e.len() == 2 => SpreadTarget::Edge(e[0], e[1]),
                (Some(_), _) => return Err(Failure::Usage(anyhow!("--edge takes two vertices, e.g. --edge 2,3"))),
                (None, Some(v)) => SpreadTarget::Vertex(v),
                (None, None) => unreachable!("clap requires one target"),
            };
            let r = spread_zc(&g, target)?;
            if as_json {
                return Ok(Outcome::ok(json(&r)));
            }
            Ok(Outcome::ok(format!(
                "Z_c(G) = {}\nZ_c(G - target) = {}\nspread = {}\n",
                r.zc_before, r.zc_after, r.spread
            )))
        }
        Command::Reduce {
            input,
            verify,
            json: as_json,
        } => {
            let g = load(&input)?;
            let inst = czf_reduction(&g);
            let report = if verify { Some(verify_reduction(&g)?) } else { None };
            let failed = report.as_ref().is_some_and(|r| !r.holds);
            if as_json {
                #[derive(Serialize)]
                struct Out<'a> {
                    v_star: usize,
                    l1: usize,
                    l2: usize,
                    transformed: &'a Graph,
                    verification: Option<&'a zforcing::reduction::ReductionReport>,
                }
                let out = Out {
                    v_star: inst.v_star,
                    l1: inst.l1,
                    l2: inst.l2,
                    transformed: &inst.transformed,
                    verification: report.as_ref(),
                };
                return Ok(Outcome { text: json(&out), failed });
            }
            let mut out = write_edge_list(&inst.transformed);
            if let Some(r) = report {
                writeln!(
                    out,
                    "# Z(G) = {}, Z_c(G') = {}, Z_c(G') = Z(G) + 2: {}",
                    r.z.value,
                    r.zc_transformed.value,
                    if r.holds { "holds" } else { "FAILS" }
                )
                .unwrap();
            }
            Ok(Outcome { text: out, failed })
        }
        Command::Axioms {
            input,
            cap,
            json: as_json,
        } => {
            let g = load(&input)?;
            if g.n() > cap {
                return Err(Error::CapExceeded { size: g.n(), cap }.into());
            }
            let fam = SetFamily::connected_forcing_complement(&g)?;
            let r = check_axioms(&fam, AxiomOptions { cap, ..Default::default() })?;
            if as_json {
                #[derive(Serialize)]
                struct Out<'a> {
                    #[serde(flatten)]
                    report: &'a zforcing::setsystem::AxiomReport,
                    paper_greedoid: bool,
                    matroid: bool,
                }
                let out = Out {
                    report: &r,
                    paper_greedoid: r.paper_greedoid(),
                    matroid: r.matroid(),
                };
                return Ok(Outcome::ok(json(&out)));
            }
            let yn = |b: bool| if b { "yes" } else { "no" };
            let mut out = String::new();
            writeln!(out, "family: complements of the {} connected forcing sets", fam.members().len()).unwrap();
            writeln!(out, "M1: {}", yn(r.m1)).unwrap();
            writeln!(out, "M2: {}", yn(r.m2)).unwrap();
            if let Some(w) = &r.m2_witness {
                writeln!(out, "  {} is in the family, its subset {} is not", set_str(&w.superset), set_str(&w.subset)).unwrap();
            }
            writeln!(out, "M3: {} ({:?})", yn(r.m3), r.m3_mode).unwrap();
            if let Some(w) = &r.m3_witness {
                writeln!(
                    out,
                    "  A = {}: maximal subsets {} and {} differ in size",
                    set_str(&w.a),
                    set_str(&w.larger),
                    set_str(&w.smaller)
                )
                .unwrap();
            }
            writeln!(out, "paper-greedoid (M1+M3): {}", yn(r.paper_greedoid())).unwrap();
            writeln!(out, "matroid: {}", yn(r.matroid())).unwrap();
            Ok(Outcome::ok(out))
        }
        Command::Equality { input, json: as_json } => {
            let g = load(&input)?;
            let r = equality_report(&g)?;
            if as_json {
                return Ok(Outcome::ok(json(&r)));
            }
            let mut out = format!(
                "Z = {}\nZ_c = {}\nequal: {}\nminimum zero forcing sets: {}\n",
                r.z,
                r.zc,
                if r.equal { "yes" } else { "no" },
                r.minimum_sets
            );
            if let Some(w) = &r.connected_witness {
                writeln!(out, "connected minimum set: {}", set_str(w)).unwrap();
            }
            Ok(Outcome::ok(out))
        }
        Command::Validate(args) => cmd_validate(args),
    }
}

fn cmd_gen(a: GenArgs) -> CmdResult {
    let need = |v: Option<usize>, flag: &str| v.ok_or_else(|| Failure::Usage(anyhow!("--{flag} is required for this family")));
    let spec = match a.family {
        GenFamily::Path => GeneratorSpec::Path { n: need(a.n, "n")? },
        GenFamily::Cycle => GeneratorSpec::Cycle { n: need(a.n, "n")? },
        GenFamily::Star => GeneratorSpec::Star {
            leaves: need(a.leaves.or(a.k), "leaves")?,
        },
        GenFamily::Complete => GeneratorSpec::Complete { n: need(a.n, "n")? },
        GenFamily::Spider => GeneratorSpec::Spider {
            legs: need(a.legs, "legs")?,
            len: need(a.len, "len")?,
        },
        GenFamily::RandomTree => GeneratorSpec::RandomTree { n: need(a.n, "n")?, seed: a.seed },
        GenFamily::RandomUnicyclic => GeneratorSpec::RandomUnicyclic { n: need(a.n, "n")?, seed: a.seed },
        GenFamily::RandomCactus => GeneratorSpec::RandomCactus { n: need(a.n, "n")?, seed: a.seed },
        GenFamily::RandomBlock => GeneratorSpec::RandomBlock { n: need(a.n, "n")?, seed: a.seed },
        GenFamily::RandomOuterCactus => GeneratorSpec::RandomOuterCactus { n: need(a.n, "n")?, seed: a.seed },
        GenFamily::RandomConnected => GeneratorSpec::RandomConnected {
            n: need(a.n, "n")?,
            extra: a.extra,
            seed: a.seed,
        },
        GenFamily::G1Spread => GeneratorSpec::G1Spread { k: need(a.k, "k")? },
        GenFamily::G2Spread => GeneratorSpec::G2Spread { k: need(a.k, "k")? },
    };
    let g = generate(spec)?;
    Ok(Outcome::ok(match a.format {
        GraphFormat::Edges => write_edge_list(&g),
        GraphFormat::Dimacs => write_dimacs(&g),
        GraphFormat::Dot => to_dot(&g, None),
        GraphFormat::Json => json(&g),
    }))
}

fn cmd_family(g: &Graph, expect: Option<Expect>, witness: bool, as_json: bool) -> CmdResult {
    let r = match expect {
        Some(e) => {
            let (method, result) = match e {
                Expect::Tree => (Method::Tree, tree_zc(g)?),
                Expect::Unicyclic => (Method::Unicyclic, unicyclic_zc(g)?.result),
                Expect::Cactus => (Method::Cactus, cactus_zc(g)?),
                Expect::Block => (Method::BlockGraph, block_graph_zc(g)?),
            };
            MethodResult { method, result }
        }
        None => {
            if applicable_method(g)?.is_none() {
                eprintln!(
                    "note: {} graph with no closed-form solver; falling back to exact search",
                    classify_family(g)?.family
                );
            }
            solve_auto(g)?
        }
    };
    if as_json {
        return Ok(Outcome::ok(json(&r)));
    }
    let mut out = format!("Z_c = {}\nmethod: {:?}\n", r.result.value, r.method);
    if witness {
        writeln!(out, "witness: {}", set_str(&r.result.witness)).unwrap();
    }
    Ok(Outcome::ok(out))
}

fn cmd_structure(g: &Graph, as_json: bool) -> CmdResult {
    let ss = structural_sets(g)?;
    let d = BlockDecomposition::new(g)?;
    let bounds = lower_bounds(g, &d, &ss)?;
    if as_json {
        #[derive(Serialize)]
        struct Out<'a> {
            #[serde(flatten)]
            sets: &'a zforcing::structure::StructuralSets,
            bounds: zforcing::structure::LowerBounds,
            blocks: &'a BlockDecomposition,
        }
        return Ok(Outcome::ok(json(&Out {
            sets: &ss,
            bounds,
            blocks: &d,
        })));
    }
    let mut out = String::new();
    for (name, s) in [("R1", &ss.r1), ("R2", &ss.r2), ("R3", &ss.r3), ("L", &ss.l_set), ("M", &ss.m_set)] {
        writeln!(out, "{name:<3} {}", set_str(s)).unwrap();
    }
    writeln!(out, "\nvertex  kappa  p(v)  mu").unwrap();
    for v in g.vertices() {
        writeln!(out, "{v:>6}  {:>5}  {:>4}  {:>2}", ss.kappa[v], ss.p[v], d.membership[v]).unwrap();
    }
    writeln!(out, "\nlower bounds: |M| = {}, block bound = {}", bounds.bound_m, bounds.bound_blocks).unwrap();
    writeln!(out, "\nblock  kind     outer  depth  vertices").unwrap();
    for (i, b) in d.blocks.iter().enumerate() {
        writeln!(
            out,
            "{i:>5}  {:<7}  {:<5}  {:>5}  {}",
            format!("{:?}", b.kind).to_lowercase(),
            b.outer,
            b.depth,
            set_str(&b.vertices)
        )
        .unwrap();
    }
    Ok(Outcome::ok(out))
}

fn cmd_validate(a: ValidateArgs) -> CmdResult {
    let sizes = CorpusSizes {
        trees: a.trees,
        unicyclic: a.unicyclic,
        cactus: a.cactus,
        block: a.block,
        min_n: a.min_n,
        max_n: a.max_n,
        seed: a.seed,
    };
    let mut config = ValidationConfig::corpus(sizes)?;
    config.jobs = a.jobs;
    let report = validate_corpus(&config)?;
    let failed = report.failed > 0;
    let text = match a.format {
        ReportFormat::Json => json(&report),
        ReportFormat::Csv => report.to_csv(),
        ReportFormat::Table if a.failures_only => {
            let mut out = String::new();
            for r in report.failures() {
                writeln!(out, "FAIL {}: {}", r.spec, r.error.as_deref().unwrap_or("")).unwrap();
            }
            writeln!(out, "{} instances, {} passed, {} failed", report.total, report.passed, report.failed).unwrap();
            out
        }
        ReportFormat::Table => report.to_table(),
    };
    Ok(Outcome { text, failed })
}
