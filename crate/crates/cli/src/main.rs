use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use serde_json::json;

use tcycle::cycles::{
    build_segment_forest, check_concentric, check_convex, extract_segments, loop_cost, type_partition,
    ClConfiguration,
};
use tcycle::decomposition::{reed_pipeline, IsolationBudget, DEFAULT_C1, DEFAULT_C2};
use tcycle::format::{parse, serialize};
use tcycle::generate::{generate, Family, GenParams};
use tcycle::kernel::{kernelize, KernelConfig};
use tcycle::oracle::{brute_disjoint_paths, brute_isolation, brute_minor, brute_t_cycle, enumerate_cheap_loops, Matching};
use tcycle::tcycle_dp::solve_t_cycle;
use tcycle::treewidth::{build, make_nice, validate, BuildMode, TreeDecomposition};
use tcycle::{EdgeId, EmbeddedGraph, Vertex};

#[derive(Parser)]
#[command(name = "tcycle", version, about = "T-Cycle on embedded planar graphs")]
struct Cli {
    /// Worker threads for the parallel parts (0 = all cores).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Args)]
struct Constants {
    /// g(k) = ceil(c1 * log2(k + 1)) + c2.
    #[arg(long, default_value_t = DEFAULT_C1)]
    c1: f64,
    #[arg(long, default_value_t = DEFAULT_C2)]
    c2: usize,
    /// Fixed isolation depth, overriding c1 and c2.
    #[arg(long)]
    g: Option<usize>,
}

impl Constants {
    fn budget(&self, k: usize) -> Result<IsolationBudget> {
        Ok(match self.g {
            Some(g) => IsolationBudget::new(g)?,
            None => IsolationBudget::with_constants(k, self.c1, self.c2)?,
        })
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide the instance with the tree-decomposition solver.
    Solve {
        input: PathBuf,
        /// Decomposition in PACE format instead of the greedy one.
        #[arg(long)]
        td: Option<PathBuf>,
    },
    /// Delete irrelevant vertices.
    Reduce {
        input: PathBuf,
        output: PathBuf,
        #[command(flatten)]
        constants: Constants,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Shrink the instance to a kernel.
    Kernelize {
        input: PathBuf,
        output: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        level: u8,
        /// Enumeration limit of the exhaustive replacement search.
        #[arg(long, default_value_t = KernelConfig::default().search_limit)]
        budget: usize,
        #[command(flatten)]
        constants: Constants,
        #[arg(long)]
        eta1: Option<usize>,
        #[arg(long)]
        eta2: Option<usize>,
        #[arg(long, default_value_t = KernelConfig::default().max_boundary)]
        max_boundary: usize,
        #[arg(long, default_value_t = KernelConfig::default().rounds)]
        rounds: usize,
        #[arg(long, default_value_t = KernelConfig::default().greedy_starts)]
        greedy_starts: usize,
    },
    /// Print a tree decomposition in PACE format.
    Td {
        input: PathBuf,
        #[arg(long, default_value = "greedy")]
        mode: String,
    },
    /// Exhaustive reference answers for small instances.
    Oracle {
        #[command(subcommand)]
        query: OracleCmd,
    },
    /// Segments, types, forest heights and costs of a CL-configuration.
    CheckConfig { input: PathBuf },
    /// Generate an instance from a seeded family.
    Gen {
        family: String,
        #[arg(long, default_value_t = GenParams::default().n)]
        n: usize,
        #[arg(long, default_value_t = GenParams::default().depth)]
        depth: usize,
        #[arg(long, default_value_t = GenParams::default().k)]
        k: usize,
        #[arg(long, env = "TCYCLE_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Is there a cycle through every terminal?
    TCycle { input: PathBuf },
    /// Vertex-disjoint paths joining each pair, e.g. `--pairs 0-3,1-4`.
    DisjointPaths {
        input: PathBuf,
        #[arg(long)]
        pairs: String,
    },
    /// Is `pattern` a minor of `host`?
    Minor { host: PathBuf, pattern: PathBuf },
    /// Is `vertex` separated from the terminals by more than `l` nested cycles?
    Isolation {
        input: PathBuf,
        #[arg(long)]
        vertex: Vertex,
        #[arg(long)]
        l: usize,
    },
}

fn read(path: &Path) -> Result<EmbeddedGraph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn verdict(yes: bool) -> u8 {
    println!("{}", if yes { "YES" } else { "NO" });
    if yes {
        0
    } else {
        1
    }
}

fn edge_list(edges: &[EdgeId]) -> String {
    edges.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
}

fn run(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Cmd::Solve { input, td } => {
            let g = read(&input)?;
            let t = g.terminals();
            let td = match td {
                Some(p) => {
                    let td = TreeDecomposition::from_pace(&fs::read_to_string(&p)?)?;
                    validate(&g, &td)?;
                    td
                }
                None => build(&g, BuildMode::GreedyFill)?,
            };
            let w = solve_t_cycle(&g, &t, &make_nice(&td))?;
            let code = verdict(w.is_some());
            if let Some(w) = w {
                println!("edges {}", edge_list(w.edges()));
            }
            Ok(code)
        }
        Cmd::Reduce {
            input,
            output,
            constants,
            report,
        } => {
            let g = read(&input)?;
            let t = g.terminals();
            let (h, u, rep) = reed_pipeline(&g, &t, &constants.budget(t.len())?)?;
            write(&output, &serialize(&h))?;
            if let Some(p) = report {
                let body = json!({ "n": g.vertex_count(), "k": t.len(), "kept": h.vertex_count(), "u": u, "report": rep });
                write(&p, &serde_json::to_string_pretty(&body)?)?;
            }
            println!("{} -> {} vertices", g.vertex_count(), h.vertex_count());
            Ok(0)
        }
        Cmd::Kernelize {
            input,
            output,
            report,
            level,
            budget,
            constants,
            eta1,
            eta2,
            max_boundary,
            rounds,
            greedy_starts,
        } => {
            let g = read(&input)?;
            let t = g.terminals();
            let (c1, c2) = match constants.g {
                Some(g) => (0.0, g),
                None => (constants.c1, constants.c2),
            };
            let config = KernelConfig {
                level,
                c1,
                c2,
                eta1,
                eta2,
                max_boundary,
                search_limit: budget,
                rounds,
                greedy_starts: greedy_starts.max(1),
                ..KernelConfig::default()
            };
            let (k, rep) = kernelize(&g, &t, &config)?;
            write(&output, &serialize(&k))?;
            if let Some(p) = report {
                write(&p, &serde_json::to_string_pretty(&json!({ "config": config, "report": rep }))?)?;
            }
            println!("{} -> {} vertices", g.vertex_count(), k.vertex_count());
            Ok(0)
        }
        Cmd::Td { input, mode } => {
            let g = read(&input)?;
            let td = build(&g, BuildMode::parse(&mode)?)?;
            let width = validate(&g, &td)?;
            println!("c width {width}");
            // PACE numbers vertices from 1; ids here are shifted by one
            print!("{}", td.to_pace(g.vertex_bound()));
            Ok(0)
        }
        Cmd::Oracle { query } => oracle(query),
        Cmd::CheckConfig { input } => check_config(&input),
        Cmd::Gen {
            family,
            n,
            depth,
            k,
            seed,
            output,
        } => {
            let g = generate(Family::parse(&family)?, &GenParams { n, depth, k }, seed)?;
            let text = format!("# {family} n={n} depth={depth} k={k} seed={seed}\n{}", serialize(&g));
            match output {
                Some(p) => write(&p, &text)?,
                None => print!("{text}"),
            }
            Ok(0)
        }
    }
}

fn oracle(q: OracleCmd) -> Result<u8> {
    match q {
        OracleCmd::TCycle { input } => {
            let g = read(&input)?;
            let w = brute_t_cycle(&g, &g.terminals())?;
            let code = verdict(w.is_some());
            if let Some(w) = w {
                println!("edges {}", edge_list(w.edges()));
            }
            Ok(code)
        }
        OracleCmd::DisjointPaths { input, pairs } => {
            let g = read(&input)?;
            let mut ps = Vec::new();
            for item in pairs.split(',').filter(|s| !s.is_empty()) {
                let (a, b) = item.split_once('-').with_context(|| format!("bad pair '{item}'"))?;
                ps.push((a.trim().parse()?, b.trim().parse()?));
            }
            Ok(verdict(brute_disjoint_paths(&g, &Matching::new(ps)?)?))
        }
        OracleCmd::Minor { host, pattern } => Ok(verdict(brute_minor(&read(&host)?, &read(&pattern)?)?)),
        OracleCmd::Isolation { input, vertex, l } => {
            let g = read(&input)?;
            Ok(verdict(brute_isolation(&g, &g.terminals(), vertex, l)?))
        }
    }
}

/// The instance plus `cycle <edge ids>` lines (innermost first) and an
/// optional `loop <edge ids>` line. Without a loop every cheap loop is
/// reported.
fn check_config(input: &Path) -> Result<u8> {
    let text = fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?;
    let mut graph_text = String::new();
    let mut cycles: Vec<Vec<EdgeId>> = Vec::new();
    let mut lp: Option<Vec<EdgeId>> = None;
    for (i, line) in text.lines().enumerate() {
        let mut tok = line.split_whitespace();
        let ids = |tok: std::str::SplitWhitespace| -> Result<Vec<EdgeId>> {
            tok.map(|s| s.parse::<EdgeId>().with_context(|| format!("line {}: bad edge id '{s}'", i + 1)))
                .collect()
        };
        match tok.next() {
            Some("cycle") => cycles.push(ids(tok)?),
            Some("loop") => lp = Some(ids(tok)?),
            _ => {
                graph_text.push_str(line);
                graph_text.push('\n');
            }
        }
    }
    if cycles.is_empty() {
        bail!("no cycle lines");
    }
    let g = parse(&graph_text)?;
    let t = g.terminals();
    let seq = check_concentric(&g, &cycles)?;
    let loops: Vec<Vec<EdgeId>> = match lp {
        Some(l) => vec![l],
        None => enumerate_cheap_loops(&g, &seq, &t)?.into_iter().map(|w| w.edges().to_vec()).collect(),
    };
    let r = seq.depth();
    let mut out = Vec::new();
    for l in loops {
        let q = ClConfiguration::new(&g, seq.clone(), &l, &t)?;
        let levels: Vec<_> = (0..=r)
            .map(|j| {
                let (forest, height) = build_segment_forest(&g, &q, j);
                json!({
                    "level": j,
                    "segments": extract_segments(&g, &q, j),
                    "types": type_partition(&g, &q, j),
                    "forest": forest,
                    "height": height,
                })
            })
            .collect();
        let convexity = check_convex(&g, &q);
        out.push(json!({
            "loop": l,
            "cost": loop_cost(&l, &q.seq),
            "convex": convexity.iter().all(|c| c.convex()),
            "convexity": convexity,
            "levels": levels,
        }));
    }
    println!("{}", serde_json::to_string_pretty(&json!({ "depth": r, "loops": out }))?);
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
