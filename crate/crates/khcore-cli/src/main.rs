use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use rand_like::PairSampler;

use khcore::apps::{
    cocktail_party_with, densest_h_core_with, estimate_distance, greedy_distance_h_coloring,
    max_h_club_with, select_landmarks_with, LandmarkStrategy,
};
use khcore::{decompose, decompose_hlb, Algorithm, CoreResult, DecomposeOptions, Graph};

const EXIT_USAGE: u8 = 1;
const EXIT_IO: u8 = 2;
const EXIT_PARSE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "khcore",
    version,
    about = "Distance-generalized (k,h)-core decomposition over edge-list files"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Edge-list file: one edge per line, '#'/'%' comments ignored
    input: PathBuf,
    /// Distance threshold
    #[arg(long = "h", default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
    h: u32,
    /// Decomposition algorithm: bz, lb or lbub
    #[arg(long, default_value = "lbub")]
    algorithm: String,
    /// Distinct upper-bound values per interval (lbub only)
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    partition_size: u64,
    /// Worker count for the h-degree passes; results are identical for any value
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    threads: u64,
    /// Seed for randomized selections
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Write results here instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
    /// Report per-bound quality statistics on standard error
    #[arg(long)]
    verbose: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Compute core indices; writes one `vertex<TAB>core` line per vertex
    Decompose(Common),
    /// Max core index / distinct core count for a range of h values
    Stats {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        h_min: u32,
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
        h_max: u32,
    },
    /// Maximum h-club via core-filtered branch and bound
    Hclub(Common),
    /// Core maximizing the average induced h-degree
    Densest(Common),
    /// Connected subgraph of the deepest core containing the query vertices
    Community {
        #[command(flatten)]
        common: Common,
        /// Query vertex labels
        #[arg(long, value_delimiter = ',', required = true)]
        query: Vec<String>,
    },
    /// Greedy distance-h coloring along the reverse peeling order
    Color(Common),
    /// Landmark selection and distance-bound evaluation on sampled pairs
    Landmarks {
        #[command(flatten)]
        common: Common,
        /// Number of landmarks
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
        ell: u64,
        /// maxcore, hdegree or random
        #[arg(long, default_value = "maxcore")]
        strategy: String,
        /// Number of random (s, t) pairs to evaluate
        #[arg(long, default_value_t = 500)]
        pairs: u64,
    },
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> CliError {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<khcore::Error> for CliError {
    fn from(err: khcore::Error) -> CliError {
        let code = match &err {
            khcore::Error::Io { .. } => EXIT_IO,
            khcore::Error::Parse { .. } | khcore::Error::EmptyGraph => EXIT_PARSE,
            _ => EXIT_USAGE,
        };
        CliError {
            code,
            message: err.to_string(),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> CliError {
        CliError {
            code: EXIT_IO,
            message: err.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // --help and --version arrive here as non-errors
            if err.exit_code() == 0 {
                print!("{err}");
                return ExitCode::SUCCESS;
            }
            eprint!("{err}");
            return ExitCode::from(EXIT_USAGE);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("khcore: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Decompose(common) => cmd_decompose(&common),
        Command::Stats { common, h_min, h_max } => cmd_stats(&common, h_min, h_max),
        Command::Hclub(common) => cmd_hclub(&common),
        Command::Densest(common) => cmd_densest(&common),
        Command::Community { common, query } => cmd_community(&common, &query),
        Command::Color(common) => cmd_color(&common),
        Command::Landmarks { common, ell, strategy, pairs } => {
            cmd_landmarks(&common, ell as usize, &strategy, pairs as usize)
        }
    }
}

fn load(common: &Common) -> Result<Graph, CliError> {
    Ok(Graph::load_edge_list(&common.input)?)
}

fn options(common: &Common) -> Result<(Algorithm, DecomposeOptions), CliError> {
    let algorithm: Algorithm = common.algorithm.parse()?;
    Ok((
        algorithm,
        DecomposeOptions {
            threads: common.threads as usize,
            partition_size: common.partition_size as usize,
            diagnostics: common.verbose,
        },
    ))
}

fn open_sink(common: &Common) -> Result<Box<dyn Write>, CliError> {
    match &common.output {
        Some(path) => Ok(Box::new(BufWriter::new(File::create(path)?))),
        None => Ok(Box::new(BufWriter::new(std::io::stdout()))),
    }
}

fn cmd_decompose(common: &Common) -> Result<(), CliError> {
    let g = load(common)?;
    let (algorithm, opts) = options(common)?;
    let started = Instant::now();
    let result = decompose(&g, common.h, algorithm, &opts)?;

    let mut sink = open_sink(common)?;
    for v in g.vertices() {
        writeln!(sink, "{}\t{}", g.label(v), result.core[v as usize])?;
    }
    sink.flush()?;

    eprintln!(
        "h={} algorithm={} max_core={} distinct_cores={} distance_computations={} wall={:.3}s",
        common.h,
        algorithm,
        result.max_core(),
        result.distinct_cores(),
        result.stats.distance_computations,
        started.elapsed().as_secs_f64()
    );
    if common.verbose {
        report_bound_quality(&result);
    }
    Ok(())
}

/// Mean relative error and tight fraction of each recorded bound, over
/// vertices with a positive core index.
fn report_bound_quality(result: &CoreResult) {
    let Some(diag) = &result.diagnostics else {
        return;
    };
    let named: [(&str, Option<&Vec<u32>>); 5] = [
        ("lb1", diag.lb1.as_ref()),
        ("lb2", diag.lb2.as_ref()),
        ("lb3", diag.lb3.as_ref()),
        ("ub", diag.ub.as_ref()),
        ("h_degree", diag.h_degree.as_ref()),
    ];
    for (name, bound) in named {
        let Some(bound) = bound else { continue };
        let mut rel = 0.0f64;
        let mut tight = 0usize;
        let mut count = 0usize;
        for (v, &c) in result.core.iter().enumerate() {
            if c == 0 {
                continue;
            }
            count += 1;
            rel += (bound[v] as f64 - c as f64).abs() / c as f64;
            if bound[v] == c {
                tight += 1;
            }
        }
        if count > 0 {
            eprintln!(
                "bound={name} mean_rel_err={:.4} tight_fraction={:.4}",
                rel / count as f64,
                tight as f64 / count as f64
            );
        }
    }
}

fn cmd_stats(common: &Common, h_min: u32, h_max: u32) -> Result<(), CliError> {
    if h_min > h_max {
        return Err(CliError::usage("--h-min must not exceed --h-max"));
    }
    let g = load(common)?;
    let (algorithm, opts) = options(common)?;
    let mut sink = open_sink(common)?;
    writeln!(sink, "h\tmax_core\tdistinct_cores")?;
    for h in h_min..=h_max {
        let result = decompose(&g, h, algorithm, &opts)?;
        writeln!(sink, "{}\t{}\t{}", h, result.max_core(), result.distinct_cores())?;
    }
    sink.flush()?;
    Ok(())
}

fn labels_json(g: &Graph, members: &[khcore::VertexId]) -> serde_json::Value {
    serde_json::Value::Array(
        members
            .iter()
            .map(|&v| serde_json::Value::String(g.label(v).to_string()))
            .collect(),
    )
}

fn cmd_hclub(common: &Common) -> Result<(), CliError> {
    let g = load(common)?;
    let (_, opts) = options(common)?;
    let club = max_h_club_with(&g, common.h, &opts)?;
    let mut sink = open_sink(common)?;
    let line = serde_json::json!({
        "h": common.h,
        "size": club.members.len(),
        "verified": club.verified,
        "members": labels_json(&g, &club.members),
    });
    writeln!(sink, "{line}")?;
    sink.flush()?;
    eprintln!("h={} max_club_size={}", common.h, club.members.len());
    Ok(())
}

fn cmd_densest(common: &Common) -> Result<(), CliError> {
    let g = load(common)?;
    let (_, opts) = options(common)?;
    let result = densest_h_core_with(&g, common.h, &opts)?;
    let mut sink = open_sink(common)?;
    let line = serde_json::json!({
        "h": common.h,
        "core_index": result.core_index,
        "size": result.members.len(),
        "density": result.density,
        "members": labels_json(&g, &result.members),
    });
    writeln!(sink, "{line}")?;
    sink.flush()?;
    Ok(())
}

fn cmd_community(common: &Common, query: &[String]) -> Result<(), CliError> {
    let g = load(common)?;
    let (_, opts) = options(common)?;
    let mut ids = Vec::with_capacity(query.len());
    for label in query {
        let v = g
            .vertex_by_label(label)
            .ok_or_else(|| CliError::from(khcore::Error::UnknownLabel(label.clone())))?;
        ids.push(v);
    }
    let (members, min_h_degree) = cocktail_party_with(&g, &ids, common.h, &opts)?;
    let mut sink = open_sink(common)?;
    let line = serde_json::json!({
        "h": common.h,
        "min_h_degree": min_h_degree,
        "size": members.len(),
        "members": labels_json(&g, &members),
    });
    writeln!(sink, "{line}")?;
    sink.flush()?;
    Ok(())
}

fn cmd_color(common: &Common) -> Result<(), CliError> {
    let g = load(common)?;
    let (_, opts) = options(common)?;
    // coloring walks the recorded peeling order, so the decomposition runs
    // with the order-recording lower-bound algorithm regardless of --algorithm
    let result = decompose_hlb(&g, common.h, &opts)?;
    let coloring = greedy_distance_h_coloring(&g, common.h, &result)?;
    let mut sink = open_sink(common)?;
    let colors: Vec<serde_json::Value> = g
        .vertices()
        .map(|v| serde_json::json!([g.label(v), coloring.color[v as usize]]))
        .collect();
    let line = serde_json::json!({
        "h": common.h,
        "num_colors": coloring.num_colors,
        "max_core": result.max_core(),
        "colors": colors,
    });
    writeln!(sink, "{line}")?;
    sink.flush()?;
    eprintln!(
        "h={} colors={} bound={}",
        common.h,
        coloring.num_colors,
        1 + result.max_core()
    );
    Ok(())
}

fn cmd_landmarks(common: &Common, ell: usize, strategy: &str, pairs: usize) -> Result<(), CliError> {
    let g = load(common)?;
    let (_, opts) = options(common)?;
    let strategy = match strategy {
        "maxcore" => LandmarkStrategy::MaxCore,
        "hdegree" => LandmarkStrategy::TopHDegree,
        "random" => LandmarkStrategy::UniformRandom,
        other => {
            return Err(CliError::usage(format!(
                "unknown strategy {other:?} (expected maxcore, hdegree or random)"
            )))
        }
    };
    let index = select_landmarks_with(&g, common.h, ell, common.seed, strategy, &opts)?;

    let mut sink = open_sink(common)?;
    let line = serde_json::json!({
        "h": common.h,
        "strategy": strategy_name(strategy),
        "landmarks": labels_json(&g, &index.landmarks),
    });
    writeln!(sink, "{line}")?;

    // true distances for the sampled pairs come from per-source BFS
    let n = g.vertex_count();
    let mut sampler = PairSampler::new(common.seed ^ 0x9e3779b97f4a7c15, n);
    let mut scratch = khcore::BfsScratch::new(n);
    let mut dist = vec![0u32; n];
    let mut err_sum = 0.0f64;
    let mut err_count = 0usize;
    for _ in 0..pairs {
        let (s, t) = sampler.next_pair();
        let est = estimate_distance(&index, s, t)?;
        scratch.full_distances(&g, s, &mut dist);
        let true_dist = dist[t as usize];
        let reachable = true_dist != khcore::INFINITE_DISTANCE;
        let rel_error = match (est.estimate, reachable) {
            (Some(mid), true) => Some((mid - true_dist as f64).abs() / true_dist as f64),
            _ => None,
        };
        if let Some(e) = rel_error {
            err_sum += e;
            err_count += 1;
        }
        let line = serde_json::json!({
            "s": g.label(s),
            "t": g.label(t),
            "lower": est.lower,
            "upper": est.upper,
            "estimate": est.estimate,
            "true": if reachable { Some(true_dist) } else { None },
            "rel_error": rel_error,
        });
        writeln!(sink, "{line}")?;
    }
    sink.flush()?;
    if err_count > 0 {
        eprintln!(
            "pairs={} mean_rel_error={:.4}",
            err_count,
            err_sum / err_count as f64
        );
    }
    Ok(())
}

fn strategy_name(s: LandmarkStrategy) -> &'static str {
    match s {
        LandmarkStrategy::MaxCore => "maxcore",
        LandmarkStrategy::TopHDegree => "hdegree",
        LandmarkStrategy::UniformRandom => "random",
    }
}

mod rand_like {
    use khcore::VertexId;

    /// Deterministic distinct-pair sampler (splitmix64 stream); avoids
    /// pulling a rand dependency into the binary for one loop.
    pub struct PairSampler {
        state: u64,
        n: usize,
    }

    impl PairSampler {
        pub fn new(seed: u64, n: usize) -> PairSampler {
            PairSampler { state: seed, n }
        }

        fn next_u64(&mut self) -> u64 {
            self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
            let mut z = self.state;
            z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
            z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
            z ^ (z >> 31)
        }

        /// Uniform (s, t) with s != t; degenerate single-vertex graphs
        /// return (0, 0).
        pub fn next_pair(&mut self) -> (VertexId, VertexId) {
            if self.n < 2 {
                return (0, 0);
            }
            loop {
                let s = (self.next_u64() % self.n as u64) as VertexId;
                let t = (self.next_u64() % self.n as u64) as VertexId;
                if s != t {
                    return (s, t);
                }
            }
        }
    }
}
