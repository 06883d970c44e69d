use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nodeparse::analysis::{dataset_stats, format_stats_table, iso_test_with_guard, IsoVerdict};
use nodeparse::datasets::{write_dataset, Family, SyntheticSpec};
use nodeparse::edgelist::parse_edge_lists;
use nodeparse::encoding::{Numeric, DEFAULT_BIT_BUDGET};
use nodeparse::engine::output::write_run;
use nodeparse::engine::{
    EdgeSortMode, Encoder, EncodingRun, EndpointMode, SortConfig, Variant,
    DEFAULT_ENUMERATION_GUARD,
};
use nodeparse::tudataset::load_tudataset;
use nodeparse::{Error, LabeledGraph, Result};

/// Node-parsing graph encodings.
#[derive(Parser, Debug)]
#[command(name = "nodeparse", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Encode every graph in an edge-list file or TUDataset directory.
    Encode {
        input: PathBuf,
        #[command(flatten)]
        sort: SortArgs,
        /// Cross-check term equality against exact numeric values.
        #[arg(long)]
        numeric_check: bool,
        /// Write to this file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide isomorphism of the first graph in each file.
    /// Exit code 0: isomorphic, 1: non-isomorphic, 2: unknown.
    Iso {
        a: PathBuf,
        b: PathBuf,
        #[command(flatten)]
        sort: SortArgs,
        /// Sampled orderings per graph above the exhaustive guard.
        #[arg(short = 'K', long = "budget", default_value_t = 5)]
        k: usize,
        /// Largest edge count decided by enumerating every ordering.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_GUARD)]
        guard_edges: usize,
    },
    /// Edge-order and level statistics of a dataset directory.
    Stats {
        dir: PathBuf,
        /// Sort mode; all four when omitted.
        #[arg(long)]
        mode: Option<EdgeSortMode>,
        #[arg(long, default_value_t = EndpointMode::Random)]
        sv: EndpointMode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// TUDataset name; defaults to the directory name.
        #[arg(long)]
        name: Option<String>,
    },
    /// Generate a synthetic dataset.
    Gen {
        family: FamilyName,
        /// Output directory.
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        count: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Edge probability for the Erdos families.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 4)]
        degree: usize,
        /// Keep loops and parallel edges from stub matching.
        #[arg(long)]
        multigraph: bool,
        /// NPBA-Hard class 2 without the isolated second vertex.
        #[arg(long)]
        one_node: bool,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct SortArgs {
    #[arg(long, default_value_t = EdgeSortMode::DegsAndLabels)]
    mode: EdgeSortMode,
    #[arg(long, default_value_t = EndpointMode::Random)]
    sv: EndpointMode,
    #[arg(long, default_value_t = Variant::Npa)]
    variant: Variant,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl SortArgs {
    fn config(self) -> SortConfig {
        SortConfig {
            edge_mode: self.mode,
            endpoint_mode: self.sv,
            variant: self.variant,
            seed: self.seed,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FamilyName {
    GnnHard,
    NpbaHard,
    Erdos,
    ErdosLabels,
    RandomRegular,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    match command {
        Command::Encode {
            input,
            sort,
            numeric_check,
            output,
        } => {
            let (text, consistent) = encode(&input, sort.config(), numeric_check)?;
            match output {
                Some(path) => fs::write(path, text)?,
                None => print!("{text}"),
            }
            Ok(if consistent {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Iso {
            a,
            b,
            sort,
            k,
            guard_edges,
        } => {
            let (g, h) = (first_graph(&a)?, first_graph(&b)?);
            let config = sort.config();
            println!("config {config} -K {k} --guard-edges {guard_edges}");
            let verdict = iso_test_with_guard(&mut Encoder::new(), &g, &h, &config, k, guard_edges);
            println!("verdict {}", verdict.name());
            Ok(ExitCode::from(match verdict {
                IsoVerdict::Isomorphic { .. } => 0,
                IsoVerdict::NonIsomorphic => 1,
                IsoVerdict::Unknown { .. } => 2,
            }))
        }
        Command::Stats {
            dir,
            mode,
            sv,
            seed,
            name,
        } => {
            let name = match name {
                Some(n) => n,
                None => dir
                    .file_name()
                    .map(|s| s.to_string_lossy().into_owned())
                    .unwrap_or_default(),
            };
            let graphs = load_dir(&dir, &name)?;
            let modes = match mode {
                Some(m) => vec![m],
                None => EdgeSortMode::ALL.to_vec(),
            };
            let mut stats = Vec::new();
            for m in &modes {
                let config = SortConfig {
                    edge_mode: *m,
                    endpoint_mode: sv,
                    variant: Variant::Npa,
                    seed,
                };
                stats.push((*m, dataset_stats(&graphs, &config)?));
            }
            let mode_flag = mode
                .map(|m| format!(" --mode {}", m.name()))
                .unwrap_or_default();
            println!(
                "config --name {name}{mode_flag} --sv {} --seed {seed}",
                sv.name()
            );
            print!("{}", format_stats_table(&[(name, stats)]));
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen {
            family,
            out,
            seed,
            count,
            n,
            p,
            degree,
            multigraph,
            one_node,
        } => {
            let family = match family {
                FamilyName::GnnHard => Family::GnnHard,
                FamilyName::NpbaHard => Family::NpbaHard { one_node },
                FamilyName::Erdos | FamilyName::ErdosLabels => {
                    let labeled = matches!(family, FamilyName::ErdosLabels);
                    Family::Erdos {
                        count: count.unwrap_or(if labeled { 100 } else { 30 }),
                        n: n.unwrap_or(10),
                        p,
                        labeled,
                    }
                }
                FamilyName::RandomRegular => Family::RandomRegular {
                    count: count.unwrap_or(10),
                    n: n.unwrap_or(8),
                    degree,
                    simple: !multigraph,
                },
            };
            let spec = SyntheticSpec { family, seed };
            let graphs = spec.generate()?;
            let files = write_dataset(&out, &spec, &graphs)?;
            let params: Vec<String> = spec
                .params()
                .into_iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            println!("family={} {}", spec.name(), params.join(" "));
            println!("wrote {} graphs to {}", files.len(), out.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// The text of all runs and whether every numeric check held.
fn encode(input: &Path, config: SortConfig, numeric_check: bool) -> Result<(String, bool)> {
    let graphs = if input.is_dir() {
        let name = input
            .file_name()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        load_dir(input, &name)?
    } else {
        read_edge_lists(input)?
    };
    let mut enc = Encoder::new();
    let mut out = String::new();
    let mut consistent = true;
    for (i, g) in graphs.iter().enumerate() {
        let run = enc.run(g, &config);
        if graphs.len() > 1 {
            out.push_str(&format!("graph {i}\n"));
        }
        out.push_str(&write_run(enc.store(), &run, &config));
        if numeric_check {
            let (line, ok) = numeric_line(&enc, &run);
            out.push_str(&line);
            consistent &= ok;
        }
    }
    Ok((out, consistent))
}

/// Evaluates every W entry and checks that distinct encodings get
/// distinct `(value, m1, m2)` triples.
fn numeric_line(enc: &Encoder, run: &EncodingRun) -> (String, bool) {
    let store = enc.store();
    let mut memo = HashMap::new();
    let mut seen = HashMap::new();
    let mut max_bits = 0;
    for e in &run.w {
        let value = match store.eval_with_memo(e.y, DEFAULT_BIT_BUDGET, &mut memo) {
            Numeric::Value(v) => v,
            Numeric::Refused => {
                return (
                    format!("numeric refused budget={DEFAULT_BIT_BUDGET}\n"),
                    true,
                )
            }
        };
        max_bits = max_bits.max(value.bits());
        if let Some(other) = seen.insert((value, e.m1.clone(), e.m2.clone()), e.y) {
            if other != e.y {
                return (
                    "numeric mismatch: distinct terms share a value\n".into(),
                    false,
                );
            }
        }
    }
    (
        format!("numeric ok distinct={} max_bits={max_bits}\n", seen.len()),
        true,
    )
}

fn read_edge_lists(path: &Path) -> Result<Vec<LabeledGraph>> {
    let text = fs::read_to_string(path).map_err(|_| Error::MissingFile(path.to_path_buf()))?;
    let graphs = parse_edge_lists(&text)?;
    if graphs.is_empty() {
        return Err(Error::Empty("input has no graphs"));
    }
    Ok(graphs)
}

fn first_graph(path: &Path) -> Result<LabeledGraph> {
    Ok(read_edge_lists(path)?.swap_remove(0))
}

/// A TUDataset directory, or a generated directory with `manifest.txt`.
fn load_dir(dir: &Path, name: &str) -> Result<Vec<LabeledGraph>> {
    let manifest = dir.join("manifest.txt");
    if !dir.join(format!("{name}_A.txt")).exists() && manifest.exists() {
        let text = fs::read_to_string(&manifest)?;
        let mut graphs = Vec::new();
        for line in text.lines().skip(1) {
            if let Some(file) = line.split_whitespace().next() {
                graphs.extend(read_edge_lists(&dir.join(file))?);
            }
        }
        return Ok(graphs);
    }
    Ok(load_tudataset(dir, name)?
        .into_iter()
        .map(|(g, _)| g)
        .collect())
}
