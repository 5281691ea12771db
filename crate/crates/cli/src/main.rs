use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use auterlab_core::{
    blow_up, blow_up_level, classify, collapse_forest, descending_link, down_link,
    enumerate_blow_ups, enumerate_graphs, height, is_descending_blow_up, lemma_ids,
    reduced_homology, reports_to_json_lines, sigma, tally, up_link_complex, up_link_model,
    verify_all, verify_lemma, BasepointedGraph, BlowUpRule, CompatMode, Forest, HarnessError,
    OutputFormat, PartitionComplexSpec, ReducedHomology, RunConfig, SimplicialComplex, SplitMode,
};

/// Heights, descending links, and lemma verification for basepointed
/// graphs and partition complexes.
#[derive(Parser)]
#[command(name = "auterlab", version, max_term_width = 100)]
struct Cli {
    /// Output format; defaults to the configured one (text unless overridden).
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,

    /// Report wall-clock timings where the command supports them.
    #[arg(long, global = true)]
    timings: bool,

    /// Config file; when absent, the file named by AUTERLAB_CONFIG, then
    /// built-in defaults.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum CompatArg {
    Nested,
    Classical,
}

impl CompatArg {
    fn mode(self) -> CompatMode {
        match self {
            CompatArg::Nested => CompatMode::Nested,
            CompatArg::Classical => CompatMode::Classical,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the height of a graph.
    Height {
        /// Graph file (JSON).
        #[arg(long)]
        graph: PathBuf,
    },
    /// Collapse a forest of edges and print the resulting graph.
    Collapse {
        #[arg(long)]
        graph: PathBuf,
        /// Comma-separated edge ids forming the forest.
        #[arg(long, value_delimiter = ',', required = true)]
        forest: Vec<usize>,
    },
    /// List the blow-ups of a graph within the configured caps, or apply one.
    Blowup {
        #[arg(long)]
        graph: PathBuf,
        /// Apply the blow-up at this index of the listing and print the
        /// resulting graph instead.
        #[arg(long)]
        apply: Option<usize>,
    },
    /// The descending blow-down complex of a graph.
    Downlink {
        #[arg(long)]
        graph: PathBuf,
        /// Print the homology classification instead of the complex.
        #[arg(long)]
        homology: bool,
    },
    /// The descending blow-up complex: the join model, or the enumerated
    /// sub-poset's order complex with --poset.
    Uplink {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        poset: bool,
        #[arg(long)]
        homology: bool,
    },
    /// The full descending link: up-link joined with down-link.
    Desclink {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        homology: bool,
    },
    /// Build a partition complex over labels 1..=n, optionally restricted to
    /// partitions splitting the k-prefix and filtered below co-block size m.
    Sigma {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        homology: bool,
        /// Compatibility notion; defaults to the configured one.
        #[arg(long, value_enum)]
        compat: Option<CompatArg>,
    },
    /// Reduced homology and classification of a complex file.
    Homology {
        /// Complex file (JSON).
        #[arg(long)]
        complex: PathBuf,
    },
    /// Enumerate the basepointed graphs of one rank up to isomorphism.
    Enumerate {
        /// Rank of the enumerated graphs; defaults to the configured bound.
        #[arg(long)]
        rank: Option<i64>,
        #[arg(long = "max-vertices")]
        max_vertices: Option<usize>,
    },
    /// Run one registered lemma, or all of them, and report verdicts.
    Verify {
        /// Lemma id, or "all" for the whole registry.
        #[arg(long)]
        lemma: String,
        #[command(flatten)]
        bounds: BoundOverrides,
    },
}

#[derive(Args)]
struct BoundOverrides {
    /// Sweep graph families at ranks 2 through this value.
    #[arg(long)]
    rank: Option<i64>,
    #[arg(long = "max-vertices")]
    max_vertices: Option<usize>,
    #[arg(long = "sigma-max-n")]
    sigma_max_n: Option<usize>,
    /// Worker threads; 0 means one per core.
    #[arg(long)]
    jobs: Option<usize>,
    /// Seed for the randomized engine cross-checks.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum)]
    compat: Option<CompatArg>,
}

fn main() -> ExitCode {
    // Rust ignores SIGPIPE by default, turning `auterlab ... | head` into a
    // panic on the first write after the reader closes. Restore the Unix
    // default so the kernel just ends the process.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn load_config(cli: &Cli) -> Result<RunConfig> {
    let mut cfg = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("cannot read config {}", path.display()))?;
            RunConfig::from_json(&text).map_err(|e| anyhow!("bad config: {e}"))?
        }
        None => RunConfig::from_env().map_err(|e| anyhow!(e))?,
    };
    if let Some(f) = cli.format {
        cfg.format = match f {
            FormatArg::Text => OutputFormat::Text,
            FormatArg::Json => OutputFormat::Json,
        };
    }
    if cli.timings {
        cfg.timings = true;
    }
    Ok(cfg)
}

fn read_graph(path: &Path) -> Result<BasepointedGraph> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read graph {}", path.display()))?;
    BasepointedGraph::from_json(&text)
        .with_context(|| format!("{} is not a valid graph file", path.display()))
}

fn run(cli: Cli) -> Result<ExitCode> {
    let cfg = load_config(&cli)?;
    let json = cfg.format == OutputFormat::Json;
    match cli.command {
        Command::Height { graph } => {
            let g = read_graph(&graph)?;
            let h = height(&g);
            if json {
                let (n, d) = h.tail();
                println!(
                    "{}",
                    serde_json::json!({
                        "display": h.to_string(),
                        "head": h.head(),
                        "tail": [n, d],
                    })
                );
            } else {
                println!("{h}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Collapse { graph, forest } => {
            let g = read_graph(&graph)?;
            let f = Forest::new(&g, &forest).map_err(|e| anyhow!("bad forest: {e}"))?;
            let out = collapse_forest(&g, &f).map_err(|e| anyhow!("cannot collapse: {e}"))?;
            println!("{}", out.graph.to_json());
            Ok(ExitCode::SUCCESS)
        }
        Command::Blowup { graph, apply } => {
            let g = read_graph(&graph)?;
            let ups = enumerate_blow_ups(&g, &cfg.blow_up_caps);
            match apply {
                Some(i) => {
                    let b = ups
                        .get(i)
                        .ok_or_else(|| anyhow!("index {i} out of range ({} listed)", ups.len()))?;
                    let result = blow_up(&g, b).map_err(|e| anyhow!("cannot blow up: {e}"))?;
                    println!("{}", result.graph.to_json());
                }
                None => {
                    for (i, b) in ups.iter().enumerate() {
                        let level = blow_up_level(&g, b);
                        let descending = is_descending_blow_up(&g, b);
                        if json {
                            let vertices: Vec<serde_json::Value> = b
                                .entries()
                                .iter()
                                .map(|e| {
                                    serde_json::json!({
                                        "vertex": e.vertex(),
                                        "partitions": e
                                            .partitions()
                                            .iter()
                                            .map(ToString::to_string)
                                            .collect::<Vec<_>>(),
                                    })
                                })
                                .collect();
                            println!(
                                "{}",
                                serde_json::json!({
                                    "index": i,
                                    "level": level,
                                    "descending": descending,
                                    "vertices": vertices,
                                })
                            );
                        } else {
                            let at = b
                                .entries()
                                .iter()
                                .map(|e| {
                                    let parts = e
                                        .partitions()
                                        .iter()
                                        .map(ToString::to_string)
                                        .collect::<Vec<_>>()
                                        .join("; ");
                                    format!("at v{}: {parts}", e.vertex())
                                })
                                .collect::<Vec<_>>()
                                .join("  ");
                            println!("#{i} level={level} descending={descending} {at}");
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Downlink { graph, homology } => {
            let g = read_graph(&graph)?;
            emit_complex(&down_link(&g), homology, json)
        }
        Command::Uplink { graph, poset, homology } => {
            let g = read_graph(&graph)?;
            let x = if poset {
                let rule = match cfg.split {
                    SplitMode::Strict => BlowUpRule::Strict,
                    SplitMode::Weak => BlowUpRule::Weak,
                };
                up_link_complex(&g, &cfg.blow_up_caps, rule)
            } else {
                up_link_model(&g)
            };
            emit_complex(&x, homology, json)
        }
        Command::Desclink { graph, homology } => {
            let g = read_graph(&graph)?;
            emit_complex(&descending_link(&g), homology, json)
        }
        Command::Sigma { n, k, m, homology, compat } => {
            let spec =
                PartitionComplexSpec::new(n, k, m).map_err(|e| anyhow!("bad complex spec: {e}"))?;
            let mode = compat.map_or(cfg.compat, CompatArg::mode);
            emit_complex(&sigma(&spec, mode), homology, json)
        }
        Command::Homology { complex } => {
            let text = std::fs::read_to_string(&complex)
                .with_context(|| format!("cannot read complex {}", complex.display()))?;
            let x = SimplicialComplex::from_json(&text)
                .with_context(|| format!("{} is not a valid complex file", complex.display()))?;
            emit_complex(&x, true, json)
        }
        Command::Enumerate { rank, max_vertices } => {
            let rank = rank.unwrap_or(cfg.rank);
            let bound = max_vertices.unwrap_or(cfg.max_vertices);
            let family =
                enumerate_graphs(rank, bound, cfg.min_basepoint_degree, cfg.hard_vertex_bound)
                    .map_err(|e| anyhow!("cannot enumerate: {e}"))?;
            for (i, g) in family.iter().enumerate() {
                if json {
                    let value: serde_json::Value =
                        serde_json::from_str(&g.to_json()).expect("own output parses");
                    println!("{value}");
                } else {
                    let edges = g
                        .canonical_edge_list()
                        .iter()
                        .map(|&(u, v)| format!("{u}-{v}"))
                        .collect::<Vec<_>>()
                        .join(",");
                    println!(
                        "#{i} rank={rank} vertices={} edges={edges} height={}",
                        g.vertex_count(),
                        height(g)
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { lemma, bounds } => {
            let mut cfg = cfg;
            if let Some(r) = bounds.rank {
                cfg.rank = r;
            }
            if let Some(v) = bounds.max_vertices {
                cfg.max_vertices = v;
            }
            if let Some(n) = bounds.sigma_max_n {
                cfg.sigma_max_n = n;
            }
            if let Some(j) = bounds.jobs {
                cfg.jobs = j;
            }
            if let Some(s) = bounds.seed {
                cfg.seed = s;
            }
            if let Some(c) = bounds.compat {
                cfg.compat = c.mode();
            }
            let rows = if lemma == "all" {
                verify_all(&cfg)
            } else {
                verify_lemma(&lemma, &cfg)
            };
            let rows = match rows {
                Ok(rows) => rows,
                Err(HarnessError::UnknownLemma(id)) => {
                    bail!("unknown lemma {id:?}; known ids: all, {}", lemma_ids().join(", "))
                }
                Err(e) => return Err(anyhow!("verification failed to run: {e}")),
            };
            let counts = tally(&rows);
            if json {
                println!("{}", reports_to_json_lines(&rows));
                println!(
                    "{}",
                    serde_json::json!({
                        "summary": {
                            "pass": counts.pass,
                            "passStrong": counts.pass_strong,
                            "fail": counts.fail,
                            "inconclusive": counts.inconclusive,
                        }
                    })
                );
            } else {
                for r in &rows {
                    let mut line = format!(
                        "{:<12} {:<20} {} :: {}",
                        r.verdict.to_string(),
                        r.lemma_id,
                        r.instance,
                        r.computed
                    );
                    if let Some(a) = &r.annotation {
                        line.push_str(&format!(" [{a}]"));
                    }
                    if let Some(ms) = r.millis {
                        line.push_str(&format!(" ({ms} ms)"));
                    }
                    println!("{line}");
                }
                println!(
                    "summary: pass={} pass-strong={} fail={} inconclusive={} ({} rows)",
                    counts.pass,
                    counts.pass_strong,
                    counts.fail,
                    counts.inconclusive,
                    rows.len()
                );
            }
            Ok(if counts.fail > 0 { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
    }
}

fn emit_complex(x: &SimplicialComplex, homology: bool, json: bool) -> Result<ExitCode> {
    if homology {
        let h = reduced_homology(x);
        if json {
            println!("{}", homology_json(&h));
        } else {
            println!("{}", classify(&h));
        }
    } else if json {
        let value: serde_json::Value =
            serde_json::from_str(&x.to_json()).expect("own output parses");
        println!("{value}");
    } else {
        println!("{}", x.to_json());
    }
    Ok(ExitCode::SUCCESS)
}

fn homology_json(h: &ReducedHomology) -> serde_json::Value {
    let degrees: Vec<serde_json::Value> = h
        .degrees()
        .map(|(d, rank, torsion)| {
            serde_json::json!({
                "degree": d,
                "rank": rank,
                "torsion": torsion.iter().map(ToString::to_string).collect::<Vec<_>>(),
            })
        })
        .collect();
    serde_json::json!({
        "classification": classify(h).to_string(),
        "profile": h.to_string(),
        "degrees": degrees,
    })
}
