use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use zpg::graph::{self, parse_graph, Graph};
use zpg::harness::{check_equivalence, Agreement, Budgets};
use zpg::layout::{self, emit_drawing, parse_drawing, EmbedLimits, GridDrawing};
use zpg::reduction::{self, builtin_tileset, load_tileset, TileSet};
use zpg::solver::{self, SolverConfig, Verdict};
use zpg::{parse_garden, parse_moves, EndRule, Garden};

#[derive(Parser)]
#[command(name = "zpg", version, about = "Zen Puzzle Garden solver and Hamiltonian-circuit reduction")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum RuleArg {
    Strict,
    Covered,
}

impl From<RuleArg> for EndRule {
    fn from(r: RuleArg) -> EndRule {
        match r {
            RuleArg::Strict => EndRule::Strict,
            RuleArg::Covered => EndRule::CoveredOnly,
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Text,
    Svg,
}

#[derive(clap::Args)]
struct SolveOpts {
    /// Strict: all sand covered and the monk on walkable; covered: all sand covered.
    #[arg(long, value_enum, default_value = "strict")]
    end_rule: RuleArg,
    #[arg(long, default_value_t = solver::DEFAULT_MAX_STATES)]
    max_states: u64,
}

impl SolveOpts {
    fn config(&self) -> SolverConfig {
        SolverConfig { end_rule: self.end_rule.into(), max_states: self.max_states, ..SolverConfig::default() }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Solve a garden file.
    Solve {
        garden: PathBuf,
        #[command(flatten)]
        opts: SolveOpts,
        /// Print search statistics to stderr.
        #[arg(long)]
        stats: bool,
    },
    /// Check a move list against a garden.
    Replay {
        garden: PathBuf,
        solution: PathBuf,
        #[arg(long, value_enum, default_value = "strict")]
        end_rule: RuleArg,
    },
    /// Draw a garden, optionally after applying a move list.
    Render {
        garden: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        solution: Option<PathBuf>,
    },
    /// Find a grid drawing of a graph.
    Embed {
        graph: PathBuf,
        #[arg(long, default_value_t = EmbedLimits::default().max_side)]
        max_side: usize,
        #[arg(long, default_value_t = EmbedLimits::default().budget)]
        budget: u64,
    },
    /// Compile a graph and its drawing into a garden.
    Compile {
        graph: PathBuf,
        drawing: PathBuf,
        /// Directory of tile files (default: the built-in set).
        tiles: Option<PathBuf>,
        /// Also write the tile provenance map here.
        #[arg(long)]
        tilemap: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the gadget verifier on a tile set.
    VerifyTiles { tiles: Option<PathBuf> },
    /// Cross-check Hamiltonicity against solvability of the compiled garden.
    VerifyEquivalence {
        graph: PathBuf,
        drawing: PathBuf,
        tiles: Option<PathBuf>,
        #[arg(long, default_value_t = solver::DEFAULT_MAX_STATES)]
        max_states: u64,
        #[arg(long, default_value_t = graph::DEFAULT_ORACLE_LIMIT)]
        oracle_limit: usize,
    },
    /// Search a graph for a Hamiltonian circuit.
    Oracle {
        graph: PathBuf,
        #[arg(long, default_value_t = graph::DEFAULT_ORACLE_LIMIT)]
        limit: usize,
    },
    /// Solve a list of garden files and report search effort.
    Bench {
        gardens: Vec<PathBuf>,
        #[command(flatten)]
        opts: SolveOpts,
    },
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_garden(path: &Path) -> Result<Garden> {
    parse_garden(&read(path)?).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn load_graph(path: &Path) -> Result<Graph> {
    parse_graph(&read(path)?).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn load_drawing(path: &Path) -> Result<GridDrawing> {
    parse_drawing(&read(path)?).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn load_moves(path: &Path) -> Result<Vec<zpg::Direction>> {
    let text = read(path)?;
    let body: String = text.lines().filter(|l| !l.trim_start().starts_with(';')).collect();
    parse_moves(&body).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn tiles(dir: Option<&Path>) -> Result<TileSet> {
    match dir {
        Some(d) => load_tileset(d).map_err(|e| anyhow!("{e}")),
        None => Ok(builtin_tileset()),
    }
}

fn code(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Solve { garden, opts, stats } => {
            let g = load_garden(&garden)?;
            let r = solver::solve(&g, &opts.config());
            println!("{}", r.verdict_line());
            if stats {
                eprintln!("{}", r.stats_line());
            }
            Ok(code(matches!(r.verdict, Verdict::Solvable(_))))
        }
        Command::Replay { garden, solution, end_rule } => {
            let g = load_garden(&garden)?;
            let moves = load_moves(&solution)?;
            let cells = g.width() * g.height();
            match g.replay(&moves, end_rule.into()) {
                Ok((_, true)) => {
                    println!("SOLVED moves={} cells={cells}", moves.len());
                    Ok(ExitCode::SUCCESS)
                }
                Ok((state, false)) => {
                    println!(
                        "NOT SOLVED moves={} covered={}/{}",
                        moves.len(),
                        state.covered.len(),
                        g.sand_count()
                    );
                    Ok(code(false))
                }
                Err(e) => {
                    println!("ILLEGAL {e}");
                    Ok(code(false))
                }
            }
        }
        Command::Render { garden, format, solution } => {
            let g = load_garden(&garden)?;
            let state = match solution {
                Some(p) => {
                    let moves = load_moves(&p)?;
                    Some(g.replay(&moves, EndRule::default()).map_err(|e| anyhow!("{e}"))?.0)
                }
                None => None,
            };
            match format {
                Format::Text => print!("{}", g.render_text(state.as_ref())),
                Format::Svg => print!("{}", g.render_svg(state.as_ref())),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Embed { graph, max_side, budget } => {
            let g = load_graph(&graph)?;
            match layout::embed(&g, &EmbedLimits { max_side, budget }) {
                Ok(r) => {
                    print!("{}", emit_drawing(&r.drawing));
                    eprintln!("area={} steps={}", r.area, r.steps);
                    Ok(ExitCode::SUCCESS)
                }
                Err(e) => {
                    eprintln!("{e}");
                    Ok(code(false))
                }
            }
        }
        Command::Compile { graph, drawing, tiles: dir, tilemap, format } => {
            let g = load_graph(&graph)?;
            let d = load_drawing(&drawing)?;
            let ts = tiles(dir.as_deref())?;
            let (garden, tm) = reduction::compile(&g, &d, &ts).map_err(|e| anyhow!("{e}"))?;
            match format {
                Format::Text => print!("{}", garden.render_text(None)),
                Format::Svg => print!("{}", garden.render_svg(None)),
            }
            if let Some(p) = tilemap {
                fs::write(&p, tm.to_text()).with_context(|| format!("writing {}", p.display()))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyTiles { tiles: dir } => {
            let ts = tiles(dir.as_deref())?;
            let mut ok = true;
            for r in reduction::verify_tileset(&ts) {
                let text = r.to_string();
                print!("{text}");
                eprintln!("{} verified in {} ms", r.kind, r.elapsed.as_millis());
                ok &= r.passed();
            }
            Ok(code(ok))
        }
        Command::VerifyEquivalence { graph, drawing, tiles: dir, max_states, oracle_limit } => {
            let g = load_graph(&graph)?;
            let d = load_drawing(&drawing)?;
            let ts = tiles(dir.as_deref())?;
            let id = graph.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
            let r = check_equivalence(&id, &g, &d, &ts, &Budgets { max_states, oracle_limit })
                .map_err(|e| anyhow!("{e}"))?;
            println!("{r}");
            eprintln!("oracle_ms={} solve_ms={}", r.oracle_time.as_millis(), r.solve_time.as_millis());
            Ok(code(r.agree == Agreement::Agree && r.extracted_circuit_ok != Some(false)))
        }
        Command::Oracle { graph, limit } => {
            let g = load_graph(&graph)?;
            match graph::find_hamiltonian_circuit_with_limit(&g, limit).map_err(|e| anyhow!("{e}"))? {
                Some(c) => {
                    println!("HC {c}");
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("NO HC");
                    Ok(code(false))
                }
            }
        }
        Command::Bench { gardens, opts } => {
            if gardens.is_empty() {
                return Err(anyhow!("bench needs at least one garden file"));
            }
            for path in &gardens {
                let g = load_garden(path)?;
                let started = Instant::now();
                let r = solver::solve(&g, &opts.config());
                let verdict = match &r.verdict {
                    Verdict::Solvable(m) => format!("SOLVABLE moves={}", m.len()),
                    Verdict::Unsolvable => "UNSOLVABLE".to_string(),
                    Verdict::BudgetExceeded => "BUDGET".to_string(),
                };
                println!(
                    "{} {}x{} sand={} {verdict} states={} frontier={}",
                    path.display(),
                    g.width(),
                    g.height(),
                    g.sand_count(),
                    r.stats.states_expanded,
                    r.stats.peak_frontier
                );
                eprintln!("{} ms={}", path.display(), started.elapsed().as_millis());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
