//! Independent oracles and the graph/garden equivalence check.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::garden::{Cell, EndRule, Garden, Pos};
use crate::graph::{self, verify_circuit, Graph};
use crate::layout::GridDrawing;
use crate::reduction::{self, TileSet};
use crate::solver::{self, SolverConfig, Verdict};

pub const NAIVE_SAND_LIMIT: usize = 14;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NaiveError {
    #[error("garden has {found} sand cells, naive limit is {limit}")]
    TooLarge { found: usize, limit: usize },
}

/// Breadth-first search over exact `(cell, covered mask)` states, written
/// against the raw cell grid so it shares no movement code with the engine.
pub fn naive_solve(g: &Garden, rule: EndRule) -> Result<bool, NaiveError> {
    let (w, h) = (g.width() as i64, g.height() as i64);
    let cells = g.cells();
    let mut sand_bit = vec![u32::MAX; cells.len()];
    let mut sand = 0u32;
    for (i, c) in cells.iter().enumerate() {
        if *c == Cell::Sand {
            sand_bit[i] = sand;
            sand += 1;
        }
    }
    if sand as usize > NAIVE_SAND_LIMIT {
        return Err(NaiveError::TooLarge { found: sand as usize, limit: NAIVE_SAND_LIMIT });
    }
    let full: u32 = (1u32 << sand) - 1;
    let at = |x: i64, y: i64| -> Option<usize> {
        (x >= 0 && y >= 0 && x < w && y < h).then(|| (y * w + x) as usize)
    };
    let solved = |pos: usize, mask: u32| {
        mask == full && (rule == EndRule::CoveredOnly || cells[pos] == Cell::Walkable)
    };
    let start = g.index(g.monk_start());
    let mut seen = HashSet::from([(start, 0u32)]);
    let mut queue = VecDeque::from([(start, 0u32)]);
    while let Some((pos, mask)) = queue.pop_front() {
        if solved(pos, mask) {
            return Ok(true);
        }
        let (x, y) = ((pos as i64) % w, (pos as i64) / w);
        for (dx, dy) in [(0, -1), (1, 0), (0, 1), (-1, 0)] {
            let Some(first) = at(x + dx, y + dy) else { continue };
            let next = match cells[first] {
                Cell::Rock => continue,
                Cell::Walkable => (first, mask),
                Cell::Sand => {
                    if mask & (1 << sand_bit[first]) != 0 {
                        continue;
                    }
                    let (mut cx, mut cy, mut m) = (x + dx, y + dy, mask | (1 << sand_bit[first]));
                    loop {
                        match at(cx + dx, cy + dy) {
                            Some(n) if cells[n] == Cell::Walkable => {
                                cx += dx;
                                cy += dy;
                                break;
                            }
                            Some(n) if cells[n] == Cell::Sand && m & (1 << sand_bit[n]) == 0 => {
                                m |= 1 << sand_bit[n];
                                cx += dx;
                                cy += dy;
                            }
                            _ => break,
                        }
                    }
                    ((cy * w + cx) as usize, m)
                }
            };
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    Ok(false)
}

#[derive(Copy, Clone, Debug, PartialEq)]
pub struct RandomGardenParams {
    pub width: usize,
    pub height: usize,
    pub sand_density: f64,
    pub walkable_density: f64,
}

/// The fixed corpus distribution used by the solver/oracle cross-checks.
pub const CORPUS_PARAMS: RandomGardenParams =
    RandomGardenParams { width: 5, height: 5, sand_density: 0.4, walkable_density: 0.7 };

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RandomGardenError {
    #[error("densities must lie in [0, 1]")]
    BadDensity,
    #[error("dimensions must be positive")]
    BadDimensions,
    #[error("no walkable cell for the monk")]
    NoWalkable,
}

/// Each cell is independently sand with probability `sand_density`, else
/// walkable with probability `walkable_density`, else rock. The monk starts
/// on a uniformly chosen walkable cell.
pub fn random_garden(p: &RandomGardenParams, seed: u64) -> Result<Garden, RandomGardenError> {
    if !(0.0..=1.0).contains(&p.sand_density) || !(0.0..=1.0).contains(&p.walkable_density) {
        return Err(RandomGardenError::BadDensity);
    }
    if p.width == 0 || p.height == 0 {
        return Err(RandomGardenError::BadDimensions);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cells: Vec<Cell> = (0..p.width * p.height)
        .map(|_| {
            if rng.gen_bool(p.sand_density) {
                Cell::Sand
            } else if rng.gen_bool(p.walkable_density) {
                Cell::Walkable
            } else {
                Cell::Rock
            }
        })
        .collect();
    let walkable: Vec<usize> =
        (0..cells.len()).filter(|&i| cells[i] == Cell::Walkable).collect();
    if walkable.is_empty() {
        return Err(RandomGardenError::NoWalkable);
    }
    let pick = walkable[rng.gen_range(0..walkable.len())];
    let monk = Pos::new(pick % p.width, pick / p.width);
    Ok(Garden::new(p.width, p.height, cells, monk).expect("monk on walkable"))
}

/// Seeds `0..` filtered to gardens that have a monk and at most
/// `max_sand` sand cells; returns the first `count`.
pub fn random_corpus(p: &RandomGardenParams, count: usize, max_sand: usize) -> Vec<(u64, Garden)> {
    (0u64..)
        .filter_map(|seed| random_garden(p, seed).ok().map(|g| (seed, g)))
        .filter(|(_, g)| g.sand_count() <= max_sand)
        .take(count)
        .collect()
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum OracleVerdict {
    Hc,
    NoHc,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum GardenVerdict {
    Solvable,
    Unsolvable,
    BudgetExceeded,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Agreement {
    Agree,
    Disagree,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub graph_id: String,
    pub oracle_verdict: OracleVerdict,
    pub garden_verdict: GardenVerdict,
    pub agree: Agreement,
    /// `Some` when the garden was solved.
    pub extracted_circuit_ok: Option<bool>,
    pub extracted_circuit: Option<graph::Circuit>,
    pub garden_size: (usize, usize),
    pub sand_cells: usize,
    pub states_expanded: u64,
    pub oracle_time: Duration,
    pub solve_time: Duration,
}

impl EquivalenceReport {
    /// One line without timings.
    pub fn summary_line(&self) -> String {
        let circuit = match (&self.extracted_circuit_ok, &self.extracted_circuit) {
            (Some(true), Some(c)) => format!(" circuit=[{c}] circuit_ok=true"),
            (Some(ok), _) => format!(" circuit_ok={ok}"),
            (None, _) => String::new(),
        };
        format!(
            "{} oracle={:?} garden={:?} agree={:?} size={}x{} sand={} states={}{}",
            self.graph_id,
            self.oracle_verdict,
            self.garden_verdict,
            self.agree,
            self.garden_size.0,
            self.garden_size.1,
            self.sand_cells,
            self.states_expanded,
            circuit
        )
    }
}

impl fmt::Display for EquivalenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.summary_line())
    }
}

#[derive(Debug, Error)]
pub enum EquivalenceError {
    #[error("oracle: {0}")]
    Oracle(#[from] graph::OracleError),
    #[error("compile: {0}")]
    Compile(#[from] reduction::CompileError),
}

#[derive(Copy, Clone, Debug)]
pub struct Budgets {
    pub max_states: u64,
    pub oracle_limit: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Budgets { max_states: solver::DEFAULT_MAX_STATES, oracle_limit: graph::DEFAULT_ORACLE_LIMIT }
    }
}

/// Runs the Hamiltonicity oracle on the graph and the solver on the compiled
/// garden, and cross-checks them. A solver budget overrun is `Inconclusive`.
pub fn check_equivalence(
    graph_id: &str,
    g: &Graph,
    d: &GridDrawing,
    ts: &TileSet,
    budgets: &Budgets,
) -> Result<EquivalenceReport, EquivalenceError> {
    let t0 = Instant::now();
    let circuit = graph::find_hamiltonian_circuit_with_limit(g, budgets.oracle_limit)?;
    let oracle_time = t0.elapsed();
    let oracle_verdict = if circuit.is_some() { OracleVerdict::Hc } else { OracleVerdict::NoHc };

    let (garden, tile_map) = reduction::compile(g, d, ts)?;
    let cfg = SolverConfig { max_states: budgets.max_states, ..SolverConfig::default() };
    let t1 = Instant::now();
    let result = solver::solve(&garden, &cfg);
    let solve_time = t1.elapsed();

    let (garden_verdict, extracted) = match &result.verdict {
        Verdict::Solvable(moves) => {
            let c = reduction::extract_circuit(&tile_map, g, moves, &garden).ok();
            (GardenVerdict::Solvable, Some(c))
        }
        Verdict::Unsolvable => (GardenVerdict::Unsolvable, None),
        Verdict::BudgetExceeded => (GardenVerdict::BudgetExceeded, None),
    };
    let agree = match (oracle_verdict, garden_verdict) {
        (_, GardenVerdict::BudgetExceeded) => Agreement::Inconclusive,
        (OracleVerdict::Hc, GardenVerdict::Solvable)
        | (OracleVerdict::NoHc, GardenVerdict::Unsolvable) => Agreement::Agree,
        _ => Agreement::Disagree,
    };
    let extracted_circuit_ok =
        extracted.as_ref().map(|c| c.as_ref().is_some_and(|c| verify_circuit(g, c)));
    Ok(EquivalenceReport {
        graph_id: graph_id.to_string(),
        oracle_verdict,
        garden_verdict,
        agree,
        extracted_circuit_ok,
        extracted_circuit: extracted.flatten(),
        garden_size: (garden.width(), garden.height()),
        sand_cells: garden.sand_count(),
        states_expanded: result.stats.states_expanded,
        oracle_time,
        solve_time,
    })
}
