//! Depth-first decision procedure and solution enumeration.
//!
//! States are `(monk location, covered set)`. With region abstraction a monk
//! standing on walkable ground is keyed by its walkable region rather than
//! its exact cell, and every slide out of the region is one successor; the
//! walking prefix is reconstructed when a solution is emitted.

use std::collections::VecDeque;
use std::fmt;
use std::time::{Duration, Instant};

use rustc_hash::{FxHashMap, FxHashSet};

use crate::garden::{format_moves, Cell, Direction, EndRule, Garden, GameState, Pos, Regions};
use crate::prune;
use crate::sandset::SandSet;

pub const DEFAULT_MAX_STATES: u64 = 10_000_000;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Pruning {
    pub dead_sand: bool,
    pub region_abstraction: bool,
}

impl Pruning {
    pub const ALL: Pruning = Pruning { dead_sand: true, region_abstraction: true };
    pub const NONE: Pruning = Pruning { dead_sand: false, region_abstraction: false };
}

impl Default for Pruning {
    fn default() -> Self {
        Pruning::ALL
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    pub end_rule: EndRule,
    pub max_states: u64,
    pub pruning: Pruning,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            end_rule: EndRule::Strict,
            max_states: DEFAULT_MAX_STATES,
            pruning: Pruning::ALL,
        }
    }
}

impl SolverConfig {
    pub fn with_rule(end_rule: EndRule) -> SolverConfig {
        SolverConfig { end_rule, ..SolverConfig::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Solvable(Vec<Direction>),
    Unsolvable,
    BudgetExceeded,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    pub states_expanded: u64,
    pub peak_frontier: usize,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    pub verdict: Verdict,
    pub stats: SolveStats,
}

impl SolveResult {
    /// `SOLVABLE <moves>`, `UNSOLVABLE` or `BUDGET`.
    pub fn verdict_line(&self) -> String {
        match &self.verdict {
            Verdict::Solvable(moves) => format!("SOLVABLE {}", format_moves(moves)),
            Verdict::Unsolvable => "UNSOLVABLE".to_string(),
            Verdict::BudgetExceeded => "BUDGET".to_string(),
        }
    }

    pub fn stats_line(&self) -> String {
        format!(
            "states={} frontier={} ms={}",
            self.stats.states_expanded,
            self.stats.peak_frontier,
            self.stats.elapsed.as_millis()
        )
    }
}

impl fmt::Display for SolveResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.verdict_line())?;
        writeln!(f, "{}", self.stats_line())
    }
}

/// What counts as a finished search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Goal {
    End(EndRule),
    /// All sand covered with the monk on one of the given walkable cells.
    CoverAllAt(Vec<Pos>),
}

impl Goal {
    fn requires_walkable_end(&self) -> bool {
        !matches!(self, Goal::End(EndRule::CoveredOnly))
    }
}

/// One transition: walk to `origin` (a no-op outside region mode), then move
/// in `direction`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub origin: Pos,
    pub direction: Direction,
    pub next: GameState,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Loc {
    Region(u32),
    Cell(u32),
}

/// The search graph over garden states.
pub struct StateSpace<'g> {
    garden: &'g Garden,
    regions: Regions,
    region_abstraction: bool,
}

impl<'g> StateSpace<'g> {
    pub fn new(garden: &'g Garden, region_abstraction: bool) -> StateSpace<'g> {
        StateSpace { garden, regions: garden.walkable_regions(), region_abstraction }
    }

    pub fn garden(&self) -> &'g Garden {
        self.garden
    }

    pub fn regions(&self) -> &Regions {
        &self.regions
    }

    fn loc(&self, s: &GameState) -> Loc {
        match self.regions.region_of(self.garden, s.monk) {
            Some(r) if self.region_abstraction => Loc::Region(r),
            _ => Loc::Cell(self.garden.index(s.monk) as u32),
        }
    }

    /// Successors in canonical order.
    pub fn successors(&self, s: &GameState) -> Vec<Edge> {
        let g = self.garden;
        let mut out = Vec::new();
        match self.loc(s) {
            Loc::Region(r) => {
                for &origin in self.regions.cells(r) {
                    for d in Direction::ALL {
                        let Some(t) = g.step(origin, d) else { continue };
                        let open_sand = g
                            .sand_id(t)
                            .is_some_and(|id| !s.covered.contains(id));
                        if open_sand {
                            let from = GameState { monk: origin, covered: s.covered.clone() };
                            let (next, _) = g.apply_move(&from, d).expect("open sand target");
                            out.push(Edge { origin, direction: d, next });
                        }
                    }
                }
            }
            Loc::Cell(_) => {
                for d in g.legal_moves(s) {
                    let (next, _) = g.apply_move(s, d).expect("legal move");
                    out.push(Edge { origin: s.monk, direction: d, next });
                }
            }
        }
        out
    }

    /// Shortest walk between two cells of one walkable region, ties broken
    /// by canonical direction order.
    pub fn walk_path(&self, from: Pos, to: Pos) -> Vec<Direction> {
        if from == to {
            return Vec::new();
        }
        let g = self.garden;
        let mut prev: FxHashMap<Pos, (Pos, Direction)> = FxHashMap::default();
        let mut queue = VecDeque::from([from]);
        prev.insert(from, (from, Direction::U));
        while let Some(p) = queue.pop_front() {
            if p == to {
                break;
            }
            for d in Direction::ALL {
                if let Some(n) = g.step(p, d) {
                    if g.cell(n) == Cell::Walkable && !prev.contains_key(&n) {
                        prev.insert(n, (p, d));
                        queue.push_back(n);
                    }
                }
            }
        }
        let mut path = Vec::new();
        let mut cur = to;
        while cur != from {
            let (p, d) = prev[&cur];
            path.push(d);
            cur = p;
        }
        path.reverse();
        path
    }

    /// Expands a chain of edges from `start` into a full move list.
    pub fn expand(&self, start: &GameState, edges: &[(Pos, Direction)]) -> Vec<Direction> {
        let mut moves = Vec::new();
        let mut monk = start.monk;
        let mut state = start.clone();
        for &(origin, d) in edges {
            moves.extend(self.walk_path(monk, origin));
            state.monk = origin;
            let (next, _) = self.garden.apply_move(&state, d).expect("edge replays");
            state = next;
            monk = state.monk;
            moves.push(d);
        }
        moves
    }

    fn is_goal(&self, goal: &Goal, s: &GameState) -> bool {
        match goal {
            Goal::End(rule) => self.garden.is_solved(s, *rule),
            Goal::CoverAllAt(cells) => {
                let g = self.garden;
                s.covered.len() == g.sand_count()
                    && (cells.contains(&s.monk)
                        || self.regions.region_of(g, s.monk).is_some_and(|r| {
                            cells.iter().any(|&c| self.regions.region_of(g, c) == Some(r))
                        }))
            }
        }
    }
}

struct Frame {
    edges: Vec<Edge>,
    next: usize,
    chosen: Option<(Pos, Direction)>,
}

pub fn solve(g: &Garden, cfg: &SolverConfig) -> SolveResult {
    solve_from(g, cfg, &g.initial_state(), &Goal::End(cfg.end_rule))
}

/// Depth-first search from an arbitrary state towards an arbitrary goal.
pub fn solve_from(g: &Garden, cfg: &SolverConfig, start: &GameState, goal: &Goal) -> SolveResult {
    let started = Instant::now();
    let space = StateSpace::new(g, cfg.pruning.region_abstraction);
    let mut visited: FxHashSet<(Loc, SandSet)> = FxHashSet::default();
    let mut stats = SolveStats::default();
    let finish = |verdict: Verdict, mut stats: SolveStats| {
        stats.elapsed = started.elapsed();
        SolveResult { verdict, stats }
    };

    visited.insert((space.loc(start), start.covered.clone()));
    stats.states_expanded = 1;
    if space.is_goal(goal, start) {
        stats.peak_frontier = 1;
        return finish(Verdict::Solvable(Vec::new()), stats);
    }
    if cfg.pruning.dead_sand && prune::is_dead(g, start, goal.requires_walkable_end()) {
        return finish(Verdict::Unsolvable, stats);
    }
    let mut stack =
        vec![Frame { edges: space.successors(start), next: 0, chosen: None }];
    stats.peak_frontier = 1;

    while let Some(top) = stack.last_mut() {
        if top.next == top.edges.len() {
            stack.pop();
            continue;
        }
        let edge = &top.edges[top.next];
        top.next += 1;
        top.chosen = Some((edge.origin, edge.direction));
        let next = edge.next.clone();
        if !visited.insert((space.loc(&next), next.covered.clone())) {
            continue;
        }
        stats.states_expanded += 1;
        if space.is_goal(goal, &next) {
            let path: Vec<(Pos, Direction)> = stack.iter().map(|f| f.chosen.unwrap()).collect();
            let moves = space.expand(start, &path);
            return finish(Verdict::Solvable(moves), stats);
        }
        if stats.states_expanded >= cfg.max_states {
            return finish(Verdict::BudgetExceeded, stats);
        }
        if cfg.pruning.dead_sand && prune::is_dead(g, &next, goal.requires_walkable_end()) {
            continue;
        }
        let edges = space.successors(&next);
        stack.push(Frame { edges, next: 0, chosen: None });
        stats.peak_frontier = stats.peak_frontier.max(stack.len());
    }
    finish(Verdict::Unsolvable, stats)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub solutions: Vec<Vec<Direction>>,
    /// True when the whole (non-revisiting) solution space was enumerated.
    pub complete: bool,
    pub stats: SolveStats,
}

pub fn enumerate_solutions(g: &Garden, cfg: &SolverConfig, limit: Option<usize>) -> Enumeration {
    enumerate_from(g, cfg, &g.initial_state(), &Goal::End(cfg.end_rule), limit)
}

/// Enumerates solutions in canonical order. A solution ends at the first
/// goal state on its path; no path repeats a state. States proven to lead
/// nowhere are memoised.
pub fn enumerate_from(
    g: &Garden,
    cfg: &SolverConfig,
    start: &GameState,
    goal: &Goal,
    limit: Option<usize>,
) -> Enumeration {
    let started = Instant::now();
    let space = StateSpace::new(g, cfg.pruning.region_abstraction);
    let limit = limit.unwrap_or(usize::MAX);
    let mut out = Enumeration { solutions: Vec::new(), complete: true, stats: SolveStats::default() };
    let mut dead: FxHashSet<(Loc, SandSet)> = FxHashSet::default();
    let mut on_path: FxHashSet<(Loc, SandSet)> = FxHashSet::default();

    if limit == 0 {
        out.complete = false;
        return out;
    }
    if space.is_goal(goal, start) {
        out.solutions.push(Vec::new());
        out.stats.elapsed = started.elapsed();
        return out;
    }
    struct EFrame {
        key: (Loc, SandSet),
        edges: Vec<Edge>,
        next: usize,
        chosen: Option<(Pos, Direction)>,
        found: bool,
        // A successor was skipped because it is on the current path; the
        // subtree result depends on the path and must not be memoised.
        cyclic: bool,
    }
    let root_key = (space.loc(start), start.covered.clone());
    on_path.insert(root_key.clone());
    let mut stack = vec![EFrame {
        key: root_key,
        edges: if cfg.pruning.dead_sand && prune::is_dead(g, start, goal.requires_walkable_end()) {
            Vec::new()
        } else {
            space.successors(start)
        },
        next: 0,
        chosen: None,
        found: false,
        cyclic: false,
    }];
    out.stats.states_expanded = 1;

    while let Some(top) = stack.last_mut() {
        if top.next == top.edges.len() {
            let done = stack.pop().unwrap();
            on_path.remove(&done.key);
            if let Some(parent) = stack.last_mut() {
                parent.found |= done.found;
                parent.cyclic |= done.cyclic;
            }
            if !done.found && !done.cyclic {
                dead.insert(done.key);
            }
            continue;
        }
        let edge = &top.edges[top.next];
        top.next += 1;
        top.chosen = Some((edge.origin, edge.direction));
        let next = edge.next.clone();
        let key = (space.loc(&next), next.covered.clone());
        if on_path.contains(&key) {
            top.cyclic = true;
            continue;
        }
        if dead.contains(&key) {
            continue;
        }
        out.stats.states_expanded += 1;
        if space.is_goal(goal, &next) {
            top.found = true;
            let path: Vec<(Pos, Direction)> = stack.iter().map(|f| f.chosen.unwrap()).collect();
            out.solutions.push(space.expand(start, &path));
            if out.solutions.len() >= limit {
                out.complete = false;
                break;
            }
            continue;
        }
        if out.stats.states_expanded >= cfg.max_states {
            out.complete = false;
            break;
        }
        let edges = if cfg.pruning.dead_sand && prune::is_dead(g, &next, goal.requires_walkable_end())
        {
            Vec::new()
        } else {
            space.successors(&next)
        };
        on_path.insert(key.clone());
        stack.push(EFrame { key, edges, next: 0, chosen: None, found: false, cyclic: false });
        out.stats.peak_frontier = out.stats.peak_frontier.max(stack.len());
    }
    out.stats.elapsed = started.elapsed();
    out
}

/// Sound dead-state test: true only if some uncovered sand can never be
/// covered from this state.
pub fn prune_dead_sand(g: &Garden, s: &GameState) -> bool {
    prune::is_dead(g, s, false)
}
