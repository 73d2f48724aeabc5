//! Orthogonal grid drawings of cubic graphs.
//!
//! Nodes sit on lattice cells; each edge is a run of unit cells between its
//! two endpoint cells (endpoints excluded), stored from `u` towards `v`. The
//! start node keeps the cell above it free for the start pad.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::garden::{Direction, Pos};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePath {
    pub u: usize,
    pub v: usize,
    pub cells: Vec<Pos>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridDrawing {
    pub width: usize,
    pub height: usize,
    pub nodes: BTreeMap<usize, Pos>,
    pub edges: Vec<EdgePath>,
    pub start: usize,
}

/// What a drawing cell holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CellUse {
    Empty,
    Node(usize),
    /// The free cell above the start node.
    Pad,
    /// `index` is the position along edge `edge` of the drawing's edge list;
    /// `sides` are the two sides through which the path enters and leaves.
    Path { edge: usize, index: usize, sides: [Direction; 2] },
}

fn neighbour(p: Pos, d: Direction, w: usize, h: usize) -> Option<Pos> {
    let (dx, dy) = d.offset();
    let x = p.x.checked_add_signed(dx)?;
    let y = p.y.checked_add_signed(dy)?;
    (x < w && y < h).then_some(Pos::new(x, y))
}

/// The side of `from` that faces the 4-adjacent cell `to`.
pub fn side_towards(from: Pos, to: Pos) -> Option<Direction> {
    Direction::ALL.into_iter().find(|&d| {
        let (dx, dy) = d.offset();
        from.x.checked_add_signed(dx) == Some(to.x) && from.y.checked_add_signed(dy) == Some(to.y)
    })
}

impl GridDrawing {
    pub fn pad_cell(&self) -> Option<Pos> {
        let s = self.nodes.get(&self.start)?;
        (s.y > 0).then(|| Pos::new(s.x, s.y - 1))
    }

    /// Sides of node `v` used by its incident paths, with the edge index.
    pub fn attachments(&self, v: usize) -> Vec<(Direction, usize)> {
        let Some(&p) = self.nodes.get(&v) else { return Vec::new() };
        let mut out = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            let end = if e.u == v {
                e.cells.first()
            } else if e.v == v {
                e.cells.last()
            } else {
                continue;
            };
            if let Some(side) = end.and_then(|&c| side_towards(p, c)) {
                out.push((side, i));
            }
        }
        out
    }

    /// The per-cell classification for a validator-clean drawing.
    pub fn cell_uses(&self) -> Vec<CellUse> {
        let mut uses = vec![CellUse::Empty; self.width * self.height];
        for (&v, p) in &self.nodes {
            uses[p.y * self.width + p.x] = CellUse::Node(v);
        }
        if let Some(p) = self.pad_cell() {
            uses[p.y * self.width + p.x] = CellUse::Pad;
        }
        for (edge, e) in self.edges.iter().enumerate() {
            let (pu, pv) = (self.nodes[&e.u], self.nodes[&e.v]);
            for (index, &c) in e.cells.iter().enumerate() {
                let before = if index == 0 { pu } else { e.cells[index - 1] };
                let after = if index + 1 == e.cells.len() { pv } else { e.cells[index + 1] };
                let sides = [
                    side_towards(c, before).expect("validated path"),
                    side_towards(c, after).expect("validated path"),
                ];
                uses[c.y * self.width + c.x] = CellUse::Path { edge, index, sides };
            }
        }
        uses
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct DrawingParseError {
    pub line: usize,
    pub message: String,
}

pub fn parse_drawing(text: &str) -> Result<GridDrawing, DrawingParseError> {
    let mut bounds = None;
    let mut nodes = BTreeMap::new();
    let mut edges = Vec::new();
    let mut start = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |message: &str| DrawingParseError { line, message: message.to_string() };
        let body = raw.split(';').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let mut words = body.split_whitespace();
        let keyword = words.next().unwrap();
        let rest: Vec<&str> = words.collect();
        let nums = |ws: &[&str]| -> Result<Vec<usize>, DrawingParseError> {
            ws.iter()
                .map(|w| w.parse::<usize>().map_err(|_| err(&format!("bad number {w:?}"))))
                .collect()
        };
        match keyword {
            "bounds" => {
                let n = nums(&rest)?;
                if n.len() != 2 {
                    return Err(err("expected 'bounds <W> <H>'"));
                }
                if bounds.replace((n[0], n[1])).is_some() {
                    return Err(err("duplicate bounds"));
                }
            }
            "node" => {
                let n = nums(&rest)?;
                if n.len() != 3 {
                    return Err(err("expected 'node <id> <x> <y>'"));
                }
                if nodes.insert(n[0], Pos::new(n[1], n[2])).is_some() {
                    return Err(err(&format!("duplicate node {}", n[0])));
                }
            }
            "edge" => {
                let colon = rest.iter().position(|w| *w == ":").ok_or_else(|| err("missing ':'"))?;
                let ends = nums(&rest[..colon])?;
                let coords = nums(&rest[colon + 1..])?;
                if ends.len() != 2 || coords.len() % 2 != 0 {
                    return Err(err("expected 'edge <u> <v> : <x1> <y1> ...'"));
                }
                let cells = coords.chunks(2).map(|c| Pos::new(c[0], c[1])).collect();
                edges.push(EdgePath { u: ends[0], v: ends[1], cells });
            }
            "start" => {
                let n = nums(&rest)?;
                if n.len() != 1 {
                    return Err(err("expected 'start <id>'"));
                }
                if start.replace(n[0]).is_some() {
                    return Err(err("duplicate start"));
                }
            }
            other => return Err(err(&format!("unknown keyword {other:?}"))),
        }
    }
    let end = text.lines().count() + 1;
    let (width, height) =
        bounds.ok_or(DrawingParseError { line: end, message: "missing bounds".into() })?;
    let start = start.ok_or(DrawingParseError { line: end, message: "missing start".into() })?;
    Ok(GridDrawing { width, height, nodes, edges, start })
}

pub fn emit_drawing(d: &GridDrawing) -> String {
    let mut out = format!("bounds {} {}\n", d.width, d.height);
    for (v, p) in &d.nodes {
        writeln!(out, "node {v} {} {}", p.x, p.y).unwrap();
    }
    for e in &d.edges {
        write!(out, "edge {} {} :", e.u, e.v).unwrap();
        for c in &e.cells {
            write!(out, " {} {}", c.x, c.y).unwrap();
        }
        out.push('\n');
    }
    writeln!(out, "start {}", d.start).unwrap();
    out
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum Violation {
    #[error("bounds must be positive")]
    EmptyBounds,
    #[error("node {0} is not a graph vertex")]
    UnknownNode(usize),
    #[error("vertex {0} is not placed")]
    MissingNode(usize),
    #[error("node {v} at {pos} is out of bounds")]
    NodeOutOfBounds { v: usize, pos: Pos },
    #[error("nodes {u} and {v} share cell {pos}")]
    NodesOverlap { u: usize, v: usize, pos: Pos },
    #[error("edge ({0},{1}) unrouted")]
    EdgeUnrouted(usize, usize),
    #[error("path ({0},{1}) is not a graph edge")]
    ExtraPath(usize, usize),
    #[error("edge ({0},{1}) has more than one path")]
    DuplicatePath(usize, usize),
    #[error("path ({0},{1}) is empty")]
    EmptyPath(usize, usize),
    #[error("path ({u},{v}) cell {pos} is out of bounds")]
    PathOutOfBounds { u: usize, v: usize, pos: Pos },
    #[error("path ({u},{v}) does not start next to node {node}")]
    PathDetached { u: usize, v: usize, node: usize },
    #[error("path ({u},{v}) is broken after cell {index}")]
    PathBroken { u: usize, v: usize, index: usize },
    #[error("path ({u},{v}) runs through node cell {pos}")]
    PathThroughNode { u: usize, v: usize, pos: Pos },
    #[error("cell {0} is used by more than one path cell")]
    PathsOverlap(Pos),
    #[error("node {v} has two paths on side {side:?}")]
    SideReused { v: usize, side: Direction },
    #[error("start {0} is not a placed vertex")]
    BadStart(usize),
    #[error("start node is in the top row, no room for the pad")]
    StartInTopRow,
    #[error("pad cell {0} above the start node is occupied")]
    PadBlocked(Pos),
}

/// Checks every drawing invariant and that paths correspond one-to-one with
/// graph edges.
pub fn validate_drawing(g: &Graph, d: &GridDrawing) -> Result<(), Vec<Violation>> {
    let mut out = Vec::new();
    let (w, h) = (d.width, d.height);
    if w == 0 || h == 0 {
        return Err(vec![Violation::EmptyBounds]);
    }
    let inside = |p: &Pos| p.x < w && p.y < h;
    let mut node_at: BTreeMap<Pos, usize> = BTreeMap::new();
    for (&v, &pos) in &d.nodes {
        if v == 0 || v > g.vertex_count() {
            out.push(Violation::UnknownNode(v));
        }
        if !inside(&pos) {
            out.push(Violation::NodeOutOfBounds { v, pos });
        }
        if let Some(&u) = node_at.get(&pos) {
            out.push(Violation::NodesOverlap { u, v, pos });
        } else {
            node_at.insert(pos, v);
        }
    }
    for v in 1..=g.vertex_count() {
        if !d.nodes.contains_key(&v) {
            out.push(Violation::MissingNode(v));
        }
    }
    let mut routed: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut used: BTreeSet<Pos> = BTreeSet::new();
    for e in &d.edges {
        let key = (e.u.min(e.v), e.u.max(e.v));
        if !g.has_edge(e.u, e.v) {
            out.push(Violation::ExtraPath(key.0, key.1));
        } else if !routed.insert(key) {
            out.push(Violation::DuplicatePath(key.0, key.1));
        }
        if e.cells.is_empty() {
            out.push(Violation::EmptyPath(key.0, key.1));
            continue;
        }
        for &pos in &e.cells {
            if !inside(&pos) {
                out.push(Violation::PathOutOfBounds { u: e.u, v: e.v, pos });
            }
            if node_at.contains_key(&pos) {
                out.push(Violation::PathThroughNode { u: e.u, v: e.v, pos });
            }
            if !used.insert(pos) {
                out.push(Violation::PathsOverlap(pos));
            }
        }
        for (i, pair) in e.cells.windows(2).enumerate() {
            if side_towards(pair[0], pair[1]).is_none() {
                out.push(Violation::PathBroken { u: e.u, v: e.v, index: i });
            }
        }
        for (node, end) in [(e.u, e.cells[0]), (e.v, *e.cells.last().unwrap())] {
            let attached = d.nodes.get(&node).is_some_and(|&p| side_towards(p, end).is_some());
            if !attached {
                out.push(Violation::PathDetached { u: e.u, v: e.v, node });
            }
        }
    }
    for (u, v) in g.edges() {
        if !routed.contains(&(u, v)) {
            out.push(Violation::EdgeUnrouted(u, v));
        }
    }
    for &v in d.nodes.keys() {
        let mut sides = BTreeSet::new();
        for (side, _) in d.attachments(v) {
            if !sides.insert(side) {
                out.push(Violation::SideReused { v, side });
            }
        }
    }
    match d.nodes.get(&d.start) {
        None => out.push(Violation::BadStart(d.start)),
        Some(p) if p.y == 0 => out.push(Violation::StartInTopRow),
        Some(p) => {
            let pad = Pos::new(p.x, p.y - 1);
            if node_at.contains_key(&pad) || used.contains(&pad) {
                out.push(Violation::PadBlocked(pad));
            }
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

impl fmt::Display for GridDrawing {
    /// A character sketch: node ids mod 10, `─│┌┐└┘` for paths, `^` for the pad.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let uses = self.cell_uses();
        for y in 0..self.height {
            for x in 0..self.width {
                let c = match &uses[y * self.width + x] {
                    CellUse::Empty => '.',
                    CellUse::Pad => '^',
                    CellUse::Node(v) => char::from_digit((*v % 10) as u32, 10).unwrap(),
                    CellUse::Path { sides, .. } => {
                        use Direction::*;
                        let mut s = *sides;
                        s.sort();
                        match s {
                            [U, D] => '│',
                            [R, L] => '─',
                            [U, R] => '└',
                            [U, L] => '┘',
                            [R, D] => '┌',
                            [D, L] => '┐',
                            _ => '?',
                        }
                    }
                };
                f.write_char(c)?;
            }
            f.write_char('\n')?;
        }
        Ok(())
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct EmbedLimits {
    /// Largest square side tried.
    pub max_side: usize,
    /// Node placements tried per grid size.
    pub budget: u64,
}

impl Default for EmbedLimits {
    fn default() -> Self {
        EmbedLimits { max_side: 12, budget: 200_000 }
    }
}

#[derive(Clone, Debug)]
pub struct EmbedReport {
    pub drawing: GridDrawing,
    pub area: usize,
    /// Placements tried over all grid sizes.
    pub steps: u64,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EmbedError {
    #[error("graph must have vertex 1 and maximum degree 4")]
    Unsupported,
    #[error("no drawing found up to {max_side}x{max_side} within budget ({steps} placements)")]
    Budget { max_side: usize, steps: u64 },
}

const START: usize = 1;

struct Embedder<'a> {
    g: &'a Graph,
    side: usize,
    order: Vec<usize>,
    grid: Vec<Option<Occupant>>,
    nodes: BTreeMap<usize, Pos>,
    edges: Vec<EdgePath>,
    steps: u64,
    budget: u64,
    /// Restrict nodes to cells with both coordinates odd.
    sparse: bool,
}

#[derive(Copy, Clone, PartialEq, Eq)]
enum Occupant {
    Node,
    Path,
    Pad,
}

impl Embedder<'_> {
    fn idx(&self, p: Pos) -> usize {
        p.y * self.side + p.x
    }

    fn free(&self, p: Pos) -> bool {
        self.grid[self.idx(p)].is_none()
    }

    fn used_sides(&self, v: usize) -> Vec<Direction> {
        let p = self.nodes[&v];
        let mut sides: Vec<Direction> = self
            .edges
            .iter()
            .filter_map(|e| {
                let end = if e.u == v {
                    e.cells.first()
                } else if e.v == v {
                    e.cells.last()
                } else {
                    None
                }?;
                side_towards(p, *end)
            })
            .collect();
        if v == START {
            sides.push(Direction::U);
        }
        sides
    }

    fn open_sides(&self, v: usize) -> Vec<Pos> {
        let p = self.nodes[&v];
        let used = self.used_sides(v);
        Direction::ALL
            .into_iter()
            .filter(|d| !used.contains(d))
            .filter_map(|d| neighbour(p, d, self.side, self.side))
            .filter(|&c| self.free(c))
            .collect()
    }

    /// Shortest free path between open sides of `u` and `v`.
    fn route(&self, u: usize, v: usize) -> Option<Vec<Pos>> {
        let targets: BTreeSet<Pos> = self.open_sides(v).into_iter().collect();
        let sources = self.open_sides(u);
        let n = self.side * self.side;
        let mut prev: Vec<Option<usize>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::new();
        for s in sources {
            seen[self.idx(s)] = true;
            queue.push_back(s);
        }
        while let Some(p) = queue.pop_front() {
            if targets.contains(&p) {
                let mut path = vec![p];
                let mut cur = self.idx(p);
                while let Some(q) = prev[cur] {
                    path.push(Pos::new(q % self.side, q / self.side));
                    cur = q;
                }
                path.reverse();
                return Some(path);
            }
            for d in Direction::ALL {
                if let Some(q) = neighbour(p, d, self.side, self.side) {
                    let qi = self.idx(q);
                    if !seen[qi] && self.free(q) {
                        seen[qi] = true;
                        prev[qi] = Some(self.idx(p));
                        queue.push_back(q);
                    }
                }
            }
        }
        None
    }

    fn remaining_degree(&self, v: usize) -> usize {
        self.g.neighbors(v).iter().filter(|w| !self.nodes.contains_key(w)).count()
    }

    /// Every placed node still has enough free sides for its unplaced
    /// neighbours.
    fn feasible(&self) -> bool {
        self.nodes.keys().all(|&v| self.open_sides(v).len() >= self.remaining_degree(v))
    }

    fn candidates(&self, v: usize) -> Vec<Pos> {
        let placed: Vec<Pos> =
            self.g.neighbors(v).iter().filter_map(|w| self.nodes.get(w).copied()).collect();
        let mut cells: Vec<(usize, Pos)> = (0..self.side * self.side)
            .map(|i| Pos::new(i % self.side, i / self.side))
            .filter(|&p| self.free(p))
            .filter(|&p| !self.sparse || (p.x % 2 == 1 && p.y % 2 == 1))
            .filter(|&p| v != START || (p.y > 0 && self.free(Pos::new(p.x, p.y - 1))))
            .map(|p| {
                let cost: usize =
                    placed.iter().map(|q| p.x.abs_diff(q.x) + p.y.abs_diff(q.y)).sum();
                (cost, p)
            })
            .filter(|&(cost, _)| placed.is_empty() || cost >= 2 * placed.len())
            .collect();
        cells.sort();
        cells.into_iter().map(|(_, p)| p).collect()
    }

    fn place(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for p in self.candidates(v) {
            if self.steps >= self.budget {
                return false;
            }
            self.steps += 1;
            let grid_mark = self.grid.clone();
            let edge_mark = self.edges.len();
            self.nodes.insert(v, p);
            let i = self.idx(p);
            self.grid[i] = Some(Occupant::Node);
            if v == START {
                let pad = self.idx(Pos::new(p.x, p.y - 1));
                self.grid[pad] = Some(Occupant::Pad);
            }
            let mut ok = true;
            let mut placed: Vec<usize> =
                self.g.neighbors(v).iter().copied().filter(|w| self.nodes.contains_key(w) && *w != v).collect();
            placed.sort();
            for w in placed {
                match self.route(w, v) {
                    Some(cells) => {
                        for &c in &cells {
                            let ci = self.idx(c);
                            self.grid[ci] = Some(Occupant::Path);
                        }
                        self.edges.push(EdgePath { u: w, v, cells });
                    }
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok && self.feasible() && self.place(depth + 1) {
                return true;
            }
            self.grid = grid_mark;
            self.edges.truncate(edge_mark);
            self.nodes.remove(&v);
        }
        false
    }
}

/// Backtracking placement with shortest-path routing, on growing square
/// grids. Vertex 1 is the start node.
pub fn embed(g: &Graph, limits: &EmbedLimits) -> Result<EmbedReport, EmbedError> {
    let n = g.vertex_count();
    if n == 0 || (1..=n).any(|v| g.degree(v) > 4) || g.degree(START) > 3 {
        return Err(EmbedError::Unsupported);
    }
    // Breadth-first order from the start keeps each new node near placed ones.
    let mut order = vec![START];
    let mut seen = BTreeSet::from([START]);
    let mut i = 0;
    while i < order.len() {
        for &w in g.neighbors(order[i]) {
            if seen.insert(w) {
                order.push(w);
            }
        }
        i += 1;
        if i == order.len() {
            if let Some(v) = (1..=n).find(|v| !seen.contains(v)) {
                seen.insert(v);
                order.push(v);
            }
        }
    }
    let min_side = ((2 * n) as f64).sqrt().ceil() as usize;
    let mut steps = 0;
    let attempts = (min_side.max(2)..=limits.max_side).flat_map(|s| [(s, true), (s, false)]);
    for (side, sparse) in attempts {
        let mut e = Embedder {
            g,
            side,
            order: order.clone(),
            grid: vec![None; side * side],
            nodes: BTreeMap::new(),
            edges: Vec::new(),
            steps: 0,
            budget: limits.budget,
            sparse,
        };
        let found = e.place(0);
        steps += e.steps;
        if found {
            let mut edges = e.edges;
            for path in &mut edges {
                if path.u > path.v {
                    std::mem::swap(&mut path.u, &mut path.v);
                    path.cells.reverse();
                }
            }
            edges.sort_by_key(|p| (p.u, p.v));
            let drawing = GridDrawing { width: side, height: side, nodes: e.nodes, edges, start: START };
            debug_assert!(validate_drawing(g, &drawing).is_ok());
            return Ok(EmbedReport { area: side * side, drawing, steps });
        }
    }
    Err(EmbedError::Budget { max_side: limits.max_side, steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures;

    const SQUARE: &str = "\
; a 4-cycle is enough to exercise the format
bounds 3 4
node 1 0 1
node 2 2 1
node 3 2 3
node 4 0 3
edge 1 2 : 1 1
edge 2 3 : 2 2
edge 3 4 : 1 3
edge 1 4 : 0 2
start 1
";

    fn square_graph() -> Graph {
        Graph::new(4, &[(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap()
    }

    #[test]
    fn parse_emit_round_trip() {
        let d = parse_drawing(SQUARE).unwrap();
        assert_eq!(d.nodes[&3], Pos::new(2, 3));
        assert_eq!(parse_drawing(&emit_drawing(&d)).unwrap(), d);
        assert_eq!(validate_drawing(&square_graph(), &d), Ok(()));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(parse_drawing("node 1 0 0\nstart 1").unwrap_err().message, "missing bounds");
        assert_eq!(parse_drawing("bounds 2 2\nfoo").unwrap_err().line, 2);
        assert!(parse_drawing("bounds 2 2\nedge 1 2 0 0\nstart 1").is_err());
    }

    #[test]
    fn validator_catches_problems() {
        let g = square_graph();
        let mut d = parse_drawing(SQUARE).unwrap();
        d.edges.pop();
        assert_eq!(validate_drawing(&g, &d), Err(vec![Violation::EdgeUnrouted(1, 4)]));

        let mut d = parse_drawing(SQUARE).unwrap();
        d.edges[1].cells = vec![Pos::new(1, 1)];
        let errs = validate_drawing(&g, &d).unwrap_err();
        assert!(errs.contains(&Violation::PathsOverlap(Pos::new(1, 1))));

        let mut d = parse_drawing(SQUARE).unwrap();
        d.nodes.insert(1, Pos::new(0, 0));
        d.edges[3].cells = vec![Pos::new(0, 1), Pos::new(0, 2)];
        d.edges[0].cells = vec![Pos::new(1, 0), Pos::new(2, 0)];
        let errs = validate_drawing(&g, &d).unwrap_err();
        assert!(errs.contains(&Violation::StartInTopRow), "{errs:?}");

        let mut d = parse_drawing(SQUARE).unwrap();
        d.start = 3;
        let errs = validate_drawing(&g, &d).unwrap_err();
        assert_eq!(errs, vec![Violation::PadBlocked(Pos::new(2, 2))]);
    }

    #[test]
    fn cell_uses_classify_bends() {
        let d = parse_drawing(SQUARE).unwrap();
        let uses = d.cell_uses();
        assert_eq!(uses[1 * 3 + 1], CellUse::Path { edge: 0, index: 0, sides: [Direction::L, Direction::R] });
        assert_eq!(uses[0 * 3 + 0], CellUse::Pad);
        assert_eq!(d.to_string(), "^..\n1─2\n│.│\n4─3\n");
    }

    #[test]
    fn embed_small_fixtures() {
        for g in [fixtures::k4(), fixtures::prism()] {
            let r = embed(&g, &EmbedLimits::default()).unwrap();
            assert_eq!(validate_drawing(&g, &r.drawing), Ok(()));
        }
    }
}
