//! Tile library, gadget verifier, graph-to-garden compiler and circuit
//! extraction.
//!
//! Every tile is 7×7. A port is the midpoint of a tile side; adjacent tiles
//! therefore always agree across a shared boundary. Edge tiles carry walkable
//! corridors. A node tile is rock on its boundary except for its three port
//! cells, each backed by a single sand mouth cell, so every mouth permits one
//! crossing only.
//!
//! Drawing coordinates are top-left based. A position `(x, y)` in a
//! bottom-left based convention on a drawing of height `H` is `(x, H-1-y)`
//! here.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};
use std::path::Path;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::garden::{Cell, Direction, Garden, MoveKind, Pos};
use crate::graph::{validate_cubic, verify_circuit, Circuit, DegreeViolation, Graph};
use crate::layout::{validate_drawing, CellUse, GridDrawing, Violation};
use crate::solver::{enumerate_from, solve_from, Goal, SolverConfig, Verdict};

pub const TILE: usize = 7;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TileKind {
    Straight,
    Corner,
    Node,
    Gateway,
    StartPad,
    Filler,
}

impl TileKind {
    pub const ALL: [TileKind; 6] = [
        TileKind::Straight,
        TileKind::Corner,
        TileKind::Node,
        TileKind::Gateway,
        TileKind::StartPad,
        TileKind::Filler,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TileKind::Straight => "straight",
            TileKind::Corner => "corner",
            TileKind::Node => "node",
            TileKind::Gateway => "gateway",
            TileKind::StartPad => "startpad",
            TileKind::Filler => "filler",
        }
    }

    pub fn from_name(s: &str) -> Option<TileKind> {
        TileKind::ALL.into_iter().find(|k| k.name() == s)
    }
}

impl fmt::Display for TileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The port cell on side `d` of a tile.
pub fn port_cell(d: Direction) -> Pos {
    match d {
        Direction::U => Pos::new(3, 0),
        Direction::R => Pos::new(6, 3),
        Direction::D => Pos::new(3, 6),
        Direction::L => Pos::new(0, 3),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tile {
    pub name: String,
    pub kind: TileKind,
    cells: Vec<Cell>,
    /// Sides with a port, in canonical order.
    pub ports: Vec<Direction>,
    /// Gateway only: the two cells converted from rock to sand.
    pub added: Vec<Pos>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TileError {
    #[error("{name}: line {line}: {message}")]
    Format { name: String, line: usize, message: String },
    #[error("{name}: {message}")]
    Structure { name: String, message: String },
    #[error("tile set lacks a {0} tile")]
    Missing(TileKind),
    #[error("tile set has two {0} tiles")]
    Duplicate(TileKind),
    #[error("{0}")]
    Io(String),
}

impl Tile {
    pub fn cell(&self, p: Pos) -> Cell {
        self.cells[p.y * TILE + p.x]
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn sand_count(&self) -> usize {
        self.cells.iter().filter(|c| **c == Cell::Sand).count()
    }

    pub fn has_port(&self, d: Direction) -> bool {
        self.ports.contains(&d)
    }

    /// The tile file text.
    pub fn to_text(&self) -> String {
        let mut out = format!("tile {} {}\n", self.name, self.kind);
        for row in self.cells.chunks(TILE) {
            out.extend(row.iter().map(|c| c.to_char()));
            out.push('\n');
        }
        if !self.added.is_empty() {
            out.push_str("added:");
            for p in &self.added {
                write!(out, " {} {}", p.x, p.y).unwrap();
            }
            out.push('\n');
        }
        out
    }

    /// Builds a tile from cells, computing its ports and checking the
    /// structural rules for its kind.
    pub fn new(
        name: &str,
        kind: TileKind,
        cells: Vec<Cell>,
        added: Vec<Pos>,
    ) -> Result<Tile, TileError> {
        let fail = |message: String| TileError::Structure { name: name.to_string(), message };
        assert_eq!(cells.len(), TILE * TILE);
        let at = |p: Pos| cells[p.y * TILE + p.x];
        let mut ports = Vec::new();
        if kind != TileKind::StartPad {
            for p in boundary() {
                if at(p) != Cell::Rock && !added.contains(&p) && !is_port_position(p) {
                    return Err(fail(format!("boundary cell {p} is open but not a port position")));
                }
            }
            ports = Direction::ALL.into_iter().filter(|&d| at(port_cell(d)) != Cell::Rock).collect();
        }
        let count = |c: Cell| cells.iter().filter(|x| **x == c).count();
        match kind {
            TileKind::Straight => {
                if ports.len() != 2 || ports[0].opposite() != ports[1] {
                    return Err(fail(format!("straight tile needs two opposite ports, has {ports:?}")));
                }
            }
            TileKind::Corner => {
                if ports.len() != 2 || ports[0].opposite() == ports[1] {
                    return Err(fail(format!("corner tile needs two adjacent ports, has {ports:?}")));
                }
            }
            TileKind::Node | TileKind::Gateway => {
                if ports.len() != 3 {
                    return Err(fail(format!("{kind} tile needs three ports, has {ports:?}")));
                }
            }
            TileKind::StartPad => {
                if count(Cell::Walkable) != TILE * TILE {
                    return Err(fail("start pad must be all walkable".into()));
                }
            }
            TileKind::Filler => {
                if count(Cell::Rock) != TILE * TILE {
                    return Err(fail("filler must be all rock".into()));
                }
            }
        }
        if kind == TileKind::Gateway {
            if ports.contains(&Direction::U) {
                return Err(fail("gateway must have no top port".into()));
            }
            if added.len() != 2 || added[0] == added[1] {
                return Err(fail("gateway needs two distinct added cells".into()));
            }
            for &p in &added {
                if p.y != 0 || p.x >= TILE || at(p) != Cell::Sand {
                    return Err(fail(format!("added cell {p} must be top-row sand")));
                }
            }
        } else if !added.is_empty() {
            return Err(fail("only a gateway lists added cells".into()));
        }
        Ok(Tile { name: name.to_string(), kind, cells, ports, added })
    }
}

fn boundary() -> impl Iterator<Item = Pos> {
    (0..TILE * TILE)
        .map(|i| Pos::new(i % TILE, i / TILE))
        .filter(|p| p.x == 0 || p.y == 0 || p.x == TILE - 1 || p.y == TILE - 1)
}

fn is_port_position(p: Pos) -> bool {
    Direction::ALL.into_iter().any(|d| port_cell(d) == p)
}

pub fn parse_tile(text: &str) -> Result<Tile, TileError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with(';'));
    let format = |line: usize, name: &str, message: &str| TileError::Format {
        name: name.to_string(),
        line,
        message: message.to_string(),
    };
    let (hline, header) = lines.next().ok_or_else(|| format(1, "?", "empty tile file"))?;
    let words: Vec<&str> = header.split_whitespace().collect();
    if words.len() != 3 || words[0] != "tile" {
        return Err(format(hline + 1, "?", "expected 'tile <name> <kind>'"));
    }
    let name = words[1];
    let kind = TileKind::from_name(words[2])
        .ok_or_else(|| format(hline + 1, name, &format!("unknown kind {:?}", words[2])))?;
    let mut cells = Vec::with_capacity(TILE * TILE);
    for _ in 0..TILE {
        let (i, row) = lines.next().ok_or_else(|| format(hline + 1, name, "expected 7 rows"))?;
        let row = row.trim();
        if row.chars().count() != TILE {
            return Err(format(i + 1, name, "row must have 7 cells"));
        }
        for c in row.chars() {
            cells.push(
                Cell::from_char(c)
                    .ok_or_else(|| format(i + 1, name, &format!("illegal cell {c:?}")))?,
            );
        }
    }
    let mut added = Vec::new();
    for (i, line) in lines {
        let Some(rest) = line.trim().strip_prefix("added:") else {
            return Err(format(i + 1, name, "unexpected line"));
        };
        let nums: Result<Vec<usize>, _> = rest.split_whitespace().map(str::parse).collect();
        let nums = nums.map_err(|_| format(i + 1, name, "bad coordinate"))?;
        if nums.len() % 2 != 0 {
            return Err(format(i + 1, name, "odd coordinate count"));
        }
        added.extend(nums.chunks(2).map(|c| Pos::new(c[0], c[1])));
    }
    Tile::new(name, kind, cells, added)
}

/// Rotates clockwise by `quarter_turns` (taken mod 4); ports and added cells
/// follow the cells.
pub fn rotate_tile(t: &Tile, quarter_turns: u8) -> Tile {
    let q = quarter_turns % 4;
    let rot = |p: Pos| -> Pos {
        let mut p = p;
        for _ in 0..q {
            p = Pos::new(TILE - 1 - p.y, p.x);
        }
        p
    };
    let mut cells = vec![Cell::Rock; TILE * TILE];
    for (i, &c) in t.cells.iter().enumerate() {
        let to = rot(Pos::new(i % TILE, i / TILE));
        cells[to.y * TILE + to.x] = c;
    }
    let mut ports: Vec<Direction> = t.ports.iter().map(|d| d.rotate_cw(q)).collect();
    ports.sort();
    Tile {
        name: t.name.clone(),
        kind: t.kind,
        cells,
        ports,
        added: t.added.iter().map(|&p| rot(p)).collect(),
    }
}

/// The rotation of `t` whose ports are exactly `sides`.
pub fn orient(t: &Tile, sides: &[Direction]) -> Option<Tile> {
    let mut want = sides.to_vec();
    want.sort();
    (0..4).map(|q| rotate_tile(t, q)).find(|r| r.ports == want)
}

/// One canonical tile per kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TileSet {
    pub straight: Tile,
    pub corner: Tile,
    pub node: Tile,
    pub gateway: Tile,
    pub startpad: Tile,
    pub filler: Tile,
}

impl TileSet {
    pub fn get(&self, kind: TileKind) -> &Tile {
        match kind {
            TileKind::Straight => &self.straight,
            TileKind::Corner => &self.corner,
            TileKind::Node => &self.node,
            TileKind::Gateway => &self.gateway,
            TileKind::StartPad => &self.startpad,
            TileKind::Filler => &self.filler,
        }
    }

    pub fn get_mut(&mut self, kind: TileKind) -> &mut Tile {
        match kind {
            TileKind::Straight => &mut self.straight,
            TileKind::Corner => &mut self.corner,
            TileKind::Node => &mut self.node,
            TileKind::Gateway => &mut self.gateway,
            TileKind::StartPad => &mut self.startpad,
            TileKind::Filler => &mut self.filler,
        }
    }

    pub fn from_tiles(tiles: Vec<Tile>) -> Result<TileSet, TileError> {
        let mut slots: [Option<Tile>; 6] = Default::default();
        for t in tiles {
            let i = TileKind::ALL.iter().position(|k| *k == t.kind).unwrap();
            if slots[i].is_some() {
                return Err(TileError::Duplicate(t.kind));
            }
            slots[i] = Some(t);
        }
        let mut take = |k: TileKind| {
            let i = TileKind::ALL.iter().position(|x| *x == k).unwrap();
            slots[i].take().ok_or(TileError::Missing(k))
        };
        let ts = TileSet {
            straight: take(TileKind::Straight)?,
            corner: take(TileKind::Corner)?,
            node: take(TileKind::Node)?,
            gateway: take(TileKind::Gateway)?,
            startpad: take(TileKind::StartPad)?,
            filler: take(TileKind::Filler)?,
        };
        let diff = gateway_diff(&ts);
        let expected: BTreeSet<Pos> = ts.gateway.added.iter().copied().collect();
        let changed: BTreeSet<Pos> = diff.iter().map(|d| d.0).collect();
        if changed != expected || diff.iter().any(|d| d.1 != Cell::Rock || d.2 != Cell::Sand) {
            return Err(TileError::Structure {
                name: ts.gateway.name.clone(),
                message: "gateway must equal the node tile except for its added cells".into(),
            });
        }
        Ok(ts)
    }

    pub fn from_texts(texts: &[&str]) -> Result<TileSet, TileError> {
        TileSet::from_tiles(texts.iter().map(|t| parse_tile(t)).collect::<Result<_, _>>()?)
    }
}

/// Cells where the gateway differs from the node tile turned so its missing
/// side is on top: `(cell, node value, gateway value)`.
pub fn gateway_diff(ts: &TileSet) -> Vec<(Pos, Cell, Cell)> {
    let Some(node) = orient(&ts.node, &ts.gateway.ports) else {
        return boundary().map(|p| (p, Cell::Rock, Cell::Rock)).collect();
    };
    (0..TILE * TILE)
        .map(|i| Pos::new(i % TILE, i / TILE))
        .filter(|&p| node.cell(p) != ts.gateway.cell(p))
        .map(|p| (p, node.cell(p), ts.gateway.cell(p)))
        .collect()
}

/// Reads every `*.tile` file in `dir`.
pub fn load_tileset(dir: &Path) -> Result<TileSet, TileError> {
    let io = |e: std::io::Error| TileError::Io(format!("{}: {e}", dir.display()));
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(io)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "tile"))
        .collect();
    paths.sort();
    let texts: Vec<String> = paths
        .iter()
        .map(|p| std::fs::read_to_string(p).map_err(io))
        .collect::<Result<_, _>>()?;
    TileSet::from_texts(&texts.iter().map(String::as_str).collect::<Vec<_>>())
}

pub const BUILTIN_TILES: [&str; 6] = [
    include_str!("../data/tiles/straight.tile"),
    include_str!("../data/tiles/corner.tile"),
    include_str!("../data/tiles/node.tile"),
    include_str!("../data/tiles/gateway.tile"),
    include_str!("../data/tiles/startpad.tile"),
    include_str!("../data/tiles/filler.tile"),
];

/// The tile set shipped in `data/tiles`.
pub fn builtin_tileset() -> TileSet {
    TileSet::from_texts(&BUILTIN_TILES).expect("builtin tiles are well formed")
}

// ---------------------------------------------------------------- verifier

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetCase {
    pub label: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct GadgetReport {
    pub kind: TileKind,
    pub tile: String,
    pub harness: &'static str,
    pub cases: Vec<GadgetCase>,
    pub elapsed: Duration,
}

impl GadgetReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.ok)
    }

    /// Counts `(satisfied, total)` over cases whose label starts with `prefix`.
    pub fn tally(&self, prefix: &str) -> (usize, usize) {
        let cases: Vec<_> = self.cases.iter().filter(|c| c.label.starts_with(prefix)).collect();
        (cases.iter().filter(|c| c.ok).count(), cases.len())
    }
}

impl fmt::Display for GadgetReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ok = self.cases.iter().filter(|c| c.ok).count();
        writeln!(
            f,
            "{} ({}): {}/{} cases {}",
            self.kind,
            self.tile,
            ok,
            self.cases.len(),
            if self.passed() { "PASS" } else { "FAIL" }
        )?;
        writeln!(f, "  harness: {}", self.harness)?;
        for c in &self.cases {
            writeln!(f, "  [{}] {}: {}", if c.ok { "ok" } else { "FAIL" }, c.label, c.detail)?;
        }
        Ok(())
    }
}

const EDGE_HARNESS: &str = "tile at (3,3) of a 13x13 rock frame; each port extended by a 2-cell walkable apron; \
                            monk starts at the outer end of the entry apron";
const NODE_HARNESS: &str = "tile at (4,1) of a 15x13 rock frame; each port extended by a 2-cell walkable apron; \
                            positive cases keep aprons separate, the exclusivity check joins all aprons by a walkable U-loop around the tile";
const GATEWAY_HARNESS: &str = "all-walkable start pad above the gateway in a 15x20 rock frame, monk at the pad centre; \
                               ports extended by walkable aprons, looped back externally in pairs or all three; \
                               one sand cell on the loop stands in for the rest of the circuit";
const PLAIN_HARNESS: &str = "structural check only";

/// A rock canvas being painted into a harness garden.
struct Canvas {
    w: usize,
    h: usize,
    cells: Vec<Cell>,
}

impl Canvas {
    fn new(w: usize, h: usize) -> Canvas {
        Canvas { w, h, cells: vec![Cell::Rock; w * h] }
    }

    fn blit(&mut self, t: &Tile, ox: usize, oy: usize) {
        for y in 0..TILE {
            for x in 0..TILE {
                self.cells[(oy + y) * self.w + ox + x] = t.cell(Pos::new(x, y));
            }
        }
    }

    fn walk(&mut self, p: Pos) {
        self.cells[p.y * self.w + p.x] = Cell::Walkable;
    }

    fn sand(&mut self, p: Pos) {
        self.cells[p.y * self.w + p.x] = Cell::Sand;
    }

    fn garden(&self, monk: Pos) -> Garden {
        Garden::new(self.w, self.h, self.cells.clone(), monk).expect("harness monk on walkable")
    }
}

fn offset(p: Pos, d: Direction, k: usize) -> Pos {
    let (dx, dy) = d.offset();
    Pos::new(
        p.x.wrapping_add_signed(dx * k as isize),
        p.y.wrapping_add_signed(dy * k as isize),
    )
}

fn config() -> SolverConfig {
    SolverConfig { max_states: 2_000_000, ..SolverConfig::default() }
}

fn verify_edge_tile(t: &Tile) -> Vec<GadgetCase> {
    let origin = Pos::new(3, 3);
    let mut canvas = Canvas::new(13, 13);
    canvas.blit(t, 3, 3);
    let apron = |d: Direction, k: usize| {
        let p = port_cell(d);
        offset(Pos::new(origin.x + p.x, origin.y + p.y), d, k)
    };
    for &d in &t.ports {
        canvas.walk(apron(d, 1));
        canvas.walk(apron(d, 2));
    }
    let mut cases = Vec::new();
    for &p in &t.ports {
        for &q in &t.ports {
            if p == q {
                continue;
            }
            let g = canvas.garden(apron(p, 2));
            let r = solve_from(&g, &config(), &g.initial_state(), &Goal::CoverAllAt(vec![apron(q, 2)]));
            cases.push(GadgetCase {
                label: format!("traverse {p}->{q}"),
                ok: matches!(r.verdict, Verdict::Solvable(_)),
                detail: format!("{} ({} sand)", r.verdict_line(), t.sand_count()),
            });
        }
    }
    cases
}

/// Harness geometry shared by node and gateway checks.
struct NodeFrame {
    canvas: Canvas,
    origin: Pos,
    pad_centre: Option<Pos>,
}

const NODE_PORTS: [Direction; 3] = [Direction::R, Direction::D, Direction::L];

impl NodeFrame {
    /// `joined` ports get aprons reaching a walkable U-loop; the others get
    /// short dead-end aprons. A `token` sand cell on the loop forces a trip
    /// around it.
    fn new(t: &Tile, pad: Option<&Tile>, joined: &[Direction], token: bool) -> NodeFrame {
        let gy = if pad.is_some() { 8 } else { 1 };
        let origin = Pos::new(4, gy);
        let mut canvas = Canvas::new(15, gy + TILE + 5);
        canvas.blit(t, origin.x, origin.y);
        let mut pad_centre = None;
        if let Some(p) = pad {
            canvas.blit(p, origin.x, origin.y - TILE);
            pad_centre = Some(Pos::new(origin.x + 3, origin.y - TILE + 3));
        }
        let reach = |d: Direction| if d == Direction::D { 4 } else { 3 };
        for d in NODE_PORTS {
            let k_max = if joined.contains(&d) { reach(d) } else { 2 };
            for k in 1..=k_max {
                canvas.walk(Self::port_at(origin, d, k));
            }
        }
        if joined.len() >= 2 {
            let (bottom, left, right) = (origin.y + 9, 1, 13);
            let has = |d| joined.contains(&d);
            let lo = if has(Direction::L) { left } else { origin.x + 3 };
            let hi = if has(Direction::R) { right } else { origin.x + 3 };
            for x in lo..=hi {
                canvas.walk(Pos::new(x, bottom));
            }
            for (d, x) in [(Direction::L, left), (Direction::R, right)] {
                if has(d) {
                    for y in origin.y + 3..=bottom {
                        canvas.walk(Pos::new(x, y));
                    }
                }
            }
            if token {
                canvas.sand(Pos::new(if has(Direction::L) { left + 1 } else { right - 1 }, bottom));
            }
        }
        NodeFrame { canvas, origin, pad_centre }
    }

    fn port_at(origin: Pos, d: Direction, k: usize) -> Pos {
        let p = port_cell(d);
        offset(Pos::new(origin.x + p.x, origin.y + p.y), d, k)
    }

    fn apron(&self, d: Direction) -> Pos {
        Self::port_at(self.origin, d, 2)
    }

    fn inside_tile(&self, p: Pos) -> bool {
        (self.origin.x..self.origin.x + TILE).contains(&p.x)
            && (self.origin.y..self.origin.y + TILE).contains(&p.y)
    }
}

fn verify_node(t: &Tile) -> Vec<GadgetCase> {
    let mut cases = Vec::new();
    let Some(t) = orient(t, &NODE_PORTS) else {
        return vec![GadgetCase { label: "ports".into(), ok: false, detail: "not three ports".into() }];
    };
    let isolated = NodeFrame::new(&t, None, &[], false);
    for p in NODE_PORTS {
        for q in NODE_PORTS {
            if p == q {
                continue;
            }
            let g = isolated.canvas.garden(isolated.apron(p));
            let r = solve_from(&g, &config(), &g.initial_state(), &Goal::CoverAllAt(vec![isolated.apron(q)]));
            let ok = matches!(r.verdict, Verdict::Solvable(_));
            cases.push(GadgetCase {
                label: format!("cover {p}->{q}"),
                ok,
                detail: format!("{} states={}", r.verdict_line(), r.stats.states_expanded),
            });
        }
    }
    let looped = NodeFrame::new(&t, None, &NODE_PORTS, false);
    for p in NODE_PORTS {
        let g = looped.canvas.garden(looped.apron(p));
        let goal = Goal::CoverAllAt(vec![looped.apron(p)]);
        let e = enumerate_from(&g, &config(), &g.initial_state(), &goal, None);
        let mut partial = 0;
        for moves in &e.solutions {
            let (_, traces) = g.replay_traced(moves).expect("enumerated solution replays");
            let mut covered = 0;
            for tr in &traces[..traces.len().saturating_sub(1)] {
                covered += tr.covered_cells.len();
                if covered > 0 && covered < g.sand_count() && !looped.inside_tile(tr.end) {
                    partial += 1;
                    break;
                }
            }
        }
        cases.push(GadgetCase {
            label: format!("exclusive from {p}"),
            ok: e.complete && partial == 0,
            detail: format!(
                "{} traversals enumerated{}, {} leave the tile with sand uncovered and still finish",
                e.solutions.len(),
                if e.complete { "" } else { " (incomplete)" },
                partial
            ),
        });
    }
    cases
}

fn verify_gateway(t: &Tile, pad: &Tile) -> Vec<GadgetCase> {
    let mut cases = Vec::new();
    if t.ports != [Direction::R, Direction::D, Direction::L] {
        return vec![GadgetCase { label: "ports".into(), ok: false, detail: format!("{:?}", t.ports) }];
    }
    let tile_added = |f: &NodeFrame| -> Vec<Pos> {
        t.added.iter().map(|p| Pos::new(f.origin.x + p.x, f.origin.y + p.y)).collect()
    };
    let full = NodeFrame::new(t, Some(pad), &NODE_PORTS, true);
    let centre = full.pad_centre.unwrap();
    let g = full.canvas.garden(centre);
    let e = enumerate_from(&g, &config(), &g.initial_state(), &Goal::CoverAllAt(vec![centre]), None);
    let added = tile_added(&full);
    let mut bad = 0;
    for moves in &e.solutions {
        let (_, traces) = g.replay_traced(moves).expect("enumerated solution replays");
        let covered: Vec<Pos> = traces
            .iter()
            .filter(|t| t.kind == MoveKind::Slide)
            .flat_map(|t| t.covered_cells.iter().copied())
            .collect();
        let (first, last) = (covered.first(), covered.last());
        let ok = matches!((first, last), (Some(a), Some(b)) if a != b && added.contains(a) && added.contains(b));
        if !ok {
            bad += 1;
        }
    }
    cases.push(GadgetCase {
        label: "first/last covered".into(),
        ok: e.complete && !e.solutions.is_empty() && bad == 0,
        detail: format!(
            "{} solutions enumerated{}, {} violate first/last-covered in {{{}, {}}}",
            e.solutions.len(),
            if e.complete { "" } else { " (incomplete)" },
            bad,
            t.added[0],
            t.added[1]
        ),
    });
    for (i, &x) in NODE_PORTS.iter().enumerate() {
        for &y in &NODE_PORTS[i + 1..] {
            let f = NodeFrame::new(t, Some(pad), &[x, y], true);
            let centre = f.pad_centre.unwrap();
            let g = f.canvas.garden(centre);
            let r = solve_from(&g, &config(), &g.initial_state(), &Goal::CoverAllAt(vec![centre]));
            cases.push(GadgetCase {
                label: format!("tour via {x},{y}"),
                ok: matches!(r.verdict, Verdict::Solvable(_)),
                detail: format!("{} states={}", r.verdict_line(), r.stats.states_expanded),
            });
        }
    }
    cases
}

/// Checks the contract of one tile kind in harness gardens.
pub fn verify_gadget(ts: &TileSet, kind: TileKind) -> GadgetReport {
    let started = Instant::now();
    let t = ts.get(kind);
    let (harness, cases) = match kind {
        TileKind::Straight | TileKind::Corner => (EDGE_HARNESS, verify_edge_tile(t)),
        TileKind::Node => (NODE_HARNESS, verify_node(t)),
        TileKind::Gateway => (GATEWAY_HARNESS, verify_gateway(t, &ts.startpad)),
        TileKind::StartPad | TileKind::Filler => (
            PLAIN_HARNESS,
            vec![GadgetCase { label: "structure".into(), ok: true, detail: "checked at load".into() }],
        ),
    };
    GadgetReport { kind, tile: t.name.clone(), harness, cases, elapsed: started.elapsed() }
}

pub fn verify_tileset(ts: &TileSet) -> Vec<GadgetReport> {
    TileKind::ALL.into_iter().map(|k| verify_gadget(ts, k)).collect()
}

// ---------------------------------------------------------------- compiler

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    NodeTile(usize),
    /// Edge `(u,v)` as stored in the drawing, `index` cells from `u`.
    EdgeTile { u: usize, v: usize, index: usize },
    StartPad,
    Gateway(usize),
    Filler,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::NodeTile(v) => write!(f, "N{v}"),
            Provenance::EdgeTile { u, v, index } => write!(f, "E{u}-{v}.{index}"),
            Provenance::StartPad => f.write_str("P"),
            Provenance::Gateway(v) => write!(f, "G{v}"),
            Provenance::Filler => f.write_str("."),
        }
    }
}

impl Provenance {
    pub fn parse(s: &str) -> Option<Provenance> {
        let num = |t: &str| t.parse::<usize>().ok();
        match s {
            "P" => Some(Provenance::StartPad),
            "." => Some(Provenance::Filler),
            _ => match s.split_at(1) {
                ("N", v) => num(v).map(Provenance::NodeTile),
                ("G", v) => num(v).map(Provenance::Gateway),
                ("E", rest) => {
                    let (ends, index) = rest.split_once('.')?;
                    let (u, v) = ends.split_once('-')?;
                    Some(Provenance::EdgeTile { u: num(u)?, v: num(v)?, index: num(index)? })
                }
                _ => None,
            },
        }
    }
}

/// Provenance of every drawing cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TileMap {
    pub width: usize,
    pub height: usize,
    pub tags: Vec<Provenance>,
}

impl TileMap {
    pub fn tag(&self, x: usize, y: usize) -> &Provenance {
        &self.tags[y * self.width + x]
    }

    /// Tag of the tile containing garden cell `p`.
    pub fn tag_of_cell(&self, p: Pos) -> &Provenance {
        self.tag(p.x / TILE, p.y / TILE)
    }

    pub fn position_of(&self, tag: &Provenance) -> Option<(usize, usize)> {
        let i = self.tags.iter().position(|t| t == tag)?;
        Some((i % self.width, i / self.width))
    }

    /// `tilemap <W> <H>` then one row of space-separated tags per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("tilemap {} {}\n", self.width, self.height);
        for row in self.tags.chunks(self.width) {
            let words: Vec<String> = row.iter().map(|t| t.to_string()).collect();
            out.push_str(&words.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Option<TileMap> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header: Vec<&str> = lines.next()?.split_whitespace().collect();
        if header.len() != 3 || header[0] != "tilemap" {
            return None;
        }
        let (width, height) = (header[1].parse().ok()?, header[2].parse().ok()?);
        let tags: Option<Vec<Provenance>> =
            lines.flat_map(|l| l.split_whitespace()).map(Provenance::parse).collect();
        let tags = tags?;
        (tags.len() == width * height).then_some(TileMap { width, height, tags })
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CompileError {
    #[error("graph is not cubic: {0:?}")]
    NotCubic(Vec<DegreeViolation>),
    #[error("invalid drawing: {}", list(.0))]
    Drawing(Vec<Violation>),
    #[error("no rotation of the {kind} tile has ports {sides:?} (drawing cell ({x},{y}))")]
    PortMismatch { kind: TileKind, sides: Vec<Direction>, x: usize, y: usize },
}

fn list<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(|i| i.to_string()).collect::<Vec<_>>().join("; ")
}

/// Compiles a validated drawing of a cubic graph into a garden of
/// `7W × 7H` cells.
pub fn compile(g: &Graph, d: &GridDrawing, ts: &TileSet) -> Result<(Garden, TileMap), CompileError> {
    validate_cubic(g).map_err(CompileError::NotCubic)?;
    validate_drawing(g, d).map_err(CompileError::Drawing)?;
    let (w, h) = (d.width * TILE, d.height * TILE);
    let mut canvas = Canvas::new(w, h);
    let mut tags = Vec::with_capacity(d.width * d.height);
    let uses = d.cell_uses();
    for (i, u) in uses.iter().enumerate() {
        let (x, y) = (i % d.width, i / d.width);
        let mismatch = |kind, sides: &[Direction]| CompileError::PortMismatch {
            kind,
            sides: sides.to_vec(),
            x,
            y,
        };
        let (tile, tag) = match u {
            CellUse::Empty => (ts.filler.clone(), Provenance::Filler),
            CellUse::Pad => (ts.startpad.clone(), Provenance::StartPad),
            CellUse::Path { edge, index, sides } => {
                let e = &d.edges[*edge];
                let kind = if sides[0].opposite() == sides[1] { TileKind::Straight } else { TileKind::Corner };
                let t = orient(ts.get(kind), sides).ok_or_else(|| mismatch(kind, sides))?;
                (t, Provenance::EdgeTile { u: e.u, v: e.v, index: *index })
            }
            CellUse::Node(v) => {
                let sides: Vec<Direction> = d.attachments(*v).into_iter().map(|a| a.0).collect();
                if *v == d.start {
                    let t = orient(&ts.gateway, &sides).filter(|t| t.added.iter().all(|p| p.y == 0));
                    (t.ok_or_else(|| mismatch(TileKind::Gateway, &sides))?, Provenance::Gateway(*v))
                } else {
                    let t = orient(&ts.node, &sides).ok_or_else(|| mismatch(TileKind::Node, &sides))?;
                    (t, Provenance::NodeTile(*v))
                }
            }
        };
        canvas.blit(&tile, x * TILE, y * TILE);
        tags.push(tag);
    }
    let pad = d.pad_cell().expect("validated start");
    let monk = Pos::new(pad.x * TILE + 3, pad.y * TILE + 3);
    let garden = canvas.garden(monk);
    Ok((garden, TileMap { width: d.width, height: d.height, tags }))
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtractError {
    #[error("move {index} ({direction}) is illegal")]
    Illegal { index: usize, direction: Direction },
    #[error("moves do not solve the garden")]
    NotSolved,
    #[error("node visitation order {0} is not a Hamiltonian circuit")]
    NotHamiltonian(Circuit),
}

/// Replays a solution and reads off the order in which node tiles are first
/// entered. The start node comes first.
pub fn extract_circuit(
    tm: &TileMap,
    g: &Graph,
    moves: &[Direction],
    garden: &Garden,
) -> Result<Circuit, ExtractError> {
    let (state, traces) = garden.replay_traced(moves).map_err(|e| match e {
        crate::garden::ReplayError::IllegalMoveAt { index, direction } => {
            ExtractError::Illegal { index, direction }
        }
    })?;
    if !garden.is_solved(&state, crate::garden::EndRule::Strict) {
        return Err(ExtractError::NotSolved);
    }
    let mut order = Vec::new();
    for p in traces.iter().flat_map(|t| t.covered_cells.iter()) {
        if let Provenance::NodeTile(v) | Provenance::Gateway(v) = tm.tag_of_cell(*p) {
            if !order.contains(v) {
                order.push(*v);
            }
        }
    }
    let c = Circuit(order);
    if verify_circuit(g, &c) {
        Ok(c)
    } else {
        Err(ExtractError::NotHamiltonian(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_tiles_load() {
        let ts = builtin_tileset();
        assert_eq!(ts.node.ports, vec![Direction::R, Direction::D, Direction::L]);
        assert_eq!(ts.straight.ports, vec![Direction::U, Direction::D]);
        assert_eq!(gateway_diff(&ts).len(), 2);
    }

    #[test]
    fn rotation() {
        let ts = builtin_tileset();
        for t in [&ts.straight, &ts.corner, &ts.node, &ts.gateway] {
            assert_eq!(&rotate_tile(t, 0), t);
            assert_eq!(&rotate_tile(t, 4), t);
            assert_eq!(&rotate_tile(&rotate_tile(t, 3), 1), t);
        }
        assert_eq!(rotate_tile(&ts.straight, 1).ports, vec![Direction::R, Direction::L]);
        assert_eq!(rotate_tile(&ts.corner, 1).ports, vec![Direction::R, Direction::D]);
        let g = rotate_tile(&ts.gateway, 1);
        assert_eq!(g.added, vec![Pos::new(6, 2), Pos::new(6, 4)]);
    }

    #[test]
    fn tile_format_errors() {
        assert!(matches!(parse_tile("tile x bogus\n"), Err(TileError::Format { .. })));
        let short = "tile s straight\n###_###\n";
        assert!(matches!(parse_tile(short), Err(TileError::Format { .. })));
        let off_port = "tile s straight\n##_####\n##_####\n##_####\n##_####\n##_####\n##_####\n##_####\n";
        assert!(matches!(parse_tile(off_port), Err(TileError::Structure { .. })));
        let t = parse_tile(BUILTIN_TILES[3]).unwrap();
        assert_eq!(parse_tile(&t.to_text()).unwrap(), t);
    }

    #[test]
    fn provenance_round_trip() {
        for t in [
            Provenance::NodeTile(3),
            Provenance::EdgeTile { u: 1, v: 12, index: 4 },
            Provenance::StartPad,
            Provenance::Gateway(1),
            Provenance::Filler,
        ] {
            assert_eq!(Provenance::parse(&t.to_string()), Some(t));
        }
    }
}
