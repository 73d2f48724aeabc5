//! Garden representation, text formats and the movement rules.
//!
//! The monk walks freely (4-directionally) on walkable squares. Stepping
//! onto uncovered sand starts a slide that continues in a straight line,
//! covering every sand square entered, until the next square is walkable
//! (the monk steps onto it and stops) or is rock, covered sand or outside
//! the garden (the monk stops on the last sand square entered).

use std::fmt;

use thiserror::Error;

use crate::sandset::SandSet;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Cell {
    Rock,
    Sand,
    Walkable,
}

impl Cell {
    pub fn to_char(self) -> char {
        match self {
            Cell::Rock => '#',
            Cell::Sand => '.',
            Cell::Walkable => '_',
        }
    }

    pub fn from_char(c: char) -> Option<Cell> {
        match c {
            '#' => Some(Cell::Rock),
            '.' => Some(Cell::Sand),
            '_' => Some(Cell::Walkable),
            _ => None,
        }
    }
}

/// A garden coordinate: column `x`, row `y`, origin top-left.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pos {
    pub x: usize,
    pub y: usize,
}

impl Pos {
    pub const fn new(x: usize, y: usize) -> Pos {
        Pos { x, y }
    }
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    U,
    R,
    D,
    L,
}

impl Direction {
    /// Canonical expansion order.
    pub const ALL: [Direction; 4] = [Direction::U, Direction::R, Direction::D, Direction::L];

    pub fn offset(self) -> (isize, isize) {
        match self {
            Direction::U => (0, -1),
            Direction::R => (1, 0),
            Direction::D => (0, 1),
            Direction::L => (-1, 0),
        }
    }

    pub fn opposite(self) -> Direction {
        match self {
            Direction::U => Direction::D,
            Direction::R => Direction::L,
            Direction::D => Direction::U,
            Direction::L => Direction::R,
        }
    }

    /// Rotate clockwise by a number of quarter turns.
    pub fn rotate_cw(self, quarter_turns: u8) -> Direction {
        Direction::ALL[(self.index() + quarter_turns as usize) % 4]
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn to_char(self) -> char {
        match self {
            Direction::U => 'U',
            Direction::R => 'R',
            Direction::D => 'D',
            Direction::L => 'L',
        }
    }

    pub fn from_char(c: char) -> Option<Direction> {
        match c {
            'U' => Some(Direction::U),
            'R' => Some(Direction::R),
            'D' => Some(Direction::D),
            'L' => Some(Direction::L),
            _ => None,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// Formats a move list as a solution line (`RDLU...`).
pub fn format_moves(moves: &[Direction]) -> String {
    moves.iter().map(|d| d.to_char()).collect()
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("invalid move character {found:?} at offset {offset}")]
pub struct MovesParseError {
    pub offset: usize,
    pub found: char,
}

/// Parses a solution file: a single line over `U R D L`, whitespace ignored.
pub fn parse_moves(text: &str) -> Result<Vec<Direction>, MovesParseError> {
    text.char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .map(|(offset, c)| Direction::from_char(c).ok_or(MovesParseError { offset, found: c }))
        .collect()
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Default)]
pub enum EndRule {
    /// All sand covered and the monk standing on a walkable square.
    #[default]
    Strict,
    /// All sand covered.
    CoveredOnly,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("empty garden")]
    Empty,
    #[error("row has length {found}, expected {expected}")]
    RaggedRow { expected: usize, found: usize },
    #[error("illegal character {0:?}")]
    IllegalChar(char),
    #[error("no monk ('M') in garden")]
    NoMonk,
    #[error("more than one monk ('M') in garden")]
    MultipleMonks,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    /// 1-based line in the input text.
    pub line: usize,
    /// 1-based column in the input text.
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GardenError {
    #[error("garden dimensions must be positive")]
    EmptyDimensions,
    #[error("cell count {found} does not match {width}x{height}")]
    CellCount { width: usize, height: usize, found: usize },
    #[error("monk start {0} is out of bounds")]
    MonkOutOfBounds(Pos),
    #[error("monk start {0} is not walkable")]
    MonkNotWalkable(Pos),
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum MoveError {
    #[error("illegal move {direction} from {from}")]
    IllegalMove { from: Pos, direction: Direction },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReplayError {
    #[error("illegal move {direction} at index {index}")]
    IllegalMoveAt { index: usize, direction: Direction },
}

/// An immutable garden with a precomputed row-major sand enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Garden {
    width: usize,
    height: usize,
    cells: Vec<Cell>,
    monk_start: Pos,
    sand_index: Vec<u32>,
    sand_cells: Vec<Pos>,
}

const NO_SAND: u32 = u32::MAX;

impl Garden {
    pub fn new(
        width: usize,
        height: usize,
        cells: Vec<Cell>,
        monk_start: Pos,
    ) -> Result<Garden, GardenError> {
        if width == 0 || height == 0 {
            return Err(GardenError::EmptyDimensions);
        }
        if cells.len() != width * height {
            return Err(GardenError::CellCount { width, height, found: cells.len() });
        }
        if monk_start.x >= width || monk_start.y >= height {
            return Err(GardenError::MonkOutOfBounds(monk_start));
        }
        if cells[monk_start.y * width + monk_start.x] != Cell::Walkable {
            return Err(GardenError::MonkNotWalkable(monk_start));
        }
        let mut sand_index = vec![NO_SAND; cells.len()];
        let mut sand_cells = Vec::new();
        for (i, cell) in cells.iter().enumerate() {
            if *cell == Cell::Sand {
                sand_index[i] = sand_cells.len() as u32;
                sand_cells.push(Pos::new(i % width, i / width));
            }
        }
        Ok(Garden { width, height, cells, monk_start, sand_index, sand_cells })
    }

    /// Builds a garden from rows of `Cell`s.
    pub fn from_rows(rows: &[Vec<Cell>], monk_start: Pos) -> Result<Garden, GardenError> {
        let width = rows.first().map_or(0, |r| r.len());
        let cells: Vec<Cell> = rows.iter().flatten().copied().collect();
        Garden::new(width, rows.len(), cells, monk_start)
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn monk_start(&self) -> Pos {
        self.monk_start
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn cell(&self, p: Pos) -> Cell {
        self.cells[self.index(p)]
    }

    pub fn index(&self, p: Pos) -> usize {
        p.y * self.width + p.x
    }

    pub fn pos_of(&self, index: usize) -> Pos {
        Pos::new(index % self.width, index / self.width)
    }

    pub fn sand_count(&self) -> usize {
        self.sand_cells.len()
    }

    /// Sand cells in row-major order; position `i` is bit `i` of a covered set.
    pub fn sand_cells(&self) -> &[Pos] {
        &self.sand_cells
    }

    pub fn sand_id(&self, p: Pos) -> Option<usize> {
        match self.sand_index[self.index(p)] {
            NO_SAND => None,
            id => Some(id as usize),
        }
    }

    /// The neighbour of `p` in direction `d`, or `None` outside the garden.
    pub fn step(&self, p: Pos, d: Direction) -> Option<Pos> {
        let (dx, dy) = d.offset();
        let x = p.x.checked_add_signed(dx)?;
        let y = p.y.checked_add_signed(dy)?;
        (x < self.width && y < self.height).then_some(Pos::new(x, y))
    }

    pub fn initial_state(&self) -> GameState {
        GameState { monk: self.monk_start, covered: SandSet::new(self.sand_count()) }
    }

    fn is_open(&self, s: &GameState, p: Pos) -> bool {
        match self.cell(p) {
            Cell::Rock => false,
            Cell::Walkable => true,
            Cell::Sand => !s.covered.contains(self.sand_id(p).unwrap()),
        }
    }

    /// Directions whose target is in bounds and is walkable or uncovered sand,
    /// in canonical order.
    pub fn legal_moves(&self, s: &GameState) -> Vec<Direction> {
        Direction::ALL
            .into_iter()
            .filter(|&d| self.step(s.monk, d).is_some_and(|t| self.is_open(s, t)))
            .collect()
    }

    pub fn apply_move(
        &self,
        s: &GameState,
        d: Direction,
    ) -> Result<(GameState, MoveTrace), MoveError> {
        let illegal = MoveError::IllegalMove { from: s.monk, direction: d };
        let target = self.step(s.monk, d).ok_or(illegal.clone())?;
        match self.cell(target) {
            Cell::Rock => Err(illegal),
            Cell::Walkable => Ok((
                GameState { monk: target, covered: s.covered.clone() },
                MoveTrace {
                    direction: d,
                    kind: MoveKind::WalkStep,
                    covered_cells: Vec::new(),
                    end: target,
                    end_terrain: Cell::Walkable,
                },
            )),
            Cell::Sand => {
                if s.covered.contains(self.sand_id(target).unwrap()) {
                    return Err(illegal);
                }
                let mut covered = s.covered.clone();
                let mut trail = Vec::new();
                let mut here = target;
                let mut end_terrain = Cell::Sand;
                loop {
                    covered.insert(self.sand_id(here).unwrap());
                    trail.push(here);
                    let Some(next) = self.step(here, d) else { break };
                    match self.cell(next) {
                        Cell::Walkable => {
                            here = next;
                            end_terrain = Cell::Walkable;
                            break;
                        }
                        Cell::Sand if !covered.contains(self.sand_id(next).unwrap()) => here = next,
                        _ => break,
                    }
                }
                Ok((
                    GameState { monk: here, covered },
                    MoveTrace {
                        direction: d,
                        kind: MoveKind::Slide,
                        covered_cells: trail,
                        end: here,
                        end_terrain,
                    },
                ))
            }
        }
    }

    pub fn is_solved(&self, s: &GameState, rule: EndRule) -> bool {
        let all_covered = s.covered.len() == self.sand_count();
        match rule {
            EndRule::CoveredOnly => all_covered,
            EndRule::Strict => all_covered && self.cell(s.monk) == Cell::Walkable,
        }
    }

    /// Applies `moves` in order, failing on the first illegal one.
    pub fn replay(
        &self,
        moves: &[Direction],
        rule: EndRule,
    ) -> Result<(GameState, bool), ReplayError> {
        let (state, _) = self.replay_traced(moves)?;
        let solved = self.is_solved(&state, rule);
        Ok((state, solved))
    }

    /// Like [`Garden::replay`], also returning the per-move traces.
    pub fn replay_traced(
        &self,
        moves: &[Direction],
    ) -> Result<(GameState, Vec<MoveTrace>), ReplayError> {
        let mut state = self.initial_state();
        let mut traces = Vec::with_capacity(moves.len());
        for (index, &direction) in moves.iter().enumerate() {
            let (next, trace) = self
                .apply_move(&state, direction)
                .map_err(|_| ReplayError::IllegalMoveAt { index, direction })?;
            state = next;
            traces.push(trace);
        }
        Ok((state, traces))
    }

    /// 4-connected components of walkable cells, numbered in row-major order
    /// of their first cell.
    pub fn walkable_regions(&self) -> Regions {
        let mut region_of = vec![None; self.cells.len()];
        let mut regions: Vec<Vec<Pos>> = Vec::new();
        for start in 0..self.cells.len() {
            if self.cells[start] != Cell::Walkable || region_of[start].is_some() {
                continue;
            }
            let id = regions.len() as u32;
            let mut members = Vec::new();
            let mut stack = vec![start];
            region_of[start] = Some(id);
            while let Some(i) = stack.pop() {
                let p = self.pos_of(i);
                members.push(p);
                for d in Direction::ALL {
                    if let Some(n) = self.step(p, d) {
                        let ni = self.index(n);
                        if self.cells[ni] == Cell::Walkable && region_of[ni].is_none() {
                            region_of[ni] = Some(id);
                            stack.push(ni);
                        }
                    }
                }
            }
            members.sort_by_key(|p| (p.y, p.x));
            regions.push(members);
        }
        Regions { region_of, regions }
    }

    /// Renders the garden (and optionally a state) in the text alphabet.
    pub fn render_text(&self, state: Option<&GameState>) -> String {
        let mut out = String::with_capacity((self.width + 1) * self.height);
        for y in 0..self.height {
            for x in 0..self.width {
                let p = Pos::new(x, y);
                let cell = self.cell(p);
                let covered = state.is_some_and(|s| {
                    self.sand_id(p).is_some_and(|id| s.covered.contains(id))
                });
                let monk_here = state.map_or(self.monk_start, |s| s.monk) == p;
                let c = match (cell, covered, monk_here) {
                    (Cell::Walkable, _, true) => 'M',
                    (Cell::Sand, true, true) => '@',
                    (Cell::Sand, true, false) => 'o',
                    (cell, _, _) => cell.to_char(),
                };
                out.push(c);
            }
            out.push('\n');
        }
        out
    }

    /// SVG with one `<rect>` per cell. Palette: rock `#808080`, sand
    /// `#ffffff`, covered sand `#e8d8a8`, walkable `#6fa8dc`; the monk is a
    /// `#000000` circle.
    pub fn render_svg(&self, state: Option<&GameState>) -> String {
        const SCALE: usize = 16;
        let mut out = format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\">\n",
            self.width * SCALE,
            self.height * SCALE
        );
        for y in 0..self.height {
            for x in 0..self.width {
                let p = Pos::new(x, y);
                let covered = state.is_some_and(|s| {
                    self.sand_id(p).is_some_and(|id| s.covered.contains(id))
                });
                let fill = match (self.cell(p), covered) {
                    (Cell::Rock, _) => "#808080",
                    (Cell::Sand, false) => "#ffffff",
                    (Cell::Sand, true) => "#e8d8a8",
                    (Cell::Walkable, _) => "#6fa8dc",
                };
                out.push_str(&format!(
                    "<rect x=\"{}\" y=\"{}\" width=\"{SCALE}\" height=\"{SCALE}\" fill=\"{fill}\"/>\n",
                    x * SCALE,
                    y * SCALE
                ));
            }
        }
        let monk = state.map_or(self.monk_start, |s| s.monk);
        out.push_str(&format!(
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#000000\"/>\n",
            monk.x * SCALE + SCALE / 2,
            monk.y * SCALE + SCALE / 2,
            SCALE / 3
        ));
        out.push_str("</svg>\n");
        out
    }
}

impl fmt::Display for Garden {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text(None))
    }
}

/// Parses the garden file format.
pub fn parse_garden(text: &str) -> Result<Garden, ParseError> {
    let mut rows: Vec<Vec<Cell>> = Vec::new();
    let mut monk: Option<Pos> = None;
    let mut last_line = 0;
    let lines: Vec<&str> = text.split('\n').collect();
    let line_count = lines.len();
    for (line_no, line) in lines.into_iter().enumerate() {
        let line_no = line_no + 1;
        if line.starts_with(';') {
            continue;
        }
        // A final empty segment is the optional trailing newline.
        if line.is_empty() && line_no == line_count {
            continue;
        }
        last_line = line_no;
        let mut row = Vec::with_capacity(line.len());
        for (col, c) in line.chars().enumerate() {
            let cell = match c {
                'M' => {
                    if monk.is_some() {
                        return Err(ParseError {
                            line: line_no,
                            column: col + 1,
                            kind: ParseErrorKind::MultipleMonks,
                        });
                    }
                    monk = Some(Pos::new(col, rows.len()));
                    Cell::Walkable
                }
                c => Cell::from_char(c).ok_or(ParseError {
                    line: line_no,
                    column: col + 1,
                    kind: ParseErrorKind::IllegalChar(c),
                })?,
            };
            row.push(cell);
        }
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(ParseError {
                    line: line_no,
                    column: row.len().min(first.len()) + 1,
                    kind: ParseErrorKind::RaggedRow { expected: first.len(), found: row.len() },
                });
            }
        }
        rows.push(row);
    }
    if rows.is_empty() || rows[0].is_empty() {
        return Err(ParseError { line: last_line.max(1), column: 1, kind: ParseErrorKind::Empty });
    }
    let monk = monk.ok_or(ParseError { line: 1, column: 1, kind: ParseErrorKind::NoMonk })?;
    Ok(Garden::from_rows(&rows, monk).expect("parser enforces garden invariants"))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum MoveKind {
    WalkStep,
    Slide,
}

/// The resolution of one move.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MoveTrace {
    pub direction: Direction,
    pub kind: MoveKind,
    /// Sand cells newly covered, in slide order. Empty for a walk step.
    pub covered_cells: Vec<Pos>,
    pub end: Pos,
    /// `Walkable` or `Sand`.
    pub end_terrain: Cell,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GameState {
    pub monk: Pos,
    pub covered: SandSet,
}

/// Walkable cells partitioned into 4-connected regions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Regions {
    region_of: Vec<Option<u32>>,
    regions: Vec<Vec<Pos>>,
}

impl Regions {
    pub fn len(&self) -> usize {
        self.regions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.regions.is_empty()
    }

    /// Region id of a cell index, if the cell is walkable.
    pub fn region_of_index(&self, index: usize) -> Option<u32> {
        self.region_of[index]
    }

    pub fn region_of(&self, g: &Garden, p: Pos) -> Option<u32> {
        self.region_of[g.index(p)]
    }

    /// Members of a region, row-major.
    pub fn cells(&self, id: u32) -> &[Pos] {
        &self.regions[id as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[Pos]> {
        self.regions.iter().map(|r| r.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(text: &str) -> Garden {
        parse_garden(text).unwrap()
    }

    #[test]
    fn parses_rock_frame() {
        let garden = g("####\n#M_#\n####");
        assert_eq!((garden.width(), garden.height()), (4, 3));
        assert_eq!(garden.sand_count(), 0);
        assert_eq!(garden.monk_start(), Pos::new(1, 1));
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = parse_garden("##\n###").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::RaggedRow { expected: 2, found: 3 }));
        assert_eq!(err.line, 2);

        let err = parse_garden("M_\n_M").unwrap_err();
        assert_eq!((err.line, err.column, err.kind), (2, 2, ParseErrorKind::MultipleMonks));

        let err = parse_garden("M_x").unwrap_err();
        assert_eq!((err.line, err.column), (1, 3));
        assert_eq!(err.kind, ParseErrorKind::IllegalChar('x'));

        assert_eq!(parse_garden("").unwrap_err().kind, ParseErrorKind::Empty);
        assert_eq!(parse_garden("; only a comment\n").unwrap_err().kind, ParseErrorKind::Empty);
        assert_eq!(parse_garden("__\n..").unwrap_err().kind, ParseErrorKind::NoMonk);
        // 'o' and '@' are render-only.
        assert_eq!(parse_garden("Mo").unwrap_err().kind, ParseErrorKind::IllegalChar('o'));
    }

    #[test]
    fn comments_are_ignored() {
        let garden = g("; a comment\nM.\n; another\n__\n");
        assert_eq!(garden.height(), 2);
        assert_eq!(garden.render_text(None), "M.\n__\n");
    }

    #[test]
    fn single_cell_garden() {
        let garden = g("M");
        let s = garden.initial_state();
        assert_eq!(s.monk, Pos::new(0, 0));
        assert!(garden.is_solved(&s, EndRule::Strict));
        assert!(garden.is_solved(&s, EndRule::CoveredOnly));
        assert!(garden.legal_moves(&s).is_empty());
    }

    #[test]
    fn slide_stops_at_boundary() {
        let garden = g("M..");
        let (s, t) = garden.apply_move(&garden.initial_state(), Direction::R).unwrap();
        assert_eq!(t.kind, MoveKind::Slide);
        assert_eq!(t.covered_cells, vec![Pos::new(1, 0), Pos::new(2, 0)]);
        assert_eq!(s.monk, Pos::new(2, 0));
        assert_eq!(t.end_terrain, Cell::Sand);
        assert!(garden.is_solved(&s, EndRule::CoveredOnly));
        assert!(!garden.is_solved(&s, EndRule::Strict));
        assert_eq!(garden.render_text(Some(&s)), "_o@\n");
        assert_eq!(
            garden.apply_move(&s, Direction::L),
            Err(MoveError::IllegalMove { from: Pos::new(2, 0), direction: Direction::L })
        );
    }

    #[test]
    fn slide_steps_onto_walkable() {
        let garden = g("M.._");
        let (s, t) = garden.apply_move(&garden.initial_state(), Direction::R).unwrap();
        assert_eq!(t.covered_cells.len(), 2);
        assert_eq!((s.monk, t.end_terrain), (Pos::new(3, 0), Cell::Walkable));
        assert!(garden.is_solved(&s, EndRule::Strict));
        assert_eq!(garden.legal_moves(&garden.initial_state()), vec![Direction::R]);
    }

    #[test]
    fn slide_stops_before_rock() {
        let garden = g("M.#");
        let (s, t) = garden.apply_move(&garden.initial_state(), Direction::R).unwrap();
        assert_eq!(t.covered_cells, vec![Pos::new(1, 0)]);
        assert_eq!(s.monk, Pos::new(1, 0));
    }

    #[test]
    fn boxed_monk_has_no_moves() {
        let garden = g("###\n#M#\n###");
        assert!(garden.legal_moves(&garden.initial_state()).is_empty());
    }

    #[test]
    fn only_walkable_neighbour_from_sand() {
        // Covered sand behind, rock ahead and below, walkable above.
        let garden = g("##_#\nM..#\n####");
        let (s, _) = garden.apply_move(&garden.initial_state(), Direction::R).unwrap();
        assert_eq!(s.monk, Pos::new(2, 1));
        assert_eq!(garden.legal_moves(&s), vec![Direction::U]);
    }

    #[test]
    fn regions() {
        let garden = g("M_#_");
        let r = garden.walkable_regions();
        assert_eq!(r.len(), 2);
        assert_eq!(r.cells(0), &[Pos::new(0, 0), Pos::new(1, 0)]);
        assert_eq!(r.cells(1), &[Pos::new(3, 0)]);
        assert_eq!(g("M__\n___\n___").walkable_regions().cells(0).len(), 9);
    }

    #[test]
    fn replay_reports_index() {
        let garden = g("M..");
        assert_eq!(
            garden.replay(&[Direction::R, Direction::L], EndRule::CoveredOnly),
            Err(ReplayError::IllegalMoveAt { index: 1, direction: Direction::L })
        );
        let (_, solved) = g("M.._").replay(&[Direction::R], EndRule::Strict).unwrap();
        assert!(solved);
    }

    #[test]
    fn svg_has_one_rect_per_cell() {
        let garden = g("M..\n#_#");
        let svg = garden.render_svg(None);
        assert_eq!(svg.matches("<rect").count(), 6);
    }

    #[test]
    fn moves_parse() {
        assert_eq!(parse_moves(" R D\nL U\n").unwrap(), vec![
            Direction::R,
            Direction::D,
            Direction::L,
            Direction::U
        ]);
        assert_eq!(parse_moves("RX").unwrap_err(), MovesParseError { offset: 1, found: 'X' });
    }
}
