//! Undirected simple graphs, the cubic check, and a backtracking
//! Hamiltonian-circuit oracle.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub const DEFAULT_ORACLE_LIMIT: usize = 20;

/// Vertices are `1..=n`; edges are stored with the smaller endpoint first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: malformed line {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: missing 'p <n> <m>' header")]
    MissingHeader { line: usize },
    #[error("line {line}: vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: loop edge at vertex {vertex}")]
    Loop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge ({u},{v})")]
    Duplicate { line: usize, u: usize, v: usize },
    #[error("header declares {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {n} vertices, oracle limit is {limit}")]
    LimitExceeded { n: usize, limit: usize },
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicates and out-of-range vertices.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut g = Graph { n, edges: BTreeSet::new(), adjacency: vec![Vec::new(); n + 1] };
        for (i, &(u, v)) in edges.iter().enumerate() {
            g.add_edge(u, v, i + 1)?;
        }
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize, line: usize) -> Result<(), GraphError> {
        let n = self.n;
        for vertex in [u, v] {
            if vertex == 0 || vertex > n {
                return Err(GraphError::VertexOutOfRange { line, vertex, n });
            }
        }
        if u == v {
            return Err(GraphError::Loop { line, vertex: u });
        }
        let key = (u.min(v), u.max(v));
        if !self.edges.insert(key) {
            return Err(GraphError::Duplicate { line, u: key.0, v: key.1 });
        }
        self.adjacency[u].push(v);
        self.adjacency[v].push(u);
        self.adjacency[u].sort_unstable();
        self.adjacency[v].sort_unstable();
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Sorted neighbours of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Serialises in the `p`/`e` format, edges in sorted order.
    pub fn to_text(&self) -> String {
        let mut out = format!("p {} {}\n", self.n, self.edges.len());
        for (u, v) in &self.edges {
            out.push_str(&format!("e {u} {v}\n"));
        }
        out
    }
}

/// Parses `p <n> <m>` followed by `m` lines `e <u> <v>`. Blank lines and
/// lines starting with `c` or `;` are comments.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut graph: Option<(Graph, usize)> = None;
    let mut found = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') || trimmed.starts_with(';') {
            continue;
        }
        let malformed = || GraphError::Malformed { line, text: raw.to_string() };
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let nums = |fs: &[&str]| -> Result<Vec<usize>, GraphError> {
            fs.iter().map(|f| f.parse::<usize>().map_err(|_| malformed())).collect()
        };
        match fields.as_slice() {
            ["p", rest @ ..] if rest.len() == 2 => {
                if graph.is_some() {
                    return Err(malformed());
                }
                let v = nums(rest)?;
                graph = Some((Graph::new(v[0], &[]).expect("empty graph"), v[1]));
            }
            ["e", rest @ ..] if rest.len() == 2 => {
                let (g, _) = graph.as_mut().ok_or(GraphError::MissingHeader { line })?;
                let v = nums(rest)?;
                g.add_edge(v[0], v[1], line)?;
                found += 1;
            }
            _ => return Err(malformed()),
        }
    }
    let (g, declared) = graph.ok_or(GraphError::MissingHeader { line: 1 })?;
    if declared != found {
        return Err(GraphError::EdgeCount { declared, found });
    }
    Ok(g)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeViolation {
    pub vertex: usize,
    pub degree: usize,
}

impl fmt::Display for DegreeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "vertex {} has degree {}", self.vertex, self.degree)
    }
}

/// `Ok` iff every vertex has degree 3.
pub fn validate_cubic(g: &Graph) -> Result<(), Vec<DegreeViolation>> {
    let violations: Vec<DegreeViolation> = (1..=g.n)
        .filter(|&v| g.degree(v) != 3)
        .map(|v| DegreeViolation { vertex: v, degree: g.degree(v) })
        .collect();
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

/// A cyclic vertex order claimed to be Hamiltonian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit(pub Vec<usize>);

impl fmt::Display for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl Circuit {
    pub fn parse(text: &str) -> Option<Circuit> {
        text.split_whitespace().map(|t| t.parse().ok()).collect::<Option<Vec<_>>>().map(Circuit)
    }
}

pub fn verify_circuit(g: &Graph, c: &Circuit) -> bool {
    let order = &c.0;
    if order.len() != g.n || g.n < 3 {
        return false;
    }
    let mut seen = vec![false; g.n + 1];
    for &v in order {
        if v == 0 || v > g.n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    (0..order.len()).all(|i| g.has_edge(order[i], order[(i + 1) % order.len()]))
}

/// Backtracking from vertex 1 over sorted neighbours; the first circuit
/// found is the lexicographically smallest vertex sequence starting at 1.
pub fn find_hamiltonian_circuit(g: &Graph) -> Result<Option<Circuit>, OracleError> {
    find_hamiltonian_circuit_with_limit(g, DEFAULT_ORACLE_LIMIT)
}

pub fn find_hamiltonian_circuit_with_limit(
    g: &Graph,
    limit: usize,
) -> Result<Option<Circuit>, OracleError> {
    if g.n > limit {
        return Err(OracleError::LimitExceeded { n: g.n, limit });
    }
    if g.n < 3 {
        return Ok(None);
    }
    let mut path = vec![1];
    let mut used = vec![false; g.n + 1];
    used[1] = true;
    Ok(extend(g, &mut path, &mut used).then(|| Circuit(path)))
}

fn extend(g: &Graph, path: &mut Vec<usize>, used: &mut [bool]) -> bool {
    let last = *path.last().unwrap();
    if path.len() == g.n {
        return g.has_edge(last, path[0]);
    }
    for &next in g.neighbors(last) {
        if used[next] {
            continue;
        }
        used[next] = true;
        path.push(next);
        if extend(g, path, used) {
            return true;
        }
        path.pop();
        used[next] = false;
    }
    false
}

/// Shipped fixture graphs.
pub mod fixtures {
    use super::Graph;

    pub fn k4() -> Graph {
        Graph::new(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    /// Two triangles joined by a perfect matching.
    pub fn prism() -> Graph {
        Graph::new(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 4), (2, 5), (3, 6)])
            .unwrap()
    }

    pub fn cube() -> Graph {
        let mut edges = Vec::new();
        for a in 0..8usize {
            for bit in [1, 2, 4] {
                let b = a ^ bit;
                if a < b {
                    edges.push((a + 1, b + 1));
                }
            }
        }
        Graph::new(8, &edges).unwrap()
    }

    /// Two copies of K4 with one edge subdivided, the subdivision vertices
    /// (5 and 10) joined by a bridge.
    pub fn bridged10() -> Graph {
        let mut edges = Vec::new();
        for base in [0, 5] {
            let (a, b, c, d, s) = (base + 1, base + 2, base + 3, base + 4, base + 5);
            edges.extend([(a, c), (a, d), (b, c), (b, d), (c, d), (a, s), (b, s)]);
        }
        edges.push((5, 10));
        Graph::new(10, &edges).unwrap()
    }

    /// A chain of three blocks joined by two bridges: K4 with one subdivided
    /// edge, K4 with two subdivided edges, K4 with one subdivided edge.
    pub fn bridged16() -> Graph {
        let mut edges = Vec::new();
        // Block 1: vertices 1..=5, subdivision vertex 5.
        edges.extend([(1, 3), (1, 4), (2, 3), (2, 4), (3, 4), (1, 5), (2, 5)]);
        // Block 2: vertices 6..=11; K4 on 6..=9 with (6,7) split by 10 and
        // (8,9) split by 11.
        edges.extend([(6, 8), (6, 9), (7, 8), (7, 9), (6, 10), (7, 10), (8, 11), (9, 11)]);
        // Block 3: vertices 12..=16, subdivision vertex 16.
        edges.extend([(12, 14), (12, 15), (13, 14), (13, 15), (14, 15), (12, 16), (13, 16)]);
        edges.extend([(5, 10), (11, 16)]);
        Graph::new(16, &edges).unwrap()
    }

    /// All fixtures by name.
    pub fn all() -> Vec<(&'static str, Graph)> {
        vec![
            ("k4", k4()),
            ("prism", prism()),
            ("cube", cube()),
            ("bridged10", bridged10()),
            ("bridged16", bridged16()),
        ]
    }
}
