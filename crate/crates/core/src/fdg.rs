//! Functional dependence graph of a distributed index coding problem and
//! fd-separation queries on it.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, ParseError, Result};
use crate::model::{parse_msg_list, Problem};
use crate::sets::{touch_both, MsgSet, ServerSet};

/// A vertex: message `X_i`, server output `Y_J`, or decoded estimate `X̂_i`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vertex {
    Msg(usize),
    Server(MsgSet),
    Estimate(usize),
}

impl Vertex {
    fn is_estimate(self) -> bool {
        matches!(self, Vertex::Estimate(_))
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Msg(i) => write!(f, "x{i}"),
            Vertex::Server(j) => {
                write!(f, "y{}", j.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","))
            }
            Vertex::Estimate(i) => write!(f, "xh{i}"),
        }
    }
}

/// Directed graph with edges `X_i → Y_J` (`i ∈ J`), `X_i → X̂_j` (`i ∈ A_j`),
/// `Y_J → X̂_i` and `X̂_i → X_i`.
#[derive(Clone, Debug)]
pub struct Fdg {
    n: usize,
    vertices: Vec<Vertex>,
    index: HashMap<Vertex, usize>,
    edges: Vec<(usize, usize)>,
}

impl Fdg {
    fn from_parts(n: usize, vertices: Vec<Vertex>, edges: Vec<(Vertex, Vertex)>) -> Fdg {
        let index: HashMap<Vertex, usize> = vertices.iter().enumerate().map(|(k, v)| (*v, k)).collect();
        let edges = edges.into_iter().map(|(a, b)| (index[&a], index[&b])).collect();
        Fdg { n, vertices, index, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.index.contains_key(&v)
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.edges.iter().map(|&(a, b)| (self.vertices[a], self.vertices[b]))
    }

    pub fn has_edge(&self, from: Vertex, to: Vertex) -> bool {
        match (self.index.get(&from), self.index.get(&to)) {
            (Some(&a), Some(&b)) => self.edges.contains(&(a, b)),
            _ => false,
        }
    }

    /// Subgraph induced on `keep`.
    fn induced(&self, keep: &[Vertex]) -> Fdg {
        let mut vertices: Vec<Vertex> = keep.iter().copied().filter(|v| self.contains(*v)).collect();
        vertices.sort();
        vertices.dedup();
        let inside: std::collections::HashSet<Vertex> = vertices.iter().copied().collect();
        let edges = self.edges().filter(|(a, b)| inside.contains(a) && inside.contains(b)).collect();
        Fdg::from_parts(self.n, vertices, edges)
    }
}

/// The graph over all `2^n − 1` servers.
pub fn build_fdg(problem: &Problem) -> Fdg {
    build_fdg_on(problem, &ServerSet::all(problem.n()))
}

/// The graph keeping only the server outputs `Y_J`, `J ∈ servers`.
pub fn build_fdg_on(problem: &Problem, servers: &ServerSet) -> Fdg {
    let n = problem.n();
    let mut vertices: Vec<Vertex> = (1..=n).map(Vertex::Msg).collect();
    vertices.extend(servers.iter().map(Vertex::Server));
    vertices.extend((1..=n).map(Vertex::Estimate));
    let mut edges = Vec::new();
    for j in servers.iter() {
        edges.extend(j.iter().map(|i| (Vertex::Msg(i), Vertex::Server(j))));
    }
    for rx in 1..=n {
        edges.extend(problem.side_info(rx).iter().map(|i| (Vertex::Msg(i), Vertex::Estimate(rx))));
    }
    for j in servers.iter() {
        edges.extend((1..=n).map(|rx| (Vertex::Server(j), Vertex::Estimate(rx))));
    }
    edges.extend((1..=n).map(|i| (Vertex::Estimate(i), Vertex::Msg(i))));
    Fdg::from_parts(n, vertices, edges)
}

fn reject_estimates(set: &[Vertex]) -> Result<()> {
    match set.iter().find(|v| v.is_estimate()) {
        Some(v) => Err(Error::invalid(format!("vertex {v} is a decoded estimate; only x and y vertices are allowed"))),
        None => Ok(()),
    }
}

/// Subgraph induced on `set` and its ancestors, where ancestry follows
/// edges between message and server vertices after dropping every edge out
/// of a message vertex.
pub fn ancestral_graph(g: &Fdg, set: &[Vertex]) -> Result<Fdg> {
    reject_estimates(set)?;
    if let Some(v) = set.iter().find(|v| !g.contains(**v)) {
        return Err(Error::invalid(format!("vertex {v} is not in the graph")));
    }
    let mut keep: Vec<Vertex> = set.to_vec();
    let mut queue: VecDeque<Vertex> = set.iter().copied().collect();
    while let Some(v) = queue.pop_front() {
        for (a, b) in g.edges() {
            if b == v && !a.is_estimate() && !matches!(a, Vertex::Msg(_)) && !keep.contains(&a) {
                keep.push(a);
                queue.push_back(a);
            }
        }
    }
    Ok(g.induced(&keep))
}

/// Sets `U`, `W`, `Z` of a separation query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationQuery {
    pub given: Vec<Vertex>,
    pub left: Vec<Vertex>,
    pub right: Vec<Vertex>,
}

impl SeparationQuery {
    pub fn new(given: Vec<Vertex>, left: Vec<Vertex>, right: Vec<Vertex>) -> Result<Self> {
        if left.is_empty() || right.is_empty() {
            return Err(Error::invalid("both separated sets must be nonempty"));
        }
        for (a, b, what) in [(&given, &left, "U and W"), (&given, &right, "U and Z"), (&left, &right, "W and Z")] {
            if let Some(v) = a.iter().find(|v| b.contains(v)) {
                return Err(Error::invalid(format!("{what} share vertex {v}")));
            }
        }
        for s in [&given, &left, &right] {
            reject_estimates(s)?;
        }
        Ok(SeparationQuery { given, left, right })
    }
}

/// Outcome of a separation test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Separation {
    pub separated: bool,
    pub ancestral_vertices: usize,
    pub ancestral_edges: usize,
}

/// Whether `U` fd-separates `W` and `Z`: no undirected path joins them in the
/// ancestral graph of `U ∪ W ∪ Z` once the edges out of `U` are removed.
pub fn fd_separation(g: &Fdg, q: &SeparationQuery) -> Result<Separation> {
    let all: Vec<Vertex> = q.given.iter().chain(&q.left).chain(&q.right).copied().collect();
    let anc = ancestral_graph(g, &all)?;
    let size = anc.vertices.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); size];
    for &(a, b) in &anc.edges {
        if q.given.contains(&anc.vertices[a]) {
            continue;
        }
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; size];
    let mut queue: VecDeque<usize> = VecDeque::new();
    for v in &q.left {
        let k = anc.index[v];
        seen[k] = true;
        queue.push_back(k);
    }
    while let Some(a) = queue.pop_front() {
        for &b in &adj[a] {
            if !seen[b] {
                seen[b] = true;
                queue.push_back(b);
            }
        }
    }
    let separated = q.right.iter().all(|v| !seen[anc.index[v]]);
    Ok(Separation { separated, ancestral_vertices: size, ancestral_edges: anc.edges.len() })
}

pub fn fd_separates(g: &Fdg, q: &SeparationQuery) -> Result<bool> {
    Ok(fd_separation(g, q)?.separated)
}

/// Whether `X_L ∪ Y_P` fd-separates `X_K` and `X_{K'}` with `L = [n] \ (K ∪ K')`
/// and `P = servers`.
pub fn pair_separated(problem: &Problem, servers: &ServerSet, k: MsgSet, k2: MsgSet) -> Result<bool> {
    let n = problem.n();
    if k.is_empty() || k2.is_empty() || k.intersects(k2) {
        return Err(Error::invalid("the two message sets must be disjoint and nonempty"));
    }
    let rest = MsgSet::full(n) - (k | k2);
    let g = build_fdg(problem);
    let mut given: Vec<Vertex> = rest.iter().map(Vertex::Msg).collect();
    given.extend(servers.iter().map(Vertex::Server));
    let q = SeparationQuery::new(given, k.iter().map(Vertex::Msg).collect(), k2.iter().map(Vertex::Msg).collect())?;
    fd_separates(&g, &q)
}

/// Whether `servers` avoids every server touching both `k` and `k2`.
pub fn direct_condition(servers: &ServerSet, k: MsgSet, k2: MsgSet) -> bool {
    servers.is_disjoint(&touch_both(servers.n(), k, k2))
}

fn parse_vertex(tok: &str, n: usize, line: usize) -> std::result::Result<Vertex, ParseError> {
    let index = |body: &str| -> std::result::Result<usize, ParseError> {
        let s = parse_msg_list(body, n, line)?;
        match s.len() {
            1 => Ok(s.min().unwrap_or(0)),
            _ => Err(ParseError::new(line, format!("`{tok}` needs exactly one message index"))),
        }
    };
    if let Some(body) = tok.strip_prefix("xh") {
        Ok(Vertex::Estimate(index(body)?))
    } else if let Some(body) = tok.strip_prefix('x') {
        Ok(Vertex::Msg(index(body)?))
    } else if let Some(body) = tok.strip_prefix('y') {
        let j = parse_msg_list(body, n, line)?;
        if j.is_empty() {
            return Err(ParseError::new(line, "a server vertex needs messages"));
        }
        Ok(Vertex::Server(j))
    } else {
        Err(ParseError::new(line, format!("malformed vertex `{tok}`")))
    }
}

pub type QuerySets = (Vec<Vertex>, Vec<Vertex>, Vec<Vertex>);

/// Parses `U: x1 y1,2; W: x2; Z: x3 x4` (sections may also sit on separate
/// lines; `U` may be omitted or empty).
pub fn parse_fdg_query(text: &str, n: usize) -> std::result::Result<QuerySets, ParseError> {
    let mut sets: [Option<Vec<Vertex>>; 3] = [None, None, None];
    let mut last = 1;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.split('#').next().unwrap_or("");
        for section in body.split(';') {
            let section = section.trim();
            if section.is_empty() {
                continue;
            }
            last = line;
            let (key, list) = section
                .split_once(':')
                .ok_or_else(|| ParseError::new(line, format!("expected `U:`, `W:` or `Z:` in `{section}`")))?;
            let slot = match key.trim() {
                "U" | "u" => 0,
                "W" | "w" => 1,
                "Z" | "z" => 2,
                other => return Err(ParseError::new(line, format!("unknown query set `{other}`"))),
            };
            if sets[slot].is_some() {
                return Err(ParseError::new(line, format!("query set `{}` given twice", key.trim())));
            }
            let mut vs = Vec::new();
            for tok in list.split_whitespace() {
                let v = parse_vertex(tok, n, line)?;
                if vs.contains(&v) {
                    return Err(ParseError::new(line, format!("vertex {v} repeated")));
                }
                vs.push(v);
            }
            sets[slot] = Some(vs);
        }
    }
    let [u, w, z] = sets;
    match (w, z) {
        (Some(w), Some(z)) => Ok((u.unwrap_or_default(), w, z)),
        _ => Err(ParseError::new(last, "a query needs both `W:` and `Z:`")),
    }
}
