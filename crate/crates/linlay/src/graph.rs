//! Immutable simple graphs and the generators used throughout the toolkit:
//! the triangulated grid `H_n`, stars, cartesian/strong products and
//! subdivisions.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::io::BufRead;

use crate::error::{Error, Result};

/// Canonical undirected edge: the smaller endpoint always comes first.
pub type Edge = (usize, usize);

/// Canonicalise an edge so the smaller id is first.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Structured vertex labels recording generator provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VertexLabel {
    /// Grid coordinate (x, y), both in 1..=n.
    Grid { x: usize, y: usize },
    StarRoot,
    StarLeaf(usize),
    /// Product vertex (v1, v2) referencing the factor ids.
    Pair(usize, usize),
}

/// An immutable undirected simple graph with 0-based integer vertex ids.
///
/// Edges are stored canonically (`u < v`) in sorted order, so iteration and
/// serialisation are deterministic. Values are never mutated after
/// construction and are safe to share across threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<Edge>,
    labels: Option<Vec<VertexLabel>>,
}

impl Graph {
    /// Build a graph from an edge list, rejecting self-loops, duplicate
    /// edges and out-of-range endpoints.
    pub fn new(vertex_count: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Graph> {
        let mut seen = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) out of range for {vertex_count} vertices"
                )));
            }
            if !seen.insert(edge(u, v)) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u}, {v})")));
            }
        }
        Ok(Graph {
            vertex_count,
            edges: seen.into_iter().collect(),
            labels: None,
        })
    }

    fn with_labels(mut self, labels: Vec<VertexLabel>) -> Graph {
        debug_assert_eq!(labels.len(), self.vertex_count);
        self.labels = Some(labels);
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in sorted canonical order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&edge(u, v)).is_ok()
    }

    pub fn label(&self, v: usize) -> Option<&VertexLabel> {
        self.labels.as_ref().map(|l| &l[v])
    }

    /// Adjacency lists with neighbours in ascending order.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn degree_of(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn max_degree(&self) -> usize {
        let mut deg = vec![0usize; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }
}

/// Grid coordinate of the triangulated grid `H_n`, both components in 1..=n.
///
/// The canonical id mapping is `id = (y - 1) * n + (x - 1)` (row-major).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridCoord {
    pub x: usize,
    pub y: usize,
}

impl GridCoord {
    pub fn id(&self, n: usize) -> usize {
        (self.y - 1) * n + (self.x - 1)
    }

    pub fn from_id(id: usize, n: usize) -> GridCoord {
        GridCoord {
            x: id % n + 1,
            y: id / n + 1,
        }
    }
}

/// The triangulated grid `H_n`: the n x n grid with horizontal, vertical and
/// one diagonal family of edges ((x,y)-(x+1,y+1)). This is the Hex board
/// adjacency. Has `2n(n-1) + (n-1)^2` edges.
pub fn make_hex_grid(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidGraph("hex grid requires n >= 1".into()));
    }
    let id = |x: usize, y: usize| (y - 1) * n + (x - 1);
    let mut edges = Vec::new();
    for y in 1..=n {
        for x in 1..n {
            edges.push(edge(id(x, y), id(x + 1, y)));
        }
    }
    for y in 1..n {
        for x in 1..=n {
            edges.push(edge(id(x, y), id(x, y + 1)));
        }
    }
    for y in 1..n {
        for x in 1..n {
            edges.push(edge(id(x, y), id(x + 1, y + 1)));
        }
    }
    let labels = (0..n * n)
        .map(|i| {
            let c = GridCoord::from_id(i, n);
            VertexLabel::Grid { x: c.x, y: c.y }
        })
        .collect();
    Ok(Graph::new(n * n, edges)?.with_labels(labels))
}

/// Neighbours of a grid id in `H_n`, ascending, without materialising the graph.
pub fn hex_neighbors(n: usize, id: usize) -> Vec<usize> {
    let c = GridCoord::from_id(id, n);
    let mut out = Vec::with_capacity(6);
    let mut push = |x: isize, y: isize| {
        if x >= 1 && y >= 1 && x <= n as isize && y <= n as isize {
            out.push((y as usize - 1) * n + (x as usize - 1));
        }
    };
    let (x, y) = (c.x as isize, c.y as isize);
    push(x - 1, y - 1);
    push(x, y - 1);
    push(x - 1, y);
    push(x + 1, y);
    push(x, y + 1);
    push(x + 1, y + 1);
    out.sort_unstable();
    out
}

/// The star `S_b`: root id 0, leaves 1..=b.
pub fn make_star(b: usize) -> Graph {
    let mut labels = vec![VertexLabel::StarRoot];
    labels.extend((1..=b).map(VertexLabel::StarLeaf));
    Graph::new(b + 1, (1..=b).map(|v| (0, v)))
        .expect("star edges are valid")
        .with_labels(labels)
}

/// The path `P_n` on n vertices, 0-1-2-...-(n-1).
pub fn make_path(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path edges are valid")
}

/// The complete graph `K_n`.
pub fn make_complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, edges).expect("complete graph edges are valid")
}

/// The cycle `C_n`, requires n >= 3.
pub fn make_cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidGraph("cycle requires n >= 3".into()));
    }
    Graph::new(n, (0..n).map(|v| edge(v, (v + 1) % n)))
}

fn product_id(v1: usize, v2: usize, n2: usize) -> Result<usize> {
    v1.checked_mul(n2)
        .and_then(|x| x.checked_add(v2))
        .ok_or(Error::IdOverflow)
}

/// Cartesian product `g1 □ g2`. Vertex (v1, v2) has id `v1 * |V(g2)| + v2`.
///
/// (v1,v2)(w1,w2) is an edge iff v1 = w1 and v2w2 in E(g2), or v1w1 in E(g1)
/// and v2 = w2.
pub fn cartesian_product(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let n2 = g2.vertex_count();
    g1.vertex_count()
        .checked_mul(n2)
        .ok_or(Error::IdOverflow)?;
    let mut edges = Vec::new();
    for v1 in 0..g1.vertex_count() {
        for &(v2, w2) in g2.edges() {
            edges.push(edge(product_id(v1, v2, n2)?, product_id(v1, w2, n2)?));
        }
    }
    for &(v1, w1) in g1.edges() {
        for v2 in 0..n2 {
            edges.push(edge(product_id(v1, v2, n2)?, product_id(w1, v2, n2)?));
        }
    }
    let labels = (0..g1.vertex_count())
        .flat_map(|v1| (0..n2).map(move |v2| VertexLabel::Pair(v1, v2)))
        .collect();
    Ok(Graph::new(g1.vertex_count() * n2, edges)?.with_labels(labels))
}

/// Strong product `g1 ⊠ g2`: the cartesian product plus both diagonal edge
/// families ((v1,v2)(w1,w2) whenever v1w1 in E(g1) and v2w2 in E(g2)).
pub fn strong_product(g1: &Graph, g2: &Graph) -> Result<Graph> {
    let n2 = g2.vertex_count();
    let base = cartesian_product(g1, g2)?;
    let mut edges: Vec<Edge> = base.edges().to_vec();
    for &(v1, w1) in g1.edges() {
        for &(v2, w2) in g2.edges() {
            edges.push(edge(product_id(v1, v2, n2)?, product_id(w1, w2, n2)?));
            edges.push(edge(product_id(v1, w2, n2)?, product_id(w1, v2, n2)?));
        }
    }
    let labels = (0..g1.vertex_count())
        .flat_map(|v1| (0..n2).map(move |v2| VertexLabel::Pair(v1, v2)))
        .collect();
    Ok(Graph::new(base.vertex_count(), edges)?.with_labels(labels))
}

/// Replace every edge by a path with exactly `k` internal vertices.
///
/// Original ids are preserved; the internal vertices of the i-th edge (in
/// canonical sorted order) get ids `|V| + i*k .. |V| + (i+1)*k`.
pub fn subdivide(g: &Graph, k: usize) -> Graph {
    if k == 0 {
        return g.clone();
    }
    let mut edges = Vec::new();
    let mut next = g.vertex_count();
    for &(u, v) in g.edges() {
        let mut prev = u;
        for _ in 0..k {
            edges.push(edge(prev, next));
            prev = next;
            next += 1;
        }
        edges.push(edge(prev, v));
    }
    Graph::new(next, edges).expect("subdivision edges are valid")
}

/// Verdict of the bipartiteness check, with a checkable witness either way.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartiteness {
    /// side[v] gives the part of each vertex.
    Bipartite { side: Vec<bool> },
    /// An odd cycle listed as a closed vertex walk (first != last; the edge
    /// back to the first vertex closes the cycle).
    OddCycle { cycle: Vec<usize> },
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite { .. })
    }
}

/// BFS 2-colouring. Returns either a proper 2-colouring or an odd cycle.
pub fn is_bipartite(g: &Graph) -> Bipartiteness {
    let adj = g.adjacency();
    let n = g.vertex_count();
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut parent: Vec<usize> = (0..n).collect();
    for start in 0..n {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(false);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for &v in &adj[u] {
                match side[v] {
                    None => {
                        side[v] = Some(!su);
                        parent[v] = u;
                        queue.push_back(v);
                    }
                    Some(sv) if sv == su => {
                        // Walk both endpoints up to their common ancestor.
                        let path_to_root = |mut x: usize| {
                            let mut p = vec![x];
                            while parent[x] != x {
                                x = parent[x];
                                p.push(x);
                            }
                            p
                        };
                        let pu = path_to_root(u);
                        let pv = path_to_root(v);
                        let mut i = pu.len();
                        let mut j = pv.len();
                        while i > 0 && j > 0 && pu[i - 1] == pv[j - 1] {
                            i -= 1;
                            j -= 1;
                        }
                        let mut cycle: Vec<usize> = pu[..=i.min(pu.len() - 1)].to_vec();
                        let mut tail: Vec<usize> = pv[..j].to_vec();
                        tail.reverse();
                        cycle.extend(tail);
                        debug_assert!(cycle.len() % 2 == 1);
                        return Bipartiteness::OddCycle { cycle };
                    }
                    _ => {}
                }
            }
        }
    }
    Bipartiteness::Bipartite {
        side: side.into_iter().map(|s| s.unwrap()).collect(),
    }
}

/// Induced subgraph on `vertices` (which must be distinct). New ids follow
/// the position of each old id in `vertices`.
pub fn induced_subgraph(g: &Graph, vertices: &[usize]) -> Result<Graph> {
    let mut map = vec![usize::MAX; g.vertex_count()];
    for (new, &old) in vertices.iter().enumerate() {
        if old >= g.vertex_count() {
            return Err(Error::InvalidGraph(format!("vertex {old} out of range")));
        }
        if map[old] != usize::MAX {
            return Err(Error::InvalidGraph(format!("duplicate vertex {old}")));
        }
        map[old] = new;
    }
    let edges = g
        .edges()
        .iter()
        .filter(|&&(u, v)| map[u] != usize::MAX && map[v] != usize::MAX)
        .map(|&(u, v)| edge(map[u], map[v]));
    Graph::new(vertices.len(), edges.collect::<Vec<_>>())
}

/// Read the text graph format: `graph <vertex_count>` on line 1, then
/// `e <u> <v>` lines; `#` begins a comment; blank lines are ignored.
pub fn read_graph<R: BufRead>(reader: R) -> Result<Graph> {
    let mut vertex_count: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut parts = content.split_whitespace();
        let tag = parts.next().unwrap();
        let parse = |s: Option<&str>, what: &str| -> Result<usize> {
            s.ok_or_else(|| Error::Parse {
                line: lineno,
                msg: format!("missing {what}"),
            })?
            .parse()
            .map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("invalid {what}"),
            })
        };
        match tag {
            "graph" => {
                if vertex_count.is_some() {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "duplicate graph header".into(),
                    });
                }
                vertex_count = Some(parse(parts.next(), "vertex count")?);
            }
            "e" => {
                if vertex_count.is_none() {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: "edge before graph header".into(),
                    });
                }
                let u = parse(parts.next(), "edge endpoint")?;
                let v = parse(parts.next(), "edge endpoint")?;
                edges.push((u, v));
            }
            other => {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("unknown directive `{other}`"),
                });
            }
        }
        if parts.next().is_some() {
            return Err(Error::Parse {
                line: lineno,
                msg: "trailing tokens".into(),
            });
        }
    }
    let vertex_count = vertex_count.ok_or(Error::Parse {
        line: 0,
        msg: "missing graph header".into(),
    })?;
    Graph::new(vertex_count, edges).map_err(|e| match e {
        Error::InvalidGraph(msg) => Error::Parse { line: 0, msg },
        other => other,
    })
}

/// Write the text graph format. Edges come out in canonical sorted order, so
/// the output is deterministic and round-trips byte-identically.
pub fn write_graph(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "graph {}", g.vertex_count()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}
