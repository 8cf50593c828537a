//! Brute-force oracles: fixed-order page minimization for queues (largest
//! nesting chain) and stacks (chromatic number of the crossing-conflict
//! graph), and exhaustive stack-/queue-number for tiny graphs.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::layout::{verify_layout, LayoutKind, LinearLayout, VertexOrder};

/// Default vertex cap for the exhaustive solvers.
pub const DEFAULT_MAX_VERTICES: usize = 10;

/// Default edge cap for fixed-order stack minimization.
pub const DEFAULT_MAX_EDGES: usize = 40;

/// A minimum page count with a verified witness layout and search statistics.
#[derive(Debug, Clone)]
pub struct ExactResult {
    pub pages: usize,
    pub witness: LinearLayout,
    pub orders_examined: u64,
    pub elapsed: Duration,
}

fn edge_spans(g: &Graph, order: &VertexOrder) -> Vec<(usize, usize, Edge)> {
    g.edges()
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (order.position(u), order.position(v));
            if a < b {
                (a, b, (u, v))
            } else {
                (b, a, (u, v))
            }
        })
        .collect()
}

/// Minimum queues for a fixed order, with an optimal assignment.
///
/// The count equals the size of a largest set of pairwise nesting edges
/// (a rainbow); assigning each edge its nesting depth realizes it.
pub fn min_queues_fixed_order(g: &Graph, order: &VertexOrder) -> (usize, BTreeMap<Edge, usize>) {
    let mut spans = edge_spans(g, order);
    // inner edges first so depths are available when needed
    spans.sort_by_key(|&(l, r, _)| (r - l, l));
    let mut depth: BTreeMap<Edge, usize> = BTreeMap::new();
    let mut max_depth = 0;
    for i in 0..spans.len() {
        let (l, r, e) = spans[i];
        let mut d = 1;
        for &(l2, r2, f) in &spans[..i] {
            // f strictly inside e (disjoint by strictness of the positions)
            if l < l2 && r2 < r {
                d = d.max(depth[&f] + 1);
            }
        }
        depth.insert(e, d);
        max_depth = max_depth.max(d);
    }
    (max_depth, depth)
}

fn crossing_conflicts(g: &Graph, order: &VertexOrder) -> Vec<Vec<usize>> {
    use crate::layout::{edge_relation, EdgeRelation};
    let edges = g.edges();
    let mut adj = vec![Vec::new(); edges.len()];
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if edge_relation(order, edges[i], edges[j]) == EdgeRelation::Crosses {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    adj
}

/// Try to properly colour the conflict graph with at most `limit` colours;
/// returns the colouring using the fewest colours found, searched by
/// iterative deepening.
fn chromatic_at_most(adj: &[Vec<usize>], limit: usize) -> Option<(usize, Vec<usize>)> {
    let n = adj.len();
    if n == 0 {
        return Some((0, Vec::new()));
    }
    for k in 1..=limit {
        let mut colours = vec![usize::MAX; n];
        if colour_rec(adj, k, 0, 0, &mut colours) {
            let used = colours.iter().copied().max().unwrap() + 1;
            return Some((used, colours));
        }
    }
    None
}

fn colour_rec(
    adj: &[Vec<usize>],
    k: usize,
    next: usize,
    max_used: usize,
    colours: &mut Vec<usize>,
) -> bool {
    if next == adj.len() {
        return true;
    }
    // only the first unused colour needs to be tried, the rest are symmetric
    for c in 0..k.min(max_used + 1) {
        if adj[next].iter().all(|&m| colours[m] != c) {
            colours[next] = c;
            if colour_rec(adj, k, next + 1, max_used.max(c + 1), colours) {
                return true;
            }
            colours[next] = usize::MAX;
        }
    }
    false
}

/// Minimum stacks for a fixed order: the chromatic number of the
/// crossing-conflict graph, found by backtracking. Errors beyond the edge
/// cap.
pub fn min_stacks_fixed_order(
    g: &Graph,
    order: &VertexOrder,
) -> Result<(usize, BTreeMap<Edge, usize>)> {
    min_stacks_fixed_order_capped(g, order, DEFAULT_MAX_EDGES)
}

pub fn min_stacks_fixed_order_capped(
    g: &Graph,
    order: &VertexOrder,
    max_edges: usize,
) -> Result<(usize, BTreeMap<Edge, usize>)> {
    if g.edge_count() > max_edges {
        return Err(Error::CapExceeded(format!(
            "{} edges exceeds the fixed-order stack cap of {max_edges}",
            g.edge_count()
        )));
    }
    let adj = crossing_conflicts(g, order);
    let (count, colours) =
        chromatic_at_most(&adj, g.edge_count().max(1)).expect("E colours always suffice");
    let assignment = g
        .edges()
        .iter()
        .enumerate()
        .map(|(i, &e)| (e, colours.get(i).map_or(1, |&c| c + 1)))
        .collect();
    Ok((count, assignment))
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

#[derive(Debug, Clone, Copy)]
pub struct ExactOptions {
    pub max_vertices: usize,
}

impl Default for ExactOptions {
    fn default() -> Self {
        ExactOptions {
            max_vertices: DEFAULT_MAX_VERTICES,
        }
    }
}

fn exact_number(g: &Graph, kind: LayoutKind, opts: ExactOptions) -> Result<ExactResult> {
    if g.vertex_count() > opts.max_vertices {
        return Err(Error::CapExceeded(format!(
            "{} vertices exceeds the cap of {} (raise max_vertices to override)",
            g.vertex_count(),
            opts.max_vertices
        )));
    }
    let start = Instant::now();
    let n = g.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<(usize, LinearLayout)> = None;
    let mut orders = 0u64;
    // once a 1-page (or empty) layout is in hand nothing can beat it; the
    // remaining canonical orders are only counted, not evaluated
    let mut settled = false;
    loop {
        // skip reversals: crossing and nesting are reversal-invariant, so
        // only orders with first vertex below the last need examining
        let canonical = n < 2 || perm[0] < perm[n - 1];
        if canonical {
            orders += 1;
        }
        if canonical && !settled {
            let order = VertexOrder::new(perm.clone())?;
            let found = match kind {
                LayoutKind::Queue => {
                    let (count, assignment) = min_queues_fixed_order(g, &order);
                    let bound = best.as_ref().map_or(usize::MAX, |(b, _)| *b);
                    if count < bound {
                        Some((count, assignment))
                    } else {
                        None
                    }
                }
                LayoutKind::Stack => {
                    let bound = best.as_ref().map_or(usize::MAX, |(b, _)| *b);
                    let limit = bound.saturating_sub(1).min(g.edge_count().max(1));
                    let adj = crossing_conflicts(g, &order);
                    chromatic_at_most(&adj, limit.max(if best.is_none() { 1 } else { 0 }))
                        .or_else(|| {
                            if best.is_none() {
                                chromatic_at_most(&adj, g.edge_count().max(1))
                            } else {
                                None
                            }
                        })
                        .map(|(count, colours)| {
                            let assignment: BTreeMap<Edge, usize> = g
                                .edges()
                                .iter()
                                .enumerate()
                                .map(|(i, &e)| (e, colours.get(i).map_or(1, |&c| c + 1)))
                                .collect();
                            (count, assignment)
                        })
                }
            };
            if let Some((count, assignment)) = found {
                let bound = best.as_ref().map_or(usize::MAX, |(b, _)| *b);
                if count < bound {
                    let layout =
                        LinearLayout::new(kind, order, assignment, count.max(1))?;
                    best = Some((count, layout));
                    if count <= usize::from(g.edge_count() > 0) {
                        settled = true;
                    }
                }
            }
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    let (pages, witness) = best.expect("at least one order is examined");
    let certs = verify_layout(g, &witness)?;
    debug_assert!(certs.is_empty(), "exact witness must verify");
    if !certs.is_empty() {
        return Err(Error::ConstructionFailed("exact witness failed verification".into()));
    }
    Ok(ExactResult {
        pages,
        witness,
        orders_examined: orders,
        elapsed: start.elapsed(),
    })
}

/// Exact stack-number by exhaustive search over vertex orders.
pub fn stack_number_exact(g: &Graph, opts: ExactOptions) -> Result<ExactResult> {
    exact_number(g, LayoutKind::Stack, opts)
}

/// Exact queue-number by exhaustive search over vertex orders.
pub fn queue_number_exact(g: &Graph, opts: ExactOptions) -> Result<ExactResult> {
    exact_number(g, LayoutKind::Queue, opts)
}
