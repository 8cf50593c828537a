//! Explicit layout constructions: the strict 3-queue layout of the
//! triangulated grid, the 1-queue star layout, the product upper-bound
//! constructions for queues and for stacks, and a randomized layout search.
//!
//! Every construction verifies its output before returning it.

use std::collections::BTreeMap;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{cartesian_product, edge, make_hex_grid, make_star, Edge, Graph, GridCoord};
use crate::layout::{
    is_dispersable, is_strict_queue, verify_layout, LayoutKind, LinearLayout, VertexOrder,
};

/// Default seed for `search_layout`, so acceptance runs are reproducible.
pub const DEFAULT_SEARCH_SEED: u64 = 0x1_1f0a;

fn verified(g: &Graph, layout: LinearLayout, what: &str) -> Result<LinearLayout> {
    let certs = verify_layout(g, &layout)?;
    if certs.is_empty() {
        Ok(layout)
    } else {
        Err(Error::ConstructionFailed(format!(
            "{what}: {} violation(s), first between ({}, {}) and ({}, {})",
            certs.len(),
            certs[0].first.0,
            certs[0].first.1,
            certs[0].second.0,
            certs[0].second.1
        )))
    }
}

/// Strict queue layout of `H_n` on at most 3 queues: row-major vertex order
/// with horizontal edges in queue 1, vertical edges in queue 2 and diagonal
/// edges in queue 3.
pub fn hexgrid_strict_queue_layout(n: usize) -> Result<LinearLayout> {
    let g = make_hex_grid(n)?;
    let mut pages = BTreeMap::new();
    for &(u, v) in g.edges() {
        let a = GridCoord::from_id(u, n);
        let b = GridCoord::from_id(v, n);
        let page = match (b.x as isize - a.x as isize, b.y as isize - a.y as isize) {
            (1, 0) | (-1, 0) => 1,
            (0, 1) | (0, -1) => 2,
            _ => 3,
        };
        pages.insert((u, v), page);
    }
    let page_count = if n >= 2 { 3 } else { 1 };
    let layout = LinearLayout::new(
        LayoutKind::Queue,
        VertexOrder::identity(n * n),
        pages,
        page_count,
    )?;
    let layout = verified(&g, layout, "hexgrid strict queue layout")?;
    if let Some((u, v, w)) = is_strict_queue(&g, &layout)? {
        return Err(Error::ConstructionFailed(format!(
            "hexgrid layout not strict at ({u}, {v}, {w})"
        )));
    }
    Ok(layout)
}

/// 1-queue layout of `S_b`: root first, leaves in id order, every edge on
/// queue 1. No two star edges can nest under any order.
pub fn star_queue_layout(b: usize) -> Result<LinearLayout> {
    let g = make_star(b);
    let pages = (1..=b).map(|v| ((0, v), 1)).collect();
    let layout = LinearLayout::new(
        LayoutKind::Queue,
        VertexOrder::identity(b + 1),
        pages,
        1,
    )?;
    verified(&g, layout, "star queue layout")
}

/// Queue layout of `g1 □ g2` with at most `pages(L1) + pages(L2)` queues,
/// given a queue layout of g1 and a *strict* queue layout of g2.
///
/// Order: copies of g1 are blocked by the L2 order of the g2 coordinate;
/// within a block, L1 order. g1-copy edges keep their L1 queue; g2-direction
/// edges take the queue of the underlying g2 edge, offset by the number of
/// g1 queues in use.
pub fn product_queue_layout(
    g1: &Graph,
    l1: &LinearLayout,
    g2: &Graph,
    l2: &LinearLayout,
) -> Result<LinearLayout> {
    if l1.kind != LayoutKind::Queue || l2.kind != LayoutKind::Queue {
        return Err(Error::Precondition("both factor layouts must be queue layouts".into()));
    }
    if !verify_layout(g1, l1)?.is_empty() {
        return Err(Error::Precondition("L1 is not a valid queue layout of g1".into()));
    }
    if let Some((u, v, w)) = is_strict_queue(g2, l2)? {
        return Err(Error::Precondition(format!(
            "L2 is not strict: vertex {u} sends edges to {v} and {w} on one queue"
        )));
    }
    let product = cartesian_product(g1, g2)?;
    let n2 = g2.vertex_count();
    let p1 = if g1.edge_count() > 0 { l1.page_count } else { 0 };
    let p2 = if g2.edge_count() > 0 { l2.page_count } else { 0 };

    let mut order = Vec::with_capacity(product.vertex_count());
    for i2 in 0..n2 {
        let v2 = l2.order.at(i2);
        for i1 in 0..g1.vertex_count() {
            let v1 = l1.order.at(i1);
            order.push(v1 * n2 + v2);
        }
    }
    let mut pages = BTreeMap::new();
    for v1 in 0..g1.vertex_count() {
        for &(v2, w2) in g2.edges() {
            let page = p1 + l2.page_of((v2, w2)).unwrap();
            pages.insert(edge(v1 * n2 + v2, v1 * n2 + w2), page);
        }
    }
    for &(v1, w1) in g1.edges() {
        let page = l1.page_of((v1, w1)).unwrap();
        for v2 in 0..n2 {
            pages.insert(edge(v1 * n2 + v2, w1 * n2 + v2), page);
        }
    }
    let layout = LinearLayout::new(
        LayoutKind::Queue,
        VertexOrder::new(order)?,
        pages,
        (p1 + p2).max(1),
    )?;
    verified(&product, layout, "product queue layout")
}

/// Stack layout of `g1 □ g2` with at most `pages(L1) + pages(L2)` stacks,
/// given a stack layout of g1 and a *dispersable* stack layout of a
/// *bipartite* g2 together with its bipartition.
///
/// Order: blocks by the L2 order of the g2 coordinate; within a block the L1
/// order, reversed for blocks on the second side of the bipartition. The
/// reversal makes the copies of a g2 edge nest instead of cross.
pub fn product_stack_layout(
    g1: &Graph,
    l1: &LinearLayout,
    g2: &Graph,
    l2: &LinearLayout,
    bipartition: &[bool],
) -> Result<LinearLayout> {
    if l1.kind != LayoutKind::Stack || l2.kind != LayoutKind::Stack {
        return Err(Error::Precondition("both factor layouts must be stack layouts".into()));
    }
    if !verify_layout(g1, l1)?.is_empty() {
        return Err(Error::Precondition("L1 is not a valid stack layout of g1".into()));
    }
    if let Some((e, f)) = is_dispersable(g2, l2)? {
        return Err(Error::Precondition(format!(
            "L2 is not dispersable: edges ({}, {}) and ({}, {}) share a page and an endpoint",
            e.0, e.1, f.0, f.1
        )));
    }
    if bipartition.len() != g2.vertex_count() {
        return Err(Error::Precondition("bipartition length mismatch".into()));
    }
    for &(u, v) in g2.edges() {
        if bipartition[u] == bipartition[v] {
            return Err(Error::Precondition(format!(
                "g2 is not bipartite under the given partition: edge ({u}, {v}) is monochromatic"
            )));
        }
    }
    let product = cartesian_product(g1, g2)?;
    let n2 = g2.vertex_count();
    let p1 = if g1.edge_count() > 0 { l1.page_count } else { 0 };
    let p2 = if g2.edge_count() > 0 { l2.page_count } else { 0 };

    let mut order = Vec::with_capacity(product.vertex_count());
    for i2 in 0..n2 {
        let v2 = l2.order.at(i2);
        let block: Vec<usize> = if bipartition[v2] {
            (0..g1.vertex_count()).rev().map(|i| l1.order.at(i)).collect()
        } else {
            (0..g1.vertex_count()).map(|i| l1.order.at(i)).collect()
        };
        for v1 in block {
            order.push(v1 * n2 + v2);
        }
    }
    let mut pages = BTreeMap::new();
    for v1 in 0..g1.vertex_count() {
        for &(v2, w2) in g2.edges() {
            let page = p1 + l2.page_of((v2, w2)).unwrap();
            pages.insert(edge(v1 * n2 + v2, v1 * n2 + w2), page);
        }
    }
    for &(v1, w1) in g1.edges() {
        let page = l1.page_of((v1, w1)).unwrap();
        for v2 in 0..n2 {
            pages.insert(edge(v1 * n2 + v2, w1 * n2 + v2), page);
        }
    }
    let layout = LinearLayout::new(
        LayoutKind::Stack,
        VertexOrder::new(order)?,
        pages,
        (p1 + p2).max(1),
    )?;
    verified(&product, layout, "product stack layout")
}

/// Outcome of `search_layout`: `NotFound` is inconclusive.
#[derive(Debug, Clone)]
pub enum SearchOutcome {
    Found(LinearLayout),
    NotFound { restarts: u64 },
}

impl SearchOutcome {
    pub fn found(self) -> Option<LinearLayout> {
        match self {
            SearchOutcome::Found(l) => Some(l),
            SearchOutcome::NotFound { .. } => None,
        }
    }
}

/// Greedy first-fit page assignment for a fixed order; returns the overflow
/// cost (number of forbidden same-page pairs after forcing overflowing edges
/// onto their least-conflicting page) and the assignment.
fn greedy_assign(
    g: &Graph,
    order: &VertexOrder,
    kind: LayoutKind,
    pages: usize,
) -> (usize, BTreeMap<Edge, usize>) {
    use crate::layout::{edge_relation, EdgeRelation};
    let forbidden = match kind {
        LayoutKind::Stack => EdgeRelation::Crosses,
        LayoutKind::Queue => EdgeRelation::Nests,
    };
    // sort edges by left position, then right position
    let mut edges: Vec<Edge> = g.edges().to_vec();
    edges.sort_by_key(|&(u, v)| {
        let (a, b) = (order.position(u), order.position(v));
        (a.min(b), a.max(b))
    });
    let mut assigned: Vec<Vec<Edge>> = vec![Vec::new(); pages];
    let mut result = BTreeMap::new();
    let mut cost = 0usize;
    for &e in &edges {
        let mut best = (usize::MAX, 0usize);
        for (p, on_page) in assigned.iter().enumerate() {
            let conflicts = on_page
                .iter()
                .filter(|&&f| edge_relation(order, e, f) == forbidden)
                .count();
            if conflicts < best.0 {
                best = (conflicts, p);
            }
            if conflicts == 0 {
                break;
            }
        }
        cost += best.0;
        assigned[best.1].push(e);
        result.insert(e, best.1 + 1);
    }
    (cost, result)
}

/// Randomized search for a layout of `g` of the given kind on at most
/// `pages` pages: seeded random restarts over vertex orders, each improved
/// by greedy hill-climbing on vertex swaps, with greedy page assignment.
///
/// Deterministic for a fixed seed and budget. A returned layout always
/// passes `verify_layout`; `NotFound` proves nothing.
pub fn search_layout(
    g: &Graph,
    kind: LayoutKind,
    pages: usize,
    budget: u64,
    seed: u64,
) -> Result<SearchOutcome> {
    if pages == 0 {
        return Err(Error::Precondition("page budget must be at least 1".into()));
    }
    let n = g.vertex_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut restarts = 0u64;
    while restarts < budget {
        restarts += 1;
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let mut vo = VertexOrder::new(order)?;
        let (mut cost, mut assignment) = greedy_assign(g, &vo, kind, pages);
        let mut stale = 0usize;
        let max_stale = 40 * n.max(2);
        while cost > 0 && stale < max_stale {
            let i = rng.gen_range(0..n);
            let j = rng.gen_range(0..n);
            if i == j {
                stale += 1;
                continue;
            }
            let mut cand: Vec<usize> = vo.as_slice().to_vec();
            cand.swap(i, j);
            let cvo = VertexOrder::new(cand)?;
            let (ccost, cassign) = greedy_assign(g, &cvo, kind, pages);
            if ccost <= cost {
                if ccost < cost {
                    stale = 0;
                } else {
                    stale += 1;
                }
                vo = cvo;
                cost = ccost;
                assignment = cassign;
            } else {
                stale += 1;
            }
        }
        if cost == 0 {
            let layout = LinearLayout::new(kind, vo, assignment, pages)?;
            return Ok(SearchOutcome::Found(verified(g, layout, "search_layout")?));
        }
    }
    Ok(SearchOutcome::NotFound { restarts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_bipartite, make_complete, make_cycle, Bipartiteness};
    use crate::layout::verify_pairwise_crossing;

    #[test]
    fn hexgrid_layout_valid_and_strict() {
        for n in 1..=6 {
            let l = hexgrid_strict_queue_layout(n).unwrap();
            assert!(l.page_count <= 3);
        }
        let l = hexgrid_strict_queue_layout(2).unwrap();
        assert_eq!(l.assigned_edge_count(), 5);
    }

    #[test]
    fn star_layout_valid_any_order() {
        for b in [0, 3, 9] {
            let l = star_queue_layout(b).unwrap();
            assert_eq!(l.page_count, 1);
        }
        // any permutation keeps a star valid on one queue
        let g = make_star(5);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let mut order: Vec<usize> = (0..6).collect();
            order.shuffle(&mut rng);
            let pages = (1..=5).map(|v| ((0usize, v), 1)).collect();
            let l = LinearLayout::new(LayoutKind::Queue, VertexOrder::new(order).unwrap(), pages, 1)
                .unwrap();
            assert!(verify_layout(&g, &l).unwrap().is_empty());
        }
    }

    #[test]
    fn product_queue_identity_factor() {
        let k1 = Graph::new(1, []).unwrap();
        let lk1 = LinearLayout::new(
            LayoutKind::Queue,
            VertexOrder::identity(1),
            BTreeMap::new(),
            1,
        )
        .unwrap();
        let h = make_hex_grid(3).unwrap();
        let lh = hexgrid_strict_queue_layout(3).unwrap();
        let prod = product_queue_layout(&k1, &lk1, &h, &lh).unwrap();
        assert_eq!(prod.order.as_slice(), lh.order.as_slice());
        for (e, p) in lh.pages() {
            assert_eq!(prod.page_of(e), Some(p));
        }
    }

    #[test]
    fn product_queue_star_hexgrid() {
        for (b, n) in [(5, 4), (9, 6)] {
            let s = make_star(b);
            let ls = star_queue_layout(b).unwrap();
            let h = make_hex_grid(n).unwrap();
            let lh = hexgrid_strict_queue_layout(n).unwrap();
            let prod = product_queue_layout(&s, &ls, &h, &lh).unwrap();
            assert!(prod.page_count <= 4);
        }
    }

    #[test]
    fn product_queue_rejects_nonstrict_l2() {
        let s = make_star(2);
        let ls = star_queue_layout(2).unwrap();
        // S_2 laid out root-first with both edges on one queue is valid but
        // not strict.
        let g2 = make_star(2);
        let l2 = star_queue_layout(2).unwrap();
        assert!(is_strict_queue(&g2, &l2).unwrap().is_some());
        assert!(matches!(
            product_queue_layout(&s, &ls, &g2, &l2),
            Err(Error::Precondition(_))
        ));
    }

    fn triangle_stack_layout() -> (Graph, LinearLayout) {
        let g = make_cycle(3).unwrap();
        let pages = g.edges().iter().map(|&e| (e, 1)).collect();
        let l = LinearLayout::new(LayoutKind::Stack, VertexOrder::identity(3), pages, 1).unwrap();
        (g, l)
    }

    #[test]
    fn product_stack_prism() {
        let (tri, ltri) = triangle_stack_layout();
        let p2 = crate::graph::make_path(2);
        let lp2 = LinearLayout::new(
            LayoutKind::Stack,
            VertexOrder::identity(2),
            [((0, 1), 1)].into_iter().collect(),
            1,
        )
        .unwrap();
        let prod = product_stack_layout(&tri, &ltri, &p2, &lp2, &[false, true]).unwrap();
        assert!(prod.page_count <= 2);
    }

    #[test]
    fn product_stack_star_times_c4() {
        let s3 = make_star(3);
        let ls3 = LinearLayout::new(
            LayoutKind::Stack,
            VertexOrder::identity(4),
            (1..=3).map(|v| ((0, v), 1)).collect(),
            1,
        )
        .unwrap();
        let c4 = make_cycle(4).unwrap();
        // 2-page dispersable layout of the 4-cycle
        let lc4 = LinearLayout::new(
            LayoutKind::Stack,
            VertexOrder::identity(4),
            [((0, 1), 1), ((1, 2), 2), ((2, 3), 1), ((0, 3), 2)]
                .into_iter()
                .collect(),
            2,
        )
        .unwrap();
        assert!(is_dispersable(&c4, &lc4).unwrap().is_none());
        let side = match is_bipartite(&c4) {
            Bipartiteness::Bipartite { side } => side,
            _ => unreachable!(),
        };
        let prod = product_stack_layout(&s3, &ls3, &c4, &lc4, &side).unwrap();
        assert!(prod.page_count <= 3);
    }

    #[test]
    fn product_stack_rejects_non_bipartite() {
        let (tri, ltri) = triangle_stack_layout();
        let p2 = crate::graph::make_path(2);
        let lp2 = LinearLayout::new(
            LayoutKind::Stack,
            VertexOrder::identity(2),
            [((0, 1), 1)].into_iter().collect(),
            1,
        )
        .unwrap();
        // triangle as g2 cannot be 2-partitioned
        let err = product_stack_layout(&p2, &lp2, &tri, &ltri, &[false, true, false]);
        assert!(matches!(err, Err(Error::Precondition(_))));
    }

    #[test]
    fn search_finds_small_layouts() {
        let g = make_complete(4);
        let out = search_layout(&g, LayoutKind::Stack, 2, 200, DEFAULT_SEARCH_SEED).unwrap();
        let l = out.found().expect("K4 has a 2-stack layout");
        assert!(verify_layout(&g, &l).unwrap().is_empty());
    }

    #[test]
    fn search_respects_verifier_contract() {
        // a found layout always verifies; K4 on 1 stack must not be found
        let g = make_complete(4);
        let out = search_layout(&g, LayoutKind::Stack, 1, 300, 1).unwrap();
        assert!(out.found().is_none());
    }

    #[test]
    fn restricting_product_layout_stays_valid() {
        let s = make_star(3);
        let ls = star_queue_layout(3).unwrap();
        let h = make_hex_grid(4).unwrap();
        let lh = hexgrid_strict_queue_layout(4).unwrap();
        let prod_g = cartesian_product(&s, &h).unwrap();
        let prod_l = product_queue_layout(&s, &ls, &h, &lh).unwrap();
        // keep the copies of H_3 inside H_4 for the root and first leaf
        let mut verts = Vec::new();
        for v1 in 0..2 {
            for y in 0..3 {
                for x in 0..3 {
                    verts.push(v1 * 16 + y * 4 + x);
                }
            }
        }
        let sub = crate::graph::induced_subgraph(&prod_g, &verts).unwrap();
        let sl = prod_l.restrict(&verts).unwrap();
        assert!(verify_layout(&sub, &sl).unwrap().is_empty());
    }

    #[test]
    fn crossing_family_forces_certificates() {
        // k pairwise crossing edges on one stack page force k(k-1)/2 certs
        let order = VertexOrder::identity(6);
        let edges = [(0, 3), (1, 4), (2, 5)];
        assert!(verify_pairwise_crossing(&order, &edges).unwrap());
        let g = Graph::new(6, edges).unwrap();
        let l = LinearLayout::new(
            LayoutKind::Stack,
            order,
            edges.iter().map(|&e| (e, 1)).collect(),
            1,
        )
        .unwrap();
        assert_eq!(verify_layout(&g, &l).unwrap().len(), 3);
    }
}
