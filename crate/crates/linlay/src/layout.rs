//! Linear layouts: a total vertex order plus an edge-to-page assignment,
//! the pairwise edge relations (cross / nest / sequential), and the
//! certificate-producing validity checks for stack and queue layouts.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{edge, Edge, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum LayoutKind {
    Stack,
    Queue,
}

impl LayoutKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            LayoutKind::Stack => "stack",
            LayoutKind::Queue => "queue",
        }
    }
}

/// A total order on vertex ids, kept with its inverse for O(1) position
/// lookups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexOrder {
    order: Vec<usize>,
    pos: Vec<usize>,
}

impl VertexOrder {
    /// `order[i]` is the vertex at position i. Must be a permutation of
    /// 0..len.
    pub fn new(order: Vec<usize>) -> Result<VertexOrder> {
        let n = order.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n {
                return Err(Error::InvalidLayout(format!("vertex {v} out of range")));
            }
            if pos[v] != usize::MAX {
                return Err(Error::InvalidLayout(format!("vertex {v} repeated in order")));
            }
            pos[v] = i;
        }
        Ok(VertexOrder { order, pos })
    }

    pub fn identity(n: usize) -> VertexOrder {
        VertexOrder {
            order: (0..n).collect(),
            pos: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Position of vertex v in the order.
    pub fn position(&self, v: usize) -> usize {
        self.pos[v]
    }

    /// Vertex at position i.
    pub fn at(&self, i: usize) -> usize {
        self.order[i]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.order
    }

    pub fn reversed(&self) -> VertexOrder {
        let mut order = self.order.clone();
        order.reverse();
        VertexOrder::new(order).expect("reversal preserves permutation")
    }
}

/// Relation of two edges under a fixed vertex order. Exactly one holds for
/// any pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeRelation {
    SharesEndpoint,
    Crosses,
    Nests,
    Sequential,
}

/// Classify the pair (e, f) under `order`: with e = vw, f = xy written so
/// v ≺ w and x ≺ y, the edges cross if v ≺ x ≺ w ≺ y (either way round) and
/// nest if v ≺ x ≺ y ≺ w (either way round).
pub fn edge_relation(order: &VertexOrder, e: Edge, f: Edge) -> EdgeRelation {
    if e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1 {
        return EdgeRelation::SharesEndpoint;
    }
    let span = |(a, b): Edge| {
        let (pa, pb) = (order.position(a), order.position(b));
        if pa < pb {
            (pa, pb)
        } else {
            (pb, pa)
        }
    };
    let (ev, ew) = span(e);
    let (fx, fy) = span(f);
    let (v, w, x, y) = if ev < fx { (ev, ew, fx, fy) } else { (fx, fy, ev, ew) };
    debug_assert!(v < x);
    if x < w && w < y {
        EdgeRelation::Crosses
    } else if y < w {
        EdgeRelation::Nests
    } else {
        debug_assert!(w < x);
        EdgeRelation::Sequential
    }
}

/// Two same-page edges in the forbidden relation, with enough context to be
/// re-checked independently of how the certificate was found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ViolationCertificate {
    pub first: Edge,
    pub second: Edge,
    pub page: usize,
    /// Positions of first.0, first.1, second.0, second.1 in the order.
    pub positions: [usize; 4],
    pub kind: LayoutKind,
}

impl ViolationCertificate {
    /// Re-check this certificate against a layout: both edges must carry the
    /// recorded page and be in the forbidden relation for the layout kind.
    pub fn recheck(&self, layout: &LinearLayout) -> bool {
        let forbidden = match self.kind {
            LayoutKind::Stack => EdgeRelation::Crosses,
            LayoutKind::Queue => EdgeRelation::Nests,
        };
        layout.page_of(self.first) == Some(self.page)
            && layout.page_of(self.second) == Some(self.page)
            && self.kind == layout.kind
            && edge_relation(&layout.order, self.first, self.second) == forbidden
            && self.positions
                == [
                    layout.order.position(self.first.0),
                    layout.order.position(self.first.1),
                    layout.order.position(self.second.0),
                    layout.order.position(self.second.1),
                ]
    }
}

/// A stack or queue layout: vertex order, page assignment and page count.
/// Pages are numbered 1..=page_count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearLayout {
    pub kind: LayoutKind,
    pub order: VertexOrder,
    pages: BTreeMap<Edge, usize>,
    pub page_count: usize,
}

impl LinearLayout {
    pub fn new(
        kind: LayoutKind,
        order: VertexOrder,
        pages: BTreeMap<Edge, usize>,
        page_count: usize,
    ) -> Result<LinearLayout> {
        if page_count == 0 {
            return Err(Error::InvalidLayout("page_count must be positive".into()));
        }
        for (&(u, v), &p) in &pages {
            if u >= v {
                return Err(Error::InvalidLayout(format!(
                    "edge ({u}, {v}) not in canonical form"
                )));
            }
            if v >= order.len() {
                return Err(Error::InvalidLayout(format!("edge ({u}, {v}) out of range")));
            }
            if p == 0 || p > page_count {
                return Err(Error::InvalidLayout(format!(
                    "page {p} for edge ({u}, {v}) outside 1..={page_count}"
                )));
            }
        }
        Ok(LinearLayout {
            kind,
            order,
            pages,
            page_count,
        })
    }

    pub fn page_of(&self, e: Edge) -> Option<usize> {
        self.pages.get(&edge(e.0, e.1)).copied()
    }

    /// Edge/page pairs in canonical edge order.
    pub fn pages(&self) -> impl Iterator<Item = (Edge, usize)> + '_ {
        self.pages.iter().map(|(&e, &p)| (e, p))
    }

    pub fn assigned_edge_count(&self) -> usize {
        self.pages.len()
    }

    /// Check that the assigned edges are exactly the edges of `g`.
    pub fn covers(&self, g: &Graph) -> Result<()> {
        if self.order.len() != g.vertex_count() {
            return Err(Error::LayoutMismatch(format!(
                "order covers {} vertices, graph has {}",
                self.order.len(),
                g.vertex_count()
            )));
        }
        if self.pages.len() != g.edge_count() {
            return Err(Error::LayoutMismatch(format!(
                "layout assigns {} edges, graph has {}",
                self.pages.len(),
                g.edge_count()
            )));
        }
        for &e in self.pages.keys() {
            if !g.has_edge(e.0, e.1) {
                return Err(Error::LayoutMismatch(format!(
                    "layout assigns edge ({}, {}) not in graph",
                    e.0, e.1
                )));
            }
        }
        Ok(())
    }

    /// Restrict the layout to the induced subgraph on `vertices` (relative
    /// order kept, pages inherited, new ids = index into `vertices`).
    pub fn restrict(&self, vertices: &[usize]) -> Result<LinearLayout> {
        let mut map = vec![usize::MAX; self.order.len()];
        for (new, &old) in vertices.iter().enumerate() {
            map[old] = new;
        }
        let mut order: Vec<usize> = self
            .order
            .as_slice()
            .iter()
            .filter(|&&v| map[v] != usize::MAX)
            .map(|&v| map[v])
            .collect();
        let pages = self
            .pages
            .iter()
            .filter(|(&(u, v), _)| map[u] != usize::MAX && map[v] != usize::MAX)
            .map(|(&(u, v), &p)| (edge(map[u], map[v]), p))
            .collect();
        LinearLayout::new(self.kind, VertexOrder::new(std::mem::take(&mut order))?, pages, self.page_count)
    }
}

fn make_certificate(layout: &LinearLayout, e: Edge, f: Edge, page: usize) -> ViolationCertificate {
    ViolationCertificate {
        first: e,
        second: f,
        page,
        positions: [
            layout.order.position(e.0),
            layout.order.position(e.1),
            layout.order.position(f.0),
            layout.order.position(f.1),
        ],
        kind: layout.kind,
    }
}

/// Quadratic pair scan over every page: lists every same-page crossing
/// (stack) or nesting (queue) pair. Empty result means the layout is valid.
///
/// Certificates come out ordered by (page, first edge, second edge). This is
/// the testing oracle; `verify_layout_fast` must agree with it exactly.
pub fn verify_layout(g: &Graph, layout: &LinearLayout) -> Result<Vec<ViolationCertificate>> {
    layout.covers(g)?;
    let forbidden = match layout.kind {
        LayoutKind::Stack => EdgeRelation::Crosses,
        LayoutKind::Queue => EdgeRelation::Nests,
    };
    let mut by_page: BTreeMap<usize, Vec<Edge>> = BTreeMap::new();
    for (e, p) in layout.pages() {
        by_page.entry(p).or_default().push(e);
    }
    let mut out = Vec::new();
    for (&page, edges) in &by_page {
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                if edge_relation(&layout.order, edges[i], edges[j]) == forbidden {
                    out.push(make_certificate(layout, edges[i], edges[j], page));
                }
            }
        }
    }
    Ok(out)
}

/// Sweep-based fast path: checks each page with an O(E log E) scan and only
/// falls back to the pair scan on pages that actually contain a violation,
/// so the certificate set is identical to `verify_layout`'s.
pub fn verify_layout_fast(g: &Graph, layout: &LinearLayout) -> Result<Vec<ViolationCertificate>> {
    layout.covers(g)?;
    let mut by_page: BTreeMap<usize, Vec<Edge>> = BTreeMap::new();
    for (e, p) in layout.pages() {
        by_page.entry(p).or_default().push(e);
    }
    let forbidden = match layout.kind {
        LayoutKind::Stack => EdgeRelation::Crosses,
        LayoutKind::Queue => EdgeRelation::Nests,
    };
    let mut out = Vec::new();
    for (&page, edges) in &by_page {
        let clean = match layout.kind {
            LayoutKind::Stack => page_is_noncrossing(&layout.order, edges),
            LayoutKind::Queue => page_is_nonnesting(&layout.order, edges),
        };
        if clean {
            continue;
        }
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                if edge_relation(&layout.order, edges[i], edges[j]) == forbidden {
                    out.push(make_certificate(layout, edges[i], edges[j], page));
                }
            }
        }
    }
    Ok(out)
}

fn spans(order: &VertexOrder, edges: &[Edge]) -> Vec<(usize, usize)> {
    edges
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (order.position(u), order.position(v));
            if a < b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect()
}

/// True iff no two disjoint edges on this page cross. Stack sweep: process
/// endpoints left to right keeping an open-edge stack; a pop that is not the
/// top of the stack means a crossing, except that pairs sharing an endpoint
/// never cross and are filtered out.
fn page_is_noncrossing(order: &VertexOrder, edges: &[Edge]) -> bool {
    let mut sp = spans(order, edges);
    sp.sort_unstable();
    // Sweep with a stack of right endpoints; shared endpoints are rare in a
    // single page, so handle them by a local disjointness re-check.
    let mut open: Vec<(usize, usize)> = Vec::new(); // (left, right)
    for &(l, r) in &sp {
        while let Some(&(_, or)) = open.last() {
            if or <= l {
                open.pop();
            } else {
                break;
            }
        }
        for &(ol, or) in &open {
            // open edge (ol, or) with or > l; crossing iff l strictly inside
            // and r strictly outside, with all four positions distinct.
            if ol < l && l < or && or < r {
                return false;
            }
        }
        open.push((l, r));
    }
    true
}

/// True iff no two disjoint edges on this page nest. Sort by left endpoint
/// ascending, right descending; a nesting exists iff some later edge sits
/// strictly inside an earlier one.
fn page_is_nonnesting(order: &VertexOrder, edges: &[Edge]) -> bool {
    let mut sp = spans(order, edges);
    sp.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let mut max_right_of_strictly_left = 0usize;
    let mut prev_left = usize::MAX;
    let mut group_max = 0usize;
    for &(l, r) in &sp {
        if l != prev_left {
            max_right_of_strictly_left = max_right_of_strictly_left.max(group_max);
            group_max = 0;
            prev_left = l;
        }
        // nesting: some earlier edge (l', r') with l' < l and r < r'
        if max_right_of_strictly_left > r {
            return false;
        }
        group_max = group_max.max(r);
    }
    true
}

/// Verdict of the strict-queue check: `Ok(None)` means strict, otherwise the
/// violating triple (u, v, w) with v, w neighbours of u on the same side
/// sharing a queue.
pub fn is_strict_queue(g: &Graph, layout: &LinearLayout) -> Result<Option<(usize, usize, usize)>> {
    if layout.kind != LayoutKind::Queue {
        return Err(Error::InvalidLayout("strictness applies to queue layouts".into()));
    }
    if !verify_layout(g, layout)?.is_empty() {
        return Err(Error::InvalidLayout(
            "strictness check requires a valid queue layout".into(),
        ));
    }
    let adj = g.adjacency();
    for u in 0..g.vertex_count() {
        let pu = layout.order.position(u);
        let mut after: BTreeMap<usize, usize> = BTreeMap::new();
        let mut before: BTreeMap<usize, usize> = BTreeMap::new();
        for &v in &adj[u] {
            let page = layout.page_of(edge(u, v)).unwrap();
            let side = if layout.order.position(v) > pu {
                &mut after
            } else {
                &mut before
            };
            if let Some(&w) = side.get(&page) {
                return Ok(Some((u, w.min(v), w.max(v))));
            }
            side.insert(page, v);
        }
    }
    Ok(None)
}

/// Verdict of the dispersability check: `Ok(None)` iff the page assignment
/// is a proper edge colouring; otherwise a pair of incident same-page edges.
pub fn is_dispersable(g: &Graph, layout: &LinearLayout) -> Result<Option<(Edge, Edge)>> {
    if layout.kind != LayoutKind::Stack {
        return Err(Error::InvalidLayout(
            "dispersability applies to stack layouts".into(),
        ));
    }
    if !verify_layout(g, layout)?.is_empty() {
        return Err(Error::InvalidLayout(
            "dispersability check requires a valid stack layout".into(),
        ));
    }
    let mut seen: BTreeMap<(usize, usize), Edge> = BTreeMap::new();
    for (e, p) in layout.pages() {
        for end in [e.0, e.1] {
            if let Some(&f) = seen.get(&(end, p)) {
                return Ok(Some((f.min(e), f.max(e))));
            }
            seen.insert((end, p), e);
        }
    }
    Ok(None)
}

/// True iff the given edges (pairwise disjoint as vertex sets) pairwise
/// cross under `order`. Errors if any two share an endpoint.
pub fn verify_pairwise_crossing(order: &VertexOrder, edges: &[Edge]) -> Result<bool> {
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            match edge_relation(order, edges[i], edges[j]) {
                EdgeRelation::SharesEndpoint => {
                    return Err(Error::Precondition(format!(
                        "edges ({}, {}) and ({}, {}) share an endpoint",
                        edges[i].0, edges[i].1, edges[j].0, edges[j].1
                    )))
                }
                EdgeRelation::Crosses => {}
                _ => return Ok(false),
            }
        }
    }
    Ok(true)
}

/// Read the text layout format:
/// line 1 `layout <stack|queue> <page_count>`, line 2 `order v0 v1 ...`,
/// then one `page <u> <v> <p>` line per edge.
pub fn read_layout<R: BufRead>(reader: R) -> Result<LinearLayout> {
    let mut kind: Option<LayoutKind> = None;
    let mut page_count = 0usize;
    let mut order: Option<VertexOrder> = None;
    let mut pages: BTreeMap<Edge, usize> = BTreeMap::new();
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut parts = content.split_whitespace();
        let tag = parts.next().unwrap();
        match tag {
            "layout" => {
                let k = parts.next().ok_or(Error::Parse {
                    line: lineno,
                    msg: "missing layout kind".into(),
                })?;
                kind = Some(match k {
                    "stack" => LayoutKind::Stack,
                    "queue" => LayoutKind::Queue,
                    other => {
                        return Err(Error::Parse {
                            line: lineno,
                            msg: format!("unknown layout kind `{other}`"),
                        })
                    }
                });
                page_count = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or(Error::Parse {
                        line: lineno,
                        msg: "missing or invalid page count".into(),
                    })?;
            }
            "order" => {
                let vs: std::result::Result<Vec<usize>, _> =
                    parts.by_ref().map(|s| s.parse()).collect();
                let vs = vs.map_err(|_| Error::Parse {
                    line: lineno,
                    msg: "invalid vertex id in order".into(),
                })?;
                order = Some(VertexOrder::new(vs).map_err(|e| Error::Parse {
                    line: lineno,
                    msg: e.to_string(),
                })?);
            }
            "page" => {
                let mut next = |what: &str| -> Result<usize> {
                    parts
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or(Error::Parse {
                            line: lineno,
                            msg: format!("missing or invalid {what}"),
                        })
                };
                let u = next("edge endpoint")?;
                let v = next("edge endpoint")?;
                let p = next("page index")?;
                if pages.insert(edge(u, v), p).is_some() {
                    return Err(Error::Parse {
                        line: lineno,
                        msg: format!("duplicate page assignment for edge ({u}, {v})"),
                    });
                }
            }
            other => {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("unknown directive `{other}`"),
                })
            }
        }
    }
    let kind = kind.ok_or(Error::Parse {
        line: 0,
        msg: "missing layout header".into(),
    })?;
    let order = order.ok_or(Error::Parse {
        line: 0,
        msg: "missing order line".into(),
    })?;
    LinearLayout::new(kind, order, pages, page_count)
}

/// Write the text layout format; output is deterministic and round-trips
/// byte-identically.
pub fn write_layout(layout: &LinearLayout) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "layout {} {}",
        layout.kind.as_str(),
        layout.page_count
    )
    .unwrap();
    write!(out, "order").unwrap();
    for &v in layout.order.as_slice() {
        write!(out, " {v}").unwrap();
    }
    writeln!(out).unwrap();
    for ((u, v), p) in layout.pages() {
        writeln!(out, "page {u} {v} {p}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_path, Graph};

    fn ord(v: Vec<usize>) -> VertexOrder {
        VertexOrder::new(v).unwrap()
    }

    #[test]
    fn relations_on_four_points() {
        let o = ord(vec![0, 1, 2, 3]);
        assert_eq!(edge_relation(&o, (0, 2), (1, 3)), EdgeRelation::Crosses);
        assert_eq!(edge_relation(&o, (0, 3), (1, 2)), EdgeRelation::Nests);
        assert_eq!(edge_relation(&o, (0, 1), (2, 3)), EdgeRelation::Sequential);
        assert_eq!(
            edge_relation(&o, (0, 1), (1, 2)),
            EdgeRelation::SharesEndpoint
        );
    }

    #[test]
    fn relations_symmetric_and_reversal_invariant() {
        let o = ord(vec![3, 0, 2, 1]);
        let r = o.reversed();
        for (e, f) in [((0, 2), (1, 3)), ((0, 3), (1, 2)), ((0, 1), (2, 3))] {
            assert_eq!(edge_relation(&o, e, f), edge_relation(&o, f, e));
            assert_eq!(edge_relation(&o, e, f), edge_relation(&r, e, f));
        }
    }

    fn layout_of(
        kind: LayoutKind,
        order: Vec<usize>,
        pages: &[((usize, usize), usize)],
        page_count: usize,
    ) -> LinearLayout {
        LinearLayout::new(
            kind,
            ord(order),
            pages.iter().map(|&(e, p)| (edge(e.0, e.1), p)).collect(),
            page_count,
        )
        .unwrap()
    }

    #[test]
    fn single_edge_always_valid() {
        let g = make_path(2);
        for kind in [LayoutKind::Stack, LayoutKind::Queue] {
            let l = layout_of(kind, vec![0, 1], &[((0, 1), 1)], 1);
            assert!(verify_layout(&g, &l).unwrap().is_empty());
        }
    }

    #[test]
    fn forced_stack_crossing_certificate() {
        let g = Graph::new(4, [(0, 2), (1, 3)]).unwrap();
        let l = layout_of(
            LayoutKind::Stack,
            vec![0, 1, 2, 3],
            &[((0, 2), 1), ((1, 3), 1)],
            1,
        );
        let certs = verify_layout(&g, &l).unwrap();
        assert_eq!(certs.len(), 1);
        let c = &certs[0];
        assert_eq!(c.first, (0, 2));
        assert_eq!(c.second, (1, 3));
        assert_eq!(c.page, 1);
        assert!(c.recheck(&l));
    }

    #[test]
    fn mismatched_edge_set_rejected() {
        let g = Graph::new(4, [(0, 2), (1, 3)]).unwrap();
        let l = layout_of(LayoutKind::Stack, vec![0, 1, 2, 3], &[((0, 2), 1)], 1);
        assert!(verify_layout(&g, &l).is_err());
        let l = layout_of(
            LayoutKind::Stack,
            vec![0, 1, 2, 3],
            &[((0, 2), 1), ((0, 3), 1)],
            1,
        );
        assert!(verify_layout(&g, &l).is_err());
    }

    #[test]
    fn strictness_witness() {
        // star with both leaf edges after the root on one queue
        let g = Graph::new(3, [(0, 1), (0, 2)]).unwrap();
        let l = layout_of(
            LayoutKind::Queue,
            vec![0, 1, 2],
            &[((0, 1), 1), ((0, 2), 1)],
            1,
        );
        assert_eq!(is_strict_queue(&g, &l).unwrap(), Some((0, 1, 2)));

        let l = layout_of(
            LayoutKind::Queue,
            vec![0, 1, 2],
            &[((0, 1), 1), ((0, 2), 2)],
            2,
        );
        assert_eq!(is_strict_queue(&g, &l).unwrap(), None);

        // single edge is trivially strict
        let g = make_path(2);
        let l = layout_of(LayoutKind::Queue, vec![0, 1], &[((0, 1), 1)], 1);
        assert_eq!(is_strict_queue(&g, &l).unwrap(), None);
    }

    #[test]
    fn dispersability_witness() {
        let g = make_path(3);
        let both = layout_of(
            LayoutKind::Stack,
            vec![0, 1, 2],
            &[((0, 1), 1), ((1, 2), 1)],
            1,
        );
        assert!(is_dispersable(&g, &both).unwrap().is_some());

        let split = layout_of(
            LayoutKind::Stack,
            vec![0, 1, 2],
            &[((0, 1), 1), ((1, 2), 2)],
            2,
        );
        assert_eq!(is_dispersable(&g, &split).unwrap(), None);

        // perfect matching on one page
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let m = layout_of(
            LayoutKind::Stack,
            vec![0, 1, 2, 3],
            &[((0, 1), 1), ((2, 3), 1)],
            1,
        );
        assert_eq!(is_dispersable(&g, &m).unwrap(), None);
    }

    #[test]
    fn pairwise_crossing_checks() {
        let o = ord((0..6).collect());
        assert!(!verify_pairwise_crossing(&o, &[(0, 2), (1, 4), (3, 5)]).unwrap());
        assert!(verify_pairwise_crossing(&o, &[(0, 3), (1, 4), (2, 5)]).unwrap());
        assert!(verify_pairwise_crossing(&o, &[(0, 3)]).unwrap());
        assert!(verify_pairwise_crossing(&o, &[]).unwrap());
        assert!(verify_pairwise_crossing(&o, &[(0, 2), (2, 4)]).is_err());
    }

    #[test]
    fn fast_path_matches_oracle() {
        use rand::prelude::*;
        use rand::rngs::StdRng;
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(2..10);
            let g = random_graph(&mut rng, n);
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(&mut rng);
            let kind = if rng.gen() {
                LayoutKind::Stack
            } else {
                LayoutKind::Queue
            };
            let pc = rng.gen_range(1..4);
            let pages = g
                .edges()
                .iter()
                .map(|&e| (e, rng.gen_range(1..=pc)))
                .collect();
            let l = LinearLayout::new(kind, ord(order), pages, pc).unwrap();
            assert_eq!(
                verify_layout(&g, &l).unwrap(),
                verify_layout_fast(&g, &l).unwrap()
            );
        }
    }

    fn random_graph(rng: &mut impl rand::Rng, n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(0.4) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn layout_round_trip() {
        let l = layout_of(
            LayoutKind::Queue,
            vec![2, 0, 1, 3],
            &[((0, 2), 1), ((1, 3), 2)],
            2,
        );
        let text = write_layout(&l);
        let back = read_layout(text.as_bytes()).unwrap();
        assert_eq!(back, l);
        assert_eq!(write_layout(&back), text);
    }

    #[test]
    fn restriction_keeps_validity() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let l = layout_of(
            LayoutKind::Stack,
            vec![0, 1, 2, 3, 4],
            &[((0, 1), 1), ((1, 2), 1), ((2, 3), 1), ((3, 4), 1), ((0, 4), 1)],
            1,
        );
        assert!(verify_layout(&g, &l).unwrap().is_empty());
        let verts = [0, 1, 2, 3];
        let sub = crate::graph::induced_subgraph(&g, &verts).unwrap();
        let sl = l.restrict(&verts).unwrap();
        assert!(verify_layout(&sub, &sl).unwrap().is_empty());
    }
}
