//! The refutation pipeline: given a claimed s-stack layout of a star/grid
//! product, either produce a machine-checkable violation certificate or a
//! report of the sizes achieved at every stage.
//!
//! Stages: uniform-order classification of the leaf copies, uniform-colour
//! classification, simultaneous monotone leaf extraction, red/blue board
//! colouring, monochromatic path, and the iterative halving ("twister")
//! that turns the path into a large pairwise-crossing edge family. All size
//! bounds are checked in exact integer arithmetic.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::{cartesian_product, edge, make_hex_grid, make_star, Edge, Graph};
use crate::hex::{find_monochromatic_path, Colour, Colouring, GridPath};
use crate::layout::{
    edge_relation, verify_pairwise_crossing, EdgeRelation, LayoutKind, LinearLayout,
    ViolationCertificate,
};

/// The product `S_b □ H_n`: star vertex v1 (root 0, leaves 1..=b) and grid
/// vertex p combine into product id `v1 * n^2 + p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductShape {
    pub b: usize,
    pub n: usize,
}

impl ProductShape {
    #[inline]
    pub fn grid_size(&self) -> usize {
        self.n * self.n
    }

    #[inline]
    pub fn product_id(&self, star_v: usize, grid_p: usize) -> usize {
        star_v * self.grid_size() + grid_p
    }
}

/// Recognize a graph as `S_b □ H_n` under the canonical id maps. Larger n
/// is preferred when the vertex count is ambiguous.
pub fn infer_star_hex_shape(g: &Graph) -> Option<ProductShape> {
    let total = g.vertex_count();
    if total == 0 {
        return None;
    }
    let mut n = (total as f64).sqrt() as usize + 1;
    while n >= 1 {
        let nn = n * n;
        if nn <= total && total % nn == 0 {
            let b = total / nn - 1;
            let star = make_star(b);
            if let Ok(hex) = make_hex_grid(n) {
                if let Ok(prod) = cartesian_product(&star, &hex) {
                    if prod.edges() == g.edges() {
                        return Some(ProductShape { b, n });
                    }
                }
            }
        }
        n -= 1;
    }
    None
}

/// Lemma-2.1 stage output: a largest set of leaves whose copies of the grid
/// all appear in the same internal order.
#[derive(Debug, Clone)]
pub struct LeafClassification {
    pub shape: ProductShape,
    /// The common permutation: grid ids in layout order.
    pub pi: Vec<usize>,
    /// The class, ascending star leaf ids.
    pub leaves: Vec<usize>,
    pub a: usize,
}

/// Lemma-2.2 stage output: the sub-class whose copies also agree on the
/// per-copy edge page assignment.
#[derive(Debug, Clone)]
pub struct ColourClassification {
    pub shape: ProductShape,
    /// Common page per grid edge.
    pub colouring: BTreeMap<Edge, usize>,
    pub leaves: Vec<usize>,
    pub c: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Backward,
}

/// Lemma-2.3 stage output: leaves u_1..u_d whose copies of every grid vertex
/// appear strictly monotonically, plus the per-vertex direction.
#[derive(Debug, Clone)]
pub struct MonotoneLeaves {
    pub shape: ProductShape,
    pub leaves: Vec<usize>,
    /// Direction per grid id. All Forward when d <= 1 (convention).
    pub directions: Vec<Direction>,
    pub d: usize,
}

/// One level of the twister: the surviving leaves and their group position
/// intervals, which must satisfy (C1) and (C2).
#[derive(Debug, Clone)]
pub struct TwisterState {
    pub level: usize,
    pub leaves: Vec<usize>,
    /// Position interval (min, max) of each leaf's group, in leaf order.
    pub groups: Vec<(usize, usize)>,
    pub size: usize,
}

#[derive(Debug, Clone)]
pub enum TwisterOutcome {
    Certificate(ViolationCertificate),
    Family(Vec<Edge>),
}

/// Exact bounds from the proof-scale parameter formulas.
#[derive(Debug, Clone)]
pub struct Parameters {
    pub s: usize,
    pub n: usize,
    pub b: BigUint,
    pub a_min: BigUint,
    pub c_min: BigUint,
    pub d_min: BigUint,
    pub family_size: usize,
}

/// Pipeline report when no certificate was produced.
#[derive(Debug, Clone)]
pub struct Report {
    pub a: usize,
    pub c: usize,
    pub d: usize,
    pub path_colour: Colour,
    pub path_len: usize,
    pub family_size: usize,
    /// Parameters that would guarantee a certificate at this s, when they
    /// are representable (the integers are astronomically large already for
    /// small s).
    pub required: Option<Parameters>,
}

#[derive(Debug, Clone)]
pub enum RefutationOutcome {
    Certificate(ViolationCertificate),
    Report(Report),
}

/// Intermediate artifacts of a full pipeline run.
#[derive(Debug, Clone)]
pub struct RefutationTrace {
    pub shape: ProductShape,
    pub s: usize,
    pub order_stage: LeafClassification,
    pub colour_stage: ColourClassification,
    pub monotone_stage: MonotoneLeaves,
    pub board: Colouring,
    pub path: GridPath,
    pub path_colour: Colour,
    pub levels: Vec<TwisterState>,
    pub family_size: usize,
}

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).map(BigUint::from).fold(BigUint::one(), |a, b| a * b)
}

/// Exact check of `d^(2^exp_log) >= c` without materializing the tower.
fn iterated_root_bound_holds(d: usize, c: usize, exp_log: u32) -> bool {
    if c <= 1 {
        return true;
    }
    if d <= 1 {
        return false;
    }
    // minimal k with d^k >= c; k <= bits(c) since d >= 2
    let (mut k, mut acc) = (0u128, 1u128);
    let (d, c) = (d as u128, c as u128);
    while acc < c {
        acc = acc.saturating_mul(d);
        k += 1;
    }
    if exp_log >= 127 {
        return true;
    }
    k <= 1u128 << exp_log
}

/// Lemma-2.1 classification: bucket the leaves by the order their grid copy
/// appears in, and return a largest bucket (ties broken by lexicographically
/// least permutation).
pub fn classify_by_order(
    b: usize,
    n: usize,
    layout: &LinearLayout,
) -> Result<LeafClassification> {
    let shape = ProductShape { b, n };
    let nn = shape.grid_size();
    if layout.order.len() != (b + 1) * nn {
        return Err(Error::LayoutMismatch(format!(
            "order covers {} vertices, S_{b} x H_{n} has {}",
            layout.order.len(),
            (b + 1) * nn
        )));
    }
    let mut classes: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for v in 1..=b {
        let mut pi: Vec<usize> = (0..nn).collect();
        pi.sort_by_key(|&p| layout.order.position(shape.product_id(v, p)));
        classes.entry(pi).or_default().push(v);
    }
    let best = classes
        .iter()
        .max_by(|(pa, la), (pb, lb)| {
            // largest class; among equals the lexicographically least pi,
            // which comes first in the BTreeMap, so prefer the earlier key
            la.len().cmp(&lb.len()).then(pb.cmp(pa))
        })
        .map(|(pi, leaves)| (pi.clone(), leaves.clone()));
    let (pi, leaves) = best.unwrap_or_else(|| ((0..nn).collect(), Vec::new()));
    let a = leaves.len();
    // pigeonhole: a * (n^2)! >= b
    assert!(
        BigUint::from(a) * factorial(nn) >= BigUint::from(b),
        "pigeonhole bound a >= b/(n^2)! violated"
    );
    Ok(LeafClassification { shape, pi, leaves, a })
}

/// Lemma-2.2 classification: within the uniform-order class, bucket by the
/// exact per-copy edge page assignment and return a largest bucket.
pub fn classify_by_colour(
    cls: &LeafClassification,
    layout: &LinearLayout,
    s: usize,
) -> Result<ColourClassification> {
    let shape = cls.shape;
    let grid = make_hex_grid(shape.n)?;
    let mut classes: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for &v in &cls.leaves {
        let mut key = Vec::with_capacity(grid.edge_count());
        for &(p, q) in grid.edges() {
            let e = edge(shape.product_id(v, p), shape.product_id(v, q));
            let page = layout.page_of(e).ok_or_else(|| {
                Error::LayoutMismatch(format!(
                    "copy edge ({}, {}) of leaf {v} has no page",
                    e.0, e.1
                ))
            })?;
            key.push(page);
        }
        classes.entry(key).or_default().push(v);
    }
    let best = classes
        .iter()
        .max_by(|(pa, la), (pb, lb)| la.len().cmp(&lb.len()).then(pb.cmp(pa)))
        .map(|(key, leaves)| (key.clone(), leaves.clone()));
    let (key, leaves) = best.unwrap_or_else(|| (vec![1; grid.edge_count()], Vec::new()));
    let colouring = grid
        .edges()
        .iter()
        .copied()
        .zip(key.iter().copied())
        .collect();
    let c = leaves.len();
    // pigeonhole over the fewer-than-s^(3n^2) possible colourings
    let exponent = 3 * shape.grid_size();
    assert!(
        BigUint::from(c) * BigUint::from(s.max(1)).pow(exponent as u32) >= BigUint::from(cls.a),
        "pigeonhole bound c >= a/s^(3n^2) violated"
    );
    Ok(ColourClassification { shape, colouring, leaves, c })
}

fn lis_indices(values: &[i64]) -> Vec<usize> {
    // patience piles: tails[k] = index of the smallest tail of an increasing
    // subsequence of length k+1
    let mut tails: Vec<usize> = Vec::new();
    let mut prev: Vec<Option<usize>> = vec![None; values.len()];
    for (i, &v) in values.iter().enumerate() {
        let pos = tails.partition_point(|&t| values[t] < v);
        prev[i] = if pos > 0 { Some(tails[pos - 1]) } else { None };
        if pos == tails.len() {
            tails.push(i);
        } else {
            tails[pos] = i;
        }
    }
    let mut out = Vec::new();
    let mut cur = tails.last().copied();
    while let Some(i) = cur {
        out.push(i);
        cur = prev[i];
    }
    out.reverse();
    out
}

/// Longest monotone subsequence of a sequence of distinct numbers, as
/// indices into the input, via patience sorting both ways. Ties between the
/// increasing and decreasing winner go to the increasing one. The result
/// always has length at least ceil(sqrt(m)).
pub fn erdos_szekeres_monotone(values: &[usize]) -> (Vec<usize>, Direction) {
    let as_i64: Vec<i64> = values.iter().map(|&v| v as i64).collect();
    let inc = lis_indices(&as_i64);
    let negated: Vec<i64> = as_i64.iter().map(|&v| -v).collect();
    let dec = lis_indices(&negated);
    if inc.len() >= dec.len() {
        (inc, Direction::Forward)
    } else {
        (dec, Direction::Backward)
    }
}

/// Lemma-2.3 extraction: refine the uniform class grid vertex by grid vertex
/// (row-major) with Erdős–Szekeres until every grid copy appears strictly
/// monotonically across the surviving leaves.
pub fn monotone_leaf_sequence(
    cc: &ColourClassification,
    layout: &LinearLayout,
    n: usize,
) -> Result<MonotoneLeaves> {
    let shape = cc.shape;
    if shape.n != n {
        return Err(Error::Precondition(format!(
            "classification is for n = {}, not {n}",
            shape.n
        )));
    }
    let nn = shape.grid_size();
    let mut seq: Vec<usize> = cc.leaves.clone();
    seq.sort_by_key(|&v| layout.order.position(shape.product_id(v, 0)));
    for p in 1..nn {
        let positions: Vec<usize> = seq
            .iter()
            .map(|&v| layout.order.position(shape.product_id(v, p)))
            .collect();
        let (keep, _) = erdos_szekeres_monotone(&positions);
        seq = keep.into_iter().map(|i| seq[i]).collect();
    }
    let d = seq.len();
    // per-vertex monotonicity is verified before returning
    let mut directions = Vec::with_capacity(nn);
    for p in 0..nn {
        let positions: Vec<usize> = seq
            .iter()
            .map(|&v| layout.order.position(shape.product_id(v, p)))
            .collect();
        let dir = if d <= 1 || positions.windows(2).all(|w| w[0] < w[1]) {
            Direction::Forward
        } else if positions.windows(2).all(|w| w[0] > w[1]) {
            Direction::Backward
        } else {
            return Err(Error::Precondition(format!(
                "extracted leaves are not monotone at grid vertex {p}"
            )));
        };
        directions.push(dir);
    }
    assert!(
        iterated_root_bound_holds(d, cc.c, (nn - 1) as u32),
        "Erdős–Szekeres chain bound d >= c^(1/2^(n^2-1)) violated"
    );
    Ok(MonotoneLeaves { shape, leaves: seq, directions, d })
}

/// The board colouring between Lemmas 2.3 and 2.4: a grid vertex is red iff
/// its copies appear forward-monotonically.
pub fn red_blue_colouring(ml: &MonotoneLeaves) -> Colouring {
    let colours = ml
        .directions
        .iter()
        .map(|d| match d {
            Direction::Forward => Colour::Red,
            Direction::Backward => Colour::Blue,
        })
        .collect();
    Colouring::new(ml.shape.n, colours).expect("directions cover the grid")
}

fn copy_edge(shape: ProductShape, v: usize, p: usize, q: usize) -> Edge {
    edge(shape.product_id(v, p), shape.product_id(v, q))
}

fn certificate_for(
    layout: &LinearLayout,
    e: Edge,
    f: Edge,
    page: usize,
) -> ViolationCertificate {
    let (first, second) = if e <= f { (e, f) } else { (f, e) };
    ViolationCertificate {
        first,
        second,
        page,
        positions: [
            layout.order.position(first.0),
            layout.order.position(first.1),
            layout.order.position(second.0),
            layout.order.position(second.1),
        ],
        kind: LayoutKind::Stack,
    }
}

/// Lemma-2.5 twister. `ml.leaves` must already be oriented so that along the
/// path the copies appear in increasing position (reverse the sequence for a
/// blue path). Returns either a violation certificate — found the moment the
/// perfect-interleaving claim fails — or a pairwise crossing family of size
/// at least min{floor(d / 2^len(path)), ceil(len(path) / 2)}, together with
/// the per-level twister states.
pub fn twister_extract(
    layout: &LinearLayout,
    ml: &MonotoneLeaves,
    path: &GridPath,
    phi: &BTreeMap<Edge, usize>,
    shape: ProductShape,
) -> Result<(TwisterOutcome, Vec<TwisterState>)> {
    let pverts = &path.vertices;
    let np = pverts.len();
    let d = ml.leaves.len();
    let pos = |v: usize, p: usize| layout.order.position(shape.product_id(v, p));

    // path copies must increase across the oriented leaf sequence
    for &p in pverts {
        for w in ml.leaves.windows(2) {
            if pos(w[0], p) >= pos(w[1], p) {
                return Err(Error::Precondition(format!(
                    "leaves {} and {} are not forward-monotone at path vertex {p}",
                    w[0], w[1]
                )));
            }
        }
    }
    // (P1): copy edges along the path carry the common colouring
    for w in pverts.windows(2) {
        let grid_e = edge(w[0], w[1]);
        let want = *phi.get(&grid_e).ok_or_else(|| {
            Error::Precondition(format!(
                "path edge ({}, {}) missing from the common colouring",
                grid_e.0, grid_e.1
            ))
        })?;
        for &v in &ml.leaves {
            let e = copy_edge(shape, v, w[0], w[1]);
            match layout.page_of(e) {
                Some(p) if p == want => {}
                got => {
                    return Err(Error::Precondition(format!(
                        "leaf {v}: copy edge ({}, {}) has page {got:?}, colouring says {want}",
                        e.0, e.1
                    )))
                }
            }
        }
    }

    let mut levels = Vec::new();
    let mut active: Vec<usize> = ml.leaves.clone();
    let record =
        |levels: &mut Vec<TwisterState>, level: usize, active: &[usize]| -> Result<()> {
            let mut groups: Vec<(usize, usize)> = active
                .iter()
                .map(|&v| {
                    let ps = pverts[..level].iter().map(|&p| pos(v, p));
                    let lo = ps.clone().min().unwrap();
                    let hi = ps.max().unwrap();
                    (lo, hi)
                })
                .collect();
            // (C1): level i keeps at least d / 2^(i-1) leaves
            let kept = active.len() as u128;
            assert!(
                kept << (level - 1) >= d as u128,
                "(C1) violated at level {level}"
            );
            // (C2): groups pairwise separated in the order
            groups.sort_unstable();
            for w in groups.windows(2) {
                if w[0].1 >= w[1].0 {
                    return Err(Error::Precondition(format!(
                        "(C2) violated at level {level}: groups [{}, {}] and [{}, {}] overlap",
                        w[0].0, w[0].1, w[1].0, w[1].1
                    )));
                }
            }
            levels.push(TwisterState {
                level,
                leaves: active.to_vec(),
                groups,
                size: active.len(),
            });
            Ok(())
        };
    if !active.is_empty() {
        record(&mut levels, 1, &active)?;
    }

    for i in 2..=np {
        if active.is_empty() {
            break;
        }
        let (p_prev, p_cur) = (pverts[i - 2], pverts[i - 1]);
        // label v_1..v_m by the position of the copy at p_{i-1}
        active.sort_by_key(|&v| pos(v, p_prev));
        // (P3): a single internal direction across the whole level
        let forward = pos(active[0], p_prev) < pos(active[0], p_cur);
        for &v in &active {
            if (pos(v, p_prev) < pos(v, p_cur)) != forward {
                return Err(Error::Precondition(format!(
                    "(P3) violated: leaf {v} runs against the common direction \
                     between path vertices {p_prev} and {p_cur}"
                )));
            }
        }
        // perfect interleaving claim; a failure yields two same-page
        // crossing copy edges
        for j in 0..active.len() - 1 {
            let (v, w) = (active[j], active[j + 1]);
            let ok = if forward {
                pos(v, p_cur) < pos(w, p_prev)
            } else {
                pos(v, p_prev) < pos(w, p_cur)
            };
            if !ok {
                let ev = copy_edge(shape, v, p_prev, p_cur);
                let ew = copy_edge(shape, w, p_prev, p_cur);
                if edge_relation(&layout.order, ev, ew) == EdgeRelation::Crosses {
                    let page = layout.page_of(ev).unwrap();
                    let cert = certificate_for(layout, ev, ew, page);
                    debug_assert!(cert.recheck(layout));
                    return Ok((TwisterOutcome::Certificate(cert), levels));
                }
                return Err(Error::Precondition(format!(
                    "interleave check failed between leaves {v} and {w} without a crossing; \
                     uniformity preconditions do not hold"
                )));
            }
        }
        // keep the odd-labelled leaves
        active = active.iter().step_by(2).copied().collect();
        record(&mut levels, i, &active)?;
    }

    // the two median cases: match groups and path roots across the gap
    let d_prime = active.len();
    active.sort_by_key(|&v| pos(v, pverts[0])); // group order
    let mut roots: Vec<(usize, usize)> = pverts
        .iter()
        .map(|&p| (layout.order.position(shape.product_id(0, p)), p))
        .collect();
    roots.sort_unstable();
    let med = (np + 1) / 2; // ceil(np/2), 1-based root label
    let half = d_prime / 2;
    let group_span = |v: usize| {
        let ps = pverts.iter().map(|&p| pos(v, p));
        (ps.clone().min().unwrap(), ps.max().unwrap())
    };
    let mut family: Vec<Edge> = Vec::new();
    if half >= 1 && np >= 1 {
        let med_pos = roots[med - 1].0;
        if group_span(active[half - 1]).1 < med_pos {
            // groups below the median root, roots r_med..r_np above
            let k = half.min(med);
            for idx in 0..k {
                let v = active[half - k + idx];
                let (_, p) = roots[med - 1 + idx];
                family.push(edge(shape.product_id(0, p), shape.product_id(v, p)));
            }
        } else if half + 1 <= d_prime {
            let first_upper = group_span(active[d_prime - half]).0;
            if first_upper > med_pos {
                // roots r_1..r_med below, upper half of the groups above
                let k = half.min(med);
                for idx in 0..k {
                    let v = active[d_prime - half + idx];
                    let (_, p) = roots[med - k + idx];
                    family.push(edge(shape.product_id(0, p), shape.product_id(v, p)));
                }
            }
        }
    }
    if !family.is_empty() {
        let crossing = verify_pairwise_crossing(&layout.order, &family)?;
        assert!(crossing, "median construction must yield a crossing family");
    }
    Ok((TwisterOutcome::Family(family), levels))
}

/// Execute the full pipeline against a claimed s-stack layout of
/// `S_b □ H_n`. A valid layout always yields a `Report`; a certificate is
/// returned only after re-verification against the layout.
pub fn refute(
    g: &Graph,
    layout: &LinearLayout,
    s: usize,
) -> Result<(RefutationOutcome, RefutationTrace)> {
    let shape = infer_star_hex_shape(g).ok_or_else(|| {
        Error::Precondition("graph is not a star/grid product under the canonical id maps".into())
    })?;
    if layout.kind != LayoutKind::Stack {
        return Err(Error::Precondition("refutation applies to stack layouts".into()));
    }
    if layout.page_count > s {
        return Err(Error::Precondition(format!(
            "layout uses {} pages, claimed bound is {s}",
            layout.page_count
        )));
    }
    layout.covers(g)?;
    if s == 0 {
        return Err(Error::Precondition("s must be at least 1".into()));
    }

    let order_stage = classify_by_order(shape.b, shape.n, layout)?;
    let colour_stage = classify_by_colour(&order_stage, layout, s)?;
    let monotone_stage = monotone_leaf_sequence(&colour_stage, layout, shape.n)?;
    let board = red_blue_colouring(&monotone_stage);
    let (mut path, path_colour) = find_monochromatic_path(shape.n, &board);
    path.vertices.truncate(shape.n);

    let mut oriented = monotone_stage.clone();
    if path_colour == Colour::Blue {
        oriented.leaves.reverse();
    }
    let (outcome, levels) =
        twister_extract(layout, &oriented, &path, &colour_stage.colouring, shape)?;
    let (family_size, result) = match outcome {
        TwisterOutcome::Certificate(cert) => {
            assert!(cert.recheck(layout), "certificate must re-verify");
            (0, RefutationOutcome::Certificate(cert))
        }
        TwisterOutcome::Family(family) => {
            let size = family.len();
            if size >= s + 1 {
                // pigeonhole: two of the pairwise crossing edges share a page
                let mut by_page: BTreeMap<usize, Edge> = BTreeMap::new();
                let mut found = None;
                for &e in &family {
                    let page = layout.page_of(e).expect("family edges are in the layout");
                    if let Some(&f) = by_page.get(&page) {
                        found = Some((f, e, page));
                        break;
                    }
                    by_page.insert(page, e);
                }
                let (e, f, page) = found.expect("s+1 edges over s pages must collide");
                let cert = certificate_for(layout, e, f, page);
                assert!(cert.recheck(layout), "certificate must re-verify");
                (size, RefutationOutcome::Certificate(cert))
            } else {
                let report = Report {
                    a: order_stage.a,
                    c: colour_stage.c,
                    d: monotone_stage.d,
                    path_colour,
                    path_len: path.vertices.len(),
                    family_size: size,
                    required: required_parameters(s).ok(),
                };
                (size, RefutationOutcome::Report(report))
            }
        }
    };
    let trace = RefutationTrace {
        shape,
        s,
        order_stage,
        colour_stage,
        monotone_stage,
        board,
        path,
        path_colour,
        levels,
        family_size,
    };
    Ok((result, trace))
}

/// The proof-scale parameters for a given s: n = 2s+1 and
/// b = (n^2)! * s^(3n^2) * ((s+1) 2^n)^(2^(n^2-1)), all exact.
///
/// Already for s = 1 the integer b has over 300 decimal digits; for s >= 3
/// it cannot be materialized at all (the tower exponent is 2^48), so that
/// range reports a cap error instead.
pub fn required_parameters(s: usize) -> Result<Parameters> {
    if s == 0 {
        return Err(Error::Precondition("s must be at least 1".into()));
    }
    let n = 2 * s + 1;
    let nn = n * n;
    if nn - 1 > 32 {
        return Err(Error::CapExceeded(format!(
            "b for s = {s} needs a 2^{} exponent and cannot be materialized",
            nn - 1
        )));
    }
    let tower: u32 = 1u32 << (nn - 1) as u32;
    let base = BigUint::from((s + 1) * (1usize << n));
    let c_min = base.pow(tower);
    let a_min = BigUint::from(s).pow(3 * nn as u32) * &c_min;
    let b = factorial(nn) * &a_min;
    let d_min = base;
    let family_size = {
        let by_halving = (&d_min >> n).min(BigUint::from((n + 1) / 2));
        usize::try_from(&by_halving).expect("family size is tiny")
    };
    assert_eq!(family_size, s + 1, "the parameter choice pins the family at s+1");
    Ok(Parameters {
        s,
        n,
        b,
        a_min,
        c_min,
        d_min,
        family_size,
    })
}

/// Line-oriented serialization of a trace.
pub fn write_trace(trace: &RefutationTrace, outcome: &RefutationOutcome) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "trace b {} n {} s {}",
        trace.shape.b, trace.shape.n, trace.s
    )
    .unwrap();
    write!(out, "order a {} leaves", trace.order_stage.a).unwrap();
    for v in &trace.order_stage.leaves {
        write!(out, " {v}").unwrap();
    }
    writeln!(out).unwrap();
    write!(out, "pi").unwrap();
    for p in &trace.order_stage.pi {
        write!(out, " {p}").unwrap();
    }
    writeln!(out).unwrap();
    write!(out, "colour c {} leaves", trace.colour_stage.c).unwrap();
    for v in &trace.colour_stage.leaves {
        write!(out, " {v}").unwrap();
    }
    writeln!(out).unwrap();
    for (&(p, q), &page) in &trace.colour_stage.colouring {
        writeln!(out, "phi {p} {q} {page}").unwrap();
    }
    write!(out, "monotone d {} leaves", trace.monotone_stage.d).unwrap();
    for v in &trace.monotone_stage.leaves {
        write!(out, " {v}").unwrap();
    }
    writeln!(out).unwrap();
    write!(out, "directions").unwrap();
    for dir in &trace.monotone_stage.directions {
        write!(
            out,
            " {}",
            match dir {
                Direction::Forward => "f",
                Direction::Backward => "b",
            }
        )
        .unwrap();
    }
    writeln!(out).unwrap();
    write!(out, "path {}", trace.path_colour.as_str()).unwrap();
    for v in &trace.path.vertices {
        write!(out, " {v}").unwrap();
    }
    writeln!(out).unwrap();
    for level in &trace.levels {
        write!(out, "level {} size {} groups", level.level, level.size).unwrap();
        for (lo, hi) in &level.groups {
            write!(out, " {lo}:{hi}").unwrap();
        }
        writeln!(out).unwrap();
    }
    match outcome {
        RefutationOutcome::Certificate(c) => {
            writeln!(
                out,
                "outcome certificate {} {} {} {} page {}",
                c.first.0, c.first.1, c.second.0, c.second.1, c.page
            )
            .unwrap();
        }
        RefutationOutcome::Report(r) => {
            writeln!(
                out,
                "outcome report a {} c {} d {} family {}",
                r.a, r.c, r.d, r.family_size
            )
            .unwrap();
        }
    }
    out
}
