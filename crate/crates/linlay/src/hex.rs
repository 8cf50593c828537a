//! Monochromatic path extraction on the triangulated grid: for any red/blue
//! vertex colouring of `H_n`, find a monochromatic path on at least n
//! vertices.
//!
//! The grid adjacency is the Hex board, so one of two things always holds:
//! some red component touches both the leftmost and rightmost columns, or
//! some blue component touches both the top and bottom rows. A shortest
//! crossing path inside such a component changes the crossing coordinate by
//! at most one per step, so it has at least n vertices.

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{hex_neighbors, GridCoord};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Colour {
    Red,
    Blue,
}

impl Colour {
    pub fn as_str(&self) -> &'static str {
        match self {
            Colour::Red => "red",
            Colour::Blue => "blue",
        }
    }
}

/// A total red/blue colouring of the vertices of `H_n`, indexed by grid id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    n: usize,
    colours: Vec<Colour>,
}

impl Colouring {
    pub fn new(n: usize, colours: Vec<Colour>) -> Result<Colouring> {
        if colours.len() != n * n {
            return Err(Error::Precondition(format!(
                "colouring has {} entries, H_{n} has {}",
                colours.len(),
                n * n
            )));
        }
        Ok(Colouring { n, colours })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn colour(&self, id: usize) -> Colour {
        self.colours[id]
    }
}

/// A path in `H_n`: consecutive vertices adjacent, all distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridPath {
    pub vertices: Vec<usize>,
}

impl GridPath {
    /// Check path validity in `H_n` and monochromaticity under `colouring`.
    pub fn check(&self, n: usize, colouring: Option<&Colouring>) -> Result<()> {
        let mut seen = vec![false; n * n];
        for w in self.vertices.windows(2) {
            if !hex_neighbors(n, w[0]).contains(&w[1]) {
                return Err(Error::Precondition(format!(
                    "{} and {} are not adjacent in H_{n}",
                    w[0], w[1]
                )));
            }
        }
        for &v in &self.vertices {
            if v >= n * n {
                return Err(Error::Precondition(format!("vertex {v} out of range")));
            }
            if seen[v] {
                return Err(Error::Precondition(format!("vertex {v} repeated")));
            }
            seen[v] = true;
        }
        if let Some(c) = colouring {
            let first = c.colour(self.vertices[0]);
            for &v in &self.vertices {
                if c.colour(v) != first {
                    return Err(Error::Precondition(format!(
                        "path is not monochromatic at vertex {v}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Find a monochromatic path on at least n vertices for any colouring of
/// `H_n`, together with its colour.
///
/// Components are scanned in ascending minimum-vertex-id order: first red
/// components spanning left to right, then blue components spanning top to
/// bottom. One of the two always exists on this adjacency; failure to find
/// one is a defect, not an input error.
pub fn find_monochromatic_path(n: usize, colouring: &Colouring) -> (GridPath, Colour) {
    assert_eq!(colouring.n(), n, "colouring is for a different grid");
    if n == 1 {
        return (GridPath { vertices: vec![0] }, colouring.colour(0));
    }
    for colour in [Colour::Red, Colour::Blue] {
        if let Some(path) = crossing_path(n, colouring, colour) {
            return (path, colour);
        }
    }
    unreachable!("Hex no-draw: some colour must cross the board");
}

/// Shortest crossing path of the given colour: left-right for red, top-bottom
/// for blue. Returns None if no component of that colour crosses.
fn crossing_path(n: usize, colouring: &Colouring, colour: Colour) -> Option<GridPath> {
    let coord_of = |id: usize| GridCoord::from_id(id, n);
    let crossing_axis = |id: usize| match colour {
        Colour::Red => coord_of(id).x,
        Colour::Blue => coord_of(id).y,
    };
    let total = n * n;
    let mut component = vec![usize::MAX; total];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for start in 0..total {
        if colouring.colour(start) != colour || component[start] != usize::MAX {
            continue;
        }
        let idx = comps.len();
        let mut verts = vec![start];
        component[start] = idx;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for v in hex_neighbors(n, u) {
                if colouring.colour(v) == colour && component[v] == usize::MAX {
                    component[v] = idx;
                    verts.push(v);
                    queue.push_back(v);
                }
            }
        }
        comps.push(verts);
    }
    // components come out in ascending minimum-vertex-id order already
    for verts in &comps {
        let touches_near = verts.iter().any(|&v| crossing_axis(v) == 1);
        let touches_far = verts.iter().any(|&v| crossing_axis(v) == n);
        if !(touches_near && touches_far) {
            continue;
        }
        // BFS from the near side within the component; neighbour exploration
        // in ascending id keeps the result deterministic.
        let mut parent = vec![usize::MAX; total];
        let mut visited = vec![false; total];
        let mut queue = VecDeque::new();
        let mut sources: Vec<usize> = verts.iter().copied().filter(|&v| crossing_axis(v) == 1).collect();
        sources.sort_unstable();
        for &s in &sources {
            visited[s] = true;
            queue.push_back(s);
        }
        while let Some(u) = queue.pop_front() {
            if crossing_axis(u) == n {
                let mut path = vec![u];
                let mut cur = u;
                while parent[cur] != usize::MAX {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(GridPath { vertices: path });
            }
            for v in hex_neighbors(n, u) {
                if !visited[v] && colouring.colour(v) == colour {
                    visited[v] = true;
                    parent[v] = u;
                    queue.push_back(v);
                }
            }
        }
        unreachable!("component touches both sides, BFS must cross");
    }
    None
}

/// Read the colouring format: one `c <vertex> <r|b>` line per vertex of
/// `H_n`; `#` begins a comment. Every vertex must be coloured exactly once.
pub fn read_colouring<R: BufRead>(n: usize, reader: R) -> Result<Colouring> {
    let mut colours: Vec<Option<Colour>> = vec![None; n * n];
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut parts = content.split_whitespace();
        if parts.next() != Some("c") {
            return Err(Error::Parse {
                line: lineno,
                msg: "expected `c <vertex> <r|b>`".into(),
            });
        }
        let v: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or(Error::Parse {
                line: lineno,
                msg: "missing or invalid vertex id".into(),
            })?;
        if v >= n * n {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("vertex {v} out of range for H_{n}"),
            });
        }
        let c = match parts.next() {
            Some("r") => Colour::Red,
            Some("b") => Colour::Blue,
            _ => {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "colour must be `r` or `b`".into(),
                })
            }
        };
        if colours[v].is_some() {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("vertex {v} coloured twice"),
            });
        }
        colours[v] = Some(c);
    }
    let colours: Option<Vec<Colour>> = colours.into_iter().collect();
    let colours = colours.ok_or(Error::Parse {
        line: 0,
        msg: "colouring does not cover every vertex".into(),
    })?;
    Colouring::new(n, colours)
}

pub fn write_colouring(c: &Colouring) -> String {
    let mut out = String::new();
    for v in 0..c.n() * c.n() {
        let tag = match c.colour(v) {
            Colour::Red => "r",
            Colour::Blue => "b",
        };
        writeln!(out, "c {v} {tag}").unwrap();
    }
    out
}
