//! Finite unit-distance graphs and an exact chromatic number solver.
//!
//! The solver is graph-generic: geometry only enters through [`build_udg`].
//! It is a DSATUR-ordered branch and bound over 64-bit adjacency masks, with a
//! greedy clique lower bound and a DSATUR coloring as the upper bound.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::point::Point2;
use crate::scalar::Scalar;

/// Largest vertex count the exact solver accepts.
pub const MAX_VERTICES: usize = 64;

/// A simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(skip)]
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range
    /// endpoints. Edges are stored as given, with `i < j`.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("graph needs at least one vertex".into()));
        }
        let mut neighbors = vec![Vec::new(); n];
        let mut stored = Vec::new();
        for (k, (i, j)) in edges.into_iter().enumerate() {
            if i >= n || j >= n {
                return Err(Error::InvalidGraph(format!(
                    "edges[{k}] = ({i}, {j}) references a vertex outside 0..{n}"
                )));
            }
            if i == j {
                return Err(Error::InvalidGraph(format!("edges[{k}] is a self-loop on {i}")));
            }
            if neighbors[i].contains(&j) {
                return Err(Error::InvalidGraph(format!(
                    "edges[{k}] = ({i}, {j}) is a duplicate"
                )));
            }
            neighbors[i].push(j);
            neighbors[j].push(i);
            stored.push((i.min(j), i.max(j)));
        }
        Ok(Self {
            n,
            edges: stored,
            neighbors,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Sorted degree sequence.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.neighbors[i].contains(&j)
    }
}

/// A point set together with all of its unit-distance pairs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct UnitDistanceGraph<T> {
    pub points: Vec<Point2<T>>,
    pub graph: Graph,
    pub tolerance: T,
}

/// Connects every pair of points whose distance is within `tolerance` of 1.
pub fn build_udg<T: Scalar>(points: Vec<Point2<T>>, tolerance: T) -> Result<UnitDistanceGraph<T>> {
    if !(tolerance >= T::zero()) {
        return Err(Error::Domain {
            what: "tolerance",
            value: tolerance.as_f64(),
            expected: "tolerance >= 0",
        });
    }
    let mut edges = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            if (points[i].distance(&points[j]) - T::one()).abs() <= tolerance {
                edges.push((i, j));
            }
        }
    }
    let graph = Graph::new(points.len(), edges)?;
    Ok(UnitDistanceGraph {
        points,
        graph,
        tolerance,
    })
}

/// One color per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringAssignment {
    pub colors: Vec<u32>,
}

impl ColoringAssignment {
    /// Number of distinct colors used.
    pub fn color_count(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }
}

pub fn is_proper(graph: &Graph, assignment: &ColoringAssignment) -> Result<bool> {
    if assignment.colors.len() != graph.vertex_count() {
        return Err(Error::LengthMismatch {
            expected: graph.vertex_count(),
            got: assignment.colors.len(),
        });
    }
    Ok(graph
        .edges()
        .iter()
        .all(|&(i, j)| assignment.colors[i] != assignment.colors[j]))
}

fn masks(graph: &Graph) -> Result<Vec<u64>> {
    let n = graph.vertex_count();
    if n > MAX_VERTICES {
        return Err(Error::SizeLimit {
            n,
            max: MAX_VERTICES,
        });
    }
    Ok((0..n)
        .map(|v| graph.neighbors(v).iter().fold(0u64, |m, &u| m | (1 << u)))
        .collect())
}

/// Largest clique found by growing greedily from every vertex.
pub fn greedy_clique(graph: &Graph) -> Result<Vec<usize>> {
    let adj = masks(graph)?;
    let n = graph.vertex_count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));
    let mut best = Vec::new();
    for &seed in &order {
        let mut clique = vec![seed];
        let mut candidates = adj[seed];
        for &v in &order {
            if candidates & (1 << v) != 0 {
                clique.push(v);
                candidates &= adj[v];
            }
        }
        if clique.len() > best.len() {
            best = clique;
        }
    }
    Ok(best)
}

/// Saturation-degree greedy coloring.
pub fn dsatur_coloring(graph: &Graph) -> Result<ColoringAssignment> {
    let adj = masks(graph)?;
    let n = graph.vertex_count();
    let mut colors: Vec<Option<u32>> = vec![None; n];
    let mut saturation = vec![0u64; n];
    for _ in 0..n {
        let v = pick_vertex(&colors, &saturation, &adj);
        let c = (!saturation[v]).trailing_zeros();
        assign(v, c, &mut colors, &mut saturation, &adj);
    }
    Ok(ColoringAssignment {
        colors: colors.into_iter().map(|c| c.unwrap()).collect(),
    })
}

/// Uncolored vertex with the most distinct neighbor colors; ties go to the
/// larger uncolored degree, then the smaller index.
fn pick_vertex(colors: &[Option<u32>], saturation: &[u64], adj: &[u64]) -> usize {
    let uncolored: u64 = colors
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_none())
        .fold(0, |m, (v, _)| m | (1 << v));
    let mut best = usize::MAX;
    let mut best_key = (0u32, 0u32);
    for v in 0..colors.len() {
        if colors[v].is_some() {
            continue;
        }
        let key = (saturation[v].count_ones(), (adj[v] & uncolored).count_ones());
        if best == usize::MAX || key > best_key {
            best = v;
            best_key = key;
        }
    }
    best
}

fn assign(v: usize, c: u32, colors: &mut [Option<u32>], saturation: &mut [u64], adj: &[u64]) {
    colors[v] = Some(c);
    for (u, sat) in saturation.iter_mut().enumerate() {
        if adj[v] & (1 << u) != 0 {
            *sat |= 1 << c;
        }
    }
}

struct Search<'a> {
    adj: &'a [u64],
    k: u32,
    colors: Vec<Option<u32>>,
}

impl Search<'_> {
    fn neighbor_colors(&self, v: usize) -> u64 {
        let mut m = 0u64;
        let mut rest = self.adj[v];
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if let Some(c) = self.colors[u] {
                m |= 1 << c;
            }
        }
        m
    }

    /// Colors the remaining vertices with colors `< k`. A fresh color is only
    /// ever `used` (the next unused one), which removes color permutations.
    fn extend(&mut self, remaining: usize, used: u32) -> bool {
        if remaining == 0 {
            return true;
        }
        let saturation: Vec<u64> = (0..self.colors.len())
            .map(|v| {
                if self.colors[v].is_none() {
                    self.neighbor_colors(v)
                } else {
                    0
                }
            })
            .collect();
        let v = pick_vertex(&self.colors, &saturation, self.adj);
        let blocked = saturation[v];
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if blocked & (1 << c) != 0 {
                continue;
            }
            self.colors[v] = Some(c);
            if self.extend(remaining - 1, used.max(c + 1)) {
                return true;
            }
            self.colors[v] = None;
        }
        false
    }
}

/// A proper coloring with at most `k` colors, if one exists.
pub fn k_coloring(graph: &Graph, k: u32) -> Result<Option<ColoringAssignment>> {
    let adj = masks(graph)?;
    let mut search = Search {
        adj: &adj,
        k,
        colors: vec![None; graph.vertex_count()],
    };
    Ok(search
        .extend(graph.vertex_count(), 0)
        .then(|| ColoringAssignment {
            colors: search.colors.into_iter().map(|c| c.unwrap()).collect(),
        }))
}

/// Exact chromatic number with a witness coloring using exactly that many
/// colors. Limited to [`MAX_VERTICES`] vertices.
pub fn chromatic_number_exact(graph: &Graph) -> Result<(u32, ColoringAssignment)> {
    let lower = greedy_clique(graph)?.len() as u32;
    let upper_coloring = dsatur_coloring(graph)?;
    let upper = upper_coloring.color_count() as u32;
    for k in lower..upper {
        if let Some(witness) = k_coloring(graph, k)? {
            return Ok((k, witness));
        }
    }
    Ok((upper, upper_coloring))
}
