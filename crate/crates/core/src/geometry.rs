//! Partial linear spaces, their point graphs, and perp closures.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::constructions::ConstructedGraph;
use crate::field::{projective_points, vector_index, Field, FieldError, ProjectivePoint, SymplecticForm};
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("vertices {0} and {1} are adjacent")]
    AdjacentPair(usize, usize),
    #[error("graph carries no lines")]
    NoLines,
    #[error("lines do not all have the same size")]
    NonUniformLines,
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Points `0..points` and lines given as sorted point lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialLinearSpace {
    pub points: usize,
    pub lines: Vec<Vec<usize>>,
}

impl PartialLinearSpace {
    pub fn new(points: usize, lines: impl IntoIterator<Item = Vec<usize>>) -> PartialLinearSpace {
        let lines: BTreeSet<Vec<usize>> = lines
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                l.dedup();
                l
            })
            .collect();
        PartialLinearSpace {
            points,
            lines: lines.into_iter().collect(),
        }
    }

    pub fn from_vertex_sets(points: usize, lines: &[VertexSet]) -> PartialLinearSpace {
        PartialLinearSpace::new(points, lines.iter().map(VertexSet::to_vec))
    }

    /// `(s, t)` when every line has `s + 1` points and every point is on `t + 1` lines.
    pub fn order(&self) -> Option<(usize, usize)> {
        let size = self.lines.first()?.len();
        if size < 2 || self.lines.iter().any(|l| l.len() != size) {
            return None;
        }
        let mut on = vec![0usize; self.points];
        for l in &self.lines {
            for &p in l {
                on[p] += 1;
            }
        }
        let t1 = on[0];
        (t1 >= 1 && on.iter().all(|&c| c == t1)).then(|| (size - 1, t1 - 1))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxiomReport {
    pub partial_linear: bool,
    pub copolar: bool,
    pub delta: bool,
    pub gq: bool,
    pub order: Option<(usize, usize)>,
}

/// Collinearity graph.
pub fn point_graph(space: &PartialLinearSpace) -> Graph {
    let mut collinear = vec![false; space.points * space.points];
    for l in &space.lines {
        for &a in l {
            for &b in l {
                if a != b {
                    collinear[a * space.points + b] = true;
                }
            }
        }
    }
    Graph::from_fn(space.points, |u, w| collinear[u * space.points + w]).expect("point count within range")
}

pub fn check_axioms(space: &PartialLinearSpace) -> AxiomReport {
    let n = space.points;
    let mut pair_lines = vec![0u32; n * n];
    let mut partial_linear = space.lines.iter().all(|l| l.len() >= 2 && l.iter().all(|&p| p < n));
    if partial_linear {
        for l in &space.lines {
            for (i, &a) in l.iter().enumerate() {
                for &b in &l[i + 1..] {
                    pair_lines[a * n + b] += 1;
                }
            }
        }
        partial_linear = pair_lines.iter().all(|&c| c <= 1);
    }
    let order = space.order();
    if !partial_linear {
        return AxiomReport {
            partial_linear,
            copolar: false,
            delta: false,
            gq: false,
            order,
        };
    }
    let g = point_graph(space);
    let (mut copolar, mut delta, mut gq) = (true, true, true);
    for l in &space.lines {
        let line = VertexSet::from_vertices(n, l.iter().copied());
        for p in line.complement().iter() {
            let seen = g.neighbors(p).intersection(&line).len();
            copolar &= seen == 0 || seen + 1 == l.len();
            delta &= seen == 0 || seen + 1 == l.len() || seen == l.len();
            gq &= seen == 1;
        }
    }
    AxiomReport {
        partial_linear,
        copolar,
        delta,
        gq: gq && order.is_some(),
        order,
    }
}

/// `{x, y}^perp` and `{x, y}^perp-perp`, with `z^perp = {z} + N(z)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerpSets {
    pub perp: VertexSet,
    pub perp_perp: VertexSet,
}

fn closed_neighborhood(g: &Graph, x: usize) -> VertexSet {
    let mut s = g.neighbors(x);
    s.insert(x);
    s
}

/// Intersection of `z^perp` over `z` in `set` (all vertices when `set` is empty).
pub fn perp(g: &Graph, set: &VertexSet) -> VertexSet {
    let mut out = g.vertices();
    for z in set.iter() {
        out.intersect_with(&closed_neighborhood(g, z));
    }
    out
}

pub fn perp_sets(g: &Graph, x: usize, y: usize) -> PerpSets {
    assert_ne!(x, y);
    let pair = VertexSet::from_vertices(g.order(), [x, y]);
    let perp1 = perp(g, &pair);
    let perp2 = perp(g, &perp1);
    PerpSets {
        perp: perp1,
        perp_perp: perp2,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RegularPair {
    pub regular: bool,
    pub induced_complete_bipartite: bool,
}

/// For a non-adjacent pair in a GQ point graph of order `(s, t)`.
pub fn regular_pair(g: &Graph, x: usize, y: usize, t: usize) -> Result<RegularPair, GeometryError> {
    if g.has_edge(x, y) {
        return Err(GeometryError::AdjacentPair(x, y));
    }
    let PerpSets { perp, perp_perp } = perp_sets(g, x, y);
    let independent = |s: &VertexSet| s.iter().all(|u| g.neighbors(u).is_disjoint(s));
    let complete_between = perp.iter().all(|u| perp_perp.is_subset(&g.neighbors(u)));
    let induced_complete_bipartite = perp.len() == t + 1
        && perp_perp.len() == t + 1
        && perp.is_disjoint(&perp_perp)
        && independent(&perp)
        && independent(&perp_perp)
        && complete_between;
    Ok(RegularPair {
        regular: perp_perp.len() == t + 1,
        induced_complete_bipartite,
    })
}

/// `{x,y}^perp-perp` over all non-adjacent pairs, deduplicated and sorted.
pub fn hyperbolic_lines(g: &Graph) -> Vec<VertexSet> {
    let n = g.order();
    let mut out = BTreeSet::new();
    for x in 0..n {
        for y in x + 1..n {
            if !g.has_edge(x, y) {
                out.insert(perp_sets(g, x, y).perp_perp);
            }
        }
    }
    out.into_iter().collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeltaTest {
    /// Lines have `s + 1` points.
    pub s: usize,
    pub applies: bool,
    /// `2k - lambda - s - 1`, the size of the neighborhood of a line.
    pub predicted_cut_size: usize,
}

/// Whether `mu (s + 1) / s < k` with `s >= 2` for a graph whose lines all have
/// `s + 1` points.
pub fn delta_counterexample_test(g: &ConstructedGraph) -> Result<DeltaTest, GeometryError> {
    let lines = g
        .lines
        .as_deref()
        .filter(|l| !l.is_empty())
        .ok_or(GeometryError::NoLines)?;
    let size = lines[0].len();
    if lines.iter().any(|l| l.len() != size) {
        return Err(GeometryError::NonUniformLines);
    }
    let s = size - 1;
    let p = g.expected_params;
    Ok(DeltaTest {
        s,
        applies: s >= 2 && p.mu * (s + 1) < p.k * s,
        predicted_cut_size: (2 * p.k + 1).saturating_sub(p.lambda + s + 2),
    })
}

/// Points of `PG(3, q)` with the totally isotropic lines of the symplectic form.
pub fn isotropic_line_space(q: usize) -> Result<PartialLinearSpace, GeometryError> {
    let f = Field::of_order(q)?;
    let form = SymplecticForm::new(2);
    let points = projective_points(&f, 4);
    let mut index = vec![usize::MAX; q.pow(4)];
    for (i, p) in points.iter().enumerate() {
        index[vector_index(&f, p.coords())] = i;
    }
    let mut lines = Vec::new();
    for (i, x) in points.iter().enumerate() {
        for (j, y) in points.iter().enumerate().skip(i + 1) {
            if !form.pair(&f, x.coords(), y.coords())?.is_zero() {
                continue;
            }
            let mut line = vec![i, j];
            for c in f.elements().skip(1) {
                let sum: Vec<_> = x
                    .coords()
                    .iter()
                    .zip(y.coords())
                    .map(|(&a, &b)| f.add(a, f.mul(c, b)))
                    .collect();
                let p = ProjectivePoint::from_vector(&f, &sum).expect("distinct points are independent");
                line.push(index[vector_index(&f, p.coords())]);
            }
            lines.push(line);
        }
    }
    Ok(PartialLinearSpace::new(points.len(), lines))
}
