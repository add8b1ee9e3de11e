//! Builders for the strongly regular graphs in the catalog.
//!
//! Every builder checks its output with [`srg_check`] against the expected
//! parameters before returning it.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use crate::field::{
    prime_power, projective_points, vector_index, Field, FieldElement, FieldError, ProjectivePoint, SymplecticForm,
};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::srg::{complement_params, srg_check, SrgError, SrgParams};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("parameter out of range for {family}: {detail}")]
    ParamOutOfRange { family: &'static str, detail: String },
    #[error("not a Latin square: {0}")]
    NotLatinSquare(String),
    #[error("Paley graphs need q = 1 (mod 4), got {0}")]
    BadResidueClass(usize),
    #[error("unsupported field order {0}")]
    UnsupportedOrder(usize),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("built graph is not strongly regular: {0}")]
    Srg(#[from] SrgError),
    #[error("built graph has parameters {found}, expected {expected}")]
    ParamsMismatch { expected: SrgParams, found: SrgParams },
}

fn out_of_range(family: &'static str, detail: impl Into<String>) -> ConstructionError {
    ConstructionError::ParamOutOfRange {
        family,
        detail: detail.into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuadricSign {
    /// Hyperbolic form `x1 x2 + x3 x4 + ...`.
    Plus,
    /// Elliptic form `x1^2 + x1 x2 + x2^2 + x3 x4 + ...`.
    Minus,
}

impl fmt::Display for QuadricSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QuadricSign::Plus => "+",
            QuadricSign::Minus => "-",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Triangular {
        m: usize,
    },
    Lattice {
        n: usize,
    },
    /// `square` rows over symbols `0..n`; `None` means the cyclic square `i + j mod n`.
    LatinSquare {
        n: usize,
        square: Option<Vec<Vec<usize>>>,
    },
    Paley {
        q: usize,
    },
    Symplectic {
        r: usize,
        q: usize,
    },
    Quadric {
        sign: QuadricSign,
        r: usize,
    },
    TwentySevenLines,
    Schlafli,
    Clebsch,
    Shrikhande,
    Chang {
        index: usize,
    },
    ComplementOf(Box<FamilySpec>),
}

impl FamilySpec {
    pub fn complement(self) -> FamilySpec {
        FamilySpec::ComplementOf(Box::new(self))
    }

    pub fn build(&self) -> Result<ConstructedGraph, ConstructionError> {
        match self {
            FamilySpec::Triangular { m } => triangular(*m),
            FamilySpec::Lattice { n } => lattice(*n),
            FamilySpec::LatinSquare { n, square: None } => cayley_latin(*n),
            FamilySpec::LatinSquare { square: Some(sq), .. } => latin_square_graph(sq),
            FamilySpec::Paley { q } => paley(*q),
            FamilySpec::Symplectic { r, q } => symplectic_graph(*r, *q),
            FamilySpec::Quadric { sign, r } => quadric_graph(*sign, *r),
            FamilySpec::TwentySevenLines => Ok(twenty_seven_lines()),
            FamilySpec::Schlafli => Ok(schlafli()),
            FamilySpec::Clebsch => Ok(clebsch()),
            FamilySpec::Shrikhande => Ok(shrikhande()),
            FamilySpec::Chang { index } => chang(*index),
            FamilySpec::ComplementOf(inner) => complement(&inner.build()?),
        }
    }

    /// Short identifier such as `T(7)`, `Sp(4,3)` or `complement(L2(4))`.
    pub fn id(&self) -> String {
        match self {
            FamilySpec::Triangular { m } => format!("T({m})"),
            FamilySpec::Lattice { n } => format!("L2({n})"),
            FamilySpec::LatinSquare { n, square: None } => format!("LatinCyclic({n})"),
            FamilySpec::LatinSquare { n, square: Some(_) } => format!("Latin({n})"),
            FamilySpec::Paley { q } => format!("Paley({q})"),
            FamilySpec::Symplectic { r, q } => format!("Sp({},{q})", 2 * r),
            FamilySpec::Quadric { sign, r } => format!("O{sign}({},2)", 2 * r),
            FamilySpec::TwentySevenLines => "TwentySevenLines".into(),
            FamilySpec::Schlafli => "Schlafli".into(),
            FamilySpec::Clebsch => "Clebsch".into(),
            FamilySpec::Shrikhande => "Shrikhande".into(),
            FamilySpec::Chang { index } => format!("Chang({index})"),
            FamilySpec::ComplementOf(inner) => format!("complement({})", inner.id()),
        }
    }
}

/// The fixed list of regression graphs.
pub fn catalog() -> Vec<FamilySpec> {
    use FamilySpec::*;
    let mut out: Vec<FamilySpec> = (5..=8).map(|m| Triangular { m }).collect();
    out.extend((3..=6).map(|n| Lattice { n }));
    out.extend((4..=6).map(|n| LatinSquare { n, square: None }));
    out.extend([5, 9, 13, 17, 25].map(|q| Paley { q }));
    out.extend([
        Symplectic { r: 2, q: 2 },
        Symplectic { r: 2, q: 3 },
        Symplectic { r: 3, q: 2 },
    ]);
    out.extend([QuadricSign::Plus, QuadricSign::Minus].map(|sign| Quadric { sign, r: 3 }));
    out.extend([Clebsch, Shrikhande, TwentySevenLines, Schlafli]);
    out.extend((1..=3).map(|index| Chang { index }));
    out
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructedGraph {
    pub spec: FamilySpec,
    pub graph: Graph,
    pub labels: Vec<String>,
    pub expected_params: SrgParams,
    /// Distinguished cliques, sorted and deduplicated.
    pub lines: Option<Vec<VertexSet>>,
}

impl ConstructedGraph {
    fn finish(
        spec: FamilySpec,
        graph: Graph,
        labels: Vec<String>,
        expected: (usize, usize, usize, usize),
        lines: Option<Vec<VertexSet>>,
    ) -> Result<ConstructedGraph, ConstructionError> {
        let (v, k, l, m) = expected;
        let expected = SrgParams::new(v, k, l, m)?;
        let found = srg_check(&graph)?;
        if found != expected {
            return Err(ConstructionError::ParamsMismatch { expected, found });
        }
        debug_assert_eq!(labels.len(), graph.order());
        debug_assert_eq!(labels.iter().collect::<BTreeSet<_>>().len(), labels.len());
        let lines = lines.map(|ls| {
            let mut ls: Vec<VertexSet> = ls.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
            ls.sort();
            debug_assert!(ls.iter().all(|l| graph.is_clique(l)));
            ls
        });
        Ok(ConstructedGraph {
            spec,
            graph,
            labels,
            expected_params: expected,
            lines,
        })
    }

    /// Vertex index carrying `label`.
    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn label_set(&self, set: &VertexSet) -> Vec<String> {
        set.iter().map(|v| self.labels[v].clone()).collect()
    }
}

fn pairs(m: usize) -> Vec<(usize, usize)> {
    (0..m).flat_map(|a| (a + 1..m).map(move |b| (a, b))).collect()
}

/// 2-subsets of `{1..m}`, adjacent when they meet in one point.
pub fn triangular(m: usize) -> Result<ConstructedGraph, ConstructionError> {
    if !(4..=45).contains(&m) {
        return Err(out_of_range("triangular", format!("m must be in 4..=45, got {m}")));
    }
    let ps = pairs(m);
    let v = ps.len();
    let meet = |x: (usize, usize), y: (usize, usize)| x.0 == y.0 || x.0 == y.1 || x.1 == y.0 || x.1 == y.1;
    let graph = Graph::from_fn(v, |i, j| meet(ps[i], ps[j])).expect("order checked");
    let labels = ps.iter().map(|(a, b)| format!("{{{},{}}}", a + 1, b + 1)).collect();
    let index: HashMap<(usize, usize), usize> = ps.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let mut lines = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                lines.push(VertexSet::from_vertices(
                    v,
                    [index[&(a, b)], index[&(a, c)], index[&(b, c)]],
                ));
            }
        }
    }
    ConstructedGraph::finish(
        FamilySpec::Triangular { m },
        graph,
        labels,
        (v, 2 * (m - 2), m - 2, 4),
        Some(lines),
    )
}

/// `[n] x [n]`, adjacent when they share a coordinate.
pub fn lattice(n: usize) -> Result<ConstructedGraph, ConstructionError> {
    if !(2..=32).contains(&n) {
        return Err(out_of_range("lattice", format!("n must be in 2..=32, got {n}")));
    }
    let graph = Graph::from_fn(n * n, |i, j| i / n == j / n || i % n == j % n).expect("order checked");
    let labels = (0..n * n)
        .map(|i| {
            let (a, b) = (i / n + 1, i % n + 1);
            if n <= 9 {
                format!("{a}{b}")
            } else {
                format!("{a}:{b}")
            }
        })
        .collect();
    ConstructedGraph::finish(
        FamilySpec::Lattice { n },
        graph,
        labels,
        (n * n, 2 * (n - 1), n - 2, 2),
        None,
    )
}

fn check_latin(square: &[Vec<usize>]) -> Result<usize, ConstructionError> {
    let n = square.len();
    if n < 2 {
        return Err(ConstructionError::NotLatinSquare(format!("order {n} is below 2")));
    }
    for (i, row) in square.iter().enumerate() {
        if row.len() != n {
            return Err(ConstructionError::NotLatinSquare(format!(
                "row {} has {} entries",
                i + 1,
                row.len()
            )));
        }
        if let Some(&s) = row.iter().find(|&&s| s >= n) {
            return Err(ConstructionError::NotLatinSquare(format!("symbol {s} outside 0..{n}")));
        }
    }
    for i in 0..n {
        let row: BTreeSet<_> = square[i].iter().collect();
        let col: BTreeSet<_> = square.iter().map(|r| &r[i]).collect();
        if row.len() != n {
            return Err(ConstructionError::NotLatinSquare(format!(
                "row {} repeats a symbol",
                i + 1
            )));
        }
        if col.len() != n {
            return Err(ConstructionError::NotLatinSquare(format!(
                "column {} repeats a symbol",
                i + 1
            )));
        }
    }
    Ok(n)
}

/// Cells `(i, j, L(i,j))`, adjacent when they agree in exactly one coordinate.
pub fn latin_square_graph(square: &[Vec<usize>]) -> Result<ConstructedGraph, ConstructionError> {
    let n = check_latin(square)?;
    if n * n > MAX_VERTICES {
        return Err(out_of_range("latin", format!("order {n} too large")));
    }
    build_latin(
        FamilySpec::LatinSquare {
            n,
            square: Some(square.to_vec()),
        },
        square,
    )
}

/// Latin square graph of the cyclic square `L(i,j) = i + j mod n`.
pub fn cayley_latin(n: usize) -> Result<ConstructedGraph, ConstructionError> {
    if !(2..=32).contains(&n) {
        return Err(out_of_range("latin", format!("n must be in 2..=32, got {n}")));
    }
    let square: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    build_latin(FamilySpec::LatinSquare { n, square: None }, &square)
}

fn build_latin(spec: FamilySpec, square: &[Vec<usize>]) -> Result<ConstructedGraph, ConstructionError> {
    let n = square.len();
    let cell = |x: usize| (x / n, x % n, square[x / n][x % n]);
    let graph = Graph::from_fn(n * n, |x, y| {
        let (a, b) = (cell(x), cell(y));
        (a.0 == b.0) as u8 + (a.1 == b.1) as u8 + (a.2 == b.2) as u8 == 1
    })
    .expect("order checked");
    let labels = (0..n * n)
        .map(|x| {
            let (i, j, s) = cell(x);
            format!("[{},{},{}]", i + 1, j + 1, s + 1)
        })
        .collect();
    ConstructedGraph::finish(spec, graph, labels, (n * n, 3 * (n - 1), n, 6), None)
}

/// Field elements, adjacent when their difference is a nonzero square.
pub fn paley(q: usize) -> Result<ConstructedGraph, ConstructionError> {
    if q > crate::field::MAX_ORDER || prime_power(q).is_none() {
        return Err(ConstructionError::UnsupportedOrder(q));
    }
    if q % 4 != 1 {
        return Err(ConstructionError::BadResidueClass(q));
    }
    let f = Field::of_order(q)?;
    let squares: BTreeSet<FieldElement> = f.elements().skip(1).map(|x| f.mul(x, x)).collect();
    let graph = Graph::from_fn(q, |i, j| squares.contains(&f.sub(f.element(i), f.element(j)))).expect("q <= 64");
    let labels = (0..q).map(|i| i.to_string()).collect();
    ConstructedGraph::finish(
        FamilySpec::Paley { q },
        graph,
        labels,
        (q, (q - 1) / 2, (q - 5) / 4, (q - 1) / 4),
        None,
    )
}

fn point_label(p: &ProjectivePoint) -> String {
    let coords: Vec<String> = p.coords().iter().map(|c| c.to_string()).collect();
    format!("({})", coords.join(","))
}

/// Projective points of `F_q^{2r}`, adjacent when the symplectic form is nonzero.
/// Lines are the hyperbolic lines `{[u], [v], [u + c v] : c != 0}` through edges.
pub fn symplectic_graph(r: usize, q: usize) -> Result<ConstructedGraph, ConstructionError> {
    if r < 2 {
        return Err(out_of_range("symplectic", format!("r must be at least 2, got {r}")));
    }
    if q > crate::field::MAX_ORDER || prime_power(q).is_none() {
        return Err(ConstructionError::UnsupportedOrder(q));
    }
    let d = 2 * r;
    let v = q
        .checked_pow(d as u32)
        .map(|qd| (qd - 1) / (q - 1))
        .filter(|&v| v <= MAX_VERTICES)
        .ok_or_else(|| out_of_range("symplectic", format!("Sp({d},{q}) has more than {MAX_VERTICES} points")))?;
    let f = Field::of_order(q)?;
    let form = SymplecticForm::new(r);
    let points = projective_points(&f, d);
    debug_assert_eq!(points.len(), v);
    let mut index = vec![usize::MAX; q.pow(d as u32)];
    for (i, p) in points.iter().enumerate() {
        index[vector_index(&f, p.coords())] = i;
    }
    let pair = |i: usize, j: usize| {
        form.pair(&f, points[i].coords(), points[j].coords())
            .expect("dimension d")
    };
    let graph = Graph::from_fn(v, |i, j| !pair(i, j).is_zero()).expect("order checked");

    let mut lines = BTreeSet::new();
    for (i, j) in graph.edges() {
        let (u, w) = (points[i].coords(), points[j].coords());
        let mut line = VertexSet::from_vertices(v, [i, j]);
        for c in f.elements().skip(1) {
            let sum: Vec<FieldElement> = u.iter().zip(w).map(|(&x, &y)| f.add(x, f.mul(c, y))).collect();
            let p = ProjectivePoint::from_vector(&f, &sum).expect("u, w independent");
            line.insert(index[vector_index(&f, p.coords())]);
        }
        lines.insert(line);
    }
    let labels = points.iter().map(point_label).collect();
    let qd1 = q.pow(d as u32 - 1);
    let qd2 = q.pow(d as u32 - 2);
    ConstructedGraph::finish(
        FamilySpec::Symplectic { r, q },
        graph,
        labels,
        (v, qd1, qd2 * (q - 1), qd2 * (q - 1)),
        Some(lines.into_iter().collect()),
    )
}

fn bit(x: usize, i: usize) -> usize {
    x >> i & 1
}

/// Value of the quadratic form at the vector with coordinates `x_{i+1} = bit i`.
fn quadric_value(sign: QuadricSign, r: usize, x: usize) -> usize {
    let mut value = (0..r).map(|i| bit(x, 2 * i) * bit(x, 2 * i + 1)).sum::<usize>();
    if sign == QuadricSign::Minus {
        value += bit(x, 0) + bit(x, 1);
    }
    value % 2
}

/// Vectors of `F_2^{2r}` with `Q(x) = 1`, adjacent when the polar form is 1.
/// Lines are `{x, y, x + y}` through edges.
pub fn quadric_graph(sign: QuadricSign, r: usize) -> Result<ConstructedGraph, ConstructionError> {
    let min_r = if sign == QuadricSign::Plus { 3 } else { 2 };
    if !(min_r..=5).contains(&r) {
        return Err(out_of_range(
            "quadric",
            format!("r = {r} outside {min_r}..=5 for sign {sign}"),
        ));
    }
    let d = 2 * r;
    let vectors: Vec<usize> = (1..1 << d).filter(|&x| quadric_value(sign, r, x) == 1).collect();
    let v = vectors.len();
    let polar = |x: usize, y: usize| {
        (0..r)
            .map(|i| bit(x, 2 * i) * bit(y, 2 * i + 1) + bit(x, 2 * i + 1) * bit(y, 2 * i))
            .sum::<usize>()
            % 2
    };
    let graph = Graph::from_fn(v, |i, j| polar(vectors[i], vectors[j]) == 1).expect("order checked");
    let position: HashMap<usize, usize> = vectors.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let lines = graph
        .edges()
        .into_iter()
        .map(|(i, j)| VertexSet::from_vertices(v, [i, j, position[&(vectors[i] ^ vectors[j])]]))
        .collect();
    let labels = vectors
        .iter()
        .map(|&x| (0..d).map(|i| if bit(x, i) == 1 { '1' } else { '0' }).collect())
        .collect();
    let e = |k: u32| 1usize << k;
    let r32 = r as u32;
    let expected = match sign {
        QuadricSign::Plus => (
            e(2 * r32 - 1) - e(r32 - 1),
            e(2 * r32 - 2) - e(r32 - 1),
            e(2 * r32 - 3) - e(r32 - 2),
            e(2 * r32 - 3) - e(r32 - 1),
        ),
        QuadricSign::Minus => (
            e(2 * r32 - 1) + e(r32 - 1),
            e(2 * r32 - 2) + e(r32 - 1),
            e(2 * r32 - 3) + e(r32 - 2),
            e(2 * r32 - 3) + e(r32 - 1),
        ),
    };
    ConstructedGraph::finish(FamilySpec::Quadric { sign, r }, graph, labels, expected, Some(lines))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Line27 {
    A(usize),
    B(usize),
    C(usize, usize),
}

fn lines27() -> Vec<Line27> {
    let mut out: Vec<Line27> = (1..=6).map(Line27::A).collect();
    out.extend((1..=6).map(Line27::B));
    out.extend(pairs(6).into_iter().map(|(i, j)| Line27::C(i + 1, j + 1)));
    out
}

fn build_27(complemented: bool) -> ConstructedGraph {
    use Line27::*;
    let vs = lines27();
    let adjacent = |x: Line27, y: Line27| match (x, y) {
        (A(i), B(j)) | (B(j), A(i)) => i != j,
        (A(i), C(j, k)) | (C(j, k), A(i)) | (B(i), C(j, k)) | (C(j, k), B(i)) => i == j || i == k,
        (C(i, j), C(k, l)) => i != k && i != l && j != k && j != l,
        _ => false,
    };
    let graph = Graph::from_fn(27, |u, w| adjacent(vs[u], vs[w]) != complemented).expect("27 vertices");
    let labels = vs
        .iter()
        .map(|x| match x {
            A(i) => format!("a{i}"),
            B(i) => format!("b{i}"),
            C(i, j) => format!("c{i}{j}"),
        })
        .collect();
    let (spec, expected) = if complemented {
        (FamilySpec::Schlafli, (27, 16, 10, 8))
    } else {
        (FamilySpec::TwentySevenLines, (27, 10, 1, 5))
    };
    ConstructedGraph::finish(spec, graph, labels, expected, None).expect("fixed construction")
}

/// `a1..a6, b1..b6, c12..c56` with the intersection-free adjacency.
pub fn twenty_seven_lines() -> ConstructedGraph {
    build_27(false)
}

/// Complement of [`twenty_seven_lines`].
pub fn schlafli() -> ConstructedGraph {
    build_27(true)
}

/// `F_2^4`, adjacent at Hamming distance 1 or 4.
pub fn clebsch() -> ConstructedGraph {
    let graph = Graph::from_fn(16, |u, w| matches!((u ^ w).count_ones(), 1 | 4)).expect("16 vertices");
    let labels = (0..16)
        .map(|x| (0..4).map(|i| if bit(x, i) == 1 { '1' } else { '0' }).collect())
        .collect();
    ConstructedGraph::finish(FamilySpec::Clebsch, graph, labels, (16, 5, 0, 2), None).expect("fixed construction")
}

/// `Z_4 x Z_4`, adjacent when the difference is `±(1,0)`, `±(0,1)` or `±(1,1)`.
pub fn shrikhande() -> ConstructedGraph {
    let graph = Graph::from_fn(16, |u, w| {
        let d = ((u / 4 + 4 - w / 4) % 4, (u % 4 + 4 - w % 4) % 4);
        matches!(d, (1, 0) | (3, 0) | (0, 1) | (0, 3) | (1, 1) | (3, 3))
    })
    .expect("16 vertices");
    let labels = (0..16).map(|x| format!("{}{}", x / 4, x % 4)).collect();
    ConstructedGraph::finish(FamilySpec::Shrikhande, graph, labels, (16, 6, 2, 2), None).expect("fixed construction")
}

/// Edge sets of `K_8` used as switching sets in `T(8)`.
fn chang_switching_edges(index: usize) -> Option<Vec<(usize, usize)>> {
    let cycle =
        |vs: &[usize]| -> Vec<(usize, usize)> { (0..vs.len()).map(|i| (vs[i], vs[(i + 1) % vs.len()])).collect() };
    match index {
        1 => Some(vec![(0, 1), (2, 3), (4, 5), (6, 7)]),
        2 => Some(cycle(&[0, 1, 2, 3, 4, 5, 6, 7])),
        3 => {
            let mut e = cycle(&[0, 1, 2]);
            e.extend(cycle(&[3, 4, 5, 6, 7]));
            Some(e)
        }
        _ => None,
    }
}

/// `T(8)` switched with respect to a perfect matching (1), an 8-cycle (2), or
/// a triangle plus a 5-cycle (3).
pub fn chang(index: usize) -> Result<ConstructedGraph, ConstructionError> {
    let edges = chang_switching_edges(index)
        .ok_or_else(|| out_of_range("chang", format!("index must be 1, 2 or 3, got {index}")))?;
    let t8 = triangular(8)?;
    let ps = pairs(8);
    let x = VertexSet::from_vertices(
        28,
        edges
            .iter()
            .map(|&(a, b)| ps.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap()),
    );
    let graph = t8.graph.seidel_switch(&x);
    ConstructedGraph::finish(FamilySpec::Chang { index }, graph, t8.labels, (28, 12, 6, 4), None)
}

/// Complement graph with the same labels and no lines.
pub fn complement(g: &ConstructedGraph) -> Result<ConstructedGraph, ConstructionError> {
    let expected =
        complement_params(&g.expected_params).map_err(|e| out_of_range("complement", format!("{e} for {}", g.spec)))?;
    ConstructedGraph::finish(
        g.spec.clone().complement(),
        g.graph.complement(),
        g.labels.clone(),
        (expected.v, expected.k, expected.lambda, expected.mu),
        None,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn params(g: &ConstructedGraph) -> (usize, usize, usize, usize) {
        let p = g.expected_params;
        (p.v, p.k, p.lambda, p.mu)
    }

    #[test]
    fn triangular_examples() {
        assert_eq!(params(&triangular(5).unwrap()), (10, 6, 3, 4));
        assert_eq!(params(&triangular(6).unwrap()), (15, 8, 4, 4));
        assert_eq!(params(&triangular(8).unwrap()), (28, 12, 6, 4));
        let t6 = triangular(6).unwrap();
        assert_eq!(t6.lines.as_ref().unwrap().len(), 20);
        assert_eq!(t6.labels[0], "{1,2}");
        assert!(matches!(triangular(3), Err(ConstructionError::ParamOutOfRange { .. })));
    }

    #[test]
    fn lattice_examples() {
        assert_eq!(params(&lattice(3).unwrap()), (9, 4, 1, 2));
        assert_eq!(params(&lattice(4).unwrap()), (16, 6, 2, 2));
        assert_eq!(params(&lattice(5).unwrap()), (25, 8, 3, 2));
        assert_eq!(lattice(4).unwrap().labels[5], "22");
        assert!(matches!(lattice(1), Err(ConstructionError::ParamOutOfRange { .. })));
    }

    #[test]
    fn latin_examples() {
        assert_eq!(params(&cayley_latin(5).unwrap()), (25, 12, 5, 6));
        assert_eq!(params(&cayley_latin(4).unwrap()), (16, 9, 4, 6));
        let bad = vec![vec![0, 0, 1], vec![1, 2, 0], vec![2, 1, 2]];
        assert!(matches!(
            latin_square_graph(&bad),
            Err(ConstructionError::NotLatinSquare(_))
        ));
        let klein = vec![vec![0, 1, 2, 3], vec![1, 0, 3, 2], vec![2, 3, 0, 1], vec![3, 2, 1, 0]];
        assert_eq!(params(&latin_square_graph(&klein).unwrap()), (16, 9, 4, 6));
    }

    #[test]
    fn paley_examples() {
        assert_eq!(params(&paley(13).unwrap()), (13, 6, 2, 3));
        assert_eq!(params(&paley(17).unwrap()), (17, 8, 3, 4));
        assert_eq!(params(&paley(5).unwrap()), (5, 2, 0, 1));
        assert_eq!(params(&paley(9).unwrap()), (9, 4, 1, 2));
        assert_eq!(params(&paley(25).unwrap()), (25, 12, 5, 6));
        assert_eq!(paley(7), Err(ConstructionError::BadResidueClass(7)));
        assert_eq!(paley(21), Err(ConstructionError::UnsupportedOrder(21)));
        assert_eq!(paley(89), Err(ConstructionError::UnsupportedOrder(89)));
    }

    #[test]
    fn symplectic_examples() {
        let sp42 = symplectic_graph(2, 2).unwrap();
        assert_eq!(params(&sp42), (15, 8, 4, 4));
        assert_eq!(params(&symplectic_graph(2, 3).unwrap()), (40, 27, 18, 18));
        assert_eq!(params(&symplectic_graph(3, 2).unwrap()), (63, 32, 16, 16));
        for (r, q) in [(2, 2), (2, 3), (3, 2), (2, 4)] {
            let g = symplectic_graph(r, q).unwrap();
            assert!(g
                .lines
                .as_ref()
                .unwrap()
                .iter()
                .all(|l| l.len() == q + 1 && g.graph.is_clique(l)));
        }
        assert!(matches!(
            symplectic_graph(1, 2),
            Err(ConstructionError::ParamOutOfRange { .. })
        ));
        assert!(matches!(
            symplectic_graph(2, 11),
            Err(ConstructionError::ParamOutOfRange { .. })
        ));
    }

    #[test]
    fn symplectic_adjacency_ignores_scaling() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for q in [3, 4, 5] {
            let f = Field::of_order(q).unwrap();
            let g = symplectic_graph(2, q).unwrap();
            let pts = projective_points(&f, 4);
            let form = SymplecticForm::new(2);
            for _ in 0..300 {
                let (i, j) = (rng.gen_range(0..pts.len()), rng.gen_range(0..pts.len()));
                let scale = |p: &ProjectivePoint, c: usize| -> Vec<FieldElement> {
                    p.coords().iter().map(|&x| f.mul(x, f.element(c))).collect()
                };
                let x = scale(&pts[i], rng.gen_range(1..q));
                let y = scale(&pts[j], rng.gen_range(1..q));
                assert_eq!(!form.pair(&f, &x, &y).unwrap().is_zero(), g.graph.has_edge(i, j));
            }
        }
    }

    #[test]
    fn quadric_examples() {
        assert_eq!(params(&quadric_graph(QuadricSign::Plus, 3).unwrap()), (28, 12, 6, 4));
        assert_eq!(params(&quadric_graph(QuadricSign::Minus, 3).unwrap()), (36, 20, 10, 12));
        assert_eq!(params(&quadric_graph(QuadricSign::Minus, 2).unwrap()), (10, 6, 3, 4));
        assert!(matches!(
            quadric_graph(QuadricSign::Plus, 2),
            Err(ConstructionError::ParamOutOfRange { .. })
        ));
        for sign in [QuadricSign::Plus, QuadricSign::Minus] {
            let g = quadric_graph(sign, 3).unwrap();
            assert!(g.lines.as_ref().unwrap().iter().all(|l| l.len() == 3));
        }
    }

    #[test]
    fn quadric_is_induced_symplectic_graph() {
        let sp = symplectic_graph(3, 2).unwrap();
        for sign in [QuadricSign::Plus, QuadricSign::Minus] {
            let o = quadric_graph(sign, 3).unwrap();
            // bit-string labels read as coordinate vectors
            let keep: Vec<usize> = o
                .labels
                .iter()
                .map(|bits| {
                    let coords: Vec<String> = bits.chars().map(|c| c.to_string()).collect();
                    sp.vertex(&format!("({})", coords.join(","))).unwrap()
                })
                .collect();
            for i in 0..keep.len() {
                for j in i + 1..keep.len() {
                    assert_eq!(o.graph.has_edge(i, j), sp.graph.has_edge(keep[i], keep[j]));
                }
            }
        }
    }

    #[test]
    fn sporadic_examples() {
        assert_eq!(params(&twenty_seven_lines()), (27, 10, 1, 5));
        assert_eq!(params(&schlafli()), (27, 16, 10, 8));
        assert_eq!(twenty_seven_lines().graph.complement(), schlafli().graph);
        assert_eq!(params(&clebsch()), (16, 5, 0, 2));
        assert_eq!(params(&shrikhande()), (16, 6, 2, 2));
        assert_ne!(shrikhande().graph, lattice(4).unwrap().graph);
    }

    #[test]
    fn schlafli_triangle_neighborhoods() {
        let g = schlafli().graph;
        for a in 0..27 {
            for b in a + 1..27 {
                for c in b + 1..27 {
                    if g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c) {
                        assert_eq!(g.neighborhood(&VertexSet::from_vertices(27, [a, b, c])).len(), 21);
                    }
                }
            }
        }
    }

    #[test]
    fn chang_graphs() {
        let t8 = triangular(8).unwrap();
        for i in 1..=3 {
            let c = chang(i).unwrap();
            assert_eq!(params(&c), (28, 12, 6, 4));
            assert_ne!(c.graph, t8.graph);
        }
        assert!(matches!(chang(4), Err(ConstructionError::ParamOutOfRange { .. })));
    }

    #[test]
    fn complements() {
        let p = FamilySpec::Triangular { m: 5 }.complement().build().unwrap();
        assert_eq!(params(&p), (10, 3, 0, 1));
        assert_eq!(p.spec.id(), "complement(T(5))");
        assert!(FamilySpec::Triangular { m: 4 }.complement().build().is_err());
    }
}
