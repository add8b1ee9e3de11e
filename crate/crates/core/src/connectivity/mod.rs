//! Vertex connectivity, restricted connectivity `kappa2`, and cut certificates.
//!
//! A cut `S` is *valid* when `G - S` has at least two components and every
//! component has at least two vertices. `kappa2(G)` is the least size of a
//! valid cut.

mod brute;
mod flow;
mod kappa2;

use std::fmt;

use thiserror::Error;

use crate::constructions::ConstructedGraph;
use crate::graph::{Graph, VertexSet};

pub use brute::{kappa2_bruteforce, BRUTE_FORCE_MAX_ORDER};
pub use flow::{local_connectivity, vertex_connectivity};
pub use kappa2::{
    enumerate_optimal_cuts, kappa2_exact, separator_cost, Kappa2, Kappa2Options, Kappa2Result, SearchStats,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConnectivityError {
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is complete")]
    CompleteGraph,
    #[error("graph on {0} vertices is too large for exhaustive search")]
    TooLarge(usize),
    #[error("search exceeded its node budget after {} nodes", .0.stats.nodes)]
    BudgetExceeded(Box<Kappa2Result>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Error)]
pub enum InvalidCut {
    #[error("removing the set leaves the graph connected")]
    Connected,
    #[error("removing the set leaves a singleton component")]
    HasSingleton,
    #[error("removing the set leaves no vertices")]
    EmptyRemainder,
    #[error("sides do not partition the vertex set")]
    NotPartition,
    #[error("an edge joins the two sides")]
    SidesAdjacent,
    #[error("graph has no line {0}")]
    NoSuchLine(usize),
}

/// A valid cut `S` with `A` a union of components of `G - S` and `B` the rest.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CutCertificate {
    pub a: VertexSet,
    pub s: VertexSet,
    pub b: VertexSet,
}

impl fmt::Debug for CutCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cut(A={:?}, S={:?}, B={:?})", self.a, self.s, self.b)
    }
}

impl CutCertificate {
    pub fn size(&self) -> usize {
        self.s.len()
    }

    /// Checks the certificate exactly as given: partition, no `A`-`B` edge,
    /// and no singleton component on either side.
    pub fn check(&self, g: &Graph) -> Result<(), InvalidCut> {
        let n = g.order();
        let all = VertexSet::full(n);
        let union = self.a.union(&self.s).union(&self.b);
        if union != all || !self.a.is_disjoint(&self.s) || !self.a.is_disjoint(&self.b) || !self.s.is_disjoint(&self.b)
        {
            return Err(InvalidCut::NotPartition);
        }
        if self.a.is_empty() || self.b.is_empty() {
            return Err(InvalidCut::Connected);
        }
        if !g.neighborhood(&self.a).is_disjoint(&self.b) {
            return Err(InvalidCut::SidesAdjacent);
        }
        let side_ok = |side: &VertexSet| g.components(side).iter().all(|c| c.len() >= 2);
        if side_ok(&self.a) && side_ok(&self.b) {
            Ok(())
        } else {
            Err(InvalidCut::HasSingleton)
        }
    }
}

/// Validates `s` as a cut; `A` is the smallest component (least vertex on ties).
pub fn verify_cut(g: &Graph, s: &VertexSet) -> Result<CutCertificate, InvalidCut> {
    let rest = s.complement();
    if rest.is_empty() {
        return Err(InvalidCut::EmptyRemainder);
    }
    let comps = g.components(&rest);
    if comps.iter().any(|c| c.len() < 2) {
        return Err(InvalidCut::HasSingleton);
    }
    if comps.len() < 2 {
        return Err(InvalidCut::Connected);
    }
    let a = comps.iter().min_by_key(|c| c.len()).unwrap().clone();
    let b = rest.difference(&a);
    Ok(CutCertificate { a, s: s.clone(), b })
}

/// Certificate with `A` equal to the given clique and `S = N(A)`.
pub fn clique_cut(g: &Graph, clique: &VertexSet) -> Result<CutCertificate, InvalidCut> {
    let s = g.neighborhood(clique);
    verify_cut(g, &s)?;
    let b = clique.union(&s).complement();
    Ok(CutCertificate {
        a: clique.clone(),
        s,
        b,
    })
}

/// [`clique_cut`] for the given line of a constructed graph.
pub fn clique_cut_certificate(cg: &ConstructedGraph, line: usize) -> Result<CutCertificate, InvalidCut> {
    let clique = cg
        .lines
        .as_ref()
        .and_then(|l| l.get(line))
        .ok_or(InvalidCut::NoSuchLine(line))?;
    clique_cut(&cg.graph, clique)
}

pub(crate) fn check_searchable(g: &Graph) -> Result<(), ConnectivityError> {
    if g.is_complete() {
        Err(ConnectivityError::CompleteGraph)
    } else if !g.is_connected() {
        Err(ConnectivityError::Disconnected)
    } else {
        Ok(())
    }
}
