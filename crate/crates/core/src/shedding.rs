//! Shedding vertices, at the level of complexes and of graphs, and the
//! exhaustive vertex-decomposability oracle.

use std::collections::HashMap;

use crate::complex::SimplicialComplex;
use crate::decompose::{Certificate, Leaf, Rule};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::set::{VertexSet, MAX_VERTICES};

/// `v` is shedding when no face of `link(v)` is a facet of `Δ \ v`.
///
/// Only facets of the deletion can witness a violation, and a facet `F` of
/// the deletion is a face of the link exactly when `F ∪ {v}` is a face.
pub fn is_shedding_vertex_complex(c: &SimplicialComplex, v: usize) -> Result<bool> {
    if v >= c.vertex_count() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            vertex_count: c.vertex_count(),
        });
    }
    if !c.is_face(VertexSet::singleton(v)) {
        return Err(Error::NotAFace(VertexSet::singleton(v)));
    }
    let deletion = c.delete_vertex(v)?;
    Ok(!deletion.facets().iter().any(|f| c.is_face(f.with(v))))
}

/// Graph-level shedding test: every maximal independent set of `g \ v`
/// meets `N(v)`.
pub fn is_shedding_vertex_graph(g: &Graph, v: usize) -> Result<bool> {
    let nbhd = g.open_neighborhood(v)?;
    let sub = g.delete_vertices(VertexSet::singleton(v));
    let mis = SimplicialComplex::independence_complex(&sub.graph);
    Ok(mis
        .facets()
        .iter()
        .all(|f| f.iter().any(|i| nbhd.contains(sub.original[i]))))
}

/// All shedding vertices of `c`, ascending. Labels that are not vertices of
/// the complex are skipped.
pub fn shedding_vertices(c: &SimplicialComplex) -> Vec<usize> {
    c.support()
        .iter()
        .filter(|&v| is_shedding_vertex_complex(c, v).unwrap_or(false))
        .collect()
}

/// Vertices whose closed neighbourhood is a clique.
pub fn simplicial_vertices(g: &Graph) -> Vec<usize> {
    (0..g.vertex_count())
        .filter(|&v| g.is_simplicial(v))
        .collect()
}

/// Decides vertex decomposability by trying every shedding vertex in
/// ascending order, memoised on the facet set compacted to its support.
///
/// The memo is owned by the oracle; use one oracle per worker thread.
#[derive(Debug, Default)]
pub struct BruteForceOracle {
    memo: HashMap<Vec<u64>, bool>,
}

impl BruteForceOracle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn decide(&mut self, c: &SimplicialComplex) -> bool {
        if c.facet_count() == 1 {
            return true;
        }
        let (key, compact) = canonical(c);
        if let Some(&known) = self.memo.get(&key) {
            return known;
        }
        let answer = compact
            .support()
            .iter()
            .any(|v| self.splits_at(&compact, v));
        self.memo.insert(key, answer);
        answer
    }

    /// A certificate in `c`'s own labels, or `None` when `c` is not vertex
    /// decomposable.
    pub fn certify(&mut self, c: &SimplicialComplex) -> Option<Certificate> {
        if c.facet_count() == 1 {
            return Some(Certificate::Leaf {
                leaf: Leaf::SingleFacet {
                    facet: c.facets()[0],
                },
            });
        }
        if !self.decide(c) {
            return None;
        }
        let v = c.support().iter().find(|&v| self.splits_at(c, v))?;
        let deletion = c.delete_vertex(v).ok()?;
        let link = c.link(VertexSet::singleton(v)).ok()?;
        Some(Certificate::Shed {
            rule: Rule::Bruteforce,
            vertex: v,
            deletion: Box::new(self.certify(&deletion)?),
            link: Box::new(self.certify(&link)?),
        })
    }

    fn splits_at(&mut self, c: &SimplicialComplex, v: usize) -> bool {
        if !matches!(is_shedding_vertex_complex(c, v), Ok(true)) {
            return false;
        }
        let deletion = c.delete_vertex(v).expect("v is in range");
        if !self.decide(&deletion) {
            return false;
        }
        let link = c.link(VertexSet::singleton(v)).expect("{v} is a face");
        self.decide(&link)
    }
}

/// Facets re-indexed onto `0..|support|` in label order, plus the memo key.
fn canonical(c: &SimplicialComplex) -> (Vec<u64>, SimplicialComplex) {
    let support = c.support();
    let mut position = [0usize; MAX_VERTICES];
    for (i, v) in support.iter().enumerate() {
        position[v] = i;
    }
    let mut facets: Vec<VertexSet> = c
        .facets()
        .iter()
        .map(|f| f.iter().map(|v| position[v]).collect())
        .collect();
    facets.sort_unstable();
    let key = facets.iter().map(|f| f.bits()).collect();
    let compact =
        SimplicialComplex::new(support.len(), facets).expect("relabelling preserves the antichain");
    (key, compact)
}

/// Exhaustive vertex-decomposability check with a fresh memo.
pub fn is_vertex_decomposable_bruteforce(c: &SimplicialComplex) -> (bool, Option<Certificate>) {
    let cert = BruteForceOracle::new().certify(c);
    (cert.is_some(), cert)
}
