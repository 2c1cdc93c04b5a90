//! Simplicial complexes stored by their facets.
//!
//! A complex is an antichain of vertex sets over `0..vertex_count`. It always
//! has at least one facet: the complex whose only face is the empty set is
//! the single facet `∅`, and a complex with no faces at all cannot be built.
//! Vertex labels are never re-indexed by [`SimplicialComplex::link`] or
//! [`SimplicialComplex::delete_vertex`], so every complex met while walking a
//! decomposition speaks in the labels of the complex it started from.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{data_lines, parse_err, parse_numbers, Graph};
use crate::set::{VertexSet, MAX_VERTICES};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertex_count: usize,
    /// Sorted lexicographically, pairwise incomparable.
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Builds a complex from an explicit antichain of facets.
    pub fn new(vertex_count: usize, facets: Vec<VertexSet>) -> Result<Self> {
        if vertex_count > MAX_VERTICES {
            return Err(Error::TooManyVertices(vertex_count));
        }
        if facets.is_empty() {
            return Err(Error::InvalidComplex(
                "a complex needs at least one facet (use the empty facet for {∅})".into(),
            ));
        }
        let range = VertexSet::full(vertex_count);
        for f in &facets {
            if !f.is_subset(range) {
                return Err(Error::InvalidComplex(format!(
                    "facet {{{f}}} uses a vertex outside 0..{vertex_count}"
                )));
            }
        }
        for (i, a) in facets.iter().enumerate() {
            for b in &facets[i + 1..] {
                if a.is_subset(*b) || b.is_subset(*a) {
                    return Err(Error::InvalidComplex(format!(
                        "facets {{{a}}} and {{{b}}} are nested"
                    )));
                }
            }
        }
        let mut facets = facets;
        facets.sort_unstable();
        Ok(SimplicialComplex {
            vertex_count,
            facets,
        })
    }

    /// The complex generated by `sets`: every set and all of its subsets.
    /// An empty generator list produces `{∅}`.
    pub fn generated_by(vertex_count: usize, sets: impl IntoIterator<Item = VertexSet>) -> Self {
        let mut sets: Vec<VertexSet> = sets.into_iter().collect();
        sets.sort_unstable_by_key(|s| std::cmp::Reverse(s.len()));
        let mut facets: Vec<VertexSet> = Vec::with_capacity(sets.len());
        for s in sets {
            if !facets.iter().any(|f| s.is_subset(*f)) {
                facets.push(s);
            }
        }
        if facets.is_empty() {
            facets.push(VertexSet::EMPTY);
        }
        facets.sort_unstable();
        debug_assert!(facets
            .iter()
            .all(|f| f.is_subset(VertexSet::full(vertex_count))));
        SimplicialComplex {
            vertex_count,
            facets,
        }
    }

    /// The full simplex on `facet`.
    pub fn simplex(vertex_count: usize, facet: VertexSet) -> Result<Self> {
        SimplicialComplex::new(vertex_count, vec![facet])
    }

    /// Complex of independent sets of `g`; its facets are the maximal
    /// independent sets, found as maximal cliques of the complement.
    pub fn independence_complex(g: &Graph) -> Self {
        let h = g.complement();
        let mut facets = Vec::new();
        bron_kerbosch(
            &h,
            VertexSet::EMPTY,
            h.vertices(),
            VertexSet::EMPTY,
            &mut facets,
        );
        facets.sort_unstable();
        SimplicialComplex {
            vertex_count: g.vertex_count(),
            facets,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// Vertices that occur in some facet.
    pub fn support(&self) -> VertexSet {
        self.facets.iter().fold(VertexSet::EMPTY, |acc, f| acc | *f)
    }

    pub fn is_face(&self, f: VertexSet) -> bool {
        self.facets.iter().any(|facet| f.is_subset(*facet))
    }

    pub fn is_facet(&self, f: VertexSet) -> bool {
        self.facets.binary_search(&f).is_ok()
    }

    /// `link(F) = { G : G ∩ F = ∅, G ∪ F ∈ Δ }`.
    pub fn link(&self, f: VertexSet) -> Result<Self> {
        if !self.is_face(f) {
            return Err(Error::NotAFace(f));
        }
        Ok(SimplicialComplex::generated_by(
            self.vertex_count,
            self.facets
                .iter()
                .filter(|facet| f.is_subset(**facet))
                .map(|facet| *facet - f),
        ))
    }

    /// Faces not containing `v`.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        if v >= self.vertex_count {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            });
        }
        Ok(SimplicialComplex::generated_by(
            self.vertex_count,
            self.facets.iter().map(|f| f.without(v)),
        ))
    }

    pub fn is_pure(&self) -> bool {
        let d = self.facets[0].len();
        self.facets.iter().all(|f| f.len() == d)
    }

    /// Largest facet size minus one; `{∅}` has dimension -1.
    pub fn dimension(&self) -> isize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0) as isize - 1
    }

    /// Facet-list text: header `n k` then one ascending facet per line, the
    /// empty facet written as `-`.
    pub fn to_facet_list(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count, self.facets.len());
        for f in &self.facets {
            out.push_str(&f.to_string());
            out.push('\n');
        }
        out
    }

    pub fn parse_facet_list(text: &str) -> Result<Self> {
        let mut lines = data_lines(text);
        let (line, header) = lines.next().ok_or_else(|| parse_err(0, "missing header"))?;
        let [n, k] = parse_numbers::<2>(line, header)?;
        if n > MAX_VERTICES {
            return Err(parse_err(
                line,
                format!("vertex count {n} exceeds {MAX_VERTICES}"),
            ));
        }
        let mut facets = Vec::with_capacity(k);
        for (line, body) in lines {
            if facets.len() == k {
                return Err(parse_err(
                    line,
                    format!("more than the declared {k} facets"),
                ));
            }
            facets.push(parse_vertex_list(line, body, n)?);
        }
        if facets.len() != k {
            return Err(parse_err(
                0,
                format!("declared {k} facets, found {}", facets.len()),
            ));
        }
        SimplicialComplex::new(n, facets).map_err(|e| parse_err(0, e.to_string()))
    }
}

/// One facet line: strictly ascending vertices below `n`, or `-`.
pub(crate) fn parse_vertex_list(line: usize, body: &str, n: usize) -> Result<VertexSet> {
    if body == "-" {
        return Ok(VertexSet::EMPTY);
    }
    let mut s = VertexSet::EMPTY;
    let mut last = None;
    for tok in body.split_whitespace() {
        let v: usize = tok
            .parse()
            .map_err(|_| parse_err(line, format!("not a vertex: {tok:?}")))?;
        if v >= n {
            return Err(parse_err(line, format!("vertex {v} out of range 0..{n}")));
        }
        if last.is_some_and(|l| v <= l) {
            return Err(parse_err(line, "facet vertices must be strictly ascending"));
        }
        last = Some(v);
        s.insert(v);
    }
    Ok(s)
}

fn bron_kerbosch(
    h: &Graph,
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = (p | x)
        .iter()
        .max_by_key(|&u| (p & h.adjacency(u)).len())
        .expect("p is non-empty");
    for v in p - h.adjacency(pivot) {
        let nv = h.adjacency(v);
        bron_kerbosch(h, r.with(v), p & nv, x & nv, out);
        p.remove(v);
        x.insert(v);
    }
}

impl FromStr for SimplicialComplex {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SimplicialComplex::parse_facet_list(s)
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex(n={}, facets=", self.vertex_count)?;
        f.debug_list().entries(&self.facets).finish()?;
        f.write_str(")")
    }
}
