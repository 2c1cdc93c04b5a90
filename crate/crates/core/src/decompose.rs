//! Vertex-decomposition certificates for independence complexes of
//! complements of connected bipartite graphs, their verification, and the
//! shelling orders they induce.
//!
//! Writing `H` for the complement of a connected bipartite graph `G` with
//! parts `A` and `B`, the faces of `Δ_H` are the cliques of `G`: its
//! vertices and edges. The generator sheds one vertex `x` of `G` at a time.
//! The deletion `Δ_H \ x` is `Δ` of the complement of `G \ x`, which the
//! generator keeps connected and recurses on. The link of `x` is `Δ` of `H`
//! restricted to `N_G(x)`, a complete graph, and is handled by
//! [`decompose_clique_union`]. The vertex `x` is chosen by three rules,
//! tried in order:
//!
//! 1. *dominating vertex*: some `v` is adjacent to the whole opposite part.
//!    Then `v` is simplicial in `H`, so each other vertex of its part is a
//!    shedding vertex; shed the least one. When a part is a singleton, `H`
//!    is a disjoint union of cliques and is decomposed directly.
//! 2. *free vertex*: shed the least vertex of degree one.
//! 3. *cycle vertex*: shed the least vertex lying on a cycle whose removal
//!    keeps `G` connected.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::{parse_vertex_list, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::{Bipartiteness, Graph};
use crate::set::VertexSet;
use crate::shedding::is_shedding_vertex_complex;

/// Version written into every certificate document.
pub const FORMAT_VERSION: u32 = 1;

/// Which construction step produced an internal certificate node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    DominatingVertex,
    FreeVertex,
    CycleVertex,
    CliqueUnion,
    Bruteforce,
}

impl Rule {
    pub const ALL: [Rule; 5] = [
        Rule::DominatingVertex,
        Rule::FreeVertex,
        Rule::CycleVertex,
        Rule::CliqueUnion,
        Rule::Bruteforce,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Rule::DominatingVertex => "dominating-vertex",
            Rule::FreeVertex => "free-vertex",
            Rule::CycleVertex => "cycle-vertex",
            Rule::CliqueUnion => "clique-union",
            Rule::Bruteforce => "bruteforce",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Base case of a certificate. Both kinds assert that the complex has a
/// single facet; a discrete graph's independence complex is the simplex on
/// its vertex set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Leaf {
    SingleFacet { facet: VertexSet },
    Discrete { vertices: VertexSet },
}

impl Leaf {
    /// The one facet the leaf claims.
    pub fn facet(&self) -> VertexSet {
        match *self {
            Leaf::SingleFacet { facet } => facet,
            Leaf::Discrete { vertices } => vertices,
        }
    }
}

/// Binary tree of shedding vertices. Labels are those of the root complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Certificate {
    Shed {
        rule: Rule,
        vertex: usize,
        #[serde(rename = "del")]
        deletion: Box<Certificate>,
        link: Box<Certificate>,
    },
    Leaf {
        leaf: Leaf,
    },
}

impl Certificate {
    fn shed(rule: Rule, vertex: usize, deletion: Certificate, link: Certificate) -> Self {
        Certificate::Shed {
            rule,
            vertex,
            deletion: Box::new(deletion),
            link: Box::new(link),
        }
    }

    fn discrete(vertices: VertexSet) -> Self {
        Certificate::Leaf {
            leaf: Leaf::Discrete { vertices },
        }
    }

    pub fn internal_nodes(&self) -> usize {
        match self {
            Certificate::Leaf { .. } => 0,
            Certificate::Shed { deletion, link, .. } => {
                1 + deletion.internal_nodes() + link.internal_nodes()
            }
        }
    }

    /// Largest number of sheds on any root-to-leaf path.
    pub fn depth(&self) -> usize {
        match self {
            Certificate::Leaf { .. } => 0,
            Certificate::Shed { deletion, link, .. } => 1 + deletion.depth().max(link.depth()),
        }
    }

    /// Adds the rule of every internal node to `counts`.
    pub fn count_rules(&self, counts: &mut BTreeMap<Rule, u64>) {
        if let Certificate::Shed {
            rule,
            deletion,
            link,
            ..
        } = self
        {
            *counts.entry(*rule).or_default() += 1;
            deletion.count_rules(counts);
            link.count_rules(counts);
        }
    }

    /// Shed vertices along every root-to-leaf path, for checking that no path
    /// sheds a vertex twice.
    pub fn paths(&self) -> Vec<Vec<usize>> {
        match self {
            Certificate::Leaf { .. } => vec![Vec::new()],
            Certificate::Shed {
                vertex,
                deletion,
                link,
                ..
            } => deletion
                .paths()
                .into_iter()
                .chain(link.paths())
                .map(|mut p| {
                    p.insert(0, *vertex);
                    p
                })
                .collect(),
        }
    }
}

/// On-disk form of a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateDocument {
    pub format_version: u32,
    pub vertex_count: usize,
    pub certificate: Certificate,
}

impl CertificateDocument {
    pub fn new(vertex_count: usize, certificate: Certificate) -> Self {
        CertificateDocument {
            format_version: FORMAT_VERSION,
            vertex_count,
            certificate,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificates serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: CertificateDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        if doc.format_version != FORMAT_VERSION {
            return Err(Error::FormatVersion(doc.format_version));
        }
        Ok(doc)
    }
}

/// Certificate for `Δ` of the complement of a connected bipartite graph.
pub fn decompose_bipartite_complement(g: &Graph) -> Result<Certificate> {
    if let Bipartiteness::OddCycle(witness) = g.bipartition() {
        return Err(Error::NotBipartite { witness });
    }
    g.require_connected()?;
    let labels: Vec<usize> = (0..g.vertex_count()).collect();
    bipartite_step(g, &labels)
}

fn bipartite_step(g: &Graph, labels: &[usize]) -> Result<Certificate> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Certificate::discrete(VertexSet::EMPTY));
    }
    let parts = match g.bipartition() {
        Bipartiteness::Bipartite(b) => b,
        Bipartiteness::OddCycle(_) => {
            return Err(Error::InvariantViolation(
                "subgraph lost bipartiteness".into(),
            ))
        }
    };

    if let Some(v) = (0..n).find(|&v| g.adjacency(v) == parts.sides_of(v).1) {
        let (own, other) = parts.sides_of(v);
        if own.len() == 1 || other.len() == 1 {
            return clique_union_step(&g.complement(), labels);
        }
        let x = own
            .without(v)
            .min()
            .expect("part has at least two vertices");
        return shed_bipartite(g, labels, x, Rule::DominatingVertex);
    }
    if let Some(&x) = g.free_vertices().first() {
        return shed_bipartite(g, labels, x, Rule::FreeVertex);
    }
    let x = g.find_connectivity_preserving_cycle_vertex()?;
    shed_bipartite(g, labels, x, Rule::CycleVertex)
}

fn shed_bipartite(g: &Graph, labels: &[usize], x: usize, rule: Rule) -> Result<Certificate> {
    let rest = g.delete_vertices(VertexSet::singleton(x));
    if !rest.graph.is_connected() {
        return Err(Error::InvariantViolation(format!(
            "removing {} disconnects the graph ({rule})",
            labels[x]
        )));
    }
    let deletion = bipartite_step(&rest.graph, &relabel(labels, &rest.original))?;

    let h = g.complement();
    let closed = h.closed_neighborhood(x)?;
    let remote = h.delete_vertices(closed);
    if !remote.graph.is_clique_union() {
        return Err(Error::InvariantViolation(format!(
            "link of {} is not a union of cliques",
            labels[x]
        )));
    }
    let link = clique_union_step(&remote.graph, &relabel(labels, &remote.original))?;
    Ok(Certificate::shed(rule, labels[x], deletion, link))
}

/// Certificate for `Δ_g` when `g` is a disjoint union of complete graphs:
/// shed the least vertex of a clique of size at least two until the graph
/// is discrete.
pub fn decompose_clique_union(g: &Graph) -> Result<Certificate> {
    if !g.is_clique_union() {
        return Err(Error::NotCliqueUnion);
    }
    let labels: Vec<usize> = (0..g.vertex_count()).collect();
    clique_union_step(g, &labels)
}

fn clique_union_step(g: &Graph, labels: &[usize]) -> Result<Certificate> {
    let Some(x) = (0..g.vertex_count()).find(|&v| g.degree(v) > 0) else {
        return Ok(Certificate::discrete(labels.iter().copied().collect()));
    };
    let rest = g.delete_vertices(VertexSet::singleton(x));
    let deletion = clique_union_step(&rest.graph, &relabel(labels, &rest.original))?;
    let remote = g.delete_vertices(g.closed_neighborhood(x)?);
    let link = clique_union_step(&remote.graph, &relabel(labels, &remote.original))?;
    Ok(Certificate::shed(
        Rule::CliqueUnion,
        labels[x],
        deletion,
        link,
    ))
}

fn relabel(labels: &[usize], original: &[usize]) -> Vec<usize> {
    original.iter().map(|&i| labels[i]).collect()
}

/// Checks `cert` against `c` from the definitions alone: leaves must match
/// the complex's single facet, and every shed vertex must pass the
/// complex-level shedding test before both children are checked against
/// the deletion and the link. Rule tags are ignored.
pub fn verify_certificate(c: &SimplicialComplex, cert: &Certificate) -> Result<()> {
    verify_at(c, cert, &mut String::from("root"))
}

fn verify_at(c: &SimplicialComplex, cert: &Certificate, path: &mut String) -> Result<()> {
    let fail = |path: &str, why: String| Err(Error::Unverified(format!("at {path}: {why}")));
    match cert {
        Certificate::Leaf { leaf } => {
            if c.facet_count() != 1 {
                return fail(
                    path,
                    format!(
                        "leaf reached but the complex has {} facets",
                        c.facet_count()
                    ),
                );
            }
            if c.facets()[0] != leaf.facet() {
                return fail(
                    path,
                    format!(
                        "leaf claims facet {{{}}} but the complex's facet is {{{}}}",
                        leaf.facet(),
                        c.facets()[0]
                    ),
                );
            }
            Ok(())
        }
        Certificate::Shed {
            vertex,
            deletion,
            link,
            ..
        } => {
            let v = *vertex;
            if v >= c.vertex_count() || !c.is_face(VertexSet::singleton(v)) {
                return fail(path, format!("{v} is not a vertex of the complex"));
            }
            if !is_shedding_vertex_complex(c, v)? {
                return fail(path, format!("{v} is not a shedding vertex"));
            }
            let mark = path.len();
            path.push_str(".del");
            verify_at(&c.delete_vertex(v)?, deletion, path)?;
            path.truncate(mark);
            path.push_str(".link");
            verify_at(&c.link(VertexSet::singleton(v))?, link, path)?;
            path.truncate(mark);
            Ok(())
        }
    }
}

/// An ordering of the facets of a complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShellingOrder(pub Vec<VertexSet>);

impl ShellingOrder {
    pub fn facets(&self) -> &[VertexSet] {
        &self.0
    }

    /// One facet per line, the empty facet as `-`.
    pub fn to_lines(&self) -> String {
        self.0.iter().map(|f| format!("{f}\n")).collect()
    }

    pub fn parse_lines(text: &str, vertex_count: usize) -> Result<Self> {
        crate::graph::data_lines(text)
            .map(|(line, body)| parse_vertex_list(line, body, vertex_count))
            .collect::<Result<Vec<_>>>()
            .map(ShellingOrder)
    }
}

/// The shelling induced by a verified certificate: a shelling of the
/// deletion followed by the link's shelling with the shed vertex added back.
pub fn shelling_from_certificate(
    c: &SimplicialComplex,
    cert: &Certificate,
) -> Result<ShellingOrder> {
    verify_certificate(c, cert)?;
    let mut order = Vec::with_capacity(c.facet_count());
    collect_shelling(cert, VertexSet::EMPTY, &mut order);
    Ok(ShellingOrder(order))
}

fn collect_shelling(cert: &Certificate, cone: VertexSet, out: &mut Vec<VertexSet>) {
    match cert {
        Certificate::Leaf { leaf } => out.push(leaf.facet() | cone),
        Certificate::Shed {
            vertex,
            deletion,
            link,
            ..
        } => {
            collect_shelling(deletion, cone, out);
            collect_shelling(link, cone.with(*vertex), out);
        }
    }
}

/// Shelling test in the non-pure sense: for each facet `F` after the first,
/// the faces it shares with earlier facets form a pure complex of dimension
/// `dim F - 1`. Equivalently every `F_i ∩ F` with `i` earlier lies inside
/// some earlier `F_k ∩ F` of size `|F| - 1`.
pub fn is_shelling_order(c: &SimplicialComplex, order: &ShellingOrder) -> Result<bool> {
    let mut given = order.0.clone();
    given.sort_unstable();
    if given != c.facets() {
        return Err(Error::NotAPermutation(format!(
            "{} facets given for a complex with {}",
            order.0.len(),
            c.facet_count()
        )));
    }
    for (j, &f) in order.0.iter().enumerate().skip(1) {
        let earlier = &order.0[..j];
        let ridges: Vec<VertexSet> = earlier
            .iter()
            .map(|&g| g & f)
            .filter(|r| r.len() + 1 == f.len())
            .collect();
        let ok = earlier
            .iter()
            .all(|&g| ridges.iter().any(|r| (g & f).is_subset(*r)));
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}
