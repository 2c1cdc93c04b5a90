//! Finite simple undirected graphs on dense vertex labels `0..n`.
//!
//! Besides the usual neighbourhood and connectivity queries this module
//! provides the structural predicates the decomposition of bipartite
//! complements is driven by: canonical bipartitions with odd-cycle
//! witnesses, free (degree one) vertices, and the selection of a cycle
//! vertex whose removal keeps the graph connected.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::set::{VertexSet, MAX_VERTICES};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

/// Two-colouring of a bipartite graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub left: VertexSet,
    pub right: VertexSet,
}

impl Bipartition {
    /// The part containing `v` and the opposite part.
    pub fn sides_of(&self, v: usize) -> (VertexSet, VertexSet) {
        if self.left.contains(v) {
            (self.left, self.right)
        } else {
            (self.right, self.left)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartiteness {
    Bipartite(Bipartition),
    /// Vertices of an odd cycle, in cycle order.
    OddCycle(Vec<usize>),
}

/// An induced subgraph together with the label each new vertex had in the
/// graph it was cut from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `original[new] = old`.
    pub original: Vec<usize>,
}

impl InducedSubgraph {
    /// Position of an old label in the subgraph, if it survived.
    pub fn new_index(&self, old: usize) -> Option<usize> {
        self.original.binary_search(&old).ok()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Parse {
                line: 0,
                message: format!("self-loop at vertex {u}"),
            });
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("valid path")
    }

    /// The cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        Graph::from_edges(n, &edges).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n).expect("vertex count in range");
        let all = VertexSet::full(n);
        for v in 0..n {
            g.adj[v] = all.without(v);
        }
        g
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::new(a + b).expect("vertex count in range");
        for u in 0..a {
            for v in a..a + b {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, a)| a.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbours of `v` as a set, without range checking.
    pub(crate) fn adjacency(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn open_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v])
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v].with(v))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        Graph {
            adj: self
                .adj
                .iter()
                .enumerate()
                .map(|(v, a)| (all - *a).without(v))
                .collect(),
        }
    }

    /// Subgraph induced on the vertices outside `removed`, re-indexed densely
    /// in increasing label order.
    pub fn delete_vertices(&self, removed: VertexSet) -> InducedSubgraph {
        self.induced(self.vertices() - removed)
    }

    pub fn induced(&self, keep: VertexSet) -> InducedSubgraph {
        let keep = keep & self.vertices();
        let original = keep.to_vec();
        let mut position = [usize::MAX; MAX_VERTICES];
        for (new, &old) in original.iter().enumerate() {
            position[old] = new;
        }
        let adj = original
            .iter()
            .map(|&old| (self.adj[old] & keep).iter().map(|w| position[w]).collect())
            .collect();
        InducedSubgraph {
            graph: Graph { adj },
            original,
        }
    }

    /// Vertices reachable from `start` without leaving `within`.
    pub(crate) fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        if !within.contains(start) {
            return VertexSet::EMPTY;
        }
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            frontier = next & (within - seen);
            seen |= frontier;
        }
        seen
    }

    /// Connected components in order of their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.min() {
            let c = self.reach(v, left);
            left -= c;
            out.push(c);
        }
        out
    }

    /// Graphs with at most one vertex count as connected.
    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.reach(0, self.vertices()) == self.vertices()
    }

    /// Canonical two-colouring: the smallest vertex of each component goes
    /// left. A graph that is not bipartite yields an odd cycle found by BFS.
    pub fn bipartition(&self) -> Bipartiteness {
        let n = self.vertex_count();
        let mut side: Vec<Option<bool>> = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        let mut left = VertexSet::EMPTY;
        let mut right = VertexSet::EMPTY;
        for root in 0..n {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(false);
            left.insert(root);
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for w in self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            if su {
                                left.insert(w);
                            } else {
                                right.insert(w);
                            }
                            parent[w] = u;
                            depth[w] = depth[u] + 1;
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => {
                            return Bipartiteness::OddCycle(odd_cycle(&parent, &depth, u, w));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Bipartiteness::Bipartite(Bipartition { left, right })
    }

    pub fn is_bipartite(&self) -> bool {
        matches!(self.bipartition(), Bipartiteness::Bipartite(_))
    }

    /// Degree-one vertices in ascending order.
    pub fn free_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.degree(v) == 1)
            .collect()
    }

    /// Whether `v` lies on a cycle: some two neighbours of `v` stay connected
    /// once `v` is removed.
    pub fn is_on_cycle(&self, v: usize) -> Result<bool> {
        self.check_vertex(v)?;
        let rest = self.vertices().without(v);
        let mut unvisited = self.adj[v];
        while let Some(u) = unvisited.min() {
            let comp = self.reach(u, rest);
            if (comp & self.adj[v]).len() >= 2 {
                return Ok(true);
            }
            unvisited -= comp;
        }
        Ok(false)
    }

    /// Whether removing `v` disconnects the (connected) graph.
    pub fn is_cut_vertex(&self, v: usize) -> Result<bool> {
        self.check_vertex(v)?;
        self.require_connected()?;
        let rest = self.vertices().without(v);
        Ok(match rest.min() {
            None => false,
            Some(start) => self.reach(start, rest) != rest,
        })
    }

    /// Least vertex that lies on a cycle and is not a cut vertex.
    ///
    /// Requires a connected bipartite graph on at least two vertices with no
    /// free vertex. Such a vertex always exists then; failing to find one is
    /// reported as [`Error::InvariantViolation`].
    pub fn find_connectivity_preserving_cycle_vertex(&self) -> Result<usize> {
        self.require_connected()?;
        if let Bipartiteness::OddCycle(witness) = self.bipartition() {
            return Err(Error::NotBipartite { witness });
        }
        if let Some(&v) = self.free_vertices().first() {
            return Err(Error::HasFreeVertex(v));
        }
        if self.vertex_count() < 2 {
            return Err(Error::InvariantViolation(
                "cycle vertex requested on a graph with fewer than two vertices".into(),
            ));
        }
        for v in 0..self.vertex_count() {
            if self.is_on_cycle(v)? && !self.is_cut_vertex(v)? {
                return Ok(v);
            }
        }
        Err(Error::InvariantViolation(format!(
            "no non-separating cycle vertex in {self:?}"
        )))
    }

    /// Whether `s` induces a complete subgraph.
    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s.without(v)).is_subset(self.adj[v]))
    }

    /// Whether every component is a complete graph.
    pub fn is_clique_union(&self) -> bool {
        self.components().into_iter().all(|c| self.is_clique(c))
    }

    pub fn is_simplicial(&self, v: usize) -> bool {
        self.is_clique(self.adj[v].with(v))
    }

    /// Chordality by greedy elimination of simplicial vertices. Induced
    /// subgraphs of chordal graphs are chordal and always have a simplicial
    /// vertex, so greed never gets stuck on a chordal graph.
    pub fn is_chordal(&self) -> bool {
        let mut alive = self.vertices();
        'outer: while !alive.is_empty() {
            for v in alive {
                let nbhd = self.adj[v] & alive;
                if nbhd.iter().all(|u| nbhd.without(u).is_subset(self.adj[u])) {
                    alive.remove(v);
                    continue 'outer;
                }
            }
            return false;
        }
        true
    }

    /// Edge-list text: a header `n m` then `m` lines `u v` with `u < v`.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.vertex_count(), self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = data_lines(text);
        let (line, header) = lines.next().ok_or_else(|| parse_err(0, "missing header"))?;
        let [n, m] = parse_numbers::<2>(line, header)?;
        if n > MAX_VERTICES {
            return Err(parse_err(
                line,
                format!("vertex count {n} exceeds {MAX_VERTICES}"),
            ));
        }
        let mut g = Graph::new(n)?;
        let mut seen = 0;
        for (line, body) in lines {
            if seen == m {
                return Err(parse_err(line, format!("more than the declared {m} edges")));
            }
            let [u, v] = parse_numbers::<2>(line, body)?;
            if !(u < v && v < n) {
                return Err(parse_err(
                    line,
                    format!("edge {u} {v} needs 0 <= u < v < {n}"),
                ));
            }
            if g.has_edge(u, v) {
                return Err(parse_err(line, format!("duplicate edge {u} {v}")));
            }
            g.add_edge(u, v)?;
            seen += 1;
        }
        if seen != m {
            return Err(parse_err(0, format!("declared {m} edges, found {seen}")));
        }
        Ok(g)
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        let comps = self.components();
        if comps.len() > 1 {
            return Err(Error::Disconnected {
                first: comps[0],
                second: comps[1],
            });
        }
        Ok(())
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.vertex_count() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count(),
            });
        }
        Ok(())
    }
}

/// Odd cycle closed by the same-coloured edge `u`-`w` of a BFS forest,
/// starting at the lowest common ancestor of `u` and `w`.
fn odd_cycle(parent: &[usize], depth: &[usize], u: usize, w: usize) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut from_u = vec![a];
    let mut from_w = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        from_u.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        from_w.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        from_u.push(a);
        from_w.push(b);
    }
    // both end at the ancestor
    from_w.pop();
    from_u.reverse();
    from_u.extend(from_w);
    from_u
}

pub(crate) fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-blank, non-comment lines with 1-based line numbers.
pub(crate) fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_numbers<const K: usize>(line: usize, body: &str) -> Result<[usize; K]> {
    let mut out = [0usize; K];
    let mut fields = body.split_whitespace();
    for slot in out.iter_mut() {
        let tok = fields
            .next()
            .ok_or_else(|| parse_err(line, format!("expected {K} integers")))?;
        *slot = tok
            .parse()
            .map_err(|_| parse_err(line, format!("not a non-negative integer: {tok:?}")))?;
    }
    if fields.next().is_some() {
        return Err(parse_err(line, format!("expected {K} integers")));
    }
    Ok(out)
}

impl FromStr for Graph {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Graph::parse_edge_list(s)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.vertex_count())?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges).unwrap()
    }

    /// Every labelled graph on `n` vertices.
    fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        (0u64..1 << pairs.len()).map(move |mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    }

    /// Literal simple-cycle search: a closed walk through `v` of length >= 3
    /// with no repeated vertex.
    fn on_literal_cycle(g: &Graph, v: usize) -> bool {
        fn dfs(g: &Graph, start: usize, at: usize, used: VertexSet, len: usize) -> bool {
            for w in g.adjacency(at) {
                if w == start && len >= 3 {
                    return true;
                }
                if !used.contains(w) && dfs(g, start, w, used.with(w), len + 1) {
                    return true;
                }
            }
            false
        }
        dfs(g, v, v, VertexSet::singleton(v), 1)
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::path(3).complement(), g(3, &[(0, 2)]));
        assert_eq!(Graph::cycle(4).complement(), g(4, &[(0, 2), (1, 3)]));
    }

    #[test]
    fn complement_involution_and_edge_count_exhaustive() {
        for n in 0..=6 {
            for h in all_graphs(n) {
                let c = h.complement();
                assert_eq!(c.complement(), h);
                assert_eq!(h.edge_count() + c.edge_count(), n * n.saturating_sub(1) / 2);
            }
        }
    }

    #[test]
    fn neighborhoods() {
        let p = Graph::path(3);
        assert_eq!(p.open_neighborhood(1).unwrap(), set(&[0, 2]));
        assert_eq!(p.closed_neighborhood(1).unwrap(), set(&[0, 1, 2]));
        let iso = Graph::new(3).unwrap();
        assert_eq!(iso.open_neighborhood(2).unwrap(), VertexSet::EMPTY);
        assert_eq!(iso.closed_neighborhood(2).unwrap(), set(&[2]));
        let c4 = Graph::cycle(4);
        assert_eq!(c4.open_neighborhood(0).unwrap(), set(&[1, 3]));
        assert_eq!(c4.closed_neighborhood(0).unwrap(), set(&[0, 1, 3]));
        assert!(matches!(
            c4.open_neighborhood(4),
            Err(Error::VertexOutOfRange { vertex: 4, .. })
        ));
    }

    #[test]
    fn delete_vertices_examples() {
        let sub = Graph::cycle(4).delete_vertices(set(&[0]));
        assert_eq!(sub.graph, Graph::path(3));
        assert_eq!(sub.original, vec![1, 2, 3]);
        assert_eq!(sub.new_index(3), Some(2));
        assert_eq!(sub.new_index(0), None);
        let c5 = Graph::cycle(5);
        let same = c5.delete_vertices(VertexSet::EMPTY);
        assert_eq!(same.graph, c5);
        assert_eq!(same.original, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn complement_commutes_with_vertex_deletion_exhaustive() {
        for n in 1..=6 {
            for h in all_graphs(n) {
                for v in 0..n {
                    let s = VertexSet::singleton(v);
                    assert_eq!(
                        h.complement().delete_vertices(s).graph,
                        h.delete_vertices(s).graph.complement()
                    );
                }
            }
        }
    }

    #[test]
    fn connectivity() {
        assert!(!g(4, &[(0, 1), (2, 3)]).is_connected());
        assert!(Graph::cycle(4).is_connected());
        assert!(Graph::new(0).unwrap().is_connected());
        assert!(Graph::new(1).unwrap().is_connected());
        assert!(!Graph::new(2).unwrap().is_connected());
    }

    #[test]
    fn bipartition_examples() {
        assert_eq!(
            Graph::cycle(4).bipartition(),
            Bipartiteness::Bipartite(Bipartition {
                left: set(&[0, 2]),
                right: set(&[1, 3])
            })
        );
        assert_eq!(
            Graph::cycle(3).bipartition(),
            Bipartiteness::OddCycle(vec![0, 1, 2])
        );
        match Graph::complete_bipartite(2, 3).bipartition() {
            Bipartiteness::Bipartite(b) => {
                assert_eq!((b.left.len(), b.right.len()), (2, 3));
            }
            other => panic!("{other:?}"),
        }
        // each component's least vertex goes left
        match g(4, &[(0, 3), (1, 2)]).bipartition() {
            Bipartiteness::Bipartite(b) => assert_eq!(b.left, set(&[0, 1])),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bipartition_soundness_exhaustive() {
        for n in 0..=6 {
            for h in all_graphs(n) {
                match h.bipartition() {
                    Bipartiteness::Bipartite(b) => {
                        assert!(b.left.is_disjoint(b.right));
                        assert_eq!(b.left | b.right, h.vertices());
                        assert!(h
                            .edges()
                            .all(|(u, v)| b.left.contains(u) != b.left.contains(v)));
                    }
                    Bipartiteness::OddCycle(c) => {
                        assert!(c.len() % 2 == 1 && c.len() >= 3, "{c:?}");
                        for i in 0..c.len() {
                            assert!(h.has_edge(c[i], c[(i + 1) % c.len()]), "{h:?} {c:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn free_vertex_examples() {
        assert_eq!(Graph::path(3).free_vertices(), vec![0, 2]);
        assert_eq!(Graph::cycle(4).free_vertices(), Vec::<usize>::new());
        assert_eq!(Graph::path(2).free_vertices(), vec![0, 1]);
    }

    #[test]
    fn cycle_membership_examples() {
        let c4 = Graph::cycle(4);
        assert!((0..4).all(|v| c4.is_on_cycle(v).unwrap()));
        assert!(!Graph::path(3).is_on_cycle(1).unwrap());
        let pendant = g(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]);
        assert!(!pendant.is_on_cycle(3).unwrap());
        assert!(pendant.is_on_cycle(0).unwrap());
    }

    #[test]
    fn cycle_membership_matches_literal_enumeration() {
        for n in 1..=6 {
            for h in all_graphs(n) {
                for v in 0..n {
                    assert_eq!(
                        h.is_on_cycle(v).unwrap(),
                        on_literal_cycle(&h, v),
                        "{h:?} {v}"
                    );
                }
            }
        }
    }

    #[test]
    fn cut_vertices() {
        assert!(Graph::path(3).is_cut_vertex(1).unwrap());
        assert!(!Graph::cycle(4).is_cut_vertex(0).unwrap());
        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(star.is_cut_vertex(0).unwrap());
        assert!(!star.is_cut_vertex(1).unwrap());
        assert!(matches!(
            g(4, &[(0, 1), (2, 3)]).is_cut_vertex(0),
            Err(Error::Disconnected { .. })
        ));
    }

    #[test]
    fn connectivity_preserving_cycle_vertex_examples() {
        assert_eq!(
            Graph::cycle(4).find_connectivity_preserving_cycle_vertex(),
            Ok(0)
        );
        assert_eq!(
            Graph::cycle(6).find_connectivity_preserving_cycle_vertex(),
            Ok(0)
        );
        let bowtie = g(
            7,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (0, 3),
                (0, 4),
                (4, 5),
                (5, 6),
                (0, 6),
            ],
        );
        assert_eq!(bowtie.find_connectivity_preserving_cycle_vertex(), Ok(1));
        assert!(matches!(
            Graph::path(3).find_connectivity_preserving_cycle_vertex(),
            Err(Error::HasFreeVertex(0))
        ));
        assert!(matches!(
            Graph::cycle(5).find_connectivity_preserving_cycle_vertex(),
            Err(Error::NotBipartite { .. })
        ));
    }

    #[test]
    fn chordality() {
        assert!(Graph::complete(5).is_chordal());
        assert!(Graph::path(5).is_chordal());
        assert!(!Graph::cycle(4).is_chordal());
        assert!(Graph::cycle(3).is_chordal());
        assert!(g(4, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]).is_chordal());
    }

    #[test]
    fn clique_union() {
        assert!(g(5, &[(0, 1), (2, 3), (2, 4), (3, 4)]).is_clique_union());
        assert!(!Graph::path(3).is_clique_union());
        assert!(Graph::new(3).unwrap().is_clique_union());
    }

    #[test]
    fn edge_list_format() {
        let text = "# a 4-cycle\n4 4\n0 1\n1 2\n2 3\n0 3\n";
        let c4: Graph = text.parse().unwrap();
        assert_eq!(c4, Graph::cycle(4));
        assert_eq!(c4.to_edge_list(), "4 4\n0 1\n0 3\n1 2\n2 3\n");
        assert_eq!(Graph::parse_edge_list(&c4.to_edge_list()).unwrap(), c4);

        for bad in [
            "",
            "3",
            "3 1\n1 0\n",
            "3 1\n0 3\n",
            "3 2\n0 1\n0 1\n",
            "3 2\n0 1\n",
            "3 1\n0 1\n1 2\n",
            "3 1\n0 x\n",
            "65 0\n",
        ] {
            assert!(
                matches!(Graph::parse_edge_list(bad), Err(Error::Parse { .. })),
                "{bad:?}"
            );
        }
    }
}
