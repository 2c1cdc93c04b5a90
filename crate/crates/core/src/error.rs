use thiserror::Error;

use crate::set::VertexSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("vertex count {0} exceeds the supported maximum of 64")]
    TooManyVertices(usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("{{{0}}} is not a face of the complex")]
    NotAFace(VertexSet),

    #[error("graph is not bipartite: odd cycle ({})", join(.witness))]
    NotBipartite { witness: Vec<usize> },

    #[error("graph is disconnected: components {{{first}}} and {{{second}}}")]
    Disconnected { first: VertexSet, second: VertexSet },

    #[error("graph has a free vertex {0}")]
    HasFreeVertex(usize),

    #[error("graph is not a disjoint union of complete graphs")]
    NotCliqueUnion,

    #[error("facet order is not a permutation of the facets: {0}")]
    NotAPermutation(String),

    #[error("certificate does not verify: {0}")]
    Unverified(String),

    #[error("unsupported document format_version {0}")]
    FormatVersion(u32),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// A step the main construction guarantees has failed. Firing means a bug.
    #[error("construction invariant violated: {0}")]
    InvariantViolation(String),
}

fn join(vs: &[usize]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_formatting() {
        let e = Error::NotBipartite {
            witness: vec![0, 1, 2],
        };
        assert_eq!(e.to_string(), "graph is not bipartite: odd cycle (0,1,2)");
        let e = Error::Disconnected {
            first: [0, 1].into_iter().collect(),
            second: [2, 3].into_iter().collect(),
        };
        assert_eq!(
            e.to_string(),
            "graph is disconnected: components {0 1} and {2 3}"
        );
    }
}
