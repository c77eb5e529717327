use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Names the forbidden graph in every extremal question.
///
/// Path sizes count vertices: `P4` is the path with 4 vertices and 3 edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Cycle(usize),
    Path(usize),
    Clique(usize),
    Explicit(Graph),
}

impl FamilySpec {
    pub fn cycle(m: usize) -> Result<Self> {
        FamilySpec::Cycle(m).validated()
    }

    pub fn path(m: usize) -> Result<Self> {
        FamilySpec::Path(m).validated()
    }

    pub fn clique(m: usize) -> Result<Self> {
        FamilySpec::Clique(m).validated()
    }

    fn validated(self) -> Result<Self> {
        match self {
            FamilySpec::Path(m) if m < 2 => Err(Error::invalid(format!("path needs >= 2 vertices, got {m}"))),
            FamilySpec::Cycle(m) | FamilySpec::Clique(m) if m < 3 => {
                Err(Error::invalid(format!("{self} needs >= 3 vertices")))
            }
            other => Ok(other),
        }
    }

    pub fn graph(&self) -> Graph {
        match self {
            FamilySpec::Cycle(m) => Graph::cycle(*m),
            FamilySpec::Path(m) => Graph::path(*m),
            FamilySpec::Clique(m) => Graph::complete(*m),
            FamilySpec::Explicit(g) => g.clone(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            FamilySpec::Cycle(m) | FamilySpec::Path(m) | FamilySpec::Clique(m) => *m,
            FamilySpec::Explicit(g) => g.n(),
        }
    }

    pub fn edge_count(&self) -> usize {
        match self {
            FamilySpec::Cycle(m) => *m,
            FamilySpec::Path(m) => m - 1,
            FamilySpec::Clique(m) => m * (m - 1) / 2,
            FamilySpec::Explicit(g) => g.edge_count(),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cycle(m) => write!(f, "C{m}"),
            FamilySpec::Path(m) => write!(f, "P{m}"),
            FamilySpec::Clique(m) => write!(f, "K{m}"),
            FamilySpec::Explicit(g) => write!(f, "G[n={},m={}]", g.n(), g.edge_count()),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `C5`, `P4`, `K3` (case-insensitive).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, rest) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let m: usize = rest
            .parse()
            .map_err(|_| Error::invalid(format!("cannot parse family '{s}'")))?;
        match kind.to_ascii_uppercase().as_str() {
            "C" => FamilySpec::cycle(m),
            "P" => FamilySpec::path(m),
            "K" => FamilySpec::clique(m),
            _ => Err(Error::invalid(format!("unknown family '{s}' (expected C<m>, P<m> or K<m>)"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for s in ["C5", "P4", "K3", "c7"] {
            let f: FamilySpec = s.parse().unwrap();
            assert_eq!(f.to_string(), s.to_uppercase());
        }
        assert!("C2".parse::<FamilySpec>().is_err());
        assert!("P1".parse::<FamilySpec>().is_err());
        assert!("X3".parse::<FamilySpec>().is_err());
        assert!("K".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn counts_match_graphs() {
        for f in [FamilySpec::Cycle(5), FamilySpec::Path(4), FamilySpec::Clique(4)] {
            assert_eq!(f.graph().edge_count(), f.edge_count());
            assert_eq!(f.graph().n(), f.vertex_count());
        }
    }
}
