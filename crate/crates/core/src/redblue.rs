use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Pair};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

/// A graph whose edges are each colored red or blue.
///
/// Stored as two edge-disjoint graphs on the same vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RedBlueGraph {
    red: Graph,
    blue: Graph,
}

impl RedBlueGraph {
    pub fn empty(n: usize) -> Self {
        RedBlueGraph {
            red: Graph::empty(n),
            blue: Graph::empty(n),
        }
    }

    pub fn from_parts(red: Graph, blue: Graph) -> Result<Self> {
        if red.n() != blue.n() {
            return Err(Error::invalid("red and blue graphs differ in vertex count"));
        }
        if let Some(p) = red.edges().find(|p| blue.has_edge(p.lo, p.hi)) {
            return Err(Error::invalid(format!("edge {p} colored both red and blue")));
        }
        Ok(RedBlueGraph { red, blue })
    }

    pub fn monochromatic(g: &Graph, color: Color) -> Self {
        let empty = Graph::empty(g.n());
        match color {
            Color::Red => RedBlueGraph {
                red: g.clone(),
                blue: empty,
            },
            Color::Blue => RedBlueGraph {
                red: empty,
                blue: g.clone(),
            },
        }
    }

    pub fn n(&self) -> usize {
        self.red.n()
    }

    pub fn red(&self) -> &Graph {
        &self.red
    }

    pub fn blue(&self) -> &Graph {
        &self.blue
    }

    /// Underlying uncolored graph.
    pub fn graph(&self) -> Graph {
        self.red.union(&self.blue)
    }

    pub fn color(&self, u: usize, v: usize) -> Option<Color> {
        if self.red.has_edge(u, v) {
            Some(Color::Red)
        } else if self.blue.has_edge(u, v) {
            Some(Color::Blue)
        } else {
            None
        }
    }

    /// Sets (or with `None`, clears) the color of `u-v`.
    pub fn set(&mut self, u: usize, v: usize, color: Option<Color>) {
        self.red.remove_edge(u, v);
        self.blue.remove_edge(u, v);
        match color {
            Some(Color::Red) => self.red.add_edge(u, v),
            Some(Color::Blue) => self.blue.add_edge(u, v),
            None => {}
        }
    }

    /// Colored edges in lexicographic order.
    pub fn edges(&self) -> Vec<(Pair, Color)> {
        let mut out: Vec<(Pair, Color)> = self
            .red
            .edges()
            .map(|p| (p, Color::Red))
            .chain(self.blue.edges().map(|p| (p, Color::Blue)))
            .collect();
        out.sort_by_key(|&(p, _)| p);
        out
    }

    pub fn edge_count(&self) -> usize {
        self.red.edge_count() + self.blue.edge_count()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn colors_partition_edges() {
        let mut g = RedBlueGraph::empty(4);
        g.set(0, 1, Some(Color::Red));
        g.set(1, 2, Some(Color::Blue));
        g.set(0, 1, Some(Color::Blue));
        assert_eq!(g.color(0, 1), Some(Color::Blue));
        assert_eq!(g.red().edge_count(), 0);
        assert_eq!(g.edge_count(), 2);
        g.set(0, 1, None);
        assert_eq!(g.color(1, 0), None);
        assert!(RedBlueGraph::from_parts(Graph::complete(3), Graph::path(3)).is_err());
    }
}
