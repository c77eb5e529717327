//! Plain-text file formats.
//!
//! ```text
//! graph <n> <m>                 hypergraph <r> <n> <m>      rbgraph <n> <m>
//! u v          (m lines)        v1 … vr      (m lines)     u v r|b   (m lines)
//! ```
//!
//! Bipartite inputs for the partition command use `bipartite <|A|> <|B|> <m>`
//! followed by `a b` lines. `#` starts a comment anywhere on a line.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::hypergraph::Hypergraph;
use crate::matching::BipartiteIncidence;
use crate::redblue::{Color, RedBlueGraph};

/// Any object the text formats can hold.
#[derive(Debug, Clone)]
pub enum TextObject {
    Graph(Graph),
    Hypergraph(Hypergraph),
    RedBlue(RedBlueGraph),
    Bipartite(BipartiteIncidence),
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
        }
    }

    /// Next non-blank line with comments removed, as (1-based line no, tokens).
    fn next_tokens(&mut self) -> Option<(usize, Vec<&'a str>)> {
        for (i, line) in self.inner.by_ref() {
            let body = line.split('#').next().unwrap_or("");
            let toks: Vec<&str> = body.split_whitespace().collect();
            if !toks.is_empty() {
                return Some((i + 1, toks));
            }
        }
        None
    }

    fn expect_end(&mut self) -> Result<()> {
        match self.next_tokens() {
            None => Ok(()),
            Some((line, _)) => Err(Error::Parse {
                line,
                msg: "unexpected content after the declared records".into(),
            }),
        }
    }
}

fn num(line: usize, tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected a non-negative integer, found '{tok}'"),
    })
}

fn header<'a>(lines: &mut Lines<'a>) -> Result<(usize, Vec<&'a str>)> {
    lines.next_tokens().ok_or(Error::Parse {
        line: 0,
        msg: "empty input".into(),
    })
}

fn records<'a>(lines: &mut Lines<'a>, m: usize, width: usize) -> Result<Vec<(usize, Vec<&'a str>)>> {
    let mut out = Vec::with_capacity(m);
    for k in 0..m {
        let (line, toks) = lines.next_tokens().ok_or(Error::Parse {
            line: 0,
            msg: format!("expected {m} records, found {k}"),
        })?;
        if toks.len() != width {
            return Err(Error::Parse {
                line,
                msg: format!("expected {width} fields, found {}", toks.len()),
            });
        }
        out.push((line, toks));
    }
    Ok(out)
}

fn at_line<T>(line: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse { .. } => e,
        other => Error::Parse {
            line,
            msg: other.to_string(),
        },
    })
}

pub fn parse(text: &str) -> Result<TextObject> {
    let mut lines = Lines::new(text);
    let (line, head) = header(&mut lines)?;
    let obj = match head[0] {
        "graph" if head.len() == 3 => {
            let (n, m) = (num(line, head[1])?, num(line, head[2])?);
            let recs = records(&mut lines, m, 2)?;
            let mut g = at_line(line, Graph::from_edges(n, []))?;
            for (l, t) in recs {
                let (u, v) = (num(l, t[0])?, num(l, t[1])?);
                if u == v || u >= n || v >= n || g.has_edge(u, v) {
                    return Err(Error::Parse {
                        line: l,
                        msg: format!("invalid or duplicate edge {u} {v}"),
                    });
                }
                g.add_edge(u, v);
            }
            TextObject::Graph(g)
        }
        "hypergraph" if head.len() == 4 => {
            let (r, n, m) = (num(line, head[1])?, num(line, head[2])?, num(line, head[3])?);
            let mut h = at_line(line, Hypergraph::new(r, n))?;
            for (l, t) in records(&mut lines, m, r)? {
                let vs = t.iter().map(|s| num(l, s)).collect::<Result<Vec<_>>>()?;
                let mut mask = 0u64;
                for &v in &vs {
                    if v >= n {
                        return Err(Error::Parse {
                            line: l,
                            msg: format!("vertex {v} out of range"),
                        });
                    }
                    mask |= 1 << v;
                }
                at_line(l, h.push(mask).map(|_| ()))?;
            }
            TextObject::Hypergraph(h)
        }
        "rbgraph" if head.len() == 3 => {
            let (n, m) = (num(line, head[1])?, num(line, head[2])?);
            let mut g = at_line(line, Graph::from_edges(n, []).map(|g| RedBlueGraph::empty(g.n())))?;
            for (l, t) in records(&mut lines, m, 3)? {
                let (u, v) = (num(l, t[0])?, num(l, t[1])?);
                let color = match t[2] {
                    "r" => Color::Red,
                    "b" => Color::Blue,
                    other => {
                        return Err(Error::Parse {
                            line: l,
                            msg: format!("color must be r or b, found '{other}'"),
                        })
                    }
                };
                if u == v || u >= n || v >= n || g.color(u, v).is_some() {
                    return Err(Error::Parse {
                        line: l,
                        msg: format!("invalid or duplicate edge {u} {v}"),
                    });
                }
                g.set(u, v, Some(color));
            }
            TextObject::RedBlue(g)
        }
        "bipartite" if head.len() == 4 => {
            let (na, nb, m) = (num(line, head[1])?, num(line, head[2])?, num(line, head[3])?);
            let mut edges = Vec::with_capacity(m);
            for (l, t) in records(&mut lines, m, 2)? {
                let (a, b) = (num(l, t[0])?, num(l, t[1])?);
                if a >= na || b >= nb {
                    return Err(Error::Parse {
                        line: l,
                        msg: format!("edge {a} {b} out of range"),
                    });
                }
                edges.push((a, b));
            }
            TextObject::Bipartite(at_line(line, BipartiteIncidence::from_adjacency(na, nb, edges))?)
        }
        other => {
            return Err(Error::Parse {
                line,
                msg: format!("unknown or malformed header '{other}'"),
            })
        }
    };
    lines.expect_end()?;
    Ok(obj)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    match parse(text)? {
        TextObject::Graph(g) => Ok(g),
        _ => Err(Error::Parse {
            line: 1,
            msg: "expected a 'graph' header".into(),
        }),
    }
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph> {
    match parse(text)? {
        TextObject::Hypergraph(h) => Ok(h),
        _ => Err(Error::Parse {
            line: 1,
            msg: "expected a 'hypergraph' header".into(),
        }),
    }
}

pub fn parse_redblue(text: &str) -> Result<RedBlueGraph> {
    match parse(text)? {
        TextObject::RedBlue(g) => Ok(g),
        _ => Err(Error::Parse {
            line: 1,
            msg: "expected an 'rbgraph' header".into(),
        }),
    }
}

pub fn emit_graph(g: &Graph) -> String {
    let mut s = format!("graph {} {}\n", g.n(), g.edge_count());
    for p in g.edges() {
        let _ = writeln!(s, "{} {}", p.lo, p.hi);
    }
    s
}

pub fn emit_hypergraph(h: &Hypergraph) -> String {
    let mut s = format!("hypergraph {} {} {}\n", h.r(), h.n(), h.len());
    for &e in h.edges() {
        let vs: Vec<String> = bits(e).map(|v| v.to_string()).collect();
        let _ = writeln!(s, "{}", vs.join(" "));
    }
    s
}

pub fn emit_redblue(g: &RedBlueGraph) -> String {
    let mut s = format!("rbgraph {} {}\n", g.n(), g.edge_count());
    for (p, c) in g.edges() {
        let tag = match c {
            Color::Red => 'r',
            Color::Blue => 'b',
        };
        let _ = writeln!(s, "{} {} {tag}", p.lo, p.hi);
    }
    s
}
