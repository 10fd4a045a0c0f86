//! Named graph families and their canonical vertex numbering.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum GraphFamily {
    /// `K_n`.
    Complete { n: usize },
    /// `P_n`, vertices `0..n` in path order.
    Path { n: usize },
    /// `C_n` with `n >= 3`, vertices in cyclic order.
    Cycle { n: usize },
    /// `K_{m,n}`; side X is `0..m`, side Y is `m..m+n`.
    CompleteBipartite { m: usize, n: usize },
    /// `K_{1,n}` with center 0.
    Star { n: usize },
    /// `t` disjoint copies of `K_n` with `t <= n`; copy `j` is `j*n..(j+1)*n`.
    CliqueUnion { t: usize, n: usize },
}

impl GraphFamily {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidParams(msg));
        match *self {
            GraphFamily::Complete { n } | GraphFamily::Path { n } | GraphFamily::Star { n }
                if n == 0 =>
            {
                bad(format!("{self}: size must be positive"))
            }
            GraphFamily::Cycle { n } if n < 3 => {
                bad(format!("{self}: a cycle needs at least 3 vertices"))
            }
            GraphFamily::CompleteBipartite { m, n } if m == 0 || n == 0 => {
                bad(format!("{self}: both sides must be nonempty"))
            }
            GraphFamily::CliqueUnion { t, n } if t == 0 || n == 0 => {
                bad(format!("{self}: parameters must be positive"))
            }
            GraphFamily::CliqueUnion { t, n } if t > n => {
                bad(format!("{self}: the clique-union lemma requires t <= n"))
            }
            _ => Ok(()),
        }
    }

    pub fn order(&self) -> usize {
        match *self {
            GraphFamily::Complete { n } | GraphFamily::Path { n } | GraphFamily::Cycle { n } => n,
            GraphFamily::CompleteBipartite { m, n } => m + n,
            GraphFamily::Star { n } => n + 1,
            GraphFamily::CliqueUnion { t, n } => t * n,
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        self.validate()?;
        match *self {
            GraphFamily::Complete { n } => Graph::from_edges(n, clique_edges(0, n)),
            GraphFamily::Path { n } => Graph::from_edges(n, (1..n).map(|i| (i - 1, i))),
            GraphFamily::Cycle { n } => Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))),
            GraphFamily::CompleteBipartite { m, n } => {
                Graph::from_edges(m + n, (0..m).flat_map(|x| (m..m + n).map(move |y| (x, y))))
            }
            GraphFamily::Star { n } => Graph::from_edges(n + 1, (1..=n).map(|leaf| (0, leaf))),
            GraphFamily::CliqueUnion { t, n } => {
                Graph::from_edges(t * n, (0..t).flat_map(|j| clique_edges(j * n, n)))
            }
        }
    }

    /// Best-effort recognition of a family by structure (no isomorphism search).
    ///
    /// Ids need not follow the canonical numbering. Tried in the order
    /// complete, path, cycle, star, complete bipartite, clique union.
    pub fn recognize(g: &Graph) -> Option<GraphFamily> {
        let n = g.n();
        if g.is_complete() {
            return Some(GraphFamily::Complete { n });
        }
        if g.is_connected() && g.max_degree() <= 2 {
            return Some(if g.m() + 1 == n {
                GraphFamily::Path { n }
            } else {
                GraphFamily::Cycle { n }
            });
        }
        if let Some((m, k)) = complete_bipartite_sides(g) {
            return Some(if m.min(k) == 1 {
                GraphFamily::Star { n: m.max(k) }
            } else {
                GraphFamily::CompleteBipartite { m, n: k }
            });
        }
        let comps = g.connected_components();
        let size = comps[0].len();
        let t = comps.len();
        let all_cliques = comps
            .iter()
            .all(|c| c.len() == size && c.iter().all(|&v| g.degree(v) == size - 1));
        if t > 1 && all_cliques && t <= size {
            return Some(GraphFamily::CliqueUnion { t, n: size });
        }
        None
    }
}

fn clique_edges(offset: usize, n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (a + 1..n).map(move |b| (offset + a, offset + b)))
}

/// Side sizes `(|side of vertex 0|, |other side|)` if `g` is a connected complete bipartite graph.
fn complete_bipartite_sides(g: &Graph) -> Option<(usize, usize)> {
    if !g.is_connected() || g.n() < 2 {
        return None;
    }
    let side0: Vec<usize> = g.vertices().filter(|&v| !g.has_edge(0, v)).collect();
    let side1: Vec<usize> = g.neighbors(0).to_vec();
    let complete = side0.iter().all(|&v| g.neighbors(v) == side1.as_slice())
        && side1.iter().all(|&v| g.neighbors(v) == side0.as_slice());
    complete.then_some((side0.len(), side1.len()))
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GraphFamily::Complete { n } => write!(f, "complete:{n}"),
            GraphFamily::Path { n } => write!(f, "path:{n}"),
            GraphFamily::Cycle { n } => write!(f, "cycle:{n}"),
            GraphFamily::CompleteBipartite { m, n } => write!(f, "complete-bipartite:{m},{n}"),
            GraphFamily::Star { n } => write!(f, "star:{n}"),
            GraphFamily::CliqueUnion { t, n } => write!(f, "clique-union:{t},{n}"),
        }
    }
}

impl FromStr for GraphFamily {
    type Err = Error;

    /// Accepts `name:params`, e.g. `path:5`, `cycle:6`, `kmn:2,3`, `clique-union:3,3`.
    fn from_str(s: &str) -> Result<GraphFamily> {
        let invalid = || Error::InvalidParams(format!("cannot parse family `{s}`"));
        let (name, params) = s.split_once(':').ok_or_else(invalid)?;
        let nums: Vec<usize> = params
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| invalid())?;
        let family = match (name.trim().to_ascii_lowercase().as_str(), nums.as_slice()) {
            ("complete" | "k", &[n]) => GraphFamily::Complete { n },
            ("path" | "p", &[n]) => GraphFamily::Path { n },
            ("cycle" | "c", &[n]) => GraphFamily::Cycle { n },
            ("complete-bipartite" | "kmn" | "biclique", &[m, n]) => {
                GraphFamily::CompleteBipartite { m, n }
            }
            ("star", &[n]) => GraphFamily::Star { n },
            ("clique-union" | "cliques", &[t, n]) => GraphFamily::CliqueUnion { t, n },
            _ => return Err(invalid()),
        };
        family.validate()?;
        Ok(family)
    }
}
