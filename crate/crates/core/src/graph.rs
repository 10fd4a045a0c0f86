//! Simple undirected graphs on contiguous vertex ids `0..n`.
//!
//! A [`Graph`] is immutable once built. Neighbor lists are kept sorted, so
//! adjacency tests are a binary search and iteration order is deterministic.
//! The canonical text format is a header line `n m` followed by `m` lines
//! `u v`; [`Graph::to_edge_list`] writes edges sorted with `u < v`.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

/// Result of [`parse_edge_list`]: the graph plus how many repeated edges were dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub duplicate_edges: usize,
}

/// An induced subgraph together with the id maps between host and subgraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `old_to_new[v]` is the subgraph id of host vertex `v`, if kept.
    pub old_to_new: Vec<Option<usize>>,
    /// `new_to_old[i]` is the host id of subgraph vertex `i`; ascending.
    pub new_to_old: Vec<usize>,
}

impl Graph {
    /// Edgeless graph on `n >= 1` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::InvalidGraph(
                "a graph needs at least one vertex".into(),
            ));
        }
        Ok(Graph {
            adj: vec![Vec::new(); n],
            m: 0,
        })
    }

    /// Builds a graph from an edge iterator. Repeated edges (in either
    /// orientation) are collapsed.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Ok(Self::from_edges_counting(n, edges)?.0)
    }

    /// Like [`Graph::from_edges`] but also returns the number of duplicates dropped.
    pub fn from_edges_counting<I>(n: usize, edges: I) -> Result<(Graph, usize)>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            g.adj[u].push(v);
            g.adj[v].push(u);
        }
        let mut duplicates = 0;
        let mut total = 0;
        for list in &mut g.adj {
            let before = list.len();
            list.sort_unstable();
            list.dedup();
            duplicates += before - list.len();
            total += list.len();
        }
        g.m = total / 2;
        Ok((g, duplicates / 2))
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.adj.len()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Writes the canonical edge-list text (sorted edges, trailing newline).
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} {}", self.n(), self.m()).unwrap();
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut adj = Vec::with_capacity(n);
        let mut m = 0;
        for u in 0..n {
            let list: Vec<usize> = (0..n).filter(|&v| v != u && !self.has_edge(u, v)).collect();
            m += list.len();
            adj.push(list);
        }
        Graph { adj, m: m / 2 }
    }

    /// Subgraph induced by `vertices` (order and repeats are ignored).
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<InducedSubgraph> {
        if vertices.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let mut keep: Vec<usize> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if let Some(&bad) = keep.iter().find(|&&v| v >= self.n()) {
            return Err(Error::VertexOutOfRange(bad));
        }
        let mut old_to_new = vec![None; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            old_to_new[v] = Some(i);
        }
        let mut adj = Vec::with_capacity(keep.len());
        let mut m = 0;
        for &v in &keep {
            // neighbor lists are sorted and the map is monotone, so the result stays sorted
            let list: Vec<usize> = self.adj[v].iter().filter_map(|&w| old_to_new[w]).collect();
            m += list.len();
            adj.push(list);
        }
        Ok(InducedSubgraph {
            graph: Graph { adj, m: m / 2 },
            old_to_new,
            new_to_old: keep,
        })
    }

    /// Maximal connected vertex sets, each sorted, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            let mut comp = Vec::new();
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m == n * (n - 1) / 2
    }

    /// True iff some vertex has two nonadjacent neighbors.
    pub fn has_induced_p3(&self) -> bool {
        self.adj.iter().any(|list| {
            list.iter()
                .enumerate()
                .any(|(i, &a)| list[i + 1..].iter().any(|&b| !self.has_edge(a, b)))
        })
    }

    pub fn is_tree(&self) -> bool {
        self.m + 1 == self.n() && self.is_connected()
    }

    /// The unique `u`-`v` path of a tree, endpoints included.
    pub fn tree_path(&self, u: usize, v: usize) -> Result<Vec<usize>> {
        if !self.is_tree() {
            return Err(Error::NotATree);
        }
        for x in [u, v] {
            if x >= self.n() {
                return Err(Error::VertexOutOfRange(x));
            }
        }
        if u == v {
            return Err(Error::SameEndpoints);
        }
        let parent = self.bfs_parents(v);
        let mut path = vec![u];
        let mut cur = u;
        while cur != v {
            cur = parent[cur].expect("tree is connected");
            path.push(cur);
        }
        Ok(path)
    }

    /// BFS parent pointers toward `root` (the root maps to `None`).
    pub(crate) fn bfs_parents(&self, root: usize) -> Vec<Option<usize>> {
        let mut parent = vec![None; self.n()];
        let mut seen = vec![false; self.n()];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &w in &self.adj[x] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(x);
                    queue.push_back(w);
                }
            }
        }
        parent
    }

    /// Same graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n() {
            return Err(Error::InvalidParams(
                "permutation length differs from n".into(),
            ));
        }
        let mut seen = vec![false; self.n()];
        for &p in perm {
            if p >= self.n() || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidParams("not a permutation".into()));
            }
        }
        Graph::from_edges(self.n(), self.edges().map(|(u, v)| (perm[u], perm[v])))
    }
}

/// Parses the canonical edge-list format: `n m` then `m` lines `u v`.
///
/// Blank lines and lines starting with `#` are skipped. Errors carry the
/// 1-based line number of the offending line.
pub fn parse_edge_list(text: &str) -> Result<ParsedGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing header `n m`".into(),
    })?;
    let (n, m) = parse_pair(header_line, header)?;
    if n == 0 {
        return Err(Error::Parse {
            line: header_line,
            msg: "vertex count must be positive".into(),
        });
    }

    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        if edges.len() == m {
            return Err(Error::Parse {
                line,
                msg: format!("more than the declared {m} edges"),
            });
        }
        let (u, v) = parse_pair(line, body)?;
        if u >= n || v >= n {
            return Err(Error::Parse {
                line,
                msg: format!("vertex id out of range 0..{n}"),
            });
        }
        if u == v {
            return Err(Error::Parse {
                line,
                msg: format!("self-loop at vertex {u}"),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            msg: format!("expected {m} edges, found {}", edges.len()),
        });
    }
    let (graph, duplicate_edges) = Graph::from_edges_counting(n, edges)?;
    Ok(ParsedGraph {
        graph,
        duplicate_edges,
    })
}

fn parse_pair(line: usize, body: &str) -> Result<(usize, usize)> {
    let mut it = body.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::Parse {
            line,
            msg: format!("missing {what}"),
        })?;
        tok.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("`{tok}` is not a nonnegative integer"),
        })
    };
    let a = next("first integer")?;
    let b = next("second integer")?;
    if let Some(extra) = it.next() {
        return Err(Error::Parse {
            line,
            msg: format!("unexpected token `{extra}`"),
        });
    }
    Ok((a, b))
}

/// Block-diagonal union; returns the graph and the id offset of each part.
pub fn disjoint_union(parts: &[Graph]) -> Result<(Graph, Vec<usize>)> {
    if parts.is_empty() {
        return Err(Error::InvalidParams(
            "disjoint union needs at least one part".into(),
        ));
    }
    let mut offsets = Vec::with_capacity(parts.len());
    let mut adj = Vec::new();
    let mut m = 0;
    for part in parts {
        let offset = adj.len();
        offsets.push(offset);
        m += part.m();
        adj.extend(
            part.adj
                .iter()
                .map(|list| list.iter().map(|&w| w + offset).collect::<Vec<_>>()),
        );
    }
    Ok((Graph { adj, m }, offsets))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn parses_path_and_single_vertex() {
        let p = parse_edge_list("3 2\n0 1\n1 2").unwrap();
        assert_eq!(p.graph, path(3));
        assert_eq!(p.duplicate_edges, 0);

        let k1 = parse_edge_list("1 0").unwrap().graph;
        assert_eq!((k1.n(), k1.m()), (1, 0));

        let k4 = parse_edge_list("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3")
            .unwrap()
            .graph;
        assert!(k4.is_complete());
    }

    #[test]
    fn parse_errors_name_the_line() {
        let err = parse_edge_list("3 2\n0 1\n1 1").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                msg: "self-loop at vertex 1".into()
            }
        );
        let err = parse_edge_list("3 1\n0 7").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_edge_list("3 1\n0 x").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_edge_list("3 2\n0 1").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        assert!(parse_edge_list("").is_err());
        assert!(parse_edge_list("0 0").is_err());
    }

    #[test]
    fn duplicates_are_collapsed_and_counted() {
        let p = parse_edge_list("3 3\n0 1\n1 0\n1 2\n").unwrap();
        assert_eq!(p.graph.m(), 2);
        assert_eq!(p.duplicate_edges, 1);
    }

    #[test]
    fn writer_is_sorted_and_round_trips() {
        let g = Graph::from_edges(4, [(3, 2), (1, 0), (2, 0)]).unwrap();
        let text = g.to_edge_list();
        assert_eq!(text, "4 3\n0 1\n0 2\n2 3\n");
        assert_eq!(parse_edge_list(&text).unwrap().graph, g);
    }

    #[test]
    fn complement_examples() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.complement().m(), 0);
        let c = path(3).complement();
        assert_eq!(c.edges().collect::<Vec<_>>(), vec![(0, 2)]);
    }

    #[test]
    fn induced_subgraph_examples() {
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let sub = c5.induced_subgraph(&[0, 1, 2, 3]).unwrap();
        assert_eq!(sub.graph, path(4));

        let same = c5.induced_subgraph(&[4, 3, 2, 1, 0]).unwrap();
        assert_eq!(same.graph, c5);
        assert_eq!(same.new_to_old, vec![0, 1, 2, 3, 4]);

        let k23 = Graph::from_edges(5, [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let side = k23.induced_subgraph(&[2, 3, 4]).unwrap();
        assert_eq!((side.graph.n(), side.graph.m()), (3, 0));
        assert_eq!(side.old_to_new[3], Some(1));
        assert_eq!(side.old_to_new[0], None);

        assert_eq!(c5.induced_subgraph(&[]).unwrap_err(), Error::EmptyVertexSet);
    }

    #[test]
    fn union_and_components() {
        let k3 = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        let (u, offsets) = disjoint_union(&[k3.clone(), k3.clone()]).unwrap();
        assert_eq!((u.n(), u.m()), (6, 6));
        assert_eq!(offsets, vec![0, 3]);
        assert_eq!(u.connected_components(), vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert_eq!(disjoint_union(std::slice::from_ref(&k3)).unwrap().0, k3);
        assert_eq!(path(5).connected_components().len(), 1);
        assert_eq!(
            Graph::empty(1).unwrap().connected_components(),
            vec![vec![0]]
        );
    }

    #[test]
    fn induced_p3_examples() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(!k4.has_induced_p3());
        assert!(path(3).has_induced_p3());
        let two_k2 = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert!(!two_k2.has_induced_p3());
    }

    #[test]
    fn tree_checks_and_paths() {
        assert!(path(5).is_tree());
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        assert!(!c5.is_tree());
        assert!(Graph::empty(1).unwrap().is_tree());

        assert_eq!(path(5).tree_path(0, 4).unwrap(), vec![0, 1, 2, 3, 4]);
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.tree_path(0, 2).unwrap(), vec![0, 2]);
        assert_eq!(star.tree_path(1, 3).unwrap(), vec![1, 0, 3]);
        assert_eq!(star.tree_path(1, 1).unwrap_err(), Error::SameEndpoints);
        assert_eq!(c5.tree_path(0, 2).unwrap_err(), Error::NotATree);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(Graph::from_edges(2, [(0, 0)]).is_err());
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]).unwrap_err(),
            Error::VertexOutOfRange(2)
        );
        assert!(Graph::empty(0).is_err());
    }
}
