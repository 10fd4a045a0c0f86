//! Exhaustive search for transitive and tournament transitive partitions.
//!
//! The search assigns vertices one at a time (descending degree, ties by id)
//! to labels `0..k`, trying labels in increasing order, and prunes a branch
//! as soon as some constraint can no longer be met by the still-unassigned
//! vertices. Feasibility is monotone in `k` for both problems (merging the
//! first two parts keeps either property), so the maximum is found by
//! raising `k` until the search fails or an upper bound is reached.
//!
//! Adjacency is held in `u64` masks, which caps the oracle at 64 vertices;
//! the configurable cap defaults to 12.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::OrderedPartition;
use crate::report::{Method, SolveReport};

pub const DEFAULT_CAP: usize = 12;
pub const HARD_CAP: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    pub cap: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig { cap: DEFAULT_CAP }
    }
}

impl OracleConfig {
    pub fn with_cap(cap: usize) -> Self {
        OracleConfig { cap }
    }

    fn check(&self, g: &Graph) -> Result<()> {
        let cap = self.cap.min(HARD_CAP);
        if g.n() > cap {
            return Err(Error::CapExceeded { n: g.n(), cap });
        }
        Ok(())
    }
}

/// `(lower, upper)` bounds on the tournament transitivity of `g`.
///
/// The upper bound is `min(Δ+1, n-δ, ⌊(n+1)/2⌋)`. The lower bound is 2 for a
/// connected graph with an induced `P_3`, 1 for other connected graphs, and
/// the largest component bound for disconnected graphs.
pub fn bounds_ttr(g: &Graph) -> (usize, usize) {
    let n = g.n();
    let upper = (g.max_degree() + 1)
        .min(n - g.min_degree())
        .min(n.div_ceil(2));
    let comps = g.connected_components();
    let lower = if comps.len() == 1 {
        if g.has_induced_p3() {
            2
        } else {
            1
        }
    } else {
        comps
            .iter()
            .map(|c| {
                let sub = g.induced_subgraph(c).expect("components are nonempty");
                if sub.graph.has_induced_p3() {
                    2
                } else {
                    1
                }
            })
            .max()
            .unwrap_or(1)
    };
    (lower, upper)
}

/// Exact transitivity `Tr(g)` with a witness.
pub fn transitivity_exact(g: &Graph, config: OracleConfig) -> Result<SolveReport> {
    config.check(g)?;
    let caps: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let lower = if g.m() > 0 { 2 } else { 1 };
    let upper = (g.max_degree() + 1).min(distinct_label_bound(&caps));
    maximize(g, false, lower, upper)
}

/// Exact tournament transitivity `TTr(g)` with a witness.
pub fn tournament_transitivity_exact(g: &Graph, config: OracleConfig) -> Result<SolveReport> {
    config.check(g)?;
    let (lower, upper) = bounds_ttr(g);
    let upper = upper.min(distinct_label_bound(&tournament_caps(g)));
    maximize(g, true, lower, upper)
}

/// Whether `g` has a partition of exactly `k` parts of the given kind.
pub fn find_partition(
    g: &Graph,
    k: usize,
    tournament: bool,
    config: OracleConfig,
) -> Result<Option<OrderedPartition>> {
    config.check(g)?;
    if k == 0 || k > g.n() {
        return Ok(None);
    }
    let mut search = Search::new(g, Constraints::plain(k, tournament));
    Ok(search
        .run()
        .map(|labels| OrderedPartition::from_labels(&labels).expect("search fills every label")))
}

/// Like [`find_partition`], with vertex `v` forced into 0-based part `l` for
/// every `(v, l)` in `pins`.
pub fn find_partition_pinned(
    g: &Graph,
    k: usize,
    tournament: bool,
    pins: &[(usize, usize)],
    config: OracleConfig,
) -> Result<Option<OrderedPartition>> {
    config.check(g)?;
    if k == 0 || k > g.n() {
        return Ok(None);
    }
    if let Some(&(v, _)) = pins.iter().find(|&&(v, _)| v >= g.n()) {
        return Err(Error::VertexOutOfRange(v));
    }
    let mut constraints = Constraints::plain(k, tournament);
    constraints.pins = pins.to_vec();
    let mut search = Search::new(g, constraints);
    Ok(search
        .run()
        .map(|labels| OrderedPartition::from_labels(&labels).expect("search fills every label")))
}

/// A maximum tournament witness with `|V_k| = 1` and `|V_{k-1}| = 2`, where
/// the `V_k` vertex is adjacent to exactly one `V_{k-1}` vertex.
///
/// Requires a connected graph with `TTr(g) >= 3`.
pub fn normal_form_witness(g: &Graph, config: OracleConfig) -> Result<OrderedPartition> {
    config.check(g)?;
    if !g.is_connected() {
        return Err(Error::Precondition("graph must be connected".into()));
    }
    let k = tournament_transitivity_exact(g, config)?.value;
    if k < 3 {
        return Err(Error::Precondition(format!(
            "tournament transitivity is {k}, need at least 3"
        )));
    }
    let mut constraints = Constraints::plain(k, true);
    constraints.max_part_size[k - 1] = 1;
    constraints.max_part_size[k - 2] = 2;
    let exact_two = |labels: &[usize]| labels.iter().filter(|&&l| l == k - 2).count() == 2;
    constraints.accept = Some(&exact_two);
    let labels = Search::new(g, constraints).run().ok_or_else(|| {
        Error::InvariantViolation(format!("no normal-form witness of size {k} exists"))
    })?;
    Ok(OrderedPartition::from_labels(&labels).expect("search fills every label"))
}

/// Largest `p` such that some transitive partition puts `v` in `V_p`.
pub fn transitive_number_exact(g: &Graph, v: usize, config: OracleConfig) -> Result<usize> {
    config.check(g)?;
    if v >= g.n() {
        return Err(Error::VertexOutOfRange(v));
    }
    let mut best = 1;
    // a partition with v in V_p can absorb V_{p+1}.. into V_1, so size p suffices
    for p in 2..=g.degree(v) + 1 {
        let mut constraints = Constraints::plain(p, false);
        constraints.pins = vec![(v, p - 1)];
        if Search::new(g, constraints).run().is_none() {
            break;
        }
        best = p;
    }
    Ok(best)
}

/// Per-vertex largest 0-based label usable in a tournament partition: a vertex
/// of `V_j` needs a neighbor and a non-neighbor in every earlier part.
fn tournament_caps(g: &Graph) -> Vec<usize> {
    let n = g.n();
    g.vertices()
        .map(|v| g.degree(v).min(n - 1 - g.degree(v)))
        .collect()
}

/// Largest `k` such that distinct vertices can occupy labels `0..k`, given
/// per-vertex label caps.
fn distinct_label_bound(caps: &[usize]) -> usize {
    let mut sorted = caps.to_vec();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    (1..=sorted.len())
        .take_while(|&k| (0..k).all(|i| sorted[i] + i + 1 >= k))
        .last()
        .unwrap_or(1)
}

fn maximize(g: &Graph, tournament: bool, lower: usize, upper: usize) -> Result<SolveReport> {
    let mut best = OrderedPartition::single(g.n());
    let mut nodes = 0;
    for k in 2..=upper {
        let mut search = Search::new(g, Constraints::plain(k, tournament));
        let found = search.run();
        nodes += search.nodes;
        match found {
            Some(labels) => {
                best = OrderedPartition::from_labels(&labels).expect("search fills every label")
            }
            None => break,
        }
    }
    let value = best.len();
    if value < lower {
        return Err(Error::InvariantViolation(format!(
            "search found {value}, below the lower bound {lower}"
        )));
    }
    Ok(SolveReport {
        value,
        witness: Some(best),
        method: Method::Oracle,
        bounds: (lower, upper.max(value)),
        nodes_explored: nodes,
    })
}

/// Final filter on a complete labelling.
type Accept<'a> = &'a dyn Fn(&[usize]) -> bool;

struct Constraints<'a> {
    k: usize,
    tournament: bool,
    max_part_size: Vec<usize>,
    pins: Vec<(usize, usize)>,
    accept: Option<Accept<'a>>,
}

impl Constraints<'_> {
    fn plain(k: usize, tournament: bool) -> Self {
        Constraints {
            k,
            tournament,
            max_part_size: vec![usize::MAX; k],
            pins: Vec::new(),
            accept: None,
        }
    }
}

const UNASSIGNED: usize = usize::MAX;

struct Search<'a> {
    adj: Vec<u64>,
    order: Vec<usize>,
    max_label: Vec<usize>,
    min_label: Vec<usize>,
    labels: Vec<usize>,
    part_mask: Vec<u64>,
    unassigned: u64,
    constraints: Constraints<'a>,
    nodes: u64,
}

impl<'a> Search<'a> {
    fn new(g: &Graph, constraints: Constraints<'a>) -> Self {
        let n = g.n();
        assert!(n <= HARD_CAP);
        let adj: Vec<u64> = g
            .vertices()
            .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | (1 << w)))
            .collect();
        let caps = if constraints.tournament {
            tournament_caps(g)
        } else {
            g.vertices().map(|v| g.degree(v)).collect()
        };
        let mut max_label: Vec<usize> = caps.iter().map(|&c| c.min(constraints.k - 1)).collect();
        let mut order: Vec<usize> = g.vertices().collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let mut min_label = vec![0; n];
        for (i, &(v, l)) in constraints.pins.iter().enumerate() {
            order.retain(|&w| w != v);
            order.insert(i, v);
            min_label[v] = l;
            // a pinned label above the cap yields an immediately empty domain
            max_label[v] = if l <= caps[v] && l < constraints.k {
                l
            } else {
                UNASSIGNED
            };
        }
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Search {
            adj,
            order,
            max_label,
            min_label,
            labels: vec![UNASSIGNED; n],
            part_mask: vec![0; constraints.k],
            unassigned: full,
            constraints,
            nodes: 0,
        }
    }

    fn run(&mut self) -> Option<Vec<usize>> {
        if self.recurse(0) {
            Some(self.labels.clone())
        } else {
            None
        }
    }

    fn recurse(&mut self, pos: usize) -> bool {
        self.nodes += 1;
        if pos == self.order.len() {
            return self.complete_ok();
        }
        let v = self.order[pos];
        if self.max_label[v] == UNASSIGNED {
            return false;
        }
        for l in self.min_label[v]..=self.max_label[v] {
            if self.part_mask[l].count_ones() as usize >= self.constraints.max_part_size[l] {
                continue;
            }
            self.assign(v, l);
            if self.consistent(v) && self.recurse(pos + 1) {
                return true;
            }
            self.unassign(v, l);
        }
        false
    }

    fn assign(&mut self, v: usize, l: usize) {
        self.labels[v] = l;
        self.part_mask[l] |= 1 << v;
        self.unassigned &= !(1 << v);
    }

    fn unassign(&mut self, v: usize, l: usize) {
        self.labels[v] = UNASSIGNED;
        self.part_mask[l] &= !(1 << v);
        self.unassigned |= 1 << v;
    }

    fn consistent(&self, v: usize) -> bool {
        let k = self.constraints.k;
        // every empty label still needs a free vertex allowed to take it
        let free = self.unassigned.count_ones() as usize;
        let empty = self.part_mask.iter().filter(|&&m| m == 0).count();
        if empty > free {
            return false;
        }
        if let Some(top_empty) = (0..k).rev().find(|&l| self.part_mask[l] == 0) {
            if !bits(self.unassigned)
                .any(|u| self.max_label[u] != UNASSIGNED && self.max_label[u] >= top_empty)
            {
                return false;
            }
        }
        // forward support for v and for its assigned neighbors
        let assigned_nbrs = self.adj[v] & !self.unassigned;
        if !self.supported(v) || !bits(assigned_nbrs).all(|w| self.supported(w)) {
            return false;
        }
        if self.constraints.tournament {
            for i in 0..k {
                for j in i + 1..k {
                    if self.part_mask[j] != 0 && !self.back_witness_possible(i, j) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Can the assigned vertex `w` still see every label below its own?
    fn supported(&self, w: usize) -> bool {
        let lw = self.labels[w];
        let free_nbrs = (self.adj[w] & self.unassigned).count_ones() as usize;
        let missing = (0..lw)
            .filter(|&i| self.adj[w] & self.part_mask[i] == 0)
            .count();
        missing <= free_nbrs
    }

    /// Can part `i` still contain a vertex with no neighbor in part `j`?
    fn back_witness_possible(&self, i: usize, j: usize) -> bool {
        let blocked = self.part_mask[j];
        bits(self.part_mask[i]).any(|x| self.adj[x] & blocked == 0)
            || bits(self.unassigned).any(|u| {
                self.max_label[u] != UNASSIGNED
                    && self.max_label[u] >= i
                    && self.adj[u] & blocked == 0
            })
    }

    fn complete_ok(&self) -> bool {
        let k = self.constraints.k;
        if self.part_mask.contains(&0) {
            return false;
        }
        for (w, &lw) in self.labels.iter().enumerate() {
            if (0..lw).any(|i| self.adj[w] & self.part_mask[i] == 0) {
                return false;
            }
        }
        if self.constraints.tournament {
            for i in 0..k {
                for j in i + 1..k {
                    if !bits(self.part_mask[i]).any(|x| self.adj[x] & self.part_mask[j] == 0) {
                        return false;
                    }
                }
            }
        }
        self.constraints.accept.is_none_or(|f| f(&self.labels))
    }
}

fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::GraphFamily;
    use crate::partition::{is_tournament_transitive, is_transitive};

    fn family(s: &str) -> Graph {
        s.parse::<GraphFamily>().unwrap().generate().unwrap()
    }

    /// Tries every labelling with `k` labels; independent of the pruned search.
    fn brute_force_max(g: &Graph, tournament: bool) -> usize {
        let n = g.n();
        let mut best = 1;
        for k in 2..=n {
            let total = k.pow(n as u32);
            let found = (0..total).any(|mut code| {
                let labels: Vec<usize> = (0..n)
                    .map(|_| {
                        let l = code % k;
                        code /= k;
                        l
                    })
                    .collect();
                let Ok(p) = OrderedPartition::from_labels(&labels) else {
                    return false;
                };
                if p.len() != k {
                    return false;
                }
                let r = if tournament {
                    is_tournament_transitive(g, &p)
                } else {
                    is_transitive(g, &p)
                };
                r.unwrap().ok
            });
            if found {
                best = k;
            }
        }
        best
    }

    #[test]
    fn bounds_examples() {
        assert_eq!(bounds_ttr(&family("complete:5")), (1, 1));
        assert_eq!(bounds_ttr(&family("path:5")), (2, 3));
        assert_eq!(bounds_ttr(&family("cycle:4")), (2, 2));
        // 2·K_2 has no induced P_3 in any component
        assert_eq!(bounds_ttr(&family("clique-union:2,2")).0, 1);
    }

    #[test]
    fn transitivity_examples() {
        let cfg = OracleConfig::default();
        assert_eq!(
            transitivity_exact(&family("complete:4"), cfg)
                .unwrap()
                .value,
            4
        );
        assert_eq!(
            transitivity_exact(&family("kmn:2,3"), cfg).unwrap().value,
            3
        );
        assert_eq!(transitivity_exact(&family("path:4"), cfg).unwrap().value, 3);
    }

    #[test]
    fn tournament_examples() {
        let cfg = OracleConfig::default();
        for (fam, expected) in [
            ("path:5", 3),
            ("cycle:5", 2),
            ("kmn:2,3", 2),
            ("complete:4", 1),
        ] {
            let g = family(fam);
            let r = tournament_transitivity_exact(&g, cfg).unwrap();
            assert_eq!(r.value, expected, "{fam}");
            assert_eq!(r.witness.as_ref().unwrap().len(), expected);
            assert!(
                is_tournament_transitive(&g, r.witness.as_ref().unwrap())
                    .unwrap()
                    .ok
            );
        }
    }

    #[test]
    fn small_graphs_match_brute_force() {
        // all graphs on 5 vertices
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let g = Graph::from_edges(
                5,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e),
            )
            .unwrap();
            let cfg = OracleConfig::default();
            if mask % 7 == 0 {
                assert_eq!(
                    transitivity_exact(&g, cfg).unwrap().value,
                    brute_force_max(&g, false),
                    "{mask}"
                );
            }
            assert_eq!(
                tournament_transitivity_exact(&g, cfg).unwrap().value,
                brute_force_max(&g, true),
                "{mask}"
            );
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = family("path:13");
        assert_eq!(
            tournament_transitivity_exact(&g, OracleConfig::default()).unwrap_err(),
            Error::CapExceeded { n: 13, cap: 12 }
        );
        assert_eq!(
            tournament_transitivity_exact(&g, OracleConfig::with_cap(13))
                .unwrap()
                .value,
            3
        );
    }

    #[test]
    fn normal_form_examples() {
        let cfg = OracleConfig::default();
        for fam in ["path:5", "path:6"] {
            let g = family(fam);
            let w = normal_form_witness(&g, cfg).unwrap();
            assert_eq!(w.len(), 3);
            assert!(is_tournament_transitive(&g, &w).unwrap().ok);
            let parts = w.parts();
            assert_eq!(parts[2].len(), 1);
            assert_eq!(parts[1].len(), 2);
            let z = parts[2][0];
            assert_eq!(parts[1].iter().filter(|&&x| g.has_edge(x, z)).count(), 1);
        }
        assert!(matches!(
            normal_form_witness(&family("complete:4"), cfg),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn transitive_number_examples() {
        let cfg = OracleConfig::default();
        assert_eq!(
            transitive_number_exact(&family("path:5"), 2, cfg).unwrap(),
            3
        );
        let star = family("star:3");
        for v in 0..4 {
            assert_eq!(transitive_number_exact(&star, v, cfg).unwrap(), 2);
        }
        assert_eq!(
            transitive_number_exact(&family("complete:1"), 0, cfg).unwrap(),
            1
        );
    }

    #[test]
    fn node_counts_are_deterministic() {
        let g = family("cycle:9");
        let a = tournament_transitivity_exact(&g, OracleConfig::default()).unwrap();
        let b = tournament_transitivity_exact(&g, OracleConfig::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn label_bound() {
        assert_eq!(distinct_label_bound(&[3, 3, 3, 3]), 4);
        assert_eq!(distinct_label_bound(&[1, 1, 1, 1]), 2);
        assert_eq!(distinct_label_bound(&[0, 0]), 1);
    }
}
