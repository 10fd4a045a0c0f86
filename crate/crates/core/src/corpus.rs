//! Deterministic graph corpora for sweeps and tests.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// One representative of every isomorphism class of trees on `n` vertices,
/// ordered by canonical encoding.
pub fn nonisomorphic_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: BTreeMap<String, Vec<(usize, usize)>> = BTreeMap::new();
    level.insert("()".into(), Vec::new());
    for size in 2..=n {
        let mut next = BTreeMap::new();
        for edges in level.values() {
            for v in 0..size - 1 {
                let mut grown = edges.clone();
                grown.push((v, size - 1));
                let tree =
                    Graph::from_edges(size, grown.iter().copied()).expect("valid tree edges");
                next.entry(tree_canonical_form(&tree)).or_insert(grown);
            }
        }
        level = next;
    }
    level
        .into_values()
        .map(|edges| Graph::from_edges(n, edges).expect("valid tree edges"))
        .collect()
}

/// Center-rooted AHU encoding; equal strings mean isomorphic trees.
pub fn tree_canonical_form(t: &Graph) -> String {
    tree_centers(t)
        .into_iter()
        .map(|c| rooted_encoding(t, c, usize::MAX))
        .min()
        .unwrap_or_default()
}

fn rooted_encoding(t: &Graph, v: usize, parent: usize) -> String {
    let mut kids: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_encoding(t, w, v))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

fn tree_centers(t: &Graph) -> Vec<usize> {
    let n = t.n();
    let mut degree: Vec<usize> = t.vertices().map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = t.vertices().filter(|&v| degree[v] <= 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            for &w in t.neighbors(leaf) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

/// Every graph on `n <= 6` vertices up to isomorphism, by minimum adjacency
/// code over all vertex permutations.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(
        n <= 6,
        "exhaustive graph enumeration is limited to 6 vertices"
    );
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    let perms = permutations(n);
    let mut seen = BTreeMap::new();
    for mask in 0u32..(1 << pairs.len()) {
        let code = perms
            .iter()
            .map(|p| {
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .fold(0u32, |acc, (_, &(a, b))| {
                        let (x, y) = if p[a] < p[b] {
                            (p[a], p[b])
                        } else {
                            (p[b], p[a])
                        };
                        acc | 1
                            << pairs
                                .iter()
                                .position(|&e| e == (x, y))
                                .expect("pair exists")
                    })
            })
            .min()
            .expect("at least one permutation");
        seen.entry(code).or_insert(mask);
    }
    seen.into_keys()
        .map(|code| {
            Graph::from_edges(
                n,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| code >> i & 1 == 1)
                    .map(|(_, &e)| e),
            )
            .expect("valid edges")
        })
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// `G(n, p)`.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid edges")
}

/// Connected bipartite chain graph with sides of sizes `n1` and `n2`, under a
/// random relabelling.
///
/// `x_i` is joined to `y_1..y_{d_i}` for nonincreasing degrees with
/// `d_1 = n2` and `d_i >= 1`.
pub fn random_connected_bcg<R: Rng>(n1: usize, n2: usize, rng: &mut R) -> Graph {
    assert!(n1 >= 1 && n2 >= 1);
    let mut degrees: Vec<usize> = (0..n1)
        .map(|i| if i == 0 { n2 } else { rng.gen_range(1..=n2) })
        .collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let edges: Vec<(usize, usize)> = degrees
        .iter()
        .enumerate()
        .flat_map(|(x, &d)| (0..d).map(move |y| (x, n1 + y)))
        .collect();
    let g = Graph::from_edges(n1 + n2, edges).expect("valid edges");
    let mut perm: Vec<usize> = (0..n1 + n2).collect();
    perm.shuffle(rng);
    g.relabel(&perm).expect("permutation")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| nonisomorphic_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
        assert!(nonisomorphic_trees(7).iter().all(|t| t.is_tree()));
    }

    #[test]
    fn graph_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| nonisomorphic_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let a = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::from_edges(4, [(2, 0), (0, 3), (3, 1)]).unwrap();
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(tree_canonical_form(&a), tree_canonical_form(&b));
        assert_ne!(tree_canonical_form(&a), tree_canonical_form(&star));
    }

    #[test]
    fn random_generators_are_seeded() {
        let g1 = random_graph(8, 0.4, &mut rng_from_seed(7));
        let g2 = random_graph(8, 0.4, &mut rng_from_seed(7));
        assert_eq!(g1, g2);
        let b = random_connected_bcg(4, 5, &mut rng_from_seed(3));
        assert!(b.is_connected());
        assert_eq!(b.n(), 9);
    }
}
