//! Closed-form values for named families and the explicit witness
//! constructions that accompany them.

use crate::error::{Error, Result};
use crate::family::GraphFamily;
use crate::graph::Graph;
use crate::partition::{is_tournament_transitive, OrderedPartition};

/// Tournament transitivity of a named family.
pub fn ttr_formula(f: GraphFamily) -> Result<usize> {
    f.validate()?;
    Ok(match f {
        GraphFamily::Complete { .. } => 1,
        GraphFamily::Path { n } => match n {
            1 | 2 => 1,
            3 | 4 => 2,
            _ => 3,
        },
        GraphFamily::Cycle { n } => match n {
            3 => 1,
            4 | 5 => 2,
            _ => 3,
        },
        GraphFamily::CompleteBipartite { m: 1, n: 1 } | GraphFamily::Star { n: 1 } => 1,
        GraphFamily::CompleteBipartite { .. } | GraphFamily::Star { .. } => 2,
        GraphFamily::CliqueUnion { t, .. } => t,
    })
}

/// Transitivity of a family with a known formula: `K_n` and `K_{m,n}`.
pub fn tr_formula(f: GraphFamily) -> Result<usize> {
    f.validate()?;
    match f {
        GraphFamily::Complete { n } => Ok(n),
        GraphFamily::CompleteBipartite { m, n } => Ok(m.min(n) + 1),
        GraphFamily::Star { .. } => Ok(2),
        other => Err(Error::NoClosedForm(format!("transitivity of {other}"))),
    }
}

/// A tournament partition of size `ttr_formula(f)` on `f.generate()`.
pub fn formula_witness(f: GraphFamily) -> Result<OrderedPartition> {
    let value = ttr_formula(f)?;
    let n = f.order();
    let g = f.generate()?;
    let rest = |taken: &[usize]| (0..n).filter(|v| !taken.contains(v)).collect::<Vec<_>>();
    // K_{m,k} with X = 0..m: X plus y_1, then the other Y vertices.
    let bipartite = |m: usize, k: usize| -> Vec<Vec<usize>> {
        if k >= 2 {
            vec![(0..=m).collect(), (m + 1..m + k).collect()]
        } else {
            vec![vec![0, m], (1..m).collect()]
        }
    };
    let parts = match f {
        _ if value == 1 => vec![(0..n).collect()],
        GraphFamily::CliqueUnion { t, n } => return build_clique_union_witness(t, n),
        GraphFamily::Path { .. } | GraphFamily::Cycle { .. } if value == 2 => {
            let last = if matches!(f, GraphFamily::Path { .. }) {
                n - 1
            } else {
                0
            };
            vec![rest(&[last]), vec![last]]
        }
        GraphFamily::Path { .. } | GraphFamily::Cycle { .. } => {
            vec![rest(&[0, 2, 3]), vec![0, 2], vec![3]]
        }
        GraphFamily::CompleteBipartite { m, n: k } => bipartite(m, k),
        GraphFamily::Star { n: k } => bipartite(1, k),
        GraphFamily::Complete { .. } => unreachable!("TTr(K_n) = 1"),
    };
    let w = OrderedPartition::new(parts)?;
    if w.len() != value || !is_tournament_transitive(&g, &w)?.ok {
        return Err(Error::InvariantViolation(format!(
            "formula witness for {f} does not verify"
        )));
    }
    Ok(w)
}

/// Size-`k` tournament partition of a disjoint union from ordered "slot"
/// partitions of each copy.
///
/// Copy `c` (1-based, `c <= k`) sends slot `s` to part `s` when
/// `s < h = k - c + 1` and to part `h` when `h <= s <= k`; slots past `k` and
/// every copy past the `k`-th go to part 1. Each copy's slots must form a
/// transitive partition of that copy, and at least `k` copies are required.
pub(crate) fn slot_union(copies: &[Vec<Vec<usize>>], k: usize) -> Vec<Vec<usize>> {
    let mut parts = vec![Vec::new(); k];
    for (ci, slots) in copies.iter().enumerate() {
        let c = ci + 1;
        for (si, slot) in slots.iter().enumerate() {
            let s = si + 1;
            let target = if c > k || s > k {
                1
            } else {
                let h = k - c + 1;
                s.min(h)
            };
            parts[target - 1].extend_from_slice(slot);
        }
    }
    parts
}

/// Size-`t` tournament witness for `t` disjoint copies of `K_n`, with copy `j`
/// on ids `j*n..(j+1)*n` and each vertex forming its own slot in id order.
pub fn build_clique_union_witness(t: usize, n: usize) -> Result<OrderedPartition> {
    GraphFamily::CliqueUnion { t, n }.validate()?;
    let copies: Vec<Vec<Vec<usize>>> = (0..t)
        .map(|j| (j * n..(j + 1) * n).map(|v| vec![v]).collect())
        .collect();
    OrderedPartition::new(slot_union(&copies, t))
}

/// Extends a witness on one component to the whole graph by adding every
/// other vertex to the first part.
///
/// `comp` lists the component's vertices; the witness uses the component's
/// local ids, i.e. positions in `comp` sorted ascending.
pub fn lift_component_witness(
    g: &Graph,
    component_witness: &OrderedPartition,
    comp: &[usize],
) -> Result<OrderedPartition> {
    let mut sorted = comp.to_vec();
    sorted.sort_unstable();
    if !g.connected_components().contains(&sorted) {
        return Err(Error::InvalidPartition(
            "vertex set is not a connected component".into(),
        ));
    }
    let sub = g.induced_subgraph(&sorted)?;
    component_witness.validate_for(&sub.graph)?;
    if !is_tournament_transitive(&sub.graph, component_witness)?.ok {
        return Err(Error::Precondition(
            "component witness is not tournament transitive".into(),
        ));
    }
    let mut parts: Vec<Vec<usize>> = component_witness
        .parts()
        .iter()
        .map(|p| p.iter().map(|&v| sub.new_to_old[v]).collect())
        .collect();
    parts[0].extend(g.vertices().filter(|v| sorted.binary_search(v).is_err()));
    let lifted = OrderedPartition::new(parts)?;
    if !is_tournament_transitive(g, &lifted)?.ok {
        return Err(Error::InvariantViolation(
            "lifted witness does not verify".into(),
        ));
    }
    Ok(lifted)
}
