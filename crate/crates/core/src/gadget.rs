//! The hardness gadget: `3(Δ+1)` copies of a base graph hung off a path of
//! three hub vertices, together with the constructive partition certificates.
//!
//! Id layout: copy `c` (0-based) occupies `c*n..(c+1)*n` in base order; the
//! hubs `x`, `x'`, `x''` take the last three ids. Copies `0..Δ+1` attach to
//! `x`, the next `Δ+1` to `x'`, the last `Δ+1` to `x''`.

use crate::closed_forms::slot_union;
use crate::error::{Error, Result};
use crate::graph::{disjoint_union, Graph};
use crate::partition::{is_tournament_transitive, is_transitive, OrderedPartition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetInstance {
    pub base: Graph,
    pub gadget: Graph,
    /// `[x, x', x'']`.
    pub hubs: [usize; 3],
    pub copy_offsets: Vec<usize>,
    pub delta: usize,
}

impl GadgetInstance {
    /// `3n(Δ+1) + 3`.
    pub fn expected_vertex_count(&self) -> usize {
        3 * self.base.n() * (self.delta + 1) + 3
    }

    /// Copy edges, hub-to-copy edges and the two hub edges:
    /// `3m(Δ+1) + 3n(Δ+1) + 2`.
    pub fn expected_edge_count(&self) -> usize {
        let r = self.delta + 1;
        3 * self.base.m() * r + 3 * self.base.n() * r + 2
    }

    /// The published count `3m(Δ+1) + 2`, which leaves out hub-to-copy edges.
    pub fn stated_edge_count(&self) -> usize {
        3 * self.base.m() * (self.delta + 1) + 2
    }
}

pub fn build_reduction(g: &Graph) -> Result<GadgetInstance> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyVertexSet);
    }
    let delta = g.max_degree();
    let r = delta + 1;
    let (copies, copy_offsets) = disjoint_union(&vec![g.clone(); 3 * r])?;
    let base_n = copies.n();
    let hubs = [base_n, base_n + 1, base_n + 2];
    let mut edges: Vec<(usize, usize)> = copies.edges().collect();
    for (c, &off) in copy_offsets.iter().enumerate() {
        let hub = hubs[c / r];
        edges.extend((off..off + n).map(|v| (v, hub)));
    }
    edges.push((hubs[0], hubs[1]));
    edges.push((hubs[1], hubs[2]));
    let gadget = Graph::from_edges(base_n + 3, edges)?;
    Ok(GadgetInstance {
        base: g.clone(),
        gadget,
        hubs,
        copy_offsets,
        delta,
    })
}

fn copy_slots(p: &OrderedPartition, offset: usize) -> Vec<Vec<usize>> {
    p.parts()
        .iter()
        .map(|part| part.iter().map(|&v| v + offset).collect())
        .collect()
}

fn check_transitive(g: &Graph, p: &OrderedPartition) -> Result<()> {
    p.validate_for(g)?;
    if !is_transitive(g, p)?.ok {
        return Err(Error::Precondition(
            "partition is not transitive on the base graph".into(),
        ));
    }
    Ok(())
}

/// Size-`k` tournament partition of `copies` disjoint copies of `g` (copy `c`
/// on ids `c*n..(c+1)*n`) from a size-`k` transitive partition of `g`.
pub fn build_union_partition(
    g: &Graph,
    p: &OrderedPartition,
    copies: usize,
) -> Result<OrderedPartition> {
    check_transitive(g, p)?;
    let k = p.len();
    if copies < k {
        return Err(Error::Precondition(format!(
            "need at least {k} copies, got {copies}"
        )));
    }
    let n = g.n();
    let slots: Vec<Vec<Vec<usize>>> = (0..copies).map(|c| copy_slots(p, c * n)).collect();
    OrderedPartition::new(slot_union(&slots, k))
}

/// Size-`k+2` tournament partition of the gadget from a size-`k` transitive
/// partition of its base.
pub fn lift_partition(gi: &GadgetInstance, p: &OrderedPartition) -> Result<OrderedPartition> {
    check_transitive(&gi.base, p)?;
    let k = p.len();
    let r = gi.delta + 1;
    let mut parts = vec![Vec::new(); k];
    for group in 0..3 {
        let slots: Vec<Vec<Vec<usize>>> = gi.copy_offsets[group * r..(group + 1) * r]
            .iter()
            .map(|&off| copy_slots(p, off))
            .collect();
        for (i, part) in slot_union(&slots, k).into_iter().enumerate() {
            parts[i].extend(part);
        }
    }
    let [x, x1, x2] = gi.hubs;
    parts.push(vec![x1, x2]);
    parts.push(vec![x]);
    let lifted = OrderedPartition::new(parts)?;
    if !is_tournament_transitive(&gi.gadget, &lifted)?.ok {
        return Err(Error::InvariantViolation(
            "lifted gadget partition does not verify".into(),
        ));
    }
    Ok(lifted)
}
