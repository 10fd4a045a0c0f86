//! Transitivity and tournament transitivity of trees.
//!
//! `t(v, T)` is the largest index `p` such that some transitive partition of
//! `T` puts `v` in `V_p`. Rooted at `v`, it equals `1 + z` where `z` is the
//! ladder height of the children's rooted values. `Tr(T)` is the maximum of
//! `t(v, T)`, and `TTr(T)` is either `Tr(T)` or `Tr(T) - 1`; the pair test
//! below decides which.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, InducedSubgraph};
use crate::oracle::{find_partition_pinned, OracleConfig};
use crate::partition::{is_tournament_transitive, OrderedPartition};
use crate::report::{Method, SolveReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    pub base: Graph,
    pub root: usize,
    /// `None` for the root and for vertices cut away by pruning.
    pub parent: Vec<Option<usize>>,
    /// Children in ascending id order.
    pub children: Vec<Vec<usize>>,
    /// Reachable vertices in BFS order from the root.
    pub order: Vec<usize>,
}

impl RootedTree {
    pub fn contains(&self, v: usize) -> bool {
        v == self.root || self.parent.get(v).is_some_and(|p| p.is_some())
    }

    /// Rooted transitive number of every reachable vertex; 0 elsewhere.
    pub fn rooted_values(&self) -> Vec<usize> {
        let mut values = vec![0; self.base.n()];
        for &v in self.order.iter().rev() {
            let kids: Vec<usize> = self.children[v].iter().map(|&c| values[c]).collect();
            values[v] = 1 + ladder(&kids).z;
        }
        values
    }

    /// Children of `v` sorted by `(rooted value, id)`.
    fn sorted_children(&self, values: &[usize], v: usize) -> Vec<usize> {
        let mut kids = self.children[v].clone();
        kids.sort_by_key(|&c| (values[c], c));
        kids
    }
}

pub fn root_at(t: &Graph, r: usize) -> Result<RootedTree> {
    root_excluding(t, r, None)
}

/// `T^c` with the branch through `blocked` removed, i.e. `T^{[c, blocked]}`.
fn root_excluding(t: &Graph, r: usize, blocked: Option<usize>) -> Result<RootedTree> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if r >= t.n() {
        return Err(Error::VertexOutOfRange(r));
    }
    let n = t.n();
    let mut parent = vec![None; n];
    let mut children = vec![Vec::new(); n];
    let mut order = vec![r];
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in t.neighbors(v) {
            if Some(w) == blocked || parent[v] == Some(w) {
                continue;
            }
            parent[w] = Some(v);
            children[v].push(w);
            order.push(w);
        }
    }
    Ok(RootedTree {
        base: t.clone(),
        root: r,
        parent,
        children,
        order,
    })
}

/// The tree `T^{[c, cp]}`: the component of `c` once `cp`'s branch (as seen
/// from `c`) is removed.
pub fn pruned_tree(t: &Graph, c: usize, cp: usize) -> Result<InducedSubgraph> {
    if c == cp {
        return Err(Error::SameEndpoints);
    }
    if cp >= t.n() {
        return Err(Error::VertexOutOfRange(cp));
    }
    let rt = root_excluding(t, c, Some(cp))?;
    let mut keep = rt.order.clone();
    keep.sort_unstable();
    t.induced_subgraph(&keep)
}

fn value_excluding(t: &Graph, c: usize, cp: usize) -> Result<usize> {
    Ok(root_excluding(t, c, Some(cp))?.rooted_values()[c])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChildLadder {
    /// Children's rooted values, nondecreasing.
    pub sorted_values: Vec<usize>,
    /// Positions in `sorted_values` of the selected subsequence; the `j`-th
    /// entry serves requirement `j`.
    pub chosen: Vec<usize>,
    pub z: usize,
}

/// Largest `z` with a subsequence whose `j`-th element is at least `j`.
///
/// The selection is the top `z` values: any valid subsequence is dominated
/// elementwise by them.
pub fn ladder(child_values: &[usize]) -> ChildLadder {
    let mut sorted_values = child_values.to_vec();
    sorted_values.sort_unstable();
    let z = sorted_values
        .iter()
        .fold(0, |z, &l| if l > z { z + 1 } else { z });
    let chosen = (sorted_values.len() - z..sorted_values.len()).collect();
    ChildLadder {
        sorted_values,
        chosen,
        z,
    }
}

pub fn rooted_transitive_number(rt: &RootedTree, v: usize) -> Result<usize> {
    if !rt.contains(v) {
        return Err(Error::VertexOutOfRange(v));
    }
    // values inside v's subtree do not depend on anything above it
    Ok(rt.rooted_values()[v])
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransitiveProfile {
    pub values: Vec<usize>,
}

impl TransitiveProfile {
    pub fn max(&self) -> usize {
        self.values.iter().copied().max().unwrap_or(0)
    }
}

pub fn transitive_profile(t: &Graph) -> Result<TransitiveProfile> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let values = t
        .vertices()
        .map(|v| root_at(t, v).map(|rt| rt.rooted_values()[v]))
        .collect::<Result<_>>()?;
    Ok(TransitiveProfile { values })
}

pub fn transitivity_tree(t: &Graph) -> Result<usize> {
    Ok(transitive_profile(t)?.max())
}

/// Indices available to the `j`-th ladder child of `x` in partitions of the
/// subtree at `x` that put `x` in `V_{1+z}`.
pub fn allowed_indices_at_anchor(
    rt: &RootedTree,
    x: usize,
    target_child: usize,
    j: usize,
) -> Result<BTreeSet<usize>> {
    if !rt.contains(x) {
        return Err(Error::VertexOutOfRange(x));
    }
    let values = rt.rooted_values();
    let kids = rt.sorted_children(&values, x);
    let lad = ladder(&kids.iter().map(|&c| values[c]).collect::<Vec<_>>());
    let selected: Vec<usize> = lad.chosen.iter().map(|&p| kids[p]).collect();
    if j == 0 || selected.get(j - 1) != Some(&target_child) {
        return Err(Error::Precondition(format!(
            "vertex {target_child} is not ladder child {j} of {x}"
        )));
    }
    let sel_values: Vec<usize> = selected.iter().map(|&c| values[c]).collect();
    let l = values[target_child];
    let mut allowed: BTreeSet<usize> = (j..=l.min(lad.z)).collect();
    if j >= 2 {
        let spare = kids
            .iter()
            .any(|c| !selected.contains(c) && values[*c] >= j);
        if spare {
            allowed.extend(1..j);
        } else if let Some(r) = (1..j).find(|&r| (r..j).all(|t| sel_values[t - 1] > t)) {
            allowed.extend(r..j);
        }
    }
    Ok(allowed)
}

/// Consecutive path vertices starting at an anchor, with the part indices
/// each may take.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathRequirement {
    pub vertices: Vec<usize>,
    pub allowed_indices: Vec<BTreeSet<usize>>,
}

impl PathRequirement {
    pub fn allowed(&self, w: usize) -> Option<&BTreeSet<usize>> {
        self.vertices
            .iter()
            .position(|&v| v == w)
            .map(|i| &self.allowed_indices[i])
    }
}

fn check_pair(t: &Graph, y: usize, z: usize) -> Result<Vec<usize>> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    if y == z {
        return Err(Error::SameEndpoints);
    }
    if t.has_edge(y, z) {
        return Err(Error::Precondition(format!("{y} and {z} are adjacent")));
    }
    t.tree_path(y, z)
}

/// Fills index sets along `walked`, which starts at `anchor_root` with
/// index `top`.
fn fill_requirement(t: &Graph, walked: Vec<usize>, top: usize) -> Result<PathRequirement> {
    let mut allowed = vec![BTreeSet::from([top])];
    let len = walked.len();
    for i in 1..len.saturating_sub(1) {
        allowed.push(BTreeSet::from([value_excluding(
            t,
            walked[i],
            walked[i - 1],
        )?]));
    }
    if len >= 2 {
        let rt = root_at(t, walked[0])?;
        let values = rt.rooted_values();
        let anchor = walked[len - 2];
        let last = walked[len - 1];
        let kids = rt.sorted_children(&values, anchor);
        let lad = ladder(&kids.iter().map(|&c| values[c]).collect::<Vec<_>>());
        let j = lad
            .chosen
            .iter()
            .position(|&p| kids[p] == last)
            .map(|i| i + 1)
            .ok_or_else(|| {
                Error::InvariantViolation(format!(
                    "required vertex {last} is not a ladder child of {anchor}"
                ))
            })?;
        allowed.push(allowed_indices_at_anchor(&rt, anchor, last, j)?);
    }
    Ok(PathRequirement {
        vertices: walked,
        allowed_indices: allowed,
    })
}

/// Path vertices from `y` toward `z` needed to keep `y` in `V_{k-1}`.
pub fn compute_x(t: &Graph, y: usize, z: usize, k: usize) -> Result<PathRequirement> {
    compute_x_with(t, &transitive_profile(t)?, y, z, k)
}

fn compute_x_with(
    t: &Graph,
    profile: &TransitiveProfile,
    y: usize,
    z: usize,
    k: usize,
) -> Result<PathRequirement> {
    let path = check_pair(t, y, z)?;
    let ty = profile.values[y];
    if k < 2 || ty + 1 < k {
        return Err(Error::Precondition(format!(
            "t({y}) = {ty} is below k-1 = {}",
            k.saturating_sub(1)
        )));
    }
    let mut walked = vec![y];
    if ty < k {
        for &r in &path[1..] {
            if value_excluding(t, y, r)? + 2 != k {
                break;
            }
            walked.push(r);
        }
    }
    fill_requirement(t, walked, k - 1)
}

/// Path vertices from `z` toward `y` needed to keep `z` in `V_k`.
pub fn compute_y(t: &Graph, y: usize, z: usize, k: usize) -> Result<PathRequirement> {
    compute_y_with(t, &transitive_profile(t)?, y, z, k)
}

fn compute_y_with(
    t: &Graph,
    profile: &TransitiveProfile,
    y: usize,
    z: usize,
    k: usize,
) -> Result<PathRequirement> {
    let path = check_pair(t, y, z)?;
    let tz = profile.values[z];
    if tz != k {
        return Err(Error::Precondition(format!("t({z}) = {tz}, expected {k}")));
    }
    let mut walked = vec![z];
    for &s in path[..path.len() - 1].iter().rev() {
        if value_excluding(t, z, s)? + 1 != k {
            break;
        }
        walked.push(s);
    }
    fill_requirement(t, walked, k)
}

/// Every shared vertex admits a common index on both sides.
pub fn agrees(xreq: &PathRequirement, yreq: &PathRequirement) -> bool {
    xreq.vertices
        .iter()
        .zip(&xreq.allowed_indices)
        .all(|(w, xs)| match yreq.allowed(*w) {
            Some(ys) => !xs.is_disjoint(ys),
            None => true,
        })
}

/// Candidate `(y, z)` pairs in test order: `z` by descending id, then `y` by
/// descending `t(y)` and descending id.
fn candidate_pairs(t: &Graph, profile: &TransitiveProfile, k: usize) -> Vec<(usize, usize)> {
    let values = &profile.values;
    let mut ys: Vec<usize> = t.vertices().filter(|&y| values[y] + 1 >= k).collect();
    ys.sort_by_key(|&y| std::cmp::Reverse((values[y], y)));
    t.vertices()
        .rev()
        .filter(|&z| values[z] == k)
        .flat_map(|z| {
            ys.iter()
                .filter(move |&&y| y != z && !t.has_edge(y, z))
                .map(move |&y| (y, z))
        })
        .collect()
}

/// Whether the pair passes the conditions of the characterization.
pub fn pair_passes(t: &Graph, y: usize, z: usize, k: usize) -> Result<bool> {
    pair_passes_with(t, &transitive_profile(t)?, y, z, k)
}

fn pair_passes_with(
    t: &Graph,
    profile: &TransitiveProfile,
    y: usize,
    z: usize,
    k: usize,
) -> Result<bool> {
    let xr = compute_x_with(t, profile, y, z, k)?;
    let yr = compute_y_with(t, profile, y, z, k)?;
    Ok(agrees(&xr, &yr))
}

/// `TTr(T)` via the pair characterization, with a witness.
///
/// Witnesses are built directly: a reduced core for `Tr(T) - 1`, and for
/// `Tr(T)` a pinned labelling checked by the verifier. A pinned search under
/// `config.cap` is the last resort.
pub fn tournament_transitivity_tree(t: &Graph, config: OracleConfig) -> Result<SolveReport> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let n = t.n();
    let profile = transitive_profile(t)?;
    let k = profile.max();
    let report = |value, witness: Option<OrderedPartition>, nodes| SolveReport {
        value,
        witness,
        method: Method::TreeAlgorithm,
        bounds: (k.saturating_sub(1).max(1), k),
        nodes_explored: nodes,
    };
    if k == 1 || n == 2 {
        return Ok(report(1, Some(OrderedPartition::single(n)), 0));
    }
    if k == 2 {
        return Ok(report(2, Some(star_witness(t)?), 0));
    }
    let pairs = candidate_pairs(t, &profile, k);
    let mut found = None;
    for &(y, z) in &pairs {
        if pair_passes_with(t, &profile, y, z, k)? {
            found = Some((y, z));
            break;
        }
    }
    let Some((y, z)) = found else {
        return Ok(report(k - 1, Some(reduced_witness(t, &profile, k)?), 0));
    };
    for &(y, z) in std::iter::once(&(y, z)).chain(&pairs) {
        if let Some(w) = pinned_witness(t, y, z, k)? {
            return Ok(report(k, Some(w), 0));
        }
    }
    if n <= config.cap.min(crate::oracle::HARD_CAP) {
        let w = find_partition_pinned(t, k, true, &[(z, k - 1), (y, k - 2)], config)?;
        if let Some(w) = w {
            return Ok(report(k, Some(w), 0));
        }
    }
    Ok(report(k, None, 0))
}

/// `K_{1,s}` with `s >= 2`: the center with one leaf, then the other leaves.
fn star_witness(t: &Graph) -> Result<OrderedPartition> {
    let center = t
        .vertices()
        .max_by_key(|&v| (t.degree(v), std::cmp::Reverse(v)))
        .expect("nonempty");
    let first_leaf = t.neighbors(center)[0];
    let rest: Vec<usize> = t
        .vertices()
        .filter(|&v| v != center && v != first_leaf)
        .collect();
    OrderedPartition::new(vec![vec![center, first_leaf], rest])
}

/// Places `v` at `index` and recursively gives it one child per lower index,
/// choosing the smallest adequate child each time.
fn assign_core(rt: &RootedTree, values: &[usize], v: usize, index: usize, labels: &mut [usize]) {
    labels[v] = index;
    let kids = rt.sorted_children(values, v);
    let mut used = vec![false; kids.len()];
    for i in 1..index {
        let pos = (0..kids.len())
            .find(|&p| !used[p] && values[kids[p]] >= i)
            .expect("ladder supplies every index");
        used[pos] = true;
        assign_core(rt, values, kids[pos], i, labels);
    }
}

fn labels_to_partition(labels: &[usize]) -> OrderedPartition {
    let zero_based: Vec<usize> = labels.iter().map(|&l| l - 1).collect();
    OrderedPartition::from_labels(&zero_based).expect("labels cover 1..=k")
}

/// Size `k - 1`: a minimal core under a vertex of value `k`, with that vertex
/// moved into the first part.
fn reduced_witness(t: &Graph, profile: &TransitiveProfile, k: usize) -> Result<OrderedPartition> {
    let z = (0..t.n())
        .find(|&v| profile.values[v] == k)
        .expect("k is attained");
    let rt = root_at(t, z)?;
    let values = rt.rooted_values();
    let mut labels = vec![1; t.n()];
    assign_core(&rt, &values, z, k, &mut labels);
    labels[z] = 1;
    let w = labels_to_partition(&labels);
    if !is_tournament_transitive(t, &w)?.ok {
        return Err(Error::InvariantViolation(
            "reduced tree witness does not verify".into(),
        ));
    }
    Ok(w)
}

/// Size `k` with `z` in `V_k` and `y` in `V_{k-1}`: a transitive labelling
/// with both pinned and every other vertex as low as its role allows, kept
/// only if it is also tournament transitive.
fn pinned_witness(t: &Graph, y: usize, z: usize, k: usize) -> Result<Option<OrderedPartition>> {
    let Some(labels) = pinned_transitive_labels(t, k, z, &[(z, k), (y, k - 1)])? else {
        return Ok(None);
    };
    let w = labels_to_partition(&labels);
    Ok(is_tournament_transitive(t, &w)?.ok.then_some(w))
}

/// Labels in `1..=k` where a vertex labelled `p` sees every label below `p`
/// among its neighbors and each pinned vertex carries its pin. Children not
/// needed as support take their smallest feasible label.
fn pinned_transitive_labels(
    t: &Graph,
    k: usize,
    root: usize,
    pins: &[(usize, usize)],
) -> Result<Option<Vec<usize>>> {
    let rt = root_at(t, root)?;
    let mut pin = vec![None; t.n()];
    for &(v, l) in pins {
        pin[v] = Some(l);
    }
    let mut dp = LabelDp {
        rt: &rt,
        k,
        pin,
        feasible: vec![Vec::new(); t.n()],
    };
    for &v in rt.order.iter().rev() {
        // feasible[v][q][p]: v can take label p under a parent labelled q (0 = none)
        let table: Vec<Vec<bool>> = (0..=k)
            .map(|q| {
                (0..=k)
                    .map(|p| p >= 1 && dp.support_plan(v, p, q).is_some())
                    .collect()
            })
            .collect();
        dp.feasible[v] = table;
    }
    let Some(top) = (1..=k).rev().find(|&p| dp.feasible[root][0][p]) else {
        return Ok(None);
    };
    let mut labels = vec![0; t.n()];
    let mut stack = vec![(root, top, 0)];
    while let Some((v, p, q)) = stack.pop() {
        labels[v] = p;
        let plan = dp
            .support_plan(v, p, q)
            .expect("feasible entries have a plan");
        stack.extend(rt.children[v].iter().zip(plan).map(|(&c, l)| (c, l, p)));
    }
    Ok(Some(labels))
}

struct LabelDp<'a> {
    rt: &'a RootedTree,
    k: usize,
    pin: Vec<Option<usize>>,
    feasible: Vec<Vec<Vec<bool>>>,
}

impl LabelDp<'_> {
    /// Child labels letting `v` hold `p` under a parent labelled `q`.
    fn support_plan(&self, v: usize, p: usize, q: usize) -> Option<Vec<usize>> {
        if self.pin[v].is_some_and(|l| l != p) {
            return None;
        }
        let kids = &self.rt.children[v];
        let ok = |c: usize, l: usize| self.feasible[c][p][l];
        let mut labels = vec![0; kids.len()];
        let mut needed: Vec<bool> = (0..=self.k).map(|i| i >= 1 && i < p && i != q).collect();
        let mut free = Vec::new();
        for (ci, &c) in kids.iter().enumerate() {
            match self.pin[c] {
                Some(l) if l <= self.k && ok(c, l) => {
                    labels[ci] = l;
                    needed[l] = false;
                }
                Some(_) => return None,
                None => free.push(ci),
            }
        }
        let required: Vec<usize> = (1..=self.k).filter(|&i| needed[i]).collect();
        if required.len() > free.len() {
            return None;
        }
        // matching of required labels to free children
        let mut owner: Vec<Option<usize>> = vec![None; kids.len()];
        for &r in &required {
            let mut seen = vec![false; kids.len()];
            if !augment(r, &free, kids, &ok, &mut owner, &mut seen) {
                return None;
            }
        }
        for &ci in &free {
            labels[ci] = match owner[ci] {
                Some(r) => r,
                None => (1..=self.k).find(|&l| ok(kids[ci], l))?,
            };
        }
        Some(labels)
    }
}

fn augment(
    r: usize,
    free: &[usize],
    kids: &[usize],
    ok: &dyn Fn(usize, usize) -> bool,
    owner: &mut [Option<usize>],
    seen: &mut [bool],
) -> bool {
    for &ci in free {
        if seen[ci] || !ok(kids[ci], r) {
            continue;
        }
        seen[ci] = true;
        let reassigned = match owner[ci] {
            None => true,
            Some(prev) => augment(prev, free, kids, ok, owner, seen),
        };
        if reassigned {
            owner[ci] = Some(r);
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::GraphFamily;

    fn path(n: usize) -> Graph {
        GraphFamily::Path { n }.generate().unwrap()
    }

    fn star(n: usize) -> Graph {
        GraphFamily::Star { n }.generate().unwrap()
    }

    #[test]
    fn rooting() {
        let p3 = path(3);
        assert_eq!(root_at(&p3, 1).unwrap().children[1], vec![0, 2]);
        let chain = root_at(&p3, 0).unwrap();
        assert_eq!(
            (chain.children[0].clone(), chain.children[1].clone()),
            (vec![1], vec![2])
        );
        assert_eq!(root_at(&path(1), 0).unwrap().order, vec![0]);
        let cyc = GraphFamily::Cycle { n: 4 }.generate().unwrap();
        assert_eq!(root_at(&cyc, 0).unwrap_err(), Error::NotATree);
    }

    #[test]
    fn pruning() {
        let p5 = path(5);
        assert_eq!(pruned_tree(&p5, 0, 2).unwrap().new_to_old, vec![0, 1]);
        assert_eq!(pruned_tree(&p5, 2, 3).unwrap().new_to_old, vec![0, 1, 2]);
        assert_eq!(pruned_tree(&p5, 3, 4).unwrap().new_to_old, vec![0, 1, 2, 3]);
        assert_eq!(pruned_tree(&p5, 1, 1).unwrap_err(), Error::SameEndpoints);
    }

    fn brute_ladder(values: &[usize]) -> usize {
        let mut sorted = values.to_vec();
        sorted.sort_unstable();
        (0u32..1 << sorted.len())
            .filter_map(|mask| {
                let sub: Vec<usize> = (0..sorted.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| sorted[i])
                    .collect();
                sub.iter()
                    .enumerate()
                    .all(|(j, &l)| l > j)
                    .then_some(sub.len())
            })
            .max()
            .unwrap()
    }

    #[test]
    fn ladder_examples_and_brute_force() {
        assert_eq!(ladder(&[]).z, 0);
        assert_eq!(ladder(&[2, 2]).z, 2);
        assert_eq!(ladder(&[1, 1, 1]).z, 1);
        assert_eq!(ladder(&[3, 1, 2]).chosen, vec![0, 1, 2]);
        let mut rng = crate::corpus::rng_from_seed(11);
        use rand::Rng;
        for _ in 0..2000 {
            let len = rng.gen_range(0..=8);
            let values: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=8)).collect();
            let lad = ladder(&values);
            assert_eq!(lad.z, brute_ladder(&values), "{values:?}");
            assert!(lad
                .chosen
                .iter()
                .enumerate()
                .all(|(j, &p)| lad.sorted_values[p] > j));
        }
    }

    #[test]
    fn profile_examples() {
        assert_eq!(
            transitive_profile(&path(5)).unwrap().values,
            vec![2, 3, 3, 3, 2]
        );
        assert_eq!(transitive_profile(&path(1)).unwrap().values, vec![1]);
        assert_eq!(
            transitive_profile(&star(3)).unwrap().values,
            vec![2, 2, 2, 2]
        );
        // a path has maximum degree 2, so Tr is at most 3
        assert_eq!(transitivity_tree(&path(15)).unwrap(), 3);
        let rt = root_at(&path(5), 2).unwrap();
        assert_eq!(rooted_transitive_number(&rt, 2).unwrap(), 3);
        assert_eq!(rooted_transitive_number(&rt, 0).unwrap(), 1);
    }

    #[test]
    fn anchor_sets() {
        let s = star(1);
        let rt = root_at(&s, 0).unwrap();
        assert_eq!(
            allowed_indices_at_anchor(&rt, 0, 1, 1).unwrap(),
            BTreeSet::from([1])
        );
        assert!(allowed_indices_at_anchor(&rt, 0, 1, 2).is_err());
    }

    #[test]
    fn x_and_y_examples() {
        let p5 = path(5);
        let x = compute_x(&p5, 0, 3, 3).unwrap();
        assert_eq!(x.vertices, vec![0, 1]);
        assert_eq!(x.allowed(0), Some(&BTreeSet::from([2])));
        let star = star(3);
        let x = compute_x(&star, 1, 2, 2).unwrap();
        assert_eq!(x.vertices, vec![1]);
        let bare = path(4);
        // without 0 the vertex 1 drops to value 1, which also costs z = 2 a rung
        let y = compute_y(&bare, 0, 2, 3).unwrap();
        assert_eq!(y.vertices, vec![2, 1, 0]);
        assert!(compute_x(&p5, 0, 1, 3).is_err());
    }

    #[test]
    fn agreement() {
        let req = |v: Vec<usize>, s: Vec<Vec<usize>>| PathRequirement {
            vertices: v,
            allowed_indices: s.into_iter().map(|x| x.into_iter().collect()).collect(),
        };
        assert!(agrees(
            &req(vec![0], vec![vec![1]]),
            &req(vec![5], vec![vec![2]])
        ));
        assert!(agrees(
            &req(vec![0, 3], vec![vec![1], vec![2]]),
            &req(vec![5, 3], vec![vec![2], vec![2]])
        ));
        assert!(!agrees(
            &req(vec![0, 3], vec![vec![1], vec![2]]),
            &req(vec![5, 3], vec![vec![2], vec![3]])
        ));
    }

    #[test]
    fn ttr_examples() {
        let cfg = OracleConfig::default();
        for (g, expected) in [
            (path(4), 2),
            (path(5), 3),
            (star(3), 2),
            (path(1), 1),
            (path(2), 1),
        ] {
            let r = tournament_transitivity_tree(&g, cfg).unwrap();
            assert_eq!(r.value, expected);
            let w = r.witness.unwrap();
            assert_eq!(w.len(), expected);
            assert!(is_tournament_transitive(&g, &w).unwrap().ok);
        }
    }
}
