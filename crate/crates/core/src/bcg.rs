//! Bipartite chain graphs: chain orderings, the maximal prefix biclique,
//! type classification, and tournament transitivity verdicts.

use serde::Serialize;

use crate::closed_forms::ttr_formula;
use crate::error::{Error, Result};
use crate::family::GraphFamily;
use crate::graph::Graph;
use crate::oracle::{tournament_transitivity_exact, OracleConfig};
use crate::partition::{is_tournament_transitive, OrderedPartition};

/// Sides with nested neighborhoods: `N(x_{i+1}) ⊆ N(x_i)`, `N(y_{j+1}) ⊆ N(y_j)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainOrdering {
    pub sigma_x: Vec<usize>,
    pub sigma_y: Vec<usize>,
}

impl ChainOrdering {
    fn swapped(&self) -> ChainOrdering {
        ChainOrdering {
            sigma_x: self.sigma_y.clone(),
            sigma_y: self.sigma_x.clone(),
        }
    }

    /// `x_i` (1-based), if it exists.
    fn x(&self, i: usize) -> Option<usize> {
        i.checked_sub(1).and_then(|i| self.sigma_x.get(i).copied())
    }

    fn y(&self, j: usize) -> Option<usize> {
        j.checked_sub(1).and_then(|j| self.sigma_y.get(j).copied())
    }
}

/// Two-colors `g` and orders each side by descending degree (ties by id).
///
/// Side X is the color class of the lowest-id vertex with positive degree;
/// isolated vertices join X.
pub fn chain_ordering(g: &Graph) -> Result<ChainOrdering> {
    let n = g.n();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let first = g.vertices().find(|&v| g.degree(v) > 0);
    let starts = first.into_iter().chain(g.vertices());
    for s in starts {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            let c = color[v].expect("colored before push");
            for &w in g.neighbors(v) {
                match color[w] {
                    None => {
                        color[w] = Some(!c);
                        stack.push(w);
                    }
                    Some(cw) if cw == c => return Err(Error::NotBipartite),
                    Some(_) => {}
                }
            }
        }
    }
    let side = |want: bool| {
        let mut s: Vec<usize> = g.vertices().filter(|&v| color[v] == Some(want)).collect();
        s.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        s
    };
    let ord = ChainOrdering {
        sigma_x: side(false),
        sigma_y: side(true),
    };
    for seq in [&ord.sigma_x, &ord.sigma_y] {
        for w in seq.windows(2) {
            let (a, b) = (g.neighbors(w[0]), g.neighbors(w[1]));
            if !b.iter().all(|v| a.binary_search(v).is_ok()) {
                return Err(Error::NotChainGraph(format!(
                    "N({}) is not contained in N({})",
                    w[1], w[0]
                )));
            }
        }
    }
    Ok(ord)
}

/// Largest `t` with `x_t y_t ∈ E`; `X_t ∪ Y_t` then induces `K_{t,t}`.
pub fn max_biclique_t(g: &Graph, ord: &ChainOrdering) -> usize {
    (1..=ord.sigma_x.len().min(ord.sigma_y.len()))
        .take_while(|&i| g.has_edge(ord.sigma_x[i - 1], ord.sigma_y[i - 1]))
        .last()
        .unwrap_or(0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BcgKind {
    #[serde(rename = "complete-bipartite")]
    CompleteBipartite,
    #[serde(rename = "type-i")]
    TypeI,
    #[serde(rename = "type-iia")]
    TypeIIa,
    #[serde(rename = "type-iib")]
    TypeIIb,
    #[serde(rename = "type-iii")]
    TypeIII,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BcgClassification {
    pub kind: BcgKind,
    pub t: usize,
    /// Whether X and Y were exchanged so that `x_t y_{t+1} ∈ E` for Type II.
    pub side_swapped: bool,
    /// The ordering after any swap.
    pub ordering: ChainOrdering,
}

impl BcgClassification {
    /// Transitivity: `t+1`, or `t+2` for Type III.
    pub fn transitivity(&self) -> usize {
        match self.kind {
            BcgKind::CompleteBipartite => {
                self.ordering.sigma_x.len().min(self.ordering.sigma_y.len()) + 1
            }
            BcgKind::TypeIII => self.t + 2,
            _ => self.t + 1,
        }
    }
}

fn edge(g: &Graph, a: Option<usize>, b: Option<usize>) -> bool {
    matches!((a, b), (Some(a), Some(b)) if g.has_edge(a, b))
}

pub fn classify_bcg(g: &Graph) -> Result<BcgClassification> {
    let ord = chain_ordering(g)?;
    if g.m() == 0 {
        return Err(Error::NotChainGraph("graph has no edges".into()));
    }
    let t = max_biclique_t(g, &ord);
    if g.m() == ord.sigma_x.len() * ord.sigma_y.len() {
        return Ok(BcgClassification {
            kind: BcgKind::CompleteBipartite,
            t,
            side_swapped: false,
            ordering: ord,
        });
    }
    let lower = edge(g, ord.x(t + 1), ord.y(t));
    let upper = edge(g, ord.x(t), ord.y(t + 1));
    let (kind, side_swapped, ordering) = match (lower, upper) {
        (false, false) => (BcgKind::TypeI, false, ord),
        (true, true) => (BcgKind::TypeIII, false, ord),
        (swap, _) => {
            let ord = if swap { ord.swapped() } else { ord };
            let kind = if edge(g, ord.x(t + 1), ord.y(t.wrapping_sub(1))) {
                BcgKind::TypeIIb
            } else {
                BcgKind::TypeIIa
            };
            (kind, swap, ord)
        }
    };
    Ok(BcgClassification {
        kind,
        t,
        side_swapped,
        ordering,
    })
}

/// Distinct candidates `z_1..z_w` with `deg(z_j)` inside `windows[j-1]`.
///
/// Windows are processed by right endpoint, each taking the lowest-degree
/// unused candidate that fits, which is optimal for interval windows.
pub fn match_degree_windows(
    g: &Graph,
    candidates: &[usize],
    windows: &[(usize, usize)],
) -> Option<Vec<usize>> {
    let mut pool: Vec<usize> = candidates.to_vec();
    pool.sort_by_key(|&v| (g.degree(v), v));
    let mut used = vec![false; pool.len()];
    let mut order: Vec<usize> = (0..windows.len()).collect();
    order.sort_by_key(|&j| (windows[j].1, windows[j].0, j));
    let mut chosen = vec![usize::MAX; windows.len()];
    for j in order {
        let (lo, hi) = windows[j];
        let pick = (0..pool.len()).find(|&p| !used[p] && (lo..=hi).contains(&g.degree(pool[p])))?;
        used[pick] = true;
        chosen[j] = pool[pick];
    }
    Some(chosen)
}

/// Vertices after the first `from` on each side.
fn tails(ord: &ChainOrdering, from: usize) -> (Vec<usize>, Vec<usize>) {
    let tail = |s: &[usize]| s.iter().skip(from).copied().collect::<Vec<_>>();
    (tail(&ord.sigma_x), tail(&ord.sigma_y))
}

/// Type I: `z_1..z_t` outside `X_t ∪ Y_t` with `deg(z_1) = t-1` and
/// `deg(z_j) ∈ [t-j, t-j+1]`.
///
/// Sufficient for `TTr = t+1`, but not necessary.
pub fn type1_condition(g: &Graph, ord: &ChainOrdering, t: usize) -> Option<Vec<usize>> {
    if t == 0 {
        return None;
    }
    let (xs, ys) = tails(ord, t);
    let windows: Vec<(usize, usize)> = (1..=t)
        .map(|j| {
            if j == 1 {
                (t - 1, t - 1)
            } else {
                (t - j, t - j + 1)
            }
        })
        .collect();
    match_degree_windows(g, &[xs, ys].concat(), &windows)
}

/// Type II(a): `z_1..z_{t-1}` from `(X \ X_t) ∪ {y_{t+2}, ...}` with
/// `deg(z_j) ∈ [t-j-1, t-j]`.
pub fn type2a_condition(g: &Graph, ord: &ChainOrdering, t: usize) -> Option<Vec<usize>> {
    let (xs, _) = tails(ord, t);
    let (_, ys) = tails(ord, t + 1);
    let windows: Vec<(usize, usize)> = (1..t).map(|j| ((t - j).saturating_sub(1), t - j)).collect();
    match_degree_windows(g, &[xs, ys].concat(), &windows)
}

/// Type II(b): `z_1..z_{t-2}` from `{x_{t+2}, ..., y_{t+2}, ...}` with
/// `deg(z_j) ∈ [t-j-2, t-j-1]`.
pub fn type2b_condition(g: &Graph, ord: &ChainOrdering, t: usize) -> Option<Vec<usize>> {
    let (xs, ys) = tails(ord, t + 1);
    let windows: Vec<(usize, usize)> = (1..t.saturating_sub(1))
        .map(|j| ((t - j).saturating_sub(2), t - j - 1))
        .collect();
    match_degree_windows(g, &[xs, ys].concat(), &windows)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictReason {
    Type1Iff,
    Type2aSufficient,
    Type2bSufficient,
    Type3Strict,
    ConditionFailed,
    OracleFallback,
    CompleteBipartiteFormula,
    /// Isolated vertices put the graph outside the theorems' setting.
    IsolatedVertices,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Verdict {
    Exact { value: usize },
    Interval { lo: usize, hi: usize },
}

impl Verdict {
    pub fn contains(&self, v: usize) -> bool {
        match *self {
            Verdict::Exact { value } => v == value,
            Verdict::Interval { lo, hi } => (lo..=hi).contains(&v),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TTrDetermination {
    pub verdict: Verdict,
    pub reason: VerdictReason,
    pub witness: Option<OrderedPartition>,
    pub condition_witnesses: Option<Vec<usize>>,
    pub classification: Option<BcgClassification>,
    /// The verdict before an oracle refined it, when it did.
    pub theorem_verdict: Option<Verdict>,
}

/// Whether an oracle may refine verdicts that the theorems leave open.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BcgMode {
    TheoremOnly,
    WithOracle(OracleConfig),
}

pub fn ttr_bcg(g: &Graph, mode: BcgMode) -> Result<TTrDetermination> {
    let ord = chain_ordering(g)?;
    if g.vertices().any(|v| g.degree(v) == 0) {
        let det = TTrDetermination {
            verdict: Verdict::Interval {
                lo: 1,
                hi: crate::oracle::bounds_ttr(g).1,
            },
            reason: VerdictReason::IsolatedVertices,
            witness: None,
            condition_witnesses: None,
            classification: None,
            theorem_verdict: None,
        };
        return refine_with_oracle(g, det, mode);
    }
    let class = classify_bcg(g)?;
    let t = class.t;
    let o = class.ordering.clone();
    let x = |i: usize| o.sigma_x[i - 1];
    let y = |j: usize| o.sigma_y[j - 1];
    let (cond, reason) = match class.kind {
        BcgKind::CompleteBipartite => {
            let f = GraphFamily::CompleteBipartite {
                m: ord.sigma_x.len(),
                n: ord.sigma_y.len(),
            };
            let value = ttr_formula(f)?;
            let witness = complete_bipartite_witness(&ord);
            let det = exact(
                g,
                value,
                witness,
                VerdictReason::CompleteBipartiteFormula,
                None,
                class,
            )?;
            return cross_check(g, det, mode);
        }
        BcgKind::TypeI => (type1_condition(g, &o, t), VerdictReason::Type1Iff),
        BcgKind::TypeIIa => (type2a_condition(g, &o, t), VerdictReason::Type2aSufficient),
        BcgKind::TypeIIb => (type2b_condition(g, &o, t), VerdictReason::Type2bSufficient),
        BcgKind::TypeIII => (None, VerdictReason::Type3Strict),
    };
    let Some(z) = cond else {
        // A failed Type I condition does not rule out `t+1`: `K_{2,3}` minus
        // an edge has no `z_2` yet a 3-part tournament partition exists.
        let reason = match class.kind {
            BcgKind::TypeIII => VerdictReason::Type3Strict,
            _ => VerdictReason::ConditionFailed,
        };
        let hi = t + 1;
        let det = TTrDetermination {
            verdict: Verdict::Interval { lo: 2, hi },
            reason,
            witness: None,
            condition_witnesses: None,
            classification: Some(class),
            theorem_verdict: None,
        };
        return refine_with_oracle(g, det, mode);
    };
    let zz = |j: usize| z[j - 1];
    let mut parts: Vec<Vec<usize>> = vec![Vec::new(); t + 1];
    match class.kind {
        BcgKind::TypeI => {
            parts[0].extend([x(1), y(1), zz(t)]);
            for i in 2..t {
                parts[i - 1].extend([x(i), y(i), zz(t - i + 1)]);
            }
            parts[t - 1].extend([x(t), zz(1)]);
            parts[t].push(y(t));
        }
        BcgKind::TypeIIa => {
            parts[0].extend([x(1), y(1)]);
            if t >= 2 {
                parts[0].push(zz(t - 1));
            }
            for i in 2..t {
                parts[i - 1].extend([x(i), y(i), zz(t - i)]);
            }
            if t >= 2 {
                parts[t - 1].extend([x(t), y(t)]);
            }
            parts[t].push(y(t + 1));
        }
        BcgKind::TypeIIb => {
            parts[0].extend([x(1), y(1)]);
            if t >= 3 {
                parts[0].push(zz(t - 2));
            }
            for i in 2..t.saturating_sub(1) {
                parts[i - 1].extend([x(i), y(i), zz(t - i - 1)]);
            }
            if t >= 3 {
                parts[t - 2].extend([x(t - 1), y(t - 1)]);
            }
            parts[t - 1].extend([x(t), x(t + 1)]);
            parts[t].push(y(t));
        }
        _ => unreachable!("conditions exist only for types I and II"),
    }
    let placed: std::collections::BTreeSet<usize> = parts.iter().flatten().copied().collect();
    parts[0].extend(g.vertices().filter(|v| !placed.contains(v)));
    let witness = OrderedPartition::new(parts)?;
    let det = exact(g, t + 1, witness, reason, Some(z), class)?;
    cross_check(g, det, mode)
}

fn complete_bipartite_witness(ord: &ChainOrdering) -> OrderedPartition {
    let (big, small) = if ord.sigma_y.len() >= 2 {
        (&ord.sigma_y, &ord.sigma_x)
    } else {
        (&ord.sigma_x, &ord.sigma_y)
    };
    if big.len() < 2 {
        let all: Vec<usize> = small.iter().chain(big).copied().collect();
        return OrderedPartition::new(vec![all]).expect("nonempty");
    }
    let mut first: Vec<usize> = small.clone();
    first.push(big[0]);
    OrderedPartition::new(vec![first, big[1..].to_vec()]).expect("disjoint nonempty parts")
}

fn exact(
    g: &Graph,
    value: usize,
    witness: OrderedPartition,
    reason: VerdictReason,
    z: Option<Vec<usize>>,
    class: BcgClassification,
) -> Result<TTrDetermination> {
    if witness.len() != value || !is_tournament_transitive(g, &witness)?.ok {
        return Err(Error::InvariantViolation(format!(
            "constructed {:?} witness does not verify",
            class.kind
        )));
    }
    Ok(TTrDetermination {
        verdict: Verdict::Exact { value },
        reason,
        witness: Some(witness),
        condition_witnesses: z,
        classification: Some(class),
        theorem_verdict: None,
    })
}

fn cross_check(g: &Graph, det: TTrDetermination, mode: BcgMode) -> Result<TTrDetermination> {
    if let BcgMode::WithOracle(cfg) = mode {
        if g.n() <= cfg.cap {
            let value = tournament_transitivity_exact(g, cfg)?.value;
            if !det.verdict.contains(value) {
                return Err(Error::InvariantViolation(format!(
                    "verdict {:?} but the oracle finds {value}",
                    det.verdict
                )));
            }
        }
    }
    Ok(det)
}

fn refine_with_oracle(g: &Graph, det: TTrDetermination, mode: BcgMode) -> Result<TTrDetermination> {
    let BcgMode::WithOracle(cfg) = mode else {
        return Ok(det);
    };
    if g.n() > cfg.cap {
        return Ok(det);
    }
    let r = tournament_transitivity_exact(g, cfg)?;
    if !det.verdict.contains(r.value) {
        return Err(Error::InvariantViolation(format!(
            "verdict {:?} but the oracle finds {}",
            det.verdict, r.value
        )));
    }
    Ok(TTrDetermination {
        verdict: Verdict::Exact { value: r.value },
        reason: VerdictReason::OracleFallback,
        witness: r.witness,
        theorem_verdict: Some(det.verdict),
        ..det
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    /// `K_{2,2}` on x = {0,1}, y = {2,3}, plus x_3 = 4 on y_1 and y_3 = 5 on x_1.
    fn type1_example() -> Graph {
        g(6, &[(0, 2), (0, 3), (1, 2), (1, 3), (4, 2), (5, 0)])
    }

    /// `K_{3,3}` on x = {0,1,2}, y = {3,4,5} minus x_3 y_3.
    fn k33_minus_edge() -> Graph {
        g(
            6,
            &[
                (0, 3),
                (0, 4),
                (0, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
            ],
        )
    }

    #[test]
    fn orderings() {
        let k23 = GraphFamily::CompleteBipartite { m: 2, n: 3 }
            .generate()
            .unwrap();
        let o = chain_ordering(&k23).unwrap();
        assert_eq!((o.sigma_x.len(), o.sigma_y.len()), (2, 3));
        let p4 = GraphFamily::Path { n: 4 }.generate().unwrap();
        let o = chain_ordering(&p4).unwrap();
        assert_eq!(max_biclique_t(&p4, &o), 1);
        let c6 = GraphFamily::Cycle { n: 6 }.generate().unwrap();
        assert!(matches!(chain_ordering(&c6), Err(Error::NotChainGraph(_))));
        let c5 = GraphFamily::Cycle { n: 5 }.generate().unwrap();
        assert_eq!(chain_ordering(&c5).unwrap_err(), Error::NotBipartite);
        let k33 = GraphFamily::CompleteBipartite { m: 3, n: 3 }
            .generate()
            .unwrap();
        assert_eq!(max_biclique_t(&k33, &chain_ordering(&k33).unwrap()), 3);
        let h = k33_minus_edge();
        assert_eq!(max_biclique_t(&h, &chain_ordering(&h).unwrap()), 2);
    }

    #[test]
    fn classification_examples() {
        let c = classify_bcg(&type1_example()).unwrap();
        assert_eq!((c.kind, c.t), (BcgKind::TypeI, 2));
        let c = classify_bcg(&k33_minus_edge()).unwrap();
        assert_eq!((c.kind, c.t), (BcgKind::TypeIII, 2));
        assert_eq!(c.transitivity(), 4);
        let k23 = GraphFamily::CompleteBipartite { m: 2, n: 3 }
            .generate()
            .unwrap();
        assert_eq!(classify_bcg(&k23).unwrap().kind, BcgKind::CompleteBipartite);
    }

    #[test]
    fn window_matching_matches_brute_force() {
        use rand::Rng;
        let mut rng = crate::corpus::rng_from_seed(17);
        for _ in 0..500 {
            let n = rng.gen_range(1..=7);
            let star_like = crate::corpus::random_graph(n + 6, 0.4, &mut rng);
            let cands: Vec<usize> = (0..n).collect();
            let w = rng.gen_range(0..=n);
            let windows: Vec<(usize, usize)> = (0..w)
                .map(|_| {
                    let lo = rng.gen_range(0..5);
                    (lo, lo + rng.gen_range(0..=1))
                })
                .collect();
            let fast = match_degree_windows(&star_like, &cands, &windows);
            let brute = brute_match(
                &star_like,
                &cands,
                &windows,
                &mut vec![false; cands.len()],
                0,
            );
            assert_eq!(fast.is_some(), brute, "{windows:?}");
            if let Some(z) = fast {
                for (j, &v) in z.iter().enumerate() {
                    assert!((windows[j].0..=windows[j].1).contains(&star_like.degree(v)));
                }
            }
        }
    }

    fn brute_match(
        g: &Graph,
        cands: &[usize],
        windows: &[(usize, usize)],
        used: &mut Vec<bool>,
        j: usize,
    ) -> bool {
        if j == windows.len() {
            return true;
        }
        for i in 0..cands.len() {
            if !used[i] && (windows[j].0..=windows[j].1).contains(&g.degree(cands[i])) {
                used[i] = true;
                let ok = brute_match(g, cands, windows, used, j + 1);
                used[i] = false;
                if ok {
                    return true;
                }
            }
        }
        false
    }

    #[test]
    fn conditions() {
        let h = type1_example();
        let c = classify_bcg(&h).unwrap();
        let z = type1_condition(&h, &c.ordering, 2).unwrap();
        assert!(z.iter().all(|&v| h.degree(v) == 1));
        let single = g(5, &[(0, 2), (0, 3), (1, 2), (1, 3), (4, 2)]);
        let c = classify_bcg(&single).unwrap();
        assert_eq!(c.kind, BcgKind::TypeI);
        assert!(type1_condition(&single, &c.ordering, 2).is_none());
        let k = GraphFamily::Star { n: 3 }.generate().unwrap();
        let o = chain_ordering(&k).unwrap();
        assert!(type1_condition(&k, &o, 1).is_none());
        assert_eq!(type2b_condition(&k, &o, 2), Some(vec![]));
    }

    #[test]
    fn verdict_examples() {
        let cfg = BcgMode::WithOracle(OracleConfig::default());
        let d = ttr_bcg(&type1_example(), cfg).unwrap();
        assert_eq!(
            (d.verdict, d.reason),
            (Verdict::Exact { value: 3 }, VerdictReason::Type1Iff)
        );
        let d = ttr_bcg(&k33_minus_edge(), BcgMode::TheoremOnly).unwrap();
        assert_eq!(d.verdict, Verdict::Interval { lo: 2, hi: 3 });
        let d = ttr_bcg(&k33_minus_edge(), cfg).unwrap();
        assert_eq!(d.reason, VerdictReason::OracleFallback);
        assert!(matches!(d.verdict, Verdict::Exact { value } if value < 4));
        let k23 = GraphFamily::CompleteBipartite { m: 2, n: 3 }
            .generate()
            .unwrap();
        assert_eq!(
            ttr_bcg(&k23, cfg).unwrap().verdict,
            Verdict::Exact { value: 2 }
        );
        let k11 = GraphFamily::CompleteBipartite { m: 1, n: 1 }
            .generate()
            .unwrap();
        assert_eq!(
            ttr_bcg(&k11, cfg).unwrap().verdict,
            Verdict::Exact { value: 1 }
        );
        // x_1 on y_1..y_3, x_2 on y_1, y_2: Type I with t = 2, no z_2, TTr = 3.
        let gap = g(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3)]);
        let d = ttr_bcg(&gap, BcgMode::TheoremOnly).unwrap();
        assert_eq!(
            (d.verdict, d.reason),
            (
                Verdict::Interval { lo: 2, hi: 3 },
                VerdictReason::ConditionFailed
            )
        );
        assert_eq!(
            ttr_bcg(&gap, cfg).unwrap().verdict,
            Verdict::Exact { value: 3 }
        );
        let iso = g(3, &[(0, 1)]);
        let d = ttr_bcg(&iso, cfg).unwrap();
        assert_eq!(
            (d.verdict, d.reason),
            (Verdict::Exact { value: 2 }, VerdictReason::OracleFallback)
        );
        assert_eq!(d.theorem_verdict, Some(Verdict::Interval { lo: 1, hi: 2 }));
    }
}
