//! Ordered vertex partitions and the domination checks between their parts.
//!
//! Parts are numbered from 1 in reports (`V_1` is `parts()[0]`). A partition
//! is *transitive* when every earlier part dominates every later part, and
//! *tournament transitive* when, in addition, no later part dominates an
//! earlier one.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OrderedPartition {
    parts: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// `V_i` fails to dominate `V_j`; the witness is an undominated vertex of `V_j`.
    MissingDomination,
    /// `V_j` dominates `V_i`; the witness is the smallest vertex of `V_i`.
    ForbiddenBackDomination,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// 1-based index of the earlier part.
    pub i: usize,
    /// 1-based index of the later part.
    pub j: usize,
    pub kind: ViolationKind,
    pub witness: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub ok: bool,
    pub first_violation: Option<Violation>,
}

impl VerificationReport {
    fn from_violation(first_violation: Option<Violation>) -> Self {
        VerificationReport {
            ok: first_violation.is_none(),
            first_violation,
        }
    }
}

impl OrderedPartition {
    /// Builds a partition from parts; each part is sorted. Parts must be
    /// nonempty and pairwise disjoint.
    pub fn new(parts: Vec<Vec<usize>>) -> Result<OrderedPartition> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        let mut parts = parts;
        let mut seen = std::collections::BTreeSet::new();
        for (idx, part) in parts.iter_mut().enumerate() {
            if part.is_empty() {
                return Err(Error::InvalidPartition(format!(
                    "part {} is empty",
                    idx + 1
                )));
            }
            part.sort_unstable();
            for &v in part.iter() {
                if !seen.insert(v) {
                    return Err(Error::InvalidPartition(format!("vertex {v} appears twice")));
                }
            }
        }
        Ok(OrderedPartition { parts })
    }

    /// Partition from 0-based part labels per vertex; every label `0..=max` must occur.
    pub fn from_labels(labels: &[usize]) -> Result<OrderedPartition> {
        let k = labels.iter().max().map_or(0, |&l| l + 1);
        let mut parts = vec![Vec::new(); k];
        for (v, &l) in labels.iter().enumerate() {
            parts[l].push(v);
        }
        OrderedPartition::new(parts)
    }

    /// The one-part partition of `0..n`.
    pub fn single(n: usize) -> OrderedPartition {
        OrderedPartition {
            parts: vec![(0..n).collect()],
        }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<Vec<usize>> {
        self.parts
    }

    /// 0-based part label of every vertex `0..n`, or `None` if some vertex is missing.
    pub fn labels(&self, n: usize) -> Option<Vec<usize>> {
        let mut labels = vec![usize::MAX; n];
        for (l, part) in self.parts.iter().enumerate() {
            for &v in part {
                *labels.get_mut(v)? = l;
            }
        }
        labels.iter().all(|&l| l != usize::MAX).then_some(labels)
    }

    /// Checks that the parts cover exactly the vertices of `g`.
    pub fn validate_for(&self, g: &Graph) -> Result<()> {
        let total: usize = self.parts.iter().map(Vec::len).sum();
        if let Some(&v) = self.parts.iter().flatten().find(|&&v| v >= g.n()) {
            return Err(Error::InvalidPartition(format!(
                "vertex {v} is not in the graph"
            )));
        }
        if total != g.n() {
            return Err(Error::InvalidPartition(format!(
                "covers {total} of {} vertices",
                g.n()
            )));
        }
        Ok(())
    }

    /// `{V_1 ∪ V_2, V_3, ..., V_k}`.
    pub fn merge_first_two(&self) -> Result<OrderedPartition> {
        if self.len() < 2 {
            return Err(Error::Precondition(
                "merging needs at least two parts".into(),
            ));
        }
        let mut first = self.parts[0].clone();
        first.extend_from_slice(&self.parts[1]);
        first.sort_unstable();
        let mut parts = vec![first];
        parts.extend(self.parts[2..].iter().cloned());
        Ok(OrderedPartition { parts })
    }

    /// Merges the first parts until exactly `j` remain.
    pub fn shrink_to(&self, j: usize) -> Result<OrderedPartition> {
        if j == 0 || j > self.len() {
            return Err(Error::Precondition(format!(
                "target size {j} outside 1..={}",
                self.len()
            )));
        }
        let mut p = self.clone();
        while p.len() > j {
            p = p.merge_first_two()?;
        }
        Ok(p)
    }

    /// Text format: one line per part, space-separated ids, `V_1` first.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for part in &self.parts {
            let line: Vec<String> = part.iter().map(usize::to_string).collect();
            writeln!(out, "{}", line.join(" ")).unwrap();
        }
        out
    }

    pub fn parse(text: &str) -> Result<OrderedPartition> {
        let mut parts = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let part = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>().map_err(|_| Error::Parse {
                        line: i + 1,
                        msg: format!("`{tok}` is not a vertex id"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            parts.push(part);
        }
        OrderedPartition::new(parts)
    }
}

/// True iff every vertex of `b` has a neighbor in `a`. The sets must be
/// nonempty, disjoint, and inside `g`.
pub fn dominates(g: &Graph, a: &[usize], b: &[usize]) -> Result<bool> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyVertexSet);
    }
    let mut in_a = vec![false; g.n()];
    for &v in a {
        *in_a.get_mut(v).ok_or(Error::VertexOutOfRange(v))? = true;
    }
    for &v in b {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange(v));
        }
        if in_a[v] {
            return Err(Error::OverlappingSets(v));
        }
    }
    Ok(b.iter().all(|&v| g.neighbors(v).iter().any(|&w| in_a[w])))
}

/// Checks forward domination for every pair `i < j`.
pub fn is_transitive(g: &Graph, p: &OrderedPartition) -> Result<VerificationReport> {
    verify(g, p, false)
}

/// Checks forward domination and the absence of back domination for every pair `i < j`.
pub fn is_tournament_transitive(g: &Graph, p: &OrderedPartition) -> Result<VerificationReport> {
    verify(g, p, true)
}

fn verify(g: &Graph, p: &OrderedPartition, tournament: bool) -> Result<VerificationReport> {
    p.validate_for(g)?;
    let labels = p
        .labels(g.n())
        .expect("validated partition covers the graph");
    let k = p.len();
    // has_label[v][l]: v has a neighbor in part l
    let has_label: Vec<Vec<bool>> = g
        .vertices()
        .map(|v| {
            let mut row = vec![false; k];
            for &w in g.neighbors(v) {
                row[labels[w]] = true;
            }
            row
        })
        .collect();
    let parts = p.parts();
    for i in 0..k {
        for j in i + 1..k {
            if let Some(&w) = parts[j].iter().find(|&&v| !has_label[v][i]) {
                return Ok(VerificationReport::from_violation(Some(Violation {
                    i: i + 1,
                    j: j + 1,
                    kind: ViolationKind::MissingDomination,
                    witness: w,
                })));
            }
            if tournament && parts[i].iter().all(|&v| has_label[v][j]) {
                return Ok(VerificationReport::from_violation(Some(Violation {
                    i: i + 1,
                    j: j + 1,
                    kind: ViolationKind::ForbiddenBackDomination,
                    witness: parts[i][0],
                })));
            }
        }
    }
    Ok(VerificationReport::from_violation(None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::GraphFamily;

    fn p(parts: &[&[usize]]) -> OrderedPartition {
        OrderedPartition::new(parts.iter().map(|s| s.to_vec()).collect()).unwrap()
    }

    #[test]
    fn domination_on_p3() {
        let g = GraphFamily::Path { n: 3 }.generate().unwrap();
        assert!(dominates(&g, &[1], &[0, 2]).unwrap());
        assert!(!dominates(&g, &[0], &[2]).unwrap());
        assert!(dominates(&g, &[0, 2], &[1]).unwrap());
        assert_eq!(
            dominates(&g, &[0, 1], &[1]).unwrap_err(),
            Error::OverlappingSets(1)
        );
        assert_eq!(dominates(&g, &[], &[1]).unwrap_err(), Error::EmptyVertexSet);
    }

    #[test]
    fn transitive_examples() {
        let k4 = GraphFamily::Complete { n: 4 }.generate().unwrap();
        assert!(
            is_transitive(&k4, &p(&[&[2], &[0], &[3], &[1]]))
                .unwrap()
                .ok
        );

        let p3 = GraphFamily::Path { n: 3 }.generate().unwrap();
        let r = is_transitive(&p3, &p(&[&[0], &[2], &[1]])).unwrap();
        assert_eq!(
            r.first_violation,
            Some(Violation {
                i: 1,
                j: 2,
                kind: ViolationKind::MissingDomination,
                witness: 2
            })
        );
        assert!(is_transitive(&p3, &OrderedPartition::single(3)).unwrap().ok);
    }

    #[test]
    fn tournament_examples() {
        let p5 = GraphFamily::Path { n: 5 }.generate().unwrap();
        let w = p(&[&[1, 4], &[0, 2], &[3]]);
        assert!(is_tournament_transitive(&p5, &w).unwrap().ok);

        let k4 = GraphFamily::Complete { n: 4 }.generate().unwrap();
        let r = is_tournament_transitive(&k4, &p(&[&[0], &[1], &[2], &[3]])).unwrap();
        let v = r.first_violation.unwrap();
        assert_eq!(
            (v.i, v.j, v.kind),
            (1, 2, ViolationKind::ForbiddenBackDomination)
        );
        assert!(!r.ok);
    }

    #[test]
    fn invalid_partitions_are_rejected() {
        let g = GraphFamily::Path { n: 3 }.generate().unwrap();
        assert!(OrderedPartition::new(vec![vec![0], vec![]]).is_err());
        assert!(OrderedPartition::new(vec![vec![0, 1], vec![1]]).is_err());
        assert!(is_transitive(&g, &p(&[&[0], &[1]])).is_err());
        assert!(is_transitive(&g, &p(&[&[0, 1], &[2, 3]])).is_err());
        assert!(OrderedPartition::from_labels(&[0, 2, 0]).is_err());
    }

    #[test]
    fn merge_and_shrink() {
        let two = p(&[&[0, 3], &[1, 2]]);
        assert_eq!(two.merge_first_two().unwrap(), OrderedPartition::single(4));
        assert!(OrderedPartition::single(3).merge_first_two().is_err());

        let p5 = GraphFamily::Path { n: 5 }.generate().unwrap();
        let w = p(&[&[1, 4], &[0, 2], &[3]]);
        let merged = w.merge_first_two().unwrap();
        assert_eq!(merged, p(&[&[0, 1, 2, 4], &[3]]));
        assert!(is_tournament_transitive(&p5, &merged).unwrap().ok);

        assert_eq!(w.shrink_to(3).unwrap(), w);
        assert_eq!(w.shrink_to(1).unwrap(), OrderedPartition::single(5));
        assert!(w.shrink_to(0).is_err());
        assert!(w.shrink_to(4).is_err());
    }

    #[test]
    fn text_round_trip() {
        let w = p(&[&[1, 4], &[0, 2], &[3]]);
        assert_eq!(w.to_text(), "1 4\n0 2\n3\n");
        assert_eq!(OrderedPartition::parse(&w.to_text()).unwrap(), w);
        assert!(OrderedPartition::parse("0 1\nz\n").is_err());
    }

    #[test]
    fn labels_agree_with_parts() {
        let w = p(&[&[1, 4], &[0, 2], &[3]]);
        assert_eq!(w.labels(5).unwrap(), vec![1, 0, 1, 2, 0]);
        assert_eq!(OrderedPartition::from_labels(&[1, 0, 1, 2, 0]).unwrap(), w);
        assert_eq!(w.labels(6), None);
    }
}
