use rand::Rng;
use ttr_core::bcg::{
    classify_bcg, ttr_bcg, type1_condition, BcgKind, BcgMode, Verdict, VerdictReason,
};
use ttr_core::corpus::{random_connected_bcg, rng_from_seed};
use ttr_core::oracle::{tournament_transitivity_exact, OracleConfig};
use ttr_core::partition::is_tournament_transitive;
use ttr_core::Graph;

fn corpus(seed: u64, count: usize) -> Vec<Graph> {
    let mut rng = rng_from_seed(seed);
    (0..count)
        .map(|_| {
            let n1 = rng.gen_range(1..=7);
            let n2 = rng.gen_range(1..=(12 - n1).min(7));
            random_connected_bcg(n1, n2, &mut rng)
        })
        .collect()
}

#[test]
fn theorem_verdicts_agree_with_oracle() {
    let cfg = OracleConfig::default();
    let mut kinds = std::collections::BTreeMap::new();
    for g in corpus(2024, 400) {
        let truth = tournament_transitivity_exact(&g, cfg).unwrap().value;
        let class = classify_bcg(&g).unwrap();
        *kinds.entry(format!("{:?}", class.kind)).or_insert(0) += 1;
        let d = ttr_bcg(&g, BcgMode::TheoremOnly).unwrap();
        assert!(
            d.verdict.contains(truth),
            "{:?} vs {truth} on {}",
            d.verdict,
            g.to_edge_list()
        );
        if let Verdict::Exact { value } = d.verdict {
            let w = d.witness.as_ref().unwrap();
            assert_eq!(w.len(), value);
            assert!(is_tournament_transitive(&g, w).unwrap().ok);
        }
        if class.kind == BcgKind::TypeI && type1_condition(&g, &class.ordering, class.t).is_some() {
            assert_eq!(truth, class.t + 1);
        }
        if class.kind == BcgKind::TypeIII {
            assert!(truth < class.t + 2);
            assert_eq!(d.reason, VerdictReason::Type3Strict);
        }
        let full = ttr_bcg(&g, BcgMode::WithOracle(cfg)).unwrap();
        assert_eq!(full.verdict, Verdict::Exact { value: truth });
    }
    for k in [
        "CompleteBipartite",
        "TypeI",
        "TypeIIa",
        "TypeIIb",
        "TypeIII",
    ] {
        assert!(
            kinds.get(k).copied().unwrap_or(0) > 0,
            "no {k} in corpus: {kinds:?}"
        );
    }
}

#[test]
fn classification_is_relabel_invariant() {
    let mut rng = rng_from_seed(5);
    for g in corpus(77, 200) {
        let c = classify_bcg(&g).unwrap();
        let mut perm: Vec<usize> = (0..g.n()).collect();
        rand::seq::SliceRandom::shuffle(perm.as_mut_slice(), &mut rng);
        let h = g.relabel(&perm).unwrap();
        let d = classify_bcg(&h).unwrap();
        assert_eq!((c.kind, c.t), (d.kind, d.t));
        let (a, b) = (
            ttr_bcg(&g, BcgMode::TheoremOnly).unwrap(),
            ttr_bcg(&h, BcgMode::TheoremOnly).unwrap(),
        );
        assert_eq!(a.verdict, b.verdict);
    }
}

/// The Type I condition is not necessary: X-degrees 4, 4, 3, 2 against four
/// Y vertices give t = 3 with no z_3, yet TTr = 4.
#[test]
fn type1_condition_is_not_necessary() {
    let degrees = [4, 4, 3, 2];
    let edges = degrees
        .iter()
        .enumerate()
        .flat_map(|(x, &d)| (0..d).map(move |y| (x, 4 + y)));
    let g = Graph::from_edges(8, edges).unwrap();
    let class = classify_bcg(&g).unwrap();
    assert_eq!((class.kind, class.t), (BcgKind::TypeI, 3));
    assert!(type1_condition(&g, &class.ordering, 3).is_none());
    let r = tournament_transitivity_exact(&g, OracleConfig::default()).unwrap();
    assert_eq!(r.value, 4);
    assert!(
        is_tournament_transitive(&g, r.witness.as_ref().unwrap())
            .unwrap()
            .ok
    );
}
