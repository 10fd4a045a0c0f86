//! The validation corpora behind `ttr sweep`.

use rand::Rng;
use serde_json::json;
use ttr_core::bcg::{classify_bcg, ttr_bcg, type1_condition, BcgKind, BcgMode, Verdict};
use ttr_core::closed_forms::ttr_formula;
use ttr_core::corpus::{nonisomorphic_trees, random_connected_bcg, rng_from_seed};
use ttr_core::oracle::{tournament_transitivity_exact, OracleConfig};
use ttr_core::tree::{tournament_transitivity_tree, transitivity_tree};
use ttr_core::{Graph, GraphFamily};

use crate::Outcome;

#[derive(Debug, Default)]
struct Row {
    name: &'static str,
    checked: usize,
    failures: usize,
    skipped: usize,
}

impl Row {
    fn new(name: &'static str) -> Self {
        Row {
            name,
            ..Row::default()
        }
    }

    fn record(&mut self, ok: bool) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
        }
    }

    fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn ttr(g: &Graph, cfg: OracleConfig) -> usize {
    tournament_transitivity_exact(g, cfg)
        .expect("graph within cap")
        .value
}

fn families(cfg: OracleConfig) -> Row {
    let mut row = Row::new("family formulas");
    let mut fams = Vec::new();
    for n in 1..=10 {
        fams.extend([GraphFamily::Path { n }, GraphFamily::Complete { n }]);
        if n >= 3 {
            fams.push(GraphFamily::Cycle { n });
        }
    }
    for m in 1..=4 {
        for n in 1..=4 {
            fams.push(GraphFamily::CompleteBipartite { m, n });
        }
    }
    for n in 1..=3 {
        for t in 1..=n {
            fams.push(GraphFamily::CliqueUnion { t, n });
        }
    }
    for f in fams {
        if f.order() > cfg.cap {
            row.skipped += 1;
            continue;
        }
        let g = f.generate().expect("valid family");
        row.record(ttr(&g, cfg) == ttr_formula(f).expect("valid family"));
    }
    row
}

fn trees(cfg: OracleConfig, max_n: usize) -> Row {
    let mut row = Row::new("tree algorithm");
    for n in 1..=max_n {
        for t in nonisomorphic_trees(n) {
            if n > cfg.cap {
                row.skipped += 1;
                continue;
            }
            let fast = tournament_transitivity_tree(&t, cfg).expect("tree").value;
            let tr = transitivity_tree(&t).expect("tree");
            row.record(fast == ttr(&t, cfg) && (fast == tr || fast + 1 == tr));
        }
    }
    row
}

fn bcgs(cfg: OracleConfig, count: usize, seed: u64) -> [Row; 3] {
    let mut verdicts = Row::new("bcg verdicts");
    let mut iff = Row::new("bcg type I iff");
    let mut strict = Row::new("bcg type III strict");
    let mut rng = rng_from_seed(seed);
    let max_n = cfg.cap.min(12);
    if max_n < 2 {
        verdicts.skipped = count;
        return [verdicts, iff, strict];
    }
    for _ in 0..count {
        let n1 = rng.gen_range(1..=(max_n - 1).min(7));
        let n2 = rng.gen_range(1..=(max_n - n1).min(7));
        let g = random_connected_bcg(n1, n2, &mut rng);
        let truth = ttr(&g, cfg);
        let class = classify_bcg(&g).expect("chain graph");
        let d = ttr_bcg(&g, BcgMode::TheoremOnly).expect("chain graph");
        verdicts.record(match d.verdict {
            Verdict::Exact { value } => value == truth,
            Verdict::Interval { .. } => d.verdict.contains(truth),
        });
        match class.kind {
            BcgKind::TypeI => {
                let holds = type1_condition(&g, &class.ordering, class.t).is_some();
                iff.record(holds == (truth == class.t + 1));
            }
            BcgKind::TypeIII => strict.record(truth < class.t + 2),
            _ => {}
        }
    }
    [verdicts, iff, strict]
}

pub fn run(cfg: OracleConfig, max_tree_n: usize, bcg_count: usize, seed: u64) -> Outcome {
    let mut rows = vec![families(cfg), trees(cfg, max_tree_n)];
    rows.extend(bcgs(cfg, bcg_count, seed));
    let mut text = String::new();
    for r in &rows {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        text.push_str(&format!(
            "{status}  {:<22} checked {:>4}  failures {:>3}  skipped {:>3}\n",
            r.name, r.checked, r.failures, r.skipped
        ));
    }
    let all = rows.iter().all(Row::passed);
    let json = json!({
        "command": "sweep",
        "seed": seed,
        "passed": all,
        "rows": rows.iter().map(|r| json!({
            "name": r.name,
            "passed": r.passed(),
            "checked": r.checked,
            "failures": r.failures,
            "skipped": r.skipped,
        })).collect::<Vec<_>>(),
    });
    Outcome {
        text,
        json,
        code: if all { 0 } else { 2 },
    }
}
