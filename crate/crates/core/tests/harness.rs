mod common;

use std::sync::Arc;

use qfideal_core::enumeration::{build_corpus_up_to, Ceiling, Corpus, Dedup};
use qfideal_core::harness::{
    check_theorem, sample_qfuzzy, search_counterexample, verify_all, Counterexample, Outcome, SampleConfig, TheoremId,
};
use qfideal_core::transforms::extension;
use qfideal_core::{classify, CrispKind, Error, Grade, QFuzzySubset, QSet, Semigroup};

use common::g;

fn small_config() -> SampleConfig {
    SampleConfig {
        grade_pool: vec![g("0"), g("1/2"), g("1")],
        q_sizes: vec![1],
        ..SampleConfig::default()
    }
}

fn corpus(order: usize) -> Corpus {
    build_corpus_up_to(order, Dedup::UpToIso, None, Ceiling::default()).unwrap()
}

#[test]
fn all_claims_hold_exhaustively_to_order_three() {
    let report = verify_all(&corpus(3), &small_config()).unwrap();
    assert_eq!(report.reports.len(), 27);
    for r in &report.reports {
        assert!(r.subjects_exhaustive);
        assert_eq!(r.violation_count, 0, "{}: {:?}", r.theorem, r.violations.first());
    }
}

#[test]
fn empty_corpus_gives_empty_reports() {
    let report = verify_all(&Corpus::from_items(vec![]), &SampleConfig::default()).unwrap();
    assert_eq!(report.reports.len(), 27);
    assert!(report
        .reports
        .iter()
        .all(|r| r.instances_checked == 0 && r.hypothesis_never_satisfied));
}

#[test]
fn reports_are_deterministic() {
    let c = corpus(3);
    let cfg = SampleConfig {
        samples_per_semigroup: 40,
        ..SampleConfig::default()
    };
    let a = serde_json::to_string(&verify_all(&c, &cfg).unwrap()).unwrap();
    let b = serde_json::to_string(&verify_all(&c, &cfg).unwrap()).unwrap();
    assert_eq!(a, b);
    let s = &c.items[20];
    assert_eq!(sample_qfuzzy(s, 2, &cfg, 37), sample_qfuzzy(s, 2, &cfg, 37));
}

#[test]
fn dropping_archimedean_breaks_the_constancy_claim() {
    let r = search_counterexample(TheoremId::T4_22, "archimedean", &corpus(2), &small_config()).unwrap();
    assert!(r.violation_count > 0);
    // the two-element min-semilattice {0,1} with mu = chi({0})
    let semilattice = vec![vec![0, 0], vec![0, 1]];
    let chi0 = vec![vec![Grade::ONE], vec![Grade::ZERO]];
    let w = r
        .violations
        .iter()
        .find(|w| w.semigroup.rows() == semilattice && w.fuzzy_subjects[0] == chi0)
        .expect("min-semilattice witness");
    assert!(w.reproduces().unwrap());
    assert!(common::fuzzy_kind(&semilattice, &chi0, CrispKind::CompletelySemiprime));
    let x = w.parameters.x.unwrap();
    let nu: common::Rows = chi0
        .iter()
        .map(|row| {
            row.iter()
                .map(|m| {
                    m.affine(w.parameters.beta.unwrap(), w.parameters.alpha.unwrap())
                        .unwrap()
                })
                .collect()
        })
        .collect();
    assert!(!common::constant_per_q(&common::extension(&semilattice, &nu, x)));
    assert!(!classify(&w.semigroup.to_semigroup()).archimedean);
}

#[test]
fn dropping_commutativity_breaks_extension_of_ideals() {
    // no witness exists below order four for this pool
    let r = search_counterexample(TheoremId::P4_2, "commutative", &corpus(3), &small_config()).unwrap();
    assert_eq!(r.violation_count, 0);
    assert!(r.hypothesis_hits > 0);
    let r = search_counterexample(TheoremId::P4_2, "commutative", &corpus(4), &small_config()).unwrap();
    assert!(r.violation_count > 0);
    for w in &r.violations {
        assert!(w.reproduces().unwrap());
        let t = w.semigroup.rows();
        let ext = common::extension(&t, &w.fuzzy_subjects[0], w.parameters.x.unwrap());
        assert!(common::fuzzy_kind(&t, &w.fuzzy_subjects[0], CrispKind::Ideal));
        assert!(!common::fuzzy_kind(&t, &ext, CrispKind::Ideal));
    }
}

#[test]
fn dropping_hypotheses_only_adds_violations() {
    let c = corpus(3);
    let cfg = small_config();
    for id in [TheoremId::P4_2, TheoremId::P4_7, TheoremId::T4_22, TheoremId::C4_12] {
        let base = check_theorem(id, &c, &cfg).unwrap();
        for h in id.hypotheses() {
            let dropped = search_counterexample(id, h, &c, &cfg).unwrap();
            assert!(dropped.violation_count >= base.violation_count);
            assert!(dropped.hypothesis_hits >= base.hypothesis_hits, "{id} without {h}");
            assert!(dropped.violations.iter().all(|w| w.reproduces().unwrap()));
        }
        let none = search_counterexample(id, "none", &c, &cfg).unwrap();
        assert_eq!(none.violation_count, base.violation_count);
    }
    // a passing run is not disturbed by searches made before it
    assert!(verify_all(&c, &cfg)
        .unwrap()
        .reports
        .iter()
        .all(|r| r.violation_count == 0));
}

#[test]
fn unknown_labels_are_rejected() {
    let c = corpus(1);
    assert!(matches!(
        search_counterexample(TheoremId::T4_22, "finite", &c, &small_config()),
        Err(Error::UnknownHypothesisLabel { .. })
    ));
    assert!(matches!("T9_9".parse::<TheoremId>(), Err(Error::UnknownTheorem(_))));
    assert_eq!("p4_4iii".parse::<TheoremId>().unwrap(), TheoremId::P4_4iii);
    let bad = SampleConfig {
        q_sizes: vec![],
        ..SampleConfig::default()
    };
    assert!(matches!(verify_all(&c, &bad), Err(Error::InvalidConfig(_))));
}

/// `S = {x, x^2, x^3, 0}` with `x^4 = 0`: `chi({x^2, 0})` is an interior
/// ideal but its extension by `x` is not even a subsemigroup.
#[test]
fn interior_ideal_extension_fails_on_the_nilpotent_cyclic_semigroup() {
    // elements: 0 = x, 1 = x^2, 2 = x^3, 3 = zero
    let t: common::Table = vec![vec![1, 2, 3, 3], vec![2, 3, 3, 3], vec![3, 3, 3, 3], vec![3, 3, 3, 3]];
    assert!(common::is_associative(&t));
    let nu: common::Rows = [false, true, false, true]
        .iter()
        .map(|&b| vec![if b { Grade::ONE } else { Grade::ZERO }])
        .collect();
    assert!(common::fuzzy_kind(&t, &nu, CrispKind::InteriorIdeal));
    let ext = common::extension(&t, &nu, 0);
    assert!(!common::fuzzy_kind(&t, &ext, CrispKind::InteriorIdeal));
    assert!(!common::fuzzy_kind(&t, &ext, CrispKind::Subsemigroup));

    let s = Semigroup::from_table(t).unwrap();
    assert!(classify(&s).commutative);
    let r = check_theorem(TheoremId::T4_18, &Corpus::from_items(vec![s]), &small_config()).unwrap();
    assert!(r.violation_count > 0);
    assert!(r.violations.iter().all(|w| w.reproduces().unwrap()));
}

/// With two `Q` labels the level sets `{x : mu(x,q) >= t for all q}` can
/// all be subsemigroups while mu is not one.
#[test]
fn level_set_characterization_needs_a_single_q() {
    // a is a zero, b*b = a, c*c = b
    let t: common::Table = vec![vec![0, 0, 0], vec![0, 0, 0], vec![0, 0, 1]];
    assert!(common::is_associative(&t));
    let mu: common::Rows = vec![vec![g("1"), g("1")], vec![g("1/4"), g("1/2")], vec![g("3/4"), g("0")]];
    assert!(!common::fuzzy_kind(&t, &mu, CrispKind::Subsemigroup));
    for th in ["0", "1/4", "1/2", "3/4", "1"] {
        let lv = common::level(&mu, g(th));
        assert!(lv.iter().any(|&b| b));
        assert!(common::crisp_kind(&t, &lv, CrispKind::Subsemigroup), "t = {th}");
    }
    let s = Arc::new(Semigroup::from_table(t).unwrap());
    let cfg = SampleConfig {
        q_sizes: vec![2],
        ..SampleConfig::default()
    };
    let r = check_theorem(TheoremId::T3_2, &Corpus::from_items(vec![(*s).clone()]), &cfg).unwrap();
    assert!(r.violation_count > 0);
    assert!(r.violations.iter().all(|w| w.reproduces().unwrap()));
    let single = check_theorem(
        TheoremId::T3_2,
        &Corpus::from_items(vec![(*s).clone()]),
        &small_config(),
    )
    .unwrap();
    assert_eq!(single.violation_count, 0);
}

#[test]
fn counterexamples_round_trip_through_json() {
    let r = search_counterexample(TheoremId::P4_2, "commutative", &corpus(4), &small_config()).unwrap();
    let w = &r.violations[0];
    let text = serde_json::to_string(w).unwrap();
    let back: Counterexample = serde_json::from_str(&text).unwrap();
    assert_eq!(&back, w);
    assert!(back.reproduces().unwrap());

    // a tampered witness no longer reproduces
    let mut fixed = back.clone();
    fixed.dropped_hypothesis = None;
    assert_eq!(fixed.replay().unwrap(), Outcome::Skipped);
}

#[test]
fn anomalies_replay_as_anomalies() {
    let r = check_theorem(TheoremId::T4_16, &corpus(3), &small_config()).unwrap();
    let group = r
        .anomalies
        .iter()
        .find(|a| a.kind == "empty_extension")
        .expect("beta = 0 gives empty extensions");
    assert!(matches!(group.example.replay().unwrap(), Outcome::Anomaly { .. }));
}

#[test]
fn constancy_is_implied_on_archimedean_commutative_semigroups() {
    let r = check_theorem(TheoremId::T4_22, &corpus(4), &small_config()).unwrap();
    assert_eq!(r.violation_count, 0);
    assert_eq!(
        r.observations.get("subject_constant").copied().unwrap_or(0),
        r.hypothesis_hits
    );
}

#[test]
fn fixed_points_of_every_extension_are_constant() {
    let c = corpus(3);
    let cfg = small_config();
    for s in c.items.iter().filter(|s| classify(s).commutative) {
        let owner = Arc::new(s.clone());
        let q = Arc::new(QSet::sized(1).unwrap());
        let n = s.order();
        for code in 0..3usize.pow(n as u32) {
            let grades: Vec<Grade> = (0..n)
                .map(|i| cfg.grade_pool[(code / 3usize.pow(i as u32)) % 3])
                .collect();
            let mu = QFuzzySubset::from_flat(owner.clone(), q.clone(), grades).unwrap();
            let fixed = s.elements().all(|x| extension(&mu, x).unwrap() == mu);
            assert_eq!(fixed, mu.is_constant(), "{:?}", mu.grades());
        }
    }
}
