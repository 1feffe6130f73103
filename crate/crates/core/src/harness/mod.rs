//! Checks the claims over a corpus of semigroups.
//!
//! Every corpus item is first brought to canonical labeling, so reported
//! counterexamples carry canonical tables and runs over isomorphic inputs
//! see the same subjects. Semigroups are processed in parallel and merged
//! in corpus order; reports depend only on the corpus and the config.

mod claims;
mod sampling;

use std::collections::BTreeMap;
use std::sync::Arc;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use claims::{Outcome, Params, TheoremId};
pub use sampling::{sample_qfuzzy, SubjectSampler};

use crate::enumeration::{canonical_semigroup, canonicalize, CanonicalTable, Corpus};
use crate::error::{Error, Result};
use crate::qfuzzy::{Grade, QFuzzySubset, QSet};
use crate::semigroup::{classify, ClassFlags, CrispKind, CrispSubset, Semigroup};
use crate::transforms::TransformParams;
use claims::{evaluate, Instance, Shape, Subject};

/// Crisp subsets are enumerated only up to this carrier size.
pub const CRISP_SUBSET_LIMIT: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct SampleConfig {
    pub seed: u64,
    pub samples_per_semigroup: usize,
    pub grade_pool: Vec<Grade>,
    pub q_sizes: Vec<usize>,
    /// Cap on stored counterexamples per claim.
    pub max_witnesses: usize,
    /// Cap on qualifying subjects used to build families.
    pub family_cap: usize,
}

impl Default for SampleConfig {
    fn default() -> Self {
        Self {
            seed: 42,
            samples_per_semigroup: 200,
            grade_pool: ["0", "1/4", "1/2", "3/4", "1"]
                .iter()
                .map(|g| g.parse().expect("grade"))
                .collect(),
            q_sizes: vec![1, 2],
            max_witnesses: 25,
            family_cap: 24,
        }
    }
}

impl SampleConfig {
    pub fn validate(&self) -> Result<()> {
        if self.grade_pool.is_empty() {
            return Err(Error::InvalidConfig("grade pool is empty".into()));
        }
        if self.q_sizes.is_empty() || self.q_sizes.contains(&0) {
            return Err(Error::InvalidConfig(
                "q sizes must be a non-empty list of positive integers".into(),
            ));
        }
        if self.samples_per_semigroup == 0 {
            return Err(Error::InvalidConfig("samples per semigroup must be positive".into()));
        }
        Ok(())
    }
}

/// A single failing (or anomalous) instance, replayable on its own.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub theorem: TheoremId,
    pub semigroup: CanonicalTable,
    pub q_size: usize,
    /// Grade matrices indexed `[element][q]`.
    pub fuzzy_subjects: Vec<Vec<Vec<Grade>>>,
    pub crisp_subjects: Vec<Vec<usize>>,
    pub parameters: Params,
    pub dropped_hypothesis: Option<String>,
    pub failed_condition: String,
}

impl Counterexample {
    /// Re-evaluates the instance from scratch.
    pub fn replay(&self) -> Result<Outcome> {
        let s = Arc::new(self.semigroup.to_semigroup());
        let n = s.order();
        let qset = Arc::new(QSet::sized(self.q_size)?);
        let subjects = self
            .fuzzy_subjects
            .iter()
            .map(|rows| QFuzzySubset::new(s.clone(), qset.clone(), rows.clone()).map(Subject::new))
            .collect::<Result<Vec<_>>>()?;
        let crisp = self
            .crisp_subjects
            .iter()
            .map(|a| CrispSubset::from_indices(n, a.iter().copied()))
            .collect::<Result<Vec<_>>>()?;
        if let Some(x) = self.parameters.x {
            s.check_element(x)?;
        }
        let dropped = match &self.dropped_hypothesis {
            Some(label) => self.theorem.parse_drop(label)?,
            None => None,
        };
        let hyps = active_hypotheses(self.theorem, dropped);
        let inst = Instance {
            subjects: subjects.iter().collect(),
            crisp,
            qset,
            params: self.parameters.clone(),
        };
        check_shape(self.theorem, &inst)?;
        Ok(evaluate(self.theorem, &s, &classify(&s), &inst, &hyps))
    }

    /// True iff replaying still violates the claim.
    pub fn reproduces(&self) -> Result<bool> {
        Ok(matches!(self.replay()?, Outcome::Violated(_)))
    }
}

fn check_shape(id: TheoremId, inst: &Instance) -> Result<()> {
    let bad = |what: &str| Err(Error::InvalidConfig(format!("{id} counterexample lacks {what}")));
    let p = &inst.params;
    let (subjects, crisp, x) = match id.shape() {
        Shape::SubsetKind => (0, 1, false),
        Shape::SubjectKind | Shape::Subject | Shape::SubjectGrid => (1, 0, false),
        Shape::SubjectX | Shape::SubjectXPower | Shape::SubjectXLevel | Shape::SubjectXGrid => (1, 0, true),
        Shape::SubsetX => (0, 1, true),
        Shape::FamilyX | Shape::Family => (2, 0, id.shape() == Shape::FamilyX),
        Shape::CrispFamilyX => (0, 2, true),
    };
    if inst.subjects.len() < subjects {
        return bad("fuzzy subjects");
    }
    if inst.crisp.len() < crisp {
        return bad("crisp subjects");
    }
    if x && p.x.is_none() {
        return bad("x");
    }
    let needs = match id.shape() {
        Shape::SubsetKind | Shape::SubjectKind => p.kind.is_none(),
        Shape::SubjectXPower => p.n.is_none(),
        Shape::SubjectXLevel => p.t.is_none(),
        Shape::SubjectXGrid | Shape::SubjectGrid => p.alpha.is_none() || p.beta.is_none(),
        _ => false,
    };
    if needs {
        return bad("parameters");
    }
    if let (Some(a), Some(s)) = (p.alpha, inst.subjects.first()) {
        TransformParams::for_subject(&s.mu, p.beta.unwrap_or(Grade::ONE), a)?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnomalyGroup {
    pub kind: String,
    pub count: u64,
    pub example: Counterexample,
}

/// Counts under a stricter reading of the hypotheses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariantSummary {
    pub hypotheses: Vec<String>,
    pub hypothesis_hits: u64,
    pub violation_count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub theorem: TheoremId,
    pub claim: String,
    pub hypotheses: Vec<String>,
    pub dropped_hypothesis: Option<String>,
    pub semigroups: usize,
    pub semigroups_with_hits: usize,
    /// Every subject set was an exhaustive enumeration of grade assignments.
    pub subjects_exhaustive: bool,
    pub instances_checked: u64,
    pub hypothesis_hits: u64,
    pub hypothesis_never_satisfied: bool,
    pub violation_count: u64,
    pub violations: Vec<Counterexample>,
    pub anomalies: Vec<AnomalyGroup>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strict_variant: Option<VariantSummary>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub observations: BTreeMap<String, u64>,
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.violation_count == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub config: SampleConfig,
    pub corpus_size: usize,
    pub max_order: usize,
    pub total_violations: u64,
    pub reports: Vec<CheckReport>,
}

impl VerifyReport {
    pub fn report(&self, id: TheoremId) -> Option<&CheckReport> {
        self.reports.iter().find(|r| r.theorem == id)
    }
}

struct QContext {
    qset: Arc<QSet>,
    subjects: Vec<Subject>,
    exhaustive: bool,
}

struct Context {
    s: Arc<Semigroup>,
    table: CanonicalTable,
    flags: ClassFlags,
    subsets: Vec<CrispSubset>,
    per_q: Vec<QContext>,
}

impl Context {
    fn new(item: &Semigroup, config: &SampleConfig) -> Self {
        let (s, _) = canonical_semigroup(item);
        let table = canonicalize(&s);
        let s = Arc::new(s);
        let n = s.order();
        let subsets = if n <= CRISP_SUBSET_LIMIT {
            CrispSubset::all(n).collect()
        } else {
            Vec::new()
        };
        let per_q = config
            .q_sizes
            .iter()
            .map(|&q| {
                let sampler = SubjectSampler::new(s.clone(), q, config);
                QContext {
                    qset: sampler.qset().clone(),
                    exhaustive: sampler.is_exhaustive(),
                    subjects: sampler.subjects().map(Subject::new).collect(),
                }
            })
            .collect();
        Self {
            flags: classify(&s),
            s,
            table,
            subsets,
            per_q,
        }
    }
}

fn active_hypotheses(id: TheoremId, dropped: Option<&str>) -> Vec<&'static str> {
    id.hypotheses()
        .iter()
        .copied()
        .filter(|h| Some(*h) != dropped)
        .collect()
}

/// Distinct subjects, qualifying ones first, each group capped.
fn family_pool(
    subjects: &[Subject],
    qualifies: impl Fn(&Subject) -> bool,
    with_others: bool,
    cap: usize,
) -> Vec<&Subject> {
    let mut distinct: Vec<&Subject> = Vec::new();
    for s in subjects {
        if !distinct.iter().any(|d| d.mu.grades() == s.mu.grades()) {
            distinct.push(s);
        }
    }
    let (good, others): (Vec<&Subject>, Vec<&Subject>) = distinct.into_iter().partition(|s| qualifies(s));
    let mut pool: Vec<&Subject> = good.into_iter().take(cap).collect();
    if with_others {
        pool.extend(others.into_iter().take(cap));
    }
    pool
}

fn levels(mu: &QFuzzySubset, pool: &[Grade]) -> Vec<Grade> {
    let mut ts: Vec<Grade> = mu.image().into_iter().chain(pool.iter().copied()).collect();
    ts.sort();
    ts.dedup();
    ts
}

fn for_each_instance<'a>(
    id: TheoremId,
    ctx: &'a Context,
    qc: &'a QContext,
    config: &SampleConfig,
    dropped: Option<&str>,
    f: &mut dyn FnMut(Instance<'a>),
) {
    let xs = ctx.s.elements();
    let base = |subjects: Vec<&'a Subject>, crisp: Vec<CrispSubset>, params: Params| Instance {
        subjects,
        crisp,
        qset: qc.qset.clone(),
        params,
    };
    let px = |x: usize| Params {
        x: Some(x),
        ..Params::default()
    };
    match id.shape() {
        Shape::SubsetKind => {
            for a in &ctx.subsets {
                for kind in CrispKind::ALL {
                    let params = Params {
                        kind: Some(kind),
                        ..Params::default()
                    };
                    f(base(vec![], vec![a.clone()], params));
                }
            }
        }
        Shape::SubjectKind => {
            for m in &qc.subjects {
                for kind in CrispKind::ALL {
                    let params = Params {
                        kind: Some(kind),
                        ..Params::default()
                    };
                    f(base(vec![m], vec![], params));
                }
            }
        }
        Shape::Subject => {
            for m in &qc.subjects {
                f(base(vec![m], vec![], Params::default()));
            }
        }
        Shape::SubjectX => {
            for m in &qc.subjects {
                for x in xs.clone() {
                    f(base(vec![m], vec![], px(x)));
                }
            }
        }
        Shape::SubjectXPower => {
            for m in &qc.subjects {
                for x in xs.clone() {
                    for n in 1..=ctx.s.order() {
                        f(base(vec![m], vec![], Params { n: Some(n), ..px(x) }));
                    }
                }
            }
        }
        Shape::SubjectXLevel => {
            for m in &qc.subjects {
                let ts = levels(&m.mu, &config.grade_pool);
                for x in xs.clone() {
                    for &t in &ts {
                        f(base(vec![m], vec![], Params { t: Some(t), ..px(x) }));
                    }
                }
            }
        }
        Shape::SubjectXGrid | Shape::SubjectGrid => {
            let with_x = id.shape() == Shape::SubjectXGrid;
            for m in &qc.subjects {
                for tp in TransformParams::grid(&m.mu) {
                    let params = Params {
                        alpha: Some(tp.alpha),
                        beta: Some(tp.beta),
                        ..Params::default()
                    };
                    if with_x {
                        for x in xs.clone() {
                            f(base(
                                vec![m],
                                vec![],
                                Params {
                                    x: Some(x),
                                    ..params.clone()
                                },
                            ));
                        }
                    } else {
                        f(base(vec![m], vec![], params));
                    }
                }
            }
        }
        Shape::SubsetX => {
            for a in &ctx.subsets {
                for x in xs.clone() {
                    f(base(vec![], vec![a.clone()], px(x)));
                }
            }
        }
        Shape::FamilyX | Shape::Family => {
            let with_others = dropped == Some("family_completely_semiprime");
            let pool = family_pool(
                &qc.subjects,
                |m| m.is(CrispKind::CompletelySemiprime),
                with_others,
                config.family_cap,
            );
            for size in 2..=3 {
                for fam in pool.iter().copied().combinations(size) {
                    if id.shape() == Shape::FamilyX {
                        for x in xs.clone() {
                            f(base(fam.clone(), vec![], px(x)));
                        }
                    } else {
                        f(base(fam, vec![], Params::default()));
                    }
                }
            }
        }
        Shape::CrispFamilyX => {
            let with_others = dropped == Some("family_completely_semiprime");
            let (good, others): (Vec<&CrispSubset>, Vec<&CrispSubset>) = ctx
                .subsets
                .iter()
                .filter(|a| !a.is_empty())
                .partition(|a| a.satisfies(&ctx.s, CrispKind::CompletelySemiprime));
            let mut pool: Vec<&CrispSubset> = good.into_iter().take(config.family_cap).collect();
            if with_others {
                pool.extend(others.into_iter().take(config.family_cap));
            }
            for size in 2..=3 {
                for fam in pool.iter().copied().combinations(size) {
                    let crisp: Vec<CrispSubset> = fam.into_iter().cloned().collect();
                    for x in xs.clone() {
                        f(base(vec![], crisp.clone(), px(x)));
                    }
                }
            }
        }
    }
}

fn witness(id: TheoremId, ctx: &Context, inst: &Instance, dropped: Option<&str>, failed: String) -> Counterexample {
    Counterexample {
        theorem: id,
        semigroup: ctx.table.clone(),
        q_size: inst.qset.len(),
        fuzzy_subjects: inst.subjects.iter().map(|m| m.mu.rows()).collect(),
        crisp_subjects: inst.crisp.iter().map(|a| a.iter().collect()).collect(),
        parameters: inst.params.clone(),
        dropped_hypothesis: dropped.map(str::to_string),
        failed_condition: failed,
    }
}

#[derive(Default)]
struct Partial {
    instances: u64,
    hits: u64,
    violation_count: u64,
    violations: Vec<Counterexample>,
    anomalies: BTreeMap<&'static str, (u64, Counterexample)>,
    strict_hits: u64,
    strict_violations: u64,
    observations: BTreeMap<String, u64>,
    exhaustive: bool,
}

fn check_one(id: TheoremId, ctx: &Context, config: &SampleConfig, dropped: Option<&str>) -> Partial {
    let hyps = active_hypotheses(id, dropped);
    let strict = id.strict_extra();
    let mut part = Partial {
        exhaustive: ctx.per_q.iter().all(|q| q.exhaustive),
        ..Partial::default()
    };
    for qc in &ctx.per_q {
        for_each_instance(id, ctx, qc, config, dropped, &mut |inst| {
            part.instances += 1;
            let outcome = evaluate(id, &ctx.s, &ctx.flags, &inst, &hyps);
            if outcome == Outcome::Skipped {
                return;
            }
            part.hits += 1;
            let strict_hit = strict.is_some_and(|extra| extra.iter().all(|&c| ctx.flags.has(c)));
            if strict_hit {
                part.strict_hits += 1;
            }
            if id == TheoremId::T4_22 && inst.subjects[0].constant {
                *part.observations.entry("subject_constant".into()).or_default() += 1;
            }
            match outcome {
                Outcome::Violated(msg) => {
                    part.violation_count += 1;
                    if strict_hit {
                        part.strict_violations += 1;
                    }
                    if part.violations.len() < config.max_witnesses {
                        part.violations.push(witness(id, ctx, &inst, dropped, msg));
                    }
                }
                Outcome::Anomaly { kind, detail } => {
                    part.anomalies
                        .entry(kind)
                        .or_insert_with(|| (0, witness(id, ctx, &inst, dropped, detail)))
                        .0 += 1;
                }
                Outcome::Holds | Outcome::Skipped => {}
            }
        });
    }
    part
}

fn run(
    ids: &[TheoremId],
    corpus: &Corpus,
    config: &SampleConfig,
    dropped: Option<&'static str>,
) -> Result<Vec<CheckReport>> {
    config.validate()?;
    let partials: Vec<Vec<Partial>> = corpus
        .items
        .par_iter()
        .map(|item| {
            let ctx = Context::new(item, config);
            ids.iter().map(|&id| check_one(id, &ctx, config, dropped)).collect()
        })
        .collect();

    Ok(ids
        .iter()
        .enumerate()
        .map(|(k, &id)| {
            let mut report = CheckReport {
                theorem: id,
                claim: id.claim().into(),
                hypotheses: id.hypotheses().iter().map(|h| h.to_string()).collect(),
                dropped_hypothesis: dropped.map(str::to_string),
                semigroups: corpus.len(),
                semigroups_with_hits: 0,
                subjects_exhaustive: true,
                instances_checked: 0,
                hypothesis_hits: 0,
                hypothesis_never_satisfied: false,
                violation_count: 0,
                violations: Vec::new(),
                anomalies: Vec::new(),
                strict_variant: None,
                observations: BTreeMap::new(),
                notes: id.notes(),
            };
            let mut anomalies: BTreeMap<&'static str, (u64, Counterexample)> = BTreeMap::new();
            let (mut strict_hits, mut strict_violations) = (0, 0);
            for per_item in &partials {
                let p = &per_item[k];
                report.instances_checked += p.instances;
                report.hypothesis_hits += p.hits;
                report.semigroups_with_hits += usize::from(p.hits > 0);
                report.subjects_exhaustive &= p.exhaustive;
                report.violation_count += p.violation_count;
                let room = config.max_witnesses.saturating_sub(report.violations.len());
                report.violations.extend(p.violations.iter().take(room).cloned());
                for (kind, (count, example)) in &p.anomalies {
                    anomalies.entry(kind).or_insert_with(|| (0, example.clone())).0 += count;
                }
                strict_hits += p.strict_hits;
                strict_violations += p.strict_violations;
                for (key, v) in &p.observations {
                    *report.observations.entry(key.clone()).or_default() += v;
                }
            }
            report.hypothesis_never_satisfied = report.hypothesis_hits == 0;
            report.anomalies = anomalies
                .into_iter()
                .map(|(kind, (count, example))| AnomalyGroup {
                    kind: kind.into(),
                    count,
                    example,
                })
                .collect();
            if let Some(extra) = id.strict_extra() {
                let mut hypotheses: Vec<String> =
                    active_hypotheses(id, dropped).iter().map(|h| h.to_string()).collect();
                hypotheses.extend(extra.iter().map(|c| c.name().to_string()));
                report.strict_variant = Some(VariantSummary {
                    hypotheses,
                    hypothesis_hits: strict_hits,
                    violation_count: strict_violations,
                });
            }
            report
        })
        .collect())
}

/// Checks one claim with all hypotheses in force.
pub fn check_theorem(id: TheoremId, corpus: &Corpus, config: &SampleConfig) -> Result<CheckReport> {
    Ok(run(&[id], corpus, config, None)?.remove(0))
}

/// Checks every claim.
pub fn verify_all(corpus: &Corpus, config: &SampleConfig) -> Result<VerifyReport> {
    let reports = run(&TheoremId::ALL, corpus, config, None)?;
    Ok(VerifyReport {
        config: config.clone(),
        corpus_size: corpus.len(),
        max_order: corpus.items.iter().map(Semigroup::order).max().unwrap_or(0),
        total_violations: reports.iter().map(|r| r.violation_count).sum(),
        reports,
    })
}

/// Checks one claim with the hypothesis named `drop` removed (`none` keeps
/// them all) and collects counterexamples.
pub fn search_counterexample(id: TheoremId, drop: &str, corpus: &Corpus, config: &SampleConfig) -> Result<CheckReport> {
    let dropped = id.parse_drop(drop)?;
    Ok(run(&[id], corpus, config, dropped)?.remove(0))
}
