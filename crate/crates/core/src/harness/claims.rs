//! The executable claims: their hypotheses, instance shapes and conclusions.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qfuzzy::{intersect, Grade, QFuzzySubset, QSet};
use crate::semigroup::{ClassFlags, CrispKind, CrispSubset, Semigroup, SemigroupClass};
use crate::transforms::{self, TransformParams};

/// One numbered claim about Q-fuzzy ideals and their extensions.
#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TheoremId {
    T3_1,
    T3_2,
    P4_2,
    R4_1,
    P4_4i,
    P4_4ii,
    P4_4iii,
    P4_6,
    P4_7,
    R4_2,
    P4_8,
    P4_9,
    C4_10,
    P4_11,
    C4_12,
    R4_3,
    C4_13,
    T4_14,
    T4_15,
    T4_16,
    T4_17,
    T4_18,
    T4_19,
    T4_20,
    T4_21,
    T4_22,
    R4_4,
}

use TheoremId::*;

impl TheoremId {
    pub const ALL: [TheoremId; 27] = [
        T3_1, T3_2, P4_2, R4_1, P4_4i, P4_4ii, P4_4iii, P4_6, P4_7, R4_2, P4_8, P4_9, C4_10, P4_11, C4_12, R4_3, C4_13,
        T4_14, T4_15, T4_16, T4_17, T4_18, T4_19, T4_20, T4_21, T4_22, R4_4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            T3_1 => "T3_1",
            T3_2 => "T3_2",
            P4_2 => "P4_2",
            R4_1 => "R4_1",
            P4_4i => "P4_4i",
            P4_4ii => "P4_4ii",
            P4_4iii => "P4_4iii",
            P4_6 => "P4_6",
            P4_7 => "P4_7",
            R4_2 => "R4_2",
            P4_8 => "P4_8",
            P4_9 => "P4_9",
            C4_10 => "C4_10",
            P4_11 => "P4_11",
            C4_12 => "C4_12",
            R4_3 => "R4_3",
            C4_13 => "C4_13",
            T4_14 => "T4_14",
            T4_15 => "T4_15",
            T4_16 => "T4_16",
            T4_17 => "T4_17",
            T4_18 => "T4_18",
            T4_19 => "T4_19",
            T4_20 => "T4_20",
            T4_21 => "T4_21",
            T4_22 => "T4_22",
            R4_4 => "R4_4",
        }
    }

    /// What the claim asserts, in the harness's own terms.
    pub fn claim(self) -> &'static str {
        match self {
            T3_1 => "a non-empty A is a crisp K iff chi(A x Q) is a Q-fuzzy K, for every predicate K",
            T3_2 => "a non-empty mu is a Q-fuzzy K iff every level set mu_t, t in Im(mu), is a crisp K",
            P4_2 => "on a commutative semigroup, <x,mu> is a Q-fuzzy ideal whenever mu is",
            R4_1 => "on any semigroup, <x,mu> is a Q-fuzzy right ideal whenever mu is",
            P4_4i => "a Q-fuzzy ideal mu is contained in <x,mu>",
            P4_4ii => "for a Q-fuzzy ideal mu, <x^n,mu> is contained in <x^(n+1),mu>",
            P4_4iii => "for a Q-fuzzy ideal mu with mu(x,q) > 0 for all q, Supp <x,mu> is all of S",
            P4_6 => "<x, chi(A x Q)> equals chi(<x,A> x Q)",
            P4_7 => "on a commutative semigroup, <x,mu> is completely prime whenever mu is a completely prime ideal",
            R4_2 => "for a completely prime Q-fuzzy ideal mu, <x,mu> = <x^2,mu>",
            P4_8 => "<x, mu_t> = <x,mu>_t for every t",
            P4_9 => "on a commutative semigroup, <x,mu> = mu for all x forces mu to be constant",
            C4_10 => "on a commutative semigroup, a non-constant completely prime ideal mu lies strictly inside some completely prime <x,mu>",
            P4_11 => "on a commutative semigroup, <x,mu> is completely semiprime whenever mu is a completely semiprime ideal",
            C4_12 => "on a commutative semigroup, <x, meet of completely semiprime ideals> is completely semiprime when the meet is non-empty",
            R4_3 => "a non-empty meet of completely semiprime Q-fuzzy ideals is a completely semiprime ideal",
            C4_13 => "on a commutative semigroup, <x, chi(A)> is completely semiprime for A a non-empty intersection of crisp completely semiprime ideals",
            T4_14 => "<x, beta*mu+alpha> is a completely prime ideal whenever mu is",
            T4_15 => "<x, beta*mu+alpha> is a right ideal whenever mu is",
            T4_16 => "on a commutative semigroup, <x, beta*mu+alpha> is an ideal whenever mu is",
            T4_17 => "on a commutative semigroup, <x, beta*mu+alpha> is completely semiprime whenever mu is a completely semiprime ideal",
            T4_18 => "on a commutative semigroup, <x, beta*mu+alpha> is an interior ideal whenever mu is",
            T4_19 => "on a regular commutative semigroup, <x, beta*mu+alpha> is completely semiprime whenever mu is an ideal",
            T4_20 => "on a right regular semigroup, <x, beta*mu+alpha> is a completely semiprime right ideal whenever mu is a right ideal",
            T4_21 => "on an intra-regular commutative semigroup, <x, beta*mu+alpha> is completely semiprime whenever mu is an ideal",
            T4_22 => "on an archimedean commutative semigroup, <x, beta*mu+alpha> is constant whenever mu is a completely semiprime ideal",
            R4_4 => "beta = 1 gives the translation mu+alpha and alpha = 0 gives the multiplication beta*mu",
        }
    }

    /// Names of the hypotheses, each of which can be dropped in a search.
    pub fn hypotheses(self) -> &'static [&'static str] {
        match self {
            T3_1 | P4_6 => &["nonempty_subset"],
            T3_2 | P4_8 => &["nonempty"],
            P4_2 => &["commutative", "ideal"],
            R4_1 => &["right_ideal"],
            P4_4i | P4_4ii => &["ideal"],
            P4_4iii => &["ideal", "positive_at_x"],
            P4_7 => &["commutative", "completely_prime_ideal"],
            R4_2 => &["completely_prime_ideal"],
            P4_9 => &["commutative", "fixed_by_extensions"],
            C4_10 => &["commutative", "completely_prime_ideal", "non_constant"],
            P4_11 => &["commutative", "completely_semiprime_ideal"],
            C4_12 | C4_13 => &["commutative", "family_completely_semiprime", "nonempty_intersection"],
            R4_3 => &["family_completely_semiprime", "nonempty_intersection"],
            T4_14 => &["completely_prime_ideal"],
            T4_15 => &["right_ideal"],
            T4_16 => &["commutative", "ideal"],
            T4_17 => &["commutative", "completely_semiprime_ideal"],
            T4_18 => &["commutative", "interior_ideal"],
            T4_19 => &["regular", "commutative", "ideal"],
            T4_20 => &["right_regular", "right_ideal"],
            T4_21 => &["intra_regular", "commutative", "ideal"],
            T4_22 => &["archimedean", "commutative", "completely_semiprime_ideal"],
            R4_4 => &[],
        }
    }

    /// Extra class hypotheses of the stricter reading, for the claims whose
    /// class hypotheses are weaker than those of their companion results.
    pub fn strict_extra(self) -> Option<&'static [SemigroupClass]> {
        match self {
            T4_14 | T4_15 => Some(&[SemigroupClass::Commutative]),
            _ => None,
        }
    }

    pub fn notes(self) -> Vec<String> {
        let mut notes = Vec::new();
        match self {
            T3_2 => notes.push(
                "empty level sets are logged as anomalies; only instances that fail under both the vacuous and the strict reading of an empty level set count as violations".into(),
            ),
            P4_4iii => notes.push("hypothesis read as mu(x,q) > 0 for every q; Supp <x,mu> compared with the whole carrier".into()),
            P4_9 | C4_10 => notes.push("constant means constant in the semigroup argument, separately for each q".into()),
            T4_22 => {
                notes.push("constant means constant in the semigroup argument, separately for each q".into());
                notes.push("observation `subject_constant` counts hypothesis hits where mu itself is constant".into());
            }
            C4_13 => notes.push("stated for commutative Gamma-semigroups; checked on ordinary commutative semigroups".into()),
            _ => {}
        }
        if matches!(self, C4_12 | R4_3 | C4_13) {
            notes.push(
                "families are all 2- and 3-member sub-families of the qualifying subjects found per semigroup".into(),
            );
        }
        if matches!(
            self,
            R4_1 | T4_14 | T4_15 | T4_16 | T4_17 | T4_18 | T4_19 | T4_20 | T4_21
        ) {
            notes.push("an extension equal to the empty fuzzy subset satisfies the inequalities but not non-emptiness; such instances are logged as anomalies".into());
        }
        if self.strict_extra().is_some() {
            notes.push("also reported under the stricter reading that adds commutativity".into());
        }
        notes
    }

    pub(crate) fn shape(self) -> Shape {
        match self {
            T3_1 => Shape::SubsetKind,
            T3_2 => Shape::SubjectKind,
            P4_2 | R4_1 | P4_4i | P4_4iii | P4_7 | R4_2 | P4_11 => Shape::SubjectX,
            P4_4ii => Shape::SubjectXPower,
            P4_8 => Shape::SubjectXLevel,
            P4_9 | C4_10 => Shape::Subject,
            P4_6 => Shape::SubsetX,
            C4_12 => Shape::FamilyX,
            R4_3 => Shape::Family,
            C4_13 => Shape::CrispFamilyX,
            T4_14 | T4_15 | T4_16 | T4_17 | T4_18 | T4_19 | T4_20 | T4_21 | T4_22 => Shape::SubjectXGrid,
            R4_4 => Shape::SubjectGrid,
        }
    }

    /// `label` must name a hypothesis; `none` (or an empty label) drops nothing.
    pub fn parse_drop(self, label: &str) -> Result<Option<&'static str>> {
        let label = label.trim();
        if label.is_empty() || label.eq_ignore_ascii_case("none") {
            return Ok(None);
        }
        self.hypotheses()
            .iter()
            .find(|h| h.eq_ignore_ascii_case(label))
            .map(|h| Some(*h))
            .ok_or_else(|| Error::UnknownHypothesisLabel {
                theorem: self.name().into(),
                label: label.into(),
            })
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().replace(['.', '-'], "_");
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(&norm))
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Shape {
    SubsetKind,
    SubjectKind,
    SubjectX,
    SubjectXPower,
    SubjectXLevel,
    Subject,
    SubsetX,
    FamilyX,
    Family,
    CrispFamilyX,
    SubjectXGrid,
    SubjectGrid,
}

/// Instance parameters; unused ones are omitted from JSON.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<Grade>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Grade>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<Grade>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<CrispKind>,
}

/// A fuzzy subject with its predicate values cached.
#[derive(Debug, Clone)]
pub(crate) struct Subject {
    pub mu: QFuzzySubset,
    kinds: [bool; 7],
    pub empty: bool,
    pub constant: bool,
}

impl Subject {
    pub fn new(mu: QFuzzySubset) -> Self {
        let mut kinds = [false; 7];
        for (slot, kind) in kinds.iter_mut().zip(CrispKind::ALL) {
            *slot = mu.satisfies(kind);
        }
        Self {
            empty: mu.is_empty(),
            constant: mu.is_constant(),
            mu,
            kinds,
        }
    }

    pub fn is(&self, kind: CrispKind) -> bool {
        self.kinds[CrispKind::ALL.iter().position(|&k| k == kind).expect("listed")]
    }
}

pub(crate) struct Instance<'a> {
    pub subjects: Vec<&'a Subject>,
    pub crisp: Vec<CrispSubset>,
    pub qset: Arc<QSet>,
    pub params: Params,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// Some hypothesis fails; the instance does not count as a hit.
    Skipped,
    Holds,
    Anomaly {
        kind: &'static str,
        detail: String,
    },
    Violated(String),
}

fn hypothesis_holds(label: &str, s: &Semigroup, flags: &ClassFlags, inst: &Instance) -> bool {
    if let Ok(class) = label.parse::<SemigroupClass>() {
        return flags.has(class);
    }
    let subject = || inst.subjects[0];
    match label {
        "nonempty_subset" => !inst.crisp[0].is_empty(),
        "nonempty" => !subject().empty,
        "ideal" => subject().is(CrispKind::Ideal),
        "right_ideal" => subject().is(CrispKind::RightIdeal),
        "interior_ideal" => subject().is(CrispKind::InteriorIdeal),
        "completely_prime_ideal" => subject().is(CrispKind::CompletelyPrime),
        "completely_semiprime_ideal" => subject().is(CrispKind::CompletelySemiprime),
        "non_constant" => !subject().constant,
        "positive_at_x" => {
            let x = inst.params.x.expect("x");
            (0..inst.qset.len()).all(|q| !subject().mu.grade(x, q).is_zero())
        }
        "fixed_by_extensions" => {
            let mu = &subject().mu;
            s.elements()
                .all(|x| transforms::extension(mu, x).expect("in range") == *mu)
        }
        "family_completely_semiprime" => {
            if inst.subjects.is_empty() {
                inst.crisp
                    .iter()
                    .all(|a| a.satisfies(s, CrispKind::CompletelySemiprime))
            } else {
                inst.subjects.iter().all(|m| m.is(CrispKind::CompletelySemiprime))
            }
        }
        "nonempty_intersection" => {
            if inst.subjects.is_empty() {
                !crisp_meet(inst).is_empty()
            } else {
                !meet(inst).is_empty()
            }
        }
        other => unreachable!("unknown hypothesis {other}"),
    }
}

fn meet(inst: &Instance) -> QFuzzySubset {
    let family: Vec<QFuzzySubset> = inst.subjects.iter().map(|m| m.mu.clone()).collect();
    intersect(&family).expect("one domain")
}

fn crisp_meet(inst: &Instance) -> CrispSubset {
    let (first, rest) = inst.crisp.split_first().expect("non-empty family");
    rest.iter().fold(first.clone(), |acc, a| acc.intersection(a))
}

/// Evaluates the claim on one instance with the hypotheses `hyps` enforced.
pub(crate) fn evaluate(
    id: TheoremId,
    s: &Arc<Semigroup>,
    flags: &ClassFlags,
    inst: &Instance,
    hyps: &[&str],
) -> Outcome {
    if !hyps.iter().all(|h| hypothesis_holds(h, s, flags, inst)) {
        return Outcome::Skipped;
    }
    conclusion(id, s, inst)
}

/// `mu` must be a (non-empty) Q-fuzzy `kind`.
fn fuzzy_is(mu: &QFuzzySubset, kind: CrispKind, what: &str) -> Outcome {
    if let Some(f) = mu.law_failure(kind) {
        Outcome::Violated(format!("{what} is not a Q-fuzzy {kind}: {f}"))
    } else if mu.is_empty() {
        Outcome::Anomaly {
            kind: "empty_extension",
            detail: format!("{what} satisfies the {kind} inequalities but is the empty fuzzy subset"),
        }
    } else {
        Outcome::Holds
    }
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Holds
    } else {
        Outcome::Violated(msg())
    }
}

fn fmt_row(mu: &QFuzzySubset) -> String {
    let s = mu.owner();
    let cells: Vec<String> = s
        .elements()
        .map(|x| {
            let gs: Vec<String> = (0..mu.q_len()).map(|q| mu.grade(x, q).to_string()).collect();
            format!("{}:{}", s.label(x), gs.join("|"))
        })
        .collect();
    format!("[{}]", cells.join(" "))
}

fn fmt_set(s: &Semigroup, a: &CrispSubset) -> String {
    let labels: Vec<&str> = a.iter().map(|i| s.label(i)).collect();
    format!("{{{}}}", labels.join(","))
}

fn ext(mu: &QFuzzySubset, x: usize) -> QFuzzySubset {
    transforms::extension(mu, x).expect("element in range")
}

fn conclusion(id: TheoremId, s: &Arc<Semigroup>, inst: &Instance) -> Outcome {
    let p = &inst.params;
    let mu = || &inst.subjects[0].mu;
    let x = || p.x.expect("instance has x");
    let xl = || s.label(x()).to_string();
    let transformed = || {
        let params = TransformParams {
            beta: p.beta.expect("beta"),
            alpha: p.alpha.expect("alpha"),
        };
        transforms::apply(mu(), params).expect("grid keeps grades in range")
    };
    let what_t = || format!("<{}, {}*mu+{}>", xl(), p.beta.expect("beta"), p.alpha.expect("alpha"));

    match id {
        T3_1 => {
            let a = &inst.crisp[0];
            let kind = p.kind.expect("kind");
            let chi = QFuzzySubset::characteristic(s.clone(), a, inst.qset.clone()).expect("owner");
            let (crisp, fuzzy) = (a.satisfies(s, kind), chi.satisfies(kind));
            check(crisp == fuzzy, || {
                format!(
                    "A = {}: crisp {kind} is {crisp} but chi(A x Q) Q-fuzzy {kind} is {fuzzy}",
                    fmt_set(s, a)
                )
            })
        }
        T3_2 => {
            let kind = p.kind.expect("kind");
            let fuzzy = mu().satisfies(kind);
            let mut vacuous = true;
            let mut empty_at = None;
            for t in mu().image() {
                let level = mu().level_set(t);
                if level.is_empty() {
                    empty_at.get_or_insert(t);
                } else if !level.satisfies(s, kind) {
                    vacuous = false;
                }
            }
            let strict = vacuous && empty_at.is_none();
            if fuzzy == vacuous && empty_at.is_none() {
                Outcome::Holds
            } else if fuzzy == vacuous || fuzzy == strict {
                Outcome::Anomaly {
                    kind: "empty_level_set",
                    detail: format!(
                        "level set at t = {} is empty; Q-fuzzy {kind} is {fuzzy}, level sets (empty counted as {}) agree",
                        empty_at.expect("empty level"),
                        if fuzzy == vacuous { "satisfying" } else { "failing" }
                    ),
                }
            } else {
                Outcome::Violated(format!(
                    "mu = {} is{} a Q-fuzzy {kind} but every non-empty level set {} a crisp {kind}",
                    fmt_row(mu()),
                    if fuzzy { "" } else { " not" },
                    if vacuous { "is" } else { "is not" }
                ))
            }
        }
        P4_2 => fuzzy_is(&ext(mu(), x()), CrispKind::Ideal, &format!("<{},mu>", xl())),
        R4_1 => fuzzy_is(&ext(mu(), x()), CrispKind::RightIdeal, &format!("<{},mu>", xl())),
        P4_4i => {
            let e = ext(mu(), x());
            check(mu().is_subset_of(&e).expect("same domain"), || {
                format!(
                    "mu = {} is not contained in <{},mu> = {}",
                    fmt_row(mu()),
                    xl(),
                    fmt_row(&e)
                )
            })
        }
        P4_4ii => {
            let n = p.n.expect("n");
            let lo = transforms::extension_by_power(mu(), x(), n).expect("in range");
            let hi = transforms::extension_by_power(mu(), x(), n + 1).expect("in range");
            check(lo.is_subset_of(&hi).expect("same domain"), || {
                format!(
                    "<{x}^{n},mu> = {} is not contained in <{x}^{},mu> = {}",
                    fmt_row(&lo),
                    n + 1,
                    fmt_row(&hi),
                    x = xl()
                )
            })
        }
        P4_4iii => {
            let e = ext(mu(), x());
            check(e.support().is_full(), || {
                format!("Supp <{},mu> = {} is not all of S", xl(), fmt_set(s, &e.support()))
            })
        }
        P4_6 => {
            let a = &inst.crisp[0];
            let chi = QFuzzySubset::characteristic(s.clone(), a, inst.qset.clone()).expect("owner");
            let lhs = ext(&chi, x());
            let crisp = transforms::crisp_extension(s, a, x()).expect("in range");
            let rhs = QFuzzySubset::characteristic(s.clone(), &crisp, inst.qset.clone()).expect("owner");
            check(lhs == rhs, || {
                format!(
                    "A = {}: <{},chi(A)> = {} but chi(<x,A>) = {}",
                    fmt_set(s, a),
                    xl(),
                    fmt_row(&lhs),
                    fmt_row(&rhs)
                )
            })
        }
        P4_7 => fuzzy_is(&ext(mu(), x()), CrispKind::CompletelyPrime, &format!("<{},mu>", xl())),
        R4_2 => {
            let e1 = ext(mu(), x());
            let e2 = ext(mu(), s.mul(x(), x()));
            check(e1 == e2, || {
                format!(
                    "<{x},mu> = {} but <{x}^2,mu> = {}",
                    fmt_row(&e1),
                    fmt_row(&e2),
                    x = xl()
                )
            })
        }
        P4_8 => {
            let t = p.t.expect("t");
            let lhs = transforms::crisp_extension(s, &mu().level_set(t), x()).expect("in range");
            let rhs = ext(mu(), x()).level_set(t);
            check(lhs == rhs, || {
                format!(
                    "t = {t}: <{x},mu_t> = {} but <{x},mu>_t = {}",
                    fmt_set(s, &lhs),
                    fmt_set(s, &rhs),
                    x = xl()
                )
            })
        }
        P4_9 => check(mu().is_constant(), || {
            format!("mu = {} is fixed by every extension but not constant", fmt_row(mu()))
        }),
        C4_10 => {
            let witness = s.elements().find(|&y| {
                let e = ext(mu(), y);
                mu().is_strict_subset_of(&e).expect("same domain") && e.satisfies(CrispKind::CompletelyPrime)
            });
            check(witness.is_some(), || {
                format!(
                    "no x has mu strictly inside a completely prime <x,mu>; mu = {}",
                    fmt_row(mu())
                )
            })
        }
        P4_11 => fuzzy_is(
            &ext(mu(), x()),
            CrispKind::CompletelySemiprime,
            &format!("<{},mu>", xl()),
        ),
        C4_12 => fuzzy_is(
            &ext(&meet(inst), x()),
            CrispKind::CompletelySemiprime,
            &format!("<{},lambda>", xl()),
        ),
        R4_3 => fuzzy_is(&meet(inst), CrispKind::CompletelySemiprime, "lambda"),
        C4_13 => {
            let a = crisp_meet(inst);
            let chi = QFuzzySubset::characteristic(s.clone(), &a, inst.qset.clone()).expect("owner");
            fuzzy_is(
                &ext(&chi, x()),
                CrispKind::CompletelySemiprime,
                &format!("<{},chi({})>", xl(), fmt_set(s, &a)),
            )
        }
        T4_14 => fuzzy_is(&ext(&transformed(), x()), CrispKind::CompletelyPrime, &what_t()),
        T4_15 => fuzzy_is(&ext(&transformed(), x()), CrispKind::RightIdeal, &what_t()),
        T4_16 => fuzzy_is(&ext(&transformed(), x()), CrispKind::Ideal, &what_t()),
        T4_17 | T4_19 | T4_21 => fuzzy_is(&ext(&transformed(), x()), CrispKind::CompletelySemiprime, &what_t()),
        T4_18 => fuzzy_is(&ext(&transformed(), x()), CrispKind::InteriorIdeal, &what_t()),
        T4_20 => {
            let e = ext(&transformed(), x());
            match fuzzy_is(&e, CrispKind::RightIdeal, &what_t()) {
                Outcome::Violated(m) => Outcome::Violated(m),
                other => {
                    let semiprime = s.elements().find(|&y| {
                        let yy = s.mul(y, y);
                        (0..e.q_len()).any(|q| e.grade(y, q) < e.grade(yy, q))
                    });
                    match semiprime {
                        Some(y) => Outcome::Violated(format!(
                            "{} = {} fails the semiprime inequality at {}",
                            what_t(),
                            fmt_row(&e),
                            s.label(y)
                        )),
                        None => other,
                    }
                }
            }
        }
        T4_22 => {
            let e = ext(&transformed(), x());
            check(e.is_constant(), || {
                format!("{} = {} is not constant", what_t(), fmt_row(&e))
            })
        }
        R4_4 => {
            let (beta, alpha) = (p.beta.expect("beta"), p.alpha.expect("alpha"));
            let shifted = transforms::magnified_translation(mu(), Grade::ONE, alpha).expect("valid alpha");
            let translated = transforms::translation(mu(), alpha).expect("valid alpha");
            let scaled = transforms::magnified_translation(mu(), beta, Grade::ZERO).expect("valid");
            let multiplied = transforms::multiplication(mu(), beta).expect("valid");
            check(shifted == translated && scaled == multiplied, || {
                format!("beta = {beta}, alpha = {alpha}: magnified translation does not reduce")
            })
        }
    }
}
