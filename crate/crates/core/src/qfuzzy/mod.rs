//! Q-fuzzy subsets `S x Q -> [0, 1]` with exact grades, their level
//! subsets, supports, and the Q-fuzzy ideal predicates.

mod grade;

pub use grade::Grade;

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::semigroup::{CrispKind, CrispSubset, Semigroup};

/// The fuzzy predicates mirror the crisp ones one-for-one.
pub type QFuzzyKind = CrispKind;

/// The index set `Q`: non-empty, distinct labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QSet {
    labels: Vec<String>,
}

impl QSet {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidQSet);
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::InvalidQSet);
            }
        }
        Ok(Self { labels })
    }

    /// `{q1, ..., qk}`.
    pub fn sized(k: usize) -> Result<Self> {
        Self::new((1..=k).map(|i| format!("q{i}")).collect())
    }

    pub fn singleton(label: &str) -> Self {
        Self {
            labels: vec![label.to_string()],
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownQLabel(label.to_string()))
    }
}

/// A grade matrix over `S x Q`, bound to one semigroup and one `Q`.
#[derive(Debug, Clone)]
pub struct QFuzzySubset {
    owner: Arc<Semigroup>,
    qset: Arc<QSet>,
    // grades[x * |Q| + q]
    grades: Vec<Grade>,
}

impl PartialEq for QFuzzySubset {
    fn eq(&self, other: &Self) -> bool {
        self.same_domain(other) && self.grades == other.grades
    }
}

impl Eq for QFuzzySubset {}

impl QFuzzySubset {
    /// `rows[x][q]` is the grade of `(x, q)`.
    pub fn new(owner: Arc<Semigroup>, qset: Arc<QSet>, rows: Vec<Vec<Grade>>) -> Result<Self> {
        let (n, m) = (owner.order(), qset.len());
        let bad_row = rows.iter().find(|r| r.len() != m);
        if rows.len() != n || bad_row.is_some() {
            return Err(Error::DimensionMismatch {
                rows: n,
                cols: m,
                got_rows: rows.len(),
                got_cols: bad_row.or(rows.first()).map_or(0, Vec::len),
            });
        }
        Ok(Self {
            owner,
            qset,
            grades: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_flat(owner: Arc<Semigroup>, qset: Arc<QSet>, grades: Vec<Grade>) -> Result<Self> {
        let (n, m) = (owner.order(), qset.len());
        if grades.len() != n * m {
            return Err(Error::DimensionMismatch {
                rows: n,
                cols: m,
                got_rows: grades.len() / m,
                got_cols: m,
            });
        }
        Ok(Self { owner, qset, grades })
    }

    pub fn from_fn(owner: Arc<Semigroup>, qset: Arc<QSet>, f: impl Fn(usize, usize) -> Grade) -> Self {
        let (n, m) = (owner.order(), qset.len());
        let grades = (0..n)
            .flat_map(|x| (0..m).map(move |q| (x, q)))
            .map(|(x, q)| f(x, q))
            .collect();
        Self { owner, qset, grades }
    }

    pub fn constant(owner: Arc<Semigroup>, qset: Arc<QSet>, g: Grade) -> Self {
        Self::from_fn(owner, qset, |_, _| g)
    }

    /// The characteristic function of `a x Q`.
    pub fn characteristic(owner: Arc<Semigroup>, a: &CrispSubset, qset: Arc<QSet>) -> Result<Self> {
        a.check_owner(&owner)?;
        Ok(Self::from_fn(owner, qset, |x, _| {
            if a.contains(x) {
                Grade::ONE
            } else {
                Grade::ZERO
            }
        }))
    }

    pub fn owner(&self) -> &Arc<Semigroup> {
        &self.owner
    }

    pub fn qset(&self) -> &Arc<QSet> {
        &self.qset
    }

    pub fn order(&self) -> usize {
        self.owner.order()
    }

    pub fn q_len(&self) -> usize {
        self.qset.len()
    }

    #[inline]
    pub fn grade(&self, x: usize, q: usize) -> Grade {
        self.grades[x * self.qset.len() + q]
    }

    pub fn grades(&self) -> &[Grade] {
        &self.grades
    }

    pub fn rows(&self) -> Vec<Vec<Grade>> {
        self.grades.chunks(self.q_len()).map(<[Grade]>::to_vec).collect()
    }

    pub fn same_domain(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.owner, &other.owner) || self.owner == other.owner)
            && (Arc::ptr_eq(&self.qset, &other.qset) || self.qset == other.qset)
    }

    fn check_domain(&self, other: &Self) -> Result<()> {
        if self.same_domain(other) {
            Ok(())
        } else {
            Err(Error::MixedOwners)
        }
    }

    /// Same grades, different (but equal-shaped) domain objects.
    pub fn rebind(&self, owner: Arc<Semigroup>, qset: Arc<QSet>) -> Result<Self> {
        Self::from_flat(owner, qset, self.grades.clone())
    }

    /// Grades follow their elements under `perm` onto `owner`, which must be
    /// the relabeled semigroup.
    pub fn relabel(&self, perm: &[usize], owner: Arc<Semigroup>) -> Self {
        let m = self.q_len();
        let mut grades = vec![Grade::ZERO; self.grades.len()];
        for (x, &px) in perm.iter().enumerate() {
            grades[px * m..(px + 1) * m].copy_from_slice(&self.grades[x * m..(x + 1) * m]);
        }
        Self {
            owner,
            qset: self.qset.clone(),
            grades,
        }
    }

    /// The all-zero map is the empty Q-fuzzy subset.
    pub fn is_empty(&self) -> bool {
        self.grades.iter().all(|g| g.is_zero())
    }

    /// Constant in the semigroup argument: `mu(x, q) = mu(y, q)` for all
    /// `x, y` and each `q` separately.
    pub fn is_constant(&self) -> bool {
        let m = self.q_len();
        self.grades.chunks(m).all(|row| row == &self.grades[..m])
    }

    pub fn sup_grade(&self) -> Grade {
        self.grades.iter().copied().max().unwrap_or(Grade::ZERO)
    }

    fn min_over_q(&self, x: usize) -> Grade {
        let m = self.q_len();
        self.grades[x * m..(x + 1) * m]
            .iter()
            .copied()
            .min()
            .unwrap_or(Grade::ZERO)
    }

    /// `{x : mu(x, q) >= t for every q}`.
    pub fn level_set(&self, t: Grade) -> CrispSubset {
        CrispSubset::from_predicate(self.order(), |x| self.min_over_q(x) >= t)
    }

    /// `{x : mu(x, q) > 0 for every q}`.
    pub fn support(&self) -> CrispSubset {
        CrispSubset::from_predicate(self.order(), |x| !self.min_over_q(x).is_zero())
    }

    /// Distinct grades attained over `S x Q`.
    pub fn image(&self) -> BTreeSet<Grade> {
        self.grades.iter().copied().collect()
    }

    /// `self(x, q) <= other(x, q)` everywhere.
    pub fn is_subset_of(&self, other: &Self) -> Result<bool> {
        self.check_domain(other)?;
        Ok(self.grades.iter().zip(&other.grades).all(|(a, b)| a <= b))
    }

    /// Inclusion with at least one strict inequality.
    pub fn is_strict_subset_of(&self, other: &Self) -> Result<bool> {
        Ok(self.is_subset_of(other)? && self.grades != other.grades)
    }

    /// Pointwise minimum of `self` and `other`.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.check_domain(other)?;
        Ok(Self {
            owner: self.owner.clone(),
            qset: self.qset.clone(),
            grades: self.grades.iter().zip(&other.grades).map(|(a, b)| *a.min(b)).collect(),
        })
    }

    /// Decides `kind` exactly.
    ///
    /// All kinds require a non-empty subset; the completely (semi)prime kinds
    /// are defined only on Q-fuzzy ideals and error with
    /// [`Error::NotAnIdeal`] otherwise.
    pub fn q_predicate(&self, kind: QFuzzyKind) -> Result<bool> {
        if self.is_empty() {
            return Err(Error::EmptyFuzzySubset);
        }
        if kind.requires_ideal() && self.law_failure(CrispKind::Ideal).is_some() {
            return Err(Error::NotAnIdeal);
        }
        Ok(self.law_failure(kind).is_none())
    }

    /// Non-empty and the defining inequalities hold; `false` where
    /// [`q_predicate`](Self::q_predicate) would error.
    pub fn satisfies(&self, kind: QFuzzyKind) -> bool {
        !self.is_empty() && self.satisfies_laws(kind)
    }

    /// The defining inequalities of `kind` (including the ideal laws for the
    /// prime kinds), ignoring non-emptiness.
    pub fn satisfies_laws(&self, kind: QFuzzyKind) -> bool {
        self.law_failure(kind).is_none()
    }

    /// The first violated inequality of `kind`, rendered with element labels.
    pub fn law_failure(&self, kind: QFuzzyKind) -> Option<String> {
        let s = &*self.owner;
        let m = self.q_len();
        let mu = |x: usize, q: usize| self.grades[x * m + q];
        let name = |x: usize| s.label(x);
        let ql = |q: usize| self.qset.labels[q].as_str();
        let pairs = || s.elements().flat_map(move |x| s.elements().map(move |y| (x, y)));

        let left = || {
            pairs().find_map(|(x, y)| {
                let xy = s.mul(x, y);
                (0..m).find(|&q| mu(xy, q) < mu(y, q)).map(|q| {
                    format!(
                        "left ideal: mu({}{},{}) = {} < mu({},{}) = {}",
                        name(x),
                        name(y),
                        ql(q),
                        mu(xy, q),
                        name(y),
                        ql(q),
                        mu(y, q)
                    )
                })
            })
        };
        let right = || {
            pairs().find_map(|(x, y)| {
                let xy = s.mul(x, y);
                (0..m).find(|&q| mu(xy, q) < mu(x, q)).map(|q| {
                    format!(
                        "right ideal: mu({}{},{}) = {} < mu({},{}) = {}",
                        name(x),
                        name(y),
                        ql(q),
                        mu(xy, q),
                        name(x),
                        ql(q),
                        mu(x, q)
                    )
                })
            })
        };
        let closed = || {
            pairs().find_map(|(x, y)| {
                let xy = s.mul(x, y);
                (0..m).find(|&q| mu(xy, q) < mu(x, q).min(mu(y, q))).map(|q| {
                    format!(
                        "subsemigroup: mu({}{},{}) = {} < min({}, {})",
                        name(x),
                        name(y),
                        ql(q),
                        mu(xy, q),
                        mu(x, q),
                        mu(y, q)
                    )
                })
            })
        };
        let ideal = || left().or_else(right);

        match kind {
            CrispKind::Subsemigroup => closed(),
            CrispKind::InteriorIdeal => closed().or_else(|| {
                s.elements().find_map(|x| {
                    s.elements().find_map(|a| {
                        let xa = s.mul(x, a);
                        s.elements().find_map(|y| {
                            let xay = s.mul(xa, y);
                            (0..m).find(|&q| mu(xay, q) < mu(a, q)).map(|q| {
                                format!(
                                    "interior ideal: mu({}{}{},{}) = {} < mu({},{}) = {}",
                                    name(x),
                                    name(a),
                                    name(y),
                                    ql(q),
                                    mu(xay, q),
                                    name(a),
                                    ql(q),
                                    mu(a, q)
                                )
                            })
                        })
                    })
                })
            }),
            CrispKind::LeftIdeal => left(),
            CrispKind::RightIdeal => right(),
            CrispKind::Ideal => ideal(),
            CrispKind::CompletelyPrime => ideal().or_else(|| {
                pairs().find_map(|(x, y)| {
                    let xy = s.mul(x, y);
                    (0..m).find(|&q| mu(xy, q) != mu(x, q).max(mu(y, q))).map(|q| {
                        format!(
                            "completely prime: mu({}{},{}) = {} != max({}, {})",
                            name(x),
                            name(y),
                            ql(q),
                            mu(xy, q),
                            mu(x, q),
                            mu(y, q)
                        )
                    })
                })
            }),
            CrispKind::CompletelySemiprime => ideal().or_else(|| {
                s.elements().find_map(|x| {
                    let xx = s.mul(x, x);
                    (0..m).find(|&q| mu(x, q) < mu(xx, q)).map(|q| {
                        format!(
                            "completely semiprime: mu({},{}) = {} < mu({}{},{}) = {}",
                            name(x),
                            ql(q),
                            mu(x, q),
                            name(x),
                            name(x),
                            ql(q),
                            mu(xx, q)
                        )
                    })
                })
            }),
        }
    }
}

/// Pointwise minimum over a non-empty family sharing one domain.
pub fn intersect(family: &[QFuzzySubset]) -> Result<QFuzzySubset> {
    let (first, rest) = family.split_first().ok_or(Error::EmptyFamily)?;
    rest.iter().try_fold(first.clone(), |acc, mu| acc.meet(mu))
}

/// `mu` is contained in `nu`.
pub fn includes(mu: &QFuzzySubset, nu: &QFuzzySubset) -> Result<bool> {
    mu.is_subset_of(nu)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> Grade {
        s.parse().unwrap()
    }

    fn left_zero3() -> Arc<Semigroup> {
        Arc::new(Semigroup::from_table(vec![vec![0, 0, 0], vec![1, 1, 1], vec![2, 2, 2]]).unwrap())
    }

    fn mu21() -> QFuzzySubset {
        QFuzzySubset::new(
            left_zero3(),
            Arc::new(QSet::singleton("p")),
            vec![vec![g("0.8")], vec![g("0.7")], vec![g("0.6")]],
        )
        .unwrap()
    }

    #[test]
    fn builds_and_rejects() {
        let s = left_zero3();
        let q = Arc::new(QSet::singleton("p"));
        assert!(QFuzzySubset::new(s.clone(), q.clone(), vec![vec![Grade::ZERO]; 3])
            .unwrap()
            .is_empty());
        assert!(matches!(
            QFuzzySubset::new(s.clone(), q.clone(), vec![vec![Grade::ZERO]; 2]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            QFuzzySubset::new(s, q, vec![vec![Grade::ZERO, Grade::ONE]; 3]),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(QSet::new(vec![]).is_err());
        assert!(QSet::new(vec!["p".into(), "p".into()]).is_err());
    }

    #[test]
    fn example_level_set_image_support() {
        let mu = mu21();
        assert_eq!(mu.level_set(g("7/10")).iter().collect::<Vec<_>>(), vec![0, 1]);
        assert!(mu.level_set(Grade::ZERO).is_full());
        assert_eq!(
            mu.image().into_iter().collect::<Vec<_>>(),
            vec![g("3/5"), g("7/10"), g("4/5")]
        );
        assert!(mu.support().is_full());
        assert_eq!(mu.sup_grade(), g("4/5"));
    }

    #[test]
    fn level_set_quantifies_over_q() {
        let s = left_zero3();
        let q = Arc::new(QSet::sized(2).unwrap());
        let mu = QFuzzySubset::from_fn(s, q, |_, q| if q == 0 { g("1/5") } else { g("1/2") });
        assert!(mu.level_set(g("1/2")).is_empty());
        assert!(mu.level_set(g("1/5")).is_full());
    }

    #[test]
    fn support_pointwise() {
        let s = left_zero3();
        let q = Arc::new(QSet::singleton("p"));
        let mu = QFuzzySubset::new(s, q, vec![vec![g("0")], vec![g("1/2")], vec![g("1/2")]]).unwrap();
        assert_eq!(mu.support().iter().collect::<Vec<_>>(), vec![1, 2]);
    }

    #[test]
    fn example_predicates() {
        let mu = mu21();
        assert_eq!(mu.q_predicate(CrispKind::RightIdeal), Ok(true));
        assert_eq!(mu.q_predicate(CrispKind::LeftIdeal), Ok(false));
        // oracle: left ideal needs mu(x) >= mu(y) for all x, y; c=0.6 < a=0.8
        let failure = mu.law_failure(CrispKind::LeftIdeal).unwrap();
        assert!(failure.starts_with("left ideal"), "{failure}");
        assert_eq!(mu.q_predicate(CrispKind::CompletelyPrime), Err(Error::NotAnIdeal));
    }

    #[test]
    fn constant_half_satisfies_everything() {
        let mu = QFuzzySubset::constant(left_zero3(), Arc::new(QSet::singleton("p")), g("1/2"));
        for kind in CrispKind::ALL {
            assert_eq!(mu.q_predicate(kind), Ok(true), "{kind}");
        }
        assert!(mu.is_constant());
    }

    #[test]
    fn empty_subset_errors() {
        let mu = QFuzzySubset::constant(left_zero3(), Arc::new(QSet::singleton("p")), Grade::ZERO);
        assert_eq!(mu.q_predicate(CrispKind::Ideal), Err(Error::EmptyFuzzySubset));
        assert!(!mu.satisfies(CrispKind::Ideal));
        assert!(mu.satisfies_laws(CrispKind::Ideal));
    }

    #[test]
    fn characteristic_functions() {
        let s = left_zero3();
        let q = Arc::new(QSet::singleton("p"));
        let chi = |a: CrispSubset| QFuzzySubset::characteristic(s.clone(), &a, q.clone()).unwrap();
        assert_eq!(
            chi(CrispSubset::full(3)),
            QFuzzySubset::constant(s.clone(), q.clone(), Grade::ONE)
        );
        assert!(chi(CrispSubset::empty(3)).is_empty());
        let a = chi(CrispSubset::from_indices(3, [0]).unwrap());
        assert_eq!(a.rows(), vec![vec![Grade::ONE], vec![Grade::ZERO], vec![Grade::ZERO]]);
    }

    #[test]
    fn intersections() {
        let s = left_zero3();
        let q = Arc::new(QSet::singleton("p"));
        let mu = mu21();
        assert_eq!(intersect(&[mu.clone(), mu.clone()]).unwrap(), mu);
        let one = QFuzzySubset::constant(s.clone(), q.clone(), Grade::ONE);
        assert_eq!(intersect(&[mu.clone(), one]).unwrap(), mu);
        let a = CrispSubset::from_mask(3, 0b011);
        let b = CrispSubset::from_mask(3, 0b110);
        let chi = |a: &CrispSubset| QFuzzySubset::characteristic(s.clone(), a, q.clone()).unwrap();
        assert_eq!(intersect(&[chi(&a), chi(&b)]).unwrap(), chi(&a.intersection(&b)));
        assert_eq!(intersect(&[]), Err(Error::EmptyFamily));
        let other = QFuzzySubset::constant(left_zero3(), Arc::new(QSet::sized(2).unwrap()), Grade::ONE);
        assert_eq!(intersect(&[mu, other]), Err(Error::MixedOwners));
    }

    #[test]
    fn inclusion() {
        let mu = mu21();
        assert_eq!(includes(&mu, &mu), Ok(true));
        assert_eq!(mu.is_strict_subset_of(&mu), Ok(false));
        let zero = QFuzzySubset::constant(mu.owner().clone(), mu.qset().clone(), Grade::ZERO);
        assert_eq!(includes(&zero, &mu), Ok(true));
        assert_eq!(zero.is_strict_subset_of(&mu), Ok(true));
    }
}
