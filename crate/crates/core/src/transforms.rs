//! Extensions of (Q-fuzzy and crisp) subsets by an element, and the fuzzy
//! translation, multiplication and magnified translation maps.

use crate::error::{Error, Result};
use crate::qfuzzy::{Grade, QFuzzySubset};
use crate::semigroup::{CrispSubset, Semigroup};

/// `<x, mu>(y, q) = mu(x*y, q)`.
pub fn extension(mu: &QFuzzySubset, x: usize) -> Result<QFuzzySubset> {
    let s = mu.owner();
    s.check_element(x)?;
    Ok(QFuzzySubset::from_fn(s.clone(), mu.qset().clone(), |y, q| {
        mu.grade(s.mul(x, y), q)
    }))
}

/// `<x^n, mu>`, the extension by the element power `x^n`.
pub fn extension_by_power(mu: &QFuzzySubset, x: usize, n: usize) -> Result<QFuzzySubset> {
    mu.owner().check_element(x)?;
    extension(mu, mu.owner().power(x, n.max(1)))
}

/// `<x, A> = {y : x*y in A}`. The `Q` factor of `A x Q` is never constrained,
/// so the result is kept as a subset of `S`.
pub fn crisp_extension(s: &Semigroup, a: &CrispSubset, x: usize) -> Result<CrispSubset> {
    s.check_element(x)?;
    a.check_owner(s)?;
    Ok(CrispSubset::from_predicate(s.order(), |y| a.contains(s.mul(x, y))))
}

/// Largest grade attained over `S x Q`.
pub fn sup_grade(mu: &QFuzzySubset) -> Grade {
    mu.sup_grade()
}

/// Parameters of `beta * mu + alpha`, validated against one subject.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TransformParams {
    pub beta: Grade,
    pub alpha: Grade,
}

impl TransformParams {
    /// `beta` is any grade; `alpha` must not exceed `1 - sup(mu)`.
    pub fn for_subject(mu: &QFuzzySubset, beta: Grade, alpha: Grade) -> Result<Self> {
        let limit = mu.sup_grade().complement();
        if alpha > limit {
            return Err(Error::AlphaOutOfRange {
                alpha: alpha.to_string(),
                limit: limit.to_string(),
            });
        }
        Ok(Self { beta, alpha })
    }

    /// The `(beta, alpha)` sweep used by the harness: `beta` in `{0, 1/2, 1}`
    /// and `alpha` in `{0, (1 - sup)/2, 1 - sup}`, duplicates removed.
    pub fn grid(mu: &QFuzzySubset) -> Vec<TransformParams> {
        let half = Grade::new(1, 2).expect("1/2 is a grade");
        let limit = mu.sup_grade().complement();
        let mut alphas = vec![Grade::ZERO, limit.half(), limit];
        alphas.dedup();
        let mut out = Vec::with_capacity(9);
        for beta in [Grade::ZERO, half, Grade::ONE] {
            for &alpha in &alphas {
                out.push(TransformParams { beta, alpha });
            }
        }
        out
    }
}

/// `beta * mu + alpha`.
pub fn magnified_translation(mu: &QFuzzySubset, beta: Grade, alpha: Grade) -> Result<QFuzzySubset> {
    let p = TransformParams::for_subject(mu, beta, alpha)?;
    apply(mu, p)
}

/// `mu + alpha`.
pub fn translation(mu: &QFuzzySubset, alpha: Grade) -> Result<QFuzzySubset> {
    magnified_translation(mu, Grade::ONE, alpha)
}

/// `beta * mu`.
pub fn multiplication(mu: &QFuzzySubset, beta: Grade) -> Result<QFuzzySubset> {
    magnified_translation(mu, beta, Grade::ZERO)
}

/// Applies already-validated parameters.
pub fn apply(mu: &QFuzzySubset, p: TransformParams) -> Result<QFuzzySubset> {
    let grades = mu
        .grades()
        .iter()
        .map(|g| g.affine(p.beta, p.alpha))
        .collect::<Result<Vec<_>>>()?;
    QFuzzySubset::from_flat(mu.owner().clone(), mu.qset().clone(), grades)
}
