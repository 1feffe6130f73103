mod common;

use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use qfideal_core::enumeration::{build_corpus_up_to, Ceiling, Dedup};
use qfideal_core::transforms::{crisp_extension, extension, magnified_translation, TransformParams};
use qfideal_core::{crisp_predicate, CrispKind, CrispSubset, Error, Grade, QFuzzySubset, QSet, Semigroup};

use common::g;

fn corpus() -> &'static [Semigroup] {
    static C: OnceLock<Vec<Semigroup>> = OnceLock::new();
    C.get_or_init(|| {
        build_corpus_up_to(3, Dedup::Labeled, None, Ceiling::default())
            .unwrap()
            .items
    })
}

const POOL: [&str; 6] = ["0", "1/5", "1/4", "1/2", "3/4", "1"];

/// A semigroup of order <= 3, a fuzzy subject over it with |Q| in 1..=2,
/// and an element.
fn subject() -> impl Strategy<Value = (Arc<Semigroup>, QFuzzySubset, usize)> {
    (0..corpus().len(), 1usize..=2).prop_flat_map(|(i, q)| {
        let s = Arc::new(corpus()[i].clone());
        let n = s.order();
        (Just(s), Just(q), proptest::collection::vec(0..POOL.len(), n * q), 0..n).prop_map(|(s, q, idx, x)| {
            let grades = idx.into_iter().map(|k| g(POOL[k])).collect();
            let mu = QFuzzySubset::from_flat(s.clone(), Arc::new(QSet::sized(q).unwrap()), grades).unwrap();
            (s, mu, x)
        })
    })
}

fn rows(mu: &QFuzzySubset) -> common::Rows {
    mu.rows()
}

fn pool_grade() -> impl Strategy<Value = Grade> {
    (0..POOL.len()).prop_map(|k| g(POOL[k]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn predicates_agree_with_the_oracle((s, mu, _x) in subject()) {
        let t = s.rows();
        for kind in CrispKind::ALL {
            prop_assert_eq!(mu.satisfies(kind), common::fuzzy_kind(&t, &rows(&mu), kind), "{}", kind);
        }
    }

    #[test]
    fn ideal_is_left_and_right((_s, mu, _x) in subject()) {
        prop_assert_eq!(
            mu.satisfies(CrispKind::Ideal),
            mu.satisfies(CrispKind::LeftIdeal) && mu.satisfies(CrispKind::RightIdeal)
        );
        if mu.satisfies(CrispKind::CompletelyPrime) {
            prop_assert!(mu.satisfies(CrispKind::CompletelySemiprime));
        }
        if mu.satisfies(CrispKind::Ideal) {
            prop_assert!(mu.satisfies(CrispKind::InteriorIdeal));
        }
    }

    #[test]
    fn level_sets_shrink((_s, mu, _x) in subject(), a in pool_grade(), b in pool_grade()) {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        prop_assert!(mu.level_set(hi).is_subset(&mu.level_set(lo)));
        prop_assert!(mu.level_set(Grade::ZERO).is_full());
        prop_assert_eq!(mu.level_set(a).iter().collect::<Vec<_>>(),
            common::level(&rows(&mu), a).iter().enumerate().filter(|p| *p.1).map(|p| p.0).collect::<Vec<_>>());
    }

    #[test]
    fn extension_commutes_with_level_sets((s, mu, x) in subject(), t in pool_grade()) {
        let lhs = crisp_extension(&s, &mu.level_set(t), x).unwrap();
        let rhs = extension(&mu, x).unwrap().level_set(t);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn extension_matches_the_oracle((s, mu, x) in subject()) {
        prop_assert_eq!(extension(&mu, x).unwrap().rows(), common::extension(&s.rows(), &rows(&mu), x));
    }

    #[test]
    fn extension_of_characteristic_functions((s, _mu, x) in subject(), mask in 0u64..8) {
        let n = s.order();
        let a = CrispSubset::from_mask(n, mask & ((1 << n) - 1));
        let q = Arc::new(QSet::sized(2).unwrap());
        let chi = QFuzzySubset::characteristic(s.clone(), &a, q.clone()).unwrap();
        let lhs = extension(&chi, x).unwrap();
        let rhs = QFuzzySubset::characteristic(s.clone(), &crisp_extension(&s, &a, x).unwrap(), q).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn extensions_compose((s, mu, x) in subject(), y in 0usize..3) {
        let y = y % s.order();
        let twice = extension(&extension(&mu, y).unwrap(), x).unwrap();
        prop_assert_eq!(twice, extension(&mu, s.mul(y, x)).unwrap());
    }

    #[test]
    fn magnified_translation_is_monotone_and_commutes_with_max(
        (_s, mu, _x) in subject(), b in pool_grade(), frac in 0u32..=4,
    ) {
        let limit = mu.sup_grade().complement();
        let alpha = Grade::from_ratio(limit.ratio() * num_rational::Ratio::new(frac as i64, 4)).unwrap();
        let nu = magnified_translation(&mu, b, alpha).unwrap();
        prop_assert!(nu.sup_grade() <= Grade::ONE);
        for (m, v) in mu.grades().iter().zip(nu.grades()) {
            prop_assert_eq!(*v, m.affine(b, alpha).unwrap());
        }
        let top = mu.grades().iter().max().copied().unwrap();
        prop_assert_eq!(nu.sup_grade(), top.affine(b, alpha).unwrap());
        let too_big = Grade::from_ratio(limit.ratio()).unwrap();
        if too_big < Grade::ONE {
            let over = Grade::from_ratio((limit.ratio() + Grade::ONE.ratio()) / 2).unwrap();
            let rejected = matches!(TransformParams::for_subject(&mu, b, over), Err(Error::AlphaOutOfRange { .. }));
            prop_assert!(rejected);
        }
    }

    #[test]
    fn crisp_kinds_transfer_to_characteristic_functions((s, _mu, _x) in subject(), mask in 1u64..8, q in 1usize..=3) {
        let n = s.order();
        let a = CrispSubset::from_mask(n, mask & ((1 << n) - 1));
        let chi = QFuzzySubset::characteristic(s.clone(), &a, Arc::new(QSet::sized(q).unwrap())).unwrap();
        let member: Vec<bool> = (0..n).map(|i| a.contains(i)).collect();
        for kind in CrispKind::ALL {
            let crisp = a.satisfies(&s, kind);
            prop_assert_eq!(crisp, common::crisp_kind(&s.rows(), &member, kind));
            prop_assert_eq!(crisp, chi.satisfies(kind));
            match crisp_predicate(&s, &a, kind) {
                Ok(v) => prop_assert_eq!(v, crisp),
                Err(e) => prop_assert!(a.is_empty() || (kind.requires_ideal() && e == Error::NotAnIdeal)),
            }
        }
    }
}
