//! Deterministic generation of Q-fuzzy subjects for one semigroup.
//!
//! When the number of grade assignments `|pool|^(order * q_size)` fits in
//! the per-semigroup budget every assignment is produced. Otherwise the
//! budget is filled with structured subjects first (constants,
//! characteristic functions of crisp ideals, staircases over chains of
//! crisp ideals) and uniform draws after that.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sha2::{Digest, Sha256};

use super::SampleConfig;
use crate::enumeration::canonicalize;
use crate::qfuzzy::{Grade, QFuzzySubset, QSet};
use crate::semigroup::{CrispKind, CrispSubset, Semigroup};

/// Kinds whose crisp witnesses seed structured subjects.
const STRUCTURED_KINDS: [CrispKind; 6] = [
    CrispKind::LeftIdeal,
    CrispKind::RightIdeal,
    CrispKind::Ideal,
    CrispKind::InteriorIdeal,
    CrispKind::CompletelyPrime,
    CrispKind::CompletelySemiprime,
];

#[derive(Debug, Clone)]
enum Plan {
    Exhaustive { count: usize },
    Sampled { structured: Vec<Vec<Grade>> },
}

/// Produces the subjects of one `(semigroup, q_size)` pair by index.
#[derive(Debug, Clone)]
pub struct SubjectSampler {
    owner: Arc<Semigroup>,
    qset: Arc<QSet>,
    pool: Vec<Grade>,
    samples: usize,
    seed_key: Vec<u8>,
    plan: Plan,
}

impl SubjectSampler {
    pub fn new(owner: Arc<Semigroup>, q_size: usize, config: &SampleConfig) -> Self {
        let qset = Arc::new(QSet::sized(q_size.max(1)).expect("q_size >= 1"));
        let mut pool = config.grade_pool.clone();
        pool.sort();
        pool.dedup();
        let cells = owner.order() * qset.len();
        let budget = config.samples_per_semigroup.max(1);
        let exhaustive = (0..cells).try_fold(1usize, |acc, _| acc.checked_mul(pool.len()).filter(|&c| c <= budget));

        let mut seed_key = Vec::new();
        seed_key.extend_from_slice(b"qfideal-subject");
        seed_key.extend_from_slice(&config.seed.to_le_bytes());
        seed_key.extend_from_slice(&(qset.len() as u64).to_le_bytes());
        let canon = canonicalize(&owner);
        seed_key.extend_from_slice(&(canon.order() as u64).to_le_bytes());
        for &v in canon.flat() {
            seed_key.extend_from_slice(&(v as u32).to_le_bytes());
        }

        let mut sampler = Self {
            owner,
            qset,
            pool,
            samples: budget,
            seed_key,
            plan: Plan::Exhaustive { count: 0 },
        };
        sampler.plan = match exhaustive {
            Some(count) => Plan::Exhaustive { count },
            None => Plan::Sampled {
                structured: sampler.structured(),
            },
        };
        sampler
    }

    pub fn qset(&self) -> &Arc<QSet> {
        &self.qset
    }

    pub fn is_exhaustive(&self) -> bool {
        matches!(self.plan, Plan::Exhaustive { .. })
    }

    pub fn len(&self) -> usize {
        match &self.plan {
            Plan::Exhaustive { count } => *count,
            Plan::Sampled { .. } => self.samples,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn subject(&self, index: usize) -> QFuzzySubset {
        let grades = match &self.plan {
            Plan::Exhaustive { .. } => self.assignment(index),
            Plan::Sampled { structured } => match structured.get(index) {
                Some(g) => g.clone(),
                None => self.uniform(index),
            },
        };
        QFuzzySubset::from_flat(self.owner.clone(), self.qset.clone(), grades).expect("sampler produces full matrices")
    }

    pub fn subjects(&self) -> impl Iterator<Item = QFuzzySubset> + '_ {
        (0..self.len()).map(|i| self.subject(i))
    }

    fn cells(&self) -> usize {
        self.owner.order() * self.qset.len()
    }

    /// Mixed-radix digits of `index`, first cell most significant.
    fn assignment(&self, mut index: usize) -> Vec<Grade> {
        let k = self.pool.len();
        let mut grades = vec![Grade::ZERO; self.cells()];
        for slot in grades.iter_mut().rev() {
            *slot = self.pool[index % k];
            index /= k;
        }
        grades
    }

    fn rng(&self, tag: &[u8], index: usize) -> ChaCha8Rng {
        let mut h = Sha256::new();
        h.update(&self.seed_key);
        h.update(tag);
        h.update((index as u64).to_le_bytes());
        ChaCha8Rng::from_seed(h.finalize().into())
    }

    fn uniform(&self, index: usize) -> Vec<Grade> {
        let mut rng = self.rng(b"uniform", index);
        (0..self.cells())
            .map(|_| self.pool[rng.gen_range(0..self.pool.len())])
            .collect()
    }

    fn structured(&self) -> Vec<Vec<Grade>> {
        let s = &*self.owner;
        let n = s.order();
        let m = self.qset.len();
        let (lo, hi) = (self.pool[0], *self.pool.last().expect("non-empty pool"));
        let mut out: Vec<Vec<Grade>> = Vec::new();
        let push = |g: Vec<Grade>, out: &mut Vec<Vec<Grade>>| {
            if !out.contains(&g) {
                out.push(g);
            }
        };

        for &g in &self.pool {
            push(vec![g; n * m], &mut out);
        }

        let witnesses: Vec<(CrispKind, Vec<CrispSubset>)> = if n < 16 {
            STRUCTURED_KINDS
                .iter()
                .map(|&k| (k, CrispSubset::all(n).filter(|a| a.satisfies(s, k)).collect()))
                .collect()
        } else {
            Vec::new()
        };
        let mut indicators: Vec<&CrispSubset> = witnesses.iter().flat_map(|(_, v)| v).collect();
        indicators.sort();
        indicators.dedup();
        for a in indicators {
            let g = (0..n)
                .flat_map(|x| std::iter::repeat_n(if a.contains(x) { hi } else { lo }, m))
                .collect();
            push(g, &mut out);
        }

        // staircases: a random chain of crisp witnesses with decreasing grades
        let staircase_slots = self.samples / 4;
        let chains: Vec<&Vec<CrispSubset>> = witnesses.iter().map(|(_, v)| v).filter(|v| !v.is_empty()).collect();
        if !chains.is_empty() && self.pool.len() >= 2 {
            for i in 0..staircase_slots {
                let mut rng = self.rng(b"staircase", i);
                let family = chains[rng.gen_range(0..chains.len())];
                let mut g = vec![lo; n * m];
                for q in 0..m {
                    let mut picked: Vec<&CrispSubset> = family.choose_multiple(&mut rng, 3).collect();
                    picked.sort_by_key(|a| a.count());
                    // nested: running unions of the picks
                    let chain: Vec<CrispSubset> = picked
                        .iter()
                        .scan(CrispSubset::empty(n), |acc, a| {
                            *acc = acc.union(a);
                            Some(acc.clone())
                        })
                        .collect();
                    let mut levels: Vec<Grade> = self
                        .pool
                        .choose_multiple(&mut rng, chain.len().min(self.pool.len()))
                        .copied()
                        .collect();
                    levels.sort_by(|a, b| b.cmp(a));
                    for x in 0..n {
                        if let Some(k) = chain.iter().position(|a| a.contains(x)) {
                            g[x * m + q] = levels.get(k).copied().unwrap_or(lo);
                        }
                    }
                }
                push(g, &mut out);
            }
        }

        out.truncate(self.samples);
        out
    }
}

/// The `index`-th subject for `(s, q_size)` under `config`.
pub fn sample_qfuzzy(s: &Semigroup, q_size: usize, config: &SampleConfig, index: usize) -> QFuzzySubset {
    SubjectSampler::new(Arc::new(s.clone()), q_size, config).subject(index)
}
