use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Semigroup;
use crate::error::{Error, Result};

/// A subset of a semigroup's carrier, as a bitset over `0..len`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrispSubset {
    len: usize,
    words: Vec<u64>,
}

impl CrispSubset {
    pub fn empty(len: usize) -> Self {
        Self {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn from_indices(len: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut s = Self::empty(len);
        for i in members {
            if i >= len {
                return Err(Error::ElementOutOfRange { index: i, order: len });
            }
            s.insert(i);
        }
        Ok(s)
    }

    /// Bit `i` of `mask` is element `i`. Only for carriers of at most 64 elements.
    pub fn from_mask(len: usize, mask: u64) -> Self {
        assert!(len <= 64, "mask subsets are limited to 64 elements");
        let mut s = Self::empty(len);
        if len > 0 {
            let keep = if len == 64 { u64::MAX } else { (1 << len) - 1 };
            s.words[0] = mask & keep;
        }
        s
    }

    pub fn from_predicate(len: usize, f: impl Fn(usize) -> bool) -> Self {
        let mut s = Self::empty(len);
        for i in (0..len).filter(|&i| f(i)) {
            s.insert(i);
        }
        s
    }

    /// All `2^len` subsets, ordered by mask.
    pub fn all(len: usize) -> impl Iterator<Item = CrispSubset> {
        assert!(len < 64);
        (0..1u64 << len).map(move |m| CrispSubset::from_mask(len, m))
    }

    pub fn universe_len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.contains(i))
    }

    pub fn is_subset(&self, other: &CrispSubset) -> bool {
        self.len == other.len && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &CrispSubset) -> CrispSubset {
        assert_eq!(self.len, other.len);
        CrispSubset {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn union(&self, other: &CrispSubset) -> CrispSubset {
        assert_eq!(self.len, other.len);
        CrispSubset {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect(),
        }
    }

    pub fn mask(&self) -> Option<u64> {
        (self.len <= 64).then(|| self.words.first().copied().unwrap_or(0))
    }

    pub fn check_owner(&self, s: &Semigroup) -> Result<()> {
        if self.len == s.order() {
            Ok(())
        } else {
            Err(Error::SubsetLength {
                got: self.len,
                expected: s.order(),
            })
        }
    }

    /// Like [`crisp_predicate`] but answers `false` where that would error.
    pub fn satisfies(&self, s: &Semigroup, kind: CrispKind) -> bool {
        !self.is_empty() && self.len == s.order() && laws_hold(s, self, kind)
    }
}

impl fmt::Display for CrispSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CrispKind {
    Subsemigroup,
    InteriorIdeal,
    LeftIdeal,
    RightIdeal,
    Ideal,
    CompletelyPrime,
    CompletelySemiprime,
}

impl CrispKind {
    pub const ALL: [CrispKind; 7] = [
        CrispKind::Subsemigroup,
        CrispKind::InteriorIdeal,
        CrispKind::LeftIdeal,
        CrispKind::RightIdeal,
        CrispKind::Ideal,
        CrispKind::CompletelyPrime,
        CrispKind::CompletelySemiprime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CrispKind::Subsemigroup => "subsemigroup",
            CrispKind::InteriorIdeal => "interior_ideal",
            CrispKind::LeftIdeal => "left_ideal",
            CrispKind::RightIdeal => "right_ideal",
            CrispKind::Ideal => "ideal",
            CrispKind::CompletelyPrime => "completely_prime",
            CrispKind::CompletelySemiprime => "completely_semiprime",
        }
    }

    pub fn requires_ideal(self) -> bool {
        matches!(self, CrispKind::CompletelyPrime | CrispKind::CompletelySemiprime)
    }
}

impl fmt::Display for CrispKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CrispKind {
    type Err = Error;

    /// Accepts the plain names as well as `q_`-prefixed ones.
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        let norm = norm.strip_prefix("q_").unwrap_or(&norm);
        let norm = norm
            .strip_suffix("_ideal")
            .filter(|b| b.starts_with("completely"))
            .unwrap_or(norm);
        CrispKind::ALL
            .into_iter()
            .find(|k| k.name() == norm)
            .ok_or_else(|| Error::UnknownKind(s.to_string()))
    }
}

/// Exact set-inclusion test of `a` against `kind`.
///
/// Every kind needs a non-empty subset; the completely (semi)prime kinds are
/// only defined for ideals and return [`Error::NotAnIdeal`] otherwise.
pub fn crisp_predicate(s: &Semigroup, a: &CrispSubset, kind: CrispKind) -> Result<bool> {
    a.check_owner(s)?;
    if a.is_empty() {
        return Err(Error::EmptySubset);
    }
    if kind.requires_ideal() && !laws_hold(s, a, CrispKind::Ideal) {
        return Err(Error::NotAnIdeal);
    }
    Ok(laws_hold(s, a, kind))
}

fn laws_hold(s: &Semigroup, a: &CrispSubset, kind: CrispKind) -> bool {
    let els = || s.elements();
    let left = || els().all(|x| a.iter().all(|i| a.contains(s.mul(x, i))));
    let right = || a.iter().all(|i| els().all(|x| a.contains(s.mul(i, x))));
    let closed = || a.iter().all(|i| a.iter().all(|j| a.contains(s.mul(i, j))));
    match kind {
        CrispKind::Subsemigroup => closed(),
        CrispKind::InteriorIdeal => {
            closed() && els().all(|x| a.iter().all(|i| els().all(|y| a.contains(s.mul(s.mul(x, i), y)))))
        }
        CrispKind::LeftIdeal => left(),
        CrispKind::RightIdeal => right(),
        CrispKind::Ideal => left() && right(),
        CrispKind::CompletelyPrime => {
            left()
                && right()
                && els().all(|x| els().all(|y| !a.contains(s.mul(x, y)) || a.contains(x) || a.contains(y)))
        }
        CrispKind::CompletelySemiprime => left() && right() && els().all(|x| !a.contains(s.mul(x, x)) || a.contains(x)),
    }
}
