use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::Semigroup;
use crate::error::{Error, Result};

/// Structural classes decided by exhaustive witness search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SemigroupClass {
    Commutative,
    Regular,
    LeftRegular,
    RightRegular,
    IntraRegular,
    Archimedean,
}

impl SemigroupClass {
    pub const ALL: [SemigroupClass; 6] = [
        SemigroupClass::Commutative,
        SemigroupClass::Regular,
        SemigroupClass::LeftRegular,
        SemigroupClass::RightRegular,
        SemigroupClass::IntraRegular,
        SemigroupClass::Archimedean,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SemigroupClass::Commutative => "commutative",
            SemigroupClass::Regular => "regular",
            SemigroupClass::LeftRegular => "left_regular",
            SemigroupClass::RightRegular => "right_regular",
            SemigroupClass::IntraRegular => "intra_regular",
            SemigroupClass::Archimedean => "archimedean",
        }
    }
}

impl fmt::Display for SemigroupClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SemigroupClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        SemigroupClass::ALL
            .into_iter()
            .find(|c| c.name() == norm)
            .ok_or_else(|| Error::UnknownClass(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct ClassFlags {
    pub commutative: bool,
    pub regular: bool,
    pub left_regular: bool,
    pub right_regular: bool,
    pub intra_regular: bool,
    pub archimedean: bool,
}

impl ClassFlags {
    pub fn has(&self, class: SemigroupClass) -> bool {
        match class {
            SemigroupClass::Commutative => self.commutative,
            SemigroupClass::Regular => self.regular,
            SemigroupClass::LeftRegular => self.left_regular,
            SemigroupClass::RightRegular => self.right_regular,
            SemigroupClass::IntraRegular => self.intra_regular,
            SemigroupClass::Archimedean => self.archimedean,
        }
    }
}

/// Classes a semigroup must have (`require`) or must lack (`exclude`).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFilter {
    pub require: Vec<SemigroupClass>,
    pub exclude: Vec<SemigroupClass>,
}

impl ClassFilter {
    pub fn requiring(classes: &[SemigroupClass]) -> Self {
        Self {
            require: classes.to_vec(),
            exclude: Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.require.is_empty() && self.exclude.is_empty()
    }

    pub fn accepts(&self, flags: &ClassFlags) -> bool {
        self.require.iter().all(|&c| flags.has(c)) && self.exclude.iter().all(|&c| !flags.has(c))
    }

    /// Parses `commutative,!archimedean`; `not_` is accepted in place of `!`.
    pub fn parse(spec: &str) -> Result<Self> {
        let mut filter = ClassFilter::default();
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            if let Some(rest) = item.strip_prefix('!').or_else(|| item.strip_prefix("not_")) {
                filter.exclude.push(rest.parse()?);
            } else {
                filter.require.push(item.parse()?);
            }
        }
        Ok(filter)
    }
}

/// Decides all six class flags by witness search.
///
/// Archimedean is tested with `SbS = {s*b*t}` (no adjoined identity) and the
/// powers `a^1..a^n`; the power sequence of an element takes at most `n`
/// distinct values, so later powers add nothing.
pub fn classify(s: &Semigroup) -> ClassFlags {
    let n = s.order();
    let els = || s.elements();
    let sq = |a: usize| s.mul(a, a);

    let commutative = els().all(|a| els().all(|b| s.mul(a, b) == s.mul(b, a)));
    let regular = els().all(|a| els().any(|x| s.mul(s.mul(a, x), a) == a));
    let left_regular = els().all(|a| els().any(|x| s.mul(x, sq(a)) == a));
    let right_regular = els().all(|a| els().any(|x| s.mul(sq(a), x) == a));
    let intra_regular = els().all(|a| els().any(|x| els().any(|y| s.mul(s.mul(x, sq(a)), y) == a)));

    let archimedean = els().all(|b| {
        let mut middle = vec![false; n];
        for x in els() {
            let xb = s.mul(x, b);
            for y in els() {
                middle[s.mul(xb, y)] = true;
            }
        }
        els().all(|a| {
            let mut p = a;
            for _ in 0..n {
                if middle[p] {
                    return true;
                }
                p = s.mul(p, a);
            }
            false
        })
    });

    ClassFlags {
        commutative,
        regular,
        left_regular,
        right_regular,
        intra_regular,
        archimedean,
    }
}
