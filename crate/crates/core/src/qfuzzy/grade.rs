use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A membership degree: an exact rational in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Grade(Ratio<i64>);

impl Grade {
    pub const ZERO: Grade = Grade(Ratio::new_raw(0, 1));
    pub const ONE: Grade = Grade(Ratio::new_raw(1, 1));

    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::GradeParse(format!("{numer}/{denom}")));
        }
        Self::from_ratio(Ratio::new(numer, denom))
    }

    pub fn from_ratio(r: Ratio<i64>) -> Result<Self> {
        if r < Ratio::from_integer(0) || r > Ratio::from_integer(1) {
            return Err(Error::GradeOutOfRange(r.to_string()));
        }
        Ok(Grade(r))
    }

    pub fn ratio(self) -> Ratio<i64> {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self == Grade::ZERO
    }

    /// `1 - self`.
    pub fn complement(self) -> Grade {
        Grade(Ratio::from_integer(1) - self.0)
    }

    /// Product of two grades; always a grade.
    pub fn times(self, other: Grade) -> Grade {
        Grade(self.0 * other.0)
    }

    /// `self / 2`.
    pub fn half(self) -> Grade {
        Grade(self.0 / 2)
    }

    /// `beta * self + alpha`, rejected if it leaves `[0, 1]`.
    pub fn affine(self, beta: Grade, alpha: Grade) -> Result<Grade> {
        Grade::from_ratio(beta.0 * self.0 + alpha.0)
    }
}

impl Default for Grade {
    fn default() -> Self {
        Grade::ZERO
    }
}

impl fmt::Display for Grade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self.0.denom() == 1 {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for Grade {
    type Err = Error;

    /// Accepts `p/q`, integers and finite decimals such as `0.7`; all parsed
    /// exactly.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::GradeParse(s.to_string());
        let t = s.trim();
        let digits = |d: &str| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit());
        let ratio = if let Some((p, q)) = t.split_once('/') {
            let (p, q) = (p.trim(), q.trim());
            if !digits(p) || !digits(q) {
                return Err(bad());
            }
            let q: i64 = q.parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ratio::new(p.parse().map_err(|_| bad())?, q)
        } else if let Some((int, frac)) = t.split_once('.') {
            let int = if int.is_empty() { "0" } else { int };
            if !digits(int) || !digits(frac) || frac.len() > 17 {
                return Err(bad());
            }
            let scale = 10i64.pow(frac.len() as u32);
            let whole: i64 = int.parse().map_err(|_| bad())?;
            let part: i64 = frac.parse().map_err(|_| bad())?;
            let numer = whole
                .checked_mul(scale)
                .and_then(|w| w.checked_add(part))
                .ok_or_else(bad)?;
            Ratio::new(numer, scale)
        } else {
            if !digits(t) {
                return Err(bad());
            }
            Ratio::from_integer(t.parse().map_err(|_| bad())?)
        };
        Grade::from_ratio(ratio)
    }
}

impl Serialize for Grade {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Grade {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> Grade {
        s.parse().unwrap()
    }

    #[test]
    fn parsing_is_exact() {
        assert_eq!(g("0.7"), Grade::new(7, 10).unwrap());
        assert_eq!(g("7/10"), g(".70"));
        assert_eq!(g("2/4"), g("0.5"));
        assert_eq!(g("1"), Grade::ONE);
        assert_eq!(g("0"), Grade::ZERO);
        assert_eq!(g("1.0"), Grade::ONE);
    }

    #[test]
    fn rejects_out_of_range_and_garbage() {
        assert!(matches!("3/2".parse::<Grade>(), Err(Error::GradeOutOfRange(_))));
        assert!(matches!("1.5".parse::<Grade>(), Err(Error::GradeOutOfRange(_))));
        for bad in ["-1/2", "1/0", "abc", "", "0.5.5", "1e-3", "/2", "0.123456789012345678"] {
            assert!(bad.parse::<Grade>().is_err(), "{bad}");
        }
    }

    #[test]
    fn display_round_trips() {
        for s in ["0", "1", "1/2", "7/10", "9/20"] {
            assert_eq!(g(s).to_string(), s);
        }
        assert_eq!(g("0.80").to_string(), "4/5");
    }

    #[test]
    fn affine_map() {
        assert_eq!(g("4/5").affine(g("1/2"), g("1/10")).unwrap(), g("1/2"));
        assert_eq!(g("7/10").affine(g("1/2"), g("1/10")).unwrap(), g("9/20"));
        assert!(g("1").affine(g("1"), g("1/10")).is_err());
        assert_eq!(g("3/4").complement(), g("1/4"));
        assert_eq!(g("1/2").times(g("1/2")), g("1/4"));
    }

    #[test]
    fn serde_uses_strings() {
        let json = serde_json::to_string(&g("7/10")).unwrap();
        assert_eq!(json, "\"7/10\"");
        let back: Grade = serde_json::from_str("\"0.7\"").unwrap();
        assert_eq!(back, g("7/10"));
        assert!(serde_json::from_str::<Grade>("\"2\"").is_err());
    }
}
