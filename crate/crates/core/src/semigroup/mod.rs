//! Finite semigroups given by Cayley tables.
//!
//! Elements are the indices `0..n`; labels are carried only for
//! presentation and JSON interchange.

mod classify;
mod crisp;

pub use classify::{classify, ClassFilter, ClassFlags, SemigroupClass};
pub use crisp::{crisp_predicate, CrispKind, CrispSubset};

use crate::error::{Error, Result};

/// A finite semigroup with a validated, associative Cayley table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Semigroup {
    names: Vec<String>,
    // row-major, table[i * n + j] = i * j
    table: Vec<usize>,
}

impl Semigroup {
    /// Validates shape, range and associativity of `table`.
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(Error::DuplicateLabel(name.clone()));
            }
        }
        if table.len() != n {
            return Err(Error::NonSquareTable(format!(
                "{} rows for {} elements",
                table.len(),
                n
            )));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != n {
                return Err(Error::NonSquareTable(format!(
                    "row {row} has {} entries, expected {n}",
                    entries.len()
                )));
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= n {
                    return Err(Error::IndexOutOfRange {
                        row,
                        col,
                        value,
                        order: n,
                    });
                }
                flat.push(value);
            }
        }
        if let Some((i, j, k)) = find_non_associative(n, &flat) {
            return Err(Error::NotAssociative { i, j, k });
        }
        Ok(Self { names, table: flat })
    }

    /// Builds a semigroup with default labels `a, b, c, ...`.
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(default_names(table.len()), table)
    }

    /// Builds from a flat row-major table already known to be well-formed.
    /// Associativity is still checked.
    pub fn from_flat(n: usize, flat: Vec<usize>) -> Result<Self> {
        let rows = flat.chunks(n.max(1)).map(<[usize]>::to_vec).collect();
        Self::from_table(rows)
    }

    pub(crate) fn from_flat_unchecked(names: Vec<String>, flat: Vec<usize>) -> Self {
        debug_assert_eq!(names.len() * names.len(), flat.len());
        debug_assert!(find_non_associative(names.len(), &flat).is_none());
        Self { names, table: flat }
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    /// `a^k` for `k >= 1`.
    pub fn power(&self, a: usize, k: usize) -> usize {
        assert!(k >= 1, "powers start at 1");
        let mut acc = a;
        for _ in 1..k {
            acc = self.mul(acc, a);
        }
        acc
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn label(&self, index: usize) -> &str {
        &self.names[index]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn check_element(&self, index: usize) -> Result<usize> {
        if index < self.order() {
            Ok(index)
        } else {
            Err(Error::ElementOutOfRange {
                index,
                order: self.order(),
            })
        }
    }

    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order()).map(<[usize]>::to_vec).collect()
    }

    /// The isomorphic copy obtained by sending element `i` to `perm[i]`.
    /// Labels follow their elements.
    pub fn relabel(&self, perm: &[usize]) -> Semigroup {
        let n = self.order();
        assert_eq!(perm.len(), n);
        let mut names = vec![String::new(); n];
        let mut table = vec![0; n * n];
        for i in 0..n {
            names[perm[i]] = self.names[i].clone();
            for j in 0..n {
                table[perm[i] * n + perm[j]] = perm[self.mul(i, j)];
            }
        }
        Semigroup { names, table }
    }

    /// Some `e` with `e * y = y` for all `y`.
    pub fn left_identity(&self) -> Option<usize> {
        self.elements().find(|&e| self.elements().all(|y| self.mul(e, y) == y))
    }
}

/// Labels `a..z`, then `e26, e27, ...`.
pub fn default_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i < 26 {
                char::from(b'a' + i as u8).to_string()
            } else {
                format!("e{i}")
            }
        })
        .collect()
}

fn find_non_associative(n: usize, t: &[usize]) -> Option<(usize, usize, usize)> {
    for i in 0..n {
        for j in 0..n {
            let ij = t[i * n + j];
            for k in 0..n {
                if t[ij * n + k] != t[i * n + t[j * n + k]] {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn left_zero_table_is_a_semigroup() {
        let s = Semigroup::new(
            names(&["a", "b", "c"]),
            vec![vec![0, 0, 0], vec![1, 1, 1], vec![2, 2, 2]],
        )
        .unwrap();
        assert_eq!(s.order(), 3);
        assert_eq!(s.mul(1, 2), 1);
    }

    #[test]
    fn trivial_semigroup() {
        let s = Semigroup::from_table(vec![vec![0]]).unwrap();
        assert_eq!(s.order(), 1);
        assert_eq!(s.power(0, 5), 0);
    }

    #[test]
    fn order_two_counterexample_table() {
        // Brute force over all 8 triples of [[0,1],[0,0]].
        let t = [[0usize, 1], [0, 0]];
        let mut bad = None;
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    if t[t[i][j]][k] != t[i][t[j][k]] && bad.is_none() {
                        bad = Some((i, j, k));
                    }
                }
            }
        }
        let bad = bad.expect("oracle finds a violating triple");
        let err = Semigroup::from_table(vec![vec![0, 1], vec![0, 0]]).unwrap_err();
        assert_eq!(
            err,
            Error::NotAssociative {
                i: bad.0,
                j: bad.1,
                k: bad.2
            }
        );
    }

    #[test]
    fn malformed_tables() {
        assert!(matches!(
            Semigroup::from_table(vec![vec![0, 1], vec![0]]),
            Err(Error::NonSquareTable(_))
        ));
        assert!(matches!(
            Semigroup::from_table(vec![vec![0, 2], vec![0, 0]]),
            Err(Error::IndexOutOfRange { value: 2, .. })
        ));
        assert_eq!(Semigroup::new(vec![], vec![]), Err(Error::EmptyCarrier));
        assert!(matches!(
            Semigroup::new(names(&["a", "a"]), vec![vec![0, 0], vec![0, 0]]),
            Err(Error::DuplicateLabel(_))
        ));
    }

    #[test]
    fn relabel_is_an_isomorphism() {
        // Z/3 under addition
        let s = Semigroup::from_table(vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap();
        let perm = [2, 0, 1];
        let r = s.relabel(&perm);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(r.mul(perm[i], perm[j]), perm[s.mul(i, j)]);
            }
        }
        assert_eq!(r.label(perm[0]), "a");
    }

    #[test]
    fn powers_and_identity() {
        let s = Semigroup::from_table(vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap();
        assert_eq!(s.power(1, 2), 2);
        assert_eq!(s.power(1, 3), 0);
        assert_eq!(s.left_identity(), Some(0));
    }
}
