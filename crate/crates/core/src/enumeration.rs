//! Exhaustive generation of small semigroups.
//!
//! Labeled tables come from a backtracking search over table cells; after
//! each assignment only the triples that the new cell completes are checked
//! for associativity. Isomorphism classes are represented by canonical
//! tables: the lexicographically least relabeling over all `n!`
//! permutations.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::semigroup::{classify, default_names, ClassFilter, Semigroup};

/// Ceiling used when nothing else is configured.
pub const DEFAULT_MAX_ORDER: usize = 4;
/// Upper bound for the opt-in ceiling.
pub const HARD_MAX_ORDER: usize = 5;
/// Environment variable that raises (or lowers) the ceiling.
pub const MAX_ORDER_ENV: &str = "QFIDEAL_MAX_ORDER";

const UNSET: usize = usize::MAX;

/// The largest order the enumerator will accept.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ceiling(usize);

impl Ceiling {
    pub fn new(max_order: usize) -> Self {
        Ceiling(max_order.min(HARD_MAX_ORDER))
    }

    /// Reads [`MAX_ORDER_ENV`], falling back to [`DEFAULT_MAX_ORDER`].
    pub fn from_env() -> Self {
        std::env::var(MAX_ORDER_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map_or(Ceiling(DEFAULT_MAX_ORDER), Ceiling::new)
    }

    pub fn get(self) -> usize {
        self.0
    }

    pub fn check(self, order: usize) -> Result<()> {
        if order == 0 {
            Err(Error::ZeroOrder)
        } else if order > self.0 {
            Err(Error::OrderTooLarge { order, ceiling: self.0 })
        } else {
            Ok(())
        }
    }
}

impl Default for Ceiling {
    fn default() -> Self {
        Ceiling(DEFAULT_MAX_ORDER)
    }
}

/// The order in which the backtracking search fills table cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CellOrder {
    #[default]
    RowMajor,
    ColumnMajor,
}

impl CellOrder {
    fn cells(self, n: usize) -> Vec<usize> {
        let mut cells = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                cells.push(match self {
                    CellOrder::RowMajor => a * n + b,
                    CellOrder::ColumnMajor => b * n + a,
                });
            }
        }
        cells
    }
}

/// Iterator over all associative `n x n` tables (flat, row-major).
#[derive(Debug, Clone)]
pub struct LabeledTables {
    n: usize,
    cells: Vec<usize>,
    table: Vec<usize>,
    pos: usize,
    floor: usize,
    done: bool,
}

impl LabeledTables {
    fn new(n: usize, order: CellOrder) -> Self {
        Self {
            n,
            cells: order.cells(n),
            table: vec![UNSET; n * n],
            pos: 0,
            floor: 0,
            done: n == 0,
        }
    }

    /// Search only the first `len` cells; yields partial tables.
    fn prefixes(n: usize, order: CellOrder, len: usize) -> Self {
        let mut it = Self::new(n, order);
        it.cells.truncate(len);
        it
    }

    /// Continue below a fixed prefix of `floor` cells already set in `table`.
    fn below(n: usize, order: CellOrder, table: Vec<usize>, floor: usize) -> Self {
        let mut it = Self::new(n, order);
        it.table = table;
        it.floor = floor;
        it.pos = floor;
        it.done = floor >= it.cells.len();
        it
    }

    /// Checks every triple that uses `cell` and whose four lookups are all set.
    fn consistent(&self, cell: usize) -> bool {
        let n = self.n;
        let t = &self.table;
        let at = |a: usize, b: usize| if a == UNSET || b == UNSET { UNSET } else { t[a * n + b] };
        let same = |l: usize, r: usize| l == UNSET || r == UNSET || l == r;
        let (i, j) = (cell / n, cell % n);
        let v = t[cell];
        // (i*j)*c vs i*(j*c)
        for c in 0..n {
            if !same(at(v, c), at(i, at(j, c))) {
                return false;
            }
        }
        // a*(i*j) vs (a*i)*j
        for a in 0..n {
            if !same(at(a, v), at(at(a, i), j)) {
                return false;
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = t[a * n + b];
                // (a*b)*j with a*b = i, vs a*(b*j)
                if ab == i && !same(v, at(a, at(b, j))) {
                    return false;
                }
                // i*(a*b) with a*b = j, vs (i*a)*b
                if ab == j && !same(v, at(at(i, a), b)) {
                    return false;
                }
            }
        }
        true
    }
}

impl Iterator for LabeledTables {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let len = self.cells.len();
        while !self.done {
            let cell = self.cells[self.pos];
            let cur = self.table[cell];
            let next = if cur == UNSET { 0 } else { cur + 1 };
            if next >= self.n {
                self.table[cell] = UNSET;
                if self.pos == self.floor {
                    self.done = true;
                } else {
                    self.pos -= 1;
                }
                continue;
            }
            self.table[cell] = next;
            if self.consistent(cell) {
                if self.pos + 1 == len {
                    return Some(self.table.clone());
                }
                self.pos += 1;
            }
        }
        None
    }
}

/// Streams the associative tables on `n` elements in search order.
pub fn enumerate_labeled(n: usize, ceiling: Ceiling) -> Result<impl Iterator<Item = Semigroup>> {
    ceiling.check(n)?;
    Ok(LabeledTables::new(n, CellOrder::RowMajor)
        .map(move |flat| Semigroup::from_flat_unchecked(default_names(n), flat)))
}

/// All associative tables on `n` elements as flat row-major vectors, found
/// with the given cell order. Prefixes of the first row are searched in
/// parallel; the result is in search order regardless of scheduling.
pub fn labeled_tables(n: usize, order: CellOrder) -> Vec<Vec<usize>> {
    if n <= 2 {
        return LabeledTables::new(n, order).collect();
    }
    let prefixes: Vec<Vec<usize>> = LabeledTables::prefixes(n, order, n).collect();
    prefixes
        .into_par_iter()
        .map(|table| LabeledTables::below(n, order, table, n).collect::<Vec<_>>())
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// A Cayley table in canonical labeling.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<Vec<usize>>", try_from = "Vec<Vec<usize>>")]
pub struct CanonicalTable {
    order: usize,
    flat: Vec<usize>,
}

impl CanonicalTable {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn flat(&self) -> &[usize] {
        &self.flat
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.flat.chunks(self.order.max(1)).map(<[usize]>::to_vec).collect()
    }

    /// The semigroup with this table and default labels.
    pub fn to_semigroup(&self) -> Semigroup {
        Semigroup::from_flat_unchecked(default_names(self.order), self.flat.clone())
    }
}

impl From<CanonicalTable> for Vec<Vec<usize>> {
    fn from(t: CanonicalTable) -> Self {
        t.rows()
    }
}

impl TryFrom<Vec<Vec<usize>>> for CanonicalTable {
    type Error = Error;

    fn try_from(rows: Vec<Vec<usize>>) -> Result<Self> {
        let s = Semigroup::from_table(rows)?;
        Ok(CanonicalTable {
            order: s.order(),
            flat: s.flat_table().to_vec(),
        })
    }
}

/// Canonical table of `s` together with a permutation realizing it:
/// `s.relabel(&perm)` has exactly the canonical table.
pub fn canonical_form(s: &Semigroup) -> (CanonicalTable, Vec<usize>) {
    let n = s.order();
    // inv[r] = the old element placed at new position r
    let mut inv: Vec<usize> = (0..n).collect();
    let mut perm = vec![0; n];
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    let mut candidate = vec![0; n * n];
    loop {
        for (r, &old) in inv.iter().enumerate() {
            perm[old] = r;
        }
        let mut ord = Ordering::Equal;
        'fill: for r in 0..n {
            for c in 0..n {
                let v = perm[s.mul(inv[r], inv[c])];
                candidate[r * n + c] = v;
                if ord == Ordering::Equal {
                    if let Some((b, _)) = &best {
                        ord = v.cmp(&b[r * n + c]);
                        if ord == Ordering::Greater {
                            break 'fill;
                        }
                    }
                }
            }
        }
        if best.is_none() || ord == Ordering::Less {
            best = Some((candidate.clone(), perm.clone()));
        }
        if !next_permutation(&mut inv) {
            break;
        }
    }
    let (flat, perm) = best.expect("at least one permutation");
    (CanonicalTable { order: n, flat }, perm)
}

/// The lexicographically least table among all relabelings of `s`.
pub fn canonicalize(s: &Semigroup) -> CanonicalTable {
    canonical_form(s).0
}

/// `s` relabeled into canonical form (default labels), and the permutation used.
pub fn canonical_semigroup(s: &Semigroup) -> (Semigroup, Vec<usize>) {
    let (table, perm) = canonical_form(s);
    (table.to_semigroup(), perm)
}

/// Number of permutations fixing the table of `s`.
pub fn automorphism_count(s: &Semigroup) -> usize {
    let n = s.order();
    let mut p: Vec<usize> = (0..n).collect();
    let mut count = 0;
    loop {
        if (0..n).all(|i| (0..n).all(|j| s.mul(p[i], p[j]) == p[s.mul(i, j)])) {
            count += 1;
        }
        if !next_permutation(&mut p) {
            return count;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Dedup {
    #[default]
    Labeled,
    UpToIso,
}

/// A finite collection of semigroups used as a test universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corpus {
    pub max_order: usize,
    pub dedup: Dedup,
    pub filter: ClassFilter,
    pub items: Vec<Semigroup>,
}

impl Corpus {
    /// A corpus over explicit items (as loaded from a file); no dedup claim.
    pub fn from_items(items: Vec<Semigroup>) -> Self {
        Self {
            max_order: items.iter().map(Semigroup::order).max().unwrap_or(0),
            dedup: Dedup::Labeled,
            filter: ClassFilter::default(),
            items,
        }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Keeps the items accepted by `filter`.
    pub fn filtered(mut self, filter: &ClassFilter) -> Self {
        self.items.retain(|s| filter.accepts(&classify(s)));
        self.filter.require.extend(&filter.require);
        self.filter.exclude.extend(&filter.exclude);
        self
    }
}

/// The semigroups of order exactly `order`, sorted by canonical table (then
/// by own table for labeled corpora).
pub fn build_corpus(order: usize, dedup: Dedup, filter: Option<&ClassFilter>, ceiling: Ceiling) -> Result<Corpus> {
    ceiling.check(order)?;
    let tables = labeled_tables(order, CellOrder::RowMajor);
    let items: Vec<Semigroup> = match dedup {
        Dedup::UpToIso => {
            let classes: BTreeSet<CanonicalTable> = tables
                .into_par_iter()
                .map(|flat| canonicalize(&Semigroup::from_flat_unchecked(default_names(order), flat)))
                .collect::<Vec<_>>()
                .into_iter()
                .collect();
            classes.iter().map(CanonicalTable::to_semigroup).collect()
        }
        Dedup::Labeled => {
            let mut keyed: Vec<(CanonicalTable, Semigroup)> = tables
                .into_par_iter()
                .map(|flat| {
                    let s = Semigroup::from_flat_unchecked(default_names(order), flat);
                    (canonicalize(&s), s)
                })
                .collect();
            keyed.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.flat_table().cmp(b.1.flat_table())));
            keyed.into_iter().map(|(_, s)| s).collect()
        }
    };
    let corpus = Corpus {
        max_order: order,
        dedup,
        filter: ClassFilter::default(),
        items,
    };
    Ok(match filter {
        Some(f) => corpus.filtered(f),
        None => corpus,
    })
}

/// Orders `1..=max_order` concatenated in increasing order.
pub fn build_corpus_up_to(
    max_order: usize,
    dedup: Dedup,
    filter: Option<&ClassFilter>,
    ceiling: Ceiling,
) -> Result<Corpus> {
    ceiling.check(max_order)?;
    let mut items = Vec::new();
    for order in 1..=max_order {
        items.extend(build_corpus(order, dedup, filter, ceiling)?.items);
    }
    Ok(Corpus {
        max_order,
        dedup,
        filter: filter.cloned().unwrap_or_default(),
        items,
    })
}
