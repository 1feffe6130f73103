//! Brute-force oracles written directly from the definitions, sharing no
//! code with the library beyond its data types.

#![allow(dead_code)]

use qfideal_core::{CrispKind, Grade};

pub type Table = Vec<Vec<usize>>;
/// `mu[x][q]`.
pub type Rows = Vec<Vec<Grade>>;

pub fn g(s: &str) -> Grade {
    s.parse().unwrap()
}

pub fn is_associative(t: &Table) -> bool {
    let n = t.len();
    (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a][b]][c] == t[a][t[b][c]])))
}

/// Every associative table of order `n`, in lexicographic order of the
/// flattened table.
pub fn naive_tables(n: usize) -> Vec<Vec<usize>> {
    let cells = n * n;
    let total = n.pow(cells as u32);
    let mut out = Vec::new();
    for mut code in 0..total {
        let mut flat = vec![0; cells];
        for slot in flat.iter_mut().rev() {
            *slot = code % n;
            code /= n;
        }
        let t: Table = flat.chunks(n).map(<[usize]>::to_vec).collect();
        if is_associative(&t) {
            out.push(flat);
        }
    }
    out
}

pub fn rows_of(flat: &[usize], n: usize) -> Table {
    flat.chunks(n).map(<[usize]>::to_vec).collect()
}

fn nonzero(mu: &Rows) -> bool {
    mu.iter().flatten().any(|g| *g > Grade::ZERO)
}

/// Q-fuzzy `kind` decided from the defining inequalities.
pub fn fuzzy_kind(t: &Table, mu: &Rows, kind: CrispKind) -> bool {
    let n = t.len();
    let m = mu[0].len();
    let all = |f: &dyn Fn(usize, usize, usize) -> bool| (0..n).all(|x| (0..n).all(|y| (0..m).all(|q| f(x, y, q))));
    let left = || all(&|x, y, q| mu[t[x][y]][q] >= mu[y][q]);
    let right = || all(&|x, y, q| mu[t[x][y]][q] >= mu[x][q]);
    let closed = || all(&|x, y, q| mu[t[x][y]][q] >= mu[x][q].min(mu[y][q]));
    let ok = match kind {
        CrispKind::Subsemigroup => closed(),
        CrispKind::InteriorIdeal => closed() && (0..n).all(|a| all(&|x, y, q| mu[t[t[x][a]][y]][q] >= mu[a][q])),
        CrispKind::LeftIdeal => left(),
        CrispKind::RightIdeal => right(),
        CrispKind::Ideal => left() && right(),
        CrispKind::CompletelyPrime => left() && right() && all(&|x, y, q| mu[t[x][y]][q] == mu[x][q].max(mu[y][q])),
        CrispKind::CompletelySemiprime => left() && right() && all(&|x, _, q| mu[x][q] >= mu[t[x][x]][q]),
    };
    ok && nonzero(mu)
}

/// Crisp `kind` on a subset given as a membership vector.
pub fn crisp_kind(t: &Table, a: &[bool], kind: CrispKind) -> bool {
    let chi: Rows = a
        .iter()
        .map(|&b| vec![if b { Grade::ONE } else { Grade::ZERO }])
        .collect();
    fuzzy_kind(t, &chi, kind)
}

pub fn extension(t: &Table, mu: &Rows, x: usize) -> Rows {
    (0..t.len()).map(|y| mu[t[x][y]].clone()).collect()
}

pub fn level(mu: &Rows, th: Grade) -> Vec<bool> {
    mu.iter().map(|row| row.iter().all(|g| *g >= th)).collect()
}

pub fn constant_per_q(mu: &Rows) -> bool {
    mu.iter().all(|row| row == &mu[0])
}
