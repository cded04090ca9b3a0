//! Exact rank computation by fraction-free elimination over the integers.
//!
//! Rows are sparse: sorted `(column, value)` pairs with nonzero values.
//! A row is reduced against the pivot row owning its leading column by
//! `row <- p*row - a*pivot` and then divided by the gcd of its entries, so
//! entries stay integral and small.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::poly::Rational;

/// Sparse integer row: strictly increasing columns, nonzero entries.
pub type SparseRow = Vec<(usize, BigInt)>;

/// Incremental row-echelon basis. Inserting a row reports whether it was
/// independent of the rows inserted before it.
#[derive(Debug, Default)]
pub struct EchelonBasis {
    pivots: HashMap<usize, SparseRow>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces the row and keeps it if it is independent. Returns `true` when
    /// the rank grew.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let mut row = normalize(row);
        while let Some(&(lead, _)) = row.first() {
            match self.pivots.get(&lead) {
                Some(pivot) => row = eliminate(&row, pivot),
                None => {
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
        false
    }
}

/// Rank of a matrix given as sparse integer rows.
pub fn rank(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    let mut rows: Vec<SparseRow> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    rows.sort_by_key(|r| r.len());
    let mut basis = EchelonBasis::new();
    for r in rows {
        basis.insert(r);
    }
    basis.rank()
}

/// Rank of a dense rational matrix. Each row is scaled by the lcm of its
/// denominators before elimination.
pub fn rank_rational(rows: &[Vec<Rational>]) -> usize {
    rank(rows.iter().map(|r| clear_denominators(r)))
}

fn clear_denominators(row: &[Rational]) -> SparseRow {
    let lcm = row
        .iter()
        .filter(|q| !q.is_zero())
        .fold(BigInt::from(1), |acc, q| acc.lcm(q.denom()));
    row.iter()
        .enumerate()
        .filter(|(_, q)| !q.is_zero())
        .map(|(c, q)| (c, q.numer() * (&lcm / q.denom())))
        .collect()
}

fn normalize(mut row: SparseRow) -> SparseRow {
    row.retain(|(_, v)| !v.is_zero());
    let Some(first) = row.first() else {
        return row;
    };
    let mut g = first.1.abs();
    for (_, v) in &row[1..] {
        if g == BigInt::from(1) {
            break;
        }
        g = g.gcd(v);
    }
    if first.1.is_negative() {
        g = -g;
    }
    if g != BigInt::from(1) {
        for (_, v) in row.iter_mut() {
            *v /= &g;
        }
    }
    row
}

/// `p*row - a*pivot`, where `a`, `p` are the leading entries of `row` and
/// `pivot` (same leading column), divided by the common gcd.
fn eliminate(row: &SparseRow, pivot: &SparseRow) -> SparseRow {
    let a = &row[0].1;
    let p = &pivot[0].1;
    let g = a.gcd(p);
    let a = a / &g;
    let p = p / &g;
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map(|e| e.0);
        let cj = pivot.get(j).map(|e| e.0);
        match (ci, cj) {
            (Some(x), Some(y)) if x == y => {
                out.push((x, &p * &row[i].1 - &a * &pivot[j].1));
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push((x, &p * &row[i].1));
                i += 1;
            }
            (Some(x), None) => {
                out.push((x, &p * &row[i].1));
                i += 1;
            }
            (_, Some(y)) => {
                out.push((y, -(&a * &pivot[j].1)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    normalize(out)
}
