//! Exact dense linear algebra over `Q`.
//!
//! Elimination is fraction-free: each row is scaled to integers and the
//! matrix is brought to echelon form with Bareiss updates, so every
//! intermediate entry is a minor of the input and divisions are exact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::Rat;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix rows");
        RatMatrix {
            rows: rows.len(),
            cols,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rat::from_integer(v.into())).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        Echelon::new(self).pivots.len()
    }

    /// Basis of the right kernel, one vector per free column in increasing
    /// column order. Each vector has a 1 in its free column and zeros in the
    /// other free columns, i.e. the basis read off the reduced echelon form.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let ech = Echelon::new(self);
        let pivot_cols: Vec<usize> = ech.pivots.iter().map(|&(_, c)| c).collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_cols.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rat::zero(); self.cols];
                v[f] = Rat::one();
                for &(r, pc) in ech.pivots.iter().rev() {
                    let row = &ech.rows[r];
                    let mut s = Rat::zero();
                    for j in pc + 1..self.cols {
                        if !row[j].is_zero() && !v[j].is_zero() {
                            s += Rat::from_integer(row[j].clone()) * &v[j];
                        }
                    }
                    v[pc] = -s / Rat::from_integer(row[pc].clone());
                }
                v
            })
            .collect()
    }

    /// Reduced row echelon form of the row space with zero rows dropped.
    pub fn row_reduced(&self) -> Vec<Vec<Rat>> {
        let ech = Echelon::new(self);
        let mut out: Vec<Vec<Rat>> = ech
            .pivots
            .iter()
            .map(|&(r, pc)| {
                let p = Rat::from_integer(ech.rows[r][pc].clone());
                ech.rows[r]
                    .iter()
                    .map(|v| Rat::from_integer(v.clone()) / &p)
                    .collect()
            })
            .collect();
        for i in (0..out.len()).rev() {
            let pc = ech.pivots[i].1;
            for k in 0..i {
                let factor = out[k][pc].clone();
                if factor.is_zero() {
                    continue;
                }
                let (head, tail) = out.split_at_mut(i);
                for (target, v) in head[k][pc..].iter_mut().zip(&tail[0][pc..]) {
                    *target -= &factor * v;
                }
            }
        }
        out
    }
}

/// Integer row echelon form produced by fraction-free elimination.
struct Echelon {
    rows: Vec<Vec<BigInt>>,
    /// `(row, column)` of each pivot, in order.
    pivots: Vec<(usize, usize)>,
}

impl Echelon {
    fn new(m: &RatMatrix) -> Self {
        let mut rows: Vec<Vec<BigInt>> = (0..m.rows).map(|r| integer_row(m.row(r))).collect();
        let mut pivots = Vec::new();
        let mut prev = BigInt::one();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let (head, tail) = rows.split_at_mut(r + 1);
            let pivot_row = &head[r];
            let pv = &pivot_row[c];
            for row in tail.iter_mut() {
                let lead = row[c].clone();
                for j in c..m.cols {
                    let num = pv * &row[j] - &lead * &pivot_row[j];
                    let (q, rem) = num.div_rem(&prev);
                    debug_assert!(rem.is_zero(), "inexact Bareiss division");
                    row[j] = q;
                }
            }
            prev = pv.clone();
            pivots.push((r, c));
            r += 1;
        }
        Echelon { rows, pivots }
    }
}

/// Scales a rational row by the lcm of its denominators.
fn integer_row(row: &[Rat]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    row.iter()
        .map(|v| (v * Rat::from_integer(l.clone())).to_integer())
        .collect()
}
