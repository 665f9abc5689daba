//! Smith normal form of integer matrices and the abelian groups they present.

use core::fmt;

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: alloc::vec![BigInt::zero(); rows * cols],
        }
    }

    /// Every row must have length `cols`.
    pub fn from_rows<T: Into<BigInt> + Clone>(cols: usize, rows: &[Vec<T>]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged integer matrix");
            for (j, v) in row.iter().enumerate() {
                m.data[i * cols + j] = v.clone().into();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn push_row(&mut self, row: Vec<BigInt>) {
        assert_eq!(row.len(), self.cols, "ragged integer matrix");
        self.data.extend(row);
        self.rows += 1;
    }

    fn swap_rows(&mut self, i: usize, k: usize) {
        if i == k {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(i * self.cols + j, k * self.cols + j);
        }
    }

    fn swap_cols(&mut self, j: usize, k: usize) {
        if j == k {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + j, i * self.cols + k);
        }
    }

    /// row[target] -= q·row[source]
    fn row_axpy(&mut self, target: usize, source: usize, q: &BigInt) {
        for j in 0..self.cols {
            let d = &self.data[source * self.cols + j] * q;
            self.data[target * self.cols + j] -= d;
        }
    }

    /// col[target] -= q·col[source]
    fn col_axpy(&mut self, target: usize, source: usize, q: &BigInt) {
        for i in 0..self.rows {
            let d = &self.data[i * self.cols + source] * q;
            self.data[i * self.cols + target] -= d;
        }
    }
}

/// A finitely generated abelian group Z^r ⊕ Z/d₁ ⊕ … ⊕ Z/dₙ with
/// d₁ | d₂ | … | dₙ and every dᵢ > 1.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of a finite group; `None` when the free rank is positive.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite()
            .then(|| self.torsion.iter().fold(BigInt::one(), |acc, d| acc * d))
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<alloc::string::String> = Vec::new();
        if self.free_rank > 0 {
            parts.push(alloc::format!("Z^{}", self.free_rank));
        }
        parts.extend(self.torsion.iter().map(|d| alloc::format!("Z/{}", d)));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// Diagonal of the Smith normal form (nonzero entries only, positive, each
/// dividing the next).
pub fn smith_diagonal(m: &IntegerMatrix) -> Vec<BigInt> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // Pivot: smallest nonzero absolute value in the trailing block.
        let Some((pi, pj)) = min_nonzero(&a, t) else {
            break;
        };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = a.get(i, t).div_floor(a.get(t, t));
                a.row_axpy(i, t, &q);
                if !a.get(i, t).is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = a.get(t, j).div_floor(a.get(t, t));
                a.col_axpy(j, t, &q);
                if !a.get(t, j).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // A smaller remainder appeared in row/column t; move it to the pivot.
                let (pi, pj) = min_in_cross(&a, t);
                a.swap_rows(t, pi);
                a.swap_cols(t, pj);
                continue;
            }
            // Row and column clear; enforce divisibility of the trailing block.
            let p = a.get(t, t).clone();
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !a.get(i, j).is_multiple_of(&p))
            });
            match offender {
                Some(i) => a.row_axpy(t, i, &BigInt::from(-1)),
                None => break,
            }
        }
        diag.push(a.get(t, t).abs());
    }
    diag
}

fn min_nonzero(a: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..a.rows {
        for j in t..a.cols {
            let v = a.get(i, j);
            if v.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| v.abs() < a.get(bi, bj).abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn min_in_cross(a: &IntegerMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let mut bv = a.get(t, t).abs();
    let mut consider = |i: usize, j: usize, best: &mut (usize, usize)| {
        let v = a.get(i, j).abs();
        if !v.is_zero() && (bv.is_zero() || v < bv) {
            bv = v;
            *best = (i, j);
        }
    };
    for i in t + 1..a.rows {
        consider(i, t, &mut best);
    }
    for j in t + 1..a.cols {
        consider(t, j, &mut best);
    }
    best
}

/// Cokernel of the row lattice: Z^cols / ⟨rows⟩.
pub fn snf(m: &IntegerMatrix) -> AbelianGroup {
    let diag = smith_diagonal(m);
    AbelianGroup {
        free_rank: m.cols - diag.len(),
        torsion: diag.into_iter().filter(|d| !d.is_one()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn group(cols: usize, rows: &[Vec<i64>]) -> AbelianGroup {
        snf(&IntegerMatrix::from_rows(cols, rows))
    }

    #[test]
    fn kernel_quotients() {
        let kl = vec![vec![1, -1, 1, 0, 0, 0], vec![0, 0, 0, 1, -1, 1]];
        let g = group(6, &kl);
        assert_eq!(g.free_rank, 4);
        assert!(g.torsion.is_empty());
        let mut kn = kl.clone();
        kn.push(vec![0, 0, 0, 0, 0, 1]);
        assert_eq!(group(6, &kn).free_rank, 3);
        assert_eq!(group(6, &[]).free_rank, 6);
    }

    #[test]
    fn torsion_chain() {
        let g = group(2, &[vec![3, 0], vec![0, 4]]);
        assert_eq!(g, AbelianGroup { free_rank: 0, torsion: vec![BigInt::from(12)] });
        let g = group(2, &[vec![3, 0], vec![0, 4], vec![2, 2]]);
        assert_eq!(g.torsion, vec![BigInt::from(2)]);
        let g = group(3, &[vec![2, 0, 0], vec![0, 4, 0], vec![0, 0, 8]]);
        assert_eq!(g.torsion, [2, 4, 8].map(BigInt::from).to_vec());
        let g = group(2, &[vec![6, 0], vec![0, 4]]);
        assert_eq!(g.torsion, [2, 12].map(BigInt::from).to_vec());
    }

    #[test]
    fn zero_rows_are_harmless() {
        let g = group(3, &[vec![0, 0, 0], vec![0, 5, 0]]);
        assert_eq!(g.free_rank, 2);
        assert_eq!(g.torsion, vec![BigInt::from(5)]);
    }
}
