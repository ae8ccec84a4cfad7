use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::{DenseMatrix, SparseIntMatrix};

/// `D = U·A·V` with `U`, `V` unimodular and `D` diagonal, `d_1 | d_2 | …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub u: DenseMatrix,
    pub d: DenseMatrix,
    pub v: DenseMatrix,
}

impl SnfResult {
    /// Diagonal entries, including trailing zeros, of length min(rows, cols).
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols)).map(|i| self.d.data[i][i].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

struct Engine {
    a: DenseMatrix,
    u: Option<DenseMatrix>,
    v: Option<DenseMatrix>,
}

impl Engine {
    fn row_axpy(&mut self, dst: usize, src: usize, q: &BigInt, from: usize) {
        // row_dst -= q * row_src
        for j in from..self.a.cols {
            if !self.a.data[src][j].is_zero() {
                let t = q * &self.a.data[src][j];
                self.a.data[dst][j] -= t;
            }
        }
        if let Some(u) = &mut self.u {
            for j in 0..u.cols {
                if !u.data[src][j].is_zero() {
                    let t = q * &u.data[src][j];
                    u.data[dst][j] -= t;
                }
            }
        }
    }

    fn col_axpy(&mut self, dst: usize, src: usize, q: &BigInt, from: usize) {
        for i in from..self.a.rows {
            if !self.a.data[i][src].is_zero() {
                let t = q * &self.a.data[i][src];
                self.a.data[i][dst] -= t;
            }
        }
        if let Some(v) = &mut self.v {
            for i in 0..v.rows {
                if !v.data[i][src].is_zero() {
                    let t = q * &v.data[i][src];
                    v.data[i][dst] -= t;
                }
            }
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.data.swap(i, j);
            if let Some(u) = &mut self.u {
                u.data.swap(i, j);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            for row in &mut self.a.data {
                row.swap(i, j);
            }
            if let Some(v) = &mut self.v {
                for row in &mut v.data {
                    row.swap(i, j);
                }
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.a.data[i] {
            *x = -std::mem::take(x);
        }
        if let Some(u) = &mut self.u {
            for x in &mut u.data[i] {
                *x = -std::mem::take(x);
            }
        }
    }

    fn run(&mut self) {
        let (m, n) = (self.a.rows, self.a.cols);
        for t in 0..m.min(n) {
            // smallest |entry| in the trailing block, lexicographic tie-break
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    let x = &self.a.data[i][j];
                    if x.is_zero() {
                        continue;
                    }
                    match best {
                        Some((bi, bj)) if self.a.data[bi][bj].magnitude() <= x.magnitude() => {}
                        _ => best = Some((i, j)),
                    }
                }
            }
            let Some((pi, pj)) = best else { return };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let p = self.a.data[t][t].clone();
                for i in t + 1..m {
                    if !self.a.data[i][t].is_zero() {
                        let q = self.a.data[i][t].div_floor(&p);
                        self.row_axpy(i, t, &q, t);
                    }
                }
                if let Some(i) = self.smallest_in_col(t) {
                    self.swap_rows(t, i);
                    continue;
                }
                let p = self.a.data[t][t].clone();
                for j in t + 1..n {
                    if !self.a.data[t][j].is_zero() {
                        let q = self.a.data[t][j].div_floor(&p);
                        self.col_axpy(j, t, &q, t);
                    }
                }
                if let Some(j) = self.smallest_in_row(t) {
                    self.swap_cols(t, j);
                    continue;
                }
                let bad = (t + 1..m).find(|&i| {
                    (t + 1..n).any(|j| !self.a.data[i][j].is_multiple_of(&p))
                });
                match bad {
                    Some(i) => {
                        let minus_one = BigInt::from(-1);
                        self.row_axpy(t, i, &minus_one, t);
                    }
                    None => break,
                }
            }
            if self.a.data[t][t].is_negative() {
                self.negate_row(t);
            }
        }
    }

    fn smallest_in_col(&self, t: usize) -> Option<usize> {
        (t + 1..self.a.rows)
            .filter(|&i| !self.a.data[i][t].is_zero())
            .min_by(|&x, &y| self.a.data[x][t].magnitude().cmp(self.a.data[y][t].magnitude()).then(x.cmp(&y)))
    }

    fn smallest_in_row(&self, t: usize) -> Option<usize> {
        (t + 1..self.a.cols)
            .filter(|&j| !self.a.data[t][j].is_zero())
            .min_by(|&x, &y| self.a.data[t][x].magnitude().cmp(self.a.data[t][y].magnitude()).then(x.cmp(&y)))
    }
}

pub fn snf_dense(a: &DenseMatrix) -> SnfResult {
    let mut e = Engine {
        a: a.clone(),
        u: Some(DenseMatrix::identity(a.rows)),
        v: Some(DenseMatrix::identity(a.cols)),
    };
    e.run();
    SnfResult { u: e.u.expect("tracked"), d: e.a, v: e.v.expect("tracked") }
}

/// Smith normal form with transforms.
pub fn snf(a: &SparseIntMatrix) -> SnfResult {
    snf_dense(&a.to_dense())
}

/// Nonzero invariant factors only, skipping the transforms.
pub fn invariant_factors(a: &DenseMatrix) -> Vec<BigInt> {
    let mut e = Engine { a: a.clone(), u: None, v: None };
    e.run();
    (0..a.rows.min(a.cols))
        .map(|i| e.a.data[i][i].clone())
        .filter(|x| !x.is_zero())
        .collect()
}
