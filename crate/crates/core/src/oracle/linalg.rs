use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::Rat;

/// Dense matrix over Q, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    /// Builds a `rows x columns.len()` matrix; shorter columns are padded
    /// with zeros.
    pub fn from_columns(rows: usize, columns: &[Vec<Rat>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            assert!(col.len() <= rows, "column longer than the matrix");
            for (r, x) in col.iter().enumerate() {
                m.set(r, c, x.clone());
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

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Rat) {
        self.data[r * self.cols + c] = x;
    }

    pub fn column(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn apply(&self, x: &[Rat]) -> Vec<Rat> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .filter(|&c| !x[c].is_zero())
                    .fold(Rat::zero(), |acc, c| acc + self.get(r, c) * &x[c])
            })
            .collect()
    }

    /// Rows scaled to primitive integer vectors; the row space is unchanged.
    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|r| integer_vector(&self.data[r * self.cols..(r + 1) * self.cols]))
            .filter(|row| row.iter().any(|x| !x.is_zero()))
            .collect()
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.integer_rows();
        bareiss(&mut rows, self.cols).len()
    }

    /// Basis of `{x : M x = 0}` in reduced row echelon form, so equal
    /// kernels give identical output.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let mut rows = self.integer_rows();
        let pivots = bareiss(&mut rows, self.cols);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut x = vec![Rat::zero(); self.cols];
            x[f] = Rat::one();
            for (i, &p) in pivots.iter().enumerate().rev() {
                let s = (p + 1..self.cols)
                    .filter(|&c| !x[c].is_zero() && !rows[i][c].is_zero())
                    .fold(Rat::zero(), |acc, c| acc + Rat::from_integer(rows[i][c].clone()) * &x[c]);
                x[p] = -s / Rat::from_integer(rows[i][p].clone());
            }
            basis.push(x);
        }
        rref(basis)
    }
}

/// Clears denominators and divides out the content.
pub(crate) fn integer_vector(v: &[Rat]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

/// Fraction-free (Bareiss) row echelon form in place. Returns the pivot
/// columns; rows past the rank are dropped.
fn bareiss(rows: &mut Vec<Vec<BigInt>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let (top, rest) = rows.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for k in c + 1..cols {
                let v = &pivot_row[c] * &row[k] - &lead * &pivot_row[k];
                row[k] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = rows[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Canonical basis of the span of `vectors`: reduced row echelon form with
/// unit pivots and zero rows removed.
pub fn rref(vectors: Vec<Vec<Rat>>) -> Vec<Vec<Rat>> {
    let Some(cols) = vectors.first().map(Vec::len) else {
        return Vec::new();
    };
    let mut rows: Vec<Vec<Rat>> = vectors;
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rat::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    rows
}

/// Dimension of the span.
pub fn span_rank(vectors: &[Vec<Rat>]) -> usize {
    rref(vectors.to_vec()).len()
}
