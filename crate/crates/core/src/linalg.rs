//! Exact ranks and nullspaces over prime fields and over the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::is_prime;
use crate::error::{Error, Result};

/// Ground field of a linear-algebra computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Prime(u64),
    Rational,
}

impl Field {
    pub fn prime(p: u64) -> Result<Self> {
        if !is_prime(p) || p >= 1 << 31 {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    /// 0 for the rationals.
    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Prime(p) => *p,
            Field::Rational => 0,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "F_{p}"),
            Field::Rational => f.write_str("Q"),
        }
    }
}

/// Dense matrix over `F_p`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFieldMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl PrimeFieldMatrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        PrimeFieldMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// Reduces integer rows mod `p`. All rows must have length `cols`.
    pub fn from_int_rows(p: u64, cols: usize, rows: &[Vec<i64>]) -> Self {
        let mut m = Self::zeros(p, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols);
            for (j, &x) in row.iter().enumerate() {
                m.data[i * cols + j] = x.rem_euclid(p as i64) as u64;
            }
        }
        m
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: u64) {
        self.data[i * self.cols + j] = value % self.p;
    }

    fn inverse(&self, a: u64) -> u64 {
        // Fermat.
        let mut result = 1u64;
        let mut base = a % self.p;
        let mut e = self.p - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        result
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let p = self.p;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(pivot) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if pivot != r {
                for j in 0..cols {
                    self.data.swap(pivot * cols + j, r * cols + j);
                }
            }
            let inv = self.inverse(self.get(r, c));
            for j in c..cols {
                let x = self.data[r * cols + j];
                self.data[r * cols + j] = x * inv % p;
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.data[i * cols + c];
                if factor == 0 {
                    continue;
                }
                for j in c..cols {
                    let sub = factor * self.data[r * cols + j] % p;
                    let x = self.data[i * cols + j];
                    self.data[i * cols + j] = (x + p - sub) % p;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().row_reduce().len()
    }

    /// Basis of `{x : A x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        let mut m = self.clone();
        let pivots = m.row_reduce();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u64; self.cols];
                v[f] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    let x = m.get(r, f);
                    v[pc] = (self.p - x) % self.p;
                }
                v
            })
            .collect()
    }
}

/// Rank of an integer matrix reduced mod `p`.
pub fn rank_mod_p(cols: usize, rows: &[Vec<i64>], p: u64) -> usize {
    if rows.is_empty() || cols == 0 {
        return 0;
    }
    PrimeFieldMatrix::from_int_rows(p, cols, rows).rank()
}

/// Rank over `Q` of an integer matrix by fraction-free (Bareiss)
/// elimination.
pub fn rank_rational(cols: usize, rows: &[Vec<i64>]) -> usize {
    if rows.is_empty() || cols == 0 {
        return 0;
    }
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let n_rows = m.len();
    let mut previous = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        if r == n_rows {
            break;
        }
        let Some(pivot) = (r..n_rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(pivot, r);
        let (head, tail) = m.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..cols {
                let value = &pivot_row[c] * &row[j] - &lead * &pivot_row[j];
                debug_assert!((&value % &previous).is_zero());
                row[j] = value / &previous;
            }
            row[c] = BigInt::zero();
        }
        previous = m[r][c].clone();
        r += 1;
    }
    r
}

pub fn rank_over(field: Field, cols: usize, rows: &[Vec<i64>]) -> usize {
    match field {
        Field::Prime(p) => rank_mod_p(cols, rows, p),
        Field::Rational => rank_rational(cols, rows),
    }
}
