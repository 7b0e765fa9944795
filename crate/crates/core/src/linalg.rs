//! Exact rank computation for sparse integer matrices, over a prime field
//! GF(p) or over the rationals.
//!
//! Ranks over GF(p) use Gaussian elimination on residues (dense for small
//! matrices, structurally sparse otherwise). Ranks over Q use fraction-free
//! Bareiss elimination on big integers, so no rational arithmetic and no
//! overflow can occur.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Coefficient field for homology computations.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FieldSpec {
    /// The prime field with `p` elements, `2 <= p < 2^31`.
    GF(u64),
    /// The rationals.
    Q,
}

impl FieldSpec {
    /// Validated construction of GF(p).
    pub fn gf(p: u64) -> Result<Self> {
        if !(2..1 << 31).contains(&p) {
            return Err(Error::CharacteristicRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::GF(p))
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "q" {
            return Ok(FieldSpec::Q);
        }
        if let Some(rest) = s.strip_prefix("gf:") {
            let p: u64 =
                rest.parse().map_err(|_| Error::FieldSpecSyntax(s.to_string()))?;
            return FieldSpec::gf(p);
        }
        Err(Error::FieldSpecSyntax(s.to_string()))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::GF(p) => write!(f, "gf:{p}"),
            FieldSpec::Q => write!(f, "q"),
        }
    }
}

/// Deterministic trial-division primality check, adequate for p < 2^31.
fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// A sparse integer matrix stored row-major; each row lists
/// `(column, coefficient)` pairs sorted by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    /// Set an entry; each `(row, col)` must be touched at most once and
    /// columns must be added in increasing order within a row.
    pub fn push(&mut self, row: usize, col: usize, value: i64) {
        debug_assert!(row < self.rows && col < self.cols);
        debug_assert!(self.data[row].last().is_none_or(|&(c, _)| c < col));
        if value != 0 {
            self.data[row].push((col, value));
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_entries(&self, row: usize) -> &[(usize, i64)] {
        &self.data[row]
    }

    pub fn num_nonzero(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn transpose(&self) -> Self {
        let mut out = SparseMatrix::zero(self.cols, self.rows);
        for (r, row) in self.data.iter().enumerate() {
            for &(c, v) in row {
                out.data[c].push((r, v));
            }
        }
        // pushing rows in order keeps each transposed row sorted
        out
    }

    /// Rank over the given coefficient field.
    pub fn rank(&self, field: FieldSpec) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        match field {
            FieldSpec::GF(p) => {
                if self.rows < 64 && self.cols < 64 {
                    self.rank_gf_dense(p)
                } else {
                    self.rank_gf_sparse(p)
                }
            }
            FieldSpec::Q => self.rank_q(),
        }
    }

    fn rank_gf_dense(&self, p: u64) -> usize {
        let mut m = vec![vec![0u64; self.cols]; self.rows];
        for (r, row) in self.data.iter().enumerate() {
            for &(c, v) in row {
                m[r][c] = v.rem_euclid(p as i64) as u64;
            }
        }
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, pivot);
            let inv = mod_inverse(m[rank][col], p);
            for c in col..self.cols {
                m[rank][c] = m[rank][c] * inv % p;
            }
            for r in 0..self.rows {
                if r != rank && m[r][col] != 0 {
                    let factor = m[r][col];
                    for c in col..self.cols {
                        m[r][c] = (m[r][c] + (p - factor) * m[rank][c] % p) % p;
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    fn rank_gf_sparse(&self, p: u64) -> usize {
        // Row-echelon on sparse rows. Pending rows are processed sparsest
        // first so that the pivot stored for each leading column tends to be
        // short, which limits fill-in during later reductions.
        let mut pending: Vec<Vec<(usize, u64)>> = self
            .data
            .iter()
            .filter(|row| !row.is_empty())
            .map(|row| {
                row.iter()
                    .map(|&(c, v)| (c, v.rem_euclid(p as i64) as u64))
                    .filter(|&(_, v)| v != 0)
                    .collect()
            })
            .collect();
        pending.sort_by_key(Vec::len);

        let mut pivot_for_col: Vec<Option<Vec<(usize, u64)>>> = vec![None; self.cols];
        let mut rank = 0;
        for mut row in pending {
            loop {
                let Some(&(lead, coeff)) = row.first() else { break };
                match &pivot_for_col[lead] {
                    Some(pivot) => {
                        // row -= coeff * pivot (pivot is normalized to lead 1)
                        row = sparse_axpy(&row, pivot, p - coeff, p);
                    }
                    None => {
                        let inv = mod_inverse(coeff, p);
                        for entry in &mut row {
                            entry.1 = entry.1 * inv % p;
                        }
                        pivot_for_col[lead] = Some(row);
                        rank += 1;
                        break;
                    }
                }
            }
        }
        rank
    }

    fn rank_q(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> =
            vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (r, row) in self.data.iter().enumerate() {
            for &(c, v) in row {
                m[r][c] = BigInt::from(v);
            }
        }
        bareiss_rank(&mut m)
    }
}

/// `a + factor * b` over GF(p), on sorted sparse rows.
fn sparse_axpy(
    a: &[(usize, u64)],
    b: &[(usize, u64)],
    factor: u64,
    p: u64,
) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let (col, val) = if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            let e = a[i];
            i += 1;
            e
        } else if i >= a.len() || b[j].0 < a[i].0 {
            let e = (b[j].0, factor * b[j].1 % p);
            j += 1;
            e
        } else {
            let e = (a[i].0, (a[i].1 + factor * b[j].1) % p);
            i += 1;
            j += 1;
            e
        };
        if val != 0 {
            out.push((col, val));
        }
    }
    out
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    // p < 2^31 keeps every product below 2^62
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Fraction-free Gaussian elimination (Bareiss one-step division rule) with
/// column skipping; every division is exact, so this computes the rank over
/// the rationals using only integer arithmetic.
fn bareiss_rank(m: &mut [Vec<BigInt>]) -> usize {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..rows {
            for c in col + 1..cols {
                let num = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                m[r][c] = num / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
