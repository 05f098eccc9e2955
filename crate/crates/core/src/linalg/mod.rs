//! Exact linear algebra over the rationals.
//!
//! Dense [`RationalMatrix`] values are the public currency; internally every
//! computation clears denominators and runs fraction-free on sparse integer
//! rows ([`sparse`]), so nothing here ever rounds.

pub mod int;
pub mod sparse;

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub use int::Int;
pub use sparse::{Echelon, IntVec, Rref};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("column {column} of P·K lies outside the span of K")]
    NotInvariant { column: usize },
    #[error("ambient dimensions differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
}

#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RationalMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::Shape("ragged rows".into()));
        }
        Ok(RationalMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, BigRational::from_integer(BigInt::from(*v)));
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

    pub fn get(&self, r: usize, c: usize) -> &BigRational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigRational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[BigRational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<BigRational> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j) + a * b;
                        out.set(i, j, cur);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> BigRational {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .fold(BigRational::zero(), |a, b| a + b)
    }

    /// Gauss-Jordan inverse; `None` when singular or not square.
    pub fn inverse(&self) -> Option<RationalMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for c in 0..n {
            let p = (c..n).find(|&r| !a.get(r, c).is_zero())?;
            if p != c {
                for j in 0..n {
                    a.data.swap(p * n + j, c * n + j);
                    inv.data.swap(p * n + j, c * n + j);
                }
            }
            let piv = a.get(c, c).clone();
            for j in 0..n {
                let x = a.get(c, j) / &piv;
                a.set(c, j, x);
                let y = inv.get(c, j) / &piv;
                inv.set(c, j, y);
            }
            for r in 0..n {
                if r == c || a.get(r, c).is_zero() {
                    continue;
                }
                let f = a.get(r, c).clone();
                for j in 0..n {
                    let x = a.get(r, j) - &f * a.get(c, j);
                    a.set(r, j, x);
                    let y = inv.get(r, j) - &f * inv.get(c, j);
                    inv.set(r, j, y);
                }
            }
        }
        Some(inv)
    }

    /// `M v` for a dense vector.
    pub fn apply(&self, v: &[BigRational]) -> Vec<BigRational> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    fn integer_rows(&self) -> Vec<IntVec> {
        (0..self.rows)
            .map(|r| {
                let pairs: Vec<(u32, BigRational)> = self
                    .row(r)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(c, v)| (c as u32, v.clone()))
                    .collect();
                IntVec::from_rationals(&pairs)
            })
            .collect()
    }

    fn integer_columns(&self) -> Vec<IntVec> {
        self.transpose().integer_rows()
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.cols);
        for row in self.integer_rows() {
            e.insert(row);
        }
        e
    }
}

/// Exact rank by fraction-free elimination.
pub fn rank(m: &RationalMatrix) -> usize {
    m.echelon().rank()
}

/// Basis of a linear subspace of Q^ambient, stored in reduced column form:
/// column `j` is nonzero at `pivots[j]` and zero at every other pivot, so
/// coordinates of a member vector are read off at the pivots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    ambient: usize,
    columns: Vec<IntVec>,
    pivots: Vec<u32>,
}

impl SubspaceBasis {
    pub fn empty(ambient: usize) -> Self {
        SubspaceBasis {
            ambient,
            columns: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Basis of the span of arbitrary (possibly dependent) vectors.
    pub fn span(ambient: usize, vectors: impl IntoIterator<Item = IntVec>) -> Self {
        let mut e = Echelon::new(ambient);
        for v in vectors {
            e.insert(v);
        }
        Self::from_rref(e.into_rref())
    }

    fn from_rref(r: Rref) -> Self {
        let ambient = r.free_cols().len() + r.rank();
        let pivots = r.pivots();
        SubspaceBasis {
            ambient,
            columns: r.rows().to_vec(),
            pivots,
        }
    }

    /// Trusted constructor: `columns[j]` must vanish at `pivots[i]` for `i != j`.
    pub fn from_reduced(ambient: usize, columns: Vec<IntVec>, pivots: Vec<u32>) -> Self {
        debug_assert_eq!(columns.len(), pivots.len());
        debug_assert!(columns.iter().enumerate().all(|(j, c)| pivots
            .iter()
            .enumerate()
            .all(|(i, p)| (i == j) != c.get(*p).is_zero())));
        SubspaceBasis {
            ambient,
            columns,
            pivots,
        }
    }

    pub fn from_matrix_columns(m: &RationalMatrix) -> Self {
        Self::span(m.rows(), m.integer_columns())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[IntVec] {
        &self.columns
    }

    pub fn pivots(&self) -> &[u32] {
        &self.pivots
    }

    pub fn to_matrix(&self) -> RationalMatrix {
        let mut m = RationalMatrix::zeros(self.ambient, self.dim());
        for (j, c) in self.columns.iter().enumerate() {
            for (i, v) in c.entries() {
                m.set(*i as usize, j, BigRational::from_integer(v.to_bigint()));
            }
        }
        m
    }

    /// Coordinates read off at the pivots, without checking membership.
    pub fn pivot_coordinates(&self, v: &IntVec) -> Vec<BigRational> {
        self.columns
            .iter()
            .zip(&self.pivots)
            .map(|(c, p)| {
                BigRational::new(v.get(*p).to_bigint(), c.get(*p).to_bigint())
            })
            .collect()
    }

    /// Coordinates of `v` in this basis, or `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &IntVec) -> Option<Vec<BigRational>> {
        let coords = self.pivot_coordinates(v);
        // v * L == sum (coord_j * L) * col_j for a common denominator L
        let mut l = BigInt::one();
        for c in &coords {
            l = num_integer::Integer::lcm(&l, c.denom());
        }
        let li = Int::from(l.clone());
        let mut residual = v.scale(&li);
        for (c, col) in coords.iter().zip(&self.columns) {
            if c.is_zero() {
                continue;
            }
            let k = Int::from(c.numer() * (&l / c.denom()));
            residual = residual.combine(&Int::ONE, col, &k);
        }
        residual.is_zero().then_some(coords)
    }

    pub fn contains(&self, v: &IntVec) -> bool {
        self.coordinates(v).is_some()
    }
}

/// Basis of `{v : M v = 0}`; its size is `cols - rank(M)`.
pub fn kernel_basis(m: &RationalMatrix) -> SubspaceBasis {
    let rref = m.echelon().into_rref();
    let (pivots, columns): (Vec<u32>, Vec<IntVec>) = rref.kernel().into_iter().unzip();
    SubspaceBasis::from_reduced(m.cols(), columns, pivots)
}

/// The matrix `M` with `P·K = K·M`, requiring the span of `K` to be `P`-invariant.
pub fn restrict_endomorphism(
    k: &SubspaceBasis,
    p: &RationalMatrix,
) -> Result<RationalMatrix, LinalgError> {
    if p.rows() != k.ambient_dim() || p.cols() != k.ambient_dim() {
        return Err(LinalgError::Shape(format!(
            "endomorphism {}x{} on ambient {}",
            p.rows(),
            p.cols(),
            k.ambient_dim()
        )));
    }
    let r = k.dim();
    let mut m = RationalMatrix::zeros(r, r);
    for (j, col) in k.columns().iter().enumerate() {
        let mut image = vec![BigRational::zero(); p.rows()];
        for (c, v) in col.entries() {
            let v = BigRational::from_integer(v.to_bigint());
            for (i, slot) in image.iter_mut().enumerate() {
                let a = p.get(i, *c as usize);
                if !a.is_zero() {
                    *slot += a * &v;
                }
            }
        }
        let pairs: Vec<(u32, BigRational)> = image
            .into_iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i as u32, x))
            .collect();
        // from_rationals rescales; undo it after reading coordinates
        let scaled = IntVec::from_rationals(&pairs);
        let factor = match pairs.first() {
            Some((i, x)) => x / BigRational::from_integer(scaled.get(*i).to_bigint()),
            None => BigRational::zero(),
        };
        let coords = k
            .coordinates(&scaled)
            .ok_or(LinalgError::NotInvariant { column: j })?;
        for (i, c) in coords.into_iter().enumerate() {
            m.set(i, j, c * &factor);
        }
    }
    Ok(m)
}

/// `(dim(A + B), dim(A ∩ B))`.
pub fn sum_and_intersection_dims(
    a: &SubspaceBasis,
    b: &SubspaceBasis,
) -> Result<(usize, usize), LinalgError> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(LinalgError::AmbientMismatch {
            left: a.ambient_dim(),
            right: b.ambient_dim(),
        });
    }
    let mut e = Echelon::new(a.ambient_dim());
    for c in a.columns().iter().chain(b.columns()) {
        e.insert(c.clone());
    }
    let sum = e.rank();
    Ok((sum, a.dim() + b.dim() - sum))
}
