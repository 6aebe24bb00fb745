use std::fmt;
use std::ops::Index;

use super::scalar::{Backend, Scalar};
use super::univariate::UniPoly;
use super::{rat, Rational};
use crate::error::{AlgebraError, Result};

pub const MAX_DIM: usize = 8;

/// Dense `d × d` matrix (`1 ≤ d ≤ 8`) whose entries share one backend.
#[derive(Debug, Clone)]
pub struct SquareMatrix {
    backend: Backend,
    dim: usize,
    entries: Vec<Scalar>,
}

fn check_dim(dim: usize) -> Result<()> {
    if (1..=MAX_DIM).contains(&dim) {
        Ok(())
    } else {
        Err(AlgebraError::UnsupportedDimension(dim))
    }
}

impl SquareMatrix {
    /// Row-major construction; every entry must live in `backend`.
    pub fn new(backend: &Backend, dim: usize, entries: Vec<Scalar>) -> Result<Self> {
        check_dim(dim)?;
        if entries.len() != dim * dim {
            return Err(AlgebraError::DimensionMismatch(dim * dim, entries.len()));
        }
        for e in &entries {
            if e.backend() != *backend {
                return Err(AlgebraError::BackendMismatch(backend.describe(), e.backend().describe()));
            }
        }
        Ok(Self { backend: backend.clone(), dim, entries })
    }

    pub fn from_rows(backend: &Backend, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(AlgebraError::DimensionMismatch(dim, row.len()));
            }
            entries.extend(row);
        }
        Self::new(backend, dim, entries)
    }

    /// Builds from a closure; rationals returned by `f` are embedded.
    pub fn from_fn(backend: &Backend, dim: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Result<Self> {
        check_dim(dim)?;
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(backend.embed(&f(i, j))?);
            }
        }
        Ok(Self { backend: backend.clone(), dim, entries })
    }

    pub fn from_ints(dim: usize, values: &[i64]) -> Result<Self> {
        let b = Backend::Rational;
        if values.len() != dim * dim {
            return Err(AlgebraError::DimensionMismatch(dim * dim, values.len()));
        }
        Self::new(&b, dim, values.iter().map(|&v| b.from_int(v)).collect())
    }

    pub fn zero(backend: &Backend, dim: usize) -> Result<Self> {
        check_dim(dim)?;
        Ok(Self { backend: backend.clone(), dim, entries: vec![backend.zero(); dim * dim] })
    }

    pub fn identity(backend: &Backend, dim: usize) -> Result<Self> {
        let mut m = Self::zero(backend, dim)?;
        for i in 0..dim {
            m.entries[i * dim + i] = backend.one();
        }
        Ok(m)
    }

    pub fn diagonal(backend: &Backend, diag: &[Scalar]) -> Result<Self> {
        let mut m = Self::zero(backend, diag.len())?;
        for (i, v) in diag.iter().enumerate() {
            m.entries[i * diag.len() + i] = backend.embed(v)?;
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) -> Result<()> {
        let value = self.backend.embed(&value)?;
        self.entries[i * self.dim + j] = value;
        Ok(())
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        self.entries.chunks(self.dim).map(|r| r.to_vec()).collect()
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(AlgebraError::DimensionMismatch(self.dim, other.dim));
        }
        if self.backend != other.backend {
            return Err(AlgebraError::BackendMismatch(self.backend.describe(), other.backend.describe()));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(Self { backend: self.backend.clone(), dim: self.dim, entries })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(Self { backend: self.backend.clone(), dim: self.dim, entries })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let d = self.dim;
        let mut entries = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let mut acc = self.backend.zero();
                for k in 0..d {
                    let a = &self.entries[i * d + k];
                    let b = &other.entries[k * d + j];
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                entries.push(acc);
            }
        }
        Ok(Self { backend: self.backend.clone(), dim: d, entries })
    }

    /// Panicking product for matrices already known to be compatible.
    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("incompatible matrices")
    }

    pub fn scale(&self, c: &Scalar) -> Result<Self> {
        let c = self.backend.embed(c)?;
        Ok(Self { backend: self.backend.clone(), dim: self.dim, entries: self.entries.iter().map(|e| e * &c).collect() })
    }

    pub fn neg(&self) -> Self {
        Self { backend: self.backend.clone(), dim: self.dim, entries: self.entries.iter().map(Scalar::neg).collect() }
    }

    pub fn transpose(&self) -> Self {
        let d = self.dim;
        Self::from_fn(&self.backend, d, |i, j| self.get(j, i).clone()).expect("same shape")
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::identity(&self.backend, self.dim).expect("valid dim");
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn trace(&self) -> Scalar {
        (0..self.dim).fold(self.backend.zero(), |acc, i| &acc + self.get(i, i))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        let d = self.dim;
        (0..d).all(|i| (0..d).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() }))
    }

    /// `Some(c)` when the matrix equals `c·I`.
    pub fn as_scalar_matrix(&self) -> Option<Scalar> {
        let d = self.dim;
        let c = self.get(0, 0).clone();
        for i in 0..d {
            for j in 0..d {
                let e = self.get(i, j);
                let ok = if i == j { *e == c } else { e.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(c)
    }

    /// Exact entrywise equality.
    pub fn try_eq(&self, other: &Self) -> Result<bool> {
        self.compatible(other)?;
        for (a, b) in self.entries.iter().zip(&other.entries) {
            if !a.try_eq(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_upper_triangular(&self) -> bool {
        let d = self.dim;
        (0..d).all(|i| (0..i).all(|j| self.get(i, j).is_zero()))
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.transpose().is_upper_triangular()
    }

    /// Nonzero entries only at `(i, d-1-i)`.
    pub fn is_skew_diagonal(&self) -> bool {
        let d = self.dim;
        (0..d).all(|i| (0..d).all(|j| j == d - 1 - i || self.get(i, j).is_zero()))
    }

    /// Determinant.
    ///
    /// Symbolic matrices use a division-free Laplace expansion over column
    /// subsets (no intermediate quotients, so no expression swell from
    /// repeated cross-multiplication); numeric backends use elimination.
    pub fn det(&self) -> Scalar {
        if self.backend.is_symbolic() {
            self.det_subsets()
        } else {
            self.det_elimination()
        }
    }

    fn det_subsets(&self) -> Scalar {
        let d = self.dim;
        // dp[mask] = signed sum over bijections of the first popcount(mask) rows onto `mask`.
        let mut dp: Vec<Option<Scalar>> = vec![None; 1 << d];
        dp[0] = Some(self.backend.one());
        for mask in 0usize..(1 << d) {
            let Some(cur) = dp[mask].clone() else { continue };
            if cur.is_zero() {
                continue;
            }
            let row = mask.count_ones() as usize;
            if row == d {
                continue;
            }
            for col in 0..d {
                if mask & (1 << col) != 0 {
                    continue;
                }
                let a = self.get(row, col);
                if a.is_zero() {
                    continue;
                }
                // Sign: number of already-used columns to the right of `col`.
                let inversions = (mask >> (col + 1)).count_ones();
                let mut term = &cur * a;
                if inversions % 2 == 1 {
                    term = term.neg();
                }
                let slot = &mut dp[mask | (1 << col)];
                *slot = Some(match slot.take() {
                    Some(prev) => &prev + &term,
                    None => term,
                });
            }
        }
        dp[(1 << d) - 1].clone().unwrap_or_else(|| self.backend.zero())
    }

    fn det_elimination(&self) -> Scalar {
        let d = self.dim;
        let mut m = self.rows();
        let mut det = self.backend.one();
        for col in 0..d {
            let Some(p) = (col..d).find(|&r| !m[r][col].is_zero()) else {
                return self.backend.zero();
            };
            if p != col {
                m.swap(p, col);
                det = det.neg();
            }
            let pivot = m[col][col].clone();
            det = &det * &pivot;
            let inv = pivot.inv().expect("nonzero pivot");
            for r in col + 1..d {
                if m[r][col].is_zero() {
                    continue;
                }
                let f = &m[r][col] * &inv;
                for c in col..d {
                    let v = &m[r][c] - &(&f * &m[col][c]);
                    m[r][c] = v;
                }
            }
        }
        det
    }

    /// Inverse via the adjugate (symbolic) or Gauss–Jordan (numeric).
    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if det.is_zero() {
            return Err(AlgebraError::SingularMatrix);
        }
        let d = self.dim;
        if d == 1 {
            return Self::new(&self.backend, 1, vec![det.inv()?]);
        }
        if self.backend.is_symbolic() {
            let inv_det = det.inv()?;
            let mut entries = Vec::with_capacity(d * d);
            for i in 0..d {
                for j in 0..d {
                    // adj(M)[i][j] = (-1)^{i+j} det(minor(j, i))
                    let minor = self.minor(j, i);
                    let mut c = minor.det();
                    if (i + j) % 2 == 1 {
                        c = c.neg();
                    }
                    entries.push(&c * &inv_det);
                }
            }
            return Self::new(&self.backend, d, entries);
        }
        let mut m = self.rows();
        let mut inv = Self::identity(&self.backend, d)?.rows();
        for col in 0..d {
            let p = (col..d).find(|&r| !m[r][col].is_zero()).ok_or(AlgebraError::SingularMatrix)?;
            m.swap(p, col);
            inv.swap(p, col);
            let pinv = m[col][col].inv()?;
            for c in 0..d {
                m[col][c] = &m[col][c] * &pinv;
                inv[col][c] = &inv[col][c] * &pinv;
            }
            for r in 0..d {
                if r == col || m[r][col].is_zero() {
                    continue;
                }
                let f = m[r][col].clone();
                for c in 0..d {
                    m[r][c] = &m[r][c] - &(&f * &m[col][c]);
                    inv[r][c] = &inv[r][c] - &(&f * &inv[col][c]);
                }
            }
        }
        Self::from_rows(&self.backend, inv)
    }

    fn minor(&self, row: usize, col: usize) -> Self {
        let d = self.dim;
        let entries = (0..d)
            .filter(|&i| i != row)
            .flat_map(|i| (0..d).filter(move |&j| j != col).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        Self { backend: self.backend.clone(), dim: d - 1, entries }
    }

    pub fn rank(&self) -> usize {
        rank_of_rows(self.rows())
    }

    pub fn nullspace_dim(&self) -> usize {
        self.dim - self.rank()
    }

    /// Characteristic polynomial `det(xI − M)` via Faddeev–LeVerrier.
    pub fn char_poly(&self) -> UniPoly {
        let d = self.dim;
        let b = &self.backend;
        let id = Self::identity(b, d).expect("valid dim");
        // coeffs[k] is the coefficient of x^k.
        let mut coeffs = vec![b.zero(); d + 1];
        coeffs[d] = b.one();
        let mut mk = Self::zero(b, d).expect("valid dim");
        for k in 1..=d {
            let c_prev = coeffs[d - k + 1].clone();
            mk = self.mul(&mk.try_add(&id.scale(&c_prev).expect("same backend")).expect("same shape"));
            let tr = self.mul_trace_factor(&mk, k);
            coeffs[d - k] = tr;
        }
        UniPoly::new(b, coeffs).expect("same backend")
    }

    fn mul_trace_factor(&self, mk: &Self, k: usize) -> Scalar {
        let factor: Rational = -rat(1, k as i64);
        mk.trace().scale(&factor)
    }

    /// Monic minimal polynomial: the first linear dependency among
    /// `vec(I), vec(M), vec(M²), …`.
    pub fn min_poly(&self) -> UniPoly {
        let d = self.dim;
        let b = &self.backend;
        let mut powers: Vec<Vec<Scalar>> = vec![Self::identity(b, d).expect("valid dim").entries];
        let mut cur = Self::identity(b, d).expect("valid dim");
        for k in 1..=d {
            cur = cur.mul(self);
            powers.push(cur.entries.clone());
            // Columns are vec(M^0..M^k); find a kernel vector.
            let rows: Vec<Vec<Scalar>> = (0..d * d).map(|e| powers.iter().map(|p| p[e].clone()).collect()).collect();
            let kernel = nullspace_of_rows(rows, k + 1);
            if let Some(v) = kernel.into_iter().next() {
                let lead = v[k].inv().expect("previous powers are independent");
                let coeffs = v.iter().map(|c| c * &lead).collect();
                return UniPoly::new(b, coeffs).expect("same backend");
            }
        }
        unreachable!("Cayley–Hamilton bounds the degree by d")
    }
}

impl Index<(usize, usize)> for SquareMatrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        self.get(i, j)
    }
}

impl PartialEq for SquareMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.try_eq(other).unwrap_or(false)
    }
}

impl fmt::Display for SquareMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.entries.chunks(self.dim).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(Scalar::render).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(rows: &mut [Vec<Scalar>]) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(p, r);
        let inv = rows[r][col].inv().expect("nonzero pivot");
        for c in col..ncols {
            rows[r][c] = &rows[r][c] * &inv;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let f = rows[i][col].clone();
            for c in col..ncols {
                let v = &rows[i][c] - &(&f * &rows[r][c]);
                rows[i][c] = v;
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Rank of a rectangular matrix given by rows.
pub fn rank_of_rows(mut rows: Vec<Vec<Scalar>>) -> usize {
    rref(&mut rows).len()
}

/// Basis of the right kernel of a rectangular matrix with `ncols` columns.
pub fn nullspace_of_rows(mut rows: Vec<Vec<Scalar>>, ncols: usize) -> Vec<Vec<Scalar>> {
    let Some(b) = rows.iter().flatten().next().map(Scalar::backend) else {
        return Vec::new();
    };
    let pivots = rref(&mut rows);
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![b.zero(); ncols];
        v[free] = b.one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = rows[r][free].neg();
        }
        basis.push(v);
    }
    basis
}

/// Incrementally maintained echelon basis of a subspace of `K^n`.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    /// Each row is normalized to 1 at its pivot, and zero at all other
    /// rows' pivots.
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Inserts `v`; returns `true` when it was independent of the span.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero pivot");
        for x in v.iter_mut() {
            *x = &*x * &inv;
        }
        for (_, row) in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        self.rows.push((p, v));
        true
    }
}

impl Default for EchelonBasis {
    fn default() -> Self {
        Self::new()
    }
}
