//! Dense linear algebra over F_q: matrices, reduced row-echelon form, kernels,
//! and canonical subspaces with exhaustive codeword enumeration.

use rayon::prelude::*;

use crate::error::{check_budget, saturating_pow, Error, Result};
use crate::gf::FieldParams;

/// Default cap on the number of vectors any exhaustive enumeration may visit.
pub const DEFAULT_BUDGET: u128 = 1 << 25;

/// A rectangular matrix over F_q stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatrixFq {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
    params: FieldParams,
}

impl MatrixFq {
    pub fn zeros(params: FieldParams, rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0; rows * cols], params }
    }

    pub fn identity(params: FieldParams, n: usize) -> Self {
        let mut m = Self::zeros(params, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from rows, reducing entries mod q.
    pub fn from_rows(params: FieldParams, cols: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::Shape(format!("row {i} has {} entries, expected {cols}", r.len())));
            }
            data.extend(r.iter().map(|&x| x % params.q()));
        }
        Ok(Self { rows: rows.len(), cols, data, params })
    }

    pub fn params(&self) -> FieldParams {
        self.params
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.params, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    /// Reduced row-echelon form (zero rows kept at the bottom) and rank.
    pub fn rref(&self) -> (MatrixFq, usize) {
        let p = self.params;
        let mut m = self.clone();
        let (rows, cols) = (m.rows, m.cols);
        let mut rank = 0;
        for col in 0..cols {
            if rank == rows {
                break;
            }
            let Some(piv) = (rank..rows).find(|&r| m.data[r * cols + col] != 0) else {
                continue;
            };
            if piv != rank {
                for j in 0..cols {
                    m.data.swap(piv * cols + j, rank * cols + j);
                }
            }
            let inv = p.inv(m.data[rank * cols + col]).expect("pivot is nonzero");
            for j in 0..cols {
                m.data[rank * cols + j] = p.mul(m.data[rank * cols + j], inv);
            }
            for r in 0..rows {
                let f = m.data[r * cols + col];
                if r == rank || f == 0 {
                    continue;
                }
                for j in 0..cols {
                    let sub = p.mul(f, m.data[rank * cols + j]);
                    m.data[r * cols + j] = p.sub(m.data[r * cols + j], sub);
                }
            }
            rank += 1;
        }
        (m, rank)
    }

    /// Basis of the right kernel `{x : M x^T = 0}`, one vector per row.
    pub fn kernel(&self) -> MatrixFq {
        let p = self.params;
        let (r, rank) = self.rref();
        let cols = self.cols;
        let pivots: Vec<usize> =
            (0..rank).map(|i| (0..cols).find(|&j| r.get(i, j) != 0).expect("nonzero row")).collect();
        let free: Vec<usize> = (0..cols).filter(|j| !pivots.contains(j)).collect();
        let mut out = MatrixFq::zeros(p, free.len(), cols);
        for (k, &f) in free.iter().enumerate() {
            out.data[k * cols + f] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                out.data[k * cols + pc] = p.neg(r.get(i, f));
            }
        }
        out
    }

    /// `v M` for a row vector `v` of length `rows`.
    pub fn left_mul(&self, v: &[u32]) -> Vec<u32> {
        let p = self.params;
        let mut out = vec![0u32; self.cols];
        for (i, &c) in v.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, &m) in out.iter_mut().zip(self.row(i)) {
                *o = p.add(*o, p.mul(c, m));
            }
        }
        out
    }
}

/// `a += c * b`, entrywise mod q.
#[inline]
pub(crate) fn axpy(p: &FieldParams, a: &mut [u32], c: u32, b: &[u32]) {
    if c == 0 {
        return;
    }
    let q = p.q();
    for (x, &y) in a.iter_mut().zip(b) {
        *x = (*x + c * y % q) % q;
    }
}

#[inline]
pub(crate) fn add_assign(p: &FieldParams, a: &mut [u32], b: &[u32]) {
    for (x, &y) in a.iter_mut().zip(b) {
        *x = p.add(*x, y);
    }
}

pub fn dot(p: &FieldParams, a: &[u32], b: &[u32]) -> u32 {
    a.iter().zip(b).fold(0, |acc, (&x, &y)| p.add(acc, p.mul(x, y)))
}

pub fn hamming_weight(v: &[u32]) -> usize {
    v.iter().filter(|&&x| x != 0).count()
}

/// A subspace of F_q^len in canonical form: its reduced row-echelon basis.
///
/// Two subspaces are equal as sets iff their bases are identical, so the
/// derived `PartialEq` is set equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    params: FieldParams,
    len: usize,
    basis: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(params: FieldParams, len: usize) -> Self {
        Self { params, len, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(params: FieldParams, len: usize) -> Self {
        let basis = (0..len)
            .map(|i| {
                let mut e = vec![0; len];
                e[i] = 1;
                e
            })
            .collect();
        Self { params, len, basis, pivots: (0..len).collect() }
    }

    pub fn from_vectors<I, V>(params: FieldParams, len: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[u32]>,
    {
        let mut s = Self::zero(params, len);
        for v in vectors {
            let v = v.as_ref();
            if v.len() != len {
                return Err(Error::Shape(format!("vector of length {} in space of length {len}", v.len())));
            }
            s.insert(v);
        }
        Ok(s)
    }

    pub fn from_matrix(m: &MatrixFq) -> Self {
        Self::from_vectors(m.params(), m.cols(), (0..m.rows()).map(|i| m.row(i))).expect("rows have matrix width")
    }

    pub fn params(&self) -> FieldParams {
        self.params
    }

    /// Ambient length.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn to_matrix(&self) -> MatrixFq {
        MatrixFq::from_rows(self.params, self.len, &self.basis).expect("basis rows have ambient length")
    }

    /// Number of vectors, if it fits in u128.
    pub fn size(&self) -> Option<u128> {
        crate::error::checked_pow(self.params.q(), self.dim())
    }

    /// Residue of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let p = self.params;
        let mut r = v.to_vec();
        for (b, &pc) in self.basis.iter().zip(&self.pivots) {
            let c = r[pc];
            if c != 0 {
                axpy(&p, &mut r, p.neg(c), b);
            }
        }
        r
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        v.len() == self.len && self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let p = self.params;
        let mut r = self.reduce(v);
        let Some(pc) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = p.inv(r[pc]).expect("nonzero");
        for x in r.iter_mut() {
            *x = p.mul(*x, inv);
        }
        for b in self.basis.iter_mut() {
            let c = b[pc];
            if c != 0 {
                axpy(&p, b, p.neg(c), &r);
            }
        }
        let pos = self.pivots.partition_point(|&x| x < pc);
        self.pivots.insert(pos, pc);
        self.basis.insert(pos, r);
        true
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.len == other.len && self.basis.iter().all(|b| other.contains(b))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.params.check_same(&other.params)?;
        if self.len != other.len {
            return Err(Error::Shape("subspaces of different lengths".into()));
        }
        let mut s = self.clone();
        for b in &other.basis {
            s.insert(b);
        }
        Ok(s)
    }

    /// Orthogonal complement under the standard dot product.
    pub fn dual(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.params, self.len);
        }
        Subspace::from_matrix(&self.to_matrix().kernel())
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        Ok(self.dual().sum(&other.dual())?.dual())
    }

    /// Image under a linear map given on vectors.
    pub fn map(&self, out_len: usize, f: impl Fn(&[u32]) -> Vec<u32>) -> Result<Subspace> {
        Subspace::from_vectors(self.params, out_len, self.basis.iter().map(|b| f(b)))
    }

    /// Sequential iterator over all `q^dim` vectors in message-lexicographic order.
    pub fn iter(&self, budget: u128) -> Result<CodewordIter<'_>> {
        check_budget(saturating_pow(self.params.q(), self.dim()), budget)?;
        Ok(CodewordIter::new(self))
    }

    /// Folds over every vector of the subspace in parallel.
    ///
    /// The leading message digits are split into independent chunks; each
    /// chunk walks the remaining digits with one vector addition per step.
    pub fn par_fold<T, ID, F, R>(&self, budget: u128, identity: ID, fold: F, reduce: R) -> Result<T>
    where
        T: Send,
        ID: Fn() -> T + Sync + Send,
        F: Fn(T, &[u32]) -> T + Sync + Send,
        R: Fn(T, T) -> T + Sync + Send,
    {
        let q = self.params.q() as u128;
        let k = self.dim();
        check_budget(saturating_pow(self.params.q(), k), budget)?;
        let mut split = 0;
        let mut chunks: u128 = 1;
        while split < k && chunks < 512 {
            split += 1;
            chunks *= q;
        }
        let p = self.params;
        let result = (0..chunks as u64)
            .into_par_iter()
            .fold(&identity, |mut acc, chunk| {
                let mut cur = vec![0u32; self.len];
                let mut c = chunk;
                for row in (0..split).rev() {
                    let d = (c % q as u64) as u32;
                    c /= q as u64;
                    axpy(&p, &mut cur, d, &self.basis[row]);
                }
                let mut digits = vec![0u32; k - split];
                loop {
                    acc = fold(acc, &cur);
                    let mut j = k - split;
                    loop {
                        if j == 0 {
                            return acc;
                        }
                        j -= 1;
                        add_assign(&p, &mut cur, &self.basis[split + j]);
                        digits[j] += 1;
                        if digits[j] < p.q() {
                            break;
                        }
                        digits[j] = 0;
                    }
                }
            })
            .reduce(&identity, &reduce);
        Ok(result)
    }

    /// Minimum Hamming weight over nonzero vectors.
    pub fn min_weight(&self, budget: u128) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::EmptyCode);
        }
        let len = self.len;
        self.par_fold(
            budget,
            || usize::MAX,
            |best, v| {
                let w = hamming_weight(v);
                if w > 0 && w < best {
                    w
                } else {
                    best
                }
            },
            usize::min,
        )
        .map(|d| d.min(len))
    }

    /// Counts vectors by Hamming weight (index = weight, length `len + 1`).
    pub fn weight_distribution(&self, budget: u128) -> Result<Vec<u64>> {
        let len = self.len;
        self.par_fold(
            budget,
            || vec![0u64; len + 1],
            |mut acc, v| {
                acc[hamming_weight(v)] += 1;
                acc
            },
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
    }
}

/// Walks every vector of a subspace with one vector addition per step.
pub struct CodewordIter<'a> {
    space: &'a Subspace,
    digits: Vec<u32>,
    current: Vec<u32>,
    done: bool,
}

impl<'a> CodewordIter<'a> {
    fn new(space: &'a Subspace) -> Self {
        Self { space, digits: vec![0; space.dim()], current: vec![0; space.len], done: false }
    }
}

impl Iterator for CodewordIter<'_> {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let p = self.space.params;
        let mut j = self.digits.len();
        loop {
            if j == 0 {
                self.done = true;
                break;
            }
            j -= 1;
            add_assign(&p, &mut self.current, &self.space.basis[j]);
            self.digits[j] += 1;
            if self.digits[j] < p.q() {
                break;
            }
            self.digits[j] = 0;
        }
        Some(out)
    }
}
