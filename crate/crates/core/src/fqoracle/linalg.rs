use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::field::Fq;
use crate::combinatorics::Partition;
use crate::{Error, Result};

/// A column vector over `𝔽_q`.
pub type FqVector = Vec<u32>;

/// An `n × n` matrix over `𝔽_q`, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FqMatrix {
    field: Fq,
    n: usize,
    entries: Vec<u32>,
}

impl FqMatrix {
    pub fn new(q: u32, n: usize, entries: Vec<u32>) -> Result<Self> {
        let field = Fq::new(q)?;
        if entries.len() != n * n {
            return Err(Error::InvalidInput(format!("{} entries for a {n}×{n} matrix", entries.len())));
        }
        if entries.iter().any(|&e| e >= q) {
            return Err(Error::InvalidInput(format!("entry out of range for q = {q}")));
        }
        Ok(FqMatrix { field, n, entries })
    }

    pub(crate) fn from_parts(field: Fq, n: usize, entries: Vec<u32>) -> Self {
        FqMatrix { field, n, entries }
    }

    pub fn zero(field: Fq, n: usize) -> Self {
        FqMatrix { field, n, entries: alloc::vec![0; n * n] }
    }

    pub fn identity(field: Fq, n: usize) -> Self {
        let mut m = Self::zero(field, n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    /// Jordan form with blocks of sizes `λ`: on each block `e_1, …, e_k`,
    /// `x e_1 = 0` and `x e_j = e_{j−1}`.
    pub fn jordan(field: Fq, lambda: &Partition) -> Self {
        let n = lambda.size();
        let mut m = Self::zero(field, n);
        let mut off = 0;
        for &k in lambda.parts() {
            for j in 1..k {
                m.entries[(off + j - 1) * n + off + j] = 1;
            }
            off += k;
        }
        m
    }

    pub fn field(&self) -> Fq {
        self.field
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.entries[i * self.n + j] = v % self.q();
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, rhs: &FqMatrix) -> FqMatrix {
        let (n, f) = (self.n, self.field);
        let mut out = alloc::vec![0u32; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] = f.axpy(a, rhs.entries[k * n + j], out[i * n + j]);
                }
            }
        }
        FqMatrix { field: f, n, entries: out }
    }

    pub fn pow(&self, k: usize) -> FqMatrix {
        let mut acc = Self::identity(self.field, self.n);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn apply(&self, v: &[u32]) -> FqVector {
        let (n, f) = (self.n, self.field);
        (0..n)
            .map(|i| (0..n).fold(0, |acc, j| f.axpy(self.entries[i * n + j], v[j], acc)))
            .collect()
    }

    pub fn rows(&self) -> Vec<FqVector> {
        self.entries.chunks(self.n.max(1)).take(self.n).map(<[u32]>::to_vec).collect()
    }

    pub fn columns(&self) -> Vec<FqVector> {
        (0..self.n).map(|j| (0..self.n).map(|i| self.get(i, j)).collect()).collect()
    }

    pub fn rank(&self) -> usize {
        rank(self.field, self.rows())
    }

    pub fn is_nilpotent(&self) -> bool {
        self.pow(self.n).is_zero()
    }

    /// Jordan type from the ranks of powers: `λᵗ_k = rank x^{k−1} − rank x^k`.
    pub fn jordan_type(&self) -> Result<Partition> {
        if !self.is_nilpotent() {
            return Err(Error::InvalidInput(format!("matrix is not nilpotent over F_{}", self.q())));
        }
        let mut dims = alloc::vec![self.n];
        let mut p = self.clone();
        while *dims.last().expect("nonempty") > 0 {
            dims.push(p.rank());
            p = p.mul(self);
        }
        Ok(type_from_dims(&dims))
    }

    /// `g x g⁻¹`.
    pub fn conjugate(&self, g: &FqMatrix) -> Result<FqMatrix> {
        Ok(g.mul(self).mul(&g.inverse()?))
    }

    pub fn inverse(&self) -> Result<FqMatrix> {
        let (n, f) = (self.n, self.field);
        let mut aug: Vec<FqVector> = self
            .rows()
            .into_iter()
            .enumerate()
            .map(|(i, mut r)| {
                r.extend((0..n).map(|j| u32::from(i == j)));
                r
            })
            .collect();
        let piv = rref(f, &mut aug);
        if piv.len() < n || piv.iter().enumerate().any(|(i, &p)| p != i) {
            return Err(Error::InvalidInput(String::from("singular matrix")));
        }
        Ok(FqMatrix { field: f, n, entries: aug.iter().flat_map(|r| r[n..].iter().copied()).collect() })
    }
}

/// Partition whose transpose has parts `dims[k−1] − dims[k]`, where `dims`
/// is the sequence of dimensions of `x^k` applied to a space.
pub(crate) fn type_from_dims(dims: &[usize]) -> Partition {
    let cols: Vec<usize> = dims.windows(2).map(|w| w[0] - w[1]).filter(|&c| c > 0).collect();
    Partition::from_unsorted(cols).transpose()
}

/// Row-reduces in place to reduced echelon form, dropping zero rows, and
/// returns the pivot columns.
pub fn rref(f: Fq, rows: &mut Vec<FqVector>) -> Vec<usize> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let m = f.neg(row[c]);
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = f.axpy(m, y, *x);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(f: Fq, mut rows: Vec<FqVector>) -> usize {
    rref(f, &mut rows).len()
}

/// Basis of `{y : M y = 0}` for `M` given by rows of length `cols`.
pub fn nullspace(f: Fq, mut rows: Vec<FqVector>, cols: usize) -> Vec<FqVector> {
    let pivots = if rows.is_empty() { Vec::new() } else { rref(f, &mut rows) };
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut y = alloc::vec![0u32; cols];
        y[free] = 1;
        for (r, &p) in pivots.iter().enumerate() {
            y[p] = f.neg(rows[r][free]);
        }
        basis.push(y);
    }
    basis
}

/// Coordinates of `v` in the basis `basis` (which must span a space
/// containing `v`), or `None`.
pub fn coordinates(f: Fq, basis: &[FqVector], v: &[u32]) -> Option<FqVector> {
    let n = v.len();
    let k = basis.len();
    let mut rows: Vec<FqVector> = (0..n)
        .map(|i| {
            let mut r: FqVector = basis.iter().map(|b| b[i]).collect();
            r.push(v[i]);
            r
        })
        .collect();
    let piv = rref(f, &mut rows);
    if piv.contains(&k) {
        return None;
    }
    let mut c = alloc::vec![0u32; k];
    for (r, &p) in piv.iter().enumerate() {
        c[p] = rows[r][k];
    }
    Some(c)
}

/// A subspace of `𝔽_qⁿ`, stored by its reduced echelon basis, so equal
/// subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    n: usize,
    basis: Vec<FqVector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(f: Fq, n: usize, vectors: impl IntoIterator<Item = FqVector>) -> Self {
        let mut rows: Vec<FqVector> = vectors.into_iter().filter(|v| v.iter().any(|&x| x != 0)).collect();
        let pivots = if rows.is_empty() { Vec::new() } else { rref(f, &mut rows) };
        Subspace { n, basis: rows, pivots }
    }

    pub fn zero(n: usize) -> Self {
        Subspace { n, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(n: usize) -> Self {
        Subspace {
            n,
            basis: (0..n).map(|i| (0..n).map(|j| u32::from(i == j)).collect()).collect(),
            pivots: (0..n).collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[FqVector] {
        &self.basis
    }

    /// `w` reduced modulo this subspace: pivot coordinates cleared. Linear
    /// in `w`, and zero exactly on the subspace.
    pub fn reduce(&self, f: Fq, w: &[u32]) -> FqVector {
        let mut w = w.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if w[p] != 0 {
                let m = f.neg(w[p]);
                for (x, &y) in w.iter_mut().zip(row) {
                    *x = f.axpy(m, y, *x);
                }
            }
        }
        w
    }

    pub fn contains(&self, f: Fq, w: &[u32]) -> bool {
        self.reduce(f, w).iter().all(|&x| x == 0)
    }

    pub fn contains_space(&self, f: Fq, other: &Subspace) -> bool {
        other.basis.iter().all(|w| self.contains(f, w))
    }

    pub fn sum(&self, f: Fq, other: &Subspace) -> Subspace {
        Subspace::span(f, self.n, self.basis.iter().chain(&other.basis).cloned())
    }

    pub fn image(&self, x: &FqMatrix) -> Subspace {
        Subspace::span(x.field(), self.n, self.basis.iter().map(|b| x.apply(b)))
    }

    /// `{y : x y ∈ self}`.
    pub fn preimage(&self, x: &FqMatrix) -> Subspace {
        let f = x.field();
        let n = self.n;
        // column j of the map y ↦ (x y mod self)
        let cols: Vec<FqVector> = x.columns().iter().map(|c| self.reduce(f, c)).collect();
        let rows: Vec<FqVector> = (0..n).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
        Subspace::span(f, n, nullspace(f, rows, n))
    }

    pub fn is_stable(&self, x: &FqMatrix) -> bool {
        let f = x.field();
        self.basis.iter().all(|b| self.contains(f, &x.apply(b)))
    }

    /// Jordan type of `x` restricted to this (stable) subspace.
    pub fn restricted_type(&self, x: &FqMatrix) -> Partition {
        let mut dims = alloc::vec![self.dim()];
        let mut cur = self.clone();
        while cur.dim() > 0 {
            cur = cur.image(x);
            dims.push(cur.dim());
        }
        type_from_dims(&dims)
    }

    /// Jordan type of the map induced by `x` on `V / self` (self stable).
    pub fn quotient_type(&self, x: &FqMatrix) -> Partition {
        let f = x.field();
        let d = self.dim();
        let mut dims = alloc::vec![self.n - d];
        let mut img = Subspace::full(self.n);
        loop {
            img = img.image(x);
            let q = img.sum(f, self).dim() - d;
            dims.push(q);
            if q == 0 {
                break;
            }
        }
        type_from_dims(&dims)
    }

    /// Visits every subspace of `𝔽_qⁿ` of dimension `m` once, as reduced
    /// echelon bases.
    pub fn for_each_of_dim(f: Fq, n: usize, m: usize, visit: &mut dyn FnMut(&Subspace)) {
        if m > n {
            return;
        }
        let mut pivots = Vec::with_capacity(m);
        choose(n, m, 0, &mut pivots, &mut |piv| {
            // free cells: row r, column c > piv[r] with c not a pivot
            let free: Vec<(usize, usize)> = (0..m)
                .flat_map(|r| ((piv[r] + 1)..n).filter(|c| !piv.contains(c)).map(move |c| (r, c)))
                .collect();
            let mut vals = alloc::vec![0u32; free.len()];
            loop {
                let mut basis: Vec<FqVector> = (0..m)
                    .map(|r| {
                        let mut row = alloc::vec![0u32; n];
                        row[piv[r]] = 1;
                        row
                    })
                    .collect();
                for (&(r, c), &v) in free.iter().zip(&vals) {
                    basis[r][c] = v;
                }
                visit(&Subspace { n, basis, pivots: piv.to_vec() });
                // odometer
                let mut i = 0;
                while i < vals.len() {
                    vals[i] += 1;
                    if vals[i] < f.q() {
                        break;
                    }
                    vals[i] = 0;
                    i += 1;
                }
                if i == vals.len() {
                    break;
                }
            }
        });
    }

    /// Number of subspaces of dimension `m`, the Gaussian binomial at `q`.
    pub fn count_of_dim(q: u64, n: usize, m: usize) -> u64 {
        if m > n {
            return 0;
        }
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for i in 0..m {
            num *= (q as u128).pow((n - i) as u32) - 1;
            den *= (q as u128).pow((i + 1) as u32) - 1;
        }
        (num / den) as u64
    }
}

fn choose(n: usize, m: usize, start: usize, acc: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    if acc.len() == m {
        visit(acc);
        return;
    }
    for c in start..n {
        if n - c < m - acc.len() {
            break;
        }
        acc.push(c);
        choose(n, m, c + 1, acc, visit);
        acc.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn f(q: u32) -> Fq {
        Fq::new(q).unwrap()
    }

    #[test]
    fn jordan_types_of_jordan_forms() {
        for n in 0..=5 {
            for l in Partition::all_of(n) {
                assert_eq!(FqMatrix::jordan(f(2), &l).jordan_type().unwrap(), l);
            }
        }
        let bad = FqMatrix::identity(f(3), 2);
        assert!(bad.jordan_type().is_err());
    }

    #[test]
    fn subspace_counts() {
        for q in [2u32, 3] {
            for n in 0..=4 {
                for m in 0..=n {
                    let mut c = 0;
                    Subspace::for_each_of_dim(f(q), n, m, &mut |s| {
                        assert_eq!(s.dim(), m);
                        c += 1;
                    });
                    assert_eq!(c, Subspace::count_of_dim(q as u64, n, m), "q={q} n={n} m={m}");
                }
            }
        }
    }

    #[test]
    fn restricted_and_quotient_types() {
        let x = FqMatrix::jordan(f(2), &part![2, 1]);
        let ker = Subspace::span(f(2), 3, nullspace(f(2), x.rows(), 3));
        assert_eq!(ker.dim(), 2);
        assert_eq!(ker.restricted_type(&x), part![1, 1]);
        assert_eq!(ker.quotient_type(&x), part![1]);
        let full = Subspace::full(3);
        assert_eq!(full.restricted_type(&x), part![2, 1]);
        assert_eq!(full.quotient_type(&x), Partition::empty());
        assert_eq!(Subspace::zero(3).preimage(&x), ker);
    }

    #[test]
    fn inverse_round_trip() {
        let m = FqMatrix::new(3, 2, alloc::vec![1, 2, 0, 1]).unwrap();
        assert_eq!(m.mul(&m.inverse().unwrap()), FqMatrix::identity(f(3), 2));
        assert!(FqMatrix::new(3, 2, alloc::vec![1, 1, 1, 1]).unwrap().inverse().is_err());
    }

    #[test]
    fn coordinates_solve() {
        let b = alloc::vec![alloc::vec![1, 1, 0], alloc::vec![0, 1, 1]];
        assert_eq!(coordinates(f(2), &b, &[1, 0, 1]), Some(alloc::vec![1, 1]));
        assert_eq!(coordinates(f(2), &b, &[1, 0, 0]), None);
    }
}
