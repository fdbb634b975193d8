use alloc::vec::Vec;

use super::RationalFunction;
use crate::{Bipartition, Error, Result};

/// A square matrix over `ℚ(t)` whose rows and columns are labelled by
/// bipartitions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    labels: Vec<Bipartition>,
    entries: Vec<RationalFunction>,
}

impl PolyMatrix {
    pub fn zeros(labels: Vec<Bipartition>) -> Self {
        let n = labels.len();
        debug_assert!(
            {
                let mut s = labels.clone();
                s.sort();
                s.windows(2).all(|w| w[0] != w[1])
            },
            "duplicate labels"
        );
        PolyMatrix {
            labels,
            entries: alloc::vec![RationalFunction::zero(); n * n],
        }
    }

    pub fn identity(labels: Vec<Bipartition>) -> Self {
        let mut m = Self::zeros(labels);
        for i in 0..m.dim() {
            m.set(i, i, RationalFunction::one());
        }
        m
    }

    pub fn from_fn(
        labels: Vec<Bipartition>,
        mut f: impl FnMut(usize, usize) -> RationalFunction,
    ) -> Self {
        let mut m = Self::zeros(labels);
        let n = m.dim();
        for i in 0..n {
            for j in 0..n {
                m.entries[i * n + j] = f(i, j);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[Bipartition] {
        &self.labels
    }

    pub fn index_of(&self, label: &Bipartition) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn get(&self, i: usize, j: usize) -> &RationalFunction {
        &self.entries[i * self.dim() + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: RationalFunction) {
        let n = self.dim();
        self.entries[i * n + j] = value;
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.labels.clone(), |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RationalFunction::is_zero)
    }

    /// Matrix product; both factors must carry the same labels.
    pub fn mul(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.labels, rhs.labels, "label mismatch in product");
        let n = self.dim();
        Self::from_fn(self.labels.clone(), |i, j| {
            let mut acc = RationalFunction::zero();
            for k in 0..n {
                let (a, b) = (self.get(i, k), rhs.get(k, j));
                if !a.is_zero() && !b.is_zero() {
                    acc = &acc + &(a * b);
                }
            }
            acc
        })
    }

    pub fn sub(&self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.labels, rhs.labels, "label mismatch in difference");
        Self::from_fn(self.labels.clone(), |i, j| self.get(i, j) - rhs.get(i, j))
    }
}

/// The factors of a symmetric decomposition `Ω = L·D·Lᵗ`.
///
/// Both matrices keep the labels (and label positions) of the input.
#[derive(Clone, Debug)]
pub struct LdlFactors {
    /// Unitriangular with respect to the pivot order: `l[a][c] = 0` whenever
    /// `c` comes after `a` in that order.
    pub l: PolyMatrix,
    /// Diagonal.
    pub d: PolyMatrix,
}

impl LdlFactors {
    /// `L·D·Lᵗ`.
    pub fn reconstruct(&self) -> PolyMatrix {
        self.l.mul(&self.d).mul(&self.l.transpose())
    }
}

/// Decomposes a symmetric matrix as `L·D·Lᵗ`, pivoting in the given order.
///
/// `order` lists matrix indices; pivot `order[0]` is eliminated first. For
/// the Lusztig–Shoji solve this is a linear extension of the closure order
/// starting at the poset minimum. A zero pivot means the order is not
/// admissible for this matrix and is reported as [`Error::ZeroPivot`].
pub fn ldl_decompose(omega: &PolyMatrix, order: &[usize]) -> Result<LdlFactors> {
    let n = omega.dim();
    if order.len() != n || {
        let mut seen = alloc::vec![false; n];
        !order.iter().all(|&i| i < n && !core::mem::replace(&mut seen[i], true))
    } {
        return Err(Error::InvalidInput(alloc::string::String::from(
            "pivot order is not a permutation of the matrix indices",
        )));
    }
    if !omega.is_symmetric() {
        return Err(Error::InvalidInput(alloc::string::String::from(
            "matrix is not symmetric",
        )));
    }

    // Work in permuted coordinates: position p holds index order[p].
    let entry = |p: usize, q: usize| omega.get(order[p], order[q]);
    let mut l = alloc::vec![alloc::vec![RationalFunction::zero(); n]; n];
    let mut d: Vec<RationalFunction> = Vec::with_capacity(n);
    for j in 0..n {
        // d_j = Ω_jj − Σ_{k<j} l_jk² d_k
        let mut dj = entry(j, j).clone();
        for k in 0..j {
            if !l[j][k].is_zero() {
                dj = &dj - &(&(&l[j][k] * &l[j][k]) * &d[k]);
            }
        }
        if dj.is_zero() {
            return Err(Error::ZeroPivot { index: order[j] });
        }
        l[j][j] = RationalFunction::one();
        // Scaled row vector w_k = l_jk d_k, reused across the column.
        let w: Vec<RationalFunction> = (0..j).map(|k| &l[j][k] * &d[k]).collect();
        #[allow(clippy::needless_range_loop)]
        for i in j + 1..n {
            let mut s = entry(i, j).clone();
            for (k, wk) in w.iter().enumerate() {
                if !wk.is_zero() && !l[i][k].is_zero() {
                    s = &s - &(&l[i][k] * wk);
                }
            }
            l[i][j] = s.checked_div(&dj)?;
        }
        d.push(dj);
    }

    let labels = omega.labels().to_vec();
    let mut lm = PolyMatrix::zeros(labels.clone());
    let mut dm = PolyMatrix::zeros(labels);
    for p in 0..n {
        for q in 0..=p {
            lm.set(order[p], order[q], l[p][q].clone());
        }
        dm.set(order[p], order[p], d[p].clone());
    }
    Ok(LdlFactors { l: lm, d: dm })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_bipartitions;
    use crate::IntPoly;

    fn labels(k: usize) -> Vec<Bipartition> {
        // any k distinct labels will do
        let mut out = Vec::new();
        let mut n = 0;
        while out.len() < k {
            out.extend(enumerate_bipartitions(n));
            n += 1;
        }
        out.truncate(k);
        out
    }

    fn rp(c: &[i64]) -> RationalFunction {
        IntPoly::from_i64s(c).into()
    }

    #[test]
    fn identity_decomposes_trivially() {
        let id = PolyMatrix::identity(labels(4));
        let f = ldl_decompose(&id, &[0, 1, 2, 3]).unwrap();
        assert_eq!(f.l, id);
        assert_eq!(f.d, id);
    }

    #[test]
    fn one_by_one() {
        let mut m = PolyMatrix::zeros(labels(1));
        m.set(0, 0, rp(&[0, 0, 1]));
        let f = ldl_decompose(&m, &[0]).unwrap();
        assert_eq!(f.l.get(0, 0), &RationalFunction::one());
        assert_eq!(f.d.get(0, 0), &rp(&[0, 0, 1]));
    }

    #[test]
    fn enhanced_cone_rank_one_example() {
        // Ω for n = 1 in the order (∅;1), (1;∅): [[t², t], [t, t²]]
        let mut m = PolyMatrix::zeros(labels(2));
        m.set(0, 0, rp(&[0, 0, 1]));
        m.set(0, 1, rp(&[0, 1]));
        m.set(1, 0, rp(&[0, 1]));
        m.set(1, 1, rp(&[0, 0, 1]));
        let f = ldl_decompose(&m, &[0, 1]).unwrap();
        assert_eq!(
            f.l.get(1, 0),
            &RationalFunction::new(IntPoly::one(), IntPoly::t()).unwrap()
        );
        assert_eq!(f.d.get(1, 1), &rp(&[-1, 0, 1]));
        assert_eq!(f.reconstruct(), m);
    }

    #[test]
    fn zero_pivot_is_reported() {
        let mut m = PolyMatrix::zeros(labels(2));
        m.set(0, 1, rp(&[1]));
        m.set(1, 0, rp(&[1]));
        assert_eq!(
            ldl_decompose(&m, &[0, 1]).unwrap_err(),
            Error::ZeroPivot { index: 0 }
        );
    }

    #[test]
    fn bad_order_is_rejected() {
        let m = PolyMatrix::identity(labels(2));
        assert!(ldl_decompose(&m, &[0, 0]).is_err());
        assert!(ldl_decompose(&m, &[0]).is_err());
    }

    fn small_poly() -> impl proptest::strategy::Strategy<Value = RationalFunction> {
        proptest::collection::vec(-4i64..5, 1..4).prop_map(|c| rp(&c))
    }
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn reconstruction_is_exact(
            entries in proptest::collection::vec(small_poly(), 6),
            flip in any::<bool>(),
        ) {
            // symmetric 3×3 from 6 independent entries, with a dominant diagonal
            let mut m = PolyMatrix::zeros(labels(3));
            let mut it = entries.into_iter();
            for i in 0..3 {
                for j in 0..=i {
                    let mut e = it.next().unwrap();
                    if i == j {
                        e = &e + &rp(&[0, 0, 0, 0, 0, 1]);
                    }
                    m.set(i, j, e.clone());
                    m.set(j, i, e);
                }
            }
            let order = if flip { [2, 0, 1] } else { [0, 1, 2] };
            let f = ldl_decompose(&m, &order).unwrap();
            prop_assert!(f.reconstruct().sub(&m).is_zero());
            // unitriangular with respect to the order
            for (p, &a) in order.iter().enumerate() {
                prop_assert_eq!(f.l.get(a, a), &RationalFunction::one());
                for &c in &order[p + 1..] {
                    prop_assert!(f.l.get(a, c).is_zero());
                }
            }
        }
    }
}
