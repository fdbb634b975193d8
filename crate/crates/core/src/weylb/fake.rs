use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::characters::{tensor, CharacterTable};
use crate::combinatorics::Bipartition;
use crate::{Error, IntPoly, PolyMatrix, RationalFunction, Result};

/// `∏_{a=1}^n (t^{2a} − 1)`.
pub fn coinvariant_numerator(n: usize) -> IntPoly {
    IntPoly::q_factorial(n, 2)
}

/// The fake degree `R(χ) = |W_n|⁻¹ Σ_w χ(w) ε(w) ∏(t^{2a} − 1) / det(t − w)`,
/// summed class by class.
///
/// Every division is exact for a genuine character; a remainder is reported
/// as [`Error::InexactDivision`].
pub fn fake_degree(table: &CharacterTable, char_values: &[i64]) -> Result<IntPoly> {
    if char_values.len() != table.classes().len() {
        return Err(Error::InvalidInput(format!(
            "{} values for {} classes",
            char_values.len(),
            table.classes().len()
        )));
    }
    let num = coinvariant_numerator(table.n());
    let mut acc = IntPoly::zero();
    for (c, cls) in table.classes().iter().enumerate() {
        let weight = BigInt::from(table.class_sizes()[c]) * char_values[c] * cls.eps();
        if weight == BigInt::from(0) {
            continue;
        }
        let quot = num.div_exact(&table.charpolys()[c])?;
        acc += &quot.scale(&weight);
    }
    acc.div_scalar_exact(&BigInt::from(table.order()))
        .map_err(|_| Error::InexactDivision(format!("fake degree sum not divisible by |W_{}|", table.n())))
}

/// `Ω = (t^{n²} R(χ^a ⊗ χ^b ⊗ ε))`, labelled in the canonical order.
pub fn omega_matrix(table: &CharacterTable) -> Result<PolyMatrix> {
    let labels = table.labels().to_vec();
    let eps = table.eps();
    let k = labels.len();
    let n2 = table.n() * table.n();
    let mut m = PolyMatrix::zeros(labels.clone());
    #[allow(clippy::needless_range_loop)]
    for i in 0..k {
        let chi_eps = tensor(table.character(&labels[i]), &eps);
        for j in 0..=i {
            let r = fake_degree(table, &tensor(&chi_eps, table.character(&labels[j])))?;
            let w: RationalFunction = r.shift(n2).into();
            m.set(i, j, w.clone());
            m.set(j, i, w);
        }
    }
    Ok(m)
}

/// Nonnegative integer matrices with the given row and column sums, each
/// passed row-major to `visit`.
pub fn contingency_tables(rows: &[usize], cols: &[usize], visit: &mut dyn FnMut(&[usize])) {
    let (r, c) = (rows.len(), cols.len());
    if rows.iter().sum::<usize>() != cols.iter().sum::<usize>() {
        return;
    }
    let mut m = alloc::vec![0usize; r * c];
    let mut col_left = cols.to_vec();
    fn fill(
        cell: usize,
        row_left: usize,
        rows: &[usize],
        c: usize,
        m: &mut Vec<usize>,
        col_left: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        let r = rows.len();
        if cell == r * c {
            visit(m);
            return;
        }
        let (i, j) = (cell / c, cell % c);
        if j == c - 1 {
            // last column is forced
            if row_left > col_left[j] {
                return;
            }
            m[cell] = row_left;
            col_left[j] -= row_left;
            let next_row = if i + 1 < r { rows[i + 1] } else { 0 };
            if i + 1 < r || col_left.iter().all(|&x| x == 0) {
                fill(cell + 1, next_row, rows, c, m, col_left, visit);
            }
            col_left[j] += row_left;
            m[cell] = 0;
            return;
        }
        for v in 0..=row_left.min(col_left[j]) {
            m[cell] = v;
            col_left[j] -= v;
            fill(cell + 1, row_left - v, rows, c, m, col_left, visit);
            col_left[j] += v;
        }
        m[cell] = 0;
    }
    if r == 0 || c == 0 {
        if r == 0 && c == 0 {
            visit(&m);
        }
        return;
    }
    fill(0, rows[0], rows, c, &mut m, &mut col_left, visit);
}

/// The double-coset sum
/// `Σ_{(m_ij)} t^{2(C(n,2) − n(μ+ν) − n(μ'+ν') + Σ C(m_ij,2) + m_{≤μ₁,≤μ'₁})}
/// ∏_{a≤n}(t^{2a}−1) / ∏_{ij} ∏_{a≤m_ij}(t^{2a}−1)`
/// over matrices with row sums and column sums given by the interleaved
/// compositions of `a` and `b`.
pub fn omega_combinatorial(a: &Bipartition, b: &Bipartition) -> Result<IntPoly> {
    if a.size() != b.size() {
        return Err(Error::InvalidInput(format!("{a} and {b} differ in size")));
    }
    let n = a.size();
    let rows = a.interleaved_composition();
    let cols = b.interleaved_composition();
    let (ra, cb) = (a.mu().largest(), b.mu().largest());
    let base = (n * n.saturating_sub(1) / 2) as i64
        - a.jordan_type().n_stat() as i64
        - b.jordan_type().n_stat() as i64;
    let num = coinvariant_numerator(n);
    let mut terms: Vec<(i64, IntPoly)> = Vec::new();
    let mut err = None;
    contingency_tables(&rows, &cols, &mut |m| {
        let c = cols.len();
        let pairs: i64 = m.iter().map(|&x| (x * x.saturating_sub(1) / 2) as i64).sum();
        let corner: usize = (0..ra).flat_map(|i| (0..cb).map(move |j| (i, j))).map(|(i, j)| m[i * c + j]).sum();
        let mut den = IntPoly::one();
        for &x in m {
            den = &den * &IntPoly::q_factorial(x, 2);
        }
        match num.div_exact(&den) {
            Ok(q) => terms.push((2 * (base + pairs + corner as i64), q)),
            Err(e) => err = Some(e),
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    let low = terms.iter().map(|t| t.0).min().unwrap_or(0).min(0);
    let mut acc = IntPoly::zero();
    for (e, q) in terms {
        acc += &q.shift((e - low) as usize);
    }
    acc.unshift((-low) as usize)
        .ok_or_else(|| Error::NotIntegral(format!("double-coset sum for {a}, {b} has negative powers")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bip;

    #[test]
    fn contingency_counts() {
        let mut count = 0;
        contingency_tables(&[1, 1], &[1, 1], &mut |_| count += 1);
        assert_eq!(count, 2);
        let mut count = 0;
        contingency_tables(&[2, 1], &[1, 1, 1], &mut |m| {
            assert_eq!(m.len(), 6);
            count += 1
        });
        assert_eq!(count, 3);
        let mut count = 0;
        contingency_tables(&[], &[], &mut |_| count += 1);
        assert_eq!(count, 1);
        let mut count = 0;
        contingency_tables(&[3, 3], &[2, 2, 2], &mut |_| count += 1);
        assert_eq!(count, 7);
    }

    #[test]
    fn rank_one_combinatorial_entries() {
        let t = |c: &[i64]| IntPoly::from_i64s(c);
        assert_eq!(omega_combinatorial(&bip!([1]; []), &bip!([1]; [])).unwrap(), t(&[0, 0, 1]));
        assert_eq!(omega_combinatorial(&bip!([]; [1]), &bip!([]; [1])).unwrap(), t(&[1]));
        assert_eq!(omega_combinatorial(&bip!([]; []), &bip!([]; [])).unwrap(), t(&[1]));
    }

    #[test]
    fn rank_one_omega() {
        let table = CharacterTable::new(1);
        let om = omega_matrix(&table).unwrap();
        let t = |c: &[i64]| RationalFunction::from(IntPoly::from_i64s(c));
        assert_eq!(om.get(0, 0), &t(&[0, 0, 1]));
        assert_eq!(om.get(0, 1), &t(&[0, 1]));
        assert_eq!(om.get(1, 1), &t(&[0, 0, 1]));
    }
}
