use alloc::format;
use alloc::vec::Vec;
use core::cmp::Reverse;

use super::{Bipartition, Partition};
use crate::CheckReport;

/// Which of the four covering moves relates two bipartitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoverKind {
    /// A box moves down within `μ`.
    One,
    /// A box moves down within `ν`.
    Two,
    /// A column of boxes moves across from `μ` to `ν`.
    Three,
    /// A column of boxes moves across from `ν` to `μ`, one row lower.
    Four,
}

impl CoverKind {
    pub fn number(self) -> u8 {
        match self {
            CoverKind::One => 1,
            CoverKind::Two => 2,
            CoverKind::Three => 3,
            CoverKind::Four => 4,
        }
    }
}

/// A covering relation with its witnessing row indices `k ≤ l` (one-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoverType {
    pub kind: CoverKind,
    pub k: usize,
    pub l: usize,
}

/// The closure order on bipartitions of `n`: prefix sums of
/// `(ρ₁,σ₁,ρ₂,σ₂,…)` are bounded by those of `(μ₁,ν₁,μ₂,ν₂,…)`.
///
/// # Panics
///
/// If the two bipartitions have different sizes.
pub fn bipartition_leq(a: &Bipartition, b: &Bipartition) -> bool {
    assert_eq!(
        a.size(),
        b.size(),
        "comparing bipartitions of different sizes: {a} and {b}"
    );
    let (za, zb) = (a.zipped(), b.zipped());
    let (mut sa, mut sb) = (0, 0);
    for i in 0..za.len().max(zb.len()) {
        sa += za.get(i).copied().unwrap_or(0);
        sb += zb.get(i).copied().unwrap_or(0);
        if sa > sb {
            return false;
        }
    }
    true
}

/// Every bipartition of `n`, unordered.
fn all_bipartitions(n: usize) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for m in (0..=n).rev() {
        for mu in Partition::all_of(m) {
            for nu in Partition::all_of(n - m) {
                out.push(Bipartition::new(mu.clone(), nu));
            }
        }
    }
    out
}

/// All of `𝒬_n` in the canonical linear extension of the closure order:
/// `b` descending, then the interleaved composition, then the labels
/// themselves. The minimum `(∅;1ⁿ)` comes first.
///
/// Because `b` strictly decreases up the order, any tie-break gives a
/// linear extension.
pub fn enumerate_bipartitions(n: usize) -> Vec<Bipartition> {
    let mut all = all_bipartitions(n);
    all.sort_by_cached_key(|bp| (Reverse(bp.b_stat()), bp.interleaved_composition(), bp.clone()));
    all
}

/// A second linear extension, differing from the canonical one whenever two
/// labels share a value of `b`.
pub fn alternate_linear_extension(n: usize) -> Vec<Bipartition> {
    let mut all = all_bipartitions(n);
    all.sort_by_cached_key(|bp| (Reverse(bp.b_stat()), Reverse(bp.clone())));
    all
}

/// Returns the clause witnessing that `upper` covers `lower`, or `None` if it
/// does not.
///
/// The clauses are tested literally on part differences; a brute-force
/// cover search is the oracle for this function in the test suite.
pub fn covers(lower: &Bipartition, upper: &Bipartition) -> Option<CoverType> {
    if lower.size() != upper.size() || lower == upper {
        return None;
    }
    let len = lower.size() + 2;
    let (rho, sigma, mu, nu) = (lower.mu(), lower.nu(), upper.mu(), upper.nu());
    // one-based; index 0 reads as +∞ so that `ν₀ > ν₁` holds vacuously
    let m = |i: usize| if i == 0 { usize::MAX } else { mu.part(i - 1) };
    let v = |i: usize| if i == 0 { usize::MAX } else { nu.part(i - 1) };
    let drho: Vec<i64> = (1..=len).map(|i| rho.part(i - 1) as i64 - mu.part(i - 1) as i64).collect();
    let dsig: Vec<i64> = (1..=len).map(|i| sigma.part(i - 1) as i64 - nu.part(i - 1) as i64).collect();
    let zero_r = drho.iter().all(|&d| d == 0);
    let zero_s = dsig.iter().all(|&d| d == 0);
    let all_eq = |f: &dyn Fn(usize) -> usize, from: usize, to: usize| (from..to).all(|i| f(i) == f(i + 1));

    // (1) and (2): one box moves down on one side.
    let single_move = |d: &[i64]| -> Option<(usize, usize)> {
        let nz: Vec<usize> = (1..=len).filter(|&i| d[i - 1] != 0).collect();
        match nz[..] {
            [k, l] if d[k - 1] == -1 && d[l - 1] == 1 => Some((k, l)),
            _ => None,
        }
    };
    if zero_s {
        if let Some((k, l)) = single_move(&drho) {
            let gap = l == k + 1
                || (m(k) - 1 == m(k + 1) && all_eq(&m, k + 1, l - 1) && m(l - 1) == m(l) + 1);
            if k >= 2 && gap && all_eq(&v, k - 1, l) {
                return Some(CoverType { kind: CoverKind::One, k, l });
            }
        }
        return None;
    }
    if zero_r {
        if let Some((k, l)) = single_move(&dsig) {
            let gap = l == k + 1
                || (v(k) - 1 == v(k + 1) && all_eq(&v, k + 1, l - 1) && v(l - 1) == v(l) + 1);
            if gap && all_eq(&m, k, l + 1) {
                return Some(CoverType { kind: CoverKind::Two, k, l });
            }
        }
        return None;
    }

    // (3) and (4): a column moves across the dividing line.
    let block = |d: &[i64], val: i64| -> Option<(usize, usize)> {
        let idx: Vec<usize> = (1..=len).filter(|&i| d[i - 1] != 0).collect();
        let (&k, &l) = (idx.first()?, idx.last()?);
        (idx.len() == l - k + 1 && idx.iter().all(|&i| d[i - 1] == val)).then_some((k, l))
    };
    if let (Some((k, l)), Some(s)) = (block(&drho, -1), block(&dsig, 1)) {
        if s == (k, l) && all_eq(&m, k, l) && m(l) > m(l + 1) && all_eq(&v, k, l) && v(k - 1) > v(k) {
            return Some(CoverType { kind: CoverKind::Three, k, l });
        }
        return None;
    }
    if let (Some((k, l)), Some(r)) = (block(&dsig, -1), block(&drho, 1)) {
        if r == (k + 1, l + 1)
            && all_eq(&v, k, l)
            && v(l) > v(l + 1)
            && m(k) > m(k + 1)
            && all_eq(&m, k + 1, l + 1)
        {
            return Some(CoverType { kind: CoverKind::Four, k, l });
        }
    }
    None
}

/// All covering pairs `(lower, upper, type)` of `𝒬_n`, in the order of the
/// canonical linear extension.
pub fn hasse(n: usize) -> Vec<(Bipartition, Bipartition, CoverType)> {
    let all = enumerate_bipartitions(n);
    let mut edges = Vec::new();
    for (i, lo) in all.iter().enumerate() {
        for hi in &all[i + 1..] {
            if let Some(c) = covers(lo, hi) {
                edges.push((lo.clone(), hi.clone(), c));
            }
        }
    }
    edges
}

/// Checks the Hasse diagram of `𝒬_n` against the order: every edge is a
/// cover found by brute force, dimensions rise along edges, and the
/// reflexive-transitive closure of the edges is exactly [`bipartition_leq`].
pub fn hasse_check(n: usize) -> CheckReport {
    let all = enumerate_bipartitions(n);
    let k = all.len();
    let pos = |b: &Bipartition| all.iter().position(|x| x == b).expect("label in Q_n");
    let mut report = CheckReport::new("hasse");
    let mut reach = alloc::vec![alloc::vec![false; k]; k];
    for (i, row) in reach.iter_mut().enumerate() {
        row[i] = true;
    }
    for (lo, hi, c) in hasse(n) {
        let (i, j) = (pos(&lo), pos(&hi));
        let between = all.iter().any(|x| x != &lo && x != &hi && bipartition_leq(&lo, x) && bipartition_leq(x, &hi));
        report.record(bipartition_leq(&lo, &hi) && !between, || format!("{lo} < {hi} is not a cover"));
        report.record(hi.dim() > lo.dim(), || format!("dimension does not rise from {lo} to {hi}"));
        report.record((1..=4).contains(&c.kind.number()), || format!("edge {lo} < {hi} has no type"));
        reach[i][j] = true;
    }
    // edges go forward in the canonical order, so one backward sweep closes
    for i in (0..k).rev() {
        for j in i + 1..k {
            if reach[i][j] {
                let row = reach[j].clone();
                for (r, &x) in reach[i].iter_mut().zip(&row) {
                    *r |= x;
                }
            }
        }
    }
    for i in 0..k {
        for j in 0..k {
            let (a, b) = (&all[i], &all[j]);
            report.record(reach[i][j] == bipartition_leq(a, b), || format!("reachability differs at {a}, {b}"));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bip;

    #[test]
    fn sizes_of_qn() {
        let sizes: Vec<usize> = (0..7).map(|n| enumerate_bipartitions(n).len()).collect();
        assert_eq!(sizes, [1, 2, 5, 10, 20, 36, 65]);
    }

    #[test]
    fn minimum_first_maximum_last() {
        for n in 0..6 {
            let all = enumerate_bipartitions(n);
            assert_eq!(all[0], Bipartition::new(Partition::empty(), Partition::column(n)));
            assert_eq!(all[all.len() - 1], Bipartition::new(Partition::row(n), Partition::empty()));
        }
    }

    #[test]
    fn closure_examples() {
        assert!(bipartition_leq(&bip!([1, 1]; [2]), &bip!([2, 1]; [1])));
        assert!(bipartition_leq(&bip!([2, 2]; []), &bip!([2, 1]; [1])));
        assert!(!bipartition_leq(&bip!([2, 1]; [1]), &bip!([1, 1]; [2])));
    }

    #[test]
    #[should_panic(expected = "different sizes")]
    fn size_mismatch_panics() {
        bipartition_leq(&bip!([1]; []), &bip!([2]; []));
    }

    #[test]
    fn rank_one_edge() {
        let e = hasse(1);
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].0, bip!([]; [1]));
        assert_eq!(e[0].1, bip!([1]; []));
        assert_eq!(e[0].2.kind, CoverKind::Three);
        assert!(hasse(0).is_empty());
    }

    #[test]
    fn extensions_differ() {
        assert_ne!(enumerate_bipartitions(2), alternate_linear_extension(2));
    }
}
