use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::count::{all_vectors, closure_member, count_fiber, count_hall, orbit_search_size, Budget};
use super::linalg::FqMatrix;
use super::orbit::{centralizer_basis, classify_with, flag_w, normal_basis, quotient_type_check, FqPair};
use crate::combinatorics::{bipartition_leq, enumerate_bipartitions, Bipartition};
use crate::shoji::KostkaTable;
use crate::weylb::omega_combinatorial;
use crate::{CheckReport, Error, Result};

/// Classifies every pair `(v, x)` over `𝔽_q` both ways and checks the
/// cyclic-quotient type and the jumps of the attached flag.
pub fn classification_check(n: usize, q: u32, budget: Budget) -> Result<CheckReport> {
    budget.check(orbit_search_size(n, q))?;
    let mut report = CheckReport::new("classification");
    let vectors = all_vectors(q, n);
    for e in all_vectors(q, n * n) {
        let x = FqMatrix::new(q, n, e)?;
        if !x.is_nilpotent() {
            continue;
        }
        let cent = centralizer_basis(&x);
        for v in &vectors {
            let p = FqPair { v: v.clone(), x: x.clone() };
            let l = classify_with(&p, &cent);
            report.record(normal_basis(&p).label == l, || format!("normal basis disagrees on {p:?}"));
            report.record(quotient_type_check(&p), || format!("cyclic quotient type wrong on {p:?}"));
            let jumps: Vec<usize> = flag_w(&p).windows(2).map(|w| w[1].dim() - w[0].dim()).collect();
            report.record(jumps == l.interleaved_composition(), || format!("flag jumps {jumps:?} on {p:?}"));
        }
    }
    Ok(report)
}

/// Compares enumerated orbit sizes with `θ(q)` and their total with `q^{n²}`.
pub fn orbit_count_check(table: &KostkaTable, q: u32, counts: &BTreeMap<Bipartition, u64>) -> Result<CheckReport> {
    let mut report = CheckReport::new("orbit_counts");
    for a in table.labels() {
        let want = table.theta(a)?.eval_i64(q as i64);
        let got = counts.get(a).copied().unwrap_or(0);
        report.record(want == got.into(), || format!("|O_{a}(F_{q})| = {got}, θ(q) = {want}"));
    }
    let total: u64 = counts.values().sum();
    let n = table.n();
    report.record(Some(total) == (q as u64).checked_pow((n * n) as u32), || format!("orbit sizes sum to {total}"));
    Ok(report)
}

/// Compares fibre point counts over each orbit representative with `Π(q)`.
pub fn fiber_count_check(table: &KostkaTable, q: u32, budget: Budget) -> Result<CheckReport> {
    let mut report = CheckReport::new("fiber_counts");
    for point in table.labels() {
        let p = FqPair::representative(point, q)?;
        for over in table.labels() {
            let got = count_fiber(&p, over, budget)?;
            let want = table.pi(over, point)?.eval_i64(q as i64);
            report.record(want == got.into(), || format!("fibre of {over} over {point}: {got} points, Π(q) = {want}"));
        }
    }
    Ok(report)
}

/// Compares subspace counts with Hall polynomials at `q`, for every ambient
/// orbit and every split `|ρ| + |σ| = n`.
pub fn hall_count_check(table: &KostkaTable, q: u32, budget: Budget) -> Result<CheckReport> {
    let mut report = CheckReport::new("hall_counts");
    let n = table.n();
    for amb in table.labels() {
        let p = FqPair::representative(amb, q)?;
        for m in 0..=n {
            for ((rho, sigma), g) in table.hall_family(amb, m)? {
                let got = count_hall(&p, (&rho, &sigma), budget)?;
                let want = g.eval_i64(q as i64);
                report.record(want == got.into(), || format!("{rho}, {sigma} in {amb}: {got} subspaces, g(q) = {want}"));
            }
        }
    }
    Ok(report)
}

/// Checks that rational closure witnesses exist exactly for pairs in the
/// closure order.
pub fn closure_check(n: usize, q: u32, budget: Budget) -> Result<CheckReport> {
    let mut report = CheckReport::new("closure_order");
    let labels = enumerate_bipartitions(n);
    for a in &labels {
        let p = FqPair::representative(a, q)?;
        for b in &labels {
            let got = closure_member(&p, b, budget)?;
            report.record(got == bipartition_leq(a, b), || format!("closure membership of {a} in {b} is {got}"));
        }
    }
    Ok(report)
}

/// `Σ_c |𝒪_c(𝔽_q)| · |fibre of a over c| · |fibre of b over c|` against the
/// double-coset formula for `Ω_{ab}` at `t² = q`.
pub fn omega_point_count_check(n: usize, q: u32, counts: &BTreeMap<Bipartition, u64>, budget: Budget) -> Result<CheckReport> {
    let mut report = CheckReport::new("omega_point_counts");
    let labels = enumerate_bipartitions(n);
    let mut fibres = Vec::with_capacity(labels.len());
    for c in &labels {
        let p = FqPair::representative(c, q)?;
        let row: Vec<u64> = labels.iter().map(|a| count_fiber(&p, a, budget)).collect::<Result<_>>()?;
        fibres.push(row);
    }
    for (i, a) in labels.iter().enumerate() {
        for (j, b) in labels.iter().enumerate().take(i + 1) {
            let lhs: u128 = labels
                .iter()
                .zip(&fibres)
                .map(|(c, f)| counts.get(c).copied().unwrap_or(0) as u128 * f[i] as u128 * f[j] as u128)
                .sum();
            let omega = omega_combinatorial(a, b)?
                .halve_degrees()
                .ok_or_else(|| Error::Parity(format!("Ω at ({a}, {b}) has odd terms")))?;
            let want = omega.eval_i64(q as i64);
            report.record(want == lhs.into(), || format!("({a}, {b}): {lhs} points, Ω = {want}"));
        }
    }
    Ok(report)
}
