use alloc::format;
use alloc::vec::Vec;

use super::kostka::KostkaCache;
use super::table::KostkaTable;
use crate::combinatorics::{enumerate_bipartitions, Bipartition, Partition};
use crate::weylb::{omega_combinatorial, omega_matrix, CharacterTable};
pub use crate::report::CheckReport;
use crate::{IntPoly, Result};

/// Labels `(ρ;σ)` with nonzero weight `K_{ρᵗμᵗ} K_{σᵗνᵗ}` against `(μ;ν)`.
fn kostka_weights(labels: &[Bipartition], a: &Bipartition, cache: &KostkaCache) -> Vec<(usize, u64)> {
    let (mt, nt) = (a.mu().transpose(), a.nu().transpose());
    labels
        .iter()
        .enumerate()
        .filter(|(_, l)| l.mu().size() == a.mu().size())
        .map(|(i, l)| (i, cache.number(&l.mu().transpose(), &mt) * cache.number(&l.nu().transpose(), &nt)))
        .filter(|&(_, w)| w != 0)
        .collect()
}

/// For all `a, b ∈ 𝒬_n`, compares the Kostka-weighted sum of the
/// character-theoretic `Ω` entries with `t^{b(a)+b(b)}` times the
/// double-coset sum [`omega_combinatorial`].
pub fn omega_crosscheck(n: usize) -> Result<CheckReport> {
    let chars = CharacterTable::new(n);
    let omega = omega_matrix(&chars)?;
    let labels = chars.labels();
    let cache = KostkaCache::up_to(n);
    let weights: Vec<_> = labels.iter().map(|a| kostka_weights(labels, a, &cache)).collect();
    let mut report = CheckReport::new("omega_crosscheck");
    for (i, a) in labels.iter().enumerate() {
        for (j, b) in labels.iter().enumerate() {
            let mut lhs = IntPoly::zero();
            for &(c, wc) in &weights[i] {
                for &(d, wd) in &weights[j] {
                    let e = omega.get(c, d).as_int_poly().unwrap_or_default();
                    lhs += &e.scale(&(wc * wd).into());
                }
            }
            let rhs = omega_combinatorial(a, b)?.shift(a.b_stat() + b.b_stat());
            report.record(lhs == rhs, || format!("{a} × {b}: {lhs} ≠ {rhs}"));
        }
    }
    Ok(report)
}

/// Compares the solved table with charge-computed `K̃_{λπ}`:
/// `K̃_{(∅;λ),(∅;π)}(t) = t^{|λ|} K̃_{λπ}(t²)` and
/// `K̃_{(λ;∅),(ρ;σ)}(t) = K̃_{λ,ρ+σ}(t²)`.
pub fn type_a_specialization_check(table: &KostkaTable) -> Result<CheckReport> {
    let n = table.n();
    let cache = table.kostka_cache();
    let mut report = CheckReport::new("type_a_specialization");
    let parts = Partition::all_of(n);
    for lam in &parts {
        let upper = Bipartition::new(Partition::empty(), lam.clone());
        for pi in &parts {
            let lower = Bipartition::new(Partition::empty(), pi.clone());
            let got = table.kostka(&upper, &lower)?;
            let want = cache.poly(lam, pi).substitute_square().shift(n);
            report.record(*got == want, || format!("K̃[{upper}, {lower}] = {got}, expected {want}"));
        }
        let upper = Bipartition::new(lam.clone(), Partition::empty());
        for lower in table.labels() {
            let got = table.kostka(&upper, lower)?;
            let want = cache.poly(lam, &lower.jordan_type()).substitute_square();
            report.record(*got == want, || format!("K̃[{upper}, {lower}] = {got}, expected {want}"));
        }
    }
    Ok(report)
}

/// Point-count form of the `Ω` identity:
/// `Σ_τ θ_τ(t²) Π^τ_a(t²) Π^τ_b(t²)` equals the double-coset sum for `a, b`.
pub fn point_count_identity_check(table: &KostkaTable) -> Result<CheckReport> {
    let labels = table.labels();
    let mut report = CheckReport::new("point_count_identity");
    let theta: Vec<IntPoly> = labels
        .iter()
        .map(|l| table.theta(l).map(|p| p.substitute_square()))
        .collect::<Result<_>>()?;
    let mut pis = Vec::with_capacity(labels.len());
    for a in labels {
        let row: Vec<IntPoly> = labels
            .iter()
            .map(|tau| table.pi(a, tau).map(|p| p.substitute_square()))
            .collect::<Result<_>>()?;
        pis.push(row);
    }
    for (i, a) in labels.iter().enumerate() {
        for (j, b) in labels.iter().enumerate().take(i + 1) {
            let mut lhs = IntPoly::zero();
            for (k, th) in theta.iter().enumerate() {
                if !pis[i][k].is_zero() && !pis[j][k].is_zero() {
                    lhs += &(&(th * &pis[i][k]) * &pis[j][k]);
                }
            }
            let rhs = omega_combinatorial(a, b)?;
            report.record(lhs == rhs, || format!("{a} × {b}: {lhs} ≠ {rhs}"));
        }
    }
    Ok(report)
}

/// Solves `n` under the canonical order and under
/// [`alternate_linear_extension`](crate::combinatorics::alternate_linear_extension)
/// and compares `P` and `Λ`.
pub fn order_independence_check(n: usize) -> Result<CheckReport> {
    let a = KostkaTable::solve(n)?;
    let b = KostkaTable::solve_with_order(n, &crate::combinatorics::alternate_linear_extension(n))?;
    let mut report = CheckReport::new("order_independence");
    let labels = enumerate_bipartitions(n);
    for x in &labels {
        report.record(a.lambda(x)? == b.lambda(x)?, || format!("Λ differs at {x}"));
        for y in &labels {
            report.record(a.kostka(x, y)? == b.kostka(x, y)?, || format!("K̃ differs at ({x}, {y})"));
        }
    }
    Ok(report)
}

/// Re-derives the structural properties of a solved table from its entries:
/// `P Λ Pᵗ = Ω` in `ℤ[t]`, support of `P` on the order ideal (incomparable
/// pairs included), nonnegativity and parity, evenness of `Λ`, unit diagonal
/// and constant term 1 for `IC` and `Π`, and `deg θ = dim`.
pub fn table_structure_check(table: &KostkaTable) -> Result<CheckReport> {
    let labels = table.labels();
    let k = labels.len();
    let mut report = CheckReport::new("table_structure");
    let lambda: Vec<IntPoly> = labels.iter().map(|l| table.lambda(l).cloned()).collect::<Result<_>>()?;
    for i in 0..k {
        for j in 0..=i {
            let mut acc = IntPoly::zero();
            for (c, lam) in lambda.iter().enumerate() {
                let (a, b) = (table.p(i, c), table.p(j, c));
                if !a.is_zero() && !b.is_zero() {
                    acc += &(&(a * lam) * b);
                }
            }
            let om = table.omega().get(i, j).as_int_poly();
            report.record(om.as_ref() == Some(&acc), || format!("(PΛPᵗ)[{}][{}] ≠ Ω", labels[i], labels[j]));
        }
    }
    for (a, lam) in labels.iter().zip(&lambda) {
        report.record(lam.compose(&IntPoly::from_i64s(&[0, -1])) == *lam, || format!("Λ at {a} is not even"));
        let th = table.theta(a)?;
        report.record(th.degree() == Some(a.dim()), || format!("deg θ at {a} is {:?}", th.degree()));
        for c in labels {
            let p = table.kostka(a, c)?;
            let below = crate::combinatorics::bipartition_leq(c, a);
            if a == c {
                report.record(*p == IntPoly::monomial(1, a.b_stat()), || format!("K̃ at ({a}, {a}) is {p}"));
            } else if !below {
                report.record(p.is_zero(), || format!("K̃ at ({a}, {c}) is {p} off the order ideal"));
                continue;
            }
            report.record(p.is_nonnegative(), || format!("K̃ at ({a}, {c}) is {p}"));
            report.record(p.has_parity(a.b_stat() % 2), || format!("K̃ at ({a}, {c}) has the wrong parity"));
            let (ic, pi) = (table.ic(a, c)?, table.pi(a, c)?);
            let unit = if a == c { ic.is_one() && pi.is_one() } else { ic.coeff(0) == 1.into() && pi.coeff(0) == 1.into() };
            report.record(unit && ic.is_nonnegative() && pi.is_nonnegative(), || format!("IC or Π at ({a}, {c}): {ic}, {pi}"));
        }
    }
    Ok(report)
}
