use alloc::format;
use alloc::vec;

use super::characters::{tensor, CharacterTable};
use super::fake::{fake_degree, omega_matrix};
use crate::combinatorics::{Bipartition, Partition};
use crate::{CheckReport, IntPoly, Result};

/// Orthogonality and completeness of the `W_n` character table, the three
/// linear characters and their fake degrees, and the identity
/// `Σ χ(1) R(χ) = ∏ (t^{2a} − 1)/(t − 1)`.
pub fn character_check(n: usize) -> Result<CheckReport> {
    let t = CharacterTable::new(n);
    let mut report = CheckReport::new("characters");
    let order = t.order() as i128;
    let labels = t.labels().to_vec();
    for a in &labels {
        for b in &labels {
            let p = t.pairing(t.character(a), t.character(b));
            report.record(p == if a == b { order } else { 0 }, || format!("⟨χ^{a}, χ^{b}⟩ = {p}"));
        }
    }
    let id = t.identity_class();
    let sq: i128 = (0..labels.len()).map(|i| (t.value(i, id) as i128).pow(2)).sum();
    report.record(sq == order, || format!("Σ χ(1)² = {sq}, |W_n| = {order}"));

    let triv = t.character(&Bipartition::new(Partition::row(n), Partition::empty())).to_vec();
    let eps = t.eps();
    let delta_eps = tensor(&t.delta(), &eps);
    report.record(triv.iter().all(|&v| v == 1), || "trivial character misplaced".into());
    report.record(t.character(&Bipartition::new(Partition::empty(), Partition::column(n))) == eps.as_slice(), || {
        "sign character misplaced".into()
    });
    report.record(t.character(&Bipartition::new(Partition::column(n), Partition::empty())) == delta_eps.as_slice(), || {
        "δε misplaced".into()
    });
    report.record(fake_degree(&t, &triv)? == IntPoly::one(), || "R(triv) ≠ 1".into());
    report.record(fake_degree(&t, &eps)? == IntPoly::monomial(1, n * n), || "R(ε) ≠ t^{n²}".into());
    report.record(fake_degree(&t, &delta_eps)? == IntPoly::monomial(1, n * n - n), || "R(δε) ≠ t^{n²−n}".into());

    let mut total = IntPoly::zero();
    for (i, l) in labels.iter().enumerate() {
        let r = fake_degree(&t, t.character(l))?;
        report.record(r.is_nonnegative(), || format!("R(χ^{l}) = {r} has a negative coefficient"));
        total += &r.scale(&t.value(i, id).into());
    }
    let mut hilb = IntPoly::one();
    for a in 1..=n {
        hilb = &hilb * &IntPoly::from_i64s(&vec![1; 2 * a]);
    }
    report.record(total == hilb, || format!("Σ χ(1) R(χ) = {total}"));

    let om = omega_matrix(&t)?;
    report.record(om.is_symmetric(), || "Ω is not symmetric".into());
    for i in 0..om.dim() {
        for j in 0..om.dim() {
            report.record(om.get(i, j).as_int_poly().is_some(), || format!("Ω[{i}][{j}] ∉ ℤ[t]"));
        }
    }
    Ok(report)
}
