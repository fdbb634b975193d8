use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::kostka::KostkaCache;
use crate::combinatorics::{bipartition_leq, enumerate_bipartitions, Bipartition, Partition};
use crate::exactalg::ldl_decompose;
use crate::weylb::{omega_matrix, CharacterTable};
use crate::{Error, IntPoly, PolyMatrix, RationalFunction, Result};

/// The output of the Lusztig–Shoji solve `P Λ Pᵗ = Ω` for `W_n`.
///
/// `P` holds the Kostka polynomials `K̃_{(μ;ν),(ρ;σ)}(t)` with the upper
/// label as row and the lower label as column; `Λ` is diagonal. Both are
/// checked on construction (reconstruction, support, integrality,
/// nonnegativity, parity), so every table that exists is consistent.
#[derive(Clone, Debug)]
pub struct KostkaTable {
    n: usize,
    labels: Vec<Bipartition>,
    index: BTreeMap<Bipartition, usize>,
    order: Vec<Bipartition>,
    p: Vec<IntPoly>,
    lambda: Vec<IntPoly>,
    omega: PolyMatrix,
    kostka: KostkaCache,
}

impl KostkaTable {
    /// Solves under the canonical linear extension.
    pub fn solve(n: usize) -> Result<Self> {
        Self::solve_with_order(n, &enumerate_bipartitions(n))
    }

    /// Solves pivoting along `order`, which must list `𝒬_n` as a linear
    /// extension of the closure order.
    pub fn solve_with_order(n: usize, order: &[Bipartition]) -> Result<Self> {
        let chars = CharacterTable::new(n);
        let omega = omega_matrix(&chars)?;
        let labels = chars.labels().to_vec();
        let k = labels.len();
        let index: BTreeMap<Bipartition, usize> =
            labels.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect();

        let mut positions = Vec::with_capacity(k);
        for l in order {
            match index.get(l) {
                Some(&i) => positions.push(i),
                None => return Err(Error::InvalidInput(format!("{l} is not in Q_{n}"))),
            }
        }
        for (p, a) in order.iter().enumerate() {
            if let Some(b) = order[..p].iter().find(|b| bipartition_leq(a, b)) {
                return Err(Error::InvalidInput(format!(
                    "order lists {b} before {a}, not a linear extension"
                )));
            }
        }

        let f = ldl_decompose(&omega, &positions)?;
        let b: Vec<usize> = labels.iter().map(Bipartition::b_stat).collect();

        let mut p = Vec::with_capacity(k * k);
        for a in 0..k {
            for c in 0..k {
                let scaled = f.l.get(a, c) * &RationalFunction::from(IntPoly::monomial(1, b[c]));
                let e = scaled.as_int_poly().ok_or_else(|| {
                    Error::NotIntegral(format!("K̃ at ({}, {}) is {scaled}", labels[a], labels[c]))
                })?;
                if !e.is_zero() && !bipartition_leq(&labels[c], &labels[a]) {
                    return Err(Error::Support(format!(
                        "K̃ at ({}, {}) is {e} but the column is not below the row",
                        labels[a], labels[c]
                    )));
                }
                if !e.is_nonnegative() {
                    return Err(Error::Negative(format!("K̃ at ({}, {}) is {e}", labels[a], labels[c])));
                }
                if !e.has_parity(b[a] % 2) {
                    return Err(Error::Parity(format!("K̃ at ({}, {}) is {e}", labels[a], labels[c])));
                }
                p.push(e);
            }
        }

        let mut lambda = Vec::with_capacity(k);
        for c in 0..k {
            let shift = RationalFunction::from(IntPoly::monomial(1, 2 * b[c]));
            let l = f.d.get(c, c).checked_div(&shift)?;
            let l = l
                .as_int_poly()
                .ok_or_else(|| Error::NotIntegral(format!("Λ at {} is {l}", labels[c])))?;
            if !l.has_parity(0) {
                return Err(Error::Parity(format!("Λ at {} is {l}", labels[c])));
            }
            lambda.push(l);
        }

        // P Λ Pᵗ = Ω, entry by entry in ℤ[t]
        for i in 0..k {
            for j in 0..=i {
                let mut acc = IntPoly::zero();
                for c in 0..k {
                    let (x, y) = (&p[i * k + c], &p[j * k + c]);
                    if !x.is_zero() && !y.is_zero() {
                        acc += &(&(x * &lambda[c]) * y);
                    }
                }
                if omega.get(i, j).as_int_poly().as_ref() != Some(&acc) {
                    return Err(Error::Reconstruction);
                }
            }
        }

        Ok(KostkaTable {
            n,
            labels,
            index,
            order: order.to_vec(),
            p,
            lambda,
            omega,
            kostka: KostkaCache::up_to(n),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Labels in canonical order; rows and columns of `P` follow it.
    pub fn labels(&self) -> &[Bipartition] {
        &self.labels
    }

    /// The pivot order used for the solve.
    pub fn order(&self) -> &[Bipartition] {
        &self.order
    }

    pub fn omega(&self) -> &PolyMatrix {
        &self.omega
    }

    /// Ordinary Kostka data for partitions of size `≤ n`.
    pub fn kostka_cache(&self) -> &KostkaCache {
        &self.kostka
    }

    fn idx(&self, l: &Bipartition) -> Result<usize> {
        self.index
            .get(l)
            .copied()
            .ok_or_else(|| Error::InvalidInput(format!("{l} is not in Q_{}", self.n)))
    }

    /// `K̃_{upper, lower}(t)`.
    pub fn kostka(&self, upper: &Bipartition, lower: &Bipartition) -> Result<&IntPoly> {
        let (a, c) = (self.idx(upper)?, self.idx(lower)?);
        Ok(&self.p[a * self.labels.len() + c])
    }

    /// `P` entry by canonical indices.
    pub fn p(&self, row: usize, col: usize) -> &IntPoly {
        &self.p[row * self.labels.len() + col]
    }

    /// The diagonal entry of `Λ` at `label`.
    pub fn lambda(&self, label: &Bipartition) -> Result<&IntPoly> {
        Ok(&self.lambda[self.idx(label)?])
    }

    /// `IC^{lower}_{upper}(t)`, from `t^{b(upper)} IC(t²) = K̃_{upper, lower}(t)`.
    pub fn ic(&self, upper: &Bipartition, lower: &Bipartition) -> Result<IntPoly> {
        let k = self.kostka(upper, lower)?;
        let b = upper.b_stat();
        let low = k
            .unshift(b)
            .ok_or_else(|| Error::InexactDivision(format!("K̃ at ({upper}, {lower}) is {k}, not divisible by t^{b}")))?;
        low.halve_degrees()
            .ok_or_else(|| Error::Parity(format!("K̃ at ({upper}, {lower}) / t^{b} has odd terms")))
    }

    /// `θ(t)` with `θ(t²) = Λ` at `orbit`; `θ(q)` counts `𝔽_q`-points of the orbit.
    pub fn theta(&self, orbit: &Bipartition) -> Result<IntPoly> {
        let l = self.lambda(orbit)?;
        l.halve_degrees()
            .ok_or_else(|| Error::Parity(format!("Λ at {orbit} is {l}")))
    }

    /// `Π^{point_in}_{fiber_over}(t)`: the Poincaré polynomial of the
    /// resolution fibre of type `fiber_over` over a point of `point_in`.
    pub fn pi(&self, fiber_over: &Bipartition, point_in: &Bipartition) -> Result<IntPoly> {
        self.idx(fiber_over)?;
        self.idx(point_in)?;
        let (mu, nu) = (fiber_over.mu(), fiber_over.nu());
        let (mu_t, nu_t) = (mu.transpose(), nu.transpose());
        let base = fiber_over.jordan_type().n_stat();
        let mut acc = IntPoly::zero();
        for rs in &self.labels {
            let (rho, sigma) = (rs.mu(), rs.nu());
            if rho.size() != mu.size() || !rho.dominance_leq(mu) || !sigma.dominance_leq(nu) {
                continue;
            }
            if !bipartition_leq(point_in, rs) {
                continue;
            }
            let w = self.kostka.number(&rho.transpose(), &mu_t) * self.kostka.number(&sigma.transpose(), &nu_t);
            if w == 0 {
                continue;
            }
            let ic = self.ic(rs, point_in)?;
            acc += &ic.shift(rs.jordan_type().n_stat() - base).scale(&w.into());
        }
        Ok(acc)
    }

    /// Hall polynomials `g^{ambient}_{θ;ψ}(t)` for every pair of partitions
    /// with `|θ| = m`, by inverting
    /// `t^{n(ρ)+n(σ)} IC^{ambient}_{ρ;σ} = Σ_{θ,ψ} K̃_{ρθ} K̃_{σψ} g_{θ;ψ}`.
    pub fn hall_family(&self, ambient: &Bipartition, m: usize) -> Result<BTreeMap<(Partition, Partition), IntPoly>> {
        self.idx(ambient)?;
        if m > self.n {
            return Err(Error::InvalidInput(format!("sub size {m} exceeds n = {}", self.n)));
        }
        // lex ascending refines dominance, so every θ ≤ ρ is solved before ρ
        let mut firsts = Partition::all_of(m);
        firsts.sort();
        let mut seconds = Partition::all_of(self.n - m);
        seconds.sort();
        let mut g: BTreeMap<(Partition, Partition), IntPoly> = BTreeMap::new();
        for rho in &firsts {
            for sigma in &seconds {
                let label = Bipartition::new(rho.clone(), sigma.clone());
                let mut rest = IntPoly::zero();
                for ((th, ps), val) in &g {
                    if val.is_zero() {
                        continue;
                    }
                    let k1 = self.kostka.poly(rho, th);
                    if k1.is_zero() {
                        continue;
                    }
                    let k2 = self.kostka.poly(sigma, ps);
                    rest += &(&(&k1 * &k2) * val);
                }
                let e = rho.n_stat() + sigma.n_stat();
                let rest = rest.unshift(e).ok_or_else(|| {
                    Error::InexactDivision(format!("Hall inversion at {label} in {ambient}"))
                })?;
                let val = &self.ic(&label, ambient)? - &rest;
                g.insert((rho.clone(), sigma.clone()), val);
            }
        }
        Ok(g)
    }

    /// `g^{ambient}_{ρ;σ}(t)`: counts `x`-stable subspaces `W ∋ v` with
    /// `x|_W` of type `ρ` and `x|_{V/W}` of type `σ`.
    pub fn hall(&self, rho: &Partition, sigma: &Partition, ambient: &Bipartition) -> Result<IntPoly> {
        if rho.size() + sigma.size() != self.n {
            return Err(Error::InvalidInput(format!(
                "|{rho}| + |{sigma}| differs from n = {}",
                self.n
            )));
        }
        let fam = self.hall_family(ambient, rho.size())?;
        Ok(fam[&(rho.clone(), sigma.clone())].clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{bip, part};

    fn t(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn rank_zero_and_one() {
        let k0 = KostkaTable::solve(0).unwrap();
        assert_eq!(k0.labels().len(), 1);
        assert_eq!(k0.p(0, 0), &IntPoly::one());

        let k = KostkaTable::solve(1).unwrap();
        let (lo, hi) = (bip!([]; [1]), bip!([1]; []));
        assert_eq!(k.kostka(&lo, &lo).unwrap(), &t(&[0, 1]));
        assert_eq!(k.kostka(&hi, &hi).unwrap(), &IntPoly::one());
        assert_eq!(k.kostka(&hi, &lo).unwrap(), &IntPoly::one());
        assert_eq!(k.kostka(&lo, &hi).unwrap(), &IntPoly::zero());
        assert_eq!(k.theta(&lo).unwrap(), IntPoly::one());
        assert_eq!(k.theta(&hi).unwrap(), t(&[-1, 1]));
    }

    #[test]
    fn classical_hall_value() {
        let k = KostkaTable::solve(2).unwrap();
        let g = k.hall(&part![1], &part![1], &bip!([]; [1, 1])).unwrap();
        assert_eq!(g, t(&[1, 1]));
    }

    #[test]
    fn rejects_bad_orders() {
        let mut order = enumerate_bipartitions(2);
        order.swap(0, 1);
        assert!(matches!(KostkaTable::solve_with_order(2, &order), Err(Error::InvalidInput(_))));
        order.pop();
        assert!(KostkaTable::solve_with_order(2, &order).is_err());
    }
}
