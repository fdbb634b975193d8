use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::field::Fq;
use super::linalg::{FqMatrix, Subspace};
use super::orbit::{centralizer_basis, classify_with, FqPair};
use crate::combinatorics::{enumerate_bipartitions, Bipartition, Partition};
use crate::{Error, Result};

/// Work limits, in points visited.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub limit: u64,
}

impl Budget {
    /// Covers `n ≤ 3` at `q = 3` and `n ≤ 2` up to `q = 7`.
    pub const DEFAULT: Budget = Budget { limit: 1_000_000 };
    /// Adds `n = 4` at `q = 2`.
    pub const EXTENDED: Budget = Budget { limit: 1 << 24 };

    /// Refuses work beyond the limit, reporting the estimate.
    pub fn check(self, required: u64) -> Result<()> {
        if required > self.limit {
            Err(Error::BudgetExceeded { required, limit: self.limit })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}

fn pow(q: u64, e: usize) -> u64 {
    q.checked_pow(e as u32).unwrap_or(u64::MAX)
}

/// Points of `V × End(V)`, the search space of [`count_orbits`].
pub fn orbit_search_size(n: usize, q: u32) -> u64 {
    pow(q as u64, n * n + n)
}

/// Number of independent chunks [`count_orbits_chunk`] splits the search
/// into: one per value of the first two matrix entries.
pub fn orbit_chunks(n: usize, q: u32) -> usize {
    (q as usize).pow((n * n).min(2) as u32)
}

/// Orbit counts over the matrices whose leading entries encode `chunk`.
pub fn count_orbits_chunk(n: usize, q: u32, chunk: usize) -> Result<BTreeMap<Bipartition, u64>> {
    let f = Fq::new(q)?;
    let fixed = (n * n).min(2);
    if chunk >= orbit_chunks(n, q) {
        return Err(Error::InvalidInput(format!("chunk {chunk} out of range")));
    }
    let mut counts: BTreeMap<Bipartition, u64> = enumerate_bipartitions(n).into_iter().map(|l| (l, 0)).collect();
    let mut entries = alloc::vec![0u32; n * n];
    let mut c = chunk;
    for e in entries.iter_mut().take(fixed) {
        *e = (c % q as usize) as u32;
        c /= q as usize;
    }
    let vectors = all_vectors(q, n);
    loop {
        let x = FqMatrix::from_parts(f, n, entries.clone());
        if x.is_nilpotent() {
            let cent = centralizer_basis(&x);
            for v in &vectors {
                let p = FqPair { v: v.clone(), x: x.clone() };
                *counts.get_mut(&classify_with(&p, &cent)).expect("label in Q_n") += 1;
            }
        }
        // odometer over the free entries
        let mut i = fixed;
        while i < entries.len() {
            entries[i] += 1;
            if entries[i] < q {
                break;
            }
            entries[i] = 0;
            i += 1;
        }
        if i >= entries.len() {
            break;
        }
    }
    Ok(counts)
}

/// `|𝒪(𝔽_q)|` for every orbit, by classifying every `(v, x)` with `x`
/// nilpotent.
pub fn count_orbits(n: usize, q: u32, budget: Budget) -> Result<BTreeMap<Bipartition, u64>> {
    Fq::new(q)?;
    budget.check(orbit_search_size(n, q))?;
    let mut total: BTreeMap<Bipartition, u64> = BTreeMap::new();
    for chunk in 0..orbit_chunks(n, q) {
        for (l, c) in count_orbits_chunk(n, q, chunk)? {
            *total.entry(l).or_insert(0) += c;
        }
    }
    Ok(total)
}

pub fn all_vectors(q: u32, n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::with_capacity(pow(q as u64, n) as usize);
    let mut v = alloc::vec![0u32; n];
    loop {
        out.push(v.clone());
        let mut i = 0;
        while i < n {
            v[i] += 1;
            if v[i] < q {
                break;
            }
            v[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
    }
    out
}

/// Number of complete flags in `𝔽_qⁿ`, an upper bound for any partial flag
/// search.
pub fn flag_search_size(n: usize, q: u32) -> u64 {
    let q = q as u128;
    let mut acc: u128 = 1;
    for k in 1..=n {
        acc = acc.saturating_mul((q.pow(k as u32) - 1) / (q - 1));
    }
    acc.min(u64::MAX as u128) as u64
}

/// Number of all subspaces of `𝔽_qⁿ`.
pub fn subspace_search_size(n: usize, q: u32) -> u64 {
    (0..=n).map(|m| Subspace::count_of_dim(q as u64, n, m)).sum()
}

/// Partial flags `0 = V_0 ⊂ … ⊂ V_{μ₁+ν₁} = V` with jumps given by the
/// interleaved composition of `flag_type`, `x V_k ⊆ V_{k−1}` and
/// `v ∈ V_{μ₁}`.
pub fn count_fiber(p: &FqPair, flag_type: &Bipartition, budget: Budget) -> Result<u64> {
    let n = p.n();
    if flag_type.size() != n {
        return Err(Error::InvalidInput(format!("{flag_type} is not in Q_{n}")));
    }
    budget.check(flag_search_size(n, p.field().q()))?;
    let comp = flag_type.interleaved_composition();
    let m1 = flag_type.mu().part(0);
    let mut count = 0u64;
    fiber_step(p, &comp, m1, 0, &Subspace::zero(n), &mut count);
    Ok(count)
}

fn fiber_step(p: &FqPair, comp: &[usize], m1: usize, k: usize, prev: &Subspace, count: &mut u64) {
    let f = p.field();
    if k == m1 && !prev.contains(f, &p.v) {
        return;
    }
    if k == comp.len() {
        *count += 1;
        return;
    }
    // V_{k+1} runs over subspaces of x⁻¹(V_k) containing V_k
    let upper = prev.preimage(&p.x);
    let ext = complement_in(f, prev, &upper);
    let need = comp[k];
    if need > ext.len() {
        return;
    }
    Subspace::for_each_of_dim(f, ext.len(), need, &mut |s| {
        let lifted = s.basis().iter().map(|c| combine(f, &ext, c));
        let next = prev.sum(f, &Subspace::span(f, p.n(), lifted));
        fiber_step(p, comp, m1, k + 1, &next, count);
    });
}

/// Vectors extending a basis of `inner` to one of `outer`.
fn complement_in(f: Fq, inner: &Subspace, outer: &Subspace) -> Vec<Vec<u32>> {
    let n = inner.ambient_dim();
    let mut out = Vec::new();
    let mut cur = inner.clone();
    for b in outer.basis() {
        if !cur.contains(f, b) {
            out.push(b.clone());
            cur = cur.sum(f, &Subspace::span(f, n, [b.clone()]));
        }
    }
    out
}

fn combine(f: Fq, vecs: &[Vec<u32>], coeffs: &[u32]) -> Vec<u32> {
    let n = vecs.first().map_or(0, Vec::len);
    let mut out = alloc::vec![0u32; n];
    for (v, &c) in vecs.iter().zip(coeffs) {
        if c != 0 {
            for (o, &x) in out.iter_mut().zip(v) {
                *o = f.axpy(c, x, *o);
            }
        }
    }
    out
}

/// Subspaces `W ∋ v` stable under `x` with `x|_W` of type `ρ` and `x|_{V/W}`
/// of type `σ`.
pub fn count_hall(p: &FqPair, sub_quot: (&Partition, &Partition), budget: Budget) -> Result<u64> {
    let (rho, sigma) = sub_quot;
    let n = p.n();
    if rho.size() + sigma.size() != n {
        return Err(Error::InvalidInput(format!("|{rho}| + |{sigma}| ≠ {n}")));
    }
    let f = p.field();
    budget.check(subspace_search_size(n, f.q()))?;
    let mut count = 0;
    Subspace::for_each_of_dim(f, n, rho.size(), &mut |w| {
        if w.contains(f, &p.v) && w.is_stable(&p.x) && w.restricted_type(&p.x) == *rho && w.quotient_type(&p.x) == *sigma {
            count += 1;
        }
    });
    Ok(count)
}

/// Whether some `x`-stable `W ∋ v` of dimension `|μ|` has `x|_W` of type
/// `≤ μ` and `x|_{V/W}` of type `≤ ν` (dominance), i.e. whether `(v, x)`
/// lies in the closure of the orbit of `target`.
pub fn closure_member(p: &FqPair, target: &Bipartition, budget: Budget) -> Result<bool> {
    let n = p.n();
    if target.size() != n {
        return Err(Error::InvalidInput(format!("{target} is not in Q_{n}")));
    }
    let f = p.field();
    budget.check(Subspace::count_of_dim(f.q() as u64, n, target.mu().size()))?;
    let mut found = false;
    Subspace::for_each_of_dim(f, n, target.mu().size(), &mut |w| {
        if !found
            && w.contains(f, &p.v)
            && w.is_stable(&p.x)
            && w.restricted_type(&p.x).dominance_leq(target.mu())
            && w.quotient_type(&p.x).dominance_leq(target.nu())
        {
            found = true;
        }
    });
    Ok(found)
}
