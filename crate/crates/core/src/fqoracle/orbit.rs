use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::field::Fq;
use super::linalg::{coordinates, nullspace, FqMatrix, FqVector, Subspace};
use crate::combinatorics::{Bipartition, Partition};
use crate::{Error, Result};

/// A point `(v, x)` of the enhanced nilpotent cone over `𝔽_q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FqPair {
    pub v: FqVector,
    pub x: FqMatrix,
}

impl FqPair {
    pub fn new(v: FqVector, x: FqMatrix) -> Result<Self> {
        if v.len() != x.n() || v.iter().any(|&c| c >= x.q()) {
            return Err(Error::InvalidInput(format!("vector does not fit F_{}^{}", x.q(), x.n())));
        }
        if !x.is_nilpotent() {
            return Err(Error::InvalidInput(String::from("x is not nilpotent")));
        }
        Ok(FqPair { v, x })
    }

    /// The pair whose standard basis is a normal basis of type `label`:
    /// `x` in Jordan form for `μ+ν` and `v = Σ_i e_{i,μ_i}`.
    pub fn representative(label: &Bipartition, q: u32) -> Result<Self> {
        let f = Fq::new(q)?;
        let lambda = label.jordan_type();
        let x = FqMatrix::jordan(f, &lambda);
        let mut v = alloc::vec![0u32; lambda.size()];
        let mut off = 0;
        for (i, &l) in lambda.parts().iter().enumerate() {
            let m = label.mu().part(i);
            if m > 0 {
                v[off + m - 1] = 1;
            }
            off += l;
        }
        Ok(FqPair { v, x })
    }

    pub fn n(&self) -> usize {
        self.x.n()
    }

    pub fn field(&self) -> Fq {
        self.x.field()
    }

    /// `(g v, g x g⁻¹)`.
    pub fn act(&self, g: &FqMatrix) -> Result<FqPair> {
        Ok(FqPair { v: g.apply(&self.v), x: self.x.conjugate(g)? })
    }
}

/// A basis of the centralizer `E^x = {y : xy = yx}`.
pub fn centralizer_basis(x: &FqMatrix) -> Vec<FqMatrix> {
    let (n, f) = (x.n(), x.field());
    // unknown y_{kb} sits at k·n + b; one equation per entry (a, b)
    let mut rows = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let mut row = alloc::vec![0u32; n * n];
            for k in 0..n {
                row[k * n + b] = f.add(row[k * n + b], x.get(a, k));
                row[a * n + k] = f.sub(row[a * n + k], x.get(k, b));
            }
            rows.push(row);
        }
    }
    nullspace(f, rows, n * n)
        .into_iter()
        .map(|e| FqMatrix::from_parts(f, n, e))
        .collect()
}

/// `E^x v`, given a centralizer basis.
pub fn exv_space_with(p: &FqPair, centralizer: &[FqMatrix]) -> Subspace {
    Subspace::span(p.field(), p.n(), centralizer.iter().map(|y| y.apply(&p.v)))
}

pub fn exv_space(p: &FqPair) -> Subspace {
    exv_space_with(p, &centralizer_basis(&p.x))
}

/// `(μ;ν)` with `μ` the type of `x` on `E^x v` and `ν` the type on `V/E^x v`.
pub fn classify_with(p: &FqPair, centralizer: &[FqMatrix]) -> Bipartition {
    let e = exv_space_with(p, centralizer);
    Bipartition::new(e.restricted_type(&p.x), e.quotient_type(&p.x))
}

pub fn classify_orbit(p: &FqPair) -> Bipartition {
    classify_with(p, &centralizer_basis(&p.x))
}

/// `𝔽[x] v`.
pub fn cyclic_span(p: &FqPair) -> Subspace {
    let mut vs = Vec::new();
    let mut w = p.v.clone();
    for _ in 0..p.n() {
        vs.push(w.clone());
        w = p.x.apply(&w);
    }
    Subspace::span(p.field(), p.n(), vs)
}

/// `dim 𝔽[x]v = μ₁` and `x` acts on `V/𝔽[x]v` with type `(ν₁+μ₂, ν₂+μ₃, …)`.
pub fn quotient_type_check(p: &FqPair) -> bool {
    let label = classify_orbit(p);
    let (mu, nu) = (label.mu(), label.nu());
    let c = cyclic_span(p);
    if c.dim() != mu.part(0) {
        return false;
    }
    let len = mu.len().max(nu.len());
    let expect = Partition::from_unsorted((0..len).map(|i| nu.part(i) + mu.part(i + 1)).collect());
    c.quotient_type(&p.x) == expect
}

/// The flag `W_0 ⊂ … ⊂ W_{μ₁+ν₁}` attached to `(v, x)`: powers of `x`
/// applied to `E^x v` below it, preimages above it.
pub fn flag_w(p: &FqPair) -> Vec<Subspace> {
    let cent = centralizer_basis(&p.x);
    let e = exv_space_with(p, &cent);
    let label = Bipartition::new(e.restricted_type(&p.x), e.quotient_type(&p.x));
    let (m1, n1) = (label.mu().part(0), label.nu().part(0));
    let mut below = alloc::vec![e.clone()];
    for _ in 0..m1 {
        let next = below.last().expect("nonempty").image(&p.x);
        below.push(next);
    }
    // below[s] = x^s E^x v, so W_k = below[μ₁ − k] for k ≤ μ₁
    let mut flag: Vec<Subspace> = (0..=m1).map(|k| below[m1 - k].clone()).collect();
    let mut cur = e;
    for _ in 0..n1 {
        cur = cur.preimage(&p.x);
        flag.push(cur.clone());
    }
    flag
}

/// A Jordan basis `{v_ij}` with `x v_{i1} = 0`, `x v_ij = v_{i,j−1}` and
/// `v = Σ_i v_{i,μ_i}`. `blocks[i][j−1]` is `v_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalBasis {
    pub blocks: Vec<Vec<FqVector>>,
    pub label: Bipartition,
}

/// Tops of Jordan chains, longest first.
fn jordan_tops(x: &FqMatrix) -> Vec<(usize, FqVector)> {
    let (n, f) = (x.n(), x.field());
    let mut kernels = alloc::vec![Subspace::zero(n)];
    let mut pw = FqMatrix::identity(f, n);
    while kernels.last().expect("nonempty").dim() < n {
        pw = pw.mul(x);
        kernels.push(Subspace::span(f, n, nullspace(f, pw.rows(), n)));
    }
    let mut tops: Vec<(usize, FqVector)> = Vec::new();
    for k in (1..kernels.len()).rev() {
        let mut u = kernels[k - 1].clone();
        for (len, top) in &tops {
            let mut w = top.clone();
            for _ in 0..len - k {
                w = x.apply(&w);
            }
            u = u.sum(f, &Subspace::span(f, n, [w]));
        }
        for b in kernels[k].basis() {
            if !u.contains(f, b) {
                tops.push((k, b.clone()));
                u = u.sum(f, &Subspace::span(f, n, [b.clone()]));
            }
        }
    }
    tops
}

fn chain(x: &FqMatrix, len: usize, top: FqVector) -> Vec<FqVector> {
    let mut c = alloc::vec![top];
    for _ in 1..len {
        let next = x.apply(c.last().expect("nonempty"));
        c.push(next);
    }
    c.reverse();
    c
}

/// Rewrites each block so that its component of `v` is a single basis
/// vector; returns the resulting `μ_i`.
fn normalize_blocks(x: &FqMatrix, v: &[u32], blocks: &mut [Vec<FqVector>]) -> Vec<usize> {
    let f = x.field();
    let all: Vec<FqVector> = blocks.iter().flatten().cloned().collect();
    let c = coordinates(f, &all, v).expect("Jordan basis spans V");
    let mut off = 0;
    let mut mus = Vec::with_capacity(blocks.len());
    for block in blocks.iter_mut() {
        let len = block.len();
        let ci = &c[off..off + len];
        off += len;
        let mu = ci.iter().rposition(|&a| a != 0).map_or(0, |j| j + 1);
        if mu > 0 {
            let nu = len - mu;
            let mut top = alloc::vec![0u32; v.len()];
            for j in 1..=mu {
                for (t, &b) in top.iter_mut().zip(&block[j + nu - 1]) {
                    *t = f.axpy(ci[j - 1], b, *t);
                }
            }
            *block = chain(x, len, top);
        }
        mus.push(mu);
    }
    mus
}

/// A normal basis for `(v, x)` by the block-rewriting procedure: take any
/// Jordan basis, rewrite each block so that `v` meets it in one basis
/// vector, then repair the places where `μ` or `ν` fails to be a partition
/// by sliding one block into its neighbour.
pub fn normal_basis(p: &FqPair) -> NormalBasis {
    let f = p.field();
    let x = &p.x;
    let mut blocks: Vec<Vec<FqVector>> =
        jordan_tops(x).into_iter().map(|(len, top)| chain(x, len, top)).collect();
    let lam: Vec<usize> = blocks.iter().map(Vec::len).collect();
    let limit = 4 * (p.n() + 1) * (p.n() + 1);
    for _ in 0..limit {
        let mus = normalize_blocks(x, &p.v, &mut blocks);
        let nus: Vec<usize> = lam.iter().zip(&mus).map(|(l, m)| l - m).collect();
        let bad = (0..lam.len().saturating_sub(1))
            .rev()
            .find(|&s| mus[s] < mus[s + 1] || nus[s] < nus[s + 1]);
        let Some(s) = bad else {
            let label = Bipartition::new(Partition::from_unsorted(mus), Partition::from_unsorted(nus));
            return NormalBasis { blocks, label };
        };
        if mus[s] < mus[s + 1] {
            // v_{s+1,j} ← v_{s+1,j} − v_{s,j}
            let (head, tail) = blocks.split_at_mut(s + 1);
            for (a, b) in tail[0].iter_mut().zip(&head[s]) {
                for (u, &w) in a.iter_mut().zip(b) {
                    *u = f.sub(*u, w);
                }
            }
        } else {
            // v_{s,j} ← v_{s,j} − v_{s+1,j−d} for j > d = λ_s − λ_{s+1}
            let d = lam[s] - lam[s + 1];
            for j in d..lam[s] {
                let (a, b) = (blocks[s][j].clone(), &blocks[s + 1][j - d]);
                blocks[s][j] = a.iter().zip(b).map(|(&u, &w)| f.sub(u, w)).collect();
            }
        }
    }
    unreachable!("normal basis repair did not terminate")
}
