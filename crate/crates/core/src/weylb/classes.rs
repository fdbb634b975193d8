use alloc::vec::Vec;
use core::fmt;

use crate::combinatorics::{enumerate_bipartitions, Bipartition, Partition};
use crate::IntPoly;

/// A conjugacy class of `W_n`, given by the cycle lengths of a signed
/// permutation split by the sign of each cycle.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedCycleType {
    pub positive: Partition,
    pub negative: Partition,
}

impl SignedCycleType {
    pub fn new(positive: Partition, negative: Partition) -> Self {
        SignedCycleType { positive, negative }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(Partition::column(n), Partition::empty())
    }

    pub fn size(&self) -> usize {
        self.positive.size() + self.negative.size()
    }

    /// Cycle type of the image in `S_n`.
    pub fn underlying(&self) -> Partition {
        self.positive.union(&self.negative)
    }

    /// `ε`, the determinant of the reflection representation.
    pub fn eps(&self) -> i64 {
        sign(self.size() - self.positive.len())
    }

    /// `δ`, the sign of the product of all the `±` signs.
    pub fn delta(&self) -> i64 {
        sign(self.negative.len())
    }

    /// `det(t − w) = ∏(t^{αᵢ} − 1) ∏(t^{βⱼ} + 1)`.
    pub fn reflection_charpoly(&self) -> IntPoly {
        let mut acc = IntPoly::one();
        for &a in self.positive.parts() {
            acc = &acc * &(&IntPoly::monomial(1, a) - &IntPoly::one());
        }
        for &b in self.negative.parts() {
            acc = &acc * &(&IntPoly::monomial(1, b) + &IntPoly::one());
        }
        acc
    }

    /// Centralizer order `∏_k (2k)^{m_k} m_k!` over both signs.
    pub fn centralizer_order(&self) -> u128 {
        z_wreath(&self.positive) * z_wreath(&self.negative)
    }

    /// Number of elements in the class.
    pub fn class_size(&self) -> u128 {
        group_order(self.size()) / self.centralizer_order()
    }
}

impl From<Bipartition> for SignedCycleType {
    fn from(bp: Bipartition) -> Self {
        SignedCycleType::new(bp.mu().clone(), bp.nu().clone())
    }
}

impl fmt::Display for SignedCycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}|{}]", self.positive, self.negative)
    }
}

impl fmt::Debug for SignedCycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub(crate) fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn z_wreath(l: &Partition) -> u128 {
    l.multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &m)| (2 * k as u128).pow(m as u32) * factorial(m))
        .product()
}

/// `|W_n| = 2ⁿ n!`.
pub fn group_order(n: usize) -> u128 {
    (1u128 << n) * factorial(n)
}

/// Size of the class of `W_n` with the given signed cycle type.
pub fn class_size(cls: &SignedCycleType) -> u128 {
    cls.class_size()
}

/// `det(t − w)` for `w` in the given class.
pub fn reflection_charpoly(cls: &SignedCycleType) -> IntPoly {
    cls.reflection_charpoly()
}

/// All classes of `W_n`, indexed like `𝒬_n`.
pub fn classes_of(n: usize) -> Vec<SignedCycleType> {
    enumerate_bipartitions(n).into_iter().map(Into::into).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    /// Signed permutations of `{1..n}` as `(perm, signs)`.
    fn elements(n: usize) -> Vec<(Vec<usize>, Vec<bool>)> {
        let mut perms: Vec<Vec<usize>> = alloc::vec![Vec::new()];
        for k in 0..n {
            perms = perms
                .into_iter()
                .flat_map(|p| {
                    (0..=k).map(move |pos| {
                        let mut q = p.clone();
                        q.insert(pos, k);
                        q
                    })
                })
                .collect();
        }
        let mut out = Vec::new();
        for p in perms {
            for mask in 0..1u32 << n {
                out.push((p.clone(), (0..n).map(|i| mask >> i & 1 == 1).collect()));
            }
        }
        out
    }

    fn signed_type(p: &[usize], s: &[bool]) -> SignedCycleType {
        let n = p.len();
        let mut seen = alloc::vec![false; n];
        let (mut pos, mut neg) = (Vec::new(), Vec::new());
        for i in 0..n {
            if seen[i] {
                continue;
            }
            let (mut j, mut len, mut flips) = (i, 0, 0);
            while !seen[j] {
                seen[j] = true;
                len += 1;
                flips += s[j] as usize;
                j = p[j];
            }
            if flips % 2 == 0 { pos.push(len) } else { neg.push(len) }
        }
        SignedCycleType::new(Partition::from_unsorted(pos), Partition::from_unsorted(neg))
    }

    #[test]
    fn class_sizes_match_element_buckets() {
        for n in 0..=3 {
            let els = elements(n);
            assert_eq!(els.len() as u128, group_order(n));
            for cls in classes_of(n) {
                let count = els.iter().filter(|(p, s)| signed_type(p, s) == cls).count();
                assert_eq!(count as u128, class_size(&cls), "{cls}");
            }
        }
    }

    #[test]
    fn small_class_sizes() {
        assert_eq!(class_size(&SignedCycleType::new(part![1], part![])), 1);
        assert_eq!(class_size(&SignedCycleType::new(part![], part![1])), 1);
        assert_eq!(class_size(&SignedCycleType::new(part![2], part![])), 2);
        for n in 0..=7 {
            let total: u128 = classes_of(n).iter().map(class_size).sum();
            assert_eq!(total, group_order(n));
        }
    }

    #[test]
    fn charpoly_examples() {
        let t = |c: &[i64]| IntPoly::from_i64s(c);
        assert_eq!(SignedCycleType::identity(3).reflection_charpoly(), t(&[-1, 3, -3, 1]));
        assert_eq!(SignedCycleType::new(part![], part![1]).reflection_charpoly(), t(&[1, 1]));
        assert_eq!(SignedCycleType::new(part![], part![2]).reflection_charpoly(), t(&[1, 0, 1]));
    }

    #[test]
    fn charpoly_vanishes_at_one_iff_positive_cycle() {
        for n in 1..=6 {
            for cls in classes_of(n) {
                let at_one = cls.reflection_charpoly().eval_i64(1);
                assert_eq!(at_one == 0.into(), !cls.positive.is_empty(), "{cls}");
                let p = cls.reflection_charpoly();
                assert_eq!(p.degree(), Some(n));
                assert!(p.leading().unwrap() == &1.into());
            }
        }
    }

    #[test]
    fn charpoly_is_the_determinant() {
        // det(t − w) from the element itself via the characteristic polynomial
        // of a signed permutation matrix, computed by cofactor expansion at
        // a few integer points.
        fn det(m: &[Vec<i64>]) -> i64 {
            let n = m.len();
            if n == 0 {
                return 1;
            }
            (0..n)
                .map(|j| {
                    let minor: Vec<Vec<i64>> = m[1..]
                        .iter()
                        .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                        .collect();
                    sign(j) * m[0][j] * det(&minor)
                })
                .sum()
        }
        for n in 1..=3 {
            for (p, s) in elements(n) {
                let cls = signed_type(&p, &s);
                for x in [-2i64, 0, 3] {
                    let mut a = alloc::vec![alloc::vec![0i64; n]; n];
                    for i in 0..n {
                        a[i][i] += x;
                        a[p[i]][i] -= if s[i] { -1 } else { 1 };
                    }
                    assert_eq!(cls.reflection_charpoly().eval_i64(x), det(&a).into());
                }
                // ε is the determinant of w itself
                let mut w = alloc::vec![alloc::vec![0i64; n]; n];
                for i in 0..n {
                    w[p[i]][i] = if s[i] { -1 } else { 1 };
                }
                assert_eq!(det(&w), cls.eps());
            }
        }
    }
}
