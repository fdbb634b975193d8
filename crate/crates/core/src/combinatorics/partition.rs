use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// An integer partition, stored as its positive parts in nonincreasing order.
///
/// Indexing past the last part reads as zero, so `part(i)` is total.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, dropping zero parts. Fails if the parts increase.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(alloc::format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Sorts the input into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(alloc::vec![n])
        }
    }

    /// The one-column partition `(1ⁿ)`.
    pub fn column(n: usize) -> Self {
        Partition(alloc::vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `λ_{i+1}`, i.e. zero-based, and zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn largest(&self) -> usize {
        self.part(0)
    }

    pub fn transpose(&self) -> Partition {
        let cols = self.largest();
        Partition(
            (1..=cols)
                .map(|i| self.0.iter().take_while(|&&p| p >= i).count())
                .collect(),
        )
    }

    /// `n(λ) = Σ (i−1) λ_i`.
    pub fn n_stat(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Componentwise sum `λ + μ`.
    pub fn add(&self, other: &Partition) -> Partition {
        let len = self.len().max(other.len());
        Partition((0..len).map(|i| self.part(i) + other.part(i)).collect())
    }

    /// The union `λ ∪ μ`: all parts of both, re-sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Self::from_unsorted(parts)
    }

    /// `λ ∪ λ`, each part repeated twice.
    pub fn double(&self) -> Partition {
        self.union(self)
    }

    /// `m[k]` is the number of parts equal to `k`; the vector has length
    /// `largest() + 1`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = alloc::vec![0; self.largest() + 1];
        for &p in &self.0 {
            m[p] += 1;
        }
        m
    }

    /// Dominance order. Partitions of different sizes are never related.
    pub fn dominance_leq(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return false;
            }
        }
        true
    }

    /// Every partition of `n`, in reverse lexicographic order starting at
    /// `(n)`.
    pub fn all_of(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(n, n, &mut cur, &mut out);
        out
    }
}

fn fill(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

/// Partitions of `n` in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    Partition::all_of(n)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `(3,1,1)`, `3,1,1`, `3,1^2`, the compact `311`, or `∅` / `-` /
/// empty for the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::NotAPartition(s.to_string());
        let body = s.trim();
        let body = body
            .strip_prefix('(')
            .and_then(|b| b.strip_suffix(')'))
            .unwrap_or(body)
            .trim();
        if body.is_empty() || body == "∅" || body == "-" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        let compact = !body.contains(',') && !body.contains('^');
        if compact {
            for c in body.chars() {
                parts.push(c.to_digit(10).ok_or_else(bad)? as usize);
            }
        } else {
            for tok in body.split(',') {
                let tok = tok.trim();
                let (p, m) = match tok.split_once('^') {
                    Some((p, m)) => (p, m.trim().parse::<usize>().map_err(|_| bad())?),
                    None => (tok, 1),
                };
                let p = p.trim().parse::<usize>().map_err(|_| bad())?;
                parts.extend(core::iter::repeat_n(p, m));
            }
        }
        if parts.contains(&0) {
            return Err(bad());
        }
        Partition::new(parts).map_err(|_| bad())
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

/// Shorthand used by tests and examples; panics on invalid input.
#[macro_export]
macro_rules! part {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::Partition::new([$($p),+].to_vec()).expect("valid partition")
    };
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p(&[2, 2]).transpose(), p(&[2, 2]));
    }

    #[test]
    fn n_stat_examples() {
        assert_eq!(p(&[1, 1, 1, 1]).n_stat(), 6);
        assert_eq!(p(&[4]).n_stat(), 0);
        assert_eq!(p(&[2, 1, 1]).n_stat(), 3);
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[2, 2]).dominance_leq(&p(&[3, 1])));
        assert!(!p(&[3, 1]).dominance_leq(&p(&[2, 2])));
        assert!(p(&[3, 1]).dominance_leq(&p(&[3, 1])));
        assert!(!p(&[1]).dominance_leq(&p(&[2])));
    }

    #[test]
    fn rejects_increasing_parts() {
        assert!(Partition::new(alloc::vec![1, 2]).is_err());
        assert_eq!(p(&[2, 1, 0, 0]).parts(), &[2, 1]);
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
    }

    #[test]
    fn parsing() {
        assert_eq!("(3,1,1)".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!("3,1^2".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!("311".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!("1^3".parse::<Partition>().unwrap(), p(&[1, 1, 1]));
        assert_eq!("∅".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
        assert_eq!(p(&[2, 1]).to_string(), "(2,1)");
    }

    fn any_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1usize..7, 0..7).prop_map(Partition::from_unsorted)
    }

    proptest! {
        #[test]
        fn transpose_is_involutive(l in any_partition()) {
            prop_assert_eq!(l.transpose().transpose(), l.clone());
            prop_assert_eq!(l.transpose().size(), l.size());
        }

        #[test]
        fn n_stat_via_columns(l in any_partition()) {
            let cols: usize = l.transpose().parts().iter().map(|&c| c * (c.max(1) - 1) / 2).sum();
            prop_assert_eq!(l.n_stat(), cols);
        }

        #[test]
        fn n_stat_is_additive(a in any_partition(), b in any_partition()) {
            prop_assert_eq!(a.add(&b).n_stat(), a.n_stat() + b.n_stat());
        }

        #[test]
        fn dominance_reverses_under_transpose(n in 0usize..8, i in 0usize..30, j in 0usize..30) {
            let ps = partitions_of(n);
            let (a, b) = (&ps[i % ps.len()], &ps[j % ps.len()]);
            prop_assert_eq!(a.dominance_leq(b), b.transpose().dominance_leq(&a.transpose()));
        }

        #[test]
        fn display_round_trips(l in any_partition()) {
            prop_assert_eq!(l.to_string().parse::<Partition>().unwrap(), l);
        }
    }
}
