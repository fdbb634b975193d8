use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::Partition;
use crate::{Error, Result};

/// An ordered pair of partitions `(μ;ν)`. The elements of size `n` index the
/// orbits of `GL_n` on `V × N`.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    mu: Partition,
    nu: Partition,
}

impl Bipartition {
    pub fn new(mu: Partition, nu: Partition) -> Self {
        Bipartition { mu, nu }
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn nu(&self) -> &Partition {
        &self.nu
    }

    /// `|μ| + |ν|`.
    pub fn size(&self) -> usize {
        self.mu.size() + self.nu.size()
    }

    /// `μ + ν`, the Jordan type of `x` on the orbit.
    pub fn jordan_type(&self) -> Partition {
        self.mu.add(&self.nu)
    }

    /// `b(μ;ν) = 2n(μ) + 2n(ν) + |ν|`.
    pub fn b_stat(&self) -> usize {
        2 * self.mu.n_stat() + 2 * self.nu.n_stat() + self.nu.size()
    }

    /// Orbit dimension `n² − b(μ;ν)`.
    pub fn dim(&self) -> usize {
        let n = self.size();
        n * n - self.b_stat()
    }

    /// Column lengths of the back-to-back diagram read left to right:
    /// `(μᵗ_{μ₁}, …, μᵗ₁, νᵗ₁, …, νᵗ_{ν₁})`.
    pub fn interleaved_composition(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.mu.transpose().parts().iter().rev().copied().collect();
        out.extend_from_slice(self.nu.transpose().parts());
        out
    }

    /// `(ρ₁, σ₁, ρ₂, σ₂, …)`, of length `2·max(ℓ(ρ), ℓ(σ))`.
    pub fn zipped(&self) -> Vec<usize> {
        let len = self.mu.len().max(self.nu.len());
        (0..len)
            .flat_map(|i| [self.mu.part(i), self.nu.part(i)])
            .collect()
    }

    /// `(μ∪μ; ν∪ν)`.
    pub fn double(&self) -> Bipartition {
        Bipartition::new(self.mu.double(), self.nu.double())
    }

    /// `(νᵗ; μᵗ)`, the label of `χ^{μ;ν} ⊗ ε`.
    pub fn eps_dual(&self) -> Bipartition {
        Bipartition::new(self.nu.transpose(), self.mu.transpose())
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.mu, self.nu)
    }
}

impl fmt::Debug for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// Parses `mu;nu` with each side in any form accepted by
/// [`Partition::from_str`], e.g. `(2,1);(1)`, `21;1`, `1^3;1`, `∅;2`.
impl FromStr for Bipartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = strip_outer_parens(s.trim());
        let (mu, nu) = body
            .split_once(';')
            .ok_or_else(|| Error::NotAPartition(s.to_string()))?;
        Ok(Bipartition::new(mu.parse()?, nu.parse()?))
    }
}

fn strip_outer_parens(s: &str) -> &str {
    if !s.starts_with('(') {
        return s;
    }
    let mut depth = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth = depth.saturating_sub(1);
                if depth == 0 {
                    return if i + 1 == s.len() { &s[1..i] } else { s };
                }
            }
            _ => {}
        }
    }
    s
}

/// Shorthand `bip!([2, 1]; [1])`; panics on invalid parts.
#[macro_export]
macro_rules! bip {
    ([$($m:expr),*]; [$($n:expr),*]) => {
        $crate::Bipartition::new($crate::part!($($m),*), $crate::part!($($n),*))
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn b_and_dim() {
        let top = bip!([4]; []);
        assert_eq!((top.b_stat(), top.dim()), (0, 16));
        let bottom = bip!([]; [1, 1, 1, 1]);
        assert_eq!((bottom.b_stat(), bottom.dim()), (16, 0));
        let mid = bip!([1, 1]; [2]);
        assert_eq!((mid.b_stat(), mid.dim()), (4, 12));
    }

    #[test]
    fn composition_of_the_diagram_example() {
        let bp = bip!([3, 3, 1, 1, 1]; [2, 2, 2]);
        assert_eq!(bp.interleaved_composition(), [2, 2, 5, 3, 3]);
        assert_eq!(bip!([]; [5]).interleaved_composition(), [1; 5]);
        assert_eq!(bip!([5]; []).interleaved_composition(), [1; 5]);
    }

    #[test]
    fn doubling() {
        assert_eq!(bip!([2, 1]; [1]).double(), bip!([2, 2, 1, 1]; [1, 1]));
        assert_eq!(bip!([]; []).double(), bip!([]; []));
        assert_eq!(bip!([3]; []).double(), bip!([3, 3]; []));
    }

    #[test]
    fn parse_and_display() {
        let bp = bip!([2, 1]; [1]);
        assert_eq!(bp.to_string(), "(2,1);(1)");
        for s in ["(2,1);(1)", "21;1", "((2,1);(1))", " (2,1) ; 1 "] {
            assert_eq!(s.parse::<Bipartition>().unwrap(), bp, "{s}");
        }
        assert_eq!("∅;1^3".parse::<Bipartition>().unwrap(), bip!([]; [1, 1, 1]));
        assert_eq!("((2,1);∅)".parse::<Bipartition>().unwrap(), bip!([2, 1]; []));
        assert!("21".parse::<Bipartition>().is_err());
    }
}
