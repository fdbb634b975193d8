use alloc::vec::Vec;

use super::classes::{classes_of, group_order, SignedCycleType};
use crate::combinatorics::{enumerate_bipartitions, Bipartition, Partition};
use crate::IntPoly;

/// `χ^λ(ρ)` for the symmetric group, by Murnaghan–Nakayama on beta-sets.
///
/// # Panics
///
/// If `|λ| ≠ |ρ|`.
pub fn sn_character(lambda: &Partition, cycle_type: &Partition) -> i64 {
    assert_eq!(lambda.size(), cycle_type.size(), "size mismatch");
    let l = lambda.len();
    let beta: Vec<usize> = (0..l).map(|i| lambda.part(i) + (l - 1 - i)).collect();
    mn(beta, cycle_type.parts())
}

fn mn(beta: Vec<usize>, cycles: &[usize]) -> i64 {
    let Some((&r, rest)) = cycles.split_first() else {
        return 1;
    };
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        // the hook's leg length is the number of beads jumped over
        let leg = beta.iter().filter(|&&c| b - r < c && c < b).count();
        let mut next = beta.clone();
        next[i] = b - r;
        let val = mn(next, rest);
        total += if leg % 2 == 0 { val } else { -val };
    }
    total
}

fn binom(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// `χ^{μ;ν}(w)` for `w` in the class `cls`, where
/// `χ^{μ;ν} = Ind_{W_{|μ|} × W_{|ν|}}^{W_n}(χ^μ ⊠ δχ^ν)` and `χ^λ` is pulled
/// back along `W_m → S_m`.
///
/// # Panics
///
/// If the label and class have different sizes.
pub fn wn_character(label: &Bipartition, cls: &SignedCycleType) -> i64 {
    assert_eq!(label.size(), cls.size(), "size mismatch");
    let ma = cls.positive.multiplicities();
    let mb = cls.negative.multiplicities();
    let k_max = ma.len().max(mb.len());
    let get = |m: &Vec<usize>, k: usize| m.get(k).copied().unwrap_or(0);
    let target = label.mu().size();

    // choose how many k-cycles of each sign go to the first factor
    let mut total = 0i64;
    let mut split: Vec<(usize, usize)> = alloc::vec![(0, 0); k_max];
    #[allow(clippy::type_complexity)]
    fn walk(
        k: usize,
        used: usize,
        target: usize,
        k_max: usize,
        bounds: &dyn Fn(usize) -> (usize, usize),
        split: &mut Vec<(usize, usize)>,
        visit: &mut dyn FnMut(&[(usize, usize)]),
    ) {
        if k == k_max {
            if used == target {
                visit(split);
            }
            return;
        }
        let (pa, pb) = bounds(k);
        for a in 0..=pa {
            for b in 0..=pb {
                let add = k * (a + b);
                if used + add > target {
                    break;
                }
                split[k] = (a, b);
                walk(k + 1, used + add, target, k_max, bounds, split, visit);
            }
        }
        split[k] = (0, 0);
    }
    let bounds = |k: usize| (get(&ma, k), get(&mb, k));
    walk(1, 0, target, k_max, &bounds, &mut split, &mut |s| {
        let (mut p1, mut n1, mut p2, mut n2) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
        let mut weight = 1i64;
        for (k, &(a, b)) in s.iter().enumerate().skip(1) {
            let (ta, tb) = bounds(k);
            weight *= binom(ta, a) * binom(tb, b);
            p1.extend(core::iter::repeat_n(k, a));
            n1.extend(core::iter::repeat_n(k, b));
            p2.extend(core::iter::repeat_n(k, ta - a));
            n2.extend(core::iter::repeat_n(k, tb - b));
        }
        let first = SignedCycleType::new(Partition::from_unsorted(p1), Partition::from_unsorted(n1));
        let second = SignedCycleType::new(Partition::from_unsorted(p2), Partition::from_unsorted(n2));
        let v1 = sn_character(label.mu(), &first.underlying());
        if v1 == 0 {
            return;
        }
        let v2 = second.delta() * sn_character(label.nu(), &second.underlying());
        total += weight * v1 * v2;
    });
    total
}

/// The character table of `W_n`, with labels and classes both in the
/// canonical order of `𝒬_n`.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    n: usize,
    labels: Vec<Bipartition>,
    classes: Vec<SignedCycleType>,
    sizes: Vec<u128>,
    values: Vec<Vec<i64>>,
    charpolys: Vec<IntPoly>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let labels = enumerate_bipartitions(n);
        let classes = classes_of(n);
        let sizes = classes.iter().map(SignedCycleType::class_size).collect();
        let values = labels
            .iter()
            .map(|l| classes.iter().map(|c| wn_character(l, c)).collect())
            .collect();
        let charpolys = classes.iter().map(SignedCycleType::reflection_charpoly).collect();
        CharacterTable { n, labels, classes, sizes, values, charpolys }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> u128 {
        group_order(self.n)
    }

    pub fn labels(&self) -> &[Bipartition] {
        &self.labels
    }

    pub fn classes(&self) -> &[SignedCycleType] {
        &self.classes
    }

    pub fn class_sizes(&self) -> &[u128] {
        &self.sizes
    }

    pub fn charpolys(&self) -> &[IntPoly] {
        &self.charpolys
    }

    pub fn label_index(&self, label: &Bipartition) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn identity_class(&self) -> usize {
        let id = SignedCycleType::identity(self.n);
        self.classes.iter().position(|c| *c == id).expect("identity class")
    }

    /// Values of `χ^{label}` on every class.
    pub fn character(&self, label: &Bipartition) -> &[i64] {
        let i = self.label_index(label).expect("label of this rank");
        &self.values[i]
    }

    pub fn value(&self, label: usize, class: usize) -> i64 {
        self.values[label][class]
    }

    pub fn eps(&self) -> Vec<i64> {
        self.classes.iter().map(SignedCycleType::eps).collect()
    }

    pub fn delta(&self) -> Vec<i64> {
        self.classes.iter().map(SignedCycleType::delta).collect()
    }

    /// `Σ_c |c|·a(c)·b(c)`, i.e. `|W_n|` times the inner product (all
    /// characters here are real).
    pub fn pairing(&self, a: &[i64], b: &[i64]) -> i128 {
        self.sizes
            .iter()
            .zip(a.iter().zip(b))
            .map(|(&s, (&x, &y))| s as i128 * x as i128 * y as i128)
            .sum()
    }
}

/// Pointwise product of class functions.
pub fn tensor(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x * y).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{bip, part};

    #[test]
    fn symmetric_group_examples() {
        for n in 1..=6 {
            for rho in Partition::all_of(n) {
                assert_eq!(sn_character(&Partition::row(n), &rho), 1);
                let sign = super::super::classes::sign(n - rho.len());
                assert_eq!(sn_character(&Partition::column(n), &rho), sign);
            }
        }
        assert_eq!(sn_character(&part![2, 1], &part![1, 1, 1]), 2);
        assert_eq!(sn_character(&part![2, 1], &part![3]), -1);
        assert_eq!(sn_character(&part![2, 1], &part![2, 1]), 0);
        assert_eq!(sn_character(&part![], &part![]), 1);
    }

    #[test]
    fn rank_one_table() {
        let t = CharacterTable::new(1);
        // classes: [∅|(1)], [(1)|∅]
        assert_eq!(t.character(&bip!([1]; [])), [1, 1]);
        assert_eq!(t.character(&bip!([]; [1])), [-1, 1]);
    }

    #[test]
    fn degree_formula() {
        let dim = |l: &Partition| sn_character(l, &Partition::column(l.size()));
        for n in 0..=5 {
            let t = CharacterTable::new(n);
            let id = t.identity_class();
            for (i, l) in t.labels().iter().enumerate() {
                let binom_n = binom(n, l.mu().size());
                assert_eq!(t.value(i, id), binom_n * dim(l.mu()) * dim(l.nu()));
            }
        }
    }
}
