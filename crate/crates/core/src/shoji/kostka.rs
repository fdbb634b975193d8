use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::combinatorics::Partition;
use crate::IntPoly;

/// A semistandard tableau as its rows, each weakly increasing.
pub type Tableau = Vec<Vec<usize>>;

/// All semistandard tableaux of shape `shape` and content `content`
/// (letters `1..=ℓ(content)`), built as chains of horizontal strips.
pub fn semistandard_tableaux(shape: &Partition, content: &Partition) -> Vec<Tableau> {
    let mut out = Vec::new();
    if shape.size() != content.size() {
        return out;
    }
    let rows = shape.len();
    let mut cur: Vec<usize> = alloc::vec![0; rows];
    let mut tab: Tableau = alloc::vec![Vec::new(); rows];
    strips(shape, content.parts(), 0, &mut cur, &mut tab, &mut out);
    out
}

fn strips(
    shape: &Partition,
    content: &[usize],
    letter: usize,
    cur: &mut Vec<usize>,
    tab: &mut Tableau,
    out: &mut Vec<Tableau>,
) {
    if letter == content.len() {
        if cur.iter().enumerate().all(|(i, &c)| c == shape.part(i)) {
            out.push(tab.clone());
        }
        return;
    }
    // add `content[letter]` boxes as a horizontal strip, row by row
    #[allow(clippy::too_many_arguments)]
    fn place(
        row: usize,
        left: usize,
        shape: &Partition,
        content: &[usize],
        letter: usize,
        cur: &mut Vec<usize>,
        tab: &mut Tableau,
        out: &mut Vec<Tableau>,
        prev: &[usize],
    ) {
        if row == cur.len() {
            if left == 0 {
                strips(shape, content, letter + 1, cur, tab, out);
            }
            return;
        }
        // new row length is bounded by the shape and, for a horizontal
        // strip, by the previous length of the row above
        let cap = if row == 0 { shape.part(0) } else { prev[row - 1] };
        let max_add = shape.part(row).min(cap).saturating_sub(cur[row]).min(left);
        for add in (0..=max_add).rev() {
            cur[row] += add;
            tab[row].extend(core::iter::repeat_n(letter + 1, add));
            place(row + 1, left - add, shape, content, letter, cur, tab, out, prev);
            let len = tab[row].len();
            tab[row].truncate(len - add);
            cur[row] -= add;
        }
    }
    let prev = cur.clone();
    place(0, content[letter], shape, content, letter, cur, tab, out, &prev);
}

/// Kostka number `K_{λμ}`: the number of semistandard tableaux of shape `λ`
/// and content `μ`.
pub fn kostka_number(lambda: &Partition, mu: &Partition) -> u64 {
    semistandard_tableaux(lambda, mu).len() as u64
}

/// Reading word: rows from bottom to top, each left to right.
pub fn reading_word(t: &Tableau) -> Vec<usize> {
    t.iter().rev().flatten().copied().collect()
}

/// Lascoux–Schützenberger charge of a word whose content is a partition.
///
/// Standard subwords are peeled off by scanning leftwards (cyclically) for
/// `1, 2, …`; each letter's index grows by one whenever the scan wraps
/// around.
pub fn charge(word: &[usize]) -> usize {
    let mut alive: Vec<Option<usize>> = word.iter().map(|&x| Some(x)).collect();
    let len = alive.len();
    let mut total = 0;
    while alive.iter().any(Option::is_some) {
        let Some(mut pos) = (0..len).rev().find(|&i| alive[i] == Some(1)) else {
            break;
        };
        alive[pos] = None;
        let mut index = 0;
        let mut letter = 2;
        loop {
            let found = (0..pos)
                .rev()
                .find(|&i| alive[i] == Some(letter))
                .map(|i| (i, false))
                .or_else(|| (pos..len).rev().find(|&i| alive[i] == Some(letter)).map(|i| (i, true)));
            let Some((p, wrapped)) = found else { break };
            if wrapped {
                index += 1;
            }
            total += index;
            alive[p] = None;
            pos = p;
            letter += 1;
        }
    }
    total
}

/// Modified Kostka polynomial `K̃_{λπ}(t) = Σ_T t^{n(π) − charge(T)}` over
/// semistandard tableaux of shape `λ` and content `π`.
pub fn kostka_polynomial(lambda: &Partition, pi: &Partition) -> IntPoly {
    let n_pi = pi.n_stat();
    let mut acc = IntPoly::zero();
    for t in semistandard_tableaux(lambda, pi) {
        let c = charge(&reading_word(&t));
        acc += &IntPoly::monomial(1, n_pi - c);
    }
    acc
}

/// Memo of Kostka numbers and polynomials for partitions up to a size.
#[derive(Clone, Debug, Default)]
pub struct KostkaCache {
    numbers: BTreeMap<(Partition, Partition), u64>,
    polys: BTreeMap<(Partition, Partition), IntPoly>,
}

impl KostkaCache {
    /// Precomputes every pair of partitions of the same size `≤ max`.
    pub fn up_to(max: usize) -> Self {
        let mut c = KostkaCache::default();
        for m in 0..=max {
            let ps = Partition::all_of(m);
            for l in &ps {
                for p in &ps {
                    let tabs = semistandard_tableaux(l, p);
                    let n_p = p.n_stat();
                    let mut poly = IntPoly::zero();
                    for t in &tabs {
                        poly += &IntPoly::monomial(1, n_p - charge(&reading_word(t)));
                    }
                    c.numbers.insert((l.clone(), p.clone()), tabs.len() as u64);
                    c.polys.insert((l.clone(), p.clone()), poly);
                }
            }
        }
        c
    }

    /// `K_{λμ}`, zero for different sizes.
    pub fn number(&self, lambda: &Partition, mu: &Partition) -> u64 {
        if lambda.size() != mu.size() {
            return 0;
        }
        match self.numbers.get(&(lambda.clone(), mu.clone())) {
            Some(&k) => k,
            None => kostka_number(lambda, mu),
        }
    }

    /// `K̃_{λπ}(t)`, zero for different sizes.
    pub fn poly(&self, lambda: &Partition, pi: &Partition) -> IntPoly {
        if lambda.size() != pi.size() {
            return IntPoly::zero();
        }
        match self.polys.get(&(lambda.clone(), pi.clone())) {
            Some(p) => p.clone(),
            None => kostka_polynomial(lambda, pi),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn t(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn numbers() {
        assert_eq!(kostka_number(&part![2, 1], &part![1, 1, 1]), 2);
        assert_eq!(kostka_number(&part![1, 1], &part![2]), 0);
        for l in Partition::all_of(5) {
            assert_eq!(kostka_number(&l, &l), 1);
        }
        // Σ_λ K_{λ,1ⁿ}² = n!
        let s: u64 = Partition::all_of(5).iter().map(|l| kostka_number(l, &part![1, 1, 1, 1, 1]).pow(2)).sum();
        assert_eq!(s, 120);
    }

    #[test]
    fn charge_examples() {
        assert_eq!(charge(&[1, 2]), 1);
        assert_eq!(charge(&[2, 1]), 0);
        assert_eq!(charge(&[1, 2, 3]), 3);
        assert_eq!(charge(&[3, 2, 1]), 0);
        assert_eq!(charge(&[]), 0);
    }

    #[test]
    fn polynomials() {
        assert_eq!(kostka_polynomial(&part![2], &part![1, 1]), t(&[1]));
        assert_eq!(kostka_polynomial(&part![2, 1], &part![1, 1, 1]), t(&[0, 1, 1]));
        assert_eq!(kostka_polynomial(&part![3, 1], &part![1, 1, 1, 1]), t(&[0, 1, 1, 1]));
        assert_eq!(kostka_polynomial(&part![2, 2], &part![1, 1, 1, 1]), t(&[0, 0, 1, 0, 1]));
        assert_eq!(kostka_polynomial(&part![1, 1], &part![2]), IntPoly::zero());
        for n in 0..=6 {
            for l in Partition::all_of(n) {
                assert_eq!(kostka_polynomial(&l, &l), IntPoly::monomial(1, l.n_stat()));
            }
        }
    }
}
