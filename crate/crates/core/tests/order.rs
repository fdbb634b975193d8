use encone_core::combinatorics::{
    alternate_linear_extension, bipartition_leq, covers, enumerate_bipartitions, hasse,
    CoverKind,
};
use encone_core::{bip, Bipartition, Partition};

/// Covers from the definition: `a < b` with nothing strictly between.
fn brute_covers(all: &[Bipartition], a: &Bipartition, b: &Bipartition) -> bool {
    a != b
        && bipartition_leq(a, b)
        && !all
            .iter()
            .any(|c| c != a && c != b && bipartition_leq(a, c) && bipartition_leq(c, b))
}

#[test]
fn order_axioms_up_to_eight() {
    for n in 0..=8 {
        let all = enumerate_bipartitions(n);
        for a in &all {
            assert!(bipartition_leq(a, a));
            for b in &all {
                if a != b && bipartition_leq(a, b) {
                    assert!(!bipartition_leq(b, a), "antisymmetry {a} {b}");
                }
            }
        }
        if n <= 6 {
            for a in &all {
                for b in all.iter().filter(|b| bipartition_leq(a, b)) {
                    for c in all.iter().filter(|c| bipartition_leq(b, c)) {
                        assert!(bipartition_leq(a, c), "transitivity {a} {b} {c}");
                    }
                }
            }
        }
    }
}

#[test]
fn cover_clauses_match_brute_force() {
    for n in 0..=7 {
        let all = enumerate_bipartitions(n);
        for a in &all {
            for b in &all {
                let brute = brute_covers(&all, a, b);
                let clause = covers(a, b);
                assert_eq!(brute, clause.is_some(), "n={n}: {a} < {b}: clause {clause:?}");
            }
        }
    }
}

#[test]
fn b_strictly_drops_up_the_order() {
    for n in 0..=7 {
        let all = enumerate_bipartitions(n);
        for a in &all {
            for b in &all {
                if bipartition_leq(a, b) {
                    assert!(a.b_stat() >= b.b_stat());
                    assert_eq!(a.b_stat() == b.b_stat(), a == b);
                }
            }
        }
    }
}

#[test]
fn canonical_order_is_a_linear_extension() {
    for n in 0..=6 {
        for ext in [enumerate_bipartitions(n), alternate_linear_extension(n)] {
            for (i, a) in ext.iter().enumerate() {
                for b in &ext[..i] {
                    assert!(!bipartition_leq(a, b) || a == b, "{a} listed after {b}");
                }
            }
        }
    }
}

#[test]
fn componentwise_dominance_is_sufficient_not_necessary() {
    let mut witness = None;
    for n in 0..=4 {
        let all = enumerate_bipartitions(n);
        for a in &all {
            for b in &all {
                let comp = a.mu().dominance_leq(b.mu()) && a.nu().dominance_leq(b.nu());
                if comp {
                    assert!(bipartition_leq(a, b));
                } else if bipartition_leq(a, b) && witness.is_none() {
                    witness = Some((a.clone(), b.clone()));
                }
            }
        }
    }
    assert!(witness.is_some());
    // the pair from the closure example is one such witness
    assert!(bipartition_leq(&bip!([1, 1]; [2]), &bip!([2, 1]; [1])));
    assert!(!bip!([]; [2]).nu().dominance_leq(bip!([]; [1]).nu()));
}

#[test]
#[allow(clippy::needless_range_loop)]
fn hasse_reachability_is_the_order() {
    for n in 0..=6 {
        let all = enumerate_bipartitions(n);
        let idx = |x: &Bipartition| all.iter().position(|y| y == x).unwrap();
        let k = all.len();
        let mut reach = vec![vec![false; k]; k];
        for i in 0..k {
            reach[i][i] = true;
        }
        for (lo, hi, _) in hasse(n) {
            reach[idx(&lo)][idx(&hi)] = true;
        }
        for m in 0..k {
            for i in 0..k {
                if reach[i][m] {
                    for j in 0..k {
                        if reach[m][j] {
                            reach[i][j] = true;
                        }
                    }
                }
            }
        }
        for (i, a) in all.iter().enumerate() {
            for (j, b) in all.iter().enumerate() {
                assert_eq!(reach[i][j], bipartition_leq(a, b), "{a} {b}");
            }
        }
    }
}

#[test]
fn table_one_edge_labels() {
    let edges = hasse(4);
    assert_eq!(edges.len(), 29);
    let count = |k: CoverKind| edges.iter().filter(|e| e.2.kind == k).count();
    assert_eq!(
        [count(CoverKind::One), count(CoverKind::Two), count(CoverKind::Three), count(CoverKind::Four)],
        [1, 4, 16, 8]
    );
    let mut dims: Vec<usize> = enumerate_bipartitions(4).iter().map(|b| b.dim()).collect();
    dims.sort_unstable_by(|a, b| b.cmp(a));
    assert_eq!(dims, [16, 15, 14, 14, 13, 13, 12, 12, 12, 12, 11, 10, 10, 10, 9, 8, 7, 6, 4, 0]);
}

#[test]
fn bottom_edge_of_table_one() {
    // dimension 0 to dimension 4: a whole column moves across
    let bottom = bip!([]; [1, 1, 1, 1]);
    let c = covers(&bottom, &bip!([1, 1, 1, 1]; [])).unwrap();
    assert_eq!((c.kind, c.k, c.l), (CoverKind::Three, 1, 4));
    let up: Vec<_> = hasse(4).into_iter().filter(|e| e.0 == bottom).map(|e| (e.1, e.2.kind)).collect();
    assert_eq!(
        up,
        [(bip!([1, 1, 1, 1]; []), CoverKind::Three), (bip!([]; [2, 1, 1]), CoverKind::Two)]
    );
    // related, but (∅;(2,1,1)) sits in between
    assert!(bipartition_leq(&bottom, &bip!([1]; [1, 1, 1])));
    assert!(covers(&bottom, &bip!([1]; [1, 1, 1])).is_none());
}

#[test]
fn cover_examples_at_four() {
    // related but not a cover: (2,1);(1) lies between
    assert!(bipartition_leq(&bip!([1, 1]; [2]), &bip!([2]; [2])));
    assert!(covers(&bip!([1, 1]; [2]), &bip!([2]; [2])).is_none());
    let c = covers(&bip!([1, 1]; [2]), &bip!([2, 1]; [1])).unwrap();
    assert_eq!((c.kind, c.k, c.l), (CoverKind::Three, 1, 1));
    let c = covers(&bip!([2, 1, 1]; []), &bip!([2, 2]; [])).unwrap();
    assert_eq!((c.kind, c.k, c.l), (CoverKind::One, 2, 3));
    assert!(covers(&bip!([2]; [2]), &bip!([2]; [2])).is_none());
}

#[test]
fn fixed_jordan_type_is_an_interval_with_type_three_covers() {
    for n in 0..=6 {
        let all = enumerate_bipartitions(n);
        for lambda in Partition::all_of(n) {
            let fibre: Vec<&Bipartition> = all.iter().filter(|b| b.jordan_type() == lambda).collect();
            let top = Bipartition::new(lambda.clone(), Partition::empty());
            let bottom = all
                .iter()
                .find(|b| b.mu().is_empty() && *b.nu() == lambda)
                .unwrap();
            for c in &all {
                let inside = bipartition_leq(bottom, c) && bipartition_leq(c, &top);
                assert_eq!(inside, fibre.contains(&c), "{c} vs interval over {lambda}");
            }
            for a in &fibre {
                for b in &fibre {
                    if let Some(c) = covers(a, b) {
                        assert_eq!(c.kind, CoverKind::Three, "{a} {b}");
                    }
                }
            }
        }
    }
}

#[test]
fn doubling_preserves_the_order() {
    for n in 0..=5 {
        let all = enumerate_bipartitions(n);
        for a in &all {
            for b in &all {
                if bipartition_leq(a, b) {
                    assert!(bipartition_leq(&a.double(), &b.double()));
                }
            }
        }
    }
}
