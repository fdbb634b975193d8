//! The ten acceptance criteria, each timed against its limit. Prints one
//! line per criterion and exits nonzero if any fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use encone::parallel::count_orbits_par;
use encone_core::combinatorics::{bipartition_leq, enumerate_bipartitions, hasse, hasse_check};
use encone_core::fqoracle::{
    closure_check, count_fiber, count_hall, fiber_count_check, hall_count_check, orbit_count_check,
    Budget, Fq, FqMatrix, FqPair,
};
use encone_core::shoji::{
    omega_crosscheck, order_independence_check, table_structure_check, type_a_specialization_check,
    KostkaTable,
};
use encone_core::weylb::character_check;
use encone_core::{bip, part, CheckReport, IntPoly};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, Box<dyn Fn() -> Outcome>);

fn require(r: CheckReport) -> Result<usize, String> {
    if r.passed() {
        Ok(r.checked)
    } else {
        Err(format!("{}: {} failures, first: {}", r.name, r.failures.len(), r.failures[0]))
    }
}

fn core<T>(r: encone_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn t(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

fn rank_four_example() -> Outcome {
    let k = core(KostkaTable::solve(4))?;
    let low = bip!([1, 1, 1]; [1]);
    let got = [
        core(k.pi(&bip!([3]; [1]), &low))?,
        core(k.pi(&bip!([2, 1]; [1]), &low))?,
        core(k.ic(&bip!([2, 1]; [1]), &low))?,
        core(k.ic(&bip!([3]; [1]), &low))?,
    ];
    let want = [t(&[1, 3, 4, 1]), t(&[1, 2, 1]), t(&[1, 2]), t(&[1, 1])];
    if got != want {
        return Err(format!("got {got:?}"));
    }
    Ok("Π = 1+3t+4t²+t³, 1+2t+t²; IC = 1+2t, 1+t".into())
}

fn table_one() -> Outcome {
    let labels = enumerate_bipartitions(4);
    if labels.len() != 20 {
        return Err(format!("|Q_4| = {}", labels.len()));
    }
    let mut dims: Vec<usize> = labels.iter().map(|l| l.dim()).collect();
    dims.sort_unstable_by(|a, b| b.cmp(a));
    if dims != [16, 15, 14, 14, 13, 13, 12, 12, 12, 12, 11, 10, 10, 10, 9, 8, 7, 6, 4, 0] {
        return Err(format!("dimensions {dims:?}"));
    }
    let edges = hasse(4);
    let pairs: BTreeSet<_> = edges.iter().map(|(a, b, _)| (a.clone(), b.clone())).collect();
    if pairs.len() != edges.len() {
        return Err("an edge carries two types".into());
    }
    let types: BTreeSet<u8> = edges.iter().map(|(_, _, c)| c.kind.number()).collect();
    if !types.is_subset(&(1..=4).collect()) {
        return Err(format!("types {types:?}"));
    }
    let checked = require(hasse_check(4))?;
    Ok(format!("{} edges, types {types:?}, {checked} order comparisons", edges.len()))
}

fn lusztig_shoji() -> Outcome {
    let mut incomparable = 0;
    for n in 0..=5 {
        let k = core(KostkaTable::solve(n))?;
        require(core(table_structure_check(&k))?)?;
        require(core(order_independence_check(n))?)?;
        for a in k.labels() {
            for c in k.labels() {
                if !bipartition_leq(a, c) && !bipartition_leq(c, a) {
                    incomparable += 1;
                    if !core(k.kostka(a, c))?.is_zero() {
                        return Err(format!("P nonzero at incomparable ({a}, {c})"));
                    }
                }
            }
        }
    }
    Ok(format!("n ≤ 5, two linear extensions, {incomparable} incomparable pairs zero"))
}

fn orbit_counts() -> Outcome {
    for n in 0..=3 {
        let k = core(KostkaTable::solve(n))?;
        for q in [2, 3] {
            let counts = core(count_orbits_par(n, q, Budget::DEFAULT))?;
            require(core(orbit_count_check(&k, q, &counts))?)?;
        }
    }
    let start = Instant::now();
    let k = core(KostkaTable::solve(4))?;
    let counts = core(count_orbits_par(4, 2, Budget::EXTENDED))?;
    require(core(orbit_count_check(&k, 2, &counts))?)?;
    let secs = start.elapsed().as_secs_f64();
    if secs >= 60.0 {
        return Err(format!("n = 4 enumeration took {secs:.1}s"));
    }
    Ok(format!("n ≤ 3 at q = 2, 3; n = 4 at q = 2 in {secs:.2}s"))
}

fn fiber_counts() -> Outcome {
    let mut checked = 0;
    for n in 0..=3 {
        let k = core(KostkaTable::solve(n))?;
        checked += require(core(fiber_count_check(&k, 2, Budget::DEFAULT))?)?;
    }
    let p = core(FqPair::representative(&bip!([1, 1, 1]; [1]), 2))?;
    let c = core(count_fiber(&p, &bip!([3]; [1]), Budget::DEFAULT))?;
    if c != 31 {
        return Err(format!("rank-four fibre has {c} points, expected 31"));
    }
    Ok(format!("{checked} pairs, plus 31 points at n = 4"))
}

fn type_a() -> Outcome {
    let mut checked = 0;
    for n in 0..=5 {
        checked += require(core(type_a_specialization_check(&core(KostkaTable::solve(n))?))?)?;
    }
    Ok(format!("{checked} identities, n ≤ 5"))
}

fn characters() -> Outcome {
    let mut checked = 0;
    for n in 0..=5 {
        checked += require(core(character_check(n))?)?;
    }
    Ok(format!("{checked} checks, n ≤ 5"))
}

fn omega_cross() -> Outcome {
    // n = 4 is the flagged size; it is cheap enough to always run
    let top = 4;
    let mut checked = 0;
    for n in 0..=top {
        checked += require(core(omega_crosscheck(n))?)?;
    }
    Ok(format!("{checked} pairs, n ≤ {top}"))
}

fn hall() -> Outcome {
    let mut checked = 0;
    for n in 0..=3 {
        let k = core(KostkaTable::solve(n))?;
        for q in [2, 3] {
            checked += require(core(hall_count_check(&k, q, Budget::DEFAULT))?)?;
        }
    }
    let k = core(KostkaTable::solve(2))?;
    let g = core(k.hall(&part![1], &part![1], &bip!([]; [1, 1])))?;
    for q in [2u32, 3] {
        let zero = core(FqPair::new(vec![0, 0], FqMatrix::zero(core(Fq::new(q))?, 2)))?;
        let c = core(count_hall(&zero, (&part![1], &part![1]), Budget::DEFAULT))?;
        if g.eval_i64(q as i64) != (q as u64 + 1).into() || c != q as u64 + 1 {
            return Err(format!("g = {g}, {c} lines at q = {q}"));
        }
    }
    Ok(format!("{checked} subspace counts, g = q + 1"))
}

fn closure() -> Outcome {
    let mut checked = 0;
    for n in 0..=3 {
        checked += require(core(closure_check(n, 2, Budget::DEFAULT))?)?;
    }
    Ok(format!("{checked} pairs, both directions"))
}

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("1 rank-four example", Duration::from_secs(10), Box::new(rank_four_example)),
        ("2 Q_4 and its Hasse diagram", Duration::from_secs(1), Box::new(table_one)),
        ("3 Lusztig-Shoji solve", Duration::from_secs(300), Box::new(lusztig_shoji)),
        ("4 orbit counts", Duration::from_secs(120), Box::new(orbit_counts)),
        ("5 fibre counts", Duration::from_secs(120), Box::new(fiber_counts)),
        ("6 type-A specialization", Duration::from_secs(120), Box::new(type_a)),
        ("7 character theory", Duration::from_secs(120), Box::new(characters)),
        ("8 Omega cross-check", Duration::from_secs(300), Box::new(omega_cross)),
        ("9 Hall polynomials", Duration::from_secs(120), Box::new(hall)),
        ("10 closure order", Duration::from_secs(120), Box::new(closure)),
    ];
    let mut failed = 0;
    for (name, limit, f) in &criteria {
        let start = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let took = start.elapsed();
        let res = match res {
            Ok(_) if took > *limit => Err(format!("took {:.2}s, limit {}s", took.as_secs_f64(), limit.as_secs())),
            r => r,
        };
        match res {
            Ok(msg) => println!("PASS criterion {name} [{:.2}s] {msg}", took.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {name} [{:.2}s] {msg}", took.as_secs_f64());
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
