use std::collections::BTreeMap;

use encone_core::fqoracle::{count_orbits_chunk, orbit_chunks, orbit_search_size, Budget, Fq};
use encone_core::{Bipartition, Result};
use rayon::prelude::*;

/// [`count_orbits`](encone_core::fqoracle::count_orbits) with the chunks
/// spread over the rayon pool. Merging is addition, so the result does not
/// depend on scheduling.
pub fn count_orbits_par(n: usize, q: u32, budget: Budget) -> Result<BTreeMap<Bipartition, u64>> {
    Fq::new(q)?;
    budget.check(orbit_search_size(n, q))?;
    let parts = (0..orbit_chunks(n, q))
        .into_par_iter()
        .map(|c| count_orbits_chunk(n, q, c))
        .collect::<Result<Vec<_>>>()?;
    let mut total = BTreeMap::new();
    for part in parts {
        for (l, c) in part {
            *total.entry(l).or_insert(0) += c;
        }
    }
    Ok(total)
}
