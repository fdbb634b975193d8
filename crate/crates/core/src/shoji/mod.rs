//! Kostka numbers and polynomials, the Lusztig–Shoji solve, and the
//! polynomials read off from it.
//!
//! Ordinary `K̃_{λπ}` come from the charge statistic and never touch the
//! solve, so comparing the two is a genuine check.

mod checks;
mod kostka;
mod table;

pub use checks::{
    omega_crosscheck, order_independence_check, point_count_identity_check,
    table_structure_check, type_a_specialization_check, CheckReport,
};
pub use kostka::{
    charge, kostka_number, kostka_polynomial, reading_word, semistandard_tableaux, KostkaCache,
    Tableau,
};
pub use table::KostkaTable;

use crate::{Bipartition, IntPoly, Partition, Result};

pub fn solve_kostka_table(n: usize) -> Result<KostkaTable> {
    KostkaTable::solve(n)
}

pub fn ic_polynomial(table: &KostkaTable, upper: &Bipartition, lower: &Bipartition) -> Result<IntPoly> {
    table.ic(upper, lower)
}

pub fn pi_polynomial(table: &KostkaTable, fiber_over: &Bipartition, point_in: &Bipartition) -> Result<IntPoly> {
    table.pi(fiber_over, point_in)
}

pub fn theta_polynomial(table: &KostkaTable, orbit: &Bipartition) -> Result<IntPoly> {
    table.theta(orbit)
}

pub fn hall_polynomial(
    table: &KostkaTable,
    sub_quot: (&Partition, &Partition),
    ambient: &Bipartition,
) -> Result<IntPoly> {
    table.hall(sub_quot.0, sub_quot.1, ambient)
}
