//! Brute-force ground truth over a prime field `𝔽_q`.
//!
//! Orbits of `GL(V)` on `V × N` are classified by `(type of x on E^x v,
//! type on V/E^x v)`, where `E^x` is the centralizer algebra of `x`. Every
//! enumeration is guarded by a [`Budget`] checked before any work starts.

mod checks;
mod count;
mod field;
mod linalg;
mod orbit;

pub use checks::{
    classification_check, closure_check, fiber_count_check, hall_count_check, omega_point_count_check,
    orbit_count_check,
};
pub use count::{
    all_vectors, closure_member, count_fiber, count_hall, count_orbits, count_orbits_chunk,
    flag_search_size, orbit_chunks, orbit_search_size, subspace_search_size, Budget,
};
pub use field::{is_prime, Fq, MAX_PRIME};
pub use linalg::{coordinates, nullspace, rank, rref, FqMatrix, FqVector, Subspace};
pub use orbit::{
    centralizer_basis, classify_orbit, classify_with, cyclic_span, exv_space, exv_space_with,
    flag_w, normal_basis, quotient_type_check, FqPair, NormalBasis,
};
