//! Characters of the hyperoctahedral group `W_n = (ℤ/2)ⁿ ⋊ S_n`, fake
//! degrees, and the `Ω` matrix.
//!
//! Classes are signed cycle types. Irreducible characters are labelled by
//! bipartitions through `χ^{μ;ν} = Ind(χ^μ ⊠ δχ^ν)`, so that `χ^{(n);∅}` is
//! trivial and `χ^{ρ;σ} ⊗ ε = χ^{σᵗ;ρᵗ}`.

mod characters;
mod checks;
mod classes;
mod fake;

pub use checks::character_check;
pub use characters::{sn_character, tensor, wn_character, CharacterTable};
pub use classes::{class_size, classes_of, group_order, reflection_charpoly, SignedCycleType};
pub use fake::{
    coinvariant_numerator, contingency_tables, fake_degree, omega_combinatorial, omega_matrix,
};
