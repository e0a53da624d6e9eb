//! Finite-index subgroups of the free group `F₂ = ⟨x, y⟩`, encoded by the
//! action of `x` and `y` on the cosets.
//!
//! Contranormality and normality in `F₂` are decided inside the finite
//! image group `I = ⟨sigma_x, sigma_y⟩`. The coset action `ρ` has kernel
//! inside `H = ρ⁻¹(Stab_I(basepoint))`, so normal closures correspond under
//! `ρ` and `H` is contranormal in `F₂` exactly when the basepoint
//! stabilizer is contranormal in `I`.

mod blocks;
mod census;
mod pair;

pub use blocks::{
    block_cover_count, c_formula, cover_from_blocks, enumerate_block_covers, Basepoint, Block, BlockSequence,
};
pub use census::{
    census, census_cap_from_env, census_with_cap, enumerate_index_n, enumerate_index_n_with_cap, Census,
    DEFAULT_CENSUS_CAP,
};
pub use pair::{CanonicalForm, CoverPair};
