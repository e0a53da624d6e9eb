//! Finite permutation groups with every element enumerated.

mod group;
mod hom;
mod lattice;
mod ops;
mod permutation;
mod subgroup;

pub use group::{PermGroup, DEFAULT_MAX_ORDER};
pub use hom::GroupHom;
pub use lattice::{enumerate_subgroups, SubgroupClass, SubgroupClassTable};
pub use ops::{
    coset_action, double_cosets, is_contranormal, is_normal, normal_closure,
    normal_closure_by_conjugates, normalizer, CosetAction, DoubleCoset,
};
pub use permutation::{parse_cycles, Permutation, MAX_POINT};
pub use subgroup::Subgroup;

/// Group-order cap: `PULLBACKLAB_MAX_ORDER` if set to a positive integer,
/// otherwise [`DEFAULT_MAX_ORDER`].
pub fn max_order_from_env() -> usize {
    std::env::var("PULLBACKLAB_MAX_ORDER")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&v| v > 0)
        .unwrap_or(DEFAULT_MAX_ORDER)
}
