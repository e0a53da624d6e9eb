//! Exact computations with finite permutation groups and their Burnside
//! rings.
//!
//! * [`perm`]: enumerated permutation groups, subgroup lattices, conjugacy
//!   classes of subgroups, normal closures, double cosets, Möbius function.
//! * [`gset`]: finite G-sets as multiplicity vectors over conjugacy classes,
//!   products, and pullback along homomorphisms.
//! * [`burnside`]: restriction and induction matrices, ring structure,
//!   Gluck idempotents, kernel witnesses and the deviation `Δ(G,H)`.
//! * [`functor`]: verdicts with certificates for nullity zero, essential
//!   injectivity and essential surjectivity of restriction.
//! * [`free_cover`]: finite-index subgroups of the free group on `x, y`
//!   given by transitive permutation pairs.
//!
//! All arithmetic is exact. Groups are enumerated in full, so the practical
//! limit is a few hundred elements (see [`perm::DEFAULT_MAX_ORDER`]).
//!
//! ```
//! use std::sync::Arc;
//! use pullbacklab::perm::{PermGroup, Permutation, Subgroup, SubgroupClassTable};
//! use pullbacklab::burnside::{deviation, res_matrix, SubgroupPair};
//!
//! # fn main() -> pullbacklab::Result<()> {
//! let gens = ["(1,2)", "(1,2,3)"].map(|c| Permutation::parse(c, 3).unwrap());
//! let g = Arc::new(PermGroup::generate(3, gens.to_vec())?);
//! let table = Arc::new(SubgroupClassTable::new(g.clone()));
//! let h = Subgroup::generated_by_perms(&g, &[Permutation::parse("(1,2)", 3)?])?;
//! let pair = SubgroupPair::new(table, h)?;
//! let res = res_matrix(&pair)?;
//! assert_eq!(deviation(&pair, &res)?.value, 3.into());
//! # Ok(())
//! # }
//! ```

pub mod burnside;
pub mod error;
pub mod free_cover;
pub mod functor;
pub mod gset;
pub mod linalg;
pub mod perm;

pub use error::{Error, ParseError, Result};
