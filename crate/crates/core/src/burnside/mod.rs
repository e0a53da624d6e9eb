//! Burnside rings of finite groups, restriction and induction along a
//! subgroup inclusion, Gluck idempotents and the deviation `Δ(G,H)`.
//!
//! Coordinates are always taken over the class table of the relevant group:
//! `SG` for `G` and `SH` for the subgroup `H`, the latter materialized as a
//! group of its own (see [`SubgroupPair`]).

mod deviation;
mod idempotents;
mod kernel;
mod matrices;
mod ring;

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gset::{same_basis, GSetVector};
use crate::perm::{normalizer, GroupHom, PermGroup, Subgroup, SubgroupClassTable};

pub use deviation::{derived_subgroups, deviation, deviation_matrix, unique_v, Deviation};
pub use idempotents::{
    gluck_idempotent, inner_product_g, inner_product_h, normalizer_weights, res_on_idempotent,
    res_on_idempotent_formula, IdempotentBasis,
};
pub use kernel::{ess_inj_witness, kernel_basis, nonneg_split, Witness, WITNESS_COEFF_BOUND};
pub use matrices::{ind_matrix, ind_vector, res_matrix, IndMatrix, ResMatrix};
pub use ring::BurnsideRing;

/// Coordinates over the conjugacy classes of subgroups of one group.
#[derive(Clone)]
pub struct BurnsideElement<T> {
    table: Arc<SubgroupClassTable>,
    coeffs: Vec<T>,
}

/// Integer Burnside-ring element.
pub type BurnsideVector = BurnsideElement<BigInt>;
/// Element of the Burnside algebra, with rational coefficients.
pub type RationalBurnsideVector = BurnsideElement<BigRational>;

impl<T> BurnsideElement<T>
where
    T: Clone + Zero + One + PartialEq + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Neg<Output = T>,
{
    pub fn zero(table: Arc<SubgroupClassTable>) -> Self {
        let n = table.len();
        BurnsideElement {
            table,
            coeffs: vec![T::zero(); n],
        }
    }

    /// The basis element `[L\G]` for class `class`.
    pub fn basis(table: Arc<SubgroupClassTable>, class: usize) -> Result<Self> {
        table.check_class(class)?;
        let mut v = Self::zero(table);
        v.coeffs[class] = T::one();
        Ok(v)
    }

    /// The multiplicative identity `[G\G]`.
    pub fn one(table: Arc<SubgroupClassTable>) -> Self {
        let top = table.whole_class();
        Self::basis(table, top).expect("the whole group has a class")
    }

    pub fn from_coeffs(table: Arc<SubgroupClassTable>, coeffs: Vec<T>) -> Result<Self> {
        if coeffs.len() != table.len() {
            return Err(Error::LengthMismatch {
                expected: table.len(),
                found: coeffs.len(),
            });
        }
        Ok(BurnsideElement { table, coeffs })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub(crate) fn check_same(&self, other: &Self) -> Result<()> {
        if same_basis(&self.table, &other.table) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(T, T) -> T) -> Result<Self> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| f(a.clone(), b.clone()))
            .collect();
        Ok(BurnsideElement {
            table: self.table.clone(),
            coeffs,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, k: &T) -> Self {
        BurnsideElement {
            table: self.table.clone(),
            coeffs: self.coeffs.iter().map(|a| a.clone() * k.clone()).collect(),
        }
    }
}

impl<T> BurnsideElement<T> {
    pub fn table(&self) -> &Arc<SubgroupClassTable> {
        &self.table
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }
}

impl BurnsideVector {
    pub fn to_rational(&self) -> RationalBurnsideVector {
        BurnsideElement {
            table: self.table.clone(),
            coeffs: self.coeffs.iter().cloned().map(BigRational::from_integer).collect(),
        }
    }

    pub fn from_i64(table: Arc<SubgroupClassTable>, coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(table, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The G-set with these multiplicities, when every coefficient is
    /// non-negative and fits.
    pub fn to_gset(&self) -> Result<GSetVector> {
        let mult = self
            .coeffs
            .iter()
            .map(|c| u64::try_from(c).map_err(|_| Error::Overflow("G-set multiplicity")))
            .collect::<Result<Vec<_>>>()?;
        GSetVector::from_multiplicities(self.table.clone(), mult)
    }

    pub fn from_gset(v: &GSetVector) -> Self {
        BurnsideElement {
            table: v.table().clone(),
            coeffs: v.multiplicities().iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    /// Entrywise non-negative with some positive entry, i.e. a nonempty G-set.
    pub fn is_in_positive_cone(&self) -> bool {
        use num_traits::Signed;
        self.coeffs.iter().all(|c| !c.is_negative()) && !self.is_zero()
    }
}

impl RationalBurnsideVector {
    /// The integer vector, when every coefficient is an integer.
    pub fn to_integer(&self) -> Option<BurnsideVector> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()?;
        Some(BurnsideElement {
            table: self.table.clone(),
            coeffs,
        })
    }
}

impl<T: PartialEq> PartialEq for BurnsideElement<T> {
    fn eq(&self, other: &Self) -> bool {
        same_basis(&self.table, &other.table) && self.coeffs == other.coeffs
    }
}

impl<T: Eq> Eq for BurnsideElement<T> {}

impl<T: fmt::Display> fmt::Debug for BurnsideElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// A group `G`, a subgroup `H`, and both class tables.
///
/// `H` is materialized as its own [`PermGroup`] through the inclusion
/// homomorphism, so `SH` is indexed independently of `SG`.
pub struct SubgroupPair {
    table_g: Arc<SubgroupClassTable>,
    h: Subgroup,
    inclusion: GroupHom,
    table_h: Arc<SubgroupClassTable>,
    /// Subgroup index in `table_h` to subgroup index in `table_g`.
    h_to_g: Vec<usize>,
    g_to_h: HashMap<usize, usize>,
}

impl SubgroupPair {
    pub fn new(table_g: Arc<SubgroupClassTable>, h: Subgroup) -> Result<Self> {
        let group = table_g.group().clone();
        h.check_in(&group)?;
        let inclusion = GroupHom::inclusion(&group, &h)?;
        let table_h = Arc::new(SubgroupClassTable::new(inclusion.source().clone()));
        let h_to_g: Vec<usize> = table_h
            .subgroups()
            .iter()
            .map(|k| {
                table_g
                    .index_of(&inclusion.image_of(k))
                    .expect("subgroups of H are subgroups of G")
            })
            .collect();
        let g_to_h = h_to_g.iter().enumerate().map(|(i, &j)| (j, i)).collect();
        Ok(SubgroupPair {
            table_g,
            h,
            inclusion,
            table_h,
            h_to_g,
            g_to_h,
        })
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        self.table_g.group()
    }

    pub fn h_group(&self) -> &Arc<PermGroup> {
        self.table_h.group()
    }

    pub fn table_g(&self) -> &Arc<SubgroupClassTable> {
        &self.table_g
    }

    pub fn table_h(&self) -> &Arc<SubgroupClassTable> {
        &self.table_h
    }

    /// `H` as a subgroup of `G`.
    pub fn h(&self) -> &Subgroup {
        &self.h
    }

    pub fn inclusion(&self) -> &GroupHom {
        &self.inclusion
    }

    pub fn index(&self) -> usize {
        self.group().order() / self.h.order()
    }

    pub fn is_whole(&self) -> bool {
        self.h.is_whole()
    }

    /// A subgroup of the `H` group, seen inside `G`.
    pub fn to_g(&self, h_subgroup: usize) -> &Subgroup {
        self.table_g.subgroup(self.h_to_g[h_subgroup])
    }

    /// Index in `table_h` of a `G`-subgroup contained in `H`.
    pub fn to_h(&self, g_subgroup: &Subgroup) -> Result<usize> {
        let gi = self.table_g.index_of(g_subgroup).ok_or(Error::NotASubgroup)?;
        self.g_to_h
            .get(&gi)
            .copied()
            .ok_or(Error::NotContained("subgroup must lie in H"))
    }

    /// The SG class of the SH class `k`.
    pub fn g_class_of_h_class(&self, k: usize) -> usize {
        let rep = self.table_h.class(k).representative;
        self.table_g.class_of_index(self.h_to_g[rep])
    }

    /// `[N_G(K) : N_H(K)]` for the representative of SH class `k`.
    pub fn normalizer_index(&self, k: usize) -> usize {
        let rep = self.table_h.class(k).representative;
        let in_g = normalizer(self.group(), self.to_g(rep)).expect("subgroup of G");
        let in_h = normalizer(self.h_group(), self.table_h.subgroup(rep)).expect("subgroup of H");
        in_g.order() / in_h.order()
    }
}

impl fmt::Debug for SubgroupPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SubgroupPair")
            .field("g_order", &self.group().order())
            .field("h_order", &self.h.order())
            .field("sg", &self.table_g.len())
            .field("sh", &self.table_h.len())
            .finish()
    }
}
