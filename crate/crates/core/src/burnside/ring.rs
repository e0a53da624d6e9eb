use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::burnside::BurnsideElement;
use crate::error::{Error, Result};
use crate::gset::{coset_gset, orbit_decompose, product, same_basis};
use crate::perm::SubgroupClassTable;

/// Multiplication in `B(G)` by structure constants.
///
/// The constants `[K\G]·[L\G]` come from decomposing the concrete
/// product of coset spaces under the diagonal action.
pub struct BurnsideRing {
    table: Arc<SubgroupClassTable>,
    /// Indexed by `i * n + j` for `i ≤ j`.
    constants: Vec<Vec<u64>>,
}

impl BurnsideRing {
    pub fn new(table: Arc<SubgroupClassTable>) -> Result<Self> {
        let n = table.len();
        let group = table.group();
        let cosets = (0..n)
            .map(|i| coset_gset(group, table.representative(i)))
            .collect::<Result<Vec<_>>>()?;
        let mut constants = vec![Vec::new(); n * n];
        for i in 0..n {
            for j in i..n {
                let prod = product(&cosets[i], &cosets[j])?;
                constants[i * n + j] = orbit_decompose(&prod, &table)?.multiplicities().to_vec();
            }
        }
        Ok(BurnsideRing { table, constants })
    }

    pub fn table(&self) -> &Arc<SubgroupClassTable> {
        &self.table
    }

    /// Coefficients of `[K_i\G] · [K_j\G]`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[u64] {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        &self.constants[i * self.table.len() + j]
    }

    pub fn multiply<T>(&self, u: &BurnsideElement<T>, v: &BurnsideElement<T>) -> Result<BurnsideElement<T>>
    where
        T: Clone
            + Zero
            + One
            + PartialEq
            + From<BigInt>
            + Add<Output = T>
            + Sub<Output = T>
            + Mul<Output = T>
            + Neg<Output = T>,
    {
        if !same_basis(&self.table, u.table()) || !same_basis(&self.table, v.table()) {
            return Err(Error::GroupMismatch);
        }
        let n = self.table.len();
        let mut out = vec![T::zero(); n];
        for (i, a) in u.coeffs().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.coeffs().iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a.clone() * b.clone();
                for (k, &c) in self.basis_product(i, j).iter().enumerate() {
                    if c != 0 {
                        out[k] = out[k].clone() + ab.clone() * T::from(BigInt::from(c));
                    }
                }
            }
        }
        BurnsideElement::from_coeffs(self.table.clone(), out)
    }
}

impl fmt::Debug for BurnsideRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BurnsideRing").field("rank", &self.table.len()).finish()
    }
}
