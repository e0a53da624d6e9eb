use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::burnside::{BurnsideElement, BurnsideVector, RationalBurnsideVector, SubgroupPair};
use crate::error::{Error, Result};
use crate::gset::same_basis;
use crate::linalg::{mat_vec_q, mat_vec_z, to_rational, QMatrix, ZMatrix};
use crate::perm::{double_cosets, SubgroupClassTable};

/// A linear map between two Burnside rings as an explicit integer matrix.
#[derive(Clone, Debug)]
pub struct BurnsideMap {
    domain: Arc<SubgroupClassTable>,
    codomain: Arc<SubgroupClassTable>,
    entries: ZMatrix,
}

/// `res : B(G) → B(H)`, an `|SH| × |SG|` matrix.
pub type ResMatrix = BurnsideMap;
/// `ind : B(H) → B(G)`, an `|SG| × |SH|` matrix.
pub type IndMatrix = BurnsideMap;

impl BurnsideMap {
    pub fn entries(&self) -> &ZMatrix {
        &self.entries
    }

    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.domain.len()
    }

    pub fn domain(&self) -> &Arc<SubgroupClassTable> {
        &self.domain
    }

    pub fn codomain(&self) -> &Arc<SubgroupClassTable> {
        &self.codomain
    }

    pub fn to_rational(&self) -> QMatrix {
        to_rational(&self.entries)
    }

    /// Column `j` as integers.
    pub fn column(&self, j: usize) -> Vec<BigInt> {
        self.entries.iter().map(|row| row[j].clone()).collect()
    }

    fn check_domain<T>(&self, v: &BurnsideElement<T>) -> Result<()> {
        if same_basis(&self.domain, v.table()) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    pub fn apply(&self, v: &BurnsideVector) -> Result<BurnsideVector> {
        self.check_domain(v)?;
        BurnsideElement::from_coeffs(self.codomain.clone(), mat_vec_z(&self.entries, v.coeffs()))
    }

    pub fn apply_rational(&self, v: &RationalBurnsideVector) -> Result<RationalBurnsideVector> {
        self.check_domain(v)?;
        BurnsideElement::from_coeffs(self.codomain.clone(), mat_vec_q(&self.to_rational(), v.coeffs()))
    }

    /// `self ∘ first` as a matrix.
    pub fn compose_after(&self, first: &BurnsideMap) -> Result<BurnsideMap> {
        if !same_basis(&first.codomain, &self.domain) {
            return Err(Error::GroupMismatch);
        }
        Ok(BurnsideMap {
            domain: first.domain.clone(),
            codomain: self.codomain.clone(),
            entries: crate::linalg::mat_mul_z(&self.entries, &first.entries),
        })
    }
}

/// Column `[L\G]` is `Σ [(g⁻¹Lg ∩ H)\H]` over the double cosets `L g H`.
pub fn res_matrix(pair: &SubgroupPair) -> Result<ResMatrix> {
    let g = pair.group();
    let tg = pair.table_g();
    let th = pair.table_h();
    let mut entries = vec![vec![BigInt::zero(); tg.len()]; th.len()];
    for (col, _) in tg.classes().iter().enumerate() {
        let l = tg.representative(col);
        for dc in double_cosets(g, l, pair.h())? {
            let k = l.conjugate(g, dc.representative).intersection(pair.h());
            let row = th.class_of_index(pair.to_h(&k)?);
            entries[row][col] += BigInt::one();
        }
    }
    Ok(BurnsideMap {
        domain: tg.clone(),
        codomain: th.clone(),
        entries,
    })
}

/// `ind[K\H] = [K\G]` for SH class `k`.
pub fn ind_vector(pair: &SubgroupPair, k: usize) -> Result<BurnsideVector> {
    pair.table_h().check_class(k)?;
    BurnsideElement::basis(pair.table_g().clone(), pair.g_class_of_h_class(k))
}

pub fn ind_matrix(pair: &SubgroupPair) -> Result<IndMatrix> {
    let tg = pair.table_g();
    let th = pair.table_h();
    let mut entries = vec![vec![BigInt::zero(); th.len()]; tg.len()];
    for k in 0..th.len() {
        entries[pair.g_class_of_h_class(k)][k] = BigInt::one();
    }
    Ok(BurnsideMap {
        domain: th.clone(),
        codomain: tg.clone(),
        entries,
    })
}
