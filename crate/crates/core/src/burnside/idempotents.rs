use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::burnside::{BurnsideElement, RationalBurnsideVector, ResMatrix, SubgroupPair};
use crate::error::{Error, Result};
use crate::gset::same_basis;
use crate::linalg::{inverse, mat_vec_q, QMatrix};
use crate::perm::{normalizer, SubgroupClassTable};

/// Gluck's primitive idempotent
/// `e_L = (1/|N_G(L)|) Σ_{K ≤ L} |K| μ(K,L) [K\G]`,
/// the sum running over all subgroups `K` of `L`, not just classes.
pub fn gluck_idempotent(table: &Arc<SubgroupClassTable>, class: usize) -> Result<RationalBurnsideVector> {
    table.check_class(class)?;
    let group = table.group();
    let l_index = table.class(class).representative;
    let l = table.subgroup(l_index);
    let n = normalizer(group, l)?.order();
    let mut coeffs = vec![BigInt::zero(); table.len()];
    for (k, mu) in table.mobius_to(l_index).into_iter().enumerate() {
        if let Some(mu) = mu {
            let order = table.subgroup(k).order() as i64;
            coeffs[table.class_of_index(k)] += BigInt::from(order * mu);
        }
    }
    let denom = BigInt::from(n);
    let coeffs = coeffs
        .into_iter()
        .map(|c| BigRational::new(c, denom.clone()))
        .collect();
    BurnsideElement::from_coeffs(table.clone(), coeffs)
}

/// The basis `B_G` of primitive idempotents and the change of basis to it.
#[derive(Clone, Debug)]
pub struct IdempotentBasis {
    table: Arc<SubgroupClassTable>,
    vectors: Vec<RationalBurnsideVector>,
    /// Columns are the idempotents in standard coordinates.
    matrix: QMatrix,
    inverse: QMatrix,
}

impl IdempotentBasis {
    pub fn new(table: Arc<SubgroupClassTable>) -> Result<Self> {
        let n = table.len();
        let vectors = (0..n)
            .map(|c| gluck_idempotent(&table, c))
            .collect::<Result<Vec<_>>>()?;
        let matrix: QMatrix = (0..n)
            .map(|i| vectors.iter().map(|v| v.coeffs()[i].clone()).collect())
            .collect();
        let inverse = inverse(&matrix)
            .ok_or_else(|| Error::Internal("idempotents are linearly dependent".into()))?;
        Ok(IdempotentBasis {
            table,
            vectors,
            matrix,
            inverse,
        })
    }

    pub fn table(&self) -> &Arc<SubgroupClassTable> {
        &self.table
    }

    pub fn vectors(&self) -> &[RationalBurnsideVector] {
        &self.vectors
    }

    pub fn idempotent(&self, class: usize) -> &RationalBurnsideVector {
        &self.vectors[class]
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn inverse_matrix(&self) -> &QMatrix {
        &self.inverse
    }

    /// Coordinates of `v` in `B_G`.
    pub fn coordinates(&self, v: &RationalBurnsideVector) -> Result<Vec<BigRational>> {
        if !same_basis(&self.table, v.table()) {
            return Err(Error::GroupMismatch);
        }
        Ok(mat_vec_q(&self.inverse, v.coeffs()))
    }

    pub fn from_coordinates(&self, coords: &[BigRational]) -> Result<RationalBurnsideVector> {
        if coords.len() != self.table.len() {
            return Err(Error::LengthMismatch {
                expected: self.table.len(),
                found: coords.len(),
            });
        }
        BurnsideElement::from_coeffs(self.table.clone(), mat_vec_q(&self.matrix, coords))
    }
}

/// `Qres(e^G_L)` computed with the restriction matrix.
pub fn res_on_idempotent(res: &ResMatrix, basis_g: &IdempotentBasis, class: usize) -> Result<RationalBurnsideVector> {
    basis_g.table().check_class(class)?;
    res.apply_rational(basis_g.idempotent(class))
}

/// `Σ e^H_J` over the SH classes `[J]` with `J` G-conjugate to `L`.
pub fn res_on_idempotent_formula(pair: &SubgroupPair, basis_h: &IdempotentBasis, class: usize) -> Result<RationalBurnsideVector> {
    pair.table_g().check_class(class)?;
    let mut sum = RationalBurnsideVector::zero(pair.table_h().clone());
    for j in 0..pair.table_h().len() {
        if pair.g_class_of_h_class(j) == class {
            sum = sum.add(basis_h.idempotent(j))?;
        }
    }
    Ok(sum)
}

/// `[N_G(K) : N_H(K)]` for every SH class.
pub fn normalizer_weights(pair: &SubgroupPair) -> Vec<usize> {
    (0..pair.table_h().len()).map(|k| pair.normalizer_index(k)).collect()
}

/// The standard inner product on coordinates in `B_G`.
pub fn inner_product_g(u: &[BigRational], v: &[BigRational]) -> Result<BigRational> {
    inner_product_h(&vec![1; u.len()], u, v)
}

/// The inner product on coordinates in `B_H`, weighted by
/// [`normalizer_weights`].
pub fn inner_product_h(weights: &[usize], u: &[BigRational], v: &[BigRational]) -> Result<BigRational> {
    for x in [u.len(), v.len()] {
        if x != weights.len() {
            return Err(Error::LengthMismatch {
                expected: weights.len(),
                found: x,
            });
        }
    }
    Ok(weights
        .iter()
        .zip(u.iter().zip(v))
        .fold(BigRational::zero(), |acc, (&w, (a, b))| {
            acc + a * b * BigRational::from_integer(BigInt::from(w))
        }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burnside::{res_matrix, BurnsideRing};
    use crate::perm::{PermGroup, Permutation, Subgroup};
    use num_traits::One;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn s3_table() -> Arc<SubgroupClassTable> {
        let gens = ["(1,2)", "(1,2,3)"].map(|c| Permutation::parse(c, 3).unwrap());
        let g = Arc::new(PermGroup::generate(3, gens.to_vec()).unwrap());
        Arc::new(SubgroupClassTable::new(g))
    }

    #[test]
    fn top_idempotent_of_s3() {
        let t = s3_table();
        let e = gluck_idempotent(&t, t.whole_class()).unwrap();
        assert_eq!(e.coeffs(), &[q(1, 2), q(-1, 1), q(-1, 2), q(1, 1)]);
        let e0 = gluck_idempotent(&t, 0).unwrap();
        assert_eq!(e0.coeffs(), &[q(1, 6), q(0, 1), q(0, 1), q(0, 1)]);
    }

    #[test]
    fn idempotents_are_orthogonal_and_sum_to_one() {
        let t = s3_table();
        let ring = BurnsideRing::new(t.clone()).unwrap();
        let basis = IdempotentBasis::new(t.clone()).unwrap();
        let mut sum = RationalBurnsideVector::zero(t.clone());
        for (i, a) in basis.vectors().iter().enumerate() {
            sum = sum.add(a).unwrap();
            for (j, b) in basis.vectors().iter().enumerate() {
                let ab = ring.multiply(a, b).unwrap();
                if i == j {
                    assert_eq!(&ab, a);
                } else {
                    assert!(ab.is_zero());
                }
            }
        }
        assert_eq!(sum, RationalBurnsideVector::one(t));
    }

    #[test]
    fn restriction_of_idempotents_in_s3() {
        let t = s3_table();
        let g = t.group().clone();
        let h = Subgroup::generated_by_perms(&g, &[Permutation::parse("(1,2)", 3).unwrap()]).unwrap();
        let pair = SubgroupPair::new(t.clone(), h).unwrap();
        let res = res_matrix(&pair).unwrap();
        let bg = IdempotentBasis::new(t.clone()).unwrap();
        let bh = IdempotentBasis::new(pair.table_h().clone()).unwrap();
        for l in 0..t.len() {
            assert_eq!(
                res_on_idempotent(&res, &bg, l).unwrap(),
                res_on_idempotent_formula(&pair, &bh, l).unwrap()
            );
        }
        // Bouc: the top idempotent restricts to zero on a proper subgroup.
        assert!(res_on_idempotent(&res, &bg, t.whole_class()).unwrap().is_zero());
        // L = <(1,3)> is in the class of H.
        assert_eq!(res_on_idempotent(&res, &bg, 1).unwrap(), bh.idempotent(1).clone());
        assert_eq!(normalizer_weights(&pair), vec![3, 1]);
    }

    #[test]
    fn inner_products() {
        let u = vec![q(1, 1), q(0, 1)];
        assert_eq!(inner_product_g(&u, &u).unwrap(), BigRational::one());
        assert_eq!(inner_product_h(&[3, 1], &u, &u).unwrap(), q(3, 1));
        assert!(inner_product_g(&u, &[q(1, 1)]).is_err());
    }
}
