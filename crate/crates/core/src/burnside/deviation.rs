use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::burnside::{ind_matrix, BurnsideElement, RationalBurnsideVector, ResMatrix, SubgroupPair};
use crate::error::{Error, Result};
use crate::linalg::{mat_vec_z, rank, smith_normal_form, solve, QMatrix, ZMatrix};

/// SG classes of the derived subgroups: the closure of `{H}` under
/// `K ↦ g⁻¹Kg ∩ H`.
pub fn derived_subgroups(pair: &SubgroupPair) -> Result<Vec<usize>> {
    let g = pair.group();
    let tg = pair.table_g();
    let start = tg.index_of(pair.h()).ok_or(Error::NotASubgroup)?;
    let mut seen = BTreeSet::from([start]);
    let mut queue = vec![start];
    while let Some(k) = queue.pop() {
        let sub = tg.subgroup(k);
        for x in 0..g.order() {
            let next = sub.conjugate(g, x).intersection(pair.h());
            let i = tg.index_of(&next).ok_or(Error::NotASubgroup)?;
            if seen.insert(i) {
                queue.push(i);
            }
        }
    }
    let classes: BTreeSet<usize> = seen.into_iter().map(|i| tg.class_of_index(i)).collect();
    Ok(classes.into_iter().collect())
}

/// SG classes meeting `H`, i.e. the support of `im ind`, ascending.
fn induced_classes(pair: &SubgroupPair) -> Vec<usize> {
    let set: BTreeSet<usize> = (0..pair.table_h().len()).map(|k| pair.g_class_of_h_class(k)).collect();
    set.into_iter().collect()
}

/// The unique `v ∈ im Qind` with `Qres(v) = [H\H]`.
///
/// Solved exactly on the columns of the restriction matrix belonging to
/// classes of subgroups of `H`; uniqueness is the full column rank of that
/// block, and the support is checked against the derived classes.
pub fn unique_v(pair: &SubgroupPair, res: &ResMatrix) -> Result<RationalBurnsideVector> {
    let cols = induced_classes(pair);
    let full = res.to_rational();
    let block: QMatrix = full
        .iter()
        .map(|row| cols.iter().map(|&c| row[c].clone()).collect())
        .collect();
    if rank(&block) != cols.len() {
        return Err(Error::Internal("restriction is not injective on im ind".into()));
    }
    let th = pair.table_h();
    let mut target = vec![BigRational::zero(); th.len()];
    target[th.whole_class()] = BigRational::one();
    let x = solve(&block, &target).ok_or_else(|| Error::Internal("[H\\H] is not in res(im ind)".into()))?;
    let mut coeffs = vec![BigRational::zero(); pair.table_g().len()];
    for (&c, value) in cols.iter().zip(x) {
        coeffs[c] = value;
    }
    let derived = derived_subgroups(pair)?;
    if coeffs
        .iter()
        .enumerate()
        .any(|(i, c)| !c.is_zero() && !derived.contains(&i))
    {
        return Err(Error::Internal("v is not supported on derived classes".into()));
    }
    BurnsideElement::from_coeffs(pair.table_g().clone(), coeffs)
}

/// `res ∘ ind` as an `|SH| × |SH|` integer matrix.
pub fn deviation_matrix(pair: &SubgroupPair, res: &ResMatrix) -> Result<ZMatrix> {
    Ok(res.compose_after(&ind_matrix(pair)?)?.entries().clone())
}

/// `Δ(G,H)` with the Smith-form data that determines it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deviation {
    pub value: BigInt,
    /// Diagonal of the Smith normal form of `res ∘ ind`.
    pub invariant_factors: Vec<BigInt>,
    /// `P · [H\H]` for the left transform `P`.
    pub transformed_target: Vec<BigInt>,
}

/// The least `Δ ≥ 1` with `Δ·[H\H]` in the integer image of `res ∘ ind`.
///
/// With `P N Q = D` in Smith form and `e' = P e`, the lattice condition
/// reads `d_i | Δ e'_i` for every row, so `Δ` is the lcm of
/// `d_i / gcd(d_i, e'_i)`; rows with `d_i = 0` need `e'_i = 0`.
pub fn deviation(pair: &SubgroupPair, res: &ResMatrix) -> Result<Deviation> {
    let n = deviation_matrix(pair, res)?;
    let th = pair.table_h();
    let mut e = vec![BigInt::zero(); th.len()];
    e[th.whole_class()] = BigInt::one();
    let smith = smith_normal_form(&n);
    let transformed = mat_vec_z(&smith.p, &e);
    let mut value = BigInt::one();
    for (i, t) in transformed.iter().enumerate() {
        let d = smith.diagonal.get(i).cloned().unwrap_or_default();
        if d.is_zero() {
            if !t.is_zero() {
                return Err(Error::Internal("[H\\H] is outside the rational image of res∘ind".into()));
            }
            continue;
        }
        let need = &d / d.gcd(t);
        value = value.lcm(&need);
    }
    Ok(Deviation {
        value,
        invariant_factors: smith.diagonal,
        transformed_target: transformed,
    })
}
