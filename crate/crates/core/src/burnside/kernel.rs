use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::burnside::{BurnsideElement, BurnsideVector, RationalBurnsideVector, ResMatrix, SubgroupPair};
use crate::error::{Error, Result};
use crate::linalg::nullspace;

/// Coefficient range `[-B, B]` of the kernel combinations tried by
/// [`ess_inj_witness`].
pub const WITNESS_COEFF_BOUND: i64 = 3;

/// Above this kernel dimension the witness search only combines pairs of
/// basis vectors.
const FULL_SEARCH_MAX_DIM: usize = 5;

/// Exact basis of `ker res`; empty iff `res` is injective.
pub fn kernel_basis(res: &ResMatrix) -> Vec<RationalBurnsideVector> {
    nullspace(&res.to_rational())
        .into_iter()
        .map(|v| BurnsideElement::from_coeffs(res.domain().clone(), v).expect("kernel vector has domain length"))
        .collect()
}

/// `v = a − b` with `a, b ≥ 0` of disjoint support.
pub fn nonneg_split(v: &BurnsideVector) -> (BurnsideVector, BurnsideVector) {
    let zero = BigInt::zero();
    let pos = v.coeffs().iter().map(|c| c.max(&zero).clone()).collect();
    let neg = v.coeffs().iter().map(|c| (-c).max(zero.clone())).collect();
    let table = v.table().clone();
    (
        BurnsideElement::from_coeffs(table.clone(), pos).expect("same length"),
        BurnsideElement::from_coeffs(table, neg).expect("same length"),
    )
}

/// Two distinct nonempty G-sets with isomorphic restrictions to `H`.
#[derive(Clone, Debug)]
pub struct Witness {
    pub a: BurnsideVector,
    pub b: BurnsideVector,
    /// `a − b`, a primitive integer vector in `ker res`.
    pub kernel_element: BurnsideVector,
}

impl Witness {
    /// Checks `a ≠ b`, both in `B(G)+`, and `res a = res b`.
    pub fn replay(&self, res: &ResMatrix) -> Result<bool> {
        Ok(self.a != self.b
            && self.a.is_in_positive_cone()
            && self.b.is_in_positive_cone()
            && res.apply(&self.a)? == res.apply(&self.b)?)
    }
}

/// The primitive integer multiple of a rational vector whose first nonzero
/// entry is positive.
fn primitive(v: &[BigRational]) -> Option<Vec<BigInt>> {
    let lcm = v.iter().fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if gcd.is_zero() {
        return None;
    }
    let mut out: Vec<BigInt> = ints.into_iter().map(|x| x / &gcd).collect();
    if out.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in out.iter_mut() {
            *x = -&*x;
        }
    }
    Some(out)
}

fn combinations(dim: usize) -> Vec<Vec<i64>> {
    let b = WITNESS_COEFF_BOUND;
    let mut out = Vec::new();
    if dim <= FULL_SEARCH_MAX_DIM {
        let width = (2 * b + 1) as usize;
        let total = width.pow(dim as u32);
        for mut code in 0..total {
            let mut c = Vec::with_capacity(dim);
            for _ in 0..dim {
                c.push((code % width) as i64 - b);
                code /= width;
            }
            out.push(c);
        }
    } else {
        for i in 0..dim {
            for j in i..dim {
                for x in -b..=b {
                    for y in -b..=b {
                        if i == j && y != 0 {
                            continue;
                        }
                        let mut c = vec![0; dim];
                        c[i] += x;
                        c[j] += y;
                        out.push(c);
                    }
                }
            }
        }
    }
    out
}

/// A witness that restriction to a proper subgroup is not essentially
/// injective.
///
/// Small integer combinations of the kernel basis are scaled to primitive
/// integer vectors and split into positive and negative parts; the one of
/// least L1 norm wins, ties broken by coefficient order.
pub fn ess_inj_witness(pair: &SubgroupPair, res: &ResMatrix) -> Result<Witness> {
    if pair.is_whole() {
        return Err(Error::ProperSubgroupRequired);
    }
    let basis = kernel_basis(res);
    if basis.is_empty() {
        return Err(Error::Internal("restriction to a proper subgroup has trivial kernel".into()));
    }
    let n = res.cols();
    let mut best: Option<(BigInt, Vec<BigInt>)> = None;
    for combo in combinations(basis.len()) {
        let mut v = vec![BigRational::zero(); n];
        for (c, b) in combo.iter().zip(&basis) {
            if *c != 0 {
                let c = BigRational::from_integer(BigInt::from(*c));
                for (x, y) in v.iter_mut().zip(b.coeffs()) {
                    *x += &c * y;
                }
            }
        }
        let Some(p) = primitive(&v) else { continue };
        let norm: BigInt = p.iter().map(|x| x.abs()).sum();
        let better = match &best {
            None => true,
            Some((bn, bp)) => norm < *bn || (norm == *bn && p < *bp),
        };
        if better {
            best = Some((norm, p));
        }
    }
    let (_, p) = best.expect("a nonzero kernel vector exists");
    let kernel_element = BurnsideElement::from_coeffs(res.domain().clone(), p)?;
    let (a, b) = nonneg_split(&kernel_element);
    let witness = Witness { a, b, kernel_element };
    if !witness.replay(res)? {
        return Err(Error::Internal("witness failed to replay".into()));
    }
    Ok(witness)
}
