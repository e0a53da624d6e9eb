//! Normalizers, normal closures, double cosets and coset actions.

use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::Result;
use crate::perm::{GroupHom, PermGroup, Permutation, Subgroup};

/// `N_G(L) = {g : g⁻¹Lg = L}`.
pub fn normalizer(group: &PermGroup, l: &Subgroup) -> Result<Subgroup> {
    l.check_in(group)?;
    let gens = l.generating_set(group);
    let mut members = FixedBitSet::with_capacity(group.order());
    for g in 0..group.order() {
        if gens.iter().all(|&a| l.contains(group.conj(a, g))) {
            members.insert(g);
        }
    }
    Ok(Subgroup::from_bitset(members))
}

/// `NC(G, L)`: close the generators of `L` under conjugation by the
/// generators of `G`.
pub fn normal_closure(group: &PermGroup, l: &Subgroup) -> Result<Subgroup> {
    l.check_in(group)?;
    let mut gens = l.generating_set(group);
    let mut current = Subgroup::generated_by(group, &gens);
    loop {
        let mut grew = false;
        for i in 0..gens.len() {
            for &s in group.generator_elements() {
                let c = group.conj(gens[i], s);
                if !current.contains(c) {
                    gens.push(c);
                    current = Subgroup::generated_by(group, &gens);
                    grew = true;
                }
            }
        }
        if !grew {
            return Ok(current);
        }
    }
}

/// `NC(G, L)` as the closure of the union of all conjugates of `L`.
/// Slower than [`normal_closure`]; kept as an independent route.
pub fn normal_closure_by_conjugates(group: &PermGroup, l: &Subgroup) -> Result<Subgroup> {
    l.check_in(group)?;
    let mut union = FixedBitSet::with_capacity(group.order());
    for g in 0..group.order() {
        union.union_with(l.conjugate(group, g).members());
    }
    let gens: Vec<usize> = union.ones().collect();
    Ok(Subgroup::generated_by(group, &gens))
}

pub fn is_normal(group: &PermGroup, l: &Subgroup) -> Result<bool> {
    Ok(normalizer(group, l)?.is_whole())
}

/// `L` is contranormal in `G` when its normal closure is all of `G`.
pub fn is_contranormal(group: &PermGroup, l: &Subgroup) -> Result<bool> {
    Ok(normal_closure(group, l)?.is_whole())
}

/// One double coset `L g H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCoset {
    pub representative: usize,
    /// `|L g H| / |L|`.
    pub l_cosets: usize,
}

/// Double cosets `L g H` in order of their least element, so the first
/// representative is the identity.
pub fn double_cosets(group: &PermGroup, l: &Subgroup, h: &Subgroup) -> Result<Vec<DoubleCoset>> {
    l.check_in(group)?;
    h.check_in(group)?;
    let mut seen = FixedBitSet::with_capacity(group.order());
    let mut out = Vec::new();
    for g in 0..group.order() {
        if seen.contains(g) {
            continue;
        }
        let mut size = 0;
        for &a in l.elements() {
            let ag = group.mul(a, g);
            for &b in h.elements() {
                if !seen.put(group.mul(ag, b)) {
                    size += 1;
                }
            }
        }
        out.push(DoubleCoset {
            representative: g,
            l_cosets: size / l.order(),
        });
    }
    Ok(out)
}

/// The right-translation action of `G` on `H\G`.
#[derive(Clone, Debug)]
pub struct CosetAction {
    /// Coset representatives; position 0 is the coset `H` itself.
    pub representatives: Vec<usize>,
    /// `coset_of[g]` is the position of the coset `Hg`.
    pub coset_of: Vec<usize>,
    /// `G` onto the image group acting on the cosets.
    pub hom: GroupHom,
    pub kernel: Subgroup,
}

/// Builds the coset action. The target of the homomorphism is its image
/// inside the symmetric group on the cosets, which keeps the target small.
pub fn coset_action(group: &Arc<PermGroup>, h: &Subgroup) -> Result<CosetAction> {
    h.check_in(group)?;
    let n = group.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut representatives = Vec::new();
    for g in 0..n {
        if coset_of[g] != usize::MAX {
            continue;
        }
        let index = representatives.len();
        representatives.push(g);
        for &a in h.elements() {
            coset_of[group.mul(a, g)] = index;
        }
    }
    let degree = representatives.len();
    let action_of = |g: usize| -> Permutation {
        let images = representatives
            .iter()
            .map(|&r| coset_of[group.mul(r, g)])
            .collect();
        Permutation::from_images(images).expect("translation permutes cosets")
    };
    let gen_images: Vec<Permutation> = group.generator_elements().iter().map(|&g| action_of(g)).collect();
    let image = Arc::new(PermGroup::generate_with_limit(degree, gen_images.clone(), n)?);
    let hom = GroupHom::from_perms(group.clone(), image, &gen_images)?;
    let kernel = hom.kernel();
    Ok(CosetAction {
        representatives,
        coset_of,
        hom,
        kernel,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(degree: usize, gens: &[&str]) -> Arc<PermGroup> {
        let gens = gens.iter().map(|c| Permutation::parse(c, degree).unwrap()).collect();
        Arc::new(PermGroup::generate(degree, gens).unwrap())
    }

    fn sub(g: &PermGroup, gens: &[&str]) -> Subgroup {
        let perms: Vec<Permutation> = gens.iter().map(|c| Permutation::parse(c, g.degree()).unwrap()).collect();
        Subgroup::generated_by_perms(g, &perms).unwrap()
    }

    #[test]
    fn normalizers_in_s3() {
        let g = group(3, &["(1,2)", "(1,2,3)"]);
        let t = sub(&g, &["(1,2)"]);
        assert_eq!(normalizer(&g, &t).unwrap(), t);
        let c = sub(&g, &["(1,2,3)"]);
        assert!(normalizer(&g, &c).unwrap().is_whole());
        assert!(normalizer(&g, &Subgroup::whole(&g)).unwrap().is_whole());
    }

    #[test]
    fn normal_closures() {
        let g = group(3, &["(1,2)", "(1,2,3)"]);
        let t = sub(&g, &["(1,2)"]);
        assert!(normal_closure(&g, &t).unwrap().is_whole());
        assert!(is_contranormal(&g, &t).unwrap());
        let z4 = group(4, &["(1,2,3,4)"]);
        let half = sub(&z4, &["(1,3)(2,4)"]);
        assert_eq!(normal_closure(&z4, &half).unwrap(), half);
        assert!(!is_contranormal(&z4, &half).unwrap());
        let s4 = group(4, &["(1,2)", "(1,2,3,4)"]);
        let v = sub(&s4, &["(1,2)(3,4)"]);
        assert_eq!(normal_closure(&s4, &v).unwrap().order(), 4);
        assert_eq!(normal_closure(&s4, &v).unwrap(), normal_closure_by_conjugates(&s4, &v).unwrap());
    }

    #[test]
    fn double_cosets_in_s3() {
        let g = group(3, &["(1,2)", "(1,2,3)"]);
        let t = sub(&g, &["(1,2)"]);
        let dc = double_cosets(&g, &t, &t).unwrap();
        assert_eq!(dc.len(), 2);
        assert_eq!(dc[0].representative, PermGroup::IDENTITY);
        let sizes: Vec<usize> = dc.iter().map(|d| d.l_cosets * 2).collect();
        assert_eq!(sizes, vec![2, 4]);
        assert_eq!(double_cosets(&g, &Subgroup::whole(&g), &t).unwrap().len(), 1);
    }

    #[test]
    fn coset_actions() {
        let g = group(3, &["(1,2)", "(1,2,3)"]);
        let t = sub(&g, &["(1,2)"]);
        let action = coset_action(&g, &t).unwrap();
        assert_eq!(action.representatives.len(), 3);
        assert!(action.kernel.is_trivial());
        assert!(action.hom.is_injective());
        let whole = coset_action(&g, &Subgroup::whole(&g)).unwrap();
        assert!(whole.kernel.is_whole());
        let c = sub(&g, &["(1,2,3)"]);
        assert_eq!(coset_action(&g, &c).unwrap().kernel, c);
    }
}
