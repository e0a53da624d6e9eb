use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation, Subgroup};

/// A homomorphism between enumerated permutation groups, stored as its full
/// element map.
#[derive(Clone)]
pub struct GroupHom {
    source: Arc<PermGroup>,
    target: Arc<PermGroup>,
    images: Vec<usize>,
    element_map: Vec<usize>,
}

impl GroupHom {
    /// `images[i]` is the target element index of the i-th source generator.
    ///
    /// The map is extended along the source's breadth-first tree and then
    /// checked on every Cayley-graph edge `a -> a·s`, which is enough to make
    /// it multiplicative.
    pub fn new(source: Arc<PermGroup>, target: Arc<PermGroup>, images: Vec<usize>) -> Result<Self> {
        let gens = source.generator_elements();
        if images.len() != gens.len() {
            return Err(Error::LengthMismatch {
                expected: gens.len(),
                found: images.len(),
            });
        }
        if images.iter().any(|&t| t >= target.order()) {
            return Err(Error::NotAHomomorphism);
        }
        let n = source.order();
        let mut element_map = vec![PermGroup::IDENTITY; n];
        for (a, node) in source.tree().iter().enumerate() {
            if let Some((parent, s)) = *node {
                element_map[a] = target.mul(element_map[parent], images[s]);
            }
        }
        for a in 0..n {
            for (s, &g) in gens.iter().enumerate() {
                if element_map[source.mul(a, g)] != target.mul(element_map[a], images[s]) {
                    return Err(Error::NotAHomomorphism);
                }
            }
        }
        Ok(GroupHom {
            source,
            target,
            images,
            element_map,
        })
    }

    /// Generator images given as permutations, which must lie in `target`.
    pub fn from_perms(
        source: Arc<PermGroup>,
        target: Arc<PermGroup>,
        images: &[Permutation],
    ) -> Result<Self> {
        let indices = images
            .iter()
            .map(|p| {
                if p.degree() != target.degree() {
                    return Err(Error::DegreeMismatch {
                        expected: target.degree(),
                        found: p.degree(),
                    });
                }
                target.index_of(p).ok_or(Error::NotAHomomorphism)
            })
            .collect::<Result<Vec<_>>>()?;
        GroupHom::new(source, target, indices)
    }

    pub fn identity(group: Arc<PermGroup>) -> Self {
        let images = group.generator_elements().to_vec();
        GroupHom::new(group.clone(), group, images).expect("identity is a homomorphism")
    }

    /// The inclusion `H ↪ G`, with `H` materialized as a group of its own on
    /// the same points. `H` is generated by [`Subgroup::generating_set`].
    pub fn inclusion(group: &Arc<PermGroup>, h: &Subgroup) -> Result<Self> {
        h.check_in(group)?;
        let gens: Vec<Permutation> = h
            .generating_set(group)
            .iter()
            .map(|&g| group.element(g).clone())
            .collect();
        let source = Arc::new(PermGroup::generate_with_limit(group.degree(), gens.clone(), group.order())?);
        GroupHom::from_perms(source, group.clone(), &gens)
    }

    pub fn source(&self) -> &Arc<PermGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<PermGroup> {
        &self.target
    }

    pub fn generator_images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn map(&self, a: usize) -> usize {
        self.element_map[a]
    }

    pub fn element_map(&self) -> &[usize] {
        &self.element_map
    }

    /// `h(S)` for a subgroup `S` of the source.
    pub fn image_of(&self, s: &Subgroup) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.target.order());
        for &a in s.elements() {
            members.insert(self.element_map[a]);
        }
        Subgroup::from_bitset(members)
    }

    /// `im h`.
    pub fn image_subgroup(&self) -> Subgroup {
        self.image_of(&Subgroup::whole(&self.source))
    }

    /// `h⁻¹(T)`, filtering the source elements.
    pub fn preimage(&self, t: &Subgroup) -> Result<Subgroup> {
        t.check_in(&self.target)?;
        let mut members = FixedBitSet::with_capacity(self.source.order());
        for (a, &b) in self.element_map.iter().enumerate() {
            if t.contains(b) {
                members.insert(a);
            }
        }
        Ok(Subgroup::from_bitset(members))
    }

    pub fn kernel(&self) -> Subgroup {
        self.preimage(&Subgroup::trivial(&self.target))
            .expect("trivial subgroup lies in the target")
    }

    pub fn is_surjective(&self) -> bool {
        self.image_subgroup().is_whole()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().is_trivial()
    }
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GroupHom")
            .field("source_order", &self.source.order())
            .field("target_order", &self.target.order())
            .field("images", &self.images)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(degree: usize, gens: &[&str]) -> Arc<PermGroup> {
        let gens = gens.iter().map(|c| Permutation::parse(c, degree).unwrap()).collect();
        Arc::new(PermGroup::generate(degree, gens).unwrap())
    }

    #[test]
    fn sign_map_of_s3() {
        let s3 = group(3, &["(1,2)", "(1,2,3)"]);
        let z2 = group(2, &["(1,2)"]);
        let swap = Permutation::parse("(1,2)", 2).unwrap();
        let id = Permutation::identity(2);
        let sign = GroupHom::from_perms(s3.clone(), z2.clone(), &[swap.clone(), id]).unwrap();
        assert_eq!(sign.kernel().order(), 3);
        assert!(sign.is_surjective());
        assert!(!sign.is_injective());
        for a in 0..6 {
            for b in 0..6 {
                assert_eq!(sign.map(s3.mul(a, b)), z2.mul(sign.map(a), sign.map(b)));
            }
        }
        // (1,2,3) cannot map to an element of order 2.
        assert_eq!(
            GroupHom::from_perms(s3, z2, &[swap.clone(), swap]).unwrap_err(),
            Error::NotAHomomorphism
        );
    }

    #[test]
    fn inclusion_and_identity() {
        let s3 = group(3, &["(1,2)", "(1,2,3)"]);
        let t = Subgroup::generated_by_perms(&s3, &[Permutation::parse("(1,2)", 3).unwrap()]).unwrap();
        let iota = GroupHom::inclusion(&s3, &t).unwrap();
        assert_eq!(iota.source().order(), 2);
        assert!(iota.is_injective());
        assert_eq!(iota.image_subgroup(), t);
        let id = GroupHom::identity(s3.clone());
        assert!(id.is_surjective() && id.is_injective());
        assert_eq!(id.preimage(&t).unwrap(), t);
    }
}
