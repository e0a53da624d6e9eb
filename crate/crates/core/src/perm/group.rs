use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default upper bound on the number of enumerated group elements.
pub const DEFAULT_MAX_ORDER: usize = 200;

/// A finite permutation group with every element enumerated.
///
/// Elements are indexed in breadth-first order from the identity, extending
/// by right multiplication with the generators in the order given. Index 0 is
/// always the identity. Products and inverses are precomputed tables.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    generator_elements: Vec<usize>,
    elements: Vec<Permutation>,
    lookup: HashMap<Permutation, usize>,
    mul: Vec<u32>,
    inv: Vec<u32>,
    /// `(parent, generator position)` with `element = parent * generator`;
    /// `None` for the identity.
    tree: Vec<Option<(usize, usize)>>,
}

impl PermGroup {
    /// Closes the generators under composition, failing past
    /// [`DEFAULT_MAX_ORDER`] elements.
    pub fn generate(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::generate_with_limit(degree, generators, DEFAULT_MAX_ORDER)
    }

    pub fn generate_with_limit(
        degree: usize,
        generators: Vec<Permutation>,
        max_order: usize,
    ) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut lookup = HashMap::from([(identity, 0usize)]);
        let mut tree = vec![None];
        let mut right = Vec::new();
        let mut head = 0;
        while head < elements.len() {
            for (s, gen) in generators.iter().enumerate() {
                let product = elements[head].then(gen);
                let next = match lookup.get(&product) {
                    Some(&i) => i,
                    None => {
                        if elements.len() == max_order {
                            return Err(Error::GroupTooLarge { limit: max_order });
                        }
                        let i = elements.len();
                        lookup.insert(product.clone(), i);
                        elements.push(product);
                        tree.push(Some((head, s)));
                        i
                    }
                };
                right.push(next as u32);
            }
            head += 1;
        }

        let n = elements.len();
        let k = generators.len();
        // mul[a][b] follows b's tree path: a * (parent * s) = (a * parent) * s.
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            mul[a * n] = a as u32;
        }
        for b in 1..n {
            let (parent, s) = tree[b].expect("non-identity elements have parents");
            for a in 0..n {
                let ap = mul[a * n + parent] as usize;
                mul[a * n + b] = right[ap * k + s];
            }
        }
        let mut inv = vec![0u32; n];
        for a in 0..n {
            for b in 0..n {
                if mul[a * n + b] == 0 {
                    inv[a] = b as u32;
                    break;
                }
            }
        }
        let generator_elements = generators.iter().map(|g| lookup[g]).collect();
        Ok(PermGroup {
            degree,
            generators,
            generator_elements,
            elements,
            lookup,
            mul,
            inv,
            tree,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Element indices of the generators.
    pub fn generator_elements(&self) -> &[usize] {
        &self.generator_elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.lookup.get(p).copied()
    }

    pub const IDENTITY: usize = 0;

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.elements.len() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g⁻¹ a g`.
    #[inline]
    pub fn conj(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), a), g)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != Self::IDENTITY {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Breadth-first spanning tree; see the field docs.
    pub fn tree(&self) -> &[Option<(usize, usize)>] {
        &self.tree
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generator_elements;
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other) || (self.degree == other.degree && self.elements == other.elements)
    }
}

impl Eq for PermGroup {}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perms(degree: usize, cycles: &[&str]) -> Vec<Permutation> {
        cycles
            .iter()
            .map(|c| Permutation::parse(c, degree).unwrap())
            .collect()
    }

    #[test]
    fn symmetric_group_of_degree_three() {
        let g = PermGroup::generate(3, perms(3, &["(1,2)", "(1,2,3)"])).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.element(0).is_identity());
        for a in 0..6 {
            assert_eq!(g.mul(a, g.inv(a)), 0);
            for b in 0..6 {
                assert_eq!(g.element(g.mul(a, b)), &g.element(a).then(g.element(b)));
            }
        }
        assert!(!g.is_abelian());
    }

    #[test]
    fn alternating_group_of_degree_four() {
        let g = PermGroup::generate(4, perms(4, &["(1,2,3)", "(2,3,4)"])).unwrap();
        assert_eq!(g.order(), 12);
    }

    #[test]
    fn trivial_and_errors() {
        let g = PermGroup::generate(5, vec![]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(
            PermGroup::generate(3, perms(4, &["(1,2)"])).unwrap_err(),
            Error::DegreeMismatch { expected: 3, found: 4 }
        );
        assert_eq!(
            PermGroup::generate_with_limit(5, perms(5, &["(1,2)", "(1,2,3,4,5)"]), 100).unwrap_err(),
            Error::GroupTooLarge { limit: 100 }
        );
        assert_eq!(PermGroup::generate(0, vec![]).unwrap_err(), Error::ZeroDegree);
    }

    #[test]
    fn element_indexing_is_breadth_first() {
        let g = PermGroup::generate(4, perms(4, &["(1,2,3,4)"])).unwrap();
        let c = Permutation::parse("(1,2,3,4)", 4).unwrap();
        for k in 0..4 {
            assert_eq!(g.element(k), &c.pow(k as u64));
        }
        assert_eq!(g.element_order(1), 4);
    }
}
