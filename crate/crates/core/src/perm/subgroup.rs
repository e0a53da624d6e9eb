use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

/// A subgroup of a [`PermGroup`], stored as a set of element indices.
///
/// The subgroup does not keep a reference to its parent; every operation
/// takes the parent explicitly. The canonical key is the sorted element list.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: FixedBitSet,
    elements: Vec<usize>,
}

impl Subgroup {
    pub(crate) fn from_bitset(members: FixedBitSet) -> Self {
        let elements = members.ones().collect();
        Subgroup { members, elements }
    }

    pub fn trivial(group: &PermGroup) -> Self {
        let mut members = FixedBitSet::with_capacity(group.order());
        members.insert(PermGroup::IDENTITY);
        Subgroup::from_bitset(members)
    }

    pub fn whole(group: &PermGroup) -> Self {
        let mut members = FixedBitSet::with_capacity(group.order());
        members.insert_range(..);
        Subgroup::from_bitset(members)
    }

    /// The subgroup generated by the given element indices.
    pub fn generated_by(group: &PermGroup, generators: &[usize]) -> Self {
        let mut members = FixedBitSet::with_capacity(group.order());
        members.insert(PermGroup::IDENTITY);
        let mut queue = vec![PermGroup::IDENTITY];
        while let Some(x) = queue.pop() {
            for &s in generators {
                let y = group.mul(x, s);
                if !members.put(y) {
                    queue.push(y);
                }
            }
        }
        Subgroup::from_bitset(members)
    }

    /// The subgroup generated by permutations, which must lie in `group`.
    pub fn generated_by_perms(group: &PermGroup, generators: &[Permutation]) -> Result<Self> {
        let gens = generators
            .iter()
            .map(|p| {
                if p.degree() != group.degree() {
                    return Err(Error::DegreeMismatch {
                        expected: group.degree(),
                        found: p.degree(),
                    });
                }
                group.index_of(p).ok_or(Error::NotASubgroup)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Subgroup::generated_by(group, &gens))
    }

    /// Validates that the element indices form a subgroup of `group`.
    pub fn from_elements(group: &PermGroup, elements: &[usize]) -> Result<Self> {
        let mut members = FixedBitSet::with_capacity(group.order());
        for &e in elements {
            if e >= group.order() {
                return Err(Error::NotASubgroup);
            }
            members.insert(e);
        }
        let sub = Subgroup::from_bitset(members);
        sub.check_in(group)?;
        if !sub.contains(PermGroup::IDENTITY) {
            return Err(Error::NotASubgroup);
        }
        for &a in &sub.elements {
            for &b in &sub.elements {
                if !sub.contains(group.mul(a, group.inv(b))) {
                    return Err(Error::NotASubgroup);
                }
            }
        }
        Ok(sub)
    }

    /// Checks that the subgroup was built over a group of this order.
    pub fn check_in(&self, group: &PermGroup) -> Result<()> {
        if self.members.len() == group.order() {
            Ok(())
        } else {
            Err(Error::NotASubgroup)
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    #[inline]
    pub fn contains(&self, element: usize) -> bool {
        self.members.contains(element)
    }

    /// Sorted element indices; this is the canonical key.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.elements.len() == self.members.len()
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        Subgroup::from_bitset(members)
    }

    /// `g⁻¹ S g`.
    pub fn conjugate(&self, group: &PermGroup, g: usize) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(group.order());
        for &a in &self.elements {
            members.insert(group.conj(a, g));
        }
        Subgroup::from_bitset(members)
    }

    /// A small generating set, chosen greedily in element order.
    pub fn generating_set(&self, group: &PermGroup) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = Subgroup::trivial(group);
        for &e in &self.elements {
            if !span.contains(e) {
                gens.push(e);
                span = Subgroup::generated_by(group, &gens);
                if span.order() == self.order() {
                    break;
                }
            }
        }
        gens
    }

    /// Generators written in cycle notation, e.g. `<(1,2),(1,2,3)>`.
    pub fn label(&self, group: &PermGroup) -> String {
        let gens = self.generating_set(group);
        let parts: Vec<String> = gens.iter().map(|&g| group.element(g).to_string()).collect();
        format!("<{}>", parts.join(","))
    }

    /// Order by size, then lexicographically by element list.
    pub fn canonical_cmp(&self, other: &Subgroup) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.elements.cmp(&other.elements))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subgroup{:?}", self.elements)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> PermGroup {
        let gens = ["(1,2)", "(1,2,3)"].map(|c| Permutation::parse(c, 3).unwrap());
        PermGroup::generate(3, gens.to_vec()).unwrap()
    }

    #[test]
    fn generated_subgroups() {
        let g = s3();
        let t = Permutation::parse("(1,2)", 3).unwrap();
        let h = Subgroup::generated_by_perms(&g, &[t]).unwrap();
        assert_eq!(h.order(), 2);
        assert!(h.is_subgroup_of(&Subgroup::whole(&g)));
        assert_eq!(Subgroup::generated_by(&g, g.generator_elements()).order(), 6);
        assert_eq!(h.label(&g), "<(1,2)>");
        assert_eq!(Subgroup::trivial(&g).label(&g), "<>");
    }

    #[test]
    fn from_elements_validates_closure() {
        let g = s3();
        let t = g.index_of(&Permutation::parse("(1,2)", 3).unwrap()).unwrap();
        let c = g.index_of(&Permutation::parse("(1,2,3)", 3).unwrap()).unwrap();
        assert!(Subgroup::from_elements(&g, &[0, t]).is_ok());
        assert_eq!(Subgroup::from_elements(&g, &[0, c]), Err(Error::NotASubgroup));
        assert_eq!(Subgroup::from_elements(&g, &[t]), Err(Error::NotASubgroup));
        assert_eq!(Subgroup::from_elements(&g, &[0, 17]), Err(Error::NotASubgroup));
    }

    #[test]
    fn conjugates_and_intersections() {
        let g = s3();
        let h = Subgroup::generated_by_perms(&g, &[Permutation::parse("(1,2)", 3).unwrap()]).unwrap();
        let c = g.index_of(&Permutation::parse("(1,2,3)", 3).unwrap()).unwrap();
        let k = h.conjugate(&g, c);
        assert_ne!(h, k);
        assert_eq!(k.order(), 2);
        assert!(h.intersection(&k).is_trivial());
    }
}
