//! Subgroup lattice, conjugacy classes of subgroups and the Möbius function.

use std::collections::HashMap;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Subgroup};

/// Every subgroup of `group`, ordered by size and then by element list.
///
/// Cyclic extension: start from the cyclic subgroups, then repeatedly join
/// each known subgroup with one outside cyclic subgroup until nothing new
/// appears.
pub fn enumerate_subgroups(group: &PermGroup) -> Vec<Subgroup> {
    let n = group.order();
    let mut found: HashMap<FixedBitSet, usize> = HashMap::new();
    let mut list: Vec<(Subgroup, Vec<usize>)> = Vec::new();

    let mut cyclic: Vec<(usize, Subgroup)> = Vec::new();
    let mut cyclic_seen: HashMap<FixedBitSet, ()> = HashMap::new();
    for g in 0..n {
        let c = Subgroup::generated_by(group, &[g]);
        if cyclic_seen.insert(c.members().clone(), ()).is_none() {
            cyclic.push((g, c));
        }
    }
    for (g, c) in &cyclic {
        found.insert(c.members().clone(), list.len());
        let gens = if *g == PermGroup::IDENTITY { vec![] } else { vec![*g] };
        list.push((c.clone(), gens));
    }

    let mut head = 0;
    while head < list.len() {
        let (current, gens) = list[head].clone();
        for (g, c) in &cyclic {
            if c.is_subgroup_of(&current) {
                continue;
            }
            let mut joined_gens = gens.clone();
            joined_gens.push(*g);
            let joined = Subgroup::generated_by(group, &joined_gens);
            if !found.contains_key(joined.members()) {
                found.insert(joined.members().clone(), list.len());
                list.push((joined, joined_gens));
            }
        }
        head += 1;
    }

    let mut subgroups: Vec<Subgroup> = list.into_iter().map(|(s, _)| s).collect();
    subgroups.sort_by(|a, b| a.canonical_cmp(b));
    subgroups
}

/// One conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    /// Index (into the subgroup list) of the class member with least element list.
    pub representative: usize,
    /// Indices of all members, ascending.
    pub members: Vec<usize>,
    pub order: usize,
}

/// The ordered basis of conjugacy classes of subgroups of a group.
///
/// Classes are ordered by subgroup order, ties broken by the canonical
/// representative's element list. Class 0 is the trivial subgroup and the
/// last class is the whole group.
pub struct SubgroupClassTable {
    group: Arc<PermGroup>,
    subgroups: Vec<Subgroup>,
    lookup: HashMap<FixedBitSet, usize>,
    classes: Vec<SubgroupClass>,
    class_of: Vec<usize>,
}

impl SubgroupClassTable {
    pub fn new(group: Arc<PermGroup>) -> Self {
        let subgroups = enumerate_subgroups(&group);
        let lookup: HashMap<FixedBitSet, usize> = subgroups
            .iter()
            .enumerate()
            .map(|(i, s)| (s.members().clone(), i))
            .collect();
        let mut class_of = vec![usize::MAX; subgroups.len()];
        let mut classes = Vec::new();
        // Subgroups are sorted, so the first unclassified one is the least
        // member of its class and classes come out in basis order.
        for i in 0..subgroups.len() {
            if class_of[i] != usize::MAX {
                continue;
            }
            let class_index = classes.len();
            let mut members = Vec::new();
            for g in 0..group.order() {
                let j = lookup[subgroups[i].conjugate(&group, g).members()];
                if class_of[j] == usize::MAX {
                    class_of[j] = class_index;
                    members.push(j);
                }
            }
            members.sort_unstable();
            classes.push(SubgroupClass {
                representative: i,
                members,
                order: subgroups[i].order(),
            });
        }
        SubgroupClassTable {
            group,
            subgroups,
            lookup,
            classes,
            class_of,
        }
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    /// Number of conjugacy classes, i.e. the rank of the Burnside ring.
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> &SubgroupClass {
        &self.classes[i]
    }

    pub fn representative(&self, class: usize) -> &Subgroup {
        &self.subgroups[self.classes[class].representative]
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn subgroup(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn index_of(&self, s: &Subgroup) -> Option<usize> {
        self.lookup.get(s.members()).copied()
    }

    pub fn class_of_index(&self, subgroup: usize) -> usize {
        self.class_of[subgroup]
    }

    pub fn class_of(&self, s: &Subgroup) -> Result<usize> {
        self.index_of(s)
            .map(|i| self.class_of[i])
            .ok_or(Error::NotASubgroup)
    }

    pub fn whole_class(&self) -> usize {
        self.classes.len() - 1
    }

    pub fn check_class(&self, class: usize) -> Result<()> {
        if class < self.classes.len() {
            Ok(())
        } else {
            Err(Error::ClassIndexOutOfRange {
                index: class,
                len: self.classes.len(),
            })
        }
    }

    /// Index of the subgroup in `[L] -> [G : L]` form.
    pub fn class_index_in_group(&self, class: usize) -> usize {
        self.group.order() / self.classes[class].order
    }

    /// `μ(K, L)` for `K ≤ L`, by the recursion `μ(K,M) = −Σ_{K ≤ M' < M} μ(K,M')`.
    pub fn mobius(&self, k: &Subgroup, l: &Subgroup) -> Result<i64> {
        let ki = self.index_of(k).ok_or(Error::NotASubgroup)?;
        let li = self.index_of(l).ok_or(Error::NotASubgroup)?;
        if !k.is_subgroup_of(l) {
            return Err(Error::NotContained("mobius requires K ≤ L"));
        }
        Ok(self.mobius_from(ki)[li].expect("L lies above K"))
    }

    /// `μ(K, M)` for every subgroup `M ≥ K` (index `K`), `None` elsewhere.
    pub fn mobius_from(&self, k: usize) -> Vec<Option<i64>> {
        let base = &self.subgroups[k];
        let mut mu: Vec<Option<i64>> = vec![None; self.subgroups.len()];
        mu[k] = Some(1);
        let above: Vec<usize> = (k + 1..self.subgroups.len())
            .filter(|&m| base.is_subgroup_of(&self.subgroups[m]))
            .collect();
        for (pos, &m) in above.iter().enumerate() {
            let top = &self.subgroups[m];
            let mut sum = 1; // μ(K,K)
            for &m2 in &above[..pos] {
                if self.subgroups[m2].is_subgroup_of(top) {
                    sum += mu[m2].unwrap();
                }
            }
            mu[m] = Some(-sum);
        }
        mu
    }

    /// `μ(K, L)` for every subgroup `K ≤ L` (index `L`), `None` elsewhere,
    /// by the dual recursion `μ(K,L) = −Σ_{K < M ≤ L} μ(M,L)`.
    pub fn mobius_to(&self, l: usize) -> Vec<Option<i64>> {
        let top = &self.subgroups[l];
        let mut mu: Vec<Option<i64>> = vec![None; self.subgroups.len()];
        mu[l] = Some(1);
        let below: Vec<usize> = (0..l)
            .filter(|&k| self.subgroups[k].is_subgroup_of(top))
            .collect();
        for (pos, &k) in below.iter().enumerate().rev() {
            let bottom = &self.subgroups[k];
            let mut sum = 1; // μ(L,L)
            for &m in &below[pos + 1..] {
                if bottom.is_subgroup_of(&self.subgroups[m]) {
                    sum += mu[m].unwrap();
                }
            }
            mu[k] = Some(-sum);
        }
        mu
    }
}

impl std::fmt::Debug for SubgroupClassTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SubgroupClassTable")
            .field("group_order", &self.group.order())
            .field("subgroups", &self.subgroups.len())
            .field("classes", &self.classes.len())
            .finish()
    }
}
