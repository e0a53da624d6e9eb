//! Finite right G-sets, concretely and up to isomorphism.
//!
//! A [`ConcreteGSet`] stores how each generator of the group moves the
//! points. A [`GSetVector`] records a G-set up to isomorphism as orbit
//! multiplicities over the conjugacy classes of subgroups: the orbit of a
//! point with stabilizer `L` is isomorphic to the coset space `L\G`.

use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::perm::{double_cosets, GroupHom, PermGroup, Subgroup, SubgroupClassTable};

/// A finite right G-set given by the action of each group generator.
#[derive(Clone)]
pub struct ConcreteGSet {
    group: Arc<PermGroup>,
    size: usize,
    /// `gen_action[s][p]` is `p · s` for the s-th generator.
    gen_action: Vec<Vec<u32>>,
}

impl ConcreteGSet {
    /// Validates that the generator tables, one per generator of `group` and
    /// each of length `size`, extend to an action of `group`.
    pub fn from_generator_action(group: Arc<PermGroup>, size: usize, gen_action: Vec<Vec<usize>>) -> Result<Self> {
        let k = group.generator_elements().len();
        if gen_action.len() != k {
            return Err(Error::LengthMismatch {
                expected: k,
                found: gen_action.len(),
            });
        }
        for table in &gen_action {
            if table.len() != size {
                return Err(Error::InvalidAction("generator tables differ in length".into()));
            }
            let mut seen = vec![false; size];
            for &q in table {
                if q >= size || std::mem::replace(&mut seen[q], true) {
                    return Err(Error::InvalidAction("a generator does not permute the points".into()));
                }
            }
        }
        let set = ConcreteGSet {
            group,
            size,
            gen_action: gen_action
                .into_iter()
                .map(|t| t.into_iter().map(|q| q as u32).collect())
                .collect(),
        };
        // The tables define a map G -> Sym(points) along the element tree;
        // every Cayley edge has to agree with it.
        let gens = set.group.generator_elements();
        for p in 0..size {
            let row = set.orbit_row(p);
            for (a, &pa) in row.iter().enumerate() {
                for (s, &g) in gens.iter().enumerate() {
                    if row[set.group.mul(a, g)] != set.gen_action[s][pa] as usize {
                        return Err(Error::InvalidAction(
                            "generator tables violate a relation of the group".into(),
                        ));
                    }
                }
            }
        }
        Ok(set)
    }

    pub(crate) fn from_tables_unchecked(group: Arc<PermGroup>, size: usize, gen_action: Vec<Vec<u32>>) -> Self {
        ConcreteGSet {
            group,
            size,
            gen_action,
        }
    }

    pub fn empty(group: Arc<PermGroup>) -> Self {
        let k = group.generator_elements().len();
        ConcreteGSet {
            group,
            size: 0,
            gen_action: vec![Vec::new(); k],
        }
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    /// `p · g` for an arbitrary element index `g`.
    pub fn act(&self, p: usize, g: usize) -> usize {
        let tree = self.group.tree();
        let mut path = Vec::new();
        let mut x = g;
        while let Some((parent, s)) = tree[x] {
            path.push(s);
            x = parent;
        }
        path.iter()
            .rev()
            .fold(p, |q, &s| self.gen_action[s][q] as usize)
    }

    /// `p · g` for every element index `g`.
    pub fn orbit_row(&self, p: usize) -> Vec<usize> {
        let tree = self.group.tree();
        let mut row = vec![p; self.group.order()];
        for (a, node) in tree.iter().enumerate() {
            if let Some((parent, s)) = *node {
                row[a] = self.gen_action[s][row[parent]] as usize;
            }
        }
        row
    }

    pub fn stabilizer(&self, p: usize) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.group.order());
        for (g, q) in self.orbit_row(p).into_iter().enumerate() {
            if q == p {
                members.insert(g);
            }
        }
        Subgroup::from_bitset(members)
    }

    /// Orbits as sorted point lists, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size];
        let mut out = Vec::new();
        for start in 0..self.size {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut head = 0;
            while head < orbit.len() {
                let p = orbit[head];
                for table in &self.gen_action {
                    let q = table[p] as usize;
                    if !seen[q] {
                        seen[q] = true;
                        orbit.push(q);
                    }
                }
                head += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.size > 0 && self.orbits().len() == 1
    }

    pub fn disjoint_union(&self, other: &ConcreteGSet) -> Result<ConcreteGSet> {
        if self.group != other.group {
            return Err(Error::GroupMismatch);
        }
        let offset = self.size as u32;
        let gen_action = self
            .gen_action
            .iter()
            .zip(&other.gen_action)
            .map(|(a, b)| a.iter().copied().chain(b.iter().map(|&q| q + offset)).collect())
            .collect();
        Ok(ConcreteGSet::from_tables_unchecked(
            self.group.clone(),
            self.size + other.size,
            gen_action,
        ))
    }
}

impl fmt::Debug for ConcreteGSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ConcreteGSet")
            .field("group_order", &self.group.order())
            .field("points", &self.size)
            .finish()
    }
}

/// The right cosets `L\G` under right translation. Point 0 is `L` itself.
pub fn coset_gset(group: &Arc<PermGroup>, l: &Subgroup) -> Result<ConcreteGSet> {
    l.check_in(group)?;
    let n = group.order();
    let mut coset_of = vec![u32::MAX; n];
    let mut representatives = Vec::new();
    for g in 0..n {
        if coset_of[g] != u32::MAX {
            continue;
        }
        let index = representatives.len() as u32;
        representatives.push(g);
        for &a in l.elements() {
            coset_of[group.mul(a, g)] = index;
        }
    }
    let gen_action = group
        .generator_elements()
        .iter()
        .map(|&s| {
            representatives
                .iter()
                .map(|&r| coset_of[group.mul(r, s)])
                .collect()
        })
        .collect();
    Ok(ConcreteGSet::from_tables_unchecked(
        group.clone(),
        representatives.len(),
        gen_action,
    ))
}

/// The cartesian product with the diagonal action. Point `(p, q)` is
/// `p * |S2| + q`.
pub fn product(s1: &ConcreteGSet, s2: &ConcreteGSet) -> Result<ConcreteGSet> {
    if s1.group != s2.group {
        return Err(Error::GroupMismatch);
    }
    let size = s1
        .size
        .checked_mul(s2.size)
        .filter(|&s| s <= u32::MAX as usize)
        .ok_or(Error::Overflow("product G-set size"))?;
    let gen_action = s1
        .gen_action
        .iter()
        .zip(&s2.gen_action)
        .map(|(a, b)| {
            let mut table = Vec::with_capacity(size);
            for p in 0..s1.size {
                for q in 0..s2.size {
                    table.push(a[p] * s2.size as u32 + b[q]);
                }
            }
            table
        })
        .collect();
    Ok(ConcreteGSet::from_tables_unchecked(s1.group.clone(), size, gen_action))
}

/// A finite G-set up to isomorphism: `Σ c_[L] · (L\G)` over the classes of
/// a [`SubgroupClassTable`].
#[derive(Clone)]
pub struct GSetVector {
    table: Arc<SubgroupClassTable>,
    multiplicities: Vec<u64>,
}

impl GSetVector {
    pub fn zero(table: Arc<SubgroupClassTable>) -> Self {
        let n = table.len();
        GSetVector {
            table,
            multiplicities: vec![0; n],
        }
    }

    /// The transitive G-set `L\G` for `L` in class `class`.
    pub fn indicator(table: Arc<SubgroupClassTable>, class: usize) -> Result<Self> {
        table.check_class(class)?;
        let mut v = GSetVector::zero(table);
        v.multiplicities[class] = 1;
        Ok(v)
    }

    pub fn from_multiplicities(table: Arc<SubgroupClassTable>, multiplicities: Vec<u64>) -> Result<Self> {
        if multiplicities.len() != table.len() {
            return Err(Error::LengthMismatch {
                expected: table.len(),
                found: multiplicities.len(),
            });
        }
        Ok(GSetVector {
            table,
            multiplicities,
        })
    }

    pub fn table(&self) -> &Arc<SubgroupClassTable> {
        &self.table
    }

    pub fn multiplicities(&self) -> &[u64] {
        &self.multiplicities
    }

    pub fn is_zero(&self) -> bool {
        self.multiplicities.iter().all(|&c| c == 0)
    }

    fn check_same(&self, other: &GSetVector) -> Result<()> {
        if same_basis(&self.table, &other.table) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    /// Disjoint union.
    pub fn add(&self, other: &GSetVector) -> Result<GSetVector> {
        self.check_same(other)?;
        let multiplicities = self
            .multiplicities
            .iter()
            .zip(&other.multiplicities)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow("G-set multiplicity")))
            .collect::<Result<_>>()?;
        Ok(GSetVector {
            table: self.table.clone(),
            multiplicities,
        })
    }

    pub fn scale(&self, k: u64) -> Result<GSetVector> {
        let multiplicities = self
            .multiplicities
            .iter()
            .map(|a| a.checked_mul(k).ok_or(Error::Overflow("G-set multiplicity")))
            .collect::<Result<_>>()?;
        Ok(GSetVector {
            table: self.table.clone(),
            multiplicities,
        })
    }

    /// Number of points, `Σ c_[L] · [G : L]`.
    pub fn cardinality(&self) -> Result<u64> {
        self.multiplicities
            .iter()
            .enumerate()
            .try_fold(0u64, |acc, (i, &c)| {
                let index = self.table.class_index_in_group(i) as u64;
                c.checked_mul(index)
                    .and_then(|x| acc.checked_add(x))
                    .ok_or(Error::Overflow("G-set cardinality"))
            })
    }

    pub fn is_transitive(&self) -> bool {
        self.multiplicities.iter().sum::<u64>() == 1
    }

    /// A concrete model: the disjoint union of coset spaces, classes in
    /// basis order.
    pub fn realize(&self) -> Result<ConcreteGSet> {
        let group = self.table.group();
        let mut out = ConcreteGSet::empty(group.clone());
        for (i, &c) in self.multiplicities.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let piece = coset_gset(group, self.table.representative(i))?;
            for _ in 0..c {
                out = out.disjoint_union(&piece)?;
            }
        }
        Ok(out)
    }
}

impl PartialEq for GSetVector {
    fn eq(&self, other: &Self) -> bool {
        same_basis(&self.table, &other.table) && self.multiplicities == other.multiplicities
    }
}

impl Eq for GSetVector {}

impl fmt::Debug for GSetVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GSetVector{:?}", self.multiplicities)
    }
}

pub(crate) fn same_basis(a: &Arc<SubgroupClassTable>, b: &Arc<SubgroupClassTable>) -> bool {
    Arc::ptr_eq(a, b) || a.group() == b.group()
}

/// Records, for each orbit, the class of the stabilizer of its least point.
pub fn orbit_decompose(s: &ConcreteGSet, table: &Arc<SubgroupClassTable>) -> Result<GSetVector> {
    if s.group() != table.group() {
        return Err(Error::GroupMismatch);
    }
    let mut v = GSetVector::zero(table.clone());
    for orbit in s.orbits() {
        let class = table.class_of(&s.stabilizer(orbit[0]))?;
        v.multiplicities[class] += 1;
    }
    Ok(v)
}

/// Two G-sets are isomorphic exactly when their orbit multiplicities agree.
pub fn gsets_isomorphic(s1: &GSetVector, s2: &GSetVector) -> Result<bool> {
    s1.check_same(s2)?;
    Ok(s1.multiplicities == s2.multiplicities)
}

/// Pulls a G₂-set back along `h: G₁ → G₂`.
///
/// For each transitive piece `L\G₂` and each double coset `L g I` with
/// `I = im h`, the result gains one orbit `h⁻¹(g⁻¹Lg)\G₁`.
pub fn pullback(h: &GroupHom, source: &Arc<SubgroupClassTable>, s: &GSetVector) -> Result<GSetVector> {
    if source.group().as_ref() != h.source().as_ref() {
        return Err(Error::GroupMismatch);
    }
    if s.table.group().as_ref() != h.target().as_ref() {
        return Err(Error::GroupMismatch);
    }
    let target = h.target();
    let image = h.image_subgroup();
    let mut out = GSetVector::zero(source.clone());
    for (class, &c) in s.multiplicities.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let l = s.table.representative(class);
        for dc in double_cosets(target, l, &image)? {
            let pre = h.preimage(&l.conjugate(target, dc.representative))?;
            let k = source.class_of(&pre)?;
            out.multiplicities[k] = out.multiplicities[k]
                .checked_add(c)
                .ok_or(Error::Overflow("G-set multiplicity"))?;
        }
    }
    Ok(out)
}
