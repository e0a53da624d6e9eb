//! Turning command-line strings into groups, subgroups and G-sets.

use std::sync::Arc;

use pullbacklab::burnside::SubgroupPair;
use pullbacklab::gset::GSetVector;
use pullbacklab::perm::{PermGroup, Permutation, Subgroup, SubgroupClassTable};

use crate::catalog::{build_group, named_subgroup, Catalog, CatalogEntry};
use crate::error::CliError;
use crate::report::ClassInfo;
use crate::spec::{parse_group_spec, parse_gset_spec, parse_subgroup_spec, GSetSpec, GroupSpec, SubgroupSpec};

pub struct Session {
    pub catalog: Catalog,
    pub max_order: usize,
}

/// A group with its subgroup classes enumerated.
pub struct Resolved {
    pub label: String,
    pub entry: Option<CatalogEntry>,
    pub table: Arc<SubgroupClassTable>,
}

impl Resolved {
    pub fn group(&self) -> &Arc<PermGroup> {
        self.table.group()
    }

    /// Catalog subgroup names per class of the subgroup table.
    pub fn class_names(&self) -> Vec<Vec<String>> {
        let mut names = vec![Vec::new(); self.table.len()];
        if let Some(entry) = &self.entry {
            for s in &entry.subgroups {
                if let Some(Ok(sub)) = named_subgroup(entry, self.group(), &s.name) {
                    if let Ok(c) = self.table.class_of(&sub) {
                        names[c].push(s.name.clone());
                    }
                }
            }
        }
        names
    }

    pub fn class_infos(&self) -> Vec<ClassInfo> {
        let names = self.class_names();
        self.table
            .classes()
            .iter()
            .enumerate()
            .zip(names)
            .map(|((index, c), names)| ClassInfo {
                index,
                label: self.table.subgroup(c.representative).label(self.group()),
                order: c.order,
                size: c.members.len(),
                names,
            })
            .collect()
    }

    /// Labels of the class representatives, the basis of `B(G)`.
    pub fn basis_labels(&self) -> Vec<String> {
        class_labels(&self.table)
    }
}

pub fn class_labels(table: &SubgroupClassTable) -> Vec<String> {
    table
        .classes()
        .iter()
        .map(|c| table.subgroup(c.representative).label(table.group()))
        .collect()
}

/// Basis labels of `B(H)`, written with the permutations of `G`.
pub fn h_basis_labels(pair: &SubgroupPair) -> Vec<String> {
    pair.table_h()
        .classes()
        .iter()
        .map(|c| pair.to_g(c.representative).label(pair.group()))
        .collect()
}

impl Session {
    pub fn new(catalog: Catalog, max_order: usize) -> Self {
        Session { catalog, max_order }
    }

    pub fn group(&self, text: &str) -> Result<(String, Option<CatalogEntry>, PermGroup), CliError> {
        match parse_group_spec(text).map_err(|e| CliError::Input(format!("group {text:?}: {e}")))? {
            GroupSpec::Named(name) => {
                let entry = self
                    .catalog
                    .get(&name)
                    .ok_or_else(|| CliError::Input(format!("unknown group {name:?}")))?
                    .clone();
                let g = build_group(&entry, self.max_order)?;
                Ok((name, Some(entry), g))
            }
            GroupSpec::Inline { degree, generators } => {
                let perms = generators
                    .iter()
                    .map(|g| Permutation::parse(g, degree))
                    .collect::<Result<Vec<_>, _>>()?;
                let g = PermGroup::generate_with_limit(degree, perms, self.max_order)?;
                Ok((text.trim().to_string(), None, g))
            }
        }
    }

    pub fn resolve(&self, text: &str) -> Result<Resolved, CliError> {
        let (label, entry, g) = self.group(text)?;
        Ok(Resolved {
            label,
            entry,
            table: Arc::new(SubgroupClassTable::new(Arc::new(g))),
        })
    }

    pub fn subgroup(&self, g: &Resolved, text: &str) -> Result<Subgroup, CliError> {
        let spec = parse_subgroup_spec(text).map_err(|e| CliError::Input(format!("subgroup {text:?}: {e}")))?;
        subgroup_from_spec(g, &spec)
    }

    pub fn pair(&self, g: &Resolved, h_text: &str) -> Result<SubgroupPair, CliError> {
        let h = self.subgroup(g, h_text)?;
        Ok(SubgroupPair::new(g.table.clone(), h)?)
    }

    pub fn gset(&self, g: &Resolved, text: &str) -> Result<GSetVector, CliError> {
        let spec = parse_gset_spec(text).map_err(|e| CliError::Input(format!("G-set {text:?}: {e}")))?;
        match spec {
            GSetSpec::Multiplicities(m) => Ok(GSetVector::from_multiplicities(g.table.clone(), m)?),
            GSetSpec::Terms(terms) => {
                let mut v = GSetVector::zero(g.table.clone());
                for (k, s) in terms {
                    let sub = subgroup_from_spec(g, &s)?;
                    let class = g.table.class_of(&sub)?;
                    v = v.add(&GSetVector::indicator(g.table.clone(), class)?.scale(k)?)?;
                }
                Ok(v)
            }
        }
    }
}

fn subgroup_from_spec(g: &Resolved, spec: &SubgroupSpec) -> Result<Subgroup, CliError> {
    let group = g.group();
    match spec {
        SubgroupSpec::Whole => Ok(Subgroup::whole(group)),
        SubgroupSpec::Trivial => Ok(Subgroup::trivial(group)),
        SubgroupSpec::Named(name) => {
            let entry = g
                .entry
                .as_ref()
                .ok_or_else(|| CliError::Input(format!("unknown subgroup {name:?}: {} has no named subgroups", g.label)))?;
            match named_subgroup(entry, group, name) {
                Some(s) => Ok(s?),
                None => Err(CliError::Input(format!("unknown subgroup {name:?} of {}", g.label))),
            }
        }
        SubgroupSpec::Generators(gens) => {
            let perms = gens
                .iter()
                .map(|c| Permutation::parse(c, group.degree()))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Subgroup::generated_by_perms(group, &perms)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn session() -> Session {
        Session::new(Catalog::bundled(), 200)
    }

    #[test]
    fn named_and_inline_groups() {
        let s = session();
        assert_eq!(s.resolve("S3").unwrap().group().order(), 6);
        assert_eq!(s.resolve("4:[(1,2,3,4)]").unwrap().group().order(), 4);
        assert_eq!(s.resolve("nope").err().unwrap().exit_code(), 2);
        assert_eq!(Session::new(Catalog::bundled(), 50).resolve("S5").err().unwrap().exit_code(), 3);
    }

    #[test]
    fn subgroups_by_name_and_generators() {
        let s = session();
        let g = s.resolve("S4").unwrap();
        assert_eq!(s.subgroup(&g, "V4").unwrap().order(), 4);
        assert_eq!(s.subgroup(&g, "⟨(1,2,3)⟩").unwrap().order(), 3);
        assert_eq!(s.subgroup(&g, "G").unwrap().order(), 24);
        assert!(s.subgroup(&g, "Klein").is_err());
        let z4 = s.resolve("Z4").unwrap();
        assert_eq!(s.subgroup(&z4, "<(1,2)>").err().unwrap().exit_code(), 2);
        let names = g.class_names();
        assert_eq!(names[g.table.whole_class()], Vec::<String>::new());
        assert!(names.iter().any(|n| n == &vec!["V4".to_string()]));
    }

    #[test]
    fn gsets() {
        let s = session();
        let g = s.resolve("S3").unwrap();
        let v = s.gset(&g, "2*<(1,2)> + e + G").unwrap();
        assert_eq!(v.multiplicities(), &[1, 2, 0, 1]);
        assert_eq!(s.gset(&g, "mult:0,0,1,0").unwrap().multiplicities(), &[0, 0, 1, 0]);
        assert!(s.gset(&g, "mult:1,1").is_err());
    }
}
