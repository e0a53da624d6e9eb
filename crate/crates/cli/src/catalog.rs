//! The group catalog: a small text format naming permutation groups and
//! some of their subgroups.
//!
//! ```text
//! # comment
//! S3: degree 3, gens [(1,2), (1,2,3)]
//!   subgroup T: [(1,2)]
//! ```

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use pullbacklab::perm::{PermGroup, Permutation, Subgroup};

use crate::spec::parse_generator_list;

pub const BUNDLED: &str = include_str!("../data/default_catalog.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedSubgroup {
    pub name: String,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<String>,
    pub subgroups: Vec<NamedSubgroup>,
    /// 1-based line of the header.
    pub line: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct CatalogError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> CatalogError {
    CatalogError {
        line,
        column,
        message: message.into(),
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_' || c == '-')
}

/// Column (1-based, in chars) of byte offset `byte` within `line`.
fn col(line: &str, byte: usize) -> usize {
    line[..byte].chars().count() + 1
}

/// Generators must parse and name points in `1..=degree`.
fn check_generators(
    text: &str,
    line_no: usize,
    line: &str,
    offset: usize,
    degree: usize,
) -> Result<Vec<String>, CatalogError> {
    let gens = parse_generator_list(text).map_err(|e| err(line_no, col(line, offset) + e.column - 1, e.message))?;
    for g in &gens {
        Permutation::parse(g, degree).map_err(|e| err(line_no, col(line, offset), format!("generator {g}: {e}")))?;
    }
    Ok(gens)
}

/// Parses catalog text. Names must be unique within the file and within
/// each entry. Groups are not closed here; see [`build_group`].
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, CatalogError> {
    let mut entries: Vec<CatalogEntry> = Vec::new();
    let mut seen = HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let indented = line.starts_with(char::is_whitespace);
        let body_start = line.len() - line.trim_start().len();
        let body = line.trim_start();
        if indented {
            let Some(rest) = body.strip_prefix("subgroup") else {
                return Err(err(line_no, col(line, body_start), "expected `subgroup NAME: [generators]`"));
            };
            let Some(entry) = entries.last_mut() else {
                return Err(err(line_no, col(line, body_start), "subgroup line before any group"));
            };
            let rest_start = body_start + "subgroup".len();
            let Some((name, gens)) = rest.split_once(':') else {
                return Err(err(line_no, col(line, rest_start), "expected ':' after the subgroup name"));
            };
            let name = name.trim();
            if !valid_name(name) {
                return Err(err(line_no, col(line, rest_start), format!("invalid subgroup name {name:?}")));
            }
            if entry.subgroups.iter().any(|s| s.name == name) {
                return Err(err(line_no, col(line, rest_start), format!("duplicate subgroup name {name:?}")));
            }
            let gens_start = rest_start + rest.find(':').unwrap_or(0) + 1;
            let generators = check_generators(gens, line_no, line, gens_start, entry.degree)?;
            entry.subgroups.push(NamedSubgroup {
                name: name.to_string(),
                generators,
            });
            continue;
        }
        let Some((name, rest)) = line.split_once(':') else {
            return Err(err(line_no, 1, "expected `NAME: degree N, gens [generators]`"));
        };
        let name = name.trim();
        if !valid_name(name) {
            return Err(err(line_no, 1, format!("invalid group name {name:?}")));
        }
        if !seen.insert(name.to_string()) {
            return Err(err(line_no, 1, format!("duplicate group name {name:?}")));
        }
        let rest_start = line.find(':').unwrap_or(0) + 1;
        let trimmed = rest.trim_start();
        let deg_start = rest_start + rest.len() - trimmed.len();
        let Some(after) = trimmed.strip_prefix("degree") else {
            return Err(err(line_no, col(line, deg_start), "expected `degree`"));
        };
        let Some((deg, gens_part)) = after.split_once(',') else {
            return Err(err(line_no, col(line, deg_start), "expected `, gens [...]` after the degree"));
        };
        let num_start = deg_start + "degree".len();
        let degree: usize = deg
            .trim()
            .parse()
            .map_err(|_| err(line_no, col(line, num_start), format!("invalid degree {:?}", deg.trim())))?;
        if degree == 0 {
            return Err(err(line_no, col(line, num_start), "degree must be positive"));
        }
        let gp_start = num_start + deg.len() + 1;
        let gp = gens_part.trim_start();
        let gens_kw = gp_start + gens_part.len() - gp.len();
        let Some(list) = gp.strip_prefix("gens") else {
            return Err(err(line_no, col(line, gens_kw), "expected `gens`"));
        };
        let generators = check_generators(list, line_no, line, gens_kw + "gens".len(), degree)?;
        entries.push(CatalogEntry {
            name: name.to_string(),
            degree,
            generators,
            subgroups: Vec::new(),
            line: line_no,
        });
    }
    Ok(entries)
}

fn perms(gens: &[String], degree: usize) -> Vec<Permutation> {
    gens.iter()
        .map(|g| Permutation::parse(g, degree).expect("validated by parse_catalog"))
        .collect()
}

/// Closes the entry's generators, failing past `max_order` elements.
pub fn build_group(entry: &CatalogEntry, max_order: usize) -> pullbacklab::Result<PermGroup> {
    PermGroup::generate_with_limit(entry.degree, perms(&entry.generators, entry.degree), max_order)
}

/// The named subgroup of `entry`, closed inside `group`.
pub fn named_subgroup(entry: &CatalogEntry, group: &PermGroup, name: &str) -> Option<pullbacklab::Result<Subgroup>> {
    let s = entry.subgroups.iter().find(|s| s.name == name)?;
    Some(Subgroup::generated_by_perms(group, &perms(&s.generators, entry.degree)))
}

/// The bundled entries, optionally overridden or extended by a user file.
#[derive(Clone, Debug)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn bundled() -> Self {
        Catalog {
            entries: parse_catalog(BUNDLED).expect("the bundled catalog parses"),
        }
    }

    pub fn from_entries(entries: Vec<CatalogEntry>) -> Self {
        Catalog { entries }
    }

    /// User entries replace bundled ones of the same name; new names are
    /// appended in file order.
    pub fn with_overrides(mut self, user: Vec<CatalogEntry>) -> Self {
        for e in user {
            match self.entries.iter_mut().find(|b| b.name == e.name) {
                Some(slot) => *slot = e,
                None => self.entries.push(e),
            }
        }
        self
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Every entry closed under `max_order`, in catalog order. Entries over
    /// the cap are skipped.
    pub fn groups_up_to(&self, max_order: usize) -> Vec<(&CatalogEntry, Arc<PermGroup>)> {
        self.entries
            .iter()
            .filter_map(|e| build_group(e, max_order).ok().map(|g| (e, Arc::new(g))))
            .collect()
    }
}

impl fmt::Display for CatalogEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: degree {}, gens [{}]", self.name, self.degree, self.generators.join(", "))?;
        for s in &self.subgroups {
            writeln!(f, "  subgroup {}: [{}]", s.name, s.generators.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_entry() {
        let e = parse_catalog("S3: degree 3, gens [(1,2),(1,2,3)]").unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(build_group(&e[0], 100).unwrap().order(), 6);
    }

    #[test]
    fn malformed_cycle_has_position() {
        let e = parse_catalog("# header\n\nS3: degree 3, gens [(1,2]").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.column > 20, "{e}");
        let e = parse_catalog("X: degree 3, gens [(1,4)]").unwrap_err();
        assert_eq!(e.line, 1);
    }

    #[test]
    fn structural_errors() {
        assert!(parse_catalog("  subgroup T: [(1,2)]").is_err());
        assert!(parse_catalog("S3 degree 3").is_err());
        assert!(parse_catalog("S3: deg 3, gens []").is_err());
        assert!(parse_catalog("S3: degree 0, gens []").is_err());
        assert!(parse_catalog("S3: degree 3 gens []").is_err());
        assert!(parse_catalog("S3: degree 3, gen []").is_err());
        assert!(parse_catalog("A: degree 2, gens []\nA: degree 2, gens []").is_err());
        assert!(parse_catalog("A: degree 2, gens []\n  subgroup T: [(1,2)]\n  subgroup T: []").is_err());
        assert!(parse_catalog("A: degree 2, gens []\n  other").is_err());
        assert!(parse_catalog("1A: degree 2, gens []").is_err());
    }

    #[test]
    fn round_trip_through_display() {
        let text: String = Catalog::bundled().entries().iter().map(|e| e.to_string()).collect();
        let again = parse_catalog(&text).unwrap();
        let lines: Vec<_> = again.iter().map(|e| (e.name.clone(), e.generators.clone(), e.subgroups.clone())).collect();
        let orig: Vec<_> = Catalog::bundled()
            .entries()
            .iter()
            .map(|e| (e.name.clone(), e.generators.clone(), e.subgroups.clone()))
            .collect();
        assert_eq!(lines, orig);
    }

    #[test]
    fn overrides_replace_by_name() {
        let user = parse_catalog("S3: degree 4, gens [(1,2),(1,2,3)]\nNEW: degree 2, gens [(1,2)]").unwrap();
        let c = Catalog::bundled().with_overrides(user);
        assert_eq!(c.get("S3").unwrap().degree, 4);
        assert_eq!(c.entries().last().unwrap().name, "NEW");
    }
}
