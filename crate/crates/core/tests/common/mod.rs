#![allow(dead_code)]

use std::sync::Arc;

use pullbacklab::burnside::SubgroupPair;
use pullbacklab::perm::{PermGroup, Permutation, Subgroup, SubgroupClassTable};

pub const SL25_S: &str = "(1,5,4,20)(2,10,3,15)(6,9,24,21)(7,14,23,16)(8,19,22,11)(12,13,18,17)";
pub const SL25_T: &str = "(5,6,7,8,9)(10,12,14,11,13)(15,18,16,19,17)(20,24,23,22,21)";

/// `(name, degree, generators)` for the small groups used throughout.
pub const SMALL: &[(&str, usize, &[&str])] = &[
    ("S3", 3, &["(1,2)", "(1,2,3)"]),
    ("Z4", 4, &["(1,2,3,4)"]),
    ("V4", 4, &["(1,2)(3,4)", "(1,3)(2,4)"]),
    ("D8", 4, &["(1,2,3,4)", "(1,3)"]),
    ("Z9", 9, &["(1,2,3,4,5,6,7,8,9)"]),
    ("D6", 3, &["(1,2,3)", "(2,3)"]),
    ("D10", 5, &["(1,2,3,4,5)", "(2,5)(3,4)"]),
    ("A4", 4, &["(1,2,3)", "(2,3,4)"]),
    ("D14", 7, &["(1,2,3,4,5,6,7)", "(2,7)(3,6)(4,5)"]),
    ("S4", 4, &["(1,2)", "(1,2,3,4)"]),
    ("A4xZ2", 6, &["(1,2,3)", "(2,3,4)", "(5,6)"]),
    (
        "Z25",
        25,
        &["(1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23,24,25)"],
    ),
];

pub fn perm(text: &str, degree: usize) -> Permutation {
    Permutation::parse(text, degree).unwrap()
}

pub fn group(degree: usize, gens: &[&str]) -> Arc<PermGroup> {
    Arc::new(PermGroup::generate(degree, gens.iter().map(|g| perm(g, degree)).collect()).unwrap())
}

pub fn named(name: &str) -> Arc<PermGroup> {
    match name {
        "A5" => group(5, &["(1,2,3,4,5)", "(1,2,3)"]),
        "S5" => group(5, &["(1,2)", "(1,2,3,4,5)"]),
        "SL25" => group(24, &[SL25_S, SL25_T]),
        _ => {
            let (_, d, g) = SMALL.iter().find(|(n, _, _)| *n == name).expect("known group");
            group(*d, g)
        }
    }
}

pub fn table(name: &str) -> Arc<SubgroupClassTable> {
    Arc::new(SubgroupClassTable::new(named(name)))
}

pub fn sub(g: &PermGroup, gens: &[&str]) -> Subgroup {
    let perms: Vec<Permutation> = gens.iter().map(|c| perm(c, g.degree())).collect();
    Subgroup::generated_by_perms(g, &perms).unwrap()
}

/// One pair per class representative of `table`.
pub fn all_pairs(table: &Arc<SubgroupClassTable>) -> Vec<SubgroupPair> {
    (0..table.len())
        .map(|c| SubgroupPair::new(table.clone(), table.representative(c).clone()).unwrap())
        .collect()
}

/// Names of the small groups of order at most `max`.
pub fn small_up_to(max: usize) -> Vec<&'static str> {
    SMALL
        .iter()
        .map(|(n, _, _)| *n)
        .filter(|n| named(n).order() <= max)
        .collect()
}
