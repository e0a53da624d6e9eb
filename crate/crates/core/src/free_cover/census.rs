use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::free_cover::{enumerate_block_covers, CoverPair};

/// Largest index [`enumerate_index_n`] accepts unless overridden.
pub const DEFAULT_CENSUS_CAP: usize = 7;

/// `PULLBACKLAB_CENSUS_CAP`, falling back to [`DEFAULT_CENSUS_CAP`].
pub fn census_cap_from_env() -> usize {
    std::env::var("PULLBACKLAB_CENSUS_CAP")
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&v| v > 0)
        .unwrap_or(DEFAULT_CENSUS_CAP)
}

const UNDEF: u32 = u32::MAX;
/// Columns `x, X, y, Y`; `c ^ 1` is the inverse column.
const COLS: usize = 4;

struct Search {
    n: usize,
    table: Vec<[u32; COLS]>,
    defined: usize,
    out: Vec<CoverPair>,
}

impl Search {
    fn first_gap(&self) -> Option<(usize, usize)> {
        (0..self.defined)
            .flat_map(|p| (0..COLS).map(move |c| (p, c)))
            .find(|&(p, c)| self.table[p][c] == UNDEF)
    }

    fn run(&mut self) {
        let Some((p, c)) = self.first_gap() else {
            if self.defined == self.n {
                let x = self.table.iter().map(|r| r[0] as usize).collect();
                let y = self.table.iter().map(|r| r[2] as usize).collect();
                self.out.push(CoverPair::from_images_unchecked(x, y, 0));
            }
            return;
        };
        let inv = c ^ 1;
        for q in 0..self.defined {
            if self.table[q][inv] == UNDEF {
                self.table[p][c] = q as u32;
                self.table[q][inv] = p as u32;
                self.run();
                self.table[p][c] = UNDEF;
                self.table[q][inv] = UNDEF;
            }
        }
        if self.defined < self.n {
            let q = self.defined;
            self.defined += 1;
            self.table[p][c] = q as u32;
            self.table[q][inv] = p as u32;
            self.run();
            self.table[p][c] = UNDEF;
            self.table[q][inv] = UNDEF;
            self.defined -= 1;
        }
    }
}

/// All subgroups of index `n` in `F₂`, one [`CoverPair`] each, with
/// basepoint `0`.
///
/// A coset table is filled at its first empty slot, either with an
/// existing coset whose inverse slot is free or with the next new coset.
/// New cosets are numbered in order of first appearance, so every output is
/// in canonical form and none repeats.
pub fn enumerate_index_n_with_cap(n: usize, cap: usize) -> Result<Vec<CoverPair>> {
    if n == 0 || n > cap {
        return Err(Error::IndexOutOfRange { n, min: 1, max: cap });
    }
    let mut search = Search {
        n,
        table: vec![[UNDEF; COLS]; n],
        defined: 1,
        out: Vec::new(),
    };
    search.run();
    Ok(search.out)
}

/// [`enumerate_index_n_with_cap`] with the cap from [`census_cap_from_env`].
pub fn enumerate_index_n(n: usize) -> Result<Vec<CoverPair>> {
    enumerate_index_n_with_cap(n, census_cap_from_env())
}

/// Counts over the subgroups of one index.
///
/// The buckets `contranormal`, `normal` and `neither` partition `total`.
/// For `n = 1` the only subgroup is `F₂` itself, which is counted as normal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub n: usize,
    pub total: usize,
    pub contranormal: usize,
    pub normal: usize,
    pub neither: usize,
    /// Classes up to conjugacy in `F₂`.
    pub conjugacy_classes: usize,
    /// Block covers of this index (`0` below index 3).
    pub block_covers: usize,
    /// Block covers together with their `x ↔ y` mirrors, deduplicated.
    pub block_covers_with_mirror: usize,
}

pub fn census_with_cap(n: usize, cap: usize) -> Result<Census> {
    let all = enumerate_index_n_with_cap(n, cap)?;
    let (mut contranormal, mut normal, mut neither) = (0, 0, 0);
    for c in &all {
        if c.is_normal() {
            normal += 1;
        } else if c.is_contranormal() {
            contranormal += 1;
        } else {
            neither += 1;
        }
    }
    let conjugacy_classes = all.iter().map(CoverPair::conjugacy_form).collect::<HashSet<_>>().len();
    let (block_covers, block_covers_with_mirror) = if n >= 3 {
        let blocks = enumerate_block_covers(n)?;
        let mut forms: HashSet<_> = blocks.iter().map(|(_, c)| c.canonical_form()).collect();
        forms.extend(blocks.iter().map(|(_, c)| c.mirror().canonical_form()));
        (blocks.len(), forms.len())
    } else {
        (0, 0)
    };
    Ok(Census {
        n,
        total: all.len(),
        contranormal,
        normal,
        neither,
        conjugacy_classes,
        block_covers,
        block_covers_with_mirror,
    })
}

/// [`census_with_cap`] with the cap from [`census_cap_from_env`].
pub fn census(n: usize) -> Result<Census> {
    census_with_cap(n, census_cap_from_env())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_indices() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_index_n(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 3, 13, 71, 461]);
        assert!(enumerate_index_n(0).is_err());
        assert!(enumerate_index_n_with_cap(4, 3).is_err());
    }

    #[test]
    fn outputs_are_canonical_and_distinct() {
        let all = enumerate_index_n(4).unwrap();
        let forms: HashSet<_> = all.iter().map(CoverPair::canonical_form).collect();
        assert_eq!(forms.len(), all.len());
        for c in &all {
            assert!(c.is_transitive());
            let (x, y) = c.canonical_form();
            let own: Vec<u32> = c.sigma_x().images().map(|p| p as u32).collect();
            assert_eq!(x, own);
            assert_eq!(y, c.sigma_y().images().map(|p| p as u32).collect::<Vec<_>>());
        }
    }

    #[test]
    fn census_two_and_three() {
        let c2 = census(2).unwrap();
        assert_eq!((c2.total, c2.contranormal, c2.normal, c2.neither), (3, 0, 3, 0));
        let c3 = census(3).unwrap();
        assert_eq!(c3.total, c3.contranormal + c3.normal + c3.neither);
        assert!(c3.contranormal >= 2);
        assert_eq!(c3.block_covers, 3);
        let c1 = census(1).unwrap();
        assert_eq!((c1.total, c1.normal), (1, 1));
    }

    #[test]
    fn block_covers_appear_in_the_enumeration() {
        for n in 3..=6 {
            let all: HashSet<_> = enumerate_index_n(n).unwrap().iter().map(CoverPair::canonical_form).collect();
            for (seq, c) in enumerate_block_covers(n).unwrap() {
                assert!(all.contains(&c.canonical_form()), "{seq}");
                assert!(all.contains(&c.mirror().canonical_form()), "{seq} mirrored");
            }
        }
    }
}
