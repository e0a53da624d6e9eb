//! The deviation sweep over catalog pairs.

use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use pullbacklab::burnside::{deviation, res_matrix, SubgroupPair};
use pullbacklab::perm::{is_normal, SubgroupClassTable};
use rayon::prelude::*;

use crate::error::CliError;
use crate::report::{Counterexample, Output};
use crate::session::Session;

/// Properties expected of `Δ(G,H)`; returns the names of those that fail.
pub fn deviation_failures(pair: &SubgroupPair) -> pullbacklab::Result<(BigInt, Vec<&'static str>)> {
    let res = res_matrix(pair)?;
    let d = deviation(pair, &res)?.value;
    let index = BigInt::from(pair.index());
    let order = BigInt::from(pair.group().order());
    let mut failed = Vec::new();
    if d.is_one() != pair.is_whole() {
        failed.push("deviation is 1 exactly when H = G");
    }
    if !(&d % &index).is_zero() {
        failed.push("index divides deviation");
    }
    if !(&order % &d).is_zero() {
        failed.push("deviation divides |G|");
    }
    if is_normal(pair.group(), pair.h())? && d != index {
        failed.push("deviation equals the index for normal H");
    }
    Ok((d, failed))
}

/// Every pair `(G, H)` with `H` any subgroup of a catalog group of order at
/// most `max_order` (and the session cap). Results keep catalog and lattice
/// order regardless of `jobs`.
pub fn conjectures(session: &Session, max_order: usize, jobs: Option<usize>) -> Result<Output, CliError> {
    let cap = max_order.min(session.max_order);
    let groups: Vec<(String, Arc<SubgroupClassTable>)> = session
        .catalog
        .groups_up_to(cap)
        .into_iter()
        .map(|(e, g)| (e.name.clone(), Arc::new(SubgroupClassTable::new(g))))
        .collect();
    let work: Vec<(usize, usize)> = groups
        .iter()
        .enumerate()
        .flat_map(|(i, (_, t))| (0..t.subgroups().len()).map(move |s| (i, s)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Internal(e.to_string()))?;
    let results: Vec<pullbacklab::Result<Vec<Counterexample>>> = pool.install(|| {
        work.par_iter()
            .map(|&(i, s)| {
                let (name, table) = &groups[i];
                let h = table.subgroup(s).clone();
                let pair = SubgroupPair::new(table.clone(), h)?;
                let (d, failed) = deviation_failures(&pair)?;
                Ok(failed
                    .into_iter()
                    .map(|f| Counterexample {
                        group: name.clone(),
                        subgroup: pair.h().label(pair.group()),
                        deviation: d.to_string(),
                        index: pair.index(),
                        order: pair.group().order(),
                        failed: f.into(),
                    })
                    .collect())
            })
            .collect()
    });
    let mut counterexamples = Vec::new();
    for r in results {
        counterexamples.extend(r?);
    }
    Ok(Output::Sweep {
        max_order,
        groups: groups.iter().map(|(n, _)| n.clone()).collect(),
        pairs_checked: work.len(),
        counterexamples,
    })
}
