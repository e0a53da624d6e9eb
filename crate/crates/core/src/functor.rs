//! Nullity zero, essential injectivity and essential surjectivity of
//! restriction along `H ≤ G`, each decided with a replayable certificate.

use crate::burnside::{ess_inj_witness, ResMatrix, SubgroupPair, Witness};
use crate::error::{Error, Result};
use crate::gset::{pullback, GSetVector};
use crate::perm::{normal_closure, normal_closure_by_conjugates, Subgroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Property {
    NullityZero,
    EssentiallyInjective,
    EssentiallySurjective,
}

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::NullityZero => "nullity_zero",
            Property::EssentiallyInjective => "essentially_injective",
            Property::EssentiallySurjective => "essentially_surjective",
        }
    }
}

/// `K = L ∩ H` and `G = LH`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lift {
    pub k: Subgroup,
    pub l: Subgroup,
}

#[derive(Clone, Debug)]
pub enum Certificate {
    /// `NC(G, H)`; the verdict is true iff this is `G`.
    NormalClosure(Subgroup),
    /// `H = G`, so restriction is the identity.
    WholeGroup,
    /// Distinct G-sets with equal restrictions.
    Witness(Witness),
    /// One lift per H-class of subgroups of `H`.
    Lifts(Vec<Lift>),
    /// A subgroup `K ≤ H` (seen in `G`) with no lift.
    NoLift(Subgroup),
}

#[derive(Clone, Debug)]
pub struct PairVerdict {
    pub property: Property,
    pub verdict: bool,
    pub certificate: Certificate,
}

fn lifts(pair: &SubgroupPair, k: &Subgroup, l: &Subgroup) -> bool {
    let g = pair.group().order();
    let h = pair.h().order();
    l.intersection(pair.h()) == *k && l.order() * h == k.order() * g
}

impl PairVerdict {
    /// Re-checks the certificate against the definition of the property.
    pub fn replay(&self, pair: &SubgroupPair, res: &ResMatrix) -> Result<bool> {
        let g = pair.group();
        Ok(match (&self.property, &self.certificate) {
            (Property::NullityZero, Certificate::NormalClosure(nc)) => {
                pair.h().is_subgroup_of(nc)
                    && *nc == normal_closure_by_conjugates(g, pair.h())?
                    && self.verdict == nc.is_whole()
            }
            (Property::EssentiallyInjective, Certificate::WholeGroup) => self.verdict && pair.is_whole(),
            (Property::EssentiallyInjective, Certificate::Witness(w)) => !self.verdict && w.replay(res)?,
            (Property::EssentiallySurjective, Certificate::Lifts(list)) => {
                self.verdict
                    && list.len() == pair.table_h().len()
                    && list.iter().all(|lift| lift.k.is_subgroup_of(pair.h()) && lifts(pair, &lift.k, &lift.l))
            }
            (Property::EssentiallySurjective, Certificate::NoLift(k)) => {
                !self.verdict
                    && k.is_subgroup_of(pair.h())
                    && !pair.table_g().subgroups().iter().any(|l| lifts(pair, k, l))
            }
            _ => false,
        })
    }
}

/// Restriction has nullity zero iff `H` is contranormal in `G`.
///
/// The definition is checked as well: only `[G\G]` may pull back to a
/// union of fixed points. Disagreement is an internal error.
pub fn nullity_zero(pair: &SubgroupPair) -> Result<PairVerdict> {
    let g = pair.group();
    let nc = normal_closure(g, pair.h())?;
    let verdict = nc.is_whole();

    let tg = pair.table_g();
    let th = pair.table_h();
    let top_h = th.whole_class();
    let mut definitional = true;
    for class in 0..tg.len() {
        if class == tg.whole_class() {
            continue;
        }
        let v = pullback(pair.inclusion(), th, &GSetVector::indicator(tg.clone(), class)?)?;
        let trivial = v
            .multiplicities()
            .iter()
            .enumerate()
            .all(|(k, &c)| c == 0 || k == top_h);
        if trivial {
            definitional = false;
            break;
        }
    }
    if definitional != verdict {
        return Err(Error::Internal(
            "contranormality disagrees with the pullback definition of nullity zero".into(),
        ));
    }
    Ok(PairVerdict {
        property: Property::NullityZero,
        verdict,
        certificate: Certificate::NormalClosure(nc),
    })
}

/// Restriction is essentially injective iff `H = G`; otherwise a witness
/// pair is returned.
pub fn essentially_injective(pair: &SubgroupPair, res: &ResMatrix) -> Result<PairVerdict> {
    if pair.is_whole() {
        return Ok(PairVerdict {
            property: Property::EssentiallyInjective,
            verdict: true,
            certificate: Certificate::WholeGroup,
        });
    }
    Ok(PairVerdict {
        property: Property::EssentiallyInjective,
        verdict: false,
        certificate: Certificate::Witness(ess_inj_witness(pair, res)?),
    })
}

/// Lifts one representative `K` of each H-class (in SH order) to some
/// `L ≤ G` with `L ∩ H = K` and `G = LH`. Candidates `L` are tried in
/// lattice order.
pub fn essentially_surjective(pair: &SubgroupPair) -> Result<PairVerdict> {
    let th = pair.table_h();
    let mut found = Vec::with_capacity(th.len());
    for class in th.classes() {
        let k = pair.to_g(class.representative).clone();
        match pair.table_g().subgroups().iter().find(|l| lifts(pair, &k, l)) {
            Some(l) => found.push(Lift { k, l: l.clone() }),
            None => {
                return Ok(PairVerdict {
                    property: Property::EssentiallySurjective,
                    verdict: false,
                    certificate: Certificate::NoLift(k),
                })
            }
        }
    }
    Ok(PairVerdict {
        property: Property::EssentiallySurjective,
        verdict: true,
        certificate: Certificate::Lifts(found),
    })
}

/// All `L ≤ G` with `L ∩ H = {e}` and `G = LH`, in lattice order.
pub fn complements(pair: &SubgroupPair) -> Vec<Subgroup> {
    let g = pair.group().order();
    let h = pair.h().order();
    pair.table_g()
        .subgroups()
        .iter()
        .filter(|l| l.order() * h == g && l.intersection(pair.h()).is_trivial())
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burnside::res_matrix;
    use crate::perm::{is_normal, PermGroup, Permutation, SubgroupClassTable};
    use std::sync::Arc;

    fn pair(degree: usize, gens: &[&str], sub: &[&str]) -> SubgroupPair {
        let gens = gens.iter().map(|c| Permutation::parse(c, degree).unwrap()).collect();
        let g = Arc::new(PermGroup::generate(degree, gens).unwrap());
        let perms: Vec<Permutation> = sub.iter().map(|c| Permutation::parse(c, degree).unwrap()).collect();
        let h = Subgroup::generated_by_perms(&g, &perms).unwrap();
        SubgroupPair::new(Arc::new(SubgroupClassTable::new(g)), h).unwrap()
    }

    #[test]
    fn nullity_in_small_groups() {
        let p = pair(3, &["(1,2)", "(1,2,3)"], &["(1,2)"]);
        let v = nullity_zero(&p).unwrap();
        assert!(v.verdict);
        assert!(v.replay(&p, &res_matrix(&p).unwrap()).unwrap());
        let z4 = pair(4, &["(1,2,3,4)"], &["(1,3)(2,4)"]);
        let v = nullity_zero(&z4).unwrap();
        assert!(!v.verdict);
        match &v.certificate {
            Certificate::NormalClosure(nc) => assert_eq!(nc, z4.h()),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn injectivity_verdicts() {
        let p = pair(3, &["(1,2)", "(1,2,3)"], &["(1,2)"]);
        let res = res_matrix(&p).unwrap();
        let v = essentially_injective(&p, &res).unwrap();
        assert!(!v.verdict);
        assert!(v.replay(&p, &res).unwrap());
        let whole = pair(3, &["(1,2)", "(1,2,3)"], &["(1,2)", "(1,2,3)"]);
        let res = res_matrix(&whole).unwrap();
        assert!(essentially_injective(&whole, &res).unwrap().verdict);
    }

    #[test]
    fn s4_over_a_three_cycle() {
        let p = pair(4, &["(1,2)", "(1,2,3,4)"], &["(1,2,3)"]);
        let res = res_matrix(&p).unwrap();
        let v = essentially_surjective(&p).unwrap();
        assert!(v.verdict);
        assert!(v.replay(&p, &res).unwrap());
        let c = complements(&p);
        assert_eq!(c.len(), 3);
        for l in &c {
            assert_eq!(l.order(), 8);
            assert!(!is_normal(p.group(), l).unwrap());
            assert_eq!(p.table_g().class_of(l).unwrap(), p.table_g().class_of(&c[0]).unwrap());
        }
    }

    #[test]
    fn dihedral_over_klein() {
        let p = pair(4, &["(1,2,3,4)", "(1,3)"], &["(1,3)", "(2,4)"]);
        let res = res_matrix(&p).unwrap();
        let v = essentially_surjective(&p).unwrap();
        assert!(!v.verdict);
        assert!(v.replay(&p, &res).unwrap());
        let Certificate::NoLift(k) = &v.certificate else { panic!() };
        let g = p.group();
        let a = Subgroup::generated_by_perms(g, &[Permutation::parse("(1,3)", 4).unwrap()]).unwrap();
        let b = Subgroup::generated_by_perms(g, &[Permutation::parse("(2,4)", 4).unwrap()]).unwrap();
        assert!(*k == a || *k == b);
        let labels: Vec<String> = complements(&p).iter().map(|l| l.label(g)).collect();
        assert_eq!(labels.len(), 2);
        assert!(labels.contains(&"<(1,2)(3,4)>".to_string()));
        assert!(labels.contains(&"<(1,4)(2,3)>".to_string()));
    }
}
