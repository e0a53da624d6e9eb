//! `verify paper-examples`: the worked examples, each replayed from scratch.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use pullbacklab::burnside::{
    derived_subgroups, deviation, ess_inj_witness, gluck_idempotent, inner_product_g, inner_product_h,
    normalizer_weights, res_matrix, unique_v, BurnsideRing, BurnsideVector, IdempotentBasis,
    RationalBurnsideVector, SubgroupPair,
};
use pullbacklab::free_cover::{cover_from_blocks, enumerate_block_covers, census_with_cap};
use pullbacklab::functor::{complements, essentially_injective, essentially_surjective, nullity_zero, Certificate};
use pullbacklab::gset::{pullback, GSetVector};
use pullbacklab::perm::{is_contranormal, is_normal, normal_closure, Permutation, Subgroup, SubgroupClassTable};

use crate::args::Command;
use crate::commands::execute;
use crate::error::CliError;
use crate::report::{CheckReport, Output};
use crate::session::{Resolved, Session};

type CheckResult = Result<(bool, String), CliError>;

fn run(name: &str, f: impl FnOnce() -> CheckResult) -> CheckReport {
    match f() {
        Ok((passed, detail)) => CheckReport {
            name: name.into(),
            passed,
            detail,
        },
        Err(e) => CheckReport {
            name: name.into(),
            passed: false,
            detail: e.to_string(),
        },
    }
}

fn pass() -> CheckResult {
    Ok((true, String::new()))
}

fn expect(ok: bool, detail: impl FnOnce() -> String) -> CheckResult {
    Ok((ok, if ok { String::new() } else { detail() }))
}

fn to_i64(v: &[BigInt]) -> Vec<i64> {
    v.iter().map(|x| i64::try_from(x).unwrap_or(i64::MAX)).collect()
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

struct Ctx<'a> {
    session: &'a Session,
}

impl Ctx<'_> {
    fn g(&self, name: &str) -> Result<Resolved, CliError> {
        self.session.resolve(name)
    }

    fn pair(&self, g: &str, h: &str) -> Result<SubgroupPair, CliError> {
        let g = self.g(g)?;
        self.session.pair(&g, h)
    }

    fn cyclic(&self, k: usize) -> Result<Resolved, CliError> {
        let cycle: Vec<String> = (1..=k).map(|i| i.to_string()).collect();
        self.session.resolve(&format!("{k}:[({})]", cycle.join(",")))
    }

    /// `(Z/p², pZ/p²)` built inline so the family is not tied to catalog names.
    fn prime_square(&self, p: usize) -> Result<SubgroupPair, CliError> {
        let g = self.cyclic(p * p)?;
        let gen = g.group().element(g.group().generator_elements()[0]).pow(p as u64);
        let h = Subgroup::generated_by_perms(g.group(), &[gen])?;
        Ok(SubgroupPair::new(g.table.clone(), h)?)
    }

    /// One pair per subgroup class, for catalog groups of order at most `max`.
    fn catalog_pairs(&self, max: usize) -> Result<Vec<(String, SubgroupPair)>, CliError> {
        let mut out = Vec::new();
        for (e, g) in self.session.catalog.groups_up_to(max.min(self.session.max_order)) {
            let table = Arc::new(SubgroupClassTable::new(g));
            for c in 0..table.len() {
                let h = table.representative(c).clone();
                out.push((e.name.clone(), SubgroupPair::new(table.clone(), h)?));
            }
        }
        Ok(out)
    }
}

fn class_counts(ctx: &Ctx) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for (g, expected) in [("S3", 4), ("A4", 5), ("A4xZ2", 12)] {
        out.push(run(&format!("|SG| = {expected} for {g}"), || {
            let n = ctx.g(g)?.table.len();
            expect(n == expected, || format!("found {n}"))
        }));
    }
    out.push(run("|SG| = |SH| = 5 for A4 over V4", || {
        let p = ctx.pair("A4", "V4")?;
        let (a, b) = (p.table_g().len(), p.table_h().len());
        expect(a == 5 && b == 5, || format!("found ({a}, {b})"))
    }));
    out.push(run("|SH| = 16 for A4xZ2 over H8", || {
        let p = ctx.pair("A4xZ2", "H8")?;
        let n = p.table_h().len();
        expect(n == 16 && p.h().order() == 8, || format!("found {n}"))
    }));
    out
}

fn contranormality(ctx: &Ctx) -> Vec<CheckReport> {
    let mut out = vec![
        run("NC(S3, <(1,2)>) = S3", || {
            let p = ctx.pair("S3", "<(1,2)>")?;
            Ok((normal_closure(p.group(), p.h())?.is_whole(), String::new()))
        }),
        run("<(1,2)> is contranormal in S3", || {
            let p = ctx.pair("S3", "<(1,2)>")?;
            Ok((is_contranormal(p.group(), p.h())?, String::new()))
        }),
        run("every nontrivial proper subgroup of A5 is contranormal", || {
            let g = ctx.g("A5")?;
            for s in g.table.subgroups() {
                if !s.is_trivial() && !s.is_whole() && !is_contranormal(g.group(), s)? {
                    return Ok((false, s.label(g.group())));
                }
            }
            pass()
        }),
        run("a cyclic subgroup of order 3 is contranormal in SL(2,5)", || {
            let p = ctx.pair("SL25", "C3")?;
            expect(p.h().order() == 3 && is_contranormal(p.group(), p.h())?, || "not contranormal".into())
        }),
    ];
    out.push(run("mu(L, L) = 1 for every subgroup of S4", || {
        let g = ctx.g("S4")?;
        for s in g.table.subgroups() {
            if g.table.mobius(s, s)? != 1 {
                return Ok((false, s.label(g.group())));
            }
        }
        pass()
    }));
    out
}

fn pullbacks(ctx: &Ctx) -> Vec<CheckReport> {
    let mut out = Vec::new();
    out.push(run("pulling back {e}\\G along an injection gives [G:H] copies of {e}\\H", || {
        for (name, p) in ctx.catalog_pairs(24)? {
            let v = GSetVector::indicator(p.table_g().clone(), 0)?;
            let w = pullback(p.inclusion(), p.table_h(), &v)?;
            let mut expected = vec![0; p.table_h().len()];
            expected[0] = p.index() as u64;
            if w.multiplicities() != expected.as_slice() {
                return Ok((false, format!("{name} {}", p.h().label(p.group()))));
            }
        }
        pass()
    }));
    out.push(run("pullback columns from S3 to <(1,2)>", || {
        let g = ctx.g("S3")?;
        let p = ctx.session.pair(&g, "<(1,2)>")?;
        let mut cols = Vec::new();
        for c in 0..g.table.len() {
            let w = pullback(p.inclusion(), p.table_h(), &GSetVector::indicator(g.table.clone(), c)?)?;
            cols.push(w.multiplicities().to_vec());
        }
        expect(cols == vec![vec![3, 0], vec![1, 1], vec![1, 0], vec![0, 1]], || format!("{cols:?}"))
    }));
    out.push(run("normal H: H\\G pulls back to [G:H] copies of H\\H", || {
        for (name, p) in ctx.catalog_pairs(24)? {
            if !is_normal(p.group(), p.h())? {
                continue;
            }
            let class = p.table_g().class_of(p.h())?;
            let w = pullback(p.inclusion(), p.table_h(), &GSetVector::indicator(p.table_g().clone(), class)?)?;
            let mut expected = vec![0; p.table_h().len()];
            expected[p.table_h().whole_class()] = p.index() as u64;
            if w.multiplicities() != expected.as_slice() {
                return Ok((false, format!("{name} {}", p.h().label(p.group()))));
            }
        }
        pass()
    }));
    out.push(run("[G\\G] is the multiplicative identity", || {
        for name in ["S3", "A4", "D8"] {
            let g = ctx.g(name)?;
            let ring = BurnsideRing::new(g.table.clone())?;
            let one = BurnsideVector::one(g.table.clone());
            for c in 0..g.table.len() {
                let u = BurnsideVector::basis(g.table.clone(), c)?;
                if ring.multiply(&u, &one)? != u {
                    return Ok((false, format!("{name} class {c}")));
                }
            }
        }
        pass()
    }));
    out
}

fn matrices(ctx: &Ctx) -> Vec<CheckReport> {
    let mut out = vec![run("res from S3 to <(1,2)> is (3,1,1,0)/(0,1,0,1)", || {
        let p = ctx.pair("S3", "<(1,2)>")?;
        let rows: Vec<Vec<i64>> = res_matrix(&p)?.entries().iter().map(|r| to_i64(r)).collect();
        expect(rows == vec![vec![3, 1, 1, 0], vec![0, 1, 0, 1]], || format!("{rows:?}"))
    })];
    for p in [2i64, 3, 5] {
        out.push(run(&format!("res for Z/{}: ((p,0,0),(0,p,1)) with p = {p}", p * p), || {
            let pair = ctx.prime_square(p as usize)?;
            let rows: Vec<Vec<i64>> = res_matrix(&pair)?.entries().iter().map(|r| to_i64(r)).collect();
            expect(rows == vec![vec![p, 0, 0], vec![0, p, 1]], || format!("{rows:?}"))
        }));
    }
    out
}

fn idempotents(ctx: &Ctx) -> Vec<CheckReport> {
    let mut out = vec![run("e^G_G for S3 is (1/2, -1, -1/2, 1)", || {
        let g = ctx.g("S3")?;
        let e = gluck_idempotent(&g.table, g.table.whole_class())?;
        let want = vec![q(1, 2), q(-1, 1), q(-1, 2), q(1, 1)];
        expect(e.coeffs() == want.as_slice(), || format!("{e:?}"))
    })];
    out.push(run("Bouc: res e^G_G = 0 for every proper H", || {
        for (name, p) in ctx.catalog_pairs(24)? {
            if p.is_whole() {
                continue;
            }
            let e = gluck_idempotent(p.table_g(), p.table_g().whole_class())?;
            if !res_matrix(&p)?.apply_rational(&e)?.is_zero() {
                return Ok((false, format!("{name} {}", p.h().label(p.group()))));
            }
        }
        pass()
    }));
    out.push(run("idempotents are orthonormal for both inner products", || {
        for (name, p) in ctx.catalog_pairs(24)? {
            let basis_h = IdempotentBasis::new(p.table_h().clone())?;
            let weights = normalizer_weights(&p);
            let n = p.table_h().len();
            for i in 0..n {
                let ci = basis_h.coordinates(basis_h.idempotent(i))?;
                for j in 0..n {
                    let cj = basis_h.coordinates(basis_h.idempotent(j))?;
                    let ip = inner_product_h(&weights, &ci, &cj)?;
                    let ok = if i == j { ip == BigRational::from_integer(weights[i].into()) } else { ip.is_zero() };
                    if !ok {
                        return Ok((false, format!("{name} H-classes {i},{j}")));
                    }
                }
            }
            let basis_g = IdempotentBasis::new(p.table_g().clone())?;
            for i in 0..p.table_g().len() {
                let c = basis_g.coordinates(basis_g.idempotent(i))?;
                if !inner_product_g(&c, &c)?.is_one() {
                    return Ok((false, format!("{name} G-class {i}")));
                }
            }
        }
        pass()
    }));
    out
}

fn kernel_and_deviation(ctx: &Ctx) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for p in [2usize, 3, 5] {
        out.push(run(&format!("minimal witness for Z/{}: a = (0,1,0), b = (0,0,{p})", p * p), || {
            let pair = ctx.prime_square(p)?;
            let res = res_matrix(&pair)?;
            let w = ess_inj_witness(&pair, &res)?;
            let (a, b) = (to_i64(w.a.coeffs()), to_i64(w.b.coeffs()));
            let ok = a == vec![0, 1, 0] && b == vec![0, 0, p as i64] && w.replay(&res)?;
            expect(ok, || format!("a = {a:?}, b = {b:?}"))
        }));
    }
    out.push(run("normal H: the derived classes are {[H]}", || {
        for (name, p) in ctx.catalog_pairs(24)? {
            if is_normal(p.group(), p.h())? {
                let d = derived_subgroups(&p)?;
                if d != vec![p.table_g().class_of(p.h())?] {
                    return Ok((false, format!("{name} {}", p.h().label(p.group()))));
                }
            }
        }
        pass()
    }));
    out.push(run("normal H: v = [H\\G] / [G:H]", || {
        for (name, p) in ctx.catalog_pairs(24)? {
            if is_normal(p.group(), p.h())? {
                let v = unique_v(&p, &res_matrix(&p)?)?;
                let class = p.table_g().class_of(p.h())?;
                let want = RationalBurnsideVector::basis(p.table_g().clone(), class)?
                    .scale(&BigRational::new(BigInt::one(), BigInt::from(p.index())));
                if v != want {
                    return Ok((false, format!("{name} {}", p.h().label(p.group()))));
                }
            }
        }
        pass()
    }));
    out.push(run("deviation of <(1,2)> in S3 is 3", || {
        let p = ctx.pair("S3", "<(1,2)>")?;
        let d = deviation(&p, &res_matrix(&p)?)?.value;
        expect(d == BigInt::from(3), || d.to_string())
    }));
    out.push(run("normal H: deviation = [G:H]", || {
        for (name, p) in ctx.catalog_pairs(48)? {
            if is_normal(p.group(), p.h())? {
                let d = deviation(&p, &res_matrix(&p)?)?.value;
                if d != BigInt::from(p.index()) {
                    return Ok((false, format!("{name} {}: {d}", p.h().label(p.group()))));
                }
            }
        }
        pass()
    }));
    out
}

fn functor_properties(ctx: &Ctx) -> Vec<CheckReport> {
    let mut out = Vec::new();
    out.push(run("nullity zero for S3 over <(1,2)>", || {
        let p = ctx.pair("S3", "<(1,2)>")?;
        let v = nullity_zero(&p)?;
        Ok((v.verdict && v.replay(&p, &res_matrix(&p)?)?, String::new()))
    }));
    out.push(run("nullity zero for A5 over <(1,2)(3,4)>", || {
        let p = ctx.pair("A5", "<(1,2)(3,4)>")?;
        let v = nullity_zero(&p)?;
        Ok((v.verdict && v.replay(&p, &res_matrix(&p)?)?, String::new()))
    }));
    for p in [2usize, 3, 5] {
        out.push(run(&format!("Z/{} over pZ is not essentially injective", p * p), || {
            let pair = ctx.prime_square(p)?;
            let res = res_matrix(&pair)?;
            let v = essentially_injective(&pair, &res)?;
            let Certificate::Witness(w) = &v.certificate else {
                return Ok((false, "no witness".into()));
            };
            let ok = !v.verdict
                && v.replay(&pair, &res)?
                && to_i64(w.a.coeffs()) == vec![0, 1, 0]
                && to_i64(w.b.coeffs()) == vec![0, 0, p as i64];
            Ok((ok, String::new()))
        }));
        out.push(run(&format!("Z/{} over pZ fails essential surjectivity at K = e", p * p), || {
            let pair = ctx.prime_square(p)?;
            let v = essentially_surjective(&pair)?;
            let ok = matches!(&v.certificate, Certificate::NoLift(k) if k.is_trivial())
                && !v.verdict
                && v.replay(&pair, &res_matrix(&pair)?)?;
            Ok((ok, String::new()))
        }));
    }
    out.push(run("(G, e) and (G, G) are essentially surjective", || {
        for (e, g) in ctx.session.catalog.groups_up_to(ctx.session.max_order) {
            let table = Arc::new(SubgroupClassTable::new(g.clone()));
            for h in [Subgroup::trivial(&g), Subgroup::whole(&g)] {
                let p = SubgroupPair::new(table.clone(), h)?;
                let v = essentially_surjective(&p)?;
                if !v.verdict || !v.replay(&p, &res_matrix(&p)?)? {
                    return Ok((false, e.name.clone()));
                }
            }
        }
        pass()
    }));
    out.push(run("S4 over <(1,2,3)>: essentially surjective, three conjugate non-normal complements", || {
        let p = ctx.pair("S4", "<(1,2,3)>")?;
        let v = essentially_surjective(&p)?;
        let c = complements(&p);
        let classes: Vec<usize> = c.iter().map(|l| p.table_g().class_of(l)).collect::<Result<_, _>>()?;
        let mut ok = v.verdict && v.replay(&p, &res_matrix(&p)?)? && c.len() == 3;
        ok &= classes.iter().all(|&k| k == classes[0]);
        for l in &c {
            ok &= l.order() == 8 && !is_normal(p.group(), l)?;
        }
        expect(ok, || format!("{} complements", c.len()))
    }));
    out.push(run("D8 over the Klein group: no lift at <(1,3)> or <(2,4)>", || {
        let p = ctx.pair("D8", "Klein")?;
        let g = p.group();
        let v = essentially_surjective(&p)?;
        let a = Subgroup::generated_by_perms(g, &[Permutation::parse("(1,3)", 4)?])?;
        let b = Subgroup::generated_by_perms(g, &[Permutation::parse("(2,4)", 4)?])?;
        let ok = !v.verdict
            && v.replay(&p, &res_matrix(&p)?)?
            && matches!(&v.certificate, Certificate::NoLift(k) if *k == a || *k == b);
        // Neither candidate lifts, whichever one the search reports.
        let lifts = |k: &Subgroup| {
            p.table_g()
                .subgroups()
                .iter()
                .any(|l| l.intersection(p.h()) == *k && l.order() * p.h().order() == k.order() * g.order())
        };
        Ok((ok && !lifts(&a) && !lifts(&b), String::new()))
    }));
    out.push(run("complements of the Klein group in D8 are <(1,2)(3,4)> and <(1,4)(2,3)>", || {
        let p = ctx.pair("D8", "Klein")?;
        let mut labels: Vec<String> = complements(&p).iter().map(|l| l.label(p.group())).collect();
        labels.sort();
        expect(labels == ["<(1,2)(3,4)>", "<(1,4)(2,3)>"], || labels.join(" "))
    }));
    out.push(run("Z/2 in (Z/2)^2 has two non-conjugate complements", || {
        let p = ctx.pair("V4", "Z2")?;
        let c = complements(&p);
        let ok = c.len() == 2 && p.table_g().class_of(&c[0])? != p.table_g().class_of(&c[1])?;
        expect(ok, || format!("{} complements", c.len()))
    }));
    out
}

fn free_group(_ctx: &Ctx) -> Vec<CheckReport> {
    vec![
        run("block word A is the trivial cover", || {
            let c = cover_from_blocks(&"A".parse()?);
            Ok((c.n() == 1 && c.sigma_x().is_identity() && c.sigma_y().is_identity(), String::new()))
        }),
        run("block word BAAAA has 6 sheets", || {
            let c = cover_from_blocks(&"BAAAA".parse()?);
            expect(c.n() == 6, || c.n().to_string())
        }),
        run("block-cover stabilizers contain conjugates of x and of xy", || {
            for n in 3..=9 {
                for (seq, c) in enumerate_block_covers(n)? {
                    let has = |core: &str| -> Result<bool, CliError> {
                        for i in 0..n {
                            let word = format!("{}{core}{}", "Y".repeat(i), "y".repeat(i));
                            if c.contains_word(&word)? {
                                return Ok(true);
                            }
                        }
                        Ok(false)
                    };
                    if !has("x")? || !has("xy")? {
                        return Ok((false, seq.to_string()));
                    }
                }
            }
            pass()
        }),
        run("every admissible block cover is contranormal, n <= 12", || {
            for n in 3..=12 {
                for (seq, c) in enumerate_block_covers(n)? {
                    if !c.is_contranormal() {
                        return Ok((false, seq.to_string()));
                    }
                }
            }
            pass()
        }),
        run("at least 2 contranormal subgroups of index 3", || {
            let c = census_with_cap(3, 3)?;
            expect(c.contranormal >= 2, || c.contranormal.to_string())
        }),
    ]
}

fn commands(ctx: &Ctx) -> Vec<CheckReport> {
    vec![
        run("resmat S3 <(1,2)> through the command layer", || {
            let out = execute(
                ctx.session,
                &Command::Resmat {
                    group: "S3".into(),
                    subgroup: "⟨(1,2)⟩".into(),
                },
            )?;
            let Output::ResMatrix { matrix } = out.report.result else {
                return Ok((false, "wrong output kind".into()));
            };
            expect(matrix.rows == [["3", "1", "1", "0"], ["0", "1", "0", "1"]], || format!("{:?}", matrix.rows))
        }),
        run("deviation S3 <(1,2)> through the command layer", || {
            let out = execute(
                ctx.session,
                &Command::Deviation {
                    group: "S3".into(),
                    subgroup: "⟨(1,2)⟩".into(),
                },
            )?;
            let Output::Deviation { value, .. } = out.report.result else {
                return Ok((false, "wrong output kind".into()));
            };
            expect(value == "3", || value)
        }),
    ]
}

/// Every check, in a fixed order.
pub fn paper_examples(session: &Session) -> Vec<CheckReport> {
    let ctx = Ctx { session };
    let groups: [fn(&Ctx) -> Vec<CheckReport>; 9] = [
        class_counts,
        contranormality,
        pullbacks,
        matrices,
        idempotents,
        kernel_and_deviation,
        functor_properties,
        free_group,
        commands,
    ];
    groups.iter().flat_map(|f| f(&ctx)).collect()
}
