use std::collections::BTreeMap;

use pullbacklab::burnside::{deviation, res_matrix, unique_v, IdempotentBasis};
use pullbacklab::free_cover::{block_cover_count, c_formula, census_cap_from_env, census_with_cap, enumerate_block_covers};
use pullbacklab::functor::{
    complements, essentially_injective, essentially_surjective, nullity_zero, Certificate, PairVerdict,
};
use pullbacklab::gset::pullback;
use pullbacklab::perm::PermGroup;

use crate::args::{Command, F2Command, SweepCommand, VerifyCommand};
use crate::catalog::build_group;
use crate::error::CliError;
use crate::report::{
    int, ints, rationals, BlockCoverReport, CertificateReport, GroupListing, LiftReport, Matrix, Output, Rational,
    Report,
};
use crate::session::{class_labels, h_basis_labels, Session};
use crate::{sweep, verify};

/// A finished command. `failed` marks a verification failure (exit code 1)
/// that still produced a report.
#[derive(Debug)]
pub struct Outcome {
    pub report: Report,
    pub failed: bool,
}

fn inputs(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.to_string())).collect()
}

fn ok(command: &str, inputs: BTreeMap<String, String>, result: Output) -> Outcome {
    Outcome {
        report: Report {
            command: command.into(),
            inputs,
            result,
            elapsed_ms: None,
        },
        failed: false,
    }
}

pub fn certificate_report(group: &PermGroup, c: &Certificate) -> CertificateReport {
    match c {
        Certificate::NormalClosure(nc) => CertificateReport::NormalClosure {
            subgroup: nc.label(group),
            order: nc.order(),
            is_whole: nc.is_whole(),
        },
        Certificate::WholeGroup => CertificateReport::WholeGroup,
        Certificate::Witness(w) => CertificateReport::Witness {
            a: ints(w.a.coeffs()),
            b: ints(w.b.coeffs()),
            kernel_element: ints(w.kernel_element.coeffs()),
        },
        Certificate::Lifts(lifts) => CertificateReport::Lifts {
            lifts: lifts
                .iter()
                .map(|l| LiftReport {
                    k: l.k.label(group),
                    l: l.l.label(group),
                })
                .collect(),
        },
        Certificate::NoLift(k) => CertificateReport::NoLift {
            k: k.label(group),
            order: k.order(),
        },
    }
}

pub fn execute(session: &Session, command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Groups => {
            let entries = session
                .catalog
                .entries()
                .iter()
                .map(|e| GroupListing {
                    name: e.name.clone(),
                    degree: e.degree,
                    generators: e.generators.clone(),
                    order: build_group(e, session.max_order).ok().map(|g| g.order()),
                    subgroups: e.subgroups.iter().map(|s| s.name.clone()).collect(),
                })
                .collect();
            Ok(ok("groups", BTreeMap::new(), Output::Groups { entries }))
        }
        Command::Lattice { group } => {
            let g = session.resolve(group)?;
            Ok(ok(
                "lattice",
                inputs(&[("G", &g.label)]),
                Output::Lattice {
                    group_order: g.group().order(),
                    subgroup_count: g.table.subgroups().len(),
                    classes: g.class_infos(),
                },
            ))
        }
        Command::Resmat { group, subgroup } => {
            let g = session.resolve(group)?;
            let pair = session.pair(&g, subgroup)?;
            let res = res_matrix(&pair)?;
            let matrix = Matrix {
                row_basis: h_basis_labels(&pair),
                col_basis: g.basis_labels(),
                rows: res.entries().iter().map(|r| ints(r)).collect(),
            };
            Ok(ok(
                "resmat",
                inputs(&[("G", &g.label), ("H", &pair.h().label(g.group()))]),
                Output::ResMatrix { matrix },
            ))
        }
        Command::Idempotents { group } => {
            let g = session.resolve(group)?;
            let basis = IdempotentBasis::new(g.table.clone())?;
            let labels = g.basis_labels();
            let matrix = Matrix {
                row_basis: labels.iter().map(|l| format!("e_{l}")).collect(),
                col_basis: labels,
                rows: basis.vectors().iter().map(|v| rationals(v.coeffs())).collect(),
            };
            Ok(ok(
                "idempotents",
                inputs(&[("G", &g.label)]),
                Output::Idempotents { matrix },
            ))
        }
        Command::Deviation { group, subgroup } => {
            let g = session.resolve(group)?;
            let pair = session.pair(&g, subgroup)?;
            let res = res_matrix(&pair)?;
            let d = deviation(&pair, &res)?;
            let v = unique_v(&pair, &res)?;
            Ok(ok(
                "deviation",
                inputs(&[("G", &g.label), ("H", &pair.h().label(g.group()))]),
                Output::Deviation {
                    value: int(&d.value),
                    index: pair.index(),
                    invariant_factors: ints(&d.invariant_factors),
                    v: v.coeffs().iter().map(Rational::from).collect(),
                    basis: class_labels(v.table()),
                },
            ))
        }
        Command::Nullity { group, subgroup }
        | Command::Essinj { group, subgroup }
        | Command::Esssurj { group, subgroup } => {
            let g = session.resolve(group)?;
            let pair = session.pair(&g, subgroup)?;
            let res = res_matrix(&pair)?;
            let (name, verdict): (&str, PairVerdict) = match command {
                Command::Nullity { .. } => ("nullity", nullity_zero(&pair)?),
                Command::Essinj { .. } => ("essinj", essentially_injective(&pair, &res)?),
                _ => ("esssurj", essentially_surjective(&pair)?),
            };
            let replayed = verdict.replay(&pair, &res)?;
            let complements = if matches!(command, Command::Esssurj { .. }) {
                complements(&pair).iter().map(|l| l.label(g.group())).collect()
            } else {
                Vec::new()
            };
            let mut out = ok(
                name,
                inputs(&[("G", &g.label), ("H", &pair.h().label(g.group()))]),
                Output::Verdict {
                    property: verdict.property.name().into(),
                    verdict: verdict.verdict,
                    certificate: certificate_report(g.group(), &verdict.certificate),
                    replayed,
                    complements,
                },
            );
            out.failed = !replayed;
            Ok(out)
        }
        Command::Pullback { group, subgroup, gset } => {
            let g = session.resolve(group)?;
            let pair = session.pair(&g, subgroup)?;
            let v = session.gset(&g, gset)?;
            let w = pullback(pair.inclusion(), pair.table_h(), &v)?;
            let cardinality = w.cardinality()?;
            if cardinality != v.cardinality()? {
                return Err(CliError::Internal("pullback changed the cardinality".into()));
            }
            Ok(ok(
                "pullback",
                inputs(&[("G", &g.label), ("H", &pair.h().label(g.group())), ("gset", gset)]),
                Output::Pullback {
                    input: v.multiplicities().to_vec(),
                    input_basis: g.basis_labels(),
                    output: w.multiplicities().to_vec(),
                    output_basis: h_basis_labels(&pair),
                    cardinality,
                },
            ))
        }
        Command::F2 { command } => f2(command),
        Command::Sweep {
            command: SweepCommand::Conjectures { max_order, jobs },
        } => {
            let result = sweep::conjectures(session, *max_order, *jobs)?;
            let failed = matches!(&result, Output::Sweep { counterexamples, .. } if !counterexamples.is_empty());
            let mut out = ok(
                "sweep conjectures",
                inputs(&[("max_order", &max_order.to_string())]),
                result,
            );
            out.failed = failed;
            Ok(out)
        }
        Command::Verify {
            command: VerifyCommand::PaperExamples,
        } => {
            let checks = verify::paper_examples(session);
            let failed = checks.iter().filter(|c| !c.passed).count();
            let mut out = ok(
                "verify paper-examples",
                BTreeMap::new(),
                Output::Verify {
                    passed: checks.len() - failed,
                    failed,
                    checks,
                },
            );
            out.failed = failed > 0;
            Ok(out)
        }
    }
}

fn f2(command: &F2Command) -> Result<Outcome, CliError> {
    match command {
        F2Command::Blocks { n } => {
            let covers = enumerate_block_covers(*n)?
                .into_iter()
                .map(|(seq, c)| BlockCoverReport {
                    sequence: seq.to_string(),
                    sigma_x: c.sigma_x().to_string(),
                    sigma_y: c.sigma_y().to_string(),
                    basepoint: c.basepoint() + 1,
                    contranormal: c.is_contranormal(),
                })
                .collect();
            Ok(ok(
                "f2 blocks",
                inputs(&[("n", &n.to_string())]),
                Output::Blocks {
                    n: *n,
                    count: block_cover_count(*n).to_string(),
                    formula: c_formula(*n)?.to_string(),
                    covers,
                },
            ))
        }
        F2Command::Census { n, cap } => {
            let c = census_with_cap(*n, cap.unwrap_or_else(census_cap_from_env))?;
            Ok(ok(
                "f2 census",
                inputs(&[("n", &n.to_string())]),
                Output::Census {
                    n: c.n,
                    total: c.total,
                    contranormal: c.contranormal,
                    normal: c.normal,
                    neither: c.neither,
                    conjugacy_classes: c.conjugacy_classes,
                    block_covers: c.block_covers,
                    block_covers_with_mirror: c.block_covers_with_mirror,
                },
            ))
        }
        F2Command::Cformula { n } => Ok(ok(
            "f2 cformula",
            inputs(&[("n", &n.to_string())]),
            Output::CFormula {
                n: *n,
                value: c_formula(*n)?.to_string(),
            },
        )),
    }
}
