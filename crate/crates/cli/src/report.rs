//! Serializable command reports.
//!
//! Integers are written as decimal strings and rationals as
//! `{"num": "...", "den": "..."}` so nothing is lost to floating point.
//! The schema is described in `docs/report-schema.json`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rational {
    pub num: String,
    pub den: String,
}

impl From<&BigRational> for Rational {
    fn from(q: &BigRational) -> Self {
        Rational {
            num: q.numer().to_string(),
            den: q.denom().to_string(),
        }
    }
}

impl Rational {
    pub fn to_big(&self) -> Option<BigRational> {
        let num: BigInt = self.num.parse().ok()?;
        let den: BigInt = self.den.parse().ok()?;
        if den.is_positive() {
            Some(BigRational::new(num, den))
        } else {
            None
        }
    }

    fn text(&self) -> String {
        if self.den == "1" {
            self.num.clone()
        } else {
            format!("{}/{}", self.num, self.den)
        }
    }
}

pub fn int(x: &BigInt) -> String {
    x.to_string()
}

pub fn ints(v: &[BigInt]) -> Vec<String> {
    v.iter().map(int).collect()
}

pub fn rationals(v: &[BigRational]) -> Vec<Rational> {
    v.iter().map(Rational::from).collect()
}

/// A row-major matrix with the subgroup-class label of every row and column.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrix<T> {
    pub row_basis: Vec<String>,
    pub col_basis: Vec<String>,
    pub rows: Vec<Vec<T>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub index: usize,
    /// Canonical generators of the class representative.
    pub label: String,
    pub order: usize,
    /// Number of conjugates.
    pub size: usize,
    /// Catalog names of subgroups in this class.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub names: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum CertificateReport {
    NormalClosure { subgroup: String, order: usize, is_whole: bool },
    WholeGroup,
    Witness { a: Vec<String>, b: Vec<String>, kernel_element: Vec<String> },
    Lifts { lifts: Vec<LiftReport> },
    NoLift { k: String, order: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftReport {
    pub k: String,
    pub l: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockCoverReport {
    pub sequence: String,
    pub sigma_x: String,
    pub sigma_y: String,
    /// 1-based.
    pub basepoint: usize,
    pub contranormal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub group: String,
    pub subgroup: String,
    pub deviation: String,
    pub index: usize,
    pub order: usize,
    pub failed: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupListing {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<String>,
    /// `None` when the group exceeds the order cap.
    pub order: Option<usize>,
    pub subgroups: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Output {
    Lattice {
        group_order: usize,
        subgroup_count: usize,
        classes: Vec<ClassInfo>,
    },
    ResMatrix {
        matrix: Matrix<String>,
    },
    Idempotents {
        /// Row `i` is the idempotent of class `i`, in the class basis.
        matrix: Matrix<Rational>,
    },
    Deviation {
        value: String,
        index: usize,
        invariant_factors: Vec<String>,
        /// The unique `v` in the image of induction over the rationals.
        v: Vec<Rational>,
        basis: Vec<String>,
    },
    Verdict {
        property: String,
        verdict: bool,
        certificate: CertificateReport,
        replayed: bool,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        complements: Vec<String>,
    },
    Pullback {
        input: Vec<u64>,
        input_basis: Vec<String>,
        output: Vec<u64>,
        output_basis: Vec<String>,
        cardinality: u64,
    },
    Blocks {
        n: usize,
        count: String,
        formula: String,
        covers: Vec<BlockCoverReport>,
    },
    Census {
        n: usize,
        total: usize,
        contranormal: usize,
        normal: usize,
        neither: usize,
        conjugacy_classes: usize,
        block_covers: usize,
        block_covers_with_mirror: usize,
    },
    CFormula {
        n: usize,
        value: String,
    },
    Sweep {
        max_order: usize,
        groups: Vec<String>,
        pairs_checked: usize,
        counterexamples: Vec<Counterexample>,
    },
    Verify {
        checks: Vec<CheckReport>,
        passed: usize,
        failed: usize,
    },
    Groups {
        entries: Vec<GroupListing>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub result: Output,
    /// Wall-clock time, present only with `--timing`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Report> {
        serde_json::from_str(text)
    }

    /// CSV of the report's matrix, or `None` for non-matrix results.
    pub fn to_csv(&self) -> Option<String> {
        match &self.result {
            Output::ResMatrix { matrix } => Some(matrix_csv(matrix, |s| s.clone())),
            Output::Idempotents { matrix } => Some(matrix_csv(matrix, Rational::text)),
            _ => None,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.command);
        for (k, v) in &self.inputs {
            let _ = writeln!(out, "  {k}: {v}");
        }
        out.push_str(&self.result.to_text());
        if let Some(ms) = self.elapsed_ms {
            let _ = writeln!(out, "elapsed: {ms} ms");
        }
        out
    }
}

fn matrix_csv<T>(m: &Matrix<T>, cell: impl Fn(&T) -> String) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut header = vec![String::new()];
    header.extend(m.col_basis.iter().cloned());
    w.write_record(&header).expect("in-memory write");
    for (label, row) in m.row_basis.iter().zip(&m.rows) {
        let mut rec = vec![label.clone()];
        rec.extend(row.iter().map(&cell));
        w.write_record(&rec).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

fn table<T>(out: &mut String, m: &Matrix<T>, cell: impl Fn(&T) -> String) {
    let _ = writeln!(out, "columns: {}", m.col_basis.join(" "));
    for (label, row) in m.row_basis.iter().zip(&m.rows) {
        let cells: Vec<String> = row.iter().map(&cell).collect();
        let _ = writeln!(out, "  {label}: [{}]", cells.join(", "));
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
}

impl Output {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            Output::Lattice {
                group_order,
                subgroup_count,
                classes,
            } => {
                let _ = writeln!(
                    out,
                    "order {group_order}, {subgroup_count} subgroups in {} classes",
                    classes.len()
                );
                for c in classes {
                    let names = if c.names.is_empty() {
                        String::new()
                    } else {
                        format!("  ({})", c.names.join(", "))
                    };
                    let _ = writeln!(out, "  [{}] order {} x{} {}{names}", c.index, c.order, c.size, c.label);
                }
            }
            Output::ResMatrix { matrix } => table(&mut out, matrix, |s| s.clone()),
            Output::Idempotents { matrix } => table(&mut out, matrix, Rational::text),
            Output::Deviation {
                value,
                index,
                invariant_factors,
                v,
                ..
            } => {
                let _ = writeln!(out, "deviation {value} (index {index})");
                let _ = writeln!(out, "invariant factors [{}]", invariant_factors.join(", "));
                let v: Vec<String> = v.iter().map(Rational::text).collect();
                let _ = writeln!(out, "v = [{}]", v.join(", "));
            }
            Output::Verdict {
                property,
                verdict,
                certificate,
                replayed,
                complements,
            } => {
                let _ = writeln!(out, "{property}: {verdict}");
                let _ = writeln!(out, "certificate: {}", cert_text(certificate));
                let _ = writeln!(out, "replayed: {replayed}");
                if !complements.is_empty() {
                    let _ = writeln!(out, "complements: {}", complements.join(" "));
                }
            }
            Output::Pullback {
                input,
                output,
                cardinality,
                ..
            } => {
                let _ = writeln!(out, "input  [{}]", join(input));
                let _ = writeln!(out, "output [{}]", join(output));
                let _ = writeln!(out, "cardinality {cardinality}");
            }
            Output::Blocks {
                n,
                count,
                formula,
                covers,
            } => {
                let _ = writeln!(out, "n = {n}: {count} block covers (formula {formula})");
                for c in covers {
                    let _ = writeln!(
                        out,
                        "  {} x={} y={} base={} contranormal={}",
                        c.sequence, c.sigma_x, c.sigma_y, c.basepoint, c.contranormal
                    );
                }
            }
            Output::Census {
                n,
                total,
                contranormal,
                normal,
                neither,
                conjugacy_classes,
                block_covers,
                block_covers_with_mirror,
            } => {
                let _ = writeln!(out, "index {n}: {total} subgroups, {conjugacy_classes} conjugacy classes");
                let _ = writeln!(out, "  normal {normal}, contranormal {contranormal}, neither {neither}");
                let _ = writeln!(
                    out,
                    "  block covers {block_covers}, with mirrors {block_covers_with_mirror}"
                );
            }
            Output::CFormula { n, value } => {
                let _ = writeln!(out, "c({n}) = {value}");
            }
            Output::Sweep {
                max_order,
                groups,
                pairs_checked,
                counterexamples,
            } => {
                let _ = writeln!(
                    out,
                    "{pairs_checked} pairs over {} groups of order <= {max_order}",
                    groups.len()
                );
                let _ = writeln!(out, "{} counterexamples", counterexamples.len());
                for c in counterexamples {
                    let _ = writeln!(out, "  {} {}: {} (deviation {})", c.group, c.subgroup, c.failed, c.deviation);
                }
            }
            Output::Verify { checks, passed, failed } => {
                for c in checks {
                    let status = if c.passed { "PASS" } else { "FAIL" };
                    if c.detail.is_empty() {
                        let _ = writeln!(out, "{status} {}", c.name);
                    } else {
                        let _ = writeln!(out, "{status} {}: {}", c.name, c.detail);
                    }
                }
                let _ = writeln!(out, "{passed} passed, {failed} failed");
            }
            Output::Groups { entries } => {
                for e in entries {
                    let order = e.order.map_or("over cap".to_string(), |o| o.to_string());
                    let _ = writeln!(
                        out,
                        "{}: degree {}, order {order}, subgroups [{}]",
                        e.name,
                        e.degree,
                        e.subgroups.join(", ")
                    );
                }
            }
        }
        out
    }
}

fn cert_text(c: &CertificateReport) -> String {
    match c {
        CertificateReport::NormalClosure { subgroup, order, .. } => format!("normal closure {subgroup} of order {order}"),
        CertificateReport::WholeGroup => "H = G".into(),
        CertificateReport::Witness { a, b, .. } => format!("a = [{}], b = [{}]", a.join(", "), b.join(", ")),
        CertificateReport::Lifts { lifts } => {
            let parts: Vec<String> = lifts.iter().map(|l| format!("{} -> {}", l.k, l.l)).collect();
            format!("lifts {}", parts.join("; "))
        }
        CertificateReport::NoLift { k, .. } => format!("no lift for K = {k}"),
    }
}
