//! The full analysis of one intersection array, in machine- and
//! human-readable form.

use std::fmt::Write as _;

use drg_core::feasibility::{CheckStatus, FeasibilityReport};
use drg_core::harness::{
    classify_theorem3, verify_on_scheme, IdentityCheck, Outcome, TwiceQReport,
};
use drg_core::structures::{
    imprimitivity, p_structures, q_structures, schur_idempotent_pairs, suzuki_types, DualFlags,
    QStructure, RecurrenceFit,
};
use drg_core::{IntersectionArray, Scheme};
use serde::{Deserialize, Serialize};

use crate::exact::ExactValue;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    /// `pass`, `fail` or `skipped`.
    pub status: String,
    pub detail: Option<String>,
}

impl CheckRecord {
    pub fn new(name: &str, status: &CheckStatus) -> Self {
        let (status, detail) = match status {
            CheckStatus::Pass => ("pass", None),
            CheckStatus::Fail(d) => ("fail", Some(d.clone())),
            CheckStatus::Skipped(d) => ("skipped", Some(d.clone())),
        };
        CheckRecord {
            name: name.into(),
            status: status.into(),
            detail,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenvalueRecord {
    pub index: usize,
    pub value: ExactValue,
    pub multiplicity: ExactValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecurrenceRecord {
    pub p: ExactValue,
    pub r: ExactValue,
    pub r_star: ExactValue,
    pub s_star: ExactValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QStructureRecord {
    /// Natural indices of `E_0, …, E_d` in this structure.
    pub ordering: Vec<usize>,
    pub a_star: Vec<ExactValue>,
    pub b_star: Vec<ExactValue>,
    pub c_star: Vec<ExactValue>,
    pub dual_bipartite: bool,
    pub dual_antipodal: bool,
    pub almost_dual_bipartite: bool,
    pub almost_dual_antipodal: bool,
    pub recurrence: Option<RecurrenceRecord>,
    /// Types of the classification of second structures matched relative
    /// to the first structure (empty for the first one).
    pub types_relative_to_first: Vec<String>,
}

impl QStructureRecord {
    fn new(qs: &QStructure, first: Option<&QStructure>) -> Self {
        let values =
            |v: &[drg_core::algebra::FieldElem]| v.iter().map(ExactValue::from_elem).collect();
        let flags = DualFlags::of(qs);
        QStructureRecord {
            ordering: qs.ordering.clone(),
            a_star: values(&qs.a_star),
            b_star: values(&qs.b_star),
            c_star: values(&qs.c_star),
            dual_bipartite: flags.dual_bipartite,
            dual_antipodal: flags.dual_antipodal,
            almost_dual_bipartite: flags.almost_dual_bipartite,
            almost_dual_antipodal: flags.almost_dual_antipodal,
            recurrence: match &qs.recurrence {
                Some(RecurrenceFit::Fit {
                    p,
                    r,
                    r_star,
                    s_star,
                }) => Some(RecurrenceRecord {
                    p: ExactValue::from_elem(p),
                    r: ExactValue::from_elem(r),
                    r_star: ExactValue::from_elem(r_star),
                    s_star: ExactValue::from_elem(s_star),
                }),
                _ => None,
            },
            types_relative_to_first: first
                .map(|f| {
                    suzuki_types(f, qs)
                        .iter()
                        .map(ToString::to_string)
                        .collect()
                })
                .unwrap_or_default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub bipartite: bool,
    pub antipodal: bool,
    pub tight: bool,
    /// `(i, j, h)` with `E_i ∘ E_j` a multiple of `E_h` (natural labels).
    pub schur_pairs: Vec<[usize; 3]>,
    /// Schur-closed idempotent sets in natural labels.
    pub schur_closed_subsets: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityRecord {
    pub name: String,
    pub statement: String,
    /// `holds`, `fails` or `not_applicable`.
    pub outcome: String,
    pub residual: Option<ExactValue>,
    pub note: Option<String>,
}

impl From<&IdentityCheck> for IdentityRecord {
    fn from(c: &IdentityCheck) -> Self {
        let (outcome, residual, note) = match &c.outcome {
            Outcome::Holds => ("holds", None, None),
            Outcome::Fails { residual } => {
                ("fails", Some(ExactValue::from_algebraic(residual)), None)
            }
            Outcome::NotApplicable(why) => ("not_applicable", None, Some(why.clone())),
        };
        IdentityRecord {
            name: c.name.into(),
            statement: c.statement.into(),
            outcome: outcome.into(),
            residual,
            note,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwiceQRecord {
    pub applicable: bool,
    pub hypothesis_failures: Vec<String>,
    pub checks: Vec<IdentityRecord>,
}

impl From<&TwiceQReport> for TwiceQRecord {
    fn from(r: &TwiceQReport) -> Self {
        TwiceQRecord {
            applicable: r.applicable(),
            hypothesis_failures: r
                .hypothesis_failures
                .iter()
                .map(ToString::to_string)
                .collect(),
            checks: r.checks.iter().map(IdentityRecord::from).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListRecord {
    /// Matched cases of the list of twice Q-polynomial graphs of diameter
    /// at least four; empty when not in the list.
    pub cases: Vec<String>,
    pub precondition_failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub array: String,
    pub diameter: usize,
    pub vertices: String,
    pub valencies: Vec<String>,
    pub feasible: bool,
    pub checks: Vec<CheckRecord>,
    pub error: Option<String>,
    pub spectrum: Vec<EigenvalueRecord>,
    pub p_structures: Vec<Vec<usize>>,
    pub q_structures: Vec<QStructureRecord>,
    pub classification: Option<ClassificationRecord>,
    pub twice_q: Option<TwiceQRecord>,
    pub twice_q_list: ListRecord,
}

impl AnalysisReport {
    pub fn q_structure_count(&self) -> usize {
        self.q_structures.len()
    }

    /// Runs the whole pipeline on `arr`.
    pub fn analyze(arr: &IntersectionArray) -> Self {
        let twice_q_list = match classify_theorem3(arr) {
            Ok(cases) => ListRecord {
                cases: cases.iter().map(ToString::to_string).collect(),
                precondition_failure: None,
            },
            Err(e) => ListRecord {
                cases: Vec::new(),
                precondition_failure: Some(e.to_string()),
            },
        };
        let mut report = AnalysisReport {
            array: arr.to_string(),
            diameter: arr.diameter(),
            vertices: arr.vertex_count().to_string(),
            valencies: arr.valencies().iter().map(ToString::to_string).collect(),
            feasible: false,
            checks: Vec::new(),
            error: None,
            spectrum: Vec::new(),
            p_structures: Vec::new(),
            q_structures: Vec::new(),
            classification: None,
            twice_q: None,
            twice_q_list,
        };
        let scheme = match Scheme::new(arr) {
            Ok(s) => s,
            Err(e) => {
                let feas = drg_core::feasibility_report(arr);
                report.checks = feas
                    .checks
                    .iter()
                    .map(|c| CheckRecord::new(c.name, &c.status))
                    .collect();
                report.error = Some(e.to_string());
                return report;
            }
        };
        let feas = FeasibilityReport::for_scheme(&scheme);
        report.feasible = feas.is_feasible();
        report.checks = feas
            .checks
            .iter()
            .map(|c| CheckRecord::new(c.name, &c.status))
            .collect();
        let spec = &scheme.spectrum;
        report.spectrum = (0..=arr.diameter())
            .map(|i| EigenvalueRecord {
                index: i,
                value: ExactValue::from_algebraic(&spec.eigenvalues_algebraic()[i]),
                multiplicity: ExactValue::from_elem(spec.multiplicity(i)),
            })
            .collect();
        report.p_structures = p_structures(&scheme.ptensor)
            .into_iter()
            .map(|p| p.ordering)
            .collect();
        let qs = q_structures(&scheme);
        report.q_structures = qs
            .iter()
            .enumerate()
            .map(|(i, q)| QStructureRecord::new(q, if i == 0 { None } else { Some(&qs[0]) }))
            .collect();
        let flags = imprimitivity(&scheme, None);
        report.classification = Some(ClassificationRecord {
            bipartite: flags.bipartite,
            antipodal: flags.antipodal,
            tight: flags.tight,
            schur_pairs: schur_idempotent_pairs(&scheme)
                .iter()
                .map(|p| [p.i, p.j, p.h])
                .collect(),
            schur_closed_subsets: flags.schur_closed_subsets,
        });
        report.twice_q = Some(TwiceQRecord::from(&verify_on_scheme(&scheme, &qs)));
        report
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "array        {{{}}}", self.array.replace(';', "; "));
        let _ = writeln!(s, "diameter     {}", self.diameter);
        let _ = writeln!(s, "vertices     {}", self.vertices);
        let _ = writeln!(s, "valencies    {}", self.valencies.join(", "));
        let _ = writeln!(
            s,
            "feasible     {}",
            if self.feasible { "yes" } else { "no" }
        );
        for c in &self.checks {
            let detail = c
                .detail
                .as_deref()
                .map(|d| format!(" ({d})"))
                .unwrap_or_default();
            let _ = writeln!(s, "  {:<34} {}{detail}", c.name, c.status);
        }
        if let Some(e) = &self.error {
            let _ = writeln!(s, "error        {e}");
        }
        if !self.spectrum.is_empty() {
            let _ = writeln!(
                s,
                "spectrum (decimals to {} places; minimal polynomials are exact)",
                crate::exact::DECIMAL_DIGITS
            );
            for e in &self.spectrum {
                let _ = writeln!(
                    s,
                    "  theta_{} = {}  (minimal polynomial {}), multiplicity {}",
                    e.index,
                    e.value.decimal,
                    render_poly(&e.value.minimal_polynomial),
                    e.multiplicity.decimal
                );
            }
        }
        let _ = writeln!(s, "P-polynomial structures: {}", self.p_structures.len());
        for p in &self.p_structures {
            let _ = writeln!(s, "  {p:?}");
        }
        let _ = writeln!(s, "Q-polynomial structures: {}", self.q_structures.len());
        for q in &self.q_structures {
            let mut tags = Vec::new();
            for (on, tag) in [
                (q.dual_bipartite, "dual bipartite"),
                (q.dual_antipodal, "dual antipodal"),
                (q.almost_dual_bipartite, "almost dual bipartite"),
                (q.almost_dual_antipodal, "almost dual antipodal"),
            ] {
                if on {
                    tags.push(tag.to_string());
                }
            }
            if !q.types_relative_to_first.is_empty() {
                tags.push(format!("type {}", q.types_relative_to_first.join("/")));
            }
            let _ = writeln!(s, "  {:?} {}", q.ordering, tags.join(", "));
        }
        if let Some(c) = &self.classification {
            let _ = writeln!(
                s,
                "bipartite {}, antipodal {}, tight {}",
                c.bipartite, c.antipodal, c.tight
            );
            let pairs: Vec<String> = c
                .schur_pairs
                .iter()
                .map(|[i, j, h]| format!("E{i}∘E{j}∝E{h}"))
                .collect();
            let _ = writeln!(
                s,
                "Schur products onto one idempotent: {}",
                if pairs.is_empty() {
                    "none".into()
                } else {
                    pairs.join(", ")
                }
            );
        }
        match &self.twice_q_list.precondition_failure {
            Some(why) => {
                let _ = writeln!(s, "twice Q-polynomial list: not applicable ({why})");
            }
            None if self.twice_q_list.cases.is_empty() => {
                let _ = writeln!(s, "twice Q-polynomial list: not in list");
            }
            None => {
                let _ = writeln!(
                    s,
                    "twice Q-polynomial list: {}",
                    self.twice_q_list.cases.join("; ")
                );
            }
        }
        if let Some(t) = &self.twice_q {
            if t.applicable {
                let _ = writeln!(s, "tight twice Q-polynomial identities");
                for c in &t.checks {
                    let extra = match (&c.residual, &c.note) {
                        (Some(r), _) => format!(", residual {}", r.decimal),
                        (None, Some(n)) => format!(" ({n})"),
                        _ => String::new(),
                    };
                    let _ = writeln!(s, "  {:<44} {}{extra}", c.statement, c.outcome);
                }
            } else {
                let _ = writeln!(
                    s,
                    "tight twice Q-polynomial identities: hypotheses fail ({})",
                    t.hypothesis_failures.join("; ")
                );
            }
        }
        s
    }
}

/// `[c_0, c_1, …]` as `c_n x^n + … + c_0`.
pub fn render_poly(coeffs: &[String]) -> String {
    let mut terms = Vec::new();
    for (i, c) in coeffs.iter().enumerate().rev() {
        if c == "0" {
            continue;
        }
        let (neg, mag) = match c.strip_prefix('-') {
            Some(m) => (true, m),
            None => (false, c.as_str()),
        };
        let coef = if mag == "1" && i > 0 {
            String::new()
        } else {
            mag.to_string()
        };
        let var = match i {
            0 => String::new(),
            1 => "x".into(),
            _ => format!("x^{i}"),
        };
        let sign = match (terms.is_empty(), neg) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        terms.push(format!("{sign}{coef}{var}"));
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.concat()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use drg_core::parse_array;

    #[test]
    fn json_round_trip_is_byte_identical() {
        for text in [
            "4,3,2,1;1,2,3,4",
            "10,5,4,2;1,2,2,10",
            "3,2,2;1,1,3",
            "2,1,1;1,1,1",
        ] {
            let report = AnalysisReport::analyze(&parse_array(text).unwrap());
            let json = report.to_json();
            let parsed: AnalysisReport = serde_json::from_str(&json).unwrap();
            assert_eq!(parsed, report);
            assert_eq!(parsed.to_json(), json);
        }
    }

    #[test]
    fn exact_fields_reconstruct_the_spectrum() {
        let report = AnalysisReport::analyze(&parse_array("10,5,4,2;1,2,2,10").unwrap());
        let theta1 = report.spectrum[1].value.to_algebraic().unwrap();
        assert_eq!(theta1.degree(), 2);
        assert_eq!(report.q_structure_count(), 2);
        assert!(report.twice_q.as_ref().unwrap().applicable);
        assert!(report.render_text().contains("Q-polynomial structures: 2"));
    }

    #[test]
    fn polynomial_rendering() {
        let c = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
        assert_eq!(render_poly(&c(&["-2", "0", "1"])), "x^2 - 2");
        assert_eq!(render_poly(&c(&["3", "-1"])), "-x + 3");
    }
}
