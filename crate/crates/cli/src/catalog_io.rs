//! JSON-lines catalog processing: one `{name, array, expect}` record per
//! line in, one result record per line out, in input order.

use drg_core::catalog::builtin_catalog;
use drg_core::feasibility::CheckStatus;
use drg_core::properties::property_checks;
use drg_core::structures::{imprimitivity, q_structures};
use drg_core::{parse_array_raw, FeasibilityReport, IntersectionArray, Scheme};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Expected properties; absent fields are not checked.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expectations {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q_structures: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub feasible: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tight: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bipartite: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipodal: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogRecord {
    pub name: String,
    pub array: String,
    #[serde(default)]
    pub expect: Expectations,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogResult {
    pub name: String,
    pub array: String,
    pub passed: bool,
    pub feasible: bool,
    pub q_structures: Option<usize>,
    pub tight: Option<bool>,
    pub bipartite: bool,
    pub antipodal: bool,
    /// Expectations that did not hold.
    pub mismatches: Vec<String>,
    /// Structural property checks that failed on a feasible array.
    pub property_failures: Vec<String>,
}

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("line {line}: {source}")]
    Json {
        line: usize,
        source: serde_json::Error,
    },
    #[error("line {line}: {source}")]
    Array {
        line: usize,
        source: drg_core::ParseError,
    },
}

/// The built-in catalog as records with its known structure counts.
pub fn builtin_records() -> Vec<CatalogRecord> {
    builtin_catalog()
        .iter()
        .map(|e| CatalogRecord {
            name: e.name.into(),
            array: e.array.into(),
            expect: Expectations {
                q_structures: e.expected_q,
                ..Expectations::default()
            },
        })
        .collect()
}

/// Parses JSON lines; blank lines are skipped.
pub fn parse_records(input: &str) -> Result<Vec<(CatalogRecord, IntersectionArray)>, CatalogError> {
    input
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            let line = i + 1;
            let rec: CatalogRecord =
                serde_json::from_str(l).map_err(|source| CatalogError::Json { line, source })?;
            let arr = parse_array_raw(&rec.array)
                .map_err(|source| CatalogError::Array { line, source })?;
            Ok((rec, arr))
        })
        .collect()
}

fn compare<T: PartialEq + std::fmt::Debug>(
    out: &mut Vec<String>,
    what: &str,
    expected: Option<T>,
    found: Option<T>,
) {
    if let Some(e) = expected {
        if found.as_ref() != Some(&e) {
            out.push(format!("{what}: expected {e:?}, found {found:?}"));
        }
    }
}

/// Evaluates one record.
pub fn evaluate(rec: &CatalogRecord, arr: &IntersectionArray) -> CatalogResult {
    let mut result = CatalogResult {
        name: rec.name.clone(),
        array: arr.to_string(),
        passed: false,
        feasible: false,
        q_structures: None,
        tight: None,
        bipartite: arr.is_bipartite(),
        antipodal: arr.is_antipodal(),
        mismatches: Vec::new(),
        property_failures: Vec::new(),
    };
    let scheme = arr.validate().ok().and_then(|()| Scheme::new(arr).ok());
    if let Some(scheme) = &scheme {
        let qs = q_structures(scheme);
        result.feasible = FeasibilityReport::for_scheme(scheme).is_feasible();
        result.q_structures = Some(qs.len());
        result.tight = Some(imprimitivity(scheme, None).tight);
        if result.feasible {
            result.property_failures = property_checks(scheme, &qs)
                .into_iter()
                .filter_map(|c| match c.status {
                    CheckStatus::Fail(why) => Some(format!("{}: {why}", c.name)),
                    _ => None,
                })
                .collect();
        }
    }
    let e = &rec.expect;
    let mut mismatches = Vec::new();
    compare(
        &mut mismatches,
        "q_structures",
        e.q_structures,
        result.q_structures,
    );
    compare(
        &mut mismatches,
        "feasible",
        e.feasible,
        Some(result.feasible),
    );
    compare(&mut mismatches, "tight", e.tight, result.tight);
    compare(
        &mut mismatches,
        "bipartite",
        e.bipartite,
        Some(result.bipartite),
    );
    compare(
        &mut mismatches,
        "antipodal",
        e.antipodal,
        Some(result.antipodal),
    );
    result.mismatches = mismatches;
    result.passed = result.mismatches.is_empty() && result.property_failures.is_empty();
    result
}

/// Evaluates every record in parallel, preserving input order.
pub fn run_catalog(records: &[(CatalogRecord, IntersectionArray)]) -> Vec<CatalogResult> {
    records.par_iter().map(|(r, a)| evaluate(r, a)).collect()
}

/// One compact JSON object per line.
pub fn to_jsonl<T: Serialize>(items: &[T]) -> String {
    items
        .iter()
        .map(|i| serde_json::to_string(i).expect("record serializes") + "\n")
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_dump_round_trips() {
        let text = to_jsonl(&builtin_records());
        let parsed = parse_records(&text).unwrap();
        let back: Vec<CatalogRecord> = parsed.into_iter().map(|(r, _)| r).collect();
        assert_eq!(to_jsonl(&back), text);
    }

    #[test]
    fn malformed_lines_are_reported_with_line_numbers() {
        let err = parse_records("{\"name\":\"a\",\"array\":\"2,1;1,1\"}\n{oops").unwrap_err();
        assert!(err.to_string().starts_with("line 2"), "{err}");
        let err = parse_records("{\"name\":\"a\",\"array\":\"2,1,1,1\"}").unwrap_err();
        assert!(matches!(err, CatalogError::Array { line: 1, .. }));
    }

    #[test]
    fn mismatches_and_infeasible_arrays() {
        let recs = parse_records(concat!(
            "{\"name\":\"cube\",\"array\":\"3,2,1;1,2,3\",\"expect\":{\"q_structures\":2,\"bipartite\":true}}\n",
            "{\"name\":\"bad\",\"array\":\"3,2;1,2\",\"expect\":{\"feasible\":false}}\n",
        ))
        .unwrap();
        let out = run_catalog(&recs);
        assert_eq!(out[0].name, "cube");
        assert!(!out[0].passed);
        assert_eq!(out[0].mismatches.len(), 1);
        assert!(out[1].passed, "{:?}", out[1]);
    }
}
