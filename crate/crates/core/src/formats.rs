//! Input and output formats: a compact plain-text tabular problem format, a
//! JSON problem format (numbers kept as decimal text so exact mode never
//! rounds), and line-delimited findings records.

use serde::Serialize;
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::model::{Constraint, GeneralProblem, Relation, Sense, VarDomain};
use crate::oracle::Finding;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FileFormat {
    Json,
    /// The tabular text layout: objective row first, then one constraint
    /// row per line with the rhs after a `|`.
    PaperText,
}

impl FileFormat {
    /// Guesses the format from a file extension; `.json` is JSON and
    /// everything else text.
    pub fn from_path(path: &str) -> FileFormat {
        if path
            .rsplit('.')
            .next()
            .is_some_and(|e| e.eq_ignore_ascii_case("json"))
        {
            FileFormat::Json
        } else {
            FileFormat::PaperText
        }
    }
}

/// A positioned parse error: `location` is a line number for text input or
/// a field path for JSON.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("{location}: {message}")]
pub struct ParseError {
    pub location: String,
    pub message: String,
}

impl ParseError {
    fn at(location: impl Into<String>, message: impl Into<String>) -> Self {
        ParseError {
            location: location.into(),
            message: message.into(),
        }
    }
}

fn parse_relation(tok: &str) -> Option<Relation> {
    match tok {
        "<=" | "=<" => Some(Relation::Le),
        "=" | "==" => Some(Relation::Eq),
        ">=" | "=>" => Some(Relation::Ge),
        _ => None,
    }
}

fn relation_token(rel: Relation) -> &'static str {
    match rel {
        Relation::Le => "<=",
        Relation::Eq => "=",
        Relation::Ge => ">=",
    }
}

/// Parses the tabular text format:
///
/// ```text
/// sense: max          # optional, default max
/// free: 2             # optional, 1-based indices of free variables
/// 2 7 6 4             # objective coefficients
/// 1 1 1 1    | 10     # constraint rows: coefficients | rhs
/// 1 -1 2 0 >= | 2     # optional relation before the |, default <=
/// ```
///
/// `#` starts a comment; blank lines are skipped. All rows must have the
/// same number of coefficients.
pub fn parse_paper_text<S: Scalar>(text: &str) -> Result<GeneralProblem<S>, ParseError> {
    let mut sense = Sense::Max;
    let mut free: Vec<usize> = Vec::new();
    let mut objective: Option<Vec<S>> = None;
    let mut constraints: Vec<Constraint<S>> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = format!("line {}", idx + 1);
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("sense:") {
            sense = match rest.trim() {
                "max" => Sense::Max,
                "min" => Sense::Min,
                other => {
                    return Err(ParseError::at(
                        lineno,
                        format!("unknown sense '{other}', expected max or min"),
                    ))
                }
            };
            continue;
        }
        if let Some(rest) = line.strip_prefix("free:") {
            for tok in rest.split_whitespace() {
                let i: usize = tok
                    .parse()
                    .map_err(|_| ParseError::at(&lineno, format!("bad variable index '{tok}'")))?;
                if i == 0 {
                    return Err(ParseError::at(&lineno, "variable indices are 1-based"));
                }
                free.push(i);
            }
            continue;
        }

        let spaced = line.replace('|', " | ");
        let tokens: Vec<&str> = spaced.split_whitespace().collect();
        let parse_num = |tok: &str| -> Result<S, ParseError> {
            S::parse(tok)
                .ok_or_else(|| ParseError::at(&lineno, format!("non-numeric token '{tok}'")))
        };

        if objective.is_none() {
            if tokens.contains(&"|") {
                return Err(ParseError::at(
                    lineno,
                    "objective row must come before constraint rows",
                ));
            }
            let row: Result<Vec<S>, _> = tokens.iter().map(|t| parse_num(t)).collect();
            objective = Some(row?);
            continue;
        }

        let Some(bar) = tokens.iter().position(|&t| t == "|") else {
            return Err(ParseError::at(
                lineno,
                "constraint row missing '|' before rhs",
            ));
        };
        let mut coeff_toks = &tokens[..bar];
        let mut rhs_toks = &tokens[bar + 1..];
        let mut relation = Relation::Le;
        if let Some((last, rest)) = coeff_toks.split_last() {
            if let Some(rel) = parse_relation(last) {
                relation = rel;
                coeff_toks = rest;
            }
        }
        if let Some((first, rest)) = rhs_toks.split_first() {
            if let Some(rel) = parse_relation(first) {
                relation = rel;
                rhs_toks = rest;
            }
        }
        let [rhs_tok] = rhs_toks else {
            return Err(ParseError::at(
                lineno,
                format!("expected exactly one rhs value, found {}", rhs_toks.len()),
            ));
        };
        let coeffs: Result<Vec<S>, _> = coeff_toks.iter().map(|t| parse_num(t)).collect();
        let coeffs = coeffs?;
        let n = objective.as_ref().map(Vec::len).unwrap_or(0);
        if coeffs.len() != n {
            return Err(ParseError::at(
                lineno,
                format!(
                    "ragged row: {} coefficients, objective has {}",
                    coeffs.len(),
                    n
                ),
            ));
        }
        constraints.push(Constraint {
            coeffs,
            relation,
            rhs: parse_num(rhs_tok)?,
        });
    }

    let objective =
        objective.ok_or_else(|| ParseError::at("end of input", "no objective row found"))?;
    if constraints.is_empty() {
        return Err(ParseError::at("end of input", "no constraint rows found"));
    }
    let mut domains = vec![VarDomain::NonNegative; objective.len()];
    for i in free {
        if i > domains.len() {
            return Err(ParseError::at(
                "free:",
                format!("variable index {i} exceeds {} variables", domains.len()),
            ));
        }
        domains[i - 1] = VarDomain::Free;
    }
    Ok(GeneralProblem {
        sense,
        objective,
        constraints,
        domains,
    })
}

/// Serializes a problem in the tabular text format. The output parses back
/// to an identical problem.
pub fn to_paper_text<S: Scalar>(gp: &GeneralProblem<S>) -> String {
    let mut out = String::new();
    out.push_str(match gp.sense {
        Sense::Max => "sense: max\n",
        Sense::Min => "sense: min\n",
    });
    let free: Vec<String> = gp
        .domains
        .iter()
        .enumerate()
        .filter(|(_, d)| **d == VarDomain::Free)
        .map(|(i, _)| (i + 1).to_string())
        .collect();
    if !free.is_empty() {
        out.push_str(&format!("free: {}\n", free.join(" ")));
    }
    let nums = |row: &[S]| -> String {
        row.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    };
    out.push_str(&nums(&gp.objective));
    out.push('\n');
    for c in &gp.constraints {
        let rel = if c.relation == Relation::Le {
            String::new()
        } else {
            format!(" {}", relation_token(c.relation))
        };
        out.push_str(&format!("{}{} | {}\n", nums(&c.coeffs), rel, c.rhs));
    }
    out
}

fn json_scalar<S: Scalar>(v: &Value, path: &str) -> Result<S, ParseError> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        other => {
            return Err(ParseError::at(
                path,
                format!("expected a number or numeric string, found {other}"),
            ))
        }
    };
    S::parse(&text).ok_or_else(|| ParseError::at(path, format!("cannot parse number '{text}'")))
}

fn json_scalar_array<S: Scalar>(v: &Value, path: &str) -> Result<Vec<S>, ParseError> {
    let arr = v
        .as_array()
        .ok_or_else(|| ParseError::at(path, "expected an array"))?;
    arr.iter()
        .enumerate()
        .map(|(i, v)| json_scalar(v, &format!("{path}[{i}]")))
        .collect()
}

/// Parses the JSON problem format:
///
/// ```json
/// {"sense": "max",
///  "objective": [-1, 1],
///  "constraints": [{"coeffs": [1, 1], "op": "<=", "rhs": 10}],
///  "domains": ["nonnegative", "free"]}
/// ```
///
/// `sense`, `op` and `domains` are optional (max, `<=`, all non-negative).
/// Numbers may be given as strings (`"1/3"`, `"0.1"`) to stay exact in
/// rational mode; plain JSON numbers keep their decimal text too.
pub fn parse_json<S: Scalar>(text: &str) -> Result<GeneralProblem<S>, ParseError> {
    let root: Value =
        serde_json::from_str(text).map_err(|e| ParseError::at("document", e.to_string()))?;
    let obj = root
        .as_object()
        .ok_or_else(|| ParseError::at("document", "expected a JSON object"))?;
    let sense = match obj.get("sense") {
        None => Sense::Max,
        Some(Value::String(s)) if s == "max" => Sense::Max,
        Some(Value::String(s)) if s == "min" => Sense::Min,
        Some(other) => {
            return Err(ParseError::at(
                "sense",
                format!("expected \"max\" or \"min\", found {other}"),
            ))
        }
    };
    let objective: Vec<S> = json_scalar_array(
        obj.get("objective")
            .ok_or_else(|| ParseError::at("objective", "missing field"))?,
        "objective",
    )?;
    let cons_val = obj
        .get("constraints")
        .ok_or_else(|| ParseError::at("constraints", "missing field"))?
        .as_array()
        .ok_or_else(|| ParseError::at("constraints", "expected an array"))?;
    if cons_val.is_empty() {
        return Err(ParseError::at("constraints", "must not be empty"));
    }
    let mut constraints = Vec::with_capacity(cons_val.len());
    for (i, c) in cons_val.iter().enumerate() {
        let path = format!("constraints[{i}]");
        let c = c
            .as_object()
            .ok_or_else(|| ParseError::at(&path, "expected an object"))?;
        let coeffs = json_scalar_array(
            c.get("coeffs")
                .ok_or_else(|| ParseError::at(format!("{path}.coeffs"), "missing field"))?,
            &format!("{path}.coeffs"),
        )?;
        if coeffs.len() != objective.len() {
            return Err(ParseError::at(
                format!("{path}.coeffs"),
                format!(
                    "{} coefficients, objective has {}",
                    coeffs.len(),
                    objective.len()
                ),
            ));
        }
        let relation = match c.get("op") {
            None => Relation::Le,
            Some(Value::String(s)) => parse_relation(s).ok_or_else(|| {
                ParseError::at(format!("{path}.op"), format!("unknown relation '{s}'"))
            })?,
            Some(other) => {
                return Err(ParseError::at(
                    format!("{path}.op"),
                    format!("expected a string, found {other}"),
                ))
            }
        };
        let rhs = json_scalar(
            c.get("rhs")
                .ok_or_else(|| ParseError::at(format!("{path}.rhs"), "missing field"))?,
            &format!("{path}.rhs"),
        )?;
        constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
    }
    let domains = match obj.get("domains") {
        None => vec![VarDomain::NonNegative; objective.len()],
        Some(v) => {
            let arr = v
                .as_array()
                .ok_or_else(|| ParseError::at("domains", "expected an array"))?;
            if arr.len() != objective.len() {
                return Err(ParseError::at(
                    "domains",
                    format!("{} entries for {} variables", arr.len(), objective.len()),
                ));
            }
            arr.iter()
                .enumerate()
                .map(|(i, d)| match d.as_str() {
                    Some("nonnegative") => Ok(VarDomain::NonNegative),
                    Some("free") => Ok(VarDomain::Free),
                    _ => Err(ParseError::at(
                        format!("domains[{i}]"),
                        "expected \"nonnegative\" or \"free\"",
                    )),
                })
                .collect::<Result<_, _>>()?
        }
    };
    Ok(GeneralProblem {
        sense,
        objective,
        constraints,
        domains,
    })
}

/// Serializes a problem as JSON. All numbers are written as strings so the
/// round-trip stays exact in rational mode.
pub fn to_json<S: Scalar>(gp: &GeneralProblem<S>) -> String {
    let nums = |row: &[S]| -> Value {
        Value::Array(row.iter().map(|v| Value::String(v.to_string())).collect())
    };
    let constraints: Vec<Value> = gp
        .constraints
        .iter()
        .map(|c| {
            json!({
                "coeffs": nums(&c.coeffs),
                "op": relation_token(c.relation),
                "rhs": c.rhs.to_string(),
            })
        })
        .collect();
    let mut obj = Map::new();
    obj.insert(
        "sense".to_string(),
        json!(match gp.sense {
            Sense::Max => "max",
            Sense::Min => "min",
        }),
    );
    obj.insert("objective".to_string(), nums(&gp.objective));
    obj.insert("constraints".to_string(), Value::Array(constraints));
    if gp.domains.contains(&VarDomain::Free) {
        obj.insert(
            "domains".to_string(),
            Value::Array(
                gp.domains
                    .iter()
                    .map(|d| {
                        json!(match d {
                            VarDomain::NonNegative => "nonnegative",
                            VarDomain::Free => "free",
                        })
                    })
                    .collect(),
            ),
        );
    }
    serde_json::to_string_pretty(&Value::Object(obj)).expect("serialization")
}

pub fn parse_problem<S: Scalar>(
    text: &str,
    format: FileFormat,
) -> Result<GeneralProblem<S>, ParseError> {
    match format {
        FileFormat::Json => parse_json(text),
        FileFormat::PaperText => parse_paper_text(text),
    }
}

#[derive(Serialize)]
struct FindingRecord<'a> {
    seed: u64,
    #[serde(flatten)]
    finding: &'a Finding,
}

/// One JSON object per line, each a finding with the seed that produced it.
pub fn findings_jsonl(findings: &[(u64, Finding)]) -> String {
    let mut out = String::new();
    for (seed, finding) in findings {
        let record = FindingRecord {
            seed: *seed,
            finding,
        };
        out.push_str(&serde_json::to_string(&record).expect("serialization"));
        out.push('\n');
    }
    out
}

/// Numeric display used by the CLI: fixed 4 decimals by default, the full
/// value on request.
pub fn fmt_scalar<S: Scalar>(v: &S, full: bool) -> String {
    if full {
        v.to_string()
    } else {
        format!("{:.4}", v.to_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    const SEC2_TEXT: &str = "sense: max\n-1 1\n1 1 | 10\n-1 0 | -5\n";
    const SEC2_JSON: &str = r#"{"sense":"max","objective":[-1,1],
        "constraints":[{"coeffs":[1,1],"op":"<=","rhs":10},
                       {"coeffs":[-1,0],"op":"<=","rhs":-5}]}"#;

    #[test]
    fn text_and_json_agree() {
        let a: GeneralProblem<f64> = parse_paper_text(SEC2_TEXT).unwrap();
        let b: GeneralProblem<f64> = parse_json(SEC2_JSON).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.objective, vec![-1.0, 1.0]);
        assert_eq!(a.constraints.len(), 2);
    }

    #[test]
    fn text_round_trip() {
        let gp: GeneralProblem<Rational> =
            parse_paper_text("sense: min\nfree: 2\n1 1/3\n2 -1 >= | 0.5\n1 0 = | 4\n").unwrap();
        let text = to_paper_text(&gp);
        let again: GeneralProblem<Rational> = parse_paper_text(&text).unwrap();
        assert_eq!(gp, again);
        assert_eq!(gp.objective[1], Rational::new(1.into(), 3.into()));
        assert_eq!(gp.constraints[0].relation, Relation::Ge);
        assert_eq!(gp.domains[1], VarDomain::Free);
    }

    #[test]
    fn json_round_trip() {
        let gp: GeneralProblem<Rational> = parse_json(SEC2_JSON).unwrap();
        let text = to_json(&gp);
        let again: GeneralProblem<Rational> = parse_json(&text).unwrap();
        assert_eq!(gp, again);
    }

    #[test]
    fn json_strings_stay_exact() {
        let gp: GeneralProblem<Rational> =
            parse_json(r#"{"objective":["1/3"],"constraints":[{"coeffs":["0.1"],"rhs":"2"}]}"#)
                .unwrap();
        assert_eq!(gp.objective[0], Rational::new(1.into(), 3.into()));
        assert_eq!(
            gp.constraints[0].coeffs[0],
            Rational::new(1.into(), 10.into())
        );
    }

    #[test]
    fn text_errors_are_positioned() {
        let err = parse_paper_text::<f64>("1 2\n1 | 3\n").unwrap_err();
        assert_eq!(err.location, "line 2");
        assert!(err.message.contains("ragged"), "{err}");
        let err = parse_paper_text::<f64>("1 2\n1 2 3 | 4\n").unwrap_err();
        assert_eq!(err.location, "line 2");
        let err = parse_paper_text::<f64>("sense: best\n").unwrap_err();
        assert_eq!(err.location, "line 1");
        let err = parse_paper_text::<f64>("1 x | 2\n").unwrap_err();
        assert_eq!(err.location, "line 1");
    }

    #[test]
    fn single_line_with_extra_rhs_is_rejected() {
        let err = parse_paper_text::<f64>("1\n1 | 1 2\n").unwrap_err();
        assert!(err.message.contains("exactly one rhs"), "{err}");
    }

    #[test]
    fn json_errors_carry_field_paths() {
        let err = parse_json::<f64>(r#"{"objective":[1],"constraints":[]}"#).unwrap_err();
        assert_eq!(err.location, "constraints");
        let err = parse_json::<f64>(
            r#"{"objective":[1],"constraints":[{"coeffs":[1],"op":"<","rhs":1}]}"#,
        )
        .unwrap_err();
        assert_eq!(err.location, "constraints[0].op");
        let err =
            parse_json::<f64>(r#"{"objective":[1],"constraints":[{"coeffs":[1,2],"rhs":1}]}"#)
                .unwrap_err();
        assert_eq!(err.location, "constraints[0].coeffs");
    }

    #[test]
    fn format_from_extension() {
        assert_eq!(FileFormat::from_path("a/b/problem.json"), FileFormat::Json);
        assert_eq!(FileFormat::from_path("problem.txt"), FileFormat::PaperText);
        assert_eq!(FileFormat::from_path("problem"), FileFormat::PaperText);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let gp: GeneralProblem<f64> =
            parse_paper_text("# header\n\n1 2 # obj\n3 4 | 5 # row\n").unwrap();
        assert_eq!(gp.objective, vec![1.0, 2.0]);
        assert_eq!(gp.constraints[0].rhs, 5.0);
    }

    #[test]
    fn findings_jsonl_shape() {
        let lines = findings_jsonl(&[(3, Finding::RatioViolation { count: 2 })]);
        let v: serde_json::Value = serde_json::from_str(lines.trim()).unwrap();
        assert_eq!(v["seed"], 3);
        assert_eq!(v["kind"], "ratio_violation");
        assert_eq!(v["count"], 2);
    }
}
