//! Scenario files: JSON input, scalar tokens, validation.
//!
//! Scalars are strings. A token is a rational `"p"` / `"p/q"`, or a power of
//! the scenario parameter `q`: `"q"`, `"q^k"`, `"-q^k"`, `"c*q^k"`.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use hochschild::hopf::{check_hopf_axioms, cyclic_table, group_algebra, integral, kac_paljutkin, trivial_hopf, DenseHopf, HopfData};
use hochschild::kp::kp_plane_action;
use hochschild::linalg::{format_scalar, parse_scalar, pow, Matrix, Scalar};
use hochschild::qalgebra::{check_module_algebra, HActionOnA, SkewPolyAlgebra};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::CliError;

pub const BUILTIN_KP: &str = "kac-paljutkin-qplane";
const BUILTIN_KP_SOURCE: &str = include_str!("../../../scenarios/kac-paljutkin-qplane.json");

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    #[serde(default)]
    pub name: Option<String>,
    pub algebra: AlgebraSpec,
    pub hopf: HopfSpec,
    /// Per `H` basis label, the matrix of its action on the generators, by rows;
    /// column `k` is the image of generator `k`.
    pub action: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default)]
    pub parameters: ParametersSpec,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub generators: Vec<String>,
    /// A single token for all pairs, or a full `n×n` table (entries `i<j` used).
    pub q: QSpec,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum QSpec {
    Uniform(String),
    Table(Vec<Vec<String>>),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum HopfSpec {
    /// `"kac-paljutkin"`, `"trivial"`, `"cyclic:<n>"`, or `"group:<table>"`
    /// with the table as a JSON array of rows.
    Builtin(String),
    Group(GroupSpec),
    Inline(InlineHopf),
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub table: Vec<Vec<usize>>,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
}

/// Dense structure constants; see `hochschild::hopf::DenseHopf`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct InlineHopf {
    pub labels: Vec<String>,
    pub mult: Vec<Vec<Vec<String>>>,
    pub unit: Vec<String>,
    pub comult: Vec<Vec<Vec<String>>>,
    pub counit: Vec<String>,
    pub antipode: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ParametersSpec {
    #[serde(default)]
    pub q: Option<String>,
    #[serde(default)]
    pub weight_max: Option<i64>,
    #[serde(default)]
    pub index_max: Option<usize>,
    #[serde(default)]
    pub m_max: Option<usize>,
}

/// Command-line values that take precedence over the file.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub q: Option<String>,
    pub weight_max: Option<i64>,
    pub index_max: Option<usize>,
}

/// A validated scenario.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub name: String,
    /// The input document exactly as parsed.
    pub source: serde_json::Value,
    pub q: Scalar,
    pub weight_max: i64,
    pub index_max: usize,
    pub m_max: usize,
    pub action: HActionOnA,
    /// The Kac–Paljutkin action on the quantum (−1)-plane with parameter `q`.
    pub is_kp_plane: bool,
}

pub const DEFAULT_Q: &str = "2";
pub const DEFAULT_WEIGHT_MAX: i64 = 8;
pub const DEFAULT_INDEX_MAX: usize = 2;

/// Parses a scalar token against the parameter `q`.
pub fn parse_token(token: &str, q: &Scalar) -> Result<Scalar, String> {
    let t: String = token.chars().filter(|c| !c.is_whitespace()).collect::<String>().replace('−', "-");
    let Some(pos) = t.find('q') else {
        return parse_scalar(&t).map_err(|e| e.to_string());
    };
    let (head, tail) = t.split_at(pos);
    let coeff = match head {
        "" => Scalar::from_integer(1.into()),
        "-" => Scalar::from_integer((-1).into()),
        h => {
            let h = h.strip_suffix('*').ok_or_else(|| format!("bad token {token:?}"))?;
            parse_scalar(h).map_err(|e| e.to_string())?
        }
    };
    let exp: i64 = match &tail[1..] {
        "" => 1,
        rest => rest
            .strip_prefix('^')
            .and_then(|e| e.trim_start_matches('(').trim_end_matches(')').parse().ok())
            .ok_or_else(|| format!("bad exponent in {token:?}"))?,
    };
    if exp < 0 && q.is_zero() {
        return Err("negative power of q = 0".into());
    }
    Ok(coeff * pow(q, exp))
}

fn field<T>(r: Result<T, String>, path: &str) -> Result<T, CliError> {
    r.map_err(|e| CliError::Parse(format!("{path}: {e}")))
}

fn parse_vec(v: &[String], q: &Scalar, path: &str) -> Result<Vec<Scalar>, CliError> {
    v.iter()
        .enumerate()
        .map(|(i, s)| field(parse_token(s, q), &format!("{path}[{i}]")))
        .collect()
}

fn parse_mat(v: &[Vec<String>], q: &Scalar, path: &str) -> Result<Vec<Vec<Scalar>>, CliError> {
    v.iter()
        .enumerate()
        .map(|(i, r)| parse_vec(r, q, &format!("{path}[{i}]")))
        .collect()
}

fn build_hopf(spec: &HopfSpec, q: &Scalar) -> Result<HopfData, CliError> {
    let invalid = |e: hochschild::hopf::HopfError| CliError::Validation(format!("hopf: {e}"));
    match spec {
        HopfSpec::Builtin(name) => match name.as_str() {
            "kac-paljutkin" => Ok(kac_paljutkin()),
            "trivial" => Ok(trivial_hopf()),
            other if other.starts_with("group:") => {
                let table: Vec<Vec<usize>> = serde_json::from_str(&other["group:".len()..])
                    .map_err(|e| CliError::Parse(format!("hopf.builtin: bad group table: {e}")))?;
                group_algebra(&table, None).map_err(invalid)
            }
            other => match other.strip_prefix("cyclic:").and_then(|n| n.parse::<usize>().ok()) {
                Some(n) if n >= 1 => group_algebra(&cyclic_table(n), None).map_err(invalid),
                _ => Err(CliError::Parse(format!("hopf.builtin: unknown Hopf algebra {other:?}"))),
            },
        },
        HopfSpec::Group(g) => group_algebra(&g.table, g.labels.clone()).map_err(invalid),
        HopfSpec::Inline(h) => {
            let mult = h
                .mult
                .iter()
                .enumerate()
                .map(|(i, r)| parse_mat(r, q, &format!("hopf.inline.mult[{i}]")))
                .collect::<Result<_, _>>()?;
            let comult = h
                .comult
                .iter()
                .enumerate()
                .map(|(i, r)| parse_mat(r, q, &format!("hopf.inline.comult[{i}]")))
                .collect::<Result<_, _>>()?;
            HopfData::from_dense(DenseHopf {
                labels: h.labels.clone(),
                mult,
                unit: parse_vec(&h.unit, q, "hopf.inline.unit")?,
                comult,
                counit: parse_vec(&h.counit, q, "hopf.inline.counit")?,
                antipode: parse_mat(&h.antipode, q, "hopf.inline.antipode")?,
            })
            .map_err(invalid)
        }
    }
}

fn build_algebra(spec: &AlgebraSpec, q: &Scalar) -> Result<SkewPolyAlgebra, CliError> {
    let labels = spec.generators.clone();
    let res = match &spec.q {
        QSpec::Uniform(t) => SkewPolyAlgebra::uniform(labels, field(parse_token(t, q), "algebra.q")?),
        QSpec::Table(rows) => SkewPolyAlgebra::new(labels, parse_mat(rows, q, "algebra.q")?),
    };
    res.map_err(|e| CliError::Validation(format!("algebra: {e}")))
}

/// Parses and validates a scenario document.
pub fn load_scenario_str(text: &str, overrides: &Overrides) -> Result<Scenario, CliError> {
    let source: serde_json::Value = serde_json::from_str(text)
        .map_err(|e| CliError::Parse(format!("line {} column {}: {e}", e.line(), e.column())))?;
    let file: ScenarioFile = serde_json::from_value(source.clone()).map_err(|e| CliError::Parse(e.to_string()))?;

    let q_token = overrides
        .q
        .clone()
        .or_else(|| file.parameters.q.clone())
        .unwrap_or_else(|| DEFAULT_Q.to_string());
    let q = field(parse_scalar(&q_token).map_err(|e| e.to_string()), "parameters.q")?;
    if q.is_zero() {
        return Err(CliError::Validation("q must be nonzero".into()));
    }
    let weight_max = overrides
        .weight_max
        .or(file.parameters.weight_max)
        .unwrap_or(DEFAULT_WEIGHT_MAX);
    let index_max = overrides
        .index_max
        .or(file.parameters.index_max)
        .unwrap_or(DEFAULT_INDEX_MAX);

    let hopf = build_hopf(&file.hopf, &q)?;
    let axioms = check_hopf_axioms(&hopf);
    if let Some(f) = axioms.failures().next() {
        return Err(CliError::Validation(format!(
            "Hopf axiom failed: {} (witness: {})",
            f.family,
            f.witness.clone().unwrap_or_default()
        )));
    }
    integral(&hopf).map_err(|e| CliError::Validation(format!("integral: {e}")))?;

    let algebra = build_algebra(&file.algebra, &q)?;
    let n = algebra.n();
    let m_max = file.parameters.m_max.unwrap_or(n + 1);
    if m_max < 2 {
        return Err(CliError::Validation("m_max must be at least 2".into()));
    }
    let mut mats = Vec::with_capacity(hopf.dim());
    for label in hopf.labels() {
        let rows = file
            .action
            .get(label)
            .ok_or_else(|| CliError::Validation(format!("action: missing matrix for {label:?}")))?;
        let rows = parse_mat(rows, &q, &format!("action.{label}"))?;
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(CliError::Validation(format!("action matrix for {label} must be {n}x{n}")));
        }
        mats.push(Matrix::from_rows(rows, n));
    }
    if let Some(extra) = file.action.keys().find(|k| !hopf.labels().contains(k)) {
        return Err(CliError::Validation(format!("action: unknown H label {extra:?}")));
    }
    let is_kp_builtin = matches!(&file.hopf, HopfSpec::Builtin(b) if b == "kac-paljutkin");
    let action = HActionOnA::new(Arc::new(hopf), algebra, mats).map_err(|e| CliError::Validation(format!("action: {e}")))?;

    let is_kp_plane = is_kp_builtin && {
        let reference = kp_plane_action(&q);
        reference.algebra().q_table() == action.algebra().q_table()
            && (0..8).all(|h| reference.gen_matrix(h) == action.gen_matrix(h))
    };

    Ok(Scenario {
        name: file.name.clone().unwrap_or_else(|| "unnamed".to_string()),
        source,
        q,
        weight_max,
        index_max,
        m_max,
        action,
        is_kp_plane,
    })
}

/// Module-algebra axioms, checked before any computation in `compute` and `tables`.
pub fn validate_module_algebra(s: &Scenario) -> Result<(), CliError> {
    let report = check_module_algebra(&s.action);
    match report.checks.iter().find(|c| !c.passed) {
        None => Ok(()),
        Some(c) => Err(CliError::Validation(format!(
            "module algebra axiom failed: {} (witness: {})",
            c.name,
            c.witness.clone().unwrap_or_default()
        ))),
    }
}

pub fn load_scenario(path: &Path, overrides: &Overrides) -> Result<Scenario, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
    load_scenario_str(&text, overrides)
}

pub fn builtin(name: &str, overrides: &Overrides) -> Result<Scenario, CliError> {
    match name {
        BUILTIN_KP => load_scenario_str(BUILTIN_KP_SOURCE, overrides),
        other => Err(CliError::Parse(format!("unknown builtin scenario {other:?}"))),
    }
}

pub fn q_string(s: &Scenario) -> String {
    format_scalar(&s.q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hochschild::linalg::{int, rat};

    #[test]
    fn tokens() {
        let q = int(2);
        assert_eq!(parse_token("3/4", &q).unwrap(), rat(3, 4));
        assert_eq!(parse_token("q", &q).unwrap(), int(2));
        assert_eq!(parse_token("q^-1", &q).unwrap(), rat(1, 2));
        assert_eq!(parse_token("-q^2", &q).unwrap(), int(-4));
        assert_eq!(parse_token("1/2*q^3", &q).unwrap(), int(4));
        assert_eq!(parse_token("−1", &q).unwrap(), int(-1));
        assert!(parse_token("2q", &q).is_err());
        assert!(parse_token("q^x", &q).is_err());
    }

    #[test]
    fn builtin_is_valid_and_recognised() {
        let s = builtin(BUILTIN_KP, &Overrides::default()).unwrap();
        assert!(s.is_kp_plane);
        assert_eq!(s.q, int(2));
        validate_module_algebra(&s).unwrap();
        let s = builtin(
            BUILTIN_KP,
            &Overrides {
                q: Some("-1".into()),
                ..Default::default()
            },
        )
        .unwrap();
        assert!(s.is_kp_plane);
    }

    #[test]
    fn zero_q_is_rejected() {
        let err = builtin(
            BUILTIN_KP,
            &Overrides {
                q: Some("0".into()),
                ..Default::default()
            },
        )
        .unwrap_err();
        assert_eq!(err, CliError::Validation("q must be nonzero".into()));
    }

    #[test]
    fn perturbed_comultiplication_names_coassociativity() {
        let mut dense = kac_paljutkin().to_dense();
        // perturb one coefficient of Δ(z)
        let z = 3;
        let c = dense.comult[z][z][z].clone();
        dense.comult[z][z][z] = c * int(2);
        let s = |v: &Scalar| format_scalar(v);
        let inline = InlineHopf {
            labels: dense.labels.clone(),
            mult: dense.mult.iter().map(|r| r.iter().map(|v| v.iter().map(s).collect()).collect()).collect(),
            unit: dense.unit.iter().map(s).collect(),
            comult: dense.comult.iter().map(|r| r.iter().map(|v| v.iter().map(s).collect()).collect()).collect(),
            counit: dense.counit.iter().map(s).collect(),
            antipode: dense.antipode.iter().map(|v| v.iter().map(s).collect()).collect(),
        };
        let mut file: ScenarioFile = serde_json::from_str(BUILTIN_KP_SOURCE).unwrap();
        file.hopf = HopfSpec::Inline(inline);
        let text = serde_json::to_string(&file).unwrap();
        match load_scenario_str(&text, &Overrides::default()) {
            Err(CliError::Validation(msg)) => assert!(msg.contains("coassociativity"), "{msg}"),
            other => panic!("expected a validation error, got {other:?}"),
        }
    }

    #[test]
    fn group_table_forms_agree() {
        let hopf = |spec: &HopfSpec| build_hopf(spec, &int(1)).unwrap().to_dense();
        let a = hopf(&HopfSpec::Builtin("group:[[0,1],[1,0]]".into()));
        let b = hopf(&HopfSpec::Group(GroupSpec {
            table: vec![vec![0, 1], vec![1, 0]],
            labels: None,
        }));
        let c = hopf(&HopfSpec::Builtin("cyclic:2".into()));
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert!(build_hopf(&HopfSpec::Builtin("group:[[0,1]]".into()), &int(1)).is_err());
    }

    #[test]
    fn parse_errors_carry_positions() {
        match load_scenario_str("{\n  \"algebra\": ", &Overrides::default()) {
            Err(CliError::Parse(msg)) => assert!(msg.contains("line 2"), "{msg}"),
            other => panic!("{other:?}"),
        }
    }
}
