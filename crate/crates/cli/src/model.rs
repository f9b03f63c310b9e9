//! JSON model files and decomposition files.
//!
//! A model names the variables and gives `top` and `bottom` as lists of
//! monomials, each either a string such as `"x1*x3"` or `"y^2"` or an exponent
//! list such as `[1, 0, 2]`. A missing `top` means the unit ideal and a missing
//! `bottom` the zero ideal.
//!
//! ```json
//! {"vars": ["x", "y", "z", "t"], "top": ["x", "y", "z"], "bottom": ["x*t"]}
//! ```

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use stanley::{
    ExponentVector, MonomialIdeal, QuotientModule, StanleyDecomposition, StanleySpace,
};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("bad monomial {text:?} at offset {offset}: {message}")]
    BadMonomial {
        text: String,
        offset: usize,
        message: String,
    },
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("variable {0:?} declared twice")]
    DuplicateVariable(String),
    #[error("invalid variable name {0:?}")]
    InvalidVariableName(String),
    #[error("exponent list {0:?} does not match the number of variables")]
    WrongLength(Vec<u32>),
    #[error("bottom is not contained in top: {0} is not in top")]
    ContainmentViolated(String),
    #[error("the module is zero (bottom equals top)")]
    ZeroModule,
    #[error(transparent)]
    Algebra(#[from] stanley::Error),
}

impl From<serde_json::Error> for ModelError {
    fn from(e: serde_json::Error) -> Self {
        ModelError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

/// A monomial as written in a file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MonomialSpec {
    Text(String),
    Exponents(Vec<u32>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub vars: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub top: Option<Vec<MonomialSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bottom: Option<Vec<MonomialSpec>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceSpec {
    pub rep: MonomialSpec,
    pub vars: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecompositionFile {
    pub vars: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub top: Option<Vec<MonomialSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bottom: Option<Vec<MonomialSpec>>,
    pub spaces: Vec<SpaceSpec>,
}

/// A chain `T_0 ⊆ … ⊆ T_r` with decompositions of the successive quotients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainFile {
    pub vars: Vec<String>,
    pub chain: Vec<Vec<MonomialSpec>>,
    pub decompositions: Vec<Vec<SpaceSpec>>,
}

/// Variable names and their positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variables {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

impl Variables {
    pub fn new(names: Vec<String>) -> Result<Self, ModelError> {
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if !valid_name(n) {
                return Err(ModelError::InvalidVariableName(n.clone()));
            }
            if index.insert(n.clone(), i).is_some() {
                return Err(ModelError::DuplicateVariable(n.clone()));
            }
        }
        Ok(Variables { names, index })
    }

    /// `x1, …, xn`.
    pub fn numbered(n: usize) -> Self {
        Variables::new((1..=n).map(|i| format!("x{i}")).collect()).expect("valid names")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Result<usize, ModelError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| ModelError::UnknownVariable(name.to_string()))
    }

    pub fn name(&self, k: usize) -> &str {
        &self.names[k]
    }

    /// Parses `factor ('*' factor)*` with `factor = name ('^' exponent)?`,
    /// or the literal `1`.
    pub fn parse_monomial(&self, text: &str) -> Result<ExponentVector, ModelError> {
        let bad = |offset: usize, message: &str| ModelError::BadMonomial {
            text: text.to_string(),
            offset,
            message: message.to_string(),
        };
        let mut exps = vec![0u32; self.len()];
        if text.trim() == "1" {
            return Ok(exps.into());
        }
        let mut offset = 0;
        for factor in text.split('*') {
            let trimmed = factor.trim();
            let start = offset + factor.len() - factor.trim_start().len();
            if trimmed.is_empty() {
                return Err(bad(start, "empty factor"));
            }
            let (name, exp) = match trimmed.split_once('^') {
                Some((name, e)) => {
                    let e: u32 = e
                        .trim()
                        .parse()
                        .map_err(|_| bad(start + name.len() + 1, "exponent must be a non-negative integer"))?;
                    (name.trim(), e)
                }
                None => (trimmed, 1),
            };
            let k = self.index_of(name)?;
            exps[k] += exp;
            offset += factor.len() + 1;
        }
        Ok(exps.into())
    }

    pub fn monomial(&self, spec: &MonomialSpec) -> Result<ExponentVector, ModelError> {
        match spec {
            MonomialSpec::Text(t) => self.parse_monomial(t),
            MonomialSpec::Exponents(e) if e.len() == self.len() => Ok(e.clone().into()),
            MonomialSpec::Exponents(e) => Err(ModelError::WrongLength(e.clone())),
        }
    }

    pub fn ideal(&self, specs: &[MonomialSpec]) -> Result<MonomialIdeal, ModelError> {
        let gens = specs
            .iter()
            .map(|s| self.monomial(s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(MonomialIdeal::new(self.len(), gens)?)
    }

    /// Canonical text for a monomial: factors in variable order, `1` for the
    /// empty product.
    pub fn format_monomial(&self, a: &ExponentVector) -> String {
        let parts: Vec<String> = a
            .as_slice()
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(k, &e)| {
                if e == 1 {
                    self.names[k].clone()
                } else {
                    format!("{}^{}", self.names[k], e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    pub fn format_ideal(&self, i: &MonomialIdeal) -> Vec<MonomialSpec> {
        i.gens()
            .iter()
            .map(|g| MonomialSpec::Text(self.format_monomial(g)))
            .collect()
    }

    fn space(&self, spec: &SpaceSpec) -> Result<StanleySpace, ModelError> {
        let rep = self.monomial(&spec.rep)?;
        let vars = spec
            .vars
            .iter()
            .map(|v| self.index_of(v))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(StanleySpace::new(rep, vars)?)
    }

    fn space_spec(&self, sp: &StanleySpace) -> SpaceSpec {
        SpaceSpec {
            rep: MonomialSpec::Text(self.format_monomial(sp.rep())),
            vars: sp.zset().iter().map(|&k| self.names[k].clone()).collect(),
        }
    }

    /// `top/bottom` with the omitted-field defaults.
    pub fn module(
        &self,
        top: Option<&[MonomialSpec]>,
        bottom: Option<&[MonomialSpec]>,
    ) -> Result<QuotientModule, ModelError> {
        let top = match top {
            Some(t) => self.ideal(t)?,
            None => MonomialIdeal::unit(self.len()),
        };
        let bottom = match bottom {
            Some(b) => self.ideal(b)?,
            None => MonomialIdeal::zero(self.len()),
        };
        QuotientModule::new(top, bottom).map_err(|e| match e {
            stanley::Error::ContainmentViolated { witness } => {
                ModelError::ContainmentViolated(self.format_monomial(&witness))
            }
            other => other.into(),
        })
    }
}

/// A parsed model: the module together with its variable names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Model {
    pub vars: Variables,
    pub module: QuotientModule,
}

impl Model {
    pub fn new(vars: Variables, module: QuotientModule) -> Self {
        Model { vars, module }
    }

    /// Serializes to the canonical model file: `top` is omitted when it is
    /// the unit ideal and `bottom` when it is zero.
    pub fn to_file(&self) -> ModelFile {
        let top = self.module.top();
        let bottom = self.module.bottom();
        ModelFile {
            vars: self.vars.names().to_vec(),
            top: (!top.is_unit()).then(|| self.vars.format_ideal(top)),
            bottom: (!bottom.is_zero()).then(|| self.vars.format_ideal(bottom)),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("model serializes")
    }
}

/// Parses a model file; the module must be nonzero.
pub fn parse_model(text: &str) -> Result<Model, ModelError> {
    let file: ModelFile = serde_json::from_str(text)?;
    let vars = Variables::new(file.vars)?;
    let module = vars.module(file.top.as_deref(), file.bottom.as_deref())?;
    if module.is_zero() {
        return Err(ModelError::ZeroModule);
    }
    Ok(Model { vars, module })
}

/// A parsed decomposition file with its variable names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedDecomposition {
    pub vars: Variables,
    pub decomposition: StanleyDecomposition,
}

impl NamedDecomposition {
    pub fn to_file(&self) -> DecompositionFile {
        let target = self.decomposition.target();
        DecompositionFile {
            vars: self.vars.names().to_vec(),
            top: (!target.top().is_unit()).then(|| self.vars.format_ideal(target.top())),
            bottom: (!target.bottom().is_zero()).then(|| self.vars.format_ideal(target.bottom())),
            spaces: self
                .decomposition
                .spaces()
                .iter()
                .map(|sp| self.vars.space_spec(sp))
                .collect(),
        }
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("decomposition serializes")
    }
}

pub fn parse_decomposition(text: &str) -> Result<NamedDecomposition, ModelError> {
    let file: DecompositionFile = serde_json::from_str(text)?;
    let vars = Variables::new(file.vars)?;
    let target = vars.module(file.top.as_deref(), file.bottom.as_deref())?;
    let spaces = file
        .spaces
        .iter()
        .map(|s| vars.space(s))
        .collect::<Result<Vec<_>, _>>()?;
    let decomposition = StanleyDecomposition::new(target, spaces)?;
    Ok(NamedDecomposition {
        vars,
        decomposition,
    })
}

/// A chain of ideals and the decompositions of its successive quotients.
#[derive(Debug, Clone)]
pub struct ParsedChain {
    pub vars: Variables,
    pub chain: Vec<MonomialIdeal>,
    pub decompositions: Vec<StanleyDecomposition>,
}

pub fn parse_chain(text: &str) -> Result<ParsedChain, ModelError> {
    let file: ChainFile = serde_json::from_str(text)?;
    let vars = Variables::new(file.vars)?;
    let chain = file
        .chain
        .iter()
        .map(|gens| vars.ideal(gens))
        .collect::<Result<Vec<_>, _>>()?;
    let mut decompositions = Vec::new();
    for (i, spaces) in file.decompositions.iter().enumerate() {
        let (Some(lower), Some(upper)) = (chain.get(i), chain.get(i + 1)) else {
            return Err(ModelError::Algebra(stanley::Error::InvalidInput(format!(
                "decomposition {} has no matching link in the chain",
                i + 1
            ))));
        };
        // A broken link is reported by chain_concat itself.
        let target = match QuotientModule::new(upper.clone(), lower.clone()) {
            Ok(t) => t,
            Err(stanley::Error::ContainmentViolated { .. }) => {
                return Err(ModelError::Algebra(stanley::Error::ChainBroken { index: i + 1 }))
            }
            Err(e) => return Err(e.into()),
        };
        let spaces = spaces
            .iter()
            .map(|s| vars.space(s))
            .collect::<Result<Vec<_>, _>>()?;
        decompositions.push(StanleyDecomposition::new(target, spaces)?);
    }
    Ok(ParsedChain {
        vars,
        chain,
        decompositions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_cyclic_model() {
        let m = parse_model(r#"{"vars":["x","y"],"bottom":["x*y","y^2"]}"#).unwrap();
        let i = MonomialIdeal::from_exponents(2, [[1, 1], [0, 2]]).unwrap();
        assert_eq!(m.module, QuotientModule::cyclic(i));
    }

    #[test]
    fn parses_ideal_quotient() {
        let m = parse_model(r#"{"vars":["x","y","z","t"],"top":["x","y","z"],"bottom":["x*t"]}"#)
            .unwrap();
        assert_eq!(m.module.top().gens().len(), 3);
        assert_eq!(m.module.bottom().gens(), &[vec![1, 0, 0, 1].into()]);
    }

    #[test]
    fn exponent_lists_and_text_agree() {
        let a = parse_model(r#"{"vars":["a","b"],"bottom":[[2,1]]}"#).unwrap();
        let b = parse_model(r#"{"vars":["a","b"],"bottom":["b * a^2"]}"#).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn degenerate_and_malformed_inputs_are_rejected() {
        assert!(matches!(
            parse_model(r#"{"vars":["x"],"bottom":["x^0"]}"#),
            Err(ModelError::ZeroModule)
        ));
        assert!(matches!(
            parse_model(r#"{"vars":["x"],"bottom":["w"]}"#),
            Err(ModelError::UnknownVariable(v)) if v == "w"
        ));
        assert!(matches!(
            parse_model(r#"{"vars":["x","y"],"top":["x"],"bottom":["y"]}"#),
            Err(ModelError::ContainmentViolated(w)) if w == "y"
        ));
        assert!(matches!(
            parse_model("{\"vars\":[\"x\"],\n \"bottom\": [\"x\",]}"),
            Err(ModelError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_model(r#"{"vars":["x","x"]}"#),
            Err(ModelError::DuplicateVariable(_))
        ));
        assert!(matches!(
            parse_model(r#"{"vars":["x"],"bottom":["x^-1"]}"#),
            Err(ModelError::BadMonomial { offset: 2, .. })
        ));
        assert!(matches!(
            parse_model(r#"{"vars":["x"],"bottom":["x**x"]}"#),
            Err(ModelError::BadMonomial { offset: 2, .. })
        ));
        assert!(matches!(
            parse_model(r#"{"vars":["x","y"],"bottom":[[1]]}"#),
            Err(ModelError::WrongLength(_))
        ));
        assert!(matches!(
            parse_model(r#"{"vars":["x"],"bottm":["x"]}"#),
            Err(ModelError::Parse { .. })
        ));
    }

    #[test]
    fn canonical_serialization() {
        let m = parse_model(r#"{"vars":["x","y"],"bottom":["y^2","x*y","x*y^3"]}"#).unwrap();
        assert_eq!(m.to_json(), r#"{"vars":["x","y"],"bottom":["y^2","x*y"]}"#);
        let unit_top = parse_model(r#"{"vars":["x"],"top":["1"],"bottom":["x^2"]}"#).unwrap();
        assert_eq!(unit_top.to_json(), r#"{"vars":["x"],"bottom":["x^2"]}"#);
    }

    #[test]
    fn decomposition_file_round_trip() {
        let text = r#"{"vars":["x","y","z"],"top":["x","y","z"],"spaces":[
            {"rep":"z","vars":["x","z"]},{"rep":"x","vars":["x","y"]},
            {"rep":"y","vars":["y","z"]},{"rep":"x*y*z","vars":["x","y","z"]}]}"#;
        let d = parse_decomposition(text).unwrap();
        assert_eq!(d.decomposition.validate().unwrap(), 2);
        let again = parse_decomposition(&d.to_json_pretty()).unwrap();
        assert_eq!(again, d);
    }

    #[test]
    fn chain_file() {
        let text = r#"{"vars":["x","y"],"chain":[[],["x*y"],["1"]],
            "decompositions":[[{"rep":"x*y","vars":["x","y"]}],
                              [{"rep":"1","vars":["x"]},{"rep":"y","vars":["y"]}]]}"#;
        let c = parse_chain(text).unwrap();
        assert_eq!(c.chain.len(), 3);
        let d = StanleyDecomposition::chain_concat(&c.chain, &c.decompositions).unwrap();
        assert_eq!(d.validate().unwrap(), 1);
    }
}
