//! JSON rulebase files.
//!
//! ```json
//! { "variables": [ { "name": "x", "domain": [0, 1],
//!                    "terms": [ { "label": "lo", "d": -1, "e": 0, "f": 1 } ] } ],
//!   "rules": [ { "if": { "x": "lo" }, "then": "hi" } ] }
//! ```
//!
//! The last variable listed is the output; all others are inputs, in order.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::{Fis, FuzzyError, FuzzyRule, LinguisticVariable, Term, TriangularMf};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermSpec {
    pub label: String,
    pub d: f64,
    pub e: f64,
    pub f: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VariableSpec {
    pub name: String,
    pub domain: [f64; 2],
    pub terms: Vec<TermSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RuleSpec {
    #[serde(rename = "if")]
    pub antecedent: BTreeMap<String, String>,
    #[serde(rename = "then")]
    pub consequent: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RuleFile {
    pub variables: Vec<VariableSpec>,
    pub rules: Vec<RuleSpec>,
}

impl VariableSpec {
    fn build(&self) -> Result<LinguisticVariable, FuzzyError> {
        let terms = self
            .terms
            .iter()
            .map(|t| {
                Ok(Term {
                    label: t.label.clone(),
                    mf: TriangularMf::new(t.d, t.e, t.f)?,
                })
            })
            .collect::<Result<Vec<_>, FuzzyError>>()?;
        LinguisticVariable::new(self.name.clone(), (self.domain[0], self.domain[1]), terms)
    }
}

impl RuleFile {
    pub fn from_json(text: &str) -> Result<Self, FuzzyError> {
        serde_json::from_str(text).map_err(|e| FuzzyError::Format(e.to_string()))
    }

    pub fn compile(&self) -> Result<Fis, FuzzyError> {
        if self.variables.len() < 2 {
            return Err(FuzzyError::NoVariables);
        }
        let mut vars = self
            .variables
            .iter()
            .map(VariableSpec::build)
            .collect::<Result<Vec<_>, _>>()?;
        let output = vars.pop().expect("checked length");
        for v in &vars {
            if v.name() == output.name() || vars.iter().filter(|o| o.name() == v.name()).count() > 1 {
                return Err(FuzzyError::Format(format!("variable `{}` declared twice", v.name())));
            }
        }
        let mut rules = Vec::with_capacity(self.rules.len());
        for (index, spec) in self.rules.iter().enumerate() {
            if let Some(k) = spec
                .antecedent
                .keys()
                .find(|k| !vars.iter().any(|v| v.name() == k.as_str()))
            {
                return Err(FuzzyError::UnknownVariable(k.clone()));
            }
            if spec.antecedent.len() != vars.len() {
                return Err(FuzzyError::RuleArity {
                    index,
                    expected: vars.len(),
                    got: spec.antecedent.len(),
                });
            }
            let antecedent = vars
                .iter()
                .map(|v| {
                    let label = &spec.antecedent[v.name()];
                    v.term_index(label).ok_or_else(|| FuzzyError::UnknownTerm {
                        var: v.name().to_string(),
                        label: label.clone(),
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            let consequent =
                output
                    .term_index(&spec.consequent)
                    .ok_or_else(|| FuzzyError::UnknownTerm {
                        var: output.name().to_string(),
                        label: spec.consequent.clone(),
                    })?;
            rules.push(FuzzyRule {
                antecedent,
                consequent,
            });
        }
        Fis::new(vars, output, rules)
    }
}

impl std::str::FromStr for Fis {
    type Err = FuzzyError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        RuleFile::from_json(text)?.compile()
    }
}
