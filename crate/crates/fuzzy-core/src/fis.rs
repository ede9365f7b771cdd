use std::collections::BTreeMap;

use crate::defuzz::{abscissa, grid};
use crate::{FuzzyError, LinguisticVariable, DEFAULT_STEP};

/// Conjunctive rule: one term index per input, one output term index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FuzzyRule {
    pub antecedent: Vec<usize>,
    pub consequent: usize,
}

/// A compiled Mamdani system.
///
/// Output term memberships are tabulated once on the integration grid;
/// evaluation then only clips and aggregates those tables.
#[derive(Debug, Clone)]
pub struct Fis {
    inputs: Vec<LinguisticVariable>,
    output: LinguisticVariable,
    rules: Vec<FuzzyRule>,
    xs: Vec<f64>,
    weights: Vec<f64>,
    tables: Vec<Vec<f64>>,
}

impl Fis {
    pub fn new(
        inputs: Vec<LinguisticVariable>,
        output: LinguisticVariable,
        rules: Vec<FuzzyRule>,
    ) -> Result<Self, FuzzyError> {
        Self::with_step(inputs, output, rules, DEFAULT_STEP)
    }

    pub fn with_step(
        inputs: Vec<LinguisticVariable>,
        output: LinguisticVariable,
        rules: Vec<FuzzyRule>,
        step: f64,
    ) -> Result<Self, FuzzyError> {
        if inputs.is_empty() {
            return Err(FuzzyError::NoVariables);
        }
        if rules.is_empty() {
            return Err(FuzzyError::NoRules);
        }
        for (index, rule) in rules.iter().enumerate() {
            if rule.antecedent.len() != inputs.len() {
                return Err(FuzzyError::RuleArity {
                    index,
                    expected: inputs.len(),
                    got: rule.antecedent.len(),
                });
            }
            for (var, &t) in inputs.iter().zip(&rule.antecedent) {
                if t >= var.terms().len() {
                    return Err(FuzzyError::UnknownTerm {
                        var: var.name().to_string(),
                        label: format!("#{t}"),
                    });
                }
            }
            if rule.consequent >= output.terms().len() {
                return Err(FuzzyError::UnknownTerm {
                    var: output.name().to_string(),
                    label: format!("#{}", rule.consequent),
                });
            }
            if let Some(first) = rules[..index]
                .iter()
                .position(|r| r.antecedent == rule.antecedent)
            {
                return Err(FuzzyError::DuplicateAntecedent {
                    first,
                    second: index,
                });
            }
        }

        let (lo, hi) = output.domain();
        let (step, n) = grid(lo, hi, step)?;
        let xs: Vec<f64> = (0..=n).map(|i| abscissa(lo, hi, step, n, i)).collect();
        let weights = (0..=n)
            .map(|i| if i == 0 || i == n { 0.5 } else { 1.0 })
            .collect();
        let tables = output
            .terms()
            .iter()
            .map(|t| xs.iter().map(|&x| t.mf.degree(x)).collect())
            .collect();
        Ok(Self {
            inputs,
            output,
            rules,
            xs,
            weights,
            tables,
        })
    }

    pub fn inputs(&self) -> &[LinguisticVariable] {
        &self.inputs
    }

    pub fn output(&self) -> &LinguisticVariable {
        &self.output
    }

    pub fn rules(&self) -> &[FuzzyRule] {
        &self.rules
    }

    /// Firing strength per output term: max over rules of the min over
    /// antecedent degrees.
    pub fn term_strengths(&self, inputs: &[f64]) -> Result<Vec<f64>, FuzzyError> {
        if inputs.len() != self.inputs.len() {
            return Err(FuzzyError::InputArity {
                expected: self.inputs.len(),
                got: inputs.len(),
            });
        }
        let mut degrees = Vec::with_capacity(inputs.len());
        for (var, &x) in self.inputs.iter().zip(inputs) {
            if !x.is_finite() {
                return Err(FuzzyError::NonFiniteInput(var.name().to_string()));
            }
            degrees.push(var.fuzzify(x));
        }
        let mut strengths = vec![0.0f64; self.output.terms().len()];
        for rule in &self.rules {
            let w = rule
                .antecedent
                .iter()
                .zip(&degrees)
                .map(|(&t, d)| d[t])
                .fold(1.0f64, f64::min);
            let s = &mut strengths[rule.consequent];
            *s = s.max(w);
        }
        Ok(strengths)
    }

    /// Crisp output for inputs given in input-variable order. Inputs outside
    /// a variable's domain are clamped to it.
    pub fn evaluate(&self, inputs: &[f64]) -> Result<f64, FuzzyError> {
        let strengths = self.term_strengths(inputs)?;
        let active: Vec<(usize, f64)> = strengths
            .iter()
            .copied()
            .enumerate()
            .filter(|&(_, s)| s > 0.0)
            .collect();
        if active.is_empty() {
            return Err(FuzzyError::NoRuleCoverage);
        }
        let mut num = 0.0;
        let mut den = 0.0;
        for (i, (&x, &w)) in self.xs.iter().zip(&self.weights).enumerate() {
            let mu = active
                .iter()
                .map(|&(t, s)| self.tables[t][i].min(s))
                .fold(0.0f64, f64::max);
            num += w * mu * x;
            den += w * mu;
        }
        if den <= 0.0 {
            return Err(FuzzyError::ZeroMass);
        }
        Ok(num / den)
    }

    /// Same as [`Fis::evaluate`] with inputs keyed by variable name.
    pub fn evaluate_map(&self, inputs: &BTreeMap<String, f64>) -> Result<f64, FuzzyError> {
        if let Some(extra) = inputs
            .keys()
            .find(|k| !self.inputs.iter().any(|v| v.name() == k.as_str()))
        {
            return Err(FuzzyError::UnknownVariable(extra.clone()));
        }
        let ordered = self
            .inputs
            .iter()
            .map(|v| {
                inputs
                    .get(v.name())
                    .copied()
                    .ok_or_else(|| FuzzyError::MissingInput(v.name().to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        self.evaluate(&ordered)
    }
}
