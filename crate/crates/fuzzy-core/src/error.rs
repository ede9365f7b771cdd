use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FuzzyError {
    #[error("invalid triangle ({d}, {e}, {f}): feet and peak must satisfy d <= e <= f")]
    InvalidTriangle { d: f64, e: f64, f: f64 },
    #[error("variable `{0}`: domain must be a finite interval with lo < hi")]
    InvalidDomain(String),
    #[error("variable `{0}`: term peaks must be strictly increasing")]
    UnorderedPeaks(String),
    #[error("variable `{var}`: duplicate term label `{label}`")]
    DuplicateLabel { var: String, label: String },
    #[error("a partition needs at least 2 terms, got {0}")]
    TooFewTerms(usize),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{var}` has no term `{label}`")]
    UnknownTerm { var: String, label: String },
    #[error("rule {index}: expected {expected} antecedents, got {got}")]
    RuleArity {
        index: usize,
        expected: usize,
        got: usize,
    },
    #[error("rules {first} and {second} share the same antecedent")]
    DuplicateAntecedent { first: usize, second: usize },
    #[error("rule list is empty")]
    NoRules,
    #[error("a FIS needs at least one input and an output variable")]
    NoVariables,
    #[error("expected {expected} inputs, got {got}")]
    InputArity { expected: usize, got: usize },
    #[error("input for `{0}` is not a finite number")]
    NonFiniteInput(String),
    #[error("missing input for `{0}`")]
    MissingInput(String),
    #[error("no rule coverage: no rule fires for these inputs")]
    NoRuleCoverage,
    #[error("aggregate curve has zero mass")]
    ZeroMass,
    #[error("integration step must be positive and finite")]
    InvalidStep,
    #[error("rulebase format: {0}")]
    Format(String),
}
