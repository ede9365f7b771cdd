use crate::{FuzzyError, TriangularMf};

#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub label: String,
    pub mf: TriangularMf,
}

/// A named crisp domain covered by ordered fuzzy terms.
#[derive(Debug, Clone, PartialEq)]
pub struct LinguisticVariable {
    name: String,
    lo: f64,
    hi: f64,
    terms: Vec<Term>,
}

impl LinguisticVariable {
    pub fn new(
        name: impl Into<String>,
        domain: (f64, f64),
        terms: Vec<Term>,
    ) -> Result<Self, FuzzyError> {
        let name = name.into();
        let (lo, hi) = domain;
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(FuzzyError::InvalidDomain(name));
        }
        if terms.is_empty() {
            return Err(FuzzyError::TooFewTerms(0));
        }
        for w in terms.windows(2) {
            if w[0].mf.peak() >= w[1].mf.peak() {
                return Err(FuzzyError::UnorderedPeaks(name));
            }
        }
        for (i, t) in terms.iter().enumerate() {
            if terms[..i].iter().any(|o| o.label == t.label) {
                return Err(FuzzyError::DuplicateLabel {
                    var: name,
                    label: t.label.clone(),
                });
            }
        }
        Ok(Self {
            name,
            lo,
            hi,
            terms,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.lo, self.hi)
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn term_index(&self, label: &str) -> Option<usize> {
        self.terms.iter().position(|t| t.label == label)
    }

    pub fn clamp(&self, x: f64) -> f64 {
        x.clamp(self.lo, self.hi)
    }

    /// Membership of `x` (clamped to the domain) in every term, in term order.
    pub fn fuzzify(&self, x: f64) -> Vec<f64> {
        let x = self.clamp(x);
        self.terms.iter().map(|t| t.mf.degree(x)).collect()
    }
}

/// Evenly spaced triangles over `domain`, one per label.
///
/// Each term's feet sit on its neighbours' peaks. The two end terms keep
/// their full triangle shape, with the outer foot one step past the domain
/// edge, so they read 1 exactly at the edge and integrate as half-triangles.
pub fn uniform_partition(
    name: impl Into<String>,
    domain: (f64, f64),
    labels: &[&str],
) -> Result<LinguisticVariable, FuzzyError> {
    let n = labels.len();
    if n < 2 {
        return Err(FuzzyError::TooFewTerms(n));
    }
    let (lo, hi) = domain;
    let step = (hi - lo) / (n - 1) as f64;
    let peak = |k: usize| {
        if k == n - 1 {
            hi
        } else {
            lo + k as f64 * step
        }
    };
    let terms = labels
        .iter()
        .enumerate()
        .map(|(k, label)| {
            let e = peak(k);
            Ok(Term {
                label: (*label).to_string(),
                mf: TriangularMf::new(e - step, e, e + step)?,
            })
        })
        .collect::<Result<Vec<_>, FuzzyError>>()?;
    LinguisticVariable::new(name, domain, terms)
}
