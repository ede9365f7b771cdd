use crate::FuzzyError;

/// Integration step used by [`crate::Fis`].
pub const DEFAULT_STEP: f64 = 1e-4;

/// A membership curve sampled at `lo, lo + step, ..., lo + (n-1)*step`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledCurve {
    pub lo: f64,
    pub step: f64,
    pub values: Vec<f64>,
}

impl SampledCurve {
    /// Samples `mu` over `[lo, hi]`. The step is shrunk slightly when it
    /// does not divide the interval, so both ends are always sampled.
    pub fn sample(
        lo: f64,
        hi: f64,
        step: f64,
        mu: impl Fn(f64) -> f64,
    ) -> Result<Self, FuzzyError> {
        let (step, n) = grid(lo, hi, step)?;
        let values = (0..=n).map(|i| mu(abscissa(lo, hi, step, n, i))).collect();
        Ok(Self { lo, step, values })
    }

    pub fn x(&self, i: usize) -> f64 {
        self.lo + i as f64 * self.step
    }
}

pub(crate) fn grid(lo: f64, hi: f64, step: f64) -> Result<(f64, usize), FuzzyError> {
    if !(step > 0.0 && step.is_finite() && lo.is_finite() && hi.is_finite() && hi > lo) {
        return Err(FuzzyError::InvalidStep);
    }
    let n = ((hi - lo) / step - 1e-9).ceil().max(1.0) as usize;
    Ok(((hi - lo) / n as f64, n))
}

// Last sample pinned to `hi` so accumulated rounding never leaves the domain.
pub(crate) fn abscissa(lo: f64, hi: f64, step: f64, n: usize, i: usize) -> f64 {
    if i == n {
        hi
    } else {
        lo + i as f64 * step
    }
}

/// Centre of mass of a sampled curve, trapezoidal rule.
pub fn defuzzify_centroid(curve: &SampledCurve) -> Result<f64, FuzzyError> {
    let n = curve.values.len();
    if n < 2 {
        return Err(FuzzyError::ZeroMass);
    }
    let mut num = 0.0;
    let mut den = 0.0;
    for (i, &mu) in curve.values.iter().enumerate() {
        let w = if i == 0 || i == n - 1 { 0.5 } else { 1.0 };
        num += w * mu * curve.x(i);
        den += w * mu;
    }
    if den <= 0.0 {
        return Err(FuzzyError::ZeroMass);
    }
    Ok(num / den)
}
