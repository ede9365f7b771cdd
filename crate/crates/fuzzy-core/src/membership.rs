use serde::{Deserialize, Serialize};

use crate::FuzzyError;

/// Triangle with left foot `d`, peak `e` and right foot `f`.
///
/// Degenerate edges are allowed (`d == e` or `e == f`), which gives a
/// vertical side. Validity is checked at construction so evaluation never
/// fails.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TriangularMf {
    d: f64,
    e: f64,
    f: f64,
}

impl TriangularMf {
    pub fn new(d: f64, e: f64, f: f64) -> Result<Self, FuzzyError> {
        let finite = d.is_finite() && e.is_finite() && f.is_finite();
        if !finite || d > e || e > f {
            return Err(FuzzyError::InvalidTriangle { d, e, f });
        }
        Ok(Self { d, e, f })
    }

    pub fn left(&self) -> f64 {
        self.d
    }

    pub fn peak(&self) -> f64 {
        self.e
    }

    pub fn right(&self) -> f64 {
        self.f
    }

    pub fn degree(&self, x: f64) -> f64 {
        if x == self.e {
            return 1.0;
        }
        if x <= self.d || x >= self.f {
            return 0.0;
        }
        if x < self.e {
            (x - self.d) / (self.e - self.d)
        } else {
            (self.f - x) / (self.f - self.e)
        }
    }
}

impl<'de> Deserialize<'de> for TriangularMf {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            d: f64,
            e: f64,
            f: f64,
        }
        let raw = Raw::deserialize(de)?;
        TriangularMf::new(raw.d, raw.e, raw.f).map_err(serde::de::Error::custom)
    }
}

/// Degree of `x` in `mf`.
pub fn tri_membership(x: f64, mf: &TriangularMf) -> f64 {
    mf.degree(x)
}
