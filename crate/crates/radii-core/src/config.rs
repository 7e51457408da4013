use crate::error::{Error, Result};

/// Truncation control for all power-series evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesConfig {
    /// Relative term-size threshold at which summation stops.
    pub rel_tol: f64,
    /// Hard cap on the number of series terms; exceeding it is a
    /// `NonConvergence` error rather than a silent truncation.
    pub max_terms: usize,
    /// Minimum number of terms summed before the stopping rule applies,
    /// so that the leading coefficients can never be mistaken for a tail.
    pub min_terms: usize,
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig {
            rel_tol: 1e-17,
            max_terms: 500,
            min_terms: 8,
        }
    }
}

impl SeriesConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol < 1.0) {
            return Err(Error::InvalidArgument(format!(
                "rel_tol must lie in (0, 1), got {}",
                self.rel_tol
            )));
        }
        if self.min_terms < 1 || self.max_terms <= self.min_terms {
            return Err(Error::InvalidArgument(format!(
                "need max_terms > min_terms >= 1, got max_terms = {}, min_terms = {}",
                self.max_terms, self.min_terms
            )));
        }
        Ok(())
    }
}
