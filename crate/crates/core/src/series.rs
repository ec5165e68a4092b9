//! Hilbert series of graded quotients, represented as polynomials with
//! nonnegative integer coefficients (all quotients in this crate are finite
//! dimensional).

use std::fmt;

/// Coefficients of a polynomial in `t`; index is the degree. Trailing zeros
/// are trimmed so equal series compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct HilbertSeries {
    coeffs: Vec<u64>,
}

impl HilbertSeries {
    pub fn from_coeffs(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        HilbertSeries { coeffs }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Coefficient of `t^degree` (zero past the end).
    pub fn coefficient(&self, degree: usize) -> u64 {
        self.coeffs.get(degree).copied().unwrap_or(0)
    }

    /// Sum of all coefficients: the total dimension of the quotient.
    pub fn dimension(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    /// Degree of the top nonzero term, if any.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True when every coefficient of `self` is at most the matching
    /// coefficient of `other`.
    pub fn le_coefficientwise(&self, other: &HilbertSeries) -> bool {
        (0..self.coeffs.len()).all(|d| self.coefficient(d) <= other.coefficient(d))
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (degree, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (degree, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{c}t")?,
                (_, 1) => write!(f, "t^{degree}")?,
                (_, _) => write!(f, "{c}t^{degree}")?,
            }
        }
        Ok(())
    }
}
