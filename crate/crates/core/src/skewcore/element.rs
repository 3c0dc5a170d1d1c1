use std::collections::BTreeMap;

use crate::basering::{BaseElement, Exponents};

/// A standard monomial `x^alpha`, ordered graded-lexicographically.
pub type SkewMonomial = Exponents;

/// An element of `A` in normal form: left coefficients from `R` on standard
/// monomials, zero coefficients dropped.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SkewElement {
    pub(crate) terms: BTreeMap<SkewMonomial, BaseElement>,
}

impl SkewElement {
    pub fn zero() -> Self {
        SkewElement::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&SkewMonomial, &BaseElement)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, alpha: &SkewMonomial) -> Option<&BaseElement> {
        self.terms.get(alpha)
    }

    pub fn arity(&self) -> Option<usize> {
        self.terms.keys().next().map(|a| a.0.len())
    }

    /// `-1` for zero, otherwise the largest total degree of a monomial.
    pub fn filtration_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|a| a.total() as i64)
            .max()
            .unwrap_or(-1)
    }
}
