//! Seeded random elements for spot checks and property tests.

use rand::Rng;

use crate::basering::{BaseElement, BaseRing, Exponents};

use super::element::SkewElement;
use super::ring::SkewRing;

/// A sum of up to `max_terms` base monomials of total degree `<= max_deg`
/// with small integer coefficients.
pub fn random_base_element<R: Rng>(base: &BaseRing, rng: &mut R, max_deg: u32, max_terms: usize) -> BaseElement {
    let m = base.m();
    let mut out = BaseElement::zero();
    for _ in 0..rng.gen_range(1..=max_terms.max(1)) {
        let mut e = Exponents::zero(m);
        if m > 0 {
            for _ in 0..rng.gen_range(0..=max_deg) {
                e.0[rng.gen_range(0..m)] += 1;
            }
        }
        let c = base.field().from_i64(rng.gen_range(-3..=3));
        out = base.add(&out, &base.monomial(e, c));
    }
    out
}

/// A sum of up to `max_terms` terms `r x^alpha` with `|alpha| <= max_deg`
/// and base coefficients of degree at most 1.
pub fn random_element<R: Rng>(ring: &SkewRing, rng: &mut R, max_deg: u32, max_terms: usize) -> SkewElement {
    let n = ring.n();
    let mut out = ring.zero();
    for _ in 0..rng.gen_range(1..=max_terms.max(1)) {
        let mut alpha = Exponents::zero(n);
        for _ in 0..rng.gen_range(0..=max_deg) {
            alpha.0[rng.gen_range(0..n)] += 1;
        }
        let r = random_base_element(ring.base(), rng, 1, 2);
        out = ring.add(&out, &ring.monomial(alpha, r));
    }
    out
}

/// An element whose monomials all have total degree exactly `deg`.
pub fn random_homogeneous<R: Rng>(ring: &SkewRing, rng: &mut R, deg: u32, max_terms: usize) -> SkewElement {
    let n = ring.n();
    let mut out = ring.zero();
    for _ in 0..rng.gen_range(1..=max_terms.max(1)) {
        let mut alpha = Exponents::zero(n);
        for _ in 0..deg {
            alpha.0[rng.gen_range(0..n)] += 1;
        }
        let r = random_base_element(ring.base(), rng, 1, 2);
        out = ring.add(&out, &ring.monomial(alpha, r));
    }
    out
}
