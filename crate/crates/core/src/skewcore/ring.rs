use std::collections::btree_map::Entry;
use std::collections::HashMap;
use std::sync::Mutex;

use crate::basering::{BaseElement, BaseRing, Exponents};
use crate::error::{Result, SpbwError};
use crate::field::Scalar;

use super::element::{SkewElement, SkewMonomial};
use super::expr::RawExpr;
use super::presentation::Presentation;
use super::validate::validate_presentation;

/// Arithmetic in a skew PBW extension by rewriting to standard monomials.
///
/// Two rules are used: `x_i r -> sigma_i(r) x_i + delta_i(r)` moves base
/// coefficients to the left, and `x_j x_i -> c x_i x_j + d0 + sum dlin_k x_k`
/// for `j > i` sorts variables. Products `x_i * x^beta` are memoized per ring.
#[derive(Debug)]
pub struct SkewRing {
    pres: Presentation,
    base: BaseRing,
    sigma_identity: Vec<bool>,
    delta_zero: Vec<bool>,
    var_mono_cache: Mutex<HashMap<(usize, SkewMonomial), SkewElement>>,
}

impl Clone for SkewRing {
    fn clone(&self) -> Self {
        SkewRing::from_parts(self.pres.clone(), self.base.clone())
    }
}

impl SkewRing {
    /// Builds the ring after checking the presentation, including all overlaps.
    pub fn new(pres: Presentation) -> Result<Self> {
        let report = validate_presentation(&pres)?;
        if let Some(err) = report.failures.into_iter().next() {
            return Err(err);
        }
        Self::unchecked(pres)
    }

    /// Builds the ring after structural checks only. Arithmetic is
    /// deterministic but need not be associative if overlaps diverge.
    pub fn unchecked(pres: Presentation) -> Result<Self> {
        let base = pres.check_structure()?;
        Ok(SkewRing::from_parts(pres, base))
    }

    fn from_parts(pres: Presentation, base: BaseRing) -> Self {
        let sigma_identity = pres.sigma.iter().map(|s| base.is_identity(s)).collect();
        let delta_zero = pres
            .delta
            .iter()
            .map(|d| d.images.iter().all(BaseElement::is_zero))
            .collect();
        SkewRing {
            pres,
            base,
            sigma_identity,
            delta_zero,
            var_mono_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn base(&self) -> &BaseRing {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.pres.n()
    }

    pub fn zero(&self) -> SkewElement {
        SkewElement::zero()
    }

    pub fn one(&self) -> SkewElement {
        self.from_base(self.base.one())
    }

    pub fn from_base(&self, r: BaseElement) -> SkewElement {
        self.monomial(Exponents::zero(self.n()), r)
    }

    pub fn scalar(&self, c: Scalar) -> SkewElement {
        self.from_base(self.base.scalar(c))
    }

    pub fn var(&self, i: usize) -> SkewElement {
        self.monomial(Exponents::unit(self.n(), i), self.base.one())
    }

    pub fn monomial(&self, alpha: SkewMonomial, r: BaseElement) -> SkewElement {
        let mut out = SkewElement::zero();
        if !r.is_zero() {
            out.terms.insert(alpha, r);
        }
        out
    }

    fn add_term(&self, out: &mut SkewElement, alpha: SkewMonomial, r: BaseElement) {
        if r.is_zero() {
            return;
        }
        match out.terms.entry(alpha) {
            Entry::Vacant(v) => {
                v.insert(r);
            }
            Entry::Occupied(mut o) => {
                let s = self.base.add(o.get(), &r);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    fn add_into(&self, out: &mut SkewElement, other: SkewElement) {
        for (a, r) in other.terms {
            self.add_term(out, a, r);
        }
    }

    pub fn add(&self, a: &SkewElement, b: &SkewElement) -> SkewElement {
        let mut out = a.clone();
        self.add_into(&mut out, b.clone());
        out
    }

    pub fn sub(&self, a: &SkewElement, b: &SkewElement) -> SkewElement {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &SkewElement) -> SkewElement {
        SkewElement {
            terms: a
                .terms
                .iter()
                .map(|(k, r)| (k.clone(), self.base.neg(r)))
                .collect(),
        }
    }

    /// `r * a` for `r` in the base ring (left multiplication only touches
    /// coefficients).
    pub fn scale_left(&self, r: &BaseElement, a: &SkewElement) -> SkewElement {
        let mut out = SkewElement::zero();
        if r.is_zero() {
            return out;
        }
        if r.is_one() {
            return a.clone();
        }
        for (alpha, c) in &a.terms {
            let p = self.base.mul(r, c);
            if !p.is_zero() {
                out.terms.insert(alpha.clone(), p);
            }
        }
        out
    }

    fn check(&self, a: &SkewElement) -> Result<()> {
        let n_ok = a.arity().is_none_or(|k| k == self.n());
        let m_ok = a
            .terms
            .values()
            .all(|r| r.arity().is_none_or(|k| k == self.base.m()));
        if n_ok && m_ok {
            Ok(())
        } else {
            Err(SpbwError::MismatchedRing)
        }
    }

    pub fn checked_add(&self, a: &SkewElement, b: &SkewElement) -> Result<SkewElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add(a, b))
    }

    pub fn checked_mul(&self, a: &SkewElement, b: &SkewElement) -> Result<SkewElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.multiply(a, b))
    }

    /// `x_i * x^beta` in normal form.
    fn var_mono(&self, i: usize, beta: &SkewMonomial) -> SkewElement {
        let key = (i, beta.clone());
        if let Some(hit) = self.var_mono_cache.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let result = match beta.0.iter().position(|&e| e > 0) {
            Some(j) if j < i => {
                // x_i x_j x^rest = (c x_j x_i + d0 + sum dlin_k x_k) x^rest
                let mut rest = beta.clone();
                rest.0[j] -= 1;
                let rel = self.pres.rel(j, i);
                let inner = self.var_mono(i, &rest);
                let mut out = self.scale_left(&rel.c, &self.var_times(j, &inner));
                self.add_term(&mut out, rest.clone(), rel.d0.clone());
                for (k, coeff) in rel.dlin.iter().enumerate() {
                    if !coeff.is_zero() {
                        let t = self.scale_left(coeff, &self.var_mono(k, &rest));
                        self.add_into(&mut out, t);
                    }
                }
                out
            }
            _ => {
                let mut next = beta.clone();
                next.0[i] = next.0[i].checked_add(1).expect("exponent overflow");
                self.monomial(next, self.base.one())
            }
        };
        debug_assert!(result.filtration_degree() <= beta.total() as i64 + 1);
        self.var_mono_cache
            .lock()
            .unwrap()
            .insert(key, result.clone());
        result
    }

    /// `x_i * f`
    fn var_times(&self, i: usize, f: &SkewElement) -> SkewElement {
        let mut out = SkewElement::zero();
        for (beta, r) in &f.terms {
            let moved = if self.sigma_identity[i] {
                r.clone()
            } else {
                self.base.apply_endo(&self.pres.sigma[i], r)
            };
            let prod = self.scale_left(&moved, &self.var_mono(i, beta));
            self.add_into(&mut out, prod);
            if !self.delta_zero[i] {
                let d = self
                    .base
                    .apply_der(&self.pres.sigma[i], &self.pres.delta[i], r);
                self.add_term(&mut out, beta.clone(), d);
            }
        }
        out
    }

    /// `x^alpha * f`
    pub fn monomial_times(&self, alpha: &SkewMonomial, f: &SkewElement) -> SkewElement {
        let mut cur = f.clone();
        for i in (0..self.n()).rev() {
            for _ in 0..alpha.0[i] {
                cur = self.var_times(i, &cur);
            }
        }
        cur
    }

    pub fn multiply(&self, a: &SkewElement, b: &SkewElement) -> SkewElement {
        let mut out = SkewElement::zero();
        for (alpha, r) in &a.terms {
            let t = self.scale_left(r, &self.monomial_times(alpha, b));
            self.add_into(&mut out, t);
        }
        out
    }

    pub fn pow(&self, a: &SkewElement, k: u32) -> SkewElement {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.multiply(&acc, a);
        }
        acc
    }

    pub fn normal_form(&self, e: &RawExpr) -> SkewElement {
        match e {
            RawExpr::Const(c) => self.scalar(c.clone()),
            RawExpr::BaseVar(j) => self.from_base(self.base.var(*j)),
            RawExpr::SkewVar(i) => self.var(*i),
            RawExpr::Sum(items) => items
                .iter()
                .fold(self.zero(), |acc, t| self.add(&acc, &self.normal_form(t))),
            RawExpr::Product(items) => items
                .iter()
                .fold(self.one(), |acc, t| self.multiply(&acc, &self.normal_form(t))),
            RawExpr::Neg(inner) => self.neg(&self.normal_form(inner)),
            RawExpr::Pow(inner, k) => self.pow(&self.normal_form(inner), *k),
        }
    }

    pub fn filtration_degree(&self, a: &SkewElement) -> i64 {
        a.filtration_degree()
    }

    /// Top filtration-degree part of `a`, read in the associated
    /// quasi-commutative extension (same monomials and coefficients).
    pub fn principal_symbol(&self, a: &SkewElement) -> Result<SkewElement> {
        let top = a.filtration_degree();
        if top < 0 {
            return Err(SpbwError::Precondition("the zero element has no symbol".into()));
        }
        Ok(SkewElement {
            terms: a
                .terms
                .iter()
                .filter(|(alpha, _)| alpha.total() as i64 == top)
                .map(|(k, r)| (k.clone(), r.clone()))
                .collect(),
        })
    }

    /// Canonical printing, e.g. `(2)·x1^1·x2^1 + (1)`.
    pub fn format(&self, a: &SkewElement) -> String {
        if a.is_zero() {
            return "0".into();
        }
        a.terms
            .iter()
            .rev()
            .map(|(alpha, r)| {
                let mut s = format!("({})", self.base.format(r));
                for (name, &k) in self.pres.xnames.iter().zip(&alpha.0) {
                    if k > 0 {
                        s.push_str(&format!("·{name}^{k}"));
                    }
                }
                s
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}
