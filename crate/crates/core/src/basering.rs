//! The commutative base ring `R = K[y_1..y_m]/M` with `M` a monomial ideal,
//! together with endomorphisms and sigma-derivations of `R`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Result, SpbwError};
use crate::field::{FieldSpec, Scalar};
use crate::linalg;

/// A pair of nonnegative degrees. Single gradings use `(d, 0)`.
pub type Bideg = (u32, u32);

/// Exponent vector ordered graded-lexicographically: total degree first,
/// then the exponent of the first variable, and so on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Exponents(pub Vec<u32>);

impl Exponents {
    pub fn zero(len: usize) -> Self {
        Exponents(vec![0; len])
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = vec![0; len];
        v[i] = 1;
        Exponents(v)
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Exponents) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_add(&self, other: &Exponents) -> Exponents {
        Exponents(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        )
    }

    pub fn weighted(&self, weights: &[u32]) -> u32 {
        self.0.iter().zip(weights).map(|(e, w)| e * w).sum()
    }

    pub fn bidegree(&self, weights: &[Bideg]) -> Bideg {
        self.0.iter().zip(weights).fold((0, 0), |(a, b), (e, w)| {
            (a + e * w.0, b + e * w.1)
        })
    }
}

impl Ord for Exponents {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Exponents {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponent vectors `e` with `sum e_i * weights_i == target`. Variables of
/// weight `(0, 0)` need a cap (exclusive upper bound on their exponent).
pub fn exponent_vectors(weights: &[Bideg], target: Bideg, caps: &[Option<u32>]) -> Vec<Vec<u32>> {
    fn rec(
        weights: &[Bideg],
        caps: &[Option<u32>],
        idx: usize,
        rem: Bideg,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if idx == weights.len() {
            if rem == (0, 0) {
                out.push(cur.clone());
            }
            return;
        }
        let w = weights[idx];
        let mut limit = match caps[idx] {
            Some(c) => c.saturating_sub(1),
            None => u32::MAX,
        };
        if let Some(q) = rem.0.checked_div(w.0) {
            limit = limit.min(q);
        }
        if let Some(q) = rem.1.checked_div(w.1) {
            limit = limit.min(q);
        }
        assert!(limit != u32::MAX, "unbounded enumeration for a degree-zero variable");
        for e in 0..=limit {
            let used = (e * w.0, e * w.1);
            if used.0 > rem.0 || used.1 > rem.1 {
                break;
            }
            cur.push(e);
            rec(weights, caps, idx + 1, (rem.0 - used.0, rem.1 - used.1), cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(weights, caps, 0, target, &mut Vec::new(), &mut out);
    out
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseRingSpec {
    pub names: Vec<String>,
    pub degrees: Vec<u32>,
    pub ideal: Vec<Vec<u32>>,
    pub field: FieldSpec,
}

/// Outcome of [`validate_base_spec`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseValidation {
    pub finite_dimensional: bool,
    /// `R` is local with Jacobson radical `<y_1..y_m>`.
    pub local: bool,
    pub warnings: Vec<String>,
    pub minimized_ideal: Vec<Vec<u32>>,
}

impl BaseRingSpec {
    pub fn field_only(field: FieldSpec) -> Self {
        BaseRingSpec {
            names: Vec::new(),
            degrees: Vec::new(),
            ideal: Vec::new(),
            field,
        }
    }

    pub fn polynomial(field: FieldSpec, names: &[&str]) -> Self {
        BaseRingSpec {
            names: names.iter().map(|s| s.to_string()).collect(),
            degrees: vec![1; names.len()],
            ideal: Vec::new(),
            field,
        }
    }

    pub fn with_ideal(mut self, ideal: Vec<Vec<u32>>) -> Self {
        self.ideal = ideal;
        self
    }

    pub fn m(&self) -> usize {
        self.names.len()
    }
}

pub fn validate_base_spec(spec: &BaseRingSpec) -> Result<BaseValidation> {
    spec.field.validate()?;
    let m = spec.m();
    let mut seen = HashSet::new();
    for name in &spec.names {
        if !is_identifier(name) {
            return Err(SpbwError::InvalidName(name.clone()));
        }
        if !seen.insert(name.as_str()) {
            return Err(SpbwError::DuplicateName(name.clone()));
        }
    }
    if spec.degrees.len() != m || spec.degrees.contains(&0) {
        return Err(SpbwError::Malformed(
            "base degrees must be one positive integer per variable".into(),
        ));
    }
    for g in &spec.ideal {
        if g.len() != m {
            return Err(SpbwError::InvalidIdealGenerator(format!(
                "{g:?} has the wrong length"
            )));
        }
        if g.iter().sum::<u32>() < 2 {
            return Err(SpbwError::InvalidIdealGenerator(format!(
                "{g:?} has degree below 2"
            )));
        }
    }
    let mut warnings = Vec::new();
    let mut minimized: Vec<Vec<u32>> = Vec::new();
    for (k, g) in spec.ideal.iter().enumerate() {
        let ge = Exponents(g.clone());
        let redundant = spec.ideal.iter().enumerate().any(|(l, h)| {
            let he = Exponents(h.clone());
            l != k && he.divides(&ge) && (h != g || l < k)
        });
        if redundant {
            warnings.push(format!("redundant ideal generator {g:?} removed"));
        } else {
            minimized.push(g.clone());
        }
    }
    let finite_dimensional = (0..m).all(|j| pure_power(&minimized, j).is_some());
    Ok(BaseValidation {
        finite_dimensional,
        local: finite_dimensional,
        warnings,
        minimized_ideal: minimized,
    })
}

fn pure_power(ideal: &[Vec<u32>], j: usize) -> Option<u32> {
    ideal
        .iter()
        .filter(|g| g.iter().enumerate().all(|(k, &e)| k == j || e == 0))
        .map(|g| g[j])
        .min()
}

/// An element of `R` in normal form: no exponent vector is divisible by an
/// ideal generator and no coefficient is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BaseElement {
    terms: BTreeMap<Exponents, Scalar>,
}

impl BaseElement {
    pub fn zero() -> Self {
        BaseElement::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| e.0.iter().all(|&k| k == 0) && c.is_one())
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: &Exponents) -> Option<&Scalar> {
        self.terms.get(e)
    }

    /// The scalar value if the element lies in `K`.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => None,
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.is_zero().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_scalar(&self) -> bool {
        self.is_zero() || self.as_scalar().is_some()
    }

    pub fn arity(&self) -> Option<usize> {
        self.terms.keys().next().map(|e| e.0.len())
    }

    fn add_term(&mut self, e: Exponents, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn from_terms(ring: &BaseRing, terms: impl IntoIterator<Item = (Vec<u32>, Scalar)>) -> Self {
        let mut out = BaseElement::zero();
        for (e, c) in terms {
            let e = Exponents(e);
            if !ring.in_ideal(&e) {
                out.add_term(e, c);
            }
        }
        out
    }

    pub fn fmt_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = format_monomial(&e.0, names, "*");
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }
}

pub(crate) fn format_monomial(e: &[u32], names: &[String], sep: &str) -> String {
    e.iter()
        .zip(names)
        .filter(|(&k, _)| k > 0)
        .map(|(&k, n)| if k == 1 { n.clone() } else { format!("{n}^{k}") })
        .collect::<Vec<_>>()
        .join(sep)
}

/// Images of the base generators under a ring endomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndoMap {
    pub images: Vec<BaseElement>,
}

/// Images of the base generators under a sigma-derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerMap {
    pub images: Vec<BaseElement>,
}

/// What is known about injectivity of an endomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MapStatus {
    Bijective,
    NotInjective,
    /// Injective on sampled monomials, not decided.
    Unverified,
}

/// A validated base ring with its minimized ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseRing {
    spec: BaseRingSpec,
    report: BaseValidation,
}

impl BaseRing {
    pub fn new(spec: BaseRingSpec) -> Result<Self> {
        let report = validate_base_spec(&spec)?;
        let mut spec = spec;
        spec.ideal = report.minimized_ideal.clone();
        Ok(BaseRing { spec, report })
    }

    pub fn spec(&self) -> &BaseRingSpec {
        &self.spec
    }

    pub fn report(&self) -> &BaseValidation {
        &self.report
    }

    pub fn field(&self) -> FieldSpec {
        self.spec.field
    }

    pub fn m(&self) -> usize {
        self.spec.m()
    }

    pub fn names(&self) -> &[String] {
        &self.spec.names
    }

    pub fn degrees(&self) -> &[u32] {
        &self.spec.degrees
    }

    pub fn is_finite_dimensional(&self) -> bool {
        self.report.finite_dimensional
    }

    pub fn in_ideal(&self, e: &Exponents) -> bool {
        self.spec
            .ideal
            .iter()
            .any(|g| g.iter().zip(&e.0).all(|(a, b)| a <= b))
    }

    /// Smallest `k` with `y_j^k` in the ideal.
    pub fn nilpotency_index(&self, j: usize) -> Option<u32> {
        pure_power(&self.spec.ideal, j)
    }

    pub fn zero(&self) -> BaseElement {
        BaseElement::zero()
    }

    pub fn one(&self) -> BaseElement {
        self.scalar(self.field().one())
    }

    pub fn scalar(&self, c: Scalar) -> BaseElement {
        let mut out = BaseElement::zero();
        out.add_term(Exponents::zero(self.m()), c);
        out
    }

    pub fn int(&self, v: i64) -> BaseElement {
        self.scalar(self.field().from_i64(v))
    }

    pub fn var(&self, j: usize) -> BaseElement {
        self.monomial(Exponents::unit(self.m(), j), self.field().one())
    }

    pub fn monomial(&self, e: Exponents, c: Scalar) -> BaseElement {
        let mut out = BaseElement::zero();
        if !self.in_ideal(&e) {
            out.add_term(e, c);
        }
        out
    }

    fn check(&self, a: &BaseElement) -> Result<()> {
        match a.arity() {
            Some(k) if k != self.m() => Err(SpbwError::MismatchedRing),
            _ => Ok(()),
        }
    }

    pub fn add(&self, a: &BaseElement, b: &BaseElement) -> BaseElement {
        let mut out = a.clone();
        for (e, c) in &b.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, a: &BaseElement, b: &BaseElement) -> BaseElement {
        let mut out = a.clone();
        for (e, c) in &b.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }

    pub fn neg(&self, a: &BaseElement) -> BaseElement {
        BaseElement {
            terms: a.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, a: &BaseElement, k: &Scalar) -> BaseElement {
        if k.is_zero() {
            return BaseElement::zero();
        }
        BaseElement {
            terms: a.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, a: &BaseElement, b: &BaseElement) -> BaseElement {
        let mut out = BaseElement::zero();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e = ea.checked_add(eb);
                if !self.in_ideal(&e) {
                    out.add_term(e, ca * cb);
                }
            }
        }
        out
    }

    pub fn checked_mul(&self, a: &BaseElement, b: &BaseElement) -> Result<BaseElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub fn pow(&self, a: &BaseElement, k: u32) -> BaseElement {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn constant_coefficient(&self, a: &BaseElement) -> Scalar {
        a.coefficient(&Exponents::zero(self.m()))
            .cloned()
            .unwrap_or_else(|| self.field().zero())
    }

    /// Sets every base variable to zero.
    pub fn augment(&self, a: &BaseElement) -> Scalar {
        self.constant_coefficient(a)
    }

    /// Units of `K[y]/M`: nonzero constant term plus nilpotent remainder.
    pub fn is_unit(&self, a: &BaseElement) -> bool {
        if self.constant_coefficient(a).is_zero() {
            return false;
        }
        a.terms.keys().filter(|e| !e.is_zero()).all(|e| {
            self.spec.ideal.iter().any(|g| {
                g.iter()
                    .zip(&e.0)
                    .all(|(&gi, &ei)| gi == 0 || ei > 0)
            })
        })
    }

    /// Inverse of a unit, by the geometric series in the nilpotent part.
    pub fn inverse(&self, a: &BaseElement) -> Option<BaseElement> {
        if !self.is_unit(a) {
            return None;
        }
        let lambda_inv = self.constant_coefficient(a).inv()?;
        let normalized = self.scale(a, &lambda_inv);
        let minus_nil = self.sub(&self.one(), &normalized);
        let mut acc = self.one();
        let mut power = self.one();
        loop {
            power = self.mul(&power, &minus_nil);
            if power.is_zero() {
                break;
            }
            acc = self.add(&acc, &power);
        }
        Some(self.scale(&acc, &lambda_inv))
    }

    /// Terms all of the same weighted degree, returned if so.
    pub fn homogeneous_degree(&self, a: &BaseElement, weights: &[Bideg]) -> Option<Bideg> {
        let mut degs = a.terms.keys().map(|e| e.bidegree(weights));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn degrees_of(&self, a: &BaseElement, weights: &[Bideg]) -> Vec<Bideg> {
        let mut v: Vec<Bideg> = a.terms.keys().map(|e| e.bidegree(weights)).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Normal monomials of the given bidegree for generator weights `weights`.
    pub fn normal_monomials(&self, weights: &[Bideg], target: Bideg) -> Vec<Exponents> {
        let caps: Vec<Option<u32>> = (0..self.m())
            .map(|j| {
                if weights[j] == (0, 0) {
                    Some(
                        self.nilpotency_index(j)
                            .expect("degree-zero base variable must be nilpotent"),
                    )
                } else {
                    None
                }
            })
            .collect();
        exponent_vectors(weights, target, &caps)
            .into_iter()
            .map(Exponents)
            .filter(|e| !self.in_ideal(e))
            .collect()
    }

    /// Every normal monomial; only meaningful for finite-dimensional rings.
    pub fn all_normal_monomials(&self) -> Vec<Exponents> {
        assert!(self.is_finite_dimensional());
        let weights = vec![(0, 0); self.m()];
        self.normal_monomials(&weights, (0, 0))
    }

    /// Normal monomials of unweighted total degree at most `d`.
    pub fn monomials_up_to(&self, d: u32) -> Vec<Exponents> {
        let weights = vec![(1, 0); self.m()];
        (0..=d)
            .flat_map(|k| self.normal_monomials(&weights, (k, 0)))
            .collect()
    }

    pub fn format(&self, a: &BaseElement) -> String {
        a.fmt_with(&self.spec.names)
    }

    pub fn identity_endo(&self) -> EndoMap {
        EndoMap {
            images: (0..self.m()).map(|j| self.var(j)).collect(),
        }
    }

    pub fn zero_der(&self) -> DerMap {
        DerMap {
            images: vec![BaseElement::zero(); self.m()],
        }
    }

    fn endo_on_exponents(&self, sigma: &EndoMap, e: &Exponents) -> BaseElement {
        let mut acc = self.one();
        for (j, &k) in e.0.iter().enumerate() {
            if k > 0 {
                acc = self.mul(&acc, &self.pow(&sigma.images[j], k));
            }
        }
        acc
    }

    fn der_on_exponents(&self, sigma: &EndoMap, delta: &DerMap, e: &Exponents) -> BaseElement {
        // delta(p * y) = sigma(p) delta(y) + delta(p) y
        let mut d = BaseElement::zero();
        let mut s = self.one();
        for (j, &k) in e.0.iter().enumerate() {
            for _ in 0..k {
                d = self.add(
                    &self.mul(&s, &delta.images[j]),
                    &self.mul(&d, &self.var(j)),
                );
                s = self.mul(&s, &sigma.images[j]);
            }
        }
        d
    }

    pub fn apply_endo(&self, sigma: &EndoMap, a: &BaseElement) -> BaseElement {
        let mut out = BaseElement::zero();
        for (e, c) in &a.terms {
            out = self.add(&out, &self.scale(&self.endo_on_exponents(sigma, e), c));
        }
        out
    }

    pub fn apply_der(&self, sigma: &EndoMap, delta: &DerMap, a: &BaseElement) -> BaseElement {
        let mut out = BaseElement::zero();
        for (e, c) in &a.terms {
            out = self.add(&out, &self.scale(&self.der_on_exponents(sigma, delta, e), c));
        }
        out
    }

    pub fn is_identity(&self, sigma: &EndoMap) -> bool {
        sigma
            .images
            .iter()
            .enumerate()
            .all(|(j, im)| *im == self.var(j))
    }

    /// Checks that `sigma` sends every ideal generator to zero.
    pub fn validate_endo(&self, index: usize, sigma: &EndoMap) -> Result<()> {
        if sigma.images.len() != self.m() {
            return Err(SpbwError::EndoIdeal {
                index,
                detail: "wrong number of generator images".into(),
            });
        }
        for im in &sigma.images {
            self.check(im).map_err(|_| SpbwError::EndoIdeal {
                index,
                detail: "image over a different ring".into(),
            })?;
        }
        for g in &self.spec.ideal {
            let img = self.endo_on_exponents(sigma, &Exponents(g.clone()));
            if !img.is_zero() {
                return Err(SpbwError::EndoIdeal {
                    index,
                    detail: format!(
                        "image of {} is {}",
                        format_monomial(g, &self.spec.names, "*"),
                        self.format(&img)
                    ),
                });
            }
        }
        Ok(())
    }

    /// Checks that `delta` extends to a sigma-derivation of `R`: the two
    /// expansions of `delta(y_a y_b)` agree and ideal generators map into the ideal.
    pub fn validate_der(&self, index: usize, sigma: &EndoMap, delta: &DerMap) -> Result<()> {
        let err = |detail: String| SpbwError::DerivationIncompatible { index, detail };
        if delta.images.len() != self.m() {
            return Err(err("wrong number of generator images".into()));
        }
        for a in 0..self.m() {
            for b in (a + 1)..self.m() {
                let ya = self.var(a);
                let yb = self.var(b);
                let lhs = self.mul(&self.sub(&sigma.images[a], &ya), &delta.images[b]);
                let rhs = self.mul(&self.sub(&sigma.images[b], &yb), &delta.images[a]);
                if lhs != rhs {
                    return Err(err(format!(
                        "delta({}*{}) depends on the order of the factors",
                        self.spec.names[a], self.spec.names[b]
                    )));
                }
            }
        }
        for g in &self.spec.ideal {
            let img = self.der_on_exponents(sigma, delta, &Exponents(g.clone()));
            if !img.is_zero() {
                return Err(err(format!(
                    "image of {} is {}",
                    format_monomial(g, &self.spec.names, "*"),
                    self.format(&img)
                )));
            }
        }
        Ok(())
    }

    fn coordinates(&self, a: &BaseElement, basis: &[Exponents]) -> Option<linalg::Row> {
        let f = self.field();
        let mut row = linalg::zero_row(f, basis.len());
        for (e, c) in &a.terms {
            let k = basis.iter().position(|b| b == e)?;
            row[k] = c.clone();
        }
        Some(row)
    }

    /// Decides injectivity exactly for linear images and finite-dimensional
    /// rings; otherwise samples monomials up to degree 3.
    pub fn endo_status(&self, sigma: &EndoMap) -> MapStatus {
        let m = self.m();
        if self.is_identity(sigma) {
            return MapStatus::Bijective;
        }
        let f = self.field();
        let linear = sigma
            .images
            .iter()
            .all(|im| !im.is_zero() && im.terms.keys().all(|e| e.total() == 1));
        if linear {
            let basis: Vec<Exponents> = (0..m).map(|j| Exponents::unit(m, j)).collect();
            let rows: Vec<_> = sigma
                .images
                .iter()
                .map(|im| self.coordinates(im, &basis).expect("linear image"))
                .collect();
            return if linalg::rank(f, &rows, m) == m {
                MapStatus::Bijective
            } else {
                MapStatus::NotInjective
            };
        }
        if sigma.images.iter().any(|im| im.is_zero()) {
            return MapStatus::NotInjective;
        }
        let (sample, exact) = if self.is_finite_dimensional() {
            (self.all_normal_monomials(), true)
        } else {
            (self.monomials_up_to(3), false)
        };
        let images: Vec<BaseElement> = sample
            .iter()
            .map(|e| self.endo_on_exponents(sigma, e))
            .collect();
        let mut target: Vec<Exponents> = images
            .iter()
            .flat_map(|im| im.terms.keys().cloned())
            .collect();
        target.sort();
        target.dedup();
        let rows: Vec<_> = images
            .iter()
            .map(|im| self.coordinates(im, &target).unwrap())
            .collect();
        let independent = linalg::rank(f, &rows, target.len()) == sample.len();
        match (independent, exact) {
            (false, _) => MapStatus::NotInjective,
            (true, true) => MapStatus::Bijective,
            (true, false) => MapStatus::Unverified,
        }
    }
}

impl fmt::Display for BaseElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arity = self.arity().unwrap_or(0);
        let names: Vec<String> = (1..=arity).map(|k| format!("y{k}")).collect();
        write!(f, "{}", self.fmt_with(&names))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn dual() -> BaseRing {
        BaseRing::new(BaseRingSpec::polynomial(q(), &["y"]).with_ideal(vec![vec![2]])).unwrap()
    }

    fn poly1() -> BaseRing {
        BaseRing::new(BaseRingSpec::polynomial(q(), &["y"])).unwrap()
    }

    #[test]
    fn base_spec_reports() {
        let r = validate_base_spec(&BaseRingSpec::field_only(q())).unwrap();
        assert!(r.finite_dimensional);
        let r = validate_base_spec(&BaseRingSpec::polynomial(q(), &["y"]).with_ideal(vec![vec![2]]))
            .unwrap();
        assert!(r.finite_dimensional && r.local);
        let r = validate_base_spec(&BaseRingSpec::polynomial(q(), &["a", "b"])).unwrap();
        assert!(!r.finite_dimensional && !r.local);
    }

    #[test]
    fn base_spec_errors() {
        let dup = BaseRingSpec::polynomial(q(), &["y", "y"]);
        assert_eq!(
            validate_base_spec(&dup),
            Err(SpbwError::DuplicateName("y".into()))
        );
        let bad = BaseRingSpec::field_only(FieldSpec::Prime(6));
        assert_eq!(validate_base_spec(&bad), Err(SpbwError::NotPrime(6)));
        let redundant =
            BaseRingSpec::polynomial(q(), &["y"]).with_ideal(vec![vec![2], vec![3]]);
        let r = validate_base_spec(&redundant).unwrap();
        assert_eq!(r.minimized_ideal, vec![vec![2]]);
        assert_eq!(r.warnings.len(), 1);
        let linear = BaseRingSpec::polynomial(q(), &["y"]).with_ideal(vec![vec![1]]);
        assert!(validate_base_spec(&linear).is_err());
    }

    #[test]
    fn multiplication_examples() {
        let r = dual();
        let y = r.var(0);
        assert!(r.mul(&y, &y).is_zero());
        let p = poly1();
        let y = p.var(0);
        let a = p.add(&p.one(), &y);
        let b = p.sub(&p.one(), &y);
        let expected = p.sub(&p.one(), &p.mul(&y, &y));
        assert_eq!(p.mul(&a, &b), expected);
        assert_eq!(p.format(&expected), "-y^2 + 1");
        let two = BaseRing::new(BaseRingSpec::polynomial(q(), &["x1", "x2"])).unwrap();
        assert_eq!(two.format(&two.mul(&two.var(0), &two.var(1))), "x1*x2");
        assert_eq!(two.checked_mul(&p.var(0), &two.var(0)), Err(SpbwError::MismatchedRing));
    }

    #[test]
    fn endomorphism_examples() {
        let p = poly1();
        let y = p.var(0);
        let id = p.identity_endo();
        let a = p.add(&p.scale(&y, &q().from_i64(3)), &p.one());
        assert_eq!(p.apply_endo(&id, &a), a);
        let double = EndoMap {
            images: vec![p.scale(&y, &q().from_i64(2))],
        };
        let y2 = p.mul(&y, &y);
        assert_eq!(p.apply_endo(&double, &y2), p.scale(&y2, &q().from_i64(4)));
        assert_eq!(p.apply_endo(&double, &p.one()), p.one());
        let d = dual();
        let yy = d.monomial(Exponents(vec![2]), q().one());
        assert!(d.apply_endo(&d.identity_endo(), &yy).is_zero());
    }

    #[test]
    fn derivation_examples() {
        let p = poly1();
        let y = p.var(0);
        let y2 = p.mul(&y, &y);
        assert!(p.apply_der(&p.identity_endo(), &p.zero_der(), &y2).is_zero());
        let one = DerMap { images: vec![p.one()] };
        assert_eq!(
            p.apply_der(&p.identity_endo(), &one, &y2),
            p.scale(&y, &q().from_i64(2))
        );
        // sigma(y) = 2y, delta(y) = 1: delta(y^2) = sigma(y)*1 + 1*y = 3y
        let double = EndoMap {
            images: vec![p.scale(&y, &q().from_i64(2))],
        };
        assert_eq!(p.apply_der(&double, &one, &y2), p.scale(&y, &q().from_i64(3)));
        assert!(p.apply_der(&double, &one, &p.one()).is_zero());
    }

    #[test]
    fn map_validation() {
        let d = dual();
        let bad = DerMap { images: vec![d.one()] };
        // delta(y^2) = 2y, not in (y^2)
        assert!(d.validate_der(0, &d.identity_endo(), &bad).is_err());
        let shift = EndoMap {
            images: vec![d.add(&d.var(0), &d.one())],
        };
        assert!(d.validate_endo(0, &shift).is_err());
        let two = BaseRing::new(BaseRingSpec::polynomial(q(), &["a", "b"])).unwrap();
        let sigma = EndoMap {
            images: vec![two.scale(&two.var(0), &q().from_i64(2)), two.var(1)],
        };
        let delta = DerMap {
            images: vec![two.zero(), two.one()],
        };
        // (sigma(a)-a) delta(b) = a != 0 = (sigma(b)-b) delta(a)
        assert!(two.validate_der(0, &sigma, &delta).is_err());
    }

    #[test]
    fn injectivity_status() {
        let p = poly1();
        let y = p.var(0);
        assert_eq!(p.endo_status(&p.identity_endo()), MapStatus::Bijective);
        let square = EndoMap {
            images: vec![p.mul(&y, &y)],
        };
        assert_eq!(p.endo_status(&square), MapStatus::Unverified);
        let two = BaseRing::new(BaseRingSpec::polynomial(q(), &["a", "b"])).unwrap();
        let collapse = EndoMap {
            images: vec![two.var(0), two.var(0)],
        };
        assert_eq!(two.endo_status(&collapse), MapStatus::NotInjective);
        let d = dual();
        let double = EndoMap {
            images: vec![d.scale(&d.var(0), &q().from_i64(2))],
        };
        assert_eq!(d.endo_status(&double), MapStatus::Bijective);
    }

    #[test]
    fn units() {
        let d = dual();
        let u = d.add(&d.one(), &d.var(0));
        assert!(d.is_unit(&u));
        assert!(!d.is_unit(&d.var(0)));
        let p = poly1();
        assert!(!p.is_unit(&p.add(&p.one(), &p.var(0))));
        assert!(p.is_unit(&p.int(3)));
    }

    #[test]
    fn grlex_order() {
        let a = Exponents(vec![2, 0]);
        let b = Exponents(vec![0, 3]);
        let c = Exponents(vec![1, 1]);
        assert!(b > a);
        assert!(a > c);
    }
}
