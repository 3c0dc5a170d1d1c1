use std::collections::BTreeMap;

use crate::basering::{BaseRing, Bideg, Exponents};
use crate::classify::classify;
use crate::error::{Result, SpbwError};
use crate::field::{FieldSpec, Scalar};
use crate::gradings::{add, degrees_within, validate_grading, within, GradingSpec, Weights};
use crate::linalg::{self, Row};
use crate::skewcore::{SkewElement, SkewRing};

/// Which quotient of `A` a window describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WindowTarget {
    /// `A_0 = A/J` with `J` the span of all components of positive degree.
    DegreeZero,
    /// `R = A/A_+`, for R-augmented extensions.
    BaseModule,
}

type ActionMap = BTreeMap<Bideg, Vec<Row>>;

/// A graded module truncated to the bidegrees `<= bounds`, with the action
/// of every algebra generator as matrices between components (row vectors,
/// `v -> v M`). Actions leaving the window are not stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedWindow {
    field: FieldSpec,
    bounds: Bideg,
    weights: Weights,
    dims: BTreeMap<Bideg, usize>,
    labels: BTreeMap<Bideg, Vec<String>>,
    x_actions: Vec<ActionMap>,
    y_actions: Vec<ActionMap>,
}

impl GradedWindow {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn bounds(&self) -> Bideg {
        self.bounds
    }

    pub fn weights(&self) -> &Weights {
        &self.weights
    }

    pub fn n_skew(&self) -> usize {
        self.x_actions.len()
    }

    pub fn m_base(&self) -> usize {
        self.y_actions.len()
    }

    pub fn dim(&self, d: Bideg) -> usize {
        self.dims.get(&d).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &BTreeMap<Bideg, usize> {
        &self.dims
    }

    pub fn labels(&self, d: Bideg) -> &[String] {
        self.labels.get(&d).map(Vec::as_slice).unwrap_or(&[])
    }

    /// The quotient `R / (y of positive degree)` as a module over `R`,
    /// or all of `R` when `all_degrees` is set.
    fn base_quotient(
        base: &BaseRing,
        y_weights: &[Bideg],
        bounds: Bideg,
        all_degrees: bool,
    ) -> GradedWindow {
        let field = base.field();
        let mut comps: BTreeMap<Bideg, Vec<Exponents>> = BTreeMap::new();
        for d in degrees_within(bounds) {
            if !all_degrees && d != (0, 0) {
                continue;
            }
            let mut mons = base.normal_monomials(y_weights, d);
            mons.retain(|e| all_degrees || y_weights.iter().zip(&e.0).all(|(w, &k)| k == 0 || *w == (0, 0)));
            if !mons.is_empty() {
                comps.insert(d, mons);
            }
        }
        let mut y_actions = Vec::new();
        for (j, &w) in y_weights.iter().enumerate() {
            let mut map = ActionMap::new();
            for (&d, mons) in &comps {
                let t = add(d, w);
                if !within(t, bounds) {
                    continue;
                }
                let empty = Vec::new();
                let target = comps.get(&t).unwrap_or(&empty);
                let rows = mons
                    .iter()
                    .map(|e| {
                        let mut row = linalg::zero_row(field, target.len());
                        let mut p = e.clone();
                        p.0[j] += 1;
                        if !base.in_ideal(&p) {
                            if let Some(k) = target.iter().position(|x| *x == p) {
                                row[k] = field.one();
                            }
                        }
                        row
                    })
                    .collect();
                map.insert(d, rows);
            }
            y_actions.push(map);
        }
        let names = base.names();
        GradedWindow {
            field,
            bounds,
            weights: Weights {
                x: Vec::new(),
                y: y_weights.to_vec(),
            },
            dims: comps.iter().map(|(&d, v)| (d, v.len())).collect(),
            labels: comps
                .iter()
                .map(|(&d, v)| {
                    let l = v
                        .iter()
                        .map(|e| {
                            let one = base.monomial(e.clone(), field.one());
                            one.fmt_with(names)
                        })
                        .collect();
                    (d, l)
                })
                .collect(),
            x_actions: Vec::new(),
            y_actions,
        }
    }

    /// `R` as a graded module over itself.
    pub fn base_ring_window(base: &BaseRing, y_weights: &[Bideg], bounds: Bideg) -> GradedWindow {
        Self::base_quotient(base, y_weights, bounds, true)
    }

    /// Adds skew variables that act as zero.
    pub fn with_zero_skew_actions(&self, x_weights: &[Bideg]) -> GradedWindow {
        let mut out = self.clone();
        out.weights.x = x_weights.to_vec();
        out.x_actions = x_weights
            .iter()
            .map(|&w| {
                self.dims
                    .iter()
                    .filter(|(&d, _)| within(add(d, w), self.bounds))
                    .map(|(&d, &k)| {
                        let t = self.dim(add(d, w));
                        (d, vec![linalg::zero_row(self.field, t); k])
                    })
                    .collect()
            })
            .collect();
        out
    }

    fn action(&self, gen: Generator) -> &ActionMap {
        match gen {
            Generator::X(i) => &self.x_actions[i],
            Generator::Y(j) => &self.y_actions[j],
        }
    }

    fn weight(&self, gen: Generator) -> Bideg {
        match gen {
            Generator::X(i) => self.weights.x[i],
            Generator::Y(j) => self.weights.y[j],
        }
    }

    /// `g * v` for `v` in degree `d`; `None` if the result leaves the window.
    pub fn act(&self, gen: Generator, d: Bideg, v: &[Scalar]) -> Option<Row> {
        let t = add(d, self.weight(gen));
        if !within(t, self.bounds) {
            return None;
        }
        let cols = self.dim(t);
        if self.dim(d) == 0 || cols == 0 {
            return Some(linalg::zero_row(self.field, cols));
        }
        let m = self.action(gen).get(&d)?;
        Some(linalg::vec_mat(self.field, v, m, cols))
    }

    /// `y^u x^alpha * v`.
    pub fn act_monomial(&self, u: &Exponents, alpha: &Exponents, d: Bideg, v: &[Scalar]) -> Option<Row> {
        let mut cur = v.to_vec();
        let mut deg = d;
        for i in (0..alpha.0.len()).rev() {
            for _ in 0..alpha.0[i] {
                cur = self.act(Generator::X(i), deg, &cur)?;
                deg = add(deg, self.weights.x[i]);
            }
        }
        for (j, &k) in u.0.iter().enumerate() {
            for _ in 0..k {
                cur = self.act(Generator::Y(j), deg, &cur)?;
                deg = add(deg, self.weights.y[j]);
            }
        }
        Some(cur)
    }

    /// `a * v` for homogeneous `a` of degree `e`.
    pub fn act_element(&self, a: &SkewElement, d: Bideg, e: Bideg, v: &[Scalar]) -> Option<Row> {
        let t = add(d, e);
        let mut out = linalg::zero_row(self.field, self.dim(t));
        for (alpha, r) in a.terms() {
            for (u, c) in r.terms() {
                let w = self.act_monomial(u, alpha, d, v)?;
                linalg::axpy(&mut out, c, &w);
            }
        }
        Some(out)
    }

    /// Checks every defining relation of the ring on every basis vector
    /// whose images stay inside the window.
    pub fn check_relations(&self, ring: &SkewRing) -> Result<()> {
        let pres = ring.presentation();
        let base = ring.base();
        if self.n_skew() != ring.n() || self.m_base() != base.m() {
            return Err(SpbwError::Window("window and ring have different generators".into()));
        }
        let n = ring.n();
        let wx = &self.weights.x;
        let wy = &self.weights.y;
        let fail = |what: String, d: Bideg| {
            Err(SpbwError::Window(format!("relation {what} fails in degree {d:?}")))
        };
        for (&d, &k) in &self.dims {
            for b in 0..k {
                let mut v = linalg::zero_row(self.field, k);
                v[b] = self.field.one();
                for g in &base.spec().ideal {
                    let z = Exponents::zero(n);
                    if let Some(w) = self.act_monomial(&Exponents(g.clone()), &z, d, &v) {
                        if !linalg::is_zero_row(&w) {
                            return fail(format!("ideal generator {g:?}"), d);
                        }
                    }
                }
                for j in 0..base.m() {
                    for l in (j + 1)..base.m() {
                        let jl = self.act(Generator::Y(j), d, &v).and_then(|w| {
                            self.act(Generator::Y(l), add(d, wy[j]), &w)
                        });
                        let lj = self.act(Generator::Y(l), d, &v).and_then(|w| {
                            self.act(Generator::Y(j), add(d, wy[l]), &w)
                        });
                        if jl != lj {
                            return fail(format!("{}*{}", base.names()[j], base.names()[l]), d);
                        }
                    }
                }
                for &(i, j) in pres.relations.keys() {
                    let e = add(wx[i], wx[j]);
                    let lhs = self.act(Generator::X(i), d, &v).and_then(|w| {
                        self.act(Generator::X(j), add(d, wx[i]), &w)
                    });
                    let rhs = self.act_element(&crate::skewcore::relation_rhs(ring, i, j), d, e, &v);
                    if let (Some(l), Some(r)) = (lhs, rhs) {
                        if l != r {
                            return fail(format!("{}*{}", pres.xnames[j], pres.xnames[i]), d);
                        }
                    }
                }
                for i in 0..n {
                    for l in 0..base.m() {
                        let e = add(wx[i], wy[l]);
                        let y = ring.from_base(base.var(l));
                        let moved = ring.multiply(&ring.var(i), &y);
                        let lhs = self.act(Generator::Y(l), d, &v).and_then(|w| {
                            self.act(Generator::X(i), add(d, wy[l]), &w)
                        });
                        let rhs = self.act_element(&moved, d, e, &v);
                        if let (Some(a), Some(b)) = (lhs, rhs) {
                            if a != b {
                                return fail(format!("{}*{}", pres.xnames[i], base.names()[l]), d);
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// An algebra generator of `A` over `K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    X(usize),
    Y(usize),
}

/// The window of `A_0 = A/J` or `R = A/A_+` for a grading.
pub fn build_window(
    ring: &SkewRing,
    grading: GradingSpec,
    target: WindowTarget,
    bounds: Bideg,
) -> Result<GradedWindow> {
    let pres = ring.presentation();
    validate_grading(pres, grading)?;
    let weights = grading.weights(pres);
    let base = ring.base();
    let window = match target {
        WindowTarget::DegreeZero => GradedWindow::base_quotient(base, &weights.y, bounds, false),
        WindowTarget::BaseModule => {
            if !classify(pres)?.r_augmented {
                return Err(SpbwError::Precondition(
                    "R is an A-module only for R-augmented extensions".into(),
                ));
            }
            GradedWindow::base_quotient(base, &weights.y, bounds, true)
        }
    };
    let window = window.with_zero_skew_actions(&weights.x);
    window.check_relations(ring)?;
    Ok(window)
}
