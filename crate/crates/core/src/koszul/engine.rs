use std::collections::BTreeMap;
use std::sync::Arc;


use crate::basering::{Bideg, Exponents};
use crate::error::{Result, SpbwError};
use crate::field::FieldSpec;
use crate::gradings::{checked_sub, degrees_within, ComponentBasis, GradedBasis};
use crate::linalg::{self, Echelon, Row};
use crate::skewcore::SkewElement;

use super::window::{Generator, GradedWindow};

/// One free module `P^i` of a resolution together with its differential.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolutionStep {
    pub index: usize,
    pub generator_degrees: Vec<Bideg>,
    /// For `i >= 1`, the image of each generator as one coefficient per
    /// generator of step `i - 1`. Empty for step 0.
    pub differential: Vec<Vec<SkewElement>>,
}

impl ResolutionStep {
    pub fn rank(&self) -> usize {
        self.generator_degrees.len()
    }

    /// `(degree, count)` pairs in increasing degree.
    pub fn betti(&self) -> Vec<(Bideg, usize)> {
        let mut m: BTreeMap<Bideg, usize> = BTreeMap::new();
        for d in &self.generator_degrees {
            *m.entry(*d).or_default() += 1;
        }
        m.into_iter().collect()
    }
}

/// Per step and degree: dimension of `P^i`, of the kernel of `d_i`, and of
/// the module being resolved (step `-1`).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WindowLedger {
    pub free_dims: BTreeMap<(usize, Bideg), usize>,
    pub kernel_dims: BTreeMap<(usize, Bideg), usize>,
    pub module_dims: BTreeMap<Bideg, usize>,
}

/// A minimal graded free resolution truncated to a window.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub bounds: Bideg,
    pub steps: Vec<ResolutionStep>,
    /// Images in the module of the step-0 generators.
    pub cover: Vec<Row>,
    pub ledger: WindowLedger,
    /// Order in which generators were found: `(step, position in step)`.
    pub discovery: Vec<(usize, usize)>,
}

impl Resolution {
    pub fn ranks(&self) -> Vec<usize> {
        self.steps.iter().map(ResolutionStep::rank).collect()
    }

    /// `rank d_i = dim P^i - dim ker d_i` in degree `d`.
    pub fn rank_of_differential(&self, i: usize, d: Bideg) -> usize {
        let f = self.ledger.free_dims.get(&(i, d)).copied().unwrap_or(0);
        let z = self.ledger.kernel_dims.get(&(i, d)).copied().unwrap_or(0);
        f - z
    }

    /// Degrees and steps where the truncated complex fails to be exact:
    /// `P^0 -> M` onto, and `im d_(i+1) = ker d_i` for `i + 1` computed.
    pub fn exactness_defects(&self) -> Vec<(usize, Bideg)> {
        let mut out = Vec::new();
        for d in degrees_within(self.bounds) {
            let m = self.ledger.module_dims.get(&d).copied().unwrap_or(0);
            if self.rank_of_differential(0, d) != m {
                out.push((0, d));
            }
            for i in 0..self.steps.len().saturating_sub(1) {
                let z = self.ledger.kernel_dims.get(&(i, d)).copied().unwrap_or(0);
                if self.rank_of_differential(i + 1, d) != z {
                    out.push((i + 1, d));
                }
            }
        }
        out
    }
}

struct Block {
    generator: usize,
    offset: usize,
    shift: Bideg,
    comp: Arc<ComponentBasis>,
}

struct Engine<'a> {
    basis: &'a GradedBasis,
    window: &'a GradedWindow,
    field: FieldSpec,
    bounds: Bideg,
    steps: Vec<ResolutionStep>,
    cover: Vec<Row>,
    kernels: BTreeMap<(usize, Bideg), Vec<Row>>,
    ledger: WindowLedger,
    discovery: Vec<(usize, usize)>,
    generators: Vec<Generator>,
}

impl Engine<'_> {
    fn weight(&self, g: Generator) -> Bideg {
        let w = self.basis.weights();
        match g {
            Generator::X(i) => w.x[i],
            Generator::Y(j) => w.y[j],
        }
    }

    fn generator_element(&self, g: Generator) -> SkewElement {
        let ring = self.basis.ring();
        match g {
            Generator::X(i) => ring.var(i),
            Generator::Y(j) => ring.from_base(ring.base().var(j)),
        }
    }

    /// Layout of `(P^i)_d`: one block per generator of degree `<= d`.
    fn layout(&self, i: usize, d: Bideg) -> (Vec<Block>, usize) {
        let mut blocks = Vec::new();
        let mut offset = 0;
        for (g, &deg) in self.steps[i].generator_degrees.iter().enumerate() {
            if let Some(shift) = checked_sub(d, deg) {
                let comp = self.basis.component(shift);
                let len = comp.len();
                blocks.push(Block {
                    generator: g,
                    offset,
                    shift,
                    comp,
                });
                offset += len;
            }
        }
        (blocks, offset)
    }

    /// Coordinates in `(P^i)_d` to one coefficient per generator.
    fn to_components(&self, i: usize, d: Bideg, z: &[crate::field::Scalar]) -> Vec<SkewElement> {
        let mut out = vec![SkewElement::zero(); self.steps[i].rank()];
        let (blocks, _) = self.layout(i, d);
        for b in blocks {
            let slice = &z[b.offset..b.offset + b.comp.len()];
            out[b.generator] = self.basis.from_coordinates(slice, b.shift);
        }
        out
    }

    /// Coordinates in `(P^i)_d` of a vector given by components.
    fn coordinates_of(&self, i: usize, d: Bideg, comps: &[SkewElement]) -> Row {
        let (blocks, total) = self.layout(i, d);
        let mut row = linalg::zero_row(self.field, total);
        for b in blocks {
            let c = self
                .basis
                .coordinates(&comps[b.generator], b.shift)
                .expect("inhomogeneous product in a graded free module");
            row[b.offset..b.offset + c.len()].clone_from_slice(&c);
        }
        row
    }

    /// `a * v` for `v` in `(P^i)_d` given by components.
    fn left_multiply(&self, a: &SkewElement, comps: &[SkewElement]) -> Vec<SkewElement> {
        let ring = self.basis.ring();
        comps.iter().map(|b| ring.multiply(a, b)).collect()
    }

    /// Images under `d_i` of the basis of `(P^i)_d`, as rows in `(P^(i-1))_d`
    /// (or in `M_d` for `i = 0`).
    fn differential_matrix(&self, i: usize, d: Bideg) -> (Vec<Row>, usize) {
        let (blocks, _) = self.layout(i, d);
        let ncols = if i == 0 {
            self.window.dim(d)
        } else {
            self.layout(i - 1, d).1
        };
        let mut rows = Vec::new();
        for b in &blocks {
            let gdeg = self.steps[i].generator_degrees[b.generator];
            for m in &b.comp.monomials {
                let row = if i == 0 {
                    self.window
                        .act_monomial(&m.0, &m.1, gdeg, &self.cover[b.generator])
                        .expect("inside the window")
                } else {
                    let a = self.basis.element(m);
                    let img = self.left_multiply(&a, &self.steps[i].differential[b.generator]);
                    self.coordinates_of(i - 1, d, &img)
                };
                rows.push(row);
            }
        }
        (rows, ncols)
    }

    /// `J * Z` in degree `d`, where `Z` is the kernel of `d_(i-1)` (or `M`).
    fn radical_part(&self, i: usize, d: Bideg, ncols: usize) -> Echelon {
        let mut e = Echelon::new(self.field, ncols);
        for &g in &self.generators {
            let w = self.weight(g);
            let Some(src) = checked_sub(d, w) else {
                continue;
            };
            if i == 0 {
                let dim = self.window.dim(src);
                for b in 0..dim {
                    let mut v = linalg::zero_row(self.field, dim);
                    v[b] = self.field.one();
                    if let Some(img) = self.window.act(g, src, &v) {
                        e.insert(img);
                    }
                }
            } else {
                let Some(z) = self.kernels.get(&(i - 1, src)) else {
                    continue;
                };
                let ge = self.generator_element(g);
                for row in z {
                    let comps = self.to_components(i - 1, src, row);
                    let img = self.left_multiply(&ge, &comps);
                    e.insert(self.coordinates_of(i - 1, d, &img));
                }
            }
        }
        e
    }

    fn run(&mut self, max_step: usize) {
        for d in degrees_within(self.bounds) {
            self.ledger.module_dims.insert(d, self.window.dim(d));
            for i in 0..=max_step {
                let z: Vec<Row> = if i == 0 {
                    let dim = self.window.dim(d);
                    (0..dim)
                        .map(|b| {
                            let mut v = linalg::zero_row(self.field, dim);
                            v[b] = self.field.one();
                            v
                        })
                        .collect()
                } else {
                    self.kernels.get(&(i - 1, d)).cloned().unwrap_or_default()
                };
                if !z.is_empty() {
                    let ncols = z[0].len();
                    let mut span = self.radical_part(i, d, ncols);
                    for v in z {
                        if span.insert(v.clone()) {
                            let pos = self.steps[i].rank();
                            self.steps[i].generator_degrees.push(d);
                            if i == 0 {
                                self.cover.push(v);
                            } else {
                                let comps = self.to_components(i - 1, d, &v);
                                self.steps[i].differential.push(comps);
                            }
                            self.discovery.push((i, pos));
                        }
                    }
                }
                let (rows, ncols) = self.differential_matrix(i, d);
                self.ledger.free_dims.insert((i, d), rows.len());
                let kernel = linalg::left_kernel(self.field, &rows, ncols);
                self.ledger.kernel_dims.insert((i, d), kernel.len());
                let kernel = linalg::span(self.field, &kernel, rows.len()).rows().to_vec();
                self.kernels.insert((i, d), kernel);
            }
        }
    }
}

/// Minimal graded free resolution of the module in `window`, steps
/// `0..=max_step`, in all degrees inside the window.
///
/// Degree-zero generators of `A` must generate a local ring (or be absent),
/// so that projective covers are free.
pub fn minimal_resolution(
    basis: &GradedBasis,
    window: &GradedWindow,
    max_step: usize,
) -> Result<Resolution> {
    let ring = basis.ring();
    if window.n_skew() != ring.n() || window.m_base() != ring.base().m() {
        return Err(SpbwError::Window("window and ring have different generators".into()));
    }
    if window.weights() != basis.weights() {
        return Err(SpbwError::Window("window and basis use different gradings".into()));
    }
    let mut generators: Vec<Generator> = (0..ring.n()).map(Generator::X).collect();
    generators.extend((0..ring.base().m()).map(Generator::Y));
    let mut engine = Engine {
        basis,
        window,
        field: ring.base().field(),
        bounds: window.bounds(),
        steps: (0..=max_step)
            .map(|index| ResolutionStep {
                index,
                generator_degrees: Vec::new(),
                differential: Vec::new(),
            })
            .collect(),
        cover: Vec::new(),
        kernels: BTreeMap::new(),
        ledger: WindowLedger::default(),
        discovery: Vec::new(),
        generators,
    };
    engine.run(max_step);
    Ok(Resolution {
        bounds: engine.bounds,
        steps: engine.steps,
        cover: engine.cover,
        ledger: engine.ledger,
        discovery: engine.discovery,
    })
}

/// `d_(i-1) d_i = 0` for every generator, and `P^1 -> P^0 -> M` composes to 0.
pub fn differentials_compose_to_zero(
    basis: &GradedBasis,
    window: &GradedWindow,
    res: &Resolution,
) -> bool {
    let ring = basis.ring();
    for (i, step) in res.steps.iter().enumerate().skip(1) {
        for (g, img) in step.differential.iter().enumerate() {
            let gdeg = step.generator_degrees[g];
            if i == 1 {
                let mut acc = linalg::zero_row(basis.ring().base().field(), window.dim(gdeg));
                for (h, b) in img.iter().enumerate() {
                    let hdeg = res.steps[0].generator_degrees[h];
                    let Some(e) = checked_sub(gdeg, hdeg) else {
                        if !b.is_zero() {
                            return false;
                        }
                        continue;
                    };
                    match window.act_element(b, hdeg, e, &res.cover[h]) {
                        Some(v) => linalg::axpy(&mut acc, &basis.ring().base().field().one(), &v),
                        None => continue,
                    }
                }
                if !linalg::is_zero_row(&acc) {
                    return false;
                }
            } else {
                let prev = &res.steps[i - 1];
                let mut acc = vec![SkewElement::zero(); res.steps[i - 2].rank()];
                for (h, b) in img.iter().enumerate() {
                    for (k, c) in prev.differential[h].iter().enumerate() {
                        acc[k] = ring.add(&acc[k], &ring.multiply(b, c));
                    }
                }
                if acc.iter().any(|a| !a.is_zero()) {
                    return false;
                }
            }
        }
    }
    true
}

/// No differential entry has a unit part: images lie in `J * P`.
pub fn is_minimal(basis: &GradedBasis, res: &Resolution) -> bool {
    let ring = basis.ring();
    let zero_x = Exponents::zero(ring.n());
    res.steps.iter().all(|s| {
        s.differential.iter().flatten().all(|b| {
            b.coefficient(&zero_x)
                .is_none_or(|r| ring.base().constant_coefficient(r).is_zero())
        })
    })
}
