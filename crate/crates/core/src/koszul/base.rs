use serde::Serialize;

use crate::basering::{BaseElement, BaseRing, BaseRingSpec, Bideg, Exponents};
use crate::error::{Result, SpbwError};
use crate::linalg::{self, Row};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BaseShape {
    Field,
    /// `K[y_1..y_m]`, resolved by the Koszul complex.
    Polynomial,
    /// `K[y]/(y^2)`, resolved periodically by multiplication with `y`.
    DualNumbers,
}

/// A step of a free resolution of `K` over the base ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseResolutionStep {
    pub index: usize,
    pub generator_degrees: Vec<u32>,
    /// Row `g` lists the image of generator `g` in the previous step.
    pub differential: Vec<Vec<BaseElement>>,
}

#[derive(Clone, Debug)]
pub struct BaseResolution {
    pub shape: BaseShape,
    pub ring: BaseRing,
    pub steps: Vec<BaseResolutionStep>,
}

impl BaseResolution {
    pub fn ranks(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.generator_degrees.len()).collect()
    }

    /// `(i, j)` pairs where the complex `P -> K -> 0` is not exact in base
    /// degree `j <= max_degree`. Exactness at the last step is not checked.
    pub fn exactness_defects(&self, max_degree: u32) -> Vec<(usize, u32)> {
        let base = &self.ring;
        let weights: Vec<Bideg> = base.degrees().iter().map(|&b| (b, 0)).collect();
        let comps: Vec<Vec<Exponents>> = (0..=max_degree)
            .map(|j| base.normal_monomials(&weights, (j, 0)))
            .collect();
        let mut out = Vec::new();
        for j in 0..=max_degree {
            let mut ranks = Vec::new();
            let mut dims = Vec::new();
            for step in &self.steps {
                let (rows, ncols) = self.matrix(step, j, &comps);
                dims.push(rows.len());
                ranks.push(if step.index == 0 {
                    0
                } else {
                    linalg::rank(base.field(), &rows, ncols)
                });
            }
            // homology at step 0 must be K in degree 0
            let h0 = dims[0] - ranks.get(1).copied().unwrap_or(0);
            if h0 != usize::from(j == 0) {
                out.push((0, j));
            }
            for i in 1..self.steps.len().saturating_sub(1) {
                if dims[i] - ranks[i] != ranks[i + 1] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    fn matrix(&self, step: &BaseResolutionStep, j: u32, comps: &[Vec<Exponents>]) -> (Vec<Row>, usize) {
        let base = &self.ring;
        let field = base.field();
        let prev_degrees: &[u32] = if step.index == 0 {
            &[]
        } else {
            &self.steps[step.index - 1].generator_degrees
        };
        let layout = |degs: &[u32]| {
            let mut offs = Vec::new();
            let mut total = 0;
            for &g in degs {
                offs.push(total);
                if g <= j {
                    total += comps[(j - g) as usize].len();
                }
            }
            (offs, total)
        };
        let (prev_offs, ncols) = layout(prev_degrees);
        let mut rows = Vec::new();
        for (g, &gd) in step.generator_degrees.iter().enumerate() {
            if gd > j {
                continue;
            }
            for mono in &comps[(j - gd) as usize] {
                let mut row = linalg::zero_row(field, ncols);
                if step.index > 0 {
                    let m = base.monomial(mono.clone(), field.one());
                    for (h, r) in step.differential[g].iter().enumerate() {
                        let p = base.mul(r, &m);
                        let hd = prev_degrees[h];
                        for (e, c) in p.terms() {
                            let k = comps[(j - hd) as usize]
                                .iter()
                                .position(|x| x == e)
                                .expect("homogeneous differential");
                            row[prev_offs[h] + k] = c.clone();
                        }
                    }
                }
                rows.push(row);
            }
        }
        (rows, ncols)
    }
}

/// Linear free resolution of `K` over a supported base ring, steps
/// `0..=max_step` (the Koszul complex stops at `m`).
pub fn base_koszul_resolution(spec: &BaseRingSpec, max_step: usize) -> Result<BaseResolution> {
    let base = BaseRing::new(spec.clone())?;
    let m = base.m();
    if base.degrees().iter().any(|&b| b != 1) {
        return Err(SpbwError::UnsupportedBase(
            "base variables must have degree 1".into(),
        ));
    }
    let ideal = &base.spec().ideal;
    let shape = if m == 0 {
        BaseShape::Field
    } else if ideal.is_empty() {
        BaseShape::Polynomial
    } else if m == 1 && ideal == &vec![vec![2]] {
        BaseShape::DualNumbers
    } else {
        return Err(SpbwError::UnsupportedBase(
            "supported: K, K[y_1..y_m], K[y]/(y^2)".into(),
        ));
    };
    let step0 = BaseResolutionStep {
        index: 0,
        generator_degrees: vec![0],
        differential: Vec::new(),
    };
    let mut steps = vec![step0];
    match shape {
        BaseShape::Field => {}
        BaseShape::DualNumbers => {
            for i in 1..=max_step {
                steps.push(BaseResolutionStep {
                    index: i,
                    generator_degrees: vec![i as u32],
                    differential: vec![vec![base.var(0)]],
                });
            }
        }
        BaseShape::Polynomial => {
            let subsets = |k: usize| -> Vec<Vec<usize>> {
                let mut out = Vec::new();
                for mask in 0u64..(1u64 << m) {
                    if mask.count_ones() as usize == k {
                        out.push((0..m).filter(|&b| mask >> b & 1 == 1).collect());
                    }
                }
                out.sort();
                out
            };
            for i in 1..=max_step.min(m) {
                let cur = subsets(i);
                let prev = subsets(i - 1);
                let differential = cur
                    .iter()
                    .map(|s| {
                        prev.iter()
                            .map(|t| {
                                match s.iter().position(|k| !t.contains(k)) {
                                    Some(pos) if t.iter().all(|k| s.contains(k)) => {
                                        let y = base.var(s[pos]);
                                        if pos % 2 == 0 {
                                            y
                                        } else {
                                            base.neg(&y)
                                        }
                                    }
                                    _ => BaseElement::zero(),
                                }
                            })
                            .collect()
                    })
                    .collect();
                steps.push(BaseResolutionStep {
                    index: i,
                    generator_degrees: vec![i as u32; cur.len()],
                    differential,
                });
            }
        }
    }
    Ok(BaseResolution {
        shape,
        ring: base,
        steps,
    })
}
