use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::basering::{Exponents, MapStatus};
use crate::error::{Result, SpbwError};

use super::element::SkewElement;
use super::sample::random_element;
use super::presentation::Presentation;
use super::ring::SkewRing;

/// Outcome of [`validate_presentation`]. `failures[0]` is the witness.
#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub failures: Vec<SpbwError>,
    pub sigma_status: Vec<MapStatus>,
    pub overlaps_checked: usize,
    pub spot_checks: usize,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    passed: bool,
    sigma_injectivity: &'a [MapStatus],
    overlaps_checked: usize,
    spot_checks: usize,
    failures: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ReportJson {
            passed: self.passed(),
            sigma_injectivity: &self.sigma_status,
            overlaps_checked: self.overlaps_checked,
            spot_checks: self.spot_checks,
            failures: self.failures.iter().map(|e| e.to_string()).collect(),
        })
        .expect("serializable")
    }
}

pub const DEFAULT_SPOT_CHECKS: usize = 8;

/// Checks the defining data of a skew PBW extension and resolves every
/// overlap `x_k x_j x_i` (k > j > i) and `x_j x_i y` (y a base generator)
/// both ways. Structural problems are returned as `Err`; arithmetic
/// inconsistencies are collected in the report.
pub fn validate_presentation(pres: &Presentation) -> Result<ValidationReport> {
    validate_presentation_seeded(pres, 0, DEFAULT_SPOT_CHECKS)
}

pub fn validate_presentation_seeded(
    pres: &Presentation,
    seed: u64,
    spot_checks: usize,
) -> Result<ValidationReport> {
    let ring = SkewRing::unchecked(pres.clone())?;
    let base = ring.base();
    let n = pres.n();
    let mut failures = Vec::new();

    for ((i, j), rel) in &pres.relations {
        if rel.c.is_zero() {
            failures.push(SpbwError::ZeroConstant { i: i + 1, j: j + 1 });
        }
    }
    for i in 0..n {
        if let Err(e) = base.validate_endo(i + 1, &pres.sigma[i]) {
            failures.push(e);
        } else if let Err(e) = base.validate_der(i + 1, &pres.sigma[i], &pres.delta[i]) {
            failures.push(e);
        }
    }
    let sigma_status = pres.sigma.iter().map(|s| base.endo_status(s)).collect();
    if !failures.is_empty() {
        return Ok(ValidationReport {
            failures,
            sigma_status,
            overlaps_checked: 0,
            spot_checks: 0,
        });
    }

    let name = |i: usize| pres.xnames[i].clone();
    let mut overlaps = 0;
    for k in 0..n {
        for j in 0..k {
            for i in 0..j {
                overlaps += 1;
                let left = ring.multiply(&relation_rhs(&ring, j, k), &ring.var(i));
                let right = ring.multiply(&ring.var(k), &relation_rhs(&ring, i, j));
                if left != right {
                    failures.push(SpbwError::DivergentOverlap {
                        overlap: format!("{}*{}*{}", name(k), name(j), name(i)),
                        left: ring.format(&left),
                        right: ring.format(&right),
                    });
                }
            }
        }
    }
    for j in 0..n {
        for i in 0..j {
            for l in 0..base.m() {
                overlaps += 1;
                let y = ring.from_base(base.var(l));
                let left = ring.multiply(&relation_rhs(&ring, i, j), &y);
                let xi_y = ring.multiply(&ring.var(i), &y);
                let right = ring.multiply(&ring.var(j), &xi_y);
                if left != right {
                    failures.push(SpbwError::DivergentOverlap {
                        overlap: format!("{}*{}*{}", name(j), name(i), base.names()[l]),
                        left: ring.format(&left),
                        right: ring.format(&right),
                    });
                }
            }
        }
    }

    let mut spots = 0;
    if failures.is_empty() && spot_checks > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..spot_checks {
            spots += 1;
            let a = random_element(&ring, &mut rng, 4, 1);
            let b = random_element(&ring, &mut rng, 4, 1);
            let c = random_element(&ring, &mut rng, 4, 1);
            let left = ring.multiply(&ring.multiply(&a, &b), &c);
            let right = ring.multiply(&a, &ring.multiply(&b, &c));
            if left != right {
                failures.push(SpbwError::DivergentOverlap {
                    overlap: format!(
                        "({})({})({})",
                        ring.format(&a),
                        ring.format(&b),
                        ring.format(&c)
                    ),
                    left: ring.format(&left),
                    right: ring.format(&right),
                });
                break;
            }
        }
    }

    Ok(ValidationReport {
        failures,
        sigma_status,
        overlaps_checked: overlaps,
        spot_checks: spots,
    })
}

/// Normal form of `x_j x_i` for `i < j`, read off the presentation.
pub fn relation_rhs(ring: &SkewRing, i: usize, j: usize) -> SkewElement {
    let pres = ring.presentation();
    let n = pres.n();
    let rel = pres.rel(i, j);
    let mut ij = Exponents::zero(n);
    ij.0[i] += 1;
    ij.0[j] += 1;
    let mut out = ring.monomial(ij, rel.c.clone());
    out = ring.add(&out, &ring.from_base(rel.d0.clone()));
    for (k, d) in rel.dlin.iter().enumerate() {
        out = ring.add(&out, &ring.monomial(Exponents::unit(n, k), d.clone()));
    }
    out
}
