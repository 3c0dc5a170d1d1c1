use serde::{Deserialize, Serialize};

use crate::basering::Bideg;
use crate::classify::{classify, Bijectivity};
use crate::error::{Result, SpbwError};
use crate::gradings::{homogeneity_check, radical_quotient, GradedBasis, GradingSpec};
use crate::skewcore::{Presentation, SkewRing};

use super::engine::{differentials_compose_to_zero, is_minimal, minimal_resolution, Resolution};
use super::window::{build_window, WindowTarget};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KoszulMode {
    /// `A_0 = K`, standard grading.
    Classical,
    /// `A_0 = R` finite-dimensional local, base ring in degree 0.
    Generalized,
    /// The module `R = A/A_+` of an R-augmented extension.
    RAugmented,
}

impl std::str::FromStr for KoszulMode {
    type Err = SpbwError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "classical" => Ok(KoszulMode::Classical),
            "generalized" => Ok(KoszulMode::Generalized),
            "r_augmented" | "r-augmented" => Ok(KoszulMode::RAugmented),
            _ => Err(SpbwError::Precondition(format!("unknown Koszul mode `{s}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    CertifiedToBounds,
    Refuted,
    /// Nothing was refuted, but the window is too small to certify.
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorCount {
    pub degree: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub secondary: Option<u32>,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepSummary {
    pub i: usize,
    pub generators: Vec<GeneratorCount>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub step: usize,
    pub degree: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub secondary: Option<u32>,
    pub expected_degree: u32,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    #[serde(rename = "H")]
    pub homological: usize,
    #[serde(rename = "D")]
    pub internal: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub secondary: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulCertificate {
    pub mode: KoszulMode,
    pub bounds: Bounds,
    pub steps: Vec<StepSummary>,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub max_relation_degree: u32,
    pub exact_in_window: bool,
    pub d_squared_zero: bool,
    pub minimal: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl KoszulCertificate {
    /// Number of generators per step.
    pub fn ranks(&self) -> Vec<usize> {
        self.steps
            .iter()
            .map(|s| s.generators.iter().map(|g| g.count).sum())
            .collect()
    }

    pub fn certified(&self) -> bool {
        self.verdict == Verdict::CertifiedToBounds
    }
}

/// Options beyond the bounds.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CertificateOptions {
    /// Bound on the second grading component (R-augmented mode only).
    pub secondary_bound: Option<u32>,
}

fn grading_of(mode: KoszulMode) -> GradingSpec {
    match mode {
        KoszulMode::Classical => GradingSpec::Standard,
        KoszulMode::Generalized => GradingSpec::Generalized,
        KoszulMode::RAugmented => GradingSpec::RAugmented,
    }
}

/// Largest primary degree of a defining relation (commutation relations,
/// moving base generators past variables, and ideal generators).
pub fn max_relation_degree(pres: &Presentation, grading: GradingSpec) -> Result<u32> {
    let report = homogeneity_check(pres, grading)?;
    let w = grading.weights(pres);
    let mut top = report
        .ledgers
        .iter()
        .flat_map(|l| l.degrees.iter().map(|d| d.0))
        .max()
        .unwrap_or(0);
    for wx in &w.x {
        for wy in &w.y {
            top = top.max(wx.0 + wy.0);
        }
    }
    for g in &pres.base.ideal {
        let d: u32 = g.iter().zip(&w.y).map(|(&k, wy)| k * wy.0).sum();
        top = top.max(d);
    }
    Ok(top)
}

/// Full resolution data behind a certificate, for inspection.
pub struct CertificateRun {
    pub certificate: KoszulCertificate,
    pub resolution: Resolution,
}

pub fn koszul_certificate(
    pres: &Presentation,
    mode: KoszulMode,
    h: usize,
    d: u32,
) -> Result<KoszulCertificate> {
    koszul_certificate_with(pres, mode, h, d, CertificateOptions::default()).map(|r| r.certificate)
}

pub fn koszul_certificate_with(
    pres: &Presentation,
    mode: KoszulMode,
    h: usize,
    d: u32,
    options: CertificateOptions,
) -> Result<CertificateRun> {
    let ring = SkewRing::new(pres.clone())?;
    let report = classify(pres)?;
    let base = ring.base();
    let grading = grading_of(mode);
    let mut notes = Vec::new();
    let (target, secondary) = match mode {
        KoszulMode::Classical => (WindowTarget::DegreeZero, 0),
        KoszulMode::Generalized => {
            if !base.is_finite_dimensional() {
                return Err(SpbwError::Precondition(
                    "generalized mode needs a finite-dimensional local base ring".into(),
                ));
            }
            (WindowTarget::DegreeZero, 0)
        }
        KoszulMode::RAugmented => {
            if !report.r_augmented {
                return Err(SpbwError::Precondition(
                    "R-augmented mode needs a constant pre-commutative extension".into(),
                ));
            }
            if !base.is_finite_dimensional() {
                notes.push(
                    "V = sum_i R x_i is finitely generated over R but not finite-dimensional over K"
                        .into(),
                );
            }
            let s = if base.m() == 0 {
                0
            } else {
                options.secondary_bound.unwrap_or(d)
            };
            (WindowTarget::BaseModule, s)
        }
    };
    let to_precondition = |e: SpbwError| match e {
        SpbwError::InvalidGrading(msg) => {
            SpbwError::Precondition(format!("no valid {grading} grading: {msg}"))
        }
        other => other,
    };
    let bounds: Bideg = (d, secondary);
    let window = build_window(&ring, grading, target, bounds).map_err(to_precondition)?;
    let basis = GradedBasis::new(ring.clone(), grading.weights(pres)).map_err(to_precondition)?;
    let resolution = minimal_resolution(&basis, &window, h)?;
    let max_rel = max_relation_degree(pres, grading)?;

    let bigraded = secondary > 0;
    let sec = |b: u32| bigraded.then_some(b);
    let steps: Vec<StepSummary> = resolution
        .steps
        .iter()
        .map(|s| StepSummary {
            i: s.index,
            generators: s
                .betti()
                .into_iter()
                .map(|(deg, count)| GeneratorCount {
                    degree: deg.0,
                    secondary: sec(deg.1),
                    count,
                })
                .collect(),
        })
        .collect();

    let mut witness = None;
    for &(i, pos) in &resolution.discovery {
        let deg = resolution.steps[i].generator_degrees[pos];
        if deg.0 as usize != i {
            witness = Some(Witness {
                step: i,
                degree: deg.0,
                secondary: sec(deg.1),
                expected_degree: i as u32,
                message: format!(
                    "step {i} has a minimal generator in degree {} where degree {i} is required",
                    deg.0
                ),
            });
            break;
        }
    }
    if witness.is_none() && mode == KoszulMode::Generalized {
        let a0 = window.dim((0, 0));
        for i in 1..=h {
            let deg = (i as u32, 0);
            if deg.0 > d {
                break;
            }
            let syz = resolution
                .ledger
                .kernel_dims
                .get(&(i - 1, deg))
                .copied()
                .unwrap_or(0);
            let gens = resolution.steps[i]
                .generator_degrees
                .iter()
                .filter(|&&g| g == deg)
                .count();
            if syz != gens * a0 {
                witness = Some(Witness {
                    step: i,
                    degree: deg.0,
                    secondary: None,
                    expected_degree: deg.0,
                    message: format!(
                        "the degree-{i} part of the syzygy has dimension {syz}, not a free A_0-module on {gens} generators"
                    ),
                });
                break;
            }
        }
    }
    let verdict = if witness.is_some() {
        Verdict::Refuted
    } else if (d as u64) < h as u64 + max_rel as u64 {
        notes.push(format!(
            "D = {d} is below H + max relation degree = {}",
            h as u32 + max_rel
        ));
        Verdict::Inconclusive
    } else {
        Verdict::CertifiedToBounds
    };
    let certificate = KoszulCertificate {
        mode,
        bounds: Bounds {
            homological: h,
            internal: d,
            secondary: sec(secondary),
        },
        steps,
        verdict,
        witness,
        max_relation_degree: max_rel,
        exact_in_window: resolution.exactness_defects().is_empty(),
        d_squared_zero: differentials_compose_to_zero(&basis, &window, &resolution),
        minimal: is_minimal(&basis, &resolution),
        notes,
    };
    Ok(CertificateRun {
        certificate,
        resolution,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbarReport {
    pub generalized: KoszulCertificate,
    pub quotient: KoszulCertificate,
    pub agree: bool,
}

/// Generalized Koszulity of `A` next to classical Koszulity of `A / rad`.
pub fn abar_equivalence_check(pres: &Presentation, h: usize, d: u32) -> Result<AbarReport> {
    let report = classify(pres)?;
    if !report.quasi_commutative || report.bijective != Bijectivity::Yes {
        return Err(SpbwError::Precondition(
            "needs a bijective quasi-commutative extension".into(),
        ));
    }
    let generalized = koszul_certificate(pres, KoszulMode::Generalized, h, d)?;
    let quotient = koszul_certificate(&radical_quotient(pres)?, KoszulMode::Classical, h, d)?;
    let agree = generalized.verdict == quotient.verdict;
    Ok(AbarReport {
        generalized,
        quotient,
        agree,
    })
}
