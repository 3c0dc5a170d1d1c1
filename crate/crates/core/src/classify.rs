//! Sub-classes of skew PBW extensions, the constant-term map, augmentation,
//! module inflation and base extension.

use serde::{Deserialize, Serialize};

use crate::basering::{BaseElement, BaseRing, BaseRingSpec, MapStatus};
use crate::error::{Result, SpbwError};
use crate::koszul::GradedWindow;
use crate::skewcore::{PairRelation, Presentation, SkewElement, SkewRing};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Bijectivity {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub constant: bool,
    pub pre_commutative: bool,
    pub quasi_commutative: bool,
    pub endomorphism_type: bool,
    pub derivation_type: bool,
    pub semi_commutative: bool,
    pub bijective: Bijectivity,
    pub r_augmented: bool,
    #[serde(rename = "augmented_over_K")]
    pub augmented_over_k: bool,
}

pub fn classify(pres: &Presentation) -> Result<ClassificationReport> {
    let base = pres.check_structure()?;
    let sigma_id = pres.sigma.iter().all(|s| base.is_identity(s));
    let delta_zero = pres
        .delta
        .iter()
        .all(|d| d.images.iter().all(BaseElement::is_zero));
    let no_d0 = pres.relations.values().all(|r| r.d0.is_zero());
    let no_defect = pres.relations.values().all(|r| !r.has_defect());

    let constant = sigma_id && delta_zero;
    let pre_commutative = no_d0;
    let quasi_commutative = delta_zero && no_defect;

    let statuses: Vec<MapStatus> = pres.sigma.iter().map(|s| base.endo_status(s)).collect();
    let units = pres.relations.values().all(|r| base.is_unit(&r.c));
    let bijective = if !units || statuses.contains(&MapStatus::NotInjective) {
        Bijectivity::No
    } else if statuses.iter().all(|s| *s == MapStatus::Bijective) {
        Bijectivity::Yes
    } else {
        Bijectivity::Unknown
    };

    Ok(ClassificationReport {
        constant,
        pre_commutative,
        quasi_commutative,
        endomorphism_type: delta_zero,
        derivation_type: sigma_id,
        semi_commutative: quasi_commutative && constant,
        bijective,
        r_augmented: pre_commutative && constant,
        // R has positive degrees, so it is connected graded.
        augmented_over_k: pre_commutative && delta_zero,
    })
}

/// The coefficient of `x^0`, with whether `a -> a_0` is a ring map on `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantTerm {
    pub value: BaseElement,
    pub is_ring_hom: bool,
}

pub fn constant_term(ring: &SkewRing, a: &SkewElement) -> Result<ConstantTerm> {
    let report = classify(ring.presentation())?;
    let zero = crate::basering::Exponents::zero(ring.n());
    Ok(ConstantTerm {
        value: a.coefficient(&zero).cloned().unwrap_or_default(),
        is_ring_hom: report.pre_commutative && report.endomorphism_type,
    })
}

/// Splits `a = a_0 + a_+` with `a_+` in the ideal generated by the variables.
pub fn augmentation_split(ring: &SkewRing, a: &SkewElement) -> Result<(BaseElement, SkewElement)> {
    if !classify(ring.presentation())?.r_augmented {
        return Err(SpbwError::Precondition(
            "the extension is not R-augmented (needs constant and pre-commutative)".into(),
        ));
    }
    let a0 = constant_term(ring, a)?.value;
    let rest = ring.sub(a, &ring.from_base(a0.clone()));
    Ok((a0, rest))
}

/// The composite `A -> R -> K`, defined when `augmented_over_K` holds.
pub fn augmentation_to_field(ring: &SkewRing, a: &SkewElement) -> Result<crate::field::Scalar> {
    if !classify(ring.presentation())?.augmented_over_k {
        return Err(SpbwError::Precondition(
            "no augmentation over K (needs pre-commutative and endomorphism type)".into(),
        ));
    }
    let a0 = constant_term(ring, a)?.value;
    Ok(ring.base().augment(&a0))
}

/// Makes an `R`-module window into an `A`-module with every `x_i` acting as zero.
pub fn inflate_module(pres: &Presentation, window: &GradedWindow) -> Result<GradedWindow> {
    let report = classify(pres)?;
    if !(report.pre_commutative && report.endomorphism_type) {
        return Err(SpbwError::Precondition(
            "inflation needs a pre-commutative extension of endomorphism type".into(),
        ));
    }
    let base = pres.check_structure()?;
    if window.n_skew() != 0 || window.m_base() != base.m() {
        return Err(SpbwError::Window(
            "expected a window over the base ring of the presentation".into(),
        ));
    }
    Ok(window.with_zero_skew_actions(&vec![(1, 0); pres.n()]))
}

/// Extends a presentation over `K` to the base ring `B`, with `B` central.
pub fn base_extend(pres: &Presentation, target: &BaseRingSpec) -> Result<Presentation> {
    let old = pres.check_structure()?;
    if old.m() != 0 {
        return Err(SpbwError::Precondition(
            "base extension starts from a presentation over the field".into(),
        ));
    }
    if old.field() != target.field {
        return Err(SpbwError::MismatchedRing);
    }
    let new = BaseRing::new(target.clone())?;
    let embed = |r: &BaseElement| match r.as_scalar() {
        Some(c) => new.scalar(c),
        None => BaseElement::zero(),
    };
    let n = pres.n();
    let relations = pres
        .relations
        .iter()
        .map(|(&k, r)| {
            (
                k,
                PairRelation {
                    c: embed(&r.c),
                    d0: embed(&r.d0),
                    dlin: r.dlin.iter().map(embed).collect(),
                },
            )
        })
        .collect();
    let out = Presentation {
        base: target.clone(),
        xnames: pres.xnames.clone(),
        xdegrees: pres.xdegrees.clone(),
        sigma: vec![new.identity_endo(); n],
        delta: vec![new.zero_der(); n],
        relations,
    };
    out.check_structure()?;
    Ok(out)
}

/// The opposite ring of a constant extension whose constants are units,
/// presented again as a (left) skew PBW extension.
pub fn opposite(pres: &Presentation) -> Result<Presentation> {
    let report = classify(pres)?;
    let base = pres.check_structure()?;
    if !report.constant {
        return Err(SpbwError::Precondition(
            "the opposite presentation is only formed for constant extensions".into(),
        ));
    }
    let mut out = pres.clone();
    for ((i, j), r) in pres.relations.iter() {
        // x_i o x_j = c (x_j o x_i) + d0 + sum dlin_k x_k, solved for x_j o x_i
        let inv = base.inverse(&r.c).ok_or_else(|| {
            SpbwError::Precondition(format!("c[{}][{}] is not a unit", i + 1, j + 1))
        })?;
        let minus_inv = base.neg(&inv);
        out.relations.insert(
            (*i, *j),
            PairRelation {
                c: inv,
                d0: base.mul(&minus_inv, &r.d0),
                dlin: r.dlin.iter().map(|d| base.mul(&minus_inv, d)).collect(),
            },
        );
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::field::FieldSpec;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn diffusion_is_constant_not_quasi() {
        let r = classify(&catalog::diffusion2(Q).unwrap()).unwrap();
        assert!(r.constant && !r.quasi_commutative && r.pre_commutative && r.r_augmented);
    }

    #[test]
    fn weyl_and_quantum_plane() {
        let w = classify(&catalog::weyl(Q).unwrap()).unwrap();
        assert!(w.derivation_type && w.constant && !w.pre_commutative && !w.r_augmented);
        let q = classify(&catalog::quantum_plane(Q, 2).unwrap()).unwrap();
        assert!(q.semi_commutative);
        assert_eq!(q.bijective, Bijectivity::Yes);
        let d = classify(&catalog::degenerate_dual_plane(Q).unwrap()).unwrap();
        assert_eq!(d.bijective, Bijectivity::No);
    }

    #[test]
    fn json_field_names() {
        let r = classify(&catalog::quantum_plane(Q, 2).unwrap()).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["bijective"], "yes");
        assert_eq!(v["augmented_over_K"], true);
    }

    #[test]
    fn opposite_of_opposite() {
        let p = catalog::diffusion2(Q).unwrap();
        let op = opposite(&p).unwrap();
        SkewRing::new(op.clone()).unwrap();
        assert_eq!(opposite(&op).unwrap(), p);
    }
}
