//! Ready-made presentations used throughout the examples and tests.

use crate::basering::{BaseElement, BaseRing, BaseRingSpec, DerMap, EndoMap};
use crate::error::Result;
use crate::field::FieldSpec;
use crate::skewcore::{PairRelation, Presentation};

fn rel(base: &BaseRing, n: usize, c: BaseElement) -> PairRelation {
    PairRelation {
        c,
        ..PairRelation::commuting(base, n)
    }
}

/// `K<x1, x2>` with `x2 x1 = q x1 x2`.
pub fn quantum_plane(field: FieldSpec, q: i64) -> Result<Presentation> {
    let spec = BaseRingSpec::field_only(field);
    let base = BaseRing::new(spec.clone())?;
    let c = base.scalar(field.from_i64(q));
    Ok(Presentation::new(spec, &["x1", "x2"])?.with_relation(0, 1, rel(&base, 2, c)))
}

/// The first Weyl algebra: `x2 x1 = x1 x2 + 1`.
pub fn weyl(field: FieldSpec) -> Result<Presentation> {
    let spec = BaseRingSpec::field_only(field);
    let base = BaseRing::new(spec.clone())?;
    let r = PairRelation {
        d0: base.one(),
        ..PairRelation::commuting(&base, 2)
    };
    Ok(Presentation::new(spec, &["x1", "x2"])?.with_relation(0, 1, r))
}

/// The diffusion algebra on two generators over `K[x1, x2]`:
/// `D2 D1 = D1 D2 - x2 D1 + x1 D2`, base variables central.
pub fn diffusion2(field: FieldSpec) -> Result<Presentation> {
    let spec = BaseRingSpec::polynomial(field, &["x1", "x2"]);
    let base = BaseRing::new(spec.clone())?;
    let r = PairRelation {
        dlin: vec![base.neg(&base.var(1)), base.var(0)],
        ..PairRelation::commuting(&base, 2)
    };
    Ok(Presentation::new(spec, &["D1", "D2"])?.with_relation(0, 1, r))
}

/// The dual numbers `K[y]/(y^2)`.
pub fn dual_numbers(field: FieldSpec) -> BaseRingSpec {
    BaseRingSpec::polynomial(field, &["y"]).with_ideal(vec![vec![2]])
}

/// `(K[y]/(y^2))[x]`.
pub fn dual_numbers_x(field: FieldSpec) -> Result<Presentation> {
    Presentation::new(dual_numbers(field), &["x"])
}

/// The commutative polynomial ring `K[x1..xn]`.
pub fn polynomial(field: FieldSpec, n: usize) -> Result<Presentation> {
    let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    Presentation::new(BaseRingSpec::field_only(field), &refs)
}

/// `K[x1, x2]` with `deg x1 = 1`, `deg x2 = 2`.
pub fn weighted_plane(field: FieldSpec) -> Result<Presentation> {
    Ok(polynomial(field, 2)?.with_xdegrees(vec![1, 2]))
}

/// The quantum plane over the dual numbers with `y` central.
pub fn quantum_plane_over_dual(field: FieldSpec, q: i64) -> Result<Presentation> {
    let spec = dual_numbers(field);
    let base = BaseRing::new(spec.clone())?;
    let c = base.scalar(field.from_i64(q));
    Ok(Presentation::new(spec, &["x1", "x2"])?.with_relation(0, 1, rel(&base, 2, c)))
}

/// The quantum plane over the dual numbers with `x_i y = 2 y x_i`.
pub fn scaled_quantum_plane_over_dual(field: FieldSpec, q: i64) -> Result<Presentation> {
    let pres = quantum_plane_over_dual(field, q)?;
    let base = pres.base_ring()?;
    let two = field.from_i64(2);
    let sigma = EndoMap {
        images: vec![base.scale(&base.var(0), &two)],
    };
    Ok(pres.with_sigma(0, sigma.clone()).with_sigma(1, sigma))
}

/// `(K[y]/(y^2))<x1, x2>` with `x2 x1 = y x1 x2`; the constant is not a unit.
pub fn degenerate_dual_plane(field: FieldSpec) -> Result<Presentation> {
    let spec = dual_numbers(field);
    let base = BaseRing::new(spec.clone())?;
    let c = base.var(0);
    Ok(Presentation::new(spec, &["x1", "x2"])?.with_relation(0, 1, rel(&base, 2, c)))
}

/// A presentation over `K[y]` whose overlaps do not resolve: `x1 y = 2 y x1`
/// while `x2 x1 = x1 x2 + 1` and `x3 x1 = x1 x3 + y`.
pub fn broken(field: FieldSpec) -> Result<Presentation> {
    let spec = BaseRingSpec::polynomial(field, &["y"]);
    let base = BaseRing::new(spec.clone())?;
    let r12 = PairRelation {
        d0: base.one(),
        ..PairRelation::commuting(&base, 3)
    };
    let r13 = PairRelation {
        d0: base.var(0),
        ..PairRelation::commuting(&base, 3)
    };
    let sigma = EndoMap {
        images: vec![base.scale(&base.var(0), &field.from_i64(2))],
    };
    Ok(Presentation::new(spec, &["x1", "x2", "x3"])?
        .with_relation(0, 1, r12)
        .with_relation(0, 2, r13)
        .with_sigma(0, sigma))
}

/// The Weyl algebra as an Ore extension `K[t][d; d/dt]`: `d t = t d + 1`.
pub fn weyl_ore(field: FieldSpec) -> Result<Presentation> {
    let spec = BaseRingSpec::polynomial(field, &["t"]);
    let base = BaseRing::new(spec.clone())?;
    let delta = DerMap {
        images: vec![base.one()],
    };
    Ok(Presentation::new(spec, &["d"])?.with_delta(0, delta))
}
