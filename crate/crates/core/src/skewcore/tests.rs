use super::*;
use crate::basering::{BaseRingSpec, Exponents};
use crate::catalog;
use crate::error::SpbwError;
use crate::field::FieldSpec;

const Q: FieldSpec = FieldSpec::Rationals;

fn parse(ring: &SkewRing, src: &str) -> SkewElement {
    let parser = ExprParser {
        field: ring.base().field(),
        base_names: ring.base().names(),
        skew_names: &ring.presentation().xnames,
    };
    ring.normal_form(&parser.parse(src).unwrap())
}

#[test]
fn quantum_plane_products() {
    let ring = SkewRing::new(catalog::quantum_plane(Q, 2).unwrap()).unwrap();
    assert_eq!(ring.format(&parse(&ring, "x2*x1")), "(2)·x1^1·x2^1");
    assert_eq!(ring.format(&parse(&ring, "x1*x2")), "(1)·x1^1·x2^1");
    assert_eq!(ring.format(&parse(&ring, "x2^2*x1")), "(4)·x1^1·x2^2");
}

#[test]
fn weyl_reductions() {
    let ring = SkewRing::new(catalog::weyl(Q).unwrap()).unwrap();
    assert_eq!(ring.format(&parse(&ring, "x2*x1*x1")), "(1)·x1^2·x2^1 + (2)·x1^1");
    let comm = ring.sub(
        &ring.multiply(&ring.var(1), &ring.var(0)),
        &ring.multiply(&ring.var(0), &ring.var(1)),
    );
    assert_eq!(comm, ring.one());
}

#[test]
fn ore_weyl_moves_coefficients_left() {
    let ring = SkewRing::new(catalog::weyl_ore(Q).unwrap()).unwrap();
    // d t^2 = t^2 d + 2t
    assert_eq!(ring.format(&parse(&ring, "d*t^2")), "(t^2)·d^1 + (2*t)");
}

#[test]
fn diffusion_relation_and_constancy() {
    let ring = SkewRing::new(catalog::diffusion2(Q).unwrap()).unwrap();
    assert_eq!(
        ring.format(&parse(&ring, "D2*D1")),
        "(1)·D1^1·D2^1 + (-x2)·D1^1 + (x1)·D2^1"
    );
    let a = parse(&ring, "x1*D1");
    let b = parse(&ring, "D2");
    assert_eq!(ring.multiply(&a, &b), parse(&ring, "x1*D1*D2"));
    let c = parse(&ring, "x2");
    assert_eq!(ring.multiply(&b, &c), parse(&ring, "x2*D2"));
}

#[test]
fn additive_examples() {
    let ring = SkewRing::new(catalog::quantum_plane(Q, 2).unwrap()).unwrap();
    let x1 = ring.var(0);
    assert_eq!(ring.add(&x1, &ring.zero()), x1);
    assert_eq!(ring.add(&x1, &x1), parse(&ring, "2*x1"));
    assert!(ring.add(&x1, &ring.neg(&x1)).is_zero());
}

#[test]
fn broken_presentation_is_rejected_with_a_witness() {
    let report = validate_presentation(&catalog::broken(Q).unwrap()).unwrap();
    assert!(!report.passed());
    assert!(matches!(report.failures[0], SpbwError::DivergentOverlap { .. }));
    assert!(SkewRing::new(catalog::broken(Q).unwrap()).is_err());
}

#[test]
fn zero_constant_names_the_pair() {
    let base = BaseRingSpec::field_only(Q);
    let ring = crate::basering::BaseRing::new(base.clone()).unwrap();
    let rel = PairRelation {
        c: ring.zero(),
        ..PairRelation::commuting(&ring, 2)
    };
    let pres = Presentation::new(base, &["a", "b"]).unwrap().with_relation(0, 1, rel);
    let report = validate_presentation(&pres).unwrap();
    assert_eq!(report.failures, vec![SpbwError::ZeroConstant { i: 1, j: 2 }]);
}

#[test]
fn filtration_degrees() {
    let ring = SkewRing::new(catalog::quantum_plane(Q, 2).unwrap()).unwrap();
    assert_eq!(ring.filtration_degree(&ring.zero()), -1);
    assert_eq!(ring.filtration_degree(&parse(&ring, "5")), 0);
    assert_eq!(ring.filtration_degree(&parse(&ring, "x1^2*x2 + x1")), 3);
}

#[test]
fn principal_symbols() {
    let ring = SkewRing::new(catalog::weyl(Q).unwrap()).unwrap();
    let s = ring.principal_symbol(&parse(&ring, "x2*x1")).unwrap();
    assert_eq!(s, parse(&ring, "x1*x2"));
    assert_eq!(ring.principal_symbol(&parse(&ring, "7")).unwrap(), parse(&ring, "7"));
    assert_eq!(
        ring.principal_symbol(&parse(&ring, "x1^2*x2 + x1")).unwrap(),
        parse(&ring, "x1^2*x2")
    );
    assert!(ring.principal_symbol(&ring.zero()).is_err());
}

#[test]
fn left_coefficients_are_free() {
    let ring = SkewRing::new(catalog::dual_numbers_x(Q).unwrap()).unwrap();
    let y = ring.base().var(0);
    let a = ring.monomial(Exponents(vec![2]), y.clone());
    let b = ring.monomial(Exponents(vec![2]), ring.base().neg(&y));
    assert!(ring.add(&a, &b).is_zero());
    assert!(!ring.add(&a, &a).is_zero());
}

#[test]
fn n_equals_one_has_no_overlaps() {
    let report = validate_presentation(&catalog::dual_numbers_x(Q).unwrap()).unwrap();
    assert!(report.passed());
    assert_eq!(report.overlaps_checked, 0);
}

#[test]
fn spot_checks_follow_the_seed() {
    let pres = catalog::diffusion2(Q).unwrap();
    let a = validate_presentation_seeded(&pres, 7, 20).unwrap();
    assert!(a.passed());
    assert_eq!(a.spot_checks, 20);
    assert_eq!(a.overlaps_checked, 2);
}
