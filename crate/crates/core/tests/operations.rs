use spbw::basering::{BaseRing, BaseRingSpec};
use spbw::catalog;
use spbw::classify::{
    augmentation_split, augmentation_to_field, base_extend, classify, constant_term, inflate_module, opposite,
};
use spbw::field::FieldSpec;
use spbw::gradings::GradingSpec;
use spbw::koszul::GradedWindow;
use spbw::skewcore::{validate_presentation, SkewRing};
use spbw::SpbwError;

const Q: FieldSpec = FieldSpec::Rationals;

#[test]
fn extending_the_quantum_plane_over_a_polynomial_ring() {
    let ext = base_extend(&catalog::quantum_plane(Q, 2).unwrap(), &BaseRingSpec::polynomial(Q, &["y"])).unwrap();
    assert!(validate_presentation(&ext).unwrap().passed());
    let r = classify(&ext).unwrap();
    assert!(r.constant && r.quasi_commutative && r.r_augmented);

    let ring = SkewRing::new(ext).unwrap();
    let y = ring.from_base(ring.base().var(0));
    let (x1, x2) = (ring.var(0), ring.var(1));
    assert_eq!(ring.multiply(&x1, &y), ring.multiply(&y, &x1));
    let lhs = ring.multiply(&x2, &x1);
    let rhs = ring.scale_left(&ring.base().int(2), &ring.multiply(&x1, &x2));
    assert_eq!(lhs, rhs);
}

#[test]
fn base_extension_needs_a_field_base_and_matching_field() {
    let err = base_extend(&catalog::dual_numbers_x(Q).unwrap(), &BaseRingSpec::polynomial(Q, &["y"]));
    assert!(matches!(err, Err(SpbwError::Precondition(_))));
    let err = base_extend(&catalog::quantum_plane(Q, 2).unwrap(), &BaseRingSpec::polynomial(FieldSpec::Prime(7), &["y"]));
    assert!(matches!(err, Err(SpbwError::MismatchedRing)));
}

#[test]
fn inflation_of_base_modules() {
    let pres = catalog::dual_numbers_x(Q).unwrap();
    let base = BaseRing::new(pres.base.clone()).unwrap();
    let window = GradedWindow::base_ring_window(&base, &[(0, 0)], (3, 0));
    let inflated = inflate_module(&pres, &window).unwrap();
    assert_eq!(inflated.n_skew(), 1);
    assert_eq!(inflated.dim((0, 0)), 2);
    inflated.check_relations(&SkewRing::new(pres).unwrap()).unwrap();

    // the trivial module K over the quantum plane
    let qp = catalog::quantum_plane(Q, 2).unwrap();
    let k = BaseRing::new(qp.base.clone()).unwrap();
    let window = GradedWindow::base_ring_window(&k, &[], (2, 0));
    let inflated = inflate_module(&qp, &window).unwrap();
    inflated.check_relations(&SkewRing::new(qp).unwrap()).unwrap();

    let weyl = catalog::weyl(Q).unwrap();
    let k = BaseRing::new(weyl.base.clone()).unwrap();
    let window = GradedWindow::base_ring_window(&k, &[], (2, 0));
    assert!(matches!(inflate_module(&weyl, &window), Err(SpbwError::Precondition(_))));
}

#[test]
fn constant_terms_and_augmentations() {
    let ring = SkewRing::new(catalog::diffusion2(Q).unwrap()).unwrap();
    let base = ring.base();
    let x1 = ring.from_base(base.var(0));
    let a = ring.add(&ring.multiply(&x1, &ring.var(0)), &ring.from_base(base.int(3)));
    let ct = constant_term(&ring, &a).unwrap();
    assert_eq!(ct.value, base.int(3));
    assert!(ct.is_ring_hom);
    let (a0, plus) = augmentation_split(&ring, &a).unwrap();
    assert_eq!(a0, base.int(3));
    assert!(plus.terms().all(|(alpha, _)| alpha.total() > 0));

    let qp = SkewRing::new(catalog::quantum_plane(Q, 2).unwrap()).unwrap();
    let b = qp.add(&qp.var(0), &qp.from_base(qp.base().int(5)));
    assert!(constant_term(&qp, &b).unwrap().is_ring_hom);
    assert_eq!(augmentation_to_field(&qp, &b).unwrap(), Q.from_i64(5));

    let weyl = SkewRing::new(catalog::weyl(Q).unwrap()).unwrap();
    let ct = constant_term(&weyl, &weyl.multiply(&weyl.var(1), &weyl.var(0))).unwrap();
    assert_eq!(ct.value, weyl.base().one());
    assert!(!ct.is_ring_hom);
    assert!(augmentation_split(&weyl, &weyl.one()).is_err());
    assert!(augmentation_to_field(&weyl, &weyl.one()).is_err());
}

#[test]
fn constant_term_is_not_multiplicative_with_a_defect() {
    let ring = SkewRing::new(catalog::weyl(Q).unwrap()).unwrap();
    let (x1, x2) = (ring.var(0), ring.var(1));
    let prod = ring.multiply(&x2, &x1);
    let f = |e| constant_term(&ring, e).unwrap().value;
    assert_ne!(f(&prod), ring.base().mul(&f(&x2), &f(&x1)));
}

#[test]
fn opposite_presentations() {
    let qp = catalog::quantum_plane(Q, 2).unwrap();
    let op = opposite(&qp).unwrap();
    assert!(validate_presentation(&op).unwrap().passed());
    let half = BaseRing::new(op.base.clone()).unwrap().scalar(Q.from_i64(2).inv().unwrap());
    assert_eq!(op.relations[&(0, 1)].c, half);
    assert_eq!(opposite(&op).unwrap(), qp);
    assert!(matches!(opposite(&catalog::weyl_ore(Q).unwrap()), Err(SpbwError::Precondition(_))));
    assert!(opposite(&catalog::degenerate_dual_plane(Q).unwrap()).is_err());
}

#[test]
fn graded_structures_on_the_catalog() {
    let d2 = catalog::diffusion2(Q).unwrap();
    assert!(spbw::gradings::validate_grading(&d2, GradingSpec::Standard).is_ok());
    assert!(spbw::gradings::validate_grading(&d2, GradingSpec::BaseInduced).is_ok());
    assert!(!spbw::gradings::homogeneity_check(&d2, GradingSpec::BaseInduced).unwrap().homogeneous);
    assert!(spbw::gradings::validate_grading(&catalog::weyl(Q).unwrap(), GradingSpec::Standard).is_err());
}
