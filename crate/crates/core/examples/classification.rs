//! Sub-class membership, constant terms and augmentations.

use spbw::catalog;
use spbw::classify::{augmentation_split, classify, constant_term};
use spbw::field::FieldSpec;
use spbw::skewcore::SkewRing;

fn main() {
    let q = FieldSpec::Rationals;
    for (name, pres) in [
        ("quantum plane", catalog::quantum_plane(q, 2).unwrap()),
        ("Weyl algebra", catalog::weyl(q).unwrap()),
        ("Ore Weyl algebra", catalog::weyl_ore(q).unwrap()),
        ("diffusion algebra", catalog::diffusion2(q).unwrap()),
        ("dual numbers in x", catalog::dual_numbers_x(q).unwrap()),
    ] {
        let r = classify(&pres).unwrap();
        println!("{name}: {}", serde_json::to_string(&r).unwrap());
    }

    // the constant-term map is not multiplicative on the Weyl algebra
    let ring = SkewRing::new(catalog::weyl(q).unwrap()).unwrap();
    let (x1, x2) = (ring.var(0), ring.var(1));
    let f = |a: &spbw::skewcore::SkewElement| constant_term(&ring, a).unwrap().value;
    println!(
        "Weyl: f(x2 x1) = {}, f(x2) f(x1) = {}",
        ring.base().format(&f(&ring.multiply(&x2, &x1))),
        ring.base().format(&ring.base().mul(&f(&x2), &f(&x1)))
    );

    let ring = SkewRing::new(catalog::diffusion2(q).unwrap()).unwrap();
    let a = ring.add(
        &ring.multiply(&ring.var(1), &ring.var(0)),
        &ring.from_base(ring.base().var(0)),
    );
    let (a0, plus) = augmentation_split(&ring, &a).unwrap();
    println!(
        "diffusion: {} = {} + ({})",
        ring.format(&a),
        ring.base().format(&a0),
        ring.format(&plus)
    );
}
