//! Bounded Koszulity certificates in the three modes, and a refutation.

use spbw::basering::BaseRingSpec;
use spbw::catalog;
use spbw::classify::base_extend;
use spbw::field::FieldSpec;
use spbw::koszul::{abar_equivalence_check, koszul_certificate, KoszulCertificate, KoszulMode};

fn show(name: &str, cert: &KoszulCertificate) {
    println!("{name}: {:?}, ranks {:?}", cert.verdict, cert.ranks());
    if let Some(w) = &cert.witness {
        println!("  witness: {}", w.message);
    }
}

fn main() {
    let q = FieldSpec::Rationals;
    let h = 4;
    let d = 8;
    show(
        "Q[x1, x2, x3]",
        &koszul_certificate(&catalog::polynomial(q, 3).unwrap(), KoszulMode::Classical, h, d).unwrap(),
    );
    show(
        "quantum plane q = 2",
        &koszul_certificate(&catalog::quantum_plane(q, 2).unwrap(), KoszulMode::Classical, h, d).unwrap(),
    );
    show(
        "weighted plane",
        &koszul_certificate(&catalog::weighted_plane(q).unwrap(), KoszulMode::Classical, h, d).unwrap(),
    );
    show(
        "quantum plane, window too small",
        &koszul_certificate(&catalog::quantum_plane(q, 2).unwrap(), KoszulMode::Classical, h, 5).unwrap(),
    );
    show(
        "dual numbers in x, generalized",
        &koszul_certificate(&catalog::dual_numbers_x(q).unwrap(), KoszulMode::Generalized, h, d).unwrap(),
    );
    let ext = base_extend(&catalog::quantum_plane(q, 2).unwrap(), &BaseRingSpec::polynomial(q, &["y"])).unwrap();
    show(
        "quantum plane over Q[y], R-augmented",
        &koszul_certificate(&ext, KoszulMode::RAugmented, 3, 5).unwrap(),
    );

    let report = abar_equivalence_check(&catalog::scaled_quantum_plane_over_dual(q, 3).unwrap(), 3, 6).unwrap();
    println!("scaled quantum plane over dual numbers: A and A/rad agree = {}", report.agree);

    match koszul_certificate(&catalog::weyl(q).unwrap(), KoszulMode::Classical, h, d) {
        Ok(_) => unreachable!(),
        Err(e) => println!("Weyl algebra: {e}"),
    }
}
