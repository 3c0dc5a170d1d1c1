//! Graded components, homogeneity and the associated quasi-commutative extension.

use spbw::catalog;
use spbw::field::FieldSpec;
use spbw::gradings::{associated_quasicommutative, grading_dims, homogeneity_check, GradingSpec};

fn main() {
    let q = FieldSpec::Rationals;

    let d2 = catalog::diffusion2(q).unwrap();
    let dims = grading_dims(&d2, GradingSpec::BaseInduced, (3, 3)).unwrap();
    println!("diffusion algebra, base-induced dims (j, k):");
    for j in 0..=3 {
        let row: Vec<usize> = (0..=3).map(|k| dims.get((j, k))).collect();
        println!("  j = {j}: {row:?}");
    }
    for g in [GradingSpec::Standard, GradingSpec::BaseInduced] {
        let h = homogeneity_check(&d2, g).unwrap();
        println!("  {g}: homogeneous = {}", h.homogeneous);
        for l in h.ledgers.iter().filter(|l| !l.homogeneous) {
            println!("    {} has terms in degrees {:?}", l.relation, l.degrees);
        }
    }

    let dual = catalog::dual_numbers_x(q).unwrap();
    let dims = grading_dims(&dual, GradingSpec::Generalized, (4, 0)).unwrap();
    println!(
        "dual numbers, generalized dims: {:?}",
        (0..=4).map(|d| dims.get((d, 0))).collect::<Vec<_>>()
    );

    let gr = associated_quasicommutative(&catalog::weyl(q).unwrap()).unwrap();
    print!("Gr of the Weyl algebra:\n{}", spbw::cli::print_presentation(&gr));
}
