//! Tensoring the Koszul resolution of the base ring up to a constant extension.

use spbw::catalog;
use spbw::field::FieldSpec;
use spbw::koszul::tensor_resolution_check;

fn main() {
    let q = FieldSpec::Rationals;
    let report = tensor_resolution_check(&catalog::diffusion2(q).unwrap(), 2, (4, 3)).unwrap();
    println!("diffusion algebra: verified = {}, ranks {:?}", report.verified, report.ranks);
    for c in report.components.iter().filter(|c| c.dim > 0 && c.k == 0) {
        println!(
            "  P{} (j = {}, k = {}): dim {}, rank out {}, homology {}",
            c.i, c.j, c.k, c.dim, c.rank_out, c.homology
        );
    }
    match tensor_resolution_check(&catalog::weyl_ore(q).unwrap(), 2, (2, 2)) {
        Ok(_) => unreachable!(),
        Err(e) => println!("Ore Weyl algebra: {e}"),
    }
}
