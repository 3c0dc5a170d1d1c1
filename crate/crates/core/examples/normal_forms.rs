//! Products and normal forms in a few standard extensions.

use spbw::catalog;
use spbw::field::FieldSpec;
use spbw::skewcore::{ExprParser, SkewRing};

fn nf(ring: &SkewRing, src: &str) -> String {
    let parser = ExprParser {
        field: ring.base().field(),
        base_names: ring.base().names(),
        skew_names: &ring.presentation().xnames,
    };
    ring.format(&ring.normal_form(&parser.parse(src).unwrap()))
}

fn main() {
    let q = FieldSpec::Rationals;
    let rings = [
        ("quantum plane q = 2", catalog::quantum_plane(q, 2), vec!["x2*x1", "x2^2*x1^2"]),
        ("Weyl algebra", catalog::weyl(q), vec!["x2*x1*x1", "(x2 + x1)^2"]),
        ("Ore extension K[t][d; d/dt]", catalog::weyl_ore(q), vec!["d*t^2", "d^2*t"]),
        ("diffusion algebra", catalog::diffusion2(q), vec!["D2*D1", "D2*x1*D1"]),
        ("dual numbers in x", catalog::dual_numbers_x(q), vec!["y*x*y", "(1 + y*x)^3"]),
    ];
    for (name, pres, exprs) in rings {
        let ring = SkewRing::new(pres.unwrap()).unwrap();
        println!("{name}");
        for e in exprs {
            println!("  {e} = {}", nf(&ring, e));
        }
    }

    let ring = SkewRing::new(catalog::quantum_plane(FieldSpec::Prime(7), 3).unwrap()).unwrap();
    let (x1, x2) = (ring.var(0), ring.var(1));
    println!("over F_7 with q = 3: x2^6 x1 = {}", ring.format(&ring.multiply(&ring.pow(&x2, 6), &x1)));
}
