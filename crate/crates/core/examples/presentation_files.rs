//! Reading, validating and printing presentation files.

use spbw::cli::{parse_presentation, print_presentation};
use spbw::skewcore::{validate_presentation, SkewRing};

const SOURCE: &str = "\
# y x = x y - x over Q[t], with x t = 2 t x
[base]
vars = t

[vars]
names = x y

[sigma]
x(t) = 2*t

[relations]
y*x = x*y - x
";

fn main() {
    let pres = parse_presentation(SOURCE).unwrap();
    let report = validate_presentation(&pres).unwrap();
    println!("valid: {} ({} overlaps)", report.passed(), report.overlaps_checked);
    print!("{}", print_presentation(&pres));

    let ring = SkewRing::new(pres).unwrap();
    let (x, y) = (ring.var(0), ring.var(1));
    println!("y x^2 = {}", ring.format(&ring.multiply(&y, &ring.pow(&x, 2))));

    let broken = SOURCE.replace("y*x = x*y - x", "y*x = x*y - y");
    match parse_presentation(&broken).map(|p| validate_presentation(&p)) {
        Ok(Ok(r)) if !r.passed() => println!("rejected: {}", r.failures[0]),
        other => println!("unexpected: {other:?}"),
    }
    let err = parse_presentation("[vars]\nnames = x\ncolour = red\n").unwrap_err();
    println!("parse error: {err}");
}
