//! Reference computations written independently of the library: their own
//! monomial arithmetic and their own Gaussian elimination.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

#[derive(Clone, Copy, Debug)]
pub enum Fld {
    Q,
    P(i64),
}

impl Fld {
    fn norm(self, v: BigRational) -> BigRational {
        match self {
            Fld::Q => v,
            Fld::P(p) => {
                let p = BigInt::from(p);
                let num = v.numer() % &p;
                let den = v.denom() % &p;
                let inv = den.modpow(&(&p - 2), &p);
                let r = ((num * inv) % &p + &p) % &p;
                BigRational::from_integer(r)
            }
        }
    }

    pub fn int(self, v: i64) -> BigRational {
        self.norm(BigRational::from_integer(BigInt::from(v)))
    }

    fn inv(self, v: &BigRational) -> BigRational {
        self.norm(v.recip())
    }
}

/// Rank by plain row reduction.
pub fn rank(f: Fld, mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = f.inv(&rows[r][c]);
        let pivot: Vec<BigRational> = rows[r].iter().map(|v| f.norm(v * &inv)).collect();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let k = rows[i][c].clone();
                for j in 0..ncols {
                    let v = &rows[i][j] - &k * &pivot[j];
                    rows[i][j] = f.norm(v);
                }
            }
        }
        rows[r] = pivot;
        r += 1;
    }
    r
}

fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for a in (0..=d).rev() {
        for mut rest in monomials(n - 1, d - a) {
            rest.insert(0, a);
            out.push(rest);
        }
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..(1 << n))
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|b| m >> b & 1 == 1).collect())
        .collect()
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Koszul complex of `K` over the quantum affine space with
/// `x_j x_i = q x_i x_j` for all `i < j`. Checks `d^2 = 0` and exactness in
/// every internal degree `<= max_degree`, then returns the Betti table
/// `(step, degree, count)` it certifies.
pub fn quantum_koszul_betti(f: Fld, n: usize, q: i64, max_degree: u32) -> Vec<(usize, u32, usize)> {
    let qv = f.int(q);
    // x^a x^b = q^{sum_{i>j} a_i b_j} x^{a+b}
    let twist = |a: &[u32], b: &[u32]| -> u32 {
        let mut t = 0;
        for i in 0..n {
            for j in 0..i {
                t += a[i] * b[j];
            }
        }
        t
    };
    let qpow = |e: u32| (0..e).fold(f.int(1), |acc, _| f.norm(acc * &qv));
    // d(e_S) = sum_t (-q)^{|S| - 1 - t} x_{s_t} e_{S - s_t}
    let matrix = |i: usize, d: u32| -> (Vec<Vec<BigRational>>, usize) {
        let src: Vec<(Vec<usize>, Vec<u32>)> = if d < i as u32 {
            vec![]
        } else {
            subsets(n, i)
                .into_iter()
                .flat_map(|s| monomials(n, d - i as u32).into_iter().map(move |a| (s.clone(), a)))
                .collect()
        };
        let tgt: Vec<(Vec<usize>, Vec<u32>)> = if i == 0 || d + 1 < i as u32 {
            vec![]
        } else {
            subsets(n, i - 1)
                .into_iter()
                .flat_map(|s| monomials(n, d + 1 - i as u32).into_iter().map(move |a| (s.clone(), a)))
                .collect()
        };
        let rows = src
            .iter()
            .map(|(s, a)| {
                let mut row = vec![BigRational::zero(); tgt.len()];
                for (t, &k) in s.iter().enumerate() {
                    let mut xk = vec![0; n];
                    xk[k] = 1;
                    let mut b = a.clone();
                    b[k] += 1;
                    let mut rest = s.clone();
                    rest.remove(t);
                    let e = (s.len() - 1 - t) as u32;
                    let sign = if e % 2 == 1 { f.int(-1) } else { f.int(1) };
                    let coeff = f.norm(sign * qpow(e) * qpow(twist(a, &xk)));
                    let col = tgt.iter().position(|(u, c)| *u == rest && *c == b).unwrap();
                    row[col] = f.norm(&row[col] + coeff);
                }
                row
            })
            .collect();
        (rows, tgt.len())
    };
    for d in 0..=max_degree {
        let mut ranks = Vec::new();
        let mut dims = Vec::new();
        for i in 0..=n + 1 {
            let (rows, _) = matrix(i, d);
            dims.push(rows.len());
            ranks.push(if i == 0 { 0 } else { rank(f, rows.clone()) });
        }
        for i in 1..n {
            // d_i d_{i+1} = 0 via a product check on the matrices
            let (a, _) = matrix(i + 1, d);
            let (b, nb) = matrix(i, d);
            for row in &a {
                for c in 0..nb {
                    let mut s = BigRational::zero();
                    for (k, v) in row.iter().enumerate() {
                        s += v * &b[k][c];
                    }
                    assert!(f.norm(s).is_zero(), "oracle complex is not a complex");
                }
            }
        }
        let h0 = dims[0] - ranks[1];
        assert_eq!(h0, usize::from(d == 0), "oracle: H_0 in degree {d}");
        for i in 1..=n {
            assert_eq!(dims[i] - ranks[i], ranks[i + 1], "oracle: H_{i} in degree {d}");
        }
    }
    (0..=n).map(|i| (i, i as u32, binom(n, i))).collect()
}

/// The two-term resolution `0 -> A(-1) -x-> A -> R -> 0` of `R` over
/// `A = (K[y]/(y^2))[x]`, checked degree by degree on the basis `{x^p, y x^p}`.
pub fn dual_numbers_betti(max_degree: u32) -> Vec<(usize, u32, usize)> {
    let f = Fld::Q;
    for p in 0..=max_degree {
        // right multiplication by x from A_{p-1} (basis x^{p-1}, y x^{p-1}) to A_p
        let image_rank = if p == 0 {
            0
        } else {
            rank(f, vec![vec![f.int(1), f.int(0)], vec![f.int(0), f.int(1)]])
        };
        let module_dim = if p == 0 { 2 } else { 0 };
        assert_eq!(2 - image_rank, module_dim, "cokernel in degree {p}");
        // the map is injective, so nothing further is needed
    }
    vec![(0, 0, 1), (1, 1, 1)]
}

/// `(step, degree, count)` rows of a certificate, zero steps dropped.
pub fn betti_rows(cert: &spbw::koszul::KoszulCertificate) -> Vec<(usize, u32, usize)> {
    cert.steps
        .iter()
        .flat_map(|s| s.generators.iter().map(move |g| (s.i, g.degree, g.count)))
        .collect()
}

/// Path of a file in the sample corpus.
pub fn corpus(name: &str) -> String {
    format!("{}/corpus/{name}.spbw", env!("CARGO_MANIFEST_DIR"))
}

/// Runs the command line in-process; returns `(exit code, stdout, stderr)`.
pub fn spbw(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("spbw").chain(args.iter().copied());
    let code = spbw::cli::main_with_args(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}
