//! Gradings, the associated quasi-commutative extension, the radical quotient
//! and the radical-commutation identity.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use crate::basering::{exponent_vectors, BaseElement, BaseRingSpec, Bideg, Exponents};
use crate::classify::{classify, Bijectivity};
use crate::error::{Result, SpbwError};
use crate::linalg::{self, Row};
use crate::skewcore::{PairRelation, Presentation, SkewElement, SkewRing};

/// Degree assignments. The first component is the degree that Koszulity
/// statements refer to; the second keeps bigraded windows finite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GradingSpec {
    /// `x_i -> (w_i, 0)`, `y_j -> (b_j, 0)`.
    Standard,
    /// `x_i -> (w_i, 0)`, `y_j -> (0, 0)`; the base ring sits in degree 0.
    Generalized,
    /// `y_j -> (b_j, 0)`, `x_i -> (0, 1)`.
    BaseInduced,
    /// `x_i -> (w_i, 0)`, `y_j -> (0, b_j)`.
    RAugmented,
}

impl std::str::FromStr for GradingSpec {
    type Err = SpbwError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(GradingSpec::Standard),
            "generalized" => Ok(GradingSpec::Generalized),
            "base-induced" => Ok(GradingSpec::BaseInduced),
            "r-augmented" => Ok(GradingSpec::RAugmented),
            _ => Err(SpbwError::InvalidGrading(format!("unknown grading `{s}`"))),
        }
    }
}

impl std::fmt::Display for GradingSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            GradingSpec::Standard => "standard",
            GradingSpec::Generalized => "generalized",
            GradingSpec::BaseInduced => "base-induced",
            GradingSpec::RAugmented => "r-augmented",
        })
    }
}

/// Generator degrees under a grading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weights {
    pub x: Vec<Bideg>,
    pub y: Vec<Bideg>,
}

impl GradingSpec {
    pub fn weights(&self, pres: &Presentation) -> Weights {
        let b = &pres.base.degrees;
        let w = &pres.xdegrees;
        match self {
            GradingSpec::Standard => Weights {
                x: w.iter().map(|&d| (d, 0)).collect(),
                y: b.iter().map(|&d| (d, 0)).collect(),
            },
            GradingSpec::Generalized => Weights {
                x: w.iter().map(|&d| (d, 0)).collect(),
                y: vec![(0, 0); b.len()],
            },
            GradingSpec::BaseInduced => Weights {
                x: vec![(0, 1); w.len()],
                y: b.iter().map(|&d| (d, 0)).collect(),
            },
            GradingSpec::RAugmented => Weights {
                x: w.iter().map(|&d| (d, 0)).collect(),
                y: b.iter().map(|&d| (0, d)).collect(),
            },
        }
    }
}

pub(crate) fn add(a: Bideg, b: Bideg) -> Bideg {
    (a.0 + b.0, a.1 + b.1)
}

pub(crate) fn checked_sub(a: Bideg, b: Bideg) -> Option<Bideg> {
    Some((a.0.checked_sub(b.0)?, a.1.checked_sub(b.1)?))
}

pub(crate) fn within(d: Bideg, bounds: Bideg) -> bool {
    d.0 <= bounds.0 && d.1 <= bounds.1
}

/// Every bidegree inside `bounds`, ordered so that `d` precedes `e`
/// whenever `d <= e` componentwise.
pub fn degrees_within(bounds: Bideg) -> Vec<Bideg> {
    let mut v: Vec<Bideg> = (0..=bounds.0)
        .flat_map(|a| (0..=bounds.1).map(move |b| (a, b)))
        .collect();
    v.sort_by_key(|&(a, b)| (a + b, a));
    v
}

/// A K-basis element `y^u x^alpha` of `A`.
pub type BasisMonomial = (Exponents, Exponents);

/// K-bases of the graded components of `A`, built from the free-module
/// identity `A = sum_alpha R x^alpha`.
#[derive(Debug)]
pub struct GradedBasis {
    ring: SkewRing,
    weights: Weights,
    cache: Mutex<HashMap<Bideg, std::sync::Arc<ComponentBasis>>>,
}

#[derive(Debug)]
pub struct ComponentBasis {
    pub monomials: Vec<BasisMonomial>,
    index: HashMap<BasisMonomial, usize>,
}

impl ComponentBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn position(&self, m: &BasisMonomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

impl GradedBasis {
    /// Requires every `x_i` to have nonzero degree and every base variable
    /// of degree zero to be nilpotent.
    pub fn new(ring: SkewRing, weights: Weights) -> Result<Self> {
        if weights.x.contains(&(0, 0)) {
            return Err(SpbwError::InvalidGrading(
                "skew variables must have nonzero degree".into(),
            ));
        }
        for (j, w) in weights.y.iter().enumerate() {
            if *w == (0, 0) && ring.base().nilpotency_index(j).is_none() {
                return Err(SpbwError::InvalidGrading(format!(
                    "{} has degree zero but is not nilpotent",
                    ring.base().names()[j]
                )));
            }
        }
        Ok(GradedBasis {
            ring,
            weights,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn ring(&self) -> &SkewRing {
        &self.ring
    }

    pub fn weights(&self) -> &Weights {
        &self.weights
    }

    pub fn component(&self, e: Bideg) -> std::sync::Arc<ComponentBasis> {
        if let Some(c) = self.cache.lock().unwrap().get(&e) {
            return c.clone();
        }
        let n = self.ring.n();
        let caps = vec![None; n];
        let mut monomials = Vec::new();
        for t in degrees_within(e) {
            let rest = checked_sub(e, t).expect("t <= e");
            let xs = exponent_vectors(&self.weights.x, t, &caps);
            if xs.is_empty() {
                continue;
            }
            let ys = self.ring.base().normal_monomials(&self.weights.y, rest);
            for a in &xs {
                for u in &ys {
                    monomials.push((u.clone(), Exponents(a.clone())));
                }
            }
        }
        monomials.sort_by(|a, b| (&a.1, &a.0).cmp(&(&b.1, &b.0)));
        let index = monomials
            .iter()
            .enumerate()
            .map(|(k, m)| (m.clone(), k))
            .collect();
        let comp = std::sync::Arc::new(ComponentBasis { monomials, index });
        self.cache.lock().unwrap().insert(e, comp.clone());
        comp
    }

    pub fn dim(&self, e: Bideg) -> usize {
        self.component(e).len()
    }

    pub fn element(&self, m: &BasisMonomial) -> SkewElement {
        let base = self.ring.base();
        self.ring
            .monomial(m.1.clone(), base.monomial(m.0.clone(), base.field().one()))
    }

    pub fn degree_of(&self, m: &BasisMonomial) -> Bideg {
        add(m.0.bidegree(&self.weights.y), m.1.bidegree(&self.weights.x))
    }

    /// Coordinates of `a` in the basis of `A_e`, or `None` if `a` has a
    /// term of another degree.
    pub fn coordinates(&self, a: &SkewElement, e: Bideg) -> Option<Row> {
        let comp = self.component(e);
        let mut row = linalg::zero_row(self.ring.base().field(), comp.len());
        for (alpha, r) in a.terms() {
            for (u, c) in r.terms() {
                let k = comp.position(&(u.clone(), alpha.clone()))?;
                row[k] = c.clone();
            }
        }
        Some(row)
    }

    pub fn from_coordinates(&self, row: &[crate::field::Scalar], e: Bideg) -> SkewElement {
        let comp = self.component(e);
        let mut out = SkewElement::zero();
        for (c, m) in row.iter().zip(&comp.monomials) {
            if !c.is_zero() {
                let base = self.ring.base();
                let t = self
                    .ring
                    .monomial(m.1.clone(), base.monomial(m.0.clone(), c.clone()));
                out = self.ring.add(&out, &t);
            }
        }
        out
    }
}

/// `A^sigma`: same `sigma_i` and constants, no derivations and no defects.
pub fn associated_quasicommutative(pres: &Presentation) -> Result<Presentation> {
    let base = pres.check_structure()?;
    let mut out = pres.clone();
    out.delta = vec![base.zero_der(); pres.n()];
    for r in out.relations.values_mut() {
        *r = PairRelation {
            c: r.c.clone(),
            ..PairRelation::commuting(&base, pres.n())
        };
    }
    Ok(out)
}

/// Checks the hypotheses under which a grading is accepted for
/// [`grading_dims`].
pub fn validate_grading(pres: &Presentation, g: GradingSpec) -> Result<()> {
    let base = pres.check_structure()?;
    match g {
        GradingSpec::BaseInduced => {
            if !classify(pres)?.constant {
                return Err(SpbwError::InvalidGrading(
                    "the base-induced grading needs a constant extension".into(),
                ));
            }
        }
        GradingSpec::Generalized => {
            if !base.is_finite_dimensional() {
                return Err(SpbwError::InvalidGrading(
                    "the generalized grading needs a finite-dimensional base ring".into(),
                ));
            }
            require_homogeneous(pres, g)?;
        }
        GradingSpec::Standard | GradingSpec::RAugmented => require_homogeneous(pres, g)?,
    }
    Ok(())
}

pub(crate) fn require_homogeneous(pres: &Presentation, g: GradingSpec) -> Result<()> {
    let report = homogeneity_check(pres, g)?;
    match report.ledgers.iter().find(|l| !l.homogeneous) {
        None => Ok(()),
        Some(l) => Err(SpbwError::InvalidGrading(format!(
            "relation {} mixes degrees {:?}",
            l.relation, l.degrees
        ))),
    }
}

/// Dimensions of graded components, serialized as `[[j, k, dim], ...]`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BigradedDims {
    pub entries: BTreeMap<Bideg, usize>,
}

impl BigradedDims {
    pub fn get(&self, d: Bideg) -> usize {
        self.entries.get(&d).copied().unwrap_or(0)
    }
}

impl Serialize for BigradedDims {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.entries.len()))?;
        for (&(j, k), &d) in &self.entries {
            seq.serialize_element(&(j, k, d))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for BigradedDims {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<(u32, u32, usize)> = Vec::deserialize(d)?;
        Ok(BigradedDims {
            entries: v.into_iter().map(|(j, k, n)| ((j, k), n)).collect(),
        })
    }
}

/// `dim_K A_(j,k)` for all `(j, k) <= bounds`.
pub fn grading_dims(pres: &Presentation, g: GradingSpec, bounds: Bideg) -> Result<BigradedDims> {
    validate_grading(pres, g)?;
    let ring = SkewRing::unchecked(pres.clone())?;
    let basis = GradedBasis::new(ring, g.weights(pres))?;
    Ok(BigradedDims {
        entries: degrees_within(bounds)
            .into_iter()
            .map(|d| (d, basis.dim(d)))
            .collect(),
    })
}

/// Degrees of the terms of one defining relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationLedger {
    pub relation: String,
    pub degrees: Vec<Bideg>,
    pub homogeneous: bool,
}

/// `A = T_R(V)/I` with `V` spanned by the variables and quadratic `I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompatibleWitness {
    pub generators: Vec<String>,
    pub relations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomogeneityReport {
    pub grading: GradingSpec,
    pub homogeneous: bool,
    pub ledgers: Vec<RelationLedger>,
    pub compatible: Option<CompatibleWitness>,
}

pub fn homogeneity_check(pres: &Presentation, g: GradingSpec) -> Result<HomogeneityReport> {
    let base = pres.check_structure()?;
    let w = g.weights(pres);
    let xn = &pres.xnames;
    let yn = base.names();
    let mut ledgers = Vec::new();
    let mut push = |relation: String, mut degrees: Vec<Bideg>| {
        degrees.sort();
        degrees.dedup();
        ledgers.push(RelationLedger {
            relation,
            homogeneous: degrees.len() <= 1,
            degrees,
        });
    };
    let shifted = |r: &BaseElement, s: Bideg| -> Vec<Bideg> {
        base.degrees_of(r, &w.y).into_iter().map(|d| add(d, s)).collect()
    };
    for (&(i, j), rel) in &pres.relations {
        let top = add(w.x[i], w.x[j]);
        let mut degs = vec![top];
        degs.extend(shifted(&rel.c, top));
        degs.extend(shifted(&rel.d0, (0, 0)));
        for (k, d) in rel.dlin.iter().enumerate() {
            degs.extend(shifted(d, w.x[k]));
        }
        push(format!("{}*{}", xn[j], xn[i]), degs);
    }
    for i in 0..pres.n() {
        for l in 0..base.m() {
            let s = &pres.sigma[i].images[l];
            let d = &pres.delta[i].images[l];
            if *s == base.var(l) && d.is_zero() {
                continue;
            }
            let mut degs = vec![add(w.x[i], w.y[l])];
            degs.extend(shifted(s, w.x[i]));
            degs.extend(shifted(d, (0, 0)));
            push(format!("{}*{}", xn[i], yn[l]), degs);
        }
    }
    let homogeneous = ledgers.iter().all(|l| l.homogeneous);
    let report = classify(pres)?;
    let compatible = (homogeneous
        && g == GradingSpec::Standard
        && report.quasi_commutative
        && report.r_augmented)
        .then(|| CompatibleWitness {
            generators: xn.clone(),
            relations: pres
                .relations
                .iter()
                .map(|(&(i, j), r)| {
                    format!("{}*{} - ({})*{}*{}", xn[j], xn[i], base.format(&r.c), xn[i], xn[j])
                })
                .collect(),
        });
    Ok(HomogeneityReport {
        grading: g,
        homogeneous,
        ledgers,
        compatible,
    })
}

fn require_local_quasi(pres: &Presentation) -> Result<crate::basering::BaseRing> {
    let base = pres.check_structure()?;
    if !classify(pres)?.quasi_commutative {
        return Err(SpbwError::Precondition("the extension is not quasi-commutative".into()));
    }
    if !base.is_finite_dimensional() {
        return Err(SpbwError::Precondition(
            "the base ring must be finite-dimensional and local".into(),
        ));
    }
    Ok(base)
}

/// `A / <y_1..y_m>`: the base ring becomes `K` and each constant is
/// replaced by its value at `y = 0`.
pub fn radical_quotient(pres: &Presentation) -> Result<Presentation> {
    let base = require_local_quasi(pres)?;
    let field = base.field();
    let kbase = BaseRingSpec::field_only(field);
    let kring = crate::basering::BaseRing::new(kbase.clone())?;
    let refs: Vec<&str> = pres.xnames.iter().map(String::as_str).collect();
    let mut out = Presentation::new(kbase, &refs)?.with_xdegrees(pres.xdegrees.clone());
    for (&(i, j), r) in &pres.relations {
        let c = base.augment(&r.c);
        if c.is_zero() {
            return Err(SpbwError::Precondition(format!(
                "c[{}][{}] vanishes modulo the radical",
                i + 1,
                j + 1
            )));
        }
        out = out.with_relation(
            i,
            j,
            PairRelation {
                c: kring.scalar(c),
                ..PairRelation::commuting(&kring, pres.n())
            },
        );
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalCommutation {
    /// `dim_K A_1`
    pub degree_one_dim: usize,
    pub left_dim: usize,
    pub right_dim: usize,
    pub equal: bool,
}

/// Compares `A_1 r` and `r A_1` inside `A_1`, where `r` is the radical of
/// `A_0 = R` and `A_1 = sum_i R x_i`.
pub fn radical_commutation_check(pres: &Presentation) -> Result<RadicalCommutation> {
    let base = require_local_quasi(pres)?;
    if classify(pres)?.bijective != Bijectivity::Yes {
        return Err(SpbwError::Precondition("the extension is not known to be bijective".into()));
    }
    let ring = SkewRing::new(pres.clone())?;
    let field = base.field();
    let weights = Weights {
        x: vec![(1, 0); pres.n()],
        y: vec![(0, 0); base.m()],
    };
    let basis = GradedBasis::new(ring.clone(), weights)?;
    let a1 = basis.component((1, 0));
    let radical: Vec<SkewElement> = base
        .all_normal_monomials()
        .into_iter()
        .filter(|e| !e.is_zero())
        .map(|e| ring.from_base(base.monomial(e, field.one())))
        .collect();
    let mut left = Vec::new();
    let mut right = Vec::new();
    for m in &a1.monomials {
        let a = basis.element(m);
        for r in &radical {
            left.push(basis.coordinates(&ring.multiply(&a, r), (1, 0)).expect("degree 1"));
            right.push(basis.coordinates(&ring.multiply(r, &a), (1, 0)).expect("degree 1"));
        }
    }
    let ncols = a1.len();
    let left_dim = linalg::rank(field, &left, ncols);
    let right_dim = linalg::rank(field, &right, ncols);
    Ok(RadicalCommutation {
        degree_one_dim: ncols,
        left_dim,
        right_dim,
        equal: linalg::same_row_space(field, &left, &right, ncols),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::field::FieldSpec;

    const Q: FieldSpec = FieldSpec::Rationals;

    #[test]
    fn quantum_plane_dims_are_binomial() {
        let p = catalog::quantum_plane(Q, 2).unwrap();
        let d = grading_dims(&p, GradingSpec::Standard, (4, 0)).unwrap();
        let v: Vec<usize> = (0..=4).map(|k| d.get((k, 0))).collect();
        assert_eq!(v, vec![1, 2, 3, 4, 5]);
    }

    #[test]
    fn diffusion_base_induced_dims() {
        let p = catalog::diffusion2(Q).unwrap();
        let d = grading_dims(&p, GradingSpec::BaseInduced, (2, 2)).unwrap();
        for j in 0..=2u32 {
            for k in 0..=2u32 {
                assert_eq!(d.get((j, k)), ((j + 1) * (k + 1)) as usize);
            }
        }
        let json = serde_json::to_string(&d).unwrap();
        assert!(json.starts_with("[[0,0,1],"));
        let back: BigradedDims = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn dual_numbers_generalized_dims() {
        let p = catalog::dual_numbers_x(Q).unwrap();
        let d = grading_dims(&p, GradingSpec::Generalized, (5, 0)).unwrap();
        assert!((0..=5).all(|k| d.get((k, 0)) == 2));
    }

    #[test]
    fn homogeneity_verdicts() {
        let q = homogeneity_check(&catalog::quantum_plane(Q, 2).unwrap(), GradingSpec::Standard)
            .unwrap();
        assert!(q.homogeneous && q.compatible.is_some());
        let w = homogeneity_check(&catalog::weyl(Q).unwrap(), GradingSpec::Standard).unwrap();
        assert!(!w.homogeneous);
        assert_eq!(w.ledgers[0].degrees, vec![(0, 0), (2, 0)]);
        let d = catalog::diffusion2(Q).unwrap();
        let s = homogeneity_check(&d, GradingSpec::Standard).unwrap();
        assert!(s.homogeneous && s.compatible.is_none());
        let b = homogeneity_check(&d, GradingSpec::BaseInduced).unwrap();
        assert!(!b.homogeneous);
        assert_eq!(b.ledgers[0].degrees, vec![(0, 2), (1, 1)]);
    }

    #[test]
    fn radical_quotients() {
        let a = radical_quotient(&catalog::dual_numbers_x(Q).unwrap()).unwrap();
        let expected = Presentation::new(BaseRingSpec::field_only(Q), &["x"]).unwrap();
        assert_eq!(a, expected);
        let q = catalog::quantum_plane(Q, 2).unwrap();
        assert_eq!(radical_quotient(&q).unwrap(), q);
        assert!(matches!(
            radical_quotient(&catalog::degenerate_dual_plane(Q).unwrap()),
            Err(SpbwError::Precondition(_))
        ));
    }

    #[test]
    fn radical_commutes_with_degree_one() {
        for p in [
            catalog::dual_numbers_x(Q).unwrap(),
            catalog::scaled_quantum_plane_over_dual(Q, 3).unwrap(),
            catalog::quantum_plane(Q, 2).unwrap(),
        ] {
            let r = radical_commutation_check(&p).unwrap();
            assert!(r.equal, "{r:?}");
        }
        let r = radical_commutation_check(&catalog::dual_numbers_x(Q).unwrap()).unwrap();
        assert_eq!((r.degree_one_dim, r.left_dim), (2, 1));
    }
}
