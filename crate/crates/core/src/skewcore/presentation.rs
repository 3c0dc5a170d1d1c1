use std::collections::{BTreeMap, HashSet};

use crate::basering::{is_identifier, BaseElement, BaseRing, BaseRingSpec, DerMap, EndoMap};
use crate::error::{Result, SpbwError};

/// Data of the commutation relation `x_j x_i = c x_i x_j + d0 + sum_k dlin[k] x_k`
/// for a pair `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairRelation {
    pub c: BaseElement,
    pub d0: BaseElement,
    pub dlin: Vec<BaseElement>,
}

impl PairRelation {
    pub fn commuting(base: &BaseRing, n: usize) -> Self {
        PairRelation {
            c: base.one(),
            d0: BaseElement::zero(),
            dlin: vec![BaseElement::zero(); n],
        }
    }

    pub fn has_defect(&self) -> bool {
        !self.d0.is_zero() || self.dlin.iter().any(|d| !d.is_zero())
    }
}

/// Full defining data of a skew PBW extension `sigma(R)<x_1..x_n>`.
///
/// Variables are ordered `x_1 < ... < x_n`; standard monomials list them in
/// ascending order. `xdegrees` is the weight of each variable in the
/// standard grading (1 unless stated otherwise).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub base: BaseRingSpec,
    pub xnames: Vec<String>,
    pub xdegrees: Vec<u32>,
    pub sigma: Vec<EndoMap>,
    pub delta: Vec<DerMap>,
    pub relations: BTreeMap<(usize, usize), PairRelation>,
}

impl Presentation {
    /// The commutative polynomial extension `R[x_1..x_n]`; customize with the
    /// `with_*` methods.
    pub fn new(base: BaseRingSpec, xnames: &[&str]) -> Result<Self> {
        let ring = BaseRing::new(base.clone())?;
        let n = xnames.len();
        let mut relations = BTreeMap::new();
        for i in 0..n {
            for j in (i + 1)..n {
                relations.insert((i, j), PairRelation::commuting(&ring, n));
            }
        }
        Ok(Presentation {
            base,
            xnames: xnames.iter().map(|s| s.to_string()).collect(),
            xdegrees: vec![1; n],
            sigma: vec![ring.identity_endo(); n],
            delta: vec![ring.zero_der(); n],
            relations,
        })
    }

    pub fn n(&self) -> usize {
        self.xnames.len()
    }

    pub fn base_ring(&self) -> Result<BaseRing> {
        BaseRing::new(self.base.clone())
    }

    pub fn rel(&self, i: usize, j: usize) -> &PairRelation {
        debug_assert!(i < j);
        &self.relations[&(i, j)]
    }

    pub fn with_relation(mut self, i: usize, j: usize, rel: PairRelation) -> Self {
        assert!(i < j && j < self.n());
        self.relations.insert((i, j), rel);
        self
    }

    pub fn with_sigma(mut self, i: usize, sigma: EndoMap) -> Self {
        self.sigma[i] = sigma;
        self
    }

    pub fn with_delta(mut self, i: usize, delta: DerMap) -> Self {
        self.delta[i] = delta;
        self
    }

    pub fn with_xdegrees(mut self, degrees: Vec<u32>) -> Self {
        self.xdegrees = degrees;
        self
    }

    /// Shape checks that do not involve arithmetic.
    pub fn check_structure(&self) -> Result<BaseRing> {
        let base = self.base_ring()?;
        let n = self.n();
        if n == 0 {
            return Err(SpbwError::Malformed("at least one skew variable is required".into()));
        }
        let mut seen: HashSet<&str> = base.names().iter().map(String::as_str).collect();
        for name in &self.xnames {
            if !is_identifier(name) {
                return Err(SpbwError::InvalidName(name.clone()));
            }
            if !seen.insert(name.as_str()) {
                return Err(SpbwError::DuplicateName(name.clone()));
            }
        }
        if self.xdegrees.len() != n || self.xdegrees.contains(&0) {
            return Err(SpbwError::Malformed(
                "skew variable degrees must be positive, one per variable".into(),
            ));
        }
        if self.sigma.len() != n || self.delta.len() != n {
            return Err(SpbwError::Malformed("one sigma and one delta per variable".into()));
        }
        let m = base.m();
        let arity_ok = |e: &BaseElement| e.arity().is_none_or(|k| k == m);
        for i in 0..n {
            for j in (i + 1)..n {
                let rel = self.relations.get(&(i, j)).ok_or_else(|| {
                    SpbwError::Malformed(format!("missing relation for pair ({}, {})", i + 1, j + 1))
                })?;
                if rel.dlin.len() != n
                    || !arity_ok(&rel.c)
                    || !arity_ok(&rel.d0)
                    || !rel.dlin.iter().all(arity_ok)
                {
                    return Err(SpbwError::Malformed(format!(
                        "relation data for pair ({}, {}) has the wrong shape",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        if self.relations.len() != n * (n - 1) / 2 {
            return Err(SpbwError::Malformed("relations indexed outside i < j".into()));
        }
        Ok(base)
    }
}
