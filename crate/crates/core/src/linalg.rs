//! Exact dense linear algebra over a [`FieldSpec`].
//!
//! Vectors are rows; a linear map `V -> W` is stored as a `dim V x dim W`
//! matrix and acts by `v -> v * M`.

use crate::field::{FieldSpec, Scalar};

pub type Row = Vec<Scalar>;

pub fn zero_row(field: FieldSpec, len: usize) -> Row {
    vec![field.zero(); len]
}

pub fn is_zero_row(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

/// `acc += k * v`
pub fn axpy(acc: &mut [Scalar], k: &Scalar, v: &[Scalar]) {
    if k.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a = &*a + &(k * b);
        }
    }
}

/// `v * M`
pub fn vec_mat(field: FieldSpec, v: &[Scalar], m: &[Row], ncols: usize) -> Row {
    debug_assert_eq!(v.len(), m.len());
    let mut out = zero_row(field, ncols);
    for (k, row) in v.iter().zip(m) {
        axpy(&mut out, k, row);
    }
    out
}

/// Incrementally built row echelon form. Each stored row has a 1 at its pivot
/// and zeros at the pivots of all rows stored before it.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: FieldSpec,
    ncols: usize,
    rows: Vec<Row>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: FieldSpec, ncols: usize) -> Self {
        Echelon {
            field,
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn reduce(&self, v: &mut [Scalar]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let k = -&v[p];
                axpy(v, &k, row);
            }
        }
    }

    /// Adds `v` to the span; returns false if it was already contained.
    pub fn insert(&mut self, mut v: Row) -> bool {
        debug_assert_eq!(v.len(), self.ncols);
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("nonzero pivot");
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        is_zero_row(&w)
    }

    pub fn contains_all(&self, other: &Echelon) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }
}

pub fn rank(field: FieldSpec, rows: &[Row], ncols: usize) -> usize {
    let mut e = Echelon::new(field, ncols);
    for r in rows {
        e.insert(r.clone());
    }
    e.rank()
}

pub fn span(field: FieldSpec, rows: &[Row], ncols: usize) -> Echelon {
    let mut e = Echelon::new(field, ncols);
    for r in rows {
        e.insert(r.clone());
    }
    e
}

/// Basis of `{ x : x * M = 0 }` where `M` has the given rows.
pub fn left_kernel(field: FieldSpec, rows: &[Row], ncols: usize) -> Vec<Row> {
    let nrows = rows.len();
    let mut ech: Vec<(Row, Row, usize)> = Vec::new();
    let mut kernel = Vec::new();
    for (k, row) in rows.iter().enumerate() {
        let mut v = row.clone();
        let mut tag = zero_row(field, nrows);
        tag[k] = field.one();
        for (r, t, p) in &ech {
            if !v[*p].is_zero() {
                let c = -&v[*p];
                axpy(&mut v, &c, r);
                axpy(&mut tag, &c, t);
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => kernel.push(tag),
            Some(p) => {
                let inv = v[p].inv().expect("nonzero pivot");
                let v: Row = v.iter().map(|x| x * &inv).collect();
                let tag: Row = tag.iter().map(|x| x * &inv).collect();
                ech.push((v, tag, p));
            }
        }
    }
    debug_assert!(kernel.len() + ech.len() == nrows);
    let _ = ncols;
    kernel
}

pub fn same_row_space(field: FieldSpec, a: &[Row], b: &[Row], ncols: usize) -> bool {
    let ea = span(field, a, ncols);
    let eb = span(field, b, ncols);
    ea.rank() == eb.rank() && ea.contains_all(&eb)
}
