//! Exact linear algebra over [`Scalar`]: sparse row echelon forms for
//! subspace dimensions and dense reduced row echelon forms for kernels.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::field::{Field, Scalar};

/// Sparse vector: `(column, value)` pairs, strictly increasing columns, no zeros.
pub type SparseRow = Vec<(usize, Scalar)>;

fn axpy(v: &SparseRow, c: &Scalar, r: &SparseRow) -> SparseRow {
    // v - c * r
    let mut out = Vec::with_capacity(v.len() + r.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < r.len() {
        if j == r.len() || (i < v.len() && v[i].0 < r[j].0) {
            out.push(v[i].clone());
            i += 1;
        } else if i == v.len() || r[j].0 < v[i].0 {
            out.push((r[j].0, -&(c * &r[j].1)));
            j += 1;
        } else {
            let s = &v[i].1 - &(c * &r[j].1);
            if !s.is_zero() {
                out.push((v[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// `p * v - a * r`, the fraction-free elimination step.
fn cross(v: &SparseRow, p: &Scalar, a: &Scalar, r: &SparseRow) -> SparseRow {
    let pv: SparseRow = v.iter().map(|(k, x)| (*k, p * x)).collect();
    axpy(&pv, a, r)
}

/// Over Q: integer entries with content 1 and a positive head.
/// Over F_p: monic at the head.
fn normalize(v: SparseRow) -> SparseRow {
    let Some((_, head)) = v.first() else {
        return v;
    };
    match head {
        Scalar::Modular { .. } => {
            let inv = head.inverse().expect("nonzero");
            v.into_iter().map(|(k, x)| (k, &x * &inv)).collect()
        }
        Scalar::Rational(_) => {
            let mut den = BigInt::one();
            for (_, x) in &v {
                if let Scalar::Rational(q) = x {
                    den = den.lcm(q.denom());
                }
            }
            let ints: Vec<BigInt> = v
                .iter()
                .map(|(_, x)| match x {
                    Scalar::Rational(q) => q.numer() * (&den / q.denom()),
                    Scalar::Modular { .. } => unreachable!("mixed fields"),
                })
                .collect();
            let mut g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if ints[0].is_negative() {
                g = -g;
            }
            v.iter()
                .zip(ints)
                .map(|((k, _), x)| (*k, Scalar::Rational(BigRational::from_integer(x / &g))))
                .collect()
        }
    }
}

/// Image in `field` of a rational row after clearing denominators and
/// content. A set of such images with full rank certifies full rank over Q.
pub(crate) fn integral_image(v: &SparseRow, field: Field) -> SparseRow {
    normalize(v.clone())
        .into_iter()
        .filter_map(|(k, x)| match x {
            Scalar::Rational(q) => {
                let y = field.from_bigint(q.numer());
                (!y.is_zero()).then_some((k, y))
            }
            m => Some((k, m)),
        })
        .collect()
}

/// Incrementally built row echelon basis of a subspace of `k^n`.
/// Each stored row is normalized as in [`normalize`]; its pivot is its
/// lowest column. Rational rows stay integral so entries do not pick up
/// denominators during elimination.
#[derive(Clone, Debug, Default)]
pub struct SparseEchelon {
    rows: Vec<SparseRow>,
    pivot_row: HashMap<usize, usize>,
}

impl SparseEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r[0].0)
    }

    /// Reduces `v` until its lowest column is not a pivot (or it vanishes).
    fn reduce_head(&self, v: SparseRow) -> SparseRow {
        let mut v = normalize(v);
        while let Some((c, a)) = v.first() {
            match self.pivot_row.get(c) {
                Some(&ri) => {
                    let row = &self.rows[ri];
                    let a = a.clone();
                    v = if row[0].1.is_one() {
                        axpy(&v, &a, row)
                    } else {
                        cross(&v, &row[0].1, &a, row)
                    };
                    v = normalize(v);
                }
                None => break,
            }
        }
        v
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: SparseRow) -> bool {
        let v = self.reduce_head(v);
        match v.first() {
            None => false,
            Some((c, _)) => {
                self.pivot_row.insert(*c, self.rows.len());
                self.rows.push(v);
                true
            }
        }
    }

    /// Whether `v` lies in the span.
    pub fn contains(&self, v: &SparseRow) -> bool {
        self.reduce_head(v.clone()).is_empty()
    }
}

/// Reduced row echelon form of a dense matrix; returns pivot columns.
pub fn rref(m: &mut [Vec<Scalar>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inverse().expect("nonzero");
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Scalar>], ncols: usize) -> usize {
    let mut m = m.to_vec();
    rref(&mut m, ncols).len()
}

/// Basis of `{x : M x = 0}` for a dense `rows x ncols` matrix.
pub fn kernel(m: &[Vec<Scalar>], ncols: usize, field: Field) -> Vec<Vec<Scalar>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a, ncols);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![field.zero(); ncols];
        v[free] = field.one();
        for (ri, &p) in pivots.iter().enumerate() {
            v[p] = -&a[ri][free];
        }
        basis.push(v);
    }
    basis
}

pub fn to_sparse(v: &[Scalar]) -> SparseRow {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}
