//! Named algebras, one-parameter families and cubic inverse forms, each with
//! the invariants it is expected to have.
//!
//! Entry ids:
//!
//! ```text
//! A[n=4,d=10]                 k[x1..xn]/(x_i x_j, x_h^2 - x1^(d-n))
//! A2[n=4,d=10,t=1]            Hilbert function (1,n,2,1,...,1)
//! A22[t=1]                    (1,4,2,2,1)
//! A3[n=5,t=1,alpha=0]         (1,n,3,1), degree n+5
//! A43[t=0]                    (1,4,3,1,1)
//! family/A22[t=1]             degenerations onto A22, parameter b
//! family/A43[t=0]             degenerations onto A43, parameter b
//! h1441/J, /J1, /J2           a family whose b=0 fiber h1441/I is unobstructed
//! cubic/...                   cubic forms in y1..y4
//! cone/...                    cubic cones in y1..y4
//! generic-cubic/k             seeded random cubics with no cubic generators
//! h1661/g                     a cubic in y1..y6 with Hilbert function (1,6,6,1)
//! h1551/k                     seeded random cubics in y1..y5
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::apolarity::{apolar_data, dual_ring, primal_ring, random_nondegenerate_cubic, InverseForm};
use crate::error::{AlgebraError, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::parse::parse_polynomial;
use crate::ring::{Ring, RingContext};

/// Seed for every randomly sampled entry.
pub const CATALOG_SEED: u64 = 20_100_510;

pub const H_A2_BETA_LOW: [usize; 6] = [1, 4, 10, 20, 14, 1];
pub const H_A2_BETA_THREE: [usize; 6] = [1, 4, 10, 20, 16, 4];

/// All Hilbert functions of local Artinian Gorenstein algebras of degree 10
/// and embedding dimension at least 4.
pub const DEGREE_TEN_SHAPES: [&[usize]; 12] = [
    &[1, 4, 1, 1, 1, 1, 1],
    &[1, 5, 1, 1, 1, 1],
    &[1, 6, 1, 1, 1],
    &[1, 7, 1, 1],
    &[1, 8, 1],
    &[1, 4, 2, 1, 1, 1],
    &[1, 4, 2, 2, 1],
    &[1, 5, 2, 1, 1],
    &[1, 6, 2, 1],
    &[1, 4, 3, 1, 1],
    &[1, 5, 3, 1],
    &[1, 4, 4, 1],
];

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedProfile {
    /// `dim_k S/I`; for families, the common fiber dimension.
    pub dim: usize,
    pub hilbert: Option<Vec<usize>>,
    pub h0: Option<usize>,
    pub dim_a2: Option<usize>,
    pub obstructed: Option<bool>,
    pub beta: Option<usize>,
    pub h_a2: Option<Vec<usize>>,
    /// Whether the form is a cone (fewer essential variables than `y`'s).
    pub cone: Option<bool>,
    /// A polynomial whose class spans the socle.
    pub socle: Option<String>,
    /// What the expectation asserts, in words.
    pub citation: String,
}

#[derive(Clone, Debug)]
pub enum EntryKind {
    Algebra {
        ideal: Ideal,
    },
    Family {
        ideal: Ideal,
        param: String,
        /// Catalog id of the `param = 0` fiber.
        special_fiber: Option<String>,
        /// Parts whose intersection is the fiber at nonzero parameter values.
        parts: Vec<String>,
        /// Whether the family is expected to be flat through `param = 0`;
        /// otherwise only nonzero parameter values are examined.
        through_zero: bool,
    },
    Form {
        form: InverseForm,
        /// A generating set of the apolar ideal written out in advance.
        printed_apolar: Option<Vec<String>>,
    },
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: String,
    pub kind: EntryKind,
    pub expected: ExpectedProfile,
}

impl CatalogEntry {
    /// The ideal for algebra entries, `g⊥` for forms, `None` for families.
    pub fn ideal(&self) -> Result<Option<Ideal>> {
        match &self.kind {
            EntryKind::Algebra { ideal } => Ok(Some(ideal.clone())),
            EntryKind::Form { form, .. } => Ok(Some(apolar_data(form)?.ideal)),
            EntryKind::Family { .. } => Ok(None),
        }
    }

    /// Number of ambient variables the entry is presented in.
    pub fn ambient(&self) -> usize {
        match &self.kind {
            EntryKind::Algebra { ideal } => ideal.ring().nvars(),
            EntryKind::Family { ideal, .. } => ideal.ring().nvars() - 1,
            EntryKind::Form { form, .. } => form.nvars(),
        }
    }
}

fn invalid(msg: impl Into<String>) -> AlgebraError {
    AlgebraError::InvalidParameters(msg.into())
}

fn ring_x(n: usize) -> Ring {
    RingContext::rational(n)
}

/// `x1..x4, b` over Q.
pub fn family_ring() -> Ring {
    RingContext::new(&["x1", "x2", "x3", "x4", "b"], Field::Rationals).expect("valid names")
}

fn build(ring: &Ring, gens: &[String]) -> Result<Ideal> {
    let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
    Ideal::parse(ring, &refs)
}

/// `x_i x_j` for `1 <= i < j <= n` with `j >= jmin`.
fn products(n: usize, jmin: usize) -> Vec<String> {
    let mut out = Vec::new();
    for j in jmin.max(2)..=n {
        for i in 1..j {
            out.push(format!("x{i}*x{j}"));
        }
    }
    out
}

/// `x_h^2 - rhs` for `hmin <= h <= n`.
fn squares(n: usize, hmin: usize, rhs: &str) -> Vec<String> {
    (hmin..=n).map(|h| format!("x{h}^2 - {rhs}")).collect()
}

/// `A_{n,d}`: Hilbert function `(1,n,1,...,1)` of degree `d`.
pub fn stretched(n: usize, d: usize) -> Result<Ideal> {
    if n == 1 {
        if d < 1 {
            return Err(invalid("d >= 1 required"));
        }
        return build(&ring_x(1), &[format!("x1^{d}")]);
    }
    if n == 0 || d < n + 2 {
        return Err(invalid(format!("A_(n,d) needs d >= n + 2, got n={n}, d={d}")));
    }
    let mut g = products(n, 2);
    g.extend(squares(n, 2, &format!("x1^{}", d - n)));
    build(&ring_x(n), &g)
}

/// `A^t_{n,2,d}`, `t = 1, 2`, Hilbert function `(1,n,2,1,...,1)`.
pub fn stretched_two(n: usize, d: usize, t: u32) -> Result<Ideal> {
    if n < 3 || d < n + 4 {
        return Err(invalid(format!(
            "A^t_(n,2,d) needs n >= 3 and d >= n + 4, got n={n}, d={d}"
        )));
    }
    let mut g = match (t, d == n + 4) {
        (1, true) => vec!["x1^2*x2 - x1^3".to_string(), "x2^2".to_string()],
        (1, false) => vec!["x1^2*x2".to_string(), format!("x2^2 - x1^{}", d - n - 2)],
        (2, _) => vec!["x1*x2".to_string(), format!("x2^3 - x1^{}", d - n - 1)],
        _ => return Err(invalid(format!("t must be 1 or 2, got {t}"))),
    };
    g.extend(products(n, 3));
    let rhs = if t == 1 && d == n + 4 {
        "x1^3".to_string()
    } else {
        format!("x1^{}", d - n - 1)
    };
    g.extend(squares(n, 3, &rhs));
    build(&ring_x(n), &g)
}

fn a22_head(t: u32) -> Result<Vec<&'static str>> {
    Ok(match t {
        1 => vec!["x1*x2", "x2^4 - x1^4"],
        2 => vec!["x1^3*x2 - x1^4", "x2^2"],
        3 => vec!["x1^3*x2 - x1^4", "x2^2 - x1^3", "x1^5"],
        _ => return Err(invalid(format!("t must be 1, 2 or 3, got {t}"))),
    })
}

/// `A^t_{4,2,2,10}`, `t = 1, 2, 3`, Hilbert function `(1,4,2,2,1)`.
pub fn two_two(t: u32) -> Result<Ideal> {
    let mut g: Vec<String> = a22_head(t)?.into_iter().map(String::from).collect();
    g.extend(products(4, 3));
    g.extend(squares(4, 3, "x1^4"));
    build(&ring_x(4), &g)
}

/// Family over `b` whose `b = 0` fiber is `A^t_{4,2,2,10}`.
pub fn two_two_family(t: u32) -> Result<Ideal> {
    let mut g: Vec<String> = a22_head(t)?.into_iter().map(String::from).collect();
    g.extend(products(4, 3));
    g.push("x3^2 - x1^4".into());
    g.push("x4^2 - b*x4 - x1^4".into());
    build(&family_ring(), &g)
}

/// `A^{t,α}_{n,3,n+5}`, Hilbert function `(1,n,3,1)`; `α` only enters `t = 1`.
pub fn three_one(n: usize, t: u32, alpha: i64) -> Result<Ideal> {
    if n < 3 {
        return Err(invalid(format!("n >= 3 required, got {n}")));
    }
    if t != 1 && alpha != 0 {
        return Err(invalid("alpha is fixed to 0 unless t = 1"));
    }
    let (head, rhs): (Vec<String>, &str) = match t {
        1 => (
            vec![
                "x1*x2 + x3^2".into(),
                "x1*x3".into(),
                format!("x2^2 - {alpha}*x3^2 + x1^2"),
            ],
            "x1^3",
        ),
        2 => (vec!["x1^2".into(), "x2^2".into(), "x3^2 + 2*x1*x2".into()], "x1*x2*x3"),
        3 => (vec!["x1^2".into(), "x2^2".into(), "x3^2".into()], "x1*x2*x3"),
        // the products x1x2, x1x3, x2x3 are forced by h(2) = 3
        4 => (
            vec![
                "x1*x2".into(),
                "x1*x3".into(),
                "x2*x3".into(),
                "x2^3 - x1^3".into(),
                "x3^3 - x1^3".into(),
            ],
            "x1^3",
        ),
        5 => (
            vec![
                "x1^2".into(),
                "x1*x2".into(),
                "x2*x3".into(),
                "x2^3 - x3^3".into(),
                "x1*x3^2 - x3^3".into(),
            ],
            "x3^3",
        ),
        6 => (
            vec![
                "x1^2".into(),
                "x1*x2".into(),
                "2*x1*x3 + x2^2".into(),
                "x3^3".into(),
                "x2*x3^2".into(),
            ],
            "x1*x3^2",
        ),
        _ => return Err(invalid(format!("t must be in 1..=6, got {t}"))),
    };
    let mut g = head;
    g.extend(products(n, 4));
    g.extend(squares(n, 4, rhs));
    build(&ring_x(n), &g)
}

fn a43_head(t: u32) -> Result<(Vec<&'static str>, &'static str)> {
    Ok(match t {
        0 => (vec!["x1*x2 + x3^2", "x1*x3", "x2^2 - x1^3"], "x1^4"),
        1 => (vec!["x1*x2 + x3^2", "x1*x3", "x2^2 - x3^2 - x1^3"], "x1^4"),
        2 => (
            vec!["x1*x2", "x1^2 - x3^3", "x2^2 - x3^3", "x1*x3^2", "x2*x3^2"],
            "x3^4",
        ),
        3 => (vec!["x1*x2", "x2*x3", "x1^2 - x3^3", "x1*x3^2", "x2^3 - x3^4"], "x3^4"),
        4 => (vec!["x1*x2", "x1*x3", "x2*x3", "x2^3 - x1^4", "x3^3 - x1^4"], "x1^4"),
        5 => (vec!["x1*x2", "x2*x3", "x1^2", "x1*x3^2 - x2^4", "x3^3 - x2^4"], "x2^4"),
        6 => (
            vec!["x1*x2 - x3^3", "2*x1*x3 + x2^2", "x1^2", "x1*x3^2", "x2*x3^2"],
            "x3^4",
        ),
        _ => return Err(invalid(format!("t must be in 0..=6, got {t}"))),
    })
}

/// `A^t_{4,3,10}`, `t = 0..6`, Hilbert function `(1,4,3,1,1)`.
pub fn three_one_one(t: u32) -> Result<Ideal> {
    let (head, rhs) = a43_head(t)?;
    let mut g: Vec<String> = head.into_iter().map(String::from).collect();
    g.extend((1..=3).map(|i| format!("x{i}*x4")));
    g.push(format!("x4^2 - {rhs}"));
    build(&ring_x(4), &g)
}

/// Family over `b` whose `b = 0` fiber is `A^t_{4,3,10}`.
pub fn three_one_one_family(t: u32) -> Result<Ideal> {
    let (head, rhs) = a43_head(t)?;
    let mut g: Vec<String> = head.into_iter().map(String::from).collect();
    g.extend((1..=3).map(|i| format!("x{i}*x4")));
    g.push(format!("x4^2 - b*x4 - {rhs}"));
    build(&family_ring(), &g)
}

const PENCIL_COMMON: [&str; 9] = [
    "x3*x4",
    "x2*x4",
    "x1*x4",
    "x1^2 + x2^2",
    "x1*x2 + x3^2",
    "x1*x3",
    "x3^3",
    "x2^2*x3",
    "x2^3",
];

/// Family whose fiber at `b = 0` is a homogeneous `(1,4,4,1)` algebra and
/// which splits into two pieces for `b ≠ 0`.
pub fn pencil() -> Result<Ideal> {
    let mut g: Vec<String> = PENCIL_COMMON.iter().map(|s| s.to_string()).collect();
    g.insert(6, "x4^3 - b^2*x4 + b*x1^3 - x1^3".into());
    build(&family_ring(), &g)
}

/// First component of the pencil for `b ≠ 0`.
pub fn pencil_part_one() -> Result<Ideal> {
    let g = [
        "x4^2",
        "x3*x4",
        "x2*x4",
        "x1*x4",
        "x1*x3",
        "x1*x2 + x3^2",
        "x1^2 + x2^2",
        "x3^3",
        "x2^2*x3",
        "x2^3",
        "b*x2*x3^2 - x2*x3^2 - b^2*x4",
    ];
    Ideal::parse(&family_ring(), &g)
}

/// Second component of the pencil for `b ≠ 0`: two reduced points.
pub fn pencil_part_two() -> Result<Ideal> {
    Ideal::parse(&family_ring(), &["x1", "x2", "x3", "x4^2 - b^2"])
}

/// Special fiber of the pencil, written out directly.
pub fn pencil_special() -> Result<Ideal> {
    let mut g: Vec<String> = PENCIL_COMMON.iter().map(|s| s.to_string()).collect();
    g.insert(6, "x4^3 - x1^3".into());
    build(&ring_x(4), &g)
}

/// Rewrites `+ -c` and `- -c` left by substituting negative parameters.
fn tidy(text: &str) -> String {
    text.replace("+ -", "- ").replace("- -", "+ ")
}

/// Cubic in six variables with Hilbert function `(1,6,6,1)`: a sum of ten cubes.
pub fn degree_fourteen_form() -> Result<InverseForm> {
    let r = dual_ring(6, Field::Rationals);
    let linear = [
        "y1",
        "y2",
        "y3",
        "y4",
        "y5",
        "y6",
        "y1 + y2 + y3 + y4 + y5 + y6",
        "2*y1 + y2 - 2*y3 + y5 - y6",
        "-y1 - 2*y2 - 2*y3 - 2*y4 + 2*y5 - 2*y6",
        "-y1 - y2 + 2*y3 + y4 - 2*y6",
    ];
    let mut g = crate::poly::Polynomial::zero(&r);
    for l in linear {
        g = &g + &parse_polynomial(l, &r)?.pow(3);
    }
    InverseForm::new(g)
}

/// `y1^2y3 - y2^3 + (1+t)y2^2y3 - t y2y3^2 + y4^3` over `field`, with its
/// apolar ideal written out.
pub fn elliptic_cubic(t: i64, field: Field) -> Result<(InverseForm, Vec<String>)> {
    if t == 0 || t == 1 {
        return Err(invalid("t must differ from 0 and 1"));
    }
    let form = format!("y4^3 + y1^2*y3 - y2^3 + {}*y2^2*y3 - {t}*y2*y3^2", 1 + t);
    let g = InverseForm::parse(&tidy(&form), 4, field)?;
    let printed = vec![
        "x1*x2".into(),
        "x1*x4".into(),
        "x2*x4".into(),
        "x3*x4".into(),
        format!("{}*x1^2 + {}*x2^2 + 3*x3^2", t * (1 + t), -t),
        format!("{}*x1^2 + {}*x2^2 - 3*x2*x3", t * t - t + 1, -(1 + t)),
        "x1^3".into(),
        "x1*x3^2".into(),
        "x3^3".into(),
        "x2^3 + x4^3".into(),
        format!("{t}*x1^2*x3 + x2*x3^2"),
        format!("{}*x1^2*x3 - x2^2*x3", 1 + t),
        "3*x1^2*x3 + x2^3".into(),
    ];
    Ok((g, printed))
}

/// `y3^2y4 + y3(b1y2^2 + 2b2y1y2 + b3y1^2) + y1^3 + y2^3`.
pub fn second_kind_three_roots(b1: i64, b2: i64, b3: i64) -> Result<(InverseForm, Vec<String>)> {
    let form = format!(
        "y3^2*y4 + {b1}*y2^2*y3 + {}*y1*y2*y3 + {b3}*y1^2*y3 + y1^3 + y2^3",
        2 * b2
    );
    let g = InverseForm::parse(&form, 4, Field::Rationals)?;
    let printed = vec![
        "x4^2".into(),
        "x2*x4".into(),
        "x1*x4".into(),
        format!("x1*x2 - {b2}*x3*x4"),
        format!("3*x2*x3 - {b2}*x1^2 - {b1}*x2^2 + {}*x3*x4", b1 * b1 + b2 * b3),
        format!("3*x1*x3 - {b3}*x1^2 - {b2}*x2^2 + {}*x3*x4", b1 * b2 + b3 * b3),
        "x1^3 - 3*x3^2*x4".into(),
        "x2^3 - 3*x3^2*x4".into(),
        "x3^3".into(),
    ];
    Ok((g, printed))
}

/// `y3^2y4 + y3(b1y2^2 + 2b2y1y2 + b3y1^2) + y2^3`; `b2 = b3 = 0` is a cone.
pub fn second_kind_triple_root(b1: i64, b2: i64, b3: i64) -> Result<(InverseForm, Vec<String>)> {
    if b2 == 0 && b3 == 0 {
        return Err(invalid("b2 = b3 = 0 gives a cone"));
    }
    let form = format!("y3^2*y4 + {b1}*y2^2*y3 + {}*y1*y2*y3 + {b3}*y1^2*y3 + y2^3", 2 * b2);
    let g = InverseForm::parse(&form, 4, Field::Rationals)?;
    let disc = b1 * b3 - b2 * b2;
    let printed = vec![
        "x4^2".into(),
        "x2*x4".into(),
        "x1*x4".into(),
        format!("x1^2 - {b3}*x3*x4"),
        format!("x1*x2 - {b2}*x3*x4"),
        format!(
            "{}*x1*x3 - {}*x2*x3 + {disc}*x2^2 - {}*x3*x4",
            3 * b2,
            3 * b3,
            b1 * disc
        ),
        "x3^3".into(),
        "x1*x3^2".into(),
        "x2*x3^2".into(),
        "x2^3 - 3*x3^2*x4".into(),
        format!("x2^2*x3 - {b1}*x3^2*x4"),
    ];
    Ok((g, printed))
}

/// `y3^2y4 + y3(2b2y1y2 + b3y1^2) + y1y2^2`.
pub fn second_kind_double_root(b2: i64, b3: i64) -> Result<(InverseForm, Vec<String>)> {
    let form = format!("y3^2*y4 + {}*y1*y2*y3 + {b3}*y1^2*y3 + y1*y2^2", 2 * b2);
    let g = InverseForm::parse(&form, 4, Field::Rationals)?;
    let printed = vec![
        "x4^2".into(),
        "x2*x4".into(),
        "x1*x4".into(),
        format!("x1^2 - {b3}*x3*x4"),
        format!("x2*x3 - {b2}*x2^2"),
        format!("x1*x3 - {b2}*x1*x2 - {b3}*x2^2 + {}*x3*x4", b2 * b2),
        "x3^3".into(),
        "x2^3".into(),
        "x1*x3^2".into(),
        "x1*x2^2 - x3^2*x4".into(),
    ];
    Ok((g, printed))
}

/// A written-out generator list as an ideal of `k[x1..x4]`.
pub fn printed_ideal(gens: &[String], field: Field) -> Result<Ideal> {
    let ring = primal_ring(4, field);
    let cleaned: Vec<String> = gens.iter().map(|g| tidy(g)).collect();
    build(&ring, &cleaned)
}

fn profile(dim: usize, citation: &str) -> ExpectedProfile {
    ExpectedProfile {
        dim,
        citation: citation.to_string(),
        ..Default::default()
    }
}

fn hilbert_of_stretched(n: usize, d: usize) -> Vec<usize> {
    let mut h = vec![1, n];
    h.extend(std::iter::repeat_n(1, d - n - 1));
    h
}

/// The full verification worklist, sorted by id.
pub fn registry() -> Result<Vec<CatalogEntry>> {
    let mut out = Vec::new();
    let algebra = |id: String, ideal: Ideal, expected: ExpectedProfile| CatalogEntry {
        id,
        kind: EntryKind::Algebra { ideal },
        expected,
    };

    for (n, d) in [(1, 4), (4, 6), (4, 10), (5, 10), (6, 10), (7, 10), (8, 10)] {
        let mut e = profile(d, "Hilbert function (1,n,1,...,1); obstructed when n >= 4");
        e.hilbert = Some(hilbert_of_stretched(n, d));
        if n >= 4 {
            e.obstructed = Some(true);
        }
        out.push(algebra(format!("A[n={n},d={d}]"), stretched(n, d)?, e));
    }

    for n in [4, 5, 6] {
        for t in [1, 2] {
            let mut e = profile(10, "Hilbert function (1,n,2,1,...,1); obstructed when n >= 4");
            let mut h = vec![1, n, 2];
            h.extend(std::iter::repeat_n(1, 10 - n - 3));
            e.hilbert = Some(h);
            e.obstructed = Some(true);
            out.push(algebra(format!("A2[n={n},d=10,t={t}]"), stretched_two(n, 10, t)?, e));
        }
    }

    for t in 1..=3 {
        let mut e = profile(10, "Hilbert function (1,4,2,2,1); tangent dimension 45, obstructed");
        e.hilbert = Some(vec![1, 4, 2, 2, 1]);
        e.h0 = Some(45);
        e.obstructed = Some(true);
        out.push(algebra(format!("A22[t={t}]"), two_two(t)?, e));
    }

    let three_one_samples: Vec<(u32, i64)> = [(1, 0), (1, 1), (1, 2)]
        .into_iter()
        .chain((2..=6).map(|t| (t, 0)))
        .collect();
    for &(t, alpha) in &three_one_samples {
        let mut e = profile(
            10,
            "Hilbert function (1,5,3,1); tangent dimension 57 for t<=3, 64 for t>=4",
        );
        e.hilbert = Some(vec![1, 5, 3, 1]);
        e.h0 = Some(if t <= 3 { 57 } else { 64 });
        e.obstructed = Some(true);
        out.push(algebra(
            format!("A3[n=5,t={t},alpha={alpha}]"),
            three_one(5, t, alpha)?,
            e,
        ));

        let mut e = profile(9, "Hilbert function (1,4,3,1); obstructed exactly for t in 4..6");
        e.hilbert = Some(vec![1, 4, 3, 1]);
        e.obstructed = Some(t >= 4);
        out.push(algebra(
            format!("A3[n=4,t={t},alpha={alpha}]"),
            three_one(4, t, alpha)?,
            e,
        ));
    }

    for t in 0..=6 {
        let mut e = profile(
            10,
            "Hilbert function (1,4,3,1,1); tangent dimension 40 for t<=1, 45 otherwise",
        );
        e.hilbert = Some(vec![1, 4, 3, 1, 1]);
        e.h0 = Some(if t <= 1 { 40 } else { 45 });
        e.obstructed = Some(t >= 2);
        out.push(algebra(format!("A43[t={t}]"), three_one_one(t)?, e));
    }

    for t in 1..=3 {
        out.push(CatalogEntry {
            id: format!("family/A22[t={t}]"),
            kind: EntryKind::Family {
                ideal: two_two_family(t)?,
                param: "b".into(),
                special_fiber: Some(format!("A22[t={t}]")),
                parts: Vec::new(),
                through_zero: true,
            },
            expected: profile(10, "flat of degree 10 with special fiber A22"),
        });
    }
    for t in 0..=6 {
        out.push(CatalogEntry {
            id: format!("family/A43[t={t}]"),
            kind: EntryKind::Family {
                ideal: three_one_one_family(t)?,
                param: "b".into(),
                special_fiber: Some(format!("A43[t={t}]")),
                parts: Vec::new(),
                through_zero: true,
            },
            expected: profile(10, "flat of degree 10 with special fiber A43"),
        });
    }

    out.push(CatalogEntry {
        id: "h1441/J".into(),
        kind: EntryKind::Family {
            ideal: pencil()?,
            param: "b".into(),
            special_fiber: Some("h1441/I".into()),
            parts: vec!["h1441/J1".into(), "h1441/J2".into()],
            through_zero: true,
        },
        expected: profile(10, "degree 10 fibers; splits as J1 ∩ J2 for b ≠ 0"),
    });
    out.push(CatalogEntry {
        id: "h1441/J1".into(),
        kind: EntryKind::Family {
            ideal: pencil_part_one()?,
            param: "b".into(),
            special_fiber: None,
            parts: vec![],
            through_zero: false,
        },
        expected: profile(8, "degree 8 component for b ≠ 0"),
    });
    out.push(CatalogEntry {
        id: "h1441/J2".into(),
        kind: EntryKind::Family {
            ideal: pencil_part_two()?,
            param: "b".into(),
            special_fiber: None,
            parts: vec![],
            through_zero: false,
        },
        expected: profile(2, "two reduced points for b ≠ 0"),
    });
    {
        let mut e = profile(
            10,
            "Hilbert function (1,4,4,1), socle x1^3, dim S/I^2 = 50, tangent dimension 40",
        );
        e.hilbert = Some(vec![1, 4, 4, 1]);
        e.socle = Some("x1^3".into());
        e.dim_a2 = Some(50);
        e.h0 = Some(40);
        e.obstructed = Some(false);
        out.push(algebra("h1441/I".into(), pencil_special()?, e));
    }

    let form_entry = |id: String, form: InverseForm, printed: Option<Vec<String>>, beta: usize, citation: &str| {
        let mut e = profile(10, citation);
        e.hilbert = Some(vec![1, 4, 4, 1]);
        e.beta = Some(beta);
        e.h_a2 = Some(if beta == 3 {
            H_A2_BETA_THREE.to_vec()
        } else {
            H_A2_BETA_LOW.to_vec()
        });
        e.h0 = Some(if beta == 3 { 45 } else { 40 });
        e.obstructed = Some(beta == 3);
        e.cone = Some(false);
        CatalogEntry {
            id,
            kind: EntryKind::Form {
                form,
                printed_apolar: printed,
            },
            expected: e,
        }
    };
    let q = Field::Rationals;
    let s = |v: &[&str]| Some(v.iter().map(|x| x.to_string()).collect::<Vec<_>>());

    for (hat, cube_side) in [("y3^3", 2), ("y2*y3^2", 3), ("y2^2*y3 - y2*y3^2", 3)] {
        let form = InverseForm::parse(&format!("y4^3 + {hat}"), 4, q)?;
        let mut e = profile(2 * cube_side + 2, "a cone: fewer than four essential variables");
        e.cone = Some(true);
        e.hilbert = Some(vec![1, cube_side, cube_side, 1]);
        out.push(CatalogEntry {
            id: format!("cone/y4^3+{}", hat.replace(' ', "")),
            kind: EntryKind::Form {
                form,
                printed_apolar: None,
            },
            expected: e,
        });
    }

    let first_kind: [(&str, &str, Option<Vec<String>>, usize); 5] = [
        (
            "y4^3+y1y2y3",
            "y4^3 + y1*y2*y3",
            s(&["x1^2", "x2^2", "x3^2", "x1*x4", "x2*x4", "x3*x4", "6*x1*x2*x3 - x4^3"]),
            1,
        ),
        (
            "y4^3+y3(y1y3-y2^2)",
            "y4^3 + y1*y3^2 - y2^2*y3",
            s(&[
                "x1^2",
                "x1*x2",
                "x2^2 + x1*x3",
                "x1*x4",
                "x2*x4",
                "x3*x4",
                "3*x1*x3^2 - x4^3",
                "x2*x3^2",
                "x3^3",
            ]),
            3,
        ),
        (
            "y4^3+y2(y1y3-y2^2)",
            "y4^3 + y1*y2*y3 - y2^3",
            s(&[
                "x1^2",
                "x2^2 + 6*x1*x3",
                "x3^2",
                "x1*x4",
                "x2*x4",
                "x3*x4",
                "6*x1*x2*x3 - x4^3",
            ]),
            1,
        ),
        (
            "y4^3+y1^2y3+y2^2y3-y2^3",
            "y4^3 + y1^2*y3 + y2^2*y3 - y2^3",
            s(&[
                "x1^2 - x2^2 - 3*x2*x3",
                "x1*x2",
                "x3^2",
                "x1*x4",
                "x2*x4",
                "x3*x4",
                "3*x2^2*x3 - x4^3",
            ]),
            1,
        ),
        (
            "y4^3+y1^2y3-y2^3",
            "y4^3 + y1^2*y3 - y2^3",
            s(&[
                "x1*x2",
                "x2*x3",
                "x3^2",
                "x1*x4",
                "x2*x4",
                "x3*x4",
                "x1^3",
                "x2^3 + x4^3",
                "3*x1^2*x3 - x4^3",
            ]),
            3,
        ),
    ];
    for (id, text, printed, beta) in first_kind {
        let form = InverseForm::parse(text, 4, q)?;
        out.push(form_entry(
            format!("cubic/{id}"),
            form,
            printed,
            beta,
            "apolar ideal as listed; beta and h_A2 as listed",
        ));
    }

    for t in [2, 3, -1] {
        let (form, printed) = elliptic_cubic(t, q)?;
        out.push(form_entry(
            format!("cubic/y4^3+elliptic[t={t}]"),
            form,
            Some(printed),
            1,
            "apolar ideal as listed; beta = 1 when t^2 - t + 1 ≠ 0",
        ));
    }
    {
        let f7 = Field::prime_above(7, 6)?;
        let (form, printed) = elliptic_cubic(3, f7)?;
        out.push(form_entry(
            "cubic/y4^3+elliptic[t=3,F7]".into(),
            form,
            Some(printed),
            3,
            "apolar ideal as listed; beta = 3 when t^2 - t + 1 = 0",
        ));
    }

    for (b1, b2, b3) in [(0, 0, 0), (1, 0, 2), (0, 1, 0), (1, 1, 1), (2, 2, 1)] {
        let (form, printed) = second_kind_three_roots(b1, b2, b3)?;
        out.push(form_entry(
            format!("cubic/y3^2y4+y1^3+y2^3[b={b1},{b2},{b3}]"),
            form,
            Some(printed),
            if b2 == 0 { 3 } else { 1 },
            "apolar ideal as listed; beta = 1 iff b2 ≠ 0",
        ));
    }
    for (b1, b2, b3) in [(0, 1, 0), (1, 0, 1), (1, 1, 1), (2, 1, 2)] {
        let (form, printed) = second_kind_triple_root(b1, b2, b3)?;
        out.push(form_entry(
            format!("cubic/y3^2y4+y2^3[b={b1},{b2},{b3}]"),
            form,
            Some(printed),
            3,
            "apolar ideal as listed; beta = 3",
        ));
    }
    for (b2, b3) in [(0, 0), (1, 0), (0, 1), (1, 2)] {
        let (form, printed) = second_kind_double_root(b2, b3)?;
        out.push(form_entry(
            format!("cubic/y3^2y4+y1y2^2[b2={b2},b3={b3}]"),
            form,
            Some(printed),
            if b3 == 0 { 3 } else { 1 },
            "apolar ideal as listed; beta = 1 iff b3 ≠ 0",
        ));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(CATALOG_SEED);
    let mut k = 0;
    while k < 5 {
        let form = random_nondegenerate_cubic(&mut rng, 4, q);
        let counts = apolar_data(&form)?.counts_by_degree;
        if counts.get(&3).copied().unwrap_or(0) != 0 {
            continue;
        }
        out.push(form_entry(
            format!("generic-cubic/{k}"),
            form,
            None,
            0,
            "no cubic generators: h_A2 = (1,4,10,20,14,1), tangent dimension 40",
        ));
        k += 1;
    }

    {
        let mut e = profile(14, "Hilbert function (1,6,6,1), dim S/I^2 = 90, tangent dimension 76");
        e.hilbert = Some(vec![1, 6, 6, 1]);
        e.h0 = Some(76);
        e.dim_a2 = Some(90);
        e.cone = Some(false);
        out.push(CatalogEntry {
            id: "h1661/g".into(),
            kind: EntryKind::Form {
                form: degree_fourteen_form()?,
                printed_apolar: None,
            },
            expected: e,
        });
    }
    for k in 0..3 {
        let form = random_nondegenerate_cubic(&mut rng, 5, q);
        let mut e = profile(12, "Hilbert function (1,5,5,1), tangent dimension 60");
        e.hilbert = Some(vec![1, 5, 5, 1]);
        e.h0 = Some(60);
        e.cone = Some(false);
        out.push(CatalogEntry {
            id: format!("h1551/{k}"),
            kind: EntryKind::Form {
                form,
                printed_apolar: None,
            },
            expected: e,
        });
    }

    out.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(out)
}

/// Entries whose id equals `key` or starts with `key` followed by `/` or `[`.
pub fn select<'a>(entries: &'a [CatalogEntry], key: &str) -> Vec<&'a CatalogEntry> {
    entries
        .iter()
        .filter(|e| {
            e.id == key
                || e.id
                    .strip_prefix(key)
                    .is_some_and(|rest| rest.starts_with('/') || rest.starts_with('['))
        })
        .collect()
}

pub fn find<'a>(entries: &'a [CatalogEntry], id: &str) -> Result<&'a CatalogEntry> {
    entries
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| AlgebraError::UnknownEntry(id.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artinian::local_hilbert_function;

    #[test]
    fn stretched_shapes() {
        let i = stretched(1, 4).unwrap();
        assert_eq!(i.generators()[0].to_string(), "x1^4");
        assert_eq!(
            local_hilbert_function(&stretched(4, 6).unwrap()).unwrap().values,
            vec![1, 4, 1]
        );
        assert!(stretched(4, 5).is_err());
    }

    #[test]
    fn parameter_checks() {
        assert!(stretched_two(4, 10, 3).is_err());
        assert!(two_two(4).is_err());
        assert!(three_one(5, 2, 1).is_err());
        assert!(three_one_one(7).is_err());
        assert!(elliptic_cubic(1, Field::Rationals).is_err());
        assert!(second_kind_triple_root(1, 0, 0).is_err());
    }

    #[test]
    fn manifest() {
        let r = registry().unwrap();
        let count = |prefix: &str| r.iter().filter(|e| e.id.starts_with(prefix)).count();
        assert_eq!(count("A["), 7);
        assert_eq!(count("A2["), 6);
        assert_eq!(count("A22["), 3);
        assert_eq!(count("A3["), 16);
        assert_eq!(count("A43["), 7);
        assert_eq!(count("family/"), 10);
        assert_eq!(count("h1441/"), 4);
        assert_eq!(count("cone/"), 3);
        assert_eq!(count("cubic/"), 22);
        assert_eq!(count("generic-cubic/"), 5);
        assert_eq!(count("h1661/"), 1);
        assert_eq!(count("h1551/"), 3);
        let mut ids: Vec<&str> = r.iter().map(|e| e.id.as_str()).collect();
        ids.dedup();
        assert_eq!(ids.len(), r.len());
        assert!(r.iter().all(|e| !e.expected.citation.is_empty() && e.expected.dim > 0));
    }

    #[test]
    fn selection_by_prefix() {
        let r = registry().unwrap();
        assert_eq!(select(&r, "h1441").len(), 4);
        assert_eq!(select(&r, "A22").len(), 3);
        assert_eq!(select(&r, "A22[t=1]").len(), 1);
        assert!(find(&r, "nope").is_err());
    }
}
