//! Exact quaternion matrices, the complex embedding `φ`, the functional
//! `δ(A) = sqrt|det φ(A)|`, Cauchy–Binet over the quaternions and the
//! polynomial identity behind the half-plane property of QU matroids.
//!
//! `δ` is handled through `δ²`, which is always rational here.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::det_field;
use crate::matroid::{elements, k_subsets, Mask, Matroid, MatroidError};
use crate::poly::{basis_generating_polynomial, SparsePoly};
use crate::rational::{exact_sqrt, fmt_rational, int, parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuatError {
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("det φ(A) = {0} is not a nonnegative real number")]
    UnexpectedDeterminant(String),
    #[error("precondition fails: {0}")]
    PropertyViolation(String),
    #[error("identity fails, difference {0}")]
    IdentityMismatch(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

pub type Result<T> = std::result::Result<T, QuatError>;

pub type ComplexQ = Complex<Rational>;

/// `a + b·i + c·j + d·k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quaternion {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub d: Rational,
}

impl Quaternion {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Self {
        Quaternion { a, b, c, d }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(int(a), int(b), int(c), int(d))
    }

    pub fn real(x: Rational) -> Self {
        Self::new(x, Rational::zero(), Rational::zero(), Rational::zero())
    }

    pub fn zero() -> Self {
        Self::real(Rational::zero())
    }

    pub fn one() -> Self {
        Self::real(Rational::one())
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.a.clone(), -&self.b, -&self.c, -&self.d)
    }

    pub fn norm_sq(&self) -> Rational {
        &self.a * &self.a + &self.b * &self.b + &self.c * &self.c + &self.d * &self.d
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(&self.a * s, &self.b * s, &self.c * s, &self.d * s)
    }

    /// `[[a+bi, c+di], [-c+di, a-bi]]`.
    pub fn phi(&self) -> [[ComplexQ; 2]; 2] {
        [
            [
                Complex::new(self.a.clone(), self.b.clone()),
                Complex::new(self.c.clone(), self.d.clone()),
            ],
            [
                Complex::new(-&self.c, self.d.clone()),
                Complex::new(self.a.clone(), -&self.b),
            ],
        ]
    }

    pub fn components(&self) -> [&Rational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }
}

impl Add for &Quaternion {
    type Output = Quaternion;
    fn add(self, o: &Quaternion) -> Quaternion {
        Quaternion::new(&self.a + &o.a, &self.b + &o.b, &self.c + &o.c, &self.d + &o.d)
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;
    fn sub(self, o: &Quaternion) -> Quaternion {
        Quaternion::new(&self.a - &o.a, &self.b - &o.b, &self.c - &o.c, &self.d - &o.d)
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    fn mul(self, o: &Quaternion) -> Quaternion {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&o.a, &o.b, &o.c, &o.d);
        Quaternion::new(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}i + {}j + {}k",
            fmt_rational(&self.a),
            fmt_rational(&self.b),
            fmt_rational(&self.c),
            fmt_rational(&self.d)
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Quaternion>>,
}

impl QuatMatrix {
    pub fn new(entries: Vec<Vec<Quaternion>>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        if entries.iter().any(|r| r.len() != cols) {
            return Err(QuatError::Shape("ragged rows".into()));
        }
        Ok(QuatMatrix { rows, cols, entries })
    }

    /// Real matrix viewed over the quaternions.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| Quaternion::real(int(x))).collect())
                .collect(),
        )
        .expect("rectangular literal")
    }

    pub fn identity(n: usize) -> Self {
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Quaternion::one() } else { Quaternion::zero() })
                    .collect()
            })
            .collect();
        QuatMatrix {
            rows: n,
            cols: n,
            entries,
        }
    }

    pub fn random<R: Rng>(rows: usize, cols: usize, lo: i64, hi: i64, rng: &mut R) -> Self {
        let entries = (0..rows)
            .map(|_| {
                (0..cols)
                    .map(|_| {
                        let mut g = || rng.gen_range(lo..=hi);
                        Quaternion::from_ints(g(), g(), g(), g())
                    })
                    .collect()
            })
            .collect();
        QuatMatrix { rows, cols, entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Vec<Quaternion>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &Quaternion {
        &self.entries[i][j]
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let entries = (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.entries[i][j].conj()).collect())
            .collect();
        QuatMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(QuatError::Shape(format!("{}x{} times {}x{}", self.rows, self.cols, o.rows, o.cols)));
        }
        let entries = (0..self.rows)
            .map(|i| {
                (0..o.cols)
                    .map(|j| {
                        (0..self.cols).fold(Quaternion::zero(), |acc, k| &acc + &(&self.entries[i][k] * &o.entries[k][j]))
                    })
                    .collect()
            })
            .collect();
        Ok(QuatMatrix {
            rows: self.rows,
            cols: o.cols,
            entries,
        })
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return Err(QuatError::Shape("sum of differently shaped matrices".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&o.entries)
            .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect())
            .collect();
        Ok(QuatMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    /// Columns in `cols`, in increasing order.
    pub fn columns(&self, cols: Mask) -> Self {
        let idx: Vec<usize> = elements(cols).collect();
        let entries = self
            .entries
            .iter()
            .map(|r| idx.iter().map(|&j| r[j].clone()).collect())
            .collect();
        QuatMatrix {
            rows: self.rows,
            cols: idx.len(),
            entries,
        }
    }

    /// Multiplies column `j` on the right by the real scalar `s`.
    pub fn scale_column(&self, j: usize, s: &Rational) -> Self {
        let mut out = self.clone();
        for r in out.entries.iter_mut() {
            r[j] = r[j].scale(s);
        }
        out
    }

    pub fn to_json(&self) -> QuatMatrixJson {
        QuatMatrixJson {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(|q| q.components().map(fmt_rational)).collect())
                .collect(),
        }
    }

    pub fn from_json(j: &QuatMatrixJson) -> Result<Self> {
        let entries = j
            .entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|c| {
                        let p = |s: &String| {
                            parse_rational(s).ok_or_else(|| QuatError::Malformed(format!("bad component {s:?}")))
                        };
                        Ok(Quaternion::new(p(&c[0])?, p(&c[1])?, p(&c[2])?, p(&c[3])?))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let m = Self::new(entries)?;
        if m.rows != j.rows || m.cols != j.cols {
            return Err(QuatError::Malformed(format!(
                "declared {}x{}, found {}x{}",
                j.rows, j.cols, m.rows, m.cols
            )));
        }
        Ok(m)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuatMatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<[String; 4]>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    pub entries: Vec<Vec<ComplexQ>>,
}

impl ComplexMatrix {
    pub fn rows(&self) -> usize {
        self.entries.len()
    }

    pub fn cols(&self) -> usize {
        self.entries.first().map_or(0, Vec::len)
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = o.cols();
        let entries = self
            .entries
            .iter()
            .map(|r| {
                (0..n)
                    .map(|j| {
                        r.iter()
                            .zip(&o.entries)
                            .fold(ComplexQ::zero(), |acc, (x, orow)| acc + x * &orow[j])
                    })
                    .collect()
            })
            .collect();
        ComplexMatrix { entries }
    }

    pub fn adjoint(&self) -> Self {
        let entries = (0..self.cols())
            .map(|j| self.entries.iter().map(|r| r[j].conj()).collect())
            .collect();
        ComplexMatrix { entries }
    }

    pub fn columns(&self, idx: &[usize]) -> Self {
        ComplexMatrix {
            entries: self
                .entries
                .iter()
                .map(|r| idx.iter().map(|&j| r[j].clone()).collect())
                .collect(),
        }
    }

    pub fn det(&self) -> ComplexQ {
        det_field(self.entries.clone())
    }
}

/// Entry-wise `φ`, giving a `2m × 2n` complex matrix.
pub fn phi(a: &QuatMatrix) -> ComplexMatrix {
    let mut entries = vec![vec![ComplexQ::zero(); 2 * a.cols]; 2 * a.rows];
    for i in 0..a.rows {
        for j in 0..a.cols {
            let blk = a.entries[i][j].phi();
            for (di, row) in blk.into_iter().enumerate() {
                for (dj, z) in row.into_iter().enumerate() {
                    entries[2 * i + di][2 * j + dj] = z;
                }
            }
        }
    }
    ComplexMatrix { entries }
}

/// `δ(A)² = |det φ(A)|`, after checking that `det φ(A)` is real and nonnegative.
pub fn delta_sq(a: &QuatMatrix) -> Result<Rational> {
    if a.rows != a.cols {
        return Err(QuatError::Shape(format!("δ needs a square matrix, got {}x{}", a.rows, a.cols)));
    }
    let det = phi(a).det();
    if !det.im.is_zero() || det.re.is_negative() {
        return Err(QuatError::UnexpectedDeterminant(format!(
            "{} + {}i",
            fmt_rational(&det.re),
            fmt_rational(&det.im)
        )));
    }
    Ok(det.re)
}

/// `δ` itself: rational when `δ²` is a rational square, otherwise `sqrt(δ²)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeltaValue {
    Rational(Rational),
    Sqrt(Rational),
}

impl fmt::Display for DeltaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeltaValue::Rational(q) => write!(f, "{}", fmt_rational(q)),
            DeltaValue::Sqrt(q) => write!(f, "sqrt({})", fmt_rational(q)),
        }
    }
}

pub fn delta(a: &QuatMatrix) -> Result<DeltaValue> {
    let sq = delta_sq(a)?;
    Ok(match exact_sqrt(&sq) {
        Some(r) => DeltaValue::Rational(r),
        None => DeltaValue::Sqrt(sq),
    })
}

/// `δ(AB) = δ(A)δ(B)` and `δ(A) = δ(A*)`, compared through `δ²`.
pub fn delta_multiplicativity_check(a: &QuatMatrix, b: &QuatMatrix) -> Result<bool> {
    let ab = delta_sq(&a.mul(b)?)?;
    let (da, db) = (delta_sq(a)?, delta_sq(b)?);
    Ok(ab == &da * &db && da == delta_sq(&a.adjoint())?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CauchyBinetTerm {
    pub columns: Vec<usize>,
    /// `δ(A[B] A[B]*)`, rational as `δ(A[B])²`.
    pub delta_of_gram: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CauchyBinetReport {
    /// `δ(AA*)²`.
    pub lhs_squared: String,
    /// `(sum_B δ(A[B] A[B]*))²`.
    pub rhs_squared: String,
    pub terms: Vec<CauchyBinetTerm>,
    pub holds: bool,
}

/// Checks `δ(AA*) = sum_{|B| = m} δ(A[B] A[B]*)` by squaring both sides.
///
/// Each term is computed as `δ²(A[B])` and separately cross-checked against
/// `δ²(A[B] A[B]*) = δ²(A[B])²`.
pub fn cauchy_binet_check(a: &QuatMatrix) -> Result<CauchyBinetReport> {
    let (m, n) = (a.rows, a.cols);
    if m > n {
        return Err(QuatError::Shape(format!("{m}x{n} has more rows than columns")));
    }
    let lhs = delta_sq(&a.mul(&a.adjoint())?)?;
    let mut sum = Rational::zero();
    let mut terms = Vec::new();
    let mut consistent = true;
    for b in k_subsets(n, m) {
        let ab = a.columns(b);
        let t = delta_sq(&ab)?;
        let gram = delta_sq(&ab.mul(&ab.adjoint())?)?;
        consistent &= gram == &t * &t;
        sum += &t;
        terms.push(CauchyBinetTerm {
            columns: elements(b).collect(),
            delta_of_gram: fmt_rational(&t),
        });
    }
    let rhs = &sum * &sum;
    Ok(CauchyBinetReport {
        lhs_squared: fmt_rational(&lhs),
        rhs_squared: fmt_rational(&rhs),
        holds: consistent && lhs == rhs,
        terms,
    })
}

/// `δ²(A[B])` for every `d`-subset `B` of the columns, in [`k_subsets`] order.
pub fn delta_minors(a: &QuatMatrix) -> Result<Vec<(Mask, Rational)>> {
    k_subsets(a.cols, a.rows)
        .into_iter()
        .map(|b| Ok((b, delta_sq(&a.columns(b))?)))
        .collect()
}

/// The matroid whose bases are the column sets with nonzero `δ`, on labels `1..=m`.
pub fn delta_matroid(a: &QuatMatrix) -> Result<Matroid> {
    let bases: Vec<Mask> = delta_minors(a)?
        .into_iter()
        .filter(|(_, d)| !d.is_zero())
        .map(|(b, _)| b)
        .collect();
    Ok(Matroid::from_masks(crate::matroid::numeric_labels(a.cols, 1), bases)?)
}

/// `δ(A[B]) = 1` on bases of `m` and `0` elsewhere.
pub fn delta_basis_property(a: &QuatMatrix, m: &Matroid) -> Result<bool> {
    if a.rows != m.rank_d() || a.cols != m.size() {
        return Ok(false);
    }
    Ok(delta_minors(a)?.into_iter().all(|(b, d)| {
        if m.is_basis(b) {
            d.is_one()
        } else {
            d.is_zero()
        }
    }))
}

#[derive(Debug, Clone)]
pub struct QuIdentity {
    pub matroid: Matroid,
    pub h_squared: SparsePoly,
    pub gram_determinant: SparsePoly,
    pub terms: usize,
}

/// `det(φ(A) · diag(x1, x1, …, xm, xm) · φ(A)*)` expanded by Cauchy–Binet over `C`.
pub fn gram_determinant_polynomial(a: &QuatMatrix) -> SparsePoly {
    let c = phi(a);
    let (rows, cols) = (c.rows(), c.cols());
    let vars: Vec<String> = (1..=a.cols).map(|i| format!("x{i}")).collect();
    let terms = k_subsets(cols, rows).into_iter().filter_map(|s| {
        let idx: Vec<usize> = elements(s).collect();
        let det = c.columns(&idx).det();
        let weight = &det.re * &det.re + &det.im * &det.im;
        if weight.is_zero() {
            return None;
        }
        let mut e = vec![0u32; a.cols];
        for &col in &idx {
            e[col / 2] += 1;
        }
        Some((e, weight))
    });
    SparsePoly::from_terms(vars, terms.collect::<Vec<_>>())
}

/// Checks `h_M² = det(φ(A) X φ(A)*)` as polynomials, where `M` is the matroid of nonzero `δ`-minors.
pub fn qu_hpp_identity(a: &QuatMatrix) -> Result<QuIdentity> {
    let m = delta_matroid(a)?;
    if !delta_basis_property(a, &m)? {
        return Err(QuatError::PropertyViolation(
            "some maximal minor has δ different from 0 and 1".into(),
        ));
    }
    let h = basis_generating_polynomial(&m);
    let h_squared = &h * &h;
    let gram_determinant = gram_determinant_polynomial(a);
    let diff = &h_squared - &gram_determinant;
    if !diff.is_zero() {
        return Err(QuatError::IdentityMismatch(diff.to_text()));
    }
    Ok(QuIdentity {
        terms: gram_determinant.num_terms(),
        matroid: m,
        h_squared,
        gram_determinant,
    })
}

/// The Hurwitz unit `(1 + i + j + k) / 2`.
pub fn hurwitz_unit() -> Quaternion {
    let h = crate::rational::ratio(1, 2);
    Quaternion::new(h.clone(), h.clone(), h.clone(), h)
}

/// `[[1, 0, 1, 1], [0, 1, 1, h]]` with `h` the Hurwitz unit: every `δ`-minor is `1`.
pub fn quaternionic_u24() -> QuatMatrix {
    let (o, z) = (Quaternion::one(), Quaternion::zero());
    QuatMatrix::new(vec![
        vec![o.clone(), z.clone(), o.clone(), o.clone()],
        vec![z, o.clone(), o, hurwitz_unit()],
    ])
    .expect("rectangular")
}
