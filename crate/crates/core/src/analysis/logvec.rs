//! Exact logarithm vectors over the bases of a matroid.
//!
//! An entry `{2: 1, 3: -1/2}` stands for `log 2 - (1/2) log 3`. Since the
//! logarithms of distinct primes are linearly independent over `Q`, a
//! linear condition holds for a log vector iff it holds separately for the
//! exponent vector of every prime.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use serde::Serialize;

use super::quadrangle::{v_space, w_space, BasisIndexedSpace};
use super::{AnalysisError, Result};
use crate::linalg::rank;
use crate::matroid::{circuit_hyperplanes, Mask, Matroid, RationalMatrix};
use crate::rational::{fmt_rational, prime_exponents, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LogVector {
    index: Vec<Mask>,
    entries: Vec<BTreeMap<u64, Rational>>,
}

impl LogVector {
    pub fn zero(index: Vec<Mask>) -> Self {
        let entries = vec![BTreeMap::new(); index.len()];
        LogVector { index, entries }
    }

    /// `coeff · log p · δ_B`.
    pub fn delta(index: Vec<Mask>, b: Mask, p: u64, coeff: Rational) -> Self {
        let mut v = Self::zero(index);
        let pos = v.position(b).expect("basis must be in the index");
        if !coeff.is_zero() {
            v.entries[pos].insert(p, coeff);
        }
        v
    }

    pub fn index(&self) -> &[Mask] {
        &self.index
    }

    pub fn entries(&self) -> &[BTreeMap<u64, Rational>] {
        &self.entries
    }

    pub fn position(&self, b: Mask) -> Option<usize> {
        self.index.iter().position(|&x| x == b)
    }

    pub fn entry(&self, b: Mask) -> Option<&BTreeMap<u64, Rational>> {
        self.position(b).map(|i| &self.entries[i])
    }

    pub fn primes(&self) -> BTreeSet<u64> {
        self.entries.iter().flat_map(|e| e.keys().copied()).collect()
    }

    /// Exponents of `p` across the index.
    pub fn coordinate(&self, p: u64) -> Vec<Rational> {
        self.entries
            .iter()
            .map(|e| e.get(&p).cloned().unwrap_or_else(Rational::zero))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(BTreeMap::is_empty)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.index, other.index, "log vectors over different bases");
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| {
                let mut out = a.clone();
                for (p, e) in b {
                    *out.entry(*p).or_insert_with(Rational::zero) += e;
                }
                out.retain(|_, e| !e.is_zero());
                out
            })
            .collect();
        LogVector {
            index: self.index.clone(),
            entries,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|e| {
                e.iter()
                    .map(|(p, x)| (*p, x * c))
                    .filter(|(_, x)| !x.is_zero())
                    .collect()
            })
            .collect();
        LogVector {
            index: self.index.clone(),
            entries,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Membership in a subspace of `Q^B`, tested prime by prime.
    pub fn in_space(&self, space: &BasisIndexedSpace) -> bool {
        assert_eq!(space.ambient, self.index.len());
        self.primes().into_iter().all(|p| space.contains(&self.coordinate(p)))
    }

    /// Serializable form: each basis as labels, exponents as `{"p": "e"}`.
    pub fn to_json(&self, m: &Matroid) -> Vec<LogEntryJson> {
        self.index
            .iter()
            .zip(&self.entries)
            .map(|(&b, e)| LogEntryJson {
                basis: m.labels_of(b),
                log: e.iter().map(|(p, x)| (p.to_string(), fmt_rational(x))).collect(),
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LogEntryJson {
    pub basis: Vec<String>,
    pub log: BTreeMap<String, String>,
}

/// `u(A) = (log |det A[B]|)_B` over the bases of `m`.
///
/// `A` must have full row rank `rank(m)` and its nonzero maximal minors
/// must sit exactly on the bases of `m`.
pub fn u_vector(a: &RationalMatrix, m: &Matroid) -> Result<LogVector> {
    if a.cols() != m.size() || a.rows() != m.rank_d() {
        return Err(AnalysisError::NonRepresentingMatrix(format!(
            "{}x{} matrix for a rank {} matroid on {} elements",
            a.rows(),
            a.cols(),
            m.rank_d(),
            m.size()
        )));
    }
    let mut v = LogVector::zero(m.bases().to_vec());
    for s in crate::matroid::k_subsets(m.size(), m.rank_d()) {
        let det = a.minor(s);
        match (m.basis_index(s), det.is_zero()) {
            (Some(pos), false) => v.entries[pos] = prime_exponents(&det).unwrap().into_iter().map(|(p, e)| (p, Rational::from_integer(e.into()))).collect(),
            (None, true) => {}
            _ => {
                return Err(AnalysisError::NonRepresentingMatrix(format!(
                    "minor on {:?} disagrees with the basis set",
                    m.labels_of(s)
                )))
            }
        }
    }
    Ok(v)
}

pub fn in_v_space(m: &Matroid, v: &LogVector) -> bool {
    v.in_space(&v_space(m))
}

pub fn in_w_space(m: &Matroid, v: &LogVector) -> bool {
    v.in_space(&w_space(m))
}

/// The set `X` with `bases(relaxed) = bases(m) ∪ {X}`, where `X` is a circuit-hyperplane of `m`.
pub fn relaxed_set(m: &Matroid, relaxed: &Matroid) -> Result<Mask> {
    if m.ground() != relaxed.ground() {
        return Err(AnalysisError::NotARelaxation("ground sets differ".into()));
    }
    let extra: Vec<Mask> = relaxed
        .bases()
        .iter()
        .copied()
        .filter(|&b| !m.is_basis(b))
        .collect();
    let lost = m.bases().iter().any(|&b| !relaxed.is_basis(b));
    match extra.as_slice() {
        [x] if !lost && circuit_hyperplanes(m).contains(x) => Ok(*x),
        _ => Err(AnalysisError::NotARelaxation(format!(
            "{} new bases, {} lost",
            extra.len(),
            if lost { "some" } else { "none" }
        ))),
    }
}

/// `ι`: extends a vector over `bases(m)` by `0` at the relaxed set.
pub fn iota_embed(m: &Matroid, relaxed: &Matroid, v: &[Rational]) -> Result<Vec<Rational>> {
    relaxed_set(m, relaxed)?;
    assert_eq!(v.len(), m.bases().len());
    Ok(relaxed
        .bases()
        .iter()
        .map(|&b| match m.basis_index(b) {
            Some(i) => v[i].clone(),
            None => Rational::zero(),
        })
        .collect())
}

pub fn iota_embed_log(m: &Matroid, relaxed: &Matroid, v: &LogVector) -> Result<LogVector> {
    relaxed_set(m, relaxed)?;
    let entries = relaxed
        .bases()
        .iter()
        .map(|&b| v.entry(b).cloned().unwrap_or_default())
        .collect();
    Ok(LogVector {
        index: relaxed.bases().to_vec(),
        entries,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbedReport {
    pub relaxed_set: Vec<String>,
    pub dim_v: usize,
    pub dim_w: usize,
    pub dim_v_relaxed: usize,
    pub dim_w_relaxed: usize,
    /// `ι` maps a spanning set of `V_M` into `V_M'`.
    pub iota_maps_v_into_v: bool,
    pub delta_x_in_v: bool,
    /// Dimension of `ι(U) ⊕ Q·δ_X`.
    pub sum_dim: usize,
    /// `(ι(U) ⊕ Q·δ_X) ∩ W_M' = {0}`.
    pub intersection_trivial: bool,
    /// `ι(U) ⊕ Q·δ_X` is a complement of `W_M'` in `V_M'`.
    pub spans_complement: bool,
}

/// Checks the embedding statements for the relaxation `relaxed` of `m`,
/// with `u_span` a spanning list for a complement `U_M` of `W_M` in `V_M`.
pub fn embed_report(m: &Matroid, relaxed: &Matroid, u_span: &[Vec<Rational>]) -> Result<EmbedReport> {
    let x = relaxed_set(m, relaxed)?;
    let (v, w) = (v_space(m), w_space(m));
    let (v2, w2) = (v_space(relaxed), w_space(relaxed));
    let iota_v_ok = v
        .basis
        .iter()
        .map(|b| iota_embed(m, relaxed, b))
        .collect::<Result<Vec<_>>>()?
        .iter()
        .all(|b| v2.contains(b));
    let mut delta_x = vec![Rational::zero(); relaxed.bases().len()];
    delta_x[relaxed.basis_index(x).unwrap()] = Rational::one();
    let mut sum: Vec<Vec<Rational>> = u_span
        .iter()
        .map(|u| iota_embed(m, relaxed, u))
        .collect::<Result<_>>()?;
    sum.push(delta_x.clone());
    let sum_dim = rank(&sum);
    let mut joint = w2.basis.clone();
    joint.extend(sum.iter().cloned());
    let intersection_trivial = rank(&joint) == w2.dim() + sum_dim;
    let spans_complement = intersection_trivial
        && sum.iter().all(|s| v2.contains(s))
        && w2.dim() + sum_dim == v2.dim();
    Ok(EmbedReport {
        relaxed_set: m.labels_of(x),
        dim_v: v.dim(),
        dim_w: w.dim(),
        dim_v_relaxed: v2.dim(),
        dim_w_relaxed: w2.dim(),
        iota_maps_v_into_v: iota_v_ok,
        delta_x_in_v: v2.contains(&delta_x),
        sum_dim,
        intersection_trivial,
        spans_complement,
    })
}

/// `a_B ↦ a_B · prod_{i in B} s_i`.
pub fn scaling_action(m: &Matroid, coeffs: &[Rational], s: &[Rational]) -> Vec<Rational> {
    assert_eq!(coeffs.len(), m.bases().len());
    assert_eq!(s.len(), m.size());
    m.bases()
        .iter()
        .zip(coeffs)
        .map(|(&b, a)| crate::matroid::elements(b).fold(a.clone(), |acc, i| acc * &s[i]))
        .collect()
}

/// Log vector of nonzero coefficients over `bases(m)`.
pub fn log_of_coefficients(m: &Matroid, coeffs: &[Rational]) -> Result<LogVector> {
    let mut v = LogVector::zero(m.bases().to_vec());
    for (pos, c) in coeffs.iter().enumerate() {
        let exps = prime_exponents(c)
            .ok_or_else(|| AnalysisError::NonRepresentingMatrix("zero coefficient on a basis".into()))?;
        v.entries[pos] = exps
            .into_iter()
            .map(|(p, e)| (p, Rational::from_integer(e.into())))
            .collect();
    }
    Ok(v)
}
