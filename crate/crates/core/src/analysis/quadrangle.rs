//! Degenerate quadrangles and the basis-indexed spaces `V_M` and `W_M`.

use num_traits::{One, Zero};
use crate::linalg::{in_span, independent_subset, nullspace};
use crate::matroid::{connected_components, elements, k_subsets, Mask, Matroid};
use crate::rational::Rational;

/// Four bases `S∪{i,k}, S∪{j,l}, S∪{i,l}, S∪{j,k}` such that at most one of
/// `S∪{i,j}`, `S∪{k,l}` is a basis.
///
/// Canonical form: `i` is the smallest of the four elements and `k < l`.
/// For fixed `S` and `{i,j,k,l}` at most one pairing can be degenerate, so
/// this form is unique.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuadrangleRelation {
    pub s: Mask,
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
}

impl QuadrangleRelation {
    /// `[B1, B2, B3, B4]`.
    pub fn bases(&self) -> [Mask; 4] {
        let b = |x: usize, y: usize| self.s | 1 << x | 1 << y;
        [b(self.i, self.k), b(self.j, self.l), b(self.i, self.l), b(self.j, self.k)]
    }

    /// Label sets of the four bases, for comparing quadrangles across matroids on one ground set.
    pub fn basis_labels(&self, m: &Matroid) -> [Vec<String>; 4] {
        self.bases().map(|b| m.labels_of(b))
    }
}

/// Exhaustive enumeration, sorted by `(S, i, j, k, l)`.
pub fn degenerate_quadrangles(m: &Matroid) -> Vec<QuadrangleRelation> {
    let d = m.rank_d();
    if d < 2 {
        return Vec::new();
    }
    let n = m.size();
    let full = m.full_mask();
    let mut out = Vec::new();
    for s in k_subsets(n, d - 2) {
        for t in k_subsets(n, 4) {
            if t & s != 0 || t & !full != 0 {
                continue;
            }
            let el: Vec<usize> = elements(t).collect();
            let i = el[0];
            for j in el[1..].iter().copied() {
                let rest: Vec<usize> = el[1..].iter().copied().filter(|&x| x != j).collect();
                let (k, l) = (rest[0], rest[1]);
                let basis = |x: usize, y: usize| m.is_basis(s | 1 << x | 1 << y);
                let degenerate = !(basis(i, j) && basis(k, l));
                if degenerate && basis(i, k) && basis(j, l) && basis(i, l) && basis(j, k) {
                    out.push(QuadrangleRelation { s, i, j, k, l });
                }
            }
        }
    }
    out
}

/// `b_{B1} + b_{B2} - b_{B3} - b_{B4}` as a row over `m.bases()`.
///
/// This is the log of the relation `a_{B1} a_{B2} = a_{B3} a_{B4}`, the
/// three-term Plücker relation with its `S∪{i,j}`, `S∪{k,l}` term removed.
pub fn quadrangle_row(m: &Matroid, q: &QuadrangleRelation) -> Vec<Rational> {
    let mut row = vec![Rational::zero(); m.bases().len()];
    let [b1, b2, b3, b4] = q.bases();
    for (b, c) in [(b1, 1), (b2, 1), (b3, -1), (b4, -1)] {
        let idx = m.basis_index(b).expect("quadrangle members are bases");
        row[idx] += Rational::from_integer(c.into());
    }
    row
}

/// A subspace of `Q^B` given by an explicit linearly independent spanning list.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisIndexedSpace {
    pub ambient: usize,
    pub basis: Vec<Vec<Rational>>,
}

impl BasisIndexedSpace {
    pub fn from_spanning(ambient: usize, vectors: &[Vec<Rational>]) -> Self {
        BasisIndexedSpace {
            ambient,
            basis: independent_subset(vectors),
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        in_span(&self.basis, v)
    }

    pub fn contains_space(&self, other: &BasisIndexedSpace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }
}

/// The quadrangle equations of `m`, one row per degenerate quadrangle.
pub fn quadrangle_matrix(m: &Matroid) -> Vec<Vec<Rational>> {
    degenerate_quadrangles(m)
        .iter()
        .map(|q| quadrangle_row(m, q))
        .collect()
}

/// `V_M`: the common kernel of all quadrangle equations.
pub fn v_space(m: &Matroid) -> BasisIndexedSpace {
    let nb = m.bases().len();
    BasisIndexedSpace {
        ambient: nb,
        basis: nullspace(&quadrangle_matrix(m), nb),
    }
}

/// Row `B ↦ [e ∈ B]` for one element `e`; these span `W_M`.
pub fn w_generator(m: &Matroid, e: usize) -> Vec<Rational> {
    m.bases()
        .iter()
        .map(|&b| if b >> e & 1 == 1 { Rational::one() } else { Rational::zero() })
        .collect()
}

/// `W_M = { (sum_{i in B} v_i)_B : v in Q^E }`.
pub fn w_space(m: &Matroid) -> BasisIndexedSpace {
    let gens: Vec<Vec<Rational>> = (0..m.size()).map(|e| w_generator(m, e)).collect();
    BasisIndexedSpace::from_spanning(m.bases().len(), &gens)
}

/// `|E| - z + 1` with `z` the number of connected components.
pub fn expected_w_dim(m: &Matroid) -> usize {
    m.size() - connected_components(m).len() + 1
}

/// True iff every quadrangle equation vanishes on `v`.
pub fn satisfies_quadrangles(m: &Matroid, v: &[Rational]) -> bool {
    degenerate_quadrangles(m).iter().all(|q| {
        let [b1, b2, b3, b4] = q.bases().map(|b| &v[m.basis_index(b).unwrap()]);
        (b1 + b2 - b3 - b4).is_zero()
    })
}
