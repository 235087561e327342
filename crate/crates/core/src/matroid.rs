//! Matroids on at most 16 elements, stored by their bases as bit masks.
//!
//! Elements carry string labels (some catalog instances use labels such as `0'`),
//! but every algorithm works on the index of the label in [`Matroid::ground`].

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg;
use crate::rational::{fmt_rational, int, parse_rational, Rational};

pub type Mask = u32;

pub const MAX_GROUND: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("ground set has {0} elements, at most 16 are supported")]
    GroundTooLarge(usize),
    #[error("duplicate ground label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown element label {0:?}")]
    UnknownLabel(String),
    #[error("a matroid needs at least one basis")]
    NoBases,
    #[error("bases do not all have the same cardinality")]
    NotEquicardinal,
    #[error("basis exchange fails: B1={b1:?}, B2={b2:?}, e={e:?}")]
    ExchangeAxiomViolation {
        b1: Vec<String>,
        b2: Vec<String>,
        e: String,
    },
    #[error("matrix has no nonzero maximal minor")]
    RankDeficient,
    #[error("{0:?} is not a circuit-hyperplane")]
    NotCircuitHyperplane(Vec<String>),
    #[error("unknown catalog name {0:?}")]
    UnknownName(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, MatroidError>;

pub fn popcount(m: Mask) -> usize {
    m.count_ones() as usize
}

/// Iterator over the indices of the set bits of `m`, ascending.
pub fn elements(m: Mask) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| m >> i & 1 == 1)
}

/// All masks over `n` elements with exactly `k` bits set, ascending.
pub fn k_subsets(n: usize, k: usize) -> Vec<Mask> {
    (0..(1u32 << n)).filter(|&m| popcount(m) == k).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matroid {
    ground: Vec<String>,
    rank: usize,
    /// Sorted ascending, no duplicates.
    bases: Vec<Mask>,
}

impl Matroid {
    /// Build from bases given as index masks, checking every axiom.
    pub fn from_masks(ground: Vec<String>, bases: impl IntoIterator<Item = Mask>) -> Result<Self> {
        check_ground(&ground)?;
        let set: BTreeSet<Mask> = bases.into_iter().collect();
        let Some(&first) = set.iter().next() else {
            return Err(MatroidError::NoBases);
        };
        let full: Mask = if ground.is_empty() { 0 } else { (1 << ground.len()) - 1 };
        if set.iter().any(|b| b & !full != 0) {
            return Err(MatroidError::Malformed("basis outside the ground set".into()));
        }
        let rank = popcount(first);
        if set.iter().any(|&b| popcount(b) != rank) {
            return Err(MatroidError::NotEquicardinal);
        }
        let m = Matroid {
            ground,
            rank,
            bases: set.into_iter().collect(),
        };
        m.check_exchange()?;
        Ok(m)
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn size(&self) -> usize {
        self.ground.len()
    }

    pub fn full_mask(&self) -> Mask {
        if self.ground.is_empty() {
            0
        } else {
            (1 << self.ground.len()) - 1
        }
    }

    /// The rank `d` of the matroid (cardinality of every basis).
    pub fn rank_d(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[Mask] {
        &self.bases
    }

    pub fn is_basis(&self, s: Mask) -> bool {
        self.bases.binary_search(&s).is_ok()
    }

    /// Position of `b` in the sorted basis list.
    pub fn basis_index(&self, b: Mask) -> Option<usize> {
        self.bases.binary_search(&b).ok()
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.ground
            .iter()
            .position(|g| g == label)
            .ok_or_else(|| MatroidError::UnknownLabel(label.to_string()))
    }

    pub fn mask_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Mask> {
        labels
            .iter()
            .try_fold(0, |acc, l| Ok(acc | 1 << self.index_of(l.as_ref())?))
    }

    pub fn labels_of(&self, s: Mask) -> Vec<String> {
        elements(s).map(|i| self.ground[i].clone()).collect()
    }

    fn check_exchange(&self) -> Result<()> {
        for &b1 in &self.bases {
            for &b2 in &self.bases {
                for e in elements(b1 & !b2) {
                    let without = b1 & !(1 << e);
                    let ok = elements(b2 & !b1).any(|f| self.is_basis(without | 1 << f));
                    if !ok {
                        return Err(MatroidError::ExchangeAxiomViolation {
                            b1: self.labels_of(b1),
                            b2: self.labels_of(b2),
                            e: self.ground[e].clone(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// `max |B ∩ S|` over all bases.
    pub fn rank(&self, s: Mask) -> usize {
        self.bases.iter().map(|&b| popcount(b & s)).max().unwrap_or(0)
    }

    /// Rank of every subset, indexed by mask.
    pub fn rank_table(&self) -> Vec<usize> {
        let n = self.size();
        let mut indep = vec![false; 1 << n];
        for &b in &self.bases {
            indep[b as usize] = true;
        }
        for s in (0..1usize << n).rev() {
            if !indep[s] {
                indep[s] = (0..n).any(|e| s >> e & 1 == 0 && indep[s | 1 << e]);
            }
        }
        let mut rank = vec![0usize; 1 << n];
        for s in 1..1usize << n {
            rank[s] = if indep[s] {
                s.count_ones() as usize
            } else {
                (0..n)
                    .filter(|e| s >> e & 1 == 1)
                    .map(|e| rank[s & !(1 << e)])
                    .max()
                    .unwrap_or(0)
            };
        }
        rank
    }

    pub fn is_independent(&self, s: Mask) -> bool {
        self.rank(s) == popcount(s)
    }

    /// Copy with the elements renamed; `labels[i]` replaces `ground[i]`.
    pub fn relabeled(&self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.ground.len() {
            return Err(MatroidError::Malformed("label count mismatch".into()));
        }
        check_ground(&labels)?;
        Ok(Matroid {
            ground: labels,
            rank: self.rank,
            bases: self.bases.clone(),
        })
    }

    pub fn to_json(&self) -> MatroidJson {
        MatroidJson {
            ground: self.ground.clone(),
            rank: self.rank,
            bases: self.bases.iter().map(|&b| self.labels_of(b)).collect(),
        }
    }

    pub fn from_json(j: &MatroidJson) -> Result<Self> {
        let m = matroid_from_bases(j.ground.clone(), &j.bases)?;
        if m.rank != j.rank {
            return Err(MatroidError::Malformed(format!(
                "declared rank {} but bases have {} elements",
                j.rank, m.rank
            )));
        }
        Ok(m)
    }
}

fn check_ground(ground: &[String]) -> Result<()> {
    if ground.len() > MAX_GROUND {
        return Err(MatroidError::GroundTooLarge(ground.len()));
    }
    let mut seen = BTreeSet::new();
    for g in ground {
        if !seen.insert(g) {
            return Err(MatroidError::DuplicateLabel(g.clone()));
        }
    }
    Ok(())
}

/// Build a matroid from labelled bases, verifying the basis exchange axiom.
pub fn matroid_from_bases<S: AsRef<str>>(ground: Vec<String>, bases: &[Vec<S>]) -> Result<Matroid> {
    check_ground(&ground)?;
    let index = |l: &str| {
        ground
            .iter()
            .position(|g| g == l)
            .ok_or_else(|| MatroidError::UnknownLabel(l.to_string()))
    };
    let mut masks = Vec::with_capacity(bases.len());
    for b in bases {
        let mut m: Mask = 0;
        for l in b {
            let bit = 1 << index(l.as_ref())?;
            if m & bit != 0 {
                return Err(MatroidError::Malformed(format!("repeated element in basis {:?}", l.as_ref())));
            }
            m |= bit;
        }
        masks.push(m);
    }
    Matroid::from_masks(ground, masks)
}

/// Labels `"0"`, `"1"`, ... for `n` elements.
pub fn numeric_labels(n: usize, start: usize) -> Vec<String> {
    (start..start + n).map(|i| i.to_string()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatroidJson {
    pub ground: Vec<String>,
    pub rank: usize,
    pub bases: Vec<Vec<String>>,
}

/// A dense rational matrix used for representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Rational>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl RationalMatrix {
    pub fn new(entries: Vec<Vec<Rational>>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        if entries.iter().any(|r| r.len() != cols) {
            return Err(MatroidError::Malformed("ragged matrix rows".into()));
        }
        Ok(RationalMatrix { rows, cols, entries })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::new(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .expect("rectangular literal")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    /// Columns selected by `cols`, as a `rows × |cols|` matrix.
    pub fn submatrix(&self, cols: Mask) -> Vec<Vec<Rational>> {
        self.entries
            .iter()
            .map(|row| elements(cols).map(|c| row[c].clone()).collect())
            .collect()
    }

    /// Determinant of the square submatrix on the columns of `cols`.
    pub fn minor(&self, cols: Mask) -> Rational {
        linalg::det_rational(&self.submatrix(cols))
    }

    /// Rank of the column set `cols`.
    pub fn column_rank(&self, cols: Mask) -> usize {
        linalg::rank(&self.submatrix(cols))
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(fmt_rational).collect())
                .collect(),
        }
    }

    pub fn from_json(j: &MatrixJson) -> Result<Self> {
        let entries = j
            .entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| parse_rational(s).ok_or_else(|| MatroidError::Malformed(format!("bad rational {s:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let m = Self::new(entries)?;
        if m.rows != j.rows || m.cols != j.cols {
            return Err(MatroidError::Malformed("declared shape does not match entries".into()));
        }
        Ok(m)
    }
}

/// Column matroid of `a` with columns labelled `0..cols`.
pub fn matroid_from_matrix(a: &RationalMatrix) -> Result<Matroid> {
    matroid_from_matrix_labeled(a, numeric_labels(a.cols(), 0))
}

pub fn matroid_from_matrix_labeled(a: &RationalMatrix, labels: Vec<String>) -> Result<Matroid> {
    if labels.len() != a.cols() {
        return Err(MatroidError::Malformed("label count differs from column count".into()));
    }
    check_ground(&labels)?;
    if a.rows() > a.cols() {
        return Err(MatroidError::RankDeficient);
    }
    let bases: Vec<Mask> = k_subsets(a.cols(), a.rows())
        .into_iter()
        .filter(|&s| !num_traits::Zero::is_zero(&a.minor(s)))
        .collect();
    if bases.is_empty() {
        return Err(MatroidError::RankDeficient);
    }
    Matroid::from_masks(labels, bases)
}

/// All circuit-hyperplanes, checked against the definition over every `d`-subset.
pub fn circuit_hyperplanes(m: &Matroid) -> Vec<Mask> {
    let d = m.rank_d();
    if d == 0 {
        return Vec::new();
    }
    let full = m.full_mask();
    k_subsets(m.size(), d)
        .into_iter()
        .filter(|&x| {
            !m.is_basis(x)
                && m.rank(x) == d - 1
                && elements(x).all(|e| m.is_independent(x & !(1 << e)))
                && elements(full & !x).all(|y| m.rank(x | 1 << y) == d)
        })
        .collect()
}

/// The relaxation of `m` by the circuit-hyperplane `x`.
pub fn relax(m: &Matroid, x: Mask) -> Result<Matroid> {
    if !circuit_hyperplanes(m).contains(&x) {
        return Err(MatroidError::NotCircuitHyperplane(m.labels_of(x)));
    }
    let mut bases = m.bases().to_vec();
    bases.push(x);
    Matroid::from_masks(m.ground().to_vec(), bases)
}

/// Connected components, as masks sorted by their lowest element.
///
/// Two elements are connected iff some circuit contains both; fundamental
/// circuits with respect to a single basis generate this relation.
pub fn connected_components(m: &Matroid) -> Vec<Mask> {
    let n = m.size();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let b = m.bases()[0];
    for e in elements(m.full_mask() & !b) {
        for f in elements(b) {
            if m.is_basis((b & !(1 << f)) | 1 << e) {
                let (re, rf) = (find(&mut parent, e), find(&mut parent, f));
                parent[re] = rf;
            }
        }
    }
    let mut roots: Vec<usize> = Vec::new();
    let mut comps: Vec<Mask> = Vec::new();
    for e in 0..n {
        let r = find(&mut parent, e);
        match roots.iter().position(|&x| x == r) {
            Some(k) => comps[k] |= 1 << e,
            None => {
                roots.push(r);
                comps.push(1 << e);
            }
        }
    }
    comps
}

/// Direct sum; the second matroid's elements follow the first's.
pub fn direct_sum(a: &Matroid, b: &Matroid) -> Result<Matroid> {
    let mut ground = a.ground().to_vec();
    ground.extend(b.ground().iter().cloned());
    let shift = a.size();
    let bases = a
        .bases()
        .iter()
        .flat_map(|&x| b.bases().iter().map(move |&y| x | y << shift));
    Matroid::from_masks(ground, bases)
}

/// Cycle matroid of a multigraph. `edges[i]` joins two vertex ids and is labelled `labels[i]`.
pub fn graphic_matroid(edges: &[(usize, usize)], labels: Vec<String>) -> Result<Matroid> {
    if labels.len() != edges.len() {
        return Err(MatroidError::Malformed("one label per edge required".into()));
    }
    check_ground(&labels)?;
    let nv = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let is_forest = |s: Mask| {
        let mut parent: Vec<usize> = (0..nv).collect();
        fn root(p: &[usize], mut x: usize) -> usize {
            while p[x] != x {
                x = p[x];
            }
            x
        }
        for e in elements(s) {
            let (a, b) = (root(&parent, edges[e].0), root(&parent, edges[e].1));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    };
    let n = edges.len();
    let mut r = 0;
    // greedy spanning forest gives the rank
    let mut acc = 0;
    for e in 0..n {
        if is_forest(acc | 1 << e) {
            acc |= 1 << e;
            r += 1;
        }
    }
    let bases: Vec<Mask> = k_subsets(n, r).into_iter().filter(|&s| is_forest(s)).collect();
    Matroid::from_masks(labels, bases)
}

/// An isomorphism `a → b` as an index permutation, if one exists.
pub fn find_isomorphism(a: &Matroid, b: &Matroid) -> Option<Vec<usize>> {
    if a.size() != b.size() || a.rank_d() != b.rank_d() || a.bases().len() != b.bases().len() {
        return None;
    }
    let n = a.size();
    let degree = |m: &Matroid, e: usize| m.bases().iter().filter(|&&x| x >> e & 1 == 1).count();
    let da: Vec<usize> = (0..n).map(|e| degree(a, e)).collect();
    let db: Vec<usize> = (0..n).map(|e| degree(b, e)).collect();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn image(perm: &[usize], s: Mask) -> Mask {
        elements(s).fold(0, |acc, e| acc | 1 << perm[e])
    }

    fn go(
        pos: usize,
        a: &Matroid,
        b: &Matroid,
        da: &[usize],
        db: &[usize],
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        let n = a.size();
        if pos == n {
            return a.bases().iter().all(|&x| b.is_basis(image(perm, x)));
        }
        for t in 0..n {
            if used[t] || da[pos] != db[t] {
                continue;
            }
            perm[pos] = t;
            used[t] = true;
            // bases inside the assigned prefix must map to bases
            let prefix: Mask = (1 << (pos + 1)) - 1;
            let ok = a
                .bases()
                .iter()
                .filter(|&&x| x & !prefix == 0 && x >> pos & 1 == 1)
                .all(|&x| b.is_basis(image(perm, x)));
            if ok && go(pos + 1, a, b, da, db, perm, used) {
                return true;
            }
            used[t] = false;
        }
        perm[pos] = usize::MAX;
        false
    }

    go(0, a, b, &da, &db, &mut perm, &mut used).then_some(perm)
}

// --- catalog -----------------------------------------------------------------

/// The lines of the Fano plane on labels 1..7.
pub const FANO_LINES: [[u8; 3]; 7] = [
    [1, 2, 3],
    [1, 5, 6],
    [1, 4, 7],
    [3, 4, 5],
    [3, 6, 7],
    [2, 5, 7],
    [2, 4, 6],
];

fn labels(ls: &[&str]) -> Vec<String> {
    ls.iter().map(|s| s.to_string()).collect()
}

/// Rank-3 matroid whose only non-bases are the given triples.
fn rank3_from_lines(ground: Vec<String>, lines: &[[&str; 3]]) -> Result<Matroid> {
    let idx = |l: &str| ground.iter().position(|g| g == l).expect("catalog label");
    let line_masks: Vec<Mask> = lines
        .iter()
        .map(|t| t.iter().fold(0, |acc, l| acc | 1 << idx(l)))
        .collect();
    let bases = k_subsets(ground.len(), 3)
        .into_iter()
        .filter(|s| !line_masks.contains(s));
    Matroid::from_masks(ground, bases)
}

pub fn p8_matrix() -> RationalMatrix {
    RationalMatrix::from_ints(&[
        &[1, 0, 0, 0, 0, 1, 1, 2],
        &[0, 1, 0, 0, 1, 0, 1, 1],
        &[0, 0, 1, 0, 1, 1, 0, 1],
        &[0, 0, 0, 1, 2, 1, 1, 0],
    ])
}

/// Real representation of the non-Fano matroid, columns labelled 1..7.
pub fn nonfano_matrix() -> RationalMatrix {
    RationalMatrix::from_ints(&[
        &[1, 1, 0, 0, 0, 1, 1],
        &[0, 1, 1, 1, 0, 0, 1],
        &[0, 0, 0, 1, 1, 1, 1],
    ])
}

/// The circuit-hyperplane `{3,5,6,7}` of P8.
pub const P8_RELAXED_SET: Mask = 1 << 3 | 1 << 5 | 1 << 6 | 1 << 7;

/// Edge list of G1 with the drawn labels 0..7.
/// Vertices: 0 centre, 1 top, 2 bottom-left, 3 bottom-right, 4 bottom-middle.
pub const G1_EDGES: [(usize, usize); 8] = [
    (2, 4), // 0
    (0, 3), // 1
    (1, 3), // 2
    (4, 3), // 3
    (0, 1), // 4
    (1, 2), // 5
    (0, 2), // 6
    (0, 1), // 7
];

/// G2: the 4-cycle top-left-bottom-right plus a doubled edge from the centre to each of left and right.
/// Vertices: 0 centre, 1 top, 2 left, 3 bottom, 4 right.
pub const G2_EDGES: [(usize, usize); 8] = [
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 1),
    (2, 0),
    (2, 0),
    (4, 0),
    (4, 0),
];

pub fn uniform(k: usize, n: usize) -> Result<Matroid> {
    if k > n {
        return Err(MatroidError::Malformed(format!("U({k},{n}) needs k <= n")));
    }
    if n > MAX_GROUND {
        return Err(MatroidError::GroundTooLarge(n));
    }
    Matroid::from_masks(numeric_labels(n, 1), k_subsets(n, k))
}

fn parse_uniform(name: &str) -> Option<(usize, usize)> {
    let inner = name.strip_prefix("u(")?.strip_suffix(')')?;
    let (k, n) = inner.split_once(',')?;
    Some((k.trim().parse().ok()?, n.trim().parse().ok()?))
}

/// Named matroids used throughout the crate.
///
/// Accepted names: `fano`, `nonfano`, `f7m4`, `f7m5`, `p8`, `p1`, `u(k,n)`,
/// `graphic_g1`, `graphic_g2`.
pub fn catalog(name: &str) -> Result<Matroid> {
    let name_lc = name.trim().to_ascii_lowercase();
    match name_lc.as_str() {
        "fano" => {
            let lines: Vec<[String; 3]> = FANO_LINES
                .iter()
                .map(|l| l.map(|x| x.to_string()))
                .collect();
            let refs: Vec<[&str; 3]> = lines
                .iter()
                .map(|l| [l[0].as_str(), l[1].as_str(), l[2].as_str()])
                .collect();
            rank3_from_lines(numeric_labels(7, 1), &refs)
        }
        "nonfano" => matroid_from_matrix_labeled(&nonfano_matrix(), numeric_labels(7, 1)),
        "f7m4" => rank3_from_lines(
            labels(&["0", "1", "2", "3", "0'", "1'", "2'"]),
            &[["3", "0", "0'"], ["3", "1", "1'"], ["3", "2", "2'"]],
        ),
        "f7m5" => rank3_from_lines(
            labels(&["0", "1", "2", "4", "0'", "1'", "2'"]),
            &[["4", "0", "0'"], ["4", "2", "2'"]],
        ),
        "p8" => matroid_from_matrix(&p8_matrix()),
        "p1" => relax(&catalog("p8")?, P8_RELAXED_SET),
        "graphic_g1" => graphic_matroid(&G1_EDGES, numeric_labels(8, 0)),
        "graphic_g2" => graphic_matroid(&G2_EDGES, numeric_labels(8, 0)),
        other => match parse_uniform(other) {
            Some((k, n)) => uniform(k, n),
            None => Err(MatroidError::UnknownName(name.to_string())),
        },
    }
}

pub const CATALOG_NAMES: [&str; 9] = [
    "fano",
    "nonfano",
    "f7m4",
    "f7m5",
    "p8",
    "p1",
    "u(2,4)",
    "graphic_g1",
    "graphic_g2",
];

#[cfg(test)]
mod tests {
    use super::*;

    fn m(ground: &[&str], bases: &[&[&str]]) -> Result<Matroid> {
        let bases: Vec<Vec<&str>> = bases.iter().map(|b| b.to_vec()).collect();
        matroid_from_bases(labels(ground), &bases)
    }

    #[test]
    fn from_bases_examples() {
        let u12 = m(&["1", "2"], &[&["1"], &["2"]]).unwrap();
        assert_eq!(u12.rank_d(), 1);
        assert_eq!(u12, uniform(1, 2).unwrap());

        let err = m(&["1", "2", "3", "4"], &[&["1", "2"], &["3", "4"]]).unwrap_err();
        assert!(matches!(err, MatroidError::ExchangeAxiomViolation { .. }));

        assert_eq!(m(&["1"], &[]).unwrap_err(), MatroidError::NoBases);
        assert_eq!(
            m(&["1", "2"], &[&["1"], &["1", "2"]]).unwrap_err(),
            MatroidError::NotEquicardinal
        );
        assert!(matches!(
            m(&["1", "1"], &[&["1"]]).unwrap_err(),
            MatroidError::DuplicateLabel(_)
        ));
    }

    #[test]
    fn fano_from_listed_bases() {
        let lines: BTreeSet<BTreeSet<String>> = FANO_LINES
            .iter()
            .map(|l| l.iter().map(|x| x.to_string()).collect())
            .collect();
        let ground = numeric_labels(7, 1);
        let mut bases = Vec::new();
        for s in k_subsets(7, 3) {
            let set: BTreeSet<String> = elements(s).map(|i| ground[i].clone()).collect();
            if !lines.contains(&set) {
                bases.push(set.into_iter().collect::<Vec<_>>());
            }
        }
        let fano = matroid_from_bases(ground, &bases).unwrap();
        assert_eq!(fano.bases().len(), 28);
        assert_eq!(fano, catalog("fano").unwrap());
    }

    #[test]
    fn p8_from_matrix() {
        let p8 = catalog("p8").unwrap();
        assert_eq!(p8.rank_d(), 4);
        assert!(p8.is_basis(0b1111));
        assert!(!p8.is_basis(P8_RELAXED_SET));
        assert_eq!(p8.rank(P8_RELAXED_SET), 3);
    }

    #[test]
    fn rank_simple_cases() {
        assert_eq!(uniform(1, 2).unwrap().rank(0), 0);
        let fano = catalog("fano").unwrap();
        for s in k_subsets(7, 2) {
            assert_eq!(fano.rank(s), 2);
        }
        let table = fano.rank_table();
        for s in 0..128u32 {
            assert_eq!(table[s as usize], fano.rank(s));
        }
    }

    #[test]
    fn circuit_hyperplanes_and_relaxation() {
        let fano = catalog("fano").unwrap();
        let ch = circuit_hyperplanes(&fano);
        assert_eq!(ch.len(), 7);
        let x = fano.mask_of(&["2", "4", "6"]).unwrap();
        assert!(ch.contains(&x));
        assert_eq!(relax(&fano, x).unwrap(), catalog("nonfano").unwrap());

        let p8 = catalog("p8").unwrap();
        assert!(circuit_hyperplanes(&p8).contains(&P8_RELAXED_SET));
        let p1 = catalog("p1").unwrap();
        assert_eq!(p1.bases().len(), p8.bases().len() + 1);

        let u23 = uniform(2, 3).unwrap();
        assert!(circuit_hyperplanes(&u23).is_empty());
        assert!(matches!(
            relax(&u23, 0b011).unwrap_err(),
            MatroidError::NotCircuitHyperplane(_)
        ));
    }

    #[test]
    fn catalog_counts() {
        assert_eq!(catalog("f7m4").unwrap().bases().len(), 32);
        assert_eq!(catalog("f7m5").unwrap().bases().len(), 33);
        assert_eq!(catalog("u(2,4)").unwrap().bases().len(), 6);
        assert_eq!(catalog("U( 2, 4 )").unwrap().bases().len(), 6);
        assert_eq!(catalog("nosuch").unwrap_err(), MatroidError::UnknownName("nosuch".into()));
        for name in CATALOG_NAMES {
            let c = catalog(name).unwrap();
            let back = Matroid::from_json(&c.to_json()).unwrap();
            assert_eq!(back, c, "{name}");
        }
    }

    #[test]
    fn components() {
        let p8 = catalog("p8").unwrap();
        assert_eq!(connected_components(&p8), vec![0xff]);
        let u11 = uniform(1, 1).unwrap();
        let sum = direct_sum(&u11, &u11.relabeled(labels(&["2"])).unwrap()).unwrap();
        assert_eq!(connected_components(&sum), vec![0b01, 0b10]);
        assert_eq!(connected_components(&catalog("fano").unwrap()), vec![0x7f]);
        // a loop and a coloop next to a U(1,2)
        let g = matroid_from_bases(labels(&["a", "b", "c", "d"]), &[vec!["a", "b"], vec!["a", "c"]]).unwrap();
        assert_eq!(connected_components(&g), vec![0b0001, 0b0110, 0b1000]);
    }

    #[test]
    fn graphs_and_isomorphism() {
        let g1 = catalog("graphic_g1").unwrap();
        let g2 = catalog("graphic_g2").unwrap();
        assert_eq!(g1.rank_d(), 4);
        assert_eq!(g2.rank_d(), 4);
        assert!(find_isomorphism(&g1, &g2).is_none());
        // reversing the edge order gives an isomorphic copy
        let rev: Vec<(usize, usize)> = G2_EDGES.iter().rev().copied().collect();
        let g2r = graphic_matroid(&rev, numeric_labels(8, 0)).unwrap();
        let perm = find_isomorphism(&g2, &g2r).unwrap();
        for &b in g2.bases() {
            let img = elements(b).fold(0, |acc, e| acc | 1 << perm[e]);
            assert!(g2r.is_basis(img));
        }
    }

    #[test]
    fn matrix_json_roundtrip() {
        let a = p8_matrix();
        let j = a.to_json();
        assert_eq!(j.entries[0][7], "2");
        assert_eq!(RationalMatrix::from_json(&j).unwrap(), a);
        let bad = MatrixJson {
            rows: 1,
            cols: 1,
            entries: vec![vec!["x".into()]],
        };
        assert!(RationalMatrix::from_json(&bad).is_err());
    }

    #[test]
    fn rank_deficient_matrix() {
        let z = RationalMatrix::from_ints(&[&[1, 2], &[2, 4]]);
        assert_eq!(matroid_from_matrix(&z).unwrap_err(), MatroidError::RankDeficient);
    }
}
