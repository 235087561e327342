//! M-convex sets, polymatroids and the bijection between them, plus flats,
//! modular pairs, restriction and an exact amalgam search.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::matroid::{elements, popcount, Mask, Matroid, MAX_GROUND};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolymatroidError {
    #[error("point set is not M-convex: {0}")]
    NotMConvex(MConvexViolation),
    #[error("not a polymatroid: {0}")]
    NotPolymatroid(String),
    #[error("{0:?} is not a flat")]
    NotAFlat(Vec<String>),
    #[error("restrictions to the common ground set differ at {0:?}")]
    RestrictionMismatch(Vec<String>),
    #[error("M-convex set is empty")]
    Empty,
    #[error("ground set has {0} elements, at most 16 are supported")]
    GroundTooLarge(usize),
    #[error("unknown element label {0:?}")]
    UnknownLabel(String),
    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, PolymatroidError>;

/// A failing triple for the exchange property: `alpha_i > beta_i` but no `j`
/// with `alpha_j < beta_j` keeps `alpha - e_i + e_j` inside the set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MConvexViolation {
    pub i: usize,
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
}

impl std::fmt::Display for MConvexViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "i={}, alpha={:?}, beta={:?}", self.i, self.alpha, self.beta)
    }
}

fn check_ground(ground: &[String]) -> Result<()> {
    if ground.len() > MAX_GROUND {
        return Err(PolymatroidError::GroundTooLarge(ground.len()));
    }
    let distinct: BTreeSet<&String> = ground.iter().collect();
    if distinct.len() != ground.len() {
        return Err(PolymatroidError::Malformed("duplicate ground label".into()));
    }
    Ok(())
}

fn full(n: usize) -> Mask {
    if n == 0 {
        0
    } else {
        (1 << n) - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MConvexSet {
    ground: Vec<String>,
    points: BTreeSet<Vec<u32>>,
}

impl MConvexSet {
    /// Wraps a point set without checking the exchange property; see [`is_mconvex`].
    pub fn new(ground: Vec<String>, points: impl IntoIterator<Item = Vec<u32>>) -> Result<Self> {
        check_ground(&ground)?;
        let points: BTreeSet<Vec<u32>> = points.into_iter().collect();
        if points.iter().any(|p| p.len() != ground.len()) {
            return Err(PolymatroidError::Malformed("point length differs from ground size".into()));
        }
        Ok(MConvexSet { ground, points })
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn points(&self) -> &BTreeSet<Vec<u32>> {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &[u32]) -> bool {
        self.points.contains(p)
    }

    /// The points vanishing outside `t`, restricted to the coordinates of `t`.
    ///
    /// `None` when no point vanishes outside `t`, i.e. the set is degenerate with respect to `t`.
    pub fn slice(&self, t: Mask) -> Option<MConvexSet> {
        let outside = full(self.ground.len()) & !t;
        let pts: BTreeSet<Vec<u32>> = self
            .points
            .iter()
            .filter(|p| elements(outside).all(|i| p[i] == 0))
            .map(|p| elements(t).map(|i| p[i]).collect())
            .collect();
        if pts.is_empty() {
            return None;
        }
        Some(MConvexSet {
            ground: elements(t).map(|i| self.ground[i].clone()).collect(),
            points: pts,
        })
    }

    pub fn to_json(&self) -> MConvexJson {
        MConvexJson {
            ground: self.ground.clone(),
            points: self.points.iter().cloned().collect(),
        }
    }

    pub fn from_json(j: &MConvexJson) -> Result<Self> {
        Self::new(j.ground.clone(), j.points.iter().cloned())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MConvexJson {
    pub ground: Vec<String>,
    pub points: Vec<Vec<u32>>,
}

/// Checks the exchange property, returning the first failing triple in
/// (i, alpha, beta) order.
pub fn is_mconvex(j: &MConvexSet) -> std::result::Result<(), MConvexViolation> {
    let n = j.ground.len();
    for i in 0..n {
        for alpha in &j.points {
            for beta in &j.points {
                if alpha[i] <= beta[i] {
                    continue;
                }
                let ok = (0..n).any(|k| {
                    if alpha[k] >= beta[k] {
                        return false;
                    }
                    let mut g = alpha.clone();
                    g[i] -= 1;
                    g[k] += 1;
                    j.points.contains(&g)
                });
                if !ok {
                    return Err(MConvexViolation {
                        i,
                        alpha: alpha.clone(),
                        beta: beta.clone(),
                    });
                }
            }
        }
    }
    Ok(())
}

/// Integer set function on all subsets of a labelled ground set, indexed by mask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polymatroid {
    ground: Vec<String>,
    r: Vec<u32>,
}

impl Polymatroid {
    /// Validates all three polymatroid axioms.
    pub fn new(ground: Vec<String>, r: Vec<u32>) -> Result<Self> {
        let p = Self::new_unchecked(ground, r)?;
        p.validate()?;
        Ok(p)
    }

    fn new_unchecked(ground: Vec<String>, r: Vec<u32>) -> Result<Self> {
        check_ground(&ground)?;
        if r.len() != 1 << ground.len() {
            return Err(PolymatroidError::Malformed("rank table must have 2^n entries".into()));
        }
        Ok(Polymatroid { ground, r })
    }

    pub fn from_fn(ground: Vec<String>, f: impl Fn(Mask) -> u32) -> Result<Self> {
        let r = (0..1u32 << ground.len()).map(f).collect();
        Self::new(ground, r)
    }

    /// Rank function of a matroid, viewed as a polymatroid.
    pub fn of_matroid(m: &Matroid) -> Self {
        let r = m.rank_table().into_iter().map(|x| x as u32).collect();
        Polymatroid {
            ground: m.ground().to_vec(),
            r,
        }
    }

    pub fn ground(&self) -> &[String] {
        &self.ground
    }

    pub fn size(&self) -> usize {
        self.ground.len()
    }

    pub fn full_mask(&self) -> Mask {
        full(self.ground.len())
    }

    pub fn table(&self) -> &[u32] {
        &self.r
    }

    pub fn r(&self, s: Mask) -> u32 {
        self.r[s as usize]
    }

    pub fn mask_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Mask> {
        labels.iter().try_fold(0, |acc, l| {
            let i = self
                .ground
                .iter()
                .position(|g| g == l.as_ref())
                .ok_or_else(|| PolymatroidError::UnknownLabel(l.as_ref().to_string()))?;
            Ok(acc | 1 << i)
        })
    }

    /// Value on a subset given by labels.
    pub fn r_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<u32> {
        Ok(self.r(self.mask_of(labels)?))
    }

    pub fn labels_of(&self, s: Mask) -> Vec<String> {
        elements(s).map(|i| self.ground[i].clone()).collect()
    }

    /// Normalisation, local monotonicity and local submodularity; together
    /// these are equivalent to the full axioms.
    pub fn validate(&self) -> Result<()> {
        if self.r[0] != 0 {
            return Err(PolymatroidError::NotPolymatroid("r(empty) != 0".into()));
        }
        let n = self.size();
        for s in 0..1u32 << n {
            for e in (0..n).filter(|e| s >> e & 1 == 0) {
                let se = s | 1 << e;
                if self.r(se) < self.r(s) {
                    return Err(PolymatroidError::NotPolymatroid(format!(
                        "not monotone at {:?} + {}",
                        self.labels_of(s),
                        self.ground[e]
                    )));
                }
                for f in (e + 1..n).filter(|f| s >> f & 1 == 0) {
                    let sf = s | 1 << f;
                    if self.r(se) + self.r(sf) < self.r(se | sf) + self.r(s) {
                        return Err(PolymatroidError::NotPolymatroid(format!(
                            "not submodular at {:?} with {}, {}",
                            self.labels_of(s),
                            self.ground[e],
                            self.ground[f]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> PolymatroidJson {
        let r = (0..1u32 << self.size())
            .map(|s| (self.labels_of(s).join(","), self.r(s)))
            .collect();
        PolymatroidJson {
            ground: self.ground.clone(),
            r,
        }
    }

    pub fn from_json(j: &PolymatroidJson) -> Result<Self> {
        check_ground(&j.ground)?;
        let n = j.ground.len();
        let mut table = vec![None; 1 << n];
        for (key, &v) in &j.r {
            let labels: Vec<&str> = if key.is_empty() { Vec::new() } else { key.split(',').map(str::trim).collect() };
            let mut s: Mask = 0;
            for l in labels {
                let i = j
                    .ground
                    .iter()
                    .position(|g| g == l)
                    .ok_or_else(|| PolymatroidError::UnknownLabel(l.to_string()))?;
                s |= 1 << i;
            }
            table[s as usize] = Some(v);
        }
        let r = table
            .into_iter()
            .enumerate()
            .map(|(s, v)| v.ok_or_else(|| PolymatroidError::Malformed(format!("missing value for subset mask {s}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(j.ground.clone(), r)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolymatroidJson {
    pub ground: Vec<String>,
    pub r: BTreeMap<String, u32>,
}

/// `r_J(S) = max { sum_{i in S} alpha_i : alpha in J }`.
pub fn rank_from_mconvex(j: &MConvexSet) -> Result<Polymatroid> {
    if j.is_empty() {
        return Err(PolymatroidError::Empty);
    }
    is_mconvex(j).map_err(PolymatroidError::NotMConvex)?;
    let n = j.ground.len();
    let r = (0..1u32 << n)
        .map(|s| {
            j.points
                .iter()
                .map(|p| elements(s).map(|i| p[i]).sum::<u32>())
                .max()
                .unwrap_or(0)
        })
        .collect();
    Polymatroid::new(j.ground.clone(), r)
}

/// Integer points `x >= 0` with `sum_S x <= r(S)` for all `S` and `sum_E x = r(E)`.
pub fn mconvex_from_rank(r: &Polymatroid) -> Result<MConvexSet> {
    r.validate()?;
    let n = r.size();
    let total = r.r(r.full_mask());
    let mut out = BTreeSet::new();
    let mut x = vec![0u32; n];

    // Coordinates are fixed in index order; after fixing coordinate k every
    // constraint supported on {0..=k} is decided.
    fn rec(k: usize, r: &Polymatroid, x: &mut Vec<u32>, partial: u32, total: u32, out: &mut BTreeSet<Vec<u32>>) {
        let n = r.size();
        if k == n {
            if partial == total {
                out.insert(x.clone());
            }
            return;
        }
        let cap = r.r(1 << k).min(total - partial);
        for v in 0..=cap {
            x[k] = v;
            let prefix_top = 1u32 << k;
            let ok = (0..prefix_top).all(|low| {
                let s = low | prefix_top;
                elements(s).map(|i| x[i]).sum::<u32>() <= r.r(s)
            });
            if ok {
                rec(k + 1, r, x, partial + v, total, out);
            }
        }
        x[k] = 0;
    }
    rec(0, r, &mut x, 0, total, &mut out);
    Ok(MConvexSet {
        ground: r.ground.clone(),
        points: out,
    })
}

/// Subsets whose value strictly increases under every proper enlargement.
pub fn flats(r: &Polymatroid) -> Vec<Mask> {
    let n = r.size();
    (0..1u32 << n)
        .filter(|&f| (0..n).filter(|e| f >> e & 1 == 0).all(|e| r.r(f | 1 << e) > r.r(f)))
        .collect()
}

pub fn is_flat(r: &Polymatroid, f: Mask) -> bool {
    (0..r.size()).filter(|e| f >> e & 1 == 0).all(|e| r.r(f | 1 << e) > r.r(f))
}

pub fn is_modular_pair(r: &Polymatroid, f1: Mask, f2: Mask) -> Result<bool> {
    for f in [f1, f2] {
        if !is_flat(r, f) {
            return Err(PolymatroidError::NotAFlat(r.labels_of(f)));
        }
    }
    Ok(r.r(f1) + r.r(f2) == r.r(f1 | f2) + r.r(f1 & f2))
}

/// Every pair of flats is modular. This is sufficient for stickiness.
pub fn sticky_sufficient(r: &Polymatroid) -> bool {
    let fl = flats(r);
    fl.iter()
        .all(|&a| fl.iter().all(|&b| r.r(a) + r.r(b) == r.r(a | b) + r.r(a & b)))
}

/// Restriction to the subset `t`; the new ground keeps the original order.
pub fn restrict(r: &Polymatroid, t: Mask) -> Polymatroid {
    let idx: Vec<usize> = elements(t).collect();
    let table = (0..1u32 << idx.len())
        .map(|s| {
            let orig = elements(s).fold(0, |acc, k| acc | 1 << idx[k]);
            r.r(orig)
        })
        .collect();
    Polymatroid {
        ground: idx.iter().map(|&i| r.ground[i].clone()).collect(),
        r: table,
    }
}

/// Restriction to the elements carrying the given labels.
pub fn restrict_labels<S: AsRef<str>>(r: &Polymatroid, labels: &[S]) -> Result<Polymatroid> {
    Ok(restrict(r, r.mask_of(labels)?))
}

/// Support of the generating polynomial after identifying variables:
/// every basis indicator vector is summed along the classes of `identify`.
///
/// The new ground lists the target labels in order of first appearance.
pub fn specialize_support(m: &Matroid, identify: &BTreeMap<String, String>) -> Result<MConvexSet> {
    let mut ground: Vec<String> = Vec::new();
    let mut target = Vec::with_capacity(m.size());
    for l in m.ground() {
        let t = identify
            .get(l)
            .ok_or_else(|| PolymatroidError::UnknownLabel(l.clone()))?;
        let pos = match ground.iter().position(|g| g == t) {
            Some(p) => p,
            None => {
                ground.push(t.clone());
                ground.len() - 1
            }
        };
        target.push(pos);
    }
    let width = ground.len();
    let points = m.bases().iter().map(|&b| {
        let mut v = vec![0u32; width];
        for e in elements(b) {
            v[target[e]] += 1;
        }
        v
    });
    MConvexSet::new(ground, points)
}

/// Convenience for [`specialize_support`] with a list of `(from, to)` pairs;
/// unlisted labels map to themselves.
pub fn identify_pairs(m: &Matroid, pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
    m.ground()
        .iter()
        .map(|l| {
            let to = pairs
                .iter()
                .find(|(from, _)| from == l)
                .map_or(l.as_str(), |(_, to)| to);
            (l.clone(), to.to_string())
        })
        .collect()
}

pub fn scale(r: &Polymatroid, m: u32) -> Polymatroid {
    Polymatroid {
        ground: r.ground.clone(),
        r: r.r.iter().map(|v| v * m).collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AmalgamOutcome {
    Found(Polymatroid),
    /// Every candidate table was refuted; `nodes` counts search nodes visited.
    Infeasible { nodes: u64 },
}

/// Exact backtracking search for an amalgam of `r1` and `r2`.
///
/// The union ground lists `r1`'s labels, then `r2`'s new ones. Values on
/// subsets inside either ground are forced; the remaining (mixed) subsets are
/// assigned in order of (cardinality, mask). A mixed `S` ranges over
/// `[max_e r(S-e), min(hi)]` where `hi` collects every local submodularity
/// bound with `S` on top together with
/// `r(S) <= r1(S∩E1) + r2(S∩E2) - r0(S∩E0)`,
/// which is submodularity applied to `S∩E1` and `S∩E2` and therefore valid
/// for every amalgam. Candidates are tried from the largest down, so the
/// free amalgam is reached first whenever it exists.
pub fn find_amalgam(r1: &Polymatroid, r2: &Polymatroid) -> Result<AmalgamOutcome> {
    let mut ground = r1.ground.clone();
    for l in &r2.ground {
        if !ground.contains(l) {
            ground.push(l.clone());
        }
    }
    check_ground(&ground)?;
    let n = ground.len();
    let pos2: Vec<usize> = r2
        .ground
        .iter()
        .map(|l| ground.iter().position(|g| g == l).unwrap())
        .collect();
    let e1: Mask = full(r1.size());
    let e2: Mask = pos2.iter().fold(0, |acc, &p| acc | 1 << p);
    let e0 = e1 & e2;

    // S ⊆ E2 in union coordinates → mask in r2's own coordinates.
    let to_r2 = |s: Mask| -> Mask {
        pos2.iter()
            .enumerate()
            .fold(0, |acc, (k, &p)| if s >> p & 1 == 1 { acc | 1 << k } else { acc })
    };

    for s in 0..=e0 {
        if s & !e0 == 0 && r1.r(s) != r2.r(to_r2(s)) {
            return Err(PolymatroidError::RestrictionMismatch(
                elements(s).map(|i| ground[i].clone()).collect(),
            ));
        }
    }

    let mut value: Vec<Option<u32>> = vec![None; 1 << n];
    let mut free: Vec<Mask> = Vec::new();
    for s in 0..1u32 << n {
        if s & !e1 == 0 {
            value[s as usize] = Some(r1.r(s));
        } else if s & !e2 == 0 {
            value[s as usize] = Some(r2.r(to_r2(s)));
        } else {
            free.push(s);
        }
    }
    free.sort_by_key(|&s| (popcount(s), s));

    let bound = |s: Mask| r1.r(s & e1) + r2.r(to_r2(s & e2)) - r1.r(s & e0);

    fn search(
        k: usize,
        free: &[Mask],
        value: &mut Vec<Option<u32>>,
        bound: &dyn Fn(Mask) -> u32,
        nodes: &mut u64,
    ) -> bool {
        *nodes += 1;
        let Some(&s) = free.get(k) else {
            return true;
        };
        let get = |v: &Vec<Option<u32>>, t: Mask| v[t as usize].expect("subsets are assigned first");
        let members: Vec<usize> = elements(s).collect();
        let lo = members.iter().map(|&e| get(value, s & !(1 << e))).max().unwrap_or(0);
        let mut hi = bound(s);
        for (a, &e) in members.iter().enumerate() {
            for &f in &members[a + 1..] {
                let (se, sf, sef) = (s & !(1 << e), s & !(1 << f), s & !(1 << e) & !(1 << f));
                let cap = (get(value, se) + get(value, sf)).saturating_sub(get(value, sef));
                hi = hi.min(cap);
            }
        }
        if lo > hi {
            return false;
        }
        for v in (lo..=hi).rev() {
            value[s as usize] = Some(v);
            if search(k + 1, free, value, bound, nodes) {
                return true;
            }
        }
        value[s as usize] = None;
        false
    }

    let mut nodes = 0u64;
    if search(0, &free, &mut value, &bound, &mut nodes) {
        let table: Vec<u32> = value.into_iter().map(|v| v.unwrap()).collect();
        let amalgam = Polymatroid::new(ground, table)?;
        Ok(AmalgamOutcome::Found(amalgam))
    } else {
        Ok(AmalgamOutcome::Infeasible { nodes })
    }
}

/// Checks that `r` restricts to `r1` and `r2` on their grounds (matched by label).
pub fn is_amalgam_of(r: &Polymatroid, r1: &Polymatroid, r2: &Polymatroid) -> bool {
    [r1, r2].iter().all(|part| match restrict_labels(r, part.ground()) {
        Ok(res) => (0..1u32 << part.size()).all(|s| {
            let labels = part.labels_of(s);
            res.r_of(&labels).ok() == Some(part.r(s))
        }),
        Err(_) => false,
    })
}

/// The polymatroids `r1`, `r2` obtained by identifying `0'↦0, 1'↦1, 2'↦2`
/// in `F7^-4` and `F7^-5`.
pub fn f7_specialized_pair() -> (Polymatroid, Polymatroid) {
    let pairs = [("0'", "0"), ("1'", "1"), ("2'", "2")];
    let m4 = crate::matroid::catalog("f7m4").expect("catalog");
    let m5 = crate::matroid::catalog("f7m5").expect("catalog");
    let j1 = specialize_support(&m4, &identify_pairs(&m4, &pairs)).expect("labels");
    let j2 = specialize_support(&m5, &identify_pairs(&m5, &pairs)).expect("labels");
    (
        rank_from_mconvex(&j1).expect("specialised support of an HPP matroid is M-convex"),
        rank_from_mconvex(&j2).expect("specialised support of an HPP matroid is M-convex"),
    )
}

/// `{x in N^n : |x| = 3, x_i <= 2}` on labels `1..=n`.
pub fn uniform_cap_two(n: usize) -> MConvexSet {
    let mut pts = Vec::new();
    let mut x = vec![0u32; n];
    fn rec(k: usize, left: u32, x: &mut Vec<u32>, pts: &mut Vec<Vec<u32>>) {
        if k == x.len() {
            if left == 0 {
                pts.push(x.clone());
            }
            return;
        }
        for v in 0..=left.min(2) {
            x[k] = v;
            rec(k + 1, left - v, x, pts);
        }
        x[k] = 0;
    }
    rec(0, 3, &mut x, &mut pts);
    MConvexSet::new(crate::matroid::numeric_labels(n, 1), pts).expect("valid ground")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{catalog, numeric_labels, uniform};

    fn set(n: usize, pts: &[&[u32]]) -> MConvexSet {
        MConvexSet::new(numeric_labels(n, 1), pts.iter().map(|p| p.to_vec())).unwrap()
    }

    #[test]
    fn mconvex_examples() {
        let j = uniform_cap_two(3);
        assert_eq!(j.len(), 7);
        assert!(is_mconvex(&j).is_ok());
        assert!(is_mconvex(&set(2, &[&[1, 0], &[0, 1]])).is_ok());
        let bad = is_mconvex(&set(2, &[&[2, 0], &[0, 2]])).unwrap_err();
        assert_eq!(
            bad,
            MConvexViolation {
                i: 0,
                alpha: vec![2, 0],
                beta: vec![0, 2]
            }
        );
    }

    #[test]
    fn rank_of_uniform_cap_two() {
        let r = rank_from_mconvex(&uniform_cap_two(3)).unwrap();
        assert_eq!(r.r_of(&["1"]).unwrap(), 2);
        assert_eq!(r.r_of(&["1", "2"]).unwrap(), 3);
        let r12 = rank_from_mconvex(&set(2, &[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(r12, Polymatroid::of_matroid(&uniform(1, 2).unwrap()));
        assert!(matches!(
            rank_from_mconvex(&set(2, &[&[2, 0], &[0, 2]])),
            Err(PolymatroidError::NotMConvex(_))
        ));
    }

    #[test]
    fn inverse_constructions() {
        let u12 = Polymatroid::of_matroid(&uniform(1, 2).unwrap());
        let j = mconvex_from_rank(&u12).unwrap();
        assert_eq!(j.points().iter().cloned().collect::<Vec<_>>(), vec![vec![0, 1], vec![1, 0]]);
        let uj = uniform_cap_two(3);
        assert_eq!(mconvex_from_rank(&rank_from_mconvex(&uj).unwrap()).unwrap(), uj);
        let fano = catalog("fano").unwrap();
        let jf = mconvex_from_rank(&Polymatroid::of_matroid(&fano)).unwrap();
        assert_eq!(jf.len(), 28);
        for &b in fano.bases() {
            let v: Vec<u32> = (0..7).map(|i| b >> i & 1).collect();
            assert!(jf.contains(&v));
        }
    }

    #[test]
    fn flats_and_modularity() {
        let r = rank_from_mconvex(&uniform_cap_two(3)).unwrap();
        let f1 = r.mask_of(&["1"]).unwrap();
        let f2 = r.mask_of(&["2"]).unwrap();
        let fl = flats(&r);
        assert!(fl.contains(&f1) && fl.contains(&f2));
        assert!(fl.contains(&r.full_mask()));
        assert!(!is_modular_pair(&r, f1, f2).unwrap());
        assert!(is_modular_pair(&r, f1, f1).unwrap());
        assert!(is_modular_pair(&r, 0, r.full_mask()).unwrap());
        assert!(!sticky_sufficient(&r));
        let not_flat = r.mask_of(&["1", "2"]).unwrap();
        // r({1,2}) = 3 = r(E)
        assert!(matches!(is_modular_pair(&r, not_flat, f1), Err(PolymatroidError::NotAFlat(_))));

        assert!(sticky_sufficient(&Polymatroid::of_matroid(&uniform(1, 2).unwrap())));
        let free = Polymatroid::of_matroid(&uniform(3, 3).unwrap());
        assert_eq!(flats(&free).len(), 8);
        assert!(sticky_sufficient(&free));
    }

    #[test]
    fn restriction_and_scaling() {
        let r = rank_from_mconvex(&uniform_cap_two(3)).unwrap();
        assert_eq!(restrict(&r, r.full_mask()), r);
        let u24 = Polymatroid::of_matroid(&uniform(2, 4).unwrap());
        let single = restrict_labels(&u24, &["1"]).unwrap();
        assert_eq!(single.r(1), 1);
        let doubled = scale(&Polymatroid::of_matroid(&uniform(1, 2).unwrap()), 2);
        assert_eq!(doubled.r(0b01), 2);
        assert_eq!(doubled.r(0b11), 2);
        assert!(doubled.validate().is_ok());
        assert_eq!(scale(&r, 1), r);
    }

    #[test]
    fn specialisation_of_f7_relaxations() {
        let (r1, r2) = f7_specialized_pair();
        assert_eq!(r1.ground(), ["0", "1", "2", "3"]);
        assert_eq!(r2.ground(), ["0", "1", "2", "4"]);
        let base = rank_from_mconvex(&uniform_cap_two(3)).unwrap();
        let res = restrict_labels(&r1, &["0", "1", "2"]).unwrap();
        assert_eq!(res.table(), base.table());
        assert_eq!(scale(&r1, 3).r_of(&["0"]).unwrap(), 6);

        let fano = catalog("fano").unwrap();
        let id = identify_pairs(&fano, &[]);
        let j = specialize_support(&fano, &id).unwrap();
        assert_eq!(j.len(), fano.bases().len());
    }

    #[test]
    fn amalgam_search_basics() {
        let r = rank_from_mconvex(&uniform_cap_two(3)).unwrap();
        assert_eq!(find_amalgam(&r, &r).unwrap(), AmalgamOutcome::Found(r.clone()));

        let a = Polymatroid::of_matroid(&uniform(1, 1).unwrap());
        let b = Polymatroid::of_matroid(&uniform(1, 1).unwrap().relabeled(vec!["x".into()]).unwrap());
        let AmalgamOutcome::Found(sum) = find_amalgam(&a, &b).unwrap() else {
            panic!("disjoint grounds always amalgamate")
        };
        assert_eq!(sum.r(0b11), 2);

        let (r1, r2) = f7_specialized_pair();
        assert!(matches!(find_amalgam(&r1, &r2).unwrap(), AmalgamOutcome::Infeasible { .. }));
    }

    #[test]
    fn mismatched_restrictions_are_rejected() {
        let a = Polymatroid::of_matroid(&uniform(1, 2).unwrap());
        let b = Polymatroid::of_matroid(&uniform(2, 2).unwrap());
        assert!(matches!(find_amalgam(&a, &b), Err(PolymatroidError::RestrictionMismatch(_))));
    }

    #[test]
    fn json_roundtrip() {
        let r = rank_from_mconvex(&uniform_cap_two(3)).unwrap();
        let j = r.to_json();
        assert_eq!(j.r["1,2"], 3);
        assert_eq!(j.r[""], 0);
        assert_eq!(Polymatroid::from_json(&j).unwrap(), r);
        let s = uniform_cap_two(3);
        assert_eq!(MConvexSet::from_json(&s.to_json()).unwrap(), s);
    }
}
