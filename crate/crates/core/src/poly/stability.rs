//! Line restrictions, hyperbolicity cones and sampled stability falsification.
//!
//! A witness returned here is a certificate: it is checked exactly and
//! [`verify_witness`] recomputes it from scratch.

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{rayleigh_difference, PolyError, Result, SparsePoly, UnivariatePoly};
use super::univariate::{count_roots_in, sturm_real_rooted};
use crate::rational::{int, ratio, Rational};

/// `t ↦ P(t·e + v)`.
pub fn line_restriction(p: &SparsePoly, e: &[Rational], v: &[Rational]) -> Result<UnivariatePoly> {
    let n = p.vars().len();
    for len in [e.len(), v.len()] {
        if len != n {
            return Err(PolyError::DimensionMismatch { expected: n, got: len });
        }
    }
    let maxdeg: Vec<u32> = (0..n)
        .map(|i| p.terms().keys().map(|x| x[i]).max().unwrap_or(0))
        .collect();
    let powers: Vec<Vec<UnivariatePoly>> = (0..n)
        .map(|i| {
            let lin = UnivariatePoly::new(vec![v[i].clone(), e[i].clone()]);
            let mut pw = vec![UnivariatePoly::new(vec![Rational::one()])];
            for k in 0..maxdeg[i] as usize {
                let next = pw[k].mul(&lin);
                pw.push(next);
            }
            pw
        })
        .collect();
    let mut acc = UnivariatePoly::new(Vec::new());
    for (x, c) in p.terms() {
        let mut t = UnivariatePoly::new(vec![c.clone()]);
        for (i, &k) in x.iter().enumerate() {
            if k > 0 {
                t = t.mul(&powers[i][k as usize]);
            }
        }
        acc = acc.add(&t);
    }
    Ok(acc)
}

/// Whether `P(t·e + v)` is real-rooted in `t`. Fails with `ZeroPolynomial` when it vanishes identically.
pub fn line_test(p: &SparsePoly, e: &[Rational], v: &[Rational]) -> Result<bool> {
    sturm_real_rooted(&line_restriction(p, e, v)?)
}

/// Membership of `w` in the closed hyperbolicity cone of `P` at `e`:
/// `P(t·e + w)` must be real-rooted and have no root in `(0, ∞)`.
pub fn cone_contains(p: &SparsePoly, e: &[Rational], w: &[Rational]) -> Result<bool> {
    let u = line_restriction(p, e, w)?;
    if !sturm_real_rooted(&u)? {
        return Err(PolyError::NotRealRooted);
    }
    Ok(count_roots_in(&u, Some(&Rational::zero()), None)? == 0)
}

/// Lines `t·e + v` with `e` in the open positive orthant, and real points.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SampleSet {
    pub lines: Vec<(Vec<Rational>, Vec<Rational>)>,
    pub points: Vec<Vec<Rational>>,
}

const PRIMES: [u64; 40] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101,
    103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173,
];

/// Van der Corput radical inverse of `k` in `base`, as an exact rational in `[0, 1)`.
fn radical_inverse(mut k: u64, base: u64) -> Rational {
    let mut num = 0u64;
    let mut den = 1u64;
    while k > 0 {
        num = num * base + k % base;
        den *= base;
        k /= base;
    }
    ratio(num as i64, den as i64)
}

/// Size of the built-in grid.
pub const BUILTIN_GRID: usize = 200;

impl SampleSet {
    /// The built-in grid: `halton(n, BUILTIN_GRID)`.
    pub fn builtin(n: usize) -> Self {
        Self::halton(n, BUILTIN_GRID)
    }

    /// Deterministic Halton grid: `count` lines and `count` points in `n` variables.
    ///
    /// Directions lie in `[1/2, 2)^n`, offsets in `[-2, 2)^n`; points are spread
    /// over several scales so that both small and large coordinates occur.
    pub fn halton(n: usize, count: usize) -> Self {
        assert!(2 * n <= PRIMES.len(), "too many variables for the built-in grid");
        let mut s = SampleSet::default();
        for k in 1..=count as u64 {
            let e = (0..n)
                .map(|i| ratio(1, 2) + ratio(3, 2) * radical_inverse(k, PRIMES[i]))
                .collect();
            let v = (0..n)
                .map(|i| int(4) * radical_inverse(k, PRIMES[n + i]) - int(2))
                .collect();
            s.lines.push((e, v));
            let scale = int(1 << (k % 4));
            let p = (0..n)
                .map(|i| (int(4) * radical_inverse(k + count as u64, PRIMES[i]) - int(2)) * &scale)
                .collect();
            s.points.push(p);
        }
        s
    }

    /// Seeded random samples with small-denominator rational coordinates.
    pub fn random(n: usize, count: usize, seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut q = |lo: i64, hi: i64| ratio(rng.gen_range(lo..=hi), rng.gen_range(1..=4));
        let mut s = SampleSet::default();
        for _ in 0..count {
            let e = (0..n).map(|_| q(1, 8)).collect();
            let v = (0..n).map(|_| q(-8, 8)).collect();
            s.lines.push((e, v));
            s.points.push((0..n).map(|_| q(-8, 8)).collect());
        }
        s
    }

    pub fn extend(&mut self, other: SampleSet) {
        self.lines.extend(other.lines);
        self.points.extend(other.points);
    }

    pub fn len(&self) -> usize {
        self.lines.len() + self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum StabilityWitness {
    /// `P(t·e + v)` is identically zero or has a non-real root.
    NotRealRooted {
        e: Vec<Rational>,
        v: Vec<Rational>,
        restriction: UnivariatePoly,
    },
    /// `P` has degree at most one in both variables and the Rayleigh difference is negative at `point`.
    NegativeRayleigh {
        i: String,
        j: String,
        point: Vec<Rational>,
        value: Rational,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub enum FalsifyOutcome {
    Witness(StabilityWitness),
    NoneFound { lines_checked: usize, points_checked: usize },
}

fn positive(e: &[Rational]) -> bool {
    e.iter().all(Signed::is_positive)
}

/// Searches `samples` for a certificate that `P` is not stable.
///
/// Lines whose direction is not strictly positive are ignored. Rayleigh
/// differences are only tested for pairs of variables in which `P` is affine.
pub fn stability_falsify(p: &SparsePoly, samples: &SampleSet) -> Result<FalsifyOutcome> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let n = p.vars().len();
    let mut lines_checked = 0;
    for (e, v) in &samples.lines {
        if !positive(e) {
            continue;
        }
        let u = line_restriction(p, e, v)?;
        lines_checked += 1;
        if u.is_zero() || !sturm_real_rooted(&u)? {
            return Ok(FalsifyOutcome::Witness(StabilityWitness::NotRealRooted {
                e: e.clone(),
                v: v.clone(),
                restriction: u,
            }));
        }
    }
    let affine: Vec<usize> = (0..n).filter(|&i| p.degree_in(&p.vars()[i]) <= 1).collect();
    let mut diffs = Vec::new();
    for (a, &i) in affine.iter().enumerate() {
        for &j in &affine[a + 1..] {
            let d = rayleigh_difference(p, &p.vars()[i], &p.vars()[j]);
            if !d.is_zero() {
                diffs.push((i, j, d.with_vars(p.vars())));
            }
        }
    }
    let mut points_checked = 0;
    for x in &samples.points {
        if x.len() != n {
            return Err(PolyError::DimensionMismatch { expected: n, got: x.len() });
        }
        points_checked += 1;
        for (i, j, d) in &diffs {
            let value = d.eval(x)?;
            if value.is_negative() {
                return Ok(FalsifyOutcome::Witness(StabilityWitness::NegativeRayleigh {
                    i: p.vars()[*i].clone(),
                    j: p.vars()[*j].clone(),
                    point: x.clone(),
                    value,
                }));
            }
        }
    }
    Ok(FalsifyOutcome::NoneFound { lines_checked, points_checked })
}

/// Recomputes a witness against `P` from scratch.
pub fn verify_witness(p: &SparsePoly, w: &StabilityWitness) -> bool {
    match w {
        StabilityWitness::NotRealRooted { e, v, restriction } => {
            if !positive(e) {
                return false;
            }
            let Ok(u) = line_restriction(p, e, v) else {
                return false;
            };
            &u == restriction && (u.is_zero() || !sturm_real_rooted(&u).unwrap_or(true))
        }
        StabilityWitness::NegativeRayleigh { i, j, point, value } => {
            if i == j || p.degree_in(i) > 1 || p.degree_in(j) > 1 {
                return false;
            }
            if p.var_index(i).is_none() || p.var_index(j).is_none() {
                return false;
            }
            let d = rayleigh_difference(p, i, j).with_vars(p.vars());
            matches!(d.eval(point), Ok(x) if &x == value && x.is_negative())
        }
    }
}
