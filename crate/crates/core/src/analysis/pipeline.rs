//! From two stable polynomials agreeing on a common set of variables to
//! real zero polynomials, and back from a common real zero extension to an
//! amalgam of the support polymatroids.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{AnalysisError, Result};
use crate::matroid::catalog;
use crate::poly::{
    basis_generating_polynomial, cone_contains, homogenize, line_test, truncate_divide, x_var, SampleSet,
    SparsePoly,
};
use crate::polymatroid::{is_amalgam_of, is_mconvex, rank_from_mconvex, MConvexSet, Polymatroid};
use crate::rational::{int, Rational};

/// Inputs `P1`, `P2` with common variables `E0` and the distinguished variable `pivot ∈ E0`.
#[derive(Debug, Clone)]
pub struct AmalgamationInput {
    pub p1: SparsePoly,
    pub p2: SparsePoly,
    pub e0: Vec<String>,
    pub pivot: String,
}

/// `P_k`, `H_k` and `Q_k` for `k = 0, 1, 2`.
#[derive(Debug, Clone)]
pub struct ShiftedFamily {
    pub degree: u32,
    pub p: [SparsePoly; 3],
    pub h: [SparsePoly; 3],
    pub q: [SparsePoly; 3],
    /// Variable lists `E_0, E_1, E_2`.
    pub grounds: [Vec<String>; 3],
}

fn keep(p: &SparsePoly, vars: &[String]) -> SparsePoly {
    let refs: Vec<&str> = vars.iter().map(String::as_str).collect();
    p.restrict_to(&refs)
}

fn shift_map(e0: &[String], pivot: &str, sign: i64) -> BTreeMap<String, SparsePoly> {
    let x0 = SparsePoly::var(pivot).scale(&int(sign));
    e0.iter()
        .filter(|v| *v != pivot)
        .map(|v| (v.clone(), &SparsePoly::var(v) + &x0))
        .collect()
}

fn used_vars(p: &SparsePoly) -> Vec<String> {
    p.trim_vars().vars().to_vec()
}

/// Builds `P0` and the shifted family, checking `P1|E0 = P2|E0`.
pub fn shift_family(input: &AmalgamationInput) -> Result<ShiftedFamily> {
    let AmalgamationInput { p1, p2, e0, pivot } = input;
    if !e0.contains(pivot) {
        return Err(AnalysisError::RestrictionMismatch(format!("pivot {pivot} not in E0")));
    }
    let d1 = p1.homogeneous_degree().filter(|_| !p1.is_zero());
    let d2 = p2.homogeneous_degree().filter(|_| !p2.is_zero());
    let (Some(d1), Some(d2)) = (d1, d2) else {
        return Err(AnalysisError::Poly(crate::poly::PolyError::NotHomogeneous));
    };
    if d1 != d2 {
        return Err(AnalysisError::RestrictionMismatch(format!("degrees {d1} and {d2} differ")));
    }
    let p0a = keep(p1, e0);
    let p0b = keep(p2, e0);
    if p0a != p0b {
        return Err(AnalysisError::RestrictionMismatch((&p0a - &p0b).to_text()));
    }
    let ground = |p: &SparsePoly| -> Vec<String> {
        let mut g: Vec<String> = e0.clone();
        for v in used_vars(p) {
            if !g.contains(&v) {
                g.push(v);
            }
        }
        g
    };
    let grounds = [e0.clone(), ground(p1), ground(p2)];
    let p = [p0a, p1.clone(), p2.clone()];
    let shift = shift_map(e0, pivot, 1);
    let h = p.clone().map(|pk| pk.substitute(&shift));
    let q = h.clone().map(|hk| hk.substitute_values(&[(pivot.as_str(), int(1))]));
    for k in 1..=2 {
        let primed: Vec<String> = grounds[0].iter().filter(|v| *v != pivot).cloned().collect();
        if keep(&q[k], &primed) != q[0] {
            return Err(AnalysisError::RestrictionMismatch(format!("Q0 is not the restriction of Q{k}")));
        }
    }
    Ok(ShiftedFamily {
        degree: d1,
        p,
        h,
        q,
        grounds,
    })
}

#[derive(Debug, Clone)]
pub struct PipelineOutcome {
    pub d_prime: u32,
    pub h: SparsePoly,
    pub p: SparsePoly,
    pub p_prime: SparsePoly,
    pub support: MConvexSet,
    pub amalgam: Polymatroid,
    pub r1: Polymatroid,
    pub r2: Polymatroid,
}

/// Support of `P` as an M-convex candidate on the given variable order.
pub fn support_set(p: &SparsePoly, vars: &[String]) -> Result<MConvexSet> {
    let aligned = p.with_vars(vars);
    let pts: Vec<Vec<u32>> = aligned.support().into_iter().collect();
    Ok(MConvexSet::new(vars.to_vec(), pts)?)
}

/// Runs the constructive direction for a candidate `Q` on `E' = E ∖ {pivot}`.
pub fn amalgamate_from_q(input: &AmalgamationInput, fam: &ShiftedFamily, q: &SparsePoly) -> Result<PipelineOutcome> {
    let pivot = input.pivot.as_str();
    let known: BTreeSet<&String> = fam.grounds[1].iter().chain(&fam.grounds[2]).collect();
    if let Some(v) = used_vars(q).iter().find(|v| !known.contains(v) || v.as_str() == pivot) {
        return Err(AnalysisError::RestrictionMismatch(format!("Q uses variable {v} outside E'")));
    }
    for k in 1..=2 {
        let primed: Vec<String> = fam.grounds[k].iter().filter(|v| *v != pivot).cloned().collect();
        if keep(q, &primed) != fam.q[k] {
            return Err(AnalysisError::RestrictionMismatch(format!("Q does not restrict to Q{k}")));
        }
    }
    let d_prime = q.degree().unwrap_or(0);
    let d = fam.degree;
    if d_prime < d {
        return Err(AnalysisError::RestrictionMismatch(format!("deg Q = {d_prime} < {d}")));
    }
    let h = homogenize(q, pivot, d_prime)?;
    let x0 = SparsePoly::var(pivot);
    let lift = x0.pow(d_prime - d);
    for k in 1..=2 {
        if keep(&h, &fam.grounds[k]) != &lift * &fam.h[k] {
            return Err(AnalysisError::RestrictionMismatch(format!("H|E{k} is not x0^(d'-d)·H{k}")));
        }
    }
    let p = h.substitute(&shift_map(&input.e0, pivot, -1));
    for k in 1..=2 {
        if keep(&p, &fam.grounds[k]) != &lift * &fam.p[k] {
            return Err(AnalysisError::RestrictionMismatch(format!("P|E{k} is not x0^(d'-d)·P{k}")));
        }
    }
    let p_prime = truncate_divide(&p, pivot, d_prime - d);
    for k in 1..=2 {
        if keep(&p_prime, &fam.grounds[k]) != fam.p[k] {
            return Err(AnalysisError::RestrictionMismatch(format!("P'|E{k} is not P{k}")));
        }
    }
    let mut derived = p.clone();
    for _ in 0..d_prime - d {
        derived = derived.derivative(pivot);
    }
    if derived.with_vars(p.vars()).support() != p_prime.with_vars(p.vars()).support() {
        return Err(AnalysisError::IdentityMismatch(
            "support of P' differs from that of the derivative".into(),
        ));
    }
    let mut ground = fam.grounds[1].clone();
    for v in &fam.grounds[2] {
        if !ground.contains(v) {
            ground.push(v.clone());
        }
    }
    let support = support_set(&p_prime, &ground)?;
    if let Err(v) = is_mconvex(&support) {
        return Err(AnalysisError::SupportNotMConvex(v.to_string()));
    }
    let amalgam = rank_from_mconvex(&support)?;
    let r1 = rank_from_mconvex(&support_set(&fam.p[1], &fam.grounds[1])?)?;
    let r2 = rank_from_mconvex(&support_set(&fam.p[2], &fam.grounds[2])?)?;
    if !is_amalgam_of(&amalgam, &r1, &r2) {
        return Err(AnalysisError::IdentityMismatch("support rank function is not an amalgam".into()));
    }
    Ok(PipelineOutcome {
        d_prime,
        h,
        p,
        p_prime,
        support,
        amalgam,
        r1,
        r2,
    })
}

/// `P1`, `P2`: generating polynomials of `F7^-4`, `F7^-5` with `x0' = x0`, `x1' = x1`, `x2' = x2`.
pub fn f7_specialized_polynomials() -> Result<AmalgamationInput> {
    let identify = |name: &str| -> Result<SparsePoly> {
        let h = basis_generating_polynomial(&catalog(name)?);
        let assignment: BTreeMap<String, SparsePoly> = ["0", "1", "2"]
            .iter()
            .map(|l| (x_var(&format!("{l}'")), SparsePoly::var(&x_var(l))))
            .collect();
        Ok(h.substitute(&assignment))
    };
    Ok(AmalgamationInput {
        p1: identify("f7m4")?,
        p2: identify("f7m5")?,
        e0: ["x0", "x1", "x2"].map(String::from).to_vec(),
        pivot: "x0".into(),
    })
}

/// Sampled checks that `H_k` is hyperbolic in direction `δ_pivot` and that its
/// cone contains every `δ_i` and `δ_pivot − sum_{i ∈ E0∖pivot} δ_i`.
///
/// Only necessary conditions: passing proves nothing, a failure disproves stability of `P_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypconeReport {
    pub k: usize,
    pub lines_checked: usize,
    pub all_real_rooted: bool,
    pub cone_members: BTreeMap<String, bool>,
    pub kind: String,
}

pub fn hypcone_sampled(fam: &ShiftedFamily, pivot: &str, lines: usize) -> Result<Vec<HypconeReport>> {
    let mut out = Vec::new();
    for k in 0..3 {
        let h = fam.h[k].with_vars(&fam.grounds[k]);
        let n = h.vars().len();
        let pos = h.var_index(pivot).expect("pivot in every ground");
        let e: Vec<Rational> = (0..n).map(|i| int(i64::from(i == pos))).collect();
        let grid = SampleSet::halton(n, lines);
        let mut ok = true;
        for (_, v) in &grid.lines {
            ok &= line_test(&h, &e, v)?;
        }
        let mut members = BTreeMap::new();
        for (i, name) in h.vars().iter().enumerate() {
            let w: Vec<Rational> = (0..n).map(|j| int(i64::from(j == i))).collect();
            members.insert(format!("delta_{name}"), cone_contains(&h, &e, &w).unwrap_or(false));
        }
        let e0: BTreeSet<&String> = fam.grounds[0].iter().collect();
        let w: Vec<Rational> = h
            .vars()
            .iter()
            .map(|v| {
                if v == pivot {
                    int(1)
                } else if e0.contains(v) {
                    int(-1)
                } else {
                    int(0)
                }
            })
            .collect();
        members.insert("delta_pivot_minus_rest".into(), cone_contains(&h, &e, &w).unwrap_or(false));
        out.push(HypconeReport {
            k,
            lines_checked: grid.lines.len(),
            all_real_rooted: ok,
            cone_members: members,
            kind: "sampled, necessary-only".into(),
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use crate::polymatroid::{f7_specialized_pair, uniform_cap_two};

    #[test]
    fn degenerate_amalgamation_is_identity() {
        let p = parse_poly("x0^2 + x0*x1 + x0*x2 + x1*x2").unwrap();
        let input = AmalgamationInput {
            p1: p.clone(),
            p2: p.clone(),
            e0: ["x0", "x1", "x2"].map(String::from).to_vec(),
            pivot: "x0".into(),
        };
        let fam = shift_family(&input).unwrap();
        let out = amalgamate_from_q(&input, &fam, &fam.q[1]).unwrap();
        assert_eq!(out.p_prime, p);
        assert_eq!(out.d_prime, 2);
        let round = crate::poly::dehomogenize(&homogenize(&fam.q[1], "x0", 2).unwrap(), "x0").unwrap();
        assert_eq!(round, fam.q[1]);
    }

    #[test]
    fn two_sided_amalgamation() {
        let input = AmalgamationInput {
            p1: parse_poly("x0^2 + 2*x0*x1 + x1^2 + x0*x3 + x1*x3").unwrap(),
            p2: parse_poly("x0^2 + 2*x0*x1 + x1^2 + x0*x4 + x1*x4").unwrap(),
            e0: ["x0", "x1"].map(String::from).to_vec(),
            pivot: "x0".into(),
        };
        let fam = shift_family(&input).unwrap();
        let q = parse_poly("4 + 4*x1 + x1^2 + 2*x3 + x1*x3 + 2*x4 + x1*x4").unwrap();
        let out = amalgamate_from_q(&input, &fam, &q).unwrap();
        assert_eq!(out.d_prime, 2);
        assert!(is_amalgam_of(&out.amalgam, &out.r1, &out.r2));

        let bad = parse_poly("4 + 4*x1 + x1^2 + 2*x3 + x1*x3").unwrap();
        assert!(matches!(
            amalgamate_from_q(&input, &fam, &bad),
            Err(AnalysisError::RestrictionMismatch(_))
        ));
    }

    #[test]
    fn higher_degree_extension_truncates() {
        let input = AmalgamationInput {
            p1: parse_poly("x0 + x1 + x3").unwrap(),
            p2: parse_poly("x0 + x1 + x4").unwrap(),
            e0: ["x0", "x1"].map(String::from).to_vec(),
            pivot: "x0".into(),
        };
        let fam = shift_family(&input).unwrap();
        // Q1 = 2 + x1 + x3, Q2 = 2 + x1 + x4
        let q = parse_poly("2 + x1 + x3 + x4 + x3*x4").unwrap();
        let out = amalgamate_from_q(&input, &fam, &q).unwrap();
        assert_eq!(out.d_prime, 2);
        assert_eq!(out.p_prime, parse_poly("x0 + x1 + x3 + x4").unwrap());
    }

    #[test]
    fn f7_pair_agrees_on_common_part() {
        let input = f7_specialized_polynomials().unwrap();
        let fam = shift_family(&input).unwrap();
        assert_eq!(fam.degree, 3);
        let p0 = support_set(&fam.p[0], &fam.grounds[0]).unwrap();
        assert_eq!(p0.points(), uniform_cap_two(3).points());
        let (r1, r2) = f7_specialized_pair();
        let s1 = rank_from_mconvex(&support_set(&fam.p[1], &fam.grounds[1]).unwrap()).unwrap();
        let s2 = rank_from_mconvex(&support_set(&fam.p[2], &fam.grounds[2]).unwrap()).unwrap();
        assert_eq!(s1.table(), r1.table());
        assert_eq!(s2.table(), r2.table());
    }
}
