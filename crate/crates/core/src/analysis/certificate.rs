//! Polynomial certificates: the two-parameter family over P8 and its Rayleigh
//! cubic, and the perturbed Fano generating polynomials.

use std::collections::BTreeMap;

use serde::Serialize;

use super::logvec::u_vector;
use super::{AnalysisError, Result};
use crate::matroid::{catalog, elements, nonfano_matrix, p8_matrix, Matroid, P8_RELAXED_SET};
use crate::poly::{basis_generating_polynomial, parse_poly, rayleigh_difference, x_var, SparsePoly};
use crate::rational::{fmt_rational, int, Rational};

/// `v_B = log2 |det A[B]|` for the P8 matrix, in basis order.
pub fn p8_log2_exponents() -> Result<(Matroid, Vec<u32>)> {
    let m = catalog("p8")?;
    let u = u_vector(&p8_matrix(), &m)?;
    let exps = u
        .coordinate(2)
        .iter()
        .map(|x| {
            if !x.is_integer() || x < &int(0) {
                return Err(AnalysisError::NonRepresentingMatrix("non-integral log2 exponent".into()));
            }
            Ok(x.to_integer().try_into().unwrap())
        })
        .collect::<Result<Vec<u32>>>()?;
    if u.primes().iter().any(|&p| p != 2) {
        return Err(AnalysisError::NonRepresentingMatrix("minor with an odd prime factor".into()));
    }
    Ok((m, exps))
}

/// `F_{a,b} = sum_B b^{v_B} x^B + a·x3·x5·x6·x7` over `x0..x7, a, b`.
pub fn build_f_ab() -> Result<SparsePoly> {
    let (m, v) = p8_log2_exponents()?;
    let mut vars: Vec<String> = m.ground().iter().map(|l| x_var(l)).collect();
    vars.push("a".into());
    vars.push("b".into());
    let n = m.size();
    let mut terms: Vec<(Vec<u32>, Rational)> = m
        .bases()
        .iter()
        .zip(&v)
        .map(|(&b, &vb)| {
            let mut e = vec![0u32; n + 2];
            for i in elements(b) {
                e[i] = 1;
            }
            e[n + 1] = vb;
            (e, int(1))
        })
        .collect();
    let mut extra = vec![0u32; n + 2];
    for i in elements(P8_RELAXED_SET) {
        extra[i] = 1;
    }
    extra[n] = 1;
    terms.push((extra, int(1)));
    Ok(SparsePoly::from_terms(vars, terms))
}

/// Display form of the expected cubic.
pub const RAYLEIGH_CUBIC: &str = "-a*b*t^3 + (-a*b - 4*b^2 + 2*a + 12*b + 16)*t^2 + a*t";

/// The expected cubic, expanded.
pub fn expected_cubic() -> SparsePoly {
    parse_poly("-1*a*b*t^3 - 1*a*b*t^2 - 4*b^2*t^2 + 2*a*t^2 + 12*b*t^2 + 16*t^2 + 1*a*t").expect("literal")
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CubicReport {
    /// Coefficients of `t^0..t^3` as polynomials in `a, b`.
    pub coefficients: Vec<String>,
    pub leading: String,
    /// The cubic at `a = b = 1`.
    pub at_unit: String,
    pub negative_at: String,
    pub value_there: String,
}

/// Computes `Δ_{0,1} F_{a,b}` at `(x2..x7) = (1, 1, t, -1, -1, t)` and checks it
/// against the expected cubic as an identity in `Q[a,b][t]`.
pub fn verify_rayleigh_cubic() -> Result<(SparsePoly, CubicReport)> {
    let f = build_f_ab()?;
    let delta = rayleigh_difference(&f, "x0", "x1");
    let t = SparsePoly::var("t");
    let one = SparsePoly::constant(int(1));
    let minus = SparsePoly::constant(int(-1));
    let assignment: BTreeMap<String, SparsePoly> = [
        ("x2", &one),
        ("x3", &one),
        ("x4", &t),
        ("x5", &minus),
        ("x6", &minus),
        ("x7", &t),
    ]
    .into_iter()
    .map(|(k, v)| (k.to_string(), v.clone()))
    .collect();
    let cubic = delta.substitute(&assignment).trim_vars();
    if cubic.var_index("x0").is_some() || cubic.var_index("x1").is_some() {
        return Err(AnalysisError::IdentityMismatch(
            "Rayleigh difference still depends on x0 or x1".into(),
        ));
    }
    let diff = &cubic - &expected_cubic();
    if !diff.is_zero() {
        return Err(AnalysisError::IdentityMismatch(diff.to_text()));
    }
    let coefficients: Vec<String> = cubic.coefficients_in("t").iter().map(|c| c.to_text()).collect();
    let unit = cubic
        .substitute_values(&[("a", int(1)), ("b", int(1))])
        .to_univariate("t")?;
    let t26 = int(26);
    let report = CubicReport {
        leading: coefficients.last().cloned().unwrap_or_default(),
        coefficients,
        at_unit: unit.to_text("t"),
        negative_at: fmt_rational(&t26),
        value_there: fmt_rational(&unit.eval(&t26)),
    };
    Ok((cubic, report))
}

/// `F_{1,1}`, the member of the family used for the Rayleigh witness.
pub fn f_unit() -> Result<SparsePoly> {
    Ok(build_f_ab()?
        .substitute_values(&[("a", int(1)), ("b", int(1))])
        .with_vars(&(0..8).map(|i| format!("x{i}")).collect::<Vec<_>>()))
}

/// The point `(0, 0, 1, 1, t, -1, -1, t)` in `x0..x7`.
pub fn rayleigh_point(t: i64) -> Vec<Rational> {
    [0, 0, 1, 1, t, -1, -1, t].into_iter().map(int).collect()
}

/// `h_{F7} + μ·x2·x4·x6`.
pub fn fano_perturbed(mu: Rational) -> Result<SparsePoly> {
    let m = catalog("fano")?;
    let h = basis_generating_polynomial(&m);
    let bump = SparsePoly::from_terms(
        h.vars().to_vec(),
        [((0..7).map(|i| u32::from([1, 3, 5].contains(&i))).collect(), mu)],
    );
    Ok(&h + &bump)
}

/// `sum_S |det A[S]| x^S` for the non-Fano matrix.
pub fn nonfano_abs_det_polynomial() -> Result<SparsePoly> {
    let m = catalog("nonfano")?;
    let a = nonfano_matrix();
    let vars: Vec<String> = m.ground().iter().map(|l| x_var(l)).collect();
    let terms = crate::matroid::k_subsets(7, 3).into_iter().map(|s| {
        let e = (0..7).map(|i| s >> i & 1).collect();
        let d = a.minor(s);
        (e, if d < int(0) { -d } else { d })
    });
    Ok(SparsePoly::from_terms(vars, terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f_ab_shape() {
        let f = build_f_ab().unwrap();
        assert_eq!(f.num_terms(), 61);
        assert_eq!(f.coeff(&[("x0", 1), ("x1", 1), ("x2", 1), ("x3", 1)]), int(1));
        assert_eq!(f.coeff(&[("x3", 1), ("x5", 1), ("x6", 1), ("x7", 1), ("a", 1)]), int(1));
    }

    #[test]
    fn cubic_identity() {
        let (cubic, report) = verify_rayleigh_cubic().unwrap();
        assert_eq!(cubic.coeff(&[("t", 3), ("a", 1), ("b", 1)]), int(-1));
        assert_eq!(report.leading, "-1*a*b");
        assert_eq!(report.coefficients[0], "0");
        assert_eq!(report.coefficients[1], "1*a");
        assert_eq!(report.at_unit, "-1*t^3 + 25*t^2 + 1*t");
        assert_eq!(report.value_there, "-650");
    }

    #[test]
    fn absdet_matches_perturbation() {
        assert_eq!(nonfano_abs_det_polynomial().unwrap(), fano_perturbed(int(2)).unwrap());
    }
}
