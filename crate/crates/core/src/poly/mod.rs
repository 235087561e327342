//! Exact sparse multivariate polynomials over the rationals.
//!
//! A [`SparsePoly`] carries its own ordered variable list. Binary operations
//! on polynomials over different variable lists work on the union (left
//! operand's variables first), so `x + y` is simply written as
//! `&var("x") + &var("y")`.

mod stability;
mod text;
mod univariate;

use std::collections::{BTreeMap, BTreeSet};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::polymatroid::MConvexSet;
use crate::rational::{factorial, Rational};

pub use stability::{
    cone_contains, line_restriction, line_test, stability_falsify, verify_witness, FalsifyOutcome,
    SampleSet, StabilityWitness, BUILTIN_GRID,
};
pub use text::{parse_poly, PolyJson, TermJson};
pub use univariate::{count_roots_in, sturm_real_rooted, UnivariatePoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("the zero polynomial has no well-defined root count")]
    ZeroPolynomial,
    #[error("requested degree {requested} is below the polynomial degree {degree}")]
    DegreeTooSmall { degree: u32, requested: u32 },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("restriction to the line is not real-rooted")]
    NotRealRooted,
    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, PolyError>;

/// Exponent vector, aligned with [`SparsePoly::vars`].
pub type Exponent = Vec<u32>;

#[derive(Debug, Clone)]
pub struct SparsePoly {
    vars: Vec<String>,
    terms: BTreeMap<Exponent, Rational>,
}

fn union_vars(a: &[String], b: &[String]) -> Vec<String> {
    let mut out = a.to_vec();
    for v in b {
        if !out.contains(v) {
            out.push(v.clone());
        }
    }
    out
}

impl SparsePoly {
    pub fn zero(vars: Vec<String>) -> Self {
        SparsePoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_terms(Vec::new(), [(Vec::new(), c)])
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var(name: &str) -> Self {
        Self::from_terms(vec![name.to_string()], [(vec![1], Rational::one())])
    }

    /// Sums the given terms, dropping zero coefficients.
    pub fn from_terms(vars: Vec<String>, terms: impl IntoIterator<Item = (Exponent, Rational)>) -> Self {
        let mut map: BTreeMap<Exponent, Rational> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent length must match variable count");
            *map.entry(e).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        SparsePoly { vars, terms: map }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Exponent, Rational> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Coefficient of the monomial given as `(variable, exponent)` pairs.
    pub fn coeff(&self, monomial: &[(&str, u32)]) -> Rational {
        let mut e = vec![0u32; self.vars.len()];
        for &(v, k) in monomial {
            match self.var_index(v) {
                Some(i) => e[i] += k,
                None if k == 0 => {}
                None => return Rational::zero(),
            }
        }
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn support(&self) -> BTreeSet<Exponent> {
        self.terms.keys().cloned().collect()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        match self.var_index(var) {
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    /// The common total degree of all terms. The zero polynomial counts as homogeneous of degree 0.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => Some(0),
            Some(d) => degs.all(|x| x == d).then_some(d),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous_degree().is_some()
    }

    /// Same polynomial over a variable list containing all of `self.vars`.
    pub fn with_vars(&self, vars: &[String]) -> Self {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("target variable list must contain every variable"))
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = vec![0u32; vars.len()];
                for (k, &x) in e.iter().enumerate() {
                    ne[map[k]] = x;
                }
                (ne, c.clone())
            })
            .collect();
        SparsePoly {
            vars: vars.to_vec(),
            terms,
        }
    }

    /// Drops variables that occur in no term.
    pub fn trim_vars(&self) -> Self {
        let used: Vec<usize> = (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|e| e[i] > 0))
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (used.iter().map(|&i| e[i]).collect(), c.clone()))
            .collect();
        SparsePoly {
            vars: used.iter().map(|&i| self.vars[i].clone()).collect(),
            terms,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.vars.clone(), self.terms.iter().map(|(e, x)| (e.clone(), x * c)))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(Rational::one()).with_vars(&self.vars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Formal partial derivative; zero when `var` does not occur.
    pub fn derivative(&self, var: &str) -> Self {
        let Some(i) = self.var_index(var) else {
            return Self::zero(self.vars.clone());
        };
        let terms = self.terms.iter().filter(|(e, _)| e[i] > 0).map(|(e, c)| {
            let mut ne = e.clone();
            ne[i] -= 1;
            (ne, c * Rational::from_integer(e[i].into()))
        });
        Self::from_terms(self.vars.clone(), terms)
    }

    /// Simultaneous substitution `var ↦ image`. Substituted variables leave the
    /// variable list unless an image mentions them again.
    pub fn substitute(&self, assignment: &BTreeMap<String, SparsePoly>) -> Self {
        let mut vars: Vec<String> = self
            .vars
            .iter()
            .filter(|v| !assignment.contains_key(*v))
            .cloned()
            .collect();
        for img in assignment.values() {
            vars = union_vars(&vars, &img.vars);
        }
        let images: Vec<Option<SparsePoly>> = self
            .vars
            .iter()
            .map(|v| assignment.get(v).map(|p| p.with_vars(&vars)))
            .collect();
        let kept: Vec<Option<usize>> = self
            .vars
            .iter()
            .map(|v| if assignment.contains_key(v) { None } else { vars.iter().position(|w| w == v) })
            .collect();
        let mut powers: Vec<Vec<SparsePoly>> = images
            .iter()
            .map(|img| match img {
                Some(p) => vec![Self::constant(Rational::one()).with_vars(&vars), p.clone()],
                None => Vec::new(),
            })
            .collect();
        let mut acc = Self::zero(vars.clone());
        for (e, c) in &self.terms {
            let mut mono = vec![0u32; vars.len()];
            let mut factor = Self::from_terms(vars.clone(), [(vec![0; vars.len()], c.clone())]);
            for (k, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                match kept[k] {
                    Some(pos) => mono[pos] += x,
                    None => {
                        let base = images[k].as_ref().unwrap();
                        while powers[k].len() <= x as usize {
                            let next = powers[k].last().unwrap() * base;
                            powers[k].push(next);
                        }
                        factor = &factor * &powers[k][x as usize];
                    }
                }
            }
            let shifted = SparsePoly {
                vars: vars.clone(),
                terms: factor
                    .terms
                    .into_iter()
                    .map(|(fe, fc)| (fe.iter().zip(&mono).map(|(a, b)| a + b).collect(), fc))
                    .collect(),
            };
            acc = &acc + &shifted;
        }
        acc
    }

    /// Substitutes rational constants for some variables.
    pub fn substitute_values(&self, values: &[(&str, Rational)]) -> Self {
        let assignment = values
            .iter()
            .map(|(v, q)| (v.to_string(), Self::constant(q.clone())))
            .collect();
        self.substitute(&assignment)
    }

    /// Sets the listed variables to zero and removes them.
    pub fn set_zero(&self, zero_vars: &[&str]) -> Self {
        let idx: Vec<usize> = zero_vars.iter().filter_map(|v| self.var_index(v)).collect();
        let keep: Vec<usize> = (0..self.vars.len()).filter(|i| !idx.contains(i)).collect();
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| idx.iter().all(|&i| e[i] == 0))
            .map(|(e, c)| (keep.iter().map(|&i| e[i]).collect(), c.clone()));
        Self::from_terms(keep.iter().map(|&i| self.vars[i].clone()).collect(), terms)
    }

    /// Sets every variable outside `keep` to zero.
    pub fn restrict_to(&self, keep: &[&str]) -> Self {
        let drop: Vec<&str> = self
            .vars
            .iter()
            .map(String::as_str)
            .filter(|v| !keep.contains(v))
            .collect();
        self.set_zero(&drop)
    }

    /// Evaluates at a point given in variable order.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.vars.len() {
            return Err(PolyError::DimensionMismatch {
                expected: self.vars.len(),
                got: point.len(),
            });
        }
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t *= num_traits::pow(x.clone(), k as usize);
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Evaluates with named values; every variable must be assigned.
    pub fn eval_named(&self, values: &BTreeMap<String, Rational>) -> Result<Rational> {
        let point = self
            .vars
            .iter()
            .map(|v| values.get(v).cloned().ok_or_else(|| PolyError::UnknownVariable(v.clone())))
            .collect::<Result<Vec<_>>>()?;
        self.eval(&point)
    }

    /// Coefficients of the powers of `var`, lowest first, each without `var`.
    pub fn coefficients_in(&self, var: &str) -> Vec<SparsePoly> {
        let Some(i) = self.var_index(var) else {
            return vec![self.clone()];
        };
        let rest: Vec<String> = self.vars.iter().filter(|v| *v != var).cloned().collect();
        let deg = self.degree_in(var) as usize;
        let mut out = vec![Self::zero(rest.clone()); deg + 1];
        for (e, c) in &self.terms {
            let mut ne = e.clone();
            let k = ne.remove(i) as usize;
            out[k].terms.insert(ne, c.clone());
        }
        out
    }

    /// Univariate view; fails if any other variable occurs.
    pub fn to_univariate(&self, var: &str) -> Result<UnivariatePoly> {
        let t = self.trim_vars();
        if t.vars.iter().any(|v| v != var) {
            return Err(PolyError::UnknownVariable(
                t.vars.iter().find(|v| *v != var).cloned().unwrap_or_default(),
            ));
        }
        let mut coeffs = vec![Rational::zero(); t.degree().unwrap_or(0) as usize + 1];
        for (e, c) in &t.terms {
            let k = e.first().copied().unwrap_or(0) as usize;
            coeffs[k] = c.clone();
        }
        Ok(UnivariatePoly::new(coeffs))
    }

    /// Terms in graded-lex order: higher total degree first, then lexicographically larger exponents.
    pub fn graded_terms(&self) -> Vec<(&Exponent, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        v
    }

    fn map_binary(&self, other: &Self, f: impl Fn(&mut BTreeMap<Exponent, Rational>, Exponent, &Rational)) -> Self {
        let vars = union_vars(&self.vars, &other.vars);
        let a = self.with_vars(&vars);
        let b = other.with_vars(&vars);
        let mut terms = a.terms;
        for (e, c) in b.terms {
            f(&mut terms, e, &c);
        }
        terms.retain(|_, c| !c.is_zero());
        SparsePoly { vars, terms }
    }
}

impl PartialEq for SparsePoly {
    /// Equality as polynomials: variable lists may differ in order or in unused variables.
    fn eq(&self, other: &Self) -> bool {
        (self - other).is_zero()
    }
}

impl Eq for SparsePoly {}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        self.map_binary(rhs, |t, e, c| *t.entry(e).or_insert_with(Rational::zero) += c)
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        self.map_binary(rhs, |t, e, c| *t.entry(e).or_insert_with(Rational::zero) -= c)
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        let vars = union_vars(&self.vars, &rhs.vars);
        let a = self.with_vars(&vars);
        let b = rhs.with_vars(&vars);
        let mut terms: BTreeMap<Exponent, Rational> = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Exponent = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *terms.entry(e).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        SparsePoly { vars, terms }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for SparsePoly {
            type Output = SparsePoly;
            fn $m(self, rhs: SparsePoly) -> SparsePoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Variable name used for the ground element `label`.
pub fn x_var(label: &str) -> String {
    format!("x{label}")
}

/// `h_J = sum_{alpha in J} x^alpha / alpha!`, over the variables `x<label>`.
pub fn generating_polynomial(j: &MConvexSet) -> SparsePoly {
    let vars: Vec<String> = j.ground().iter().map(|l| x_var(l)).collect();
    let terms = j.points().iter().map(|alpha| {
        let denom = alpha
            .iter()
            .fold(Rational::one(), |acc, &k| acc * factorial(k));
        (alpha.clone(), denom.recip())
    });
    SparsePoly::from_terms(vars, terms)
}

/// Basis generating polynomial `sum_B prod_{i in B} x_i` of a matroid.
pub fn basis_generating_polynomial(m: &crate::matroid::Matroid) -> SparsePoly {
    let vars: Vec<String> = m.ground().iter().map(|l| x_var(l)).collect();
    let terms = m.bases().iter().map(|&b| {
        let e: Exponent = (0..m.size()).map(|i| b >> i & 1).collect();
        (e, Rational::one())
    });
    SparsePoly::from_terms(vars, terms)
}

/// `∂_i P · ∂_j P − P · ∂_i ∂_j P`.
pub fn rayleigh_difference(p: &SparsePoly, i: &str, j: &str) -> SparsePoly {
    let pi = p.derivative(i);
    let pj = p.derivative(j);
    let pij = pi.derivative(j);
    &(&pi * &pj) - &(p * &pij)
}

/// `x0^d' · Q(x / x0)`, with `x0` prepended to the variable list.
pub fn homogenize(q: &SparsePoly, x0: &str, degree: u32) -> Result<SparsePoly> {
    if q.var_index(x0).is_some_and(|i| q.terms.keys().any(|e| e[i] > 0)) {
        return Err(PolyError::Parse(format!("{x0} already occurs in the polynomial")));
    }
    let q = match q.var_index(x0) {
        Some(_) => q.set_zero(&[x0]),
        None => q.clone(),
    };
    let deg = q.degree().unwrap_or(0);
    if degree < deg {
        return Err(PolyError::DegreeTooSmall { degree: deg, requested: degree });
    }
    let mut vars = vec![x0.to_string()];
    vars.extend(q.vars.iter().cloned());
    let terms = q.terms.iter().map(|(e, c)| {
        let mut ne = Vec::with_capacity(e.len() + 1);
        ne.push(degree - e.iter().sum::<u32>());
        ne.extend_from_slice(e);
        (ne, c.clone())
    });
    Ok(SparsePoly::from_terms(vars, terms))
}

/// `H |_{x0 = 1}` for homogeneous `H`.
pub fn dehomogenize(h: &SparsePoly, x0: &str) -> Result<SparsePoly> {
    if !h.is_homogeneous() {
        return Err(PolyError::NotHomogeneous);
    }
    Ok(h.substitute_values(&[(x0, Rational::one())]))
}

/// Keeps the terms divisible by `x0^k` and divides them by `x0^k`.
pub fn truncate_divide(p: &SparsePoly, x0: &str, k: u32) -> SparsePoly {
    let Some(i) = p.var_index(x0) else {
        return if k == 0 { p.clone() } else { SparsePoly::zero(p.vars.clone()) };
    };
    let terms = p.terms.iter().filter(|(e, _)| e[i] >= k).map(|(e, c)| {
        let mut ne = e.clone();
        ne[i] -= k;
        (ne, c.clone())
    });
    SparsePoly::from_terms(p.vars.clone(), terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::catalog;
    use crate::polymatroid::{uniform_cap_two, MConvexSet};
    use crate::rational::{int, ratio};

    fn v(n: &str) -> SparsePoly {
        SparsePoly::var(n)
    }

    fn c(x: i64) -> SparsePoly {
        SparsePoly::constant(int(x))
    }

    #[test]
    fn derivatives() {
        let x = v("x");
        let y = v("y");
        let p = &(&x * &x) * &y;
        assert_eq!(p.derivative("x"), &c(2) * &(&x * &y));
        assert!(y.derivative("x").is_zero());
    }

    #[test]
    fn derivative_support_of_p8() {
        let p8 = catalog("p8").unwrap();
        let h = basis_generating_polynomial(&p8);
        let d = h.derivative("x0");
        let expected: BTreeSet<Exponent> = p8
            .bases()
            .iter()
            .filter(|&&b| b & 1 == 1)
            .map(|&b| (0..8).map(|i| if i == 0 { 0 } else { b >> i & 1 }).collect())
            .collect();
        assert_eq!(d.support(), expected);
    }

    #[test]
    fn substitution() {
        let (x, y, x0) = (v("x"), v("y"), v("x0"));
        let p = &x + &y;
        let mut a = BTreeMap::new();
        a.insert("y".to_string(), SparsePoly::zero(vec![]));
        assert_eq!(p.substitute(&a), x);

        let q = &x * &y;
        let mut a = BTreeMap::new();
        a.insert("x".to_string(), &x0 + &x);
        a.insert("y".to_string(), &x0 + &y);
        let expect = &(&(&x0 * &x0) + &(&x0 * &x)) + &(&(&x0 * &y) + &(&x * &y));
        assert_eq!(q.substitute(&a), expect);
    }

    #[test]
    fn generating_polynomials() {
        let j = MConvexSet::new(vec!["1".into(), "2".into()], [vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(generating_polynomial(&j), &v("x1") + &v("x2"));
        let h = generating_polynomial(&uniform_cap_two(3));
        assert_eq!(h.coeff(&[("x1", 2), ("x2", 1)]), ratio(1, 2));
        assert_eq!(h.coeff(&[("x1", 1), ("x2", 1), ("x3", 1)]), int(1));
        let hf = basis_generating_polynomial(&catalog("fano").unwrap());
        assert_eq!(hf.num_terms(), 28);
        assert!(hf.terms().iter().all(|(e, c)| e.iter().sum::<u32>() == 3 && e.iter().all(|&k| k <= 1) && *c == int(1)));
    }

    #[test]
    fn rayleigh_examples() {
        let (x1, x2, x3) = (v("x1"), v("x2"), v("x3"));
        assert!(rayleigh_difference(&(&x1 * &x2), "x1", "x2").is_zero());
        assert!(rayleigh_difference(&(&x1 * &x1), "x1", "x2").is_zero());
        let p = &(&x1 * &x2) + &(&x3 * &x3);
        assert_eq!(rayleigh_difference(&p, "x1", "x2"), -&(&x3 * &x3));
    }

    #[test]
    fn homogenisation() {
        let x = v("x");
        let q = &c(1) + &x;
        let h1 = homogenize(&q, "x0", 1).unwrap();
        assert_eq!(h1, &v("x0") + &x);
        let h3 = homogenize(&q, "x0", 3).unwrap();
        let x0 = v("x0");
        assert_eq!(h3, &x0.pow(3) + &(&x0.pow(2) * &x));
        assert_eq!(h3.homogeneous_degree(), Some(3));
        assert_eq!(dehomogenize(&h3, "x0").unwrap(), q);
        assert_eq!(
            homogenize(&x.pow(2), "x0", 1).unwrap_err(),
            PolyError::DegreeTooSmall { degree: 2, requested: 1 }
        );
        assert_eq!(dehomogenize(&q, "x0").unwrap_err(), PolyError::NotHomogeneous);
    }

    #[test]
    fn truncation() {
        let (x0, x, y) = (v("x0"), v("x"), v("y"));
        let p = &(&(&x0 * &x0) + &(&x0 * &x)) + &(&y * &y);
        assert_eq!(truncate_divide(&p, "x0", 1), &x0 + &x);
        assert_eq!(truncate_divide(&p, "x0", 0), p);
    }

    #[test]
    fn coefficient_extraction() {
        let (a, t) = (v("a"), v("t"));
        let p = &(&a * &t.pow(2)) + &c(3);
        let cs = p.coefficients_in("t");
        assert_eq!(cs.len(), 3);
        assert_eq!(cs[0], c(3));
        assert!(cs[1].is_zero());
        assert_eq!(cs[2], a);
    }

    #[test]
    fn equality_ignores_variable_order() {
        let p = &v("x") + &v("y");
        let q = &v("y") + &v("x");
        assert_eq!(p, q);
        assert_ne!(p, v("x"));
    }
}
