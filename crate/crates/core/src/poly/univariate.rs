//! Dense univariate polynomials and Sturm root counting.

use num_traits::{One, Signed, Zero};

use super::{PolyError, Result};
use crate::rational::{fmt_rational, Rational};

/// Coefficients lowest degree first, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnivariatePoly {
    coeffs: Vec<Rational>,
}

impl UnivariatePoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UnivariatePoly { coeffs }
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| crate::rational::int(x)).collect())
    }

    /// `prod (t - r)` over the given roots.
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots.iter().fold(Self::new(vec![Rational::one()]), |acc, r| {
            acc.mul(&Self::new(vec![-r.clone(), Rational::one()]))
        })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(k.into()))
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new(
            (0..n)
                .map(|k| {
                    let a = self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero);
                    let b = other.coeffs.get(k).cloned().unwrap_or_else(Rational::zero);
                    a + b
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new(Vec::new());
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::new(Vec::new()), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let f = &rem[k + dd] / &lead;
            if f.is_zero() {
                continue;
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &f * c;
            }
            quot[k] = f;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => self.clone(),
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p')`: same distinct roots, all simple.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0
    }

    /// Sturm chain `p, p', -rem(p, p'), ...`.
    pub fn sturm_chain(&self) -> Vec<Self> {
        let mut chain = vec![self.clone()];
        if self.degree().unwrap_or(0) == 0 {
            return chain;
        }
        chain.push(self.derivative());
        loop {
            let n = chain.len();
            let r = chain[n - 2].div_rem(&chain[n - 1]).1;
            if r.is_zero() {
                break;
            }
            chain.push(r.scale(&-Rational::one()));
        }
        chain
    }

    pub fn to_text(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = fmt_rational(&c.abs());
            let sign = if c.is_negative() { "-" } else { "+" };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            match k {
                0 => out.push_str(&mag),
                1 => out.push_str(&format!("{mag}*{var}")),
                _ => out.push_str(&format!("{mag}*{var}^{k}")),
            }
        }
        out
    }
}

fn sign_of(q: &Rational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// `None` means `-inf` when `at_neg_inf`, `+inf` otherwise.
fn variations_at(chain: &[UnivariatePoly], x: Option<&Rational>, at_neg_inf: bool) -> usize {
    variations(chain.iter().map(|p| match x {
        Some(t) => sign_of(&p.eval(t)),
        None => {
            let lead = sign_of(p.leading().unwrap());
            let odd = p.degree().unwrap() % 2 == 1;
            if at_neg_inf && odd {
                -lead
            } else {
                lead
            }
        }
    }))
}

/// Number of distinct real roots in `(lo, hi]`; `None` bounds are infinite.
pub fn count_roots_in(p: &UnivariatePoly, lo: Option<&Rational>, hi: Option<&Rational>) -> Result<usize> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if let (Some(a), Some(b)) = (lo, hi) {
        if a >= b {
            return Ok(0);
        }
    }
    let chain = p.squarefree_part().sturm_chain();
    let va = variations_at(&chain, lo, true);
    let vb = variations_at(&chain, hi, false);
    Ok(va.saturating_sub(vb))
}

/// True iff every complex root of `p` is real. Nonzero constants count as real-rooted.
pub fn sturm_real_rooted(p: &UnivariatePoly) -> Result<bool> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let sf = p.squarefree_part();
    let d = sf.degree().unwrap();
    Ok(count_roots_in(&sf, None, None)? == d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn division_and_gcd() {
        let p = UnivariatePoly::from_roots(&[int(1), int(2), int(2)]);
        let q = UnivariatePoly::from_roots(&[int(2), int(3)]);
        assert_eq!(p.gcd(&q), UnivariatePoly::from_roots(&[int(2)]));
        let (quo, rem) = p.div_rem(&q);
        assert_eq!(quo.mul(&q).add(&rem), p);
        assert_eq!(p.squarefree_part().monic(), UnivariatePoly::from_roots(&[int(1), int(2)]));
    }

    #[test]
    fn root_counts() {
        let p = UnivariatePoly::from_roots(&[int(-1), ratio(1, 2), int(3)]);
        assert_eq!(count_roots_in(&p, None, None).unwrap(), 3);
        assert_eq!(count_roots_in(&p, Some(&int(0)), None).unwrap(), 2);
        assert_eq!(count_roots_in(&p, Some(&int(-1)), Some(&int(3))).unwrap(), 2);
        assert_eq!(count_roots_in(&p, Some(&int(-2)), Some(&int(-1))).unwrap(), 1);
        assert!(sturm_real_rooted(&p).unwrap());
    }

    #[test]
    fn non_real_rooted() {
        let p = UnivariatePoly::from_ints(&[1, 0, 1]);
        assert!(!sturm_real_rooted(&p).unwrap());
        let q = UnivariatePoly::from_ints(&[0, 1]).mul(&UnivariatePoly::from_ints(&[1, 0, 1]));
        assert!(!sturm_real_rooted(&q).unwrap());
        assert!(sturm_real_rooted(&UnivariatePoly::from_ints(&[5])).unwrap());
        assert_eq!(sturm_real_rooted(&UnivariatePoly::new(vec![])), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn text() {
        let p = UnivariatePoly::from_ints(&[0, 1, 25, -1]);
        assert_eq!(p.to_text("t"), "-1*t^3 + 25*t^2 + 1*t");
    }
}
