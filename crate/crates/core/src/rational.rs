//! Exact rational helpers shared by every module.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use num_rational::BigRational as Rational;

/// Parse a rational written as `p`, `-p`, `p/q` or a terminating decimal like `1.25`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let neg = int_part.starts_with('-');
        let int_digits = int_part.trim_start_matches(['-', '+']);
        let int_val: BigInt = if int_digits.is_empty() {
            BigInt::zero()
        } else {
            int_digits.parse().ok()?
        };
        let frac_val: BigInt = frac_part.parse().ok()?;
        let den = BigInt::from(10u32).pow(frac_part.len() as u32);
        let mag = Rational::new(int_val * &den + frac_val, den);
        return Some(if neg { -mag } else { mag });
    }
    let s = s.strip_prefix('+').unwrap_or(s);
    let q: Rational = s.parse().ok()?;
    Some(q)
}

/// Canonical string form: `p` for integers, `p/q` otherwise, always reduced.
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
pub fn exact_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().to_biguint()?;
    let d = q.denom().to_biguint()?;
    let rn = n.sqrt();
    let rd = d.sqrt();
    if &rn * &rn == n && &rd * &rd == d {
        Some(Rational::new(BigInt::from(rn), BigInt::from(rd)))
    } else {
        None
    }
}

fn factor_biguint(mut n: BigUint, sign: i64, out: &mut BTreeMap<u64, i64>) {
    let mut p = 2u64;
    while !n.is_one() {
        let bp = BigUint::from(p);
        if &bp * &bp > n {
            // remaining cofactor is prime
            let last = n.to_u64().expect("prime factor exceeds u64");
            *out.entry(last).or_insert(0) += sign;
            break;
        }
        while (&n % &bp).is_zero() {
            n /= &bp;
            *out.entry(p).or_insert(0) += sign;
        }
        p += if p == 2 { 1 } else { 2 };
    }
}

/// Prime-exponent map of `|q|` for nonzero `q`: `|q| = prod p^e`.
///
/// Returns `None` for zero. Zero exponents are never stored.
pub fn prime_exponents(q: &Rational) -> Option<BTreeMap<u64, i64>> {
    if q.is_zero() {
        return None;
    }
    let mut out = BTreeMap::new();
    factor_biguint(q.numer().abs().to_biguint().unwrap(), 1, &mut out);
    factor_biguint(q.denom().to_biguint().unwrap(), -1, &mut out);
    out.retain(|_, e| *e != 0);
    Some(out)
}

/// Factorials as exact rationals.
pub fn factorial(n: u32) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rational::from_integer(acc)
}
