//! Exact rational arithmetic and the integer combinatorics everything else
//! is assembled from.
//!
//! [`Rational`] is `num_rational::BigRational`: always reduced, positive
//! denominator, arbitrary precision.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn factorial(m: i64) -> Result<BigInt> {
    if m < 0 {
        return Err(Error::NegativeFactorial(m));
    }
    Ok((2..=m).fold(BigInt::one(), |acc, i| acc * i))
}

/// `m!! = m (m-2) (m-4) ...` with `0!! = (-1)!! = 1`.
pub fn double_factorial(m: i64) -> Result<BigInt> {
    if m < -1 {
        return Err(Error::DoubleFactorialDomain(m));
    }
    let mut acc = BigInt::one();
    let mut i = m;
    while i > 1 {
        acc *= i;
        i -= 2;
    }
    Ok(acc)
}

/// Binomial coefficient, zero outside `0 <= s <= k`.
pub fn binomial(k: u64, s: i64) -> BigInt {
    if s < 0 || s as u64 > k {
        return BigInt::zero();
    }
    let s = (s as u64).min(k - s as u64);
    let mut acc = BigInt::one();
    for i in 0..s {
        acc = acc * (k - i) / (i + 1);
    }
    acc
}

/// Rising factorial `q (q+1) ... (q+l-1)`.
pub fn pochhammer(q: &Rational, l: u64) -> Rational {
    let mut acc = Rational::one();
    let mut term = q.clone();
    for _ in 0..l {
        acc *= &term;
        term += Rational::one();
    }
    acc
}

pub fn factorial_q(m: usize) -> Rational {
    Rational::from_integer(factorial(m as i64).expect("nonnegative"))
}

pub fn double_factorial_q(m: i64) -> Result<Rational> {
    double_factorial(m).map(Rational::from_integer)
}

pub fn sign(odd: bool) -> Rational {
    if odd {
        -Rational::one()
    } else {
        Rational::one()
    }
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Accepts `p`, `p/q`, and plain decimals such as `-0.25`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| bad())?;
        let q: BigInt = q.trim().parse().map_err(|_| bad())?;
        if q.is_zero() {
            return Err(bad());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.starts_with('-');
        let whole_abs = whole.trim_start_matches(['-', '+']);
        let whole_abs = if whole_abs.is_empty() { "0" } else { whole_abs };
        let w: BigInt = whole_abs.parse().map_err(|_| bad())?;
        let f: BigInt = frac.parse().map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let mag = Rational::new(w * &scale + f, scale);
        return Ok(if negative { -mag } else { mag });
    }
    let p: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(p))
}

/// Nearest `f64`, robust for numerators and denominators beyond `f64` range.
pub fn to_f64(q: &Rational) -> f64 {
    if let (Some(n), Some(d)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if n.is_finite() && d.is_finite() {
            return n / d;
        }
    }
    let shift = q.numer().bits().max(q.denom().bits()) as i64 - 900;
    let (n, d) = if shift > 0 {
        (q.numer() >> shift as usize, q.denom() >> shift as usize)
    } else {
        (q.numer().clone(), q.denom().clone())
    };
    match (n.to_f64(), d.to_f64()) {
        (Some(n), Some(d)) => n / d,
        _ => f64::NAN,
    }
}
