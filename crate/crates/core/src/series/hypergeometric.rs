//! Generalized hypergeometric `1F_q(a; b_1..b_q; x)` and the closed form of
//! the recurrence class.
//!
//! For parameters `(n, gamma, a_0..a_{n-2})` the series is
//!
//! ```text
//! f(z) = sum_{r=0}^{n-2} a_r z^r 1F_{n-1}(1; (r+1)/(n-1), ..., (r+n-1)/(n-1); gamma z^{n-1}/(n-1)^{n-1})
//! ```
//!
//! since `prod_s ((r+s)/(n-1))_l = (l(n-1)+r)! / (r! (n-1)^{l(n-1)})`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::ClassParameters;
use crate::arith::{factorial_q, int, pochhammer, ratio, to_f64, Rational};
use crate::error::{Error, Result};

pub const DEFAULT_MAX_TERMS: usize = 200;
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// Stopping rule for floating-point summation: stop once a term drops
/// below `tolerance / 10` (relative to the running sum when that exceeds one).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SumControl {
    pub tolerance: f64,
    pub max_terms: usize,
}

impl Default for SumControl {
    fn default() -> Self {
        Self {
            tolerance: DEFAULT_TOLERANCE,
            max_terms: DEFAULT_MAX_TERMS,
        }
    }
}

fn check_lower(lower: &[Rational]) -> Result<()> {
    for b in lower {
        if b.is_integer() && !b.is_positive() {
            return Err(Error::InvalidLowerParameter(crate::arith::fmt_rational(b)));
        }
    }
    Ok(())
}

/// `(a)_l / (prod_i (b_i)_l * l!)`.
pub fn term_weight(upper: &Rational, lower: &[Rational], l: usize) -> Result<Rational> {
    check_lower(lower)?;
    let den = lower
        .iter()
        .fold(factorial_q(l), |acc, b| acc * pochhammer(b, l as u64));
    Ok(pochhammer(upper, l as u64) / den)
}

/// Exact partial sum over `l = 0..=terms`.
pub fn hypergeometric_1f_exact(
    upper: &Rational,
    lower: &[Rational],
    argument: &Rational,
    terms: usize,
) -> Result<Rational> {
    check_lower(lower)?;
    let mut sum = Rational::zero();
    let mut term = Rational::one();
    for l in 0..=terms {
        sum += &term;
        let lq = int(l as i64);
        let num = (upper + &lq) * argument;
        let den = lower
            .iter()
            .fold(int(l as i64 + 1), |acc, b| acc * (b + &lq));
        term = term * num / den;
    }
    Ok(sum)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SeriesValue {
    pub value: f64,
    pub terms: usize,
}

pub fn hypergeometric_1f(
    upper: &Rational,
    lower: &[Rational],
    argument: f64,
    control: SumControl,
) -> Result<SeriesValue> {
    check_lower(lower)?;
    let a = to_f64(upper);
    let bs: Vec<f64> = lower.iter().map(to_f64).collect();
    let mut sum = 0.0;
    let mut term = 1.0;
    for l in 0..control.max_terms {
        sum += term;
        let lf = l as f64;
        term *= (a + lf) * argument / (bs.iter().map(|b| b + lf).product::<f64>() * (lf + 1.0));
        if term.abs() <= control.tolerance / 10.0 * sum.abs().max(1.0) {
            return Ok(SeriesValue {
                value: sum + term,
                terms: l + 2,
            });
        }
    }
    Err(Error::ToleranceNotReached {
        tolerance: control.tolerance,
        max_terms: control.max_terms,
    })
}

/// Lower parameters `(r+1)/(n-1), ..., (r+n-1)/(n-1)` for residue `r`.
pub fn class_lower_parameters(n: usize, r: usize) -> Vec<Rational> {
    let d = (n - 1) as i64;
    (1..=d).map(|s| ratio(r as i64 + s, d)).collect()
}

/// Scale in the hypergeometric argument, `gamma / (n-1)^{n-1}`.
pub fn argument_scale(params: &ClassParameters) -> Rational {
    let d = params.n - 1;
    &params.gamma / Rational::from_integer(num_traits::pow(BigInt::from(d), d))
}

/// Taylor coefficients `a_0..=a_m_max` read off the hypergeometric terms,
/// via Pochhammer products rather than factorials.
pub fn closed_form_series(params: &ClassParameters, m_max: usize) -> Result<Vec<Rational>> {
    let d = params.n - 1;
    let scale = argument_scale(params);
    let one = Rational::one();
    (0..=m_max)
        .map(|m| {
            let (l, r) = m.div_rem(&d);
            let w = term_weight(&one, &class_lower_parameters(params.n, r), l)?;
            Ok(&params.initial[r] * w * num_traits::pow(scale.clone(), l))
        })
        .collect()
}

/// `f(z)` summed exactly with `terms` hypergeometric terms per residue.
pub fn closed_form_exact(params: &ClassParameters, z: &Rational, terms: usize) -> Result<Rational> {
    let d = params.n - 1;
    let arg = argument_scale(params) * num_traits::pow(z.clone(), d);
    let mut acc = Rational::zero();
    for r in 0..d {
        if params.initial[r].is_zero() {
            continue;
        }
        let f = hypergeometric_1f_exact(&Rational::one(), &class_lower_parameters(params.n, r), &arg, terms)?;
        acc += &params.initial[r] * num_traits::pow(z.clone(), r) * f;
    }
    Ok(acc)
}

pub fn closed_form_eval(params: &ClassParameters, z: f64, control: SumControl) -> Result<f64> {
    let d = params.n - 1;
    let arg = to_f64(&argument_scale(params)) * z.powi(d as i32);
    let mut acc = 0.0;
    for r in 0..d {
        if params.initial[r].is_zero() {
            continue;
        }
        let f = hypergeometric_1f(&Rational::one(), &class_lower_parameters(params.n, r), arg, control)?;
        acc += to_f64(&params.initial[r]) * z.powi(r as i32) * f.value;
    }
    Ok(acc)
}

/// `sum_k z^k / k!` term by term.
pub fn exp_by_summation(z: f64, control: SumControl) -> Result<f64> {
    let mut sum = 0.0;
    let mut term = 1.0;
    for k in 0..control.max_terms {
        sum += term;
        term *= z / (k as f64 + 1.0);
        if term.abs() <= control.tolerance / 10.0 * sum.abs().max(1.0) {
            return Ok(sum + term);
        }
    }
    Err(Error::ToleranceNotReached {
        tolerance: control.tolerance,
        max_terms: control.max_terms,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExpDecompositionReport {
    pub n: usize,
    pub z: f64,
    pub closed_form: f64,
    pub direct: f64,
    pub error: f64,
    pub tolerance: f64,
    pub passed: bool,
}

/// `exp(z) = sum_r z^r/r! 1F_{n-1}(1; (r+1)/(n-1), ..; z^{n-1}/(n-1)^{n-1})`
/// against the plain exponential series.
pub fn exp_decomposition_check(n: usize, z: f64, control: SumControl) -> Result<ExpDecompositionReport> {
    let params = ClassParameters::exp(n)?;
    let closed_form = closed_form_eval(&params, z, control)?;
    let direct = exp_by_summation(z, control)?;
    let error = (closed_form - direct).abs() / direct.abs().max(1.0);
    Ok(ExpDecompositionReport {
        n,
        z,
        closed_form,
        direct,
        error,
        tolerance: control.tolerance,
        passed: error <= control.tolerance,
    })
}
