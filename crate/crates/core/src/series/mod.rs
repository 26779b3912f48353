//! Real-coefficient formal power series and the two ways of lifting them
//! into the Clifford setting.
//!
//! A series `f = sum a_k z^k` has an Appell extension `sum a_k P_k^n` and a
//! Fueter-Sce extension. The two agree exactly when
//! `a_{k+n-1} (k+n-1)! = gamma k! a_k` for one constant `gamma`; the series
//! satisfying that recurrence are sums of `1F_{n-1}` functions (see
//! [`hypergeometric`]).

pub mod hypergeometric;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::appell::AppellTable;
use crate::arith::{double_factorial_q, factorial_q, fmt_rational, sign, Rational};
use crate::axial::{check_odd_dimension, AxialPolynomial};
use crate::error::{Error, Result};
use crate::fueter::fueter_sce_series;

/// Number of coefficients used when a caller gives no truncation.
pub const DEFAULT_TRUNCATION: usize = 40;

#[derive(Clone, Debug, PartialEq)]
pub enum SeriesKind {
    Exp,
    Sinh,
    Cosh,
    /// `1/(1-z)`, all coefficients one.
    Geometric,
    Monomial(usize),
    /// Finite coefficient list; zero beyond its end.
    Finite(Vec<Rational>),
    /// Member of the recurrence class given by its parameters.
    Class(ClassParameters),
}

#[derive(Clone, Debug, PartialEq)]
pub struct SeriesSpec {
    pub name: String,
    pub kind: SeriesKind,
}

impl SeriesSpec {
    pub fn exp() -> Self {
        Self::named("exp", SeriesKind::Exp)
    }

    pub fn sinh() -> Self {
        Self::named("sinh", SeriesKind::Sinh)
    }

    pub fn cosh() -> Self {
        Self::named("cosh", SeriesKind::Cosh)
    }

    pub fn geometric() -> Self {
        Self::named("geometric", SeriesKind::Geometric)
    }

    pub fn monomial(m: usize) -> Self {
        Self::named(&format!("z^{m}"), SeriesKind::Monomial(m))
    }

    pub fn finite(name: &str, coeffs: Vec<Rational>) -> Self {
        Self::named(name, SeriesKind::Finite(coeffs))
    }

    pub fn class(params: ClassParameters) -> Self {
        Self::named("class", SeriesKind::Class(params))
    }

    fn named(name: &str, kind: SeriesKind) -> Self {
        Self {
            name: name.to_string(),
            kind,
        }
    }

    /// `exp`, `sinh`, `cosh`, `geometric`, or `z^m`.
    pub fn builtin(name: &str) -> Result<Self> {
        match name {
            "exp" => Ok(Self::exp()),
            "sinh" => Ok(Self::sinh()),
            "cosh" => Ok(Self::cosh()),
            "geometric" => Ok(Self::geometric()),
            _ => name
                .strip_prefix("z^")
                .and_then(|m| m.parse().ok())
                .map(Self::monomial)
                .ok_or_else(|| Error::Parse(format!("unknown series {name:?}"))),
        }
    }

    pub fn coeff(&self, k: usize) -> Rational {
        let inv_fact = || factorial_q(k).recip();
        match &self.kind {
            SeriesKind::Exp => inv_fact(),
            SeriesKind::Sinh if k % 2 == 1 => inv_fact(),
            SeriesKind::Cosh if k % 2 == 0 => inv_fact(),
            SeriesKind::Sinh | SeriesKind::Cosh => Rational::zero(),
            SeriesKind::Geometric => Rational::one(),
            SeriesKind::Monomial(m) if *m == k => Rational::one(),
            SeriesKind::Monomial(_) => Rational::zero(),
            SeriesKind::Finite(c) => c.get(k).cloned().unwrap_or_else(Rational::zero),
            SeriesKind::Class(p) => p.coefficient(k),
        }
    }

    pub fn coefficients(&self, k_max: usize) -> Vec<Rational> {
        (0..=k_max).map(|k| self.coeff(k)).collect()
    }

    /// Radius of convergence where it is known.
    pub fn radius(&self) -> Option<f64> {
        match &self.kind {
            SeriesKind::Geometric => Some(1.0),
            SeriesKind::Class(_) | SeriesKind::Exp | SeriesKind::Sinh | SeriesKind::Cosh => {
                Some(f64::INFINITY)
            }
            SeriesKind::Monomial(_) | SeriesKind::Finite(_) => Some(f64::INFINITY),
        }
    }
}

/// Parameters of a series in the recurrence class: the dimension, the
/// constant `gamma` and the free initial values `a_0 ..= a_{n-2}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassParameters {
    pub n: usize,
    pub gamma: Rational,
    pub initial: Vec<Rational>,
}

impl ClassParameters {
    /// Missing initial values are taken as zero.
    pub fn new(n: usize, gamma: Rational, mut initial: Vec<Rational>) -> Result<Self> {
        check_odd_dimension(n)?;
        if initial.len() > n - 1 {
            return Err(Error::Parse(format!(
                "{} initial values given, at most n-1 = {} allowed",
                initial.len(),
                n - 1
            )));
        }
        initial.resize(n - 1, Rational::zero());
        Ok(Self { n, gamma, initial })
    }

    pub fn exp(n: usize) -> Result<Self> {
        Self::new(n, Rational::one(), (0..n - 1).map(factorial_q).map(|f| f.recip()).collect())
    }

    /// `a_{l(n-1)+r} = gamma^l r! a_r / (l(n-1)+r)!`.
    pub fn coefficient(&self, m: usize) -> Rational {
        let d = self.n - 1;
        let (l, r) = (m / d, m % d);
        num_traits::pow(self.gamma.clone(), l) * factorial_q(r) * &self.initial[r] / factorial_q(m)
    }

    /// Coefficient produced by the formula with `((l+1)(n-1)+r)!` in the
    /// denominator. It does not solve the recurrence; kept for reports.
    pub fn shifted_denominator_coefficient(&self, m: usize) -> Rational {
        let d = self.n - 1;
        let (l, r) = (m / d, m % d);
        num_traits::pow(self.gamma.clone(), l) * factorial_q(r) * &self.initial[r]
            / factorial_q((l + 1) * d + r)
    }
}

pub fn solve_recurrence(params: &ClassParameters, m_max: usize) -> Vec<Rational> {
    (0..=m_max).map(|m| params.coefficient(m)).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SolutionDiscrepancy {
    pub index: usize,
    pub l: usize,
    pub r: usize,
    pub solution: String,
    pub shifted: String,
    pub agree: bool,
}

/// Solution vs. the shifted-denominator formula for `l = 0, 1` and every
/// residue `r`.
pub fn shifted_formula_discrepancies(params: &ClassParameters) -> Vec<SolutionDiscrepancy> {
    let d = params.n - 1;
    (0..2)
        .flat_map(|l| (0..d).map(move |r| (l, r)))
        .map(|(l, r)| {
            let m = l * d + r;
            let a = params.coefficient(m);
            let b = params.shifted_denominator_coefficient(m);
            SolutionDiscrepancy {
                index: m,
                l,
                r,
                agree: a == b,
                solution: fmt_rational(&a),
                shifted: fmt_rational(&b),
            }
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct AppellExtension {
    pub n: usize,
    pub coefficients: Vec<(usize, Rational)>,
    pub polynomial: AxialPolynomial,
}

/// `sum_{k <= k_max} a_k P_k^n`.
pub fn appell_extension(n: usize, f: &SeriesSpec, k_max: usize) -> Result<AppellExtension> {
    let table = AppellTable::new(n, k_max)?;
    let mut polynomial = AxialPolynomial::zero(n);
    let mut coefficients = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let a = f.coeff(k);
        if !a.is_zero() {
            polynomial = polynomial.add(&table.polynomial(k)?.scale(&a))?;
        }
        coefficients.push((k, a));
    }
    Ok(AppellExtension {
        n,
        coefficients,
        polynomial,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub k: usize,
    /// `a_{k+n-1}`
    pub lhs: Rational,
    /// `gamma k!/(k+n-1)! a_k`
    pub rhs: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RecurrenceReport {
    pub n: usize,
    pub holds: bool,
    pub gamma: Option<Rational>,
    /// Every coefficient up to `checked_up_to` vanished, so nothing pins gamma.
    pub gamma_unconstrained: bool,
    pub first_violation: Option<Violation>,
    pub checked_up_to: usize,
}

/// Checks `a_{k+n-1} (k+n-1)! = gamma k! a_k` for `k + n - 1 <= k_max`.
/// The first `k` with `a_k != 0` fixes gamma; later pairs must agree.
pub fn recurrence_check(n: usize, f: &SeriesSpec, k_max: usize) -> Result<RecurrenceReport> {
    check_odd_dimension(n)?;
    let d = n - 1;
    let mut gamma: Option<Rational> = None;
    let mut first_violation = None;
    for k in 0..=k_max.saturating_sub(d) {
        if k + d > k_max {
            break;
        }
        let a_k = f.coeff(k);
        let a_next = f.coeff(k + d);
        let ratio = factorial_q(k) / factorial_q(k + d);
        if a_k.is_zero() {
            if !a_next.is_zero() {
                first_violation = Some(Violation {
                    k,
                    lhs: a_next,
                    rhs: Rational::zero(),
                });
                break;
            }
            continue;
        }
        match &gamma {
            None => gamma = Some(&a_next / (&ratio * &a_k)),
            Some(g) => {
                let rhs = g * &ratio * &a_k;
                if rhs != a_next {
                    first_violation = Some(Violation { k, lhs: a_next, rhs });
                    break;
                }
            }
        }
    }
    Ok(RecurrenceReport {
        n,
        holds: first_violation.is_none(),
        gamma_unconstrained: gamma.is_none(),
        gamma,
        first_violation,
        checked_up_to: k_max,
    })
}

/// `alpha_n[f] = (-1)^{(n-1)/2} (n-2)!! / gamma`.
pub fn alpha_from_gamma(n: usize, gamma: &Rational) -> Result<Rational> {
    check_odd_dimension(n)?;
    if gamma.is_zero() {
        return Err(Error::ZeroAlpha);
    }
    Ok(sign((n - 1) / 2 % 2 == 1) * double_factorial_q(n as i64 - 2)? / gamma)
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientComparison {
    pub k: usize,
    pub tau: Rational,
    pub eta: Rational,
}

impl CoefficientComparison {
    pub fn equal(&self) -> bool {
        self.tau == self.eta
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ComparisonReport {
    pub series: String,
    pub n: usize,
    pub recurrence: RecurrenceReport,
    pub alpha: Rational,
    pub coefficients: Vec<CoefficientComparison>,
}

impl ComparisonReport {
    pub fn all_equal(&self) -> bool {
        self.coefficients.iter().all(CoefficientComparison::equal)
    }

    pub fn first_mismatch(&self) -> Option<&CoefficientComparison> {
        self.coefficients.iter().find(|c| !c.equal())
    }

    /// What the recurrence predicts for the comparison. `gamma = 0` has no
    /// finite constant behind it and counts as a failure.
    pub fn predicted_equal(&self) -> bool {
        let r = &self.recurrence;
        r.holds && !r.gamma.as_ref().is_some_and(Zero::is_zero)
    }

    pub fn to_json(&self) -> ComparisonJson {
        ComparisonJson {
            series: self.series.clone(),
            n: self.n,
            holds: self.recurrence.holds,
            gamma: self.recurrence.gamma.as_ref().map(fmt_rational),
            alpha: fmt_rational(&self.alpha),
            first_violation: self.recurrence.first_violation.as_ref().map(|v| ViolationJson {
                k: v.k,
                lhs: fmt_rational(&v.lhs),
                rhs: fmt_rational(&v.rhs),
            }),
            all_equal: self.all_equal(),
            coefficients: self
                .coefficients
                .iter()
                .map(|c| CoefficientJson {
                    k: c.k,
                    tau: fmt_rational(&c.tau),
                    eta: fmt_rational(&c.eta),
                    equal: c.equal(),
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ViolationJson {
    pub k: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoefficientJson {
    pub k: usize,
    pub tau: String,
    pub eta: String,
    pub equal: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ComparisonJson {
    pub series: String,
    pub n: usize,
    pub holds: bool,
    pub gamma: Option<String>,
    pub alpha: String,
    pub first_violation: Option<ViolationJson>,
    pub all_equal: bool,
    pub coefficients: Vec<CoefficientJson>,
}

/// Coefficients of `tau_n[f]` and `eta_n[f]` in the Appell basis for
/// `k <= k_max`. The Fueter-Sce constant comes from the inferred gamma;
/// when no nonzero gamma is available `fallback_alpha` is used, or the
/// value belonging to `gamma = 1`.
pub fn compare_extensions(
    n: usize,
    f: &SeriesSpec,
    k_max: usize,
    fallback_alpha: Option<&Rational>,
) -> Result<ComparisonReport> {
    let recurrence = recurrence_check(n, f, k_max + n - 1)?;
    let alpha = match recurrence.gamma.as_ref().filter(|g| !g.is_zero()) {
        Some(g) => alpha_from_gamma(n, g)?,
        None => match fallback_alpha {
            Some(a) => a.clone(),
            None => alpha_from_gamma(n, &Rational::one())?,
        },
    };
    let tau = fueter_sce_series(n, f, &alpha, k_max)?;
    let coefficients = tau
        .into_iter()
        .map(|(k, tau)| CoefficientComparison {
            k,
            tau,
            eta: f.coeff(k),
        })
        .collect();
    Ok(ComparisonReport {
        series: f.name.clone(),
        n,
        recurrence,
        alpha,
        coefficients,
    })
}
