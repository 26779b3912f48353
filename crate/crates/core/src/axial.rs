//! Axial functions `A(x0, r) + omega(x) B(x0, r)` with `r = |x|`.
//!
//! Every monogenic object in this crate is held in this form. `A` only
//! carries even powers of `r` and `B` only odd powers, which is exactly the
//! condition for `A + omega B` to be a genuine polynomial in `x0, ..., xn`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{fmt_rational, int, to_f64, Rational};
use crate::clifford::{Multivector, Paravector};
use crate::error::{Error, Result};

/// Sparse polynomial in `(x0, r)`; keys are `(x0 degree, r degree)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BivariatePoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rational, x0_deg: u32, r_deg: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(x0_deg, r_deg, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), Rational)>) -> Self {
        let mut p = Self::zero();
        for ((i, j), c) in terms {
            p.add_term(i, j, c);
        }
        p
    }

    pub fn add_term(&mut self, x0_deg: u32, r_deg: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (x0_deg, r_deg);
        let entry = self.terms.entry(key).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, x0_deg: u32, r_deg: u32) -> Rational {
        self.terms
            .get(&(x0_deg, r_deg))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn all_r_even(&self) -> bool {
        self.terms.keys().all(|&(_, j)| j % 2 == 0)
    }

    pub fn all_r_odd(&self) -> bool {
        self.terms.keys().all(|&(_, j)| j % 2 == 1)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(&k, c)| (k, c * s)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &other.terms {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }

    pub fn derivative_x0(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(&(i, _), _)| i > 0)
                .map(|(&(i, j), c)| ((i - 1, j), c * int(i as i64))),
        )
    }

    pub fn derivative_r(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(&(_, j), _)| j > 0)
                .map(|(&(i, j), c)| ((i, j - 1), c * int(j as i64))),
        )
    }

    /// Exact division by `r`; every term must carry at least one power of `r`.
    pub fn div_r(&self) -> Result<Self> {
        if self.terms.keys().any(|&(_, j)| j == 0) {
            return Err(Error::Parity("polynomial is not divisible by r"));
        }
        Ok(Self::from_terms(
            self.terms.iter().map(|(&(i, j), c)| ((i, j - 1), c.clone())),
        ))
    }

    pub fn mul_r(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(i, j), c)| ((i, j + 1), c.clone())))
    }

    /// Substitute `x0 = 0`.
    pub fn at_x0_zero(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(&(i, _), _)| i == 0)
                .map(|(&k, c)| (k, c.clone())),
        )
    }

    /// Evaluate at `x0` with `r^2 = r_sqr`; only valid for even-in-r input.
    pub fn eval_even(&self, x0: &Rational, r_sqr: &Rational) -> Result<Rational> {
        if !self.all_r_even() {
            return Err(Error::Parity("eval_even on odd r-degree term"));
        }
        Ok(self.terms.iter().fold(Rational::zero(), |acc, (&(i, j), c)| {
            acc + c * num_traits::pow(x0.clone(), i as usize) * num_traits::pow(r_sqr.clone(), (j / 2) as usize)
        }))
    }

    pub fn eval_f64(&self, x0: f64, r: f64) -> f64 {
        self.terms
            .iter()
            .map(|(&(i, j), c)| to_f64(c) * x0.powi(i as i32) * r.powi(j as i32))
            .sum()
    }
}

/// `(1/r d/dr)` on an even-in-r polynomial: `r^{2p} -> 2p r^{2p-2}`.
pub fn radial_lower_even(p: &BivariatePoly) -> Result<BivariatePoly> {
    if !p.all_r_even() {
        return Err(Error::Parity("radial_lower_even needs even r-degrees"));
    }
    Ok(BivariatePoly::from_terms(
        p.terms()
            .filter(|(&(_, j), _)| j > 0)
            .map(|(&(i, j), c)| ((i, j - 2), c * int(j as i64))),
    ))
}

/// `(d/dr 1/r)` on an odd-in-r polynomial: `r^{2p+1} -> 2p r^{2p-1}`.
pub fn radial_lower_odd(p: &BivariatePoly) -> Result<BivariatePoly> {
    if !p.all_r_odd() {
        return Err(Error::Parity("radial_lower_odd needs odd r-degrees"));
    }
    Ok(BivariatePoly::from_terms(
        p.terms()
            .filter(|(&(_, j), _)| j > 1)
            .map(|(&(i, j), c)| ((i, j - 2), c * int(j as i64 - 1))),
    ))
}

pub fn check_odd_dimension(n: usize) -> Result<()> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::EvenDimension(n));
    }
    Ok(())
}

/// Applies both radial operators `(n-1)/2` times: `u` through the even
/// rule into the scalar part, `v` through the odd rule into the omega part.
pub fn apply_radial_powers(u: &BivariatePoly, v: &BivariatePoly, n: usize) -> Result<AxialPolynomial> {
    check_odd_dimension(n)?;
    let mut a = u.clone();
    let mut b = v.clone();
    for _ in 0..(n - 1) / 2 {
        a = radial_lower_even(&a)?;
        b = radial_lower_odd(&b)?;
    }
    AxialPolynomial::new(n, a, b)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxialPolynomial {
    dim: usize,
    scalar_part: BivariatePoly,
    omega_part: BivariatePoly,
}

impl AxialPolynomial {
    pub fn new(dim: usize, scalar_part: BivariatePoly, omega_part: BivariatePoly) -> Result<Self> {
        if !scalar_part.all_r_even() {
            return Err(Error::Parity("scalar part must be even in r"));
        }
        if !omega_part.all_r_odd() {
            return Err(Error::Parity("omega part must be odd in r"));
        }
        Ok(Self {
            dim,
            scalar_part,
            omega_part,
        })
    }

    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            scalar_part: BivariatePoly::zero(),
            omega_part: BivariatePoly::zero(),
        }
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        Self {
            dim,
            scalar_part: BivariatePoly::constant(c),
            omega_part: BivariatePoly::zero(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn scalar_part(&self) -> &BivariatePoly {
        &self.scalar_part
    }

    pub fn omega_part(&self) -> &BivariatePoly {
        &self.omega_part
    }

    pub fn is_zero(&self) -> bool {
        self.scalar_part.is_zero() && self.omega_part.is_zero()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(Self {
            dim: self.dim,
            scalar_part: self.scalar_part.add(&other.scalar_part),
            omega_part: self.omega_part.add(&other.omega_part),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            dim: self.dim,
            scalar_part: self.scalar_part.scale(s),
            omega_part: self.omega_part.scale(s),
        }
    }

    pub fn derivative_x0(&self) -> Self {
        Self {
            dim: self.dim,
            scalar_part: self.scalar_part.derivative_x0(),
            omega_part: self.omega_part.derivative_x0(),
        }
    }

    /// Restriction to the hyperplane `x0 = 0`.
    pub fn at_x0_zero(&self) -> Self {
        Self {
            dim: self.dim,
            scalar_part: self.scalar_part.at_x0_zero(),
            omega_part: self.omega_part.at_x0_zero(),
        }
    }

    /// Left Cauchy-Riemann operator in axial coordinates:
    /// `(d0 A - dr B - (n-1) B/r,  d0 B + dr A)`.
    pub fn vekua_residual(&self) -> Result<(BivariatePoly, BivariatePoly)> {
        let c = self.omega_part.div_r()?;
        // dr B + (n-1) B/r == r dr C + n C for B = r C
        let radial = c.derivative_r().mul_r().add(&c.scale(&int(self.dim as i64)));
        let scalar = self.scalar_part.derivative_x0().sub(&radial);
        let omega = self.omega_part.derivative_x0().add(&self.scalar_part.derivative_r());
        Ok((scalar, omega))
    }

    pub fn is_monogenic(&self) -> Result<bool> {
        let (s, w) = self.vekua_residual()?;
        Ok(s.is_zero() && w.is_zero())
    }

    /// Exact value `A + x C` with `B = r C`, using only `|x|^2`.
    pub fn evaluate_exact(&self, x: &Paravector<Rational>) -> Result<Multivector<Rational>> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch(self.dim, x.dim()));
        }
        let r_sqr = x.vector_norm_sqr();
        let a = self.scalar_part.eval_even(&x.scalar, &r_sqr)?;
        let c = self.omega_part.div_r()?.eval_even(&x.scalar, &r_sqr)?;
        let vec_part = Paravector::new(Rational::zero(), x.vector.clone()).to_multivector()?;
        vec_part
            .scale(&c)
            .checked_add(&Multivector::scalar(self.dim, a)?)
    }

    /// Floating-point value `A(x0, |x|) + (x/|x|) B(x0, |x|)`.
    pub fn evaluate_f64(&self, x: &Paravector<f64>) -> Result<Multivector<f64>> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch(self.dim, x.dim()));
        }
        let r = x.vector_norm_sqr().sqrt();
        let a = self.scalar_part.eval_f64(x.scalar, r);
        let mut out = Multivector::scalar(self.dim, a)?;
        if r > 0.0 {
            let b = self.omega_part.eval_f64(x.scalar, r);
            let direction = Paravector::new(0.0, x.vector.iter().map(|c| c / r).collect());
            out = out.checked_add(&direction.to_multivector()?.scale(&b))?;
        }
        Ok(out)
    }

    /// Canonical text form: terms ordered by x0-degree then r-degree, both
    /// descending; `w` marks the omega factor.
    pub fn to_text(&self) -> String {
        let mut terms: Vec<(u32, u32, bool, &Rational)> = self
            .scalar_part
            .terms()
            .map(|(&(i, j), c)| (i, j, false, c))
            .chain(self.omega_part.terms().map(|(&(i, j), c)| (i, j, true, c)))
            .collect();
        terms.sort_by_key(|t| std::cmp::Reverse((t.0, t.1)));
        if terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (i, j, has_omega, c)) in terms.into_iter().enumerate() {
            let negative = *c < Rational::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            if i == 1 {
                factors.push("x0".to_string());
            } else if i > 1 {
                factors.push(format!("x0^{i}"));
            }
            if j == 1 {
                factors.push("r".to_string());
            } else if j > 1 {
                factors.push(format!("r^{j}"));
            }
            if has_omega {
                factors.push("w".to_string());
            }
            if factors.is_empty() || !mag.is_one() {
                factors.insert(0, fmt_rational(&mag));
            }
            out.push_str(&factors.join(" "));
        }
        out
    }

    pub fn to_json(&self) -> AxialJson {
        let list = |p: &BivariatePoly| {
            p.terms()
                .map(|(&(x0, r), c)| TermJson {
                    x0,
                    r,
                    coeff: fmt_rational(c),
                })
                .collect()
        };
        AxialJson {
            n: self.dim,
            text: self.to_text(),
            scalar_part: list(&self.scalar_part),
            omega_part: list(&self.omega_part),
        }
    }
}

impl std::fmt::Display for AxialPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TermJson {
    pub x0: u32,
    pub r: u32,
    pub coeff: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxialJson {
    pub n: usize,
    pub text: String,
    pub scalar_part: Vec<TermJson>,
    pub omega_part: Vec<TermJson>,
}
