//! The Appell sequence `P_k^n` in axial form.
//!
//! Only the alternating sums `c_n^k` of the underlying coefficients enter
//! the construction. Together with the Appell property they fix
//! `P_k^n(x0 + x) = sum_s C(k,s) c_n^s x0^{k-s} x^s`, and every defining
//! property is then re-checked as an exact identity.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{binomial, double_factorial_q, fmt_rational, int, Rational};
use crate::axial::{check_odd_dimension, AxialPolynomial, BivariatePoly};
use crate::clifford::Paravector;
use crate::error::Result;

/// `c_n^k`: `(k-1)!!(n-2)!!/(n+k-2)!!` for even `k`, `k!!(n-2)!!/(n+k-1)!!` for odd `k`.
pub fn c_coeff(n: usize, k: usize) -> Result<Rational> {
    check_odd_dimension(n)?;
    let (n, k) = (n as i64, k as i64);
    let num = if k % 2 == 0 { k - 1 } else { k };
    let den = if k % 2 == 0 { n + k - 2 } else { n + k - 1 };
    Ok(double_factorial_q(num)? * double_factorial_q(n - 2)? / double_factorial_q(den)?)
}

/// Table of `c_n^0 ..= c_n^K` for one dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct AppellTable {
    n: usize,
    c: Vec<Rational>,
}

impl AppellTable {
    pub fn new(n: usize, k_max: usize) -> Result<Self> {
        let c = (0..=k_max).map(|k| c_coeff(n, k)).collect::<Result<_>>()?;
        Ok(Self { n, c })
    }

    /// Same table with `c_n^k` negated. Used to check that the verification
    /// suites notice a corrupted coefficient.
    pub fn with_flipped(mut self, k: usize) -> Self {
        if let Some(c) = self.c.get_mut(k) {
            *c = -c.clone();
        }
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k_max(&self) -> usize {
        self.c.len() - 1
    }

    pub fn c(&self, k: usize) -> &Rational {
        &self.c[k]
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.c
    }

    /// `P_k^n` built from this table; `k` must not exceed `k_max`.
    pub fn polynomial(&self, k: usize) -> Result<AxialPolynomial> {
        assert!(k <= self.k_max(), "k = {k} beyond table size {}", self.k_max());
        let mut scalar = BivariatePoly::zero();
        let mut omega = BivariatePoly::zero();
        for s in 0..=k {
            let weight = Rational::from_integer(binomial(k as u64, s as i64)) * &self.c[s];
            // x^{2p} = (-1)^p r^{2p},  x^{2p+1} = (-1)^p r^{2p+1} w
            let p = s / 2;
            let signed = if p % 2 == 0 { weight } else { -weight };
            let x0_deg = (k - s) as u32;
            if s % 2 == 0 {
                scalar.add_term(x0_deg, s as u32, signed);
            } else {
                omega.add_term(x0_deg, s as u32, signed);
            }
        }
        AxialPolynomial::new(self.n, scalar, omega)
    }

    pub fn rows(&self) -> Vec<CoefficientRow> {
        self.c
            .iter()
            .enumerate()
            .map(|(k, c)| CoefficientRow {
                k,
                c: fmt_rational(c),
            })
            .collect()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CoefficientRow {
    pub k: usize,
    pub c: String,
}

pub fn appell_polynomial(n: usize, k: usize) -> Result<AxialPolynomial> {
    AppellTable::new(n, k)?.polynomial(k)
}

/// First `k` at which `d/dx0 P_k != k P_{k-1}`, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AppellPropertyReport {
    pub n: usize,
    pub checked_up_to: usize,
    pub first_failure: Option<usize>,
}

impl AppellPropertyReport {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

pub fn appell_property_check(n: usize, k_max: usize) -> Result<AppellPropertyReport> {
    appell_property_check_with(&AppellTable::new(n, k_max)?)
}

pub fn appell_property_check_with(table: &AppellTable) -> Result<AppellPropertyReport> {
    let mut prev = table.polynomial(0)?;
    for k in 1..=table.k_max() {
        let next = table.polynomial(k)?;
        if next.derivative_x0() != prev.scale(&int(k as i64)) {
            return Ok(AppellPropertyReport {
                n: table.n(),
                checked_up_to: k,
                first_failure: Some(k),
            });
        }
        prev = next;
    }
    Ok(AppellPropertyReport {
        n: table.n(),
        checked_up_to: table.k_max(),
        first_failure: None,
    })
}

/// `P(1)`, exact.
pub fn value_at_one(p: &AxialPolynomial) -> Result<Rational> {
    let one = Paravector::new(Rational::one(), vec![Rational::zero(); p.dim()]);
    let v = p.evaluate_exact(&one)?;
    debug_assert!(v.coeffs()[1..].iter().all(Zero::is_zero));
    Ok(v.coeff(0).clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;
    use crate::clifford::Multivector;
    use crate::error::Error;
    use proptest::prelude::*;

    #[test]
    fn c_coeff_examples() {
        assert_eq!(c_coeff(3, 0).unwrap(), int(1));
        assert_eq!(c_coeff(3, 1).unwrap(), ratio(1, 3));
        assert_eq!(c_coeff(3, 3).unwrap(), ratio(1, 5));
        assert_eq!(c_coeff(5, 1).unwrap(), ratio(1, 5));
        assert_eq!(c_coeff(4, 1), Err(Error::EvenDimension(4)));
    }

    #[test]
    fn c_table_invariants() {
        for n in [3, 5, 7, 9] {
            let t = AppellTable::new(n, 40).unwrap();
            assert_eq!(t.c(0), &int(1));
            for k in 0..=40 {
                assert!(t.c(k) > &Rational::zero() && t.c(k) <= &int(1));
            }
            for m in 1..=20 {
                assert_eq!(t.c(2 * m), t.c(2 * m - 1));
            }
        }
    }

    #[test]
    fn low_degree_polynomials() {
        assert_eq!(appell_polynomial(3, 0).unwrap(), AxialPolynomial::constant(3, int(1)));
        assert_eq!(appell_polynomial(3, 1).unwrap().to_text(), "x0 + 1/3 r w");
        let p2 = appell_polynomial(3, 2).unwrap();
        assert_eq!(p2.to_text(), "x0^2 + 2/3 x0 r w - 1/3 r^2");
        assert_eq!(p2.derivative_x0(), appell_polynomial(3, 1).unwrap().scale(&int(2)));
        assert!(appell_polynomial(2, 1).is_err());
    }

    #[test]
    fn property_check_passes() {
        assert!(appell_property_check(3, 10).unwrap().passed());
        assert!(appell_property_check(5, 10).unwrap().passed());
        let r = appell_property_check(3, 1).unwrap();
        assert_eq!(r.checked_up_to, 1);
        assert!(r.passed());
    }

    #[test]
    fn flipped_table_breaks_normalization_and_monogenicity() {
        let t = AppellTable::new(3, 4).unwrap().with_flipped(0);
        assert_eq!(value_at_one(&t.polynomial(3).unwrap()).unwrap(), int(-1));
        assert!(!t.polynomial(1).unwrap().is_monogenic().unwrap());
        let t = AppellTable::new(3, 4).unwrap().with_flipped(2);
        assert!(!t.polynomial(2).unwrap().is_monogenic().unwrap());
    }

    #[test]
    fn normalization_and_monogenicity() {
        for n in [3, 5, 7] {
            let t = AppellTable::new(n, 30).unwrap();
            for k in 0..=30 {
                let p = t.polynomial(k).unwrap();
                assert_eq!(value_at_one(&p).unwrap(), int(1), "n={n} k={k}");
                assert!(p.is_monogenic().unwrap(), "n={n} k={k}");
            }
        }
    }

    fn vector() -> impl Strategy<Value = Vec<Rational>> {
        proptest::collection::vec((-6i64..7, 1i64..4).prop_map(|(p, q)| ratio(p, q)), 5)
    }

    proptest! {
        #[test]
        fn restriction_to_vectors(xs in vector(), k in 0usize..12) {
            let p = appell_polynomial(5, k).unwrap();
            let x = Paravector::new(Rational::zero(), xs);
            let value = p.evaluate_exact(&x).unwrap();
            let expected: Multivector<Rational> = x.power(k as u32).unwrap().scale(&c_coeff(5, k).unwrap());
            prop_assert_eq!(value, expected);
        }
    }
}
