//! Fueter-Sce transform for odd dimensions.
//!
//! A holomorphic `u + i v` is sent to
//! `alpha * ((1/r d/dr)^m u(x0, r) + omega (d/dr 1/r)^m v(x0, r))`
//! with `m = (n-1)/2`. Complex monomials are split into `u_k, v_k` and
//! pushed through the radial operators from [`crate::axial`].

use num_traits::Zero;

use crate::arith::{binomial, double_factorial_q, factorial_q, sign, Rational};
use crate::axial::{apply_radial_powers, check_odd_dimension, AxialPolynomial, BivariatePoly};
use crate::error::{Error, Result};
use crate::series::SeriesSpec;

/// `z^k = u_k(w, y) + i v_k(w, y)`; both halves keyed as `(w degree, y degree)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSplit {
    pub k: usize,
    pub u: BivariatePoly,
    pub v: BivariatePoly,
}

pub fn monomial_split(k: usize) -> MonomialSplit {
    let mut u = BivariatePoly::zero();
    let mut v = BivariatePoly::zero();
    for p in 0..=k / 2 {
        let c = Rational::from_integer(binomial(k as u64, 2 * p as i64)) * sign(p % 2 == 1);
        u.add_term((k - 2 * p) as u32, 2 * p as u32, c);
    }
    if k > 0 {
        for p in 0..=(k - 1) / 2 {
            let c = Rational::from_integer(binomial(k as u64, 2 * p as i64 + 1)) * sign(p % 2 == 1);
            v.add_term((k - 2 * p - 1) as u32, 2 * p as u32 + 1, c);
        }
    }
    MonomialSplit { k, u, v }
}

/// Image `coefficient * r^r_exponent` of `r^j` under the radial operators
/// for dimension `n` (even rule for even `j`, odd rule for odd `j`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaTerm {
    pub n: usize,
    pub j: usize,
    pub coefficient: Rational,
    pub r_exponent: u32,
    pub is_zero: bool,
}

impl BetaTerm {
    pub fn value_at_zero(&self) -> Rational {
        if self.is_zero || self.r_exponent > 0 {
            Rational::zero()
        } else {
            self.coefficient.clone()
        }
    }

    pub fn as_poly(&self) -> BivariatePoly {
        BivariatePoly::monomial(self.coefficient.clone(), 0, self.r_exponent)
    }
}

/// `beta_{n,2p+1} = r beta_{n,2p} = (2p)!!/(2p-n+1)!! r^{2p-n+2}` when
/// `2p >= n-1`, zero otherwise.
pub fn beta(n: usize, j: usize) -> Result<BetaTerm> {
    check_odd_dimension(n)?;
    let p2 = (j - j % 2) as i64;
    let n_i = n as i64;
    if p2 < n_i - 1 {
        return Ok(BetaTerm {
            n,
            j,
            coefficient: Rational::zero(),
            r_exponent: 0,
            is_zero: true,
        });
    }
    let coefficient = double_factorial_q(p2)? / double_factorial_q(p2 - n_i + 1)?;
    let r_exponent = (p2 - n_i + 1) as u32 + (j % 2) as u32;
    Ok(BetaTerm {
        n,
        j,
        coefficient,
        r_exponent,
        is_zero: false,
    })
}

/// `alpha_n[z^k] = (-1)^{(n-1)/2} (n-2)!! (k-n+1)! / k!`, the constant with
/// `tau_n[z^k](1) = 1`.
pub fn alpha_monomial(n: usize, k: usize) -> Result<Rational> {
    check_odd_dimension(n)?;
    if k + 1 < n {
        return Err(Error::VanishingMonomial { n, k });
    }
    Ok(sign((n - 1) / 2 % 2 == 1) * double_factorial_q(n as i64 - 2)? * factorial_q(k + 1 - n)
        / factorial_q(k))
}

/// `tau_n[z^k]` before scaling by any constant.
pub fn fueter_sce_raw(n: usize, k: usize) -> Result<AxialPolynomial> {
    let split = monomial_split(k);
    apply_radial_powers(&split.u, &split.v, n)
}

/// `tau_n[z^k]`; the zero polynomial for `k < n-1`. With `normalized` the
/// result is scaled by [`alpha_monomial`].
pub fn fueter_sce_monomial(n: usize, k: usize, normalized: bool) -> Result<AxialPolynomial> {
    let raw = fueter_sce_raw(n, k)?;
    if !normalized || k + 1 < n {
        return Ok(raw);
    }
    Ok(raw.scale(&alpha_monomial(n, k)?))
}

/// Fueter-Sce transform of the polynomial `sum_k coeffs[k] z^k` with one
/// shared constant. `alpha = None` picks the constant making the value at
/// `x = 1` equal to one; that fails when the raw transform vanishes there.
pub fn fueter_sce_polynomial(
    n: usize,
    coeffs: &[Rational],
    alpha: Option<&Rational>,
) -> Result<(AxialPolynomial, Rational)> {
    check_odd_dimension(n)?;
    let mut raw = AxialPolynomial::zero(n);
    for (k, a) in coeffs.iter().enumerate() {
        if !a.is_zero() {
            raw = raw.add(&fueter_sce_raw(n, k)?.scale(a))?;
        }
    }
    let alpha = match alpha {
        Some(a) => a.clone(),
        None => {
            let at_one = crate::appell::value_at_one(&raw)?;
            if at_one.is_zero() {
                return Err(Error::ZeroAlpha);
            }
            at_one.recip()
        }
    };
    Ok((raw.scale(&alpha), alpha))
}

/// Coefficients of `tau_n[f]` against the Appell basis: entry `k` is
/// `alpha a_{k+n-1} / alpha_n[z^{k+n-1}]` for `k = 0..=k_max`.
pub fn fueter_sce_series(
    n: usize,
    f: &SeriesSpec,
    alpha: &Rational,
    k_max: usize,
) -> Result<Vec<(usize, Rational)>> {
    check_odd_dimension(n)?;
    if alpha.is_zero() {
        return Err(Error::ZeroAlpha);
    }
    (0..=k_max)
        .map(|k| {
            let m = k + n - 1;
            Ok((k, alpha * f.coeff(m) / alpha_monomial(n, m)?))
        })
        .collect()
}

/// Multiple of `x^{l-n+1}` that `tau_n[z^l]` reduces to on pure vectors:
/// `(l-n)!!(n-2)!!/(l-1)!!` for even `l`, `(l-n+1)!!(n-2)!!/l!!` for odd `l`.
pub fn vector_restriction_coefficient(n: usize, l: usize) -> Result<Rational> {
    check_odd_dimension(n)?;
    if l + 1 < n {
        return Err(Error::VanishingMonomial { n, k: l });
    }
    let (n, l) = (n as i64, l as i64);
    let nn = double_factorial_q(n - 2)?;
    Ok(if l % 2 == 0 {
        double_factorial_q(l - n)? * nn / double_factorial_q(l - 1)?
    } else {
        double_factorial_q(l - n + 1)? * nn / double_factorial_q(l)?
    })
}

/// `sum_p C(k,2p) (-1)^p beta_{n,2p}(0)`: the raw transform at `x = 1`,
/// assembled from beta values instead of the operator output.
pub fn raw_value_at_one_from_beta(n: usize, k: usize) -> Result<Rational> {
    let mut acc = Rational::zero();
    for p in 0..=k / 2 {
        acc += Rational::from_integer(binomial(k as u64, 2 * p as i64))
            * sign(p % 2 == 1)
            * beta(n, 2 * p)?.value_at_zero();
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::appell::{appell_polynomial, value_at_one};
    use crate::arith::{double_factorial, int, ratio};
    use crate::clifford::Paravector;
    use proptest::prelude::*;

    fn mono(c: i64, i: u32, j: u32) -> BivariatePoly {
        BivariatePoly::monomial(int(c), i, j)
    }

    /// (w + i y)^k by repeated multiplication of (re, im) pairs.
    fn expand_power(k: usize) -> (BivariatePoly, BivariatePoly) {
        let mut re = BivariatePoly::constant(int(1));
        let mut im = BivariatePoly::zero();
        let (w, y) = (mono(1, 1, 0), mono(1, 0, 1));
        for _ in 0..k {
            let nre = re.mul(&w).sub(&im.mul(&y));
            let nim = re.mul(&y).add(&im.mul(&w));
            re = nre;
            im = nim;
        }
        (re, im)
    }

    #[test]
    fn split_examples() {
        let s = monomial_split(0);
        assert_eq!((s.u, s.v), (BivariatePoly::constant(int(1)), BivariatePoly::zero()));
        let s = monomial_split(2);
        assert_eq!(s.u, mono(1, 2, 0).sub(&mono(1, 0, 2)));
        assert_eq!(s.v, mono(2, 1, 1));
        let s = monomial_split(3);
        assert_eq!(s.u, mono(1, 3, 0).sub(&mono(3, 1, 2)));
        assert_eq!(s.v, mono(3, 2, 1).sub(&mono(1, 0, 3)));
    }

    #[test]
    fn split_matches_expansion() {
        for k in 0..25 {
            let s = monomial_split(k);
            assert_eq!((s.u, s.v), expand_power(k), "k={k}");
        }
    }

    #[test]
    fn beta_examples() {
        let b = beta(3, 2).unwrap();
        assert_eq!((b.coefficient.clone(), b.r_exponent, b.is_zero), (int(2), 0, false));
        assert_eq!(b.value_at_zero(), int(2));
        assert!(beta(3, 1).unwrap().is_zero);
        let b = beta(5, 5).unwrap();
        assert_eq!((b.coefficient, b.r_exponent), (int(8), 1));
    }

    #[test]
    fn beta_at_zero_is_kronecker() {
        for n in [3usize, 5, 7] {
            for j in 0..=40 {
                let expected = if j % 2 == 0 && j == n - 1 {
                    Rational::from_integer(double_factorial(n as i64 - 1).unwrap())
                } else {
                    Rational::zero()
                };
                assert_eq!(beta(n, j).unwrap().value_at_zero(), expected, "n={n} j={j}");
            }
        }
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(alpha_monomial(3, 2).unwrap(), ratio(-1, 2));
        assert_eq!(alpha_monomial(3, 3).unwrap(), ratio(-1, 6));
        assert_eq!(alpha_monomial(5, 4).unwrap(), ratio(1, 8));
        assert_eq!(alpha_monomial(3, 1), Err(Error::VanishingMonomial { n: 3, k: 1 }));
    }

    #[test]
    fn alpha_inverts_beta_value_at_one() {
        for n in [3, 5, 7] {
            for k in n - 1..30 {
                let raw = raw_value_at_one_from_beta(n, k).unwrap();
                assert_eq!(raw * alpha_monomial(n, k).unwrap(), int(1));
            }
        }
    }

    #[test]
    fn monomial_examples() {
        assert!(fueter_sce_monomial(3, 1, true).unwrap().is_zero());
        assert_eq!(
            fueter_sce_monomial(3, 2, true).unwrap(),
            AxialPolynomial::constant(3, int(1))
        );
        let t = fueter_sce_monomial(3, 3, true).unwrap();
        assert_eq!(t.to_text(), "x0 + 1/3 r w");
        assert_eq!(t, appell_polynomial(3, 1).unwrap());
        assert_eq!(
            fueter_sce_monomial(5, 4, false).unwrap(),
            AxialPolynomial::constant(5, int(8))
        );
        assert_eq!(fueter_sce_raw(3, 3).unwrap().to_text(), "-6 x0 - 2 r w");
    }

    #[test]
    fn normalized_monomials_are_monogenic_and_unit_at_one() {
        for n in [3, 5, 7] {
            for k in 0..=30 {
                let t = fueter_sce_monomial(n, k, true).unwrap();
                assert!(t.is_monogenic().unwrap());
                if k + 1 >= n {
                    assert_eq!(value_at_one(&t).unwrap(), int(1));
                } else {
                    assert!(t.is_zero());
                }
            }
        }
    }

    #[test]
    fn vector_restriction() {
        for n in [3usize, 5, 7] {
            for l in n - 1..=30 {
                let restricted = fueter_sce_monomial(n, l, true).unwrap().at_x0_zero();
                let c = vector_restriction_coefficient(n, l).unwrap();
                let deg = (l + 1 - n) as u32;
                // x^d = (-1)^{d/2} r^d (even) or (-1)^{(d-1)/2} r^d w (odd)
                let s = sign((deg / 2) % 2 == 1);
                let expected = if deg % 2 == 0 {
                    AxialPolynomial::new(n, BivariatePoly::monomial(c * s, 0, deg), BivariatePoly::zero())
                } else {
                    AxialPolynomial::new(n, BivariatePoly::zero(), BivariatePoly::monomial(c * s, 0, deg))
                }
                .unwrap();
                assert_eq!(restricted, expected, "n={n} l={l}");
            }
        }
    }

    #[test]
    fn shared_constant_for_sums() {
        let coeffs = [int(0), int(0), int(1), int(1)];
        let (t, alpha) = fueter_sce_polynomial(3, &coeffs, None).unwrap();
        assert_eq!(value_at_one(&t).unwrap(), int(1));
        // 1/alpha = 1/alpha_3[z^2] + 1/alpha_3[z^3] = -2 - 6
        assert_eq!(alpha, ratio(-1, 8));
        assert_eq!(fueter_sce_polynomial(3, &[int(1), int(1)], None), Err(Error::ZeroAlpha));
    }

    proptest! {
        #[test]
        fn raw_transform_is_linear(a in -5i64..6, b in -5i64..6, j in 0usize..12, k in 0usize..12) {
            let mut coeffs = vec![Rational::zero(); 12];
            coeffs[j] += int(a);
            coeffs[k] += int(b);
            let (lhs, _) = fueter_sce_polynomial(5, &coeffs, Some(&int(1))).unwrap();
            let rhs = fueter_sce_raw(5, j).unwrap().scale(&int(a))
                .add(&fueter_sce_raw(5, k).unwrap().scale(&int(b))).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn normalized_value_at_one(k in 2usize..25) {
            let t = fueter_sce_monomial(3, k, true).unwrap();
            let one = Paravector::new(int(1), vec![int(0); 3]);
            let v = t.evaluate_exact(&one).unwrap();
            prop_assert_eq!(v.coeff(0), &int(1));
        }
    }
}
