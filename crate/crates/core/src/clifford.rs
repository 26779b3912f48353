//! The Clifford algebra Cl(0,n): generators square to -1 and anticommute.
//!
//! Multivectors are stored densely, one coefficient per blade. A blade is a
//! bitmask over the generators, bit `i-1` standing for `e_i`, so blade
//! indices are canonically ordered by construction.

use std::fmt::Debug;
use std::ops::{Add, Neg, Sub};

use num_traits::{Num, Zero};

use crate::arith::{fmt_rational, Rational};
use crate::error::{Error, Result};

pub const MAX_DIMENSION: usize = 9;

pub trait Scalar: Num + Neg<Output = Self> + Clone + PartialEq + Debug {}
impl<T: Num + Neg<Output = T> + Clone + PartialEq + Debug> Scalar for T {}

/// Sign picked up when moving the generators of `b` past those of `a`,
/// times `(-1)` for every generator the blades share.
pub fn blade_product_sign(a: u32, b: u32) -> i8 {
    let mut swaps = 0;
    let mut shifted = a >> 1;
    while shifted != 0 {
        swaps += (shifted & b).count_ones();
        shifted >>= 1;
    }
    swaps += (a & b).count_ones();
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn blade_name(mask: u32) -> String {
    if mask == 0 {
        return String::new();
    }
    let idx: Vec<String> = (0..32)
        .filter(|i| mask & (1 << i) != 0)
        .map(|i| (i + 1).to_string())
        .collect();
    if idx.iter().all(|s| s.len() == 1) {
        format!("e{}", idx.concat())
    } else {
        format!("e{}", idx.join("_"))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Multivector<T> {
    dim: usize,
    coeffs: Vec<T>,
}

impl<T: Scalar> Multivector<T> {
    pub fn zero(dim: usize) -> Result<Self> {
        if dim > MAX_DIMENSION {
            return Err(Error::DimensionTooLarge(dim));
        }
        Ok(Self {
            dim,
            coeffs: vec![T::zero(); 1 << dim],
        })
    }

    pub fn scalar(dim: usize, value: T) -> Result<Self> {
        Self::blade(dim, 0, value)
    }

    /// `value * e_B` for the blade bitmask `mask`.
    pub fn blade(dim: usize, mask: u32, value: T) -> Result<Self> {
        let mut mv = Self::zero(dim)?;
        if mask as usize >= mv.coeffs.len() {
            return Err(Error::DimensionMismatch(dim, 32 - mask.leading_zeros() as usize));
        }
        mv.coeffs[mask as usize] = value;
        Ok(mv)
    }

    /// The generator `e_i`, `1 <= i <= dim`.
    pub fn generator(dim: usize, i: usize) -> Result<Self> {
        if i == 0 || i > dim {
            return Err(Error::DimensionMismatch(dim, i));
        }
        Self::blade(dim, 1 << (i - 1), T::one())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeff(&self, mask: u32) -> &T {
        &self.coeffs[mask as usize]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// True when only grade-0 and grade-1 blades are populated.
    pub fn is_paravector(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(m, c)| (m as u32).count_ones() <= 1 || c.is_zero())
    }

    pub fn scale(&self, s: &T) -> Self {
        Self {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect(),
        }
    }

    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        let mut out = vec![T::zero(); self.coeffs.len()];
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in other.coeffs.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let term = ca.clone() * cb.clone();
                let slot = &mut out[a ^ b];
                *slot = if blade_product_sign(a as u32, b as u32) > 0 {
                    slot.clone() + term
                } else {
                    slot.clone() - term
                };
            }
        }
        Ok(Self {
            dim: self.dim,
            coeffs: out,
        })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        Ok(Self {
            dim: self.dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Multivector<U> {
        Multivector {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Sum of `coeff blade` terms using `fmt_coeff` for the scalars;
    /// blades in increasing bitmask order.
    pub fn to_text(&self, fmt_coeff: impl Fn(&T) -> String) -> String {
        let mut out = String::new();
        for (mask, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let text = fmt_coeff(c);
            let (negative, mag) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&mag);
            if mask != 0 {
                out.push(' ');
                out.push_str(&blade_name(mask as u32));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl<T: Scalar> Add for &Multivector<T> {
    type Output = Multivector<T>;
    fn add(self, rhs: Self) -> Multivector<T> {
        self.checked_add(rhs).expect("multivector dimensions must agree")
    }
}

impl<T: Scalar> Sub for &Multivector<T> {
    type Output = Multivector<T>;
    fn sub(self, rhs: Self) -> Multivector<T> {
        self.checked_add(&-rhs).expect("multivector dimensions must agree")
    }
}

impl<T: Scalar> Neg for &Multivector<T> {
    type Output = Multivector<T>;
    fn neg(self) -> Multivector<T> {
        self.map(|c| -c.clone())
    }
}

impl Multivector<Rational> {
    pub fn to_f64(&self) -> Multivector<f64> {
        self.map(crate::arith::to_f64)
    }
}

impl std::fmt::Display for Multivector<Rational> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_text(fmt_rational))
    }
}

/// `x = x0 + x1 e1 + ... + xn en`, a point of R^{n+1}.
#[derive(Clone, Debug, PartialEq)]
pub struct Paravector<T> {
    pub scalar: T,
    pub vector: Vec<T>,
}

impl<T: Scalar> Paravector<T> {
    pub fn new(scalar: T, vector: Vec<T>) -> Self {
        Self { scalar, vector }
    }

    /// Components `(x0, x1, ..., xn)`.
    pub fn from_components(components: &[T]) -> Result<Self> {
        match components.split_first() {
            Some((x0, rest)) if !rest.is_empty() => Ok(Self::new(x0.clone(), rest.to_vec())),
            _ => Err(Error::Parse(
                "a paravector needs x0 and at least one vector component".into(),
            )),
        }
    }

    pub fn dim(&self) -> usize {
        self.vector.len()
    }

    pub fn conjugate(&self) -> Self {
        Self {
            scalar: self.scalar.clone(),
            vector: self.vector.iter().map(|c| -c.clone()).collect(),
        }
    }

    /// `|x|^2` of the vector part.
    pub fn vector_norm_sqr(&self) -> T {
        self.vector
            .iter()
            .fold(T::zero(), |acc, c| acc + c.clone() * c.clone())
    }

    pub fn is_vector_zero(&self) -> bool {
        self.vector.iter().all(Zero::is_zero)
    }

    pub fn to_multivector(&self) -> Result<Multivector<T>> {
        let mut mv = Multivector::scalar(self.dim(), self.scalar.clone())?;
        for (i, c) in self.vector.iter().enumerate() {
            mv.coeffs[1 << i] = c.clone();
        }
        Ok(mv)
    }

    /// `x^k` as a repeated geometric product.
    pub fn power(&self, k: u32) -> Result<Multivector<T>> {
        let base = self.to_multivector()?;
        let mut acc = Multivector::scalar(self.dim(), T::one())?;
        for _ in 0..k {
            acc = acc.geometric_product(&base)?;
        }
        Ok(acc)
    }
}

/// `omega = x / |x|` kept as the pair `(x, |x|^2)` so no square root is
/// ever taken.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolicDirection {
    pub vector: Vec<Rational>,
    pub norm_sqr: Rational,
}

impl SymbolicDirection {
    pub fn new(vector: &[Rational]) -> Result<Self> {
        let norm_sqr: Rational = vector.iter().map(|c| c * c).sum();
        if norm_sqr.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(Self {
            vector: vector.to_vec(),
            norm_sqr,
        })
    }

    /// `|omega|^2`, which is 1 by construction.
    pub fn unit_norm_sqr(&self) -> Rational {
        self.vector.iter().map(|c| c * c).sum::<Rational>() / &self.norm_sqr
    }

    /// `omega^2 = x x / |x|^2`, computed through the algebra.
    pub fn square(&self) -> Result<Multivector<Rational>> {
        let x = Paravector::new(Rational::zero(), self.vector.clone()).to_multivector()?;
        Ok(x.geometric_product(&x)?.scale(&self.norm_sqr.recip()))
    }

    pub fn to_f64(&self) -> Vec<f64> {
        let norm = crate::arith::to_f64(&self.norm_sqr).sqrt();
        self.vector
            .iter()
            .map(|c| crate::arith::to_f64(c) / norm)
            .collect()
    }
}

pub fn omega(vector: &[Rational]) -> Result<SymbolicDirection> {
    SymbolicDirection::new(vector)
}

pub fn omega_f64(vector: &[f64]) -> Result<Vec<f64>> {
    let norm = vector.iter().map(|c| c * c).sum::<f64>().sqrt();
    if norm == 0.0 {
        return Err(Error::ZeroVector);
    }
    Ok(vector.iter().map(|c| c / norm).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, ratio};
    use proptest::prelude::*;

    fn e(dim: usize, i: usize) -> Multivector<Rational> {
        Multivector::generator(dim, i).unwrap()
    }

    fn q(v: i64) -> Rational {
        int(v)
    }

    #[test]
    fn generators_square_to_minus_one() {
        let e1 = e(3, 1);
        assert_eq!(e1.geometric_product(&e1).unwrap(), Multivector::scalar(3, q(-1)).unwrap());
    }

    #[test]
    fn generators_anticommute() {
        let (e1, e2) = (e(3, 1), e(3, 2));
        let e12 = Multivector::blade(3, 0b011, q(1)).unwrap();
        assert_eq!(e1.geometric_product(&e2).unwrap(), e12);
        assert_eq!(e2.geometric_product(&e1).unwrap(), -&e12);
    }

    #[test]
    fn one_plus_e1_times_one_minus_e1() {
        let one = Multivector::scalar(2, q(1)).unwrap();
        let e1 = e(2, 1);
        let prod = (&one + &e1).geometric_product(&(&one - &e1)).unwrap();
        assert_eq!(prod, Multivector::scalar(2, q(2)).unwrap());
    }

    #[test]
    fn dimension_mismatch_rejected() {
        assert_eq!(
            e(2, 1).geometric_product(&e(3, 1)),
            Err(Error::DimensionMismatch(2, 3))
        );
        assert!(Multivector::<Rational>::zero(10).is_err());
    }

    #[test]
    fn conjugate_examples() {
        let one = Paravector::new(q(1), vec![q(0)]);
        assert_eq!(one.conjugate(), one);
        let e1 = Paravector::new(q(0), vec![q(1)]);
        assert_eq!(e1.conjugate().vector, vec![q(-1)]);
        let x = Paravector::new(q(3), vec![q(4)]);
        let prod = x
            .to_multivector()
            .unwrap()
            .geometric_product(&x.conjugate().to_multivector().unwrap())
            .unwrap();
        assert_eq!(prod, Multivector::scalar(1, q(25)).unwrap());
    }

    #[test]
    fn paravector_powers() {
        let e1 = Paravector::new(q(0), vec![q(1), q(0)]);
        assert_eq!(e1.power(2).unwrap(), Multivector::scalar(2, q(-1)).unwrap());
        let two_e2 = Paravector::new(q(0), vec![q(0), q(2)]);
        assert_eq!(two_e2.power(3).unwrap(), Multivector::blade(2, 0b10, q(-8)).unwrap());
        let one = Paravector::new(q(1), vec![q(0), q(0), q(0)]);
        for k in 0..6 {
            assert_eq!(one.power(k).unwrap(), Multivector::scalar(3, q(1)).unwrap());
        }
    }

    #[test]
    fn omega_examples() {
        let w = omega(&[q(3), q(0), q(0)]).unwrap();
        assert_eq!(w.to_f64(), vec![1.0, 0.0, 0.0]);
        let w = omega(&[q(1), q(1), q(0)]).unwrap();
        assert_eq!(w.norm_sqr, q(2));
        assert_eq!(w.unit_norm_sqr(), q(1));
        assert_eq!(omega(&[q(0), q(0)]), Err(Error::ZeroVector));
        assert_eq!(omega_f64(&[0.0]), Err(Error::ZeroVector));
        let wf = omega_f64(&[3.0, 4.0]).unwrap();
        assert!((wf[0] - 0.6).abs() < 1e-15 && (wf[1] - 0.8).abs() < 1e-15);
    }

    #[test]
    fn text_form() {
        let mv = &Multivector::scalar(2, ratio(1, 2)).unwrap() - &e(2, 2);
        assert_eq!(mv.to_string(), "1/2 - 1 e2");
        assert_eq!(Multivector::<Rational>::zero(2).unwrap().to_string(), "0");
    }

    fn small() -> impl Strategy<Value = Rational> {
        (-9i64..10, 1i64..5).prop_map(|(p, d)| ratio(p, d))
    }

    fn multivector(dim: usize) -> impl Strategy<Value = Multivector<Rational>> {
        proptest::collection::vec(small(), 1 << dim).prop_map(move |coeffs| Multivector { dim, coeffs })
    }

    fn paravector(dim: usize) -> impl Strategy<Value = Paravector<Rational>> {
        (small(), proptest::collection::vec(small(), dim)).prop_map(|(s, v)| Paravector::new(s, v))
    }

    proptest! {
        #[test]
        fn product_is_associative(a in multivector(3), b in multivector(3), c in multivector(3)) {
            let left = a.geometric_product(&b).unwrap().geometric_product(&c).unwrap();
            let right = a.geometric_product(&b.geometric_product(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn x_times_conjugate_is_norm(x in paravector(4)) {
            let prod = x.to_multivector().unwrap()
                .geometric_product(&x.conjugate().to_multivector().unwrap()).unwrap();
            let expected = &x.scalar * &x.scalar + x.vector_norm_sqr();
            prop_assert_eq!(prod, Multivector::scalar(4, expected).unwrap());
        }

        #[test]
        fn omega_squares_to_minus_one(x in paravector(5)) {
            prop_assume!(!x.is_vector_zero());
            let w = omega(&x.vector).unwrap();
            prop_assert_eq!(w.square().unwrap(), Multivector::scalar(5, q(-1)).unwrap());
        }

        #[test]
        fn paravector_powers_stay_in_the_plane(x in paravector(3), k in 0u32..7) {
            prop_assert!(x.power(k).unwrap().is_paravector());
        }
    }
}
