//! Brute-force monogenicity: expand an axial polynomial into a polynomial in
//! `x0, ..., xn` with multivector coefficients and apply
//! `D = d/dx0 + sum_i e_i d/dxi` from the left.

use std::collections::BTreeMap;

use num_traits::One;

use crate::arith::{int, Rational};
use crate::axial::{AxialPolynomial, BivariatePoly};
use crate::clifford::{Multivector, Paravector};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct CliffordPolynomial {
    dim: usize,
    /// exponents `(d0, d1, ..., dn)` -> coefficient
    terms: BTreeMap<Vec<u32>, Multivector<Rational>>,
}

impl CliffordPolynomial {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(dim: usize, c: Multivector<Rational>) -> Self {
        let mut p = Self::zero(dim);
        p.add_term(vec![0; dim + 1], c);
        p
    }

    /// The coordinate `x_i`, `0 <= i <= dim`.
    pub fn coordinate(dim: usize, i: usize) -> Result<Self> {
        if i > dim {
            return Err(Error::DimensionMismatch(dim, i));
        }
        let mut exps = vec![0; dim + 1];
        exps[i] = 1;
        let mut p = Self::zero(dim);
        p.add_term(exps, Multivector::scalar(dim, Rational::one())?);
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> Option<&Multivector<Rational>> {
        self.terms.get(exps)
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Multivector<Rational>) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exps) {
            Some(old) => {
                let sum = &old + &c;
                if !sum.is_zero() {
                    self.terms.insert(exps, sum);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> Self {
        let mut out = Self::zero(self.dim);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.scale(s));
        }
        out
    }

    /// Product with coefficients multiplied as `self_coeff * other_coeff`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim, other.dim));
        }
        let mut out = Self::zero(self.dim);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exps = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(exps, c1.geometric_product(c2)?);
            }
        }
        Ok(out)
    }

    /// Left application of the Cauchy-Riemann operator.
    pub fn cauchy_riemann_apply(&self) -> Result<Self> {
        let mut out = Self::zero(self.dim);
        let generators: Vec<Multivector<Rational>> = (1..=self.dim)
            .map(|i| Multivector::generator(self.dim, i))
            .collect::<Result<_>>()?;
        for (exps, c) in &self.terms {
            for (i, &d) in exps.iter().enumerate() {
                if d == 0 {
                    continue;
                }
                let mut lowered = exps.clone();
                lowered[i] -= 1;
                let scaled = c.scale(&int(d as i64));
                let term = if i == 0 {
                    scaled
                } else {
                    generators[i - 1].geometric_product(&scaled)?
                };
                out.add_term(lowered, term);
            }
        }
        Ok(out)
    }

    pub fn is_monogenic(&self) -> Result<bool> {
        Ok(self.cauchy_riemann_apply()?.is_zero())
    }

    pub fn evaluate(&self, x: &Paravector<Rational>) -> Result<Multivector<Rational>> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch(self.dim, x.dim()));
        }
        let coords: Vec<&Rational> = std::iter::once(&x.scalar).chain(&x.vector).collect();
        let mut acc = Multivector::zero(self.dim)?;
        for (exps, c) in &self.terms {
            let w = exps
                .iter()
                .zip(&coords)
                .fold(Rational::one(), |m, (&e, &v)| m * num_traits::pow(v.clone(), e as usize));
            acc = &acc + &c.scale(&w);
        }
        Ok(acc)
    }
}

/// Substitutes `r^2 -> sum xi^2` in `A` and in `C = B/r`, and `r w -> sum ei xi`.
pub fn from_axial(f: &AxialPolynomial) -> Result<CliffordPolynomial> {
    let dim = f.dim();
    let c = f.omega_part().div_r()?;
    let max_r = f
        .scalar_part()
        .terms()
        .chain(c.terms())
        .map(|(&(_, j), _)| j)
        .max()
        .unwrap_or(0);
    let mut norm_sqr = CliffordPolynomial::zero(dim);
    let mut vector = CliffordPolynomial::zero(dim);
    for i in 1..=dim {
        let xi = CliffordPolynomial::coordinate(dim, i)?;
        norm_sqr = norm_sqr.add(&xi.mul(&xi)?);
        let ei = CliffordPolynomial::constant(dim, Multivector::generator(dim, i)?);
        vector = vector.add(&ei.mul(&xi)?);
    }
    let mut norm_powers = vec![CliffordPolynomial::constant(dim, Multivector::scalar(dim, Rational::one())?)];
    for _ in 0..max_r / 2 {
        let next = norm_powers.last().expect("nonempty").mul(&norm_sqr)?;
        norm_powers.push(next);
    }
    let expand = |p: &BivariatePoly| -> Result<CliffordPolynomial> {
        let mut out = CliffordPolynomial::zero(dim);
        for (&(i, j), coeff) in p.terms() {
            let mut x0 = vec![0; dim + 1];
            x0[0] = i;
            let mut mono = CliffordPolynomial::zero(dim);
            mono.add_term(x0, Multivector::scalar(dim, coeff.clone())?);
            out = out.add(&mono.mul(&norm_powers[(j / 2) as usize])?);
        }
        Ok(out)
    };
    let scalar = expand(f.scalar_part())?;
    let omega = vector.mul(&expand(&c)?)?;
    Ok(scalar.add(&omega))
}

pub fn is_monogenic_axial(f: &AxialPolynomial) -> Result<bool> {
    from_axial(f)?.is_monogenic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::appell::appell_polynomial;
    use crate::arith::ratio;
    use crate::fueter::fueter_sce_monomial;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn scalar(dim: usize, v: Rational) -> Multivector<Rational> {
        Multivector::scalar(dim, v).unwrap()
    }

    #[test]
    fn from_axial_examples() {
        let p = from_axial(&appell_polynomial(3, 1).unwrap()).unwrap();
        let mut expected = CliffordPolynomial::coordinate(3, 0).unwrap();
        for i in 1..=3 {
            let ei = CliffordPolynomial::constant(3, Multivector::generator(3, i).unwrap());
            expected = expected.add(&ei.mul(&CliffordPolynomial::coordinate(3, i).unwrap()).unwrap().scale(&ratio(1, 3)));
        }
        assert_eq!(p, expected);

        let r2 = AxialPolynomial::new(3, BivariatePoly::monomial(int(1), 0, 2), BivariatePoly::zero()).unwrap();
        let p = from_axial(&r2).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.coeff(&[0, 2, 0, 0]), Some(&scalar(3, int(1))));

        let one = from_axial(&AxialPolynomial::constant(3, int(1))).unwrap();
        assert_eq!(one, CliffordPolynomial::constant(3, scalar(3, int(1))));
    }

    #[test]
    fn cauchy_riemann_examples() {
        let x0 = CliffordPolynomial::coordinate(3, 0).unwrap();
        assert_eq!(x0.cauchy_riemann_apply().unwrap(), CliffordPolynomial::constant(3, scalar(3, int(1))));
        assert!(!x0.is_monogenic().unwrap());
        let x1 = CliffordPolynomial::coordinate(3, 1).unwrap();
        assert_eq!(
            x1.cauchy_riemann_apply().unwrap(),
            CliffordPolynomial::constant(3, Multivector::generator(3, 1).unwrap())
        );
        assert!(from_axial(&appell_polynomial(3, 1).unwrap()).unwrap().cauchy_riemann_apply().unwrap().is_zero());
        assert!(is_monogenic_axial(&appell_polynomial(5, 1).unwrap()).unwrap());
    }

    #[test]
    fn appell_polynomials_are_monogenic() {
        for k in 0..=8 {
            assert!(is_monogenic_axial(&appell_polynomial(3, k).unwrap()).unwrap(), "k={k}");
        }
    }

    #[test]
    fn oracle_agrees_with_axial_residual() {
        for n in [3, 5] {
            for k in 0..=6 {
                let naive = AxialPolynomial::new(
                    n,
                    BivariatePoly::monomial(int(1), k, 0),
                    BivariatePoly::monomial(int(1), 0, 1),
                )
                .unwrap();
                for f in [appell_polynomial(n, k as usize).unwrap(), fueter_sce_monomial(n, k as usize + n - 1, false).unwrap(), naive] {
                    assert_eq!(is_monogenic_axial(&f).unwrap(), f.is_monogenic().unwrap(), "n={n} k={k} {f}");
                }
            }
        }
    }

    #[test]
    fn expansion_matches_axial_evaluation() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let f = appell_polynomial(5, 6).unwrap();
        let g = from_axial(&f).unwrap();
        for _ in 0..50 {
            let mut q = || ratio(rng.gen_range(-9..10), rng.gen_range(1..5));
            let x = Paravector::new(q(), (0..5).map(|_| q()).collect());
            assert_eq!(g.evaluate(&x).unwrap(), f.evaluate_exact(&x).unwrap());
        }
    }

    #[test]
    fn parity_violation_rejected() {
        // omega part with an r^0 term cannot be built, so check div_r failure directly
        assert!(BivariatePoly::monomial(int(1), 1, 0).div_r().is_err());
    }
}
