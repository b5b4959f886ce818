//! Univariate polynomials over Q(w), just enough for the one-dimensional
//! ideal search: gcds and exact roots of low-degree polynomials.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{sqrt_in_field, EisScalar};

/// Coefficients ascending by degree; no trailing zeros stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UPoly {
    coeffs: Vec<EisScalar>,
}

/// Outcome of exact root extraction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Roots {
    /// the zero polynomial: everything is a root
    All,
    /// the complete list of roots lying in the field
    Known(Vec<EisScalar>),
    /// a factor of degree >= 2 whose roots (if any) lie outside the field
    OutsideField(UPoly),
}

impl UPoly {
    pub fn new(mut coeffs: Vec<EisScalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly::default()
    }

    pub fn constant(c: EisScalar) -> Self {
        UPoly::new(vec![c])
    }

    /// `c0 + c1 t + c2 t^2 + ...`
    pub fn from_coeffs(coeffs: &[EisScalar]) -> Self {
        UPoly::new(coeffs.to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> EisScalar {
        self.coeffs.get(k).cloned().unwrap_or_else(EisScalar::zero)
    }

    pub fn leading(&self) -> Option<&EisScalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, t: &EisScalar) -> EisScalar {
        let mut acc = EisScalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * t) + c;
        }
        acc
    }

    pub fn add(&self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect();
        UPoly::new(coeffs)
    }

    pub fn sub(&self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect();
        UPoly::new(coeffs)
    }

    pub fn scale(&self, k: &EisScalar) -> UPoly {
        UPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn mul(&self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero();
        }
        let mut coeffs = vec![EisScalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        UPoly::new(coeffs)
    }

    /// Leading coefficient scaled to one.
    pub fn monic(&self) -> Result<UPoly> {
        match self.leading() {
            None => Ok(UPoly::zero()),
            Some(lead) => {
                let inv = lead.inv()?;
                Ok(self.scale(&inv))
            }
        }
    }

    /// Euclidean division: (quotient, remainder) with deg r < deg rhs.
    pub fn divmod(&self, rhs: &UPoly) -> Result<(UPoly, UPoly)> {
        let Some(dr) = rhs.degree() else {
            return Err(Error::DivisionByZero);
        };
        let lead_inv = rhs.leading().unwrap().inv()?;
        let mut rem = self.clone();
        let mut quot = vec![EisScalar::zero(); self.coeffs.len().saturating_sub(dr)];
        while let Some(dn) = rem.degree() {
            if dn < dr {
                break;
            }
            let factor = rem.leading().unwrap() * &lead_inv;
            let shift = dn - dr;
            quot[shift] = factor.clone();
            let mut sub = vec![EisScalar::zero(); shift];
            sub.extend(rhs.coeffs.iter().map(|c| c * &factor));
            rem = rem.sub(&UPoly::new(sub));
        }
        Ok((UPoly::new(quot), rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, rhs: &UPoly) -> Result<UPoly> {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b)?;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Exact roots. Degrees 0..2 are decided completely (square roots in the
    /// field are decidable); a higher-degree polynomial that keeps no linear
    /// factor visible is reported as lying outside the supported range.
    pub fn roots(&self) -> Result<Roots> {
        match self.degree() {
            None => Ok(Roots::All),
            Some(0) => Ok(Roots::Known(vec![])),
            Some(1) => {
                let root = -&(&self.coeff(0) * &self.coeff(1).inv()?);
                Ok(Roots::Known(vec![root]))
            }
            Some(2) => {
                let a = self.coeff(2);
                let b = self.coeff(1);
                let c = self.coeff(0);
                let disc = &(&b * &b) - &(&(&EisScalar::from_int(4) * &a) * &c);
                match sqrt_in_field(&disc) {
                    None => Ok(Roots::OutsideField(self.clone())),
                    Some(sd) => {
                        let half_inv = (&EisScalar::from_int(2) * &a).inv()?;
                        let r1 = &(&-b.clone() + &sd) * &half_inv;
                        let r2 = &(&-b.clone() - &sd) * &half_inv;
                        let mut out = vec![r1.clone()];
                        if r2 != r1 {
                            out.push(r2);
                        }
                        Ok(Roots::Known(out))
                    }
                }
            }
            Some(_) => Ok(Roots::OutsideField(self.clone())),
        }
    }
}
