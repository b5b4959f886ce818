//! Exact scalars: arbitrary-precision rationals and the quadratic field Q(w),
//! where w denotes a primitive cube root of unity.
//!
//! Every element of Q(w) is stored on the basis {1, w} as `a + b*w` with
//! rational `a`, `b`. The defining relations are `w^3 = 1` and
//! `1 + w + w^2 = 0`, so `w^2 = -1 - w`. All arithmetic is exact; there is
//! no floating-point fallback anywhere in this crate.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Arbitrary-precision integer.
pub type Int = BigInt;

/// Arbitrary-precision rational. Kept in lowest terms with a positive
/// denominator by the underlying implementation.
pub type Rational = BigRational;

/// Builds a rational from a numerator/denominator pair.
///
/// Panics if `den == 0`; meant for literals in tests and table fills.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Scalar bound for the generic exact containers in this crate.
///
/// Abstracts the two fields actually used, `Rational` and [`EisScalar`].
/// Division is only ever performed against pivots already checked nonzero.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + fmt::Display
        + Zero
        + One
        + Neg<Output = Self>
        + Sub<Output = Self>
        + Div<Output = Self>
{
}

/// An element `a + b*w` of Q(w).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EisScalar {
    a: Rational,
    b: Rational,
}

impl EisScalar {
    pub fn new(a: Rational, b: Rational) -> Self {
        EisScalar { a, b }
    }

    /// The element `a + b*w` with integer components.
    pub fn from_ints(a: i64, b: i64) -> Self {
        EisScalar::new(rat(a, 1), rat(b, 1))
    }

    pub fn from_int(n: i64) -> Self {
        EisScalar::from_ints(n, 0)
    }

    pub fn from_rational(a: Rational) -> Self {
        EisScalar::new(a, Rational::zero())
    }

    /// The primitive cube root of unity `w`.
    pub fn omega() -> Self {
        EisScalar::from_ints(0, 1)
    }

    /// `w^2 = -1 - w`, the other primitive cube root.
    pub fn omega_bar() -> Self {
        EisScalar::from_ints(-1, -1)
    }

    /// Coefficient of 1.
    pub fn a(&self) -> &Rational {
        &self.a
    }

    /// Coefficient of `w`.
    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The field automorphism swapping `w` and `w^2`:
    /// `a + b*w  |->  (a - b) - b*w`.
    pub fn reflect(&self) -> Self {
        EisScalar::new(&self.a - &self.b, -self.b.clone())
    }

    /// `x * reflect(x) = a^2 - a*b + b^2`, a nonnegative rational that
    /// vanishes only at zero.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    /// Multiplicative inverse, or an error at zero.
    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        let r = self.reflect();
        Ok(EisScalar::new(r.a / &n, r.b / &n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, Error> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power. Negative exponents invert; errors only at `0^-k`.
    pub fn powi(&self, exp: i32) -> Result<Self, Error> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut out = EisScalar::one();
        for _ in 0..exp.unsigned_abs() {
            out = &out * &base;
        }
        Ok(out)
    }
}

impl Zero for EisScalar {
    fn zero() -> Self {
        EisScalar::new(Rational::zero(), Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for EisScalar {
    fn one() -> Self {
        EisScalar::from_ints(1, 0)
    }
}

impl Add for EisScalar {
    type Output = EisScalar;
    fn add(self, rhs: EisScalar) -> EisScalar {
        EisScalar::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl<'a> Add<&'a EisScalar> for &EisScalar {
    type Output = EisScalar;
    fn add(self, rhs: &'a EisScalar) -> EisScalar {
        EisScalar::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl AddAssign<&EisScalar> for EisScalar {
    fn add_assign(&mut self, rhs: &EisScalar) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl Sub for EisScalar {
    type Output = EisScalar;
    fn sub(self, rhs: EisScalar) -> EisScalar {
        EisScalar::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl<'a> Sub<&'a EisScalar> for &EisScalar {
    type Output = EisScalar;
    fn sub(self, rhs: &'a EisScalar) -> EisScalar {
        EisScalar::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl SubAssign<&EisScalar> for EisScalar {
    fn sub_assign(&mut self, rhs: &EisScalar) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl Neg for EisScalar {
    type Output = EisScalar;
    fn neg(self) -> EisScalar {
        EisScalar::new(-self.a, -self.b)
    }
}

impl Neg for &EisScalar {
    type Output = EisScalar;
    fn neg(self) -> EisScalar {
        EisScalar::new(-self.a.clone(), -self.b.clone())
    }
}

// (a + b*w)(c + d*w) = (ac - bd) + (ad + bc - bd)*w, using w^2 = -1 - w.
impl<'a> Mul<&'a EisScalar> for &EisScalar {
    type Output = EisScalar;
    fn mul(self, rhs: &'a EisScalar) -> EisScalar {
        let bd = &self.b * &rhs.b;
        let real = &self.a * &rhs.a - &bd;
        let omega = &self.a * &rhs.b + &self.b * &rhs.a - bd;
        EisScalar::new(real, omega)
    }
}

impl Mul for EisScalar {
    type Output = EisScalar;
    fn mul(self, rhs: EisScalar) -> EisScalar {
        (&self) * (&rhs)
    }
}

impl MulAssign<&EisScalar> for EisScalar {
    fn mul_assign(&mut self, rhs: &EisScalar) {
        *self = (&*self) * rhs;
    }
}

/// Panics when dividing by zero; use [`EisScalar::checked_div`] where the
/// divisor is not already known nonzero.
impl Div for EisScalar {
    type Output = EisScalar;
    fn div(self, rhs: EisScalar) -> EisScalar {
        self.checked_div(&rhs).expect("division by zero in Q(w)")
    }
}

impl<'a> Div<&'a EisScalar> for &EisScalar {
    type Output = EisScalar;
    fn div(self, rhs: &'a EisScalar) -> EisScalar {
        self.checked_div(rhs).expect("division by zero in Q(w)")
    }
}

impl From<i64> for EisScalar {
    fn from(n: i64) -> Self {
        EisScalar::from_int(n)
    }
}

impl From<Rational> for EisScalar {
    fn from(a: Rational) -> Self {
        EisScalar::from_rational(a)
    }
}

impl fmt::Display for EisScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut lead = true;
        if !self.a.is_zero() {
            write!(f, "{}", self.a)?;
            lead = false;
        }
        if !self.b.is_zero() {
            if !lead && self.b.is_positive() {
                write!(f, "+")?;
            }
            if self.b.is_one() {
                write!(f, "w")?;
            } else if (-self.b.clone()).is_one() {
                write!(f, "-w")?;
            } else {
                write!(f, "{}*w", self.b)?;
            }
        }
        Ok(())
    }
}

// Debug goes through Display so assertion output stays readable.
impl fmt::Debug for EisScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Exact square root of a rational, if one exists.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_zero() {
        return Some(Rational::zero());
    }
    if r.is_negative() {
        return None;
    }
    let num = r.numer();
    let den = r.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(Rational::new(sn, sd))
    } else {
        None
    }
}

/// A square root of `x` inside Q(w), when the field contains one.
///
/// Writing `y = u + v*w`, the equation `y^2 = x` becomes the rational system
/// `u^2 - v^2 = a`, `2uv - v^2 = b`. The solver runs through the finitely
/// many rational branches of that system, so a `None` answer is a proof that
/// no root exists in the field (for example `sqrt(2)` and `sqrt(-1)` are both
/// absent, while `sqrt(-3) = 1 + 2w`).
pub fn sqrt_in_field(x: &EisScalar) -> Option<EisScalar> {
    if x.is_zero() {
        return Some(EisScalar::zero());
    }
    let a = x.a();
    let b = x.b();
    if b.is_zero() {
        // v = 0 branch: u^2 = a.
        if let Some(u) = rational_sqrt(a) {
            return Some(EisScalar::new(u, Rational::zero()));
        }
        // v != 0 forces u = v/2 and (v/2)^2 - v^2 = a, i.e. v^2 = -4a/3.
        let v2 = rat(-4, 3) * a;
        if let Some(v) = rational_sqrt(&v2) {
            let u = &v / rat(2, 1);
            let y = EisScalar::new(u, v);
            debug_assert_eq!(&y * &y, *x);
            return Some(y);
        }
        return None;
    }
    // b != 0 forces v != 0; with t = u/v the system collapses to
    // b t^2 - 2a t + (a - b) = 0, whose discriminant is 4(a^2 - ab + b^2),
    // four times the field norm of x.
    let disc = rational_sqrt(&x.norm())?;
    for sign in [Rational::one(), -Rational::one()] {
        let t = (a + &sign * &disc) / b;
        let denom = rat(2, 1) * &t - Rational::one();
        if denom.is_zero() {
            continue;
        }
        let v2 = b / denom;
        if let Some(v) = rational_sqrt(&v2) {
            let u = &t * &v;
            let y = EisScalar::new(u, v);
            if &(&y * &y) == x {
                return Some(y);
            }
        }
    }
    None
}
