//! Exact rational scalars: `Rat` (arbitrary-precision rationals) and `GRat`
//! (Gaussian rationals, used when curves or points pick up factors of `i`).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Exact rational number, always stored reduced with a positive denominator.
pub type Rat = BigRational;

/// Shorthand for a rational from an integer pair.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer as a rational.
pub fn rat_i(num: i64) -> Rat {
    Rat::from_integer(BigInt::from(num))
}

/// Exact square root of a nonnegative rational, if it is a rational square.
pub fn rat_sqrt(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(Rat::zero());
    }
    let ns = x.numer().sqrt();
    let ds = x.denom().sqrt();
    if &(&ns * &ns) == x.numer() && &(&ds * &ds) == x.denom() {
        Some(Rat::new(ns, ds))
    } else {
        None
    }
}

/// Coefficient field for the polynomial layer.
///
/// Implemented by `Rat` and `GRat`; everything the homogeneous polynomial
/// algebra needs reduces to exact field arithmetic plus an `f64` shadow for
/// diagnostics.
pub trait CoefField:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    fn inv(&self) -> Self;
    fn from_rat(r: &Rat) -> Self;
    fn to_c64(&self) -> num_complex::Complex64;
}

impl CoefField for Rat {
    fn inv(&self) -> Self {
        Rat::one() / self.clone()
    }
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
    fn to_c64(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }
}

/// Gaussian rational `re + im·i` with exact rational parts.
#[derive(Clone, PartialEq, Eq)]
pub struct GRat {
    pub re: Rat,
    pub im: Rat,
}

impl GRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GRat { re, im }
    }

    pub fn real(re: Rat) -> Self {
        GRat { re, im: Rat::zero() }
    }

    pub fn i() -> Self {
        GRat { re: Rat::zero(), im: Rat::one() }
    }

    pub fn conj(&self) -> Self {
        GRat { re: self.re.clone(), im: -self.im.clone() }
    }

    /// Squared modulus `re² + im²`, an ordinary rational.
    pub fn norm_sq(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl fmt::Debug for GRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else {
            write!(f, "({} + {}i)", self.re, self.im)
        }
    }
}

impl Add for GRat {
    type Output = GRat;
    fn add(self, rhs: GRat) -> GRat {
        GRat { re: self.re + rhs.re, im: self.im + rhs.im }
    }
}

impl Sub for GRat {
    type Output = GRat;
    fn sub(self, rhs: GRat) -> GRat {
        GRat { re: self.re - rhs.re, im: self.im - rhs.im }
    }
}

impl Mul for GRat {
    type Output = GRat;
    fn mul(self, rhs: GRat) -> GRat {
        GRat {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for GRat {
    type Output = GRat;
    fn neg(self) -> GRat {
        GRat { re: -self.re, im: -self.im }
    }
}

impl Div for GRat {
    type Output = GRat;
    fn div(self, rhs: GRat) -> GRat {
        let n = rhs.norm_sq();
        let c = rhs.conj();
        let p = self * c;
        GRat { re: p.re / &n, im: p.im / &n }
    }
}

impl Zero for GRat {
    fn zero() -> Self {
        GRat { re: Rat::zero(), im: Rat::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GRat {
    fn one() -> Self {
        GRat { re: Rat::one(), im: Rat::zero() }
    }
}

impl CoefField for GRat {
    fn inv(&self) -> Self {
        let n = self.norm_sq();
        GRat { re: &self.re / &n, im: -(&self.im / &n) }
    }
    fn from_rat(r: &Rat) -> Self {
        GRat::real(r.clone())
    }
    fn to_c64(&self) -> num_complex::Complex64 {
        num_complex::Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
}
