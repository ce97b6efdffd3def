//! Exact scalars: rationals, polynomials and rational functions in `t = √α`,
//! polynomials in `γ = (1 − t²)/t`, and exact linear solving.

mod element;
mod gamma;
pub mod interp;
mod linalg;
mod poly;

use core::fmt::Debug;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use element::{field_arith, FieldElement, FieldOp};
pub use gamma::{to_gamma, GammaPolynomial};
pub use linalg::{invert, rank, solve_exact, Solution};
pub use poly::Poly;

/// Arbitrary-precision rational, always stored reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Scalars the generic algorithms run over: `FieldElement` (symbolic in `t`),
/// `Rational` (fixed rational parameter) and `f64` (statistics).
pub trait Field:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_rational(q: &Rational) -> Self;

    fn from_i64(v: i64) -> Self {
        Self::from_rational(&int(v))
    }

    /// `Some(sign > 0)` when the sign is decidable, `None` for symbolic values.
    fn is_positive(&self) -> Option<bool>;

    /// Pivot heuristic for elimination: smaller is cheaper.
    fn pivot_cost(&self) -> usize {
        0
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }

    fn pow_u(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }
}

/// Totally ordered scalars that can be plotted.
pub trait RealField: Field + PartialOrd {
    fn to_f64(&self) -> f64;

    fn abs(&self) -> Self {
        if *self < Self::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

impl Field for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn is_positive(&self) -> Option<bool> {
        Some(Signed::is_positive(self))
    }

    fn pivot_cost(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

impl RealField for Rational {
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

impl Field for f64 {
    fn from_rational(q: &Rational) -> Self {
        ToPrimitive::to_f64(q).unwrap_or(f64::NAN)
    }

    fn is_positive(&self) -> Option<bool> {
        Some(*self > 0.0)
    }
}

impl RealField for f64 {
    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Field for FieldElement {
    fn from_rational(q: &Rational) -> Self {
        FieldElement::from_rational(q.clone())
    }

    fn is_positive(&self) -> Option<bool> {
        self.as_rational().map(|q| Signed::is_positive(&q))
    }

    fn pivot_cost(&self) -> usize {
        let deg = |p: &Poly| p.degree().unwrap_or(0);
        let bits: u64 = self
            .numer()
            .coeffs()
            .iter()
            .chain(self.denom().coeffs())
            .map(|c| c.numer().bits() + c.denom().bits())
            .sum();
        (deg(self.numer()) + deg(self.denom())) * 1_000_000 + bits as usize
    }
}

/// Binomial coefficient as a `u128`; panics on overflow, which the small
/// ranges used in this crate never reach.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}
