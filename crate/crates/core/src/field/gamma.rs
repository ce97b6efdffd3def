use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::push_term;
use super::{binomial, FieldElement, Poly, Rational};

/// Polynomial in `γ = (1 − α)/√α = (1 − t²)/t` with rational coefficients;
/// `coeffs[j]` multiplies `γ^j`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GammaPolynomial {
    coeffs: Vec<Rational>,
}

impl GammaPolynomial {
    pub fn zero() -> Self {
        GammaPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn gamma() -> Self {
        Self::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        GammaPolynomial { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| super::int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> Rational {
        self.coeffs.get(j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Exponents `j` with a nonzero coefficient.
    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, _)| j)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// All coefficients are non-negative integers.
    pub fn is_nonnegative_integral(&self) -> bool {
        self.coeffs
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// `q(γ(t))` as an element of ℚ(t).
    pub fn to_field_element(&self) -> FieldElement {
        // Horner in γ; every intermediate is a Laurent polynomial.
        let gamma = FieldElement::gamma();
        let mut acc = FieldElement::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &gamma) + &FieldElement::from_rational(c.clone());
        }
        acc
    }

    pub fn eval(&self, gamma: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * gamma + c;
        }
        acc
    }

    pub fn eval_f64(&self, gamma: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * gamma + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }

    /// Ascending rendering in the variable `g`, e.g. `1 + 2*g^2`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                push_term(&mut out, c, "g", k);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn term_count(&self) -> usize {
        self.exponents().count()
    }
}

/// Decide whether `c ∈ ℚ[γ]` and if so return the polynomial.
///
/// Such a `c` is a Laurent polynomial in `t` whose lowest power `t^(-d)`
/// fixes the degree `d`; `γ^j` contributes `t^(-j)` with coefficient 1 and
/// no lower power, so the coefficients come out of a triangular sweep from
/// `j = d` down to `0`. Anything left over means `c ∉ ℚ[γ]`.
pub fn to_gamma(c: &FieldElement) -> Option<GammaPolynomial> {
    if c.is_zero() {
        return Some(GammaPolynomial::zero());
    }
    let (low, coeffs) = c.as_laurent()?;
    if low > 0 {
        return None;
    }
    let deg = (-low) as usize;
    let high = low + coeffs.len() as i64 - 1;
    let top = high.max(deg as i64);
    // rem[e + deg] holds the coefficient of t^e for e in [-deg, top]
    let mut rem = vec![Rational::zero(); (top + deg as i64 + 1) as usize];
    for (i, ci) in coeffs.into_iter().enumerate() {
        rem[(low + i as i64 + deg as i64) as usize] = ci;
    }
    let mut q = vec![Rational::zero(); deg + 1];
    for j in (0..=deg).rev() {
        let cj = rem[deg - j].clone();
        if cj.is_zero() {
            continue;
        }
        for m in 0..=j {
            let e = 2 * m as i64 - j as i64;
            let b = Rational::from_integer((binomial(j as u64, m as u64) as u64).into());
            let term = if m % 2 == 0 { &cj * b } else { -(&cj * b) };
            rem[(e + deg as i64) as usize] -= term;
        }
        q[j] = cj;
    }
    rem.iter()
        .all(Zero::is_zero)
        .then(|| GammaPolynomial::from_coeffs(q))
}

impl fmt::Debug for GammaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Display for GammaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<'a> Add<&'a GammaPolynomial> for &'a GammaPolynomial {
    type Output = GammaPolynomial;
    fn add(self, rhs: &'a GammaPolynomial) -> GammaPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        GammaPolynomial::from_coeffs((0..n).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl<'a> Sub<&'a GammaPolynomial> for &'a GammaPolynomial {
    type Output = GammaPolynomial;
    fn sub(self, rhs: &'a GammaPolynomial) -> GammaPolynomial {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a GammaPolynomial> for &'a GammaPolynomial {
    type Output = GammaPolynomial;
    fn mul(self, rhs: &'a GammaPolynomial) -> GammaPolynomial {
        let a = Poly::from_coeffs(self.coeffs.clone());
        let b = Poly::from_coeffs(rhs.coeffs.clone());
        GammaPolynomial::from_coeffs((&a * &b).coeffs().to_vec())
    }
}

impl Neg for &GammaPolynomial {
    type Output = GammaPolynomial;
    fn neg(self) -> GammaPolynomial {
        GammaPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::int;

    #[test]
    fn spec_examples() {
        assert_eq!(to_gamma(&FieldElement::one()), Some(GammaPolynomial::one()));
        let c = FieldElement::t_pow(-1) - FieldElement::t();
        assert_eq!(to_gamma(&c), Some(GammaPolynomial::gamma()));
        assert_eq!(to_gamma(&FieldElement::t()), None);
    }

    #[test]
    fn rejects_non_laurent_and_inconsistent() {
        let c = FieldElement::one() / (FieldElement::t() + FieldElement::one());
        assert_eq!(to_gamma(&c), None);
        // 1/t alone: would need γ but leaves -t behind
        assert_eq!(to_gamma(&FieldElement::t_pow(-1)), None);
        // t^2 - 1/t^2 = γ² + ... is odd under t -> -1/t? (t^2 - t^-2) maps to (t^-2 - t^2)
        let d = FieldElement::t_pow(2) - FieldElement::t_pow(-2);
        assert_eq!(to_gamma(&d), None);
    }

    #[test]
    fn known_expansion() {
        // γ² = t^-2 - 2 + t^2, so t^-2 + t^2 = γ² + 2
        let c = FieldElement::t_pow(-2) + FieldElement::t_pow(2);
        assert_eq!(to_gamma(&c), Some(GammaPolynomial::from_coeffs(alloc::vec![int(2), int(0), int(1)])));
    }

    #[test]
    fn render() {
        assert_eq!(GammaPolynomial::from_i64s(&[1, 0, 2]).render(), "1 + 2*g^2");
        assert_eq!(GammaPolynomial::from_i64s(&[-2, 0, -6]).render(), "-2 - 6*g^2");
    }
}
