use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Poly, Rational};
use crate::error::{Error, Result};

/// Exact element of ℚ(t), `t = √α`.
///
/// Always reduced: `gcd(num, den) = 1` and `den` is monic. Two equal
/// rational functions therefore have identical representations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    num: Poly,
    den: Poly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn field_arith(a: &FieldElement, b: &FieldElement, op: FieldOp) -> Result<FieldElement> {
    Ok(match op {
        FieldOp::Add => a + b,
        FieldOp::Sub => a - b,
        FieldOp::Mul => a * b,
        FieldOp::Div => a.checked_div(b)?,
    })
}

impl FieldElement {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        Self::normalized(num, den)
    }

    /// Make `den` monic; the pair must already be coprime.
    fn normalized(num: Poly, den: Poly) -> Self {
        let lead = den.lead().expect("nonzero denominator").clone();
        if lead.is_one() {
            FieldElement { num, den }
        } else {
            let inv = lead.recip();
            FieldElement {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        FieldElement { num: p, den: Poly::one() }
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::from_poly(Poly::constant(q))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(super::int(n))
    }

    /// The generator `t`.
    pub fn t() -> Self {
        Self::from_poly(Poly::x())
    }

    /// `t^k` for any integer `k`.
    pub fn t_pow(k: i64) -> Self {
        if k >= 0 {
            Self::from_poly(Poly::monomial(Rational::one(), k as usize))
        } else {
            FieldElement {
                num: Poly::one(),
                den: Poly::monomial(Rational::one(), (-k) as usize),
            }
        }
    }

    /// `γ = (1 − t²)/t`.
    pub fn gamma() -> Self {
        Self::laurent(vec![super::int(1), super::int(0), super::int(-1)], -1)
    }

    /// `Σ coeffs[i] · t^(low + i)`.
    pub fn laurent(coeffs: Vec<Rational>, low: i64) -> Self {
        let p = Poly::from_coeffs(coeffs);
        if low >= 0 {
            Self::from_poly(p.shift_up(low as usize))
        } else {
            Self::reduce(p, Poly::monomial(Rational::one(), (-low) as usize))
        }
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs();
        Ok(FieldElement {
            num: base.num.pow(e as u32),
            den: base.den.pow(e as u32),
        })
    }

    /// Value at a rational point, `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.num.eval_f64(x) / self.den.eval_f64(x)
    }

    /// `Some((low, coeffs))` with `self = Σ coeffs[i] t^(low+i)` when the
    /// denominator is a power of `t`.
    pub fn as_laurent(&self) -> Option<(i64, Vec<Rational>)> {
        if !self.den.is_monomial() {
            return None;
        }
        let k = self.den.degree().unwrap_or(0) as i64;
        if self.num.is_zero() {
            return Some((0, Vec::new()));
        }
        let ord = self.num.order().unwrap_or(0);
        let coeffs = self.num.coeffs()[ord..].to_vec();
        Some((ord as i64 - k, coeffs))
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_monomial()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match (self.num.degree(), self.den.degree()) {
            (None, _) => Some(Rational::zero()),
            (Some(0), Some(0)) => Some(self.num.coeffs()[0].clone()),
            _ => None,
        }
    }

    pub fn as_polynomial(&self) -> Option<&Poly> {
        self.den.is_one().then_some(&self.num)
    }

    /// Substitute `t ↦ t²`; used to move quantities computed in `α` into `t`.
    pub fn square_variable(&self) -> Self {
        FieldElement {
            num: self.num.square_variable(),
            den: self.den.square_variable(),
        }
    }

    /// Inverse of [`FieldElement::square_variable`]: express an even function
    /// of `t` as a function of `α = t²`.
    pub fn unsquare_variable(&self) -> Option<Self> {
        Some(FieldElement {
            num: self.num.unsquare_variable()?,
            den: self.den.unsquare_variable()?,
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        FieldElement {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Reduced-fraction rendering, e.g. `(1 - t^2)/t`.
    pub fn render(&self, var: &str) -> String {
        let num = self.num.render(var);
        if self.den.is_one() {
            return num;
        }
        let fractional = self.num.coeffs().iter().any(|c| !c.is_integer());
        let num = if self.num.term_count() > 1 || fractional {
            format!("({num})")
        } else {
            num
        };
        let den = self.den.render(var);
        if self.den.term_count() > 1 {
            format!("{num}/({den})")
        } else {
            format!("{num}/{den}")
        }
    }
}

impl Zero for FieldElement {
    fn zero() -> Self {
        FieldElement {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for FieldElement {
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
}

impl Default for FieldElement {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("t"))
    }
}

fn add_impl(a: &FieldElement, b: &FieldElement, negate_b: bool) -> FieldElement {
    let bnum = if negate_b { -&b.num } else { b.num.clone() };
    if a.is_zero() {
        return FieldElement {
            num: bnum,
            den: b.den.clone(),
        };
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.den == b.den {
        let num = &a.num + &bnum;
        if a.den.is_one() {
            return FieldElement::from_poly(num);
        }
        return FieldElement::reduce(num, a.den.clone());
    }
    if a.den.is_one() {
        let num = &(&a.num * &b.den) + &bnum;
        return FieldElement { num, den: b.den.clone() };
    }
    if b.den.is_one() {
        let num = &a.num + &(&bnum * &a.den);
        return FieldElement { num, den: a.den.clone() };
    }
    // Henrici: only the common part of the denominators can cancel.
    let g = a.den.gcd(&b.den);
    if g.is_one() {
        let num = &(&a.num * &b.den) + &(&bnum * &a.den);
        let den = &a.den * &b.den;
        return FieldElement::normalized(num, den);
    }
    let ad = a.den.div_rem(&g).0;
    let bd = b.den.div_rem(&g).0;
    let num = &(&a.num * &bd) + &(&bnum * &ad);
    if num.is_zero() {
        return FieldElement::zero();
    }
    let g2 = num.gcd(&g);
    let (num, gl) = if g2.is_one() {
        (num, g)
    } else {
        (num.div_rem(&g2).0, g.div_rem(&g2).0)
    };
    let den = &(&ad * &bd) * &gl;
    FieldElement::normalized(num, den)
}

fn mul_impl(a: &FieldElement, b: &FieldElement) -> FieldElement {
    if a.is_zero() || b.is_zero() {
        return FieldElement::zero();
    }
    if a.den.is_one() && b.den.is_one() {
        return FieldElement::from_poly(&a.num * &b.num);
    }
    let g1 = a.num.gcd(&b.den);
    let g2 = b.num.gcd(&a.den);
    let cut = |p: &Poly, g: &Poly| if g.is_one() { p.clone() } else { p.div_rem(g).0 };
    let num = &cut(&a.num, &g1) * &cut(&b.num, &g2);
    let den = &cut(&a.den, &g2) * &cut(&b.den, &g1);
    FieldElement::normalized(num, den)
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &'a FieldElement) -> FieldElement {
        add_impl(self, rhs, false)
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &'a FieldElement) -> FieldElement {
        add_impl(self, rhs, true)
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &'a FieldElement) -> FieldElement {
        mul_impl(self, rhs)
    }
}

impl<'a> Div<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    /// Panics on division by zero, like the primitive numeric types.
    fn div(self, rhs: &'a FieldElement) -> FieldElement {
        self.checked_div(rhs).expect("division by zero")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &'a FieldElement) -> FieldElement {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl core::iter::Sum for FieldElement {
    fn sum<I: Iterator<Item = FieldElement>>(iter: I) -> Self {
        iter.fold(FieldElement::zero(), |acc, x| acc + x)
    }
}
