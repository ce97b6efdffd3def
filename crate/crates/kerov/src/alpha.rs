use std::fmt;
use std::str::FromStr;

use kerov_core::field::{int, FieldElement, Rational};

/// The Jack parameter as given on the command line. The token decides the
/// arithmetic: `t` is symbolic, `p/q` or an integer is exact, a decimal is
/// floating point.
#[derive(Debug, Clone, PartialEq)]
pub enum Alpha {
    Symbolic,
    Rational(Rational),
    Float(f64),
}

impl Alpha {
    /// `α` as a double, for the sampler; `None` when symbolic.
    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Alpha::Symbolic => None,
            Alpha::Rational(q) => Some(kerov_core::plancherel::to_f64_lossy(q)),
            Alpha::Float(a) => Some(*a),
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Alpha::Float(_))
    }
}

impl Default for Alpha {
    fn default() -> Self {
        Alpha::Symbolic
    }
}

impl FromStr for Alpha {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s == "t" {
            return Ok(Alpha::Symbolic);
        }
        if s.contains(['.', 'e', 'E']) {
            let a: f64 = s.parse().map_err(|_| format!("invalid alpha {s:?}"))?;
            if !(a > 0.0 && a.is_finite()) {
                return Err(format!("alpha must be positive, got {s}"));
            }
            return Ok(Alpha::Float(a));
        }
        let q: Rational = s.parse().map_err(|_| format!("invalid alpha {s:?}: expected t, p/q or a decimal"))?;
        if q <= int(0) {
            return Err(format!("alpha must be positive, got {s}"));
        }
        Ok(Alpha::Rational(q))
    }
}

impl fmt::Display for Alpha {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Alpha::Symbolic => f.write_str("t^2"),
            Alpha::Rational(q) => write!(f, "{q}"),
            Alpha::Float(a) => write!(f, "{a}"),
        }
    }
}

/// A quantity after specialising `t = √α`.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Exact(FieldElement),
    Float(f64),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(v) => f.write_str(&v.render("t")),
            Value::Float(v) => write!(f, "{v}"),
        }
    }
}

/// Specialises a value of ℚ(t). At rational `α` the value must lie in ℚ(t²).
pub fn specialise(v: &FieldElement, alpha: &Alpha) -> Result<Value, String> {
    match alpha {
        Alpha::Symbolic => Ok(Value::Exact(v.clone())),
        Alpha::Rational(a) => v
            .unsquare_variable()
            .and_then(|w| w.eval(a))
            .map(|q| Value::Exact(FieldElement::from_rational(q)))
            .ok_or_else(|| format!("{} is not rational at alpha = {a}; use t or a decimal alpha", v.render("t"))),
        Alpha::Float(a) => Ok(Value::Float(v.eval_f64(a.sqrt()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use kerov_core::field::rat;

    #[test]
    fn tokens() {
        assert_eq!("t".parse::<Alpha>().unwrap(), Alpha::Symbolic);
        assert_eq!("2".parse::<Alpha>().unwrap(), Alpha::Rational(int(2)));
        assert_eq!("1/2".parse::<Alpha>().unwrap(), Alpha::Rational(rat(1, 2)));
        assert_eq!("0.5".parse::<Alpha>().unwrap(), Alpha::Float(0.5));
        assert!("0".parse::<Alpha>().is_err());
        assert!("-1.5".parse::<Alpha>().is_err());
        assert!("x".parse::<Alpha>().is_err());
    }

    #[test]
    fn specialisation() {
        let alpha_plus_one = &FieldElement::t_pow(2) + &FieldElement::from_int(1);
        let v = specialise(&alpha_plus_one, &Alpha::Rational(int(2))).unwrap();
        assert_eq!(v.to_string(), "3");
        assert!(specialise(&FieldElement::t(), &Alpha::Rational(int(2))).is_err());
        match specialise(&FieldElement::t(), &Alpha::Float(4.0)).unwrap() {
            Value::Float(x) => assert_eq!(x, 2.0),
            v => panic!("{v:?}"),
        }
    }
}
