//! Exact arithmetic in the coefficient field `Q(a, b, c, q, t, α)`.
//!
//! Negative powers are always represented as fractions. Specializations of
//! the parameters are substitutions ([`Coeff::substitute`]), never separate
//! ring types.

mod coeff;
mod gcd;
mod parse;
mod poly;

pub use coeff::Coeff;
pub use gcd::{content_in, gcd};
pub use poly::{Mono, Poly, Symbol, NVARS};

use crate::error::Result;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn arith(x: &Coeff, y: &Coeff, op: ArithOp) -> Result<Coeff> {
    Ok(match op {
        ArithOp::Add => x + y,
        ArithOp::Sub => x - y,
        ArithOp::Mul => x * y,
        ArithOp::Div => x.checked_div(y)?,
    })
}

pub fn substitute(x: &Coeff, bindings: &[(Symbol, Coeff)]) -> Result<Coeff> {
    x.substitute(bindings)
}

pub fn is_zero(x: &Coeff) -> bool {
    x.is_zero()
}

/// Shorthand used throughout the crate and its tests: parses a coefficient
/// expression, panicking on malformed input.
pub fn cf(expr: &str) -> Coeff {
    expr.parse()
        .unwrap_or_else(|e| panic!("bad coefficient literal {expr:?}: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn arith_examples() {
        assert!(arith(&cf("1-a"), &cf("a-1"), ArithOp::Add).unwrap().is_zero());
        assert_eq!(arith(&cf("b^2-1"), &cf("b-1"), ArithOp::Div).unwrap(), cf("b+1"));
        assert_eq!(arith(&cf("1/(1-t)"), &cf("1-t"), ArithOp::Mul).unwrap(), Coeff::one());
        assert_eq!(
            arith(&cf("a"), &Coeff::zero(), ArithOp::Div),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn substitute_examples() {
        let x = cf("b^2-1");
        let y = substitute(&x, &[(Symbol::B, cf("1/q"))]).unwrap();
        assert_eq!(y, cf("(1-q^2)/q^2"));

        let eps1 = cf("(q-1)/(t-1)");
        assert_eq!(
            substitute(&eps1, &[(Symbol::Q, Coeff::zero())]).unwrap(),
            cf("1/(1-t)")
        );
        assert_eq!(substitute(&cf("a"), &[(Symbol::A, cf("a"))]).unwrap(), cf("a"));
        assert_eq!(
            substitute(&cf("1/(a-b)"), &[(Symbol::A, cf("b"))]),
            Err(Error::PoleAtSpecialization)
        );
        // simultaneous, not sequential
        assert_eq!(
            substitute(&cf("a-b"), &[(Symbol::A, cf("b")), (Symbol::B, cf("a"))]).unwrap(),
            cf("b-a")
        );
    }

    #[test]
    fn is_zero_examples() {
        assert!(!is_zero(&cf("(1-a)*(b-1)*(b-a)")));
        assert!(is_zero(&(cf("b^2-1") - cf("(b-1)*(b+1)"))));
        assert!(is_zero(&cf("0/1")));
    }

    #[test]
    fn canonical_string_form() {
        let x = cf("(1 - a)*(1 + b)/(a - b)");
        assert_eq!(x.to_string(), "((-a*b - a + b + 1))/((a - b))");
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, r#"{"num":"-a*b - a + b + 1","den":"a - b"}"#);
        let back: Coeff = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
        assert_eq!(cf("6/4").to_string(), "((3))/((2))");
        assert_eq!(cf("-1/(2*b-4)").to_string(), "((-1))/((2*b - 4))");
    }
}
