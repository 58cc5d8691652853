//! Exact rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (guaranteed by `num_rational`).
pub type Scalar = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid rational literal {0:?}: expected `p` or `p/q` with integer p, q and q != 0")]
pub struct ParseScalarError(pub String);

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses a decimal-free rational literal such as `"3"`, `"-2/3"`.
pub fn parse(s: &str) -> Result<Scalar, ParseScalarError> {
    let err = || ParseScalarError(s.to_string());
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| err())?;
    let d: BigInt = den.parse().map_err(|_| err())?;
    if d.is_zero() {
        return Err(err());
    }
    Ok(Scalar::new(n, d))
}

/// Canonical string form: `p` for integers, `p/q` otherwise.
pub fn render(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// `base^exp` for a non-negative exponent.
pub fn pow(base: &Scalar, exp: u32) -> Scalar {
    num_traits::pow(base.clone(), exp as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_reduces() {
        assert_eq!(parse("-2/3").unwrap(), ratio(-2, 3));
        assert_eq!(parse("4/-6").unwrap(), ratio(-2, 3));
        assert_eq!(parse(" 7 ").unwrap(), int(7));
        assert_eq!(render(&parse("10/4").unwrap()), "5/2");
        assert_eq!(render(&int(-3)), "-3");
    }

    #[test]
    fn rejects_bad_literals() {
        for s in ["", "1.5", "1/0", "a", "1/2/3"] {
            assert!(parse(s).is_err(), "{s}");
        }
    }
}
