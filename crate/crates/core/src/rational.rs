use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::{Error, Result};

/// Exact fraction, always in lowest terms with a positive denominator.
///
/// `Display` prints `p` when the denominator is one and `p/q` otherwise,
/// which is also the canonical textual form accepted by [`parse_rational`].
pub type Rational = BigRational;

/// Integer-valued rational.
pub fn rational(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `p` or `p/q` (decimal integers, `q > 0`).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let err = || Error::ParseRational(text.to_string());
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let parse_int = |s: &str| -> Result<BigInt> {
        let digits = s.strip_prefix('-').unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        s.parse::<BigInt>().map_err(|_| err())
    };
    let numer = parse_int(num)?;
    let denom = match den {
        Some(d) => parse_int(d)?,
        None => BigInt::from(1),
    };
    if !denom.is_positive() {
        return Err(err());
    }
    Ok(BigRational::new(numer, denom))
}
