//! Arbitrary-precision rationals and their `"p/q"` string form.
//!
//! The JSON interfaces never encode rationals as floats; they always use
//! strings like `"5/6"` (or `"2"` when the denominator is one), which is
//! exactly the `Display`/`FromStr` form of [`Rat`].

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number: reduced fraction with positive denominator.
pub type Rat = num_rational::BigRational;

/// Rational from a machine-integer pair. Panics on zero denominator.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational from an unsigned big integer.
pub fn rat_from_biguint(n: &BigUint) -> Rat {
    Rat::from_integer(BigInt::from(n.clone()))
}

/// Parses `"p/q"` or `"p"` into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    s.trim()
        .parse::<Rat>()
        .map_err(|_| Error::InvalidRational(s.to_string()))
}

/// Canonical string form: `"p/q"`, or `"p"` when the denominator is one.
pub fn fmt_rat(r: &Rat) -> String {
    r.to_string()
}

/// Ceiling of a non-negative rational as an unsigned big integer.
pub fn ceil_biguint(r: &Rat) -> BigUint {
    debug_assert!(!r.is_negative(), "ceil_biguint expects a non-negative input");
    r.ceil().to_integer().to_biguint().unwrap_or_default()
}

/// Nearest-f64 value of a rational; used only on the numeric-oracle side.
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Fall back to a quotient of leading digits for out-of-range values.
        let n = r.numer().to_f64().unwrap_or(f64::MAX);
        let d = r.denom().to_f64().unwrap_or(f64::MAX);
        if d.is_zero() {
            f64::MAX
        } else {
            n / d
        }
    })
}

/// Serde adapter: a [`Rat`] field as a `"p/q"` string.
pub mod rat_serde {
    use super::Rat;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&r.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rat, D::Error> {
        let text = String::deserialize(d)?;
        text.parse::<Rat>()
            .map_err(|e| de::Error::custom(format!("invalid rational {text:?}: {e}")))
    }
}

/// Serde adapter: a `Vec<Rat>` field as a list of `"p/q"` strings.
pub mod rat_vec_serde {
    use super::Rat;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rat], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|r| r.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<Rat>, D::Error> {
        let texts = Vec::<String>::deserialize(d)?;
        texts
            .into_iter()
            .map(|t| {
                t.parse::<Rat>()
                    .map_err(|e| de::Error::custom(format!("invalid rational {t:?}: {e}")))
            })
            .collect()
    }
}

/// Serde adapter: an `Option<Rat>` field as a `"p/q"` string or `null`.
pub mod rat_opt_serde {
    use super::Rat;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        r: &Option<Rat>,
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        match r {
            Some(v) => s.serialize_some(&v.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Option<Rat>, D::Error> {
        let text = Option::<String>::deserialize(d)?;
        text.map(|t| {
            t.parse::<Rat>()
                .map_err(|e| de::Error::custom(format!("invalid rational {t:?}: {e}")))
        })
        .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse_roundtrip() {
        for s in ["5/6", "2", "-7/3", "0"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(fmt_rat(&r), s);
        }
        assert_eq!(fmt_rat(&parse_rat("4/6").unwrap()), "2/3");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn ceiling() {
        assert_eq!(ceil_biguint(&rat(7, 3)), BigUint::from(3u32));
        assert_eq!(ceil_biguint(&rat(6, 3)), BigUint::from(2u32));
        assert_eq!(ceil_biguint(&rat(0, 1)), BigUint::from(0u32));
    }
}
