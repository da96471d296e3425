//! Exponent vectors of monomials.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::de;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rat::{rat_from_biguint, Rat};

/// The exponent vector of a monomial: a fixed-length list of non-negative
/// integers. Ordering is lexicographic, which is also the canonical
/// generator order used everywhere.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(Vec<BigUint>);

impl MultiIndex {
    pub fn new(components: Vec<BigUint>) -> Self {
        MultiIndex(components)
    }

    /// Convenience constructor from machine integers.
    pub fn from_u64s(components: &[u64]) -> Self {
        MultiIndex(components.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// The all-zero exponent (the monomial `1`).
    pub fn zero(dim: usize) -> Self {
        MultiIndex(vec![BigUint::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[BigUint] {
        &self.0
    }

    pub fn get(&self, i: usize) -> &BigUint {
        &self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    pub fn total_degree(&self) -> BigUint {
        self.0.iter().sum()
    }

    /// Componentwise sum; exponent of the product monomial.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: other.dim(),
            });
        }
        Ok(MultiIndex(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        ))
    }

    /// Componentwise `<=` (written `⪯` in the docs): `self` divides `other`'s
    /// monomial exactly when `self ⪯ other`.
    pub fn leq(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise strict `<` in every coordinate.
    pub fn lt_strict(&self, other: &Self) -> bool {
        self.dim() == other.dim() && self.0.iter().zip(&other.0).all(|(a, b)| a < b)
    }

    /// Exact rational coordinates of the lattice point.
    pub fn to_rats(&self) -> Vec<Rat> {
        self.0.iter().map(rat_from_biguint).collect()
    }

    /// The shifted point `self + (1,…,1)` as exact rationals.
    pub fn plus_one_rats(&self) -> Vec<Rat> {
        self.0
            .iter()
            .map(|c| rat_from_biguint(&(c + BigUint::one())))
            .collect()
    }

    /// The shifted exponent `self + (1,…,1)`.
    pub fn plus_one(&self) -> Self {
        MultiIndex(self.0.iter().map(|c| c + BigUint::one()).collect())
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

// JSON form is a plain array of integers. Exponents beyond u64 are
// representable internally but refused by the JSON encoder.
impl Serialize for MultiIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let as_u64: Option<Vec<u64>> = self.0.iter().map(|c| c.to_u64()).collect();
        match as_u64 {
            Some(v) => v.serialize(s),
            None => Err(serde::ser::Error::custom(
                "exponent does not fit in 64 bits; JSON encoding refused",
            )),
        }
    }
}

impl<'de> Deserialize<'de> for MultiIndex {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<u64>::deserialize(d)?;
        if v.is_empty() {
            return Err(de::Error::custom("exponent vector must be non-empty"));
        }
        Ok(MultiIndex::from_u64s(&v))
    }
}

/// Enumerates all lattice points of the box `[0, bounds[0]] × … × [0,
/// bounds[n-1]]`, rejecting boxes whose volume exceeds `cap`. Points come
/// out in lexicographic order.
pub fn lattice_box(bounds: &[BigUint], cap: usize) -> Result<Vec<MultiIndex>> {
    let mut volume = BigUint::one();
    for b in bounds {
        volume *= b + BigUint::one();
    }
    let volume = volume.to_usize().filter(|&v| v <= cap).ok_or_else(|| {
        Error::ComputationLimit {
            what: "enumerating a lattice box".into(),
            count: usize::MAX,
            cap,
        }
    })?;

    // Bounds fit in u64 once the volume check passed.
    let bs: Vec<u64> = bounds.iter().map(|b| b.to_u64().unwrap()).collect();
    let mut out = Vec::with_capacity(volume);
    let mut counter = vec![0u64; bs.len()];
    loop {
        out.push(MultiIndex::from_u64s(&counter));
        // Odometer increment with the last axis fastest, so output is lex.
        let mut axis = bs.len();
        loop {
            if axis == 0 {
                return Ok(out);
            }
            axis -= 1;
            if counter[axis] < bs[axis] {
                counter[axis] += 1;
                break;
            }
            counter[axis] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn componentwise_orders() {
        let a = MultiIndex::from_u64s(&[2, 0]);
        let b = MultiIndex::from_u64s(&[3, 1]);
        assert!(a.leq(&b));
        assert!(!b.leq(&a));
        assert!(a.lt_strict(&b));
        let c = MultiIndex::from_u64s(&[2, 1]);
        assert!(!a.lt_strict(&c));
        assert!(a.leq(&c));
    }

    #[test]
    fn lex_order_is_derive_order() {
        let a = MultiIndex::from_u64s(&[0, 3]);
        let b = MultiIndex::from_u64s(&[1, 0]);
        assert!(a < b);
    }

    #[test]
    fn box_enumeration() {
        let bounds = [BigUint::from(1u32), BigUint::from(2u32)];
        let pts = lattice_box(&bounds, 100).unwrap();
        assert_eq!(pts.len(), 6);
        assert_eq!(pts[0], MultiIndex::from_u64s(&[0, 0]));
        assert_eq!(pts[5], MultiIndex::from_u64s(&[1, 2]));
        assert!(lattice_box(&bounds, 5).is_err());
    }
}
