//! Sparse polynomials with Gaussian-rational coefficients.
//!
//! Only the support matters for membership questions; the coefficients are
//! retained for I/O fidelity.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::index::MultiIndex;
use crate::rat::Rat;

/// A Gaussian rational: exact real and imaginary parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussianRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussianRat {
    pub fn new(re: Rat, im: Rat) -> Self {
        GaussianRat { re, im }
    }

    pub fn real(re: Rat) -> Self {
        GaussianRat {
            re,
            im: Rat::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

/// A polynomial as a term map; zero coefficients are never stored, so the
/// key set is exactly the support. The empty map is the zero polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    dim: usize,
    terms: BTreeMap<MultiIndex, GaussianRat>,
}

impl Polynomial {
    /// Collects terms, summing duplicates and dropping anything that
    /// cancels to zero.
    pub fn new(dim: usize, terms: impl IntoIterator<Item = (MultiIndex, GaussianRat)>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDimension);
        }
        let mut map: BTreeMap<MultiIndex, GaussianRat> = BTreeMap::new();
        for (exp, coeff) in terms {
            if exp.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: exp.dim(),
                });
            }
            let entry = map.entry(exp).or_insert_with(|| GaussianRat {
                re: Rat::zero(),
                im: Rat::zero(),
            });
            entry.re += coeff.re;
            entry.im += coeff.im;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(Polynomial { dim, terms: map })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Exponents of the support, in lexicographic order.
    pub fn support(&self) -> impl Iterator<Item = &MultiIndex> {
        self.terms.keys()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &GaussianRat)> {
        self.terms.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    #[test]
    fn cancelling_terms_vanish() {
        let e = MultiIndex::from_u64s(&[1, 0]);
        let p = Polynomial::new(
            2,
            [
                (e.clone(), GaussianRat::real(rat_int(2))),
                (e.clone(), GaussianRat::real(rat_int(-2))),
            ],
        )
        .unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn support_in_lex_order() {
        let p = Polynomial::new(
            2,
            [
                (MultiIndex::from_u64s(&[1, 0]), GaussianRat::real(rat_int(1))),
                (MultiIndex::from_u64s(&[0, 2]), GaussianRat::real(rat_int(1))),
            ],
        )
        .unwrap();
        let support: Vec<_> = p.support().cloned().collect();
        assert_eq!(
            support,
            vec![MultiIndex::from_u64s(&[0, 2]), MultiIndex::from_u64s(&[1, 0])]
        );
    }
}
