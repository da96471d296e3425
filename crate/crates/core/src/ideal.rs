//! Monomial ideals in canonical minimal form.
//!
//! A [`MonomialIdeal`] stores the unique set of `⪯`-minimal generator
//! exponents, sorted lexicographically. The zero ideal is rejected at
//! construction; the unit ideal is represented by the single generator
//! `(0,…,0)`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::index::MultiIndex;
use crate::parse::render_ideal;

/// Returns the `⪯`-minimal elements of a non-empty set of exponent vectors.
/// The result generates the same monomial ideal, is pairwise incomparable,
/// and comes out lex-sorted. Idempotent.
pub fn minimalize(gens: &[MultiIndex]) -> Result<Vec<MultiIndex>> {
    if gens.is_empty() {
        return Err(Error::EmptySet);
    }
    let dim = gens[0].dim();
    for g in gens {
        if g.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: g.dim(),
            });
        }
    }

    // Sort by total degree so a candidate can only be dominated by an
    // element already kept; dedup removes exact copies up front.
    let mut sorted: Vec<&MultiIndex> = gens.iter().collect();
    sorted.sort_by(|a, b| (a.total_degree(), *a).cmp(&(b.total_degree(), *b)));
    sorted.dedup();

    let mut kept: Vec<MultiIndex> = Vec::new();
    'candidates: for g in sorted {
        for k in &kept {
            if k.leq(g) {
                continue 'candidates;
            }
        }
        kept.push(g.clone());
    }
    kept.sort();
    Ok(kept)
}

/// A monomial ideal, described by its canonical minimal generating set.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "IdealRepr")]
pub struct MonomialIdeal {
    #[serde(rename = "n")]
    dim: usize,
    generators: Vec<MultiIndex>,
}

#[derive(Deserialize)]
struct IdealRepr {
    n: usize,
    generators: Vec<MultiIndex>,
}

impl TryFrom<IdealRepr> for MonomialIdeal {
    type Error = Error;

    fn try_from(repr: IdealRepr) -> Result<Self> {
        MonomialIdeal::new(repr.n, repr.generators)
    }
}

impl MonomialIdeal {
    /// Builds the canonical ideal generated by `gens` in ambient dimension
    /// `dim`. Rejects dimension zero, an empty generating set (the zero
    /// ideal), and mis-sized exponent vectors.
    pub fn new(dim: usize, gens: impl IntoIterator<Item = MultiIndex>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDimension);
        }
        let gens: Vec<MultiIndex> = gens.into_iter().collect();
        if gens.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        for g in &gens {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: g.dim(),
                });
            }
        }
        Ok(MonomialIdeal {
            dim,
            generators: minimalize(&gens)?,
        })
    }

    /// The unit ideal `(1)`.
    pub fn unit(dim: usize) -> Self {
        MonomialIdeal::new(dim, [MultiIndex::zero(dim)]).expect("unit ideal is always valid")
    }

    /// The principal ideal generated by a single monomial.
    pub fn principal(gen: MultiIndex) -> Result<Self> {
        let dim = gen.dim();
        MonomialIdeal::new(dim, [gen])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Canonical minimal generators, lex-sorted.
    pub fn generators(&self) -> &[MultiIndex] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_zero()
    }

    /// Monomial membership: `β ∈ a` iff some generator divides `z^β`.
    pub fn contains_monomial(&self, beta: &MultiIndex) -> bool {
        self.generators.iter().any(|g| g.leq(beta))
    }

    /// Ideal containment `b ⊆ self`: every generator of `b` must be
    /// divisible by some generator of `self`.
    pub fn contains_ideal(&self, b: &MonomialIdeal) -> Result<bool> {
        if self.dim != b.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: b.dim,
            });
        }
        Ok(b.generators.iter().all(|g| self.contains_monomial(g)))
    }

    /// Product ideal: minimalized pairwise sums of generators.
    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: other.dim,
            });
        }
        let mut sums = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                sums.push(a.add(b)?);
            }
        }
        MonomialIdeal::new(self.dim, sums)
    }

    /// Power ideal `a^j`, with `a^0` the unit ideal by convention.
    pub fn pow(&self, j: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(self.dim);
        for _ in 0..j {
            acc = acc.product(self).expect("same dimension by construction");
        }
        acc
    }

    /// Componentwise maximum of the generators: the box `Π [0, M_j]`
    /// encloses every minimal generator of any ideal squeezed between
    /// `self` and its closure.
    pub fn max_exponents(&self) -> Vec<BigUint> {
        let mut maxes = vec![BigUint::zero(); self.dim];
        for g in &self.generators {
            for (m, c) in maxes.iter_mut().zip(g.components()) {
                if c > m {
                    *m = c.clone();
                }
            }
        }
        maxes
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", render_ideal(self))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", render_ideal(self))
    }
}
