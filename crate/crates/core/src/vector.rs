//! Vectors indexed by `d`-precolorings in lexicographic order.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Q};
use crate::precoloring::space;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CountVector {
    d: usize,
    entries: Vec<Q>,
}

impl CountVector {
    pub fn new(d: usize, entries: Vec<Q>) -> Result<Self> {
        let len = space(d)?.len();
        if entries.len() != len {
            return Err(Error::Input(format!(
                "vector for d = {d} needs {len} entries, got {}",
                entries.len()
            )));
        }
        Ok(CountVector { d, entries })
    }

    pub fn zero(d: usize) -> Result<Self> {
        Self::new(d, vec![Q::zero(); space(d)?.len()])
    }

    pub fn from_integers(d: usize, entries: &[BigInt]) -> Result<Self> {
        Self::new(d, linalg::to_q(entries))
    }

    pub fn from_counts(d: usize, entries: &[BigUint]) -> Result<Self> {
        Self::new(
            d,
            entries
                .iter()
                .map(|c| Q::from_integer(BigInt::from(c.clone())))
                .collect(),
        )
    }

    pub fn arity(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[Q] {
        &self.entries
    }

    pub fn get(&self, psi: usize) -> &Q {
        &self.entries[psi]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|x| !x.is_negative())
    }

    /// Entries as integers, if all of them are.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.entries
            .iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect()
    }

    /// `Σ_ψ self(ψ) · other(ψ)`.
    pub fn inner(&self, other: &CountVector) -> Result<Q> {
        if self.d != other.d {
            return Err(Error::ArityMismatch {
                left: self.d,
                right: other.d,
            });
        }
        Ok(linalg::dot_q(&self.entries, &other.entries))
    }

    /// `y` with `y(perm[ψ]) = x(ψ)`.
    pub(crate) fn permuted(&self, perm: &[usize]) -> CountVector {
        let mut out = vec![Q::zero(); self.entries.len()];
        for (i, x) in self.entries.iter().enumerate() {
            out[perm[i]] = x.clone();
        }
        CountVector {
            d: self.d,
            entries: out,
        }
    }
}
