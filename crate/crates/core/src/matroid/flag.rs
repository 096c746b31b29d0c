use super::subset;
use super::Matroid;
use crate::error::{Error, Result};

/// A flag matroid `(M_1, ..., M_k)`: common ground set, weakly increasing
/// ranks, and every flat of `M_i` a flat of `M_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlagMatroid(Vec<Matroid>);

impl FlagMatroid {
    pub fn new(mats: Vec<Matroid>) -> Result<Self> {
        let first = mats
            .first()
            .ok_or_else(|| Error::InvalidFlag("no constituents".into()))?;
        for (i, w) in mats.windows(2).enumerate() {
            if w[1].n1() != first.n1() {
                return Err(Error::InvalidFlag(format!(
                    "constituent {} has {} elements, expected {}",
                    i + 1,
                    w[1].n1(),
                    first.n1()
                )));
            }
            if w[0].rank() > w[1].rank() {
                return Err(Error::InvalidFlag(format!(
                    "ranks decrease between constituents {i} and {}",
                    i + 1
                )));
            }
            if let Some(f) = w[0].quotient_witness(&w[1]) {
                return Err(Error::InvalidFlag(format!(
                    "flat {:?} of constituent {i} is not a flat of constituent {}",
                    subset::elems(f),
                    i + 1
                )));
            }
        }
        Ok(FlagMatroid(mats))
    }

    pub(crate) fn new_unchecked(mats: Vec<Matroid>) -> Self {
        FlagMatroid(mats)
    }

    pub fn constituents(&self) -> &[Matroid] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn n1(&self) -> usize {
        self.0[0].n1()
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.0.iter().map(Matroid::rank).collect()
    }
}
