use crate::ratlin::Subspace;
use crate::Result;

/// A pair of subspaces `(X ⊆ n, Y ⊆ q)` of a crossed module's components.
///
/// The parent crossed module is not stored; operations take it explicitly.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubPair {
    pub top: Subspace,
    pub base: Subspace,
}

impl SubPair {
    pub fn new(top: Subspace, base: Subspace) -> Self {
        SubPair { top, base }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.top.dim(), self.base.dim())
    }

    pub fn is_zero(&self) -> bool {
        self.top.is_zero() && self.base.is_zero()
    }

    pub fn is_within(&self, other: &SubPair) -> Result<bool> {
        Ok(self.top.is_subspace_of(&other.top)? && self.base.is_subspace_of(&other.base)?)
    }

    pub fn sum(&self, other: &SubPair) -> Result<SubPair> {
        Ok(SubPair::new(self.top.sum(&other.top)?, self.base.sum(&other.base)?))
    }

    pub fn intersection(&self, other: &SubPair) -> Result<SubPair> {
        Ok(SubPair::new(
            self.top.intersection(&other.top)?,
            self.base.intersection(&other.base)?,
        ))
    }
}
