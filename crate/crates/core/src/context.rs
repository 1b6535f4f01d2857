//! The cyclic-quiver parameter `e` and residue arithmetic modulo `e`.

use crate::error::Error;
use std::fmt;

/// A residue in `Z/eZ`, always stored reduced into `{0, …, e−1}`.
///
/// Construction goes through [`CrystalContext::residue`] so a `Residue`
/// can never hold an out-of-range value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Residue(pub(crate) u32);

impl Residue {
    pub fn value(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Global parameters of the crystal: the integer `e ≥ 2`.
///
/// All residue arithmetic reduces immediately modulo `e`; the case
/// `e = ∞` is not representable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrystalContext {
    e: u32,
}

impl CrystalContext {
    pub fn new(e: i64) -> Result<Self, Error> {
        if e < 2 {
            return Err(Error::InvalidContext(e));
        }
        Ok(CrystalContext { e: e as u32 })
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    /// Reduce an arbitrary integer into `{0, …, e−1}`.
    pub fn residue(&self, x: i64) -> Residue {
        Residue(x.rem_euclid(self.e as i64) as u32)
    }

    /// All residues `0, 1, …, e−1` in order.
    pub fn residues(&self) -> impl Iterator<Item = Residue> {
        (0..self.e).map(Residue)
    }

    pub fn add(&self, r: Residue, k: i64) -> Residue {
        self.residue(r.0 as i64 + k)
    }

    pub fn succ(&self, r: Residue) -> Residue {
        self.add(r, 1)
    }

    pub fn pred(&self, r: Residue) -> Residue {
        self.add(r, -1)
    }

    pub fn neg(&self, r: Residue) -> Residue {
        self.residue(-(r.0 as i64))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_small_e() {
        assert!(CrystalContext::new(1).is_err());
        assert!(CrystalContext::new(0).is_err());
        assert!(CrystalContext::new(-3).is_err());
        assert!(CrystalContext::new(2).is_ok());
    }

    #[test]
    fn residue_reduction() {
        let ctx = CrystalContext::new(4).unwrap();
        assert_eq!(ctx.residue(7).value(), 3);
        assert_eq!(ctx.residue(-1).value(), 3);
        assert_eq!(ctx.residue(-8).value(), 0);
        assert_eq!(ctx.neg(ctx.residue(1)).value(), 3);
        assert_eq!(ctx.neg(ctx.residue(0)).value(), 0);
        let ctx2 = CrystalContext::new(2).unwrap();
        assert_eq!(ctx2.neg(ctx2.residue(1)).value(), 1);
    }
}
