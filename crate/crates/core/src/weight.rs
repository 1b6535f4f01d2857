//! Classical weights: integer vectors in the basis of fundamental weights.

use crate::context::{CrystalContext, Residue};
use std::fmt;
use std::ops::{Add, Sub};

/// A classical weight `Σ_i c_i Λ_i`, stored as the coordinate vector
/// `(c_0, …, c_{e−1})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ClassicalWeight {
    coords: Vec<i64>,
}

impl ClassicalWeight {
    pub fn zero(ctx: &CrystalContext) -> Self {
        ClassicalWeight {
            coords: vec![0; ctx.e() as usize],
        }
    }

    pub fn from_coords(coords: Vec<i64>) -> Self {
        ClassicalWeight { coords }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn coord(&self, i: Residue) -> i64 {
        self.coords[i.value() as usize]
    }

    /// The simple root `α_j = 2Λ_j − Λ_{j−1} − Λ_{j+1}` as a classical
    /// weight. For `e = 2` the two `−1` contributions land on the same
    /// coordinate, giving `(…, 2 at j, −2 at j+1, …)`.
    pub fn simple_root(ctx: &CrystalContext, j: Residue) -> Self {
        let mut w = ClassicalWeight::zero(ctx);
        w.coords[j.value() as usize] += 2;
        w.coords[ctx.succ(j).value() as usize] -= 1;
        w.coords[ctx.pred(j).value() as usize] -= 1;
        w
    }
}

impl Add for ClassicalWeight {
    type Output = ClassicalWeight;
    fn add(self, rhs: ClassicalWeight) -> ClassicalWeight {
        assert_eq!(self.coords.len(), rhs.coords.len());
        ClassicalWeight {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for ClassicalWeight {
    type Output = ClassicalWeight;
    fn sub(self, rhs: ClassicalWeight) -> ClassicalWeight {
        assert_eq!(self.coords.len(), rhs.coords.len());
        ClassicalWeight {
            coords: self
                .coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl fmt::Display for ClassicalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_root_shapes() {
        let ctx4 = CrystalContext::new(4).unwrap();
        let a0 = ClassicalWeight::simple_root(&ctx4, ctx4.residue(0));
        assert_eq!(a0.coords(), &[2, -1, 0, -1]);
        let ctx2 = CrystalContext::new(2).unwrap();
        let b1 = ClassicalWeight::simple_root(&ctx2, ctx2.residue(1));
        assert_eq!(b1.coords(), &[-2, 2]);
    }
}
