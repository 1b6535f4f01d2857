//! Tensor products of two Fock crystals, just enough for the
//! highest-weight-vertex oracle: the standard rules
//!
//! ```text
//! f̃_i(u ⊗ w) = f̃_i(u) ⊗ w   if φ_i(u) >  ε_i(w),   else u ⊗ f̃_i(w)
//! ẽ_i(u ⊗ w) = u ⊗ ẽ_i(w)   if φ_i(u) <  ε_i(w),   else ẽ_i(u) ⊗ w
//! ```

use crate::context::{CrystalContext, Residue};
use crate::fock::{fock_e, fock_eps, fock_f, fock_phi, MultiPartition};
use crate::multicharge::Multicharge;

/// A vertex `u ⊗ w` of `B_e(v) ⊗ B_e(v′)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct TensorVertex {
    pub left: MultiPartition,
    pub right: MultiPartition,
}

pub fn tensor_f(
    ctx: &CrystalContext,
    left_charge: &Multicharge,
    right_charge: &Multicharge,
    t: &TensorVertex,
    i: Residue,
) -> Option<TensorVertex> {
    if fock_phi(ctx, left_charge, &t.left, i) > fock_eps(ctx, right_charge, &t.right, i) {
        Some(TensorVertex {
            left: fock_f(ctx, left_charge, &t.left, i)?,
            right: t.right.clone(),
        })
    } else {
        Some(TensorVertex {
            left: t.left.clone(),
            right: fock_f(ctx, right_charge, &t.right, i)?,
        })
    }
}

pub fn tensor_e(
    ctx: &CrystalContext,
    left_charge: &Multicharge,
    right_charge: &Multicharge,
    t: &TensorVertex,
    i: Residue,
) -> Option<TensorVertex> {
    if fock_phi(ctx, left_charge, &t.left, i) < fock_eps(ctx, right_charge, &t.right, i) {
        Some(TensorVertex {
            left: t.left.clone(),
            right: fock_e(ctx, right_charge, &t.right, i)?,
        })
    } else {
        Some(TensorVertex {
            left: fock_e(ctx, left_charge, &t.left, i)?,
            right: t.right.clone(),
        })
    }
}

/// `ẽ_i(u ⊗ w) = 0` for every residue.
pub fn is_highest_weight(
    ctx: &CrystalContext,
    left_charge: &Multicharge,
    right_charge: &Multicharge,
    t: &TensorVertex,
) -> bool {
    ctx.residues()
        .all(|i| tensor_e(ctx, left_charge, right_charge, t, i).is_none())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_tensor_vertex_is_highest_weight() {
        let ctx = CrystalContext::new(3).unwrap();
        let v = Multicharge::new(&ctx, vec![0]).unwrap();
        let w = Multicharge::new(&ctx, vec![1, 2]).unwrap();
        let t = TensorVertex {
            left: MultiPartition::empty(1),
            right: MultiPartition::empty(2),
        };
        assert!(is_highest_weight(&ctx, &v, &w, &t));
        // f then e is the identity around the tensor rule.
        for i in ctx.residues() {
            let down = tensor_f(&ctx, &v, &w, &t, i).unwrap();
            assert_eq!(tensor_e(&ctx, &v, &w, &down, i), Some(t.clone()));
        }
    }
}
