//! The generalized Mullineux involution, the multipartition route to `♯`
//! and `∗`, and the Kamnitzer–Tingley crystal commutor.

use crate::context::CrystalContext;
use crate::correspondence::{check_admissible, minimal_multicharge, reconstruct};
use crate::error::Error;
use crate::fock::{f_v, fock_eps_vector, fock_raising_path, fock_replay, is_flotw, MultiPartition};
use crate::infinity::{eps_star_vector, star};
use crate::multicharge::Multicharge;
use crate::multisegment::Multisegment;

/// `v♯`: negate all entries and renormalize to the canonical residue-sorted
/// member of `V_l`, so `κ_i(v♯) = κ_{−i mod e}(v)`.
pub fn charge_sharp(ctx: &CrystalContext, v: &Multicharge) -> Multicharge {
    let kappa = v.kappa_vector(ctx);
    let e = ctx.e() as usize;
    let counts: Vec<usize> = (0..e).map(|i| kappa[(e - i) % e]).collect();
    Multicharge::canonical(ctx, &counts).expect("level is preserved")
}

/// The generalized Mullineux involution `m_l^v : Φ_e(v) → Φ_e(v♯)`, the
/// skew crystal isomorphism induced by the symmetry `i ↔ −i`: lower `λ` to
/// the empty multipartition, then replay the path in `B_e(v♯)` with every
/// residue negated.
pub fn mullineux(
    ctx: &CrystalContext,
    v: &Multicharge,
    lambda: &MultiPartition,
) -> Result<MultiPartition, Error> {
    if !is_flotw(ctx, v, lambda)? {
        return Err(Error::NotFlotw(format!(
            "{lambda} is not FLOTW for multicharge ({v})"
        )));
    }
    let path = fock_raising_path(ctx, v, lambda);
    let negated =
        crate::infinity::CrystalPath::new(path.steps().iter().map(|&i| ctx.neg(i)).collect());
    let sharp_charge = charge_sharp(ctx, v);
    let image = fock_replay(ctx, &sharp_charge, &negated)
        .expect("the skew isomorphism is total; a vanishing replay step is a logic bug");
    Ok(image)
}

/// `ψ♯` computed through multipartitions: reconstruct over the minimal
/// multicharge, apply the Mullineux involution, embed back with the
/// sharpened charge. Agrees with [`crate::infinity::sharp`].
pub fn sharp_pipeline(ctx: &CrystalContext, ms: &Multisegment) -> Result<Multisegment, Error> {
    if ms.is_empty() {
        return Ok(Multisegment::empty());
    }
    let v = minimal_multicharge(ctx, ms)?;
    let lambda = reconstruct(ctx, ms, &v)?;
    let mu = mullineux(ctx, &v, &lambda)?;
    let sharp_charge = charge_sharp(ctx, &v);
    let image = f_v(ctx, &sharp_charge, &mu)?;
    // The sharpened minimal charge must be minimal for the image.
    assert_eq!(
        sharp_charge.kappa_vector(ctx),
        eps_star_vector(ctx, &image),
        "κ(v♯) ≠ ε*(ψ♯): sharp pipeline produced an inconsistent image"
    );
    Ok(image)
}

/// `ψ* = ρ(ψ♯)` computed through the multipartition route; agrees with
/// [`crate::infinity::star`].
pub fn star_via_pipeline(ctx: &CrystalContext, ms: &Multisegment) -> Result<Multisegment, Error> {
    Ok(sharp_pipeline(ctx, ms)?.rho(ctx))
}

/// A highest-weight vertex `∅ ⊗ λ` of `B_e(v) ⊗ B_e(v′)`: a FLOTW `λ` for
/// `v′` with `ε_i(λ) ≤ κ_i(v)` for every residue.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HighestWeightVertex {
    left_charge: Multicharge,
    right_charge: Multicharge,
    lambda: MultiPartition,
}

impl HighestWeightVertex {
    pub fn new(
        ctx: &CrystalContext,
        left_charge: Multicharge,
        right_charge: Multicharge,
        lambda: MultiPartition,
    ) -> Result<Self, Error> {
        if !is_flotw(ctx, &right_charge, &lambda)? {
            return Err(Error::NotFlotw(format!(
                "{lambda} is not FLOTW for multicharge ({right_charge})"
            )));
        }
        let eps = fock_eps_vector(ctx, &right_charge, &lambda);
        let kappa = left_charge.kappa_vector(ctx);
        for i in 0..eps.len() {
            if eps[i] > kappa[i] {
                return Err(Error::Inadmissible {
                    residue: i as u32,
                    kappa: kappa[i],
                    required: eps[i],
                });
            }
        }
        Ok(HighestWeightVertex {
            left_charge,
            right_charge,
            lambda,
        })
    }

    pub fn left_charge(&self) -> &Multicharge {
        &self.left_charge
    }

    pub fn right_charge(&self) -> &Multicharge {
        &self.right_charge
    }

    pub fn lambda(&self) -> &MultiPartition {
        &self.lambda
    }
}

/// All highest-weight vertices of `B_e(v) ⊗ B_e(v′)` with `rank(λ) ≤
/// max_rank`, ordered by rank then by the multipartition.
pub fn hw_vertices(
    ctx: &CrystalContext,
    left: &Multicharge,
    right: &Multicharge,
    max_rank: usize,
) -> Vec<HighestWeightVertex> {
    let graph = crate::graph::generate_fock(ctx, right, max_rank);
    let mut vertices: Vec<MultiPartition> = graph.vertices;
    vertices.sort_by_key(|mp| (mp.rank(), mp.clone()));
    vertices
        .into_iter()
        .filter_map(|lambda| {
            HighestWeightVertex::new(ctx, left.clone(), right.clone(), lambda).ok()
        })
        .collect()
}

/// The crystal commutor on highest-weight vertices:
/// `σ_{v,v′}(∅ ⊗ λ) = ∅ ⊗ λ*` where `λ* = f_v⁻¹((f_{v′}λ)*)`.
pub fn commutor(ctx: &CrystalContext, h: &HighestWeightVertex) -> HighestWeightVertex {
    let psi = f_v(ctx, &h.right_charge, &h.lambda).expect("λ is FLOTW by construction");
    let psi_star = star(ctx, &psi);
    check_admissible(ctx, &h.left_charge, &psi_star)
        .expect("ε_i(λ) ≤ κ_i(v) makes v admissible for ψ*; failure is a logic bug");
    let lambda_star = reconstruct(ctx, &psi_star, &h.left_charge)
        .expect("reconstruction over an admissible multicharge");
    HighestWeightVertex::new(
        ctx,
        h.right_charge.clone(),
        h.left_charge.clone(),
        lambda_star,
    )
    .expect("σ lands in H_{v′,v}; failure is a logic bug")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::infinity::sharp;
    use crate::parse::{parse_multicharge, parse_multipartition, parse_multisegment};

    fn ctx4() -> CrystalContext {
        CrystalContext::new(4).unwrap()
    }

    #[test]
    fn charge_sharp_examples() {
        let ctx = ctx4();
        let v = parse_multicharge("0,0,1", &ctx).unwrap();
        assert_eq!(charge_sharp(&ctx, &v).to_string(), "0,0,3");
        let v5 = parse_multicharge("0,0,1,2,3", &ctx).unwrap();
        assert_eq!(charge_sharp(&ctx, &v5).to_string(), "0,0,1,2,3");
        let ctx2 = CrystalContext::new(2).unwrap();
        let w = parse_multicharge("0,1", &ctx2).unwrap();
        assert_eq!(charge_sharp(&ctx2, &w), w);
    }

    #[test]
    fn mullineux_empty_and_worked_example() {
        let ctx = ctx4();
        let v = parse_multicharge("0,0,1", &ctx).unwrap();
        let empty = MultiPartition::empty(3);
        assert_eq!(mullineux(&ctx, &v, &empty).unwrap(), empty);

        let lambda = parse_multipartition("6.5.2|5.3.1|4.3.3").unwrap();
        let mu = mullineux(&ctx, &v, &lambda).unwrap();
        let sharp_charge = charge_sharp(&ctx, &v);
        let image = f_v(&ctx, &sharp_charge, &mu).unwrap();
        let psi =
            parse_multisegment("[0;6)+[0;5)+[3;5)+[1;4)+2*[3;3)+[0;3)+[2;2)+[2;1)", &ctx).unwrap();
        assert_eq!(image, sharp(&ctx, &psi));
        // Skew involution: applying m over v♯ returns λ.
        assert_eq!(mullineux(&ctx, &sharp_charge, &mu).unwrap(), lambda);
    }

    #[test]
    fn pipeline_agrees_on_small_input() {
        let ctx = ctx4();
        let psi = parse_multisegment("[1;1)", &ctx).unwrap();
        assert_eq!(
            sharp_pipeline(&ctx, &psi).unwrap(),
            parse_multisegment("[3;1)", &ctx).unwrap()
        );
        assert_eq!(
            sharp_pipeline(&ctx, &Multisegment::empty()).unwrap(),
            Multisegment::empty()
        );
        assert_eq!(star_via_pipeline(&ctx, &psi).unwrap(), star(&ctx, &psi));
    }

    #[test]
    fn commutor_fixes_the_empty_vertex() {
        let ctx = ctx4();
        let v = parse_multicharge("0", &ctx).unwrap();
        let w = parse_multicharge("1", &ctx).unwrap();
        let h =
            HighestWeightVertex::new(&ctx, v.clone(), w.clone(), MultiPartition::empty(1)).unwrap();
        let out = commutor(&ctx, &h);
        assert_eq!(out.left_charge(), &w);
        assert_eq!(out.right_charge(), &v);
        assert!(out.lambda().is_empty());
    }

    #[test]
    fn hw_vertices_level_one() {
        let ctx = ctx4();
        let v = parse_multicharge("0", &ctx).unwrap();
        let hws = hw_vertices(&ctx, &v, &v, 1);
        let texts: Vec<String> = hws.iter().map(|h| h.lambda().to_string()).collect();
        assert_eq!(texts, vec!["-", "1"]);
    }
}
