//! Property-based tests: random crystal vertices are built by replaying
//! random residue paths from the empty multisegment, which stays inside
//! the aperiodic world by construction.

use multiseg::correspondence::{minimal_multicharge, reconstruct};
use multiseg::fock::{f_v, fock_f, is_flotw, MultiPartition};
use multiseg::infinity::{hat_e, hat_f, sharp, star, tau, tilde_e, tilde_f, weight, CrystalPath};
use multiseg::json::{MultiPartitionJson, MultisegmentJson};
use multiseg::multicharge::Multicharge;
use multiseg::parse::parse_multisegment;
use multiseg::weight::ClassicalWeight;
use multiseg::{CrystalContext, Multisegment};
use proptest::prelude::*;

fn replay(ctx: &CrystalContext, steps: &[i64]) -> Multisegment {
    steps.iter().rev().fold(Multisegment::empty(), |ms, &i| {
        tilde_f(ctx, &ms, ctx.residue(i))
    })
}

// (e, path) pairs; the path entries are reduced modulo e on use.
fn vertex_strategy(max_len: usize) -> impl Strategy<Value = (i64, Vec<i64>)> {
    (2i64..=5, prop::collection::vec(0i64..5, 0..max_len))
}

proptest! {
    // Property: replaying a path from ∅ lands on an aperiodic vertex whose
    // rank is the path length.
    #[test]
    fn replay_builds_vertices((e, steps) in vertex_strategy(10)) {
        let ctx = CrystalContext::new(e).unwrap();
        let ms = replay(&ctx, &steps);
        prop_assert_eq!(ms.rank(), steps.len());
        prop_assert!(ms.is_aperiodic(&ctx));
    }

    // Property: ẽ_i ∘ f̃_i = id and f̃_i ∘ ẽ_i = id where defined; same for
    // the hat pair.
    #[test]
    fn operators_invert((e, steps) in vertex_strategy(10), i in 0i64..5) {
        let ctx = CrystalContext::new(e).unwrap();
        let ms = replay(&ctx, &steps);
        let i = ctx.residue(i);
        prop_assert_eq!(tilde_e(&ctx, &tilde_f(&ctx, &ms, i), i), Some(ms.clone()));
        prop_assert_eq!(hat_e(&ctx, &hat_f(&ctx, &ms, i), i), Some(ms.clone()));
        if let Some(up) = tilde_e(&ctx, &ms, i) {
            prop_assert_eq!(tilde_f(&ctx, &up, i), ms.clone());
        }
        if let Some(up) = hat_e(&ctx, &ms, i) {
            prop_assert_eq!(hat_f(&ctx, &up, i), ms);
        }
    }

    // Property: ρ conjugates the two operator families, ρ∘f̃_i = f̂_{−i}∘ρ.
    #[test]
    fn rho_conjugates((e, steps) in vertex_strategy(10), i in 0i64..5) {
        let ctx = CrystalContext::new(e).unwrap();
        let ms = replay(&ctx, &steps);
        let i = ctx.residue(i);
        prop_assert_eq!(
            tilde_f(&ctx, &ms, i).rho(&ctx),
            hat_f(&ctx, &ms.rho(&ctx), ctx.neg(i))
        );
    }

    // Property: lowering drops the weight by a simple root.
    #[test]
    fn weight_step((e, steps) in vertex_strategy(10), i in 0i64..5) {
        let ctx = CrystalContext::new(e).unwrap();
        let ms = replay(&ctx, &steps);
        let i = ctx.residue(i);
        prop_assert_eq!(
            weight(&ctx, &tilde_f(&ctx, &ms, i)),
            weight(&ctx, &ms) - ClassicalWeight::simple_root(&ctx, i)
        );
    }

    // Property: ∗ and ♯ are involutions with ∗ = ρ∘♯ = ♯∘ρ = τ.
    #[test]
    fn involutions_interplay((e, steps) in vertex_strategy(8)) {
        let ctx = CrystalContext::new(e).unwrap();
        let ms = replay(&ctx, &steps);
        let st = star(&ctx, &ms);
        prop_assert_eq!(star(&ctx, &st), ms.clone());
        let sh = sharp(&ctx, &ms);
        prop_assert_eq!(sharp(&ctx, &sh), ms.clone());
        prop_assert_eq!(st.clone(), sh.rho(&ctx));
        prop_assert_eq!(st.clone(), sharp(&ctx, &ms.rho(&ctx)));
        prop_assert_eq!(st, tau(&ctx, &ms));
    }

    // Property: a replayed path is a valid raising path certificate.
    #[test]
    fn path_certificate((e, steps) in vertex_strategy(10)) {
        let ctx = CrystalContext::new(e).unwrap();
        let residues: Vec<_> = steps.iter().map(|&i| ctx.residue(i)).collect();
        let ms = replay(&ctx, &steps);
        let path = CrystalPath::new(residues);
        prop_assert_eq!(multiseg::infinity::replay_tilde(&ctx, &path), ms);
    }

    // Property: text and JSON forms round-trip losslessly.
    #[test]
    fn serialization_round_trips((e, steps) in vertex_strategy(10)) {
        let ctx = CrystalContext::new(e).unwrap();
        let ms = replay(&ctx, &steps);
        let text = ms.to_string();
        prop_assert_eq!(parse_multisegment(&text, &ctx).unwrap(), ms.clone());
        let json = serde_json::to_string(&MultisegmentJson::encode(&ctx, &ms)).unwrap();
        let decoded: MultisegmentJson = serde_json::from_str(&json).unwrap();
        let (ctx2, back) = decoded.decode().unwrap();
        prop_assert_eq!(ctx2.e(), ctx.e());
        prop_assert_eq!(back, ms);
    }

    // Property: random walks in a Fock crystal stay FLOTW, embed
    // compatibly and reconstruct back.
    #[test]
    fn fock_walks_embed_and_reconstruct(
        (e, steps) in vertex_strategy(8),
        counts in prop::collection::vec(0usize..2, 5),
    ) {
        let ctx = CrystalContext::new(e).unwrap();
        let mut counts = counts[..e as usize].to_vec();
        if counts.iter().all(|&c| c == 0) {
            counts[0] = 1;
        }
        let v = Multicharge::canonical(&ctx, &counts).unwrap();
        let mut lambda = MultiPartition::empty(v.level());
        for &raw in &steps {
            if let Some(next) = fock_f(&ctx, &v, &lambda, ctx.residue(raw)) {
                lambda = next;
            }
        }
        prop_assert!(is_flotw(&ctx, &v, &lambda).unwrap());
        let psi = f_v(&ctx, &v, &lambda).unwrap();
        prop_assert!(psi.is_aperiodic(&ctx));
        prop_assert_eq!(reconstruct(&ctx, &psi, &v).unwrap(), lambda.clone());
        let json = serde_json::to_string(&MultiPartitionJson::encode(&lambda)).unwrap();
        let decoded: MultiPartitionJson = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(decoded.decode().unwrap(), lambda.clone());
        if !psi.is_empty() {
            let minimal = minimal_multicharge(&ctx, &psi).unwrap();
            prop_assert!(minimal.level() <= v.level());
        }
    }
}
