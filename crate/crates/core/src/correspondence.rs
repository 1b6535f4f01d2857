//! Admissible multicharges for a multisegment and the inverse of the
//! embedding `f_v` (reconstruction of the FLOTW preimage).
//!
//! Reconstruction processes segment lengths in decreasing order and, within
//! a length, head classes one at a time. A new part of length `l` with head
//! `k` may go to any component whose next empty row has head residue `k`;
//! those candidate rows form a dominance chain ordered by `v_c − i_c`
//! descending (ties by component index ascending), and the parts must fill
//! a prefix of the chain. The result is post-verified against `f_v` —
//! failures are reported, never patched.

use crate::context::{CrystalContext, Residue};
use crate::error::Error;
use crate::fock::{f_v, MultiPartition};
use crate::infinity::eps_star_vector;
use crate::multicharge::Multicharge;
use crate::multisegment::{Multisegment, Segment};

/// The admissible multicharge of minimal level: `κ_i = ε*_i(ψ)` for all
/// `i`. Errors on the empty multisegment (level 0).
pub fn minimal_multicharge(ctx: &CrystalContext, ms: &Multisegment) -> Result<Multicharge, Error> {
    if ms.is_empty() {
        return Err(Error::EmptyMultisegment);
    }
    Multicharge::canonical(ctx, &eps_star_vector(ctx, ms))
}

/// `v` is admissible for `ψ` iff `κ_i(v) ≥ ε*_i(ψ)` for every residue.
pub fn is_admissible(ctx: &CrystalContext, v: &Multicharge, ms: &Multisegment) -> bool {
    check_admissible(ctx, v, ms).is_ok()
}

/// Like [`is_admissible`] but reports the first violated bound.
pub fn check_admissible(
    ctx: &CrystalContext,
    v: &Multicharge,
    ms: &Multisegment,
) -> Result<(), Error> {
    let kappa = v.kappa_vector(ctx);
    let eps_star = eps_star_vector(ctx, ms);
    for i in 0..kappa.len() {
        if kappa[i] < eps_star[i] {
            return Err(Error::Inadmissible {
                residue: i as u32,
                kappa: kappa[i],
                required: eps_star[i],
            });
        }
    }
    Ok(())
}

/// All canonical multicharges of level ≤ `max_level` admissible for `ψ`,
/// ordered by level then lexicographically.
pub fn enumerate_admissible(
    ctx: &CrystalContext,
    ms: &Multisegment,
    max_level: usize,
) -> Vec<Multicharge> {
    let eps_star = eps_star_vector(ctx, ms);
    let e = ctx.e() as usize;
    let mut out = Vec::new();
    // Depth-first over count vectors bounded by the remaining level budget.
    fn walk(
        counts: &mut Vec<usize>,
        i: usize,
        budget: usize,
        e: usize,
        eps_star: &[usize],
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == e {
            if counts.iter().sum::<usize>() >= 1 {
                out.push(counts.clone());
            }
            return;
        }
        let lo = eps_star[i];
        if lo > budget {
            return;
        }
        for c in lo..=budget {
            counts.push(c);
            walk(counts, i + 1, budget - c, e, eps_star, out);
            counts.pop();
        }
    }
    let mut counts_list = Vec::new();
    walk(
        &mut Vec::new(),
        0,
        max_level,
        e,
        &eps_star,
        &mut counts_list,
    );
    for counts in counts_list {
        out.push(Multicharge::canonical(ctx, &counts).expect("counts sum to at least 1"));
    }
    out.sort_by_key(|v| (v.level(), v.values().to_vec()));
    out
}

/// Reconstruct the unique FLOTW `λ` with `f_v(λ) = ψ`, given an admissible
/// multicharge.
pub fn reconstruct(
    ctx: &CrystalContext,
    ms: &Multisegment,
    v: &Multicharge,
) -> Result<MultiPartition, Error> {
    Ok(reconstruct_stages(ctx, ms, v)?
        .pop()
        .unwrap_or_else(|| MultiPartition::empty(v.level())))
}

/// Like [`reconstruct`], returning the intermediate multipartition after
/// each segment length (largest length first).
pub fn reconstruct_stages(
    ctx: &CrystalContext,
    ms: &Multisegment,
    v: &Multicharge,
) -> Result<Vec<MultiPartition>, Error> {
    let orders: Vec<Vec<Residue>> = ms
        .lengths_descending()
        .iter()
        .map(|&len| default_head_order(ctx, ms, len))
        .collect();
    reconstruct_stages_ordered(ctx, ms, v, &orders)
}

/// Distinct heads occurring at the given length, ascending.
pub fn heads_at_length(ctx: &CrystalContext, ms: &Multisegment, len: usize) -> Vec<Residue> {
    ctx.residues()
        .filter(|&h| ms.multiplicity(Segment::new(h, len)) > 0)
        .collect()
}

/// Default head-class processing order for one length: descending cyclic
/// order starting just below a missing head.
///
/// Consuming a head-`k` row of a component exposes a head-`k−1` row below
/// it, so class `k` must be handled before class `k−1`. Aperiodicity leaves
/// at least one head absent at every length, which breaks the cyclic
/// dependency; walking downward from the gap serves every class before the
/// classes its consumption exposes. (On non-aperiodic input there is no
/// gap; the ascending fallback then reaches the post-verification failure.)
pub fn default_head_order(ctx: &CrystalContext, ms: &Multisegment, len: usize) -> Vec<Residue> {
    let present = heads_at_length(ctx, ms, len);
    let Some(gap) = ctx.residues().find(|i| !present.contains(i)) else {
        return present;
    };
    (1..ctx.e())
        .map(|k| ctx.add(gap, -(k as i64)))
        .filter(|h| present.contains(h))
        .collect()
}

/// Reconstruction with an explicit head-class processing order per length
/// (lengths descending; `orders[t]` must be a permutation of the heads
/// occurring at the t-th length). The reconstructed multipartition does not
/// depend on the order; permutations either reproduce it or fail the
/// post-verification.
pub fn reconstruct_stages_ordered(
    ctx: &CrystalContext,
    ms: &Multisegment,
    v: &Multicharge,
    orders: &[Vec<Residue>],
) -> Result<Vec<MultiPartition>, Error> {
    let lengths = ms.lengths_descending();
    assert_eq!(lengths.len(), orders.len(), "one head order per length");
    let level = v.level();
    let mut comps: Vec<Vec<usize>> = vec![vec![]; level];
    let mut stages = Vec::with_capacity(lengths.len());

    for (t, &len) in lengths.iter().enumerate() {
        for &head in &orders[t] {
            let mult = ms.multiplicity(Segment::new(head, len));
            assert!(mult > 0, "head order lists a residue absent at this length");
            // Candidate components: next empty row has head residue `head`.
            // Chain order: v_c − i_c descending, then component ascending.
            let mut cands: Vec<(i64, usize)> = (0..level)
                .filter_map(|c| {
                    let next_row = comps[c].len() as i64 + 1;
                    let d = v.value(c) - next_row;
                    (ctx.residue(1 + d) == head).then_some((d, c))
                })
                .collect();
            cands.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
            if cands.len() < mult {
                return Err(Error::Reconstruction(format!(
                    "length {len}, head {head}: need {mult} rows but only {} components accept \
                     this residue (is the multicharge admissible?)",
                    cands.len()
                )));
            }
            for &(_, c) in &cands[..mult] {
                comps[c].push(len);
            }
        }
        stages.push(
            MultiPartition::new(comps.clone()).expect("parts are appended in decreasing order"),
        );
    }

    // Post-verification: the result must be FLOTW and map back to ψ.
    let result = stages
        .last()
        .cloned()
        .unwrap_or_else(|| MultiPartition::empty(level));
    let image = f_v(ctx, v, &result).map_err(|e| {
        Error::Reconstruction(format!("reconstructed multipartition rejected: {e}"))
    })?;
    if image != *ms {
        return Err(Error::Reconstruction(format!(
            "f_v of the reconstructed multipartition is {image}, expected {ms}"
        )));
    }
    Ok(stages)
}
