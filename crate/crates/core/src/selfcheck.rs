//! Exhaustive invariant suites over BFS-generated crystals, together with
//! the independent brute-force enumerators they are checked against.
//!
//! Every suite takes the context and a rank bound and returns `Ok(summary)`
//! or `Err(counterexample)`. The CLI `selfcheck` command runs all of them;
//! the acceptance tests run them at pinned parameters.

use crate::context::{CrystalContext, Residue};
use crate::correspondence::{
    enumerate_admissible, heads_at_length, is_admissible, minimal_multicharge, reconstruct,
    reconstruct_stages_ordered,
};
use crate::fock::{f_v, fock_eps_vector, fock_f, is_flotw, MultiPartition};
use crate::graph::{generate_fock, generate_infinity};
use crate::infinity::{
    eps_star_vector, eps_vector, hat_e, hat_f, replay_hat, sharp, star, stats, tau, tilde_e,
    tilde_f, weight,
};
use crate::involution::{charge_sharp, commutor, hw_vertices, mullineux};
use crate::multicharge::Multicharge;
use crate::multisegment::{Multisegment, Segment};
use crate::parse::parse_multisegment;
use crate::tensor::{is_highest_weight, tensor_e, tensor_f, TensorVertex};
use crate::weight::ClassicalWeight;
use std::collections::{BTreeSet, HashMap};

/// Outcome of one invariant suite.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Check = fn(&CrystalContext, usize) -> Result<String, String>;

/// Run every invariant suite at the given rank bound.
pub fn run_all(ctx: &CrystalContext, max_rank: usize) -> Vec<CheckReport> {
    let checks: &[(&'static str, Check)] = &[
        ("vertex set = aperiodic filter", check_vertex_sets),
        ("parse/format round-trip", check_parse_roundtrip),
        ("rho involution", check_rho),
        ("operator inverse pairs", check_operator_inverses),
        ("rho conjugation of tilde/hat", check_rho_conjugation),
        ("crystal statistics", check_stats),
        ("star vs hat operators", check_star_theorem),
        ("involution identities", check_involutions),
        ("star path independence", check_star_path_independence),
        ("commutation dichotomies", check_commutation),
        ("fock crystal and embedding", check_fock),
        ("reconstruction round-trips", check_reconstruction),
        ("mullineux involution", check_mullineux),
        ("sharp/star pipelines", check_pipeline),
        ("tensor highest-weight oracle", check_tensor_oracle),
        ("crystal commutor", check_commutor),
    ];
    checks
        .iter()
        .map(|(name, f)| match f(ctx, max_rank) {
            Ok(detail) => CheckReport {
                name,
                passed: true,
                detail,
            },
            Err(detail) => CheckReport {
                name,
                passed: false,
                detail,
            },
        })
        .collect()
}

// ---------------------------------------------------------------------
// Brute-force enumerators (independent of the BFS implementations).

/// All multisegments of rank exactly `n`, aperiodic or not.
pub fn all_multisegments(ctx: &CrystalContext, n: usize) -> Vec<Multisegment> {
    let mut kinds = Vec::new();
    for length in 1..=n {
        for head in ctx.residues() {
            kinds.push(Segment::new(head, length));
        }
    }
    let mut out = Vec::new();
    let mut current = Multisegment::empty();
    fn walk(
        kinds: &[Segment],
        k: usize,
        budget: usize,
        current: &mut Multisegment,
        out: &mut Vec<Multisegment>,
    ) {
        if budget == 0 {
            out.push(current.clone());
            return;
        }
        if k == kinds.len() {
            return;
        }
        let seg = kinds[k];
        let max_mult = budget / seg.length();
        for m in 0..=max_mult {
            if m > 0 {
                current.insert(seg, 1);
            }
            walk(kinds, k + 1, budget - m * seg.length(), current, out);
        }
        for _ in 0..max_mult {
            current.remove_one(seg);
        }
    }
    walk(&kinds, 0, n, &mut current, &mut out);
    out
}

/// All aperiodic multisegments of rank exactly `n`.
pub fn all_aperiodic(ctx: &CrystalContext, n: usize) -> Vec<Multisegment> {
    all_multisegments(ctx, n)
        .into_iter()
        .filter(|ms| ms.is_aperiodic(ctx))
        .collect()
}

/// All partitions of `n` with parts ≤ `max_part`.
fn partitions_bounded(n: usize, max_part: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max_part)).rev() {
        for mut rest in partitions_bounded(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All `level`-multipartitions of rank exactly `n`.
pub fn all_multipartitions(level: usize, n: usize) -> Vec<MultiPartition> {
    fn walk(level: usize, n: usize, acc: &mut Vec<Vec<usize>>, out: &mut Vec<MultiPartition>) {
        if level == 0 {
            if n == 0 {
                out.push(
                    MultiPartition::new(acc.clone()).expect("enumerated partitions are valid"),
                );
            }
            return;
        }
        for k in 0..=n {
            for p in partitions_bounded(k, k.max(1)) {
                acc.push(p);
                walk(level - 1, n - k, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    walk(level, n, &mut Vec::new(), &mut out);
    out
}

// ---------------------------------------------------------------------
// Shared helpers.

fn infinity_vertices(ctx: &CrystalContext, max_rank: usize) -> Vec<Multisegment> {
    generate_infinity(ctx, max_rank).vertices
}

struct StarMemo<'a> {
    ctx: &'a CrystalContext,
    map: HashMap<Multisegment, Multisegment>,
}

impl<'a> StarMemo<'a> {
    fn new(ctx: &'a CrystalContext) -> Self {
        StarMemo {
            ctx,
            map: HashMap::new(),
        }
    }

    fn star(&mut self, ms: &Multisegment) -> Multisegment {
        if let Some(hit) = self.map.get(ms) {
            return hit.clone();
        }
        let image = star(self.ctx, ms);
        self.map.insert(ms.clone(), image.clone());
        image
    }
}

fn canonical_charges_up_to(ctx: &CrystalContext, max_level: usize) -> Vec<Multicharge> {
    (1..=max_level)
        .flat_map(|l| Multicharge::all_canonical(ctx, l))
        .collect()
}

struct SplitMix64(u64);

impl SplitMix64 {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

// ---------------------------------------------------------------------
// Suites.

/// The BFS vertex set of `B_e(∞)` at each rank equals the brute-force
/// enumeration of aperiodic multisegments.
pub fn check_vertex_sets(ctx: &CrystalContext, max_rank: usize) -> Result<String, String> {
    let vertices = infinity_vertices(ctx, max_rank);
    let mut total = 0usize;
    for n in 0..=max_rank {
        let bfs: BTreeSet<Multisegment> =
            vertices.iter().filter(|v| v.rank() == n).cloned().collect();
        let filter: BTreeSet<Multisegment> = all_aperiodic(ctx, n).into_iter().collect();
        if bfs != filter {
            return Err(format!(
                "rank {n}: BFS has {} vertices, the aperiodic filter {}",
                bfs.len(),
                filter.len()
            ));
        }
        total += bfs.len();
    }
    Ok(format!("{total} vertices agree up to rank {max_rank}"))
}

pub fn check_parse_roundtrip(ctx: &CrystalContext, max_rank: usize) -> Result<String, String> {
    let vertices = infinity_vertices(ctx, max_rank);
    for v in &vertices {
        let text = v.to_string();
        match parse_multisegment(&text, ctx) {
            Ok(back) if back == *v => {}
            Ok(back) => return Err(format!("'{text}' re-parsed as '{back}'")),
            Err(e) => return Err(format!("'{text}' failed to parse: {e}")),
        }
        // Tail/head duality: writing each segment as (l;t] parses back to
        // the same segment in head form.
        for (seg, _) in v.entries() {
            let tail_text = format!("({};{}]", seg.length(), seg.tail(ctx));
            match parse_multisegment(&tail_text, ctx) {
                Ok(single) if single == Multisegment::from_segments([seg]) => {}
                other => {
                    return Err(format!("tail form '{tail_text}' parsed as {other:?}"));
                }
            }
        }
    }
    Ok(format!("{} canonical forms round-trip", vertices.len()))
}

/// `ρ∘ρ = id`, rank and aperiodicity preserved — over all multisegments,
/// not only crystal vertices.
pub fn check_rho(ctx: &CrystalContext, max_rank: usize) -> Result<String, String> {
    let mut total = 0usize;
    for n in 0..=max_rank {
        for ms in all_multisegments(ctx, n) {
            let r = ms.rho(ctx);
            if r.rho(ctx) != ms {
                return Err(format!("ρ∘ρ ≠ id at {ms}"));
            }
            if r.rank() != ms.rank() {
                return Err(format!("ρ changed the rank of {ms}"));
            }
            if r.is_aperiodic(ctx) != ms.is_aperiodic(ctx) {
                return Err(format!("ρ changed aperiodicity of {ms}"));
            }
            total += 1;
        }
    }
    Ok(format!("{total} multisegments checked"))
}

pub fn check_operator_inverses(ctx: &CrystalContext, max_rank: usize) -> Result<String, String> {
    let vertices = infinity_vertices(ctx, max_rank);
    for v in &vertices {
        for i in ctx.residues() {
            let down = tilde_f(ctx, v, i);
            if tilde_e(ctx, &down, i).as_ref() != Some(v) {
                return Err(format!("ẽ_{i}(f̃_{i}({v})) ≠ identity"));
            }
            if let Some(up) = tilde_e(ctx, v, i) {
                if tilde_f(ctx, &up, i) != *v {
                    return Err(format!("f̃_{i}(ẽ_{i}({v})) ≠ identity"));
                }
            }
            let down = hat_f(ctx, v, i);
            if hat_e(ctx, &down, i).as_ref() != Some(v) {
                return Err(format!("ê_{i}(f̂_{i}({v})) ≠ identity"));
            }
            if let Some(up) = hat_e(ctx, v, i) {
                if hat_f(ctx, &up, i) != *v {
                    return Err(format!("f̂_{i}(ê_{i}({v})) ≠ identity"));
                }
            }
        }
    }
    Ok(format!("{} vertices checked", vertices.len()))
}

/// `ρ(f̃_i ψ) = f̂_{−i}(ρψ)` and the same for the raising operators.
pub fn check_rho_conjugation(ctx: &CrystalContext, max_rank: usize) -> Result<String, String> {
    let vertices = infinity_vertices(ctx, max_rank);
    for v in &vertices {
        let vr = v.rho(ctx);
        for i in ctx.residues() {
            let ni = ctx.neg(i);
            if tilde_f(ctx, v, i).rho(ctx) != hat_f(ctx, &vr, ni) {
                return Err(format!("ρ(f̃_{i}({v})) ≠ f̂_{ni}(ρψ)"));
            }
            let lhs = tilde_e(ctx, v, i).map(|m| m.rho(ctx));
            let rhs = hat_e(ctx, &vr, ni);
            if lhs != rhs {
                return Err(format!("ρ(ẽ_{i}({v})) ≠ ê_{ni}(ρψ)"));
            }
        }
    }
    Ok(format!("{} vertices checked", vertices.len()))
}

/// The statistics agree with direct operator iteration, and the weight
/// obeys `wt(f̃_i ψ) = wt(ψ) − α_i`.
pub fn check_stats(ctx: &CrystalContext, max_rank: usize) -> Result<String, String> {
    let vertices = infinity_vertices(ctx, max_rank);
    for v in &vertices {
        let wt = weight(ctx, v);
        for i in ctx.residues() {
            let st = stats(ctx, v, i);
            let mut count = 0usize;
            let mut cur = v.clone();
            while let Some(next) = tilde_e(ctx, &cur, i) {
                cur = next;
                count += 1;
            }
            if count != st.eps {
                return Err(format!("ε_{i}({v}) = {count} but stats said {}", st.eps));
            }
            let mut count_hat = 0usize;
            let mut cur = v.clone();
            while let Some(next) = hat_e(ctx, &cur, i) {
                cur = next;
                count_hat += 1;
            }
            if count_hat != st.eps_star {
                return Err(format!(
                    "ε*_{i}({v}) = {count_hat} but stats said {}",
                    st.eps_star
                ));
            }
            if st.wt_i != wt.coord(i) {
                return Err(format!("wt_{i}({v}) mismatch"));
            }
            if st.phi != st.wt_i + st.eps as i64 {
                return Err(format!("φ_{i}({v}) ≠ wt + ε"));
            }
            let lowered = tilde_f(ctx, v, i);
            let expected = wt.clone() - ClassicalWeight::simple_root(ctx, i);
            if weight(ctx, &lowered) != expected {
                return Err(format!("wt(f̃_{i}({v})) ≠ wt(ψ) − α_{i}"));
            }
        }
    }
    Ok(format!("{} vertices checked", vertices.len()))
}

/// `∗ ∘ f̂_i = f̃_i ∘ ∗` and `ε_i(ψ*) = ε*_i(ψ) = r̂_i(ψ)`.
pub fn check_star_theorem(ctx: &CrystalContext, max_rank: usize) -> Result<String, String> {
    let vertices = infinity_vertices(ctx, max_rank);
    let mut memo = StarMemo::new(ctx);
    for v in &vertices {
        let sv = memo.star(v);
        if eps_vector(ctx, &sv) != eps_star_vector(ctx, v) {
            return Err(format!("ε(ψ*) ≠ ε*(ψ) at {v}"));
        }
        for i in ctx.residues() {
            let lhs = memo.star(&hat_f(ctx, v, i));
            let rhs = tilde_f(ctx, &sv, i);
            if lhs != rhs {
                return Err(format!("∗(f̂_{i}({v})) ≠ f̃_{i}(ψ*)"));
            }
        }
    }
    Ok(format!("{} vertices checked", vertices.len()))
}

/// `∗` and `♯` are involutions, `∗ = ♯∘ρ = ρ∘♯ = τ`; at `e = 2`, `♯ = id`
/// and `∗ = ρ`.
pub fn check_involutions(ctx: &CrystalContext, max_rank: usize) -> Result<String, String> {
    let vertices = infinity_vertices(ctx, max_rank);
    let mut memo = StarMemo::new(ctx);
    for v in &vertices {
        let sv = memo.star(v);
        if memo.star(&sv) != *v {
            return Err(format!("∗∘∗ ≠ id at {v}"));
        }
        let sh = sharp(ctx, v);
        if sharp(ctx, &sh) != *v {
            return Err(format!("♯∘♯ ≠ id at {v}"));
        }
        if sv.rank() != v.rank() || !sv.is_aperiodic(ctx) {
            return Err(format!("∗ broke rank or aperiodicity at {v}"));
        }
        let via_rho_sharp = sharp(ctx, &v.rho(ctx));
        let via_sharp_rho = sh.rho(ctx);
        if sv != via_rho_sharp || sv != via_sharp_rho || sv != tau(ctx, v) {
            return Err(format!("∗ ≠ ♯∘ρ = ρ∘♯ = τ at {v}"));
        }
        if ctx.e() == 2 {
            if sh != *v {
                return Err(format!("♯ ≠ id at e=2 for {v}"));
            }
            if sv != v.rho(ctx) {
                return Err(format!("∗ ≠ ρ at e=2 for {v}"));
            }
        }
    }
    Ok(format!("{} vertices checked", vertices.len()))
}

/// Replaying any valid raising sequence through the hat operators computes
/// the same `ψ*` as the deterministic policy (100 random paths per vertex,
/// rank ≤ 6).
pub fn check_star_path_independence(
    ctx: &CrystalContext,
    max_rank: usize,
) -> Result<String, String> {
    let cap = max_rank.min(6);
    let vertices = infinity_vertices(ctx, cap);
    let mut rng = SplitMix64(0x5eed_cafe_f00d_0001);
    let mut paths = 0usize;
    for v in &vertices {
        let expected = star(ctx, v);
        for _ in 0..100 {
            let mut steps = Vec::with_capacity(v.rank());
            let mut cur = v.clone();
            while !cur.is_empty() {
                let options: Vec<(Residue, Multisegment)> = ctx
                    .residues()
                    .filter_map(|i| tilde_e(ctx, &cur, i).map(|m| (i, m)))
                    .collect();
                let (i, next) = options[rng.below(options.len())].clone();
                steps.push(i);
                cur = next;
            }
            let replayed = replay_hat(ctx, &crate::infinity::CrystalPath::new(steps));
            if replayed != expected {
                return Err(format!("random raising path changed ψ* at {v}"));
            }
            paths += 1;
        }
    }
    Ok(format!(
        "{paths} random paths over {} vertices (rank ≤ {cap})",
        vertices.len()
    ))
}

/// The two commutation dichotomies: `f̃_i f̂_j = f̂_j f̃_i` fails exactly
/// when `i = j` and `a_i + â_i = 1` (and then `f̃_i f̂_i = f̂_i²`,
/// `f̂_i f̃_i = f̃_i²`); the star-conjugated operator
/// `f̃*_j = ∗ ∘ f̃_j ∘ ∗` satisfies the same dichotomy against `f̃_i`.
pub fn check_commutation(ctx: &CrystalContext, max_rank: usize) -> Result<String, String> {
    let vertices = infinity_vertices(ctx, max_rank);
    let mut memo = StarMemo::new(ctx);
    for v in &vertices {
        for i in ctx.residues() {
            let st = stats(ctx, v, i);
            let boundary = st.a + st.a_hat == 1;
            for j in ctx.residues() {
                let tilde_then_hat = hat_f(ctx, &tilde_f(ctx, v, i), j);
                let hat_then_tilde = tilde_f(ctx, &hat_f(ctx, v, j), i);
                let commute = tilde_then_hat == hat_then_tilde;
                let expect_commute = i != j || !boundary;
                if commute != expect_commute {
                    return Err(format!("f̃_{i}/f̂_{j} commutation dichotomy failed at {v}"));
                }
                // Star-conjugated route: f̃*_j = ∗ ∘ f̃_j ∘ ∗.
                let star_f = |memo: &mut StarMemo, ms: &Multisegment| {
                    let s = memo.star(ms);
                    let moved = tilde_f(ctx, &s, j);
                    memo.star(&moved)
                };
                let lhs = tilde_f(ctx, &star_f(&mut memo, v), i);
                let rhs = star_f(&mut memo, &tilde_f(ctx, v, i));
                if (lhs == rhs) != expect_commute {
                    return Err(format!("f̃_{i}/f̃*_{j} commutation dichotomy failed at {v}"));
                }
            }
            if boundary {
                // In the non-commuting case the two compositions collapse:
                // f̃_i f̂_i χ = (f̂_i)² χ and f̂_i f̃_i χ = (f̃_i)² χ.
                let ff = tilde_f(ctx, v, i);
                let hh = hat_f(ctx, v, i);
                if tilde_f(ctx, &hh, i) != hat_f(ctx, &hh, i) {
                    return Err(format!("f̃_{i}f̂_{i} ≠ f̂_{i}² at {v}"));
                }
                if hat_f(ctx, &ff, i) != tilde_f(ctx, &ff, i) {
                    return Err(format!("f̂_{i}f̃_{i} ≠ f̃_{i}² at {v}"));
                }
            }
        }
    }
    Ok(format!("{} vertices checked", vertices.len()))
}

/// Closure of the Fock BFS, equality with the FLOTW filter, the embedding
/// `f_v`, its ε-compatibility, the image characterization and minimal-part
/// deletion — for every canonical multicharge of level ≤ 3.
pub fn check_fock(ctx: &CrystalContext, max_rank: usize) -> Result<String, String> {
    let aperiodic_by_rank: Vec<Vec<Multisegment>> =
        (0..=max_rank).map(|n| all_aperiodic(ctx, n)).collect();
    let mut eps_star_cache: HashMap<Multisegment, Vec<usize>> = HashMap::new();
    let mut charges_checked = 0usize;
    for v in canonical_charges_up_to(ctx, 3) {
        let graph = generate_fock(ctx, &v, max_rank);
        // BFS closure equals the FLOTW filter, rank by rank.
        for n in 0..=max_rank {
            let bfs: BTreeSet<MultiPartition> = graph
                .vertices
                .iter()
                .filter(|m| m.rank() == n)
                .cloned()
                .collect();
            let filter: BTreeSet<MultiPartition> = all_multipartitions(v.level(), n)
                .into_iter()
                .filter(|m| is_flotw(ctx, &v, m).expect("levels match"))
                .collect();
            if bfs != filter {
                return Err(format!(
                    "B_{}({v}) rank {n}: BFS {} vertices, FLOTW filter {}",
                    ctx.e(),
                    bfs.len(),
                    filter.len()
                ));
            }
        }
        let mut image_by_rank: Vec<BTreeSet<Multisegment>> = vec![BTreeSet::new(); max_rank + 1];
        for lambda in &graph.vertices {
            let psi = f_v(ctx, &v, lambda).map_err(|e| format!("f_v failed: {e}"))?;
            image_by_rank[lambda.rank()].insert(psi.clone());
            if fock_eps_vector(ctx, &v, lambda) != eps_vector(ctx, &psi) {
                return Err(format!("ε mismatch between {lambda} and f_v image {psi}"));
            }
            for i in ctx.residues() {
                if let Some(lowered) = fock_f(ctx, &v, lambda, i) {
                    if !is_flotw(ctx, &v, &lowered).expect("levels match") {
                        return Err(format!("fock_f left Φ_e at {lambda}, i={i}"));
                    }
                    let lhs = f_v(ctx, &v, &lowered).map_err(|e| format!("f_v failed: {e}"))?;
                    if lhs != tilde_f(ctx, &psi, i) {
                        return Err(format!("f_v(fock_f({lambda})) ≠ f̃_{i}(f_v({lambda}))"));
                    }
                }
            }
            // Deleting all minimal parts stays FLOTW.
            if !is_flotw(ctx, &v, &lambda.strip_min_parts()).expect("levels match") {
                return Err(format!("minimal-part deletion left Φ_e at {lambda}"));
            }
        }
        // Image characterization: f_v(Φ_e(v)) = {ψ : ε*_i(ψ) ≤ κ_i(v)}.
        let kappa = v.kappa_vector(ctx);
        for n in 0..=max_rank {
            let expected: BTreeSet<Multisegment> = aperiodic_by_rank[n]
                .iter()
                .filter(|psi| {
                    let es = eps_star_cache
                        .entry((*psi).clone())
                        .or_insert_with(|| eps_star_vector(ctx, psi));
                    es.iter().zip(&kappa).all(|(e, k)| e <= k)
                })
                .cloned()
                .collect();
            if image_by_rank[n] != expected {
                return Err(format!(
                    "image of f_{{{v}}} at rank {n} has {} elements, κ-criterion predicts {}",
                    image_by_rank[n].len(),
                    expected.len()
                ));
            }
        }
        charges_checked += 1;
    }
    Ok(format!(
        "{charges_checked} multicharges of level ≤ 3 checked to rank {max_rank}"
    ))
}

/// `reconstruct ∘ f_v = id`, `f_v ∘ reconstruct = id`, independence of the
/// head-class processing order, and minimality of the minimal multicharge.
pub fn check_reconstruction(ctx: &CrystalContext, max_rank: usize) -> Result<String, String> {
    let charges = canonical_charges_up_to(ctx, 3);
    let mut round_trips = 0usize;
    for v in &charges {
        for lambda in generate_fock(ctx, v, max_rank).vertices {
            let psi = f_v(ctx, v, &lambda).map_err(|e| format!("f_v failed: {e}"))?;
            let back = reconstruct(ctx, &psi, v)
                .map_err(|e| format!("reconstruct(f_v({lambda}), {v}) failed: {e}"))?;
            if back != lambda {
                return Err(format!("reconstruct(f_v({lambda})) = {back} ≠ {lambda}"));
            }
            round_trips += 1;
        }
    }
    for n in 0..=max_rank {
        for psi in all_aperiodic(ctx, n) {
            if !psi.is_empty() {
                let minimal = minimal_multicharge(ctx, &psi).expect("nonempty");
                if !is_admissible(ctx, &minimal, &psi) {
                    return Err(format!("minimal multicharge of {psi} is not admissible"));
                }
                for v in enumerate_admissible(ctx, &psi, 3) {
                    if v.level() < minimal.level() {
                        return Err(format!(
                            "admissible {v} has lower level than the minimal multicharge of {psi}"
                        ));
                    }
                }
            }
            for v in &charges {
                if !is_admissible(ctx, v, &psi) {
                    continue;
                }
                let lambda = reconstruct(ctx, &psi, v)
                    .map_err(|e| format!("reconstruct({psi}, {v}) failed: {e}"))?;
                let forward = f_v(ctx, v, &lambda).map_err(|e| format!("f_v failed: {e}"))?;
                if forward != psi {
                    return Err(format!("f_v(reconstruct({psi}, {v})) ≠ ψ"));
                }
                // Any head-class processing order yields the same
                // multipartition or a detected failure.
                let lengths = psi.lengths_descending();
                let head_sets: Vec<Vec<Residue>> = lengths
                    .iter()
                    .map(|&len| heads_at_length(ctx, &psi, len))
                    .collect();
                for orders in permutation_product(&head_sets) {
                    if let Ok(stages) = reconstruct_stages_ordered(ctx, &psi, v, &orders) {
                        let result = stages
                            .last()
                            .cloned()
                            .unwrap_or_else(|| MultiPartition::empty(v.level()));
                        if result != lambda {
                            return Err(format!(
                                "head order {orders:?} reconstructed a different multipartition for {psi}"
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{round_trips} FLOTW round-trips checked"))
}

// Cartesian product of the permutations of each head set.
fn permutation_product(head_sets: &[Vec<Residue>]) -> Vec<Vec<Vec<Residue>>> {
    fn perms(items: &[Residue]) -> Vec<Vec<Residue>> {
        if items.len() <= 1 {
            return vec![items.to_vec()];
        }
        let mut out = Vec::new();
        for (k, &head) in items.iter().enumerate() {
            let mut rest = items.to_vec();
            rest.remove(k);
            for mut tail in perms(&rest) {
                tail.insert(0, head);
                out.push(tail);
            }
        }
        out
    }
    let mut product: Vec<Vec<Vec<Residue>>> = vec![vec![]];
    for set in head_sets {
        let mut next = Vec::new();
        for prefix in &product {
            for p in perms(set) {
                let mut row = prefix.clone();
                row.push(p);
                next.push(row);
            }
        }
        product = next;
    }
    product
}

/// The multipartition pipelines agree with the path-replay involutions.
pub fn check_pipeline(ctx: &CrystalContext, max_rank: usize) -> Result<String, String> {
    let vertices = infinity_vertices(ctx, max_rank);
    for v in &vertices {
        let direct = sharp(ctx, v);
        let piped = crate::involution::sharp_pipeline(ctx, v)
            .map_err(|e| format!("sharp_pipeline({v}) failed: {e}"))?;
        if piped != direct {
            return Err(format!("sharp_pipeline({v}) = {piped} ≠ ♯ψ = {direct}"));
        }
        let direct = star(ctx, v);
        let piped = crate::involution::star_via_pipeline(ctx, v)
            .map_err(|e| format!("star_via_pipeline({v}) failed: {e}"))?;
        if piped != direct {
            return Err(format!("star_via_pipeline({v}) ≠ ∗ψ at {v}"));
        }
    }
    Ok(format!("{} vertices checked", vertices.len()))
}

/// The tensor-rule oracle: over all pairs of FLOTW multipartitions, the
/// vertices killed by every tensor `ẽ_i` are exactly `∅ ⊗ λ` for `λ` in
/// `hw_vertices`, and lowering any vertex terminates at one of them.
pub fn check_tensor_oracle(ctx: &CrystalContext, max_rank: usize) -> Result<String, String> {
    let cap = max_rank.min(4);
    let charges = canonical_charges_up_to(ctx, 2);
    let mut pairs_checked = 0usize;
    for left in &charges {
        let left_vertices = generate_fock(ctx, left, cap).vertices;
        for right in &charges {
            let right_vertices = generate_fock(ctx, right, cap).vertices;
            let expected: BTreeSet<(MultiPartition, MultiPartition)> =
                hw_vertices(ctx, left, right, cap)
                    .into_iter()
                    .map(|h| (MultiPartition::empty(left.level()), h.lambda().clone()))
                    .collect();
            let mut found: BTreeSet<(MultiPartition, MultiPartition)> = BTreeSet::new();
            for lu in &left_vertices {
                for lw in &right_vertices {
                    if lu.rank() + lw.rank() > cap {
                        continue;
                    }
                    let t = TensorVertex {
                        left: lu.clone(),
                        right: lw.clone(),
                    };
                    if is_highest_weight(ctx, left, right, &t) {
                        found.insert((lu.clone(), lw.clone()));
                    }
                    // Lower to a sink; it must be a highest-weight vertex,
                    // and f after e must return.
                    let mut cur = t;
                    loop {
                        let mut advanced = false;
                        for i in ctx.residues() {
                            if let Some(up) = tensor_e(ctx, left, right, &cur, i) {
                                if tensor_f(ctx, left, right, &up, i) != Some(cur.clone()) {
                                    return Err(format!(
                                        "tensor f̃_{i} did not invert ẽ_{i} at {}⊗{}",
                                        up.left, up.right
                                    ));
                                }
                                cur = up;
                                advanced = true;
                                break;
                            }
                        }
                        if !advanced {
                            break;
                        }
                    }
                    if !is_highest_weight(ctx, left, right, &cur) {
                        return Err(format!(
                            "tensor lowering of {}⊗{} stalled off highest weight",
                            lu, lw
                        ));
                    }
                }
            }
            if found != expected {
                return Err(format!(
                    "highest-weight sets differ for ({left}) ⊗ ({right}): oracle {} vs filter {}",
                    found.len(),
                    expected.len()
                ));
            }
            pairs_checked += 1;
        }
    }
    Ok(format!(
        "{pairs_checked} charge pairs checked at rank ≤ {cap}"
    ))
}

/// The commutor is an involution pair `σ_{v′,v} ∘ σ_{v,v′} = id`, maps
/// `H_{v,v′}` bijectively onto `H_{v′,v}`, balances classical weights, and
/// reduces to the `ρ` formula at `e = 2`.
pub fn check_commutor(ctx: &CrystalContext, max_rank: usize) -> Result<String, String> {
    let charges = canonical_charges_up_to(ctx, 2);
    let mut vertices_checked = 0usize;
    for left in &charges {
        for right in &charges {
            let forward = hw_vertices(ctx, left, right, max_rank);
            let backward: BTreeSet<MultiPartition> = hw_vertices(ctx, right, left, max_rank)
                .into_iter()
                .map(|h| h.lambda().clone())
                .collect();
            let mut images: BTreeSet<MultiPartition> = BTreeSet::new();
            for h in &forward {
                let out = commutor(ctx, h);
                if out.left_charge() != right || out.right_charge() != left {
                    return Err("commutor swapped charges incorrectly".into());
                }
                if !backward.contains(out.lambda()) {
                    return Err(format!(
                        "σ({}) = {} is not in H_{{({right}),({left})}}",
                        h.lambda(),
                        out.lambda()
                    ));
                }
                if !images.insert(out.lambda().clone()) {
                    return Err(format!("commutor is not injective at {}", h.lambda()));
                }
                let back = commutor(ctx, &out);
                if back.lambda() != h.lambda() {
                    return Err(format!(
                        "σ_{{v′,v}}(σ_{{v,v′}}({}))) = {} ≠ id",
                        h.lambda(),
                        back.lambda()
                    ));
                }
                let wt_in = weight(ctx, &f_v(ctx, right, h.lambda()).expect("FLOTW"));
                let wt_out = weight(ctx, &f_v(ctx, left, out.lambda()).expect("FLOTW"));
                if wt_in != wt_out {
                    return Err(format!("weight balance failed at {}", h.lambda()));
                }
                if ctx.e() == 2 {
                    let psi = f_v(ctx, right, h.lambda()).expect("FLOTW");
                    let expected = reconstruct(ctx, &psi.rho(ctx), left)
                        .map_err(|e| format!("ρ-formula reconstruction failed: {e}"))?;
                    if *out.lambda() != expected {
                        return Err(format!("e=2 commutor formula failed at {}", h.lambda()));
                    }
                }
                vertices_checked += 1;
            }
            // Bijectivity per rank: image counts match the target counts.
            for n in 0..=max_rank {
                let fwd = forward.iter().filter(|h| h.lambda().rank() == n).count();
                let bwd = backward.iter().filter(|m| m.rank() == n).count();
                if fwd != bwd {
                    return Err(format!(
                        "|H_{{({left}),({right})}}| ≠ |H_{{({right}),({left})}}| at rank {n}"
                    ));
                }
            }
        }
    }
    Ok(format!(
        "{vertices_checked} highest-weight vertices checked"
    ))
}

/// Mullineux is a rank-preserving skew involution landing in `Φ_e(v♯)`.
pub fn check_mullineux(ctx: &CrystalContext, max_rank: usize) -> Result<String, String> {
    let mut total = 0usize;
    for v in canonical_charges_up_to(ctx, 3) {
        let vs = charge_sharp(ctx, &v);
        for lambda in generate_fock(ctx, &v, max_rank).vertices {
            let mu = mullineux(ctx, &v, &lambda).map_err(|e| format!("mullineux failed: {e}"))?;
            if mu.rank() != lambda.rank() {
                return Err(format!("mullineux changed rank at {lambda}"));
            }
            if !is_flotw(ctx, &vs, &mu).expect("levels match") {
                return Err(format!("mullineux({lambda}) is not FLOTW for ({vs})"));
            }
            let back = mullineux(ctx, &vs, &mu).map_err(|e| format!("mullineux failed: {e}"))?;
            if back != lambda {
                return Err(format!("mullineux is not involutive at {lambda}"));
            }
            total += 1;
        }
    }
    Ok(format!("{total} FLOTW multipartitions checked"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerators_small_counts() {
        let ctx = CrystalContext::new(4).unwrap();
        // Rank 2 multisegments at e=4: 4 length-2 segments, 10 multisets of
        // two length-1 segments.
        assert_eq!(all_multisegments(&ctx, 2).len(), 14);
        // Nothing of rank ≤ 3 can cover all four residues at one length.
        assert_eq!(all_aperiodic(&ctx, 2).len(), 14);
        let ctx2 = CrystalContext::new(2).unwrap();
        assert_eq!(all_aperiodic(&ctx2, 2).len(), 4);
        assert_eq!(all_multipartitions(2, 2).len(), 5);
        assert_eq!(partitions_bounded(4, 4).len(), 5);
    }

    #[test]
    fn quick_selfcheck_passes() {
        let ctx = CrystalContext::new(2).unwrap();
        for report in run_all(&ctx, 3) {
            assert!(report.passed, "{}: {}", report.name, report.detail);
        }
    }
}
