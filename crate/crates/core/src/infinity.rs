//! The two crystal structures on aperiodic multisegments and the
//! involutions `∗`, `♯`, `τ` they induce.
//!
//! The tilde operators act on segment tails: with
//! `S_{l,i} = Σ_{k≥l} (m_{(k;i−1]} − m_{(k;i]})` and `l₀` the minimal `l`
//! attaining `min_{l>0} S_{l,i}`,
//!
//! ```text
//! f̃_i ψ = ψ + (1;i]                    if l₀ = 1
//!        = ψ + (l₀;i] − (l₀−1;i−1]     if l₀ > 1
//! ```
//!
//! and `ẽ_i` replaces `(l₀;i]` by `(l₀−1;i−1]` for the maximal `l₀`
//! attaining the minimum (null when the minimum is 0). The hat operators
//! are the head-side mirror, with `Ŝ_{l,i} = Σ_{k≥l} (m_{[i+1;k)} − m_{[i;k)})`;
//! they satisfy `f̃_i = ρ ∘ f̂_{−i} ∘ ρ` and realize the ∗-twisted structure.
//!
//! Every statistic is computed twice: from the `S`-sums (authoritative) and
//! from the RA-word reductions (redundant cross-check). Disagreement is a
//! logic bug and trips an assertion.

use crate::context::{CrystalContext, Residue};
use crate::multisegment::{Multisegment, Segment};
use crate::weight::ClassicalWeight;
use std::fmt;

/// One letter of an RA word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Letter {
    R,
    A,
}

/// An RA word, e.g. `RARR`. Tail words encode segments with tail `i` as `R`
/// and tail `i−1` as `A`, listed by increasing length with `R`s first; head
/// words do the same with heads `i` and `i+1`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RaWord(pub Vec<Letter>);

impl fmt::Display for RaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.0 {
            match l {
                Letter::R => write!(f, "R")?,
                Letter::A => write!(f, "A")?,
            }
        }
        Ok(())
    }
}

/// Per-residue crystal statistics of a multisegment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IStats {
    pub i: Residue,
    /// `ε_i = −min_l S_{l,i}`, the number of times `ẽ_i` applies.
    pub eps: usize,
    /// `ε*_i = ε̂_i = r̂_i`, the number of times `ê_i` applies.
    pub eps_star: usize,
    /// `φ_i = wt_i + ε_i`.
    pub phi: i64,
    /// `wt_i = S_{1,i} + Ŝ_{1,i}`.
    pub wt_i: i64,
    /// Surviving `A` count of the tail word.
    pub a: usize,
    /// Surviving `R` count of the tail word (equals `eps`).
    pub r: usize,
    /// Surviving `Â` count of the head word.
    pub a_hat: usize,
    /// Surviving `R̂` count of the head word (equals `eps_star`).
    pub r_hat: usize,
    /// Minimal `l` attaining `min S_{l,i}` when `a > 0`, else 0.
    pub l0: usize,
    /// Minimal `l` attaining `min Ŝ_{l,i}` when `a_hat > 0`, else 0.
    pub l0_hat: usize,
}

// Per-length (R, A) multiplicity tables indexed by length−1.
fn tail_counts(ctx: &CrystalContext, ms: &Multisegment, i: Residue) -> (Vec<usize>, Vec<usize>) {
    let n = ms.max_length();
    let (mut rc, mut ac) = (vec![0usize; n], vec![0usize; n]);
    let prev = ctx.pred(i);
    for (seg, m) in ms.entries() {
        let t = seg.tail(ctx);
        if t == i {
            rc[seg.length() - 1] += m;
        } else if t == prev {
            ac[seg.length() - 1] += m;
        }
    }
    (rc, ac)
}

fn head_counts(ctx: &CrystalContext, ms: &Multisegment, i: Residue) -> (Vec<usize>, Vec<usize>) {
    let n = ms.max_length();
    let (mut rc, mut ac) = (vec![0usize; n], vec![0usize; n]);
    let next = ctx.succ(i);
    for (seg, m) in ms.entries() {
        if seg.head() == i {
            rc[seg.length() - 1] += m;
        } else if seg.head() == next {
            ac[seg.length() - 1] += m;
        }
    }
    (rc, ac)
}

// Suffix sums S_l = Σ_{k≥l} (A_k − R_k) for l = 1..=n+1 (entry n is the
// vanishing virtual length, so the minimum over l>0 is always present).
fn suffix_profile(rc: &[usize], ac: &[usize]) -> Vec<i64> {
    let n = rc.len();
    let mut s = vec![0i64; n + 1];
    for l in (0..n).rev() {
        s[l] = s[l + 1] + ac[l] as i64 - rc[l] as i64;
    }
    s
}

// (minimum, minimal attaining l, maximal attaining l), lengths 1-based.
fn profile_min(s: &[i64]) -> (i64, usize, usize) {
    let min = *s.iter().min().expect("profile is nonempty");
    let first = s.iter().position(|&x| x == min).unwrap() + 1;
    let last = s.iter().rposition(|&x| x == min).unwrap() + 1;
    (min, first, last)
}

struct Reduction {
    a: usize,
    r: usize,
    /// Length of the rightmost surviving `A` (0 when `a == 0`).
    last_a_len: usize,
}

// Cancel RA factors in the word Π_l R^{rc_l} A^{ac_l} (l ascending).
fn reduce(rc: &[usize], ac: &[usize]) -> Reduction {
    let (mut q, mut a, mut last_a_len) = (0usize, 0usize, 0usize);
    for l in 0..rc.len() {
        q += rc[l];
        let cancelled = ac[l].min(q);
        q -= cancelled;
        let survivors = ac[l] - cancelled;
        if survivors > 0 {
            a += survivors;
            last_a_len = l + 1;
        }
    }
    Reduction {
        a,
        r: q,
        last_a_len,
    }
}

fn word_from_counts(rc: &[usize], ac: &[usize]) -> RaWord {
    let mut letters = Vec::new();
    for l in 0..rc.len() {
        letters.extend(std::iter::repeat_n(Letter::R, rc[l]));
        letters.extend(std::iter::repeat_n(Letter::A, ac[l]));
    }
    RaWord(letters)
}

/// `S_{l,i} = Σ_{k≥l} (m_{(k;i−1]} − m_{(k;i]})`.
pub fn s_value(ctx: &CrystalContext, ms: &Multisegment, i: Residue, l: usize) -> i64 {
    assert!(l >= 1);
    let prev = ctx.pred(i);
    let mut s = 0i64;
    for (seg, m) in ms.entries() {
        if seg.length() >= l {
            let t = seg.tail(ctx);
            if t == prev {
                s += m as i64;
            } else if t == i {
                s -= m as i64;
            }
        }
    }
    s
}

/// `Ŝ_{l,i} = Σ_{k≥l} (m_{[i+1;k)} − m_{[i;k)})`.
pub fn s_hat_value(ctx: &CrystalContext, ms: &Multisegment, i: Residue, l: usize) -> i64 {
    assert!(l >= 1);
    let next = ctx.succ(i);
    let mut s = 0i64;
    for (seg, m) in ms.entries() {
        if seg.length() >= l {
            if seg.head() == next {
                s += m as i64;
            } else if seg.head() == i {
                s -= m as i64;
            }
        }
    }
    s
}

/// The word `w_i = Π_{l≥1} R^{m_{(l;i]}} A^{m_{(l;i−1]}}`, unreduced.
pub fn tail_word(ctx: &CrystalContext, ms: &Multisegment, i: Residue) -> RaWord {
    let (rc, ac) = tail_counts(ctx, ms, i);
    word_from_counts(&rc, &ac)
}

/// The word `ŵ_i = Π_{l≥1} R̂^{m_{[i;l)}} Â^{m_{[i+1;l)}}`, unreduced.
pub fn head_word(ctx: &CrystalContext, ms: &Multisegment, i: Residue) -> RaWord {
    let (rc, ac) = head_counts(ctx, ms, i);
    word_from_counts(&rc, &ac)
}

/// `f̃_i`: append one residue `i` on the tail side. Total on all
/// multisegments; maps aperiodic ones to aperiodic ones of rank+1.
pub fn tilde_f(ctx: &CrystalContext, ms: &Multisegment, i: Residue) -> Multisegment {
    let (rc, ac) = tail_counts(ctx, ms, i);
    let (_, l0, _) = profile_min(&suffix_profile(&rc, &ac));
    let mut out = ms.clone();
    if l0 == 1 {
        out.insert(Segment::from_tail(ctx, i, 1), 1);
    } else {
        out.remove_one(Segment::from_tail(ctx, ctx.pred(i), l0 - 1));
        out.insert(Segment::from_tail(ctx, i, l0), 1);
    }
    out
}

/// `ẽ_i`: remove one residue `i` from the tail side, or `None` when
/// `min_l S_{l,i} = 0` (the crystal 0).
pub fn tilde_e(ctx: &CrystalContext, ms: &Multisegment, i: Residue) -> Option<Multisegment> {
    let (rc, ac) = tail_counts(ctx, ms, i);
    let (min, _, l0) = profile_min(&suffix_profile(&rc, &ac));
    if min == 0 {
        return None;
    }
    let mut out = ms.clone();
    out.remove_one(Segment::from_tail(ctx, i, l0));
    if l0 > 1 {
        out.insert(Segment::from_tail(ctx, ctx.pred(i), l0 - 1), 1);
    }
    Some(out)
}

/// `f̂_i`: prepend one residue `i` on the head side.
pub fn hat_f(ctx: &CrystalContext, ms: &Multisegment, i: Residue) -> Multisegment {
    let (rc, ac) = head_counts(ctx, ms, i);
    let (_, l0, _) = profile_min(&suffix_profile(&rc, &ac));
    let mut out = ms.clone();
    if l0 == 1 {
        out.insert(Segment::new(i, 1), 1);
    } else {
        out.remove_one(Segment::new(ctx.succ(i), l0 - 1));
        out.insert(Segment::new(i, l0), 1);
    }
    out
}

/// `ê_i`: remove one residue `i` from the head side, or `None` when
/// `min_l Ŝ_{l,i} = 0`. This is the `ρ`-conjugate of `ẽ_{−i}`.
pub fn hat_e(ctx: &CrystalContext, ms: &Multisegment, i: Residue) -> Option<Multisegment> {
    let (rc, ac) = head_counts(ctx, ms, i);
    let (min, _, l0) = profile_min(&suffix_profile(&rc, &ac));
    if min == 0 {
        return None;
    }
    let mut out = ms.clone();
    out.remove_one(Segment::new(i, l0));
    if l0 > 1 {
        out.insert(Segment::new(ctx.succ(i), l0 - 1), 1);
    }
    Some(out)
}

/// `ε_i = −min_l S_{l,i}`.
pub fn eps(ctx: &CrystalContext, ms: &Multisegment, i: Residue) -> usize {
    let (rc, ac) = tail_counts(ctx, ms, i);
    let (min, _, _) = profile_min(&suffix_profile(&rc, &ac));
    (-min) as usize
}

/// `ε*_i = ε̂_i = r̂_i = −min_l Ŝ_{l,i}`.
pub fn eps_star(ctx: &CrystalContext, ms: &Multisegment, i: Residue) -> usize {
    let (rc, ac) = head_counts(ctx, ms, i);
    let (min, _, _) = profile_min(&suffix_profile(&rc, &ac));
    (-min) as usize
}

pub fn eps_vector(ctx: &CrystalContext, ms: &Multisegment) -> Vec<usize> {
    ctx.residues().map(|i| eps(ctx, ms, i)).collect()
}

pub fn eps_star_vector(ctx: &CrystalContext, ms: &Multisegment) -> Vec<usize> {
    ctx.residues().map(|i| eps_star(ctx, ms, i)).collect()
}

/// All statistics at residue `i`, with the RA-word reduction cross-checked
/// against the `S`-sums.
pub fn stats(ctx: &CrystalContext, ms: &Multisegment, i: Residue) -> IStats {
    let (trc, tac) = tail_counts(ctx, ms, i);
    let (hrc, hac) = head_counts(ctx, ms, i);
    let ts = suffix_profile(&trc, &tac);
    let hs = suffix_profile(&hrc, &hac);
    let (tmin, tfirst, _) = profile_min(&ts);
    let (hmin, hfirst, _) = profile_min(&hs);
    let tred = reduce(&trc, &tac);
    let hred = reduce(&hrc, &hac);

    // Cross-checks: word reduction vs suffix sums must agree everywhere.
    assert_eq!(tred.r as i64, -tmin, "eps: word/S-sum mismatch at i={i}");
    assert_eq!(hred.r as i64, -hmin, "eps*: word/S-sum mismatch at i={i}");
    assert_eq!(tred.a as i64 - tred.r as i64, ts[0], "a−r ≠ S_1 at i={i}");
    assert_eq!(hred.a as i64 - hred.r as i64, hs[0], "â−r̂ ≠ Ŝ_1 at i={i}");
    if tred.a > 0 {
        assert_eq!(
            tfirst,
            tred.last_a_len + 1,
            "l0: word/S-sum mismatch at i={i}"
        );
    }
    if hred.a > 0 {
        assert_eq!(
            hfirst,
            hred.last_a_len + 1,
            "l̂0: word/S-sum mismatch at i={i}"
        );
    }

    let wt_i = ts[0] + hs[0];
    let eps = -tmin;
    let phi = wt_i + eps;
    assert_eq!(
        phi,
        tred.a as i64 + hred.a as i64 - hred.r as i64,
        "phi ≠ a + â − r̂ at i={i}"
    );

    IStats {
        i,
        eps: eps as usize,
        eps_star: (-hmin) as usize,
        phi,
        wt_i,
        a: tred.a,
        r: tred.r,
        a_hat: hred.a,
        r_hat: hred.r,
        l0: if tred.a > 0 { tfirst } else { 0 },
        l0_hat: if hred.a > 0 { hfirst } else { 0 },
    }
}

/// Classical weight `wt(ψ) = Σ_i (S_{1,i} + Ŝ_{1,i}) Λ_i`.
pub fn weight(ctx: &CrystalContext, ms: &Multisegment) -> ClassicalWeight {
    let coords = ctx
        .residues()
        .map(|i| s_value(ctx, ms, i, 1) + s_hat_value(ctx, ms, i, 1))
        .collect();
    ClassicalWeight::from_coords(coords)
}

/// A sequence of residues `(i_1, …, i_n)` recording a path
/// `ψ = f̃_{i_1}(f̃_{i_2}(… f̃_{i_n}(∅) …))`; `i_1` is the first raising step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalPath {
    steps: Vec<Residue>,
}

impl CrystalPath {
    pub fn new(steps: Vec<Residue>) -> Self {
        CrystalPath { steps }
    }

    pub fn steps(&self) -> &[Residue] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Raising path of `ψ`, lowering with `ẽ` at the smallest residue of
/// positive `ε` each step (the deterministic policy).
///
/// Panics when `∅` is not reached in `rank(ψ)` steps, which signals
/// non-aperiodic or corrupt input.
pub fn raising_path(ctx: &CrystalContext, ms: &Multisegment) -> CrystalPath {
    let mut steps = Vec::with_capacity(ms.rank());
    let mut cur = ms.clone();
    for _ in 0..ms.rank() {
        let mut moved = false;
        for i in ctx.residues() {
            if let Some(next) = tilde_e(ctx, &cur, i) {
                steps.push(i);
                cur = next;
                moved = true;
                break;
            }
        }
        assert!(
            moved,
            "raising path stuck before the empty multisegment; input is not a crystal vertex"
        );
    }
    assert!(
        cur.is_empty(),
        "raising path did not reach the empty multisegment in rank steps"
    );
    CrystalPath::new(steps)
}

/// Replay a path through `f̃`: returns `f̃_{i_1}(… f̃_{i_n}(∅) …)`.
pub fn replay_tilde(ctx: &CrystalContext, path: &CrystalPath) -> Multisegment {
    path.steps()
        .iter()
        .rev()
        .fold(Multisegment::empty(), |ms, &i| tilde_f(ctx, &ms, i))
}

/// Replay a path through `f̂`: returns `f̂_{i_1}(… f̂_{i_n}(∅) …)`.
pub fn replay_hat(ctx: &CrystalContext, path: &CrystalPath) -> Multisegment {
    path.steps()
        .iter()
        .rev()
        .fold(Multisegment::empty(), |ms, &i| hat_f(ctx, &ms, i))
}

/// The Kashiwara involution `∗`: replay a tilde raising path through the
/// hat operators. Preserves rank, aperiodicity and weight.
pub fn star(ctx: &CrystalContext, ms: &Multisegment) -> Multisegment {
    replay_hat(ctx, &raising_path(ctx, ms))
}

/// The two-fold symmetry `♯`: replay a raising path through `f̃` with every
/// residue negated.
pub fn sharp(ctx: &CrystalContext, ms: &Multisegment) -> Multisegment {
    let path = raising_path(ctx, ms);
    path.steps()
        .iter()
        .rev()
        .fold(Multisegment::empty(), |acc, &i| {
            tilde_f(ctx, &acc, ctx.neg(i))
        })
}

/// The Zelevinsky involution `τ = ♯ ∘ ρ = ρ ∘ ♯`, which coincides with `∗`.
pub fn tau(ctx: &CrystalContext, ms: &Multisegment) -> Multisegment {
    let out = sharp(ctx, &ms.rho(ctx));
    debug_assert_eq!(out, sharp(ctx, ms).rho(ctx), "♯∘ρ ≠ ρ∘♯");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(e: i64) -> CrystalContext {
        CrystalContext::new(e).unwrap()
    }

    fn seg(ctx: &CrystalContext, h: i64, l: usize) -> Segment {
        Segment::new(ctx.residue(h), l)
    }

    #[test]
    fn s_values() {
        let c = ctx(4);
        let empty = Multisegment::empty();
        for i in c.residues() {
            for l in 1..4 {
                assert_eq!(s_value(&c, &empty, i, l), 0);
            }
        }
        // ψ = [0;1) = (1;0]
        let ms = Multisegment::from_segments([seg(&c, 0, 1)]);
        assert_eq!(s_value(&c, &ms, c.residue(1), 1), 1);
        assert_eq!(s_value(&c, &ms, c.residue(1), 2), 0);
        // ψ = [0;2) = (2;1]
        let ms2 = Multisegment::from_segments([seg(&c, 0, 2)]);
        assert_eq!(s_value(&c, &ms2, c.residue(1), 1), -1);
        assert_eq!(s_value(&c, &ms2, c.residue(1), 2), -1);
        assert_eq!(s_value(&c, &ms2, c.residue(1), 3), 0);
    }

    #[test]
    fn tilde_f_examples() {
        let c = ctx(4);
        let empty = Multisegment::empty();
        assert_eq!(
            tilde_f(&c, &empty, c.residue(2)),
            Multisegment::from_segments([seg(&c, 2, 1)])
        );
        let ms = Multisegment::from_segments([seg(&c, 0, 1)]);
        // tail extension: l₀ = 2
        assert_eq!(
            tilde_f(&c, &ms, c.residue(1)),
            Multisegment::from_segments([seg(&c, 0, 2)])
        );
        // fresh box: l₀ = 1
        let mut doubled = Multisegment::empty();
        doubled.insert(seg(&c, 0, 1), 2);
        assert_eq!(tilde_f(&c, &ms, c.residue(0)), doubled);
    }

    #[test]
    fn tilde_e_examples() {
        let c = ctx(4);
        assert_eq!(tilde_e(&c, &Multisegment::empty(), c.residue(0)), None);
        let ms = Multisegment::from_segments([seg(&c, 0, 2)]);
        assert_eq!(
            tilde_e(&c, &ms, c.residue(1)),
            Some(Multisegment::from_segments([seg(&c, 0, 1)]))
        );
        assert_eq!(tilde_e(&c, &ms, c.residue(0)), None);
    }

    #[test]
    fn hat_examples() {
        let c = ctx(4);
        assert_eq!(
            hat_f(&c, &Multisegment::empty(), c.residue(3)),
            Multisegment::from_segments([seg(&c, 3, 1)])
        );
        let ms = Multisegment::from_segments([seg(&c, 0, 2)]);
        // prepend: l̂₀ = 3
        assert_eq!(
            hat_f(&c, &ms, c.residue(3)),
            Multisegment::from_segments([seg(&c, 3, 3)])
        );
        assert_eq!(
            hat_f(&c, &ms, c.residue(0)),
            Multisegment::from_segments([seg(&c, 0, 2), seg(&c, 0, 1)])
        );
        assert_eq!(hat_e(&c, &Multisegment::empty(), c.residue(1)), None);
        assert_eq!(
            hat_e(
                &c,
                &Multisegment::from_segments([seg(&c, 3, 3)]),
                c.residue(3)
            ),
            Some(ms)
        );
    }

    #[test]
    fn stats_on_empty() {
        let c = ctx(4);
        let empty = Multisegment::empty();
        for i in c.residues() {
            let st = stats(&c, &empty, i);
            assert_eq!(
                (st.eps, st.eps_star, st.phi, st.wt_i, st.a, st.r, st.l0),
                (0, 0, 0, 0, 0, 0, 0)
            );
        }
    }

    #[test]
    fn weight_of_single_box() {
        let c = ctx(4);
        let ms = Multisegment::from_segments([seg(&c, 0, 1)]);
        assert_eq!(weight(&c, &ms).coords(), &[-2, 1, 0, 1]);
    }

    #[test]
    fn raising_path_and_replay() {
        let c = ctx(4);
        assert!(raising_path(&c, &Multisegment::empty()).is_empty());
        let ms = Multisegment::from_segments([seg(&c, 0, 2)]);
        let path = raising_path(&c, &ms);
        let labels: Vec<u32> = path.steps().iter().map(|r| r.value()).collect();
        assert_eq!(labels, vec![1, 0]);
        assert_eq!(replay_tilde(&c, &path), ms);
    }

    #[test]
    fn sharp_single_box() {
        let c = ctx(4);
        let ms = Multisegment::from_segments([seg(&c, 1, 1)]);
        assert_eq!(sharp(&c, &ms), Multisegment::from_segments([seg(&c, 3, 1)]));
    }

    #[test]
    fn star_is_rho_at_e2() {
        let c = ctx(2);
        let ms = Multisegment::from_segments([seg(&c, 0, 2), seg(&c, 1, 1)]);
        assert_eq!(star(&c, &ms), ms.rho(&c));
        assert_eq!(sharp(&c, &ms), ms);
        assert_eq!(tau(&c, &ms), ms.rho(&c));
    }
}
