//! Segments and multisegments.
//!
//! A segment `[i;l)` is the run of `l` consecutive residues
//! `i, i+1, …, i+l−1` modulo `e`; the same object indexed by its tail `j`
//! is written `(l;j]`. A multisegment is a finite multiset of segments,
//! stored as a map from `(head, length)` to multiplicity. Multisegments
//! are immutable values with structural equality on the canonical map.

use crate::context::{CrystalContext, Residue};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// A segment, stored in head form: `(head, length)` with `length ≥ 1`.
///
/// The tail is derived, never stored: `tail = head + length − 1 (mod e)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Segment {
    head: Residue,
    length: usize,
}

impl Segment {
    /// Head form `[head; length)`. Panics if `length == 0`.
    pub fn new(head: Residue, length: usize) -> Self {
        assert!(length >= 1, "segment length must be >= 1");
        Segment { head, length }
    }

    /// Tail form `(length; tail]`: head is `tail − length + 1 (mod e)`.
    pub fn from_tail(ctx: &CrystalContext, tail: Residue, length: usize) -> Self {
        assert!(length >= 1, "segment length must be >= 1");
        Segment {
            head: ctx.add(tail, -(length as i64 - 1)),
            length,
        }
    }

    pub fn head(&self) -> Residue {
        self.head
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn tail(&self, ctx: &CrystalContext) -> Residue {
        ctx.add(self.head, self.length as i64 - 1)
    }

    /// The residues `head, head+1, …, head+length−1 (mod e)`.
    pub fn residues<'a>(&'a self, ctx: &'a CrystalContext) -> impl Iterator<Item = Residue> + 'a {
        (0..self.length).map(move |k| ctx.add(self.head, k as i64))
    }

    /// Image under the reversal `ρ`: `[i;l) ↦ (l;−i]`.
    pub fn rho(&self, ctx: &CrystalContext) -> Segment {
        Segment::from_tail(ctx, ctx.neg(self.head), self.length)
    }
}

// Canonical order: length descending, then head ascending. Map iteration,
// display and hashing all follow it.
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .length
            .cmp(&self.length)
            .then(self.head.cmp(&other.head))
    }
}

impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{};{})", self.head, self.length)
    }
}

/// A finite multiset of segments; the vertices of `B_e(∞)` are exactly the
/// aperiodic ones.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Multisegment {
    entries: BTreeMap<Segment, usize>,
}

impl Multisegment {
    pub fn empty() -> Self {
        Multisegment::default()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn from_segments<I: IntoIterator<Item = Segment>>(segments: I) -> Self {
        let mut ms = Multisegment::empty();
        for s in segments {
            ms.insert(s, 1);
        }
        ms
    }

    /// Entries in canonical order (length descending, head ascending),
    /// with multiplicities ≥ 1.
    pub fn entries(&self) -> impl Iterator<Item = (Segment, usize)> + '_ {
        self.entries.iter().map(|(s, m)| (*s, *m))
    }

    pub fn multiplicity(&self, seg: Segment) -> usize {
        self.entries.get(&seg).copied().unwrap_or(0)
    }

    pub fn multiplicity_of_tail(
        &self,
        ctx: &CrystalContext,
        tail: Residue,
        length: usize,
    ) -> usize {
        self.multiplicity(Segment::from_tail(ctx, tail, length))
    }

    /// Add `mult` copies of a segment.
    pub fn insert(&mut self, seg: Segment, mult: usize) {
        if mult == 0 {
            return;
        }
        *self.entries.entry(seg).or_insert(0) += mult;
    }

    /// Remove one copy of a segment. Panics if absent; callers only remove
    /// segments whose presence is forced (a logic bug otherwise).
    pub fn remove_one(&mut self, seg: Segment) {
        match self.entries.get_mut(&seg) {
            Some(m) if *m > 1 => *m -= 1,
            Some(_) => {
                self.entries.remove(&seg);
            }
            None => panic!("removed absent segment {seg} from multisegment"),
        }
    }

    /// `|ψ| = Σ length·multiplicity`.
    pub fn rank(&self) -> usize {
        self.entries.iter().map(|(s, m)| s.length() * m).sum()
    }

    /// Largest segment length occurring (0 for the empty multisegment).
    pub fn max_length(&self) -> usize {
        self.entries.keys().map(|s| s.length()).max().unwrap_or(0)
    }

    /// The distinct lengths occurring, in decreasing order.
    pub fn lengths_descending(&self) -> Vec<usize> {
        let mut ls: Vec<usize> = self.entries.keys().map(|s| s.length()).collect();
        ls.sort_unstable();
        ls.dedup();
        ls.reverse();
        ls
    }

    /// A multisegment is aperiodic when, at every occurring length, some
    /// residue is missing among the tails (equivalently among the heads:
    /// head ↦ tail is a bijection at fixed length, so the two counts of
    /// distinct residues agree).
    pub fn is_aperiodic(&self, ctx: &CrystalContext) -> bool {
        let e = ctx.e() as usize;
        let mut heads_by_length: BTreeMap<usize, std::collections::BTreeSet<Residue>> =
            BTreeMap::new();
        for (seg, _) in self.entries() {
            heads_by_length
                .entry(seg.length())
                .or_default()
                .insert(seg.head());
        }
        heads_by_length.values().all(|heads| heads.len() < e)
    }

    /// The reversal `ρ = ♭`: every `[i;l)` becomes `(l;−i]`. An involution
    /// preserving rank and aperiodicity.
    pub fn rho(&self, ctx: &CrystalContext) -> Multisegment {
        let mut out = Multisegment::empty();
        for (seg, m) in self.entries() {
            out.insert(seg.rho(ctx), m);
        }
        out
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return write!(f, "∅");
        }
        let mut first = true;
        for (seg, m) in self.entries() {
            if !first {
                write!(f, "+")?;
            }
            first = false;
            if m > 1 {
                write!(f, "{m}*{seg}")?;
            } else {
                write!(f, "{seg}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx4() -> CrystalContext {
        CrystalContext::new(4).unwrap()
    }

    #[test]
    fn head_tail_duality() {
        let ctx = ctx4();
        let s = Segment::new(ctx.residue(1), 2);
        assert_eq!(s.tail(&ctx), ctx.residue(2));
        let t = Segment::from_tail(&ctx, ctx.residue(3), 2);
        assert_eq!(t.head(), ctx.residue(2));
        // (1;0] is [0;1): a length-1 segment has head = tail.
        assert_eq!(
            Segment::from_tail(&ctx, ctx.residue(0), 1),
            Segment::new(ctx.residue(0), 1)
        );
    }

    #[test]
    fn rho_examples() {
        let ctx = ctx4();
        // [1;2) has residues 1,2; its reversal is (2;3] = [2;2) with residues 2,3.
        let s = Segment::new(ctx.residue(1), 2);
        assert_eq!(s.rho(&ctx), Segment::new(ctx.residue(2), 2));
        // [0;1) is self-paired.
        let u = Segment::new(ctx.residue(0), 1);
        assert_eq!(u.rho(&ctx), u);
    }

    #[test]
    fn rho_is_involution_on_segments() {
        for e in 2..=6 {
            let ctx = CrystalContext::new(e).unwrap();
            for h in 0..e {
                for l in 1..=8 {
                    let s = Segment::new(ctx.residue(h), l);
                    assert_eq!(s.rho(&ctx).rho(&ctx), s);
                }
            }
        }
    }

    #[test]
    fn canonical_order() {
        let ctx = ctx4();
        let mut ms = Multisegment::empty();
        ms.insert(Segment::new(ctx.residue(2), 1), 1);
        ms.insert(Segment::new(ctx.residue(0), 3), 1);
        ms.insert(Segment::new(ctx.residue(3), 3), 2);
        let order: Vec<String> = ms.entries().map(|(s, m)| format!("{m}x{s}")).collect();
        assert_eq!(order, vec!["1x[0;3)", "2x[3;3)", "1x[2;1)"]);
        assert_eq!(ms.rank(), 10);
    }

    #[test]
    fn aperiodicity() {
        let ctx2 = CrystalContext::new(2).unwrap();
        assert!(Multisegment::empty().is_aperiodic(&ctx2));
        // [0;1)+[1;1) at e=2: both tails occur at length 1.
        let ms = Multisegment::from_segments([
            Segment::new(ctx2.residue(0), 1),
            Segment::new(ctx2.residue(1), 1),
        ]);
        assert!(!ms.is_aperiodic(&ctx2));
        let single = Multisegment::from_segments([Segment::new(ctx2.residue(0), 1)]);
        assert!(single.is_aperiodic(&ctx2));
    }

    #[test]
    fn display_empty_and_mult() {
        let ctx = ctx4();
        assert_eq!(Multisegment::empty().to_string(), "∅");
        let mut ms = Multisegment::empty();
        ms.insert(Segment::new(ctx.residue(3), 3), 2);
        assert_eq!(ms.to_string(), "2*[3;3)");
    }
}
