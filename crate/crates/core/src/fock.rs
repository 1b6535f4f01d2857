//! `l`-partitions, FLOTW membership, the good-node crystal structure on
//! `B_e(v)`, and the embedding `f_v` into multisegments.

use crate::context::{CrystalContext, Residue};
use crate::error::Error;
use crate::infinity::CrystalPath;
use crate::multicharge::Multicharge;
use crate::multisegment::{Multisegment, Segment};
use std::fmt;

/// An `l`-tuple of partitions. Each component is a non-increasing sequence
/// of positive parts; trailing zeros are implicit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiPartition {
    components: Vec<Vec<usize>>,
}

impl MultiPartition {
    /// Validates shape: parts non-increasing within each component.
    /// Zero parts are accepted on input and trimmed.
    pub fn new(components: Vec<Vec<usize>>) -> Result<Self, Error> {
        if components.is_empty() {
            return Err(Error::InvalidMultiPartition(
                "level must be at least 1".into(),
            ));
        }
        let mut cleaned = Vec::with_capacity(components.len());
        for comp in components {
            if comp.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidMultiPartition(format!(
                    "component {comp:?} is not non-increasing"
                )));
            }
            // Non-increasing, so zeros can only trail; trim them.
            cleaned.push(comp.into_iter().take_while(|&p| p > 0).collect());
        }
        Ok(MultiPartition {
            components: cleaned,
        })
    }

    pub fn empty(level: usize) -> Self {
        assert!(level >= 1);
        MultiPartition {
            components: vec![vec![]; level],
        }
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    pub fn component(&self, c: usize) -> &[usize] {
        &self.components[c]
    }

    /// Part at 1-based row `row` of component `c` (0 beyond the diagram).
    pub fn part(&self, c: usize, row: usize) -> usize {
        assert!(row >= 1);
        self.components[c].get(row - 1).copied().unwrap_or(0)
    }

    /// Number of nonzero parts of component `c`.
    pub fn depth(&self, c: usize) -> usize {
        self.components[c].len()
    }

    pub fn rank(&self) -> usize {
        self.components.iter().flatten().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.components.iter().all(|c| c.is_empty())
    }

    /// Smallest nonzero part (None when empty).
    pub fn min_part(&self) -> Option<usize> {
        self.components.iter().flatten().min().copied()
    }

    /// Delete every part equal to the minimal nonzero part.
    pub fn strip_min_parts(&self) -> MultiPartition {
        let Some(m) = self.min_part() else {
            return self.clone();
        };
        MultiPartition {
            components: self
                .components
                .iter()
                .map(|comp| comp.iter().copied().filter(|&p| p != m).collect())
                .collect(),
        }
    }

    fn with_box_added(&self, node: Node) -> MultiPartition {
        let mut components = self.components.clone();
        let comp = &mut components[node.component];
        if node.row == comp.len() + 1 {
            assert_eq!(node.col, 1, "new row must start at column 1");
            comp.push(1);
        } else {
            assert_eq!(comp[node.row - 1] + 1, node.col, "box is not addable");
            comp[node.row - 1] += 1;
        }
        MultiPartition { components }
    }

    fn with_box_removed(&self, node: Node) -> MultiPartition {
        let mut components = self.components.clone();
        let comp = &mut components[node.component];
        assert_eq!(comp[node.row - 1], node.col, "box is not removable");
        comp[node.row - 1] -= 1;
        if comp[node.row - 1] == 0 {
            assert_eq!(node.row, comp.len(), "only the last row may vanish");
            comp.pop();
        }
        MultiPartition { components }
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self
            .components
            .iter()
            .map(|comp| {
                if comp.is_empty() {
                    "-".to_string()
                } else {
                    comp.iter()
                        .map(|p| p.to_string())
                        .collect::<Vec<_>>()
                        .join(".")
                }
            })
            .collect();
        write!(f, "{}", comps.join("|"))
    }
}

/// A node `γ = (a, b, c)` of an `l`-partition: row `a`, column `b`
/// (both 1-based) in component `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Node {
    pub row: usize,
    pub col: usize,
    pub component: usize,
}

impl Node {
    /// Content `b − a + v_c`, an integer computed with the actual
    /// multicharge values.
    pub fn content(&self, v: &Multicharge) -> i64 {
        self.col as i64 - self.row as i64 + v.value(self.component)
    }

    pub fn residue(&self, ctx: &CrystalContext, v: &Multicharge) -> Residue {
        ctx.residue(self.content(v))
    }
}

/// Tag of a node in a node word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeTag {
    Addable,
    Removable,
}

fn check_level(v: &Multicharge, mp: &MultiPartition) -> Result<(), Error> {
    if v.level() != mp.level() {
        return Err(Error::LevelMismatch {
            expected: v.level(),
            found: mp.level(),
        });
    }
    Ok(())
}

fn addable_nodes(mp: &MultiPartition, c: usize) -> Vec<Node> {
    let comp = mp.component(c);
    let mut nodes = Vec::new();
    for row in 1..=comp.len() + 1 {
        let here = mp.part(c, row);
        let above = if row == 1 {
            usize::MAX
        } else {
            mp.part(c, row - 1)
        };
        if above > here {
            nodes.push(Node {
                row,
                col: here + 1,
                component: c,
            });
        }
    }
    nodes
}

fn removable_nodes(mp: &MultiPartition, c: usize) -> Vec<Node> {
    let comp = mp.component(c);
    let mut nodes = Vec::new();
    for row in 1..=comp.len() {
        if mp.part(c, row) > mp.part(c, row + 1) {
            nodes.push(Node {
                row,
                col: mp.part(c, row),
                component: c,
            });
        }
    }
    nodes
}

/// All addable and removable `i`-nodes in increasing `≺_v` order: content
/// ascending, ties broken by component index descending. Equal-content
/// ties within one component cannot occur and are asserted away.
pub fn node_word(
    ctx: &CrystalContext,
    v: &Multicharge,
    mp: &MultiPartition,
    i: Residue,
) -> Vec<(Node, NodeTag)> {
    let mut word: Vec<(Node, NodeTag)> = Vec::new();
    for c in 0..mp.level() {
        for n in addable_nodes(mp, c) {
            if n.residue(ctx, v) == i {
                word.push((n, NodeTag::Addable));
            }
        }
        for n in removable_nodes(mp, c) {
            if n.residue(ctx, v) == i {
                word.push((n, NodeTag::Removable));
            }
        }
    }
    word.sort_by(|(n1, _), (n2, _)| {
        n1.content(v)
            .cmp(&n2.content(v))
            .then(n2.component.cmp(&n1.component))
    });
    for w in word.windows(2) {
        assert!(
            !(w[0].0.content(v) == w[1].0.content(v) && w[0].0.component == w[1].0.component),
            "two i-nodes share content and component"
        );
    }
    word
}

/// Good-node data extracted from the reduced node word `A^r R^s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FockStats {
    /// `ε_i`: surviving `R` count.
    pub eps: usize,
    /// `φ_i`: surviving `A` count.
    pub phi: usize,
    /// Rightmost surviving addable node (the good addable `i`-node).
    pub good_addable: Option<Node>,
    /// Leftmost surviving removable node (the good removable `i`-node).
    pub good_removable: Option<Node>,
}

pub fn fock_stats(
    ctx: &CrystalContext,
    v: &Multicharge,
    mp: &MultiPartition,
    i: Residue,
) -> FockStats {
    let word = node_word(ctx, v, mp, i);
    let mut stack: Vec<usize> = Vec::new();
    for (idx, (_, tag)) in word.iter().enumerate() {
        match tag {
            NodeTag::Removable => stack.push(idx),
            NodeTag::Addable => {
                if stack
                    .last()
                    .is_some_and(|&top| word[top].1 == NodeTag::Removable)
                {
                    stack.pop();
                } else {
                    stack.push(idx);
                }
            }
        }
    }
    let phi = stack
        .iter()
        .take_while(|&&idx| word[idx].1 == NodeTag::Addable)
        .count();
    let eps = stack.len() - phi;
    FockStats {
        eps,
        phi,
        good_addable: if phi > 0 {
            Some(word[stack[phi - 1]].0)
        } else {
            None
        },
        good_removable: if eps > 0 {
            Some(word[stack[phi]].0)
        } else {
            None
        },
    }
}

/// `f̃_i` on the Fock crystal: add the good addable `i`-node, `None` when
/// there is none.
pub fn fock_f(
    ctx: &CrystalContext,
    v: &Multicharge,
    mp: &MultiPartition,
    i: Residue,
) -> Option<MultiPartition> {
    fock_stats(ctx, v, mp, i)
        .good_addable
        .map(|n| mp.with_box_added(n))
}

/// `ẽ_i` on the Fock crystal: remove the good removable `i`-node, `None`
/// when there is none.
pub fn fock_e(
    ctx: &CrystalContext,
    v: &Multicharge,
    mp: &MultiPartition,
    i: Residue,
) -> Option<MultiPartition> {
    fock_stats(ctx, v, mp, i)
        .good_removable
        .map(|n| mp.with_box_removed(n))
}

pub fn fock_eps(ctx: &CrystalContext, v: &Multicharge, mp: &MultiPartition, i: Residue) -> usize {
    fock_stats(ctx, v, mp, i).eps
}

pub fn fock_phi(ctx: &CrystalContext, v: &Multicharge, mp: &MultiPartition, i: Residue) -> usize {
    fock_stats(ctx, v, mp, i).phi
}

pub fn fock_eps_vector(ctx: &CrystalContext, v: &Multicharge, mp: &MultiPartition) -> Vec<usize> {
    ctx.residues().map(|i| fock_eps(ctx, v, mp, i)).collect()
}

/// FLOTW membership of `λ` for `v ∈ V_l`:
///
/// 1. `λ^j_a ≥ λ^{j+1}_{a + v_{j+1} − v_j}` for all rows `a` and
///    `j = 0, …, l−2`, and `λ^{l−1}_a ≥ λ^0_{a + e + v_0 − v_{l−1}}`;
/// 2. at every occurring part length, the residues at the right ends of
///    the rows of that length form a proper subset of `Z/eZ`.
pub fn is_flotw(ctx: &CrystalContext, v: &Multicharge, mp: &MultiPartition) -> Result<bool, Error> {
    check_level(v, mp)?;
    let l = v.level();
    for j in 0..l {
        let (next, shift) = if j + 1 < l {
            (j + 1, v.value(j + 1) - v.value(j))
        } else {
            (0, ctx.e() as i64 + v.value(0) - v.value(l - 1))
        };
        debug_assert!(shift >= 0);
        let rows = mp.depth(j).max(mp.depth(next));
        for a in 1..=rows {
            if mp.part(j, a) < mp.part(next, a + shift as usize) {
                return Ok(false);
            }
        }
    }

    // Condition 2: end residues per part length.
    let mut by_length: std::collections::BTreeMap<usize, std::collections::BTreeSet<Residue>> =
        Default::default();
    for c in 0..l {
        for (row0, &p) in mp.component(c).iter().enumerate() {
            let end = Node {
                row: row0 + 1,
                col: p,
                component: c,
            };
            by_length.entry(p).or_default().insert(end.residue(ctx, v));
        }
    }
    Ok(by_length.values().all(|res| res.len() < ctx.e() as usize))
}

/// The embedding `f_v`: every nonzero part `λ^c_a` contributes the segment
/// of head `(1 − a + v_c) mod e` and length `λ^c_a`. Requires FLOTW input,
/// which guarantees an aperiodic image.
pub fn f_v(
    ctx: &CrystalContext,
    v: &Multicharge,
    mp: &MultiPartition,
) -> Result<Multisegment, Error> {
    if !is_flotw(ctx, v, mp)? {
        return Err(Error::NotFlotw(format!(
            "{mp} is not FLOTW for multicharge ({v})"
        )));
    }
    let mut out = Multisegment::empty();
    for c in 0..mp.level() {
        for (row0, &p) in mp.component(c).iter().enumerate() {
            let head = ctx.residue(1 - (row0 as i64 + 1) + v.value(c));
            out.insert(Segment::new(head, p), 1);
        }
    }
    debug_assert!(out.is_aperiodic(ctx));
    Ok(out)
}

/// Raising path in `B_e(v)`, lowering with `ẽ` at the smallest residue with
/// positive `ε` each step. Panics when stuck before the empty multipartition.
pub fn fock_raising_path(
    ctx: &CrystalContext,
    v: &Multicharge,
    mp: &MultiPartition,
) -> CrystalPath {
    let mut steps = Vec::with_capacity(mp.rank());
    let mut cur = mp.clone();
    for _ in 0..mp.rank() {
        let mut moved = false;
        for i in ctx.residues() {
            if let Some(next) = fock_e(ctx, v, &cur, i) {
                steps.push(i);
                cur = next;
                moved = true;
                break;
            }
        }
        assert!(
            moved,
            "fock raising path stuck before the empty multipartition"
        );
    }
    assert!(
        cur.is_empty(),
        "fock raising path did not empty the multipartition"
    );
    CrystalPath::new(steps)
}

/// Replay a path through `fock_f` from the empty multipartition; `None`
/// when some step vanishes.
pub fn fock_replay(
    ctx: &CrystalContext,
    v: &Multicharge,
    path: &CrystalPath,
) -> Option<MultiPartition> {
    let mut cur = MultiPartition::empty(v.level());
    for &i in path.steps().iter().rev() {
        cur = fock_f(ctx, v, &cur, i)?;
    }
    Some(cur)
}
