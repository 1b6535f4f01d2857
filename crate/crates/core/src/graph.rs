//! BFS generation of crystal graphs and their DOT / JSON exports.
//!
//! Both generators are deterministic: vertices are listed by rank, sorted
//! canonically within a rank, and edges by (source, residue).

use crate::context::{CrystalContext, Residue};
use crate::fock::{fock_f, MultiPartition};
use crate::infinity::tilde_f;
use crate::multicharge::Multicharge;
use crate::multisegment::Multisegment;
use std::collections::BTreeMap;
use std::fmt::Display;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphEdge {
    pub src: usize,
    pub dst: usize,
    pub residue: Residue,
}

/// A labelled crystal graph: `edges[k]` records `vertices[src] →^i
/// vertices[dst]`.
#[derive(Debug, Clone)]
pub struct CrystalGraph<V> {
    pub vertices: Vec<V>,
    pub edges: Vec<GraphEdge>,
}

fn bfs<V, F>(ctx: &CrystalContext, start: V, max_rank: usize, mut step: F) -> CrystalGraph<V>
where
    V: Clone + Ord,
    F: FnMut(&V, Residue) -> Option<V>,
{
    let mut index: BTreeMap<V, usize> = BTreeMap::new();
    let mut vertices = vec![start.clone()];
    index.insert(start.clone(), 0);
    let mut edges = Vec::new();
    let mut frontier = vec![start];
    for _ in 0..max_rank {
        let mut next: BTreeMap<V, Vec<(usize, Residue)>> = BTreeMap::new();
        for v in &frontier {
            let src = index[v];
            for i in ctx.residues() {
                if let Some(w) = step(v, i) {
                    next.entry(w).or_default().push((src, i));
                }
            }
        }
        let mut new_frontier = Vec::with_capacity(next.len());
        for (w, incoming) in next {
            let dst = *index.entry(w.clone()).or_insert_with(|| {
                vertices.push(w.clone());
                new_frontier.push(w);
                vertices.len() - 1
            });
            for (src, residue) in incoming {
                edges.push(GraphEdge { src, dst, residue });
            }
        }
        frontier = new_frontier;
    }
    edges.sort_by_key(|e| (e.src, e.residue, e.dst));
    CrystalGraph { vertices, edges }
}

/// All vertices of `B_e(∞)` of rank ≤ `max_rank`, with the `f̃` edges
/// between them. Every vertex is aperiodic.
pub fn generate_infinity(ctx: &CrystalContext, max_rank: usize) -> CrystalGraph<Multisegment> {
    let graph = bfs(ctx, Multisegment::empty(), max_rank, |ms, i| {
        Some(tilde_f(ctx, ms, i))
    });
    debug_assert!(graph.vertices.iter().all(|v| v.is_aperiodic(ctx)));
    graph
}

/// All vertices of `B_e(v)` of rank ≤ `max_rank` (the FLOTW
/// multipartitions), with the good-node edges between them.
pub fn generate_fock(
    ctx: &CrystalContext,
    v: &Multicharge,
    max_rank: usize,
) -> CrystalGraph<MultiPartition> {
    bfs(ctx, MultiPartition::empty(v.level()), max_rank, |mp, i| {
        fock_f(ctx, v, mp, i)
    })
}

impl<V: Display> CrystalGraph<V> {
    /// Graphviz DOT, vertices labelled by their canonical text form and
    /// edges by residue.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n  rankdir=TB;\n");
        for (idx, v) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  n{idx} [label=\"{v}\"];\n"));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "  n{} -> n{} [label=\"{}\"];\n",
                e.src, e.dst, e.residue
            ));
        }
        out.push_str("}\n");
        out
    }

    /// JSON export `{nodes: […], edges: [{src, dst, i}]}`.
    pub fn to_json(&self) -> crate::json::GraphJson {
        crate::json::GraphJson {
            nodes: self.vertices.iter().map(|v| v.to_string()).collect(),
            edges: self
                .edges
                .iter()
                .map(|e| crate::json::GraphEdgeJson {
                    src: e.src,
                    dst: e.dst,
                    i: e.residue.value(),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinity_rank_one_and_two_at_e2() {
        let ctx = CrystalContext::new(2).unwrap();
        let g = generate_infinity(&ctx, 1);
        let labels: Vec<String> = g.vertices.iter().map(|v| v.to_string()).collect();
        assert_eq!(labels, vec!["∅", "[0;1)", "[1;1)"]);
        assert_eq!(g.edges.len(), 2);

        let g2 = generate_infinity(&ctx, 2);
        let rank2: Vec<String> = g2
            .vertices
            .iter()
            .filter(|v| v.rank() == 2)
            .map(|v| v.to_string())
            .collect();
        // [0;1)+[1;1) is periodic and never generated.
        assert_eq!(rank2, vec!["[0;2)", "[1;2)", "2*[0;1)", "2*[1;1)"]);
    }

    #[test]
    fn dot_output_shape() {
        let ctx = CrystalContext::new(2).unwrap();
        let g = generate_infinity(&ctx, 1);
        let dot = g.to_dot();
        assert!(dot.starts_with("digraph crystal {"));
        assert!(dot.contains("n0 [label=\"∅\"]"));
        assert!(dot.contains("n0 -> n1 [label=\"0\"]"));
        assert!(dot.trim_end().ends_with('}'));
    }
}
