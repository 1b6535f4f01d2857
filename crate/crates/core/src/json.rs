//! JSON wire forms.
//!
//! - multisegment: `{"e": 4, "segments": [{"head": 0, "length": 6, "mult": 1}, …]}`
//!   with segments in canonical order;
//! - multipartition: `{"components": [[6,5,2],[5,3,1],[4,3,3]]}`;
//! - graph: `{"nodes": […], "edges": [{"src", "dst", "i"}]}`;
//! - commutor vertex: `{"left_charge": […], "right_charge": […], "lambda": {…}}`.

use crate::context::CrystalContext;
use crate::error::Error;
use crate::fock::MultiPartition;
use crate::involution::HighestWeightVertex;
use crate::multicharge::Multicharge;
use crate::multisegment::{Multisegment, Segment};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SegmentJson {
    pub head: i64,
    pub length: usize,
    pub mult: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultisegmentJson {
    pub e: i64,
    pub segments: Vec<SegmentJson>,
}

impl MultisegmentJson {
    pub fn encode(ctx: &CrystalContext, ms: &Multisegment) -> Self {
        MultisegmentJson {
            e: ctx.e() as i64,
            segments: ms
                .entries()
                .map(|(seg, mult)| SegmentJson {
                    head: seg.head().value() as i64,
                    length: seg.length(),
                    mult,
                })
                .collect(),
        }
    }

    pub fn decode(&self) -> Result<(CrystalContext, Multisegment), Error> {
        let ctx = CrystalContext::new(self.e)?;
        let mut ms = Multisegment::empty();
        for s in &self.segments {
            if s.length < 1 {
                return Err(Error::parse(0, "segment length must be at least 1"));
            }
            if s.mult < 1 {
                return Err(Error::parse(0, "multiplicity must be at least 1"));
            }
            ms.insert(Segment::new(ctx.residue(s.head), s.length), s.mult);
        }
        Ok((ctx, ms))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultiPartitionJson {
    pub components: Vec<Vec<usize>>,
}

impl MultiPartitionJson {
    pub fn encode(mp: &MultiPartition) -> Self {
        MultiPartitionJson {
            components: mp.components().to_vec(),
        }
    }

    pub fn decode(&self) -> Result<MultiPartition, Error> {
        MultiPartition::new(self.components.clone())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphEdgeJson {
    pub src: usize,
    pub dst: usize,
    pub i: u32,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphJson {
    pub nodes: Vec<String>,
    pub edges: Vec<GraphEdgeJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CommutorVertexJson {
    pub left_charge: Vec<i64>,
    pub right_charge: Vec<i64>,
    pub lambda: MultiPartitionJson,
}

impl CommutorVertexJson {
    pub fn encode(h: &HighestWeightVertex) -> Self {
        CommutorVertexJson {
            left_charge: h.left_charge().values().to_vec(),
            right_charge: h.right_charge().values().to_vec(),
            lambda: MultiPartitionJson::encode(h.lambda()),
        }
    }

    pub fn decode(&self, ctx: &CrystalContext) -> Result<HighestWeightVertex, Error> {
        let left = Multicharge::new(ctx, self.left_charge.clone())?;
        let right = Multicharge::new(ctx, self.right_charge.clone())?;
        HighestWeightVertex::new(ctx, left, right, self.lambda.decode()?)
    }
}
