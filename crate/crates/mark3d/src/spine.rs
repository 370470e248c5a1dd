//! Cell counts of the dual standard spine.
//!
//! Spine vertices, edges and regions are dual to tetrahedra, triangle classes
//! and edge classes respectively.

use crate::link::link_multiset;
use crate::skeleton::Skeleton;
use crate::tri::LooseTriangulation;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpineStats {
    pub spine_vertices: usize,
    pub spine_edges: usize,
    pub spine_regions: usize,
    pub euler: i64,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SpineError {
    #[error("euler count {euler} disagrees with half the total link characteristic {links}")]
    EulerMismatch { euler: i64, links: i64 },
}

pub fn spine_stats(tri: &LooseTriangulation, sk: &Skeleton) -> Result<SpineStats, SpineError> {
    let v = tri.n_tets();
    let e = sk.triangles.len();
    let r = sk.edges.len();
    let euler = v as i64 - e as i64 + r as i64;
    let links: i64 = link_multiset(tri, sk).iter().map(|l| l.euler).sum();
    if links % 2 != 0 || euler != links / 2 {
        return Err(SpineError::EulerMismatch { euler, links });
    }
    Ok(SpineStats {
        spine_vertices: v,
        spine_edges: e,
        spine_regions: r,
        euler,
    })
}
