//! The admissible move calculus on marked triangulations.
//!
//! Every move is a local region rewrite of the gluing table: a set of
//! tetrahedra is removed, new tetrahedra are inserted with prescribed
//! internal gluings, and the boundary faces of the region are rerouted
//! through explicit label maps. Marked edge classes are transported by
//! mapping representative slots through the rewrite.
//!
//! Positive moves are always admissible; negative moves require that the
//! cells they delete are unmarked, plus kind-specific pattern conditions.

mod ba;
mod ca;
mod lune;
mod mpa;
mod splice;

pub use splice::{BoundaryMap, Splice};

use crate::marked::MarkedTriangulation;
use crate::sign::Signature;
use crate::skeleton::{EdgeSlot, VertexSlot};
use crate::tri::FaceSlot;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum MoveKind {
    MpaPos,
    MpaNeg,
    VaPos,
    VaNeg,
    LaPos,
    LaNeg,
    CaPos,
    CaNeg,
    BaPos,
    BaNeg,
}

impl MoveKind {
    pub fn is_positive(&self) -> bool {
        matches!(
            self,
            MoveKind::MpaPos | MoveKind::VaPos | MoveKind::LaPos | MoveKind::CaPos | MoveKind::BaPos
        )
    }

    /// Declared tetrahedron delta of the kind.
    pub fn tet_delta(&self) -> i64 {
        match self {
            MoveKind::MpaPos => 1,
            MoveKind::MpaNeg => -1,
            MoveKind::VaPos => 2,
            MoveKind::VaNeg => -2,
            MoveKind::LaPos => 2,
            MoveKind::LaNeg => -2,
            MoveKind::CaPos => ca::CA_TET_DELTA,
            MoveKind::CaNeg => -ca::CA_TET_DELTA,
            MoveKind::BaPos => 3,
            MoveKind::BaNeg => -3,
        }
    }

    pub fn all() -> [MoveKind; 10] {
        [
            MoveKind::MpaPos,
            MoveKind::MpaNeg,
            MoveKind::VaPos,
            MoveKind::VaNeg,
            MoveKind::LaPos,
            MoveKind::LaNeg,
            MoveKind::CaPos,
            MoveKind::CaNeg,
            MoveKind::BaPos,
            MoveKind::BaNeg,
        ]
    }

    pub fn parse(s: &str) -> Option<MoveKind> {
        Some(match s.to_ascii_lowercase().as_str() {
            "mpa+" => MoveKind::MpaPos,
            "mpa-" => MoveKind::MpaNeg,
            "va+" => MoveKind::VaPos,
            "va-" => MoveKind::VaNeg,
            "la+" => MoveKind::LaPos,
            "la-" => MoveKind::LaNeg,
            "ca+" => MoveKind::CaPos,
            "ca-" => MoveKind::CaNeg,
            "ba+" => MoveKind::BaPos,
            "ba-" => MoveKind::BaNeg,
            _ => return None,
        })
    }
}

impl std::fmt::Display for MoveKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            MoveKind::MpaPos => "mpa+",
            MoveKind::MpaNeg => "mpa-",
            MoveKind::VaPos => "va+",
            MoveKind::VaNeg => "va-",
            MoveKind::LaPos => "la+",
            MoveKind::LaNeg => "la-",
            MoveKind::CaPos => "ca+",
            MoveKind::CaNeg => "ca-",
            MoveKind::BaPos => "ba+",
            MoveKind::BaNeg => "ba-",
        };
        write!(f, "{s}")
    }
}

/// Which heir of a divided marked region keeps the mark in a positive
/// lune-type move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum MarkSide {
    /// The region is unmarked; nothing to choose.
    Unmarked,
    /// The mark stays on the side the block is cut from.
    KeepA,
    /// The mark stays on the complementary side.
    KeepB,
}

/// A fully parameterized move instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum MoveInstance {
    /// 2-3 move across the gluing at `face` (two distinct tetrahedra).
    MpaPos { face: FaceSlot },
    /// 3-2 move removing the valence-3 unmarked edge class of `edge`.
    MpaNeg { edge: EdgeSlot },
    /// Corner-cut lune at the corner `(tet, corner_edge)`; enumeration uses
    /// `corner_edge < 3`, application accepts any corner.
    VaPos { tet: u32, corner_edge: u8 },
    /// Inverse of a corner cut, detected at the lune bigon of `bigon`.
    VaNeg { bigon: EdgeSlot },
    /// Lune insertion along the arc cutting `len` corners of the cycle of
    /// `edge` starting at cycle position `start`.
    LaPos {
        edge: EdgeSlot,
        start: u16,
        len: u16,
        mark_side: MarkSide,
    },
    /// Lune removal at the bigon of `bigon`.
    LaNeg { bigon: EdgeSlot },
    /// Arch-creating move at a tetrahedron; `choice` in `0..12`.
    CaPos { tet: u32, choice: u8 },
    /// Inverse arch move, detected at its anchor bigon.
    CaNeg { bigon: EdgeSlot },
    /// 1-4 ideal subdivision of a tetrahedron (adds a sphere boundary).
    BaPos { tet: u32 },
    /// Inverse 1-4 move removing the sphere-link vertex class of `vertex`.
    BaNeg { vertex: VertexSlot },
}

impl MoveInstance {
    pub fn kind(&self) -> MoveKind {
        match self {
            MoveInstance::MpaPos { .. } => MoveKind::MpaPos,
            MoveInstance::MpaNeg { .. } => MoveKind::MpaNeg,
            MoveInstance::VaPos { .. } => MoveKind::VaPos,
            MoveInstance::VaNeg { .. } => MoveKind::VaNeg,
            MoveInstance::LaPos { .. } => MoveKind::LaPos,
            MoveInstance::LaNeg { .. } => MoveKind::LaNeg,
            MoveInstance::CaPos { .. } => MoveKind::CaPos,
            MoveInstance::CaNeg { .. } => MoveKind::CaNeg,
            MoveInstance::BaPos { .. } => MoveKind::BaPos,
            MoveInstance::BaNeg { .. } => MoveKind::BaNeg,
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("move not admissible: {0}")]
    NotAdmissible(String),
    #[error("negative lune move would merge a region with itself")]
    StandardnessLost,
}

/// Outcome of a single applied move.
#[derive(Clone, Debug)]
pub struct MoveRecord {
    pub instance: MoveInstance,
    pub inverse: MoveInstance,
    pub sig_before: Signature,
    pub sig_after: Signature,
}

/// Result of the raw rewrite, before signatures are attached.
pub(crate) struct RewriteOutcome {
    pub out: MarkedTriangulation,
    pub inverse: MoveInstance,
}

/// Options modulating move enumeration.
#[derive(Clone, Debug, Default)]
pub struct MoveOptions {
    /// Vertex classes whose sphere links must not be removed by negative
    /// Ba-moves (protecting original boundary components).
    pub protect_spheres: BTreeSet<usize>,
}

pub(crate) fn rewrite(
    m: &MarkedTriangulation,
    mv: &MoveInstance,
) -> Result<RewriteOutcome, MoveError> {
    match mv {
        MoveInstance::MpaPos { face } => mpa::rewrite_pos(m, *face),
        MoveInstance::MpaNeg { edge } => mpa::rewrite_neg(m, *edge),
        MoveInstance::VaPos { tet, corner_edge } => lune::rewrite_va_pos(m, *tet, *corner_edge),
        MoveInstance::VaNeg { bigon } => lune::rewrite_neg(m, *bigon, true),
        MoveInstance::LaPos {
            edge,
            start,
            len,
            mark_side,
        } => lune::rewrite_la_pos(m, *edge, *start as usize, *len as usize, *mark_side),
        MoveInstance::LaNeg { bigon } => lune::rewrite_neg(m, *bigon, false),
        MoveInstance::CaPos { tet, choice } => ca::rewrite_pos(m, *tet, *choice),
        MoveInstance::CaNeg { bigon } => ca::rewrite_neg(m, *bigon),
        MoveInstance::BaPos { tet } => ba::rewrite_pos(m, *tet),
        MoveInstance::BaNeg { vertex } => ba::rewrite_neg(m, *vertex),
    }
}

/// Applies one admissible move, producing the rewritten triangulation and a
/// replayable record.
pub fn apply(
    m: &MarkedTriangulation,
    mv: &MoveInstance,
) -> Result<(MarkedTriangulation, MoveRecord), MoveError> {
    let outcome = rewrite(m, mv)?;
    let sig_before = m.signature();
    let sig_after = outcome.out.signature();
    let delta = outcome.out.n_tets() as i64 - m.n_tets() as i64;
    assert_eq!(
        delta,
        mv.kind().tet_delta(),
        "move {mv:?} produced tetrahedron delta {delta}"
    );
    assert_eq!(
        outcome.out.marked().len(),
        m.marked().len(),
        "move {mv:?} changed the marked count"
    );
    Ok((
        outcome.out,
        MoveRecord {
            instance: *mv,
            inverse: outcome.inverse,
            sig_before,
            sig_after,
        },
    ))
}

/// Applies one move without computing signatures; used by searches.
pub fn apply_raw(
    m: &MarkedTriangulation,
    mv: &MoveInstance,
) -> Result<MarkedTriangulation, MoveError> {
    let outcome = rewrite(m, mv)?;
    debug_assert_eq!(
        outcome.out.n_tets() as i64 - m.n_tets() as i64,
        mv.kind().tet_delta()
    );
    Ok(outcome.out)
}

/// The move instance undoing a recorded move.
pub fn invert(r: &MoveRecord) -> MoveInstance {
    r.inverse
}

/// Enumerates every applicable admissible instance of the requested kinds,
/// each exactly once, in deterministic order.
pub fn enumerate_moves(m: &MarkedTriangulation, kinds: &BTreeSet<MoveKind>) -> Vec<MoveInstance> {
    enumerate_moves_opt(m, kinds, &MoveOptions::default())
}

pub fn enumerate_moves_opt(
    m: &MarkedTriangulation,
    kinds: &BTreeSet<MoveKind>,
    opts: &MoveOptions,
) -> Vec<MoveInstance> {
    let mut out = Vec::new();
    for kind in MoveKind::all() {
        if !kinds.contains(&kind) {
            continue;
        }
        let mut candidates = match kind {
            MoveKind::MpaPos => mpa::candidates_pos(m),
            MoveKind::MpaNeg => mpa::candidates_neg(m),
            MoveKind::VaPos => lune::candidates_va_pos(m),
            MoveKind::VaNeg => lune::candidates_va_neg(m),
            MoveKind::LaPos => lune::candidates_la_pos(m),
            MoveKind::LaNeg => lune::candidates_la_neg(m),
            MoveKind::CaPos => ca::candidates_pos(m),
            MoveKind::CaNeg => ca::candidates_neg(m),
            MoveKind::BaPos => ba::candidates_pos(m),
            MoveKind::BaNeg => ba::candidates_neg(m, opts),
        };
        candidates.retain(|mv| rewrite(m, mv).is_ok());
        out.extend(candidates);
    }
    out
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ReplayError {
    #[error("step {index}: {source}")]
    Step {
        index: usize,
        #[source]
        source: MoveError,
    },
}

/// Applies a sequence of instances, returning the final triangulation and
/// the full record trail. Fails with the index of the first inadmissible
/// step.
pub fn replay(
    m: &MarkedTriangulation,
    seq: &[MoveInstance],
) -> Result<(MarkedTriangulation, Vec<MoveRecord>), ReplayError> {
    let mut cur = m.clone();
    let mut trail = Vec::with_capacity(seq.len());
    for (index, mv) in seq.iter().enumerate() {
        let (next, rec) = apply(&cur, mv).map_err(|source| ReplayError::Step { index, source })?;
        trail.push(rec);
        cur = next;
    }
    Ok((cur, trail))
}
