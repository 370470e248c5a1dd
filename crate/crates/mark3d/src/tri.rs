//! Loose triangulations: tetrahedra with a total involutive face-gluing table.
//!
//! Face `f` of a tetrahedron is the face opposite vertex `f`. A gluing carries
//! a full `Perm4` correspondence mapping source labels to target labels, with
//! the opposite vertices matched (`perm[f] == f2`).

use crate::perm::Perm4;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// One face of one tetrahedron.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FaceSlot {
    pub tet: u32,
    pub face: u8,
}

impl FaceSlot {
    pub fn new(tet: usize, face: u8) -> FaceSlot {
        FaceSlot {
            tet: tet as u32,
            face,
        }
    }
}

impl std::fmt::Debug for FaceSlot {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "t{}f{}", self.tet, self.face)
    }
}

/// Gluing data attached to one face slot.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Gluing {
    pub to: FaceSlot,
    /// Source tetrahedron labels to target tetrahedron labels; maps the
    /// source face vertices onto the target face vertices and the source
    /// opposite vertex onto the target opposite vertex.
    pub perm: Perm4,
}

/// Builder input: one gluing statement for face `(tet, face)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GluingEntry {
    pub tet: usize,
    pub face: u8,
    pub to_tet: usize,
    pub to_face: u8,
    pub perm: Perm4,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum TriError {
    #[error("no tetrahedra")]
    Empty,
    #[error("face t{tet}f{face} is never glued")]
    DanglingFace { tet: usize, face: u8 },
    #[error("face t{tet}f{face} is glued more than once")]
    DuplicateFace { tet: usize, face: u8 },
    #[error("face t{tet}f{face} is glued to itself")]
    SelfFace { tet: usize, face: u8 },
    #[error("gluing of t{tet}f{face} is not matched by its inverse")]
    NonInvolutive { tet: usize, face: u8 },
    #[error("gluing of t{tet}f{face} does not map the face onto the target face")]
    BadPermutation { tet: usize, face: u8 },
    #[error("gluing of t{tet}f{face} references tetrahedron {to} out of range")]
    BadIndex { tet: usize, face: u8, to: usize },
    #[error("triangulation is not connected")]
    Disconnected,
    #[error("edge t{tet}e{edge} is identified with itself reversing orientation")]
    ReversedEdge { tet: usize, edge: u8 },
}

/// The vertex label pairs of the six edges of a tetrahedron, indexed 0..6.
pub const EDGE_ENDS: [(u8, u8); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// Edge index of the pair `{a, b}`.
pub fn edge_index(a: u8, b: u8) -> u8 {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    match (a, b) {
        (0, 1) => 0,
        (0, 2) => 1,
        (0, 3) => 2,
        (1, 2) => 3,
        (1, 3) => 4,
        (2, 3) => 5,
        _ => unreachable!("bad edge pair"),
    }
}

/// Index of the edge opposite to edge `e` (disjoint vertex pairs).
pub fn opposite_edge(e: u8) -> u8 {
    5 - e
}

/// The two faces containing edge `e`: the faces opposite the two vertices
/// not on `e`.
pub fn faces_of_edge(e: u8) -> (u8, u8) {
    let (a, b) = EDGE_ENDS[e as usize];
    let (c, d) = EDGE_ENDS[opposite_edge(e) as usize];
    debug_assert!(a != c && a != d && b != c && b != d);
    (c, d)
}

/// The three vertices of face `f` in increasing label order.
pub fn face_vertices(f: u8) -> [u8; 3] {
    match f {
        0 => [1, 2, 3],
        1 => [0, 2, 3],
        2 => [0, 1, 3],
        3 => [0, 1, 2],
        _ => unreachable!("bad face index"),
    }
}

/// A validated loose triangulation. Immutable after construction.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct LooseTriangulation {
    glue: Vec<[Gluing; 4]>,
}

impl LooseTriangulation {
    /// Builds and validates a triangulation from explicit gluing entries.
    /// Every `(tet, face)` pair must be covered exactly once.
    pub fn build(n_tets: usize, entries: &[GluingEntry]) -> Result<LooseTriangulation, TriError> {
        if n_tets == 0 {
            return Err(TriError::Empty);
        }
        let dummy = Gluing {
            to: FaceSlot { tet: u32::MAX, face: 0 },
            perm: Perm4::IDENTITY,
        };
        let mut glue = vec![[dummy; 4]; n_tets];
        let mut seen = vec![[false; 4]; n_tets];
        for e in entries {
            if e.tet >= n_tets || e.face > 3 {
                return Err(TriError::BadIndex {
                    tet: e.tet,
                    face: e.face,
                    to: e.tet,
                });
            }
            if e.to_tet >= n_tets || e.to_face > 3 {
                return Err(TriError::BadIndex {
                    tet: e.tet,
                    face: e.face,
                    to: e.to_tet,
                });
            }
            if seen[e.tet][e.face as usize] {
                return Err(TriError::DuplicateFace {
                    tet: e.tet,
                    face: e.face,
                });
            }
            seen[e.tet][e.face as usize] = true;
            if e.perm.apply(e.face) != e.to_face {
                return Err(TriError::BadPermutation {
                    tet: e.tet,
                    face: e.face,
                });
            }
            glue[e.tet][e.face as usize] = Gluing {
                to: FaceSlot::new(e.to_tet, e.to_face),
                perm: e.perm,
            };
        }
        for t in 0..n_tets {
            for f in 0..4u8 {
                if !seen[t][f as usize] {
                    return Err(TriError::DanglingFace { tet: t, face: f });
                }
            }
        }
        let tri = LooseTriangulation { glue };
        tri.validate()?;
        Ok(tri)
    }

    /// Assembles a triangulation directly from a complete gluing table.
    /// Used by move application; performs the same validation as `build`.
    pub fn from_table(glue: Vec<[Gluing; 4]>) -> Result<LooseTriangulation, TriError> {
        if glue.is_empty() {
            return Err(TriError::Empty);
        }
        let tri = LooseTriangulation { glue };
        tri.validate()?;
        Ok(tri)
    }

    fn validate(&self) -> Result<(), TriError> {
        let n = self.n_tets();
        for t in 0..n {
            for f in 0..4u8 {
                let g = self.gluing(FaceSlot::new(t, f));
                if g.to.tet as usize >= n {
                    return Err(TriError::BadIndex {
                        tet: t,
                        face: f,
                        to: g.to.tet as usize,
                    });
                }
                if g.perm.apply(f) != g.to.face {
                    return Err(TriError::BadPermutation { tet: t, face: f });
                }
                if g.to == FaceSlot::new(t, f) {
                    return Err(TriError::SelfFace { tet: t, face: f });
                }
                let back = self.gluing(g.to);
                if back.to != FaceSlot::new(t, f) || back.perm != g.perm.inverse() {
                    return Err(TriError::NonInvolutive { tet: t, face: f });
                }
            }
        }
        // connectivity over the face-adjacency graph
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(t) = stack.pop() {
            for f in 0..4u8 {
                let to = self.gluing(FaceSlot::new(t, f)).to.tet as usize;
                if !seen[to] {
                    seen[to] = true;
                    stack.push(to);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(TriError::Disconnected);
        }
        // reject edges identified with themselves in reverse; with those gone
        // the vertex links are automatically closed surfaces
        crate::skeleton::Skeleton::compute(self)?;
        Ok(())
    }

    #[inline]
    pub fn n_tets(&self) -> usize {
        self.glue.len()
    }

    #[inline]
    pub fn gluing(&self, slot: FaceSlot) -> &Gluing {
        &self.glue[slot.tet as usize][slot.face as usize]
    }

    pub fn table(&self) -> &[[Gluing; 4]] {
        &self.glue
    }

    /// Copy of the table for rewriting; callers re-validate via `from_table`.
    pub fn table_mut_clone(&self) -> Vec<[Gluing; 4]> {
        self.glue.clone()
    }

    /// Follows the gluing at `slot`, returning the matched slot.
    pub fn partner(&self, slot: FaceSlot) -> FaceSlot {
        self.gluing(slot).to
    }
}

/// Mutation helpers shared by the move rewrites. These operate on raw tables
/// before revalidation.
pub fn set_gluing(table: &mut [[Gluing; 4]], a: FaceSlot, b: FaceSlot, perm_ab: Perm4) {
    debug_assert_eq!(perm_ab.apply(a.face), b.face);
    table[a.tet as usize][a.face as usize] = Gluing { to: b, perm: perm_ab };
    table[b.tet as usize][b.face as usize] = Gluing {
        to: a,
        perm: perm_ab.inverse(),
    };
}

/// Removes tetrahedron `gone` by moving the last tetrahedron into its slot,
/// fixing all references. `gone` must not be glued to anything that matters
/// any more (its slots are overwritten). Returns the old index of the moved
/// tetrahedron (`table.len()` after the call).
pub fn compact_remove(table: &mut Vec<[Gluing; 4]>, gone: usize) {
    let last = table.len() - 1;
    if gone != last {
        table.swap(gone, last);
        for t in 0..last {
            for f in 0..4 {
                let to = &mut table[t][f].to;
                if to.tet as usize == last {
                    to.tet = gone as u32;
                } else if to.tet as usize == gone {
                    to.tet = last as u32;
                }
            }
        }
        // fix references inside the moved tet itself
        for f in 0..4 {
            let to = &mut table[gone][f].to;
            if to.tet as usize == last {
                to.tet = gone as u32;
            } else if to.tet as usize == gone {
                to.tet = last as u32;
            }
        }
    }
    table.pop();
}

#[cfg(test)]
mod tests {
    use super::*;

    /// One tetrahedron, faces 0<->1 and 2<->3 glued by label swaps.
    pub fn one_tet() -> LooseTriangulation {
        let p01 = Perm4([1, 0, 2, 3]);
        let p23 = Perm4([0, 1, 3, 2]);
        LooseTriangulation::build(
            1,
            &[
                GluingEntry { tet: 0, face: 0, to_tet: 0, to_face: 1, perm: p01 },
                GluingEntry { tet: 0, face: 1, to_tet: 0, to_face: 0, perm: p01.inverse() },
                GluingEntry { tet: 0, face: 2, to_tet: 0, to_face: 3, perm: p23 },
                GluingEntry { tet: 0, face: 3, to_tet: 0, to_face: 2, perm: p23.inverse() },
            ],
        )
        .unwrap()
    }

    #[test]
    fn build_validates() {
        let tri = one_tet();
        assert_eq!(tri.n_tets(), 1);
    }

    #[test]
    fn missing_face_is_dangling() {
        let p01 = Perm4([1, 0, 2, 3]);
        let err = LooseTriangulation::build(
            1,
            &[
                GluingEntry { tet: 0, face: 0, to_tet: 0, to_face: 1, perm: p01 },
                GluingEntry { tet: 0, face: 1, to_tet: 0, to_face: 0, perm: p01.inverse() },
            ],
        )
        .unwrap_err();
        assert_eq!(err, TriError::DanglingFace { tet: 0, face: 2 });
    }

    #[test]
    fn self_face_rejected() {
        let err = LooseTriangulation::build(
            1,
            &[
                GluingEntry { tet: 0, face: 0, to_tet: 0, to_face: 0, perm: Perm4([0, 2, 1, 3]) },
                GluingEntry { tet: 0, face: 1, to_tet: 0, to_face: 1, perm: Perm4([2, 1, 0, 3]) },
                GluingEntry { tet: 0, face: 2, to_tet: 0, to_face: 3, perm: Perm4([0, 1, 3, 2]) },
                GluingEntry { tet: 0, face: 3, to_tet: 0, to_face: 2, perm: Perm4([0, 1, 3, 2]) },
            ],
        )
        .unwrap_err();
        assert!(matches!(err, TriError::SelfFace { .. }));
    }

    #[test]
    fn non_involutive_rejected() {
        // two tets, 0f0 -> 1f0 but 1f0 -> 0f0 with a mismatched perm
        let mut entries = Vec::new();
        entries.push(GluingEntry { tet: 0, face: 0, to_tet: 1, to_face: 0, perm: Perm4([0, 1, 2, 3]) });
        entries.push(GluingEntry { tet: 1, face: 0, to_tet: 0, to_face: 0, perm: Perm4([0, 1, 3, 2]) });
        for f in 1..4u8 {
            entries.push(GluingEntry { tet: 0, face: f, to_tet: 1, to_face: f, perm: Perm4::IDENTITY });
            entries.push(GluingEntry { tet: 1, face: f, to_tet: 0, to_face: f, perm: Perm4::IDENTITY });
        }
        let err = LooseTriangulation::build(2, &entries).unwrap_err();
        assert!(matches!(err, TriError::NonInvolutive { .. }));
    }
}
