//! The 2-3 move across a triangle and its inverse 3-2 move at a valence-3
//! edge class. The positive move is admissible for any marked set; the
//! negative move requires the dying valence-3 class to be unmarked and its
//! three corners to lie in three distinct tetrahedra.

use super::splice::{apply_splice, BoundaryMap, Splice};
use super::{MoveError, MoveInstance, RewriteOutcome};
use crate::marked::MarkedTriangulation;
use crate::perm::Perm4;
use crate::skeleton::EdgeSlot;
use crate::tri::{edge_index, face_vertices, FaceSlot};
use std::collections::BTreeMap;

pub(super) fn candidates_pos(m: &MarkedTriangulation) -> Vec<MoveInstance> {
    let mut out = Vec::new();
    for tc in &m.skeleton().triangles {
        let (a, b) = tc.slots;
        if a.tet != b.tet {
            out.push(MoveInstance::MpaPos { face: a });
        }
    }
    out
}

pub(super) fn candidates_neg(m: &MarkedTriangulation) -> Vec<MoveInstance> {
    let mut out = Vec::new();
    for e in &m.skeleton().edges {
        if e.valence() == 3 && e.tets().len() == 3 && !m.is_marked(e.id) {
            out.push(MoveInstance::MpaNeg { edge: e.rep() });
        }
    }
    out
}

fn perm_map(pairs: [(u8, u8); 4]) -> Perm4 {
    let mut img = [0u8; 4];
    for (from, to) in pairs {
        img[from as usize] = to;
    }
    Perm4::new(img).expect("label map is a permutation")
}

pub(super) fn rewrite_pos(
    m: &MarkedTriangulation,
    face: FaceSlot,
) -> Result<RewriteOutcome, MoveError> {
    if face.tet as usize >= m.n_tets() || face.face > 3 {
        return Err(MoveError::NotAdmissible("face slot out of range".into()));
    }
    let t1 = face.tet as usize;
    let f1 = face.face;
    let g = *m.tri().gluing(face);
    let t2 = g.to.tet as usize;
    let f2 = g.to.face;
    let sigma = g.perm;
    if t1 == t2 {
        return Err(MoveError::NotAdmissible(
            "2-3 move needs two distinct tetrahedra".into(),
        ));
    }

    let [u, v, w] = face_vertices(f1);
    // new tet k holds edge pair k of the common face, labels:
    // 0 = apex over t1, 1 = apex over t2, 2..3 = the pair
    let pairs = [(u, v), (u, w), (v, w)];
    let third = [w, v, u];

    let mut sp = Splice {
        removed: {
            let mut r = vec![t1, t2];
            r.sort_unstable();
            r
        },
        added: 3,
        internal: vec![
            (0, 3, 1, 3, Perm4::IDENTITY),
            (0, 2, 2, 3, Perm4([0, 1, 3, 2])),
            (1, 2, 2, 2, Perm4::IDENTITY),
        ],
        boundary: Vec::new(),
        reglue: Vec::new(),
    };
    for k in 0..3 {
        let (x, y) = pairs[k];
        let z = third[k];
        sp.boundary.push(BoundaryMap {
            old: FaceSlot::new(t1, z),
            new_local: k,
            new_face: 1,
            label_map: perm_map([(z, 1), (x, 2), (y, 3), (f1, 0)]),
        });
        sp.boundary.push(BoundaryMap {
            old: FaceSlot::new(t2, sigma.apply(z)),
            new_local: k,
            new_face: 0,
            label_map: perm_map([
                (sigma.apply(z), 0),
                (sigma.apply(x), 2),
                (sigma.apply(y), 3),
                (f2, 1),
            ]),
        });
    }

    let res = apply_splice(m, &sp, &BTreeMap::new())?;
    let central = res.new_tets.iter().copied().min().unwrap();
    Ok(RewriteOutcome {
        out: res.out,
        inverse: MoveInstance::MpaNeg {
            edge: EdgeSlot::new(central, edge_index(0, 1)),
        },
    })
}

pub(super) fn rewrite_neg(
    m: &MarkedTriangulation,
    edge: EdgeSlot,
) -> Result<RewriteOutcome, MoveError> {
    if edge.tet as usize >= m.n_tets() || edge.edge > 5 {
        return Err(MoveError::NotAdmissible("edge slot out of range".into()));
    }
    let sk = m.skeleton();
    let cls = &sk.edges[sk.edge_class_of(edge)];
    if cls.valence() != 3 {
        return Err(MoveError::NotAdmissible(format!(
            "3-2 move needs valence 3, found {}",
            cls.valence()
        )));
    }
    let tets = cls.tets();
    if tets.len() != 3 {
        return Err(MoveError::NotAdmissible(
            "3-2 move needs three distinct tetrahedra".into(),
        ));
    }
    if m.is_marked(cls.id) {
        return Err(MoveError::NotAdmissible(
            "3-2 move would delete a marked edge class".into(),
        ));
    }

    // locals: 0 = tail-side tet, 1 = head-side tet; apexes labeled by page.
    let mut sp = Splice {
        removed: tets.clone(),
        added: 2,
        internal: vec![(0, 3, 1, 3, Perm4::IDENTITY)],
        boundary: Vec::new(),
        reglue: Vec::new(),
    };
    for (k, c) in cls.cycle.iter().enumerate() {
        let k = k as u8;
        let a_in = c.apex(c.entry_face);
        let a_out = c.apex(c.exit_face);
        let kk = k;
        let kn = (k + 1) % 3;
        let rem = 3 - kk - kn;
        // face opposite the tail goes to the head-side tet, and conversely
        sp.boundary.push(BoundaryMap {
            old: FaceSlot::new(c.slot.tet as usize, c.tail),
            new_local: 1,
            new_face: rem,
            label_map: perm_map([(c.head, 3), (a_in, kk), (a_out, kn), (c.tail, rem)]),
        });
        sp.boundary.push(BoundaryMap {
            old: FaceSlot::new(c.slot.tet as usize, c.head),
            new_local: 0,
            new_face: rem,
            label_map: perm_map([(c.tail, 3), (a_in, kk), (a_out, kn), (c.head, rem)]),
        });
    }

    let res = apply_splice(m, &sp, &BTreeMap::new())?;
    Ok(RewriteOutcome {
        out: res.out,
        inverse: MoveInstance::MpaPos {
            face: FaceSlot::new(res.new_tets[0], 3),
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census;
    use crate::moves::{apply, enumerate_moves, MoveKind};
    use std::collections::BTreeSet;

    #[test]
    fn two_three_round_trip_on_census() {
        let m = MarkedTriangulation::unmarked(census::fig8()).unwrap();
        let moves = enumerate_moves(&m, &BTreeSet::from([MoveKind::MpaPos]));
        assert_eq!(moves.len(), 4);
        for mv in moves {
            let (out, rec) = apply(&m, &mv).unwrap();
            assert_eq!(out.n_tets(), 3);
            let (back, rec2) = apply(&out, &rec.inverse).unwrap();
            assert_eq!(back.signature(), rec.sig_before);
            assert_eq!(rec2.sig_after, rec.sig_before);
        }
    }

    #[test]
    fn three_two_needs_distinct_tets() {
        // in the one-tet census tables every edge class lives in one tet
        for tri in census::one_tet_all() {
            let m = MarkedTriangulation::unmarked(tri).unwrap();
            assert!(enumerate_moves(&m, &BTreeSet::from([MoveKind::MpaNeg])).is_empty());
        }
    }

    #[test]
    fn marked_central_edge_blocks_three_two() {
        let m = MarkedTriangulation::unmarked(census::fig8()).unwrap();
        let mv = enumerate_moves(&m, &BTreeSet::from([MoveKind::MpaPos]))[0];
        let (out, rec) = apply(&m, &mv).unwrap();
        // mark the newborn valence-3 class and check its 3-2 is refused
        let MoveInstance::MpaNeg { edge } = rec.inverse else {
            panic!("inverse of a 2-3 move must be a 3-2 move");
        };
        let cls = out.skeleton().edge_class_of(edge);
        let remarked =
            MarkedTriangulation::new(out.tri().clone(), BTreeSet::from([cls])).unwrap();
        let err = apply(&remarked, &rec.inverse).unwrap_err();
        assert!(matches!(err, MoveError::NotAdmissible(_)));
        assert!(enumerate_moves(&remarked, &BTreeSet::from([MoveKind::MpaNeg])).is_empty());
    }
}
