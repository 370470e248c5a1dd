//! The 1-4 ideal subdivision of a tetrahedron and its inverse. The positive
//! move punctures the manifold: the new vertex class has a sphere link. The
//! negative move removes a sphere-link vertex of degree four sitting in the
//! subdivision pattern, provided none of the four dying edge classes is
//! marked.

use super::splice::{apply_splice, BoundaryMap, Splice};
use super::{MoveError, MoveInstance, MoveOptions, RewriteOutcome};
use crate::link::vertex_link;
use crate::marked::MarkedTriangulation;
use crate::perm::Perm4;
use crate::skeleton::VertexSlot;
use crate::tri::FaceSlot;
use std::collections::BTreeMap;

pub(super) fn candidates_pos(m: &MarkedTriangulation) -> Vec<MoveInstance> {
    (0..m.n_tets())
        .map(|t| MoveInstance::BaPos { tet: t as u32 })
        .collect()
}

pub(super) fn candidates_neg(m: &MarkedTriangulation, opts: &MoveOptions) -> Vec<MoveInstance> {
    let sk = m.skeleton();
    let mut out = Vec::new();
    for vc in &sk.vertices {
        if vc.members.len() != 4 || opts.protect_spheres.contains(&vc.id) {
            continue;
        }
        let mut tets: Vec<u32> = vc.members.iter().map(|s| s.tet).collect();
        tets.dedup();
        if tets.len() != 4 {
            continue;
        }
        if !vertex_link(m.tri(), sk, vc.id).is_sphere() {
            continue;
        }
        out.push(MoveInstance::BaNeg { vertex: vc.rep() });
    }
    out
}

fn transposition(i: u8, j: u8) -> Perm4 {
    let mut img = [0u8, 1, 2, 3];
    img.swap(i as usize, j as usize);
    Perm4(img)
}

pub(super) fn rewrite_pos(m: &MarkedTriangulation, tet: u32) -> Result<RewriteOutcome, MoveError> {
    let t = tet as usize;
    if t >= m.n_tets() {
        return Err(MoveError::NotAdmissible("tetrahedron out of range".into()));
    }

    // new tet i replaces vertex i of the old tetrahedron by the new apex,
    // which keeps label i
    let mut sp = Splice {
        removed: vec![t],
        added: 4,
        internal: Vec::new(),
        boundary: Vec::new(),
        reglue: Vec::new(),
    };
    for i in 0..4u8 {
        for j in i + 1..4u8 {
            sp.internal
                .push((i as usize, j, j as usize, i, transposition(i, j)));
        }
        sp.boundary.push(BoundaryMap {
            old: FaceSlot::new(t, i),
            new_local: i as usize,
            new_face: i,
            label_map: Perm4::IDENTITY,
        });
    }

    let res = apply_splice(m, &sp, &BTreeMap::new())?;
    Ok(RewriteOutcome {
        out: res.out,
        inverse: MoveInstance::BaNeg {
            vertex: VertexSlot::new(res.new_tets[0], 0),
        },
    })
}

pub(super) fn rewrite_neg(
    m: &MarkedTriangulation,
    vertex: VertexSlot,
) -> Result<RewriteOutcome, MoveError> {
    if vertex.tet as usize >= m.n_tets() || vertex.vertex > 3 {
        return Err(MoveError::NotAdmissible("vertex slot out of range".into()));
    }
    let sk = m.skeleton();
    let vc = &sk.vertices[sk.vertex_class_of(vertex)];
    if vc.members.len() != 4 {
        return Err(MoveError::NotAdmissible(format!(
            "4-1 move needs a degree-4 vertex class, found degree {}",
            vc.members.len()
        )));
    }
    let corners = vc.members.clone();
    let mut tets: Vec<u32> = corners.iter().map(|s| s.tet).collect();
    tets.sort_unstable();
    tets.dedup();
    if tets.len() != 4 {
        return Err(MoveError::NotAdmissible(
            "4-1 move needs four distinct tetrahedra".into(),
        ));
    }
    if !vertex_link(m.tri(), sk, vc.id).is_sphere() {
        return Err(MoveError::NotAdmissible(
            "4-1 move needs a sphere vertex link".into(),
        ));
    }

    // resolve the subdivision pattern: every face of a corner tetrahedron
    // containing the apex must lead to another corner matching apex to apex
    let corner_of_tet = |t: u32| corners.iter().position(|c| c.tet == t);
    let mut leads: Vec<[Option<usize>; 4]> = vec![[None; 4]; 4];
    for (ci, c) in corners.iter().enumerate() {
        for f in 0..4u8 {
            if f == c.vertex {
                continue;
            }
            let g = m.tri().gluing(FaceSlot::new(c.tet as usize, f));
            let Some(cj) = corner_of_tet(g.to.tet) else {
                return Err(MoveError::NotAdmissible(
                    "subdivision pattern leaks out of the ball".into(),
                ));
            };
            if cj == ci || g.perm.apply(c.vertex) != corners[cj].vertex {
                return Err(MoveError::NotAdmissible(
                    "apex is not matched to apex in the pattern".into(),
                ));
            }
            leads[ci][f as usize] = Some(cj);
        }
    }
    // each corner must see the three other corners, once each
    for (ci, row) in leads.iter().enumerate() {
        let mut seen = [false; 4];
        for (f, l) in row.iter().enumerate() {
            if f == corners[ci].vertex as usize {
                continue;
            }
            let Some(cj) = l else {
                return Err(MoveError::NotAdmissible("pattern face unresolved".into()));
            };
            if seen[*cj] {
                return Err(MoveError::NotAdmissible(
                    "two pattern faces lead to the same corner".into(),
                ));
            }
            seen[*cj] = true;
        }
    }

    // restored labels: corner ci's label x maps to the corner behind face x,
    // and its apex label maps to ci itself
    let mut label_maps = Vec::with_capacity(4);
    for (ci, c) in corners.iter().enumerate() {
        let mut img = [0u8; 4];
        for x in 0..4u8 {
            img[x as usize] = if x == c.vertex {
                ci as u8
            } else {
                leads[ci][x as usize].unwrap() as u8
            };
        }
        let lm = Perm4::new(img).ok_or_else(|| {
            MoveError::NotAdmissible("pattern labels do not form a permutation".into())
        })?;
        label_maps.push(lm);
    }
    // gluing perms must agree with the restored labels
    for (ci, c) in corners.iter().enumerate() {
        for f in 0..4u8 {
            if f == c.vertex {
                continue;
            }
            let g = m.tri().gluing(FaceSlot::new(c.tet as usize, f));
            let cj = leads[ci][f as usize].unwrap();
            for x in 0..4u8 {
                if x == f {
                    continue;
                }
                if label_maps[cj].apply(g.perm.apply(x)) != label_maps[ci].apply(x) {
                    return Err(MoveError::NotAdmissible(
                        "pattern gluings are twisted".into(),
                    ));
                }
            }
        }
    }

    // the four dying edge classes run from the apex into the corners
    for (ci, c) in corners.iter().enumerate() {
        for x in 0..4u8 {
            if x == c.vertex {
                continue;
            }
            let cls = sk.edge_class_of(crate::skeleton::EdgeSlot::new(
                c.tet as usize,
                crate::tri::edge_index(c.vertex, x),
            ));
            if m.is_marked(cls) {
                return Err(MoveError::NotAdmissible(
                    "4-1 move would delete a marked edge class".into(),
                ));
            }
            let _ = ci;
        }
    }

    let mut sp = Splice {
        removed: tets.iter().map(|t| *t as usize).collect(),
        added: 1,
        internal: Vec::new(),
        boundary: Vec::new(),
        reglue: Vec::new(),
    };
    for (ci, c) in corners.iter().enumerate() {
        sp.boundary.push(BoundaryMap {
            old: FaceSlot::new(c.tet as usize, c.vertex),
            new_local: 0,
            new_face: ci as u8,
            label_map: label_maps[ci],
        });
    }

    let res = apply_splice(m, &sp, &BTreeMap::new())?;
    Ok(RewriteOutcome {
        out: res.out,
        inverse: MoveInstance::BaPos {
            tet: res.new_tets[0] as u32,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census;
    use crate::link::link_multiset;
    use crate::moves::{apply, enumerate_moves, MoveKind};
    use crate::skeleton::Skeleton;
    use std::collections::BTreeSet;

    #[test]
    fn bubble_round_trip() {
        for tri in [census::fig8(), census::gieseking()] {
            let m = MarkedTriangulation::unmarked(tri).unwrap();
            let before_links = link_multiset(m.tri(), m.skeleton());
            let (out, rec) = apply(&m, &MoveInstance::BaPos { tet: 0 }).unwrap();
            assert_eq!(out.n_tets(), m.n_tets() + 3);
            // exactly one new sphere in the link multiset
            let after_links = link_multiset(out.tri(), out.skeleton());
            assert_eq!(after_links.len(), before_links.len() + 1);
            assert!(after_links.iter().filter(|l| l.is_sphere()).count()
                == before_links.iter().filter(|l| l.is_sphere()).count() + 1);
            let (back, _) = apply(&out, &rec.inverse).unwrap();
            assert_eq!(back.signature(), rec.sig_before);
        }
    }

    #[test]
    fn four_one_detected_by_enumeration() {
        let m = MarkedTriangulation::unmarked(census::fig8()).unwrap();
        let (out, rec) = apply(&m, &MoveInstance::BaPos { tet: 1 }).unwrap();
        let negs = enumerate_moves(&out, &BTreeSet::from([MoveKind::BaNeg]));
        assert!(negs.contains(&rec.inverse));
        let sk = Skeleton::compute(out.tri()).unwrap();
        assert_eq!(sk.vertices.len(), 2);
    }
}
