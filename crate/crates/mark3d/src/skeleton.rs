//! Skeleton classes of a loose triangulation: orbits of vertices, edges and
//! faces under the gluing maps.
//!
//! Edge classes carry their full corner cycle in book order around the edge,
//! together with the transported edge orientation at every corner. This is
//! the substrate for move enumeration: the pages of the book (the face
//! gluings crossed between consecutive corners) are read off the cycle.


use crate::tri::{edge_index, faces_of_edge, FaceSlot, LooseTriangulation, TriError, EDGE_ENDS};
use serde::{Deserialize, Serialize};

/// One edge of one tetrahedron.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgeSlot {
    pub tet: u32,
    pub edge: u8,
}

impl EdgeSlot {
    pub fn new(tet: usize, edge: u8) -> EdgeSlot {
        EdgeSlot {
            tet: tet as u32,
            edge,
        }
    }
    pub fn ends(&self) -> (u8, u8) {
        EDGE_ENDS[self.edge as usize]
    }
}

impl std::fmt::Debug for EdgeSlot {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (a, b) = self.ends();
        write!(f, "t{}e{}{}", self.tet, a, b)
    }
}

/// One vertex of one tetrahedron.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexSlot {
    pub tet: u32,
    pub vertex: u8,
}

impl VertexSlot {
    pub fn new(tet: usize, vertex: u8) -> VertexSlot {
        VertexSlot {
            tet: tet as u32,
            vertex,
        }
    }
}

impl std::fmt::Debug for VertexSlot {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "t{}v{}", self.tet, self.vertex)
    }
}

/// One corner of the book around an edge class.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Corner {
    pub slot: EdgeSlot,
    /// Transported orientation of the class at this corner (vertex labels).
    pub tail: u8,
    pub head: u8,
    /// Face crossed to arrive here from the previous corner.
    pub entry_face: u8,
    /// Face crossed to leave towards the next corner.
    pub exit_face: u8,
}

impl Corner {
    pub fn apex(&self, face: u8) -> u8 {
        // the vertex of `face` that is not an end of the edge
        for v in crate::tri::face_vertices(face) {
            if v != self.tail && v != self.head {
                return v;
            }
        }
        unreachable!("face does not contain the edge")
    }
}

/// An edge class: one orbit of tetrahedron edges.
#[derive(Clone, Debug)]
pub struct EdgeClass {
    pub id: usize,
    /// Corners in cyclic book order.
    pub cycle: Vec<Corner>,
    /// Vertex class ids of (tail, head) of the oriented class.
    pub endpoints: (usize, usize),
}

impl EdgeClass {
    pub fn valence(&self) -> usize {
        self.cycle.len()
    }
    pub fn is_loop(&self) -> bool {
        self.endpoints.0 == self.endpoints.1
    }
    pub fn rep(&self) -> EdgeSlot {
        self.cycle.iter().map(|c| c.slot).min().unwrap()
    }
    /// Distinct tetrahedra meeting this edge.
    pub fn tets(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycle.iter().map(|c| c.slot.tet as usize).collect();
        t.sort_unstable();
        t.dedup();
        t
    }
    pub fn position_of(&self, slot: EdgeSlot) -> Option<usize> {
        self.cycle.iter().position(|c| c.slot == slot)
    }
}

/// A vertex class: one orbit of tetrahedron vertices.
#[derive(Clone, Debug)]
pub struct VertexClass {
    pub id: usize,
    pub members: Vec<VertexSlot>,
}

impl VertexClass {
    pub fn rep(&self) -> VertexSlot {
        *self.members.iter().min().unwrap()
    }
}

/// A triangle class: one face gluing (a pair of face slots).
#[derive(Clone, Copy, Debug)]
pub struct TriangleClass {
    pub id: usize,
    /// The two glued slots, lower first.
    pub slots: (FaceSlot, FaceSlot),
}

/// Full skeleton data of a triangulation.
#[derive(Clone, Debug)]
pub struct Skeleton {
    pub edges: Vec<EdgeClass>,
    pub vertices: Vec<VertexClass>,
    pub triangles: Vec<TriangleClass>,
    edge_of_slot: Vec<[usize; 6]>,
    vertex_of_slot: Vec<[usize; 4]>,
}

impl Skeleton {
    /// Computes all orbit classes. Fails if some edge orbit identifies an
    /// edge with itself reversing orientation (the quotient would not have
    /// surface vertex links).
    pub fn compute(tri: &LooseTriangulation) -> Result<Skeleton, TriError> {
        let n = tri.n_tets();
        let mut edge_of_slot = vec![[usize::MAX; 6]; n];
        let mut edges: Vec<EdgeClass> = Vec::new();

        for t in 0..n {
            for e in 0..6u8 {
                if edge_of_slot[t][e as usize] != usize::MAX {
                    continue;
                }
                let id = edges.len();
                let (f1, f2) = faces_of_edge(e);
                let (tail0, head0) = EDGE_ENDS[e as usize];
                let start = Corner {
                    slot: EdgeSlot::new(t, e),
                    tail: tail0,
                    head: head0,
                    entry_face: f1,
                    exit_face: f2,
                };
                let mut cycle = vec![start];
                loop {
                    let cur = *cycle.last().unwrap();
                    let g = tri.gluing(FaceSlot::new(cur.slot.tet as usize, cur.exit_face));
                    let tail = g.perm.apply(cur.tail);
                    let head = g.perm.apply(cur.head);
                    let slot = EdgeSlot::new(g.to.tet as usize, edge_index(tail, head));
                    let entry_face = g.to.face;
                    let (a, b) = faces_of_edge(slot.edge);
                    let exit_face = if a == entry_face { b } else { a };
                    if slot == start.slot && entry_face == start.entry_face {
                        if (tail, head) != (start.tail, start.head) {
                            return Err(TriError::ReversedEdge {
                                tet: slot.tet as usize,
                                edge: slot.edge,
                            });
                        }
                        break;
                    }
                    if cycle.len() > 6 * n {
                        unreachable!("edge cycle does not close");
                    }
                    cycle.push(Corner {
                        slot,
                        tail,
                        head,
                        entry_face,
                        exit_face,
                    });
                }
                for c in &cycle {
                    let prev = edge_of_slot[c.slot.tet as usize][c.slot.edge as usize];
                    if prev != usize::MAX && prev != id {
                        unreachable!("edge slot in two orbits");
                    }
                    edge_of_slot[c.slot.tet as usize][c.slot.edge as usize] = id;
                }
                edges.push(EdgeClass {
                    id,
                    cycle,
                    endpoints: (usize::MAX, usize::MAX),
                });
            }
        }

        // vertex orbits by breadth-first closure over the three incident faces
        let mut vertex_of_slot = vec![[usize::MAX; 4]; n];
        let mut vertices: Vec<VertexClass> = Vec::new();
        for t in 0..n {
            for v in 0..4u8 {
                if vertex_of_slot[t][v as usize] != usize::MAX {
                    continue;
                }
                let id = vertices.len();
                let mut members = Vec::new();
                let mut stack = vec![VertexSlot::new(t, v)];
                vertex_of_slot[t][v as usize] = id;
                while let Some(s) = stack.pop() {
                    members.push(s);
                    for f in 0..4u8 {
                        if f == s.vertex {
                            continue;
                        }
                        let g = tri.gluing(FaceSlot::new(s.tet as usize, f));
                        let img = VertexSlot::new(g.to.tet as usize, g.perm.apply(s.vertex));
                        let cell = &mut vertex_of_slot[img.tet as usize][img.vertex as usize];
                        if *cell == usize::MAX {
                            *cell = id;
                            stack.push(img);
                        }
                    }
                }
                members.sort_unstable();
                vertices.push(VertexClass { id, members });
            }
        }

        for ec in &mut edges {
            let c0 = &ec.cycle[0];
            ec.endpoints = (
                vertex_of_slot[c0.slot.tet as usize][c0.tail as usize],
                vertex_of_slot[c0.slot.tet as usize][c0.head as usize],
            );
        }

        let mut triangles = Vec::new();
        for t in 0..n {
            for f in 0..4u8 {
                let a = FaceSlot::new(t, f);
                let b = tri.partner(a);
                if a < b {
                    triangles.push(TriangleClass {
                        id: triangles.len(),
                        slots: (a, b),
                    });
                }
            }
        }

        Ok(Skeleton {
            edges,
            vertices,
            triangles,
            edge_of_slot,
            vertex_of_slot,
        })
    }

    pub fn edge_class_of(&self, slot: EdgeSlot) -> usize {
        self.edge_of_slot[slot.tet as usize][slot.edge as usize]
    }

    pub fn vertex_class_of(&self, slot: VertexSlot) -> usize {
        self.vertex_of_slot[slot.tet as usize][slot.vertex as usize]
    }

    /// Orientation of `slot` relative to its class: `true` when the slot's
    /// `(min, max)` vertex order agrees with the transported class direction.
    pub fn slot_direction(&self, slot: EdgeSlot) -> bool {
        let cls = &self.edges[self.edge_class_of(slot)];
        let c = cls.cycle.iter().find(|c| c.slot == slot).unwrap();
        c.tail < c.head
    }

    /// The page between cycle positions `k-1` and `k` of `cls` (indices mod
    /// valence): the pair of face slots glued across it, left (exit of
    /// corner `k-1`) then right (entry of corner `k`).
    pub fn page(&self, cls: &EdgeClass, k: usize) -> (FaceSlot, FaceSlot) {
        let v = cls.valence();
        let prev = &cls.cycle[(k + v - 1) % v];
        let cur = &cls.cycle[k % v];
        (
            FaceSlot::new(prev.slot.tet as usize, prev.exit_face),
            FaceSlot::new(cur.slot.tet as usize, cur.entry_face),
        )
    }

    /// Sum of edge valences; equals `6 * n_tets`.
    pub fn total_valence(&self) -> usize {
        self.edges.iter().map(|e| e.valence()).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm4;
    use crate::tri::{Gluing, GluingEntry};

    fn one_tet() -> LooseTriangulation {
        let p01 = Perm4([1, 0, 2, 3]);
        let p23 = Perm4([0, 1, 3, 2]);
        LooseTriangulation::build(
            1,
            &[
                GluingEntry { tet: 0, face: 0, to_tet: 0, to_face: 1, perm: p01 },
                GluingEntry { tet: 0, face: 1, to_tet: 0, to_face: 0, perm: p01 },
                GluingEntry { tet: 0, face: 2, to_tet: 0, to_face: 3, perm: p23 },
                GluingEntry { tet: 0, face: 3, to_tet: 0, to_face: 2, perm: p23 },
            ],
        )
        .unwrap()
    }

    #[test]
    fn valences_sum_to_six_per_tet() {
        let tri = one_tet();
        let sk = Skeleton::compute(&tri).unwrap();
        assert_eq!(sk.total_valence(), 6);
        assert_eq!(sk.triangles.len(), 2);
    }

    #[test]
    fn pages_are_glued_pairs() {
        let tri = one_tet();
        let sk = Skeleton::compute(&tri).unwrap();
        for ec in &sk.edges {
            for k in 0..ec.valence() {
                let (l, r) = sk.page(ec, k);
                assert_eq!(tri.partner(l), r);
            }
        }
    }

    #[test]
    fn double_tet_classes() {
        // two tets glued along all four faces by the identity
        let mut entries = Vec::new();
        for f in 0..4u8 {
            entries.push(GluingEntry { tet: 0, face: f, to_tet: 1, to_face: f, perm: Perm4::IDENTITY });
            entries.push(GluingEntry { tet: 1, face: f, to_tet: 0, to_face: f, perm: Perm4::IDENTITY });
        }
        let tri = LooseTriangulation::build(2, &entries).unwrap();
        let sk = Skeleton::compute(&tri).unwrap();
        assert_eq!(sk.vertices.len(), 4);
        assert_eq!(sk.edges.len(), 6);
        assert_eq!(sk.triangles.len(), 4);
        for e in &sk.edges {
            assert_eq!(e.valence(), 2);
            assert!(!e.is_loop());
        }
        let _ = Gluing {
            to: FaceSlot::new(0, 0),
            perm: Perm4::IDENTITY,
        };
    }
}
