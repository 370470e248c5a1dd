//! Vertex links assembled from corner triangles.
//!
//! The link of a vertex class is the closed surface tiled by one small
//! triangle per (tetrahedron, vertex) corner; the triangle's sides lie on the
//! three faces containing the corner and glue according to the face gluings.

use crate::skeleton::{Skeleton, VertexSlot};
use crate::tri::{FaceSlot, LooseTriangulation};
use serde::{Deserialize, Serialize};

/// Descriptor of one assembled link surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LinkSurface {
    pub euler: i64,
    pub orientable: bool,
}

impl LinkSurface {
    pub fn is_sphere(&self) -> bool {
        self.euler == 2
    }
    pub fn is_torus(&self) -> bool {
        self.euler == 0 && self.orientable
    }
    /// Genus for orientable surfaces, demigenus otherwise.
    pub fn genus(&self) -> i64 {
        if self.orientable {
            (2 - self.euler) / 2
        } else {
            2 - self.euler
        }
    }
}

/// Computes the link surface of vertex class `v`.
pub fn vertex_link(tri: &LooseTriangulation, sk: &Skeleton, v: usize) -> LinkSurface {
    let members = &sk.vertices[v].members;
    let faces: i64 = members.len() as i64;

    // Link edges: sides of corner triangles, glued in pairs across faces.
    let edges = 3 * faces / 2;
    debug_assert_eq!(3 * faces % 2, 0);

    // Link vertices: cycles of corner-triangle vertices around edge germs.
    // Each edge class contributes one germ per endpoint equal to `v`
    // (two for a loop at `v`).
    let mut verts: i64 = 0;
    for e in &sk.edges {
        if e.endpoints.0 == v {
            verts += 1;
        }
        if e.endpoints.1 == v {
            verts += 1;
        }
    }

    let euler = verts - edges + faces;

    // Orientability: try to orient all corner triangles coherently. A corner
    // triangle at (t, w) is oriented by ordering the other three labels; the
    // gluing across face f matches sides with a parity read off the perm.
    let mut orient: Vec<Option<bool>> = vec![None; members.len()];
    let index_of = |s: VertexSlot| members.binary_search(&s).unwrap();
    let mut orientable = true;
    'outer: for start in 0..members.len() {
        if orient[start].is_some() {
            continue;
        }
        orient[start] = Some(true);
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let s = members[i];
            let my = orient[i].unwrap();
            for f in 0..4u8 {
                if f == s.vertex {
                    continue;
                }
                let g = tri.gluing(FaceSlot::new(s.tet as usize, f));
                let img = VertexSlot::new(g.to.tet as usize, g.perm.apply(s.vertex));
                let j = index_of(img);
                // A coherent orientation flips under an odd face gluing and
                // survives under an even one: the corner triangle inherits
                // the ambient orientation class of its tetrahedron corner.
                let flips = g.perm.is_even();
                let want = my ^ flips;
                match orient[j] {
                    None => {
                        orient[j] = Some(want);
                        stack.push(j);
                    }
                    Some(o) => {
                        if o != want {
                            orientable = false;
                            break 'outer;
                        }
                    }
                }
            }
        }
    }

    LinkSurface { euler, orientable }
}

/// Multiset of link surfaces over all vertex classes, sorted.
pub fn link_multiset(tri: &LooseTriangulation, sk: &Skeleton) -> Vec<LinkSurface> {
    let mut v: Vec<LinkSurface> = (0..sk.vertices.len())
        .map(|i| vertex_link(tri, sk, i))
        .collect();
    v.sort();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm4;
    use crate::tri::GluingEntry;

    #[test]
    fn double_tet_links_are_spheres() {
        let mut entries = Vec::new();
        for f in 0..4u8 {
            entries.push(GluingEntry { tet: 0, face: f, to_tet: 1, to_face: f, perm: Perm4::IDENTITY });
            entries.push(GluingEntry { tet: 1, face: f, to_tet: 0, to_face: f, perm: Perm4::IDENTITY });
        }
        let tri = LooseTriangulation::build(2, &entries).unwrap();
        let sk = Skeleton::compute(&tri).unwrap();
        for v in 0..sk.vertices.len() {
            let l = vertex_link(&tri, &sk, v);
            assert_eq!(l.euler, 2);
            assert!(l.is_sphere());
        }
    }
}
