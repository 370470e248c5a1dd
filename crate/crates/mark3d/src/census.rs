//! A small bundled census of valid triangulations used by tests, benches and
//! the documentation. The two-tetrahedron tables are the classical cusped
//! census pair; the one-tetrahedron tables are the complete list of valid
//! one-tetrahedron gluings up to isomorphism.

use crate::perm::Perm4;
use crate::tri::{GluingEntry, LooseTriangulation};

fn sym(entries: &[(usize, u8, usize, u8, [u8; 4])]) -> Vec<GluingEntry> {
    let mut out = Vec::with_capacity(entries.len() * 2);
    for (t, f, t2, f2, p) in entries {
        let perm = Perm4::new(*p).expect("census table perم");
        out.push(GluingEntry {
            tet: *t,
            face: *f,
            to_tet: *t2,
            to_face: *f2,
            perm,
        });
        out.push(GluingEntry {
            tet: *t2,
            face: *f2,
            to_tet: *t,
            to_face: *f,
            perm: perm.inverse(),
        });
    }
    out
}

/// The two-tetrahedron ideal triangulation of the figure-eight knot
/// complement: one torus-link vertex, two edge classes of valence six.
pub fn fig8() -> LooseTriangulation {
    LooseTriangulation::build(
        2,
        &sym(&[
            (0, 0, 1, 0, [0, 2, 3, 1]),
            (0, 1, 1, 1, [2, 1, 3, 0]),
            (0, 2, 1, 2, [1, 3, 2, 0]),
            (0, 3, 1, 3, [1, 2, 0, 3]),
        ]),
    )
    .expect("figure-eight census table")
}

/// The sister of the figure-eight complement: same skeleton profile,
/// different manifold (first homology of the quotient is Z/5).
pub fn fig8_sister() -> LooseTriangulation {
    LooseTriangulation::build(
        2,
        &sym(&[
            (0, 0, 1, 0, [0, 1, 3, 2]),
            (0, 1, 1, 1, [2, 1, 0, 3]),
            (0, 2, 1, 2, [0, 3, 2, 1]),
            (0, 3, 1, 3, [1, 0, 2, 3]),
        ]),
    )
    .expect("census sister table")
}

/// Two tetrahedra glued along all four faces by the identity: the closed
/// triangulation of the 3-sphere with every vertex link a sphere.
pub fn double_tet() -> LooseTriangulation {
    LooseTriangulation::build(
        2,
        &sym(&[
            (0, 0, 1, 0, [0, 1, 2, 3]),
            (0, 1, 1, 1, [0, 1, 2, 3]),
            (0, 2, 1, 2, [0, 1, 2, 3]),
            (0, 3, 1, 3, [0, 1, 2, 3]),
        ]),
    )
    .expect("double tetrahedron table")
}

/// The one-tetrahedron triangulation with a single valence-six edge and a
/// Klein-bottle vertex link (the Gieseking manifold).
pub fn gieseking() -> LooseTriangulation {
    LooseTriangulation::build(
        1,
        &sym(&[(0, 0, 0, 1, [1, 2, 0, 3]), (0, 2, 0, 3, [0, 2, 3, 1])]),
    )
    .expect("gieseking table")
}

/// All valid one-tetrahedron triangulations, up to isomorphism (five).
pub fn one_tet_all() -> Vec<LooseTriangulation> {
    let tables: [[(usize, u8, usize, u8, [u8; 4]); 2]; 5] = [
        [(0, 0, 0, 1, [1, 0, 2, 3]), (0, 2, 0, 3, [0, 1, 3, 2])],
        [(0, 0, 0, 1, [1, 0, 2, 3]), (0, 2, 0, 3, [1, 2, 3, 0])],
        [(0, 0, 0, 1, [1, 2, 0, 3]), (0, 2, 0, 3, [0, 2, 3, 1])],
        [(0, 0, 0, 1, [1, 2, 3, 0]), (0, 2, 0, 3, [1, 2, 3, 0])],
        [(0, 0, 0, 1, [1, 2, 3, 0]), (0, 2, 0, 3, [2, 0, 3, 1])],
    ];
    tables
        .iter()
        .map(|t| LooseTriangulation::build(1, &sym(t)).expect("one-tet census table"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::homology_h1;
    use crate::link::{link_multiset, vertex_link};
    use crate::skeleton::Skeleton;
    use crate::spine::spine_stats;

    #[test]
    fn fig8_profile() {
        let tri = fig8();
        let sk = Skeleton::compute(&tri).unwrap();
        assert_eq!(sk.vertices.len(), 1);
        assert_eq!(sk.edges.len(), 2);
        let mut vals: Vec<usize> = sk.edges.iter().map(|e| e.valence()).collect();
        vals.sort_unstable();
        assert_eq!(vals, vec![6, 6]);
        assert!(vertex_link(&tri, &sk, 0).is_torus());
        let h = homology_h1(&tri, &sk);
        assert_eq!(h.betti, 0);
        assert!(h.torsion.is_empty());
        let st = spine_stats(&tri, &sk).unwrap();
        assert_eq!(
            (st.spine_vertices, st.spine_edges, st.spine_regions, st.euler),
            (2, 4, 2, 0)
        );
    }

    #[test]
    fn sister_has_torsion() {
        let tri = fig8_sister();
        let sk = Skeleton::compute(&tri).unwrap();
        let h = homology_h1(&tri, &sk);
        assert_eq!(h.betti, 0);
        assert_eq!(h.torsion, vec!["5".to_string()]);
        assert_ne!(
            crate::sign::signature(&tri, &sk, &Default::default()),
            crate::sign::signature(&fig8(), &Skeleton::compute(&fig8()).unwrap(), &Default::default())
        );
    }

    #[test]
    fn double_tet_is_closed_trivial() {
        let tri = double_tet();
        let sk = Skeleton::compute(&tri).unwrap();
        let h = homology_h1(&tri, &sk);
        assert_eq!((h.betti, h.torsion.len()), (0, 0));
        assert!(link_multiset(&tri, &sk).iter().all(|l| l.is_sphere()));
    }

    #[test]
    fn gieseking_profile() {
        let tri = gieseking();
        let sk = Skeleton::compute(&tri).unwrap();
        assert_eq!(sk.edges.len(), 1);
        assert_eq!(sk.edges[0].valence(), 6);
        let l = vertex_link(&tri, &sk, 0);
        assert_eq!(l.euler, 0);
        assert!(!l.orientable);
    }

    #[test]
    fn one_tet_census_is_valid_and_distinct() {
        let all = one_tet_all();
        assert_eq!(all.len(), 5);
        let mut sigs = std::collections::BTreeSet::new();
        for tri in &all {
            let sk = Skeleton::compute(tri).unwrap();
            assert!(sigs.insert(crate::sign::signature(tri, &sk, &Default::default())));
        }
    }
}
