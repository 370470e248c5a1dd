//! Classification of the six singularity types of a loose triangulation.

use crate::skeleton::Skeleton;
use crate::tri::{FaceSlot, LooseTriangulation};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// One singularity finding. Edge classes are referenced by id, tetrahedra by
/// index; `marked` records whether a witnessing edge class is marked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Singularity {
    /// A tetrahedron with two of its faces glued to each other.
    SelfAdjacentTriangle { tet: usize, faces: (u8, u8) },
    /// A tetrahedron with two edge slots in one edge class.
    SelfAdjacentEdges { tet: usize, edge_class: usize, marked: bool },
    /// Two distinct tetrahedra glued along two or more triangle classes.
    MultipleAdjacentTriangles { tets: (usize, usize), count: usize },
    /// Two distinct tetrahedra sharing two edge classes not accounted for by
    /// a single common triangle.
    MultipleAdjacentEdges {
        tets: (usize, usize),
        edge_classes: (usize, usize),
        marked: (bool, bool),
    },
    /// A loop: an edge class whose endpoints coincide.
    LoopEdge { edge_class: usize, marked: bool },
    /// Two distinct edge classes sharing both endpoint vertex classes.
    ParallelEdges {
        edge_classes: (usize, usize),
        marked: (bool, bool),
    },
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct SingularityReport {
    pub findings: Vec<Singularity>,
}

impl SingularityReport {
    pub fn is_empty(&self) -> bool {
        self.findings.is_empty()
    }

    /// True when every finding is of a type allowed to survive
    /// desingularization: a marked loop, a pair of marked parallel edges, or
    /// a multiple adjacency supported inside the closed star of a marked
    /// loop.
    pub fn only_allowed_residuals(&self, sk: &Skeleton, marked: &BTreeSet<usize>) -> bool {
        let marked_loop_star_tets: BTreeSet<usize> = sk
            .edges
            .iter()
            .filter(|e| marked.contains(&e.id) && e.is_loop())
            .flat_map(|e| e.tets())
            .collect();
        self.findings.iter().all(|f| match f {
            Singularity::LoopEdge { marked: m, .. } => *m,
            Singularity::ParallelEdges { marked: m, edge_classes } => {
                (m.0 && m.1)
                    || sk.edges[edge_classes.0]
                        .tets()
                        .iter()
                        .chain(sk.edges[edge_classes.1].tets().iter())
                        .all(|t| marked_loop_star_tets.contains(t))
            }
            Singularity::SelfAdjacentEdges { tet, .. } => marked_loop_star_tets.contains(tet),
            Singularity::MultipleAdjacentEdges { tets, .. } => {
                marked_loop_star_tets.contains(&tets.0) && marked_loop_star_tets.contains(&tets.1)
            }
            _ => false,
        })
    }
}

/// Builds the classified singularity report.
pub fn singularity_report(
    tri: &LooseTriangulation,
    sk: &Skeleton,
    marked: &BTreeSet<usize>,
) -> SingularityReport {
    let n = tri.n_tets();
    let mut findings = Vec::new();

    // self-adjacency along triangles
    for t in 0..n {
        for f in 0..4u8 {
            let to = tri.partner(FaceSlot::new(t, f));
            if to.tet as usize == t && f < to.face {
                findings.push(Singularity::SelfAdjacentTriangle {
                    tet: t,
                    faces: (f, to.face),
                });
            }
        }
    }

    // self-adjacency along edges
    for t in 0..n {
        let mut by_class: BTreeSet<usize> = BTreeSet::new();
        let mut dup: BTreeSet<usize> = BTreeSet::new();
        for e in 0..6u8 {
            let cls = sk.edge_class_of(crate::skeleton::EdgeSlot::new(t, e));
            if !by_class.insert(cls) {
                dup.insert(cls);
            }
        }
        for cls in dup {
            findings.push(Singularity::SelfAdjacentEdges {
                tet: t,
                edge_class: cls,
                marked: marked.contains(&cls),
            });
        }
    }

    // multiple adjacency along triangles
    let mut pair_gluings: std::collections::BTreeMap<(usize, usize), usize> =
        std::collections::BTreeMap::new();
    for tc in &sk.triangles {
        let (a, b) = (tc.slots.0.tet as usize, tc.slots.1.tet as usize);
        if a != b {
            let key = (a.min(b), a.max(b));
            *pair_gluings.entry(key).or_insert(0) += 1;
        }
    }
    for (tets, count) in &pair_gluings {
        if *count >= 2 {
            findings.push(Singularity::MultipleAdjacentTriangles {
                tets: *tets,
                count: *count,
            });
        }
    }

    // multiple adjacency along edges: a pair of distinct classes present in
    // two distinct tetrahedra with no single shared face accounting for both
    let mut classes_of_tet: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for (t, set) in classes_of_tet.iter_mut().enumerate() {
        for e in 0..6u8 {
            set.insert(sk.edge_class_of(crate::skeleton::EdgeSlot::new(t, e)));
        }
    }
    for a in 0..n {
        for b in a + 1..n {
            let shared: Vec<usize> = classes_of_tet[a]
                .intersection(&classes_of_tet[b])
                .copied()
                .collect();
            if shared.len() < 2 {
                continue;
            }
            // classes accounted for by each direct gluing between a and b
            let mut accounted: Vec<BTreeSet<usize>> = Vec::new();
            for f in 0..4u8 {
                let slot = FaceSlot::new(a, f);
                let to = tri.partner(slot);
                if to.tet as usize == b {
                    let mut s = BTreeSet::new();
                    let vs = crate::tri::face_vertices(f);
                    for k in 0..3 {
                        for l in k + 1..3 {
                            let e = crate::tri::edge_index(vs[k], vs[l]);
                            s.insert(sk.edge_class_of(crate::skeleton::EdgeSlot::new(a, e)));
                        }
                    }
                    accounted.push(s);
                }
            }
            for i in 0..shared.len() {
                for j in i + 1..shared.len() {
                    let pair = (shared[i], shared[j]);
                    let ok = accounted
                        .iter()
                        .any(|s| s.contains(&pair.0) && s.contains(&pair.1));
                    if !ok {
                        findings.push(Singularity::MultipleAdjacentEdges {
                            tets: (a, b),
                            edge_classes: pair,
                            marked: (marked.contains(&pair.0), marked.contains(&pair.1)),
                        });
                    }
                }
            }
        }
    }

    // loops
    for e in &sk.edges {
        if e.is_loop() {
            findings.push(Singularity::LoopEdge {
                edge_class: e.id,
                marked: marked.contains(&e.id),
            });
        }
    }

    // parallel pairs
    for i in 0..sk.edges.len() {
        for j in i + 1..sk.edges.len() {
            let (a, b) = (&sk.edges[i], &sk.edges[j]);
            let ea = (a.endpoints.0.min(a.endpoints.1), a.endpoints.0.max(a.endpoints.1));
            let eb = (b.endpoints.0.min(b.endpoints.1), b.endpoints.0.max(b.endpoints.1));
            if ea == eb {
                findings.push(Singularity::ParallelEdges {
                    edge_classes: (i, j),
                    marked: (marked.contains(&i), marked.contains(&j)),
                });
            }
        }
    }

    SingularityReport { findings }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm4;
    use crate::skeleton::Skeleton;
    use crate::tri::GluingEntry;

    #[test]
    fn one_tet_is_singular() {
        let p01 = Perm4([1, 0, 2, 3]);
        let p23 = Perm4([0, 1, 3, 2]);
        let tri = LooseTriangulation::build(
            1,
            &[
                GluingEntry { tet: 0, face: 0, to_tet: 0, to_face: 1, perm: p01 },
                GluingEntry { tet: 0, face: 1, to_tet: 0, to_face: 0, perm: p01 },
                GluingEntry { tet: 0, face: 2, to_tet: 0, to_face: 3, perm: p23 },
                GluingEntry { tet: 0, face: 3, to_tet: 0, to_face: 2, perm: p23 },
            ],
        )
        .unwrap();
        let sk = Skeleton::compute(&tri).unwrap();
        let rep = singularity_report(&tri, &sk, &BTreeSet::new());
        assert!(!rep.is_empty());
        assert!(rep
            .findings
            .iter()
            .any(|f| matches!(f, Singularity::SelfAdjacentTriangle { .. })));
    }
}
