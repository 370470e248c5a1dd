//! Dev tool: list all valid 1-tet triangulations up to isomorphism.

use mark3d::homology::homology_h1;
use mark3d::link::link_multiset;
use mark3d::perm::Perm4;
use mark3d::sign::signature;
use mark3d::skeleton::Skeleton;
use mark3d::tri::{GluingEntry, LooseTriangulation};
use std::collections::BTreeSet;

fn main() {
    let pairings = [[(0u8, 1u8), (2u8, 3u8)], [(0, 2), (1, 3)], [(0, 3), (1, 2)]];
    let perms: Vec<Perm4> = Perm4::all().collect();
    let mut found: BTreeSet<Vec<u8>> = BTreeSet::new();
    for pairing in pairings {
        for p1 in &perms {
            if p1.apply(pairing[0].0) != pairing[0].1 {
                continue;
            }
            for p2 in &perms {
                if p2.apply(pairing[1].0) != pairing[1].1 {
                    continue;
                }
                let entries = [
                    GluingEntry { tet: 0, face: pairing[0].0, to_tet: 0, to_face: pairing[0].1, perm: *p1 },
                    GluingEntry { tet: 0, face: pairing[0].1, to_tet: 0, to_face: pairing[0].0, perm: p1.inverse() },
                    GluingEntry { tet: 0, face: pairing[1].0, to_tet: 0, to_face: pairing[1].1, perm: *p2 },
                    GluingEntry { tet: 0, face: pairing[1].1, to_tet: 0, to_face: pairing[1].0, perm: p2.inverse() },
                ];
                if let Ok(tri) = LooseTriangulation::build(1, &entries) {
                    let sk = Skeleton::compute(&tri).unwrap();
                    let sig = signature(&tri, &sk, &BTreeSet::new());
                    if found.insert(sig.as_bytes().to_vec()) {
                        let vals: Vec<usize> = sk.edges.iter().map(|e| e.valence()).collect();
                        let links = link_multiset(&tri, &sk);
                        let h = homology_h1(&tri, &sk);
                        println!(
                            "pairing {:?} perms {:?} {:?} | verts {} edges {:?} links {:?} h1 {}",
                            pairing, p1, p2, sk.vertices.len(), vals, links, h
                        );
                    }
                }
            }
        }
    }
    println!("distinct: {}", found.len());
}
