//! Dev tool: enumerate small 2-tet gluing tables and report candidates
//! matching the figure-eight knot complement profile.

use mark3d::link::{link_multiset, vertex_link};
use mark3d::homology::homology_h1;
use mark3d::perm::Perm4;
use mark3d::sign::signature;
use mark3d::skeleton::Skeleton;
use mark3d::tri::{GluingEntry, LooseTriangulation};
use std::collections::BTreeSet;

fn main() {
    // Pair faces of two tets: slot ids 0..8 = (tet, face).
    let slots: Vec<(usize, u8)> = (0..2).flat_map(|t| (0..4u8).map(move |f| (t, f))).collect();
    let perms: Vec<Perm4> = Perm4::all().collect();
    let mut found: BTreeSet<Vec<u8>> = BTreeSet::new();
    let mut count = 0usize;

    // enumerate perfect matchings on 8 slots
    fn matchings(avail: Vec<usize>) -> Vec<Vec<(usize, usize)>> {
        if avail.is_empty() {
            return vec![vec![]];
        }
        let a = avail[0];
        let mut out = Vec::new();
        for i in 1..avail.len() {
            let b = avail[i];
            let mut rest: Vec<usize> = avail[1..].to_vec();
            rest.retain(|x| *x != b);
            for mut m in matchings(rest) {
                m.push((a, b));
                out.push(m);
            }
        }
        out
    }

    let ms = matchings((0..8).collect());
    for m in &ms {
        // assign perms to each pair; 4 pairs
        let k = m.len();
        let mut idx = vec![0usize; k];
        loop {
            // build entries
            let mut entries = Vec::new();
            let mut ok = true;
            for (p, (ai, bi)) in m.iter().enumerate() {
                let (t1, f1) = slots[*ai];
                let (t2, f2) = slots[*bi];
                let perm = perms[idx[p]];
                if perm.apply(f1) != f2 {
                    ok = false;
                    break;
                }
                entries.push(GluingEntry { tet: t1, face: f1, to_tet: t2, to_face: f2, perm });
                entries.push(GluingEntry { tet: t2, face: f2, to_tet: t1, to_face: f1, perm: perm.inverse() });
            }
            if ok {
                count += 1;
                if let Ok(tri) = LooseTriangulation::build(2, &entries) {
                    let sk = Skeleton::compute(&tri).unwrap();
                    let vals: Vec<usize> = sk.edges.iter().map(|e| e.valence()).collect();
                    if sk.vertices.len() == 1
                        && sk.edges.len() == 2
                        && vals == vec![6, 6]
                        && vertex_link(&tri, &sk, 0).is_torus()
                    {
                        let h = homology_h1(&tri, &sk);
                        if true {
                            let sig = signature(&tri, &sk, &BTreeSet::new());
                            if found.insert(sig.as_bytes().to_vec()) {
                                println!("=== candidate (sig {})", sig.to_hex());
                                for  e in &entries {
                                    if (e.tet, e.face) <= (e.to_tet, e.to_face) {
                                        println!("  t{} f{} -> t{} f{} perm {:?}", e.tet, e.face, e.to_tet, e.to_face, e.perm);
                                    }
                                }
                                let links = link_multiset(&tri, &sk);
                                println!("  links: {:?}  h1: {}", links, h);
                            }
                        }
                    }
                }
            }
            // increment idx
            let mut c = 0;
            loop {
                idx[c] += 1;
                if idx[c] < perms.len() {
                    break;
                }
                idx[c] = 0;
                c += 1;
                if c == k {
                    break;
                }
            }
            if c == k {
                break;
            }
        }
    }
    println!("tables tried: {count}, distinct candidates: {}", found.len());
}
