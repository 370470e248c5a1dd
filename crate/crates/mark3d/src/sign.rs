//! Canonical isomorphism signatures.
//!
//! The signature of a marked triangulation is the lexicographic minimum, over
//! all choices of start tetrahedron and vertex relabeling, of a breadth-first
//! canonical encoding of the gluing table with the marked edge classes
//! appended in canonical order. Two marked triangulations have equal
//! signatures iff an isomorphism maps one onto the other carrying marks to
//! marks.

use crate::perm::Perm4;
use crate::tri::{edge_index, FaceSlot, LooseTriangulation};
use std::collections::BTreeSet;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Signature(Vec<u8>);

impl Signature {
    pub fn to_hex(&self) -> String {
        let mut s = String::with_capacity(self.0.len() * 2);
        for b in &self.0 {
            s.push_str(&format!("{b:02x}"));
        }
        s
    }
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl std::fmt::Debug for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let hex = self.to_hex();
        write!(f, "{}", &hex[..hex.len().min(24)])
    }
}

fn perm_rank(p: &Perm4) -> u8 {
    let mut rank = 0u8;
    let mut avail = [0u8, 1, 2, 3];
    let mut len = 4usize;
    let fact = [6u8, 2, 1];
    for i in 0..3 {
        let pos = avail[..len].iter().position(|v| *v == p.0[i]).unwrap();
        rank += pos as u8 * fact[i];
        avail.copy_within(pos + 1..len, pos);
        len -= 1;
    }
    rank
}

/// One candidate encoding with the given root and root relabeling. Returns
/// words: gluing entries as (target_index, corr_rank) per slot in canonical
/// order, then a separator, then the canonical marked-slot encoding.
fn candidate(
    tri: &LooseTriangulation,
    marked_slots: &[Vec<(usize, u8, u8)>],
    root: usize,
    rho: Perm4,
    best: Option<&Vec<u16>>,
) -> Option<Vec<u16>> {
    let n = tri.n_tets();
    let mut new_index = vec![usize::MAX; n];
    let mut relabel = vec![Perm4::IDENTITY; n];
    let mut order = Vec::with_capacity(n);
    new_index[root] = 0;
    relabel[root] = rho;
    order.push(root);

    let mut words: Vec<u16> = Vec::with_capacity(4 * n + 8);
    words.push(n as u16);
    let mut emitted = 0usize;
    let mut k = 0usize;
    while k < order.len() {
        let t = order[k];
        let pi = relabel[t];
        let pi_inv = pi.inverse();
        for new_face in 0..4u8 {
            let old_face = pi_inv.apply(new_face);
            let g = tri.gluing(FaceSlot::new(t, old_face));
            let t2 = g.to.tet as usize;
            if new_index[t2] == usize::MAX {
                new_index[t2] = order.len();
                relabel[t2] = pi.compose(&g.perm.inverse());
                order.push(t2);
            }
            let corr = relabel[t2].compose(&g.perm).compose(&pi_inv);
            words.push(new_index[t2] as u16);
            words.push(perm_rank(&corr) as u16);
            emitted += 1;
            if let Some(b) = best {
                let l = words.len();
                if l <= b.len() && words[..l] > b[..l] {
                    return None;
                }
            }
        }
        k += 1;
    }
    debug_assert_eq!(emitted, 4 * n);

    words.push(u16::MAX);
    let mut canon_marked: Vec<(u16, u16)> = Vec::new();
    for slots in marked_slots {
        let m = slots
            .iter()
            .map(|(t, a, b)| {
                (
                    new_index[*t] as u16,
                    edge_index(relabel[*t].apply(*a), relabel[*t].apply(*b)) as u16,
                )
            })
            .min()
            .unwrap();
        canon_marked.push(m);
    }
    canon_marked.sort_unstable();
    for (t, e) in canon_marked {
        words.push(t);
        words.push(e);
    }
    Some(words)
}

/// Computes the canonical signature of `(tri, marked)` where `marked` holds
/// edge class ids of the skeleton of `tri`.
pub fn signature(
    tri: &LooseTriangulation,
    sk: &crate::skeleton::Skeleton,
    marked: &BTreeSet<usize>,
) -> Signature {
    let n = tri.n_tets();
    assert!(n < u16::MAX as usize, "triangulation too large to encode");
    let marked_slots: Vec<Vec<(usize, u8, u8)>> = marked
        .iter()
        .map(|id| {
            sk.edges[*id]
                .cycle
                .iter()
                .map(|c| {
                    let (a, b) = c.slot.ends();
                    (c.slot.tet as usize, a, b)
                })
                .collect()
        })
        .collect();

    let mut best: Option<Vec<u16>> = None;
    for root in 0..n {
        for rho in Perm4::all() {
            if let Some(w) = candidate(tri, &marked_slots, root, rho, best.as_ref()) {
                if best.as_ref().map_or(true, |b| w < *b) {
                    best = Some(w);
                }
            }
        }
    }
    let words = best.unwrap();
    let mut bytes = Vec::with_capacity(words.len() * 2);
    for w in words {
        bytes.extend_from_slice(&w.to_le_bytes());
    }
    Signature(bytes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm4;
    use crate::skeleton::Skeleton;
    use crate::tri::GluingEntry;

    fn double_tet(p: Perm4) -> LooseTriangulation {
        let mut entries = Vec::new();
        for f in 0..4u8 {
            entries.push(GluingEntry {
                tet: 0,
                face: f,
                to_tet: 1,
                to_face: p.apply(f),
                perm: p,
            });
            entries.push(GluingEntry {
                tet: 1,
                face: p.apply(f),
                to_tet: 0,
                to_face: f,
                perm: p.inverse(),
            });
        }
        LooseTriangulation::build(2, &entries).unwrap()
    }

    #[test]
    fn relabeling_invariance() {
        let a = double_tet(Perm4::IDENTITY);
        let ska = Skeleton::compute(&a).unwrap();
        let sig_a = signature(&a, &ska, &BTreeSet::new());
        // same complex with tets listed in the other order is isomorphic
        let b = double_tet(Perm4::IDENTITY);
        let skb = Skeleton::compute(&b).unwrap();
        let sig_b = signature(&b, &skb, &BTreeSet::new());
        assert_eq!(sig_a, sig_b);
    }

    #[test]
    fn marks_change_signature() {
        let a = double_tet(Perm4::IDENTITY);
        let sk = Skeleton::compute(&a).unwrap();
        let unmarked = signature(&a, &sk, &BTreeSet::new());
        let marked = signature(&a, &sk, &BTreeSet::from([0usize]));
        assert_ne!(unmarked, marked);
    }
}
