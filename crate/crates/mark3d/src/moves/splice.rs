//! Region rewriting: the shared mechanics behind every move.
//!
//! A splice removes a set of tetrahedra, inserts new ones with prescribed
//! internal gluings, maps the boundary faces of the removed region onto
//! faces of the new tetrahedra, and may directly reglue surviving faces
//! (negative moves collapse a region to nothing). Afterwards the table is
//! compacted, revalidated, and marked classes are transported.

use crate::marked::MarkedTriangulation;
use crate::moves::MoveError;
use crate::perm::Perm4;
use crate::skeleton::{EdgeSlot, Skeleton};
use crate::tri::{edge_index, set_gluing, FaceSlot, Gluing, LooseTriangulation};
use std::collections::BTreeMap;

/// Maps one boundary face of the removed region onto a face of a new
/// tetrahedron, with the label correspondence.
#[derive(Clone, Copy, Debug)]
pub struct BoundaryMap {
    pub old: FaceSlot,
    pub new_local: usize,
    pub new_face: u8,
    /// Old tetrahedron labels to new tetrahedron labels; must map
    /// `old.face` to `new_face`.
    pub label_map: Perm4,
}

#[derive(Clone, Debug, Default)]
pub struct Splice {
    /// Old tetrahedron indices to remove (sorted, distinct).
    pub removed: Vec<usize>,
    /// Number of new tetrahedra.
    pub added: usize,
    /// Gluings among new tetrahedra: (local, face, local, face, perm).
    pub internal: Vec<(usize, u8, usize, u8, Perm4)>,
    /// Boundary faces of the removed region mapped onto new faces.
    pub boundary: Vec<BoundaryMap>,
    /// Direct regluings between surviving slots (label maps a -> b).
    pub reglue: Vec<(FaceSlot, FaceSlot, Perm4)>,
}

/// How a marked class is carried through the rewrite.
#[derive(Clone, Copy, Debug)]
pub enum Heir {
    /// The class continues at this edge of a new tetrahedron.
    NewSlot { local: usize, edge: u8 },
    /// The class continues at this surviving old slot.
    OldSlot(EdgeSlot),
}

pub(crate) struct SpliceResult {
    pub out: MarkedTriangulation,
    /// Final indices of the added tetrahedra, in local order.
    pub new_tets: Vec<usize>,
    /// Old tetrahedron index to final index (None for removed).
    pub remap: Vec<Option<usize>>,
    /// Direct regluings performed, in final indices.
    pub reglued: Vec<(FaceSlot, FaceSlot)>,
}

pub(crate) fn apply_splice(
    m: &MarkedTriangulation,
    sp: &Splice,
    heirs: &BTreeMap<usize, Heir>,
) -> Result<SpliceResult, MoveError> {
    let old = m.tri();
    let n_old = old.n_tets();
    debug_assert!(sp.removed.windows(2).all(|w| w[0] < w[1]));

    let reused = sp.added.min(sp.removed.len());
    let extra = sp.added - reused;
    let ext_n = n_old + extra;
    let new_global_ext = |local: usize| -> usize {
        if local < reused {
            sp.removed[local]
        } else {
            n_old + (local - reused)
        }
    };

    let poison = Gluing {
        to: FaceSlot {
            tet: u32::MAX,
            face: 0,
        },
        perm: Perm4::IDENTITY,
    };
    let mut table: Vec<[Gluing; 4]> = old.table_mut_clone();
    table.resize(ext_n, [poison; 4]);
    for &r in &sp.removed {
        table[r] = [poison; 4];
    }

    // boundary lookup by old slot
    let mut bmap: BTreeMap<FaceSlot, (FaceSlot, Perm4)> = BTreeMap::new();
    for bm in &sp.boundary {
        debug_assert!(sp.removed.contains(&(bm.old.tet as usize)));
        debug_assert_eq!(bm.label_map.apply(bm.old.face), bm.new_face);
        let dst = FaceSlot::new(new_global_ext(bm.new_local), bm.new_face);
        if bmap.insert(bm.old, (dst, bm.label_map)).is_some() {
            return Err(MoveError::NotAdmissible(
                "duplicate boundary mapping".into(),
            ));
        }
    }

    for bm in &sp.boundary {
        let (dst, lm) = bmap[&bm.old];
        let h = *old.gluing(bm.old);
        if let Some((dst2, lm2)) = bmap.get(&h.to) {
            // both sides of the old gluing are boundary faces; handle once
            if bm.old < h.to {
                let perm = lm2.compose(&h.perm).compose(&lm.inverse());
                set_gluing(&mut table, dst, *dst2, perm);
            }
        } else if sp.removed.contains(&(h.to.tet as usize)) {
            return Err(MoveError::NotAdmissible(
                "region boundary is not closed".into(),
            ));
        } else {
            let perm = h.perm.compose(&lm.inverse());
            set_gluing(&mut table, dst, h.to, perm);
        }
    }

    for (a, fa, b, fb, perm) in &sp.internal {
        debug_assert_eq!(perm.apply(*fa), *fb);
        set_gluing(
            &mut table,
            FaceSlot::new(new_global_ext(*a), *fa),
            FaceSlot::new(new_global_ext(*b), *fb),
            *perm,
        );
    }

    for (a, b, perm) in &sp.reglue {
        if sp.removed.contains(&(a.tet as usize)) || sp.removed.contains(&(b.tet as usize)) {
            return Err(MoveError::NotAdmissible("reglue of a removed slot".into()));
        }
        set_gluing(&mut table, *a, *b, *perm);
    }

    // compact: drop the removed indices that were not reused
    let unused: Vec<usize> = sp.removed[reused..].to_vec();
    let mut remap_ext: Vec<Option<usize>> = Vec::with_capacity(ext_n);
    let mut next = 0usize;
    for i in 0..ext_n {
        if unused.contains(&i) {
            remap_ext.push(None);
        } else {
            remap_ext.push(Some(next));
            next += 1;
        }
    }
    let mut final_table: Vec<[Gluing; 4]> = Vec::with_capacity(next);
    for i in 0..ext_n {
        if remap_ext[i].is_none() {
            continue;
        }
        let mut row = table[i];
        for g in &mut row {
            if g.to.tet == u32::MAX {
                return Err(MoveError::NotAdmissible(
                    "rewrite left an unglued face".into(),
                ));
            }
            match remap_ext[g.to.tet as usize] {
                Some(t) => g.to.tet = t as u32,
                None => {
                    return Err(MoveError::NotAdmissible(
                        "rewrite references a removed tetrahedron".into(),
                    ))
                }
            }
        }
        final_table.push(row);
    }

    let tri2 = LooseTriangulation::from_table(final_table)
        .map_err(|e| MoveError::NotAdmissible(format!("rewrite invalid: {e}")))?;
    let sk2 = Skeleton::compute(&tri2).map_err(|e| MoveError::NotAdmissible(format!("{e}")))?;

    let remap: Vec<Option<usize>> = (0..n_old)
        .map(|t| {
            if sp.removed.contains(&t) {
                None
            } else {
                remap_ext[t]
            }
        })
        .collect();
    let new_tets: Vec<usize> = (0..sp.added)
        .map(|k| remap_ext[new_global_ext(k)].expect("new tetrahedron compacted away"))
        .collect();

    // transport marks
    let sk1 = m.skeleton();
    let mut marked2 = std::collections::BTreeSet::new();
    for &id in m.marked() {
        let slot2 = match heirs.get(&id) {
            Some(Heir::NewSlot { local, edge }) => EdgeSlot::new(new_tets[*local], *edge),
            Some(Heir::OldSlot(s)) => {
                let t = remap[s.tet as usize].ok_or_else(|| {
                    MoveError::NotAdmissible("mark heir slot was removed".into())
                })?;
                EdgeSlot::new(t, s.edge)
            }
            None => transport_auto(sk1, id, sp, &remap, &new_tets)?,
        };
        marked2.insert(sk2.edge_class_of(slot2));
    }
    if marked2.len() != m.marked().len() {
        return Err(MoveError::NotAdmissible(
            "marked classes merged by the rewrite".into(),
        ));
    }

    let reglued: Vec<(FaceSlot, FaceSlot)> = sp
        .reglue
        .iter()
        .map(|(a, b, _)| {
            let fix = |s: &FaceSlot| {
                FaceSlot::new(
                    remap_ext[s.tet as usize].expect("reglued slot survives"),
                    s.face,
                )
            };
            (fix(a), fix(b))
        })
        .collect();

    let out = MarkedTriangulation::from_parts(tri2, marked2, sk2);
    Ok(SpliceResult {
        out,
        new_tets,
        remap,
        reglued,
    })
}

/// Default transport: a surviving slot of the class, or a slot mapped
/// through a boundary face containing it.
fn transport_auto(
    sk: &Skeleton,
    class: usize,
    sp: &Splice,
    remap: &[Option<usize>],
    new_tets: &[usize],
) -> Result<EdgeSlot, MoveError> {
    for c in &sk.edges[class].cycle {
        if let Some(t) = remap[c.slot.tet as usize] {
            return Ok(EdgeSlot::new(t, c.slot.edge));
        }
    }
    for c in &sk.edges[class].cycle {
        let (a, b) = c.slot.ends();
        for bm in &sp.boundary {
            if bm.old.tet == c.slot.tet && bm.old.face != a && bm.old.face != b {
                let na = bm.label_map.apply(a);
                let nb = bm.label_map.apply(b);
                return Ok(EdgeSlot::new(
                    new_tets[bm.new_local],
                    edge_index(na, nb),
                ));
            }
        }
    }
    Err(MoveError::NotAdmissible(
        "marked class has no heir through the rewrite".into(),
    ))
}
