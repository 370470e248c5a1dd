//! Integral first homology of the quotient complex, via Smith normal form
//! over arbitrary-precision integers.
//!
//! The CW structure has one cell per vertex class, edge class, triangle class
//! and tetrahedron. Boundary maps carry orientation signs transported to the
//! class representatives.

use crate::skeleton::{EdgeSlot, Skeleton};
use crate::tri::{edge_index, face_vertices, LooseTriangulation};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

/// Invariant-factor description of a finitely generated abelian group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Homology {
    pub betti: usize,
    /// Nontrivial torsion coefficients in divisibility order.
    pub torsion: Vec<String>,
}

impl std::fmt::Display for Homology {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        if self.betti > 0 {
            if self.betti == 1 {
                parts.push("Z".to_string());
            } else {
                parts.push(format!("Z^{}", self.betti));
            }
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Dense integer matrix in column-major boundary convention: `rows x cols`.
pub struct IntMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<BigInt>,
}

impl IntMat {
    pub fn zero(rows: usize, cols: usize) -> IntMat {
        IntMat {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }
    #[inline]
    pub fn at(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }
    #[inline]
    pub fn add_at(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] += v;
    }
}

/// Diagonal of the Smith normal form (nonzero entries, positive, in
/// divisibility order).
pub fn smith_diagonal(mut m: IntMat) -> Vec<BigInt> {
    let mut diag = Vec::new();
    let mut top = 0usize;
    let (rows, cols) = (m.rows, m.cols);
    while top < rows && top < cols {
        // find a pivot of minimal absolute value
        let mut pivot: Option<(usize, usize)> = None;
        for r in top..rows {
            for c in top..cols {
                let v = m.at(r, c);
                if !v.is_zero() {
                    match &pivot {
                        None => pivot = Some((r, c)),
                        Some((pr, pc)) => {
                            if v.abs() < m.at(*pr, *pc).abs() {
                                pivot = Some((r, c));
                            }
                        }
                    }
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        m.swap_rows(top, pr);
        m.swap_cols(top, pc);
        // clear the pivot row and column
        loop {
            let mut dirty = false;
            for r in top + 1..rows {
                let q = m.at(r, top) / m.at(top, top);
                if !q.is_zero() {
                    m.row_sub(r, top, &q);
                }
                if !m.at(r, top).is_zero() {
                    m.swap_rows(r, top);
                    dirty = true;
                }
            }
            for c in top + 1..cols {
                let q = m.at(top, c) / m.at(top, top);
                if !q.is_zero() {
                    m.col_sub(c, top, &q);
                }
                if !m.at(top, c).is_zero() {
                    m.swap_cols(c, top);
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }
        // enforce divisibility of the remaining block by the pivot
        let mut fixed = false;
        'scan: for r in top + 1..rows {
            for c in top + 1..cols {
                if !(m.at(r, c) % m.at(top, top)).is_zero() {
                    m.row_add(top, r);
                    fixed = true;
                    break 'scan;
                }
            }
        }
        if fixed {
            continue;
        }
        let d = m.at(top, top).abs();
        diag.push(d);
        top += 1;
    }
    diag
}

impl IntMat {
    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for r in 0..self.rows {
            self.data.swap(r * self.cols + a, r * self.cols + b);
        }
    }
    /// row[a] -= q * row[b]
    fn row_sub(&mut self, a: usize, b: usize, q: &BigInt) {
        for c in 0..self.cols {
            let v = q * self.at(b, c);
            self.data[a * self.cols + c] -= v;
        }
    }
    /// col[a] -= q * col[b]
    fn col_sub(&mut self, a: usize, b: usize, q: &BigInt) {
        for r in 0..self.rows {
            let v = q * self.at(r, b);
            self.data[r * self.cols + a] -= v;
        }
    }
    /// row[a] += row[b]
    fn row_add(&mut self, a: usize, b: usize) {
        for c in 0..self.cols {
            let v = self.at(b, c).clone();
            self.data[a * self.cols + c] += v;
        }
    }
}

/// Boundary matrix from edge classes to vertex classes.
fn boundary_1(sk: &Skeleton) -> IntMat {
    let mut m = IntMat::zero(sk.vertices.len(), sk.edges.len());
    for e in &sk.edges {
        m.add_at(e.endpoints.1, e.id, 1);
        m.add_at(e.endpoints.0, e.id, -1);
    }
    m
}

/// Boundary matrix from triangle classes to edge classes.
fn boundary_2(sk: &Skeleton) -> IntMat {
    let mut m = IntMat::zero(sk.edges.len(), sk.triangles.len());
    for t in &sk.triangles {
        let rep = t.slots.0;
        let vs = face_vertices(rep.face);
        // oriented boundary of the face with vertices v0 < v1 < v2
        let sides = [(vs[0], vs[1], 1), (vs[1], vs[2], 1), (vs[0], vs[2], -1)];
        for (a, b, s) in sides {
            let slot = EdgeSlot::new(rep.tet as usize, edge_index(a, b));
            let cls = sk.edge_class_of(slot);
            let corner = sk.edges[cls].cycle.iter().find(|c| c.slot == slot).unwrap();
            let sign = if (corner.tail, corner.head) == (a, b) { s } else { -s };
            m.add_at(cls, t.id, sign);
        }
    }
    m
}

/// First homology of the quotient complex.
pub fn homology_h1(_tri: &LooseTriangulation, sk: &Skeleton) -> Homology {
    let d1 = boundary_1(sk);
    let d2 = boundary_2(sk);
    let n_edges = sk.edges.len();
    let r1 = smith_diagonal(d1).len();
    let snf2 = smith_diagonal(d2);
    let r2 = snf2.len();
    let betti = n_edges - r1 - r2;
    let torsion: Vec<String> = snf2
        .into_iter()
        .filter(|d| *d > BigInt::from(1))
        .map(|d| d.to_string())
        .collect();
    Homology { betti, torsion }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: usize, cols: usize, vals: &[i64]) -> IntMat {
        let mut m = IntMat::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.add_at(r, c, vals[r * cols + c]);
            }
        }
        m
    }

    #[test]
    fn snf_small() {
        let m = mat(2, 2, &[2, 4, 4, 8]);
        let d = smith_diagonal(m);
        assert_eq!(d, vec![BigInt::from(2)]);

        let m = mat(3, 3, &[1, 0, 0, 0, 2, 0, 0, 0, 6]);
        let d = smith_diagonal(m);
        assert_eq!(d, vec![BigInt::from(1), BigInt::from(2), BigInt::from(6)]);

        // divisibility must be enforced
        let m = mat(2, 2, &[2, 0, 0, 3]);
        let d = smith_diagonal(m);
        assert_eq!(d, vec![BigInt::from(1), BigInt::from(6)]);
    }

    #[test]
    fn snf_handles_zero() {
        let m = mat(2, 3, &[0, 0, 0, 0, 0, 0]);
        assert!(smith_diagonal(m).is_empty());
    }
}
