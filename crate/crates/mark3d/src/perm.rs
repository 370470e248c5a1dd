//! Permutations of the four vertex labels of a tetrahedron.

use serde::{Deserialize, Serialize};

/// A permutation of the labels `0..4`, stored as its image array.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm4(pub [u8; 4]);

impl Perm4 {
    pub const IDENTITY: Perm4 = Perm4([0, 1, 2, 3]);

    pub fn new(images: [u8; 4]) -> Option<Perm4> {
        let mut seen = [false; 4];
        for &i in &images {
            if i > 3 || seen[i as usize] {
                return None;
            }
            seen[i as usize] = true;
        }
        Some(Perm4(images))
    }

    #[inline]
    pub fn apply(&self, v: u8) -> u8 {
        self.0[v as usize]
    }

    /// `self` after `other`: `(self.compose(other)).apply(v) == self.apply(other.apply(v))`.
    pub fn compose(&self, other: &Perm4) -> Perm4 {
        Perm4([
            self.apply(other.0[0]),
            self.apply(other.0[1]),
            self.apply(other.0[2]),
            self.apply(other.0[3]),
        ])
    }

    pub fn inverse(&self) -> Perm4 {
        let mut inv = [0u8; 4];
        for v in 0..4u8 {
            inv[self.apply(v) as usize] = v;
        }
        Perm4(inv)
    }

    pub fn is_even(&self) -> bool {
        let mut swaps = 0;
        let mut a = self.0;
        for i in 0..4 {
            while a[i] as usize != i {
                let j = a[i] as usize;
                a.swap(i, j);
                swaps += 1;
            }
        }
        swaps % 2 == 0
    }

    /// Builds the permutation taking `from[k]` to `to[k]` for three labels,
    /// with the remaining label forced onto the remaining label.
    pub fn from_triple(from: [u8; 3], to: [u8; 3]) -> Perm4 {
        let mut img = [u8::MAX; 4];
        for k in 0..3 {
            img[from[k] as usize] = to[k];
        }
        let missing_from = (0..4u8).find(|v| img[*v as usize] == u8::MAX).unwrap();
        let mut used = [false; 4];
        for &t in &to {
            used[t as usize] = true;
        }
        let missing_to = (0..4u8).find(|v| !used[*v as usize]).unwrap();
        img[missing_from as usize] = missing_to;
        Perm4(img)
    }

    pub fn all() -> impl Iterator<Item = Perm4> {
        const LABELS: [u8; 4] = [0, 1, 2, 3];
        let mut perms = Vec::with_capacity(24);
        for a in LABELS {
            for b in LABELS {
                if b == a {
                    continue;
                }
                for c in LABELS {
                    if c == a || c == b {
                        continue;
                    }
                    let d = 6 - a - b - c;
                    perms.push(Perm4([a, b, c, d]));
                }
            }
        }
        perms.into_iter()
    }
}

impl std::fmt::Debug for Perm4 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({}{}{}{})",
            self.0[0], self.0[1], self.0[2], self.0[3]
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        for p in Perm4::all() {
            for q in Perm4::all() {
                let pq = p.compose(&q);
                for v in 0..4 {
                    assert_eq!(pq.apply(v), p.apply(q.apply(v)));
                }
            }
            assert_eq!(p.compose(&p.inverse()), Perm4::IDENTITY);
        }
        assert_eq!(Perm4::all().count(), 24);
    }

    #[test]
    fn triple_construction() {
        let p = Perm4::from_triple([1, 2, 3], [2, 0, 3]);
        assert_eq!(p.apply(1), 2);
        assert_eq!(p.apply(2), 0);
        assert_eq!(p.apply(3), 3);
        assert_eq!(p.apply(0), 1);
    }

    #[test]
    fn parity() {
        assert!(Perm4::IDENTITY.is_even());
        assert!(!Perm4([1, 0, 2, 3]).is_even());
        assert!(Perm4([1, 2, 0, 3]).is_even());
    }
}
