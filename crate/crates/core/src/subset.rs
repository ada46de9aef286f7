use core::fmt;

use alloc::string::String;

/// A subset of a small index set `{0, .., 63}` stored as a bitmask.
///
/// Used both for disk-membership labels of an arrangement and for the set
/// `V(w)` of short neighbors of a vertex in a bipartite instance.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= 64);
        if n == 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Subset {
        Subset(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Subset {
        let mut s = Subset::EMPTY;
        for i in indices {
            s = s.with(i);
        }
        s
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[must_use]
    pub fn with(self, i: usize) -> Subset {
        Subset(self.0 | 1u64 << i)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Complement inside `{0, .., n-1}`.
    #[must_use]
    pub fn complement(self, n: usize) -> Subset {
        Subset(!self.0 & Subset::full(n).0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..64).filter(move |i| bits >> i & 1 == 1)
    }

    /// Bitstring of length `n`, character `i` is `1` when `i` is a member.
    pub fn to_bitstring(self, n: usize) -> String {
        (0..n).map(|i| if self.contains(i) { '1' } else { '0' }).collect()
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let s = Subset::from_indices([0, 2, 3]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(2) && !s.contains(1));
        assert_eq!(s.complement(4), Subset::singleton(1));
        assert_eq!(s.to_bitstring(5), "10110");
        assert_eq!(s.iter().collect::<alloc::vec::Vec<_>>(), [0, 2, 3]);
        assert_eq!(Subset::full(64).len(), 64);
    }
}
