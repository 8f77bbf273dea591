//! Vertex sets packed into a single machine word.

/// A set of vertex indices, bit `i` set iff vertex `i` is a member.
pub type VertexSet = u64;

/// Ascending iterator over the members of a set.
#[derive(Debug, Clone, Copy)]
pub struct Members(VertexSet);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

#[inline]
pub fn members(set: VertexSet) -> Members {
    Members(set)
}

#[inline]
pub fn singleton(v: usize) -> VertexSet {
    1u64 << v
}

/// The set {0, .., n-1}.
#[inline]
pub fn full(n: usize) -> VertexSet {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn contains(set: VertexSet, v: usize) -> bool {
    set >> v & 1 == 1
}

pub fn from_iter<I: IntoIterator<Item = usize>>(it: I) -> VertexSet {
    it.into_iter().fold(0, |s, v| s | singleton(v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn members_ascend() {
        let s = from_iter([5, 0, 63, 7]);
        assert_eq!(members(s).collect::<Vec<_>>(), vec![0, 5, 7, 63]);
        assert_eq!(members(s).len(), 4);
    }

    #[test]
    fn full_sets() {
        assert_eq!(full(0), 0);
        assert_eq!(full(3), 0b111);
        assert_eq!(full(64), u64::MAX);
        assert!(contains(full(10), 9));
        assert!(!contains(full(10), 10));
    }
}
