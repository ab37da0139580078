use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor};

/// A subset of the vertex set `{0, .., n-1}` stored as a bit mask.
///
/// Bit `v` is set iff vertex `v` belongs to the subset. Masks index the
/// coordinates of height vectors, so the numeric value of a mask is also its
/// position in a `2^n` array.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetMask(u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub const fn from_bits(bits: u32) -> Self {
        SubsetMask(bits)
    }

    /// The whole vertex set of an `n`-vertex graph.
    pub const fn full(n: usize) -> Self {
        if n >= 32 {
            SubsetMask(u32::MAX)
        } else {
            SubsetMask((1u32 << n) - 1)
        }
    }

    pub const fn singleton(v: usize) -> Self {
        SubsetMask(1 << v)
    }

    pub fn pair(u: usize, v: usize) -> Self {
        SubsetMask::singleton(u) | SubsetMask::singleton(v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        vertices.into_iter().fold(SubsetMask::EMPTY, |m, v| m.with(v))
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// Position of this subset in a `2^n` coordinate array.
    pub const fn index(self) -> usize {
        self.0 as usize
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 32 && self.0 & (1 << v) != 0
    }

    #[must_use]
    pub const fn with(self, v: usize) -> Self {
        SubsetMask(self.0 | (1 << v))
    }

    #[must_use]
    pub const fn without(self, v: usize) -> Self {
        SubsetMask(self.0 & !(1 << v))
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    #[must_use]
    pub const fn union(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 | other.0)
    }

    #[must_use]
    pub const fn intersection(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 & other.0)
    }

    #[must_use]
    pub const fn difference(self, other: SubsetMask) -> Self {
        SubsetMask(self.0 & !other.0)
    }

    /// Complement inside `{0, .., n-1}`.
    #[must_use]
    pub const fn complement(self, n: usize) -> Self {
        SubsetMask(!self.0 & SubsetMask::full(n).0)
    }

    /// Smallest vertex of the subset.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Vertices in increasing order.
    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    /// All subsets of `self` (including `∅` and `self`) in increasing mask order.
    pub fn submasks(self) -> Submasks {
        Submasks {
            of: self.0,
            next: Some(0),
        }
    }

    /// All masks over `n` vertices, `∅` first.
    pub fn all(n: usize) -> impl Iterator<Item = SubsetMask> {
        (0..=SubsetMask::full(n).0).map(SubsetMask)
    }
}

impl BitOr for SubsetMask {
    type Output = SubsetMask;
    fn bitor(self, rhs: SubsetMask) -> SubsetMask {
        self.union(rhs)
    }
}

impl BitAnd for SubsetMask {
    type Output = SubsetMask;
    fn bitand(self, rhs: SubsetMask) -> SubsetMask {
        self.intersection(rhs)
    }
}

impl BitXor for SubsetMask {
    type Output = SubsetMask;
    fn bitxor(self, rhs: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 ^ rhs.0)
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Renders as `{0,2}`; the empty set as `{}`.
impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

#[derive(Clone, Debug)]
pub struct Vertices(u32);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Vertices {}

/// Iterates submasks in increasing numeric order via `next = (cur - of) & of`.
#[derive(Clone, Debug)]
pub struct Submasks {
    of: u32,
    next: Option<u32>,
}

impl Iterator for Submasks {
    type Item = SubsetMask;

    fn next(&mut self) -> Option<SubsetMask> {
        let cur = self.next?;
        self.next = if cur == self.of {
            None
        } else {
            Some(cur.wrapping_sub(self.of) & self.of)
        };
        Some(SubsetMask(cur))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn submasks_are_increasing_and_complete() {
        let s = SubsetMask::from_vertices([0, 2, 3]);
        let subs: Vec<u32> = s.submasks().map(|m| m.bits()).collect();
        assert_eq!(subs, vec![0, 1, 4, 5, 8, 9, 12, 13]);
        assert_eq!(SubsetMask::EMPTY.submasks().count(), 1);
    }

    #[test]
    fn set_operations() {
        let a = SubsetMask::from_vertices([0, 1]);
        let b = SubsetMask::from_vertices([1, 2]);
        assert_eq!(a | b, SubsetMask::full(3));
        assert_eq!(a & b, SubsetMask::singleton(1));
        assert_eq!(a.difference(b), SubsetMask::singleton(0));
        assert_eq!(a.complement(3), SubsetMask::singleton(2));
        assert_eq!(SubsetMask::EMPTY.complement(0), SubsetMask::EMPTY);
        assert!(SubsetMask::singleton(1).is_subset_of(a));
        assert_eq!(a.to_string(), "{0,1}");
        assert_eq!(SubsetMask::EMPTY.to_string(), "{}");
        assert_eq!(SubsetMask::all(2).count(), 4);
    }
}
