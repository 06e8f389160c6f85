use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

/// Whether an exterior element is a differential form or a multivector field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Form,
    Multivector,
}

/// A strictly increasing set of axes `i_1 < ... < i_k`, standing for
/// `dx_{i_1} ^ ... ^ dx_{i_k}` or `d_{i_1} ^ ... ^ d_{i_k}`.
///
/// Stored as a bitmask over zero-based axes; at most 32 axes.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExteriorIndex(u32);

impl ExteriorIndex {
    pub const EMPTY: ExteriorIndex = ExteriorIndex(0);

    pub fn from_mask(mask: u32) -> Self {
        ExteriorIndex(mask)
    }

    /// Build from zero-based axes; `None` if not strictly increasing.
    pub fn from_axes(axes: &[usize]) -> Option<Self> {
        let mut mask = 0u32;
        let mut prev: Option<usize> = None;
        for &a in axes {
            if a >= 32 || prev.is_some_and(|p| p >= a) {
                return None;
            }
            mask |= 1 << a;
            prev = Some(a);
        }
        Some(ExteriorIndex(mask))
    }

    pub fn single(axis: usize) -> Self {
        ExteriorIndex(1 << axis)
    }

    /// The complement inside `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        ExteriorIndex(if n >= 32 { u32::MAX } else { (1u32 << n) - 1 })
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, axis: usize) -> bool {
        self.0 & (1 << axis) != 0
    }

    pub fn is_subset(self, other: ExteriorIndex) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn axes(self) -> impl Iterator<Item = usize> {
        let m = self.0;
        (0..32).filter(move |i| m & (1 << i) != 0)
    }

    pub fn axes_vec(self) -> Vec<usize> {
        self.axes().collect()
    }

    pub fn complement(self, n: usize) -> ExteriorIndex {
        ExteriorIndex(Self::full(n).0 & !self.0)
    }

    pub fn minus(self, other: ExteriorIndex) -> ExteriorIndex {
        ExteriorIndex(self.0 & !other.0)
    }

    pub fn union(self, other: ExteriorIndex) -> ExteriorIndex {
        ExteriorIndex(self.0 | other.0)
    }

    pub fn insert(self, axis: usize) -> ExteriorIndex {
        ExteriorIndex(self.0 | (1 << axis))
    }
}

/// Sign `s` with `e_a ^ e_b = s e_{a u b}`, or `None` when `a` and `b` meet.
pub fn wedge_sign(a: ExteriorIndex, b: ExteriorIndex) -> Option<i8> {
    if a.0 & b.0 != 0 {
        return None;
    }
    // inversions: pairs (i in a, j in b) with i > j
    let mut inv = 0u32;
    for j in b.axes() {
        inv += (a.0 >> (j + 1)).count_ones();
    }
    Some(if inv % 2 == 0 { 1 } else { -1 })
}

/// All indices of degree `k` over `n` axes in lexicographic order.
pub fn indices_of_degree(n: usize, k: usize) -> Vec<ExteriorIndex> {
    let mut out: Vec<ExteriorIndex> = (0u32..(1u32 << n))
        .filter(|m| m.count_ones() as usize == k)
        .map(ExteriorIndex)
        .collect();
    out.sort();
    out
}

impl Ord for ExteriorIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.axes().cmp(other.axes())
    }
}

impl PartialOrd for ExteriorIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ExteriorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.axes_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wedge_signs() {
        let e = ExteriorIndex::single;
        assert_eq!(wedge_sign(e(0), e(1)), Some(1));
        assert_eq!(wedge_sign(e(1), e(0)), Some(-1));
        assert_eq!(wedge_sign(e(0), e(0)), None);
        // dx3 ^ dx4 ^ dx1 ^ dx2 = dx1 ^ dx2 ^ dx3 ^ dx4
        let a = ExteriorIndex::from_axes(&[2, 3]).unwrap();
        let b = ExteriorIndex::from_axes(&[0, 1]).unwrap();
        assert_eq!(wedge_sign(a, b), Some(1));
        // dx2 ^ dx1 ^ dx3
        let c = ExteriorIndex::from_axes(&[0, 2]).unwrap();
        assert_eq!(wedge_sign(e(1), c), Some(-1));
    }

    #[test]
    fn lexicographic_order() {
        let idx = indices_of_degree(4, 2);
        let lists: Vec<Vec<usize>> = idx.iter().map(|i| i.axes_vec()).collect();
        assert_eq!(
            lists,
            alloc::vec![
                alloc::vec![0, 1],
                alloc::vec![0, 2],
                alloc::vec![0, 3],
                alloc::vec![1, 2],
                alloc::vec![1, 3],
                alloc::vec![2, 3]
            ]
        );
    }

    #[test]
    fn rejects_unsorted_axes() {
        assert!(ExteriorIndex::from_axes(&[2, 1]).is_none());
        assert!(ExteriorIndex::from_axes(&[1, 1]).is_none());
    }
}
