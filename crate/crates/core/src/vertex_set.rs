use std::fmt;

/// A set of 1-indexed vertex labels in `1..=64`, stored as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    /// `{lo, ..., hi}`; empty when `lo > hi`.
    pub fn range(lo: usize, hi: usize) -> Self {
        if lo > hi || hi == 0 {
            return VertexSet::EMPTY;
        }
        let lo = lo.max(1);
        VertexSet(low_mask(hi) & !low_mask(lo - 1))
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << (v - 1))
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=64).contains(&v) && self.0 >> (v - 1) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << (v - 1);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Elements in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Bits `0..n`, i.e. the vertices `1..=n`.
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
