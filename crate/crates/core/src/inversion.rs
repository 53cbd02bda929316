//! Pair sets `{(i, j) : 1 <= i < j <= n}` stored as a strictly upper
//! triangular bit matrix, one row per `i`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A set of pairs `(i, j)` with `i < j`.
///
/// Used both for inversion sets `B(T)` and for cubic sets `C(T)`. The order
/// implemented by [`Ord`] is the canonical node order: lexicographic on the
/// pair matrix read row by row, `j` ascending, absent before present. The
/// empty set is the smallest element and the full triangle the largest.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct InversionSet {
    rows: Vec<VertexSet>,
}

impl InversionSet {
    pub fn empty(n: usize) -> Self {
        InversionSet {
            rows: vec![VertexSet::EMPTY; n],
        }
    }

    /// Every pair `i < j`.
    pub fn full(n: usize) -> Self {
        InversionSet {
            rows: (1..=n).map(|i| VertexSet::range(i + 1, n)).collect(),
        }
    }

    pub fn from_pairs<I>(n: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = InversionSet::empty(n);
        for (i, j) in pairs {
            if i == 0 || i >= j || j > n {
                return Err(Error::PairOutOfRange(i, j, n));
            }
            set.rows[i - 1].insert(j);
        }
        Ok(set)
    }

    /// Builds a set from its components `B_1, ..., B_k` (`k <= n`).
    pub fn from_components(n: usize, components: &[Vec<usize>]) -> Result<Self> {
        InversionSet::from_pairs(
            n,
            components
                .iter()
                .enumerate()
                .flat_map(|(idx, c)| c.iter().map(move |&j| (idx + 1, j))),
        )
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        i >= 1 && i <= self.n() && self.rows[i - 1].contains(j) && i < j
    }

    pub fn insert(&mut self, i: usize, j: usize) -> Result<()> {
        if i == 0 || i >= j || j > self.n() {
            return Err(Error::PairOutOfRange(i, j, self.n()));
        }
        self.rows[i - 1].insert(j);
        Ok(())
    }

    /// The component `B_i = {j : (i, j) in B}`.
    pub fn row(&self, i: usize) -> VertexSet {
        self.rows[i - 1]
    }

    pub(crate) fn set_row(&mut self, i: usize, row: VertexSet) {
        self.rows[i - 1] = row;
    }

    /// `{i : (i, j) in B}`.
    pub fn column(&self, j: usize) -> VertexSet {
        (1..j).filter(|&i| self.rows[i - 1].contains(j)).collect()
    }

    /// Components `B_1, ..., B_{n-1}`; `B_n` is always empty and omitted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.rows
            .iter()
            .take(self.n().saturating_sub(1))
            .map(|r| r.to_vec())
            .collect()
    }

    /// The vector `(|B_1|, ..., |B_{n-1}|)`.
    pub fn vector(&self) -> Vec<usize> {
        self.rows
            .iter()
            .take(self.n().saturating_sub(1))
            .map(|r| r.len())
            .collect()
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    /// Pairs in ascending `(i, j)` order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(idx, row)| row.iter().map(move |j| (idx + 1, j)))
    }

    /// Pairs `(i, j)` with `i < j` that are not in the set, ascending.
    pub fn absent_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n();
        (1..=n).flat_map(move |i| {
            VertexSet::range(i + 1, n)
                .difference(self.rows[i - 1])
                .iter()
                .map(move |j| (i, j))
        })
    }

    pub fn is_subset(&self, other: &InversionSet) -> bool {
        self.n() == other.n()
            && self
                .rows
                .iter()
                .zip(&other.rows)
                .all(|(a, b)| a.is_subset(*b))
    }

    pub fn intersection(&self, other: &InversionSet) -> InversionSet {
        debug_assert_eq!(self.n(), other.n());
        InversionSet {
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.intersection(*b))
                .collect(),
        }
    }

    pub fn union(&self, other: &InversionSet) -> InversionSet {
        debug_assert_eq!(self.n(), other.n());
        InversionSet {
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.union(*b))
                .collect(),
        }
    }

    /// Pairs of the triangle not in this set.
    pub fn complement(&self) -> InversionSet {
        let n = self.n();
        InversionSet {
            rows: self
                .rows
                .iter()
                .enumerate()
                .map(|(idx, r)| VertexSet::range(idx + 2, n).difference(*r))
                .collect(),
        }
    }

    /// Smallest transitive superset.
    ///
    /// All pairs point from a smaller to a larger label, so the relation is
    /// acyclic and rows can be closed from the last one down: once every row
    /// `j > i` is closed, `row(i)` only needs the union of the rows it hits.
    pub fn transitive_closure(&self) -> InversionSet {
        let mut rows = self.rows.clone();
        for i in (0..rows.len()).rev() {
            let mut acc = rows[i];
            for j in rows[i].iter() {
                acc = acc.union(rows[j - 1]);
            }
            rows[i] = acc;
        }
        InversionSet { rows }
    }

    pub fn is_transitive(&self) -> bool {
        self.pairs()
            .all(|(i, j)| self.rows[j - 1].is_subset(self.rows[i - 1]))
    }

    /// Formats as `i-j,i-j,...`; the empty set formats as an empty string.
    pub fn to_literal(&self) -> String {
        self.pairs()
            .map(|(i, j)| format!("{i}-{j}"))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Free-function form of [`InversionSet::transitive_closure`].
pub fn transitive_closure(set: &InversionSet) -> InversionSet {
    set.transitive_closure()
}

impl Ord for InversionSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n().cmp(&other.n()).then_with(|| {
            for (a, b) in self.rows.iter().zip(&other.rows) {
                let diff = a.bits() ^ b.bits();
                if diff != 0 {
                    // lowest differing j decides; whoever holds it is larger
                    let low = diff & diff.wrapping_neg();
                    return if a.bits() & low != 0 {
                        Ordering::Greater
                    } else {
                        Ordering::Less
                    };
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for InversionSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for InversionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set()
            .entries(self.pairs().map(|(i, j)| format!("({i},{j})")))
            .finish()
    }
}

impl fmt::Display for InversionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(n: usize, pairs: &[(usize, usize)]) -> InversionSet {
        InversionSet::from_pairs(n, pairs.iter().copied()).unwrap()
    }

    /// Floyd-Warshall on a dense boolean matrix.
    #[allow(clippy::needless_range_loop)]
    fn warshall(n: usize, pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
        let mut m = vec![vec![false; n + 1]; n + 1];
        for &(i, j) in pairs {
            m[i][j] = true;
        }
        for k in 1..=n {
            for i in 1..=n {
                for j in 1..=n {
                    if m[i][k] && m[k][j] {
                        m[i][j] = true;
                    }
                }
            }
        }
        let mut out = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                if m[i][j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    #[test]
    fn closure_examples() {
        assert_eq!(
            set(3, &[(1, 2), (2, 3)]).transitive_closure(),
            set(3, &[(1, 2), (1, 3), (2, 3)])
        );
        assert!(InversionSet::empty(4).transitive_closure().is_empty());
        let input = [(1, 2), (2, 4), (3, 4)];
        let expected = warshall(4, &input);
        assert_eq!(expected, vec![(1, 2), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(set(4, &input).transitive_closure(), set(4, &expected));
    }

    #[test]
    fn rejects_out_of_range_pairs() {
        assert!(InversionSet::from_pairs(3, [(2, 2)]).is_err());
        assert!(InversionSet::from_pairs(3, [(3, 1)]).is_err());
        assert!(InversionSet::from_pairs(3, [(1, 4)]).is_err());
        assert!(InversionSet::from_pairs(3, [(0, 2)]).is_err());
    }

    #[test]
    fn canonical_order_bounds() {
        let n = 4;
        let empty = InversionSet::empty(n);
        let full = InversionSet::full(n);
        let mid = set(n, &[(2, 4)]);
        assert!(empty < mid && mid < full);
        // (1,2) present beats anything that lacks it
        assert!(set(n, &[(1, 2)]) > set(n, &[(1, 3), (1, 4), (2, 3)]));
    }

    #[test]
    fn components_and_vector() {
        let b = set(5, &[(1, 2), (1, 3), (3, 4), (3, 5)]);
        assert_eq!(b.components(), vec![vec![2, 3], vec![], vec![4, 5], vec![]]);
        assert_eq!(b.vector(), vec![2, 0, 2, 0]);
        assert_eq!(b.column(4).to_vec(), vec![3]);
        assert_eq!(b.to_literal(), "1-2,1-3,3-4,3-5");
        assert_eq!(b.complement().len(), 10 - 4);
    }

    fn arb_pairs(n: usize) -> impl Strategy<Value = Vec<(usize, usize)>> {
        let all: Vec<(usize, usize)> = (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .collect();
        proptest::sample::subsequence(all.clone(), 0..=all.len())
    }

    proptest! {
        #[test]
        fn closure_matches_warshall(pairs in arb_pairs(7)) {
            let closed = set(7, &pairs).transitive_closure();
            prop_assert_eq!(closed.clone(), set(7, &warshall(7, &pairs)));
            prop_assert!(closed.is_transitive());
        }

        #[test]
        fn order_is_consistent_with_pair_vectors(a in arb_pairs(5), b in arb_pairs(5)) {
            let (sa, sb) = (set(5, &a), set(5, &b));
            let key = |s: &InversionSet| {
                (1..=5).flat_map(|i| (i + 1..=5).map(move |j| (i, j)))
                    .map(|(i, j)| s.contains(i, j))
                    .collect::<Vec<bool>>()
            };
            prop_assert_eq!(sa.cmp(&sb), key(&sa).cmp(&key(&sb)));
        }
    }
}
