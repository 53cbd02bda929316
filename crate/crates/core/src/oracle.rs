//! Brute-force references for the lattice and vector results.
//!
//! Nothing here reuses the cover or validity code of [`crate::lattice`]:
//! every oracle works from definitions (subset filtering, exhaustive bound
//! search, direct generation of permutations and binary trees) so that
//! agreement with the fast paths carries evidential weight.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use crate::decoration::{Decoration, Kind};
use crate::error::{Error, Result};
use crate::inversion::InversionSet;
use crate::lattice;
use crate::permutree::{Extreme, Permutree, Slot};

/// Largest `n` for [`enumerate_bruteforce`] (`2^15` candidate subsets).
pub const BRUTEFORCE_MAX_N: usize = 6;
/// Largest `n` for [`specialization_check`].
pub const SPECIALIZATION_MAX_N: usize = 7;

/// First observed disagreement of a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub left: String,
    pub right: String,
    pub expected: String,
    pub got: String,
}

/// Result of one oracle comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub decoration: String,
    pub n: usize,
    pub property: String,
    pub passed: bool,
    /// Present whenever `passed` is false.
    pub counterexample: Option<Counterexample>,
}

impl OracleReport {
    pub fn pass(decoration: &Decoration, property: &str) -> OracleReport {
        OracleReport::named(decoration.word(), decoration.len(), property)
    }

    fn named(decoration: String, n: usize, property: &str) -> OracleReport {
        OracleReport {
            decoration,
            n,
            property: property.to_string(),
            passed: true,
            counterexample: None,
        }
    }

    /// Marks the report failed, keeping only the first counterexample.
    pub fn fail(&mut self, left: impl ToString, right: impl ToString, expected: impl ToString, got: impl ToString) {
        self.passed = false;
        if self.counterexample.is_none() {
            self.counterexample = Some(Counterexample {
                left: left.to_string(),
                right: right.to_string(),
                expected: expected.to_string(),
                got: got.to_string(),
            });
        }
    }

    pub(crate) fn fail_once(
        &mut self,
        left: &InversionSet,
        right: &InversionSet,
        expected: Option<&InversionSet>,
        got: &InversionSet,
    ) {
        let expected = expected.map_or_else(|| "none".to_string(), |e| format!("{{{e}}}"));
        self.fail(format!("{{{left}}}"), format!("{{{right}}}"), expected, format!("{{{got}}}"));
    }

    fn check(&mut self, ok: bool, left: impl ToString, expected: impl ToString, got: impl ToString) {
        if !ok {
            self.fail(left, "", expected, got);
        }
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {} [{}]",
            if self.passed { "PASS" } else { "FAIL" },
            self.property,
            self.decoration
        )?;
        if let Some(c) = &self.counterexample {
            write!(
                f,
                ": left={} right={} expected={} got={}",
                c.left, c.right, c.expected, c.got
            )?;
        }
        Ok(())
    }
}

/// The four inversion-set conditions, checked triple by triple on an
/// explicit pair set.
pub fn is_valid_by_definition(pairs: &BTreeSet<(usize, usize)>, decoration: &Decoration) -> bool {
    let n = decoration.len();
    let has = |i: usize, j: usize| pairs.contains(&(i, j));
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                let (ij, jk, ik) = (has(i, j), has(j, k), has(i, k));
                if ij && jk && !ik {
                    return false;
                }
                if !ij && !jk && ik {
                    return false;
                }
                let kind = decoration.kind(j);
                if matches!(kind, Kind::Down | Kind::UpDown) && !ij && jk && ik {
                    return false;
                }
                if matches!(kind, Kind::Up | Kind::UpDown) && ij && !jk && ik {
                    return false;
                }
            }
        }
    }
    true
}

/// Every subset of the upper triangle that satisfies the four conditions,
/// in canonical order.
pub fn enumerate_bruteforce(decoration: &Decoration) -> Result<Vec<InversionSet>> {
    let n = decoration.len();
    if n > BRUTEFORCE_MAX_N {
        return Err(Error::BoundExceeded {
            n,
            max: BRUTEFORCE_MAX_N,
        });
    }
    let triangle: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << triangle.len()) {
        let pairs: BTreeSet<(usize, usize)> = triangle
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask >> bit & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        if is_valid_by_definition(&pairs, decoration) {
            out.push(InversionSet::from_pairs(n, pairs)?);
        }
    }
    out.sort();
    Ok(out)
}

/// Cover relation of inclusion on `nodes`, as index pairs `(lower, upper)`.
pub fn hasse_diagram(nodes: &[InversionSet]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (a, x) in nodes.iter().enumerate() {
        for (b, y) in nodes.iter().enumerate() {
            if a == b || !x.is_subset(y) {
                continue;
            }
            let between = nodes
                .iter()
                .any(|z| z != x && z != y && x.is_subset(z) && z.is_subset(y));
            if !between {
                out.push((a, b));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Greatest common lower bound and least common upper bound of `a` and `b`
/// among `nodes` under inclusion, when they exist.
pub fn poset_glb_lub(
    nodes: &[InversionSet],
    a: &InversionSet,
    b: &InversionSet,
) -> (Option<InversionSet>, Option<InversionSet>) {
    let lower: Vec<&InversionSet> = nodes
        .iter()
        .filter(|x| x.is_subset(a) && x.is_subset(b))
        .collect();
    let upper: Vec<&InversionSet> = nodes
        .iter()
        .filter(|x| a.is_subset(x) && b.is_subset(x))
        .collect();
    let glb = lower
        .iter()
        .find(|x| lower.iter().all(|y| y.is_subset(x)))
        .map(|x| (*x).clone());
    let lub = upper
        .iter()
        .find(|x| upper.iter().all(|y| x.is_subset(y)))
        .map(|x| (*x).clone());
    (glb, lub)
}

/// Every permutree reachable from the minimal chain by rotations, found by
/// breadth-first search over trees themselves.
pub fn enumerate_trees_by_rotation(decoration: &Decoration) -> Vec<Permutree> {
    let start = Permutree::extreme(decoration, Extreme::Min);
    let mut seen: HashSet<Permutree> = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(t) = queue.pop_front() {
        for (i, j) in t.up_edges() {
            let next = t.rotate(i, j).expect("up edge rotates");
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<Permutree> = seen.into_iter().collect();
    out.sort_by_cached_key(|t| t.inversion_set());
    out
}

/// Inversion sets of all permutations of `[n]`: `(i, j)` with `i < j` and
/// `j` placed before `i`.
pub fn permutation_inversion_sets(n: usize) -> Vec<InversionSet> {
    fn extend(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 1..=n {
            if !prefix.contains(&v) {
                prefix.push(v);
                extend(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut perms = Vec::new();
    extend(&mut Vec::new(), n, &mut perms);
    let mut out: Vec<InversionSet> = perms
        .iter()
        .map(|p| {
            let mut pairs = Vec::new();
            for (x, &later) in p.iter().enumerate() {
                for &earlier in &p[..x] {
                    if earlier > later {
                        pairs.push((later, earlier));
                    }
                }
            }
            InversionSet::from_pairs(n, pairs).expect("pairs within range")
        })
        .collect();
    out.sort();
    out
}

/// Bracket sets `{(i, j) : j in the right subtree of i}` of all inorder
/// labelled binary trees on `[n]`.
pub fn binary_tree_bracket_sets(n: usize) -> Vec<InversionSet> {
    // each tree on [lo, hi] as a list of (i, j) pairs
    fn trees(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
        if lo > hi {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for root in lo..=hi {
            for left in trees(lo, root - 1) {
                for right in trees(root + 1, hi) {
                    let mut pairs = left.clone();
                    pairs.extend(right.iter().copied());
                    pairs.extend((root + 1..=hi).map(|j| (root, j)));
                    out.push(pairs);
                }
            }
        }
        out
    }
    let mut out: Vec<InversionSet> = trees(1, n)
        .into_iter()
        .map(|p| InversionSet::from_pairs(n, p).expect("pairs within range"))
        .collect();
    out.sort();
    out
}

/// The bracket-set characterization: each component is empty or an
/// interval starting at `i + 1`, and `j in B_i` implies `B_j ⊆ B_i`.
pub fn satisfies_bracket_characterization(set: &InversionSet) -> bool {
    let n = set.n();
    (1..=n).all(|i| {
        let row = set.row(i);
        let interval = match row.max() {
            None => true,
            Some(top) => row.to_vec() == (i + 1..=top).collect::<Vec<_>>(),
        };
        interval && row.iter().all(|j| set.row(j).is_subset(row))
    })
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn catalan(n: usize) -> u128 {
    let n = n as u128;
    (1..=n).fold(1u128, |acc, k| acc * (n + k) / k) / (n + 1)
}

/// Decoration families whose lattices are classical.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `none^n`: the weak order.
    Permutation,
    /// `down^n`: the Tamari lattice.
    Tamari,
    /// `updown^n`: the boolean lattice.
    Boolean,
    /// Every interior word over `{up, down}`.
    Cambrian,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Permutation => "PERMUTATION",
            Family::Tamari => "TAMARI",
            Family::Boolean => "BOOLEAN",
            Family::Cambrian => "CAMBRIAN",
        }
    }
}

/// Checks that a classical family specializes as expected.
pub fn specialization_check(family: Family, n: usize) -> Result<OracleReport> {
    if n == 0 || n > SPECIALIZATION_MAX_N {
        return Err(Error::BoundExceeded {
            n,
            max: SPECIALIZATION_MAX_N,
        });
    }
    let property = format!("specialization {}", family.name());
    match family {
        Family::Permutation => {
            let d = Decoration::uniform(Kind::None, n)?;
            let mut report = OracleReport::pass(&d, &property);
            let l = lattice::enumerate(&d)?;
            report.check(l.len() as u128 == factorial(n), "node count", factorial(n), l.len());
            let edges = factorial(n) * (n as u128).saturating_sub(1) / 2;
            report.check(l.covers().len() as u128 == edges, "cover count", edges, l.covers().len());
            report.check(
                l.nodes() == permutation_inversion_sets(n).as_slice(),
                "nodes",
                "permutation inversion sets",
                "different family",
            );
            check_cubic_equals_inversion(&l, &mut report);
            Ok(report)
        }
        Family::Tamari => {
            let d = Decoration::uniform(Kind::Down, n)?;
            let mut report = OracleReport::pass(&d, &property);
            let l = lattice::enumerate(&d)?;
            report.check(l.len() as u128 == catalan(n), "node count", catalan(n), l.len());
            report.check(
                l.nodes() == binary_tree_bracket_sets(n).as_slice(),
                "nodes",
                "binary tree bracket sets",
                "different family",
            );
            for node in l.nodes() {
                report.check(
                    satisfies_bracket_characterization(node),
                    format!("{{{node}}}"),
                    "bracket characterization",
                    "violated",
                );
            }
            for a in l.nodes() {
                for b in l.nodes() {
                    let componentwise = a.intersection(b);
                    let formula = lattice::meet(a, b, &d)?;
                    if formula != componentwise {
                        report.fail(format!("{{{a}}}"), format!("{{{b}}}"), format!("{{{componentwise}}}"), format!("{{{formula}}}"));
                    }
                }
            }
            check_cubic_equals_inversion(&l, &mut report);
            for tree in l.trees() {
                let leaf_product: Vec<i64> = (1..=n)
                    .map(|i| {
                        let size = |s| tree.subtree(i, s).map(|c| c.len() as i64);
                        let (left, right) = if d.kind(i).two_children() {
                            (size(Slot::LeftDescendant), size(Slot::RightDescendant))
                        } else {
                            // endpoints: vertex 1 only has a right subtree, n only a left one
                            let sole = size(Slot::Descendant);
                            if i == 1 { (Ok(0), sole) } else { (sole, Ok(0)) }
                        };
                        (left.unwrap_or(0) + 1) * (right.unwrap_or(0) + 1)
                    })
                    .collect();
                let a = tree.vertex_coordinates();
                report.check(a == leaf_product, tree, format!("{leaf_product:?}"), format!("{a:?}"));
            }
            Ok(report)
        }
        Family::Boolean => {
            let d = Decoration::uniform(Kind::UpDown, n)?;
            let mut report = OracleReport::pass(&d, &property);
            let l = lattice::enumerate(&d)?;
            let expected = 1u128 << (n - 1);
            report.check(l.len() as u128 == expected, "node count", expected, l.len());
            let words: Vec<String> = l
                .trees()
                .iter()
                .map(|t| t.to_binary_sequence())
                .collect::<Result<_>>()?;
            let distinct: BTreeSet<&String> = words.iter().collect();
            report.check(distinct.len() == words.len(), "binary words", "distinct", "repeated");
            let below = |x: &str, y: &str| x.chars().zip(y.chars()).all(|(a, b)| a <= b);
            for (a, x) in l.nodes().iter().enumerate() {
                for (b, y) in l.nodes().iter().enumerate() {
                    let ordered = x.is_subset(y);
                    let bitwise = below(&words[a], &words[b]);
                    if ordered != bitwise {
                        report.fail(&words[a], &words[b], ordered, bitwise);
                    }
                }
            }
            Ok(report)
        }
        Family::Cambrian => {
            let label = format!("n[ud]^{}n", n.saturating_sub(2));
            let mut report = OracleReport::named(label, n, &property);
            let mut decorations: Vec<Decoration> = Decoration::all(n)
                .into_iter()
                .filter(|d| d.interior().iter().all(|k| matches!(k, Kind::Up | Kind::Down)))
                .collect();
            decorations.dedup();
            for d in decorations {
                let l = lattice::enumerate(&d)?;
                report.check(l.len() as u128 == catalan(n), d.word(), catalan(n), l.len());
            }
            Ok(report)
        }
    }
}

fn check_cubic_equals_inversion(l: &lattice::Lattice, report: &mut OracleReport) {
    for tree in l.trees() {
        let (b, c) = (tree.inversion_vector(), tree.cubic_data().vector());
        report.check(b == c, tree, format!("{b:?}"), format!("{c:?}"));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn deco(w: &str) -> Decoration {
        Decoration::parse(w).unwrap()
    }

    fn set(n: usize, pairs: &[(usize, usize)]) -> InversionSet {
        InversionSet::from_pairs(n, pairs.iter().copied()).unwrap()
    }

    #[test]
    fn bruteforce_counts() {
        assert_eq!(enumerate_bruteforce(&deco("nnn")).unwrap().len(), 6);
        assert_eq!(enumerate_bruteforce(&deco("ndn")).unwrap().len(), 5);
        assert_eq!(enumerate_bruteforce(&deco("nbn")).unwrap().len(), 4);
        assert!(enumerate_bruteforce(&deco("nnnnnnn")).is_err());
        assert_eq!(
            enumerate_bruteforce(&deco("nnn")).unwrap(),
            permutation_inversion_sets(3)
        );
    }

    #[test]
    fn bounds_in_the_poset() {
        let d = deco("nbun");
        let nodes = enumerate_bruteforce(&d).unwrap();
        let e = set(4, &[(2, 4), (3, 4)]);
        let empty = InversionSet::empty(4);
        assert_eq!(
            poset_glb_lub(&nodes, &empty, &e),
            (Some(empty.clone()), Some(e.clone()))
        );
        let tr = set(4, &[(1, 2), (3, 4)]);
        assert_eq!(
            poset_glb_lub(&nodes, &e, &tr),
            (
                Some(set(4, &[(3, 4)])),
                Some(set(4, &[(1, 2), (1, 4), (2, 4), (3, 4)]))
            )
        );

        let d = deco("ubndd");
        let nodes = enumerate_bruteforce(&d).unwrap();
        let t = set(5, &[(2, 3), (2, 4), (2, 5), (3, 4)]);
        let t2 = set(5, &[(1, 2), (1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]);
        assert_eq!(poset_glb_lub(&nodes, &t, &t2).0, Some(set(5, &[(2, 4), (3, 4)])));
    }

    #[test]
    fn missing_bounds_are_reported_as_absent() {
        // two incomparable maximal elements: no common upper bound
        let nodes = vec![set(3, &[(1, 2)]), set(3, &[(2, 3)])];
        assert_eq!(poset_glb_lub(&nodes, &nodes[0], &nodes[1]), (None, None));
    }

    #[test]
    fn hasse_of_a_chain() {
        let nodes = vec![
            InversionSet::empty(3),
            set(3, &[(1, 2)]),
            set(3, &[(1, 2), (1, 3)]),
        ];
        assert_eq!(hasse_diagram(&nodes), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn classical_generators() {
        assert_eq!(permutation_inversion_sets(4).len(), 24);
        assert_eq!(binary_tree_bracket_sets(5).len(), 42);
        assert!(binary_tree_bracket_sets(5)
            .iter()
            .all(satisfies_bracket_characterization));
        assert!(!satisfies_bracket_characterization(&set(3, &[(1, 3)])));
        assert_eq!(factorial(5), 120);
        assert_eq!(catalan(6), 132);
        assert_eq!(catalan(1), 1);
    }

    #[test]
    fn tamari_meet_example() {
        let b1 = InversionSet::from_components(5, &[vec![2, 3, 4, 5], vec![], vec![], vec![5]]).unwrap();
        let b2 = InversionSet::from_components(5, &[vec![], vec![], vec![4, 5], vec![5]]).unwrap();
        let d = Decoration::uniform(Kind::Down, 5).unwrap();
        let m = lattice::meet(&b1, &b2, &d).unwrap();
        assert_eq!(m.components(), vec![vec![], vec![], vec![], vec![5]]);
    }

    #[test]
    fn specializations_small() {
        for family in [Family::Permutation, Family::Tamari, Family::Boolean, Family::Cambrian] {
            for n in 1..=4 {
                let r = specialization_check(family, n).unwrap();
                assert!(r.passed, "{r}");
            }
        }
        assert!(specialization_check(Family::Tamari, 8).is_err());
    }

    #[test]
    fn reports_keep_the_first_counterexample() {
        let mut r = OracleReport::pass(&deco("nn"), "demo");
        r.fail("a", "b", "x", "y");
        r.fail("c", "d", "z", "w");
        assert!(!r.passed);
        assert_eq!(r.counterexample.as_ref().unwrap().left, "a");
        assert!(r.to_string().starts_with("FAIL demo [nn]"));
    }
}
