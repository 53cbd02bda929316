//! The rotation lattice of δ-permutrees, handled through inversion sets.
//!
//! A permutree is identified with its inversion set; the rotation order is
//! inclusion of inversion sets. Trees are rebuilt on demand by rotating up
//! from the minimal chain.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use crate::decoration::{Decoration, Kind};
use crate::error::{Error, Result};
use crate::inversion::InversionSet;
use crate::oracle::{self, OracleReport};
use crate::permutree::{Extreme, Permutree};
use crate::vertex_set::VertexSet;

/// Default largest `n` accepted by [`enumerate`].
pub const DEFAULT_MAX_N: usize = 10;

/// The four conditions characterizing inversion sets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    Transitive,
    Cotransitive,
    /// `δ_j ∈ {down, updown}`: `(i,j) ∉ E` and `(j,k) ∈ E` forbid `(i,k)`.
    Down,
    /// `δ_j ∈ {up, updown}`: `(i,j) ∈ E` and `(j,k) ∉ E` forbid `(i,k)`.
    Up,
}

/// The first triple `i < j < k` at which a condition fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConditionViolation {
    pub condition: Condition,
    pub triple: (usize, usize, usize),
}

impl fmt::Display for ConditionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, k) = self.triple;
        let name = match self.condition {
            Condition::Transitive => "transitivity",
            Condition::Cotransitive => "cotransitivity",
            Condition::Down => "down condition",
            Condition::Up => "up condition",
        };
        write!(f, "{name} fails at ({i},{j},{k})")
    }
}

fn check_size(set: &InversionSet, decoration: &Decoration) -> Result<()> {
    if set.n() != decoration.len() {
        Err(Error::SizeMismatch(set.n(), decoration.len()))
    } else {
        Ok(())
    }
}

/// Returns the first violated condition, or `None` when `set` is the
/// inversion set of some δ-permutree.
pub fn first_violation(
    set: &InversionSet,
    decoration: &Decoration,
) -> Result<Option<ConditionViolation>> {
    check_size(set, decoration)?;
    let n = set.n();
    for i in 1..=n {
        let row_i = set.row(i);
        for j in i + 1..=n {
            let row_j = set.row(j);
            let above_j = row_i.intersection(VertexSet::range(j + 1, n));
            let kind = decoration.kind(j);
            let mut found: Option<(usize, Condition)> = None;
            let mut consider = |bad: VertexSet, cond: Condition| {
                if let Some(k) = bad.min() {
                    if found.is_none_or(|(fk, fc)| (k, cond) < (fk, fc)) {
                        found = Some((k, cond));
                    }
                }
            };
            if row_i.contains(j) {
                consider(row_j.difference(row_i), Condition::Transitive);
                if matches!(kind, Kind::Up | Kind::UpDown) {
                    consider(above_j.difference(row_j), Condition::Up);
                }
            } else {
                consider(above_j.difference(row_j), Condition::Cotransitive);
                if matches!(kind, Kind::Down | Kind::UpDown) {
                    consider(above_j.intersection(row_j), Condition::Down);
                }
            }
            if let Some((k, condition)) = found {
                return Ok(Some(ConditionViolation {
                    condition,
                    triple: (i, j, k),
                }));
            }
        }
    }
    Ok(None)
}

pub fn is_valid_inversion_set(set: &InversionSet, decoration: &Decoration) -> Result<bool> {
    first_violation(set, decoration).map(|v| v.is_none())
}

fn require_valid(set: &InversionSet, decoration: &Decoration) -> Result<()> {
    match first_violation(set, decoration)? {
        None => Ok(()),
        Some(v) => Err(Error::InvalidInversionSet(format!("{{{set}}}: {v}"))),
    }
}

/// Rotation order: `left <= right` iff `left ⊆ right`.
pub fn leq(left: &InversionSet, right: &InversionSet) -> Result<bool> {
    if left.n() != right.n() {
        return Err(Error::SizeMismatch(left.n(), right.n()));
    }
    Ok(left.is_subset(right))
}

/// The pairs `(i, j)` such that every `l` strictly between has `(i, l)` or
/// `(l, j)` in `common`.
pub fn meet_constraint(common: &InversionSet) -> InversionSet {
    let n = common.n();
    let columns: Vec<VertexSet> = (1..=n).map(|j| common.column(j)).collect();
    let mut out = InversionSet::empty(n);
    for i in 1..=n {
        let row = common.row(i);
        let kept: VertexSet = VertexSet::range(i + 1, n)
            .iter()
            .filter(|&j| VertexSet::range(i + 1, j - 1).is_subset(row.union(columns[j - 1])))
            .collect();
        out.set_row(i, kept);
    }
    out
}

/// One pass of the meet filter: `set ∩ meet_constraint(set)`.
pub fn meet_filter(set: &InversionSet) -> InversionSet {
    set.intersection(&meet_constraint(set))
}

/// Component-by-component rendering `B_i ∩ B'_i ∩ I_i = M_i` of a meet,
/// for `i` in `1..n`, where `I` is [`meet_constraint`] of `B ∩ B'`.
pub fn meet_components(left: &InversionSet, right: &InversionSet, decoration: &Decoration) -> Result<Vec<String>> {
    let result = meet(left, right, decoration)?;
    let constraint = meet_constraint(&left.intersection(right));
    let show = |s: VertexSet| {
        if s.is_empty() {
            "∅".to_string()
        } else {
            let items: Vec<String> = s.iter().map(|v| v.to_string()).collect();
            format!("{{{}}}", items.join(","))
        }
    };
    Ok((1..left.n())
        .map(|i| {
            format!(
                "{}∩{}∩{}={}",
                show(left.row(i)),
                show(right.row(i)),
                show(constraint.row(i)),
                show(result.row(i))
            )
        })
        .collect())
}

/// Meet on already validated sets: the filter applied to `left ∩ right`
/// until nothing more is removed.
///
/// A single pass can leave a set that is not cotransitive once three or
/// more vertices without a down or up decoration sit between `i` and `j`.
/// Every valid lower bound survives each pass, and the fixpoint is valid,
/// so the fixpoint is the greatest lower bound.
pub(crate) fn meet_sets(left: &InversionSet, right: &InversionSet) -> InversionSet {
    let mut current = left.intersection(right);
    loop {
        let next = meet_filter(&current);
        if next == current {
            return current;
        }
        current = next;
    }
}

/// Greatest lower bound, by iterating [`meet_filter`] from `left ∩ right`.
pub fn meet(left: &InversionSet, right: &InversionSet, decoration: &Decoration) -> Result<InversionSet> {
    require_valid(left, decoration)?;
    require_valid(right, decoration)?;
    Ok(meet_sets(left, right))
}

/// Least upper bound, found by descending from the maximal permutree
/// through down-rotations that keep both arguments below.
///
/// In a finite lattice every element strictly above the join has a lower
/// cover that is still above it, so the descent stops exactly at the join.
pub fn join(left: &InversionSet, right: &InversionSet, decoration: &Decoration) -> Result<InversionSet> {
    require_valid(left, decoration)?;
    require_valid(right, decoration)?;
    if left.is_subset(right) {
        return Ok(right.clone());
    }
    if right.is_subset(left) {
        return Ok(left.clone());
    }
    let target = left.union(right);
    let mut tree = Permutree::extreme(decoration, Extreme::Max);
    let mut current = InversionSet::full(decoration.len());
    'descend: loop {
        for (i, j) in tree.down_edges() {
            let lower = tree.rotate_down(i, j)?;
            let set = lower.inversion_set();
            if target.is_subset(&set) {
                tree = lower;
                current = set;
                continue 'descend;
            }
        }
        return Ok(current);
    }
}

/// `tc(set ∪ {(i, j)})` for a transitive `set`.
fn close_with(set: &InversionSet, i: usize, j: usize) -> InversionSet {
    let mut out = set.clone();
    let gain = set.row(j).union(VertexSet::singleton(j));
    for a in set.column(i).iter().chain(std::iter::once(i)) {
        out.set_row(a, out.row(a).union(gain));
    }
    out
}

fn covers_of(set: &InversionSet, decoration: &Decoration) -> Vec<((usize, usize), InversionSet)> {
    let mut candidates: Vec<((usize, usize), InversionSet)> = Vec::new();
    for (i, j) in set.absent_pairs() {
        let grown = close_with(set, i, j);
        if candidates.iter().any(|(_, c)| *c == grown) {
            continue;
        }
        if matches!(first_violation(&grown, decoration), Ok(None)) {
            candidates.push(((i, j), grown));
        }
    }
    let mut out: Vec<((usize, usize), InversionSet)> = candidates
        .iter()
        .filter(|(_, c)| {
            !candidates
                .iter()
                .any(|(_, other)| other != c && other.is_subset(c))
        })
        .cloned()
        .collect();
    out.sort_by(|a, b| a.1.cmp(&b.1));
    out
}

/// Upper covers of `set`, each tagged with the pair whose closure produces
/// it, sorted in canonical node order.
pub fn covers(set: &InversionSet, decoration: &Decoration) -> Result<Vec<((usize, usize), InversionSet)>> {
    require_valid(set, decoration)?;
    Ok(covers_of(set, decoration))
}

/// Rebuilds the unique permutree with the given inversion set by rotating up
/// from the minimal chain.
pub fn tree_from_inversion_set(set: &InversionSet, decoration: &Decoration) -> Result<Permutree> {
    require_valid(set, decoration)?;
    let mut tree = Permutree::extreme(decoration, Extreme::Min);
    let mut current = InversionSet::empty(decoration.len());
    while current != *set {
        let step = tree
            .up_edges()
            .into_iter()
            .find(|&(i, j)| close_with(&current, i, j).is_subset(set));
        let Some((i, j)) = step else {
            return Err(Error::Internal(format!(
                "rotation ascent stuck at {{{current}}} below {{{set}}}"
            )));
        };
        tree = tree.rotate(i, j)?;
        let next = tree.inversion_set();
        if next != close_with(&current, i, j) {
            return Err(Error::Internal(format!(
                "rotating {i}->{j} did not close {{{current}}} as expected"
            )));
        }
        current = next;
    }
    Ok(tree)
}

/// A cover relation `source ⋖ target` between lattice nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cover {
    pub source: usize,
    pub target: usize,
    /// The rotated edge `i -> j`.
    pub pair: (usize, usize),
}

/// All δ-permutrees, identified by inversion sets, with their Hasse diagram.
#[derive(Debug)]
pub struct Lattice {
    decoration: Decoration,
    nodes: Vec<InversionSet>,
    covers: Vec<Cover>,
    index: HashMap<InversionSet, usize>,
    lower: Vec<Vec<usize>>,
    trees: OnceLock<Vec<Permutree>>,
}

impl Lattice {
    fn assemble(decoration: Decoration, nodes: Vec<InversionSet>, mut covers: Vec<Cover>) -> Lattice {
        covers.sort_unstable();
        let index = nodes
            .iter()
            .enumerate()
            .map(|(id, s)| (s.clone(), id))
            .collect();
        let mut lower = vec![Vec::new(); nodes.len()];
        for c in &covers {
            lower[c.target].push(c.source);
        }
        Lattice {
            decoration,
            nodes,
            covers,
            index,
            lower,
            trees: OnceLock::new(),
        }
    }

    /// Rebuilds a lattice from serialized parts, checking that the nodes are
    /// valid, distinct and canonically ordered and that the covers are
    /// exactly the ones [`covers`] produces.
    pub fn from_parts(decoration: Decoration, nodes: Vec<InversionSet>, covers: Vec<Cover>) -> Result<Lattice> {
        for w in nodes.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidInversionSet(
                    "nodes are not in canonical order".to_string(),
                ));
            }
        }
        for node in &nodes {
            check_size(node, &decoration)?;
            require_valid(node, &decoration)?;
        }
        // every valid set is reachable from the empty one, so a node list
        // starting at it and closed under covers is complete
        if nodes.first().is_none_or(|first| !first.is_empty()) {
            return Err(Error::InvalidInversionSet(
                "node list does not start with the empty set".to_string(),
            ));
        }
        if let Some(c) = covers.iter().find(|c| c.source >= nodes.len() || c.target >= nodes.len()) {
            return Err(Error::InvalidInversionSet(format!(
                "cover {} -> {} refers to a missing node",
                c.source, c.target
            )));
        }
        let lattice = Lattice::assemble(decoration, nodes, covers);
        let rebuilt = lattice.cover_list_from_sets()?;
        if rebuilt != lattice.covers {
            return Err(Error::InvalidInversionSet(
                "cover list does not match the nodes".to_string(),
            ));
        }
        Ok(lattice)
    }

    fn cover_list_from_sets(&self) -> Result<Vec<Cover>> {
        let mut out = Vec::new();
        for (source, node) in self.nodes.iter().enumerate() {
            for (pair, up) in covers_of(node, &self.decoration) {
                let target = *self.index.get(&up).ok_or_else(|| {
                    Error::InvalidInversionSet(format!("cover {{{up}}} missing from nodes"))
                })?;
                out.push(Cover {
                    source,
                    target,
                    pair,
                });
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    pub fn decoration(&self) -> &Decoration {
        &self.decoration
    }

    pub fn n(&self) -> usize {
        self.decoration.len()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[InversionSet] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> &InversionSet {
        &self.nodes[id]
    }

    pub fn covers(&self) -> &[Cover] {
        &self.covers
    }

    pub fn index_of(&self, set: &InversionSet) -> Option<usize> {
        self.index.get(set).copied()
    }

    /// Lower covers of node `id`.
    pub fn lower_covers(&self, id: usize) -> &[usize] {
        &self.lower[id]
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.nodes.len() - 1
    }

    /// One permutree per node, built by rotating along the cover relation.
    ///
    /// # Panics
    ///
    /// Panics if a labeled cover is not a rotation of its source tree, which
    /// would contradict the correspondence between covers and rotations.
    pub fn trees(&self) -> &[Permutree] {
        self.trees.get_or_init(|| {
            let mut trees: Vec<Option<Permutree>> = vec![None; self.nodes.len()];
            trees[0] = Some(Permutree::extreme(&self.decoration, Extreme::Min));
            let mut order: Vec<usize> = (0..self.nodes.len()).collect();
            order.sort_by_key(|&id| (self.nodes[id].len(), id));
            let mut incoming: Vec<Option<Cover>> = vec![None; self.nodes.len()];
            for c in &self.covers {
                incoming[c.target].get_or_insert(*c);
            }
            for id in order.into_iter().skip(1) {
                let c = incoming[id].expect("every non-bottom node has a lower cover");
                let src = trees[c.source].as_ref().expect("sources are smaller");
                let tree = src
                    .rotate(c.pair.0, c.pair.1)
                    .unwrap_or_else(|e| panic!("cover {c:?} is not a rotation: {e}"));
                assert_eq!(tree.inversion_set(), self.nodes[id], "cover {c:?}");
                trees[id] = Some(tree);
            }
            trees.into_iter().map(|t| t.expect("all built")).collect()
        })
    }

    /// Meet of two nodes by the closed formula.
    pub fn meet(&self, a: usize, b: usize) -> usize {
        let m = meet_sets(&self.nodes[a], &self.nodes[b]);
        self.index_of(&m).expect("meet of valid sets is valid")
    }

    /// Join of two nodes: descend from the top through lower covers that
    /// stay above both arguments.
    pub fn join(&self, a: usize, b: usize) -> usize {
        let target = self.nodes[a].union(&self.nodes[b]);
        let mut current = self.top();
        while let Some(&next) = self.lower[current]
            .iter()
            .find(|&&l| target.is_subset(&self.nodes[l]))
        {
            current = next;
        }
        current
    }
}

/// Upper bound on the number of nodes: exact for the permutation, Tamari,
/// Cambrian and boolean families, `n!` otherwise.
pub fn predicted_node_bound(decoration: &Decoration) -> u128 {
    let n = decoration.len() as u128;
    let interior = decoration.interior();
    if interior.iter().all(|&k| k == Kind::UpDown) {
        1u128 << (n - 1)
    } else if interior.iter().all(|&k| matches!(k, Kind::Up | Kind::Down)) {
        (1..=n).fold(1u128, |acc, k| acc * (n + k) / k) / (n + 1)
    } else {
        (1..=n).product()
    }
}

/// [`enumerate_with_bound`] with [`DEFAULT_MAX_N`].
pub fn enumerate(decoration: &Decoration) -> Result<Lattice> {
    enumerate_with_bound(decoration, DEFAULT_MAX_N)
}

/// Breadth-first closure of the cover relation from the empty set.
pub fn enumerate_with_bound(decoration: &Decoration, max_n: usize) -> Result<Lattice> {
    let n = decoration.len();
    if n > max_n {
        return Err(Error::BoundExceeded { n, max: max_n });
    }
    let bottom = InversionSet::empty(n);
    let mut seen: HashMap<InversionSet, ()> = HashMap::from([(bottom.clone(), ())]);
    let mut queue = VecDeque::from([bottom]);
    let mut raw: Vec<(InversionSet, InversionSet, (usize, usize))> = Vec::new();
    while let Some(set) = queue.pop_front() {
        for (pair, up) in covers_of(&set, decoration) {
            if seen.insert(up.clone(), ()).is_none() {
                queue.push_back(up.clone());
            }
            raw.push((set.clone(), up, pair));
        }
    }
    let mut nodes: Vec<InversionSet> = seen.into_keys().collect();
    nodes.sort_unstable();
    let index: HashMap<&InversionSet, usize> =
        nodes.iter().enumerate().map(|(id, s)| (s, id)).collect();
    let covers = raw
        .iter()
        .map(|(s, t, pair)| Cover {
            source: index[s],
            target: index[t],
            pair: *pair,
        })
        .collect();
    Ok(Lattice::assemble(decoration.clone(), nodes, covers))
}

/// Outcome of [`check_lattice`].
#[derive(Clone, Debug)]
pub struct LatticeReport {
    pub decoration: Decoration,
    pub nodes: usize,
    pub covers: usize,
    pub pairs_checked: usize,
    /// One report per checked property, meet then join.
    pub reports: Vec<OracleReport>,
}

impl LatticeReport {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed)
    }
}

/// Compares the meet formula and the search join against the brute-force
/// bounds of the poset, for every ordered pair of nodes.
pub fn check_lattice(decoration: &Decoration) -> Result<LatticeReport> {
    let lattice = enumerate(decoration)?;
    let nodes = lattice.nodes();
    let mut meet_report = OracleReport::pass(decoration, "meet equals poset GLB");
    let mut join_report = OracleReport::pass(decoration, "join equals poset LUB");
    let mut pairs = 0;
    for a in 0..nodes.len() {
        for b in a..nodes.len() {
            pairs += 1;
            let (glb, lub) = oracle::poset_glb_lub(nodes, &nodes[a], &nodes[b]);
            let m = &nodes[lattice.meet(a, b)];
            if glb.as_ref() != Some(m) {
                meet_report.fail_once(&nodes[a], &nodes[b], glb.as_ref(), m);
            }
            let j = &nodes[lattice.join(a, b)];
            if lub.as_ref() != Some(j) {
                join_report.fail_once(&nodes[a], &nodes[b], lub.as_ref(), j);
            }
        }
    }
    Ok(LatticeReport {
        decoration: decoration.clone(),
        nodes: lattice.len(),
        covers: lattice.covers().len(),
        pairs_checked: pairs,
        reports: vec![meet_report, join_report],
    })
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

    fn seven_vertex_example() -> (Decoration, InversionSet) {
        let d = deco("dunbndu");
        let e = set(
            7,
            &[(1, 2), (3, 4), (3, 6), (3, 7), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7)],
        );
        (d, e)
    }

    #[test]
    fn validity_examples() {
        for w in ["nnn", "ndn", "nbn", "nubdn"] {
            let d = deco(w);
            assert!(is_valid_inversion_set(&InversionSet::empty(d.len()), &d).unwrap());
        }
        let (d, e) = seven_vertex_example();
        assert_eq!(first_violation(&e, &d).unwrap(), None);
        let v = first_violation(&set(3, &[(1, 3)]), &deco("nnn"))
            .unwrap()
            .unwrap();
        assert_eq!(v.condition, Condition::Cotransitive);
        assert_eq!(v.triple, (1, 2, 3));
        assert_eq!(
            first_violation(&set(3, &[(1, 2), (2, 3)]), &deco("nnn"))
                .unwrap()
                .unwrap()
                .condition,
            Condition::Transitive
        );
        assert!(is_valid_inversion_set(&InversionSet::empty(4), &deco("nnn")).is_err());
    }

    #[test]
    fn decoration_conditions() {
        // (2,3) with 1 below: down at 2 forbids (1,3) without (1,2)
        let v = first_violation(&set(3, &[(1, 3), (2, 3)]), &deco("ndn"))
            .unwrap()
            .unwrap();
        assert_eq!(v.condition, Condition::Down);
        let v = first_violation(&set(3, &[(1, 2), (1, 3)]), &deco("nun"))
            .unwrap()
            .unwrap();
        assert_eq!(v.condition, Condition::Up);
        // the same sets are fine with no decoration constraint
        assert!(is_valid_inversion_set(&set(3, &[(1, 3), (2, 3)]), &deco("nnn")).unwrap());
        assert!(is_valid_inversion_set(&set(3, &[(1, 2), (1, 3)]), &deco("nnn")).unwrap());
    }

    #[test]
    fn leq_examples() {
        let tl = set(4, &[(2, 4), (3, 4)]);
        let tr = set(4, &[(1, 2), (3, 4)]);
        assert!(leq(&InversionSet::empty(4), &tl).unwrap());
        assert!(leq(&tl, &InversionSet::full(4)).unwrap());
        assert!(!leq(&tl, &tr).unwrap());
        assert!(!leq(&tr, &tl).unwrap());
        assert!(leq(&tl, &InversionSet::empty(3)).is_err());
    }

    #[test]
    fn meet_examples() {
        let d = deco("ubndd");
        let t = set(5, &[(2, 3), (2, 4), (2, 5), (3, 4)]);
        let t2 = set(
            5,
            &[(1, 2), (1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)],
        );
        assert_eq!(meet(&t, &t2, &d).unwrap(), set(5, &[(2, 4), (3, 4)]));
        assert_eq!(meet(&t, &t, &d).unwrap(), t);
        assert!(meet(&t, &InversionSet::empty(5), &d).unwrap().is_empty());
        assert!(meet(&set(5, &[(1, 3)]), &t, &d).is_err());
    }

    #[test]
    fn join_examples() {
        let d = deco("nbun");
        let tl = set(4, &[(2, 4), (3, 4)]);
        let tr = set(4, &[(1, 2), (3, 4)]);
        assert_eq!(join(&InversionSet::empty(4), &tl, &d).unwrap(), tl);
        assert_eq!(
            join(&tl, &tr, &d).unwrap(),
            set(4, &[(1, 2), (1, 4), (2, 4), (3, 4)])
        );
        let full = InversionSet::full(4);
        assert_eq!(join(&tr, &full, &d).unwrap(), full);
    }

    #[test]
    fn cover_examples() {
        let pairs = |w: &str| -> Vec<Vec<(usize, usize)>> {
            let d = deco(w);
            covers(&InversionSet::empty(d.len()), &d)
                .unwrap()
                .into_iter()
                .map(|(_, s)| s.pairs().collect())
                .collect()
        };
        assert_eq!(pairs("nnn"), vec![vec![(2, 3)], vec![(1, 2)]]);
        assert_eq!(pairs("ndn"), vec![vec![(2, 3)], vec![(1, 2)]]);
        let d = deco("nbun");
        assert!(covers(&InversionSet::full(4), &d).unwrap().is_empty());
    }

    #[test]
    fn small_lattices() {
        for (w, nodes, edges) in [("nnn", 6, 6), ("ndn", 5, 5), ("nbn", 4, 4), ("n", 1, 0), ("nn", 2, 1)] {
            let l = enumerate(&deco(w)).unwrap();
            assert_eq!((l.len(), l.covers().len()), (nodes, edges), "{w}");
            assert!(l.node(l.bottom()).is_empty());
            assert_eq!(*l.node(l.top()), InversionSet::full(l.n()));
        }
        assert_eq!(
            enumerate_with_bound(&deco("nnnn"), 3).unwrap_err(),
            Error::BoundExceeded { n: 4, max: 3 }
        );
    }

    #[test]
    fn reconstruction() {
        let d = deco("nbun");
        let min = tree_from_inversion_set(&InversionSet::empty(4), &d).unwrap();
        assert_eq!(min, Permutree::extreme(&d, Extreme::Min));
        let max = tree_from_inversion_set(&InversionSet::full(4), &d).unwrap();
        assert_eq!(max, Permutree::extreme(&d, Extreme::Max));
        let (d, e) = seven_vertex_example();
        let t = tree_from_inversion_set(&e, &d).unwrap();
        assert!(t.validate().is_empty());
        assert_eq!(t.inversion_set(), e);
        assert!(tree_from_inversion_set(&set(3, &[(1, 3)]), &deco("nnn")).is_err());
    }

    #[test]
    fn lattice_checks_pass_on_small_decorations() {
        for w in ["nbn", "ndn", "nnnn", "nbun"] {
            let r = check_lattice(&deco(w)).unwrap();
            assert!(r.passed(), "{w}: {:?}", r.reports);
        }
    }

    #[test]
    fn from_parts_round_trip_and_rejections() {
        let d = deco("nbun");
        let l = enumerate(&d).unwrap();
        let again = Lattice::from_parts(d.clone(), l.nodes().to_vec(), l.covers().to_vec()).unwrap();
        assert_eq!(again.covers(), l.covers());
        let mut shuffled = l.nodes().to_vec();
        shuffled.swap(0, 1);
        assert!(Lattice::from_parts(d.clone(), shuffled, l.covers().to_vec()).is_err());
        assert!(Lattice::from_parts(d.clone(), l.nodes().to_vec(), l.covers()[1..].to_vec()).is_err());
        let top = l.nodes()[l.top()].clone();
        assert!(Lattice::from_parts(d.clone(), vec![top], Vec::new()).is_err());
        let mut dangling = l.covers().to_vec();
        dangling[0].target = 99;
        assert!(Lattice::from_parts(d, l.nodes().to_vec(), dangling).is_err());
    }

    #[test]
    fn predicted_bounds() {
        assert_eq!(predicted_node_bound(&deco("nnnnn")), 120);
        assert_eq!(predicted_node_bound(&deco("nddun")), 42);
        assert_eq!(predicted_node_bound(&deco("nbbbn")), 16);
    }
}
