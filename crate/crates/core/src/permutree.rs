//! Permutrees as explicitly slotted trees.
//!
//! Every vertex `i` carries one or two parent slots and one or two child
//! slots, as dictated by its decoration letter. A slot holds either the label
//! of the adjacent vertex or nothing (a blossom). An edge `i -> j` means `i`
//! is a child of `j`.

use std::collections::VecDeque;
use std::fmt;

use crate::decoration::{Decoration, Kind};
use crate::error::{Error, Result};
use crate::inversion::InversionSet;
use crate::vertex_set::VertexSet;

/// Names of the six possible slots of a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Slot {
    /// Sole parent slot (`A_i`).
    Ancestor,
    LeftAncestor,
    RightAncestor,
    /// Sole child slot (`D_i`).
    Descendant,
    LeftDescendant,
    RightDescendant,
}

impl Slot {
    pub fn name(self) -> &'static str {
        match self {
            Slot::Ancestor => "A",
            Slot::LeftAncestor => "LA",
            Slot::RightAncestor => "RA",
            Slot::Descendant => "D",
            Slot::LeftDescendant => "LD",
            Slot::RightDescendant => "RD",
        }
    }

    fn is_parent_slot(self) -> bool {
        matches!(
            self,
            Slot::Ancestor | Slot::LeftAncestor | Slot::RightAncestor
        )
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One side (parents or children) of a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    One(Option<usize>),
    /// Left slot, right slot.
    Two(Option<usize>, Option<usize>),
}

impl Side {
    fn empty(two: bool) -> Side {
        if two {
            Side::Two(None, None)
        } else {
            Side::One(None)
        }
    }

    pub fn is_two(self) -> bool {
        matches!(self, Side::Two(..))
    }

    pub fn occupants(self) -> impl Iterator<Item = usize> {
        let (a, b) = match self {
            Side::One(a) => (a, None),
            Side::Two(a, b) => (a, b),
        };
        a.into_iter().chain(b)
    }

    fn replace(&mut self, old: usize, new: usize) -> bool {
        let slots: &mut [Option<usize>] = match self {
            Side::One(a) => std::slice::from_mut(a),
            Side::Two(a, b) => {
                if *a == Some(old) {
                    *a = Some(new);
                    return true;
                }
                std::slice::from_mut(b)
            }
        };
        if slots[0] == Some(old) {
            slots[0] = Some(new);
            true
        } else {
            false
        }
    }
}

/// Parent and child slots of one vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub parents: Side,
    pub children: Side,
}

impl Vertex {
    /// A vertex with all slots empty, shaped for `kind`.
    pub fn blossoms(kind: Kind) -> Vertex {
        Vertex {
            parents: Side::empty(kind.two_parents()),
            children: Side::empty(kind.two_children()),
        }
    }

    /// Content of `slot`, or `None` if the slot does not exist on this vertex.
    pub fn get(&self, slot: Slot) -> Option<Option<usize>> {
        match (slot, self.parents, self.children) {
            (Slot::Ancestor, Side::One(a), _) => Some(a),
            (Slot::LeftAncestor, Side::Two(l, _), _) => Some(l),
            (Slot::RightAncestor, Side::Two(_, r), _) => Some(r),
            (Slot::Descendant, _, Side::One(d)) => Some(d),
            (Slot::LeftDescendant, _, Side::Two(l, _)) => Some(l),
            (Slot::RightDescendant, _, Side::Two(_, r)) => Some(r),
            _ => None,
        }
    }

    fn set(&mut self, slot: Slot, value: Option<usize>) {
        let side = if slot.is_parent_slot() {
            &mut self.parents
        } else {
            &mut self.children
        };
        match (slot, side) {
            (Slot::Ancestor | Slot::Descendant, Side::One(a)) => *a = value,
            (Slot::LeftAncestor | Slot::LeftDescendant, Side::Two(l, _)) => *l = value,
            (Slot::RightAncestor | Slot::RightDescendant, Side::Two(_, r)) => *r = value,
            _ => unreachable!("slot {slot} not present"),
        }
    }

    /// The slots present on this vertex, parents first, left before right.
    pub fn slots(&self) -> Vec<Slot> {
        let mut out = Vec::with_capacity(4);
        match self.parents {
            Side::One(_) => out.push(Slot::Ancestor),
            Side::Two(..) => out.extend([Slot::LeftAncestor, Slot::RightAncestor]),
        }
        match self.children {
            Side::One(_) => out.push(Slot::Descendant),
            Side::Two(..) => out.extend([Slot::LeftDescendant, Slot::RightDescendant]),
        }
        out
    }

    fn neighbors(&self) -> impl Iterator<Item = usize> {
        self.parents.occupants().chain(self.children.occupants())
    }
}

/// Which bound of the rotation lattice to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Extreme {
    /// The chain `1 -> 2 -> ... -> n`.
    Min,
    /// The chain `n -> n-1 -> ... -> 1`.
    Max,
}

/// One problem found by [`Permutree::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub vertex: Option<usize>,
    pub slot: Option<Slot>,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.vertex, self.slot) {
            (Some(v), Some(s)) => write!(f, "{} at {}_{}", self.message, s, v),
            (Some(v), None) => write!(f, "{} at vertex {}", self.message, v),
            _ => f.write_str(&self.message),
        }
    }
}

/// The ordered partition `(I || J)` obtained by deleting the edge `child -> parent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EdgeCut {
    pub child: usize,
    pub parent: usize,
    /// `I`: the side of `child`.
    pub child_side: VertexSet,
    /// `J`: the side of `parent`.
    pub parent_side: VertexSet,
}

/// Cubic set `C(T)` together with its vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubicData {
    pub set: InversionSet,
}

impl CubicData {
    pub fn n(&self) -> usize {
        self.set.n()
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.set.components()
    }

    pub fn vector(&self) -> Vec<usize> {
        self.set.vector()
    }
}

/// A δ-permutree on the vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutree {
    decoration: Decoration,
    vertices: Vec<Vertex>,
}

impl Permutree {
    /// Wraps raw slot data without checking it. Use [`Permutree::validate`]
    /// to inspect the result.
    pub fn from_vertices_unchecked(decoration: Decoration, vertices: Vec<Vertex>) -> Permutree {
        Permutree {
            decoration,
            vertices,
        }
    }

    /// Builds a permutree from directed edges `(child, parent)`.
    ///
    /// On a two-slot side a neighbor goes left when its label is smaller than
    /// the vertex and right otherwise; the resulting tree must validate.
    pub fn from_edges(decoration: Decoration, edges: &[(usize, usize)]) -> Result<Permutree> {
        let n = decoration.len();
        let mut vertices: Vec<Vertex> = decoration
            .kinds()
            .iter()
            .map(|&k| Vertex::blossoms(k))
            .collect();
        for &(child, parent) in edges {
            for v in [child, parent] {
                if v == 0 || v > n {
                    return Err(Error::VertexOutOfRange(v));
                }
            }
            let up = side_slot(&vertices[child - 1].parents, parent < child, true);
            let down = side_slot(&vertices[parent - 1].children, child < parent, false);
            for (v, slot, other) in [(child, up, parent), (parent, down, child)] {
                if vertices[v - 1].get(slot) != Some(None) {
                    return Err(Error::InvalidPermutree(format!(
                        "slot {slot}_{v} already occupied"
                    )));
                }
                vertices[v - 1].set(slot, Some(other));
            }
        }
        let tree = Permutree {
            decoration,
            vertices,
        };
        let violations = tree.validate();
        if violations.is_empty() {
            Ok(tree)
        } else {
            Err(Error::InvalidPermutree(
                violations
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("; "),
            ))
        }
    }

    /// The minimal or maximal element of the rotation lattice.
    pub fn extreme(decoration: &Decoration, which: Extreme) -> Permutree {
        let n = decoration.len();
        let mut vertices: Vec<Vertex> = decoration
            .kinds()
            .iter()
            .map(|&k| Vertex::blossoms(k))
            .collect();
        for i in 1..n {
            let (child, parent) = match which {
                Extreme::Min => (i, i + 1),
                Extreme::Max => (i + 1, i),
            };
            let up = side_slot(&vertices[child - 1].parents, parent < child, true);
            let down = side_slot(&vertices[parent - 1].children, child < parent, false);
            vertices[child - 1].set(up, Some(parent));
            vertices[parent - 1].set(down, Some(child));
        }
        Permutree {
            decoration: decoration.clone(),
            vertices,
        }
    }

    pub fn n(&self) -> usize {
        self.decoration.len()
    }

    pub fn decoration(&self) -> &Decoration {
        &self.decoration
    }

    pub fn vertex(&self, i: usize) -> &Vertex {
        &self.vertices[i - 1]
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Content of `slot` at vertex `i`.
    pub fn slot(&self, i: usize, slot: Slot) -> Result<Option<usize>> {
        self.check_vertex(i)?;
        self.vertices[i - 1]
            .get(slot)
            .ok_or(Error::SlotUndefined {
                vertex: i,
                slot: slot.name(),
            })
    }

    pub fn parents(&self, i: usize) -> impl Iterator<Item = usize> {
        self.vertices[i - 1].parents.occupants()
    }

    pub fn children(&self, i: usize) -> impl Iterator<Item = usize> {
        self.vertices[i - 1].children.occupants()
    }

    /// Whether `child -> parent` is an edge.
    pub fn has_edge(&self, child: usize, parent: usize) -> bool {
        child >= 1
            && child <= self.n()
            && parent >= 1
            && parent <= self.n()
            && self.parents(child).any(|p| p == parent)
            && self.children(parent).any(|c| c == child)
    }

    /// All edges as `(child, parent)`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = (1..=self.n())
            .flat_map(|c| self.parents(c).map(move |p| (c, p)))
            .collect();
        out.sort_unstable();
        out
    }

    /// Edges `i -> j` with `i < j`: the rotations that go up in the lattice.
    pub fn up_edges(&self) -> Vec<(usize, usize)> {
        self.edges().into_iter().filter(|&(c, p)| c < p).collect()
    }

    /// Edges `j -> i` with `i < j`, reported as `(i, j)`: the rotations that go down.
    pub fn down_edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|&(c, p)| c > p)
            .map(|(c, p)| (p, c))
            .collect();
        out.sort_unstable();
        out
    }

    fn check_vertex(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n() {
            Err(Error::VertexOutOfRange(i))
        } else {
            Ok(())
        }
    }

    /// Checks every structural invariant; an empty list means the tree is a
    /// valid δ-permutree.
    pub fn validate(&self) -> Vec<Violation> {
        let n = self.n();
        let mut out = Vec::new();
        let push = |out: &mut Vec<Violation>, vertex, slot, message: &str| {
            out.push(Violation {
                vertex,
                slot,
                message: message.to_string(),
            })
        };
        if self.vertices.len() != n {
            push(&mut out, None, None, "vertex count differs from decoration");
            return out;
        }
        let mut structural = false;
        for i in 1..=n {
            let kind = self.decoration.kind(i);
            let v = &self.vertices[i - 1];
            if v.parents.is_two() != kind.two_parents() || v.children.is_two() != kind.two_children()
            {
                push(&mut out, Some(i), None, "slot count does not match decoration");
                structural = true;
                continue;
            }
            for slot in v.slots() {
                let Some(Some(j)) = v.get(slot) else { continue };
                if j == 0 || j > n || j == i {
                    push(&mut out, Some(i), Some(slot), "slot refers to an invalid vertex");
                    structural = true;
                    continue;
                }
                let back = if slot.is_parent_slot() {
                    self.children(j).any(|c| c == i)
                } else {
                    self.parents(j).any(|p| p == i)
                };
                if !back {
                    push(&mut out, Some(i), Some(slot), "edge is not reciprocated");
                    structural = true;
                }
            }
            let neighbors: Vec<usize> = v.neighbors().collect();
            let distinct: VertexSet = neighbors.iter().copied().filter(|&j| j >= 1 && j <= n).collect();
            if distinct.len() != neighbors.len() {
                push(&mut out, Some(i), None, "duplicate neighbor");
                structural = true;
            }
        }
        if structural {
            return out;
        }

        let edge_count: usize = (1..=n).map(|i| self.children(i).count()).sum();
        let reached = self.reach(1, None).union(VertexSet::singleton(1));
        if edge_count + 1 != n || reached.len() != n {
            push(
                &mut out,
                None,
                None,
                &format!(
                    "disconnected / edge count: {edge_count} edges, {} of {n} vertices reachable from 1",
                    reached.len()
                ),
            );
            return out;
        }

        for i in 1..=n {
            let v = &self.vertices[i - 1];
            for slot in v.slots() {
                let must_be_smaller = match slot {
                    Slot::LeftAncestor | Slot::LeftDescendant => true,
                    Slot::RightAncestor | Slot::RightDescendant => false,
                    _ => continue,
                };
                let comp = self.component_of_slot(i, slot);
                let ok = if must_be_smaller {
                    comp.is_subset(VertexSet::range(1, i - 1))
                } else {
                    comp.is_subset(VertexSet::range(i + 1, n))
                };
                if !ok {
                    push(&mut out, Some(i), Some(slot), "label condition");
                }
            }
        }
        out
    }

    /// Vertices reachable from `start` without entering `blocked`. `start`
    /// itself is not included.
    fn reach(&self, start: usize, blocked: Option<usize>) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        if let Some(b) = blocked {
            seen.insert(b);
        }
        let mut queue = VecDeque::from([start]);
        let mut out = VertexSet::EMPTY;
        while let Some(v) = queue.pop_front() {
            for w in self.vertices[v - 1].neighbors() {
                if !seen.contains(w) {
                    seen.insert(w);
                    out.insert(w);
                    queue.push_back(w);
                }
            }
        }
        out
    }

    fn component_of_slot(&self, i: usize, slot: Slot) -> VertexSet {
        match self.vertices[i - 1].get(slot) {
            Some(Some(j)) => self.reach(j, Some(i)).union(VertexSet::singleton(j)),
            _ => VertexSet::EMPTY,
        }
    }

    /// The connected component, after deleting `i`, that holds the vertex in
    /// `slot`; empty for a blossom.
    pub fn subtree(&self, i: usize, slot: Slot) -> Result<VertexSet> {
        self.slot(i, slot)?;
        Ok(self.component_of_slot(i, slot))
    }

    /// Every `j` with a directed path `j -> ... -> i`.
    pub fn strict_descendants(&self, i: usize) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        let mut stack: Vec<usize> = self.children(i).collect();
        while let Some(c) = stack.pop() {
            if !out.contains(c) {
                out.insert(c);
                stack.extend(self.children(c));
            }
        }
        out
    }

    /// `B(T) = {(i, j) : i < j, j a strict descendant of i}`.
    pub fn inversion_set(&self) -> InversionSet {
        let n = self.n();
        let mut set = InversionSet::empty(n);
        for i in 1..=n {
            set.set_row(
                i,
                self.strict_descendants(i)
                    .intersection(VertexSet::range(i + 1, n)),
            );
        }
        set
    }

    pub fn inversion_vector(&self) -> Vec<usize> {
        self.inversion_set().vector()
    }

    /// `C(T)`: the vertices above `i` in its child subtree (`none`/`up`
    /// vertices) or in its right child subtree (`down`/`updown` vertices).
    pub fn cubic_data(&self) -> CubicData {
        let n = self.n();
        let mut set = InversionSet::empty(n);
        for i in 1..=n {
            let comp = if self.decoration.kind(i).two_children() {
                self.component_of_slot(i, Slot::RightDescendant)
            } else {
                self.component_of_slot(i, Slot::Descendant)
            };
            set.set_row(i, comp.intersection(VertexSet::range(i + 1, n)));
        }
        CubicData { set }
    }

    /// Permutreehedron vertex `a(T)`.
    ///
    /// `d` counts every vertex of the child-side subtrees of `i`, which can
    /// include vertices that are not below `i` in the partial order (they
    /// hang off an up or updown vertex further down).
    pub fn vertex_coordinates(&self) -> Vec<i64> {
        (1..=self.n())
            .map(|i| {
                let size = |s| self.component_of_slot(i, s).len() as i64;
                let kind = self.decoration.kind(i);
                let d: i64 = if kind.two_children() {
                    size(Slot::LeftDescendant) + size(Slot::RightDescendant)
                } else {
                    size(Slot::Descendant)
                };
                let mut a = 1 + d;
                if kind.two_children() {
                    a += size(Slot::LeftDescendant) * size(Slot::RightDescendant);
                }
                if kind.two_parents() {
                    a -= size(Slot::LeftAncestor) * size(Slot::RightAncestor);
                }
                a
            })
            .collect()
    }

    /// The cut defined by the edge `child -> parent`.
    pub fn edge_cut(&self, child: usize, parent: usize) -> Result<EdgeCut> {
        if !self.has_edge(child, parent) {
            return Err(Error::NotAnEdge(child, parent));
        }
        let child_side = self
            .reach(child, Some(parent))
            .union(VertexSet::singleton(child));
        Ok(EdgeCut {
            child,
            parent,
            child_side,
            parent_side: VertexSet::full(self.n()).difference(child_side),
        })
    }

    /// Cuts of all edges, in sorted edge order.
    pub fn edge_cuts(&self) -> Vec<EdgeCut> {
        self.edges()
            .into_iter()
            .map(|(c, p)| self.edge_cut(c, p).expect("edge listed by edges()"))
            .collect()
    }

    fn rotation_slots(&self, i: usize, j: usize) -> (Slot, Slot, Slot, Slot) {
        let ki = self.decoration.kind(i);
        let kj = self.decoration.kind(j);
        let up_i = if ki.two_parents() {
            Slot::RightAncestor
        } else {
            Slot::Ancestor
        };
        let down_i = if ki.two_children() {
            Slot::RightDescendant
        } else {
            Slot::Descendant
        };
        let up_j = if kj.two_parents() {
            Slot::LeftAncestor
        } else {
            Slot::Ancestor
        };
        let down_j = if kj.two_children() {
            Slot::LeftDescendant
        } else {
            Slot::Descendant
        };
        (up_i, down_i, up_j, down_j)
    }

    /// Rotates the edge `i -> j` (`i < j`, `i` a child of `j`) into `j -> i`.
    ///
    /// `i` hands its right (or sole) child subtree to `j`, which takes it in
    /// the child slot `i` used to occupy; symmetrically `j` hands its left
    /// (or sole) parent subtree to `i`. Every other subtree stays put.
    pub fn rotate(&self, i: usize, j: usize) -> Result<Permutree> {
        if i >= j || j > self.n() || i == 0 {
            return Err(Error::NotAnEdge(i, j));
        }
        let (up_i, down_i, up_j, down_j) = self.rotation_slots(i, j);
        if self.vertices[i - 1].get(up_i) != Some(Some(j))
            || self.vertices[j - 1].get(down_j) != Some(Some(i))
        {
            return Err(Error::NotAnEdge(i, j));
        }
        let mut t = self.clone();
        let moving_down = t.vertices[i - 1].get(down_i).flatten();
        let moving_up = t.vertices[j - 1].get(up_j).flatten();
        t.vertices[i - 1].set(down_i, Some(j));
        t.vertices[j - 1].set(up_j, Some(i));
        t.vertices[j - 1].set(down_j, moving_down);
        t.vertices[i - 1].set(up_i, moving_up);
        if let Some(x) = moving_down {
            t.vertices[x - 1].parents.replace(i, j);
        }
        if let Some(y) = moving_up {
            t.vertices[y - 1].children.replace(j, i);
        }
        debug_assert!(t.validate().is_empty(), "rotation broke {t}");
        Ok(t)
    }

    /// Inverse of [`Permutree::rotate`]: turns the edge `j -> i` (`i < j`)
    /// back into `i -> j`.
    pub fn rotate_down(&self, i: usize, j: usize) -> Result<Permutree> {
        if i >= j || j > self.n() || i == 0 {
            return Err(Error::NotAnEdge(j, i));
        }
        let (up_i, down_i, up_j, down_j) = self.rotation_slots(i, j);
        if self.vertices[i - 1].get(down_i) != Some(Some(j))
            || self.vertices[j - 1].get(up_j) != Some(Some(i))
        {
            return Err(Error::NotAnEdge(j, i));
        }
        let mut t = self.clone();
        let moving_down = t.vertices[j - 1].get(down_j).flatten();
        let moving_up = t.vertices[i - 1].get(up_i).flatten();
        t.vertices[j - 1].set(down_j, Some(i));
        t.vertices[i - 1].set(up_i, Some(j));
        t.vertices[i - 1].set(down_i, moving_down);
        t.vertices[j - 1].set(up_j, moving_up);
        if let Some(x) = moving_down {
            t.vertices[x - 1].parents.replace(j, i);
        }
        if let Some(y) = moving_up {
            t.vertices[y - 1].children.replace(i, j);
        }
        debug_assert!(t.validate().is_empty(), "rotation broke {t}");
        Ok(t)
    }

    /// Binary word of an `updown` permutree: `s_i = 0` when `v_i` is a child
    /// of `v_{i+1}`, `1` when it is its parent.
    pub fn to_binary_sequence(&self) -> Result<String> {
        if self
            .decoration
            .interior()
            .iter()
            .any(|&k| k != Kind::UpDown)
        {
            return Err(Error::NotBoolean(self.decoration.word()));
        }
        (1..self.n())
            .map(|i| {
                if self.has_edge(i, i + 1) {
                    Ok('0')
                } else if self.has_edge(i + 1, i) {
                    Ok('1')
                } else {
                    Err(Error::Internal(format!(
                        "vertices {i} and {} are not adjacent in an updown permutree",
                        i + 1
                    )))
                }
            })
            .collect()
    }
}

/// Which slot of `side` a neighbor takes: left when `smaller`, right otherwise.
fn side_slot(side: &Side, smaller: bool, parent: bool) -> Slot {
    match (side, parent, smaller) {
        (Side::One(_), true, _) => Slot::Ancestor,
        (Side::One(_), false, _) => Slot::Descendant,
        (Side::Two(..), true, true) => Slot::LeftAncestor,
        (Side::Two(..), true, false) => Slot::RightAncestor,
        (Side::Two(..), false, true) => Slot::LeftDescendant,
        (Side::Two(..), false, false) => Slot::RightDescendant,
    }
}

impl fmt::Display for Permutree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.decoration)?;
        for (k, (c, p)) in self.edges().into_iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}->{p}")?;
        }
        f.write_str("]")
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

    /// The `nbud` permutree with edges 2->1, 2->3, 4->2.
    fn four_vertex_example() -> Permutree {
        Permutree::from_edges(deco("nbud"), &[(2, 1), (2, 3), (4, 2)]).unwrap()
    }

    /// The `nbn` permutree with edges 2->1 and 2->3.
    fn boolean_middle_left() -> Permutree {
        Permutree::from_edges(deco("nbn"), &[(2, 1), (2, 3)]).unwrap()
    }

    #[test]
    fn extremes_have_extreme_inversion_sets() {
        let d = deco("nbun");
        let max = Permutree::extreme(&d, Extreme::Max);
        assert!(max.validate().is_empty());
        assert_eq!(max.inversion_set(), InversionSet::full(4));
        let min = Permutree::extreme(&d, Extreme::Min);
        assert!(min.inversion_set().is_empty());
        let chain = Permutree::extreme(&deco("nnn"), Extreme::Min);
        assert_eq!(chain.edges(), vec![(1, 2), (2, 3)]);
        assert!(Permutree::extreme(&deco("ndn"), Extreme::Min)
            .validate()
            .is_empty());
    }

    #[test]
    fn validation_reports_disconnection() {
        let d = deco("nnn");
        let mut vertices = Permutree::extreme(&d, Extreme::Min).vertices().to_vec();
        vertices[1].parents = Side::One(None);
        vertices[2].children = Side::One(None);
        let t = Permutree::from_vertices_unchecked(d, vertices);
        let report = t.validate();
        assert_eq!(report.len(), 1);
        assert!(report[0].message.starts_with("disconnected / edge count"));
    }

    #[test]
    fn validation_reports_label_condition() {
        let d = deco("ndn");
        let vertices = vec![
            Vertex {
                parents: Side::One(Some(2)),
                children: Side::One(None),
            },
            Vertex {
                parents: Side::One(None),
                children: Side::Two(Some(3), Some(1)),
            },
            Vertex {
                parents: Side::One(Some(2)),
                children: Side::One(None),
            },
        ];
        let t = Permutree::from_vertices_unchecked(d, vertices);
        let report: Vec<String> = t.validate().iter().map(ToString::to_string).collect();
        assert!(report.contains(&"label condition at LD_2".to_string()), "{report:?}");
    }

    #[test]
    fn validation_reports_slot_shape_and_reciprocity() {
        let d = deco("ndn");
        let mut vertices = Permutree::extreme(&d, Extreme::Min).vertices().to_vec();
        vertices[1].children = Side::One(Some(1));
        let t = Permutree::from_vertices_unchecked(d.clone(), vertices);
        assert!(t.validate()[0].message.contains("slot count"));

        let mut vertices = Permutree::extreme(&d, Extreme::Min).vertices().to_vec();
        vertices[0].parents = Side::One(Some(3));
        let t = Permutree::from_vertices_unchecked(d, vertices);
        assert!(t
            .validate()
            .iter()
            .any(|v| v.message == "edge is not reciprocated"));
    }

    #[test]
    fn from_edges_rejects_occupied_slots() {
        assert!(Permutree::from_edges(deco("nnn"), &[(1, 3), (2, 3)]).is_err());
        assert!(Permutree::from_edges(deco("nnn"), &[(1, 4)]).is_err());
    }

    #[test]
    fn edge_cuts_of_the_four_vertex_example() {
        let t = four_vertex_example();
        let cut = |c, p| {
            let e = t.edge_cut(c, p).unwrap();
            (e.child_side.to_vec(), e.parent_side.to_vec())
        };
        assert_eq!(cut(2, 1), (vec![2, 3, 4], vec![1]));
        assert_eq!(cut(2, 3), (vec![1, 2, 4], vec![3]));
        assert_eq!(cut(4, 2), (vec![4], vec![1, 2, 3]));
        assert_eq!(t.edge_cut(1, 2), Err(Error::NotAnEdge(1, 2)));
        assert_eq!(t.edge_cut(3, 4), Err(Error::NotAnEdge(3, 4)));
    }

    #[test]
    fn descendants_versus_subtrees() {
        let max = Permutree::extreme(&deco("nnn"), Extreme::Max);
        assert_eq!(max.strict_descendants(1).to_vec(), vec![2, 3]);

        let t = boolean_middle_left();
        assert_eq!(t.subtree(1, Slot::Descendant).unwrap().to_vec(), vec![2, 3]);
        assert_eq!(t.strict_descendants(1).to_vec(), vec![2]);
        assert!(t.subtree(2, Slot::LeftDescendant).unwrap().is_empty());
        assert_eq!(
            t.subtree(1, Slot::LeftDescendant),
            Err(Error::SlotUndefined {
                vertex: 1,
                slot: "LD"
            })
        );
        assert_eq!(t.inversion_vector(), vec![1, 0]);
        assert_eq!(t.cubic_data().vector(), vec![2, 0]);
    }

    #[test]
    fn rotation_examples() {
        let t = Permutree::extreme(&deco("ndn"), Extreme::Min);
        assert_eq!(t.rotate(1, 2).unwrap().inversion_set(), set(3, &[(1, 2)]));

        let t = Permutree::extreme(&deco("nbn"), Extreme::Min);
        assert_eq!(t.rotate(2, 3).unwrap().inversion_set(), set(3, &[(2, 3)]));

        let t = Permutree::extreme(&deco("nnn"), Extreme::Min);
        let t = t.rotate(1, 2).unwrap();
        let t = t.rotate(1, 3).unwrap();
        assert_eq!(t.inversion_set(), set(3, &[(1, 2), (1, 3)]));
    }

    #[test]
    fn rotation_rejects_non_edges() {
        let t = Permutree::extreme(&deco("nnn"), Extreme::Min);
        assert_eq!(t.rotate(1, 3), Err(Error::NotAnEdge(1, 3)));
        assert_eq!(t.rotate(2, 1), Err(Error::NotAnEdge(2, 1)));
        let max = Permutree::extreme(&deco("nnn"), Extreme::Max);
        assert_eq!(max.rotate(1, 2), Err(Error::NotAnEdge(1, 2)));
        assert!(max.rotate_down(1, 2).is_ok());
    }

    #[test]
    fn binary_rotation_moves_the_middle_subtree() {
        // root 4 with left child 2 (children 1 and 3) and right child 5
        let t = Permutree::from_edges(deco("ndddn"), &[(1, 2), (3, 2), (2, 4), (5, 4)]).unwrap();
        let r = t.rotate(2, 4).unwrap();
        assert_eq!(r.edges(), vec![(1, 2), (3, 4), (4, 2), (5, 4)]);
        assert_eq!(r.slot(4, Slot::LeftDescendant).unwrap(), Some(3));
        assert_eq!(r.slot(2, Slot::RightDescendant).unwrap(), Some(4));
        assert_eq!(r.rotate_down(2, 4).unwrap(), t);
    }

    #[test]
    fn coordinates_of_chains() {
        let min = Permutree::extreme(&deco("nnn"), Extreme::Min);
        assert_eq!(min.vertex_coordinates(), vec![1, 2, 3]);
        let max = Permutree::extreme(&deco("nnn"), Extreme::Max);
        assert_eq!(max.vertex_coordinates(), vec![3, 2, 1]);
        assert_eq!(four_vertex_example().vertex_coordinates().iter().sum::<i64>(), 10);
    }

    #[test]
    fn binary_sequences() {
        let d = deco("nbn");
        assert_eq!(
            Permutree::extreme(&d, Extreme::Min).to_binary_sequence().unwrap(),
            "00"
        );
        assert_eq!(
            Permutree::extreme(&d, Extreme::Max).to_binary_sequence().unwrap(),
            "11"
        );
        assert_eq!(boolean_middle_left().to_binary_sequence().unwrap(), "10");
        assert!(Permutree::extreme(&deco("ndn"), Extreme::Min)
            .to_binary_sequence()
            .is_err());
    }

    #[test]
    fn single_vertex_and_pair() {
        let one = Permutree::extreme(&deco("n"), Extreme::Min);
        assert!(one.validate().is_empty());
        assert!(one.inversion_vector().is_empty());
        assert!(one.cubic_data().vector().is_empty());
        assert_eq!(one.vertex_coordinates(), vec![1]);
        let two = Permutree::extreme(&deco("nn"), Extreme::Min);
        let up = two.rotate(1, 2).unwrap();
        assert_eq!(up.inversion_vector(), vec![1]);
        assert_eq!(up.rotate_down(1, 2).unwrap(), two);
    }
}
