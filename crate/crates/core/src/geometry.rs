//! Permutreehedron coordinates and the cubical realization by cubic
//! vectors.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::oracle::OracleReport;
use crate::vertex_set::VertexSet;

fn choose2(m: usize) -> i64 {
    (m * m.saturating_sub(1) / 2) as i64
}

/// Half-space `Σ_{i ∈ set} x_i >= rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Facet {
    pub set: VertexSet,
    pub rhs: i64,
}

/// Vertices `a(T)` and the half-space system of the permutreehedron.
#[derive(Clone, Debug)]
pub struct PolytopeRealization {
    pub n: usize,
    pub decoration: String,
    /// `points[id]` is `a(T)` for node `id`.
    pub points: Vec<Vec<i64>>,
    /// Right-hand side of `Σ x_i = hyperplane`.
    pub hyperplane: i64,
    /// One facet per distinct child side of an edge cut, by size then
    /// elements.
    pub facets: Vec<Facet>,
    /// Child sides of the edge cuts of each node's tree.
    pub node_cuts: Vec<Vec<VertexSet>>,
}

fn sort_sets(sets: &mut [VertexSet]) {
    sets.sort_by_key(|s| (s.len(), s.to_vec()));
}

pub fn build_polytope(lattice: &Lattice) -> PolytopeRealization {
    let n = lattice.n();
    let trees = lattice.trees();
    let points = trees.iter().map(|t| t.vertex_coordinates()).collect();
    let node_cuts: Vec<Vec<VertexSet>> = trees
        .iter()
        .map(|t| {
            let mut cuts: Vec<VertexSet> = t.edge_cuts().iter().map(|c| c.child_side).collect();
            sort_sets(&mut cuts);
            cuts
        })
        .collect();
    let mut distinct: Vec<VertexSet> = node_cuts
        .iter()
        .flatten()
        .copied()
        .collect::<HashSet<_>>()
        .into_iter()
        .collect();
    sort_sets(&mut distinct);
    PolytopeRealization {
        n,
        decoration: lattice.decoration().word(),
        points,
        hyperplane: choose2(n + 1),
        facets: distinct
            .into_iter()
            .map(|set| Facet {
                set,
                rhs: choose2(set.len() + 1),
            })
            .collect(),
        node_cuts,
    }
}

fn sum_over(point: &[i64], set: VertexSet) -> i64 {
    set.iter().map(|i| point[i - 1]).sum()
}

fn report(p: &PolytopeRealization, property: &str) -> OracleReport {
    OracleReport {
        decoration: p.decoration.clone(),
        n: p.n,
        property: property.to_string(),
        passed: true,
        counterexample: None,
    }
}

/// Hyperplane membership, every inequality at every point, tightness of each
/// tree on its own cuts, and strictness on every other facet.
pub fn verify_polytope(p: &PolytopeRealization) -> Vec<OracleReport> {
    let mut on_plane = report(p, "points lie on the hyperplane");
    let mut feasible = report(p, "points satisfy every inequality");
    let mut tight = report(p, "tight on own cuts");
    let mut strict = report(p, "strict off own cuts");
    for (id, point) in p.points.iter().enumerate() {
        let total: i64 = point.iter().sum();
        if total != p.hyperplane {
            on_plane.fail(id, format!("{point:?}"), p.hyperplane, total);
        }
        for facet in &p.facets {
            let s = sum_over(point, facet.set);
            let own = p.node_cuts[id].contains(&facet.set);
            let show = format!("{:?}", facet.set);
            if s < facet.rhs {
                feasible.fail(id, &show, format!(">= {}", facet.rhs), s);
            }
            if own && s != facet.rhs {
                tight.fail(id, &show, facet.rhs, s);
            }
            if !own && s == facet.rhs {
                strict.fail(id, &show, format!("> {}", facet.rhs), s);
            }
        }
    }
    vec![on_plane, feasible, tight, strict]
}

/// Cover edge of the cubical realization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubeEdge {
    pub source: usize,
    pub target: usize,
    /// The single coordinate (1-indexed) in which the endpoints differ, if
    /// there is exactly one.
    pub axis: Option<usize>,
}

/// The cell of the cubical realization attached to one edge cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    /// Child side `I` of the cut.
    pub cut: VertexSet,
    pub under: usize,
    pub over: usize,
    /// Nodes whose tree has this cut, ascending.
    pub members: Vec<usize>,
    /// Supporting hyperplane `x_axis = value`.
    pub axis: usize,
    pub value: usize,
}

#[derive(Clone, Debug)]
pub struct CubicalRealization {
    pub n: usize,
    pub decoration: String,
    /// `vertices[id]` is the cubic vector of node `id`.
    pub vertices: Vec<Vec<usize>>,
    pub edges: Vec<CubeEdge>,
    /// Sorted like [`PolytopeRealization::facets`].
    pub cells: Vec<Cell>,
}

/// Hyperplane of the cell of the cut with child side `cut`.
pub fn cell_hyperplane(n: usize, cut: VertexSet) -> (usize, usize) {
    let other = VertexSet::full(n).difference(cut);
    if other.contains(n) {
        (cut.max().expect("nonempty side"), 0)
    } else {
        let m = other.max().expect("nonempty side");
        (m, n - m)
    }
}

pub fn build_cubical(lattice: &Lattice) -> Result<CubicalRealization> {
    let n = lattice.n();
    let trees = lattice.trees();
    let nodes = lattice.nodes();
    let vertices: Vec<Vec<usize>> = trees.iter().map(|t| t.cubic_data().vector()).collect();
    let edges = lattice
        .covers()
        .iter()
        .map(|c| {
            let (s, t) = (&vertices[c.source], &vertices[c.target]);
            let differing: Vec<usize> = (0..s.len()).filter(|&k| s[k] != t[k]).collect();
            CubeEdge {
                source: c.source,
                target: c.target,
                axis: (differing.len() == 1).then(|| differing[0] + 1),
            }
        })
        .collect();

    let mut by_cut: BTreeMap<(usize, Vec<usize>), Vec<usize>> = BTreeMap::new();
    for (id, tree) in trees.iter().enumerate() {
        for cut in tree.edge_cuts() {
            let key = (cut.child_side.len(), cut.child_side.to_vec());
            by_cut.entry(key).or_default().push(id);
        }
    }
    let mut cells = Vec::with_capacity(by_cut.len());
    for ((_, elems), mut members) in by_cut {
        members.sort_unstable();
        members.dedup();
        let cut: VertexSet = elems.into_iter().collect();
        let under = members
            .iter()
            .copied()
            .find(|&m| members.iter().all(|&x| nodes[m].is_subset(&nodes[x])));
        let over = members
            .iter()
            .copied()
            .find(|&m| members.iter().all(|&x| nodes[x].is_subset(&nodes[m])));
        let (Some(under), Some(over)) = (under, over) else {
            return Err(Error::Internal(format!(
                "trees with cut {:?} have no unique minimum and maximum",
                cut
            )));
        };
        let (axis, value) = cell_hyperplane(n, cut);
        cells.push(Cell {
            cut,
            under,
            over,
            members,
            axis,
            value,
        });
    }
    Ok(CubicalRealization {
        n,
        decoration: lattice.decoration().word(),
        vertices,
        edges,
        cells,
    })
}

fn lex_less(a: &[usize], b: &[usize]) -> bool {
    a < b
}

/// All `2^{n-1}` corners `r` with `r_i ∈ {0, n-i}`, in lexicographic order.
pub fn corners(n: usize) -> Vec<Vec<usize>> {
    let dims = n.saturating_sub(1);
    let mut out: Vec<Vec<usize>> = (0u64..1 << dims)
        .map(|mask| {
            (1..=dims)
                .map(|i| if mask >> (dims - i) & 1 == 1 { n - i } else { 0 })
                .collect()
        })
        .collect();
    out.sort();
    out
}

/// Axis-parallel cover edges increasing lexicographically, injectivity, box
/// and corner attainment, the cell count and hyperplanes, and lexicographic
/// increase along every comparable pair.
pub fn check_cube(c: &CubicalRealization, p: &PolytopeRealization, lattice: &Lattice) -> Vec<OracleReport> {
    let base = |property: &str| OracleReport {
        decoration: c.decoration.clone(),
        n: c.n,
        property: property.to_string(),
        passed: true,
        counterexample: None,
    };
    let show = |id: usize| format!("{id}:{:?}", c.vertices[id]);

    let mut axis = base("edges are axis-parallel and lexicographically increasing");
    for e in &c.edges {
        let (s, t) = (&c.vertices[e.source], &c.vertices[e.target]);
        if e.axis.is_none() || !lex_less(s, t) {
            axis.fail(show(e.source), show(e.target), "one coordinate increases", format!("{:?}", e.axis));
        }
    }

    let mut injective = base("cubic vector is injective");
    let mut seen: HashMap<&Vec<usize>, usize> = HashMap::new();
    for (id, v) in c.vertices.iter().enumerate() {
        if let Some(&other) = seen.get(v) {
            injective.fail(show(other), show(id), "distinct", "equal");
        }
        seen.insert(v, id);
    }

    let mut boxed = base("vertices lie in the box and hit each corner once");
    for (id, v) in c.vertices.iter().enumerate() {
        if v.iter().enumerate().any(|(k, &x)| x > c.n - (k + 1)) {
            boxed.fail(show(id), "", "inside the box", "outside");
        }
    }
    for corner in corners(c.n) {
        let hits = c.vertices.iter().filter(|v| **v == corner).count();
        if hits != 1 {
            boxed.fail(format!("{corner:?}"), "", 1, hits);
        }
    }

    let mut cells = base("cells match facets and lie in their hyperplanes");
    if c.cells.len() != p.facets.len() {
        cells.fail("cells", "facets", p.facets.len(), c.cells.len());
    }
    for (cell, facet) in c.cells.iter().zip(&p.facets) {
        if cell.cut != facet.set {
            cells.fail(format!("{:?}", cell.cut), format!("{:?}", facet.set), "same cut", "different");
        }
    }
    let mut bounds = HashSet::new();
    for cell in &c.cells {
        if !bounds.insert((cell.under, cell.over)) {
            cells.fail(format!("{:?}", cell.cut), "", "distinct interval", "repeated");
        }
        let under = lattice.node(cell.under);
        let over = lattice.node(cell.over);
        for &m in &cell.members {
            if c.vertices[m][cell.axis - 1] != cell.value {
                cells.fail(format!("{:?}", cell.cut), show(m), format!("x_{} = {}", cell.axis, cell.value), "off the hyperplane");
            }
            let node = lattice.node(m);
            if !under.is_subset(node) || !node.is_subset(over) {
                cells.fail(format!("{:?}", cell.cut), show(m), "inside [under, over]", "outside");
            }
        }
    }

    let mut chains = base("comparable nodes increase lexicographically");
    let nodes = lattice.nodes();
    for (a, x) in nodes.iter().enumerate() {
        for (b, y) in nodes.iter().enumerate() {
            if a != b && x.is_subset(y) && !lex_less(&c.vertices[a], &c.vertices[b]) {
                chains.fail(show(a), show(b), "increase", "no increase");
            }
        }
    }
    vec![axis, injective, boxed, cells, chains]
}

/// The node whose cubic vector is the corner `r`.
pub fn extremal_permutree(lattice: &Lattice, corner: &[usize]) -> Result<usize> {
    let n = lattice.n();
    let well_formed = corner.len() == n.saturating_sub(1)
        && corner
            .iter()
            .enumerate()
            .all(|(k, &r)| r == 0 || r == n - (k + 1));
    if !well_formed {
        return Err(Error::MalformedCorner(format!("{corner:?} for n = {n}")));
    }
    let hits: Vec<usize> = lattice
        .trees()
        .iter()
        .enumerate()
        .filter(|(_, t)| t.cubic_data().vector() == corner)
        .map(|(id, _)| id)
        .collect();
    match hits.as_slice() {
        [id] => Ok(*id),
        [] => Err(Error::Internal(format!("no permutree at corner {corner:?}"))),
        _ => Err(Error::Internal(format!("corner {corner:?} attained {} times", hits.len()))),
    }
}

/// Members of a cell ordered around its boundary when the cover edges among
/// them form a single cycle; otherwise ascending.
pub fn cell_boundary_order(cell: &Cell, c: &CubicalRealization) -> Vec<usize> {
    let members: HashSet<usize> = cell.members.iter().copied().collect();
    let mut adjacent: HashMap<usize, Vec<usize>> = HashMap::new();
    for e in &c.edges {
        if members.contains(&e.source) && members.contains(&e.target) {
            adjacent.entry(e.source).or_default().push(e.target);
            adjacent.entry(e.target).or_default().push(e.source);
        }
    }
    let cyclic = cell.members.len() >= 3
        && cell
            .members
            .iter()
            .all(|m| adjacent.get(m).is_some_and(|a| a.len() == 2));
    if !cyclic {
        return cell.members.clone();
    }
    let start = cell.members[0];
    let mut order = vec![start];
    let mut prev = start;
    let mut current = *adjacent[&start].iter().min().expect("degree two");
    while current != start {
        order.push(current);
        let next = adjacent[&current]
            .iter()
            .copied()
            .find(|&x| x != prev)
            .expect("degree two");
        prev = current;
        current = next;
    }
    if order.len() == cell.members.len() {
        order
    } else {
        cell.members.clone()
    }
}
