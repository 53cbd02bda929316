//! Text renderings of lattices, vectors and realizations.

use std::fmt::Write as _;

use permutree::geometry::{self, CubicalRealization, PolytopeRealization};
use permutree::oracle::OracleReport;
use permutree::{Decoration, InversionSet, Lattice};
use serde::Deserialize;
use serde_json::{json, Value};

pub fn lattice_json(lattice: &Lattice, normalized: bool) -> Value {
    let nodes: Vec<Value> = lattice
        .nodes()
        .iter()
        .zip(lattice.trees())
        .enumerate()
        .map(|(id, (set, tree))| {
            json!({
                "id": id,
                "inv": set.pairs().map(|(i, j)| [i, j]).collect::<Vec<_>>(),
                "b": tree.inversion_vector(),
                "c": tree.cubic_data().vector(),
                "a": tree.vertex_coordinates(),
            })
        })
        .collect();
    let covers: Vec<[usize; 4]> = lattice
        .covers()
        .iter()
        .map(|c| [c.source, c.target, c.pair.0, c.pair.1])
        .collect();
    json!({
        "delta": lattice.decoration().word(),
        "n": lattice.n(),
        "normalized": normalized,
        "nodes": nodes,
        "covers": covers,
    })
}

fn tuple(values: &[usize]) -> String {
    let items: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("({})", items.join(","))
}

/// Hasse diagram drawn bottom to top, nodes labelled by inversion vector.
pub fn lattice_dot(lattice: &Lattice) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", lattice.decoration().word()).unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    for (id, tree) in lattice.trees().iter().enumerate() {
        writeln!(out, "  {id} [label=\"{}\"];", tuple(&tree.inversion_vector())).unwrap();
    }
    for c in lattice.covers() {
        writeln!(out, "  {} -> {} [label=\"{}-{}\"];", c.source, c.target, c.pair.0, c.pair.1).unwrap();
    }
    out.push_str("}\n");
    out
}

pub fn vectors_csv(lattice: &Lattice) -> String {
    let n = lattice.n();
    let mut header = vec!["id".to_string()];
    header.extend((1..n).map(|i| format!("b{i}")));
    header.extend((1..n).map(|i| format!("c{i}")));
    header.extend((1..=n).map(|i| format!("a{i}")));
    let mut out = header.join(",");
    out.push('\n');
    for (id, tree) in lattice.trees().iter().enumerate() {
        let mut row = vec![id.to_string()];
        row.extend(tree.inversion_vector().iter().map(|v| v.to_string()));
        row.extend(tree.cubic_data().vector().iter().map(|v| v.to_string()));
        row.extend(tree.vertex_coordinates().iter().map(|v| v.to_string()));
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn geometry_json(p: &PolytopeRealization, c: &CubicalRealization) -> Value {
    json!({
        "delta": p.decoration,
        "n": p.n,
        "polytope": {
            "hyperplane": p.hyperplane,
            "points": p.points,
            "facets": p.facets.iter().map(|f| json!({"set": f.set.to_vec(), "rhs": f.rhs})).collect::<Vec<_>>(),
        },
        "cubical": {
            "vertices": c.vertices,
            "edges": c.edges.iter().map(|e| json!([e.source, e.target, e.axis])).collect::<Vec<_>>(),
            "cells": c.cells.iter().map(|cell| json!({
                "cut": cell.cut.to_vec(),
                "under": cell.under,
                "over": cell.over,
                "members": cell.members,
                "axis": cell.axis,
                "value": cell.value,
            })).collect::<Vec<_>>(),
        },
    })
}

/// OFF mesh of the cubical realization, padded to three coordinates; one
/// face per cell. Only defined for `n <= 4`.
pub fn geometry_off(c: &CubicalRealization) -> Option<String> {
    if c.n > 4 {
        return None;
    }
    let mut out = String::from("OFF\n");
    writeln!(out, "{} {} {}", c.vertices.len(), c.cells.len(), c.edges.len()).unwrap();
    for v in &c.vertices {
        let mut xyz = [0usize; 3];
        xyz[..v.len()].copy_from_slice(v);
        writeln!(out, "{} {} {}", xyz[0], xyz[1], xyz[2]).unwrap();
    }
    for cell in &c.cells {
        let order = geometry::cell_boundary_order(cell, c);
        let ids: Vec<String> = order.iter().map(|m| m.to_string()).collect();
        writeln!(out, "{} {}", ids.len(), ids.join(" ")).unwrap();
    }
    Some(out)
}

/// One line per corner: the corner, the node id and its permutree.
pub fn corners_table(lattice: &Lattice) -> permutree::Result<String> {
    let mut out = String::from("corner id permutree\n");
    for corner in geometry::corners(lattice.n()) {
        let id = geometry::extremal_permutree(lattice, &corner)?;
        writeln!(out, "{} {id} {}", tuple(&corner), lattice.trees()[id]).unwrap();
    }
    Ok(out)
}

pub fn report_json(r: &OracleReport) -> Value {
    json!({
        "property": r.property,
        "passed": r.passed,
        "counterexample": r.counterexample.as_ref().map(|c| json!({
            "left": c.left,
            "right": c.right,
            "expected": c.expected,
            "got": c.got,
        })),
    })
}

/// The parts of the lattice JSON needed to rebuild a [`Lattice`].
#[derive(Debug, Deserialize)]
pub struct LatticeFile {
    pub delta: String,
    pub n: usize,
    pub nodes: Vec<NodeEntry>,
    pub covers: Vec<[usize; 4]>,
}

#[derive(Debug, Deserialize)]
pub struct NodeEntry {
    pub id: usize,
    pub inv: Vec<[usize; 2]>,
}

impl LatticeFile {
    pub fn into_lattice(self) -> Result<Lattice, String> {
        let decoration = Decoration::parse(&self.delta).map_err(|e| format!("delta: {e}"))?;
        if decoration.len() != self.n {
            return Err(format!("n = {} but delta has length {}", self.n, decoration.len()));
        }
        let mut nodes = Vec::with_capacity(self.nodes.len());
        for (pos, node) in self.nodes.into_iter().enumerate() {
            if node.id != pos {
                return Err(format!("node at position {pos} has id {}", node.id));
            }
            let set = InversionSet::from_pairs(self.n, node.inv.into_iter().map(|[i, j]| (i, j)))
                .map_err(|e| format!("node {pos}: {e}"))?;
            nodes.push(set);
        }
        let covers = self
            .covers
            .into_iter()
            .map(|[source, target, i, j]| permutree::Cover {
                source,
                target,
                pair: (i, j),
            })
            .collect();
        Lattice::from_parts(decoration, nodes, covers).map_err(|e| e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn file_for(word: &str) -> LatticeFile {
        let l = permutree::enumerate(&Decoration::parse(word).unwrap()).unwrap();
        serde_json::from_value(lattice_json(&l, false)).unwrap()
    }

    #[test]
    fn lattice_json_reads_back() {
        let l = file_for("nbun").into_lattice().unwrap();
        assert_eq!(l.len(), 10);
        let mut bad = file_for("nbun");
        bad.nodes[1].id = 5;
        assert!(bad.into_lattice().unwrap_err().contains("id"));
        let mut bad = file_for("nbun");
        bad.n = 5;
        assert!(bad.into_lattice().is_err());
    }

    #[test]
    fn off_is_limited_to_three_coordinates() {
        let l = permutree::enumerate(&Decoration::parse("nnnnn").unwrap()).unwrap();
        let c = geometry::build_cubical(&l).unwrap();
        assert!(geometry_off(&c).is_none());
    }
}
