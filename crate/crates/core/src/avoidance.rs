//! The avoids relation on edges (loops included) and the avoidance graph G*,
//! the second recognition route.

use crate::comparability;
use crate::error::{Error, Result};
use crate::graph::{EdgeRef, Graph, SimpleGraph};

/// True iff `e` avoids `f` per the four-case definition. Edge pairs with
/// intersecting endpoint sets never avoid each other.
pub fn avoids(g: &Graph, e: &EdgeRef, f: &EdgeRef) -> Result<bool> {
    if !g.is_edge(e) {
        return Err(Error::NotAnEdge(e.to_string()));
    }
    if !g.is_edge(f) {
        return Err(Error::NotAnEdge(f.to_string()));
    }
    Ok(avoids_unchecked(g, e, f))
}

pub(crate) fn avoids_unchecked(g: &Graph, e: &EdgeRef, f: &EdgeRef) -> bool {
    if e.intersects(f) {
        return false;
    }
    let (u, u2) = (e.x(), e.y());
    let (v, v2) = (f.x(), f.y());
    match (e.is_loop(), f.is_loop()) {
        (true, true) => !g.adjacent(u, v),
        (true, false) => !g.adjacent(u, v) && !g.adjacent(u, v2),
        (false, true) => !g.adjacent(v, u) && !g.adjacent(v, u2),
        (false, false) => {
            // {u, u', v, v'} must induce a 2K2, a P4 or a C4; besides uu' and
            // vv' that leaves 0, 1 or 2 cross edges, two only as a matching.
            let a = g.adjacent(u, v);
            let b = g.adjacent(u, v2);
            let c = g.adjacent(u2, v);
            let d = g.adjacent(u2, v2);
            match a as u8 + b as u8 + c as u8 + d as u8 {
                0 | 1 => true,
                2 => (a && d) || (b && c),
                _ => false,
            }
        }
    }
}

/// True iff the four endpoints of two disjoint non-loop edges induce a C4.
pub(crate) fn edges_induce_c4(g: &Graph, e: &EdgeRef, f: &EdgeRef) -> bool {
    if e.is_loop() || f.is_loop() || e.intersects(f) {
        return false;
    }
    let a = g.adjacent(e.x(), f.x());
    let b = g.adjacent(e.x(), f.y());
    let c = g.adjacent(e.y(), f.x());
    let d = g.adjacent(e.y(), f.y());
    (a && d && !b && !c) || (b && c && !a && !d)
}

/// The avoidance graph G*: a simple graph on E(G) (n loops first, then the
/// non-loop edges lexicographically) with adjacency given by avoids.
#[derive(Clone, Debug)]
pub struct AvoidanceGraph {
    pub graph: SimpleGraph,
    edge_of: Vec<EdgeRef>,
}

impl AvoidanceGraph {
    pub fn vertex_count(&self) -> usize {
        self.edge_of.len()
    }

    /// The edge of G represented by a G* vertex.
    pub fn edge_of(&self, v: usize) -> &EdgeRef {
        &self.edge_of[v]
    }

    pub fn edges(&self) -> &[EdgeRef] {
        &self.edge_of
    }

    /// The G* vertex representing an edge of G, if it is one.
    pub fn index_of(&self, e: &EdgeRef) -> Option<usize> {
        if e.is_loop() {
            (e.x() < self.graph_loop_count()).then_some(e.x())
        } else {
            let loops = self.graph_loop_count();
            self.edge_of[loops..]
                .binary_search(e)
                .ok()
                .map(|i| loops + i)
        }
    }

    fn graph_loop_count(&self) -> usize {
        // one loop vertex per vertex of G, stored first
        self.edge_of.iter().take_while(|e| e.is_loop()).count()
    }
}

pub fn build_avoidance_graph(g: &Graph) -> AvoidanceGraph {
    let mut edge_of: Vec<EdgeRef> = (0..g.n()).map(|v| EdgeRef::new(v, v)).collect();
    edge_of.extend(g.non_loop_edges());
    let m = edge_of.len();
    let mut graph = SimpleGraph::new(m);
    for i in 0..m {
        for j in i + 1..m {
            if avoids_unchecked(g, &edge_of[i], &edge_of[j]) {
                graph.add_edge(i, j);
            }
        }
    }
    AvoidanceGraph { graph, edge_of }
}

/// Recognizes strong cocomparability graphs by checking whether G* is a
/// comparability graph.
pub fn recognize_via_avoidance(g: &Graph) -> bool {
    let star = build_avoidance_graph(g);
    comparability::recognize_comparability(&star.graph).is_some()
}
