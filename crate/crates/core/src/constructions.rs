//! Bigraph constructions (bipartite double, both-sides completion), the
//! cocomparability-bigraph recognizer, and test-fixture generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::forcing::recognize_strong_cocomparability;
use crate::graph::{Bigraph, Graph};

/// The bipartite double B(G): parts {v'} and {v''} with u'v'' an edge iff
/// uv is an edge of G. Loops of G give the edges v'v''.
pub fn bipartite_double(g: &Graph) -> Bigraph {
    let n = g.n();
    let mut h = Bigraph::new(n, n);
    for u in 0..n {
        for v in 0..n {
            if g.adjacent(u, v) {
                h.add_edge(u, v);
            }
        }
    }
    h
}

/// H++: the reflexive graph obtained by completing both colour classes of a
/// bigraph to cliques; vertices are X followed by Y.
pub fn close_both_sides(h: &Bigraph) -> Graph {
    let (nx, ny) = (h.nx(), h.ny());
    let mut g = Graph::new(nx + ny);
    for a in 0..nx {
        for b in a + 1..nx {
            g.add_edge(a, b);
        }
    }
    for a in 0..ny {
        for b in a + 1..ny {
            g.add_edge(nx + a, nx + b);
        }
    }
    for x in 0..nx {
        for y in 0..ny {
            if h.adjacent(x, y) {
                g.add_edge(x, nx + y);
            }
        }
    }
    g
}

/// A bigraph is a cocomparability bigraph iff H++ is a strong
/// cocomparability graph.
pub fn recognize_cocomparability_bigraph(h: &Bigraph) -> bool {
    recognize_strong_cocomparability(&close_both_sides(h)).is_yes()
}

// ---------------------------------------------------------------------------
// fixture generators
// ---------------------------------------------------------------------------

/// The reflexive path on n vertices, edges i(i+1).
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

/// The reflexive cycle on n >= 3 vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges)
}

/// The reflexive complete graph on n vertices.
pub fn complete(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// The reflexive complete bipartite graph with parts 0..a and a..a+b.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::new(a + b);
    for x in 0..a {
        for y in 0..b {
            g.add_edge(x, a + y);
        }
    }
    g
}

/// A seeded Erdos-Renyi reflexive graph with edge probability p.
pub fn random(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Malformed(format!("edge probability {p} not in [0, 1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// A seeded random interval graph: n intervals with integer endpoints drawn
/// uniformly from 0..=range (ties allowed), reflexive intersection graph.
pub fn random_interval(n: usize, range: u64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let intervals: Vec<(u64, u64)> = (0..n)
        .map(|_| {
            let a = rng.gen_range(0..=range);
            let b = rng.gen_range(0..=range);
            (a.min(b), a.max(b))
        })
        .collect();
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            let (a, b) = intervals[u];
            let (c, d) = intervals[v];
            if a.max(c) <= b.min(d) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Named graph families for the CLI and harnesses.
#[derive(Clone, Debug)]
pub enum Family {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    Random { n: usize, p: f64, seed: u64 },
    RandomInterval { n: usize, range: u64, seed: u64 },
}

pub fn generate(family: &Family) -> Result<Graph> {
    match *family {
        Family::Path { n } => Ok(path(n)),
        Family::Cycle { n } => {
            if n < 3 {
                return Err(Error::Malformed(format!("cycle needs n >= 3, got {n}")));
            }
            Ok(cycle(n))
        }
        Family::Complete { n } => Ok(complete(n)),
        Family::CompleteBipartite { a, b } => Ok(complete_bipartite(a, b)),
        Family::Random { n, p, seed } => random(n, p, seed),
        Family::RandomInterval { n, range, seed } => Ok(random_interval(n, range, seed)),
    }
}
