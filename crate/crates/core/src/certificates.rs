//! Certificate types and verifiers, the constructive conversions between
//! invertible pairs, weak edge-asteroids and complement asteroids, and the
//! YES-side ordering search.

use crate::avoidance::{avoids_unchecked, build_avoidance_graph, edges_induce_c4};
use crate::error::{Error, Result};
use crate::forcing::{build_pair_graph, InvertiblePair, PairNode};
use crate::graph::{EdgeRef, Graph, VertexOrdering};

// ---------------------------------------------------------------------------
// walks
// ---------------------------------------------------------------------------

/// A vertex sequence w0..ws with s >= 1; a step with equal endpoints
/// traverses the loop at that vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Walk {
    vertices: Vec<usize>,
}

impl Walk {
    pub fn new(vertices: Vec<usize>) -> Self {
        assert!(vertices.len() >= 2, "a walk has at least one edge");
        Walk { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// The consecutive steps as (possibly loop) edges.
    pub fn steps(&self) -> Vec<EdgeRef> {
        self.vertices
            .windows(2)
            .map(|w| EdgeRef::new(w[0], w[1]))
            .collect()
    }

    pub fn first_edge(&self) -> EdgeRef {
        EdgeRef::new(self.vertices[0], self.vertices[1])
    }

    pub fn last_edge(&self) -> EdgeRef {
        let s = self.vertices.len();
        EdgeRef::new(self.vertices[s - 2], self.vertices[s - 1])
    }

    /// Every step is an edge of the reflexive host.
    pub fn is_walk_in(&self, g: &Graph) -> bool {
        self.vertices.iter().all(|&v| v < g.n())
            && self.vertices.windows(2).all(|w| g.adjacent(w[0], w[1]))
    }
}

// ---------------------------------------------------------------------------
// certificate types
// ---------------------------------------------------------------------------

/// NO-certificate: an odd set of edges e0..e2k, each avoiding a walk that
/// begins with e(i+k) and ends with e(i+k+1) (indices mod 2k+1).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeakEdgeAsteroid {
    edges: Vec<EdgeRef>,
    walks: Vec<Walk>,
}

impl WeakEdgeAsteroid {
    pub fn new(edges: Vec<EdgeRef>, walks: Vec<Walk>) -> Self {
        WeakEdgeAsteroid { edges, walks }
    }

    pub fn edges(&self) -> &[EdgeRef] {
        &self.edges
    }

    /// walks()[i] is the walk avoided by edges()[i].
    pub fn walks(&self) -> &[Walk] {
        &self.walks
    }

    /// Line-oriented serialization: kind tag, edge lines, one walk per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("weak-edge-asteroid {}\n", self.edges.len());
        for e in &self.edges {
            out.push_str(&format!("e {e}\n"));
        }
        for w in &self.walks {
            out.push('w');
            for v in w.vertices() {
                out.push_str(&format!(" {v}"));
            }
            out.push('\n');
        }
        out
    }
}

/// An odd set of vertices x0..x2k with walks connecting x(i+k) and x(i+k+1),
/// each containing no neighbour of xi (xi itself included, via its loop).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Asteroid {
    vertices: Vec<usize>,
    walks: Vec<Walk>,
}

impl Asteroid {
    pub fn new(vertices: Vec<usize>, walks: Vec<Walk>) -> Self {
        Asteroid { vertices, walks }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// walks()[i] is the walk missed by vertices()[i].
    pub fn walks(&self) -> &[Walk] {
        &self.walks
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("asteroid {}\n", self.vertices.len());
        for v in &self.vertices {
            out.push_str(&format!("v {v}\n"));
        }
        for w in &self.walks {
            out.push('w');
            for v in w.vertices() {
                out.push_str(&format!(" {v}"));
            }
            out.push('\n');
        }
        out
    }
}

// ---------------------------------------------------------------------------
// verifiers
// ---------------------------------------------------------------------------

fn odd_count(len: usize, what: &str) -> Result<usize> {
    if len < 3 || len % 2 == 0 {
        return Err(Error::MalformedCertificate(format!(
            "{what} count must be odd and at least 3, got {len}"
        )));
    }
    Ok((len - 1) / 2)
}

/// Checks a weak edge-asteroid against its host graph. Structural
/// malformation (even count, walk endpoint mismatch, out-of-range indices)
/// is an error, distinct from a clean false.
pub fn verify_weak_edge_asteroid(g: &Graph, w: &WeakEdgeAsteroid) -> Result<bool> {
    let m = w.edges.len();
    let k = odd_count(m, "edge")?;
    if w.walks.len() != m {
        return Err(Error::MalformedCertificate(format!(
            "expected {m} walks, got {}",
            w.walks.len()
        )));
    }
    for e in &w.edges {
        if e.y() >= g.n() {
            return Err(Error::MalformedCertificate(format!("edge {e} out of range")));
        }
    }
    for (i, walk) in w.walks.iter().enumerate() {
        if walk.vertices().iter().any(|&v| v >= g.n()) {
            return Err(Error::MalformedCertificate(format!("walk {i} out of range")));
        }
        if walk.first_edge() != w.edges[(i + k) % m] || walk.last_edge() != w.edges[(i + k + 1) % m] {
            return Err(Error::MalformedCertificate(format!(
                "walk {i} does not run from edge {} to edge {}",
                (i + k) % m,
                (i + k + 1) % m
            )));
        }
    }
    for (i, walk) in w.walks.iter().enumerate() {
        if !g.is_edge(&w.edges[i]) || !walk.is_walk_in(g) {
            return Ok(false);
        }
        for step in walk.steps() {
            if !avoids_unchecked(g, &w.edges[i], &step) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks an asteroid against a reflexive host graph.
pub fn verify_asteroid(h: &Graph, a: &Asteroid) -> Result<bool> {
    let m = a.vertices.len();
    let k = odd_count(m, "vertex")?;
    if a.walks.len() != m {
        return Err(Error::MalformedCertificate(format!(
            "expected {m} walks, got {}",
            a.walks.len()
        )));
    }
    for &v in &a.vertices {
        if v >= h.n() {
            return Err(Error::MalformedCertificate(format!("vertex {v} out of range")));
        }
    }
    for (i, walk) in a.walks.iter().enumerate() {
        if walk.vertices().iter().any(|&v| v >= h.n()) {
            return Err(Error::MalformedCertificate(format!("walk {i} out of range")));
        }
        let first = *walk.vertices().first().unwrap();
        let last = *walk.vertices().last().unwrap();
        if first != a.vertices[(i + k) % m] || last != a.vertices[(i + k + 1) % m] {
            return Err(Error::MalformedCertificate(format!(
                "walk {i} does not connect vertices {} and {}",
                (i + k) % m,
                (i + k + 1) % m
            )));
        }
    }
    for (i, walk) in a.walks.iter().enumerate() {
        if !walk.is_walk_in(h) {
            return Ok(false);
        }
        // a reflexive host makes xi its own neighbour
        if walk.vertices().iter().any(|&v| h.adjacent(a.vertices[i], v)) {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// invertible pair -> weak edge-asteroid
// ---------------------------------------------------------------------------

/// Unfolds an invertible-pair path into a weak edge-asteroid. The output is
/// checked against the verifier; failure is a bug, never valid output.
pub fn extract_weak_edge_asteroid(g: &Graph, ip: &InvertiblePair) -> WeakEdgeAsteroid {
    let t = ip.path.len() - 1;
    // t = 1 would need the loop at u or v to be missing
    assert!(t >= 2, "invertible-pair paths have length at least 2");
    debug_assert_eq!((ip.path[0].u, ip.path[0].v), (ip.u, ip.v));
    debug_assert_eq!((ip.path[t].u, ip.path[t].v), (ip.v, ip.u));

    // closed walk u0..u(2t-1): first components then second components
    let mut u: Vec<usize> = Vec::with_capacity(2 * t);
    u.extend(ip.path[..t].iter().map(|p| p.u));
    u.extend(ip.path[..t].iter().map(|p| p.v));
    let at = |i: usize| u[i % (2 * t)];

    let (edges, walks) = if t % 2 == 1 {
        let edges: Vec<EdgeRef> = (0..t).map(|i| EdgeRef::new(at(2 * i), at(2 * i + 1))).collect();
        let walks: Vec<Walk> = (0..t)
            .map(|i| {
                Walk::new((0..4).map(|s| at(2 * i + t - 1 + s)).collect())
            })
            .collect();
        (edges, walks)
    } else {
        let edges: Vec<EdgeRef> = (0..2 * t - 1).map(|i| EdgeRef::new(at(i), at(i + 1))).collect();
        let walks: Vec<Walk> = (0..2 * t - 1)
            .map(|i| {
                if i <= t - 2 {
                    Walk::new(vec![at(i + t - 1), at(i + t), at(i + t + 1)])
                } else if i == t - 1 {
                    Walk::new(vec![at(2 * t - 2), at(2 * t - 1), at(0), at(1)])
                } else {
                    Walk::new(vec![at(i - t), at(i - t + 1), at(i - t + 2)])
                }
            })
            .collect();
        (edges, walks)
    };

    let wea = WeakEdgeAsteroid::new(edges, walks);
    match verify_weak_edge_asteroid(g, &wea) {
        Ok(true) => wea,
        other => panic!("unfolded weak edge-asteroid failed verification ({other:?}); this is a bug"),
    }
}

// ---------------------------------------------------------------------------
// weak edge-asteroid -> invertible pair
// ---------------------------------------------------------------------------

/// Recovers an invertible pair from a weak edge-asteroid: picks endpoints
/// u0 of e0 and vk of ek (least indices, constrained to a C4 edge when the
/// two edges induce a C4) and confirms (u0, vk) ~ (vk, u0) by pair-graph
/// reachability.
pub fn invertible_pair_from_wea(g: &Graph, w: &WeakEdgeAsteroid) -> Result<(PairNode, PairNode)> {
    match verify_weak_edge_asteroid(g, w) {
        Ok(true) => {}
        Ok(false) => {
            return Err(Error::MalformedCertificate(
                "weak edge-asteroid does not verify in this graph".into(),
            ))
        }
        Err(e) => return Err(e),
    }
    let k = (w.edges.len() - 1) / 2;
    let e0 = &w.edges[0];
    let ek = &w.edges[k];
    let c4 = edges_induce_c4(g, e0, ek);
    let pg = build_pair_graph(g);
    for u0 in e0.endpoints() {
        for vk in ek.endpoints() {
            if c4 && !g.adjacent(u0, vk) {
                continue;
            }
            let p = PairNode::new(u0, vk);
            if pg.same_component(p, p.swapped()) {
                return Ok((p, p.swapped()));
            }
        }
    }
    panic!("no admissible endpoint choice yields an invertible pair; this is a bug");
}

// ---------------------------------------------------------------------------
// weak edge-asteroid <-> asteroid in the complement of G*
// ---------------------------------------------------------------------------

/// Re-encodes a weak edge-asteroid of g as an asteroid in the reflexive
/// complement of the avoidance graph G*: vertices are the asteroid edges as
/// G*-vertices, walks are the walks' consecutive steps.
pub fn wea_to_complement_asteroid(g: &Graph, w: &WeakEdgeAsteroid) -> Result<Asteroid> {
    match verify_weak_edge_asteroid(g, w) {
        Ok(true) => {}
        Ok(false) => {
            return Err(Error::MalformedCertificate(
                "weak edge-asteroid does not verify in this graph".into(),
            ))
        }
        Err(e) => return Err(e),
    }
    let star = build_avoidance_graph(g);
    let index = |e: &EdgeRef| {
        star.index_of(e)
            .expect("certificate edges are edges of g, hence G* vertices")
    };
    let vertices: Vec<usize> = w.edges.iter().map(index).collect();
    let walks: Vec<Walk> = w
        .walks
        .iter()
        .map(|walk| Walk::new(walk.steps().iter().map(index).collect()))
        .collect();
    let asteroid = Asteroid::new(vertices, walks);
    let host = star.graph.reflexive_complement();
    match verify_asteroid(&host, &asteroid) {
        Ok(true) => Ok(asteroid),
        other => panic!("re-encoded asteroid failed verification ({other:?}); this is a bug"),
    }
}

/// Converts an asteroid in the reflexive complement of G* back into a weak
/// edge-asteroid of g, inserting bridging edges between consecutive
/// non-avoiding walk elements as in the constructive proof.
pub fn complement_asteroid_to_wea(g: &Graph, a: &Asteroid) -> Result<WeakEdgeAsteroid> {
    let star = build_avoidance_graph(g);
    let host = star.graph.reflexive_complement();
    match verify_asteroid(&host, a) {
        Ok(true) => {}
        Ok(false) => {
            return Err(Error::MalformedCertificate(
                "asteroid does not verify in the complement of G*".into(),
            ))
        }
        Err(e) => return Err(e),
    }
    let edges: Vec<EdgeRef> = a.vertices.iter().map(|&v| *star.edge_of(v)).collect();
    let walks: Vec<Walk> = a
        .walks
        .iter()
        .enumerate()
        .map(|(i, walk)| {
            let seq: Vec<EdgeRef> = walk.vertices().iter().map(|&v| *star.edge_of(v)).collect();
            stitch_walk(g, &edges[i], &seq)
        })
        .collect();
    let wea = WeakEdgeAsteroid::new(edges, walks);
    match verify_weak_edge_asteroid(g, &wea) {
        Ok(true) => Ok(wea),
        other => panic!("stitched weak edge-asteroid failed verification ({other:?}); this is a bug"),
    }
}

/// Turns a sequence of pairwise-consecutive G*-walk edges into a vertex walk
/// of g traversing them in order, every step avoided by `avoided`.
fn stitch_walk(g: &Graph, avoided: &EdgeRef, seq: &[EdgeRef]) -> Walk {
    let first = seq[0];
    let mut vertices = vec![first.x(), first.y()];
    let mut cur = first.y();
    let mut prev = first;
    for &f in &seq[1..] {
        if f == prev {
            continue; // loop step of the complement walk; the edge is already traversed
        }
        if !f.contains(cur) {
            let other_prev = if prev.x() == cur { prev.y() } else { prev.x() };
            if f.contains(other_prev) {
                // step back over prev to its other endpoint
                vertices.push(other_prev);
                cur = other_prev;
            } else {
                let bridge = bridging_edge(g, avoided, &prev, &f);
                let (a, b) = if prev.contains(bridge.x()) {
                    (bridge.x(), bridge.y())
                } else {
                    (bridge.y(), bridge.x())
                };
                if cur != a {
                    vertices.push(a);
                }
                vertices.push(b);
                cur = b;
            }
        }
        // traverse f from cur
        if f.is_loop() {
            vertices.push(cur);
        } else {
            let next = if f.x() == cur { f.y() } else { f.x() };
            vertices.push(next);
            cur = next;
        }
        prev = f;
    }
    Walk::new(vertices)
}

/// The least edge of g with one endpoint in each of e and f that avoids
/// `avoided`. The constructive proof guarantees one exists for consecutive
/// non-avoiding walk elements.
fn bridging_edge(g: &Graph, avoided: &EdgeRef, e: &EdgeRef, f: &EdgeRef) -> EdgeRef {
    let mut candidates: Vec<EdgeRef> = Vec::new();
    for a in [e.x(), e.y()] {
        for b in [f.x(), f.y()] {
            if a != b && g.adjacent(a, b) {
                candidates.push(EdgeRef::new(a, b));
            }
        }
    }
    candidates.sort_unstable();
    candidates.dedup();
    for cand in candidates {
        if avoids_unchecked(g, avoided, &cand) {
            return cand;
        }
    }
    panic!("no bridging edge between {e} and {f}; this contradicts the proof and is a bug");
}

// ---------------------------------------------------------------------------
// YES-side ordering search
// ---------------------------------------------------------------------------

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SearchOutcome {
    Found(VertexOrdering),
    /// The full space was searched and no Slash-free ordering exists.
    Exhausted,
    /// The node budget was hit before the space was exhausted.
    BudgetExceeded,
}

impl SearchOutcome {
    pub fn found(self) -> Option<VertexOrdering> {
        match self {
            SearchOutcome::Found(ord) => Some(ord),
            _ => None,
        }
    }
}

/// Backtracking search for a Slash-free ordering over prefix orderings,
/// pruning any prefix that already exhibits a Slash with both rows and both
/// columns placed. Deterministic: vertices are tried in ascending order.
pub fn search_strong_ordering(g: &Graph, node_budget: usize) -> SearchOutcome {
    let n = g.n();
    if n == 0 {
        return SearchOutcome::Found(VertexOrdering::identity(0));
    }
    let mut prefix: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let mut nodes = 0usize;
    match place(g, &mut prefix, &mut used, &mut nodes, node_budget) {
        Some(perm) => {
            let ord = VertexOrdering::new(perm).expect("search yields a permutation");
            debug_assert!(crate::graph::is_slash_free_ordering(g, &ord).unwrap());
            SearchOutcome::Found(ord)
        }
        None if nodes > node_budget => SearchOutcome::BudgetExceeded,
        None => SearchOutcome::Exhausted,
    }
}

fn place(
    g: &Graph,
    prefix: &mut Vec<usize>,
    used: &mut [bool],
    nodes: &mut usize,
    budget: usize,
) -> Option<Vec<usize>> {
    if prefix.len() == g.n() {
        return Some(prefix.clone());
    }
    for v in 0..g.n() {
        if used[v] {
            continue;
        }
        *nodes += 1;
        if *nodes > budget {
            return None;
        }
        if prefix_admits(g, prefix, v) {
            prefix.push(v);
            used[v] = true;
            let found = place(g, prefix, used, nodes, budget);
            prefix.pop();
            used[v] = false;
            if found.is_some() || *nodes > budget {
                return found;
            }
        }
    }
    None
}

/// No Slash whose four positions all lie in the prefix extended by v. By
/// symmetry of the permuted matrix it suffices to check quadruples whose
/// largest position is the column holding v.
fn prefix_admits(g: &Graph, prefix: &[usize], v: usize) -> bool {
    let j = prefix.len();
    for i1 in 0..j {
        if !g.adjacent(prefix[i1], v) {
            continue;
        }
        for i2 in i1 + 1..j {
            if g.adjacent(prefix[i2], v) {
                continue;
            }
            for (k, &pk) in prefix.iter().enumerate() {
                if k != i1 && !g.adjacent(prefix[i1], pk) && g.adjacent(prefix[i2], pk) {
                    return false;
                }
            }
        }
    }
    true
}
