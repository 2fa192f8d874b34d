//! Graph representations (reflexive, simple, bipartite), vertex orderings,
//! the Slash forbidden-submatrix checks and the edge-list text format.

use std::fmt;

use crate::error::{Error, Result};

/// The forbidden 2x2 pattern with rows 01, 10.
pub const SLASH: [[bool; 2]; 2] = [[false, true], [true, false]];

// ---------------------------------------------------------------------------
// bit-set adjacency storage
// ---------------------------------------------------------------------------

/// Square symmetric boolean matrix backed by u64 rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub(crate) struct BitSquare {
    n: usize,
    w: usize,
    words: Vec<u64>,
}

impl BitSquare {
    pub(crate) fn new(n: usize) -> Self {
        let w = n.div_ceil(64).max(1);
        BitSquare { n, w, words: vec![0; n * w] }
    }

    #[inline]
    pub(crate) fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.n && c < self.n);
        self.words[r * self.w + c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    pub(crate) fn set(&mut self, r: usize, c: usize, val: bool) {
        let word = &mut self.words[r * self.w + c / 64];
        if val {
            *word |= 1u64 << (c % 64);
        } else {
            *word &= !(1u64 << (c % 64));
        }
    }

    #[inline]
    pub(crate) fn row(&self, r: usize) -> &[u64] {
        &self.words[r * self.w..(r + 1) * self.w]
    }
}

/// Iterates the indices `i < n` with `a[i] && !b[i]`, ascending.
pub(crate) fn iter_and_not<'a>(
    a: &'a [u64],
    b: &'a [u64],
    n: usize,
) -> impl Iterator<Item = usize> + 'a {
    a.iter().zip(b).enumerate().flat_map(move |(wi, (&aw, &bw))| {
        let mut word = aw & !bw;
        std::iter::from_fn(move || {
            if word == 0 {
                return None;
            }
            let bit = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(wi * 64 + bit)
        })
    })
    .take_while(move |&i| i < n)
}

// ---------------------------------------------------------------------------
// edges and orderings
// ---------------------------------------------------------------------------

/// An unordered edge `{x, y}` with `x = y` allowed (a loop), stored as (min, max).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeRef {
    x: usize,
    y: usize,
}

impl EdgeRef {
    pub fn new(a: usize, b: usize) -> Self {
        EdgeRef { x: a.min(b), y: a.max(b) }
    }

    pub fn x(&self) -> usize {
        self.x
    }

    pub fn y(&self) -> usize {
        self.y
    }

    pub fn is_loop(&self) -> bool {
        self.x == self.y
    }

    /// The two endpoints; a loop yields its vertex twice.
    pub fn endpoints(&self) -> [usize; 2] {
        [self.x, self.y]
    }

    pub fn contains(&self, v: usize) -> bool {
        self.x == v || self.y == v
    }

    pub fn intersects(&self, other: &EdgeRef) -> bool {
        self.contains(other.x) || self.contains(other.y)
    }
}

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.x, self.y)
    }
}

/// A permutation of the vertices 0..n-1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VertexOrdering {
    perm: Vec<usize>,
}

impl VertexOrdering {
    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &v in &perm {
            if v >= n || seen[v] {
                return Err(Error::InvalidPermutation(n));
            }
            seen[v] = true;
        }
        Ok(VertexOrdering { perm })
    }

    pub fn identity(n: usize) -> Self {
        VertexOrdering { perm: (0..n).collect() }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.perm
    }
}

impl fmt::Display for VertexOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for &v in &self.perm {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// reflexive graphs
// ---------------------------------------------------------------------------

/// A finite reflexive graph: every vertex carries an implicit loop, so the
/// adjacency matrix has an all-ones diagonal. Loops are never stored in edge
/// lists.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adj: BitSquare,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    // labels are presentation-only
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    /// The edgeless reflexive graph on `n` vertices (loops only).
    pub fn new(n: usize) -> Self {
        let mut adj = BitSquare::new(n);
        for v in 0..n {
            adj.set(v, v, true);
        }
        Graph { n, adj, labels: None }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range");
            g.add_edge(u, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// True for u = v (reflexivity) and for every stored edge, symmetrically.
    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.adj.set(u, v, true);
        self.adj.set(v, u, true);
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        self.adj.row(v)
    }

    /// True iff `e` is an edge of the graph; loops always are.
    pub fn is_edge(&self, e: &EdgeRef) -> bool {
        e.y < self.n && self.adjacent(e.x, e.y)
    }

    /// Non-loop edges in lexicographic order.
    pub fn non_loop_edges(&self) -> Vec<EdgeRef> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adjacent(u, v) {
                    out.push(EdgeRef::new(u, v));
                }
            }
        }
        out
    }

    pub fn set_labels(&mut self, labels: Vec<String>) {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn decode(text: &str) -> Result<Self> {
        let (n, edges) = parse_edge_list(text, false)?;
        Ok(Graph::from_edges(n, &edges))
    }

    /// Canonical text form: loops omitted, edges sorted lexicographically.
    pub fn encode(&self) -> String {
        let edges = self.non_loop_edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for e in edges {
            out.push_str(&format!("{e}\n"));
        }
        out
    }
}

// ---------------------------------------------------------------------------
// simple graphs
// ---------------------------------------------------------------------------

/// An irreflexive graph (all-false diagonal). Houses the avoidance graph and
/// comparability-recognition inputs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimpleGraph {
    n: usize,
    adj: BitSquare,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph { n, adj: BitSquare::new(n) }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range");
            g.add_edge(u, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loop {u} {u} in a simple graph");
        self.adj.set(u, v, true);
        self.adj.set(v, u, true);
    }

    #[inline]
    pub(crate) fn row(&self, v: usize) -> &[u64] {
        self.adj.row(v)
    }

    pub fn edges(&self) -> Vec<EdgeRef> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.adjacent(u, v) {
                    out.push(EdgeRef::new(u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.adjacent(v, u)).collect()
    }

    /// The reflexive graph whose non-loop edges are the non-edges of `self`.
    pub fn reflexive_complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.adjacent(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn decode(text: &str) -> Result<Self> {
        let (n, edges) = parse_edge_list(text, true)?;
        Ok(SimpleGraph::from_edges(n, &edges))
    }

    pub fn encode(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for e in edges {
            out.push_str(&format!("{e}\n"));
        }
        out
    }
}

/// Complement of the underlying loopless graph of a reflexive graph.
pub fn complement_simple(g: &Graph) -> SimpleGraph {
    let mut out = SimpleGraph::new(g.n);
    for u in 0..g.n {
        for v in u + 1..g.n {
            if !g.adjacent(u, v) {
                out.add_edge(u, v);
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// bigraphs
// ---------------------------------------------------------------------------

/// A two-sided bipartite graph given by its nx-by-ny biadjacency matrix; the
/// representation only admits edges crossing the bipartition.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bigraph {
    nx: usize,
    ny: usize,
    biadj: Vec<bool>,
}

impl Bigraph {
    pub fn new(nx: usize, ny: usize) -> Self {
        Bigraph { nx, ny, biadj: vec![false; nx * ny] }
    }

    pub fn from_edges(nx: usize, ny: usize, edges: &[(usize, usize)]) -> Self {
        let mut h = Bigraph::new(nx, ny);
        for &(x, y) in edges {
            assert!(x < nx && y < ny, "bigraph edge ({x}, {y}) out of range");
            h.add_edge(x, y);
        }
        h
    }

    pub fn nx(&self) -> usize {
        self.nx
    }

    pub fn ny(&self) -> usize {
        self.ny
    }

    #[inline]
    pub fn adjacent(&self, x: usize, y: usize) -> bool {
        self.biadj[x * self.ny + y]
    }

    pub fn add_edge(&mut self, x: usize, y: usize) {
        self.biadj[x * self.ny + y] = true;
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.nx {
            for y in 0..self.ny {
                if self.adjacent(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.biadj.iter().filter(|&&b| b).count()
    }

    pub fn decode(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let header = lines.next().ok_or_else(|| Error::Malformed("empty input".into()))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(Error::Malformed(format!("bigraph header must be \"nx ny m\", got {header:?}")));
        }
        let nx = parse_count(fields[0])?;
        let ny = parse_count(fields[1])?;
        let m = parse_count(fields[2])?;
        let mut h = Bigraph::new(nx, ny);
        let mut listed = 0usize;
        for line in lines {
            let (x, y) = parse_edge_line(line)?;
            if x >= nx {
                return Err(Error::OutOfRange { index: x, n: nx });
            }
            if y >= ny {
                return Err(Error::OutOfRange { index: y, n: ny });
            }
            h.add_edge(x, y);
            listed += 1;
        }
        if listed != m {
            return Err(Error::Malformed(format!("header declares {m} edges, found {listed}")));
        }
        Ok(h)
    }

    pub fn encode(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {} {}\n", self.nx, self.ny, edges.len());
        for (x, y) in edges {
            out.push_str(&format!("{x} {y}\n"));
        }
        out
    }
}

// ---------------------------------------------------------------------------
// text format
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GraphKind {
    Reflexive,
    Simple,
    Bigraph,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Decoded {
    Reflexive(Graph),
    Simple(SimpleGraph),
    Bigraph(Bigraph),
}

pub fn decode_graph(text: &str, kind: GraphKind) -> Result<Decoded> {
    match kind {
        GraphKind::Reflexive => Graph::decode(text).map(Decoded::Reflexive),
        GraphKind::Simple => SimpleGraph::decode(text).map(Decoded::Simple),
        GraphKind::Bigraph => Bigraph::decode(text).map(Decoded::Bigraph),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn parse_count(field: &str) -> Result<usize> {
    field
        .parse()
        .map_err(|_| Error::Malformed(format!("expected a count, got {field:?}")))
}

fn parse_edge_line(line: &str) -> Result<(usize, usize)> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Malformed(format!("expected \"u v\", got {line:?}")));
    }
    Ok((parse_count(fields[0])?, parse_count(fields[1])?))
}

fn parse_edge_list(text: &str, simple: bool) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut lines = content_lines(text);
    let header = lines.next().ok_or_else(|| Error::Malformed("empty input".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Malformed(format!("header must be \"n m\", got {header:?}")));
    }
    let n = parse_count(fields[0])?;
    let m = parse_count(fields[1])?;
    let mut edges = Vec::new();
    let mut listed = 0usize;
    for line in lines {
        let (u, v) = parse_edge_line(line)?;
        if u >= n {
            return Err(Error::OutOfRange { index: u, n });
        }
        if v >= n {
            return Err(Error::OutOfRange { index: v, n });
        }
        if u == v {
            if simple {
                return Err(Error::LoopInSimpleGraph(u));
            }
            // loops are implicit in reflexive graphs; the line is redundant
        } else {
            edges.push((u, v));
        }
        listed += 1;
    }
    if listed != m {
        return Err(Error::Malformed(format!("header declares {m} edges, found {listed}")));
    }
    Ok((n, edges))
}

// ---------------------------------------------------------------------------
// Slash checks
// ---------------------------------------------------------------------------

/// Checks whether the symmetric ordering of g's adjacency matrix given by
/// `ord` is free of the Slash submatrix: no row positions i < j and column
/// positions k < l with entries 0, 1 / 1, 0.
pub fn is_slash_free_ordering(g: &Graph, ord: &VertexOrdering) -> Result<bool> {
    if ord.len() != g.n {
        return Err(Error::InvalidPermutation(g.n));
    }
    let p = ord.as_slice();
    let n = g.n;
    let at = |i: usize, j: usize| g.adjacent(p[i], p[j]);
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                if at(i, k) || !at(j, k) {
                    continue;
                }
                for l in k + 1..n {
                    if at(i, l) && !at(j, l) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Same pattern check on the permuted biadjacency matrix of a bigraph.
pub fn is_bigraph_slash_free(
    h: &Bigraph,
    row_ord: &VertexOrdering,
    col_ord: &VertexOrdering,
) -> Result<bool> {
    if row_ord.len() != h.nx {
        return Err(Error::InvalidPermutation(h.nx));
    }
    if col_ord.len() != h.ny {
        return Err(Error::InvalidPermutation(h.ny));
    }
    let rp = row_ord.as_slice();
    let cp = col_ord.as_slice();
    let at = |i: usize, k: usize| h.adjacent(rp[i], cp[k]);
    for i in 0..h.nx {
        for j in i + 1..h.nx {
            for k in 0..h.ny {
                if at(i, k) || !at(j, k) {
                    continue;
                }
                for l in k + 1..h.ny {
                    if at(i, l) && !at(j, l) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn reflexive_path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges)
    }

    pub(crate) fn reflexive_cycle(n: usize) -> Graph {
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges)
    }

    #[test]
    fn decode_p4() {
        let g = Graph::decode("4 3\n0 1\n1 2\n2 3").unwrap();
        assert_eq!(g, reflexive_path(4));
        assert!(g.adjacent(0, 0), "loops are implicit");
        assert!(!g.adjacent(0, 2));
    }

    #[test]
    fn decode_k1() {
        let g = Graph::decode("1 0").unwrap();
        assert_eq!(g.n(), 1);
        assert!(g.adjacent(0, 0));
        assert!(g.non_loop_edges().is_empty());
    }

    #[test]
    fn decode_simple_rejects_loop() {
        let err = SimpleGraph::decode("3 1\n0 0").unwrap_err();
        assert!(matches!(err, Error::LoopInSimpleGraph(0)));
    }

    #[test]
    fn decode_rejects_out_of_range_and_bad_header() {
        assert!(matches!(
            Graph::decode("2 1\n0 5"),
            Err(Error::OutOfRange { index: 5, n: 2 })
        ));
        assert!(Graph::decode("nonsense").is_err());
        assert!(Graph::decode("3 2\n0 1").is_err(), "edge count mismatch");
    }

    #[test]
    fn decode_allows_comments_and_duplicate_edges() {
        let g = Graph::decode("# a path\n4 4\n0 1\n1 2\n2 3\n2 3").unwrap();
        assert_eq!(g, reflexive_path(4));
    }

    #[test]
    fn decode_reflexive_permits_loop_lines() {
        let g = Graph::decode("2 2\n0 0\n0 1").unwrap();
        assert_eq!(g, Graph::from_edges(2, &[(0, 1)]));
    }

    #[test]
    fn complement_of_k3_is_edgeless() {
        let k3 = Graph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]);
        let c = complement_simple(&k3);
        assert_eq!(c.edge_count(), 0);
    }

    #[test]
    fn complement_of_p4() {
        // abcd = 0123; complement is the path c-a-d-b
        let c = complement_simple(&reflexive_path(4));
        let expect: Vec<EdgeRef> = [(0, 2), (0, 3), (1, 3)]
            .iter()
            .map(|&(a, b)| EdgeRef::new(a, b))
            .collect();
        assert_eq!(c.edges(), expect);
    }

    #[test]
    fn complement_of_c5_is_c5() {
        let c = complement_simple(&reflexive_cycle(5));
        assert_eq!(c.edge_count(), 5);
        for v in 0..5 {
            assert_eq!(c.neighbors(v).len(), 2);
        }
    }

    #[test]
    fn p4_identity_ordering_is_slash_free() {
        let g = reflexive_path(4);
        assert!(is_slash_free_ordering(&g, &VertexOrdering::identity(4)).unwrap());
    }

    #[test]
    fn c4_ordering_abdc_is_slash_free() {
        let g = reflexive_cycle(4);
        let ord = VertexOrdering::new(vec![0, 1, 3, 2]).unwrap();
        assert!(is_slash_free_ordering(&g, &ord).unwrap());
        // the natural cycle order is not
        assert!(!is_slash_free_ordering(&g, &VertexOrdering::identity(4)).unwrap());
    }

    #[test]
    fn k33_has_no_slash_free_ordering() {
        let g = complete_bipartite_reflexive(3, 3);
        let mut perm = vec![0, 1, 2, 3, 4, 5];
        let mut any = false;
        permute_all(&mut perm, 0, &mut |p| {
            let ord = VertexOrdering::new(p.to_vec()).unwrap();
            if is_slash_free_ordering(&g, &ord).unwrap() {
                any = true;
            }
        });
        assert!(!any);
    }

    pub(crate) fn complete_bipartite_reflexive(a: usize, b: usize) -> Graph {
        let mut g = Graph::new(a + b);
        for x in 0..a {
            for y in 0..b {
                g.add_edge(x, a + y);
            }
        }
        g
    }

    fn permute_all(perm: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == perm.len() {
            f(perm);
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            permute_all(perm, k + 1, f);
            perm.swap(k, i);
        }
    }

    #[test]
    fn complete_graph_every_ordering_slash_free() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let mut perm = vec![0, 1, 2, 3];
        permute_all(&mut perm, 0, &mut |p| {
            let ord = VertexOrdering::new(p.to_vec()).unwrap();
            assert!(is_slash_free_ordering(&g, &ord).unwrap());
        });
    }

    #[test]
    fn bigraph_slash_check() {
        let one = Bigraph::from_edges(1, 1, &[(0, 0)]);
        let id1 = VertexOrdering::identity(1);
        assert!(is_bigraph_slash_free(&one, &id1, &id1).unwrap());

        // 2K2 biadjacency [[1,0],[0,1]]
        let two = Bigraph::from_edges(2, 2, &[(0, 0), (1, 1)]);
        let id2 = VertexOrdering::identity(2);
        let swap = VertexOrdering::new(vec![1, 0]).unwrap();
        assert!(is_bigraph_slash_free(&two, &id2, &id2).unwrap());
        assert!(!is_bigraph_slash_free(&two, &id2, &swap).unwrap());
    }

    #[test]
    fn decode_bigraph() {
        let h = Bigraph::decode("2 3 2\n0 2\n1 0").unwrap();
        assert!(h.adjacent(0, 2) && h.adjacent(1, 0));
        assert!(matches!(
            Bigraph::decode("2 2 1\n0 2"),
            Err(Error::OutOfRange { index: 2, n: 2 })
        ));
    }

    #[test]
    fn ordering_validation() {
        assert!(VertexOrdering::new(vec![0, 2, 1]).is_ok());
        assert!(VertexOrdering::new(vec![0, 0, 1]).is_err());
        assert!(VertexOrdering::new(vec![0, 3, 1]).is_err());
        let g = reflexive_path(3);
        assert!(is_slash_free_ordering(&g, &VertexOrdering::identity(4)).is_err());
    }

    #[test]
    fn decode_graph_dispatch() {
        let d = decode_graph("2 1\n0 1", GraphKind::Reflexive).unwrap();
        assert!(matches!(d, Decoded::Reflexive(_)));
        let d = decode_graph("2 1\n0 1", GraphKind::Simple).unwrap();
        assert!(matches!(d, Decoded::Simple(_)));
        let d = decode_graph("2 2 1\n0 1", GraphKind::Bigraph).unwrap();
        assert!(matches!(d, Decoded::Bigraph(_)));
    }
}
