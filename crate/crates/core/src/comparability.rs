//! Comparability-graph recognition by iterative implication-class orientation,
//! with a mandatory transitivity verification of every produced orientation.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::graph::{complement_simple, iter_and_not, Graph, SimpleGraph};

/// A direction for each edge of a simple graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Orientation {
    n: usize,
    arcs: BTreeSet<(usize, usize)>,
}

impl Orientation {
    pub fn new(n: usize) -> Self {
        Orientation { n, arcs: BTreeSet::new() }
    }

    pub fn from_arcs(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        Orientation { n, arcs: arcs.into_iter().collect() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_arc(&mut self, from: usize, to: usize) {
        assert!(!self.arcs.contains(&(to, from)), "edge oriented both ways");
        self.arcs.insert((from, to));
    }

    pub fn contains(&self, from: usize, to: usize) -> bool {
        self.arcs.contains(&(from, to))
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// True iff every edge of h carries exactly one direction and nothing else does.
    pub fn orients_exactly(&self, h: &SimpleGraph) -> bool {
        if self.n != h.n() {
            return false;
        }
        let mut covered = 0usize;
        for &(a, b) in &self.arcs {
            if a >= self.n || b >= self.n || !h.adjacent(a, b) || self.arcs.contains(&(b, a)) {
                return false;
            }
            covered += 1;
        }
        covered == h.edge_count()
    }
}

/// The partition of the 2m directed edge-instances into implication classes:
/// (a,b) forces (a,c) when bc is a non-edge, and (a,b) forces (c,b) when ac is
/// a non-edge. Classes are numbered by their least contained arc.
#[derive(Clone, Debug)]
pub struct ImplicationPartition {
    pub classes: Vec<Vec<(usize, usize)>>,
    class_id: HashMap<(usize, usize), usize>,
}

impl ImplicationPartition {
    pub fn class_of(&self, arc: (usize, usize)) -> Option<usize> {
        self.class_id.get(&arc).copied()
    }
}

/// Breadth-first closure of one arc's class over the arcs accepted by `alive`.
/// The seen buffer is a stamp array reused across calls (stamp == gen means
/// seen in this call). With `fail_on_reverse`, returns None as soon as the
/// class would contain an arc together with its reversal.
fn class_of_arc(
    h: &SimpleGraph,
    start: (usize, usize),
    alive: impl Fn(usize, usize) -> bool,
    fail_on_reverse: bool,
    stamp: &mut [u32],
    gen: u32,
) -> Option<Vec<(usize, usize)>> {
    let n = h.n();
    let id = |a: usize, b: usize| a * n + b;
    let mut queue = VecDeque::new();
    let mut class = Vec::new();
    stamp[id(start.0, start.1)] = gen;
    queue.push_back(start);
    while let Some((a, b)) = queue.pop_front() {
        class.push((a, b));
        // neighbours of a missing from N(b) extend along a; and vice versa
        for c in iter_and_not(h.row(a), h.row(b), n) {
            if c != b && alive(a, c) && stamp[id(a, c)] != gen {
                if fail_on_reverse && stamp[id(c, a)] == gen {
                    return None;
                }
                stamp[id(a, c)] = gen;
                queue.push_back((a, c));
            }
        }
        for c in iter_and_not(h.row(b), h.row(a), n) {
            if c != a && alive(c, b) && stamp[id(c, b)] != gen {
                if fail_on_reverse && stamp[id(b, c)] == gen {
                    return None;
                }
                stamp[id(c, b)] = gen;
                queue.push_back((c, b));
            }
        }
    }
    Some(class)
}

pub fn implication_classes(h: &SimpleGraph) -> ImplicationPartition {
    let n = h.n();
    let mut class_id = HashMap::new();
    let mut classes = Vec::new();
    let mut stamp = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            if a == b || !h.adjacent(a, b) || class_id.contains_key(&(a, b)) {
                continue;
            }
            let gen = classes.len() as u32 + 1;
            let mut class = class_of_arc(h, (a, b), |_, _| true, false, &mut stamp, gen)
                .expect("no early exit without fail_on_reverse");
            class.sort_unstable();
            let id = classes.len();
            for &arc in &class {
                class_id.insert(arc, id);
            }
            classes.push(class);
        }
    }
    ImplicationPartition { classes, class_id }
}

/// Returns a verified transitive orientation of h, or None iff h has none.
///
/// Repeatedly picks the least unoriented edge, computes its implication class
/// within the remaining graph, fails if the class meets its own reversal, and
/// otherwise orients it (flipped, if needed, so its least arc runs from the
/// smaller to the larger vertex index).
pub fn recognize_comparability(h: &SimpleGraph) -> Option<Orientation> {
    let n = h.n();
    let edges = h.edges();
    let mut alive = vec![false; n * n];
    for e in &edges {
        alive[e.x() * n + e.y()] = true;
        alive[e.y() * n + e.x()] = true;
    }
    let mut orientation = Orientation::new(n);
    let mut stamp = vec![0u32; n * n];
    let mut gen = 0u32;
    let mut cursor = 0;
    // edges only die, so scanning for the least remaining one is monotone
    while cursor < edges.len() {
        let (a, b) = (edges[cursor].x(), edges[cursor].y());
        if !alive[a * n + b] {
            cursor += 1;
            continue;
        }
        gen += 1;
        let class = class_of_arc(h, (a, b), |x, y| alive[x * n + y], true, &mut stamp, gen)?;
        let &(lx, ly) = class.iter().min().expect("class contains its seed");
        let flip = lx > ly;
        for &(x, y) in &class {
            let (from, to) = if flip { (y, x) } else { (x, y) };
            orientation.add_arc(from, to);
            alive[x * n + y] = false;
            alive[y * n + x] = false;
        }
    }
    assert!(
        verify_transitive(h, &orientation),
        "class orientation succeeded but is not transitive; this is a bug"
    );
    Some(orientation)
}

/// True iff for all x, y, z: arcs x->y and y->z imply the edge xz is present
/// and oriented x->z.
pub fn verify_transitive(h: &SimpleGraph, o: &Orientation) -> bool {
    if !o.orients_exactly(h) {
        return false;
    }
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); h.n()];
    for (a, b) in o.arcs() {
        out[a].push(b);
    }
    for (x, y) in o.arcs() {
        for &z in &out[y] {
            if z == x || !h.adjacent(x, z) || !o.contains(x, z) {
                return false;
            }
        }
    }
    true
}

/// A reflexive graph is cocomparability iff its simple complement is a
/// comparability graph.
pub fn recognize_cocomparability(g: &Graph) -> bool {
    recognize_comparability(&complement_simple(g)).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;

    fn simple_path(n: usize) -> SimpleGraph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        SimpleGraph::from_edges(n, &edges)
    }

    fn simple_cycle(n: usize) -> SimpleGraph {
        let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        edges.push((n - 1, 0));
        SimpleGraph::from_edges(n, &edges)
    }

    #[test]
    fn classes_of_p3() {
        let part = implication_classes(&simple_path(3));
        assert_eq!(part.classes.len(), 2);
        assert_eq!(part.classes[0], vec![(0, 1), (2, 1)]);
        assert_eq!(part.classes[1], vec![(1, 0), (1, 2)]);
    }

    #[test]
    fn classes_of_k3_are_singletons() {
        let k3 = SimpleGraph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]);
        let part = implication_classes(&k3);
        assert_eq!(part.classes.len(), 6);
        assert!(part.classes.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn classes_of_2k2_are_singletons() {
        let g = SimpleGraph::from_edges(4, &[(0, 1), (2, 3)]);
        let part = implication_classes(&g);
        assert_eq!(part.classes.len(), 4);
        assert!(part.classes.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn class_reversal_symmetry() {
        for h in [simple_path(5), simple_cycle(6), simple_cycle(5)] {
            let part = implication_classes(&h);
            for class in &part.classes {
                let rev_id = part.class_of((class[0].1, class[0].0)).unwrap();
                assert_eq!(part.classes[rev_id].len(), class.len());
                for &(x, y) in class {
                    assert_eq!(part.class_of((y, x)), Some(rev_id));
                }
            }
        }
    }

    #[test]
    fn orient_c4() {
        let o = recognize_comparability(&simple_cycle(4)).unwrap();
        // a and c are the sources
        for arc in [(0, 1), (0, 3), (2, 1), (2, 3)] {
            assert!(o.contains(arc.0, arc.1), "missing {arc:?}");
        }
    }

    #[test]
    fn c5_is_not_comparability() {
        assert!(recognize_comparability(&simple_cycle(5)).is_none());
    }

    #[test]
    fn orient_p3() {
        let o = recognize_comparability(&simple_path(3)).unwrap();
        assert!(o.contains(0, 1) && o.contains(2, 1));
    }

    #[test]
    fn verify_transitive_cases() {
        let p3 = simple_path(3);
        let bad = Orientation::from_arcs(3, [(0, 1), (1, 2)]);
        assert!(!verify_transitive(&p3, &bad));

        let tri = SimpleGraph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]);
        let good = Orientation::from_arcs(3, [(0, 1), (1, 2), (0, 2)]);
        assert!(verify_transitive(&tri, &good));

        let empty = SimpleGraph::new(3);
        assert!(verify_transitive(&empty, &Orientation::new(3)));
    }

    #[test]
    fn cocomparability_fixtures() {
        assert!(!recognize_cocomparability(&constructions::cycle(5)));
        assert!(recognize_cocomparability(&constructions::complete_bipartite(3, 3)));
        assert!(recognize_cocomparability(&constructions::complete(4)));
    }
}
