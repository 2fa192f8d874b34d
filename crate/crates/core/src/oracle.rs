//! Independent brute-force ground truth (guarded, never heuristic) and the
//! exhaustive small-graph cross-check harness.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::avoidance::recognize_via_avoidance;
use crate::certificates::{extract_weak_edge_asteroid, search_strong_ordering, SearchOutcome};
use crate::comparability::{verify_transitive, Orientation};
use crate::error::{Error, Result};
use crate::forcing::find_invertible_pair;
use crate::graph::{is_bigraph_slash_free, Bigraph, Graph, SimpleGraph, VertexOrdering};

const STRONG_ORACLE_MAX_N: usize = 10;
const COMPARABILITY_ORACLE_MAX_M: usize = 24;
const BIGRAPH_ORACLE_MAX_PART: usize = 6;
/// Exhaustive labeled enumeration stops here: 2^(n(n-1)/2) graphs.
pub const CROSSCHECK_EXHAUSTIVE_MAX_N: usize = 6;
/// Masks are u64 upper-triangle encodings, so sampling stops at n = 11.
pub const CROSSCHECK_MAX_N: usize = 11;
/// The ordering oracle joins the cross-check up to this size.
pub const CROSSCHECK_ORACLE_MAX_N: usize = 8;

/// Exhausts all orderings (with Slash prefix pruning) for a definitive
/// answer. Guarded: refuses n > 10 rather than truncate.
pub fn oracle_strong_cocomp(g: &Graph) -> Result<Option<VertexOrdering>> {
    if g.n() > STRONG_ORACLE_MAX_N {
        return Err(Error::GuardExceeded(format!(
            "ordering oracle is limited to n <= {STRONG_ORACLE_MAX_N}, got {}",
            g.n()
        )));
    }
    match search_strong_ordering(g, usize::MAX) {
        SearchOutcome::Found(ord) => Ok(Some(ord)),
        SearchOutcome::Exhausted => Ok(None),
        SearchOutcome::BudgetExceeded => unreachable!("unbudgeted search cannot run out"),
    }
}

/// Backtracking over edge directions with transitive-closure propagation.
/// Guarded at m <= 24 edges.
pub fn oracle_comparability(h: &SimpleGraph) -> Result<Option<Orientation>> {
    let edges = h.edges();
    if edges.len() > COMPARABILITY_ORACLE_MAX_M {
        return Err(Error::GuardExceeded(format!(
            "orientation oracle is limited to m <= {COMPARABILITY_ORACLE_MAX_M}, got {}",
            edges.len()
        )));
    }
    let n = h.n();
    let dir = vec![false; n * n]; // dir[x*n + y]: arc x -> y chosen
    let found = orient_edges(h, dir, &edges);
    Ok(found.map(|dir| {
        let mut arcs = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if dir[x * n + y] {
                    arcs.push((x, y));
                }
            }
        }
        let o = Orientation::from_arcs(n, arcs);
        assert!(verify_transitive(h, &o), "oracle produced a non-transitive orientation; bug");
        o
    }))
}

/// Adds arc a -> b and everything transitivity forces; None on contradiction.
fn propagate(h: &SimpleGraph, mut dir: Vec<bool>, a: usize, b: usize) -> Option<Vec<bool>> {
    let n = h.n();
    let mut stack = vec![(a, b)];
    while let Some((x, y)) = stack.pop() {
        if dir[y * n + x] {
            return None;
        }
        if dir[x * n + y] {
            continue;
        }
        dir[x * n + y] = true;
        for z in 0..n {
            if dir[y * n + z] {
                // x -> y -> z needs x -> z
                if !h.adjacent(x, z) {
                    return None;
                }
                stack.push((x, z));
            }
            if dir[z * n + x] {
                // z -> x -> y needs z -> y
                if !h.adjacent(z, y) {
                    return None;
                }
                stack.push((z, y));
            }
        }
    }
    Some(dir)
}

fn orient_edges(h: &SimpleGraph, dir: Vec<bool>, edges: &[crate::graph::EdgeRef]) -> Option<Vec<bool>> {
    let n = h.n();
    let free = edges
        .iter()
        .find(|e| !dir[e.x() * n + e.y()] && !dir[e.y() * n + e.x()]);
    let Some(e) = free else { return Some(dir) };
    for (a, b) in [(e.x(), e.y()), (e.y(), e.x())] {
        if let Some(next) = propagate(h, dir.clone(), a, b) {
            if let Some(done) = orient_edges(h, next, edges) {
                return Some(done);
            }
        }
    }
    None
}

/// Exhausts nx!ny! ordering pairs of a biadjacency matrix, with Slash
/// pruning on column prefixes. Guarded at part sizes <= 6.
pub fn oracle_cocomp_bigraph(h: &Bigraph) -> Result<Option<(VertexOrdering, VertexOrdering)>> {
    if h.nx() > BIGRAPH_ORACLE_MAX_PART || h.ny() > BIGRAPH_ORACLE_MAX_PART {
        return Err(Error::GuardExceeded(format!(
            "biadjacency oracle is limited to parts <= {BIGRAPH_ORACLE_MAX_PART}, got {}x{}",
            h.nx(),
            h.ny()
        )));
    }
    let mut rows: Vec<usize> = Vec::with_capacity(h.nx());
    let mut row_used = vec![false; h.nx()];
    if let Some((rp, cp)) = place_rows(h, &mut rows, &mut row_used) {
        let rord = VertexOrdering::new(rp).unwrap();
        let cord = VertexOrdering::new(cp).unwrap();
        debug_assert!(is_bigraph_slash_free(h, &rord, &cord).unwrap());
        Ok(Some((rord, cord)))
    } else {
        Ok(None)
    }
}

fn place_rows(
    h: &Bigraph,
    rows: &mut Vec<usize>,
    used: &mut [bool],
) -> Option<(Vec<usize>, Vec<usize>)> {
    if rows.len() == h.nx() {
        let mut cols: Vec<usize> = Vec::with_capacity(h.ny());
        let mut col_used = vec![false; h.ny()];
        return place_cols(h, rows, &mut cols, &mut col_used)
            .map(|cp| (rows.clone(), cp));
    }
    for r in 0..h.nx() {
        if !used[r] {
            used[r] = true;
            rows.push(r);
            if let Some(found) = place_rows(h, rows, used) {
                return Some(found);
            }
            rows.pop();
            used[r] = false;
        }
    }
    None
}

fn place_cols(
    h: &Bigraph,
    rows: &[usize],
    cols: &mut Vec<usize>,
    used: &mut [bool],
) -> Option<Vec<usize>> {
    if cols.len() == h.ny() {
        return Some(cols.clone());
    }
    'cand: for c in 0..h.ny() {
        if used[c] {
            continue;
        }
        // no Slash among placed columns and the candidate
        for &k in cols.iter() {
            for (i, &ri) in rows.iter().enumerate() {
                if h.adjacent(ri, k) || !h.adjacent(ri, c) {
                    continue;
                }
                for &rj in &rows[i + 1..] {
                    if h.adjacent(rj, k) && !h.adjacent(rj, c) {
                        continue 'cand;
                    }
                }
            }
        }
        used[c] = true;
        cols.push(c);
        if let Some(found) = place_cols(h, rows, cols, used) {
            return Some(found);
        }
        cols.pop();
        used[c] = false;
    }
    None
}

// ---------------------------------------------------------------------------
// cross-check harness
// ---------------------------------------------------------------------------

/// The labeled reflexive graph encoded by an upper-triangle bitmask; bit i
/// walks the pairs (0,1), (0,2), ..., (0,n-1), (1,2), ... in order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::new(n);
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                g.add_edge(u, v);
            }
            bit += 1;
        }
    }
    g
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphRecord {
    pub mask: u64,
    /// Verdict of the invertible-pair route (true = no invertible pair).
    pub invertible_pair_free: bool,
    /// Verdict of the avoidance route (G* comparability).
    pub avoidance: bool,
    /// Verdict of the exhaustive ordering oracle, when within its guard.
    pub oracle: Option<bool>,
    /// Truncated SHA-256 of the certificate text; "-" when no certificate.
    pub certificate_hash: String,
}

impl GraphRecord {
    pub fn agreeing(&self) -> bool {
        self.invertible_pair_free == self.avoidance
            && self.oracle.map_or(true, |o| o == self.invertible_pair_free)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub n: usize,
    pub exhaustive: bool,
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub strong_count: usize,
    pub disagreements: Vec<u64>,
    pub records: Vec<GraphRecord>,
}

fn hash_certificate(text: &str) -> String {
    let digest = Sha256::digest(text.as_bytes());
    digest.iter().take(8).map(|b| format!("{b:02x}")).collect()
}

fn record_for(n: usize, mask: u64) -> GraphRecord {
    let g = graph_from_mask(n, mask);
    let ip = find_invertible_pair(&g);
    let avoidance = recognize_via_avoidance(&g);
    let oracle = (n <= CROSSCHECK_ORACLE_MAX_N)
        .then(|| oracle_strong_cocomp(&g).expect("within guard").is_some());
    let certificate_hash = match &ip {
        Some(ip) => hash_certificate(&extract_weak_edge_asteroid(&g, ip).to_text()),
        None => match search_strong_ordering(&g, 1_000_000) {
            SearchOutcome::Found(ord) => hash_certificate(&ord.to_string()),
            _ => "-".into(),
        },
    };
    GraphRecord {
        mask,
        invertible_pair_free: ip.is_none(),
        avoidance,
        oracle,
        certificate_hash,
    }
}

/// Runs the recognizers side by side: exhaustively over all labeled
/// reflexive graphs for n <= 6, or over seeded samples for larger n.
pub fn crosscheck_enumerate(n: usize, samples: Option<usize>, seed: u64) -> Result<Report> {
    if n > CROSSCHECK_MAX_N {
        return Err(Error::GuardExceeded(format!(
            "crosscheck is limited to n <= {CROSSCHECK_MAX_N}, got {n}"
        )));
    }
    let bits = n * (n - 1) / 2;
    let masks: Vec<u64> = match samples {
        None => {
            if n > CROSSCHECK_EXHAUSTIVE_MAX_N {
                return Err(Error::GuardExceeded(format!(
                    "exhaustive crosscheck is limited to n <= {CROSSCHECK_EXHAUSTIVE_MAX_N}; \
                     pass a sample count for n = {n}"
                )));
            }
            (0..1u64 << bits).collect()
        }
        Some(count) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..count)
                .map(|_| {
                    if bits == 64 {
                        rng.gen()
                    } else {
                        rng.gen_range(0..1u64 << bits)
                    }
                })
                .collect()
        }
    };
    let records: Vec<GraphRecord> = masks.par_iter().map(|&mask| record_for(n, mask)).collect();
    let strong_count = records.iter().filter(|r| r.invertible_pair_free).count();
    let disagreements: Vec<u64> = records
        .iter()
        .filter(|r| !r.agreeing())
        .map(|r| r.mask)
        .collect();
    Ok(Report {
        n,
        exhaustive: samples.is_none(),
        seed: samples.is_some().then_some(seed),
        samples,
        strong_count,
        disagreements,
        records,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReportFormat {
    Text,
    Structured,
}

/// Deterministic serialization; the structured form is stable JSON.
pub fn emit_report(report: &Report, format: ReportFormat) -> String {
    match format {
        ReportFormat::Structured => {
            let mut out = serde_json::to_string_pretty(report).expect("report serializes");
            out.push('\n');
            out
        }
        ReportFormat::Text => {
            let mut out = format!(
                "crosscheck n={} graphs={} strong={} disagreements={}\n",
                report.n,
                report.records.len(),
                report.strong_count,
                report.disagreements.len()
            );
            if let (Some(seed), Some(samples)) = (report.seed, report.samples) {
                out.push_str(&format!("sampled seed={seed} samples={samples}\n"));
            }
            for r in &report.records {
                let oracle = match r.oracle {
                    Some(true) => "1",
                    Some(false) => "0",
                    None => "-",
                };
                out.push_str(&format!(
                    "{} {} {} {} {}\n",
                    r.mask,
                    r.invertible_pair_free as u8,
                    r.avoidance as u8,
                    oracle,
                    r.certificate_hash
                ));
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{complete, complete_bipartite, path};
    use crate::graph::is_slash_free_ordering;

    #[test]
    fn strong_oracle_fixtures() {
        let ord = oracle_strong_cocomp(&path(4)).unwrap().unwrap();
        assert_eq!(ord.as_slice(), &[0, 1, 2, 3]);
        assert!(oracle_strong_cocomp(&complete_bipartite(3, 3)).unwrap().is_none());
        let k5 = complete(5);
        let ord = oracle_strong_cocomp(&k5).unwrap().unwrap();
        assert_eq!(ord.as_slice(), &[0, 1, 2, 3, 4]);
        assert!(is_slash_free_ordering(&k5, &ord).unwrap());
        assert!(oracle_strong_cocomp(&Graph::new(11)).is_err());
    }

    #[test]
    fn comparability_oracle_fixtures() {
        let c5 = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert!(oracle_comparability(&c5).unwrap().is_none());
        let c4 = SimpleGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        assert!(oracle_comparability(&c4).unwrap().is_some());
        let k3 = SimpleGraph::from_edges(3, &[(0, 1), (0, 2), (1, 2)]);
        assert!(oracle_comparability(&k3).unwrap().is_some());
        let mut big = SimpleGraph::new(8);
        for u in 0..8 {
            for v in u + 1..8 {
                big.add_edge(u, v);
            }
        }
        assert!(oracle_comparability(&big).is_err());
    }

    #[test]
    fn bigraph_oracle_fixtures() {
        let single = Bigraph::from_edges(1, 1, &[(0, 0)]);
        let (r, c) = oracle_cocomp_bigraph(&single).unwrap().unwrap();
        assert_eq!((r.as_slice(), c.as_slice()), (&[0][..], &[0][..]));

        let two_k2 = Bigraph::from_edges(2, 2, &[(0, 0), (1, 1)]);
        let (r, c) = oracle_cocomp_bigraph(&two_k2).unwrap().unwrap();
        assert!(is_bigraph_slash_free(&two_k2, &r, &c).unwrap());

        let b_k33 = crate::constructions::bipartite_double(&complete_bipartite(3, 3));
        assert!(oracle_cocomp_bigraph(&b_k33).unwrap().is_some());

        assert!(oracle_cocomp_bigraph(&Bigraph::new(7, 2)).is_err());
    }

    #[test]
    fn crosscheck_n3_all_agree() {
        let report = crosscheck_enumerate(3, None, 0).unwrap();
        assert_eq!(report.records.len(), 8);
        assert!(report.disagreements.is_empty());
        // every reflexive graph on 3 vertices is a strong cocomparability graph
        assert_eq!(report.strong_count, 8);
    }

    #[test]
    fn crosscheck_guards() {
        assert!(crosscheck_enumerate(7, None, 0).is_err());
        assert!(crosscheck_enumerate(12, Some(5), 0).is_err());
    }

    #[test]
    fn sampled_crosscheck_is_deterministic() {
        let a = crosscheck_enumerate(7, Some(20), 42).unwrap();
        let b = crosscheck_enumerate(7, Some(20), 42).unwrap();
        assert_eq!(
            emit_report(&a, ReportFormat::Structured),
            emit_report(&b, ReportFormat::Structured)
        );
        assert!(a.disagreements.is_empty());
    }

    #[test]
    fn empty_report_is_header_only() {
        let report = crosscheck_enumerate(5, Some(0), 0).unwrap();
        let text = emit_report(&report, ReportFormat::Text);
        assert_eq!(text.lines().count(), 2); // header + sampling line
    }
}
