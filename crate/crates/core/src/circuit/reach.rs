use std::collections::VecDeque;

use super::segments::SegmentedCircuit;
use crate::cuts::CutCertificate;
use crate::error::{Error, Result};
use crate::graph::{boundary_of_mask, Graph};
use crate::trail::Trail;

/// One multi-source search in `G - E(H) - excluded`.
///
/// Sources are expanded; vertices of `H` that are not sources end a search
/// branch. Every visited vertex has a recorded admissible trail from a source.
#[derive(Clone, Debug)]
pub struct Search {
    visited: Vec<bool>,
    pred: Vec<Option<(usize, usize)>>,
}

impl Search {
    pub fn run(g: &Graph, seg: &SegmentedCircuit, excluded: usize, sources: &[usize]) -> Search {
        let n = g.vertex_count();
        let mut visited = vec![false; n];
        let mut source = vec![false; n];
        let mut pred = vec![None; n];
        let mut queue = VecDeque::new();
        for &x in sources {
            if !visited[x] {
                visited[x] = true;
                source[x] = true;
                queue.push_back(x);
            }
        }
        let on_h = seg.on_h_mask();
        let h_edges = seg.h_edges();
        while let Some(u) = queue.pop_front() {
            if on_h[u] && !source[u] {
                continue;
            }
            for &(v, e) in g.neighbors(u) {
                if visited[v] || e == excluded || h_edges.contains(e) {
                    continue;
                }
                visited[v] = true;
                pred[v] = Some((u, e));
                queue.push_back(v);
            }
        }
        Search { visited, pred }
    }

    pub fn visited(&self, v: usize) -> bool {
        self.visited[v]
    }

    pub(crate) fn visited_mask(&self) -> &[bool] {
        &self.visited
    }

    /// Recorded trail from its source to `y`.
    pub fn witness(&self, y: usize) -> Option<Trail> {
        if !self.visited[y] {
            return None;
        }
        let mut vertices = vec![y];
        let mut edges = Vec::new();
        let mut at = y;
        while let Some((u, e)) = self.pred[at] {
            vertices.push(u);
            edges.push(e);
            at = u;
        }
        vertices.reverse();
        edges.reverse();
        Some(Trail::from_parts(vertices, edges))
    }
}

/// `Reach(X)`: vertices of `H` with an admissible trail from `X`.
#[derive(Clone, Debug)]
pub struct Reach {
    pub vertices: Vec<usize>,
    pub search: Search,
}

pub fn compute_reach(g: &Graph, seg: &SegmentedCircuit, excluded: usize, x: &[usize]) -> Reach {
    let search = Search::run(g, seg, excluded, x);
    let vertices = (0..g.vertex_count())
        .filter(|&v| search.visited(v) && seg.on_h(v))
        .collect();
    Reach { vertices, search }
}

/// One set `A_i` with its per-segment closures.
#[derive(Clone, Debug)]
pub struct Level {
    members: Vec<bool>,
    /// Per segment: position range of `Cl_j`, if `Ins_j` is nonempty.
    closures: Vec<Option<(usize, usize)>>,
    /// The search that produced this level; absent for `A_0`.
    search: Option<Search>,
}

impl Level {
    fn empty(n: usize, k: usize) -> Level {
        Level {
            members: vec![false; n],
            closures: vec![None; k],
            search: None,
        }
    }

    fn from_search(g: &Graph, seg: &SegmentedCircuit, search: Search) -> Level {
        let n = g.vertex_count();
        let members: Vec<bool> = (0..n).map(|v| search.visited(v) && seg.on_h(v)).collect();
        let mut closures: Vec<Option<(usize, usize)>> = vec![None; seg.segment_count()];
        for v in (0..n).filter(|&v| members[v]) {
            for &(j, p) in seg.positions_of(v) {
                closures[j] = Some(match closures[j] {
                    None => (p, p),
                    Some((lo, hi)) => (lo.min(p), hi.max(p)),
                });
            }
        }
        Level {
            members,
            closures,
            search: Some(search),
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members[v]
    }

    pub fn members(&self) -> Vec<usize> {
        (0..self.members.len()).filter(|&v| self.members[v]).collect()
    }

    pub fn closure(&self, j: usize) -> Option<(usize, usize)> {
        self.closures[j]
    }

    /// Is `v` one of the two endpoints of `Cl_j`?
    pub fn is_frontier(&self, seg: &SegmentedCircuit, j: usize, v: usize) -> bool {
        self.closures[j].is_some_and(|(lo, hi)| seg.vertex_at(lo) == v || seg.vertex_at(hi) == v)
    }

    pub fn witness(&self, y: usize) -> Option<Trail> {
        self.search.as_ref().and_then(|s| s.witness(y))
    }

    fn closure_vertices(&self, seg: &SegmentedCircuit) -> Vec<usize> {
        let mut out = Vec::new();
        for &(lo, hi) in self.closures.iter().flatten() {
            out.extend((lo..=hi).map(|p| seg.vertex_at(p)));
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    fn touched_segments(&self) -> usize {
        self.closures.iter().filter(|c| c.is_some()).count()
    }
}

/// The increasing sequence `A_0 ⊆ A_1 ⊆ ...` grown from one endpoint.
#[derive(Clone, Debug)]
pub struct LevelSequence {
    pub start: usize,
    levels: Vec<Level>,
}

impl LevelSequence {
    fn build(g: &Graph, seg: &SegmentedCircuit, excluded: usize, start: usize) -> LevelSequence {
        let mut levels = vec![Level::empty(g.vertex_count(), seg.segment_count())];
        let mut sources = vec![start];
        loop {
            let level = Level::from_search(g, seg, Search::run(g, seg, excluded, &sources));
            if levels.len() > 1 && level.members == levels.last().unwrap().members {
                break;
            }
            sources = level.closure_vertices(seg);
            levels.push(level);
        }
        LevelSequence { start, levels }
    }

    /// `A_i`; indices past the fixpoint give the limit.
    pub fn level(&self, i: usize) -> &Level {
        &self.levels[i.min(self.levels.len() - 1)]
    }

    /// Index of the last distinct level.
    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn limit(&self) -> &Level {
        self.levels.last().unwrap()
    }

    /// Least `i` with `Ins_j(A_{i+1})` nonempty.
    pub fn first_touch(&self, j: usize) -> Option<usize> {
        (1..self.levels.len()).find(|&i| self.levels[i].closures[j].is_some()).map(|i| i - 1)
    }
}

/// Both level sequences for the excluded edge `ab`.
#[derive(Clone, Debug)]
pub struct ReachState {
    pub excluded: usize,
    /// Index 0 grows from `a`, index 1 from `b`.
    pub sides: [LevelSequence; 2],
}

impl ReachState {
    /// Segments met by both limits, ascending.
    pub fn shared_segments(&self, seg: &SegmentedCircuit) -> Vec<usize> {
        (0..seg.segment_count())
            .filter(|&j| self.sides[0].limit().closure(j).is_some() && self.sides[1].limit().closure(j).is_some())
            .collect()
    }
}

#[derive(Clone, Debug)]
pub enum Hopping {
    State(ReachState),
    Cut(CutCertificate),
}

/// Grows both level sequences to their limits. If no segment is met from
/// both sides, returns the odd cut of size at most `k + 1` separating the
/// side that meets at most half of the segments.
pub fn hopping_fixpoint(g: &Graph, seg: &SegmentedCircuit, excluded: usize) -> Result<Hopping> {
    g.check_edge(excluded)?;
    if seg.h_edges().contains(excluded) {
        return Err(Error::BadParam(format!("edge {excluded} already lies on the circuit")));
    }
    let (a, b) = g.endpoints(excluded);
    let state = ReachState {
        excluded,
        sides: [
            LevelSequence::build(g, seg, excluded, a),
            LevelSequence::build(g, seg, excluded, b),
        ],
    };
    if !state.shared_segments(seg).is_empty() {
        return Ok(Hopping::State(state));
    }

    let k = seg.segment_count();
    let side = if state.sides[0].limit().touched_segments() <= k / 2 { 0 } else { 1 };
    let seq = &state.sides[side];
    let mut sources = seq.limit().members();
    sources.push(seq.start);
    let search = Search::run(g, seg, excluded, &sources);
    let boundary = boundary_of_mask(g, search.visited_mask());
    let cert = CutCertificate::from_mask(g, search.visited_mask());
    if !cert.odd || cert.size > k + 1 || !boundary.contains(excluded) {
        return Err(Error::Internal(format!(
            "hopping cut {:?} has size {} for {} segments",
            cert.boundary, cert.size, k
        )));
    }
    Ok(Hopping::Cut(cert))
}
