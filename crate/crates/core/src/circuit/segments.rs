use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::trail::{check_trail, Trail};

/// A circuit `H = H_1 e_1 H_2 e_2 ... H_k e_k` cut at its prescribed edges.
///
/// The stored trail is rotated so that it ends with a separator edge; the
/// separators `e_1..e_k` are then numbered in the order the trail meets them.
/// Segment `j` is the vertex range `segments[j]` (inclusive) of the stored
/// trail, and its path order is the order of positions.
#[derive(Clone, Debug)]
pub struct SegmentedCircuit {
    trail: Trail,
    /// Edge positions of the separators, ascending; the last is `len - 1`.
    separators: Vec<usize>,
    segments: Vec<(usize, usize)>,
    h_edges: EdgeSet,
    on_h: Vec<bool>,
    /// Per vertex: `(segment, position)` for every segment containing it.
    positions: Vec<Vec<(usize, usize)>>,
}

impl SegmentedCircuit {
    pub fn trail(&self) -> &Trail {
        &self.trail
    }

    /// Number of edges of `H`.
    pub fn len(&self) -> usize {
        self.trail.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trail.is_empty()
    }

    pub fn segment_count(&self) -> usize {
        self.segments.len()
    }

    /// Inclusive position range of segment `j`.
    pub fn segment_range(&self, j: usize) -> (usize, usize) {
        self.segments[j]
    }

    pub fn segment_vertices(&self, j: usize) -> &[usize] {
        let (lo, hi) = self.segments[j];
        &self.trail.vertices()[lo..=hi]
    }

    /// Separator edge ids in order `e_1..e_k`.
    pub fn separator_edges(&self) -> Vec<usize> {
        self.separators.iter().map(|&p| self.trail.edge(p)).collect()
    }

    pub fn vertex_at(&self, position: usize) -> usize {
        self.trail.vertex(position % self.trail.len())
    }

    pub fn edge_at(&self, position: usize) -> usize {
        self.trail.edge(position % self.trail.len())
    }

    pub fn h_edges(&self) -> &EdgeSet {
        &self.h_edges
    }

    pub fn on_h(&self, v: usize) -> bool {
        self.on_h[v]
    }

    pub(crate) fn on_h_mask(&self) -> &[bool] {
        &self.on_h
    }

    /// `(segment, position)` pairs of vertex `v`, by ascending segment.
    pub fn positions_of(&self, v: usize) -> &[(usize, usize)] {
        &self.positions[v]
    }

    /// Position of `v` on segment `j`, if it lies there.
    pub fn position_on(&self, v: usize, j: usize) -> Option<usize> {
        self.positions[v].iter().find(|&&(s, _)| s == j).map(|&(_, p)| p)
    }
}

/// Rotation of the closed trail `h` that ends with an edge of `s`.
fn rotate_to_separator(h: &Trail, s: &EdgeSet) -> Option<Trail> {
    let first = h.edges().iter().position(|&e| s.contains(e))?;
    Some(h.rotated(first + 1))
}

fn separator_positions(h: &Trail, s: &EdgeSet) -> Vec<usize> {
    (0..h.len()).filter(|&i| s.contains(h.edge(i))).collect()
}

fn segment_ranges(separators: &[usize]) -> Vec<(usize, usize)> {
    let mut ranges = Vec::with_capacity(separators.len());
    let mut lo = 0;
    for &s in separators {
        ranges.push((lo, s));
        lo = s + 1;
    }
    ranges
}

fn validate_input(g: &Graph, h: &Trail, s: &EdgeSet) -> Result<()> {
    if let Err(defect) = check_trail(g, h) {
        return Err(Error::BadParam(format!("not a trail: {defect}")));
    }
    if !h.is_closed() {
        return Err(Error::BadParam("trail is not closed".into()));
    }
    if let Some(e) = s.iter().find(|&e| !h.contains_edge(e)) {
        return Err(Error::BadParam(format!("separator edge {e} is not on the circuit")));
    }
    if s.is_empty() {
        return Err(Error::BadParam("no separator edges".into()));
    }
    Ok(())
}

/// Splits `h` at the edges of `s_prefix`.
pub fn segment(g: &Graph, h: &Trail, s_prefix: &EdgeSet) -> Result<SegmentedCircuit> {
    validate_input(g, h, s_prefix)?;
    let trail = rotate_to_separator(h, s_prefix).expect("separator present");
    let separators = separator_positions(&trail, s_prefix);
    let segments = segment_ranges(&separators);

    let n = g.vertex_count();
    let mut positions: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (j, &(lo, hi)) in segments.iter().enumerate() {
        for p in lo..=hi {
            let v = trail.vertex(p);
            if positions[v].last().is_some_and(|&(s, _)| s == j) {
                return Err(Error::SegmentNotPath(j));
            }
            positions[v].push((j, p));
        }
    }
    let mut on_h = vec![false; n];
    for &v in trail.vertices() {
        on_h[v] = true;
    }
    let h_edges = trail.edge_set(g.edge_count());
    Ok(SegmentedCircuit {
        trail,
        separators,
        segments,
        h_edges,
        on_h,
        positions,
    })
}

/// First `(p, q)` with `p < q` inside one segment and equal vertices.
fn find_repeat(trail: &Trail, segments: &[(usize, usize)], seen: &mut [usize]) -> Option<(usize, usize)> {
    for &(lo, hi) in segments {
        let mut hit = None;
        for p in lo..=hi {
            let v = trail.vertex(p);
            if seen[v] != usize::MAX {
                hit = Some((seen[v], p));
                break;
            }
            seen[v] = p;
        }
        for p in lo..=hi {
            seen[trail.vertex(p)] = usize::MAX;
        }
        if hit.is_some() {
            return hit;
        }
    }
    None
}

/// Removes closed detours inside segments until every segment is a path.
///
/// Each excised sub-walk lies strictly inside one segment, so it holds no
/// separator edge. Returns `h` itself when it is already normalized.
pub fn normalize_circuit(g: &Graph, h: &Trail, s_prefix: &EdgeSet) -> Result<Trail> {
    validate_input(g, h, s_prefix)?;
    let mut seen = vec![usize::MAX; g.vertex_count()];
    let mut current = rotate_to_separator(h, s_prefix).expect("separator present");
    let mut changed = false;
    loop {
        let segments = segment_ranges(&separator_positions(&current, s_prefix));
        let Some((p, q)) = find_repeat(&current, &segments, &mut seen) else {
            break;
        };
        let mut vertices = current.vertices()[..p].to_vec();
        vertices.extend_from_slice(&current.vertices()[q..]);
        let mut edges = current.edges()[..p].to_vec();
        edges.extend_from_slice(&current.edges()[q..]);
        current = Trail::from_parts(vertices, edges);
        changed = true;
    }
    Ok(if changed { current } else { h.clone() })
}
