//! Coherent trails and the rerouting descent to level `(0, 0)`.
//!
//! Side 0 is the sequence grown from `a`, side 1 the one grown from `b`. A
//! coherent trail starts on its front side and ends on the other; flipping
//! reverses the trail and swaps which side is in front, so one rerouting step
//! serves both sides.

use super::reach::{LevelSequence, ReachState};
use super::segments::SegmentedCircuit;
use crate::error::{Coherence, Error, Result};
use crate::graph::Graph;
use crate::trail::{check_trail, Trail};

/// Where a closure `Cl_j(X)` sits inside the trail.
///
/// Trail index `start + t` holds segment position `lo + t` when `forward`,
/// and `hi - t` otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub lo: usize,
    pub hi: usize,
    pub forward: bool,
}

impl Span {
    pub fn len(&self) -> usize {
        self.hi - self.lo
    }

    pub fn is_empty(&self) -> bool {
        self.hi == self.lo
    }

    /// Last trail index covered.
    pub fn end(&self) -> usize {
        self.start + self.len()
    }

    pub fn index_of(&self, position: usize) -> usize {
        debug_assert!((self.lo..=self.hi).contains(&position));
        if self.forward {
            self.start + (position - self.lo)
        } else {
            self.start + (self.hi - position)
        }
    }

    fn shrink(&self, lo: usize, hi: usize) -> Span {
        debug_assert!(self.lo <= lo && hi <= self.hi);
        let start = if self.forward {
            self.start + (lo - self.lo)
        } else {
            self.start + (self.hi - hi)
        };
        Span { start, lo, hi, forward: self.forward }
    }

    fn overlaps(&self, from: usize, to: usize) -> bool {
        self.start <= to && from <= self.end()
    }

    /// Same closure after the trail is reversed; `w` is the last index.
    fn reversed(&self, w: usize) -> Span {
        Span {
            start: w - self.end(),
            forward: !self.forward,
            ..*self
        }
    }
}

/// A trail with its level `(n, m)` and the witnessing intervals of
/// `Cl_j(A_n)` and `Cl_j(B_m)`.
#[derive(Clone, Debug)]
pub struct CoherentTrail {
    pub trail: Trail,
    /// `levels[0] = n`, `levels[1] = m`.
    pub levels: [usize; 2],
    /// Per side and segment: the interval of the closure at the current level.
    pub spans: [Vec<Option<Span>>; 2],
    /// The side whose endpoint is the first vertex of `trail`.
    pub front: usize,
    /// Segment the trail was last started from.
    pub segment: usize,
}

impl CoherentTrail {
    pub fn level(&self) -> (usize, usize) {
        (self.levels[0], self.levels[1])
    }

    fn endpoint(&self, side: usize) -> usize {
        if side == self.front {
            self.trail.start()
        } else {
            self.trail.end()
        }
    }

    fn flip(&mut self) {
        let w = self.trail.len();
        self.trail = self.trail.reversed();
        for spans in &mut self.spans {
            for s in spans.iter_mut().flatten() {
                *s = s.reversed(w);
            }
        }
        self.front = 1 - self.front;
    }

    /// Lowers the level of `side` by one; the new closures are sub-intervals.
    fn demote(&mut self, side: usize, seq: &LevelSequence) {
        self.levels[side] -= 1;
        let level = seq.level(self.levels[side]);
        for (j, span) in self.spans[side].iter_mut().enumerate() {
            *span = match (*span, level.closure(j)) {
                (Some(s), Some((lo, hi))) => Some(s.shrink(lo, hi)),
                _ => None,
            };
        }
    }
}

/// Counters for the descent.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DescentStats {
    pub demotions: usize,
    pub reroutes: usize,
    pub restarts: usize,
}

fn violated<T>(kind: Coherence, msg: String) -> Result<T> {
    Err(Error::CoherenceViolated(kind, msg))
}

/// The trail along `H` from the first vertex of `A_{n+1}` on segment `j` to the
/// first vertex of `B_{m+1}` on it, with `n`, `m` least possible for `j`.
pub fn initial_coherent_trail_at(state: &ReachState, seg: &SegmentedCircuit, j: usize) -> Result<CoherentTrail> {
    let (Some(n), Some(m)) = (state.sides[0].first_touch(j), state.sides[1].first_touch(j)) else {
        return Err(Error::NoSharedSegment);
    };
    let p = state.sides[0].level(n + 1).closure(j).expect("touched").0;
    let q = state.sides[1].level(m + 1).closure(j).expect("touched").0;
    let len = seg.len();
    // positions visited, as offsets from p
    let forward = p >= q;
    let steps = if p == q {
        len
    } else if forward {
        (q + len - p) % len
    } else {
        (p + len - q) % len
    };
    let pos = |t: usize| if forward { (p + t) % len } else { (p + len - t) % len };
    let vertices: Vec<usize> = (0..=steps).map(|t| seg.vertex_at(pos(t))).collect();
    let edges: Vec<usize> = (0..steps)
        .map(|t| if forward { seg.edge_at(pos(t)) } else { seg.edge_at(pos(t + 1)) })
        .collect();
    let trail = Trail::from_parts(vertices, edges);

    let levels = [n, m];
    let mut spans: [Vec<Option<Span>>; 2] = [vec![None; seg.segment_count()], vec![None; seg.segment_count()]];
    for side in 0..2 {
        let level = state.sides[side].level(levels[side]);
        for (jj, slot) in spans[side].iter_mut().enumerate() {
            let Some((lo, hi)) = level.closure(jj) else { continue };
            if jj == j {
                return Err(Error::Internal(format!("closure on segment {j} below its first touch")));
            }
            let start = if forward { (lo + len - p) % len } else { (p + len - hi) % len };
            *slot = Some(Span { start, lo, hi, forward });
        }
    }
    Ok(CoherentTrail {
        trail,
        levels,
        spans,
        front: 0,
        segment: j,
    })
}

/// Initial coherent trail on the shared segment with least `n + m`.
pub fn initial_coherent_trail(state: &ReachState, seg: &SegmentedCircuit) -> Result<CoherentTrail> {
    let best = state
        .shared_segments(seg)
        .into_iter()
        .min_by_key(|&j| {
            let n = state.sides[0].first_touch(j).unwrap_or(usize::MAX / 4);
            let m = state.sides[1].first_touch(j).unwrap_or(usize::MAX / 4);
            (n + m, j)
        })
        .ok_or(Error::NoSharedSegment)?;
    initial_coherent_trail_at(state, seg, best)
}

/// Checks conditions C1 to C3 for `q` at its recorded level.
pub fn check_coherence(g: &Graph, seg: &SegmentedCircuit, state: &ReachState, q: &CoherentTrail) -> Result<()> {
    let t = &q.trail;
    // C1
    if let Err(d) = check_trail(g, t) {
        return violated(Coherence::C1, format!("not a trail: {d}"));
    }
    for e in seg.separator_edges() {
        if !t.contains_edge(e) {
            return violated(Coherence::C1, format!("separator {e} missing"));
        }
    }
    for side in 0..2 {
        let v = q.endpoint(side);
        if !state.sides[side].level(q.levels[side] + 1).contains(v) {
            return violated(
                Coherence::C1,
                format!("endpoint {v} of side {side} outside level {}", q.levels[side] + 1),
            );
        }
    }

    // C2
    let w = t.len();
    let mut i = 0;
    while i < w {
        let e = t.edge(i);
        if seg.h_edges().contains(e) {
            i += 1;
            continue;
        }
        let r = (0..=i).rev().find(|&r| seg.on_h(t.vertex(r)));
        let tt = (i + 1..=w).find(|&x| seg.on_h(t.vertex(x)));
        let (Some(r), Some(tt)) = (r, tt) else {
            return violated(Coherence::C2, format!("edge {e} at {i} has no bracket"));
        };
        for x in r..tt {
            let f = t.edge(x);
            if f == state.excluded || seg.h_edges().contains(f) {
                return violated(Coherence::C2, format!("bracket {r}..{tt} uses edge {f}"));
            }
        }
        let (qr, qt) = (t.vertex(r), t.vertex(tt));
        for side in 0..2 {
            let level = state.sides[side].level(q.levels[side] + 1);
            if level.contains(qr) && level.contains(qt) {
                return violated(
                    Coherence::C2,
                    format!("bracket {r}..{tt} has both ends in level {} of side {side}", q.levels[side] + 1),
                );
            }
        }
        i = tt;
    }

    // C3
    let mut intervals = Vec::new();
    for side in 0..2 {
        let level = state.sides[side].level(q.levels[side]);
        for j in 0..seg.segment_count() {
            match (level.closure(j), q.spans[side][j]) {
                (None, None) => {}
                (Some((lo, hi)), Some(s)) if s.lo == lo && s.hi == hi => {
                    if s.end() > w {
                        return violated(Coherence::C3, format!("span of segment {j} runs past the trail"));
                    }
                    for p in lo..=hi {
                        if t.vertex(s.index_of(p)) != seg.vertex_at(p) {
                            return violated(
                                Coherence::C3,
                                format!("closure on segment {j} is not a subtrail at position {p}"),
                            );
                        }
                    }
                    intervals.push((j, s.start, s.end()));
                }
                (c, s) => {
                    return violated(
                        Coherence::C3,
                        format!("side {side} segment {j}: closure {c:?} but span {s:?}"),
                    );
                }
            }
        }
    }
    for (x, &(j1, s1, e1)) in intervals.iter().enumerate() {
        for &(j2, s2, e2) in &intervals[x + 1..] {
            if j1 != j2 && s1 <= e2 && s2 <= e1 {
                return violated(Coherence::C3, format!("intervals of segments {j1} and {j2} meet"));
            }
        }
    }
    Ok(())
}

/// One rerouting step on `side`, which must be in front with level `n >= 1`
/// and `q_0` outside `A_n`. Returns a trail at strictly lower `n + m`.
fn reroute(
    seg: &SegmentedCircuit,
    state: &ReachState,
    q: &CoherentTrail,
    side: usize,
    stats: &mut DescentStats,
) -> Result<CoherentTrail> {
    debug_assert_eq!(q.front, side);
    let other = 1 - side;
    let seq = &state.sides[side];
    let n = q.levels[side];
    let t = &q.trail;
    let q0 = t.start();

    let p = seq
        .level(n + 1)
        .witness(q0)
        .ok_or_else(|| Error::CoherenceViolated(Coherence::C1, format!("no admissible trail to {q0}")))?;
    let x = p.start();
    let level_n = seq.level(n);
    let (j, pos_x) = seg
        .positions_of(x)
        .iter()
        .copied()
        .find(|&(j, pos)| level_n.closure(j).is_some_and(|(lo, hi)| lo <= pos && pos <= hi))
        .ok_or_else(|| Error::Internal(format!("source {x} is not in the closure of level {n}")))?;
    let span = q.spans[side][j]
        .ok_or_else(|| Error::CoherenceViolated(Coherence::C3, format!("no interval for segment {j}")))?;
    let d = span.index_of(pos_x);

    let on_frontier = |v: usize| (1..=n).find(|&i| seq.level(i).is_frontier(seg, j, v));
    let c = (0..=d)
        .rev()
        .find(|&r| on_frontier(t.vertex(r)).is_some())
        .filter(|&c| c >= span.start)
        .ok_or_else(|| Error::Internal(format!("no frontier vertex before index {d}")))?;
    let n_new = on_frontier(t.vertex(c)).unwrap() - 1;

    let other_hit = q.spans[other][j].is_some_and(|s| s.overlaps(c, d));
    if other_hit || state.sides[other].level(q.levels[other] + 1).contains(t.vertex(d)) {
        stats.restarts += 1;
        return initial_coherent_trail_at(state, seg, j);
    }

    if p.edges().iter().any(|&e| t.contains_edge(e)) {
        return violated(
            Coherence::EdgeDisjoint,
            format!("admissible trail {:?} meets the coherent trail", p.edges()),
        );
    }

    // q_c back to q_0, then P reversed to q_d, then the rest of Q
    let head = t.slice(0, c).reversed();
    let mut trail = head;
    trail.extend(&p.reversed());
    trail.extend(&t.slice(d, t.len()));
    let plen = p.len();
    let remap = |s: Span| -> Result<Span> {
        if s.end() < c {
            Ok(s.reversed(c))
        } else if s.start > d {
            Ok(Span { start: s.start + c + plen - d, ..s })
        } else {
            violated(Coherence::C3, format!("interval {s:?} meets [{c}, {d}]"))
        }
    };
    let mut spans: [Vec<Option<Span>>; 2] = [Vec::new(), Vec::new()];
    let new_level = seq.level(n_new);
    for (jj, s) in q.spans[side].iter().enumerate() {
        let shrunk = match (s, new_level.closure(jj)) {
            (Some(s), Some((lo, hi))) => Some(remap(s.shrink(lo, hi))?),
            _ => None,
        };
        spans[side].push(shrunk);
    }
    for s in &q.spans[other] {
        spans[other].push(s.map(remap).transpose()?);
    }
    let mut levels = q.levels;
    levels[side] = n_new;
    stats.reroutes += 1;
    Ok(CoherentTrail {
        trail,
        levels,
        spans,
        front: side,
        segment: q.segment,
    })
}

/// Lowers a coherent trail to level `(0, 0)`, checking C1 to C3 after every
/// step. The result starts on side 0.
pub fn reroute_descent(
    g: &Graph,
    seg: &SegmentedCircuit,
    state: &ReachState,
    q: CoherentTrail,
    stats: &mut DescentStats,
) -> Result<CoherentTrail> {
    let mut q = q;
    check_coherence(g, seg, state, &q)?;
    loop {
        for side in 0..2 {
            while q.levels[side] >= 1 && state.sides[side].level(q.levels[side]).contains(q.endpoint(side)) {
                q.demote(side, &state.sides[side]);
                stats.demotions += 1;
            }
        }
        if q.levels == [0, 0] {
            break;
        }
        let before = q.levels[0] + q.levels[1];
        let side = if q.levels[0] >= 1 { 0 } else { 1 };
        if q.front != side {
            q.flip();
        }
        q = reroute(seg, state, &q, side, stats)?;
        let after = q.levels[0] + q.levels[1];
        if after >= before {
            return Err(Error::DescentStalled(format!(
                "level sum {before} -> {after} at trail {:?}",
                q.trail.vertices()
            )));
        }
        check_coherence(g, seg, state, &q)?;
    }
    if q.front != 0 {
        q.flip();
    }
    Ok(q)
}
