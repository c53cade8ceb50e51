//! Concentric cycles, CL-configurations, segments and their zones, types
//! and forests.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::{all_cycles, cycle_vertices};
use crate::planar_core::{EdgeId, EmbeddedGraph, Faces, RadialMap, Vertex};

/// Face used as "outside": a face at the smallest terminal when there is
/// one, else the longest face.
pub fn designated_outer(g: &EmbeddedGraph, faces: &Faces) -> Option<usize> {
    g.terminals()
        .into_iter()
        .find_map(|t| faces.faces_at(t).first().copied())
        .or_else(|| faces.outer_face())
}

#[derive(Clone, Debug)]
pub struct ConcentricSequence {
    cycles: Vec<Vec<EdgeId>>,
    cycle_vertices: Vec<Vec<Vertex>>,
    /// Per level: face lies in the open interior of D_i.
    disk_faces: Vec<Vec<bool>>,
    /// Per level: vertex lies in the closed disk D_i.
    disk_vertex: Vec<Vec<bool>>,
    on_cycle: Vec<Vec<bool>>,
    edge_on_any: Vec<bool>,
    faces: Faces,
    outer: usize,
}

impl ConcentricSequence {
    pub fn depth(&self) -> usize {
        self.cycles.len() - 1
    }

    pub fn cycle(&self, i: usize) -> &[EdgeId] {
        &self.cycles[i]
    }

    /// Vertices of C_i in walk order.
    pub fn cycle_vertices(&self, i: usize) -> &[Vertex] {
        &self.cycle_vertices[i]
    }

    pub fn in_disk(&self, i: usize, v: Vertex) -> bool {
        self.disk_vertex[i].get(v).copied().unwrap_or(false)
    }

    pub fn on_cycle(&self, i: usize, v: Vertex) -> bool {
        self.on_cycle[i].get(v).copied().unwrap_or(false)
    }

    /// Strictly inside C_i.
    pub fn in_open_disk(&self, i: usize, v: Vertex) -> bool {
        self.in_disk(i, v) && !self.on_cycle(i, v)
    }

    pub fn face_in_disk(&self, i: usize, f: usize) -> bool {
        self.disk_faces[i][f]
    }

    pub fn edge_on_cycle(&self, i: usize, e: EdgeId) -> bool {
        self.cycles[i].contains(&e)
    }

    pub fn edge_on_any_cycle(&self, e: EdgeId) -> bool {
        self.edge_on_any.get(e).copied().unwrap_or(false)
    }

    /// Edge in the open interior of D_i.
    pub fn edge_in_open_disk(&self, i: usize, e: EdgeId) -> bool {
        !self.edge_on_cycle(i, e)
            && self.disk_faces[i][self.faces.face_of(crate::planar_core::Dart::new(e, 0))]
    }

    /// Edge in the closed disk D_i.
    pub fn edge_in_disk(&self, i: usize, e: EdgeId) -> bool {
        self.edge_on_cycle(i, e) || self.edge_in_open_disk(i, e)
    }

    pub fn faces(&self) -> &Faces {
        &self.faces
    }

    pub fn outer_face(&self) -> usize {
        self.outer
    }
}

/// Validates a cycle sequence `C_0..C_r` (innermost first) using the
/// designated outer face of `g`.
pub fn check_concentric(g: &EmbeddedGraph, cycles: &[Vec<EdgeId>]) -> Result<ConcentricSequence> {
    let faces = g.faces();
    let outer = if g.terminals().is_empty() && cycles.len() >= 2 {
        away_from_core(g, &faces, cycles)
    } else {
        designated_outer(g, &faces)
    }
    .ok_or_else(|| Error::InvalidConfiguration("graph has no faces".into()))?;
    check_concentric_with(g, faces, cycles, outer)
}

/// A face along the last cycle on the side away from the first one.
fn away_from_core(g: &EmbeddedGraph, faces: &Faces, cycles: &[Vec<EdgeId>]) -> Option<usize> {
    let last = cycles.last()?;
    let mut cut = vec![false; g.edge_bound()];
    for &e in last {
        cut[e] = true;
    }
    let (region, _) = faces.regions(&cut);
    let (a, _) = g.endpoints(*cycles[0].first()?)?;
    let core = region[*faces.faces_at(a).first()?];
    let d = crate::planar_core::Dart::new(last[0], 0);
    [faces.face_of(d), faces.face_of(d.twin())]
        .into_iter()
        .find(|&f| region[f] != core)
}

pub fn check_concentric_with(
    g: &EmbeddedGraph,
    faces: Faces,
    cycles: &[Vec<EdgeId>],
    outer: usize,
) -> Result<ConcentricSequence> {
    if cycles.is_empty() {
        return Err(Error::InvalidConfiguration("empty cycle sequence".into()));
    }
    let mut verts = Vec::new();
    let mut on_cycle = Vec::new();
    for c in cycles {
        let vs = cycle_vertices(g, c)?;
        let mut on = vec![false; g.vertex_bound()];
        for &v in &vs {
            on[v] = true;
        }
        verts.push(vs);
        on_cycle.push(on);
    }
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            if verts[i].iter().any(|&v| on_cycle[j][v]) {
                return Err(Error::NotDisjoint(i, j));
            }
        }
    }
    let mut disk_faces = Vec::new();
    let mut disk_vertex = Vec::new();
    for (i, c) in cycles.iter().enumerate() {
        let mut cut = vec![false; g.edge_bound()];
        for &e in c {
            cut[e] = true;
        }
        let (region, _) = faces.regions(&cut);
        let d = crate::planar_core::Dart::new(c[0], 0);
        let (a, b) = (region[faces.face_of(d)], region[faces.face_of(d.twin())]);
        let out_r = region[outer];
        let inside = if a != out_r {
            a
        } else if b != out_r {
            b
        } else {
            return Err(Error::InvalidConfiguration(format!(
                "cycle {i} does not bound a disk away from the outer face"
            )));
        };
        let df: Vec<bool> = region.iter().map(|&r| r == inside).collect();
        let dv: Vec<bool> = (0..g.vertex_bound())
            .map(|v| {
                on_cycle[i][v]
                    || (g.contains(v) && faces.faces_at(v).first().is_some_and(|&f| df[f]))
            })
            .collect();
        disk_faces.push(df);
        disk_vertex.push(dv);
    }
    for i in 1..cycles.len() {
        if verts[i - 1].iter().any(|&v| !disk_vertex[i][v]) {
            return Err(Error::NotNested(i - 1, i));
        }
    }
    let mut edge_on_any = vec![false; g.edge_bound()];
    for c in cycles {
        for &e in c {
            edge_on_any[e] = true;
        }
    }
    Ok(ConcentricSequence {
        cycles: cycles.to_vec(),
        cycle_vertices: verts,
        disk_faces,
        disk_vertex,
        on_cycle,
        edge_on_any,
        faces,
        outer,
    })
}

/// Tightness: D_0 is internally chordless and no cycle between consecutive
/// disks encloses the inner one.
pub fn check_tight(g: &EmbeddedGraph, seq: &ConcentricSequence) -> bool {
    for (e, u, v) in g.edges() {
        if seq.on_cycle(0, u) && seq.on_cycle(0, v) && seq.edge_in_open_disk(0, e) {
            return false;
        }
    }
    let interior: Vec<Vertex> = g.vertices().filter(|&v| seq.in_open_disk(0, v)).collect();
    let mut seen = vec![false; g.vertex_bound()];
    for &s in &interior {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut attach = BTreeSet::new();
        while let Some(x) = stack.pop() {
            for (_, y) in g.neighbors(x) {
                if seq.on_cycle(0, y) {
                    attach.insert(y);
                } else if !seen[y] && seq.in_open_disk(0, y) {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if attach.len() >= 2 {
            return false;
        }
    }
    // condition 2
    for i in 0..seq.depth() {
        let keep: BTreeSet<Vertex> = g
            .vertices()
            .filter(|&v| seq.in_disk(i + 1, v) && !seq.in_disk(i, v))
            .collect();
        let mut annulus = g.induced(&keep);
        let outside: Vec<EdgeId> = annulus
            .edges()
            .filter(|&(e, _, _)| !seq.edge_in_disk(i + 1, e))
            .map(|x| x.0)
            .collect();
        for e in outside {
            annulus.remove_edge(e);
        }
        let inner = seq.cycle_vertices(i)[0];
        for c in all_cycles(&annulus) {
            let mut sorted_outer = seq.cycle(i + 1).to_vec();
            sorted_outer.sort_unstable();
            if c == sorted_outer {
                continue;
            }
            let mut cut = vec![false; g.edge_bound()];
            for &e in &c {
                cut[e] = true;
            }
            let (region, _) = seq.faces().regions(&cut);
            let fi = seq.faces().faces_at(inner)[0];
            if region[fi] != region[seq.outer_face()] {
                return false;
            }
        }
    }
    true
}

/// `v` is `l`-isolated from `t` when every terminal is at radial distance
/// greater than `l`. One radial BFS.
pub fn is_isolated(g: &EmbeddedGraph, t: &[Vertex], v: Vertex, l: usize) -> Result<bool> {
    if !g.contains(v) {
        return Err(Error::UnknownVertex(v));
    }
    let map = RadialMap::from_sources(g, &g.faces(), &[v])?;
    Ok(isolated_in(&map, t, l))
}

/// Isolation test against a precomputed radial map from the vertex.
pub fn isolated_in(map: &RadialMap, t: &[Vertex], l: usize) -> bool {
    t.iter().all(|&x| map.get(x).is_none_or(|d| d > l))
}

/// One element of a walk: a vertex or an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Elem {
    V(Vertex),
    E(EdgeId),
}

#[derive(Clone, Debug, Serialize)]
pub struct Chord {
    /// The two vertices of C_i where the chord leaves and re-enters.
    pub ends: (Vertex, Vertex),
    /// Vertices strictly inside D_i.
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
    /// Components of the chord outside D_{i-1} (empty for i = 0).
    pub semichords: Vec<Vec<Elem>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Segment {
    pub id: usize,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<EdgeId>,
    /// Equal entries when the segment is a single vertex.
    pub endpoints: (Vertex, Vertex),
    pub eccentricity: usize,
    /// i-chords keyed by i.
    pub chords: BTreeMap<usize, Vec<Chord>>,
}

impl Segment {
    pub fn has_zero_chord(&self) -> bool {
        self.chords.get(&0).is_some_and(|c| !c.is_empty())
    }

    pub fn semichord_count(&self) -> usize {
        self.chords
            .values()
            .flat_map(|cs| cs.iter().map(|c| c.semichords.len()))
            .sum()
    }
}

/// A sequence with a T-loop whose outermost disk avoids every terminal.
#[derive(Clone, Debug)]
pub struct ClConfiguration {
    pub seq: ConcentricSequence,
    pub loop_edges: Vec<EdgeId>,
    loop_walk: Vec<Vertex>,
    pub terminals: Vec<Vertex>,
}

impl ClConfiguration {
    pub fn new(
        g: &EmbeddedGraph,
        seq: ConcentricSequence,
        loop_edges: &[EdgeId],
        t: &[Vertex],
    ) -> Result<Self> {
        let walk = cycle_vertices(g, loop_edges)?;
        if let Some(&x) = t.iter().find(|x| !walk.contains(x)) {
            return Err(Error::InvalidConfiguration(format!("loop misses terminal {x}")));
        }
        let r = seq.depth();
        if let Some(&x) = t.iter().find(|&&x| seq.in_disk(r, x)) {
            return Err(Error::InvalidConfiguration(format!(
                "terminal {x} lies in the outermost disk"
            )));
        }
        if t.is_empty() {
            return Err(Error::InvalidConfiguration("no terminals".into()));
        }
        Ok(ClConfiguration {
            seq,
            loop_edges: loop_edges.to_vec(),
            loop_walk: walk,
            terminals: t.to_vec(),
        })
    }

    /// Loop as a closed element sequence v0 e0 v1 e1 ... starting at a
    /// terminal.
    fn loop_elements(&self, g: &EmbeddedGraph) -> Vec<Elem> {
        let walk = &self.loop_walk;
        let start = walk.iter().position(|&v| v == self.terminals[0]).unwrap();
        let m = walk.len();
        let mut out = Vec::with_capacity(2 * m);
        for s in 0..m {
            let a = walk[(start + s) % m];
            let b = walk[(start + s + 1) % m];
            out.push(Elem::V(a));
            let e = *self
                .loop_edges
                .iter()
                .find(|&&e| {
                    let (x, y) = g.endpoints(e).unwrap();
                    (x, y) == (a, b) || (x, y) == (b, a)
                })
                .unwrap();
            out.push(Elem::E(e));
        }
        out
    }
}

fn in_closed(seq: &ConcentricSequence, i: usize, x: Elem) -> bool {
    match x {
        Elem::V(v) => seq.in_disk(i, v),
        Elem::E(e) => seq.edge_in_disk(i, e),
    }
}

fn in_open(seq: &ConcentricSequence, i: usize, x: Elem) -> bool {
    match x {
        Elem::V(v) => seq.in_open_disk(i, v),
        Elem::E(e) => seq.edge_in_open_disk(i, e),
    }
}

/// Maximal runs of consecutive elements satisfying `keep`.
fn runs(elems: &[Elem], keep: impl Fn(Elem) -> bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < elems.len() {
        if keep(elems[i]) {
            let s = i;
            while i < elems.len() && keep(elems[i]) {
                i += 1;
            }
            out.push((s, i));
        } else {
            i += 1;
        }
    }
    out
}

/// The C_j-segments of the configuration: components of L ∩ D_j.
pub fn extract_segments(g: &EmbeddedGraph, q: &ClConfiguration, j: usize) -> Vec<Segment> {
    let seq = &q.seq;
    let elems = q.loop_elements(g);
    // elems starts at a terminal, which is outside every disk, so no run wraps
    let mut out = Vec::new();
    for (s, t) in runs(&elems, |x| in_closed(seq, j, x)) {
        let part = &elems[s..t];
        let vertices: Vec<Vertex> = part
            .iter()
            .filter_map(|x| if let Elem::V(v) = x { Some(*v) } else { None })
            .collect();
        let edges: Vec<EdgeId> = part
            .iter()
            .filter_map(|x| if let Elem::E(e) = x { Some(*e) } else { None })
            .collect();
        let eccentricity = (0..=j)
            .find(|&i| vertices.iter().any(|&v| seq.on_cycle(i, v)))
            .unwrap_or(j);
        let mut chords = BTreeMap::new();
        for i in 0..=j {
            let mut list = Vec::new();
            for (a, b) in runs(part, |x| in_open(seq, i, x)) {
                let piece = &part[a..b];
                let ends = match (part.get(a.wrapping_sub(1)), part.get(b)) {
                    (Some(Elem::V(x)), Some(Elem::V(y))) => (*x, *y),
                    _ => unreachable!("chords are flanked by cycle vertices"),
                };
                let semichords = if i == 0 {
                    Vec::new()
                } else {
                    runs(piece, |x| !in_closed(seq, i - 1, x))
                        .into_iter()
                        .map(|(c, d)| piece[c..d].to_vec())
                        .collect()
                };
                list.push(Chord {
                    ends,
                    vertices: piece
                        .iter()
                        .filter_map(|x| if let Elem::V(v) = x { Some(*v) } else { None })
                        .collect(),
                    edges: piece
                        .iter()
                        .filter_map(|x| if let Elem::E(e) = x { Some(*e) } else { None })
                        .collect(),
                    semichords,
                });
            }
            if !list.is_empty() {
                chords.insert(i, list);
            }
        }
        out.push(Segment {
            id: out.len(),
            endpoints: (vertices[0], *vertices.last().unwrap()),
            vertices,
            edges,
            eccentricity,
            chords,
        });
    }
    out
}

/// Zone of a segment at level `j` as a set of interior faces of D_j: every
/// face region of D_j minus the segment other than the one holding D_0.
/// `None` for segments with a 0-chord.
pub fn zone(g: &EmbeddedGraph, seq: &ConcentricSequence, j: usize, s: &Segment) -> Option<Vec<bool>> {
    if s.has_zero_chord() {
        return None;
    }
    let faces = seq.faces();
    let mut cut = vec![true; g.edge_bound()];
    for (e, _, _) in g.edges() {
        cut[e] = !seq.edge_in_open_disk(j, e);
    }
    for &e in &s.edges {
        cut[e] = true;
    }
    let (region, _) = faces.regions(&cut);
    let core = (0..faces.len()).find(|&f| seq.face_in_disk(0, f)).unwrap();
    Some(
        (0..faces.len())
            .map(|f| seq.face_in_disk(j, f) && region[f] != region[core])
            .collect(),
    )
}

/// `a` lies in the zone `zone_b` of another segment.
fn in_zone(seq: &ConcentricSequence, j: usize, a: &Segment, zone_b: &[bool]) -> bool {
    let faces = seq.faces();
    let v = a.vertices[0];
    faces
        .faces_at(v)
        .iter()
        .filter(|&&f| seq.face_in_disk(j, f))
        .any(|&f| zone_b[f])
}

/// Zone containment among the segments: `prec[a][b]` when `a` lies in the
/// zone of `b`.
pub fn precedence(g: &EmbeddedGraph, seq: &ConcentricSequence, j: usize, segs: &[Segment]) -> Vec<Vec<bool>> {
    let zones: Vec<Option<Vec<bool>>> = segs.iter().map(|s| zone(g, seq, j, s)).collect();
    let n = segs.len();
    let mut prec = vec![vec![false; n]; n];
    for a in 0..n {
        for b in 0..n {
            if a != b {
                if let Some(zb) = &zones[b] {
                    prec[a][b] = zones[a].is_some() && in_zone(seq, j, &segs[a], zb);
                }
            }
        }
    }
    prec
}

/// Arc of `cycle` from position `a` to position `b` going forward or back.
fn arc(cycle: &[Vertex], a: usize, b: usize, forward: bool) -> Vec<Vertex> {
    let m = cycle.len();
    let mut out = vec![cycle[a]];
    let mut i = a;
    while i != b {
        i = if forward { (i + 1) % m } else { (i + m - 1) % m };
        out.push(cycle[i]);
    }
    out
}

fn arc_edges(g: &EmbeddedGraph, cyc_edges: &[EdgeId], vs: &[Vertex]) -> Vec<EdgeId> {
    vs.windows(2)
        .map(|w| {
            *cyc_edges
                .iter()
                .find(|&&e| {
                    let (x, y) = g.endpoints(e).unwrap();
                    (x, y) == (w[0], w[1]) || (x, y) == (w[1], w[0])
                })
                .unwrap()
        })
        .collect()
}

/// The parallel relation between two segments at level `j`.
pub fn parallel(
    g: &EmbeddedGraph,
    seq: &ConcentricSequence,
    j: usize,
    segs: &[Segment],
    s1: usize,
    s2: usize,
) -> bool {
    if s1 == s2 {
        return true;
    }
    let cyc = seq.cycle_vertices(j);
    let pos = |v: Vertex| cyc.iter().position(|&x| x == v).unwrap();
    let (u1, v1) = segs[s1].endpoints;
    let (u2, v2) = segs[s2].endpoints;
    let core = (0..seq.faces().len()).find(|&f| seq.face_in_disk(0, f)).unwrap();
    for (a, b, c, d) in [(u1, u2, v1, v2), (u1, v2, v1, u2)] {
        for fa in [true, false] {
            for fc in [true, false] {
                let p = arc(cyc, pos(a), pos(b), fa);
                let p2 = arc(cyc, pos(c), pos(d), fc);
                // condition 1: neither path passes through the other endpoints
                let bad_p = p[1..p.len().saturating_sub(1)]
                    .iter()
                    .any(|x| [c, d].contains(x));
                let bad_p2 = p2[1..p2.len().saturating_sub(1)]
                    .iter()
                    .any(|x| [a, b].contains(x));
                let ends_p = [a, b].iter().any(|x| [c, d].contains(x) && !(a == c || b == d));
                if bad_p || bad_p2 || ends_p {
                    continue;
                }
                if p.iter().any(|x| p2.contains(x)) {
                    continue;
                }
                // condition 2: no segment with both endpoints on P or on P'
                let both_on = |path: &[Vertex]| {
                    segs.iter()
                        .any(|s| path.contains(&s.endpoints.0) && path.contains(&s.endpoints.1))
                };
                if both_on(&p) || both_on(&p2) {
                    continue;
                }
                // condition 3: the cycle P + S1 + P' + S2 does not enclose D_0
                let mut cut = vec![false; g.edge_bound()];
                for e in arc_edges(g, seq.cycle(j), &p)
                    .into_iter()
                    .chain(arc_edges(g, seq.cycle(j), &p2))
                    .chain(segs[s1].edges.iter().copied())
                    .chain(segs[s2].edges.iter().copied())
                {
                    cut[e] = true;
                }
                let (region, _) = seq.faces().regions(&cut);
                if region[core] == region[seq.outer_face()] {
                    return true;
                }
            }
        }
    }
    false
}

#[derive(Clone, Debug, Serialize)]
pub struct TypeClass {
    /// Segment ids ordered by zone containment, outermost first.
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TypePartition {
    pub classes: Vec<TypeClass>,
    /// Segments with a 0-chord, left out of the partition.
    pub excluded: Vec<usize>,
}

/// Classes of the transitive closure of the parallel relation over the
/// segments without a 0-chord.
pub fn type_partition(g: &EmbeddedGraph, q: &ClConfiguration, j: usize) -> TypePartition {
    let segs = extract_segments(g, q, j);
    type_partition_of(g, &q.seq, j, &segs)
}

pub fn type_partition_of(g: &EmbeddedGraph, seq: &ConcentricSequence, j: usize, segs: &[Segment]) -> TypePartition {
    let n = segs.len();
    let ok: Vec<usize> = (0..n).filter(|&i| !segs[i].has_zero_chord()).collect();
    let excluded: Vec<usize> = (0..n).filter(|&i| segs[i].has_zero_chord()).collect();
    let mut comp: Vec<usize> = (0..n).collect();
    for (x, &a) in ok.iter().enumerate() {
        for &b in &ok[x + 1..] {
            if parallel(g, seq, j, segs, a, b) {
                let (ra, rb) = (comp[a], comp[b]);
                for c in comp.iter_mut() {
                    if *c == rb {
                        *c = ra;
                    }
                }
            }
        }
    }
    let prec = precedence(g, seq, j, segs);
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for &a in &ok {
        groups.entry(comp[a]).or_default().push(a);
    }
    let classes = groups
        .into_values()
        .map(|mut members| {
            // outermost first: more members inside its zone
            let all = members.clone();
            members.sort_by_key(|&a| {
                let inside = all.iter().filter(|&&b| prec[b][a]).count();
                (std::cmp::Reverse(inside), a)
            });
            TypeClass { members }
        })
        .collect();
    TypePartition { classes, excluded }
}

#[derive(Clone, Debug, Serialize)]
pub struct Convexity {
    pub segment: usize,
    pub no_zero_chord: bool,
    pub at_most_one_chord: bool,
    pub chord_touches_inner: bool,
    pub two_semichords: bool,
    pub deeper_in_zone: bool,
}

impl Convexity {
    pub fn convex(&self) -> bool {
        self.no_zero_chord
            && self.at_most_one_chord
            && self.chord_touches_inner
            && self.two_semichords
            && self.deeper_in_zone
    }
}

/// Conditions (i)-(iii) of convexity for every segment of the configuration.
pub fn check_convex(g: &EmbeddedGraph, q: &ClConfiguration) -> Vec<Convexity> {
    let r = q.seq.depth();
    let segs = extract_segments(g, q, r);
    let prec = precedence(g, &q.seq, r, &segs);
    segs.iter()
        .map(|s| {
            let mut one = true;
            let mut touches = true;
            let mut two = true;
            for i in 1..=r {
                let chords = s.chords.get(&i).map(|c| c.as_slice()).unwrap_or(&[]);
                one &= chords.len() <= 1;
                if !chords.is_empty() {
                    touches &= s.vertices.iter().any(|&v| q.seq.on_cycle(i - 1, v));
                }
                two &= chords.iter().all(|c| c.semichords.len() == 2);
            }
            let deeper = s.eccentricity >= r
                || (0..segs.len()).any(|o| {
                    o != s.id && prec[o][s.id] && segs[o].eccentricity == s.eccentricity + 1
                });
            Convexity {
                segment: s.id,
                no_zero_chord: !s.has_zero_chord(),
                at_most_one_chord: one,
                chord_touches_inner: touches,
                two_semichords: two,
                deeper_in_zone: deeper,
            }
        })
        .collect()
}

/// Number of loop edges off every cycle of the sequence.
pub fn loop_cost(l: &[EdgeId], seq: &ConcentricSequence) -> usize {
    l.iter().filter(|&&e| !seq.edge_on_any_cycle(e)).count()
}

#[derive(Clone, Debug, Serialize)]
pub struct SegmentForest {
    pub level: usize,
    /// Segment ids taking part (those without a 0-chord).
    pub nodes: Vec<usize>,
    /// Parent per segment id.
    pub parent: Vec<Option<usize>>,
    /// Height per segment id (leaves 0).
    pub height: Vec<usize>,
    /// Number of segments in the subtree of each segment, itself included.
    pub subtree_size: Vec<usize>,
}

impl SegmentForest {
    pub fn height_max(&self) -> usize {
        self.nodes.iter().map(|&n| self.height[n]).max().unwrap_or(0)
    }
}

/// Forest of the parent/child relation induced by zone containment.
pub fn build_segment_forest(g: &EmbeddedGraph, q: &ClConfiguration, j: usize) -> (SegmentForest, usize) {
    let segs = extract_segments(g, q, j);
    let f = forest_of(g, &q.seq, j, &segs);
    let h = f.height_max();
    (f, h)
}

pub fn forest_of(g: &EmbeddedGraph, seq: &ConcentricSequence, j: usize, segs: &[Segment]) -> SegmentForest {
    let n = segs.len();
    let prec = precedence(g, seq, j, segs);
    let nodes: Vec<usize> = (0..n).filter(|&i| !segs[i].has_zero_chord()).collect();
    let mut parent = vec![None; n];
    for &a in &nodes {
        let ancestors: Vec<usize> = nodes.iter().copied().filter(|&b| prec[a][b]).collect();
        parent[a] = ancestors
            .iter()
            .copied()
            .find(|&b| !ancestors.iter().any(|&c| c != b && prec[c][b]));
    }
    let mut height = vec![0usize; n];
    let mut subtree = vec![1usize; n];
    // process deepest first: a node's descendants all precede it in zone order
    let mut order = nodes.clone();
    order.sort_by_key(|&a| nodes.iter().filter(|&&b| prec[b][a]).count());
    for &a in &order {
        for &c in &nodes {
            if parent[c] == Some(a) {
                height[a] = height[a].max(height[c] + 1);
                subtree[a] += subtree[c];
            }
        }
    }
    SegmentForest {
        level: j,
        nodes,
        parent,
        height,
        subtree_size: subtree,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{cycle, from_drawing, nested_rings, triangle, wheel};

    fn ring_edges(g: &EmbeddedGraph, ring: &[Vertex]) -> Vec<EdgeId> {
        let m = ring.len();
        (0..m)
            .map(|i| {
                g.edges()
                    .find(|&(_, a, b)| {
                        (a, b) == (ring[i], ring[(i + 1) % m]) || (b, a) == (ring[i], ring[(i + 1) % m])
                    })
                    .unwrap()
                    .0
            })
            .collect()
    }

    #[test]
    fn concentric_examples() {
        let g = triangle();
        let c: Vec<EdgeId> = g.edges().map(|x| x.0).collect();
        assert_eq!(check_concentric(&g, &[c]).unwrap().depth(), 0);
        let r = nested_rings(3, 2, &[vec![0, 1, 2]], false);
        let cs: Vec<_> = r.rings.iter().map(|ring| ring_edges(&r.graph, ring)).collect();
        let seq = check_concentric(&r.graph, &cs).unwrap();
        assert_eq!(seq.depth(), 1);
        assert!(check_tight(&r.graph, &seq));
        // two triangles side by side joined by an edge
        let pts = [(0.0, 0.0), (1.0, 0.0), (0.5, 1.0), (3.0, 0.0), (4.0, 0.0), (3.5, 1.0)];
        let g = from_drawing(&pts, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (1, 3)]);
        let a = ring_edges(&g, &[0, 1, 2]);
        let b = ring_edges(&g, &[3, 4, 5]);
        let faces = g.faces();
        let outer = faces.outer_face().unwrap();
        assert!(matches!(
            check_concentric_with(&g, faces, &[a, b], outer),
            Err(Error::NotNested(0, 1))
        ));
    }

    #[test]
    fn tightness_examples() {
        // depth 0: square with a diagonal inside is not chordless
        let pts = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0), (-1.0, 2.0)];
        let g = from_drawing(&pts, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (2, 4), (4, 0)]);
        let c = ring_edges(&g, &[0, 1, 2, 3]);
        let faces = g.faces();
        let outer = faces.faces_at(4)[0];
        let seq = check_concentric_with(&g, faces, &[c], outer).unwrap();
        assert!(!check_tight(&g, &seq));
        // extra full ring between two nested triangles
        let r = nested_rings(3, 3, &[vec![0], vec![0]], false);
        let cs = vec![
            ring_edges(&r.graph, &r.rings[0]),
            ring_edges(&r.graph, &r.rings[2]),
        ];
        let seq = check_concentric(&r.graph, &cs).unwrap();
        assert!(!check_tight(&r.graph, &seq));
    }

    #[test]
    fn isolation_by_radial_distance() {
        let g = triangle();
        assert!(!is_isolated(&g, &[2], 2, 0).unwrap());
        assert!(is_isolated(&g, &[1], 0, 0).unwrap());
        assert!(!is_isolated(&g, &[1], 0, 1).unwrap());
        let w = wheel(5);
        assert!(!is_isolated(&w, &[1], 0, 1).unwrap());
    }

    #[test]
    fn loop_cost_counts_off_cycle_edges() {
        let g = cycle(4);
        let c: Vec<EdgeId> = g.edges().map(|x| x.0).collect();
        let seq = check_concentric(&g, std::slice::from_ref(&c)).unwrap();
        assert_eq!(loop_cost(&c, &seq), 0);
    }
}
