//! Planar multigraphs embedded by a rotation system.
//!
//! Vertex ids are stable: deleting a vertex leaves a tombstone, so reports
//! produced after a reduction still name the original vertices.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type EdgeId = usize;

/// A directed half of an edge. Side 0 leaves the first endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub edge: EdgeId,
    pub side: u8,
}

impl Dart {
    pub fn new(edge: EdgeId, side: u8) -> Self {
        Dart { edge, side }
    }

    pub fn twin(self) -> Self {
        Dart {
            edge: self.edge,
            side: 1 - self.side,
        }
    }

    pub fn index(self) -> usize {
        2 * self.edge + self.side as usize
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EmbeddedGraph {
    alive: Vec<bool>,
    terminal: Vec<bool>,
    edges: Vec<Option<(Vertex, Vertex)>>,
    rotation: Vec<Vec<EdgeId>>,
}

impl EmbeddedGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Vertices `0..n`, no edges.
    pub fn with_vertices(n: usize) -> Self {
        let mut g = Self::new();
        for v in 0..n {
            g.add_vertex(v);
        }
        g
    }

    pub fn add_vertex(&mut self, v: Vertex) {
        if v >= self.alive.len() {
            self.alive.resize(v + 1, false);
            self.terminal.resize(v + 1, false);
            self.rotation.resize(v + 1, Vec::new());
        }
        self.alive[v] = true;
    }

    /// Adds a fresh vertex with the next unused id.
    pub fn new_vertex(&mut self) -> Vertex {
        let v = self.alive.len();
        self.add_vertex(v);
        v
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < self.alive.len() && self.alive[v]
    }

    /// One past the largest vertex id ever used.
    pub fn vertex_bound(&self) -> usize {
        self.alive.len()
    }

    pub fn edge_bound(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.alive.len()).filter(move |&v| self.alive[v])
    }

    pub fn vertex_count(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.iter().filter(|e| e.is_some()).count()
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, Vertex, Vertex)> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter_map(|(e, ends)| ends.map(|(u, v)| (e, u, v)))
    }

    pub fn endpoints(&self, e: EdgeId) -> Option<(Vertex, Vertex)> {
        self.edges.get(e).copied().flatten()
    }

    pub fn other_end(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.endpoints(e).expect("live edge");
        if a == v {
            b
        } else {
            a
        }
    }

    /// Inserts an edge record without touching any rotation. Used by parsers
    /// that supply rotations separately.
    pub fn insert_edge_record(&mut self, e: EdgeId, u: Vertex, v: Vertex) -> Result<()> {
        if !self.contains(u) {
            return Err(Error::UnknownVertex(u));
        }
        if !self.contains(v) {
            return Err(Error::UnknownVertex(v));
        }
        if e >= self.edges.len() {
            self.edges.resize(e + 1, None);
        }
        if self.edges[e].is_some() {
            return Err(Error::MalformedRotation {
                vertex: u,
                detail: format!("edge id {e} used twice"),
            });
        }
        self.edges[e] = Some((u, v));
        Ok(())
    }

    pub fn set_rotation(&mut self, v: Vertex, rot: Vec<EdgeId>) {
        self.rotation[v] = rot;
    }

    pub fn rotation(&self, v: Vertex) -> &[EdgeId] {
        &self.rotation[v]
    }

    /// Adds an edge `u-v` placed right after `after_u` in the rotation of `u`
    /// and right after `after_v` in the rotation of `v` (appended when `None`).
    pub fn add_edge_after(
        &mut self,
        u: Vertex,
        v: Vertex,
        after_u: Option<EdgeId>,
        after_v: Option<EdgeId>,
    ) -> EdgeId {
        assert!(u != v, "loops are added through insert_edge_record");
        let e = self.edges.len();
        self.edges.push(Some((u, v)));
        for (x, after) in [(u, after_u), (v, after_v)] {
            let rot = &mut self.rotation[x];
            match after.and_then(|a| rot.iter().position(|&f| f == a)) {
                Some(p) => rot.insert(p + 1, e),
                None => rot.push(e),
            }
        }
        e
    }

    /// Adds an edge at the end of both rotations.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> EdgeId {
        self.add_edge_after(u, v, None, None)
    }

    /// Incident `(edge, neighbour)` pairs in rotation order.
    pub fn neighbors(&self, v: Vertex) -> Vec<(EdgeId, Vertex)> {
        self.rotation[v]
            .iter()
            .map(|&e| (e, self.other_end(e, v)))
            .collect()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rotation[v].len()
    }

    pub fn is_terminal(&self, v: Vertex) -> bool {
        self.contains(v) && self.terminal[v]
    }

    pub fn set_terminal(&mut self, v: Vertex, t: bool) {
        self.terminal[v] = t;
    }

    pub fn terminals(&self) -> Vec<Vertex> {
        self.vertices().filter(|&v| self.terminal[v]).collect()
    }

    pub fn clear_terminals(&mut self) {
        self.terminal.iter_mut().for_each(|t| *t = false);
    }

    pub fn has_loops(&self) -> bool {
        self.edges().any(|(_, u, v)| u == v)
    }

    pub fn remove_edge(&mut self, e: EdgeId) {
        if let Some((u, v)) = self.edges[e].take() {
            self.rotation[u].retain(|&f| f != e);
            if v != u {
                self.rotation[v].retain(|&f| f != e);
            }
        }
    }

    pub fn remove_vertex(&mut self, v: Vertex) {
        if !self.contains(v) {
            return;
        }
        for e in self.rotation[v].clone() {
            self.remove_edge(e);
        }
        self.alive[v] = false;
        self.terminal[v] = false;
    }

    pub fn remove_vertices(&mut self, vs: impl IntoIterator<Item = Vertex>) {
        for v in vs {
            self.remove_vertex(v);
        }
    }

    /// Keeps only the given vertices.
    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> EmbeddedGraph {
        let mut h = self.clone();
        let drop: Vec<Vertex> = self.vertices().filter(|v| !keep.contains(v)).collect();
        h.remove_vertices(drop);
        h
    }

    /// Replaces edge `e = u-v` by a path `u-w-v` through a fresh vertex `w`.
    pub fn subdivide(&mut self, e: EdgeId) -> (Vertex, EdgeId, EdgeId) {
        let (u, v) = self.endpoints(e).expect("live edge");
        assert!(u != v);
        let w = self.new_vertex();
        let e1 = self.edges.len();
        let e2 = e1 + 1;
        self.edges.push(Some((u, w)));
        self.edges.push(Some((w, v)));
        self.edges[e] = None;
        for x in &mut self.rotation[u] {
            if *x == e {
                *x = e1;
            }
        }
        for x in &mut self.rotation[v] {
            if *x == e {
                *x = e2;
            }
        }
        self.rotation[w] = vec![e1, e2];
        (w, e1, e2)
    }

    /// Contracts the non-loop edge `e`, merging its other endpoint into
    /// `keep`. The rotation of the merged vertex splices the rotation of the
    /// removed endpoint into the slot of `e`, so the embedding stays planar.
    /// Edges parallel to `e` become loops at `keep` and are then removed.
    pub fn contract(&mut self, e: EdgeId, keep: Vertex) {
        let (a, b) = self.endpoints(e).expect("live edge");
        assert!(a != b, "cannot contract a loop");
        let gone = if a == keep { b } else { a };
        assert!(a == keep || b == keep);
        let rk = self.rotation[keep].clone();
        let rg = self.rotation[gone].clone();
        let pk = rk.iter().position(|&f| f == e).unwrap();
        let pg = rg.iter().position(|&f| f == e).unwrap();
        let mut merged = Vec::with_capacity(rk.len() + rg.len());
        merged.extend_from_slice(&rk[..pk]);
        for i in 1..rg.len() {
            merged.push(rg[(pg + i) % rg.len()]);
        }
        merged.extend_from_slice(&rk[pk + 1..]);
        self.edges[e] = None;
        for &f in &rg {
            if f == e {
                continue;
            }
            if let Some((x, y)) = self.edges[f] {
                let x = if x == gone { keep } else { x };
                let y = if y == gone { keep } else { y };
                self.edges[f] = Some((x, y));
            }
        }
        self.rotation[keep] = merged;
        self.rotation[gone].clear();
        self.alive[gone] = false;
        if self.terminal[gone] {
            self.terminal[keep] = true;
        }
        self.terminal[gone] = false;
        let loops: Vec<EdgeId> = self.rotation[keep]
            .iter()
            .copied()
            .filter(|&f| {
                let (x, y) = self.edges[f].unwrap();
                x == y
            })
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        for f in loops {
            self.remove_edge(f);
        }
    }

    /// Removes all but the lowest-id edge of every parallel class.
    pub fn remove_parallel_edges(&mut self) {
        let mut seen = BTreeSet::new();
        let mut drop = Vec::new();
        for (e, u, v) in self.edges() {
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                drop.push(e);
            }
        }
        for e in drop {
            self.remove_edge(e);
        }
    }

    pub fn dart_tail(&self, d: Dart) -> Vertex {
        let (u, v) = self.endpoints(d.edge).expect("live edge");
        if d.side == 0 {
            u
        } else {
            v
        }
    }

    pub fn dart_head(&self, d: Dart) -> Vertex {
        self.dart_tail(d.twin())
    }

    /// Connected components (by edges), each sorted, ordered by smallest id.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut comp = vec![usize::MAX; self.vertex_bound()];
        let mut out = Vec::new();
        for s in self.vertices() {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &e in &self.rotation[x] {
                    let y = self.other_end(e, x);
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Position of every dart in the rotation of its tail.
    fn dart_positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; 2 * self.edges.len()];
        for v in self.vertices() {
            for (i, &e) in self.rotation[v].iter().enumerate() {
                let (a, b) = self.edges[e].unwrap();
                let side = if a == b {
                    if pos[2 * e] == usize::MAX {
                        0
                    } else {
                        1
                    }
                } else if a == v {
                    0
                } else {
                    1
                };
                pos[2 * e + side] = i;
            }
        }
        pos
    }

    /// The dart following `d` on its face: the successor of `twin(d)` in the
    /// rotation at the head of `d`.
    fn face_successor(&self, d: Dart, pos: &[usize]) -> Dart {
        let t = d.twin();
        let y = self.dart_tail(t);
        let rot = &self.rotation[y];
        let q = (pos[t.index()] + 1) % rot.len();
        let f = rot[q];
        let (a, b) = self.edges[f].unwrap();
        let side = if a == b {
            if pos[2 * f] == q {
                0
            } else {
                1
            }
        } else if a == y {
            0
        } else {
            1
        };
        Dart::new(f, side)
    }

    /// Structural check of the rotation system.
    fn check_rotations(&self) -> Result<()> {
        let mut count = vec![0usize; self.edges.len()];
        for v in 0..self.vertex_bound() {
            if !self.alive[v] {
                if !self.rotation[v].is_empty() {
                    return Err(Error::MalformedRotation {
                        vertex: v,
                        detail: "deleted vertex has a rotation".into(),
                    });
                }
                continue;
            }
            for &e in &self.rotation[v] {
                match self.edges.get(e).copied().flatten() {
                    Some((a, b)) if a == v || b == v => count[e] += 1,
                    _ => {
                        return Err(Error::MalformedRotation {
                            vertex: v,
                            detail: format!("edge {e} is not incident"),
                        })
                    }
                }
            }
        }
        for (e, a, b) in self.edges() {
            if !self.contains(a) || !self.contains(b) {
                return Err(Error::MalformedRotation {
                    vertex: a,
                    detail: format!("edge {e} has a deleted endpoint"),
                });
            }
            let per_end = |x: Vertex| self.rotation[x].iter().filter(|&&f| f == e).count();
            let ok = if a == b {
                per_end(a) == 2
            } else {
                per_end(a) == 1 && per_end(b) == 1
            };
            if !ok || count[e] != 2 {
                let vertex = if a != b && per_end(a) == 1 { b } else { a };
                return Err(Error::MalformedRotation {
                    vertex,
                    detail: format!("edge {e} missing or duplicated"),
                });
            }
        }
        Ok(())
    }

    /// Face traversal without validation. Panics on a malformed rotation.
    pub fn faces(&self) -> Faces {
        let pos = self.dart_positions();
        let mut dart_face = vec![usize::MAX; 2 * self.edges.len()];
        let mut faces: Vec<Face> = Vec::new();
        for (e, _, _) in self.edges() {
            for side in 0..2u8 {
                let start = Dart::new(e, side);
                if dart_face[start.index()] != usize::MAX {
                    continue;
                }
                let id = faces.len();
                let mut walk = Vec::new();
                let mut d = start;
                loop {
                    dart_face[d.index()] = id;
                    walk.push(d);
                    d = self.face_successor(d, &pos);
                    if d == start {
                        break;
                    }
                }
                faces.push(Face { id, walk });
            }
        }
        let mut face_vertices = Vec::with_capacity(faces.len());
        let mut vertex_faces = vec![Vec::new(); self.vertex_bound()];
        for f in &faces {
            let mut vs: Vec<Vertex> = f.walk.iter().map(|&d| self.dart_tail(d)).collect();
            vs.sort_unstable();
            vs.dedup();
            for &v in &vs {
                vertex_faces[v].push(f.id);
            }
            face_vertices.push(vs);
        }
        Faces {
            faces,
            dart_face,
            face_vertices,
            vertex_faces,
        }
    }

    /// Corners around every vertex in rotation order. Entry `p` of
    /// `corners[v]` is `(face, walk index)` for the corner between
    /// `rotation(v)[p]` and `rotation(v)[p + 1]`.
    pub fn corners(&self, faces: &Faces) -> Vec<Vec<(usize, usize)>> {
        let pos = self.dart_positions();
        let mut out: Vec<Vec<(usize, usize)>> = (0..self.vertex_bound())
            .map(|v| vec![(usize::MAX, 0); self.rotation[v].len()])
            .collect();
        for f in &faces.faces {
            let len = f.walk.len();
            for (w, &d) in f.walk.iter().enumerate() {
                let prev = f.walk[(w + len - 1) % len].twin();
                out[self.dart_tail(d)][pos[prev.index()]] = (f.id, w);
            }
        }
        out
    }

    /// Rotation slot at the corner of face `f` whose tail is `walk[i]`: the
    /// position right after the twin of the preceding dart.
    fn corner_slot(&self, faces: &Faces, f: usize, i: usize) -> (Vertex, usize) {
        let walk = &faces.faces[f].walk;
        let prev = walk[(i + walk.len() - 1) % walk.len()].twin();
        let y = self.dart_tail(walk[i]);
        let p = self.dart_positions()[prev.index()];
        (y, p + 1)
    }

    /// Draws a new edge inside face `f` between the corners at walk
    /// positions `i` and `j`. The face is split in two.
    pub fn insert_edge_in_face(&mut self, faces: &Faces, f: usize, i: usize, j: usize) -> EdgeId {
        let (u, pu) = self.corner_slot(faces, f, i);
        let (v, pv) = self.corner_slot(faces, f, j);
        assert!(u != v, "corners must be distinct vertices");
        let e = self.edges.len();
        self.edges.push(Some((u, v)));
        self.rotation[u].insert(pu, e);
        self.rotation[v].insert(pv, e);
        e
    }

    /// Adds a fresh degree-one vertex inside face `f`, attached to the corner
    /// at walk position `i`.
    pub fn attach_pendant(&mut self, faces: &Faces, f: usize, i: usize) -> (Vertex, EdgeId) {
        let (u, pu) = self.corner_slot(faces, f, i);
        let w = self.new_vertex();
        let e = self.edges.len();
        self.edges.push(Some((u, w)));
        self.rotation[u].insert(pu, e);
        self.rotation[w].push(e);
        (w, e)
    }

    /// Checks the rotation system and Euler's formula on every component.
    pub fn validate(&self) -> Result<Faces> {
        self.check_rotations()?;
        let faces = self.faces();
        for comp in self.components() {
            if comp.len() == 1 && self.degree(comp[0]) == 0 {
                continue;
            }
            let inside: BTreeSet<Vertex> = comp.iter().copied().collect();
            let e = self
                .edges()
                .filter(|&(_, a, _)| inside.contains(&a))
                .count() as i64;
            let f = faces
                .faces
                .iter()
                .filter(|f| inside.contains(&self.dart_tail(f.walk[0])))
                .count() as i64;
            let euler = comp.len() as i64 - e + f;
            if euler != 2 {
                return Err(Error::NonPlanarCertificate {
                    vertex: comp[0],
                    euler,
                });
            }
        }
        Ok(faces)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub id: usize,
    /// Boundary walk as a cyclic dart sequence; each dart names its tail
    /// vertex and edge.
    pub walk: Vec<Dart>,
}

#[derive(Clone, Debug)]
pub struct Faces {
    pub faces: Vec<Face>,
    dart_face: Vec<usize>,
    face_vertices: Vec<Vec<Vertex>>,
    vertex_faces: Vec<Vec<usize>>,
}

impl Faces {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn face_of(&self, d: Dart) -> usize {
        self.dart_face[d.index()]
    }

    /// Sorted distinct vertices on face `f`.
    pub fn vertices_of(&self, f: usize) -> &[Vertex] {
        &self.face_vertices[f]
    }

    /// Faces incident to `v`, ascending.
    pub fn faces_at(&self, v: Vertex) -> &[usize] {
        self.vertex_faces.get(v).map(|x| x.as_slice()).unwrap_or(&[])
    }

    /// Groups faces into regions that stay connected when the edges flagged
    /// in `cut` (indexed by edge id) are removed. Returns a region label per
    /// face and the number of regions.
    pub fn regions(&self, cut: &[bool]) -> (Vec<usize>, usize) {
        let mut parent: Vec<usize> = (0..self.faces.len()).collect();
        fn find(p: &mut Vec<usize>, x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        for f in &self.faces {
            for d in &f.walk {
                if cut.get(d.edge).copied().unwrap_or(false) {
                    continue;
                }
                let a = find(&mut parent, f.id);
                let b = find(&mut parent, self.face_of(d.twin()));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut label = vec![usize::MAX; self.faces.len()];
        let mut next = 0;
        let mut out = vec![0; self.faces.len()];
        for f in 0..self.faces.len() {
            let r = find(&mut parent, f);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            out[f] = label[r];
        }
        (out, next)
    }

    /// The face used as the unbounded one: the longest walk, lowest id on ties.
    pub fn outer_face(&self) -> Option<usize> {
        self.faces
            .iter()
            .max_by(|a, b| a.walk.len().cmp(&b.walk.len()).then(b.id.cmp(&a.id)))
            .map(|f| f.id)
    }
}

/// Radial distances from a source set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadialMap {
    pub source: Vec<Vertex>,
    dist: Vec<Option<usize>>,
}

impl RadialMap {
    pub fn get(&self, v: Vertex) -> Option<usize> {
        self.dist.get(v).copied().flatten()
    }

    /// `(vertex, distance)` pairs for every reached vertex, ascending by id.
    pub fn iter(&self) -> impl Iterator<Item = (Vertex, usize)> + '_ {
        self.dist
            .iter()
            .enumerate()
            .filter_map(|(v, d)| d.map(|d| (v, d)))
    }

    /// Multi-source radial BFS over precomputed faces.
    pub fn from_sources(g: &EmbeddedGraph, faces: &Faces, sources: &[Vertex]) -> Result<Self> {
        let mut dist = vec![None; g.vertex_bound()];
        let mut face_done = vec![false; faces.len()];
        let mut queue = VecDeque::new();
        for &s in sources {
            if !g.contains(s) {
                return Err(Error::UnknownVertex(s));
            }
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(x) = queue.pop_front() {
            let d = dist[x].unwrap();
            for &f in faces.faces_at(x) {
                if face_done[f] {
                    continue;
                }
                face_done[f] = true;
                for &y in faces.vertices_of(f) {
                    if dist[y].is_none() {
                        dist[y] = Some(d + 1);
                        queue.push_back(y);
                    }
                }
            }
        }
        Ok(RadialMap {
            source: sources.to_vec(),
            dist,
        })
    }
}

pub fn radial_bfs(g: &EmbeddedGraph, source: Vertex) -> Result<RadialMap> {
    if !g.contains(source) {
        return Err(Error::UnknownVertex(source));
    }
    RadialMap::from_sources(g, &g.faces(), &[source])
}

pub fn radial_distance(g: &EmbeddedGraph, u: Vertex, v: Vertex) -> Result<usize> {
    if !g.contains(v) {
        return Err(Error::UnknownVertex(v));
    }
    radial_bfs(g, u)?.get(v).ok_or(Error::Disconnected(u, v))
}

pub fn validate_embedding(g: &EmbeddedGraph) -> Result<(usize, Vec<Face>)> {
    let faces = g.validate()?;
    let isolated = g.vertices().filter(|&v| g.degree(v) == 0).count();
    Ok((faces.len() + isolated, faces.faces))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{grid, path, triangle};

    #[test]
    fn triangle_and_edge_faces() {
        assert_eq!(validate_embedding(&triangle()).unwrap().0, 2);
        assert_eq!(validate_embedding(&path(2)).unwrap().0, 1);
    }

    #[test]
    fn grid_three_has_five_faces() {
        let (count, faces) = validate_embedding(&grid(3, 3)).unwrap();
        assert_eq!(count, 5);
        let mut lens: Vec<usize> = faces.iter().map(|f| f.walk.len()).collect();
        lens.sort();
        assert_eq!(lens, vec![4, 4, 4, 4, 8]);
    }

    #[test]
    fn broken_rotation_is_reported() {
        let mut g = triangle();
        let r = g.rotation(0).to_vec();
        g.set_rotation(0, vec![r[0]]);
        assert!(matches!(
            g.validate(),
            Err(Error::MalformedRotation { .. })
        ));
    }

    #[test]
    fn twisted_rotation_fails_euler() {
        // K4 with one rotation reversed no longer traces a sphere.
        let mut g = EmbeddedGraph::with_vertices(4);
        let e01 = g.add_edge(0, 1);
        let e02 = g.add_edge(0, 2);
        let e03 = g.add_edge(0, 3);
        let e12 = g.add_edge(1, 2);
        let e13 = g.add_edge(1, 3);
        let e23 = g.add_edge(2, 3);
        g.set_rotation(0, vec![e01, e02, e03]);
        g.set_rotation(1, vec![e01, e13, e12]);
        g.set_rotation(2, vec![e02, e12, e23]);
        g.set_rotation(3, vec![e03, e23, e13]);
        assert_eq!(g.validate().unwrap().len(), 4);
        g.set_rotation(3, vec![e03, e13, e23]);
        assert!(matches!(
            g.validate(),
            Err(Error::NonPlanarCertificate { .. })
        ));
    }

    #[test]
    fn radial_examples() {
        let t = triangle();
        let m = radial_bfs(&t, 0).unwrap();
        assert_eq!(m.iter().collect::<Vec<_>>(), vec![(0, 0), (1, 1), (2, 1)]);
        let p = path(5);
        let m = radial_bfs(&p, 0).unwrap();
        assert!((1..5).all(|v| m.get(v) == Some(1)));
        // opposite corners share the outer face
        let g = grid(5, 5);
        assert_eq!(radial_distance(&g, 0, 24).unwrap(), 1);
        assert_eq!(radial_distance(&g, 12, 0).unwrap(), 2);
        assert_eq!(radial_distance(&g, 12, 6).unwrap(), 1);
        assert_eq!(radial_distance(&g, 7, 7).unwrap(), 0);
    }

    #[test]
    fn disconnected_distance() {
        let mut g = path(2);
        g.add_vertex(5);
        assert_eq!(radial_distance(&g, 0, 5), Err(Error::Disconnected(0, 5)));
        assert_eq!(radial_distance(&g, 0, 9), Err(Error::UnknownVertex(9)));
    }

    #[test]
    fn contraction_keeps_embedding() {
        let mut g = grid(3, 3);
        let e = g.rotation(4)[0];
        g.contract(e, 4);
        g.validate().unwrap();
        assert_eq!(g.vertex_count(), 8);
        let (w, _, _) = g.subdivide(g.rotation(4)[0]);
        assert_eq!(g.degree(w), 2);
        g.validate().unwrap();
    }

    #[test]
    fn deletion_keeps_embedding() {
        let mut g = grid(4, 4);
        g.remove_vertex(5);
        g.remove_vertex(10);
        let faces = g.validate().unwrap();
        assert_eq!(g.vertex_count() as i64 - g.edge_count() as i64 + faces.len() as i64, 2);
    }
}
