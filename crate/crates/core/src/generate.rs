//! Instance builders and the seeded generator families.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::planar_core::{EmbeddedGraph, Vertex};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Straight-line drawing to rotation system: neighbours sorted by angle.
pub fn from_drawing(points: &[(f64, f64)], edges: &[(Vertex, Vertex)]) -> EmbeddedGraph {
    let mut g = EmbeddedGraph::with_vertices(points.len());
    let ids: Vec<_> = edges.iter().map(|&(u, v)| g.add_edge(u, v)).collect();
    for v in 0..points.len() {
        let mut rot: Vec<(f64, usize)> = ids
            .iter()
            .zip(edges)
            .filter_map(|(&e, &(a, b))| {
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    return None;
                };
                let (dx, dy) = (points[w].0 - points[v].0, points[w].1 - points[v].1);
                Some((dy.atan2(dx), e))
            })
            .collect();
        rot.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap().then(a.1.cmp(&b.1)));
        g.set_rotation(v, rot.into_iter().map(|(_, e)| e).collect());
    }
    g
}

fn polygon(m: usize, radius: f64, phase: f64) -> Vec<(f64, f64)> {
    (0..m)
        .map(|i| {
            let a = phase + std::f64::consts::TAU * i as f64 / m as f64;
            (radius * a.cos(), radius * a.sin())
        })
        .collect()
}

pub fn triangle() -> EmbeddedGraph {
    cycle(3)
}

pub fn cycle(n: usize) -> EmbeddedGraph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    from_drawing(&polygon(n, 1.0, 0.0), &edges)
}

pub fn path(n: usize) -> EmbeddedGraph {
    let pts: Vec<_> = (0..n).map(|i| (i as f64, 0.0)).collect();
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    from_drawing(&pts, &edges)
}

/// Star with centre 0 and leaves `1..=leaves`.
pub fn star(leaves: usize) -> EmbeddedGraph {
    let mut pts = vec![(0.0, 0.0)];
    pts.extend(polygon(leaves, 1.0, 0.0));
    let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
    from_drawing(&pts, &edges)
}

/// K4 drawn as a triangle `0,1,2` with `3` in the middle.
pub fn k4() -> EmbeddedGraph {
    let mut pts = polygon(3, 1.0, 0.3);
    pts.push((0.0, 0.0));
    from_drawing(&pts, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 3), (2, 3)])
}

/// `rows x cols` grid, vertex `(i, j)` has id `i * cols + j`.
pub fn grid(rows: usize, cols: usize) -> EmbeddedGraph {
    let mut pts = Vec::new();
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            pts.push((j as f64, -(i as f64)));
            let v = i * cols + j;
            if j + 1 < cols {
                edges.push((v, v + 1));
            }
            if i + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    from_drawing(&pts, &edges)
}

/// Wheel: hub 0 and rim `1..=m`.
pub fn wheel(m: usize) -> EmbeddedGraph {
    let mut pts = vec![(0.0, 0.0)];
    pts.extend(polygon(m, 1.0, 0.0));
    let mut edges: Vec<_> = (1..=m).map(|i| (0, i)).collect();
    edges.extend((0..m).map(|i| (1 + i, 1 + (i + 1) % m)));
    from_drawing(&pts, &edges)
}

/// Layout of `depth` concentric `m`-gons. Ring `r` (0 innermost) holds
/// vertices `offset + r*m .. offset + (r+1)*m`.
pub struct Rings {
    pub graph: EmbeddedGraph,
    pub hub: Option<Vertex>,
    pub rings: Vec<Vec<Vertex>>,
}

/// Nested rings with spokes between consecutive rings. `spokes[r]` lists the
/// positions joined between ring `r` and ring `r + 1`. With `hub`, a centre
/// vertex is joined to every innermost ring vertex.
pub fn nested_rings(m: usize, depth: usize, spokes: &[Vec<usize>], hub: bool) -> Rings {
    let mut pts = Vec::new();
    let mut edges = Vec::new();
    let hub_id = if hub {
        pts.push((0.0, 0.0));
        Some(0)
    } else {
        None
    };
    let mut rings = Vec::new();
    for r in 0..depth {
        let base = pts.len();
        pts.extend(polygon(m, (r + 1) as f64, 0.1));
        let ring: Vec<Vertex> = (base..base + m).collect();
        for i in 0..m {
            edges.push((ring[i], ring[(i + 1) % m]));
        }
        if r == 0 {
            if let Some(h) = hub_id {
                edges.extend(ring.iter().map(|&v| (h, v)));
            }
        } else {
            let inner: &Vec<Vertex> = &rings[r - 1];
            for &p in &spokes[r - 1] {
                edges.push((inner[p], ring[p]));
            }
        }
        rings.push(ring);
    }
    Rings {
        graph: from_drawing(&pts, &edges),
        hub: hub_id,
        rings,
    }
}

/// Random planar graph: a stacked triangulation on `n` vertices, thinned by
/// deleting each edge with probability `p_delete` and then re-densified with
/// random chords inside faces.
pub fn random_planar(n: usize, p_delete: f64, chords: usize, rng: &mut impl Rng) -> EmbeddedGraph {
    if n <= 3 {
        let mut g = if n == 3 { triangle() } else { path(n) };
        let drop: Vec<_> = g.edges().map(|(e, _, _)| e).collect();
        for e in drop {
            if rng.gen_bool(p_delete) {
                g.remove_edge(e);
            }
        }
        return g;
    }
    let mut g = triangle();
    while g.vertex_count() < n {
        let faces = g.faces();
        let f = rng.gen_range(0..faces.len());
        let len = faces.faces[f].walk.len();
        let start = rng.gen_range(0..len);
        let (w, _) = g.attach_pendant(&faces, f, start);
        // w now sits in a face together with the other corners of f
        let links = rng.gen_range(1..=2usize);
        for _ in 0..links {
            let faces = g.faces();
            let d = g.rotation(w)[0];
            let fw = faces
                .faces
                .iter()
                .find(|fc| fc.walk.iter().any(|x| x.edge == d && g.dart_tail(*x) == w))
                .unwrap();
            let wi = fw.walk.iter().position(|x| g.dart_tail(*x) == w).unwrap();
            let nbrs: Vec<Vertex> = g.neighbors(w).iter().map(|&(_, x)| x).collect();
            let options: Vec<usize> = (0..fw.walk.len())
                .filter(|&j| {
                    let x = g.dart_tail(fw.walk[j]);
                    x != w && !nbrs.contains(&x)
                })
                .collect();
            if let Some(&j) = options.choose(rng) {
                let fid = fw.id;
                g.insert_edge_in_face(&faces, fid, wi, j);
            }
        }
    }
    let ids: Vec<_> = g.edges().map(|(e, _, _)| e).collect();
    for e in ids {
        if rng.gen_bool(p_delete) {
            g.remove_edge(e);
        }
    }
    for _ in 0..chords {
        add_random_chord(&mut g, rng);
    }
    g
}

/// Inserts one chord between two non-adjacent corners of a random face.
pub fn add_random_chord(g: &mut EmbeddedGraph, rng: &mut impl Rng) -> bool {
    let faces = g.faces();
    if faces.is_empty() {
        return false;
    }
    let f = rng.gen_range(0..faces.len());
    let walk = &faces.faces[f].walk;
    let mut pairs = Vec::new();
    for i in 0..walk.len() {
        for j in i + 1..walk.len() {
            let (a, b) = (g.dart_tail(walk[i]), g.dart_tail(walk[j]));
            if a != b && !g.neighbors(a).iter().any(|&(_, x)| x == b) {
                pairs.push((i, j));
            }
        }
    }
    match pairs.choose(rng) {
        Some(&(i, j)) => {
            g.insert_edge_in_face(&faces, f, i, j);
            true
        }
        None => false,
    }
}

/// Vertices on the designated outer face, ascending.
pub fn outer_vertices(g: &EmbeddedGraph) -> Vec<Vertex> {
    let faces = g.faces();
    match faces.outer_face() {
        Some(f) => faces.vertices_of(f).to_vec(),
        None => g.vertices().collect(),
    }
}

fn mark(g: &mut EmbeddedGraph, ts: &[Vertex]) {
    for &t in ts {
        g.set_terminal(t, true);
    }
}

fn pick(pool: &[Vertex], k: usize, rng: &mut impl Rng) -> Vec<Vertex> {
    let mut ts: Vec<Vertex> = pool.choose_multiple(rng, k.min(pool.len())).copied().collect();
    ts.sort_unstable();
    ts
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    NestedRings,
    GridWithTerminals,
    RandomPlanar,
    ConcentricGadget,
}

impl Family {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "nested-rings" => Ok(Family::NestedRings),
            "grid-with-terminals" => Ok(Family::GridWithTerminals),
            "random-planar" => Ok(Family::RandomPlanar),
            "concentric-gadget" => Ok(Family::ConcentricGadget),
            _ => Err(Error::BadParams(format!("unknown family {s}"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::NestedRings => "nested-rings",
            Family::GridWithTerminals => "grid-with-terminals",
            Family::RandomPlanar => "random-planar",
            Family::ConcentricGadget => "concentric-gadget",
        }
    }
}

#[derive(Clone, Debug)]
pub struct GenParams {
    /// Vertex count target (random-planar, grid-with-terminals).
    pub n: usize,
    /// Number of rings (nested-rings, concentric-gadget).
    pub depth: usize,
    /// Terminal count.
    pub k: usize,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams { n: 20, depth: 3, k: 3 }
    }
}

/// Seeded family generator; the same `(family, params, seed)` always yields
/// the same graph.
pub fn generate(family: Family, params: &GenParams, seed: u64) -> Result<EmbeddedGraph> {
    let mut rng = rng(seed);
    let k = params.k;
    let g = match family {
        Family::NestedRings => {
            if params.depth == 0 {
                return Err(Error::BadParams("depth must be at least 1".into()));
            }
            let m = 6;
            let spokes = random_spokes(m, params.depth, &mut rng);
            let mut r = nested_rings(m, params.depth, &spokes, false);
            let ts = pick(r.rings.last().unwrap(), k, &mut rng);
            mark(&mut r.graph, &ts);
            r.graph
        }
        Family::GridWithTerminals => {
            let side = (params.n as f64).sqrt().round().max(2.0) as usize;
            let rows = side;
            let cols = (params.n / side).max(2);
            let mut g = grid(rows, cols);
            let ts = pick(&outer_vertices(&g), k, &mut rng);
            mark(&mut g, &ts);
            g
        }
        Family::RandomPlanar => {
            if params.n == 0 {
                return Err(Error::BadParams("n must be positive".into()));
            }
            let mut g = random_planar(params.n, 0.3, params.n / 4, &mut rng);
            let all: Vec<Vertex> = g.vertices().collect();
            let ts = pick(&all, k, &mut rng);
            mark(&mut g, &ts);
            g
        }
        Family::ConcentricGadget => {
            if params.depth == 0 {
                return Err(Error::BadParams("depth must be at least 1".into()));
            }
            let gadget = concentric_gadget(6, params.depth, k.max(1), &mut rng);
            gadget.graph
        }
    };
    Ok(g)
}

fn random_spokes(m: usize, depth: usize, rng: &mut impl Rng) -> Vec<Vec<usize>> {
    (1..depth)
        .map(|_| {
            let mut s: Vec<usize> = (0..m).filter(|_| rng.gen_bool(0.5)).collect();
            if s.is_empty() {
                s.push(rng.gen_range(0..m));
            }
            s
        })
        .collect()
}

/// A hub inside `depth` nested rings, with `k` pendant terminals hung off the
/// outermost ring.
pub fn concentric_gadget(m: usize, depth: usize, k: usize, rng: &mut impl Rng) -> Rings {
    let spokes = random_spokes(m, depth, rng);
    let mut r = nested_rings(m, depth, &spokes, true);
    let outer = r.rings.last().unwrap().clone();
    let anchors = pick(&outer, k, rng);
    let mut rim = outer.clone();
    for a in anchors {
        let faces = r.graph.faces();
        // the unbounded face is the only one touching nothing but the rim
        let f = (0..faces.len())
            .find(|&f| faces.vertices_of(f).iter().all(|v| rim.contains(v)))
            .unwrap();
        let i = faces.faces[f]
            .walk
            .iter()
            .position(|&d| r.graph.dart_tail(d) == a)
            .unwrap();
        let (t, _) = r.graph.attach_pendant(&faces, f, i);
        r.graph.set_terminal(t, true);
        rim.push(t);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes_validate() {
        for g in [triangle(), path(4), star(3), k4(), grid(3, 4), wheel(5), cycle(6)] {
            g.validate().unwrap();
        }
        let r = nested_rings(5, 3, &[vec![0, 2], vec![1]], true);
        r.graph.validate().unwrap();
        assert_eq!(r.graph.vertex_count(), 16);
    }

    #[test]
    fn random_planar_is_euler_valid() {
        let mut rng = rng(3);
        for n in 1..40 {
            let g = random_planar(n, 0.3, n / 3, &mut rng);
            assert_eq!(g.vertex_count(), n);
            g.validate().unwrap();
        }
    }

    #[test]
    fn families_are_deterministic_and_valid() {
        let p = GenParams { n: 30, depth: 3, k: 4 };
        for fam in [
            Family::NestedRings,
            Family::GridWithTerminals,
            Family::RandomPlanar,
            Family::ConcentricGadget,
        ] {
            let a = generate(fam, &p, 11).unwrap();
            let b = generate(fam, &p, 11).unwrap();
            assert_eq!(a, b);
            a.validate().unwrap();
            assert!(!a.terminals().is_empty());
        }
    }

    #[test]
    fn pendant_and_chord_insertion() {
        let mut g = cycle(5);
        let faces = g.faces();
        let (w, _) = g.attach_pendant(&faces, 0, 2);
        let faces = g.validate().unwrap();
        assert_eq!(faces.len(), 2);
        let f = faces.faces_at(w)[0];
        let walk = &faces.faces[f].walk;
        let i = walk.iter().position(|&d| g.dart_tail(d) == w).unwrap();
        let j = (i + 3) % walk.len();
        g.insert_edge_in_face(&faces, f, i, j);
        assert_eq!(g.validate().unwrap().len(), 3);
    }
}
