//! Punctured-plane pieces and irrelevant-vertex removal.
//!
//! A piece is a subgraph together with a list of holes, each given by the
//! vertices on its boundary. Terminals start out as trivial holes. Curves are
//! walks in the radial graph: vertices alternating with faces.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::planar_core::{EmbeddedGraph, Faces, RadialMap, Vertex};

pub const DEFAULT_C1: f64 = 4.0;
pub const DEFAULT_C2: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IsolationBudget {
    pub g_of_k: usize,
}

impl IsolationBudget {
    pub fn new(g_of_k: usize) -> Result<Self> {
        if g_of_k == 0 {
            return Err(Error::BadParams("g(k) must be at least 1".into()));
        }
        Ok(IsolationBudget { g_of_k })
    }

    /// `ceil(c1 * log2(k + 1)) + c2`.
    pub fn with_constants(k: usize, c1: f64, c2: usize) -> Result<Self> {
        if !(c1 >= 0.0) {
            return Err(Error::BadParams(format!("c1 = {c1}")));
        }
        let g = (c1 * ((k + 1) as f64).log2()).ceil() as usize + c2;
        Self::new(g)
    }

    pub fn for_k(k: usize) -> Self {
        Self::with_constants(k, DEFAULT_C1, DEFAULT_C2).unwrap()
    }

    pub fn g(&self) -> usize {
        self.g_of_k
    }

    pub fn four_g(&self) -> usize {
        4 * self.g_of_k
    }

    pub fn five_g_plus_one(&self) -> usize {
        5 * self.g_of_k + 1
    }

    pub fn curve_bound(&self) -> usize {
        6 * self.g_of_k + 6
    }
}

#[derive(Clone, Debug)]
pub struct PuncturedInstance {
    pub graph: EmbeddedGraph,
    /// Boundary vertices of each hole, sorted.
    pub holes: Vec<Vec<Vertex>>,
    pub boundary_vertices: BTreeSet<Vertex>,
    pub hole_count: usize,
}

impl PuncturedInstance {
    pub fn new(graph: EmbeddedGraph, holes: Vec<Vec<Vertex>>) -> Result<Self> {
        if holes.is_empty() || holes.iter().any(|h| h.is_empty()) {
            return Err(Error::BadParams("a punctured instance needs nonempty holes".into()));
        }
        let holes: Vec<Vec<Vertex>> = holes
            .into_iter()
            .map(|mut h| {
                h.sort_unstable();
                h.dedup();
                h
            })
            .collect();
        let mut boundary_vertices = BTreeSet::new();
        for &v in holes.iter().flatten() {
            if !graph.contains(v) {
                return Err(Error::UnknownVertex(v));
            }
            boundary_vertices.insert(v);
        }
        let hole_count = holes.len();
        Ok(PuncturedInstance {
            graph,
            holes,
            boundary_vertices,
            hole_count,
        })
    }

    pub fn summary(&self) -> PieceSummary {
        PieceSummary {
            hole_count: self.hole_count,
            holes: self.holes.clone(),
            vertex_count: self.graph.vertex_count(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PieceSummary {
    pub hole_count: usize,
    pub holes: Vec<Vec<Vertex>>,
    pub vertex_count: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reason {
    /// Terminals lie in several components; every non-terminal goes.
    TerminalsSeparated,
    OutsideTerminalComponent,
    /// A piece boundary vertex that is isolated in the full graph.
    BoundaryIsolated,
    OnePunctured,
    TwoPunctured,
    Quadratic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Removal {
    pub vertex: Vertex,
    pub reason: Reason,
    pub threshold: usize,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct RemovalReport {
    pub g: usize,
    pub removed: Vec<Removal>,
    pub boundary_set: Vec<Vertex>,
    pub pieces: Vec<PieceSummary>,
    /// Vertex count of every curve cut by the reduction, against `6g + 6`.
    pub cut_curves: Vec<usize>,
    pub curve_bound: usize,
    pub leaves: usize,
    pub leaf_bound: usize,
    pub notes: Vec<String>,
}

/// A radial curve `v_0 f_1 v_1 ... f_m v_m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Curve {
    pub vertices: Vec<Vertex>,
    pub faces: Vec<usize>,
}

/// Shortest radial curve from `from` to the first vertex accepted by `to`.
/// Only vertices accepted by `allowed` are used.
pub fn shortest_curve(
    g: &EmbeddedGraph,
    faces: &Faces,
    from: &[Vertex],
    to: impl Fn(Vertex) -> bool,
    allowed: impl Fn(Vertex) -> bool,
) -> Option<Curve> {
    let mut parent: Vec<Option<(Vertex, usize)>> = vec![None; g.vertex_bound()];
    let mut seen = vec![false; g.vertex_bound()];
    let mut face_done = vec![false; faces.len()];
    let mut queue = VecDeque::new();
    for &s in from {
        if g.contains(s) && allowed(s) && !seen[s] {
            if to(s) {
                return Some(Curve {
                    vertices: vec![s],
                    faces: vec![],
                });
            }
            seen[s] = true;
            queue.push_back(s);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &f in faces.faces_at(x) {
            if face_done[f] {
                continue;
            }
            face_done[f] = true;
            for &y in faces.vertices_of(f) {
                if seen[y] || !allowed(y) {
                    continue;
                }
                seen[y] = true;
                parent[y] = Some((x, f));
                if to(y) {
                    let mut vertices = vec![y];
                    let mut fs = Vec::new();
                    let mut cur = y;
                    while let Some((p, f)) = parent[cur] {
                        fs.push(f);
                        vertices.push(p);
                        cur = p;
                    }
                    vertices.reverse();
                    fs.reverse();
                    return Some(Curve {
                        vertices,
                        faces: fs,
                    });
                }
                queue.push_back(y);
            }
        }
    }
    None
}

pub fn initial_punctures(g: &EmbeddedGraph, t: &[Vertex]) -> Result<PuncturedInstance> {
    for &x in t {
        if !g.contains(x) {
            return Err(Error::UnknownVertex(x));
        }
        if g.degree(x) == 0 {
            return Err(Error::BadParams(format!("terminal {x} has degree 0")));
        }
    }
    let mut ts = t.to_vec();
    ts.sort_unstable();
    ts.dedup();
    PuncturedInstance::new(g.clone(), ts.into_iter().map(|x| vec![x]).collect())
}

#[derive(Clone, Debug)]
pub struct CutOutcome {
    pub children: Vec<PuncturedInstance>,
    pub removed: BTreeSet<Vertex>,
    pub curve: Curve,
}

/// Merges the two closest holes along a shortest radial curve. The curve's
/// vertices join the merged hole's boundary.
pub fn cut_reduction(inst: &PuncturedInstance, _budget: &IsolationBudget) -> Result<CutOutcome> {
    if inst.hole_count < 3 {
        return Err(Error::HoleCountTooSmall(inst.hole_count));
    }
    let g = &inst.graph;
    let faces = g.faces();
    let mut owner: BTreeMap<Vertex, Vec<usize>> = BTreeMap::new();
    for (i, h) in inst.holes.iter().enumerate() {
        for &v in h {
            owner.entry(v).or_default().push(i);
        }
    }
    let mut best: Option<(usize, usize, usize, Curve)> = None;
    for (i, h) in inst.holes.iter().enumerate() {
        let other = |v: Vertex| owner.get(&v).is_some_and(|o| o.iter().any(|&j| j != i));
        let Some(c) = shortest_curve(g, &faces, h, other, |_| true) else {
            continue;
        };
        let end = *c.vertices.last().unwrap();
        let j = *owner[&end].iter().find(|&&j| j != i).unwrap();
        let key = (c.vertices.len(), i.min(j), i.max(j));
        if best
            .as_ref()
            .is_none_or(|b| key < (b.3.vertices.len(), b.0, b.1))
        {
            best = Some((key.1, key.2, 0, c));
        }
    }
    let Some((i, j, _, curve)) = best else {
        return Err(Error::NoConnectingCurve);
    };
    let mut merged: Vec<Vertex> = inst.holes[i].clone();
    merged.extend(&inst.holes[j]);
    merged.extend(&curve.vertices);
    let mut holes = Vec::new();
    for (x, h) in inst.holes.iter().enumerate() {
        if x == i {
            holes.push(merged.clone());
        } else if x != j {
            holes.push(h.clone());
        }
    }
    let child = PuncturedInstance::new(inst.graph.clone(), holes)?;
    Ok(CutOutcome {
        children: vec![child],
        removed: BTreeSet::new(),
        curve,
    })
}

/// Layers `V_0, V_1, ...` by radial distance from the boundary. Vertices in
/// components without boundary belong to no layer.
pub fn layer_partition(inst: &PuncturedInstance) -> Result<Vec<Vec<Vertex>>> {
    if inst.hole_count != 1 {
        return Err(Error::WrongHoleCount {
            expected: 1,
            found: inst.hole_count,
        });
    }
    let b: Vec<Vertex> = inst.boundary_vertices.iter().copied().collect();
    let map = RadialMap::from_sources(&inst.graph, &inst.graph.faces(), &b)?;
    let mut layers: Vec<Vec<Vertex>> = Vec::new();
    for (v, d) in map.iter() {
        if layers.len() <= d {
            layers.resize(d + 1, Vec::new());
        }
        layers[d].push(v);
    }
    Ok(layers)
}

/// Vertices of `g` farther than `l` from `sources` in the radial graph, or
/// not reachable at all.
fn far_from(g: &EmbeddedGraph, faces: &Faces, sources: &[Vertex], l: usize) -> Result<BTreeSet<Vertex>> {
    let map = RadialMap::from_sources(g, faces, sources)?;
    Ok(g.vertices()
        .filter(|&v| map.get(v).is_none_or(|d| d > l))
        .collect())
}

fn one_punctured_deletions(inst: &PuncturedInstance, budget: &IsolationBudget) -> Result<BTreeSet<Vertex>> {
    if inst.hole_count != 1 {
        return Err(Error::WrongHoleCount {
            expected: 1,
            found: inst.hole_count,
        });
    }
    let b: Vec<Vertex> = inst.boundary_vertices.iter().copied().collect();
    far_from(&inst.graph, &inst.graph.faces(), &b, budget.g())
}

/// Deletes every vertex more than `g(k)` layers away from the boundary.
pub fn remove_one_punctured(inst: &PuncturedInstance, budget: &IsolationBudget) -> Result<EmbeddedGraph> {
    let del = one_punctured_deletions(inst, budget)?;
    let mut h = inst.graph.clone();
    h.remove_vertices(del);
    Ok(h)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Side {
    Free,
    L,
    R,
    Split,
}

/// `x` lies strictly between `s` and `e` going forward modulo `n`.
fn strictly_between(s: usize, x: usize, e: usize, n: usize) -> bool {
    let dx = (x + n - s) % n;
    let de = (e + n - s) % n;
    dx > 0 && dx < de
}

/// Radial distances to the two sides of the curve `a` in the surface cut
/// open along it. The curve's end vertices count for both sides.
fn side_distances(g: &EmbeddedGraph, faces: &Faces, a: &Curve) -> [Vec<Option<usize>>; 2] {
    let vb = g.vertex_bound();
    let nf = faces.len();
    let corners = g.corners(faces);
    let m = a.faces.len();
    // walk index of the entry and exit corner in every curve face
    let mut fcut: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for i in 0..m {
        let walk = &faces.faces[a.faces[i]].walk;
        let at = |v: Vertex| walk.iter().position(|&d| g.dart_tail(d) == v).unwrap();
        fcut.insert(a.faces[i], (at(a.vertices[i]), at(a.vertices[i + 1])));
    }
    let slot = |v: Vertex, f: usize, w: usize| corners[v].iter().position(|&c| c == (f, w)).unwrap();
    let mut vcut: BTreeMap<Vertex, (usize, usize)> = BTreeMap::new();
    for i in 1..m {
        let v = a.vertices[i];
        let (fi, fo) = (a.faces[i - 1], a.faces[i]);
        vcut.insert(v, (slot(v, fi, fcut[&fi].1), slot(v, fo, fcut[&fo].0)));
    }
    let vside = |v: Vertex, p: usize| match vcut.get(&v) {
        None => Side::Free,
        Some(&(pin, pout)) if p == pin || p == pout => Side::Split,
        Some(&(pin, pout)) if strictly_between(pin, p, pout, corners[v].len()) => Side::L,
        Some(_) => Side::R,
    };
    let fside = |f: usize, w: usize| match fcut.get(&f) {
        None => Side::Free,
        Some(&(ia, ib)) if w == ia || w == ib => Side::Split,
        Some(&(ia, ib)) if strictly_between(ib, w, ia, faces.faces[f].walk.len()) => Side::L,
        Some(_) => Side::R,
    };
    let copies = |s: Side| -> Vec<Side> {
        match s {
            Side::Split => vec![Side::L, Side::R],
            s => vec![s],
        }
    };
    let vnode = |v: Vertex, s: Side| if s == Side::R { vb + v } else { v };
    let fnode = |f: usize, s: Side| if s == Side::R { 2 * vb + nf + f } else { 2 * vb + f };
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); 2 * vb + 2 * nf];
    for v in g.vertices() {
        for (p, &(f, w)) in corners[v].iter().enumerate() {
            for cv in copies(vside(v, p)) {
                for cf in copies(fside(f, w)) {
                    if cv == Side::Free || cf == Side::Free || cv == cf {
                        let (x, y) = (vnode(v, cv), fnode(f, cf));
                        adj[x].push(y);
                        adj[y].push(x);
                    }
                }
            }
        }
    }
    let run = |side: Side| {
        let mut dist = vec![usize::MAX; adj.len()];
        let mut queue = VecDeque::new();
        for (i, &v) in a.vertices.iter().enumerate() {
            let s = if i == 0 || i == m { Side::Free } else { side };
            let x = vnode(v, s);
            dist[x] = 0;
            queue.push_back(x);
        }
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        (0..vb)
            .map(|v| {
                if !g.contains(v) || vcut.contains_key(&v) {
                    return None;
                }
                let d = dist[vnode(v, Side::Free)];
                (d != usize::MAX).then_some(d / 2)
            })
            .collect::<Vec<_>>()
    };
    [run(Side::L), run(Side::R)]
}

#[derive(Clone, Debug, Default)]
struct TwoPunctured {
    deleted: BTreeSet<Vertex>,
    curve_a: usize,
    curve_b: Option<usize>,
}

fn two_punctured_deletions(inst: &PuncturedInstance, budget: &IsolationBudget) -> Result<TwoPunctured> {
    if inst.hole_count != 2 {
        return Err(Error::WrongHoleCount {
            expected: 2,
            found: inst.hole_count,
        });
    }
    let g = &inst.graph;
    let faces = g.faces();
    let (h1, h2) = (&inst.holes[0], &inst.holes[1]);
    let in_h2: BTreeSet<Vertex> = h2.iter().copied().collect();
    let a = shortest_curve(g, &faces, h1, |v| in_h2.contains(&v), |_| true)
        .ok_or(Error::NoConnectingCurve)?;
    let mut base: Vec<Vertex> = inst.boundary_vertices.iter().copied().collect();
    let mut out = TwoPunctured {
        curve_a: a.vertices.len(),
        ..Default::default()
    };
    let with_a: Vec<Vertex> = base.iter().chain(&a.vertices).copied().collect();
    out.deleted = far_from(g, &faces, &with_a, budget.g())?;
    if a.vertices.len() <= 6 * budget.g() {
        return Ok(out);
    }
    let [d1, d2] = side_distances(g, &faces, &a);
    let in_r = |v: Vertex| match (d1[v], d2[v]) {
        (Some(x), Some(y)) => x.abs_diff(y) <= 1,
        _ => false,
    };
    if let Some(b) = shortest_curve(g, &faces, h1, |v| in_h2.contains(&v), in_r) {
        out.curve_b = Some(b.vertices.len());
        base.extend(&b.vertices);
        let far_b = far_from(g, &faces, &base, budget.g())?;
        out.deleted.extend(far_b);
    }
    Ok(out)
}

/// Two holes: cut along a shortest curve `A` between them and, when `A` is
/// long, along a second curve `B` through the vertices equidistant from
/// both sides of `A`; delete everything more than `g(k)` away from either
/// cut boundary.
pub fn remove_two_punctured(inst: &PuncturedInstance, budget: &IsolationBudget) -> Result<EmbeddedGraph> {
    let r = two_punctured_deletions(inst, budget)?;
    let mut h = inst.graph.clone();
    h.remove_vertices(r.deleted);
    Ok(h)
}

/// The reduced graph, the boundary set `U` and the report.
pub type Reduction = (EmbeddedGraph, BTreeSet<Vertex>, RemovalReport);

pub fn reed_pipeline(g: &EmbeddedGraph, t: &[Vertex], budget: &IsolationBudget) -> Result<Reduction> {
    g.validate()?;
    if t.is_empty() {
        return Err(Error::BadParams("terminal set is empty".into()));
    }
    for &x in t {
        if !g.contains(x) {
            return Err(Error::UnknownVertex(x));
        }
    }
    let gk = budget.g();
    let mut report = RemovalReport {
        g: gk,
        curve_bound: budget.curve_bound(),
        leaf_bound: 4 * t.len() + 8,
        ..Default::default()
    };
    let mut h = g.clone();
    let tset: BTreeSet<Vertex> = t.iter().copied().collect();
    let comps = g.components();
    let with_t: Vec<&Vec<Vertex>> = comps.iter().filter(|c| c.iter().any(|v| tset.contains(v))).collect();
    if with_t.len() > 1 {
        let del: Vec<Vertex> = g.vertices().filter(|v| !tset.contains(v)).collect();
        for &v in &del {
            report.removed.push(Removal {
                vertex: v,
                reason: Reason::TerminalsSeparated,
                threshold: 0,
            });
        }
        h.remove_vertices(del);
        report.boundary_set = tset.iter().copied().collect();
        report.notes.push("terminals span several components".into());
        return Ok((h, tset, report));
    }
    let keep: BTreeSet<Vertex> = with_t[0].iter().copied().collect();
    let outside: Vec<Vertex> = g.vertices().filter(|v| !keep.contains(v)).collect();
    for &v in &outside {
        report.removed.push(Removal {
            vertex: v,
            reason: Reason::OutsideTerminalComponent,
            threshold: 0,
        });
    }
    h.remove_vertices(outside);

    if tset.iter().all(|&x| h.degree(x) == 0) {
        // a single bare terminal
        report.boundary_set = tset.iter().copied().collect();
        return Ok((h, tset, report));
    }

    let u = reduce_connected(&mut h, &tset, budget, &mut report)?;
    report.boundary_set = u.iter().copied().collect();
    if report.leaves > report.leaf_bound {
        report.notes.push("leaf count above 4k+8".into());
    }
    Ok((h, u, report))
}

/// Steps 1 to 4 on a connected graph `h` whose terminals are not all bare.
fn reduce_connected(
    h: &mut EmbeddedGraph,
    tset: &BTreeSet<Vertex>,
    budget: &IsolationBudget,
    report: &mut RemovalReport,
) -> Result<BTreeSet<Vertex>> {
    let gk = budget.g();
    // step 1: cut down to at most two holes
    let mut inst = initial_punctures(h, &tset.iter().copied().collect::<Vec<_>>())?;
    while inst.hole_count >= 3 {
        let cut = cut_reduction(&inst, budget)?;
        report.cut_curves.push(cut.curve.vertices.len());
        if cut.curve.vertices.len() > budget.curve_bound() {
            report.notes.push(format!(
                "cut curve with {} vertices exceeds 6g+6 = {}",
                cut.curve.vertices.len(),
                budget.curve_bound()
            ));
        }
        inst = cut.children.into_iter().next().unwrap();
    }
    report.leaves += 1;

    // step 2: boundary vertices isolated in the full graph
    let tv: Vec<Vertex> = tset.iter().copied().collect();
    let from_t = RadialMap::from_sources(h, &h.faces(), &tv)?;
    let isolated: BTreeSet<Vertex> = inst
        .boundary_vertices
        .iter()
        .copied()
        .filter(|&v| from_t.get(v).is_none_or(|d| d > gk))
        .collect();
    for &v in &isolated {
        report.removed.push(Removal {
            vertex: v,
            reason: Reason::BoundaryIsolated,
            threshold: gk,
        });
    }
    h.remove_vertices(isolated.iter().copied());
    let holes: Vec<Vec<Vertex>> = inst
        .holes
        .iter()
        .map(|hole| hole.iter().copied().filter(|v| !isolated.contains(v)).collect::<Vec<_>>())
        .filter(|hole| !hole.is_empty())
        .collect();
    let piece = PuncturedInstance::new(h.clone(), holes)?;

    // steps 3 and 4
    let (deleted, reason) = match piece.hole_count {
        1 => (one_punctured_deletions(&piece, budget)?, Reason::OnePunctured),
        _ => match two_punctured_deletions(&piece, budget) {
            Ok(r) => {
                report.notes.push(format!(
                    "curve A has {} vertices{}",
                    r.curve_a,
                    match r.curve_b {
                        Some(b) => format!(", curve B has {b}"),
                        None if r.curve_a > 6 * gk => ", no curve B found".into(),
                        None => String::new(),
                    }
                ));
                (r.deleted, Reason::TwoPunctured)
            }
            Err(Error::NoConnectingCurve) => {
                report.notes.push("holes in different components".into());
                let b: Vec<Vertex> = piece.boundary_vertices.iter().copied().collect();
                (far_from(h, &h.faces(), &b, gk)?, Reason::OnePunctured)
            }
            Err(e) => return Err(e),
        },
    };
    for &v in &deleted {
        report.removed.push(Removal {
            vertex: v,
            reason,
            threshold: gk,
        });
    }
    h.remove_vertices(deleted);
    let u: BTreeSet<Vertex> = piece
        .boundary_vertices
        .iter()
        .copied()
        .filter(|&v| h.contains(v))
        .collect();
    let final_piece = PuncturedInstance::new(
        h.clone(),
        piece
            .holes
            .iter()
            .map(|hole| hole.iter().copied().filter(|&v| h.contains(v)).collect())
            .collect(),
    )?;
    report.pieces.push(final_piece.summary());
    Ok(u)
}

/// Runs the reduction separately on every component of `g` that contains a
/// root and deletes the components without roots. Roots play the part of
/// terminals, so the deletions keep every root-to-root linkage.
pub fn boundary_reduction(g: &EmbeddedGraph, roots: &[Vertex], budget: &IsolationBudget) -> Result<Reduction> {
    g.validate()?;
    for &x in roots {
        if !g.contains(x) {
            return Err(Error::UnknownVertex(x));
        }
    }
    let rset: BTreeSet<Vertex> = roots.iter().copied().collect();
    let mut report = RemovalReport {
        g: budget.g(),
        curve_bound: budget.curve_bound(),
        leaf_bound: 4 * rset.len() + 8,
        ..Default::default()
    };
    let mut out = g.clone();
    let mut u = BTreeSet::new();
    for comp in g.components() {
        let here: BTreeSet<Vertex> = comp.iter().copied().filter(|v| rset.contains(v)).collect();
        if here.is_empty() {
            for &v in &comp {
                report.removed.push(Removal {
                    vertex: v,
                    reason: Reason::OutsideTerminalComponent,
                    threshold: 0,
                });
            }
            out.remove_vertices(comp);
            continue;
        }
        if here.iter().all(|&x| g.degree(x) == 0) {
            u.extend(here);
            continue;
        }
        let mut h = g.induced(&comp.iter().copied().collect());
        let before = report.removed.len();
        u.extend(reduce_connected(&mut h, &here, budget, &mut report)?);
        out.remove_vertices(report.removed[before..].iter().map(|r| r.vertex).collect::<Vec<_>>());
    }
    report.boundary_set = u.iter().copied().collect();
    Ok((out, u, report))
}

/// Deletes isolated vertices one at a time, farthest first, until none is
/// left.
pub fn quadratic_remover(g: &EmbeddedGraph, t: &[Vertex], budget: &IsolationBudget) -> Result<EmbeddedGraph> {
    let mut h = g.clone();
    loop {
        let map = RadialMap::from_sources(&h, &h.faces(), t)?;
        let pick = h
            .vertices()
            .filter(|&v| map.get(v).is_none_or(|d| d > budget.g()))
            .max_by_key(|&v| (map.get(v).unwrap_or(usize::MAX), std::cmp::Reverse(v)));
        match pick {
            Some(v) => h.remove_vertex(v),
            None => return Ok(h),
        }
    }
}
