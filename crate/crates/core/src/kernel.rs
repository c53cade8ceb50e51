//! Protrusion decompositions, boundary linkage profiles, and replacement of
//! protrusions by smaller minors with the same profile.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rayon::prelude::*;
use serde::Serialize;

use crate::decomposition::{boundary_reduction, reed_pipeline, IsolationBudget, RemovalReport};
use crate::error::{Error, Result};
use crate::oracle::{minor_model, Limits, Matching};
use crate::planar_core::{EdgeId, EmbeddedGraph, Vertex};
use crate::tcycle_dp::{solve_disjoint_paths_auto, solve_m_cycle_auto};
use crate::treewidth::{build, lca_closure, make_nice, validate, BuildMode};

/// `X_0, X_1, ..., X_l`, with `N(X_i)` for every protrusion.
#[derive(Clone, Debug, Serialize)]
pub struct ProtrusionDecomposition {
    pub parts: Vec<Vec<Vertex>>,
    pub neighborhoods: Vec<Vec<Vertex>>,
    pub eta: usize,
    pub modulator: Vec<Vertex>,
    pub width: usize,
    pub marked: usize,
}

impl ProtrusionDecomposition {
    pub fn core(&self) -> &[Vertex] {
        &self.parts[0]
    }

    /// Number of protrusions.
    pub fn len(&self) -> usize {
        self.parts.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn alpha(&self) -> usize {
        (4 * (self.eta + 1) + 1) * self.modulator.len()
    }

    pub fn beta(&self) -> usize {
        (20 * (self.eta + 1) + 5) * self.modulator.len()
    }

    pub fn gamma(&self) -> usize {
        3 * self.eta + 2
    }
}

struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn or(&mut self, o: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&o.0) {
            *a |= b;
        }
    }
    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &x)| {
            (0..64).filter(move |b| x >> b & 1 == 1).map(move |b| w * 64 + b)
        })
    }
}

/// Builds `(X_0, ..., X_l)` for the modulator `s`: a nice decomposition of
/// `G - S` is marked bottom-up at the lowest node whose subtree, without the
/// bags of marked nodes, holds a component with at least three neighbours
/// in `S`; `X_0` is `S`
/// plus the bags of the LCA closure of the marks, and the protrusions are
/// the components of `G - X_0` grouped by neighbourhood.
pub fn protrusion_decompose(g: &EmbeddedGraph, s: &BTreeSet<Vertex>, eta: usize) -> Result<ProtrusionDecomposition> {
    for &v in s {
        if !g.contains(v) {
            return Err(Error::UnknownVertex(v));
        }
    }
    let rest: BTreeSet<Vertex> = g.vertices().filter(|v| !s.contains(v)).collect();
    let h = g.induced(&rest);
    let mut core: BTreeSet<Vertex> = s.clone();
    let mut width = 0;
    let mut marked = BTreeSet::new();
    if !rest.is_empty() {
        let td = build(&h, BuildMode::GreedyFill)?;
        width = validate(&h, &td)?;
        if width > eta {
            return Err(Error::ModulatorInvalid { width, eta });
        }
        let nice = make_nice(&td);
        let n = g.vertex_bound();
        let s_nbrs: Vec<Vec<Vertex>> = (0..n)
            .map(|v| {
                if !rest.contains(&v) {
                    return Vec::new();
                }
                let set: BTreeSet<Vertex> = g.neighbors(v).into_iter().map(|(_, x)| x).filter(|x| s.contains(x)).collect();
                set.into_iter().collect()
            })
            .collect();
        while let Some(v) = heavy_node(&h, &nice.nodes, &marked, &s_nbrs, n) {
            marked.insert(v);
        }
        let parent = nice.to_td().parent;
        for node in lca_closure(&parent, &marked) {
            core.extend(nice.nodes[node].bag.iter().copied());
        }
    }
    let outside: BTreeSet<Vertex> = g.vertices().filter(|v| !core.contains(v)).collect();
    let mut groups: BTreeMap<Vec<Vertex>, Vec<Vertex>> = BTreeMap::new();
    for comp in g.induced(&outside).components() {
        let mut nb = BTreeSet::new();
        for &v in &comp {
            for (_, x) in g.neighbors(v) {
                if core.contains(&x) {
                    nb.insert(x);
                }
            }
        }
        groups.entry(nb.into_iter().collect()).or_default().extend(comp);
    }
    let mut prots: Vec<(Vec<Vertex>, Vec<Vertex>)> = groups
        .into_iter()
        .map(|(nb, mut part)| {
            part.sort_unstable();
            (part, nb)
        })
        .collect();
    prots.sort_by_key(|(p, _)| p[0]);
    let mut parts = vec![core.into_iter().collect::<Vec<_>>()];
    let mut neighborhoods = vec![Vec::new()];
    for (p, nb) in prots {
        parts.push(p);
        neighborhoods.push(nb);
    }
    Ok(ProtrusionDecomposition {
        parts,
        neighborhoods,
        eta,
        modulator: s.iter().copied().collect(),
        width,
        marked: marked.len(),
    })
}

fn heavy_node(
    h: &EmbeddedGraph,
    nodes: &[crate::treewidth::NiceNode],
    marked: &BTreeSet<usize>,
    s_nbrs: &[Vec<Vertex>],
    n: usize,
) -> Option<usize> {
    let mut taken = vec![false; n];
    for &m in marked {
        for &v in &nodes[m].bag {
            taken[v] = true;
        }
    }
    let mut below: Vec<Bits> = Vec::with_capacity(nodes.len());
    let mut inside = vec![false; n];
    for (i, node) in nodes.iter().enumerate() {
        let mut set = Bits::new(n);
        for &c in &node.children {
            set.or(&below[c]);
        }
        if !marked.contains(&i) {
            for &v in &node.bag {
                set.set(v);
            }
        }
        // components of h[set]
        let members: Vec<Vertex> = set.ones().filter(|&v| !taken[v]).collect();
        for &v in &members {
            inside[v] = true;
        }
        let mut seen = BTreeSet::new();
        let mut heavy = false;
        for &v in &members {
            if heavy || seen.contains(&v) {
                continue;
            }
            let mut nb = BTreeSet::new();
            let mut queue = VecDeque::from([v]);
            seen.insert(v);
            while let Some(x) = queue.pop_front() {
                nb.extend(s_nbrs[x].iter().copied());
                for (_, y) in h.neighbors(x) {
                    if inside[y] && seen.insert(y) {
                        queue.push_back(y);
                    }
                }
            }
            heavy = nb.len() >= 3;
        }
        for &v in &members {
            inside[v] = false;
        }
        if heavy {
            return Some(i);
        }
        below.push(set);
    }
    None
}

/// Checks the structural guarantees of a protrusion decomposition and returns
/// every violation found.
pub fn check_protrusions(g: &EmbeddedGraph, pd: &ProtrusionDecomposition) -> Vec<String> {
    let mut out = Vec::new();
    let mut owner = BTreeMap::new();
    for (i, p) in pd.parts.iter().enumerate() {
        for &v in p {
            if owner.insert(v, i).is_some() {
                out.push(format!("vertex {v} in two parts"));
            }
        }
    }
    if owner.len() != g.vertex_count() || g.vertices().any(|v| !owner.contains_key(&v)) {
        out.push("parts do not cover the graph".into());
    }
    if pd.modulator.iter().any(|v| owner.get(v) != Some(&0)) {
        out.push("modulator not inside X_0".into());
    }
    if pd.core().len() > pd.alpha() {
        out.push(format!("|X_0| = {} exceeds {}", pd.core().len(), pd.alpha()));
    }
    if pd.len() > pd.beta() {
        out.push(format!("{} protrusions exceed {}", pd.len(), pd.beta()));
    }
    for i in 1..pd.parts.len() {
        let part: BTreeSet<Vertex> = pd.parts[i].iter().copied().collect();
        let mut nb = BTreeSet::new();
        for &v in &part {
            for (_, x) in g.neighbors(v) {
                if !part.contains(&x) {
                    nb.insert(x);
                }
            }
        }
        if nb.iter().any(|x| owner.get(x) != Some(&0)) {
            out.push(format!("protrusion {i} touches another protrusion"));
        }
        if nb.iter().copied().ne(pd.neighborhoods[i].iter().copied()) {
            out.push(format!("protrusion {i} has a stale neighbourhood"));
        }
        if nb.len() > pd.gamma() {
            out.push(format!("protrusion {i} has {} boundary vertices", nb.len()));
        }
        let mut plus = part.clone();
        plus.extend(nb);
        let sub = g.induced(&plus);
        match build(&sub, BuildMode::GreedyFill).and_then(|td| validate(&sub, &td)) {
            Ok(w) if w <= pd.gamma() => {}
            Ok(w) => out.push(format!("protrusion {i} has width {w}")),
            Err(e) => out.push(format!("protrusion {i}: {e}")),
        }
    }
    out
}

/// How a cycle can cross a protrusion: its segments with interior inside
/// the protrusion, read as a graph on the boundary. Either a non-empty linear
/// forest or a single closed cycle (one vertex is a loop, two a digon).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Signature {
    Paths(Vec<Vec<Vertex>>),
    Cycle(Vec<Vertex>),
}

impl Signature {
    /// Every signature over `b`, paths first.
    pub fn all_over(b: &[Vertex]) -> Vec<Signature> {
        let mut b = b.to_vec();
        b.sort_unstable();
        b.dedup();
        let mut out: Vec<Signature> = forests(&b)
            .into_iter()
            .filter(|f| !f.is_empty())
            .map(|mut f| {
                f.sort();
                Signature::Paths(f)
            })
            .collect();
        for mask in 1u32..(1 << b.len()) {
            let sub: Vec<Vertex> = (0..b.len()).filter(|i| mask >> i & 1 == 1).map(|i| b[i]).collect();
            if sub.len() <= 2 {
                out.push(Signature::Cycle(sub));
                continue;
            }
            for mut p in permutations(&sub[1..]) {
                if p[0] < *p.last().unwrap() {
                    p.insert(0, sub[0]);
                    out.push(Signature::Cycle(p));
                }
            }
        }
        out
    }
}

fn permutations(xs: &[Vertex]) -> Vec<Vec<Vertex>> {
    if xs.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..xs.len() {
        let mut rest = xs.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// All sets of vertex-disjoint paths (two or more vertices each) over `b`,
/// every path written with its smaller end first.
fn forests(b: &[Vertex]) -> Vec<Vec<Vec<Vertex>>> {
    let Some((&v, rest)) = b.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = forests(rest);
    for mask in 1u32..(1 << rest.len()) {
        let chosen: Vec<Vertex> = (0..rest.len()).filter(|i| mask >> i & 1 == 1).map(|i| rest[i]).collect();
        let left: Vec<Vertex> = (0..rest.len()).filter(|i| mask >> i & 1 == 0).map(|i| rest[i]).collect();
        let mut all = chosen.clone();
        all.push(v);
        let paths: Vec<Vec<Vertex>> = permutations(&all).into_iter().filter(|p| p[0] < *p.last().unwrap()).collect();
        let tails = forests(&left);
        for p in &paths {
            for t in &tails {
                let mut f = t.clone();
                f.push(p.clone());
                out.push(f);
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Query {
    Dp(Matching),
    Mc(Matching),
    Piece(Signature),
}

fn queries(b: &[Vertex]) -> Vec<Query> {
    let ms = Matching::all_over(b);
    let mut out: Vec<Query> = ms.iter().cloned().map(Query::Dp).collect();
    out.extend(ms.into_iter().map(Query::Mc));
    out.extend(Signature::all_over(b).into_iter().map(Query::Piece));
    out
}

fn eval(p: &EmbeddedGraph, b: &[Vertex], q: &Query) -> Result<bool> {
    match q {
        Query::Dp(m) => solve_disjoint_paths_auto(p, m),
        Query::Mc(m) => solve_m_cycle_auto(p, b, m),
        Query::Piece(s) => realizable(p, b, s),
    }
}

/// Whether the segments described by `sig` exist in `p` with interiors
/// avoiding `b` and each other.
pub fn realizable(p: &EmbeddedGraph, b: &[Vertex], sig: &Signature) -> Result<bool> {
    let bset: BTreeSet<Vertex> = b.iter().copied().collect();
    let mut segs: Vec<(Vertex, Vertex)> = Vec::new();
    match sig {
        Signature::Cycle(c) if c.len() == 1 => return on_cycle(p, &bset, c[0]),
        Signature::Cycle(c) => {
            for i in 0..c.len() {
                segs.push((c[i], c[(i + 1) % c.len()]));
            }
        }
        Signature::Paths(ps) => {
            for path in ps {
                segs.extend(path.windows(2).map(|w| (w[0], w[1])));
            }
        }
    }
    let mut q = p.clone();
    for (e, u, v) in p.edges() {
        if bset.contains(&u) && bset.contains(&v) {
            q.remove_edge(e);
        }
    }
    let mut copies: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for &(u, v) in &segs {
        copies.entry(u).or_default();
        copies.entry(v).or_default();
    }
    for &x in b {
        if !p.contains(x) {
            return Ok(false);
        }
        if !copies.contains_key(&x) {
            q.remove_vertex(x);
        }
    }
    let mut used: BTreeMap<Vertex, usize> = BTreeMap::new();
    let mut pairs = Vec::new();
    let mut take = |x: Vertex, q: &mut EmbeddedGraph| -> Vertex {
        let n = used.entry(x).or_insert(0);
        *n += 1;
        if *n == 1 {
            return x;
        }
        let c = q.new_vertex();
        for (_, y) in p.neighbors(x) {
            if !bset.contains(&y) {
                q.add_edge(c, y);
            }
        }
        c
    };
    for &(u, v) in &segs {
        let a = take(u, &mut q);
        let c = take(v, &mut q);
        pairs.push((a, c));
    }
    solve_disjoint_paths_auto(&q, &Matching::new(pairs)?)
}

/// `x` lies on a cycle of `p` that avoids the rest of `b`.
fn on_cycle(p: &EmbeddedGraph, b: &BTreeSet<Vertex>, x: Vertex) -> Result<bool> {
    if !p.contains(x) {
        return Ok(false);
    }
    let nbrs = p.neighbors(x);
    for &(e, y) in &nbrs {
        if b.contains(&y) {
            continue;
        }
        let mut seen = BTreeSet::from([y]);
        let mut queue = VecDeque::from([y]);
        while let Some(z) = queue.pop_front() {
            for (f, w) in p.neighbors(z) {
                if f == e || (b.contains(&w) && w != x) {
                    continue;
                }
                if w == x {
                    return Ok(true);
                }
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
    }
    Ok(false)
}

/// Which boundary linkages a protrusion supports: disjoint-paths and
/// M-cycle answers for every matching on the boundary, and every
/// realizable signature.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkageProfile {
    pub boundary: Vec<Vertex>,
    pub feasible_dp: BTreeSet<Matching>,
    pub feasible_mc: BTreeSet<Matching>,
    pub pieces: BTreeSet<Signature>,
}

impl LinkageProfile {
    fn contains(&self, q: &Query) -> bool {
        match q {
            Query::Dp(m) => self.feasible_dp.contains(m),
            Query::Mc(m) => self.feasible_mc.contains(m),
            Query::Piece(s) => self.pieces.contains(s),
        }
    }
}

pub const PROFILE_BOUNDARY_LIMIT: usize = 6;

/// The profile of `p` over the boundary `b`. `p` is read as the protrusion
/// graph: edges between two boundary vertices are ignored.
pub fn linkage_profile(p: &EmbeddedGraph, b: &[Vertex]) -> Result<LinkageProfile> {
    let mut b = b.to_vec();
    b.sort_unstable();
    b.dedup();
    if b.len() > PROFILE_BOUNDARY_LIMIT {
        return Err(Error::BoundaryTooLarge {
            size: b.len(),
            limit: PROFILE_BOUNDARY_LIMIT,
        });
    }
    let p = strip_boundary_edges(p, &b);
    let qs = queries(&b);
    let answers: Vec<bool> = qs.par_iter().map(|q| eval(&p, &b, q)).collect::<Result<_>>()?;
    let mut out = LinkageProfile {
        boundary: b,
        feasible_dp: BTreeSet::new(),
        feasible_mc: BTreeSet::new(),
        pieces: BTreeSet::new(),
    };
    for (q, yes) in qs.into_iter().zip(answers) {
        if !yes {
            continue;
        }
        match q {
            Query::Dp(m) => out.feasible_dp.insert(m),
            Query::Mc(m) => out.feasible_mc.insert(m),
            Query::Piece(s) => out.pieces.insert(s),
        };
    }
    Ok(out)
}

fn strip_boundary_edges(p: &EmbeddedGraph, b: &[Vertex]) -> EmbeddedGraph {
    let mut q = p.clone();
    for (e, u, v) in p.edges() {
        if b.contains(&u) && b.contains(&v) {
            q.remove_edge(e);
        }
    }
    q
}

/// `G[X ∪ B]` without the edges inside `B`.
pub fn protrusion_graph(g: &EmbeddedGraph, interior: &BTreeSet<Vertex>, b: &[Vertex]) -> EmbeddedGraph {
    let mut keep = interior.clone();
    keep.extend(b.iter().copied());
    strip_boundary_edges(&g.induced(&keep), b)
}

/// Same answer on every query, stopping at the first difference. Queries in
/// `order` are tried first.
fn agrees(p: &EmbeddedGraph, b: &[Vertex], target: &LinkageProfile, order: &mut Vec<Query>, only_feasible: bool) -> Result<bool> {
    for i in 0..order.len() {
        let q = &order[i];
        let want = target.contains(q);
        if only_feasible && !want {
            continue;
        }
        if eval(p, b, q)? != want {
            let q = order.remove(i);
            order.insert(0, q);
            return Ok(false);
        }
    }
    Ok(true)
}

/// A minor operation; ids are shared with the host graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Op {
    DeleteVertex(Vertex),
    DeleteEdge(EdgeId),
    Contract { edge: EdgeId, keep: Vertex },
}

impl Op {
    fn applies(&self, g: &EmbeddedGraph) -> bool {
        match *self {
            Op::DeleteVertex(v) => g.contains(v),
            Op::DeleteEdge(e) => g.endpoints(e).is_some(),
            Op::Contract { edge, keep } => {
                matches!(g.endpoints(edge), Some((u, v)) if u != v && (u == keep || v == keep))
            }
        }
    }

    fn apply(&self, g: &mut EmbeddedGraph) {
        match *self {
            Op::DeleteVertex(v) => g.remove_vertex(v),
            Op::DeleteEdge(e) => g.remove_edge(e),
            Op::Contract { edge, keep } => g.contract(edge, keep),
        }
    }
}

/// Deletes every edge at `v` parallel to a lower-id edge.
fn dedupe_at(g: &mut EmbeddedGraph, v: Vertex, ops: &mut Vec<Op>) {
    let mut seen = BTreeSet::new();
    let mut nbrs = g.neighbors(v);
    nbrs.sort_unstable();
    nbrs.dedup();
    for (e, x) in nbrs {
        if !seen.insert(x) {
            g.remove_edge(e);
            ops.push(Op::DeleteEdge(e));
        }
    }
}

/// A smaller graph standing in for a protrusion, with the operations that
/// turn the protrusion into it and its branch sets.
#[derive(Clone, Debug, Serialize)]
pub struct Replacement {
    pub boundary: Vec<Vertex>,
    #[serde(skip)]
    pub graph: EmbeddedGraph,
    pub ops: Vec<Op>,
    pub model: BTreeMap<Vertex, Vec<Vertex>>,
    pub candidates_tried: usize,
    pub exhaustive: bool,
}

impl Replacement {
    fn size(&self) -> (usize, usize) {
        (self.graph.vertex_count(), self.graph.edge_count())
    }
}

/// Applies vertex deletions, contractions inside the protrusion, edge
/// deletions and contractions into the boundary while the profile survives,
/// until nothing more goes. The first three can only shrink the profile, so
/// only its feasible entries are rechecked for them.
pub fn greedy_reduce(p: &EmbeddedGraph, b: &[Vertex]) -> Result<Replacement> {
    greedy_reduce_shuffled(p, b, None)
}

/// As [`greedy_reduce`], with each kind of operation tried in an order
/// shuffled by `seed`.
pub fn greedy_reduce_shuffled(p: &EmbeddedGraph, b: &[Vertex], seed: Option<u64>) -> Result<Replacement> {
    let mut rng = seed.map(crate::generate::rng);
    let mut b = b.to_vec();
    b.sort_unstable();
    b.dedup();
    let p = strip_boundary_edges(p, &b);
    let target = linkage_profile(&p, &b)?;
    let mut all = queries(&b);
    let mut order: Vec<Query> = all.iter().filter(|q| target.contains(q)).cloned().collect();
    let mut cur = Shrink {
        graph: p.clone(),
        ops: Vec::new(),
        model: p.vertices().map(|v| (v, vec![v])).collect(),
        monotone: true,
    };
    let mut tried = 0;
    loop {
        let mut changed = false;
        for op in cur.moves(&b, rng.as_mut()) {
            let Some(next) = cur.step(op, &b) else { continue };
            tried += 1;
            if next.agrees(&b, &target, &mut order, &mut all)? {
                cur = next.settled();
                changed = true;
            }
        }
        if changed {
            continue;
        }
        // two operations at once, to leave a local minimum
        'pairs: for op in cur.moves(&b, rng.as_mut()) {
            let Some(mid) = cur.step(op, &b) else { continue };
            for op2 in mid.moves(&b, None) {
                let Some(next) = mid.step(op2, &b) else { continue };
                tried += 1;
                if next.agrees(&b, &target, &mut order, &mut all)? {
                    cur = next.settled();
                    changed = true;
                    break 'pairs;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let Shrink { graph, ops, mut model, .. } = cur;
    for set in model.values_mut() {
        set.sort_unstable();
    }
    Ok(Replacement {
        boundary: b,
        graph,
        ops,
        model,
        candidates_tried: tried,
        exhaustive: false,
    })
}

#[derive(Clone)]
struct Shrink {
    graph: EmbeddedGraph,
    ops: Vec<Op>,
    model: BTreeMap<Vertex, Vec<Vertex>>,
    /// Every operation since the last accepted state can only shrink the
    /// profile.
    monotone: bool,
}

impl Shrink {
    fn moves(&self, b: &[Vertex], rng: Option<&mut rand_chacha::ChaCha8Rng>) -> Vec<Op> {
        let inner = |v: Vertex| !b.contains(&v);
        let mut kinds: [Vec<Op>; 4] = Default::default();
        kinds[0] = self.graph.vertices().filter(|&v| inner(v)).map(Op::DeleteVertex).collect();
        for (e, u, v) in self.graph.edges() {
            if inner(u) && inner(v) {
                kinds[1].push(Op::Contract { edge: e, keep: u.min(v) });
            } else {
                kinds[3].push(Op::Contract { edge: e, keep: if inner(u) { v } else { u } });
            }
            kinds[2].push(Op::DeleteEdge(e));
        }
        if let Some(r) = rng {
            for k in &mut kinds {
                k.shuffle(r);
            }
        }
        kinds.into_iter().flatten().collect()
    }

    fn step(&self, op: Op, b: &[Vertex]) -> Option<Shrink> {
        if !op.applies(&self.graph) {
            return None;
        }
        let mut next = self.clone();
        op.apply(&mut next.graph);
        next.ops.push(op);
        match op {
            Op::DeleteVertex(v) => {
                next.model.remove(&v);
            }
            Op::Contract { edge, keep } => {
                let (x, y) = self.graph.endpoints(edge).unwrap();
                let gone = if x == keep { y } else { x };
                let set = next.model.remove(&gone).unwrap();
                next.model.get_mut(&keep).unwrap().extend(set);
                if b.contains(&keep) {
                    next.monotone = false;
                    for (f, x) in next.graph.neighbors(keep) {
                        if x != keep && b.contains(&x) {
                            next.graph.remove_edge(f);
                            next.ops.push(Op::DeleteEdge(f));
                        }
                    }
                }
                dedupe_at(&mut next.graph, keep, &mut next.ops);
            }
            Op::DeleteEdge(_) => {}
        }
        Some(next)
    }

    fn agrees(&self, b: &[Vertex], target: &LinkageProfile, order: &mut Vec<Query>, all: &mut Vec<Query>) -> Result<bool> {
        if self.monotone {
            agrees(&self.graph, b, target, order, true)
        } else {
            agrees(&self.graph, b, target, all, false)
        }
    }

    fn settled(mut self) -> Shrink {
        self.monotone = true;
        self
    }
}

/// Turns branch sets (listed in `pattern.vertices()` order) into operations
/// on `p`. Boundary branch sets are rooted at their boundary vertex.
pub fn ops_from_model(
    p: &EmbeddedGraph,
    b: &[Vertex],
    pattern: &EmbeddedGraph,
    sets: &[Vec<Vertex>],
) -> Result<Replacement> {
    let pv: Vec<Vertex> = pattern.vertices().collect();
    let mut g = p.clone();
    let mut ops = Vec::new();
    let used: BTreeSet<Vertex> = sets.iter().flatten().copied().collect();
    for v in p.vertices() {
        if !used.contains(&v) {
            ops.push(Op::DeleteVertex(v));
            g.remove_vertex(v);
        }
    }
    let mut root_of = BTreeMap::new();
    let mut model = BTreeMap::new();
    for (&hv, set) in pv.iter().zip(sets) {
        let root = if b.contains(&hv) { hv } else { *set.iter().min().unwrap() };
        if !set.contains(&root) {
            return Err(Error::InvalidConfiguration(format!("branch set of {hv} misses its root")));
        }
        let members: BTreeSet<Vertex> = set.iter().copied().collect();
        loop {
            let step = g.neighbors(root).into_iter().find(|&(_, x)| x != root && members.contains(&x));
            match step {
                Some((e, _)) => {
                    let op = Op::Contract { edge: e, keep: root };
                    op.apply(&mut g);
                    ops.push(op);
                }
                None => break,
            }
        }
        if members.iter().any(|&x| x != root && g.contains(x)) {
            return Err(Error::InvalidConfiguration(format!("branch set of {hv} is not connected")));
        }
        root_of.insert(hv, root);
        let mut set = set.clone();
        set.sort_unstable();
        model.insert(root, set);
    }
    let want: BTreeSet<(Vertex, Vertex)> = pattern
        .edges()
        .filter(|&(_, u, v)| u != v)
        .map(|(_, u, v)| {
            let (a, c) = (root_of[&u], root_of[&v]);
            (a.min(c), a.max(c))
        })
        .collect();
    let mut kept = BTreeSet::new();
    let edges: Vec<(EdgeId, Vertex, Vertex)> = g.edges().collect();
    for (e, u, v) in edges {
        let key = (u.min(v), u.max(v));
        if !want.contains(&key) || !kept.insert(key) {
            ops.push(Op::DeleteEdge(e));
            g.remove_edge(e);
        }
    }
    if kept != want {
        return Err(Error::InvalidConfiguration("model misses a pattern edge".into()));
    }
    Ok(Replacement {
        boundary: b.to_vec(),
        graph: g,
        ops,
        model,
        candidates_tried: 0,
        exhaustive: true,
    })
}

/// Smallest graph on `b` plus new vertices, with at most `size_budget`
/// vertices in total, that has the profile of `p` and is a minor of `p`
/// rooted at `b`. Graphs are tried by vertex count, then edge count.
pub fn replacement_search(p: &EmbeddedGraph, b: &[Vertex], size_budget: usize, limit: usize) -> Result<Option<Replacement>> {
    let mut b = b.to_vec();
    b.sort_unstable();
    b.dedup();
    let p = strip_boundary_edges(p, &b);
    let nb = b.len();
    let max_new = size_budget.saturating_sub(nb).min(p.vertex_count().saturating_sub(nb));
    let mut space: usize = 0;
    for m in 0..=max_new {
        let e = nb * m + m * m.saturating_sub(1) / 2;
        space = space.saturating_add(if e >= 63 { usize::MAX } else { 1 << e });
    }
    if space > limit {
        return Err(Error::BudgetExceeded { size: space, limit });
    }
    let target = linkage_profile(&p, &b)?;
    let mut order = queries(&b);
    let limits = Limits {
        minor_host: 64,
        minor_pattern: 64,
        ..Limits::default()
    };
    let mut tried = 0;
    for m in 0..=max_new {
        let n = nb + m;
        let slots: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(_, j)| j >= nb)
            .collect();
        for count in 0..=slots.len() {
            if n == p.vertex_count() && count >= p.edge_count() {
                break;
            }
            let mut found = None;
            for_each_subset(slots.len(), count, &mut |pick: &[usize]| {
                if found.is_some() {
                    return Ok(());
                }
                let mut adj = vec![0u64; n];
                for &s in pick {
                    let (i, j) = slots[s];
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
                if (nb..n).any(|i| adj[i].count_ones() < 2) || (nb + 1..n).any(|i| adj[i - 1] > adj[i]) {
                    return Ok(());
                }
                tried += 1;
                let base = p.vertex_bound();
                let id = |i: usize| if i < nb { b[i] } else { base + i - nb };
                let mut h = EmbeddedGraph::with_vertices(base + m);
                let keep: BTreeSet<Vertex> = (0..n).map(id).collect();
                h.remove_vertices((0..base + m).filter(|v| !keep.contains(v)).collect::<Vec<_>>());
                for &s in pick {
                    let (i, j) = slots[s];
                    h.add_edge(id(i), id(j));
                }
                if !agrees(&h, &b, &target, &mut order, false)? {
                    return Ok(());
                }
                let roots: Vec<(Vertex, Vertex)> = b.iter().map(|&x| (x, x)).collect();
                if let Some(sets) = minor_model(&p, &h, &roots, &limits)? {
                    found = Some(ops_from_model(&p, &b, &h, &sets)?);
                }
                Ok(())
            })?;
            if let Some(mut r) = found {
                r.candidates_tried = tried;
                return Ok(Some(r));
            }
        }
    }
    Ok(None)
}

fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(&[usize]) -> Result<()>) -> Result<()> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> Result<()>) -> Result<()> {
        if cur.len() == k {
            return f(cur);
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, f)?;
            cur.pop();
        }
        Ok(())
    }
    rec(0, n, k, &mut Vec::new(), f)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub profile_equal: bool,
    pub model_valid: bool,
    /// Rooted minor test by exhaustive search, when small enough to run.
    pub brute_minor: Option<bool>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.profile_equal && self.model_valid && self.brute_minor != Some(false)
    }
}

pub const BRUTE_MINOR_HOST: usize = 18;

/// Recomputes both profiles and checks the branch sets against `p`.
pub fn verify_replacement(p: &EmbeddedGraph, rep: &Replacement) -> Result<Verification> {
    let b = &rep.boundary;
    let p = strip_boundary_edges(p, b);
    let profile_equal = linkage_profile(&p, b)? == linkage_profile(&rep.graph, b)?;
    let mut model_valid = rep.graph.vertices().eq(rep.model.keys().copied());
    let mut owner = BTreeMap::new();
    for (&root, set) in &rep.model {
        model_valid &= set.contains(&root);
        for &v in set {
            model_valid &= p.contains(v) && owner.insert(v, root).is_none();
        }
        let inside: BTreeSet<Vertex> = set.iter().copied().collect();
        model_valid &= set.is_empty() || p.induced(&inside).is_connected();
    }
    for &x in b {
        model_valid &= owner.get(&x) == Some(&x);
    }
    for (_, u, v) in rep.graph.edges() {
        model_valid &= p.edges().any(|(_, x, y)| {
            let (ox, oy) = (owner.get(&x), owner.get(&y));
            (ox == Some(&u) && oy == Some(&v)) || (ox == Some(&v) && oy == Some(&u))
        });
    }
    let brute_minor = if p.vertex_count() <= BRUTE_MINOR_HOST && rep.graph.vertex_count() <= Limits::default().minor_pattern {
        let roots: Vec<(Vertex, Vertex)> = b.iter().map(|&x| (x, x)).collect();
        Some(minor_model(&p, &rep.graph, &roots, &Limits::default())?.is_some())
    } else {
        None
    };
    Ok(Verification {
        profile_equal,
        model_valid,
        brute_minor,
    })
}

/// Replays the operations of `rep` on `host` and checks that the result is
/// still a plane graph whose protrusion region is exactly `rep.graph`.
pub fn splice(host: &EmbeddedGraph, interior: &BTreeSet<Vertex>, rep: &Replacement) -> Result<EmbeddedGraph> {
    let mut g = host.clone();
    for op in &rep.ops {
        if !op.applies(&g) {
            return Err(Error::SpliceNonPlanar(format!("{op:?} does not apply to the host")));
        }
        op.apply(&mut g);
    }
    g.validate().map_err(|e| Error::SpliceNonPlanar(e.to_string()))?;
    let left: BTreeSet<Vertex> = interior.iter().copied().filter(|&v| g.contains(v)).collect();
    let region = protrusion_graph(&g, &left, &rep.boundary);
    let a: Vec<(EdgeId, Vertex, Vertex)> = region.edges().collect();
    let c: Vec<(EdgeId, Vertex, Vertex)> = rep.graph.edges().collect();
    if a != c || region.vertices().ne(rep.graph.vertices()) {
        return Err(Error::SpliceNonPlanar("spliced region differs from the replacement".into()));
    }
    Ok(g)
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelConfig {
    pub level: u8,
    pub c1: f64,
    pub c2: usize,
    /// Overrides the first-level protrusion width bound `4g`.
    pub eta1: Option<usize>,
    pub eta2: Option<usize>,
    pub max_boundary: usize,
    /// Protrusions with more interior vertices are left alone.
    pub max_part: usize,
    /// Exhaustive search is tried only up to this many interior vertices.
    pub exhaustive_part: usize,
    pub search_limit: usize,
    /// Greedy runs per protrusion, the first in id order, the rest shuffled.
    pub greedy_starts: usize,
    /// Extra rounds that re-decompose the result and replace again.
    pub rounds: usize,
}

impl Default for KernelConfig {
    fn default() -> Self {
        KernelConfig {
            level: 2,
            c1: crate::decomposition::DEFAULT_C1,
            c2: crate::decomposition::DEFAULT_C2,
            eta1: None,
            eta2: None,
            max_boundary: 6,
            max_part: 120,
            exhaustive_part: 14,
            search_limit: 1 << 14,
            rounds: 3,
            greedy_starts: 4,
        }
    }
}

impl KernelConfig {
    pub fn budget(&self, k: usize) -> Result<IsolationBudget> {
        IsolationBudget::with_constants(k, self.c1, self.c2)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StageSize {
    pub stage: String,
    pub vertices: usize,
    pub edges: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReplacementRecord {
    pub level: u8,
    pub round: usize,
    pub protrusion: usize,
    pub sub: usize,
    pub boundary: usize,
    pub old_vertices: usize,
    pub old_edges: usize,
    pub new_vertices: usize,
    pub new_edges: usize,
    pub candidates_tried: usize,
    pub exhaustive: bool,
    pub verification: Option<Verification>,
    pub spliced: bool,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelReport {
    pub n: usize,
    pub k: usize,
    pub g: usize,
    pub level: u8,
    pub u_size: usize,
    pub eta1: usize,
    pub core_size: usize,
    pub protrusions: usize,
    pub stages: Vec<StageSize>,
    pub replacements: Vec<ReplacementRecord>,
    pub removal: RemovalReport,
    pub notes: Vec<String>,
    pub final_vertices: usize,
    pub final_edges: usize,
}

fn stage(name: &str, g: &EmbeddedGraph) -> StageSize {
    StageSize {
        stage: name.into(),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
    }
}

/// Shrinks `g` while keeping the answer for terminals `t`: the
/// irrelevant-vertex reduction, a protrusion decomposition around the
/// surviving boundary, and replacement of protrusions (level 1), or of the
/// protrusions found inside each reduced protrusion (level 2). Further
/// rounds decompose the result again and replace its protrusions until
/// nothing changes.
pub fn kernelize(g: &EmbeddedGraph, t: &[Vertex], config: &KernelConfig) -> Result<(EmbeddedGraph, KernelReport)> {
    g.validate()?;
    if !(1..=2).contains(&config.level) {
        return Err(Error::BadParams(format!("level {} is not 1 or 2", config.level)));
    }
    let budget = config.budget(t.len())?;
    let mut report = KernelReport {
        n: g.vertex_count(),
        k: t.len(),
        g: budget.g(),
        level: config.level,
        u_size: 0,
        eta1: config.eta1.unwrap_or(budget.four_g()),
        core_size: 0,
        protrusions: 0,
        stages: vec![stage("input", g)],
        replacements: Vec::new(),
        removal: RemovalReport::default(),
        notes: Vec::new(),
        final_vertices: g.vertex_count(),
        final_edges: g.edge_count(),
    };
    if t.is_empty() {
        report.notes.push("no terminals".into());
        return Ok((g.clone(), report));
    }
    let (gt, u, removal) = reed_pipeline(g, t, &budget)?;
    report.u_size = u.len();
    report.removal = removal;
    report.stages.push(stage("isolation", &gt));
    let mut s = u.clone();
    s.extend(t.iter().copied());
    let pd = match protrusion_decompose(&gt, &s, report.eta1) {
        Ok(pd) => pd,
        Err(Error::ModulatorInvalid { width, eta }) => {
            report.notes.push(format!("G - S has width {width} above {eta}; no protrusions"));
            return Ok(finish(gt, report));
        }
        Err(e) => return Err(e),
    };
    report.core_size = pd.core().len();
    report.protrusions = pd.len();
    let mut work = gt;
    for i in 1..=pd.len() {
        let interior: BTreeSet<Vertex> = pd.parts[i].iter().copied().collect();
        let b = pd.neighborhoods[i].clone();
        if config.level == 1 {
            let rec = replace_one(&mut work, &interior, &b, config, (1, 0, i, 0))?;
            report.replacements.push(rec);
            continue;
        }
        // step 3: reduce the protrusion towards its boundary
        let mut plus = interior.clone();
        plus.extend(b.iter().copied());
        let local = work.induced(&plus);
        let inner_budget = config.budget(b.len())?;
        let (reduced, ub, _) = boundary_reduction(&local, &b, &inner_budget)?;
        let dropped: Vec<Vertex> = local.vertices().filter(|&v| !reduced.contains(v)).collect();
        if !dropped.is_empty() {
            let before = protrusion_graph(&work, &interior, &b);
            let kept: BTreeSet<Vertex> = interior.iter().copied().filter(|v| reduced.contains(*v)).collect();
            let after = protrusion_graph(&reduced, &kept, &b);
            let same = b.len() <= PROFILE_BOUNDARY_LIMIT && linkage_profile(&before, &b)? == linkage_profile(&after, &b)?;
            if same {
                work.remove_vertices(dropped);
            } else {
                report.notes.push(format!("protrusion {i}: boundary reduction changed the profile; kept"));
            }
        }
        let interior: BTreeSet<Vertex> = interior.into_iter().filter(|&v| work.contains(v)).collect();
        // step 4: protrusions inside the protrusion
        let mut plus = interior.clone();
        plus.extend(b.iter().copied());
        let local = work.induced(&plus);
        let mut s2: BTreeSet<Vertex> = ub.into_iter().filter(|&v| local.contains(v)).collect();
        s2.extend(b.iter().copied());
        let eta2 = config.eta2.unwrap_or(4 * inner_budget.g());
        let inner = match protrusion_decompose(&local, &s2, eta2) {
            Ok(pd) => pd,
            Err(Error::ModulatorInvalid { width, eta }) => {
                report.notes.push(format!("protrusion {i}: width {width} above {eta}"));
                continue;
            }
            Err(e) => return Err(e),
        };
        // step 5: replace each inner protrusion
        for j in 1..=inner.len() {
            let y: BTreeSet<Vertex> = inner.parts[j].iter().copied().collect();
            let rec = replace_one(&mut work, &y, &inner.neighborhoods[j], config, (2, 0, i, j))?;
            report.replacements.push(rec);
        }
    }
    for round in 1..=config.rounds {
        let pd = match protrusion_decompose(&work, &s, report.eta1) {
            Ok(pd) => pd,
            Err(Error::ModulatorInvalid { .. }) => break,
            Err(e) => return Err(e),
        };
        let mut any = false;
        for i in 1..=pd.len() {
            let interior: BTreeSet<Vertex> = pd.parts[i].iter().copied().collect();
            let rec = replace_one(&mut work, &interior, &pd.neighborhoods[i], config, (1, round, i, 0))?;
            any |= rec.spliced;
            report.replacements.push(rec);
        }
        report.stages.push(stage(&format!("round {round}"), &work));
        if !any {
            break;
        }
    }
    Ok(finish(work, report))
}

fn finish(g: EmbeddedGraph, mut report: KernelReport) -> (EmbeddedGraph, KernelReport) {
    report.stages.push(stage("kernel", &g));
    report.final_vertices = g.vertex_count();
    report.final_edges = g.edge_count();
    (g, report)
}

fn replace_one(
    work: &mut EmbeddedGraph,
    interior: &BTreeSet<Vertex>,
    b: &[Vertex],
    config: &KernelConfig,
    (level, round, protrusion, sub): (u8, usize, usize, usize),
) -> Result<ReplacementRecord> {
    let p = protrusion_graph(work, interior, b);
    let mut rec = ReplacementRecord {
        level,
        round,
        protrusion,
        sub,
        boundary: b.len(),
        old_vertices: p.vertex_count(),
        old_edges: p.edge_count(),
        new_vertices: p.vertex_count(),
        new_edges: p.edge_count(),
        candidates_tried: 0,
        exhaustive: false,
        verification: None,
        spliced: false,
        note: None,
    };
    if b.len() > config.max_boundary {
        rec.note = Some("boundary too large".into());
        return Ok(rec);
    }
    if interior.len() > config.max_part {
        rec.note = Some("protrusion too large".into());
        return Ok(rec);
    }
    let mut rep = greedy_reduce(&p, b)?;
    let mut tried = rep.candidates_tried;
    for seed in 1..config.greedy_starts as u64 {
        let r = greedy_reduce_shuffled(&p, b, Some(seed))?;
        tried += r.candidates_tried;
        if r.size() < rep.size() {
            rep = r;
        }
    }
    if interior.len() <= config.exhaustive_part {
        match replacement_search(&p, b, rep.graph.vertex_count(), config.search_limit) {
            Ok(Some(r)) => {
                tried += r.candidates_tried;
                if r.size() < rep.size() {
                    rep = r;
                }
            }
            Ok(None) => {}
            Err(Error::BudgetExceeded { .. }) => rec.note = Some("exhaustive search over budget".into()),
            Err(e) => return Err(e),
        }
    }
    rec.candidates_tried = tried;
    rec.exhaustive = rep.exhaustive;
    rec.new_vertices = rep.graph.vertex_count();
    rec.new_edges = rep.graph.edge_count();
    if rep.size() >= (p.vertex_count(), p.edge_count()) {
        return Ok(rec);
    }
    let v = verify_replacement(&p, &rep)?;
    let ok = v.passed();
    rec.verification = Some(v);
    if !ok {
        rec.note = Some("verification failed; not spliced".into());
        return Ok(rec);
    }
    *work = splice(work, interior, &rep)?;
    rec.spliced = true;
    Ok(rec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{cycle, grid, path, star};

    fn set(xs: &[Vertex]) -> BTreeSet<Vertex> {
        xs.iter().copied().collect()
    }

    #[test]
    fn signature_counts() {
        // linear forests on n labelled vertices: 1, 2, 7, 34, 206 with the empty one
        for (n, forests) in [(1, 0), (2, 1), (3, 6), (4, 33), (5, 205)] {
            let b: Vec<Vertex> = (0..n).collect();
            let sigs = Signature::all_over(&b);
            let paths = sigs.iter().filter(|s| matches!(s, Signature::Paths(_))).count();
            assert_eq!(paths, forests, "n = {n}");
        }
        let cycles = Signature::all_over(&[0, 1, 2, 3]).len() - 33;
        assert_eq!(cycles, 4 + 6 + 4 + 3);
    }

    #[test]
    fn star_protrusions() {
        let g = star(5);
        let pd = protrusion_decompose(&g, &set(&[0]), 0).unwrap();
        assert_eq!(pd.core(), &[0]);
        assert_eq!(pd.len(), 1);
        assert_eq!(pd.parts[1], vec![1, 2, 3, 4, 5]);
        assert_eq!(pd.neighborhoods[1], vec![0]);
        assert!(check_protrusions(&g, &pd).is_empty());
    }

    #[test]
    fn wide_remainder_is_rejected() {
        let g = grid(4, 4);
        assert!(matches!(
            protrusion_decompose(&g, &set(&[0]), 1),
            Err(Error::ModulatorInvalid { eta: 1, .. })
        ));
    }

    #[test]
    fn grid_with_modulator_row() {
        let g = grid(3, 8);
        let s = set(&[0, 3, 7, 16, 20, 23]);
        let pd = protrusion_decompose(&g, &s, 4).unwrap();
        assert!(check_protrusions(&g, &pd).is_empty(), "{:?}", check_protrusions(&g, &pd));
        assert!(pd.len() >= 1);
    }

    #[test]
    fn path_profile() {
        // 0 - 1 - 2 with boundary {0, 2}
        let g = path(3);
        let pr = linkage_profile(&g, &[0, 2]).unwrap();
        assert_eq!(pr.feasible_dp.len(), 2);
        assert_eq!(pr.pieces, BTreeSet::from([Signature::Paths(vec![vec![0, 2]])]));
        let c = cycle(4);
        let pr = linkage_profile(&c, &[0, 2]).unwrap();
        assert!(pr.pieces.contains(&Signature::Cycle(vec![0, 2])));
        assert!(pr.pieces.contains(&Signature::Cycle(vec![0])) == false);
        let pr = linkage_profile(&c, &[0]).unwrap();
        assert!(pr.pieces.contains(&Signature::Cycle(vec![0])));
    }

    #[test]
    fn empty_boundary_profile() {
        let g = cycle(5);
        let pr = linkage_profile(&g, &[]).unwrap();
        assert_eq!(pr.feasible_dp.len(), 1);
        assert!(pr.pieces.is_empty());
        let r = greedy_reduce(&g, &[]).unwrap();
        assert_eq!(r.graph.vertex_count(), 0);
    }

    #[test]
    fn long_path_shrinks_to_one_inner_vertex() {
        let g = path(7);
        let r = greedy_reduce(&g, &[0, 6]).unwrap();
        assert_eq!(r.graph.vertex_count(), 3);
        let v = verify_replacement(&g, &r).unwrap();
        assert!(v.passed(), "{v:?}");
        let e = replacement_search(&g, &[0, 6], 3, 1 << 12).unwrap().unwrap();
        assert_eq!(e.graph.vertex_count(), 3);
        assert!(verify_replacement(&g, &e).unwrap().passed());
    }

    #[test]
    fn splice_into_host() {
        // the ladder minus its first rung, attached at 0 and 6
        let g = grid(2, 6);
        let interior: BTreeSet<Vertex> = (0..12).filter(|&v| v != 0 && v != 6).collect();
        let p = protrusion_graph(&g, &interior, &[0, 6]);
        let r = greedy_reduce(&p, &[0, 6]).unwrap();
        assert!(r.graph.vertex_count() < p.vertex_count());
        assert!(verify_replacement(&p, &r).unwrap().passed());
        let h = splice(&g, &interior, &r).unwrap();
        assert_eq!(h.vertex_count(), r.graph.vertex_count());
        assert!(h.edges().any(|(_, u, v)| (u, v) == (0, 6) || (u, v) == (6, 0)));
    }
}
