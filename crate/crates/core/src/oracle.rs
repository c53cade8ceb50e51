//! Exhaustive ground-truth solvers for small instances.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::cycles::{loop_cost, ConcentricSequence};
use crate::error::{Error, Result};
use crate::planar_core::{EdgeId, EmbeddedGraph, Faces, Vertex};

/// Size limits of the exhaustive searches. Exceeding one is an error.
#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub t_cycle: usize,
    pub disjoint_paths: usize,
    pub minor_host: usize,
    pub minor_pattern: usize,
    pub isolation: usize,
    pub cheap_loops: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            t_cycle: 18,
            disjoint_paths: 18,
            minor_host: 18,
            minor_pattern: 8,
            isolation: 14,
            cheap_loops: 16,
        }
    }
}

fn check_size(what: &'static str, size: usize, limit: usize) -> Result<()> {
    if size > limit {
        Err(Error::SizeLimitExceeded { what, size, limit })
    } else {
        Ok(())
    }
}

/// A set of disjoint unordered pairs of distinct vertices.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Matching {
    pairs: Vec<(Vertex, Vertex)>,
}

impl Matching {
    pub fn new(pairs: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (u, v) in pairs {
            if u == v {
                return Err(Error::InvalidMatching(format!("pair ({u},{u})")));
            }
            if !seen.insert(u) || !seen.insert(v) {
                return Err(Error::InvalidMatching(format!(
                    "vertex of ({u},{v}) used twice"
                )));
            }
            out.push((u.min(v), u.max(v)));
        }
        out.sort_unstable();
        Ok(Matching { pairs: out })
    }

    pub fn empty() -> Self {
        Matching::default()
    }

    pub fn pairs(&self) -> &[(Vertex, Vertex)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        let mut vs: Vec<Vertex> = self.pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
        vs.sort_unstable();
        vs
    }

    /// Every matching over `b` (including the empty one), in a fixed order.
    pub fn all_over(b: &[Vertex]) -> Vec<Matching> {
        fn rec(rest: &[Vertex], cur: &mut Vec<(Vertex, Vertex)>, out: &mut Vec<Matching>) {
            match rest.split_first() {
                None => out.push(Matching::new(cur.iter().copied()).unwrap()),
                Some((&x, tail)) => {
                    rec(tail, cur, out);
                    for i in 0..tail.len() {
                        let mut others = tail.to_vec();
                        let y = others.remove(i);
                        cur.push((x, y));
                        rec(&others, cur, out);
                        cur.pop();
                    }
                }
            }
        }
        let mut b = b.to_vec();
        b.sort_unstable();
        b.dedup();
        let mut out = Vec::new();
        rec(&b, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WitnessKind {
    Cycle,
    PathSystem,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub edge_sets: Vec<Vec<EdgeId>>,
}

impl Witness {
    pub fn cycle(edges: Vec<EdgeId>) -> Self {
        Witness {
            kind: WitnessKind::Cycle,
            edge_sets: vec![edges],
        }
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edge_sets[0]
    }
}

/// Vertices of a simple cycle in walk order, or an error if `edges` is not
/// one. Cycles of length two (parallel edges) are accepted; loops are not.
pub fn cycle_vertices(g: &EmbeddedGraph, edges: &[EdgeId]) -> Result<Vec<Vertex>> {
    if edges.len() < 2 {
        return Err(Error::NotACycle("fewer than two edges".into()));
    }
    let distinct: BTreeSet<EdgeId> = edges.iter().copied().collect();
    if distinct.len() != edges.len() {
        return Err(Error::NotACycle("repeated edge".into()));
    }
    let mut inc: std::collections::BTreeMap<Vertex, Vec<EdgeId>> = Default::default();
    for &e in edges {
        let (u, v) = g.endpoints(e).ok_or(Error::UnknownEdge(e))?;
        if u == v {
            return Err(Error::NotACycle(format!("loop {e}")));
        }
        inc.entry(u).or_default().push(e);
        inc.entry(v).or_default().push(e);
    }
    if inc.values().any(|es| es.len() != 2) {
        return Err(Error::NotACycle("vertex degree is not two".into()));
    }
    let start = *inc.keys().next().unwrap();
    let mut order = vec![start];
    let mut prev_edge = inc[&start][0];
    let mut cur = g.other_end(prev_edge, start);
    while cur != start {
        order.push(cur);
        let es = &inc[&cur];
        let next = if es[0] == prev_edge { es[1] } else { es[0] };
        prev_edge = next;
        cur = g.other_end(next, cur);
    }
    if order.len() != inc.len() {
        return Err(Error::NotACycle("edge set is disconnected".into()));
    }
    Ok(order)
}

fn unknown(g: &EmbeddedGraph, vs: &[Vertex]) -> Result<()> {
    match vs.iter().find(|&&v| !g.contains(v)) {
        Some(&v) => Err(Error::UnknownVertex(v)),
        None => Ok(()),
    }
}

/// Vertices reachable from `from` without entering `blocked` (the start is
/// always allowed).
fn reach(g: &EmbeddedGraph, from: Vertex, blocked: &[bool]) -> Vec<bool> {
    let mut seen = vec![false; g.vertex_bound()];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        for (_, y) in g.neighbors(x) {
            if !seen[y] && !blocked[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    seen
}

struct CycleSearch<'a> {
    g: &'a EmbeddedGraph,
    start: Vertex,
    is_t: Vec<bool>,
    k: usize,
    on_path: Vec<bool>,
    edges: Vec<EdgeId>,
}

impl CycleSearch<'_> {
    fn dfs(&mut self, x: Vertex, covered: usize) -> bool {
        let nbrs = self.g.neighbors(x);
        for &(e, y) in &nbrs {
            if y == self.start && !self.edges.is_empty() && covered == self.k {
                if self.edges.len() >= 2 || self.edges[0] != e {
                    self.edges.push(e);
                    return true;
                }
            }
        }
        // every uncovered terminal must stay reachable, and so must the start
        let mut blocked = self.on_path.clone();
        blocked[self.start] = false;
        blocked[x] = false;
        let r = reach(self.g, x, &blocked);
        if !r[self.start] {
            return false;
        }
        for v in self.g.vertices() {
            if self.is_t[v] && !self.on_path[v] && !r[v] {
                return false;
            }
        }
        for (e, y) in nbrs {
            if self.on_path[y] || y == x {
                continue;
            }
            self.on_path[y] = true;
            self.edges.push(e);
            let c = covered + self.is_t[y] as usize;
            if self.dfs(y, c) {
                return true;
            }
            self.edges.pop();
            self.on_path[y] = false;
        }
        false
    }
}

/// A simple cycle through every vertex of `t`, if one exists. With `t`
/// empty any cycle qualifies. Loops are ignored.
pub fn brute_t_cycle(g: &EmbeddedGraph, t: &[Vertex]) -> Result<Option<Witness>> {
    brute_t_cycle_with(g, t, &Limits::default())
}

pub fn brute_t_cycle_with(g: &EmbeddedGraph, t: &[Vertex], limits: &Limits) -> Result<Option<Witness>> {
    check_size("graph", g.vertex_count(), limits.t_cycle)?;
    unknown(g, t)?;
    let mut g = g.clone();
    let loops: Vec<EdgeId> = g.edges().filter(|&(_, u, v)| u == v).map(|(e, _, _)| e).collect();
    for e in loops {
        g.remove_edge(e);
    }
    let starts: Vec<Vertex> = match t.iter().min() {
        Some(&s) => vec![s],
        None => g.vertices().collect(),
    };
    let mut is_t = vec![false; g.vertex_bound()];
    for &v in t {
        is_t[v] = true;
    }
    let k = is_t.iter().filter(|&&b| b).count();
    for s in starts {
        let mut search = CycleSearch {
            g: &g,
            start: s,
            is_t: is_t.clone(),
            k,
            on_path: vec![false; g.vertex_bound()],
            edges: Vec::new(),
        };
        search.on_path[s] = true;
        if search.dfs(s, is_t[s] as usize) {
            return Ok(Some(Witness::cycle(search.edges)));
        }
    }
    Ok(None)
}

/// Every simple cycle of `g` as a sorted edge list, in a canonical order.
pub fn all_cycles(g: &EmbeddedGraph) -> Vec<Vec<EdgeId>> {
    fn dfs(
        g: &EmbeddedGraph,
        s: Vertex,
        x: Vertex,
        on: &mut Vec<bool>,
        path: &mut Vec<EdgeId>,
        out: &mut BTreeSet<Vec<EdgeId>>,
    ) {
        for (e, y) in g.neighbors(x) {
            if y == s && !path.is_empty() && (path.len() >= 2 || path[0] != e) {
                let mut c = path.clone();
                c.push(e);
                c.sort_unstable();
                out.insert(c);
            } else if y > s && !on[y] {
                on[y] = true;
                path.push(e);
                dfs(g, s, y, on, path, out);
                path.pop();
                on[y] = false;
            }
        }
    }
    let mut out = BTreeSet::new();
    let mut on = vec![false; g.vertex_bound()];
    for s in g.vertices() {
        on[s] = true;
        let mut path = Vec::new();
        dfs(g, s, s, &mut on, &mut path, &mut out);
        on[s] = false;
    }
    out.into_iter()
        .filter(|c| c.iter().all(|&e| {
            let (u, v) = g.endpoints(e).unwrap();
            u != v
        }))
        .collect()
}

/// Every T-loop of `g` as a sorted edge list.
pub fn all_t_loops(g: &EmbeddedGraph, t: &[Vertex]) -> Vec<Vec<EdgeId>> {
    all_cycles(g)
        .into_iter()
        .filter(|c| {
            let vs: BTreeSet<Vertex> = c
                .iter()
                .flat_map(|&e| {
                    let (u, v) = g.endpoints(e).unwrap();
                    [u, v]
                })
                .collect();
            t.iter().all(|x| vs.contains(x))
        })
        .collect()
}

/// Vertex-disjoint paths joining every pair of `m`.
pub fn brute_disjoint_paths(g: &EmbeddedGraph, m: &Matching) -> Result<bool> {
    Ok(brute_linkage(g, m, &Limits::default())?.is_some())
}

/// A path system realizing `m`, one edge list per pair (in pair order).
pub fn brute_linkage(g: &EmbeddedGraph, m: &Matching, limits: &Limits) -> Result<Option<Witness>> {
    check_size("graph", g.vertex_count(), limits.disjoint_paths)?;
    unknown(g, &m.vertices())?;
    let mut used = vec![false; g.vertex_bound()];
    for v in m.vertices() {
        used[v] = true;
    }
    let mut paths = Vec::new();
    if route(g, m.pairs(), &mut used, &mut paths) {
        Ok(Some(Witness {
            kind: WitnessKind::PathSystem,
            edge_sets: paths,
        }))
    } else {
        Ok(None)
    }
}

fn route(
    g: &EmbeddedGraph,
    pairs: &[(Vertex, Vertex)],
    used: &mut Vec<bool>,
    paths: &mut Vec<Vec<EdgeId>>,
) -> bool {
    let Some((&(s, t), rest)) = pairs.split_first() else {
        return true;
    };
    for &(a, b) in pairs {
        let mut blocked = used.clone();
        blocked[b] = false;
        if !reach(g, a, &blocked)[b] {
            return false;
        }
    }
    fn extend(
        g: &EmbeddedGraph,
        x: Vertex,
        t: Vertex,
        rest: &[(Vertex, Vertex)],
        used: &mut Vec<bool>,
        path: &mut Vec<EdgeId>,
        paths: &mut Vec<Vec<EdgeId>>,
    ) -> bool {
        for (e, y) in g.neighbors(x) {
            if y == t {
                path.push(e);
                paths.push(path.clone());
                if route(g, rest, used, paths) {
                    return true;
                }
                paths.pop();
                path.pop();
            } else if !used[y] {
                used[y] = true;
                path.push(e);
                let mut blocked = used.clone();
                blocked[t] = false;
                if reach(g, y, &blocked)[t] && extend(g, y, t, rest, used, path, paths) {
                    return true;
                }
                path.pop();
                used[y] = false;
            }
        }
        false
    }
    let mut path = Vec::new();
    extend(g, s, t, rest, used, &mut path, paths)
}

fn adjacency_masks(g: &EmbeddedGraph, index: &[usize]) -> Vec<u64> {
    let verts: Vec<Vertex> = g.vertices().collect();
    let mut adj = vec![0u64; verts.len()];
    for (_, u, v) in g.edges() {
        if u != v {
            adj[index[u]] |= 1 << index[v];
            adj[index[v]] |= 1 << index[u];
        }
    }
    adj
}

/// Pattern as a minor of host (abstract graphs, embeddings ignored).
pub fn brute_minor(host: &EmbeddedGraph, pattern: &EmbeddedGraph) -> Result<bool> {
    Ok(minor_model(host, pattern, &[], &Limits::default())?.is_some())
}

/// Branch sets witnessing `pattern` as a minor of `host`, listed in the
/// order of `pattern.vertices()`. Each `(p, h)` in `roots` forces host vertex
/// `h` into the branch set of pattern vertex `p`. Parallel pattern edges and
/// loops are ignored.
pub fn minor_model(
    host: &EmbeddedGraph,
    pattern: &EmbeddedGraph,
    roots: &[(Vertex, Vertex)],
    limits: &Limits,
) -> Result<Option<Vec<Vec<Vertex>>>> {
    check_size("minor host", host.vertex_count(), limits.minor_host.min(64))?;
    check_size("minor pattern", pattern.vertex_count(), limits.minor_pattern)?;
    let hv: Vec<Vertex> = host.vertices().collect();
    let mut hidx = vec![usize::MAX; host.vertex_bound()];
    for (i, &v) in hv.iter().enumerate() {
        hidx[v] = i;
    }
    let pv: Vec<Vertex> = pattern.vertices().collect();
    let mut pidx = vec![usize::MAX; pattern.vertex_bound()];
    for (i, &v) in pv.iter().enumerate() {
        pidx[v] = i;
    }
    let hadj = adjacency_masks(host, &hidx);
    let padj_m = adjacency_masks(pattern, &pidx);
    let p = pv.len();
    let mut root_of = vec![None; p];
    for &(a, b) in roots {
        if !pattern.contains(a) {
            return Err(Error::UnknownVertex(a));
        }
        if !host.contains(b) {
            return Err(Error::UnknownVertex(b));
        }
        root_of[pidx[a]] = Some(hidx[b]);
    }
    if p > hv.len() {
        return Ok(None);
    }
    let pe = padj_m.iter().map(|m| m.count_ones()).sum::<u32>() / 2;
    let he = hadj.iter().map(|m| m.count_ones()).sum::<u32>() / 2;
    if pe > he {
        return Ok(None);
    }
    // rooted vertices first, then grow along pattern edges, high degree first
    let mut order: Vec<usize> = (0..p).filter(|&i| root_of[i].is_some()).collect();
    let mut placed = vec![false; p];
    for &i in &order {
        placed[i] = true;
    }
    while order.len() < p {
        let next = (0..p)
            .filter(|&i| !placed[i])
            .max_by_key(|&i| {
                let touch = order.iter().filter(|&&j| padj_m[i] >> j & 1 == 1).count();
                (touch, padj_m[i].count_ones(), std::cmp::Reverse(i))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    let mut reserved = 0u64;
    for r in root_of.iter().flatten() {
        reserved |= 1 << r;
    }
    let mut search = MinorSearch {
        hadj,
        padj: padj_m,
        order,
        root_of,
        sets: vec![0; p],
    };
    let free = ((1u128 << hv.len()) - 1) as u64;
    if search.place(0, free & !reserved, reserved) {
        let out = (0..p)
            .map(|i| {
                (0..hv.len())
                    .filter(|&b| search.sets[i] >> b & 1 == 1)
                    .map(|b| hv[b])
                    .collect()
            })
            .collect();
        Ok(Some(out))
    } else {
        Ok(None)
    }
}

struct MinorSearch {
    hadj: Vec<u64>,
    padj: Vec<u64>,
    order: Vec<usize>,
    root_of: Vec<Option<usize>>,
    sets: Vec<u64>,
}

impl MinorSearch {
    fn nbr(&self, set: u64) -> u64 {
        let mut out = 0;
        let mut s = set;
        while s != 0 {
            let b = s.trailing_zeros() as usize;
            out |= self.hadj[b];
            s &= s - 1;
        }
        out & !set
    }

    /// Places pattern vertex `order[step]`. `free` holds unassigned host
    /// vertices not reserved as roots; `reserved` holds unplaced roots.
    fn place(&mut self, step: usize, free: u64, reserved: u64) -> bool {
        if step == self.order.len() {
            return true;
        }
        let i = self.order[step];
        let remaining = (self.order.len() - step - 1) as u32;
        let mut need = Vec::new();
        for &j in &self.order[..step] {
            if self.padj[i] >> j & 1 == 1 {
                need.push(self.sets[j]);
            }
        }
        let cap = (free.count_ones() + 1).saturating_sub(remaining.saturating_sub(reserved.count_ones()));
        match self.root_of[i] {
            Some(r) => {
                let reserved = reserved & !(1u64 << r);
                self.grow(step, 1u64 << r, self.hadj[r] & free, 0, free, reserved, &need, cap)
            }
            None => {
                let mut seeds = free;
                let mut banned = 0u64;
                while seeds != 0 {
                    let b = seeds.trailing_zeros() as usize;
                    seeds &= seeds - 1;
                    let ext = self.hadj[b] & free & !banned;
                    if self.grow(step, 1u64 << b, ext, banned, free, reserved, &need, cap) {
                        return true;
                    }
                    banned |= 1 << b;
                }
                false
            }
        }
    }

    /// Enumerates connected sets containing `set`, extended from `ext`, never
    /// using `banned`, each exactly once.
    #[allow(clippy::too_many_arguments)]
    fn grow(
        &mut self,
        step: usize,
        set: u64,
        ext: u64,
        banned: u64,
        free: u64,
        reserved: u64,
        need: &[u64],
        cap: u32,
    ) -> bool {
        if need.iter().all(|&s| self.nbr(set) & s != 0) {
            let i = self.order[step];
            self.sets[i] = set;
            if self.place(step + 1, free & !set, reserved) {
                return true;
            }
        }
        if set.count_ones() >= cap {
            return false;
        }
        let mut ext = ext;
        let mut banned = banned;
        while ext != 0 {
            let b = ext.trailing_zeros() as usize;
            ext &= ext - 1;
            let grown = set | 1 << b;
            let new_ext = (ext | (self.hadj[b] & free)) & !grown & !banned;
            if self.grow(step, grown, new_ext, banned, free, reserved, need, cap) {
                return true;
            }
            banned |= 1 << b;
        }
        false
    }
}

/// Side labels of a cycle: region id of every vertex not on it (`None` for
/// vertices on the cycle or without faces).
fn sides(g: &EmbeddedGraph, faces: &Faces, cycle: &[EdgeId]) -> Vec<Option<usize>> {
    let mut cut = vec![false; g.edge_bound()];
    let mut on = vec![false; g.vertex_bound()];
    for &e in cycle {
        cut[e] = true;
        let (u, v) = g.endpoints(e).unwrap();
        on[u] = true;
        on[v] = true;
    }
    let (region, _) = faces.regions(&cut);
    (0..g.vertex_bound())
        .map(|x| {
            if on[x] || !g.contains(x) {
                None
            } else {
                faces.faces_at(x).first().map(|&f| region[f])
            }
        })
        .collect()
}

/// Whether `v` is separated from all of `t` by `l + 1` vertex-disjoint
/// nested cycles, each having `v` on one side and every terminal on the
/// other.
pub fn brute_isolation(g: &EmbeddedGraph, t: &[Vertex], v: Vertex, l: usize) -> Result<bool> {
    Ok(isolation_depth(g, t, v, &Limits::default())?.is_some_and(|d| d > l))
}

/// Length of the longest nested sequence of cycles separating `v` from `t`
/// (`None` when there is none).
pub fn isolation_depth(g: &EmbeddedGraph, t: &[Vertex], v: Vertex, limits: &Limits) -> Result<Option<usize>> {
    check_size("graph", g.vertex_count(), limits.isolation)?;
    unknown(g, t)?;
    unknown(g, &[v])?;
    if t.contains(&v) {
        return Ok(None);
    }
    let faces = g.faces();
    // (size of v's side, vertices of cycle, side mask)
    let mut sep: Vec<(usize, Vec<bool>, Vec<bool>)> = Vec::new();
    for c in all_cycles(g) {
        let s = sides(g, &faces, &c);
        let Some(sv) = s[v] else { continue };
        if t.iter().any(|&x| s[x].is_none_or(|r| r == sv)) {
            continue;
        }
        let inside: Vec<bool> = s.iter().map(|&r| r == Some(sv)).collect();
        let mut on = vec![false; g.vertex_bound()];
        for &e in &c {
            let (a, b) = g.endpoints(e).unwrap();
            on[a] = true;
            on[b] = true;
        }
        sep.push((inside.iter().filter(|&&b| b).count(), on, inside));
    }
    sep.sort_by_key(|s| s.0);
    let mut best = vec![1usize; sep.len()];
    for j in 0..sep.len() {
        for i in 0..j {
            // C_i strictly inside C_j
            let (_, on_i, in_i) = &sep[i];
            let (_, on_j, in_j) = &sep[j];
            let i_in_j = (0..on_i.len()).all(|x| !on_i[x] || in_j[x]);
            let j_out_i = (0..on_j.len()).all(|x| !on_j[x] || !in_i[x]);
            if i_in_j && j_out_i && best[i] + 1 > best[j] {
                best[j] = best[i] + 1;
            }
        }
    }
    Ok(best.into_iter().max())
}

/// All T-loops of minimum cost with respect to `seq`.
pub fn enumerate_cheap_loops(
    g: &EmbeddedGraph,
    seq: &ConcentricSequence,
    t: &[Vertex],
) -> Result<Vec<Witness>> {
    check_size("graph", g.vertex_count(), Limits::default().cheap_loops)?;
    unknown(g, t)?;
    let r = seq.depth();
    if let Some(&x) = t.iter().find(|&&x| seq.in_disk(r, x)) {
        return Err(Error::InvalidConfiguration(format!(
            "terminal {x} lies in the outermost disk"
        )));
    }
    let loops = all_t_loops(g, t);
    let Some(min) = loops.iter().map(|l| loop_cost(l, seq)).min() else {
        return Ok(Vec::new());
    };
    Ok(loops
        .into_iter()
        .filter(|l| loop_cost(l, seq) == min)
        .map(Witness::cycle)
        .collect())
}

/// Isomorphism-invariant key of a simple graph on `0..n`: the smallest
/// upper-triangle adjacency word over vertex orders that sort vertices by
/// degree and neighbour degrees.
fn canonical_key(g: &EmbeddedGraph) -> u64 {
    let n = g.vertex_bound();
    let mut adj = vec![0u32; n];
    for (_, a, b) in g.edges() {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    let deg: Vec<u32> = adj.iter().map(|m| m.count_ones()).collect();
    let label: Vec<(u32, Vec<u32>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<u32> = (0..n).filter(|&x| adj[v] >> x & 1 == 1).map(|x| deg[x]).collect();
            nd.sort_unstable();
            (deg[v], nd)
        })
        .collect();
    let mut slots: Vec<usize> = (0..n).collect();
    slots.sort_by(|&a, &b| label[a].cmp(&label[b]));
    let cell: Vec<&(u32, Vec<u32>)> = slots.iter().map(|&v| &label[v]).collect();

    fn go(
        pos: usize,
        order: &mut Vec<usize>,
        used: &mut [bool],
        cell: &[&(u32, Vec<u32>)],
        label: &[(u32, Vec<u32>)],
        adj: &[u32],
        best: &mut u64,
    ) {
        let n = adj.len();
        if pos == n {
            let mut key = 0u64;
            let mut bit = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if adj[order[i]] >> order[j] & 1 == 1 {
                        key |= 1 << bit;
                    }
                    bit += 1;
                }
            }
            *best = (*best).min(key);
            return;
        }
        for v in 0..n {
            if !used[v] && &label[v] == cell[pos] {
                used[v] = true;
                order.push(v);
                go(pos + 1, order, used, cell, label, adj, best);
                order.pop();
                used[v] = false;
            }
        }
    }
    let mut best = u64::MAX;
    go(0, &mut Vec::new(), &mut vec![false; n], &cell, &label, &adj, &mut best);
    best
}

/// Flips edge `e` of a triangulation to the other diagonal of its quad.
fn flip(g: &EmbeddedGraph, e: EdgeId) -> Option<EmbeddedGraph> {
    let (a, b) = g.endpoints(e)?;
    let faces = g.faces();
    let apex = |side: u8| {
        let f = faces.face_of(crate::planar_core::Dart::new(e, side));
        faces.vertices_of(f).iter().copied().find(|&x| x != a && x != b)
    };
    let (c, d) = (apex(0)?, apex(1)?);
    if c == d || g.neighbors(c).iter().any(|&(_, x)| x == d) {
        return None;
    }
    let mut h = g.clone();
    h.remove_edge(e);
    let faces = h.faces();
    let f = faces.faces_at(c).iter().copied().find(|&f| faces.vertices_of(f).contains(&d))?;
    let walk = &faces.faces[f].walk;
    let i = walk.iter().position(|&x| h.dart_tail(x) == c)?;
    let j = walk.iter().position(|&x| h.dart_tail(x) == d)?;
    h.insert_edge_in_face(&faces, f, i, j);
    Some(h)
}

/// One embedded representative of every connected planar graph on `n`
/// vertices, up to isomorphism. Vertices are `0..n`.
pub fn connected_planar_graphs(n: usize) -> Result<Vec<EmbeddedGraph>> {
    check_size("planar enumeration", n, 8)?;
    if n < 3 {
        return Ok(match n {
            0 => Vec::new(),
            1 => vec![EmbeddedGraph::with_vertices(1)],
            _ => vec![crate::generate::path(2)],
        });
    }
    // a stacked triangulation, then every triangulation reachable by flips
    let mut start = crate::generate::triangle();
    while start.vertex_count() < n {
        let faces = start.faces();
        let (w, _) = start.attach_pendant(&faces, 0, 0);
        for _ in 0..2 {
            let faces = start.faces();
            let nbrs: Vec<Vertex> = start.neighbors(w).iter().map(|&(_, x)| x).collect();
            let f = *faces
                .faces_at(w)
                .iter()
                .find(|&&f| faces.vertices_of(f).iter().any(|&y| y != w && !nbrs.contains(&y)))
                .unwrap();
            let walk = &faces.faces[f].walk;
            let i = walk.iter().position(|&x| start.dart_tail(x) == w).unwrap();
            let j = walk
                .iter()
                .position(|&x| {
                    let y = start.dart_tail(x);
                    y != w && !nbrs.contains(&y)
                })
                .unwrap();
            start.insert_edge_in_face(&faces, f, i, j);
        }
    }
    let mut seen = BTreeSet::from([canonical_key(&start)]);
    let mut queue = VecDeque::from([start]);
    let mut found = Vec::new();
    while let Some(g) = queue.pop_front() {
        let ids: Vec<EdgeId> = g.edges().map(|(e, _, _)| e).collect();
        for e in ids {
            if let Some(h) = flip(&g, e) {
                if seen.insert(canonical_key(&h)) {
                    queue.push_back(h);
                }
            }
        }
        found.push(g);
    }
    // spanning connected subgraphs, one edge deletion at a time
    let mut queue: VecDeque<EmbeddedGraph> = found.into();
    let mut out = Vec::new();
    while let Some(g) = queue.pop_front() {
        let ids: Vec<EdgeId> = g.edges().map(|(e, _, _)| e).collect();
        for e in ids {
            let mut h = g.clone();
            h.remove_edge(e);
            if h.is_connected() && seen.insert(canonical_key(&h)) {
                queue.push_back(h);
            }
        }
        out.push(g);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{grid, k4, path, star, triangle, wheel};

    fn is_t_loop(g: &EmbeddedGraph, w: &Witness, t: &[Vertex]) -> bool {
        match cycle_vertices(g, w.edges()) {
            Ok(vs) => t.iter().all(|x| vs.contains(x)),
            Err(_) => false,
        }
    }

    #[test]
    fn t_cycle_examples() {
        let g = triangle();
        let w = brute_t_cycle(&g, &[0, 1, 2]).unwrap().unwrap();
        assert!(is_t_loop(&g, &w, &[0, 1, 2]));
        assert_eq!(brute_t_cycle(&path(3), &[0, 2]).unwrap(), None);
        let g = grid(3, 3);
        let w = brute_t_cycle(&g, &[0, 8]).unwrap().unwrap();
        assert!(is_t_loop(&g, &w, &[0, 8]));
        assert!(brute_t_cycle(&grid(5, 5), &[0]).is_err());
    }

    #[test]
    fn planar_graph_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| connected_planar_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 20, 99, 646]);
        for g in connected_planar_graphs(6).unwrap() {
            g.validate().unwrap();
        }
        assert!(connected_planar_graphs(9).is_err());
    }

    #[test]
    fn disjoint_path_examples() {
        let m = Matching::new([(0, 1)]).unwrap();
        assert!(brute_disjoint_paths(&path(2), &m).unwrap());
        assert!(Matching::new([(0, 2), (1, 1)]).is_err());
        let m = Matching::new([(0, 2), (1, 3)]).unwrap();
        assert!(brute_disjoint_paths(&k4(), &m).unwrap());
        let m = Matching::new([(1, 2), (3, 0)]).unwrap();
        assert!(!brute_disjoint_paths(&star(3), &m).unwrap());
    }

    #[test]
    fn minor_examples() {
        let single = EmbeddedGraph::with_vertices(1);
        assert!(brute_minor(&grid(2, 3), &single).unwrap());
        assert!(!brute_minor(&star(4), &triangle()).unwrap());
        // the 3x3 grid has treewidth 3, so it does contain K4
        assert!(brute_minor(&grid(3, 3), &k4()).unwrap());
        assert!(!brute_minor(&grid(2, 4), &k4()).unwrap());
    }

    #[test]
    fn rooted_minor_keeps_roots() {
        let host = path(4);
        let pattern = path(2);
        let model = minor_model(&host, &pattern, &[(0, 0), (1, 3)], &Limits::default())
            .unwrap()
            .unwrap();
        assert!(model[0].contains(&0) && model[1].contains(&3));
        let pattern = triangle();
        assert!(minor_model(&host, &pattern, &[], &Limits::default()).unwrap().is_none());
    }

    #[test]
    fn isolation_examples() {
        let g = wheel(5);
        assert!(!brute_isolation(&g, &[0], 0, 0).unwrap());
        // hub inside one rim, terminal hung outside it
        let mut g = wheel(5);
        let faces = g.faces();
        let f = faces.outer_face().unwrap();
        let (t, _) = g.attach_pendant(&faces, f, 0);
        assert!(brute_isolation(&g, &[t], 0, 0).unwrap());
        assert!(!brute_isolation(&g, &[t], 0, 1).unwrap());
    }

    #[test]
    fn all_matchings_count() {
        // 1 + C(4,2) + 3 matchings over four vertices
        assert_eq!(Matching::all_over(&[1, 2, 3, 4]).len(), 10);
        assert_eq!(Matching::all_over(&[]).len(), 1);
    }
}
