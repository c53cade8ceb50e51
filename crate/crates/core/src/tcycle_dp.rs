//! Exact DP over nice tree decompositions for T-Cycle, M-cycles and
//! disjoint paths.
//!
//! A state records, for each bag vertex touched by the partial solution, its
//! degree and (for degree one) the other end of its path fragment. The other
//! end may already be forgotten; that only happens for matched vertices in
//! path mode. Edges are decided when their first endpoint is forgotten.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::oracle::{cycle_vertices, Matching, Witness, WitnessKind};
use crate::planar_core::{EdgeId, EmbeddedGraph, Vertex};
use crate::treewidth::{self, make_nice, BuildMode, NiceTreeDecomposition, NodeKind, TreeDecomposition};

const NONE: usize = usize::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Ent {
    v: Vertex,
    deg: u8,
    mate: Vertex,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
struct St {
    ent: Vec<Ent>,
    done: bool,
}

impl St {
    fn pos(&self, v: Vertex) -> std::result::Result<usize, usize> {
        self.ent.binary_search_by_key(&v, |e| e.v)
    }

    fn deg(&self, v: Vertex) -> u8 {
        self.pos(v).map(|i| self.ent[i].deg).unwrap_or(0)
    }

    fn mate(&self, v: Vertex) -> Vertex {
        self.pos(v).map(|i| self.ent[i].mate).unwrap_or(NONE)
    }

    fn has(&self, v: Vertex) -> bool {
        self.pos(v).is_ok()
    }

    fn set(&mut self, v: Vertex, deg: u8, mate: Vertex) {
        let e = Ent { v, deg, mate };
        match self.pos(v) {
            Ok(i) => self.ent[i] = e,
            Err(i) => self.ent.insert(i, e),
        }
    }

    fn set_mate(&mut self, v: Vertex, mate: Vertex) {
        if let Ok(i) = self.pos(v) {
            self.ent[i].mate = mate;
        }
    }

    fn remove(&mut self, v: Vertex) {
        if let Ok(i) = self.pos(v) {
            self.ent.remove(i);
        }
    }
}

#[derive(Clone, Copy)]
struct Back {
    left: u32,
    right: u32,
    edges: [EdgeId; 2],
}

struct Table {
    states: Vec<St>,
    back: Vec<Back>,
    index: HashMap<St, u32>,
}

impl Table {
    fn new() -> Self {
        Table {
            states: Vec::new(),
            back: Vec::new(),
            index: HashMap::new(),
        }
    }

    fn insert(&mut self, s: St, b: Back) {
        if !self.index.contains_key(&s) {
            self.index.insert(s.clone(), self.states.len() as u32);
            self.states.push(s);
            self.back.push(b);
        }
    }
}

enum Goal {
    Cycle,
    Paths,
}

struct Engine<'a> {
    g: &'a EmbeddedGraph,
    nice: &'a NiceTreeDecomposition,
    goal: Goal,
    terminal: Vec<bool>,
    partner: Vec<Vertex>,
}

impl Engine<'_> {
    fn is_pair(&self, a: Vertex, b: Vertex) -> bool {
        self.partner.get(a).is_some_and(|&p| p == b)
    }

    fn add_edge(&self, s: &mut St, a: Vertex, b: Vertex) -> bool {
        if s.done {
            return false;
        }
        let (da, db) = (s.deg(a), s.deg(b));
        match (da, db) {
            (0, 0) => {
                s.set(a, 1, b);
                s.set(b, 1, a);
            }
            (1, 0) | (0, 1) => {
                let (x, y) = if da == 1 { (a, b) } else { (b, a) };
                let m = s.mate(x);
                s.set(x, 2, NONE);
                s.set(y, 1, m);
                s.set_mate(m, y);
            }
            (1, 1) => {
                let (ma, mb) = (s.mate(a), s.mate(b));
                s.set(a, 2, NONE);
                s.set(b, 2, NONE);
                if ma == b {
                    if !matches!(self.goal, Goal::Cycle) || s.ent.iter().any(|e| e.deg == 1) {
                        return false;
                    }
                    s.done = true;
                } else {
                    let (ia, ib) = (s.has(ma), s.has(mb));
                    s.set_mate(ma, mb);
                    s.set_mate(mb, ma);
                    if !ia && !ib && !self.is_pair(ma, mb) {
                        return false;
                    }
                }
            }
            _ => return false,
        }
        true
    }

    /// Degree rule for a vertex leaving the bag.
    fn may_forget(&self, s: &St, v: Vertex) -> bool {
        let d = s.deg(v);
        match self.goal {
            Goal::Cycle => d == 2 || (d == 0 && !self.terminal[v]),
            Goal::Paths => {
                if self.partner[v] != NONE {
                    if d != 1 {
                        return false;
                    }
                    let m = s.mate(v);
                    s.has(m) || self.is_pair(v, m)
                } else {
                    d != 1
                }
            }
        }
    }

    fn join(&self, a: &St, b: &St) -> Option<St> {
        if (a.done && (b.done || !b.ent.is_empty())) || (b.done && !a.ent.is_empty()) {
            return None;
        }
        if a.ent.is_empty() || b.ent.is_empty() {
            let mut s = if a.ent.is_empty() { b.clone() } else { a.clone() };
            s.done = a.done || b.done;
            return Some(s);
        }
        let mut deg: BTreeMap<Vertex, u8> = BTreeMap::new();
        for e in a.ent.iter().chain(&b.ent) {
            let d = deg.entry(e.v).or_insert(0);
            *d += e.deg;
            if *d > 2 {
                return None;
            }
        }
        // fragment graph on ends (bag vertices and forgotten labels)
        let mut frag: Vec<(Vertex, Vertex)> = Vec::new();
        for s in [a, b] {
            for e in &s.ent {
                if e.deg == 1 && (!s.has(e.mate) || e.v < e.mate) {
                    frag.push((e.v, e.mate));
                }
            }
        }
        let mut adj: BTreeMap<Vertex, Vec<usize>> = BTreeMap::new();
        for (i, &(x, y)) in frag.iter().enumerate() {
            adj.entry(x).or_default().push(i);
            adj.entry(y).or_default().push(i);
        }
        let mut out = St::default();
        for (&v, &d) in &deg {
            out.ent.push(Ent { v, deg: d, mate: NONE });
        }
        let mut used = vec![false; frag.len()];
        // walks from `start` along unused fragments until it cannot continue
        let walk = |start: Vertex, used: &mut Vec<bool>| -> Vertex {
            let mut cur = start;
            while let Some(&i) = adj[&cur].iter().find(|&&i| !used[i]) {
                used[i] = true;
                let (x, y) = frag[i];
                cur = if x == cur { y } else { x };
            }
            cur
        };
        let ends: Vec<Vertex> = adj.iter().filter(|(_, n)| n.len() == 1).map(|(&k, _)| k).collect();
        for &start in &ends {
            if adj[&start].iter().all(|&i| used[i]) {
                continue;
            }
            let end = walk(start, &mut used);
            let (ins, ine) = (deg.contains_key(&start), deg.contains_key(&end));
            if ins {
                out.set_mate(start, end);
            }
            if ine {
                out.set_mate(end, start);
            }
            if !ins && !ine && !self.is_pair(start, end) {
                return None;
            }
        }
        if let Some(first) = used.iter().position(|&u| !u) {
            // a closed cycle appeared; it must be the whole solution
            if !matches!(self.goal, Goal::Cycle) || !ends.is_empty() {
                return None;
            }
            walk(frag[first].0, &mut used);
            if used.iter().any(|&u| !u) {
                return None;
            }
            out.done = true;
        }
        Some(out)
    }

    fn run(&self) -> (Vec<Table>, Option<u32>) {
        let nodes = &self.nice.nodes;
        let mut tables: Vec<Table> = Vec::with_capacity(nodes.len());
        let mut incident: Vec<Vec<(EdgeId, Vertex)>> = vec![Vec::new(); self.g.vertex_bound()];
        for (e, u, v) in self.g.edges() {
            if u != v {
                incident[u].push((e, v));
                incident[v].push((e, u));
            }
        }
        let none_back = |l: u32, r: u32| Back {
            left: l,
            right: r,
            edges: [NONE, NONE],
        };
        for node in nodes {
            let mut t = Table::new();
            match node.kind {
                NodeKind::Leaf => t.insert(St::default(), none_back(u32::MAX, u32::MAX)),
                NodeKind::Introduce(_) => {
                    let c = &tables[node.children[0]];
                    for (i, s) in c.states.iter().enumerate() {
                        t.insert(s.clone(), none_back(i as u32, u32::MAX));
                    }
                }
                NodeKind::Forget(v) => {
                    let c = &tables[node.children[0]];
                    let child_bag = &nice_bag(self.nice, node.children[0]);
                    let inc: Vec<(EdgeId, Vertex)> = incident[v]
                        .iter()
                        .copied()
                        .filter(|(_, u)| child_bag.binary_search(u).is_ok())
                        .collect();
                    for (i, s) in c.states.iter().enumerate() {
                        let room = 2 - s.deg(v) as usize;
                        let mut choices: Vec<[usize; 2]> = vec![[NONE, NONE]];
                        if room >= 1 {
                            for x in 0..inc.len() {
                                choices.push([x, NONE]);
                                if room >= 2 {
                                    for y in x + 1..inc.len() {
                                        choices.push([x, y]);
                                    }
                                }
                            }
                        }
                        for ch in choices {
                            let mut s2 = s.clone();
                            let mut ok = true;
                            let mut used = [NONE, NONE];
                            for (k, &x) in ch.iter().enumerate() {
                                if x != NONE {
                                    let (e, u) = inc[x];
                                    used[k] = e;
                                    if !self.add_edge(&mut s2, v, u) {
                                        ok = false;
                                        break;
                                    }
                                }
                            }
                            if !ok || !self.may_forget(&s2, v) {
                                continue;
                            }
                            s2.remove(v);
                            t.insert(
                                s2,
                                Back {
                                    left: i as u32,
                                    right: u32::MAX,
                                    edges: used,
                                },
                            );
                        }
                    }
                }
                NodeKind::Join => {
                    let (l, r) = (&tables[node.children[0]], &tables[node.children[1]]);
                    for (i, a) in l.states.iter().enumerate() {
                        for (j, b) in r.states.iter().enumerate() {
                            if let Some(s) = self.join(a, b) {
                                t.insert(s, none_back(i as u32, j as u32));
                            }
                        }
                    }
                }
            }
            tables.push(t);
        }
        let want = St {
            ent: Vec::new(),
            done: matches!(self.goal, Goal::Cycle),
        };
        let hit = tables[self.nice.root].index.get(&want).copied();
        (tables, hit)
    }

    fn edges_of(&self, tables: &[Table], idx: u32) -> Vec<EdgeId> {
        let mut out = Vec::new();
        let mut stack = vec![(self.nice.root, idx)];
        while let Some((n, i)) = stack.pop() {
            let b = tables[n].back[i as usize];
            out.extend(b.edges.iter().copied().filter(|&e| e != NONE));
            let ch = &self.nice.nodes[n].children;
            if b.left != u32::MAX {
                stack.push((ch[0], b.left));
            }
            if b.right != u32::MAX {
                stack.push((ch[1], b.right));
            }
        }
        out.sort_unstable();
        out
    }
}

fn nice_bag(nice: &NiceTreeDecomposition, i: usize) -> Vec<Vertex> {
    nice.nodes[i].bag.clone()
}

fn check_decomposition(g: &EmbeddedGraph, nice: &NiceTreeDecomposition) -> Result<()> {
    let wrap = |e: Error| Error::InvalidDecomposition(e.to_string());
    nice.check_nice().map_err(wrap)?;
    treewidth::validate(g, &nice.to_td()).map_err(wrap)?;
    Ok(())
}

/// A cycle through every vertex of `t`, if one exists.
pub fn solve_t_cycle(g: &EmbeddedGraph, t: &[Vertex], nice: &NiceTreeDecomposition) -> Result<Option<Witness>> {
    check_decomposition(g, nice)?;
    if let Some(&v) = t.iter().find(|&&v| !g.contains(v)) {
        return Err(Error::UnknownVertex(v));
    }
    let mut terminal = vec![false; g.vertex_bound()];
    for &v in t {
        terminal[v] = true;
    }
    let engine = Engine {
        g,
        nice,
        goal: Goal::Cycle,
        terminal,
        partner: vec![NONE; g.vertex_bound()],
    };
    let (tables, hit) = engine.run();
    let Some(idx) = hit else {
        return Ok(None);
    };
    let edges = engine.edges_of(&tables, idx);
    let vs = cycle_vertices(g, &edges).expect("reconstructed edge set is a simple cycle");
    assert!(t.iter().all(|x| vs.contains(x)), "reconstructed cycle misses a terminal");
    Ok(Some(Witness::cycle(edges)))
}

/// `solve_t_cycle` on a greedy decomposition built on the fly.
pub fn solve_t_cycle_auto(g: &EmbeddedGraph, t: &[Vertex]) -> Result<Option<Witness>> {
    let nice = make_nice(&treewidth::build(g, BuildMode::GreedyFill)?);
    solve_t_cycle(g, t, &nice)
}

/// Vertex-disjoint paths joining the pairs of `m`, one edge list per pair.
pub fn linkage(g: &EmbeddedGraph, m: &Matching, nice: &NiceTreeDecomposition) -> Result<Option<Witness>> {
    check_decomposition(g, nice)?;
    if let Some(&v) = m.vertices().iter().find(|&&v| !g.contains(v)) {
        return Err(Error::UnknownVertex(v));
    }
    if m.is_empty() {
        return Ok(Some(Witness {
            kind: WitnessKind::PathSystem,
            edge_sets: Vec::new(),
        }));
    }
    let mut partner = vec![NONE; g.vertex_bound()];
    for &(a, b) in m.pairs() {
        partner[a] = b;
        partner[b] = a;
    }
    let engine = Engine {
        g,
        nice,
        goal: Goal::Paths,
        terminal: vec![false; g.vertex_bound()],
        partner,
    };
    let (tables, hit) = engine.run();
    let Some(idx) = hit else {
        return Ok(None);
    };
    let edges = engine.edges_of(&tables, idx);
    let sets = split_paths(g, &edges, m).expect("reconstructed edge set is a linkage");
    Ok(Some(Witness {
        kind: WitnessKind::PathSystem,
        edge_sets: sets,
    }))
}

pub fn solve_disjoint_paths(g: &EmbeddedGraph, m: &Matching, nice: &NiceTreeDecomposition) -> Result<bool> {
    Ok(linkage(g, m, nice)?.is_some())
}

pub fn solve_disjoint_paths_auto(g: &EmbeddedGraph, m: &Matching) -> Result<bool> {
    let nice = make_nice(&treewidth::build(g, BuildMode::GreedyFill)?);
    solve_disjoint_paths(g, m, &nice)
}

/// Splits a linkage edge set into one path per pair, checking that the paths
/// are vertex-disjoint and join the right ends.
pub fn split_paths(g: &EmbeddedGraph, edges: &[EdgeId], m: &Matching) -> Option<Vec<Vec<EdgeId>>> {
    let mut inc: BTreeMap<Vertex, Vec<EdgeId>> = BTreeMap::new();
    for &e in edges {
        let (u, v) = g.endpoints(e)?;
        inc.entry(u).or_default().push(e);
        inc.entry(v).or_default().push(e);
    }
    let mut used = 0;
    let mut out = Vec::new();
    for &(s, t) in m.pairs() {
        let mut path = Vec::new();
        let mut cur = s;
        let mut prev = NONE;
        loop {
            let es = inc.get(&cur)?;
            if cur == t {
                if es.len() != 1 {
                    return None;
                }
                break;
            }
            if (cur == s && es.len() != 1) || (cur != s && es.len() != 2) || path.len() > edges.len() {
                return None;
            }
            let e = *es.iter().find(|&&e| e != prev)?;
            path.push(e);
            prev = e;
            cur = g.other_end(e, cur);
        }
        used += path.len();
        out.push(path);
    }
    (used == edges.len()).then_some(out)
}

/// `G_M`: every pair `{u_i, v_i}` of `M` gets a fresh vertex `w_i` joined to
/// both ends.
#[derive(Clone, Debug)]
pub struct SubdividedInstance {
    pub graph: EmbeddedGraph,
    pub subdivision_vertices: Vec<Vertex>,
    pub origin_pairs: Matching,
}

pub fn subdivide_matching(g: &EmbeddedGraph, m: &Matching) -> SubdividedInstance {
    let mut h = g.clone();
    let mut ws = Vec::new();
    for &(u, v) in m.pairs() {
        let w = h.new_vertex();
        h.add_edge(u, w);
        h.add_edge(w, v);
        ws.push(w);
    }
    SubdividedInstance {
        graph: h,
        subdivision_vertices: ws,
        origin_pairs: m.clone(),
    }
}

/// Adds each `w_i` to the bags on a tree path from a bag holding `u_i` to
/// one holding `v_i`.
fn extend_decomposition(td: &TreeDecomposition, inst: &SubdividedInstance) -> TreeDecomposition {
    let mut td = td.clone();
    let depth_of = |td: &TreeDecomposition, mut x: usize| {
        let mut d = 0;
        while let Some(p) = td.parent[x] {
            x = p;
            d += 1;
        }
        d
    };
    for (&(u, v), &w) in inst.origin_pairs.pairs().iter().zip(&inst.subdivision_vertices) {
        let a = td.bags.iter().position(|b| b.contains(&u)).unwrap_or(td.root);
        let b = td.bags.iter().position(|b| b.contains(&v)).unwrap_or(td.root);
        let (mut x, mut y) = (a, b);
        let (mut dx, mut dy) = (depth_of(&td, x), depth_of(&td, y));
        let mut path = vec![x, y];
        while dx > dy {
            x = td.parent[x].unwrap();
            dx -= 1;
            path.push(x);
        }
        while dy > dx {
            y = td.parent[y].unwrap();
            dy -= 1;
            path.push(y);
        }
        while x != y {
            x = td.parent[x].unwrap();
            y = td.parent[y].unwrap();
            path.push(x);
            path.push(y);
        }
        path.sort_unstable();
        path.dedup();
        for n in path {
            td.bags[n].push(w);
            td.bags[n].sort_unstable();
        }
    }
    td
}

/// Whether `G_M` has a cycle through every subdivision vertex. The empty
/// matching counts as satisfiable.
pub fn solve_m_cycle(g: &EmbeddedGraph, b: &[Vertex], m: &Matching, td: &TreeDecomposition) -> Result<bool> {
    if let Some(&(x, y)) = m.pairs().iter().find(|(x, y)| !b.contains(x) || !b.contains(y)) {
        return Err(Error::InvalidMatching(format!("pair {{{x}, {y}}} leaves the boundary")));
    }
    if m.is_empty() {
        return Ok(true);
    }
    let inst = subdivide_matching(g, m);
    let ext = extend_decomposition(td, &inst);
    let nice = make_nice(&ext);
    Ok(solve_t_cycle(&inst.graph, &inst.subdivision_vertices, &nice)?.is_some())
}

pub fn solve_m_cycle_auto(g: &EmbeddedGraph, b: &[Vertex], m: &Matching) -> Result<bool> {
    let td = treewidth::build(g, BuildMode::GreedyFill)?;
    solve_m_cycle(g, b, m, &td)
}
