//! Tree decompositions: heuristic construction, validation, nice form and
//! LCA closure.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::planar_core::{EmbeddedGraph, RadialMap, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    /// Sorted bag per node.
    pub bags: Vec<Vec<Vertex>>,
    pub parent: Vec<Option<usize>>,
    pub root: usize,
}

impl TreeDecomposition {
    /// Builds a rooted decomposition from bags and undirected tree edges,
    /// rooted at a node of maximum degree (lowest id on ties).
    pub fn from_edges(bags: Vec<Vec<Vertex>>, edges: &[(usize, usize)]) -> Result<Self> {
        let n = bags.len();
        if n == 0 {
            return Err(Error::InvalidDecomposition("no bags".into()));
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(Error::InvalidDecomposition(format!("bad tree edge {a}-{b}")));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let root = (0..n).max_by_key(|&i| (adj[i].len(), std::cmp::Reverse(i))).unwrap();
        Self::rooted(bags, &adj, root)
    }

    fn rooted(mut bags: Vec<Vec<Vertex>>, adj: &[Vec<usize>], root: usize) -> Result<Self> {
        let n = bags.len();
        let mut parent = vec![None; n];
        let mut seen = vec![false; n];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        let mut visited = 1;
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some(x);
                    visited += 1;
                    queue.push_back(y);
                }
            }
        }
        let edge_count: usize = adj.iter().map(|a| a.len()).sum::<usize>() / 2;
        if visited != n || edge_count != n - 1 {
            return Err(Error::InvalidDecomposition("bags do not form a tree".into()));
        }
        for b in &mut bags {
            b.sort_unstable();
            b.dedup();
        }
        Ok(TreeDecomposition { bags, parent, root })
    }

    pub fn len(&self) -> usize {
        self.bags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bags.is_empty()
    }

    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(0).saturating_sub(1)
    }

    pub fn children(&self) -> Vec<Vec<usize>> {
        let mut ch = vec![Vec::new(); self.len()];
        for (i, p) in self.parent.iter().enumerate() {
            if let Some(p) = p {
                ch[*p].push(i);
            }
        }
        ch
    }

    pub fn tree_edges(&self) -> Vec<(usize, usize)> {
        self.parent
            .iter()
            .enumerate()
            .filter_map(|(i, p)| p.map(|p| (p, i)))
            .collect()
    }

    /// PACE-style text; bag ids and vertices are printed 1-based.
    pub fn to_pace(&self, n: usize) -> String {
        let mut out = String::new();
        writeln!(out, "s td {} {} {}", self.len(), self.width() + 1, n).unwrap();
        for (i, b) in self.bags.iter().enumerate() {
            write!(out, "b {}", i + 1).unwrap();
            for v in b {
                write!(out, " {}", v + 1).unwrap();
            }
            out.push('\n');
        }
        for (a, b) in self.tree_edges() {
            writeln!(out, "{} {}", a + 1, b + 1).unwrap();
        }
        out
    }

    pub fn from_pace(text: &str) -> Result<Self> {
        let mut bags: Vec<Option<Vec<Vertex>>> = Vec::new();
        let mut edges = Vec::new();
        let bad = |line: usize, msg: &str| Error::Parse {
            line,
            msg: msg.to_string(),
        };
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let toks: Vec<&str> = raw.split_whitespace().collect();
            if toks.is_empty() || toks[0] == "c" {
                continue;
            }
            let nums = |from: usize| -> Result<Vec<usize>> {
                toks[from..]
                    .iter()
                    .map(|t| match t.parse::<usize>() {
                        Ok(x) if x > 0 => Ok(x - 1),
                        _ => Err(bad(line, "expected positive integer")),
                    })
                    .collect()
            };
            match toks[0] {
                "s" => {
                    if toks.len() != 5 || toks[1] != "td" {
                        return Err(bad(line, "malformed header"));
                    }
                    let count: usize = toks[2].parse().map_err(|_| bad(line, "bad bag count"))?;
                    bags = vec![None; count];
                }
                "b" => {
                    let xs = nums(1)?;
                    let (&id, vs) = xs.split_first().ok_or_else(|| bad(line, "missing bag id"))?;
                    let slot = bags.get_mut(id).ok_or_else(|| bad(line, "bag id out of range"))?;
                    *slot = Some(vs.to_vec());
                }
                _ => {
                    let xs = nums(0)?;
                    if xs.len() != 2 {
                        return Err(bad(line, "expected tree edge"));
                    }
                    edges.push((xs[0], xs[1]));
                }
            }
        }
        let bags = bags
            .into_iter()
            .enumerate()
            .map(|(i, b)| b.ok_or_else(|| Error::InvalidDecomposition(format!("bag {} missing", i + 1))))
            .collect::<Result<Vec<_>>>()?;
        Self::from_edges(bags, &edges)
    }
}

/// Checks vertex coverage, edge coverage and subtree connectivity; returns
/// the width.
pub fn validate(g: &EmbeddedGraph, td: &TreeDecomposition) -> Result<usize> {
    let n = td.len();
    if n == 0 || td.root >= n || td.parent.len() != n || td.parent[td.root].is_some() {
        return Err(Error::InvalidDecomposition("malformed tree".into()));
    }
    // every node reaches the root without repeating
    for mut x in 0..n {
        let mut steps = 0;
        while let Some(p) = td.parent[x] {
            if p >= n || steps > n {
                return Err(Error::InvalidDecomposition("parent links do not form a tree".into()));
            }
            x = p;
            steps += 1;
        }
        if x != td.root {
            return Err(Error::InvalidDecomposition("several roots".into()));
        }
    }
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_bound()];
    for (i, b) in td.bags.iter().enumerate() {
        for &v in b {
            if !g.contains(v) {
                return Err(Error::InvalidDecomposition(format!("bag {i} holds unknown vertex {v}")));
            }
            holders[v].push(i);
        }
    }
    let mut in_bag = vec![false; n];
    for v in g.vertices() {
        let hs = &holders[v];
        if hs.is_empty() {
            return Err(Error::VertexSubtreeDisconnected(v));
        }
        for &h in hs {
            in_bag[h] = true;
        }
        // connected iff exactly one holder has its parent outside the set
        let tops = hs
            .iter()
            .filter(|&&h| td.parent[h].is_none_or(|p| !in_bag[p]))
            .count();
        for &h in hs {
            in_bag[h] = false;
        }
        if tops != 1 {
            return Err(Error::VertexSubtreeDisconnected(v));
        }
    }
    let sets: Vec<BTreeSet<Vertex>> = td.bags.iter().map(|b| b.iter().copied().collect()).collect();
    for (_, u, v) in g.edges() {
        if u == v {
            continue;
        }
        let (a, b) = if holders[u].len() <= holders[v].len() { (u, v) } else { (v, u) };
        if !holders[a].iter().any(|&h| sets[h].contains(&b)) {
            return Err(Error::EdgeUncovered(u, v));
        }
    }
    Ok(td.width())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuildMode {
    GreedyFill,
    RadialLayer,
}

impl BuildMode {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "greedy" | "greedy-fill" => Ok(BuildMode::GreedyFill),
            "radial" | "radial-layer" => Ok(BuildMode::RadialLayer),
            _ => Err(Error::BadParams(format!("unknown decomposition mode {s}"))),
        }
    }
}

/// Heuristic decomposition, validated before it is returned.
pub fn build(g: &EmbeddedGraph, mode: BuildMode) -> Result<TreeDecomposition> {
    let td = match mode {
        BuildMode::GreedyFill => greedy_fill(g)?,
        BuildMode::RadialLayer => radial_layers(g)?,
    };
    validate(g, &td)?;
    Ok(td)
}

fn simple_adjacency(g: &EmbeddedGraph) -> BTreeMap<Vertex, BTreeSet<Vertex>> {
    let mut adj: BTreeMap<Vertex, BTreeSet<Vertex>> = g.vertices().map(|v| (v, BTreeSet::new())).collect();
    for (_, u, v) in g.edges() {
        if u != v {
            adj.get_mut(&u).unwrap().insert(v);
            adj.get_mut(&v).unwrap().insert(u);
        }
    }
    adj
}

fn fill_in(adj: &BTreeMap<Vertex, BTreeSet<Vertex>>, v: Vertex) -> usize {
    let nb: Vec<Vertex> = adj[&v].iter().copied().collect();
    let mut missing = 0;
    for (i, &a) in nb.iter().enumerate() {
        for &b in &nb[i + 1..] {
            if !adj[&a].contains(&b) {
                missing += 1;
            }
        }
    }
    missing
}

/// Min fill-in elimination (ties: min degree, then lowest id).
fn greedy_fill(g: &EmbeddedGraph) -> Result<TreeDecomposition> {
    let mut adj = simple_adjacency(g);
    if adj.is_empty() {
        return TreeDecomposition::from_edges(vec![Vec::new()], &[]);
    }
    let mut fill: BTreeMap<Vertex, usize> = adj.keys().map(|&v| (v, fill_in(&adj, v))).collect();
    let mut order = Vec::new();
    let mut bags = Vec::new();
    while !adj.is_empty() {
        let v = *adj
            .keys()
            .min_by_key(|&&v| (fill[&v], adj[&v].len(), v))
            .unwrap();
        let nb: Vec<Vertex> = adj[&v].iter().copied().collect();
        let mut bag = nb.clone();
        bag.push(v);
        bags.push(bag);
        order.push(v);
        adj.remove(&v);
        fill.remove(&v);
        for &a in &nb {
            adj.get_mut(&a).unwrap().remove(&v);
        }
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                adj.get_mut(&a).unwrap().insert(b);
                adj.get_mut(&b).unwrap().insert(a);
            }
        }
        // fill-in can change within distance two of v
        let mut touched: BTreeSet<Vertex> = nb.iter().copied().collect();
        for &a in &nb {
            touched.extend(adj[&a].iter().copied());
        }
        for x in touched {
            fill.insert(x, fill_in(&adj, x));
        }
    }
    let pos: BTreeMap<Vertex, usize> = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut edges = Vec::new();
    let mut roots = Vec::new();
    for (i, bag) in bags.iter().enumerate() {
        let next = bag.iter().filter(|&&x| pos[&x] > i).map(|x| pos[x]).min();
        match next {
            Some(j) => edges.push((i, j)),
            None => roots.push(i),
        }
    }
    for w in roots.windows(2) {
        edges.push((w[0], w[1]));
    }
    let (bags, edges) = absorb_subsets(bags, edges);
    TreeDecomposition::from_edges(bags, &edges)
}

/// Merges every bag that is a subset of a neighbouring bag into it.
fn absorb_subsets(bags: Vec<Vec<Vertex>>, edges: Vec<(usize, usize)>) -> (Vec<Vec<Vertex>>, Vec<(usize, usize)>) {
    let n = bags.len();
    let sets: Vec<BTreeSet<Vertex>> = bags.iter().map(|b| b.iter().copied().collect()).collect();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for &(a, b) in &edges {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    let mut alive = vec![true; n];
    loop {
        let mut changed = false;
        for x in 0..n {
            if !alive[x] {
                continue;
            }
            if let Some(&y) = adj[x].iter().find(|&&y| sets[x].is_subset(&sets[y])) {
                let nbrs: Vec<usize> = adj[x].iter().copied().filter(|&z| z != y).collect();
                for z in nbrs {
                    adj[z].remove(&x);
                    adj[z].insert(y);
                    adj[y].insert(z);
                }
                adj[y].remove(&x);
                adj[x].clear();
                alive[x] = false;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let ids: Vec<usize> = (0..n).filter(|&x| alive[x]).collect();
    let mut new_id = vec![usize::MAX; n];
    for (i, &x) in ids.iter().enumerate() {
        new_id[x] = i;
    }
    let out_edges = ids
        .iter()
        .flat_map(|&x| adj[x].iter().filter(move |&&y| x < y).map(move |&y| (x, y)))
        .map(|(x, y)| (new_id[x], new_id[y]))
        .collect();
    (ids.into_iter().map(|x| bags[x].clone()).collect(), out_edges)
}

/// Path decomposition from radial layers: bags are consecutive layer
/// triples, one path per connected component.
fn radial_layers(g: &EmbeddedGraph) -> Result<TreeDecomposition> {
    let faces = g.faces();
    let mut layer_of: BTreeMap<Vertex, (usize, usize)> = BTreeMap::new();
    let comps = g.components();
    for (ci, comp) in comps.iter().enumerate() {
        // outer face of the component: its longest face
        let src: Vec<Vertex> = comp
            .iter()
            .flat_map(|&v| faces.faces_at(v).iter().copied())
            .max_by_key(|&f| (faces.faces[f].walk.len(), std::cmp::Reverse(f)))
            .map(|f| faces.vertices_of(f).to_vec())
            .unwrap_or_else(|| comp.clone());
        let map = RadialMap::from_sources(g, &faces, &src)?;
        for &v in comp {
            layer_of.insert(v, (ci, map.get(v).unwrap_or(0)));
        }
    }
    let mut layers: BTreeMap<(usize, usize), Vec<Vertex>> = BTreeMap::new();
    for (&v, &key) in &layer_of {
        layers.entry(key).or_default().push(v);
    }
    let mut bags = Vec::new();
    for (ci, _) in comps.iter().enumerate() {
        let depth = layers.keys().filter(|k| k.0 == ci).map(|k| k.1).max().unwrap_or(0);
        for d in 0..=depth {
            let mut bag = Vec::new();
            for dd in d.saturating_sub(1)..=d + 1 {
                bag.extend(layers.get(&(ci, dd)).into_iter().flatten().copied());
            }
            bags.push(bag);
        }
    }
    if bags.is_empty() {
        bags.push(Vec::new());
    }
    let edges: Vec<(usize, usize)> = (1..bags.len()).map(|i| (i - 1, i)).collect();
    let (bags, edges) = absorb_subsets(bags, edges);
    TreeDecomposition::from_edges(bags, &edges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeKind {
    Leaf,
    Introduce(Vertex),
    Forget(Vertex),
    Join,
}

#[derive(Clone, Debug)]
pub struct NiceNode {
    pub kind: NodeKind,
    pub bag: Vec<Vertex>,
    pub children: Vec<usize>,
}

/// Nice decomposition with empty leaf and root bags. Children always have
/// smaller indices than their parent, so index order is a post-order.
#[derive(Clone, Debug)]
pub struct NiceTreeDecomposition {
    pub nodes: Vec<NiceNode>,
    pub root: usize,
}

impl NiceTreeDecomposition {
    pub fn width(&self) -> usize {
        self.nodes.iter().map(|n| n.bag.len()).max().unwrap_or(0).saturating_sub(1)
    }

    pub fn to_td(&self) -> TreeDecomposition {
        let mut parent = vec![None; self.nodes.len()];
        for (i, n) in self.nodes.iter().enumerate() {
            for &c in &n.children {
                parent[c] = Some(i);
            }
        }
        TreeDecomposition {
            bags: self.nodes.iter().map(|n| n.bag.clone()).collect(),
            parent,
            root: self.root,
        }
    }

    /// Checks the local nice-form rules.
    pub fn check_nice(&self) -> Result<()> {
        let bad = |i: usize, m: &str| Err(Error::InvalidDecomposition(format!("node {i}: {m}")));
        for (i, n) in self.nodes.iter().enumerate() {
            if n.children.iter().any(|&c| c >= i) {
                return bad(i, "child after parent");
            }
            let child = |k: usize| &self.nodes[n.children[k]].bag;
            match n.kind {
                NodeKind::Leaf => {
                    if !n.children.is_empty() || !n.bag.is_empty() {
                        return bad(i, "leaf must be empty");
                    }
                }
                NodeKind::Introduce(v) => {
                    let mut expect = child(0).clone();
                    if n.children.len() != 1 || expect.contains(&v) {
                        return bad(i, "bad introduce");
                    }
                    expect.push(v);
                    expect.sort_unstable();
                    if expect != n.bag {
                        return bad(i, "bad introduce");
                    }
                }
                NodeKind::Forget(v) => {
                    let mut expect = n.bag.clone();
                    if n.children.len() != 1 || expect.contains(&v) {
                        return bad(i, "bad forget");
                    }
                    expect.push(v);
                    expect.sort_unstable();
                    if &expect != child(0) {
                        return bad(i, "bad forget");
                    }
                }
                NodeKind::Join => {
                    if n.children.len() != 2 || child(0) != &n.bag || child(1) != &n.bag {
                        return bad(i, "bad join");
                    }
                }
            }
        }
        if !self.nodes[self.root].bag.is_empty() {
            return bad(self.root, "root bag must be empty");
        }
        Ok(())
    }
}

struct NiceBuilder {
    nodes: Vec<NiceNode>,
}

impl NiceBuilder {
    fn push(&mut self, kind: NodeKind, bag: Vec<Vertex>, children: Vec<usize>) -> usize {
        self.nodes.push(NiceNode { kind, bag, children });
        self.nodes.len() - 1
    }

    /// Moves from the top of `node` (bag `from`) to bag `to`.
    fn morph(&mut self, mut node: usize, to: &[Vertex]) -> usize {
        let mut bag = self.nodes[node].bag.clone();
        let forget: Vec<Vertex> = bag.iter().copied().filter(|v| !to.contains(v)).collect();
        for v in forget {
            bag.retain(|&x| x != v);
            node = self.push(NodeKind::Forget(v), bag.clone(), vec![node]);
        }
        for &v in to {
            if !bag.contains(&v) {
                bag.push(v);
                bag.sort_unstable();
                node = self.push(NodeKind::Introduce(v), bag.clone(), vec![node]);
            }
        }
        node
    }
}

pub fn make_nice(td: &TreeDecomposition) -> NiceTreeDecomposition {
    let children = td.children();
    let mut b = NiceBuilder { nodes: Vec::new() };
    // post-order without recursion
    let mut order = Vec::new();
    let mut stack = vec![td.root];
    while let Some(x) = stack.pop() {
        order.push(x);
        stack.extend(children[x].iter().copied());
    }
    let mut top = vec![usize::MAX; td.len()];
    for &x in order.iter().rev() {
        let bag = &td.bags[x];
        let subs: Vec<usize> = children[x].iter().map(|&c| b.morph(top[c], bag)).collect();
        let node = match subs.split_first() {
            None => {
                let leaf = b.push(NodeKind::Leaf, Vec::new(), Vec::new());
                b.morph(leaf, bag)
            }
            Some((&first, rest)) => rest
                .iter()
                .fold(first, |acc, &s| b.push(NodeKind::Join, bag.clone(), vec![acc, s])),
        };
        top[x] = node;
    }
    let root = b.morph(top[td.root], &[]);
    NiceTreeDecomposition { nodes: b.nodes, root }
}

/// Smallest superset of `m` closed under pairwise lowest common ancestors in
/// the rooted tree given by `parent`.
pub fn lca_closure(parent: &[Option<usize>], m: &BTreeSet<usize>) -> BTreeSet<usize> {
    let n = parent.len();
    let mut children = vec![Vec::new(); n];
    let mut roots = Vec::new();
    for (i, p) in parent.iter().enumerate() {
        match p {
            Some(p) => children[*p].push(i),
            None => roots.push(i),
        }
    }
    let mut pre = vec![0usize; n];
    let mut depth = vec![0usize; n];
    let mut counter = 0;
    for &r in &roots {
        let mut stack = vec![r];
        while let Some(x) = stack.pop() {
            pre[x] = counter;
            counter += 1;
            for &c in children[x].iter().rev() {
                depth[c] = depth[x] + 1;
                stack.push(c);
            }
        }
    }
    let lca = |mut a: usize, mut b: usize| -> Option<usize> {
        while depth[a] > depth[b] {
            a = parent[a]?;
        }
        while depth[b] > depth[a] {
            b = parent[b]?;
        }
        while a != b {
            a = parent[a]?;
            b = parent[b]?;
        }
        Some(a)
    };
    let mut sorted: Vec<usize> = m.iter().copied().collect();
    sorted.sort_by_key(|&x| pre[x]);
    let mut out = m.clone();
    for w in sorted.windows(2) {
        if let Some(c) = lca(w[0], w[1]) {
            out.insert(c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{cycle, grid, path, star};

    #[test]
    fn validation_examples() {
        let g = cycle(4);
        let single = TreeDecomposition::from_edges(vec![vec![0, 1, 2, 3]], &[]).unwrap();
        assert_eq!(validate(&g, &single).unwrap(), 3);
        let p = path(4);
        let td = TreeDecomposition::from_edges(vec![vec![0, 1], vec![1, 2], vec![2, 3]], &[(0, 1), (1, 2)])
            .unwrap();
        assert_eq!(validate(&p, &td).unwrap(), 1);
        let td = TreeDecomposition::from_edges(vec![vec![0, 1], vec![2, 3]], &[(0, 1)]).unwrap();
        assert_eq!(validate(&p, &td), Err(Error::EdgeUncovered(1, 2)));
        let td = TreeDecomposition::from_edges(
            vec![vec![0, 1], vec![2, 3], vec![1, 2]],
            &[(0, 1), (1, 2)],
        )
        .unwrap();
        assert!(matches!(validate(&p, &td), Err(Error::VertexSubtreeDisconnected(_))));
    }

    #[test]
    fn builds_small_widths() {
        assert_eq!(build(&star(5), BuildMode::GreedyFill).unwrap().width(), 1);
        assert_eq!(build(&path(6), BuildMode::GreedyFill).unwrap().width(), 1);
        assert_eq!(build(&cycle(7), BuildMode::GreedyFill).unwrap().width(), 2);
        let w = build(&grid(4, 4), BuildMode::GreedyFill).unwrap().width();
        assert!(w <= 7);
        assert_eq!(w, 4);
        for mode in [BuildMode::GreedyFill, BuildMode::RadialLayer] {
            build(&grid(5, 3), mode).unwrap();
            build(&EmbeddedGraph::with_vertices(3), mode).unwrap();
        }
    }

    #[test]
    fn nice_form_keeps_width() {
        let g = grid(3, 4);
        let td = build(&g, BuildMode::GreedyFill).unwrap();
        let nice = make_nice(&td);
        nice.check_nice().unwrap();
        assert_eq!(validate(&g, &nice.to_td()).unwrap(), td.width());
        let empty = TreeDecomposition::from_edges(vec![Vec::new()], &[]).unwrap();
        let nice = make_nice(&empty);
        assert_eq!(nice.nodes.len(), 1);
        assert_eq!(nice.nodes[0].kind, NodeKind::Leaf);
    }

    #[test]
    fn lca_examples() {
        // 0 root with children 1, 2; 3 under 1; 4 under 2
        let parent = vec![None, Some(0), Some(0), Some(1), Some(2)];
        assert!(lca_closure(&parent, &BTreeSet::new()).is_empty());
        assert_eq!(lca_closure(&parent, &BTreeSet::from([3])), BTreeSet::from([3]));
        assert_eq!(lca_closure(&parent, &BTreeSet::from([3, 4])), BTreeSet::from([0, 3, 4]));
    }

    #[test]
    fn pace_round_trip() {
        let g = grid(3, 3);
        let td = build(&g, BuildMode::GreedyFill).unwrap();
        let back = TreeDecomposition::from_pace(&td.to_pace(9)).unwrap();
        assert_eq!(validate(&g, &back).unwrap(), td.width());
    }
}
