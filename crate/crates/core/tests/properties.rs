use std::collections::{BTreeSet, VecDeque};
use std::f64::consts::TAU;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

use tcycle::cycles::{check_concentric, is_isolated, loop_cost};
use tcycle::decomposition::{reed_pipeline, IsolationBudget, Reason};
use tcycle::format::{parse, serialize};
use tcycle::generate::{from_drawing, random_planar, rng};
use tcycle::kernel::{greedy_reduce, kernelize, linkage_profile, KernelConfig};
use tcycle::oracle::{
    all_t_loops, brute_disjoint_paths, brute_isolation, brute_t_cycle, cycle_vertices, enumerate_cheap_loops,
    Matching,
};
use tcycle::planar_core::{radial_bfs, radial_distance};
use tcycle::tcycle_dp::solve_t_cycle;
use tcycle::treewidth::{build, lca_closure, make_nice, validate, BuildMode};
use tcycle::{EmbeddedGraph, Vertex};

fn instance(seed: u64, lo: usize, hi: usize) -> (EmbeddedGraph, rand_chacha::ChaCha8Rng) {
    let mut r = rng(seed);
    let n = r.gen_range(lo..=hi);
    let g = random_planar(n, r.gen_range(0.0..0.6), r.gen_range(0..3), &mut r);
    (g, r)
}

fn pick(r: &mut impl Rng, g: &EmbeddedGraph, k: usize) -> Vec<Vertex> {
    let all: Vec<Vertex> = g.vertices().collect();
    let mut t: Vec<Vertex> = all.choose_multiple(r, k.min(all.len())).copied().collect();
    t.sort_unstable();
    t
}

/// Radial distances by BFS on the vertex-face incidence graph, halved.
fn naive_radial(g: &EmbeddedGraph, s: Vertex) -> Vec<Option<usize>> {
    let faces = g.faces();
    let n = g.vertex_bound();
    let mut dist = vec![usize::MAX; n + faces.len()];
    dist[s] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(x) = q.pop_front() {
        let next: Vec<usize> = if x < n {
            faces.faces_at(x).iter().map(|&f| n + f).collect()
        } else {
            faces.vertices_of(x - n).to_vec()
        };
        for y in next {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                q.push_back(y);
            }
        }
    }
    (0..n)
        .map(|v| (g.contains(v) && dist[v] != usize::MAX).then(|| dist[v] / 2))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn generated_graphs_satisfy_euler(seed in any::<u64>(), n in 1usize..60) {
        let mut r = rng(seed);
        let g = random_planar(n, r.gen_range(0.0..0.7), r.gen_range(0..5), &mut r);
        prop_assert!(g.validate().is_ok());
        prop_assert_eq!(g.vertex_count(), n);
    }

    #[test]
    fn format_round_trips(seed in any::<u64>()) {
        let (mut g, mut r) = instance(seed, 1, 30);
        for t in pick(&mut r, &g.clone(), 3) {
            g.set_terminal(t, true);
        }
        let back = parse(&serialize(&g)).unwrap();
        prop_assert_eq!(serialize(&back), serialize(&g));
        prop_assert_eq!(back.terminals(), g.terminals());
    }

    #[test]
    fn radial_distance_is_a_metric(seed in any::<u64>()) {
        let (g, _) = instance(seed, 1, 12);
        let vs: Vec<Vertex> = g.vertices().collect();
        let d: Vec<Vec<Option<usize>>> = vs.iter().map(|&u| naive_radial(&g, u)).collect();
        for (i, &u) in vs.iter().enumerate() {
            let map = radial_bfs(&g, u).unwrap();
            for &v in &vs {
                prop_assert_eq!(map.get(v), d[i][v]);
                prop_assert_eq!(radial_distance(&g, u, v).ok(), radial_distance(&g, v, u).ok());
            }
        }
        for (i, _) in vs.iter().enumerate() {
            for (j, &w) in vs.iter().enumerate() {
                for &v in &vs {
                    if let (Some(a), Some(b), Some(c)) = (d[i][w], d[j][v], d[i][v]) {
                        prop_assert!(c <= a + b);
                    }
                }
            }
        }
    }

    #[test]
    fn witnesses_are_simple_t_cycles(seed in any::<u64>()) {
        let (g, mut r) = instance(seed, 1, 14);
        let k = r.gen_range(0..=5);
        let t = pick(&mut r, &g, k);
        let nice = make_nice(&build(&g, BuildMode::GreedyFill).unwrap());
        nice.check_nice().unwrap();
        for w in [solve_t_cycle(&g, &t, &nice).unwrap(), brute_t_cycle(&g, &t).unwrap()].into_iter().flatten() {
            if w.edges().is_empty() {
                prop_assert!(t.len() <= 1);
                continue;
            }
            let vs = cycle_vertices(&g, w.edges()).unwrap();
            prop_assert!(t.iter().all(|x| vs.contains(x)));
        }
    }

    #[test]
    fn decompositions_validate(seed in any::<u64>()) {
        let (g, _) = instance(seed, 1, 40);
        for mode in [BuildMode::GreedyFill, BuildMode::RadialLayer] {
            let td = build(&g, mode).unwrap();
            let w = validate(&g, &td).unwrap();
            let nice = make_nice(&td);
            nice.check_nice().unwrap();
            prop_assert_eq!(validate(&g, &nice.to_td()).unwrap(), w);
        }
    }

    #[test]
    fn lca_closure_components_touch_two_nodes(seed in any::<u64>(), n in 1usize..=12) {
        let mut r = rng(seed);
        let parent: Vec<Option<usize>> = (0..n).map(|i| (i > 0).then(|| r.gen_range(0..i))).collect();
        let m: BTreeSet<usize> = (0..n).filter(|_| r.gen_bool(0.3)).collect();
        let l = lca_closure(&parent, &m);
        prop_assert!(m.is_subset(&l));
        prop_assert!(m.is_empty() || l.len() < 2 * m.len());
        // components of the tree minus L, each adjacent to at most two nodes of L
        let mut comp = vec![usize::MAX; n];
        for s in 0..n {
            if l.contains(&s) || comp[s] != usize::MAX {
                continue;
            }
            comp[s] = s;
            let mut stack = vec![s];
            let mut touching = BTreeSet::new();
            while let Some(x) = stack.pop() {
                let nbrs = parent[x].into_iter().chain((0..n).filter(|&c| parent[c] == Some(x)));
                for y in nbrs {
                    if l.contains(&y) {
                        touching.insert(y);
                    } else if comp[y] == usize::MAX {
                        comp[y] = s;
                        stack.push(y);
                    }
                }
            }
            prop_assert!(touching.len() <= 2, "component of {} touches {:?}", s, touching);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn t_cycle_is_or_over_cyclic_orders(seed in any::<u64>()) {
        let (g, mut r) = instance(seed, 2, 10);
        let k = r.gen_range(2..=4);
        let t = pick(&mut r, &g, k);
        prop_assume!(t.len() >= 2);
        // with a twin copy of every terminal, a T-cycle in some cyclic order is
        // a disjoint-paths instance joining each twin to the next terminal
        let mut any = false;
        let mut rest: Vec<Vertex> = t[1..].to_vec();
        let mut orders = Vec::new();
        permute(&mut rest, 0, &mut orders);
        for tail in orders {
            let order: Vec<Vertex> = std::iter::once(t[0]).chain(tail).collect();
            let mut h = g.clone();
            let mut twin = Vec::new();
            for &x in &order {
                let y = h.new_vertex();
                for (_, z) in g.neighbors(x) {
                    h.add_edge(y, z);
                }
                twin.push(y);
            }
            let pairs = (0..order.len()).map(|i| (twin[i], order[(i + 1) % order.len()]));
            if brute_disjoint_paths(&h, &Matching::new(pairs).unwrap()).unwrap() {
                any = true;
                break;
            }
        }
        let direct = brute_t_cycle(&g, &t).unwrap().is_some();
        // two terminals: twins give u'-v and v'-u, which a single edge u-v fakes
        if t.len() >= 3 {
            prop_assert_eq!(direct, any);
        } else {
            prop_assert!(any || !direct);
        }
    }

    #[test]
    fn isolation_is_monotone(seed in any::<u64>()) {
        let (g, mut r) = instance(seed, 3, 12);
        let t = pick(&mut r, &g, 2);
        let v = *g.vertices().collect::<Vec<_>>().choose(&mut r).unwrap();
        let answers: Vec<bool> = (0..4).map(|l| brute_isolation(&g, &t, v, l).unwrap()).collect();
        for l in 1..answers.len() {
            prop_assert!(answers[l - 1] || !answers[l]);
        }
    }

    #[test]
    fn cheap_loops_have_minimum_cost(seed in any::<u64>(), m in 3usize..=5, k in 1usize..=3) {
        let mut r = rng(seed);
        let at = |radius: f64, a: f64| (radius * a.cos(), radius * a.sin());
        let id = |i: usize, p: usize| i * m + p % m;
        let mut pts: Vec<(f64, f64)> = (0..2)
            .flat_map(|i| (0..m).map(move |p| at((i + 1) as f64, TAU * p as f64 / m as f64)))
            .collect();
        let mut edges = Vec::new();
        let mut cycles = Vec::new();
        for i in 0..2 {
            cycles.push((0..m).map(|p| edges.len() + p).collect::<Vec<usize>>());
            edges.extend((0..m).map(|p| (id(i, p), id(i, p + 1))));
        }
        edges.push((id(0, 0), id(1, 0)));
        for p in 1..m {
            if r.gen_bool(0.5) {
                edges.push((id(0, p), id(1, p)));
            }
        }
        // terminals outside the outer ring, each joined to two consecutive ring vertices
        let mut t = Vec::new();
        for p in 0..k.min(m) {
            let v = pts.len();
            pts.push(at(3.0, TAU * (p as f64 + 0.5) / m as f64));
            edges.push((v, id(1, p)));
            edges.push((v, id(1, p + 1)));
            t.push(v);
        }
        let g = from_drawing(&pts, &edges);
        let seq = check_concentric(&g, &cycles).unwrap();
        let cheap = enumerate_cheap_loops(&g, &seq, &t).unwrap();
        let all = all_t_loops(&g, &t);
        prop_assert_eq!(cheap.is_empty(), all.is_empty());
        if let Some(first) = cheap.first() {
            let c = loop_cost(first.edges(), &seq);
            prop_assert!(cheap.iter().all(|w| loop_cost(w.edges(), &seq) == c));
            prop_assert!(all.iter().all(|l| loop_cost(l, &seq) >= c));
            let n_min = all.iter().filter(|l| loop_cost(l, &seq) == c).count();
            prop_assert_eq!(n_min, cheap.len());
        }
    }

    #[test]
    fn removals_are_isolated_from_terminals(seed in any::<u64>(), g_of_k in 1usize..=3) {
        let (g, mut r) = instance(seed, 4, 40);
        let k = r.gen_range(1..=5);
        let t = pick(&mut r, &g, k);
        let budget = IsolationBudget::new(g_of_k).unwrap();
        let (h, u, rep) = reed_pipeline(&g, &t, &budget).unwrap();
        prop_assert!(u.iter().all(|&x| h.contains(x)));
        prop_assert!(t.iter().all(|&x| h.contains(x)));
        for rm in &rep.removed {
            prop_assert!(!h.contains(rm.vertex));
            if rm.reason == Reason::BoundaryIsolated {
                prop_assert!(is_isolated(&g, &t, rm.vertex, rm.threshold).unwrap());
            }
        }
    }

    #[test]
    fn greedy_replacement_keeps_the_profile(seed in any::<u64>()) {
        let (p, mut r) = instance(seed, 3, 10);
        let kb = r.gen_range(1..=4);
        let b = pick(&mut r, &p, kb);
        let rep = greedy_reduce(&p, &b).unwrap();
        prop_assert!(rep.graph.vertex_count() <= p.vertex_count());
        let before = linkage_profile(&p, &b).unwrap();
        let after = linkage_profile(&rep.graph, &b).unwrap();
        prop_assert_eq!(before, after);
    }

    #[test]
    fn profile_is_downward_closed(seed in any::<u64>()) {
        let (p, mut r) = instance(seed, 3, 10);
        let kb = r.gen_range(2..=5);
        let b = pick(&mut r, &p, kb);
        let pr = linkage_profile(&p, &b).unwrap();
        // a feasible matching stays feasible after dropping any of its pairs
        for m in &pr.feasible_dp {
            for i in 0..m.len() {
                let smaller = Matching::new(m.pairs().iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &q)| q)).unwrap();
                prop_assert!(pr.feasible_dp.contains(&smaller));
            }
        }
    }

    #[test]
    fn kernel_never_grows(seed in any::<u64>()) {
        let (g, mut r) = instance(seed, 4, 40);
        let k = r.gen_range(1..=4);
        let t = pick(&mut r, &g, k);
        let config = KernelConfig { c1: 0.0, c2: 2, ..KernelConfig::default() };
        let (h, rep) = kernelize(&g, &t, &config).unwrap();
        prop_assert!(h.vertex_count() <= g.vertex_count());
        prop_assert!(h.validate().is_ok());
        prop_assert!(t.iter().all(|&x| h.contains(x)));
        prop_assert!(rep.stages.windows(2).all(|w| w[1].vertices <= w[0].vertices));
        prop_assert_eq!(rep.final_vertices, h.vertex_count());
    }
}

fn permute(xs: &mut Vec<Vertex>, i: usize, out: &mut Vec<Vec<Vertex>>) {
    if i == xs.len() {
        out.push(xs.clone());
        return;
    }
    for j in i..xs.len() {
        xs.swap(i, j);
        permute(xs, i + 1, out);
        xs.swap(i, j);
    }
}
