use rand::seq::SliceRandom;
use rand::Rng;
use tcycle::generate::{random_planar, rng};
use tcycle::oracle::{brute_disjoint_paths, brute_t_cycle, cycle_vertices, Matching};
use tcycle::tcycle_dp::{
    linkage, solve_disjoint_paths, solve_m_cycle, solve_t_cycle, split_paths, subdivide_matching,
};
use tcycle::treewidth::{build, make_nice, BuildMode};
use tcycle::{EmbeddedGraph, Vertex};

fn instance(seed: u64, max_n: usize) -> (EmbeddedGraph, rand_chacha::ChaCha8Rng) {
    let mut r = rng(seed);
    let n = r.gen_range(2..=max_n);
    let p = r.gen_range(0.0..0.6);
    let g = random_planar(n, p, r.gen_range(0..3), &mut r);
    (g, r)
}

fn pick(r: &mut impl Rng, g: &EmbeddedGraph, k: usize) -> Vec<Vertex> {
    let all: Vec<Vertex> = g.vertices().collect();
    let mut t: Vec<Vertex> = all.choose_multiple(r, k.min(all.len())).copied().collect();
    t.sort_unstable();
    t
}

#[test]
fn t_cycle_matches_oracle() {
    let mut yes = 0;
    for seed in 0..1000 {
        let (g, mut r) = instance(seed, 12);
        let k = r.gen_range(0..=5);
        let t = pick(&mut r, &g, k);
        let nice = make_nice(&build(&g, BuildMode::GreedyFill).unwrap());
        let dp = solve_t_cycle(&g, &t, &nice).unwrap();
        let brute = brute_t_cycle(&g, &t).unwrap();
        assert_eq!(dp.is_some(), brute.is_some(), "seed {seed} t {t:?}");
        if let Some(w) = dp {
            let vs = cycle_vertices(&g, w.edges()).unwrap();
            assert!(t.iter().all(|x| vs.contains(x)));
            yes += 1;
        }
    }
    assert!(yes > 100 && yes < 900, "unbalanced sample: {yes}");
}

#[test]
fn disjoint_paths_match_oracle() {
    let mut yes = 0;
    for seed in 0..1000 {
        let (g, mut r) = instance(10_000 + seed, 12);
        let k = r.gen_range(0..=3);
        let vs = pick(&mut r, &g, 2 * k);
        let m = Matching::new(vs.chunks(2).filter(|c| c.len() == 2).map(|c| (c[0], c[1]))).unwrap();
        let nice = make_nice(&build(&g, BuildMode::GreedyFill).unwrap());
        let dp = linkage(&g, &m, &nice).unwrap();
        assert_eq!(dp.is_some(), brute_disjoint_paths(&g, &m).unwrap(), "seed {seed} m {m:?}");
        if let Some(w) = dp {
            let all: Vec<_> = w.edge_sets.concat();
            assert!(split_paths(&g, &all, &m).is_some());
            yes += 1;
        }
    }
    assert!(yes > 100 && yes < 950, "unbalanced sample: {yes}");
}

#[test]
fn m_cycle_matches_oracle_on_subdivision() {
    for seed in 0..400 {
        let (g, mut r) = instance(20_000 + seed, 10);
        let k = r.gen_range(1..=3);
        let vs = pick(&mut r, &g, 2 * k);
        if vs.len() < 2 {
            continue;
        }
        let m = Matching::new(vs.chunks(2).filter(|c| c.len() == 2).map(|c| (c[0], c[1]))).unwrap();
        let td = build(&g, BuildMode::GreedyFill).unwrap();
        let dp = solve_m_cycle(&g, &vs, &m, &td).unwrap();
        let inst = subdivide_matching(&g, &m);
        let brute = brute_t_cycle(&inst.graph, &inst.subdivision_vertices).unwrap().is_some();
        assert_eq!(dp, brute, "seed {seed}");
    }
}

#[test]
fn answers_do_not_depend_on_decomposition() {
    for seed in 0..300 {
        let (g, mut r) = instance(30_000 + seed, 14);
        let k = r.gen_range(1..=4);
        let t = pick(&mut r, &g, k);
        let a = make_nice(&build(&g, BuildMode::GreedyFill).unwrap());
        let b = make_nice(&build(&g, BuildMode::RadialLayer).unwrap());
        assert_eq!(
            solve_t_cycle(&g, &t, &a).unwrap().is_some(),
            solve_t_cycle(&g, &t, &b).unwrap().is_some(),
            "seed {seed}"
        );
    }
}

fn cyclic_orders(t: &[Vertex]) -> Vec<Vec<Vertex>> {
    // fix t[0] first; every permutation of the rest
    fn perms(rest: &mut Vec<Vertex>, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if rest.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            cur.push(x);
            perms(rest, cur, out);
            cur.pop();
            rest.insert(i, x);
        }
    }
    let mut out = Vec::new();
    perms(&mut t[1..].to_vec(), &mut vec![t[0]], &mut out);
    out
}

/// A T-cycle exists iff, for some cyclic order of T, consecutive terminals
/// can be joined by paths that only meet at shared ends. With each terminal
/// split into an in-copy and an out-copy this is a disjoint-paths instance.
#[test]
fn t_cycle_equals_or_over_orderings() {
    for seed in 0..300 {
        let (g, mut r) = instance(40_000 + seed, 10);
        let k = r.gen_range(3..=4);
        let t = pick(&mut r, &g, k);
        if t.len() < 3 {
            continue;
        }
        let nice = make_nice(&build(&g, BuildMode::GreedyFill).unwrap());
        let direct = solve_t_cycle(&g, &t, &nice).unwrap().is_some();
        let mut any = false;
        for order in cyclic_orders(&t) {
            // out-copy of order[i] is a fresh twin; pair twin(order[i]) with order[i+1]
            let mut h = g.clone();
            let mut twin = std::collections::BTreeMap::new();
            for &x in &order {
                let y = h.new_vertex();
                for (_, z) in g.neighbors(x) {
                    if z != x {
                        h.add_edge(y, z);
                    }
                }
                twin.insert(x, y);
            }
            let pairs: Vec<_> = (0..order.len())
                .map(|i| (twin[&order[i]], order[(i + 1) % order.len()]))
                .collect();
            let m = Matching::new(pairs).unwrap();
            let hn = make_nice(&build(&h, BuildMode::GreedyFill).unwrap());
            if solve_disjoint_paths(&h, &m, &hn).unwrap() {
                any = true;
                break;
            }
        }
        assert_eq!(direct, any, "seed {seed} t {t:?}");
    }
}
