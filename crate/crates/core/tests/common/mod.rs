#![allow(dead_code)]

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use cluster_recog::bm::BmGraph;
use cluster_recog::canon::canonical_form;
use cluster_recog::{CanonicalForm, Diagram, SkeletonForm};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random diagram with edge weights `d_i d_j` for a random symmetrizer `d`,
/// so every cycle has a square weight product; weights above `max_weight`
/// are dropped.
pub fn random_valid(r: &mut ChaCha8Rng, n: usize, p: f64, max_weight: u64) -> Diagram {
    let d: Vec<u64> = (0..n).map(|_| *[1u64, 1, 1, 2, 3].choose(r).unwrap()).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let w = d[i] * d[j];
            if w <= max_weight && r.gen_bool(p) {
                let (a, b) = if r.gen_bool(0.5) { (i, j) } else { (j, i) };
                edges.push((a, b, w as i64));
            }
        }
    }
    Diagram::new(n, edges).expect("square products by construction")
}

pub fn random_simply_laced(r: &mut ChaCha8Rng, n: usize, p: f64) -> Diagram {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(p) {
                let (a, b) = if r.gen_bool(0.5) { (i, j) } else { (j, i) };
                edges.push((a, b, 1));
            }
        }
    }
    Diagram::new(n, edges).unwrap()
}

pub fn random_graph(r: &mut ChaCha8Rng, n: usize, p: f64) -> BmGraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    BmGraph::from_edges(n, &edges).unwrap()
}

pub fn random_connected_graph(r: &mut ChaCha8Rng, n: usize, p: f64) -> BmGraph {
    loop {
        let g = random_graph(r, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

/// Random relabeling and random edge directions of a tree-shaped diagram.
pub fn reorient_tree(r: &mut ChaCha8Rng, d: &Diagram) -> Diagram {
    let mut perm: Vec<usize> = (0..d.n()).collect();
    perm.shuffle(r);
    let edges: Vec<(usize, usize, i64)> = d
        .edges()
        .map(|(a, b, w)| if r.gen_bool(0.5) { (perm[a], perm[b], w as i64) } else { (perm[b], perm[a], w as i64) })
        .collect();
    Diagram::new(d.n(), edges).unwrap()
}

/// Connected graphs on `n` vertices up to isomorphism: every connected graph
/// has a vertex whose removal leaves it connected, so extending the smaller
/// list by one vertex reaches all of them.
pub fn connected_graphs(n: usize) -> Vec<BmGraph> {
    let mut level: Vec<BmGraph> = vec![BmGraph::from_edges(1, &[]).unwrap()];
    for m in 1..n {
        let mut next: BTreeMap<SkeletonForm, BmGraph> = BTreeMap::new();
        for g in &level {
            for mask in 1u64..1 << m {
                let mut rows = g.rows().to_vec();
                for (v, row) in rows.iter_mut().enumerate() {
                    if mask >> v & 1 == 1 {
                        *row |= 1 << m;
                    }
                }
                rows.push(mask);
                let h = BmGraph::from_rows(m + 1, rows).unwrap();
                next.entry(h.form()).or_insert(h);
            }
        }
        level = next.into_values().collect();
    }
    level
}

/// Every orientation of `g` in which all chordless cycles are oriented, up to
/// isomorphism.
pub fn cycle_oriented_orientations(g: &BmGraph) -> Vec<Diagram> {
    let edges = g.edge_list();
    let mut cycles: Vec<Vec<(usize, usize)>> = Vec::new();
    let d = g.to_diagram();
    d.for_each_chordless_cycle::<()>(|c| {
        let k = c.len();
        cycles.push((0..k).map(|i| (c[i], c[(i + 1) % k])).collect());
        ControlFlow::Continue(())
    });
    let index = |a: usize, b: usize| edges.iter().position(|&(x, y)| (x, y) == (a.min(b), a.max(b))).unwrap();
    // per cycle: (edge, true when the cycle runs from the smaller endpoint)
    let cyc: Vec<Vec<(usize, bool)>> =
        cycles.iter().map(|c| c.iter().map(|&(a, b)| (index(a, b), a < b)).collect()).collect();
    let mut out: BTreeMap<CanonicalForm, Diagram> = BTreeMap::new();
    let mut dir: Vec<Option<bool>> = vec![None; edges.len()];
    fn rec(
        e: usize,
        dir: &mut Vec<Option<bool>>,
        edges: &[(usize, usize)],
        cyc: &[Vec<(usize, bool)>],
        n: usize,
        out: &mut BTreeMap<CanonicalForm, Diagram>,
    ) {
        if e == edges.len() {
            let list = edges.iter().zip(dir.iter()).map(|(&(a, b), f)| if f.unwrap() { (a, b, 1) } else { (b, a, 1) });
            let d = Diagram::new(n, list).unwrap();
            out.entry(canonical_form(&d).unwrap()).or_insert(d);
            return;
        }
        for choice in [true, false] {
            dir[e] = Some(choice);
            let ok = cyc.iter().all(|c| {
                let mut along = None;
                c.iter().all(|&(x, fwd)| match dir[x] {
                    None => true,
                    Some(f) => *along.get_or_insert(f == fwd) == (f == fwd),
                })
            });
            if ok {
                rec(e + 1, dir, edges, cyc, n, out);
            }
        }
        dir[e] = None;
    }
    rec(0, &mut dir, &edges, &cyc, g.n(), &mut out);
    out.into_values().collect()
}

/// Connected simply-laced diagrams on `1..=max_n` vertices with every chordless
/// cycle oriented, up to isomorphism.
pub fn oriented_simply_laced(max_n: usize) -> Vec<Diagram> {
    (1..=max_n).flat_map(|n| connected_graphs(n).iter().flat_map(cycle_oriented_orientations).collect::<Vec<_>>()).collect()
}
