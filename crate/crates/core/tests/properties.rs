mod common;

use cluster_recog::bm::{basic_move, invariants, BmGraph};
use cluster_recog::canon::{canonical_form, skeleton_form};
use cluster_recog::catalog::{parse_catalog, render_catalog, Catalog};
use cluster_recog::explorer::enumerate_class;
use cluster_recog::{mutate, mutate_seq, Diagram, ExplorationLimits};
use proptest::prelude::*;

/// Diagram from a symmetrizer and a per-pair choice: 0 no edge, 1 forward, 2 backward.
fn build(sym: &[u64], pairs: &[u8]) -> Diagram {
    let n = sym.len();
    let mut edges = Vec::new();
    let mut idx = 0;
    for i in 0..n {
        for j in i + 1..n {
            let w = (sym[i] * sym[j]) as i64;
            match pairs[idx] {
                1 => edges.push((i, j, w)),
                2 => edges.push((j, i, w)),
                _ => {}
            }
            idx += 1;
        }
    }
    Diagram::new(n, edges).unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

fn brute_isomorphic(a: &Diagram, b: &Diagram) -> bool {
    a.n() == b.n() && permutations(a.n()).iter().any(|p| a.relabel(p).unwrap() == *b)
}

fn diagram(max_n: usize) -> impl Strategy<Value = Diagram> {
    (1..=max_n).prop_flat_map(|n| {
        (prop::collection::vec(prop::sample::select(vec![1u64, 1, 2, 3]), n), prop::collection::vec(0u8..3, n * (n - 1) / 2))
            .prop_map(|(sym, pairs)| build(&sym, &pairs))
    })
}

fn with_perm(max_n: usize) -> impl Strategy<Value = (Diagram, Vec<usize>)> {
    diagram(max_n).prop_flat_map(|d| {
        let n = d.n();
        (Just(d), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn graph(max_n: usize) -> impl Strategy<Value = BmGraph> {
    (2..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            let edges: Vec<(usize, usize)> = pairs.zip(bits).filter(|x| x.1).map(|x| x.0).collect();
            BmGraph::from_edges(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn mutation_is_an_involution(d in diagram(8), k in 0usize..8) {
        let k = k % d.n();
        prop_assert_eq!(mutate_seq(&d, &[k, k]).unwrap(), d);
    }

    #[test]
    fn mutation_commutes_with_relabeling((d, p) in with_perm(7), k in 0usize..7) {
        let k = k % d.n();
        let a = mutate(&d.relabel(&p).unwrap(), p[k]).unwrap();
        let b = mutate(&d, k).unwrap().relabel(&p).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn mutation_commutes_with_reversal(d in diagram(7), k in 0usize..7) {
        let k = k % d.n();
        prop_assert_eq!(mutate(&d.opposite(), k).unwrap(), mutate(&d, k).unwrap().opposite());
    }

    #[test]
    fn canonical_forms_ignore_labels((d, p) in with_perm(8)) {
        let e = d.relabel(&p).unwrap();
        prop_assert_eq!(canonical_form(&d).unwrap(), canonical_form(&e).unwrap());
        prop_assert_eq!(skeleton_form(&d).unwrap(), skeleton_form(&e).unwrap());
        prop_assert_eq!(canonical_form(&d).unwrap().to_diagram().n(), d.n());
    }

    #[test]
    fn canonical_form_decides_isomorphism((a, p) in with_perm(5), other in diagram(5), k in 0usize..5, pick in 0u8..3) {
        // relabelings, relabeled mutations and unrelated diagrams
        let b = match pick {
            0 => a.relabel(&p).unwrap(),
            1 => mutate(&a, k % a.n()).unwrap().relabel(&p).unwrap(),
            _ => other,
        };
        let same = a.n() == b.n() && canonical_form(&a).unwrap() == canonical_form(&b).unwrap();
        prop_assert_eq!(same, brute_isomorphic(&a, &b));
    }

    #[test]
    fn canonical_form_round_trips(d in diagram(6)) {
        let f = canonical_form(&d).unwrap();
        prop_assert!(brute_isomorphic(&f.to_diagram(), &d));
    }

    #[test]
    fn basic_moves_keep_invariants(g in graph(10), pick in any::<prop::sample::Index>(), flip in any::<bool>()) {
        let edges = g.edge_list();
        prop_assume!(!edges.is_empty());
        let (x, y) = edges[pick.index(edges.len())];
        let (c, a) = if flip { (x, y) } else { (y, x) };
        prop_assert_eq!(invariants(&basic_move(&g, c, a).unwrap()), invariants(&g));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn class_is_independent_of_the_seed(d in diagram(5), steps in prop::collection::vec(0usize..5, 0..6)) {
        prop_assume!(d.max_weight() <= 3);
        let lim = ExplorationLimits { max_members: 5000, ..ExplorationLimits::default() };
        let steps: Vec<usize> = steps.into_iter().map(|k| k % d.n()).collect();
        let other = mutate_seq(&d, &steps).unwrap();
        match (enumerate_class(&d, lim), enumerate_class(&other, lim)) {
            (Ok(a), Ok(b)) => prop_assert_eq!(a.members, b.members),
            (a, b) => prop_assert_eq!(a.is_err(), b.is_err()),
        }
    }
}

#[test]
fn shipped_catalog_round_trips() {
    let entries = Catalog::builtin().entries().to_vec();
    let text = render_catalog(&entries);
    let back = parse_catalog(&text).unwrap();
    assert_eq!(back, entries);
}
