//! Regeneration of minimal 2-infinite diagrams by one-vertex extension.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;

use crate::bm::{is_dynkin_equivalent, BmDecision, BmGraph, DEFAULT_ORBIT_LIMIT};
use crate::canon::{canonical_form, skeleton_form, CanonicalForm, SkeletonForm};
use crate::diagram::{components_of, full_mask, Diagram};
use crate::dynkin::{AffineType, DynkinType};
use crate::explorer::{enumerate_class, Decider, ExplorationLimits};

use super::label::assign_labels;
use super::{CatalogEntry, CatalogError, EntryKind};

/// Orients an undirected weighted graph so that every chordless cycle is
/// oriented. Edges keep their listed direction unless a cycle forces a flip;
/// the search is depth-first in edge order, so the result is deterministic.
pub fn orient_all_cycles(n: usize, edges: &[(usize, usize, u64)]) -> Option<Diagram> {
    let mut adj = vec![0u64; n];
    let mut index = HashMap::new();
    for (i, &(a, b, _)) in edges.iter().enumerate() {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
        index.insert((a.min(b), a.max(b)), i);
    }
    // per cycle: (edge index, true when the listed direction runs along the cycle)
    let mut cycles: Vec<Vec<(usize, bool)>> = Vec::new();
    crate::diagram::chordless_cycles::<()>(&adj, |c| {
        let k = c.len();
        cycles.push(
            (0..k)
                .map(|i| {
                    let (u, v) = (c[i], c[(i + 1) % k]);
                    let e = index[&(u.min(v), u.max(v))];
                    (e, edges[e].0 == u)
                })
                .collect(),
        );
        std::ops::ControlFlow::Continue(())
    });
    let mut by_edge: Vec<Vec<usize>> = vec![Vec::new(); edges.len()];
    for (ci, c) in cycles.iter().enumerate() {
        for &(e, _) in c {
            by_edge[e].push(ci);
        }
    }
    let mut flip: Vec<Option<bool>> = vec![None; edges.len()];
    if !assign(0, &mut flip, &cycles, &by_edge) {
        return None;
    }
    let list = edges.iter().zip(&flip).map(|(&(a, b, w), f)| if f.unwrap() { (b, a, w as i64) } else { (a, b, w as i64) });
    Diagram::new(n, list).ok()
}

fn assign(e: usize, flip: &mut Vec<Option<bool>>, cycles: &[Vec<(usize, bool)>], by_edge: &[Vec<usize>]) -> bool {
    if e == flip.len() {
        return true;
    }
    for choice in [false, true] {
        flip[e] = Some(choice);
        let consistent = by_edge[e].iter().all(|&ci| {
            let mut dir = None;
            cycles[ci].iter().all(|&(x, along)| match flip[x] {
                None => true,
                Some(f) => {
                    let d = along != f;
                    *dir.get_or_insert(d) == d
                }
            })
        });
        if consistent && assign(e + 1, flip, cycles, by_edge) {
            return true;
        }
    }
    flip[e] = None;
    false
}

fn graph_finite(g: &BmGraph) -> Result<bool, CatalogError> {
    match is_dynkin_equivalent(g, DEFAULT_ORBIT_LIMIT)? {
        BmDecision::Decided(b) => Ok(b),
        BmDecision::Fallback => Err(CatalogError::Inconclusive(format!("orbit search gave up on {}", g.form()))),
    }
}

/// Minimality for a simply-laced graph whose cycles can all be oriented: every
/// component of every one-vertex deletion is Dynkin-equivalent and the whole
/// graph is not.
fn graph_minimal_infinite(g: &BmGraph) -> Result<bool, CatalogError> {
    let n = g.n();
    for v in 0..n {
        let rest = full_mask(n) & !(1 << v);
        for comp in components_of(g.rows(), rest) {
            if !graph_finite(&g.induced(comp))? {
                return Ok(false);
            }
        }
    }
    Ok(!graph_finite(g)?)
}

/// Simply-laced minimal 2-infinite diagrams obtained by adjoining one vertex to
/// a member of the mutation class of `E_base`, one oriented representative per
/// underlying graph, sorted by canonical form.
pub fn generate_exceptional_diagrams(base: usize, lim: ExplorationLimits) -> Result<Vec<Diagram>, CatalogError> {
    if !(6..=8).contains(&base) {
        return Err(CatalogError::BadParams(format!("base rank {base} is not 6, 7 or 8")));
    }
    let class = enumerate_class(&DynkinType::E(base).diagram(), lim)?;
    let mut skeletons: BTreeMap<SkeletonForm, BmGraph> = BTreeMap::new();
    for f in &class.members {
        let g = f.to_diagram().odd_weight_skeleton();
        skeletons.entry(g.form()).or_insert(g);
    }
    let extended: Vec<Vec<(SkeletonForm, BmGraph)>> = skeletons
        .values()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|g| {
            (1u64..1 << base)
                .map(|mask| {
                    let mut rows: Vec<u64> = g.rows().to_vec();
                    for (v, row) in rows.iter_mut().enumerate() {
                        if mask >> v & 1 == 1 {
                            *row |= 1 << base;
                        }
                    }
                    rows.push(mask);
                    let h = BmGraph::from_rows(base + 1, rows).expect("symmetric by construction");
                    (h.form(), h)
                })
                .collect()
        })
        .collect();
    let mut candidates: BTreeMap<SkeletonForm, BmGraph> = BTreeMap::new();
    for (f, h) in extended.into_iter().flatten() {
        candidates.entry(f).or_insert(h);
    }
    let kept: Vec<Result<Option<Diagram>, CatalogError>> = candidates
        .values()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|h| {
            let edges: Vec<(usize, usize, u64)> = h.edge_list().into_iter().map(|(a, b)| (a, b, 1)).collect();
            let Some(d) = orient_all_cycles(h.n(), &edges) else { return Ok(None) };
            Ok(graph_minimal_infinite(h)?.then_some(d))
        })
        .collect();
    let mut out: BTreeMap<CanonicalForm, Diagram> = BTreeMap::new();
    for d in kept {
        if let Some(d) = d? {
            out.insert(canonical_form(&d)?, d);
        }
    }
    Ok(out.into_values().collect())
}

/// Labeled entries for [`generate_exceptional_diagrams`].
pub fn generate_exceptional(base: usize, lim: ExplorationLimits) -> Result<Vec<CatalogEntry>, CatalogError> {
    let ds = generate_exceptional_diagrams(base, lim)?;
    let x = AffineType::E(base).label();
    let labels = assign_labels(&x, &ds);
    ds.iter().zip(labels).map(|(d, l)| CatalogEntry::new(l, EntryKind::Generated(base), d)).collect()
}

/// Connected minimal 2-infinite diagrams on `n` vertices with weights at most
/// `weight_cap`, found by extending every connected 2-finite diagram on
/// `n - 1` vertices by one vertex. Grouped by underlying weighted graph and
/// by whether a non-oriented cycle is present; the representative of a group
/// is its smallest canonical form. For `n = 2` the answer is `I2(4)`.
pub fn generate_minimal_by_extension(
    n: usize,
    weight_cap: u64,
    decider: &Decider,
) -> Result<Vec<Diagram>, CatalogError> {
    if n < 2 {
        return Ok(Vec::new());
    }
    if n == 2 {
        return Ok(vec![AffineType::I2(4).diagram()]);
    }
    let lim = decider.limits();
    let mut bases: BTreeSet<CanonicalForm> = BTreeSet::new();
    for t in DynkinType::all_of_rank(n - 1) {
        bases.extend(enumerate_class(&t.diagram(), lim)?.members);
    }
    let choices: Vec<(u64, bool)> =
        std::iter::once((0, false)).chain((1..=weight_cap).flat_map(|w| [(w, false), (w, true)])).collect();
    let bases: Vec<Diagram> = bases.iter().map(CanonicalForm::to_diagram).collect();
    let candidate_lists: Vec<Vec<(CanonicalForm, Diagram)>> = bases
        .par_iter()
        .map(|b| {
            let m = b.n();
            let mut out = Vec::new();
            let total = choices.len().pow(m as u32);
            for mut code in 1..total {
                let mut ext = Vec::new();
                for v in 0..m {
                    let (w, outgoing) = choices[code % choices.len()];
                    code /= choices.len();
                    if w > 0 {
                        ext.push((v, w, outgoing));
                    }
                }
                if let Ok(d) = b.extend(&ext) {
                    if let Ok(f) = canonical_form(&d) {
                        out.push((f, d));
                    }
                }
            }
            out
        })
        .collect();
    let mut candidates: BTreeMap<CanonicalForm, Diagram> = BTreeMap::new();
    for (f, d) in candidate_lists.into_iter().flatten() {
        candidates.entry(f).or_insert(d);
    }
    let verdicts: Vec<Result<bool, CatalogError>> = candidates
        .values()
        .collect::<Vec<_>>()
        .par_iter()
        .map(|d| Ok(decider.is_minimal_2infinite(d)?))
        .collect();
    let mut groups: BTreeMap<(SkeletonForm, bool), (CanonicalForm, Diagram)> = BTreeMap::new();
    for ((f, d), keep) in candidates.into_iter().zip(verdicts) {
        if keep? {
            let key = (skeleton_form(&d)?, d.has_non_oriented_cycle());
            groups.entry(key).or_insert((f, d));
        }
    }
    let mut out: Vec<(CanonicalForm, Diagram)> = groups.into_values().collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|x| x.1).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orientation_search() {
        // two triangles sharing an edge can both be oriented
        let d = orient_all_cycles(4, &[(0, 1, 1), (1, 2, 1), (0, 2, 1), (1, 3, 1), (2, 3, 1)]).unwrap();
        assert!(!d.has_non_oriented_cycle());
        // K4: the four triangles cannot all be oriented
        assert!(orient_all_cycles(4, &[(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)]).is_none());
        // trees keep the listed directions
        let t = orient_all_cycles(3, &[(0, 1, 1), (2, 1, 1)]).unwrap();
        assert_eq!(t.arrow(2, 1), 1);
    }

    #[test]
    fn extension_small() {
        let dec = Decider::default();
        let two = generate_minimal_by_extension(2, 3, &dec).unwrap();
        assert_eq!(two, vec![AffineType::I2(4).diagram()]);
        let three = generate_minimal_by_extension(3, 3, &dec).unwrap();
        for d in &three {
            assert!(dec.is_minimal_2infinite(d).unwrap());
        }
        let g = |w: [u64; 3]| {
            let d = Diagram::new(3, [(0, 1, w[0] as i64), (1, 2, w[1] as i64), (0, 2, w[2] as i64)]).unwrap();
            skeleton_form(&d).unwrap()
        };
        let sks: Vec<(SkeletonForm, bool)> =
            three.iter().map(|d| (skeleton_form(d).unwrap(), d.has_non_oriented_cycle())).collect();
        assert!(sks.contains(&(g([2, 2, 1]), true)));
        assert!(sks.contains(&(g([3, 3, 1]), true)));
    }
}
