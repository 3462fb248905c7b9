//! Verdicts, minimal witnesses and the forbidden-pattern test for type A.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::bm::{is_2finite_via_bm, BmDecision, BmError, DEFAULT_ORBIT_LIMIT};
use crate::canon::{canonical_form_with_limit, CanonError, CanonicalForm};
use crate::catalog::match_entry;
use crate::diagram::{Diagram, DiagramError, VertexSet, MAX_VERTICES};
use crate::explorer::{
    classify_finite_type_with, find_extended_dynkin_rep, Decider, ExplorationLimits, ExploreError,
};
use crate::mutation::MutationStep;

/// Label reported for a minimal witness that no catalog entry matches.
pub const UNLABELED: &str = "unlabeled minimal";

#[derive(Debug, Error)]
pub enum RecognizeError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error(transparent)]
    Bm(#[from] BmError),
    #[error(transparent)]
    Explore(#[from] ExploreError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecognizedVerdict {
    Finite,
    Infinite,
    Inconclusive,
}

impl fmt::Display for RecognizedVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RecognizedVerdict::Finite => "2-finite",
            RecognizedVerdict::Infinite => "2-infinite",
            RecognizedVerdict::Inconclusive => "inconclusive",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    BmFast,
    Bfs,
    SubdiagramScan,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::BmFast => "bm-fast",
            Method::Bfs => "bfs",
            Method::SubdiagramScan => "subdiagram-scan",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub vertices: VertexSet,
    pub label: String,
}

/// Mutation path to a Dynkin or extended Dynkin member of a class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    /// Vertices of the input the path acts on (the whole input, or the witness).
    pub vertices: VertexSet,
    pub target: String,
    pub path: Vec<MutationStep>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecognitionReport {
    pub verdict: RecognizedVerdict,
    pub witness: Option<Witness>,
    pub method: Method,
    pub reduction: Option<Reduction>,
    /// Set when an exploration limit was hit.
    pub limits_hit: Option<ExplorationLimits>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RecognizeOptions {
    pub limits: ExplorationLimits,
    /// Also search for a mutation path to a (extended) Dynkin member.
    pub reduce: bool,
}

pub fn recognize(d: &Diagram) -> Result<RecognitionReport, RecognizeError> {
    recognize_with(d, RecognizeOptions::default(), &Decider::default())
}

/// Fast path for simply-laced diagrams without non-oriented cycles, class
/// exploration otherwise; a 2-infinite verdict always comes with a witness.
pub fn recognize_with(
    d: &Diagram,
    opts: RecognizeOptions,
    decider: &Decider,
) -> Result<RecognitionReport, RecognizeError> {
    let lim = opts.limits;
    let (finite, method) = match decide(d, decider) {
        Ok(x) => x,
        Err(RecognizeError::Explore(ExploreError::LimitExceeded { .. })) => {
            // the class is too large to finish; a 2-infinite subdiagram still settles it
            return match find_minimal_witness_with(d, decider) {
                Ok(Some(w)) if w.vertices.len() < d.n() => Ok(RecognitionReport {
                    verdict: RecognizedVerdict::Infinite,
                    witness: Some(w),
                    method: Method::SubdiagramScan,
                    reduction: None,
                    limits_hit: Some(lim),
                }),
                Ok(_) | Err(RecognizeError::Explore(ExploreError::LimitExceeded { .. })) => Ok(RecognitionReport {
                    verdict: RecognizedVerdict::Inconclusive,
                    witness: None,
                    method: Method::Bfs,
                    reduction: None,
                    limits_hit: Some(lim),
                }),
                Err(e) => Err(e),
            };
        }
        Err(e) => return Err(e),
    };
    let mut report = RecognitionReport {
        verdict: if finite { RecognizedVerdict::Finite } else { RecognizedVerdict::Infinite },
        witness: None,
        method,
        reduction: None,
        limits_hit: None,
    };
    if !finite {
        report.witness = find_minimal_witness_with(d, decider)?;
    }
    if opts.reduce {
        report.reduction = reduction(d, report.witness.as_ref(), lim)?;
    }
    Ok(report)
}

/// 2-finiteness of `d` and the method that settled it.
fn decide(d: &Diagram, decider: &Decider) -> Result<(bool, Method), RecognizeError> {
    if d.max_weight() >= decider.limits().max_weight {
        return Ok((false, Method::Bfs));
    }
    let comps = d.connected_components();
    if comps.len() > 1 {
        let mut method = Method::BmFast;
        for c in comps {
            let (f, m) = decide(&d.induced_subdiagram(&c)?, decider)?;
            if m == Method::Bfs {
                method = Method::Bfs;
            }
            if !f {
                return Ok((false, m));
            }
        }
        return Ok((true, method));
    }
    if d.n() >= 2 && d.is_simply_laced() && !d.has_non_oriented_cycle() {
        if let BmDecision::Decided(b) = is_2finite_via_bm(d, DEFAULT_ORBIT_LIMIT)? {
            return Ok((b, Method::BmFast));
        }
    }
    Ok((decider.is_2finite(d)?, Method::Bfs))
}

fn reduction(
    d: &Diagram,
    witness: Option<&Witness>,
    lim: ExplorationLimits,
) -> Result<Option<Reduction>, RecognizeError> {
    match witness {
        None => {
            if !d.is_connected() {
                return Ok(None);
            }
            Ok(classify_finite_type_with(d, lim)?.map(|(t, path)| Reduction {
                vertices: VertexSet::full(d.n()),
                target: t.label(),
                path,
            }))
        }
        Some(w) => {
            let sub = d.induced_subdiagram(&w.vertices)?;
            Ok(find_extended_dynkin_rep(&sub, lim)?.map(|(t, path)| Reduction {
                vertices: w.vertices.clone(),
                target: t.label(),
                path,
            }))
        }
    }
}

pub fn find_minimal_witness(d: &Diagram) -> Result<Option<Witness>, RecognizeError> {
    find_minimal_witness_with(d, &Decider::default())
}

/// Smallest connected induced subdiagram that is 2-infinite, ties broken by
/// canonical form and then by vertex list. The first size at which any
/// connected subset is 2-infinite only has minimal ones, since all smaller
/// connected subsets were found 2-finite.
pub fn find_minimal_witness_with(d: &Diagram, decider: &Decider) -> Result<Option<Witness>, RecognizeError> {
    let adj = d.adjacency_masks();
    let mut level: Vec<u64> = (0..d.n()).map(|v| 1u64 << v).collect();
    while !level.is_empty() {
        let hits: Vec<Result<Option<(CanonicalForm, VertexSet, String)>, RecognizeError>> = level
            .par_iter()
            .map(|&mask| {
                let vs = VertexSet::from_mask(mask);
                let sub = d.induced_subdiagram(&vs)?;
                let label = match match_entry(&sub) {
                    Some(e) => e.label,
                    None if !decide(&sub, decider)?.0 => UNLABELED.to_string(),
                    None => return Ok(None),
                };
                Ok(Some((canonical_form_with_limit(&sub, MAX_VERTICES)?, vs, label)))
            })
            .collect();
        let mut best: Option<(CanonicalForm, VertexSet, String)> = None;
        for h in hits {
            if let Some(h) = h? {
                let better = match &best {
                    None => true,
                    Some(b) => (&h.0, h.1.as_slice()) < (&b.0, b.1.as_slice()),
                };
                if better {
                    best = Some(h);
                }
            }
        }
        if let Some((_, vertices, label)) = best {
            return Ok(Some(Witness { vertices, label }));
        }
        let mut next: HashSet<u64> = HashSet::new();
        for &mask in &level {
            let mut frontier = neighborhood(&adj, mask) & !mask;
            while frontier != 0 {
                let v = frontier.trailing_zeros();
                frontier &= frontier - 1;
                next.insert(mask | 1 << v);
            }
        }
        level = next.into_iter().collect();
        level.sort_unstable();
    }
    Ok(None)
}

fn neighborhood(adj: &[u64], mut mask: u64) -> u64 {
    let mut out = 0;
    while mask != 0 {
        out |= adj[mask.trailing_zeros() as usize];
        mask &= mask - 1;
    }
    out
}

pub fn is_minimal_2infinite(d: &Diagram) -> Result<bool, RecognizeError> {
    Ok(Decider::default().is_minimal_2infinite(d)?)
}

/// Type A test for connected simply-laced diagrams: no non-oriented cycle,
/// no induced star with three leaves, no two triangles sharing an edge and no
/// oriented chordless cycle of length at least 4.
pub fn is_type_a_by_patterns(d: &Diagram) -> Result<bool, RecognizeError> {
    if !d.is_simply_laced() {
        return Err(RecognizeError::Precondition("diagram is not simply-laced".into()));
    }
    if !d.is_connected() {
        return Err(RecognizeError::Precondition("diagram is not connected".into()));
    }
    let cycles = d.chordless_cycles();
    if cycles.iter().any(|c| c.len() >= 4 || !d.is_oriented_cycle(c)) {
        return Ok(false);
    }
    let tri: Vec<u64> = cycles.iter().map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
    for (i, a) in tri.iter().enumerate() {
        if tri[i + 1..].iter().any(|b| (a & b).count_ones() == 2) {
            return Ok(false);
        }
    }
    let adj = d.adjacency_masks();
    for &nb in &adj {
        let leaves: Vec<usize> = (0..d.n()).filter(|&v| nb >> v & 1 == 1).collect();
        for x in 0..leaves.len() {
            for y in x + 1..leaves.len() {
                for z in y + 1..leaves.len() {
                    let (a, b, e) = (leaves[x], leaves[y], leaves[z]);
                    if !d.adjacent(a, b) && !d.adjacent(a, e) && !d.adjacent(b, e) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::DynkinType;

    fn dg(n: usize, e: &[(usize, usize, i64)]) -> Diagram {
        Diagram::new(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn examples() {
        let e8 = DynkinType::E(8).diagram();
        let r = recognize(&e8).unwrap();
        assert_eq!(r.verdict, RecognizedVerdict::Finite);
        assert_eq!(r.method, Method::BmFast);
        assert!(r.witness.is_none());

        let cyc = dg(5, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1), (3, 4, 1)]);
        let r = recognize(&cyc).unwrap();
        assert_eq!(r.verdict, RecognizedVerdict::Infinite);
        let w = r.witness.unwrap();
        assert_eq!(w.vertices, VertexSet::new([0, 1, 2, 3]));
        assert!(w.label.starts_with("A_n^(1)"), "{}", w.label);

        let i6 = dg(2, &[(0, 1, 6)]);
        let r = recognize(&i6).unwrap();
        assert_eq!(r.verdict, RecognizedVerdict::Infinite);
        let w = r.witness.unwrap();
        assert_eq!(w.vertices, VertexSet::full(2));
        assert_eq!(w.label, "I_2(a)[a=6]");
    }

    #[test]
    fn witness_of_padded_entry() {
        let star = dg(5, &[(0, 4, 1), (1, 4, 1), (2, 4, 1), (3, 4, 1)]);
        assert_eq!(find_minimal_witness(&star).unwrap().unwrap().vertices, VertexSet::full(5));
        let padded = star.extend(&[(0, 1, true)]).unwrap();
        let w = find_minimal_witness(&padded).unwrap().unwrap();
        assert_eq!(w.vertices, VertexSet::full(5));
        assert!(find_minimal_witness(&DynkinType::D(6).diagram()).unwrap().is_none());
    }

    #[test]
    fn minimality() {
        assert!(is_minimal_2infinite(&dg(2, &[(0, 1, 4)])).unwrap());
        assert!(!is_minimal_2infinite(&dg(2, &[(0, 1, 3)])).unwrap());
        assert!(is_minimal_2infinite(&dg(5, &[(0, 4, 1), (1, 4, 1), (2, 4, 1), (3, 4, 1)])).unwrap());
    }

    #[test]
    fn patterns() {
        assert!(is_type_a_by_patterns(&dg(3, &[(0, 1, 1), (1, 2, 1), (2, 0, 1)])).unwrap());
        assert!(!is_type_a_by_patterns(&dg(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)])).unwrap());
        assert!(!is_type_a_by_patterns(&dg(4, &[(0, 3, 1), (1, 3, 1), (2, 3, 1)])).unwrap());
        assert!(is_type_a_by_patterns(&dg(1, &[])).unwrap());
        assert!(is_type_a_by_patterns(&dg(2, &[(0, 1, 2)])).is_err());
    }

    #[test]
    fn reduction_paths() {
        let opts = RecognizeOptions { reduce: true, ..Default::default() };
        let r = recognize_with(&DynkinType::A(4).diagram(), opts, &Decider::default()).unwrap();
        assert_eq!(r.reduction.unwrap().target, "A4");
        let star = dg(5, &[(0, 4, 1), (1, 4, 1), (2, 4, 1), (3, 4, 1)]);
        let r = recognize_with(&star, opts, &Decider::default()).unwrap();
        assert_eq!(r.reduction.unwrap().target, "D4^(1)");
    }
}
