//! Breadth-first exploration of mutation classes.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::sync::Mutex;

use rayon::prelude::*;
use thiserror::Error;

use crate::canon::{canonical_form, skeleton_form, CanonError, CanonicalForm, SkeletonForm};
use crate::diagram::{Diagram, DiagramError};
use crate::dynkin::{AffineType, DynkinType};
use crate::mutation::{mutate, MutationStep};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExplorationLimits {
    pub max_members: usize,
    /// Weight at or above which a diagram counts as 2-infinite.
    pub max_weight: u64,
}

impl Default for ExplorationLimits {
    fn default() -> Self {
        ExplorationLimits { max_members: 1_000_000, max_weight: 4 }
    }
}

impl ExplorationLimits {
    /// Parses `max_members=N,max_weight=W` (either key optional).
    pub fn parse(spec: &str) -> Result<Self, String> {
        let mut lim = Self::default();
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part.split_once('=').ok_or_else(|| format!("expected key=value, got {part:?}"))?;
            let v: u64 = v.trim().parse().map_err(|e| format!("{k}: {e}"))?;
            if v == 0 {
                return Err(format!("{k} must be positive"));
            }
            match k.trim() {
                "max_members" => lim.max_members = v as usize,
                "max_weight" => lim.max_weight = v,
                other => return Err(format!("unknown limit {other:?}")),
            }
        }
        Ok(lim)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSummary {
    pub seed: CanonicalForm,
    pub members: BTreeSet<CanonicalForm>,
    pub size: usize,
    pub max_weight_seen: u64,
    pub truncated: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Finite(ClassSummary),
    Infinite { witness: Vec<MutationStep>, offending_edge: (usize, usize, u64) },
}

impl Verdict {
    pub fn is_finite(&self) -> bool {
        matches!(self, Verdict::Finite(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExploreError {
    #[error("exploration limit of {} members exceeded", limits.max_members)]
    LimitExceeded { partial: Box<ClassSummary>, limits: ExplorationLimits },
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Canon(#[from] CanonError),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// A visited class member.
pub struct Member<'a> {
    pub diagram: &'a Diagram,
    pub path: &'a [MutationStep],
    pub form: &'a CanonicalForm,
}

enum Control<T> {
    Continue,
    Stop(T),
}

struct Node {
    form: CanonicalForm,
    diagram: Diagram,
    path: Vec<MutationStep>,
}

struct Outcome<T> {
    summary: ClassSummary,
    stopped: Option<T>,
}

/// Deterministic BFS over the mutation class. Frontier expansion runs in
/// parallel; insertion into the seen set happens in frontier order, and each
/// new layer is sorted by canonical form.
fn bfs<T>(
    seed: &Diagram,
    max_members: usize,
    mut visit: impl FnMut(&Member<'_>) -> Control<T>,
) -> Result<Outcome<T>, ExploreError> {
    let seed_form = canonical_form(seed)?;
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    let mut max_w = seed.max_weight();
    seen.insert(seed_form.clone());
    let summary = |seen: &HashSet<CanonicalForm>, max_w, truncated| ClassSummary {
        seed: seed_form.clone(),
        members: seen.iter().cloned().collect(),
        size: seen.len(),
        max_weight_seen: max_w,
        truncated,
    };
    if let Control::Stop(t) = visit(&Member { diagram: seed, path: &[], form: &seed_form }) {
        return Ok(Outcome { summary: summary(&seen, max_w, true), stopped: Some(t) });
    }
    let n = seed.n();
    let mut frontier = vec![Node { form: seed_form.clone(), diagram: seed.clone(), path: Vec::new() }];
    while !frontier.is_empty() {
        let children: Vec<Result<Vec<(usize, Diagram, CanonicalForm)>, ExploreError>> = frontier
            .par_iter()
            .map(|node| {
                let mut out = Vec::with_capacity(n);
                for k in 0..n {
                    if node.path.last() == Some(&MutationStep(k)) || node.diagram.degree(k) == 0 {
                        continue;
                    }
                    let m = mutate(&node.diagram, k)?;
                    let f = canonical_form(&m)?;
                    out.push((k, m, f));
                }
                Ok(out)
            })
            .collect();
        let mut next = Vec::new();
        for (node, kids) in frontier.iter().zip(children) {
            for (k, m, f) in kids? {
                if seen.contains(&f) {
                    continue;
                }
                seen.insert(f.clone());
                max_w = max_w.max(m.max_weight());
                let mut path = node.path.clone();
                path.push(MutationStep(k));
                if let Control::Stop(t) = visit(&Member { diagram: &m, path: &path, form: &f }) {
                    return Ok(Outcome { summary: summary(&seen, max_w, true), stopped: Some(t) });
                }
                if seen.len() > max_members {
                    return Err(ExploreError::LimitExceeded {
                        partial: Box::new(summary(&seen, max_w, true)),
                        limits: ExplorationLimits { max_members, max_weight: u64::MAX },
                    });
                }
                next.push(Node { form: f, diagram: m, path });
            }
        }
        next.sort_by(|a, b| a.form.cmp(&b.form));
        frontier = next;
    }
    Ok(Outcome { summary: summary(&seen, max_w, false), stopped: None })
}

fn with_limits(e: ExploreError, lim: ExplorationLimits) -> ExploreError {
    match e {
        ExploreError::LimitExceeded { partial, .. } => ExploreError::LimitExceeded { partial, limits: lim },
        e => e,
    }
}

/// Full mutation class of `d` up to isomorphism.
pub fn enumerate_class(d: &Diagram, lim: ExplorationLimits) -> Result<ClassSummary, ExploreError> {
    let out = bfs::<()>(d, lim.max_members, |_| Control::Continue).map_err(|e| with_limits(e, lim))?;
    Ok(out.summary)
}

/// Visits every member of the class with the mutation path that reached it.
pub fn for_each_member(
    d: &Diagram,
    lim: ExplorationLimits,
    mut f: impl FnMut(&Member<'_>),
) -> Result<ClassSummary, ExploreError> {
    let out = bfs::<()>(d, lim.max_members, |m| {
        f(m);
        Control::Continue
    })
    .map_err(|e| with_limits(e, lim))?;
    Ok(out.summary)
}

/// Decides whether `d` is 2-finite: `Infinite` as soon as some class member
/// carries a weight of at least `lim.max_weight`.
pub fn decide_2finite_with(d: &Diagram, lim: ExplorationLimits) -> Result<Verdict, ExploreError> {
    let threshold = lim.max_weight;
    let out = bfs(d, lim.max_members, |m| match m.diagram.heaviest_edge() {
        Some(e) if e.2 >= threshold => Control::Stop((m.path.to_vec(), e)),
        _ => Control::Continue,
    })
    .map_err(|e| with_limits(e, lim))?;
    Ok(match out.stopped {
        Some((witness, offending_edge)) => Verdict::Infinite { witness, offending_edge },
        None => Verdict::Finite(out.summary),
    })
}

pub fn decide_2finite(d: &Diagram) -> Result<Verdict, ExploreError> {
    decide_2finite_with(d, ExplorationLimits::default())
}

/// Whether `d2` is reachable from `d1` by mutations.
pub fn is_mut_equivalent(d1: &Diagram, d2: &Diagram, lim: ExplorationLimits) -> Result<bool, ExploreError> {
    if d1.n() != d2.n() {
        return Ok(false);
    }
    let target = canonical_form(d2)?;
    let out = bfs(d1, lim.max_members, |m| if *m.form == target { Control::Stop(()) } else { Control::Continue })
        .map_err(|e| with_limits(e, lim))?;
    Ok(out.stopped.is_some())
}

/// Searches the class for a member whose underlying weighted graph matches
/// one of `shapes` (and, when flagged, has a non-oriented cycle).
fn find_shape(
    d: &Diagram,
    lim: ExplorationLimits,
    shapes: &[(String, SkeletonForm, bool)],
) -> Result<Option<(String, Vec<MutationStep>)>, ExploreError> {
    if shapes.is_empty() {
        return Ok(None);
    }
    let mut err = None;
    let out = bfs(d, lim.max_members, |m| {
        let sk = match skeleton_form(m.diagram) {
            Ok(s) => s,
            Err(e) => {
                err = Some(e);
                return Control::Stop(None);
            }
        };
        for (label, form, non_oriented) in shapes {
            if *form == sk && (!*non_oriented || m.diagram.has_non_oriented_cycle()) {
                return Control::Stop(Some((label.clone(), m.path.to_vec())));
            }
        }
        Control::Continue
    })
    .map_err(|e| with_limits(e, lim))?;
    if let Some(e) = err {
        return Err(e.into());
    }
    Ok(out.stopped.flatten())
}

/// Dynkin type of a 2-finite connected diagram, with a mutation path to a
/// member of that shape; `None` when `d` is 2-infinite.
pub fn classify_finite_type_with(
    d: &Diagram,
    lim: ExplorationLimits,
) -> Result<Option<(DynkinType, Vec<MutationStep>)>, ExploreError> {
    if !d.is_connected() {
        return Err(ExploreError::Precondition("diagram is not connected".into()));
    }
    if !decide_2finite_with(d, lim)?.is_finite() {
        return Ok(None);
    }
    let types = DynkinType::all_of_rank(d.n());
    let shapes: Vec<(String, SkeletonForm, bool)> =
        types.iter().map(|t| Ok((t.label(), skeleton_form(&t.diagram())?, false))).collect::<Result<_, CanonError>>()?;
    let found = find_shape(d, lim, &shapes)?;
    Ok(found.map(|(label, path)| (types.into_iter().find(|t| t.label() == label).unwrap(), path)))
}

pub fn classify_finite_type(d: &Diagram) -> Result<Option<DynkinType>, ExploreError> {
    Ok(classify_finite_type_with(d, ExplorationLimits::default())?.map(|x| x.0))
}

/// Extended Dynkin representative in the class of `d`, if one exists.
pub fn find_extended_dynkin_rep(
    d: &Diagram,
    lim: ExplorationLimits,
) -> Result<Option<(AffineType, Vec<MutationStep>)>, ExploreError> {
    let types = AffineType::all_with_vertices(d.n());
    let shapes: Vec<(String, SkeletonForm, bool)> = types
        .iter()
        .map(|t| Ok((t.label(), skeleton_form(&t.diagram())?, matches!(t, AffineType::A(_)))))
        .collect::<Result<_, CanonError>>()?;
    let found = find_shape(d, lim, &shapes)?;
    Ok(found.map(|(label, path)| (types.into_iter().find(|t| t.label() == label).unwrap(), path)))
}

/// 2-finiteness with a memo table shared across calls. A finished finite
/// class marks all of its members; infinite answers are keyed by the query.
pub struct Decider {
    limits: ExplorationLimits,
    memo: Mutex<HashMap<CanonicalForm, bool>>,
}

impl Decider {
    pub fn new(limits: ExplorationLimits) -> Self {
        Decider { limits, memo: Mutex::new(HashMap::new()) }
    }

    pub fn limits(&self) -> ExplorationLimits {
        self.limits
    }

    /// Each connected component must be 2-finite.
    pub fn is_2finite(&self, d: &Diagram) -> Result<bool, ExploreError> {
        if d.max_weight() >= self.limits.max_weight {
            return Ok(false);
        }
        let comps = d.connected_components();
        if comps.len() > 1 {
            for c in comps {
                if !self.is_2finite(&d.induced_subdiagram(&c)?)? {
                    return Ok(false);
                }
            }
            return Ok(true);
        }
        if d.n() <= 2 {
            return Ok(true);
        }
        let f = canonical_form(d)?;
        if let Some(&b) = self.memo.lock().unwrap().get(&f) {
            return Ok(b);
        }
        let v = decide_2finite_with(d, self.limits)?;
        let mut memo = self.memo.lock().unwrap();
        match v {
            Verdict::Finite(summary) => {
                for m in summary.members {
                    memo.insert(m, true);
                }
                Ok(true)
            }
            Verdict::Infinite { .. } => {
                memo.insert(f, false);
                Ok(false)
            }
        }
    }

    /// 2-infinite, and every component of every one-vertex deletion 2-finite.
    pub fn is_minimal_2infinite(&self, d: &Diagram) -> Result<bool, ExploreError> {
        if !d.is_connected() || self.is_2finite(d)? {
            return Ok(false);
        }
        for v in 0..d.n() {
            if d.n() > 1 && !self.is_2finite(&d.delete_vertex(v)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl Default for Decider {
    fn default() -> Self {
        Decider::new(ExplorationLimits::default())
    }
}
