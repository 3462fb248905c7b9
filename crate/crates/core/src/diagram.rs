//! The diagram value type: a directed graph with positive integer weights whose
//! cycle weight products are perfect squares.

use std::fmt;
use std::ops::ControlFlow;

use thiserror::Error;

use crate::bm::BmGraph;
use crate::square::SquareClasses;

/// Largest vertex count a [`Diagram`] may have (vertex sets are 64-bit masks).
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("a diagram needs at least one vertex")]
    Empty,
    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooLarge { n: usize, max: usize },
    #[error("vertex {vertex} out of range for a diagram on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("more than one edge between vertices {0} and {1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {tail}->{head} has non-positive weight {weight}")]
    NonPositiveWeight { tail: usize, head: usize, weight: i64 },
    #[error("weight product along cycle {cycle:?} is not a perfect square")]
    CycleNotSquare { cycle: Vec<usize> },
    #[error("edge weight overflowed 64 bits")]
    WeightOverflow,
    #[error("a*b*c = {0} is not a perfect square")]
    InternalNonSquare(u128),
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not skew-symmetrizable")]
    NotSkewSymmetrizable,
    #[error("permutation is not a bijection on {0} vertices")]
    BadPermutation(usize),
}

/// Sorted set of vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new(vs: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = vs.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn full(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet((0..64).filter(|i| mask >> i & 1 == 1).collect())
    }

    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &v| m | 1u64 << v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, DiagramError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(DiagramError::NotSquare);
        }
        Ok(IntMatrix { n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    /// Positive diagonal `d` with `d_i b_ij = -d_j b_ji`, normalized so each
    /// connected block has gcd 1. `None` when no such `d` exists.
    pub fn skew_symmetrizer(&self) -> Option<Vec<u64>> {
        let n = self.n;
        for i in 0..n {
            if self.get(i, i) != 0 {
                return None;
            }
            for j in 0..n {
                let (a, b) = (self.get(i, j), self.get(j, i));
                if (a == 0) != (b == 0) || (a != 0 && a.signum() == b.signum()) {
                    return None;
                }
            }
        }
        // d as reduced fractions, propagated over a BFS forest.
        let mut d: Vec<Option<(u128, u128)>> = vec![None; n];
        let mut out = vec![0u64; n];
        for root in 0..n {
            if d[root].is_some() {
                continue;
            }
            d[root] = Some((1, 1));
            let mut comp = vec![root];
            let mut head = 0;
            while head < comp.len() {
                let i = comp[head];
                head += 1;
                let (pi, qi) = d[i].unwrap();
                for j in 0..n {
                    let bij = self.get(i, j);
                    if bij == 0 {
                        continue;
                    }
                    // d_j = d_i * |b_ij| / |b_ji|
                    let (p, q) = reduce(pi * bij.unsigned_abs() as u128, qi * self.get(j, i).unsigned_abs() as u128);
                    match d[j] {
                        None => {
                            d[j] = Some((p, q));
                            comp.push(j);
                        }
                        Some(existing) if existing != (p, q) => return None,
                        Some(_) => {}
                    }
                }
            }
            let l = comp.iter().fold(1u128, |l, &v| lcm(l, d[v].unwrap().1));
            let vals: Vec<u128> = comp.iter().map(|&v| d[v].unwrap().0 * (l / d[v].unwrap().1)).collect();
            let g = vals.iter().fold(0u128, |g, &x| gcd(g, x));
            for (&v, &x) in comp.iter().zip(&vals) {
                out[v] = u64::try_from(x / g).ok()?;
            }
        }
        Some(out)
    }

    pub fn is_skew_symmetrizable(&self) -> bool {
        self.skew_symmetrizer().is_some()
    }
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: u128, b: u128) -> u128 {
    a / gcd(a, b) * b
}

fn reduce(p: u128, q: u128) -> (u128, u128) {
    let g = gcd(p, q);
    (p / g, q / g)
}

pub fn is_skew_symmetrizable(b: &IntMatrix) -> bool {
    b.is_skew_symmetrizable()
}

/// A validated diagram on vertices `0..n`.
///
/// Stored as a dense matrix: `arrow(i, j)` is the weight of the edge `i -> j`
/// or 0 when absent. At most one of `arrow(i, j)`, `arrow(j, i)` is nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    n: usize,
    w: Vec<u64>,
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Diagram(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl Diagram {
    /// Validates and builds a diagram from `(tail, head, weight)` triples.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize, i64)>) -> Result<Self, DiagramError> {
        let d = Self::unvalidated(n, edges)?;
        d.check_square_cycles()?;
        Ok(d)
    }

    /// Structural checks only; the square-cycle condition is not verified.
    pub(crate) fn unvalidated(n: usize, edges: impl IntoIterator<Item = (usize, usize, i64)>) -> Result<Self, DiagramError> {
        if n == 0 {
            return Err(DiagramError::Empty);
        }
        if n > MAX_VERTICES {
            return Err(DiagramError::TooLarge { n, max: MAX_VERTICES });
        }
        let mut d = Diagram { n, w: vec![0; n * n] };
        for (t, h, wt) in edges {
            for v in [t, h] {
                if v >= n {
                    return Err(DiagramError::OutOfRange { vertex: v, n });
                }
            }
            if t == h {
                return Err(DiagramError::SelfLoop(t));
            }
            if wt <= 0 {
                return Err(DiagramError::NonPositiveWeight { tail: t, head: h, weight: wt });
            }
            if d.weight_between(t, h) != 0 {
                return Err(DiagramError::DuplicateEdge(t.min(h), t.max(h)));
            }
            d.w[t * n + h] = wt as u64;
        }
        Ok(d)
    }

    /// Builds from a raw `n*n` arrow matrix that is already known to be valid.
    pub(crate) fn from_raw(n: usize, w: Vec<u64>) -> Self {
        debug_assert_eq!(w.len(), n * n);
        Diagram { n, w }
    }

    pub(crate) fn raw(&self) -> &[u64] {
        &self.w
    }

    pub(crate) fn set_arrow(&mut self, i: usize, j: usize, weight: u64) {
        self.w[i * self.n + j] = weight;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Weight of the edge `i -> j`, 0 if there is none.
    pub fn arrow(&self, i: usize, j: usize) -> u64 {
        self.w[i * self.n + j]
    }

    /// Weight of the edge between `i` and `j` in either direction.
    pub fn weight_between(&self, i: usize, j: usize) -> u64 {
        self.arrow(i, j) + self.arrow(j, i)
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.weight_between(i, j) != 0
    }

    /// Edges as `(tail, head, weight)` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        let n = self.n;
        self.w.iter().enumerate().filter(|(_, &w)| w != 0).map(move |(idx, &w)| (idx / n, idx % n, w))
    }

    pub fn edge_count(&self) -> usize {
        self.w.iter().filter(|&&w| w != 0).count()
    }

    pub fn max_weight(&self) -> u64 {
        self.w.iter().copied().max().unwrap_or(0)
    }

    /// The heaviest edge (first in edge order among ties).
    pub fn heaviest_edge(&self) -> Option<(usize, usize, u64)> {
        self.edges().fold(None, |best, e| match best {
            Some((_, _, w)) if w >= e.2 => best,
            _ => Some(e),
        })
    }

    pub fn is_simply_laced(&self) -> bool {
        self.w.iter().all(|&w| w <= 1)
    }

    /// Neighbor bitmask of each vertex in the underlying undirected graph.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        (0..self.n)
            .map(|i| (0..self.n).filter(|&j| self.adjacent(i, j)).fold(0u64, |m, j| m | 1 << j))
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&j| self.adjacent(v, j)).count()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Components ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        components_of(&self.adjacency_masks(), full_mask(self.n)).into_iter().map(VertexSet::from_mask).collect()
    }

    pub fn induced_subdiagram(&self, s: &VertexSet) -> Result<Diagram, DiagramError> {
        if let Some(&v) = s.as_slice().iter().find(|&&v| v >= self.n) {
            return Err(DiagramError::OutOfRange { vertex: v, n: self.n });
        }
        if s.is_empty() {
            return Err(DiagramError::Empty);
        }
        let vs = s.as_slice();
        let m = vs.len();
        let mut w = vec![0; m * m];
        for (a, &i) in vs.iter().enumerate() {
            for (b, &j) in vs.iter().enumerate() {
                w[a * m + b] = self.arrow(i, j);
            }
        }
        Ok(Diagram { n: m, w })
    }

    /// Diagram with the listed vertex removed, remaining vertices reindexed.
    pub fn delete_vertex(&self, v: usize) -> Result<Diagram, DiagramError> {
        self.induced_subdiagram(&VertexSet::new((0..self.n).filter(|&u| u != v)))
    }

    /// Relabels vertex `i` as `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Diagram, DiagramError> {
        let n = self.n;
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(DiagramError::BadPermutation(n));
        }
        let mut w = vec![0; n * n];
        for (i, j, wt) in self.edges() {
            w[perm[i] * n + perm[j]] = wt;
        }
        Ok(Diagram { n, w })
    }

    /// Reverses every edge.
    pub fn opposite(&self) -> Diagram {
        let n = self.n;
        let mut w = vec![0; n * n];
        for (i, j, wt) in self.edges() {
            w[j * n + i] = wt;
        }
        Diagram { n, w }
    }

    /// Adds a new last vertex with the given `(neighbor, weight, outgoing)` edges,
    /// where `outgoing` means the edge points from the new vertex.
    pub fn extend(&self, edges: &[(usize, u64, bool)]) -> Result<Diagram, DiagramError> {
        let n = self.n;
        let mut list: Vec<(usize, usize, i64)> = self.edges().map(|(t, h, w)| (t, h, w as i64)).collect();
        for &(v, wt, out) in edges {
            let wt = i64::try_from(wt).map_err(|_| DiagramError::WeightOverflow)?;
            list.push(if out { (n, v, wt) } else { (v, n, wt) });
        }
        Diagram::new(n + 1, list)
    }

    /// Checks the square-cycle condition on a fundamental-cycle basis.
    pub fn check_square_cycles(&self) -> Result<(), DiagramError> {
        let edges: Vec<(usize, usize, u64)> = self.edges().collect();
        if edges.iter().all(|e| is_perfect_square(e.2 as u128)) {
            return Ok(());
        }
        let classes = SquareClasses::new(edges.iter().map(|e| e.2));
        let n = self.n;
        let adj = self.adjacency_masks();
        let mut class: Vec<Option<Vec<u64>>> = vec![None; n];
        let mut parent = vec![usize::MAX; n];
        let mut depth = vec![0usize; n];
        for root in 0..n {
            if class[root].is_some() {
                continue;
            }
            class[root] = Some(classes.zero());
            let mut queue = vec![root];
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                let mut nb = adj[u];
                while nb != 0 {
                    let v = nb.trailing_zeros() as usize;
                    nb &= nb - 1;
                    let wv = classes.vector(self.weight_between(u, v));
                    let expect = xor(class[u].as_ref().unwrap(), &wv);
                    match &class[v] {
                        None => {
                            class[v] = Some(expect);
                            parent[v] = u;
                            depth[v] = depth[u] + 1;
                            queue.push(v);
                        }
                        Some(c) if *c != expect => {
                            return Err(DiagramError::CycleNotSquare { cycle: tree_cycle(&parent, &depth, u, v) });
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Ok(())
    }

    /// Undirected graph keeping exactly the edges of odd weight.
    pub fn odd_weight_skeleton(&self) -> BmGraph {
        let n = self.n;
        let mut rows = vec![0u64; n];
        for (i, j, w) in self.edges() {
            if w % 2 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
        BmGraph::from_rows(n, rows).expect("skeleton rows are symmetric")
    }

    /// Calls `f` on every chordless cycle (length >= 3) of the underlying graph,
    /// each reported once as a vertex sequence starting at its smallest vertex.
    pub fn for_each_chordless_cycle<B>(&self, f: impl FnMut(&[usize]) -> ControlFlow<B>) -> Option<B> {
        chordless_cycles(&self.adjacency_masks(), f)
    }

    pub fn chordless_cycles(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.for_each_chordless_cycle::<()>(|c| {
            out.push(c.to_vec());
            ControlFlow::Continue(())
        });
        out
    }

    /// True when the vertex cycle is cyclically oriented in one direction.
    pub fn is_oriented_cycle(&self, cycle: &[usize]) -> bool {
        let k = cycle.len();
        let fwd = (0..k).all(|i| self.arrow(cycle[i], cycle[(i + 1) % k]) != 0);
        let bwd = (0..k).all(|i| self.arrow(cycle[(i + 1) % k], cycle[i]) != 0);
        fwd || bwd
    }

    /// True iff some chordless cycle is not cyclically oriented.
    pub fn has_non_oriented_cycle(&self) -> bool {
        self.for_each_chordless_cycle(|c| if self.is_oriented_cycle(c) { ControlFlow::Continue(()) } else { ControlFlow::Break(()) })
            .is_some()
    }
}

pub fn has_non_oriented_cycle(d: &Diagram) -> bool {
    d.has_non_oriented_cycle()
}

pub fn odd_weight_skeleton(d: &Diagram) -> BmGraph {
    d.odd_weight_skeleton()
}

pub fn connected_components(d: &Diagram) -> Vec<VertexSet> {
    d.connected_components()
}

pub fn induced_subdiagram(d: &Diagram, s: &VertexSet) -> Result<Diagram, DiagramError> {
    d.induced_subdiagram(s)
}

/// Diagram of a skew-symmetrizable matrix: `i -> j` iff `b_ij > 0`, weight `|b_ij b_ji|`.
pub fn diagram_of_matrix(b: &IntMatrix) -> Result<Diagram, DiagramError> {
    if !b.is_skew_symmetrizable() {
        return Err(DiagramError::NotSkewSymmetrizable);
    }
    let n = b.n();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if b.get(i, j) > 0 {
                let w = b.get(i, j).checked_mul(-b.get(j, i)).ok_or(DiagramError::WeightOverflow)?;
                edges.push((i, j, w));
            }
        }
    }
    Diagram::new(n, edges)
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Connected components (as masks) of the graph restricted to `within`.
pub(crate) fn components_of(adj: &[u64], within: u64) -> Vec<u64> {
    let mut left = within;
    let mut out = Vec::new();
    while left != 0 {
        let start = left & left.wrapping_neg();
        let mut comp = start;
        let mut frontier = start;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = adj[v] & within & !comp;
            comp |= new;
            frontier |= new;
        }
        left &= !comp;
        out.push(comp);
    }
    out
}

pub(crate) fn is_connected_mask(adj: &[u64], within: u64) -> bool {
    within != 0 && components_of(adj, within).len() == 1
}

pub(crate) fn chordless_cycles<B>(adj: &[u64], mut f: impl FnMut(&[usize]) -> ControlFlow<B>) -> Option<B> {
    let n = adj.len();
    let mut path = Vec::with_capacity(n);
    for s in 0..n {
        let allowed = !((1u64 << s) | ((1u64 << s) - 1));
        let mut nb = adj[s] & allowed;
        while nb != 0 {
            let v1 = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            path.clear();
            path.push(s);
            path.push(v1);
            // `blocked` = vertices adjacent to an interior path vertex other than the tail.
            if let ControlFlow::Break(b) = extend_cycle(adj, allowed, &mut path, 0, &mut f) {
                return Some(b);
            }
        }
    }
    None
}

fn extend_cycle<B>(
    adj: &[u64],
    allowed: u64,
    path: &mut Vec<usize>,
    blocked: u64,
    f: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let s = path[0];
    let v1 = path[1];
    let tail = *path.last().unwrap();
    let on_path = path.iter().fold(0u64, |m, &v| m | 1 << v);
    let mut cand = adj[tail] & allowed & !on_path & !blocked;
    while cand != 0 {
        let x = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        if adj[x] >> s & 1 == 1 {
            // closes a chordless cycle; report each cycle once (v1 < x)
            if path.len() >= 2 && v1 < x {
                path.push(x);
                let r = f(path);
                path.pop();
                r?;
            }
            continue;
        }
        let new_blocked = if path.len() >= 2 { blocked | adj[tail] } else { blocked };
        path.push(x);
        let r = extend_cycle(adj, allowed, path, new_blocked & !(1 << x), f);
        path.pop();
        r?;
    }
    ControlFlow::Continue(())
}

fn xor(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x ^ y).collect()
}

fn tree_cycle(parent: &[usize], depth: &[usize], mut u: usize, mut v: usize) -> Vec<usize> {
    let mut left = vec![u];
    let mut right = vec![v];
    while depth[u] > depth[v] {
        u = parent[u];
        left.push(u);
    }
    while depth[v] > depth[u] {
        v = parent[v];
        right.push(v);
    }
    while u != v {
        u = parent[u];
        v = parent[v];
        left.push(u);
        right.push(v);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// Exact integer square root, `None` unless `x` is a perfect square.
pub fn exact_isqrt(x: u128) -> Option<u128> {
    let r = isqrt(x);
    (r * r == x).then_some(r)
}

pub fn is_perfect_square(x: u128) -> bool {
    exact_isqrt(x).is_some()
}

pub fn isqrt(x: u128) -> u128 {
    if x < 2 {
        return x;
    }
    let mut r = (x as f64).sqrt() as u128;
    // Newton correction around the float estimate
    loop {
        let next = (r + x / r) / 2;
        if next >= r {
            break;
        }
        r = next;
    }
    while r.checked_mul(r).is_none_or(|sq| sq > x) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= x) {
        r += 1;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri(w: [i64; 3]) -> Result<Diagram, DiagramError> {
        Diagram::new(3, [(0, 1, w[0]), (1, 2, w[1]), (2, 0, w[2])])
    }

    #[test]
    fn triangle_products() {
        assert!(tri([1, 2, 2]).is_ok());
        assert!(matches!(tri([1, 1, 2]), Err(DiagramError::CycleNotSquare { .. })));
        assert!(tri([3, 3, 1]).is_ok());
        assert!(Diagram::new(4, [(0, 1, 7), (1, 2, 5), (3, 1, 6)]).is_ok());
    }

    #[test]
    fn structural_errors() {
        assert_eq!(Diagram::new(0, []), Err(DiagramError::Empty));
        assert_eq!(Diagram::new(2, [(0, 0, 1)]), Err(DiagramError::SelfLoop(0)));
        assert_eq!(Diagram::new(2, [(0, 1, 1), (1, 0, 1)]), Err(DiagramError::DuplicateEdge(0, 1)));
        assert!(matches!(Diagram::new(2, [(0, 1, 0)]), Err(DiagramError::NonPositiveWeight { .. })));
        assert!(matches!(Diagram::new(2, [(0, 2, 1)]), Err(DiagramError::OutOfRange { .. })));
    }

    #[test]
    fn reported_cycle_is_a_cycle() {
        let d = Diagram::unvalidated(5, [(0, 1, 2), (1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 0, 1)]).unwrap();
        let Err(DiagramError::CycleNotSquare { cycle }) = d.check_square_cycles() else { panic!() };
        assert_eq!(cycle.len(), 5);
        for i in 0..cycle.len() {
            assert!(d.adjacent(cycle[i], cycle[(i + 1) % cycle.len()]));
        }
    }

    #[test]
    fn subdiagrams() {
        let c4 = Diagram::new(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)]).unwrap();
        assert_eq!(c4.induced_subdiagram(&VertexSet::full(4)).unwrap(), c4);
        let p = c4.induced_subdiagram(&VertexSet::new([0, 1, 2])).unwrap();
        assert_eq!(p, Diagram::new(3, [(0, 1, 1), (1, 2, 1)]).unwrap());
        let i24 = Diagram::new(2, [(0, 1, 4)]).unwrap();
        assert_eq!(i24.induced_subdiagram(&VertexSet::new([0])).unwrap(), Diagram::new(1, []).unwrap());
        assert!(c4.induced_subdiagram(&VertexSet::new([7])).is_err());
    }

    #[test]
    fn non_oriented_cycles() {
        assert!(!tri([1, 1, 1]).unwrap().has_non_oriented_cycle());
        let c4 = Diagram::new(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]).unwrap();
        assert!(c4.has_non_oriented_cycle());
        let tree = Diagram::new(4, [(0, 1, 1), (2, 1, 1), (1, 3, 1)]).unwrap();
        assert!(!tree.has_non_oriented_cycle());
        // oriented outer square with a chord: the two triangles decide.
        let sq = Diagram::new(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1), (2, 0, 1)]).unwrap();
        assert_eq!(sq.chordless_cycles().len(), 2);
        assert!(sq.has_non_oriented_cycle());
    }

    #[test]
    fn chordless_cycle_counts() {
        // K4 has 4 triangles and no chordless 4-cycles.
        let k4 = Diagram::new(4, [(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1)]).unwrap();
        assert_eq!(k4.chordless_cycles().len(), 4);
        // K_{2,3}: three chordless 4-cycles.
        let k23 = Diagram::unvalidated(5, [(0, 2, 1), (0, 3, 1), (0, 4, 1), (1, 2, 1), (1, 3, 1), (1, 4, 1)]).unwrap();
        assert_eq!(k23.chordless_cycles().len(), 3);
    }

    #[test]
    fn matrices() {
        let m = |r: Vec<Vec<i64>>| IntMatrix::new(r).unwrap();
        let d = diagram_of_matrix(&m(vec![vec![0, 1], vec![-1, 0]])).unwrap();
        assert_eq!(d.edges().collect::<Vec<_>>(), vec![(0, 1, 1)]);
        let d = diagram_of_matrix(&m(vec![vec![0, 1], vec![-2, 0]])).unwrap();
        assert_eq!(d.edges().collect::<Vec<_>>(), vec![(0, 1, 2)]);
        assert_eq!(diagram_of_matrix(&m(vec![vec![0, 1], vec![1, 0]])), Err(DiagramError::NotSkewSymmetrizable));
        assert_eq!(m(vec![vec![0, 1], vec![-2, 0]]).skew_symmetrizer(), Some(vec![2, 1]));
        assert!(!m(vec![vec![0, 1], vec![0, 0]]).is_skew_symmetrizable());
        assert!(m(vec![vec![0, 3, -1], vec![-3, 0, 2], vec![1, -2, 0]]).is_skew_symmetrizable());
        // inconsistent ratios around a triangle
        assert!(!m(vec![vec![0, 1, -1], vec![-2, 0, 1], vec![1, -1, 0]]).is_skew_symmetrizable());
        assert_eq!(IntMatrix::new(vec![vec![0, 1]]), Err(DiagramError::NotSquare));
    }

    #[test]
    fn skeleton_parity() {
        let c = Diagram::new(4, [(0, 1, 2), (1, 2, 1), (2, 3, 2)]).unwrap();
        let g = c.odd_weight_skeleton();
        assert_eq!(g.edge_list(), vec![(1, 2)]);
        let i24 = Diagram::new(2, [(0, 1, 4)]).unwrap();
        assert!(i24.odd_weight_skeleton().edge_list().is_empty());
    }

    #[test]
    fn components() {
        let d = Diagram::new(4, [(0, 2, 1)]).unwrap();
        assert_eq!(d.connected_components(), vec![VertexSet::new([0, 2]), VertexSet::new([1]), VertexSet::new([3])]);
    }

    #[test]
    fn isqrt_edges() {
        assert_eq!(isqrt(u128::MAX), u64::MAX as u128);
        assert_eq!(exact_isqrt(1 << 100), Some(1 << 50));
        assert_eq!(exact_isqrt(99), None);
    }
}
