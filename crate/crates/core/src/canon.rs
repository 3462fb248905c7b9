//! Canonical forms for diagrams and undirected weighted graphs.
//!
//! Individualization-refinement: colour refinement by neighbour multisets, then
//! backtracking over the first non-singleton cell. Each leaf is a labeling; the
//! lexicographically smallest relabeled edge list wins. Branching on a vertex
//! is skipped when it is a twin (same neighbourhood) of one already tried.

use std::fmt;

use thiserror::Error;

use crate::diagram::{Diagram, DiagramError};

pub const DEFAULT_SIZE_LIMIT: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error("{n} vertices exceeds the canonical-form size limit {limit}")]
    SizeLimit { n: usize, limit: usize },
    #[error("malformed canonical form: {0}")]
    Malformed(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Byte encoding of a canonically relabeled diagram: `n`, then for each edge in
/// sorted order `tail`, `head`, LEB128 weight.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

/// Same encoding for an undirected weighted graph (edges listed with `tail < head`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkeletonForm(Vec<u8>);

macro_rules! form_common {
    ($t:ident) => {
        impl $t {
            pub fn as_bytes(&self) -> &[u8] {
                &self.0
            }

            pub fn to_hex(&self) -> String {
                hex::encode(&self.0)
            }

            pub fn n(&self) -> usize {
                self.0[0] as usize
            }

            pub fn edges(&self) -> Result<Vec<(usize, usize, u64)>, CanonError> {
                decode(&self.0)
            }
        }

        impl fmt::Debug for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}({})", stringify!($t), self.to_hex())
            }
        }

        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.to_hex())
            }
        }
    };
}

form_common!(CanonicalForm);
form_common!(SkeletonForm);

impl CanonicalForm {
    /// Parses and validates bytes; the result is re-canonicalized to confirm it.
    pub fn from_bytes(bytes: Vec<u8>) -> Result<Self, CanonError> {
        let edges = decode(&bytes)?;
        let d = Diagram::new(bytes[0] as usize, edges.iter().map(|&(t, h, w)| (t, h, w as i64)))?;
        let f = canonical_form_with_limit(&d, usize::MAX)?;
        if f.0 != bytes {
            return Err(CanonError::Malformed("bytes are not in canonical form".into()));
        }
        Ok(f)
    }

    pub fn from_hex(s: &str) -> Result<Self, CanonError> {
        let bytes = hex::decode(s.trim()).map_err(|e| CanonError::Malformed(e.to_string()))?;
        Self::from_bytes(bytes)
    }

    /// The canonically labeled diagram.
    pub fn to_diagram(&self) -> Diagram {
        let edges = decode(&self.0).expect("forms are built from valid diagrams");
        let n = self.n();
        let mut w = vec![0; n * n];
        for (t, h, wt) in edges {
            w[t * n + h] = wt;
        }
        Diagram::from_raw(n, w)
    }
}

impl SkeletonForm {
    pub fn from_hex(s: &str) -> Result<Self, CanonError> {
        let bytes = hex::decode(s.trim()).map_err(|e| CanonError::Malformed(e.to_string()))?;
        decode(&bytes)?;
        Ok(SkeletonForm(bytes))
    }
}

fn encode(n: usize, edges: &[(u8, u8, u64)]) -> Vec<u8> {
    let mut out = Vec::with_capacity(1 + edges.len() * 3);
    out.push(n as u8);
    for &(t, h, mut w) in edges {
        out.push(t);
        out.push(h);
        loop {
            let byte = (w & 0x7f) as u8;
            w >>= 7;
            if w == 0 {
                out.push(byte);
                break;
            }
            out.push(byte | 0x80);
        }
    }
    out
}

fn decode(bytes: &[u8]) -> Result<Vec<(usize, usize, u64)>, CanonError> {
    let bad = |m: &str| CanonError::Malformed(m.to_string());
    let (&n, mut rest) = bytes.split_first().ok_or_else(|| bad("empty"))?;
    if n == 0 {
        return Err(bad("zero vertices"));
    }
    let mut out = Vec::new();
    while !rest.is_empty() {
        if rest.len() < 3 {
            return Err(bad("truncated edge"));
        }
        let (t, h) = (rest[0] as usize, rest[1] as usize);
        if t >= n as usize || h >= n as usize {
            return Err(bad("vertex out of range"));
        }
        rest = &rest[2..];
        let mut w = 0u64;
        let mut shift = 0;
        loop {
            let (&b, r) = rest.split_first().ok_or_else(|| bad("truncated weight"))?;
            rest = r;
            if shift > 63 {
                return Err(bad("weight too long"));
            }
            w |= ((b & 0x7f) as u64) << shift;
            shift += 7;
            if b & 0x80 == 0 {
                break;
            }
        }
        if w == 0 {
            return Err(bad("zero weight"));
        }
        out.push((t, h, w));
    }
    Ok(out)
}

/// Canonical labeling of a weighted directed graph given as an `n*n` matrix.
/// Returns `perm` with `perm[old] = new`, together with the relabeled edge list.
pub(crate) fn canonical_labeling_raw(n: usize, m: &[u64]) -> (Vec<usize>, Vec<(u8, u8, u64)>) {
    let mut engine = Engine::new(n, m);
    let colors = vec![0u32; n];
    engine.search(colors);
    let (key, perm) = engine.best.expect("search visits at least one leaf");
    (perm.into_iter().map(|c| c as usize).collect(), key)
}

struct Engine<'a> {
    n: usize,
    m: &'a [u64],
    twin_rep: Vec<usize>,
    best: Option<(Vec<(u8, u8, u64)>, Vec<u32>)>,
}

impl<'a> Engine<'a> {
    fn new(n: usize, m: &'a [u64]) -> Self {
        let twin = |u: usize, v: usize| {
            (0..n).all(|x| x == u || x == v || (m[u * n + x] == m[v * n + x] && m[x * n + u] == m[x * n + v]))
                && m[u * n + v] == m[v * n + u]
        };
        let twin_rep = (0..n).map(|v| (0..v).find(|&u| twin(u, v)).unwrap_or(v)).collect();
        Engine { n, m, twin_rep, best: None }
    }

    /// Equitable refinement of an ordered colouring (colours are ranks).
    fn refine(&self, colors: &mut [u32]) {
        let n = self.n;
        let mut count = distinct(colors);
        loop {
            let sigs: Vec<(u32, Vec<(u32, u64, u64)>)> = (0..n)
                .map(|v| {
                    let mut s: Vec<(u32, u64, u64)> = (0..n)
                        .filter(|&x| x != v && (self.m[v * n + x] != 0 || self.m[x * n + v] != 0))
                        .map(|x| (colors[x], self.m[v * n + x], self.m[x * n + v]))
                        .collect();
                    s.sort_unstable();
                    (colors[v], s)
                })
                .collect();
            let mut sorted: Vec<&(u32, Vec<(u32, u64, u64)>)> = sigs.iter().collect();
            sorted.sort_unstable();
            sorted.dedup();
            for v in 0..n {
                colors[v] = sorted.binary_search(&&sigs[v]).unwrap() as u32;
            }
            let new_count = sorted.len();
            if new_count == count {
                return;
            }
            count = new_count;
        }
    }

    fn search(&mut self, mut colors: Vec<u32>) {
        self.refine(&mut colors);
        let n = self.n;
        let k = distinct(&colors);
        if k == n {
            let mut key: Vec<(u8, u8, u64)> = Vec::new();
            for i in 0..n {
                for j in 0..n {
                    let w = self.m[i * n + j];
                    if w != 0 {
                        key.push((colors[i] as u8, colors[j] as u8, w));
                    }
                }
            }
            key.sort_unstable();
            if self.best.as_ref().is_none_or(|(b, _)| key < *b) {
                self.best = Some((key, colors));
            }
            return;
        }
        // first non-singleton cell
        let mut sizes = vec![0usize; k];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let cell = sizes.iter().position(|&s| s > 1).unwrap() as u32;
        let mut tried: Vec<usize> = Vec::new();
        for v in 0..n {
            if colors[v] != cell || tried.contains(&self.twin_rep[v]) {
                continue;
            }
            tried.push(self.twin_rep[v]);
            let child: Vec<u32> = colors
                .iter()
                .enumerate()
                .map(|(u, &c)| if c > cell || (c == cell && u != v) { c + 1 } else { c })
                .collect();
            self.search(child);
        }
    }
}

fn distinct(colors: &[u32]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

pub fn canonical_form(d: &Diagram) -> Result<CanonicalForm, CanonError> {
    canonical_form_with_limit(d, DEFAULT_SIZE_LIMIT)
}

pub fn canonical_form_with_limit(d: &Diagram, limit: usize) -> Result<CanonicalForm, CanonError> {
    let n = d.n();
    if n > limit {
        return Err(CanonError::SizeLimit { n, limit });
    }
    let (_, key) = canonical_labeling_raw(n, d.raw());
    Ok(CanonicalForm(encode(n, &key)))
}

/// `perm[old] = new` such that `d.relabel(&perm)` is the canonical diagram.
pub fn canonical_labeling(d: &Diagram) -> Result<Vec<usize>, CanonError> {
    let n = d.n();
    if n > DEFAULT_SIZE_LIMIT {
        return Err(CanonError::SizeLimit { n, limit: DEFAULT_SIZE_LIMIT });
    }
    Ok(canonical_labeling_raw(n, d.raw()).0)
}

pub fn are_isomorphic(d1: &Diagram, d2: &Diagram) -> Result<bool, CanonError> {
    if d1.n() != d2.n() || d1.edge_count() != d2.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(d1)? == canonical_form(d2)?)
}

/// Canonical form of an undirected weighted graph given as a symmetric matrix.
pub(crate) fn skeleton_form_raw(n: usize, sym: &[u64]) -> SkeletonForm {
    let (_, key) = canonical_labeling_raw(n, sym);
    let half: Vec<(u8, u8, u64)> = key.into_iter().filter(|e| e.0 < e.1).collect();
    SkeletonForm(encode(n, &half))
}

/// Canonical form of the underlying weighted undirected graph of `d`.
pub fn skeleton_form(d: &Diagram) -> Result<SkeletonForm, CanonError> {
    let n = d.n();
    if n > DEFAULT_SIZE_LIMIT * 4 {
        return Err(CanonError::SizeLimit { n, limit: DEFAULT_SIZE_LIMIT * 4 });
    }
    let sym: Vec<u64> = (0..n * n).map(|idx| d.weight_between(idx / n, idx % n)).collect();
    Ok(skeleton_form_raw(n, &sym))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn dg(n: usize, e: &[(usize, usize, i64)]) -> Diagram {
        Diagram::new(n, e.iter().copied()).unwrap()
    }

    fn brute_min(d: &Diagram) -> Vec<(usize, usize, u64)> {
        let n = d.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best: Option<Vec<(usize, usize, u64)>> = None;
        permute_all(&mut perm, 0, &mut |p| {
            let mut e: Vec<_> = d.relabel(p).unwrap().edges().collect();
            e.sort_unstable();
            if best.as_ref().is_none_or(|b| e < *b) {
                best = Some(e);
            }
        });
        best.unwrap()
    }

    fn permute_all(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permute_all(p, k + 1, f);
            p.swap(k, i);
        }
    }

    fn random_diagram(rng: &mut ChaCha8Rng, n: usize) -> Diagram {
        // square-free vertex classes keep every cycle square
        let classes: Vec<i64> = (0..n).map(|_| [1, 2, 3][rng.gen_range(0..3)]).collect();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(0.45) {
                    let c = classes[i] * classes[j];
                    let sf = if c == 4 || c == 9 { 1 } else { c };
                    let w = sf * [1, 1, 1, 4][rng.gen_range(0..4)];
                    edges.push(if rng.gen_bool(0.5) { (i, j, w) } else { (j, i, w) });
                }
            }
        }
        Diagram::new(n, edges).unwrap()
    }

    #[test]
    fn simple_examples() {
        let p = dg(3, &[(0, 1, 1), (1, 2, 1)]);
        let q = dg(3, &[(2, 1, 1), (1, 0, 1)]);
        assert_eq!(canonical_form(&p).unwrap(), canonical_form(&q).unwrap());
        let src = dg(3, &[(1, 0, 1), (1, 2, 1)]);
        let snk = dg(3, &[(0, 1, 1), (2, 1, 1)]);
        assert!(!are_isomorphic(&src, &snk).unwrap());
        assert!(!are_isomorphic(&dg(2, &[(0, 1, 2)]), &dg(2, &[(0, 1, 3)])).unwrap());
    }

    #[test]
    fn roundtrip_bytes() {
        let d = dg(4, &[(0, 1, 300), (2, 1, 3), (3, 2, 300)]);
        let f = canonical_form(&d).unwrap();
        assert_eq!(CanonicalForm::from_hex(&f.to_hex()).unwrap(), f);
        assert!(are_isomorphic(&f.to_diagram(), &d).unwrap());
        assert!(CanonicalForm::from_hex("0300").is_err());
    }

    #[test]
    fn agrees_with_brute_force_minimum() {
        // The two keys must induce the same equivalence relation on diagrams.
        use std::collections::HashMap;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut by_form: HashMap<CanonicalForm, Vec<(usize, usize, u64)>> = HashMap::new();
        let mut by_brute: HashMap<Vec<(usize, usize, u64)>, CanonicalForm> = HashMap::new();
        for _ in 0..3000 {
            let n = rng.gen_range(1..=6);
            let d = random_diagram(&mut rng, n);
            let f = canonical_form(&d).unwrap();
            let mut b = brute_min(&d);
            b.insert(0, (n, n, 0));
            assert_eq!(by_form.entry(f.clone()).or_insert_with(|| b.clone()), &b);
            assert_eq!(by_brute.entry(b).or_insert_with(|| f.clone()), &f);
        }
        assert!(by_form.len() < 3000, "sample should contain isomorphic repeats");
    }

    #[test]
    fn invariant_under_random_relabeling() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..1000 {
            let n = rng.gen_range(1..=10);
            let d = random_diagram(&mut rng, n);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let e = d.relabel(&perm).unwrap();
            assert_eq!(canonical_form(&d).unwrap(), canonical_form(&e).unwrap());
        }
    }

    #[test]
    fn size_limit() {
        let d = Diagram::new(17, []).unwrap();
        assert!(matches!(canonical_form(&d), Err(CanonError::SizeLimit { .. })));
    }
}
