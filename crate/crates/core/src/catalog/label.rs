//! Labels of the form `X(cycles;t;branches;degrees)`.
//!
//! * cycles: chordless cycle lengths as `length^count`, longest first, down to 3;
//! * t: triangles sharing no edge with another chordless cycle;
//! * branches: maximal chains of vertices off every cycle with degree at most 2,
//!   as `length^count`, or `0`;
//! * degrees: vertices of degree at least 3, as `degree^count`.
//!
//! An entry shows the shortest prefix of these parts that separates it from
//! the rest of its group (the degree part is cut item by item); full
//! collisions get `_1`, `_2`, ... suffixes.

use std::collections::{BTreeMap, HashMap};

use crate::diagram::{components_of, Diagram};

fn counts(mut xs: Vec<usize>) -> Vec<(usize, usize)> {
    xs.sort_unstable_by(|a, b| b.cmp(a));
    let mut counts: Vec<(usize, usize)> = Vec::new();
    for x in xs {
        match counts.last_mut() {
            Some((v, c)) if *v == x => *c += 1,
            _ => counts.push((x, 1)),
        }
    }
    counts
}

fn items(counts: &[(usize, usize)]) -> Vec<String> {
    counts.iter().map(|(v, c)| format!("{v}^{c}")).collect()
}

/// Label parts of `d` split into items: cycle lengths from the longest down
/// to 3 (zero counts included), the lone-triangle count, branch lengths
/// (`0` when there are none) and degrees.
fn part_items(d: &Diagram) -> [Vec<String>; 4] {
    let n = d.n();
    let cycles = d.chordless_cycles();
    let masks: Vec<u64> = cycles.iter().map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v)).collect();
    // two chordless cycles share an edge exactly when they share two vertices
    let lone_triangles = cycles
        .iter()
        .enumerate()
        .filter(|(i, c)| {
            c.len() == 3 && masks.iter().enumerate().all(|(j, &m)| j == *i || (m & masks[*i]).count_ones() < 2)
        })
        .count();
    let on_cycle = masks.iter().fold(0u64, |a, &m| a | m);
    let adj = d.adjacency_masks();
    let chain_vertices =
        (0..n).filter(|&v| on_cycle >> v & 1 == 0 && d.degree(v) <= 2).fold(0u64, |m, v| m | 1 << v);
    let branches: Vec<usize> = components_of(&adj, chain_vertices).iter().map(|c| c.count_ones() as usize).collect();
    let degrees: Vec<usize> = (0..n).map(|v| d.degree(v)).filter(|&k| k >= 3).collect();
    let lengths = counts(cycles.iter().map(Vec::len).collect());
    let cycle_items = match lengths.first() {
        Some(&(longest, _)) => (3..=longest)
            .rev()
            .map(|l| format!("{l}^{}", lengths.iter().find(|x| x.0 == l).map_or(0, |x| x.1)))
            .collect(),
        None => Vec::new(),
    };
    let branch_items = if branches.is_empty() { vec!["0".to_string()] } else { items(&counts(branches)) };
    [cycle_items, vec![lone_triangles.to_string()], branch_items, items(&counts(degrees))]
}

/// The four label parts of `d`.
pub fn shape_parts(d: &Diagram) -> [String; 4] {
    part_items(d).map(|p| p.join(","))
}

fn render(x: &str, parts: &[String]) -> String {
    if parts.iter().all(|p| p.is_empty()) {
        x.to_string()
    } else {
        format!("{x}({})", parts.join(";"))
    }
}

/// Visible prefix of `p` after `k` steps: whole parts first, then the degree
/// part one item at a time.
fn prefix(p: &[Vec<String>; 4], k: usize) -> Vec<String> {
    let mut out: Vec<String> = p.iter().take(k.min(3)).map(|q| q.join(",")).collect();
    if k > 3 {
        out.push(p[3][..(k - 3).min(p[3].len())].join(","));
    }
    out
}

/// Labels for a group of diagrams sharing the extended type `x`, in input order.
pub fn assign_labels(x: &str, ds: &[Diagram]) -> Vec<String> {
    let parts: Vec<[Vec<String>; 4]> = ds.iter().map(part_items).collect();
    let steps = 3 + parts.iter().map(|p| p[3].len()).max().unwrap_or(0);
    let mut labels: Vec<String> = parts
        .iter()
        .map(|p| {
            let k = (0..=steps)
                .find(|&k| parts.iter().filter(|q| prefix(q, k) == prefix(p, k)).count() == 1)
                .unwrap_or(steps);
            render(x, &prefix(p, k))
        })
        .collect();
    let mut seen: HashMap<String, usize> = HashMap::new();
    for l in &labels {
        *seen.entry(l.clone()).or_default() += 1;
    }
    let mut next: BTreeMap<String, usize> = BTreeMap::new();
    for l in labels.iter_mut() {
        if seen[l.as_str()] > 1 {
            let k = next.entry(l.clone()).or_default();
            *k += 1;
            *l = format!("{l}_{k}");
        }
    }
    labels
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parts_of_small_shapes() {
        let tree = Diagram::new(7, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (2, 5, 1), (5, 6, 1)]).unwrap();
        assert_eq!(shape_parts(&tree), ["".to_string(), "0".into(), "2^3".into(), "3^1".into()]);
        let tri_tail = Diagram::new(4, [(0, 1, 1), (1, 2, 1), (2, 0, 1), (2, 3, 1)]).unwrap();
        assert_eq!(shape_parts(&tri_tail), ["3^1".to_string(), "1".into(), "1^1".into(), "3^1".into()]);
    }

    #[test]
    fn prefixes_and_suffixes() {
        let tree = Diagram::new(3, [(0, 1, 1), (1, 2, 1)]).unwrap();
        let tri = Diagram::new(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)]).unwrap();
        assert_eq!(assign_labels("X", &[tree.clone(), tri.clone()]), vec!["X", "X(3^1)"]);
        assert_eq!(assign_labels("X", &[tri.clone(), tri]), vec!["X(3^1;1;0)_1", "X(3^1;1;0)_2"]);
    }
}
