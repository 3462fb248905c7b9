//! Fixed diagrams: the non-oriented weighted cycles and the F4 family.

use std::collections::BTreeMap;

use crate::canon::{canonical_form, CanonicalForm};
use crate::diagram::Diagram;

use super::generate::orient_all_cycles;

/// The three weighted cycles that are minimal 2-infinite only when not
/// oriented, each in every non-oriented orientation up to isomorphism.
pub fn table2_entries() -> Vec<(String, Diagram)> {
    let shapes: [(&str, Vec<(usize, usize, u64)>); 3] = [
        ("T2:square(2,1,2,1)", vec![(0, 1, 2), (1, 2, 1), (2, 3, 2), (3, 0, 1)]),
        ("T2:triangle(2,2,1)", vec![(0, 1, 2), (1, 2, 2), (2, 0, 1)]),
        ("T2:triangle(3,3,1)", vec![(0, 1, 3), (1, 2, 3), (2, 0, 1)]),
    ];
    let mut out = Vec::new();
    for (label, edges) in shapes {
        let n = edges.len();
        let mut found: BTreeMap<CanonicalForm, Diagram> = BTreeMap::new();
        for mask in 0u32..1 << edges.len() {
            let list = edges
                .iter()
                .enumerate()
                .map(|(i, &(a, b, w))| if mask >> i & 1 == 1 { (b, a, w as i64) } else { (a, b, w as i64) });
            let d = Diagram::new(n, list).expect("weighted cycles are valid");
            if d.has_non_oriented_cycle() {
                found.entry(canonical_form(&d).unwrap()).or_insert(d);
            }
        }
        out.extend(found.into_values().map(|d| (label.to_string(), d)));
    }
    out
}

/// The F4 family, vertices named `a1, a2, b1, b2, c1` = `0..5`, cycles oriented.
pub fn table3_f4_fixtures() -> Vec<(String, Diagram)> {
    const A1: usize = 0;
    const A2: usize = 1;
    const B1: usize = 2;
    const B2: usize = 3;
    const C1: usize = 4;
    let shapes: [(&str, Vec<(usize, usize, u64)>); 7] = [
        ("F4^(1)", vec![(A1, A2, 1), (A2, B1, 1), (B1, B2, 2), (B2, C1, 1)]),
        ("F4^(1)(3^1;1;2^1)_1", vec![(A1, B1, 1), (B1, B2, 2), (B2, C1, 1), (A2, A1, 1), (A2, B1, 1)]),
        ("F4^(1)(3^1;1;2^1)_2", vec![(A1, A2, 1), (A2, B1, 1), (B1, B2, 2), (B1, C1, 2), (B2, C1, 1)]),
        ("F4^(1)(3^2;0)", vec![(A1, B1, 1), (B1, B2, 2), (A1, A2, 1), (B1, C1, 2), (B1, A2, 1), (B2, C1, 1)]),
        ("F4^(1)(3^1;1;1^2)", vec![(A1, B1, 1), (B1, B2, 2), (B2, A2, 1), (B1, C1, 1), (B2, C1, 2)]),
        ("F4^(1)(3^2;0;1^1)", vec![(B1, A2, 1), (A2, A1, 1), (B1, C1, 2), (B1, B2, 2), (A2, B2, 2), (B2, C1, 1)]),
        ("F4^(1)(4^1;3^1)", vec![(A1, B1, 1), (B1, B2, 2), (A1, A2, 1), (A2, B1, 1), (A2, C1, 2), (B2, C1, 1)]),
    ];
    shapes
        .into_iter()
        .map(|(label, edges)| (label.to_string(), orient_all_cycles(5, &edges).expect("F4 fixtures admit oriented cycles")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table2_shapes() {
        let t = table2_entries();
        assert!(t.iter().all(|(_, d)| d.has_non_oriented_cycle()));
        let sq: Vec<_> = t.iter().filter(|(l, _)| l.contains("square")).collect();
        let mut w: Vec<u64> = sq[0].1.edges().map(|e| e.2).collect();
        w.sort();
        assert_eq!(w, vec![1, 1, 2, 2]);
        for (l, d) in &t {
            let p: u64 = d.edges().map(|e| e.2).product();
            assert!(p == 4 || p == 9, "{l}");
        }
    }

    #[test]
    fn f4_shapes() {
        let f = table3_f4_fixtures();
        assert_eq!(f.len(), 7);
        assert_eq!(f[0].1.edge_count(), 4);
        for (l, d) in &f {
            assert!(!d.has_non_oriented_cycle(), "{l}");
            assert!(d.is_connected());
        }
        let last = &f[6].1;
        let mut lens: Vec<usize> = last.chordless_cycles().iter().map(Vec::len).collect();
        lens.sort();
        assert_eq!(lens, vec![3, 4]);
    }
}
