//! Dynkin and extended Dynkin diagrams in a fixed default orientation.

use std::fmt;

use crate::diagram::Diagram;

/// Finite types. `B(n)` also stands for `C(n)`, which has the same diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DynkinType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

/// Extended Dynkin types plus the rank-2 family `I2(a)`, `a >= 4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AffineType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2(u64),
    I2(u64),
}

/// Path `0 - 1 - ... - (n-1)` oriented left to right, with weights overridden
/// on the listed edges `(i, i+1)`.
fn path(n: usize, heavy: &[(usize, i64)]) -> Vec<(usize, usize, i64)> {
    (1..n).map(|i| (i - 1, i, heavy.iter().find(|h| h.0 == i - 1).map_or(1, |h| h.1))).collect()
}

fn build(n: usize, edges: Vec<(usize, usize, i64)>) -> Diagram {
    Diagram::new(n, edges).expect("built-in shapes are valid")
}

impl DynkinType {
    pub fn rank(&self) -> usize {
        match *self {
            DynkinType::A(n) | DynkinType::B(n) | DynkinType::D(n) | DynkinType::E(n) => n,
            DynkinType::F4 => 4,
            DynkinType::G2 => 2,
        }
    }

    pub fn label(&self) -> String {
        match *self {
            DynkinType::A(n) => format!("A{n}"),
            DynkinType::B(n) => format!("B{n}"),
            DynkinType::D(n) => format!("D{n}"),
            DynkinType::E(n) => format!("E{n}"),
            DynkinType::F4 => "F4".into(),
            DynkinType::G2 => "G2".into(),
        }
    }

    pub fn is_valid(&self) -> bool {
        match *self {
            DynkinType::A(n) => n >= 1,
            DynkinType::B(n) => n >= 2,
            DynkinType::D(n) => n >= 4,
            DynkinType::E(n) => (6..=8).contains(&n),
            _ => true,
        }
    }

    /// All types of the given rank, in a fixed order.
    pub fn all_of_rank(n: usize) -> Vec<DynkinType> {
        [DynkinType::A(n), DynkinType::B(n), DynkinType::D(n), DynkinType::E(n), DynkinType::F4, DynkinType::G2]
            .into_iter()
            .filter(|t| t.is_valid() && t.rank() == n)
            .collect()
    }

    /// Default orientation: every edge points to the larger index.
    pub fn diagram(&self) -> Diagram {
        match *self {
            DynkinType::A(n) => build(n, path(n, &[])),
            DynkinType::B(n) => build(n, path(n, &[(0, 2)])),
            DynkinType::D(n) => {
                let mut e = vec![(0, 2, 1), (1, 2, 1)];
                e.extend((3..n).map(|i| (i - 1, i, 1)));
                build(n, e)
            }
            DynkinType::E(n) => {
                let mut e = path(n - 1, &[]);
                e.push((2, n - 1, 1));
                build(n, e)
            }
            DynkinType::F4 => build(4, path(4, &[(1, 2)])),
            DynkinType::G2 => build(2, vec![(0, 1, 3)]),
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl AffineType {
    pub fn vertex_count(&self) -> usize {
        match *self {
            AffineType::A(n) | AffineType::B(n) | AffineType::C(n) | AffineType::D(n) | AffineType::E(n) => n + 1,
            AffineType::F4 => 5,
            AffineType::G2(_) => 3,
            AffineType::I2(_) => 2,
        }
    }

    pub fn label(&self) -> String {
        match *self {
            AffineType::A(n) => format!("A{n}^(1)"),
            AffineType::B(n) => format!("B{n}^(1)"),
            AffineType::C(n) => format!("C{n}^(1)"),
            AffineType::D(n) => format!("D{n}^(1)"),
            AffineType::E(n) => format!("E{n}^(1)"),
            AffineType::F4 => "F4^(1)".into(),
            AffineType::G2(a) => format!("G2^(1)({a})"),
            AffineType::I2(a) => format!("I2({a})"),
        }
    }

    /// Label without the weight pattern that separates the `G2^(1)` shapes.
    pub fn family_label(&self) -> String {
        match *self {
            AffineType::G2(_) => "G2^(1)".into(),
            _ => self.label(),
        }
    }

    pub fn is_valid(&self) -> bool {
        match *self {
            AffineType::A(n) => n >= 2,
            AffineType::B(n) => n >= 3,
            AffineType::C(n) => n >= 2,
            AffineType::D(n) => n >= 4,
            AffineType::E(n) => (6..=8).contains(&n),
            AffineType::G2(a) => (1..=3).contains(&a),
            AffineType::I2(a) => a >= 4,
            AffineType::F4 => true,
        }
    }

    /// Every type with this many vertices; for two vertices only `I2(4)`.
    pub fn all_with_vertices(v: usize) -> Vec<AffineType> {
        if v == 2 {
            return vec![AffineType::I2(4)];
        }
        let n = v.saturating_sub(1);
        let mut out: Vec<AffineType> =
            [AffineType::A(n), AffineType::B(n), AffineType::C(n), AffineType::D(n), AffineType::E(n), AffineType::F4]
                .into_iter()
                .filter(|t| t.is_valid() && t.vertex_count() == v)
                .collect();
        if v == 3 {
            out.extend((1..=3).map(AffineType::G2));
        }
        out
    }

    /// Default orientation: tree edges point to the larger index; the
    /// `A` cycle is `0 -> 1 -> ... -> n` closed by `0 -> n`, so not oriented.
    pub fn diagram(&self) -> Diagram {
        match *self {
            AffineType::A(n) => {
                let mut e = path(n + 1, &[]);
                e.push((0, n, 1));
                build(n + 1, e)
            }
            AffineType::B(n) => {
                // leaves 0, 1 on 2, path 2..n, last edge doubled
                let mut e = vec![(0, 2, 1), (1, 2, 1)];
                e.extend((3..=n).map(|i| (i - 1, i, if i == n { 2 } else { 1 })));
                build(n + 1, e)
            }
            AffineType::C(n) => build(n + 1, path(n + 1, &[(0, 2), (n - 1, 2)])),
            AffineType::D(n) => {
                let mut e = vec![(0, 2, 1), (1, 2, 1)];
                e.extend((3..=n - 2).map(|i| (i - 1, i, 1)));
                e.push((n - 2, n - 1, 1));
                e.push((n - 2, n, 1));
                build(n + 1, e)
            }
            AffineType::E(6) => build(7, vec![(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (2, 5, 1), (5, 6, 1)]),
            AffineType::E(7) => {
                let mut e = path(7, &[]);
                e.push((3, 7, 1));
                build(8, e)
            }
            AffineType::E(8) => {
                let mut e = path(8, &[]);
                e.push((2, 8, 1));
                build(9, e)
            }
            AffineType::E(n) => panic!("no extended type E{n}"),
            AffineType::F4 => build(5, path(5, &[(2, 2)])),
            AffineType::G2(a) => build(3, vec![(0, 1, 3), (1, 2, a as i64)]),
            AffineType::I2(a) => build(2, vec![(0, 1, a as i64)]),
        }
    }
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        assert_eq!(AffineType::D(4).diagram().degree(2), 4);
        assert_eq!(AffineType::B(3).diagram().n(), 4);
        assert_eq!(AffineType::C(2).diagram().edges().map(|e| e.2).collect::<Vec<_>>(), vec![2, 2]);
        assert!(AffineType::A(3).diagram().has_non_oriented_cycle());
        assert_eq!(DynkinType::E(8).diagram().degree(2), 3);
        assert_eq!(AffineType::E(7).diagram().degree(3), 3);
        for v in 2..=9 {
            for t in AffineType::all_with_vertices(v) {
                assert_eq!(t.diagram().n(), v, "{t}");
                assert!(t.diagram().is_connected());
            }
        }
    }
}
