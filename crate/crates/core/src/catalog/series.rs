//! The infinite families of minimal 2-infinite diagrams.

use std::fmt;

use crate::canon::{skeleton_form, SkeletonForm};
use crate::diagram::Diagram;

use super::CatalogError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    /// Non-oriented cycle on `n + 1` vertices.
    AffineA { n: usize },
    /// Fork, path, weight-2 end edge; `n + 1` vertices.
    AffineB { n: usize },
    /// Path with both end edges of weight 2; `n + 1` vertices.
    AffineC { n: usize },
    /// Forks at both ends; `n + 1` vertices.
    AffineD { n: usize },
    /// `r`-cycle, a triangle on it leading into a path of `m`, weight-2 end edge.
    BCyclePath { m: usize, r: usize },
    /// `r`-cycle with one extra vertex joined to two consecutive cycle vertices by weight-2 edges.
    BCycle { r: usize },
    /// Fork, path of `m`, ending in a triangle on an `r`-cycle.
    DCyclePath { m: usize, r: usize },
    /// `r`-cycle with two extra vertices each joined to the same two consecutive cycle vertices.
    DCycle { r: usize },
    /// An `r`-cycle and an `s`-cycle joined by a path of `m` through triangles.
    DTwoCycles { m: usize, r: usize, s: usize },
    /// Single edge of weight `a`.
    I2 { a: u64 },
}

/// Orientation of the edges that are not forced by the shape. Bit `i` of
/// `Flips` reverses the `i`-th free edge in construction order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OrientationSpec {
    #[default]
    Default,
    Flips(u64),
}

/// An edge under construction: `free` edges follow the orientation spec.
struct Draft {
    n: usize,
    names: Vec<String>,
    edges: Vec<(usize, usize, i64, bool)>,
}

impl Draft {
    fn new() -> Self {
        Draft { n: 0, names: Vec::new(), edges: Vec::new() }
    }

    fn vertex(&mut self, name: String) -> usize {
        self.names.push(name);
        self.n += 1;
        self.n - 1
    }

    fn vertices(&mut self, prefix: &str, k: usize) -> Vec<usize> {
        (1..=k).map(|i| self.vertex(format!("{prefix}{i}"))).collect()
    }

    fn free(&mut self, a: usize, b: usize, w: i64) {
        self.edges.push((a, b, w, true));
    }

    fn fixed(&mut self, a: usize, b: usize, w: i64) {
        self.edges.push((a, b, w, false));
    }

    /// Oriented cycle through `vs` in order.
    fn cycle(&mut self, vs: &[usize]) {
        for i in 0..vs.len() {
            self.fixed(vs[i], vs[(i + 1) % vs.len()], 1);
        }
    }

    /// Oriented triangle `x -> y -> apex -> x` given the existing edge `x -> y`.
    fn apex(&mut self, apex: usize, x: usize, y: usize, w: i64) {
        self.fixed(y, apex, w);
        self.fixed(apex, x, w);
    }

    fn finish(self, spec: OrientationSpec) -> Result<(Diagram, Vec<String>), CatalogError> {
        let mut k = 0;
        let mut edges = Vec::new();
        for (a, b, w, free) in self.edges {
            let flip = free && matches!(spec, OrientationSpec::Flips(mask) if mask >> k & 1 == 1);
            if free {
                k += 1;
            }
            edges.push(if flip { (b, a, w) } else { (a, b, w) });
        }
        let d = Diagram::new(self.n, edges).map_err(|e| CatalogError::BadParams(e.to_string()))?;
        Ok((d, self.names))
    }
}

impl Series {
    pub fn family(&self) -> &'static str {
        match self {
            Series::AffineA { .. } => "A_n^(1)",
            Series::AffineB { .. } => "B_n^(1)",
            Series::AffineC { .. } => "C_n^(1)",
            Series::AffineD { .. } => "D_n^(1)",
            Series::BCyclePath { .. } => "B_n^(1)(m,r)",
            Series::BCycle { .. } => "B_n^(1)(r)",
            Series::DCyclePath { .. } => "D_n^(1)(m,r)",
            Series::DCycle { .. } => "D_n^(1)(r)",
            Series::DTwoCycles { .. } => "D_n^(1)(m,r,s)",
            Series::I2 { .. } => "I_2(a)",
        }
    }

    /// Parameter names and values, in the order of the family tag.
    pub fn params(&self) -> Vec<(&'static str, u64)> {
        let u = |x: usize| x as u64;
        match *self {
            Series::AffineA { n } | Series::AffineB { n } | Series::AffineC { n } | Series::AffineD { n } => vec![("n", u(n))],
            Series::BCyclePath { m, r } | Series::DCyclePath { m, r } => vec![("m", u(m)), ("r", u(r))],
            Series::BCycle { r } | Series::DCycle { r } => vec![("r", u(r))],
            Series::DTwoCycles { m, r, s } => vec![("m", u(m)), ("r", u(r)), ("s", u(s))],
            Series::I2 { a } => vec![("a", a)],
        }
    }

    pub fn from_family(family: &str, params: &[u64]) -> Result<Series, CatalogError> {
        let bad = || CatalogError::BadParams(format!("{family} with parameters {params:?}"));
        let p = |i: usize| params.get(i).map(|&x| x as usize).ok_or_else(bad);
        let s = match family {
            "A_n^(1)" => Series::AffineA { n: p(0)? },
            "B_n^(1)" => Series::AffineB { n: p(0)? },
            "C_n^(1)" => Series::AffineC { n: p(0)? },
            "D_n^(1)" => Series::AffineD { n: p(0)? },
            "B_n^(1)(m,r)" => Series::BCyclePath { m: p(0)?, r: p(1)? },
            "B_n^(1)(r)" => Series::BCycle { r: p(0)? },
            "D_n^(1)(m,r)" => Series::DCyclePath { m: p(0)?, r: p(1)? },
            "D_n^(1)(r)" => Series::DCycle { r: p(0)? },
            "D_n^(1)(m,r,s)" => Series::DTwoCycles { m: p(0)?, r: p(1)?, s: p(2)? },
            "I_2(a)" => Series::I2 { a: *params.first().ok_or_else(bad)? },
            _ => return Err(bad()),
        };
        if s.params().len() != params.len() {
            return Err(bad());
        }
        s.check()?;
        Ok(s)
    }

    /// Entry label, e.g. `D_n^(1)(m,r)[m=1,r=3]`.
    pub fn label(&self) -> String {
        let ps: Vec<String> = self.params().iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("{}[{}]", self.family(), ps.join(","))
    }

    pub fn vertex_count(&self) -> usize {
        match *self {
            Series::AffineA { n } | Series::AffineB { n } | Series::AffineC { n } | Series::AffineD { n } => n + 1,
            Series::BCyclePath { m, r } => r + m + 1,
            Series::BCycle { r } => r + 1,
            Series::DCyclePath { m, r } => 2 + m + r,
            Series::DCycle { r } => r + 2,
            Series::DTwoCycles { m, r, s } => r + m + s,
            Series::I2 { .. } => 2,
        }
    }

    pub fn check(&self) -> Result<(), CatalogError> {
        let ok = match *self {
            Series::AffineA { n } => n >= 2,
            Series::AffineB { n } => n >= 3,
            Series::AffineC { n } => n >= 2,
            Series::AffineD { n } => n >= 4,
            Series::BCyclePath { m, r } | Series::DCyclePath { m, r } => m >= 1 && r >= 3,
            Series::BCycle { r } | Series::DCycle { r } => r >= 3,
            Series::DTwoCycles { m, r, s } => m >= 1 && r >= 3 && s >= 3,
            Series::I2 { a } => a >= 4,
        };
        if ok && self.vertex_count() <= crate::diagram::MAX_VERTICES {
            Ok(())
        } else {
            Err(CatalogError::BadParams(self.label()))
        }
    }

    /// Every member of every family with exactly `v` vertices (for `I2`, only `a = 4`).
    /// `D_n^(1)(m,r,s)` is symmetric in `r, s`; only `r <= s` is listed.
    pub fn all_with_vertices(v: usize) -> Vec<Series> {
        let mut out = Vec::new();
        if v < 2 {
            return out;
        }
        let n = v - 1;
        out.extend([Series::AffineA { n }, Series::AffineB { n }, Series::AffineC { n }, Series::AffineD { n }]);
        out.extend([Series::BCycle { r: v - 1 }, Series::DCycle { r: v.saturating_sub(2) }]);
        for r in 3..v {
            out.push(Series::BCyclePath { m: v.saturating_sub(r + 1), r });
            out.push(Series::DCyclePath { m: v.saturating_sub(r + 2), r });
            for s in r..v {
                out.push(Series::DTwoCycles { m: v.saturating_sub(r + s), r, s });
            }
        }
        if v == 2 {
            out.push(Series::I2 { a: 4 });
        }
        out.retain(|s| s.check().is_ok() && s.vertex_count() == v);
        out
    }

    /// Builds the diagram and the vertex names (`a1`, `b1`, ... as in the tables).
    pub fn build(&self, spec: OrientationSpec) -> Result<(Diagram, Vec<String>), CatalogError> {
        self.check()?;
        let mut g = Draft::new();
        match *self {
            Series::AffineA { n } => {
                let v = g.vertices("a", n + 1);
                for i in 1..=n {
                    g.free(v[i - 1], v[i], 1);
                }
                g.free(v[0], v[n], 1);
            }
            Series::AffineB { n } => {
                let b = g.vertices("b", 2);
                let a = g.vertices("a", n - 2);
                let c = g.vertex("c1".into());
                g.free(b[0], a[0], 1);
                g.free(b[1], a[0], 1);
                chain(&mut g, &a);
                g.free(a[n - 3], c, 2);
            }
            Series::AffineC { n } => {
                let a = g.vertices("a", n + 1);
                for i in 1..=n {
                    g.free(a[i - 1], a[i], if i == 1 || i == n { 2 } else { 1 });
                }
            }
            Series::AffineD { n } => {
                let b = g.vertices("b", 2);
                let a = g.vertices("a", n - 3);
                let c = g.vertices("c", 2);
                g.free(b[0], a[0], 1);
                g.free(b[1], a[0], 1);
                chain(&mut g, &a);
                let last = a[n - 4];
                g.free(last, c[0], 1);
                g.free(last, c[1], 1);
            }
            Series::BCyclePath { m, r } => {
                let b = g.vertices("b", r);
                let a = g.vertices("a", m);
                let c = g.vertex("c1".into());
                g.cycle(&b);
                g.apex(a[0], b[0], b[1], 1);
                chain(&mut g, &a);
                g.free(a[m - 1], c, 2);
            }
            Series::BCycle { r } => {
                let b = g.vertices("b", r);
                let c = g.vertex("c1".into());
                g.cycle(&b);
                g.apex(c, b[0], b[1], 2);
            }
            Series::DCyclePath { m, r } => {
                let b = g.vertices("b", 2);
                let a = g.vertices("a", m);
                let c = g.vertices("c", r);
                g.free(b[0], a[0], 1);
                g.free(b[1], a[0], 1);
                chain(&mut g, &a);
                g.cycle(&c);
                g.apex(a[m - 1], c[0], c[1], 1);
            }
            Series::DCycle { r } => {
                let b = g.vertices("b", r);
                let a = g.vertex("a1".into());
                let c = g.vertex("c1".into());
                g.cycle(&b);
                g.apex(a, b[0], b[1], 1);
                g.apex(c, b[0], b[1], 1);
            }
            Series::DTwoCycles { m, r, s } => {
                let b = g.vertices("b", r);
                let a = g.vertices("a", m);
                let c = g.vertices("c", s);
                g.cycle(&b);
                g.apex(a[0], b[0], b[1], 1);
                chain(&mut g, &a);
                g.cycle(&c);
                g.apex(a[m - 1], c[0], c[1], 1);
            }
            Series::I2 { a } => {
                let v = g.vertices("a", 2);
                let w = i64::try_from(a).map_err(|_| CatalogError::BadParams(self.label()))?;
                g.free(v[0], v[1], w);
            }
        }
        let (d, names) = g.finish(spec)?;
        if matches!(self, Series::AffineA { .. }) && !d.has_non_oriented_cycle() {
            return Err(CatalogError::BadParams("the A_n^(1) cycle must not be oriented".into()));
        }
        Ok((d, names))
    }

    pub fn diagram(&self) -> Result<Diagram, CatalogError> {
        Ok(self.build(OrientationSpec::Default)?.0)
    }

    /// Index of a named vertex such as `b1`.
    pub fn vertex(&self, name: &str) -> Option<usize> {
        self.build(OrientationSpec::Default).ok()?.1.iter().position(|x| x == name)
    }
}

fn chain(g: &mut Draft, vs: &[usize]) {
    for w in vs.windows(2) {
        g.free(w[0], w[1], 1);
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

pub fn make_series(p: &Series, orientation: OrientationSpec) -> Result<Diagram, CatalogError> {
    Ok(p.build(orientation)?.0)
}

/// Cheap shape signature: weight multiset, degree sequence, chordless cycle lengths.
fn signature(d: &Diagram) -> (Vec<u64>, Vec<usize>, Vec<usize>) {
    let mut w: Vec<u64> = d.edges().map(|e| e.2).collect();
    w.sort_unstable();
    let mut deg: Vec<usize> = (0..d.n()).map(|v| d.degree(v)).collect();
    deg.sort_unstable();
    let mut cyc: Vec<usize> = d.chordless_cycles().iter().map(Vec::len).collect();
    cyc.sort_unstable();
    (w, deg, cyc)
}

/// Finds the family member with the same underlying weighted graph as `d`.
/// Cycles must be oriented except for the `A_n^(1)` cycle, which must not be.
pub fn match_series(d: &Diagram) -> Option<Series> {
    if !d.is_connected() {
        return None;
    }
    let v = d.n();
    if v == 2 {
        let w = d.max_weight();
        return (w >= 4).then_some(Series::I2 { a: w });
    }
    let sig = signature(d);
    let non_oriented = d.has_non_oriented_cycle();
    let mut sk: Option<SkeletonForm> = None;
    for s in Series::all_with_vertices(v) {
        if non_oriented != matches!(s, Series::AffineA { .. }) {
            continue;
        }
        let Ok(cand) = s.diagram() else { continue };
        if signature(&cand) != sig {
            continue;
        }
        if sk.is_none() {
            sk = Some(skeleton_form(d).ok()?);
        }
        if skeleton_form(&cand).ok().as_ref() == sk.as_ref() {
            return Some(s);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mutation::mutate;

    #[test]
    fn sizes_and_names() {
        for v in 2..=12 {
            for s in Series::all_with_vertices(v) {
                let (d, names) = s.build(OrientationSpec::Default).unwrap();
                assert_eq!(d.n(), v, "{s}");
                assert_eq!(names.len(), v);
                assert!(d.is_connected());
                assert_eq!(d.has_non_oriented_cycle(), matches!(s, Series::AffineA { .. }), "{s}");
                assert_eq!(match_series(&d), Some(s), "{s}");
            }
        }
    }

    #[test]
    fn shapes() {
        let i2 = Series::I2 { a: 4 }.diagram().unwrap();
        assert_eq!(i2.edges().collect::<Vec<_>>(), vec![(0, 1, 4)]);
        let d4 = Series::AffineD { n: 4 }.diagram().unwrap();
        assert_eq!((0..5).map(|v| d4.degree(v)).max(), Some(4));
        assert!(Series::BCycle { r: 2 }.check().is_err());
        assert!(Series::I2 { a: 3 }.diagram().is_err());
    }

    #[test]
    fn three_cycle_reductions() {
        // mutation at b1 collapses the triangle into a fork
        let cases = [
            (Series::BCyclePath { m: 2, r: 3 }, "b1", Series::AffineB { n: 5 }),
            (Series::DCyclePath { m: 2, r: 3 }, "c1", Series::AffineD { n: 6 }),
            (Series::DCycle { r: 3 }, "b1", Series::AffineD { n: 4 }),
            (Series::BCycle { r: 3 }, "b1", Series::AffineB { n: 3 }),
            (Series::DTwoCycles { m: 1, r: 3, s: 4 }, "b1", Series::DCyclePath { m: 2, r: 4 }),
        ];
        for (s, v, target) in cases {
            let d = mutate(&s.diagram().unwrap(), s.vertex(v).unwrap()).unwrap();
            assert_eq!(match_series(&d), Some(target), "{s}");
        }
    }

    #[test]
    fn family_roundtrip() {
        for s in Series::all_with_vertices(7) {
            let ps: Vec<u64> = s.params().iter().map(|p| p.1).collect();
            assert_eq!(Series::from_family(s.family(), &ps).unwrap(), s);
        }
        assert!(Series::from_family("D_n^(1)(m,r)", &[0, 3]).is_err());
    }
}
