//! Diagram mutation.

use crate::diagram::{exact_isqrt, Diagram, DiagramError};

/// Mutation in the direction of one vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MutationStep(pub usize);

impl MutationStep {
    pub fn vertex(self) -> usize {
        self.0
    }
}

/// Mutates `d` at `k`.
///
/// Edges at `k` are reversed. For each path `i -> k -> j` with weights `a`, `b`
/// the `i`/`j` weight `c` becomes `c'` with `±sqrt(c) ± sqrt(c') = sqrt(ab)`,
/// the sign being `+` for the oriented-triangle case.
pub fn mutate(d: &Diagram, k: usize) -> Result<Diagram, DiagramError> {
    let n = d.n();
    if k >= n {
        return Err(DiagramError::OutOfRange { vertex: k, n });
    }
    let mut out = d.clone();
    let ins: Vec<(usize, u64)> = (0..n).filter_map(|i| Some((i, d.arrow(i, k))).filter(|x| x.1 != 0)).collect();
    let outs: Vec<(usize, u64)> = (0..n).filter_map(|j| Some((j, d.arrow(k, j))).filter(|x| x.1 != 0)).collect();
    for &(i, a) in &ins {
        out.set_arrow(i, k, 0);
        out.set_arrow(k, i, a);
    }
    for &(j, b) in &outs {
        out.set_arrow(k, j, 0);
        out.set_arrow(j, k, b);
    }
    for &(i, a) in &ins {
        for &(j, b) in &outs {
            let ab = a.checked_mul(b).ok_or(DiagramError::WeightOverflow)?;
            let back = d.arrow(j, i);
            let c = if back != 0 { back } else { d.arrow(i, j) };
            let r = if c == 0 {
                0
            } else {
                let abc = ab as u128 * c as u128;
                exact_isqrt(abc).ok_or(DiagramError::InternalNonSquare(abc))?
            };
            let sum = ab as u128 + c as u128;
            let fit = |x: u128| u64::try_from(x).map_err(|_| DiagramError::WeightOverflow);
            if back != 0 {
                let cp = fit(sum - 2 * r)?;
                out.set_arrow(i, j, 0);
                out.set_arrow(j, i, 0);
                if ab > c {
                    out.set_arrow(i, j, cp);
                } else if ab < c {
                    out.set_arrow(j, i, cp);
                }
            } else {
                out.set_arrow(i, j, fit(sum + 2 * r)?);
            }
        }
    }
    Ok(out)
}

/// Applies mutations left to right.
pub fn mutate_seq(d: &Diagram, ks: &[usize]) -> Result<Diagram, DiagramError> {
    ks.iter().try_fold(d.clone(), |acc, &k| mutate(&acc, k))
}

pub fn mutate_steps(d: &Diagram, steps: &[MutationStep]) -> Result<Diagram, DiagramError> {
    steps.iter().try_fold(d.clone(), |acc, s| mutate(&acc, s.0))
}
