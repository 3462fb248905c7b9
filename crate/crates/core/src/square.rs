//! Square classes of a finite set of positive integers.
//!
//! The numbers are refined into a pairwise coprime base; a product of them is a
//! perfect square iff the exponent of every non-square base element is even.
//! This avoids factoring arbitrary 64-bit weights.

use crate::diagram::is_perfect_square;

pub(crate) struct SquareClasses {
    /// Pairwise coprime base elements that are not perfect squares.
    base: Vec<u64>,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl SquareClasses {
    pub fn new(values: impl IntoIterator<Item = u64>) -> Self {
        let mut base: Vec<u64> = Vec::new();
        let mut pending: Vec<u64> = values.into_iter().filter(|&v| v > 1).collect();
        while let Some(mut x) = pending.pop() {
            let mut i = 0;
            while i < base.len() && x > 1 {
                let b = base[i];
                let g = gcd(x, b);
                if g == 1 {
                    i += 1;
                    continue;
                }
                // split b into g and b/g, and x into g and x/g; re-refine the pieces
                base.swap_remove(i);
                pending.push(g);
                if b / g > 1 {
                    pending.push(b / g);
                }
                x /= g;
                if x > 1 {
                    pending.push(x);
                }
                x = 1;
            }
            if x > 1 {
                base.push(x);
            }
        }
        base.sort_unstable();
        base.dedup();
        base.retain(|&b| !is_perfect_square(b as u128));
        SquareClasses { base }
    }

    fn words(&self) -> usize {
        self.base.len().div_ceil(64).max(1)
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.words()]
    }

    /// Parity vector of `v`, which must factor over the base (true for inputs).
    pub fn vector(&self, mut v: u64) -> Vec<u64> {
        let mut out = self.zero();
        for (i, &b) in self.base.iter().enumerate() {
            let mut e = 0;
            while v % b == 0 {
                v /= b;
                e += 1;
            }
            if e % 2 == 1 {
                out[i / 64] ^= 1 << (i % 64);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_square_product(vals: &[u64]) -> bool {
        let c = SquareClasses::new(vals.iter().copied());
        let mut acc = c.zero();
        for &v in vals {
            for (a, b) in acc.iter_mut().zip(c.vector(v)) {
                *a ^= b;
            }
        }
        acc.iter().all(|&w| w == 0)
    }

    #[test]
    fn matches_brute_force() {
        for a in 1..40u64 {
            for b in 1..40u64 {
                for c in [1u64, 2, 3, 6, 12, 18, 35] {
                    let p = a as u128 * b as u128 * c as u128;
                    assert_eq!(is_square_product(&[a, b, c]), is_perfect_square(p), "{a} {b} {c}");
                }
            }
        }
    }

    #[test]
    fn large_primes() {
        let p = 4_294_967_291u64; // prime
        let q = 4_294_967_279u64; // prime
        assert!(is_square_product(&[p * 3, q * 3, p, q]));
        assert!(!is_square_product(&[p * 3, q, p, q]));
        assert!(is_square_product(&[p * q, p, q]));
    }
}
