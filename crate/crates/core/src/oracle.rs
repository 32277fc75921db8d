//! Brute-force reference engines.
//!
//! These enumerate boxes exhaustively and are only meant to ground tests of
//! the real solvers at small sizes.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::zlattice::{minimal_nonzero, IntMatrix, LinearSystem, NVec};

/// Componentwise bound on enumerated vectors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoxBound(u64);

impl BoxBound {
    pub fn new(b: u64) -> Result<Self> {
        if b == 0 {
            return Err(Error::InvalidSystem("box bound must be at least 1".into()));
        }
        Ok(Self(b))
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl Default for BoxBound {
    fn default() -> Self {
        Self(6)
    }
}

/// Every solution of `system` in `{0,…,b}^nvars`, lexicographically sorted.
pub fn enumerate_solutions_of(system: &LinearSystem, bound: BoxBound) -> Vec<NVec> {
    let n = system.nvars();
    let mut out = Vec::new();
    let mut v = vec![0u64; n];
    loop {
        if system.is_solution(&v) {
            out.push(v.clone());
        }
        // odometer, last coordinate fastest, so output is lexicographic
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if v[i] < bound.get() {
                v[i] += 1;
                for x in &mut v[i + 1..] {
                    *x = 0;
                }
                break;
            }
        }
    }
}

pub fn enumerate_solutions(
    eq: &IntMatrix,
    moduli: &[Option<BigInt>],
    nvars: usize,
    bound: BoxBound,
) -> Result<Vec<NVec>> {
    let sys = LinearSystem::new(eq.clone(), moduli.to_vec(), nvars)?;
    Ok(enumerate_solutions_of(&sys, bound))
}

/// The ≤-minimal nonzero vectors among `vs`, sorted.
pub fn minimal_elements(vs: &[NVec]) -> Vec<NVec> {
    minimal_nonzero(vs.iter().cloned())
}

/// Whether `target` is an `N`-combination of `gens` (all entries are
/// nonnegative, so the search is finite).
pub fn is_n_combination(target: &[u64], gens: &[NVec]) -> bool {
    fn go(t: &[u64], gens: &[NVec], from: usize, dead: &mut BTreeSet<(usize, NVec)>) -> bool {
        if t.iter().all(|&x| x == 0) {
            return true;
        }
        if dead.contains(&(from, t.to_vec())) {
            return false;
        }
        for (k, g) in gens.iter().enumerate().skip(from) {
            if g.iter().all(|&x| x == 0) || g.iter().zip(t).any(|(a, b)| a > b) {
                continue;
            }
            let rest: NVec = t.iter().zip(g).map(|(a, b)| a - b).collect();
            if go(&rest, gens, k, dead) {
                return true;
            }
        }
        dead.insert((from, t.to_vec()));
        false
    }
    go(target, gens, 0, &mut BTreeSet::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerate_small_box() {
        let eq = IntMatrix::from_rows(&[[2, 1, -2]]);
        let sols = enumerate_solutions(&eq, &[None], 3, BoxBound::new(2).unwrap()).unwrap();
        // (1,2,2) is a solution too: 2 + 2 - 4 = 0
        assert_eq!(
            sols,
            vec![
                vec![0, 0, 0],
                vec![0, 2, 1],
                vec![1, 0, 1],
                vec![1, 2, 2],
                vec![2, 0, 2]
            ]
        );
    }

    #[test]
    fn unconstrained_box() {
        let sols = enumerate_solutions(&IntMatrix::zeros(0, 1), &[], 1, BoxBound::new(2).unwrap()).unwrap();
        assert_eq!(sols, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn constant_row_rejected() {
        let sys = LinearSystem::with_constants(
            IntMatrix::zeros(1, 1),
            vec![Some(BigInt::from(2))],
            Some(vec![BigInt::from(1)]),
            1,
        );
        assert!(sys.is_err());
        assert!(BoxBound::new(0).is_err());
    }

    #[test]
    fn minimal_examples() {
        assert_eq!(
            minimal_elements(&[vec![1, 0, 1], vec![0, 2, 1], vec![2, 0, 2]]),
            vec![vec![0, 2, 1], vec![1, 0, 1]]
        );
        assert!(minimal_elements(&[]).is_empty());
        let m = minimal_elements(&[vec![1, 1], vec![2, 0], vec![0, 2], vec![2, 2]]);
        assert_eq!(m, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        for v in [vec![1, 1], vec![2, 0], vec![0, 2], vec![2, 2], vec![0, 0]] {
            assert!(is_n_combination(&v, &m));
        }
        assert!(!is_n_combination(&[1, 0], &m));
    }
}
