//! Hilbert bases of monoids `{v ∈ N^n : A·v = 0, B·v ≡ 0 (mod m)}`.
//!
//! Contejean–Devie completion: starting from the unit vectors, a candidate
//! `p` that is not yet a solution is extended by `e_j` only when the defect
//! `A·p` and the column `A·e_j` point in opposite directions, and candidates
//! dominating a known solution are dropped. Congruence rows are reduced to
//! nonnegative coefficients and closed with one slack column `−m`, so the
//! solver itself only ever sees exact equations.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;
use crate::error::{Error, Result};

/// Exponent vector over `N`.
pub type NVec = Vec<u64>;

/// A homogeneous system of linear equations and congruences over `N^nvars`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    nvars: usize,
    eq: IntMatrix,
    moduli: Vec<Option<BigInt>>,
}

impl LinearSystem {
    pub fn new(eq: IntMatrix, moduli: Vec<Option<BigInt>>, nvars: usize) -> Result<Self> {
        Self::with_constants(eq, moduli, None, nvars)
    }

    /// Like [`new`](Self::new) but accepts a constant term per row, as produced
    /// by parsers of `lhs ≡ rhs` input. Constants must vanish (modulo the row
    /// modulus) on rows with coefficients, and such rows are rejected as
    /// inhomogeneous otherwise; constant-only rows are dropped when trivially
    /// satisfied and rejected as inconsistent when not.
    pub fn with_constants(
        eq: IntMatrix,
        moduli: Vec<Option<BigInt>>,
        constants: Option<Vec<BigInt>>,
        nvars: usize,
    ) -> Result<Self> {
        if eq.cols() != nvars {
            return Err(Error::InvalidSystem(format!(
                "{} coefficient columns for {nvars} variables",
                eq.cols()
            )));
        }
        if moduli.len() != eq.rows() {
            return Err(Error::InvalidSystem(format!(
                "{} moduli for {} rows",
                moduli.len(),
                eq.rows()
            )));
        }
        let constants = constants.unwrap_or_else(|| vec![BigInt::zero(); eq.rows()]);
        if constants.len() != eq.rows() {
            return Err(Error::InvalidSystem(format!(
                "{} constants for {} rows",
                constants.len(),
                eq.rows()
            )));
        }
        let mut kept_rows = Vec::new();
        let mut kept_moduli = Vec::new();
        for (i, m) in moduli.into_iter().enumerate() {
            if let Some(m) = &m {
                if !m.is_positive() {
                    return Err(Error::InvalidSystem(format!("row {i}: modulus {m} is not positive")));
                }
            }
            let c = &constants[i];
            let c_vanishes = match &m {
                Some(m) => c.is_multiple_of(m),
                None => c.is_zero(),
            };
            let row = eq.row(i);
            if row.iter().all(Zero::is_zero) {
                if !c_vanishes {
                    return Err(Error::InvalidSystem(format!(
                        "row {i}: inconsistent constant row {c} ≡ 0"
                    )));
                }
                continue;
            }
            if !c_vanishes {
                return Err(Error::InvalidSystem(format!("row {i}: inhomogeneous row")));
            }
            kept_rows.push(row.to_vec());
            kept_moduli.push(m);
        }
        let entries = kept_rows.concat();
        let eq = IntMatrix::from_entries(kept_rows.len(), nvars, entries)?;
        Ok(Self {
            nvars,
            eq,
            moduli: kept_moduli,
        })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn equations(&self) -> &IntMatrix {
        &self.eq
    }

    pub fn moduli(&self) -> &[Option<BigInt>] {
        &self.moduli
    }

    /// Whether `v` satisfies every row.
    pub fn is_solution(&self, v: &[u64]) -> bool {
        (0..self.eq.rows()).all(|i| {
            let s: BigInt = self.eq.row(i).iter().zip(v).map(|(a, &x)| a * BigInt::from(x)).sum();
            match &self.moduli[i] {
                Some(m) => s.is_multiple_of(m),
                None => s.is_zero(),
            }
        })
    }

    /// Equivalent exact system over `N^(nvars + #congruences)`.
    fn exact_extension(&self) -> IntMatrix {
        let ncong = self.moduli.iter().filter(|m| m.is_some()).count();
        let width = self.nvars + ncong;
        let mut out = IntMatrix::zeros(self.eq.rows(), width);
        let mut slack = self.nvars;
        for i in 0..self.eq.rows() {
            match &self.moduli[i] {
                Some(m) => {
                    for j in 0..self.nvars {
                        out[(i, j)] = self.eq[(i, j)].mod_floor(m);
                    }
                    out[(i, slack)] = -m;
                    slack += 1;
                }
                None => {
                    for j in 0..self.nvars {
                        out[(i, j)] = self.eq[(i, j)].clone();
                    }
                }
            }
        }
        out
    }
}

fn dominates(big: &[u64], small: &[u64]) -> bool {
    big.iter().zip(small).all(|(b, s)| b >= s)
}

/// ≤-minimal nonzero elements of `vs`, sorted and deduplicated.
pub(crate) fn minimal_nonzero(vs: impl IntoIterator<Item = NVec>) -> Vec<NVec> {
    let set: BTreeSet<NVec> = vs.into_iter().filter(|v| v.iter().any(|&x| x > 0)).collect();
    let all: Vec<NVec> = set.into_iter().collect();
    all.iter()
        .filter(|v| !all.iter().any(|w| w != *v && dominates(v, w)))
        .cloned()
        .collect()
}

fn contejean_devie(a: &IntMatrix) -> Vec<NVec> {
    let n = a.cols();
    let columns: Vec<Vec<BigInt>> = (0..n).map(|j| a.column(j)).collect();
    let dot = |x: &[BigInt], y: &[BigInt]| -> BigInt { x.iter().zip(y).map(|(p, q)| p * q).sum() };

    let mut basis: Vec<NVec> = Vec::new();
    let mut frontier: Vec<(NVec, Vec<BigInt>)> = (0..n)
        .map(|j| {
            let mut e = vec![0u64; n];
            e[j] = 1;
            (e, columns[j].clone())
        })
        .collect();

    while !frontier.is_empty() {
        let mut pending = Vec::new();
        for (p, r) in frontier {
            if r.iter().all(Zero::is_zero) {
                basis.push(p);
            } else {
                pending.push((p, r));
            }
        }
        let mut next: BTreeMap<NVec, Vec<BigInt>> = BTreeMap::new();
        for (p, r) in &pending {
            for j in 0..n {
                if !dot(r, &columns[j]).is_negative() {
                    continue;
                }
                let mut q = p.clone();
                q[j] = q[j].checked_add(1).expect("exponent overflow");
                if next.contains_key(&q) || basis.iter().any(|b| dominates(&q, b)) {
                    continue;
                }
                let rq = r.iter().zip(&columns[j]).map(|(x, y)| x + y).collect();
                next.insert(q, rq);
            }
        }
        frontier = next.into_iter().collect();
    }
    basis
}

/// Minimal generating set of the solution monoid of `system`, sorted
/// lexicographically. With no constraints this is the set of unit vectors.
pub fn hilbert_basis_of(system: &LinearSystem) -> Vec<NVec> {
    let ext = system.exact_extension();
    let raw = contejean_devie(&ext);
    minimal_nonzero(raw.into_iter().map(|mut v| {
        v.truncate(system.nvars);
        v
    }))
}

/// Convenience entry point: rows of `eq` with a modulus are congruences,
/// the others exact equations.
pub fn hilbert_basis(eq: &IntMatrix, moduli: &[Option<BigInt>], nvars: usize) -> Result<Vec<NVec>> {
    let sys = LinearSystem::new(eq.clone(), moduli.to_vec(), nvars)?;
    Ok(hilbert_basis_of(&sys))
}
