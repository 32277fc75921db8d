use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use super::snf::{snf, SmithDecomposition};
use crate::error::{Error, Result};

/// A finitely generated abelian group `Z^ngen / ⟨relation columns⟩`.
#[derive(Clone, PartialEq, Eq)]
pub struct FgAbelianGroup {
    ngen: usize,
    relations: IntMatrix,
    smith: SmithDecomposition,
}

/// An element of an [`FgAbelianGroup`], held as its canonical representative
/// in presentation coordinates.
///
/// Two elements are equal in the group exactly when their coordinates are equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    coords: Vec<BigInt>,
}

impl GroupElement {
    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coords.len() == 1 {
            write!(f, "{}", self.coords[0])
        } else {
            fmt::Debug::fmt(self, f)
        }
    }
}

impl FgAbelianGroup {
    /// `relations` has one row per generator; its columns span the relation lattice.
    pub fn new(ngen: usize, relations: IntMatrix) -> Result<Self> {
        if relations.rows() != ngen {
            return Err(Error::DimensionMismatch {
                expected: ngen,
                found: relations.rows(),
            });
        }
        let smith = snf(&relations);
        Ok(Self { ngen, relations, smith })
    }

    pub fn free(rank: usize) -> Self {
        Self::new(rank, IntMatrix::zeros(rank, 0)).expect("shape is consistent")
    }

    /// `Z^rank ⊕ Z/d₁ ⊕ … ⊕ Z/d_s`, free coordinates first.
    pub fn from_invariants(rank: usize, factors: &[BigInt]) -> Self {
        let ngen = rank + factors.len();
        let mut rel = IntMatrix::zeros(ngen, factors.len());
        for (k, d) in factors.iter().enumerate() {
            rel[(rank + k, k)] = d.clone();
        }
        Self::new(ngen, rel).expect("shape is consistent")
    }

    pub fn ngen(&self) -> usize {
        self.ngen
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    fn modulus(&self, i: usize) -> Option<&BigInt> {
        self.smith.d.get(i).filter(|d| !d.is_zero())
    }

    pub fn free_rank(&self) -> usize {
        self.ngen - self.smith.rank()
    }

    /// Invariant factors greater than one, in divisibility order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.smith
            .d
            .iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .cloned()
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank() == 0 && self.invariant_factors().is_empty()
    }

    fn check_len(&self, v: &[BigInt]) -> Result<()> {
        if v.len() != self.ngen {
            return Err(Error::DimensionMismatch {
                expected: self.ngen,
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Smith coordinates `U·x` with torsion positions reduced into `[0, dᵢ)`.
    fn reduced_smith(&self, x: &[BigInt]) -> Vec<BigInt> {
        let mut y = self.smith.u.mul_vec(x).expect("length checked");
        for (i, yi) in y.iter_mut().enumerate() {
            if let Some(d) = self.modulus(i) {
                *yi = yi.mod_floor(d);
            }
        }
        y
    }

    pub fn element(&self, coords: Vec<BigInt>) -> Result<GroupElement> {
        self.check_len(&coords)?;
        let y = self.reduced_smith(&coords);
        let coords = self.smith.u_inv.mul_vec(&y).expect("square");
        Ok(GroupElement { coords })
    }

    pub fn element_from_i64(&self, coords: &[i64]) -> Result<GroupElement> {
        self.element(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            coords: vec![BigInt::zero(); self.ngen],
        }
    }

    /// The image of the `i`-th presentation generator.
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut c = vec![BigInt::zero(); self.ngen];
        c[i] = BigInt::one();
        self.element(c).expect("length matches")
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        x.coords.len() == self.ngen
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let c = a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect();
        self.element(c).expect("lengths match")
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let c = a.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect();
        self.element(c).expect("lengths match")
    }

    pub fn scale(&self, k: &BigInt, a: &GroupElement) -> GroupElement {
        let c = a.coords.iter().map(|x| x * k).collect();
        self.element(c).expect("lengths match")
    }

    /// `Σ kᵢ·xᵢ`
    pub fn combination(&self, ks: &[BigInt], xs: &[GroupElement]) -> GroupElement {
        let mut acc = vec![BigInt::zero(); self.ngen];
        for (k, x) in ks.iter().zip(xs) {
            for (a, c) in acc.iter_mut().zip(&x.coords) {
                *a += k * c;
            }
        }
        self.element(acc).expect("lengths match")
    }

    /// Coordinates in the decomposition `Z/d₁ ⊕ … ⊕ Z/d_s ⊕ Z^r`, torsion
    /// first. The map is linear modulo the entries of
    /// [`coordinate_moduli`](Self::coordinate_moduli).
    pub fn coordinates(&self, x: &GroupElement) -> Vec<BigInt> {
        let y = self.reduced_smith(&x.coords);
        self.nontrivial_positions().into_iter().map(|i| y[i].clone()).collect()
    }

    /// Linear functional (over presentation coordinates) for each entry of
    /// [`coordinates`](Self::coordinates), paired with its modulus.
    pub fn coordinate_functionals(&self) -> Vec<(Vec<BigInt>, Option<BigInt>)> {
        self.nontrivial_positions()
            .into_iter()
            .map(|i| (self.smith.u.row(i).to_vec(), self.modulus(i).cloned()))
            .collect()
    }

    pub fn coordinate_moduli(&self) -> Vec<Option<BigInt>> {
        self.coordinate_functionals().into_iter().map(|(_, m)| m).collect()
    }

    fn nontrivial_positions(&self) -> Vec<usize> {
        let mut torsion = Vec::new();
        let mut free = Vec::new();
        for i in 0..self.ngen {
            match self.modulus(i) {
                Some(d) if d.is_one() => {}
                Some(_) => torsion.push(i),
                None => free.push(i),
            }
        }
        torsion.extend(free);
        torsion
    }

    fn span_matrix(&self, h: &[GroupElement]) -> Result<IntMatrix> {
        let cols: Vec<Vec<BigInt>> = h.iter().map(|e| e.coords.clone()).collect();
        for c in &cols {
            self.check_len(c)?;
        }
        IntMatrix::from_columns(self.ngen, &cols)?.hconcat(&self.relations)
    }

    /// Integer coefficients `c` with `Σ cᵢ·hᵢ = x`, or `None` when `x ∉ ⟨h⟩`.
    ///
    /// The solution is the one read off the Smith form of `[h | relations]`
    /// with all free parameters set to zero.
    pub fn subgroup_membership(&self, x: &GroupElement, h: &[GroupElement]) -> Result<Option<Vec<BigInt>>> {
        self.check_len(&x.coords)?;
        let a = self.span_matrix(h)?;
        let s = snf(&a);
        let y = s.u.mul_vec(&x.coords)?;
        let mut z = vec![BigInt::zero(); a.cols()];
        for (i, yi) in y.iter().enumerate() {
            match s.d.get(i) {
                Some(d) if !d.is_zero() => {
                    let (q, r) = yi.div_rem(d);
                    if !r.is_zero() {
                        return Ok(None);
                    }
                    z[i] = q;
                }
                _ => {
                    if !yi.is_zero() {
                        return Ok(None);
                    }
                }
            }
        }
        let full = s.v.mul_vec(&z)?;
        Ok(Some(full[..h.len()].to_vec()))
    }

    /// Free rank and invariant factors (> 1) of `M / ⟨h⟩`.
    pub fn quotient_invariants(&self, h: &[GroupElement]) -> Result<(usize, Vec<BigInt>)> {
        let s = snf(&self.span_matrix(h)?);
        let free = self.ngen - s.rank();
        let inv = s.d.iter().filter(|d| !d.is_zero() && !d.is_one()).cloned().collect();
        Ok((free, inv))
    }

    /// Whether `M / ⟨h⟩` is a torsion group.
    pub fn is_torsion_quotient(&self, h: &[GroupElement]) -> Result<bool> {
        Ok(self.quotient_invariants(h)?.0 == 0)
    }

    /// Whether `⟨h⟩ = M`.
    pub fn generates(&self, h: &[GroupElement]) -> Result<bool> {
        let (free, inv) = self.quotient_invariants(h)?;
        Ok(free == 0 && inv.is_empty())
    }

    /// Whether `⟨a⟩ = ⟨b⟩`, by mutual membership.
    pub fn same_subgroup(&self, a: &[GroupElement], b: &[GroupElement]) -> Result<bool> {
        for x in a {
            if self.subgroup_membership(x, b)?.is_none() {
                return Ok(false);
            }
        }
        for x in b {
            if self.subgroup_membership(x, a)?.is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Least `n > 0` with `n·x ∈ ⟨h⟩` together with coefficients witnessing it.
    pub fn minimal_positive_multiple(
        &self,
        x: &GroupElement,
        h: &[GroupElement],
    ) -> Result<Option<(BigInt, Vec<BigInt>)>> {
        self.check_len(&x.coords)?;
        // order of x in M/⟨h⟩
        let s = snf(&self.span_matrix(h)?);
        let y = s.u.mul_vec(&x.coords)?;
        let mut order = BigInt::one();
        for (i, yi) in y.iter().enumerate() {
            match s.d.get(i) {
                Some(d) if !d.is_zero() => {
                    let g = yi.gcd(d);
                    order = order.lcm(&(d / g));
                }
                _ => {
                    if !yi.is_zero() {
                        return Ok(None);
                    }
                }
            }
        }
        debug_assert!(order.is_positive());
        let nx = self.scale(&order, x);
        let coeffs = self
            .subgroup_membership(&nx, h)?
            .ok_or_else(|| Error::Invariant("multiple of computed order not in subgroup".into()))?;
        Ok(Some((order, coeffs)))
    }
}

impl fmt::Debug for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z^{}", self.free_rank())?;
        for d in self.invariant_factors() {
            write!(f, " + Z/{d}")?;
        }
        Ok(())
    }
}

/// Basis of the integer kernel `{v ∈ Z^cols : a·v = 0}`.
pub fn kernel_lattice(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let s = snf(a);
    let r = s.rank();
    (r..a.cols()).map(|j| s.v.column(j)).collect()
}
