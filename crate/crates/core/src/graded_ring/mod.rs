//! Polynomial rings graded by a finitely generated abelian group, and the
//! relevance tests for families of homogeneous elements.

mod field;
mod parse;
mod polynomial;

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;

pub use field::{is_prime, Coeff, CoeffField};
pub use parse::parse_polynomial;
pub use polynomial::{Exponents, Polynomial};

use crate::error::{Error, Result};
use crate::zlattice::{FgAbelianGroup, GroupElement};

/// `k[x₁,…,x_n]` with `deg xᵢ ∈ M`.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedRing {
    names: Vec<String>,
    grading: Vec<GroupElement>,
    group: FgAbelianGroup,
    field: CoeffField,
}

impl GradedRing {
    pub fn new(
        group: FgAbelianGroup,
        field: CoeffField,
        names: Vec<String>,
        degrees: Vec<GroupElement>,
    ) -> Result<Self> {
        if names.len() != degrees.len() {
            return Err(Error::DimensionMismatch {
                expected: names.len(),
                found: degrees.len(),
            });
        }
        let unique: BTreeSet<&String> = names.iter().collect();
        if unique.len() != names.len() {
            return Err(Error::Invariant("variable names must be unique".into()));
        }
        let mut grading = Vec::with_capacity(degrees.len());
        for d in degrees {
            if !group.contains(&d) {
                return Err(Error::DimensionMismatch {
                    expected: group.ngen(),
                    found: d.coords().len(),
                });
            }
            grading.push(group.element(d.coords().to_vec())?);
        }
        Ok(Self {
            names,
            grading,
            group,
            field,
        })
    }

    /// Ring with variables `prefix0, prefix1, …` and integer degree vectors.
    pub fn with_degrees(group: FgAbelianGroup, field: CoeffField, names: &[&str], degrees: &[&[i64]]) -> Result<Self> {
        let degs = degrees
            .iter()
            .map(|d| group.element_from_i64(d))
            .collect::<Result<Vec<_>>>()?;
        Self::new(group, field, names.iter().map(|s| String::from(*s)).collect(), degs)
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn group(&self) -> &FgAbelianGroup {
        &self.group
    }

    pub fn field(&self) -> CoeffField {
        self.field
    }

    pub fn var_degree(&self, i: usize) -> &GroupElement {
        &self.grading[i]
    }

    pub fn grading(&self) -> &[GroupElement] {
        &self.grading
    }

    /// The same grading over another coefficient field.
    pub fn with_field(&self, field: CoeffField) -> Self {
        Self { field, ..self.clone() }
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::var(self.field, self.nvars(), i)
    }

    pub fn monomial(&self, exps: Exponents) -> Polynomial {
        Polynomial::monomial(self.field, exps)
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::one(self.field, self.nvars())
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.field, self.nvars())
    }

    pub fn parse(&self, src: &str) -> Result<Polynomial> {
        parse_polynomial(src, &self.names, self.field)
    }

    pub fn render(&self, p: &Polynomial) -> String {
        p.render(&self.names)
    }

    pub fn owns(&self, p: &Polynomial) -> bool {
        p.field() == self.field && p.nvars() == self.nvars()
    }

    /// `Σ eᵢ·deg xᵢ`
    pub fn monomial_degree(&self, exps: &[u64]) -> GroupElement {
        let ks: Vec<BigInt> = exps.iter().map(|&e| BigInt::from(e)).collect();
        self.group.combination(&ks, &self.grading)
    }

    /// Degree of a nonzero homogeneous polynomial.
    pub fn degree_of(&self, p: &Polynomial) -> Result<GroupElement> {
        if !self.owns(p) {
            return Err(Error::RingMismatch);
        }
        let mut terms = p.terms();
        let Some((e0, _)) = terms.next() else {
            return Err(Error::ZeroElement);
        };
        let d = self.monomial_degree(e0);
        for (e, _) in terms {
            if self.monomial_degree(e) != d {
                return Err(Error::NotHomogeneous);
            }
        }
        Ok(d)
    }

    pub fn is_homogeneous(&self, p: &Polynomial) -> bool {
        self.degree_of(p).is_ok()
    }

    /// `a ⌣ b`: both homogeneous of the same degree.
    pub fn smile(&self, a: &Polynomial, b: &Polynomial) -> Result<bool> {
        Ok(self.degree_of(a)? == self.degree_of(b)?)
    }

    /// Moves a polynomial of this ring's shape into `target` (same variables).
    pub fn transport(&self, p: &Polynomial, target: &GradedRing) -> Result<Polynomial> {
        if target.nvars() != self.nvars() {
            return Err(Error::RingMismatch);
        }
        p.change_field(target.field)
    }
}

impl fmt::Debug for GradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[", self.field)?;
        for (i, (n, d)) in self.names.iter().zip(&self.grading).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{n}:{d}")?;
        }
        write!(f, "] graded by {:?}", self.group)
    }
}

/// A finite nonempty family of nonzero homogeneous elements.
#[derive(Clone)]
pub struct HomFamily {
    ring: Arc<GradedRing>,
    elements: Vec<Polynomial>,
    degrees: Vec<GroupElement>,
}

impl PartialEq for HomFamily {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring) && self.elements == other.elements
    }
}

impl Eq for HomFamily {}

impl HomFamily {
    pub fn new(ring: Arc<GradedRing>, elements: Vec<Polynomial>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::EmptyFamily);
        }
        let degrees = elements.iter().map(|p| ring.degree_of(p)).collect::<Result<Vec<_>>>()?;
        Ok(Self {
            ring,
            elements,
            degrees,
        })
    }

    /// Family parsed from infix expressions.
    pub fn parse(ring: &Arc<GradedRing>, exprs: &[&str]) -> Result<Self> {
        let elements = exprs.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
        Self::new(ring.clone(), elements)
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn degrees(&self) -> &[GroupElement] {
        &self.degrees
    }

    pub fn is_monomial(&self, i: usize) -> bool {
        self.elements[i].is_monomial()
    }

    pub fn all_monomial(&self) -> bool {
        self.elements.iter().all(Polynomial::is_monomial)
    }

    pub fn index_of(&self, p: &Polynomial) -> Option<usize> {
        self.elements.iter().position(|q| q == p)
    }

    /// `f ∪ g`: the elements of `self` followed by those of `other` not already present.
    pub fn union(&self, other: &HomFamily) -> Result<HomFamily> {
        if !(Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring) {
            return Err(Error::RingMismatch);
        }
        let mut out = self.clone();
        for (p, d) in other.elements.iter().zip(&other.degrees) {
            if !out.elements.contains(p) {
                out.elements.push(p.clone());
                out.degrees.push(d.clone());
            }
        }
        Ok(out)
    }

    /// Sorted, duplicate-free form; two families describe the same chart key
    /// exactly when their canonical forms agree.
    pub fn canonical(&self) -> HomFamily {
        let mut pairs: Vec<(Polynomial, GroupElement)> = self
            .elements
            .iter()
            .cloned()
            .zip(self.degrees.iter().cloned())
            .collect();
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        pairs.dedup_by(|a, b| a.0 == b.0);
        let (elements, degrees) = pairs.into_iter().unzip();
        HomFamily {
            ring: self.ring.clone(),
            elements,
            degrees,
        }
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self.elements.iter().map(|p| self.ring.render(p)).collect();
        format!("{{{}}}", parts.join(", "))
    }

    /// The same family over `ring`, which must share the variables.
    pub fn transport(&self, ring: Arc<GradedRing>) -> Result<HomFamily> {
        let elements = self
            .elements
            .iter()
            .map(|p| self.ring.transport(p, &ring))
            .collect::<Result<Vec<_>>>()?;
        HomFamily::new(ring, elements)
    }
}

impl fmt::Debug for HomFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Outcome of [`is_relevant`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelevanceCertificate {
    pub relevant: bool,
    pub very_relevant: bool,
    /// Whether the divisor degree group was computed exactly (all elements monomial).
    pub exact: bool,
    pub degree_group_gens: Vec<GroupElement>,
    /// Free rank of `M / ⟨gens⟩`.
    pub quotient_free_rank: usize,
    /// Invariant factors (> 1) of `M / ⟨gens⟩`.
    pub quotient_invariants: Vec<BigInt>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Relevant,
    NotRelevant,
    /// A non-monomial element hides divisors we cannot see.
    Inconclusive,
}

impl RelevanceCertificate {
    pub fn verdict(&self) -> Verdict {
        match (self.relevant, self.exact) {
            (true, _) => Verdict::Relevant,
            (false, true) => Verdict::NotRelevant,
            (false, false) => Verdict::Inconclusive,
        }
    }
}

/// Degrees generating (a subgroup of) the degree group of all homogeneous
/// divisors of `f`, and whether that subgroup is exact.
///
/// A monomial `c·x^α` contributes `deg xᵢ` for each `αᵢ > 0`; any other
/// element only contributes its own degree.
pub fn divisor_degree_group(f: &HomFamily) -> (Vec<GroupElement>, bool) {
    let ring = f.ring();
    let mut gens = BTreeSet::new();
    let mut exact = true;
    for (p, d) in f.elements().iter().zip(f.degrees()) {
        match p.as_monomial() {
            Some((_, exps)) => {
                for (i, &e) in exps.iter().enumerate() {
                    if e > 0 {
                        gens.insert(ring.var_degree(i).clone());
                    }
                }
            }
            None => {
                exact = false;
                gens.insert(d.clone());
            }
        }
    }
    (gens.into_iter().collect(), exact)
}

pub fn is_relevant(f: &HomFamily) -> Result<RelevanceCertificate> {
    let group = f.ring().group();
    let (gens, exact) = divisor_degree_group(f);
    let (free, invariants) = group.quotient_invariants(&gens)?;
    let relevant = free == 0;
    let very_relevant = relevant && exact && group.same_subgroup(f.degrees(), &gens)?;
    Ok(RelevanceCertificate {
        relevant,
        very_relevant,
        exact,
        degree_group_gens: gens,
        quotient_free_rank: free,
        quotient_invariants: invariants,
    })
}
