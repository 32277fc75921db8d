//! Fractions `x/a^ν` in the localization `A_f` and presentations of the
//! degree-zero part `A_(f)` (the potion of `f`).
//!
//! For a monomial family the potion is spanned by the degree-zero fractions
//! `x^μ / a^ν`, which form an affine monoid; its generators come from the
//! Hilbert basis of
//!
//! ```text
//! L = {(μ, ν⁺, ν⁻) ∈ N^n × N^k × N^k : deg x^μ = Σ (ν⁺ᵢ − ν⁻ᵢ)·deg aᵢ}
//! ```
//!
//! where the degree condition is split into one exact row per free
//! coordinate of `M` and one congruence per invariant factor.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graded_ring::{Coeff, Exponents, HomFamily, Polynomial};
use crate::zlattice::{hilbert_basis_of, kernel_lattice, GroupElement, IntMatrix, LinearSystem};

/// Default total-degree bound for [`express_in_generators`].
pub const DEFAULT_EXPRESS_BOUND: u64 = 12;

/// `numerator / Π aᵢ^{νᵢ}` in the localization of `A` at a family.
#[derive(Clone)]
pub struct LocFraction {
    numerator: Polynomial,
    denom: Vec<u64>,
    family: Arc<HomFamily>,
}

pub(crate) fn same_family(a: &Arc<HomFamily>, b: &Arc<HomFamily>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl LocFraction {
    pub fn new(numerator: Polynomial, denom: Vec<u64>, family: Arc<HomFamily>) -> Result<Self> {
        if denom.len() != family.len() {
            return Err(Error::DimensionMismatch {
                expected: family.len(),
                found: denom.len(),
            });
        }
        let ring = family.ring();
        if !ring.owns(&numerator) {
            return Err(Error::RingMismatch);
        }
        if !numerator.is_zero() {
            ring.degree_of(&numerator)?;
        }
        Ok(Self {
            numerator,
            denom,
            family,
        })
    }

    pub fn from_polynomial(p: Polynomial, family: Arc<HomFamily>) -> Result<Self> {
        let k = family.len();
        Self::new(p, vec![0; k], family)
    }

    pub fn one(family: Arc<HomFamily>) -> Self {
        let one = family.ring().one();
        let k = family.len();
        Self {
            numerator: one,
            denom: vec![0; k],
            family,
        }
    }

    /// `x^μ · a^{ν⁻} / a^{ν⁺}` for `ν = ν⁺ − ν⁻`.
    pub fn from_exponents(family: Arc<HomFamily>, mu: &[u64], nu: &[i64]) -> Result<Self> {
        let ring = family.ring().clone();
        let mut num = ring.monomial(mu.to_vec());
        let mut denom = vec![0u64; family.len()];
        for (i, &v) in nu.iter().enumerate() {
            if v < 0 {
                num = &num * &family.elements()[i].pow(v.unsigned_abs());
            } else {
                denom[i] = v as u64;
            }
        }
        Self::new(num, denom, family)
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denom_exps(&self) -> &[u64] {
        &self.denom
    }

    pub fn family(&self) -> &Arc<HomFamily> {
        &self.family
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// `Π aᵢ^{νᵢ}` as a polynomial.
    pub fn denominator(&self) -> Polynomial {
        family_power(&self.family, &self.denom)
    }

    /// `deg(x) − Σ νᵢ·deg(aᵢ)`.
    pub fn degree(&self) -> Result<GroupElement> {
        let ring = self.family.ring();
        let group = ring.group();
        let top = ring.degree_of(&self.numerator)?;
        let ks: Vec<BigInt> = self.denom.iter().map(|&e| BigInt::from(e)).collect();
        let bottom = group.combination(&ks, self.family.degrees());
        Ok(group.sub(&top, &bottom))
    }

    fn check_family(&self, other: &Self) -> Result<()> {
        if same_family(&self.family, &other.family) {
            Ok(())
        } else {
            Err(Error::FamilyMismatch)
        }
    }

    /// Equality in the localization. The ambient ring is a domain, so this is
    /// cross-multiplication.
    pub fn equals(&self, other: &Self) -> Result<bool> {
        self.check_family(other)?;
        let lhs = &self.numerator * &other.denominator();
        let rhs = &other.numerator * &self.denominator();
        Ok(lhs == rhs)
    }

    pub fn is_one(&self) -> bool {
        self.equals(&Self::one(self.family.clone())).unwrap_or(false)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_family(other)?;
        let denom = self.denom.iter().zip(&other.denom).map(|(a, b)| a + b).collect();
        Self::new(&self.numerator * &other.numerator, denom, self.family.clone())
    }

    pub fn pow(&self, e: u64) -> Self {
        Self {
            numerator: self.numerator.pow(e),
            denom: self.denom.iter().map(|&d| d * e).collect(),
            family: self.family.clone(),
        }
    }

    /// Sum over the common denominator `a^{max(ν, ν')}`. Both summands must
    /// have the same degree (or be zero).
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, true)
    }

    fn combine(&self, other: &Self, negate: bool) -> Result<Self> {
        self.check_family(other)?;
        let top: Vec<u64> = self.denom.iter().zip(&other.denom).map(|(a, b)| *a.max(b)).collect();
        let lift = |fr: &Self| {
            let extra: Vec<u64> = top.iter().zip(&fr.denom).map(|(t, d)| t - d).collect();
            &fr.numerator * &family_power(&fr.family, &extra)
        };
        let b = lift(other);
        let num = if negate { &lift(self) - &b } else { &lift(self) + &b };
        Self::new(num, top, self.family.clone())
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        Self {
            numerator: self.numerator.scale(c),
            denom: self.denom.clone(),
            family: self.family.clone(),
        }
    }

    /// Same fraction over a family containing this one as a prefix.
    pub fn over_family(&self, family: Arc<HomFamily>) -> Result<Self> {
        let mut denom = vec![0u64; family.len()];
        for (i, &e) in self.denom.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let j = family
                .index_of(&self.family.elements()[i])
                .ok_or(Error::FamilyMismatch)?;
            denom[j] += e;
        }
        Self::new(self.numerator.clone(), denom, family)
    }

    /// For a monomial numerator over a monomial family: the coefficient and
    /// the exponent vector of the Laurent monomial this fraction equals.
    pub fn laurent(&self) -> Result<(Coeff, Vec<i64>)> {
        let (c, e) = self.numerator.as_monomial().ok_or(Error::NonMonomialFraction)?;
        let ring = self.family.ring();
        let field = ring.field();
        let mut coeff = c.clone();
        let mut exps: Vec<i64> = e.iter().map(|&x| to_i64(x)).collect();
        for (i, &k) in self.denom.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let (ac, ae) = self.family.elements()[i]
                .as_monomial()
                .ok_or_else(|| Error::NonMonomialFamily(self.family.render()))?;
            let inv = field.inv(ac).expect("family elements are nonzero");
            for _ in 0..k {
                coeff = field.mul(&coeff, &inv);
            }
            for (x, &a) in exps.iter_mut().zip(ae) {
                *x -= to_i64(a) * to_i64(k);
            }
        }
        Ok((coeff, exps))
    }

    pub fn render(&self) -> String {
        let ring = self.family.ring();
        let num = ring.render(&self.numerator);
        let several = self.denom.iter().filter(|&&e| e > 0).count() > 1;
        let factors: Vec<String> = self
            .denom
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                let a = &self.family.elements()[i];
                let base = ring.render(a);
                let base = if a.num_terms() > 1 || (base.contains('*') && (e > 1 || several)) {
                    format!("({base})")
                } else {
                    base
                };
                if e > 1 {
                    format!("{base}^{e}")
                } else {
                    base
                }
            })
            .collect();
        if factors.is_empty() {
            return num;
        }
        let num = if self.numerator.num_terms() > 1 {
            format!("({num})")
        } else {
            num
        };
        if factors.len() == 1 && !has_top_level_product(&factors[0]) {
            format!("{num}/{}", factors[0])
        } else {
            format!("{num}/({})", factors.join("*"))
        }
    }
}

impl fmt::Debug for LocFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn has_top_level_product(s: &str) -> bool {
    let mut depth = 0i32;
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '*' if depth == 0 => return true,
            _ => {}
        }
    }
    false
}

fn to_i64(x: u64) -> i64 {
    i64::try_from(x).expect("exponent exceeds i64")
}

pub(crate) fn family_power(family: &HomFamily, exps: &[u64]) -> Polynomial {
    let mut acc = family.ring().one();
    for (a, &e) in family.elements().iter().zip(exps) {
        if e > 0 {
            acc = &acc * &a.pow(e);
        }
    }
    acc
}

/// Equality of two fractions over the same family.
pub fn fractions_equal(a: &LocFraction, b: &LocFraction) -> Result<bool> {
    a.equals(b)
}

pub fn fraction_degree(fr: &LocFraction) -> Result<GroupElement> {
    fr.degree()
}

/// One generator of a potion presentation.
#[derive(Clone, Debug)]
pub struct PotionGenerator {
    /// Exponent of the numerator monomial.
    pub mu: Exponents,
    /// Net denominator exponent per family element.
    pub nu: Vec<i64>,
    pub fraction: LocFraction,
    /// Exponents of the Laurent monomial the fraction equals.
    pub laurent: Vec<i64>,
}

/// Generators of `A_(f)` as a monoid algebra, with the lattice of
/// multiplicative relations among them.
#[derive(Clone, Debug)]
pub struct PotionPresentation {
    pub family: Arc<HomFamily>,
    pub generators: Vec<PotionGenerator>,
    /// `Z`-basis of `{v : Σ vₖ·laurentₖ = 0}`.
    pub relation_lattice: Vec<Vec<BigInt>>,
}

impl PotionPresentation {
    pub fn exponent_data(&self) -> Vec<(Exponents, Vec<i64>)> {
        self.generators.iter().map(|g| (g.mu.clone(), g.nu.clone())).collect()
    }

    /// The generators as a set of Laurent monomials, which does not depend
    /// on how the family is ordered.
    pub fn laurent_set(&self) -> BTreeSet<Vec<i64>> {
        self.generators.iter().map(|g| g.laurent.clone()).collect()
    }

    /// `Π genₖ^{cₖ}`.
    pub fn product(&self, exps: &[u64]) -> LocFraction {
        let mut acc = LocFraction::one(self.family.clone());
        for (g, &c) in self.generators.iter().zip(exps) {
            if c > 0 {
                acc = acc.mul(&g.fraction.pow(c)).expect("same family");
            }
        }
        acc
    }

    /// `Π genₖ^{vₖ}` for signed `v`, as the pair (positive part, negative part).
    pub fn signed_product(&self, v: &[BigInt]) -> (LocFraction, LocFraction) {
        let pos: Vec<u64> = v
            .iter()
            .map(|x| u64::try_from(x.max(&BigInt::zero())).expect("small"))
            .collect();
        let neg: Vec<u64> = v
            .iter()
            .map(|x| u64::try_from(&(-x).max(BigInt::zero())).expect("small"))
            .collect();
        (self.product(&pos), self.product(&neg))
    }
}

/// Presentation of the potion `A_(f)` of a monomial family.
pub fn potion_generators(f: &Arc<HomFamily>) -> Result<PotionPresentation> {
    if !f.all_monomial() {
        return Err(Error::NonMonomialFamily(f.render()));
    }
    let ring = f.ring();
    let group = ring.group();
    let n = ring.nvars();
    let k = f.len();
    let width = n + 2 * k;

    let functionals = group.coordinate_functionals();
    let mut rows = IntMatrix::zeros(functionals.len(), width);
    let mut moduli = Vec::with_capacity(functionals.len());
    let dot = |phi: &[BigInt], g: &GroupElement| -> BigInt { phi.iter().zip(g.coords()).map(|(a, b)| a * b).sum() };
    for (r, (phi, m)) in functionals.iter().enumerate() {
        for j in 0..n {
            rows[(r, j)] = dot(phi, ring.var_degree(j));
        }
        for (i, d) in f.degrees().iter().enumerate() {
            let v = dot(phi, d);
            rows[(r, n + i)] = -v.clone();
            rows[(r, n + k + i)] = v;
        }
        moduli.push(m.clone());
    }
    let system = LinearSystem::new(rows, moduli, width)?;

    let mut by_laurent: BTreeMap<Vec<i64>, (Exponents, Vec<i64>)> = BTreeMap::new();
    for v in hilbert_basis_of(&system) {
        let mu = v[..n].to_vec();
        let nu: Vec<i64> = (0..k).map(|i| to_i64(v[n + i]) - to_i64(v[n + k + i])).collect();
        let fr = LocFraction::from_exponents(f.clone(), &mu, &nu)?;
        let (_, laurent) = fr.laurent()?;
        if laurent.iter().all(|&x| x == 0) {
            // a scalar, already in the coefficient field
            continue;
        }
        let cand = (mu, nu);
        match by_laurent.get(&laurent) {
            Some(existing) if *existing <= cand => {}
            _ => {
                by_laurent.insert(laurent, cand);
            }
        }
    }
    let mut data: Vec<(Exponents, Vec<i64>, Vec<i64>)> =
        by_laurent.into_iter().map(|(l, (mu, nu))| (mu, nu, l)).collect();
    data.sort();

    let mut generators = Vec::with_capacity(data.len());
    for (mu, nu, laurent) in data {
        let fraction = LocFraction::from_exponents(f.clone(), &mu, &nu)?;
        debug_assert!(fraction.degree().map(|d| d == group.zero()).unwrap_or(false));
        generators.push(PotionGenerator {
            mu,
            nu,
            fraction,
            laurent,
        });
    }
    let cols: Vec<Vec<BigInt>> = generators
        .iter()
        .map(|g| g.laurent.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let relation_lattice = if cols.is_empty() {
        Vec::new()
    } else {
        kernel_lattice(&IntMatrix::from_columns(n, &cols)?)
    };
    Ok(PotionPresentation {
        family: f.clone(),
        generators,
        relation_lattice,
    })
}

/// `fr = scalar · Π genₖ^{exponentsₖ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expression {
    pub scalar: Coeff,
    pub exponents: Vec<u64>,
}

/// Searches for `fr` as a scalar times a product of generators with total
/// multiplicity at most `bound`. `Ok(None)` means "not found within the
/// bound", which is not a proof of non-membership.
pub fn express_in_generators(fr: &LocFraction, pres: &PotionPresentation, bound: u64) -> Result<Option<Expression>> {
    if !same_family(fr.family(), &pres.family) {
        return Err(Error::FamilyMismatch);
    }
    if fr.is_zero() {
        return Err(Error::ZeroElement);
    }
    let group = fr.family().ring().group();
    if fr.degree()? != group.zero() {
        return Err(Error::DegreeNonzero);
    }
    let (scalar, target) = fr.laurent()?;
    let gens: Vec<&[i64]> = pres.generators.iter().map(|g| g.laurent.as_slice()).collect();
    let Some(exponents) = search_combination(&target, &gens, bound) else {
        return Ok(None);
    };
    let candidate = pres.product(&exponents).scale(&scalar);
    if !candidate.equals(fr)? {
        return Err(Error::Invariant(format!(
            "generator product {} does not reproduce {}",
            candidate.render(),
            fr.render()
        )));
    }
    Ok(Some(Expression { scalar, exponents }))
}

/// Nonnegative `c` with `Σ cₖ·gensₖ = target` and `Σ cₖ ≤ bound`.
fn search_combination(target: &[i64], gens: &[&[i64]], bound: u64) -> Option<Vec<u64>> {
    let dim = target.len();
    let m = gens.len();
    // reach[k][d] = (some gen at index ≥ k is positive at d, some is negative at d)
    let mut reach = vec![vec![(false, false); dim]; m + 1];
    for k in (0..m).rev() {
        for d in 0..dim {
            let (p, q) = reach[k + 1][d];
            reach[k][d] = (p || gens[k][d] > 0, q || gens[k][d] < 0);
        }
    }

    struct Search<'a> {
        gens: &'a [&'a [i64]],
        reach: Vec<Vec<(bool, bool)>>,
        dead: BTreeSet<(usize, u64, Vec<i64>)>,
        counts: Vec<u64>,
    }

    impl Search<'_> {
        fn go(&mut self, k: usize, budget: u64, residual: &mut Vec<i64>) -> bool {
            if residual.iter().all(|&x| x == 0) {
                return true;
            }
            if k == self.gens.len() {
                return false;
            }
            for (d, &r) in residual.iter().enumerate() {
                let (pos, neg) = self.reach[k][d];
                if (r > 0 && !pos) || (r < 0 && !neg) {
                    return false;
                }
            }
            let key = (k, budget, residual.clone());
            if self.dead.contains(&key) {
                return false;
            }
            let g = self.gens[k];
            let mut used = 0;
            loop {
                self.counts[k] = used;
                if self.go(k + 1, budget - used, residual) {
                    return true;
                }
                if used == budget {
                    break;
                }
                used += 1;
                for (r, &x) in residual.iter_mut().zip(g) {
                    *r -= x;
                }
            }
            for (r, &x) in residual.iter_mut().zip(g) {
                *r += x * used as i64;
            }
            self.counts[k] = 0;
            self.dead.insert(key);
            false
        }
    }

    let mut s = Search {
        gens,
        reach,
        dead: BTreeSet::new(),
        counts: vec![0; m],
    };
    let mut residual = target.to_vec();
    if s.go(0, bound, &mut residual) {
        Some(s.counts)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded_ring::GradedRing;
    use crate::oracle::minimal_elements;
    use crate::standard::*;
    use num_bigint::BigInt;

    fn fam(r: &Arc<GradedRing>, xs: &[&str]) -> Arc<HomFamily> {
        Arc::new(HomFamily::parse(r, xs).unwrap())
    }

    fn frac(f: &Arc<HomFamily>, num: &str, den: &[u64]) -> LocFraction {
        LocFraction::new(f.ring().parse(num).unwrap(), den.to_vec(), f.clone()).unwrap()
    }

    fn rendered(p: &PotionPresentation) -> BTreeSet<String> {
        p.generators.iter().map(|g| g.fraction.render()).collect()
    }

    fn set(xs: &[&str]) -> BTreeSet<String> {
        xs.iter().map(|s| String::from(*s)).collect()
    }

    /// Independent oracle: enumerate (μ, ν⁺, ν⁻) in a box, test the degree
    /// condition with group arithmetic, keep ≤-minimal solutions, and map to
    /// Laurent monomials (dropping scalars).
    fn oracle_laurent(f: &Arc<HomFamily>, b: u64) -> BTreeSet<Vec<i64>> {
        let ring = f.ring();
        let group = ring.group();
        let n = ring.nvars();
        let k = f.len();
        let width = n + 2 * k;
        let mut sols = Vec::new();
        let mut v = vec![0u64; width];
        'outer: loop {
            let mu_deg = ring.monomial_degree(&v[..n]);
            let nu: Vec<BigInt> = (0..k)
                .map(|i| BigInt::from(v[n + i] as i64 - v[n + k + i] as i64))
                .collect();
            if group.combination(&nu, f.degrees()) == mu_deg {
                sols.push(v.clone());
            }
            for i in (0..width).rev() {
                if v[i] < b {
                    v[i] += 1;
                    for x in &mut v[i + 1..] {
                        *x = 0;
                    }
                    continue 'outer;
                }
            }
            break;
        }
        minimal_elements(&sols)
            .into_iter()
            .map(|v| {
                let nu: Vec<i64> = (0..k).map(|i| v[n + i] as i64 - v[n + k + i] as i64).collect();
                LocFraction::from_exponents(f.clone(), &v[..n], &nu)
                    .unwrap()
                    .laurent()
                    .unwrap()
                    .1
            })
            .filter(|l| l.iter().any(|&x| x != 0))
            .collect()
    }

    #[test]
    fn degrees_of_fractions() {
        let p1 = Arc::new(projective_space(1));
        let f = fam(&p1, &["x0"]);
        let zero = p1.group().zero();
        assert_eq!(frac(&f, "x1", &[1]).degree().unwrap(), zero);
        assert_eq!(
            frac(&f, "x1^2", &[1]).degree().unwrap(),
            p1.group().element_from_i64(&[1]).unwrap()
        );
        let w = Arc::new(weighted_112());
        let g = fam(&w, &["x*y"]);
        let zf = LocFraction::new(w.parse("z").unwrap(), vec![1], g).unwrap();
        assert_eq!(zf.degree().unwrap(), w.group().zero());
        assert_eq!(frac(&f, "0", &[1]).degree(), Err(Error::ZeroElement));
        assert!(LocFraction::new(p1.parse("x0 + x1^2").unwrap(), vec![0], f).is_err());
    }

    #[test]
    fn equality_examples() {
        let p1 = Arc::new(projective_space(1));
        let f = fam(&p1, &["x0"]);
        assert!(frac(&f, "x1", &[1]).equals(&frac(&f, "x1*x0", &[2])).unwrap());
        let g = fam(&p1, &["x0", "x1"]);
        assert!(!frac(&g, "x1", &[1, 0]).equals(&frac(&g, "x0", &[0, 1])).unwrap());
        let s = LocFraction::one(f.clone()).add(&frac(&f, "x1", &[1])).unwrap();
        assert!(frac(&f, "x0 + x1", &[1]).equals(&s).unwrap());
        assert_eq!(
            frac(&f, "x1", &[1]).equals(&frac(&g, "x1", &[1, 0])),
            Err(Error::FamilyMismatch)
        );
        assert_eq!(s.render(), "(x0 + x1)/x0");
    }

    #[test]
    fn p2_chart() {
        let r = Arc::new(projective_space(2));
        let f = fam(&r, &["x0"]);
        let p = potion_generators(&f).unwrap();
        assert_eq!(rendered(&p), set(&["x1/x0", "x2/x0"]));
        assert!(p.relation_lattice.is_empty());
        assert_eq!(p.laurent_set(), oracle_laurent(&f, 4));
    }

    #[test]
    fn weighted_chart() {
        let r = Arc::new(weighted_112());
        let f = fam(&r, &["z"]);
        let p = potion_generators(&f).unwrap();
        assert_eq!(rendered(&p), set(&["x^2/z", "x*y/z", "y^2/z"]));
        assert_eq!(p.laurent_set(), oracle_laurent(&f, 4));
        assert_eq!(p.relation_lattice.len(), 1);
        let v = &p.relation_lattice[0];
        // generators sorted by (μ, ν): y²/z, x·y/z, x²/z
        let one = BigInt::from(1);
        assert!(*v == [one.clone(), BigInt::from(-2), one.clone()] || *v == [-one.clone(), BigInt::from(2), -one]);
    }

    #[test]
    fn monoid_line_potion_is_trivial() {
        let r = Arc::new(monoid_line());
        let p = potion_generators(&fam(&r, &["X"])).unwrap();
        assert!(p.generators.is_empty());
        assert!(p.relation_lattice.is_empty());
    }

    #[test]
    fn torsion_graded_line() {
        let r = Arc::new(z2_line());
        let f = fam(&r, &["x"]);
        let p = potion_generators(&f).unwrap();
        assert_eq!(rendered(&p), set(&["x^2", "1/x^2"]));
        assert_eq!(p.laurent_set(), oracle_laurent(&f, 4));
    }

    #[test]
    fn non_monomial_family_rejected() {
        let r = Arc::new(projective_space(1));
        let f = fam(&r, &["x0 + x1"]);
        assert!(matches!(potion_generators(&f), Err(Error::NonMonomialFamily(_))));
    }

    #[test]
    fn product_chart_matches_oracle() {
        let r = Arc::new(product_p1_p1());
        let f = fam(&r, &["x0", "y0"]);
        let p = potion_generators(&f).unwrap();
        assert_eq!(rendered(&p), set(&["x1/x0", "y1/y0"]));
        assert_eq!(p.laurent_set(), oracle_laurent(&f, 3));
        let g = fam(&r, &["x0*y0"]);
        let q = potion_generators(&g).unwrap();
        assert_eq!(q.laurent_set(), oracle_laurent(&g, 3));
    }

    #[test]
    fn express_examples() {
        let p1 = Arc::new(projective_space(1));
        let f = fam(&p1, &["x0"]);
        let p = potion_generators(&f).unwrap();
        let e = express_in_generators(&frac(&f, "x1^2", &[2]), &p, DEFAULT_EXPRESS_BOUND)
            .unwrap()
            .unwrap();
        assert_eq!(e.exponents, vec![2]);
        let e = express_in_generators(&LocFraction::one(f.clone()), &p, DEFAULT_EXPRESS_BOUND)
            .unwrap()
            .unwrap();
        assert_eq!(e.exponents, vec![0]);
        assert_eq!(
            express_in_generators(&frac(&f, "x1", &[0]), &p, DEFAULT_EXPRESS_BOUND),
            Err(Error::DegreeNonzero)
        );
        // outside the potion: x0/x1 is not in k[x1/x0]
        let g = fam(&p1, &["x0", "x1"]);
        let pg = potion_generators(&g).unwrap();
        assert_eq!(pg.generators.len(), 2);
        let pf_only = potion_generators(&fam(&p1, &["x0"])).unwrap();
        assert_eq!(
            express_in_generators(&frac(&g, "x0", &[0, 1]), &pf_only, DEFAULT_EXPRESS_BOUND),
            Err(Error::FamilyMismatch)
        );
        let h = pf_only.family.clone();
        let beyond = frac(&h, "x1^13", &[13]);
        assert_eq!(
            express_in_generators(&beyond, &pf_only, DEFAULT_EXPRESS_BOUND).unwrap(),
            None
        );

        let w = Arc::new(weighted_112());
        let fz = fam(&w, &["z"]);
        let pz = potion_generators(&fz).unwrap();
        let e = express_in_generators(&frac(&fz, "x^2*y^2", &[2]), &pz, DEFAULT_EXPRESS_BOUND)
            .unwrap()
            .unwrap();
        assert!(pz.product(&e.exponents).equals(&frac(&fz, "x^2*y^2", &[2])).unwrap());
        assert_eq!(e.exponents.iter().sum::<u64>(), 2);
    }

    #[test]
    fn relations_hold() {
        let w = Arc::new(weighted_112());
        let p = potion_generators(&fam(&w, &["z"])).unwrap();
        for v in &p.relation_lattice {
            let (a, b) = p.signed_product(v);
            assert!(a.equals(&b).unwrap());
        }
    }
}
