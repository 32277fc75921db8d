use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Write;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::field::{Coeff, CoeffField};

/// Exponent vector of a monomial.
pub type Exponents = Vec<u64>;

/// Sparse polynomial over a [`CoeffField`]. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    field: CoeffField,
    nvars: usize,
    terms: BTreeMap<Exponents, Coeff>,
}

impl Polynomial {
    pub fn zero(field: CoeffField, nvars: usize) -> Self {
        Self {
            field,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: CoeffField, nvars: usize, c: Coeff) -> Self {
        Self::term(field, c, vec![0; nvars])
    }

    pub fn one(field: CoeffField, nvars: usize) -> Self {
        Self::constant(field, nvars, field.one())
    }

    /// `c·x^exps`; `c` must already be a field element.
    pub fn term(field: CoeffField, c: Coeff, exps: Exponents) -> Self {
        let nvars = exps.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Self { field, nvars, terms }
    }

    pub fn monomial(field: CoeffField, exps: Exponents) -> Self {
        Self::term(field, field.one(), exps)
    }

    pub fn var(field: CoeffField, nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(field, e)
    }

    pub fn field(&self) -> CoeffField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(e, c)| e.iter().all(|&x| x == 0) && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &Coeff)> {
        self.terms.iter()
    }

    /// Single-term polynomials, including nonzero constants.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// `(coefficient, exponents)` of a single-term polynomial.
    pub fn as_monomial(&self) -> Option<(&Coeff, &Exponents)> {
        if self.terms.len() != 1 {
            return None;
        }
        self.terms.iter().next().map(|(e, c)| (c, e))
    }

    pub fn same_ring(&self, other: &Self) -> bool {
        self.field == other.field && self.nvars == other.nvars
    }

    fn assert_same_ring(&self, other: &Self) {
        assert!(
            self.same_ring(other),
            "polynomials over different rings: {}[{}] vs {}[{}]",
            self.field,
            self.nvars,
            other.field,
            other.nvars
        );
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        let mut out = Self::zero(self.field, self.nvars);
        for (e, a) in &self.terms {
            let v = self.field.mul(a, c);
            if !v.is_zero() {
                out.terms.insert(e.clone(), v);
            }
        }
        out
    }

    pub fn mul_monomial(&self, exps: &[u64]) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (add_exps(e, exps), c.clone())).collect();
        Self {
            field: self.field,
            nvars: self.nvars,
            terms,
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.field, self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes `images[i]` for the `i`-th variable.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let target_nvars = images.first().map_or(0, |p| p.nvars);
        let mut out = Polynomial::zero(self.field, target_nvars);
        for (e, c) in &self.terms {
            let mut t = Polynomial::constant(self.field, target_nvars, c.clone());
            for (img, &k) in images.iter().zip(e) {
                if k > 0 {
                    t = &t * &img.pow(k);
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Re-expresses the polynomial over another field.
    pub fn change_field(&self, field: CoeffField) -> crate::Result<Polynomial> {
        let mut out = Polynomial::zero(field, self.nvars);
        for (e, c) in &self.terms {
            let v = field.reduce(c)?;
            if !v.is_zero() {
                out.terms.insert(e.clone(), v);
            }
        }
        Ok(out)
    }

    /// Renders in conventional infix using `names` for the variables,
    /// highest monomial first.
    pub fn render(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if negative {
                    s.push('-');
                }
            } else {
                s.push_str(if negative { " - " } else { " + " });
            }
            let mono = render_monomial(e, names);
            match (mag.is_one(), mono.is_empty()) {
                (true, true) => s.push('1'),
                (true, false) => s.push_str(&mono),
                (false, true) => {
                    let _ = write!(s, "{mag}");
                }
                (false, false) => {
                    let _ = write!(s, "{mag}*{mono}");
                }
            }
        }
        s
    }
}

fn render_monomial(e: &[u64], names: &[String]) -> String {
    let mut s = String::new();
    for (i, &k) in e.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if !s.is_empty() {
            s.push('*');
        }
        s.push_str(&names[i]);
        if k > 1 {
            let _ = write!(s, "^{k}");
        }
    }
    s
}

pub(crate) fn add_exps(a: &[u64], b: &[u64]) -> Exponents {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.checked_add(*y).expect("exponent overflow"))
        .collect()
}

fn total_degree(e: &[u64]) -> u64 {
    e.iter().sum()
}

fn monomial_cmp(a: &[u64], b: &[u64]) -> Ordering {
    total_degree(a).cmp(&total_degree(b)).then_with(|| b.cmp(a))
}

/// Orders by support, lowest total degree first and `x0` before `x1`; used
/// for canonical family keys.
impl Ord for Polynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a: Vec<_> = self.terms.iter().collect();
        let mut b: Vec<_> = other.terms.iter().collect();
        a.sort_by(|x, y| monomial_cmp(x.0, y.0));
        b.sort_by(|x, y| monomial_cmp(x.0, y.0));
        for (x, y) in a.iter().zip(&b) {
            let o = monomial_cmp(x.0, y.0).then_with(|| x.1.cmp(y.1));
            if o != Ordering::Equal {
                return o;
            }
        }
        a.len()
            .cmp(&b.len())
            .then_with(|| self.field.cmp(&other.field))
            .then_with(|| self.nvars.cmp(&other.nvars))
    }
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ring(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            let v = match out.terms.get(e) {
                Some(a) => self.field.add(a, c),
                None => c.clone(),
            };
            if v.is_zero() {
                out.terms.remove(e);
            } else {
                out.terms.insert(e.clone(), v);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), self.field.neg(c))).collect();
        Polynomial {
            field: self.field,
            nvars: self.nvars,
            terms,
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.assert_same_ring(rhs);
        let mut terms: BTreeMap<Exponents, Coeff> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e = add_exps(ea, eb);
                let c = self.field.mul(ca, cb);
                let v = match terms.get(&e) {
                    Some(x) => self.field.add(x, &c),
                    None => c,
                };
                if v.is_zero() {
                    terms.remove(&e);
                } else {
                    terms.insert(e, v);
                }
            }
        }
        Polynomial {
            field: self.field,
            nvars: self.nvars,
            terms,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    const Q: CoeffField = CoeffField::Rationals;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| alloc::format!("x{i}")).collect()
    }

    fn poly(terms: &[(i64, [u64; 2])], field: CoeffField) -> Polynomial {
        let mut p = Polynomial::zero(field, 2);
        for (c, e) in terms {
            p = &p + &Polynomial::term(field, field.from_int(*c), e.to_vec());
        }
        p
    }

    // Naive oracle: dense coefficient table, schoolbook product.
    fn dense(p: &Polynomial) -> BTreeMap<Exponents, Coeff> {
        p.terms().map(|(e, c)| (e.clone(), c.clone())).collect()
    }

    fn naive_mul(a: &Polynomial, b: &Polynomial) -> BTreeMap<Exponents, Coeff> {
        let mut out: BTreeMap<Exponents, Coeff> = BTreeMap::new();
        for (ea, ca) in a.terms() {
            for (eb, cb) in b.terms() {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                *out.entry(e).or_insert_with(Coeff::zero) += ca * cb;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    #[test]
    fn render_examples() {
        let p = poly(&[(3, [0, 1]), (1, [2, 0])], Q);
        assert_eq!(p.render(&names(2)), "x0^2 + 3*x1");
        let q = poly(&[(-1, [1, 1]), (2, [0, 0])], Q);
        assert_eq!(q.render(&names(2)), "-x0*x1 + 2");
        assert_eq!(Polynomial::zero(Q, 2).render(&names(2)), "0");
        assert_eq!(Polynomial::one(Q, 2).render(&names(2)), "1");
    }

    #[test]
    fn pow_and_substitute() {
        let x0 = Polynomial::var(Q, 2, 0);
        let x1 = Polynomial::var(Q, 2, 1);
        let s = &x0 + &x1;
        let sq = s.pow(2);
        assert_eq!(sq.render(&names(2)), "x0^2 + 2*x0*x1 + x1^2");
        let swapped = sq.substitute(&[x1.clone(), x0.clone()]);
        assert_eq!(swapped, sq);
        assert!(s.pow(0).is_one());
    }

    #[test]
    fn characteristic_matters() {
        let f = CoeffField::Prime(2);
        let s = poly(&[(1, [1, 0]), (1, [0, 1])], f);
        assert_eq!(s.pow(2).render(&names(2)), "x0^2 + x1^2");
        assert_eq!(f.from_int(3).to_string(), "1");
    }

    #[test]
    fn canonical_order() {
        let x0 = Polynomial::var(Q, 2, 0);
        let x1 = Polynomial::var(Q, 2, 1);
        let x01 = &x0 * &x1;
        let mut v = vec![x01.clone(), x1.clone(), x0.clone()];
        v.sort();
        assert_eq!(v, vec![x0, x1, x01]);
    }

    fn arb_poly(field: CoeffField) -> impl Strategy<Value = Polynomial> {
        proptest::collection::vec((-3i64..=3, 0u64..3, 0u64..3), 0..4).prop_map(move |ts| {
            let mut p = Polynomial::zero(field, 2);
            for (c, a, b) in ts {
                p = &p + &Polynomial::term(field, field.from_int(c), vec![a, b]);
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_axioms_over_q(a in arb_poly(Q), b in arb_poly(Q), c in arb_poly(Q)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
            prop_assert_eq!(dense(&(&a * &b)), naive_mul(&a, &b));
        }

        #[test]
        fn ring_axioms_over_f7(a in arb_poly(CoeffField::Prime(7)), b in arb_poly(CoeffField::Prime(7)), c in arb_poly(CoeffField::Prime(7))) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!(a.terms().all(|(_, c)| !c.is_zero()));
        }
    }
}
