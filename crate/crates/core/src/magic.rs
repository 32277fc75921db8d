//! Potions of a union as localizations: `A_(f ∪ g) ≅ A_(f)[(bⱼ^{nⱼ}/a^{νⱼ})⁻¹]`.
//!
//! Here `f = {aᵢ}` must be relevant and closed under monomial divisors, and
//! each new element `bⱼ` of `g` gets a witness `bⱼ^{nⱼ} ⌣ a^{νⱼ}`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::graded_ring::{is_relevant, HomFamily, Polynomial};
use crate::potion::{express_in_generators, potion_generators, Expression, LocFraction, PotionPresentation};

/// `b^n ⌣ a^nu`: `n·deg(b) = Σ nuᵢ·deg(aᵢ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub n: u64,
    pub nu: Vec<i64>,
}

/// `f` together with every variable dividing one of its elements.
pub fn divisor_closure(f: &HomFamily) -> Result<HomFamily> {
    if !f.all_monomial() {
        return Err(Error::NonMonomialFamily(f.render()));
    }
    let ring = f.ring();
    let mut used = BTreeSet::new();
    for p in f.elements() {
        let (_, e) = p.as_monomial().expect("checked monomial");
        used.extend(e.iter().enumerate().filter(|(_, &x)| x > 0).map(|(i, _)| i));
    }
    let vars: Vec<Polynomial> = used.into_iter().map(|i| ring.var(i)).collect();
    f.union(&HomFamily::new(ring.clone(), vars)?)
}

pub fn is_divisor_closed(f: &HomFamily) -> Result<bool> {
    Ok(divisor_closure(f)?.len() == f.len())
}

/// The canonical map `A_(f) → A_(f ∪ g)`.
pub fn chi(fr: &LocFraction, g: &HomFamily) -> Result<LocFraction> {
    let union = Arc::new(fr.family().union(g)?);
    fr.over_family(union)
}

fn to_i64(x: &num_bigint::BigInt) -> Result<i64> {
    x.to_i64()
        .ok_or_else(|| Error::Invariant(format!("witness coefficient {x} exceeds i64")))
}

/// Least `n > 0` with `n·deg(b) ∈ ⟨deg aᵢ⟩`, with the Smith-form coefficients.
pub fn find_witness(f: &HomFamily, b: &Polynomial) -> Result<Witness> {
    let cert = is_relevant(f)?;
    if !cert.relevant {
        return Err(Error::NotRelevant(f.render()));
    }
    let ring = f.ring();
    let group = ring.group();
    let db = ring.degree_of(b)?;
    let Some((n, nu)) = group.minimal_positive_multiple(&db, f.degrees())? else {
        return Err(Error::NoWitness(ring.render(b)));
    };
    let n = n
        .to_u64()
        .ok_or_else(|| Error::Invariant(format!("witness multiple {n} exceeds u64")))?;
    let nu = nu.iter().map(to_i64).collect::<Result<Vec<_>>>()?;
    Ok(Witness { n, nu })
}

/// `A_(f ∪ g)` presented as `A_(f)` with the fractions `bⱼ^{nⱼ}/a^{νⱼ}` inverted.
#[derive(Clone, Debug)]
pub struct LocalizedPresentation {
    pub base: PotionPresentation,
    /// `f ∪ g`; its elements past `f.len()` are the `bⱼ`.
    pub union: Arc<HomFamily>,
    pub witnesses: Vec<Witness>,
    /// `bⱼ^{nⱼ}/a^{νⱼ}` over `f`.
    pub inverted: Vec<LocFraction>,
    /// Each inverted fraction in terms of the generators of `A_(f)`.
    pub expressions: Vec<Expression>,
}

/// Rewriting of a fraction over `f ∪ g` as `bracket · Π invertedⱼ^{−m}`.
#[derive(Clone, Debug)]
pub struct BackwardImage {
    /// A degree-zero fraction over `f`.
    pub bracket: LocFraction,
    pub m: u64,
}

/// Builds the localized presentation for `f` (relevant, monomial,
/// divisor-closed) and the extra elements `g`. `bound` caps the search that
/// writes each inverted fraction in the generators of `A_(f)`.
pub fn localized_presentation(f: &Arc<HomFamily>, g: Option<&HomFamily>, bound: u64) -> Result<LocalizedPresentation> {
    let base = potion_generators(f)?;
    if !is_relevant(f)?.relevant {
        return Err(Error::NotRelevant(f.render()));
    }
    let union = match g {
        Some(g) => Arc::new(f.union(g)?),
        None => f.clone(),
    };
    if !union.all_monomial() {
        return Err(Error::NonMonomialFamily(union.render()));
    }
    let mut witnesses = Vec::new();
    let mut inverted = Vec::new();
    let mut expressions = Vec::new();
    for b in &union.elements()[f.len()..] {
        let w = find_witness(f, b)?;
        let mut num = b.pow(w.n);
        let mut denom = vec![0u64; f.len()];
        for (i, &v) in w.nu.iter().enumerate() {
            if v < 0 {
                num = &num * &f.elements()[i].pow(v.unsigned_abs());
            } else {
                denom[i] = v as u64;
            }
        }
        let fr = LocFraction::new(num, denom, f.clone())?;
        let expr = express_in_generators(&fr, &base, bound)?.ok_or_else(|| Error::BoundExceeded(fr.render()))?;
        witnesses.push(w);
        inverted.push(fr);
        expressions.push(expr);
    }
    Ok(LocalizedPresentation {
        base,
        union,
        witnesses,
        inverted,
        expressions,
    })
}

impl LocalizedPresentation {
    pub fn family(&self) -> &Arc<HomFamily> {
        &self.base.family
    }

    /// `invertedⱼ^{-1} = a^{νⱼ}/bⱼ^{nⱼ}` over `f ∪ g`.
    fn inverse_inverted(&self, j: usize) -> Result<LocFraction> {
        let f = self.family();
        let w = &self.witnesses[j];
        let mut num = self.union.ring().one();
        let mut denom = vec![0u64; self.union.len()];
        for (i, &v) in w.nu.iter().enumerate() {
            if v > 0 {
                num = &num * &f.elements()[i].pow(v as u64);
            } else {
                denom[i] = v.unsigned_abs();
            }
        }
        denom[f.len() + j] = w.n;
        LocFraction::new(num, denom, self.union.clone())
    }

    /// `φ(fr ⊗ Π invertedⱼ^{eⱼ})` in `A_(f ∪ g)`.
    pub fn phi_forward(&self, fr: &LocFraction, exps: &[i64]) -> Result<LocFraction> {
        if exps.len() != self.inverted.len() {
            return Err(Error::DimensionMismatch {
                expected: self.inverted.len(),
                found: exps.len(),
            });
        }
        let mut acc = fr.over_family(self.union.clone())?;
        for (j, &e) in exps.iter().enumerate() {
            let unit = if e >= 0 {
                self.inverted[j].over_family(self.union.clone())?
            } else {
                self.inverse_inverted(j)?
            };
            acc = acc.mul(&unit.pow(e.unsigned_abs()))?;
        }
        Ok(acc)
    }

    /// Writes `fr = x/(a^θ b^γ)` as `[x·Π bⱼ^{nⱼm−γⱼ} / (a^θ·Π a^{m νⱼ})] · Π (a^{νⱼ}/bⱼ^{nⱼ})^m`
    /// with the least admissible `m`.
    pub fn phi_backward(&self, fr: &LocFraction) -> Result<BackwardImage> {
        if !crate::potion::same_family(fr.family(), &self.union) {
            return Err(Error::FamilyMismatch);
        }
        let f = self.family();
        let k = f.len();
        let gamma = &fr.denom_exps()[k..];
        let m = gamma
            .iter()
            .zip(&self.witnesses)
            .map(|(&c, w)| c.div_ceil(w.n))
            .max()
            .unwrap_or(0);
        let mut num = fr.numerator().clone();
        let mut denom: Vec<u64> = fr.denom_exps()[..k].to_vec();
        for ((j, &c), w) in gamma.iter().enumerate().zip(&self.witnesses) {
            let b = &self.union.elements()[k + j];
            num = &num * &b.pow(w.n * m - c);
            for (i, &v) in w.nu.iter().enumerate() {
                let e = v.unsigned_abs() * m;
                if v < 0 {
                    num = &num * &f.elements()[i].pow(e);
                } else {
                    denom[i] += e;
                }
            }
        }
        let bracket = LocFraction::new(num, denom, f.clone())?;
        Ok(BackwardImage { bracket, m })
    }

    /// `phi_forward(phi_backward(fr))`, which must equal `fr`.
    pub fn recombine(&self, image: &BackwardImage) -> Result<LocFraction> {
        let exps = vec![-(image.m as i64); self.inverted.len()];
        self.phi_forward(&image.bracket, &exps)
    }
}

/// Outcome of the exact checks in [`verify_iso`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoReport {
    /// Every generator of `A_(f ∪ g)` is recovered from its backward image,
    /// and each bracket lies in the span of the generators of `A_(f)`.
    pub surjectivity: bool,
    /// Sample elements of the localization are equal iff their images are.
    pub injectivity: bool,
    /// `φ` preserves 1, products and sums on the sample.
    pub hom_law: bool,
    pub generators_checked: usize,
    pub sample_size: usize,
    pub failures: Vec<String>,
}

impl IsoReport {
    pub fn passed(&self) -> bool {
        self.surjectivity && self.injectivity && self.hom_law
    }
}

type SourceElement = (LocFraction, Vec<i64>);

/// Equality in `A_(f)[S⁻¹]`: clear the unit exponents to a common floor.
fn source_equal(lp: &LocalizedPresentation, a: &SourceElement, b: &SourceElement) -> Result<bool> {
    let mut lhs = a.0.clone();
    let mut rhs = b.0.clone();
    for (j, (&ea, &eb)) in a.1.iter().zip(&b.1).enumerate() {
        let lo = ea.min(eb);
        lhs = lhs.mul(&lp.inverted[j].pow((ea - lo) as u64))?;
        rhs = rhs.mul(&lp.inverted[j].pow((eb - lo) as u64))?;
    }
    lhs.equals(&rhs)
}

/// Exact checks that `φ: A_(f)[S⁻¹] → A_(f ∪ g)` is an isomorphism on a sample.
pub fn verify_iso(f: &Arc<HomFamily>, g: Option<&HomFamily>, bound: u64) -> Result<IsoReport> {
    let lp = localized_presentation(f, g, bound)?;
    let mut failures = Vec::new();

    let top = potion_generators(&lp.union)?;
    let mut surjectivity = true;
    for gen in &top.generators {
        let image = lp.phi_backward(&gen.fraction)?;
        let back = lp.recombine(&image)?;
        let in_base = image.bracket.is_zero()
            || (image.bracket.degree()? == f.ring().group().zero()
                && express_in_generators(&image.bracket, &lp.base, bound)?.is_some());
        if !back.equals(&gen.fraction)? || !in_base {
            surjectivity = false;
            failures.push(format!("surjectivity: {}", gen.fraction.render()));
        }
    }

    // sample: products of at most two base generators times unit powers in {-1,0,1}
    let mut fracs = vec![LocFraction::one(f.clone())];
    let gens = &lp.base.generators;
    for (i, a) in gens.iter().enumerate() {
        fracs.push(a.fraction.clone());
        for b in &gens[i..] {
            fracs.push(a.fraction.mul(&b.fraction)?);
        }
    }
    let j = lp.inverted.len();
    let mut unit_exps: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..j {
        unit_exps = unit_exps
            .into_iter()
            .flat_map(|v| {
                [-1i64, 0, 1].into_iter().map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    let mut sample: Vec<SourceElement> = Vec::new();
    for fr in &fracs {
        for e in &unit_exps {
            sample.push((fr.clone(), e.clone()));
        }
    }
    let images = sample
        .iter()
        .map(|(fr, e)| lp.phi_forward(fr, e))
        .collect::<Result<Vec<_>>>()?;

    let mut injectivity = true;
    for a in 0..sample.len() {
        for b in a + 1..sample.len() {
            let src = source_equal(&lp, &sample[a], &sample[b])?;
            let tgt = images[a].equals(&images[b])?;
            if src != tgt {
                injectivity = false;
                failures.push(format!("injectivity: {} vs {}", images[a].render(), images[b].render()));
            }
        }
    }

    let mut hom_law = lp.phi_forward(&LocFraction::one(f.clone()), &vec![0; j])?.is_one();
    if !hom_law {
        failures.push(String::from("hom law: 1 is not sent to 1"));
    }
    for a in 0..sample.len() {
        for b in a..sample.len() {
            let (fa, ea) = &sample[a];
            let (fb, eb) = &sample[b];
            let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let prod = lp.phi_forward(&fa.mul(fb)?, &e)?;
            let mut ok = prod.equals(&images[a].mul(&images[b])?)?;
            if ea == eb {
                let sum = lp.phi_forward(&fa.add(fb)?, ea)?;
                ok &= sum.equals(&images[a].add(&images[b])?)?;
            }
            if !ok {
                hom_law = false;
                failures.push(format!("hom law: {} and {}", images[a].render(), images[b].render()));
            }
        }
    }

    Ok(IsoReport {
        surjectivity,
        injectivity,
        hom_law,
        generators_checked: top.generators.len(),
        sample_size: sample.len(),
        failures,
    })
}
