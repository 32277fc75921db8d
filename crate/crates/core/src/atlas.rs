//! `Proj_F(A)` as gluing data: charts `U_f = Spec A_(f)`, overlaps
//! `U_{f,g} = Spec A_(f ∪ g)`, twist transitions, and morphisms.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graded_ring::{is_relevant, CoeffField, GradedRing, HomFamily, Polynomial, RelevanceCertificate};
use crate::magic::{divisor_closure, localized_presentation, LocalizedPresentation};
use crate::potion::{express_in_generators, potion_generators, LocFraction, PotionPresentation};
use crate::zlattice::GroupElement;

/// Chart key: the rendering of the canonical (sorted, deduplicated) family.
pub type FamilyKey = String;

pub fn family_key(f: &HomFamily) -> FamilyKey {
    f.canonical().render()
}

#[derive(Clone, Debug)]
pub struct Chart {
    pub family: Arc<HomFamily>,
    pub certificate: RelevanceCertificate,
    pub presentation: PotionPresentation,
}

#[derive(Clone, Debug)]
pub struct Overlap {
    /// The canonical form of `f ∪ g`.
    pub family: Arc<HomFamily>,
    pub presentation: PotionPresentation,
    /// `A_(f ∪ g)` as a localization of `A_(f)` (over the divisor closure of `f`).
    pub over_first: LocalizedPresentation,
    pub over_second: LocalizedPresentation,
}

/// Outcome of comparing the two restriction routes into `U_f ∩ U_g ∩ U_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleCheck {
    pub base: FamilyKey,
    pub others: [FamilyKey; 2],
    pub consistent: bool,
}

#[derive(Clone, Debug)]
pub struct Atlas {
    pub ring: Arc<GradedRing>,
    pub charts: BTreeMap<FamilyKey, Chart>,
    /// Keyed by the ordered pair of chart keys, smaller key first.
    pub overlaps: BTreeMap<(FamilyKey, FamilyKey), Overlap>,
    pub triples: Vec<TripleCheck>,
}

impl Atlas {
    pub fn overlap(&self, a: &str, b: &str) -> Option<&Overlap> {
        let key = if a <= b {
            (String::from(a), String::from(b))
        } else {
            (String::from(b), String::from(a))
        };
        self.overlaps.get(&key)
    }

    pub fn triples_consistent(&self) -> bool {
        self.triples.iter().all(|t| t.consistent)
    }
}

fn canonical_arc(f: &HomFamily) -> Arc<HomFamily> {
    Arc::new(f.canonical())
}

fn closure_arc(f: &HomFamily) -> Result<Arc<HomFamily>> {
    Ok(Arc::new(divisor_closure(f)?))
}

/// Builds the atlas of `families`, which merge when their canonical forms
/// agree. `bound` caps the searches that write fractions in chart generators.
pub fn build_atlas(ring: &Arc<GradedRing>, families: &[HomFamily], bound: u64) -> Result<Atlas> {
    let mut charts = BTreeMap::new();
    for f in families {
        if !(Arc::ptr_eq(f.ring(), ring) || **f.ring() == **ring) {
            return Err(Error::RingMismatch);
        }
        if !f.all_monomial() {
            return Err(Error::NonMonomialFamily(f.render()));
        }
        let family = canonical_arc(f);
        let certificate = is_relevant(&family)?;
        if !certificate.relevant {
            return Err(Error::NotRelevant(family.render()));
        }
        let presentation = potion_generators(&family)?;
        charts.insert(
            family.render(),
            Chart {
                family,
                certificate,
                presentation,
            },
        );
    }

    let keys: Vec<FamilyKey> = charts.keys().cloned().collect();
    let mut overlaps = BTreeMap::new();
    for (i, a) in keys.iter().enumerate() {
        for b in &keys[i + 1..] {
            let fa = &charts[a].family;
            let fb = &charts[b].family;
            let family = canonical_arc(&fa.union(fb)?);
            let presentation = potion_generators(&family)?;
            let over_first = localized_presentation(&closure_arc(fa)?, Some(fb), bound)?;
            let over_second = localized_presentation(&closure_arc(fb)?, Some(fa), bound)?;
            overlaps.insert(
                (a.clone(), b.clone()),
                Overlap {
                    family,
                    presentation,
                    over_first,
                    over_second,
                },
            );
        }
    }

    let mut triples = Vec::new();
    for (i, a) in keys.iter().enumerate() {
        for (j, b) in keys.iter().enumerate().skip(i + 1) {
            for c in &keys[j + 1..] {
                let fs = [a, b, c].map(|k| charts[k].family.clone());
                for base in 0..3 {
                    let o1 = (base + 1) % 3;
                    let o2 = (base + 2) % 3;
                    let consistent = triple_consistent(&fs[base], &fs[o1], &fs[o2], bound)?;
                    triples.push(TripleCheck {
                        base: fs[base].render(),
                        others: [fs[o1].render(), fs[o2].render()],
                        consistent,
                    });
                }
            }
        }
    }

    Ok(Atlas {
        ring: ring.clone(),
        charts,
        overlaps,
        triples,
    })
}

/// `U_{f,g} ∩ U_{f,k}` computed by localizing `A_(f ∪ g)` at `k` and
/// `A_(f ∪ k)` at `g` must both give `A_(f ∪ g ∪ k)`: every generator of the
/// latter round-trips through each route, and the generators of each route's
/// base land in its span.
fn triple_consistent(f: &HomFamily, g: &HomFamily, k: &HomFamily, bound: u64) -> Result<bool> {
    let target = potion_generators(&canonical_arc(&f.union(g)?.union(k)?))?;
    for (first, second) in [(g, k), (k, g)] {
        let route = localized_presentation(&closure_arc(&f.union(first)?)?, Some(second), bound)?;
        for t in &target.generators {
            let fr = t.fraction.over_family(route.union.clone())?;
            let image = route.phi_backward(&fr)?;
            if !route.recombine(&image)?.equals(&fr)? {
                return Ok(false);
            }
            if express_in_generators(&image.bracket, &route.base, bound)?.is_none() {
                return Ok(false);
            }
        }
        let units = route.inverted.iter().cloned();
        let base_gens = route.base.generators.iter().map(|g| g.fraction.clone());
        for fr in base_gens.chain(units) {
            // A_(closure(f ∪ first)) = A_(f ∪ first), so these lie in A_(f ∪ g ∪ k)
            let widened = fr.over_family(Arc::new(fr.family().union(&target.family)?))?;
            let (_, laurent) = widened.laurent()?;
            let gens: Vec<Vec<i64>> = target.generators.iter().map(|g| g.laurent.clone()).collect();
            let ok = laurent.iter().all(|&x| x == 0) || express_laurent(&laurent, &gens, bound);
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn express_laurent(target: &[i64], gens: &[Vec<i64>], bound: u64) -> bool {
    fn go(
        t: &mut Vec<i64>,
        gens: &[Vec<i64>],
        from: usize,
        budget: u64,
        dead: &mut BTreeSet<(usize, u64, Vec<i64>)>,
    ) -> bool {
        if t.iter().all(|&x| x == 0) {
            return true;
        }
        if budget == 0 || dead.contains(&(from, budget, t.clone())) {
            return false;
        }
        for k in from..gens.len() {
            for (x, g) in t.iter_mut().zip(&gens[k]) {
                *x -= g;
            }
            let hit = go(t, gens, k, budget - 1, dead);
            for (x, g) in t.iter_mut().zip(&gens[k]) {
                *x += g;
            }
            if hit {
                return true;
            }
        }
        dead.insert((from, budget, t.clone()));
        false
    }
    go(&mut target.to_vec(), gens, 0, bound, &mut BTreeSet::new())
}

/// Trivializations of `O(α)` on each chart and the transition units.
#[derive(Clone, Debug)]
pub struct TwistData {
    pub alpha: GroupElement,
    /// `ν_f` with `deg a^{ν_f} = α`.
    pub per_chart: BTreeMap<FamilyKey, Vec<BigInt>>,
    /// `g_{fg} = a_f^{ν_f} / a_g^{ν_g}` over the canonical `f ∪ g`, for all
    /// ordered pairs including `f = g`.
    pub transitions: BTreeMap<(FamilyKey, FamilyKey), LocFraction>,
    /// `g_{fg}·g_{gh} = g_{fh}` on every ordered triple of charts.
    pub cocycle: bool,
    /// `g_{ff} = 1` and `g_{fg}·g_{gf} = 1`.
    pub units: bool,
}

/// `Π elementsᵢ^{eᵢ}` with signed exponents, as a fraction over `family`.
/// Exponents of repeated elements are summed first.
fn signed_power(family: &Arc<HomFamily>, factors: &[(&Polynomial, &BigInt)]) -> Result<LocFraction> {
    let mut net = vec![BigInt::zero(); family.len()];
    for (p, e) in factors {
        let i = family.index_of(p).ok_or(Error::FamilyMismatch)?;
        net[i] += *e;
    }
    let mut num = family.ring().one();
    let mut denom = vec![0u64; family.len()];
    for (i, e) in net.iter().enumerate() {
        let mag = e
            .abs()
            .to_u64()
            .ok_or_else(|| Error::Invariant(format!("twist exponent {e} exceeds u64")))?;
        if e.is_negative() {
            denom[i] = mag;
        } else {
            num = &num * &family.elements()[i].pow(mag);
        }
    }
    LocFraction::new(num, denom, family.clone())
}

fn transition(f: &HomFamily, nf: &[BigInt], g: &HomFamily, ng: &[BigInt]) -> Result<LocFraction> {
    let union = canonical_arc(&f.union(g)?);
    let neg: Vec<BigInt> = ng.iter().map(|x| -x).collect();
    let mut factors: Vec<(&Polynomial, &BigInt)> = f.elements().iter().zip(nf).collect();
    factors.extend(g.elements().iter().zip(&neg));
    signed_power(&union, &factors)
}

pub fn twist_data(atlas: &Atlas, alpha: &GroupElement) -> Result<TwistData> {
    let group = atlas.ring.group();
    let alpha = group.element(alpha.coords().to_vec())?;
    let mut per_chart = BTreeMap::new();
    for (key, chart) in &atlas.charts {
        if !group.generates(chart.family.degrees())? {
            return Err(Error::TwistObstruction(key.clone()));
        }
        let nu = group
            .subgroup_membership(&alpha, chart.family.degrees())?
            .ok_or_else(|| Error::TwistObstruction(key.clone()))?;
        per_chart.insert(key.clone(), nu);
    }

    let mut transitions = BTreeMap::new();
    for (a, ca) in &atlas.charts {
        for (b, cb) in &atlas.charts {
            let t = transition(&ca.family, &per_chart[a], &cb.family, &per_chart[b])?;
            if t.degree()? != group.zero() {
                return Err(Error::Invariant(format!(
                    "transition {} has nonzero degree",
                    t.render()
                )));
            }
            transitions.insert((a.clone(), b.clone()), t);
        }
    }

    let mut units = true;
    for (a, ca) in &atlas.charts {
        units &= transitions[&(a.clone(), a.clone())].is_one();
        for (b, cb) in &atlas.charts {
            let u = canonical_arc(&ca.family.union(&cb.family)?);
            let fg = transitions[&(a.clone(), b.clone())].over_family(u.clone())?;
            let gf = transitions[&(b.clone(), a.clone())].over_family(u)?;
            units &= fg.mul(&gf)?.is_one();
        }
    }

    let mut cocycle = true;
    for (a, ca) in &atlas.charts {
        for (b, cb) in &atlas.charts {
            for (c, cc) in &atlas.charts {
                let u = canonical_arc(&ca.family.union(&cb.family)?.union(&cc.family)?);
                let lift = |x: &FamilyKey, y: &FamilyKey| transitions[&(x.clone(), y.clone())].over_family(u.clone());
                let lhs = lift(a, b)?.mul(&lift(b, c)?)?;
                cocycle &= lhs.equals(&lift(a, c)?)?;
            }
        }
    }

    Ok(TwistData {
        alpha,
        per_chart,
        transitions,
        cocycle,
        units,
    })
}

/// A degree-preserving `k`-algebra map between polynomial rings graded by the
/// same group, given by the images of the variables.
#[derive(Clone, Debug)]
pub struct GradedRingMorphism {
    source: Arc<GradedRing>,
    target: Arc<GradedRing>,
    images: Vec<Polynomial>,
}

impl GradedRingMorphism {
    pub fn new(source: Arc<GradedRing>, target: Arc<GradedRing>, images: Vec<Polynomial>) -> Result<Self> {
        if source.group() != target.group() || source.field() != target.field() {
            return Err(Error::RingMismatch);
        }
        if images.len() != source.nvars() {
            return Err(Error::DimensionMismatch {
                expected: source.nvars(),
                found: images.len(),
            });
        }
        for (i, p) in images.iter().enumerate() {
            if !target.owns(p) {
                return Err(Error::RingMismatch);
            }
            if p.is_zero() {
                continue;
            }
            match target.degree_of(p) {
                Ok(d) if d == *source.var_degree(i) => {}
                _ => return Err(Error::DegreeMismatch(source.names()[i].clone())),
            }
        }
        Ok(Self { source, target, images })
    }

    /// Parses one infix image per source variable.
    pub fn parse(source: Arc<GradedRing>, target: Arc<GradedRing>, images: &[&str]) -> Result<Self> {
        let images = images.iter().map(|s| target.parse(s)).collect::<Result<Vec<_>>>()?;
        Self::new(source, target, images)
    }

    pub fn identity(ring: Arc<GradedRing>) -> Self {
        let images = (0..ring.nvars()).map(|i| ring.var(i)).collect();
        Self {
            source: ring.clone(),
            target: ring,
            images,
        }
    }

    pub fn source(&self) -> &Arc<GradedRing> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GradedRing> {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        if !self.source.owns(p) {
            return Err(Error::RingMismatch);
        }
        Ok(p.substitute(&self.images))
    }

    /// `self ∘ inner`: apply `inner` first.
    pub fn compose(&self, inner: &GradedRingMorphism) -> Result<GradedRingMorphism> {
        if *inner.target != *self.source {
            return Err(Error::RingMismatch);
        }
        let images = inner.images.iter().map(|p| self.apply(p)).collect::<Result<Vec<_>>>()?;
        Ok(Self {
            source: inner.source.clone(),
            target: self.target.clone(),
            images,
        })
    }
}

/// `A_(f) → B_(ψ(f))`, `x/a^ν ↦ ψ(x)/ψ(a)^ν`.
#[derive(Clone, Debug)]
pub struct ChartMap {
    pub psi: GradedRingMorphism,
    pub source: Arc<HomFamily>,
    pub image: Arc<HomFamily>,
    /// Relevance of `ψ(f)`. When `ψ(f)` is not monomial the direct test may
    /// miss divisors; then the degrees of the `ψ(xᵢ)` dividing `ψ(f)` are
    /// used instead and `exact` is false.
    pub certificate: RelevanceCertificate,
}

impl ChartMap {
    pub fn map(&self, fr: &LocFraction) -> Result<LocFraction> {
        if !crate::potion::same_family(fr.family(), &self.source) {
            return Err(Error::FamilyMismatch);
        }
        let num = self.psi.apply(fr.numerator())?;
        let out = LocFraction::new(num, fr.denom_exps().to_vec(), self.image.clone())?;
        if !out.is_zero() && out.degree()? != fr.degree()? {
            return Err(Error::Invariant(format!("{} changed degree", fr.render())));
        }
        Ok(out)
    }
}

/// Image families `ψ(f)` with their chart maps, in input order.
pub fn functorial_image(psi: &GradedRingMorphism, families: &[Arc<HomFamily>]) -> Result<Vec<ChartMap>> {
    let mut out = Vec::with_capacity(families.len());
    for f in families {
        if !Arc::ptr_eq(f.ring(), psi.source()) && **f.ring() != **psi.source() {
            return Err(Error::RingMismatch);
        }
        let src_cert = is_relevant(f)?;
        if !src_cert.relevant {
            return Err(Error::NotRelevant(f.render()));
        }
        let elements = f.elements().iter().map(|a| psi.apply(a)).collect::<Result<Vec<_>>>()?;
        let image = Arc::new(HomFamily::new(psi.target().clone(), elements)?);
        let direct = is_relevant(&image)?;
        let certificate = if direct.relevant || !src_cert.exact {
            direct
        } else {
            // ψ(xᵢ) divides ψ(a) whenever xᵢ divides a, in the same degree
            RelevanceCertificate {
                relevant: true,
                very_relevant: false,
                exact: false,
                degree_group_gens: src_cert.degree_group_gens.clone(),
                quotient_free_rank: src_cert.quotient_free_rank,
                quotient_invariants: src_cert.quotient_invariants.clone(),
            }
        };
        out.push(ChartMap {
            psi: psi.clone(),
            source: f.clone(),
            image,
            certificate,
        });
    }
    Ok(out)
}

pub const BASE_CHANGE_PRIME: u64 = 101;

/// Whether the potion generators of `f` have the same exponent data over
/// `Q` and over `GF(p)`.
pub fn base_change_invariance_at(f: &HomFamily, p: u64) -> Result<bool> {
    let field = CoeffField::prime(p)?;
    let over_q = f.transport(Arc::new(f.ring().with_field(CoeffField::Rationals)))?;
    let over_p = f.transport(Arc::new(f.ring().with_field(field)))?;
    let a = potion_generators(&Arc::new(over_q))?;
    let b = potion_generators(&Arc::new(over_p))?;
    let sa: BTreeSet<_> = a.exponent_data().into_iter().collect();
    let sb: BTreeSet<_> = b.exponent_data().into_iter().collect();
    Ok(sa == sb)
}

pub fn base_change_invariance(f: &HomFamily) -> Result<bool> {
    base_change_invariance_at(f, BASE_CHANGE_PRIME)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potion::DEFAULT_EXPRESS_BOUND;
    use crate::standard::*;

    const B: u64 = DEFAULT_EXPRESS_BOUND;

    fn fams(r: &Arc<GradedRing>, xs: &[&[&str]]) -> Vec<HomFamily> {
        xs.iter().map(|x| HomFamily::parse(r, x).unwrap()).collect()
    }

    fn gens(p: &PotionPresentation) -> BTreeSet<String> {
        p.generators.iter().map(|g| g.fraction.render()).collect()
    }

    fn set(xs: &[&str]) -> BTreeSet<String> {
        xs.iter().map(|s| String::from(*s)).collect()
    }

    #[test]
    fn p1_atlas() {
        let r = Arc::new(projective_space(1));
        let a = build_atlas(&r, &fams(&r, &[&["x0"], &["x1"]]), B).unwrap();
        assert_eq!(a.charts.len(), 2);
        assert_eq!(a.overlaps.len(), 1);
        assert_eq!(gens(&a.charts["{x0}"].presentation), set(&["x1/x0"]));
        assert_eq!(gens(&a.charts["{x1}"].presentation), set(&["x0/x1"]));
        let o = a.overlap("{x1}", "{x0}").unwrap();
        assert_eq!(gens(&o.presentation), set(&["x1/x0", "x0/x1"]));
        assert!(a.triples.is_empty());
    }

    #[test]
    fn trivial_atlas() {
        let r = Arc::new(monoid_line());
        let a = build_atlas(&r, &fams(&r, &[&["X"], &["X"]]), B).unwrap();
        assert_eq!(a.charts.len(), 1);
        assert!(a.charts["{X}"].presentation.generators.is_empty());
    }

    #[test]
    fn product_atlas() {
        let r = Arc::new(product_p1_p1());
        let fs = fams(&r, &[&["x0", "y0"], &["x0", "y1"], &["x1", "y0"], &["x1", "y1"]]);
        let a = build_atlas(&r, &fs, B).unwrap();
        assert_eq!(a.charts.len(), 4);
        assert!(a.charts.values().all(|c| c.presentation.generators.len() == 2));
        assert_eq!(a.overlaps.len(), 6);
        assert_eq!(a.triples.len(), 12);
        assert!(a.triples_consistent());
    }

    #[test]
    fn irrelevant_chart_rejected() {
        let r = Arc::new(product_p1_p1());
        match build_atlas(&r, &fams(&r, &[&["x0"]]), B) {
            Err(Error::NotRelevant(f)) => assert_eq!(f, "{x0}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn p1_twist() {
        let r = Arc::new(projective_space(1));
        let a = build_atlas(&r, &fams(&r, &[&["x0"], &["x1"]]), B).unwrap();
        let one = r.group().element_from_i64(&[1]).unwrap();
        let t = twist_data(&a, &one).unwrap();
        assert_eq!(t.per_chart["{x0}"], vec![BigInt::from(1)]);
        let g = &t.transitions[&(String::from("{x0}"), String::from("{x1}"))];
        assert_eq!(g.render(), "x0/x1");
        assert!(t.cocycle && t.units);
        let t0 = twist_data(&a, &r.group().zero()).unwrap();
        assert!(t0.transitions.values().all(LocFraction::is_one));
    }

    #[test]
    fn weighted_twist_obstructed() {
        let r = Arc::new(weighted_112());
        let a = build_atlas(&r, &fams(&r, &[&["x"], &["z"]]), B).unwrap();
        let one = r.group().element_from_i64(&[1]).unwrap();
        match twist_data(&a, &one) {
            Err(Error::TwistObstruction(f)) => assert_eq!(f, "{z}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn morphisms() {
        let r = Arc::new(projective_space(1));
        let psi = GradedRingMorphism::parse(r.clone(), r.clone(), &["x0", "x0 + x1"]).unwrap();
        let f = Arc::new(HomFamily::parse(&r, &["x0"]).unwrap());
        let maps = functorial_image(&psi, core::slice::from_ref(&f)).unwrap();
        let fr = LocFraction::new(r.parse("x1").unwrap(), vec![1], f.clone()).unwrap();
        let img = maps[0].map(&fr).unwrap();
        assert_eq!(img.render(), "(x0 + x1)/x0");
        assert_eq!(img.degree().unwrap(), r.group().zero());

        let id = functorial_image(&GradedRingMorphism::identity(r.clone()), core::slice::from_ref(&f)).unwrap();
        assert!(id[0]
            .map(&fr)
            .unwrap()
            .equals(&fr.over_family(id[0].image.clone()).unwrap())
            .unwrap());

        assert!(matches!(
            GradedRingMorphism::parse(r.clone(), r.clone(), &["x0^2", "x1"]),
            Err(Error::DegreeMismatch(v)) if v == "x0"
        ));

        let p2 = Arc::new(projective_space(2));
        let inc = GradedRingMorphism::parse(r.clone(), p2.clone(), &["x0", "x1"]).unwrap();
        let m = functorial_image(&inc, core::slice::from_ref(&f)).unwrap();
        assert_eq!(m[0].map(&fr).unwrap().render(), "x1/x0");

        // composition agrees with composing chart maps
        let phi = GradedRingMorphism::parse(r.clone(), r.clone(), &["x0", "2*x1 - x0"]).unwrap();
        let both = phi.compose(&psi).unwrap();
        let step1 = functorial_image(&psi, core::slice::from_ref(&f)).unwrap();
        let step2 = functorial_image(&phi, &[step1[0].image.clone()]).unwrap();
        let direct = functorial_image(&both, core::slice::from_ref(&f)).unwrap();
        for s in ["x1", "x0", "3*x1 - x0"] {
            let fr = LocFraction::new(r.parse(s).unwrap(), vec![1], f.clone()).unwrap();
            let two = step2[0].map(&step1[0].map(&fr).unwrap()).unwrap();
            let one = direct[0].map(&fr).unwrap();
            assert_eq!(one.numerator(), two.numerator());
            assert_eq!(one.denom_exps(), two.denom_exps());
        }
    }

    #[test]
    fn base_change() {
        let p2 = Arc::new(projective_space(2));
        assert!(base_change_invariance(&HomFamily::parse(&p2, &["x0"]).unwrap()).unwrap());
        let l = Arc::new(monoid_line());
        assert!(base_change_invariance(&HomFamily::parse(&l, &["X"]).unwrap()).unwrap());
        let w = Arc::new(weighted_112());
        assert!(base_change_invariance(&HomFamily::parse(&w, &["z"]).unwrap()).unwrap());
    }
}
