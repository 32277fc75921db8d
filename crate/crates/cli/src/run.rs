//! Executes the requests of a validated problem and assembles the result
//! document.

use std::collections::BTreeMap;
use std::sync::Arc;

use multiproj::atlas::{
    base_change_invariance_at, build_atlas, functorial_image, twist_data, Atlas, TwistData, BASE_CHANGE_PRIME,
};
use multiproj::graded_ring::{is_relevant, HomFamily, RelevanceCertificate, Verdict};
use multiproj::magic::{divisor_closure, localized_presentation, verify_iso, LocalizedPresentation, Witness};
use multiproj::potion::{potion_generators, LocFraction, PotionPresentation};
use multiproj::zlattice::{hilbert_basis, GroupElement, IntMatrix};
use multiproj::Error;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::problem::{Problem, Request};

pub const FORMAT_VERSION: u64 = 1;

/// Exit status of a run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok = 0,
    Spec = 2,
    Precondition = 3,
    Internal = 4,
}

impl Status {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    /// Bound for the searches that write fractions in chart generators.
    pub bound: u64,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            bound: multiproj::potion::DEFAULT_EXPRESS_BOUND,
        }
    }
}

pub fn big(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn bigs(xs: &[BigInt]) -> Value {
    Value::Array(xs.iter().map(big).collect())
}

fn degree(g: &GroupElement) -> Value {
    bigs(g.coords())
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::DimensionMismatch { .. } => "DimensionMismatch",
        Error::NotHomogeneous => "NotHomogeneous",
        Error::ZeroElement => "ZeroElement",
        Error::EmptyFamily => "EmptyFamily",
        Error::NonMonomialFamily(_) => "NonMonomialFamily",
        Error::NonMonomialFraction => "NonMonomialFraction",
        Error::FamilyMismatch => "FamilyMismatch",
        Error::RingMismatch => "RingMismatch",
        Error::NotRelevant(_) => "NotRelevant",
        Error::NoWitness(_) => "NoWitness",
        Error::DegreeNonzero => "DegreeNonzero",
        Error::TwistObstruction(_) => "TwistObstruction",
        Error::DegreeMismatch(_) => "DegreeMismatch",
        Error::BoundExceeded(_) => "BoundExceeded",
        Error::InvalidSystem(_) => "InvalidSystem",
        Error::NotPrime(_) => "NotPrime",
        Error::CoefficientNotDefined(_) => "CoefficientNotDefined",
        Error::Parse { .. } => "Parse",
        Error::Invariant(_) => "Invariant",
    }
}

fn status_of(e: &Error) -> Status {
    match e {
        Error::Invariant(_) => Status::Internal,
        _ => Status::Precondition,
    }
}

fn certificate(c: &RelevanceCertificate) -> Value {
    let verdict = match c.verdict() {
        Verdict::Relevant => "relevant",
        Verdict::NotRelevant => "not-relevant",
        Verdict::Inconclusive => "inconclusive",
    };
    json!({
        "verdict": verdict,
        "relevant": c.relevant,
        "very_relevant": c.very_relevant,
        "exact": c.exact,
        "degree_group_gens": c.degree_group_gens.iter().map(degree).collect::<Vec<_>>(),
        "quotient_free_rank": c.quotient_free_rank,
        "quotient_invariants": bigs(&c.quotient_invariants),
    })
}

fn presentation(p: &PotionPresentation) -> Value {
    let gens: Vec<Value> = p
        .generators
        .iter()
        .map(|g| {
            json!({
                "fraction": g.fraction.render(),
                "mu": g.mu,
                "nu": g.nu,
                "laurent": g.laurent,
            })
        })
        .collect();
    json!({
        "family": p.family.render(),
        "generators": gens,
        "relation_lattice": p.relation_lattice.iter().map(|v| bigs(v)).collect::<Vec<_>>(),
    })
}

fn witness(b: &str, w: &Witness) -> Value {
    json!({ "element": b, "n": w.n, "nu": w.nu })
}

fn localized(lp: &LocalizedPresentation) -> Value {
    let k = lp.family().len();
    let ring = lp.union.ring();
    let ws: Vec<Value> = lp.union.elements()[k..]
        .iter()
        .zip(&lp.witnesses)
        .map(|(b, w)| witness(&ring.render(b), w))
        .collect();
    json!({
        "base": lp.family().render(),
        "witnesses": ws,
        "inverted": lp.inverted.iter().map(LocFraction::render).collect::<Vec<_>>(),
        "inverted_in_generators": lp.expressions.iter().map(|e| e.exponents.clone()).collect::<Vec<_>>(),
    })
}

fn atlas_doc(a: &Atlas) -> Value {
    let charts: BTreeMap<&String, Value> = a
        .charts
        .iter()
        .map(|(k, c)| {
            (
                k,
                json!({
                    "certificate": certificate(&c.certificate),
                    "presentation": presentation(&c.presentation),
                }),
            )
        })
        .collect();
    let overlaps: Vec<Value> = a
        .overlaps
        .iter()
        .map(|((x, y), o)| {
            json!({
                "charts": [x, y],
                "presentation": presentation(&o.presentation),
                "over_first": localized(&o.over_first),
                "over_second": localized(&o.over_second),
            })
        })
        .collect();
    let triples: Vec<Value> = a
        .triples
        .iter()
        .map(|t| json!({ "base": t.base, "others": t.others, "consistent": t.consistent }))
        .collect();
    json!({
        "chart_count": a.charts.len(),
        "overlap_count": a.overlaps.len(),
        "charts": charts,
        "overlaps": overlaps,
        "triples": triples,
        "triples_consistent": a.triples_consistent(),
    })
}

fn twist_doc(t: &TwistData) -> Value {
    let per_chart: BTreeMap<&String, Value> = t.per_chart.iter().map(|(k, v)| (k, bigs(v))).collect();
    let transitions: Vec<Value> = t
        .transitions
        .iter()
        .map(|((a, b), fr)| json!({ "from": a, "to": b, "fraction": fr.render() }))
        .collect();
    json!({
        "alpha": degree(&t.alpha),
        "per_chart": per_chart,
        "transitions": transitions,
        "cocycle": t.cocycle,
        "units": t.units,
    })
}

fn families_of<'a>(p: &'a Problem, names: &'a [String]) -> impl Iterator<Item = (&'a String, &'a Arc<HomFamily>)> {
    names.iter().map(move |n| (n, p.family(n)))
}

fn execute(p: &Problem, req: &Request, opts: Options) -> Result<Value, Error> {
    match req {
        Request::Check { families } => {
            let mut out = BTreeMap::new();
            for (name, f) in families_of(p, families) {
                let mut v = certificate(&is_relevant(f)?);
                v["family"] = json!(f.render());
                out.insert(name.clone(), v);
            }
            Ok(json!(out))
        }
        Request::Potion { families } => {
            let mut out = BTreeMap::new();
            for (name, f) in families_of(p, families) {
                out.insert(name.clone(), presentation(&potion_generators(f)?));
            }
            Ok(json!(out))
        }
        Request::Atlas { families } => {
            let fs: Vec<HomFamily> = families_of(p, families).map(|(_, f)| (**f).clone()).collect();
            Ok(atlas_doc(&build_atlas(&p.ring, &fs, opts.bound)?))
        }
        Request::Twist { families, alpha } => {
            let fs: Vec<HomFamily> = families_of(p, families).map(|(_, f)| (**f).clone()).collect();
            let atlas = build_atlas(&p.ring, &fs, opts.bound)?;
            let alpha = p.ring.group().element_from_i64(alpha)?;
            Ok(twist_doc(&twist_data(&atlas, &alpha)?))
        }
        Request::VerifyMagic { f, g } => {
            let base = Arc::new(divisor_closure(p.family(f))?);
            let g = g.as_ref().map(|g| p.family(g).as_ref());
            let lp = localized_presentation(&base, g, opts.bound)?;
            let rep = verify_iso(&base, g, opts.bound)?;
            Ok(json!({
                "localization": localized(&lp),
                "surjectivity": rep.surjectivity,
                "injectivity": rep.injectivity,
                "hom_law": rep.hom_law,
                "passed": rep.passed(),
                "generators_checked": rep.generators_checked,
                "sample_size": rep.sample_size,
                "failures": rep.failures,
            }))
        }
        Request::Hilbert {
            equations,
            moduli,
            nvars,
        } => {
            let width = nvars.or_else(|| equations.first().map(Vec::len)).unwrap_or(0);
            let eq = if equations.is_empty() {
                IntMatrix::zeros(0, width)
            } else {
                IntMatrix::from_rows(equations)
            };
            let mods: Vec<Option<BigInt>> = match moduli {
                Some(ms) => ms.iter().map(|&m| (m > 0).then(|| BigInt::from(m))).collect(),
                None => vec![None; equations.len()],
            };
            let basis = hilbert_basis(&eq, &mods, width)?;
            Ok(json!({ "nvars": width, "basis": basis }))
        }
        Request::Image { morphism, families } => {
            let psi = &p.morphisms[morphism];
            let fs: Vec<Arc<HomFamily>> = families_of(p, families).map(|(_, f)| f.clone()).collect();
            let maps = functorial_image(psi, &fs)?;
            let mut out = BTreeMap::new();
            for (name, m) in families.iter().zip(&maps) {
                let images: Vec<Value> = if m.source.all_monomial() {
                    potion_generators(&m.source)?
                        .generators
                        .iter()
                        .map(|g| Ok(json!({ "source": g.fraction.render(), "image": m.map(&g.fraction)?.render() })))
                        .collect::<Result<_, Error>>()?
                } else {
                    Vec::new()
                };
                out.insert(
                    name.clone(),
                    json!({
                        "source": m.source.render(),
                        "image": m.image.render(),
                        "certificate": certificate(&m.certificate),
                        "generator_images": images,
                    }),
                );
            }
            Ok(json!(out))
        }
        Request::BaseChange { families, prime } => {
            let q = prime.unwrap_or(BASE_CHANGE_PRIME);
            let mut out = BTreeMap::new();
            for (name, f) in families_of(p, families) {
                out.insert(
                    name.clone(),
                    json!({ "prime": q, "invariant": base_change_invariance_at(f, q)? }),
                );
            }
            Ok(json!(out))
        }
    }
}

/// Runs every request in order. The document is deterministic: maps are
/// key-sorted and nothing time- or environment-dependent is recorded.
pub fn run(p: &Problem, opts: Options) -> (Value, Status) {
    let mut status = Status::Ok;
    let mut results = Vec::with_capacity(p.spec.requests.len());
    for (i, req) in p.spec.requests.iter().enumerate() {
        let entry = match execute(p, req, opts) {
            Ok(v) => json!({ "request": i, "command": req.command(), "status": "ok", "result": v }),
            Err(e) => {
                status = status.max(status_of(&e));
                json!({
                    "request": i,
                    "command": req.command(),
                    "status": "error",
                    "error": { "kind": error_kind(&e), "message": e.to_string() },
                })
            }
        };
        results.push(entry);
    }
    let doc = json!({
        "format_version": FORMAT_VERSION,
        "problem": serde_json::to_value(&p.spec).expect("spec serializes"),
        "results": results,
    });
    (doc, status)
}

/// Indented `key: value` lines for a terminal.
pub fn render_text(doc: &Value) -> String {
    fn walk(v: &Value, indent: usize, out: &mut String) {
        let pad = "  ".repeat(indent);
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    if is_leafy(x) {
                        out.push_str(&format!("{pad}{k}: {}\n", inline(x)));
                    } else {
                        out.push_str(&format!("{pad}{k}:\n"));
                        walk(x, indent + 1, out);
                    }
                }
            }
            Value::Array(xs) => {
                for x in xs {
                    if is_leafy(x) {
                        out.push_str(&format!("{pad}- {}\n", inline(x)));
                    } else {
                        out.push_str(&format!("{pad}-\n"));
                        walk(x, indent + 1, out);
                    }
                }
            }
            _ => out.push_str(&format!("{pad}{}\n", inline(v))),
        }
    }
    fn is_leafy(v: &Value) -> bool {
        match v {
            Value::Object(m) => m.is_empty(),
            Value::Array(xs) => xs.iter().all(|x| !x.is_object() && is_leafy(x)),
            _ => true,
        }
    }
    fn inline(v: &Value) -> String {
        match v {
            Value::String(s) => s.clone(),
            Value::Array(xs) => format!("[{}]", xs.iter().map(inline).collect::<Vec<_>>().join(", ")),
            other => other.to_string(),
        }
    }
    let mut out = String::new();
    if let Some(results) = doc.get("results").and_then(Value::as_array) {
        for r in results {
            out.push_str(&format!(
                "request {} ({}): {}\n",
                r["request"],
                r["command"].as_str().unwrap_or("?"),
                r["status"].as_str().unwrap_or("?")
            ));
            if let Some(v) = r.get("result").or_else(|| r.get("error")) {
                walk(v, 1, &mut out);
            }
        }
    }
    out
}
