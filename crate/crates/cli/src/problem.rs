//! Problem files: a graded ring, named families and morphisms, and a list of
//! requests. Accepted as TOML or JSON.

use std::collections::BTreeMap;
use std::sync::Arc;

use multiproj::atlas::GradedRingMorphism;
use multiproj::graded_ring::{CoeffField, GradedRing, HomFamily};
use multiproj::zlattice::FgAbelianGroup;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    pub group: GroupSpec,
    #[serde(default)]
    pub coefficients: Coefficients,
    pub variables: Vec<VariableSpec>,
    #[serde(default)]
    pub families: BTreeMap<String, Vec<String>>,
    /// Endomorphisms: variable name to image. Unlisted variables are fixed.
    #[serde(default)]
    pub morphisms: BTreeMap<String, BTreeMap<String, String>>,
    #[serde(default)]
    pub requests: Vec<Request>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub rank: usize,
    #[serde(default)]
    pub invariant_factors: Vec<u64>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Coefficients {
    #[default]
    Rationals,
    Prime(u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VariableSpec {
    pub name: String,
    pub degree: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Request {
    Check {
        families: Vec<String>,
    },
    Potion {
        families: Vec<String>,
    },
    Atlas {
        families: Vec<String>,
    },
    Twist {
        families: Vec<String>,
        alpha: Vec<i64>,
    },
    VerifyMagic {
        f: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        g: Option<String>,
    },
    Hilbert {
        equations: Vec<Vec<i64>>,
        /// One per row; 0 marks an equation, m > 0 a congruence mod m.
        #[serde(default, skip_serializing_if = "Option::is_none")]
        moduli: Option<Vec<u64>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        nvars: Option<usize>,
    },
    Image {
        morphism: String,
        families: Vec<String>,
    },
    BaseChange {
        families: Vec<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        prime: Option<u64>,
    },
}

impl Request {
    pub fn command(&self) -> &'static str {
        match self {
            Request::Check { .. } => "check",
            Request::Potion { .. } => "potion",
            Request::Atlas { .. } => "atlas",
            Request::Twist { .. } => "twist",
            Request::VerifyMagic { .. } => "verify-magic",
            Request::Hilbert { .. } => "hilbert",
            Request::Image { .. } => "image",
            Request::BaseChange { .. } => "base-change",
        }
    }

    fn family_refs(&self) -> Vec<&String> {
        match self {
            Request::Check { families }
            | Request::Potion { families }
            | Request::Atlas { families }
            | Request::Twist { families, .. }
            | Request::Image { families, .. }
            | Request::BaseChange { families, .. } => families.iter().collect(),
            Request::VerifyMagic { f, g } => core::iter::once(f).chain(g).collect(),
            Request::Hilbert { .. } => Vec::new(),
        }
    }
}

/// A failure to read or validate a problem, located by field path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecError {
    pub path: String,
    pub message: String,
}

impl std::fmt::Display for SpecError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.path.is_empty() || self.path == "." {
            write!(f, "{}", self.message)
        } else {
            write!(f, "{}: {}", self.path, self.message)
        }
    }
}

impl std::error::Error for SpecError {}

fn spec_err(path: impl Into<String>, message: impl ToString) -> SpecError {
    SpecError {
        path: path.into(),
        message: message.to_string(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InputFormat {
    Toml,
    Json,
}

impl InputFormat {
    /// JSON when the document starts with `{`, TOML otherwise.
    pub fn sniff(src: &str) -> Self {
        if src.trim_start().starts_with('{') {
            InputFormat::Json
        } else {
            InputFormat::Toml
        }
    }
}

pub fn parse_spec(src: &str, format: InputFormat) -> Result<ProblemSpec, SpecError> {
    match format {
        InputFormat::Json => {
            let mut de = serde_json::Deserializer::from_str(src);
            serde_path_to_error::deserialize(&mut de).map_err(|e| spec_err(e.path().to_string(), e.inner()))
        }
        InputFormat::Toml => {
            let de = toml::Deserializer::new(src);
            serde_path_to_error::deserialize(de).map_err(|e| {
                let msg = e.inner().message().to_string();
                let line = e.inner().span().map(|s| line_of(src, s.start));
                let msg = match line {
                    Some(l) => format!("{msg} (line {l})"),
                    None => msg,
                };
                spec_err(e.path().to_string(), msg)
            })
        }
    }
}

fn line_of(src: &str, offset: usize) -> usize {
    src[..offset.min(src.len())].matches('\n').count() + 1
}

/// A validated problem with its ring, families and morphisms built.
#[derive(Clone, Debug)]
pub struct Problem {
    pub spec: ProblemSpec,
    pub ring: Arc<GradedRing>,
    pub families: BTreeMap<String, Arc<HomFamily>>,
    pub morphisms: BTreeMap<String, GradedRingMorphism>,
}

impl Problem {
    pub fn family(&self, name: &str) -> &Arc<HomFamily> {
        &self.families[name]
    }
}

fn build_ring(spec: &ProblemSpec) -> Result<GradedRing, SpecError> {
    for (i, &d) in spec.group.invariant_factors.iter().enumerate() {
        if d == 0 {
            return Err(spec_err(
                format!("group.invariant_factors[{i}]"),
                "invariant factors must be positive",
            ));
        }
    }
    let factors: Vec<BigInt> = spec.group.invariant_factors.iter().map(|&d| BigInt::from(d)).collect();
    let group = FgAbelianGroup::from_invariants(spec.group.rank, &factors);
    let field = match spec.coefficients {
        Coefficients::Rationals => CoeffField::Rationals,
        Coefficients::Prime(p) => CoeffField::prime(p).map_err(|e| spec_err("coefficients.prime", e))?,
    };
    let width = group.ngen();
    let mut degrees = Vec::with_capacity(spec.variables.len());
    let mut seen = BTreeMap::new();
    for (i, v) in spec.variables.iter().enumerate() {
        let valid = !v.name.is_empty()
            && v.name.chars().all(|c| c.is_alphanumeric() || c == '_')
            && !v.name.starts_with(|c: char| c.is_ascii_digit());
        if !valid {
            return Err(spec_err(
                format!("variables[{i}].name"),
                format!("invalid variable name '{}'", v.name),
            ));
        }
        if let Some(j) = seen.insert(v.name.clone(), i) {
            return Err(spec_err(
                format!("variables[{i}].name"),
                format!("duplicate variable name '{}' (also variables[{j}])", v.name),
            ));
        }
        if v.degree.len() != width {
            return Err(spec_err(
                format!("variables[{i}].degree"),
                format!(
                    "degree vector has length {}, expected {} (rank plus number of invariant factors)",
                    v.degree.len(),
                    width
                ),
            ));
        }
        degrees.push(
            group
                .element_from_i64(&v.degree)
                .map_err(|e| spec_err(format!("variables[{i}].degree"), e))?,
        );
    }
    let names = spec.variables.iter().map(|v| v.name.clone()).collect();
    GradedRing::new(group, field, names, degrees).map_err(|e| spec_err("variables", e))
}

/// Builds the ring and families and checks every cross-reference.
pub fn validate(spec: ProblemSpec) -> Result<Problem, SpecError> {
    let ring = Arc::new(build_ring(&spec)?);

    let mut families = BTreeMap::new();
    for (name, exprs) in &spec.families {
        let mut elements = Vec::with_capacity(exprs.len());
        for (i, src) in exprs.iter().enumerate() {
            let p = ring
                .parse(src)
                .map_err(|e| spec_err(format!("families.{name}[{i}]"), e))?;
            elements.push(p);
        }
        let fam = HomFamily::new(ring.clone(), elements).map_err(|e| spec_err(format!("families.{name}"), e))?;
        families.insert(name.clone(), Arc::new(fam));
    }

    let mut morphisms = BTreeMap::new();
    for (name, map) in &spec.morphisms {
        for var in map.keys() {
            if !ring.names().contains(var) {
                return Err(spec_err(
                    format!("morphisms.{name}.{var}"),
                    format!("unknown variable '{var}'"),
                ));
            }
        }
        let mut images = Vec::with_capacity(ring.nvars());
        for (i, var) in ring.names().iter().enumerate() {
            let p = match map.get(var) {
                Some(src) => ring
                    .parse(src)
                    .map_err(|e| spec_err(format!("morphisms.{name}.{var}"), e))?,
                None => ring.var(i),
            };
            images.push(p);
        }
        let psi = GradedRingMorphism::new(ring.clone(), ring.clone(), images)
            .map_err(|e| spec_err(format!("morphisms.{name}"), e))?;
        morphisms.insert(name.clone(), psi);
    }

    for (i, req) in spec.requests.iter().enumerate() {
        for fam in req.family_refs() {
            if !families.contains_key(fam) {
                return Err(spec_err(format!("requests[{i}]"), format!("unknown family '{fam}'")));
            }
        }
        match req {
            Request::Image { morphism, .. } if !morphisms.contains_key(morphism) => {
                return Err(spec_err(
                    format!("requests[{i}].morphism"),
                    format!("unknown morphism '{morphism}'"),
                ));
            }
            Request::Twist { alpha, .. } if alpha.len() != ring.group().ngen() => {
                return Err(spec_err(
                    format!("requests[{i}].alpha"),
                    format!("alpha has length {}, expected {}", alpha.len(), ring.group().ngen()),
                ));
            }
            Request::Hilbert {
                equations,
                moduli,
                nvars,
            } => {
                let width = nvars.or_else(|| equations.first().map(Vec::len)).unwrap_or(0);
                if let Some(j) = equations.iter().position(|r| r.len() != width) {
                    return Err(spec_err(
                        format!("requests[{i}].equations[{j}]"),
                        format!("row has length {}, expected {width}", equations[j].len()),
                    ));
                }
                if let Some(m) = moduli {
                    if m.len() != equations.len() {
                        return Err(spec_err(
                            format!("requests[{i}].moduli"),
                            format!("{} moduli for {} rows", m.len(), equations.len()),
                        ));
                    }
                }
            }
            _ => {}
        }
    }

    let mut spec = spec;
    canonicalize(&mut spec, &ring, &families, &morphisms);
    Ok(Problem {
        spec,
        ring,
        families,
        morphisms,
    })
}

/// Rewrites polynomial text in rendered form and drops identity entries
/// from morphisms, so that equal problems have equal specs.
fn canonicalize(
    spec: &mut ProblemSpec,
    ring: &GradedRing,
    families: &BTreeMap<String, Arc<HomFamily>>,
    morphisms: &BTreeMap<String, GradedRingMorphism>,
) {
    for (name, exprs) in spec.families.iter_mut() {
        *exprs = families[name].elements().iter().map(|p| ring.render(p)).collect();
    }
    for (name, map) in spec.morphisms.iter_mut() {
        let psi = &morphisms[name];
        *map = ring
            .names()
            .iter()
            .enumerate()
            .filter(|(i, _)| psi.images()[*i] != ring.var(*i))
            .map(|(i, v)| (v.clone(), ring.render(&psi.images()[i])))
            .collect();
    }
}

pub fn load(src: &str, format: InputFormat) -> Result<Problem, SpecError> {
    validate(parse_spec(src, format)?)
}
