//! JSON family descriptors and random valid draws over every constructor.

use rand::Rng;
use serde::{Deserialize, Deserializer, Serialize};

use super::*;
use crate::operators::{hom_to_matrix, IdentityKind};

/// `{"identity", "weight"?, "degree"?, "n", "case"?, "params"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyDescriptor {
    pub identity: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<Scalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<usize>,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
    #[serde(default)]
    pub params: Params,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi1: Option<Scalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi2: Option<Scalar>,
    #[serde(default, deserialize_with = "index", skip_serializing_if = "Option::is_none")]
    pub t: Option<usize>,
    #[serde(default, deserialize_with = "index", skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<Scalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v1: Option<Scalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v2: Option<Scalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<Scalar>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub head: Option<Vec<Scalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<Scalar>>,
}

/// Indices are accepted as JSON integers or decimal strings.
fn index<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<usize>, D::Error> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Raw {
        Int(usize),
        Str(String),
    }
    match Option::<Raw>::deserialize(d)? {
        None => Ok(None),
        Some(Raw::Int(i)) => Ok(Some(i)),
        Some(Raw::Str(s)) => s
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| serde::de::Error::custom(format!("invalid index `{s}`"))),
    }
}

fn need<'a, T>(field: &'a Option<T>, name: &str) -> Result<&'a T> {
    field
        .as_ref()
        .ok_or_else(|| Error::InvalidParameter(format!("missing params.{name}")))
}

impl Params {
    fn scalar(&self, name: &str) -> Result<&Scalar> {
        let field = match name {
            "psi1" => &self.psi1,
            "psi2" => &self.psi2,
            "v" => &self.v,
            "v1" => &self.v1,
            "v2" => &self.v2,
            _ => &self.a,
        };
        need(field, name)
    }
}

/// Either output form; also the accepted input form of the checker.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ConstructedOperator {
    Homogeneous(HomogeneousOperator),
    Matrix(MatrixOperator),
}

impl ConstructedOperator {
    pub fn to_matrix(&self) -> MatrixOperator {
        match self {
            ConstructedOperator::Homogeneous(h) => hom_to_matrix(h),
            ConstructedOperator::Matrix(m) => m.clone(),
        }
    }
}

impl FamilyDescriptor {
    pub fn kind(&self) -> Result<IdentityKind> {
        IdentityKind::from_parts(&self.identity, self.weight.clone())
    }

    fn case(&self) -> Result<char> {
        match self.case.as_deref() {
            None => Ok('a'),
            Some(c) if c.len() == 1 && ('a'..='d').contains(&c.chars().next().unwrap_or(' ')) => {
                Ok(c.chars().next().unwrap_or('a'))
            }
            Some(c) => Err(Error::InvalidParameter(format!("unknown case `{c}`"))),
        }
    }

    fn degree1_params(&self, case: char, kind: &IdentityKind) -> Result<Degree1Params> {
        let p = &self.params;
        let shape = match (kind, case) {
            (IdentityKind::RotaBaxter(_) | IdentityKind::Average, 'a' | 'b') => "psi1",
            (IdentityKind::Nijenhuis, 'a') => "seeds",
            (IdentityKind::Nijenhuis, 'c') => "spike",
            (IdentityKind::Reynolds, 'b') | (_, 'd') => "two-spike",
            _ => "multiple",
        };
        Ok(match shape {
            "psi1" => Degree1Params::Psi1(p.scalar("psi1")?.clone()),
            "seeds" => Degree1Params::Seeds(
                p.scalar("psi1")?.clone(),
                p.psi2.clone().unwrap_or_else(Scalar::zero),
            ),
            "spike" => Degree1Params::Spike {
                r: *need(&p.r, "r")?,
                v: p.scalar("v")?.clone(),
            },
            "two-spike" => {
                let r = *need(&p.r, "r")?;
                let v2 = if r + 1 >= self.n {
                    p.v2.clone().unwrap_or_else(Scalar::zero)
                } else {
                    p.scalar("v2")?.clone()
                };
                Degree1Params::TwoSpike {
                    r,
                    v1: p.scalar("v1")?.clone(),
                    v2,
                }
            }
            _ => Degree1Params::Multiple {
                t: *need(&p.t, "t")?,
                v: p.scalar("v")?.clone(),
            },
        })
    }

    /// Short constructor name, independent of the parameter values.
    pub fn constructor(&self) -> String {
        let kind = self
            .kind()
            .map(|k| k.to_string())
            .unwrap_or_else(|_| self.identity.clone());
        match (self.degree, &self.params.head) {
            (_, Some(_)) => format!("{kind} degree-k head"),
            (Some(k), None) => format!("{kind} degree {k} case {}", self.case().unwrap_or('?')),
            (None, None) => kind,
        }
    }
}

/// Builds the operator a descriptor names.
pub fn construct(desc: &FamilyDescriptor) -> Result<ConstructedOperator> {
    let kind = desc.kind()?;
    let n = desc.n;
    let p = &desc.params;
    let k = desc.degree.unwrap_or(0);
    let case = desc.case()?;
    let alpha = || need(&p.alpha, "alpha");
    let matrix = |m: MatrixOperator| Ok(ConstructedOperator::Matrix(m));
    let hom = |h: HomogeneousOperator| Ok(ConstructedOperator::Homogeneous(h));
    if let Some(head) = &p.head {
        return match kind {
            IdentityKind::RotaBaxter(ref w) if w.is_zero() => hom(degk_head(n, k, head)?),
            IdentityKind::Reynolds | IdentityKind::Nijenhuis | IdentityKind::Average => {
                hom(degk_head(n, k, head)?)
            }
            other => Err(Error::InvalidParameter(format!(
                "{other} has no arbitrary-head family"
            ))),
        };
    }
    let head_only = |kind: &IdentityKind| {
        Err(Error::InvalidParameter(format!(
            "{kind} at degree {k} takes params.head"
        )))
    };
    match &kind {
        IdentityKind::Derivation => matrix(derivation_family(n, alpha()?)?),
        IdentityKind::Homomorphism => matrix(homomorphism_family(n, alpha()?)?),
        IdentityKind::Differential(w) if w.is_zero() => matrix(derivation_family(n, alpha()?)?),
        IdentityKind::Differential(w) => {
            matrix(differential1_family(n, alpha()?)?.scale(&w.recip()?))
        }
        IdentityKind::RotaBaxter(w) if w.is_zero() => match (k, case) {
            (0, 'a') => hom(rb0_deg0(n, *need(&p.t, "t")?, p.scalar("v")?)?),
            (0, 'b') => hom(rb0_deg0_spike(n, *need(&p.r, "r")?, p.scalar("v")?)?),
            (1, c) => hom(rb0_deg1(n, c, &desc.degree1_params(c, &kind)?)?),
            _ => head_only(&kind),
        },
        IdentityKind::RotaBaxter(w) => {
            let op = if k == 0 {
                rb1_deg0(n, p.scalar("a")?)?
            } else {
                rb1_degk(n, k, p.scalar("v")?)?
            };
            hom(op.scale(w))
        }
        IdentityKind::Reynolds => match (k, case) {
            (0, 'a') => hom(reynolds_deg0(n, *need(&p.t, "t")?, p.scalar("v")?)?),
            (0, 'b') => hom(reynolds_deg0_spike(n, *need(&p.r, "r")?, p.scalar("v")?)?),
            (1, c) => hom(reynolds_deg1(n, c, &desc.degree1_params(c, &kind)?)?),
            _ => head_only(&kind),
        },
        IdentityKind::Nijenhuis => match k {
            0 => hom(nijenhuis_deg0(n, p.scalar("a")?)?),
            1 => hom(nijenhuis_deg1(n, case, &desc.degree1_params(case, &kind)?)?),
            _ => head_only(&kind),
        },
        IdentityKind::Average => match (k, case) {
            (0, 'a') => hom(average_deg0(n, *need(&p.t, "t")?, p.scalar("v")?)?),
            (0, 'b') => hom(average_deg0_spike(n, *need(&p.r, "r")?, p.scalar("v")?)?),
            (1, c) => hom(average_deg1(n, c, &desc.degree1_params(c, &kind)?)?),
            _ => head_only(&kind),
        },
    }
}

fn random_scalar<R: Rng + ?Sized>(rng: &mut R, nonzero: bool) -> Scalar {
    loop {
        let p: i64 = rng.gen_range(-20..=20);
        let q: i64 = rng.gen_range(1..=9);
        if !(nonzero && p == 0) {
            return Scalar::new(p, q).expect("q >= 1");
        }
    }
}

fn random_vec<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Vec<Scalar> {
    (0..len).map(|_| random_scalar(rng, false)).collect()
}

#[derive(Clone, Copy)]
enum Slot {
    Psi1,
    Seeds,
    T(usize, usize),
    R(usize, usize),
    TwoSpike(usize, usize),
    A,
    Weight,
    Head,
    Alpha,
}

fn template(identity: &str, weight: Option<i64>, degree: Option<usize>, case: Option<char>, slots: &[Slot]) -> (FamilyDescriptor, Vec<Slot>) {
    (
        FamilyDescriptor {
            identity: identity.to_string(),
            weight: weight.map(Scalar::from_int),
            degree,
            n: 0,
            case: case.map(String::from),
            params: Params::default(),
        },
        slots.to_vec(),
    )
}

/// One template per constructor case available at `n`.
fn templates(n: usize) -> Vec<(FamilyDescriptor, Vec<Slot>)> {
    use Slot::*;
    let half = n / 2;
    let split = degree_one_split(n);
    let mut out = vec![
        template("derivation", None, None, None, &[Alpha]),
        template("homomorphism", None, None, None, &[Alpha]),
        template("differential", Some(1), None, None, &[Alpha]),
        template("rota-baxter", Some(1), Some(0), None, &[A]),
        template("rota-baxter", None, Some(0), None, &[A, Weight]),
        template("nijenhuis", None, Some(0), None, &[A]),
    ];
    for id in ["rota-baxter", "reynolds", "average"] {
        let w = (id == "rota-baxter").then_some(0);
        if half >= 1 {
            out.push(template(id, w, Some(0), Some('a'), &[T(1, half)]));
        }
        out.push(template(id, w, Some(0), Some('b'), &[R(half + 1, n)]));
    }
    if n >= 2 {
        out.push(template("rota-baxter", Some(1), Some(1), None, &[A]));
        for id in ["rota-baxter", "reynolds", "nijenhuis", "average"] {
            let w = (id == "rota-baxter").then_some(0);
            out.push(template(id, w, None, None, &[Head]));
        }
        let rb0 = |c, s: &[Slot]| template("rota-baxter", Some(0), Some(1), Some(c), s);
        out.push(rb0('a', &[Psi1]));
        out.push(rb0('b', &[Psi1]));
        out.push(template("nijenhuis", None, Some(1), Some('a'), &[Seeds]));
        out.push(template("nijenhuis", None, Some(1), Some('c'), &[R(split + 1, n - 1)]));
        out.push(template("average", None, Some(1), Some('a'), &[Psi1]));
        out.push(template("average", None, Some(1), Some('b'), &[Psi1]));
        out.push(template("average", None, Some(1), Some('d'), &[TwoSpike(split + 1, n - 1)]));
        if split >= 2 {
            out.push(rb0('c', &[T(2, split)]));
            out.push(template("nijenhuis", None, Some(1), Some('b'), &[T(2, split)]));
            out.push(template("average", None, Some(1), Some('c'), &[T(2, split)]));
        }
        if split >= 1 {
            out.push(template("reynolds", None, Some(1), Some('a'), &[T(1, split)]));
        }
        if split < n - 2 {
            out.push(rb0('d', &[TwoSpike(split + 1, n - 2)]));
            out.push(template("reynolds", None, Some(1), Some('b'), &[TwoSpike(split + 1, n - 2)]));
        }
    }
    out
}

fn fill<R: Rng + ?Sized>(mut desc: FamilyDescriptor, slots: &[Slot], n: usize, rng: &mut R) -> FamilyDescriptor {
    desc.n = n;
    let p = &mut desc.params;
    for slot in slots {
        match *slot {
            Slot::Psi1 => p.psi1 = Some(random_scalar(rng, true)),
            Slot::Seeds => {
                p.psi1 = Some(random_scalar(rng, true));
                p.psi2 = Some(if n >= 3 { random_scalar(rng, false) } else { Scalar::zero() });
            }
            Slot::T(lo, hi) => {
                p.t = Some(rng.gen_range(lo..=hi));
                p.v = Some(random_scalar(rng, true));
            }
            Slot::R(lo, hi) => {
                p.r = Some(rng.gen_range(lo..=hi));
                p.v = Some(random_scalar(rng, false));
            }
            Slot::TwoSpike(lo, hi) => {
                p.r = Some(rng.gen_range(lo..=hi));
                p.v1 = Some(random_scalar(rng, false));
                p.v2 = Some(random_scalar(rng, false));
            }
            Slot::A => {
                let a = random_scalar(rng, false);
                if desc.degree.unwrap_or(0) >= 1 {
                    p.v = Some(a);
                    desc.degree = Some(rng.gen_range(1..n));
                } else {
                    p.a = Some(a);
                }
            }
            Slot::Weight => desc.weight = Some(random_scalar(rng, true)),
            Slot::Head => {
                let k = rng.gen_range(half_floor(n)..n);
                desc.degree = Some(k);
                p.head = Some(random_vec(rng, n - k));
            }
            Slot::Alpha => p.alpha = Some(random_vec(rng, n)),
        }
    }
    desc
}

fn half_floor(n: usize) -> usize {
    (n / 2).max(1)
}

/// One random valid draw for every constructor case available at `n`, as
/// `(descriptor, operator)`. Singular draws are redrawn.
pub fn sample_constructions<R: Rng + ?Sized>(
    n: usize,
    rng: &mut R,
) -> Vec<(FamilyDescriptor, ConstructedOperator)> {
    let mut out = Vec::new();
    for (desc, slots) in templates(n) {
        for _ in 0..100 {
            let d = fill(desc.clone(), &slots, n, rng);
            if let Ok(op) = construct(&d) {
                out.push((d, op));
                break;
            }
        }
    }
    out
}
