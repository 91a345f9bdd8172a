//! JSON problem documents and report serialization.

use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Map, Value};

use crate::classify::{ClassificationReport, FloorProfile, GorensteinData, H1Report, H1Total, Verdict, CRIT_PROPER};
use crate::curve::{CurveModel, CurvePoint};
use crate::error::{Error, Result};
use crate::pdiv::{Base, PolyhedralDivisor, PrimeDivisor, Properness};
use crate::polyhedral::{Cone, TailedPolyhedron};
use crate::rat::{fmt_rat, parse_rat, LatticeVec, Rat, RatVec};
use crate::section_ring::{generator_degrees, Presentation};
use crate::toric::{ConeType, ToricCone};

/// A rational written as `"p/q"`, `"p"` or a JSON integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatStr(pub Rat);

impl Serialize for RatStr {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_rat(&self.0))
    }
}

impl<'de> Deserialize<'de> for RatStr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = RatStr;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational number as \"p/q\" or an integer")
            }
            fn visit_str<E: de::Error>(self, s: &str) -> std::result::Result<RatStr, E> {
                parse_rat(s).map(RatStr).ok_or_else(|| E::custom(format!("invalid rational \"{s}\"")))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<RatStr, E> {
                Ok(RatStr(Rat::from_integer(v.into())))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<RatStr, E> {
                Ok(RatStr(Rat::from_integer(v.into())))
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", deny_unknown_fields)]
pub enum BaseDesc {
    P1,
    #[serde(rename = "elliptic")]
    Elliptic { a: RatStr, b: RatStr },
    #[serde(rename = "abstract")]
    Abstract {
        genus: u32,
        #[serde(default = "yes")]
        proper: bool,
    },
    #[serde(rename = "affine_line")]
    AffineLine,
    #[serde(rename = "affine_space")]
    AffineSpace { dim: usize },
}

fn yes() -> bool {
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PointDesc {
    Name(String),
    Affine { x: RatStr, y: RatStr },
    Hyperplane { hyperplane: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TailDesc {
    pub rays: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoefficientDesc {
    pub point: PointDesc,
    pub vertices: Vec<Vec<RatStr>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub extra_rays: Vec<Vec<i64>>,
}

/// The input document.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    pub lattice_rank: usize,
    pub tail_cone: TailDesc,
    pub base: BaseDesc,
    #[serde(default)]
    pub coefficients: Vec<CoefficientDesc>,
}

/// Parses a document; syntax and type errors carry their position.
pub fn parse_input(text: &str) -> Result<ProblemSpec> {
    serde_json::from_str(text).map_err(|e| Error::Parse { msg: e.to_string(), line: e.line(), column: e.column() })
}

pub fn to_json(spec: &ProblemSpec) -> String {
    serde_json::to_string_pretty(spec).expect("problem documents always serialize")
}

impl ProblemSpec {
    /// Builds and validates the polyhedral divisor.
    pub fn to_divisor(&self) -> Result<PolyhedralDivisor> {
        let rank = self.lattice_rank;
        if rank == 0 {
            return Err(Error::Semantic("lattice_rank must be positive".into()));
        }
        let tail = make_cone(rank, &self.tail_cone.rays, "tail_cone")?;
        let base = match &self.base {
            BaseDesc::P1 => Base::Curve(CurveModel::P1),
            BaseDesc::Elliptic { a, b } => Base::Curve(CurveModel::elliptic(a.0.clone(), b.0.clone())?),
            BaseDesc::Abstract { genus, proper: true } => Base::Curve(CurveModel::AbstractProjective { genus: *genus }),
            BaseDesc::Abstract { proper: false, .. } => Base::Curve(CurveModel::AbstractAffine),
            BaseDesc::AffineLine => Base::Curve(CurveModel::AffineLine),
            BaseDesc::AffineSpace { dim } => Base::AffineSpace(*dim),
        };
        let mut coeffs = Vec::with_capacity(self.coefficients.len());
        for c in &self.coefficients {
            let prime = point_of(&base, &c.point)?;
            if c.vertices.is_empty() {
                return Err(Error::Semantic(format!("coefficient at {prime} has no vertices")));
            }
            let mut vertices = Vec::with_capacity(c.vertices.len());
            for v in &c.vertices {
                if v.len() != rank {
                    return Err(Error::DimensionMismatch { expected: rank, found: v.len() });
                }
                vertices.push(RatVec(v.iter().map(|r| r.0.clone()).collect()));
            }
            let coeff_tail = if c.extra_rays.is_empty() {
                tail.clone()
            } else {
                let mut rays: Vec<Vec<i64>> = tail.rays().iter().map(|r| r.0.clone()).collect();
                rays.extend(c.extra_rays.iter().cloned());
                make_cone(rank, &rays, "extra_rays")?
            };
            coeffs.push((prime, TailedPolyhedron::new(vertices, coeff_tail)?));
        }
        PolyhedralDivisor::new(base, tail, coeffs)
    }

    /// The document describing `d`.
    pub fn from_divisor(d: &PolyhedralDivisor) -> ProblemSpec {
        let base = match d.base() {
            Base::Curve(CurveModel::P1) => BaseDesc::P1,
            Base::Curve(CurveModel::EllipticQ { a, b }) => BaseDesc::Elliptic { a: RatStr(a.clone()), b: RatStr(b.clone()) },
            Base::Curve(CurveModel::AbstractProjective { genus }) => BaseDesc::Abstract { genus: *genus, proper: true },
            Base::Curve(CurveModel::AbstractAffine) => BaseDesc::Abstract { genus: 0, proper: false },
            Base::Curve(CurveModel::AffineLine) => BaseDesc::AffineLine,
            Base::AffineSpace(n) => BaseDesc::AffineSpace { dim: *n },
        };
        let coefficients = d
            .coefficients()
            .iter()
            .map(|(p, poly)| CoefficientDesc {
                point: match p {
                    PrimeDivisor::Hyperplane(i) => PointDesc::Hyperplane { hyperplane: *i },
                    PrimeDivisor::Point(CurvePoint::Affine { x, y }) => {
                        PointDesc::Affine { x: RatStr(x.clone()), y: RatStr(y.clone()) }
                    }
                    PrimeDivisor::Point(pt) => PointDesc::Name(pt.to_string()),
                },
                vertices: poly.vertices().iter().map(|v| v.0.iter().cloned().map(RatStr).collect()).collect(),
                extra_rays: Vec::new(),
            })
            .collect();
        ProblemSpec {
            lattice_rank: d.lattice_rank(),
            tail_cone: TailDesc { rays: d.tail().rays().iter().map(|r| r.0.clone()).collect() },
            base,
            coefficients,
        }
    }
}

fn make_cone(rank: usize, rays: &[Vec<i64>], what: &str) -> Result<Cone> {
    Cone::new(rank, rays.iter().cloned().map(LatticeVec).collect()).map_err(|e| match e {
        Error::ZeroRay => Error::Semantic(format!("{what} contains the zero ray")),
        e => e,
    })
}

fn point_of(base: &Base, p: &PointDesc) -> Result<PrimeDivisor> {
    let bad = || Error::Semantic(format!("point descriptor {p:?} does not fit the base"));
    let pt = match (base, p) {
        (Base::AffineSpace(_), PointDesc::Hyperplane { hyperplane }) => return Ok(PrimeDivisor::Hyperplane(*hyperplane)),
        (Base::AffineSpace(_), PointDesc::Name(s)) => CurvePoint::label(s.clone()),
        (Base::Curve(CurveModel::P1), PointDesc::Name(s)) => match s.trim() {
            "inf" => CurvePoint::p1_inf(),
            t => CurvePoint::p1_at(&parse_rat(t).ok_or_else(bad)?)?,
        },
        (Base::Curve(CurveModel::EllipticQ { .. }), PointDesc::Name(s)) if s == "O" => CurvePoint::Infinity,
        (Base::Curve(_), PointDesc::Affine { x, y }) => CurvePoint::affine(x.0.clone(), y.0.clone()),
        (Base::Curve(_), PointDesc::Name(s)) => CurvePoint::label(s.clone()),
        _ => return Err(bad()),
    };
    Ok(PrimeDivisor::Point(pt))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

/// Deterministic rendering: pretty JSON with sorted keys, or one `path: value` line per leaf.
pub fn emit(value: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(value).expect("values serialize"),
        Format::Text => {
            let mut out = String::new();
            flatten(value, "", &mut out);
            out
        }
    }
}

pub fn emit_report(report: &ClassificationReport, format: Format) -> String {
    emit(&report_json(report), format)
}

fn flatten(v: &Value, path: &str, out: &mut String) {
    let join = |k: &str| if path.is_empty() { k.to_string() } else { format!("{path}.{k}") };
    match v {
        Value::Object(m) => m.iter().for_each(|(k, v)| flatten(v, &join(k), out)),
        Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) => {
            a.iter().enumerate().for_each(|(i, v)| flatten(v, &join(&i.to_string()), out))
        }
        Value::Array(a) => {
            let items: Vec<String> = a.iter().map(scalar).collect();
            out.push_str(&format!("{path}: [{}]\n", items.join(", ")));
        }
        _ => out.push_str(&format!("{path}: {}\n", scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// An integer in rank one, an array otherwise.
pub fn witness_value(w: &LatticeVec) -> Value {
    if w.rank() == 1 {
        json!(w.0[0])
    } else {
        json!(w.0)
    }
}

fn status_str(s: crate::classify::Status) -> &'static str {
    match s {
        crate::classify::Status::NotApplicable => "not_applicable",
        s => s.as_str(),
    }
}

pub fn verdict_json(v: &Verdict) -> Value {
    let mut m = Map::new();
    m.insert("verdict".into(), json!(status_str(v.status)));
    if let Some(c) = v.criterion {
        m.insert("criterion".into(), json!(c));
    }
    if let Some(r) = &v.reason {
        m.insert("reason".into(), json!(r));
    }
    if let Some(w) = &v.witness {
        m.insert("witness_m".into(), witness_value(w));
    }
    Value::Object(m)
}

pub fn properness_json(p: &Properness) -> Value {
    match p {
        Properness::Proper => json!({"verdict": "yes", "criterion": CRIT_PROPER}),
        Properness::NotProper { witness, reason } => json!({
            "verdict": "no",
            "criterion": CRIT_PROPER,
            "witness_m": witness.0.iter().map(fmt_rat).collect::<Vec<_>>(),
            "reason": reason,
        }),
        Properness::Unknown { reason } => json!({"verdict": "unknown", "criterion": CRIT_PROPER, "reason": reason}),
    }
}

pub fn gorenstein_json(data: Option<&GorensteinData>, v: &Verdict) -> Value {
    let mut out = verdict_json(v);
    if let (Some(g), Value::Object(m)) = (data, &mut out) {
        m.insert("m_G".into(), json!(fmt_rat(&g.m_g)));
        m.insert("D_G".into(), json!(g.d_g.to_string()));
        m.insert("integral".into(), json!(g.integral));
        m.insert("principal".into(), json!(status_str(g.principal_check.into())));
    }
    out
}

pub fn h1_json(h: &H1Report) -> Value {
    json!({
        "total": match h.total { H1Total::Finite(t) => json!(t), H1Total::Unknown => json!("unknown") },
        "bound": h.bound,
        "period": h.period,
        "entries": h.entries.iter().map(|(m, v)| json!([m, v.map_or(json!("unknown"), |v| json!(v))])).collect::<Vec<_>>(),
    })
}

pub fn profile_json(p: &FloorProfile) -> Value {
    json!({
        "period": p.period,
        "increment": p.increment,
        "values": p.values.iter().map(|(m, v)| json!([m, v])).collect::<Vec<_>>(),
    })
}

pub fn toric_json(c: &ToricCone, kind: &ConeType) -> Value {
    let diag = match kind {
        ConeType::Smooth => json!({"type": "smooth"}),
        ConeType::Simplicial { index } => json!({"type": "simplicial", "index": index.to_string()}),
        ConeType::NonSimplicial => json!({"type": "non_simplicial"}),
    };
    json!({
        "ambient_rank": c.ambient_rank(),
        "rays": c.rays().iter().map(|r| r.0.clone()).collect::<Vec<_>>(),
        "diagnostics": diag,
    })
}

pub fn ring_json(hilbert: &[u64], p: &Presentation) -> Value {
    json!({
        "hilbert": hilbert,
        "generators": generator_degrees(&p.generators)
            .iter()
            .map(|(d, c)| json!({"degree": d, "count": c}))
            .collect::<Vec<_>>(),
        "relations": p.relations.iter().map(|b| json!({
            "degree": b.degree,
            "kernel_dim": b.kernel_dim,
            "monomials": b.monomials,
            "vectors": b.relations.iter().map(|v| v.iter().map(fmt_rat).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

pub fn report_json(r: &ClassificationReport) -> Value {
    let mut elliptic = verdict_json(&r.elliptic);
    if let Value::Object(m) = &mut elliptic {
        m.insert("minimal".into(), json!(status_str(r.minimal_elliptic.status)));
    }
    let mut out = json!({
        "proper": properness_json(&r.proper),
        "rational": verdict_json(&r.rational),
        "cohen_macaulay": verdict_json(&r.cohen_macaulay),
        "gorenstein": gorenstein_json(r.gorenstein_data.as_ref(), &r.gorenstein),
        "elliptic": elliptic,
        "consistency": r.inconsistencies,
    });
    if let (Some(h), Value::Object(m)) = (&r.h1, &mut out) {
        m.insert("h1".into(), h1_json(h));
    }
    out
}
