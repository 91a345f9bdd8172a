//! Singularity verdicts for the affine variety of a polyhedral divisor on a curve.
//!
//! Every "for all m" quantifier is reduced to a finite check with an explicit
//! bound. The basic estimate is `sum floor(h_z(m)) > sum h_z(m) - l` where `l`
//! is the number of support points.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::curve::{CanonicalClass, CurveModel, CurvePoint, Decision, QDivisor};
use crate::error::{Error, Result};
use crate::linalg;
use crate::pdiv::{Base, PolyhedralDivisor, Properness};
use crate::rat::{ceil, floor, fmt_rat, lcm_denominators, to_i64, LatticeVec, Rat, RatVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Yes,
    No,
    Unknown,
    NotApplicable,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Yes => "yes",
            Status::No => "no",
            Status::Unknown => "unknown",
            Status::NotApplicable => "n/a",
        }
    }
}

impl From<Decision> for Status {
    fn from(d: Decision) -> Status {
        match d {
            Decision::Yes => Status::Yes,
            Decision::No => Status::No,
            Decision::Unknown => Status::Unknown,
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A verdict with the criterion that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub criterion: Option<&'static str>,
    pub reason: Option<String>,
    pub witness: Option<LatticeVec>,
}

impl Verdict {
    fn new(status: Status, criterion: &'static str) -> Verdict {
        Verdict { status, criterion: Some(criterion), reason: None, witness: None }
    }

    fn with_reason(mut self, reason: impl Into<String>) -> Verdict {
        self.reason = Some(reason.into());
        self
    }

    fn with_witness(mut self, w: LatticeVec) -> Verdict {
        self.witness = Some(w);
        self
    }

    pub fn not_applicable(reason: impl Into<String>) -> Verdict {
        Verdict { status: Status::NotApplicable, criterion: None, reason: Some(reason.into()), witness: None }
    }
}

pub const CRIT_RATIONAL_AFFINE: &str = "Cor. rcom1(i)";
pub const CRIT_RATIONAL_P1: &str = "Cor. rcom1(ii)";
pub const CRIT_RATIONAL_TOROIDAL: &str = "Lemma toroidal";
pub const CRIT_ACYCLIC: &str = "Cor. acyc";
pub const CRIT_CM_AFFINE: &str = "Cor. cm1(i)";
pub const CRIT_CM_SURFACE: &str = "Cor. cm1(ii)";
pub const CRIT_CM_DEGREE: &str = "Cor. cm1(iii)";
pub const CRIT_CM_ISOLATED: &str = "Cor. cm-isolated";
pub const CRIT_GORENSTEIN: &str = "Prop. gor";
pub const CRIT_ELLIPTIC: &str = "Thm. ellip";
pub const CRIT_PROPER: &str = "Def. ppd";

/// One nonzero coefficient `p/q` of `D(1)` in lowest terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaySlope {
    pub point: CurvePoint,
    pub p: BigInt,
    pub q: BigInt,
}

impl RaySlope {
    pub fn value(&self) -> Rat {
        Rat::new(self.p.clone(), self.q.clone())
    }
}

/// The nonzero coefficients of `D(1)` for a rank-one divisor with tail `Q>=0`.
pub fn ray_slope_data(d: &PolyhedralDivisor) -> Result<Vec<RaySlope>> {
    let ok_tail = d.lattice_rank() == 1 && d.tail().rays() == [LatticeVec(vec![1])];
    if !ok_tail || d.base().curve().is_none() {
        return Err(Error::WrongShape("needs lattice rank 1, tail cone Q>=0 and a curve base".into()));
    }
    let d1 = d.evaluate(&RatVec::from_ints(&[1]))?;
    Ok(d1
        .terms()
        .iter()
        .map(|(pt, c)| RaySlope { point: pt.clone(), p: c.numer().clone(), q: c.denom().clone() })
        .collect())
}

/// Rank-one data on a projective curve: the curve, the slopes and `deg D(1)`.
struct RankOne {
    curve: CurveModel,
    slopes: Vec<RaySlope>,
    degree: Rat,
}

impl RankOne {
    fn of(d: &PolyhedralDivisor) -> Result<RankOne> {
        let curve = d.require_rank_one_projective()?.clone();
        let slopes = ray_slope_data(d)?;
        let degree = slopes.iter().map(RaySlope::value).sum();
        Ok(RankOne { curve, slopes, degree })
    }

    fn ell(&self) -> i64 {
        self.slopes.len() as i64
    }

    fn period(&self) -> BigInt {
        self.slopes.iter().fold(BigInt::one(), |acc, s| acc.lcm(&s.q))
    }

    fn floor_degree(&self, m: i64) -> BigInt {
        let m = BigInt::from(m);
        self.slopes.iter().map(|s| (&m * &s.p).div_floor(&s.q)).sum()
    }

    fn floor_divisor(&self, m: i64) -> Result<QDivisor> {
        let m = BigInt::from(m);
        QDivisor::from_terms(
            self.curve.clone(),
            self.slopes.iter().map(|s| (s.point.clone(), Rat::from_integer((&m * &s.p).div_floor(&s.q)))),
        )
    }

    fn require_positive_degree(&self) -> Result<()> {
        if self.degree.is_positive() {
            Ok(())
        } else {
            Err(Error::NotProper(format!("deg D(1) = {} is not positive", fmt_rat(&self.degree))))
        }
    }

    /// Smallest `m >= 0` with `m * deg D(1) >= target` (0 if the target is not positive).
    fn threshold(&self, target: i64) -> Result<i64> {
        let t = ceil(&(Rat::from_integer(target.into()) / &self.degree));
        Ok(to_i64(&t)?.max(0))
    }
}

/// `deg floor(m D(1))` for `m = 0..=m_max` with its quasi-period.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FloorProfile {
    pub values: Vec<(i64, i64)>,
    /// `q = lcm(q_i)`.
    pub period: i64,
    /// `q * deg D(1)`; the profile shifts by this much per period.
    pub increment: i64,
}

pub fn floor_degree_profile(d: &PolyhedralDivisor, m_max: u64) -> Result<FloorProfile> {
    let r = RankOne::of(d)?;
    let m_max = i64::try_from(m_max).map_err(|_| Error::Overflow)?;
    let values = (0..=m_max)
        .map(|m| Ok((m, to_i64(&r.floor_degree(m))?)))
        .collect::<Result<Vec<_>>>()?;
    let period = r.period();
    let increment = (Rat::from_integer(period.clone()) * &r.degree).to_integer();
    Ok(FloorProfile { values, period: to_i64(&period)?, increment: to_i64(&increment)? })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FloorBound {
    HoldsEverywhere,
    Witness(LatticeVec),
}

/// Decides whether `sum_z floor(h_z(m)) >= c` for every lattice point `m` of the weight cone.
///
/// On a simplicial chamber with generators `u_j`, each `h_z` is linear. With `p_j`
/// the lcm of the denominators of the `h_z(u_j)`, the shift `m -> m + p_j u_j`
/// adds the integer `p_j * deg D(u_j) >= 0` to the floor sum. The minimum over the
/// chamber is therefore attained at some `m = sum lambda_j u_j` with
/// `0 <= lambda_j < p_j`, and those finitely many lattice points are enumerated.
/// The witness is the violation of least sup-norm (then lexicographic) among them.
pub fn decide_floor_bound(d: &PolyhedralDivisor, c: i64) -> Result<FloorBound> {
    if !d.base().is_projective() {
        return Err(Error::WrongShape("floor bounds need a projective curve base".into()));
    }
    if let Properness::NotProper { reason, .. } = d.is_proper() {
        return Err(Error::NotProper(reason));
    }
    let rank = d.lattice_rank();
    let fan = d.chamber_fan()?;
    let c = BigInt::from(c);
    let mut best: Option<LatticeVec> = None;

    for chamber in &fan.chambers {
        let gens = chamber.cone.rays();
        if gens.len() != rank {
            return Err(Error::WrongShape("chamber is not full-dimensional".into()));
        }
        let verts: Vec<&RatVec> = d
            .coefficients()
            .iter()
            .zip(&chamber.minimizers)
            .map(|((_, p), &i)| &p.vertices()[i])
            .collect();
        let periods = gens
            .iter()
            .map(|u| {
                let vals: Vec<Rat> = verts.iter().map(|v| v.dot_lattice(u)).collect();
                to_i64(&lcm_denominators(&vals))
            })
            .collect::<Result<Vec<i64>>>()?;

        for base in fundamental_points(gens)? {
            let mut n = vec![0i64; rank];
            loop {
                let m: Vec<i64> = (0..rank)
                    .map(|i| base[i] + (0..rank).map(|j| n[j] * gens[j].0[i]).sum::<i64>())
                    .collect();
                let m = LatticeVec(m);
                let mr = m.to_rat();
                let f: BigInt = verts.iter().map(|v| floor(&v.dot(&mr))).sum();
                if f < c && best.as_ref().is_none_or(|b| witness_key(&m) < witness_key(b)) {
                    best = Some(m);
                }
                if !advance(&mut n, &periods) {
                    break;
                }
            }
        }
    }
    Ok(best.map_or(FloorBound::HoldsEverywhere, FloorBound::Witness))
}

fn witness_key(m: &LatticeVec) -> (i64, &[i64]) {
    (m.sup_norm(), &m.0)
}

/// Odometer over `0 <= n_j < limits_j`; false once exhausted.
fn advance(n: &mut [i64], limits: &[i64]) -> bool {
    for (v, &l) in n.iter_mut().zip(limits) {
        *v += 1;
        if *v < l {
            return true;
        }
        *v = 0;
    }
    false
}

/// Lattice points `sum lambda_j u_j` with `0 <= lambda_j < 1`.
fn fundamental_points(gens: &[LatticeVec]) -> Result<Vec<Vec<i64>>> {
    let n = gens.len();
    // columns are the generators
    let u: Vec<Vec<Rat>> = (0..n).map(|i| gens.iter().map(|g| Rat::from_integer(g.0[i].into())).collect()).collect();
    let lo: Vec<i64> = (0..n).map(|i| gens.iter().map(|g| g.0[i].min(0)).sum()).collect();
    let hi: Vec<i64> = (0..n).map(|i| gens.iter().map(|g| g.0[i].max(0)).sum()).collect();
    let limits: Vec<i64> = lo.iter().zip(&hi).map(|(l, h)| h - l + 1).collect();
    let mut out = Vec::new();
    let mut k = vec![0i64; n];
    loop {
        let m: Vec<i64> = (0..n).map(|i| lo[i] + k[i]).collect();
        let rhs: Vec<Rat> = m.iter().map(|&v| Rat::from_integer(v.into())).collect();
        let lambda = linalg::solve(&u, &rhs).ok_or_else(|| Error::WrongShape("degenerate chamber".into()))?;
        if lambda.iter().all(|l| !l.is_negative() && *l < Rat::one()) {
            out.push(m);
        }
        if !advance(&mut k, &limits) {
            break;
        }
    }
    Ok(out)
}

/// Rational singularities of the affine variety.
pub fn rational_singularities(d: &PolyhedralDivisor) -> Result<Verdict> {
    let base = d.base();
    match base {
        Base::AffineSpace(_) => return Ok(Verdict::new(Status::Yes, CRIT_RATIONAL_TOROIDAL)),
        Base::Curve(c) if !c.is_projective() => return Ok(Verdict::new(Status::Yes, CRIT_RATIONAL_AFFINE)),
        Base::Curve(_) => {}
    }
    if let Properness::NotProper { reason, .. } = d.is_proper() {
        return Err(Error::NotProper(reason));
    }
    let genus = base.curve().and_then(CurveModel::genus).unwrap_or(0);
    if genus >= 1 {
        return Ok(Verdict::new(Status::No, CRIT_ACYCLIC).with_reason(format!("H^1(Y, O_Y) has dimension {genus}")));
    }
    Ok(match decide_floor_bound(d, -1)? {
        FloorBound::HoldsEverywhere => Verdict::new(Status::Yes, CRIT_RATIONAL_P1),
        FloorBound::Witness(m) => Verdict::new(Status::No, CRIT_RATIONAL_P1)
            .with_reason(format!("deg floor(D(m)) < -1 at m = {m}"))
            .with_witness(m),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum H1Total {
    Finite(u64),
    Unknown,
}

/// `dim H^1(Y, floor(m D(1)))` for `m = 0..` past the vanishing bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H1Report {
    /// `(m, h1)`; `None` where the curve model cannot decide.
    pub entries: Vec<(i64, Option<u64>)>,
    pub total: H1Total,
    /// `h1 = 0` for every `m > bound`.
    pub bound: i64,
    pub period: i64,
}

/// `m_max` only extends the listing; the total always runs to the certified bound.
pub fn h1_report(d: &PolyhedralDivisor, m_max: Option<u64>) -> Result<H1Report> {
    let r = RankOne::of(d)?;
    r.require_positive_degree()?;
    let g = i64::from(r.curve.genus().unwrap_or(0));
    // deg floor(mD_1) > m deg D_1 - l >= 2g - 2 forces h1 = 0
    let bound = [r.threshold(r.ell())?, r.threshold(r.ell() - 2)?, r.threshold(r.ell() + 2 * g - 2)?, to_i64(&r.period())?]
        .into_iter()
        .max()
        .unwrap_or(0);
    let last = bound.max(i64::try_from(m_max.unwrap_or(0)).map_err(|_| Error::Overflow)?);
    let mut entries = Vec::new();
    let mut total = Some(0u64);
    for m in 0..=last {
        let h = r.floor_divisor(m)?.h1_dim()?;
        if m <= bound {
            total = match (total, h) {
                (Some(t), Some(h)) => Some(t + h),
                _ => None,
            };
        }
        entries.push((m, h));
    }
    Ok(H1Report {
        entries,
        total: total.map_or(H1Total::Unknown, H1Total::Finite),
        bound,
        period: to_i64(&r.period())?,
    })
}

/// Cohen-Macaulay verdict by the first applicable rule.
pub fn cohen_macaulay(d: &PolyhedralDivisor, isolated_asserted: bool) -> Result<Verdict> {
    if d.base().is_affine() {
        return Ok(Verdict::new(Status::Yes, CRIT_CM_AFFINE).with_reason("affine base: rational, hence Cohen-Macaulay"));
    }
    if let Properness::NotProper { reason, .. } = d.is_proper() {
        return Err(Error::NotProper(reason));
    }
    if d.lattice_rank() == 1 {
        return Ok(Verdict::new(Status::Yes, CRIT_CM_SURFACE).with_reason("normal surface"));
    }
    let deg = d.degree_polyhedron()?;
    let mut misses_all = true;
    for rho in d.tail().rays() {
        if deg.meets_ray(rho)? {
            misses_all = false;
            break;
        }
    }
    let criterion = if misses_all {
        CRIT_CM_DEGREE
    } else if isolated_asserted {
        CRIT_CM_ISOLATED
    } else {
        return Ok(Verdict {
            status: Status::Unknown,
            criterion: None,
            reason: Some("deg D meets an extremal ray of the tail cone and isolatedness is not asserted".into()),
            witness: None,
        });
    };
    let rational = rational_singularities(d)?;
    Ok(Verdict {
        status: rational.status,
        criterion: Some(criterion),
        reason: Some("Cohen-Macaulay iff rational singularities".into()),
        witness: rational.witness,
    })
}

/// Multiplicities of the invariant divisors in `K_X` and of semi-invariant functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalData {
    pub canonical_base: CanonicalClass,
    /// `(z_i, q_i - 1)`: the coefficient of `D_i` in `K_X` beyond the pullback of `K_Y`.
    pub exceptional: Vec<(CurvePoint, BigInt)>,
    pub slopes: Vec<RaySlope>,
}

pub fn canonical_data(d: &PolyhedralDivisor) -> Result<CanonicalData> {
    let r = RankOne::of(d)?;
    Ok(CanonicalData {
        canonical_base: r.curve.canonical_divisor()?,
        exceptional: r.slopes.iter().map(|s| (s.point.clone(), &s.q - 1)).collect(),
        slopes: r.slopes,
    })
}

impl CanonicalData {
    /// Coefficients of `div(f chi^m)` on the invariant divisors `D_z`, given `div f`:
    /// `q_i ord_{z_i}(f) + m p_i` on `D_i` and `ord_z(f)` elsewhere.
    pub fn semi_invariant_divisor(&self, div_f: &QDivisor, m: i64) -> Result<BTreeMap<CurvePoint, BigInt>> {
        if !div_f.is_integral() {
            return Err(Error::NonIntegralDivisor);
        }
        let mut out: BTreeMap<CurvePoint, BigInt> =
            div_f.terms().iter().map(|(p, c)| (p.clone(), c.to_integer())).collect();
        for s in &self.slopes {
            let e = out.entry(s.point.clone()).or_default();
            *e = &*e * &s.q + BigInt::from(m) * &s.p;
        }
        out.retain(|_, v| !v.is_zero());
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GorensteinData {
    pub m_g: Rat,
    pub d_g: QDivisor,
    pub integral: bool,
    pub principal_check: Decision,
}

/// `m_G = (deg K_Y + sum (q_i - 1)/q_i) / deg D(1)` and `d_i = (p_i m_G + 1)/q_i - 1`.
pub fn gorenstein_data(d: &PolyhedralDivisor) -> Result<GorensteinData> {
    let r = RankOne::of(d)?;
    r.require_positive_degree()?;
    let k = r.curve.canonical_divisor()?;
    let ramification: Rat = r.slopes.iter().map(|s| Rat::new(&s.q - 1, s.q.clone())).sum();
    let m_g = (k.degree() + ramification) / &r.degree;
    let d_g = QDivisor::from_terms(
        r.curve.clone(),
        r.slopes.iter().map(|s| {
            let p = Rat::from_integer(s.p.clone());
            let q = Rat::from_integer(s.q.clone());
            (s.point.clone(), (p * &m_g + Rat::one()) / q - Rat::one())
        }),
    )?;
    let integral = m_g.is_integer() && d_g.is_integral();
    let principal_check = if !integral {
        Decision::No
    } else {
        match &k {
            CanonicalClass::Divisor(kd) => d_g.sub(kd)?.is_principal()?,
            CanonicalClass::Formal { degree } => {
                if d_g.degree()? != Rat::from_integer((*degree).into()) {
                    Decision::No
                } else if r.curve.genus() == Some(0) {
                    Decision::Yes
                } else {
                    Decision::Unknown
                }
            }
        }
    };
    Ok(GorensteinData { m_g, d_g, integral, principal_check })
}

pub fn gorenstein(d: &PolyhedralDivisor) -> Result<(GorensteinData, Verdict)> {
    if d.base().is_affine() {
        return Err(Error::NotApplicable("Gorenstein criterion covers projective curve bases only".into()));
    }
    let data = gorenstein_data(d)?;
    let v = Verdict::new(Status::Yes, CRIT_GORENSTEIN);
    let v = if !data.m_g.is_integer() {
        Verdict { status: Status::No, ..v }.with_reason(format!("m_G = {} is not integral", fmt_rat(&data.m_g)))
    } else if let Some((z, c)) = data.d_g.terms().iter().find(|(_, c)| !c.is_integer()) {
        Verdict { status: Status::No, ..v }.with_reason(format!("d at {z} = {} is not integral", fmt_rat(c)))
    } else {
        match data.principal_check {
            Decision::Yes => v,
            Decision::No => Verdict { status: Status::No, ..v }.with_reason("D_G - K_Y is not principal"),
            Decision::Unknown => Verdict { status: Status::Unknown, ..v }
                .with_reason("principality of D_G - K_Y is undecidable on this curve model"),
        }
    };
    Ok((data, v))
}

/// Elliptic and minimal elliptic verdicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllipticResult {
    /// On P1 the witness is the unique `m` with `deg floor(m D(1)) = -2`.
    pub verdict: Verdict,
    pub minimal: Status,
    /// Largest `m` inspected.
    pub bound: i64,
}

pub fn elliptic_singularity(d: &PolyhedralDivisor) -> Result<EllipticResult> {
    let r = RankOne::of(d)?;
    r.require_positive_degree()?;
    let genus = r.curve.genus().unwrap_or(0);
    let v = Verdict::new(Status::Yes, CRIT_ELLIPTIC);
    let (verdict, bound) = match genus {
        0 => {
            // beyond the bound, deg floor(m D_1) > m deg D_1 - l >= -2
            let bound = r.threshold(r.ell() - 2)?.max(to_i64(&r.period())?);
            let mut hits = Vec::new();
            let mut below = None;
            for m in 1..=bound {
                let f = r.floor_degree(m);
                if f < BigInt::from(-2) {
                    below = Some(m);
                    break;
                }
                if f == BigInt::from(-2) {
                    hits.push(m);
                }
            }
            let verdict = match (below, hits.as_slice()) {
                (Some(m), _) => Verdict { status: Status::No, ..v }
                    .with_reason(format!("deg floor({m} D_1) < -2"))
                    .with_witness(LatticeVec(vec![m])),
                (None, [m]) => v.with_witness(LatticeVec(vec![*m])),
                (None, []) => Verdict { status: Status::No, ..v }.with_reason("deg floor(m D_1) = -2 never occurs"),
                (None, many) => Verdict { status: Status::No, ..v }
                    .with_reason(format!("deg floor(m D_1) = -2 for m = {} and {}", many[0], many[1]))
                    .with_witness(LatticeVec(vec![many[1]])),
            };
            (verdict, bound)
        }
        1 => {
            // beyond the bound, deg floor(m D_1) > 0
            let bound = r.threshold(r.ell())?;
            let mut verdict = v.clone();
            for m in 1..=bound {
                let fd = r.floor_divisor(m)?;
                let deg = fd.degree()?;
                let fail = if deg.is_negative() {
                    Some(Status::No)
                } else if deg.is_zero() {
                    match fd.is_principal()? {
                        Decision::No => None,
                        Decision::Yes => Some(Status::No),
                        Decision::Unknown => Some(Status::Unknown),
                    }
                } else {
                    None
                };
                if let Some(status) = fail {
                    let reason = if status == Status::No {
                        format!("floor({m} D_1) has negative degree or is principal")
                    } else {
                        format!("principality of floor({m} D_1) is undecidable on this curve model")
                    };
                    verdict = Verdict { status, ..v.clone() }.with_reason(reason).with_witness(LatticeVec(vec![m]));
                    if status == Status::No {
                        break;
                    }
                }
            }
            (verdict, bound)
        }
        g => (
            Verdict { status: Status::No, ..v }.with_reason(format!("base curve has genus {g} > 1")),
            0,
        ),
    };
    let minimal = match verdict.status {
        Status::Yes => gorenstein(d)?.1.status,
        Status::No => Status::No,
        s => s,
    };
    Ok(EllipticResult { verdict, minimal, bound })
}

/// All verdicts for one divisor together with internal consistency checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub proper: Properness,
    pub rational: Verdict,
    pub cohen_macaulay: Verdict,
    pub gorenstein: Verdict,
    pub gorenstein_data: Option<GorensteinData>,
    pub elliptic: Verdict,
    pub minimal_elliptic: Verdict,
    pub h1: Option<H1Report>,
    /// Violated consistency checks; empty on a sound run.
    pub inconsistencies: Vec<String>,
}

impl ClassificationReport {
    pub fn has_unknown(&self) -> bool {
        matches!(self.proper, Properness::Unknown { .. })
            || [&self.rational, &self.cohen_macaulay, &self.gorenstein, &self.elliptic, &self.minimal_elliptic]
                .iter()
                .any(|v| v.status == Status::Unknown)
    }
}

pub fn classify_report(d: &PolyhedralDivisor, isolated_asserted: bool) -> Result<ClassificationReport> {
    let violations = d.validate();
    if !violations.is_empty() {
        return Err(Error::Invalid(violations));
    }
    let proper = d.is_proper();
    if let Properness::NotProper { .. } = proper {
        let na = || Verdict::not_applicable("divisor is not proper");
        return Ok(ClassificationReport {
            proper,
            rational: na(),
            cohen_macaulay: na(),
            gorenstein: na(),
            gorenstein_data: None,
            elliptic: na(),
            minimal_elliptic: na(),
            h1: None,
            inconsistencies: Vec::new(),
        });
    }
    let or_na = |r: Result<Verdict>| r.unwrap_or_else(|e| Verdict::not_applicable(e.to_string()));
    let rational = or_na(rational_singularities(d));
    let cohen_macaulay = or_na(cohen_macaulay(d, isolated_asserted));
    let (gorenstein, gorenstein_data) = match gorenstein(d) {
        Ok((data, v)) => (v, Some(data)),
        Err(e) => (Verdict::not_applicable(e.to_string()), None),
    };
    let (elliptic, minimal_elliptic) = match elliptic_singularity(d) {
        Ok(e) => {
            let minimal = Verdict {
                status: e.minimal,
                criterion: Some(CRIT_ELLIPTIC),
                reason: None,
                witness: None,
            };
            (e.verdict, minimal)
        }
        Err(e) => (Verdict::not_applicable(e.to_string()), Verdict::not_applicable(e.to_string())),
    };
    let h1 = h1_report(d, None).ok();

    let mut inconsistencies = Vec::new();
    if elliptic.status == Status::Yes && rational.status != Status::No {
        inconsistencies.push("elliptic singularity reported as rational".to_string());
    }
    if let Some(h) = &h1 {
        let zero_total = h.total == H1Total::Finite(0);
        let known = h.total != H1Total::Unknown && rational.status != Status::Unknown;
        if known && zero_total != (rational.status == Status::Yes) {
            inconsistencies.push("h1 total vanishes but the rationality verdict disagrees".to_string());
        }
    }
    if let Some(g) = &gorenstein_data {
        let k = d.base().curve().map(CurveModel::canonical_divisor).transpose()?;
        if let (Some(k), Ok(deg)) = (k, g.d_g.degree()) {
            if deg != k.degree() {
                inconsistencies.push("deg D_G differs from deg K_Y".to_string());
            }
        }
    }
    if cohen_macaulay.status == Status::No && rational.status == Status::Yes {
        inconsistencies.push("rational singularities reported as not Cohen-Macaulay".to_string());
    }

    Ok(ClassificationReport {
        proper,
        rational,
        cohen_macaulay,
        gorenstein,
        gorenstein_data,
        elliptic,
        minimal_elliptic,
        h1,
        inconsistencies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedral::{Cone, TailedPolyhedron};
    use crate::rat::{int, rat};
    use num_traits::ToPrimitive;

    fn rank_one(curve: CurveModel, coeffs: &[(CurvePoint, Rat)]) -> PolyhedralDivisor {
        let q1 = Cone::orthant(1);
        PolyhedralDivisor::new(
            Base::Curve(curve),
            q1.clone(),
            coeffs.iter().map(|(p, c)| {
                (
                    crate::pdiv::PrimeDivisor::Point(p.clone()),
                    TailedPolyhedron::point(RatVec(vec![c.clone()]), q1.clone()).unwrap(),
                )
            }),
        )
        .unwrap()
    }

    fn p1(c0: Rat, c1: Rat, cinf: Rat) -> PolyhedralDivisor {
        rank_one(
            CurveModel::P1,
            &[(CurvePoint::p1_zero(), c0), (CurvePoint::p1_one(), c1), (CurvePoint::p1_inf(), cinf)],
        )
    }

    fn ex_i() -> PolyhedralDivisor {
        p1(rat(-1, 4), rat(-1, 4), rat(3, 4))
    }

    fn ex_ii() -> PolyhedralDivisor {
        p1(rat(-1, 3), rat(-1, 3), rat(3, 4))
    }

    fn ex_iii() -> PolyhedralDivisor {
        p1(rat(-2, 3), rat(-2, 3), rat(17, 12))
    }

    fn zero_point() -> PolyhedralDivisor {
        rank_one(CurveModel::P1, &[(CurvePoint::p1_zero(), int(1))])
    }

    #[test]
    fn profiles() {
        let p = floor_degree_profile(&ex_i(), 4).unwrap();
        assert_eq!(p.values, vec![(0, 0), (1, -2), (2, -1), (3, 0), (4, 1)]);
        assert_eq!((p.period, p.increment), (4, 1));
        let p = floor_degree_profile(&ex_iii(), 2).unwrap();
        assert_eq!(p.values[2], (2, -2));
    }

    #[test]
    fn floor_bound_examples() {
        assert_eq!(decide_floor_bound(&ex_i(), -1).unwrap(), FloorBound::Witness(LatticeVec(vec![1])));
        assert_eq!(decide_floor_bound(&ex_i(), -2).unwrap(), FloorBound::HoldsEverywhere);
        assert_eq!(decide_floor_bound(&zero_point(), -1).unwrap(), FloorBound::HoldsEverywhere);
    }

    #[test]
    fn slopes_and_canonical() {
        let s = ray_slope_data(&ex_iii()).unwrap();
        let triples: Vec<(String, i64, i64)> =
            s.iter().map(|s| (s.point.to_string(), s.p.to_i64().unwrap(), s.q.to_i64().unwrap())).collect();
        assert_eq!(
            triples,
            vec![("0".into(), -2, 3), ("1".into(), -2, 3), ("inf".into(), 17, 12)]
        );
        let k = canonical_data(&ex_iii()).unwrap();
        let mult: Vec<i64> = k.exceptional.iter().map(|(_, c)| c.to_i64().unwrap()).collect();
        assert_eq!(mult, vec![2, 2, 11]);
        let k = canonical_data(&zero_point()).unwrap();
        assert!(k.exceptional.iter().all(|(_, c)| c.is_zero()));
    }

    #[test]
    fn semi_invariant_divisor_of_chi() {
        let k = canonical_data(&ex_i()).unwrap();
        let f = QDivisor::zero(CurveModel::P1);
        let div = k.semi_invariant_divisor(&f, 4).unwrap();
        let v: Vec<i64> = div.values().map(|c| c.to_i64().unwrap()).collect();
        assert_eq!(v, vec![-4, -4, 12]);
    }

    #[test]
    fn gorenstein_examples() {
        let (g, v) = gorenstein(&ex_i()).unwrap();
        assert_eq!(g.m_g, int(1));
        assert_eq!(g.d_g.to_string(), "-1[0] -1[1]");
        assert_eq!(v.status, Status::Yes);

        let (g, v) = gorenstein(&ex_ii()).unwrap();
        assert_eq!(g.m_g, int(1));
        assert_eq!(v.status, Status::Yes);

        let (g, v) = gorenstein(&ex_iii()).unwrap();
        assert_eq!(g.m_g, int(3));
        assert_eq!(g.d_g.coefficient(&CurvePoint::p1_zero()), rat(-8, 3));
        assert_eq!(v.status, Status::No);

        let aff = rank_one(CurveModel::AffineLine, &[]);
        assert!(matches!(gorenstein(&aff), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn elliptic_examples() {
        let e = elliptic_singularity(&ex_i()).unwrap();
        assert_eq!(e.verdict.status, Status::Yes);
        assert_eq!(e.verdict.witness, Some(LatticeVec(vec![1])));
        assert_eq!(e.minimal, Status::Yes);

        let e = elliptic_singularity(&ex_iii()).unwrap();
        assert_eq!(e.verdict.witness, Some(LatticeVec(vec![2])));
        assert_eq!(e.minimal, Status::No);

        let e = elliptic_singularity(&zero_point()).unwrap();
        assert_eq!(e.verdict.status, Status::No);
    }

    #[test]
    fn elliptic_curve_base() {
        // y^2 = x^3 - x, D_1 = 1/2 [O]: floor(m D_1) = floor(m/2)[O]
        let e = CurveModel::elliptic(int(-1), int(0)).unwrap();
        let d = rank_one(e.clone(), &[(CurvePoint::Infinity, rat(1, 2))]);
        // m = 1 gives the principal zero divisor
        assert_eq!(elliptic_singularity(&d).unwrap().verdict.status, Status::No);

        // D_1 = [P] - 1/2[O] with P = (0,0): floor(1 D_1) = [P] - [O], not principal, deg 0
        let d = rank_one(e, &[(CurvePoint::affine(int(0), int(0)), int(1)), (CurvePoint::Infinity, rat(-1, 2))]);
        let r = elliptic_singularity(&d).unwrap();
        // m = 2: 2[P] - [O] deg 1; m = 1 deg 0 non-principal
        assert_eq!(r.verdict.status, Status::Yes);
        assert_eq!(rational_singularities(&d).unwrap().status, Status::No);
        assert_eq!(h1_report(&d, None).unwrap().total, H1Total::Finite(1));
    }

    #[test]
    fn rational_and_h1() {
        let v = rational_singularities(&ex_i()).unwrap();
        assert_eq!((v.status, v.witness), (Status::No, Some(LatticeVec(vec![1]))));
        assert_eq!(h1_report(&ex_i(), None).unwrap().total, H1Total::Finite(1));
        assert_eq!(h1_report(&ex_iii(), None).unwrap().total, H1Total::Finite(1));
        let z = h1_report(&zero_point(), None).unwrap();
        assert_eq!(z.total, H1Total::Finite(0));
        assert!(z.entries.iter().all(|(_, h)| *h == Some(0)));
        assert_eq!(rational_singularities(&zero_point()).unwrap().status, Status::Yes);

        let aff = rank_one(CurveModel::AffineLine, &[(CurvePoint::label("a"), rat(1, 3))]);
        assert_eq!(rational_singularities(&aff).unwrap().criterion, Some(CRIT_RATIONAL_AFFINE));

        let e = CurveModel::elliptic(int(-1), int(0)).unwrap();
        let d = rank_one(e, &[(CurvePoint::Infinity, int(1))]);
        assert_eq!(rational_singularities(&d).unwrap().criterion, Some(CRIT_ACYCLIC));
    }

    #[test]
    fn reports() {
        let r = classify_report(&ex_ii(), false).unwrap();
        assert_eq!(r.proper, Properness::Proper);
        assert_eq!(r.rational.status, Status::No);
        assert_eq!(r.cohen_macaulay.status, Status::Yes);
        assert_eq!(r.gorenstein.status, Status::Yes);
        assert_eq!(r.elliptic.status, Status::Yes);
        assert_eq!(r.minimal_elliptic.status, Status::Yes);
        assert!(r.inconsistencies.is_empty());

        let aff = rank_one(CurveModel::AffineLine, &[]);
        let r = classify_report(&aff, false).unwrap();
        assert_eq!(r.rational.status, Status::Yes);
        assert_eq!(r.cohen_macaulay.status, Status::Yes);
        assert_eq!(r.gorenstein.status, Status::NotApplicable);
        assert_eq!(r.elliptic.status, Status::NotApplicable);

        let g2 = rank_one(
            CurveModel::AbstractProjective { genus: 2 },
            &[(CurvePoint::label("p"), rat(1, 2))],
        );
        let r = classify_report(&g2, false).unwrap();
        assert_eq!(r.rational.status, Status::No);
        assert_eq!(r.elliptic.status, Status::No);
    }
}
