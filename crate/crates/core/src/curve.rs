//! Base curves, Q-divisors on them, and the cohomology dimensions of integral divisors.
//!
//! Four models are supported: the projective line, elliptic curves in short
//! Weierstrass form over Q, an abstract smooth projective curve known only by
//! its genus, and affine curves. Questions that cannot be answered without a
//! point model (principality and torsion on the abstract curve) come back as
//! [`Decision::Unknown`] instead of a guess.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::rat::{floor, fmt_rat, int, Rat};

/// Largest order of a rational torsion point on an elliptic curve over Q.
pub const MAX_TORSION_ORDER: u32 = 12;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CurveModel {
    P1,
    /// `y^2 = x^3 + a x + b`.
    EllipticQ { a: Rat, b: Rat },
    AbstractProjective { genus: u32 },
    AffineLine,
    AbstractAffine,
}

impl CurveModel {
    /// Elliptic curve `y^2 = x^3 + a x + b`; rejects singular cubics.
    pub fn elliptic(a: Rat, b: Rat) -> Result<CurveModel> {
        let disc = int(4) * &a * &a * &a + int(27) * &b * &b;
        if disc.is_zero() {
            return Err(Error::Semantic("singular Weierstrass cubic (4a^3 + 27b^2 = 0)".into()));
        }
        Ok(CurveModel::EllipticQ { a, b })
    }

    pub fn is_projective(&self) -> bool {
        matches!(
            self,
            CurveModel::P1 | CurveModel::EllipticQ { .. } | CurveModel::AbstractProjective { .. }
        )
    }

    /// Genus of a projective model.
    pub fn genus(&self) -> Option<u32> {
        match self {
            CurveModel::P1 => Some(0),
            CurveModel::EllipticQ { .. } => Some(1),
            CurveModel::AbstractProjective { genus } => Some(*genus),
            CurveModel::AffineLine | CurveModel::AbstractAffine => None,
        }
    }

    /// Whether `p` is a valid point of this model.
    pub fn contains(&self, p: &CurvePoint) -> bool {
        match (self, p) {
            (CurveModel::P1, CurvePoint::Proj { .. }) => true,
            (CurveModel::EllipticQ { .. }, CurvePoint::Infinity) => true,
            (CurveModel::EllipticQ { a, b }, CurvePoint::Affine { x, y }) => {
                y * y == x * x * x + a * x + b
            }
            (
                CurveModel::AbstractProjective { .. }
                | CurveModel::AffineLine
                | CurveModel::AbstractAffine,
                CurvePoint::Label(_),
            ) => true,
            _ => false,
        }
    }

    /// Chord-tangent addition on an elliptic model.
    pub fn ec_add(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint> {
        self.as_elliptic()?.add(p, q)
    }

    fn as_elliptic(&self) -> Result<EllipticCurve> {
        match self {
            CurveModel::EllipticQ { a, b } => Ok(EllipticCurve { a: a.clone(), b: b.clone() }),
            _ => Err(Error::WrongShape("not an elliptic curve model".into())),
        }
    }

    /// Degree-determined canonical class: `-2[inf]` on P1, `0` on an elliptic curve,
    /// a formal class of degree `2g - 2` on an abstract curve.
    pub fn canonical_divisor(&self) -> Result<CanonicalClass> {
        match self {
            CurveModel::P1 => Ok(CanonicalClass::Divisor(QDivisor::from_terms(
                self.clone(),
                [(CurvePoint::p1_inf(), int(-2))],
            )?)),
            CurveModel::EllipticQ { .. } => Ok(CanonicalClass::Divisor(QDivisor::zero(self.clone()))),
            CurveModel::AbstractProjective { genus } => {
                Ok(CanonicalClass::Formal { degree: 2 * *genus as i64 - 2 })
            }
            CurveModel::AffineLine | CurveModel::AbstractAffine => Err(Error::AffineCurve),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CanonicalClass {
    Divisor(QDivisor),
    /// Only the degree is known.
    Formal { degree: i64 },
}

impl CanonicalClass {
    pub fn degree(&self) -> Rat {
        match self {
            CanonicalClass::Divisor(d) => d.terms.values().sum(),
            CanonicalClass::Formal { degree } => int(*degree),
        }
    }
}

/// A point of a base curve.
///
/// Projective-line points are stored as a primitive pair `(a:b)` with `b >= 0`,
/// and `(1:0)` for infinity; the affine coordinate is `t = a/b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CurvePoint {
    Proj { a: i64, b: i64 },
    Affine { x: Rat, y: Rat },
    /// The neutral element of an elliptic curve.
    Infinity,
    Label(String),
}

impl CurvePoint {
    pub fn p1(a: i64, b: i64) -> Result<CurvePoint> {
        if a == 0 && b == 0 {
            return Err(Error::Semantic("(0:0) is not a point of P1".into()));
        }
        let g = a.gcd(&b);
        let (mut a, mut b) = (a / g, b / g);
        if b < 0 || (b == 0 && a < 0) {
            a = -a;
            b = -b;
        }
        Ok(CurvePoint::Proj { a, b })
    }

    pub fn p1_zero() -> CurvePoint {
        CurvePoint::Proj { a: 0, b: 1 }
    }

    pub fn p1_one() -> CurvePoint {
        CurvePoint::Proj { a: 1, b: 1 }
    }

    pub fn p1_inf() -> CurvePoint {
        CurvePoint::Proj { a: 1, b: 0 }
    }

    /// The point `t = r` of the affine chart of P1.
    pub fn p1_at(r: &Rat) -> Result<CurvePoint> {
        let a = r.numer().to_i64().ok_or(Error::Overflow)?;
        let b = r.denom().to_i64().ok_or(Error::Overflow)?;
        CurvePoint::p1(a, b)
    }

    pub fn affine(x: Rat, y: Rat) -> CurvePoint {
        CurvePoint::Affine { x, y }
    }

    pub fn label(s: impl Into<String>) -> CurvePoint {
        CurvePoint::Label(s.into())
    }

    /// Affine coordinate of a finite P1 point.
    pub fn p1_coordinate(&self) -> Option<Rat> {
        match self {
            CurvePoint::Proj { a, b } if *b != 0 => Some(Rat::new((*a).into(), (*b).into())),
            _ => None,
        }
    }

    fn sort_key(&self) -> (u8, Option<Rat>, Option<Rat>, Option<&str>) {
        match self {
            CurvePoint::Proj { b: 0, .. } => (1, None, None, None),
            CurvePoint::Proj { .. } => (0, self.p1_coordinate(), None, None),
            CurvePoint::Infinity => (2, None, None, None),
            CurvePoint::Affine { x, y } => (3, Some(x.clone()), Some(y.clone()), None),
            CurvePoint::Label(s) => (4, None, None, Some(s)),
        }
    }
}

impl Ord for CurvePoint {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for CurvePoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Proj { b: 0, .. } => write!(f, "inf"),
            CurvePoint::Proj { a, b: 1 } => write!(f, "{a}"),
            CurvePoint::Proj { a, b } => write!(f, "{a}/{b}"),
            CurvePoint::Affine { x, y } => write!(f, "({},{})", fmt_rat(x), fmt_rat(y)),
            CurvePoint::Infinity => write!(f, "O"),
            CurvePoint::Label(s) => write!(f, "{s}"),
        }
    }
}

/// Short Weierstrass curve over Q with the chord-tangent group law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllipticCurve {
    pub a: Rat,
    pub b: Rat,
}

impl EllipticCurve {
    pub fn contains(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => y * y == x * x * x + &self.a * x + &self.b,
            _ => false,
        }
    }

    pub fn neg(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Affine { x, y } => CurvePoint::Affine { x: x.clone(), y: -y },
            other => other.clone(),
        }
    }

    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint> {
        if !self.contains(p) || !self.contains(q) {
            return Err(Error::PointNotOnCurve);
        }
        let (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) = (p, q) else {
            return Ok(if matches!(p, CurvePoint::Infinity) { q.clone() } else { p.clone() });
        };
        let slope = if x1 != x2 {
            (y2 - y1) / (x2 - x1)
        } else if y1 == y2 && !y1.is_zero() {
            (int(3) * x1 * x1 + &self.a) / (int(2) * y1)
        } else {
            // P + (-P), including a 2-torsion point doubled
            return Ok(CurvePoint::Infinity);
        };
        let x3 = &slope * &slope - x1 - x2;
        let y3 = slope * (x1 - &x3) - y1;
        Ok(CurvePoint::Affine { x: x3, y: y3 })
    }

    /// `k * p` by double-and-add.
    pub fn mul(&self, k: &BigInt, p: &CurvePoint) -> Result<CurvePoint> {
        let mut base = if k.is_negative() { self.neg(p) } else { p.clone() };
        let mut n = k.abs();
        let mut acc = CurvePoint::Infinity;
        while !n.is_zero() {
            if n.is_odd() {
                acc = self.add(&acc, &base)?;
            }
            base = self.add(&base, &base)?;
            n >>= 1;
        }
        Ok(acc)
    }
}

/// Three-valued answer for questions that may be undecidable on a given model.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Decision {
    Yes,
    No,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Torsion {
    Yes(u32),
    No,
    Unknown,
}

/// A Q-divisor: finitely many points with nonzero rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QDivisor {
    pub curve: CurveModel,
    terms: BTreeMap<CurvePoint, Rat>,
}

impl QDivisor {
    pub fn zero(curve: CurveModel) -> QDivisor {
        QDivisor { curve, terms: BTreeMap::new() }
    }

    /// Collects terms, summing repeated points and dropping zeros.
    pub fn from_terms(curve: CurveModel, terms: impl IntoIterator<Item = (CurvePoint, Rat)>) -> Result<QDivisor> {
        let mut d = QDivisor::zero(curve);
        for (p, c) in terms {
            d.add_term(p, c)?;
        }
        Ok(d)
    }

    pub fn add_term(&mut self, p: CurvePoint, c: Rat) -> Result<()> {
        if !self.curve.contains(&p) {
            return Err(match (&self.curve, &p) {
                (CurveModel::EllipticQ { .. }, CurvePoint::Affine { .. }) => Error::PointNotOnCurve,
                _ => Error::PointKindMismatch,
            });
        }
        let entry = self.terms.entry(p).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    pub fn terms(&self) -> &BTreeMap<CurvePoint, Rat> {
        &self.terms
    }

    pub fn coefficient(&self, p: &CurvePoint) -> Rat {
        self.terms.get(p).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn floor(&self) -> QDivisor {
        let terms = self
            .terms
            .iter()
            .map(|(p, c)| (p.clone(), Rat::from_integer(floor(c))))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        QDivisor { curve: self.curve.clone(), terms }
    }

    pub fn scale(&self, s: &Rat) -> QDivisor {
        let terms = if s.is_zero() {
            BTreeMap::new()
        } else {
            self.terms.iter().map(|(p, c)| (p.clone(), c * s)).collect()
        };
        QDivisor { curve: self.curve.clone(), terms }
    }

    pub fn add(&self, other: &QDivisor) -> Result<QDivisor> {
        if self.curve != other.curve {
            return Err(Error::WrongShape("divisors live on different curves".into()));
        }
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &QDivisor) -> Result<QDivisor> {
        self.add(&other.scale(&-Rat::one()))
    }

    /// Sum of coefficients; undefined on affine curves.
    pub fn degree(&self) -> Result<Rat> {
        if !self.curve.is_projective() {
            return Err(Error::AffineCurve);
        }
        Ok(self.terms.values().sum())
    }

    fn integral_degree(&self) -> Result<BigInt> {
        if !self.is_integral() {
            return Err(Error::NonIntegralDivisor);
        }
        Ok(self.degree()?.to_integer())
    }

    /// Group-law image `sum n_i P_i` of an integral divisor on an elliptic model.
    fn elliptic_sum(&self, e: &EllipticCurve) -> Result<CurvePoint> {
        let mut acc = CurvePoint::Infinity;
        for (p, c) in &self.terms {
            acc = e.add(&acc, &e.mul(&c.to_integer(), p)?)?;
        }
        Ok(acc)
    }

    pub fn is_principal(&self) -> Result<Decision> {
        let deg = self.integral_degree()?;
        Ok(match &self.curve {
            CurveModel::P1 | CurveModel::AbstractProjective { genus: 0 } => decide(deg.is_zero()),
            CurveModel::EllipticQ { .. } => {
                if !deg.is_zero() {
                    Decision::No
                } else {
                    let e = self.curve.as_elliptic()?;
                    decide(self.elliptic_sum(&e)? == CurvePoint::Infinity)
                }
            }
            CurveModel::AbstractProjective { .. } => {
                if deg.is_zero() {
                    Decision::Unknown
                } else {
                    Decision::No
                }
            }
            CurveModel::AffineLine | CurveModel::AbstractAffine => return Err(Error::AffineCurve),
        })
    }

    /// Order of the class of a degree-zero integral divisor, searched up to
    /// [`MAX_TORSION_ORDER`].
    pub fn is_torsion_class(&self) -> Result<Torsion> {
        let deg = self.integral_degree()?;
        if !deg.is_zero() {
            return Err(Error::NonZeroDegree);
        }
        Ok(match &self.curve {
            CurveModel::P1 | CurveModel::AbstractProjective { genus: 0 } => Torsion::Yes(1),
            CurveModel::EllipticQ { .. } => {
                let e = self.curve.as_elliptic()?;
                let s = self.elliptic_sum(&e)?;
                let mut acc = CurvePoint::Infinity;
                let mut found = Torsion::No;
                for k in 1..=MAX_TORSION_ORDER {
                    acc = e.add(&acc, &s)?;
                    if acc == CurvePoint::Infinity {
                        found = Torsion::Yes(k);
                        break;
                    }
                }
                found
            }
            CurveModel::AbstractProjective { .. } => Torsion::Unknown,
            CurveModel::AffineLine | CurveModel::AbstractAffine => return Err(Error::AffineCurve),
        })
    }

    /// `dim H^0(Y, O(D))`, `None` when the model cannot determine it.
    pub fn h0_dim(&self) -> Result<Option<u64>> {
        let deg = self.integral_degree()?;
        let d = deg.to_i64().ok_or(Error::Overflow)?;
        Ok(match &self.curve {
            CurveModel::P1 | CurveModel::AbstractProjective { genus: 0 } => Some((d + 1).max(0) as u64),
            CurveModel::EllipticQ { .. } => match d.cmp(&0) {
                Ordering::Greater => Some(d as u64),
                Ordering::Less => Some(0),
                Ordering::Equal => Some(u64::from(self.is_principal()? == Decision::Yes)),
            },
            CurveModel::AbstractProjective { genus } => {
                let g = *genus as i64;
                if d < 0 {
                    Some(0)
                } else if d > 2 * g - 2 {
                    Some((d + 1 - g) as u64)
                } else {
                    None
                }
            }
            CurveModel::AffineLine | CurveModel::AbstractAffine => return Err(Error::AffineCurve),
        })
    }

    /// `dim H^1(Y, O(D))`, `None` when the model cannot determine it.
    pub fn h1_dim(&self) -> Result<Option<u64>> {
        let deg = self.integral_degree()?;
        let d = deg.to_i64().ok_or(Error::Overflow)?;
        Ok(match &self.curve {
            CurveModel::P1 | CurveModel::AbstractProjective { genus: 0 } => Some((-d - 1).max(0) as u64),
            CurveModel::EllipticQ { .. } => match d.cmp(&0) {
                Ordering::Greater => Some(0),
                Ordering::Less => Some((-d) as u64),
                Ordering::Equal => Some(u64::from(self.is_principal()? == Decision::Yes)),
            },
            CurveModel::AbstractProjective { genus } => {
                let g = *genus as i64;
                if d > 2 * g - 2 {
                    Some(0)
                } else if d < 0 {
                    Some((g - 1 - d) as u64)
                } else {
                    None
                }
            }
            CurveModel::AffineLine | CurveModel::AbstractAffine => return Err(Error::AffineCurve),
        })
    }
}

fn decide(b: bool) -> Decision {
    if b {
        Decision::Yes
    } else {
        Decision::No
    }
}

impl fmt::Display for QDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let sign = if c.is_negative() { "-" } else if i > 0 { "+" } else { "" };
            write!(f, "{sign}{}[{p}]", fmt_rat(&c.abs()))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn p1div(terms: &[(CurvePoint, Rat)]) -> QDivisor {
        QDivisor::from_terms(CurveModel::P1, terms.iter().cloned()).unwrap()
    }

    fn congruent() -> CurveModel {
        CurveModel::elliptic(int(-1), int(0)).unwrap()
    }

    fn pt(x: i64, y: i64) -> CurvePoint {
        CurvePoint::affine(int(x), int(y))
    }

    #[test]
    fn p1_normalization() {
        assert_eq!(CurvePoint::p1(-2, -4).unwrap(), CurvePoint::Proj { a: 1, b: 2 });
        assert_eq!(CurvePoint::p1(-3, 0).unwrap(), CurvePoint::p1_inf());
        assert_eq!(CurvePoint::p1(0, -5).unwrap(), CurvePoint::p1_zero());
        assert!(CurvePoint::p1(0, 0).is_err());
        assert_eq!(CurvePoint::p1_at(&rat(-3, 6)).unwrap().to_string(), "-1/2");
    }

    #[test]
    fn floor_and_degree() {
        let d = p1div(&[
            (CurvePoint::p1_zero(), rat(-1, 4)),
            (CurvePoint::p1_one(), rat(-1, 4)),
            (CurvePoint::p1_inf(), rat(3, 4)),
        ]);
        assert_eq!(d.degree().unwrap(), rat(1, 4));
        let f = d.floor();
        assert_eq!(f, p1div(&[(CurvePoint::p1_zero(), int(-1)), (CurvePoint::p1_one(), int(-1))]));
        assert_eq!(f.floor(), f);
        assert_eq!(QDivisor::zero(CurveModel::P1).floor(), QDivisor::zero(CurveModel::P1));
        assert_eq!(QDivisor::zero(CurveModel::P1).degree().unwrap(), int(0));

        let d3 = p1div(&[
            (CurvePoint::p1_zero(), rat(-2, 3)),
            (CurvePoint::p1_one(), rat(-2, 3)),
            (CurvePoint::p1_inf(), rat(17, 12)),
        ]);
        assert_eq!(d3.degree().unwrap(), rat(1, 12));
        assert_eq!(d3.to_string(), "-2/3[0] -2/3[1] +17/12[inf]");

        let aff = QDivisor::from_terms(CurveModel::AffineLine, [(CurvePoint::label("0"), int(1))]).unwrap();
        assert_eq!(aff.degree(), Err(Error::AffineCurve));
    }

    #[test]
    fn canonical_classes() {
        let k = CurveModel::P1.canonical_divisor().unwrap();
        assert_eq!(k, CanonicalClass::Divisor(p1div(&[(CurvePoint::p1_inf(), int(-2))])));
        let CanonicalClass::Divisor(k) = CurveModel::elliptic(int(0), int(-1)).unwrap().canonical_divisor().unwrap()
        else {
            panic!()
        };
        assert!(k.is_zero());
        assert_eq!(
            CurveModel::AbstractProjective { genus: 3 }.canonical_divisor().unwrap(),
            CanonicalClass::Formal { degree: 4 }
        );
        assert_eq!(CurveModel::AffineLine.canonical_divisor(), Err(Error::AffineCurve));
    }

    #[test]
    fn group_law_examples() {
        let e = congruent();
        let p = pt(0, 0);
        assert_eq!(e.ec_add(&p, &CurvePoint::Infinity).unwrap(), p);
        assert_eq!(e.ec_add(&p, &p).unwrap(), CurvePoint::Infinity);
        assert_eq!(e.ec_add(&p, &pt(1, 0)).unwrap(), pt(-1, 0));
        assert_eq!(e.ec_add(&p, &pt(1, 1)), Err(Error::PointNotOnCurve));
    }

    #[test]
    fn singular_cubic_rejected() {
        assert!(CurveModel::elliptic(int(0), int(0)).is_err());
        assert!(CurveModel::elliptic(int(-3), int(2)).is_err());
    }

    #[test]
    fn principality() {
        let d = p1div(&[(CurvePoint::p1_zero(), int(1)), (CurvePoint::p1_inf(), int(-1))]);
        assert_eq!(d.is_principal().unwrap(), Decision::Yes);

        let e = congruent();
        let d = QDivisor::from_terms(e.clone(), [(pt(0, 0), int(1)), (CurvePoint::Infinity, int(-1))]).unwrap();
        assert_eq!(d.is_principal().unwrap(), Decision::No);
        let d2 = d.scale(&int(2));
        assert_eq!(d2.is_principal().unwrap(), Decision::Yes);

        let g2 = CurveModel::AbstractProjective { genus: 2 };
        let d = QDivisor::from_terms(g2.clone(), [(CurvePoint::label("p"), int(1))]).unwrap();
        assert_eq!(d.is_principal().unwrap(), Decision::No);
        let d = QDivisor::from_terms(g2, [(CurvePoint::label("p"), int(1)), (CurvePoint::label("q"), int(-1))])
            .unwrap();
        assert_eq!(d.is_principal().unwrap(), Decision::Unknown);

        let half = p1div(&[(CurvePoint::p1_zero(), rat(1, 2))]);
        assert_eq!(half.is_principal(), Err(Error::NonIntegralDivisor));
    }

    #[test]
    fn torsion_orders() {
        let d = p1div(&[(CurvePoint::p1_zero(), int(3)), (CurvePoint::p1_one(), int(-3))]);
        assert_eq!(d.is_torsion_class().unwrap(), Torsion::Yes(1));
        let e = congruent();
        let d = QDivisor::from_terms(e, [(pt(0, 0), int(1)), (CurvePoint::Infinity, int(-1))]).unwrap();
        assert_eq!(d.is_torsion_class().unwrap(), Torsion::Yes(2));

        // (3,5) on y^2 = x^3 - 2: 2P = (129/100, -383/1000) is not integral, so by
        // Nagell-Lutz P has infinite order.
        let e = CurveModel::elliptic(int(0), int(-2)).unwrap();
        let p = pt(3, 5);
        let two_p = e.ec_add(&p, &p).unwrap();
        assert_eq!(two_p, CurvePoint::affine(rat(129, 100), rat(-383, 1000)));
        let d = QDivisor::from_terms(e, [(p, int(1)), (CurvePoint::Infinity, int(-1))]).unwrap();
        assert_eq!(d.is_torsion_class().unwrap(), Torsion::No);

        let one = p1div(&[(CurvePoint::p1_zero(), int(1))]);
        assert_eq!(one.is_torsion_class(), Err(Error::NonZeroDegree));
    }

    #[test]
    fn cohomology_dimensions() {
        let o1 = p1div(&[(CurvePoint::p1_inf(), int(1))]);
        assert_eq!(o1.h0_dim().unwrap(), Some(2));
        let e = congruent();
        let d = QDivisor::from_terms(e.clone(), [(pt(0, 0), int(1)), (CurvePoint::Infinity, int(-1))]).unwrap();
        assert_eq!(d.h0_dim().unwrap(), Some(0));
        assert_eq!(QDivisor::zero(e).h1_dim().unwrap(), Some(1));

        // floor(1 * D1) of the first golden example has degree -2
        let f1 = p1div(&[(CurvePoint::p1_zero(), int(-1)), (CurvePoint::p1_one(), int(-1))]);
        assert_eq!(f1.h1_dim().unwrap(), Some(1));
        // floor(4 * D1) = -1[0] - 1[1] + 3[inf]
        let f4 = p1div(&[
            (CurvePoint::p1_zero(), int(-1)),
            (CurvePoint::p1_one(), int(-1)),
            (CurvePoint::p1_inf(), int(3)),
        ]);
        assert_eq!(f4.h0_dim().unwrap(), Some(2));
        assert_eq!(p1div(&[(CurvePoint::p1_inf(), int(3))]).h1_dim().unwrap(), Some(0));

        let g3 = CurveModel::AbstractProjective { genus: 3 };
        let d = QDivisor::from_terms(g3, [(CurvePoint::label("p"), int(2))]).unwrap();
        assert_eq!(d.h0_dim().unwrap(), None);
        assert_eq!(d.h1_dim().unwrap(), None);
    }
}
