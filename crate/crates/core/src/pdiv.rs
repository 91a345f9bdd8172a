//! Polyhedral divisors `D = sum Δ_P · P` over a curve or over affine space with
//! coordinate-hyperplane support.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::curve::{CurveModel, CurvePoint, QDivisor, Torsion};
use crate::error::{Error, Result};
use crate::polyhedral::{chamber_fan, ChamberFan, Cone, SupportValue, TailedPolyhedron};
use crate::rat::{lcm_denominators, LatticeVec, Rat, RatVec};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    Curve(CurveModel),
    /// `A^n`; coefficients sit on the coordinate hyperplanes.
    AffineSpace(usize),
}

impl Base {
    pub fn curve(&self) -> Option<&CurveModel> {
        match self {
            Base::Curve(c) => Some(c),
            Base::AffineSpace(_) => None,
        }
    }

    pub fn is_projective(&self) -> bool {
        self.curve().is_some_and(CurveModel::is_projective)
    }

    pub fn is_affine(&self) -> bool {
        !self.is_projective()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PrimeDivisor {
    Point(CurvePoint),
    /// The coordinate hyperplane `t_i = 0` (0-based).
    Hyperplane(usize),
}

impl fmt::Display for PrimeDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeDivisor::Point(p) => write!(f, "{p}"),
            PrimeDivisor::Hyperplane(i) => write!(f, "H{i}"),
        }
    }
}

/// A reason why a polyhedral divisor is not well-formed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Violation {
    TailNotPointed,
    RankMismatch { divisor: String },
    TailMismatch { divisor: String },
    PointNotOnCurve { divisor: String },
    UnsupportedSupport { divisor: String },
    DuplicateDivisor { divisor: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::TailNotPointed => write!(f, "tail cone is not pointed"),
            Violation::RankMismatch { divisor } => write!(f, "coefficient at {divisor} has the wrong rank"),
            Violation::TailMismatch { divisor } => write!(f, "coefficient at {divisor} has a different tail cone"),
            Violation::PointNotOnCurve { divisor } => write!(f, "{divisor} is not a point of the base curve"),
            Violation::UnsupportedSupport { divisor } => {
                write!(f, "{divisor} is not a supported prime divisor of the base")
            }
            Violation::DuplicateDivisor { divisor } => write!(f, "{divisor} appears more than once"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Properness {
    Proper,
    NotProper { witness: RatVec, reason: String },
    Unknown { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Codim1Contraction {
    Yes,
    /// Generators of a codimension-one face of the weight cone on which the evaluation is not big.
    No { face: Vec<LatticeVec> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyhedralDivisor {
    base: Base,
    tail: Cone,
    coefficients: Vec<(PrimeDivisor, TailedPolyhedron)>,
}

impl PolyhedralDivisor {
    /// Stores the data without checking it; see [`PolyhedralDivisor::validate`].
    /// Coefficients equal to the tail cone are dropped.
    pub fn from_parts(
        base: Base,
        tail: Cone,
        coefficients: impl IntoIterator<Item = (PrimeDivisor, TailedPolyhedron)>,
    ) -> PolyhedralDivisor {
        let mut coefficients: Vec<(PrimeDivisor, TailedPolyhedron)> = coefficients
            .into_iter()
            .filter(|(_, p)| !(p.is_neutral() && p.tail().same_cone(&tail)))
            .collect();
        coefficients.sort_by(|a, b| a.0.cmp(&b.0));
        PolyhedralDivisor { base, tail, coefficients }
    }

    /// Checked constructor.
    pub fn new(
        base: Base,
        tail: Cone,
        coefficients: impl IntoIterator<Item = (PrimeDivisor, TailedPolyhedron)>,
    ) -> Result<PolyhedralDivisor> {
        let d = Self::from_parts(base, tail, coefficients);
        let v = d.validate();
        if v.is_empty() {
            Ok(d)
        } else {
            Err(Error::Invalid(v))
        }
    }

    pub fn base(&self) -> &Base {
        &self.base
    }

    pub fn tail(&self) -> &Cone {
        &self.tail
    }

    pub fn lattice_rank(&self) -> usize {
        self.tail.rank()
    }

    pub fn coefficients(&self) -> &[(PrimeDivisor, TailedPolyhedron)] {
        &self.coefficients
    }

    pub fn coefficient(&self, p: &PrimeDivisor) -> Option<&TailedPolyhedron> {
        self.coefficients.iter().find(|(q, _)| q == p).map(|(_, c)| c)
    }

    /// All invariant violations; empty iff the divisor is well-formed.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if !self.tail.is_pointed() {
            out.push(Violation::TailNotPointed);
        }
        for (i, (p, poly)) in self.coefficients.iter().enumerate() {
            let divisor = p.to_string();
            if i > 0 && self.coefficients[i - 1].0 == *p {
                out.push(Violation::DuplicateDivisor { divisor: divisor.clone() });
            }
            if poly.rank() != self.tail.rank() {
                out.push(Violation::RankMismatch { divisor: divisor.clone() });
            } else if !poly.tail().same_cone(&self.tail) {
                out.push(Violation::TailMismatch { divisor: divisor.clone() });
            }
            match (&self.base, p) {
                (Base::Curve(c), PrimeDivisor::Point(pt)) => {
                    if !c.contains(pt) {
                        out.push(Violation::PointNotOnCurve { divisor });
                    }
                }
                (Base::AffineSpace(n), PrimeDivisor::Hyperplane(i)) if i < n => {}
                _ => out.push(Violation::UnsupportedSupport { divisor }),
            }
        }
        out
    }

    pub fn weight_cone(&self) -> Result<Cone> {
        self.tail.dual()
    }

    fn check_weight(&self, m: &RatVec) -> Result<()> {
        if m.rank() != self.lattice_rank() {
            return Err(Error::DimensionMismatch { expected: self.lattice_rank(), found: m.rank() });
        }
        self.tail.dual_contains(m).map_err(|ray| Error::NotInWeightCone { ray })
    }

    /// `(P, h_P(m))` for every prime divisor with a nontrivial value.
    pub fn evaluate_coefficients(&self, m: &RatVec) -> Result<Vec<(PrimeDivisor, Rat)>> {
        self.check_weight(m)?;
        let mut out = Vec::new();
        for (p, poly) in &self.coefficients {
            let SupportValue::Finite(h) = poly.support(m)? else {
                return Err(Error::NotInWeightCone { ray: LatticeVec(vec![]) });
            };
            if !h.is_zero() {
                out.push((p.clone(), h));
            }
        }
        Ok(out)
    }

    /// The Q-divisor `D(m)` on the base curve.
    pub fn evaluate(&self, m: &RatVec) -> Result<QDivisor> {
        let Base::Curve(curve) = &self.base else {
            return Err(Error::WrongShape("evaluation to a curve divisor needs a curve base".into()));
        };
        let terms = self.evaluate_coefficients(m)?.into_iter().map(|(p, h)| match p {
            PrimeDivisor::Point(pt) => (pt, h),
            PrimeDivisor::Hyperplane(_) => unreachable!("validated curve divisor"),
        });
        QDivisor::from_terms(curve.clone(), terms)
    }

    /// `deg D(m)`, computed straight from the support functions.
    pub fn degree_at(&self, m: &RatVec) -> Result<Rat> {
        if !self.base.is_projective() {
            return Err(Error::AffineCurve);
        }
        Ok(self.evaluate_coefficients(m)?.into_iter().map(|(_, h)| h).sum())
    }

    /// Minkowski sum of all coefficients (the tail cone if there are none).
    pub fn degree_polyhedron(&self) -> Result<TailedPolyhedron> {
        if !self.base.is_projective() {
            return Err(Error::AffineCurve);
        }
        self.coefficients
            .iter()
            .try_fold(TailedPolyhedron::neutral(self.tail.clone()), |acc, (_, p)| acc.minkowski_sum(p))
    }

    /// Common linearity fan of all coefficient support functions over the weight cone.
    pub fn chamber_fan(&self) -> Result<ChamberFan> {
        let polys: Vec<TailedPolyhedron> = self.coefficients.iter().map(|(_, p)| p.clone()).collect();
        chamber_fan(&polys, &self.weight_cone()?)
    }

    /// Properness on a curve: `D(m)` semiample on the weight cone and big on its interior.
    ///
    /// On a projective curve, big means positive degree and semiample means positive
    /// degree or a torsion class of degree zero. Since `m -> deg D(m)` is linear on
    /// each chamber, checking the chamber rays and one interior point suffices.
    pub fn is_proper(&self) -> Properness {
        if self.base.is_affine() {
            return Properness::Proper;
        }
        let rank = self.lattice_rank();
        if self.tail.is_zero() {
            return Properness::NotProper {
                witness: RatVec::zero(rank),
                reason: "0 lies in the relative interior of the weight cone and D(0) = 0 is not big".into(),
            };
        }
        let fan = match self.chamber_fan() {
            Ok(f) => f,
            Err(e) => return Properness::Unknown { reason: e.to_string() },
        };
        let rays = fan.rays();
        let mut zero_rays = Vec::new();
        let mut interior = RatVec::zero(rank);
        for u in &rays {
            let m = u.to_rat();
            let deg = match self.degree_at(&m) {
                Ok(d) => d,
                Err(e) => return Properness::Unknown { reason: e.to_string() },
            };
            if deg.is_negative() {
                return Properness::NotProper {
                    witness: m,
                    reason: format!("deg D(m) = {} < 0, not semiample", crate::rat::fmt_rat(&deg)),
                };
            }
            if deg.is_zero() {
                zero_rays.push(m.clone());
            }
            interior = interior.add(&m);
        }
        match self.degree_at(&interior) {
            Ok(d) if d.is_positive() => {}
            Ok(_) => {
                return Properness::NotProper {
                    witness: interior,
                    reason: "deg D(m) = 0 at an interior weight, not big".into(),
                }
            }
            Err(e) => return Properness::Unknown { reason: e.to_string() },
        }
        for m in zero_rays {
            let dm = match self.evaluate(&m) {
                Ok(d) => d,
                Err(e) => return Properness::Unknown { reason: e.to_string() },
            };
            let r = lcm_denominators(dm.terms().values());
            let integral = dm.scale(&Rat::from_integer(r));
            match integral.is_torsion_class() {
                Ok(Torsion::Yes(_)) => {}
                Ok(Torsion::No) => {
                    return Properness::NotProper {
                        witness: m,
                        reason: "degree-zero evaluation is not a torsion class, not semiample".into(),
                    }
                }
                Ok(Torsion::Unknown) => {
                    return Properness::Unknown {
                        reason: format!("torsion of the degree-zero class D({m}) is undecidable on this curve model"),
                    }
                }
                Err(e) => return Properness::Unknown { reason: e.to_string() },
            }
        }
        Properness::Proper
    }

    /// Whether the contraction to the affine variety is an isomorphism in codimension one:
    /// `D(m)` must be big on the relative interior of every codimension-one face of
    /// the weight cone.
    pub fn contraction_iso_codim1(&self) -> Result<Codim1Contraction> {
        let Base::Curve(curve) = &self.base else {
            return Err(Error::WrongShape("contraction criterion needs a curve base".into()));
        };
        if !curve.is_projective() {
            return Ok(Codim1Contraction::Yes);
        }
        let dual = self.weight_cone()?;
        for rho in self.tail.rays() {
            let face: Vec<LatticeVec> = dual
                .rays()
                .iter()
                .filter(|g| g.to_rat().dot_lattice(rho).is_zero())
                .cloned()
                .collect();
            if face.is_empty() {
                continue;
            }
            let sample = face.iter().fold(RatVec::zero(self.lattice_rank()), |acc, g| acc.add(&g.to_rat()));
            if !self.degree_at(&sample)?.is_positive() {
                return Ok(Codim1Contraction::No { face });
            }
        }
        Ok(Codim1Contraction::Yes)
    }

    /// `D(1)` for a rank-one divisor with tail `Q>=0` on a projective curve.
    pub fn slope_divisor(&self) -> Result<QDivisor> {
        self.require_rank_one_projective()?;
        self.evaluate(&RatVec(vec![Rat::one()]))
    }

    pub(crate) fn require_rank_one_projective(&self) -> Result<&CurveModel> {
        let ok_tail = self.lattice_rank() == 1 && self.tail.rays() == [LatticeVec(vec![1])];
        match &self.base {
            Base::Curve(c) if c.is_projective() && ok_tail => Ok(c),
            _ => Err(Error::WrongShape(
                "needs lattice rank 1, tail cone Q>=0 and a projective curve base".into(),
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, rat};

    fn q1() -> Cone {
        Cone::orthant(1)
    }

    fn pt1(p: CurvePoint, v: Rat) -> (PrimeDivisor, TailedPolyhedron) {
        (PrimeDivisor::Point(p), TailedPolyhedron::point(RatVec(vec![v]), q1()).unwrap())
    }

    fn example_i() -> PolyhedralDivisor {
        PolyhedralDivisor::new(
            Base::Curve(CurveModel::P1),
            q1(),
            [
                pt1(CurvePoint::p1_zero(), rat(-1, 4)),
                pt1(CurvePoint::p1_one(), rat(-1, 4)),
                pt1(CurvePoint::p1_inf(), rat(3, 4)),
            ],
        )
        .unwrap()
    }

    fn m(v: i64) -> RatVec {
        RatVec::from_ints(&[v])
    }

    #[test]
    fn evaluate_examples() {
        let d = example_i();
        let d1 = d.evaluate(&m(1)).unwrap();
        assert_eq!(d1.to_string(), "-1/4[0] -1/4[1] +3/4[inf]");
        assert!(d.evaluate(&m(0)).unwrap().is_zero());
        assert_eq!(d.evaluate(&m(4)).unwrap().to_string(), "-1[0] -1[1] +3[inf]");
        assert_eq!(
            d.evaluate(&m(-1)),
            Err(Error::NotInWeightCone { ray: LatticeVec(vec![1]) })
        );
    }

    #[test]
    fn degree_polyhedron_examples() {
        let empty = PolyhedralDivisor::new(Base::Curve(CurveModel::P1), q1(), []).unwrap();
        assert!(empty.degree_polyhedron().unwrap().is_neutral());
        assert!(empty.degree_polyhedron().unwrap().meets_ray(&LatticeVec(vec![1])).unwrap());
        let deg = example_i().degree_polyhedron().unwrap();
        assert_eq!(deg.vertices(), &[RatVec(vec![rat(1, 4)])]);
        let aff = PolyhedralDivisor::new(Base::Curve(CurveModel::AffineLine), q1(), []).unwrap();
        assert_eq!(aff.degree_polyhedron(), Err(Error::AffineCurve));
    }

    #[test]
    fn properness_examples() {
        assert_eq!(example_i().is_proper(), Properness::Proper);

        let flat = PolyhedralDivisor::new(
            Base::Curve(CurveModel::P1),
            q1(),
            [pt1(CurvePoint::p1_zero(), rat(1, 2)), pt1(CurvePoint::p1_inf(), rat(-1, 2))],
        )
        .unwrap();
        assert!(matches!(flat.is_proper(), Properness::NotProper { .. }));

        let hyper = PolyhedralDivisor::new(Base::Curve(CurveModel::P1), Cone::zero(1), []).unwrap();
        assert_eq!(
            hyper.is_proper(),
            Properness::NotProper {
                witness: RatVec::zero(1),
                reason: "0 lies in the relative interior of the weight cone and D(0) = 0 is not big".into()
            }
        );

        let neg = PolyhedralDivisor::new(Base::Curve(CurveModel::P1), q1(), [pt1(CurvePoint::p1_zero(), int(-1))])
            .unwrap();
        assert!(matches!(neg.is_proper(), Properness::NotProper { .. }));

        let aff = PolyhedralDivisor::new(Base::Curve(CurveModel::AffineLine), Cone::zero(1), []).unwrap();
        assert_eq!(aff.is_proper(), Properness::Proper);
    }

    fn rank2_boundary_zero() -> PolyhedralDivisor {
        // h_0(m) = m2, so deg D(1,0) = 0 and deg D(0,1) = 1
        PolyhedralDivisor::new(
            Base::Curve(CurveModel::P1),
            Cone::orthant(2),
            [(
                PrimeDivisor::Point(CurvePoint::p1_zero()),
                TailedPolyhedron::point(RatVec::from_ints(&[0, 1]), Cone::orthant(2)).unwrap(),
            )],
        )
        .unwrap()
    }

    #[test]
    fn properness_rank2_with_degree_zero_ray() {
        assert_eq!(rank2_boundary_zero().is_proper(), Properness::Proper);

        // D(1,0) = [P] - [O] with P of infinite order is not semiample
        let e = CurveModel::elliptic(int(0), int(-2)).unwrap();
        let p = CurvePoint::affine(int(3), int(5));
        let o = CurvePoint::Infinity;
        let poly = |v: &[i64]| TailedPolyhedron::point(RatVec::from_ints(v), Cone::orthant(2)).unwrap();
        let d = PolyhedralDivisor::new(
            Base::Curve(e),
            Cone::orthant(2),
            [(PrimeDivisor::Point(p), poly(&[1, 1])), (PrimeDivisor::Point(o), poly(&[-1, 0]))],
        )
        .unwrap();
        assert!(matches!(d.is_proper(), Properness::NotProper { .. }));

        let g2 = CurveModel::AbstractProjective { genus: 2 };
        let d = PolyhedralDivisor::new(
            Base::Curve(g2),
            Cone::orthant(2),
            [
                (PrimeDivisor::Point(CurvePoint::label("p")), poly(&[1, 1])),
                (PrimeDivisor::Point(CurvePoint::label("q")), poly(&[-1, 0])),
            ],
        )
        .unwrap();
        assert!(matches!(d.is_proper(), Properness::Unknown { .. }));
    }

    #[test]
    fn codim1_examples() {
        assert_eq!(example_i().contraction_iso_codim1().unwrap(), Codim1Contraction::Yes);
        assert_eq!(
            rank2_boundary_zero().contraction_iso_codim1().unwrap(),
            Codim1Contraction::No { face: vec![LatticeVec(vec![1, 0])] }
        );
        let aff = PolyhedralDivisor::new(Base::Curve(CurveModel::AffineLine), q1(), []).unwrap();
        assert_eq!(aff.contraction_iso_codim1().unwrap(), Codim1Contraction::Yes);
        let sp = PolyhedralDivisor::new(Base::AffineSpace(2), q1(), []).unwrap();
        assert!(sp.contraction_iso_codim1().is_err());
    }

    #[test]
    fn validation() {
        assert!(example_i().validate().is_empty());

        let wrong_tail = PolyhedralDivisor::from_parts(
            Base::Curve(CurveModel::P1),
            q1(),
            [(
                PrimeDivisor::Point(CurvePoint::p1_zero()),
                TailedPolyhedron::point(RatVec::from_ints(&[1]), Cone::zero(1)).unwrap(),
            )],
        );
        assert_eq!(wrong_tail.validate(), vec![Violation::TailMismatch { divisor: "0".into() }]);

        let bad_support = PolyhedralDivisor::from_parts(
            Base::AffineSpace(2),
            q1(),
            [pt1(CurvePoint::label("x"), int(1))],
        );
        assert_eq!(bad_support.validate(), vec![Violation::UnsupportedSupport { divisor: "x".into() }]);

        let off_curve = PolyhedralDivisor::from_parts(
            Base::Curve(CurveModel::elliptic(int(-1), int(0)).unwrap()),
            q1(),
            [pt1(CurvePoint::affine(int(2), int(2)), int(1))],
        );
        assert_eq!(off_curve.validate(), vec![Violation::PointNotOnCurve { divisor: "(2,2)".into() }]);

        let not_pointed = PolyhedralDivisor::from_parts(
            Base::AffineSpace(1),
            Cone::new(1, vec![LatticeVec(vec![1]), LatticeVec(vec![-1])]).unwrap(),
            [],
        );
        assert_eq!(not_pointed.validate(), vec![Violation::TailNotPointed]);

        let dup = PolyhedralDivisor::from_parts(
            Base::Curve(CurveModel::P1),
            q1(),
            [pt1(CurvePoint::p1_zero(), int(1)), pt1(CurvePoint::p1_zero(), int(2))],
        );
        assert_eq!(dup.validate(), vec![Violation::DuplicateDivisor { divisor: "0".into() }]);
    }
}
