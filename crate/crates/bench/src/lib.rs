//! Fixed inputs shared by the benchmarks in `benches/`.

use tvar_core::rat::rat;
use tvar_core::{Base, Cone, CurveModel, CurvePoint, LatticeVec, PolyhedralDivisor, PrimeDivisor, RatVec, TailedPolyhedron};

/// A point `(a:b)` of P1 and a coefficient `p/q`.
pub type Term = ((i64, i64), (i64, i64));

/// `sum p/q [t]` on P1 with tail `Q>=0`.
pub fn rank_one(coeffs: &[Term]) -> PolyhedralDivisor {
    let tail = Cone::orthant(1);
    PolyhedralDivisor::new(
        Base::Curve(CurveModel::P1),
        tail.clone(),
        coeffs.iter().map(|&((a, b), (p, q))| {
            let poly = TailedPolyhedron::point(RatVec(vec![rat(p, q)]), tail.clone()).unwrap();
            (PrimeDivisor::Point(CurvePoint::p1(a, b).unwrap()), poly)
        }),
    )
    .unwrap()
}

/// The three small K*-surface examples, in order.
pub fn golden() -> [PolyhedralDivisor; 3] {
    let pts = [(0, 1), (1, 1), (1, 0)];
    let make = |c: [(i64, i64); 3]| rank_one(&[(pts[0], c[0]), (pts[1], c[1]), (pts[2], c[2])]);
    [make([(-1, 4), (-1, 4), (3, 4)]), make([(-1, 3), (-1, 3), (3, 4)]), make([(-2, 3), (-2, 3), (17, 12)])]
}

/// Five points with coprime denominators, so the quasi-period is large.
pub fn long_period() -> PolyhedralDivisor {
    rank_one(&[((0, 1), (-1, 2)), ((1, 1), (-2, 3)), ((1, 0), (-3, 5)), ((-1, 1), (-4, 7)), ((2, 1), (19, 8))])
}

/// A proper rank-two divisor on P1 whose coefficients have several vertices.
pub fn rank_two() -> PolyhedralDivisor {
    let tail = Cone::new(2, vec![LatticeVec(vec![1, 0]), LatticeVec(vec![1, 2])]).unwrap();
    let poly = |vs: &[[(i64, i64); 2]]| {
        let verts = vs.iter().map(|v| RatVec(vec![rat(v[0].0, v[0].1), rat(v[1].0, v[1].1)])).collect();
        TailedPolyhedron::new(verts, tail.clone()).unwrap()
    };
    PolyhedralDivisor::new(
        Base::Curve(CurveModel::P1),
        tail.clone(),
        [
            (PrimeDivisor::Point(CurvePoint::p1_zero()), poly(&[[(-1, 2), (-1, 3)], [(-1, 4), (-2, 3)]])),
            (PrimeDivisor::Point(CurvePoint::p1_one()), poly(&[[(-1, 3), (-1, 2)]])),
            (PrimeDivisor::Point(CurvePoint::p1_inf()), poly(&[[(2, 1), (2, 1)], [(3, 1), (3, 2)]])),
        ],
    )
    .unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use tvar_core::Properness;

    #[test]
    fn fixtures_are_proper() {
        for d in golden().iter().chain([&long_period(), &rank_two()]) {
            assert_eq!(d.is_proper(), Properness::Proper);
        }
    }
}
