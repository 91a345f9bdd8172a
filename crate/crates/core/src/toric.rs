//! The toric cone of a polyhedral divisor on affine space supported on coordinate hyperplanes.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::pdiv::{Base, PolyhedralDivisor, PrimeDivisor, Violation};
use crate::polyhedral::{Cone, SupportValue};
use crate::rat::{LatticeVec, Rat, RatVec};

/// The cone in `N x Z^n` spanned by `(sigma, 0)` and `(Delta_i, e_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToricCone {
    pub lattice_rank: usize,
    pub n: usize,
    pub cone: Cone,
}

impl ToricCone {
    pub fn ambient_rank(&self) -> usize {
        self.lattice_rank + self.n
    }

    pub fn rays(&self) -> &[LatticeVec] {
        self.cone.rays()
    }
}

fn affine_dim(d: &PolyhedralDivisor) -> Result<usize> {
    match d.base() {
        Base::AffineSpace(n) => Ok(*n),
        Base::Curve(_) => Err(Error::WrongShape("toric model needs an affine-space base".into())),
    }
}

fn check_support(d: &PolyhedralDivisor) -> Result<()> {
    let bad: Vec<Violation> = d
        .validate()
        .into_iter()
        .filter(|v| matches!(v, Violation::UnsupportedSupport { .. }))
        .collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Error::Invalid(bad))
    }
}

pub fn toric_cone(d: &PolyhedralDivisor) -> Result<ToricCone> {
    let n = affine_dim(d)?;
    check_support(d)?;
    let k = d.lattice_rank();
    let mut gens: Vec<LatticeVec> = d
        .tail()
        .rays()
        .iter()
        .map(|r| {
            let mut v = r.0.clone();
            v.resize(k + n, 0);
            LatticeVec(v)
        })
        .collect();
    for i in 0..n {
        let origin = [RatVec::zero(k)];
        let verts = match d.coefficient(&PrimeDivisor::Hyperplane(i)) {
            Some(p) => p.vertices(),
            None => &origin[..],
        };
        for v in verts {
            let mut w = v.0.clone();
            w.extend((0..n).map(|j| if j == i { Rat::one() } else { Rat::zero() }));
            let g = RatVec(w).primitive_lattice()?.expect("e_i component is nonzero");
            gens.push(g);
        }
    }
    Ok(ToricCone { lattice_rank: k, n, cone: Cone::new(k + n, gens)? })
}

/// `(m, r)` lies in the dual toric cone iff `m` is in the weight cone and `r_i >= -h_i(m)`.
pub fn weight_membership(d: &PolyhedralDivisor, m: &LatticeVec, r: &[i64]) -> Result<bool> {
    let n = affine_dim(d)?;
    if m.rank() != d.lattice_rank() {
        return Err(Error::DimensionMismatch { expected: d.lattice_rank(), found: m.rank() });
    }
    if r.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: r.len() });
    }
    let mr = m.to_rat();
    if d.tail().dual_contains(&mr).is_err() {
        return Ok(false);
    }
    for (i, &ri) in r.iter().enumerate() {
        let h = match d.coefficient(&PrimeDivisor::Hyperplane(i)) {
            Some(p) => match p.support(&mr)? {
                SupportValue::Finite(h) => h,
                SupportValue::MinusInfinity => return Ok(false),
            },
            None => Rat::zero(),
        };
        if Rat::from_integer(ri.into()) < -h {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Nonnegativity of `<(m, r), g>` on every generator `g`.
pub fn pairing_membership(c: &ToricCone, m: &LatticeVec, r: &[i64]) -> bool {
    let w: Vec<i64> = m.0.iter().chain(r).copied().collect();
    c.rays().iter().all(|g| {
        let s: i128 = g.0.iter().zip(&w).map(|(a, b)| i128::from(*a) * i128::from(*b)).sum();
        s >= 0
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConeType {
    Smooth,
    /// Simplicial with multiplicity `index > 1`.
    Simplicial { index: BigInt },
    NonSimplicial,
}

pub fn cone_diagnostics(c: &Cone) -> ConeType {
    let rows: Vec<Vec<Rat>> = c.rays().iter().map(|r| r.to_rat().0).collect();
    if linalg::rank(&rows) < rows.len() {
        return ConeType::NonSimplicial;
    }
    if rows.is_empty() {
        return ConeType::Smooth;
    }
    let ints: Vec<Vec<i64>> = c.rays().iter().map(|r| r.0.clone()).collect();
    let index = linalg::gcd_maximal_minors(&ints).abs();
    if index.is_one() {
        ConeType::Smooth
    } else {
        ConeType::Simplicial { index }
    }
}
