//! Cones, tailed polyhedra, support functions and their common linearity fan.
//!
//! Polyhedra are kept in V-representation: a list of extreme points plus a
//! tail cone given by primitive generators. Inequalities only appear
//! transiently, inside the double-description step used for dual cones and
//! for cutting a cone into chambers.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::lp;
use crate::rat::{int, LatticeVec, Rat, RatVec};

/// Highest rank for which [`Cone::dual`] is supported.
pub const MAX_DUAL_RANK: usize = 4;
/// Highest rank for which [`chamber_fan`] is supported.
pub const MAX_FAN_RANK: usize = 3;

/// A rational polyhedral cone given by primitive lattice generators.
///
/// Generators are reduced (none is a nonnegative combination of the others)
/// and sorted, so for pointed cones two equal cones have equal representations.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cone {
    rank: usize,
    rays: Vec<LatticeVec>,
    pointed: bool,
}

fn check_rank(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

/// `x` is a nonnegative combination of `gens`.
fn in_cone(gens: &[RatVec], x: &RatVec) -> bool {
    let rank = x.rank();
    let rows: Vec<Vec<Rat>> = (0..rank)
        .map(|i| gens.iter().map(|g| g.0[i].clone()).collect())
        .collect();
    lp::nonneg_solution(&rows, &x.0, gens.len()).is_some()
}

impl Cone {
    /// Builds the cone generated by `rays`: primitivizes, deduplicates and drops
    /// redundant generators. An empty list gives the zero cone.
    pub fn new(rank: usize, rays: Vec<LatticeVec>) -> Result<Cone> {
        let mut prim: Vec<LatticeVec> = Vec::with_capacity(rays.len());
        for r in rays {
            check_rank(rank, r.rank())?;
            if r.is_zero() {
                return Err(Error::ZeroRay);
            }
            let p = r.primitive();
            if !prim.contains(&p) {
                prim.push(p);
            }
        }
        let mut keep: Vec<bool> = vec![true; prim.len()];
        for i in 0..prim.len() {
            let others: Vec<RatVec> = prim
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i && keep[j])
                .map(|(_, r)| r.to_rat())
                .collect();
            if !others.is_empty() && in_cone(&others, &prim[i].to_rat()) {
                keep[i] = false;
            }
        }
        let mut rays: Vec<LatticeVec> = prim
            .into_iter()
            .zip(keep)
            .filter_map(|(r, k)| k.then_some(r))
            .collect();
        rays.sort();
        let pointed = Self::compute_pointed(rank, &rays);
        Ok(Cone { rank, rays, pointed })
    }

    fn compute_pointed(rank: usize, rays: &[LatticeVec]) -> bool {
        if rays.is_empty() {
            return true;
        }
        // Not pointed iff some convex combination of the rays vanishes.
        let mut rows: Vec<Vec<Rat>> = (0..rank)
            .map(|i| rays.iter().map(|r| int(r.0[i])).collect())
            .collect();
        rows.push(vec![Rat::one(); rays.len()]);
        let mut rhs = vec![Rat::zero(); rank];
        rhs.push(Rat::one());
        lp::nonneg_solution(&rows, &rhs, rays.len()).is_none()
    }

    pub fn zero(rank: usize) -> Cone {
        Cone { rank, rays: Vec::new(), pointed: true }
    }

    /// The positive orthant spanned by the standard basis.
    pub fn orthant(rank: usize) -> Cone {
        let rays = (0..rank)
            .rev()
            .map(|i| {
                let mut v = vec![0; rank];
                v[i] = 1;
                LatticeVec(v)
            })
            .collect();
        Cone { rank, rays, pointed: true }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rays(&self) -> &[LatticeVec] {
        &self.rays
    }

    pub fn is_pointed(&self) -> bool {
        self.pointed
    }

    pub fn is_zero(&self) -> bool {
        self.rays.is_empty()
    }

    /// Dimension of the linear span.
    pub fn dim(&self) -> usize {
        let rows: Vec<Vec<Rat>> = self.rays.iter().map(|r| r.to_rat().0).collect();
        linalg::rank(&rows)
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim() == self.rank
    }

    pub fn contains(&self, v: &RatVec) -> bool {
        if v.is_zero() {
            return true;
        }
        let gens: Vec<RatVec> = self.rays.iter().map(LatticeVec::to_rat).collect();
        in_cone(&gens, v)
    }

    /// Same set of points, regardless of representation.
    pub fn same_cone(&self, other: &Cone) -> bool {
        self.rank == other.rank
            && self.rays.iter().all(|r| other.contains(&r.to_rat()))
            && other.rays.iter().all(|r| self.contains(&r.to_rat()))
    }

    /// `Ok(())` if `m` pairs nonnegatively with every generator, i.e. `m` lies in the
    /// dual cone; otherwise the first generator with negative pairing.
    pub fn dual_contains(&self, m: &RatVec) -> std::result::Result<(), LatticeVec> {
        match self.rays.iter().find(|r| m.dot_lattice(r).is_negative()) {
            Some(r) => Err(r.clone()),
            None => Ok(()),
        }
    }

    /// Generators of `{m : <m, v> >= 0 for all v in self}`.
    pub fn dual(&self) -> Result<Cone> {
        if self.rank > MAX_DUAL_RANK {
            return Err(Error::UnsupportedRank {
                op: "dual_cone",
                rank: self.rank,
                max: MAX_DUAL_RANK,
            });
        }
        let mut gens: Vec<RatVec> = Vec::new();
        for i in 0..self.rank {
            let mut e = RatVec::zero(self.rank);
            e.0[i] = Rat::one();
            gens.push(e.neg());
            gens.push(e);
        }
        for r in &self.rays {
            gens = cut_halfspace(&gens, &r.to_rat());
            gens = reduce_generators(self.rank, &gens)?;
        }
        Cone::new(self.rank, to_lattice_rays(&gens)?)
    }
}

fn to_lattice_rays(gens: &[RatVec]) -> Result<Vec<LatticeVec>> {
    let mut out = Vec::with_capacity(gens.len());
    for g in gens {
        if let Some(l) = g.primitive_lattice()? {
            out.push(l);
        }
    }
    Ok(out)
}

fn reduce_generators(rank: usize, gens: &[RatVec]) -> Result<Vec<RatVec>> {
    let cone = Cone::new(rank, to_lattice_rays(gens)?)?;
    Ok(cone.rays.iter().map(LatticeVec::to_rat).collect())
}

/// One double-description step: generators of `cone(gens) ∩ {x : <a, x> >= 0}`.
pub(crate) fn cut_halfspace(gens: &[RatVec], a: &RatVec) -> Vec<RatVec> {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    let mut out = Vec::new();
    for g in gens {
        let s = a.dot(g);
        if s.is_positive() {
            pos.push((g, s));
        } else if s.is_negative() {
            neg.push((g, s));
        } else {
            out.push(g.clone());
        }
    }
    for (p, sp) in &pos {
        for (n, sn) in &neg {
            // <a, sp*n - sn*p> = 0
            let c = n.scale(sp).sub(&p.scale(sn));
            if !c.is_zero() {
                out.push(c);
            }
        }
    }
    out.extend(pos.into_iter().map(|(g, _)| g.clone()));
    out
}

/// Value of a support function: either a rational number or `-inf` when the
/// minimum is unbounded (the weight lies outside the dual of the tail).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SupportValue {
    Finite(Rat),
    MinusInfinity,
}

impl SupportValue {
    pub fn finite(&self) -> Option<&Rat> {
        match self {
            SupportValue::Finite(r) => Some(r),
            SupportValue::MinusInfinity => None,
        }
    }
}

/// A polyhedron `conv(vertices) + tail`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TailedPolyhedron {
    vertices: Vec<RatVec>,
    tail: Cone,
}

impl TailedPolyhedron {
    /// Reduces `vertices` to the extreme points of `conv(vertices) + tail`.
    pub fn new(vertices: Vec<RatVec>, tail: Cone) -> Result<TailedPolyhedron> {
        if vertices.is_empty() {
            return Err(Error::Semantic("polyhedron needs at least one vertex".into()));
        }
        let mut uniq: Vec<RatVec> = Vec::with_capacity(vertices.len());
        for v in vertices {
            check_rank(tail.rank(), v.rank())?;
            if !uniq.contains(&v) {
                uniq.push(v);
            }
        }
        let mut keep = vec![true; uniq.len()];
        for i in 0..uniq.len() {
            let others: Vec<&RatVec> = uniq
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i && keep[j])
                .map(|(_, v)| v)
                .collect();
            if !others.is_empty() && in_hull_plus_tail(&others, &tail, &uniq[i]) {
                keep[i] = false;
            }
        }
        let mut vertices: Vec<RatVec> = uniq
            .into_iter()
            .zip(keep)
            .filter_map(|(v, k)| k.then_some(v))
            .collect();
        vertices.sort();
        Ok(TailedPolyhedron { vertices, tail })
    }

    /// `{p} + tail`.
    pub fn point(p: RatVec, tail: Cone) -> Result<TailedPolyhedron> {
        Self::new(vec![p], tail)
    }

    /// The tail cone itself, the neutral element of Minkowski addition.
    pub fn neutral(tail: Cone) -> TailedPolyhedron {
        let rank = tail.rank();
        TailedPolyhedron { vertices: vec![RatVec::zero(rank)], tail }
    }

    pub fn vertices(&self) -> &[RatVec] {
        &self.vertices
    }

    pub fn tail(&self) -> &Cone {
        &self.tail
    }

    pub fn rank(&self) -> usize {
        self.tail.rank()
    }

    pub fn is_neutral(&self) -> bool {
        self.vertices.len() == 1 && self.vertices[0].is_zero()
    }

    pub fn contains(&self, p: &RatVec) -> bool {
        let vs: Vec<&RatVec> = self.vertices.iter().collect();
        in_hull_plus_tail(&vs, &self.tail, p)
    }

    /// `h(m) = min <m, p>` over the polyhedron.
    pub fn support(&self, m: &RatVec) -> Result<SupportValue> {
        check_rank(self.rank(), m.rank())?;
        if self.tail.dual_contains(m).is_err() {
            return Ok(SupportValue::MinusInfinity);
        }
        let min = self
            .vertices
            .iter()
            .map(|v| m.dot(v))
            .min()
            .expect("polyhedron has a vertex");
        Ok(SupportValue::Finite(min))
    }

    /// Index of the vertex minimizing `<m, v>` (smallest index on ties).
    pub fn argmin_vertex(&self, m: &RatVec) -> usize {
        let mut best = 0;
        let mut val = m.dot(&self.vertices[0]);
        for (i, v) in self.vertices.iter().enumerate().skip(1) {
            let d = m.dot(v);
            if d < val {
                val = d;
                best = i;
            }
        }
        best
    }

    pub fn minkowski_sum(&self, other: &TailedPolyhedron) -> Result<TailedPolyhedron> {
        if !self.tail.same_cone(&other.tail) {
            return Err(Error::TailMismatch);
        }
        let sums = self
            .vertices
            .iter()
            .flat_map(|a| other.vertices.iter().map(move |b| a.add(b)))
            .collect();
        TailedPolyhedron::new(sums, self.tail.clone())
    }

    /// Whether some `t >= 0` has `t * ray` in the polyhedron.
    pub fn meets_ray(&self, ray: &LatticeVec) -> Result<bool> {
        check_rank(self.rank(), ray.rank())?;
        let rank = self.rank();
        let nv = self.vertices.len();
        let nt = self.tail.rays().len();
        let cols = nv + nt + 1;
        let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(rank + 1);
        for i in 0..rank {
            let mut r = Vec::with_capacity(cols);
            r.extend(self.vertices.iter().map(|v| v.0[i].clone()));
            r.extend(self.tail.rays().iter().map(|t| int(t.0[i])));
            r.push(int(-ray.0[i]));
            rows.push(r);
        }
        let mut sum_row = vec![Rat::one(); nv];
        sum_row.extend(std::iter::repeat_n(Rat::zero(), nt + 1));
        rows.push(sum_row);
        let mut rhs = vec![Rat::zero(); rank];
        rhs.push(Rat::one());
        Ok(lp::nonneg_solution(&rows, &rhs, cols).is_some())
    }
}

fn in_hull_plus_tail(vertices: &[&RatVec], tail: &Cone, p: &RatVec) -> bool {
    let rank = p.rank();
    let nv = vertices.len();
    let nt = tail.rays().len();
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(rank + 1);
    for i in 0..rank {
        let mut r = Vec::with_capacity(nv + nt);
        r.extend(vertices.iter().map(|v| v.0[i].clone()));
        r.extend(tail.rays().iter().map(|t| int(t.0[i])));
        rows.push(r);
    }
    let mut sum_row = vec![Rat::one(); nv];
    sum_row.extend(std::iter::repeat_n(Rat::zero(), nt));
    rows.push(sum_row);
    let mut rhs = p.0.clone();
    rhs.push(Rat::one());
    lp::nonneg_solution(&rows, &rhs, nv + nt).is_some()
}

/// A simplicial cone of the fan together with, for each registered polyhedron,
/// the vertex realizing its support function on the whole cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chamber {
    pub cone: Cone,
    pub minimizers: Vec<usize>,
}

impl Chamber {
    /// The sum of the generators, a point of the relative interior.
    pub fn interior_point(&self) -> RatVec {
        self.cone
            .rays()
            .iter()
            .fold(RatVec::zero(self.cone.rank()), |acc, r| acc.add(&r.to_rat()))
    }
}

#[derive(Clone, Debug)]
pub struct ChamberFan {
    pub weight_cone: Cone,
    pub chambers: Vec<Chamber>,
}

impl ChamberFan {
    /// Distinct generators of all chambers, sorted.
    pub fn rays(&self) -> Vec<LatticeVec> {
        let set: BTreeSet<LatticeVec> = self
            .chambers
            .iter()
            .flat_map(|c| c.cone.rays().iter().cloned())
            .collect();
        set.into_iter().collect()
    }

    /// A chamber containing `m`, if any.
    pub fn locate(&self, m: &RatVec) -> Option<&Chamber> {
        self.chambers.iter().find(|c| c.cone.contains(m))
    }
}

/// Cuts `weight_cone` into simplicial chambers on which every support function
/// of `polys` is linear.
///
/// The cutting hyperplanes are `(v - w)^⊥` for every pair of vertices of the same
/// polyhedron, plus the coordinate hyperplanes so that every chamber is pointed
/// even when the weight cone contains a line.
pub fn chamber_fan(polys: &[TailedPolyhedron], weight_cone: &Cone) -> Result<ChamberFan> {
    let rank = weight_cone.rank();
    if rank > MAX_FAN_RANK {
        return Err(Error::UnsupportedRank { op: "chamber_fan", rank, max: MAX_FAN_RANK });
    }
    if let Some(first) = polys.first() {
        for p in polys {
            check_rank(rank, p.rank())?;
            if !p.tail().same_cone(first.tail()) {
                return Err(Error::TailMismatch);
            }
        }
    }

    let mut normals: BTreeSet<LatticeVec> = BTreeSet::new();
    for i in 0..rank {
        let mut e = vec![0; rank];
        e[i] = 1;
        normals.insert(LatticeVec(e));
    }
    for p in polys {
        let vs = p.vertices();
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if let Some(n) = vs[i].sub(&vs[j]).primitive_lattice()? {
                    // a hyperplane and its negative cut identically
                    let first_nonzero = n.0.iter().find(|c| **c != 0).copied().unwrap_or(1);
                    let n = if first_nonzero < 0 { LatticeVec(n.0.iter().map(|c| -c).collect()) } else { n };
                    normals.insert(n);
                }
            }
        }
    }

    let mut cells: Vec<Vec<RatVec>> = vec![weight_cone.rays().iter().map(LatticeVec::to_rat).collect()];
    if weight_cone.is_zero() {
        return Ok(ChamberFan { weight_cone: weight_cone.clone(), chambers: Vec::new() });
    }
    for n in &normals {
        let a = n.to_rat();
        let mut next = Vec::with_capacity(cells.len());
        for cell in cells {
            let has_pos = cell.iter().any(|g| a.dot(g).is_positive());
            let has_neg = cell.iter().any(|g| a.dot(g).is_negative());
            if has_pos && has_neg {
                next.push(reduce_generators(rank, &cut_halfspace(&cell, &a))?);
                next.push(reduce_generators(rank, &cut_halfspace(&cell, &a.neg()))?);
            } else {
                next.push(cell);
            }
        }
        cells = next;
    }

    let mut chambers = Vec::new();
    for cell in cells {
        let cone = Cone::new(rank, to_lattice_rays(&cell)?)?;
        for simplex in triangulate(&cone)? {
            let chamber_cone = Cone::new(rank, simplex)?;
            let mut ch = Chamber { cone: chamber_cone, minimizers: Vec::new() };
            let m = ch.interior_point();
            ch.minimizers = polys.iter().map(|p| p.argmin_vertex(&m)).collect();
            chambers.push(ch);
        }
    }
    Ok(ChamberFan { weight_cone: weight_cone.clone(), chambers })
}

/// Splits a pointed cone of dimension at most 3 into simplicial cones.
fn triangulate(cone: &Cone) -> Result<Vec<Vec<LatticeVec>>> {
    let rays = cone.rays();
    let dim = cone.dim();
    if rays.len() == dim {
        return Ok(vec![rays.to_vec()]);
    }
    if dim != 3 || cone.rank() != 3 {
        return Err(Error::UnsupportedRank { op: "triangulate", rank: cone.rank(), max: 3 });
    }
    let cross = |a: &LatticeVec, b: &LatticeVec| -> [i128; 3] {
        let (a, b) = (&a.0, &b.0);
        [
            a[1] as i128 * b[2] as i128 - a[2] as i128 * b[1] as i128,
            a[2] as i128 * b[0] as i128 - a[0] as i128 * b[2] as i128,
            a[0] as i128 * b[1] as i128 - a[1] as i128 * b[0] as i128,
        ]
    };
    let apex = &rays[0];
    let mut out = Vec::new();
    for i in 1..rays.len() {
        for j in i + 1..rays.len() {
            let n = cross(&rays[i], &rays[j]);
            let signs: Vec<i128> = rays
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i && k != j)
                .map(|(_, r)| (0..3).map(|t| n[t] * r.0[t] as i128).sum::<i128>().signum())
                .collect();
            let facet = signs.iter().all(|s| *s > 0) || signs.iter().all(|s| *s < 0);
            // facets through the apex contribute nothing
            let through_apex = (0..3).map(|t| n[t] * apex.0[t] as i128).sum::<i128>() == 0;
            if facet && !through_apex {
                out.push(vec![apex.clone(), rays[i].clone(), rays[j].clone()]);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    fn lv(c: &[i64]) -> LatticeVec {
        LatticeVec(c.to_vec())
    }

    fn cone(rank: usize, rays: &[&[i64]]) -> Cone {
        Cone::new(rank, rays.iter().map(|r| lv(r)).collect()).unwrap()
    }

    fn rv(c: &[Rat]) -> RatVec {
        RatVec(c.to_vec())
    }

    #[test]
    fn make_cone_examples() {
        let c = cone(1, &[&[1]]);
        assert_eq!(c.rays(), &[lv(&[1])]);
        assert!(c.is_pointed());
        let c = cone(2, &[&[2, 0], &[0, 4]]);
        assert_eq!(c.rays(), &[lv(&[0, 1]), lv(&[1, 0])]);
        let c = cone(2, &[&[1, 0], &[1, 2], &[1, 1]]);
        assert_eq!(c.rays(), &[lv(&[1, 0]), lv(&[1, 2])]);
        assert!(!cone(1, &[&[1], &[-1]]).is_pointed());
        assert!(Cone::zero(3).is_pointed());
    }

    #[test]
    fn make_cone_errors() {
        assert_eq!(
            Cone::new(2, vec![lv(&[1, 0, 0])]),
            Err(Error::DimensionMismatch { expected: 2, found: 3 })
        );
        assert_eq!(Cone::new(2, vec![lv(&[0, 0])]), Err(Error::ZeroRay));
    }

    #[test]
    fn dual_cone_examples() {
        let orth = Cone::orthant(2);
        assert_eq!(orth.dual().unwrap(), orth);

        // cone((1,2)) dualizes to the half plane m1 + 2 m2 >= 0
        let d = cone(2, &[&[1, 2]]).dual().unwrap();
        let expected = cone(2, &[&[2, -1], &[-2, 1], &[1, 0]]);
        assert!(d.same_cone(&expected));
        assert!(!d.is_pointed());

        let full = Cone::zero(2).dual().unwrap();
        assert!(full.same_cone(&cone(2, &[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]])));

        let five = Cone::orthant(5);
        assert!(matches!(five.dual(), Err(Error::UnsupportedRank { .. })));
    }

    #[test]
    fn dual_is_involution_rank3() {
        let c = cone(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 2], &[0, 0, 1]]);
        let dd = c.dual().unwrap().dual().unwrap();
        assert_eq!(dd, c);
    }

    #[test]
    fn containment() {
        assert!(Cone::orthant(2).contains(&RatVec::from_ints(&[1, 1])));
        assert!(!cone(2, &[&[1, 2]]).contains(&RatVec::from_ints(&[1, 1])));
        assert!(cone(2, &[&[1, 2]]).contains(&RatVec::zero(2)));
        assert!(Cone::zero(2).contains(&RatVec::zero(2)));
    }

    #[test]
    fn support_examples() {
        let q = Cone::orthant(1);
        let p = TailedPolyhedron::point(rv(&[rat(3, 4)]), q.clone()).unwrap();
        assert_eq!(p.support(&RatVec::from_ints(&[2])).unwrap(), SupportValue::Finite(rat(3, 2)));

        let seg = TailedPolyhedron::new(
            vec![RatVec::from_ints(&[0, 0]), RatVec::from_ints(&[1, 0])],
            cone(2, &[&[0, 1]]),
        )
        .unwrap();
        assert_eq!(seg.support(&RatVec::from_ints(&[-1, 2])).unwrap(), SupportValue::Finite(int(-1)));

        let p = TailedPolyhedron::point(rv(&[rat(-1, 4)]), q).unwrap();
        assert_eq!(p.support(&RatVec::from_ints(&[-1])).unwrap(), SupportValue::MinusInfinity);
        assert!(p.support(&RatVec::from_ints(&[1, 1])).is_err());
    }

    #[test]
    fn minkowski_examples() {
        let q = Cone::orthant(1);
        let a = TailedPolyhedron::point(rv(&[rat(1, 2)]), q.clone()).unwrap();
        let b = TailedPolyhedron::point(rv(&[rat(1, 3)]), q.clone()).unwrap();
        assert_eq!(a.minkowski_sum(&b).unwrap().vertices(), &[rv(&[rat(5, 6)])]);

        let n = TailedPolyhedron::neutral(q.clone());
        assert_eq!(n.minkowski_sum(&a).unwrap(), a);

        let z = Cone::zero(2);
        let e1 = TailedPolyhedron::new(vec![RatVec::zero(2), RatVec::from_ints(&[1, 0])], z.clone()).unwrap();
        let e2 = TailedPolyhedron::new(vec![RatVec::zero(2), RatVec::from_ints(&[0, 1])], z.clone()).unwrap();
        let sq = e1.minkowski_sum(&e2).unwrap();
        assert_eq!(sq.vertices().len(), 4);

        let other = TailedPolyhedron::neutral(Cone::zero(1));
        assert_eq!(a.minkowski_sum(&other), Err(Error::TailMismatch));
    }

    #[test]
    fn vertex_reduction() {
        let p = TailedPolyhedron::new(
            vec![RatVec::from_ints(&[0, 0]), RatVec::from_ints(&[1, 1]), RatVec::from_ints(&[0, 2])],
            Cone::orthant(2),
        )
        .unwrap();
        assert_eq!(p.vertices(), &[RatVec::from_ints(&[0, 0])]);
    }

    #[test]
    fn ray_meets_examples() {
        let q = Cone::orthant(1);
        let p = TailedPolyhedron::point(rv(&[rat(1, 2)]), q).unwrap();
        assert!(p.meets_ray(&lv(&[1])).unwrap());

        let p = TailedPolyhedron::point(RatVec::from_ints(&[1, 1]), cone(2, &[&[1, 0]])).unwrap();
        assert!(!p.meets_ray(&lv(&[0, 1])).unwrap());

        let p = TailedPolyhedron::new(
            vec![RatVec::from_ints(&[-1, 0]), RatVec::from_ints(&[1, 0])],
            Cone::zero(2),
        )
        .unwrap();
        assert!(p.meets_ray(&lv(&[3, 7])).unwrap());
    }

    #[test]
    fn fan_rank1() {
        let q = Cone::orthant(1);
        let polys = vec![TailedPolyhedron::point(rv(&[rat(1, 2)]), q.clone()).unwrap()];
        let f = chamber_fan(&polys, &q.dual().unwrap()).unwrap();
        assert_eq!(f.chambers.len(), 1);
        let whole = Cone::zero(1).dual().unwrap();
        let f = chamber_fan(&[], &whole).unwrap();
        assert_eq!(f.chambers.len(), 2);
    }

    #[test]
    fn fan_rank2_segment() {
        let tail = cone(2, &[&[0, 1]]);
        let seg = TailedPolyhedron::new(vec![RatVec::from_ints(&[0, 0]), RatVec::from_ints(&[1, 0])], tail.clone())
            .unwrap();
        let f = chamber_fan(std::slice::from_ref(&seg), &tail.dual().unwrap()).unwrap();
        assert_eq!(f.chambers.len(), 2);
        assert_eq!(f.rays(), vec![lv(&[-1, 0]), lv(&[0, 1]), lv(&[1, 0])]);
        for ch in &f.chambers {
            let v = &seg.vertices()[ch.minimizers[0]];
            for r in ch.cone.rays() {
                let m = r.to_rat();
                assert_eq!(seg.support(&m).unwrap(), SupportValue::Finite(m.dot(v)));
            }
        }
        let single = TailedPolyhedron::point(RatVec::from_ints(&[1, 1]), Cone::orthant(2)).unwrap();
        let f = chamber_fan(&[single], &Cone::orthant(2)).unwrap();
        assert_eq!(f.chambers.len(), 1);
    }

    #[test]
    fn fan_rank3_covers_and_is_linear() {
        let tail = Cone::orthant(3);
        let p = TailedPolyhedron::new(
            vec![
                RatVec::from_ints(&[0, 0, 0]),
                RatVec(vec![rat(1, 2), int(0), int(0)]),
                RatVec::from_ints(&[0, 1, 0]),
                RatVec::from_ints(&[0, 0, 1]),
            ],
            tail.clone(),
        )
        .unwrap();
        // all vertices but the origin are dominated
        assert_eq!(p.vertices().len(), 1);
        let q = TailedPolyhedron::new(
            vec![RatVec::from_ints(&[1, 0, 0]), RatVec::from_ints(&[0, 1, 0]), RatVec::from_ints(&[0, 0, 1])],
            tail.clone(),
        )
        .unwrap();
        assert_eq!(q.vertices().len(), 3);
        let f = chamber_fan(std::slice::from_ref(&q), &tail.dual().unwrap()).unwrap();
        assert!(f.chambers.len() >= 3);
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    let m = RatVec::from_ints(&[a, b, c]);
                    let ch = f.locate(&m).expect("chambers cover the weight cone");
                    let v = &q.vertices()[ch.minimizers[0]];
                    assert_eq!(q.support(&m).unwrap(), SupportValue::Finite(m.dot(v)));
                }
            }
        }
        assert!(matches!(
            chamber_fan(&[], &Cone::orthant(4)),
            Err(Error::UnsupportedRank { .. })
        ));
    }
}
