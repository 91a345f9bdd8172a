//! The graded ring `A = sum_m H^0(Y, floor(m D_1))` of a rank-one divisor.
//!
//! On P1 with affine coordinate `t`, write `floor(m D_1) = sum a_i(m) z_i`. Then
//! `A_m = B_m * {g in Q[t] : deg g <= deg floor(m D_1)}` with
//! `B_m = prod_{z_i finite} (t - z_i)^(-a_i(m))`. Elements of `A_m` are stored as
//! the polynomial `g`. Multiplying into degree `m + m'` picks up the polynomial
//! factor `prod (t - z_i)^(a_i(m+m') - a_i(m) - a_i(m'))`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::curve::{CurveModel, CurvePoint};
use crate::error::{Error, Result};
use crate::linalg::{self, Echelon};
use crate::pdiv::PolyhedralDivisor;
use crate::rat::{to_i64, Rat, RatVec};

/// `dim A_m`, for P1 and elliptic bases.
pub fn graded_dim(d: &PolyhedralDivisor, m: u64) -> Result<u64> {
    let curve = d.require_rank_one_projective()?;
    if !matches!(curve, CurveModel::P1 | CurveModel::EllipticQ { .. }) {
        return Err(Error::WrongShape("graded dimensions need a P1 or elliptic base".into()));
    }
    let dm = d.evaluate(&RatVec::from_ints(&[i64::try_from(m).map_err(|_| Error::Overflow)?]))?.floor();
    dm.h0_dim()?.ok_or_else(|| Error::NotApplicable("h0 undetermined".into()))
}

/// `[dim A_0, ..., dim A_max_degree]`.
pub fn hilbert_series(d: &PolyhedralDivisor, max_degree: u64) -> Result<Vec<u64>> {
    (0..=max_degree).map(|m| graded_dim(d, m)).collect()
}

/// A basis element `prod (t - z_i)^(e_i) * t^k` of `A_m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisElement {
    /// Exponents at the finite support points.
    pub exponents: Vec<(CurvePoint, BigInt)>,
    pub t_power: u64,
}

/// P1 data of `D_1`: finite points with coefficients, and the total slope.
#[derive(Clone, Debug)]
pub struct P1Ring {
    finite: Vec<(CurvePoint, Rat, Rat)>,
    infinity: Rat,
}

impl P1Ring {
    pub fn new(d: &PolyhedralDivisor) -> Result<P1Ring> {
        let curve = d.require_rank_one_projective()?;
        if *curve != CurveModel::P1 {
            return Err(Error::WrongShape("explicit sections need a P1 base".into()));
        }
        let d1 = d.evaluate(&RatVec::from_ints(&[1]))?;
        if !d1.degree()?.is_positive() {
            return Err(Error::NotProper("deg D(1) is not positive".into()));
        }
        let mut finite = Vec::new();
        let mut infinity = Rat::zero();
        for (p, c) in d1.terms() {
            match p.p1_coordinate() {
                Some(alpha) => finite.push((p.clone(), alpha, c.clone())),
                None => infinity = c.clone(),
            }
        }
        Ok(P1Ring { finite, infinity })
    }

    fn a(c: &Rat, m: u64) -> BigInt {
        (c * Rat::from_integer(m.into())).floor().to_integer()
    }

    /// `deg floor(m D_1)`; `A_m` is zero when negative.
    pub fn floor_degree(&self, m: u64) -> BigInt {
        self.finite.iter().map(|(_, _, c)| Self::a(c, m)).sum::<BigInt>() + Self::a(&self.infinity, m)
    }

    pub fn dim(&self, m: u64) -> usize {
        let d = self.floor_degree(m);
        if d.is_negative() {
            0
        } else {
            to_i64(&d).map_or(usize::MAX, |d| d as usize + 1)
        }
    }

    pub fn basis(&self, m: u64) -> Vec<BasisElement> {
        let exponents: Vec<(CurvePoint, BigInt)> =
            self.finite.iter().map(|(p, _, c)| (p.clone(), -Self::a(c, m))).collect();
        (0..self.dim(m) as u64).map(|k| BasisElement { exponents: exponents.clone(), t_power: k }).collect()
    }

    /// The polynomial factor carrying a product of elements of `A_m` and `A_m'` into `A_{m+m'}`.
    fn carry(&self, m: u64, m2: u64) -> Vec<Rat> {
        let mut out = vec![Rat::one()];
        for (_, alpha, c) in &self.finite {
            let e = Self::a(c, m + m2) - Self::a(c, m) - Self::a(c, m2);
            let lin = vec![-alpha.clone(), Rat::one()];
            let e = to_i64(&e).expect("carry exponent is small");
            for _ in 0..e {
                out = poly_mul(&out, &lin);
            }
        }
        out
    }

    /// Product of `f in A_m` and `g in A_m2` as a coordinate vector of `A_{m+m2}`.
    pub fn multiply(&self, m: u64, f: &[Rat], m2: u64, g: &[Rat]) -> Vec<Rat> {
        let mut p = poly_mul(&poly_mul(f, g), &self.carry(m, m2));
        let n = self.dim(m + m2);
        debug_assert!(p.iter().skip(n).all(Zero::is_zero), "product left the graded piece");
        p.resize(n, Rat::zero());
        p
    }
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn unit(n: usize, k: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[k] = Rat::one();
    v
}

/// Explicit basis of `A_m` on a P1 base.
pub fn monomial_basis(d: &PolyhedralDivisor, m: u64) -> Result<Vec<BasisElement>> {
    Ok(P1Ring::new(d)?.basis(m))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub degree: u64,
    /// Index into the monomial basis of `A_degree`.
    pub basis_index: usize,
}

/// Minimal homogeneous generators of `A` up to `max_degree`.
pub fn minimal_generators(d: &PolyhedralDivisor, max_degree: u64) -> Result<Vec<Generator>> {
    Ok(generators_for(&P1Ring::new(d)?, max_degree))
}

fn generators_for(ring: &P1Ring, max_degree: u64) -> Vec<Generator> {
    let mut gens: Vec<Generator> = Vec::new();
    for m in 1..=max_degree {
        let n = ring.dim(m);
        if n == 0 {
            continue;
        }
        let mut span = Echelon::new();
        for g in &gens {
            let rest = m - g.degree;
            let gv = unit(ring.dim(g.degree), g.basis_index);
            for k in 0..ring.dim(rest) {
                span.insert(&ring.multiply(g.degree, &gv, rest, &unit(ring.dim(rest), k)));
            }
            if span.dim() == n {
                break;
            }
        }
        for k in 0..n {
            if span.insert(&unit(n, k)) {
                gens.push(Generator { degree: m, basis_index: k });
            }
        }
    }
    gens
}

/// `(degree, count)` summary of a generator list.
pub fn generator_degrees(gens: &[Generator]) -> Vec<(u64, usize)> {
    let mut out: Vec<(u64, usize)> = Vec::new();
    for g in gens {
        match out.last_mut() {
            Some((deg, c)) if *deg == g.degree => *c += 1,
            _ => out.push((g.degree, 1)),
        }
    }
    out
}

/// Degree, monomial exponents and kernel basis of one degree.
type KernelBlock = (u64, Vec<Vec<u32>>, Vec<Vec<Rat>>);

/// Relations first appearing in one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationBlock {
    pub degree: u64,
    /// Exponent vectors over the generators, in the order of the coefficient vectors.
    pub monomials: Vec<Vec<u32>>,
    /// Dimension of the kernel of the evaluation map in this degree.
    pub kernel_dim: usize,
    /// Kernel vectors not implied by relations of lower degree.
    pub relations: Vec<Vec<Rat>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<Generator>,
    pub relations: Vec<RelationBlock>,
}

/// Generators and minimal relations up to `max_degree`.
pub fn relations(d: &PolyhedralDivisor, max_degree: u64) -> Result<Presentation> {
    let ring = P1Ring::new(d)?;
    let generators = generators_for(&ring, max_degree);
    let degs: Vec<u64> = generators.iter().map(|g| g.degree).collect();
    let mut blocks = Vec::new();
    // kernel bases by degree, kept for building lower-degree consequences
    let mut kernels: Vec<KernelBlock> = Vec::new();
    for m in 1..=max_degree {
        let monos = weighted_monomials(&degs, m);
        if monos.is_empty() {
            continue;
        }
        let n = ring.dim(m);
        // columns: evaluated monomials; the kernel lives over formal monomials
        let evals: Vec<Vec<Rat>> = monos.iter().map(|e| evaluate_monomial(&ring, &generators, e)).collect();
        let rows: Vec<Vec<Rat>> = (0..n).map(|i| evals.iter().map(|v| v[i].clone()).collect()).collect();
        let kernel = if n == 0 {
            (0..monos.len()).map(|k| unit(monos.len(), k)).collect()
        } else {
            linalg::kernel(&rows, monos.len())
        };
        if kernel.is_empty() {
            continue;
        }
        let index_of = |e: &[u32]| monos.iter().position(|x| x == e);
        let mut ideal = Echelon::new();
        for (deg, low_monos, low_kernel) in &kernels {
            for mult in weighted_monomials(&degs, m - deg) {
                for rel in low_kernel {
                    let mut v = vec![Rat::zero(); monos.len()];
                    for (e, c) in low_monos.iter().zip(rel) {
                        if c.is_zero() {
                            continue;
                        }
                        let prod: Vec<u32> = e.iter().zip(&mult).map(|(a, b)| a + b).collect();
                        let k = index_of(&prod).expect("product monomial has degree m");
                        v[k] += c;
                    }
                    ideal.insert(&v);
                }
            }
        }
        let new: Vec<Vec<Rat>> = kernel.iter().filter(|v| ideal.insert(v)).cloned().collect();
        if !new.is_empty() {
            blocks.push(RelationBlock { degree: m, monomials: monos.clone(), kernel_dim: kernel.len(), relations: new });
        }
        kernels.push((m, monos, kernel));
    }
    Ok(Presentation { generators, relations: blocks })
}

/// Exponent vectors `e` with `sum e_j deg_j = m`, in lexicographically decreasing order.
fn weighted_monomials(degs: &[u64], m: u64) -> Vec<Vec<u32>> {
    fn go(degs: &[u64], i: usize, left: u64, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == degs.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let max = left / degs[i];
        for e in (0..=max).rev() {
            cur.push(e as u32);
            go(degs, i + 1, left - e * degs[i], cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(degs, 0, m, &mut Vec::new(), &mut out);
    out
}

fn evaluate_monomial(ring: &P1Ring, gens: &[Generator], e: &[u32]) -> Vec<Rat> {
    let mut deg = 0u64;
    let mut acc = vec![Rat::one()];
    for (g, &k) in gens.iter().zip(e) {
        let gv = unit(ring.dim(g.degree), g.basis_index);
        for _ in 0..k {
            acc = ring.multiply(deg, &acc, g.degree, &gv);
            deg += g.degree;
        }
    }
    acc
}

/// `q (1 + ceil(l / deg D_1))`, past which no new generators are expected.
pub fn generation_bound(d: &PolyhedralDivisor) -> Result<u64> {
    let d1 = d.slope_divisor()?;
    let q = crate::rat::lcm_denominators(d1.terms().values());
    let ell = d1.terms().len() as i64;
    let deg = d1.degree()?;
    if !deg.is_positive() {
        return Err(Error::NotProper("deg D(1) is not positive".into()));
    }
    let c = crate::rat::ceil(&(Rat::from_integer(ell.into()) / deg));
    let b = q * (BigInt::one() + c);
    u64::try_from(to_i64(&b)?).map_err(|_| Error::Overflow)
}
