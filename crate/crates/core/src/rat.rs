//! Exact scalars and lattice/rational vectors.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always stored in lowest terms with a positive denominator.
pub type Rat = BigRational;

/// `n / d` as a [`Rat`]. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Parses `"p"` or `"p/q"`; rejects a zero denominator.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if d.is_zero() {
        return None;
    }
    Some(Rat::new(n, d))
}

/// Renders `p/q`, or `p` when integral.
pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn lcm_denominators<'a>(it: impl IntoIterator<Item = &'a Rat>) -> BigInt {
    it.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

pub fn to_i64(n: &BigInt) -> Result<i64> {
    n.to_i64().ok_or(Error::Overflow)
}

/// An element of the lattice `N` or `M`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LatticeVec(pub Vec<i64>);

/// An element of `N_Q` or `M_Q`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RatVec(pub Vec<Rat>);

impl LatticeVec {
    pub fn new(coords: Vec<i64>) -> Self {
        LatticeVec(coords)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| *c == 0)
    }

    pub fn to_rat(&self) -> RatVec {
        RatVec(self.0.iter().map(|&c| int(c)).collect())
    }

    /// Divides out the gcd of the coordinates.
    pub fn primitive(&self) -> LatticeVec {
        let g = self.0.iter().fold(0i64, |g, c| g.gcd(c));
        if g <= 1 {
            return self.clone();
        }
        LatticeVec(self.0.iter().map(|c| c / g).collect())
    }

    pub fn sup_norm(&self) -> i64 {
        self.0.iter().map(|c| c.abs()).max().unwrap_or(0)
    }
}

impl fmt::Display for LatticeVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl RatVec {
    pub fn zero(rank: usize) -> Self {
        RatVec(vec![Rat::zero(); rank])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        RatVec(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &RatVec) -> Rat {
        debug_assert_eq!(self.rank(), other.rank());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn dot_lattice(&self, other: &LatticeVec) -> Rat {
        debug_assert_eq!(self.rank(), other.rank());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, &b)| a * BigInt::from(b))
            .sum()
    }

    pub fn add(&self, other: &RatVec) -> RatVec {
        RatVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &RatVec) -> RatVec {
        RatVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: &Rat) -> RatVec {
        RatVec(self.0.iter().map(|a| a * s).collect())
    }

    pub fn neg(&self) -> RatVec {
        RatVec(self.0.iter().map(|a| -a).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|a| a.is_integer())
    }

    /// The primitive lattice vector on the ray `Q>=0 * self`, or `None` for the zero vector.
    pub fn primitive_lattice(&self) -> Result<Option<LatticeVec>> {
        if self.is_zero() {
            return Ok(None);
        }
        let l = lcm_denominators(&self.0);
        let ints: Vec<BigInt> = self.0.iter().map(|a| (a * &l).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        let coords = ints
            .iter()
            .map(|c| to_i64(&(c / &g)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Some(LatticeVec(coords)))
    }

    /// Lattice vector if every coordinate is integral.
    pub fn to_lattice(&self) -> Option<LatticeVec> {
        self.0
            .iter()
            .map(|a| if a.is_integer() { a.numer().to_i64() } else { None })
            .collect::<Option<Vec<_>>>()
            .map(LatticeVec)
    }
}

impl From<&LatticeVec> for RatVec {
    fn from(v: &LatticeVec) -> Self {
        v.to_rat()
    }
}

impl fmt::Display for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", fmt_rat(c))?;
        }
        write!(f, ")")
    }
}

pub fn floor(r: &Rat) -> BigInt {
    r.floor().to_integer()
}

pub fn ceil(r: &Rat) -> BigInt {
    r.ceil().to_integer()
}

pub fn is_nonneg(r: &Rat) -> bool {
    !r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("-1/4"), Some(rat(-1, 4)));
        assert_eq!(parse_rat("6/8"), Some(rat(3, 4)));
        assert_eq!(parse_rat(" 7 "), Some(int(7)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(parse_rat("x"), None);
        assert_eq!(fmt_rat(&rat(17, 12)), "17/12");
        assert_eq!(fmt_rat(&rat(4, 2)), "2");
    }

    #[test]
    fn primitive_vectors() {
        assert_eq!(LatticeVec(vec![2, 0]).primitive(), LatticeVec(vec![1, 0]));
        assert_eq!(LatticeVec(vec![-4, 6]).primitive(), LatticeVec(vec![-2, 3]));
        let v = RatVec(vec![rat(1, 2), int(1)]);
        assert_eq!(v.primitive_lattice().unwrap(), Some(LatticeVec(vec![1, 2])));
        assert_eq!(RatVec::zero(2).primitive_lattice().unwrap(), None);
    }

    #[test]
    fn floors_round_down() {
        assert_eq!(floor(&rat(-1, 4)), BigInt::from(-1));
        assert_eq!(floor(&rat(34, 12)), BigInt::from(2));
        assert_eq!(ceil(&rat(1, 4)), BigInt::from(1));
    }
}
