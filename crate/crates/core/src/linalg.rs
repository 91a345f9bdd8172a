//! Dense exact linear algebra over `Rat`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::rat::Rat;

/// Incrementally maintained reduced row-echelon basis of a subspace.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (a, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    *a -= &f * b;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v` to the span; returns `false` if it was already there.
    pub fn insert(&mut self, v: &[Rat]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|a| !a.is_zero()) else {
            return false;
        };
        let lead = r[p].clone();
        for a in r.iter_mut() {
            *a /= &lead;
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (a, b) in row.iter_mut().zip(&r) {
                if !b.is_zero() {
                    *a -= &f * b;
                }
            }
        }
        self.rows.push(r);
        self.pivots.push(p);
        true
    }
}

pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut e = Echelon::new();
    rows.iter().filter(|r| e.insert(r)).count()
}

/// Basis of `{x : rows * x = 0}`.
pub fn kernel(rows: &[Vec<Rat>], cols: usize) -> Vec<Vec<Rat>> {
    let mut e = Echelon::new();
    for r in rows {
        debug_assert_eq!(r.len(), cols);
        e.insert(r);
    }
    let free: Vec<usize> = (0..cols).filter(|c| !e.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rat::zero(); cols];
            x[f] = Rat::one();
            for (row, &p) in e.rows.iter().zip(&e.pivots) {
                x[p] = -row[f].clone();
            }
            x
        })
        .collect()
}

pub fn det(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut d = Rat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        let piv = a[c][c].clone();
        d *= &piv;
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] / &piv;
            for k in c..n {
                let t = &f * &a[c][k];
                a[r][k] -= t;
            }
        }
    }
    d
}

/// Solves `m * x = b` for an invertible square `m`.
pub fn solve(m: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut r = r.clone();
            r.push(v.clone());
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(p, c);
        let piv = a[c][c].clone();
        for v in a[c].iter_mut() {
            *v /= &piv;
        }
        let prow = a[c].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == c || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&prow) {
                *v -= &f * pv;
            }
        }
    }
    Some(a.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// gcd of all maximal (k x k) minors of a k x n integer matrix with k <= n.
pub fn gcd_maximal_minors(rows: &[Vec<i64>]) -> BigInt {
    let k = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    if k > n {
        return BigInt::zero();
    }
    combinations(n, k).iter().fold(BigInt::zero(), |g, cols| {
        let sub: Vec<Vec<Rat>> = rows
            .iter()
            .map(|r| cols.iter().map(|&c| Rat::from_integer(r[c].into())).collect())
            .collect();
        g.gcd(&det(&sub).to_integer())
    })
}

/// All increasing k-subsets of `0..n`.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}
