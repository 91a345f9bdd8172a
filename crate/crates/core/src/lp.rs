//! Exact feasibility of `A x = b, x >= 0` over the rationals.
//!
//! Phase-one simplex on a dense tableau with Bland's rule, so it always
//! terminates. Every membership question in the crate (cone containment,
//! redundancy of generators, extreme points, ray/polyhedron intersection)
//! reduces to one call here.

use num_traits::{Signed, Zero};

use crate::rat::Rat;

/// Returns a nonnegative solution of `rows * x = rhs`, or `None` if there is none.
///
/// `rows` is row-major, every row of length `cols`.
pub fn nonneg_solution(rows: &[Vec<Rat>], rhs: &[Rat], cols: usize) -> Option<Vec<Rat>> {
    let m = rows.len();
    debug_assert_eq!(rhs.len(), m);
    if m == 0 {
        return Some(vec![Rat::zero(); cols]);
    }
    let width = cols + m + 1;
    let rhs_col = cols + m;
    let mut t: Vec<Vec<Rat>> = Vec::with_capacity(m + 1);
    for (i, row) in rows.iter().enumerate() {
        debug_assert_eq!(row.len(), cols);
        let flip = rhs[i].is_negative();
        let mut r = vec![Rat::zero(); width];
        for (j, a) in row.iter().enumerate() {
            r[j] = if flip { -a } else { a.clone() };
        }
        r[cols + i] = Rat::from_integer(1.into());
        r[rhs_col] = if flip { -&rhs[i] } else { rhs[i].clone() };
        t.push(r);
    }
    let mut obj = vec![Rat::zero(); width];
    for r in &t {
        for j in 0..cols {
            obj[j] -= &r[j];
        }
        obj[rhs_col] -= &r[rhs_col];
    }
    t.push(obj);
    let mut basis: Vec<usize> = (cols..cols + m).collect();

    while let Some(enter) = (0..cols + m).find(|&j| t[m][j].is_negative()) {
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if !t[i][enter].is_positive() {
                continue;
            }
            let ratio = &t[i][rhs_col] / &t[i][enter];
            leave = match leave {
                None => Some(i),
                Some(k) => {
                    let best = &t[k][rhs_col] / &t[k][enter];
                    if ratio < best || (ratio == best && basis[i] < basis[k]) {
                        Some(i)
                    } else {
                        Some(k)
                    }
                }
            };
        }
        // The phase-one objective is bounded below by zero.
        let leave = leave.expect("phase-one simplex is never unbounded");
        pivot(&mut t, leave, enter);
        basis[leave] = enter;
    }

    if !t[m][rhs_col].is_zero() {
        return None;
    }
    let mut x = vec![Rat::zero(); cols];
    for (i, &b) in basis.iter().enumerate() {
        if b < cols {
            x[b] = t[i][rhs_col].clone();
        }
    }
    Some(x)
}

fn pivot(t: &mut [Vec<Rat>], row: usize, col: usize) {
    let p = t[row][col].clone();
    for v in t[row].iter_mut() {
        *v /= &p;
    }
    let pivot_row = t[row].clone();
    for (i, r) in t.iter_mut().enumerate() {
        if i == row || r[col].is_zero() {
            continue;
        }
        let f = r[col].clone();
        for (v, pv) in r.iter_mut().zip(&pivot_row) {
            if !pv.is_zero() {
                *v -= &f * pv;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, rat};

    fn check(rows: &[Vec<Rat>], rhs: &[Rat], x: &[Rat]) {
        assert!(x.iter().all(|v| !v.is_negative()));
        for (r, b) in rows.iter().zip(rhs) {
            let lhs: Rat = r.iter().zip(x).map(|(a, v)| a * v).sum();
            assert_eq!(&lhs, b);
        }
    }

    #[test]
    fn feasible_system() {
        let rows = vec![vec![int(1), int(1)], vec![int(0), int(2)]];
        let rhs = vec![int(1), rat(1, 2)];
        let x = nonneg_solution(&rows, &rhs, 2).unwrap();
        check(&rows, &rhs, &x);
        assert_eq!(x, vec![rat(3, 4), rat(1, 4)]);
    }

    #[test]
    fn infeasible_sign() {
        // x1 + x2 = -1 with x >= 0
        let rows = vec![vec![int(1), int(1)]];
        assert!(nonneg_solution(&rows, &[int(-1)], 2).is_none());
    }

    #[test]
    fn redundant_rows_and_degeneracy() {
        let rows = vec![
            vec![int(1), int(2), int(0)],
            vec![int(2), int(4), int(0)],
            vec![int(0), int(0), int(1)],
        ];
        let rhs = vec![int(2), int(4), int(0)];
        let x = nonneg_solution(&rows, &rhs, 3).unwrap();
        check(&rows, &rhs, &x);
    }

    #[test]
    fn empty_system_is_feasible() {
        assert_eq!(nonneg_solution(&[], &[], 2), Some(vec![int(0), int(0)]));
    }
}
