//! Exact linear algebra over arbitrary-precision integers and rationals.
//!
//! Small symmetric integer matrices (intersection forms of plumbing trees) are
//! the only inputs, so the implementations favour clarity over asymptotics:
//! rational symmetric diagonalization for inertia, fraction-free Bareiss for
//! determinants, Gaussian elimination for solving, and an elementary Smith-style
//! diagonalization for cokernel enumeration.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number used throughout the crate.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational n/d (d must be nonzero).
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Signature data of a symmetric bilinear form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// Inertia (numbers of positive, negative, and zero eigenvalues) of a symmetric
/// integer matrix, computed by exact congruence diagonalization.
pub fn inertia(q: &[Vec<i64>]) -> Inertia {
    let n = q.len();
    let mut m: Vec<Vec<Rat>> = q
        .iter()
        .map(|row| row.iter().map(|&x| rat_int(x)).collect())
        .collect();
    let mut out = Inertia { positive: 0, negative: 0, zero: 0 };
    let mut k = 0;
    while k < n {
        // Find a nonzero diagonal pivot at or below k.
        let pivot = (k..n).find(|&j| !m[j][j].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                // All remaining diagonal entries vanish; a nonzero off-diagonal
                // entry can be pulled onto the diagonal by a congruence
                // (row a += row b, col a += col b), otherwise the rest is zero.
                let mut found = None;
                'search: for a in k..n {
                    for b in (a + 1)..n {
                        if !m[a][b].is_zero() {
                            found = Some((a, b));
                            break 'search;
                        }
                    }
                }
                match found {
                    Some((a, b)) => {
                        for j in 0..n {
                            let t = m[b][j].clone();
                            m[a][j] += t;
                        }
                        for row in m.iter_mut() {
                            let t = row[b].clone();
                            row[a] += t;
                        }
                        continue;
                    }
                    None => {
                        out.zero += n - k;
                        break;
                    }
                }
            }
        };
        if p != k {
            m.swap(p, k);
            for row in m.iter_mut() {
                row.swap(p, k);
            }
        }
        let d = m[k][k].clone();
        if d.is_positive() {
            out.positive += 1;
        } else {
            out.negative += 1;
        }
        // Symmetric elimination of row and column k below/right of the pivot.
        for j in (k + 1)..n {
            let f = &m[j][k] / &d;
            if !f.is_zero() {
                for c in 0..n {
                    let t = &f * &m[k][c];
                    m[j][c] -= t;
                }
            }
        }
        for j in (k + 1)..n {
            let f = &m[k][j] / &d;
            if !f.is_zero() {
                for r in 0..n {
                    let t = &f * &m[r][k];
                    m[r][j] -= t;
                }
            }
        }
        k += 1;
    }
    out
}

/// Exact determinant of an integer matrix (fraction-free Bareiss algorithm).
pub fn determinant(q: &[Vec<i64>]) -> BigInt {
    let n = q.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = q
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Leading principal minors det(q[..k][..k]) for k = 1..=n.
pub fn leading_minors(q: &[Vec<i64>]) -> Vec<BigInt> {
    (1..=q.len())
        .map(|k| {
            let sub: Vec<Vec<i64>> = q[..k].iter().map(|row| row[..k].to_vec()).collect();
            determinant(&sub)
        })
        .collect()
}

/// Solve q·x = rhs exactly. Returns `None` when q is singular.
pub fn solve(q: &[Vec<i64>], rhs: &[Rat]) -> Option<Vec<Rat>> {
    let n = q.len();
    let mut m: Vec<Vec<Rat>> = (0..n)
        .map(|i| {
            let mut row: Vec<Rat> = q[i].iter().map(|&x| rat_int(x)).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        let d = m[c][c].clone();
        for x in m[c].iter_mut() {
            *x /= d.clone();
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..=n {
                    let t = &f * &m[c][j];
                    m[i][j] -= t;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

/// Exact inverse of an integer matrix. Returns `None` when singular.
pub fn inverse(q: &[Vec<i64>]) -> Option<Vec<Vec<Rat>>> {
    let n = q.len();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let rhs: Vec<Rat> = (0..n).map(|i| if i == j { rat_int(1) } else { rat_int(0) }).collect();
        cols.push(solve(q, &rhs)?);
    }
    Some((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect())
}

/// Diagonalization of an integer matrix over the integers for cokernel
/// enumeration: returns diagonal entries `d` and an integer matrix `uinv` such
/// that the classes of `uinv · c`, for `c` ranging over `∏ ℤ/|dᵢ|`, enumerate
/// `ℤⁿ/(q·ℤⁿ)` without repetition.
pub fn coker_diagonalize(q: &[Vec<i64>]) -> (Vec<BigInt>, Vec<Vec<BigInt>>) {
    let n = q.len();
    let mut a: Vec<Vec<BigInt>> = q
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    // uinv accumulates the inverses of the row operations applied to `a`,
    // so that original = uinv · current (up to column operations on `a`,
    // which do not affect the cokernel parametrization).
    let mut uinv: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();

    let swap_rows = |a: &mut Vec<Vec<BigInt>>, uinv: &mut Vec<Vec<BigInt>>, i: usize, j: usize| {
        a.swap(i, j);
        for row in uinv.iter_mut() {
            row.swap(i, j);
        }
    };
    // row_j += f * row_i  on `a`; compensate on uinv: col_i -= f * col_j.
    let add_row = |a: &mut Vec<Vec<BigInt>>, uinv: &mut Vec<Vec<BigInt>>, j: usize, i: usize, f: &BigInt| {
        for c in 0..a.len() {
            let t = f * &a[i][c];
            a[j][c] += t;
        }
        for row in uinv.iter_mut() {
            let t = f * &row[j];
            row[i] -= t;
        }
    };

    for t in 0..n {
        loop {
            // Find the entry of minimal nonzero absolute value in the
            // remaining block and move it to (t, t).
            let mut best: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if !a[i][j].is_zero()
                        && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let (bi, bj) = match best {
                Some(b) => b,
                None => break,
            };
            if bi != t {
                swap_rows(&mut a, &mut uinv, bi, t);
            }
            if bj != t {
                for row in a.iter_mut() {
                    row.swap(bj, t);
                }
            }
            let mut dirty = false;
            for i in t + 1..n {
                if !a[i][t].is_zero() {
                    let f = -(&a[i][t] / &a[t][t]);
                    add_row(&mut a, &mut uinv, i, t, &f);
                    if !a[i][t].is_zero() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..n {
                if !a[t][j].is_zero() {
                    let f = -(&a[t][j] / &a[t][t]);
                    for row in a.iter_mut() {
                        let t2 = &f * &row[t];
                        row[j] += t2;
                    }
                    if !a[t][j].is_zero() {
                        dirty = true;
                    }
                }
            }
            if !dirty {
                break;
            }
        }
    }
    let d = (0..n).map(|i| a[i][i].clone()).collect();
    (d, uinv)
}
