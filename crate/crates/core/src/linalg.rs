//! Exact dense linear algebra over the rationals and the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Row-major rational matrix.
pub type QMatrix = Vec<Vec<BigRational>>;
/// Row-major integer matrix.
pub type ZMatrix = Vec<Vec<BigInt>>;

pub fn to_rational(m: &ZMatrix) -> QMatrix {
    m.iter()
        .map(|row| row.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect()
}

pub fn identity_z(n: usize) -> ZMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

pub fn identity_q(n: usize) -> QMatrix {
    to_rational(&identity_z(n))
}

fn columns(m: &[Vec<impl Sized>]) -> usize {
    m.first().map_or(0, Vec::len)
}

pub fn mat_vec_q(m: &QMatrix, v: &[BigRational]) -> Vec<BigRational> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(BigRational::zero(), |acc, (a, b)| acc + a * b))
        .collect()
}

pub fn mat_vec_z(m: &ZMatrix, v: &[BigInt]) -> Vec<BigInt> {
    m.iter()
        .map(|row| row.iter().zip(v).fold(BigInt::zero(), |acc, (a, b)| acc + a * b))
        .collect()
}

pub fn mat_mul_z(a: &ZMatrix, b: &ZMatrix) -> ZMatrix {
    let inner = columns(a);
    let cols = columns(b);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(BigInt::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

pub fn mat_mul_q(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let inner = columns(a);
    let cols = columns(b);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(BigRational::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    let cols = columns(m);
    (0..cols).map(|j| m.iter().map(|row| row[j].clone()).collect()).collect()
}

/// Reduced row echelon form and pivot columns.
pub fn rref(m: &QMatrix) -> (QMatrix, Vec<usize>) {
    let mut a = m.clone();
    let rows = a.len();
    let cols = columns(&a);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..cols {
                    let delta = &f * &a[r][j];
                    a[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank(m: &QMatrix) -> usize {
    rref(m).1.len()
}

/// A basis of `{x : m x = 0}`, one vector per free column, with a 1 in that
/// column.
pub fn nullspace(m: &QMatrix) -> Vec<Vec<BigRational>> {
    let cols = columns(m);
    let (r, pivots) = rref(m);
    let mut out = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigRational::zero(); cols];
        v[free] = BigRational::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -r[row][free].clone();
        }
        out.push(v);
    }
    out
}

/// Some solution of `m x = b` (free variables set to zero), if one exists.
pub fn solve(m: &QMatrix, b: &[BigRational]) -> Option<Vec<BigRational>> {
    let cols = columns(m);
    let augmented: QMatrix = m
        .iter()
        .zip(b)
        .map(|(row, x)| row.iter().cloned().chain(std::iter::once(x.clone())).collect())
        .collect();
    let (r, pivots) = rref(&augmented);
    if pivots.contains(&cols) {
        return None;
    }
    let mut x = vec![BigRational::zero(); cols];
    for (row, &p) in pivots.iter().enumerate() {
        x[p] = r[row][cols].clone();
    }
    Some(x)
}

pub fn inverse(m: &QMatrix) -> Option<QMatrix> {
    let n = m.len();
    if columns(m) != n {
        return None;
    }
    let augmented: QMatrix = m
        .iter()
        .zip(identity_q(n))
        .map(|(row, id)| row.iter().cloned().chain(id).collect())
        .collect();
    let (r, pivots) = rref(&augmented);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(r.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Smith normal form `P · N · Q = D` with `P`, `Q` unimodular and `D`
/// diagonal with non-negative entries, each dividing the next.
#[derive(Clone, Debug)]
pub struct Smith {
    pub p: ZMatrix,
    pub q: ZMatrix,
    /// `min(rows, cols)` diagonal entries of `D`.
    pub diagonal: Vec<BigInt>,
}

pub fn smith_normal_form(n: &ZMatrix) -> Smith {
    let rows = n.len();
    let cols = columns(n);
    let mut a = n.clone();
    let mut p = identity_z(rows);
    let mut q = identity_z(cols);

    fn add_row(m: &mut ZMatrix, target: usize, source: usize, k: &BigInt) {
        let (src, dst) = if target < source {
            let (lo, hi) = m.split_at_mut(source);
            (&hi[0], &mut lo[target])
        } else {
            let (lo, hi) = m.split_at_mut(target);
            (&lo[source], &mut hi[0])
        };
        for (d, s) in dst.iter_mut().zip(src) {
            *d += k * s;
        }
    }
    fn add_col(m: &mut ZMatrix, target: usize, source: usize, k: &BigInt) {
        for row in m.iter_mut() {
            let delta = k * &row[source];
            row[target] += delta;
        }
    }
    fn swap_cols(m: &mut ZMatrix, i: usize, j: usize) {
        for row in m.iter_mut() {
            row.swap(i, j);
        }
    }

    let mut t = 0;
    while t < rows.min(cols) {
        // Least nonzero entry of the trailing block becomes the pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[i][j].is_zero() && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        p.swap(t, bi);
        swap_cols(&mut a, t, bj);
        swap_cols(&mut q, t, bj);

        loop {
            let mut remainder = false;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let k = -a[i][t].div_floor(&a[t][t]);
                    add_row(&mut a, i, t, &k);
                    add_row(&mut p, i, t, &k);
                    remainder |= !a[i][t].is_zero();
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let k = -a[t][j].div_floor(&a[t][t]);
                    add_col(&mut a, j, t, &k);
                    add_col(&mut q, j, t, &k);
                    remainder |= !a[t][j].is_zero();
                }
            }
            if !remainder {
                break;
            }
            // Move the smallest leftover in row t or column t onto the pivot.
            let mut best = (t, t);
            for i in t + 1..rows {
                if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                    best = (i, t);
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                    best = (t, j);
                }
            }
            if best.0 != t {
                a.swap(t, best.0);
                p.swap(t, best.0);
            } else if best.1 != t {
                swap_cols(&mut a, t, best.1);
                swap_cols(&mut q, t, best.1);
            }
        }

        // The pivot must divide the rest; otherwise fold an offending row in.
        let offending = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
        if let Some(i) = offending {
            let one = BigInt::one();
            add_row(&mut a, t, i, &one);
            add_row(&mut p, t, i, &one);
            continue;
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -&*x;
            }
            for x in p[t].iter_mut() {
                *x = -&*x;
            }
        }
        t += 1;
    }
    let diagonal = (0..rows.min(cols)).map(|i| a[i][i].clone()).collect();
    Smith { p, q, diagonal }
}

/// Determinant by fraction-free elimination.
pub fn determinant_z(m: &ZMatrix) -> BigInt {
    let d = rref_det(&to_rational(m));
    d.to_integer()
}

fn rref_det(m: &QMatrix) -> BigRational {
    let mut a = m.clone();
    let n = a.len();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return BigRational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        for i in c + 1..n {
            if !a[i][c].is_zero() {
                let f = &a[i][c] / &a[c][c];
                for j in c..n {
                    let delta = &f * &a[c][j];
                    a[i][j] -= delta;
                }
            }
        }
    }
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(rows: &[&[i64]]) -> ZMatrix {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn nullspace_of_paper_sized_matrix() {
        let m = to_rational(&z(&[&[3, 1, 1, 0], &[0, 1, 0, 1]]));
        let kernel = nullspace(&m);
        assert_eq!(kernel.len(), 2);
        for v in &kernel {
            assert!(mat_vec_q(&m, v).iter().all(Zero::is_zero));
        }
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn solve_and_inverse() {
        let m = to_rational(&z(&[&[2, 1], &[1, 1]]));
        let inv = inverse(&m).unwrap();
        assert_eq!(mat_mul_q(&m, &inv), identity_q(2));
        let b = vec![BigRational::from_integer(3.into()), BigRational::from_integer(2.into())];
        let x = solve(&m, &b).unwrap();
        assert_eq!(mat_vec_q(&m, &x), b);
        let singular = to_rational(&z(&[&[1, 2], &[2, 4]]));
        assert!(inverse(&singular).is_none());
        let rhs = vec![BigRational::one(), BigRational::zero()];
        assert!(solve(&singular, &rhs).is_none());
    }

    #[test]
    fn smith_form_is_a_factorization() {
        let n = z(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = smith_normal_form(&n);
        let d = mat_mul_z(&mat_mul_z(&s.p, &n), &s.q);
        let expected: Vec<i64> = vec![2, 6, 12];
        for i in 0..3 {
            for j in 0..3 {
                let want = if i == j { BigInt::from(expected[i]) } else { BigInt::zero() };
                assert_eq!(d[i][j], want);
            }
        }
        assert_eq!(determinant_z(&s.p).abs(), BigInt::one());
        assert_eq!(determinant_z(&s.q).abs(), BigInt::one());
    }

    #[test]
    fn smith_form_of_rectangular_and_zero() {
        let s = smith_normal_form(&z(&[&[0, 0, 0], &[0, 0, 0]]));
        assert!(s.diagonal.iter().all(Zero::is_zero));
        let n = z(&[&[4, 6], &[6, 9], &[2, 3]]);
        let s = smith_normal_form(&n);
        assert_eq!(s.diagonal, vec![BigInt::one(), BigInt::zero()]);
    }
}
