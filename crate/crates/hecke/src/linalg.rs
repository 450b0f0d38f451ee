//! Dense exact linear algebra on row vectors.

use crate::scalar::{Field, Scalar};

pub type Matrix = Vec<Vec<Scalar>>;

pub fn identity(field: &Field, n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { field.one() } else { field.zero() })
                .collect()
        })
        .collect()
}

/// `v · m`.
pub fn vec_mul(field: &Field, v: &[Scalar], m: &Matrix) -> Vec<Scalar> {
    let cols = m.first().map_or(0, Vec::len);
    let mut out = vec![field.zero(); cols];
    for (x, row) in v.iter().zip(m) {
        if x.is_zero() {
            continue;
        }
        for (o, y) in out.iter_mut().zip(row) {
            if !y.is_zero() {
                *o = &*o + &(x * y);
            }
        }
    }
    out
}

pub fn mat_mul(field: &Field, a: &Matrix, b: &Matrix) -> Matrix {
    a.iter().map(|row| vec_mul(field, row, b)).collect()
}

pub fn mat_add(a: &Matrix, b: &Matrix) -> Matrix {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.iter().zip(y).map(|(p, q)| p + q).collect())
        .collect()
}

pub fn mat_scale(a: &Matrix, c: &Scalar) -> Matrix {
    a.iter()
        .map(|row| row.iter().map(|x| x * c).collect())
        .collect()
}

pub fn trace(field: &Field, a: &Matrix) -> Scalar {
    a.iter()
        .enumerate()
        .fold(field.zero(), |acc, (i, row)| &acc + &row[i])
}

pub fn is_zero(a: &Matrix) -> bool {
    a.iter().all(|row| row.iter().all(Scalar::is_zero))
}

/// Row-reduces `a` in place and returns the pivot columns.
fn reduce(a: &mut Matrix, aug: Option<&mut Matrix>) -> Vec<usize> {
    let mut aug = aug;
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        if let Some(b) = aug.as_deref_mut() {
            b.swap(r, p);
        }
        let inv = a[r][c].inv();
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        if let Some(b) = aug.as_deref_mut() {
            for x in b[r].iter_mut() {
                *x = &*x * &inv;
            }
        }
        for i in 0..rows {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in 0..cols {
                if !a[r][j].is_zero() {
                    let d = &a[r][j] * &f;
                    a[i][j] = &a[i][j] - &d;
                }
            }
            if let Some(b) = aug.as_deref_mut() {
                for j in 0..b[r].len() {
                    if !b[r][j].is_zero() {
                        let d = &b[r][j] * &f;
                        b[i][j] = &b[i][j] - &d;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    pivots
}

pub fn rank(a: &Matrix) -> usize {
    reduce(&mut a.clone(), None).len()
}

/// Gauss–Jordan inverse, `None` when singular.
pub fn inverse(field: &Field, a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let mut work = a.clone();
    let mut inv = identity(field, n);
    (reduce(&mut work, Some(&mut inv)).len() == n).then_some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(field: &Field, rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&x| field.from_i64(x)).collect())
            .collect()
    }

    #[test]
    fn inverse_round_trip() {
        let f = Field::Rational;
        let a = m(&f, &[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = inverse(&f, &a).unwrap();
        assert_eq!(mat_mul(&f, &a, &inv), identity(&f, 3));
        let p = Field::Prime(5);
        let b = m(&p, &[&[1, 2], &[3, 4]]);
        let inv = inverse(&p, &b).unwrap();
        assert_eq!(mat_mul(&p, &inv, &b), identity(&p, 2));
    }

    #[test]
    fn rank_and_singular() {
        let f = Field::Rational;
        let a = m(&f, &[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank(&a), 2);
        assert!(inverse(&f, &a).is_none());
        assert_eq!(trace(&f, &a), f.from_i64(6));
    }
}
