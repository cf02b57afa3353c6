//! Small exact linear algebra over the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn to_q(v: &[BigInt]) -> Vec<Q> {
    v.iter().cloned().map(Q::from_integer).collect()
}

/// Reduced row echelon form. Returns the nonzero rows and the pivot column
/// of each.
pub fn rref(mut rows: Vec<Vec<Q>>) -> (Vec<Vec<Q>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank(rows: Vec<Vec<Q>>) -> usize {
    rref(rows).1.len()
}

/// Basis of `{x : rows · x = 0}`. Each basis vector is `1` at its own free
/// column and `0` at every other free column; the free columns are returned
/// alongside.
pub fn null_space(rows: Vec<Vec<Q>>, ncols: usize) -> (Vec<Vec<Q>>, Vec<usize>) {
    let (reduced, pivots) = rref(rows);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..ncols).filter(|&c| !is_pivot[c]).collect();
    let basis = free
        .iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); ncols];
            v[f] = Q::one();
            for (row, &p) in reduced.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect();
    (basis, free)
}

/// Solves `a x = b` for square nonsingular `a`.
pub fn solve(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = a.len();
    let rows: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let (reduced, pivots) = rref(rows);
    if pivots.len() != n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(reduced.into_iter().map(|r| r[n].clone()).collect())
}

/// Scales a rational vector to the primitive integer vector with the same
/// direction (gcd one). The zero vector maps to zeros.
pub fn primitive(v: &[Q]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    primitive_int(ints)
}

pub fn primitive_int(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
    v
}

/// Primitive form with the first nonzero entry positive.
pub fn normalize_sign(v: Vec<BigInt>) -> Vec<BigInt> {
    let v = primitive_int(v);
    match v.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => v.into_iter().map(|x| -x).collect(),
        _ => v,
    }
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_q(a: &[Q], b: &[Q]) -> Q {
    a.iter().zip(b).fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

/// `Some(c)` with `a = c · b`, `c > 0`, if the two vectors are positively
/// parallel. Both vectors must be nonzero.
pub fn positive_ratio(a: &[Q], b: &[Q]) -> Option<Q> {
    let k = b.iter().position(|x| !x.is_zero())?;
    let c = &a[k] / &b[k];
    if !c.is_positive() {
        return None;
    }
    a.iter().zip(b).all(|(x, y)| *x == &c * y).then_some(c)
}

pub fn to_i64(v: &BigInt) -> Option<i64> {
    v.to_i64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qs(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn null_space_is_annihilated() {
        let rows = vec![qs(&[1, 1, 0, -1]), qs(&[0, 1, 1, 0]), qs(&[1, 2, 1, -1])];
        let (basis, free) = null_space(rows.clone(), 4);
        assert_eq!(basis.len(), 2);
        assert_eq!(free, vec![2, 3]);
        for b in &basis {
            for r in &rows {
                assert!(dot_q(r, b).is_zero());
            }
        }
    }

    #[test]
    fn primitive_and_sign() {
        let v = vec![Q::new(BigInt::from(-2), BigInt::from(3)), q(4), q(0)];
        assert_eq!(
            normalize_sign(primitive(&v)),
            vec![BigInt::from(1), BigInt::from(-6), BigInt::from(0)]
        );
    }

    #[test]
    fn solve_small_system() {
        let a = vec![qs(&[2, 1]), qs(&[1, 3])];
        let x = solve(&a, &qs(&[5, 10])).unwrap();
        assert_eq!(x, qs(&[1, 3]));
        assert!(solve(&[qs(&[1, 1]), qs(&[2, 2])], &qs(&[0, 0])).is_none());
    }

    #[test]
    fn ratio() {
        assert_eq!(positive_ratio(&qs(&[2, 4, 0]), &qs(&[1, 2, 0])), Some(q(2)));
        assert_eq!(positive_ratio(&qs(&[-2, -4, 0]), &qs(&[1, 2, 0])), None);
        assert_eq!(positive_ratio(&qs(&[2, 5, 0]), &qs(&[1, 2, 0])), None);
    }
}
