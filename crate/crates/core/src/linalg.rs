//! Exact linear algebra by fraction-free (Bareiss) elimination.
//!
//! Rational rows are scaled to integer rows before elimination; every
//! intermediate division is exact. Pivots are chosen as the first nonzero
//! entry in row order so results are deterministic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::poly::Rational;

pub type Matrix = Vec<Vec<Rational>>;

/// Integer row-echelon form produced by Bareiss elimination.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn integer_row(row: &[Rational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    row.iter().map(|c| c.numer() * (&l / c.denom())).collect()
}

pub fn bareiss(mut m: Vec<Vec<BigInt>>) -> Echelon {
    let nrows = m.len();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let pivot = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[c]);
            for j in c + 1..ncols {
                let v = &pivot * &row[j] - &lead * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    Echelon { rows: m, pivots }
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    bareiss(rows.iter().map(|r| integer_row(r)).collect()).rank()
}

pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    bareiss(
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect(),
    )
    .rank()
}

/// Solves `a * x = b` where `a` has one row per equation. Returns one
/// solution (free variables set to zero) or `None` when inconsistent.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(a.len(), b.len(), "row count mismatch");
    let ncols = a.first().map_or(0, Vec::len);
    let augmented: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            integer_row(&r)
        })
        .collect();
    let ech = bareiss(augmented);
    if ech.pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (r, &pc) in ech.pivots.iter().enumerate().rev() {
        let row = &ech.rows[r];
        let mut acc = Rational::from_integer(row[ncols].clone());
        for j in pc + 1..ncols {
            if !row[j].is_zero() {
                acc -= Rational::from_integer(row[j].clone()) * &x[j];
            }
        }
        x[pc] = acc / Rational::from_integer(row[pc].clone());
    }
    Some(x)
}

pub fn identity(n: usize) -> Matrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(Rational::zero(), |acc, k| acc + &row[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

pub fn trace(a: &Matrix) -> Rational {
    a.iter()
        .enumerate()
        .fold(Rational::zero(), |acc, (i, row)| acc + &row[i])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{frac, int};

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter()
            .map(|r| r.iter().map(|&v| int(v)).collect())
            .collect()
    }

    #[test]
    fn rank_of_singular_matrix() {
        assert_eq!(rank(&m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]])), 2);
        assert_eq!(rank(&m(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank_i64(&[vec![0, 1, 0], vec![0, 0, 1], vec![0, 1, 1]]), 2);
    }

    #[test]
    fn bareiss_last_pivot_is_determinant() {
        let e = bareiss(vec![
            vec![2.into(), 1.into(), 0.into()],
            vec![1.into(), 3.into(), 1.into()],
            vec![0.into(), 1.into(), 4.into()],
        ]);
        assert_eq!(e.rows[2][2], BigInt::from(18));
    }

    #[test]
    fn solve_with_fractions() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let x = solve(&a, &[int(1), int(2)]).unwrap();
        assert_eq!(x, vec![frac(1, 5), frac(3, 5)]);
        assert!(solve(&m(&[&[1, 1], &[1, 1]]), &[int(1), int(2)]).is_none());
    }

    #[test]
    fn overdetermined_consistent_system() {
        let a = m(&[&[1, 0], &[0, 1], &[1, 1]]);
        let x = solve(&a, &[int(2), int(3), int(5)]).unwrap();
        assert_eq!(x, vec![int(2), int(3)]);
    }
}
