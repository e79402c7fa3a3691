//! Small dense exact linear algebra: incremental echelon bases and
//! square solves. Sizes here never exceed a few dozen.

use num_traits::Zero;

use crate::rational::Rational;

/// Rows kept in reduced form; each row has a distinct pivot column.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    rows: Vec<(usize, Vec<Rational>)>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, row: &mut [Rational]) {
        for (pivot, basis_row) in &self.rows {
            if row[*pivot].is_zero() {
                continue;
            }
            let f = row[*pivot].clone();
            for (x, b) in row.iter_mut().zip(basis_row) {
                if !b.is_zero() {
                    *x -= &f * b;
                }
            }
        }
    }

    /// True when `row` lies in the span of the stored rows.
    pub fn spans(&self, row: &[Rational]) -> bool {
        let mut r = row.to_vec();
        self.reduce(&mut r);
        r.iter().all(Zero::is_zero)
    }

    /// Adds `row` if it is independent of the stored rows.
    pub fn try_insert(&mut self, row: &[Rational]) -> bool {
        let mut r = row.to_vec();
        self.reduce(&mut r);
        let Some(pivot) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let p = r[pivot].clone();
        for x in r.iter_mut() {
            *x /= &p;
        }
        for (_, basis_row) in self.rows.iter_mut() {
            if basis_row[pivot].is_zero() {
                continue;
            }
            let f = basis_row[pivot].clone();
            for (x, y) in basis_row.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        self.rows.push((pivot, r));
        true
    }
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut basis = EchelonBasis::new();
    rows.iter().filter(|r| basis.try_insert(r)).count()
}

/// Solves `a x = b` for square nonsingular `a`; `None` when singular.
pub fn solve_square(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let p = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x /= &p;
        }
        b[col] /= &p;
        let pivot_row = a[col].clone();
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for (x, p) in a[r].iter_mut().zip(&pivot_row).skip(col) {
                *x -= &f * p;
            }
            let delta = &f * &b[col];
            b[r] -= delta;
        }
    }
    Some(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![
            vec![int(1), int(1), int(0)],
            vec![int(2), int(2), int(0)],
            vec![int(0), int(1), int(1)],
        ];
        assert_eq!(rank(&rows), 2);
    }

    #[test]
    fn solves_the_half_pairs_vertex() {
        // a+b = 1, a+c = 1, b+c = 1
        let a = vec![
            vec![int(1), int(1), int(0)],
            vec![int(1), int(0), int(1)],
            vec![int(0), int(1), int(1)],
        ];
        let x = solve_square(a, vec![int(1), int(1), int(1)]).unwrap();
        assert_eq!(x, vec![rat(1, 2); 3]);
    }

    #[test]
    fn singular_is_none() {
        let a = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert!(solve_square(a, vec![int(0), int(0)]).is_none());
    }

    #[test]
    fn spans_after_insert() {
        let mut b = EchelonBasis::new();
        assert!(b.try_insert(&[int(1), int(2)]));
        assert!(!b.try_insert(&[int(3), int(6)]));
        assert!(b.spans(&[int(-1), int(-2)]));
        assert!(!b.spans(&[int(0), int(1)]));
    }
}
