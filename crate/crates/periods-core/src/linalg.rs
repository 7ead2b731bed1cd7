//! Small dense linear algebra: exact rank over ℚ and complex determinants.

// in-place elimination reads one row while updating another; indexing is
// the clear way to write that
#![allow(clippy::needless_range_loop)]

use crate::num::{Complex, Rational, Real};

/// Exact rank of a rational matrix (rows of equal length) by fraction-free
/// Gaussian elimination.
pub fn rational_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..ncols {
        // find pivot
        let Some(p) = (row..nrows).find(|&r| m[r][col] != 0u32) else {
            continue;
        };
        m.swap(row, p);
        let pivot = m[row][col].clone();
        for r in (row + 1)..nrows {
            if m[r][col] == 0u32 {
                continue;
            }
            let factor = Rational::from(&m[r][col] / &pivot);
            for c in col..ncols {
                let t = Rational::from(&factor * &m[row][c]);
                m[r][c] -= t;
            }
        }
        rank += 1;
        row += 1;
        if row == nrows {
            break;
        }
    }
    rank
}

/// Solve the membership question: is `target` in the column span of `cols`?
/// Decided exactly by comparing ranks.
pub fn in_column_span(cols: &[Vec<Rational>], target: &[Rational]) -> bool {
    if cols.is_empty() {
        return target.iter().all(|t| *t == 0u32);
    }
    let n = cols[0].len();
    let as_rows = |with_target: bool| -> Vec<Vec<Rational>> {
        (0..n)
            .map(|i| {
                let mut row: Vec<Rational> = cols.iter().map(|c| c[i].clone()).collect();
                if with_target {
                    row.push(target[i].clone());
                }
                row
            })
            .collect()
    };
    rational_rank(&as_rows(false)) == rational_rank(&as_rows(true))
}

/// Exact determinant of a square rational matrix.
pub fn rational_det(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let mut det = Rational::from(1);
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| m[r][col] != 0u32) else {
            return Rational::new();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for r in (col + 1)..n {
            if m[r][col] == 0u32 {
                continue;
            }
            let factor = Rational::from(&m[r][col] / &pivot);
            for c in col..n {
                let t = Rational::from(&factor * &m[col][c]);
                m[r][c] -= t;
            }
        }
    }
    det
}

/// Determinant of a square complex matrix by Gaussian elimination with
/// partial pivoting.
pub fn complex_det(mat: &[Vec<Complex>]) -> Complex {
    let n = mat.len();
    if n == 0 {
        return num_traits::One::one();
    }
    let bits = mat
        .iter()
        .flat_map(|r| r.iter().map(|c| c.prec()))
        .max()
        .unwrap();
    let mut m: Vec<Vec<Complex>> = mat.to_vec();
    let mut det = Complex::with_val(bits, 1);
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&a, &b| {
                m[a][col]
                    .abs()
                    .partial_cmp(&m[b][col].abs())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .unwrap();
        if m[pivot_row][col].is_zero() {
            return Complex::new(bits);
        }
        if pivot_row != col {
            m.swap(pivot_row, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det = &det * &pivot;
        for r in (col + 1)..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pivot;
            for c in col..n {
                let t = &factor * &m[col][c];
                m[r][c] = &m[r][c] - &t;
            }
        }
    }
    det
}

/// Largest entry magnitude, for scale-aware comparisons.
pub fn max_abs(mat: &[Vec<Complex>]) -> Real {
    let bits = mat
        .iter()
        .flat_map(|r| r.iter().map(|c| c.prec()))
        .max()
        .unwrap_or(64);
    let mut best = Real::new(bits);
    for row in mat {
        for e in row {
            let a = e.abs();
            if a > best {
                best = a;
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from(n)
    }

    #[test]
    fn rank_and_span() {
        let rows = vec![
            vec![q(1), q(2), q(3)],
            vec![q(2), q(4), q(6)],
            vec![q(0), q(1), q(1)],
        ];
        assert_eq!(rational_rank(&rows), 2);
        let cols = vec![vec![q(1), q(0)], vec![q(0), q(1)]];
        assert!(in_column_span(&cols, &[q(3), q(-2)]));
        let cols2 = vec![vec![q(1), q(1)]];
        assert!(!in_column_span(&cols2, &[q(1), q(2)]));
    }

    #[test]
    fn det_of_known_matrix() {
        let c = |re: f64, im: f64| Complex {
            re: Real::with_val(96, re),
            im: Real::with_val(96, im),
        };
        // det [[0,1],[i,0]] = -i
        let m = vec![
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(0.0, 1.0), c(0.0, 0.0)],
        ];
        let d = complex_det(&m);
        assert!((d.re.to_f64()).abs() < 1e-25);
        assert!((d.im.to_f64() + 1.0).abs() < 1e-25);
    }
}
