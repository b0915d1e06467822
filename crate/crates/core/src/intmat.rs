//! Small dense integer matrices: fraction-free determinant, rank and adjugate.
//!
//! All arithmetic is checked `i128`; an overflow panics because it signals
//! inputs far outside the sizes this crate is meant for.

use num_integer::Integer;

pub type IntMatrix = Vec<Vec<i64>>;

fn to_wide(m: &[Vec<i64>]) -> Vec<Vec<i128>> {
    m.iter()
        .map(|r| r.iter().map(|&v| i128::from(v)).collect())
        .collect()
}

fn mul(a: i128, b: i128) -> i128 {
    a.checked_mul(b)
        .expect("integer overflow in matrix arithmetic")
}

fn sub(a: i128, b: i128) -> i128 {
    a.checked_sub(b)
        .expect("integer overflow in matrix arithmetic")
}

/// Bareiss elimination; returns the determinant of a square matrix.
pub fn determinant(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a = to_wide(m);
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = sub(mul(a[i][j], a[k][k]), mul(a[i][k], a[k][j])) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Rank over the rationals.
pub fn rank(m: &[Vec<i64>]) -> usize {
    let mut a = to_wide(m);
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, pivot);
        for i in r + 1..rows {
            if a[i][c] != 0 {
                let (x, y) = (a[r][c], a[i][c]);
                let g = x.gcd(&y);
                let (fx, fy) = (x / g, y / g);
                for j in c..cols {
                    a[i][j] = sub(mul(a[i][j], fx), mul(a[r][j], fy));
                }
                let row_gcd = a[i].iter().fold(0i128, |acc, v| acc.gcd(v));
                if row_gcd > 1 {
                    a[i].iter_mut().for_each(|v| *v /= row_gcd);
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

fn minor(m: &[Vec<i64>], skip_row: usize, skip_col: usize) -> Vec<Vec<i64>> {
    m.iter()
        .enumerate()
        .filter(|&(i, _)| i != skip_row)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|&(j, _)| j != skip_col)
                .map(|(_, &v)| v)
                .collect()
        })
        .collect()
}

/// Classical adjoint: `adj[i][j] = (-1)^(i+j) det(M without row j, col i)`.
pub fn adjugate(m: &[Vec<i64>]) -> Vec<Vec<i128>> {
    let n = m.len();
    if n == 1 {
        return vec![vec![1]];
    }
    let mut adj = vec![vec![0i128; n]; n];
    for (i, adj_row) in adj.iter_mut().enumerate() {
        for (j, entry) in adj_row.iter_mut().enumerate() {
            let d = determinant(&minor(m, j, i));
            *entry = if (i + j) % 2 == 0 { d } else { -d };
        }
    }
    adj
}

pub fn mat_vec(m: &[Vec<i64>], v: &[i64]) -> Vec<i128> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .map(|(&a, &b)| mul(i128::from(a), i128::from(b)))
                .sum()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    // cofactor expansion along the first row; independent of Bareiss
    fn det_expand(m: &[Vec<i64>]) -> i128 {
        if m.is_empty() {
            return 1;
        }
        (0..m.len())
            .map(|j| {
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * i128::from(m[0][j]) * det_expand(&minor(m, 0, j))
            })
            .sum()
    }

    #[test]
    fn determinant_agrees_with_expansion() {
        let ms = vec![
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
            vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 9]],
            vec![
                vec![-4, 1, 0, 1],
                vec![2, -3, 1, 0],
                vec![3, 1, -2, 0],
                vec![1, 3, 0, -2],
            ],
            vec![vec![1, 2], vec![2, 4]],
        ];
        for m in ms {
            assert_eq!(determinant(&m), det_expand(&m), "{m:?}");
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(
            rank(&[
                vec![-4, 1, 0, 1],
                vec![2, -3, 1, 0],
                vec![3, 1, -2, 0],
                vec![1, 3, 0, -2]
            ]),
            3
        );
        assert_eq!(rank(&[vec![1, 0, 0], vec![0, 1, 0]]), 2);
    }

    #[test]
    fn adjugate_identity() {
        let m = vec![vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]];
        let adj = adjugate(&m);
        let det = determinant(&m);
        for i in 0..3 {
            for j in 0..3 {
                let v: i128 = (0..3).map(|k| i128::from(m[i][k]) * adj[k][j]).sum();
                assert_eq!(v, if i == j { det } else { 0 });
            }
        }
    }
}
