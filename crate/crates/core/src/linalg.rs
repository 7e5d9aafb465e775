//! Exact rank over the rationals.

#![allow(clippy::needless_range_loop)]

use num_rational::Rational64;

pub(crate) fn rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<Rational64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Rational64::from_integer(x)).collect())
        .collect();
    rank_in_place(&mut m)
}

pub(crate) fn rank_in_place(m: &mut [Vec<Rational64>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let zero = Rational64::from_integer(0);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][col] != zero) else {
            continue;
        };
        m.swap(rank, pivot);
        let p = m[rank][col];
        for r in 0..rows {
            if r != rank && m[r][col] != zero {
                let factor = m[r][col] / p;
                for c in col..cols {
                    let v = m[rank][c];
                    m[r][c] -= factor * v;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Basis of `{ x : m x = 0 }` for an `rows x cols` matrix.
pub(crate) fn nullspace(mut m: Vec<Vec<Rational64>>, cols: usize) -> Vec<Vec<Rational64>> {
    let zero = Rational64::from_integer(0);
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        let Some(p) = (r..rows).find(|&i| m[i][col] != zero) else {
            continue;
        };
        m.swap(r, p);
        let lead = m[r][col];
        for c in col..cols {
            m[r][c] /= lead;
        }
        for i in 0..rows {
            if i != r && m[i][col] != zero {
                let factor = m[i][col];
                for c in col..cols {
                    let v = m[r][c];
                    m[i][c] -= factor * v;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![zero; cols];
            v[f] = Rational64::from_integer(1);
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -m[row][f];
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&[]), 0);
        assert_eq!(rank(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 2, 1]]), 2);
        assert_eq!(rank(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]), 3);
        assert_eq!(rank(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank(&[vec![2, 4], vec![1, 2]]), 1);
    }

    #[test]
    fn nullspace_dimensions() {
        let q = |v: &[i64]| v.iter().map(|&x| Rational64::from_integer(x)).collect::<Vec<_>>();
        let m = vec![q(&[1, 1, 0]), q(&[0, 1, 1])];
        let ns = nullspace(m.clone(), 3);
        assert_eq!(ns.len(), 1);
        for row in &m {
            let dot: Rational64 = row.iter().zip(&ns[0]).map(|(a, b)| a * b).sum();
            assert_eq!(dot, Rational64::from_integer(0));
        }
        assert_eq!(nullspace(Vec::new(), 2).len(), 2);
        assert_eq!(nullspace(vec![q(&[1, 0]), q(&[0, 1])], 2).len(), 0);
    }
}
