//! The initial-vector map from distinguished bases to parking functions
//! and three ways of inverting it.

use crate::dbasis::DistinguishedBasis;
use crate::error::{Error, Result};
use crate::parking::{to_diagram, ParkingFunction};
use crate::roots::Root;

/// `(a_1.lo, ..., a_n.lo)`.
pub fn in_vector(basis: &DistinguishedBasis) -> ParkingFunction {
    let values = basis.roots().iter().map(Root::lo).collect();
    ParkingFunction::new_unchecked(values)
}

/// Builds the unique basis with initial vector `f`.
///
/// Indices are processed by decreasing `f(k)`, ties by decreasing `k`.
/// For each `k`, `C` is covered by the roots already built with larger
/// index and `B` by those with smaller index; the root starts at `f(k)`,
/// runs through the block of `C` starting there, skips one point and then
/// runs through the block of `B` after it.
pub fn reconstruct(f: &ParkingFunction) -> DistinguishedBasis {
    let n = f.n();
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by_key(|&k| (std::cmp::Reverse(f.get(k)), std::cmp::Reverse(k)));

    let mut built: Vec<Option<Root>> = vec![None; n + 1];
    // covered_by[x] lists the indices of built roots containing x
    let mut covered_by: Vec<Vec<usize>> = vec![Vec::new(); n + 2];
    for k in order {
        let start = f.get(k);
        let in_c = |x: usize| covered_by[x].iter().any(|&l| l > k);
        let in_b = |x: usize| covered_by[x].iter().any(|&l| l < k);
        let mut c = start - 1;
        while c < n && in_c(c + 1) {
            c += 1;
        }
        let mut b = c + 1;
        while b < n && in_b(b + 1) {
            b += 1;
        }
        let root = Root::new(start, b, n).expect("reconstructed root stays in range");
        for x in root.support() {
            covered_by[x].push(k);
        }
        built[k] = Some(root);
    }
    let roots = built.into_iter().skip(1).map(|r| r.expect("every index is built")).collect();
    DistinguishedBasis::new_unchecked(roots)
}

/// Same result as [`reconstruct`], read off the diagram of `f`: the root
/// with label `k` ends at the x-coordinate where the north-east ray from
/// `P_k` first meets a corner with a larger label, the Dyck path or the
/// x-axis.
pub fn reconstruct_geometric(f: &ParkingFunction) -> DistinguishedBasis {
    let n = f.n();
    let diagram = to_diagram(f);
    let roots = (1..=n)
        .map(|k| {
            let stop = diagram.shoot_ray(diagram.corner(k), k);
            Root::new(f.get(k), stop.x, n).expect("ray stops inside the strip")
        })
        .collect();
    DistinguishedBasis::new_unchecked(roots)
}

/// For a permutation `s`, `a_k` runs from `s(k)` to the end of the block
/// of `{s(1), ..., s(k)}` containing it.
pub fn reconstruct_permutation(s: &[usize]) -> Result<DistinguishedBasis> {
    let n = s.len();
    let mut seen = vec![false; n + 2];
    for &v in s {
        if v == 0 || v > n || seen[v] {
            return Err(Error::NotPermutation { n });
        }
        seen[v] = true;
    }
    let mut placed = vec![false; n + 2];
    let mut roots = Vec::with_capacity(n);
    for &start in s {
        placed[start] = true;
        let mut end = start;
        while placed[end + 1] {
            end += 1;
        }
        roots.push(Root::new(start, end, n)?);
    }
    Ok(DistinguishedBasis::new_unchecked(roots))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dbasis::validate;

    fn pf(v: &[usize]) -> ParkingFunction {
        ParkingFunction::new(v.to_vec()).unwrap()
    }

    fn iv(b: &DistinguishedBasis) -> Vec<(usize, usize)> {
        b.roots().iter().map(|r| (r.lo(), r.hi())).collect()
    }

    #[test]
    fn small_examples() {
        for (f, want) in [
            (vec![2, 2, 1], vec![(2, 3), (2, 2), (1, 3)]),
            (vec![2, 1, 1], vec![(2, 2), (1, 3), (1, 2)]),
            (vec![1, 1, 2, 2, 2, 4, 6], vec![(1, 7), (1, 1), (2, 5), (2, 3), (2, 2), (4, 4), (6, 6)]),
            (vec![1, 2, 3, 4], vec![(1, 1), (2, 2), (3, 3), (4, 4)]),
        ] {
            let f = pf(&f);
            assert_eq!(iv(&reconstruct(&f)), want, "{f}");
            assert_eq!(iv(&reconstruct_geometric(&f)), want, "{f}");
            assert_eq!(in_vector(&reconstruct(&f)), f);
        }
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(iv(&reconstruct_permutation(&[2, 1]).unwrap()), vec![(2, 2), (1, 2)]);
        assert_eq!(iv(&reconstruct_permutation(&[3, 1, 2]).unwrap()), vec![(3, 3), (1, 1), (2, 3)]);
        assert!(reconstruct_permutation(&[1, 1]).is_err());
        assert!(reconstruct_permutation(&[0, 1]).is_err());
    }

    #[test]
    fn twelve_root_example() {
        let f = pf(&[3, 11, 7, 5, 9, 8, 5, 2, 1, 10, 2, 12]);
        let want = vec![
            (3, 3), (11, 11), (7, 7), (5, 7), (9, 9), (8, 9),
            (5, 5), (2, 9), (1, 9), (10, 11), (2, 3), (12, 12),
        ];
        assert_eq!(iv(&reconstruct(&f)), want);
        assert_eq!(iv(&reconstruct_geometric(&f)), want);
        let b = validate(&reconstruct(&f).into_roots()).unwrap();
        assert_eq!(in_vector(&b), f);
    }
}
