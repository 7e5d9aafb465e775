//! Distinguished bases of positive roots and their arc diagrams.
//!
//! An ordered basis `(a_1, ..., a_n)` of `A_n` is distinguished when
//! `seifert(a_j, a_i) == 0` for every `j > i`. The root `[lo, hi]` is drawn
//! as the arc `(lo - 1, hi)` over the points `0..=n`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{BasisViolation, Result};
use crate::linalg;
use crate::roots::{seifert_unchecked, support_relation_unchecked, Root};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct DistinguishedBasis {
    roots: Vec<Root>,
}

impl DistinguishedBasis {
    pub(crate) fn new_unchecked(roots: Vec<Root>) -> Self {
        debug_assert!(validate(&roots).is_ok(), "{roots:?}");
        Self { roots }
    }

    pub fn n(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    /// `a_i` for `i` in `1..=n`.
    pub fn get(&self, i: usize) -> Root {
        self.roots[i - 1]
    }

    pub fn into_roots(self) -> Vec<Root> {
        self.roots
    }

    /// Pairs `[lo, hi]`.
    pub fn intervals(&self) -> Vec<[usize; 2]> {
        self.roots.iter().map(|r| [r.lo(), r.hi()]).collect()
    }

    pub fn from_intervals(n: usize, intervals: &[[usize; 2]]) -> Result<Self> {
        let roots = intervals
            .iter()
            .map(|&[lo, hi]| Root::new(lo, hi, n))
            .collect::<Result<Vec<_>>>()?;
        validate(&roots)
    }
}

impl fmt::Display for DistinguishedBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.roots.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Validates an ordered root sequence, reporting the first violation in
/// the order length, rank, independence, Seifert pair, arc conditions.
pub fn validate(roots: &[Root]) -> Result<DistinguishedBasis> {
    Ok(DistinguishedBasis { roots: check(roots)?.to_vec() })
}

fn check(roots: &[Root]) -> std::result::Result<&[Root], BasisViolation> {
    let n = roots.first().map_or(0, Root::rank);
    if roots.len() != n {
        return Err(BasisViolation::WrongLength { expected: n, got: roots.len() });
    }
    if let Some((index, r)) = roots.iter().enumerate().find(|(_, r)| r.rank() != n) {
        return Err(BasisViolation::RankMismatch { index: index + 1, expected: n, got: r.rank() });
    }
    let rank = linalg::rank(&roots.iter().map(Root::coefficients).collect::<Vec<_>>());
    if rank < n {
        return Err(BasisViolation::Dependent { rank, n });
    }
    for i in 0..n {
        for j in i + 1..n {
            let value = seifert_unchecked(&roots[j], &roots[i]);
            if value != 0 {
                return Err(BasisViolation::Seifert {
                    later: j + 1,
                    earlier: i + 1,
                    value,
                    relation: support_relation_unchecked(&roots[j], &roots[i]),
                });
            }
        }
    }
    let arcs: Vec<Arc> = roots.iter().map(Arc::of_root).collect();
    check_arcs(&arcs, n)?;
    Ok(roots)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Arc {
    pub left: usize,
    pub right: usize,
}

impl Arc {
    pub fn of_root(r: &Root) -> Self {
        Self { left: r.lo() - 1, right: r.hi() }
    }

    fn crosses(&self, other: &Arc) -> bool {
        (self.left < other.left && other.left < self.right && self.right < other.right)
            || (other.left < self.left && self.left < other.right && other.right < self.right)
    }
}

/// Ordered arcs over `0..=n`; label `k` is position `k` in the sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ArcDiagram {
    pub n: usize,
    pub arcs: Vec<Arc>,
}

/// Pairwise arc conditions for labels `i < j` (0-based positions).
fn check_arc_pair(arcs: &[Arc], i: usize, j: usize) -> std::result::Result<(), BasisViolation> {
    let (a, b) = (arcs[i], arcs[j]);
    if a.crosses(&b) {
        return Err(BasisViolation::ArcsIntersect { first: i + 1, second: j + 1 });
    }
    // same left end: the inner arc must carry the larger label
    if a.left == b.left && b.right >= a.right {
        return Err(BasisViolation::SameLeftEnd { outer: j + 1, inner: i + 1 });
    }
    // same right end: the inner arc must carry the smaller label
    if a.right == b.right && a.left <= b.left {
        return Err(BasisViolation::SameRightEnd { outer: i + 1, inner: j + 1 });
    }
    if b.right == a.left {
        return Err(BasisViolation::Touching { ending: j + 1, starting: i + 1 });
    }
    Ok(())
}

/// Index (1-based) of the first arc closing a cycle, if any.
pub(crate) fn first_cycle(arcs: &[Arc], n: usize) -> Option<usize> {
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (k, arc) in arcs.iter().enumerate() {
        let (a, b) = (find(&mut parent, arc.left), find(&mut parent, arc.right));
        if a == b {
            return Some(k + 1);
        }
        parent[a] = b;
    }
    None
}

fn check_arcs(arcs: &[Arc], n: usize) -> std::result::Result<(), BasisViolation> {
    for (index, arc) in arcs.iter().enumerate() {
        if arc.left >= arc.right || arc.right > n {
            return Err(BasisViolation::ArcOutOfRange {
                index: index + 1,
                left: arc.left,
                right: arc.right,
                n,
            });
        }
    }
    for j in 0..arcs.len() {
        for i in 0..j {
            check_arc_pair(arcs, i, j)?;
        }
    }
    if let Some(index) = first_cycle(arcs, n) {
        return Err(BasisViolation::Cycle { index });
    }
    Ok(())
}

pub fn to_arcs(basis: &DistinguishedBasis) -> ArcDiagram {
    ArcDiagram { n: basis.n(), arcs: basis.roots.iter().map(Arc::of_root).collect() }
}

/// Inverse of [`to_arcs`]; checks the arc conditions first.
pub fn from_arcs(diagram: &ArcDiagram) -> Result<DistinguishedBasis> {
    let n = diagram.n;
    if diagram.arcs.len() != n {
        return Err(BasisViolation::WrongLength { expected: n, got: diagram.arcs.len() }.into());
    }
    check_arcs(&diagram.arcs, n)?;
    let roots = diagram
        .arcs
        .iter()
        .map(|a| Root::new(a.left + 1, a.right, n))
        .collect::<Result<Vec<_>>>()?;
    validate(&roots)
}

/// Union of the supports of basis roots strictly below `a_i` in the
/// support order.
pub fn span(basis: &DistinguishedBasis, i: usize) -> BTreeSet<usize> {
    let a = basis.get(i);
    basis
        .roots
        .iter()
        .filter(|b| **b != a && a.lo() <= b.lo() && b.hi() <= a.hi())
        .flat_map(Root::support)
        .collect()
}

/// The single point of `supp(a_i)` not covered by [`span`].
pub fn gap(basis: &DistinguishedBasis, i: usize) -> usize {
    let covered = span(basis, i);
    let mut rest = basis.get(i).support().filter(|x| !covered.contains(x));
    let g = rest.next().expect("gap of a distinguished basis root is empty");
    assert!(rest.next().is_none(), "gap of a distinguished basis root has several points");
    g
}

/// Generators of `{ y : seifert(r, y) == 0 }` split into two mutually
/// orthogonal chains of type `A`: `(e_1, .., e_{k-1}, e_k + .. + e_{m+1},
/// e_{m+2}, .., e_n)` and `(e_{k+1}, .., e_m)` for `r = e_k + .. + e_m`.
/// Consecutive generators pair to `-1`, so each chain behaves like the
/// simple roots of a smaller `A` lattice.
pub fn right_orthogonal_basis(r: &Root) -> (Vec<Root>, Vec<Root>) {
    let (k, m, n) = (r.lo(), r.hi(), r.rank());
    let mut outer: Vec<Root> = (1..k).map(|i| simple(i, n)).collect();
    if m < n {
        outer.push(Root::new(k, m + 1, n).expect("valid root"));
        outer.extend((m + 2..=n).map(|i| simple(i, n)));
    }
    let inner = (k + 1..=m).map(|i| simple(i, n)).collect();
    (outer, inner)
}

/// Generators of `{ y : seifert(y, r) == 0 }`, the span of the roots that
/// may follow `r` in a distinguished basis: `(e_1, .., e_{k-2},
/// e_{k-1} + .. + e_m, e_{m+1}, .., e_n)` and `(e_k, .., e_{m-1})`.
pub fn left_orthogonal_basis(r: &Root) -> (Vec<Root>, Vec<Root>) {
    let (k, m, n) = (r.lo(), r.hi(), r.rank());
    let mut outer: Vec<Root> = Vec::new();
    if k >= 2 {
        outer.extend((1..k - 1).map(|i| simple(i, n)));
        outer.push(Root::new(k - 1, m, n).expect("valid root"));
    }
    outer.extend((m + 1..=n).map(|i| simple(i, n)));
    let inner = (k..m).map(|i| simple(i, n)).collect();
    (outer, inner)
}

fn simple(i: usize, n: usize) -> Root {
    Root::simple(i, n).expect("valid simple root")
}

/// Local bases of `A_p`, as `(lo, hi)` pairs in `1..=p`.
type LocalBases = Vec<Vec<(usize, usize)>>;

fn local_bases(p: usize, memo: &mut HashMap<usize, std::sync::Arc<LocalBases>>) -> std::sync::Arc<LocalBases> {
    if let Some(found) = memo.get(&p) {
        return found.clone();
    }
    let result = if p == 0 {
        vec![Vec::new()]
    } else {
        let mut out = Vec::new();
        for lo in 1..=p {
            for hi in lo..=p {
                let first = Root::new(lo, hi, p).expect("valid root");
                out.extend(bases_starting_with(&first, memo));
            }
        }
        out
    };
    let result = std::sync::Arc::new(result);
    memo.insert(p, result.clone());
    result
}

/// All distinguished bases of `A_n` whose first root is `first`.
fn bases_starting_with(
    first: &Root,
    memo: &mut HashMap<usize, std::sync::Arc<LocalBases>>,
) -> Vec<Vec<(usize, usize)>> {
    let (outer, inner) = left_orthogonal_basis(first);
    let outer_bases = local_bases(outer.len(), memo);
    let inner_bases = local_bases(inner.len(), memo);
    // a local root [i, j] is g_i + .. + g_j; chained generators are adjacent intervals
    let lift = |gens: &[Root], (i, j): (usize, usize)| (gens[i - 1].lo(), gens[j - 1].hi());
    let total = outer.len() + inner.len();
    let mut out = Vec::new();
    for ob in outer_bases.iter() {
        let ob: Vec<_> = ob.iter().map(|&x| lift(&outer, x)).collect();
        for ib in inner_bases.iter() {
            let ib: Vec<_> = ib.iter().map(|&x| lift(&inner, x)).collect();
            for_each_shuffle(total, inner.len(), |from_inner| {
                let mut seq = Vec::with_capacity(total + 1);
                seq.push((first.lo(), first.hi()));
                let (mut oi, mut ii) = (0, 0);
                for &take_inner in from_inner {
                    if take_inner {
                        seq.push(ib[ii]);
                        ii += 1;
                    } else {
                        seq.push(ob[oi]);
                        oi += 1;
                    }
                }
                out.push(seq);
            });
        }
    }
    out
}

/// Calls `f` with every boolean mask of length `len` having `ones` trues.
fn for_each_shuffle(len: usize, ones: usize, mut f: impl FnMut(&[bool])) {
    fn go(mask: &mut Vec<bool>, len: usize, ones: usize, f: &mut dyn FnMut(&[bool])) {
        if mask.len() == len {
            f(mask);
            return;
        }
        let used = mask.iter().filter(|&&b| b).count();
        let slots = len - mask.len();
        if used < ones {
            mask.push(true);
            go(mask, len, ones, f);
            mask.pop();
        }
        if slots > ones - used {
            mask.push(false);
            go(mask, len, ones, f);
            mask.pop();
        }
    }
    go(&mut Vec::with_capacity(len), len, ones, &mut f);
}

/// Every distinguished basis of positive roots of `A_n`, built by choosing
/// the first root and shuffling bases of the two chains spanning the
/// vectors allowed after it.
///
/// Output order: by first root `(lo, hi)`, then recursively. Panics if the
/// construction ever yields the same basis twice.
pub fn enumerate_recursive(n: usize) -> Vec<DistinguishedBasis> {
    if n == 0 {
        return vec![DistinguishedBasis { roots: Vec::new() }];
    }
    let mut memo = HashMap::new();
    // warm the memo for all smaller ranks so the top level can fan out
    for p in 0..n {
        local_bases(p, &mut memo);
    }
    let firsts: Vec<Root> = crate::roots::positive_roots(n);
    let per_first: Vec<Vec<Vec<(usize, usize)>>> = firsts
        .par_iter()
        .map(|r| bases_starting_with(r, &mut memo.clone()))
        .collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for seq in per_first.into_iter().flatten() {
        assert!(seen.insert(seq.clone()), "duplicate basis {seq:?}");
        let roots = seq
            .into_iter()
            .map(|(lo, hi)| Root::new(lo, hi, n).expect("valid root"))
            .collect();
        out.push(DistinguishedBasis { roots });
    }
    out
}
