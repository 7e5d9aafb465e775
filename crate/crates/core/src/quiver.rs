//! Representations of the equioriented quiver `1 -> 2 -> ... -> n`.
//!
//! Indecomposables are the interval modules, one per positive root. The
//! Euler form is the Seifert form, Hom has the closed form below and Ext^1
//! is `hom - euler` since the category is hereditary.

use num_rational::Rational64;
use serde::Serialize;

use crate::bijection::in_vector;
use crate::dbasis::{validate, DistinguishedBasis};
use crate::error::{Error, Result};
use crate::linalg;
use crate::parking::{to_diagram, ParkingDiagram, PointKind};
use crate::roots::{seifert_unchecked, Root};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct IntervalModule {
    pub root: Root,
}

impl IntervalModule {
    pub fn new(root: Root) -> Self {
        Self { root }
    }

    pub fn rank(&self) -> usize {
        self.root.rank()
    }

    pub fn dimension_vector(&self) -> Vec<usize> {
        (1..=self.rank()).map(|i| usize::from(self.root.contains(i))).collect()
    }

    /// Explicit vector spaces and identity/zero arrow maps.
    pub fn materialize(&self) -> Representation {
        let dims = self.dimension_vector();
        let maps = dims
            .windows(2)
            .map(|w| {
                let mut m = vec![vec![Rational64::from_integer(0); w[0]]; w[1]];
                if w[0] == 1 && w[1] == 1 {
                    m[0][0] = Rational64::from_integer(1);
                }
                m
            })
            .collect();
        Representation { dims, maps }
    }
}

/// A representation of the equioriented quiver given by matrices:
/// `maps[i]` is the `dims[i + 1] x dims[i]` matrix of the arrow `i+1 -> i+2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub dims: Vec<usize>,
    pub maps: Vec<Vec<Vec<Rational64>>>,
}

fn check_rank(v: &IntervalModule, w: &IntervalModule) -> Result<()> {
    if v.rank() != w.rank() {
        return Err(Error::RankMismatch { left: v.rank(), right: w.rank() });
    }
    Ok(())
}

pub fn euler(v: &IntervalModule, w: &IntervalModule) -> Result<i32> {
    check_rank(v, w)?;
    Ok(seifert_unchecked(&v.root, &w.root))
}

/// `1` iff `w.lo <= v.lo <= w.hi <= v.hi`: the image of a morphism is a
/// quotient of `v` (same start) and a submodule of `w` (same end).
pub fn hom_dim(v: &IntervalModule, w: &IntervalModule) -> Result<usize> {
    check_rank(v, w)?;
    let (a, b) = (&v.root, &w.root);
    Ok(usize::from(b.lo() <= a.lo() && a.lo() <= b.hi() && b.hi() <= a.hi()))
}

pub fn ext_dim(v: &IntervalModule, w: &IntervalModule) -> Result<usize> {
    let value = hom_dim(v, w)? as i32 - euler(v, w)?;
    assert!(value >= 0, "negative Ext dimension for {} and {}", v.root, w.root);
    Ok(value as usize)
}

/// Solution space of the intertwiner equations `phi_{i+1} V_a = W_a phi_i`.
fn hom_space(v: &Representation, w: &Representation) -> (Vec<Vec<Rational64>>, Vec<usize>) {
    // unknowns: entries of phi_i (w_i x v_i), vertex by vertex
    let mut offsets = Vec::with_capacity(v.dims.len() + 1);
    let mut total = 0;
    for (dv, dw) in v.dims.iter().zip(&w.dims) {
        offsets.push(total);
        total += dv * dw;
    }
    offsets.push(total);
    let var = |vertex: usize, row: usize, col: usize| offsets[vertex] + row * v.dims[vertex] + col;
    let zero = Rational64::from_integer(0);
    let mut equations = Vec::new();
    for i in 0..v.maps.len() {
        let (va, wa) = (&v.maps[i], &w.maps[i]);
        // entry (r, c) of phi_{i+1} * va - wa * phi_i, an w_{i+1} x v_i matrix
        for r in 0..w.dims[i + 1] {
            for c in 0..v.dims[i] {
                let mut eq = vec![zero; total];
                for m in 0..v.dims[i + 1] {
                    eq[var(i + 1, r, m)] += va[m][c];
                }
                for m in 0..w.dims[i] {
                    eq[var(i, m, c)] -= wa[r][m];
                }
                equations.push(eq);
            }
        }
    }
    (linalg::nullspace(equations, total), offsets)
}

/// Hom dimension by solving the intertwiner equations over the rationals.
pub fn hom_dim_oracle(v: &IntervalModule, w: &IntervalModule) -> Result<usize> {
    check_rank(v, w)?;
    Ok(hom_space(&v.materialize(), &w.materialize()).0.len())
}

/// Whether some morphism `v -> w` is injective, decided on the explicit
/// solution space (Hom between interval modules is at most one-dimensional).
pub fn is_mono_oracle(v: &IntervalModule, w: &IntervalModule) -> Result<bool> {
    check_rank(v, w)?;
    let (space, offsets) = hom_space(&v.materialize(), &w.materialize());
    assert!(space.len() <= 1);
    let zero = Rational64::from_integer(0);
    Ok(space.first().is_some_and(|phi| {
        v.root.support().all(|i| w.root.contains(i) && phi[offsets[i - 1]] != zero)
    }))
}

/// `v` is isomorphic to a submodule of `w`: both end at the same vertex and
/// `w` starts no later.
pub fn is_submodule(v: &IntervalModule, w: &IntervalModule) -> bool {
    v.rank() == w.rank() && v.root.hi() == w.root.hi() && w.root.lo() <= v.root.lo()
}

/// `w` is isomorphic to a quotient of `v`: both start at the same vertex and
/// `w` ends no later.
pub fn is_quotient(v: &IntervalModule, w: &IntervalModule) -> bool {
    v.rank() == w.rank() && v.root.lo() == w.root.lo() && w.root.hi() <= v.root.hi()
}

pub fn modules_of(basis: &DistinguishedBasis) -> Vec<IntervalModule> {
    basis.roots().iter().copied().map(IntervalModule::new).collect()
}

/// `Hom(E_j, E_i) = Ext^1(E_j, E_i) = 0` for all `j > i`.
pub fn is_exceptional_sequence(modules: &[IntervalModule]) -> bool {
    let n = modules.first().map_or(0, IntervalModule::rank);
    if modules.iter().any(|m| m.rank() != n) {
        return false;
    }
    for i in 0..modules.len() {
        for j in i + 1..modules.len() {
            let (ei, ej) = (&modules[i], &modules[j]);
            if hom_dim(ej, ei).unwrap() != 0 || ext_dim(ej, ei).unwrap() != 0 {
                return false;
            }
        }
    }
    true
}

/// A complete exceptional sequence, i.e. a distinguished basis seen as
/// modules.
pub fn exceptional_sequence(modules: &[IntervalModule]) -> Result<DistinguishedBasis> {
    validate(&modules.iter().map(|m| m.root).collect::<Vec<_>>())
}

/// The largest `k` with `[V]` in the span of the simples `S_k, .., S_n`.
pub fn filtration_level(v: &IntervalModule) -> usize {
    v.root.lo()
}

/// No morphism `X_i -> X_j` with `i != j` is injective.
pub fn is_nondecreasing_collection(modules: &[IntervalModule]) -> bool {
    modules.iter().enumerate().all(|(i, x)| {
        modules.iter().enumerate().all(|(j, y)| i == j || !(hom_dim(x, y).unwrap() == 1 && is_submodule(x, y)))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HomKind {
    Zero,
    Isomorphism,
    /// nonzero maps are surjective
    Epi,
    /// nonzero maps are injective
    Mono,
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomExtTable {
    pub n: usize,
    /// `hom[i][j] = dim Hom(E_{i+1}, E_{j+1})`
    pub hom: Vec<Vec<usize>>,
    pub ext: Vec<Vec<usize>>,
    pub kinds: Vec<Vec<HomKind>>,
}

pub fn hom_kind(v: &IntervalModule, w: &IntervalModule) -> Result<HomKind> {
    if hom_dim(v, w)? == 0 {
        return Ok(HomKind::Zero);
    }
    Ok(match (is_quotient(v, w), is_submodule(v, w)) {
        (true, true) => HomKind::Isomorphism,
        (true, false) => HomKind::Epi,
        (false, true) => HomKind::Mono,
        (false, false) => HomKind::Other,
    })
}

pub fn hom_ext_table(basis: &DistinguishedBasis) -> HomExtTable {
    let modules = modules_of(basis);
    let n = modules.len();
    let grid = |f: &dyn Fn(&IntervalModule, &IntervalModule) -> usize| {
        (0..n).map(|i| (0..n).map(|j| f(&modules[i], &modules[j])).collect()).collect()
    };
    HomExtTable {
        n,
        hom: grid(&|v, w| hom_dim(v, w).unwrap()),
        ext: grid(&|v, w| ext_dim(v, w).unwrap()),
        kinds: (0..n)
            .map(|i| (0..n).map(|j| hom_kind(&modules[i], &modules[j]).unwrap()).collect())
            .collect(),
    }
}

/// `to` is reached from `from` by unit north-east steps through points
/// outside the diagram or corners with labels `< below`.
fn on_clear_diagonal(d: &ParkingDiagram, from: (usize, i64), to: (usize, i64), below: usize) -> bool {
    if to.0 <= from.0 || (to.0 - from.0) as i64 != to.1 - from.1 {
        return false;
    }
    let (mut x, mut y) = from;
    loop {
        x += 1;
        y += 1;
        if (x, y) == to {
            return true;
        }
        match d.classify(x, y) {
            PointKind::Outside => {}
            PointKind::Corner(l) if l < below => {}
            _ => return false,
        }
    }
}

/// Hom and Ext^1 between `E_i` and `E_j`, `i < j`, read off the parking
/// diagram of the sequence:
///
/// 1. `Hom = 1` with surjective maps (`E_j` a quotient of `E_i`) iff `P_i`
///    and `P_j` have the same x-coordinate.
/// 2. `Hom = 1` with injective maps (`E_i` a submodule of `E_j`) iff `P_i`
///    lies on the north-east ray from `P_j` and the rays from `P_i` and
///    `P_j` stop at the same point.
/// 3. `Ext^1 = 1` iff the ray from `P_i` stops at a corner `P_k`, `k > i`,
///    with the same x-coordinate as `P_j`.
/// 4. `Hom = 0` otherwise.
pub fn read_from_diagram(d: &ParkingDiagram, i: usize, j: usize) -> (HomKind, usize) {
    assert!(i < j);
    let (pi, pj) = (d.corner(i), d.corner(j));
    let stop_i = d.shoot_ray(pi, i);
    let kind = if pi.0 == pj.0 {
        HomKind::Epi
    } else if on_clear_diagonal(d, pj, pi, j) && d.shoot_ray(pj, j) == stop_i {
        HomKind::Mono
    } else {
        HomKind::Zero
    };
    let ext = match stop_i.kind {
        PointKind::Corner(_) => usize::from(stop_i.x == pj.0),
        _ => 0,
    };
    (kind, ext)
}

/// The same reading with the submodule condition taken as "`P_i` on the
/// diagonal from `P_j`, passing only corners labelled at most `i`".
pub fn read_from_diagram_as_printed(d: &ParkingDiagram, i: usize, j: usize) -> (HomKind, usize) {
    let (pi, pj) = (d.corner(i), d.corner(j));
    let kind = if pi.0 == pj.0 {
        HomKind::Epi
    } else if on_clear_diagonal(d, pj, pi, i + 1) {
        HomKind::Mono
    } else {
        HomKind::Zero
    };
    (kind, read_from_diagram(d, i, j).1)
}

/// Pairs `(i, j)`, `i < j`, where the diagram reading disagrees with the
/// closed-form table.
pub fn diagram_reading_mismatches(basis: &DistinguishedBasis, as_printed: bool) -> Vec<(usize, usize)> {
    let table = hom_ext_table(basis);
    let d = to_diagram(&in_vector(basis));
    let mut out = Vec::new();
    for i in 1..=table.n {
        for j in i + 1..=table.n {
            let (kind, ext) = if as_printed {
                read_from_diagram_as_printed(&d, i, j)
            } else {
                read_from_diagram(&d, i, j)
            };
            if kind != table.kinds[i - 1][j - 1] || ext != table.ext[i - 1][j - 1] {
                out.push((i, j));
            }
        }
    }
    out
}
