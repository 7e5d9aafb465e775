//! Braid group action by left and right mutations on distinguished bases,
//! transported to parking functions and their diagrams.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::bijection::{in_vector, reconstruct};
use crate::dbasis::DistinguishedBasis;
use crate::error::{Error, Result};
use crate::parking::{
    enumerate_parking, to_diagram, DiagramRow, ParkingDiagram, ParkingFunction, PointKind,
};
use crate::roots::{seifert_unchecked, Root, SignedRoot};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// `alpha_k`
    Left,
    /// `beta_k`, the inverse of `alpha_k`
    Right,
}

impl Direction {
    pub fn inverse(self) -> Self {
        match self {
            Self::Left => Self::Right,
            Self::Right => Self::Left,
        }
    }
}

/// Signed generator indices: `+k` is `alpha_k`, `-k` is `beta_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct BraidWord {
    letters: Vec<i64>,
}

impl BraidWord {
    pub fn new(letters: Vec<i64>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::BadLetter("0".into()));
        }
        Ok(Self { letters })
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn generators(&self) -> impl Iterator<Item = (usize, Direction)> + '_ {
        self.letters.iter().map(|&l| {
            let dir = if l > 0 { Direction::Left } else { Direction::Right };
            (l.unsigned_abs() as usize, dir)
        })
    }

    /// Checks that every generator acts on rank `n`.
    pub fn check_rank(&self, n: usize) -> Result<()> {
        for (k, _) in self.generators() {
            check_generator(k, n)?;
        }
        Ok(())
    }

    pub fn inverse(&self) -> Self {
        Self { letters: self.letters.iter().rev().map(|l| -l).collect() }
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i64>().map_err(|_| Error::BadLetter(t.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

fn check_generator(k: usize, n: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::GeneratorOutOfRange { k, max: n.saturating_sub(1) });
    }
    Ok(())
}

/// `a - s * b` as a positive root.
fn subtract(a: &Root, s: i32, b: &Root) -> Root {
    let coeffs: Vec<i64> = a
        .coefficients()
        .iter()
        .zip(b.coefficients())
        .map(|(x, y)| x - i64::from(s) * y)
        .collect();
    SignedRoot::from_coefficients(&coeffs)
        .expect("mutation of a distinguished basis yields a root")
        .positive()
}

/// Applies `alpha_k` (left) or `beta_k` (right), normalizing signs.
pub fn mutate(basis: &DistinguishedBasis, k: usize, dir: Direction) -> Result<DistinguishedBasis> {
    check_generator(k, basis.n())?;
    let mut roots = basis.roots().to_vec();
    let (a, b) = (roots[k - 1], roots[k]);
    let s = seifert_unchecked(&a, &b);
    match dir {
        Direction::Left => {
            roots[k - 1] = b;
            roots[k] = subtract(&a, s, &b);
        }
        Direction::Right => {
            roots[k - 1] = subtract(&b, s, &a);
            roots[k] = a;
        }
    }
    Ok(DistinguishedBasis::new_unchecked(roots))
}

pub fn apply_word(basis: &DistinguishedBasis, word: &BraidWord) -> Result<DistinguishedBasis> {
    word.check_rank(basis.n())?;
    word.generators().try_fold(basis.clone(), |b, (k, dir)| mutate(&b, k, dir))
}

/// The action on parking functions, transported through the bijection.
pub fn mutate_pf(f: &ParkingFunction, k: usize, dir: Direction) -> Result<ParkingFunction> {
    Ok(in_vector(&mutate(&reconstruct(f), k, dir)?))
}

pub fn apply_word_pf(f: &ParkingFunction, word: &BraidWord) -> Result<ParkingFunction> {
    Ok(in_vector(&apply_word(&reconstruct(f), word)?))
}

/// 2 when `a_k` and `a_{k+1}` are orthogonal in both orders, else 3.
pub fn generator_order(basis: &DistinguishedBasis, k: usize) -> Result<usize> {
    check_generator(k, basis.n())?;
    let (a, b) = (basis.get(k), basis.get(k + 1));
    Ok(if seifert_unchecked(&a, &b) == 0 && seifert_unchecked(&b, &a) == 0 { 2 } else { 3 })
}

/// Relative position of the arcs of `a` and `b` when `seifert(b, a) == 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ArcPicture {
    /// `seifert(a, b) == 0`; `c = a`.
    Orthogonal,
    /// `b` nested in `a` with a common left end; `c` starts at `b.hi + 1`.
    SharedLeftEnd,
    /// `a` nested in `b` with a common right end; `c` starts at `b.lo`.
    SharedRightEnd,
    /// `b` starts right after `a` ends; `c` starts at `a.lo`.
    Touching,
}

/// `c = a - seifert(a, b) * b`, together with the picture it falls under.
pub fn arc_mutation_target(a: &Root, b: &Root) -> Result<(Root, ArcPicture)> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch { left: a.rank(), right: b.rank() });
    }
    if seifert_unchecked(b, a) != 0 {
        return Err(Error::Precondition(format!("seifert({b}, {a}) is not zero")));
    }
    let s = seifert_unchecked(a, b);
    let picture = if s == 0 {
        ArcPicture::Orthogonal
    } else if a.lo() == b.lo() {
        ArcPicture::SharedLeftEnd
    } else if a.hi() == b.hi() {
        ArcPicture::SharedRightEnd
    } else {
        ArcPicture::Touching
    };
    if s != 0 && a == b {
        return Err(Error::Precondition(format!("{a} mutated by itself")));
    }
    Ok((subtract(a, s, b), picture))
}

/// Which of the four diagram rules governs generator `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagramCase {
    /// `P_k` lies north-east of `P_{k+1}` on a clear diagonal.
    KAboveRight,
    /// `P_{k+1}` lies north-east of `P_k` on a clear diagonal.
    KBelowLeft,
    /// `P_k` and `P_{k+1}` share their x-coordinate.
    SameColumn,
    Other,
}

impl DiagramCase {
    pub const ALL: [Self; 4] = [Self::KAboveRight, Self::KBelowLeft, Self::SameColumn, Self::Other];

    pub fn number(self) -> usize {
        self as usize + 1
    }
}

/// True when `to` is reached from `from` by unit north-east steps passing
/// only corners with labels `<= max_label` and points outside the diagram.
fn clear_diagonal(d: &ParkingDiagram, from: (usize, i64), to: (usize, i64), max_label: usize) -> bool {
    if to.0 <= from.0 || to.0 - from.0 != (to.1 - from.1) as usize {
        return false;
    }
    let (mut x, mut y) = from;
    while (x + 1, y + 1) != to {
        x += 1;
        y += 1;
        match d.classify(x, y) {
            PointKind::Corner(l) if l <= max_label => {}
            PointKind::Outside => {}
            _ => return false,
        }
    }
    true
}

pub fn diagram_case(d: &ParkingDiagram, k: usize) -> Result<DiagramCase> {
    check_generator(k, d.n())?;
    let (pk, pk1) = (d.corner(k), d.corner(k + 1));
    Ok(if clear_diagonal(d, pk1, pk, k + 1) {
        DiagramCase::KAboveRight
    } else if clear_diagonal(d, pk, pk1, k + 1) {
        DiagramCase::KBelowLeft
    } else if pk.0 == pk1.0 {
        DiagramCase::SameColumn
    } else {
        DiagramCase::Other
    })
}

fn swap_labels(rows: &mut [DiagramRow], k: usize) {
    for row in rows {
        if row.label == k {
            row.label = k + 1;
        } else if row.label == k + 1 {
            row.label = k;
        }
    }
}

/// Removes the row labelled `label` and inserts a row with the same label
/// and the given length just before original row `before`.
fn move_row(rows: &mut Vec<DiagramRow>, label: usize, length: usize, before: usize) {
    let at = rows.iter().position(|r| r.label == label).expect("label present");
    rows.remove(at);
    let before = if at < before { before - 1 } else { before };
    rows.insert(before, DiagramRow { label, length });
}

/// Stopping point of the north-east ray from `P_{k+1}`, as
/// `(x, index of the row directly above the point)`.
fn ray_target(d: &ParkingDiagram, k: usize) -> (usize, usize) {
    let stop = d.shoot_ray(d.corner(k + 1), k);
    let row = match stop.kind {
        PointKind::Corner(l) => d.row_of(l),
        PointKind::Path => (stop.y + d.n() as i64) as usize,
        PointKind::Axis => d.n(),
        PointKind::Outside | PointKind::Inside => unreachable!("ray stops on the boundary"),
    };
    (stop.x, row)
}

/// Applies a generator directly to the diagram by moving at most one row.
///
/// * `KAboveRight`: `alpha_k` moves row `k` to length `x(P_{k+1})` just
///   below row `k+1`; `beta_k` swaps labels.
/// * `KBelowLeft`: `alpha_k` swaps labels; `beta_k` moves row `k+1` to
///   length `x(P_k)` just above row `k`.
/// * `SameColumn`: with `Q` the stop of the ray from `P_{k+1}`, `alpha_k`
///   moves row `k+1` and `beta_k` moves row `k` to length `x(Q)`, just below
///   the row containing `Q`.
/// * `Other`: both swap labels.
pub fn mutate_diagram(d: &ParkingDiagram, k: usize, dir: Direction) -> Result<ParkingDiagram> {
    let case = diagram_case(d, k)?;
    let mut rows = d.rows().to_vec();
    match (case, dir) {
        (DiagramCase::KAboveRight, Direction::Left) => {
            move_row(&mut rows, k, d.corner(k + 1).0, d.row_of(k + 1));
        }
        (DiagramCase::KBelowLeft, Direction::Right) => {
            move_row(&mut rows, k + 1, d.corner(k).0, d.row_of(k) + 1);
        }
        (DiagramCase::SameColumn, dir) => {
            let (x, row) = ray_target(d, k);
            let label = if dir == Direction::Left { k + 1 } else { k };
            move_row(&mut rows, label, x, row);
        }
        _ => swap_labels(&mut rows, k),
    }
    ParkingDiagram::from_rows(rows)
}

/// The rows produced by reading the four rules with the direction names,
/// the row that moves and the insertion side exactly as they are usually
/// printed: the `alpha`/`beta` roles of the first three rules exchanged and
/// the second rule inserting below `P_k`. The result may not even be a
/// valid diagram.
pub fn mutate_diagram_as_printed(d: &ParkingDiagram, k: usize, dir: Direction) -> Result<Vec<DiagramRow>> {
    let case = diagram_case(d, k)?;
    let mut rows = d.rows().to_vec();
    match (case, dir) {
        (DiagramCase::KAboveRight, Direction::Right) => {
            move_row(&mut rows, k, d.corner(k + 1).0, d.row_of(k + 1));
        }
        (DiagramCase::KBelowLeft, Direction::Left) => {
            move_row(&mut rows, k + 1, d.corner(k).0, d.row_of(k));
        }
        (DiagramCase::SameColumn, dir) => {
            let (x, row) = ray_target(d, k);
            let label = if dir == Direction::Left { k } else { k + 1 };
            move_row(&mut rows, label, x, row);
        }
        _ => swap_labels(&mut rows, k),
    }
    Ok(rows)
}

/// Agreement of one reading of the diagram rules with the algebraic action.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RuleTally {
    pub case: usize,
    pub direction: Direction,
    pub instances: usize,
    pub mismatches: usize,
}

/// Compares [`mutate_diagram`] (or the printed reading) with the algebraic
/// action over every diagram, generator and direction in rank `n`.
pub fn diagram_rule_tally(n: usize, as_printed: bool) -> Result<Vec<RuleTally>> {
    let mut tally: HashMap<(DiagramCase, Direction), (usize, usize)> = HashMap::new();
    for f in enumerate_parking(n)? {
        let d = to_diagram(&f);
        for k in 1..n {
            let case = diagram_case(&d, k)?;
            for dir in [Direction::Left, Direction::Right] {
                let want = to_diagram(&mutate_pf(&f, k, dir)?);
                let ok = if as_printed {
                    mutate_diagram_as_printed(&d, k, dir)? == want.rows()
                } else {
                    mutate_diagram(&d, k, dir).is_ok_and(|got| got == want)
                };
                let entry = tally.entry((case, dir)).or_default();
                entry.0 += 1;
                entry.1 += usize::from(!ok);
            }
        }
    }
    let mut out: Vec<RuleTally> = tally
        .into_iter()
        .map(|((case, direction), (instances, mismatches))| RuleTally {
            case: case.number(),
            direction,
            instances,
            mismatches,
        })
        .collect();
    out.sort_by_key(|t| (t.case, t.direction));
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitEdge {
    pub from: usize,
    pub to: usize,
    pub k: usize,
    pub direction: Direction,
}

/// Action graph of all generators on `PF_n`. Nodes are in lexicographic
/// order; edges are sorted by `(from, k, direction)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitGraph {
    pub n: usize,
    pub nodes: Vec<ParkingFunction>,
    pub edges: Vec<OrbitEdge>,
}

pub fn orbit_graph(n: usize) -> Result<OrbitGraph> {
    if n < 2 {
        return Err(Error::Precondition(format!("orbit graph needs n >= 2, got {n}")));
    }
    let nodes: Vec<ParkingFunction> = enumerate_parking(n)?.collect();
    let index: HashMap<&ParkingFunction, usize> = nodes.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let edges = nodes
        .par_iter()
        .enumerate()
        .map(|(from, f)| {
            let mut out = Vec::with_capacity(2 * (n - 1));
            for k in 1..n {
                for direction in [Direction::Left, Direction::Right] {
                    let g = mutate_pf(f, k, direction).expect("generator in range");
                    out.push(OrbitEdge { from, to: index[&g], k, direction });
                }
            }
            out
        })
        .flatten()
        .collect();
    Ok(OrbitGraph { n, nodes, edges })
}

impl OrbitGraph {
    pub fn node_index(&self, f: &ParkingFunction) -> Option<usize> {
        self.nodes.iter().position(|g| g == f)
    }

    /// Target of `alpha_k` or `beta_k` from node `from`.
    pub fn step(&self, from: usize, k: usize, direction: Direction) -> Option<usize> {
        self.edges
            .iter()
            .find(|e| e.from == from && e.k == k && e.direction == direction)
            .map(|e| e.to)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.nodes.len()];
        let mut adjacency = vec![Vec::new(); self.nodes.len()];
        for e in &self.edges {
            adjacency[e.from].push(e.to);
        }
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in &adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Graphviz digraph; `alpha_k` edges are labelled `ak`, and `beta_k`
    /// edges `bk` when `with_inverse` is set.
    pub fn to_dot(&self, with_inverse: bool) -> String {
        let mut out = format!("digraph pf{} {{\n", self.n);
        for (i, f) in self.nodes.iter().enumerate() {
            out.push_str(&format!("  n{i} [label=\"{f}\"];\n"));
        }
        for e in &self.edges {
            let prefix = match e.direction {
                Direction::Left => "a",
                Direction::Right if with_inverse => "b",
                Direction::Right => continue,
            };
            let style = if e.k % 2 == 0 { ", style=dashed" } else { "" };
            out.push_str(&format!(
                "  n{} -> n{} [label=\"{}{}\"{}];\n",
                e.from, e.to, prefix, e.k, style
            ));
        }
        out.push_str("}\n");
        out
    }
}

/// A Young diagram in the staircase of size `n`: rows `mu_1 >= .. >=
/// mu_{n-1}` with `mu_i <= n - i`; row `n` is always empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct YoungDiagram {
    pub n: usize,
    pub rows: Vec<usize>,
}

impl YoungDiagram {
    pub fn new(n: usize, rows: Vec<usize>) -> Result<Self> {
        if n == 0 || rows.len() != n - 1 {
            return Err(Error::MalformedDiagram(format!("expected {} rows", n.saturating_sub(1))));
        }
        for (i, w) in rows.windows(2).enumerate() {
            if w[0] < w[1] {
                return Err(Error::MalformedDiagram(format!("row {} shorter than row {}", i + 1, i + 2)));
            }
        }
        for (i, &len) in rows.iter().enumerate() {
            if len > n - i - 1 {
                return Err(Error::MalformedDiagram(format!("row {} leaves the staircase", i + 1)));
            }
        }
        Ok(Self { n, rows })
    }

    /// The outline of a parking function diagram.
    pub fn of_diagram(d: &ParkingDiagram) -> Self {
        let mut rows: Vec<usize> = d.lengths().into_iter().rev().collect();
        rows.pop();
        Self { n: d.n(), rows }
    }

    /// `mu_i` for `i` in `1..=n`, zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        self.rows.get(i - 1).copied().unwrap_or(0)
    }
}

/// Flips row `k` by walking the diagonal through its lower right corner,
/// south-west when row `k` is longer than row `k + 1` and north-east when
/// they are equal. Returns the new diagram and the index of the inserted
/// row, so that flipping that row undoes the flip.
pub fn flip_row(y: &YoungDiagram, k: usize) -> Result<(YoungDiagram, usize)> {
    let n = y.n;
    if k == 0 || k >= n {
        return Err(Error::RowOutOfRange { row: k, max: n.saturating_sub(1) });
    }
    let mu = |i: usize| if i == 0 { usize::MAX } else { y.row(i) };
    let (mk, next) = (y.row(k), y.row(k + 1));
    let mut rows = y.rows.clone();
    rows.remove(k - 1);
    // the new row sits next to the row where the walk stopped
    let at = if mk > next {
        let t = (1..).find(|&t| mk - t <= mu(k + t)).expect("walk reaches the y-axis");
        rows.insert(k + t - 2, mk - t);
        k + t - 2
    } else {
        let t = (1..=k).find(|&t| mk + t <= mu(k - t)).expect("walk reaches the x-axis");
        rows.insert(k - t, mk + t);
        k - t
    };
    Ok((YoungDiagram::new(n, rows)?, at + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dbasis::validate;

    fn pf(v: &[usize]) -> ParkingFunction {
        ParkingFunction::new(v.to_vec()).unwrap()
    }

    fn basis(n: usize, iv: &[(usize, usize)]) -> DistinguishedBasis {
        validate(&iv.iter().map(|&(lo, hi)| Root::new(lo, hi, n).unwrap()).collect::<Vec<_>>()).unwrap()
    }

    fn iv(b: &DistinguishedBasis) -> Vec<(usize, usize)> {
        b.roots().iter().map(|r| (r.lo(), r.hi())).collect()
    }

    #[test]
    fn a2_cycle() {
        let b = basis(2, &[(1, 1), (2, 2)]);
        let b1 = mutate(&b, 1, Direction::Left).unwrap();
        assert_eq!(iv(&b1), vec![(2, 2), (1, 2)]);
        let b2 = mutate(&b1, 1, Direction::Left).unwrap();
        assert_eq!(iv(&b2), vec![(1, 2), (1, 1)]);
        assert_eq!(mutate(&b2, 1, Direction::Left).unwrap(), b);
        assert_eq!(generator_order(&b, 1).unwrap(), 3);
    }

    #[test]
    fn sign_is_normalized() {
        let b = basis(3, &[(1, 3), (2, 2), (1, 2)]);
        let m = mutate(&b, 2, Direction::Left).unwrap();
        assert_eq!(iv(&m), vec![(1, 3), (1, 2), (1, 1)]);
    }

    #[test]
    fn orthogonal_pair_swaps() {
        let b = basis(3, &[(1, 1), (3, 3), (2, 3)]);
        let m = mutate(&b, 1, Direction::Left).unwrap();
        assert_eq!(iv(&m), vec![(3, 3), (1, 1), (2, 3)]);
        assert_eq!(generator_order(&b, 1).unwrap(), 2);
    }

    #[test]
    fn pf_examples() {
        assert_eq!(mutate_pf(&pf(&[1, 2, 1]), 1, Direction::Left).unwrap(), pf(&[2, 1, 1]));
        assert_eq!(mutate_pf(&pf(&[1, 2, 1]), 2, Direction::Left).unwrap(), pf(&[1, 1, 1]));
        assert!(mutate_pf(&pf(&[1, 2, 1]), 3, Direction::Left).is_err());
        assert!(mutate_pf(&pf(&[1, 2, 1]), 0, Direction::Left).is_err());
    }

    #[test]
    fn words() {
        let w: BraidWord = "1 -2 1".parse().unwrap();
        assert_eq!(w.letters(), &[1, -2, 1]);
        assert_eq!(w.to_string(), "1 -2 1");
        assert_eq!(w.inverse().letters(), &[-1, 2, -1]);
        assert!("1 x".parse::<BraidWord>().is_err());
        assert!("1 0".parse::<BraidWord>().is_err());
        let f = pf(&[1, 2, 1]);
        let w: BraidWord = "1 -1".parse().unwrap();
        assert_eq!(apply_word_pf(&f, &w).unwrap(), f);
        let w: BraidWord = "3".parse().unwrap();
        assert!(matches!(apply_word_pf(&f, &w), Err(Error::GeneratorOutOfRange { k: 3, max: 2 })));
    }

    #[test]
    fn arc_targets() {
        let r = |lo, hi| Root::new(lo, hi, 4).unwrap();
        assert_eq!(arc_mutation_target(&r(1, 3), &r(1, 1)).unwrap(), (r(2, 3), ArcPicture::SharedLeftEnd));
        assert_eq!(arc_mutation_target(&r(2, 3), &r(1, 3)).unwrap(), (r(1, 1), ArcPicture::SharedRightEnd));
        assert_eq!(arc_mutation_target(&r(1, 2), &r(3, 4)).unwrap(), (r(1, 4), ArcPicture::Touching));
        assert_eq!(arc_mutation_target(&r(1, 1), &r(3, 4)).unwrap(), (r(1, 1), ArcPicture::Orthogonal));
        assert!(arc_mutation_target(&r(1, 1), &r(1, 3)).is_err());
    }

    #[test]
    fn young_flips() {
        let empty = YoungDiagram::new(4, vec![0, 0, 0]).unwrap();
        let (y, at) = flip_row(&empty, 1).unwrap();
        assert_eq!(y.rows, vec![1, 0, 0]);
        assert_eq!(at, 1);
        let (back, _) = flip_row(&y, at).unwrap();
        assert_eq!(back, empty);
        let (y, at) = flip_row(&empty, 3).unwrap();
        assert_eq!(y.rows, vec![3, 0, 0]);
        assert_eq!(flip_row(&y, at).unwrap().0, empty);
        assert!(flip_row(&empty, 4).is_err());
        assert!(YoungDiagram::new(3, vec![1, 2]).is_err());
        assert!(YoungDiagram::new(3, vec![2, 2]).is_err());
    }

    #[test]
    fn alpha_six_figure() {
        let d1 = pf(&[2, 8, 6, 4, 5, 1, 7, 1]);
        let d2 = pf(&[2, 8, 6, 4, 5, 7, 1, 1]);
        let d3 = pf(&[2, 8, 6, 4, 5, 1, 1, 1]);
        for (from, to) in [(&d1, &d2), (&d2, &d3), (&d3, &d1)] {
            assert_eq!(&mutate_pf(from, 6, Direction::Left).unwrap(), to);
            assert_eq!(&mutate_pf(to, 6, Direction::Right).unwrap(), from);
            let d = mutate_diagram(&to_diagram(from), 6, Direction::Left).unwrap();
            assert_eq!(d, to_diagram(to));
        }
    }
}
