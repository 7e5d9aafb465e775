//! Parking functions, their labeled staircase diagrams and Dyck paths.
//!
//! Diagram coordinates: the diagram sits in the triangle bounded by the
//! axes and the line `y = x - n`. Rows are stored bottom-up; the row at
//! index `i` (0-based) spans `y in [-n + i, -n + i + 1]`, and its
//! south-east corner `P_k` (for the label `k` written on it) is the point
//! `(f(k) - 1, -n + i)`. Rendered figures are drawn top-down, so the ASCII
//! and SVG renderers reverse the row order.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ParkingFunction(Vec<usize>);

/// Checks the parking condition `|f^{-1}({1..k})| >= k` for all `k`.
pub fn is_parking(values: &[usize]) -> Result<bool> {
    let n = values.len();
    if n == 0 {
        return Err(Error::EmptyOrder);
    }
    let mut counts = vec![0usize; n + 1];
    for (position, &value) in values.iter().enumerate() {
        if value == 0 || value > n {
            return Err(Error::ValueOutOfRange { position: position + 1, value, n });
        }
        counts[value] += 1;
    }
    Ok(first_parking_violation(&counts).is_none())
}

/// Smallest `k` with fewer than `k` values `<= k`, from per-value counts.
fn first_parking_violation(counts: &[usize]) -> Option<(usize, usize)> {
    let mut seen = 0;
    for (k, &c) in counts.iter().enumerate().skip(1) {
        seen += c;
        if seen < k {
            return Some((k, seen));
        }
    }
    None
}

impl ParkingFunction {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        let mut counts = vec![0usize; n + 1];
        for (position, &value) in values.iter().enumerate() {
            if value == 0 || value > n {
                return Err(Error::ValueOutOfRange { position: position + 1, value, n });
            }
            counts[value] += 1;
        }
        if let Some((k, count)) = first_parking_violation(&counts) {
            return Err(Error::NotParking { k, count });
        }
        Ok(Self(values))
    }

    pub(crate) fn new_unchecked(values: Vec<usize>) -> Self {
        debug_assert!(is_parking(&values).unwrap_or(false), "{values:?}");
        Self(values)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn into_values(self) -> Vec<usize> {
        self.0
    }

    /// `f(k)` for `k` in `1..=n`.
    pub fn get(&self, k: usize) -> usize {
        self.0[k - 1]
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.n() + 1];
        self.0.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn sorted(&self) -> Self {
        let mut v = self.0.clone();
        v.sort_unstable();
        Self(v)
    }
}

impl fmt::Display for ParkingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct DiagramRow {
    pub label: usize,
    pub length: usize,
}

/// A labeled Young diagram inside the staircase, rows listed bottom-up.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ParkingDiagram {
    rows: Vec<DiagramRow>,
}

/// What a lattice point of the plane is, relative to a diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointKind {
    /// The south-east corner `P_label` of a row.
    Corner(usize),
    /// On the Dyck path but not a row corner.
    Path,
    /// On the x-axis.
    Axis,
    Outside,
    Inside,
}

/// Where a north-east ray stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RayStop {
    pub x: usize,
    pub y: i64,
    pub kind: PointKind,
}

impl ParkingDiagram {
    /// Builds a diagram from bottom-up rows, checking shape and labels.
    pub fn from_rows(rows: Vec<DiagramRow>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyOrder);
        }
        let mut seen = vec![false; n + 1];
        for row in &rows {
            if row.label == 0 || row.label > n || std::mem::replace(&mut seen[row.label], true) {
                return Err(Error::MalformedDiagram(format!(
                    "labels must be a permutation of 1..{n}"
                )));
            }
        }
        for (i, row) in rows.iter().enumerate() {
            if row.length > i {
                return Err(Error::MalformedDiagram(format!(
                    "row {} from the bottom has length {} > {}",
                    i + 1,
                    row.length,
                    i
                )));
            }
        }
        for (i, w) in rows.windows(2).enumerate() {
            if w[0].length > w[1].length {
                return Err(Error::MalformedDiagram(format!(
                    "row {} is longer than the row above it",
                    i + 1
                )));
            }
            if w[0].length == w[1].length && w[0].label > w[1].label {
                return Err(Error::MalformedDiagram(format!(
                    "labels {} and {} decrease upwards in column {}",
                    w[0].label, w[1].label, w[0].length
                )));
            }
        }
        Ok(Self { rows })
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// Rows bottom-up.
    pub fn rows(&self) -> &[DiagramRow] {
        &self.rows
    }

    /// Row lengths bottom-up.
    pub fn lengths(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.length).collect()
    }

    /// Index (0-based, bottom-up) of the row carrying `label`.
    pub fn row_of(&self, label: usize) -> usize {
        self.rows
            .iter()
            .position(|r| r.label == label)
            .expect("label present in diagram")
    }

    /// The corner `P_label`.
    pub fn corner(&self, label: usize) -> (usize, i64) {
        let i = self.row_of(label);
        (self.rows[i].length, i as i64 - self.n() as i64)
    }

    /// Classifies a lattice point with `-n <= y <= 0`.
    pub fn classify(&self, x: usize, y: i64) -> PointKind {
        let n = self.n() as i64;
        assert!((-n..=0).contains(&y), "y = {y} outside the strip");
        let level = (y + n) as usize;
        if level == self.n() {
            return PointKind::Axis;
        }
        let here = self.rows[level].length;
        let below = if level == 0 { 0 } else { self.rows[level - 1].length };
        if x == here {
            PointKind::Corner(self.rows[level].label)
        } else if x > here {
            PointKind::Outside
        } else if x >= below {
            PointKind::Path
        } else {
            PointKind::Inside
        }
    }

    /// Walks north-east from `(x, y)` until the first corner with a label
    /// greater than `above`, a non-corner point of the Dyck path, or the
    /// x-axis. Corners with smaller labels are passed through.
    pub fn shoot_ray(&self, start: (usize, i64), above: usize) -> RayStop {
        let (mut x, mut y) = start;
        loop {
            x += 1;
            y += 1;
            let kind = self.classify(x, y);
            match kind {
                PointKind::Corner(l) if l > above => return RayStop { x, y, kind },
                PointKind::Corner(_) | PointKind::Outside => {}
                PointKind::Path | PointKind::Axis => return RayStop { x, y, kind },
                PointKind::Inside => unreachable!("ray entered the diagram at ({x}, {y})"),
            }
        }
    }
}

/// The diagram of `f`: rows sorted bottom-up by `(f(k), k)`.
pub fn to_diagram(f: &ParkingFunction) -> ParkingDiagram {
    let mut labels: Vec<usize> = (1..=f.n()).collect();
    labels.sort_by_key(|&k| (f.get(k), k));
    let rows = labels
        .into_iter()
        .map(|label| DiagramRow { label, length: f.get(label) - 1 })
        .collect();
    ParkingDiagram { rows }
}

/// Reads `f(k)` as the x-coordinate of `P_k` plus one.
pub fn from_diagram(d: &ParkingDiagram) -> ParkingFunction {
    let mut values = vec![0; d.n()];
    for row in &d.rows {
        values[row.label - 1] = row.length + 1;
    }
    ParkingFunction::new_unchecked(values)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Step {
    /// `(0, 1)`
    N,
    /// `(1, 0)`
    E,
}

/// Lattice path from `(0, -n)` to `(n, 0)` staying weakly above `y = x - n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        if !steps.len().is_multiple_of(2) || steps.is_empty() {
            return Err(Error::MalformedDyckPath(format!("odd or empty length {}", steps.len())));
        }
        let mut height: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            height += match s {
                Step::N => 1,
                Step::E => -1,
            };
            if height < 0 {
                return Err(Error::MalformedDyckPath(format!("crosses the diagonal at step {}", i + 1)));
            }
        }
        if height != 0 {
            return Err(Error::MalformedDyckPath("unequal numbers of N and E steps".into()));
        }
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn n(&self) -> usize {
        self.steps.len() / 2
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::N => "N",
                Step::E => "E",
            })?;
        }
        Ok(())
    }
}

/// Boundary path of the diagram of a non-decreasing parking function.
pub fn to_dyck(f: &ParkingFunction) -> Result<DyckPath> {
    if let Some(p) = f.values().windows(2).position(|w| w[0] > w[1]) {
        return Err(Error::NotNondecreasing { position: p + 2 });
    }
    let n = f.n();
    let mut steps = Vec::with_capacity(2 * n);
    let mut x = 0;
    for &v in f.values() {
        let len = v - 1;
        steps.extend(std::iter::repeat_n(Step::E, len - x));
        steps.push(Step::N);
        x = len;
    }
    steps.extend(std::iter::repeat_n(Step::E, n - x));
    DyckPath::new(steps)
}

/// Inverse of [`to_dyck`].
pub fn from_dyck(path: &DyckPath) -> ParkingFunction {
    let mut x = 0;
    let mut values = Vec::with_capacity(path.n());
    for s in path.steps() {
        match s {
            Step::E => x += 1,
            Step::N => values.push(x + 1),
        }
    }
    ParkingFunction::new_unchecked(values)
}

/// All parking functions of order `n` in lexicographic order.
pub fn enumerate_parking(n: usize) -> Result<ParkingFunctions> {
    if n == 0 {
        return Err(Error::EmptyOrder);
    }
    Ok(ParkingFunctions { n, current: None, done: false })
}

/// Lexicographic stream of parking functions; see [`enumerate_parking`].
#[derive(Debug, Clone)]
pub struct ParkingFunctions {
    n: usize,
    current: Option<Vec<usize>>,
    done: bool,
}

impl ParkingFunctions {
    /// Whether `prefix` can be completed by `n - prefix.len()` more values.
    fn feasible(n: usize, prefix: &[usize]) -> bool {
        let remaining = n - prefix.len();
        let mut counts = vec![0usize; n + 1];
        for &v in prefix {
            counts[v] += 1;
        }
        let mut seen = remaining;
        for (k, c) in counts.iter().enumerate().skip(1) {
            seen += c;
            if seen < k {
                return false;
            }
        }
        true
    }
}

impl Iterator for ParkingFunctions {
    type Item = ParkingFunction;

    fn next(&mut self) -> Option<ParkingFunction> {
        if self.done {
            return None;
        }
        let n = self.n;
        let Some(cur) = self.current.as_mut() else {
            let first = vec![1; n];
            self.current = Some(first.clone());
            return Some(ParkingFunction(first));
        };
        for p in (0..n).rev() {
            for v in cur[p] + 1..=n {
                cur[p] = v;
                if Self::feasible(n, &cur[..=p]) {
                    cur[p + 1..].iter_mut().for_each(|x| *x = 1);
                    return Some(ParkingFunction(cur.clone()));
                }
            }
        }
        self.done = true;
        None
    }
}

/// All weakly increasing parking functions of order `n`, lexicographically.
pub fn enumerate_nondecreasing(n: usize) -> Result<NondecreasingParkingFunctions> {
    if n == 0 {
        return Err(Error::EmptyOrder);
    }
    Ok(NondecreasingParkingFunctions { n, current: None, done: false })
}

#[derive(Debug, Clone)]
pub struct NondecreasingParkingFunctions {
    n: usize,
    current: Option<Vec<usize>>,
    done: bool,
}

impl Iterator for NondecreasingParkingFunctions {
    type Item = ParkingFunction;

    fn next(&mut self) -> Option<ParkingFunction> {
        if self.done {
            return None;
        }
        let Some(cur) = self.current.as_mut() else {
            let first = vec![1; self.n];
            self.current = Some(first.clone());
            return Some(ParkingFunction(first));
        };
        // f is a non-decreasing parking function iff f(i) <= i.
        for p in (0..self.n).rev() {
            if cur[p] < p + 1 {
                let v = cur[p] + 1;
                cur[p..].iter_mut().for_each(|x| *x = v);
                return Some(ParkingFunction(cur.clone()));
            }
        }
        self.done = true;
        None
    }
}

/// `(n + 1)^(n - 1)`.
pub fn parking_count(n: usize) -> u64 {
    if n == 0 {
        return 1;
    }
    (n as u64 + 1).pow(n as u32 - 1)
}

/// `binom(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> u64 {
    let mut c: u64 = 1;
    for i in 0..n as u64 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pf(v: &[usize]) -> ParkingFunction {
        ParkingFunction::new(v.to_vec()).unwrap()
    }

    #[test]
    fn parking_condition() {
        assert!(is_parking(&[1, 1, 1, 1]).unwrap());
        assert!(!is_parking(&[2, 2]).unwrap());
        assert!(is_parking(&[3, 11, 7, 5, 9, 8, 5, 2, 1, 10, 2, 12]).unwrap());
        assert_eq!(
            is_parking(&[1, 4, 1]).unwrap_err(),
            Error::ValueOutOfRange { position: 2, value: 4, n: 3 }
        );
        assert_eq!(ParkingFunction::new(vec![2, 2]).unwrap_err(), Error::NotParking { k: 1, count: 0 });
        assert_eq!(is_parking(&[]).unwrap_err(), Error::EmptyOrder);
    }

    #[test]
    fn small_enumerations() {
        let one: Vec<_> = enumerate_parking(1).unwrap().map(|f| f.into_values()).collect();
        assert_eq!(one, vec![vec![1]]);
        let two: Vec<_> = enumerate_parking(2).unwrap().map(|f| f.into_values()).collect();
        assert_eq!(two, vec![vec![1, 1], vec![1, 2], vec![2, 1]]);
        assert_eq!(enumerate_parking(3).unwrap().count(), 16);
        assert!(enumerate_parking(0).is_err());
        assert!(enumerate_nondecreasing(0).is_err());
    }

    #[test]
    fn counts_match_closed_forms() {
        for n in 1..=7 {
            let all: Vec<_> = enumerate_parking(n).unwrap().collect();
            assert_eq!(all.len() as u64, parking_count(n));
            assert!(all.windows(2).all(|w| w[0] < w[1]), "lexicographic order");
            assert!(all.iter().all(|f| is_parking(f.values()).unwrap()));
        }
        for n in 1..=10 {
            assert_eq!(enumerate_nondecreasing(n).unwrap().count() as u64, catalan(n));
        }
        assert_eq!(catalan(3), 5);
        assert_eq!(catalan(5), 42);
    }

    #[test]
    fn brute_force_agrees_with_enumeration() {
        for n in 1..=5usize {
            let mut brute = Vec::new();
            let total = n.pow(n as u32);
            for mut code in 0..total {
                let mut v = vec![0; n];
                for slot in v.iter_mut().rev() {
                    *slot = code % n + 1;
                    code /= n;
                }
                if is_parking(&v).unwrap() {
                    brute.push(v);
                }
            }
            let listed: Vec<_> = enumerate_parking(n).unwrap().map(|f| f.into_values()).collect();
            assert_eq!(listed, brute);
            let nd: Vec<_> = enumerate_nondecreasing(n).unwrap().map(|f| f.into_values()).collect();
            let nd_brute: Vec<_> =
                brute.iter().filter(|v| v.windows(2).all(|w| w[0] <= w[1])).cloned().collect();
            assert_eq!(nd, nd_brute);
        }
    }

    #[test]
    fn nondecreasing_contains_worked_example() {
        assert!(enumerate_nondecreasing(7).unwrap().any(|f| f.values() == [1, 1, 2, 2, 2, 4, 6]));
        let one: Vec<_> = enumerate_nondecreasing(1).unwrap().collect();
        assert_eq!(one, vec![pf(&[1])]);
    }

    #[test]
    fn figure_diagram_for_five_cars() {
        // Drawn top-down: 2 (length 4), 5 (3), 3 (2), 4 (0), 1 (0).
        let d = to_diagram(&pf(&[1, 5, 3, 1, 4]));
        let rows: Vec<_> = d.rows().iter().map(|r| (r.label, r.length)).collect();
        assert_eq!(rows, vec![(1, 0), (4, 0), (3, 2), (5, 3), (2, 4)]);
        assert_eq!(d.corner(3), (2, -3));
    }

    #[test]
    fn identity_is_full_staircase() {
        for n in 1..=6 {
            let f = pf(&(1..=n).collect::<Vec<_>>());
            let d = to_diagram(&f);
            for (i, row) in d.rows().iter().enumerate() {
                assert_eq!((row.label, row.length), (i + 1, i));
            }
        }
    }

    #[test]
    fn nondecreasing_labels_sit_at_their_heights() {
        let d = to_diagram(&pf(&[1, 1, 2, 2, 2, 4, 6]));
        for (i, row) in d.rows().iter().enumerate() {
            assert_eq!(row.label, i + 1);
            assert_eq!(d.corner(row.label).1, row.label as i64 - 1 - 7);
        }
    }

    #[test]
    fn diagram_round_trip_exhaustive() {
        for n in 1..=6 {
            for f in enumerate_parking(n).unwrap() {
                let d = to_diagram(&f);
                assert_eq!(ParkingDiagram::from_rows(d.rows().to_vec()).unwrap(), d);
                assert_eq!(from_diagram(&d), f);
            }
        }
    }

    #[test]
    fn malformed_diagrams_rejected() {
        let row = |label, length| DiagramRow { label, length };
        // labels decreasing upwards within a column
        assert!(ParkingDiagram::from_rows(vec![row(2, 0), row(1, 0)]).is_err());
        // too long for the staircase
        assert!(ParkingDiagram::from_rows(vec![row(1, 1), row(2, 1)]).is_err());
        // not a Young diagram
        assert!(ParkingDiagram::from_rows(vec![row(1, 0), row(2, 1), row(3, 0)]).is_err());
        // repeated label
        assert!(ParkingDiagram::from_rows(vec![row(1, 0), row(1, 1)]).is_err());
    }

    #[test]
    fn dyck_paths() {
        let p = to_dyck(&pf(&[1, 1, 2])).unwrap();
        assert_eq!(p.to_string(), "NNENEE");
        assert_eq!(to_dyck(&pf(&[1, 2, 3])).unwrap().to_string(), "NENENE");
        assert_eq!(to_dyck(&pf(&[1, 1, 1])).unwrap().to_string(), "NNNEEE");
        assert_eq!(to_dyck(&pf(&[2, 1])).unwrap_err(), Error::NotNondecreasing { position: 2 });
        assert!(DyckPath::new(vec![Step::E, Step::N]).is_err());
        for n in 1..=4 {
            let mut seen = std::collections::HashSet::new();
            for f in enumerate_nondecreasing(n).unwrap() {
                let p = to_dyck(&f).unwrap();
                assert_eq!(from_dyck(&p), f);
                assert!(seen.insert(p));
            }
        }
    }

    #[test]
    fn sorting_preserves_parking() {
        for f in enumerate_parking(5).unwrap() {
            let s = f.sorted();
            assert!(s.is_nondecreasing());
            assert!(is_parking(s.values()).unwrap());
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn permutations_of_parking_functions_park(
                (v, seed) in (1usize..9).prop_flat_map(|n| (prop::collection::vec(1..=n, n), any::<u64>()))
            ) {
                let parks = is_parking(&v).unwrap();
                let mut w = v.clone();
                let len = w.len();
                w.rotate_left((seed as usize) % len);
                prop_assert_eq!(is_parking(&w).unwrap(), parks);
                prop_assert_eq!(is_parking(&{ let mut s = v.clone(); s.sort(); s }).unwrap(), parks);
            }
        }
    }
}
