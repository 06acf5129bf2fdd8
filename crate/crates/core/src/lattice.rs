//! Staircase-shaped regular subsets of Z^2, their boundary structure, weighted
//! lattice paths, and non-intersecting path families.
//!
//! Coordinates are matrix-style: `i` is the row and grows southward, `j` is
//! the column and grows eastward. Paths take north (`i - 1`) and east
//! (`j + 1`) steps.

use std::fmt;

use rand::Rng;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::algebra::Scalar;
use crate::error::{Error, Result};
use crate::shapes::PartitionShape;
use crate::toda::TodaSolution;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub i: i64,
    pub j: i64,
}

impl Point {
    pub const fn new(i: i64, j: i64) -> Self {
        Point { i, j }
    }

    pub fn north(self) -> Point {
        Point::new(self.i - 1, self.j)
    }

    pub fn south(self) -> Point {
        Point::new(self.i + 1, self.j)
    }

    pub fn east(self) -> Point {
        Point::new(self.i, self.j + 1)
    }

    pub fn west(self) -> Point {
        Point::new(self.i, self.j - 1)
    }

    /// Shift along the main diagonal by `k` (southeast for positive `k`).
    pub fn diag(self, k: i64) -> Point {
        Point::new(self.i + k, self.j + k)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// Boundary flags of a lattice point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryClass {
    pub west: bool,
    pub north: bool,
}

impl BoundaryClass {
    pub fn is_corner(&self) -> bool {
        self.west && self.north
    }

    pub fn is_interior(&self) -> bool {
        !self.west && !self.north
    }
}

/// The solution value attached to a vertical edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeLabel {
    A { s: i64, t: i64, n: i64 },
    B { s: i64, t: i64, n: i64 },
}

impl EdgeLabel {
    pub fn evaluate(&self, sol: &dyn TodaSolution) -> Result<Scalar> {
        match *self {
            EdgeLabel::A { s, t, n } => sol.a(s, t, n),
            EdgeLabel::B { s, t, n } => sol.b(s, t, n),
        }
    }
}

impl fmt::Display for EdgeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeLabel::A { s, t, n } => write!(f, "a^({s},{t})_{n}"),
            EdgeLabel::B { s, t, n } => write!(f, "b^({s},{t})_{n}"),
        }
    }
}

/// A regular subset given by a weakly decreasing west profile on a row window.
///
/// Row `i` of the window holds the columns `profile(i) ..= col_max`; rows
/// outside the window are empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RegularLattice {
    top: i64,
    profile: Vec<i64>,
    col_max: i64,
}

impl RegularLattice {
    pub fn new(top: i64, profile: Vec<i64>, col_max: i64) -> Result<Self> {
        if profile.windows(2).any(|w| w[1] > w[0]) {
            return Err(Error::BadProfile(profile));
        }
        Ok(RegularLattice {
            top,
            profile,
            col_max,
        })
    }

    /// The quarter plane `i, j >= 0` on a `rows x cols` window.
    pub fn quarter_plane(rows: usize, cols: usize) -> Self {
        RegularLattice {
            top: 0,
            profile: vec![0; rows],
            col_max: cols as i64 - 1,
        }
    }

    /// The staircase lattice of a partition: row `i` starts at
    /// `c - lambda_{r-i}`, with `margin` extra rows and columns of room.
    pub fn from_partition(shape: &PartitionShape, margin: usize) -> Self {
        let r = shape.rows() as i64;
        let c = shape.cols() as i64;
        let m = margin as i64;
        let profile = (0..=r + m)
            .map(|i| {
                if i <= r {
                    c - shape.part_ext((r - i) as i32) as i64
                } else {
                    0
                }
            })
            .collect();
        RegularLattice {
            top: 0,
            profile,
            col_max: c + m,
        }
    }

    /// A random staircase with `rows` rows whose profile lies in `[0, width]`.
    pub fn random<R: Rng>(rng: &mut R, top: i64, rows: usize, width: i64, col_max: i64) -> Self {
        let mut profile: Vec<i64> = (0..rows).map(|_| rng.random_range(0..=width)).collect();
        profile.sort_unstable_by(|a, b| b.cmp(a));
        RegularLattice {
            top,
            profile,
            col_max,
        }
    }

    pub fn top(&self) -> i64 {
        self.top
    }

    pub fn bottom(&self) -> i64 {
        self.top + self.profile.len() as i64 - 1
    }

    pub fn col_max(&self) -> i64 {
        self.col_max
    }

    pub fn col_min(&self) -> i64 {
        self.profile.last().copied().unwrap_or(0)
    }

    pub fn profile(&self) -> &[i64] {
        &self.profile
    }

    pub fn contains(&self, p: Point) -> bool {
        match self.eta(p.i) {
            Some(e) => e <= p.j && p.j <= self.col_max,
            None => false,
        }
    }

    fn eta(&self, i: i64) -> Option<i64> {
        if i < self.top {
            return None;
        }
        self.profile.get((i - self.top) as usize).copied()
    }

    fn require(&self, p: Point) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::OutsideLattice { i: p.i, j: p.j })
        }
    }

    pub fn boundary_class(&self, p: Point) -> Result<BoundaryClass> {
        self.require(p)?;
        Ok(BoundaryClass {
            west: !self.contains(p.west()),
            north: !self.contains(p.north()),
        })
    }

    pub fn is_corner(&self, p: Point) -> bool {
        self.boundary_class(p)
            .map(|b| b.is_corner())
            .unwrap_or(false)
    }

    /// All convex corners in the window.
    pub fn corners(&self) -> Vec<Point> {
        (self.top..=self.bottom())
            .filter_map(|i| {
                let p = Point::new(i, self.eta(i)?);
                self.is_corner(p).then_some(p)
            })
            .collect()
    }

    /// Topmost row meeting column `j`.
    pub fn x_of(&self, j: i64) -> Result<i64> {
        if j > self.col_max {
            return Err(Error::Window(format!("column {j}")));
        }
        (self.top..=self.bottom())
            .find(|&i| self.eta(i).is_some_and(|e| e <= j))
            .ok_or_else(|| Error::Window(format!("column {j}")))
    }

    /// Westmost column of row `i`.
    pub fn y_of(&self, i: i64) -> Result<i64> {
        self.eta(i).ok_or_else(|| Error::Window(format!("row {i}")))
    }

    /// Removes a convex corner by moving its row's west end one step east.
    pub fn delete_corner(&self, p: Point) -> Result<RegularLattice> {
        if !self.is_corner(p) {
            return Err(Error::NotCorner { i: p.i, j: p.j });
        }
        let mut out = self.clone();
        out.profile[(p.i - self.top) as usize] += 1;
        Ok(out)
    }

    /// Offset back to where the diagonal through `p` enters the lattice.
    fn entry_offset(&self, p: Point) -> i64 {
        let mut k = 0;
        while self.contains(p.diag(-k - 1)) {
            k += 1;
        }
        k
    }

    /// Which solution value weighs the vertical edge whose north endpoint is
    /// `north`.
    pub fn edge_label(&self, north: Point) -> Result<EdgeLabel> {
        self.require(north)?;
        self.require(north.south())?;
        let n = self.entry_offset(north);
        let entry = north.diag(-n);
        if !self.contains(entry.west()) {
            return Ok(EdgeLabel::A {
                s: entry.i,
                t: entry.j,
                n,
            });
        }
        let south = north.south();
        let m = self.entry_offset(south);
        let e2 = south.diag(-m);
        if m >= 1 && !self.contains(e2.north()) {
            return Ok(EdgeLabel::B {
                s: e2.i,
                t: e2.j,
                n: m,
            });
        }
        Err(Error::NoWeightRule {
            i: north.i,
            j: north.j,
        })
    }

    /// Weight of the vertical edge below `north`.
    pub fn vertical_weight(&self, sol: &dyn TodaSolution, north: Point) -> Result<Scalar> {
        self.edge_label(north)?.evaluate(sol)
    }

    /// Weight of a unit edge: horizontal edges weigh 1.
    pub fn edge_weight(&self, sol: &dyn TodaSolution, from: Point, to: Point) -> Result<Scalar> {
        self.require(from)?;
        self.require(to)?;
        match (to.i - from.i, to.j - from.j) {
            (0, 1) | (0, -1) => Ok(Scalar::one()),
            (-1, 0) => self.vertical_weight(sol, to),
            (1, 0) => self.vertical_weight(sol, from),
            _ => Err(Error::Window(format!("{from}-{to} is not a unit edge"))),
        }
    }

    pub fn path_weight(&self, sol: &dyn TodaSolution, path: &LatticePath) -> Result<Scalar> {
        let mut w = Scalar::one();
        let mut p = path.start;
        self.require(p)?;
        for step in &path.steps {
            let q = step.apply(p);
            self.require(q)?;
            if *step == Step::North {
                w = &w * &self.vertical_weight(sol, q)?;
            }
            p = q;
        }
        Ok(w)
    }

    /// Sum of path weights over all north/east paths `from -> to`, by dynamic
    /// programming over the rectangle they span.
    pub fn g_sum(&self, sol: &dyn TodaSolution, from: Point, to: Point) -> Result<Scalar> {
        self.require(from)?;
        self.require(to)?;
        if to.i > from.i || to.j < from.j {
            return Ok(Scalar::zero());
        }
        let h = (from.i - to.i + 1) as usize;
        let w = (to.j - from.j + 1) as usize;
        // Row 0 of the table is `from.i`, going north.
        let mut table: Vec<Vec<Scalar>> = vec![vec![Scalar::zero(); w]; h];
        for r in 0..h {
            let i = from.i - r as i64;
            for c in 0..w {
                let p = Point::new(i, from.j + c as i64);
                if !self.contains(p) {
                    continue;
                }
                if r == 0 && c == 0 {
                    table[0][0] = Scalar::one();
                    continue;
                }
                let mut acc = Scalar::zero();
                if c > 0 && !table[r][c - 1].is_zero() {
                    acc = table[r][c - 1].clone();
                }
                if r > 0 && !table[r - 1][c].is_zero() && self.contains(p.south()) {
                    let e = self.vertical_weight(sol, p)?;
                    acc = &acc + &(&table[r - 1][c] * &e);
                }
                table[r][c] = acc;
            }
        }
        Ok(table[h - 1][w - 1].clone())
    }

    /// The same sum by listing every path; a test oracle for [`Self::g_sum`].
    pub fn g_sum_enumerated(
        &self,
        sol: &dyn TodaSolution,
        from: Point,
        to: Point,
    ) -> Result<Scalar> {
        let mut terms = Vec::new();
        for p in self.paths(from, to)? {
            terms.push(self.path_weight(sol, &p)?);
        }
        Ok(terms.into_iter().sum())
    }

    /// Every north/east path `from -> to` inside the lattice.
    pub fn paths(&self, from: Point, to: Point) -> Result<Vec<LatticePath>> {
        self.require(from)?;
        self.require(to)?;
        let mut out = Vec::new();
        if to.i > from.i || to.j < from.j {
            return Ok(out);
        }
        let mut steps = Vec::new();
        self.paths_rec(from, to, &mut steps, &mut |s| {
            out.push(LatticePath::new(from, s.to_vec()))
        });
        Ok(out)
    }

    fn paths_rec(&self, p: Point, to: Point, steps: &mut Vec<Step>, emit: &mut dyn FnMut(&[Step])) {
        if p == to {
            emit(steps);
            return;
        }
        for step in [Step::North, Step::East] {
            let q = step.apply(p);
            if q.i < to.i || q.j > to.j || !self.contains(q) {
                continue;
            }
            steps.push(step);
            self.paths_rec(q, to, steps, emit);
            steps.pop();
        }
    }

    /// Start and end points of the `k`-th path in a non-intersecting family
    /// anchored at `(s, t)`.
    pub fn ni_endpoints(&self, s: i64, t: i64, k: i64) -> Result<(Point, Point)> {
        let start = Point::new(s + k, self.y_of(s)? + k);
        let end = Point::new(self.x_of(t)? + k, t + k);
        Ok((start, end))
    }

    /// Candidate paths for each index of a family anchored at `(s, t)`, with
    /// their sorted vertex lists.
    fn ni_candidates(&self, s: i64, t: i64, n: usize) -> Result<Vec<Vec<Candidate>>> {
        self.require(Point::new(s, t))?;
        let mut candidates = Vec::with_capacity(n);
        for k in 0..n as i64 {
            let (a, b) = self.ni_endpoints(s, t, k)?;
            if !self.contains(a) || !self.contains(b) {
                return Err(Error::Window(format!("endpoints {a} -> {b} of path {k}")));
            }
            let ps = self.paths(a, b)?;
            candidates.push(
                ps.into_iter()
                    .map(|p| {
                        let mut pts = p.points();
                        pts.sort_unstable();
                        (p, pts)
                    })
                    .collect::<Vec<_>>(),
            );
        }
        Ok(candidates)
    }

    /// Calls `visit` on every vertex-disjoint family `(P_0, .., P_{n-1})` with
    /// `P_k` running from `(s+k, y(s)+k)` to `(x(t)+k, t+k)`.
    pub fn for_each_ni_tuple(
        &self,
        s: i64,
        t: i64,
        n: usize,
        visit: &mut dyn FnMut(&[&LatticePath]) -> Result<()>,
    ) -> Result<()> {
        let candidates = self.ni_candidates(s, t, n)?;
        let pts: Vec<Vec<&[Point]>> = candidates
            .iter()
            .map(|c| c.iter().map(|(_, p)| p.as_slice()).collect())
            .collect();
        ni_rec(&pts, &mut Vec::with_capacity(n), &mut |chosen| {
            let ps: Vec<&LatticePath> = chosen
                .iter()
                .enumerate()
                .map(|(m, &c)| &candidates[m][c].0)
                .collect();
            visit(&ps)
        })
    }

    /// Materializes every non-intersecting family; see [`Self::for_each_ni_tuple`].
    pub fn enum_ni_tuples(&self, s: i64, t: i64, n: usize) -> Result<Vec<PathTuple>> {
        let mut out = Vec::new();
        self.for_each_ni_tuple(s, t, n, &mut |ps| {
            out.push(ps.iter().map(|&p| p.clone()).collect());
            Ok(())
        })?;
        Ok(out)
    }

    /// Sum over non-intersecting families of the product of path weights.
    pub fn ni_weight_sum(
        &self,
        sol: &dyn TodaSolution,
        s: i64,
        t: i64,
        n: usize,
    ) -> Result<Scalar> {
        let candidates = self.ni_candidates(s, t, n)?;
        let weights: Vec<Vec<Scalar>> = candidates
            .iter()
            .map(|c| c.iter().map(|(p, _)| self.path_weight(sol, p)).collect())
            .collect::<Result<_>>()?;
        let pts: Vec<Vec<&[Point]>> = candidates
            .iter()
            .map(|c| c.iter().map(|(_, p)| p.as_slice()).collect())
            .collect();
        // Prefix products along the search, so each family costs one multiplication.
        let mut prefix = vec![Scalar::one()];
        let mut total = BalancedSum::default();
        ni_rec_with(&pts, &mut Vec::with_capacity(n), &mut |chosen, leaf| {
            let k = chosen.len();
            prefix.truncate(k);
            let w = &prefix[k - 1] * &weights[k - 1][chosen[k - 1]];
            if leaf {
                total.push(w);
            } else {
                prefix.push(w);
            }
        })?;
        if n == 0 {
            return Ok(Scalar::one());
        }
        Ok(total.finish())
    }
}

/// Streaming sum that adds terms in a balanced tree, keeping one partial
/// sum per level. Operands stay of similar size, which is much cheaper for
/// exact rationals than a running left fold.
#[derive(Default)]
struct BalancedSum {
    levels: Vec<(u32, Scalar)>,
}

impl BalancedSum {
    fn push(&mut self, mut x: Scalar) {
        let mut level = 0;
        while let Some((l, _)) = self.levels.last() {
            if *l != level {
                break;
            }
            let (_, y) = self.levels.pop().unwrap();
            x = &y + &x;
            level += 1;
        }
        self.levels.push((level, x));
    }

    fn finish(self) -> Scalar {
        self.levels.into_iter().map(|(_, s)| s).sum()
    }
}

/// A path with its vertices in sorted order.
type Candidate = (LatticePath, Vec<Point>);

fn disjoint(a: &[Point], b: &[Point]) -> bool {
    let (mut x, mut y) = (0, 0);
    while x < a.len() && y < b.len() {
        match a[x].cmp(&b[y]) {
            std::cmp::Ordering::Less => x += 1,
            std::cmp::Ordering::Greater => y += 1,
            std::cmp::Ordering::Equal => return false,
        }
    }
    true
}

fn ni_rec(
    pts: &[Vec<&[Point]>],
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]) -> Result<()>,
) -> Result<()> {
    let k = chosen.len();
    if k == pts.len() {
        return visit(chosen);
    }
    for idx in 0..pts[k].len() {
        if chosen
            .iter()
            .enumerate()
            .all(|(m, &c)| disjoint(pts[m][c], pts[k][idx]))
        {
            chosen.push(idx);
            ni_rec(pts, chosen, visit)?;
            chosen.pop();
        }
    }
    Ok(())
}

/// Like [`ni_rec`], but reports every accepted partial family; `leaf` marks
/// complete ones.
fn ni_rec_with(
    pts: &[Vec<&[Point]>],
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize], bool),
) -> Result<()> {
    let k = chosen.len();
    for idx in 0..pts.get(k).map_or(0, Vec::len) {
        if chosen
            .iter()
            .enumerate()
            .all(|(m, &c)| disjoint(pts[m][c], pts[k][idx]))
        {
            chosen.push(idx);
            visit(chosen, k + 1 == pts.len());
            ni_rec_with(pts, chosen, visit)?;
            chosen.pop();
        }
    }
    Ok(())
}

impl Serialize for RegularLattice {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("RegularLattice", 3)?;
        st.serialize_field("rowWindow", &[self.top, self.bottom()])?;
        st.serialize_field("profile", &self.profile)?;
        st.serialize_field("colWindow", &[self.col_min(), self.col_max])?;
        st.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    North,
    East,
}

impl Step {
    pub fn apply(self, p: Point) -> Point {
        match self {
            Step::North => p.north(),
            Step::East => p.east(),
        }
    }

    pub fn letter(self) -> char {
        match self {
            Step::North => 'N',
            Step::East => 'E',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    pub start: Point,
    pub steps: Vec<Step>,
}

pub type PathTuple = Vec<LatticePath>;

impl LatticePath {
    pub fn new(start: Point, steps: Vec<Step>) -> Self {
        LatticePath { start, steps }
    }

    /// Parses a step word such as `"NNEEN"`.
    pub fn from_word(start: Point, word: &str) -> Result<Self> {
        let steps = word
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                'N' | 'n' => Ok(Step::North),
                'E' | 'e' => Ok(Step::East),
                other => Err(Error::Usage(format!("bad step {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LatticePath { start, steps })
    }

    pub fn end(&self) -> Point {
        self.steps.iter().fold(self.start, |p, s| s.apply(p))
    }

    /// Every vertex visited, starting point included.
    pub fn points(&self) -> Vec<Point> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut p = self.start;
        out.push(p);
        for s in &self.steps {
            p = s.apply(p);
            out.push(p);
        }
        out
    }

    pub fn word(&self) -> String {
        self.steps.iter().map(|s| s.letter()).collect()
    }

    pub fn shifted(&self, k: i64) -> LatticePath {
        LatticePath {
            start: self.start.diag(k),
            steps: self.steps.clone(),
        }
    }
}

impl Serialize for LatticePath {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("LatticePath", 2)?;
        st.serialize_field("start", &[self.start.i, self.start.j])?;
        st.serialize_field("steps", &self.word())?;
        st.end()
    }
}
