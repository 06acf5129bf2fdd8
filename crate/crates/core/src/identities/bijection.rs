use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::lattice::{LatticePath, PathTuple, Point, RegularLattice, Step};
use crate::shapes::{PartitionShape, RppTable};

/// The lattice the path families of `shape` with `n` paths live on.
pub fn partition_lattice(shape: &PartitionShape, n: u32) -> RegularLattice {
    RegularLattice::from_partition(shape, n as usize)
}

fn check_tuple(
    lattice: &RegularLattice,
    shape: &PartitionShape,
    tuple: &[LatticePath],
) -> Result<()> {
    let r = shape.rows() as i64;
    let c = shape.cols() as i64;
    let mut seen: HashSet<Point> = HashSet::new();
    for (k, p) in tuple.iter().enumerate() {
        let (a, b) = lattice.ni_endpoints(r, c, k as i64)?;
        if p.start != a || p.end() != b {
            return Err(Error::Bijection(format!(
                "path {k} runs {} -> {}, expected {a} -> {b}",
                p.start,
                p.end()
            )));
        }
        for q in p.points() {
            if !lattice.contains(q) {
                return Err(Error::Bijection(format!(
                    "path {k} leaves the lattice at {q}"
                )));
            }
            if !seen.insert(q) {
                return Err(Error::Bijection(format!(
                    "path {k} meets an earlier path at {q}"
                )));
            }
        }
    }
    Ok(())
}

/// Column of each north step of `path`: entry `i` is where it climbs from
/// row `i + 1` to row `i`, for rows `0..rows`.
fn climb_columns(path: &LatticePath, rows: usize) -> Vec<i64> {
    let mut h = vec![0; rows];
    let mut p = path.start;
    for s in &path.steps {
        let q = s.apply(p);
        if *s == Step::North && (0..rows as i64).contains(&q.i) {
            h[q.i as usize] = q.j;
        }
        p = q;
    }
    h
}

/// Reads off the filling from a non-intersecting family.
///
/// Path `k` is moved back by `(k, k)`; a cell of the strip between the lattice
/// boundary and column `c` holds the number of moved paths passing east of it,
/// and the strip is turned half a revolution to give the shape.
pub fn lp_to_rpp(tuple: &[LatticePath], shape: &PartitionShape, n: u32) -> Result<RppTable> {
    if tuple.len() != n as usize {
        return Err(Error::Bijection(format!(
            "{} paths for bound {n}",
            tuple.len()
        )));
    }
    let lattice = partition_lattice(shape, n);
    check_tuple(&lattice, shape, tuple)?;
    let r = shape.rows();
    let c = shape.cols() as i64;
    let climbs: Vec<Vec<i64>> = tuple
        .iter()
        .enumerate()
        .map(|(k, p)| climb_columns(&p.shifted(-(k as i64)), r))
        .collect();
    let mut rows = Vec::with_capacity(r);
    for big_i in 1..=r {
        let i = r - big_i;
        let row = (1..=shape.part(big_i))
            .map(|big_j| {
                let j = c - big_j as i64;
                climbs.iter().filter(|h| j < h[i]).count() as u32
            })
            .collect();
        rows.push(row);
    }
    RppTable::new(shape.clone(), n, rows).map_err(|e| Error::Bijection(e.to_string()))
}

/// Inverse of [`lp_to_rpp`].
pub fn rpp_to_lp(pi: &RppTable, shape: &PartitionShape, n: u32) -> Result<PathTuple> {
    if pi.shape() != shape || pi.bound() > n || !pi.is_valid() {
        return Err(Error::Bijection(format!(
            "filling {:?} is not in RPP({shape}, {n})",
            pi.rows()
        )));
    }
    let lattice = partition_lattice(shape, n);
    let r = shape.rows();
    let c = shape.cols() as i64;
    let value = |i: usize, j: i64| pi.rows()[r - i - 1][(c - j - 1) as usize];
    let mut out = Vec::with_capacity(n as usize);
    for k in 0..n {
        let mut steps = Vec::new();
        let mut col = 0;
        for i in (0..r).rev() {
            let eta = lattice.y_of(i as i64)?;
            let h = eta + (eta..c).filter(|&j| value(i, j) >= n - k).count() as i64;
            steps.extend(std::iter::repeat_n(Step::East, (h - col) as usize));
            steps.push(Step::North);
            col = h;
        }
        steps.extend(std::iter::repeat_n(Step::East, (c - col) as usize));
        let moved = LatticePath::new(Point::new(r as i64, 0), steps);
        out.push(moved.shifted(k as i64));
    }
    Ok(out)
}
