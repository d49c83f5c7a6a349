// Copyright 2026 The lozenge developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// http://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or http://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.

//! Tilings as families of lozenge paths, and the plane partitions they
//! encode.
//!
//! # First family
//!
//! In a tiling of `H_{x,t,h}(a)` the lozenges with a horizontal edge, the
//! right and left ones, chain into `l` disjoint paths. Path `i` starts at
//! the bottom of the undented level `a_i` and climbs one row per lozenge
//! to the north side. Along the way it crosses
//! `t+(k+1)a_i-k-i` right lozenges and `x+h-a_i+i` left ones. Every other
//! lozenge is vertical.
//!
//! Travelling from the start, a right lozenge preceded by `n` left ones
//! carries the path label `i+n` and the partition entry `a_i-i+n`. Row `j`
//! of the partition lists the entries of path `l-j+1` in decreasing order.
//! The image is exactly the set of plane partitions of shape
//! `(t+(k+1)a_l-k-l, ..., t+(k+1)a_1-k-1)` whose row `j` has entries in
//! `[a_{l-j+1}-l+j, x+h]`, rows and columns weakly decreasing.
//!
//! # Second family
//!
//! In a tiling of `H_{0,0,h}(a)` the lozenges with an edge parallel to the
//! right edge of an up triangle, the left and vertical ones, chain into `h`
//! paths. Path `j` starts at the dent of level `b_j`, moves one column
//! east per lozenge, and leaves through the north-east side after
//! `(k+1)(b_j-1)` lozenges, `b_j-j` of them left. Every other lozenge is
//! right.
//!
//! A left lozenge preceded by `n` vertical ones is labelled `n`. Row `i`
//! of the partition lists the labels of path `h-i+1` in decreasing order,
//! so the shape is `lambda = (b_h-h, ..., b_1-1)`. The image is the set of
//! arrays of that shape with
//!
//! 1. rows weakly decreasing;
//! 2. the `q`-th entry from the right of each row at least `kq`;
//! 3. the entries of the row for path `j` at most `k(b_j-1)+j-1`;
//! 4. `row_i[c] - row_{i+1}[c] >= k(lambda_i - lambda_{i+1} + 1) + 1`
//!    wherever both entries exist.
//!
//! For `k = 0` these are the column-strict plane partitions with entries
//! below `h`. [`cor2_literal_constraints`] encodes the other reading of
//! the same class: parts at most `h+k(h+l)`, property 2, and consecutive
//! parts of row `i` differing by at least `(lambda_i - lambda_{i+1})k`.
//! The two readings do not agree in general.

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::closedform::{FormulaError, TiltedParams};
use crate::exactnum::BigInt;
use crate::lattice::{
    build_tilted_region, tilted_dents, LatticeError, Lozenge, LozengeOrientation, Region, Tiling,
    TriCell,
};

/// Errors raised by the bijections.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BijectionError {
    /// The lozenges do not tile the expected region, or break a path.
    #[error("invalid tiling: {0}")]
    InvalidTiling(String),
    /// The array violates the constraints of the partition class.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    /// The parameters are not valid.
    #[error(transparent)]
    Params(#[from] FormulaError),
}

impl From<LatticeError> for BijectionError {
    fn from(e: LatticeError) -> Self {
        BijectionError::InvalidTiling(e.to_string())
    }
}

/// An array of integer rows whose lengths weakly decrease.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PlanePartition {
    shape: Vec<usize>,
    rows: Vec<Vec<i64>>,
}

impl PlanePartition {
    /// Wraps rows, recording their lengths as the shape.
    ///
    /// # Errors
    ///
    /// Returns [`BijectionError::InvalidPartition`] if the row lengths
    /// increase somewhere.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, BijectionError> {
        let shape: Vec<usize> = rows.iter().map(Vec::len).collect();
        if shape.windows(2).any(|w| w[0] < w[1]) {
            return Err(BijectionError::InvalidPartition(format!(
                "row lengths {shape:?} are not weakly decreasing"
            )));
        }
        Ok(PlanePartition { shape, rows })
    }

    /// The row lengths.
    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    /// The rows.
    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Whether the rows and the columns weakly decrease.
    pub fn is_plane_partition(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] >= w[1]));
        let cols_ok = self
            .rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(lo, hi)| lo <= hi));
        rows_ok && cols_ok
    }
}

/// A chain of lozenges from a start on the staircase side to the boundary,
/// with the labels of its marked lozenges in travel order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LozengePath {
    /// Index of the path in its family, from 1.
    pub index: usize,
    /// The lozenges in travel order.
    pub lozenges: Vec<Lozenge>,
    /// Labels of the marked lozenges in travel order.
    pub labels: Vec<i64>,
}

/// Per-cell constraints describing a class of integer arrays of a fixed
/// shape.
///
/// An array `v` belongs to the class when, for every cell,
/// `lower[i][c] <= v[i][c] <= upper[i][c]`,
/// `v[i][c] - v[i][c+1] >= row_gap[i]` and
/// `v[i][c] - v[i+1][c] >= column_gap[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionClass {
    /// Row lengths, weakly decreasing.
    pub shape: Vec<usize>,
    /// Per-cell lower bounds.
    pub lower: Vec<Vec<i64>>,
    /// Per-cell upper bounds.
    pub upper: Vec<Vec<i64>>,
    /// Minimal drop between neighbours in a row, per row.
    pub row_gap: Vec<i64>,
    /// Minimal drop from row `i` to row `i+1` in a column, per row `i`.
    pub column_gap: Vec<i64>,
}

impl PartitionClass {
    fn column_height(&self, c: usize) -> usize {
        self.shape.iter().filter(|&&len| len > c).count()
    }

    /// Checks an array against the class.
    ///
    /// # Errors
    ///
    /// Returns [`BijectionError::InvalidPartition`] naming the first
    /// violated constraint.
    pub fn check(&self, pp: &PlanePartition) -> Result<(), BijectionError> {
        let bad = |msg: String| Err(BijectionError::InvalidPartition(msg));
        if pp.shape() != self.shape.as_slice() {
            return bad(format!(
                "shape {:?} differs from {:?}",
                pp.shape(),
                self.shape
            ));
        }
        for (i, row) in pp.rows().iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v < self.lower[i][c] || v > self.upper[i][c] {
                    return bad(format!(
                        "entry ({i},{c}) = {v} outside [{}, {}]",
                        self.lower[i][c], self.upper[i][c]
                    ));
                }
                if c + 1 < row.len() && v - row[c + 1] < self.row_gap[i] {
                    return bad(format!("row {i} drops by less than {}", self.row_gap[i]));
                }
                if let Some(&below) = pp.rows().get(i + 1).and_then(|r| r.get(c)) {
                    if v - below < self.column_gap[i] {
                        return bad(format!(
                            "column {c} drops by less than {} below row {i}",
                            self.column_gap[i]
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Whether the array belongs to the class.
    pub fn accepts(&self, pp: &PlanePartition) -> bool {
        self.check(pp).is_ok()
    }

    /// The number of arrays in the class, by a column-by-column search that
    /// memoizes the previous column.
    pub fn count(&self) -> BigInt {
        let width = self.shape.first().copied().unwrap_or(0);
        let mut memo = HashMap::new();
        self.count_from(0, width, None, &mut memo)
    }

    fn count_from(
        &self,
        c: usize,
        width: usize,
        prev: Option<&[i64]>,
        memo: &mut HashMap<(usize, Vec<i64>), BigInt>,
    ) -> BigInt {
        if c == width {
            return BigInt::one();
        }
        let key = (c, prev.map(<[i64]>::to_vec).unwrap_or_default());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let mut total = BigInt::zero();
        for col in self.columns(c, prev) {
            total += self.count_from(c + 1, width, Some(&col), memo);
        }
        memo.insert(key, total.clone());
        total
    }

    fn columns(&self, c: usize, prev: Option<&[i64]>) -> Vec<Vec<i64>> {
        let height = self.column_height(c);
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(height);
        self.fill_column(c, height, prev, &mut cur, &mut out);
        out
    }

    fn fill_column(
        &self,
        c: usize,
        height: usize,
        prev: Option<&[i64]>,
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        let i = cur.len();
        if i == height {
            out.push(cur.clone());
            return;
        }
        let mut hi = self.upper[i][c];
        if let Some(p) = prev {
            hi = hi.min(p[i] - self.row_gap[i]);
        }
        if i > 0 {
            hi = hi.min(cur[i - 1] - self.column_gap[i - 1]);
        }
        for v in self.lower[i][c]..=hi {
            cur.push(v);
            self.fill_column(c, height, prev, cur, out);
            cur.pop();
        }
    }

    /// Every array of the class, in lexicographic order of columns, up to
    /// `limit` of them.
    pub fn enumerate(&self, limit: usize) -> Vec<PlanePartition> {
        let width = self.shape.first().copied().unwrap_or(0);
        let mut out = Vec::new();
        let mut cols = Vec::new();
        self.enumerate_from(0, width, &mut cols, &mut out, limit);
        out
    }

    fn enumerate_from(
        &self,
        c: usize,
        width: usize,
        cols: &mut Vec<Vec<i64>>,
        out: &mut Vec<PlanePartition>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        if c == width {
            let rows = self
                .shape
                .iter()
                .enumerate()
                .map(|(i, &len)| (0..len).map(|cc| cols[cc][i]).collect())
                .collect();
            out.push(PlanePartition::new(rows).expect("class shapes are partitions"));
            return;
        }
        let prev = cols.last().cloned();
        for col in self.columns(c, prev.as_deref()) {
            cols.push(col);
            self.enumerate_from(c + 1, width, cols, out, limit);
            cols.pop();
        }
    }
}

fn cor1_start(p: &TiltedParams, i: usize) -> (i64, i64) {
    let ai = p.a()[i - 1];
    let s = p.l() + p.x() + p.h() - ai;
    let start = p.x() + p.h() + p.t() + p.k() * (ai - 1);
    (start, s)
}

/// The shape `(t+(k+1)a_l-k-l, ..., t+(k+1)a_1-k-1)` of the first family.
pub fn cor1_shape(p: &TiltedParams) -> Vec<usize> {
    let l = p.a().len();
    (1..=l)
        .rev()
        .map(|i| (p.t() + (p.k() + 1) * p.a()[i - 1] - p.k() - i as i64) as usize)
        .collect()
}

/// The plane partitions of the first family: shape [`cor1_shape`], row
/// `j` bounded by `[a_{l-j+1}-l+j, x+h]`, rows and columns weakly
/// decreasing.
pub fn cor1_constraints(p: &TiltedParams) -> PartitionClass {
    let l = p.a().len();
    let shape = cor1_shape(p);
    let lower = (1..=l)
        .map(|j| vec![p.a()[l - j] - (l - j + 1) as i64; shape[j - 1]])
        .collect();
    let upper = shape.iter().map(|&len| vec![p.x() + p.h(); len]).collect();
    PartitionClass {
        lower,
        upper,
        row_gap: vec![0; l],
        column_gap: vec![0; l],
        shape,
    }
}

/// The `l` lozenge paths of a tiling of `H_{x,t,h}(a)`, path `i` starting
/// at level `a_i`. Labels follow the rule "index plus number of left
/// lozenges met so far".
///
/// # Errors
///
/// Returns [`BijectionError::InvalidTiling`] if the lozenges do not tile
/// the region or a path runs into a vertical lozenge.
pub fn cor1_paths(p: &TiltedParams, tiling: &Tiling) -> Result<Vec<LozengePath>, BijectionError> {
    tiling.validate(&build_tilted_region(p))?;
    let map = tiling.cell_map();
    let mut paths = Vec::new();
    for i in 1..=p.a().len() {
        let (start, s) = cor1_start(p, i);
        let (mut r, mut c) = (start - 1, s - start + 1);
        let mut path = LozengePath {
            index: i,
            lozenges: Vec::new(),
            labels: Vec::new(),
        };
        let mut lefts = 0;
        while r >= 0 {
            let cell = TriCell::up(r as i32, c as i32);
            let lz = map.get(&cell).ok_or_else(|| {
                BijectionError::InvalidTiling(format!("path {i} leaves the region at {cell}"))
            })?;
            match lz.orientation {
                LozengeOrientation::Right => {
                    path.labels.push(i as i64 + lefts);
                    c += 1;
                }
                LozengeOrientation::Left => lefts += 1,
                LozengeOrientation::Vertical => {
                    return Err(BijectionError::InvalidTiling(format!(
                        "path {i} meets a vertical lozenge at {cell}"
                    )))
                }
            }
            path.lozenges.push(*lz);
            r -= 1;
        }
        paths.push(path);
    }
    Ok(paths)
}

/// The plane partition of a tiling of `H_{x,t,h}(a)`.
///
/// # Errors
///
/// Returns [`BijectionError::InvalidTiling`] if the lozenges do not tile
/// the region.
///
/// # Examples
///
/// ```
/// use lozenge::bijection::{pp_to_tiling_cor1, tiling_to_pp_cor1};
/// use lozenge::closedform::TiltedParams;
/// use lozenge::lattice::build_tilted_region;
/// use lozenge::oracle::enumerate_tilings;
///
/// let p = TiltedParams::new(1, 1, 1, 0, vec![1]).unwrap();
/// for t in enumerate_tilings(&build_tilted_region(&p), 10).unwrap() {
///     let pp = tiling_to_pp_cor1(&p, &t).unwrap();
///     assert_eq!(pp_to_tiling_cor1(&p, &pp).unwrap(), t);
/// }
/// ```
pub fn tiling_to_pp_cor1(
    p: &TiltedParams,
    tiling: &Tiling,
) -> Result<PlanePartition, BijectionError> {
    let paths = cor1_paths(p, tiling)?;
    let rows = paths
        .iter()
        .rev()
        .map(|path| {
            let i = path.index as i64;
            let shift = p.a()[path.index - 1] - 2 * i;
            path.labels.iter().rev().map(|v| v + shift).collect()
        })
        .collect();
    PlanePartition::new(rows)
}

fn place(
    region: &Region,
    used: &mut HashMap<TriCell, Lozenge>,
    lz: Lozenge,
) -> Result<(), BijectionError> {
    for cell in lz.cells() {
        if !region.contains(&cell) || used.insert(cell, lz).is_some() {
            return Err(BijectionError::InvalidPartition(format!(
                "paths collide or leave the region at {cell}"
            )));
        }
    }
    Ok(())
}

fn fill_rest(
    region: &Region,
    mut used: HashMap<TriCell, Lozenge>,
    o: LozengeOrientation,
) -> Result<Tiling, BijectionError> {
    for cell in region.iter().filter(|c| c.is_up()) {
        if used.contains_key(cell) {
            continue;
        }
        place(region, &mut used, Lozenge::from_cell(*cell, o))?;
    }
    if used.len() != region.len() {
        return Err(BijectionError::InvalidPartition(
            "the paths leave cells that cannot be covered".into(),
        ));
    }
    let mut lozenges: Vec<Lozenge> = used.into_values().collect();
    lozenges.sort_unstable();
    lozenges.dedup();
    Ok(Tiling::new(lozenges))
}

/// The tiling of `H_{x,t,h}(a)` encoded by a plane partition of the first
/// family.
///
/// # Errors
///
/// Returns [`BijectionError::InvalidPartition`] if `pp` is outside
/// [`cor1_constraints`].
pub fn pp_to_tiling_cor1(p: &TiltedParams, pp: &PlanePartition) -> Result<Tiling, BijectionError> {
    cor1_constraints(p).check(pp)?;
    let region = build_tilted_region(p);
    let l = p.a().len();
    let mut used = HashMap::new();
    for i in 1..=l {
        let lo = p.a()[i - 1] - i as i64;
        let mut entries = pp.rows()[l - i].clone();
        entries.reverse();
        let (start, s) = cor1_start(p, i);
        let (mut r, mut c) = (start - 1, s - start + 1);
        let mut lefts_before = entries.iter().map(|v| v - lo).peekable();
        let mut lefts = 0;
        while r >= 0 {
            let cell = TriCell::up(r as i32, c as i32);
            if lefts_before.peek() == Some(&lefts) {
                lefts_before.next();
                place(
                    &region,
                    &mut used,
                    Lozenge::from_cell(cell, LozengeOrientation::Right),
                )?;
                c += 1;
            } else {
                place(
                    &region,
                    &mut used,
                    Lozenge::from_cell(cell, LozengeOrientation::Left),
                )?;
                lefts += 1;
            }
            r -= 1;
        }
    }
    fill_rest(&region, used, LozengeOrientation::Vertical)
}

/// Number of plane partitions in [`cor1_constraints`].
///
/// # Examples
///
/// ```
/// use lozenge::bijection::enumerate_pp_cor1;
/// use lozenge::closedform::TiltedParams;
///
/// let p = TiltedParams::new(1, 1, 1, 0, vec![1]).unwrap();
/// assert_eq!(enumerate_pp_cor1(&p), 2.into());
/// ```
pub fn enumerate_pp_cor1(p: &TiltedParams) -> BigInt {
    cor1_constraints(p).count()
}

fn cor2_params(h: i64, l: i64, k: i64, a: &[i64]) -> Result<TiltedParams, BijectionError> {
    if l != a.len() as i64 {
        return Err(BijectionError::Params(FormulaError::InvalidParams(
            format!("l = {l} but {} levels were given", a.len()),
        )));
    }
    Ok(TiltedParams::new(k, 0, 0, h, a.to_vec())?)
}

/// The shape `(b_h-h, ..., b_1-1)` of the second family.
pub fn cor2_shape(p: &TiltedParams) -> Vec<usize> {
    let b = p.dent_levels();
    (1..=b.len())
        .rev()
        .map(|j| (b[j - 1] - j as i64) as usize)
        .collect()
}

/// The arrays encoding tilings of `H_{0,0,h}(a)`: shape [`cor2_shape`],
/// rows weakly decreasing, the `q`-th entry from the right at least `kq`,
/// entries of the row for path `j` at most `k(b_j-1)+j-1`, and a drop of at
/// least `k(lambda_i-lambda_{i+1}+1)+1` down each column.
///
/// # Errors
///
/// Returns [`BijectionError::Params`] on invalid parameters.
pub fn cor2_constraints(
    h: i64,
    l: i64,
    k: i64,
    a: &[i64],
) -> Result<PartitionClass, BijectionError> {
    let p = cor2_params(h, l, k, a)?;
    let b = p.dent_levels();
    let shape = cor2_shape(&p);
    let hu = h as usize;
    let lower = shape
        .iter()
        .map(|&len| (0..len).map(|c| k * (len - c) as i64).collect())
        .collect();
    let upper = (1..=hu)
        .map(|i| {
            let j = hu - i + 1;
            vec![k * (b[j - 1] - 1) + j as i64 - 1; shape[i - 1]]
        })
        .collect();
    let column_gap = (0..hu)
        .map(|i| {
            let next = shape.get(i + 1).copied().unwrap_or(0);
            k * ((shape[i] - next) as i64 + 1) + 1
        })
        .collect();
    Ok(PartitionClass {
        lower,
        upper,
        row_gap: vec![0; hu],
        column_gap,
        shape,
    })
}

/// The other reading of the second family: shape [`cor2_shape`], entries
/// in `[0, h+k(h+l)]`, rows and columns weakly decreasing, the `q`-th
/// entry from the right at least `kq`, and consecutive entries of row `i`
/// differing by at least `(lambda_i-lambda_{i+1})k`.
///
/// # Errors
///
/// Returns [`BijectionError::Params`] on invalid parameters.
pub fn cor2_literal_constraints(
    h: i64,
    l: i64,
    k: i64,
    a: &[i64],
) -> Result<PartitionClass, BijectionError> {
    let p = cor2_params(h, l, k, a)?;
    let shape = cor2_shape(&p);
    let hu = h as usize;
    let lower = shape
        .iter()
        .map(|&len| (0..len).map(|c| k * (len - c) as i64).collect())
        .collect();
    let upper = shape
        .iter()
        .map(|&len| vec![h + k * (h + l); len])
        .collect();
    let row_gap = (0..hu)
        .map(|i| {
            let next = shape.get(i + 1).copied().unwrap_or(0);
            (shape[i] - next) as i64 * k
        })
        .collect();
    Ok(PartitionClass {
        lower,
        upper,
        row_gap,
        column_gap: vec![0; hu],
        shape,
    })
}

/// The `h` lozenge paths of a tiling of `H_{0,0,h}(a)`, path `j` starting
/// at the dent of level `b_j`. A left lozenge is labelled by the number of
/// vertical lozenges met before it.
///
/// # Errors
///
/// Returns [`BijectionError::InvalidTiling`] if the lozenges do not tile
/// the region or a path runs into a right lozenge.
pub fn cor2_paths(
    h: i64,
    l: i64,
    k: i64,
    a: &[i64],
    tiling: &Tiling,
) -> Result<Vec<LozengePath>, BijectionError> {
    let p = cor2_params(h, l, k, a)?;
    let region = build_tilted_region(&p);
    tiling.validate(&region)?;
    let map = tiling.cell_map();
    let mut paths = Vec::new();
    for (j, dent) in tilted_dents(&p).into_iter().enumerate() {
        let mut cell = TriCell::down(dent.row, dent.col);
        let mut path = LozengePath {
            index: j + 1,
            lozenges: Vec::new(),
            labels: Vec::new(),
        };
        let mut verticals = 0;
        while let Some(lz) = map.get(&cell) {
            match lz.orientation {
                LozengeOrientation::Vertical => {
                    verticals += 1;
                    cell = TriCell::down(cell.row - 1, cell.col + 1);
                }
                LozengeOrientation::Left => {
                    path.labels.push(verticals);
                    cell = TriCell::down(cell.row, cell.col + 1);
                }
                LozengeOrientation::Right => {
                    return Err(BijectionError::InvalidTiling(format!(
                        "path {} meets a right lozenge at {cell}",
                        j + 1
                    )))
                }
            }
            path.lozenges.push(*lz);
        }
        paths.push(path);
    }
    Ok(paths)
}

/// The array of a tiling of `H_{0,0,h}(a)`: row `i` holds the labels of
/// path `h-i+1` in decreasing order.
///
/// # Errors
///
/// Returns [`BijectionError::InvalidTiling`] if the lozenges do not tile
/// the region.
pub fn tiling_to_pp_cor2(
    h: i64,
    l: i64,
    k: i64,
    a: &[i64],
    tiling: &Tiling,
) -> Result<PlanePartition, BijectionError> {
    let paths = cor2_paths(h, l, k, a, tiling)?;
    let rows = paths
        .iter()
        .rev()
        .map(|path| path.labels.iter().rev().copied().collect())
        .collect();
    PlanePartition::new(rows)
}

/// The tiling of `H_{0,0,h}(a)` encoded by an array of
/// [`cor2_constraints`].
///
/// # Errors
///
/// Returns [`BijectionError::InvalidPartition`] if `pp` is outside the
/// class.
pub fn pp_to_tiling_cor2(
    h: i64,
    l: i64,
    k: i64,
    a: &[i64],
    pp: &PlanePartition,
) -> Result<Tiling, BijectionError> {
    cor2_constraints(h, l, k, a)?.check(pp)?;
    let p = cor2_params(h, l, k, a)?;
    let region = build_tilted_region(&p);
    let b = p.dent_levels();
    let hu = h as usize;
    let mut used = HashMap::new();
    for (j, dent) in tilted_dents(&p).into_iter().enumerate() {
        let mut labels = pp.rows()[hu - j - 1].clone();
        labels.reverse();
        let steps = (k + 1) * (b[j] - 1);
        let mut cell = TriCell::down(dent.row, dent.col);
        let mut next_label = labels.into_iter().peekable();
        let mut verticals = 0;
        for _ in 0..steps {
            if next_label.peek() == Some(&verticals) {
                next_label.next();
                place(
                    &region,
                    &mut used,
                    Lozenge::from_cell(cell, LozengeOrientation::Left),
                )?;
                cell = TriCell::down(cell.row, cell.col + 1);
            } else {
                place(
                    &region,
                    &mut used,
                    Lozenge::from_cell(cell, LozengeOrientation::Vertical),
                )?;
                verticals += 1;
                cell = TriCell::down(cell.row - 1, cell.col + 1);
            }
        }
    }
    fill_rest(&region, used, LozengeOrientation::Right)
}

/// Number of arrays in [`cor2_constraints`].
///
/// # Errors
///
/// Returns [`BijectionError::Params`] on invalid parameters.
///
/// # Examples
///
/// ```
/// use lozenge::bijection::enumerate_pp_cor2;
///
/// assert_eq!(enumerate_pp_cor2(1, 0, 2, &[1, 2]).unwrap(), 1.into());
/// assert_eq!(enumerate_pp_cor2(2, 2, 2, &[1, 2]).unwrap(), 6.into());
/// ```
pub fn enumerate_pp_cor2(k: i64, h: i64, l: i64, a: &[i64]) -> Result<BigInt, BijectionError> {
    Ok(cor2_constraints(h, l, k, a)?.count())
}

/// Number of arrays in [`cor2_literal_constraints`].
///
/// # Errors
///
/// Returns [`BijectionError::Params`] on invalid parameters.
pub fn enumerate_pp_cor2_literal(
    k: i64,
    h: i64,
    l: i64,
    a: &[i64],
) -> Result<BigInt, BijectionError> {
    Ok(cor2_literal_constraints(h, l, k, a)?.count())
}
