// Copyright 2026 The lozenge developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// http://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or http://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.

//! Regions of the triangular lattice and their lozenge tilings.
//!
//! # Coordinates
//!
//! Lattice vertices are pairs `(col, row)`, rows growing downwards. A vertex
//! `(c, r)` sits at the Cartesian point `(c + r/2, r * sqrt(3)/2)` with the
//! y axis pointing down, so rows are horizontal and the north side of every
//! region is on top.
//!
//! - `Up(r, c)` is the triangle with vertices `(c, r)`, `(c-1, r+1)`,
//!   `(c, r+1)`;
//! - `Down(r, c)` is the triangle with vertices `(c, r)`, `(c+1, r)`,
//!   `(c, r+1)`.
//!
//! Within a row the cells read `... Down(r, c-1), Up(r, c), Down(r, c),
//! Up(r, c+1) ...` from left to right, which is the derived ordering of
//! [`TriCell`]. The "strip" of a cell is `col + row`; both triangles
//! `Up(r, c)` and `Down(r, c)` lie between the lines `col + row = c + r`
//! and `col + row = c + r + 1`.
//!
//! # Lozenges
//!
//! A lozenge is an up triangle glued to a down triangle. Its orientation
//! follows the shape:
//!
//! - [`LozengeOrientation::Right`]: `Up(r, c) + Down(r, c)`, horizontal top
//!   and bottom with the top shifted right;
//! - [`LozengeOrientation::Left`]: `Down(r, c) + Up(r, c+1)`, horizontal top
//!   and bottom with the top shifted left;
//! - [`LozengeOrientation::Vertical`]: `Up(r-1, c+1) + Down(r, c)`, two
//!   triangles stacked across a horizontal edge.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::closedform::{HalvedHexParams, HexParams, SemiHexParams, TiltedParams};

/// Errors raised by region operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    /// Forced-lozenge removal left a cell with no available partner.
    #[error("region has no tiling: cell {0} cannot be covered")]
    Untileable(TriCell),
    /// A lozenge set does not tile the given region.
    #[error("invalid tiling: {0}")]
    InvalidTiling(String),
}

/// Orientation of a unit triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Orientation {
    /// Apex on top.
    #[serde(rename = "U")]
    Up,
    /// Apex at the bottom.
    #[serde(rename = "D")]
    Down,
}

/// One unit triangle, addressed by row, column and orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "(i32, i32, Orientation)", from = "(i32, i32, Orientation)")]
pub struct TriCell {
    /// Row, growing downwards.
    pub row: i32,
    /// Column inside the row.
    pub col: i32,
    /// Up or down.
    pub orientation: Orientation,
}

impl From<TriCell> for (i32, i32, Orientation) {
    fn from(c: TriCell) -> Self {
        (c.row, c.col, c.orientation)
    }
}

impl From<(i32, i32, Orientation)> for TriCell {
    fn from((row, col, orientation): (i32, i32, Orientation)) -> Self {
        TriCell {
            row,
            col,
            orientation,
        }
    }
}

impl fmt::Display for TriCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let o = match self.orientation {
            Orientation::Up => "U",
            Orientation::Down => "D",
        };
        write!(f, "{}({},{})", o, self.row, self.col)
    }
}

/// A lattice vertex `(col, row)`.
pub type Vertex = (i32, i32);

impl TriCell {
    /// The up triangle `Up(row, col)`.
    pub const fn up(row: i32, col: i32) -> Self {
        TriCell {
            row,
            col,
            orientation: Orientation::Up,
        }
    }

    /// The down triangle `Down(row, col)`.
    pub const fn down(row: i32, col: i32) -> Self {
        TriCell {
            row,
            col,
            orientation: Orientation::Down,
        }
    }

    /// Whether the cell points up.
    pub fn is_up(&self) -> bool {
        self.orientation == Orientation::Up
    }

    /// The strip index `col + row`.
    pub fn strip(&self) -> i32 {
        self.col + self.row
    }

    /// The three corners of the triangle.
    pub fn vertices(&self) -> [Vertex; 3] {
        let (r, c) = (self.row, self.col);
        match self.orientation {
            Orientation::Up => [(c, r), (c - 1, r + 1), (c, r + 1)],
            Orientation::Down => [(c, r), (c + 1, r), (c, r + 1)],
        }
    }

    /// The triangle spanned by three lattice vertices, if they form one.
    pub fn from_vertices(vs: [Vertex; 3]) -> Option<TriCell> {
        let top = vs.iter().map(|v| v.1).min()?;
        let mut on_top: Vec<i32> = vs.iter().filter(|v| v.1 == top).map(|v| v.0).collect();
        on_top.sort_unstable();
        let cell = match on_top.as_slice() {
            [c] => TriCell::up(top, *c),
            [c, _] => TriCell::down(top, *c),
            _ => return None,
        };
        let mut want = cell.vertices();
        let mut got = vs;
        want.sort_unstable();
        got.sort_unstable();
        (want == got).then_some(cell)
    }

    /// The three edge-adjacent triangles in counter-clockwise order.
    ///
    /// For an up triangle: across the right edge, the left edge, the bottom
    /// edge. For a down triangle: across the top edge, the left edge, the
    /// right edge.
    pub fn neighbors(&self) -> [TriCell; 3] {
        let (r, c) = (self.row, self.col);
        match self.orientation {
            Orientation::Up => [
                TriCell::down(r, c),
                TriCell::down(r, c - 1),
                TriCell::down(r + 1, c - 1),
            ],
            Orientation::Down => [
                TriCell::up(r - 1, c + 1),
                TriCell::up(r, c),
                TriCell::up(r, c + 1),
            ],
        }
    }

    /// The partner forming a lozenge of the given orientation.
    pub fn partner(&self, o: LozengeOrientation) -> TriCell {
        let (r, c) = (self.row, self.col);
        match (self.orientation, o) {
            (Orientation::Up, LozengeOrientation::Right) => TriCell::down(r, c),
            (Orientation::Up, LozengeOrientation::Left) => TriCell::down(r, c - 1),
            (Orientation::Up, LozengeOrientation::Vertical) => TriCell::down(r + 1, c - 1),
            (Orientation::Down, LozengeOrientation::Right) => TriCell::up(r, c),
            (Orientation::Down, LozengeOrientation::Left) => TriCell::up(r, c + 1),
            (Orientation::Down, LozengeOrientation::Vertical) => TriCell::up(r - 1, c + 1),
        }
    }

    /// The centroid in Cartesian coordinates (y pointing down).
    pub fn centroid(&self) -> (f64, f64) {
        let vs = self.vertices();
        let (mut x, mut y) = (0.0, 0.0);
        for v in vs {
            let (px, py) = vertex_point(v);
            x += px;
            y += py;
        }
        (x / 3.0, y / 3.0)
    }
}

/// Cartesian position of a lattice vertex (y pointing down).
pub fn vertex_point((c, r): Vertex) -> (f64, f64) {
    (c as f64 + r as f64 / 2.0, r as f64 * 3f64.sqrt() / 2.0)
}

/// The three lozenge shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LozengeOrientation {
    /// `Down(r, c) + Up(r, c+1)`.
    Left,
    /// `Up(r, c) + Down(r, c)`.
    Right,
    /// `Up(r-1, c+1) + Down(r, c)`.
    Vertical,
}

impl LozengeOrientation {
    /// All orientations in branching order.
    pub const ALL: [LozengeOrientation; 3] = [
        LozengeOrientation::Left,
        LozengeOrientation::Right,
        LozengeOrientation::Vertical,
    ];
}

/// Two edge-adjacent triangles, one up and one down.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Lozenge {
    /// The up half.
    pub up: TriCell,
    /// The down half.
    pub down: TriCell,
    /// Shape class, determined by the two halves.
    pub orientation: LozengeOrientation,
}

impl Lozenge {
    /// Glues two cells into a lozenge if they share an edge.
    pub fn new(a: TriCell, b: TriCell) -> Option<Lozenge> {
        let (up, down) = match (a.orientation, b.orientation) {
            (Orientation::Up, Orientation::Down) => (a, b),
            (Orientation::Down, Orientation::Up) => (b, a),
            _ => return None,
        };
        LozengeOrientation::ALL
            .into_iter()
            .find(|&o| up.partner(o) == down)
            .map(|orientation| Lozenge {
                up,
                down,
                orientation,
            })
    }

    /// The lozenge of orientation `o` containing `cell`.
    pub fn from_cell(cell: TriCell, o: LozengeOrientation) -> Lozenge {
        Lozenge::new(cell, cell.partner(o)).expect("partner cells are adjacent")
    }

    /// Both halves, up first.
    pub fn cells(&self) -> [TriCell; 2] {
        [self.up, self.down]
    }
}

/// A finite set of unit triangles.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Region {
    cells: BTreeSet<TriCell>,
}

impl FromIterator<TriCell> for Region {
    fn from_iter<I: IntoIterator<Item = TriCell>>(iter: I) -> Self {
        Region {
            cells: iter.into_iter().collect(),
        }
    }
}

impl Region {
    /// The empty region.
    pub fn new() -> Self {
        Self::default()
    }

    /// Whether `cell` belongs to the region.
    pub fn contains(&self, cell: &TriCell) -> bool {
        self.cells.contains(cell)
    }

    /// Number of cells.
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    /// Whether the region has no cells.
    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Cells in reading order (by row, then left to right).
    pub fn iter(&self) -> impl Iterator<Item = &TriCell> + '_ {
        self.cells.iter()
    }

    /// The underlying ordered set.
    pub fn cells(&self) -> &BTreeSet<TriCell> {
        &self.cells
    }

    /// Number of up triangles.
    pub fn up_count(&self) -> usize {
        self.cells.iter().filter(|c| c.is_up()).count()
    }

    /// Number of down triangles.
    pub fn down_count(&self) -> usize {
        self.len() - self.up_count()
    }

    /// Whether up and down counts agree.
    pub fn is_balanced(&self) -> bool {
        2 * self.up_count() == self.len()
    }

    /// The largest number of cells in a single row.
    pub fn max_row_width(&self) -> usize {
        let mut widths: BTreeMap<i32, usize> = BTreeMap::new();
        for c in &self.cells {
            *widths.entry(c.row).or_default() += 1;
        }
        widths.values().copied().max().unwrap_or(0)
    }

    /// The region with the given cells removed.
    pub fn without<'a, I: IntoIterator<Item = &'a TriCell>>(&self, cells: I) -> Region {
        let mut out = self.clone();
        for c in cells {
            out.cells.remove(c);
        }
        out
    }

    /// Inserts a cell.
    pub fn insert(&mut self, cell: TriCell) -> bool {
        self.cells.insert(cell)
    }

    /// Removes a cell.
    pub fn remove(&mut self, cell: &TriCell) -> bool {
        self.cells.remove(cell)
    }

    /// The region moved by a lattice translation.
    pub fn translated(&self, dr: i32, dc: i32) -> Region {
        self.cells
            .iter()
            .map(|c| TriCell {
                row: c.row + dr,
                col: c.col + dc,
                orientation: c.orientation,
            })
            .collect()
    }

    /// Neighbours of `cell` inside the region, in counter-clockwise order.
    pub fn neighbors_in(&self, cell: &TriCell) -> Vec<TriCell> {
        cell.neighbors()
            .into_iter()
            .filter(|n| self.contains(n))
            .collect()
    }

    /// The boundary edges of the region.
    pub fn boundary_edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for cell in &self.cells {
            let [p, q, s] = cell.vertices();
            let edges = match cell.orientation {
                Orientation::Up => [(p, s), (p, q), (q, s)],
                Orientation::Down => [(p, q), (p, s), (q, s)],
            };
            for (n, e) in cell.neighbors().iter().zip(edges) {
                if !self.contains(n) {
                    out.push(e);
                }
            }
        }
        out
    }
}

impl fmt::Display for Region {
    /// Draws the region as rows of `^` and `v` characters.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let xpos = |c: &TriCell| 2 * c.col + c.row + i32::from(!c.is_up());
        let Some(min_x) = self.cells.iter().map(xpos).min() else {
            return Ok(());
        };
        let max_x = self.cells.iter().map(xpos).max().unwrap_or(min_x);
        let rows: BTreeSet<i32> = self.cells.iter().map(|c| c.row).collect();
        for r in rows {
            let mut line = vec![b' '; (max_x - min_x + 1) as usize];
            for c in self.cells.iter().filter(|c| c.row == r) {
                line[(xpos(c) - min_x) as usize] = if c.is_up() { b'^' } else { b'v' };
            }
            writeln!(f, "{}", String::from_utf8_lossy(&line).trim_end())?;
        }
        Ok(())
    }
}

/// A set of pairwise disjoint lozenges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tiling {
    lozenges: Vec<Lozenge>,
}

impl Tiling {
    /// Collects lozenges into a tiling, sorted into canonical order.
    pub fn new(mut lozenges: Vec<Lozenge>) -> Self {
        lozenges.sort_unstable();
        Tiling { lozenges }
    }

    /// The lozenges in canonical order.
    pub fn lozenges(&self) -> &[Lozenge] {
        &self.lozenges
    }

    /// Number of lozenges.
    pub fn len(&self) -> usize {
        self.lozenges.len()
    }

    /// Whether the tiling is empty.
    pub fn is_empty(&self) -> bool {
        self.lozenges.is_empty()
    }

    /// A map from every covered cell to its lozenge.
    pub fn cell_map(&self) -> BTreeMap<TriCell, Lozenge> {
        let mut map = BTreeMap::new();
        for lz in &self.lozenges {
            for c in lz.cells() {
                map.insert(c, *lz);
            }
        }
        map
    }

    /// Number of lozenges of each orientation, in `[left, right, vertical]`
    /// order.
    pub fn orientation_counts(&self) -> [usize; 3] {
        let mut out = [0; 3];
        for lz in &self.lozenges {
            out[lz.orientation as usize] += 1;
        }
        out
    }

    /// Checks that the lozenges are disjoint and cover exactly `region`.
    ///
    /// # Errors
    ///
    /// Returns [`LatticeError::InvalidTiling`] describing the first problem
    /// found.
    pub fn validate(&self, region: &Region) -> Result<(), LatticeError> {
        let mut seen = BTreeSet::new();
        for lz in &self.lozenges {
            if Lozenge::new(lz.up, lz.down) != Some(*lz) {
                return Err(LatticeError::InvalidTiling(format!(
                    "{} and {} do not form a {:?} lozenge",
                    lz.up, lz.down, lz.orientation
                )));
            }
            for c in lz.cells() {
                if !region.contains(&c) {
                    return Err(LatticeError::InvalidTiling(format!(
                        "cell {c} lies outside the region"
                    )));
                }
                if !seen.insert(c) {
                    return Err(LatticeError::InvalidTiling(format!(
                        "cell {c} is covered twice"
                    )));
                }
            }
        }
        if seen.len() != region.len() {
            let missing = region.iter().find(|c| !seen.contains(c)).copied();
            return Err(LatticeError::InvalidTiling(format!(
                "cell {} is not covered",
                missing.map(|c| c.to_string()).unwrap_or_default()
            )));
        }
        Ok(())
    }
}

/// Cells of the hexagon bounded by `row >= 0`, `col + row >= 0`,
/// `col >= -nw`, `row <= nw + sw`, `col + row <= n + ne` and `col <= n`.
///
/// Its sides, counter-clockwise from the north, are
/// `n, nw, sw, n+ne-sw, nw+sw-ne, ne`.
pub fn hexagon_cells(n: i32, nw: i32, sw: i32, ne: i32) -> BTreeSet<TriCell> {
    let bottom = nw + sw;
    let inside = |(c, r): Vertex| {
        (0..=bottom).contains(&r) && (-nw..=n).contains(&c) && (0..=n + ne).contains(&(c + r))
    };
    let mut out = BTreeSet::new();
    for r in 0..bottom {
        for c in -nw - 1..=n + 1 {
            for cell in [TriCell::up(r, c), TriCell::down(r, c)] {
                if cell.vertices().into_iter().all(inside) {
                    out.insert(cell);
                }
            }
        }
    }
    out
}

/// The hexagon with sides `a, b, c, a, b, c` counter-clockwise from the
/// north side.
///
/// # Examples
///
/// ```
/// use lozenge::closedform::HexParams;
/// use lozenge::lattice::build_hexagon;
///
/// let r = build_hexagon(&HexParams::new(1, 1, 1).unwrap());
/// assert_eq!((r.up_count(), r.down_count()), (3, 3));
/// ```
pub fn build_hexagon(p: &HexParams) -> Region {
    Region {
        cells: hexagon_cells(p.a as i32, p.b as i32, p.c as i32, p.c as i32),
    }
}

/// The dent triangles of the semi-hexagon `S(a,b; s)`: the up triangles of
/// the bottom row at positions `s_i`, counted from the left.
pub fn semihexagon_dents(p: &SemiHexParams) -> Vec<TriCell> {
    let b = p.b() as i32;
    p.s()
        .iter()
        .map(|&s| TriCell::up(b - 1, s as i32 - b))
        .collect()
}

/// The trapezoid with sides `a, b, a+b, b` (north side `a` on top, base
/// `a+b`) with the dent triangles of [`semihexagon_dents`] removed.
pub fn build_semihexagon(p: &SemiHexParams) -> Region {
    let b = p.b() as i32;
    let full = Region {
        cells: hexagon_cells(p.a() as i32, b, 0, b),
    };
    full.without(&semihexagon_dents(p))
}

/// The halved hexagon `P(a,b,c)`: the hexagon `H(a,b,c)` with a maximal
/// unit staircase of `c` steps removed. It coincides with the tilted region
/// for `k=1, x=a, t=b-c+1, h=0, a=(1..c)`.
pub fn build_halved_hexagon(p: &HalvedHexParams) -> Region {
    build_tilted_region(&p.as_tilted())
}

struct TiltedLayout {
    hull: BTreeSet<TriCell>,
    cut: Vec<TriCell>,
    dents: Vec<TriCell>,
}

fn tilted_layout(p: &TiltedParams) -> TiltedLayout {
    let (k, x, t, h, l) = (p.k(), p.x(), p.t(), p.h(), p.l());
    let long = p.long_side();
    let (n, nw, sw, ne) = (l, long, x, x + h);
    let hull = hexagon_cells(n as i32, nw as i32, sw as i32, ne as i32);
    let bottom = nw + sw;
    let top_strip = n + ne;
    let dent_levels = p.dent_levels();
    let mut cut = Vec::new();
    let mut dents = Vec::new();
    for level in 1..=h + l {
        let s = top_strip - level;
        let start = x + h + t + k * (level - 1);
        for r in start..bottom {
            for cell in [
                TriCell::up(r as i32, (s - r) as i32),
                TriCell::down(r as i32, (s - r) as i32),
            ] {
                if hull.contains(&cell) {
                    cut.push(cell);
                }
            }
        }
        if dent_levels.binary_search(&level).is_ok() {
            let r = start - 1;
            dents.push(TriCell::up(r as i32, (s - r) as i32));
        }
    }
    TiltedLayout { hull, cut, dents }
}

/// The dent triangles of the tilted region, one per level in
/// [`TiltedParams::dent_levels`], ordered by level.
pub fn tilted_dents(p: &TiltedParams) -> Vec<TriCell> {
    tilted_layout(p).dents
}

/// The tilted halved hexagon `H_{x,t,h}(a)`.
///
/// Start from the hexagon whose sides, counter-clockwise from the north,
/// are `l, M, x, l+h, M-h, x+h` with `M = h(k+1)+(l-1)k+t`. Number the
/// `h+l` strips next to the south-east side `1, 2, ...` from the outside
/// in. Level `j` occupies the strip `col + row = l+x+h-j` and is cut from
/// row `x+h+t+k(j-1)` downwards, which removes a maximal `k`-staircase.
/// Each level not listed in `a` also loses the up triangle at the bottom
/// of its remaining strip.
///
/// With `k = 0` nothing is cut and the dents sit on the south side.
///
/// # Examples
///
/// ```
/// use lozenge::closedform::TiltedParams;
/// use lozenge::lattice::build_tilted_region;
///
/// let p = TiltedParams::new(1, 1, 1, 0, vec![1]).unwrap();
/// let r = build_tilted_region(&p);
/// assert!(r.is_balanced());
/// ```
pub fn build_tilted_region(p: &TiltedParams) -> Region {
    let layout = tilted_layout(p);
    let mut region = Region { cells: layout.hull };
    for c in layout.cut.iter().chain(&layout.dents) {
        region.remove(c);
    }
    region
}

/// Removes forced lozenges until none is left.
///
/// A lozenge is forced when one of its cells has exactly one neighbour left
/// in the region. Returns the reduced region and the forced lozenges in the
/// order they were found.
///
/// # Errors
///
/// Returns [`LatticeError::Untileable`] as soon as some cell has no
/// neighbour at all, in which case the region has no tiling.
pub fn forced_lozenges(r: &Region) -> Result<(Region, Vec<Lozenge>), LatticeError> {
    let mut region = r.clone();
    let mut forced = Vec::new();
    let mut queue: VecDeque<TriCell> = region.iter().copied().collect();
    while let Some(cell) = queue.pop_front() {
        if !region.contains(&cell) {
            continue;
        }
        let nbrs = region.neighbors_in(&cell);
        match nbrs.as_slice() {
            [] => return Err(LatticeError::Untileable(cell)),
            [only] => {
                let only = *only;
                region.remove(&cell);
                region.remove(&only);
                forced.push(Lozenge::new(cell, only).expect("neighbours are adjacent"));
                for n in only.neighbors().into_iter().chain(cell.neighbors()) {
                    if region.contains(&n) {
                        queue.push_back(n);
                    }
                }
            }
            _ => {}
        }
    }
    Ok((region, forced))
}

/// [`forced_lozenges`] reporting only the number of removed lozenges.
///
/// # Errors
///
/// Returns [`LatticeError::Untileable`] when the region has no tiling.
///
/// # Examples
///
/// ```
/// use lozenge::closedform::{HexParams, SemiHexParams};
/// use lozenge::lattice::{build_hexagon, build_semihexagon, remove_forced};
///
/// let r = build_semihexagon(&SemiHexParams::new(0, vec![1, 2]).unwrap());
/// let (rest, n) = remove_forced(&r).unwrap();
/// assert!(rest.is_empty());
/// assert_eq!(n, 1);
///
/// let hex = build_hexagon(&HexParams::new(1, 1, 1).unwrap());
/// assert_eq!(remove_forced(&hex).unwrap(), (hex, 0));
/// ```
pub fn remove_forced(r: &Region) -> Result<(Region, usize), LatticeError> {
    forced_lozenges(r).map(|(region, forced)| (region, forced.len()))
}

/// The bipartite dual graph of a region.
///
/// Vertices are the cells in reading order. Up cells form the part `V1`
/// and down cells the part `V2`. Each adjacency list follows the
/// counter-clockwise order of [`TriCell::neighbors`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchGraph {
    cells: Vec<TriCell>,
    adj: Vec<Vec<usize>>,
}

impl MatchGraph {
    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.cells.len()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// The cell behind vertex `v`.
    pub fn cell(&self, v: usize) -> TriCell {
        self.cells[v]
    }

    /// All cells, indexed by vertex.
    pub fn cells(&self) -> &[TriCell] {
        &self.cells
    }

    /// Neighbours of `v` in counter-clockwise order.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Whether `v` lies in the up part `V1`.
    pub fn in_v1(&self, v: usize) -> bool {
        self.cells[v].is_up()
    }

    /// Vertices of the up part `V1`.
    pub fn v1(&self) -> Vec<usize> {
        (0..self.cells.len()).filter(|&v| self.in_v1(v)).collect()
    }

    /// Vertices of the down part `V2`.
    pub fn v2(&self) -> Vec<usize> {
        (0..self.cells.len()).filter(|&v| !self.in_v1(v)).collect()
    }

    /// Vertex of a cell, if present.
    pub fn vertex_of(&self, cell: &TriCell) -> Option<usize> {
        self.cells.binary_search(cell).ok()
    }

    /// The induced subgraph on all vertices except `removed`. Vertex
    /// numbering follows the reading order of the remaining cells.
    pub fn without(&self, removed: &[usize]) -> MatchGraph {
        let region: Region = self
            .cells
            .iter()
            .enumerate()
            .filter(|(v, _)| !removed.contains(v))
            .map(|(_, c)| *c)
            .collect();
        dual_graph(&region)
    }

    /// The face boundaries of the plane embedding, as closed walks of
    /// vertices. Each walk keeps the face on its left, so interior faces
    /// run counter-clockwise and the outer face of each component runs
    /// clockwise (in the y-up picture).
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut used: BTreeSet<(usize, usize)> = BTreeSet::new();
        let mut faces = Vec::new();
        for u in 0..self.cells.len() {
            for &v in &self.adj[u] {
                if used.contains(&(u, v)) {
                    continue;
                }
                let mut walk = Vec::new();
                let (mut a, mut b) = (u, v);
                while used.insert((a, b)) {
                    walk.push(a);
                    let rot = &self.adj[b];
                    let pos = rot.iter().position(|&w| w == a).expect("edge is symmetric");
                    let next = rot[(pos + rot.len() - 1) % rot.len()];
                    a = b;
                    b = next;
                }
                faces.push(walk);
            }
        }
        faces
    }

    /// Signed area of a closed walk through cell centroids, positive for
    /// counter-clockwise walks in the y-up picture.
    pub fn walk_area(&self, walk: &[usize]) -> f64 {
        let pts: Vec<(f64, f64)> = walk
            .iter()
            .map(|&v| {
                let (x, y) = self.cells[v].centroid();
                (x, -y)
            })
            .collect();
        let n = pts.len();
        (0..n)
            .map(|i| {
                let (x0, y0) = pts[i];
                let (x1, y1) = pts[(i + 1) % n];
                x0 * y1 - x1 * y0
            })
            .sum::<f64>()
            / 2.0
    }

    /// Boundary walks of the outer faces: the faces whose walks are not
    /// counter-clockwise.
    pub fn outer_faces(&self) -> Vec<Vec<usize>> {
        self.faces()
            .into_iter()
            .filter(|w| self.walk_area(w) <= 1e-9)
            .collect()
    }
}

/// The dual graph of a region.
///
/// # Examples
///
/// ```
/// use lozenge::closedform::HexParams;
/// use lozenge::lattice::{build_hexagon, dual_graph, Region};
///
/// let g = dual_graph(&build_hexagon(&HexParams::new(1, 1, 1).unwrap()));
/// assert_eq!((g.v1().len(), g.v2().len(), g.edge_count()), (3, 3, 6));
/// assert_eq!(dual_graph(&Region::new()).vertex_count(), 0);
/// ```
pub fn dual_graph(r: &Region) -> MatchGraph {
    let cells: Vec<TriCell> = r.iter().copied().collect();
    let adj = cells
        .iter()
        .map(|c| {
            c.neighbors()
                .iter()
                .filter_map(|n| cells.binary_search(n).ok())
                .collect()
        })
        .collect();
    MatchGraph { cells, adj }
}

type VertexMap = fn(Vertex) -> Vertex;

fn rotate60((c, r): Vertex) -> Vertex {
    (c + r, -c)
}

fn reflect((c, r): Vertex) -> Vertex {
    (c + r, -r)
}

fn transform_cell(cell: &TriCell, rotations: usize, mirrored: bool) -> TriCell {
    let mut vs = cell.vertices();
    for v in vs.iter_mut() {
        if mirrored {
            *v = (reflect as VertexMap)(*v);
        }
        for _ in 0..rotations {
            *v = (rotate60 as VertexMap)(*v);
        }
    }
    TriCell::from_vertices(vs).expect("lattice symmetries map triangles to triangles")
}

fn normalized(cells: impl Iterator<Item = TriCell>) -> Vec<TriCell> {
    let mut v: Vec<TriCell> = cells.collect();
    let (Some(min_r), Some(min_c)) = (v.iter().map(|c| c.row).min(), v.iter().map(|c| c.col).min())
    else {
        return v;
    };
    for c in v.iter_mut() {
        c.row -= min_r;
        c.col -= min_c;
    }
    v.sort_unstable();
    v
}

/// The image of a region under one of the 12 symmetries of the lattice:
/// `rotations` turns by 60 degrees, preceded by a mirror image when
/// `mirrored` is set.
pub fn transform_region(r: &Region, rotations: usize, mirrored: bool) -> Region {
    r.iter()
        .map(|c| transform_cell(c, rotations % 6, mirrored))
        .collect()
}

/// A representative of the region's class under translations, rotations
/// and reflections: the smallest normalized cell list over all 12
/// symmetries.
pub fn canonical_form(r: &Region) -> Vec<TriCell> {
    let mut best: Option<Vec<TriCell>> = None;
    for mirrored in [false, true] {
        for rotations in 0..6 {
            let img = normalized(r.iter().map(|c| transform_cell(c, rotations, mirrored)));
            if best.as_ref().map_or(true, |b| img < *b) {
                best = Some(img);
            }
        }
    }
    best.unwrap_or_default()
}

/// Whether two regions are congruent under lattice translations, rotations
/// and reflections.
///
/// # Examples
///
/// ```
/// use lozenge::closedform::HexParams;
/// use lozenge::lattice::{build_hexagon, congruent};
///
/// let hex = |a, b, c| build_hexagon(&HexParams::new(a, b, c).unwrap());
/// assert!(congruent(&hex(1, 2, 1), &hex(1, 1, 2)));
/// assert!(!congruent(&hex(1, 1, 1), &hex(2, 2, 2)));
/// ```
pub fn congruent(r1: &Region, r2: &Region) -> bool {
    r1.len() == r2.len() && canonical_form(r1) == canonical_form(r2)
}

/// The first dented semi-hexagon congruent to `r`, searching `b` upwards,
/// then `a`, then the dent positions lexicographically. Only shapes with
/// the same number of cells, `2ab + b^2 - b`, are built.
///
/// # Examples
///
/// ```
/// use lozenge::closedform::SemiHexParams;
/// use lozenge::lattice::{build_semihexagon, find_congruent_semihexagon};
///
/// let p = SemiHexParams::new(2, vec![1, 3]).unwrap();
/// let found = find_congruent_semihexagon(&build_semihexagon(&p)).unwrap();
/// assert_eq!(build_semihexagon(&found).len(), 10);
/// ```
pub fn find_congruent_semihexagon(r: &Region) -> Option<SemiHexParams> {
    let n = r.len() as i64;
    if n == 0 {
        return SemiHexParams::new(0, Vec::new()).ok();
    }
    let target = canonical_form(r);
    for b in 1..=n {
        for a in 0..=n {
            let size = 2 * a * b + b * b - b;
            if size > n {
                break;
            }
            if size < n {
                continue;
            }
            for s in crate::closedform::increasing_sequences(b, a + b) {
                let p = SemiHexParams::new(a, s).ok()?;
                if canonical_form(&build_semihexagon(&p)) == target {
                    return Some(p);
                }
            }
        }
    }
    None
}
