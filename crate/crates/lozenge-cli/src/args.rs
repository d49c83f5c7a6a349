// Copyright 2026 The lozenge developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// http://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or http://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.

//! Command-line arguments.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exact lozenge tiling counts, brute-force verification, bijections and
/// SVG rendering.
#[derive(Debug, Parser)]
#[command(name = "lozenge", version)]
pub struct Cli {
    /// The subcommand to run.
    #[command(subcommand)]
    pub command: Command,
}

/// Subcommands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count the tilings of one region.
    Count(CountArgs),
    /// Sweep a parameter grid and compare every count and identity.
    Verify(VerifyArgs),
    /// Draw a region, or one of its tilings, as SVG.
    Render(RenderArgs),
    /// Map a tiling to its plane partition and back.
    Bijection(BijectionArgs),
}

/// Region families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Tilted halved hexagon `H_{x,t,h}(a)` with step width `k`.
    Tilted,
    /// Hexagon with sides `a, b, c, a, b, c`.
    Hexagon,
    /// Dented semi-hexagon with north side `a` and dents at `--dents`.
    Semihex,
    /// Halved hexagon `P(a,b,c)`.
    Halved,
}

impl Family {
    /// The lowercase name used on the command line and in reports.
    pub fn name(self) -> &'static str {
        match self {
            Family::Tilted => "tilted",
            Family::Hexagon => "hexagon",
            Family::Semihex => "semihex",
            Family::Halved => "halved",
        }
    }
}

/// Parameters shared by every command that builds one region.
#[derive(Debug, Clone, Args)]
pub struct RegionArgs {
    /// Region family.
    #[arg(long, value_enum, default_value_t = Family::Tilted)]
    pub family: Family,
    /// Staircase step width (tilted).
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub k: i64,
    /// North side (tilted).
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub x: i64,
    /// Extra base length (tilted).
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub t: i64,
    /// Number of dents (tilted).
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub h: i64,
    /// Comma-separated levels: the undented staircase levels `a_1..a_l`
    /// for tilted regions, the dent positions for semi-hexagons. An empty
    /// string is the empty sequence.
    #[arg(long, alias = "levels", default_value = "", allow_hyphen_values = true)]
    pub dents: String,
    /// First side (hexagon, semihex, halved).
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub a: i64,
    /// Second side (hexagon, halved).
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub b: i64,
    /// Third side (hexagon, halved).
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    pub c: i64,
}

/// How a count is obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// The product formula.
    Formula,
    /// Brute-force perfect matching count.
    Oracle,
    /// Both, compared.
    Both,
}

/// Arguments of `count`.
#[derive(Debug, Args)]
pub struct CountArgs {
    /// The region.
    #[command(flatten)]
    pub region: RegionArgs,
    /// Counting method.
    #[arg(long, value_enum, default_value_t = Method::Both)]
    pub method: Method,
    /// Record wall-clock time instead of 0.
    #[arg(long)]
    pub timing: bool,
    /// Write the JSON record here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Property suites run by `verify`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    /// Product formula against the oracle.
    Counts,
    /// Condensation identities on regions and sampled graph quads.
    Kuo,
    /// Partition counts and tiling round trips of both families.
    Bijections,
    /// Every suite.
    All,
}

/// Arguments of `verify`.
#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Property suite.
    #[arg(long, value_enum, default_value_t = Check::All)]
    pub check: Check,
    /// Largest step width.
    #[arg(long, default_value_t = 2)]
    pub max_k: i64,
    /// Largest north side.
    #[arg(long, default_value_t = 2)]
    pub max_x: i64,
    /// Largest extra base length.
    #[arg(long, default_value_t = 2)]
    pub max_t: i64,
    /// Largest number of staircase levels `h + l`.
    #[arg(long, default_value_t = 4)]
    pub max_hl: i64,
    /// Record wall-clock time instead of 0.
    #[arg(long)]
    pub timing: bool,
    /// Write the JSON report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Arguments of `render`.
#[derive(Debug, Args)]
pub struct RenderArgs {
    /// The region.
    #[command(flatten)]
    pub region: RegionArgs,
    /// Draw this tiling, counted from 0 in enumeration order.
    #[arg(long)]
    pub tiling_index: Option<usize>,
    /// Length of a unit edge in SVG units.
    #[arg(long, default_value_t = 24.0, allow_negative_numbers = true)]
    pub scale: f64,
    /// Write the SVG here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Arguments of `bijection`.
#[derive(Debug, Args)]
pub struct BijectionArgs {
    /// Which family of paths: 1 for `H_{x,t,h}(a)`, 2 for `H_{0,0,h}(a)`.
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub corollary: u8,
    /// The region; only the tilted family is accepted.
    #[command(flatten)]
    pub region: RegionArgs,
    /// The tiling to map, counted from 0 in enumeration order.
    #[arg(long, default_value_t = 0)]
    pub tiling_index: usize,
    /// Write the JSON record here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}
