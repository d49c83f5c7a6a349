// Copyright 2026 The lozenge developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// http://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or http://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.

//! Validated region parameters for every family.

use lozenge::closedform::{
    count_hexagon, count_semihexagon, count_tilted, halved_hexagon_printed_value, HalvedHexParams,
    HexParams, SemiHexParams, TiltedParams,
};
use lozenge::exactnum::as_integer;
use lozenge::lattice::{
    build_halved_hexagon, build_hexagon, build_semihexagon, build_tilted_region, semihexagon_dents,
    tilted_dents, Region, TriCell,
};
use serde_json::Value;

use crate::args::{Family, RegionArgs};
use crate::CliError;

/// Largest row width, in cells, accepted by the brute-force oracle.
pub const MAX_ROW_WIDTH: usize = 20;

/// One validated region of any family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RegionSpec {
    /// Tilted halved hexagon.
    Tilted(TiltedParams),
    /// Hexagon.
    Hexagon(HexParams),
    /// Dented semi-hexagon.
    Semihex(SemiHexParams),
    /// Halved hexagon.
    Halved(HalvedHexParams),
}

/// Parses a comma-separated integer list; the empty string is the empty
/// list.
///
/// # Errors
///
/// Returns [`CliError::Invalid`] on a malformed entry.
pub fn parse_levels(text: &str) -> Result<Vec<i64>, CliError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|_| CliError::Invalid(format!("cannot parse level {part:?} in {text:?}")))
        })
        .collect()
}

impl RegionSpec {
    /// Validates command-line parameters.
    ///
    /// # Errors
    ///
    /// Returns [`CliError::Invalid`] if the parameters do not describe a
    /// region of the family.
    pub fn from_args(args: &RegionArgs) -> Result<Self, CliError> {
        let levels = parse_levels(&args.dents)?;
        let spec = match args.family {
            Family::Tilted => {
                RegionSpec::Tilted(TiltedParams::new(args.k, args.x, args.t, args.h, levels)?)
            }
            Family::Hexagon => RegionSpec::Hexagon(HexParams::new(args.a, args.b, args.c)?),
            Family::Semihex => RegionSpec::Semihex(SemiHexParams::new(args.a, levels)?),
            Family::Halved => RegionSpec::Halved(HalvedHexParams::new(args.a, args.b, args.c)?),
        };
        Ok(spec)
    }

    /// The family.
    pub fn family(&self) -> Family {
        match self {
            RegionSpec::Tilted(_) => Family::Tilted,
            RegionSpec::Hexagon(_) => Family::Hexagon,
            RegionSpec::Semihex(_) => Family::Semihex,
            RegionSpec::Halved(_) => Family::Halved,
        }
    }

    /// The parameters as a JSON object.
    pub fn params_json(&self) -> Value {
        let value = match self {
            RegionSpec::Tilted(p) => serde_json::to_value(p),
            RegionSpec::Hexagon(p) => serde_json::to_value(p),
            RegionSpec::Semihex(p) => serde_json::to_value(p),
            RegionSpec::Halved(p) => serde_json::to_value(p),
        };
        value.expect("parameter structs serialize")
    }

    /// The region.
    pub fn region(&self) -> Region {
        match self {
            RegionSpec::Tilted(p) => build_tilted_region(p),
            RegionSpec::Hexagon(p) => build_hexagon(p),
            RegionSpec::Semihex(p) => build_semihexagon(p),
            RegionSpec::Halved(p) => build_halved_hexagon(p),
        }
    }

    /// The dent triangles removed from the outline.
    pub fn dents(&self) -> Vec<TriCell> {
        match self {
            RegionSpec::Tilted(p) => tilted_dents(p),
            RegionSpec::Semihex(p) => semihexagon_dents(p),
            RegionSpec::Hexagon(_) | RegionSpec::Halved(_) => Vec::new(),
        }
    }

    /// The product-formula value as a decimal string. The halved family
    /// uses the verbatim double product, which may be a fraction `p/q`.
    ///
    /// # Errors
    ///
    /// Returns [`CliError::Invalid`] if the formula hits a pole or a
    /// non-integer value for a family that must be integral.
    pub fn formula_count(&self) -> Result<String, CliError> {
        let text = match self {
            RegionSpec::Tilted(p) => count_tilted(p)?.to_string(),
            RegionSpec::Hexagon(p) => count_hexagon(p).to_string(),
            RegionSpec::Semihex(p) => count_semihexagon(p).to_string(),
            RegionSpec::Halved(p) => {
                let value = halved_hexagon_printed_value(p);
                match as_integer(&value) {
                    Some(n) => n.to_string(),
                    None => value.to_string(),
                }
            }
        };
        Ok(text)
    }
}

/// Refuses regions too wide for the oracle.
///
/// # Errors
///
/// Returns [`CliError::Guard`] when the widest row exceeds
/// [`MAX_ROW_WIDTH`].
pub fn guard(region: &Region, what: &str) -> Result<(), CliError> {
    let width = region.max_row_width();
    if width > MAX_ROW_WIDTH {
        return Err(CliError::Guard(format!(
            "{what}: row width {width} exceeds the limit of {MAX_ROW_WIDTH} cells"
        )));
    }
    Ok(())
}
