// Copyright 2026 The lozenge developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// http://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or http://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.

//! The `count` and `bijection` subcommands.

use std::time::Instant;

use lozenge::bijection::{
    cor1_paths, cor2_paths, pp_to_tiling_cor1, pp_to_tiling_cor2, tiling_to_pp_cor1,
    tiling_to_pp_cor2, PlanePartition,
};
use lozenge::lattice::Tiling;
use lozenge::oracle::{count_region, nth_tiling};
use serde::Serialize;
use serde_json::Value;

use crate::args::{BijectionArgs, CountArgs, Method};
use crate::region::{guard, RegionSpec};
use crate::{CliError, Report};

/// The JSON record printed by `count`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountRecord {
    /// Region family.
    pub family: &'static str,
    /// Region parameters.
    pub params: Value,
    /// `formula`, `oracle` or `both`.
    pub method: &'static str,
    /// The formula value, or the oracle count for `--method oracle`.
    pub count: String,
    /// The oracle count, with `--method both`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_count: Option<String>,
    /// Whether formula and oracle agree, with `--method both`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agrees: Option<bool>,
    /// Elapsed milliseconds with `--timing`, otherwise 0.
    pub runtime_ms: u64,
}

/// Renders a serializable value as pretty JSON with a final newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("records serialize to JSON");
    text.push('\n');
    text
}

/// Runs `count`.
///
/// # Errors
///
/// Exit 2 on invalid parameters, exit 4 if the oracle would be run on a
/// region wider than the guard. A disagreement under `--method both` is
/// reported in the record and as exit 3.
pub fn count(args: &CountArgs) -> Result<Report, CliError> {
    let spec = RegionSpec::from_args(&args.region)?;
    let start = Instant::now();
    let formula = match args.method {
        Method::Formula | Method::Both => Some(spec.formula_count()?),
        Method::Oracle => None,
    };
    let oracle = match args.method {
        Method::Oracle | Method::Both => {
            let region = spec.region();
            guard(&region, "oracle")?;
            Some(count_region(&region).to_string())
        }
        Method::Formula => None,
    };
    let runtime_ms = if args.timing {
        start.elapsed().as_millis() as u64
    } else {
        0
    };
    let (method, count, oracle_count, agrees) = match (formula, oracle) {
        (Some(f), Some(o)) => {
            let agrees = f == o;
            ("both", f, Some(o), Some(agrees))
        }
        (Some(f), None) => ("formula", f, None, None),
        (None, Some(o)) => ("oracle", o, None, None),
        (None, None) => unreachable!("every method computes at least one count"),
    };
    let record = CountRecord {
        family: spec.family().name(),
        params: spec.params_json(),
        method,
        count,
        oracle_count,
        agrees,
        runtime_ms,
    };
    let failure = (agrees == Some(false)).then(|| {
        CliError::Mismatch(format!(
            "formula {} differs from oracle {}",
            record.count,
            record.oracle_count.as_deref().unwrap_or("")
        ))
    });
    Ok(Report {
        text: to_json(&record),
        failure,
    })
}

/// The JSON record printed by `bijection`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionRecord {
    /// 1 or 2.
    pub corollary: u8,
    /// Region parameters.
    pub params: Value,
    /// Position of the tiling in enumeration order.
    pub tiling_index: usize,
    /// Number of tilings of the region.
    pub tiling_count: String,
    /// The tiling.
    pub tiling: Tiling,
    /// Its plane partition.
    pub partition: PlanePartition,
    /// The shape of the partition.
    pub shape: Vec<usize>,
    /// Labels along each lozenge path, in travel order.
    pub path_labels: Vec<Vec<i64>>,
    /// Whether mapping the partition back gives the same tiling.
    pub roundtrip: bool,
}

/// Runs `bijection`.
///
/// # Errors
///
/// Exit 2 on invalid parameters or a non-tilted family, exit 4 on the
/// width guard, exit 5 if the index is not below the number of tilings. A
/// failed round trip is reported in the record and as exit 3.
pub fn bijection(args: &BijectionArgs) -> Result<Report, CliError> {
    let spec = RegionSpec::from_args(&args.region)?;
    let RegionSpec::Tilted(p) = &spec else {
        return Err(CliError::Invalid(
            "bijections are defined for the tilted family".into(),
        ));
    };
    if args.corollary == 2 && (p.x() != 0 || p.t() != 0) {
        return Err(CliError::Invalid(format!(
            "the second family needs x = t = 0, got x = {}, t = {}",
            p.x(),
            p.t()
        )));
    }
    let region = spec.region();
    guard(&region, "tiling enumeration")?;
    let total = count_region(&region);
    let tiling = nth_tiling(&region, args.tiling_index).ok_or_else(|| {
        CliError::OutOfRange(format!(
            "tiling index {} but the region has {total} tilings",
            args.tiling_index
        ))
    })?;
    let (h, l, k, a) = (p.h(), p.l(), p.k(), p.a());
    let (partition, paths, back) = if args.corollary == 1 {
        let pp = tiling_to_pp_cor1(p, &tiling)?;
        let paths = cor1_paths(p, &tiling)?;
        let back = pp_to_tiling_cor1(p, &pp)?;
        (pp, paths, back)
    } else {
        let pp = tiling_to_pp_cor2(h, l, k, a, &tiling)?;
        let paths = cor2_paths(h, l, k, a, &tiling)?;
        let back = pp_to_tiling_cor2(h, l, k, a, &pp)?;
        (pp, paths, back)
    };
    let record = BijectionRecord {
        corollary: args.corollary,
        params: spec.params_json(),
        tiling_index: args.tiling_index,
        tiling_count: total.to_string(),
        shape: partition.shape().to_vec(),
        path_labels: paths.into_iter().map(|path| path.labels).collect(),
        roundtrip: back == tiling,
        tiling,
        partition,
    };
    let failure = (!record.roundtrip)
        .then(|| CliError::Mismatch("the partition maps back to a different tiling".into()));
    Ok(Report {
        text: to_json(&record),
        failure,
    })
}
