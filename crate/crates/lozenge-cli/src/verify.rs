// Copyright 2026 The lozenge developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// http://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or http://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.

//! The `verify` subcommand: a parameter grid checked point by point.

use std::time::Instant;

use lozenge::bijection::{
    cor1_constraints, cor2_constraints, enumerate_pp_cor1, enumerate_pp_cor2, pp_to_tiling_cor1,
    pp_to_tiling_cor2, tiling_to_pp_cor1, tiling_to_pp_cor2,
};
use lozenge::closedform::{count_tilted, FormulaError, TiltedParams};
use lozenge::lattice::{build_tilted_region, dual_graph, Region};
use lozenge::oracle::{
    check_kuo_graph, check_kuo_region, count_region, enumerate_tilings, sample_boundary_quads,
    CountMethod,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{Check, VerifyArgs};
use crate::commands::to_json;
use crate::region::guard;
use crate::{CliError, Report, WORKERS_ENV};

/// Regions with at most this many cells have every tiling round-tripped.
pub const ROUNDTRIP_MAX_CELLS: usize = 60;

/// Partitions mapped back and forth on larger regions.
pub const ROUNDTRIP_SAMPLE: usize = 200;

/// Boundary quads sampled per grid point for the graph identity.
pub const QUADS_PER_POINT: usize = 2;

/// The swept grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridSpec {
    /// Largest step width.
    pub max_k: i64,
    /// Largest north side.
    pub max_x: i64,
    /// Largest extra base length.
    pub max_t: i64,
    /// Largest `h + l`.
    pub max_hl: i64,
    /// Suites run on every point.
    pub checks: Vec<&'static str>,
}

/// The outcome at one grid point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointRecord {
    /// Parameters.
    pub params: TiltedParams,
    /// Number of unit triangles in the region.
    pub cells: usize,
    /// Product-formula count, when the counts suite ran and succeeded.
    pub closed_form: Option<String>,
    /// Brute-force count.
    pub oracle: String,
    /// Whether every selected suite passed.
    #[serde(rename = "match")]
    pub matches: bool,
    /// Elapsed milliseconds with `--timing`, otherwise 0.
    pub runtime_ms: u64,
    /// Result of the condensation suite, if it applies.
    pub kuo: Option<bool>,
    /// Result of the bijection suite, if it ran.
    pub bijections: Option<bool>,
    /// Errors raised while checking.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<String>,
    #[serde(skip)]
    pole: bool,
    #[serde(skip)]
    quads: usize,
    #[serde(skip)]
    roundtrips: u64,
}

/// Totals over the grid.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    /// Number of grid points.
    pub total: usize,
    /// Points where some suite failed, as parameter strings.
    pub mismatches: Vec<String>,
    /// Points where the product formula hit a pole.
    pub pole_errors: usize,
    /// Graph quads checked.
    pub kuo_graph_quads: usize,
    /// Tiling and partition round trips performed.
    pub roundtrips: u64,
}

/// The JSON document written by `verify`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    /// The grid.
    pub grid: GridSpec,
    /// One record per point, in grid order.
    pub points: Vec<PointRecord>,
    /// Totals.
    pub summary: Summary,
}

/// Which suites to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Suites {
    /// Formula against oracle.
    pub counts: bool,
    /// Condensation identities.
    pub kuo: bool,
    /// Partition counts and round trips.
    pub bijections: bool,
}

impl From<Check> for Suites {
    fn from(c: Check) -> Self {
        Suites {
            counts: matches!(c, Check::Counts | Check::All),
            kuo: matches!(c, Check::Kuo | Check::All),
            bijections: matches!(c, Check::Bijections | Check::All),
        }
    }
}

impl Suites {
    fn names(self) -> Vec<&'static str> {
        [
            ("counts", self.counts),
            ("kuo", self.kuo),
            ("bijections", self.bijections),
        ]
        .into_iter()
        .filter(|(_, on)| *on)
        .map(|(name, _)| name)
        .collect()
    }
}

fn kuo_suite(p: &TiltedParams, region: &Region, seed: u64, rec: &mut PointRecord) -> Option<bool> {
    if p.x() < 1 || p.t() < 1 || p.l() < 1 {
        return None;
    }
    let mut ok = true;
    for method in [CountMethod::ClosedForm, CountMethod::Oracle] {
        match check_kuo_region(p, method) {
            Ok(holds) => ok &= holds,
            Err(e) => {
                ok = false;
                rec.errors.push(format!("kuo region: {e}"));
            }
        }
    }
    let g = dual_graph(region);
    for q in sample_boundary_quads(&g, QUADS_PER_POINT, seed) {
        rec.quads += 1;
        match check_kuo_graph(&g, &q) {
            Ok(holds) => ok &= holds,
            Err(e) => {
                ok = false;
                rec.errors.push(format!("kuo graph: {e}"));
            }
        }
    }
    Some(ok)
}

fn bijection_suite(
    p: &TiltedParams,
    region: &Region,
    oracle: &lozenge::exactnum::BigInt,
    rec: &mut PointRecord,
) -> bool {
    let mut ok = enumerate_pp_cor1(p) == *oracle;
    let second = p.x() == 0 && p.t() == 0;
    let (h, l, k, a) = (p.h(), p.l(), p.k(), p.a());
    if second {
        match enumerate_pp_cor2(k, h, l, a) {
            Ok(n) => ok &= n == *oracle,
            Err(e) => {
                ok = false;
                rec.errors.push(format!("second family: {e}"));
            }
        }
    }
    if region.len() <= ROUNDTRIP_MAX_CELLS {
        match enumerate_tilings(region, usize::MAX) {
            Ok(tilings) => {
                for t in &tilings {
                    rec.roundtrips += 1;
                    let back = tiling_to_pp_cor1(p, t).and_then(|pp| pp_to_tiling_cor1(p, &pp));
                    ok &= back.as_ref() == Ok(t);
                    if second {
                        let back = tiling_to_pp_cor2(h, l, k, a, t)
                            .and_then(|pp| pp_to_tiling_cor2(h, l, k, a, &pp));
                        ok &= back.as_ref() == Ok(t);
                    }
                }
            }
            Err(e) => {
                ok = false;
                rec.errors.push(format!("enumeration: {e}"));
            }
        }
    } else {
        for pp in cor1_constraints(p).enumerate(ROUNDTRIP_SAMPLE) {
            rec.roundtrips += 1;
            let back = pp_to_tiling_cor1(p, &pp).and_then(|t| tiling_to_pp_cor1(p, &t));
            ok &= back.as_ref() == Ok(&pp);
        }
        if second {
            if let Ok(class) = cor2_constraints(h, l, k, a) {
                for pp in class.enumerate(ROUNDTRIP_SAMPLE) {
                    rec.roundtrips += 1;
                    let back = pp_to_tiling_cor2(h, l, k, a, &pp)
                        .and_then(|t| tiling_to_pp_cor2(h, l, k, a, &t));
                    ok &= back.as_ref() == Ok(&pp);
                }
            }
        }
    }
    ok
}

/// Checks one grid point. `seed` drives quad sampling.
pub fn check_point(p: &TiltedParams, seed: u64, suites: Suites, timing: bool) -> PointRecord {
    let start = Instant::now();
    let region = build_tilted_region(p);
    let oracle = count_region(&region);
    let mut rec = PointRecord {
        params: p.clone(),
        cells: region.len(),
        closed_form: None,
        oracle: oracle.to_string(),
        matches: true,
        runtime_ms: 0,
        kuo: None,
        bijections: None,
        errors: Vec::new(),
        pole: false,
        quads: 0,
        roundtrips: 0,
    };
    if suites.counts {
        match count_tilted(p) {
            Ok(c) => {
                rec.matches &= c == oracle;
                rec.closed_form = Some(c.to_string());
            }
            Err(e) => {
                rec.matches = false;
                rec.pole = matches!(e, FormulaError::Pole(_));
                rec.errors.push(format!("formula: {e}"));
            }
        }
    }
    if suites.kuo {
        rec.kuo = kuo_suite(p, &region, seed, &mut rec);
        rec.matches &= rec.kuo.unwrap_or(true);
    }
    if suites.bijections {
        let ok = bijection_suite(p, &region, &oracle, &mut rec);
        rec.bijections = Some(ok);
        rec.matches &= ok;
    }
    if timing {
        rec.runtime_ms = start.elapsed().as_millis() as u64;
    }
    rec
}

/// Number of workers from [`WORKERS_ENV`], defaulting to the available
/// parallelism.
///
/// # Errors
///
/// Returns [`CliError::Invalid`] if the variable is set but is not a
/// positive integer.
pub fn worker_count() -> Result<usize, CliError> {
    match std::env::var(WORKERS_ENV) {
        Ok(text) => match text.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(CliError::Invalid(format!(
                "{WORKERS_ENV} = {text:?} is not a positive integer"
            ))),
        },
        Err(_) => Ok(std::thread::available_parallelism().map_or(1, |n| n.get())),
    }
}

/// Sweeps the grid and builds the report.
///
/// # Errors
///
/// Exit 2 on negative bounds or a bad worker count, exit 4 if any region
/// of the grid is wider than the guard.
pub fn run_grid(
    max_k: i64,
    max_x: i64,
    max_t: i64,
    max_hl: i64,
    suites: Suites,
    timing: bool,
) -> Result<VerifyReport, CliError> {
    for (name, v) in [
        ("max-k", max_k),
        ("max-x", max_x),
        ("max-t", max_t),
        ("max-hl", max_hl),
    ] {
        if v < 0 {
            return Err(CliError::Invalid(format!(
                "--{name} = {v} must be nonnegative"
            )));
        }
    }
    let grid = TiltedParams::grid(max_k, max_x, max_t, max_hl);
    for p in &grid {
        guard(&build_tilted_region(p), &p.to_string())?;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(worker_count()?)
        .build()
        .map_err(|e| CliError::Invalid(format!("cannot start workers: {e}")))?;
    let points: Vec<PointRecord> = pool.install(|| {
        grid.par_iter()
            .enumerate()
            .map(|(i, p)| check_point(p, i as u64, suites, timing))
            .collect()
    });
    let summary = Summary {
        total: points.len(),
        mismatches: points
            .iter()
            .filter(|r| !r.matches)
            .map(|r| r.params.to_string())
            .collect(),
        pole_errors: points.iter().filter(|r| r.pole).count(),
        kuo_graph_quads: points.iter().map(|r| r.quads).sum(),
        roundtrips: points.iter().map(|r| r.roundtrips).sum(),
    };
    Ok(VerifyReport {
        grid: GridSpec {
            max_k,
            max_x,
            max_t,
            max_hl,
            checks: suites.names(),
        },
        points,
        summary,
    })
}

/// Runs `verify`.
///
/// # Errors
///
/// See [`run_grid`]. Mismatches are reported in the document and as
/// exit 3.
pub fn verify(args: &VerifyArgs) -> Result<Report, CliError> {
    let report = run_grid(
        args.max_k,
        args.max_x,
        args.max_t,
        args.max_hl,
        Suites::from(args.check),
        args.timing,
    )?;
    let failure = (!report.summary.mismatches.is_empty()).then(|| {
        CliError::Mismatch(format!(
            "{} of {} grid points failed",
            report.summary.mismatches.len(),
            report.summary.total
        ))
    });
    Ok(Report {
        text: to_json(&report),
        failure,
    })
}
