// Copyright 2026 The lozenge developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// http://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or http://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.

//! The `render` subcommand: SVG pictures of regions and tilings.
//!
//! The north side is horizontal at the top. Dents are black triangles.
//! Without a tiling every cell is outlined; with one, every lozenge is
//! filled with the color of its orientation.

use std::fmt::Write as _;

use lozenge::lattice::{
    vertex_point, Lozenge, LozengeOrientation, Region, Tiling, TriCell, Vertex,
};
use lozenge::oracle::{count_region, nth_tiling};

use crate::args::RenderArgs;
use crate::region::{guard, RegionSpec};
use crate::{CliError, Report};

/// Drawing options.
#[derive(Debug, Clone, PartialEq)]
pub struct RenderSpec {
    /// Length of a unit edge.
    pub scale: f64,
    /// Fill of left lozenges.
    pub left: &'static str,
    /// Fill of right lozenges.
    pub right: &'static str,
    /// Fill of vertical lozenges.
    pub vertical: &'static str,
}

impl RenderSpec {
    /// The default palette at the given scale.
    ///
    /// # Errors
    ///
    /// Returns [`CliError::Invalid`] unless `scale` is finite and positive.
    pub fn new(scale: f64) -> Result<Self, CliError> {
        if !(scale.is_finite() && scale > 0.0) {
            return Err(CliError::Invalid(format!("scale {scale} must be positive")));
        }
        Ok(RenderSpec {
            scale,
            left: "#f2b134",
            right: "#4f9dd9",
            vertical: "#8cc269",
        })
    }

    fn color(&self, o: LozengeOrientation) -> &'static str {
        match o {
            LozengeOrientation::Left => self.left,
            LozengeOrientation::Right => self.right,
            LozengeOrientation::Vertical => self.vertical,
        }
    }
}

struct Canvas {
    min_x: f64,
    min_y: f64,
    width: f64,
    height: f64,
    scale: f64,
    margin: f64,
}

impl Canvas {
    fn new(cells: impl Iterator<Item = TriCell>, scale: f64) -> Self {
        let (mut min_x, mut min_y, mut max_x, mut max_y) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
        let mut first = true;
        for v in cells.flat_map(|c| c.vertices()) {
            let (x, y) = vertex_point(v);
            if first {
                (min_x, min_y, max_x, max_y) = (x, y, x, y);
                first = false;
            }
            min_x = min_x.min(x);
            min_y = min_y.min(y);
            max_x = max_x.max(x);
            max_y = max_y.max(y);
        }
        let margin = scale / 2.0;
        Canvas {
            min_x,
            min_y,
            width: (max_x - min_x) * scale + 2.0 * margin,
            height: (max_y - min_y) * scale + 2.0 * margin,
            scale,
            margin,
        }
    }

    fn point(&self, v: Vertex) -> (f64, f64) {
        let (x, y) = vertex_point(v);
        (
            (x - self.min_x) * self.scale + self.margin,
            (y - self.min_y) * self.scale + self.margin,
        )
    }

    fn points(&self, vs: &[Vertex]) -> String {
        vs.iter()
            .map(|&v| {
                let (x, y) = self.point(v);
                format!("{x:.2},{y:.2}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn lozenge_outline(lz: &Lozenge) -> Vec<Vertex> {
    let up = lz.up.vertices();
    let down = lz.down.vertices();
    let far_up = *up
        .iter()
        .find(|v| !down.contains(v))
        .expect("lozenge halves share one edge");
    let far_down = *down
        .iter()
        .find(|v| !up.contains(v))
        .expect("lozenge halves share one edge");
    let shared: Vec<Vertex> = up.iter().copied().filter(|v| down.contains(v)).collect();
    vec![far_up, shared[0], far_down, shared[1]]
}

/// Draws a region, its dents and optionally one tiling.
pub fn render_svg(
    region: &Region,
    dents: &[TriCell],
    tiling: Option<&Tiling>,
    spec: &RenderSpec,
) -> String {
    let canvas = Canvas::new(region.iter().chain(dents).copied(), spec.scale);
    let stroke = spec.scale / 24.0;
    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w:.2}" height="{h:.2}" viewBox="0 0 {w:.2} {h:.2}">"#,
        w = canvas.width,
        h = canvas.height
    );
    let _ = writeln!(
        svg,
        r##"<g stroke="#333333" stroke-width="{stroke:.3}" stroke-linejoin="round">"##
    );
    match tiling {
        None => {
            for cell in region.iter() {
                let _ = writeln!(
                    svg,
                    r#"<polygon class="cell" points="{}" fill="none"/>"#,
                    canvas.points(&cell.vertices())
                );
            }
        }
        Some(t) => {
            for lz in t.lozenges() {
                let name = match lz.orientation {
                    LozengeOrientation::Left => "left",
                    LozengeOrientation::Right => "right",
                    LozengeOrientation::Vertical => "vertical",
                };
                let _ = writeln!(
                    svg,
                    r#"<polygon class="lozenge {name}" points="{}" fill="{}"/>"#,
                    canvas.points(&lozenge_outline(lz)),
                    spec.color(lz.orientation)
                );
            }
        }
    }
    for dent in dents {
        let _ = writeln!(
            svg,
            r##"<polygon class="dent" points="{}" fill="#000000"/>"##,
            canvas.points(&dent.vertices())
        );
    }
    for (a, b) in region.boundary_edges() {
        let (x1, y1) = canvas.point(a);
        let (x2, y2) = canvas.point(b);
        let _ = writeln!(
            svg,
            r#"<line class="boundary" x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke-width="{:.3}"/>"#,
            3.0 * stroke
        );
    }
    svg.push_str("</g>\n</svg>\n");
    svg
}

/// Runs `render`.
///
/// # Errors
///
/// Exit 2 on invalid parameters or scale, exit 4 if a tiling is requested
/// on a region wider than the guard, exit 5 if the tiling index is not
/// below the number of tilings.
pub fn render(args: &RenderArgs) -> Result<Report, CliError> {
    let spec = RegionSpec::from_args(&args.region)?;
    let style = RenderSpec::new(args.scale)?;
    let region = spec.region();
    let tiling = match args.tiling_index {
        None => None,
        Some(i) => {
            guard(&region, "tiling enumeration")?;
            Some(nth_tiling(&region, i).ok_or_else(|| {
                CliError::OutOfRange(format!(
                    "tiling index {i} but the region has {} tilings",
                    count_region(&region)
                ))
            })?)
        }
    };
    Ok(Report::ok(render_svg(
        &region,
        &spec.dents(),
        tiling.as_ref(),
        &style,
    )))
}
