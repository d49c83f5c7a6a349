// Copyright 2026 The lozenge developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// http://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or http://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.

//! Exact enumeration of lozenge tilings of tilted halved hexagons.
//!
//! - [`exactnum`]: exact integers, rationals and the Pochhammer symbol;
//! - [`closedform`]: product formulas for hexagons, dented semi-hexagons,
//!   halved hexagons and tilted halved hexagons;
//! - [`lattice`]: regions of the triangular lattice, their tilings, dual
//!   graphs and congruence;
//! - [`oracle`]: brute-force matching counts, tiling enumeration and
//!   condensation identities;
//! - [`bijection`]: the two maps from tilings to restricted plane
//!   partitions and the matching partition counters.

#![warn(missing_docs)]

pub mod bijection;
pub mod closedform;
pub mod exactnum;
pub mod lattice;
pub mod oracle;
