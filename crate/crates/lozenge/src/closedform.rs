// Copyright 2026 The lozenge developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// http://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or http://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.

//! Closed-form tiling counts.
//!
//! - [`count_hexagon`]: MacMahon's box formula for the hexagon `H(a,b,c)`;
//! - [`count_semihexagon`]: the dented semi-hexagon product over pairs of
//!   dent positions;
//! - [`count_halved_hexagon`]: the halved-hexagon double product, evaluated
//!   verbatim, together with [`count_halved_hexagon_reindexed`];
//! - [`phi`] and [`count_tilted`]: the tilted halved hexagon formula built
//!   from the three-fold product `Phi_k`.
//!
//! Every evaluator works in exact rational arithmetic and checks that the
//! final value is a nonnegative integer before returning it.

use std::fmt;

use num_traits::Signed;
use serde::Serialize;
use thiserror::Error;

use crate::exactnum::{as_integer, frac, pochhammer, product_ratio, BigInt, BigRational, NumError};

/// Errors raised while validating parameters or evaluating a formula.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    /// A parameter tuple violates its documented invariants.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    /// A Pochhammer pole was hit during evaluation.
    #[error(transparent)]
    Pole(#[from] NumError),
    /// The exact value of the product is not a nonnegative integer.
    #[error("formula value {value} is not a nonnegative integer")]
    NonIntegerResult {
        /// The offending exact value.
        value: BigRational,
    },
}

/// Parameters `(k, x, t, h; a_1 < ... < a_l)` of a tilted halved hexagon.
///
/// `k` is the staircase step width, `x` the north side, `t` the extra
/// base length, `h` the number of dents, and `a` lists the staircase
/// levels (out of `1..=h+l`) that carry no dent.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TiltedParams {
    k: i64,
    x: i64,
    t: i64,
    h: i64,
    a: Vec<i64>,
}

impl TiltedParams {
    /// Validates and builds a parameter tuple.
    ///
    /// # Errors
    ///
    /// Returns [`FormulaError::InvalidParams`] if a scalar is negative or if
    /// `a` is not strictly increasing inside `1..=h+l`.
    pub fn new(k: i64, x: i64, t: i64, h: i64, a: Vec<i64>) -> Result<Self, FormulaError> {
        for (name, v) in [("k", k), ("x", x), ("t", t), ("h", h)] {
            if v < 0 {
                return Err(FormulaError::InvalidParams(format!(
                    "{name} = {v} must be nonnegative"
                )));
            }
        }
        let top = h + a.len() as i64;
        if let Some(w) = a.windows(2).find(|w| w[0] >= w[1]) {
            return Err(FormulaError::InvalidParams(format!(
                "dent levels must be strictly increasing, found {} before {}",
                w[0], w[1]
            )));
        }
        if let Some(&v) = a.iter().find(|&&v| v < 1 || v > top) {
            return Err(FormulaError::InvalidParams(format!(
                "dent level {v} lies outside 1..={top}"
            )));
        }
        Ok(Self { k, x, t, h, a })
    }

    /// Staircase step width.
    pub fn k(&self) -> i64 {
        self.k
    }

    /// North side length.
    pub fn x(&self) -> i64 {
        self.x
    }

    /// Extra base length.
    pub fn t(&self) -> i64 {
        self.t
    }

    /// Number of dents.
    pub fn h(&self) -> i64 {
        self.h
    }

    /// Number of undented staircase levels.
    pub fn l(&self) -> i64 {
        self.a.len() as i64
    }

    /// The undented levels `a_1 < ... < a_l`.
    pub fn a(&self) -> &[i64] {
        &self.a
    }

    /// The dented levels `b_1 < ... < b_h`, the complement of `a` in
    /// `1..=h+l`.
    pub fn dent_levels(&self) -> Vec<i64> {
        (1..=self.h + self.l())
            .filter(|v| self.a.binary_search(v).is_err())
            .collect()
    }

    /// The length `h(k+1) + (l-1)k + t` of the long hexagon sides.
    pub fn long_side(&self) -> i64 {
        self.h * (self.k + 1) + (self.l() - 1) * self.k + self.t
    }

    /// Returns a copy with some fields replaced.
    pub fn with(&self, x: i64, t: i64, a: Vec<i64>) -> Result<Self, FormulaError> {
        Self::new(self.k, x, t, self.h, a)
    }

    /// Every valid tuple with `k <= max_k`, `x <= max_x`, `t <= max_t` and
    /// `h + l <= max_hl`, ordered by `k`, `x`, `t`, `h + l`, `l`, then `a`
    /// lexicographically.
    ///
    /// # Examples
    ///
    /// ```
    /// use lozenge::closedform::TiltedParams;
    ///
    /// assert_eq!(TiltedParams::grid(0, 0, 0, 2).len(), 7);
    /// assert_eq!(TiltedParams::grid(3, 3, 3, 5).len(), 4032);
    /// ```
    pub fn grid(max_k: i64, max_x: i64, max_t: i64, max_hl: i64) -> Vec<Self> {
        let mut out = Vec::new();
        for k in 0..=max_k {
            for x in 0..=max_x {
                for t in 0..=max_t {
                    for n in 0..=max_hl {
                        for l in 0..=n {
                            for a in increasing_sequences(l, n) {
                                out.push(Self {
                                    k,
                                    x,
                                    t,
                                    h: n - l,
                                    a,
                                });
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// All strictly increasing sequences of length `len` drawn from `1..=top`,
/// in lexicographic order.
pub fn increasing_sequences(len: i64, top: i64) -> Vec<Vec<i64>> {
    fn go(len: i64, from: i64, top: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() as i64 == len {
            out.push(cur.clone());
            return;
        }
        for v in from..=top {
            cur.push(v);
            go(len, v + 1, top, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, 1, top, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for TiltedParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.a.iter().map(|v| v.to_string()).collect();
        write!(
            f,
            "k={} x={} t={} h={} a=({})",
            self.k,
            self.x,
            self.t,
            self.h,
            a.join(",")
        )
    }
}

/// Side lengths `(a, b, c)` of the hexagon `H(a,b,c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct HexParams {
    /// North side.
    pub a: i64,
    /// North-west side.
    pub b: i64,
    /// South-west side.
    pub c: i64,
}

impl HexParams {
    /// Validates and builds a parameter triple.
    ///
    /// # Errors
    ///
    /// Returns [`FormulaError::InvalidParams`] if a side is negative.
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self, FormulaError> {
        if a < 0 || b < 0 || c < 0 {
            return Err(FormulaError::InvalidParams(format!(
                "hexagon sides ({a},{b},{c}) must be nonnegative"
            )));
        }
        Ok(Self { a, b, c })
    }
}

/// Parameters of the dented semi-hexagon `S(a,b; s_1 < ... < s_b)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SemiHexParams {
    a: i64,
    s: Vec<i64>,
}

impl SemiHexParams {
    /// Validates and builds a parameter tuple. The number of dents `b` is
    /// the length of `s`.
    ///
    /// # Errors
    ///
    /// Returns [`FormulaError::InvalidParams`] if `a < 0` or if `s` is not
    /// strictly increasing inside `1..=a+b`.
    pub fn new(a: i64, s: Vec<i64>) -> Result<Self, FormulaError> {
        if a < 0 {
            return Err(FormulaError::InvalidParams(format!(
                "top side {a} must be nonnegative"
            )));
        }
        let top = a + s.len() as i64;
        if s.windows(2).any(|w| w[0] >= w[1]) {
            return Err(FormulaError::InvalidParams(
                "dent positions must be strictly increasing".into(),
            ));
        }
        if let Some(&v) = s.iter().find(|&&v| v < 1 || v > top) {
            return Err(FormulaError::InvalidParams(format!(
                "dent position {v} lies outside 1..={top}"
            )));
        }
        Ok(Self { a, s })
    }

    /// Top side.
    pub fn a(&self) -> i64 {
        self.a
    }

    /// Number of dents.
    pub fn b(&self) -> i64 {
        self.s.len() as i64
    }

    /// Dent positions along the base, counted from the left.
    pub fn s(&self) -> &[i64] {
        &self.s
    }
}

/// Parameters `(a, b, c)` of the halved hexagon `P(a,b,c)`, with `c <= b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct HalvedHexParams {
    /// Side carrying no staircase.
    pub a: i64,
    /// Long side.
    pub b: i64,
    /// Number of staircase steps.
    pub c: i64,
}

impl HalvedHexParams {
    /// Validates and builds a parameter triple.
    ///
    /// # Errors
    ///
    /// Returns [`FormulaError::InvalidParams`] on a negative entry or when
    /// `c > b`.
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self, FormulaError> {
        if a < 0 || b < 0 || c < 0 || c > b {
            return Err(FormulaError::InvalidParams(format!(
                "halved hexagon ({a},{b},{c}) needs nonnegative entries and c <= b"
            )));
        }
        Ok(Self { a, b, c })
    }

    /// The tilted parameters `(k=1, x=a, t=b-c+1, h=0, a=(1..c))` whose
    /// region is this halved hexagon.
    pub fn as_tilted(&self) -> TiltedParams {
        TiltedParams::new(1, self.a, self.b - self.c + 1, 0, (1..=self.c).collect())
            .expect("halved hexagon parameters map to valid tilted parameters")
    }
}

fn into_count(value: BigRational) -> Result<BigInt, FormulaError> {
    match as_integer(&value) {
        Some(n) if !n.is_negative() => Ok(n),
        _ => Err(FormulaError::NonIntegerResult { value }),
    }
}

fn poch_ratio(num_base: i64, den_base: i64, n: i64) -> Result<BigRational, FormulaError> {
    Ok(product_ratio([(
        pochhammer(num_base, n)?,
        pochhammer(den_base, n)?,
    )])?)
}

/// The three-fold product `Phi_k((a_i); t, x, h)`.
///
/// With `l = a.len()`, the value is the product of
///
/// 1. `(x+h+l+1-a_i)_{n_i} / (h+l+1-a_i)_{n_i}` with
///    `n_i = t+(k+1)a_i-l-k`, for `i = 1..l`;
/// 2. `((k+1)(x+h)+c)_j / ((k+1)h+c)_j` with
///    `c = t+k(k+1)i+(j-1)k-(k+1)(k-1)`, for `j = 1..k-1` and
///    `i = 1..floor((l+k-j)/(k+1))`;
/// 3. `((k+1)(x+h)+c)_n / ((k+1)h+c)_n` with `c = t+k(k+1)i-k+1` and
///    `n = (k+1)l+k-(k+1)^2 i`, for `i = 1..floor(l/(k+1))`.
///
/// Empty products are `1`, so `l = 0` gives `1`.
///
/// # Errors
///
/// Propagates [`FormulaError::Pole`] from a Pochhammer symbol.
///
/// # Examples
///
/// ```
/// use lozenge::closedform::phi;
/// use lozenge::exactnum::rat;
///
/// assert_eq!(phi(2, &[1, 3], 5, 0, 1).unwrap(), rat(1));
/// assert_eq!(phi(1, &[1], 1, 1, 0).unwrap(), rat(2));
/// ```
pub fn phi(k: i64, a: &[i64], t: i64, x: i64, h: i64) -> Result<BigRational, FormulaError> {
    let l = a.len() as i64;
    let mut acc = BigRational::from_integer(1.into());
    for &ai in a {
        let n = t + (k + 1) * ai - l - k;
        acc *= poch_ratio(x + h + l + 1 - ai, h + l + 1 - ai, n)?;
    }
    for j in 1..k {
        let top = (l + k - j).div_euclid(k + 1);
        for i in 1..=top {
            let c = t + k * (k + 1) * i + (j - 1) * k - (k + 1) * (k - 1);
            acc *= poch_ratio((k + 1) * (x + h) + c, (k + 1) * h + c, j)?;
        }
    }
    for i in 1..=l.div_euclid(k + 1) {
        let c = t + k * (k + 1) * i - k + 1;
        let n = (k + 1) * l + k - (k + 1) * (k + 1) * i;
        acc *= poch_ratio((k + 1) * (x + h) + c, (k + 1) * h + c, n)?;
    }
    Ok(acc)
}

/// Which `h`-argument the inner `Phi` factors of the tilted formula use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum InnerIndex {
    /// `a_i - i`, the value that matches the tiling count.
    Corrected,
    /// `a_{i+1} - i - 1`, the printed value.
    Printed,
}

fn tilted_value(p: &TiltedParams, index: InnerIndex) -> Result<BigRational, FormulaError> {
    let (k, t, a) = (p.k, p.t, &p.a);
    let l = a.len();
    let next = |i: usize| if i < l { a[i] } else { p.h + l as i64 + 1 };
    let mut acc = phi(k, a, t, p.x, p.h)?;
    for i in 1..=l {
        let (cur, nxt) = (a[i - 1], next(i));
        let inner_h = match index {
            InnerIndex::Corrected => cur - i as i64,
            InnerIndex::Printed => nxt - i as i64 - 1,
        };
        acc *= phi(k, &a[..i], t, nxt - cur - 1, inner_h)?;
    }
    Ok(acc)
}

/// Number of lozenge tilings of the tilted halved hexagon `H_{x,t,h}(a)`.
///
/// The value is
/// `Phi_k(a; t, x, h) * prod_{i=1..l} Phi_k(a_1..a_i; t, a_{i+1}-a_i-1, a_i-i)`
/// with `a_{l+1} = h+l+1`. The last argument of the inner factors is
/// `a_i - i`; the verbatim variant [`count_tilted_as_printed`] uses
/// `a_{i+1} - i - 1` there and is not integral in general.
///
/// # Errors
///
/// Returns [`FormulaError::NonIntegerResult`] if the exact product is not a
/// nonnegative integer, and propagates poles.
///
/// # Examples
///
/// ```
/// use lozenge::closedform::{count_tilted, TiltedParams};
///
/// let p = TiltedParams::new(1, 1, 1, 0, vec![1]).unwrap();
/// assert_eq!(count_tilted(&p).unwrap(), 2.into());
/// let p = TiltedParams::new(0, 1, 1, 0, vec![1, 2]).unwrap();
/// assert_eq!(count_tilted(&p).unwrap(), 3.into());
/// ```
pub fn count_tilted(p: &TiltedParams) -> Result<BigInt, FormulaError> {
    into_count(tilted_value(p, InnerIndex::Corrected)?)
}

/// The exact value of the tilted formula with the inner `h`-argument
/// `a_{i+1} - i - 1`, as typeset in the source statement.
///
/// # Errors
///
/// Propagates poles.
pub fn tilted_as_printed_value(p: &TiltedParams) -> Result<BigRational, FormulaError> {
    tilted_value(p, InnerIndex::Printed)
}

/// [`tilted_as_printed_value`] with the integrality check applied.
///
/// # Errors
///
/// Returns [`FormulaError::NonIntegerResult`] whenever the verbatim
/// product is fractional (for example at `k=0, x=t=0, h=2, a=(2)`).
pub fn count_tilted_as_printed(p: &TiltedParams) -> Result<BigInt, FormulaError> {
    into_count(tilted_as_printed_value(p)?)
}

/// MacMahon's count `prod_{i,j,k} (i+j+k-1)/(i+j+k-2)` of tilings of the
/// hexagon with sides `a, b, c, a, b, c`.
///
/// # Examples
///
/// ```
/// use lozenge::closedform::{count_hexagon, HexParams};
///
/// assert_eq!(count_hexagon(&HexParams::new(2, 2, 2).unwrap()), 20.into());
/// assert_eq!(count_hexagon(&HexParams::new(3, 4, 0).unwrap()), 1.into());
/// ```
pub fn count_hexagon(p: &HexParams) -> BigInt {
    let mut acc = BigRational::from_integer(1.into());
    for i in 1..=p.a {
        for j in 1..=p.b {
            for k in 1..=p.c {
                acc *= frac(i + j + k - 1, i + j + k - 2);
            }
        }
    }
    into_count(acc).expect("the box product is a positive integer")
}

/// Tilings of the dented semi-hexagon:
/// `prod_{1 <= i < j <= b} (s_j - s_i) / (j - i)`.
///
/// # Examples
///
/// ```
/// use lozenge::closedform::{count_semihexagon, SemiHexParams};
///
/// assert_eq!(count_semihexagon(&SemiHexParams::new(1, vec![1, 3]).unwrap()), 2.into());
/// ```
pub fn count_semihexagon(p: &SemiHexParams) -> BigInt {
    let s = &p.s;
    let mut acc = BigRational::from_integer(1.into());
    for j in 0..s.len() {
        for i in 0..j {
            acc *= frac(s[j] - s[i], (j - i) as i64);
        }
    }
    into_count(acc).expect("the dent product is a positive integer")
}

fn halved_value(outer: i64, upper: impl Fn(i64) -> i64, p: &HalvedHexParams) -> BigRational {
    let (a, b, c) = (p.a, p.b, p.c);
    let mut acc = BigRational::from_integer(1.into());
    for i in 1..=outer {
        for j in 1..=b - c + 1 {
            acc *= frac(a + i + j - 1, i + j - 1);
        }
        for j in b - c + 2..=upper(i) {
            acc *= frac(2 * a + i + j - 1, i + j - 1);
        }
    }
    acc
}

/// The exact value of the halved-hexagon double product exactly as
/// typeset:
/// `prod_{i=1..a} [prod_{j=1..b-c+1} (a+i+j-1)/(i+j-1) *
/// prod_{j=b-c+2..b-a+i} (2a+i+j-1)/(i+j-1)]`.
pub fn halved_hexagon_printed_value(p: &HalvedHexParams) -> BigRational {
    halved_value(p.a, |i| p.b - p.a + i, p)
}

/// [`halved_hexagon_printed_value`] with the integrality check applied.
///
/// # Errors
///
/// Returns [`FormulaError::NonIntegerResult`] when the verbatim product is
/// fractional, for example at `(a,b,c) = (1,3,3)`.
///
/// # Examples
///
/// ```
/// use lozenge::closedform::{count_halved_hexagon, HalvedHexParams};
///
/// assert_eq!(count_halved_hexagon(&HalvedHexParams::new(1, 1, 1).unwrap()).unwrap(), 2.into());
/// assert_eq!(count_halved_hexagon(&HalvedHexParams::new(1, 2, 1).unwrap()).unwrap(), 3.into());
/// assert!(count_halved_hexagon(&HalvedHexParams::new(1, 3, 3).unwrap()).is_err());
/// ```
pub fn count_halved_hexagon(p: &HalvedHexParams) -> Result<BigInt, FormulaError> {
    into_count(halved_hexagon_printed_value(p))
}

/// Tilings of the halved hexagon `P(a,b,c)`:
/// `prod_{i=1..c} [prod_{j=1..b-c+1} (a+i+j-1)/(i+j-1) *
/// prod_{j=b-c+2..b-c+i} (2a+i+j-1)/(i+j-1)]`.
///
/// This is the verbatim product with the outer range running to `c` and
/// the last upper limit `b-c+i`. It agrees with the verbatim product when
/// `a = c` or `a = 0`.
///
/// # Examples
///
/// ```
/// use lozenge::closedform::{count_halved_hexagon_reindexed, HalvedHexParams};
///
/// let p = HalvedHexParams::new(1, 3, 3).unwrap();
/// assert_eq!(count_halved_hexagon_reindexed(&p), 14.into());
/// ```
pub fn count_halved_hexagon_reindexed(p: &HalvedHexParams) -> BigInt {
    into_count(halved_value(p.c, |i| p.b - p.c + i, p))
        .expect("the reindexed product is a positive integer")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn tp(k: i64, x: i64, t: i64, h: i64, a: &[i64]) -> TiltedParams {
        TiltedParams::new(k, x, t, h, a.to_vec()).unwrap()
    }

    #[test]
    fn phi_spot_values() {
        assert_eq!(phi(2, &[1, 3], 5, 0, 1).unwrap(), rat(1));
        assert_eq!(phi(3, &[], 2, 4, 1).unwrap(), rat(1));
        assert_eq!(phi(1, &[1], 1, 1, 0).unwrap(), rat(2));
    }

    #[test]
    fn tilted_spot_values() {
        assert_eq!(count_tilted(&tp(2, 5, 3, 1, &[])).unwrap(), 1.into());
        assert_eq!(count_tilted(&tp(1, 1, 1, 0, &[1])).unwrap(), 2.into());
        assert_eq!(count_tilted(&tp(0, 1, 1, 0, &[1, 2])).unwrap(), 3.into());
        assert_eq!(count_tilted(&tp(0, 0, 0, 2, &[2])).unwrap(), 2.into());
    }

    #[test]
    fn printed_tilted_formula_is_fractional_somewhere() {
        let p = tp(0, 0, 0, 2, &[2]);
        assert_eq!(tilted_as_printed_value(&p).unwrap(), frac(3, 2));
        assert!(matches!(
            count_tilted_as_printed(&p),
            Err(FormulaError::NonIntegerResult { .. })
        ));
        let q = tp(1, 1, 1, 0, &[1]);
        assert_eq!(count_tilted_as_printed(&q).unwrap(), 2.into());
    }

    #[test]
    fn params_are_validated() {
        assert!(TiltedParams::new(1, 1, 1, 0, vec![2, 1]).is_err());
        assert!(TiltedParams::new(1, 1, 1, 0, vec![2]).is_err());
        assert!(TiltedParams::new(1, -1, 1, 0, vec![]).is_err());
        assert!(SemiHexParams::new(1, vec![3, 1]).is_err());
        assert!(SemiHexParams::new(1, vec![4]).is_err());
        assert!(HalvedHexParams::new(1, 1, 2).is_err());
        assert!(HexParams::new(-1, 0, 0).is_err());
    }

    #[test]
    fn dent_levels_complement_a() {
        let p = tp(1, 0, 0, 3, &[2, 4]);
        assert_eq!(p.dent_levels(), vec![1, 3, 5]);
        assert_eq!(p.long_side(), 3 * 2 + 1);
    }

    #[test]
    fn classical_spot_values() {
        let hex = |a, b, c| count_hexagon(&HexParams::new(a, b, c).unwrap());
        assert_eq!(hex(3, 4, 0), 1.into());
        assert_eq!(hex(1, 1, 1), 2.into());
        assert_eq!(hex(2, 2, 2), 20.into());
        let semi = |a, s: &[i64]| count_semihexagon(&SemiHexParams::new(a, s.to_vec()).unwrap());
        assert_eq!(semi(2, &[2]), 1.into());
        assert_eq!(semi(3, &[1, 2, 3]), 1.into());
        assert_eq!(semi(1, &[1, 3]), 2.into());
        let halved = |a, b, c| count_halved_hexagon(&HalvedHexParams::new(a, b, c).unwrap());
        assert_eq!(halved(0, 2, 1).unwrap(), 1.into());
        assert_eq!(halved(1, 1, 1).unwrap(), 2.into());
        assert_eq!(halved(1, 2, 1).unwrap(), 3.into());
        assert_eq!(
            halved_hexagon_printed_value(&HalvedHexParams::new(1, 3, 3).unwrap()),
            frac(20, 3)
        );
    }
}
