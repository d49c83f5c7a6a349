// Copyright 2026 The lozenge developers.
//
// Licensed under the Apache License, Version 2.0 <LICENSE-APACHE or
// http://www.apache.org/licenses/LICENSE-2.0> or the MIT license
// <LICENSE-MIT or http://opensource.org/licenses/MIT>, at your
// option. This file may not be copied, modified, or distributed
// except according to those terms.

//! Exact integer and rational arithmetic for the product formulas.
//!
//! Integers and rationals come from `num-bigint` and `num-rational`; a
//! [`BigRational`] is always stored in lowest terms with a positive
//! denominator. On top of those this module provides
//!
//! - [`pochhammer`]: the rising factorial `(x)_n` for every integer `n`,
//!   including the reciprocal form used for negative `n`;
//! - [`product_ratio`]: an exact product of `numerator / denominator`
//!   factor pairs, shared by every closed-form evaluator.

use num_traits::{One, Zero};
use thiserror::Error;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Errors raised by exact evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    /// A Pochhammer symbol with negative length hit a zero factor in its
    /// denominator `(x-1)(x-2)...(x+n)`.
    #[error("pole in pochhammer({x}, {n}): denominator factor {factor} is zero")]
    Pole {
        /// Base of the symbol.
        x: i64,
        /// Length of the symbol (negative).
        n: i64,
        /// The vanishing factor, always `0`; kept for diagnostics.
        factor: i64,
    },
    /// A factor pair passed to [`product_ratio`] had a zero denominator.
    #[error("division by zero in factor {index} of a product")]
    DivisionByZero {
        /// Position of the offending pair in the input sequence.
        index: usize,
    },
}

/// Converts a machine integer into an exact rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Converts a machine fraction into an exact rational.
///
/// # Panics
///
/// Panics if `den` is zero.
pub fn frac(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// The Pochhammer symbol `(x)_n`.
///
/// - `n > 0`: `x (x+1) ... (x+n-1)`;
/// - `n = 0`: `1`;
/// - `n < 0`: `1 / ((x-1)(x-2) ... (x+n))`.
///
/// The result is exact. For `n >= 0` it is always an integer.
///
/// # Errors
///
/// Returns [`NumError::Pole`] when `n < 0` and one of the denominator
/// factors `x-1, ..., x+n` vanishes.
///
/// # Examples
///
/// ```
/// use lozenge::exactnum::{frac, pochhammer, rat};
///
/// assert_eq!(pochhammer(5, 0).unwrap(), rat(1));
/// assert_eq!(pochhammer(3, 2).unwrap(), rat(12));
/// assert_eq!(pochhammer(5, -2).unwrap(), frac(1, 12));
/// assert!(pochhammer(2, -3).is_err());
/// ```
pub fn pochhammer(x: i64, n: i64) -> Result<BigRational, NumError> {
    if n >= 0 {
        let mut acc = BigInt::one();
        for i in 0..n {
            acc *= x + i;
        }
        return Ok(BigRational::from_integer(acc));
    }
    let mut den = BigInt::one();
    for i in 1..=-n {
        let factor = x - i;
        if factor == 0 {
            return Err(NumError::Pole { x, n, factor });
        }
        den *= factor;
    }
    Ok(BigRational::new(BigInt::one(), den))
}

/// The exact product of `numerator / denominator` over a stream of pairs.
///
/// Factors are folded into the running product one at a time, and every
/// partial product is kept in lowest terms. The empty product is `1`.
///
/// # Errors
///
/// Returns [`NumError::DivisionByZero`] if any denominator is zero.
///
/// # Examples
///
/// ```
/// use lozenge::exactnum::{product_ratio, rat};
///
/// assert_eq!(product_ratio(Vec::new()).unwrap(), rat(1));
/// let pairs = vec![(rat(2), rat(1)), (rat(3), rat(2))];
/// assert_eq!(product_ratio(pairs).unwrap(), rat(3));
/// ```
pub fn product_ratio<I>(factors: I) -> Result<BigRational, NumError>
where
    I: IntoIterator<Item = (BigRational, BigRational)>,
{
    let mut acc = BigRational::one();
    for (index, (num, den)) in factors.into_iter().enumerate() {
        if den.is_zero() {
            return Err(NumError::DivisionByZero { index });
        }
        acc = acc * num / den;
    }
    Ok(acc)
}

/// Returns the value as a [`BigInt`] when its denominator is `1`.
pub fn as_integer(value: &BigRational) -> Option<BigInt> {
    if value.is_integer() {
        Some(value.to_integer())
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_spot_values() {
        assert_eq!(pochhammer(5, 0).unwrap(), rat(1));
        assert_eq!(pochhammer(3, 2).unwrap(), rat(12));
        assert_eq!(pochhammer(5, -2).unwrap(), frac(1, 12));
        assert_eq!(pochhammer(-2, 3).unwrap(), rat(0));
        assert_eq!(pochhammer(0, -1).unwrap(), rat(-1));
    }

    #[test]
    fn pochhammer_pole_reports_factor() {
        assert_eq!(
            pochhammer(3, -4),
            Err(NumError::Pole {
                x: 3,
                n: -4,
                factor: 0
            })
        );
        assert!(pochhammer(1, -1).is_err());
    }

    #[test]
    fn product_ratio_spot_values() {
        assert_eq!(product_ratio(Vec::new()).unwrap(), rat(1));
        assert_eq!(
            product_ratio(vec![(rat(2), rat(1)), (rat(3), rat(2))]).unwrap(),
            rat(3)
        );
        assert_eq!(
            product_ratio(vec![(rat(1), rat(3)), (rat(3), rat(1))]).unwrap(),
            rat(1)
        );
        assert_eq!(
            product_ratio(vec![(rat(1), rat(1)), (rat(1), rat(0))]),
            Err(NumError::DivisionByZero { index: 1 })
        );
    }

    #[test]
    fn rationals_stay_reduced() {
        let v = frac(6, -4);
        assert_eq!(v.numer(), &BigInt::from(-3));
        assert_eq!(v.denom(), &BigInt::from(2));
        assert!(rat(0).denom().is_one());
    }
}
