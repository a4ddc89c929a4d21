use std::fmt;

use num_traits::{FromPrimitive, Signed};

use crate::error::{Error, Result};

/// An exact ordered field, e.g. `Ratio<i64>` or `BigRational`.
///
/// `Ord` rules out floating point; the geometry never rounds.
pub trait Scalar: Clone + Ord + Signed + FromPrimitive + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("every exact field contains the integers")
    }

    /// Parses `"p/q"` or an integer string.
    fn parse(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let text = if trimmed.contains('/') {
            trimmed.to_string()
        } else {
            format!("{trimmed}/1")
        };
        Self::from_str_radix(&text, 10).map_err(|_| Error::Malformed(format!("not a rational number: {s:?}")))
    }
}

impl<T> Scalar for T where T: Clone + Ord + Signed + FromPrimitive + fmt::Debug + fmt::Display + Send + Sync + 'static {}
