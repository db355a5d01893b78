use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The finite slice spanned by `H^e v_j` with `e <= hdegree` and
/// `|j| <= grading`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TruncationBox {
    pub grading: u64,
    pub hdegree: u64,
}

impl TruncationBox {
    pub const fn new(grading: u64, hdegree: u64) -> Self {
        TruncationBox { grading, hdegree }
    }

    pub fn contains(&self, j: i64, e: u64) -> bool {
        j.unsigned_abs() <= self.grading && e <= self.hdegree
    }

    pub fn dimension(&self) -> usize {
        ((2 * self.grading + 1) * (self.hdegree + 1)) as usize
    }
}

impl Default for TruncationBox {
    fn default() -> Self {
        TruncationBox::new(8, 12)
    }
}

impl fmt::Display for TruncationBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.grading, self.hdegree)
    }
}

impl FromStr for TruncationBox {
    type Err = Error;
    /// `"G,D"`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Domain(format!("box must look like G,D, got {s:?}"));
        let (g, d) = s.split_once(',').ok_or_else(bad)?;
        Ok(TruncationBox::new(
            g.trim().parse().map_err(|_| bad())?,
            d.trim().parse().map_err(|_| bad())?,
        ))
    }
}
