//! Published closed forms for paths, cycles and the perturbation values of a
//! few families. These are the claims under test, not ground truth: the
//! suite compares every one of them against exact computation.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

fn domain(what: &str, n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::OutOfDomain(format!("{what} is stated for n >= {min}, got {n}")))
    } else {
        Ok(())
    }
}

/// `2⌈n/3⌉ - 1` if `n ≡ 1 (mod 3)`, else `2⌈n/3⌉`.
pub fn chi_dt_path_formula(n: usize) -> Result<usize> {
    domain("path formula", n, 2)?;
    let base = 2 * n.div_ceil(3);
    Ok(if n % 3 == 1 { base - 1 } else { base })
}

/// `2` for `n = 4`; otherwise `4⌊n/6⌋ + r` for `r = n mod 6 ∈ {0,1,2,4}` and
/// `4⌊n/6⌋ + r - 1` for `r ∈ {3,5}`. `C_3 = K_3` is not covered.
pub fn chi_dt_cycle_formula(n: usize) -> Result<usize> {
    domain("cycle formula", n, 4)?;
    if n == 4 {
        return Ok(2);
    }
    let r = n % 6;
    let base = 4 * (n / 6) + r;
    Ok(if r == 3 || r == 5 { base - 1 } else { base })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormulaFamily {
    Path,
    Cycle,
    Friendship,
    Book,
    BalancedCompleteBipartite,
}

impl fmt::Display for FormulaFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FormulaFamily::Path => "path",
            FormulaFamily::Cycle => "cycle",
            FormulaFamily::Friendship => "friendship",
            FormulaFamily::Book => "book",
            FormulaFamily::BalancedCompleteBipartite => "balanced_complete_bipartite",
        })
    }
}

impl FromStr for FormulaFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "path" => FormulaFamily::Path,
            "cycle" => FormulaFamily::Cycle,
            "friendship" => FormulaFamily::Friendship,
            "book" => FormulaFamily::Book,
            "balanced_complete_bipartite" => FormulaFamily::BalancedCompleteBipartite,
            _ => return Err(Error::Parse(format!("unknown formula family {s:?}"))),
        })
    }
}

/// Stated TDC-stability of a family member.
pub fn stability_formula(family: FormulaFamily, n: usize) -> Result<usize> {
    match family {
        FormulaFamily::Path => domain("path stability", n, 4).map(|_| 1),
        FormulaFamily::Cycle => {
            domain("cycle stability", n, 3)?;
            Ok(match n % 6 {
                _ if n == 3 => 1,
                0 | 3 => 2,
                _ => 1,
            })
        }
        FormulaFamily::Friendship => domain("friendship stability", n, 2).map(|_| 1),
        FormulaFamily::Book => domain("book stability", n, 3).map(|_| 1),
        FormulaFamily::BalancedCompleteBipartite => {
            domain("K_{n,n} stability", n, 1).map(|_| n)
        }
    }
}

/// Stated TDC-bondage of a family member.
pub fn bondage_formula(family: FormulaFamily, n: usize) -> Result<usize> {
    match family {
        FormulaFamily::Path => domain("path bondage", n, 3).map(|_| 1),
        FormulaFamily::Cycle => {
            domain("cycle bondage", n, 5)?;
            Ok(if n % 6 == 4 { 1 } else { 2 })
        }
        FormulaFamily::Friendship => domain("friendship bondage", n, 2).map(|_| 1),
        FormulaFamily::Book | FormulaFamily::BalancedCompleteBipartite => Err(Error::OutOfDomain(
            format!("no bondage value is stated for the {family} family"),
        )),
    }
}
