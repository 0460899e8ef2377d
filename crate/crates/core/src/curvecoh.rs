//! Smooth rational curves and complete intersections in P³: genus,
//! cohomology of `O_C(a)`, normal-bundle sections and Hilbert-scheme
//! dimensions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::parse_list;
use crate::p3rr::{chi_o_p3, h0_o_p3};

/// A family `H1` of smooth connected curves in P³.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "variant")]
pub enum CurveFamily {
    /// Smooth rational curves of degree `d`.
    RationalCurve { d: u32 },
    /// Smooth complete intersections `S_{d1} ∩ S_{d2}`, `d1 ≤ d2`.
    CompleteIntersection { d1: u32, d2: u32 },
}

/// `(h⁰, h¹)` of a line bundle on a curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveCohomology {
    pub h0: i64,
    pub h1: i64,
}

impl CurveCohomology {
    pub fn chi(&self) -> i64 {
        self.h0 - self.h1
    }
}

impl CurveFamily {
    pub fn rational(d: u32) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidCurve("rational curve of degree 0".into()));
        }
        Ok(CurveFamily::RationalCurve { d })
    }

    /// Complete intersection of type `(d1, d2)`. The pair must already be
    /// sorted; `(1,1)` and `(1,2)` are excluded since they are rational.
    pub fn complete_intersection(d1: u32, d2: u32) -> Result<Self> {
        if d1 == 0 || d2 == 0 {
            return Err(Error::InvalidCurve(format!("degrees ({d1},{d2}) must be positive")));
        }
        if d1 > d2 {
            return Err(Error::InvalidCurve(format!("need d1 <= d2, got ({d1},{d2})")));
        }
        if (d1, d2) == (1, 1) || (d1, d2) == (1, 2) {
            return Err(Error::InvalidCurve(format!("({d1},{d2}) is excluded")));
        }
        Ok(CurveFamily::CompleteIntersection { d1, d2 })
    }

    /// Re-checks the constructor invariants, e.g. after deserialization.
    pub fn validate(&self) -> Result<()> {
        match *self {
            CurveFamily::RationalCurve { d } => Self::rational(d).map(|_| ()),
            CurveFamily::CompleteIntersection { d1, d2 } => {
                Self::complete_intersection(d1, d2).map(|_| ())
            }
        }
    }

    pub fn degree(&self) -> u32 {
        match *self {
            CurveFamily::RationalCurve { d } => d,
            CurveFamily::CompleteIntersection { d1, d2 } => d1 * d2,
        }
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, CurveFamily::RationalCurve { .. })
    }

    pub fn genus(&self) -> i64 {
        genus(self)
    }
}

impl fmt::Display for CurveFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveFamily::RationalCurve { d } => write!(f, "R:{d}"),
            CurveFamily::CompleteIntersection { d1, d2 } => write!(f, "CI:{d1},{d2}"),
        }
    }
}

/// Parses `R:d` or `CI:d1,d2`, the same syntax `Display` writes.
impl FromStr for CurveFamily {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let bad = || Error::Unparsable { what: "curve family", input: input.into(), expected: "R:d or CI:d1,d2" };
        let (tag, rest) = input.trim().split_once(':').ok_or_else(bad)?;
        let nums = parse_list(rest).ok_or_else(bad)?;
        match (tag, nums.as_slice()) {
            ("R", &[d]) => Self::rational(d),
            ("CI", &[d1, d2]) => Self::complete_intersection(d1, d2),
            _ => Err(bad()),
        }
    }
}

/// 0 for rational curves, `1 + d1·d2·(d1+d2−4)/2` for complete intersections.
pub fn genus(c: &CurveFamily) -> i64 {
    match *c {
        CurveFamily::RationalCurve { .. } => 0,
        CurveFamily::CompleteIntersection { d1, d2 } => {
            let (d1, d2) = (d1 as i64, d2 as i64);
            // d1·d2·(d1+d2) is always even
            1 + d1 * d2 * (d1 + d2 - 4) / 2
        }
    }
}

/// `e` with `ω_C = O_C(e)`, by adjunction `e = d1 + d2 − 4`.
pub fn canonical_twist(c: &CurveFamily) -> Result<i64> {
    match *c {
        CurveFamily::RationalCurve { .. } => Err(Error::NoCanonicalTwist),
        CurveFamily::CompleteIntersection { d1, d2 } => Ok(d1 as i64 + d2 as i64 - 4),
    }
}

/// `χ(O_C(a)) = a·deg(C) + 1 − g`.
pub fn chi_oc(c: &CurveFamily, a: i64) -> i64 {
    a * c.degree() as i64 + 1 - genus(c)
}

/// `(h⁰, h¹)` of `O_C(a)`.
///
/// Rational curves: `O_C(a) = O_{P¹}(a·d)`. Complete intersections are
/// projectively normal, so `h⁰` comes from the Koszul resolution of `I_C`.
pub fn cohomology_oc(c: &CurveFamily, a: i64) -> CurveCohomology {
    let h0 = match *c {
        CurveFamily::RationalCurve { d } => (a * d as i64 + 1).max(0),
        CurveFamily::CompleteIntersection { d1, d2 } => {
            let (d1, d2) = (d1 as i64, d2 as i64);
            h0_o_p3(a) - h0_o_p3(a - d1) - h0_o_p3(a - d2) + h0_o_p3(a - d1 - d2)
        }
    };
    CurveCohomology { h0, h1: h0 - chi_oc(c, a) }
}

/// `χ(O_C(a))` from the Koszul complex `0 → O(−d1−d2) → O(−d1)⊕O(−d2) → O → O_C → 0`.
pub fn chi_oc_koszul(d1: u32, d2: u32, a: i64) -> i64 {
    let (d1, d2) = (d1 as i64, d2 as i64);
    chi_o_p3(a) - chi_o_p3(a - d1) - chi_o_p3(a - d2) + chi_o_p3(a - d1 - d2)
}

/// Cohomology of the normal bundle `N_{C/P³}`.
///
/// For a general rational curve of degree `d` we take `h⁰ = χ = 4d` and
/// `h¹ = 0`. For complete intersections `N_C = O_C(d1) ⊕ O_C(d2)`.
pub fn normal_cohomology(c: &CurveFamily) -> CurveCohomology {
    match *c {
        CurveFamily::RationalCurve { d } => CurveCohomology { h0: 4 * d as i64, h1: 0 },
        CurveFamily::CompleteIntersection { d1, d2 } => {
            let a = cohomology_oc(c, d1 as i64);
            let b = cohomology_oc(c, d2 as i64);
            CurveCohomology { h0: a.h0 + b.h0, h1: a.h1 + b.h1 }
        }
    }
}

pub fn h0_normal(c: &CurveFamily) -> i64 {
    normal_cohomology(c).h0
}

pub fn h1_normal(c: &CurveFamily) -> i64 {
    normal_cohomology(c).h1
}

/// Dimension of `H1`, taken as the tangent-space dimension `h⁰(N_C)`.
pub fn dim_hilb(c: &CurveFamily) -> i64 {
    h0_normal(c)
}
