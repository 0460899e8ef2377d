//! The two families of reflexive rank-2 sheaves used as input to the
//! elementary transformation.
//!
//! * `S_{a,b,c}`: stable reflexive sheaves with a resolution
//!   `0 → a·O(−3) ⊕ b·O(−2) ⊕ c·O(−1) → (a+b+c+2)·O → F(κ) → 0`,
//!   `κ = (3a+2b+c)/2`.
//! * `V_m`: properly μ-semistable extensions `0 → O → F → I_Y → 0` with `Y`
//!   a smooth rational curve of degree `m`.
//!
//! Chern classes of `S_{a,b,c}` are computed from the resolution through
//! Riemann-Roch; the published closed forms are evaluated separately so the
//! two can be compared.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactpoly::{HilbertPolynomial, Rational};
use crate::p3rr::{chern_from_hp, hp_o_p3, ChernData};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "variant")]
pub enum ReflexiveFamily {
    Sabc { a: u32, b: u32, c: u32 },
    Vm { m: u32 },
}

/// Dimensions of `Ext^i(F, F)` for a general member of the family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtProfile {
    pub hom: i64,
    pub ext1: i64,
    pub ext2: i64,
    pub ext3: i64,
}

impl ExtProfile {
    /// `Σ (−1)^i dim Ext^i(F, F)`.
    pub fn euler_pairing(&self) -> i64 {
        self.hom - self.ext1 + self.ext2 - self.ext3
    }
}

/// Literal evaluation of the published closed forms for `c2`, `c3` of `S_{a,b,c}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedFormChern {
    pub c2: i64,
    pub c3: Rational,
}

impl ReflexiveFamily {
    pub fn sabc(a: u32, b: u32, c: u32) -> Result<Self> {
        let weight = 3 * a + 2 * b + c;
        if weight == 0 || !weight.is_multiple_of(2) {
            return Err(Error::Parity { a, b, c });
        }
        Ok(ReflexiveFamily::Sabc { a, b, c })
    }

    pub fn vm(m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroM);
        }
        Ok(ReflexiveFamily::Vm { m })
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            ReflexiveFamily::Sabc { a, b, c } => Self::sabc(a, b, c).map(|_| ()),
            ReflexiveFamily::Vm { m } => Self::vm(m).map(|_| ()),
        }
    }

    /// `κ = (3a+2b+c)/2` for `S_{a,b,c}`.
    pub fn kappa(&self) -> Option<i64> {
        match *self {
            ReflexiveFamily::Sabc { a, b, c } => Some((3 * a + 2 * b + c) as i64 / 2),
            ReflexiveFamily::Vm { .. } => None,
        }
    }

    pub fn is_vm(&self) -> bool {
        matches!(self, ReflexiveFamily::Vm { .. })
    }

    /// `n = c3/2`.
    pub fn n(&self) -> Result<i64> {
        Ok(chern_of(self)?.c3 / 2)
    }
}

impl fmt::Display for ReflexiveFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReflexiveFamily::Sabc { a, b, c } => write!(f, "S:{a},{b},{c}"),
            ReflexiveFamily::Vm { m } => write!(f, "V:{m}"),
        }
    }
}

/// Parses `S:a,b,c` or `V:m`, the same syntax `Display` writes.
impl FromStr for ReflexiveFamily {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let bad = || Error::Unparsable { what: "reflexive family", input: input.into(), expected: "S:a,b,c or V:m" };
        let (tag, rest) = input.trim().split_once(':').ok_or_else(bad)?;
        let nums = parse_list(rest).ok_or_else(bad)?;
        match (tag, nums.as_slice()) {
            ("S", &[a, b, c]) => Self::sabc(a, b, c),
            ("V", &[m]) => Self::vm(m),
            _ => Err(bad()),
        }
    }
}

/// Comma-separated unsigned integers; `None` on any junk.
pub(crate) fn parse_list(s: &str) -> Option<Vec<u32>> {
    s.split(',').map(|x| x.trim().parse().ok()).collect()
}

/// Hilbert polynomial of the untwisted `F` read off the resolution.
pub fn hp_of_resolution(a: u32, b: u32, c: u32) -> Result<HilbertPolynomial> {
    let kappa = ReflexiveFamily::sabc(a, b, c)?.kappa().expect("sabc has kappa");
    let o = hp_o_p3();
    let term = |mult: u32, shift: i64| o.twist(shift).scale(&Rational::integer(mult));
    let p = &term(a + b + c + 2, -kappa)
        - &(&(&term(a, -kappa - 3) + &term(b, -kappa - 2)) + &term(c, -kappa - 1));
    Ok(p)
}

// C(x, 3) as a polynomial in x
fn binom3(x: i64) -> Rational {
    Rational::new(x * (x - 1) * (x - 2), 6)
}

/// Evaluates the printed closed forms for `c2(F)` and `c3(F)` term by term.
///
/// `c3` is returned as a rational: for mixed triples such as `(1,0,1)` the
/// printed cross term `(3/2)(2a+c+4)ac` makes it non-integral.
pub fn chern_sabc_closed(a: u32, b: u32, c: u32) -> Result<ClosedFormChern> {
    ReflexiveFamily::sabc(a, b, c)?;
    let (a, b, c) = (a as i64, b as i64, c as i64);
    let w = 3 * a + 2 * b + c;
    let c2 = &(&Rational::new(w * w, 4) + &Rational::new(3 * w, 2)) - &Rational::integer(b + c);
    let c3 = [
        &Rational::integer(27) * &binom3(a + 2),
        &Rational::integer(8) * &binom3(b + 2),
        binom3(c + 2),
        Rational::integer(3 * (3 * a + 2 * b + 5) * a * b),
        &Rational::new(3, 2) * &Rational::integer((2 * a + c + 4) * a * c),
        Rational::integer((2 * b + 3 * c + 3) * b * c),
        Rational::integer(6 * a * b * c),
    ]
    .into_iter()
    .fold(Rational::zero(), |acc, x| acc + x);
    let c2 = c2.to_i64().expect("c2 closed form is integral for even 3a+2b+c");
    Ok(ClosedFormChern { c2, c3 })
}

/// Chern data of a general member.
///
/// `S_{a,b,c}` goes through the resolution and Riemann-Roch inversion;
/// `V_m` is `(2, 0, m, 4m−2)`.
pub fn chern_of(r: &ReflexiveFamily) -> Result<ChernData> {
    let out = match *r {
        ReflexiveFamily::Sabc { a, b, c } => chern_from_hp(&hp_of_resolution(a, b, c)?)?,
        ReflexiveFamily::Vm { m } => {
            if m == 0 {
                return Err(Error::ZeroM);
            }
            ChernData::rank_two(m as i64, 4 * m as i64 - 2)
        }
    };
    if out.c3 <= 0 {
        return Err(Error::NonPositiveC3 { c3: out.c3 });
    }
    Ok(out)
}

/// Whether the closed-form `c3` disagrees with the resolution route.
/// Always `None` for `V_m`.
pub fn closed_form_c3_mismatch(r: &ReflexiveFamily) -> Result<Option<(Rational, i64)>> {
    let ReflexiveFamily::Sabc { a, b, c } = *r else {
        return Ok(None);
    };
    let closed = chern_sabc_closed(a, b, c)?;
    let oracle = chern_of(r)?;
    if closed.c3 == Rational::integer(oracle.c3) {
        Ok(None)
    } else {
        Ok(Some((closed.c3, oracle.c3)))
    }
}

/// Dimension of the family: `8·c2 − 3` for `S_{a,b,c}`;
/// `h⁰(N_Y) + h⁰(ω_Y(4)) − 1 = 4m + (4m−1) − 1` for `V_m`.
pub fn dim_moduli(r: &ReflexiveFamily) -> Result<i64> {
    match *r {
        ReflexiveFamily::Sabc { .. } => Ok(8 * chern_of(r)?.c2 - 3),
        ReflexiveFamily::Vm { m } => {
            let m = m as i64;
            // Y rational of degree m: N_Y has 4m sections, ω_Y(4) = O_{P¹}(4m−2)
            let h0_normal = 4 * m;
            let h0_omega_4 = 4 * m - 1;
            Ok(h0_normal + h0_omega_4 - 1)
        }
    }
}

/// `(hom, ext1, ext2, ext3)` of a general member. `V_m` assumes `Y` rational
/// with unobstructed normal bundle, so `Ext²(F,F) = 0`.
pub fn ext_profile(r: &ReflexiveFamily) -> Result<ExtProfile> {
    match *r {
        ReflexiveFamily::Sabc { .. } => Ok(ExtProfile {
            hom: 1,
            ext1: 8 * chern_of(r)?.c2 - 3,
            ext2: 0,
            ext3: 0,
        }),
        ReflexiveFamily::Vm { m } => {
            let (h1_normal, genus) = (0, 0);
            Ok(ExtProfile {
                hom: 2,
                ext1: h1_normal + 8 * m as i64 + genus - 2,
                ext2: h1_normal + genus,
                ext3: 0,
            })
        }
    }
}

/// Dimension of `Aut(F)/k*`: 0 for stable `S_{a,b,c}`, 1 for `V_m`.
pub fn dim_paut(r: &ReflexiveFamily) -> i64 {
    match r {
        ReflexiveFamily::Sabc { .. } => 0,
        ReflexiveFamily::Vm { .. } => 1,
    }
}

/// Alternating Ext sum equals `4 − 8·c2`.
pub fn euler_check(r: &ReflexiveFamily) -> Result<bool> {
    let c2 = chern_of(r)?.c2;
    Ok(ext_profile(r)?.euler_pairing() == 4 - 8 * c2)
}

/// All admissible `(a, b, c)` with `3a+2b+c ≤ max_weight`, lexicographic.
pub fn sabc_triples(max_weight: u32) -> Vec<(u32, u32, u32)> {
    let mut out = Vec::new();
    for a in 0..=max_weight / 3 {
        for b in 0..=(max_weight - 3 * a) / 2 {
            for c in 0..=(max_weight - 3 * a - 2 * b) {
                let w = 3 * a + 2 * b + c;
                if w > 0 && w % 2 == 0 {
                    out.push((a, b, c));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(a: u32, b: u32, c: u32) -> ReflexiveFamily {
        ReflexiveFamily::sabc(a, b, c).unwrap()
    }

    fn v(m: u32) -> ReflexiveFamily {
        ReflexiveFamily::vm(m).unwrap()
    }

    #[test]
    fn parse_round_trip() {
        for r in [s(0, 0, 2), s(1, 0, 1), s(2, 3, 4), v(1), v(9)] {
            assert_eq!(r.to_string().parse::<ReflexiveFamily>().unwrap(), r);
        }
        for junk in ["", "S:1,2", "S:a,b,c", "V:", "V:1,2", "T:1", "S 0,0,2"] {
            assert!(matches!(junk.parse::<ReflexiveFamily>(), Err(Error::Unparsable { .. })), "{junk:?}");
        }
        assert_eq!("S:1,0,0".parse::<ReflexiveFamily>(), Err(Error::Parity { a: 1, b: 0, c: 0 }));
        assert_eq!("V:0".parse::<ReflexiveFamily>(), Err(Error::ZeroM));
    }

    #[test]
    fn constructor_checks() {
        assert_eq!(ReflexiveFamily::sabc(0, 0, 0), Err(Error::Parity { a: 0, b: 0, c: 0 }));
        assert!(ReflexiveFamily::sabc(1, 0, 0).is_err());
        assert!(ReflexiveFamily::sabc(0, 0, 1).is_err());
        assert_eq!(ReflexiveFamily::vm(0), Err(Error::ZeroM));
        assert_eq!(s(1, 0, 1).kappa(), Some(2));
    }

    #[test]
    fn resolution_polynomial_examples() {
        let p = hp_of_resolution(0, 0, 2).unwrap();
        assert_eq!(p.eval(0), Rational::integer(0));
        assert_eq!(p.eval(1), Rational::integer(4));
        assert_eq!(hp_of_resolution(0, 1, 0).unwrap().eval(0), Rational::integer(0));
        assert_eq!(hp_of_resolution(2, 0, 0).unwrap().eval(0), Rational::integer(20));
        assert!(hp_of_resolution(1, 1, 0).is_err());
    }

    #[test]
    fn chern_from_resolution_examples() {
        assert_eq!(chern_from_hp(&hp_of_resolution(0, 0, 2).unwrap()).unwrap(), ChernData::rank_two(2, 4));
        assert_eq!(chern_from_hp(&hp_of_resolution(1, 0, 1).unwrap()).unwrap(), ChernData::rank_two(9, 40));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(chern_sabc_closed(0, 0, 2).unwrap(), ClosedFormChern { c2: 2, c3: Rational::integer(4) });
        assert_eq!(chern_sabc_closed(0, 1, 0).unwrap(), ClosedFormChern { c2: 3, c3: Rational::integer(8) });
        assert_eq!(chern_sabc_closed(1, 0, 1).unwrap(), ClosedFormChern { c2: 9, c3: Rational::new(77, 2) });
    }

    #[test]
    fn chern_of_examples() {
        assert_eq!(chern_of(&s(0, 0, 2)).unwrap(), ChernData::rank_two(2, 4));
        assert_eq!(chern_of(&v(1)).unwrap(), ChernData::rank_two(1, 2));
        assert_eq!(chern_of(&s(1, 0, 1)).unwrap(), ChernData::rank_two(9, 40));
        assert_eq!(closed_form_c3_mismatch(&s(1, 0, 1)).unwrap(), Some((Rational::new(77, 2), 40)));
        assert_eq!(closed_form_c3_mismatch(&s(0, 0, 2)).unwrap(), None);
        assert_eq!(closed_form_c3_mismatch(&v(3)).unwrap(), None);
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dim_moduli(&s(0, 0, 2)).unwrap(), 13);
        assert_eq!(dim_moduli(&v(1)).unwrap(), 6);
        assert_eq!(dim_moduli(&v(3)).unwrap(), 22);
    }

    #[test]
    fn ext_profile_examples() {
        assert_eq!(ext_profile(&s(0, 1, 0)).unwrap(), ExtProfile { hom: 1, ext1: 21, ext2: 0, ext3: 0 });
        assert_eq!(ext_profile(&v(1)).unwrap(), ExtProfile { hom: 2, ext1: 6, ext2: 0, ext3: 0 });
        assert_eq!(ext_profile(&v(2)).unwrap(), ExtProfile { hom: 2, ext1: 14, ext2: 0, ext3: 0 });
    }

    #[test]
    fn paut_examples() {
        assert_eq!(dim_paut(&s(2, 0, 0)), 0);
        assert_eq!(dim_paut(&v(1)), 1);
        assert_eq!(dim_paut(&v(7)), 1);
    }

    #[test]
    fn euler_examples() {
        assert_eq!(ext_profile(&s(0, 0, 2)).unwrap().euler_pairing(), -12);
        assert!(euler_check(&s(0, 0, 2)).unwrap());
        assert!(euler_check(&v(1)).unwrap());
        assert_eq!(ext_profile(&v(5)).unwrap().euler_pairing(), -36);
        assert!(euler_check(&v(5)).unwrap());
    }

    #[test]
    fn triple_listing() {
        let t = sabc_triples(2);
        assert_eq!(t, vec![(0, 0, 2), (0, 1, 0)]);
        assert!(sabc_triples(30).iter().all(|&(a, b, c)| (3 * a + 2 * b + c) % 2 == 0));
    }

    #[test]
    fn parity_and_euler_over_range() {
        for (a, b, c) in sabc_triples(30) {
            let r = s(a, b, c);
            let chern = chern_of(&r).unwrap();
            assert_eq!(chern.c3 % 2, 0, "{r}");
            assert!(hp_of_resolution(a, b, c).unwrap().is_numerical());
            assert!(euler_check(&r).unwrap(), "{r}");
        }
        for m in 1..=20 {
            let r = v(m);
            assert_eq!(chern_of(&r).unwrap().c3 % 2, 0);
            assert!(euler_check(&r).unwrap());
        }
    }

    #[test]
    fn vm_dimension_matches_ext1_formula() {
        for m in 1..=20 {
            let r = v(m);
            // h1(N) + 8m + g - 2 with h1(N) = g = 0
            assert_eq!(dim_moduli(&r).unwrap(), 8 * m as i64 - 2);
            assert_eq!(dim_moduli(&r).unwrap(), ext_profile(&r).unwrap().ext1);
        }
    }
}
