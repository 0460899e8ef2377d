//! Riemann-Roch on P³: Euler characteristics of `O(j)` and the two-way
//! translation between Hilbert polynomials and Chern data of rank-2 sheaves
//! with `c1 = 0`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactpoly::{HilbertPolynomial, Rational};

/// Chern data `(rank, c1, c2, c3)` of a sheaf on P³.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ChernData {
    pub rank: u32,
    pub c1: i64,
    pub c2: i64,
    pub c3: i64,
}

impl ChernData {
    /// Rank 2, `c1 = 0`.
    pub const fn rank_two(c2: i64, c3: i64) -> Self {
        ChernData { rank: 2, c1: 0, c2, c3 }
    }
}

/// `χ(O_{P³}(j)) = (j+1)(j+2)(j+3)/6`.
pub fn chi_o_p3(j: i64) -> i64 {
    (j + 1) * (j + 2) * (j + 3) / 6
}

/// `h⁰(O_{P³}(j))`: `C(j+3, 3)` for `j ≥ 0`, else 0.
pub fn h0_o_p3(j: i64) -> i64 {
    if j >= 0 {
        chi_o_p3(j)
    } else {
        0
    }
}

/// `χ(O_{P³}(t))` as a polynomial in `t`.
pub fn hp_o_p3() -> HilbertPolynomial {
    HilbertPolynomial::binomial(3)
}

/// `P(t) = 2·χ(O(t)) − c2·(t+2) + c3/2`.
pub fn hp_from_chern(c: &ChernData) -> Result<HilbertPolynomial> {
    if c.rank != 2 || c.c1 != 0 {
        return Err(Error::UnsupportedChern { rank: c.rank, c1: c.c1 });
    }
    let twice = hp_o_p3().scale(&Rational::integer(2));
    let correction = HilbertPolynomial::linear(
        &Rational::new(c.c3, 2) - &Rational::integer(2 * c.c2),
        -c.c2,
    );
    Ok(&twice + &correction)
}

/// Inverse of [`hp_from_chern`].
///
/// Solves for `(c2, c3)` from the values at `t = 0` and `t = 1`, then checks
/// that the whole polynomial is reproduced.
pub fn chern_from_hp(p: &HilbertPolynomial) -> Result<ChernData> {
    let cubic = p.coeff(3);
    let quadratic = p.coeff(2);
    if *cubic != Rational::new(1, 3) || *quadratic != Rational::integer(2) {
        return Err(Error::NotRankTwo(format!(
            "t^3 coefficient {cubic} (want 1/3), t^2 coefficient {quadratic} (want 2)"
        )));
    }
    // P(0) = 2 - 2 c2 + c3/2, P(1) = 8 - 3 c2 + c3/2
    let p0 = p.eval(0);
    let p1 = p.eval(1);
    let c2 = &(&p0 - &p1) + &Rational::integer(6);
    let half_c3 = &(&p0 - &Rational::integer(2)) + &(&c2 * &Rational::integer(2));
    let c3 = &half_c3 * &Rational::integer(2);

    let c2 = c2
        .to_i64()
        .ok_or_else(|| Error::NotRankTwo(format!("non-integral c2 = {c2}")))?;
    let c3_int = match c3.to_i64() {
        Some(v) if v % 2 == 0 => v,
        _ => return Err(Error::OddC3 { c3 }),
    };
    let out = ChernData::rank_two(c2, c3_int);
    if hp_from_chern(&out)? != *p {
        return Err(Error::NotRankTwo(format!(
            "linear coefficient {} inconsistent with c2 = {c2}",
            p.coeff(1)
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn chi_and_h0_examples() {
        assert_eq!(chi_o_p3(0), 1);
        assert_eq!(chi_o_p3(1), 4);
        assert_eq!(chi_o_p3(-5), -4);
        assert_eq!(h0_o_p3(2), 10);
        assert_eq!(h0_o_p3(-1), 0);
        assert_eq!(h0_o_p3(4), 35);
    }

    #[test]
    fn hp_from_chern_examples() {
        let trivial = hp_from_chern(&ChernData::rank_two(0, 0)).unwrap();
        assert_eq!(trivial, hp_o_p3().scale(&Rational::integer(2)));
        let line = hp_from_chern(&ChernData::rank_two(1, 2)).unwrap();
        assert_eq!(line.eval(0), Rational::integer(1));
        let m3 = hp_from_chern(&ChernData::rank_two(3, 0)).unwrap();
        assert_eq!(m3.eval(1), Rational::integer(-1));
    }

    #[test]
    fn hp_from_chern_rejects_other_slices() {
        let err = hp_from_chern(&ChernData { rank: 1, c1: 0, c2: 0, c3: 0 }).unwrap_err();
        assert!(matches!(err, Error::UnsupportedChern { rank: 1, .. }));
        let err = hp_from_chern(&ChernData { rank: 2, c1: -1, c2: 0, c3: 0 }).unwrap_err();
        assert!(matches!(err, Error::UnsupportedChern { c1: -1, .. }));
    }

    #[test]
    fn chern_from_hp_examples() {
        let trivial = hp_o_p3().scale(&Rational::integer(2));
        assert_eq!(chern_from_hp(&trivial).unwrap(), ChernData::rank_two(0, 0));
    }

    #[test]
    fn chern_from_hp_rejects_bad_shapes() {
        let rank_one = hp_o_p3();
        assert!(matches!(chern_from_hp(&rank_one), Err(Error::NotRankTwo(_))));

        // c3/2 = 1/2 gives c3 = 1
        let odd = &hp_o_p3().scale(&Rational::integer(2)) + &HilbertPolynomial::constant(Rational::new(1, 2));
        assert!(matches!(chern_from_hp(&odd), Err(Error::OddC3 { .. })));

        // c3/2 = 1/4: non-integral c3
        let quarter = &hp_o_p3().scale(&Rational::integer(2)) + &HilbertPolynomial::constant(Rational::new(1, 4));
        assert!(matches!(chern_from_hp(&quarter), Err(Error::OddC3 { .. })));

        // linear term that no (c2, c3) explains
        let skew = &hp_o_p3().scale(&Rational::integer(2)) + &HilbertPolynomial::linear(0, Rational::new(1, 2));
        assert!(matches!(chern_from_hp(&skew), Err(Error::NotRankTwo(_))));
    }

    #[test]
    fn serre_duality_on_p3() {
        for j in -30..=30 {
            assert_eq!(chi_o_p3(j), -chi_o_p3(-4 - j), "j = {j}");
        }
    }

    #[test]
    fn h0_matches_chi_in_nonnegative_range() {
        for j in -30..=30 {
            if j >= 0 {
                assert_eq!(h0_o_p3(j), chi_o_p3(j));
            } else {
                assert_eq!(h0_o_p3(j), 0);
            }
        }
    }

    #[test]
    fn round_trip_box() {
        for c2 in -20..=60 {
            for c3 in (-100..=300).step_by(2) {
                let c = ChernData::rank_two(c2, c3);
                let p = hp_from_chern(&c).unwrap();
                assert!(p.is_numerical());
                assert_eq!(chern_from_hp(&p).unwrap(), c);
            }
        }
    }

    proptest! {
        #[test]
        fn chi_polynomial_matches_closed_form(j in -200i64..200) {
            prop_assert_eq!(hp_o_p3().eval(j), Rational::integer(chi_o_p3(j)));
        }
    }
}
