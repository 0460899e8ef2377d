//! Exact rational arithmetic on numerical polynomials of degree at most 3.
//!
//! Every Euler characteristic in this crate is a [`HilbertPolynomial`]: a
//! polynomial in the twist `t` with rational coefficients that takes integer
//! values on integers. Coefficients are stored in the monomial basis; the
//! binomial basis `C(t+i, i)` is used to certify integrality.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Highest degree a Hilbert polynomial on P³ can have.
pub const MAX_DEGREE: usize = 3;

/// Exact rational number, always in lowest terms with a positive denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Self {
        Rational(BigRational::new(num.into(), den.into()))
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    /// The value as an `i64`, if it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

// JSON form is {"num": n, "den": d}. Integers that fit in i64 are written as
// JSON numbers, larger ones as decimal strings.
#[derive(Serialize, Deserialize)]
struct RationalRepr {
    num: IntRepr,
    den: IntRepr,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Small(i64),
    Big(String),
}

impl IntRepr {
    fn from_big(n: &BigInt) -> Self {
        match n.to_i64() {
            Some(v) => IntRepr::Small(v),
            None => IntRepr::Big(n.to_string()),
        }
    }

    fn into_big(self) -> std::result::Result<BigInt, String> {
        match self {
            IntRepr::Small(v) => Ok(BigInt::from(v)),
            IntRepr::Big(s) => s.parse().map_err(|_| format!("bad integer {s:?}")),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RationalRepr {
            num: IntRepr::from_big(self.numer()),
            den: IntRepr::from_big(self.denom()),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = RationalRepr::deserialize(deserializer)?;
        let num = repr.num.into_big().map_err(D::Error::custom)?;
        let den = repr.den.into_big().map_err(D::Error::custom)?;
        if den.is_zero() {
            return Err(D::Error::custom("zero denominator"));
        }
        Ok(Rational::new(num, den))
    }
}

/// Numerical polynomial of degree ≤ 3, stored by monomial coefficient.
///
/// `coeffs[i]` is the coefficient of `t^i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct HilbertPolynomial {
    coeffs: [Rational; MAX_DEGREE + 1],
}

impl HilbertPolynomial {
    /// Builds a polynomial from monomial coefficients, lowest power first.
    ///
    /// Trailing zero coefficients are ignored, so `[1, 0, 0, 0, 0]` is
    /// accepted; a nonzero coefficient beyond `t³` is an error.
    pub fn from_coeffs<I, R>(coeffs: I) -> Result<Self>
    where
        I: IntoIterator<Item = R>,
        R: Into<Rational>,
    {
        let mut out = Self::zero();
        for (i, c) in coeffs.into_iter().enumerate() {
            let c = c.into();
            if i > MAX_DEGREE {
                if !c.is_zero() {
                    return Err(Error::DegreeTooHigh { degree: i });
                }
                continue;
            }
            out.coeffs[i] = c;
        }
        Ok(out)
    }

    pub fn zero() -> Self {
        HilbertPolynomial::default()
    }

    pub fn constant(c: impl Into<Rational>) -> Self {
        let mut p = Self::zero();
        p.coeffs[0] = c.into();
        p
    }

    /// `c0 + c1·t`.
    pub fn linear(c0: impl Into<Rational>, c1: impl Into<Rational>) -> Self {
        let mut p = Self::constant(c0);
        p.coeffs[1] = c1.into();
        p
    }

    /// The binomial basis element `C(t+i, i)` for `i ≤ 3`.
    pub fn binomial(i: usize) -> Self {
        assert!(i <= MAX_DEGREE, "binomial basis index {i} exceeds degree cap");
        // C(t+i, i) = (t+1)(t+2)...(t+i) / i!
        let mut p = Self::constant(1);
        let mut fact = 1i64;
        for j in 1..=i as i64 {
            p = p.mul_shift(&Rational::integer(j));
            fact *= j;
        }
        p.scale(&Rational::new(1, fact))
    }

    pub fn coeff(&self, power: usize) -> &Rational {
        &self.coeffs[power]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.degree().is_none()
    }

    /// Exact value at an integer argument (Horner).
    pub fn eval(&self, t: i64) -> Rational {
        let t = Rational::integer(t);
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| &(&acc * &t) + c)
    }

    /// `p(t + c)`, the polynomial of the twist by `O(c)`.
    pub fn twist(&self, c: i64) -> Self {
        let shift = Rational::integer(c);
        // Horner in the shifted variable: p(t+c) = (((a3)(t+c) + a2)(t+c) + a1)(t+c) + a0
        let mut acc = Self::zero();
        for coeff in self.coeffs.iter().rev() {
            acc = acc.mul_shift(&shift);
            acc.coeffs[0] = &acc.coeffs[0] + coeff;
        }
        acc
    }

    pub fn scale(&self, k: &Rational) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.iter_mut() {
            *c = &*c * k;
        }
        out
    }

    /// Coordinates `e_i` with `p(t) = Σ e_i · C(t+i, i)`.
    pub fn binomial_coords(&self) -> [Rational; MAX_DEGREE + 1] {
        let mut rest = self.clone();
        let mut coords: [Rational; MAX_DEGREE + 1] = Default::default();
        for i in (0..=MAX_DEGREE).rev() {
            // C(t+i, i) has leading coefficient 1/i!
            let fact: i64 = (1..=i as i64).product();
            let e = &rest.coeffs[i] * &Rational::integer(fact);
            rest = &rest - &Self::binomial(i).scale(&e);
            coords[i] = e;
        }
        coords
    }

    /// True iff the polynomial is integer-valued on all integers.
    pub fn is_numerical(&self) -> bool {
        self.binomial_coords().iter().all(Rational::is_integer)
    }

    // (t + a)·p(t); caller guarantees deg p < 3.
    fn mul_shift(&self, a: &Rational) -> Self {
        debug_assert!(self.coeffs[MAX_DEGREE].is_zero(), "degree overflow in mul_shift");
        let mut out = Self::zero();
        for i in 0..=MAX_DEGREE {
            out.coeffs[i] = &self.coeffs[i] * a;
            if i > 0 {
                out.coeffs[i] = &out.coeffs[i] + &self.coeffs[i - 1];
            }
        }
        out
    }
}

impl<'a> Add<&'a HilbertPolynomial> for &'a HilbertPolynomial {
    type Output = HilbertPolynomial;
    fn add(self, rhs: &'a HilbertPolynomial) -> HilbertPolynomial {
        let mut out = self.clone();
        for (c, r) in out.coeffs.iter_mut().zip(&rhs.coeffs) {
            *c = &*c + r;
        }
        out
    }
}

impl<'a> Sub<&'a HilbertPolynomial> for &'a HilbertPolynomial {
    type Output = HilbertPolynomial;
    fn sub(self, rhs: &'a HilbertPolynomial) -> HilbertPolynomial {
        let mut out = self.clone();
        for (c, r) in out.coeffs.iter_mut().zip(&rhs.coeffs) {
            *c = &*c - r;
        }
        out
    }
}

impl Add for HilbertPolynomial {
    type Output = HilbertPolynomial;
    fn add(self, rhs: HilbertPolynomial) -> HilbertPolynomial {
        &self + &rhs
    }
}

impl Sub for HilbertPolynomial {
    type Output = HilbertPolynomial;
    fn sub(self, rhs: HilbertPolynomial) -> HilbertPolynomial {
        &self - &rhs
    }
}

impl fmt::Display for HilbertPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(deg) = self.degree() else {
            return write!(f, "0");
        };
        let mut first = true;
        for i in (0..=deg).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let neg = c.numer().is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = abs == Rational::one();
            match (i, unit) {
                (0, _) => write!(f, "{abs}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{abs}·t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{abs}·t^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn cubic_binomial() -> HilbertPolynomial {
        HilbertPolynomial::binomial(3)
    }

    #[test]
    fn eval_examples() {
        assert_eq!(cubic_binomial().eval(0), Rational::integer(1));
        assert_eq!(cubic_binomial().eval(-4), Rational::integer(-1));
        assert_eq!(HilbertPolynomial::linear(4, 2).eval(3), Rational::integer(10));
    }

    #[test]
    fn twist_add_sub_examples() {
        let p = cubic_binomial();
        // C(t+2, 3) = t(t+1)(t+2)/6
        let expected = HilbertPolynomial::from_coeffs([
            Rational::zero(),
            Rational::new(1, 3),
            Rational::new(1, 2),
            Rational::new(1, 6),
        ])
        .unwrap();
        assert_eq!(p.twist(-1), expected);
        assert!((&p - &p).is_zero());
        assert_eq!((&p + &p).eval(1), Rational::integer(8));
    }

    #[test]
    fn numerical_examples() {
        let tri = HilbertPolynomial::from_coeffs([Rational::zero(), Rational::new(1, 2), Rational::new(1, 2)])
            .unwrap();
        assert!(tri.is_numerical());
        let half = HilbertPolynomial::linear(0, Rational::new(1, 2));
        assert!(!half.is_numerical());
        assert!(cubic_binomial().is_numerical());
    }

    #[test]
    fn degree_cap_is_an_error() {
        let err = HilbertPolynomial::from_coeffs([0i64, 0, 0, 0, 1]).unwrap_err();
        assert!(matches!(err, Error::DegreeTooHigh { degree: 4 }));
        // trailing zeros are harmless
        assert!(HilbertPolynomial::from_coeffs([1i64, 0, 0, 0, 0, 0]).is_ok());
    }

    #[test]
    fn display_is_readable() {
        assert_eq!(HilbertPolynomial::linear(4, 2).to_string(), "2·t + 4");
        assert_eq!(HilbertPolynomial::zero().to_string(), "0");
        assert_eq!(
            HilbertPolynomial::linear(Rational::new(-3, 2), Rational::new(1, 2)).to_string(),
            "1/2·t - 3/2"
        );
    }

    #[test]
    fn rational_json_shape() {
        let r = Rational::new(77, 2);
        let s = serde_json::to_string(&r).unwrap();
        assert_eq!(s, r#"{"num":77,"den":2}"#);
        let back: Rational = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        let huge = Rational::integer(BigInt::from(i64::MAX) * 4);
        let back: Rational = serde_json::from_str(&serde_json::to_string(&huge).unwrap()).unwrap();
        assert_eq!(back, huge);
    }

    fn coeff() -> impl Strategy<Value = Rational> {
        (-1_000_000i64..=1_000_000, 1i64..=720).prop_map(|(n, d)| Rational::new(n, d))
    }

    fn poly() -> impl Strategy<Value = HilbertPolynomial> {
        proptest::collection::vec(coeff(), 4).prop_map(|c| HilbertPolynomial::from_coeffs(c).unwrap())
    }

    proptest! {
        #[test]
        fn twist_inverts(p in poly(), c in -10i64..=10) {
            prop_assert_eq!(p.twist(c).twist(-c), p);
        }

        #[test]
        fn twist_shifts_argument(p in poly(), c in -10i64..=10, t in -50i64..=50) {
            prop_assert_eq!(p.twist(c).eval(t), p.eval(t + c));
        }

        #[test]
        fn eval_is_additive(p in poly(), q in poly(), t in -100i64..=100) {
            prop_assert_eq!((&p + &q).eval(t), &p.eval(t) + &q.eval(t));
            prop_assert_eq!((&p - &q).eval(t), &p.eval(t) - &q.eval(t));
        }

        #[test]
        fn binomial_coords_reconstruct(p in poly(), t in -20i64..=20) {
            let coords = p.binomial_coords();
            let rebuilt = coords.iter().enumerate().fold(HilbertPolynomial::zero(), |acc, (i, e)| {
                &acc + &HilbertPolynomial::binomial(i).scale(e)
            });
            prop_assert_eq!(rebuilt.eval(t), p.eval(t));
        }

        #[test]
        fn integer_binomial_coords_are_numerical(e in proptest::collection::vec(-1000i64..1000, 4), t in -30i64..30) {
            let p = e.iter().enumerate().fold(HilbertPolynomial::zero(), |acc, (i, &x)| {
                &acc + &HilbertPolynomial::binomial(i).scale(&Rational::integer(x))
            });
            prop_assert!(p.is_numerical());
            prop_assert!(p.eval(t).is_integer());
        }
    }
}
