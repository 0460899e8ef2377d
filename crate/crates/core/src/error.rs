use thiserror::Error;

use crate::exactpoly::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial of degree {degree} exceeds the degree cap 3")]
    DegreeTooHigh { degree: usize },

    #[error("unsupported Chern data: rank {rank}, c1 {c1} (only rank 2, c1 = 0 is supported)")]
    UnsupportedChern { rank: u32, c1: i64 },

    #[error("not a rank-2 c1=0 Hilbert polynomial: {0}")]
    NotRankTwo(String),

    #[error("odd c3: recovered c3 = {c3} is not an even integer")]
    OddC3 { c3: Rational },

    #[error("3a+2b+c must be positive and even, got a={a}, b={b}, c={c}")]
    Parity { a: u32, b: u32, c: u32 },

    #[error("V_m requires m >= 1")]
    ZeroM,

    #[error("c3 = {c3} of the reflexive family is not positive")]
    NonPositiveC3 { c3: i64 },

    #[error("invalid curve family: {0}")]
    InvalidCurve(String),

    #[error("canonical twist is only defined for complete intersections")]
    NoCanonicalTwist,

    #[error("chi(Hom(F,L)) route mismatch: resolution route {route_a}, restriction route {route_b}")]
    RouteMismatch { route_a: i64, route_b: i64 },

    #[error("Hom(F,L) is empty: chi(Hom(F,L)) = {chi}")]
    EmptyHom { chi: i64 },

    #[error("c3(E) = {c3}, expected 0")]
    NonZeroC3 { c3: i64 },

    #[error("stability margin is only defined for V_m families")]
    MarginNeedsVm,

    #[error("descriptor is inadmissible: {0}")]
    Inadmissible(String),

    #[error("curve degree {degree} is below the floor {floor}")]
    BelowDegreeFloor { degree: u32, floor: u32 },

    #[error("dimension assembly disagrees: component {component}, tangent {tangent}")]
    DimensionMismatch { component: i64, tangent: i64 },

    #[error("cannot parse {what} from {input:?}: expected {expected}")]
    Unparsable { what: &'static str, input: String, expected: &'static str },

    #[error("target c2 = {0} is out of range (need k >= 3)")]
    TargetTooSmall(i64),
}
