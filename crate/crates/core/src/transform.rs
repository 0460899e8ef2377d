//! Elementary transformations `0 → E → F → L ⊕ O_W → 0`.
//!
//! A [`ComponentDescriptor`] fixes the reflexive family `R ∋ F`, the curve
//! family `H1 ∋ C` carrying the line bundle `L`, and the number `s` of
//! points in `W`. Everything else is forced: `χ(L)` by `c3(E) = 0`, the Chern
//! classes of `E`, the dimension of the resulting family of sheaves `E` and
//! the dimension of `Ext¹(E, E)` at its general point.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::curvecoh::{cohomology_oc, dim_hilb, genus, h0_normal, h1_normal, CurveFamily};
use crate::error::{Error, Result};
use crate::exactpoly::{HilbertPolynomial, Rational};
use crate::families::{
    chern_of, closed_form_c3_mismatch, dim_moduli, dim_paut, ext_profile, hp_of_resolution,
    ReflexiveFamily,
};
use crate::p3rr::{chern_from_hp, hp_from_chern, hp_o_p3, ChernData};

/// Default lower bound on `deg(C)`; lines give no new components.
pub const DEFAULT_MIN_CURVE_DEGREE: u32 = 2;

/// The published dimension of the new component of `M(3)`.
pub const PRINTED_M3_DIMENSION: i64 = 21;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ComponentDescriptor {
    pub reflexive: ReflexiveFamily,
    pub curve: CurveFamily,
    pub s: u32,
}

impl ComponentDescriptor {
    pub fn new(reflexive: ReflexiveFamily, curve: CurveFamily, s: u32) -> Self {
        ComponentDescriptor { reflexive, curve, s }
    }

    /// The descriptor of the new component of `M(3)`: `V_1`, conics, no points.
    pub fn m3_component() -> Self {
        ComponentDescriptor::new(ReflexiveFamily::Vm { m: 1 }, CurveFamily::RationalCurve { d: 2 }, 0)
    }

    fn degree(&self) -> i64 {
        self.curve.degree() as i64
    }
}

impl fmt::Display for ComponentDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, s={})", self.reflexive, self.curve, self.s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConditionId {
    /// `s < n` (rational C) or `s ≤ n` (complete intersection).
    PointBound,
    /// `R = V_m ⇒ m < deg(C)`.
    VmDegree,
    /// `C ∩ W = ∅`.
    Disjoint,
    /// `R = S_{a,b,c} ⇒ Sing(F) ∩ (C ⊔ W) = ∅`.
    SingularAvoidance,
    /// `R = V_m ⇒ Y_F ∩ (C ⊔ W) = ∅`.
    CurveAvoidance,
    /// `h¹(Hom(F, L)) = 0`.
    HomVanishing,
    /// `Hom_e(F, Q) ≠ 0`.
    Surjection,
    /// `h⁰(ω_C(4) ⊗ L⁻²) = 0`.
    Defect,
}

impl ConditionId {
    /// Short tag used in tables and CSV.
    pub fn label(&self) -> &'static str {
        match self {
            ConditionId::PointBound => "pts",
            ConditionId::VmDegree => "mdeg",
            ConditionId::Disjoint => "disj",
            ConditionId::SingularAvoidance => "sing",
            ConditionId::CurveAvoidance => "ycurve",
            ConditionId::HomVanishing => "h1hom",
            ConditionId::Surjection => "surj",
            ConditionId::Defect => "defect",
        }
    }

    /// Integer constraints; a failure makes the descriptor inadmissible.
    pub fn is_numeric(&self) -> bool {
        matches!(self, ConditionId::PointBound | ConditionId::VmDegree)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Holds,
    HoldsGenerically,
    Fails,
}

impl Status {
    pub fn symbol(&self) -> char {
        match self {
            Status::Holds => '+',
            Status::HoldsGenerically => '~',
            Status::Fails => '!',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionVerdict {
    pub id: ConditionId,
    pub status: Status,
    pub note: String,
}

impl ConditionVerdict {
    fn new(id: ConditionId, status: Status, note: impl Into<String>) -> Self {
        ConditionVerdict { id, status, note: note.into() }
    }
}

/// `Sing(E) = C ⊔ Sing(E^∨∨) ⊔ W`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SingularitySignature {
    /// `(degree, genus)` of each one-dimensional part.
    pub curve_parts: Vec<(u32, i64)>,
    pub isolated_points_from_w: u32,
    /// `c3(R)`, the length of the zero-dimensional singular scheme of `E^∨∨`.
    pub reflexive_sing_c3: i64,
}

/// Places where a computed value disagrees with a printed one, or where a
/// report lies outside the default range.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ErratumNote {
    /// The closed form for `c3(S_{a,b,c})` disagrees with the resolution.
    ClosedFormC3 { a: u32, b: u32, c: u32, closed_form: Rational, resolution: i64 },
    /// The printed dimension of a component differs from the computed one.
    PrintedDimension { printed: i64, computed: i64 },
    /// Curve degree below the novelty floor (admitted by override).
    BelowNoveltyFloor { degree: u32 },
}

impl fmt::Display for ErratumNote {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ErratumNote::ClosedFormC3 { a, b, c, closed_form, resolution } => write!(
                f,
                "closed-form c3 of S({a},{b},{c}) is {closed_form}, resolution gives {resolution}"
            ),
            ErratumNote::PrintedDimension { printed, computed } => {
                write!(f, "printed dimension {printed}, computed {computed}")
            }
            ErratumNote::BelowNoveltyFloor { degree } => {
                write!(f, "curve degree {degree} is outside the novelty range (degree >= 2)")
            }
        }
    }
}

/// The three pieces of `dim Ext¹(E,E) = h⁰(Ext¹(E,E)) + h¹(Hom(E,E)) − h²(Hom(E,E))`.
///
/// The contributions of `F` are only known through their combination
/// `dim Ext¹(F,F)`, which is kept as a separate term.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TangentAssembly {
    /// `h⁰(N_W) + h⁰(N_C)`.
    pub local_ext1: i64,
    /// `1 − h⁰(Hom(F,F)) + h⁰(Hom(F,Q)) − h⁰(Hom(Q,Q)) + h¹(Hom(Q,Q))`.
    pub global_hom: i64,
    /// `dim Ext¹(F,F)`.
    pub ext1_reflexive: i64,
}

impl TangentAssembly {
    pub fn total(&self) -> i64 {
        self.local_ext1 + self.global_hom + self.ext1_reflexive
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub descriptor: ComponentDescriptor,
    /// `c2(E)`, the index of the moduli space `M(k)`.
    pub k: i64,
    pub chern_r: ChernData,
    /// Literal closed-form Chern classes, for `S_{a,b,c}` only.
    pub chern_r_closed_form: Option<crate::families::ClosedFormChern>,
    pub chern_e: ChernData,
    pub n: i64,
    pub genus: i64,
    pub deg_l: i64,
    pub chi_l: i64,
    pub chi_hom_fl: i64,
    pub hom_orbit_dim: i64,
    pub dim_reflexive: i64,
    pub dim_points: i64,
    pub dim_picard: i64,
    pub dim_paut: i64,
    pub dim_component: i64,
    pub dim_tangent: i64,
    pub tangent: TangentAssembly,
    pub h1_normal: i64,
    /// `½P_E − P_{I_{C⊔W}}` for `V_m`.
    pub stability_margin: Option<HilbertPolynomial>,
    pub verdicts: Vec<ConditionVerdict>,
    pub signature: SingularitySignature,
    pub erratum_notes: Vec<ErratumNote>,
}

/// `χ(L)`, forced by `c3(E) = 0`.
///
/// Computed from the Hilbert polynomial of `F` and cross-checked against the
/// Picard degree `deg L = g − 1 + 2·deg(C) + n − s`.
pub fn chi_l(d: &ComponentDescriptor) -> Result<i64> {
    let chern_f = chern_of(&d.reflexive)?;
    let p_f = hp_from_chern(&chern_f)?;
    let k = chern_f.c2 + d.degree();
    // P_F(0) − (χ(L) + s) must equal P_E(0) = 2 − 2k
    let p_f0 = p_f.eval(0).to_i64().expect("integral Hilbert polynomial");
    let chi = p_f0 - d.s as i64 - (2 - 2 * k);
    let n = chern_f.c3 / 2;
    let g = genus(&d.curve);
    let deg = g - 1 + 2 * d.degree() + n - d.s as i64;
    debug_assert_eq!(chi, deg + 1 - g);
    Ok(chi)
}

/// `deg L = χ(L) + g − 1`.
pub fn deg_l(d: &ComponentDescriptor) -> Result<i64> {
    Ok(chi_l(d)? + genus(&d.curve) - 1)
}

/// Hilbert polynomial of `Q = L ⊕ O_W`: `χ(L) + s + deg(C)·t`.
pub fn hp_quotient(d: &ComponentDescriptor) -> Result<HilbertPolynomial> {
    Ok(HilbertPolynomial::linear(chi_l(d)? + d.s as i64, d.degree()))
}

/// Chern data of `E` from `P_E = P_F − P_Q`.
pub fn chern_of_e(d: &ComponentDescriptor) -> Result<ChernData> {
    let p_f = hp_from_chern(&chern_of(&d.reflexive)?)?;
    let p_e = &p_f - &hp_quotient(d)?;
    let out = chern_from_hp(&p_e)?;
    if out.c3 != 0 {
        return Err(Error::NonZeroC3 { c3: out.c3 });
    }
    Ok(out)
}

/// Both routes for `χ(Hom(F, L))`.
///
/// Route A (resolution, `S_{a,b,c}` only):
/// `(a+b+c+2)χ(L(κ)) − aχ(L(κ+3)) − bχ(L(κ+2)) − cχ(L(κ+1))`.
/// Route B (`F|_C` trivial): `2·χ(L)`.
pub fn chi_hom_routes(d: &ComponentDescriptor) -> Result<(Option<i64>, i64)> {
    let chi = chi_l(d)?;
    let deg = d.degree();
    let chi_twist = |j: i64| chi + j * deg;
    let route_a = match d.reflexive {
        ReflexiveFamily::Sabc { a, b, c } => {
            let kappa = d.reflexive.kappa().expect("sabc has kappa");
            let (a, b, c) = (a as i64, b as i64, c as i64);
            Some(
                (a + b + c + 2) * chi_twist(kappa)
                    - a * chi_twist(kappa + 3)
                    - b * chi_twist(kappa + 2)
                    - c * chi_twist(kappa + 1),
            )
        }
        ReflexiveFamily::Vm { .. } => None,
    };
    Ok((route_a, 2 * chi))
}

pub fn chi_hom_fl(d: &ComponentDescriptor) -> Result<i64> {
    match chi_hom_routes(d)? {
        (Some(a), b) if a != b => Err(Error::RouteMismatch { route_a: a, route_b: b }),
        (_, b) => Ok(b),
    }
}

/// `dim Hom(F, Q)/Aut(Q) = (h⁰(Hom(F,L)) − 1) + s`.
pub fn hom_orbit_dim(d: &ComponentDescriptor) -> Result<i64> {
    let chi = chi_hom_fl(d)?;
    if chi < 1 {
        return Err(Error::EmptyHom { chi });
    }
    Ok(chi - 1 + d.s as i64)
}

/// `dim R + dim H0 + dim P + dim Hom(F,Q)/Aut(Q) − dim PAut(F)`.
pub fn dim_component(d: &ComponentDescriptor) -> Result<i64> {
    let dim_points = 3 * d.s as i64;
    let dim_picard = dim_hilb(&d.curve) + genus(&d.curve);
    Ok(dim_moduli(&d.reflexive)? + dim_points + dim_picard + hom_orbit_dim(d)?
        - dim_paut(&d.reflexive))
}

/// Pieces of `dim Ext¹(E, E)` along the local-to-global route.
pub fn tangent_assembly(d: &ComponentDescriptor) -> Result<TangentAssembly> {
    let s = d.s as i64;
    let profile = ext_profile(&d.reflexive)?;
    // N_W: three sections per point
    let local_ext1 = 3 * s + h0_normal(&d.curve);
    // Q = L ⊕ O_{x_1} ⊕ ... ⊕ O_{x_s}; each Hom(F, O_x) is k²
    let h0_hom_fq = chi_hom_fl(d)? + 2 * s;
    let h0_hom_qq = 1 + s;
    let h1_hom_qq = cohomology_oc(&d.curve, 0).h1;
    let global_hom = 1 - profile.hom + h0_hom_fq - h0_hom_qq + h1_hom_qq;
    Ok(TangentAssembly { local_ext1, global_hom, ext1_reflexive: profile.ext1 })
}

/// `dim Ext¹(E, E)` at a general point.
pub fn dim_tangent(d: &ComponentDescriptor) -> Result<i64> {
    Ok(tangent_assembly(d)?.total())
}

/// Verdicts for the integer constraints and the genericity conditions.
///
/// Accepts any descriptor; inadmissible ones get `Fails` verdicts.
pub fn check_conditions(d: &ComponentDescriptor) -> Vec<ConditionVerdict> {
    use ConditionId::*;
    let mut out = Vec::with_capacity(8);
    let s = d.s as i64;
    let n = d.reflexive.n().ok();

    out.push(match n {
        None => ConditionVerdict::new(PointBound, Status::Fails, "reflexive family has no valid Chern data"),
        Some(n) if d.curve.is_rational() => {
            let ok = s < n;
            ConditionVerdict::new(PointBound, if ok { Status::Holds } else { Status::Fails }, format!("s={s} < n={n}"))
        }
        Some(n) => {
            let ok = s <= n;
            ConditionVerdict::new(PointBound, if ok { Status::Holds } else { Status::Fails }, format!("s={s} <= n={n}"))
        }
    });

    out.push(match d.reflexive {
        ReflexiveFamily::Vm { m } => {
            let deg = d.curve.degree();
            let ok = m < deg;
            ConditionVerdict::new(VmDegree, if ok { Status::Holds } else { Status::Fails }, format!("m={m} < d={deg}"))
        }
        ReflexiveFamily::Sabc { .. } => ConditionVerdict::new(VmDegree, Status::Holds, "vacuous for S_abc"),
    });

    out.push(ConditionVerdict::new(Disjoint, Status::HoldsGenerically, "open dense"));
    out.push(if d.reflexive.is_vm() {
        ConditionVerdict::new(SingularAvoidance, Status::Holds, "vacuous for V_m")
    } else {
        ConditionVerdict::new(SingularAvoidance, Status::HoldsGenerically, "open dense")
    });
    out.push(if d.reflexive.is_vm() {
        ConditionVerdict::new(CurveAvoidance, Status::HoldsGenerically, "open dense")
    } else {
        ConditionVerdict::new(CurveAvoidance, Status::Holds, "vacuous for S_abc")
    });
    out.push(ConditionVerdict::new(
        HomVanishing,
        Status::HoldsGenerically,
        "open dense; dimension counts take h0(Hom(F,L)) = chi(Hom(F,L))",
    ));
    out.push(ConditionVerdict::new(Surjection, Status::HoldsGenerically, "open dense"));

    out.push(match n {
        None => ConditionVerdict::new(Defect, Status::Fails, "reflexive family has no valid Chern data"),
        Some(n) => {
            let deg = defect_degree(d, n);
            let (status, note) = match deg.signum() {
                -1 => (Status::Holds, format!("deg(omega_C(4) - 2L) = {deg} < 0")),
                0 => (Status::HoldsGenerically, "degree 0; needs L(-2) not a theta-characteristic".to_string()),
                _ => (Status::Fails, format!("deg(omega_C(4) - 2L) = {deg} > 0")),
            };
            ConditionVerdict::new(Defect, status, note)
        }
    });
    out
}

// deg(ω_C(4) ⊗ L⁻²) computed from its parts
fn defect_degree(d: &ComponentDescriptor, n: i64) -> i64 {
    let g = genus(&d.curve);
    let deg_c = d.degree();
    let deg_l = g - 1 + 2 * deg_c + n - d.s as i64;
    2 * g - 2 + 4 * deg_c - 2 * deg_l
}

/// `2g − 2 + 4·deg(C) − 2·deg(L) = 2(s − n)`, with `deg L` taken from the
/// `c3(E) = 0` route.
pub fn defect_identity_holds(d: &ComponentDescriptor) -> Result<bool> {
    let g = genus(&d.curve);
    let n = d.reflexive.n()?;
    let lhs = 2 * g - 2 + 4 * d.degree() - 2 * deg_l(d)?;
    Ok(lhs == 2 * (d.s as i64 - n))
}

/// True iff every integer constraint holds.
pub fn is_admissible(d: &ComponentDescriptor) -> bool {
    check_conditions(d)
        .iter()
        .all(|v| !(v.id.is_numeric() || v.id == ConditionId::Defect) || v.status != Status::Fails)
}

/// `½P_E(t) − P_{I_{C⊔W}}(t)`, with leading coefficient `(deg(C) − m)/2`.
pub fn stability_margin(d: &ComponentDescriptor) -> Result<HilbertPolynomial> {
    if !d.reflexive.is_vm() {
        return Err(Error::MarginNeedsVm);
    }
    let p_e = hp_from_chern(&chern_of_e(d)?)?;
    let chi_oc0 = 1 - genus(&d.curve);
    let p_curve_and_points = HilbertPolynomial::linear(chi_oc0 + d.s as i64, d.degree());
    let p_ideal = &hp_o_p3() - &p_curve_and_points;
    Ok(&p_e.scale(&Rational::new(1, 2)) - &p_ideal)
}

pub fn signature(d: &ComponentDescriptor) -> Result<SingularitySignature> {
    Ok(SingularitySignature {
        curve_parts: vec![(d.curve.degree(), genus(&d.curve))],
        isolated_points_from_w: d.s,
        reflexive_sing_c3: chern_of(&d.reflexive)?.c3,
    })
}

/// Knobs for [`build_report_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReportOptions {
    pub min_curve_degree: u32,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions { min_curve_degree: DEFAULT_MIN_CURVE_DEGREE }
    }
}

pub fn build_report(d: &ComponentDescriptor) -> Result<ComponentReport> {
    build_report_with(d, &ReportOptions::default())
}

pub fn build_report_with(d: &ComponentDescriptor, opts: &ReportOptions) -> Result<ComponentReport> {
    d.reflexive.validate()?;
    d.curve.validate()?;
    let verdicts = check_conditions(d);
    let failed: Vec<_> = verdicts
        .iter()
        .filter(|v| v.status == Status::Fails)
        .map(|v| format!("({}) {}", v.id.label(), v.note))
        .collect();
    if !failed.is_empty() {
        return Err(Error::Inadmissible(failed.join("; ")));
    }
    let degree = d.curve.degree();
    if degree < opts.min_curve_degree {
        return Err(Error::BelowDegreeFloor { degree, floor: opts.min_curve_degree });
    }
    assemble(d, verdicts)
}

/// Like [`build_report`] but keeps going past failed conditions and the
/// degree floor, as long as every quantity is still computable. The
/// `Fails` verdicts stay in the report.
pub fn build_report_lenient(d: &ComponentDescriptor) -> Result<ComponentReport> {
    d.reflexive.validate()?;
    d.curve.validate()?;
    assemble(d, check_conditions(d))
}

fn assemble(d: &ComponentDescriptor, verdicts: Vec<ConditionVerdict>) -> Result<ComponentReport> {
    let degree = d.curve.degree();
    let chern_r = chern_of(&d.reflexive)?;
    let chern_e = chern_of_e(d)?;
    let component = dim_component(d)?;
    let tangent = tangent_assembly(d)?;
    if component != tangent.total() {
        return Err(Error::DimensionMismatch { component, tangent: tangent.total() });
    }

    let mut erratum_notes = Vec::new();
    let chern_r_closed_form = match d.reflexive {
        ReflexiveFamily::Sabc { a, b, c } => {
            if let Some((closed_form, resolution)) = closed_form_c3_mismatch(&d.reflexive)? {
                erratum_notes.push(ErratumNote::ClosedFormC3 { a, b, c, closed_form, resolution });
            }
            Some(crate::families::chern_sabc_closed(a, b, c)?)
        }
        ReflexiveFamily::Vm { .. } => None,
    };
    if *d == ComponentDescriptor::m3_component() && component != PRINTED_M3_DIMENSION {
        erratum_notes.push(ErratumNote::PrintedDimension { printed: PRINTED_M3_DIMENSION, computed: component });
    }
    if degree < DEFAULT_MIN_CURVE_DEGREE {
        erratum_notes.push(ErratumNote::BelowNoveltyFloor { degree });
    }

    let g = genus(&d.curve);
    Ok(ComponentReport {
        descriptor: *d,
        k: chern_e.c2,
        chern_r,
        chern_r_closed_form,
        chern_e,
        n: chern_r.c3 / 2,
        genus: g,
        deg_l: deg_l(d)?,
        chi_l: chi_l(d)?,
        chi_hom_fl: chi_hom_fl(d)?,
        hom_orbit_dim: hom_orbit_dim(d)?,
        dim_reflexive: dim_moduli(&d.reflexive)?,
        dim_points: 3 * d.s as i64,
        dim_picard: dim_hilb(&d.curve) + g,
        dim_paut: dim_paut(&d.reflexive),
        dim_component: component,
        dim_tangent: tangent.total(),
        tangent,
        h1_normal: h1_normal(&d.curve),
        stability_margin: if d.reflexive.is_vm() { Some(stability_margin(d)?) } else { None },
        verdicts,
        signature: signature(d)?,
        erratum_notes,
    })
}

/// Hilbert polynomial of `F` for either family, for callers that want to
/// inspect it directly.
pub fn hp_reflexive(r: &ReflexiveFamily) -> Result<HilbertPolynomial> {
    match *r {
        ReflexiveFamily::Sabc { a, b, c } => hp_of_resolution(a, b, c),
        ReflexiveFamily::Vm { .. } => hp_from_chern(&chern_of(r)?),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn desc(r: ReflexiveFamily, c: CurveFamily, s: u32) -> ComponentDescriptor {
        ComponentDescriptor::new(r, c, s)
    }
    fn v(m: u32) -> ReflexiveFamily {
        ReflexiveFamily::vm(m).unwrap()
    }
    fn sabc(a: u32, b: u32, c: u32) -> ReflexiveFamily {
        ReflexiveFamily::sabc(a, b, c).unwrap()
    }
    fn rc(d: u32) -> CurveFamily {
        CurveFamily::rational(d).unwrap()
    }
    fn ci(d1: u32, d2: u32) -> CurveFamily {
        CurveFamily::complete_intersection(d1, d2).unwrap()
    }

    #[test]
    fn chi_l_examples() {
        let d = desc(v(1), rc(2), 0);
        assert_eq!((chi_l(&d).unwrap(), deg_l(&d).unwrap()), (5, 4));
        let d = desc(sabc(0, 0, 2), rc(2), 1);
        assert_eq!((chi_l(&d).unwrap(), deg_l(&d).unwrap()), (5, 4));
        let d = desc(v(1), ci(1, 3), 1);
        assert_eq!((chi_l(&d).unwrap(), deg_l(&d).unwrap()), (6, 6));
    }

    #[test]
    fn chern_of_e_examples() {
        assert_eq!(chern_of_e(&desc(v(1), rc(2), 0)).unwrap(), ChernData::rank_two(3, 0));
        assert_eq!(chern_of_e(&desc(sabc(0, 0, 2), rc(2), 0)).unwrap(), ChernData::rank_two(4, 0));
        assert_eq!(chern_of_e(&desc(v(1), ci(1, 3), 1)).unwrap(), ChernData::rank_two(4, 0));
    }

    #[test]
    fn chi_hom_examples() {
        assert_eq!(chi_hom_fl(&desc(v(1), rc(2), 0)).unwrap(), 10);
        assert_eq!(chi_hom_routes(&desc(sabc(0, 0, 2), rc(2), 0)).unwrap(), (Some(12), 12));
        assert_eq!(chi_hom_fl(&desc(sabc(0, 1, 0), rc(3), 2)).unwrap(), 16);
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(hom_orbit_dim(&desc(v(1), rc(2), 0)).unwrap(), 9);
        assert_eq!(hom_orbit_dim(&desc(sabc(0, 0, 2), rc(2), 1)).unwrap(), 10);
        assert_eq!(hom_orbit_dim(&desc(v(1), ci(1, 3), 1)).unwrap(), 12);
    }

    #[test]
    fn empty_hom_is_an_error() {
        // far outside the admissible range: s pushes chi(L) negative
        let d = desc(v(1), rc(2), 10);
        assert!(matches!(hom_orbit_dim(&d), Err(Error::EmptyHom { .. })));
    }

    #[test]
    fn component_dimension_examples() {
        assert_eq!(dim_component(&desc(v(1), rc(2), 0)).unwrap(), 22);
        assert_eq!(dim_component(&desc(sabc(0, 0, 2), rc(2), 0)).unwrap(), 32);
        assert_eq!(dim_component(&desc(v(1), ci(1, 3), 1)).unwrap(), 33);
    }

    #[test]
    fn tangent_dimension_examples() {
        assert_eq!(dim_tangent(&desc(v(1), rc(2), 0)).unwrap(), 22);
        assert_eq!(dim_tangent(&desc(sabc(0, 0, 2), rc(2), 1)).unwrap(), 34);
        assert_eq!(dim_tangent(&desc(sabc(0, 1, 0), rc(3), 0)).unwrap(), 52);
    }

    fn status(vs: &[ConditionVerdict], id: ConditionId) -> Status {
        vs.iter().find(|v| v.id == id).unwrap().status
    }

    #[test]
    fn condition_examples() {
        let vs = check_conditions(&desc(v(1), rc(2), 0));
        assert_eq!(status(&vs, ConditionId::PointBound), Status::Holds);
        assert_eq!(status(&vs, ConditionId::VmDegree), Status::Holds);
        assert_eq!(status(&vs, ConditionId::Defect), Status::Holds);

        let vs = check_conditions(&desc(v(1), rc(2), 1));
        assert_eq!(status(&vs, ConditionId::PointBound), Status::Fails);

        let vs = check_conditions(&desc(sabc(0, 0, 2), ci(2, 2), 2));
        assert_eq!(status(&vs, ConditionId::PointBound), Status::Holds);
        assert_eq!(status(&vs, ConditionId::Defect), Status::HoldsGenerically);

        let vs = check_conditions(&desc(v(2), rc(2), 0));
        assert_eq!(status(&vs, ConditionId::VmDegree), Status::Fails);
        assert!(!is_admissible(&desc(v(2), rc(2), 0)));

        let vs = check_conditions(&desc(sabc(0, 0, 2), ci(2, 2), 3));
        assert_eq!(status(&vs, ConditionId::PointBound), Status::Fails);
        assert_eq!(status(&vs, ConditionId::Defect), Status::Fails);
    }

    #[test]
    fn geometric_conditions_are_generic_only() {
        for d in [desc(v(1), rc(2), 0), desc(sabc(0, 1, 0), ci(2, 2), 3)] {
            for verdict in check_conditions(&d) {
                if verdict.status == Status::HoldsGenerically {
                    assert!(!verdict.id.is_numeric(), "{verdict:?}");
                }
            }
        }
    }

    #[test]
    fn stability_margin_examples() {
        let p = stability_margin(&desc(v(1), rc(2), 0)).unwrap();
        assert_eq!(*p.coeff(1), Rational::new(1, 2));
        assert!(p.degree() <= Some(1));
        let p = stability_margin(&desc(v(1), rc(3), 0)).unwrap();
        assert_eq!(*p.coeff(1), Rational::integer(1));
        assert_eq!(stability_margin(&desc(sabc(0, 0, 2), rc(2), 0)), Err(Error::MarginNeedsVm));
        // m = d gives slope zero; such descriptors are rejected upstream
        let p = stability_margin(&desc(v(2), rc(2), 0)).unwrap();
        assert!(p.coeff(1).is_zero());
        assert!(!is_admissible(&desc(v(2), rc(2), 0)));
    }

    #[test]
    fn signature_examples() {
        let sig = signature(&desc(v(1), rc(2), 0)).unwrap();
        assert_eq!((sig.curve_parts, sig.isolated_points_from_w, sig.reflexive_sing_c3), (vec![(2, 0)], 0, 2));
        let sig = signature(&desc(sabc(0, 0, 2), rc(2), 1)).unwrap();
        assert_eq!((sig.curve_parts, sig.isolated_points_from_w, sig.reflexive_sing_c3), (vec![(2, 0)], 1, 4));
        let sig = signature(&desc(sabc(0, 1, 0), ci(2, 2), 3)).unwrap();
        assert_eq!((sig.curve_parts, sig.isolated_points_from_w, sig.reflexive_sing_c3), (vec![(4, 1)], 3, 8));
    }

    #[test]
    fn report_examples() {
        let r = build_report(&ComponentDescriptor::m3_component()).unwrap();
        assert_eq!((r.k, r.dim_component, r.dim_tangent), (3, 22, 22));
        assert_eq!(r.erratum_notes, vec![ErratumNote::PrintedDimension { printed: 21, computed: 22 }]);

        let r = build_report(&desc(sabc(0, 0, 2), rc(2), 0)).unwrap();
        assert_eq!((r.k, r.dim_component), (4, 32));
        assert!(r.erratum_notes.is_empty());
        assert!(r.stability_margin.is_none());

        let r = build_report(&desc(v(1), rc(3), 0)).unwrap();
        assert_eq!((r.k, r.chi_hom_fl, r.dim_component), (4, 14, 30));
    }

    #[test]
    fn report_rejections() {
        assert!(matches!(build_report(&desc(v(2), rc(2), 0)), Err(Error::Inadmissible(_))));
        assert!(matches!(build_report(&desc(v(1), rc(2), 1)), Err(Error::Inadmissible(_))));
        let line = desc(sabc(0, 0, 2), rc(1), 0);
        assert_eq!(build_report(&line), Err(Error::BelowDegreeFloor { degree: 1, floor: 2 }));
        let r = build_report_with(&line, &ReportOptions { min_curve_degree: 1 }).unwrap();
        assert!(r.erratum_notes.contains(&ErratumNote::BelowNoveltyFloor { degree: 1 }));
        // hand-built descriptor with a broken family
        let bad = desc(ReflexiveFamily::Sabc { a: 1, b: 0, c: 0 }, rc(2), 0);
        assert!(matches!(build_report(&bad), Err(Error::Parity { .. })));
    }

    #[test]
    fn mixed_triple_report_carries_c3_note() {
        // S(1,0,1): c2 = 9; with conics this lands in M(11)
        let r = build_report(&desc(sabc(1, 0, 1), rc(2), 0)).unwrap();
        assert_eq!(r.k, 11);
        assert_eq!(
            r.erratum_notes,
            vec![ErratumNote::ClosedFormC3 { a: 1, b: 0, c: 1, closed_form: Rational::new(77, 2), resolution: 40 }]
        );
    }

    #[test]
    fn lenient_report_keeps_failed_verdicts() {
        let r = build_report_lenient(&desc(v(2), rc(2), 0)).unwrap();
        assert_eq!(r.k, 4);
        let failed: Vec<_> = r.verdicts.iter().filter(|v| v.status == Status::Fails).map(|v| v.id).collect();
        assert_eq!(failed, vec![ConditionId::VmDegree]);
        assert_eq!(r.dim_component, r.dim_tangent);

        let ok = desc(sabc(0, 0, 2), rc(2), 1);
        assert_eq!(build_report_lenient(&ok), build_report(&ok));
        let line = build_report_lenient(&desc(sabc(0, 0, 2), rc(1), 0)).unwrap();
        assert!(line.erratum_notes.contains(&ErratumNote::BelowNoveltyFloor { degree: 1 }));
    }
}
