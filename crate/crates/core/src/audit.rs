//! Module-level identity suites, run by `atlas verify` next to the per-atlas
//! checks.

use crate::atlas::CheckTally;
use crate::curvecoh::{canonical_twist, chi_oc, chi_oc_koszul, cohomology_oc, genus, CurveFamily};
use crate::error::Result;
use crate::exactpoly::Rational;
use crate::families::{chern_of, chern_sabc_closed, dim_moduli, euler_check, ext_profile, sabc_triples, ReflexiveFamily};
use crate::p3rr::{chern_from_hp, chi_o_p3, h0_o_p3, hp_from_chern, ChernData};

/// Largest `3a+2b+c` covered by the closed-form audit.
pub const MAX_SABC_WEIGHT: u32 = 30;
/// Largest `m` covered for `V_m`.
pub const MAX_VM: u32 = 20;

/// Complete intersections `(d1, d2)` with `d1·d2 ≤ max_degree`.
pub fn complete_intersections(max_degree: u32) -> Vec<CurveFamily> {
    let mut out = Vec::new();
    for d1 in 1..=max_degree {
        for d2 in d1..=max_degree / d1 {
            if let Ok(c) = CurveFamily::complete_intersection(d1, d2) {
                out.push(c);
            }
        }
    }
    out
}

pub fn p3rr_checks() -> Result<Vec<CheckTally>> {
    let mut serre = CheckTally::new("chi(O(j)) = -chi(O(-4-j)), |j| <= 30", true);
    let mut h0 = CheckTally::new("h0(O(j)) = chi(O(j)) for j >= 0, else 0", true);
    for j in -30..=30 {
        serre.record(chi_o_p3(j) == -chi_o_p3(-4 - j));
        h0.record(if j >= 0 { h0_o_p3(j) == chi_o_p3(j) } else { h0_o_p3(j) == 0 });
    }
    let mut round_trip = CheckTally::new("chern_from_hp(hp_from_chern(c)) = c", true);
    for c2 in -20..=60 {
        for c3 in (-100..=300).step_by(2) {
            let c = ChernData::rank_two(c2, c3);
            round_trip.record(chern_from_hp(&hp_from_chern(&c)?) == Ok(c));
        }
    }
    Ok(vec![serre, h0, round_trip])
}

pub fn curve_checks() -> Vec<CheckTally> {
    let mut chi = CheckTally::new("h0 - h1 = chi(O_C(a)), deg <= 12, a in [-6,12]", true);
    let mut families: Vec<CurveFamily> = (1..=12).map(|d| CurveFamily::RationalCurve { d }).collect();
    families.extend(complete_intersections(12));
    for c in &families {
        for a in -6..=12 {
            chi.record(cohomology_oc(c, a).chi() == chi_oc(c, a));
        }
    }
    let mut serre = CheckTally::new("h1(O_C(a)) = h0(O_C(e-a)), d1d2 <= 16, a in [0,e+4]", true);
    let mut koszul = CheckTally::new("Koszul chi = Riemann-Roch chi, d1d2 <= 16", true);
    for c in complete_intersections(16) {
        let CurveFamily::CompleteIntersection { d1, d2 } = c else { continue };
        let e = canonical_twist(&c).expect("complete intersection");
        for a in 0..=e + 4 {
            serre.record(cohomology_oc(&c, a).h1 == cohomology_oc(&c, e - a).h0);
            koszul.record(chi_oc(&c, a) == chi_oc_koszul(d1, d2, a));
        }
        for a in -6..=12 {
            koszul.record(chi_oc(&c, a) == chi_oc_koszul(d1, d2, a));
        }
    }
    let mut g = CheckTally::new("genus of complete intersections >= 0, d1d2 <= 25", true);
    for c in complete_intersections(25) {
        g.record(genus(&c) >= 0);
    }
    vec![chi, serre, koszul, g]
}

/// Closed forms vs resolution over `3a+2b+c ≤ 30`, plus parity, Euler
/// pairing and the `V_m` dimension formula.
pub fn family_checks() -> Result<Vec<CheckTally>> {
    let mut eq2 = CheckTally::new("closed-form c2 = resolution c2, weight <= 30", true);
    let mut eq3_single = CheckTally::new("closed-form c3 = resolution c3, single-family triples", true);
    let mut eq3_mixed = CheckTally::new("closed-form c3 = resolution c3, mixed triples", false);
    let mut parity = CheckTally::new("c3 even", true);
    let mut euler = CheckTally::new("Euler pairing = 4 - 8c2", true);
    for (a, b, c) in sabc_triples(MAX_SABC_WEIGHT) {
        let r = ReflexiveFamily::Sabc { a, b, c };
        let oracle = chern_of(&r)?;
        let closed = chern_sabc_closed(a, b, c)?;
        eq2.record(closed.c2 == oracle.c2);
        let agree = closed.c3 == Rational::integer(oracle.c3);
        let nonzero = [a, b, c].iter().filter(|&&x| x > 0).count();
        if nonzero == 1 {
            eq3_single.record(agree);
        } else {
            eq3_mixed.record(agree);
        }
        parity.record(oracle.c3 % 2 == 0);
        euler.record(euler_check(&r)?);
    }
    let mut vm_dim = CheckTally::new("dim V_m = h1(N) + 8m + g - 2 with h1(N) = g = 0", true);
    for m in 1..=MAX_VM {
        let r = ReflexiveFamily::Vm { m };
        parity.record(chern_of(&r)?.c3 % 2 == 0);
        euler.record(euler_check(&r)?);
        vm_dim.record(dim_moduli(&r)? == 8 * m as i64 - 2 && ext_profile(&r)?.ext1 == dim_moduli(&r)?);
    }
    Ok(vec![eq2, eq3_single, eq3_mixed, parity, euler, vm_dim])
}

pub fn module_checks() -> Result<Vec<CheckTally>> {
    let mut out = p3rr_checks()?;
    out.extend(curve_checks());
    out.extend(family_checks()?);
    Ok(out)
}
