//! The quadratic-extension affine construction: G = AGL(1, q²) acting
//! on the cosets of H = E:E^×, where E is the subfield of order q
//! inside F = F_{q²}. The distinguished subgroup S = F:E^× has
//! |S|/|H| = q, just under the square root of the degree q(q+1). The
//! cyclic subgroup K of order q+1 in F^× acts regularly on [G:S] for
//! even q; for odd q it meets S in {+1, -1}, but a transversal of E^×
//! in F^× is still a sharply transitive set on [G:S], which is the
//! certificate that S is a maximum intersecting set.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::action::coset_action;
use crate::affine::Affine1;
use crate::error::{Error, Result};
use crate::field::make_field;
use crate::group::{enumerate_closure, Group};
use crate::perm::Permutation;
use crate::ratio::Ratio;

use super::{is_prime, ConstructionResult};

pub fn build_nobo(p: u64, d: usize, cap: usize) -> Result<ConstructionResult> {
    if !is_prime(p) {
        return Err(Error::BadParameter(format!("p = {p} is not prime")));
    }
    if d == 0 {
        return Err(Error::BadParameter("d must be positive".into()));
    }
    let q = p.pow(d as u32);
    let field = make_field(p as u32, 2 * d)?;
    let qq = field.order();
    debug_assert_eq!(qq, q * q);
    let one = field.one();
    let gen = crate::field::multiplicative_generator(&field);

    let shift = |b: &crate::field::Felt| Affine1::new(field.clone(), one.clone(), b.clone());
    let scale = |a: &crate::field::Felt| Affine1::new(field.clone(), a.clone(), field.zero());

    // G = F : F^* from a shift by 1 and a scale by a generator.
    let g_gens = alloc::vec![shift(&one)?, scale(&gen)?];
    let identity = Affine1::identity(field.clone());
    let group = Group::new(identity.clone(), g_gens).enumerate(cap)?;

    // w generates E^* (the subfield multiplicative group).
    let w = field.pow(&gen, q + 1);
    // H = E : E^*: shifts by subfield elements, scaled by w.
    let mut h_gens: Vec<Affine1> = Vec::new();
    for e in field.subfield_elements(d)? {
        if !field.is_zero(&e) {
            h_gens.push(shift(&e)?);
        }
    }
    h_gens.push(scale(&w)?);

    // S = F : E^*: all shifts, scaled by w.
    let mut s_gens: Vec<Affine1> = alloc::vec![shift(&one)?, shift(&field.x())?];
    for k in 2..2 * d {
        s_gens.push(shift(&field.pow(&field.x(), k as u64))?);
    }
    s_gens.push(scale(&w)?);

    // K: the cyclic subgroup of order q+1 in F^*.
    let k_gen = scale(&field.pow(&gen, q - 1))?;

    let table = coset_action(&group, &h_gens, cap)?;
    let action = table.to_action(cap)?;
    let degree = action.degree();

    let mut subgroups = BTreeMap::new();
    for (role, gens) in [
        ("H", h_gens.clone()),
        ("S", s_gens.clone()),
        ("K", alloc::vec![k_gen]),
    ] {
        let members = enumerate_closure(&identity, &gens, cap)?;
        let perms = members
            .elements()
            .iter()
            .map(|e| table.perm_of(e))
            .collect::<Result<Vec<Permutation>>>()?;
        subgroups.insert(String::from(role), perms);
    }

    let mut metrics = BTreeMap::new();
    metrics.insert(String::from("omega"), Ratio::from_integer(q * (q + 1)));
    metrics.insert(String::from("h-order"), Ratio::from_integer(q * (q - 1)));
    metrics.insert(String::from("s-order"), Ratio::from_integer(q * q * (q - 1)));
    metrics.insert(String::from("k-order"), Ratio::from_integer(q + 1));
    metrics.insert(String::from("s-over-h"), Ratio::from_integer(q));

    Ok(ConstructionResult {
        name: format!("nobo-q{q}"),
        degree,
        group_order: group.order() as u64,
        action: Some(action),
        subgroups,
        metrics,
        structural: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::CosetTable;
    use crate::analysis::{is_intersecting_subgroup, max_intersecting};

    #[test]
    fn degrees_and_orders() {
        // (p,d) = (2,2): q = 4, degree 20, |H| = 12, |S| = 48.
        let r = build_nobo(2, 2, 100_000).unwrap();
        assert_eq!(r.degree, 20);
        assert_eq!(r.group_order, 240);
        assert_eq!(r.subgroup("H").unwrap().len(), 12);
        assert_eq!(r.subgroup("S").unwrap().len(), 48);
        assert_eq!(r.subgroup("K").unwrap().len(), 5);
        assert_eq!(r.metric("s-over-h"), Some(Ratio::from_integer(4)));

        // (p,d) = (5,1): degree 30.
        let r = build_nobo(5, 1, 100_000).unwrap();
        assert_eq!(r.degree, 30);
        assert_eq!(r.group_order, 600);
        assert_eq!(r.subgroup("S").unwrap().len(), 100);
    }

    #[test]
    fn s_is_intersecting_and_maximum_at_q3() {
        let r = build_nobo(3, 1, 100_000).unwrap();
        assert_eq!(r.degree, 12);
        let s = r.subgroup("S").unwrap();
        assert_eq!(s.len(), 18);
        assert!(is_intersecting_subgroup(s));
        // Exact clique search on 72 vertices confirms S is maximum.
        let report = max_intersecting(r.action.as_ref().unwrap(), 2500, 1).unwrap();
        assert_eq!(report.max_intersecting, 18);
        assert_eq!(report.rho, Ratio::new(3, 1));
    }

    #[test]
    fn regularity_on_cosets_of_s() {
        // Rebuild the coset space [G:S]. The order-(q+1) cyclic
        // subgroup K of F^* acts regularly on it exactly when q is
        // even; for odd q it meets S in {+1, -1} and its orbit covers
        // only half the cosets. Either way the powers gen^0..gen^q
        // form a transversal of E^* in F^* and hence a sharply
        // transitive set, which is what certifies the EKR property
        // for this coset space.
        for (p, d) in [(3u64, 1usize), (2, 2), (5, 1)] {
            let q = p.pow(d as u32);
            let field = make_field(p as u32, 2 * d).unwrap();
            let gen = crate::field::multiplicative_generator(&field);
            let one = field.one();
            let identity = Affine1::identity(field.clone());
            let shift1 = Affine1::new(field.clone(), one.clone(), one.clone()).unwrap();
            let scale_gen = Affine1::new(field.clone(), gen.clone(), field.zero()).unwrap();
            let group = Group::new(identity.clone(), alloc::vec![shift1.clone(), scale_gen])
                .enumerate(100_000)
                .unwrap();
            let w = field.pow(&gen, q + 1);
            let mut s_gens = alloc::vec![shift1];
            for k in 1..2 * d {
                s_gens.push(
                    Affine1::new(field.clone(), one.clone(), field.pow(&field.x(), k as u64))
                        .unwrap(),
                );
            }
            s_gens.push(Affine1::new(field.clone(), w, field.zero()).unwrap());
            let s = enumerate_closure(&identity, &s_gens, 100_000).unwrap();
            let table =
                CosetTable::build(&identity, group.generators(), s.elements(), 100_000).unwrap();
            assert_eq!(table.degree() as u64, q + 1);
            let k_elt = Affine1::new(field.clone(), field.pow(&gen, q - 1), field.zero()).unwrap();
            let k_members = enumerate_closure(&identity, &alloc::vec![k_elt], 1000).unwrap();
            assert_eq!(k_members.order() as u64, q + 1);
            let mut seen = alloc::collections::BTreeSet::new();
            for e in k_members.elements() {
                let perm = table.perm_of(e).unwrap();
                seen.insert(perm.image(0));
            }
            let expected = if q % 2 == 0 { q + 1 } else { (q + 1) / 2 };
            assert_eq!(seen.len() as u64, expected, "q = {q}");

            // The power transversal is sharply transitive for every q.
            let transversal: Vec<Permutation> = (0..=q)
                .map(|i| {
                    let c =
                        Affine1::new(field.clone(), field.pow(&gen, i), field.zero()).unwrap();
                    table.perm_of(&c).unwrap()
                })
                .collect();
            assert!(crate::analysis::validate_sharply_transitive(
                table.degree(),
                &transversal
            ));
        }
    }

    #[test]
    fn bad_parameters() {
        assert!(build_nobo(4, 1, 1000).is_err());
        assert!(build_nobo(5, 0, 1000).is_err());
        // Cap small enough to refuse the group enumeration.
        assert!(matches!(
            build_nobo(5, 1, 100),
            Err(Error::EnumerationCap { .. })
        ));
    }
}
