//! Concrete coset actions of PSL(2, p): the group acting on the
//! cosets of a subgroup from one of the six catalogued families
//! (point stabilizer, the two torus normalizers, A4, S4, A5). These
//! realize the arithmetic verdicts of [`crate::psl2`] as explicit
//! permutation actions that the generic analysis can check.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::action::coset_action;
use crate::error::{Error, Result};
use crate::field::{make_field, multiplicative_generator, Felt, FiniteField};
use crate::group::{enumerate_closure, Enumerated, Group, GroupElement};
use crate::matrix::Mat2;
use crate::perm::Permutation;
use crate::psl2::{family_admissible, Psl2Family};
use crate::ratio::Ratio;

use super::{is_prime, ConstructionResult};

/// PSL(2, p) as projective matrices, from the two standard unimodular
/// generators.
pub(crate) fn psl2_group(p: u64, cap: usize) -> Result<Enumerated<Mat2>> {
    let f = make_field(p as u32, 1)?;
    let u = Mat2::from_ints(f.clone(), [1, 1, 0, 1], true)?;
    let s = Mat2::from_ints(f.clone(), [0, 1, -1, 0], true)?;
    Group::new(Mat2::identity(f, true), alloc::vec![u, s]).enumerate(cap)
}

/// Matrix of multiplication by gamma on F_{p^2} viewed as the plane
/// over F_p with basis {1, xbar}, as a projective matrix over F_p.
fn mult_matrix(big: &FiniteField, small: &alloc::sync::Arc<FiniteField>, gamma: &Felt) -> Result<Mat2> {
    let gx = big.mul(gamma, &big.x());
    let c = |e: &Felt, i: usize| small.from_int(e.get(i).copied().unwrap_or(0) as u64);
    Mat2::new(
        small.clone(),
        [c(gamma, 0), c(gamma, 1), c(&gx, 0), c(&gx, 1)],
        true,
    )
}

/// Generators of the dihedral subgroup of order p + 1 (the nonsplit
/// torus normalizer): multiplication by a norm-one element beta of
/// order p + 1, and w = (mult by tau) . Frobenius with N(tau) = -1.
/// Both have determinant one, hence lie in PSL(2, p).
fn dplus_generators(p: u64) -> Result<Vec<Mat2>> {
    let big = make_field(p as u32, 2)?;
    let small = make_field(p as u32, 1)?;
    let mu = multiplicative_generator(&big);
    let beta = big.pow(&mu, p - 1);
    let tau = big.pow(&mu, (p - 1) / 2);
    let torus = mult_matrix(&big, &small, &beta)?;
    // Frobenius in the basis {1, xbar}: rows are the coordinates of
    // 1^p = 1 and xbar^p.
    let xp = big.frobenius(&big.x());
    let c = |e: &Felt, i: usize| small.from_int(e.get(i).copied().unwrap_or(0) as u64);
    let frob = Mat2::new(
        small.clone(),
        [small.one(), small.zero(), c(&xp, 0), c(&xp, 1)],
        true,
    )?;
    let w = mult_matrix(&big, &small, &tau)?.compose(&frob);
    Ok(alloc::vec![torus, w])
}

/// First pair (a, b) in enumeration order with |a| = 2, |b| = 3,
/// |ab| = `prod_order`, generating a subgroup of exactly `target`
/// elements. This pins down A4 (3, 12), S4 (4, 24), and A5 (5, 60).
fn small_subgroup_generators(
    group: &Enumerated<Mat2>,
    prod_order: usize,
    target: usize,
) -> Result<Vec<Mat2>> {
    for a in group.elements() {
        if group.element_order_of(a) != 2 {
            continue;
        }
        for b in group.elements() {
            if group.element_order_of(b) != 3 {
                continue;
            }
            if group.element_order_of(&a.compose(b)) != prod_order {
                continue;
            }
            let gens = alloc::vec![a.clone(), b.clone()];
            if let Ok(sub) = Group::new(group.identity().clone(), gens.clone()).enumerate(target) {
                if sub.order() == target {
                    return Ok(gens);
                }
            }
        }
    }
    Err(Error::Internal(format!(
        "no (2, 3, {prod_order}) pair generating a subgroup of order {target}"
    )))
}

fn family_generators(
    p: u64,
    family: Psl2Family,
    group: &Enumerated<Mat2>,
) -> Result<Vec<Mat2>> {
    let f = make_field(p as u32, 1)?;
    let g = multiplicative_generator(&f);
    match family {
        Psl2Family::Borel => {
            let lower = Mat2::from_ints(f.clone(), [1, 0, 1, 1], true)?;
            let torus = Mat2::new(
                f.clone(),
                [g.clone(), f.zero(), f.zero(), f.inv(&g)],
                true,
            )?;
            Ok(alloc::vec![lower, torus])
        }
        Psl2Family::DMinus => {
            let torus = Mat2::new(
                f.clone(),
                [g.clone(), f.zero(), f.zero(), f.inv(&g)],
                true,
            )?;
            let weyl = Mat2::from_ints(f, [0, 1, -1, 0], true)?;
            Ok(alloc::vec![torus, weyl])
        }
        Psl2Family::DPlus => dplus_generators(p),
        Psl2Family::A4 => small_subgroup_generators(group, 3, 12),
        Psl2Family::S4 => small_subgroup_generators(group, 4, 24),
        Psl2Family::A5 => small_subgroup_generators(group, 5, 60),
    }
}

pub fn build_psl2_action(p: u64, family: Psl2Family, cap: usize) -> Result<ConstructionResult> {
    if p < 5 || !is_prime(p) {
        return Err(Error::BadParameter(format!("p must be a prime >= 5, got {p}")));
    }
    if !family_admissible(p, family) {
        return Err(Error::BadParameter(format!(
            "family {} is not realized as a maximal-type subgroup for p = {p}",
            family.as_str()
        )));
    }
    let group = psl2_group(p, cap)?;
    let h_gens = family_generators(p, family, &group)?;
    let table = coset_action(&group, &h_gens, cap)?;
    let action = table.to_action(cap)?;
    let degree = action.degree();

    let h = enumerate_closure(group.identity(), &h_gens, cap)?;
    let h_perms = h
        .elements()
        .iter()
        .map(|e| table.perm_of(e))
        .collect::<Result<Vec<Permutation>>>()?;
    let h_order = h.order() as u64;
    let mut subgroups = BTreeMap::new();
    subgroups.insert(String::from("H"), h_perms);

    let mut metrics = BTreeMap::new();
    metrics.insert(String::from("omega"), Ratio::from_integer(degree as u64));
    metrics.insert(String::from("h-order"), Ratio::from_integer(h_order));

    Ok(ConstructionResult {
        name: format!("psl2-p{p}-{}", family.as_str()),
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
    use crate::group::closure_until;
    use crate::psl2::{psl2_analyze, stabilizer_kind};

    fn expected_h_order(p: u64, family: Psl2Family) -> u64 {
        stabilizer_kind(p, family).order(p)
    }

    #[test]
    fn degrees_match_the_index() {
        // (p, family, degree).
        let cases = [
            (7, Psl2Family::Borel, 8),
            (7, Psl2Family::S4, 7),
            (11, Psl2Family::A5, 11),
            (13, Psl2Family::DMinus, 91),
            (13, Psl2Family::DPlus, 78),
        ];
        for (p, family, degree) in cases {
            let r = build_psl2_action(p, family, 200_000).unwrap();
            assert_eq!(r.degree, degree, "p = {p}, family {}", family.as_str());
            assert_eq!(
                r.subgroup("H").unwrap().len() as u64,
                expected_h_order(p, family)
            );
            assert_eq!(
                r.group_order,
                p * (p * p - 1) / 2,
                "PSL(2, {p}) order"
            );
        }
    }

    #[test]
    fn dplus_generators_make_a_dihedral_group() {
        for p in [5u64, 7, 11, 13, 17, 19, 29] {
            let group = psl2_group(p, 200_000).unwrap();
            let gens = dplus_generators(p).unwrap();
            for g in &gens {
                assert!(group.contains(g), "generator outside PSL(2, {p})");
            }
            let h = enumerate_closure(group.identity(), &gens, 1000).unwrap();
            assert_eq!(h.order() as u64, p + 1, "p = {p}");
            // The torus part is cyclic of index 2 and w inverts it.
            let torus = &gens[0];
            let w = &gens[1];
            assert_eq!(h.element_order_of(w), 2);
            assert_eq!(
                w.compose(torus).compose(&w.inverse()),
                torus.inverse()
            );
        }
    }

    /// Exhaustive cross-check of the arithmetic analyzer against the
    /// built actions: over every 2-generated subgroup, the largest one
    /// whose elements all have fixed points matches the analyzer's
    /// maximum. Subgroups of these groups are at most 2-generated
    /// away from cyclic, and every subgroup in the catalogue is
    /// 2-generated, so this sweep is conclusive.
    #[test]
    fn analyzer_agrees_with_exhaustive_pair_sweep() {
        let cases = [
            (5u64, Psl2Family::DPlus),
            (7, Psl2Family::Borel),
            (7, Psl2Family::S4),
            (11, Psl2Family::A5),
            (11, Psl2Family::Borel),
            (13, Psl2Family::DMinus),
        ];
        for (p, family) in cases {
            let report = psl2_analyze(p, family).unwrap();
            let built = build_psl2_action(p, family, 200_000).unwrap();
            let action = built.action.as_ref().unwrap();
            let group = action.elements();
            let id = Permutation::identity(action.degree());
            let has_fix = |e: &Permutation| !e.fixed_points().is_empty();
            let mut best = 0usize;
            let fixing: Vec<&Permutation> =
                group.iter().filter(|e| has_fix(e)).collect();
            for (i, a) in fixing.iter().enumerate() {
                for b in &fixing[i..] {
                    let sub = closure_until(
                        &id,
                        &[(*a).clone(), (*b).clone()],
                        group.len(),
                        |e| !has_fix(e),
                    );
                    if let Some(sub) = sub {
                        best = best.max(sub.len());
                    }
                }
            }
            assert_eq!(
                best as u64, report.max_intersecting_subgroup_order,
                "p = {p}, family {}",
                family.as_str()
            );
        }
    }

    #[test]
    fn weak_failure_at_p5_is_real() {
        // In the degree-10 action of PSL(2, 5) on the cosets of the
        // dihedral subgroup of order 6, an A4 subgroup of order 12 is
        // intersecting, so the dihedral subgroup is not of maximum
        // size among intersecting subgroups.
        let built = build_psl2_action(5, Psl2Family::DPlus, 10_000).unwrap();
        assert_eq!(built.degree, 10);
        let group = psl2_group(5, 10_000).unwrap();
        let a4_gens = small_subgroup_generators(&group, 3, 12).unwrap();
        let table_rebuild = {
            let h_gens = dplus_generators(5).unwrap();
            coset_action(&group, &h_gens, 10_000).unwrap()
        };
        let a4 = enumerate_closure(group.identity(), &a4_gens, 100).unwrap();
        assert_eq!(a4.order(), 12);
        for e in a4.elements() {
            let perm = table_rebuild.perm_of(e).unwrap();
            assert!(!perm.fixed_points().is_empty());
        }
        let report = psl2_analyze(5, Psl2Family::DPlus).unwrap();
        assert!(!report.weak_ekr);
        assert_eq!(report.max_intersecting_subgroup_order, 12);
    }

    #[test]
    fn inadmissible_families_are_rejected() {
        assert!(build_psl2_action(7, Psl2Family::DPlus, 10_000).is_err());
        assert!(build_psl2_action(11, Psl2Family::DMinus, 10_000).is_err());
        assert!(build_psl2_action(7, Psl2Family::A5, 10_000).is_err());
        assert!(build_psl2_action(6, Psl2Family::Borel, 10_000).is_err());
    }
}
