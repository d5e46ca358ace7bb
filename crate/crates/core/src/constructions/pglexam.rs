//! Sharply transitive transversals in PGL(2, q), q odd: the dihedral
//! subgroup H of order 2(q + 1) has a transversal
//! C = {(1 b; 0 a) : a in a union of torsion-shifted odd-order cosets,
//! b in F_q} that is sharply transitive on the q(q - 1)/2 cosets of H.
//! When q = 3 mod 4 the whole transversal lands inside PSL(2, q),
//! where H cuts down to a dihedral subgroup of order q + 1; the
//! second returned build covers that case.
//!
//! All matrices live over F_{q^2} with entries confined to the
//! subfield of order q, which keeps the torsion element beta (of
//! order 2^t (q + 1), where 2^t exactly divides q - 1) and the group
//! itself in one representation.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::action::CosetTable;
use crate::error::{Error, Result};
use crate::field::{element_of_order, Felt};
use crate::group::{enumerate_closure, Group};
use crate::matrix::Mat2;
use crate::perm::Permutation;
use crate::ratio::Ratio;

use super::{prime_power, ConstructionResult};

pub fn build_pglexam_transversal(
    q: u64,
    cap: usize,
) -> Result<(ConstructionResult, Option<ConstructionResult>)> {
    let Some((p, e)) = prime_power(q) else {
        return Err(Error::BadParameter(format!("q = {q} is not a prime power")));
    };
    if p == 2 || q < 5 || q > 13 {
        return Err(Error::BadParameter(format!(
            "q = {q} out of range: odd prime powers 5..=13"
        )));
    }
    let field = crate::field::make_field(p as u32, 2 * e as usize)?;
    let t = (q - 1).trailing_zeros();

    // w generates the subfield multiplicative group of order q - 1.
    let mu = crate::field::multiplicative_generator(&field);
    let w = field.pow(&mu, q + 1);
    let one = field.one();
    let zero = field.zero();

    let mat = |entries: [&Felt; 4]| -> Result<Mat2> {
        Mat2::new(
            field.clone(),
            [
                entries[0].clone(),
                entries[1].clone(),
                entries[2].clone(),
                entries[3].clone(),
            ],
            true,
        )
    };

    // PGL(2, q) with subfield entries.
    let unipotent = mat([&one, &one, &zero, &one])?;
    let torus = mat([&w, &zero, &zero, &one])?;
    let weyl = mat([&zero, &one, &one, &zero])?;
    let identity = Mat2::identity(field.clone(), true);
    let pgl = Group::new(
        identity.clone(),
        alloc::vec![unipotent.clone(), torus, weyl],
    )
    .enumerate(cap)?;
    debug_assert_eq!(pgl.order() as u64, q * (q - 1) * (q + 1));

    // beta of order 2^t (q + 1); delta = beta^(q+1) has order 2^t and
    // lies in the subfield.
    let beta = element_of_order(&field, (1u64 << t) * (q + 1))?;
    let delta = field.pow(&beta, q + 1);
    // The conjugate of beta over the subfield is beta^q (q = p^e, so
    // this is the e-th power of the Frobenius, not the Frobenius
    // itself when e > 1).
    let trace = field.add(&beta, &field.pow(&beta, q));

    // H = <(0 1; delta 0), (0 1; -delta trace)>, dihedral of order
    // 2(q + 1): the second generator has eigenvalues beta, beta^q and
    // projective order q + 1; the first inverts it.
    let h_gens = alloc::vec![
        mat([&zero, &one, &delta, &zero])?,
        mat([&zero, &one, &field.neg(&delta), &trace])?,
    ];
    let h = enumerate_closure(&identity, &h_gens, cap)?;

    // M: the odd-order subgroup of index 2^t in the subfield group.
    // The transversal scalars are the union of delta^i M over
    // 0 <= i < 2^(t-1), exactly half the subfield group.
    let m_gen = field.pow(&w, 1u64 << t);
    let m_size = (q - 1) >> t;
    let mut scalars = Vec::new();
    for i in 0..(1u64 << (t - 1)) {
        let shift = field.pow(&delta, i);
        let mut a = shift.clone();
        for _ in 0..m_size {
            a = field.mul(&a, &m_gen);
            scalars.push(a.clone());
        }
        debug_assert_eq!(a, shift);
    }
    let subfield = field.subfield_elements(e as usize)?;
    let mut transversal = Vec::new();
    for a in &scalars {
        for b in &subfield {
            transversal.push(mat([&one, b, &zero, a])?);
        }
    }

    let table = CosetTable::build(&identity, pgl.generators(), h.elements(), cap)?;
    let action = table.to_action(cap)?;
    let degree = action.degree();

    let to_perms = |set: &[Mat2], tab: &CosetTable<Mat2>| -> Result<Vec<Permutation>> {
        set.iter().map(|m| tab.perm_of(m)).collect()
    };

    let mut subgroups = BTreeMap::new();
    subgroups.insert(String::from("H"), to_perms(h.elements(), &table)?);
    subgroups.insert(String::from("C"), to_perms(&transversal, &table)?);

    let mut metrics = BTreeMap::new();
    metrics.insert(String::from("omega"), Ratio::from_integer(q * (q - 1) / 2));
    metrics.insert(String::from("h-order"), Ratio::from_integer(2 * (q + 1)));
    metrics.insert(String::from("c-size"), Ratio::from_integer(q * (q - 1) / 2));
    metrics.insert(String::from("two-part"), Ratio::from_integer(1 << t));

    let pgl_result = ConstructionResult {
        name: format!("pglexam-q{q}"),
        degree,
        group_order: pgl.order() as u64,
        action: Some(action),
        subgroups,
        metrics,
        structural: None,
    };

    // For q = 3 mod 4 (t = 1) every transversal scalar is a square,
    // so the transversal lies in PSL(2, q) and is sharply transitive
    // on the cosets of H intersected with PSL.
    if q % 4 != 3 {
        return Ok((pgl_result, None));
    }
    let lower = mat([&one, &zero, &one, &one])?;
    let psl = Group::new(identity.clone(), alloc::vec![unipotent, lower]).enumerate(cap)?;
    debug_assert_eq!(psl.order() as u64, q * (q - 1) * (q + 1) / 2);
    let h_small: Vec<Mat2> = h
        .elements()
        .iter()
        .filter(|m| psl.contains(m))
        .cloned()
        .collect();
    let table2 = CosetTable::build(&identity, psl.generators(), &h_small, cap)?;
    let action2 = table2.to_action(cap)?;
    let degree2 = action2.degree();

    let mut subgroups2 = BTreeMap::new();
    subgroups2.insert(String::from("H"), to_perms(&h_small, &table2)?);
    subgroups2.insert(String::from("C"), to_perms(&transversal, &table2)?);

    let mut metrics2 = BTreeMap::new();
    metrics2.insert(String::from("omega"), Ratio::from_integer(q * (q - 1) / 2));
    metrics2.insert(String::from("h-order"), Ratio::from_integer(q + 1));
    metrics2.insert(String::from("c-size"), Ratio::from_integer(q * (q - 1) / 2));

    let psl_result = ConstructionResult {
        name: format!("pglexam-q{q}-psl"),
        degree: degree2,
        group_order: psl.order() as u64,
        action: Some(action2),
        subgroups: subgroups2,
        metrics: metrics2,
        structural: None,
    };
    Ok((pgl_result, Some(psl_result)))
}
