//! The almost simple construction: T = PGL(2, q) with q = 2^f acting
//! on unordered pairs of projective points. The parabolic subgroup
//! S = {(1 a; 0 b)} of order q(q-1) is intersecting (in
//! characteristic 2 every element of S fixes a pair), giving
//! rho >= q/2 against the stabilizer order 2(q-1).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::action::Action;
use crate::error::{Error, Result};
use crate::field::{make_field, multiplicative_generator};
use crate::group::{enumerate_closure, Group};
use crate::matrix::Mat2;
use crate::perm::Permutation;
use crate::ratio::Ratio;

use super::ConstructionResult;

/// Lexicographic index of the unordered pair {i, j} (i < j) among all
/// pairs from n points.
fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// The permutation induced on unordered pairs by a point permutation.
fn pair_perm(base: &Permutation) -> Result<Permutation> {
    let n = base.degree();
    let mut images = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (base.image(i), base.image(j));
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            images.push(pair_index(n, lo, hi));
        }
    }
    Permutation::from_usize_images(&images)
}

pub fn build_asc(f: usize, cap: usize) -> Result<ConstructionResult> {
    if !(2..=4).contains(&f) {
        return Err(Error::BadParameter(format!("f = {f} out of range 2..=4")));
    }
    let field = make_field(2, f)?;
    let q = field.order();
    let gen = multiplicative_generator(&field);
    let one = field.one();
    let zero = field.zero();

    let unipotent = Mat2::new(
        field.clone(),
        [one.clone(), one.clone(), zero.clone(), one.clone()],
        true,
    )?;
    let torus = Mat2::new(
        field.clone(),
        [gen.clone(), zero.clone(), zero.clone(), one.clone()],
        true,
    )?;
    let weyl = Mat2::new(
        field.clone(),
        [zero.clone(), one.clone(), one.clone(), zero.clone()],
        true,
    )?;
    let identity = Mat2::identity(field.clone(), true);
    let t_group = Group::new(identity.clone(), alloc::vec![unipotent.clone(), torus, weyl])
        .enumerate(cap)?;

    // The action on unordered pairs of projective points.
    let gen_pair_perms = t_group
        .generators()
        .iter()
        .map(|m| pair_perm(&m.projective_perm()))
        .collect::<Result<Vec<_>>>()?;
    let npairs = (q as usize + 1) * q as usize / 2;
    let action = Action::from_perm_generators(npairs, gen_pair_perms, cap)?;

    // S = {(1 a; 0 b)}: unipotent shifts and the diagonal torus.
    let s_torus = Mat2::new(
        field.clone(),
        [one.clone(), zero.clone(), zero.clone(), gen],
        true,
    )?;
    let s_members = enumerate_closure(&identity, &alloc::vec![unipotent, s_torus], cap)?;
    let s_perms = s_members
        .elements()
        .iter()
        .map(|m| pair_perm(&m.projective_perm()))
        .collect::<Result<Vec<Permutation>>>()?;

    // Stabilizer of alpha = {[1:0], [0:1]} = pair index 0.
    let t_alpha = action.point_stabilizer(0)?;

    let mut subgroups = BTreeMap::new();
    subgroups.insert(String::from("S"), s_perms);
    subgroups.insert(String::from("T_alpha"), t_alpha);

    let mut metrics = BTreeMap::new();
    metrics.insert(String::from("delta"), Ratio::from_integer(npairs as u64));
    metrics.insert(String::from("s-order"), Ratio::from_integer(q * (q - 1)));
    metrics.insert(
        String::from("t-alpha-order"),
        Ratio::from_integer(2 * (q - 1)),
    );
    metrics.insert(String::from("rho-lower-bound"), Ratio::new(q, 2));

    Ok(ConstructionResult {
        name: format!("asc-q{q}"),
        degree: npairs,
        group_order: action.order() as u64,
        action: Some(action),
        subgroups,
        metrics,
        structural: None,
    })
}
