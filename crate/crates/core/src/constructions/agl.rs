//! The affine example: G = AGL(d, p) on the cosets of the dihedral
//! subgroup H = <x, y> of order 2p, where x = -I is the central
//! involution and y is the translation-twisted involution (e1, -I).
//! The subgroup S = V:<x> of order 2p^d is intersecting, so the ratio
//! |S|/|H| = p^(d-1) grows without bound in d.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::action::coset_action;
use crate::affine::{AffineElement, MAX_DIM};
use crate::error::{Error, Result};
use crate::group::{enumerate_closure, Group};
use crate::perm::Permutation;
use crate::ratio::Ratio;

use super::{is_prime, ConstructionResult};

fn unit_vector(i: usize) -> [u32; MAX_DIM] {
    let mut v = [0u32; MAX_DIM];
    v[i] = 1;
    v
}

/// Generators of GL(d, p): a primitive scaling of the first
/// coordinate, the first elementary transvection, and a d-cycle of
/// the coordinates. Together these produce all elementary matrices
/// and hence the full group.
fn gl_generators(p: u64, d: usize) -> Result<Vec<AffineElement>> {
    let omega = primitive_root(p);
    let mut out = Vec::new();
    let mut scale = [[0u32; MAX_DIM]; MAX_DIM];
    for i in 0..d {
        scale[i][i] = 1;
    }
    scale[0][0] = omega as u32;
    out.push(AffineElement::linear(p as u32, d, scale)?);
    if d >= 2 {
        let mut transvection = [[0u32; MAX_DIM]; MAX_DIM];
        for i in 0..d {
            transvection[i][i] = 1;
        }
        transvection[0][1] = 1;
        out.push(AffineElement::linear(p as u32, d, transvection)?);
        let mut cycle = [[0u32; MAX_DIM]; MAX_DIM];
        for i in 0..d {
            cycle[i][(i + 1) % d] = 1;
        }
        out.push(AffineElement::linear(p as u32, d, cycle)?);
    }
    Ok(out)
}

fn primitive_root(p: u64) -> u64 {
    // Smallest generator of the multiplicative group mod p.
    'next: for g in 2..p {
        let mut seen = 1u64;
        let mut x = g;
        while x != 1 {
            x = x * g % p;
            seen += 1;
        }
        if seen == p - 1 {
            return g;
        }
        continue 'next;
    }
    1
}

pub fn build_agl_example(p: u64, d: usize, cap: usize) -> Result<ConstructionResult> {
    if !is_prime(p) || p == 2 {
        return Err(Error::BadParameter(format!("p = {p} must be an odd prime")));
    }
    if !(2..=MAX_DIM).contains(&d) {
        return Err(Error::BadParameter(format!(
            "d = {d} out of range 2..={MAX_DIM}"
        )));
    }
    let pc = p as u32;
    let mut neg_i = [[0u32; MAX_DIM]; MAX_DIM];
    for i in 0..d {
        neg_i[i][i] = pc - 1;
    }
    // x = -I; y = (e1, -I); both involutions, <x, y> dihedral of
    // order 2p since xy is the translation by e1.
    let x = AffineElement::linear(pc, d, neg_i)?;
    let y = AffineElement::new(pc, d, unit_vector(0), neg_i)?;

    let mut g_gens: Vec<AffineElement> = (0..d)
        .map(|i| AffineElement::translation(pc, d, unit_vector(i)))
        .collect::<Result<Vec<_>>>()?;
    g_gens.extend(gl_generators(p, d)?);
    let identity = AffineElement::identity(pc, d);
    let group = Group::new(identity.clone(), g_gens).enumerate(cap)?;

    let h_gens = alloc::vec![x.clone(), y];
    let mut s_gens: Vec<AffineElement> = (0..d)
        .map(|i| AffineElement::translation(pc, d, unit_vector(i)))
        .collect::<Result<Vec<_>>>()?;
    s_gens.push(x);

    let table = coset_action(&group, &h_gens, cap)?;
    let action = table.to_action(cap)?;
    let degree = action.degree();

    let mut subgroups = BTreeMap::new();
    for (role, gens) in [("H", h_gens), ("S", s_gens)] {
        let members = enumerate_closure(&identity, &gens, cap)?;
        let perms = members
            .elements()
            .iter()
            .map(|e| table.perm_of(e))
            .collect::<Result<Vec<Permutation>>>()?;
        subgroups.insert(String::from(role), perms);
    }

    let pd = p.pow(d as u32);
    let mut metrics = BTreeMap::new();
    metrics.insert(
        String::from("omega"),
        Ratio::from_integer(group.order() as u64 / (2 * p)),
    );
    metrics.insert(String::from("h-order"), Ratio::from_integer(2 * p));
    metrics.insert(String::from("s-order"), Ratio::from_integer(2 * pd));
    metrics.insert(String::from("s-over-h"), Ratio::new(pd, p));

    Ok(ConstructionResult {
        name: format!("agl-p{p}-d{d}"),
        degree,
        group_order: group.order() as u64,
        action: Some(action),
        subgroups,
        metrics,
        structural: None,
    })
}
