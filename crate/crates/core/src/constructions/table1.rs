//! The five affine groups with intersecting subgroups K satisfying
//! |K|/|H| > sqrt(|Omega|): two over F_5^2 with SL(2,3)-type point
//! groups, two over F_29^2 with SL(2,5)-type point groups (built
//! structurally, never enumerating the ambient group), and one over
//! F_3^3 with point group A_4 acting on a quotient space.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::action::{coset_action, CosetTable};
use crate::affine::{AffineElement, MAX_DIM};
use crate::error::{Error, Result};
use crate::field::make_field;
use crate::group::{enumerate_closure, Enumerated, Group};
use crate::matrix::Mat2;
use crate::perm::Permutation;
use crate::ratio::Ratio;

use super::{ConstructionResult, StructuralCosets};

/// Smallest residue of exact multiplicative order m mod p.
fn element_of_mult_order(p: u64, m: u64) -> Result<u64> {
    'cand: for g in 2..p {
        let mut x = g;
        let mut k = 1;
        while x != 1 {
            x = x * g % p;
            k += 1;
            if k > m {
                continue 'cand;
            }
        }
        if k == m {
            return Ok(g);
        }
    }
    Err(Error::BadParameter(format!("no element of order {m} mod {p}")))
}

fn scalar(e: &crate::field::Felt) -> u32 {
    e.first().copied().unwrap_or(0)
}

/// Linear affine element from a 2x2 matrix over a prime field.
fn linear2(p: u32, m: &Mat2) -> Result<AffineElement> {
    let e = m.entries();
    let mut rows = [[0u32; MAX_DIM]; MAX_DIM];
    rows[0][0] = scalar(&e[0]);
    rows[0][1] = scalar(&e[1]);
    rows[1][0] = scalar(&e[2]);
    rows[1][1] = scalar(&e[3]);
    AffineElement::linear(p, 2, rows)
}

fn translation2(p: u32, i: usize) -> Result<AffineElement> {
    let mut v = [0u32; MAX_DIM];
    v[i] = 1;
    AffineElement::translation(p, 2, v)
}

/// SL(2, p) enumerated from its two standard generators.
fn sl2(p: u32, cap: usize) -> Result<Enumerated<Mat2>> {
    let f = make_field(p, 1)?;
    let a = Mat2::from_ints(f.clone(), [1, 1, 0, 1], false)?;
    let b = Mat2::from_ints(f.clone(), [0, 1, -1, 0], false)?;
    Group::new(Mat2::identity(f, false), alloc::vec![a, b]).enumerate(cap)
}

/// First element t (in enumeration order) of the given order such
/// that <i, j, t> has exactly `target` elements.
fn completion(
    ambient: &Enumerated<Mat2>,
    i: &Mat2,
    j: &Mat2,
    order: usize,
    target: usize,
) -> Result<Mat2> {
    for t in ambient.elements() {
        if ambient.element_order_of(t) != order {
            continue;
        }
        let gens = alloc::vec![i.clone(), j.clone(), t.clone()];
        if let Ok(sub) = Group::new(ambient.identity().clone(), gens).enumerate(target) {
            if sub.order() == target {
                return Ok(t.clone());
            }
        }
    }
    Err(Error::Internal(format!(
        "no order-{order} completion to a subgroup of order {target}"
    )))
}

/// The quaternion pair over F_p: i = (0 1; -1 0) and j = diag(eta, -eta)
/// for eta a fourth root of unity.
fn quaternion_pair(p: u64) -> Result<(Mat2, Mat2)> {
    let f = make_field(p as u32, 1)?;
    let eta = element_of_mult_order(p, 4)? as i64;
    let i = Mat2::from_ints(f.clone(), [0, 1, -1, 0], false)?;
    let j = Mat2::from_ints(f, [eta, 0, 0, -eta], false)?;
    Ok((i, j))
}

fn small_row(
    name: &str,
    p: u32,
    g_linears: Vec<AffineElement>,
    h_linears: Vec<AffineElement>,
    k_linears: Vec<AffineElement>,
    h_translations: usize,
    cap: usize,
    claimed: [u64; 4],
) -> Result<ConstructionResult> {
    let dim = 2;
    let identity = AffineElement::identity(p, dim);
    let mut g_gens: Vec<AffineElement> =
        (0..dim).map(|i| translation2(p, i)).collect::<Result<_>>()?;
    g_gens.extend(g_linears);
    let group = Group::new(identity.clone(), g_gens).enumerate(cap)?;

    let mut h_gens: Vec<AffineElement> = (0..h_translations)
        .map(|i| translation2(p, i))
        .collect::<Result<_>>()?;
    h_gens.extend(h_linears);
    let mut k_gens: Vec<AffineElement> =
        (0..dim).map(|i| translation2(p, i)).collect::<Result<_>>()?;
    k_gens.extend(k_linears);

    let table = coset_action(&group, &h_gens, cap)?;
    let action = table.to_action(cap)?;
    let degree = action.degree();

    let mut subgroups = BTreeMap::new();
    for (role, gens) in [("H", h_gens), ("K", k_gens)] {
        let members = enumerate_closure(&identity, &gens, cap)?;
        let perms = members
            .elements()
            .iter()
            .map(|e| table.perm_of(e))
            .collect::<Result<Vec<Permutation>>>()?;
        subgroups.insert(String::from(role), perms);
    }

    let [omega, h_order, k_order, ratio] = claimed;
    let mut metrics = BTreeMap::new();
    metrics.insert(String::from("omega"), Ratio::from_integer(omega));
    metrics.insert(String::from("h-order"), Ratio::from_integer(h_order));
    metrics.insert(String::from("k-order"), Ratio::from_integer(k_order));
    metrics.insert(String::from("k-over-h"), Ratio::from_integer(ratio));

    Ok(ConstructionResult {
        name: String::from(name),
        degree,
        group_order: group.order() as u64,
        action: Some(action),
        subgroups,
        metrics,
        structural: None,
    })
}

/// Rows over F_29^2: the ambient group (order 706,440 or 1,412,880)
/// is never enumerated; only H, K, and the degree-870 coset table.
fn structural_row(name: &str, zeta_order: u64, cap: usize) -> Result<ConstructionResult> {
    let p = 29u32;
    let ambient = sl2(p, 30_000)?;
    let (qi, qj) = quaternion_pair(29)?;
    let t = completion(&ambient, &qi, &qj, 5, 120)?;
    let zeta = element_of_mult_order(29, zeta_order)? as i64;
    let f = make_field(p, 1)?;
    let z = Mat2::from_ints(f, [zeta, 0, 0, zeta], false)?;

    let identity = AffineElement::identity(p, 2);
    let e0 = translation2(p, 0)?;
    let e1 = translation2(p, 1)?;
    let li = linear2(p, &qi)?;
    let lj = linear2(p, &qj)?;
    let lt = linear2(p, &t)?;
    let lz = linear2(p, &z)?;

    let g_gens = alloc::vec![e0.clone(), e1.clone(), li.clone(), lj.clone(), lt, lz.clone()];
    let h_gens = alloc::vec![e0.clone(), lj.clone(), lz.clone()];
    let k_gens = alloc::vec![e0, e1, li, lj, lz];

    let h = enumerate_closure(&identity, &h_gens, cap)?;
    let k = enumerate_closure(&identity, &k_gens, cap)?;
    let table = CosetTable::build(&identity, &g_gens, h.elements(), cap)?;
    let degree = table.degree();

    // |G| = 29^2 * |SL(2,5)-type point group extended by the scalar|.
    let point_order = 120 * zeta_order / if zeta_order % 2 == 0 { 2 } else { 1 };
    let group_order = 841 * point_order;

    let mut metrics = BTreeMap::new();
    metrics.insert(String::from("omega"), Ratio::from_integer(870));
    metrics.insert(String::from("h-order"), Ratio::from_integer(h.order() as u64));
    metrics.insert(String::from("k-order"), Ratio::from_integer(k.order() as u64));
    metrics.insert(String::from("k-over-h"), Ratio::from_integer(58));

    let mut structural_subgroups = BTreeMap::new();
    structural_subgroups.insert(String::from("H"), h.elements().to_vec());
    structural_subgroups.insert(String::from("K"), k.elements().to_vec());

    Ok(ConstructionResult {
        name: String::from(name),
        degree,
        group_order,
        action: None,
        subgroups: BTreeMap::new(),
        metrics,
        structural: Some(StructuralCosets {
            table,
            subgroups: structural_subgroups,
        }),
    })
}

/// Row over F_3^3: A_4 acting on the quotient of its natural
/// permutation module, with basis f1, f2, f3 and f4 = -(f1+f2+f3).
fn quotient_row(cap: usize) -> Result<ConstructionResult> {
    let p = 3u32;
    let dim = 3;
    // sigma . (sum a_i f_i) = sum a_i f_sigma(i); row i of the matrix
    // is the coordinate vector of f_sigma(i).
    let perm_matrix = |images: [usize; 3]| -> Result<AffineElement> {
        let mut m = [[0u32; MAX_DIM]; MAX_DIM];
        for (i, &im) in images.iter().enumerate() {
            if im < 3 {
                m[i][im] = 1;
            } else {
                // f4 = -(f1 + f2 + f3).
                m[i] = [2, 2, 2, 0];
            }
        }
        AffineElement::linear(p, dim, m)
    };
    // (1 2)(3 4), (1 2 3), (1 3)(2 4) in zero-based image form.
    let m1 = perm_matrix([1, 0, 3])?;
    let m2 = perm_matrix([1, 2, 0])?;
    let m3 = perm_matrix([2, 3, 0])?;

    let tr = |i: usize| -> Result<AffineElement> {
        let mut v = [0u32; MAX_DIM];
        v[i] = 1;
        AffineElement::translation(p, dim, v)
    };
    let identity = AffineElement::identity(p, dim);
    let g_gens = alloc::vec![tr(0)?, tr(1)?, tr(2)?, m1.clone(), m2];
    let h_gens = alloc::vec![tr(0)?, tr(1)?, m1.clone()];
    let k_gens = alloc::vec![tr(0)?, tr(1)?, tr(2)?, m1, m3];

    let group = Group::new(identity.clone(), g_gens).enumerate(cap)?;
    let table = coset_action(&group, &h_gens, cap)?;
    let action = table.to_action(cap)?;
    let degree = action.degree();

    let mut subgroups = BTreeMap::new();
    for (role, gens) in [("H", h_gens), ("K", k_gens)] {
        let members = enumerate_closure(&identity, &gens, cap)?;
        let perms = members
            .elements()
            .iter()
            .map(|e| table.perm_of(e))
            .collect::<Result<Vec<Permutation>>>()?;
        subgroups.insert(String::from(role), perms);
    }

    let mut metrics = BTreeMap::new();
    metrics.insert(String::from("omega"), Ratio::from_integer(18));
    metrics.insert(String::from("h-order"), Ratio::from_integer(18));
    metrics.insert(String::from("k-order"), Ratio::from_integer(108));
    metrics.insert(String::from("k-over-h"), Ratio::from_integer(6));

    Ok(ConstructionResult {
        name: String::from("table1-row5"),
        degree,
        group_order: group.order() as u64,
        action: Some(action),
        subgroups,
        metrics,
        structural: None,
    })
}

pub fn build_table1(row: usize, cap: usize) -> Result<ConstructionResult> {
    match row {
        1 | 2 => {
            let ambient = sl2(5, 1000)?;
            let (qi, qj) = quaternion_pair(5)?;
            let t = completion(&ambient, &qi, &qj, 3, 24)?;
            let li = linear2(5, &qi)?;
            let lj = linear2(5, &qj)?;
            let lt = linear2(5, &t)?;
            if row == 1 {
                small_row(
                    "table1-row1",
                    5,
                    alloc::vec![li.clone(), lj.clone(), lt],
                    alloc::vec![lj.clone()],
                    alloc::vec![li, lj],
                    1,
                    cap,
                    [30, 20, 200, 10],
                )
            } else {
                let f = make_field(5, 1)?;
                let b = Mat2::from_ints(f, [1, 0, 0, -1], false)?;
                let lb = linear2(5, &b)?;
                small_row(
                    "table1-row2",
                    5,
                    alloc::vec![li.clone(), lj.clone(), lt, lb.clone()],
                    alloc::vec![lj.clone(), lb.clone()],
                    alloc::vec![li, lj, lb],
                    1,
                    cap,
                    [30, 40, 400, 10],
                )
            }
        }
        3 => structural_row("table1-row3", 7, cap),
        4 => structural_row("table1-row4", 28, cap),
        5 => quotient_row(cap),
        _ => Err(Error::BadParameter(format!("row {row} out of range 1..=5"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::is_intersecting_subgroup;

    #[test]
    fn row1_orders_and_regularity() {
        let r = build_table1(1, 100_000).unwrap();
        assert_eq!(r.group_order, 600);
        assert_eq!(r.degree, 30);
        assert_eq!(r.subgroup("H").unwrap().len(), 20);
        let k = r.subgroup("K").unwrap();
        assert_eq!(k.len(), 200);
        assert!(is_intersecting_subgroup(k));
        assert_eq!(r.metric("k-over-h"), Some(Ratio::from_integer(10)));
        // The SL(2,3)-type point group acts regularly on the 24
        // nonzero vectors: only the identity fixes (1, 0).
        let ambient = sl2(5, 1000).unwrap();
        let (qi, qj) = quaternion_pair(5).unwrap();
        let t = completion(&ambient, &qi, &qj, 3, 24).unwrap();
        let s = Group::new(ambient.identity().clone(), alloc::vec![qi, qj, t])
            .enumerate(100)
            .unwrap();
        assert_eq!(s.order(), 24);
        let f = make_field(5, 1).unwrap();
        let one = f.one();
        let zero = f.zero();
        let fixing = s
            .elements()
            .iter()
            .filter(|m| m.apply_row(&one, &zero) == (one.clone(), zero.clone()))
            .count();
        assert_eq!(fixing, 1);
    }

    #[test]
    fn row2_orders() {
        let r = build_table1(2, 100_000).unwrap();
        assert_eq!(r.group_order, 1200);
        assert_eq!(r.degree, 30);
        assert_eq!(r.subgroup("H").unwrap().len(), 40);
        let k = r.subgroup("K").unwrap();
        assert_eq!(k.len(), 400);
        assert!(is_intersecting_subgroup(k));
    }

    #[test]
    fn row3_structural() {
        let r = build_table1(3, 200_000).unwrap();
        assert_eq!(r.degree, 870);
        assert_eq!(r.group_order, 706_440);
        let s = r.structural.as_ref().unwrap();
        assert_eq!(s.subgroups["H"].len(), 812);
        assert_eq!(s.subgroups["K"].len(), 47_096);
        assert_eq!(s.table.subgroup_order(), 812);
        // Spot-check the fixed-point property on a slice of K; the
        // full sweep runs in the acceptance suite.
        for e in s.subgroups["K"].iter().step_by(500) {
            assert!(s.table.has_fixed_point(e));
        }
    }

    #[test]
    fn row4_structural() {
        let r = build_table1(4, 300_000).unwrap();
        assert_eq!(r.degree, 870);
        assert_eq!(r.group_order, 1_412_880);
        let s = r.structural.as_ref().unwrap();
        assert_eq!(s.subgroups["H"].len(), 1624);
        assert_eq!(s.subgroups["K"].len(), 94_192);
        for e in s.subgroups["K"].iter().step_by(1000) {
            assert!(s.table.has_fixed_point(e));
        }
    }

    #[test]
    fn row5_quotient_space() {
        let r = build_table1(5, 100_000).unwrap();
        assert_eq!(r.group_order, 324);
        assert_eq!(r.degree, 18);
        assert_eq!(r.subgroup("H").unwrap().len(), 18);
        let k = r.subgroup("K").unwrap();
        assert_eq!(k.len(), 108);
        assert!(is_intersecting_subgroup(k));
        assert_eq!(r.metric("k-over-h"), Some(Ratio::from_integer(6)));
    }

    #[test]
    fn row_out_of_range() {
        assert!(build_table1(0, 1000).is_err());
        assert!(build_table1(6, 1000).is_err());
    }
}
