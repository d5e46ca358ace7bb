//! Stock permutation actions used by the analyze command, the verify
//! manifest, and the acceptance suite: symmetric groups, affine lines,
//! linear groups on vectors and projective points, and small 2-groups.

use ekr_core::action::Action;
use ekr_core::affine::Affine1;
use ekr_core::field::{make_field, multiplicative_generator, Felt};
use ekr_core::group::enumerate_closure;
use ekr_core::matrix::Mat2;
use ekr_core::{Error as CoreError, Permutation};

use crate::CliError;

/// Sym(n) in its natural action, from a transposition and an n-cycle.
pub fn symmetric_action(n: usize, cap: usize) -> Result<Action, CliError> {
    if n < 2 {
        return Err(CliError::Invalid(format!("symmetric degree {n} < 2")));
    }
    let mut gens = vec![transposition(n, 0, 1)?];
    if n > 2 {
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        gens.push(Permutation::from_usize_images(&cycle).map_err(CoreError::from)?);
    }
    Ok(Action::from_perm_generators(n, gens, cap)?)
}

fn transposition(n: usize, a: usize, b: usize) -> Result<Permutation, CliError> {
    let mut images: Vec<usize> = (0..n).collect();
    images.swap(a, b);
    Ok(Permutation::from_usize_images(&images).map_err(CoreError::from)?)
}

/// The dihedral group of order 2n on n points.
pub fn dihedral_action(n: usize, cap: usize) -> Result<Action, CliError> {
    let rotation: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    let gens = vec![
        Permutation::from_usize_images(&rotation).map_err(CoreError::from)?,
        Permutation::from_usize_images(&reflection).map_err(CoreError::from)?,
    ];
    Ok(Action::from_perm_generators(n, gens, cap)?)
}

/// AGL(1, p^k) = F : F^× acting naturally on the p^k field elements.
pub fn agl1_action(p: u32, k: usize, cap: usize) -> Result<Action, CliError> {
    let field = make_field(p, k)?;
    let gen = multiplicative_generator(&field);
    let shift = Affine1::new(field.clone(), field.one(), field.one())?;
    let scale = Affine1::new(field.clone(), gen, field.zero())?;
    let points = field.elements();
    let index_of = |e: &Felt| -> usize {
        points
            .iter()
            .position(|x| x == e)
            .expect("image stays in the field")
    };
    let to_perm = |a: &Affine1| -> Result<Permutation, CliError> {
        let images: Vec<usize> = points.iter().map(|x| index_of(&a.apply(x))).collect();
        Ok(Permutation::from_usize_images(&images).map_err(CoreError::from)?)
    };
    let gens = vec![to_perm(&shift)?, to_perm(&scale)?];
    Ok(Action::from_perm_generators(points.len(), gens, cap)?)
}

/// SL(2, 3) acting on the 8 nonzero vectors of F_3².
pub fn sl23_on_vectors(cap: usize) -> Result<Action, CliError> {
    let field = make_field(3, 1)?;
    let a = Mat2::from_ints(field.clone(), [1, 1, 0, 1], false)?;
    let b = Mat2::from_ints(field.clone(), [0, 1, -1, 0], false)?;
    // The 8 nonzero vectors (x, y), x major.
    let points: Vec<(Felt, Felt)> = field
        .elements()
        .iter()
        .flat_map(|x| field.elements().into_iter().map(move |y| (x.clone(), y)))
        .filter(|(x, y)| !field.is_zero(x) || !field.is_zero(y))
        .collect();
    let to_perm = |m: &Mat2| -> Result<Permutation, CliError> {
        let images: Vec<usize> = points
            .iter()
            .map(|(x, y)| {
                let im = m.apply_row(x, y);
                points
                    .iter()
                    .position(|p| *p == im)
                    .expect("invertible matrix preserves nonzero vectors")
            })
            .collect();
        Ok(Permutation::from_usize_images(&images).map_err(CoreError::from)?)
    };
    let gens = vec![to_perm(&a)?, to_perm(&b)?];
    Ok(Action::from_perm_generators(points.len(), gens, cap)?)
}

/// PSL(2, q) (equal to PGL for even q) on the q+1 projective points.
pub fn psl2_line_action(p: u32, k: usize, cap: usize) -> Result<Action, CliError> {
    let field = make_field(p, k)?;
    let a = Mat2::from_ints(field.clone(), [1, 1, 0, 1], true)?;
    let b = Mat2::from_ints(field.clone(), [0, 1, -1, 0], true)?;
    // Transvection by a field generator, needed when k > 1: the two
    // standard generators alone only reach the prime-field subgroup.
    let g = multiplicative_generator(&field);
    let c = Mat2::new(
        field.clone(),
        [field.one(), g, field.zero(), field.one()],
        true,
    )?;
    let degree = field.order() as usize + 1;
    let gens = vec![a.projective_perm(), b.projective_perm(), c.projective_perm()];
    Ok(Action::from_perm_generators(degree, gens, cap)?)
}

/// Z_4 × Z_2 acting regularly on its 8 elements (point = 2i + j).
pub fn z4xz2_regular(cap: usize) -> Result<Action, CliError> {
    let a: Vec<usize> = (0..8).map(|x| (x + 2) % 8).collect();
    let b: Vec<usize> = (0..8).map(|x| x ^ 1).collect();
    let gens = vec![
        Permutation::from_usize_images(&a).map_err(CoreError::from)?,
        Permutation::from_usize_images(&b).map_err(CoreError::from)?,
    ];
    Ok(Action::from_perm_generators(8, gens, cap)?)
}

/// The iterated imprimitive wreath product of cyclic groups of order
/// two on 2^k points (the Sylow 2-subgroup of the symmetric group),
/// generated by the block swaps at every level of the binary tree.
pub fn iterated_wreath2(k: u32, cap: usize) -> Result<Action, CliError> {
    let n = 1usize << k;
    let mut gens = Vec::new();
    let mut block = 1usize;
    while block < n {
        // Swap the first two blocks of the current size.
        let images: Vec<usize> = (0..n)
            .map(|i| if i < 2 * block { i ^ block } else { i })
            .collect();
        gens.push(Permutation::from_usize_images(&images).map_err(CoreError::from)?);
        block *= 2;
    }
    Ok(Action::from_perm_generators(n, gens, cap)?)
}

/// Q_8-style generators inside SL(2, 3): the quaternion pair i, j as
/// matrices, realized on the 8 nonzero vectors.
pub fn sl23_quaternion_subgroup(action: &Action, cap: usize) -> Result<Vec<Permutation>, CliError> {
    // The Sylow 2-subgroup of SL(2, 3) is Q_8; extract it from the
    // realized action.
    Ok(ekr_core::analysis::sylow_subgroup(action, 2, cap)?)
}

/// Permutation closure helper re-exported for tests and claims.
pub fn closure(identity: &Permutation, gens: &[Permutation], cap: usize) -> Result<Vec<Permutation>, CliError> {
    Ok(enumerate_closure(identity, gens, cap)?.elements().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stock_action_orders() {
        assert_eq!(symmetric_action(4, 100).unwrap().order(), 24);
        assert_eq!(dihedral_action(5, 100).unwrap().order(), 10);
        assert_eq!(agl1_action(5, 1, 100).unwrap().order(), 20);
        assert_eq!(agl1_action(2, 3, 100).unwrap().order(), 56);
        assert_eq!(agl1_action(3, 2, 1000).unwrap().order(), 72);
        let sl23 = sl23_on_vectors(100).unwrap();
        assert_eq!(sl23.order(), 24);
        assert_eq!(sl23.degree(), 8);
        assert_eq!(psl2_line_action(7, 1, 1000).unwrap().order(), 168);
        assert_eq!(psl2_line_action(2, 3, 1000).unwrap().order(), 504);
        assert_eq!(z4xz2_regular(100).unwrap().order(), 8);
    }

    #[test]
    fn iterated_wreath_orders() {
        // Sylow 2-subgroups of Sym(2^k): orders 2, 8, 128, 32768.
        assert_eq!(iterated_wreath2(1, 100).unwrap().order(), 2);
        assert_eq!(iterated_wreath2(2, 100).unwrap().order(), 8);
        assert_eq!(iterated_wreath2(3, 1000).unwrap().order(), 128);
        assert_eq!(iterated_wreath2(4, 100_000).unwrap().order(), 32768);
    }
}
