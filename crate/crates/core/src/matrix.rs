//! 2x2 matrices over a finite field, optionally taken mod scalars.
//!
//! Vectors are row vectors acted on by matrices on the right, so the
//! group composition matching apply-left-first is the plain matrix
//! product. Projective matrices are canonicalized at construction
//! (scaled so the first nonzero entry is 1), which makes structural
//! equality coincide with equality in PGL.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::{Felt, FiniteField};
use crate::group::GroupElement;
use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub struct Mat2 {
    field: Arc<FiniteField>,
    /// Row-major: [a, b, c, d] for (a b; c d).
    entries: [Felt; 4],
    projective: bool,
}

impl Mat2 {
    /// Build from row-major entries; errors on a singular matrix.
    pub fn new(field: Arc<FiniteField>, entries: [Felt; 4], projective: bool) -> Result<Self> {
        let m = Mat2 {
            field,
            entries,
            projective,
        };
        if m.field.is_zero(&m.det()) {
            return Err(Error::BadParameter("singular matrix".into()));
        }
        Ok(m.canonicalize())
    }

    /// Convenience constructor from integer entries.
    pub fn from_ints(
        field: Arc<FiniteField>,
        entries: [i64; 4],
        projective: bool,
    ) -> Result<Self> {
        let p = field.characteristic() as i64;
        let lift = |n: i64| field.from_int(n.rem_euclid(p) as u64);
        let e = [lift(entries[0]), lift(entries[1]), lift(entries[2]), lift(entries[3])];
        Mat2::new(field, e, projective)
    }

    pub fn identity(field: Arc<FiniteField>, projective: bool) -> Self {
        let e = [field.one(), field.zero(), field.zero(), field.one()];
        Mat2 {
            field,
            entries: e,
            projective,
        }
    }

    fn canonicalize(mut self) -> Self {
        if self.projective {
            let lead = self
                .entries
                .iter()
                .find(|e| !self.field.is_zero(e))
                .expect("nonsingular matrix has a nonzero entry")
                .clone();
            if lead != self.field.one() {
                let s = self.field.inv(&lead);
                for e in &mut self.entries {
                    *e = self.field.mul(e, &s);
                }
            }
        }
        self
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn entries(&self) -> &[Felt; 4] {
        &self.entries
    }

    pub fn is_projective(&self) -> bool {
        self.projective
    }

    pub fn det(&self) -> Felt {
        let f = &self.field;
        f.sub(
            &f.mul(&self.entries[0], &self.entries[3]),
            &f.mul(&self.entries[1], &self.entries[2]),
        )
    }

    /// True for nonzero multiples of the identity.
    pub fn is_scalar(&self) -> bool {
        let f = &self.field;
        f.is_zero(&self.entries[1])
            && f.is_zero(&self.entries[2])
            && self.entries[0] == self.entries[3]
    }

    /// Image of the row vector (x, y).
    pub fn apply_row(&self, x: &Felt, y: &Felt) -> (Felt, Felt) {
        let f = &self.field;
        (
            f.add(&f.mul(x, &self.entries[0]), &f.mul(y, &self.entries[2])),
            f.add(&f.mul(x, &self.entries[1]), &f.mul(y, &self.entries[3])),
        )
    }

    /// The permutation induced on PG(1, q), with points ordered
    /// [1:0] first, then [a:1] in field element order. Total q+1
    /// points; scalar matrices induce the identity.
    pub fn projective_perm(&self) -> Permutation {
        let f = &self.field;
        let q = f.order() as usize;
        let mut images = Vec::with_capacity(q + 1);
        // Point 0 is [1:0]; point 1+i is [a_i : 1].
        let elements = f.elements();
        let point_index = |x: &Felt, y: &Felt| -> usize {
            if f.is_zero(y) {
                0
            } else {
                let a = f.mul(x, &f.inv(y));
                1 + felt_rank(f, &a)
            }
        };
        let (ix, iy) = self.apply_row(&f.one(), &f.zero());
        images.push(point_index(&ix, &iy));
        for a in &elements {
            let (ix, iy) = self.apply_row(a, &f.one());
            images.push(point_index(&ix, &iy));
        }
        Permutation::from_usize_images(&images).expect("invertible matrix induces a bijection")
    }
}

/// Position of an element in the canonical enumeration, computed from
/// its coefficients (coordinate 0 most significant).
fn felt_rank(f: &FiniteField, a: &Felt) -> usize {
    let p = f.characteristic() as usize;
    a.iter().fold(0usize, |acc, &c| acc * p + c as usize)
}

impl PartialEq for Mat2 {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl Eq for Mat2 {}

impl PartialOrd for Mat2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Mat2 {
    fn cmp(&self, other: &Self) -> Ordering {
        self.entries.cmp(&other.entries)
    }
}

impl GroupElement for Mat2 {
    fn compose(&self, other: &Self) -> Self {
        let f = &self.field;
        let a = &self.entries;
        let b = &other.entries;
        let entries = [
            f.add(&f.mul(&a[0], &b[0]), &f.mul(&a[1], &b[2])),
            f.add(&f.mul(&a[0], &b[1]), &f.mul(&a[1], &b[3])),
            f.add(&f.mul(&a[2], &b[0]), &f.mul(&a[3], &b[2])),
            f.add(&f.mul(&a[2], &b[1]), &f.mul(&a[3], &b[3])),
        ];
        Mat2 {
            field: self.field.clone(),
            entries,
            projective: self.projective,
        }
        .canonicalize()
    }

    fn inverse(&self) -> Self {
        let f = &self.field;
        let d = f.inv(&self.det());
        let entries = [
            f.mul(&self.entries[3], &d),
            f.mul(&f.neg(&self.entries[1]), &d),
            f.mul(&f.neg(&self.entries[2]), &d),
            f.mul(&self.entries[0], &d),
        ];
        Mat2 {
            field: self.field.clone(),
            entries,
            projective: self.projective,
        }
        .canonicalize()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::make_field;
    use crate::group::Group;

    #[test]
    fn group_axioms_in_gl2_5() {
        let f5 = make_field(5, 1).unwrap();
        let a = Mat2::from_ints(f5.clone(), [1, 1, 0, 1], false).unwrap();
        let b = Mat2::from_ints(f5.clone(), [0, 1, -1, 0], false).unwrap();
        let id = Mat2::identity(f5.clone(), false);
        assert_eq!(a.compose(&a.inverse()), id);
        assert_eq!(b.compose(&b.inverse()), id);
        // |SL(2,5)| = 120: the two generators above have det 1.
        let sl25 = Group::new(id, alloc::vec![a, b]).enumerate(1000).unwrap();
        assert_eq!(sl25.order(), 120);
    }

    #[test]
    fn singular_rejected() {
        let f5 = make_field(5, 1).unwrap();
        assert!(Mat2::from_ints(f5, [1, 2, 2, 4], false).is_err());
    }

    #[test]
    fn projective_canonical_form() {
        let f5 = make_field(5, 1).unwrap();
        let m = Mat2::from_ints(f5.clone(), [2, 0, 0, 2], true).unwrap();
        assert!(m.is_scalar());
        assert_eq!(m, Mat2::identity(f5.clone(), true));
        // 2A and A are equal projectively, not linearly.
        let a1 = Mat2::from_ints(f5.clone(), [1, 1, 0, 1], true).unwrap();
        let a2 = Mat2::from_ints(f5.clone(), [2, 2, 0, 2], true).unwrap();
        assert_eq!(a1, a2);
        let l1 = Mat2::from_ints(f5.clone(), [1, 1, 0, 1], false).unwrap();
        let l2 = Mat2::from_ints(f5, [2, 2, 0, 2], false).unwrap();
        assert_ne!(l1, l2);
    }

    #[test]
    fn pgl2_5_on_projective_line() {
        let f5 = make_field(5, 1).unwrap();
        let a = Mat2::from_ints(f5.clone(), [1, 1, 0, 1], true).unwrap();
        let b = Mat2::from_ints(f5.clone(), [2, 0, 0, 1], true).unwrap();
        let w = Mat2::from_ints(f5.clone(), [0, 1, 1, 0], true).unwrap();
        let id = Mat2::identity(f5.clone(), true);
        let pgl = Group::new(id, alloc::vec![a, b, w]).enumerate(1000).unwrap();
        // |PGL(2,5)| = 120.
        assert_eq!(pgl.order(), 120);
        // The projective realization is a degree-6 homomorphism.
        for x in pgl.elements().iter().take(30) {
            for y in pgl.elements().iter().take(30) {
                let lhs = x.compose(y).projective_perm();
                let rhs = x.projective_perm().compose_checked(&y.projective_perm()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        // Scalars act trivially.
        let s = Mat2::from_ints(f5, [3, 0, 0, 3], true).unwrap();
        assert!(s.projective_perm().is_identity());
    }

    #[test]
    fn projective_perm_hand_check() {
        // Over F3, the matrix (0 1; -1 0) sends [1:0] -> [0:1],
        // [0:1] -> [-1:0] = [1:0], [1:1] -> [-1:1] = [2:1],
        // [2:1] -> [-1:2] = [1:1] (scaling by 2).
        let f3 = make_field(3, 1).unwrap();
        let m = Mat2::from_ints(f3, [0, 1, -1, 0], true).unwrap();
        // Points: 0 = [1:0], 1 = [0:1], 2 = [1:1], 3 = [2:1].
        let perm = m.projective_perm();
        assert_eq!(perm.image(0), 1);
        assert_eq!(perm.image(1), 0);
        assert_eq!(perm.image(2), 3);
        assert_eq!(perm.image(3), 2);
    }
}
