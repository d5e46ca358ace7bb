//! Affine group elements.
//!
//! Two carriers: [`AffineElement`] holds x ↦ xM + v over a prime field
//! F_p in dimension d ≤ 4 (enough for every construction here, and
//! `Copy`-friendly fixed arrays keep enumeration of 700k-element groups
//! cheap); [`Affine1`] holds the one-dimensional map x ↦ xa + b over an
//! arbitrary finite field, the carrier for AGL(1, q).
//!
//! Composition is apply-left-first in both: (v1,M1)(v2,M2) =
//! (v2 + v1 M2, M1 M2), so x^(fg) = (x^f)^g.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::{Felt, FiniteField};
use crate::group::GroupElement;
use crate::perm::Permutation;

pub const MAX_DIM: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct AffineElement {
    p: u32,
    dim: u8,
    /// Translation; unused coordinates stay zero.
    v: [u32; MAX_DIM],
    /// Row-major linear part; identity outside the active block.
    m: [[u32; MAX_DIM]; MAX_DIM],
}

impl AffineElement {
    pub fn new(p: u32, dim: usize, v: [u32; MAX_DIM], m: [[u32; MAX_DIM]; MAX_DIM]) -> Result<Self> {
        if dim == 0 || dim > MAX_DIM {
            return Err(Error::BadParameter(alloc::format!(
                "affine dimension {dim} outside 1..={MAX_DIM}"
            )));
        }
        let mut e = AffineElement {
            p,
            dim: dim as u8,
            v,
            m,
        };
        for i in 0..MAX_DIM {
            for j in 0..MAX_DIM {
                if i >= dim || j >= dim {
                    e.m[i][j] = if i == j { 1 } else { 0 };
                } else {
                    e.m[i][j] %= p;
                }
            }
            if i >= dim {
                e.v[i] = 0;
            } else {
                e.v[i] %= p;
            }
        }
        if invert_matrix(p, dim, &e.m).is_none() {
            return Err(Error::BadParameter("singular linear part".into()));
        }
        Ok(e)
    }

    pub fn identity(p: u32, dim: usize) -> Self {
        let mut m = [[0u32; MAX_DIM]; MAX_DIM];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        AffineElement {
            p,
            dim: dim as u8,
            v: [0; MAX_DIM],
            m,
        }
    }

    /// Pure translation by `v`.
    pub fn translation(p: u32, dim: usize, v: [u32; MAX_DIM]) -> Result<Self> {
        let mut m = [[0u32; MAX_DIM]; MAX_DIM];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        AffineElement::new(p, dim, v, m)
    }

    /// Pure linear map.
    pub fn linear(p: u32, dim: usize, m: [[u32; MAX_DIM]; MAX_DIM]) -> Result<Self> {
        AffineElement::new(p, dim, [0; MAX_DIM], m)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn translation_part(&self) -> &[u32; MAX_DIM] {
        &self.v
    }

    pub fn linear_part(&self) -> &[[u32; MAX_DIM]; MAX_DIM] {
        &self.m
    }

    /// True iff the linear part is the identity.
    pub fn is_translation(&self) -> bool {
        (0..self.dim())
            .all(|i| (0..self.dim()).all(|j| self.m[i][j] == u32::from(i == j)))
    }

    /// Image of the row vector x under x ↦ xM + v.
    pub fn apply(&self, x: &[u32]) -> [u32; MAX_DIM] {
        let d = self.dim();
        let p = self.p as u64;
        let mut out = [0u32; MAX_DIM];
        for (j, o) in out.iter_mut().enumerate().take(d) {
            let mut acc = self.v[j] as u64;
            for (i, &xi) in x.iter().enumerate().take(d) {
                acc += xi as u64 * self.m[i][j] as u64;
            }
            *o = (acc % p) as u32;
        }
        out
    }

    /// The permutation on the p^d points of the affine space, indexed
    /// lexicographically (coordinate 0 most significant).
    pub fn to_perm(&self) -> Result<Permutation> {
        let d = self.dim();
        let p = self.p as usize;
        let n = p.pow(d as u32);
        let mut images = Vec::with_capacity(n);
        let mut x = [0u32; MAX_DIM];
        loop {
            let y = self.apply(&x[..d]);
            let mut idx = 0usize;
            for &c in y.iter().take(d) {
                idx = idx * p + c as usize;
            }
            images.push(idx);
            // Lex counter over the first d coordinates.
            let mut i = d;
            let mut done = false;
            loop {
                if i == 0 {
                    done = true;
                    break;
                }
                i -= 1;
                x[i] += 1;
                if (x[i] as usize) < p {
                    break;
                }
                x[i] = 0;
            }
            if done {
                break;
            }
        }
        Permutation::from_usize_images(&images)
    }
}

fn invert_matrix(
    p: u32,
    dim: usize,
    m: &[[u32; MAX_DIM]; MAX_DIM],
) -> Option<[[u32; MAX_DIM]; MAX_DIM]> {
    // Gauss-Jordan over F_p on an augmented [M | I] block.
    let p64 = p as u64;
    let mut a = [[0u64; 2 * MAX_DIM]; MAX_DIM];
    for i in 0..dim {
        for j in 0..dim {
            a[i][j] = m[i][j] as u64 % p64;
        }
        a[i][dim + i] = 1;
    }
    for col in 0..dim {
        let pivot = (col..dim).find(|&r| a[r][col] != 0)?;
        a.swap(col, pivot);
        let inv = mod_inverse(a[col][col], p64)?;
        for j in 0..2 * dim {
            a[col][j] = a[col][j] * inv % p64;
        }
        for r in 0..dim {
            if r != col && a[r][col] != 0 {
                let f = a[r][col];
                for j in 0..2 * dim {
                    a[r][j] = (a[r][j] + p64 * p64 - f * a[col][j] % p64) % p64;
                }
            }
        }
    }
    let mut out = [[0u32; MAX_DIM]; MAX_DIM];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = if i < dim && j < dim {
                a[i][dim + j] as u32
            } else {
                u32::from(i == j)
            };
        }
    }
    Some(out)
}

fn mod_inverse(a: u64, p: u64) -> Option<u64> {
    if a == 0 {
        return None;
    }
    // Fermat: p is prime throughout this crate.
    let mut acc = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    Some(acc)
}

impl GroupElement for AffineElement {
    fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.p, other.p);
        debug_assert_eq!(self.dim, other.dim);
        let d = self.dim();
        let p = self.p as u64;
        let mut m = [[0u32; MAX_DIM]; MAX_DIM];
        for i in 0..MAX_DIM {
            for j in 0..MAX_DIM {
                if i >= d || j >= d {
                    m[i][j] = u32::from(i == j);
                    continue;
                }
                let mut acc = 0u64;
                for k in 0..d {
                    acc += self.m[i][k] as u64 * other.m[k][j] as u64;
                }
                m[i][j] = (acc % p) as u32;
            }
        }
        let v = other.apply(&self.v[..d]);
        AffineElement {
            p: self.p,
            dim: self.dim,
            v,
            m,
        }
    }

    fn inverse(&self) -> Self {
        let d = self.dim();
        let p = self.p as u64;
        let minv = invert_matrix(self.p, d, &self.m).expect("linear part is invertible");
        let mut v = [0u32; MAX_DIM];
        for (j, vj) in v.iter_mut().enumerate().take(d) {
            let mut acc = 0u64;
            for i in 0..d {
                acc += self.v[i] as u64 * minv[i][j] as u64;
            }
            *vj = ((p - acc % p) % p) as u32;
        }
        AffineElement {
            p: self.p,
            dim: self.dim,
            v,
            m: minv,
        }
    }
}

/// One-dimensional affine map x ↦ xa + b over any finite field, a ≠ 0.
#[derive(Clone, Debug)]
pub struct Affine1 {
    field: Arc<FiniteField>,
    a: Felt,
    b: Felt,
}

impl Affine1 {
    pub fn new(field: Arc<FiniteField>, a: Felt, b: Felt) -> Result<Self> {
        if field.is_zero(&a) {
            return Err(Error::BadParameter("affine scale must be nonzero".into()));
        }
        Ok(Affine1 { field, a, b })
    }

    pub fn identity(field: Arc<FiniteField>) -> Self {
        let a = field.one();
        let b = field.zero();
        Affine1 { field, a, b }
    }

    pub fn field(&self) -> &Arc<FiniteField> {
        &self.field
    }

    pub fn scale(&self) -> &Felt {
        &self.a
    }

    pub fn shift(&self) -> &Felt {
        &self.b
    }

    pub fn apply(&self, x: &Felt) -> Felt {
        self.field.add(&self.field.mul(x, &self.a), &self.b)
    }
}

impl PartialEq for Affine1 {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b
    }
}

impl Eq for Affine1 {}

impl PartialOrd for Affine1 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Affine1 {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.a, &self.b).cmp(&(&other.a, &other.b))
    }
}

impl GroupElement for Affine1 {
    fn compose(&self, other: &Self) -> Self {
        // x^(fg) = (xa1 + b1)a2 + b2.
        Affine1 {
            field: self.field.clone(),
            a: self.field.mul(&self.a, &other.a),
            b: other.apply(&self.b),
        }
    }

    fn inverse(&self) -> Self {
        let ainv = self.field.inv(&self.a);
        Affine1 {
            field: self.field.clone(),
            a: ainv.clone(),
            b: self.field.neg(&self.field.mul(&self.b, &ainv)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{make_field, multiplicative_generator};
    use crate::group::Group;

    #[test]
    fn affine_compose_matches_pointwise() {
        let p = 5;
        let f = AffineElement::new(p, 2, [1, 2, 0, 0], [[2, 1, 0, 0], [1, 1, 0, 0], [0; 4], [0; 4]])
            .unwrap();
        let g = AffineElement::new(p, 2, [3, 0, 0, 0], [[0, 1, 0, 0], [4, 0, 0, 0], [0; 4], [0; 4]])
            .unwrap();
        let fg = f.compose(&g);
        for x0 in 0..p {
            for x1 in 0..p {
                let via_fg = fg.apply(&[x0, x1]);
                let step = f.apply(&[x0, x1]);
                let via_steps = g.apply(&step[..2]);
                assert_eq!(via_fg, via_steps);
            }
        }
        assert_eq!(f.compose(&f.inverse()), AffineElement::identity(p, 2));
        assert_eq!(g.inverse().compose(&g), AffineElement::identity(p, 2));
    }

    #[test]
    fn agl_1_5_order_20() {
        // AGL(1,5) = ⟨x+1, 2x⟩ has order 5·4 = 20.
        let t = AffineElement::translation(5, 1, [1, 0, 0, 0]).unwrap();
        let s = AffineElement::linear(5, 1, [[2, 0, 0, 0], [0; 4], [0; 4], [0; 4]]).unwrap();
        let g = Group::new(AffineElement::identity(5, 1), alloc::vec![t, s])
            .enumerate(100)
            .unwrap();
        assert_eq!(g.order(), 20);
    }

    #[test]
    fn to_perm_is_a_homomorphism() {
        let t = AffineElement::translation(3, 2, [1, 0, 0, 0]).unwrap();
        let s = AffineElement::linear(3, 2, [[0, 1, 0, 0], [2, 0, 0, 0], [0; 4], [0; 4]]).unwrap();
        let grp = Group::new(AffineElement::identity(3, 2), alloc::vec![t.clone(), s.clone()])
            .enumerate(10_000)
            .unwrap();
        for a in grp.elements().iter().take(20) {
            for b in grp.elements().iter().take(20) {
                let lhs = a.compose(b).to_perm().unwrap();
                let rhs = a.to_perm().unwrap().compose_checked(&b.to_perm().unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
        // Translation by (1,0) sends index 0 = (0,0) to (1,0) = index 3.
        assert_eq!(t.to_perm().unwrap().image(0), 3);
    }

    #[test]
    fn singular_linear_part_rejected() {
        assert!(AffineElement::linear(5, 2, [[1, 2, 0, 0], [2, 4, 0, 0], [0; 4], [0; 4]]).is_err());
        let f = make_field(5, 2).unwrap();
        assert!(Affine1::new(f.clone(), f.zero(), f.one()).is_err());
    }

    #[test]
    fn agl_1_25_via_affine1() {
        // AGL(1, 25) = ⟨x+1, γx⟩ has order 25·24 = 600.
        let f = make_field(5, 2).unwrap();
        let t = Affine1::new(f.clone(), f.one(), f.one()).unwrap();
        let g = Affine1::new(f.clone(), multiplicative_generator(&f), f.zero()).unwrap();
        let grp = Group::new(Affine1::identity(f.clone()), alloc::vec![t, g])
            .enumerate(10_000)
            .unwrap();
        assert_eq!(grp.order(), 600);
        // Pointwise compose check on generators.
        for a in grp.elements().iter().take(10) {
            for b in grp.elements().iter().take(10) {
                for x in f.elements().iter().take(6) {
                    assert_eq!(a.compose(b).apply(x), b.apply(&a.apply(x)));
                }
            }
        }
    }
}
