//! Finite fields F_{p^k} with a deterministic choice of modulus.
//!
//! Elements are coefficient vectors of length k over F_p, stored
//! low-degree-first (`e[i]` is the coefficient of x^i), so the derived
//! `Vec` ordering is the crate-wide canonical element order. The
//! modulus is the lexicographically least monic irreducible polynomial
//! of degree k under the same low-degree-first comparison, found by a
//! scan with trial division; no Conway polynomial tables.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Desk-scale field order cap.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// A field element: coefficients reduced mod p, low-degree-first,
/// always exactly `k` entries. Arithmetic lives on [`FiniteField`];
/// mixing elements of different fields is a caller bug.
pub type Felt = Vec<u32>;

#[derive(Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    k: usize,
    /// Monic, degree k, low-degree-first, length k+1. For k = 1 this
    /// is just [0, 1] (the polynomial x): the prime field needs no
    /// reduction beyond mod p.
    modulus: Vec<u32>,
}

/// Build F_{p^k}. Deterministic: two calls with equal (p, k) produce
/// identical arithmetic.
pub fn make_field(p: u32, k: usize) -> Result<Arc<FiniteField>> {
    if !is_prime(p) {
        return Err(Error::BadParameter(format!("{p} is not prime")));
    }
    if k == 0 {
        return Err(Error::BadParameter("extension degree must be >= 1".into()));
    }
    let mut order: u64 = 1;
    for _ in 0..k {
        order = order.saturating_mul(p as u64);
        if order > MAX_FIELD_ORDER {
            return Err(Error::BadParameter(format!(
                "field order {p}^{k} exceeds the cap {MAX_FIELD_ORDER}"
            )));
        }
    }
    let modulus = least_irreducible(p, k);
    Ok(Arc::new(FiniteField { p, k, modulus }))
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Lex-least (low-degree-first) monic irreducible of degree k over F_p.
fn least_irreducible(p: u32, k: usize) -> Vec<u32> {
    if k == 1 {
        return vec![0, 1];
    }
    // Scan non-leading coefficient vectors in lex order.
    let mut coeffs = vec![0u32; k];
    loop {
        let mut poly = coeffs.clone();
        poly.push(1);
        if is_irreducible(p, &poly) {
            return poly;
        }
        // Lex increment: bump the last coordinate, carrying left.
        let mut i = k;
        loop {
            assert!(i > 0, "no irreducible polynomial found (impossible)");
            i -= 1;
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
        }
    }
}

/// Trial division by every monic polynomial of degree 1..=deg/2.
fn is_irreducible(p: u32, poly: &[u32]) -> bool {
    let deg = poly.len() - 1;
    if poly[0] == 0 {
        return false; // divisible by x
    }
    for d in 1..=deg / 2 {
        let mut divisor = vec![0u32; d + 1];
        divisor[d] = 1;
        loop {
            if poly_rem(p, poly, &divisor).is_empty() {
                return false;
            }
            // Advance the non-leading coefficients.
            let mut i = d;
            let mut done = false;
            loop {
                if i == 0 {
                    done = true;
                    break;
                }
                i -= 1;
                divisor[i] += 1;
                if divisor[i] < p {
                    break;
                }
                divisor[i] = 0;
            }
            if done {
                break;
            }
        }
    }
    true
}

/// Remainder of `a` by monic `b` over F_p; trailing zeros stripped, so
/// an empty vector means exact division.
fn poly_rem(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    let db = b.len() - 1;
    let mut r: Vec<u32> = a.to_vec();
    while r.len() > db {
        let lead = *r.last().unwrap();
        if lead != 0 {
            let shift = r.len() - 1 - db;
            for (i, &bc) in b.iter().enumerate() {
                let idx = shift + i;
                let sub = (lead as u64 * bc as u64) % p as u64;
                r[idx] = ((r[idx] as u64 + p as u64 * p as u64 - sub) % p as u64) as u32;
            }
        }
        r.pop();
    }
    while r.last() == Some(&0) {
        r.pop();
    }
    r
}

impl FiniteField {
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn extension_degree(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> u64 {
        (self.p as u64).pow(self.k as u32)
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> Felt {
        vec![0; self.k]
    }

    pub fn one(&self) -> Felt {
        self.from_int(1)
    }

    /// Image of an integer under the canonical map Z -> F_{p^k}.
    pub fn from_int(&self, n: u64) -> Felt {
        let mut e = self.zero();
        e[0] = (n % self.p as u64) as u32;
        e
    }

    /// x̄, the residue of the variable. For k = 1 this is zero (x ≡ 0
    /// mod x); only meaningful for genuine extensions.
    pub fn x(&self) -> Felt {
        let mut e = self.zero();
        if self.k > 1 {
            e[1] = 1;
        }
        e
    }

    pub fn is_zero(&self, a: &Felt) -> bool {
        a.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &Felt, b: &Felt) -> Felt {
        a.iter().zip(b).map(|(&x, &y)| (x + y) % self.p).collect()
    }

    pub fn neg(&self, a: &Felt) -> Felt {
        a.iter().map(|&x| (self.p - x) % self.p).collect()
    }

    pub fn sub(&self, a: &Felt, b: &Felt) -> Felt {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Felt, b: &Felt) -> Felt {
        let p = self.p as u64;
        let mut prod = vec![0u64; 2 * self.k - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // Reduce mod the monic modulus, high degree down.
        for d in (self.k..prod.len()).rev() {
            let lead = prod[d];
            if lead != 0 {
                prod[d] = 0;
                for (i, &mc) in self.modulus.iter().take(self.k).enumerate() {
                    let idx = d - self.k + i;
                    prod[idx] = (prod[idx] + p * p - lead * mc as u64 % p) % p;
                }
            }
        }
        prod.into_iter().take(self.k).map(|c| c as u32).collect()
    }

    pub fn pow(&self, a: &Felt, mut e: u64) -> Felt {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via a^(q-2). Panics on zero.
    pub fn inv(&self, a: &Felt) -> Felt {
        assert!(!self.is_zero(a), "inverse of zero");
        self.pow(a, self.order() - 2)
    }

    /// The field Frobenius a ↦ a^p.
    pub fn frobenius(&self, a: &Felt) -> Felt {
        self.pow(a, self.p as u64)
    }

    /// Multiplicative order of a nonzero element, computed by reducing
    /// q−1 through its prime factors (no q-step loops).
    pub fn multiplicative_order(&self, a: &Felt) -> u64 {
        assert!(!self.is_zero(a), "order of zero");
        let mut ord = self.order() - 1;
        for q in prime_factors(ord) {
            while ord % q == 0 && self.pow(a, ord / q) == self.one() {
                ord /= q;
            }
        }
        ord
    }

    /// Every element, in canonical (coefficient-lexicographic) order.
    pub fn elements(&self) -> Vec<Felt> {
        let mut out = Vec::with_capacity(self.order() as usize);
        let mut cur = self.zero();
        loop {
            out.push(cur.clone());
            // Increment as a lex counter: last coordinate fastest.
            let mut i = self.k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < self.p {
                    break;
                }
                cur[i] = 0;
            }
        }
    }

    /// The d-th root subfield F_{p^d} = {a : a^(p^d) = a}, elements in
    /// canonical order. Requires d | k.
    pub fn subfield_elements(&self, d: usize) -> Result<Vec<Felt>> {
        if d == 0 || self.k % d != 0 {
            return Err(Error::BadParameter(format!(
                "{d} does not divide the extension degree {}",
                self.k
            )));
        }
        let q = (self.p as u64).pow(d as u32);
        Ok(self
            .elements()
            .into_iter()
            .filter(|a| self.pow(a, q) == *a)
            .collect())
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Least element (canonical order) generating the multiplicative group.
pub fn multiplicative_generator(field: &FiniteField) -> Felt {
    assert!(field.order() >= 3, "multiplicative group is trivial");
    let target = field.order() - 1;
    for a in field.elements() {
        if !field.is_zero(&a) && field.multiplicative_order(&a) == target {
            return a;
        }
    }
    unreachable!("every finite field has a primitive element")
}

/// generator^((q−1)/m): the canonical element of multiplicative order m.
pub fn element_of_order(field: &FiniteField, m: u64) -> Result<Felt> {
    let q1 = field.order() - 1;
    if m == 0 || q1 % m != 0 {
        return Err(Error::BadParameter(format!(
            "{m} does not divide the group order {q1}"
        )));
    }
    let g = multiplicative_generator(field);
    Ok(field.pow(&g, q1 / m))
}
