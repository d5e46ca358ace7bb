//! Arithmetic analysis of intersecting subgroups in PSL(2, p).
//!
//! For G = PSL(2, p) acting on the cosets of a maximal subgroup H, a
//! subgroup S < G is intersecting exactly when the set of element
//! orders of S embeds into the set of element orders of H (all cyclic
//! subgroups of a given order are conjugate in G, so an element whose
//! order appears in H is conjugate into H and fixes a coset). That
//! reduces the weak-EKR question to pure arithmetic over Dickson's
//! classification of the subgroups of PSL(2, p): no group is ever
//! built, so the analyzer scales to primes far beyond enumeration
//! range.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use alloc::collections::BTreeSet;

use crate::error::{Error, Result};

/// The maximal-subgroup families of PSL(2, p), p >= 5 prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Psl2Family {
    /// The point stabilizer Z_p : Z_{(p-1)/2} on the projective line.
    Borel,
    /// Dihedral of order p - 1 (split torus normalizer); maximal for p >= 13.
    DMinus,
    /// Dihedral of order p + 1 (nonsplit torus normalizer); maximal for p != 7.
    DPlus,
    /// Alternating group of degree 4; maximal when p = +-3 mod 8.
    A4,
    /// Symmetric group of degree 4; present (and maximal) when p = +-1 mod 8.
    S4,
    /// Alternating group of degree 5; present when p = +-1 mod 10.
    A5,
}

impl Psl2Family {
    pub const ALL: [Psl2Family; 6] = [
        Psl2Family::Borel,
        Psl2Family::DMinus,
        Psl2Family::DPlus,
        Psl2Family::A4,
        Psl2Family::S4,
        Psl2Family::A5,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Psl2Family::Borel => "borel",
            Psl2Family::DMinus => "d-minus",
            Psl2Family::DPlus => "d-plus",
            Psl2Family::A4 => "a4",
            Psl2Family::S4 => "s4",
            Psl2Family::A5 => "a5",
        }
    }

    pub fn parse(text: &str) -> Option<Psl2Family> {
        Psl2Family::ALL.iter().copied().find(|f| f.as_str() == text)
    }
}

impl fmt::Display for Psl2Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An isomorphism type from the classical subgroup catalogue of
/// PSL(2, p), carrying enough data to compute its order and its set of
/// element orders arithmetically.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum SubgroupKind {
    /// Z_p : Z_ell with ell dividing (p-1)/2; order p * ell.
    Frobenius { ell: u64 },
    /// Cyclic of order ell, ell dividing (p-1)/2 or (p+1)/2.
    Cyclic { ell: u64 },
    /// Dihedral of order n (n even, n >= 4), n dividing p-1 or p+1.
    Dihedral { order: u64 },
    /// Alternating of degree 4, order 12, element orders {1,2,3}.
    Alt4,
    /// Symmetric of degree 4, order 24, element orders {1,2,3,4}.
    Sym4,
    /// Alternating of degree 5, order 60, element orders {1,2,3,5}.
    Alt5,
}

impl SubgroupKind {
    pub fn order(&self, p: u64) -> u64 {
        match *self {
            SubgroupKind::Frobenius { ell } => p * ell,
            SubgroupKind::Cyclic { ell } => ell,
            SubgroupKind::Dihedral { order } => order,
            SubgroupKind::Alt4 => 12,
            SubgroupKind::Sym4 => 24,
            SubgroupKind::Alt5 => 60,
        }
    }

    /// The set of element orders of this subgroup type.
    pub fn order_set(&self, p: u64) -> BTreeSet<u64> {
        match *self {
            SubgroupKind::Frobenius { ell } => {
                let mut s = divisors(ell);
                s.insert(p);
                s
            }
            SubgroupKind::Cyclic { ell } => divisors(ell),
            SubgroupKind::Dihedral { order } => {
                let mut s = divisors(order / 2);
                s.insert(2);
                s
            }
            SubgroupKind::Alt4 => [1, 2, 3].into_iter().collect(),
            SubgroupKind::Sym4 => [1, 2, 3, 4].into_iter().collect(),
            SubgroupKind::Alt5 => [1, 2, 3, 5].into_iter().collect(),
        }
    }

    pub fn label(&self) -> String {
        use alloc::format;
        match *self {
            SubgroupKind::Frobenius { ell } => format!("p:{ell}"),
            SubgroupKind::Cyclic { ell } => format!("Z{ell}"),
            SubgroupKind::Dihedral { order } => format!("D{order}"),
            SubgroupKind::Alt4 => String::from("A4"),
            SubgroupKind::Sym4 => String::from("S4"),
            SubgroupKind::Alt5 => String::from("A5"),
        }
    }
}

/// Primes at which some primitive PSL(2, p) action misses weak-EKR or
/// strict-weak-EKR.
pub const EXCEPTIONAL_PRIMES: [u64; 7] = [11, 13, 23, 29, 31, 59, 61];

/// Result of the arithmetic analysis for one (p, family) pair.
#[derive(Clone, Debug)]
pub struct Psl2Report {
    pub p: u64,
    pub family: Psl2Family,
    pub stabilizer_order: u64,
    /// Element orders occurring in the point stabilizer.
    pub stabilizer_order_set: BTreeSet<u64>,
    /// Largest order of a proper intersecting subgroup.
    pub max_intersecting_subgroup_order: u64,
    /// Catalogue types attaining that maximum.
    pub attained_by: Vec<SubgroupKind>,
    /// Every intersecting subgroup has order <= |H|.
    pub weak_ekr: bool,
    /// Weak-EKR holds and only the stabilizer type attains the maximum.
    pub strict_weak_ekr: bool,
    /// True only for the point-stabilizer family, where strict-EKR is
    /// known from the two-transitive theory; not computed here.
    pub strict_ekr_delegated: bool,
    pub exceptional_prime: bool,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn divisors(n: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    if n == 0 {
        out.insert(1);
        return out;
    }
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.insert(d);
            out.insert(n / d);
        }
        d += 1;
    }
    out
}

/// Is the family a maximal subgroup (hence a primitive action) at p?
pub fn family_admissible(p: u64, family: Psl2Family) -> bool {
    match family {
        Psl2Family::Borel => true,
        Psl2Family::DMinus => p >= 13,
        Psl2Family::DPlus => p != 7,
        Psl2Family::A4 => p % 8 == 3 || p % 8 == 5,
        Psl2Family::S4 => p % 8 == 1 || p % 8 == 7,
        Psl2Family::A5 => p % 10 == 1 || p % 10 == 9,
    }
}

pub fn stabilizer_kind(p: u64, family: Psl2Family) -> SubgroupKind {
    match family {
        Psl2Family::Borel => SubgroupKind::Frobenius { ell: (p - 1) / 2 },
        Psl2Family::DMinus => SubgroupKind::Dihedral { order: p - 1 },
        Psl2Family::DPlus => SubgroupKind::Dihedral { order: p + 1 },
        Psl2Family::A4 => SubgroupKind::Alt4,
        Psl2Family::S4 => SubgroupKind::Sym4,
        Psl2Family::A5 => SubgroupKind::Alt5,
    }
}

/// The full catalogue of proper-subgroup isomorphism types of
/// PSL(2, p): Frobenius groups Z_p : Z_ell with ell | (p-1)/2; cyclic
/// groups of order dividing (p-1)/2 or (p+1)/2; dihedral groups of
/// even order dividing p-1 or p+1; A4 always; S4 when p = +-1 mod 8;
/// A5 when p = +-1 mod 10.
pub fn subgroup_catalogue(p: u64) -> Vec<SubgroupKind> {
    let mut out = Vec::new();
    for ell in divisors((p - 1) / 2) {
        out.push(SubgroupKind::Frobenius { ell });
    }
    let mut cyclic: BTreeSet<u64> = divisors((p - 1) / 2);
    cyclic.extend(divisors((p + 1) / 2));
    for ell in cyclic {
        out.push(SubgroupKind::Cyclic { ell });
    }
    let mut dihedral: BTreeSet<u64> = BTreeSet::new();
    for n in divisors(p - 1).into_iter().chain(divisors(p + 1)) {
        if n % 2 == 0 && n >= 4 {
            dihedral.insert(n);
        }
    }
    for order in dihedral {
        out.push(SubgroupKind::Dihedral { order });
    }
    out.push(SubgroupKind::Alt4);
    if p % 8 == 1 || p % 8 == 7 {
        out.push(SubgroupKind::Sym4);
    }
    if p % 10 == 1 || p % 10 == 9 {
        out.push(SubgroupKind::Alt5);
    }
    out
}

/// The catalogue types that are intersecting subgroups for the action
/// on cosets of the given family's stabilizer: exactly those whose
/// element-order set embeds in the stabilizer's.
pub fn intersecting_subgroup_kinds(p: u64, family: Psl2Family) -> Vec<SubgroupKind> {
    let h_orders = stabilizer_kind(p, family).order_set(p);
    subgroup_catalogue(p)
        .into_iter()
        .filter(|k| k.order_set(p).is_subset(&h_orders))
        .collect()
}

/// Arithmetic-only analysis of the primitive action of PSL(2, p) on
/// the cosets of the chosen maximal subgroup.
pub fn psl2_analyze(p: u64, family: Psl2Family) -> Result<Psl2Report> {
    if p < 5 || !is_prime(p) {
        return Err(Error::BadParameter(alloc::format!(
            "p must be a prime >= 5, got {p}"
        )));
    }
    if !family_admissible(p, family) {
        return Err(Error::BadParameter(alloc::format!(
            "family {family} is not a maximal subgroup of PSL(2,{p})"
        )));
    }
    let h = stabilizer_kind(p, family);
    let stabilizer_order = h.order(p);
    let stabilizer_order_set = h.order_set(p);
    let intersecting = intersecting_subgroup_kinds(p, family);
    // The stabilizer itself is in the catalogue and trivially embeds,
    // so the maximum is at least |H|.
    let max_order = intersecting
        .iter()
        .map(|k| k.order(p))
        .max()
        .expect("catalogue contains the trivial subgroup");
    debug_assert!(max_order >= stabilizer_order);
    let attained_by: Vec<SubgroupKind> = intersecting
        .into_iter()
        .filter(|k| k.order(p) == max_order)
        .collect();
    let weak_ekr = max_order <= stabilizer_order;
    let strict_weak_ekr = weak_ekr && attained_by.iter().all(|k| *k == h);
    Ok(Psl2Report {
        p,
        family,
        stabilizer_order,
        stabilizer_order_set,
        max_intersecting_subgroup_order: max_order,
        attained_by,
        weak_ekr,
        strict_weak_ekr,
        strict_ekr_delegated: family == Psl2Family::Borel,
        exceptional_prime: EXCEPTIONAL_PRIMES.contains(&p),
    })
}
