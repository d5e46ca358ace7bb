//! Builders for the named group actions under study: each returns a
//! ready-to-analyze action together with the distinguished subgroups
//! (claimed intersecting subgroups, sharply transitive transversals)
//! and the claimed numeric metrics.
//!
//! Small builds carry a fully enumerated [`Action`] and realize every
//! registered subgroup as permutations. The two largest builds (the
//! degree-870 affine examples) never materialize the ambient group;
//! they keep the coset table and the subgroup element sets in the
//! affine carrier instead.

mod agl;
mod asc;
mod nobo;
mod pglexam;
mod psl2_build;
mod table1;

pub use agl::build_agl_example;
pub use asc::build_asc;
pub use nobo::build_nobo;
pub use pglexam::build_pglexam_transversal;
pub use psl2_build::build_psl2_action;
pub use table1::build_table1;

// The wreath construction lives with the action machinery; surface it
// here alongside the other builders.
pub use crate::action::{wreath_product, WreathAction};

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::action::{Action, CosetTable};
use crate::affine::AffineElement;
use crate::perm::Permutation;
use crate::ratio::Ratio;

/// Coset structure for builds whose ambient group is too large to
/// enumerate: the table supports membership, fixed-point, and
/// permutation queries without ever listing the group.
#[derive(Clone, Debug)]
pub struct StructuralCosets {
    pub table: CosetTable<AffineElement>,
    /// Role label ("H", "K", ...) to full element set.
    pub subgroups: BTreeMap<String, Vec<AffineElement>>,
}

/// A built action plus its distinguished subgroups and claimed
/// metrics. Exactly one of `action` / `structural` is populated.
#[derive(Clone, Debug)]
pub struct ConstructionResult {
    pub name: String,
    pub degree: usize,
    pub group_order: u64,
    pub action: Option<Action>,
    /// Role label to subgroup elements, realized in the action.
    pub subgroups: BTreeMap<String, Vec<Permutation>>,
    /// Claimed quantities, exact.
    pub metrics: BTreeMap<String, Ratio>,
    pub structural: Option<StructuralCosets>,
}

impl ConstructionResult {
    pub fn metric(&self, key: &str) -> Option<Ratio> {
        self.metrics.get(key).copied()
    }

    pub fn subgroup(&self, role: &str) -> Option<&[Permutation]> {
        self.subgroups.get(role).map(Vec::as_slice)
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
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

/// Decompose a prime power q = p^e; None if q is not one.
pub(crate) fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut n = q;
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            return if n == 1 { Some((p, e)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}
