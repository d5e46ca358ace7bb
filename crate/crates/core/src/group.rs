//! Generic finite-group machinery over an abstract element interface.
//!
//! Groups are given by generators; element sets are materialized by a
//! breadth-first closure with a deterministic discovery order (generator
//! order, then discovery order). All membership structures are ordered
//! maps, so two runs always enumerate identically.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Behavioral interface of a group element. Carriers: permutations,
/// 2x2 matrices, affine maps. Composition is apply-left-first
/// throughout (right-action convention).
pub trait GroupElement: Clone + Ord {
    fn compose(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
}

/// Default element-enumeration cap.
pub const DEFAULT_ENUM_CAP: usize = 2_000_000;

/// A group given by generators, with an explicit identity so the
/// trivial group (empty generator list) is representable.
#[derive(Clone, Debug)]
pub struct Group<E: GroupElement> {
    identity: E,
    generators: Vec<E>,
}

impl<E: GroupElement> Group<E> {
    pub fn new(identity: E, generators: Vec<E>) -> Self {
        Group { identity, generators }
    }

    pub fn identity(&self) -> &E {
        &self.identity
    }

    pub fn generators(&self) -> &[E] {
        &self.generators
    }

    /// Breadth-first closure of the generators under composition.
    /// Fails cleanly with the partial count if the cap would be exceeded.
    pub fn enumerate(&self, cap: usize) -> Result<Enumerated<E>> {
        enumerate_closure(&self.identity, &self.generators, cap)
    }
}

/// A fully materialized element set: elements in discovery order
/// (identity first) plus an ordered index for membership tests.
#[derive(Clone, Debug)]
pub struct Enumerated<E: GroupElement> {
    elements: Vec<E>,
    index: BTreeMap<E, usize>,
    identity: E,
    generators: Vec<E>,
}

impl<E: GroupElement> Enumerated<E> {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn identity(&self) -> &E {
        &self.identity
    }

    pub fn generators(&self) -> &[E] {
        &self.generators
    }

    pub fn contains(&self, e: &E) -> bool {
        self.index.contains_key(e)
    }

    pub fn position(&self, e: &E) -> Option<usize> {
        self.index.get(e).copied()
    }

    /// True iff every element of `other` lies in this set.
    pub fn contains_all(&self, other: &Enumerated<E>) -> bool {
        other.elements.iter().all(|e| self.contains(e))
    }

    /// All elements commuting with every element of the set.
    /// Commuting with the generators suffices, which keeps this linear
    /// in `|G| * |gens|`.
    pub fn centre(&self) -> Vec<E> {
        self.elements
            .iter()
            .filter(|z| {
                self.generators
                    .iter()
                    .all(|g| z.compose(g) == g.compose(z))
            })
            .cloned()
            .collect()
    }

    /// Order of a single element within this group (brute force).
    pub fn element_order_of(&self, e: &E) -> usize {
        let mut acc = e.clone();
        let mut m = 1;
        while acc != self.identity {
            acc = acc.compose(e);
            m += 1;
        }
        m
    }
}

/// BFS closure shared by [`Group::enumerate`] and the subgroup searches.
pub fn enumerate_closure<E: GroupElement>(
    identity: &E,
    generators: &[E],
    cap: usize,
) -> Result<Enumerated<E>> {
    if cap < 1 {
        return Err(Error::BadParameter(alloc::string::String::from("cap must be >= 1")));
    }
    let mut elements = Vec::new();
    let mut index = BTreeMap::new();
    elements.push(identity.clone());
    index.insert(identity.clone(), 0usize);
    let mut frontier = 0usize;
    while frontier < elements.len() {
        let current = elements[frontier].clone();
        frontier += 1;
        for g in generators {
            let next = current.compose(g);
            if !index.contains_key(&next) {
                if elements.len() >= cap {
                    return Err(Error::EnumerationCap {
                        cap,
                        reached: elements.len(),
                    });
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
    }
    Ok(Enumerated {
        elements,
        index,
        identity: identity.clone(),
        generators: generators.to_vec(),
    })
}

/// BFS closure that aborts as soon as `reject` holds for a discovered
/// element, or the cap is exceeded. Used by the exhaustive
/// intersecting-subgroup sweeps, where most pairs generate a large
/// group and hit a rejected element within a few steps.
pub fn closure_until<E, F>(
    identity: &E,
    generators: &[E],
    cap: usize,
    mut reject: F,
) -> Option<Vec<E>>
where
    E: GroupElement,
    F: FnMut(&E) -> bool,
{
    let mut elements = Vec::new();
    let mut index = alloc::collections::BTreeSet::new();
    if reject(identity) {
        return None;
    }
    elements.push(identity.clone());
    index.insert(identity.clone());
    let mut frontier = 0usize;
    while frontier < elements.len() {
        let current = elements[frontier].clone();
        frontier += 1;
        for g in generators {
            let next = current.compose(g);
            if !index.contains(&next) {
                if reject(&next) || elements.len() >= cap {
                    return None;
                }
                index.insert(next.clone());
                elements.push(next);
            }
        }
    }
    Some(elements)
}

/// True iff `set` is a coset of some subgroup: translate by the inverse
/// of its first element and check closure under composition and inverse.
pub fn is_coset_of_subgroup<E: GroupElement>(set: &[E]) -> bool {
    let Some(first) = set.first() else {
        return false;
    };
    let inv = first.inverse();
    let translated: alloc::collections::BTreeSet<E> =
        set.iter().map(|s| s.compose(&inv)).collect();
    translated.iter().all(|t| {
        translated.contains(&t.inverse())
            && translated.iter().all(|u| translated.contains(&t.compose(u)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn p(text: &str, degree: usize) -> Permutation {
        Permutation::parse_cycles(text, degree).unwrap()
    }

    #[test]
    fn enumerate_small_groups() {
        let g = Group::new(Permutation::identity(2), alloc::vec![p("(0 1)", 2)]);
        let e = g.enumerate(10).unwrap();
        assert_eq!(e.order(), 2);

        let s3 = Group::new(
            Permutation::identity(3),
            alloc::vec![p("(0 1)", 3), p("(0 1 2)", 3)],
        );
        let e = s3.enumerate(100).unwrap();
        assert_eq!(e.order(), 6);
        // Oracle: the 6 permutations of Sym(3), listed directly.
        for text in ["()", "(0 1)", "(0 2)", "(1 2)", "(0 1 2)", "(0 2 1)"] {
            assert!(e.contains(&p(text, 3)));
        }
    }

    #[test]
    fn enumerate_cap_carries_partial_count() {
        let s3 = Group::new(
            Permutation::identity(3),
            alloc::vec![p("(0 1)", 3), p("(0 1 2)", 3)],
        );
        match s3.enumerate(4) {
            Err(Error::EnumerationCap { cap: 4, reached }) => assert!(reached >= 4),
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    #[test]
    fn enumeration_is_deterministic() {
        let s4 = Group::new(
            Permutation::identity(4),
            alloc::vec![p("(0 1)", 4), p("(0 1 2 3)", 4)],
        );
        let a = s4.enumerate(100).unwrap();
        let b = s4.enumerate(100).unwrap();
        assert_eq!(a.elements(), b.elements());
        assert_eq!(a.order(), 24);
    }

    #[test]
    fn centre_of_q8_model() {
        // Q8 as a permutation group via its regular representation is
        // overkill here; use the degree-8 copy inside Sym(8) generated
        // by the regular images of i and j.
        let i = p("(0 1 2 3)(4 7 6 5)", 8);
        let j = p("(0 4 2 6)(1 5 3 7)", 8);
        let q8 = Group::new(Permutation::identity(8), alloc::vec![i, j])
            .enumerate(100)
            .unwrap();
        assert_eq!(q8.order(), 8);
        let z = q8.centre();
        assert_eq!(z.len(), 2);
        // Oracle: pairwise commutation over all 8 elements.
        let brute: Vec<_> = q8
            .elements()
            .iter()
            .filter(|a| q8.elements().iter().all(|b| a.compose(b) == b.compose(a)))
            .collect();
        assert_eq!(brute.len(), 2);
    }

    #[test]
    fn coset_detection() {
        let s3 = Group::new(
            Permutation::identity(3),
            alloc::vec![p("(0 1)", 3), p("(0 1 2)", 3)],
        )
        .enumerate(100)
        .unwrap();
        // Any subgroup is a coset of itself.
        let sub = alloc::vec![Permutation::identity(3), p("(0 1)", 3)];
        assert!(is_coset_of_subgroup(&sub));
        // A 2-element set {x, y} is a coset iff (y x^-1)^2 = 1.
        // Oracle: brute-force over all 2-subsets of Sym(3).
        for a in s3.elements() {
            for b in s3.elements() {
                if a >= b {
                    continue;
                }
                let set = alloc::vec![a.clone(), b.clone()];
                let ratio = b.compose(&a.inverse());
                let expected = ratio.compose(&ratio).is_identity();
                assert_eq!(is_coset_of_subgroup(&set), expected);
            }
        }
        // {1, (0 1 2)} is not a coset: the ratio has order 3.
        assert!(!is_coset_of_subgroup(&alloc::vec![
            Permutation::identity(3),
            p("(0 1 2)", 3)
        ]));
    }
}
