//! Concrete permutation actions: enumeration, orbits, stabilizers,
//! coset actions, block quotients, Frobenius detection, wreath products.
//!
//! An [`Action`] is the fully enumerated permutation image of a group.
//! Structural groups too large to realize as permutations of their own
//! order (the big affine examples) go through [`CosetTable`], which
//! only ever materializes the subgroup's element set and the coset
//! representatives.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::group::{enumerate_closure, Enumerated, Group, GroupElement};
use crate::perm::Permutation;

/// A transitive-or-not permutation group together with its degree,
/// with every element materialized. Canonical base point is 0.
#[derive(Clone, Debug)]
pub struct Action {
    degree: usize,
    group: Enumerated<Permutation>,
}

impl Action {
    pub fn from_perm_generators(
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let group = Group::new(Permutation::identity(degree), generators).enumerate(cap)?;
        Ok(Action { degree, group })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn group(&self) -> &Enumerated<Permutation> {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn elements(&self) -> &[Permutation] {
        self.group.elements()
    }

    pub fn orbit_of(&self, point: usize) -> BTreeSet<usize> {
        let mut orbit = BTreeSet::new();
        let mut frontier = alloc::vec![point];
        orbit.insert(point);
        while let Some(p) = frontier.pop() {
            for g in self.group.generators() {
                let q = g.image(p);
                if orbit.insert(q) {
                    frontier.push(q);
                }
            }
        }
        orbit
    }

    pub fn orbits(&self) -> Vec<BTreeSet<usize>> {
        let mut seen = alloc::vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree {
            if !seen[p] {
                let orbit = self.orbit_of(p);
                for &q in &orbit {
                    seen[q] = true;
                }
                out.push(orbit);
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit_of(0).len() == self.degree
    }

    /// All elements fixing the point, in enumeration order.
    pub fn point_stabilizer(&self, point: usize) -> Result<Vec<Permutation>> {
        if point >= self.degree {
            return Err(Error::BadParameter(alloc::format!(
                "point {point} out of range for degree {}",
                self.degree
            )));
        }
        Ok(self
            .elements()
            .iter()
            .filter(|g| g.image(point) == point)
            .cloned()
            .collect())
    }

    pub fn stabilizer_order(&self, point: usize) -> Result<usize> {
        Ok(self.point_stabilizer(point)?.len())
    }
}

/// Right-coset structure [G : H] built without enumerating G.
///
/// Points are cosets Hg in breadth-first discovery order; point 0 is H.
/// Coset equality Hg1 = Hg2 is decided by g1·g2⁻¹ ∈ H against H's
/// ordered element set — the subgroup is the only group whose elements
/// are ever materialized here.
#[derive(Clone, Debug)]
pub struct CosetTable<E: GroupElement> {
    reps: Vec<E>,
    gen_perms: Vec<Permutation>,
    subgroup: BTreeSet<E>,
}

impl<E: GroupElement> CosetTable<E> {
    /// `subgroup_elements` must be the full element set of H ≤ G;
    /// `generators` generate G. Coset discovery stops with an error at
    /// `point_cap`.
    pub fn build(
        identity: &E,
        generators: &[E],
        subgroup_elements: &[E],
        point_cap: usize,
    ) -> Result<Self> {
        let subgroup: BTreeSet<E> = subgroup_elements.iter().cloned().collect();
        if !subgroup.contains(identity) {
            return Err(Error::BadParameter("subgroup must contain the identity".into()));
        }
        let mut reps: Vec<E> = alloc::vec![identity.clone()];
        // images[g][i] = index of coset reps[i] * generators[g].
        let mut images: Vec<Vec<usize>> = alloc::vec![Vec::new(); generators.len()];
        let mut frontier = 0usize;
        while frontier < reps.len() {
            let r = reps[frontier].clone();
            frontier += 1;
            for (gi, g) in generators.iter().enumerate() {
                let candidate = r.compose(g);
                let cand_inv = candidate.inverse();
                let found = reps
                    .iter()
                    .position(|rep| subgroup.contains(&rep.compose(&cand_inv)));
                let idx = match found {
                    Some(i) => i,
                    None => {
                        if reps.len() >= point_cap {
                            return Err(Error::PointCap { cap: point_cap });
                        }
                        reps.push(candidate);
                        reps.len() - 1
                    }
                };
                images[gi].push(idx);
            }
        }
        let degree = reps.len();
        let gen_perms = images
            .into_iter()
            .map(|im| Permutation::from_usize_images(&im))
            .collect::<Result<Vec<_>>>()
            .map_err(|_| Error::Internal(alloc::format!(
                "coset generator image is not a bijection on {degree} points"
            )))?;
        Ok(CosetTable {
            reps,
            gen_perms,
            subgroup,
        })
    }

    pub fn degree(&self) -> usize {
        self.reps.len()
    }

    pub fn representatives(&self) -> &[E] {
        &self.reps
    }

    pub fn generator_perms(&self) -> &[Permutation] {
        &self.gen_perms
    }

    pub fn subgroup_order(&self) -> usize {
        self.subgroup.len()
    }

    /// The coset index of an arbitrary element of G.
    pub fn coset_of(&self, e: &E) -> Option<usize> {
        let inv = e.inverse();
        self.reps
            .iter()
            .position(|rep| self.subgroup.contains(&rep.compose(&inv)))
    }

    /// The permutation induced on cosets by an arbitrary element.
    pub fn perm_of(&self, e: &E) -> Result<Permutation> {
        let mut images = Vec::with_capacity(self.reps.len());
        for rep in &self.reps {
            let moved = rep.compose(e);
            let idx = self
                .coset_of(&moved)
                .ok_or_else(|| Error::Internal("element leaves the coset space".into()))?;
            images.push(idx);
        }
        Permutation::from_usize_images(&images)
    }

    /// Whether `e` fixes some coset: Hr·e = Hr for some representative,
    /// i.e. r e r⁻¹ ∈ H. Usable without any permutation realization.
    pub fn has_fixed_point(&self, e: &E) -> bool {
        self.reps
            .iter()
            .any(|r| self.subgroup.contains(&r.compose(e).compose(&r.inverse())))
    }

    /// Enumerate the induced permutation group.
    pub fn to_action(&self, cap: usize) -> Result<Action> {
        Action::from_perm_generators(self.degree(), self.gen_perms.clone(), cap)
    }
}

/// Coset action [G : H] for a fully enumerated ambient group; verifies
/// H ⊆ G before delegating to the structural builder.
pub fn coset_action<E: GroupElement>(
    group: &Enumerated<E>,
    subgroup_generators: &[E],
    cap: usize,
) -> Result<CosetTable<E>> {
    let h = enumerate_closure(group.identity(), subgroup_generators, cap)?;
    if !group.contains_all(&h) {
        return Err(Error::NotASubgroup);
    }
    CosetTable::build(group.identity(), group.generators(), h.elements(), cap)
}

/// Block quotient of a transitive action by the orbits of a normal
/// subgroup. Returns the induced action on blocks, the kernel of that
/// action, and the blocks themselves (each sorted, listed by least
/// element).
pub fn quotient_on_blocks(
    action: &Action,
    normal_generators: &[Permutation],
    cap: usize,
) -> Result<(Action, Vec<Permutation>, Vec<Vec<usize>>)> {
    let normal = Group::new(Permutation::identity(action.degree()), normal_generators.to_vec())
        .enumerate(cap)?;
    for n in normal.elements() {
        if !action.group().contains(n) {
            return Err(Error::NotASubgroup);
        }
    }
    // Normality on generators suffices by closure.
    for g in action.group().generators() {
        let ginv = g.inverse();
        for n in normal.generators() {
            let conj = ginv.compose_checked(n)?.compose_checked(g)?;
            if !normal.contains(&conj) {
                return Err(Error::NotNormal);
            }
        }
    }
    // Blocks = orbits of N, found by BFS per point.
    let degree = action.degree();
    let mut block_of = alloc::vec![usize::MAX; degree];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for p in 0..degree {
        if block_of[p] != usize::MAX {
            continue;
        }
        let b = blocks.len();
        let mut orbit = alloc::vec![p];
        block_of[p] = b;
        let mut i = 0;
        while i < orbit.len() {
            let q = orbit[i];
            i += 1;
            for n in normal.generators() {
                let r = n.image(q);
                if block_of[r] == usize::MAX {
                    block_of[r] = b;
                    orbit.push(r);
                }
            }
        }
        orbit.sort_unstable();
        blocks.push(orbit);
    }
    if action.is_transitive() {
        let size = blocks[0].len();
        if blocks.iter().any(|b| b.len() != size) {
            return Err(Error::Internal(
                "orbits of a normal subgroup of a transitive group have unequal sizes".into(),
            ));
        }
    }
    // Induced permutation of each generator on block indices.
    let induce = |g: &Permutation| -> Result<Permutation> {
        let mut images = alloc::vec![usize::MAX; blocks.len()];
        for (b, block) in blocks.iter().enumerate() {
            images[b] = block_of[g.image(block[0])];
        }
        Permutation::from_usize_images(&images)
    };
    let induced_gens = action
        .group()
        .generators()
        .iter()
        .map(&induce)
        .collect::<Result<Vec<_>>>()?;
    let quotient = Action::from_perm_generators(blocks.len(), induced_gens, cap)?;
    let kernel: Vec<Permutation> = action
        .elements()
        .iter()
        .filter(|g| (0..degree).all(|p| block_of[g.image(p)] == block_of[p]))
        .cloned()
        .collect();
    Ok((quotient, kernel, blocks))
}

/// Outcome of the Frobenius test: kernel candidate = {identity} ∪
/// {derangements}; `kernel_closed` confirms it is a subgroup.
#[derive(Clone, Debug)]
pub struct FrobeniusInfo {
    pub is_frobenius: bool,
    pub kernel: Vec<Permutation>,
    pub kernel_closed: bool,
}

pub fn is_frobenius(action: &Action) -> Result<FrobeniusInfo> {
    if !action.is_transitive() {
        return Err(Error::BadAction("Frobenius test requires a transitive action".into()));
    }
    if action.degree() < 2 || action.stabilizer_order(0)? == 1 {
        return Err(Error::BadAction(
            "Frobenius test requires degree >= 2 and a nontrivial stabilizer".into(),
        ));
    }
    let is_frobenius = action
        .elements()
        .iter()
        .all(|g| g.is_identity() || g.fixed_points().len() <= 1);
    let kernel: Vec<Permutation> = action
        .elements()
        .iter()
        .filter(|g| g.is_identity() || g.is_derangement())
        .cloned()
        .collect();
    let kset: BTreeSet<&Permutation> = kernel.iter().collect();
    let kernel_closed = kernel
        .iter()
        .all(|a| kernel.iter().all(|b| kset.contains(&a.compose(b))));
    Ok(FrobeniusInfo {
        is_frobenius,
        kernel,
        kernel_closed,
    })
}

/// The wreath product G ≀ Z_ℓ in product action on Ω^ℓ.
///
/// Points are length-ℓ tuples over the base points, indexed
/// lexicographically with coordinate 0 most significant. Generators:
/// one copy of each base generator per coordinate, plus the cyclic
/// shift sending coordinate i to i+1 (mod ℓ).
#[derive(Clone, Debug)]
pub struct WreathAction {
    pub action: Action,
    base_degree: usize,
    ell: usize,
}

impl WreathAction {
    pub fn base_degree(&self) -> usize {
        self.base_degree
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    /// Generators of S ≀ Z_ℓ inside the wreath action, for any base
    /// subgroup S given by generators.
    pub fn lift_subgroup(&self, base_generators: &[Permutation]) -> Result<Vec<Permutation>> {
        let mut out = Vec::new();
        for g in base_generators {
            if g.degree() != self.base_degree {
                return Err(Error::DegreeMismatch {
                    left: self.base_degree,
                    right: g.degree(),
                });
            }
            for coord in 0..self.ell {
                out.push(coordinate_copy(self.base_degree, self.ell, g, coord)?);
            }
        }
        out.push(shift_perm(self.base_degree, self.ell)?);
        Ok(out)
    }
}

fn tuples(base_degree: usize, ell: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = base_degree.pow(ell as u32);
    (0..total).map(move |mut idx| {
        let mut t = alloc::vec![0usize; ell];
        for i in (0..ell).rev() {
            t[i] = idx % base_degree;
            idx /= base_degree;
        }
        t
    })
}

fn tuple_index(base_degree: usize, t: &[usize]) -> usize {
    t.iter().fold(0, |acc, &c| acc * base_degree + c)
}

fn coordinate_copy(
    base_degree: usize,
    ell: usize,
    g: &Permutation,
    coord: usize,
) -> Result<Permutation> {
    let images: Vec<usize> = tuples(base_degree, ell)
        .map(|mut t| {
            t[coord] = g.image(t[coord]);
            tuple_index(base_degree, &t)
        })
        .collect();
    Permutation::from_usize_images(&images)
}

fn shift_perm(base_degree: usize, ell: usize) -> Result<Permutation> {
    let images: Vec<usize> = tuples(base_degree, ell)
        .map(|t| {
            let mut s = alloc::vec![0usize; ell];
            for (i, &c) in t.iter().enumerate() {
                s[(i + 1) % ell] = c;
            }
            tuple_index(base_degree, &s)
        })
        .collect();
    Permutation::from_usize_images(&images)
}

pub fn wreath_product(base: &Action, ell: usize, cap: usize) -> Result<WreathAction> {
    if ell < 2 || !is_prime_usize(ell) {
        return Err(Error::BadParameter(alloc::format!("{ell} is not a prime >= 2")));
    }
    let degree = base
        .degree()
        .checked_pow(ell as u32)
        .filter(|&d| d <= crate::perm::MAX_DEGREE)
        .ok_or(Error::DegreeTooLarge(usize::MAX))?;
    let mut gens = Vec::new();
    for g in base.group().generators() {
        for coord in 0..ell {
            gens.push(coordinate_copy(base.degree(), ell, g, coord)?);
        }
    }
    gens.push(shift_perm(base.degree(), ell)?);
    let action = Action::from_perm_generators(degree, gens, cap)?;
    Ok(WreathAction {
        action,
        base_degree: base.degree(),
        ell,
    })
}

fn is_prime_usize(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}
