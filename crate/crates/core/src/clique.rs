//! Exact maximum-clique search on the intersection graph.
//!
//! Branch and bound over packed bitsets with a greedy-coloring bound
//! (color classes built per node; the class index of a vertex bounds
//! any clique through it). No external solvers: the graphs here are
//! desk scale, at most a few thousand vertices.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::IntersectionGraph;

/// Default refusal threshold for exact clique search.
pub const DEFAULT_CLIQUE_CAP: usize = 2500;

fn bits_of(set: &[u64]) -> Vec<usize> {
    let mut out = Vec::new();
    for (w, &bits) in set.iter().enumerate() {
        let mut b = bits;
        while b != 0 {
            out.push(w * 64 + b.trailing_zeros() as usize);
            b &= b - 1;
        }
    }
    out
}

fn popcount(set: &[u64]) -> usize {
    set.iter().map(|w| w.count_ones() as usize).sum()
}

fn first_bit(set: &[u64]) -> Option<usize> {
    set.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
}

struct Solver<'a> {
    g: &'a IntersectionGraph,
    best: Vec<usize>,
}

impl<'a> Solver<'a> {
    /// Greedy coloring of the candidate set: returns vertices grouped
    /// by color class, with `colors[i]` the 1-based class of
    /// `order[i]`; classes are filled in vertex-index order.
    fn color_sort(&self, p: &[u64]) -> (Vec<usize>, Vec<usize>) {
        let mut remaining = p.to_vec();
        let mut order = Vec::new();
        let mut colors = Vec::new();
        let mut class = 0usize;
        while popcount(&remaining) > 0 {
            class += 1;
            let mut available = remaining.clone();
            while let Some(v) = first_bit(&available) {
                order.push(v);
                colors.push(class);
                remaining[v / 64] &= !(1u64 << (v % 64));
                // Exclude v and its neighbors from this class.
                available[v / 64] &= !(1u64 << (v % 64));
                for (w, a) in available.iter_mut().enumerate() {
                    *a &= !self.g.row(v)[w];
                }
            }
        }
        (order, colors)
    }

    fn expand(&mut self, r: &mut Vec<usize>, p: &[u64]) {
        let (order, colors) = self.color_sort(p);
        let mut p = p.to_vec();
        for i in (0..order.len()).rev() {
            if r.len() + colors[i] <= self.best.len() {
                return;
            }
            let v = order[i];
            r.push(v);
            let mut sub = p.clone();
            for (w, s) in sub.iter_mut().enumerate() {
                *s &= self.g.row(v)[w];
            }
            if popcount(&sub) == 0 {
                if r.len() > self.best.len() {
                    self.best = r.clone();
                }
            } else {
                self.expand(r, &sub);
            }
            r.pop();
            p[v / 64] &= !(1u64 << (v % 64));
        }
    }
}

/// Exact maximum clique; the returned vertex list is sorted. `seed` is
/// a known clique used to warm-start the bound (it must actually be a
/// clique; debug-asserted).
pub fn max_clique_with_seed(
    g: &IntersectionGraph,
    cap: usize,
    seed: &[usize],
) -> Result<Vec<usize>> {
    if g.vertex_count() > cap {
        return Err(Error::CliqueCap {
            cap,
            vertices: g.vertex_count(),
        });
    }
    #[cfg(debug_assertions)]
    for (a, &va) in seed.iter().enumerate() {
        for &vb in seed.iter().skip(a + 1) {
            debug_assert!(g.adjacent(va, vb), "seed is not a clique");
        }
    }
    let n = g.vertex_count();
    let words = n.div_ceil(64);
    let mut all = alloc::vec![u64::MAX; words];
    if n % 64 != 0 {
        all[words - 1] = (1u64 << (n % 64)) - 1;
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut solver = Solver {
        g,
        best: seed.to_vec(),
    };
    let mut r = Vec::new();
    solver.expand(&mut r, &all);
    let mut best = solver.best;
    best.sort_unstable();
    Ok(best)
}

pub fn max_clique(g: &IntersectionGraph, cap: usize) -> Result<Vec<usize>> {
    max_clique_with_seed(g, cap, &[])
}

/// All cliques of exactly `size` vertices, in lexicographic vertex
/// order, stopping after `limit` cliques. The boolean is true when the
/// enumeration was truncated (so "all maximum sets" claims must
/// downgrade to "not computed").
pub fn cliques_of_size(
    g: &IntersectionGraph,
    size: usize,
    limit: usize,
) -> (Vec<Vec<usize>>, bool) {
    let n = g.vertex_count();
    let words = n.div_ceil(64);
    let mut out = Vec::new();
    let mut truncated = false;
    if size == 0 {
        return (out, false);
    }
    let mut all = alloc::vec![u64::MAX; words.max(1)];
    if n % 64 != 0 {
        all[words.max(1) - 1] = if n == 0 { 0 } else { (1u64 << (n % 64)) - 1 };
    }
    let mut r: Vec<usize> = Vec::new();
    extend(g, &mut r, &all, size, limit, &mut out, &mut truncated);
    (out, truncated)
}

fn extend(
    g: &IntersectionGraph,
    r: &mut Vec<usize>,
    p: &[u64],
    size: usize,
    limit: usize,
    out: &mut Vec<Vec<usize>>,
    truncated: &mut bool,
) {
    if *truncated {
        return;
    }
    if r.len() == size {
        if out.len() >= limit {
            *truncated = true;
            return;
        }
        out.push(r.clone());
        return;
    }
    if r.len() + popcount(p) < size {
        return;
    }
    for v in bits_of(p) {
        // Candidates after v only: lexicographic, duplicate-free.
        let mut sub = p.to_vec();
        for (w, s) in sub.iter_mut().enumerate() {
            *s &= g.row(v)[w];
        }
        for (w, s) in sub.iter_mut().enumerate() {
            if w < v / 64 {
                *s = 0;
            } else if w == v / 64 {
                // Keep only bits strictly above v in this word.
                *s &= u64::MAX.checked_shl(v as u32 % 64 + 1).unwrap_or(0);
            }
        }
        r.push(v);
        extend(g, r, &sub, size, limit, out, truncated);
        r.pop();
        if *truncated {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::Action;
    use crate::perm::Permutation;

    fn p(text: &str, degree: usize) -> Permutation {
        Permutation::parse_cycles(text, degree).unwrap()
    }

    fn sym(n: usize) -> Action {
        let mut gens = alloc::vec![];
        if n >= 2 {
            gens.push(p("(0 1)", n));
            let cycle: alloc::string::String = {
                use core::fmt::Write;
                let mut s = alloc::string::String::from("(");
                for i in 0..n {
                    if i > 0 {
                        s.push(' ');
                    }
                    write!(s, "{i}").unwrap();
                }
                s.push(')');
                s
            };
            gens.push(Permutation::parse_cycles(&cycle, n).unwrap());
        }
        Action::from_perm_generators(n, gens, 100_000).unwrap()
    }

    #[test]
    fn max_clique_of_sym3_and_sym4() {
        // Sym(n) natural is EKR: max intersecting = (n-1)!.
        for (n, expect) in [(3usize, 2usize), (4, 6)] {
            let a = sym(n);
            let g = IntersectionGraph::from_elements(a.elements());
            let c = max_clique(&g, DEFAULT_CLIQUE_CAP).unwrap();
            assert_eq!(c.len(), expect);
            for (i, &u) in c.iter().enumerate() {
                for &v in c.iter().skip(i + 1) {
                    assert!(g.adjacent(u, v));
                }
            }
        }
    }

    #[test]
    fn clique_cap_is_refused() {
        let a = sym(4);
        let g = IntersectionGraph::from_elements(a.elements());
        assert!(matches!(
            max_clique(&g, 10),
            Err(Error::CliqueCap { cap: 10, vertices: 24 })
        ));
    }

    #[test]
    fn seed_does_not_change_answer() {
        let a = sym(4);
        let g = IntersectionGraph::from_elements(a.elements());
        // Stabilizer of 0 as a warm-start clique.
        let seed: Vec<usize> = a
            .elements()
            .iter()
            .enumerate()
            .filter(|(_, e)| e.image(0) == 0)
            .map(|(i, _)| i)
            .collect();
        assert_eq!(seed.len(), 6);
        let c = max_clique_with_seed(&g, DEFAULT_CLIQUE_CAP, &seed).unwrap();
        assert_eq!(c.len(), 6);
    }

    #[test]
    fn enumerate_max_cliques_of_sym3() {
        // Sym(3): maximum intersecting sets are the 9 cosets of the
        // three point stabilizers (strict-EKR; 3 stabilizers x 3 cosets,
        // all distinct since |G|/|G_w| = 3 and cosets of different
        // stabilizers can coincide only if ... they don't at size 2: a
        // 2-subset {x,y} is intersecting iff xy^-1 fixes a point; count
        // below is the oracle).
        let a = sym(3);
        let g = IntersectionGraph::from_elements(a.elements());
        let (cliques, truncated) = cliques_of_size(&g, 2, 1000);
        assert!(!truncated);
        // Oracle: count agreeing pairs directly.
        let mut count = 0;
        for i in 0..6 {
            for j in i + 1..6 {
                if g.adjacent(i, j) {
                    count += 1;
                }
            }
        }
        assert_eq!(cliques.len(), count);
        // Truncation flag honest.
        let (some, truncated) = cliques_of_size(&g, 2, 3);
        assert_eq!(some.len(), 3);
        assert!(truncated);
    }

    #[test]
    fn random_graph_brute_force_agreement() {
        // Compare with brute force over all subsets on small random
        // groups of permutations (the graphs are on <= 16 vertices).
        let mut state = 7u64;
        let mut rand = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            state >> 33
        };
        for _ in 0..20 {
            // Random set of 10 permutations of degree 5 (dedup keeps it <= 10).
            let mut els = alloc::vec![Permutation::identity(5)];
            while els.len() < 10 {
                let mut imgs: Vec<usize> = (0..5).collect();
                for i in (1..5).rev() {
                    let j = (rand() % (i as u64 + 1)) as usize;
                    imgs.swap(i, j);
                }
                let perm = Permutation::from_usize_images(&imgs).unwrap();
                if !els.contains(&perm) {
                    els.push(perm);
                }
            }
            let g = IntersectionGraph::from_elements(&els);
            let smart = max_clique(&g, 100).unwrap().len();
            // Brute force over all 2^10 subsets.
            let mut brute = 0usize;
            for mask in 0u32..1 << els.len() {
                let verts: Vec<usize> =
                    (0..els.len()).filter(|&i| mask >> i & 1 == 1).collect();
                let ok = verts
                    .iter()
                    .enumerate()
                    .all(|(a, &u)| verts.iter().skip(a + 1).all(|&v| g.adjacent(u, v)));
                if ok {
                    brute = brute.max(verts.len());
                }
            }
            assert_eq!(smart, brute);
        }
    }
}
