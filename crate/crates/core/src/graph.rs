//! The intersection graph of a permutation group.
//!
//! Vertices are the enumerated group elements (identity first);
//! x and y are adjacent when the ratio xy⁻¹ fixes a point, which
//! happens exactly when the permutations x and y agree on some point.
//! Intersecting sets are precisely the cliques of this graph; the
//! derangement graph of the literature is its complement.

use alloc::vec::Vec;

use crate::perm::Permutation;

#[derive(Clone, Debug)]
pub struct IntersectionGraph {
    n: usize,
    words: usize,
    /// Packed adjacency rows, `words` u64 words per vertex.
    rows: Vec<u64>,
}

impl IntersectionGraph {
    /// Adjacency from the agreement criterion: x ~ y (x ≠ y) iff
    /// x(p) = y(p) for some p, which is equivalent to xy⁻¹ having a
    /// fixed point.
    pub fn from_elements(elements: &[Permutation]) -> Self {
        let n = elements.len();
        let words = n.div_ceil(64);
        let mut rows = alloc::vec![0u64; n * words];
        for i in 0..n {
            for j in i + 1..n {
                let agree = elements[i]
                    .images()
                    .iter()
                    .zip(elements[j].images())
                    .any(|(a, b)| a == b);
                if agree {
                    rows[i * words + j / 64] |= 1 << (j % 64);
                    rows[j * words + i / 64] |= 1 << (i % 64);
                }
            }
        }
        IntersectionGraph { n, words, rows }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.rows[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    pub fn degree_of(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub(crate) fn row(&self, i: usize) -> &[u64] {
        &self.rows[i * self.words..(i + 1) * self.words]
    }

    /// Neighbors of a vertex as a sorted index list.
    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for (w, &bits) in self.row(i).iter().enumerate() {
            let mut b = bits;
            while b != 0 {
                let t = b.trailing_zeros() as usize;
                out.push(w * 64 + t);
                b &= b - 1;
            }
        }
        out
    }

    /// The induced subgraph on a vertex subset, with the index map
    /// back to the original vertices.
    pub fn induced(&self, vertices: &[usize]) -> (IntersectionGraph, Vec<usize>) {
        let n = vertices.len();
        let words = n.div_ceil(64);
        let mut rows = alloc::vec![0u64; n * words];
        for (a, &va) in vertices.iter().enumerate() {
            for (b, &vb) in vertices.iter().enumerate().skip(a + 1) {
                if self.adjacent(va, vb) {
                    rows[a * words + b / 64] |= 1 << (b % 64);
                    rows[b * words + a / 64] |= 1 << (a % 64);
                }
            }
        }
        (IntersectionGraph { n, words, rows }, vertices.to_vec())
    }
}
