//! Permutations of `{0..n-1}` in image-list form.
//!
//! Conventions, fixed once for the whole crate:
//! * points are 0-based;
//! * composition is apply-left-first (a right action), so
//!   `compose(a, b)` sends `w` to `b[a[w]]`;
//! * cycle notation is 0-based, the identity prints as `"()"`.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::group::GroupElement;

/// Largest supported degree; points are stored as `u16`.
pub const MAX_DEGREE: usize = 65535;

/// A bijection of `{0..n-1}`, immutable after construction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= MAX_DEGREE);
        Permutation {
            images: (0..degree as u32).map(|i| i as u16).collect(),
        }
    }

    /// Builds a permutation from its image list, validating bijectivity.
    pub fn from_images(images: Vec<u16>) -> Result<Self> {
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(n));
        }
        let mut seen = vec![false; n];
        for &im in &images {
            let im = im as usize;
            if im >= n || seen[im] {
                return Err(Error::NotABijection(alloc::format!(
                    "value {im} repeated or out of range for degree {n}"
                )));
            }
            seen[im] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds from usize images; convenience for action realizations.
    pub fn from_usize_images(images: &[usize]) -> Result<Self> {
        if images.iter().any(|&i| i > MAX_DEGREE) {
            return Err(Error::DegreeTooLarge(images.len()));
        }
        Self::from_images(images.iter().map(|&i| i as u16).collect())
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    /// `w ^ (ab) = (w^a)^b`: applies `self` first, then `other`.
    pub fn compose_checked(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(GroupElement::compose(self, other))
    }

    pub fn inverse(&self) -> Self {
        GroupElement::inverse(self)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| i == im as usize)
    }

    /// All points fixed by the permutation; empty for a derangement.
    pub fn fixed_points(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|&(i, &im)| i == im as usize)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn has_fixed_point(&self) -> bool {
        self.images.iter().enumerate().any(|(i, &im)| i == im as usize)
    }

    pub fn is_derangement(&self) -> bool {
        !self.has_fixed_point()
    }

    /// Disjoint cycles of length >= 2, each rotated to start at its least
    /// point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.image(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut p = self.image(start);
            while p != start {
                seen[p] = true;
                cyc.push(p);
                p = self.image(p);
            }
            out.push(cyc);
        }
        out
    }

    /// Least `m >= 1` with `a^m = identity`: the lcm of the cycle lengths.
    pub fn element_order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Parses 0-based disjoint-cycle notation, e.g. `"(0 1 2)(3 4)"`.
    /// `"()"` is the identity. Points may be separated by spaces or commas.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        if degree > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(degree));
        }
        let mut images: Vec<u16> = (0..degree as u32).map(|i| i as u16).collect();
        let mut used = vec![false; degree];
        let s = text.trim();
        let mut rest = s;
        if rest.is_empty() {
            return Err(Error::Parse(String::from("empty input")));
        }
        while !rest.is_empty() {
            rest = rest.trim_start();
            if rest.is_empty() {
                break;
            }
            if !rest.starts_with('(') {
                return Err(Error::Parse(alloc::format!(
                    "expected '(' at \"{}\"",
                    truncate(rest)
                )));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse(alloc::format!("unclosed cycle at \"{}\"", truncate(rest))))?;
            let body = &rest[1..close];
            rest = &rest[close + 1..];
            let points: Vec<usize> = body
                .split(|c: char| c == ' ' || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(alloc::format!("bad point token \"{t}\"")))
                })
                .collect::<Result<_>>()?;
            if points.len() == 1 {
                return Err(Error::Parse(alloc::format!(
                    "singleton cycle ({})",
                    points[0]
                )));
            }
            for &p in &points {
                if p >= degree {
                    return Err(Error::Parse(alloc::format!(
                        "point {p} >= degree {degree}"
                    )));
                }
                if used[p] {
                    return Err(Error::Parse(alloc::format!("repeated point {p}")));
                }
                used[p] = true;
            }
            for w in points.windows(2) {
                images[w[0]] = w[1] as u16;
            }
            if let (Some(&first), Some(&last)) = (points.first(), points.last()) {
                images[last] = first as u16;
            }
        }
        Permutation::from_images(images)
    }

    /// Disjoint-cycle rendering; the inverse of [`Permutation::parse_cycles`]
    /// up to the degree argument.
    pub fn format_cycles(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return String::from("()");
        }
        let mut out = String::new();
        for cyc in cycles {
            out.push('(');
            for (i, p) in cyc.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                out.push_str(&alloc::format!("{p}"));
            }
            out.push(')');
        }
        out
    }
}

impl GroupElement for Permutation {
    fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&im| other.images[im as usize])
                .collect(),
        }
    }

    fn inverse(&self) -> Self {
        let mut images = vec![0u16; self.degree()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im as usize] = i as u16;
        }
        Permutation { images }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self.format_cycles())
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn truncate(s: &str) -> &str {
    &s[..s.len().min(16)]
}
