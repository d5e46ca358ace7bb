//! Exact nonnegative rationals for the ratio |S|/|G_ω| and the bound
//! checks around it. Verdicts must never go through floating point.

use core::cmp::Ordering;
use core::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ratio {
    num: u64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Ratio {
    /// Reduced fraction. Panics on a zero denominator; every denominator
    /// in this crate is a group or stabilizer order.
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den).max(1);
        Ratio {
            num: num / g,
            den: den / g,
        }
    }

    pub fn from_integer(n: u64) -> Self {
        Ratio { num: n, den: 1 }
    }

    pub fn numer(&self) -> u64 {
        self.num
    }

    pub fn denom(&self) -> u64 {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    /// Decimal rendering for display layers only (not used in verdicts).
    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        // Cross-multiply in u128: no overflow for any u64 pairs.
        let lhs = self.num as u128 * other.den as u128;
        let rhs = other.num as u128 * self.den as u128;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_and_order() {
        assert_eq!(Ratio::new(100, 20), Ratio::from_integer(5));
        assert_eq!(Ratio::new(48, 12).numer(), 4);
        assert!(Ratio::new(4, 1) < Ratio::new(20, 3)); // 4 < 20/3
        assert!(Ratio::new(7, 2) > Ratio::new(10, 3));
        assert_eq!(Ratio::new(10, 3).cmp(&Ratio::new(20, 6)), Ordering::Equal);
    }

    #[test]
    fn display() {
        assert_eq!(alloc::format!("{}", Ratio::new(5, 1)), "5");
        assert_eq!(alloc::format!("{}", Ratio::new(29, 3)), "29/3");
    }
}
