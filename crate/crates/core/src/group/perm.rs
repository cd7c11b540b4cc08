use std::fmt;

use crate::error::{GroupError, Result};
use crate::group::GroupElement;

/// A permutation of `{1, …, degree}`, stored 0-based.
///
/// Products follow the "apply the left factor first" convention, so
/// `a.mul(&b)` sends `i` to `b(a(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u16]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let degree = images.len();
        if degree == 0 || degree > u16::MAX as usize {
            return Err(GroupError::InvalidPermutation(format!(
                "degree {degree} out of range"
            )));
        }
        let mut seen = vec![false; degree];
        let mut out = Vec::with_capacity(degree);
        for &img in images {
            if img == 0 || img > degree || seen[img - 1] {
                return Err(GroupError::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 1..={degree}"
                )));
            }
            seen[img - 1] = true;
            out.push((img - 1) as u16);
        }
        Ok(Permutation {
            images: out.into_boxed_slice(),
        })
    }

    pub(crate) fn from_zero_based(images: Vec<u16>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| v as usize == i)
        });
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// Builds a permutation from 1-based disjoint (or overlapping) cycles,
    /// composed left to right.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut p = Permutation::identity(degree);
        for cycle in cycles {
            let mut images: Vec<u16> = (0..degree as u16).collect();
            let mut seen = vec![false; degree];
            for (k, &pt) in cycle.iter().enumerate() {
                if pt == 0 || pt > degree || seen[pt - 1] {
                    return Err(GroupError::InvalidPermutation(format!(
                        "bad cycle {cycle:?} for degree {degree}"
                    )));
                }
                seen[pt - 1] = true;
                let next = cycle[(k + 1) % cycle.len()];
                images[pt - 1] = (next - 1) as u16;
            }
            p = p.mul(&Permutation::from_zero_based(images));
        }
        Ok(p)
    }

    /// Parses cycle notation such as `(1,2)(3,4)`, `(1 2 3)` or `()`.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Self> {
        let bad = || GroupError::InvalidPermutation(format!("cannot parse cycle notation {text:?}"));
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let inner_end = rest.find(')').ok_or_else(bad)?;
            if !rest.starts_with('(') {
                return Err(bad());
            }
            let inner = &rest[1..inner_end];
            let pts = inner
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            if !pts.is_empty() {
                cycles.push(pts);
            }
            rest = rest[inner_end + 1..].trim_start();
        }
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 1-based point.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1] as usize + 1
    }

    /// 1-based image array.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&v| v as usize + 1).collect()
    }

    /// Disjoint cycles of length ≥ 2, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x] as usize;
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Sorted multiset of cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let moved: usize = self.cycles().iter().map(Vec::len).sum();
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.extend(std::iter::repeat_n(1, self.degree() - moved));
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    pub fn order(&self) -> usize {
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 { a } else { gcd(b, a % b) }
        }
        self.cycles()
            .iter()
            .map(Vec::len)
            .fold(1, |acc, l| acc / gcd(acc, l) * l)
    }
}

impl GroupElement for Permutation {
    type Key = Vec<u16>;

    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    fn inv(&self) -> Self {
        let mut out = vec![0u16; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            out[img as usize] = i as u16;
        }
        Permutation {
            images: out.into_boxed_slice(),
        }
    }

    fn identity_like(&self) -> Self {
        Permutation::identity(self.degree())
    }

    fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.degree() == other.degree() {
            Ok(())
        } else {
            Err(GroupError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            })
        }
    }

    fn key(&self) -> Vec<u16> {
        self.images.to_vec()
    }

    fn render(&self) -> serde_json::Value {
        serde_json::Value::from(self.images())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    #[test]
    fn compose_applies_left_first() {
        let a = cyc(3, "(1,2)");
        let b = cyc(3, "(2,3)");
        assert_eq!(a.mul(&b), cyc(3, "(1,3,2)"));
        assert_eq!(a.mul(&Permutation::identity(3)), a);
    }

    #[test]
    fn inverse_reverses_cycle() {
        let p = cyc(4, "(1,2,3,4)");
        assert_eq!(p.inv(), cyc(4, "(1,4,3,2)"));
        assert!(p.mul(&p.inv()).is_identity());
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert!(matches!(
            a.try_mul(&b),
            Err(GroupError::DegreeMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(cyc(6, "(1 2)(3 4)(5 6)").to_string(), "(1,2)(3,4)(5,6)");
        assert_eq!(cyc(3, "()").to_string(), "()");
        assert_eq!(cyc(5, "(1,2,3)").images(), vec![2, 3, 1, 4, 5]);
        assert!(Permutation::parse_cycles(3, "(1,4)").is_err());
        assert!(Permutation::parse_cycles(3, "(1,1)").is_err());
        assert!(Permutation::parse_cycles(3, "1,2").is_err());
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
    }

    #[test]
    fn cycle_type_and_order() {
        let p = cyc(6, "(1,2,3)(4,5)");
        assert_eq!(p.cycle_type(), vec![3, 2, 1]);
        assert_eq!(p.order(), 6);
        assert!(!p.is_even());
    }
}
