//! Small named permutation groups.

use crate::error::{GroupError, Result};
use crate::group::{closure, FiniteGroupTable, Permutation, DEFAULT_CEILING};

fn cycle(n: usize, pts: &[usize]) -> Result<Permutation> {
    Permutation::from_cycles(n, &[pts.to_vec()])
}

/// `S_n` on `n` points, generated by `(1,2)` and `(1,2,…,n)`.
pub fn symmetric(n: usize) -> Result<FiniteGroupTable<Permutation>> {
    if n == 0 {
        return Err(GroupError::OutOfRange("S_0".into()));
    }
    if n == 1 {
        return closure(&[Permutation::identity(1)], 1);
    }
    let full: Vec<usize> = (1..=n).collect();
    closure(&[cycle(n, &[1, 2])?, cycle(n, &full)?], DEFAULT_CEILING)
}

/// `A_n` on `n` points, generated by the 3-cycles `(1,2,k)`.
pub fn alternating(n: usize) -> Result<FiniteGroupTable<Permutation>> {
    if n < 3 {
        return closure(&[Permutation::identity(n.max(1))], 1);
    }
    let gens = (3..=n)
        .map(|k| cycle(n, &[1, 2, k]))
        .collect::<Result<Vec<_>>>()?;
    closure(&gens, DEFAULT_CEILING)
}

/// `Z_m` as the regular action of an `m`-cycle.
pub fn cyclic(m: usize) -> Result<FiniteGroupTable<Permutation>> {
    if m == 0 {
        return Err(GroupError::OutOfRange("Z_0".into()));
    }
    let full: Vec<usize> = (1..=m).collect();
    let gen = if m == 1 { Permutation::identity(1) } else { cycle(m, &full)? };
    closure(&[gen], DEFAULT_CEILING)
}

pub fn klein4() -> Result<FiniteGroupTable<Permutation>> {
    closure(
        &[
            Permutation::parse_cycles(4, "(1,2)(3,4)")?,
            Permutation::parse_cycles(4, "(1,3)(2,4)")?,
        ],
        DEFAULT_CEILING,
    )
}

/// Dihedral group of order 8 acting on the vertices of a square.
pub fn dihedral8() -> Result<FiniteGroupTable<Permutation>> {
    closure(
        &[
            Permutation::parse_cycles(4, "(1,2,3,4)")?,
            Permutation::parse_cycles(4, "(1,3)")?,
        ],
        DEFAULT_CEILING,
    )
}

/// Quaternion group in its regular representation on 8 points.
pub fn quaternion8() -> Result<FiniteGroupTable<Permutation>> {
    // points 0..8 encode sign·unit as 2·unit + sign, unit ∈ {1, i, j, k}
    fn unit_mul(a: usize, b: usize) -> (usize, bool) {
        // returns (unit, negate)
        const T: [[(usize, bool); 4]; 4] = [
            [(0, false), (1, false), (2, false), (3, false)],
            [(1, false), (0, true), (3, false), (2, true)],
            [(2, false), (3, true), (0, true), (1, false)],
            [(3, false), (2, false), (1, true), (0, true)],
        ];
        T[a][b]
    }
    let right_mul = |by: usize| -> Result<Permutation> {
        let images: Vec<usize> = (0..8)
            .map(|p| {
                let (unit, neg) = (p / 2, p % 2 == 1);
                let (u, flip) = unit_mul(unit, by);
                2 * u + usize::from(neg ^ flip) + 1
            })
            .collect();
        Permutation::from_images(&images)
    };
    closure(&[right_mul(1)?, right_mul(2)?], DEFAULT_CEILING)
}
