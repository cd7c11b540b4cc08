use rustc_hash::FxHashSet;
use serde::Serialize;

use crate::error::{GroupError, Result};
use crate::gf2::{GF2Matrix, GF2Vector};
use crate::group::{closure, orbit_stabilizer, ConjugationAction, FiniteGroupTable};

#[inline]
pub(crate) fn form_bits(u: u8, v: u8) -> u8 {
    let swapped = ((v & 0x55) << 1) | ((v & 0xAA) >> 1);
    ((u & swapped).count_ones() & 1) as u8
}

/// ω(u, v) = Σ (u_{2i-1} v_{2i} + u_{2i} v_{2i-1}) mod 2.
pub fn symplectic_form(u: &GF2Vector, v: &GF2Vector) -> Result<u8> {
    if u.dim() != v.dim() {
        return Err(GroupError::DegreeMismatch {
            left: u.dim(),
            right: v.dim(),
        });
    }
    Ok(form_bits(u.bits(), v.bits()))
}

/// The transvection `x ↦ x + ω(x, v)·v`.
pub fn transvection(v: &GF2Vector) -> Result<GF2Matrix> {
    if v.is_zero() {
        return Err(GroupError::InvalidVector("transvection of the zero vector".into()));
    }
    let images: Vec<GF2Vector> = (1..=v.dim())
        .map(|i| {
            let e = GF2Vector::basis(v.dim(), i).expect("index in range");
            if form_bits(e.bits(), v.bits()) == 1 {
                e.add(v)
            } else {
                e
            }
        })
        .collect();
    GF2Matrix::from_images(&images)
}

/// All `2^{2g} − 1` transvections, ordered by their vector.
pub fn transvections(g: usize) -> Result<Vec<GF2Matrix>> {
    GF2Vector::nonzero(2 * g)?.iter().map(transvection).collect()
}

/// True iff the matrix preserves ω on every pair of basis vectors.
pub fn is_symplectic(m: &GF2Matrix) -> bool {
    let n = m.dim();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let (ei, ej) = (1u8 << i, 1u8 << j);
            form_bits(m.apply_bits(ei), m.apply_bits(ej)) == form_bits(ei, ej)
        })
    })
}

fn check_genus(g: usize, lo: usize, hi: usize) -> Result<()> {
    if g < lo || g > hi {
        return Err(GroupError::OutOfRange(format!("genus {g} outside {lo}..={hi}")));
    }
    Ok(())
}

/// `2^{g²} · ∏_{i=1..g} (4^i − 1)`, used as an independent check on enumeration.
pub fn sp_order_formula(g: usize) -> u128 {
    let mut order: u128 = 1u128 << (g * g);
    for i in 1..=g {
        order *= (1u128 << (2 * i)) - 1;
    }
    order
}

/// Sp(2g, 𝔽₂) as the closure of all transvections, `1 ≤ g ≤ 3`.
pub fn sp_group(g: usize, ceiling: usize) -> Result<FiniteGroupTable<GF2Matrix>> {
    check_genus(g, 1, 3)?;
    let table = closure(&transvections(g)?, ceiling)?;
    assert_eq!(
        table.order() as u128,
        sp_order_formula(g),
        "enumerated order disagrees with the order formula"
    );
    Ok(table)
}

/// First `u` in ascending bit order with ω(u, v) = 1 and ω(u, w) = 0.
pub fn witness_vector(v: &GF2Vector, w: &GF2Vector) -> Result<GF2Vector> {
    if v.dim() != w.dim() {
        return Err(GroupError::DegreeMismatch { left: v.dim(), right: w.dim() });
    }
    if v.is_zero() || w.is_zero() || v == w {
        return Err(GroupError::InvalidVector(format!(
            "witness needs distinct nonzero vectors, got {v} and {w}"
        )));
    }
    GF2Vector::nonzero(v.dim())?
        .into_iter()
        .find(|u| form_bits(u.bits(), v.bits()) == 1 && form_bits(u.bits(), w.bits()) == 0)
        .ok_or_else(|| GroupError::InvalidVector(format!("no witness for {v}, {w}")))
}

/// Number of ordered pairs `(v, w)` with ω(v, w) = 1, by brute force.
pub fn symplectic_pair_count(g: usize) -> usize {
    let n = 1u16 << (2 * g);
    (0..n)
        .flat_map(|v| (0..n).map(move |w| (v as u8, w as u8)))
        .filter(|&(v, w)| form_bits(v, w) == 1)
        .count()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpCountingReport {
    pub g: usize,
    pub pair_count: usize,
    pub pair_count_formula: usize,
    pub pair_orbit_size: usize,
    pub transitive: bool,
    pub order: usize,
    pub order_smaller: usize,
    pub order_identity_holds: bool,
    pub pair_stabilizer: usize,
}

impl SpCountingReport {
    pub fn passed(&self) -> bool {
        self.pair_count == self.pair_count_formula
            && self.transitive
            && self.order_identity_holds
            && self.pair_stabilizer == self.order_smaller
    }
}

/// Counting identities relating Sp(2g) and Sp(2g−2), `2 ≤ g ≤ 3`.
pub fn sp_counting_checks(g: usize, ceiling: usize) -> Result<SpCountingReport> {
    check_genus(g, 2, 3)?;
    let sp = sp_group(g, ceiling)?;
    let smaller = sp_group(g - 1, ceiling)?;
    let pair_count = symplectic_pair_count(g);
    let pair_count_formula = (1usize << (2 * g - 1)) * ((1usize << (2 * g)) - 1);

    // orbit of (e1, e2) under the linear action
    let start = (0b01u8, 0b10u8);
    let mut seen = FxHashSet::default();
    seen.insert(start);
    let mut queue = vec![start];
    let mut cursor = 0;
    while cursor < queue.len() {
        let (v, w) = queue[cursor];
        for s in sp.generators() {
            let next = (s.apply_bits(v), s.apply_bits(w));
            if seen.insert(next) {
                queue.push(next);
            }
        }
        cursor += 1;
    }
    let transitive =
        queue.len() == pair_count && queue.iter().all(|&(v, w)| form_bits(v, w) == 1);

    let t1 = transvection(&GF2Vector::basis(2 * g, 1)?)?;
    let t2 = transvection(&GF2Vector::basis(2 * g, 2)?)?;
    let (_, pair_stabilizer) = orbit_stabilizer(&sp, &ConjugationAction::Pair(t1, t2))?;

    Ok(SpCountingReport {
        g,
        pair_count,
        pair_count_formula,
        pair_orbit_size: queue.len(),
        transitive,
        order: sp.order(),
        order_smaller: smaller.order(),
        order_identity_holds: sp.order() == pair_count_formula * smaller.order(),
        pair_stabilizer,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{conjugacy_class, GroupElement, DEFAULT_CEILING};

    fn e(dim: usize, i: usize) -> GF2Vector {
        GF2Vector::basis(dim, i).unwrap()
    }

    #[test]
    fn form_conventions() {
        assert_eq!(symplectic_form(&e(2, 1), &e(2, 2)).unwrap(), 1);
        assert_eq!(symplectic_form(&e(4, 1), &e(4, 3)).unwrap(), 0);
        for v in GF2Vector::nonzero(6).unwrap() {
            assert_eq!(symplectic_form(&v, &v).unwrap(), 0);
        }
        assert!(symplectic_form(&e(2, 1), &e(4, 1)).is_err());
    }

    #[test]
    fn transvection_examples() {
        let t = transvection(&e(2, 1)).unwrap();
        assert_eq!(t.apply(&e(2, 2)), e(2, 1).add(&e(2, 2)));
        assert_eq!(t.apply(&e(2, 1)), e(2, 1));
        assert!(transvection(&GF2Vector::zero(4).unwrap()).is_err());
        for v in GF2Vector::nonzero(6).unwrap() {
            let t = transvection(&v).unwrap();
            assert_eq!(t.apply(&v), v);
            assert!(t.mul(&t).is_identity());
            assert!(is_symplectic(&t));
        }
    }

    #[test]
    fn non_symplectic_swap() {
        // e1 <-> e3, e2 and e4 fixed
        let m = GF2Matrix::from_images(&[e(4, 3), e(4, 2), e(4, 1), e(4, 4)]).unwrap();
        assert!(!is_symplectic(&m));
        assert!(is_symplectic(&GF2Matrix::identity(4).unwrap()));
    }

    #[test]
    fn transvection_determines_vector() {
        for g in 1..=3 {
            let ts = transvections(g).unwrap();
            let distinct: FxHashSet<_> = ts.iter().collect();
            assert_eq!(distinct.len(), ts.len());
            for (t, v) in ts.iter().zip(GF2Vector::nonzero(2 * g).unwrap()) {
                let id = GF2Matrix::identity(2 * g).unwrap();
                let image: FxHashSet<u8> = (0..(1u16 << (2 * g)))
                    .map(|x| t.apply_bits(x as u8) ^ id.apply_bits(x as u8))
                    .filter(|&y| y != 0)
                    .collect();
                assert_eq!(image.into_iter().collect::<Vec<_>>(), vec![v.bits()]);
            }
        }
    }

    #[test]
    fn small_sp_orders() {
        assert_eq!(sp_group(1, DEFAULT_CEILING).unwrap().order(), 6);
        assert_eq!(sp_group(2, DEFAULT_CEILING).unwrap().order(), 720);
        assert_eq!(sp_order_formula(3), 1_451_520);
        assert!(sp_group(0, DEFAULT_CEILING).is_err());
        assert!(sp_group(4, DEFAULT_CEILING).is_err());
    }

    #[test]
    fn conjugation_moves_transvections() {
        // M ∘ T_v ∘ M⁻¹ = T_{Mv}; in left-first products that is M⁻¹·T_v·M
        let sp4 = sp_group(2, DEFAULT_CEILING).unwrap();
        for m in sp4.elements() {
            for v in GF2Vector::nonzero(4).unwrap() {
                let lhs = m.inv().mul(&transvection(&v).unwrap()).mul(m);
                assert_eq!(lhs, transvection(&m.apply(&v)).unwrap());
            }
        }
    }

    #[test]
    fn transvection_class_is_all_transvections() {
        for g in 1..=2 {
            let sp = sp_group(g, DEFAULT_CEILING).unwrap();
            let t = transvection(&e(2 * g, 1)).unwrap();
            let mut class = conjugacy_class(&sp, &t).unwrap();
            let mut all = transvections(g).unwrap();
            class.sort();
            all.sort();
            assert_eq!(class, all);
        }
    }

    #[test]
    fn witness_examples() {
        assert_eq!(witness_vector(&e(2, 1), &e(2, 2)).unwrap(), e(2, 2));
        let u = witness_vector(&e(4, 1), &e(4, 3)).unwrap();
        assert_eq!(symplectic_form(&u, &e(4, 1)).unwrap(), 1);
        assert_eq!(symplectic_form(&u, &e(4, 3)).unwrap(), 0);
        assert!(witness_vector(&e(4, 1), &e(4, 1)).is_err());
        assert!(witness_vector(&GF2Vector::zero(4).unwrap(), &e(4, 1)).is_err());
    }

    #[test]
    fn witness_exists_for_all_distinct_pairs() {
        for g in 1..=3 {
            let vs = GF2Vector::nonzero(2 * g).unwrap();
            for v in &vs {
                for w in vs.iter().filter(|w| *w != v) {
                    assert!(witness_vector(v, w).is_ok(), "{v} {w}");
                }
            }
        }
    }

    #[test]
    fn counting_g2() {
        let r = sp_counting_checks(2, DEFAULT_CEILING).unwrap();
        assert_eq!(r.pair_count, 120);
        assert_eq!(r.order, 720);
        assert_eq!(r.order_smaller, 6);
        assert_eq!(r.pair_stabilizer, 6);
        assert!(r.passed());
        assert!(sp_counting_checks(1, DEFAULT_CEILING).is_err());
    }

    #[test]
    fn pair_count_brute_force_matches_formula() {
        assert_eq!(symplectic_pair_count(1), 6);
        assert_eq!(symplectic_pair_count(2), 120);
        assert_eq!(symplectic_pair_count(3), 2016);
    }
}
