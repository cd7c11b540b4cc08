use rustc_hash::FxHashSet;

use crate::error::{GroupError, Result};
use crate::gf2::symplectic::{form_bits, sp_group};
use crate::gf2::GF2Matrix;
use crate::group::{closure, GroupElement, Permutation};

/// A quadratic refinement `q` of ω, tabulated on all `2^{2g}` vectors
/// (bit `x` of `values` holds `q(x)`), `g ≤ 3`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct QuadraticRefinement {
    g: u8,
    values: u64,
}

impl QuadraticRefinement {
    /// The refinement taking the given values on `e₁, …, e_{2g}`.
    pub fn from_basis_values(g: usize, basis_values: u8) -> Result<Self> {
        if g == 0 || g > 3 {
            return Err(GroupError::OutOfRange(format!("genus {g} outside 1..=3")));
        }
        let size = 1usize << (2 * g);
        let mut values = 0u64;
        for x in 1..size {
            let k = x.trailing_zeros();
            let y = x & (x - 1);
            let qy = (values >> y) & 1;
            let bit = qy ^ ((basis_values >> k) & 1) as u64 ^ form_bits(y as u8, 1 << k) as u64;
            values |= bit << x;
        }
        Ok(QuadraticRefinement { g: g as u8, values })
    }

    pub fn genus(&self) -> usize {
        self.g as usize
    }

    pub fn value(&self, x: u8) -> u8 {
        ((self.values >> x) & 1) as u8
    }

    pub fn table(&self) -> u64 {
        self.values
    }

    fn size(&self) -> usize {
        1 << (2 * self.g)
    }

    /// `q(0) = 0` and `q(x + y) = q(x) + q(y) + ω(x, y)` for all pairs.
    pub fn is_refinement(&self) -> bool {
        let n = self.size();
        self.value(0) == 0
            && (0..n).all(|x| {
                (0..n).all(|y| {
                    let (x, y) = (x as u8, y as u8);
                    self.value(x ^ y) == self.value(x) ^ self.value(y) ^ form_bits(x, y)
                })
            })
    }

    /// 0 when `q` vanishes on more than half of all vectors, else 1.
    pub fn arf(&self) -> u8 {
        let zeros = (0..self.size()).filter(|&x| self.value(x as u8) == 0).count();
        if 2 * zeros > self.size() {
            0
        } else {
            1
        }
    }

    /// `(M·q)(x) = q(M⁻¹x)`.
    pub fn act(&self, m: &GF2Matrix) -> Result<QuadraticRefinement> {
        if m.dim() != 2 * self.genus() {
            return Err(GroupError::DegreeMismatch { left: m.dim(), right: 2 * self.genus() });
        }
        let m_inv = m
            .try_inverse()
            .ok_or_else(|| GroupError::InvalidMatrix("singular matrix".into()))?;
        let mut values = 0u64;
        for x in 0..self.size() {
            values |= (self.value(m_inv.apply_bits(x as u8)) as u64) << x;
        }
        Ok(QuadraticRefinement { g: self.g, values })
    }
}

/// All `2^{2g}` refinements, ordered by their values on the basis.
pub fn quadratic_refinements(g: usize) -> Result<Vec<QuadraticRefinement>> {
    if g == 0 || g > 3 {
        return Err(GroupError::OutOfRange(format!("genus {g} outside 1..=3")));
    }
    (0..(1u16 << (2 * g)))
        .map(|a| QuadraticRefinement::from_basis_values(g, a as u8))
        .collect()
}

/// Permutation of `forms` induced by `m` (1-based positions).
pub fn refinement_permutation(
    m: &GF2Matrix,
    forms: &[QuadraticRefinement],
) -> Result<Permutation> {
    let mut images = Vec::with_capacity(forms.len());
    for q in forms {
        let moved = q.act(m)?;
        let pos = forms.iter().position(|f| *f == moved).ok_or_else(|| {
            GroupError::InvalidMatrix("matrix does not preserve the chosen forms".into())
        })?;
        images.push(pos + 1);
    }
    Permutation::from_images(&images)
}

/// Sp(2g, 𝔽₂) acting on one Arf class of refinements.
#[derive(Clone, Debug)]
pub struct RefinementIso {
    pub g: usize,
    pub arf_class: u8,
    pub forms: Vec<QuadraticRefinement>,
    pub group_order: usize,
    pub image_order: usize,
    pub injective: bool,
    pub homomorphism: bool,
    /// Image of each group generator.
    pub generator_images: Vec<(GF2Matrix, Permutation)>,
}

impl RefinementIso {
    /// Faithful with full image `S_k`, `k = forms.len()`.
    pub fn is_isomorphism(&self) -> bool {
        let k_factorial: usize = (1..=self.forms.len()).product();
        self.injective && self.homomorphism && self.image_order == self.group_order
            && self.image_order == k_factorial
    }
}

/// Sp(2,𝔽₂) on the 3 even refinements, Sp(4,𝔽₂) on the 6 odd ones.
pub fn iso_to_symmetric(g: usize, ceiling: usize) -> Result<RefinementIso> {
    let arf_class = match g {
        1 => 0,
        2 => 1,
        _ => return Err(GroupError::OutOfRange(format!("genus {g} not in {{1, 2}}"))),
    };
    let sp = sp_group(g, ceiling)?;
    let forms: Vec<QuadraticRefinement> = quadratic_refinements(g)?
        .into_iter()
        .filter(|q| q.arf() == arf_class)
        .collect();
    let images: Vec<Permutation> = sp
        .elements()
        .iter()
        .map(|m| refinement_permutation(m, &forms))
        .collect::<Result<_>>()?;
    let homomorphism = sp.elements().iter().zip(&images).all(|(a, pa)| {
        sp.generators().iter().all(|s| {
            let ps = refinement_permutation(s, &forms).expect("generator preserves forms");
            let product = sp.position(&a.mul(s)).expect("closed");
            images[product] == pa.mul(&ps)
        })
    });
    let injective = images.iter().collect::<FxHashSet<_>>().len() == images.len();
    let generator_images: Vec<(GF2Matrix, Permutation)> = sp
        .generators()
        .iter()
        .map(|s| Ok((*s, refinement_permutation(s, &forms)?)))
        .collect::<Result<_>>()?;
    let image_gens: Vec<Permutation> = generator_images.iter().map(|(_, p)| p.clone()).collect();
    let image_order = closure(&image_gens, ceiling)?.order();
    Ok(RefinementIso {
        g,
        arf_class,
        forms,
        group_order: sp.order(),
        image_order,
        injective,
        homomorphism,
        generator_images,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::DEFAULT_CEILING;

    // Brute-force oracle: every function on 𝔽₂^{2g} with the refinement property.
    fn brute_force_refinements(g: usize) -> Vec<u64> {
        let size = 1usize << (2 * g);
        assert!(size <= 16);
        (0u64..(1 << size))
            .filter(|&t| {
                (0..size).all(|x| {
                    (0..size).all(|y| {
                        let q = |z: usize| ((t >> z) & 1) as u8;
                        q(x ^ y) == q(x) ^ q(y) ^ form_bits(x as u8, y as u8)
                    })
                })
            })
            .collect()
    }

    #[test]
    fn counts_match_brute_force() {
        for g in 1..=2 {
            let mut ours: Vec<u64> =
                quadratic_refinements(g).unwrap().iter().map(|q| q.table()).collect();
            ours.sort();
            assert_eq!(ours, brute_force_refinements(g));
        }
    }

    #[test]
    fn arf_counts() {
        for (g, even, odd) in [(1, 3, 1), (2, 10, 6), (3, 36, 28)] {
            let qs = quadratic_refinements(g).unwrap();
            assert_eq!(qs.len(), 1 << (2 * g));
            assert!(qs.iter().all(QuadraticRefinement::is_refinement));
            assert_eq!(qs.iter().filter(|q| q.arf() == 0).count(), even);
            assert_eq!(qs.iter().filter(|q| q.arf() == 1).count(), odd);
        }
    }

    #[test]
    fn zero_on_basis_is_even_in_genus_one() {
        let q = QuadraticRefinement::from_basis_values(1, 0).unwrap();
        // q(0)=q(e1)=q(e2)=0, q(e1+e2)=1
        assert_eq!(q.table(), 0b1000);
        assert_eq!(q.arf(), 0);
    }

    #[test]
    fn identity_fixes_every_refinement() {
        let id = GF2Matrix::identity(4).unwrap();
        for q in quadratic_refinements(2).unwrap() {
            assert_eq!(q.act(&id).unwrap(), q);
        }
    }

    #[test]
    fn refinement_isomorphisms() {
        let iso1 = iso_to_symmetric(1, DEFAULT_CEILING).unwrap();
        assert_eq!(iso1.forms.len(), 3);
        assert_eq!(iso1.image_order, 6);
        assert!(iso1.is_isomorphism());
        let iso2 = iso_to_symmetric(2, DEFAULT_CEILING).unwrap();
        assert_eq!(iso2.forms.len(), 6);
        assert_eq!(iso2.image_order, 720);
        assert!(iso2.is_isomorphism());
        assert!(iso_to_symmetric(3, DEFAULT_CEILING).is_err());
    }
}
