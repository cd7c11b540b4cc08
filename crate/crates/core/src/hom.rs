//! Homomorphisms `B_n → G` into enumerated finite groups.
//!
//! A homomorphism is stored as the images of `σ₁, …, σ_{n−1}`. Validity
//! means the images satisfy the Artin relations. Because the `σ_i` are
//! pairwise conjugate in `B_n`, every image lies in the conjugacy class of
//! the image of `σ₁`; the search uses this to prune.

use std::collections::BTreeSet;

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::braid::{bkl_word, BraidWord};
use crate::error::{GroupError, Result};
use crate::group::{
    closure, conjugacy_classes, FiniteGroupTable, GroupElement, Permutation,
};

/// Default bound on `|G|` for exhaustive enumeration.
pub const DEFAULT_MAX_TARGET_ORDER: usize = 10_000;

/// Largest strand count accepted by the enumerators.
pub const MAX_STRANDS: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidHom<E: GroupElement> {
    n: usize,
    images: Vec<E>,
}

impl<E: GroupElement> BraidHom<E> {
    pub fn new(n: usize, images: Vec<E>) -> Result<Self> {
        if n < 2 {
            return Err(GroupError::OutOfRange(format!("B_{n} has no generators")));
        }
        if images.len() != n - 1 {
            return Err(GroupError::InvalidHom(format!(
                "B_{n} needs {} images, got {}",
                n - 1,
                images.len()
            )));
        }
        for x in &images[1..] {
            images[0].check_compatible(x)?;
        }
        Ok(BraidHom { n, images })
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn images(&self) -> &[E] {
        &self.images
    }

    /// Adjacent images braid, distant images commute.
    pub fn is_valid(&self) -> bool {
        let im = &self.images;
        (0..im.len()).all(|i| {
            (i + 1..im.len()).all(|j| {
                if j == i + 1 {
                    braids(&im[i], &im[j])
                } else {
                    im[i].commutes_with(&im[j])
                }
            })
        })
    }

    /// For a valid hom, the image is cyclic iff all generator images agree.
    pub fn is_cyclic(&self) -> bool {
        self.images.iter().all(|x| *x == self.images[0])
    }

    pub fn evaluate(&self, w: &BraidWord) -> Result<E> {
        if !self.is_valid() {
            return Err(GroupError::InvalidHom("evaluate on an invalid homomorphism".into()));
        }
        if w.strands() != self.n {
            return Err(GroupError::InvalidWord(format!(
                "word in B_{} evaluated on a hom from B_{}",
                w.strands(),
                self.n
            )));
        }
        let mut acc = self.images[0].identity_like();
        for &l in w.letters() {
            let x = &self.images[l.unsigned_abs() as usize - 1];
            acc = if l > 0 { acc.mul(x) } else { acc.mul(&x.inv()) };
        }
        Ok(acc)
    }

    /// Images of `ρ_{i,j}` for all `i < j`, in lexicographic order of `(i, j)`.
    pub fn bkl_images(&self) -> Result<Vec<((usize, usize), E)>> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in i + 1..=self.n {
                out.push(((i, j), self.evaluate(&bkl_word(i, j, self.n)?)?));
            }
        }
        Ok(out)
    }

    pub fn image_subgroup(&self, ceiling: usize) -> Result<FiniteGroupTable<E>> {
        closure(&self.images, ceiling)
    }

    pub fn is_surjective(&self, target: &FiniteGroupTable<E>) -> Result<bool> {
        Ok(self.image_subgroup(target.order().max(1))?.order() == target.order())
    }

    /// Pointwise conjugation `σ_i ↦ g·h(σ_i)·g⁻¹`.
    pub fn conjugate_by(&self, g: &E) -> BraidHom<E> {
        let g_inv = g.inv();
        BraidHom {
            n: self.n,
            images: self.images.iter().map(|x| g.mul(x).mul(&g_inv)).collect(),
        }
    }

    pub fn postcompose(&self, aut: &Automorphism<E>) -> Result<BraidHom<E>> {
        let images = self
            .images
            .iter()
            .map(|x| aut.apply(x))
            .collect::<Result<Vec<_>>>()?;
        BraidHom::new(self.n, images)
    }

    pub fn render(&self) -> Vec<serde_json::Value> {
        self.images.iter().map(GroupElement::render).collect()
    }

    fn require_in(&self, target: &FiniteGroupTable<E>) -> Result<()> {
        for x in &self.images {
            target.require(x)?;
        }
        Ok(())
    }
}

fn braids<E: GroupElement>(x: &E, y: &E) -> bool {
    x.mul(y).mul(x) == y.mul(x).mul(y)
}

/// A conjugacy class of homomorphisms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HomClass<E: GroupElement> {
    /// Lexicographically least conjugate tuple.
    pub representative: BraidHom<E>,
    /// Number of homomorphisms in the class.
    pub class_size: usize,
    /// Order of the image subgroup.
    pub image_order: usize,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub max_target_order: usize,
    pub non_cyclic_only: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            max_target_order: DEFAULT_MAX_TARGET_ORDER,
            non_cyclic_only: false,
        }
    }
}

impl SearchOptions {
    pub fn non_cyclic() -> Self {
        SearchOptions {
            non_cyclic_only: true,
            ..Default::default()
        }
    }
}

fn check_bounds<E: GroupElement>(
    n: usize,
    target: &FiniteGroupTable<E>,
    opts: &SearchOptions,
) -> Result<()> {
    if !(2..=MAX_STRANDS).contains(&n) {
        return Err(GroupError::OutOfRange(format!(
            "strand count {n} outside 2..={MAX_STRANDS}"
        )));
    }
    if target.order() > opts.max_target_order {
        return Err(GroupError::TargetTooLarge {
            order: target.order(),
            limit: opts.max_target_order,
        });
    }
    Ok(())
}

/// Depth-first extension of `prefix` with images drawn from `candidates`.
fn extend<E: GroupElement>(n: usize, prefix: &mut Vec<E>, candidates: &[E], out: &mut Vec<Vec<E>>) {
    if prefix.len() == n - 1 {
        out.push(prefix.clone());
        return;
    }
    let k = prefix.len();
    for c in candidates {
        if !braids(&prefix[k - 1], c) {
            continue;
        }
        if prefix[..k - 1].iter().all(|p| p.commutes_with(c)) {
            prefix.push(c.clone());
            extend(n, prefix, candidates, out);
            prefix.pop();
        }
    }
}

fn search_from<E: GroupElement>(n: usize, first: &E, class: &[E]) -> Vec<Vec<E>> {
    let mut out = Vec::new();
    let mut prefix = vec![first.clone()];
    extend(n, &mut prefix, class, &mut out);
    out
}

/// Every valid homomorphism `B_n → G`, sorted by image tuple.
pub fn enumerate_homs<E: GroupElement>(
    n: usize,
    target: &FiniteGroupTable<E>,
    opts: &SearchOptions,
) -> Result<Vec<BraidHom<E>>> {
    check_bounds(n, target, opts)?;
    let classes = conjugacy_classes(target);
    let elements = target.elements();
    let class_elements: Vec<Vec<E>> = classes
        .members
        .iter()
        .map(|m| m.iter().map(|&p| elements[p as usize].clone()).collect())
        .collect();
    let mut tuples: Vec<Vec<E>> = (0..target.order())
        .into_par_iter()
        .flat_map_iter(|p| {
            let class = &class_elements[classes.class_of[p] as usize];
            search_from(n, &elements[p], class)
        })
        .collect();
    tuples.sort_unstable();
    Ok(tuples
        .into_iter()
        .map(|images| BraidHom { n, images })
        .filter(|h| !(opts.non_cyclic_only && h.is_cyclic()))
        .collect())
}

fn stabilizer_order<E: GroupElement>(target: &FiniteGroupTable<E>, images: &[E]) -> usize {
    target
        .elements()
        .iter()
        .filter(|g| images.iter().all(|x| g.commutes_with(x)))
        .count()
}

fn make_class<E: GroupElement>(
    n: usize,
    target: &FiniteGroupTable<E>,
    images: Vec<E>,
) -> Result<HomClass<E>> {
    let class_size = target.order() / stabilizer_order(target, &images);
    let image_order = closure(&images, target.order())?.order();
    Ok(HomClass {
        representative: BraidHom { n, images },
        class_size,
        image_order,
    })
}

/// Conjugacy classes of homomorphisms `B_n → G`, sorted by representative.
///
/// The image of `σ₁` is pinned to the least element of each conjugacy
/// class; the remaining freedom is conjugation by its centralizer.
pub fn classify_homs<E: GroupElement>(
    n: usize,
    target: &FiniteGroupTable<E>,
    opts: &SearchOptions,
) -> Result<Vec<HomClass<E>>> {
    check_bounds(n, target, opts)?;
    let classes = conjugacy_classes(target);
    let elements = target.elements();
    let found: Vec<Vec<E>> = classes
        .representatives
        .par_iter()
        .enumerate()
        .flat_map_iter(|(cid, &rep)| {
            let rep = elements[rep as usize].clone();
            let class: Vec<E> = classes.members[cid]
                .iter()
                .map(|&p| elements[p as usize].clone())
                .collect();
            let centralizer: Vec<E> = elements
                .iter()
                .filter(|g| g.commutes_with(&rep))
                .cloned()
                .collect();
            let canonical: BTreeSet<Vec<E>> = search_from(n, &rep, &class)
                .into_iter()
                .filter(|t| !(opts.non_cyclic_only && t.iter().all(|x| *x == t[0])))
                .map(|t| min_conjugate(&t, &centralizer))
                .collect();
            canonical.into_iter()
        })
        .collect();
    let mut found = found;
    found.sort_unstable();
    found.dedup();
    found
        .into_par_iter()
        .map(|images| make_class(n, target, images))
        .collect()
}

fn min_conjugate<E: GroupElement>(images: &[E], conjugators: &[E]) -> Vec<E> {
    conjugators
        .iter()
        .map(|g| {
            let g_inv = g.inv();
            images.iter().map(|x| g.mul(x).mul(&g_inv)).collect::<Vec<E>>()
        })
        .min()
        .expect("conjugator list contains the identity")
}

/// Canonical class of a valid homomorphism.
pub fn canonicalize<E: GroupElement>(
    h: &BraidHom<E>,
    target: &FiniteGroupTable<E>,
) -> Result<HomClass<E>> {
    h.require_in(target)?;
    if !h.is_valid() {
        return Err(GroupError::InvalidHom("cannot canonicalize an invalid hom".into()));
    }
    let images = min_conjugate(&h.images, target.elements());
    make_class(h.n, target, images)
}

fn require_symmetric(target: &FiniteGroupTable<Permutation>) -> Result<usize> {
    let degree = target.identity().degree();
    let factorial: usize = (1..=degree).product();
    if target.order() != factorial {
        return Err(GroupError::TargetMismatch(format!(
            "expected a full symmetric group, got order {} on {degree} points",
            target.order()
        )));
    }
    Ok(degree)
}

/// Equality up to automorphisms of a symmetric-group target: conjugation,
/// plus the outer automorphism when the target is `S_6`.
pub fn equal_up_to_aut(
    a: &BraidHom<Permutation>,
    b: &BraidHom<Permutation>,
    target: &FiniteGroupTable<Permutation>,
) -> Result<bool> {
    let degree = require_symmetric(target)?;
    if a.n != b.n {
        return Err(GroupError::TargetMismatch(format!(
            "homs from B_{} and B_{}",
            a.n, b.n
        )));
    }
    let cb = canonicalize(b, target)?;
    if canonicalize(a, target)?.representative == cb.representative {
        return Ok(true);
    }
    if degree == 6 {
        let outer = s6_outer_automorphism(target)?;
        let twisted = a.postcompose(&outer)?;
        return Ok(canonicalize(&twisted, target)?.representative == cb.representative);
    }
    Ok(false)
}

/// An automorphism of an enumerated group, tabulated on every element.
#[derive(Clone, Debug)]
pub struct Automorphism<E: GroupElement> {
    sources: Vec<E>,
    images: Vec<E>,
    table: FxHashMap<E, E>,
}

impl<E: GroupElement> Automorphism<E> {
    /// Extends `sources[i] ↦ images[i]` to all of `group`, checking that
    /// the sources generate, that the extension is well defined and
    /// multiplicative, and that it is bijective.
    pub fn from_generator_images(
        group: &FiniteGroupTable<E>,
        sources: &[E],
        images: &[E],
    ) -> Result<Self> {
        if sources.len() != images.len() || sources.is_empty() {
            return Err(GroupError::NotHomomorphism("source/image lists differ".into()));
        }
        for x in sources.iter().chain(images) {
            group.require(x)?;
        }
        let id = group.identity().clone();
        let mut table: FxHashMap<E, E> = FxHashMap::default();
        table.insert(id.clone(), id.clone());
        let mut queue = vec![id];
        let mut cursor = 0;
        while cursor < queue.len() {
            let x = queue[cursor].clone();
            let fx = table[&x].clone();
            for (s, t) in sources.iter().zip(images) {
                let y = x.mul(s);
                let fy = fx.mul(t);
                match table.get(&y) {
                    Some(existing) if *existing != fy => {
                        return Err(GroupError::NotHomomorphism(format!(
                            "{y:?} has two images {existing:?} and {fy:?}"
                        )));
                    }
                    Some(_) => {}
                    None => {
                        table.insert(y.clone(), fy);
                        queue.push(y);
                    }
                }
            }
            cursor += 1;
        }
        if table.len() != group.order() {
            return Err(GroupError::NotHomomorphism(
                "sources do not generate the group".into(),
            ));
        }
        let distinct: std::collections::HashSet<&E> = table.values().collect();
        if distinct.len() != group.order() {
            return Err(GroupError::NotHomomorphism("map is not injective".into()));
        }
        Ok(Automorphism {
            sources: sources.to_vec(),
            images: images.to_vec(),
            table,
        })
    }

    pub fn apply(&self, x: &E) -> Result<E> {
        self.table
            .get(x)
            .cloned()
            .ok_or_else(|| GroupError::NotInGroup(format!("{x:?}")))
    }

    /// True iff some `g` satisfies `g·s·g⁻¹ = φ(s)` on every source.
    pub fn is_inner(&self, group: &FiniteGroupTable<E>) -> bool {
        group.elements().iter().any(|g| {
            let g_inv = g.inv();
            self.sources
                .iter()
                .zip(&self.images)
                .all(|(s, t)| g.mul(s).mul(&g_inv) == *t)
        })
    }
}

fn perm(n: usize, cycles: &str) -> Permutation {
    Permutation::parse_cycles(n, cycles).expect("hard-coded cycle notation")
}

/// `π: B_n → S_n`, `σ_i ↦ (i, i+1)`.
pub fn standard_projection(n: usize) -> Result<BraidHom<Permutation>> {
    let images = (1..n)
        .map(|i| Permutation::from_cycles(n, &[vec![i, i + 1]]))
        .collect::<Result<Vec<_>>>()?;
    let h = BraidHom::new(n, images)?;
    debug_assert!(h.is_valid());
    Ok(h)
}

/// A homomorphism `B_4 → S_k` given on `σ₁` and `α = σ₃σ₂σ₁`.
///
/// Uses `σ₂ = α⁻¹σ₁α` and `σ₃ = α⁻¹σ₂α`, then checks the relations and
/// that the images recompose to `α`.
pub fn from_sigma1_alpha(sigma1: Permutation, alpha: Permutation) -> Result<BraidHom<Permutation>> {
    sigma1.check_compatible(&alpha)?;
    let alpha_inv = alpha.inv();
    let s2 = alpha_inv.mul(&sigma1).mul(&alpha);
    let s3 = alpha_inv.mul(&s2).mul(&alpha);
    let h = BraidHom::new(4, vec![sigma1.clone(), s2.clone(), s3.clone()])?;
    if !h.is_valid() {
        return Err(GroupError::InvalidHom(format!(
            "σ₁ ↦ {sigma1}, α ↦ {alpha} violates the braid relations"
        )));
    }
    if s3.mul(&s2).mul(&sigma1) != alpha {
        return Err(GroupError::InvalidHom(format!(
            "σ₃σ₂σ₁ does not map to {alpha}"
        )));
    }
    Ok(h)
}

/// `f₁: σ₁ ↦ (1,2,3,4), α ↦ (1,2)`.
pub fn f1() -> Result<BraidHom<Permutation>> {
    from_sigma1_alpha(perm(4, "(1,2,3,4)"), perm(4, "(1,2)"))
}

/// `f₂: σ₁ ↦ (1,3,2,4), α ↦ (1,2,3,4)`.
pub fn f2() -> Result<BraidHom<Permutation>> {
    from_sigma1_alpha(perm(4, "(1,3,2,4)"), perm(4, "(1,2,3,4)"))
}

/// `f₃: σ₁ ↦ (1,2,3), α ↦ (1,2)(3,4)`, with image `A₄`.
pub fn f3() -> Result<BraidHom<Permutation>> {
    from_sigma1_alpha(perm(4, "(1,2,3)"), perm(4, "(1,2)(3,4)"))
}

/// `f₄: σ₁ ↦ (1,2), α ↦ (1,3)`, with image `S₃ ⊂ S₄`.
pub fn f4() -> Result<BraidHom<Permutation>> {
    from_sigma1_alpha(perm(4, "(1,2)"), perm(4, "(1,3)"))
}

/// The collapse `B₄ → B₃` (`σ₁, σ₂, σ₃ ↦ σ₁, σ₂, σ₁`) applied to a word.
pub fn collapse_b4_to_b3(w: &BraidWord) -> Result<BraidWord> {
    if w.strands() != 4 {
        return Err(GroupError::InvalidWord(format!("expected a word in B_4, got B_{}", w.strands())));
    }
    let letters = w
        .letters()
        .iter()
        .map(|&l| if l.abs() == 3 { l.signum() } else { l })
        .collect();
    BraidWord::new(3, letters)
}

/// `B₄ → B₃ → S₃`: the collapse followed by the standard projection.
pub fn b4_to_s3_composite() -> Result<BraidHom<Permutation>> {
    let h = BraidHom::new(4, vec![perm(3, "(1,2)"), perm(3, "(2,3)"), perm(3, "(1,2)")])?;
    if !h.is_valid() {
        return Err(GroupError::InvalidHom("B4 -> S3 composite".into()));
    }
    Ok(h)
}

/// The exceptional maps `f₁ … f₄` with their names.
pub fn exceptional_b4_maps() -> Result<Vec<(&'static str, BraidHom<Permutation>)>> {
    Ok(vec![("f1", f1()?), ("f2", f2()?), ("f3", f3()?), ("f4", f4()?)])
}

/// `(1,2) ↦ (1,2)(3,4)(5,6)`, `(1,2,3,4,5,6) ↦ (1,2,3)(4,5)` on `S₆`.
pub fn s6_outer_automorphism(
    s6: &FiniteGroupTable<Permutation>,
) -> Result<Automorphism<Permutation>> {
    if require_symmetric(s6)? != 6 {
        return Err(GroupError::TargetMismatch("outer automorphism lives on S6".into()));
    }
    Automorphism::from_generator_images(
        s6,
        &[perm(6, "(1,2)"), perm(6, "(1,2,3,4,5,6)")],
        &[perm(6, "(1,2)(3,4)(5,6)"), perm(6, "(1,2,3)(4,5)")],
    )
}
