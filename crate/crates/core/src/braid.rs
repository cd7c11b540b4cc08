//! Braid words, Artin's action on the free group, and Birman–Ko–Lee
//! generators.
//!
//! Equality of braids is decided by comparing free-group automorphisms:
//! the action of `B_n` on `F_n` is faithful, so two words are equal in
//! `B_n` exactly when their automorphisms agree on every generator.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{GroupError, Result};

/// A word in the Artin generators of `B_n`. Letter `±i` is `σ_i^{±1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i16>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i16>) -> Result<Self> {
        if n == 0 || n > i16::MAX as usize {
            return Err(GroupError::InvalidWord(format!("strand count {n}")));
        }
        if let Some(bad) = letters
            .iter()
            .find(|&&l| l == 0 || l.unsigned_abs() as usize >= n)
        {
            return Err(GroupError::InvalidWord(format!(
                "letter {bad} out of range for B_{n}"
            )));
        }
        Ok(BraidWord { n, letters })
    }

    pub fn identity(n: usize) -> Result<Self> {
        BraidWord::new(n, Vec::new())
    }

    /// `σ_i`, 1-based.
    pub fn sigma(n: usize, i: usize) -> Result<Self> {
        BraidWord::new(n, vec![i as i16])
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i16] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.n != other.n {
            return Err(GroupError::InvalidWord(format!(
                "cannot multiply B_{} by B_{}",
                self.n, other.n
            )));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    /// `self^k` for any integer `k`.
    pub fn pow(&self, k: i32) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let letters = std::iter::repeat_n(base.letters, k.unsigned_abs() as usize)
            .flatten()
            .collect();
        BraidWord { n: self.n, letters }
    }

    /// Inserts `σ_i σ_i⁻¹` before position `pos`.
    pub fn insert_trivial(&self, pos: usize, i: usize) -> Result<BraidWord> {
        if i == 0 || i >= self.n || pos > self.letters.len() {
            return Err(GroupError::InvalidWord(format!("cannot insert σ_{i} at {pos}")));
        }
        let mut letters = self.letters.clone();
        letters.splice(pos..pos, [i as i16, -(i as i16)]);
        Ok(BraidWord { n: self.n, letters })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|&l| {
                if l > 0 {
                    format!("s{l}")
                } else {
                    format!("s{}^-1", -l)
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// A freely reduced word in `x_1, …, x_n`; letter `±j` is `x_j^{±1}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct FreeGroupWord {
    letters: Vec<i16>,
}

impl FreeGroupWord {
    pub fn generator(j: usize) -> Self {
        FreeGroupWord {
            letters: vec![j as i16],
        }
    }

    pub fn from_letters(letters: &[i16]) -> Self {
        let mut w = FreeGroupWord::default();
        for &l in letters {
            w.push(l);
        }
        w
    }

    pub fn letters(&self) -> &[i16] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn push(&mut self, l: i16) {
        if self.letters.last() == Some(&-l) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    fn append(&mut self, other: &FreeGroupWord) {
        for &l in &other.letters {
            self.push(l);
        }
    }

    fn append_inverse(&mut self, other: &FreeGroupWord) {
        for &l in other.letters.iter().rev() {
            self.push(-l);
        }
    }

    pub fn inverse(&self) -> FreeGroupWord {
        FreeGroupWord {
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Replaces each `x_j` by `images[j-1]`.
    pub fn substitute(&self, images: &[FreeGroupWord]) -> FreeGroupWord {
        let mut out = FreeGroupWord::default();
        for &l in &self.letters {
            let img = &images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                out.append(img);
            } else {
                out.append_inverse(img);
            }
        }
        out
    }
}

/// An automorphism of `F_n`, stored as the images of `x_1, …, x_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ArtinAutomorphism {
    images: Vec<FreeGroupWord>,
}

impl ArtinAutomorphism {
    pub fn identity(rank: usize) -> Self {
        ArtinAutomorphism {
            images: (1..=rank).map(FreeGroupWord::generator).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[FreeGroupWord] {
        &self.images
    }

    /// Automorphism of a single letter `σ_i^{±1}`.
    fn of_letter(rank: usize, letter: i16) -> Self {
        let i = letter.unsigned_abs() as usize;
        let (xi, xj) = (i as i16, i as i16 + 1);
        let mut images = ArtinAutomorphism::identity(rank).images;
        if letter > 0 {
            images[i - 1] = FreeGroupWord::from_letters(&[xi, xj, -xi]);
            images[i] = FreeGroupWord::from_letters(&[xi]);
        } else {
            images[i - 1] = FreeGroupWord::from_letters(&[xj]);
            images[i] = FreeGroupWord::from_letters(&[-xj, xi, xj]);
        }
        ArtinAutomorphism { images }
    }

    /// `other ∘ self`: apply `self`, then substitute through `other`.
    pub fn then(&self, other: &ArtinAutomorphism) -> ArtinAutomorphism {
        ArtinAutomorphism {
            images: self.images.iter().map(|w| w.substitute(&other.images)).collect(),
        }
    }

    /// Image of the product `x_1 x_2 ⋯ x_n`.
    pub fn boundary_image(&self) -> FreeGroupWord {
        let product: Vec<i16> = (1..=self.rank() as i16).collect();
        FreeGroupWord::from_letters(&product).substitute(&self.images)
    }

    pub fn fixes_boundary(&self) -> bool {
        let product: Vec<i16> = (1..=self.rank() as i16).collect();
        self.boundary_image().letters() == product.as_slice()
    }
}

/// Automorphism of a braid word; `action(w₁·w₂) = action(w₂) ∘ action(w₁)`.
pub fn artin_action(w: &BraidWord) -> ArtinAutomorphism {
    let mut acc = ArtinAutomorphism::identity(w.n);
    for &l in &w.letters {
        // φ_l ∘ acc, i.e. substitute φ_l into the current images
        acc = acc.then(&ArtinAutomorphism::of_letter(w.n, l));
    }
    assert!(acc.fixes_boundary(), "braid action must fix x_1⋯x_n");
    acc
}

pub fn braid_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.n != b.n {
        return Err(GroupError::InvalidWord(format!(
            "comparing B_{} with B_{}",
            a.n, b.n
        )));
    }
    Ok(artin_action(a) == artin_action(b))
}

/// `ρ_{i,j} = (σ_{j−1} ⋯ σ_{i+1}) σ_i (σ_{i+1}⁻¹ ⋯ σ_{j−1}⁻¹)`.
pub fn bkl_word(i: usize, j: usize, n: usize) -> Result<BraidWord> {
    if i == 0 || i >= j || j > n {
        return Err(GroupError::InvalidWord(format!(
            "ρ_({i},{j}) needs 1 ≤ i < j ≤ {n}"
        )));
    }
    let run: Vec<i16> = (i + 1..j).rev().map(|k| k as i16).collect();
    let mut letters = run.clone();
    letters.push(i as i16);
    letters.extend(run.iter().rev().map(|&k| -k));
    BraidWord::new(n, letters)
}

/// The sign ε with `ρ_{i,k} = ρ_{j,k}^ε ρ_{i,j} ρ_{j,k}^{−ε}`, found by testing
/// `+1` and then `−1` against the equality oracle.
pub fn epsilon_for(i: usize, j: usize, k: usize, n: usize) -> Result<i32> {
    if !(1 <= i && i < j && j < k && k <= n) {
        return Err(GroupError::InvalidWord(format!(
            "triple ({i},{j},{k}) must satisfy 1 ≤ i < j < k ≤ {n}"
        )));
    }
    let rik = bkl_word(i, k, n)?;
    let rij = bkl_word(i, j, n)?;
    let rjk = bkl_word(j, k, n)?;
    for eps in [1, -1] {
        let rhs = rjk.pow(eps).concat(&rij)?.concat(&rjk.pow(-eps))?;
        if braid_equal(&rik, &rhs)? {
            return Ok(eps);
        }
    }
    Err(GroupError::NoEpsilon { i, j, k, n })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationKind {
    ArtinBraid,
    FarCommutation,
    BklBraid,
    BklCommutation,
    PartialCommutation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub kind: RelationKind,
    pub relation: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub n: usize,
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }

    pub fn count(&self, kind: RelationKind) -> usize {
        self.checks.iter().filter(|c| c.kind == kind).count()
    }
}

fn braid_relation_holds(a: &BraidWord, b: &BraidWord) -> bool {
    let lhs = a.concat(b).and_then(|w| w.concat(a));
    let rhs = b.concat(a).and_then(|w| w.concat(b));
    matches!((lhs, rhs), (Ok(l), Ok(r)) if braid_equal(&l, &r) == Ok(true))
}

fn commute(a: &BraidWord, b: &BraidWord) -> bool {
    match (a.concat(b), b.concat(a)) {
        (Ok(l), Ok(r)) => braid_equal(&l, &r) == Ok(true),
        _ => false,
    }
}

/// Two index pairs are linked when their endpoints interleave.
fn linked((i, j): (usize, usize), (k, l): (usize, usize)) -> bool {
    (i < k && k < j && j < l) || (k < i && i < l && l < j)
}

enum Job {
    Braid(RelationKind, BraidWord, BraidWord, String),
    Commute(RelationKind, BraidWord, BraidWord, String),
    Partial(usize, usize, usize),
}

/// Checks the Artin relations and the BKL relation families in `B_n`,
/// `3 ≤ n ≤ 7`.
pub fn relation_suite(n: usize) -> Result<RelationReport> {
    if !(3..=7).contains(&n) {
        return Err(GroupError::OutOfRange(format!("relation suite needs 3 ≤ n ≤ 7, got {n}")));
    }
    let mut jobs = Vec::new();
    for i in 1..n {
        for j in i + 1..n {
            let (a, b) = (BraidWord::sigma(n, i)?, BraidWord::sigma(n, j)?);
            if j == i + 1 {
                jobs.push(Job::Braid(RelationKind::ArtinBraid, a, b, format!("s{i} s{j}")));
            } else {
                jobs.push(Job::Commute(RelationKind::FarCommutation, a, b, format!("s{i} s{j}")));
            }
        }
    }
    let pairs: Vec<(usize, usize)> =
        (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    for (x, &p) in pairs.iter().enumerate() {
        for &q in &pairs[x + 1..] {
            let shared = [p.0, p.1].iter().filter(|v| **v == q.0 || **v == q.1).count();
            let name = format!("rho{:?} rho{:?}", p, q);
            let (a, b) = (bkl_word(p.0, p.1, n)?, bkl_word(q.0, q.1, n)?);
            if shared == 1 {
                jobs.push(Job::Braid(RelationKind::BklBraid, a, b, name));
            } else if shared == 0 && !linked(p, q) {
                jobs.push(Job::Commute(RelationKind::BklCommutation, a, b, name));
            }
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                jobs.push(Job::Partial(i, j, k));
            }
        }
    }
    let checks = jobs
        .into_par_iter()
        .map(|job| match job {
            Job::Braid(kind, a, b, relation) => RelationCheck {
                kind,
                holds: braid_relation_holds(&a, &b),
                relation,
            },
            Job::Commute(kind, a, b, relation) => RelationCheck {
                kind,
                holds: commute(&a, &b),
                relation,
            },
            Job::Partial(i, j, k) => {
                let eps = epsilon_for(i, j, k, n);
                RelationCheck {
                    kind: RelationKind::PartialCommutation,
                    relation: match &eps {
                        Ok(e) => format!("rho({i},{k}) = rho({j},{k})^{e} rho({i},{j}) rho({j},{k})^{}", -e),
                        Err(_) => format!("rho({i},{k}) partial commutation"),
                    },
                    holds: eps.is_ok(),
                }
            }
        })
        .collect();
    Ok(RelationReport { n, checks })
}
