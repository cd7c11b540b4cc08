use rayon::prelude::*;
use rustc_hash::FxHashSet;

use crate::error::{GroupError, Result};
use crate::group::table::{FiniteGroupTable, SubgroupBuilder};
use crate::group::GroupElement;

/// Orbit of `x` under conjugation, sorted canonically.
pub fn conjugacy_class<E: GroupElement>(g: &FiniteGroupTable<E>, x: &E) -> Result<Vec<E>> {
    g.require(x)?;
    let mut orbit = conjugation_orbit(g, x);
    orbit.sort_unstable();
    Ok(orbit)
}

fn conjugation_orbit<E: GroupElement>(g: &FiniteGroupTable<E>, x: &E) -> Vec<E> {
    let gens: Vec<(E, E)> = g.generators().iter().map(|s| (s.clone(), s.inv())).collect();
    let mut seen = FxHashSet::default();
    seen.insert(x.clone());
    let mut orbit = vec![x.clone()];
    let mut cursor = 0;
    while cursor < orbit.len() {
        for (s, s_inv) in &gens {
            let y = s.mul(&orbit[cursor]).mul(s_inv);
            if seen.insert(y.clone()) {
                orbit.push(y);
            }
        }
        cursor += 1;
    }
    orbit
}

/// Subgroup of elements commuting with `x`.
pub fn centralizer<E: GroupElement>(
    g: &FiniteGroupTable<E>,
    x: &E,
) -> Result<FiniteGroupTable<E>> {
    g.require(x)?;
    let members: Vec<E> = g
        .elements()
        .par_iter()
        .filter(|h| h.commutes_with(x))
        .cloned()
        .collect();
    let mut b = SubgroupBuilder::trivial(g.identity().clone());
    for h in members {
        if !b.contains(&h) {
            b.add_generator(h, usize::MAX)?;
        }
    }
    Ok(b.into_table())
}

/// Smallest normal subgroup of `g` containing `s`.
pub fn normal_closure<E: GroupElement>(
    g: &FiniteGroupTable<E>,
    s: &[E],
) -> Result<FiniteGroupTable<E>> {
    for x in s {
        g.require(x)?;
    }
    Ok(normal_closure_builder(g, s, None).into_table())
}

/// Grows the closure until normal, or until `stop_at` elements are reached.
fn normal_closure_builder<E: GroupElement>(
    g: &FiniteGroupTable<E>,
    s: &[E],
    stop_at: Option<usize>,
) -> SubgroupBuilder<E> {
    let mut b = SubgroupBuilder::trivial(g.identity().clone());
    for x in s {
        b.add_generator(x.clone(), usize::MAX)
            .expect("subgroup of an enumerated group cannot exceed an unbounded ceiling");
    }
    let conj: Vec<(E, E)> = g.generators().iter().map(|s| (s.clone(), s.inv())).collect();
    let mut i = 0;
    while i < b.generators().len() {
        if stop_at.is_some_and(|limit| b.len() >= limit) {
            break;
        }
        let t = b.generators()[i].clone();
        for (s, s_inv) in &conj {
            let c = s.mul(&t).mul(s_inv);
            if !b.contains(&c) {
                b.add_generator(c, usize::MAX).expect("unbounded ceiling");
            }
        }
        i += 1;
    }
    b
}

/// Partition of a group into conjugacy classes.
#[derive(Clone, Debug)]
pub struct ConjugacyClasses {
    /// `class_of[i]` is the class id of `elements()[i]`.
    pub class_of: Vec<u32>,
    /// Members of each class as element positions, ascending.
    pub members: Vec<Vec<u32>>,
    /// Position of the canonically smallest element of each class.
    pub representatives: Vec<u32>,
}

impl ConjugacyClasses {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn class_size(&self, id: usize) -> usize {
        self.members[id].len()
    }
}

/// Classes numbered in order of first appearance in the element list.
pub fn conjugacy_classes<E: GroupElement>(g: &FiniteGroupTable<E>) -> ConjugacyClasses {
    const UNSET: u32 = u32::MAX;
    let gens: Vec<(E, E)> = g.generators().iter().map(|s| (s.clone(), s.inv())).collect();
    let mut class_of = vec![UNSET; g.order()];
    let mut members = Vec::new();
    for start in 0..g.order() {
        if class_of[start] != UNSET {
            continue;
        }
        let id = members.len() as u32;
        class_of[start] = id;
        let mut orbit = vec![start as u32];
        let mut cursor = 0;
        while cursor < orbit.len() {
            let x = &g.elements()[orbit[cursor] as usize];
            for (s, s_inv) in &gens {
                let y = s.mul(x).mul(s_inv);
                let p = g.position(&y).expect("conjugate stays in group");
                if class_of[p] == UNSET {
                    class_of[p] = id;
                    orbit.push(p as u32);
                }
            }
            cursor += 1;
        }
        orbit.sort_unstable();
        members.push(orbit);
    }
    let representatives = members
        .iter()
        .map(|m| {
            *m.iter()
                .min_by(|&&a, &&b| g.elements()[a as usize].cmp(&g.elements()[b as usize]))
                .unwrap()
        })
        .collect();
    ConjugacyClasses {
        class_of,
        members,
        representatives,
    }
}

/// A proper nontrivial normal subgroup, if one exists.
pub fn proper_normal_witness<E: GroupElement>(
    g: &FiniteGroupTable<E>,
) -> Result<Option<FiniteGroupTable<E>>> {
    if g.order() <= 1 {
        return Err(GroupError::TrivialGroup);
    }
    let classes = conjugacy_classes(g);
    let order = g.order();
    let found = classes
        .representatives
        .par_iter()
        .filter(|&&r| !g.elements()[r as usize].is_identity())
        .map(|&r| {
            let rep = g.elements()[r as usize].clone();
            let b = normal_closure_builder(g, std::slice::from_ref(&rep), Some(order));
            (r, b)
        })
        .filter(|(_, b)| b.len() < order)
        .min_by_key(|(r, _)| *r);
    Ok(found.map(|(_, b)| b.into_table()))
}

/// True iff every nontrivial class normally generates the whole group.
pub fn is_simple<E: GroupElement>(g: &FiniteGroupTable<E>) -> Result<bool> {
    Ok(proper_normal_witness(g)?.is_none())
}

/// Conjugation actions supported by [`orbit_stabilizer`].
#[derive(Clone, Debug)]
pub enum ConjugationAction<E> {
    Element(E),
    Pair(E, E),
}

/// Orbit and stabilizer sizes; their product is checked against `|G|`.
pub fn orbit_stabilizer<E: GroupElement>(
    g: &FiniteGroupTable<E>,
    point: &ConjugationAction<E>,
) -> Result<(usize, usize)> {
    let gens: Vec<(E, E)> = g.generators().iter().map(|s| (s.clone(), s.inv())).collect();
    let (orbit, stabilizer) = match point {
        ConjugationAction::Element(x) => {
            g.require(x)?;
            let orbit = conjugation_orbit(g, x).len();
            let stab = g.elements().par_iter().filter(|h| h.commutes_with(x)).count();
            (orbit, stab)
        }
        ConjugationAction::Pair(x, y) => {
            g.require(x)?;
            g.require(y)?;
            let mut seen = FxHashSet::default();
            seen.insert((x.clone(), y.clone()));
            let mut queue = vec![(x.clone(), y.clone())];
            let mut cursor = 0;
            while cursor < queue.len() {
                for (s, s_inv) in &gens {
                    let (a, b) = &queue[cursor];
                    let next = (s.mul(a).mul(s_inv), s.mul(b).mul(s_inv));
                    if seen.insert(next.clone()) {
                        queue.push(next);
                    }
                }
                cursor += 1;
            }
            let stab = g
                .elements()
                .par_iter()
                .filter(|h| h.commutes_with(x) && h.commutes_with(y))
                .count();
            (queue.len(), stab)
        }
    };
    assert_eq!(
        orbit * stabilizer,
        g.order(),
        "orbit-stabilizer identity violated"
    );
    Ok((orbit, stabilizer))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{closure, Permutation, DEFAULT_CEILING};

    fn cyc(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    fn sym(n: usize) -> FiniteGroupTable<Permutation> {
        let full: Vec<usize> = (1..=n).collect();
        closure(
            &[cyc(n, "(1,2)"), Permutation::from_cycles(n, &[full]).unwrap()],
            DEFAULT_CEILING,
        )
        .unwrap()
    }

    fn alt(n: usize) -> FiniteGroupTable<Permutation> {
        let gens: Vec<Permutation> = (3..=n)
            .map(|k| Permutation::from_cycles(n, &[vec![1, 2, k]]).unwrap())
            .collect();
        closure(&gens, DEFAULT_CEILING).unwrap()
    }

    #[test]
    fn class_sizes_in_s4() {
        let s4 = sym(4);
        assert_eq!(conjugacy_class(&s4, &cyc(4, "(1,2)")).unwrap().len(), 6);
        assert_eq!(conjugacy_class(&s4, &cyc(4, "(1,2)(3,4)")).unwrap().len(), 3);
        assert_eq!(conjugacy_class(&s4, &Permutation::identity(4)).unwrap().len(), 1);
        assert_eq!(conjugacy_classes(&s4).len(), 5);
    }

    #[test]
    fn double_transposition_class_by_brute_force() {
        let s4 = sym(4);
        let x = cyc(4, "(1,2)(3,4)");
        let mut brute: Vec<Permutation> = s4.elements().iter().map(|g| x.conjugate_by(g)).collect();
        brute.sort();
        brute.dedup();
        assert_eq!(brute, conjugacy_class(&s4, &x).unwrap());
    }

    #[test]
    fn centralizer_orders() {
        assert_eq!(centralizer(&sym(5), &cyc(5, "(1,2)")).unwrap().order(), 12);
        assert_eq!(centralizer(&sym(4), &Permutation::identity(4)).unwrap().order(), 24);
        assert!(centralizer(&sym(3), &cyc(3, "(1,2)")).unwrap().is_closed());
    }

    #[test]
    fn not_in_group_errors() {
        let a4 = alt(4);
        let t = cyc(4, "(1,2)");
        assert!(matches!(conjugacy_class(&a4, &t), Err(GroupError::NotInGroup(_))));
        assert!(matches!(centralizer(&a4, &t), Err(GroupError::NotInGroup(_))));
        assert!(matches!(normal_closure(&a4, std::slice::from_ref(&t)), Err(GroupError::NotInGroup(_))));
        assert!(orbit_stabilizer(&a4, &ConjugationAction::Element(t)).is_err());
    }

    #[test]
    fn normal_closures_in_s5() {
        let s5 = sym(5);
        assert_eq!(normal_closure(&s5, &[cyc(5, "(1,2)")]).unwrap().order(), 120);
        let a5 = normal_closure(&s5, &[cyc(5, "(1,2,3)")]).unwrap();
        assert_eq!(a5.order(), 60);
        assert!(a5.elements().iter().all(Permutation::is_even));
        assert_eq!(normal_closure(&s5, &[Permutation::identity(5)]).unwrap().order(), 1);
    }

    #[test]
    fn simplicity() {
        assert!(is_simple(&alt(5)).unwrap());
        assert!(!is_simple(&sym(5)).unwrap());
        let w = proper_normal_witness(&sym(5)).unwrap().unwrap();
        assert_eq!(w.order(), 60);
        assert!(!is_simple(&alt(4)).unwrap());
        let trivial = closure(&[Permutation::identity(3)], 10).unwrap();
        assert_eq!(is_simple(&trivial), Err(GroupError::TrivialGroup));
    }

    #[test]
    fn orbit_stabilizer_s6_transposition() {
        let s6 = sym(6);
        let (o, c) = orbit_stabilizer(&s6, &ConjugationAction::Element(cyc(6, "(1,2)"))).unwrap();
        assert_eq!((o, c), (15, 48));
        let (o, c) = orbit_stabilizer(
            &s6,
            &ConjugationAction::Pair(cyc(6, "(1,2)"), cyc(6, "(2,3)")),
        )
        .unwrap();
        // ordered pairs of transpositions sharing one point: 6·5·4
        assert_eq!((o, c), (120, 6));
    }
}
