use rustc_hash::{FxHashMap, FxHashSet};

use crate::error::{GroupError, Result};
use crate::group::GroupElement;

/// Default element-count ceiling for closures.
pub const DEFAULT_CEILING: usize = 4_000_000;

/// A fully enumerated finite group.
#[derive(Clone, Debug)]
pub struct FiniteGroupTable<E: GroupElement> {
    generators: Vec<E>,
    elements: Vec<E>,
    index: FxHashMap<E, u32>,
}

impl<E: GroupElement> FiniteGroupTable<E> {
    /// Trusts that `elements` is closed and contains the identity.
    pub(crate) fn from_closed(generators: Vec<E>, elements: Vec<E>) -> Self {
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i as u32))
            .collect();
        FiniteGroupTable {
            generators,
            elements,
            index,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[E] {
        &self.generators
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn contains(&self, x: &E) -> bool {
        self.index.contains_key(x)
    }

    pub fn position(&self, x: &E) -> Option<usize> {
        self.index.get(x).map(|&i| i as usize)
    }

    pub fn identity(&self) -> &E {
        // closure always places the identity first
        &self.elements[0]
    }

    pub fn require(&self, x: &E) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(GroupError::NotInGroup(format!("{x:?}")))
        }
    }

    /// Subgroup generated by `gens`, which must lie in this group.
    pub fn subgroup(&self, gens: &[E]) -> Result<FiniteGroupTable<E>> {
        for g in gens {
            self.require(g)?;
        }
        let mut b = SubgroupBuilder::trivial(self.identity().clone());
        for g in gens {
            b.add_generator(g.clone(), usize::MAX)?;
        }
        Ok(b.into_table())
    }

    /// Checks closure under products and inverses.
    pub fn is_closed(&self) -> bool {
        self.elements.iter().all(|a| {
            self.contains(&a.inv()) && self.elements.iter().all(|b| self.contains(&a.mul(b)))
        })
    }
}

/// Breadth-first closure. Each frontier is sorted by canonical order before
/// expansion, so the element sequence depends only on the generator list.
pub fn closure<E: GroupElement>(generators: &[E], ceiling: usize) -> Result<FiniteGroupTable<E>> {
    let first = generators.first().ok_or(GroupError::NoGenerators)?;
    for g in generators {
        first.check_compatible(g)?;
        g.validate()?;
    }
    let id = first.identity_like();
    let mut seen: FxHashSet<E> = FxHashSet::default();
    seen.insert(id.clone());
    let mut elements = vec![id];
    let mut frontier_start = 0;
    while frontier_start < elements.len() {
        let frontier_end = elements.len();
        let mut next = Vec::new();
        for x in &elements[frontier_start..frontier_end] {
            for g in generators {
                let y = x.mul(g);
                if !seen.contains(&y) {
                    seen.insert(y.clone());
                    next.push(y);
                }
            }
            if seen.len() > ceiling {
                return Err(GroupError::CeilingExceeded { ceiling });
            }
        }
        next.sort_unstable();
        elements.extend(next);
        frontier_start = frontier_end;
    }
    drop(seen);
    Ok(FiniteGroupTable::from_closed(generators.to_vec(), elements))
}

/// Incrementally grown subgroup. Adding a generator only multiplies the
/// new elements by the full generator list, so repeated extension costs
/// roughly `|final| · |generators|` products.
#[derive(Clone, Debug)]
pub struct SubgroupBuilder<E: GroupElement> {
    generators: Vec<E>,
    elements: Vec<E>,
    seen: FxHashSet<E>,
}

impl<E: GroupElement> SubgroupBuilder<E> {
    pub fn trivial(identity: E) -> Self {
        let mut seen = FxHashSet::default();
        seen.insert(identity.clone());
        SubgroupBuilder {
            generators: Vec::new(),
            elements: vec![identity],
            seen,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: &E) -> bool {
        self.seen.contains(x)
    }

    pub fn generators(&self) -> &[E] {
        &self.generators
    }

    /// Returns `false` when `g` was already a member.
    pub fn add_generator(&mut self, g: E, ceiling: usize) -> Result<bool> {
        if self.seen.contains(&g) {
            return Ok(false);
        }
        let old_len = self.elements.len();
        self.generators.push(g);
        let g = self.generators.last().unwrap().clone();
        for i in 0..old_len {
            let y = self.elements[i].mul(&g);
            self.insert(y, ceiling)?;
        }
        let mut cursor = old_len;
        while cursor < self.elements.len() {
            for k in 0..self.generators.len() {
                let y = self.elements[cursor].mul(&self.generators[k]);
                self.insert(y, ceiling)?;
            }
            cursor += 1;
        }
        Ok(true)
    }

    fn insert(&mut self, y: E, ceiling: usize) -> Result<()> {
        if !self.seen.contains(&y) {
            if self.elements.len() >= ceiling {
                return Err(GroupError::CeilingExceeded { ceiling });
            }
            self.seen.insert(y.clone());
            self.elements.push(y);
        }
        Ok(())
    }

    pub fn into_table(self) -> FiniteGroupTable<E> {
        FiniteGroupTable::from_closed(self.generators, self.elements)
    }
}
