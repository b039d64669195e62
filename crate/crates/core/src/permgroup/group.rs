use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use super::{Perm, PointPartition};
use crate::{Caps, Error, Result};

/// Largest degree accepted by [`wreath_perm`].
pub const MAX_WREATH_DEGREE: usize = 128;

/// A permutation group given by generators.
///
/// The order is always known: either counted from an enumerated closure or
/// supplied by a construction that determines it (wreath products,
/// automorphism search). The element list is enumerated on demand and is
/// bounded by the group's closure cap.
#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    order: u128,
    cap: usize,
    elements: OnceLock<Vec<Perm>>,
}

impl PermGroup {
    /// Group generated by `generators`, enumerated with the default cap.
    pub fn closure(degree: usize, generators: Vec<Perm>) -> Result<Self> {
        Self::closure_capped(degree, generators, Caps::DEFAULT_CLOSURE)
    }

    pub fn closure_capped(degree: usize, generators: Vec<Perm>, cap: usize) -> Result<Self> {
        check_degrees(degree, &generators)?;
        let elements = enumerate(degree, &generators, cap)?;
        Ok(PermGroup {
            degree,
            generators,
            order: elements.len() as u128,
            cap,
            elements: OnceLock::from(elements),
        })
    }

    /// Group whose order is already known from its construction.
    pub(crate) fn with_order(degree: usize, generators: Vec<Perm>, order: u128, cap: usize) -> Self {
        debug_assert!(check_degrees(degree, &generators).is_ok());
        PermGroup {
            degree,
            generators,
            order,
            cap,
            elements: OnceLock::new(),
        }
    }

    /// Subgroup given by its complete element list. A small generating set
    /// is extracted greedily.
    pub(crate) fn from_elements(degree: usize, mut elements: Vec<Perm>, cap: usize) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        let mut generators = Vec::new();
        let mut span: HashSet<Perm> = HashSet::from([Perm::identity(degree)]);
        for e in &elements {
            if !span.contains(e) {
                generators.push(e.clone());
                span = enumerate(degree, &generators, cap)?.into_iter().collect();
            }
        }
        if span.len() != elements.len() {
            return Err(Error::NotASubgroup);
        }
        Ok(PermGroup {
            degree,
            generators,
            order: elements.len() as u128,
            cap,
            elements: OnceLock::from(elements),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::with_order(degree, Vec::new(), 1, Caps::DEFAULT_CLOSURE)
    }

    /// Symmetric group on `degree` points, generated by `(0 1)` and the
    /// long cycle.
    pub fn symmetric(degree: usize) -> Result<Self> {
        let order = (1..=degree as u128)
            .try_fold(1u128, |acc, k| acc.checked_mul(k))
            .ok_or(Error::CapExceeded {
                what: "symmetric group order",
                size: u128::MAX,
                cap: u128::MAX,
            })?;
        let mut gens = Vec::new();
        if degree >= 2 {
            gens.push(Perm::from_cycles(degree, &[&[0, 1]])?);
        }
        if degree >= 3 {
            let cycle: Vec<usize> = (0..degree).collect();
            gens.push(Perm::from_cycles(degree, &[&cycle])?);
        }
        Ok(PermGroup::with_order(degree, gens, order, Caps::DEFAULT_CLOSURE))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn closure_cap(&self) -> usize {
        self.cap
    }

    /// All elements in ascending order of their image tables.
    pub fn elements(&self) -> Result<&[Perm]> {
        if let Some(e) = self.elements.get() {
            return Ok(e);
        }
        if self.order > self.cap as u128 {
            return Err(Error::CapExceeded {
                what: "permutation group closure",
                size: self.order,
                cap: self.cap as u128,
            });
        }
        let elements = enumerate(self.degree, &self.generators, self.cap)?;
        debug_assert_eq!(elements.len() as u128, self.order);
        Ok(self.elements.get_or_init(|| elements))
    }

    pub fn contains(&self, p: &Perm) -> Result<bool> {
        if p.degree() != self.degree {
            return Ok(false);
        }
        Ok(self.elements()?.binary_search(p).is_ok())
    }

    /// Orbits of the action, as a canonical partition.
    pub fn orbits(&self) -> PointPartition {
        let mut label = vec![usize::MAX; self.degree];
        for start in 0..self.degree {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = start;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for g in &self.generators {
                    let y = g.apply(x);
                    if label[y] == usize::MAX {
                        label[y] = start;
                        queue.push_back(y);
                    }
                }
            }
        }
        PointPartition::from_labels(&label)
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() == 1
    }

    /// Subgroup of elements that stabilize every class of `p` set-wise.
    pub fn fix(&self, p: &PointPartition) -> Result<PermGroup> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: p.degree(),
            });
        }
        let idx = p.class_index();
        let kept: Vec<Perm> = self
            .elements()?
            .iter()
            .filter(|g| (0..self.degree).all(|x| idx[g.apply(x)] == idx[x]))
            .cloned()
            .collect();
        PermGroup::from_elements(self.degree, kept, self.cap)
    }

    /// Point stabilizer, computed by filtering the closure.
    pub fn stabilizer(&self, point: usize) -> Result<Vec<&Perm>> {
        Ok(self.elements()?.iter().filter(|g| g.apply(point) == point).collect())
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish()
    }
}

fn check_degrees(degree: usize, generators: &[Perm]) -> Result<()> {
    if degree == 0 {
        return Err(Error::NotAPermutation("degree must be positive".into()));
    }
    for g in generators {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
    }
    Ok(())
}

fn enumerate(degree: usize, generators: &[Perm], cap: usize) -> Result<Vec<Perm>> {
    let id = Perm::identity(degree);
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(e) = queue.pop_front() {
        for g in generators {
            let next = g.compose(&e);
            if !seen.contains(&next) {
                if seen.len() >= cap {
                    return Err(Error::CapExceeded {
                        what: "permutation group closure",
                        size: seen.len() as u128 + 1,
                        cap: cap as u128,
                    });
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<Perm> = seen.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}

/// Wreath product `g ≀ h` acting on `X × Y`, with `(x, y)` at `x * |Y| + y`.
///
/// Generated by `g` moving whole fibers and, for each `x`, a copy of `h`'s
/// generators acting on the fiber `{x} × Y` alone. The order is
/// `|g| * |h|^|X|`.
pub fn wreath_perm(g: &PermGroup, h: &PermGroup) -> Result<PermGroup> {
    let (nx, ny) = (g.degree(), h.degree());
    let degree = nx * ny;
    if degree > MAX_WREATH_DEGREE {
        return Err(Error::CapExceeded {
            what: "wreath product degree",
            size: degree as u128,
            cap: MAX_WREATH_DEGREE as u128,
        });
    }
    let overflow = Error::CapExceeded {
        what: "wreath product order",
        size: u128::MAX,
        cap: u128::MAX,
    };
    let order = h
        .order()
        .checked_pow(nx as u32)
        .and_then(|p| p.checked_mul(g.order()))
        .ok_or(overflow)?;

    let mut gens = Vec::new();
    for top in g.generators() {
        let images = (0..degree).map(|p| top.apply(p / ny) * ny + p % ny).collect();
        gens.push(Perm::from_vec_unchecked(images));
    }
    for x in 0..nx {
        for inner in h.generators() {
            let images = (0..degree)
                .map(|p| if p / ny == x { x * ny + inner.apply(p % ny) } else { p })
                .collect();
            gens.push(Perm::from_vec_unchecked(images));
        }
    }
    let cap = g.closure_cap().max(h.closure_cap());
    Ok(PermGroup::with_order(degree, gens, order, cap))
}

impl PermGroup {
    /// Wreath product `self ≀ h`; see [`wreath_perm`].
    pub fn wreath(&self, h: &PermGroup) -> Result<PermGroup> {
        wreath_perm(self, h)
    }
}
