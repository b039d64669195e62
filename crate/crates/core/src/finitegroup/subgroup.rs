use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use super::{ElementSet, FiniteGroup};
use crate::permgroup::PointPartition;
use crate::{Caps, Error, Result};

/// Left cosets of a subgroup, ordered by their minimum element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetDecomposition {
    pub subgroup: ElementSet,
    /// Each coset sorted ascending; coset 0 is the subgroup itself.
    pub cosets: Vec<Vec<usize>>,
    /// Minimum element of each coset.
    pub transversal: Vec<usize>,
    /// Coset index of every element.
    pub coset_of: Vec<usize>,
}

impl CosetDecomposition {
    pub fn partition(&self) -> PointPartition {
        PointPartition::new(self.coset_of.len(), self.cosets.clone()).expect("cosets partition the group")
    }

    pub fn index(&self) -> usize {
        self.cosets.len()
    }

    pub fn subgroup_order(&self) -> usize {
        self.subgroup.len()
    }

    /// Union of the cosets with the given indices.
    pub fn union_of(&self, coset_indices: &ElementSet) -> ElementSet {
        coset_indices
            .iter()
            .flat_map(|&c| self.cosets[c].iter().copied())
            .collect()
    }
}

/// The projection `G → G/H` together with the quotient's table.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    pub kernel: ElementSet,
    pub target: FiniteGroup,
    /// Coset index (= quotient element) of every source element.
    pub projection: Vec<usize>,
    pub cosets: CosetDecomposition,
}

impl QuotientMap {
    pub fn project_set(&self, set: &ElementSet) -> ElementSet {
        set.iter().map(|&x| self.projection[x]).collect()
    }
}

impl FiniteGroup {
    /// Smallest subgroup containing `gens`.
    pub fn subgroup_generated(&self, gens: &ElementSet) -> ElementSet {
        let mut set: ElementSet = BTreeSet::from([0]);
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        set
    }

    pub fn is_subgroup(&self, h: &ElementSet) -> bool {
        h.contains(&0)
            && h.iter().all(|&x| x < self.order())
            && h.iter().all(|&a| h.iter().all(|&b| h.contains(&self.mul(a, b))))
    }

    /// True iff `g h g⁻¹ ∈ h` for all `g` and all `h`.
    pub fn is_normal(&self, h: &ElementSet) -> Result<bool> {
        if !self.is_subgroup(h) {
            return Err(Error::NotASubgroup);
        }
        Ok((0..self.order()).all(|g| h.iter().all(|&x| h.contains(&self.mul(self.mul(g, x), self.inv(g))))))
    }

    /// Every subgroup, found by extending known subgroups one generator at a
    /// time. Sorted by size, then lexicographically.
    pub fn subgroups(&self, caps: &Caps) -> Result<Vec<ElementSet>> {
        if self.order() > caps.group_order {
            return Err(Error::CapExceeded {
                what: "group order for subgroup enumeration",
                size: self.order() as u128,
                cap: caps.group_order as u128,
            });
        }
        let mut found: BTreeSet<ElementSet> = BTreeSet::from([BTreeSet::from([0])]);
        let mut queue: VecDeque<ElementSet> = VecDeque::from([BTreeSet::from([0])]);
        while let Some(h) = queue.pop_front() {
            for x in 0..self.order() {
                if h.contains(&x) {
                    continue;
                }
                let mut gens = h.clone();
                gens.insert(x);
                let k = self.subgroup_generated(&gens);
                if !found.contains(&k) {
                    found.insert(k.clone());
                    queue.push_back(k);
                }
            }
        }
        let mut out: Vec<ElementSet> = found.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// All normal subgroups, sorted by size.
    pub fn normal_subgroups(&self, caps: &Caps) -> Result<Vec<ElementSet>> {
        let mut out = Vec::new();
        for h in self.subgroups(caps)? {
            if self.is_normal(&h)? {
                out.push(h);
            }
        }
        Ok(out)
    }

    /// Left cosets `gH`.
    pub fn cosets(&self, h: &ElementSet) -> Result<CosetDecomposition> {
        if !self.is_subgroup(h) {
            return Err(Error::NotASubgroup);
        }
        let n = self.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut cosets = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            let mut c: Vec<usize> = h.iter().map(|&x| self.mul(g, x)).collect();
            c.sort_unstable();
            for &x in &c {
                coset_of[x] = cosets.len();
            }
            cosets.push(c);
        }
        let transversal = cosets.iter().map(|c| c[0]).collect();
        Ok(CosetDecomposition {
            subgroup: h.clone(),
            cosets,
            transversal,
            coset_of,
        })
    }

    /// `G/H` with the table induced by coset representatives; every product
    /// of coset members is checked to land in the same coset.
    pub fn quotient(&self, h: &ElementSet) -> Result<QuotientMap> {
        if !self.is_normal(h)? {
            return Err(Error::NotNormal);
        }
        let dec = self.cosets(h)?;
        let m = dec.index();
        let mut table = vec![vec![0; m]; m];
        for (a, ca) in dec.cosets.iter().enumerate() {
            for (b, cb) in dec.cosets.iter().enumerate() {
                let target = dec.coset_of[self.mul(ca[0], cb[0])];
                for &x in ca {
                    for &y in cb {
                        if dec.coset_of[self.mul(x, y)] != target {
                            return Err(Error::NotNormal);
                        }
                    }
                }
                table[a][b] = target;
            }
        }
        let labels = dec.transversal.iter().map(|&r| format!("{}H", self.label(r))).collect();
        let target = FiniteGroup::from_table(format!("{}/H", self.name()), table, Some(labels))?;
        Ok(QuotientMap {
            kernel: h.clone(),
            target,
            projection: dec.coset_of.clone(),
            cosets: dec,
        })
    }
}
