//! Finite groups as multiplication tables.
//!
//! Element 0 is always the identity. All cosets are left cosets `gH`, and
//! products are read left to right, matching left translation `x ↦ gx`.

mod automorphism;
mod catalog;
mod subgroup;

use std::collections::BTreeSet;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

pub use automorphism::{automorphism_group, induced_quotient_automorphism, isomorphism_between, GroupAutomorphism};
#[cfg(test)]
pub(crate) use catalog::next_permutation;
pub use catalog::{catalog_specs, from_catalog, parse_group_spec};
pub use subgroup::{CosetDecomposition, QuotientMap};

use crate::permgroup::{Perm, PermGroup};
use crate::{Caps, Error, Result};

/// A set of element indices.
pub type ElementSet = BTreeSet<usize>;

/// Largest order for which associativity is checked triple by triple.
pub const ASSOCIATIVITY_CHECK_LIMIT: usize = 128;

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
    labels: Vec<String>,
}

/// On-disk table format.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupTableFile {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Builds and validates a group from its multiplication table.
    ///
    /// `table[i][j]` is the index of `i * j`. Checks that 0 is the identity,
    /// that the table is a Latin square and, up to
    /// [`ASSOCIATIVITY_CHECK_LIMIT`], that it is associative. The first
    /// violating cell or triple is reported.
    pub fn from_table(name: impl Into<String>, table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!(
                    "row {i} has length {} (expected {n})",
                    row.len()
                )));
            }
            for (j, &x) in row.iter().enumerate() {
                if x >= n {
                    return Err(Error::InvalidTable(format!("entry ({i},{j}) = {x} out of range")));
                }
            }
            flat.extend_from_slice(row);
        }
        for i in 0..n {
            if flat[i] != i || flat[i * n] != i {
                return Err(Error::InvalidTable(format!(
                    "element 0 is not the identity (fails at {i})"
                )));
            }
        }
        for i in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for j in 0..n {
                let r = flat[i * n + j];
                let c = flat[j * n + i];
                if row_seen[r] {
                    return Err(Error::InvalidTable(format!("row {i} repeats {r}: not a Latin square")));
                }
                if col_seen[c] {
                    return Err(Error::InvalidTable(format!(
                        "column {i} repeats {c}: not a Latin square"
                    )));
                }
                row_seen[r] = true;
                col_seen[c] = true;
            }
        }
        if n <= ASSOCIATIVITY_CHECK_LIMIT {
            for a in 0..n {
                for b in 0..n {
                    let ab = flat[a * n + b];
                    for c in 0..n {
                        if flat[ab * n + c] != flat[a * n + flat[b * n + c]] {
                            return Err(Error::InvalidTable(format!(
                                "not associative: ({a}*{b})*{c} != {a}*({b}*{c})"
                            )));
                        }
                    }
                }
            }
        }
        let labels = match labels {
            Some(l) if l.len() == n => l,
            Some(l) => {
                return Err(Error::InvalidTable(format!("{} labels for {n} elements", l.len())));
            }
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        Ok(Self::assemble(name.into(), n, flat, labels))
    }

    fn assemble(name: String, order: usize, table: Vec<usize>, labels: Vec<String>) -> Self {
        let mut inverses = vec![0; order];
        for a in 0..order {
            inverses[a] = (0..order).find(|&b| table[a * order + b] == 0).expect("Latin square");
        }
        FiniteGroup {
            name,
            order,
            table,
            inverses,
            labels,
        }
    }

    /// Builds a group from a closure `mul` over `0..order`; used by the
    /// catalog, whose constructions are associative by design.
    pub(crate) fn from_fn(
        name: impl Into<String>,
        order: usize,
        labels: Vec<String>,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        let table: Vec<Vec<usize>> = (0..order).map(|a| (0..order).map(|b| mul(a, b)).collect()).collect();
        Self::from_table(name, table, Some(labels))
    }

    pub fn load_json(path: &Path, caps: &Caps) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let file: GroupTableFile =
            serde_json::from_str(&text).map_err(|e| Error::InvalidTable(format!("{}: {e}", path.display())))?;
        if file.order != file.table.len() {
            return Err(Error::InvalidTable(format!(
                "order {} does not match table size {}",
                file.order,
                file.table.len()
            )));
        }
        if file.order > caps.group_order {
            return Err(Error::CapExceeded {
                what: "group order",
                size: file.order as u128,
                cap: caps.group_order as u128,
            });
        }
        Self::from_table(format!("file:{}", path.display()), file.table, file.labels)
    }

    pub fn to_table_file(&self) -> GroupTableFile {
        GroupTableFile {
            order: self.order,
            table: (0..self.order)
                .map(|a| self.table[a * self.order..(a + 1) * self.order].to_vec())
                .collect(),
            labels: Some(self.labels.clone()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub(crate) fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Checks that every index in `set` is an element.
    pub fn check_set(&self, set: &ElementSet) -> Result<()> {
        match set.iter().find(|&&x| x >= self.order) {
            Some(&element) => Err(Error::ElementOutOfRange {
                element,
                order: self.order,
            }),
            None => Ok(()),
        }
    }

    pub fn inverse_set(&self, set: &ElementSet) -> ElementSet {
        set.iter().map(|&x| self.inv(x)).collect()
    }

    /// True iff `set` is closed under inverses.
    pub fn is_inverse_closed(&self, set: &ElementSet) -> bool {
        set.iter().all(|&x| set.contains(&self.inv(x)))
    }

    /// Left translation `x ↦ a·x` as a permutation of the element indices.
    pub fn left_translation(&self, a: usize) -> Perm {
        Perm::from_vec_unchecked((0..self.order).map(|x| self.mul(a, x)).collect())
    }

    /// The left regular representation: all left translations, a regular
    /// permutation group of degree `|G|`.
    pub fn left_regular_representation(&self) -> PermGroup {
        let translations = (0..self.order).map(|a| self.left_translation(a)).collect();
        PermGroup::from_elements(self.order, translations, self.order.max(1)).expect("left translations form a group")
    }

    /// Formats a set using element labels, e.g. `{r, s}`.
    pub fn format_set(&self, set: &ElementSet) -> String {
        let parts: Vec<&str> = set.iter().map(|&x| self.label(x)).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}
