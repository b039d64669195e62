use serde::{Deserialize, Serialize};

use super::Perm;
use crate::{Error, Result};

/// A partition of `0..degree` into nonempty classes.
///
/// Canonical form: each class sorted ascending, classes sorted by their
/// minimum element. Two partitions are equal iff their canonical forms are.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PointPartition {
    degree: usize,
    classes: Vec<Vec<usize>>,
}

impl PointPartition {
    pub fn new(degree: usize, classes: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; degree];
        let mut classes = classes;
        for class in &mut classes {
            if class.is_empty() {
                return Err(Error::InvalidPartition("empty class".into()));
            }
            class.sort_unstable();
            for &x in class.iter() {
                if x >= degree {
                    return Err(Error::InvalidPartition(format!("point {x} out of range")));
                }
                if seen[x] {
                    return Err(Error::InvalidPartition(format!("point {x} repeated")));
                }
                seen[x] = true;
            }
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!("point {missing} not covered")));
        }
        classes.sort_unstable_by_key(|c| c[0]);
        Ok(PointPartition { degree, classes })
    }

    /// Partition whose classes are the fibers of a labelling.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut by_label: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
        for (x, &l) in labels.iter().enumerate() {
            by_label.entry(l).or_default().push(x);
        }
        Self::new(labels.len(), by_label.into_values().collect()).expect("labels cover all points")
    }

    pub fn singletons(degree: usize) -> Self {
        PointPartition {
            degree,
            classes: (0..degree).map(|x| vec![x]).collect(),
        }
    }

    pub fn whole(degree: usize) -> Self {
        PointPartition {
            degree,
            classes: vec![(0..degree).collect()],
        }
    }

    /// Fibers `{x} × Y` of the product indexing `x * inner + y`.
    pub fn fibers(outer: usize, inner: usize) -> Self {
        PointPartition {
            degree: outer * inner,
            classes: (0..outer).map(|x| (x * inner..(x + 1) * inner).collect()).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Index of the class containing each point.
    pub fn class_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.degree];
        for (c, class) in self.classes.iter().enumerate() {
            for &x in class {
                idx[x] = c;
            }
        }
        idx
    }

    /// Common class size, if all classes have the same size.
    pub fn uniform_size(&self) -> Option<usize> {
        let first = self.classes.first()?.len();
        self.classes.iter().all(|c| c.len() == first).then_some(first)
    }

    pub fn refines(&self, other: &PointPartition) -> bool {
        if self.degree != other.degree {
            return false;
        }
        let idx = other.class_index();
        self.classes.iter().all(|c| c.iter().all(|&x| idx[x] == idx[c[0]]))
    }

    /// Image partition under a permutation of the points.
    pub fn image(&self, p: &Perm) -> PointPartition {
        let classes = self.classes.iter().map(|c| p.image_of_set(c)).collect();
        PointPartition::new(self.degree, classes).expect("image of a partition is a partition")
    }

    /// True iff `p` maps every class onto some class.
    pub fn is_preserved_by(&self, p: &Perm) -> bool {
        let idx = self.class_index();
        self.classes.iter().all(|c| {
            let target = idx[p.apply(c[0])];
            c.iter().all(|&x| idx[p.apply(x)] == target)
        })
    }

    /// Permutation of class indices induced by a partition-preserving `p`.
    pub fn induced_action(&self, p: &Perm) -> Option<Perm> {
        if !self.is_preserved_by(p) {
            return None;
        }
        let idx = self.class_index();
        let images = self.classes.iter().map(|c| idx[p.apply(c[0])]).collect();
        Perm::new(images).ok()
    }
}
