//! Blocks of imprimitivity by exhaustive search over the enumerated group.

use std::collections::BTreeSet;

use super::{PermGroup, PointPartition};
use crate::{Error, Result};

const MASK_BITS: usize = 128;

fn mask_of(points: &[usize]) -> u128 {
    points.iter().fold(0u128, |m, &x| m | (1u128 << x))
}

fn points_of(mask: u128) -> Vec<usize> {
    (0..MASK_BITS).filter(|&x| mask >> x & 1 == 1).collect()
}

impl PermGroup {
    fn check_mask_degree(&self) -> Result<()> {
        if self.degree() > MASK_BITS {
            return Err(Error::CapExceeded {
                what: "degree for block search",
                size: self.degree() as u128,
                cap: MASK_BITS as u128,
            });
        }
        Ok(())
    }

    /// True iff `g(b) ∩ b` is empty or all of `b` for every element `g`.
    pub fn is_block(&self, b: &[usize]) -> Result<bool> {
        if b.is_empty() {
            return Err(Error::EmptyBlock);
        }
        if let Some(&x) = b.iter().find(|&&x| x >= self.degree()) {
            return Err(Error::InvalidPartition(format!("point {x} out of range")));
        }
        self.check_mask_degree()?;
        self.is_block_mask(mask_of(b))
    }

    fn is_block_mask(&self, b: u128) -> Result<bool> {
        let pts = points_of(b);
        Ok(self.elements()?.iter().all(|g| {
            let img = pts.iter().fold(0u128, |m, &x| m | (1u128 << g.apply(x)));
            let meet = img & b;
            meet == 0 || meet == b
        }))
    }

    fn conjugate_blocks(&self, b: u128) -> Result<PointPartition> {
        let pts = points_of(b);
        let mut images = BTreeSet::new();
        for g in self.elements()? {
            images.insert(pts.iter().fold(0u128, |m, &x| m | (1u128 << g.apply(x))));
        }
        PointPartition::new(self.degree(), images.into_iter().map(points_of).collect())
    }

    /// All invariant partitions with classes of size `ell`.
    ///
    /// Candidate classes through point 0 are unions of orbits of the
    /// stabilizer of 0 (the stabilizer fixes the block containing 0), so only
    /// those subsets are tested.
    pub fn block_systems_of_size(&self, ell: usize) -> Result<Vec<PointPartition>> {
        let n = self.degree();
        if ell == 0 || n % ell != 0 {
            return Err(Error::NotADivisor { ell, degree: n });
        }
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        if ell == 1 {
            return Ok(vec![PointPartition::singletons(n)]);
        }
        if ell == n {
            return Ok(vec![PointPartition::whole(n)]);
        }
        self.check_mask_degree()?;

        let stab = self.stabilizer(0)?;
        let mut orbit_of = vec![usize::MAX; n];
        let mut suborbits: Vec<u128> = Vec::new();
        for start in 1..n {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let id = suborbits.len();
            let mut mask = 0u128;
            for g in &stab {
                let y = g.apply(start);
                orbit_of[y] = id;
                mask |= 1u128 << y;
            }
            suborbits.push(mask);
        }

        let mut found = Vec::new();
        let mut stack = vec![(0usize, 1u128)];
        while let Some((next, mask)) = stack.pop() {
            let size = mask.count_ones() as usize;
            if size == ell {
                if self.is_block_mask(mask)? {
                    found.push(self.conjugate_blocks(mask)?);
                }
                continue;
            }
            for (i, &orb) in suborbits.iter().enumerate().skip(next).rev() {
                if size + orb.count_ones() as usize <= ell {
                    stack.push((i + 1, mask | orb));
                }
            }
        }
        found.sort();
        found.dedup();
        Ok(found)
    }

    /// True iff the group is transitive and admits no nontrivial block.
    pub fn is_primitive(&self) -> Result<bool> {
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        let n = self.degree();
        for ell in (2..n).filter(|l| n % l == 0) {
            if !self.block_systems_of_size(ell)?.is_empty() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every invariant partition, trivial ones included, ordered by class
    /// size and then canonically.
    pub fn all_invariant_partitions(&self) -> Result<Vec<PointPartition>> {
        let n = self.degree();
        let mut out = Vec::new();
        for ell in (1..=n).filter(|l| n % l == 0) {
            out.extend(self.block_systems_of_size(ell)?);
        }
        Ok(out)
    }
}
