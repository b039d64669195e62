use rayon::prelude::*;
use serde::Serialize;

use super::Mode;
use crate::digraph::{cayley, Digraph};
use crate::finitegroup::{automorphism_group, ElementSet, FiniteGroup, GroupAutomorphism};
use crate::iso::find_isomorphism_capped;
use crate::{Caps, Error, Result};

/// Largest group order for which [`is_ci_group`] enumerates all subsets.
pub const MAX_SWEEP_ORDER: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    NotIsomorphic,
    CIEquivalent,
    NonCIWitness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CIPairResult {
    pub verdict: Verdict,
    pub alpha: Option<GroupAutomorphism>,
    pub iso: Option<Vec<usize>>,
}

/// First automorphism in `auts` with `α(s) = s′`.
pub fn search_image_among(
    auts: &[GroupAutomorphism],
    s: &ElementSet,
    s_prime: &ElementSet,
) -> Option<GroupAutomorphism> {
    if s.len() != s_prime.len() {
        return None;
    }
    auts.iter()
        .find(|a| s.iter().all(|&x| s_prime.contains(&a.apply(x))))
        .cloned()
}

/// Scans `Aut(G)` in its deterministic enumeration order for `α(s) = s′`.
pub fn automorphic_image_search(
    g: &FiniteGroup,
    s: &ElementSet,
    s_prime: &ElementSet,
    caps: &Caps,
) -> Result<Option<GroupAutomorphism>> {
    g.check_set(s)?;
    g.check_set(s_prime)?;
    Ok(search_image_among(&automorphism_group(g, caps)?, s, s_prime))
}

fn check_mode(g: &FiniteGroup, s: &ElementSet, mode: Mode) -> Result<()> {
    g.check_set(s)?;
    if mode == Mode::Graph && !g.is_inverse_closed(s) {
        return Err(Error::NotInverseClosed);
    }
    Ok(())
}

/// Classifies a pair of connection sets: non-isomorphic Cayley digraphs,
/// related by a group automorphism, or isomorphic without one.
pub fn ci_pair(g: &FiniteGroup, s: &ElementSet, s_prime: &ElementSet, mode: Mode, caps: &Caps) -> Result<CIPairResult> {
    check_mode(g, s, mode)?;
    check_mode(g, s_prime, mode)?;
    let iso = find_isomorphism_capped(&cayley(g, s)?, &cayley(g, s_prime)?, caps)?;
    let Some(iso) = iso else {
        return Ok(CIPairResult {
            verdict: Verdict::NotIsomorphic,
            alpha: None,
            iso: None,
        });
    };
    let alpha = automorphic_image_search(g, s, s_prime, caps)?;
    let verdict = if alpha.is_some() {
        Verdict::CIEquivalent
    } else {
        Verdict::NonCIWitness
    };
    Ok(CIPairResult {
        verdict,
        alpha,
        iso: Some(iso),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CIWitness {
    pub s: ElementSet,
    pub s_prime: ElementSet,
    pub iso: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CIGroupVerdict {
    pub group: String,
    pub order: usize,
    pub mode: Mode,
    pub is_ci: bool,
    /// First witness in enumeration order.
    pub witness: Option<CIWitness>,
    /// Number of isomorphic pairs of orbit representatives found.
    pub witness_pairs: usize,
    pub connection_sets: usize,
    pub orbits: usize,
    pub pairs_checked: u64,
    pub exhaustive: bool,
}

fn mask_to_set(mask: u64, n: usize) -> ElementSet {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

fn image_mask(a: &GroupAutomorphism, mask: u64, n: usize) -> u64 {
    (0..n)
        .filter(|&i| mask >> i & 1 == 1)
        .fold(0, |m, i| m | 1 << a.apply(i))
}

/// Brute-force CI test.
///
/// Enumerates connection sets (all subsets, or inverse-closed ones in graph
/// mode), groups them into `Aut(G)`-orbits, and tests every pair of orbit
/// representatives of equal size for isomorphic Cayley digraphs; any such
/// pair is a witness that `G` is not CI. With a `budget` on the number of
/// pairs, a truncated scan is reported as non-exhaustive.
pub fn is_ci_group(g: &FiniteGroup, mode: Mode, budget: Option<u64>, caps: &Caps) -> Result<CIGroupVerdict> {
    let n = g.order();
    if n > MAX_SWEEP_ORDER {
        return Err(Error::CapExceeded {
            what: "group order for a CI sweep",
            size: n as u128,
            cap: MAX_SWEEP_ORDER as u128,
        });
    }
    let auts = automorphism_group(g, caps)?;
    let inv: Vec<usize> = (0..n).map(|x| g.inv(x)).collect();
    let admissible = |mask: u64| mode == Mode::Digraph || (0..n).all(|i| mask >> i & 1 == 0 || mask >> inv[i] & 1 == 1);

    let total = 1u64 << n;
    let mut visited = vec![false; total as usize];
    let mut reps: Vec<u64> = Vec::new();
    let mut connection_sets = 0;
    for mask in 0..total {
        if !admissible(mask) {
            continue;
        }
        connection_sets += 1;
        if visited[mask as usize] {
            continue;
        }
        for a in &auts {
            visited[image_mask(a, mask, n) as usize] = true;
        }
        reps.push(mask);
    }

    let mut pairs: Vec<(u64, u64)> = Vec::new();
    for (i, &a) in reps.iter().enumerate() {
        for &b in &reps[i + 1..] {
            if a.count_ones() == b.count_ones() {
                pairs.push((a, b));
            }
        }
    }
    let exhaustive = budget.is_none_or(|b| pairs.len() as u64 <= b);
    if let Some(b) = budget {
        pairs.truncate(b as usize);
    }

    let graphs: std::collections::HashMap<u64, Digraph> = reps
        .iter()
        .map(|&m| Ok((m, cayley(g, &mask_to_set(m, n))?)))
        .collect::<Result<_>>()?;
    let results: Vec<Option<Vec<usize>>> = pairs
        .par_iter()
        .map(|(a, b)| find_isomorphism_capped(&graphs[a], &graphs[b], caps))
        .collect::<Result<_>>()?;

    let mut witness = None;
    let mut witness_pairs = 0;
    for ((a, b), iso) in pairs.iter().zip(results) {
        if let Some(iso) = iso {
            witness_pairs += 1;
            if witness.is_none() {
                witness = Some(CIWitness {
                    s: mask_to_set(*a, n),
                    s_prime: mask_to_set(*b, n),
                    iso,
                });
            }
        }
    }
    Ok(CIGroupVerdict {
        group: g.name().to_string(),
        order: n,
        mode,
        is_ci: witness.is_none(),
        witness,
        witness_pairs,
        connection_sets,
        orbits: reps.len(),
        pairs_checked: pairs.len() as u64,
        exhaustive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finitegroup::from_catalog;

    fn set(xs: &[usize]) -> ElementSet {
        xs.iter().copied().collect()
    }

    #[test]
    fn image_search_examples() {
        let caps = Caps::default();
        let z6 = from_catalog("Z6").unwrap();
        let a = automorphic_image_search(&z6, &set(&[1, 3, 4]), &set(&[1, 3, 4]), &caps)
            .unwrap()
            .unwrap();
        assert!(a.is_identity());
        let neg = automorphic_image_search(&z6, &set(&[1, 3, 4]), &set(&[2, 3, 5]), &caps)
            .unwrap()
            .unwrap();
        assert_eq!(neg.images(), &[0, 5, 4, 3, 2, 1]);
        let z4 = from_catalog("Z4").unwrap();
        assert!(automorphic_image_search(&z4, &set(&[1]), &set(&[2]), &caps)
            .unwrap()
            .is_none());
    }

    #[test]
    fn pair_examples() {
        let caps = Caps::default();
        let z4 = from_catalog("Z4").unwrap();
        let r = ci_pair(&z4, &set(&[1]), &set(&[3]), Mode::Digraph, &caps).unwrap();
        assert_eq!(r.verdict, Verdict::CIEquivalent);
        assert_eq!(r.alpha.unwrap().apply(1), 3);
        let r = ci_pair(&z4, &set(&[1]), &set(&[2]), Mode::Digraph, &caps).unwrap();
        assert_eq!(r.verdict, Verdict::NotIsomorphic);
        assert!(matches!(
            ci_pair(&z4, &set(&[1]), &set(&[3]), Mode::Graph, &caps),
            Err(Error::NotInverseClosed)
        ));
    }

    #[test]
    fn small_group_verdicts() {
        let caps = Caps::default();
        let z1 = is_ci_group(&from_catalog("Z1").unwrap(), Mode::Digraph, None, &caps).unwrap();
        assert!(z1.is_ci && z1.exhaustive);
        assert_eq!(z1.connection_sets, 2);
        let z4 = is_ci_group(&from_catalog("Z4").unwrap(), Mode::Digraph, None, &caps).unwrap();
        assert!(z4.is_ci && z4.exhaustive);
        assert_eq!(z4.connection_sets, 16);
    }

    #[test]
    fn budget_marks_non_exhaustive() {
        let caps = Caps::default();
        let v = is_ci_group(&from_catalog("Z6").unwrap(), Mode::Digraph, Some(3), &caps).unwrap();
        assert!(!v.exhaustive);
        assert_eq!(v.pairs_checked, 3);
    }

    #[test]
    fn graph_mode_counts_inverse_closed_sets() {
        let caps = Caps::default();
        let s3 = from_catalog("S3").unwrap();
        let v = is_ci_group(&s3, Mode::Graph, None, &caps).unwrap();
        // identity, three involutions, and the pair of 3-cycles: 2^5 sets
        assert_eq!(v.connection_sets, 32);
        assert!(v.exhaustive);
    }
}
