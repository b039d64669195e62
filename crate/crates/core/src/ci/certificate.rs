//! The quotient theorem, executed step by step on one instance.
//!
//! Given `H ◁ G` and quotient connection sets `S₁, S₂` with isomorphic
//! Cayley digraphs, the pipeline lifts both sets to `G`, checks that the
//! lifted digraphs are the expected wreath products with the expected
//! automorphism groups, checks that the cosets of `H` form the unique block
//! system of size `|H|`, finds `α ∈ Aut(G)` with `α(T₁) = T₂`, and verifies
//! that the induced `ᾱ` maps `S₁` to `S₂`. Each step is a named check.

use serde::{Deserialize, Serialize};

use super::lift::{check_lift, lift_with_quotient, verify_unique_block_partition, LiftChecks, LiftResult};
use super::pair::search_image_among;
use super::Mode;
use crate::digraph::cayley;
use crate::finitegroup::{automorphism_group, induced_quotient_automorphism, ElementSet, FiniteGroup};
use crate::iso::find_isomorphism_capped;
use crate::{Caps, Error, Result};

/// How the identity coset in a quotient connection set is treated.
///
/// With the identity coset present every vertex of the quotient digraph has
/// a loop, and the lifted digraph has complete looped fibres whatever the
/// case split decides. The wreath automorphism identity then fails whenever
/// the quotient digraph has clique twins (e.g. `Z4`, `H = {0, 2}`,
/// `S = {H, 1+H}` lifts to the looped `K4`). `Reduce` removes the identity
/// coset from both sets before lifting; loops at every vertex change neither
/// isomorphism nor automorphisms, and `ᾱ` always fixes the identity coset.
/// `Verbatim` lifts the sets as given.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum LoopPolicy {
    #[default]
    Reduce,
    Verbatim,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CertificateOptions {
    pub caps: Caps,
    pub mode: Mode,
    pub loop_policy: LoopPolicy,
}

impl Default for CertificateOptions {
    fn default() -> Self {
        CertificateOptions {
            caps: Caps::default(),
            mode: Mode::Digraph,
            loop_policy: LoopPolicy::Reduce,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CertificateStatus {
    /// Every check passed.
    Accepted,
    /// At least one check failed; the failing checks are named.
    Rejected { failed: Vec<String> },
    /// The quotient digraphs are not isomorphic, so there is nothing to prove.
    NotIsomorphic,
    /// All structural checks passed but no `α ∈ Aut(G)` maps `T₁` to `T₂`:
    /// `G` is not CI at this instance.
    HypothesisFails,
}

#[derive(Debug, Clone, Serialize)]
pub struct LiftSide {
    pub lift: LiftResult,
    pub checks: LiftChecks,
}

#[derive(Debug, Clone, Serialize)]
pub struct QuotientCICertificate {
    pub group: String,
    pub group_order: usize,
    pub normal_subgroup: ElementSet,
    pub ell: usize,
    pub quotient_order: usize,
    pub mode: Mode,
    pub loop_policy: LoopPolicy,
    /// Quotient connection sets as coset indices (coset `c` has minimum
    /// element `transversal[c]`).
    pub s1: ElementSet,
    pub s2: ElementSet,
    pub transversal: Vec<usize>,
    pub loop_reduced: bool,
    pub quotient_iso: Option<Vec<usize>>,
    pub side1: Option<LiftSide>,
    pub side2: Option<LiftSide>,
    pub alpha: Option<Vec<usize>>,
    pub alpha_bar: Option<Vec<usize>>,
    pub checks: Vec<Check>,
    pub status: CertificateStatus,
}

impl QuotientCICertificate {
    pub fn is_accepted(&self) -> bool {
        self.status == CertificateStatus::Accepted
    }

    pub fn check(&self, name: &str) -> Option<bool> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.passed)
    }

    pub fn failed_checks(&self) -> Vec<&str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name.as_str())
            .collect()
    }
}

struct Recorder(Vec<Check>);

impl Recorder {
    fn record(&mut self, name: impl Into<String>, passed: bool) -> bool {
        self.0.push(Check {
            name: name.into(),
            passed,
        });
        passed
    }
}

/// Runs the proof of the quotient theorem on `(G, H, S₁, S₂)`.
///
/// `s1` and `s2` are sets of coset indices of `G/H`. Errors are reserved for
/// invalid input (non-normal `H`, out-of-range or, in graph mode,
/// non-inverse-closed sets) and exceeded caps; every mathematical outcome is
/// reported through [`CertificateStatus`].
pub fn quotient_ci_certificate(
    g: &FiniteGroup,
    h: &ElementSet,
    s1: &ElementSet,
    s2: &ElementSet,
    options: &CertificateOptions,
) -> Result<QuotientCICertificate> {
    let caps = &options.caps;
    let q = g.quotient(h)?;
    for s in [s1, s2] {
        q.target.check_set(s)?;
        if options.mode == Mode::Graph && !q.target.is_inverse_closed(s) {
            return Err(Error::NotInverseClosed);
        }
    }
    let mut cert = QuotientCICertificate {
        group: g.name().to_string(),
        group_order: g.order(),
        normal_subgroup: h.clone(),
        ell: h.len(),
        quotient_order: q.target.order(),
        mode: options.mode,
        loop_policy: options.loop_policy,
        s1: s1.clone(),
        s2: s2.clone(),
        transversal: q.cosets.transversal.clone(),
        loop_reduced: false,
        quotient_iso: None,
        side1: None,
        side2: None,
        alpha: None,
        alpha_bar: None,
        checks: Vec::new(),
        status: CertificateStatus::Accepted,
    };
    let mut rec = Recorder(Vec::new());

    let q1 = cayley(&q.target, s1)?;
    let q2 = cayley(&q.target, s2)?;
    cert.quotient_iso = find_isomorphism_capped(&q1, &q2, caps)?;
    if !rec.record("quotient_graphs_isomorphic", cert.quotient_iso.is_some()) {
        cert.checks = rec.0;
        cert.status = CertificateStatus::NotIsomorphic;
        return Ok(cert);
    }

    if q.target.order() == 1 {
        // H = G: both sets are subsets of the one-element quotient and
        // isomorphism forces them to be equal.
        rec.record("degenerate_full_subgroup", s1 == s2);
        cert.alpha = Some((0..g.order()).collect());
        cert.alpha_bar = Some(vec![0]);
        return Ok(finish(cert, rec, true));
    }

    let (mut t1_set, mut t2_set) = (s1.clone(), s2.clone());
    let identity_coset = q.target.identity();
    if options.loop_policy == LoopPolicy::Reduce && (s1.contains(&identity_coset) || s2.contains(&identity_coset)) {
        rec.record(
            "identity_coset_consistent",
            s1.contains(&identity_coset) == s2.contains(&identity_coset),
        );
        t1_set.remove(&identity_coset);
        t2_set.remove(&identity_coset);
        cert.loop_reduced = true;
    }

    let lift1 = lift_with_quotient(g, &q, &t1_set)?;
    let lift2 = lift_with_quotient(g, &q, &t2_set)?;
    rec.record("lift_cases_agree", lift1.case == lift2.case);

    let mut sides = Vec::new();
    for (i, lift) in [(1, lift1), (2, lift2)] {
        let checks = check_lift(g, &q, &lift, caps)?;
        rec.record(format!("lift{i}_wreath_identity"), checks.wreath_identity);
        rec.record(format!("lift{i}_aut_order_equal"), checks.aut_order_equal);
        rec.record(
            format!("lift{i}_aut_generators_in_wreath"),
            checks.aut_generators_in_wreath,
        );
        rec.record(
            format!("lift{i}_wreath_generators_in_aut"),
            checks.wreath_generators_in_aut,
        );
        let unique =
            checks.aut.is_transitive() && verify_unique_block_partition(&checks.aut, lift.ell, &lift.coset_partition)?;
        rec.record(format!("lift{i}_unique_block_partition"), unique);
        sides.push(LiftSide { lift, checks });
    }
    let side2 = sides.pop().expect("two sides");
    let side1 = sides.pop().expect("two sides");

    let auts = automorphism_group(g, caps)?;
    let alpha = search_image_among(&auts, &side1.lift.t, &side2.lift.t);
    let found = rec.record("alpha_found", alpha.is_some());
    if let Some(alpha) = &alpha {
        let perm = alpha.as_perm();
        rec.record(
            "alpha_maps_cosets_to_cosets",
            side1.lift.coset_partition.is_preserved_by(&perm),
        );
        rec.record("alpha_fixes_subgroup", alpha.image_of_set(h) == *h);
        match induced_quotient_automorphism(alpha, &q) {
            Ok(bar) => {
                rec.record("alpha_bar_well_defined", true);
                rec.record("alpha_bar_maps_s1_to_s2", bar.image_of_set(s1) == *s2);
                cert.alpha_bar = Some(bar.images().to_vec());
            }
            Err(_) => {
                rec.record("alpha_bar_well_defined", false);
            }
        }
        cert.alpha = Some(alpha.images().to_vec());
    }
    cert.side1 = Some(side1);
    cert.side2 = Some(side2);
    Ok(finish(cert, rec, found))
}

fn finish(mut cert: QuotientCICertificate, rec: Recorder, alpha_found: bool) -> QuotientCICertificate {
    cert.checks = rec.0;
    let failed: Vec<String> = cert
        .checks
        .iter()
        .filter(|c| !c.passed && c.name != "alpha_found")
        .map(|c| c.name.clone())
        .collect();
    cert.status = if !failed.is_empty() {
        CertificateStatus::Rejected { failed }
    } else if !alpha_found {
        CertificateStatus::HypothesisFails
    } else {
        CertificateStatus::Accepted
    };
    cert
}
