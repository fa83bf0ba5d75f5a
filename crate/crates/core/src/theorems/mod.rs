//! Machine verification of the statement corpus by exhaustive sweeps.
//!
//! Each verified statement has a stable key (`Thm-1234`, `Lem-3-1`, ...)
//! decoupled from any external numbering. A sweep enumerates a tuple
//! universe (elements, pairs or triples of a ring, crossed with an exponent
//! range), filters by the statement's hypothesis, evaluates its conclusion
//! on every surviving tuple, and aggregates a [`TheoremReport`]. Reports are
//! deterministic: tuples are visited in lexicographic order and sampled
//! sweeps draw from a fixed-seed stratified generator.

mod audit;
mod characterize;
mod spectral;
mod structure;
mod transfer;

pub use audit::{audit_paper_examples, AuditClaim, AuditReport};
pub use characterize::check_pns_characterizations;
pub use spectral::check_spectral_equality;
pub use structure::{
    classify, conjecture_search, structural_props, Flag, RingClassification, StructuralOptions,
};
pub use transfer::{cline_transfer, jacobson_transfer, star_transfers};

use std::collections::BTreeMap;

use once_cell::sync::OnceCell;
use serde::Serialize;
use thiserror::Error;

use crate::analysis::{build_involution, default_involution, AnalysisError, Involution, InvolutionKind};
use crate::exec::ExecMode;
use crate::inverse::{pns_formula, PnsCertificate};
use crate::ring::{Element, FiniteRing};

/// Stable keys of the verified statements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// Seven-way equivalence for two elements sharing a spectral idempotent.
    Thm1234,
    /// Characterizations of pns invertibility of a single element.
    Thm13,
    /// Commuting-idempotent power criterion for pns invertibility.
    Cor15,
    /// Transfer of pns inverses between `ac` and `ba` under `aba = aca`.
    Lem31,
    /// Transfer of pns inverses between `1 - ba` and `1 - ac` with explicit
    /// correction units.
    Lem32,
    /// Star variant of the product transfer under `aba = ba^2 = a^2c = aca`.
    Thm5251,
    /// Star variant of the `1 - x` transfer under the same hypothesis.
    Thm5252,
    /// Periodic rings are exactly the pseudo pi-polar rings with nil radical.
    Thm22,
    /// In pseudo pi-polar rings the radical root equals the quasinilpotents.
    PropQnil,
    /// Corner rings of pseudo pi-polar rings stay pseudo pi-polar.
    PropCorner,
    /// Special local base rings lift to pseudo pi-polar triangular rings.
    PropTn,
    /// Power-identity base rings lift to pseudo pi-polar matrix rings.
    PropMn,
}

impl TheoremId {
    pub const ALL: [TheoremId; 12] = [
        TheoremId::Thm1234,
        TheoremId::Thm13,
        TheoremId::Cor15,
        TheoremId::Lem31,
        TheoremId::Lem32,
        TheoremId::Thm5251,
        TheoremId::Thm5252,
        TheoremId::Thm22,
        TheoremId::PropQnil,
        TheoremId::PropCorner,
        TheoremId::PropTn,
        TheoremId::PropMn,
    ];

    pub fn key(&self) -> &'static str {
        match self {
            TheoremId::Thm1234 => "Thm-1234",
            TheoremId::Thm13 => "Thm-1-3",
            TheoremId::Cor15 => "Cor-1-5",
            TheoremId::Lem31 => "Lem-3-1",
            TheoremId::Lem32 => "Lem-3-2",
            TheoremId::Thm5251 => "Thm-525-1",
            TheoremId::Thm5252 => "Thm-525-2",
            TheoremId::Thm22 => "Thm-2-2",
            TheoremId::PropQnil => "Prop-qnil",
            TheoremId::PropCorner => "Prop-corner",
            TheoremId::PropTn => "Prop-Tn",
            TheoremId::PropMn => "Prop-Mn",
        }
    }

    pub fn parse(key: &str) -> Option<TheoremId> {
        TheoremId::ALL.iter().copied().find(|id| id.key() == key)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremStatus {
    Verified,
    Violated,
    Vacuous,
}

/// A counterexample (or suspicious observation) with every binding needed to
/// replay it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub description: String,
    pub bindings: BTreeMap<String, String>,
}

impl Witness {
    pub fn new(description: impl Into<String>) -> Self {
        Witness {
            description: description.into(),
            bindings: BTreeMap::new(),
        }
    }

    pub fn bind(mut self, name: &str, value: impl ToString) -> Self {
        self.bindings.insert(name.to_string(), value.to_string());
        self
    }

    pub fn bind_element(self, name: &str, ring: &FiniteRing, e: Element) -> Self {
        self.bind(name, format!("{} (#{})", ring.literal(e), e.index()))
    }
}

/// Outcome of one theorem sweep.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremReport {
    pub theorem: String,
    pub ring: String,
    pub parameters: BTreeMap<String, String>,
    /// Tuples enumerated or drawn.
    pub universe: u64,
    /// Tuples that satisfied the statement's hypothesis.
    pub hypothesis_met: u64,
    pub status: TheoremStatus,
    pub counterexamples: Vec<Witness>,
    pub notes: Vec<String>,
}

const MAX_WITNESSES: usize = 100;

pub(crate) struct ReportBuilder {
    theorem: String,
    ring: String,
    parameters: BTreeMap<String, String>,
    universe: u64,
    hypothesis_met: u64,
    counterexamples: Vec<Witness>,
    suppressed: u64,
    notes: Vec<String>,
}

impl ReportBuilder {
    pub(crate) fn new(theorem: &str, ring: &str) -> Self {
        ReportBuilder {
            theorem: theorem.to_string(),
            ring: ring.to_string(),
            parameters: BTreeMap::new(),
            universe: 0,
            hypothesis_met: 0,
            counterexamples: Vec::new(),
            suppressed: 0,
            notes: Vec::new(),
        }
    }

    pub(crate) fn parameter(&mut self, name: &str, value: impl ToString) -> &mut Self {
        self.parameters.insert(name.to_string(), value.to_string());
        self
    }

    pub(crate) fn note(&mut self, text: impl Into<String>) -> &mut Self {
        self.notes.push(text.into());
        self
    }

    pub(crate) fn absorb(&mut self, outcome: TupleOutcome) {
        self.universe += outcome.examined;
        self.hypothesis_met += outcome.met;
        for w in outcome.violations {
            if self.counterexamples.len() < MAX_WITNESSES {
                self.counterexamples.push(w);
            } else {
                self.suppressed += 1;
            }
        }
    }

    pub(crate) fn finish(mut self) -> TheoremReport {
        if self.suppressed > 0 {
            self.notes.push(format!(
                "{} further counterexamples suppressed after the first {MAX_WITNESSES}",
                self.suppressed
            ));
        }
        let status = if !self.counterexamples.is_empty() {
            TheoremStatus::Violated
        } else if self.hypothesis_met == 0 {
            TheoremStatus::Vacuous
        } else {
            TheoremStatus::Verified
        };
        TheoremReport {
            theorem: self.theorem,
            ring: self.ring,
            parameters: self.parameters,
            universe: self.universe,
            hypothesis_met: self.hypothesis_met,
            status,
            counterexamples: self.counterexamples,
            notes: self.notes,
        }
    }
}

/// Verdict for a single swept tuple.
#[derive(Clone, Debug, Default)]
pub(crate) struct TupleOutcome {
    pub examined: u64,
    pub met: u64,
    pub violations: Vec<Witness>,
}

impl TupleOutcome {
    pub(crate) fn vacuous() -> Self {
        TupleOutcome {
            examined: 1,
            met: 0,
            violations: Vec::new(),
        }
    }

    pub(crate) fn checked(violations: Vec<Witness>) -> Self {
        TupleOutcome {
            examined: 1,
            met: 1,
            violations,
        }
    }

    pub(crate) fn merge(mut self, other: TupleOutcome) -> Self {
        self.examined += other.examined;
        self.met += other.met;
        self.violations.extend(other.violations);
        self
    }
}

/// Sweep configuration.
#[derive(Clone, Debug)]
pub struct SweepOptions {
    /// Inclusive exponent range swept wherever a statement quantifies over n.
    pub n_range: (u32, u32),
    /// Involution for star statements; the ring default when absent.
    pub involution: Option<InvolutionKind>,
    /// Seed for sampled sweeps.
    pub seed: u64,
    /// Minimum hypothesis-satisfying tuples a sampled sweep must reach.
    pub sample_target: u64,
    /// Pair sweeps are exhaustive up to this ring order.
    pub pair_cap: usize,
    /// Triple sweeps are exhaustive up to this ring order.
    pub triple_cap: usize,
    pub mode: ExecMode,
}

pub const DEFAULT_SWEEP_SEED: u64 = 0x00C0_FFEE;

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            n_range: (1, 4),
            involution: None,
            seed: DEFAULT_SWEEP_SEED,
            sample_target: 10_000,
            pair_cap: 256,
            triple_cap: 16,
            mode: ExecMode::default(),
        }
    }
}

impl SweepOptions {
    pub fn with_n_range(mut self, lo: u32, hi: u32) -> Self {
        assert!(1 <= lo && lo <= hi, "need 1 <= lo <= hi");
        self.n_range = (lo, hi);
        self
    }

    pub fn exponents(&self) -> impl Iterator<Item = u32> + Clone {
        self.n_range.0..=self.n_range.1
    }

    pub(crate) fn n_range_text(&self) -> String {
        format!("{}..{}", self.n_range.0, self.n_range.1)
    }
}

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Involution(#[from] AnalysisError),
}

/// Per-sweep cache of pns certificates, formula route, keyed by element and
/// exponent. Fills are idempotent, so concurrent strata can share it.
pub(crate) struct PnsContext<'r> {
    pub ring: &'r FiniteRing,
    n_lo: u32,
    cells: Vec<Box<[OnceCell<Option<PnsCertificate>>]>>,
}

impl<'r> PnsContext<'r> {
    pub(crate) fn new(ring: &'r FiniteRing, n_range: (u32, u32)) -> Self {
        let (lo, hi) = n_range;
        assert!(1 <= lo && lo <= hi);
        let per_n = || (0..ring.order()).map(|_| OnceCell::new()).collect();
        PnsContext {
            ring,
            n_lo: lo,
            cells: (lo..=hi).map(|_| per_n()).collect(),
        }
    }

    pub(crate) fn pns(&self, a: usize, n: u32) -> Option<PnsCertificate> {
        let row = &self.cells[(n - self.n_lo) as usize];
        *row[a].get_or_init(|| {
            pns_formula(self.ring, self.ring.element(a), n)
                .expect("the spectral idempotent is unique")
        })
    }
}

fn resolve_involution(
    ring: &FiniteRing,
    options: &SweepOptions,
) -> Result<Involution, AnalysisError> {
    match &options.involution {
        Some(kind) => build_involution(ring, kind.clone()),
        None => default_involution(ring),
    }
}

/// Runs the sweep for one statement over one ring.
pub fn verify_theorem(
    ring: &FiniteRing,
    id: TheoremId,
    options: &SweepOptions,
) -> Result<TheoremReport, VerifyError> {
    let report = match id {
        TheoremId::Thm1234 => spectral::sweep(ring, options),
        TheoremId::Thm13 => characterize::sweep(ring, options, characterize::CheckSet::Full),
        TheoremId::Cor15 => {
            characterize::sweep(ring, options, characterize::CheckSet::PolarPowerOnly)
        }
        TheoremId::Lem31 => transfer::cline_sweep(ring, options),
        TheoremId::Lem32 => transfer::jacobson_sweep(ring, options),
        TheoremId::Thm5251 => {
            let inv = resolve_involution(ring, options)?;
            transfer::star_product_sweep(ring, &inv, options)
        }
        TheoremId::Thm5252 => {
            let inv = resolve_involution(ring, options)?;
            transfer::star_one_minus_sweep(ring, &inv, options)
        }
        TheoremId::Thm22 => structure::theorem_2_2(ring),
        TheoremId::PropQnil => structure::qnil_equality(ring),
        TheoremId::PropCorner => structure::corner_closure(ring, &StructuralOptions::default()),
        TheoremId::PropTn => structure::triangular_lift(ring, &StructuralOptions::default()),
        TheoremId::PropMn => structure::matrix_lift(ring, &StructuralOptions::default()),
    };
    Ok(report)
}

/// Oracle/formula agreement of the pns routes over a whole ring: same
/// existence verdict, same inverse, same spectral idempotent, both
/// certificates valid. This is the cross-check behind every other sweep.
pub fn path_agreement(ring: &FiniteRing, options: &SweepOptions) -> TheoremReport {
    let mut builder = ReportBuilder::new("Path-Agreement", &ring.descriptor().to_string());
    builder.parameter("n_range", options.n_range_text());
    let outcomes = crate::exec::map_range(options.mode, 0..ring.order(), |ai| {
        let a = ring.element(ai);
        let mut out = TupleOutcome::default();
        for n in options.exponents() {
            let mut violations = Vec::new();
            let oracle = crate::inverse::pns_oracle(ring, a, n);
            let formula = match pns_formula(ring, a, n) {
                Ok(f) => f,
                Err(err) => {
                    violations.push(
                        Witness::new(format!("formula route failed: {err}"))
                            .bind_element("a", ring, a)
                            .bind("n", n),
                    );
                    out = out.merge(TupleOutcome::checked(violations));
                    continue;
                }
            };
            match (oracle, formula) {
                (None, None) => {}
                (Some(o), Some(f)) => {
                    if o.x != f.x || o.e != f.e || o.k != f.k {
                        violations.push(
                            Witness::new("oracle and formula disagree on the certificate")
                                .bind_element("a", ring, a)
                                .bind("n", n)
                                .bind_element("oracle_x", ring, o.x)
                                .bind_element("formula_x", ring, f.x),
                        );
                    }
                    for (label, cert) in [("oracle", &o), ("formula", &f)] {
                        if let Err(why) = crate::inverse::validate_pns(ring, cert) {
                            violations.push(
                                Witness::new(format!("{label} certificate invalid: {why}"))
                                    .bind_element("a", ring, a)
                                    .bind("n", n),
                            );
                        }
                    }
                }
                (oracle, formula) => {
                    violations.push(
                        Witness::new("oracle and formula disagree on existence")
                            .bind_element("a", ring, a)
                            .bind("n", n)
                            .bind("oracle", oracle.is_some())
                            .bind("formula", formula.is_some()),
                    );
                }
            }
            out = out.merge(TupleOutcome::checked(violations));
        }
        out
    });
    for outcome in outcomes {
        builder.absorb(outcome);
    }
    builder.finish()
}
