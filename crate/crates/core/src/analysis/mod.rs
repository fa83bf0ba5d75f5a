//! Structural subsets and maps of a finite ring: units, nilpotents,
//! idempotents, the Jacobson radical and its radical-root, quasinilpotents,
//! commutants, annihilators and involutions.
//!
//! Everything here is computed from the defining first-order condition by
//! exhaustive search. The Jacobson radical in particular comes from the unit
//! test `1 - xa` being invertible for every `x`, so it doubles as the oracle
//! that any faster route could be checked against. Results are memoized per
//! ring; the caches are idempotent and safe under concurrent fills.

mod involution;

pub use involution::{
    build_involution, default_involution, projections, Involution, InvolutionKind, ProjectionSet,
};

use std::sync::Arc;

use once_cell::sync::OnceCell;
use serde::Serialize;
use thiserror::Error;

use crate::exec::{self, ExecMode};
use crate::ring::{Element, FiniteRing, RingId};

/// The distinguished element subsets of a ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SubsetKind {
    Units,
    Nilpotents,
    Idempotents,
    JacobsonRadical,
    SqrtJacobson,
    Quasinilpotents,
}

impl SubsetKind {
    pub const ALL: [SubsetKind; 6] = [
        SubsetKind::Units,
        SubsetKind::Nilpotents,
        SubsetKind::Idempotents,
        SubsetKind::JacobsonRadical,
        SubsetKind::SqrtJacobson,
        SubsetKind::Quasinilpotents,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SubsetKind::Units => "units",
            SubsetKind::Nilpotents => "nilpotents",
            SubsetKind::Idempotents => "idempotents",
            SubsetKind::JacobsonRadical => "jacobson_radical",
            SubsetKind::SqrtJacobson => "sqrt_jacobson",
            SubsetKind::Quasinilpotents => "quasinilpotents",
        }
    }

    fn slot(&self) -> usize {
        match self {
            SubsetKind::Units => 0,
            SubsetKind::Nilpotents => 1,
            SubsetKind::Idempotents => 2,
            SubsetKind::JacobsonRadical => 3,
            SubsetKind::SqrtJacobson => 4,
            SubsetKind::Quasinilpotents => 5,
        }
    }
}

/// A computed subset: sorted, duplicate-free member indices plus an O(1)
/// membership mask.
#[derive(Clone, Debug)]
pub struct SubsetCache {
    pub ring: RingId,
    pub kind: SubsetKind,
    pub members: Vec<usize>,
    mask: Vec<bool>,
}

impl SubsetCache {
    fn from_mask(ring: RingId, kind: SubsetKind, mask: Vec<bool>) -> Self {
        let members = mask
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
            .collect();
        SubsetCache {
            ring,
            kind,
            members,
            mask,
        }
    }

    pub fn contains(&self, index: usize) -> bool {
        self.mask[index]
    }

    pub fn contains_element(&self, e: Element) -> bool {
        debug_assert_eq!(e.ring_id(), self.ring);
        self.mask[e.index()]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Per-ring memo storage for the analysis layer.
pub(crate) struct AnalysisCaches {
    subsets: [OnceCell<SubsetCache>; 6],
    unit_inverses: OnceCell<Vec<Option<usize>>>,
    commutants: Box<[OnceCell<Arc<Vec<usize>>>]>,
    double_commutants: Box<[OnceCell<Arc<Vec<usize>>>]>,
    right_annihilators: Box<[OnceCell<Arc<Vec<usize>>>]>,
    right_ideals: Box<[OnceCell<Arc<Vec<usize>>>]>,
}

impl AnalysisCaches {
    pub(crate) fn new(order: usize) -> Self {
        let cells = |n: usize| (0..n).map(|_| OnceCell::new()).collect();
        AnalysisCaches {
            subsets: Default::default(),
            unit_inverses: OnceCell::new(),
            commutants: cells(order),
            double_commutants: cells(order),
            right_annihilators: cells(order),
            right_ideals: cells(order),
        }
    }
}

impl FiniteRing {
    /// The requested subset, computed on first use from its definition.
    pub fn subset(&self, kind: SubsetKind) -> &SubsetCache {
        self.analysis.subsets[kind.slot()].get_or_init(|| self.compute_subset(kind))
    }

    fn compute_subset(&self, kind: SubsetKind) -> SubsetCache {
        let n = self.order();
        let mode = ExecMode::default();
        let mask: Vec<bool> = match kind {
            SubsetKind::Units => self.unit_inverse_table().iter().map(Option::is_some).collect(),
            SubsetKind::Nilpotents => exec::map_range(mode, 0..n, |a| {
                self.trajectory_data(a).powers.contains(&0)
            }),
            SubsetKind::Idempotents => {
                exec::map_range(mode, 0..n, |a| self.mul_idx(a, a) == a)
            }
            SubsetKind::JacobsonRadical => {
                let inv = self.unit_inverse_table();
                let one = self.one().index();
                exec::map_range(mode, 0..n, |a| {
                    (0..n).all(|x| {
                        let u = self.add_idx(one, self.neg_idx(self.mul_idx(x, a)));
                        inv[u].is_some()
                    })
                })
            }
            SubsetKind::SqrtJacobson => {
                let radical = self.subset(SubsetKind::JacobsonRadical);
                // Powers cycle, so scanning the trajectory is exhaustive.
                exec::map_range(mode, 0..n, |a| {
                    self.trajectory_data(a)
                        .powers
                        .iter()
                        .any(|&p| radical.contains(p))
                })
            }
            SubsetKind::Quasinilpotents => {
                let inv = self.unit_inverse_table();
                let one = self.one().index();
                exec::map_range(mode, 0..n, |a| {
                    self.commutant_idx(a).iter().all(|&x| {
                        let u = self.add_idx(one, self.neg_idx(self.mul_idx(a, x)));
                        inv[u].is_some()
                    })
                })
            }
        };
        SubsetCache::from_mask(self.id(), kind, mask)
    }

    pub(crate) fn unit_inverse_table(&self) -> &Vec<Option<usize>> {
        self.analysis.unit_inverses.get_or_init(|| {
            let n = self.order();
            let one = self.one().index();
            exec::map_range(ExecMode::default(), 0..n, |a| {
                (0..n).find(|&b| self.mul_idx(a, b) == one && self.mul_idx(b, a) == one)
            })
        })
    }

    /// Two-sided inverse of `u`, when `u` is a unit.
    pub fn unit_inverse(&self, u: Element) -> Option<Element> {
        debug_assert_eq!(u.ring_id(), self.id());
        self.unit_inverse_table()[u.index()].map(|i| self.element(i))
    }

    pub fn is_unit(&self, u: Element) -> bool {
        self.unit_inverse_table()[u.index()].is_some()
    }

    pub(crate) fn commutant_idx(&self, a: usize) -> &Arc<Vec<usize>> {
        self.analysis.commutants[a].get_or_init(|| {
            Arc::new(
                (0..self.order())
                    .filter(|&x| self.mul_idx(a, x) == self.mul_idx(x, a))
                    .collect(),
            )
        })
    }

    pub(crate) fn double_commutant_idx(&self, a: usize) -> &Arc<Vec<usize>> {
        self.analysis.double_commutants[a].get_or_init(|| {
            let comm = self.commutant_idx(a).clone();
            Arc::new(
                (0..self.order())
                    .filter(|&x| {
                        comm.iter()
                            .all(|&y| self.mul_idx(x, y) == self.mul_idx(y, x))
                    })
                    .collect(),
            )
        })
    }

    /// `comm(a)`: every element commuting with `a`, sorted by index.
    pub fn commutant(&self, a: Element) -> Vec<Element> {
        self.commutant_idx(a.index())
            .iter()
            .map(|&i| self.element(i))
            .collect()
    }

    /// `comm2(a)`: every element commuting with all of `comm(a)`.
    pub fn double_commutant(&self, a: Element) -> Vec<Element> {
        self.double_commutant_idx(a.index())
            .iter()
            .map(|&i| self.element(i))
            .collect()
    }

    pub(crate) fn in_double_commutant(&self, x: usize, a: usize) -> bool {
        self.double_commutant_idx(a).binary_search(&x).is_ok()
    }

    pub(crate) fn right_annihilator_idx(&self, a: usize) -> &Arc<Vec<usize>> {
        self.analysis.right_annihilators[a].get_or_init(|| {
            Arc::new(
                (0..self.order())
                    .filter(|&x| self.mul_idx(a, x) == 0)
                    .collect(),
            )
        })
    }

    /// `r(a) = {x : ax = 0}`, sorted by index.
    pub fn right_annihilator(&self, a: Element) -> Vec<Element> {
        self.right_annihilator_idx(a.index())
            .iter()
            .map(|&i| self.element(i))
            .collect()
    }

    pub(crate) fn principal_right_ideal_idx(&self, a: usize) -> &Arc<Vec<usize>> {
        self.analysis.right_ideals[a].get_or_init(|| {
            let mut members: Vec<usize> = (0..self.order()).map(|x| self.mul_idx(a, x)).collect();
            members.sort_unstable();
            members.dedup();
            Arc::new(members)
        })
    }

    /// `aR = {ax : x in R}` as a sorted set.
    pub fn principal_right_ideal(&self, a: Element) -> Vec<Element> {
        self.principal_right_ideal_idx(a.index())
            .iter()
            .map(|&i| self.element(i))
            .collect()
    }
}

/// `lhs` a subset of `rhs`, both sorted ascending.
pub(crate) fn sorted_subset_of(lhs: &[usize], rhs: &[usize]) -> bool {
    let mut it = rhs.iter();
    'outer: for &x in lhs {
        for &y in it.by_ref() {
            if y == x {
                continue 'outer;
            }
            if y > x {
                return false;
            }
        }
        return false;
    }
    true
}

/// Errors from involution construction.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("{ring} is not commutative, so `{kind}` is not an anti-automorphism on it")]
    NotCommutative { ring: String, kind: String },
    #[error("involution kind `{kind}` does not apply to {ring}")]
    UnsupportedInvolution { ring: String, kind: String },
    #[error("involution axiom `{law}` fails on {ring} at {witness}")]
    InvolutionAxiom {
        ring: String,
        law: &'static str,
        witness: String,
    },
    #[error("no default involution for {ring}; pass one explicitly")]
    NoDefaultInvolution { ring: String },
}

#[cfg(test)]
mod tests;
