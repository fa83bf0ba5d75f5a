//! Involutions (self-inverse anti-automorphisms) on finite rings and their
//! projections.

use std::fmt;

use crate::exec::{self, ExecMode};
use crate::ring::{decode, encode, upper_pos, Element, FiniteRing, Repr, RingId};

use super::{AnalysisError, SubsetKind};

/// Which involution to attach to a ring.
///
/// `Identity` needs a commutative ring. `Transpose` applies to full matrix
/// rings (ordinary transpose) and to upper triangular rings (transpose across
/// the anti-diagonal, which keeps the shape upper triangular); both need a
/// commutative base. `Componentwise` pairs involutions on a product ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvolutionKind {
    Identity,
    Transpose,
    Componentwise(Box<InvolutionKind>, Box<InvolutionKind>),
}

impl fmt::Display for InvolutionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvolutionKind::Identity => write!(f, "identity"),
            InvolutionKind::Transpose => write!(f, "transpose"),
            InvolutionKind::Componentwise(l, r) => write!(f, "componentwise({l},{r})"),
        }
    }
}

/// A validated involution: a stored bijection on element indices.
#[derive(Clone, Debug)]
pub struct Involution {
    ring: RingId,
    kind: InvolutionKind,
    map: Vec<usize>,
}

impl Involution {
    pub fn ring_id(&self) -> RingId {
        self.ring
    }

    pub fn kind(&self) -> &InvolutionKind {
        &self.kind
    }

    pub fn apply(&self, x: Element) -> Element {
        debug_assert_eq!(x.ring_id(), self.ring);
        Element::raw(self.ring, self.map[x.index()])
    }

    pub(crate) fn apply_idx(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_self_adjoint(&self, x: Element) -> bool {
        self.map[x.index()] == x.index()
    }
}

/// Self-adjoint idempotents of a ring under a fixed involution.
#[derive(Clone, Debug)]
pub struct ProjectionSet {
    pub ring: RingId,
    pub kind: InvolutionKind,
    pub members: Vec<usize>,
}

impl ProjectionSet {
    pub fn contains(&self, index: usize) -> bool {
        self.members.binary_search(&index).is_ok()
    }
}

fn raw_map(ring: &FiniteRing, kind: &InvolutionKind) -> Result<Vec<usize>, AnalysisError> {
    let unsupported = || AnalysisError::UnsupportedInvolution {
        ring: ring.descriptor().to_string(),
        kind: kind.to_string(),
    };
    match kind {
        InvolutionKind::Identity => {
            if !ring.is_commutative() {
                return Err(AnalysisError::NotCommutative {
                    ring: ring.descriptor().to_string(),
                    kind: kind.to_string(),
                });
            }
            Ok((0..ring.order()).collect())
        }
        InvolutionKind::Transpose => match ring.repr() {
            Repr::Matrix { k, cells, base } => {
                if !base.is_commutative() {
                    return Err(AnalysisError::NotCommutative {
                        ring: ring.descriptor().to_string(),
                        kind: kind.to_string(),
                    });
                }
                Ok((0..ring.order())
                    .map(|i| {
                        let entries = decode(i, *cells, base.order());
                        let mut out = vec![0usize; *cells];
                        for r in 0..*k {
                            for c in 0..*k {
                                out[c * k + r] = entries[r * k + c];
                            }
                        }
                        encode(&out, base.order())
                    })
                    .collect())
            }
            Repr::Triangular { k, cells, base } => {
                if !base.is_commutative() {
                    return Err(AnalysisError::NotCommutative {
                        ring: ring.descriptor().to_string(),
                        kind: kind.to_string(),
                    });
                }
                // Anti-diagonal transpose: (r, c) -> (k-1-c, k-1-r).
                Ok((0..ring.order())
                    .map(|i| {
                        let entries = decode(i, *cells, base.order());
                        let mut out = vec![0usize; *cells];
                        for r in 0..*k {
                            for c in r..*k {
                                out[upper_pos(*k, k - 1 - c, k - 1 - r)] =
                                    entries[upper_pos(*k, r, c)];
                            }
                        }
                        encode(&out, base.order())
                    })
                    .collect())
            }
            _ => Err(unsupported()),
        },
        InvolutionKind::Componentwise(lk, rk) => match ring.repr() {
            Repr::Product { left, right } => {
                let lmap = raw_map(left, lk)?;
                let rmap = raw_map(right, rk)?;
                Ok((0..ring.order())
                    .map(|i| lmap[i / right.order()] * right.order() + rmap[i % right.order()])
                    .collect())
            }
            _ => Err(unsupported()),
        },
    }
}

/// Builds and exhaustively validates an involution on `ring`.
pub fn build_involution(
    ring: &FiniteRing,
    kind: InvolutionKind,
) -> Result<Involution, AnalysisError> {
    let map = raw_map(ring, &kind)?;
    let n = ring.order();
    let fail = |law, ids: Vec<usize>| {
        let parts: Vec<String> = ids.iter().map(|&i| ring.literal(ring.element(i)).to_string()).collect();
        Err(AnalysisError::InvolutionAxiom {
            ring: ring.descriptor().to_string(),
            law,
            witness: format!("({})", parts.join(", ")),
        })
    };
    for x in 0..n {
        if map[map[x]] != x {
            return fail("(x*)* = x", vec![x]);
        }
    }
    let bad = exec::find_map_first(ExecMode::default(), 0..n, |x| {
        for y in 0..n {
            if map[ring.add_idx(x, y)] != ring.add_idx(map[x], map[y]) {
                return Some(("(x+y)* = x* + y*", x, y));
            }
            if map[ring.mul_idx(x, y)] != ring.mul_idx(map[y], map[x]) {
                return Some(("(xy)* = y* x*", x, y));
            }
        }
        None
    });
    if let Some((law, x, y)) = bad {
        return fail(law, vec![x, y]);
    }
    Ok(Involution {
        ring: ring.id(),
        kind,
        map,
    })
}

/// The involution a ring naturally carries: identity on commutative rings,
/// transpose on matrix shapes over a commutative base, componentwise on
/// products of such rings.
pub fn default_involution(ring: &FiniteRing) -> Result<Involution, AnalysisError> {
    let kind = default_kind(ring)?;
    build_involution(ring, kind)
}

fn default_kind(ring: &FiniteRing) -> Result<InvolutionKind, AnalysisError> {
    if ring.is_commutative() {
        return Ok(InvolutionKind::Identity);
    }
    match ring.repr() {
        Repr::Matrix { base, .. } | Repr::Triangular { base, .. } if base.is_commutative() => {
            Ok(InvolutionKind::Transpose)
        }
        Repr::Product { left, right } => Ok(InvolutionKind::Componentwise(
            Box::new(default_kind(left)?),
            Box::new(default_kind(right)?),
        )),
        _ => Err(AnalysisError::NoDefaultInvolution {
            ring: ring.descriptor().to_string(),
        }),
    }
}

/// All self-adjoint idempotents of `ring` under `inv`, sorted.
pub fn projections(ring: &FiniteRing, inv: &Involution) -> ProjectionSet {
    assert_eq!(inv.ring_id(), ring.id(), "involution belongs to another ring");
    let idempotents = ring.subset(SubsetKind::Idempotents);
    let members = idempotents
        .members
        .iter()
        .copied()
        .filter(|&p| inv.apply_idx(p) == p)
        .collect();
    ProjectionSet {
        ring: ring.id(),
        kind: inv.kind().clone(),
        members,
    }
}
