//! Drazin-style generalized inverses with verifiable certificates.
//!
//! Four notions are computed, each along two independent routes where the
//! theory provides one:
//!
//! * Drazin inverse: `xax = x`, `x` in `comm2(a)`, `a - a^2 x` nilpotent.
//! * Pseudo Drazin (p-Drazin): same but `a - a^2 x` has a power in the
//!   Jacobson radical (it lies in the radical root `sqrt J`).
//! * Pseudo n-strong Drazin (pns): `xax = x`, `x` in `comm2(a)`,
//!   `a^n - ax` in `sqrt J`. Computed both by definitional exhaustive
//!   search ([`pns_oracle`]) and by the closed formula
//!   `x = (1 + a^n - e)^{-1} a^{n-1} e` over spectral idempotents
//!   ([`pns_formula`]).
//! * pns-*-Drazin: a pns inverse whose spectral idempotent `ax` is
//!   self-adjoint under a ring involution.
//!
//! Absence of an inverse is a normal return value; certificates carry every
//! piece needed to re-verify the claim independently.

use serde::Serialize;
use thiserror::Error;

use crate::analysis::{projections, Involution, InvolutionKind, SubsetKind};
use crate::ring::{Element, FiniteRing};

/// Which route produced a certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InversePath {
    Oracle,
    Formula,
}

/// Witness that `x` is the pns inverse of `a` at exponent `n`.
///
/// `e = ax = xa` is the spectral idempotent and `k` the smallest exponent
/// with `(a^n - e)^k` in the Jacobson radical.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PnsCertificate {
    pub a: Element,
    pub n: u32,
    pub x: Element,
    pub e: Element,
    pub k: u32,
    pub path: InversePath,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DrazinFlavor {
    Drazin,
    PseudoDrazin,
}

/// Witness for a (pseudo) Drazin inverse. `defect = a - a^2 x`; `k` is the
/// smallest exponent making `defect^k` zero (Drazin) or a member of the
/// Jacobson radical (pseudo). For the pseudo flavor a pseudo-polar idempotent
/// `p` (with `p` in `comm2(a)`, `a + p` a unit, `ap` in `sqrt J`) is attached.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DrazinCertificate {
    pub a: Element,
    pub x: Element,
    pub flavor: DrazinFlavor,
    pub defect: Element,
    pub k: u32,
    pub polar_idempotent: Option<Element>,
}

/// A pns certificate whose spectral idempotent is a projection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarPnsCertificate {
    pub base: PnsCertificate,
    pub involution: InvolutionKind,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum InverseError {
    #[error("{literal} is not a unit in {ring}")]
    NotAUnit { ring: String, literal: String },
    #[error(
        "{count} spectral idempotents found for {literal} at n={n} in {ring}; \
         the spectral idempotent must be unique"
    )]
    MultipleSpectralIdempotents {
        ring: String,
        literal: String,
        n: u32,
        count: usize,
        witnesses: Vec<usize>,
    },
    #[error("1 + a^n - e is not invertible for {literal} at n={n} in {ring}")]
    SpectralUnitFailure {
        ring: String,
        literal: String,
        n: u32,
    },
}

/// Two-sided inverse of a unit.
pub fn invert_unit(ring: &FiniteRing, u: Element) -> Result<Element, InverseError> {
    ring.unit_inverse(u).ok_or_else(|| InverseError::NotAUnit {
        ring: ring.descriptor().to_string(),
        literal: ring.literal(u).to_string(),
    })
}

fn min_radical_exponent(ring: &FiniteRing, d: usize) -> Option<u32> {
    let radical = ring.subset(SubsetKind::JacobsonRadical);
    let data = ring.trajectory_data(d);
    data.powers
        .iter()
        .position(|&p| radical.contains(p))
        .map(|i| i as u32 + 1)
}

fn min_zero_exponent(ring: &FiniteRing, d: usize) -> Option<u32> {
    let data = ring.trajectory_data(d);
    data.powers.iter().position(|&p| p == 0).map(|i| i as u32 + 1)
}

fn drazin_scan(ring: &FiniteRing, a: Element, flavor: DrazinFlavor) -> Option<DrazinCertificate> {
    let ai = a.index();
    let defect_ok = |d: usize| match flavor {
        DrazinFlavor::Drazin => ring.subset(SubsetKind::Nilpotents).contains(d),
        DrazinFlavor::PseudoDrazin => ring.subset(SubsetKind::SqrtJacobson).contains(d),
    };
    let mut found: Option<usize> = None;
    for &x in ring.double_commutant_idx(ai).clone().iter() {
        let ax = ring.mul_idx(ai, x);
        if ring.mul_idx(x, ax) != x {
            continue;
        }
        let defect = ring.add_idx(ai, ring.neg_idx(ring.mul_idx(ai, ax)));
        if !defect_ok(defect) {
            continue;
        }
        assert!(
            found.is_none(),
            "two distinct {:?} inverses found for {} in {}; the inverse must be unique",
            flavor,
            ring.literal(a),
            ring.descriptor()
        );
        found = Some(x);
    }
    let x = found?;
    let defect = ring.add_idx(ai, ring.neg_idx(ring.mul_idx(ai, ring.mul_idx(ai, x))));
    let k = match flavor {
        DrazinFlavor::Drazin => min_zero_exponent(ring, defect),
        DrazinFlavor::PseudoDrazin => min_radical_exponent(ring, defect),
    }
    .or_else(|| (defect == 0).then_some(1))
    .expect("defect witness exponent exists by construction");
    let polar_idempotent = match flavor {
        DrazinFlavor::Drazin => None,
        DrazinFlavor::PseudoDrazin => Some(pseudo_polar_idempotent(ring, a)),
    };
    Some(DrazinCertificate {
        a,
        x: ring.element(x),
        flavor,
        defect: ring.element(defect),
        k,
        polar_idempotent,
    })
}

/// Lowest-index idempotent `p` in `comm2(a)` with `a + p` a unit and `ap` in
/// the radical root. Exists exactly when `a` is p-Drazin invertible.
fn pseudo_polar_idempotent(ring: &FiniteRing, a: Element) -> Element {
    let ai = a.index();
    let idempotents = ring.subset(SubsetKind::Idempotents);
    let sqrt_j = ring.subset(SubsetKind::SqrtJacobson);
    let units = ring.subset(SubsetKind::Units);
    ring.double_commutant_idx(ai)
        .iter()
        .copied()
        .find(|&p| {
            idempotents.contains(p)
                && units.contains(ring.add_idx(ai, p))
                && sqrt_j.contains(ring.mul_idx(ai, p))
        })
        .map(|p| ring.element(p))
        .expect("a p-Drazin invertible element is pseudo-polar")
}

/// Drazin inverse by exhaustive definitional search; uniqueness is verified
/// by completing the scan.
pub fn drazin_inverse(ring: &FiniteRing, a: Element) -> Option<DrazinCertificate> {
    drazin_scan(ring, a, DrazinFlavor::Drazin)
}

/// Pseudo Drazin inverse by exhaustive definitional search, with a
/// pseudo-polar idempotent witness attached.
pub fn p_drazin_inverse(ring: &FiniteRing, a: Element) -> Option<DrazinCertificate> {
    drazin_scan(ring, a, DrazinFlavor::PseudoDrazin)
}

fn certify_pns(
    ring: &FiniteRing,
    a: Element,
    n: u32,
    x: usize,
    path: InversePath,
) -> PnsCertificate {
    let an = ring.pow_idx(a.index(), n);
    let e = ring.mul_idx(a.index(), x);
    let d = ring.add_idx(an, ring.neg_idx(e));
    let k = min_radical_exponent(ring, d)
        .or_else(|| (d == 0).then_some(1))
        .expect("a^n - e lies in the radical root by construction");
    PnsCertificate {
        a,
        n,
        x: ring.element(x),
        e: ring.element(e),
        k,
        path,
    }
}

/// Definitional search for the pns inverse of `a` at exponent `n >= 1`:
/// scans every candidate in `comm2(a)` for `xax = x` and `a^n - ax` in the
/// radical root, completing the scan to confirm uniqueness.
pub fn pns_oracle(ring: &FiniteRing, a: Element, n: u32) -> Option<PnsCertificate> {
    assert!(n >= 1, "pns exponent must be at least 1");
    let ai = a.index();
    let an = ring.pow_idx(ai, n);
    let sqrt_j = ring.subset(SubsetKind::SqrtJacobson);
    let mut found: Option<usize> = None;
    for &x in ring.double_commutant_idx(ai).clone().iter() {
        let ax = ring.mul_idx(ai, x);
        if ring.mul_idx(x, ax) != x {
            continue;
        }
        if !sqrt_j.contains(ring.add_idx(an, ring.neg_idx(ax))) {
            continue;
        }
        assert!(
            found.is_none(),
            "two distinct pns inverses found for {} at n={} in {}; the inverse must be unique",
            ring.literal(a),
            n,
            ring.descriptor()
        );
        found = Some(x);
    }
    found.map(|x| certify_pns(ring, a, n, x, InversePath::Oracle))
}

/// Closed-formula route: finds the idempotent `e` in `comm2(a)` with
/// `a^n - e` in the radical root, requires it to be unique, and returns
/// `x = (1 + a^n - e)^{-1} a^{n-1} e`. Multiple candidate idempotents are
/// reported as an error rather than silently resolved, since uniqueness of
/// the spectral idempotent is itself one of the verified statements.
pub fn pns_formula(
    ring: &FiniteRing,
    a: Element,
    n: u32,
) -> Result<Option<PnsCertificate>, InverseError> {
    assert!(n >= 1, "pns exponent must be at least 1");
    let ai = a.index();
    let an = ring.pow_idx(ai, n);
    let sqrt_j = ring.subset(SubsetKind::SqrtJacobson);
    let candidates: Vec<usize> = ring
        .subset(SubsetKind::Idempotents)
        .members
        .iter()
        .copied()
        .filter(|&e| {
            ring.in_double_commutant(e, ai) && sqrt_j.contains(ring.add_idx(an, ring.neg_idx(e)))
        })
        .collect();
    let e = match candidates.len() {
        0 => return Ok(None),
        1 => candidates[0],
        count => {
            return Err(InverseError::MultipleSpectralIdempotents {
                ring: ring.descriptor().to_string(),
                literal: ring.literal(a).to_string(),
                n,
                count,
                witnesses: candidates,
            })
        }
    };
    let one = ring.one().index();
    let u = ring.add_idx(one, ring.add_idx(an, ring.neg_idx(e)));
    let u_inv = ring.unit_inverse(ring.element(u)).ok_or_else(|| {
        InverseError::SpectralUnitFailure {
            ring: ring.descriptor().to_string(),
            literal: ring.literal(a).to_string(),
            n,
        }
    })?;
    // a^0 is the unity, so the n = 1 case reads (1 + a - e)^{-1} e.
    let a_pow = if n == 1 { one } else { ring.pow_idx(ai, n - 1) };
    let x = ring.mul_idx(ring.mul_idx(u_inv.index(), a_pow), e);
    Ok(Some(certify_pns(ring, a, n, x, InversePath::Formula)))
}

/// Everything a pns certificate asserts, re-checked from scratch. Returns the
/// first broken condition, if any.
pub fn validate_pns(ring: &FiniteRing, cert: &PnsCertificate) -> Result<(), String> {
    let (ai, xi, ei) = (cert.a.index(), cert.x.index(), cert.e.index());
    let check = |ok: bool, what: &str| {
        if ok {
            Ok(())
        } else {
            Err(format!(
                "{} fails for a={} n={} in {}",
                what,
                ring.literal(cert.a),
                cert.n,
                ring.descriptor()
            ))
        }
    };
    let ax = ring.mul_idx(ai, xi);
    check(ring.mul_idx(xi, ax) == xi, "x a x = x")?;
    check(ring.in_double_commutant(xi, ai), "x in comm2(a)")?;
    check(ax == ei && ring.mul_idx(xi, ai) == ei, "e = ax = xa")?;
    check(ring.mul_idx(ei, ei) == ei, "e idempotent")?;
    let an = ring.pow_idx(ai, cert.n);
    let d = ring.add_idx(an, ring.neg_idx(ei));
    let radical = ring.subset(SubsetKind::JacobsonRadical);
    let dk = if d == 0 {
        0
    } else {
        ring.pow_idx(d, cert.k)
    };
    check(radical.contains(dk), "(a^n - e)^k in J")?;
    check(
        cert.k == 1 || !radical.contains(ring.pow_idx(d, cert.k - 1)),
        "radical exponent k minimal",
    )?;
    let one = ring.one().index();
    let u = ring.add_idx(one, d);
    let u_inv = ring
        .unit_inverse(ring.element(u))
        .ok_or_else(|| "1 + a^n - e must be a unit".to_string())?;
    let a_pow = if cert.n == 1 {
        one
    } else {
        ring.pow_idx(ai, cert.n - 1)
    };
    check(
        ring.mul_idx(ring.mul_idx(u_inv.index(), a_pow), ei) == xi,
        "x = (1 + a^n - e)^{-1} a^{n-1} e",
    )
}

/// pns-*-Drazin inverse of `a` under `inv`: the pns inverse whose spectral
/// idempotent is self-adjoint. Two routes are computed and compared: the
/// definitional one (oracle plus the self-adjointness of `ax`) and the
/// projection characterization (a projection `p` in `comm2(a)` with
/// `a^n - p` in the radical root).
pub fn pns_star(
    ring: &FiniteRing,
    inv: &Involution,
    a: Element,
    n: u32,
) -> Option<StarPnsCertificate> {
    assert_eq!(inv.ring_id(), ring.id(), "involution belongs to another ring");
    let base = pns_oracle(ring, a, n);
    let by_definition = base.filter(|cert| inv.is_self_adjoint(cert.e));

    let ai = a.index();
    let an = ring.pow_idx(ai, n);
    let sqrt_j = ring.subset(SubsetKind::SqrtJacobson);
    let by_projection: Vec<usize> = projections(ring, inv)
        .members
        .iter()
        .copied()
        .filter(|&p| {
            ring.in_double_commutant(p, ai) && sqrt_j.contains(ring.add_idx(an, ring.neg_idx(p)))
        })
        .collect();
    assert_eq!(
        by_definition.is_some(),
        !by_projection.is_empty(),
        "definitional and projection routes disagree for {} at n={} in {}",
        ring.literal(a),
        n,
        ring.descriptor()
    );
    let cert = by_definition?;
    assert_eq!(
        by_projection,
        vec![cert.e.index()],
        "projection route must single out the spectral idempotent"
    );
    Some(StarPnsCertificate {
        base: cert,
        involution: inv.kind().clone(),
    })
}

/// The exponents `1..=max_n` at which `a` admits a pns inverse.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PnsSpectrum {
    pub max_n: u32,
    pub present: Vec<u32>,
    pub minimal: Option<u32>,
}

/// Per-exponent presence of the pns inverse, decided by the formula route.
pub fn pns_spectrum(ring: &FiniteRing, a: Element, max_n: u32) -> PnsSpectrum {
    assert!(max_n >= 1, "spectrum needs at least one exponent");
    let present: Vec<u32> = (1..=max_n)
        .filter(|&n| {
            pns_formula(ring, a, n)
                .expect("spectral idempotent is unique")
                .is_some()
        })
        .collect();
    PnsSpectrum {
        max_n,
        minimal: present.first().copied(),
        present,
    }
}

/// Smallest pns exponent of `a`, scanning up to `max_n`. Cheaper than the
/// full spectrum when only existence matters.
pub fn minimal_pns_exponent(ring: &FiniteRing, a: Element, max_n: u32) -> Option<u32> {
    (1..=max_n).find(|&n| {
        pns_formula(ring, a, n)
            .expect("spectral idempotent is unique")
            .is_some()
    })
}

#[cfg(test)]
mod tests;
