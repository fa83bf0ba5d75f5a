//! Ring-level classification flags and the structural statements relating
//! them: periodicity versus pseudo pi-polarity with nil radical, the
//! radical-root/quasinilpotent equality, and closure under corner,
//! triangular and matrix constructions.

use serde::Serialize;

use crate::analysis::SubsetKind;
use crate::exec::{self, ExecMode};
use crate::inverse::minimal_pns_exponent;
use crate::ring::{BuildOptions, FiniteRing, RingDescriptor, RingError, ValidationMode};
use crate::view::ElementView;

use super::{ReportBuilder, TheoremReport, TupleOutcome, Witness};

/// One classification flag with the first counterexample when it fails.
#[derive(Clone, Debug, Serialize)]
pub struct Flag {
    pub holds: bool,
    pub counterexample: Option<ElementView>,
}

impl Flag {
    fn universal(ring: &FiniteRing, items: &[usize], pred: impl Fn(usize) -> bool + Sync) -> Flag {
        let bad = exec::find_map_first(ExecMode::default(), 0..items.len(), |i| {
            let x = items[i];
            (!pred(x)).then_some(x)
        });
        Flag {
            holds: bad.is_none(),
            counterexample: bad.map(|x| ElementView::new(ring, ring.element(x))),
        }
    }
}

/// Independently computed structural flags of one ring.
#[derive(Clone, Debug, Serialize)]
pub struct RingClassification {
    pub periodic: Flag,
    pub strongly_pi_regular: Flag,
    pub pseudo_pi_polar: Flag,
    pub pi_uu: Flag,
    pub jacobson_nil: Flag,
    pub pseudo_polar: Flag,
    pub local: Flag,
    pub special_local: Flag,
    /// Smallest exponent working uniformly for every element, scanned up to
    /// the ring order. Per-element quantification is the defining notion;
    /// this uniform variant is reported separately and never substituted
    /// for it.
    pub uniform_pns_exponent: Option<u32>,
}

/// Computes every flag from its definition by exhaustive search.
pub fn classify(ring: &FiniteRing) -> RingClassification {
    let order = ring.order();
    let all: Vec<usize> = (0..order).collect();
    let one = ring.one().index();
    let sub = |l: usize, r: usize| ring.add_idx(l, ring.neg_idx(r));
    let nilpotents = ring.subset(SubsetKind::Nilpotents);
    let units = ring.subset(SubsetKind::Units);
    let sqrt_j = ring.subset(SubsetKind::SqrtJacobson);
    let radical = ring.subset(SubsetKind::JacobsonRadical);
    let idempotents = ring.subset(SubsetKind::Idempotents);

    let periodic = Flag::universal(ring, &all, |a| {
        let data = ring.trajectory_data(a);
        let m = data.tail + data.period;
        ring.pow_idx(a, m) == ring.pow_idx(a, data.tail)
    });

    let strongly_pi_regular = Flag::universal(ring, &all, |a| {
        let data = ring.trajectory_data(a);
        (1..=data.tail + data.period).any(|n| {
            let an = ring.pow_idx(a, n);
            let an1 = ring.pow_idx(a, n + 1);
            (0..order).any(|r| ring.mul_idx(an1, r) == an)
                && (0..order).any(|s| ring.mul_idx(s, an1) == an)
        })
    });

    let pseudo_pi_polar = Flag::universal(ring, &all, |a| {
        minimal_pns_exponent(ring, ring.element(a), order as u32).is_some()
    });

    let pi_uu = Flag::universal(ring, units.members.as_slice(), |u| {
        let data = ring.trajectory_data(u);
        (1..=data.tail + data.period)
            .any(|n| nilpotents.contains(sub(ring.pow_idx(u, n), one)))
    });

    let jacobson_nil = Flag::universal(ring, radical.members.as_slice(), |a| {
        nilpotents.contains(a)
    });

    let pseudo_polar = Flag::universal(ring, &all, |a| {
        idempotents.members.iter().any(|&p| {
            ring.in_double_commutant(p, a)
                && units.contains(ring.add_idx(a, p))
                && sqrt_j.contains(ring.mul_idx(a, p))
        })
    });

    // Local: the non-units are closed under addition.
    let local = {
        let non_units: Vec<usize> = (0..order).filter(|&x| !units.contains(x)).collect();
        let bad = exec::find_map_first(ExecMode::default(), 0..non_units.len(), |i| {
            let a = non_units[i];
            non_units
                .iter()
                .find(|&&b| units.contains(ring.add_idx(a, b)))
                .map(|&b| ring.add_idx(a, b))
        });
        Flag {
            holds: bad.is_none(),
            counterexample: bad.map(|x| ElementView::new(ring, ring.element(x))),
        }
    };

    let special_local = if !local.holds {
        local.clone()
    } else {
        Flag::universal(ring, units.members.as_slice(), |u| {
            let data = ring.trajectory_data(u);
            (1..=data.tail + data.period)
                .any(|n| radical.contains(sub(ring.pow_idx(u, n), one)))
        })
    };

    let uniform_pns_exponent = (1..=order as u32).find(|&n| {
        (0..order).all(|a| {
            crate::inverse::pns_formula(ring, ring.element(a), n)
                .expect("the spectral idempotent is unique")
                .is_some()
        })
    });

    RingClassification {
        periodic,
        strongly_pi_regular,
        pseudo_pi_polar,
        pi_uu,
        jacobson_nil,
        pseudo_polar,
        local,
        special_local,
        uniform_pns_exponent,
    }
}

/// Knobs for the derived-ring statements: which triangular/matrix sizes to
/// lift to, an optional fixed power-identity exponent, and the order cap for
/// derived rings.
#[derive(Clone, Debug)]
pub struct StructuralOptions {
    pub triangular_size: usize,
    pub matrix_size: usize,
    /// `m` with `a - a^m` nilpotent for all `a`; detected when absent.
    pub power_identity_exponent: Option<u32>,
    pub derived_order_cap: u64,
}

impl Default for StructuralOptions {
    fn default() -> Self {
        StructuralOptions {
            triangular_size: 2,
            matrix_size: 2,
            power_identity_exponent: None,
            derived_order_cap: crate::ring::DEFAULT_ORDER_CAP,
        }
    }
}

fn build_derived(
    descriptor: RingDescriptor,
    cap: u64,
) -> Result<FiniteRing, RingError> {
    FiniteRing::build_with(
        descriptor,
        &BuildOptions {
            order_cap: cap,
            validation: ValidationMode::Skip,
            mode: ExecMode::default(),
        },
    )
}

/// Periodic exactly when pseudo pi-polar with nil Jacobson radical, all
/// three flags computed independently.
pub fn theorem_2_2(ring: &FiniteRing) -> TheoremReport {
    let mut builder = ReportBuilder::new("Thm-2-2", &ring.descriptor().to_string());
    let class = classify(ring);
    let lhs = class.periodic.holds;
    let rhs = class.pseudo_pi_polar.holds && class.jacobson_nil.holds;
    let mut violations = Vec::new();
    if lhs != rhs {
        violations.push(
            Witness::new("periodic and (pseudo pi-polar with nil radical) disagree")
                .bind("periodic", lhs)
                .bind("pseudo_pi_polar", class.pseudo_pi_polar.holds)
                .bind("jacobson_nil", class.jacobson_nil.holds),
        );
    }
    builder.absorb(TupleOutcome {
        examined: ring.order() as u64,
        met: ring.order() as u64,
        violations,
    });
    builder.finish()
}

/// In a pseudo pi-polar ring the radical root equals the quasinilpotents.
pub fn qnil_equality(ring: &FiniteRing) -> TheoremReport {
    let mut builder = ReportBuilder::new("Prop-qnil", &ring.descriptor().to_string());
    let class = classify(ring);
    if !class.pseudo_pi_polar.holds {
        builder.note("ring is not pseudo pi-polar; nothing to check");
        builder.absorb(TupleOutcome {
            examined: ring.order() as u64,
            met: 0,
            violations: Vec::new(),
        });
        return builder.finish();
    }
    let sqrt_j = ring.subset(SubsetKind::SqrtJacobson);
    let qnil = ring.subset(SubsetKind::Quasinilpotents);
    let mut violations = Vec::new();
    for x in 0..ring.order() {
        if sqrt_j.contains(x) != qnil.contains(x) {
            violations.push(
                Witness::new("radical root and quasinilpotents differ")
                    .bind_element("x", ring, ring.element(x))
                    .bind("sqrt_jacobson", sqrt_j.contains(x))
                    .bind("quasinilpotent", qnil.contains(x)),
            );
        }
    }
    builder.absorb(TupleOutcome {
        examined: ring.order() as u64,
        met: ring.order() as u64,
        violations,
    });
    builder.finish()
}

/// Every corner ring of a pseudo pi-polar ring is pseudo pi-polar.
pub fn corner_closure(ring: &FiniteRing, options: &StructuralOptions) -> TheoremReport {
    let mut builder = ReportBuilder::new("Prop-corner", &ring.descriptor().to_string());
    let class = classify(ring);
    if !class.pseudo_pi_polar.holds {
        builder.note("ring is not pseudo pi-polar; nothing to check");
        builder.absorb(TupleOutcome {
            examined: ring.subset(SubsetKind::Idempotents).len() as u64,
            met: 0,
            violations: Vec::new(),
        });
        return builder.finish();
    }
    let idempotents = ring.subset(SubsetKind::Idempotents).members.clone();
    for &e in &idempotents {
        let literal = ring.literal(ring.element(e));
        let descriptor =
            RingDescriptor::corner(ring.descriptor().clone(), literal.clone());
        match build_derived(descriptor, options.derived_order_cap) {
            Ok(corner) => {
                let corner_class = classify(&corner);
                let mut violations = Vec::new();
                if !corner_class.pseudo_pi_polar.holds {
                    violations.push(
                        Witness::new("corner ring is not pseudo pi-polar")
                            .bind("idempotent", &literal)
                            .bind("corner_order", corner.order()),
                    );
                }
                builder.absorb(TupleOutcome::checked(violations));
            }
            Err(err) => {
                builder.note(format!("corner at {literal} skipped: {err}"));
                builder.absorb(TupleOutcome::vacuous());
            }
        }
    }
    builder.finish()
}

/// Over a commutative local base, being special local is equivalent to the
/// upper triangular ring being pseudo pi-polar.
pub fn triangular_lift(ring: &FiniteRing, options: &StructuralOptions) -> TheoremReport {
    let k = options.triangular_size;
    let mut builder = ReportBuilder::new("Prop-Tn", &ring.descriptor().to_string());
    builder.parameter("k", k);
    let class = classify(ring);
    if !ring.is_commutative() || !class.local.holds {
        builder.note("base ring is not commutative local; nothing to check");
        builder.absorb(TupleOutcome::vacuous());
        return builder.finish();
    }
    let descriptor = RingDescriptor::upper_triangular(k, ring.descriptor().clone());
    match build_derived(descriptor, options.derived_order_cap) {
        Ok(lifted) => {
            let lifted_class = classify(&lifted);
            let special = class.special_local.holds;
            let polar = lifted_class.pseudo_pi_polar.holds;
            let mut violations = Vec::new();
            if special != polar {
                violations.push(
                    Witness::new("special local base disagrees with triangular pi-polarity")
                        .bind("special_local", special)
                        .bind("triangular_pseudo_pi_polar", polar),
                );
            }
            builder.absorb(TupleOutcome {
                examined: lifted.order() as u64,
                met: lifted.order() as u64,
                violations,
            });
        }
        Err(err) => {
            builder.note(format!("triangular lift skipped: {err}"));
            builder.absorb(TupleOutcome::vacuous());
        }
    }
    builder.finish()
}

/// A commutative ring satisfying `a - a^m` nilpotent for a fixed `m > 1`
/// lifts to pseudo pi-polar matrix rings.
pub fn matrix_lift(ring: &FiniteRing, options: &StructuralOptions) -> TheoremReport {
    let k = options.matrix_size;
    let mut builder = ReportBuilder::new("Prop-Mn", &ring.descriptor().to_string());
    builder.parameter("k", k);
    let nilpotents = ring.subset(SubsetKind::Nilpotents);
    let satisfies = |m: u32| {
        (0..ring.order()).all(|a| {
            nilpotents.contains(ring.add_idx(a, ring.neg_idx(ring.pow_idx(a, m))))
        })
    };
    let exponent = match options.power_identity_exponent {
        Some(m) => satisfies(m).then_some(m),
        None => (2..=(ring.order() as u32 + 1)).find(|&m| satisfies(m)),
    };
    let Some(m) = exponent else {
        builder.note("no exponent m with a - a^m nilpotent for every a; nothing to check");
        builder.absorb(TupleOutcome::vacuous());
        return builder.finish();
    };
    if !ring.is_commutative() {
        builder.note("base ring is not commutative; nothing to check");
        builder.absorb(TupleOutcome::vacuous());
        return builder.finish();
    }
    builder.parameter("m", m);
    let descriptor = RingDescriptor::matrix(k, ring.descriptor().clone());
    match build_derived(descriptor, options.derived_order_cap) {
        Ok(lifted) => {
            let lifted_class = classify(&lifted);
            let mut violations = Vec::new();
            if !lifted_class.pseudo_pi_polar.holds {
                violations.push(
                    Witness::new("matrix ring over a power-identity base is not pseudo pi-polar")
                        .bind("m", m)
                        .bind("matrix_order", lifted.order()),
                );
            }
            builder.absorb(TupleOutcome {
                examined: lifted.order() as u64,
                met: lifted.order() as u64,
                violations,
            });
        }
        Err(err) => {
            builder.note(format!("matrix lift skipped: {err}"));
            builder.absorb(TupleOutcome::vacuous());
        }
    }
    builder.finish()
}

/// Runs all five structural statements against one ring and merges the
/// verdicts into a single report.
pub fn structural_props(ring: &FiniteRing, options: &StructuralOptions) -> TheoremReport {
    let parts = [
        theorem_2_2(ring),
        qnil_equality(ring),
        corner_closure(ring, options),
        triangular_lift(ring, options),
        matrix_lift(ring, options),
    ];
    let mut builder = ReportBuilder::new("Structural", &ring.descriptor().to_string());
    for part in parts {
        builder.note(format!(
            "{}: {:?} (universe {}, hypothesis met {})",
            part.theorem, part.status, part.universe, part.hypothesis_met
        ));
        for note in part.notes {
            builder.note(format!("{}: {note}", part.theorem));
        }
        builder.absorb(TupleOutcome {
            examined: part.universe,
            met: part.hypothesis_met,
            violations: part.counterexamples,
        });
    }
    builder.finish()
}

/// Searches a ring corpus for a pseudo pi-polar, pi-UU ring that is not
/// strongly pi-regular. No finite ring can be one; the sweep documents that
/// the three independently computed flags stay consistent.
pub fn conjecture_search(corpus: &[FiniteRing]) -> TheoremReport {
    let mut builder = ReportBuilder::new("Conjecture", "corpus");
    for ring in corpus {
        let class = classify(ring);
        let hypothesis = class.pseudo_pi_polar.holds && class.pi_uu.holds;
        let mut violations = Vec::new();
        if hypothesis && !class.strongly_pi_regular.holds {
            violations.push(
                Witness::new("pseudo pi-polar pi-UU ring that is not strongly pi-regular")
                    .bind("ring", ring.descriptor()),
            );
        }
        builder.absorb(TupleOutcome {
            examined: 1,
            met: hypothesis as u64,
            violations,
        });
    }
    builder.finish()
}
