//! Seven-way equivalence for a pair of elements sharing a spectral
//! idempotent, plus the idempotent-characterization corollaries evaluated on
//! the same tuples.

use crate::analysis::{sorted_subset_of, SubsetKind};
use crate::exec;
use crate::ring::{Element, FiniteRing};

use super::{PnsContext, ReportBuilder, SweepOptions, TheoremReport, TupleOutcome, Witness};

/// The seven equivalent conditions, each as an independent boolean.
fn seven_conditions(ctx: &PnsContext<'_>, a: usize, b: usize, n: u32) -> Option<[bool; 7]> {
    let ring = ctx.ring;
    let cert_a = ctx.pns(a, n)?;
    let e_a = cert_a.e.index();
    let x_a = cert_a.x.index();
    let cert_b = ctx.pns(b, n);
    let sqrt_j = ring.subset(SubsetKind::SqrtJacobson);
    let one = ring.one().index();
    let bn = ring.pow_idx(b, n);
    let sub = |l: usize, r: usize| ring.add_idx(l, ring.neg_idx(r));

    let c1 = cert_b.is_some_and(|cb| cb.e.index() == e_a);

    let pi_in_comm2_b = ring.in_double_commutant(e_a, b);
    let c2 = pi_in_comm2_b && sqrt_j.contains(sub(bn, e_a));

    let c3 = pi_in_comm2_b
        && sqrt_j.contains(ring.mul_idx(b, sub(one, e_a)))
        && sqrt_j.contains(ring.mul_idx(sub(one, bn), e_a));

    let c4 = cert_b.is_some_and(|cb| {
        // w = 1 - a_pi (1 - a_dag b)
        let w = sub(one, ring.mul_idx(e_a, sub(one, ring.mul_idx(x_a, b))));
        match ring.unit_inverse(ring.element(w)) {
            Some(w_inv) => ring.mul_idx(w_inv.index(), x_a) == cb.x.index(),
            None => false,
        }
    });

    let c5 = cert_b.is_some_and(|cb| {
        let x_b = cb.x.index();
        sub(x_b, x_a) == ring.mul_idx(ring.mul_idx(x_a, sub(a, b)), x_b)
    });

    let c6 = cert_b.is_some_and(|cb| {
        let e_b = cb.e.index();
        let commute = ring.mul_idx(e_a, e_b) == ring.mul_idx(e_b, e_a);
        let d = sub(e_a, e_b);
        commute && ring.is_unit(ring.element(sub(one, ring.mul_idx(d, d))))
    });

    let c7 = cert_b.is_some_and(|cb| {
        let x_b = cb.x.index();
        sorted_subset_of(
            ring.principal_right_ideal_idx(x_b),
            ring.principal_right_ideal_idx(x_a),
        ) && sorted_subset_of(
            ring.right_annihilator_idx(x_b),
            ring.right_annihilator_idx(x_a),
        )
    });

    Some([c1, c2, c3, c4, c5, c6, c7])
}

/// Idempotent characterization of the spectral idempotent, checked over
/// every idempotent of the ring for one `(a, n)`.
fn idempotent_characterization(ctx: &PnsContext<'_>, a: usize, n: u32) -> Vec<Witness> {
    let ring = ctx.ring;
    let Some(cert) = ctx.pns(a, n) else {
        return Vec::new();
    };
    let e_a = cert.e.index();
    let sqrt_j = ring.subset(SubsetKind::SqrtJacobson);
    let one = ring.one().index();
    let an = ring.pow_idx(a, n);
    let sub = |l: usize, r: usize| ring.add_idx(l, ring.neg_idx(r));
    let mut violations = Vec::new();
    for &f in &ring.subset(SubsetKind::Idempotents).members {
        let lhs = ring.in_double_commutant(f, a)
            && sqrt_j.contains(ring.mul_idx(a, sub(one, f)))
            && sqrt_j.contains(ring.mul_idx(sub(one, an), f));
        let rhs = f == e_a;
        if lhs != rhs {
            violations.push(
                Witness::new("idempotent characterization of the spectral idempotent fails")
                    .bind_element("a", ring, ring.element(a))
                    .bind("n", n)
                    .bind_element("f", ring, ring.element(f))
                    .bind("characterized", lhs)
                    .bind("is_spectral", rhs),
            );
        }
    }
    // Degenerate spectral idempotents: e = 1 iff a^n - 1 is in the radical
    // root, e = 0 iff a itself is.
    if (e_a == one) != sqrt_j.contains(sub(an, one)) {
        violations.push(
            Witness::new("spectral idempotent 1 criterion fails")
                .bind_element("a", ring, ring.element(a))
                .bind("n", n),
        );
    }
    if (e_a == 0) != sqrt_j.contains(a) {
        violations.push(
            Witness::new("spectral idempotent 0 criterion fails")
                .bind_element("a", ring, ring.element(a))
                .bind("n", n),
        );
    }
    violations
}

fn tuple_outcome(
    ctx: &PnsContext<'_>,
    a: usize,
    b: usize,
    n: u32,
    include_unary: bool,
) -> TupleOutcome {
    let ring = ctx.ring;
    let Some(conditions) = seven_conditions(ctx, a, b, n) else {
        return TupleOutcome::vacuous();
    };
    let mut violations = Vec::new();
    if conditions.iter().any(|&c| c != conditions[0]) {
        violations.push(
            Witness::new("the seven conditions are not pairwise equivalent")
                .bind_element("a", ring, ring.element(a))
                .bind_element("b", ring, ring.element(b))
                .bind("n", n)
                .bind("conditions", format!("{conditions:?}")),
        );
    }
    if include_unary {
        violations.extend(idempotent_characterization(ctx, a, n));
    }
    TupleOutcome::checked(violations)
}

/// Evaluates the seven-way equivalence on a single `(a, b, n)` tuple, plus
/// the spectral-idempotent corollaries for the same `(a, n)`.
pub fn check_spectral_equality(
    ring: &FiniteRing,
    a: Element,
    b: Element,
    n: u32,
) -> TheoremReport {
    let ctx = PnsContext::new(ring, (n, n));
    let mut builder = ReportBuilder::new("Thm-1234", &ring.descriptor().to_string());
    builder
        .parameter("a", ring.literal(a))
        .parameter("b", ring.literal(b))
        .parameter("n", n);
    builder.absorb(tuple_outcome(&ctx, a.index(), b.index(), n, true));
    builder.finish()
}

pub(crate) fn sweep(ring: &FiniteRing, options: &SweepOptions) -> TheoremReport {
    let order = ring.order();
    let ctx = PnsContext::new(ring, options.n_range);
    let mut builder = ReportBuilder::new("Thm-1234", &ring.descriptor().to_string());
    builder.parameter("n_range", options.n_range_text());
    if order > options.pair_cap {
        builder.note(format!(
            "order {order} above the exhaustive pair cap {}; sweeping a fixed-seed sample",
            options.pair_cap
        ));
        builder.parameter("seed", options.seed);
        let outcomes = super::transfer::sampled_pairs(ring, options, |a, b| {
            let mut out = TupleOutcome::default();
            for n in options.exponents() {
                out = out.merge(tuple_outcome(&ctx, a, b, n, b == 0));
            }
            out
        });
        builder.absorb(outcomes);
        return builder.finish();
    }
    let per_a = exec::map_range(options.mode, 0..order, |a| {
        let mut out = TupleOutcome::default();
        for b in 0..order {
            for n in options.exponents() {
                // Unary corollaries depend on (a, n) only; run them once.
                out = out.merge(tuple_outcome(&ctx, a, b, n, b == 0));
            }
        }
        out
    });
    for outcome in per_a {
        builder.absorb(outcome);
    }
    builder.finish()
}
