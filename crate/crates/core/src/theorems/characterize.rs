//! Single-element characterizations of pns invertibility: the definitional
//! search, the p-Drazin power criterion, unique commuting witnesses, the
//! pseudo-polar power criterion, and the four-way inverse/idempotent
//! correspondence. All of them must agree for every `(a, n)`.

use crate::analysis::SubsetKind;
use crate::exec;
use crate::inverse::{p_drazin_inverse, pns_oracle};
use crate::ring::{Element, FiniteRing};

use super::{ReportBuilder, SweepOptions, TheoremReport, TupleOutcome, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum CheckSet {
    /// All characterizations.
    Full,
    /// Just the pseudo-polar power criterion against the oracle.
    PolarPowerOnly,
}

struct ElementFacts {
    p_drazin: bool,
}

fn tuple_outcome(
    ring: &FiniteRing,
    facts: &ElementFacts,
    a: usize,
    n: u32,
    set: CheckSet,
) -> TupleOutcome {
    let sqrt_j = ring.subset(SubsetKind::SqrtJacobson);
    let idempotents = ring.subset(SubsetKind::Idempotents);
    let units = ring.subset(SubsetKind::Units);
    let one = ring.one().index();
    let sub = |l: usize, r: usize| ring.add_idx(l, ring.neg_idx(r));
    let a_elem = ring.element(a);

    let oracle = pns_oracle(ring, a_elem, n);
    let b_oracle = oracle.is_some();
    let an1 = ring.pow_idx(a, n + 1);
    let power_drop = sqrt_j.contains(sub(a, an1));
    let an = ring.pow_idx(a, n);

    // Pseudo-polar power criterion: an idempotent p in comm2(a) with ap in
    // the radical root and 1 - (a+p)^n in the radical root.
    let b_polar_power = idempotents.members.iter().any(|&p| {
        ring.in_double_commutant(p, a)
            && sqrt_j.contains(ring.mul_idx(a, p))
            && sqrt_j.contains(sub(one, ring.pow_idx(ring.add_idx(a, p), n)))
    });

    let mut booleans: Vec<(&'static str, bool)> = vec![
        ("definitional search", b_oracle),
        ("pseudo-polar power criterion", b_polar_power),
    ];

    if set == CheckSet::Full {
        let b_pd_power = facts.p_drazin && power_drop;

        let comm = ring.commutant_idx(a).clone();
        let count_comm_idem = comm
            .iter()
            .filter(|&&f| idempotents.contains(f) && sqrt_j.contains(sub(an, f)))
            .count();
        let b_unique_comm_idem = count_comm_idem == 1;

        let count_comm_y = comm
            .iter()
            .filter(|&&y| {
                ring.mul_idx(y, ring.mul_idx(a, y)) == y
                    && sqrt_j.contains(sub(an, ring.mul_idx(a, y)))
            })
            .count();
        let b_unique_comm_y = count_comm_y == 1;

        let comm2 = ring.double_commutant_idx(a).clone();
        let b_def_comm2 = comm2.iter().any(|&y| {
            ring.mul_idx(y, ring.mul_idx(a, y)) == y
                && sqrt_j.contains(sub(an, ring.mul_idx(a, y)))
        });
        let b_idem_comm2 = comm2.iter().any(|&e| {
            idempotents.contains(e) && sqrt_j.contains(sub(an, e))
        });
        let b_pd_witness = comm2.iter().any(|&y| {
            ring.mul_idx(y, ring.mul_idx(a, y)) == y
                && sqrt_j.contains(sub(a, ring.mul_idx(a, ring.mul_idx(a, y))))
                && power_drop
        });
        let b_polar_unit = comm2.iter().any(|&p| {
            idempotents.contains(p)
                && units.contains(ring.add_idx(a, p))
                && sqrt_j.contains(ring.mul_idx(a, p))
                && power_drop
        });

        booleans.extend([
            ("p-Drazin with power drop", b_pd_power),
            ("unique commuting idempotent", b_unique_comm_idem),
            ("unique commuting inner inverse", b_unique_comm_y),
            ("bicommutant inner inverse", b_def_comm2),
            ("bicommutant spectral idempotent", b_idem_comm2),
            ("bicommutant p-Drazin witness with power drop", b_pd_witness),
            ("pseudo-polar unit with power drop", b_polar_unit),
        ]);
    }

    let mut violations = Vec::new();
    let first = booleans[0].1;
    if booleans.iter().any(|&(_, b)| b != first) {
        let rendered: Vec<String> = booleans
            .iter()
            .map(|(name, b)| format!("{name}={b}"))
            .collect();
        violations.push(
            Witness::new("characterizations disagree")
                .bind_element("a", ring, a_elem)
                .bind("n", n)
                .bind("booleans", rendered.join(", ")),
        );
    }

    // When the inverse exists, the canonical witness must satisfy all four
    // shapes of the correspondence at once.
    if set == CheckSet::Full {
        if let Some(cert) = oracle {
            let y = cert.x.index();
            let e = cert.e.index();
            let p = sub(one, e);
            let pointwise = [
                (
                    "inner inverse shape",
                    ring.mul_idx(y, ring.mul_idx(a, y)) == y
                        && ring.in_double_commutant(y, a)
                        && sqrt_j.contains(sub(an, ring.mul_idx(a, y))),
                ),
                (
                    "idempotent shape",
                    ring.mul_idx(e, e) == e
                        && ring.in_double_commutant(e, a)
                        && sqrt_j.contains(sub(an, e)),
                ),
                (
                    "p-Drazin shape",
                    sqrt_j.contains(sub(a, ring.mul_idx(a, ring.mul_idx(a, y)))) && power_drop,
                ),
                (
                    "pseudo-polar shape",
                    ring.mul_idx(p, p) == p
                        && ring.in_double_commutant(p, a)
                        && units.contains(ring.add_idx(a, p))
                        && sqrt_j.contains(ring.mul_idx(a, p))
                        && power_drop,
                ),
            ];
            for (what, ok) in pointwise {
                if !ok {
                    violations.push(
                        Witness::new(format!("canonical witness fails the {what}"))
                            .bind_element("a", ring, a_elem)
                            .bind("n", n)
                            .bind_element("x", ring, cert.x),
                    );
                }
            }
        }
    }

    TupleOutcome::checked(violations)
}

/// Evaluates every characterization of pns invertibility for one `(a, n)`.
pub fn check_pns_characterizations(ring: &FiniteRing, a: Element, n: u32) -> TheoremReport {
    let facts = ElementFacts {
        p_drazin: p_drazin_inverse(ring, a).is_some(),
    };
    let mut builder = ReportBuilder::new("Thm-1-3", &ring.descriptor().to_string());
    builder
        .parameter("a", ring.literal(a))
        .parameter("n", n);
    builder.absorb(tuple_outcome(ring, &facts, a.index(), n, CheckSet::Full));
    builder.finish()
}

pub(crate) fn sweep(
    ring: &FiniteRing,
    options: &SweepOptions,
    set: CheckSet,
) -> TheoremReport {
    let key = match set {
        CheckSet::Full => "Thm-1-3",
        CheckSet::PolarPowerOnly => "Cor-1-5",
    };
    let mut builder = ReportBuilder::new(key, &ring.descriptor().to_string());
    builder.parameter("n_range", options.n_range_text());
    let per_a = exec::map_range(options.mode, 0..ring.order(), |a| {
        let facts = ElementFacts {
            p_drazin: p_drazin_inverse(ring, ring.element(a)).is_some(),
        };
        let mut out = TupleOutcome::default();
        for n in options.exponents() {
            out = out.merge(tuple_outcome(ring, &facts, a, n, set));
        }
        out
    });
    for outcome in per_a {
        builder.absorb(outcome);
    }
    builder.finish()
}
