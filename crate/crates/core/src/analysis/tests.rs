use super::*;
use crate::analysis::involution::{build_involution, projections};
use crate::ring::{FiniteRing, Literal, RingDescriptor};

fn zn(n: u64) -> FiniteRing {
    FiniteRing::build(RingDescriptor::zn(n)).unwrap()
}

fn m2(modulus: u64) -> FiniteRing {
    FiniteRing::build(RingDescriptor::matrix(2, RingDescriptor::zn(modulus))).unwrap()
}

fn members(ring: &FiniteRing, kind: SubsetKind) -> Vec<usize> {
    ring.subset(kind).members.clone()
}

/// Independent oracle: subsets of Z(n) computed over raw residues, without
/// touching the ring machinery under test.
fn zn_subset_oracle(n: u64, kind: SubsetKind) -> Vec<usize> {
    let unit = |a: u64| (0..n).any(|b| (a * b) % n == 1);
    let in_radical = |a: u64| (0..n).all(|x| unit((1 + n * n - (x * a) % n) % n));
    let pred: Box<dyn Fn(u64) -> bool> = match kind {
        SubsetKind::Units => Box::new(unit),
        SubsetKind::Nilpotents => Box::new(move |a| {
            let mut p = a % n;
            for _ in 0..n {
                if p == 0 {
                    return true;
                }
                p = (p * a) % n;
            }
            p == 0
        }),
        SubsetKind::Idempotents => Box::new(move |a| (a * a) % n == a),
        SubsetKind::JacobsonRadical => Box::new(in_radical),
        SubsetKind::SqrtJacobson => Box::new(move |a| {
            let mut p = a % n;
            for _ in 0..=n {
                if in_radical(p) {
                    return true;
                }
                p = (p * a) % n;
            }
            false
        }),
        SubsetKind::Quasinilpotents => Box::new(move |a| (0..n).all(|x| unit((1 + n * n - (a * x) % n) % n))),
    };
    (0..n).filter(|&a| pred(a)).map(|a| a as usize).collect()
}

#[test]
fn zn_subsets_match_the_raw_residue_oracle() {
    for n in [4u64, 6, 8, 12] {
        let ring = zn(n);
        for kind in SubsetKind::ALL {
            assert_eq!(
                members(&ring, kind),
                zn_subset_oracle(n, kind),
                "{} of Z({n})",
                kind.name()
            );
        }
    }
}

#[test]
fn radical_of_z4_and_idempotents_of_z6() {
    assert_eq!(members(&zn(4), SubsetKind::JacobsonRadical), vec![0, 2]);
    assert_eq!(members(&zn(6), SubsetKind::Idempotents), vec![0, 1, 3, 4]);
    assert_eq!(members(&zn(8), SubsetKind::SqrtJacobson), vec![0, 2, 4, 6]);
}

#[test]
fn radical_root_of_a_matrix_ring_over_a_field_is_the_nilpotents() {
    for q in [2u64, 3] {
        let ring = m2(q);
        assert_eq!(
            members(&ring, SubsetKind::SqrtJacobson),
            members(&ring, SubsetKind::Nilpotents),
            "M(2,Z({q}))"
        );
    }
}

#[test]
fn subset_containments_hold_on_the_corpus() {
    for ring in crate::corpus::shared_corpus() {
        let nil = ring.subset(SubsetKind::Nilpotents);
        let radical = ring.subset(SubsetKind::JacobsonRadical);
        let sqrt_j = ring.subset(SubsetKind::SqrtJacobson);
        let qnil = ring.subset(SubsetKind::Quasinilpotents);
        for x in 0..ring.order() {
            assert!(!nil.contains(x) || sqrt_j.contains(x));
            assert!(!radical.contains(x) || sqrt_j.contains(x));
            assert!(!sqrt_j.contains(x) || qnil.contains(x));
        }
    }
}

#[test]
fn radical_is_a_two_sided_ideal_on_the_corpus() {
    for ring in crate::corpus::shared_corpus() {
        let radical = ring.subset(SubsetKind::JacobsonRadical);
        for &a in &radical.members {
            for &b in &radical.members {
                assert!(radical.contains(ring.add_idx(a, b)));
            }
            for x in 0..ring.order() {
                assert!(radical.contains(ring.mul_idx(a, x)));
                assert!(radical.contains(ring.mul_idx(x, a)));
            }
        }
    }
}

#[test]
fn commutant_examples() {
    let ring = m2(2);
    let zero = ring.zero();
    assert_eq!(ring.commutant(zero).len(), ring.order());

    let a = ring
        .element_from_literal(&Literal::residue_matrix(&[&[0, 1], &[0, 0]]))
        .unwrap();
    // x*1 + y*a over Z(2): four matrices.
    let comm = ring.commutant(a);
    assert_eq!(comm.len(), 4);
    let expected: Vec<usize> = {
        let mut v = vec![
            ring.zero().index(),
            ring.one().index(),
            a.index(),
            ring.add(ring.one(), a).index(),
        ];
        v.sort_unstable();
        v
    };
    assert_eq!(comm.iter().map(|e| e.index()).collect::<Vec<_>>(), expected);

    let z12 = zn(12);
    for a in z12.elements() {
        assert_eq!(z12.commutant(a).len(), 12);
    }
}

#[test]
fn double_commutant_examples() {
    let z12 = zn(12);
    for a in z12.elements() {
        assert_eq!(z12.double_commutant(a).len(), 12);
    }

    let ring = m2(2);
    let a = ring
        .element_from_literal(&Literal::residue_matrix(&[&[0, 1], &[0, 0]]))
        .unwrap();
    let comm: Vec<usize> = ring.commutant(a).iter().map(|e| e.index()).collect();
    let dc: Vec<usize> = ring.double_commutant(a).iter().map(|e| e.index()).collect();
    assert_eq!(comm, dc);

    // comm(1) is everything, so comm2(1) is the center: the scalars.
    let center: Vec<usize> = ring
        .double_commutant(ring.one())
        .iter()
        .map(|e| e.index())
        .collect();
    assert_eq!(center, vec![ring.zero().index(), ring.one().index()]);
}

#[test]
fn double_commutant_contains_the_element_and_its_powers() {
    for ring in crate::corpus::shared_corpus() {
        for a in ring.elements() {
            let t = ring.power_trajectory(a);
            for p in t.powers {
                assert!(ring.in_double_commutant(p.index(), a.index()));
            }
        }
    }
}

#[test]
fn annihilator_and_ideal_examples() {
    let z6 = zn(6);
    let idx = |v: Vec<crate::ring::Element>| v.iter().map(|e| e.index()).collect::<Vec<_>>();
    assert_eq!(idx(z6.right_annihilator(z6.zero())), (0..6).collect::<Vec<_>>());
    assert_eq!(idx(z6.right_annihilator(z6.one())), vec![0]);
    assert_eq!(idx(z6.right_annihilator(z6.element(2))), vec![0, 3]);
    assert_eq!(idx(z6.principal_right_ideal(z6.one())), (0..6).collect::<Vec<_>>());
    assert_eq!(idx(z6.principal_right_ideal(z6.element(2))), vec![0, 2, 4]);
    assert_eq!(idx(z6.principal_right_ideal(z6.element(3))), vec![0, 3]);
}

#[test]
fn involutions_validate_and_reject() {
    let z6 = zn(6);
    let id = build_involution(&z6, InvolutionKind::Identity).unwrap();
    assert!(z6.elements().all(|x| id.apply(x) == x));

    let ring = m2(2);
    let t = build_involution(&ring, InvolutionKind::Transpose).unwrap();
    let a = ring
        .element_from_literal(&Literal::residue_matrix(&[&[0, 1], &[0, 0]]))
        .unwrap();
    let at = ring
        .element_from_literal(&Literal::residue_matrix(&[&[0, 0], &[1, 0]]))
        .unwrap();
    assert_eq!(t.apply(a), at);

    // Transpose over a non-commutative base is not an anti-automorphism.
    let nested = FiniteRing::build(RingDescriptor::matrix(
        2,
        RingDescriptor::matrix(2, RingDescriptor::zn(2)),
    ))
    .unwrap();
    assert!(matches!(
        build_involution(&nested, InvolutionKind::Transpose),
        Err(AnalysisError::NotCommutative { .. })
    ));
    assert!(matches!(
        build_involution(&ring, InvolutionKind::Identity),
        Err(AnalysisError::NotCommutative { .. })
    ));
}

#[test]
fn involution_axioms_hold_pointwise() {
    for ring in crate::corpus::shared_corpus() {
        let Ok(inv) = default_involution(&ring) else {
            panic!("every corpus ring has a default involution");
        };
        for x in ring.elements() {
            assert_eq!(inv.apply(inv.apply(x)), x);
            for y in ring.elements() {
                assert_eq!(inv.apply(ring.add(x, y)), ring.add(inv.apply(x), inv.apply(y)));
                assert_eq!(inv.apply(ring.mul(x, y)), ring.mul(inv.apply(y), inv.apply(x)));
            }
        }
    }
}

#[test]
fn anti_transpose_keeps_triangular_rings_involutive() {
    let t2 = FiniteRing::build(RingDescriptor::upper_triangular(2, RingDescriptor::zn(4))).unwrap();
    let inv = build_involution(&t2, InvolutionKind::Transpose).unwrap();
    let a = t2
        .element_from_literal(&Literal::residue_matrix(&[&[1, 2], &[0, 3]]))
        .unwrap();
    let flipped = t2
        .element_from_literal(&Literal::residue_matrix(&[&[3, 2], &[0, 1]]))
        .unwrap();
    assert_eq!(inv.apply(a), flipped);
}

#[test]
fn componentwise_involution_on_a_product() {
    let p = FiniteRing::build(RingDescriptor::product(
        RingDescriptor::zn(4),
        RingDescriptor::zn(9),
    ))
    .unwrap();
    let inv = build_involution(
        &p,
        InvolutionKind::Componentwise(
            Box::new(InvolutionKind::Identity),
            Box::new(InvolutionKind::Identity),
        ),
    )
    .unwrap();
    for x in p.elements() {
        assert_eq!(inv.apply(x), x);
    }
}

#[test]
fn projection_examples() {
    let ring = m2(2);
    let t = build_involution(&ring, InvolutionKind::Transpose).unwrap();
    let projs = projections(&ring, &t);
    let diag01 = ring
        .element_from_literal(&Literal::residue_matrix(&[&[0, 0], &[0, 1]]))
        .unwrap();
    let diag10 = ring
        .element_from_literal(&Literal::residue_matrix(&[&[1, 0], &[0, 0]]))
        .unwrap();
    let skew = ring
        .element_from_literal(&Literal::residue_matrix(&[&[1, 1], &[0, 0]]))
        .unwrap();
    assert!(projs.contains(diag01.index()));
    assert!(projs.contains(diag10.index()));
    assert!(!projs.contains(skew.index()));
    assert!(projs.contains(ring.zero().index()));
    assert!(projs.contains(ring.one().index()));

    // Under the identity involution every idempotent is a projection.
    let z6 = zn(6);
    let id = build_involution(&z6, InvolutionKind::Identity).unwrap();
    assert_eq!(projections(&z6, &id).members, vec![0, 1, 3, 4]);
}

#[test]
fn radical_root_closure_rules_hold_on_small_rings() {
    for descriptor in [
        RingDescriptor::zn(8),
        RingDescriptor::zn(12),
        RingDescriptor::upper_triangular(2, RingDescriptor::zn(2)),
        RingDescriptor::matrix(2, RingDescriptor::zn(2)),
    ] {
        let ring = FiniteRing::build(descriptor).unwrap();
        let sqrt_j = ring.subset(SubsetKind::SqrtJacobson);
        let units = ring.subset(SubsetKind::Units);
        let n = ring.order();
        for a in 0..n {
            for b in 0..n {
                if ring.mul_idx(a, b) != ring.mul_idx(b, a) {
                    continue;
                }
                let ab = ring.mul_idx(a, b);
                let sum = ring.add_idx(a, b);
                if sqrt_j.contains(a) {
                    assert!(sqrt_j.contains(ab), "absorption fails");
                    if sqrt_j.contains(b) {
                        assert!(sqrt_j.contains(sum), "additive closure fails");
                    }
                    if units.contains(b) {
                        assert!(units.contains(sum), "unit perturbation fails");
                    }
                }
            }
            // Membership is equivalent to membership of every commuting
            // unit multiple, and to membership of every higher power.
            let in_root = sqrt_j.contains(a);
            let unit_multiples_in = units
                .members
                .iter()
                .filter(|&&u| ring.mul_idx(a, u) == ring.mul_idx(u, a))
                .all(|&u| sqrt_j.contains(ring.mul_idx(a, u)));
            assert_eq!(in_root, unit_multiples_in, "unit-multiple criterion");
            let powers_in = (2..=n as u32 + 1).all(|k| sqrt_j.contains(ring.pow_idx(a, k)));
            assert_eq!(in_root, powers_in, "power criterion");
        }
    }
}
