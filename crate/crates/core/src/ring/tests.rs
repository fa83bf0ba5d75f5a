use super::*;
use crate::ring::Literal;

fn zn(n: u64) -> FiniteRing {
    FiniteRing::build(RingDescriptor::zn(n)).unwrap()
}

fn m2(modulus: u64) -> FiniteRing {
    FiniteRing::build(RingDescriptor::matrix(2, RingDescriptor::zn(modulus))).unwrap()
}

#[test]
fn zn_orders_and_units() {
    let r = zn(6);
    assert_eq!(r.order(), 6);
    assert_eq!(r.zero().index(), 0);
    assert_eq!(r.one().index(), 1);
    assert_eq!(r.add(r.element(4), r.element(5)).index(), 3);
    assert_eq!(r.mul(r.element(4), r.element(5)).index(), 2);
    assert_eq!(r.neg(r.element(2)).index(), 4);
}

#[test]
fn matrix_ring_order_is_power_of_base() {
    let r = m2(2);
    assert_eq!(r.order(), 16);
    let t3 = FiniteRing::build(RingDescriptor::upper_triangular(3, RingDescriptor::zn(2))).unwrap();
    assert_eq!(t3.order(), 64);
}

#[test]
fn corner_of_z6_at_3_has_carrier_0_3() {
    // 3*x*3 mod 6 lands on {0, 3} as x runs over Z(6).
    let expected: Vec<u64> = {
        let mut v: Vec<u64> = (0..6).map(|x| (3 * x * 3) % 6).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    assert_eq!(expected, vec![0, 3]);

    let r = FiniteRing::build(RingDescriptor::corner(
        RingDescriptor::zn(6),
        Literal::residue(3),
    ))
    .unwrap();
    assert_eq!(r.order(), 2);
    assert_eq!(r.literal(r.zero()), Literal::residue(0));
    assert_eq!(r.literal(r.one()), Literal::residue(3));
}

#[test]
fn corner_rejects_non_idempotent_generator() {
    let err = FiniteRing::build(RingDescriptor::corner(
        RingDescriptor::zn(6),
        Literal::residue(2),
    ))
    .unwrap_err();
    assert!(matches!(err, RingError::NotIdempotent { .. }));
}

#[test]
fn order_cap_is_enforced() {
    let err = FiniteRing::build_with(
        RingDescriptor::matrix(3, RingDescriptor::zn(4)),
        &BuildOptions {
            order_cap: 1 << 16,
            ..BuildOptions::default()
        },
    )
    .unwrap_err();
    assert!(matches!(err, RingError::OrderCapExceeded { .. }));
}

#[test]
fn small_moduli_are_rejected() {
    assert!(matches!(
        FiniteRing::build(RingDescriptor::zn(1)),
        Err(RingError::ModulusTooSmall(1))
    ));
}

#[test]
fn element_codec_examples() {
    let r = zn(6);
    let e = r.element_from_literal(&Literal::residue(5)).unwrap();
    assert_eq!(e.index(), 5);
    assert_eq!(r.literal(e), Literal::residue(5));

    let m = m2(2);
    let lit = Literal::residue_matrix(&[&[0, 1], &[0, 0]]);
    let e = m.element_from_literal(&lit).unwrap();
    assert_eq!(m.literal(e), lit);

    let p = FiniteRing::build(RingDescriptor::product(
        RingDescriptor::zn(4),
        RingDescriptor::zn(9),
    ))
    .unwrap();
    let lit = Literal::pair(Literal::residue(2), Literal::residue(3));
    let e = p.element_from_literal(&lit).unwrap();
    assert_eq!(p.literal(e), lit);
}

#[test]
fn codec_rejects_bad_shapes_and_ranges() {
    let r = zn(6);
    assert!(matches!(
        r.element_from_literal(&Literal::residue(6)),
        Err(RingError::OutOfRange { .. })
    ));
    assert!(matches!(
        r.element_from_literal(&Literal::residue_matrix(&[&[1]])),
        Err(RingError::ShapeMismatch { .. })
    ));

    let t = FiniteRing::build(RingDescriptor::upper_triangular(2, RingDescriptor::zn(4))).unwrap();
    assert!(matches!(
        t.element_from_literal(&Literal::residue_matrix(&[&[1, 2], &[3, 0]])),
        Err(RingError::NotUpperTriangular { .. })
    ));

    let corner = FiniteRing::build(RingDescriptor::corner(
        RingDescriptor::zn(6),
        Literal::residue(3),
    ))
    .unwrap();
    assert!(matches!(
        corner.element_from_literal(&Literal::residue(2)),
        Err(RingError::OutOfRange { .. })
    ));
}

#[test]
fn trajectory_of_2_mod_12() {
    // 2, 4, 8, 16 = 4: the cycle closes on the second power.
    let r = zn(12);
    let t = r.power_trajectory(r.element(2));
    assert_eq!(t.tail, 2);
    assert_eq!(t.period, 2);
    let indices: Vec<usize> = t.powers.iter().map(|e| e.index()).collect();
    assert_eq!(indices, vec![2, 4, 8]);
}

#[test]
fn trajectory_of_unity_is_a_fixed_point() {
    let r = zn(8);
    let t = r.power_trajectory(r.one());
    assert_eq!((t.tail, t.period), (1, 1));
    assert_eq!(t.powers.len(), 1);
}

#[test]
fn trajectory_of_a_nilpotent_reaches_zero() {
    let m = m2(2);
    let a = m
        .element_from_literal(&Literal::residue_matrix(&[&[0, 1], &[0, 0]]))
        .unwrap();
    let t = m.power_trajectory(a);
    assert_eq!((t.tail, t.period), (2, 1));
    assert_eq!(t.powers.last().unwrap().index(), 0);
}

#[test]
fn pow_agrees_with_repeated_multiplication() {
    let r = FiniteRing::build(RingDescriptor::upper_triangular(2, RingDescriptor::zn(4))).unwrap();
    for a in r.elements() {
        let mut acc = a;
        for n in 1..12u32 {
            assert_eq!(r.pow(a, n), acc, "a={} n={n}", r.literal(a));
            acc = r.mul(acc, a);
        }
        assert_eq!(r.pow(a, 0), r.one());
    }
}

#[test]
fn trajectory_law_holds_everywhere_in_the_corpus() {
    for ring in crate::corpus::shared_corpus() {
        for a in ring.elements() {
            let t = ring.power_trajectory(a);
            assert_eq!(
                ring.pow(a, t.tail + t.period),
                ring.pow(a, t.tail),
                "{} in {}",
                ring.literal(a),
                ring.descriptor()
            );
            // All listed powers are pairwise distinct.
            let mut seen = std::collections::HashSet::new();
            assert!(t.powers.iter().all(|p| seen.insert(p.index())));
        }
    }
}

#[test]
fn corner_carrier_is_closed_under_the_operations() {
    let rings = [
        FiniteRing::build(RingDescriptor::corner(
            RingDescriptor::zn(6),
            Literal::residue(3),
        ))
        .unwrap(),
        FiniteRing::build(RingDescriptor::corner(
            RingDescriptor::matrix(2, RingDescriptor::zn(2)),
            Literal::residue_matrix(&[&[1, 0], &[0, 0]]),
        ))
        .unwrap(),
    ];
    for r in rings {
        for x in r.elements() {
            assert_eq!(r.mul(r.one(), x), x);
            assert_eq!(r.mul(x, r.one()), x);
            let _ = r.neg(x);
            for y in r.elements() {
                // The index math panics if a result escapes the carrier.
                let _ = r.add(x, y);
                let _ = r.mul(x, y);
            }
        }
    }
}

#[test]
fn descriptor_display_round_trips_through_nesting() {
    let d = RingDescriptor::product(
        RingDescriptor::matrix(2, RingDescriptor::zn(2)),
        RingDescriptor::zn(9),
    );
    assert_eq!(d.to_string(), "M(2,Z(2)) x Z(9)");
    let right_nested = RingDescriptor::product(
        RingDescriptor::zn(4),
        RingDescriptor::product(RingDescriptor::zn(9), RingDescriptor::zn(25)),
    );
    assert_eq!(right_nested.to_string(), "Z(4) x (Z(9) x Z(25))");
    let corner = RingDescriptor::corner(
        RingDescriptor::matrix(2, RingDescriptor::zn(2)),
        Literal::residue_matrix(&[&[1, 0], &[0, 0]]),
    );
    assert_eq!(corner.to_string(), "corner(M(2,Z(2)),[[1,0],[0,0]])");
}

#[test]
fn default_corpus_builds_with_validation() {
    let corpus = crate::corpus::default_corpus();
    assert_eq!(corpus.len(), 11);
    let orders: Vec<usize> = corpus.iter().map(|r| r.order()).collect();
    assert_eq!(orders, vec![6, 8, 12, 36, 16, 81, 8, 64, 64, 2, 2]);
}

mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn corpus_ring_index() -> impl Strategy<Value = usize> {
        0..crate::corpus::default_corpus_descriptors().len()
    }

    proptest! {
        #[test]
        fn literal_round_trip_is_the_identity(ring_ix in corpus_ring_index(), raw in 0usize..4096) {
            let ring = FiniteRing::build(
                crate::corpus::default_corpus_descriptors().swap_remove(ring_ix),
            ).unwrap();
            let index = raw % ring.order();
            let e = ring.element(index);
            let lit = ring.literal(e);
            let back = ring.element_from_literal(&lit).unwrap();
            prop_assert_eq!(back.index(), index);
        }

        #[test]
        fn addition_and_multiplication_stay_associative(
            ring_ix in corpus_ring_index(),
            a in 0usize..4096,
            b in 0usize..4096,
            c in 0usize..4096,
        ) {
            let ring = FiniteRing::build(
                crate::corpus::default_corpus_descriptors().swap_remove(ring_ix),
            ).unwrap();
            let n = ring.order();
            let (a, b, c) = (ring.element(a % n), ring.element(b % n), ring.element(c % n));
            prop_assert_eq!(ring.add(ring.add(a, b), c), ring.add(a, ring.add(b, c)));
            prop_assert_eq!(ring.mul(ring.mul(a, b), c), ring.mul(a, ring.mul(b, c)));
            prop_assert_eq!(
                ring.mul(a, ring.add(b, c)),
                ring.add(ring.mul(a, b), ring.mul(a, c))
            );
        }
    }
}
