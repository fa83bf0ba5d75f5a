use super::*;
use crate::analysis::build_involution;
use crate::ring::{FiniteRing, Literal, RingDescriptor};

fn zn(n: u64) -> FiniteRing {
    FiniteRing::build(RingDescriptor::zn(n)).unwrap()
}

fn m2(modulus: u64) -> FiniteRing {
    FiniteRing::build(RingDescriptor::matrix(2, RingDescriptor::zn(modulus))).unwrap()
}

fn mat(ring: &FiniteRing, rows: &[&[u64]]) -> crate::ring::Element {
    ring.element_from_literal(&Literal::residue_matrix(rows)).unwrap()
}

#[test]
fn invert_unit_examples() {
    let z6 = zn(6);
    assert_eq!(invert_unit(&z6, z6.element(5)).unwrap(), z6.element(5));
    assert_eq!(invert_unit(&z6, z6.one()).unwrap(), z6.one());
    assert!(matches!(
        invert_unit(&z6, z6.element(2)),
        Err(InverseError::NotAUnit { .. })
    ));

    let ring = m2(2);
    let u = mat(&ring, &[&[1, 1], &[0, 1]]);
    assert_eq!(invert_unit(&ring, u).unwrap(), u);
}

#[test]
fn drazin_inverse_examples() {
    let z6 = zn(6);
    // Idempotents are their own inverse.
    for e in [0usize, 1, 3, 4] {
        let cert = drazin_inverse(&z6, z6.element(e)).unwrap();
        assert_eq!(cert.x.index(), e);
        assert_eq!(cert.defect.index(), 0);
    }
    // 2*2*2 = 2 and 2 - 4*2 = 0 mod 6.
    let cert = drazin_inverse(&z6, z6.element(2)).unwrap();
    assert_eq!(cert.x.index(), 2);

    // Nilpotents invert to zero.
    let ring = m2(2);
    let nil = mat(&ring, &[&[0, 1], &[0, 0]]);
    let cert = drazin_inverse(&ring, nil).unwrap();
    assert_eq!(cert.x, ring.zero());
    assert_eq!(cert.k, 2);
}

#[test]
fn p_drazin_examples() {
    let z4 = zn(4);
    let cert = p_drazin_inverse(&z4, z4.element(2)).unwrap();
    assert_eq!(cert.x.index(), 0);
    assert_eq!(cert.polar_idempotent.unwrap().index(), 1);

    // Units: inverse is the unit inverse and the polar idempotent is zero.
    let z6 = zn(6);
    let five = z6.element(5);
    let cert = p_drazin_inverse(&z6, five).unwrap();
    assert_eq!(cert.x, invert_unit(&z6, five).unwrap());
    assert_eq!(cert.polar_idempotent.unwrap(), z6.zero());

    // Over a matrix ring over a field every element is p-Drazin invertible.
    for q in [2u64, 3] {
        let ring = m2(q);
        for a in ring.elements() {
            assert!(p_drazin_inverse(&ring, a).is_some(), "q={q} a={}", ring.literal(a));
        }
    }
}

#[test]
fn pns_oracle_examples() {
    let z6 = zn(6);
    let cert = pns_oracle(&z6, z6.element(5), 2).unwrap();
    assert_eq!(cert.x.index(), 5);
    assert_eq!(cert.e.index(), 1);
    assert_eq!(cert.k, 1);

    // Idempotents are pns invertible at every exponent with x = f.
    for ring in crate::corpus::shared_corpus() {
        for &f in &ring.subset(crate::analysis::SubsetKind::Idempotents).members {
            for n in 1..=4 {
                let cert = pns_oracle(&ring, ring.element(f), n).unwrap();
                assert_eq!(cert.x.index(), f);
                assert_eq!(cert.e.index(), f);
            }
        }
    }

    let ring = m2(3);
    let a = mat(&ring, &[&[2, 0], &[0, 1]]);
    assert!(pns_oracle(&ring, a, 1).is_none());
    let cert = pns_oracle(&ring, a, 2).unwrap();
    assert_eq!(cert.x, a);
    assert_eq!(cert.e, ring.one());
}

#[test]
fn pns_formula_examples() {
    let z6 = zn(6);
    let cert = pns_formula(&z6, z6.element(5), 2).unwrap().unwrap();
    assert_eq!(cert.x.index(), 5);
    assert_eq!(cert.e.index(), 1);

    // Radical-root elements: spectral idempotent 0 and inverse 0.
    let z4 = zn(4);
    for n in 1..=4 {
        let cert = pns_formula(&z4, z4.element(2), n).unwrap().unwrap();
        assert_eq!(cert.e, z4.zero());
        assert_eq!(cert.x, z4.zero());
    }

    // a^n - 1 in the radical root forces spectral idempotent 1.
    let z8 = zn(8);
    let cert = pns_formula(&z8, z8.element(3), 2).unwrap().unwrap();
    assert_eq!(cert.e, z8.one());
}

#[test]
fn oracle_and_formula_agree_on_a_sample() {
    for ring in [zn(6), zn(12), m2(2)] {
        for a in ring.elements() {
            for n in 1..=4 {
                let o = pns_oracle(&ring, a, n);
                let f = pns_formula(&ring, a, n).unwrap();
                assert_eq!(o.is_some(), f.is_some());
                if let (Some(o), Some(f)) = (o, f) {
                    assert_eq!(o.x, f.x);
                    assert_eq!(o.e, f.e);
                    assert_eq!(o.k, f.k);
                    validate_pns(&ring, &o).unwrap();
                    validate_pns(&ring, &f).unwrap();
                }
            }
        }
    }
}

#[test]
fn pns_star_examples() {
    for q in [2u64, 3] {
        let ring = m2(q);
        let inv = build_involution(&ring, crate::analysis::InvolutionKind::Transpose).unwrap();
        let a = mat(&ring, &[&[0, 0], &[1, 1]]);
        let b = mat(&ring, &[&[0, 1], &[0, 0]]);
        let ab = ring.mul(a, b);
        let ba = ring.mul(b, a);
        for n in 1..=4 {
            assert!(pns_star(&ring, &inv, ab, n).is_some(), "AB, q={q}, n={n}");
            assert!(pns_star(&ring, &inv, ba, n).is_none(), "BA, q={q}, n={n}");
        }
        // Radical-root elements are star invertible with x = 0.
        for &s in &ring.subset(crate::analysis::SubsetKind::SqrtJacobson).members {
            let cert = pns_star(&ring, &inv, ring.element(s), 1).unwrap();
            assert_eq!(cert.base.x, ring.zero());
        }
    }
}

#[test]
fn pns_spectrum_examples() {
    let z6 = zn(6);
    let s = pns_spectrum(&z6, z6.element(5), 4);
    assert_eq!(s.present, vec![2, 4]);
    assert_eq!(s.minimal, Some(2));

    let s = pns_spectrum(&z6, z6.element(4), 4);
    assert_eq!(s.present, vec![1, 2, 3, 4]);

    let ring = m2(3);
    let a = mat(&ring, &[&[2, 0], &[0, 1]]);
    let s = pns_spectrum(&ring, a, 4);
    assert_eq!(s.present, vec![2, 4]);
}

#[test]
fn containments_between_the_inverse_notions() {
    for ring in crate::corpus::shared_corpus() {
        let inv = crate::analysis::default_involution(&ring).unwrap();
        for a in ring.elements() {
            let drazin = drazin_inverse(&ring, a).is_some();
            let p_drazin = p_drazin_inverse(&ring, a).is_some();
            if drazin {
                assert!(p_drazin);
            }
            for n in 1..=3 {
                let star = pns_star(&ring, &inv, a, n).is_some();
                let pns = pns_oracle(&ring, a, n).is_some();
                if star {
                    assert!(pns);
                }
                if pns {
                    assert!(p_drazin);
                }
            }
        }
    }
}

#[test]
fn unique_commuting_idempotent_for_every_invertible_pair() {
    for ring in crate::corpus::shared_corpus() {
        let sqrt_j = ring.subset(crate::analysis::SubsetKind::SqrtJacobson);
        let idempotents = ring.subset(crate::analysis::SubsetKind::Idempotents);
        for a in ring.elements() {
            for n in 1..=3u32 {
                if pns_oracle(&ring, a, n).is_none() {
                    continue;
                }
                let an = ring.pow(a, n);
                let count = idempotents
                    .members
                    .iter()
                    .filter(|&&f| {
                        let fe = ring.element(f);
                        ring.mul(a, fe) == ring.mul(fe, a)
                            && sqrt_j.contains_element(ring.sub(an, fe))
                    })
                    .count();
                assert_eq!(count, 1, "a={} n={n} in {}", ring.literal(a), ring.descriptor());
            }
        }
    }
}

#[test]
fn certificates_expose_minimal_radical_exponents() {
    let z8 = zn(8);
    // 2^3 = 0 in Z(8) and J = {0,2,4,6}, so a = 2 at n = 1 has e = 0 and
    // a^1 - e = 2 already in J.
    let cert = pns_formula(&z8, z8.element(2), 1).unwrap().unwrap();
    assert_eq!(cert.k, 1);
    validate_pns(&z8, &cert).unwrap();
}
