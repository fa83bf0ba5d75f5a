//! Replays of the worked examples, with the definitional oracle as ground
//! truth. Each claim records the conclusion stated in the source text as
//! plain data next to the oracle's verdict; any disagreement raises a
//! discrepancy flag instead of being resolved either way in code.

use serde::Serialize;

use crate::analysis::{build_involution, projections, InvolutionKind, SubsetKind};
use crate::inverse::pns_star;
use crate::ring::{Element, FiniteRing, Literal, RingDescriptor};
use crate::view::StarPnsCertificateView;

#[derive(Clone, Debug, Serialize)]
pub struct AuditClaim {
    pub subject: String,
    /// What the source text asserts, recorded verbatim as data.
    pub text_expectation: String,
    /// What the definitional oracle computed.
    pub observed: String,
    pub certificate: Option<StarPnsCertificateView>,
    pub discrepancy: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub id: String,
    pub ring: String,
    pub involution: String,
    pub claims: Vec<AuditClaim>,
    pub discrepancy: bool,
}

fn star_claim(
    ring: &FiniteRing,
    inv: &crate::analysis::Involution,
    subject: &str,
    a: Element,
    n: u32,
    expected_present: bool,
) -> AuditClaim {
    let result = pns_star(ring, inv, a, n);
    let observed_present = result.is_some();
    AuditClaim {
        subject: format!("{subject} at n={n}"),
        text_expectation: verdict(expected_present).to_string(),
        observed: verdict(observed_present).to_string(),
        certificate: result.map(|cert| cert.view(ring)),
        discrepancy: observed_present != expected_present,
    }
}

fn verdict(present: bool) -> &'static str {
    if present {
        "present"
    } else {
        "absent"
    }
}

fn finish(id: &str, ring: &FiniteRing, involution: &InvolutionKind, claims: Vec<AuditClaim>) -> AuditReport {
    let discrepancy = claims.iter().any(|c| c.discrepancy);
    AuditReport {
        id: id.to_string(),
        ring: ring.descriptor().to_string(),
        involution: involution.to_string(),
        claims,
        discrepancy,
    }
}

fn matrix_pair_audits(modulus: u64, reports: &mut Vec<AuditReport>) {
    let ring = FiniteRing::build(RingDescriptor::matrix(2, RingDescriptor::zn(modulus)))
        .expect("matrix audit ring builds");
    let inv = build_involution(&ring, InvolutionKind::Transpose)
        .expect("transpose is valid over a commutative base");
    let a = ring
        .element_from_literal(&Literal::residue_matrix(&[&[0, 0], &[1, 1]]))
        .expect("first audit matrix");
    let b = ring
        .element_from_literal(&Literal::residue_matrix(&[&[0, 1], &[0, 0]]))
        .expect("second audit matrix");
    let ab = ring.mul(a, b);
    let ba = ring.mul(b, a);

    let mut product_claims = Vec::new();
    let mut one_minus_claims = Vec::new();
    for n in 1..=4 {
        product_claims.push(star_claim(&ring, &inv, "AB", ab, n, true));
        product_claims.push(star_claim(&ring, &inv, "BA", ba, n, false));
        one_minus_claims.push(star_claim(
            &ring,
            &inv,
            "1-AB",
            ring.sub(ring.one(), ab),
            n,
            true,
        ));
        one_minus_claims.push(star_claim(
            &ring,
            &inv,
            "1-BA",
            ring.sub(ring.one(), ba),
            n,
            false,
        ));
    }
    reports.push(finish(
        &format!("Ex-6-20/Z({modulus})"),
        &ring,
        &InvolutionKind::Transpose,
        product_claims,
    ));
    reports.push(finish(
        &format!("Rem-1/Z({modulus})"),
        &ring,
        &InvolutionKind::Transpose,
        one_minus_claims,
    ));
}

fn members_text(ring: &FiniteRing, members: &[usize]) -> String {
    let rendered: Vec<String> = members
        .iter()
        .map(|&i| ring.literal(ring.element(i)).to_string())
        .collect();
    format!("{{{}}}", rendered.join(","))
}

fn identity_involution_audit(reports: &mut Vec<AuditReport>) {
    let ring = FiniteRing::build(RingDescriptor::zn(6)).expect("Z(6) builds");
    let inv = build_involution(&ring, InvolutionKind::Identity)
        .expect("identity involution on a commutative ring");
    let mut claims = Vec::new();

    let sqrt_j = ring.subset(SubsetKind::SqrtJacobson);
    claims.push(AuditClaim {
        subject: "radical root".to_string(),
        text_expectation: "{0}".to_string(),
        observed: members_text(&ring, &sqrt_j.members),
        certificate: None,
        discrepancy: sqrt_j.members != vec![0],
    });

    let projection_set = projections(&ring, &inv);
    claims.push(AuditClaim {
        subject: "projections under the identity involution".to_string(),
        text_expectation: "{0,1}".to_string(),
        observed: members_text(&ring, &projection_set.members),
        certificate: None,
        discrepancy: projection_set.members != vec![0, 1],
    });

    let minus_one = ring.sub(ring.zero(), ring.one());
    claims.push(star_claim(&ring, &inv, "a = -1", minus_one, 2, true));
    let two = ring.sub(ring.one(), minus_one);
    claims.push(star_claim(&ring, &inv, "1 - a = 2", two, 2, false));

    reports.push(finish("Rem-2", &ring, &InvolutionKind::Identity, claims));
}

/// Rebuilds each worked example and reports oracle verdicts next to the
/// text's stated conclusions.
pub fn audit_paper_examples() -> Vec<AuditReport> {
    let mut reports = Vec::new();
    matrix_pair_audits(2, &mut reports);
    matrix_pair_audits(3, &mut reports);
    identity_involution_audit(&mut reports);
    reports
}
