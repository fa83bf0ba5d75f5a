//! Serializable snapshots of elements and certificates.
//!
//! Core types hold bare element handles; these views pair each handle with
//! its rendered literal so reports can be re-checked by a reader without
//! access to the enumeration.

use serde::Serialize;

use crate::inverse::{DrazinCertificate, DrazinFlavor, InversePath, PnsCertificate, StarPnsCertificate};
use crate::ring::{Element, FiniteRing};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementView {
    pub index: usize,
    pub literal: String,
}

impl ElementView {
    pub fn new(ring: &FiniteRing, e: Element) -> Self {
        ElementView {
            index: e.index(),
            literal: ring.literal(e).to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PnsCertificateView {
    pub a: ElementView,
    pub n: u32,
    pub x: ElementView,
    pub e: ElementView,
    pub radical_exponent: u32,
    pub path: InversePath,
}

impl PnsCertificate {
    pub fn view(&self, ring: &FiniteRing) -> PnsCertificateView {
        PnsCertificateView {
            a: ElementView::new(ring, self.a),
            n: self.n,
            x: ElementView::new(ring, self.x),
            e: ElementView::new(ring, self.e),
            radical_exponent: self.k,
            path: self.path,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DrazinCertificateView {
    pub a: ElementView,
    pub x: ElementView,
    pub flavor: DrazinFlavor,
    pub defect: ElementView,
    pub witness_exponent: u32,
    pub polar_idempotent: Option<ElementView>,
}

impl DrazinCertificate {
    pub fn view(&self, ring: &FiniteRing) -> DrazinCertificateView {
        DrazinCertificateView {
            a: ElementView::new(ring, self.a),
            x: ElementView::new(ring, self.x),
            flavor: self.flavor,
            defect: ElementView::new(ring, self.defect),
            witness_exponent: self.k,
            polar_idempotent: self.polar_idempotent.map(|p| ElementView::new(ring, p)),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StarPnsCertificateView {
    pub involution: String,
    #[serde(flatten)]
    pub base: PnsCertificateView,
}

impl StarPnsCertificate {
    pub fn view(&self, ring: &FiniteRing) -> StarPnsCertificateView {
        StarPnsCertificateView {
            involution: self.involution.to_string(),
            base: self.base.view(ring),
        }
    }
}
