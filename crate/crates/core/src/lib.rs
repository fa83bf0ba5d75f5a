//! A computational laboratory for generalized Drazin-style inverses in small
//! finite rings.
//!
//! The crate builds finite unital rings compositionally, computes their
//! structural subsets (units, nilpotents, idempotents, the Jacobson radical
//! and its root, quasinilpotents), and decides Drazin, pseudo Drazin, pseudo
//! n-strong Drazin and star-flavored invertibility of every element both by
//! definitional exhaustive search and by closed formulas. On top of that it
//! machine-verifies a corpus of equivalences and transfer statements about
//! these inverses by sweeping entire rings, pairs and triples, and reports
//! the outcome with full witnesses.
//!
//! Sweeps are data-parallel via rayon when the `parallel` feature (default)
//! is enabled; disabling it yields a dependency-free sequential build with
//! identical results.

pub mod analysis;
pub mod corpus;
pub mod exec;
pub mod inverse;
pub mod ring;
pub mod theorems;
pub mod view;

pub use analysis::{
    build_involution, default_involution, projections, AnalysisError, Involution, InvolutionKind,
    ProjectionSet, SubsetCache, SubsetKind,
};
pub use exec::ExecMode;
pub use inverse::{
    drazin_inverse, invert_unit, p_drazin_inverse, pns_formula, pns_oracle, pns_spectrum,
    pns_star, validate_pns, DrazinCertificate, DrazinFlavor, InverseError, InversePath,
    PnsCertificate, PnsSpectrum, StarPnsCertificate,
};
pub use ring::{
    BuildOptions, Element, FiniteRing, Literal, PowerTrajectory, RingDescriptor, RingError,
    RingId, ValidationMode, DEFAULT_ORDER_CAP,
};
pub use theorems::{
    audit_paper_examples, check_pns_characterizations, check_spectral_equality, classify,
    cline_transfer, conjecture_search, jacobson_transfer, path_agreement, star_transfers,
    structural_props, verify_theorem, AuditClaim, AuditReport, Flag, RingClassification,
    StructuralOptions, SweepOptions, TheoremId, TheoremReport, TheoremStatus, VerifyError,
    Witness,
};
pub use view::{DrazinCertificateView, ElementView, PnsCertificateView, StarPnsCertificateView};
