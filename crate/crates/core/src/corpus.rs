//! The default ring corpus the verification suites sweep over: a mix of
//! modular, product, matrix, triangular and corner rings, all small enough
//! for exhaustive checks.

use once_cell::sync::Lazy;

use crate::ring::{FiniteRing, Literal, RingDescriptor};

pub fn default_corpus_descriptors() -> Vec<RingDescriptor> {
    vec![
        RingDescriptor::zn(6),
        RingDescriptor::zn(8),
        RingDescriptor::zn(12),
        RingDescriptor::product(RingDescriptor::zn(4), RingDescriptor::zn(9)),
        RingDescriptor::matrix(2, RingDescriptor::zn(2)),
        RingDescriptor::matrix(2, RingDescriptor::zn(3)),
        RingDescriptor::upper_triangular(2, RingDescriptor::zn(2)),
        RingDescriptor::upper_triangular(2, RingDescriptor::zn(4)),
        RingDescriptor::upper_triangular(3, RingDescriptor::zn(2)),
        RingDescriptor::corner(RingDescriptor::zn(6), Literal::residue(3)),
        RingDescriptor::corner(
            RingDescriptor::matrix(2, RingDescriptor::zn(2)),
            Literal::residue_matrix(&[&[1, 0], &[0, 0]]),
        ),
    ]
}

/// Builds the whole corpus with default options (axiom checks included for
/// these orders).
pub fn default_corpus() -> Vec<FiniteRing> {
    default_corpus_descriptors()
        .into_iter()
        .map(|d| {
            FiniteRing::build(d.clone())
                .unwrap_or_else(|err| panic!("corpus ring {d} failed to build: {err}"))
        })
        .collect()
}

/// The corpus built once per process, memo caches and all. Sweeps that only
/// read from the rings should prefer this over [`default_corpus`].
pub fn shared_corpus() -> &'static [FiniteRing] {
    static CORPUS: Lazy<Vec<FiniteRing>> = Lazy::new(default_corpus);
    &CORPUS
}
