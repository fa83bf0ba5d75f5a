//! Construction and exact arithmetic of small finite unital rings.
//!
//! Rings are described compositionally ([`RingDescriptor`]) and compiled into
//! a [`FiniteRing`] that exposes total `add`/`mul`/`neg` on canonically
//! indexed elements. Arithmetic is computed structurally from the descriptor
//! tree rather than from precomputed operation tables, so rings of a few
//! thousand elements stay cheap to build. Enumeration order is the
//! lexicographic (mixed-radix) order of the structural literal, which is
//! deterministic across runs and platforms.

mod literal;
mod validate;

pub use literal::Literal;

use std::collections::HashMap;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use once_cell::sync::OnceCell;
use serde::Serialize;
use thiserror::Error;

use crate::analysis::AnalysisCaches;
use crate::exec::ExecMode;

/// Default bound on the order of a buildable ring.
pub const DEFAULT_ORDER_CAP: u64 = 65_536;

/// Orders up to this bound get a full ring-axiom check at build time.
pub const AUTO_VALIDATE_LIMIT: u64 = 256;

/// Compositional description of a finite unital ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingDescriptor {
    /// Integers modulo `n`, `n >= 2`.
    Zn(u64),
    /// Full `k x k` matrix ring over a base ring.
    Matrix(usize, Box<RingDescriptor>),
    /// `k x k` upper triangular matrix ring over a base ring.
    UpperTriangular(usize, Box<RingDescriptor>),
    /// Direct product of two rings.
    Product(Box<RingDescriptor>, Box<RingDescriptor>),
    /// Corner ring `eRe` carved out of a base ring by an idempotent `e`.
    Corner(Box<RingDescriptor>, Literal),
}

impl RingDescriptor {
    pub fn zn(n: u64) -> Self {
        RingDescriptor::Zn(n)
    }

    pub fn matrix(k: usize, base: RingDescriptor) -> Self {
        RingDescriptor::Matrix(k, Box::new(base))
    }

    pub fn upper_triangular(k: usize, base: RingDescriptor) -> Self {
        RingDescriptor::UpperTriangular(k, Box::new(base))
    }

    pub fn product(left: RingDescriptor, right: RingDescriptor) -> Self {
        RingDescriptor::Product(Box::new(left), Box::new(right))
    }

    pub fn corner(base: RingDescriptor, idempotent: Literal) -> Self {
        RingDescriptor::Corner(Box::new(base), idempotent)
    }
}

impl fmt::Display for RingDescriptor {
    /// Canonical textual form, parseable by the CLI ring grammar.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Zn(n) => write!(f, "Z({n})"),
            RingDescriptor::Matrix(k, base) => write!(f, "M({k},{base})"),
            RingDescriptor::UpperTriangular(k, base) => write!(f, "T({k},{base})"),
            RingDescriptor::Product(l, r) => {
                write!(f, "{l} x ")?;
                // The product operator is left-associative, so a right-nested
                // product needs explicit grouping to survive a reparse.
                if matches!(**r, RingDescriptor::Product(..)) {
                    write!(f, "({r})")
                } else {
                    write!(f, "{r}")
                }
            }
            RingDescriptor::Corner(base, e) => write!(f, "corner({base},{e})"),
        }
    }
}

/// Errors raised while building rings or converting elements.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum RingError {
    #[error("ring order {order} exceeds the cap {cap}")]
    OrderCapExceeded { order: u128, cap: u64 },
    #[error("corner generator {literal} is not idempotent in {ring}")]
    NotIdempotent { ring: String, literal: String },
    #[error("ring axiom `{law}` fails in {ring} at {witness}")]
    AxiomViolation {
        ring: String,
        law: &'static str,
        witness: String,
    },
    #[error("modulus {0} is too small, need at least 2")]
    ModulusTooSmall(u64),
    #[error("matrix dimension {0} must be at least 1")]
    DimensionTooSmall(usize),
    #[error("literal {literal} does not match the shape of {ring}")]
    ShapeMismatch { ring: String, literal: String },
    #[error("literal {literal} is out of range for {ring}")]
    OutOfRange { ring: String, literal: String },
    #[error("strictly lower entries must be zero in {ring}, got {literal}")]
    NotUpperTriangular { ring: String, literal: String },
}

/// How much axiom checking to run when a ring is built.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ValidationMode {
    /// Full check for orders up to [`AUTO_VALIDATE_LIMIT`], skipped above.
    #[default]
    Auto,
    /// Always run the full O(order^3) check.
    Force,
    Skip,
}

/// Knobs for [`FiniteRing::build_with`].
#[derive(Clone, Copy, Debug)]
pub struct BuildOptions {
    pub order_cap: u64,
    pub validation: ValidationMode,
    pub mode: ExecMode,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            order_cap: DEFAULT_ORDER_CAP,
            validation: ValidationMode::Auto,
            mode: ExecMode::default(),
        }
    }
}

/// Opaque identity of a built ring; elements remember which ring owns them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RingId(u64);

static NEXT_RING_ID: AtomicU64 = AtomicU64::new(1);

/// An element of a [`FiniteRing`], identified by its canonical index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element {
    ring: RingId,
    index: usize,
}

impl Element {
    pub(crate) fn raw(ring: RingId, index: usize) -> Element {
        Element { ring, index }
    }

    pub fn ring_id(&self) -> RingId {
        self.ring
    }

    pub fn index(&self) -> usize {
        self.index
    }
}

/// Eventual cycle of the powers `a^1, a^2, ...` of an element.
///
/// `tail` is the exponent of the first power that re-occurs later, `period`
/// the cycle length, so `a^(tail+period) = a^tail` and the listed powers
/// `a^1 ..= a^(tail+period-1)` are pairwise distinct.
#[derive(Clone, Debug)]
pub struct PowerTrajectory {
    pub base: Element,
    pub tail: u32,
    pub period: u32,
    pub powers: Vec<Element>,
}

#[derive(Clone, Debug)]
pub(crate) struct TrajectoryData {
    pub tail: u32,
    pub period: u32,
    pub powers: Vec<usize>,
}

pub(crate) enum Repr {
    Zn {
        modulus: u64,
    },
    Matrix {
        k: usize,
        cells: usize,
        base: Arc<FiniteRing>,
    },
    Triangular {
        k: usize,
        cells: usize,
        base: Arc<FiniteRing>,
    },
    Product {
        left: Arc<FiniteRing>,
        right: Arc<FiniteRing>,
    },
    Corner {
        base: Arc<FiniteRing>,
        carrier: Vec<usize>,
    },
}

/// A finite unital ring with exact arithmetic on canonical element indices.
///
/// Immutable after construction; all operations are pure and the internal
/// memo caches are safe to fill from concurrent workers.
pub struct FiniteRing {
    id: RingId,
    descriptor: RingDescriptor,
    order: usize,
    one: usize,
    repr: Repr,
    commutative: OnceCell<bool>,
    trajectories: Box<[OnceCell<TrajectoryData>]>,
    pub(crate) analysis: AnalysisCaches,
}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("descriptor", &self.descriptor.to_string())
            .field("order", &self.order)
            .finish()
    }
}

fn computed_order(descriptor: &RingDescriptor) -> Result<u128, RingError> {
    match descriptor {
        RingDescriptor::Zn(n) => {
            if *n < 2 {
                Err(RingError::ModulusTooSmall(*n))
            } else {
                Ok(*n as u128)
            }
        }
        RingDescriptor::Matrix(k, base) => {
            if *k < 1 {
                return Err(RingError::DimensionTooSmall(*k));
            }
            let b = computed_order(base)?;
            checked_power(b, (*k as u32) * (*k as u32))
        }
        RingDescriptor::UpperTriangular(k, base) => {
            if *k < 1 {
                return Err(RingError::DimensionTooSmall(*k));
            }
            let b = computed_order(base)?;
            checked_power(b, (*k * (*k + 1) / 2) as u32)
        }
        RingDescriptor::Product(l, r) => {
            let (l, r) = (computed_order(l)?, computed_order(r)?);
            l.checked_mul(r).ok_or(RingError::OrderCapExceeded {
                order: u128::MAX,
                cap: DEFAULT_ORDER_CAP,
            })
        }
        // The corner carrier is a subset of the base ring.
        RingDescriptor::Corner(base, _) => computed_order(base),
    }
}

fn checked_power(base: u128, exp: u32) -> Result<u128, RingError> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.checked_mul(base).ok_or(RingError::OrderCapExceeded {
            order: u128::MAX,
            cap: DEFAULT_ORDER_CAP,
        })?;
    }
    Ok(acc)
}

impl FiniteRing {
    /// Builds the ring described by `descriptor` with default options.
    pub fn build(descriptor: RingDescriptor) -> Result<FiniteRing, RingError> {
        Self::build_with(descriptor, &BuildOptions::default())
    }

    pub fn build_with(
        descriptor: RingDescriptor,
        options: &BuildOptions,
    ) -> Result<FiniteRing, RingError> {
        let wide_order = computed_order(&descriptor)?;
        if wide_order > options.order_cap as u128 {
            return Err(RingError::OrderCapExceeded {
                order: wide_order,
                cap: options.order_cap,
            });
        }
        let ring = Self::assemble(descriptor, options)?;
        let run_check = match options.validation {
            ValidationMode::Auto => ring.order as u64 <= AUTO_VALIDATE_LIMIT,
            ValidationMode::Force => true,
            ValidationMode::Skip => false,
        };
        if run_check {
            validate::check_axioms(&ring, options.mode)?;
        }
        Ok(ring)
    }

    fn assemble(descriptor: RingDescriptor, options: &BuildOptions) -> Result<FiniteRing, RingError> {
        // Children skip their own axiom check; the composite is validated once.
        let child_options = BuildOptions {
            validation: ValidationMode::Skip,
            ..*options
        };
        let (repr, order, one) = match &descriptor {
            RingDescriptor::Zn(n) => (Repr::Zn { modulus: *n }, *n as usize, 1usize),
            RingDescriptor::Matrix(k, base) => {
                let base = Arc::new(Self::build_with((**base).clone(), &child_options)?);
                let cells = k * k;
                let order = base.order.pow(cells as u32);
                let repr = Repr::Matrix {
                    k: *k,
                    cells,
                    base,
                };
                let one = identity_index(&repr);
                (repr, order, one)
            }
            RingDescriptor::UpperTriangular(k, base) => {
                let base = Arc::new(Self::build_with((**base).clone(), &child_options)?);
                let cells = k * (k + 1) / 2;
                let order = base.order.pow(cells as u32);
                let repr = Repr::Triangular {
                    k: *k,
                    cells,
                    base,
                };
                let one = identity_index(&repr);
                (repr, order, one)
            }
            RingDescriptor::Product(l, r) => {
                let left = Arc::new(Self::build_with((**l).clone(), &child_options)?);
                let right = Arc::new(Self::build_with((**r).clone(), &child_options)?);
                let order = left.order * right.order;
                let one = left.one * right.order + right.one;
                (Repr::Product { left, right }, order, one)
            }
            RingDescriptor::Corner(base_desc, literal) => {
                let base = Arc::new(Self::build_with((**base_desc).clone(), &child_options)?);
                let generator = base.index_from_literal(literal)?;
                if base.mul_idx(generator, generator) != generator {
                    return Err(RingError::NotIdempotent {
                        ring: base.descriptor.to_string(),
                        literal: literal.to_string(),
                    });
                }
                let mut carrier: Vec<usize> = (0..base.order)
                    .map(|x| base.mul_idx(base.mul_idx(generator, x), generator))
                    .collect();
                carrier.sort_unstable();
                carrier.dedup();
                let one = carrier
                    .binary_search(&generator)
                    .expect("corner generator lies in its own carrier");
                let order = carrier.len();
                (Repr::Corner { base, carrier }, order, one)
            }
        };
        Ok(FiniteRing {
            id: RingId(NEXT_RING_ID.fetch_add(1, Ordering::Relaxed)),
            descriptor,
            order,
            one,
            repr,
            commutative: OnceCell::new(),
            trajectories: (0..order).map(|_| OnceCell::new()).collect(),
            analysis: AnalysisCaches::new(order),
        })
    }

    pub fn id(&self) -> RingId {
        self.id
    }

    pub fn descriptor(&self) -> &RingDescriptor {
        &self.descriptor
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The element with canonical index `index`; panics when out of range.
    pub fn element(&self, index: usize) -> Element {
        assert!(index < self.order, "element index {index} out of range");
        Element {
            ring: self.id,
            index,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order).map(move |index| Element {
            ring: self.id,
            index,
        })
    }

    pub fn zero(&self) -> Element {
        self.element(0)
    }

    pub fn one(&self) -> Element {
        self.element(self.one)
    }

    fn own(&self, e: Element) -> usize {
        assert_eq!(
            e.ring, self.id,
            "element belongs to a different ring than {self:?}"
        );
        e.index
    }

    pub fn add(&self, a: Element, b: Element) -> Element {
        self.element(self.add_idx(self.own(a), self.own(b)))
    }

    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.element(self.mul_idx(self.own(a), self.own(b)))
    }

    pub fn neg(&self, a: Element) -> Element {
        self.element(self.neg_idx(self.own(a)))
    }

    pub fn sub(&self, a: Element, b: Element) -> Element {
        self.element(self.add_idx(self.own(a), self.neg_idx(self.own(b))))
    }

    /// `a^n` for `n >= 1`; `pow(a, 0)` is the unity.
    pub fn pow(&self, a: Element, n: u32) -> Element {
        if n == 0 {
            return self.one();
        }
        self.element(self.pow_idx(self.own(a), n))
    }

    pub(crate) fn add_idx(&self, a: usize, b: usize) -> usize {
        match &self.repr {
            Repr::Zn { modulus } => ((a as u64 + b as u64) % modulus) as usize,
            Repr::Matrix { cells, base, .. } | Repr::Triangular { cells, base, .. } => {
                let xs = decode(a, *cells, base.order);
                let ys = decode(b, *cells, base.order);
                let sum: Vec<usize> = xs
                    .iter()
                    .zip(&ys)
                    .map(|(&x, &y)| base.add_idx(x, y))
                    .collect();
                encode(&sum, base.order)
            }
            Repr::Product { left, right } => {
                let (la, ra) = (a / right.order, a % right.order);
                let (lb, rb) = (b / right.order, b % right.order);
                left.add_idx(la, lb) * right.order + right.add_idx(ra, rb)
            }
            Repr::Corner { base, carrier, .. } => {
                self.corner_position(base.add_idx(carrier[a], carrier[b]))
            }
        }
    }

    pub(crate) fn neg_idx(&self, a: usize) -> usize {
        match &self.repr {
            Repr::Zn { modulus } => ((modulus - a as u64) % modulus) as usize,
            Repr::Matrix { cells, base, .. } | Repr::Triangular { cells, base, .. } => {
                let xs = decode(a, *cells, base.order);
                let neg: Vec<usize> = xs.iter().map(|&x| base.neg_idx(x)).collect();
                encode(&neg, base.order)
            }
            Repr::Product { left, right } => {
                left.neg_idx(a / right.order) * right.order + right.neg_idx(a % right.order)
            }
            Repr::Corner { base, carrier, .. } => self.corner_position(base.neg_idx(carrier[a])),
        }
    }

    pub(crate) fn mul_idx(&self, a: usize, b: usize) -> usize {
        match &self.repr {
            Repr::Zn { modulus } => ((a as u64 * b as u64) % modulus) as usize,
            Repr::Matrix { k, cells, base } => {
                let xs = decode(a, *cells, base.order);
                let ys = decode(b, *cells, base.order);
                let mut out = vec![0usize; *cells];
                for r in 0..*k {
                    for c in 0..*k {
                        let mut acc = 0usize;
                        for t in 0..*k {
                            acc = base.add_idx(acc, base.mul_idx(xs[r * k + t], ys[t * k + c]));
                        }
                        out[r * k + c] = acc;
                    }
                }
                encode(&out, base.order)
            }
            Repr::Triangular { k, cells, base } => {
                let xs = decode(a, *cells, base.order);
                let ys = decode(b, *cells, base.order);
                let mut out = vec![0usize; *cells];
                for r in 0..*k {
                    for c in r..*k {
                        let mut acc = 0usize;
                        for t in r..=c {
                            acc = base.add_idx(
                                acc,
                                base.mul_idx(xs[upper_pos(*k, r, t)], ys[upper_pos(*k, t, c)]),
                            );
                        }
                        out[upper_pos(*k, r, c)] = acc;
                    }
                }
                encode(&out, base.order)
            }
            Repr::Product { left, right } => {
                let (la, ra) = (a / right.order, a % right.order);
                let (lb, rb) = (b / right.order, b % right.order);
                left.mul_idx(la, lb) * right.order + right.mul_idx(ra, rb)
            }
            Repr::Corner { base, carrier, .. } => {
                self.corner_position(base.mul_idx(carrier[a], carrier[b]))
            }
        }
    }

    fn corner_position(&self, base_index: usize) -> usize {
        match &self.repr {
            Repr::Corner { carrier, .. } => carrier
                .binary_search(&base_index)
                .expect("corner ring is closed under its operations"),
            _ => unreachable!("corner_position on a non-corner ring"),
        }
    }

    pub(crate) fn pow_idx(&self, a: usize, n: u32) -> usize {
        debug_assert!(n >= 1);
        let data = self.trajectory_data(a);
        let len = data.powers.len() as u32;
        if n <= len {
            data.powers[(n - 1) as usize]
        } else {
            let wrapped = data.tail + (n - data.tail) % data.period;
            data.powers[(wrapped - 1) as usize]
        }
    }

    pub(crate) fn trajectory_data(&self, a: usize) -> &TrajectoryData {
        self.trajectories[a].get_or_init(|| {
            let mut powers = Vec::new();
            let mut seen: HashMap<usize, u32> = HashMap::new();
            let mut current = a;
            let mut exponent = 1u32;
            loop {
                if let Some(&tail) = seen.get(&current) {
                    return TrajectoryData {
                        tail,
                        period: exponent - tail,
                        powers,
                    };
                }
                seen.insert(current, exponent);
                powers.push(current);
                current = self.mul_idx(current, a);
                exponent += 1;
            }
        })
    }

    /// Powers of `a` up to the point where they start repeating.
    pub fn power_trajectory(&self, a: Element) -> PowerTrajectory {
        let idx = self.own(a);
        let data = self.trajectory_data(idx);
        PowerTrajectory {
            base: a,
            tail: data.tail,
            period: data.period,
            powers: data.powers.iter().map(|&p| self.element(p)).collect(),
        }
    }

    /// Whether multiplication commutes everywhere.
    pub fn is_commutative(&self) -> bool {
        *self.commutative.get_or_init(|| match &self.repr {
            Repr::Zn { .. } => true,
            Repr::Matrix { k, base, .. } | Repr::Triangular { k, base, .. } => {
                *k == 1 && base.is_commutative() || base.order == 1
            }
            Repr::Product { left, right } => left.is_commutative() && right.is_commutative(),
            Repr::Corner { .. } => (0..self.order).all(|a| {
                (0..a).all(|b| self.mul_idx(a, b) == self.mul_idx(b, a))
            }),
        })
    }

    pub(crate) fn repr(&self) -> &Repr {
        &self.repr
    }

    /// Structured literal view of an element (inverse of [`Self::element_from_literal`]).
    pub fn literal(&self, a: Element) -> Literal {
        self.literal_of_idx(self.own(a))
    }

    pub(crate) fn literal_of_idx(&self, a: usize) -> Literal {
        match &self.repr {
            Repr::Zn { .. } => Literal::Residue(a as u64),
            Repr::Matrix { k, cells, base } => {
                let entries = decode(a, *cells, base.order);
                let rows = (0..*k)
                    .map(|r| {
                        (0..*k)
                            .map(|c| base.literal_of_idx(entries[r * k + c]))
                            .collect()
                    })
                    .collect();
                Literal::Matrix(rows)
            }
            Repr::Triangular { k, cells, base } => {
                let entries = decode(a, *cells, base.order);
                let rows = (0..*k)
                    .map(|r| {
                        (0..*k)
                            .map(|c| {
                                if r <= c {
                                    base.literal_of_idx(entries[upper_pos(*k, r, c)])
                                } else {
                                    base.literal_of_idx(0)
                                }
                            })
                            .collect()
                    })
                    .collect();
                Literal::Matrix(rows)
            }
            Repr::Product { left, right } => Literal::Pair(
                Box::new(left.literal_of_idx(a / right.order)),
                Box::new(right.literal_of_idx(a % right.order)),
            ),
            Repr::Corner { base, carrier, .. } => base.literal_of_idx(carrier[a]),
        }
    }

    /// Canonical element for a structural literal.
    pub fn element_from_literal(&self, literal: &Literal) -> Result<Element, RingError> {
        let idx = self.index_from_literal(literal)?;
        Ok(self.element(idx))
    }

    pub(crate) fn index_from_literal(&self, literal: &Literal) -> Result<usize, RingError> {
        let shape_mismatch = || RingError::ShapeMismatch {
            ring: self.descriptor.to_string(),
            literal: literal.to_string(),
        };
        match (&self.repr, literal) {
            (Repr::Zn { modulus }, Literal::Residue(r)) => {
                if r < modulus {
                    Ok(*r as usize)
                } else {
                    Err(RingError::OutOfRange {
                        ring: self.descriptor.to_string(),
                        literal: literal.to_string(),
                    })
                }
            }
            (Repr::Matrix { k, base, .. }, Literal::Matrix(rows)) => {
                if rows.len() != *k || rows.iter().any(|row| row.len() != *k) {
                    return Err(shape_mismatch());
                }
                let mut entries = Vec::with_capacity(k * k);
                for row in rows {
                    for cell in row {
                        entries.push(base.index_from_literal(cell)?);
                    }
                }
                Ok(encode(&entries, base.order))
            }
            (Repr::Triangular { k, base, .. }, Literal::Matrix(rows)) => {
                if rows.len() != *k || rows.iter().any(|row| row.len() != *k) {
                    return Err(shape_mismatch());
                }
                let mut entries = vec![0usize; k * (k + 1) / 2];
                for (r, row) in rows.iter().enumerate() {
                    for (c, cell) in row.iter().enumerate() {
                        let idx = base.index_from_literal(cell)?;
                        if r > c {
                            if idx != 0 {
                                return Err(RingError::NotUpperTriangular {
                                    ring: self.descriptor.to_string(),
                                    literal: literal.to_string(),
                                });
                            }
                        } else {
                            entries[upper_pos(*k, r, c)] = idx;
                        }
                    }
                }
                Ok(encode(&entries, base.order))
            }
            (Repr::Product { left, right }, Literal::Pair(l, r)) => {
                let li = left.index_from_literal(l)?;
                let ri = right.index_from_literal(r)?;
                Ok(li * right.order + ri)
            }
            (Repr::Corner { base, carrier, .. }, lit) => {
                let bi = base.index_from_literal(lit)?;
                carrier
                    .binary_search(&bi)
                    .map_err(|_| RingError::OutOfRange {
                        ring: self.descriptor.to_string(),
                        literal: lit.to_string(),
                    })
            }
            _ => Err(shape_mismatch()),
        }
    }
}

fn identity_index(repr: &Repr) -> usize {
    match repr {
        Repr::Matrix { k, cells, base } => {
            let mut entries = vec![0usize; *cells];
            for r in 0..*k {
                entries[r * k + r] = base.one;
            }
            encode(&entries, base.order)
        }
        Repr::Triangular { k, cells, base } => {
            let mut entries = vec![0usize; *cells];
            for r in 0..*k {
                entries[upper_pos(*k, r, r)] = base.one;
            }
            encode(&entries, base.order)
        }
        _ => unreachable!("identity_index is only used for matrix shapes"),
    }
}

/// Row-major position of the upper-triangle cell `(r, c)`, `r <= c`.
pub(crate) fn upper_pos(k: usize, r: usize, c: usize) -> usize {
    debug_assert!(r <= c && c < k);
    r * k - r * (r + 1) / 2 + c
}

/// Mixed-radix decode: the first cell is the most significant digit.
pub(crate) fn decode(mut index: usize, cells: usize, radix: usize) -> Vec<usize> {
    let mut out = vec![0usize; cells];
    for slot in out.iter_mut().rev() {
        *slot = index % radix;
        index /= radix;
    }
    out
}

pub(crate) fn encode(entries: &[usize], radix: usize) -> usize {
    entries.iter().fold(0usize, |acc, &e| acc * radix + e)
}

#[cfg(test)]
mod tests;
