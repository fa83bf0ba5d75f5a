//! Exhaustive ring-axiom check used at build time.

use super::{FiniteRing, RingError};
use crate::exec::{self, ExecMode};

fn witness(ring: &FiniteRing, ids: &[usize]) -> String {
    let parts: Vec<String> = ids
        .iter()
        .map(|&i| ring.literal_of_idx(i).to_string())
        .collect();
    format!("({})", parts.join(", "))
}

/// Checks associativity of both operations, distributivity, commutativity of
/// addition, the neutral laws and additive inverses over every element
/// triple. O(order^3); the caller decides when the cost is acceptable.
pub(super) fn check_axioms(ring: &FiniteRing, mode: ExecMode) -> Result<(), RingError> {
    let n = ring.order();
    let one = ring.one().index();
    let fail = |law, ids: &[usize]| RingError::AxiomViolation {
        ring: ring.descriptor().to_string(),
        law,
        witness: witness(ring, ids),
    };

    let unary = exec::find_map_first(mode, 0..n, |a| {
        if ring.add_idx(0, a) != a {
            return Some(fail("0 + a = a", &[a]));
        }
        if ring.mul_idx(one, a) != a || ring.mul_idx(a, one) != a {
            return Some(fail("1 * a = a * 1 = a", &[a]));
        }
        if ring.add_idx(a, ring.neg_idx(a)) != 0 {
            return Some(fail("a + (-a) = 0", &[a]));
        }
        None
    });
    if let Some(err) = unary {
        return Err(err);
    }

    let ternary = exec::find_map_first(mode, 0..n, |a| {
        for b in 0..n {
            if ring.add_idx(a, b) != ring.add_idx(b, a) {
                return Some(fail("a + b = b + a", &[a, b]));
            }
            for c in 0..n {
                let ab = ring.add_idx(a, b);
                if ring.add_idx(ab, c) != ring.add_idx(a, ring.add_idx(b, c)) {
                    return Some(fail("(a + b) + c = a + (b + c)", &[a, b, c]));
                }
                let m_ab = ring.mul_idx(a, b);
                if ring.mul_idx(m_ab, c) != ring.mul_idx(a, ring.mul_idx(b, c)) {
                    return Some(fail("(a * b) * c = a * (b * c)", &[a, b, c]));
                }
                let bc_sum = ring.add_idx(b, c);
                if ring.mul_idx(a, bc_sum)
                    != ring.add_idx(ring.mul_idx(a, b), ring.mul_idx(a, c))
                {
                    return Some(fail("a * (b + c) = a*b + a*c", &[a, b, c]));
                }
                if ring.mul_idx(ab, c) != ring.add_idx(ring.mul_idx(a, c), ring.mul_idx(b, c)) {
                    return Some(fail("(a + b) * c = a*c + b*c", &[a, b, c]));
                }
            }
        }
        None
    });
    match ternary {
        Some(err) => Err(err),
        None => Ok(()),
    }
}
