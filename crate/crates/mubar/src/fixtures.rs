//! Stock diagrams used throughout the tests and docs.

use crate::diagram::{parse_braid, LinkDiagram};

/// The crossingless unlink on `n` components.
pub fn unlink(n: usize) -> LinkDiagram {
    parse_braid("", n).expect("valid braid")
}

/// Positive Hopf link, closure of two positive crossings; lk = 1.
pub fn hopf() -> LinkDiagram {
    hopf_power(1)
}

/// Closure of `2n` positive crossings on two strands; lk = n.
pub fn hopf_power(n: usize) -> LinkDiagram {
    let word = vec!["1"; 2 * n].join(" ");
    parse_braid(&word, 2).expect("valid braid")
}

/// Right-handed trefoil, closure of three positive crossings.
pub fn trefoil() -> LinkDiagram {
    parse_braid("1 1 1", 2).expect("valid braid")
}

/// Borromean rings as a three-strand braid closure. All pairwise linking
/// numbers vanish; the triple invariant is +1.
pub fn borromean() -> LinkDiagram {
    parse_braid("1 -2 1 -2 1 -2", 3).expect("valid braid")
}

/// Whitehead link: five crossings, linking number zero, first
/// non-vanishing invariant at length four.
pub fn whitehead() -> LinkDiagram {
    parse_braid("1 1 -2 1 -2", 3).expect("valid braid")
}
