//! Small graded rings used throughout the examples and tests, all over `Q`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::graded_ring::{CoeffField, GradedRing};
use crate::zlattice::FgAbelianGroup;

/// `k[x0,…,xn]`, every variable of degree 1 in `Z`.
pub fn projective_space(n: usize) -> GradedRing {
    let group = FgAbelianGroup::free(1);
    let names: Vec<String> = (0..=n).map(|i| format!("x{i}")).collect();
    let degs = (0..=n).map(|_| group.element_from_i64(&[1]).unwrap()).collect();
    GradedRing::new(group, CoeffField::Rationals, names, degs).unwrap()
}

/// `k[x, y, z]` with degrees 1, 1, 2.
pub fn weighted_112() -> GradedRing {
    GradedRing::with_degrees(
        FgAbelianGroup::free(1),
        CoeffField::Rationals,
        &["x", "y", "z"],
        &[&[1], &[1], &[2]],
    )
    .unwrap()
}

/// `k[x0, x1, y0, y1]` graded by `Z²`: `deg xᵢ = (1,0)`, `deg yᵢ = (0,1)`.
pub fn product_p1_p1() -> GradedRing {
    GradedRing::with_degrees(
        FgAbelianGroup::free(2),
        CoeffField::Rationals,
        &["x0", "x1", "y0", "y1"],
        &[&[1, 0], &[1, 0], &[0, 1], &[0, 1]],
    )
    .unwrap()
}

/// The monoid algebra `k[N] = k[X]`, graded by `Z` with `deg X = 1`.
pub fn monoid_line() -> GradedRing {
    GradedRing::with_degrees(FgAbelianGroup::free(1), CoeffField::Rationals, &["X"], &[&[1]]).unwrap()
}

/// `k[x]` graded by `Z/2` with `deg x` the nontrivial class.
pub fn z2_line() -> GradedRing {
    GradedRing::with_degrees(
        FgAbelianGroup::from_invariants(0, &[BigInt::from(2)]),
        CoeffField::Rationals,
        &["x"],
        &[&[1]],
    )
    .unwrap()
}
