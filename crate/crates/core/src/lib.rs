//! Exact lattice-point geometry of plane lattice triangles.
//!
//! The crate computes the Ehrhart data of a lattice triangle -- the boundary
//! count `b`, the interior count `i`, the area via Pick's theorem, and the
//! Ehrhart polynomial `a k^2 + (b/2) k + 1` -- and answers the converse
//! question: which pairs `(b, i)` are realized by some lattice triangle at
//! all. Realizability reduces to a gcd criterion on Hermite-normal-form
//! triples `(A, B, C)` encoding the triangle `(0,0), (A,0), (B,C)`, which
//! makes exhaustive search over a window exact and fast.
//!
//! On top of the counting core sit the Scott-type cone predicates: the open
//! cones between the lines of slope `(c-1)/2` and `c/2` in the `(b, i)`
//! plane contain no triangle pair for `c >= 2`, and [`realize`] can verify
//! that emptiness over finite windows as well as construct the witness
//! families that populate the cone boundaries.
//!
//! Everything is exact 64-bit integer arithmetic. Half-integer quantities
//! (areas, Ehrhart coefficients, cone line endpoints) are carried doubled.

pub mod cones;
pub mod lattice;
pub mod plot;
pub mod realize;

pub use cones::{apex, cone_classify, cone_contains, ConeIndex};
pub use lattice::{
    boundary_count, brute_force_bi, hnf_normalize, interior_count, BiPair, EhrhartPoly,
    HnfTriangle, LatticePoint, LatticeTriangle,
};
pub use realize::{enumerate_pairs, membership_witness, PairSet, Witness};

/// Errors raised by constructors and precondition checks.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("degenerate triangle: the three vertices are collinear")]
    DegenerateTriangle,
    #[error("invalid HNF triple ({base}, {shear}, {height}): need base >= 1, height >= 1, 0 <= shear{}", if *canonical { " < height" } else { "" })]
    InvalidHnfTriple {
        base: i64,
        shear: i64,
        height: i64,
        canonical: bool,
    },
    #[error("pair ({boundary}, {interior}) is not a valid polygon pair: need boundary >= 3 and interior >= 0")]
    InvalidPair { boundary: i64, interior: i64 },
    #[error("cone index must be at least 1, got {0}")]
    InvalidConeIndex(i64),
    #[error("window bound must be at least {min}, got {got}")]
    WindowTooSmall { min: i64, got: i64 },
    #[error("empty cone range {lo}..{hi}")]
    EmptyConeRange { lo: i64, hi: i64 },
    #[error("{0} is not an odd prime")]
    NotOddPrime(i64),
    #[error("pair ({boundary}, {interior}) does not lie on the lower facet of cone {cone} at or beyond its apex")]
    NotOnLowerFacet {
        boundary: i64,
        interior: i64,
        cone: i64,
    },
    #[error("upper-face parameter k = {k} must be at least 2c + 1 = {min} for cone {cone}")]
    UpperFaceParamTooSmall { k: i64, min: i64, cone: i64 },
    #[error("coefficient parity violation: twice_area = {twice_area} and boundary = {boundary} differ mod 2, so the polynomial is not integer-valued")]
    ParityViolation { twice_area: i64, boundary: i64 },
    #[error("malformed pairs CSV at line {line}: {reason}")]
    CsvParse { line: usize, reason: String },
}
