//! Scott-type predicates on `(b, i)` pairs: the classical inequality
//! `b <= 2i + 6` with its single exception `(9, 1)`, the set of pairs
//! realized by lattice polygons, and the family of open cones
//!
//! ```text
//! sigma_c = { (b, i) >= 0 : (c-1)/2 * b - (c-1) < i < c/2 * b - c(c+2) }
//! ```
//!
//! for `c >= 1`. Every inequality is evaluated in doubled-integer form, so
//! strictness is exact and no rationals appear.

use std::fmt;

use crate::lattice::BiPair;
use crate::Error;

/// Index of one open cone; at least 1.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ConeIndex(i64);

impl ConeIndex {
    pub fn new(c: i64) -> Result<Self, Error> {
        if c < 1 {
            return Err(Error::InvalidConeIndex(c));
        }
        Ok(Self(c))
    }

    pub fn get(self) -> i64 {
        self.0
    }
}

impl fmt::Display for ConeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Value of the doubled lower cone line at `b`: `2i = (c-1) b - 2(c-1)`.
fn lower_line_doubled(c: i64, b: i64) -> i64 {
    (c - 1) * b - 2 * (c - 1)
}

/// Value of the doubled upper cone line at `b`: `2i = c b - 2c(c+2)`.
fn upper_line_doubled(c: i64, b: i64) -> i64 {
    c * b - 2 * c * (c + 2)
}

/// Whether `p` lies in the open cone `sigma_c`. Pairs outside the closed
/// positive quadrant are never inside.
pub fn cone_contains(c: ConeIndex, p: BiPair) -> bool {
    let BiPair {
        boundary: b,
        interior: i,
    } = p;
    if b < 0 || i < 0 {
        return false;
    }
    let c = c.get();
    lower_line_doubled(c, b) < 2 * i && 2 * i < upper_line_doubled(c, b)
}

/// Whether `p` satisfies both closed inequalities of the cone closure.
pub fn cone_closure_contains(c: ConeIndex, p: BiPair) -> bool {
    let BiPair {
        boundary: b,
        interior: i,
    } = p;
    if b < 0 || i < 0 {
        return false;
    }
    let c = c.get();
    lower_line_doubled(c, b) <= 2 * i && 2 * i <= upper_line_doubled(c, b)
}

/// The corner point of the closure of `sigma_c`: `(2c^2 + 2c + 2, c^3 - c)`.
pub fn apex(c: ConeIndex) -> BiPair {
    let c = c.get();
    let p = BiPair::new(2 * c * c + 2 * c + 2, c * c * c - c);
    // the apex is exactly where the two doubled lines meet
    debug_assert_eq!(lower_line_doubled(c, p.boundary), 2 * p.interior);
    debug_assert_eq!(upper_line_doubled(c, p.boundary), 2 * p.interior);
    p
}

/// The unique `c >= 1` whose open cone contains `p`, if any.
///
/// Search bound lemma: every point of `sigma_c` satisfies
/// `2i < c b - 2c(c+2)` with `i >= 0`, hence `b > 2(c+2) > 2c^2/c`, and more
/// precisely `b` exceeds the apex coordinate `2c^2 + 2c + 2`, so
/// `c^2 < b/2` and any containing cone has `c <= floor(sqrt(b/2)) + 1`.
pub fn cone_classify(p: BiPair) -> Option<ConeIndex> {
    if p.boundary < 0 || p.interior < 0 {
        return None;
    }
    let bound = (p.boundary / 2).isqrt() + 1;
    (1..=bound)
        .map(|c| ConeIndex::new(c).unwrap())
        .find(|&c| cone_contains(c, p))
}

/// Scott's inequality: `p` is admissible when `i = 0`, or `p = (9, 1)`, or
/// `b <= 2i + 6`.
pub fn scott_holds(p: BiPair) -> bool {
    p.interior == 0 || p == BiPair::new(9, 1) || p.boundary <= 2 * p.interior + 6
}

/// Whether some lattice polygon realizes `p`:
/// `{(b, 0) : b >= 3} ∪ {(b, i) : 3 <= b <= 2i + 6, i >= 1} ∪ {(9, 1)}`.
pub fn polygon_set_contains(p: BiPair) -> bool {
    let BiPair {
        boundary: b,
        interior: i,
    } = p;
    (i == 0 && b >= 3) || (i >= 1 && 3 <= b && b <= 2 * i + 6) || (b == 9 && i == 1)
}

/// A point in the `(b, i)` plane with both coordinates doubled, so that
/// half-integer line endpoints stay exact.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct DoubledPoint {
    pub twice_b: i64,
    pub twice_i: i64,
}

/// The two facet segments of a cone closure, clipped to `b <= b_max`.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct ConeLines {
    /// Segment on the slope-(c-1)/2 line, from the apex outward.
    pub lower: (DoubledPoint, DoubledPoint),
    /// Segment on the slope-c/2 line, from the apex outward.
    pub upper: (DoubledPoint, DoubledPoint),
}

/// Facet segments of the closure of `sigma_c` from the apex to `b = b_max`,
/// or `None` when `b_max` lies before the apex. At `b_max` equal to the apex
/// coordinate both segments degenerate to the apex point.
pub fn cone_boundary_lines(c: ConeIndex, b_max: i64) -> Option<ConeLines> {
    let apex_pair = apex(c);
    if b_max < apex_pair.boundary {
        return None;
    }
    let c = c.get();
    let start = DoubledPoint {
        twice_b: 2 * apex_pair.boundary,
        twice_i: 2 * apex_pair.interior,
    };
    // the line helpers already yield 2i
    let lower_end = DoubledPoint {
        twice_b: 2 * b_max,
        twice_i: lower_line_doubled(c, b_max),
    };
    let upper_end = DoubledPoint {
        twice_b: 2 * b_max,
        twice_i: upper_line_doubled(c, b_max),
    };
    Some(ConeLines {
        lower: (start, lower_end),
        upper: (start, upper_end),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> ConeIndex {
        ConeIndex::new(n).unwrap()
    }

    #[test]
    fn cone_index_validation() {
        assert!(ConeIndex::new(0).is_err());
        assert!(ConeIndex::new(-2).is_err());
        assert_eq!(ConeIndex::new(3).unwrap().get(), 3);
    }

    #[test]
    fn cone_contains_examples() {
        assert!(cone_contains(c(1), BiPair::new(9, 1)));
        assert!(!cone_contains(c(2), BiPair::new(14, 6)));
        assert!(cone_contains(c(2), BiPair::new(20, 10)));
    }

    #[test]
    fn cone_classify_examples() {
        assert_eq!(cone_classify(BiPair::new(9, 1)), Some(c(1)));
        assert_eq!(cone_classify(BiPair::new(3, 0)), None);
        assert_eq!(cone_classify(BiPair::new(20, 10)), Some(c(2)));
        assert_eq!(cone_classify(BiPair::new(-1, 4)), None);
    }

    #[test]
    fn apex_examples() {
        assert_eq!(apex(c(1)), BiPair::new(6, 0));
        assert_eq!(apex(c(2)), BiPair::new(14, 6));
        assert_eq!(apex(c(3)), BiPair::new(26, 24));
    }

    #[test]
    fn scott_holds_examples() {
        assert!(scott_holds(BiPair::new(9, 1)));
        assert!(scott_holds(BiPair::new(12, 3)));
        assert!(!scott_holds(BiPair::new(10, 1)));
    }

    #[test]
    fn polygon_set_examples() {
        assert!(polygon_set_contains(BiPair::new(3, 0)));
        assert!(polygon_set_contains(BiPair::new(9, 1)));
        assert!(polygon_set_contains(BiPair::new(20, 10)));
        assert!(!polygon_set_contains(BiPair::new(2, 0)));
        assert!(!polygon_set_contains(BiPair::new(10, 1)));
    }

    #[test]
    fn boundary_lines_examples() {
        // c = 1: lower facet i = 0 out to (10, 0), upper facet out to (10, 2)
        let lines = cone_boundary_lines(c(1), 10).unwrap();
        assert_eq!(
            lines.lower.0,
            DoubledPoint {
                twice_b: 12,
                twice_i: 0
            }
        );
        assert_eq!(
            lines.lower.1,
            DoubledPoint {
                twice_b: 20,
                twice_i: 0
            }
        );
        assert_eq!(
            lines.upper.1,
            DoubledPoint {
                twice_b: 20,
                twice_i: 4
            }
        );

        let degenerate = cone_boundary_lines(c(2), 14).unwrap();
        assert_eq!(degenerate.lower.0, degenerate.lower.1);
        assert_eq!(degenerate.upper.0, degenerate.upper.1);
        assert_eq!(
            degenerate.lower.0,
            DoubledPoint {
                twice_b: 28,
                twice_i: 12
            }
        );

        // c = 2: lower endpoint (30, 14), upper endpoint (30, 22)
        let wide = cone_boundary_lines(c(2), 30).unwrap();
        assert_eq!(
            wide.lower.1,
            DoubledPoint {
                twice_b: 60,
                twice_i: 28
            }
        );
        assert_eq!(
            wide.upper.1,
            DoubledPoint {
                twice_b: 60,
                twice_i: 44
            }
        );

        assert_eq!(cone_boundary_lines(c(2), 13), None);
    }

    /// Closures of distinct cones share no integer point in a finite window.
    #[test]
    fn closures_pairwise_disjoint() {
        for b in 0..=400 {
            for i in 0..=2600 {
                let p = BiPair::new(b, i);
                let hits = (1..=12).filter(|&k| cone_closure_contains(c(k), p)).count();
                assert!(hits <= 1, "point ({b}, {i}) in {hits} closures");
            }
        }
    }

    /// The sqrt search bound agrees with brute-force iteration up to c = 200.
    #[test]
    fn classify_agrees_with_linear_scan() {
        for b in 0..=400 {
            // any cone with c <= 200 containing a b <= 400 point also has
            // 2i < c*b, so i < 40_000; in fact far less, see below
            let i_cap = (1..=200)
                .map(|k| upper_line_doubled(k, b))
                .max()
                .unwrap()
                .max(0)
                / 2;
            for i in 0..=i_cap {
                let p = BiPair::new(b, i);
                let brute = (1..=200).find(|&k| cone_contains(c(k), p));
                assert_eq!(
                    cone_classify(p).map(|k| k.get()),
                    brute,
                    "mismatch at ({b}, {i})"
                );
            }
        }
    }

    /// Scott's inequality restated: it fails exactly on the points of the
    /// first open cone other than (9, 1).
    #[test]
    fn scott_matches_first_cone() {
        for b in 0..=400 {
            for i in 1..=400 {
                let p = BiPair::new(b, i);
                let fails = !scott_holds(p);
                let in_first = cone_contains(c(1), p) && p != BiPair::new(9, 1);
                assert_eq!(fails, in_first, "at ({b}, {i})");
            }
        }
    }

    #[test]
    fn apex_lies_on_both_closed_lines() {
        for k in 1..=20 {
            let p = apex(c(k));
            assert_eq!(lower_line_doubled(k, p.boundary), 2 * p.interior);
            assert_eq!(upper_line_doubled(k, p.boundary), 2 * p.interior);
            assert!(cone_closure_contains(c(k), p));
            assert!(!cone_contains(c(k), p));
        }
    }
}
