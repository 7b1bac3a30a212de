//! Integer primitives: gcd conventions, the counting formulas on HNF
//! triples, Pick/Ehrhart formulas, the brute-force lattice-scan oracle, and
//! normalization of arbitrary triangles to Hermite normal form.

use std::fmt;

use crate::Error;

/// A point of the integer lattice Z^2.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Twice the signed area of the triangle `p q r`: the cross product of
/// `q - p` and `r - p`. Positive for counter-clockwise order, zero iff the
/// points are collinear.
pub fn orient(p: LatticePoint, q: LatticePoint, r: LatticePoint) -> i64 {
    (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
}

/// A non-degenerate triangle with lattice-point vertices.
///
/// Collinear vertices are rejected at construction rather than silently
/// normalized away.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct LatticeTriangle {
    v1: LatticePoint,
    v2: LatticePoint,
    v3: LatticePoint,
}

impl LatticeTriangle {
    pub fn new(v1: LatticePoint, v2: LatticePoint, v3: LatticePoint) -> Result<Self, Error> {
        if orient(v1, v2, v3) == 0 {
            return Err(Error::DegenerateTriangle);
        }
        Ok(Self { v1, v2, v3 })
    }

    pub fn from_coords(coords: [(i64, i64); 3]) -> Result<Self, Error> {
        let [a, b, c] = coords;
        Self::new(
            LatticePoint::new(a.0, a.1),
            LatticePoint::new(b.0, b.1),
            LatticePoint::new(c.0, c.1),
        )
    }

    pub fn vertices(&self) -> [LatticePoint; 3] {
        [self.v1, self.v2, self.v3]
    }

    /// The normalized volume: twice the Euclidean area, always positive.
    pub fn doubled_area(&self) -> i64 {
        orient(self.v1, self.v2, self.v3).abs()
    }

    /// The dilate `k * self` for `k >= 1`.
    pub fn dilated(&self, k: i64) -> Result<Self, Error> {
        if k < 1 {
            return Err(Error::WindowTooSmall { min: 1, got: k });
        }
        let scale = |p: LatticePoint| LatticePoint::new(k * p.x, k * p.y);
        Self::new(scale(self.v1), scale(self.v2), scale(self.v3))
    }
}

impl fmt::Display for LatticeTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.v1, self.v2, self.v3)
    }
}

/// The triple `(A, B, C)` encoding the triangle `(0,0), (A,0), (B,C)`.
///
/// `base` is A (the horizontal edge length), `height` is C, and `shear` is B
/// (the x-offset of the top vertex). The canonical criterion range is
/// `0 <= B < C`; witness constructions are allowed to step outside it via
/// [`HnfTriangle::relaxed`] so that emitted triples match their vertex lists
/// verbatim instead of being re-normalized.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct HnfTriangle {
    base: i64,
    shear: i64,
    height: i64,
}

impl HnfTriangle {
    /// A triple in the canonical range: `A >= 1`, `C >= 1`, `0 <= B < C`.
    pub fn new(base: i64, shear: i64, height: i64) -> Result<Self, Error> {
        if base < 1 || height < 1 || shear < 0 || shear >= height {
            return Err(Error::InvalidHnfTriple {
                base,
                shear,
                height,
                canonical: true,
            });
        }
        Ok(Self {
            base,
            shear,
            height,
        })
    }

    /// A triple with the `B < C` requirement dropped (`B >= 0` still holds).
    pub fn relaxed(base: i64, shear: i64, height: i64) -> Result<Self, Error> {
        if base < 1 || height < 1 || shear < 0 {
            return Err(Error::InvalidHnfTriple {
                base,
                shear,
                height,
                canonical: false,
            });
        }
        Ok(Self {
            base,
            shear,
            height,
        })
    }

    pub fn base(&self) -> i64 {
        self.base
    }

    pub fn shear(&self) -> i64 {
        self.shear
    }

    pub fn height(&self) -> i64 {
        self.height
    }

    /// Whether the triple lies in the canonical range `0 <= B < C`.
    pub fn is_canonical(&self) -> bool {
        self.shear < self.height
    }

    /// `A * C`, twice the triangle area.
    pub fn normalized_volume(&self) -> i64 {
        self.base * self.height
    }

    pub fn vertices(&self) -> [LatticePoint; 3] {
        [
            LatticePoint::new(0, 0),
            LatticePoint::new(self.base, 0),
            LatticePoint::new(self.shear, self.height),
        ]
    }

    pub fn triangle(&self) -> LatticeTriangle {
        let [a, b, c] = self.vertices();
        // base >= 1 and height >= 1 make the vertices non-collinear
        LatticeTriangle::new(a, b, c).expect("HNF triple is non-degenerate")
    }
}

impl fmt::Display for HnfTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.base, self.shear, self.height)
    }
}

/// A boundary/interior lattice-point count pair.
///
/// Plain data: predicates accept arbitrary integer pairs and classify
/// out-of-range ones as unrealizable, so no invariant is enforced here.
/// Ordering is lexicographic in `(boundary, interior)`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BiPair {
    pub boundary: i64,
    pub interior: i64,
}

impl BiPair {
    pub const fn new(boundary: i64, interior: i64) -> Self {
        Self { boundary, interior }
    }

    /// `n = 2i + b - 2`: twice the Pick area, the normalized volume.
    pub fn normalized_volume(&self) -> i64 {
        pick_area_twice(*self)
    }

    /// Whether the pair is shaped like a polygon pair at all
    /// (`b >= 3`, `i >= 0`).
    pub fn is_polygon_shaped(&self) -> bool {
        self.boundary >= 3 && self.interior >= 0
    }
}

impl fmt::Display for BiPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.boundary, self.interior)
    }
}

/// Greatest common divisor on absolute values; `gcd(0, 0) = 0`.
pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `gcd(|x| mod m, m)` with the convention `gcd(0, m) = m`.
///
/// This is the number of lattice segments a height-`m` edge with horizontal
/// offset `x` is cut into, which is the sign/zero convention the boundary
/// formula needs. The result always divides `m` and is at least 1.
///
/// Panics if `m < 1`.
pub fn gcd_with_modulus(x: i64, m: i64) -> i64 {
    assert!(m >= 1, "modulus must be positive, got {m}");
    gcd(x.rem_euclid(m), m)
}

/// Boundary lattice points of the triangle `(0,0), (A,0), (B,C)`:
/// `A + gcd(B, C) + gcd(B - A, C)`.
pub fn boundary_count(t: &HnfTriangle) -> i64 {
    t.base + gcd_with_modulus(t.shear, t.height) + gcd_with_modulus(t.shear - t.base, t.height)
}

/// Interior lattice points of the triangle `(0,0), (A,0), (B,C)`:
/// `(A*C - b)/2 + 1` by Pick's theorem.
pub fn interior_count(t: &HnfTriangle) -> i64 {
    let b = boundary_count(t);
    let n = t.normalized_volume();
    // Pick's theorem forces n - b even for a genuine triangle; an odd value
    // here means the boundary formula is broken.
    assert!(
        (n - b) % 2 == 0,
        "parity violation in interior_count for {t}"
    );
    (n - b) / 2 + 1
}

/// The pair `(b, i)` of the triangle `(0,0), (A,0), (B,C)` via the gcd
/// formulas.
pub fn hnf_bi(t: &HnfTriangle) -> BiPair {
    BiPair::new(boundary_count(t), interior_count(t))
}

/// Twice the Pick area: `2a = 2i + b - 2`.
pub fn pick_area_twice(p: BiPair) -> i64 {
    2 * p.interior + p.boundary - 2
}

/// The Ehrhart polynomial `a k^2 + (b/2) k + 1` of a lattice polygon,
/// with both non-constant coefficients carried doubled.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct EhrhartPoly {
    twice_area: i64,
    boundary: i64,
}

impl EhrhartPoly {
    /// Build from raw doubled coefficients. They must agree mod 2, otherwise
    /// the polynomial is not integer-valued and no lattice polygon realizes
    /// it.
    pub fn new(twice_area: i64, boundary: i64) -> Result<Self, Error> {
        if (twice_area - boundary) % 2 != 0 {
            return Err(Error::ParityViolation {
                twice_area,
                boundary,
            });
        }
        Ok(Self {
            twice_area,
            boundary,
        })
    }

    /// The polynomial of the polygon with counts `p`; `2a = 2i + b - 2` has
    /// the parity of `b`, so this cannot fail.
    pub fn from_pair(p: BiPair) -> Self {
        Self {
            twice_area: pick_area_twice(p),
            boundary: p.boundary,
        }
    }

    /// Twice the leading coefficient `a`.
    pub fn twice_area(&self) -> i64 {
        self.twice_area
    }

    /// Twice the linear coefficient, i.e. the boundary count `b`.
    pub fn boundary(&self) -> i64 {
        self.boundary
    }

    /// Evaluate at a non-negative integer dilation factor, exactly.
    pub fn eval(&self, k: i64) -> i64 {
        assert!(k >= 0, "dilation factor must be non-negative, got {k}");
        let doubled = self.twice_area * k * k + self.boundary * k + 2;
        debug_assert!(doubled % 2 == 0);
        doubled / 2
    }
}

/// `|kP ∩ Z^2|` for the polygon with counts `p`, computed from the Ehrhart
/// polynomial in exact integers.
pub fn ehrhart_eval(p: BiPair, k: i64) -> i64 {
    EhrhartPoly::from_pair(p).eval(k)
}

/// Lattice points of the closed dilate `k * t`, counted by a direct scan.
/// `k = 0` dilates to a single point.
pub fn dilated_point_count(t: &LatticeTriangle, k: i64) -> i64 {
    assert!(k >= 0, "dilation factor must be non-negative, got {k}");
    if k == 0 {
        return 1;
    }
    let p = brute_force_bi(&t.dilated(k).expect("k >= 1"));
    p.boundary + p.interior
}

fn on_segment(a: LatticePoint, b: LatticePoint, p: LatticePoint) -> bool {
    orient(a, b, p) == 0
        && a.x.min(b.x) <= p.x
        && p.x <= a.x.max(b.x)
        && a.y.min(b.y) <= p.y
        && p.y <= a.y.max(b.y)
}

/// Count `(b, i)` of a triangle by scanning its integer bounding box.
///
/// Independent of the gcd formulas on purpose: this is the oracle every
/// counting path is checked against. A lattice point is boundary if it lies
/// on one of the closed edges, interior if it is strictly on the same side
/// of all three edges.
pub fn brute_force_bi(t: &LatticeTriangle) -> BiPair {
    let [v1, v2, v3] = t.vertices();
    let xs = [v1.x, v2.x, v3.x];
    let ys = [v1.y, v2.y, v3.y];
    let (x_lo, x_hi) = (*xs.iter().min().unwrap(), *xs.iter().max().unwrap());
    let (y_lo, y_hi) = (*ys.iter().min().unwrap(), *ys.iter().max().unwrap());

    let mut boundary = 0;
    let mut interior = 0;
    for x in x_lo..=x_hi {
        for y in y_lo..=y_hi {
            let p = LatticePoint::new(x, y);
            if on_segment(v1, v2, p) || on_segment(v2, v3, p) || on_segment(v3, v1, p) {
                boundary += 1;
            } else {
                let s1 = orient(v1, v2, p).signum();
                let s2 = orient(v2, v3, p).signum();
                let s3 = orient(v3, v1, p).signum();
                if s1 == s2 && s2 == s3 && s1 != 0 {
                    interior += 1;
                }
            }
        }
    }
    BiPair::new(boundary, interior)
}

/// `gcd(a, b) = g >= 0` together with coefficients `x, y` such that
/// `a*x + b*y = g`.
fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_x, mut x) = (1i64, 0i64);
    let (mut old_y, mut y) = (0i64, 1i64);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_x, x) = (x, old_x - q * x);
        (old_y, y) = (y, old_y - q * y);
    }
    if old_r < 0 {
        (-old_r, -old_x, -old_y)
    } else {
        (old_r, old_x, old_y)
    }
}

/// The HNF triple of one vertex ordering `(p0, p1, p2)`: translate `p0` to
/// the origin and left-multiply the edge matrix by a unimodular map so that
/// `p1 - p0` lands on `(A, 0)` and `p2 - p0` on `(B, C)` with `A, C >= 1`
/// and `0 <= B < C`. This representative is the unique one in the
/// GL_2(Z)-orbit of the edge matrix.
fn hnf_of_ordering(p0: LatticePoint, p1: LatticePoint, p2: LatticePoint) -> (i64, i64, i64) {
    let u = LatticePoint::new(p1.x - p0.x, p1.y - p0.y);
    let w = LatticePoint::new(p2.x - p0.x, p2.y - p0.y);
    let (g, r, s) = extended_gcd(u.x, u.y);
    debug_assert!(g >= 1);
    let base = g;
    let mut shear = r * w.x + s * w.y;
    let cross = u.x * w.y - u.y * w.x;
    debug_assert!(cross % g == 0);
    let mut height = cross / g;
    if height < 0 {
        // flipping the second coordinate is still lattice-preserving
        height = -height;
    }
    shear = shear.rem_euclid(height);
    (base, shear, height)
}

/// Canonical HNF triple of a triangle: over all six vertex orderings, take
/// the representative with lexicographically smallest `(C, A, B)`.
///
/// The canonical triple is invariant under lattice-preserving affine maps
/// and normalizing the triangle `(0,0), (A,0), (B,C)` of the result returns
/// the same triple.
pub fn hnf_normalize(t: &LatticeTriangle) -> HnfTriangle {
    let [a, b, c] = t.vertices();
    let orderings = [
        (a, b, c),
        (a, c, b),
        (b, a, c),
        (b, c, a),
        (c, a, b),
        (c, b, a),
    ];
    let (base, shear, height) = orderings
        .iter()
        .map(|&(p0, p1, p2)| {
            let (a, b, c) = hnf_of_ordering(p0, p1, p2);
            (c, a, b) // sort key (C, A, B)
        })
        .min()
        .map(|(c, a, b)| (a, b, c))
        .unwrap();
    HnfTriangle::new(base, shear, height).expect("normalization yields a canonical triple")
}
