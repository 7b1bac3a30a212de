//! Realizability of `(b, i)` pairs by lattice triangles.
//!
//! A pair is realized iff some triple `(A, B, C)` with `A >= 1`,
//! `0 <= B < C` satisfies `b = A + gcd(B, C) + gcd(B - A, C)` and
//! `i = (A C - b)/2 + 1`. Since `A C = 2i + b - 2` is forced by Pick's
//! theorem, deciding one pair is a finite search over the divisors of its
//! normalized volume, and enumerating a window is a finite search over all
//! volumes up to the bound.

use std::collections::BTreeSet;
use std::fmt;
use std::thread;

use crate::cones::{apex, cone_contains, ConeIndex};
use crate::lattice::{
    brute_force_bi, gcd, gcd_with_modulus, hnf_bi, pick_area_twice, BiPair, HnfTriangle,
    LatticePoint,
};
use crate::Error;

/// A realizable pair together with a triple realizing it.
///
/// The triple is kept exactly as constructed (witness families step outside
/// the canonical `B < C` range; see [`HnfTriangle::is_canonical`]), so the
/// vertex list can be reported verbatim.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct Witness {
    pair: BiPair,
    triple: HnfTriangle,
}

impl Witness {
    /// Wrap a triple, deriving its pair from the counting formulas.
    pub fn from_triple(triple: HnfTriangle) -> Self {
        Self {
            pair: hnf_bi(&triple),
            triple,
        }
    }

    pub fn pair(&self) -> BiPair {
        self.pair
    }

    pub fn triple(&self) -> HnfTriangle {
        self.triple
    }

    pub fn vertices(&self) -> [LatticePoint; 3] {
        self.triple.vertices()
    }

    /// Re-count by scanning the triangle and compare with the stored pair.
    pub fn verified_by_scan(&self) -> bool {
        brute_force_bi(&self.triple.triangle()) == self.pair
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} via {}", self.pair, self.triple)
    }
}

/// A deduplicated, lexicographically sorted set of pairs, together with the
/// window bound `n_max` on the normalized volume `2i + b - 2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairSet {
    pairs: Vec<BiPair>,
    n_max: i64,
}

impl PairSet {
    fn from_set(set: BTreeSet<BiPair>, n_max: i64) -> Self {
        Self {
            pairs: set.into_iter().collect(),
            n_max,
        }
    }

    pub fn pairs(&self) -> &[BiPair] {
        &self.pairs
    }

    pub fn n_max(&self) -> i64 {
        self.n_max
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, p: BiPair) -> bool {
        self.pairs.binary_search(&p).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = BiPair> + '_ {
        self.pairs.iter().copied()
    }
}

fn require_polygon_shaped(p: BiPair) -> Result<(), Error> {
    if !p.is_polygon_shaped() || pick_area_twice(p) < 1 {
        return Err(Error::InvalidPair {
            boundary: p.boundary,
            interior: p.interior,
        });
    }
    Ok(())
}

/// Search for a canonical triple realizing `p`, ascending in `A` and then in
/// `B`; the first hit is returned, `None` when the pair is unrealizable.
///
/// `A` ranges over the divisors of `n = 2i + b - 2` with `C = n / A`, and a
/// divisor pair can only work when `A + 2 <= b <= A + 2C` (each gcd term is
/// between 1 and `C`), which prunes most of them without touching `B`.
pub fn membership_witness(p: BiPair) -> Result<Option<Witness>, Error> {
    require_polygon_shaped(p)?;
    let n = pick_area_twice(p);
    let b = p.boundary;
    for base in 1..=n {
        if base + 2 > b {
            break;
        }
        if n % base != 0 {
            continue;
        }
        let height = n / base;
        if base + 2 * height < b {
            continue;
        }
        for shear in 0..height {
            let found =
                base + gcd_with_modulus(shear, height) + gcd_with_modulus(shear - base, height);
            if found == b {
                let triple = HnfTriangle::new(base, shear, height)
                    .expect("search stays in the canonical range");
                let witness = Witness::from_triple(triple);
                debug_assert_eq!(witness.pair(), p);
                return Ok(Some(witness));
            }
        }
    }
    Ok(None)
}

/// The witness for the apex `(2c^2 + 2c + 2, c^3 - c)` of cone `c`: the
/// triangle `(0,0), (2c^2 + 2c, 0), (1, c)`.
pub fn apex_witness(c: ConeIndex) -> Witness {
    let k = c.get();
    let triple = HnfTriangle::relaxed(2 * k * k + 2 * k, 1, k).expect("valid relaxed triple");
    let witness = Witness::from_triple(triple);
    debug_assert_eq!(witness.pair(), apex(c));
    witness
}

/// The witness for an integer point on the lower facet of the closure of
/// cone `c`: the triangle `(0,0), ((2i + b - 2)/c, 0), (B, c)` where `B` is
/// the smallest non-negative value with `gcd(B, c) = gcd(B - A, c) = 1`.
///
/// A residue avoiding `0` and `A` exists modulo every prime divisor of `c`
/// (for the prime 2, `A` is forced even on the facet), so by the Chinese
/// remainder theorem a valid `B` exists below `rad(c) <= c`; the search is
/// still capped at `2c + 2` and a miss is a bug, not a soft failure.
pub fn lower_facet_witness(p: BiPair, c: ConeIndex) -> Result<Witness, Error> {
    let k = c.get();
    let on_facet = 2 * p.interior == (k - 1) * (p.boundary - 2);
    if !(on_facet && p.boundary >= apex(c).boundary) {
        return Err(Error::NotOnLowerFacet {
            boundary: p.boundary,
            interior: p.interior,
            cone: k,
        });
    }
    let volume = pick_area_twice(p);
    debug_assert_eq!(volume % k, 0, "facet points have c | 2i + b - 2");
    let base = volume / k;
    debug_assert_eq!(base, p.boundary - 2);
    let shear = (0..2 * k + 2)
        .find(|&s| gcd(s, k) == 1 && gcd(s - base, k) == 1)
        .unwrap_or_else(|| panic!("no valid shear below 2c + 2 for facet point {p}, cone {k}"));
    let triple = HnfTriangle::relaxed(base, shear, k).expect("valid relaxed triple");
    let witness = Witness::from_triple(triple);
    debug_assert_eq!(witness.pair(), p);
    Ok(witness)
}

/// The witness for the upper-face point `(k(c+1), k c (c+1)/2 - c(c+2))` of
/// cone `c`, defined for `k >= 2c + 1`: the triangle
/// `(0,0), ((k-2)(c+1), 0), (0, c+1)`.
pub fn upper_face_witness(c: ConeIndex, k: i64) -> Result<Witness, Error> {
    let cc = c.get();
    if k < 2 * cc + 1 {
        return Err(Error::UpperFaceParamTooSmall {
            k,
            min: 2 * cc + 1,
            cone: cc,
        });
    }
    let pair = BiPair::new(k * (cc + 1), k * cc * (cc + 1) / 2 - cc * (cc + 2));
    let triple = HnfTriangle::new((k - 2) * (cc + 1), 0, cc + 1).expect("valid canonical triple");
    let witness = Witness::from_triple(triple);
    debug_assert_eq!(witness.pair(), pair);
    // the pair sits exactly on the upper cone line
    debug_assert_eq!(2 * pair.interior, cc * pair.boundary - 2 * cc * (cc + 2));
    Ok(witness)
}

fn collect_shard(n_max: i64, first: i64, step: i64, set: &mut BTreeSet<BiPair>) {
    let mut n = first;
    while n <= n_max {
        for base in 1..=n {
            if n % base != 0 {
                continue;
            }
            let height = n / base;
            for shear in 0..height {
                let b =
                    base + gcd_with_modulus(shear, height) + gcd_with_modulus(shear - base, height);
                debug_assert_eq!((n - b).rem_euclid(2), 0);
                let i = (n - b) / 2 + 1;
                if i >= 0 {
                    set.insert(BiPair::new(b, i));
                }
            }
        }
        n += step;
    }
}

/// All pairs realized by a triangle of normalized volume at most `n_max`.
pub fn enumerate_pairs(n_max: i64) -> Result<PairSet, Error> {
    if n_max < 1 {
        return Err(Error::WindowTooSmall { min: 1, got: n_max });
    }
    let mut set = BTreeSet::new();
    collect_shard(n_max, 1, 1, &mut set);
    Ok(PairSet::from_set(set, n_max))
}

/// Same result as [`enumerate_pairs`], computed on `shards` worker threads
/// that split the volume range round-robin. The merged set is identical to
/// the single-threaded one.
pub fn enumerate_pairs_sharded(n_max: i64, shards: usize) -> Result<PairSet, Error> {
    if shards == 0 {
        return Err(Error::WindowTooSmall { min: 1, got: 0 });
    }
    if shards == 1 {
        return enumerate_pairs(n_max);
    }
    if n_max < 1 {
        return Err(Error::WindowTooSmall { min: 1, got: n_max });
    }
    let step = shards as i64;
    let mut merged = BTreeSet::new();
    thread::scope(|scope| {
        let handles: Vec<_> = (0..step)
            .map(|offset| {
                scope.spawn(move || {
                    let mut set = BTreeSet::new();
                    collect_shard(n_max, offset + 1, step, &mut set);
                    set
                })
            })
            .collect();
        for handle in handles {
            merged.extend(handle.join().expect("shard worker panicked"));
        }
    });
    Ok(PairSet::from_set(merged, n_max))
}

/// Outcome of scanning one open cone for realizable integer points.
#[derive(Clone, Debug)]
pub struct ConeReport {
    pub cone: i64,
    /// Integer points of the open cone with `b <= b_max`.
    pub candidates: u64,
    /// Points among them that some triangle realizes; empty for `c >= 2`.
    pub violations: Vec<Witness>,
}

fn scan_cone_rows(c: i64, b_max: i64, first_row: i64, step: i64) -> (u64, Vec<Witness>) {
    let mut candidates = 0;
    let mut violations = Vec::new();
    let apex_b = 2 * c * c + 2 * c + 2;
    let mut b = apex_b + 1 + first_row;
    while b <= b_max {
        let lower = (c - 1) * b - 2 * (c - 1);
        let upper = c * b - 2 * c * (c + 2);
        let i_min = (lower.div_euclid(2) + 1).max(0);
        let i_max = (upper - 1).div_euclid(2);
        for i in i_min..=i_max {
            let p = BiPair::new(b, i);
            debug_assert!(cone_contains(ConeIndex::new(c).unwrap(), p));
            candidates += 1;
            if let Some(witness) = membership_witness(p).expect("cone points have b >= 3") {
                violations.push(witness);
            }
        }
        b += step;
    }
    (candidates, violations)
}

/// Check that no realizable pair lies in the open cones `c_min..=c_max`
/// within the window `b <= b_max`, by running the membership search on every
/// integer point of each cone. Returns one report per cone; `violations` is
/// expected empty for every `c >= 2`, while `c = 1` flags exactly `(9, 1)`.
pub fn verify_cone_emptiness(b_max: i64, c_min: i64, c_max: i64) -> Result<Vec<ConeReport>, Error> {
    verify_cone_emptiness_sharded(b_max, c_min, c_max, 1)
}

/// Sharded variant of [`verify_cone_emptiness`]: the rows of each cone are
/// split round-robin over `shards` worker threads and merged back in row
/// order, so the result matches the single-threaded scan.
pub fn verify_cone_emptiness_sharded(
    b_max: i64,
    c_min: i64,
    c_max: i64,
    shards: usize,
) -> Result<Vec<ConeReport>, Error> {
    if b_max < 3 {
        return Err(Error::WindowTooSmall { min: 3, got: b_max });
    }
    if c_min < 1 {
        return Err(Error::InvalidConeIndex(c_min));
    }
    if c_min > c_max {
        return Err(Error::EmptyConeRange {
            lo: c_min,
            hi: c_max,
        });
    }
    if shards == 0 {
        return Err(Error::WindowTooSmall { min: 1, got: 0 });
    }
    let mut reports = Vec::new();
    for c in c_min..=c_max {
        let step = shards as i64;
        let mut candidates = 0;
        let mut violations = Vec::new();
        if shards == 1 {
            (candidates, violations) = scan_cone_rows(c, b_max, 0, 1);
        } else {
            thread::scope(|scope| {
                let handles: Vec<_> = (0..step)
                    .map(|row| scope.spawn(move || scan_cone_rows(c, b_max, row, step)))
                    .collect();
                for handle in handles {
                    let (n, mut v) = handle.join().expect("cone worker panicked");
                    candidates += n;
                    violations.append(&mut v);
                }
            });
            violations.sort_by_key(|w| w.pair());
        }
        reports.push(ConeReport {
            cone: c,
            candidates,
            violations,
        });
    }
    Ok(reports)
}

fn is_prime_by_trial_division(n: i64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The two pairs every odd prime line carries: `(3, (p-1)/2)` and
/// `(p+2, 0)`.
pub fn prime_line_expected(p: i64) -> [BiPair; 2] {
    [BiPair::new(3, (p - 1) / 2), BiPair::new(p + 2, 0)]
}

/// Pairs of all triangles with prime normalized volume `p`: enumerates every
/// triple with `A C = p`. The line `i = -b/2 + p/2 + 1` carries exactly
/// `[prime_line_expected]` for every odd prime.
pub fn prime_line_pairs(p: i64) -> Result<PairSet, Error> {
    if p < 3 || p % 2 == 0 || !is_prime_by_trial_division(p) {
        return Err(Error::NotOddPrime(p));
    }
    let mut set = BTreeSet::new();
    // starting at volume p with step 1 and bound p visits the volume p only
    collect_shard(p, p, 1, &mut set);
    debug_assert!(set.iter().all(|q| pick_area_twice(*q) == p));
    Ok(PairSet::from_set(set, p))
}
