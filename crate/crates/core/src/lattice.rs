//! Rotation-center lattices of square tiles: the four general families, the
//! edge-midpoint exception layouts, weighted center counts and the reduction
//! of the F1/F2/G1/H1/H2 configurations back to the general families.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{frac, point, Fraction, Point};

/// Classification of a square tile by its order-4 rotation-center layout.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "variant")]
pub enum TileClass {
    /// p + q even; centers at anchor + (rp+sq, sp-rq)/(p^2+q^2), free anchor.
    General1 { p: i64, q: i64, anchor: Point },
    /// p + q odd; centers at (rp+sq, sp-rq)/(p^2+q^2).
    General2 { p: i64, q: i64 },
    /// p + q odd; centers offset by (1/2,0) or (0,1/2).
    General3 { p: i64, q: i64, anchor: Point },
    /// p, q both odd; centers at anchor + 2(rp+sq, sp-rq)/(p^2+q^2).
    General4 { p: i64, q: i64, anchor: Point },
    /// Order-4 centers at the midpoints of two adjacent edges.
    ExcAdjacent,
    /// Order-4 centers at midpoints of opposite edges, tile invariant under
    /// translation by (1/2,1/2) and (1/2,-1/2).
    ExcOppositeTranslation,
    /// Order-4 centers at midpoints of opposite edges, extra order-2 centers
    /// at the four quarter points, no translation invariance.
    ExcOppositeCenters,
    /// Special centers only at the vertices.
    Trivial,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("(p, q) must be nonzero")]
    ZeroVector,
    #[error("invalid class parameters: {0}")]
    InvalidClass(String),
    #[error("center set is not the restriction of a generated lattice")]
    Inconsistent,
}

/// Canonical representative of (p,q) among its four rotations: p > 0 and
/// q >= 0 when some rotation allows it, otherwise p > 0.
pub fn canonical_pq(p: i64, q: i64) -> (i64, i64) {
    assert!((p, q) != (0, 0));
    let rots = [(p, q), (-q, p), (-p, -q), (q, -p)];
    rots.iter()
        .copied()
        .filter(|&(a, b)| a > 0 && b >= 0)
        .chain(rots.iter().copied().filter(|&(a, _)| a > 0))
        .next()
        .expect("some rotation has positive first component")
}

impl TileClass {
    pub fn validate(&self) -> Result<(), LatticeError> {
        let parity_err = |msg: &str| Err(LatticeError::InvalidClass(msg.into()));
        match self {
            TileClass::General1 { p, q, .. } => {
                if (p, q) == (&0, &0) {
                    return Err(LatticeError::ZeroVector);
                }
                if (p + q) % 2 != 0 {
                    return parity_err("General1 needs p + q even");
                }
            }
            TileClass::General2 { p, q } | TileClass::General3 { p, q, .. } => {
                if (p, q) == (&0, &0) {
                    return Err(LatticeError::ZeroVector);
                }
                if (p + q).rem_euclid(2) != 1 {
                    return parity_err("General2/General3 need p + q odd");
                }
                if let TileClass::General3 { anchor, .. } = self {
                    let a = *anchor;
                    if a != point(frac(1, 2), Fraction::ZERO) && a != point(Fraction::ZERO, frac(1, 2)) {
                        return parity_err("General3 anchor must be (1/2,0) or (0,1/2)");
                    }
                }
            }
            TileClass::General4 { p, q, anchor } => {
                if p.rem_euclid(2) != 1 || q.rem_euclid(2) != 1 {
                    return parity_err("General4 needs p and q odd");
                }
                if *anchor != Point::ints(0, 0) && *anchor != Point::ints(1, 0) {
                    return parity_err("General4 anchor must be (0,0) or (1,0)");
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// Canonical form: rotated (p,q) representative; the corners-only cut is
    /// folded into `Trivial`.
    pub fn canonical(&self) -> TileClass {
        let c = match self.clone() {
            TileClass::General1 { p, q, anchor } => {
                let (p, q) = canonical_pq(p, q);
                TileClass::General1 { p, q, anchor }
            }
            TileClass::General2 { p, q } => {
                let (p, q) = canonical_pq(p, q);
                TileClass::General2 { p, q }
            }
            TileClass::General3 { p, q, anchor } => {
                let (p, q) = canonical_pq(p, q);
                TileClass::General3 { p, q, anchor }
            }
            TileClass::General4 { p, q, anchor } => {
                let (p, q) = canonical_pq(p, q);
                TileClass::General4 { p, q, anchor }
            }
            other => other,
        };
        match &c {
            TileClass::General2 { p: 1, q: 0 } => TileClass::Trivial,
            TileClass::General1 { p, q, anchor } => {
                // anchor reduced into [0,1) x [0,1) modulo the center lattice
                let reduced = reduce_anchor(*anchor, *p, *q, 1);
                TileClass::General1 { p: *p, q: *q, anchor: reduced }
            }
            _ => c,
        }
    }

    pub fn n_value(&self) -> Option<i64> {
        match self {
            TileClass::General1 { p, q, .. }
            | TileClass::General2 { p, q }
            | TileClass::General3 { p, q, .. }
            | TileClass::General4 { p, q, .. } => Some(p * p + q * q),
            _ => None,
        }
    }
}

impl fmt::Display for TileClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TileClass::General1 { p, q, anchor } => write!(f, "general1(p={p}, q={q}, anchor={anchor})"),
            TileClass::General2 { p, q } => write!(f, "general2(p={p}, q={q})"),
            TileClass::General3 { p, q, anchor } => write!(f, "general3(p={p}, q={q}, anchor={anchor})"),
            TileClass::General4 { p, q, anchor } => write!(f, "general4(p={p}, q={q}, anchor={anchor})"),
            TileClass::ExcAdjacent => write!(f, "exception(adjacent)"),
            TileClass::ExcOppositeTranslation => write!(f, "exception(opposite, translation)"),
            TileClass::ExcOppositeCenters => write!(f, "exception(opposite, order-2 centers)"),
            TileClass::Trivial => write!(f, "trivial"),
        }
    }
}

/// Finite set of order-4 centers inside the closed unit square.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterSet {
    pub centers: BTreeSet<Point>,
}

impl CenterSet {
    pub fn new(centers: BTreeSet<Point>) -> Self {
        CenterSet { centers }
    }

    pub fn from_points(points: &[Point]) -> Self {
        CenterSet { centers: points.iter().copied().collect() }
    }

    pub fn len(&self) -> usize {
        self.centers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.centers.is_empty()
    }
}

fn in_unit_square(p: &Point) -> bool {
    let zero = Fraction::ZERO;
    let one = Fraction::ONE;
    p.x >= zero && p.x <= one && p.y >= zero && p.y <= one
}

/// Points of anchor + r e1 + s e2 inside the closed unit square, with the
/// (r, s) window solved exactly from the preimage of the square's corners.
fn lattice_points_in_square(anchor: Point, e1: Point, e2: Point) -> BTreeSet<Point> {
    let det = e1.x * e2.y - e1.y * e2.x;
    assert!(!det.is_zero(), "degenerate lattice basis");
    let coords = |w: Point| -> (Fraction, Fraction) {
        let d = w - anchor;
        ((d.x * e2.y - d.y * e2.x) / det, (d.y * e1.x - d.x * e1.y) / det)
    };
    let corners = [Point::ints(0, 0), Point::ints(1, 0), Point::ints(0, 1), Point::ints(1, 1)];
    let mut r_lo = i64::MAX;
    let mut r_hi = i64::MIN;
    let mut s_lo = i64::MAX;
    let mut s_hi = i64::MIN;
    for c in corners {
        let (r, s) = coords(c);
        r_lo = r_lo.min(r.floor() - 1);
        r_hi = r_hi.max(r.floor() + 1);
        s_lo = s_lo.min(s.floor() - 1);
        s_hi = s_hi.max(s.floor() + 1);
    }
    let mut out = BTreeSet::new();
    for r in r_lo..=r_hi {
        for s in s_lo..=s_hi {
            let c = anchor + e1.scale(frac(r, 1)) + e2.scale(frac(s, 1));
            if in_unit_square(&c) {
                out.insert(c);
            }
        }
    }
    out
}

/// Map a point of the pattern referential to the tile referential:
/// (r,s) -> (rp+sq, sp-rq) / (p^2+q^2).
pub fn pattern_to_tile(pt: Point, p: i64, q: i64) -> Result<Point, LatticeError> {
    if (p, q) == (0, 0) {
        return Err(LatticeError::ZeroVector);
    }
    let n = frac(p * p + q * q, 1);
    let (pf, qf) = (frac(p, 1), frac(q, 1));
    Ok(point((pt.x * pf + pt.y * qf) / n, (pt.y * pf - pt.x * qf) / n))
}

/// Inverse of `pattern_to_tile`: tile referential -> pattern referential.
pub fn tile_to_pattern(pt: Point, p: i64, q: i64) -> Result<Point, LatticeError> {
    if (p, q) == (0, 0) {
        return Err(LatticeError::ZeroVector);
    }
    let (pf, qf) = (frac(p, 1), frac(q, 1));
    Ok(point(pt.x * pf - pt.y * qf, pt.x * qf + pt.y * pf))
}

/// Basis of the class's center lattice in the tile referential, plus anchor.
/// `scale` is 1 for families 1..3 and 2 for family 4.
fn center_lattice(class: &TileClass) -> Option<(Point, Point, Point)> {
    let (p, q, anchor, scale) = match class {
        TileClass::General1 { p, q, anchor } => (*p, *q, *anchor, 1),
        TileClass::General2 { p, q } => (*p, *q, Point::ORIGIN, 1),
        TileClass::General3 { p, q, anchor } => (*p, *q, *anchor, 1),
        TileClass::General4 { p, q, anchor } => (*p, *q, *anchor, 2),
        _ => return None,
    };
    let e1 = pattern_to_tile(Point::ints(scale, 0), p, q).ok()?;
    let e2 = pattern_to_tile(Point::ints(0, scale), p, q).ok()?;
    Some((anchor, e1, e2))
}

fn reduce_anchor(anchor: Point, p: i64, q: i64, scale: i64) -> Point {
    let e1 = pattern_to_tile(Point::ints(scale, 0), p, q).unwrap();
    let e2 = pattern_to_tile(Point::ints(0, scale), p, q).unwrap();
    // invert [e1 e2] exactly: a = anchor - r*e1 - s*e2 with (r,s) = floor coords
    let det = e1.x * e2.y - e1.y * e2.x;
    let r = (anchor.x * e2.y - anchor.y * e2.x) / det;
    let s = (anchor.y * e1.x - anchor.x * e1.y) / det;
    let (rf, sf) = (frac(r.floor(), 1), frac(s.floor(), 1));
    anchor - e1.scale(rf) - e2.scale(sf)
}

/// All order-4 centers of the class inside the closed unit square.
pub fn generate_centers(class: &TileClass) -> Result<CenterSet, LatticeError> {
    class.validate()?;
    let half = frac(1, 2);
    match class {
        TileClass::Trivial => Ok(CenterSet::from_points(&[
            Point::ints(0, 0),
            Point::ints(1, 0),
            Point::ints(0, 1),
            Point::ints(1, 1),
        ])),
        TileClass::ExcAdjacent => Ok(CenterSet::from_points(&[
            point(half, Fraction::ZERO),
            point(Fraction::ZERO, half),
        ])),
        TileClass::ExcOppositeTranslation | TileClass::ExcOppositeCenters => {
            Ok(CenterSet::from_points(&[point(half, Fraction::ZERO), point(half, Fraction::ONE)]))
        }
        _ => {
            let (anchor, e1, e2) = center_lattice(class).unwrap();
            Ok(CenterSet { centers: lattice_points_in_square(anchor, e1, e2) })
        }
    }
}

/// Weighted count of a center set: interior 1, edge 1/2, corner 1/4.
pub fn weighted_count(set: &CenterSet) -> Fraction {
    let zero = Fraction::ZERO;
    let one = Fraction::ONE;
    let mut total = Fraction::ZERO;
    for c in &set.centers {
        let on_x = c.x == zero || c.x == one;
        let on_y = c.y == zero || c.y == one;
        total = total
            + match (on_x, on_y) {
                (true, true) => frac(1, 4),
                (true, false) | (false, true) => frac(1, 2),
                (false, false) => one,
            };
    }
    total
}

fn is_corners_only(set: &CenterSet) -> bool {
    let corners: BTreeSet<Point> = [
        Point::ints(0, 0),
        Point::ints(1, 0),
        Point::ints(0, 1),
        Point::ints(1, 1),
    ]
    .into_iter()
    .collect();
    set.centers == corners
}

fn edge_midpoints() -> [Point; 4] {
    let half = frac(1, 2);
    [
        point(half, Fraction::ZERO),
        point(Fraction::ONE, half),
        point(half, Fraction::ONE),
        point(Fraction::ZERO, half),
    ]
}

/// Classify a center set back to the canonical tile class that generates it.
///
/// The two opposite-edge exception tiles share their center set with the
/// third general family, so a bare center set classifies as General3; the
/// exception variants are separated downstream by detected translations and
/// order-2 data, not by order-4 centers.
pub fn classify_centers(set: &CenterSet) -> Result<TileClass, LatticeError> {
    if set.is_empty() {
        return Err(LatticeError::Inconsistent);
    }
    if !set.centers.iter().all(in_unit_square) {
        return Err(LatticeError::Inconsistent);
    }
    if is_corners_only(set) {
        return Ok(TileClass::Trivial);
    }
    // two midpoints of adjacent edges
    if set.len() == 2 {
        let mids = edge_midpoints();
        let pts: Vec<Point> = set.centers.iter().copied().collect();
        let i = mids.iter().position(|m| *m == pts[0]);
        let j = mids.iter().position(|m| *m == pts[1]);
        if let (Some(i), Some(j)) = (i, j) {
            if (i + 2) % 4 != j {
                return Ok(TileClass::ExcAdjacent);
            }
        }
    }
    let n = weighted_count(set);
    // candidate families ordered to make the first match canonical
    let mut candidates: Vec<TileClass> = Vec::new();
    let four = frac(4, 1);
    let nn = n * four;
    if nn.is_integer() {
        let nmax = nn.numerator() / 4 + 1;
        let reach = (1..).take_while(|k| k * k <= 4 * nmax + 4).last().unwrap_or(1);
        for p in 1..=reach {
            for q in 0..=reach {
                let m = p * p + q * q;
                if n.is_integer() && m == n.numerator() {
                    if (p + q) % 2 == 0 {
                        for s in set.centers.iter() {
                            candidates.push(TileClass::General1 { p, q, anchor: *s });
                        }
                    } else {
                        candidates.push(TileClass::General2 { p, q });
                        candidates.push(TileClass::General3 {
                            p,
                            q,
                            anchor: point(frac(1, 2), Fraction::ZERO),
                        });
                        candidates.push(TileClass::General3 {
                            p,
                            q,
                            anchor: point(Fraction::ZERO, frac(1, 2)),
                        });
                    }
                }
                if m == nn.numerator() && p % 2 == 1 && q % 2 == 1 {
                    candidates.push(TileClass::General4 { p, q, anchor: Point::ints(0, 0) });
                    candidates.push(TileClass::General4 { p, q, anchor: Point::ints(1, 0) });
                }
            }
        }
    }
    for cand in candidates {
        let cand = cand.canonical();
        if cand.validate().is_err() {
            continue;
        }
        if let Ok(generated) = generate_centers(&cand) {
            if generated == *set {
                return Ok(cand);
            }
        }
    }
    Err(LatticeError::Inconsistent)
}

/// The five lattice configurations reduced back to general families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ReductionCase {
    F1,
    F2,
    G1,
    H1,
    H2,
}

impl ReductionCase {
    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_uppercase().as_str() {
            "F1" => Some(ReductionCase::F1),
            "F2" => Some(ReductionCase::F2),
            "G1" => Some(ReductionCase::G1),
            "H1" => Some(ReductionCase::H1),
            "H2" => Some(ReductionCase::H2),
            _ => None,
        }
    }
}

/// Direct enumeration of the case's center formula inside the unit square.
/// This is the independent route the reduction is checked against.
pub fn case_centers_direct(
    case: ReductionCase,
    p: i64,
    q: i64,
    r0: i64,
    s0: i64,
) -> Result<CenterSet, LatticeError> {
    if (p, q) == (0, 0) {
        return Err(LatticeError::ZeroVector);
    }
    let n = frac(p * p + q * q, 1);
    let lat = |r: i64, s: i64| -> Point {
        point(frac(r * p + s * q, 1) / n, frac(s * p - r * q, 1) / n)
    };
    let lat2 = |r: i64, s: i64| -> Point {
        // steps of the (p+q, q-p) lattice
        point(
            frac(r * (p + q) + s * (q - p), 1) / n,
            frac(s * (p + q) + r * (p - q), 1) / n,
        )
    };
    let half = frac(1, 2);
    let (anchor, wide) = match case {
        ReductionCase::F1 => (lat(r0, s0), false),
        ReductionCase::F2 => (lat2(r0, s0), true),
        ReductionCase::G1 => {
            let ax = half + (frac(-(r0 + s0) * p + q * (r0 - s0), 1) / n).half();
            let ay = (frac((r0 - s0) * p + q * (r0 + s0), 1) / n).half();
            (point(ax, ay), false)
        }
        ReductionCase::H1 => {
            let a = Fraction::ONE - frac(s0 * p - r0 * q, 1) / n;
            let b = frac(r0 * p + s0 * q, 1) / n;
            (point(a, b), false)
        }
        ReductionCase::H2 => {
            let a = Fraction::ONE - frac(s0 * (p + q) + r0 * (p - q), 1) / n;
            let b = frac(r0 * (p + q) + s0 * (q - p), 1) / n;
            (point(a, b), true)
        }
    };
    let (e1, e2) = if wide {
        (lat2(1, 0), lat2(0, 1))
    } else {
        (lat(1, 0), lat(0, 1))
    };
    Ok(CenterSet { centers: lattice_points_in_square(anchor, e1, e2) })
}

/// Reduce one of the F1/F2/G1/H1/H2 configurations to its general family.
pub fn reduce_case(
    case: ReductionCase,
    p: i64,
    q: i64,
    r0: i64,
    s0: i64,
) -> Result<TileClass, LatticeError> {
    if (p, q) == (0, 0) {
        return Err(LatticeError::ZeroVector);
    }
    let even = |v: i64| v.rem_euclid(2) == 0;
    let out = match case {
        ReductionCase::F1 | ReductionCase::H1 => {
            // centers form the (p,q) lattice anchored at the origin
            if even(p + q) {
                TileClass::General1 { p, q, anchor: Point::ints(0, 0) }
            } else {
                TileClass::General2 { p, q }
            }
        }
        ReductionCase::F2 | ReductionCase::H2 => {
            let (p1, q1) = (p + q, q - p);
            let anchor = if case == ReductionCase::H2 { Point::ints(1, 0) } else { Point::ints(0, 0) };
            if !even(p1) {
                TileClass::General4 { p: p1, q: q1, anchor }
            } else {
                let (p2, q2) = (p1 / 2, q1 / 2);
                // the (1,0) anchor of H2 is a lattice point of the halved family
                if even(p2 + q2) {
                    TileClass::General1 { p: p2, q: q2, anchor: Point::ints(0, 0) }
                } else {
                    TileClass::General2 { p: p2, q: q2 }
                }
            }
        }
        ReductionCase::G1 => {
            if even(p + q) {
                let n = frac(p * p + q * q, 1);
                let ax = frac(1, 2) + (frac(-(r0 + s0) * p + q * (r0 - s0), 1) / n).half();
                let ay = (frac((r0 - s0) * p + q * (r0 + s0), 1) / n).half();
                TileClass::General1 { p, q, anchor: point(ax, ay) }
            } else if even(r0 + s0) {
                TileClass::General3 { p, q, anchor: point(frac(1, 2), Fraction::ZERO) }
            } else {
                TileClass::General3 { p, q, anchor: point(Fraction::ZERO, frac(1, 2)) }
            }
        }
    };
    let out = out.canonical();
    out.validate()?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(a: (i64, i64), b: (i64, i64)) -> Point {
        point(frac(a.0, a.1), frac(b.0, b.1))
    }

    #[test]
    fn pattern_to_tile_formula() {
        // (r,s)=(1,0), (p,q)=(1,2) -> (1/5, -2/5)
        let out = pattern_to_tile(Point::ints(1, 0), 1, 2).unwrap();
        assert_eq!(out, pt((1, 5), (-2, 5)));
        // (r,s)=(p,q) maps to (1,0)
        let out = pattern_to_tile(Point::ints(1, 2), 1, 2).unwrap();
        assert_eq!(out, Point::ints(1, 0));
        // v = (-q, p) maps to (0,1)
        let out = pattern_to_tile(Point::ints(-2, 1), 1, 2).unwrap();
        assert_eq!(out, Point::ints(0, 1));
        assert_eq!(pattern_to_tile(Point::ints(1, 0), 0, 0), Err(LatticeError::ZeroVector));
    }

    #[test]
    fn round_trip_pattern_tile() {
        for (p, q) in [(1, 2), (3, 1), (2, 0), (1, 1)] {
            for r in -3..3 {
                for s in -3..3 {
                    let z = Point::ints(r, s);
                    let w = pattern_to_tile(z, p, q).unwrap();
                    assert_eq!(tile_to_pattern(w, p, q).unwrap(), z);
                }
            }
        }
    }

    #[test]
    fn centers_general2_1_2() {
        let set = generate_centers(&TileClass::General2 { p: 1, q: 2 }).unwrap();
        let expected: BTreeSet<Point> = [
            pt((0, 1), (0, 1)),
            pt((1, 1), (0, 1)),
            pt((0, 1), (1, 1)),
            pt((1, 1), (1, 1)),
            pt((2, 5), (1, 5)),
            pt((4, 5), (2, 5)),
            pt((3, 5), (4, 5)),
            pt((1, 5), (3, 5)),
        ]
        .into_iter()
        .collect();
        assert_eq!(set.centers, expected);
        assert_eq!(weighted_count(&set), frac(5, 1));
    }

    #[test]
    fn centers_general1_1_1_origin() {
        let set = generate_centers(&TileClass::General1 { p: 1, q: 1, anchor: Point::ints(0, 0) })
            .unwrap();
        let expected: BTreeSet<Point> = [
            pt((0, 1), (0, 1)),
            pt((1, 1), (0, 1)),
            pt((0, 1), (1, 1)),
            pt((1, 1), (1, 1)),
            pt((1, 2), (1, 2)),
        ]
        .into_iter()
        .collect();
        assert_eq!(set.centers, expected);
        assert_eq!(weighted_count(&set), frac(2, 1));
    }

    #[test]
    fn centers_general3_1_0() {
        let set = generate_centers(&TileClass::General3 {
            p: 1,
            q: 0,
            anchor: pt((1, 2), (0, 1)),
        })
        .unwrap();
        let expected: BTreeSet<Point> = [pt((1, 2), (0, 1)), pt((1, 2), (1, 1))].into_iter().collect();
        assert_eq!(set.centers, expected);
        assert_eq!(weighted_count(&set), frac(1, 1));
    }

    #[test]
    fn centers_general3_1_2_has_six_entries() {
        // lattice arithmetic gives six centers for p=1, q=2 with anchor (1/2, 0)
        let set = generate_centers(&TileClass::General3 {
            p: 1,
            q: 2,
            anchor: pt((1, 2), (0, 1)),
        })
        .unwrap();
        let expected: BTreeSet<Point> = [
            pt((1, 2), (0, 1)),
            pt((1, 2), (1, 1)),
            pt((3, 10), (2, 5)),
            pt((9, 10), (1, 5)),
            pt((7, 10), (3, 5)),
            pt((1, 10), (4, 5)),
        ]
        .into_iter()
        .collect();
        assert_eq!(set.centers, expected);
        assert_eq!(weighted_count(&set), frac(5, 1));
    }

    #[test]
    fn counts_match_family_formulas() {
        // weighted counts: family 1 -> p^2+q^2, family 4 -> (p^2+q^2)/4
        let set = generate_centers(&TileClass::General1 { p: 2, q: 0, anchor: Point::ints(0, 0) })
            .unwrap();
        assert_eq!(weighted_count(&set), frac(4, 1));
        let set = generate_centers(&TileClass::General4 { p: 1, q: 3, anchor: Point::ints(0, 0) })
            .unwrap();
        assert_eq!(weighted_count(&set), frac(5, 2));
        let set = generate_centers(&TileClass::General2 { p: 1, q: 0 }).unwrap();
        assert_eq!(weighted_count(&set), frac(1, 1));
    }

    #[test]
    fn classify_examples() {
        let adj = CenterSet::from_points(&[pt((1, 2), (0, 1)), pt((0, 1), (1, 2))]);
        assert_eq!(classify_centers(&adj).unwrap(), TileClass::ExcAdjacent);

        let corners = CenterSet::from_points(&[
            Point::ints(0, 0),
            Point::ints(1, 0),
            Point::ints(0, 1),
            Point::ints(1, 1),
        ]);
        assert_eq!(classify_centers(&corners).unwrap(), TileClass::Trivial);

        let g4 = TileClass::General4 { p: 1, q: 3, anchor: Point::ints(0, 0) };
        let set = generate_centers(&g4).unwrap();
        assert_eq!(classify_centers(&set).unwrap(), g4.canonical());

        // opposite edge midpoints classify as the third family, not an exception
        let opp = CenterSet::from_points(&[pt((1, 2), (0, 1)), pt((1, 2), (1, 1))]);
        assert_eq!(
            classify_centers(&opp).unwrap(),
            TileClass::General3 { p: 1, q: 0, anchor: pt((1, 2), (0, 1)) }
        );
    }

    #[test]
    fn classify_rejects_non_lattice() {
        let bad = CenterSet::from_points(&[pt((1, 3), (1, 3)), pt((1, 2), (1, 7))]);
        assert_eq!(classify_centers(&bad), Err(LatticeError::Inconsistent));
    }

    #[test]
    fn round_trip_all_small_classes() {
        let mut classes: Vec<TileClass> = Vec::new();
        for p in 1..6i64 {
            for q in 0..6i64 {
                let n = p * p + q * q;
                if n > 25 {
                    continue;
                }
                if (p + q) % 2 == 0 {
                    classes.push(TileClass::General1 { p, q, anchor: Point::ints(0, 0) });
                    classes.push(TileClass::General1 { p, q, anchor: pt((1, 3), (1, 7)) });
                } else {
                    classes.push(TileClass::General2 { p, q });
                    classes.push(TileClass::General3 { p, q, anchor: pt((1, 2), (0, 1)) });
                    classes.push(TileClass::General3 { p, q, anchor: pt((0, 1), (1, 2)) });
                }
                if p % 2 == 1 && q % 2 == 1 {
                    classes.push(TileClass::General4 { p, q, anchor: Point::ints(0, 0) });
                    classes.push(TileClass::General4 { p, q, anchor: Point::ints(1, 0) });
                }
            }
        }
        for class in classes {
            if class.validate().is_err() {
                continue;
            }
            let set = generate_centers(&class).unwrap();
            let back = classify_centers(&set).unwrap();
            assert_eq!(back, class.canonical(), "round trip failed for {class}");
        }
    }

    #[test]
    fn mirror_covariance() {
        // reflecting the centers across x = 1/2 swaps p and q
        for (p, q) in [(1i64, 2i64), (2, 3), (1, 4)] {
            let set = generate_centers(&TileClass::General2 { p, q }).unwrap();
            let mirrored = CenterSet::new(
                set.centers.iter().map(|c| point(Fraction::ONE - c.x, c.y)).collect(),
            );
            let got = classify_centers(&mirrored).unwrap();
            assert_eq!(got, TileClass::General2 { p: q, q: p }.canonical());
        }
    }

    #[test]
    fn reduce_case_examples() {
        // H1 with p+q odd gives the zero-anchored odd family
        assert_eq!(
            reduce_case(ReductionCase::H1, 2, 1, 1, 1).unwrap(),
            TileClass::General2 { p: 2, q: 1 }
        );
        // G1 with p+q odd and r0+s0 even lands on anchor (1/2, 0)
        assert_eq!(
            reduce_case(ReductionCase::G1, 2, 1, 1, 1).unwrap(),
            TileClass::General3 { p: 2, q: 1, anchor: pt((1, 2), (0, 1)) }
        );
        // F2 with p+q odd is the fourth family
        assert_eq!(
            reduce_case(ReductionCase::F2, 2, 1, 0, 0).unwrap(),
            TileClass::General4 { p: 3, q: -1, anchor: Point::ints(0, 0) }.canonical()
        );
    }

    #[test]
    fn reduce_case_matches_direct_enumeration() {
        for case in [
            ReductionCase::F1,
            ReductionCase::F2,
            ReductionCase::G1,
            ReductionCase::H1,
            ReductionCase::H2,
        ] {
            for p in -3..=3i64 {
                for q in -3..=3i64 {
                    if (p, q) == (0, 0) {
                        continue;
                    }
                    for r0 in -2..=2i64 {
                        for s0 in -2..=2i64 {
                            let direct = case_centers_direct(case, p, q, r0, s0).unwrap();
                            let reduced = reduce_case(case, p, q, r0, s0).unwrap();
                            let via_class = generate_centers(&reduced).unwrap();
                            assert_eq!(
                                via_class, direct,
                                "mismatch for {case:?} p={p} q={q} r0={r0} s0={s0} -> {reduced}"
                            );
                        }
                    }
                }
            }
        }
    }
}
