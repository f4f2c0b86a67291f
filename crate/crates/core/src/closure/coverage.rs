//! Exact grid oracle for the coverage statements: breadth-first closure of a
//! seed region of the tile under the case's transformations, with every
//! intermediate point kept inside the unit square, compared cell-for-cell
//! against the claimed regions.

use serde::Serialize;
use thiserror::Error;

use crate::exact::{frac, point, Fraction, Isometry, Point};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoverageError {
    #[error("parameters outside the normalized wedge 0 <= b <= a <= 1/2, a > 0")]
    BadParameters,
    #[error("case G degenerates at (a, b) = (1/2, 0): zero translation, coincident centers")]
    DegenerateG,
    #[error("resolution {res} does not clear denominator {den}")]
    BadResolution { res: usize, den: i64 },
}

/// Exact region of the plane used for seeds and expected sets.
#[derive(Clone, Debug)]
pub enum Region {
    /// closed axis-aligned rectangle [x0, x1] x [y0, y1]
    Rect { x0: Fraction, x1: Fraction, y0: Fraction, y1: Fraction },
    /// closed convex polygon, vertices in order
    Convex(Vec<Point>),
    Union(Vec<Region>),
}

impl Region {
    pub fn rect(x0: Fraction, x1: Fraction, y0: Fraction, y1: Fraction) -> Region {
        Region::Rect { x0, x1, y0, y1 }
    }

    pub fn contains(&self, p: Point) -> bool {
        match self {
            Region::Rect { x0, x1, y0, y1 } => {
                p.x >= *x0 && p.x <= *x1 && p.y >= *y0 && p.y <= *y1
            }
            Region::Convex(vs) => {
                if vs.len() < 3 {
                    return false;
                }
                // all cross products share one sign (or vanish)
                let mut pos = false;
                let mut neg = false;
                for i in 0..vs.len() {
                    let a = vs[i];
                    let b = vs[(i + 1) % vs.len()];
                    let cross = (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
                    if cross > Fraction::ZERO {
                        pos = true;
                    }
                    if cross < Fraction::ZERO {
                        neg = true;
                    }
                }
                !(pos && neg)
            }
            Region::Union(rs) => rs.iter().any(|r| r.contains(p)),
        }
    }
}

/// Set of covered cells at a given resolution; cell (i, j) has its center at
/// ((2i+1)/(2 res), (2j+1)/(2 res)).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellSet {
    pub resolution: usize,
    bits: Vec<bool>,
}

impl CellSet {
    fn empty(resolution: usize) -> CellSet {
        CellSet { resolution, bits: vec![false; resolution * resolution] }
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.bits[j * self.resolution + i]
    }

    pub fn count(&self) -> usize {
        self.bits.iter().filter(|b| **b).count()
    }

    pub fn center(&self, i: usize, j: usize) -> Point {
        let d = frac(2 * self.resolution as i64, 1);
        point(frac(2 * i as i64 + 1, 1) / d, frac(2 * j as i64 + 1, 1) / d)
    }

    fn from_region(region: &Region, resolution: usize) -> CellSet {
        let mut set = CellSet::empty(resolution);
        for j in 0..resolution {
            for i in 0..resolution {
                if region.contains(set.center(i, j)) {
                    set.bits[j * resolution + i] = true;
                }
            }
        }
        set
    }
}

/// Reachability closure of the seed cells under the generated group, with
/// chains confined to the unit square: each step applies a generator or its
/// inverse and keeps only in-square images.
pub fn orbit_closure(
    generators: &[Isometry],
    seed: &Region,
    resolution: usize,
) -> Result<CellSet, CoverageError> {
    let res = resolution as i64;
    let mut steps: Vec<([i64; 4], i64, i64)> = Vec::new();
    for g in generators {
        for f in [*g, g.invert()] {
            let sx = f.shift.x * frac(res, 1);
            let sy = f.shift.y * frac(res, 1);
            if !sx.is_integer() {
                return Err(CoverageError::BadResolution {
                    res: resolution,
                    den: f.shift.x.denominator(),
                });
            }
            if !sy.is_integer() {
                return Err(CoverageError::BadResolution {
                    res: resolution,
                    den: f.shift.y.denominator(),
                });
            }
            steps.push((f.linear.matrix(), sx.numerator(), sy.numerator()));
        }
    }
    let mut set = CellSet::from_region(seed, resolution);
    let mut stack: Vec<(i64, i64)> = (0..res)
        .flat_map(|j| (0..res).map(move |i| (i, j)))
        .filter(|(i, j)| set.bits[(j * res + i) as usize])
        .collect();
    while let Some((i, j)) = stack.pop() {
        let (u, v) = (2 * i + 1, 2 * j + 1);
        for ([a, b, c, d], sx, sy) in &steps {
            let nu = a * u + c * v + 2 * sx;
            let nv = b * u + d * v + 2 * sy;
            if nu < 0 || nv < 0 || nu > 2 * res || nv > 2 * res {
                continue;
            }
            let (ni, nj) = ((nu - 1) / 2, (nv - 1) / 2);
            let idx = (nj * res + ni) as usize;
            if !set.bits[idx] {
                set.bits[idx] = true;
                stack.push((ni, nj));
            }
        }
    }
    Ok(set)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CoverageCase {
    E,
    F,
    G,
    H,
}

impl CoverageCase {
    pub fn parse(s: &str) -> Option<CoverageCase> {
        match s.trim().to_ascii_uppercase().as_str() {
            "E" => Some(CoverageCase::E),
            "F" => Some(CoverageCase::F),
            "G" => Some(CoverageCase::G),
            "H" => Some(CoverageCase::H),
            _ => None,
        }
    }
}

/// Report of one coverage verification run.
#[derive(Debug, Serialize)]
pub struct CoverageReport {
    pub case: CoverageCase,
    pub a: Fraction,
    pub b: Fraction,
    pub resolution: usize,
    pub holds: bool,
    pub covered_cells: usize,
    pub expected_cells: usize,
    /// cells claimed but not reached (empty when the statement holds)
    pub missing: Vec<(usize, usize)>,
    /// cells reached beyond the claim (must stay empty for cases E, F, H)
    pub extra: Vec<(usize, usize)>,
}

fn lcm(a: i64, b: i64) -> i64 {
    fn gcd(mut a: i64, mut b: i64) -> i64 {
        while b != 0 {
            let t = b;
            b = a % b;
            a = t;
        }
        a
    }
    a / gcd(a, b) * b
}

/// Transformations of the case, instantiated at rational (a, b).
pub fn case_generators(case: CoverageCase, a: Fraction, b: Fraction) -> Vec<Isometry> {
    let h = frac(1, 2);
    let one = Fraction::ONE;
    match case {
        CoverageCase::E => vec![
            Isometry::rotation(1, point(a, b)),
            Isometry::rotation(1, point(a + h, b + h)),
            Isometry::rotation(1, point(a - h, b + h)),
            Isometry::rotation(2, point(a, b + h)),
        ],
        CoverageCase::F => vec![
            Isometry::translation(point(a + b, b - a)),
            Isometry::rotation(1, point(a, b)),
            Isometry::rotation(1, point(a - b, a + b)),
            Isometry::rotation(2, point((a - b).half(), (a + b).half())),
        ],
        CoverageCase::G => vec![
            Isometry::translation(point(one - a - a, -(b + b))),
            Isometry::rotation(1, point(a, b)),
            Isometry::rotation(1, point(h + b, h - a)),
            Isometry::rotation(1, point(h - b, a - h)),
        ],
        CoverageCase::H => vec![
            Isometry::translation(point(one - a + b, one - a - b)),
            Isometry::rotation(1, point(a, b)),
            Isometry::rotation(1, point(a + b, one - a + b)),
            Isometry::rotation(2, point((one + a + b).half(), (one - a + b).half())),
        ],
    }
}

/// Seed of the closure: the generating region of the case (for
/// case H, the region its first rotations are shown to cover).
fn case_seed(case: CoverageCase, a: Fraction, b: Fraction) -> Region {
    let h = frac(1, 2);
    let one = Fraction::ONE;
    match case {
        CoverageCase::E => Region::rect(a, a + h, b, b + h),
        CoverageCase::F => {
            let top = if (a + b) + (a + b) > one { one } else { (a + b) + (a + b) };
            Region::rect(Fraction::ZERO, a + a, Fraction::ZERO, top)
        }
        CoverageCase::G => Region::rect(a, h + b, Fraction::ZERO, h - a + b),
        CoverageCase::H => {
            // the region the generating triangle spreads over first:
            // the bottom strip right of a plus the middle band
            Region::Union(vec![
                Region::rect(a, one, Fraction::ZERO, b),
                Region::rect(Fraction::ZERO, one, b, one - a + b),
            ])
        }
    }
}

/// The region each coverage statement claims. For G the claim is one-sided (the
/// closure must contain the region); for E, F, H it is exact.
fn expected_region(case: CoverageCase, a: Fraction, b: Fraction) -> Region {
    let one = Fraction::ONE;
    match case {
        CoverageCase::E | CoverageCase::H => {
            Region::rect(Fraction::ZERO, one, Fraction::ZERO, one)
        }
        CoverageCase::G => Region::Union(vec![
            Region::rect(Fraction::ZERO, a + a, Fraction::ZERO, one - a + b + b + b),
            Region::rect(a + a, one, Fraction::ZERO, one - a + b),
        ]),
        CoverageCase::F => {
            let u = point(a + b, b - a);
            let mut parts = vec![Region::rect(a + a, one, Fraction::ZERO, a + b)];
            // translates by n*u of [0,2a] x [0,1]
            let mut shift = Point::ORIGIN;
            loop {
                if shift.x > one || shift.y + one < Fraction::ZERO {
                    break;
                }
                parts.push(Region::rect(shift.x, a + a + shift.x, shift.y, one + shift.y));
                shift = shift + u;
            }
            // translates by -n*u of [2a, 1-2b] x [a+b, 2a] when a+b < 1/2, b < a
            if a + b < frac(1, 2) && b < a {
                let mut shift = Point::ORIGIN;
                loop {
                    if one - b - b + shift.x < Fraction::ZERO || shift.y > one {
                        break;
                    }
                    parts.push(Region::rect(
                        a + a + shift.x,
                        one - b - b + shift.x,
                        a + b + shift.y,
                        a + a + shift.y,
                    ));
                    shift = shift - u;
                }
            }
            Region::Union(parts)
        }
    }
}

/// Default grid resolution: twice the least common multiple of the parameter
/// denominators (and 2), which clears every generator shift.
pub fn default_resolution(a: Fraction, b: Fraction) -> usize {
    let l = lcm(lcm(a.denominator(), b.denominator()), 2);
    (2 * l) as usize
}

/// Run the coverage check for one case at rational (a, b).
pub fn verify_coverage(
    case: CoverageCase,
    a: Fraction,
    b: Fraction,
    resolution: Option<usize>,
) -> Result<CoverageReport, CoverageError> {
    let h = frac(1, 2);
    if !(b >= Fraction::ZERO && b <= a && a <= h && a > Fraction::ZERO) {
        return Err(CoverageError::BadParameters);
    }
    if case == CoverageCase::G && a == h && b.is_zero() {
        return Err(CoverageError::DegenerateG);
    }
    let res = resolution.unwrap_or_else(|| default_resolution(a, b));
    let base = default_resolution(a, b);
    if res == 0 || !res.is_multiple_of(base) {
        return Err(CoverageError::BadResolution { res, den: base as i64 });
    }
    let gens = case_generators(case, a, b);
    let seed = case_seed(case, a, b);
    let covered = orbit_closure(&gens, &seed, res)?;
    let expected = CellSet::from_region(&expected_region(case, a, b), res);
    let mut missing = Vec::new();
    let mut extra = Vec::new();
    for j in 0..res {
        for i in 0..res {
            match (covered.contains(i, j), expected.contains(i, j)) {
                (false, true) => {
                    if missing.len() < 8 {
                        missing.push((i, j));
                    }
                }
                (true, false)
                    if extra.len() < 8 => {
                        extra.push((i, j));
                    }
                _ => {}
            }
        }
    }
    // for G only containment of the claimed region is asserted
    let holds = match case {
        CoverageCase::G => missing.is_empty(),
        _ => missing.is_empty() && extra.is_empty(),
    };
    Ok(CoverageReport {
        case,
        a,
        b,
        resolution: res,
        holds,
        covered_cells: covered.count(),
        expected_cells: expected.count(),
        missing,
        extra,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(case: CoverageCase, a: Fraction, b: Fraction) -> CoverageReport {
        verify_coverage(case, a, b, None).unwrap()
    }

    const SAMPLES: [(i64, i64, i64, i64); 5] =
        [(1, 3, 1, 6), (2, 5, 1, 5), (1, 4, 0, 1), (1, 2, 1, 4), (3, 8, 3, 8)];

    #[test]
    fn case_e_covers_everything() {
        for (an, ad, bn, bd) in SAMPLES {
            let r = check(CoverageCase::E, frac(an, ad), frac(bn, bd));
            assert!(r.holds, "E failed at {an}/{ad}, {bn}/{bd}: {r:?}");
            assert_eq!(r.covered_cells, r.resolution * r.resolution);
        }
    }

    #[test]
    fn case_h_covers_everything() {
        for (an, ad, bn, bd) in SAMPLES {
            let r = check(CoverageCase::H, frac(an, ad), frac(bn, bd));
            assert!(r.holds, "H failed at {an}/{ad}, {bn}/{bd}: {r:?}");
            assert_eq!(r.covered_cells, r.resolution * r.resolution);
        }
    }

    #[test]
    fn case_f_matches_the_union_formula() {
        for (an, ad, bn, bd) in SAMPLES {
            let r = check(CoverageCase::F, frac(an, ad), frac(bn, bd));
            assert!(r.holds, "F failed at {an}/{ad}, {bn}/{bd}: {r:?}");
        }
    }

    #[test]
    fn case_f_covered_region_contains_the_halfplane_bound() {
        // the covered region contains y <= 1 + (b-a)(x-a+b)/(a+b)
        for (an, ad, bn, bd) in SAMPLES {
            let (a, b) = (frac(an, ad), frac(bn, bd));
            let gens = case_generators(CoverageCase::F, a, b);
            let res = default_resolution(a, b);
            let covered = orbit_closure(&gens, &case_seed(CoverageCase::F, a, b), res).unwrap();
            for j in 0..res {
                for i in 0..res {
                    let c = covered.center(i, j);
                    let bound = Fraction::ONE + (b - a) * (c.x - a + b) / (a + b);
                    if c.y <= bound {
                        assert!(covered.contains(i, j), "half-plane bound misses cell ({i},{j})");
                    }
                }
            }
        }
    }

    #[test]
    fn case_g_contains_the_claimed_region() {
        for (an, ad, bn, bd) in SAMPLES {
            let r = check(CoverageCase::G, frac(an, ad), frac(bn, bd));
            assert!(r.holds, "G failed at {an}/{ad}, {bn}/{bd}: {r:?}");
        }
    }

    #[test]
    fn degenerate_g_is_an_error() {
        let r = verify_coverage(CoverageCase::G, frac(1, 2), Fraction::ZERO, None);
        assert!(matches!(r, Err(CoverageError::DegenerateG)));
    }

    #[test]
    fn closure_is_monotone_under_redundant_generators() {
        let (a, b) = (frac(1, 3), frac(1, 6));
        let mut gens = case_generators(CoverageCase::E, a, b);
        let res = default_resolution(a, b);
        let base = orbit_closure(&gens, &case_seed(CoverageCase::E, a, b), res).unwrap();
        let redundant = gens[0].compose(gens[1]);
        gens.push(redundant);
        let more = orbit_closure(&gens, &case_seed(CoverageCase::E, a, b), res).unwrap();
        assert_eq!(base, more);
    }

    #[test]
    fn single_order2_halves_fill_the_square() {
        // one half-turn about the center applied to the left half covers all
        let gens = vec![Isometry::rotation(2, point(frac(1, 2), frac(1, 2)))];
        let seed = Region::rect(Fraction::ZERO, frac(1, 2), Fraction::ZERO, Fraction::ONE);
        let set = orbit_closure(&gens, &seed, 4).unwrap();
        assert_eq!(set.count(), 16);
    }
}
