//! Exact rational scalars, points, and the algebra of square-lattice planar
//! isometries. Every operation here is exact; floating point never appears.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exact rational number with a positive denominator and gcd(|num|, den) = 1.
///
/// Arithmetic runs through i128 intermediates; a result that does not fit in
/// i64 components is a hard error (panic), never a silent wraparound.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: i64,
    den: i64,
}

impl Fraction {
    pub const ZERO: Fraction = Fraction { num: 0, den: 1 };
    pub const ONE: Fraction = Fraction { num: 1, den: 1 };

    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "fraction with zero denominator");
        Self::normalize(num as i128, den as i128)
    }

    fn normalize(num: i128, den: i128) -> Self {
        let sign = if den < 0 { -1 } else { 1 };
        let (num, den) = (num * sign, den * sign);
        let g = big_gcd(num.unsigned_abs(), den.unsigned_abs());
        let (num, den) = (num / g, den / g);
        let num = i64::try_from(num).expect("fraction numerator overflow");
        let den = i64::try_from(den).expect("fraction denominator overflow");
        Fraction { num, den }
    }

    pub fn from_int(v: i64) -> Self {
        Fraction { num: v, den: 1 }
    }

    pub fn numerator(&self) -> i64 {
        self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn abs(self) -> Self {
        Fraction { num: self.num.abs(), den: self.den }
    }

    /// Largest integer <= self.
    pub fn floor(self) -> i64 {
        self.num.div_euclid(self.den)
    }

    pub fn half(self) -> Self {
        Self::normalize(self.num as i128, 2 * self.den as i128)
    }

    /// self reduced into [0, 1).
    pub fn fract(self) -> Self {
        Fraction { num: self.num.rem_euclid(self.den), den: self.den }
    }

    pub fn recip(self) -> Self {
        assert!(self.num != 0, "reciprocal of zero");
        Self::normalize(self.den as i128, self.num as i128)
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

fn big_gcd(mut a: u128, mut b: u128) -> i128 {
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    if a == 0 {
        1
    } else {
        a as i128
    }
}

impl Add for Fraction {
    type Output = Fraction;
    fn add(self, rhs: Fraction) -> Fraction {
        Fraction::normalize(
            self.num as i128 * rhs.den as i128 + rhs.num as i128 * self.den as i128,
            self.den as i128 * rhs.den as i128,
        )
    }
}

impl Sub for Fraction {
    type Output = Fraction;
    fn sub(self, rhs: Fraction) -> Fraction {
        self + (-rhs)
    }
}

impl Mul for Fraction {
    type Output = Fraction;
    fn mul(self, rhs: Fraction) -> Fraction {
        Fraction::normalize(self.num as i128 * rhs.num as i128, self.den as i128 * rhs.den as i128)
    }
}

impl Div for Fraction {
    type Output = Fraction;
    fn div(self, rhs: Fraction) -> Fraction {
        assert!(rhs.num != 0, "division by zero fraction");
        Fraction::normalize(self.num as i128 * rhs.den as i128, self.den as i128 * rhs.num as i128)
    }
}

impl Neg for Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        Fraction { num: -self.num, den: self.den }
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Fraction {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if let Some((n, d)) = s.split_once('/') {
            let n: i64 = n.trim().parse().map_err(|e| format!("bad numerator {n:?}: {e}"))?;
            let d: i64 = d.trim().parse().map_err(|e| format!("bad denominator {d:?}: {e}"))?;
            if d == 0 {
                return Err("zero denominator".into());
            }
            Ok(Fraction::new(n, d))
        } else {
            let n: i64 = s.parse().map_err(|e| format!("bad integer {s:?}: {e}"))?;
            Ok(Fraction::from_int(n))
        }
    }
}

impl Serialize for Fraction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Fraction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// Convenience constructor: `frac(1, 3)` is 1/3.
pub fn frac(num: i64, den: i64) -> Fraction {
    Fraction::new(num, den)
}

/// Exact 2D point (or vector).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Fraction,
    pub y: Fraction,
}

impl Point {
    pub const ORIGIN: Point = Point { x: Fraction::ZERO, y: Fraction::ZERO };

    pub fn new(x: Fraction, y: Fraction) -> Self {
        Point { x, y }
    }

    pub fn ints(x: i64, y: i64) -> Self {
        Point { x: Fraction::from_int(x), y: Fraction::from_int(y) }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn scale(self, k: Fraction) -> Self {
        Point { x: self.x * k, y: self.y * k }
    }

    /// Squared Euclidean norm.
    pub fn norm2(self) -> Fraction {
        self.x * self.x + self.y * self.y
    }
}

impl Add for Point {
    type Output = Point;
    fn add(self, rhs: Point) -> Point {
        Point { x: self.x + rhs.x, y: self.y + rhs.y }
    }
}

impl Sub for Point {
    type Output = Point;
    fn sub(self, rhs: Point) -> Point {
        Point { x: self.x - rhs.x, y: self.y - rhs.y }
    }
}

impl Neg for Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point { x: -self.x, y: -self.y }
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.x, self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.x.to_string(), self.y.to_string()].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Point {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [x, y]: [String; 2] = <[String; 2]>::deserialize(d)?;
        Ok(Point {
            x: x.parse().map_err(D::Error::custom)?,
            y: y.parse().map_err(D::Error::custom)?,
        })
    }
}

pub fn point(x: Fraction, y: Fraction) -> Point {
    Point { x, y }
}

/// One of the 8 linear parts available to a square-lattice isometry:
/// rotation by `rot` quarter turns (counterclockwise), optionally preceded by
/// the mirror across the horizontal axis (y negated first).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Dihedral {
    pub rot: u8,
    pub mirror: bool,
}

impl Dihedral {
    pub const IDENTITY: Dihedral = Dihedral { rot: 0, mirror: false };

    pub fn rotation(quarter_turns: u8) -> Self {
        Dihedral { rot: quarter_turns % 4, mirror: false }
    }

    pub fn all() -> [Dihedral; 8] {
        let mut out = [Dihedral::IDENTITY; 8];
        for k in 0..4 {
            out[k as usize] = Dihedral { rot: k, mirror: false };
            out[4 + k as usize] = Dihedral { rot: k, mirror: true };
        }
        out
    }

    /// Integer matrix entries, column major: [a c; b d] maps (x,y) to (ax+cy, bx+dy).
    pub fn matrix(self) -> [i64; 4] {
        // columns of R^rot applied to the mirrored basis
        let (c, s) = match self.rot {
            0 => (1i64, 0i64),
            1 => (0, 1),
            2 => (-1, 0),
            3 => (0, -1),
            _ => unreachable!(),
        };
        if self.mirror {
            // R^rot * diag(1,-1): columns (c,s) and (s,-c)
            [c, s, s, -c]
        } else {
            [c, s, -s, c]
        }
    }

    pub fn apply(self, p: Point) -> Point {
        let [a, b, c, d] = self.matrix();
        Point {
            x: p.x * Fraction::from_int(a) + p.y * Fraction::from_int(c),
            y: p.x * Fraction::from_int(b) + p.y * Fraction::from_int(d),
        }
    }

    /// Group product: (self * rhs) acts as self after rhs.
    pub fn compose(self, rhs: Dihedral) -> Dihedral {
        let rot = if self.mirror {
            (self.rot + 4 - rhs.rot % 4) % 4
        } else {
            (self.rot + rhs.rot) % 4
        };
        Dihedral { rot, mirror: self.mirror ^ rhs.mirror }
    }

    pub fn inverse(self) -> Dihedral {
        if self.mirror {
            self
        } else {
            Dihedral { rot: (4 - self.rot) % 4, mirror: false }
        }
    }

    pub fn is_identity(self) -> bool {
        self.rot == 0 && !self.mirror
    }

    /// Canonical short name: r0..r3 for rotations, m0..m3 for mirrored elements.
    pub fn name(self) -> String {
        format!("{}{}", if self.mirror { 'm' } else { 'r' }, self.rot)
    }

    pub fn from_name(s: &str) -> Option<Dihedral> {
        let mut it = s.chars();
        let kind = it.next()?;
        let k: u8 = it.as_str().parse().ok()?;
        if k > 3 {
            return None;
        }
        match kind {
            'r' => Some(Dihedral { rot: k, mirror: false }),
            'm' => Some(Dihedral { rot: k, mirror: true }),
            _ => None,
        }
    }
}

/// Square-lattice planar isometry acting as z -> linear * z + shift.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Isometry {
    pub linear: Dihedral,
    pub shift: Point,
}

impl Isometry {
    pub const IDENTITY: Isometry = Isometry { linear: Dihedral::IDENTITY, shift: Point::ORIGIN };

    pub fn translation(v: Point) -> Self {
        Isometry { linear: Dihedral::IDENTITY, shift: v }
    }

    /// Rotation by `quarter_turns`*90 degrees counterclockwise about `center`.
    pub fn rotation(quarter_turns: u8, center: Point) -> Self {
        let linear = Dihedral::rotation(quarter_turns);
        let shift = center - linear.apply(center);
        Isometry { linear, shift }
    }

    /// Reflection across the given axis.
    pub fn reflection(axis: Axis) -> Self {
        Self::glide(axis, Point::ORIGIN)
    }

    /// Reflection across `axis` followed by translation `shift` along it.
    pub fn glide(axis: Axis, shift: Point) -> Self {
        let (linear, base) = axis.mirror_parts();
        Isometry { linear, shift: base + shift }
    }

    pub fn apply(self, p: Point) -> Point {
        self.linear.apply(p) + self.shift
    }

    /// Composition acting as self after rhs (rhs first).
    pub fn compose(self, rhs: Isometry) -> Isometry {
        Isometry {
            linear: self.linear.compose(rhs.linear),
            shift: self.linear.apply(rhs.shift) + self.shift,
        }
    }

    pub fn invert(self) -> Isometry {
        let inv = self.linear.inverse();
        Isometry { linear: inv, shift: -inv.apply(self.shift) }
    }

    pub fn is_identity(self) -> bool {
        self.linear.is_identity() && self.shift.is_zero()
    }

    /// Total classification into the five isometry kinds.
    pub fn classify(self) -> IsoClass {
        let t = self.shift;
        match (self.linear.rot, self.linear.mirror) {
            (0, false) => {
                if t.is_zero() {
                    IsoClass::Identity
                } else {
                    IsoClass::Translation(t)
                }
            }
            (2, false) => IsoClass::Rotation {
                order: 2,
                center: t.scale(frac(1, 2)),
                sense: 1,
            },
            (k @ (1 | 3), false) => {
                // solve (I - R^k) c = t
                let half = frac(1, 2);
                let center = if k == 1 {
                    // (I-R90)^-1 = 1/2 [[1,-1],[1,1]]
                    Point { x: (t.x - t.y) * half, y: (t.x + t.y) * half }
                } else {
                    // (I-R270)^-1 = 1/2 [[1,1],[-1,1]]
                    Point { x: (t.x + t.y) * half, y: (t.y - t.x) * half }
                };
                IsoClass::Rotation { order: 4, center, sense: if k == 1 { 1 } else { -1 } }
            }
            (k, true) => {
                let half = frac(1, 2);
                // Split t into components parallel and perpendicular to the
                // mirror's fixed direction; perpendicular half gives the axis.
                let (dir, offset, glide) = match k {
                    0 => (AxisDir::Horizontal, t.y * half, point(t.x, Fraction::ZERO)),
                    1 => {
                        let par = (t.x + t.y) * half;
                        ((AxisDir::DiagUp), (t.y - t.x) * half, point(par, par))
                    }
                    2 => (AxisDir::Vertical, t.x * half, point(Fraction::ZERO, t.y)),
                    3 => {
                        let par = (t.x - t.y) * half;
                        (AxisDir::DiagDown, (t.x + t.y) * half, point(par, -par))
                    }
                    _ => unreachable!(),
                };
                let axis = Axis { dir, offset };
                if glide.is_zero() {
                    IsoClass::Reflection(axis)
                } else {
                    IsoClass::Glide { axis, shift: glide }
                }
            }
            _ => unreachable!(),
        }
    }
}

/// The four axis directions available on the square lattice.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AxisDir {
    /// y = offset
    Horizontal,
    /// x = offset
    Vertical,
    /// y = x + offset
    DiagUp,
    /// y = -x + offset
    DiagDown,
}

impl AxisDir {
    /// Unit-ish direction vector along the axis (lattice-primitive).
    pub fn direction(self) -> Point {
        match self {
            AxisDir::Horizontal => Point::ints(1, 0),
            AxisDir::Vertical => Point::ints(0, 1),
            AxisDir::DiagUp => Point::ints(1, 1),
            AxisDir::DiagDown => Point::ints(1, -1),
        }
    }
}

/// A reflection/glide axis: direction plus rational offset.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Axis {
    pub dir: AxisDir,
    pub offset: Fraction,
}

impl Axis {
    pub fn new(dir: AxisDir, offset: Fraction) -> Self {
        Axis { dir, offset }
    }

    /// Linear part and translation of the pure reflection across this axis.
    fn mirror_parts(self) -> (Dihedral, Point) {
        let o = self.offset;
        match self.dir {
            AxisDir::Horizontal => {
                (Dihedral { rot: 0, mirror: true }, point(Fraction::ZERO, o + o))
            }
            AxisDir::DiagUp => (Dihedral { rot: 1, mirror: true }, point(-o, o)),
            AxisDir::Vertical => (Dihedral { rot: 2, mirror: true }, point(o + o, Fraction::ZERO)),
            AxisDir::DiagDown => (Dihedral { rot: 3, mirror: true }, point(o, o)),
        }
    }

    /// A point on the axis.
    pub fn base_point(self) -> Point {
        match self.dir {
            AxisDir::Horizontal => point(Fraction::ZERO, self.offset),
            AxisDir::Vertical => point(self.offset, Fraction::ZERO),
            AxisDir::DiagUp => point(Fraction::ZERO, self.offset),
            AxisDir::DiagDown => point(Fraction::ZERO, self.offset),
        }
    }
}

/// Classification of an isometry.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IsoClass {
    Identity,
    Translation(Point),
    Rotation { order: u8, center: Point, sense: i8 },
    Reflection(Axis),
    Glide { axis: Axis, shift: Point },
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Tiny deterministic PRNG for property-style tests.
    pub struct XorShift(u64);

    impl XorShift {
        pub fn new(seed: u64) -> Self {
            XorShift(seed.max(1))
        }
        pub fn next_u64(&mut self) -> u64 {
            let mut x = self.0;
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            self.0 = x;
            x
        }
        pub fn frac(&mut self) -> Fraction {
            let n = (self.next_u64() % 17) as i64 - 8;
            let d = (self.next_u64() % 6) as i64 + 1;
            Fraction::new(n, d)
        }
        pub fn point(&mut self) -> Point {
            Point { x: self.frac(), y: self.frac() }
        }
        pub fn isometry(&mut self) -> Isometry {
            let all = Dihedral::all();
            let linear = all[(self.next_u64() % 8) as usize];
            Isometry { linear, shift: self.point() }
        }
    }

    #[test]
    fn fraction_basics() {
        assert_eq!(frac(2, 4), frac(1, 2));
        assert_eq!(frac(1, -2), frac(-1, 2));
        assert_eq!(frac(1, 3) + frac(1, 6), frac(1, 2));
        assert_eq!(frac(1, 2) * frac(2, 3), frac(1, 3));
        assert_eq!(frac(-7, 3).floor(), -3);
        assert_eq!(frac(-7, 3).fract(), frac(2, 3));
        assert!(frac(1, 3) < frac(2, 5));
        assert_eq!("(-1/2)".trim_matches(|c| c == '(' || c == ')').parse::<Fraction>().unwrap(), frac(-1, 2));
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn fraction_overflow_is_hard_error() {
        let big = Fraction::from_int(i64::MAX);
        let _ = big * big;
    }

    #[test]
    fn dihedral_group_has_order_eight() {
        use std::collections::BTreeSet;
        let mut seen = BTreeSet::new();
        for g in Dihedral::all() {
            for h in Dihedral::all() {
                seen.insert(g.compose(h));
            }
        }
        assert_eq!(seen.len(), 8);
        for g in Dihedral::all() {
            assert!(g.compose(g.inverse()).is_identity());
            assert_eq!(Dihedral::from_name(&g.name()), Some(g));
        }
    }

    #[test]
    fn rotation_squared_is_order_two() {
        // R90@(0,0) twice is R180@(0,0)
        let r = Isometry::rotation(1, Point::ORIGIN);
        match r.compose(r).classify() {
            IsoClass::Rotation { order: 2, center, .. } => assert_eq!(center, Point::ORIGIN),
            c => panic!("unexpected {c:?}"),
        }
    }

    #[test]
    fn translate_then_rotate_moves_center() {
        // Translate(1,0) . R90@(0,0) = R90@(1/2,1/2), solved from (I-L)c = shift
        let f = Isometry::translation(Point::ints(1, 0))
            .compose(Isometry::rotation(1, Point::ORIGIN));
        match f.classify() {
            IsoClass::Rotation { order: 4, center, sense: 1 } => {
                assert_eq!(center, point(frac(1, 2), frac(1, 2)));
            }
            c => panic!("unexpected {c:?}"),
        }
    }

    #[test]
    fn conjugated_center_from_the_tables() {
        // Translate(1/2,1/2) . R90@(1/3,1/6) . Translate(-1/2,-1/2) = R90@(5/6,2/3)
        let t = Isometry::translation(point(frac(1, 2), frac(1, 2)));
        let r = Isometry::rotation(1, point(frac(1, 3), frac(1, 6)));
        let g = t.compose(r).compose(t.invert());
        match g.classify() {
            IsoClass::Rotation { order: 4, center, .. } => {
                assert_eq!(center, point(frac(5, 6), frac(2, 3)));
            }
            c => panic!("unexpected {c:?}"),
        }
    }

    #[test]
    fn invert_examples() {
        let t = Isometry::translation(Point::ints(1, 0));
        assert_eq!(t.invert().shift, Point::ints(-1, 0));
        let r = Isometry::rotation(1, point(frac(1, 2), frac(1, 2)));
        match r.invert().classify() {
            IsoClass::Rotation { order: 4, center, sense: -1 } => {
                assert_eq!(center, point(frac(1, 2), frac(1, 2)));
            }
            c => panic!("unexpected {c:?}"),
        }
        // a glide is its own inverse only composed with itself giving a translation
        let g = Isometry::glide(
            Axis::new(AxisDir::Horizontal, Fraction::ZERO),
            point(frac(1, 2), Fraction::ZERO),
        );
        match g.compose(g).classify() {
            IsoClass::Translation(v) => assert_eq!(v, point(Fraction::ONE, Fraction::ZERO)),
            c => panic!("unexpected {c:?}"),
        }
    }

    #[test]
    fn classify_examples() {
        // linear = 180, shift (1,1) -> order 2 about (1/2,1/2)
        let f = Isometry { linear: Dihedral::rotation(2), shift: Point::ints(1, 1) };
        match f.classify() {
            IsoClass::Rotation { order: 2, center, .. } => {
                assert_eq!(center, point(frac(1, 2), frac(1, 2)))
            }
            c => panic!("unexpected {c:?}"),
        }
        assert_eq!(Isometry::IDENTITY.classify(), IsoClass::Identity);
        // horizontal mirror with shift (1/2, 0) -> glide along y=0
        let f = Isometry {
            linear: Dihedral { rot: 0, mirror: true },
            shift: point(frac(1, 2), Fraction::ZERO),
        };
        match f.classify() {
            IsoClass::Glide { axis, shift } => {
                assert_eq!(axis, Axis::new(AxisDir::Horizontal, Fraction::ZERO));
                assert_eq!(shift, point(frac(1, 2), Fraction::ZERO));
            }
            c => panic!("unexpected {c:?}"),
        }
    }

    #[test]
    fn classify_reconstructs_isometry() {
        let mut rng = XorShift::new(7);
        for _ in 0..500 {
            let f = rng.isometry();
            let g = match f.classify() {
                IsoClass::Identity => Isometry::IDENTITY,
                IsoClass::Translation(v) => Isometry::translation(v),
                IsoClass::Rotation { order, center, sense } => {
                    let k = if order == 2 { 2 } else if sense == 1 { 1 } else { 3 };
                    Isometry::rotation(k, center)
                }
                IsoClass::Reflection(axis) => Isometry::reflection(axis),
                IsoClass::Glide { axis, shift } => Isometry::glide(axis, shift),
            };
            assert_eq!(f, g, "classify must round-trip");
        }
    }

    #[test]
    fn group_laws_on_random_triples() {
        let mut rng = XorShift::new(99);
        for _ in 0..300 {
            let (f, g, h) = (rng.isometry(), rng.isometry(), rng.isometry());
            assert_eq!(f.compose(g).compose(h), f.compose(g.compose(h)));
            assert!(f.compose(f.invert()).is_identity());
            assert!(f.invert().compose(f).is_identity());
        }
    }

    #[test]
    fn conjugation_covariance() {
        let mut rng = XorShift::new(1234);
        for _ in 0..300 {
            let f = rng.isometry();
            let g = rng.isometry();
            let conj = g.compose(f).compose(g.invert());
            match (f.classify(), conj.classify()) {
                (IsoClass::Rotation { order, center, sense }, IsoClass::Rotation { order: o2, center: c2, sense: s2 }) => {
                    assert_eq!(order, o2);
                    assert_eq!(g.apply(center), c2);
                    let expect = if g.linear.mirror { -sense } else { sense };
                    if order == 4 {
                        assert_eq!(expect, s2);
                    }
                }
                (IsoClass::Translation(v), IsoClass::Translation(w)) => {
                    assert_eq!(g.linear.apply(v), w);
                }
                (IsoClass::Identity, IsoClass::Identity) => {}
                (IsoClass::Reflection(ax), IsoClass::Reflection(bx)) => {
                    // axis maps to axis: compare two mapped points lie on bx
                    let p = g.apply(ax.base_point());
                    let q = g.apply(ax.base_point() + ax.dir.direction());
                    for r in [p, q] {
                        let on = match bx.dir {
                            AxisDir::Horizontal => r.y == bx.offset,
                            AxisDir::Vertical => r.x == bx.offset,
                            AxisDir::DiagUp => r.y - r.x == bx.offset,
                            AxisDir::DiagDown => r.y + r.x == bx.offset,
                        };
                        assert!(on, "mapped axis point {r:?} not on {bx:?}");
                    }
                }
                (IsoClass::Glide { .. }, IsoClass::Glide { .. }) => {}
                (a, b) => panic!("class changed under conjugation: {a:?} -> {b:?}"),
            }
        }
    }

    #[test]
    fn composition_of_two_order4_rotations_fixed_point() {
        let mut rng = XorShift::new(4242);
        for _ in 0..200 {
            let c1 = rng.point();
            let c2 = rng.point();
            // same sense: 90+90 = 180, always a rotation
            let f = Isometry::rotation(1, c1).compose(Isometry::rotation(1, c2));
            match f.classify() {
                IsoClass::Rotation { order: 2, center, .. } => {
                    assert_eq!(f.apply(center), center, "classified center must be fixed");
                }
                c => panic!("unexpected {c:?}"),
            }
            // opposite senses: 90-90 = 0, a translation (identity iff centers equal)
            let g = Isometry::rotation(1, c1).compose(Isometry::rotation(3, c2));
            match g.classify() {
                IsoClass::Translation(_) => assert_ne!(c1, c2),
                IsoClass::Identity => assert_eq!(c1, c2),
                c => panic!("unexpected {c:?}"),
            }
        }
    }
}
