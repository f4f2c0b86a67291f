//! Machine verification of the induced-symmetry tables, the periodicity
//! identities and the coverage statements: symbolic isometry algebra over
//! affine forms in the center coordinates (a, b), group closure modulo
//! translations, and an exact grid orbit oracle.

pub mod coverage;
pub mod tables;

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::exact::{frac, Fraction};

pub use coverage::{orbit_closure, verify_coverage, CoverageCase, CoverageReport, Region};

/// Affine form c + ca * a + cb * b with exact rational coefficients; the
/// symbols a and b stand for the coordinates of the order-4 center.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineScalar {
    pub c: Fraction,
    pub ca: Fraction,
    pub cb: Fraction,
}

impl AffineScalar {
    pub const ZERO: AffineScalar =
        AffineScalar { c: Fraction::ZERO, ca: Fraction::ZERO, cb: Fraction::ZERO };

    pub fn constant(v: Fraction) -> Self {
        AffineScalar { c: v, ca: Fraction::ZERO, cb: Fraction::ZERO }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_zero() && self.ca.is_zero() && self.cb.is_zero()
    }

    pub fn scale(self, k: Fraction) -> Self {
        AffineScalar { c: self.c * k, ca: self.ca * k, cb: self.cb * k }
    }

    pub fn half(self) -> Self {
        self.scale(frac(1, 2))
    }

    pub fn eval(&self, a: Fraction, b: Fraction) -> Fraction {
        self.c + self.ca * a + self.cb * b
    }

    pub fn is_constant(&self) -> bool {
        self.ca.is_zero() && self.cb.is_zero()
    }
}

impl Add for AffineScalar {
    type Output = AffineScalar;
    fn add(self, r: AffineScalar) -> AffineScalar {
        AffineScalar { c: self.c + r.c, ca: self.ca + r.ca, cb: self.cb + r.cb }
    }
}

impl Sub for AffineScalar {
    type Output = AffineScalar;
    fn sub(self, r: AffineScalar) -> AffineScalar {
        self + (-r)
    }
}

impl Neg for AffineScalar {
    type Output = AffineScalar;
    fn neg(self) -> AffineScalar {
        AffineScalar { c: -self.c, ca: -self.ca, cb: -self.cb }
    }
}

impl fmt::Debug for AffineScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if !self.c.is_zero() {
            parts.push(format!("{}", self.c));
        }
        if !self.ca.is_zero() {
            parts.push(format!("{}a", self.ca));
        }
        if !self.cb.is_zero() {
            parts.push(format!("{}b", self.cb));
        }
        if parts.is_empty() {
            parts.push("0".into());
        }
        write!(f, "{}", parts.join("+"))
    }
}

/// 2D point (or vector) with affine-form coordinates.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffinePoint {
    pub x: AffineScalar,
    pub y: AffineScalar,
}

impl AffinePoint {
    pub const ZERO: AffinePoint = AffinePoint { x: AffineScalar::ZERO, y: AffineScalar::ZERO };

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Quarter turn counterclockwise about the origin.
    pub fn rot90(self) -> AffinePoint {
        AffinePoint { x: -self.y, y: self.x }
    }

    pub fn rotk(self, k: u8) -> AffinePoint {
        let mut v = self;
        for _ in 0..k % 4 {
            v = v.rot90();
        }
        v
    }

    pub fn eval(&self, a: Fraction, b: Fraction) -> crate::exact::Point {
        crate::exact::point(self.x.eval(a, b), self.y.eval(a, b))
    }

    fn coords(&self) -> [Fraction; 6] {
        [self.x.c, self.x.ca, self.x.cb, self.y.c, self.y.ca, self.y.cb]
    }

    fn from_coords(c: [Fraction; 6]) -> AffinePoint {
        AffinePoint {
            x: AffineScalar { c: c[0], ca: c[1], cb: c[2] },
            y: AffineScalar { c: c[3], ca: c[4], cb: c[5] },
        }
    }
}

impl Add for AffinePoint {
    type Output = AffinePoint;
    fn add(self, r: AffinePoint) -> AffinePoint {
        AffinePoint { x: self.x + r.x, y: self.y + r.y }
    }
}

impl Sub for AffinePoint {
    type Output = AffinePoint;
    fn sub(self, r: AffinePoint) -> AffinePoint {
        AffinePoint { x: self.x - r.x, y: self.y - r.y }
    }
}

impl Neg for AffinePoint {
    type Output = AffinePoint;
    fn neg(self) -> AffinePoint {
        AffinePoint { x: -self.x, y: -self.y }
    }
}

impl fmt::Debug for AffinePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.x, self.y)
    }
}

/// Proper isometry with symbolic shift: z -> R^rot z + shift.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct AffineIsometry {
    pub rot: u8,
    pub shift: AffinePoint,
}

impl AffineIsometry {
    pub fn translation(v: AffinePoint) -> Self {
        AffineIsometry { rot: 0, shift: v }
    }

    pub fn rotation_about(k: u8, center: AffinePoint) -> Self {
        let k = k % 4;
        AffineIsometry { rot: k, shift: center - center.rotk(k) }
    }

    /// self after rhs.
    pub fn compose(self, rhs: AffineIsometry) -> AffineIsometry {
        AffineIsometry {
            rot: (self.rot + rhs.rot) % 4,
            shift: rhs.shift.rotk(self.rot) + self.shift,
        }
    }

    pub fn inverse(self) -> AffineIsometry {
        let k = (4 - self.rot) % 4;
        AffineIsometry { rot: k, shift: -self.shift.rotk(k) }
    }

    /// Fixed point of a nontrivial rotation, solving (I - R^k) c = shift.
    pub fn center(self) -> AffinePoint {
        let s = self.shift;
        match self.rot {
            1 => AffinePoint { x: (s.x - s.y).half(), y: (s.x + s.y).half() },
            2 => AffinePoint { x: s.x.half(), y: s.y.half() },
            3 => AffinePoint { x: (s.x + s.y).half(), y: (s.y - s.x).half() },
            _ => panic!("translations have no center"),
        }
    }
}

fn lcm64(a: i64, b: i64) -> i64 {
    fn gcd(mut a: i64, mut b: i64) -> i64 {
        while b != 0 {
            let t = b;
            b = a % b;
            a = t;
        }
        a.abs()
    }
    (a / gcd(a, b)).abs() * b.abs()
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        return (a.abs(), if a < 0 { -1 } else { 1 }, 0);
    }
    let (g, x, y) = ext_gcd(b, a % b);
    (g, y, x - (a / b) * y)
}

/// Z-module of affine vectors, kept as a Hermite-normal-form basis over the
/// common-denominator integer grid.
#[derive(Clone, Debug, Default)]
pub struct ZModule {
    gens: Vec<AffinePoint>,
    den: i64,
    rows: Vec<[i128; 6]>,
}

impl ZModule {
    pub fn new() -> Self {
        ZModule { gens: Vec::new(), den: 1, rows: Vec::new() }
    }

    pub fn from_generators(gens: &[AffinePoint]) -> Self {
        let mut m = ZModule::new();
        for g in gens {
            m.add(*g);
        }
        m
    }

    pub fn generators(&self) -> &[AffinePoint] {
        &self.gens
    }

    fn required_den(v: &AffinePoint) -> i64 {
        v.coords().iter().fold(1i64, |acc, f| lcm64(acc, f.denominator()))
    }

    fn scaled(v: &AffinePoint, den: i64) -> Option<[i128; 6]> {
        let mut out = [0i128; 6];
        for (slot, f) in out.iter_mut().zip(v.coords()) {
            let scaled = f * frac(den, 1);
            if !scaled.is_integer() {
                return None;
            }
            *slot = scaled.numerator() as i128;
        }
        Some(out)
    }

    fn rebuild(&mut self) {
        let den = self.gens.iter().fold(1i64, |acc, g| lcm64(acc, Self::required_den(g)));
        let mut rows: Vec<[i128; 6]> = Vec::new();
        for g in &self.gens {
            let v = Self::scaled(g, den).expect("den covers all generators");
            insert_row(&mut rows, v);
        }
        normalize_rows(&mut rows);
        self.den = den;
        self.rows = rows;
    }

    pub fn add(&mut self, v: AffinePoint) -> bool {
        if v.is_zero() || self.contains(v) {
            return false;
        }
        self.gens.push(v);
        self.rebuild();
        true
    }

    /// Rows of the basis at a common scale with `v`; None when `v` does not
    /// even live on the module's rational grid.
    fn aligned(&self, v: &AffinePoint) -> Option<(Vec<[i128; 6]>, [i128; 6])> {
        let den = lcm64(self.den, Self::required_den(v));
        let f = (den / self.den) as i128;
        let rows = self.rows.iter().map(|r| r.map(|x| x * f)).collect();
        Some((rows, Self::scaled(v, den)?))
    }

    pub fn contains(&self, v: AffinePoint) -> bool {
        if v.is_zero() {
            return true;
        }
        let Some((rows, mut w)) = self.aligned(&v) else { return false };
        for row in &rows {
            let col = pivot(row);
            if w[col] != 0 {
                if w[col] % row[col] != 0 {
                    return false;
                }
                let q = w[col] / row[col];
                for i in 0..6 {
                    w[i] -= q * row[i];
                }
            }
        }
        w == [0; 6]
    }

    /// Canonical representative of v modulo the module.
    pub fn reduce(&self, v: AffinePoint) -> AffinePoint {
        if self.rows.is_empty() {
            return v;
        }
        let den = lcm64(self.den, Self::required_den(&v));
        let f = (den / self.den) as i128;
        let mut w = Self::scaled(&v, den).expect("lcm clears denominators");
        for row in &self.rows {
            let row = row.map(|x| x * f);
            let col = pivot(&row);
            let q = w[col].div_euclid(row[col]);
            if q != 0 {
                for i in 0..6 {
                    w[i] -= q * row[i];
                }
            }
        }
        let denf = frac(den, 1);
        AffinePoint::from_coords([
            frac(w[0] as i64, 1) / denf,
            frac(w[1] as i64, 1) / denf,
            frac(w[2] as i64, 1) / denf,
            frac(w[3] as i64, 1) / denf,
            frac(w[4] as i64, 1) / denf,
            frac(w[5] as i64, 1) / denf,
        ])
    }

    pub fn module_eq(&self, other: &ZModule) -> bool {
        self.gens.iter().all(|g| other.contains(*g)) && other.gens.iter().all(|g| self.contains(*g))
    }

    /// Image of the module under an exact 2x2 matrix (row major).
    pub fn map(&self, m: [[Fraction; 2]; 2]) -> ZModule {
        let mapped: Vec<AffinePoint> = self
            .gens
            .iter()
            .map(|g| AffinePoint {
                x: g.x.scale(m[0][0]) + g.y.scale(m[0][1]),
                y: g.x.scale(m[1][0]) + g.y.scale(m[1][1]),
            })
            .collect();
        ZModule::from_generators(&mapped)
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

fn pivot(row: &[i128; 6]) -> usize {
    row.iter().position(|&x| x != 0).expect("zero row never stored")
}

fn insert_row(rows: &mut Vec<[i128; 6]>, mut v: [i128; 6]) {
    loop {
        if v == [0; 6] {
            return;
        }
        let col = pivot(&v);
        match rows.iter_mut().find(|r| pivot(r) == col) {
            None => {
                if v[col] < 0 {
                    v = v.map(|x| -x);
                }
                rows.push(v);
                rows.sort_by_key(pivot);
                return;
            }
            Some(row) => {
                let (g, xx, yy) = ext_gcd(row[col], v[col]);
                let (rq, vq) = (row[col] / g, v[col] / g);
                let mut nr = [0i128; 6];
                let mut nv = [0i128; 6];
                for i in 0..6 {
                    nr[i] = xx * row[i] + yy * v[i];
                    nv[i] = rq * v[i] - vq * row[i];
                }
                *row = nr;
                v = nv;
            }
        }
    }
}

#[allow(clippy::needless_range_loop)]
fn normalize_rows(rows: &mut [[i128; 6]]) {
    rows.sort_by_key(pivot);
    for j in (0..rows.len()).rev() {
        let pj = pivot(&rows[j]);
        let pivot_val = rows[j][pj];
        for i in 0..j {
            let q = rows[i][pj].div_euclid(pivot_val);
            if q != 0 {
                for col in 0..6 {
                    rows[i][col] -= q * rows[j][col];
                }
            }
        }
    }
}

/// The placement configurations whose induced symmetries the tables list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum LeftCase {
    A,
    B,
    C,
    D,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum BottomCase {
    E,
    F,
    G,
    H,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum PlacementCase {
    Left(LeftCase),
    Bottom(BottomCase),
    Corner(u8),
    Pair(LeftCase, BottomCase),
    PairCorner(LeftCase, BottomCase, u8),
    Df3(u8),
    Df33(u8),
}

impl fmt::Display for PlacementCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlacementCase::Left(x) => write!(f, "{x:?}"),
            PlacementCase::Bottom(y) => write!(f, "{y:?}"),
            PlacementCase::Corner(i) => write!(f, "c{i}"),
            PlacementCase::Pair(x, y) => write!(f, "{x:?}{y:?}"),
            PlacementCase::PairCorner(x, y, i) => write!(f, "{x:?}{y:?}{i}"),
            PlacementCase::Df3(i) => write!(f, "DF3{i}"),
            PlacementCase::Df33(i) => write!(f, "DF33{i}"),
        }
    }
}

impl PlacementCase {
    pub fn parse(s: &str) -> Option<PlacementCase> {
        let s = s.trim();
        let left = |c: char| match c {
            'A' => Some(LeftCase::A),
            'B' => Some(LeftCase::B),
            'C' => Some(LeftCase::C),
            'D' => Some(LeftCase::D),
            _ => None,
        };
        let bottom = |c: char| match c {
            'E' => Some(BottomCase::E),
            'F' => Some(BottomCase::F),
            'G' => Some(BottomCase::G),
            'H' => Some(BottomCase::H),
            _ => None,
        };
        let up = s.to_ascii_uppercase();
        let chars: Vec<char> = up.chars().collect();
        match chars.as_slice() {
            [c] => left(*c)
                .map(PlacementCase::Left)
                .or_else(|| bottom(*c).map(PlacementCase::Bottom)),
            ['C', i @ '1'..='4'] => Some(PlacementCase::Corner(*i as u8 - b'0')),
            [x, y] => Some(PlacementCase::Pair(left(*x)?, bottom(*y)?)),
            ['D', 'F', '3', i @ '1'..='4'] => Some(PlacementCase::Df3(*i as u8 - b'0')),
            ['D', 'F', '3', '3', i @ '1'..='4'] => Some(PlacementCase::Df33(*i as u8 - b'0')),
            [x, y, i @ '1'..='4'] => {
                Some(PlacementCase::PairCorner(left(*x)?, bottom(*y)?, *i as u8 - b'0'))
            }
            _ => None,
        }
    }
}

fn ints(x: i64, y: i64) -> AffinePoint {
    AffinePoint {
        x: AffineScalar::constant(frac(x, 1)),
        y: AffineScalar::constant(frac(y, 1)),
    }
}

/// Gluing isometry mapping the home tile onto the left cell for each way
/// A..D of locating it there (vertex correspondences of the orientation
/// table), and likewise for the other neighbor cells.
fn glue_left(x: LeftCase) -> AffineIsometry {
    match x {
        LeftCase::A => AffineIsometry::translation(ints(-1, 0)),
        LeftCase::B => AffineIsometry { rot: 3, shift: ints(-1, 1) },
        LeftCase::C => AffineIsometry { rot: 2, shift: ints(0, 1) },
        LeftCase::D => AffineIsometry { rot: 1, shift: ints(0, 0) },
    }
}

fn glue_bottom(y: BottomCase) -> AffineIsometry {
    match y {
        BottomCase::E => AffineIsometry::translation(ints(0, -1)),
        BottomCase::F => AffineIsometry { rot: 3, shift: ints(0, 0) },
        BottomCase::G => AffineIsometry { rot: 2, shift: ints(1, 0) },
        BottomCase::H => AffineIsometry { rot: 1, shift: ints(1, -1) },
    }
}

fn glue_corner(i: u8) -> AffineIsometry {
    match i {
        1 => AffineIsometry::translation(ints(-1, -1)),
        2 => AffineIsometry { rot: 3, shift: ints(-1, 0) },
        3 => AffineIsometry { rot: 2, shift: ints(0, 0) },
        4 => AffineIsometry { rot: 1, shift: ints(0, -1) },
        _ => panic!("corner index must be 1..=4"),
    }
}

fn glue_right(i: u8) -> AffineIsometry {
    match i {
        1 => AffineIsometry::translation(ints(1, 0)),
        2 => AffineIsometry { rot: 3, shift: ints(1, 1) },
        3 => AffineIsometry { rot: 2, shift: ints(2, 1) },
        4 => AffineIsometry { rot: 1, shift: ints(2, 0) },
        _ => panic!("right index must be 1..=4"),
    }
}

fn glue_bottom_right(i: u8) -> AffineIsometry {
    match i {
        1 => AffineIsometry::translation(ints(1, -1)),
        2 => AffineIsometry { rot: 3, shift: ints(1, 0) },
        3 => AffineIsometry { rot: 2, shift: ints(2, 0) },
        4 => AffineIsometry { rot: 1, shift: ints(2, -1) },
        _ => panic!("bottom-right index must be 1..=4"),
    }
}

/// The symbolic order-4 rotation about (a, b).
pub fn sigma0() -> AffineIsometry {
    let a = AffineScalar { c: Fraction::ZERO, ca: Fraction::ONE, cb: Fraction::ZERO };
    let b = AffineScalar { c: Fraction::ZERO, ca: Fraction::ZERO, cb: Fraction::ONE };
    AffineIsometry::rotation_about(1, AffinePoint { x: a, y: b })
}

fn induced(glue: AffineIsometry) -> AffineIsometry {
    glue.inverse().compose(sigma0())
}

/// Group generators induced on the tile by the case's neighbor placements.
pub fn generators(case: PlacementCase) -> Vec<AffineIsometry> {
    let s0 = sigma0();
    match case {
        PlacementCase::Left(x) => vec![s0, induced(glue_left(x))],
        PlacementCase::Bottom(y) => vec![s0, induced(glue_bottom(y))],
        PlacementCase::Corner(i) => vec![s0, induced(glue_corner(i))],
        PlacementCase::Pair(x, y) => {
            vec![s0, induced(glue_left(x)), induced(glue_bottom(y))]
        }
        PlacementCase::PairCorner(x, y, i) => vec![
            s0,
            induced(glue_left(x)),
            induced(glue_bottom(y)),
            induced(glue_corner(i)),
        ],
        PlacementCase::Df3(i) => vec![
            s0,
            induced(glue_left(LeftCase::D)),
            induced(glue_bottom(BottomCase::F)),
            induced(glue_corner(3)),
            induced(glue_right(i)),
        ],
        PlacementCase::Df33(i) => vec![
            s0,
            induced(glue_left(LeftCase::D)),
            induced(glue_bottom(BottomCase::F)),
            induced(glue_corner(3)),
            induced(glue_right(3)),
            induced(glue_bottom_right(i)),
        ],
    }
}

/// The closure of a placement case: rotation classes modulo translations and
/// the generated translation module.
#[derive(Clone, Debug)]
pub struct InducedSet {
    /// canonical order-4 centers, one per class modulo the center module
    pub order4: Vec<AffinePoint>,
    /// canonical centers of order 2 that are not order-4 centers, one per
    /// class modulo the center module
    pub order2: Vec<AffinePoint>,
    /// every half-turn point class modulo half the translation module,
    /// including those implied by order-4 centers
    pub half_turns: Vec<AffinePoint>,
    pub translations: ZModule,
    /// (I - R90)^-1 of the translation module: the order-4 center lattice
    pub center_module: ZModule,
    /// half of the translation module (the half-turn point grid)
    pub half_module: ZModule,
}

impl InducedSet {
    pub fn contains_order4(&self, c: AffinePoint) -> bool {
        let r = self.center_module.reduce(c);
        self.order4.contains(&r)
    }

    /// Point carries an order-2 rotation but no order-4 rotation.
    pub fn contains_order2_only(&self, c: AffinePoint) -> bool {
        let r = self.center_module.reduce(c);
        self.order2.contains(&r)
    }

    /// Point carries a half-turn of the closure (possibly as the square of
    /// an order-4 rotation).
    pub fn contains_half_turn(&self, c: AffinePoint) -> bool {
        let r = self.half_module.reduce(c);
        self.half_turns.contains(&r)
    }

    pub fn contains_translation(&self, v: AffinePoint) -> bool {
        self.translations.contains(v)
    }
}

fn half_matrix() -> [[Fraction; 2]; 2] {
    [[frac(1, 2), Fraction::ZERO], [Fraction::ZERO, frac(1, 2)]]
}

fn inv_i_minus_r90() -> [[Fraction; 2]; 2] {
    // (I - R90)^-1 = 1/2 [[1, -1], [1, 1]]
    [[frac(1, 2), frac(-1, 2)], [frac(1, 2), frac(1, 2)]]
}

/// Close the generated group: collect rotation classes modulo the growing
/// translation module until nothing new appears.
pub fn closure(gens: &[AffineIsometry]) -> InducedSet {
    let mut trans = ZModule::new();
    let mut raw: Vec<(u8, AffinePoint)> = Vec::new();
    let absorb = |e: AffineIsometry, trans: &mut ZModule, raw: &mut Vec<(u8, AffinePoint)>| {
        if e.rot == 0 {
            if trans.add(e.shift) {
                trans.add(e.shift.rot90());
                return true;
            }
            false
        } else {
            raw.push((e.rot, e.center()));
            true
        }
    };
    for g in gens {
        absorb(*g, &mut trans, &mut raw);
        absorb(g.inverse(), &mut trans, &mut raw);
    }
    for _round in 0..64 {
        let m1 = trans.map(inv_i_minus_r90());
        let m2 = trans.map(half_matrix());
        let reduce_k = |k: u8, c: AffinePoint| -> AffinePoint {
            match k {
                2 => m2.reduce(c),
                _ => m1.reduce(c),
            }
        };
        let classes: BTreeSet<(u8, AffinePoint)> =
            raw.iter().map(|(k, c)| (*k, reduce_k(*k, *c))).collect();
        let reps: Vec<AffineIsometry> = classes
            .iter()
            .map(|(k, c)| AffineIsometry::rotation_about(*k, *c))
            .collect();
        let mut changed = false;
        for f in &reps {
            for g in &reps {
                let h = f.compose(*g);
                if h.rot == 0 {
                    if !h.shift.is_zero() && !trans.contains(h.shift) {
                        trans.add(h.shift);
                        trans.add(h.shift.rot90());
                        changed = true;
                    }
                } else {
                    let c = h.center();
                    if !classes.contains(&(h.rot, reduce_k(h.rot, c))) {
                        raw.push((h.rot, c));
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            let order4: BTreeSet<AffinePoint> = classes
                .iter()
                .filter(|(k, _)| *k == 1 || *k == 3)
                .map(|(_, c)| m1.reduce(*c))
                .collect();
            // every half-turn element acts at the points c + Lambda/2, which
            // split into two cosets of the order-4 center lattice; the coset
            // carrying no order-4 center is an order-2-only point class
            let offset = m2
                .generators()
                .iter()
                .copied()
                .find(|w| !m1.contains(*w));
            let mut order2: BTreeSet<AffinePoint> = BTreeSet::new();
            let mut half_turns: BTreeSet<AffinePoint> = BTreeSet::new();
            for (k, c) in &classes {
                if *k != 2 {
                    continue;
                }
                half_turns.insert(m2.reduce(*c));
                order2.insert(m1.reduce(*c));
                if let Some(w) = offset {
                    order2.insert(m1.reduce(*c + w));
                }
            }
            for c in &order4 {
                half_turns.insert(m2.reduce(*c));
            }
            let order2: BTreeSet<AffinePoint> =
                order2.difference(&order4).copied().collect();
            return InducedSet {
                order4: order4.into_iter().collect(),
                order2: order2.into_iter().collect(),
                half_turns: half_turns.into_iter().collect(),
                translations: trans.clone(),
                center_module: m1,
                half_module: m2,
            };
        }
    }
    panic!("closure did not stabilize");
}

/// Induced symmetries of a placement case (the table data, computed).
pub fn induced_symmetries(case: PlacementCase) -> InducedSet {
    closure(&generators(case))
}


#[cfg(test)]
mod instantiation_tests {
    use super::tables::{all_tables, verify_case_table_at};
    use crate::exact::frac;

    #[test]
    fn table_rows_instantiate_soundly_at_rational_parameters() {
        // three admissible rational centers, hitting distinct denominators
        let samples = [
            (frac(1, 3), frac(1, 6)),
            (frac(2, 5), frac(1, 5)),
            (frac(3, 7), frac(2, 9)),
        ];
        for table in all_tables() {
            for (a, b) in samples {
                let check = verify_case_table_at(&table, a, b);
                assert!(check.ok(), "{}: {:?}", check.name, check.failures);
            }
        }
    }
}
