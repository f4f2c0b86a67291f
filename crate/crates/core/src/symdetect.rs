//! Symmetry detection for label rasters: full translation lattice, rotation
//! centers, reflection and glide axes, and the wallpaper-group name among the
//! twelve groups realizable on a square cell raster.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::exact::{frac, point, Axis, AxisDir, Dihedral, Fraction, IsoClass, Isometry, Point};
use crate::motif::{MotifGrid, PeriodicRaster};

/// Rank-2 rational lattice with a canonical (Hermite-form) basis
/// b1 = (a, k), b2 = (0, c), a > 0, c > 0, 0 <= k < c.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice2 {
    pub b1: Point,
    pub b2: Point,
}

fn int_gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = b;
        b = a % b;
        a = t;
    }
    a
}

fn lcm64(a: i64, b: i64) -> i64 {
    a / int_gcd(a as i128, b as i128) as i64 * b
}

impl Lattice2 {
    /// Hermite basis of the lattice generated by the given rational vectors.
    /// Returns None when the span has rank below two.
    pub fn from_generators(gens: &[Point]) -> Option<Lattice2> {
        let mut den: i64 = 1;
        for g in gens {
            den = lcm64(den, lcm64(g.x.denominator(), g.y.denominator()));
        }
        let denf = frac(den, 1);
        let mut rows: Vec<(i128, i128)> = gens
            .iter()
            .map(|g| (((g.x * denf).numerator()) as i128, ((g.y * denf).numerator()) as i128))
            .filter(|v| *v != (0, 0))
            .collect();
        // eliminate x-components down to a single pivot row
        loop {
            rows.sort_by_key(|&(x, _)| if x == 0 { i128::MAX } else { x.abs() });
            let nx = rows.iter().filter(|&&(x, _)| x != 0).count();
            if nx <= 1 {
                break;
            }
            let (px, py) = rows[0];
            for row in rows.iter_mut().skip(1) {
                if row.0 != 0 {
                    let q = row.0.div_euclid(px);
                    row.0 -= q * px;
                    row.1 -= q * py;
                }
            }
            rows.retain(|v| *v != (0, 0));
        }
        let pivot = rows.iter().copied().find(|&(x, _)| x != 0)?;
        let mut c: i128 = 0;
        for &(x, y) in &rows {
            if x == 0 {
                c = int_gcd(c, y);
            }
        }
        if c == 0 {
            return None;
        }
        let (a, mut k) = (pivot.0.abs(), if pivot.0 < 0 { -pivot.1 } else { pivot.1 });
        k = k.rem_euclid(c);
        Some(Lattice2 {
            b1: point(frac(a as i64, den), frac(k as i64, den)),
            b2: point(Fraction::ZERO, frac(c as i64, den)),
        })
    }

    /// Canonical representative of p modulo the lattice, inside the
    /// half-open fundamental cell.
    pub fn reduce(&self, p: Point) -> Point {
        let t1 = (p.x / self.b1.x).floor();
        let p = p - self.b1.scale(frac(t1, 1));
        let t2 = (p.y / self.b2.y).floor();
        p - self.b2.scale(frac(t2, 1))
    }

    pub fn contains(&self, p: Point) -> bool {
        self.reduce(p).is_zero()
    }

    /// Generator of the scalar group { f(v) : v in lattice } for a linear
    /// functional given by its values on the basis.
    fn scalar_group(&self, f1: Fraction, f2: Fraction) -> Fraction {
        rational_gcd(f1, f2)
    }

    fn normal_values(&self, dir: AxisDir) -> (Fraction, Fraction) {
        let f = |v: Point| match dir {
            AxisDir::Horizontal => v.y,
            AxisDir::Vertical => v.x,
            AxisDir::DiagUp => v.y - v.x,
            AxisDir::DiagDown => v.y + v.x,
        };
        (f(self.b1), f(self.b2))
    }

    /// Spacing of the family of lattice-equivalent axes of this direction.
    pub fn axis_spacing(&self, dir: AxisDir) -> Fraction {
        let (f1, f2) = self.normal_values(dir);
        self.scalar_group(f1, f2)
    }

    /// Primitive lattice vector in the kernel of the functional given by its
    /// values on the basis.
    fn kernel_vector(&self, f1: Fraction, f2: Fraction) -> Point {
        let den = lcm64(f1.denominator(), f2.denominator());
        let p1 = (f1 * frac(den, 1)).numerator() as i128;
        let p2 = (f2 * frac(den, 1)).numerator() as i128;
        let g = int_gcd(p1, p2).max(1);
        let (alpha, beta) = ((-p2 / g) as i64, (p1 / g) as i64);
        if (alpha, beta) == (0, 0) {
            self.b1
        } else {
            self.b1.scale(frac(alpha, 1)) + self.b2.scale(frac(beta, 1))
        }
    }

    /// Primitive lattice vector parallel to the direction.
    pub fn parallel_vector(&self, dir: AxisDir) -> Point {
        let (f1, f2) = self.normal_values(dir);
        self.kernel_vector(f1, f2)
    }

    /// Primitive lattice vector perpendicular to the direction.
    pub fn perpendicular_vector(&self, dir: AxisDir) -> Point {
        let fp = |v: Point| match dir {
            AxisDir::Horizontal => v.x,
            AxisDir::Vertical => v.y,
            AxisDir::DiagUp => v.x + v.y,
            AxisDir::DiagDown => v.x - v.y,
        };
        self.kernel_vector(fp(self.b1), fp(self.b2))
    }

    /// Primitive parallel translation as the scalar s with vector =
    /// s * dir.direction().
    pub fn parallel_step(&self, dir: AxisDir) -> Fraction {
        let v = self.parallel_vector(dir);
        let s = match dir {
            AxisDir::Vertical => v.y,
            _ => v.x,
        };
        s.abs()
    }

    /// Whether the lattice is centered with respect to the axis frame of the
    /// direction: the primitive parallel and perpendicular vectors span a
    /// proper sublattice.
    pub fn centered_for(&self, dir: AxisDir) -> bool {
        let vpar = self.parallel_vector(dir);
        let vperp = self.perpendicular_vector(dir);
        match Lattice2::from_generators(&[vpar, vperp]) {
            Some(sub) => !(sub.contains(self.b1) && sub.contains(self.b2)),
            None => false,
        }
    }
}

fn rational_gcd(a: Fraction, b: Fraction) -> Fraction {
    if a.is_zero() {
        return b.abs();
    }
    if b.is_zero() {
        return a.abs();
    }
    let den = lcm64(a.denominator(), b.denominator());
    let an = (a * frac(den, 1)).numerator() as i128;
    let bn = (b * frac(den, 1)).numerator() as i128;
    frac(int_gcd(an, bn) as i64, den)
}

fn reduce_mod(v: Fraction, g: Fraction) -> Fraction {
    if g.is_zero() {
        return v;
    }
    v - g * frac((v / g).floor(), 1)
}

/// A glide reflection: axis plus nonzero shift parallel to it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GlideSpec {
    pub axis: Axis,
    pub shift: Point,
}

/// Everything the detector found, reduced modulo the translation lattice and
/// expressed in tile units. Deterministically ordered for golden files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetrySummary {
    pub translations: [Point; 2],
    pub order4: Vec<Point>,
    pub order2: Vec<Point>,
    pub mirrors: Vec<Axis>,
    pub glides: Vec<GlideSpec>,
}

/// One of the twelve wallpaper groups compatible with a square cell raster.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WallpaperGroup {
    P1,
    P2,
    Pm,
    Pg,
    Cm,
    P2mm,
    P2mg,
    P2gg,
    C2mm,
    P4,
    P4mm,
    P4gm,
}

impl WallpaperGroup {
    pub fn name(&self) -> &'static str {
        match self {
            WallpaperGroup::P1 => "p1",
            WallpaperGroup::P2 => "p2",
            WallpaperGroup::Pm => "pm",
            WallpaperGroup::Pg => "pg",
            WallpaperGroup::Cm => "cm",
            WallpaperGroup::P2mm => "p2mm",
            WallpaperGroup::P2mg => "p2mg",
            WallpaperGroup::P2gg => "p2gg",
            WallpaperGroup::C2mm => "c2mm",
            WallpaperGroup::P4 => "p4",
            WallpaperGroup::P4mm => "p4mm",
            WallpaperGroup::P4gm => "p4gm",
        }
    }
}

impl std::fmt::Display for WallpaperGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

fn shift_invariant(raster: &PeriodicRaster, dx: i64, dy: i64) -> bool {
    let m = raster.period() as i64;
    for y in 0..m {
        for x in 0..m {
            if raster.get(x, y) != raster.get(x + dx, y + dy) {
                return false;
            }
        }
    }
    true
}

/// Basis of the full translation symmetry lattice of the raster, tile units.
pub fn minimal_translations(raster: &PeriodicRaster) -> Lattice2 {
    let m = raster.period() as i64;
    let cpu = frac(raster.cells_per_unit() as i64, 1);
    let mut gens: Vec<Point> = vec![Point::ints(m, 0), Point::ints(0, m)];
    for dy in 0..m {
        for dx in 0..m {
            if (dx, dy) != (0, 0) && shift_invariant(raster, dx, dy) {
                gens.push(Point::ints(dx, dy));
            }
        }
    }
    let lat = Lattice2::from_generators(&gens).expect("period vectors give rank 2");
    Lattice2 {
        b1: point(lat.b1.x / cpu, lat.b1.y / cpu),
        b2: point(lat.b2.x / cpu, lat.b2.y / cpu),
    }
}

/// All isometries of the raster with linear part in the dihedral group and
/// cell-aligned shift, one representative per translation coset, tile units.
pub fn raster_symmetries(raster: &PeriodicRaster) -> Vec<Isometry> {
    let m = raster.period() as i64;
    let cpu = frac(raster.cells_per_unit() as i64, 1);
    let mut out = Vec::new();
    for linear in Dihedral::all() {
        let [a, b, c, d] = linear.matrix();
        for ty in 0..m {
            for tx in 0..m {
                let mut ok = true;
                'cells: for y in 0..m {
                    for x in 0..m {
                        // cell centers map to cell centers: 2c' = L(2c) + 2t
                        let u = a * (2 * x + 1) + c * (2 * y + 1) + 2 * tx;
                        let v = b * (2 * x + 1) + d * (2 * y + 1) + 2 * ty;
                        let xi = (u - 1).div_euclid(2);
                        let yi = (v - 1).div_euclid(2);
                        if raster.get(xi, yi) != raster.get(x, y) {
                            ok = false;
                            break 'cells;
                        }
                    }
                }
                if ok {
                    out.push(Isometry {
                        linear,
                        shift: point(frac(tx, 1) / cpu, frac(ty, 1) / cpu),
                    });
                }
            }
        }
    }
    out
}

/// Detect every symmetry of the raster and summarize it, reduced modulo the
/// translation lattice.
pub fn detect_symmetries(raster: &PeriodicRaster) -> SymmetrySummary {
    let lat = minimal_translations(raster);
    let isometries = raster_symmetries(raster);
    summarize(&lat, &isometries)
}

fn summarize(lat: &Lattice2, isometries: &[Isometry]) -> SymmetrySummary {
    let mut order4: BTreeSet<Point> = BTreeSet::new();
    let mut order2: BTreeSet<Point> = BTreeSet::new();
    let mut mirrors: BTreeSet<Axis> = BTreeSet::new();
    let mut glides: BTreeSet<GlideSpec> = BTreeSet::new();
    for iso in isometries {
        match iso.classify() {
            IsoClass::Rotation { order: 4, center, .. } => {
                order4.insert(lat.reduce(center));
            }
            IsoClass::Rotation { order: 2, center, .. } => {
                order2.insert(lat.reduce(center));
            }
            IsoClass::Reflection(axis) => {
                let g = lat.axis_spacing(axis.dir);
                mirrors.insert(Axis::new(axis.dir, reduce_mod(axis.offset, g)));
            }
            IsoClass::Glide { axis, shift } => {
                let g = lat.axis_spacing(axis.dir);
                let reduced_axis = Axis::new(axis.dir, reduce_mod(axis.offset, g));
                let step = lat.parallel_step(axis.dir);
                let scalar = match axis.dir {
                    AxisDir::Vertical => shift.y,
                    _ => shift.x,
                };
                let reduced = reduce_mod(scalar, step);
                if !reduced.is_zero() {
                    let d = axis.dir.direction();
                    glides.insert(GlideSpec { axis: reduced_axis, shift: d.scale(reduced) });
                }
            }
            _ => {}
        }
    }
    // drop glides sitting on mirror axes and order-2 centers implied by order-4
    let glides: BTreeSet<GlideSpec> =
        glides.into_iter().filter(|g| !mirrors.contains(&g.axis)).collect();
    let order2: BTreeSet<Point> = order2.difference(&order4).copied().collect();
    SymmetrySummary {
        translations: [lat.b1, lat.b2],
        order4: order4.into_iter().collect(),
        order2: order2.into_iter().collect(),
        mirrors: mirrors.into_iter().collect(),
        glides: glides.into_iter().collect(),
    }
}

fn center_on_mirror(lat: &Lattice2, c: Point, axis: &Axis) -> bool {
    let val = match axis.dir {
        AxisDir::Horizontal => c.y,
        AxisDir::Vertical => c.x,
        AxisDir::DiagUp => c.y - c.x,
        AxisDir::DiagDown => c.y + c.x,
    };
    let g = lat.axis_spacing(axis.dir);
    reduce_mod(val - axis.offset, g).is_zero()
}

/// Name the wallpaper group of a detected summary.
pub fn wallpaper_group(summary: &SymmetrySummary) -> WallpaperGroup {
    let lat = Lattice2 { b1: summary.translations[0], b2: summary.translations[1] };
    let has4 = !summary.order4.is_empty();
    let has2 = has4 || !summary.order2.is_empty();
    let mirror_dirs: BTreeSet<AxisDir> = summary.mirrors.iter().map(|m| m.dir).collect();
    let has_glides = !summary.glides.is_empty();
    if has4 {
        if summary.mirrors.is_empty() {
            return WallpaperGroup::P4;
        }
        let all_on = summary
            .order4
            .iter()
            .all(|c| summary.mirrors.iter().any(|m| center_on_mirror(&lat, *c, m)));
        return if all_on { WallpaperGroup::P4mm } else { WallpaperGroup::P4gm };
    }
    if has2 {
        return match mirror_dirs.len() {
            0 => {
                if has_glides {
                    WallpaperGroup::P2gg
                } else {
                    WallpaperGroup::P2
                }
            }
            1 => WallpaperGroup::P2mg,
            _ => {
                let dir = *mirror_dirs.iter().next().unwrap();
                if lat.centered_for(dir) {
                    WallpaperGroup::C2mm
                } else {
                    WallpaperGroup::P2mm
                }
            }
        };
    }
    if let Some(m) = summary.mirrors.first() {
        return if lat.centered_for(m.dir) { WallpaperGroup::Cm } else { WallpaperGroup::Pm };
    }
    if has_glides {
        WallpaperGroup::Pg
    } else {
        WallpaperGroup::P1
    }
}

/// Partial symmetries of a single tile: every dihedral isometry with
/// cell-aligned shift whose overlap with the tile contains a full 2x2 cell
/// block, matching labels on the whole overlap. The block requirement keeps
/// one-dimensional strip overlaps (rows mapped onto columns through a corner)
/// out of the summary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TileSummary {
    pub order4: Vec<Point>,
    pub order2: Vec<Point>,
    pub mirrors: Vec<Axis>,
    pub glides: Vec<GlideSpec>,
    pub translations: Vec<Point>,
}

pub fn tile_symmetries(tile: &MotifGrid) -> TileSummary {
    let n = tile.size() as i64;
    let nf = frac(n, 1);
    let mut order4: BTreeSet<Point> = BTreeSet::new();
    let mut order2: BTreeSet<Point> = BTreeSet::new();
    let mut mirrors: BTreeSet<Axis> = BTreeSet::new();
    let mut glides: BTreeSet<GlideSpec> = BTreeSet::new();
    let mut translations: BTreeSet<Point> = BTreeSet::new();
    let mut overlap = vec![false; (n * n) as usize];
    for linear in Dihedral::all() {
        let [a, b, c, d] = linear.matrix();
        for ty in -2 * n..=2 * n {
            for tx in -2 * n..=2 * n {
                if linear.is_identity() && (tx, ty) == (0, 0) {
                    continue;
                }
                overlap.iter_mut().for_each(|v| *v = false);
                let mut ok = true;
                'cells: for y in 0..n {
                    for x in 0..n {
                        let u = a * (2 * x + 1) + c * (2 * y + 1) + 2 * tx;
                        let v = b * (2 * x + 1) + d * (2 * y + 1) + 2 * ty;
                        let xi = (u - 1).div_euclid(2);
                        let yi = (v - 1).div_euclid(2);
                        if xi < 0 || xi >= n || yi < 0 || yi >= n {
                            continue;
                        }
                        overlap[(y * n + x) as usize] = true;
                        if tile.get(xi as usize, yi as usize) != tile.get(x as usize, y as usize) {
                            ok = false;
                            break 'cells;
                        }
                    }
                }
                if !ok || !has_full_block(&overlap, n as usize) {
                    continue;
                }
                let iso = Isometry { linear, shift: point(frac(tx, 1) / nf, frac(ty, 1) / nf) };
                match iso.classify() {
                    IsoClass::Rotation { order: 4, center, .. } => {
                        order4.insert(center);
                    }
                    IsoClass::Rotation { order: 2, center, .. } => {
                        order2.insert(center);
                    }
                    IsoClass::Reflection(axis) => {
                        mirrors.insert(axis);
                    }
                    IsoClass::Glide { axis, shift } => {
                        glides.insert(GlideSpec { axis, shift });
                    }
                    IsoClass::Translation(v) => {
                        translations.insert(v);
                    }
                    IsoClass::Identity | IsoClass::Rotation { .. } => {}
                }
            }
        }
    }
    let order2: BTreeSet<Point> = order2.difference(&order4).copied().collect();
    TileSummary {
        order4: order4.into_iter().collect(),
        order2: order2.into_iter().collect(),
        mirrors: mirrors.into_iter().collect(),
        glides: glides.into_iter().collect(),
        translations: translations.into_iter().collect(),
    }
}

fn has_full_block(overlap: &[bool], n: usize) -> bool {
    for y in 0..n.saturating_sub(1) {
        for x in 0..n.saturating_sub(1) {
            if overlap[y * n + x]
                && overlap[y * n + x + 1]
                && overlap[(y + 1) * n + x]
                && overlap[(y + 1) * n + x + 1]
            {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::motif::{
        exception_motif, random_grid, ExceptionVariant, MirrorVariant, PeriodicRaster,
    };

    fn pt(a: (i64, i64), b: (i64, i64)) -> Point {
        point(frac(a.0, a.1), frac(b.0, b.1))
    }

    #[test]
    fn lattice_basics() {
        let lat = Lattice2::from_generators(&[Point::ints(2, 0), Point::ints(0, 2), Point::ints(1, 1)])
            .unwrap();
        assert!(lat.contains(Point::ints(1, 1)));
        assert!(lat.contains(Point::ints(2, 0)));
        assert!(!lat.contains(Point::ints(1, 0)));
        assert_eq!(lat.reduce(Point::ints(5, 3)), Point::ORIGIN);
        assert_eq!(lat.reduce(Point::ints(2, 1)), Point::ints(0, 1));
    }

    #[test]
    fn constant_raster_has_unit_cell_translations() {
        let raster = PeriodicRaster::new(4, 4, vec![7; 16]);
        let lat = minimal_translations(&raster);
        assert!(lat.contains(pt((1, 4), (0, 1))));
        assert!(lat.contains(pt((0, 1), (1, 4))));
        let summary = detect_symmetries(&raster);
        assert!(!summary.order4.is_empty());
        assert_eq!(wallpaper_group(&summary), WallpaperGroup::P4mm);
    }

    #[test]
    fn asymmetric_tile_assembly_is_p1() {
        let tile = random_grid(4, 5, 0, 1000);
        let raster = PeriodicRaster::from_tile(&tile);
        let summary = detect_symmetries(&raster);
        assert!(summary.order4.is_empty());
        assert!(summary.order2.is_empty());
        assert!(summary.mirrors.is_empty());
        assert_eq!(wallpaper_group(&summary), WallpaperGroup::P1);
        let lat = Lattice2 { b1: summary.translations[0], b2: summary.translations[1] };
        assert!(lat.contains(Point::ints(1, 0)));
        assert!(!lat.contains(pt((1, 2), (1, 2))));
    }

    #[test]
    fn opposite_translation_tile_has_diagonal_lattice() {
        let tile =
            exception_motif(ExceptionVariant::OppositeTranslation, MirrorVariant::Plain, 8, 3)
                .unwrap();
        let raster = PeriodicRaster::from_tile(&tile);
        let lat = minimal_translations(&raster);
        assert!(lat.contains(pt((1, 2), (1, 2))), "expected (1/2,1/2) invariance");
        assert!(lat.contains(pt((1, 2), (-1, 2))));
    }

    #[test]
    fn group_law_closure_on_detected_symmetries() {
        let tile = exception_motif(ExceptionVariant::OppositeCenters, MirrorVariant::Plain, 8, 9)
            .unwrap();
        let raster = PeriodicRaster::from_tile(&tile);
        let lat = minimal_translations(&raster);
        let syms = raster_symmetries(&raster);
        assert!(!syms.is_empty());
        for f in &syms {
            for g in &syms {
                let h = f.compose(*g);
                let found = syms.iter().any(|s| {
                    s.linear == h.linear && lat.contains(h.shift - s.shift)
                });
                assert!(found, "composition escaped the detected set");
            }
        }
    }

    #[test]
    fn nery_tile_partial_symmetries_match_expected() {
        // The defining data (order-4 at two adjacent edge midpoints, order-2
        // at the quarter centers, main-diagonal mirror) forces the rest of
        // this list: quarter-diagonal mirror segments, the half-diagonal
        // translation between the two equal quarters, and the midline glides.
        let tile = crate::motif::nery_motif(8, 12345).unwrap();
        let summary = tile_symmetries(&tile);
        let half = frac(1, 2);
        assert_eq!(
            summary.order4,
            vec![point(Fraction::ZERO, half), point(half, Fraction::ZERO)]
        );
        assert_eq!(
            summary.order2,
            vec![
                pt((1, 4), (1, 4)),
                pt((1, 4), (3, 4)),
                pt((3, 4), (1, 4)),
                pt((3, 4), (3, 4)),
            ]
        );
        assert_eq!(
            summary.mirrors,
            vec![
                Axis::new(AxisDir::DiagUp, frac(-1, 2)),
                Axis::new(AxisDir::DiagUp, Fraction::ZERO),
                Axis::new(AxisDir::DiagUp, half),
                Axis::new(AxisDir::DiagDown, half),
                Axis::new(AxisDir::DiagDown, frac(3, 2)),
            ]
        );
        assert_eq!(summary.glides.len(), 6);
        assert_eq!(summary.translations, vec![pt((-1, 2), (1, 2)), pt((1, 2), (-1, 2))]);
        // a second seed gives the same structural summary
        let other = tile_symmetries(&crate::motif::nery_motif(8, 777).unwrap());
        assert_eq!(summary, other);
    }

    #[test]
    fn opposite_exception_partial_symmetries() {
        let tile =
            exception_motif(ExceptionVariant::OppositeCenters, MirrorVariant::Plain, 8, 77).unwrap();
        let summary = tile_symmetries(&tile);
        let half = frac(1, 2);
        assert_eq!(
            summary.order4,
            vec![point(half, Fraction::ZERO), point(half, Fraction::ONE)]
        );
        assert_eq!(summary.order2.len(), 4);
        assert!(summary.translations.is_empty());

        let tile =
            exception_motif(ExceptionVariant::OppositeTranslation, MirrorVariant::Plain, 8, 78)
                .unwrap();
        let summary = tile_symmetries(&tile);
        assert_eq!(
            summary.order4,
            vec![point(half, Fraction::ZERO), point(half, Fraction::ONE)]
        );
        assert!(summary.order2.is_empty());
        assert_eq!(
            summary.translations,
            vec![
                pt((-1, 2), (-1, 2)),
                pt((-1, 2), (1, 2)),
                pt((1, 2), (-1, 2)),
                pt((1, 2), (1, 2)),
            ]
        );
    }
}
