//! Discrete motifs: label grids standing in for tile drawings, synthesis of
//! fourfold patterns from a seed, tile extraction, dihedral placements and
//! doubly periodic assemblies.

use std::fmt::Write as _;

use thiserror::Error;

use crate::exact::{frac, point, Dihedral, Point};
use crate::lattice::{tile_to_pattern, LatticeError, TileClass};

/// Square grid of opaque labels. Cell (x, y) has x growing rightwards and y
/// growing upwards; the text format stores the top row first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MotifGrid {
    n: usize,
    cells: Vec<u16>,
}

/// One of the eight ways to place a tile in a cell: `rot` quarter turns
/// counterclockwise, after an optional flip across the horizontal midline.
pub type Placement = Dihedral;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MotifError {
    #[error("grid sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("resolution {res} is not a positive multiple of {required}")]
    BadResolution { res: usize, required: usize },
    #[error("class {0} is not cut from a fourfold pattern; use an exception builder")]
    NotAPatternCut(String),
    #[error("motif parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

impl MotifGrid {
    pub fn new(n: usize, cells: Vec<u16>) -> Self {
        assert_eq!(cells.len(), n * n, "cell count must be n*n");
        MotifGrid { n, cells }
    }

    pub fn filled(n: usize, label: u16) -> Self {
        MotifGrid { n, cells: vec![label; n * n] }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, x: usize, y: usize) -> u16 {
        self.cells[y * self.n + x]
    }

    pub fn set(&mut self, x: usize, y: usize, v: u16) {
        self.cells[y * self.n + x] = v;
    }

    pub fn cells(&self) -> &[u16] {
        &self.cells
    }

    /// Parse the plain-text motif format: first line N, then N rows of N
    /// labels, top row first.
    pub fn parse(text: &str) -> Result<Self, MotifError> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| MotifError::Parse("empty motif file".into()))?
            .trim()
            .parse()
            .map_err(|e| MotifError::Parse(format!("bad size line: {e}")))?;
        if n == 0 {
            return Err(MotifError::Parse("size must be positive".into()));
        }
        let mut grid = MotifGrid::filled(n, 0);
        for row in 0..n {
            let line = lines
                .next()
                .ok_or_else(|| MotifError::Parse(format!("missing row {row}")))?;
            let values: Vec<u16> = line
                .split_whitespace()
                .map(|v| v.parse().map_err(|e| MotifError::Parse(format!("bad label {v:?}: {e}"))))
                .collect::<Result<_, _>>()?;
            if values.len() != n {
                return Err(MotifError::Parse(format!(
                    "row {row} has {} labels, expected {n}",
                    values.len()
                )));
            }
            for (x, v) in values.into_iter().enumerate() {
                grid.set(x, n - 1 - row, v);
            }
        }
        Ok(grid)
    }

    pub fn emit(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}", self.n);
        for row in 0..self.n {
            let y = self.n - 1 - row;
            let line: Vec<String> = (0..self.n).map(|x| self.get(x, y).to_string()).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        out
    }
}

/// Apply a dihedral placement to a tile grid. Cells permute exactly; applying
/// a placement and then its inverse restores the grid.
pub fn dihedral_transform(tile: &MotifGrid, placement: Placement) -> MotifGrid {
    let n = tile.n;
    let mut out = MotifGrid::filled(n, 0);
    for y in 0..n {
        for x in 0..n {
            // image of cell (x, y) under the placement, about the grid center
            let (mx, my) = if placement.mirror { (x, n - 1 - y) } else { (x, y) };
            let (mut cx, mut cy) = (mx, my);
            for _ in 0..placement.rot {
                let (nx, ny) = (n - 1 - cy, cx);
                cx = nx;
                cy = ny;
            }
            out.set(cx, cy, tile.get(x, y));
        }
    }
    out
}

/// Doubly periodic raster of labels: an M x M fundamental block repeated with
/// axis-aligned period vectors. `cells_per_unit` fixes the tile-unit scale.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodicRaster {
    period: usize,
    cells_per_unit: usize,
    cells: Vec<u16>,
}

impl PeriodicRaster {
    pub fn new(period: usize, cells_per_unit: usize, cells: Vec<u16>) -> Self {
        assert_eq!(cells.len(), period * period);
        assert!(period.is_multiple_of(cells_per_unit) || cells_per_unit.is_multiple_of(period));
        PeriodicRaster { period, cells_per_unit, cells }
    }

    pub fn period(&self) -> usize {
        self.period
    }

    pub fn cells_per_unit(&self) -> usize {
        self.cells_per_unit
    }

    pub fn get(&self, x: i64, y: i64) -> u16 {
        let m = self.period as i64;
        let (x, y) = (x.rem_euclid(m) as usize, y.rem_euclid(m) as usize);
        self.cells[y * self.period + x]
    }

    pub fn cells(&self) -> &[u16] {
        &self.cells
    }

    /// Single-tile translational assembly.
    pub fn from_tile(tile: &MotifGrid) -> Self {
        PeriodicRaster {
            period: tile.n,
            cells_per_unit: tile.n,
            cells: tile.cells.clone(),
        }
    }
}

/// Assemble a 2x2 block of placed tiles into a raster of period 2N.
/// Tiles are given for positions (0,0), (1,0), (0,1), (1,1) in tile units.
pub fn assemble_block(tiles: [(&MotifGrid, Placement); 4]) -> Result<PeriodicRaster, MotifError> {
    let n = tiles[0].0.n;
    for (t, _) in &tiles {
        if t.n != n {
            return Err(MotifError::SizeMismatch(n, t.n));
        }
    }
    let m = 2 * n;
    let mut cells = vec![0u16; m * m];
    let offsets = [(0usize, 0usize), (n, 0), (0, n), (n, n)];
    for ((tile, placement), (ox, oy)) in tiles.iter().zip(offsets) {
        let placed = dihedral_transform(tile, *placement);
        for y in 0..n {
            for x in 0..n {
                cells[(oy + y) * m + ox + x] = placed.get(x, y);
            }
        }
    }
    Ok(PeriodicRaster { period: m, cells_per_unit: n, cells })
}

/// Label of the fourfold extension of `seed` at an exact pattern point.
///
/// The seed grid lives on the unit square; the pattern is generated by the
/// quarter rotation about the origin and the diagonal unit translations
/// (1,1) and (1,-1). That group has order-4 centers exactly on the integer
/// lattice (unit translations would add centers at half-integer pairs).
/// Lookup reduces the point into a canonical orbit representative, so the
/// assignment is a function of the orbit and the extension is exactly
/// invariant.
pub fn pattern_label(seed: &MotifGrid, z: Point) -> u16 {
    let mut best: Option<Point> = None;
    for k in 0..4u8 {
        let w = Dihedral::rotation(k).apply(z);
        // shift into the unit square; only checkerboard-even integer shifts
        // belong to the diagonal translation lattice
        if (w.x.floor() + w.y.floor()).rem_euclid(2) != 0 {
            continue;
        }
        let reduced = point(w.x.fract(), w.y.fract());
        if best.is_none_or(|b| reduced < b) {
            best = Some(reduced);
        }
    }
    // only the odd-class integer points (both coordinates integral with odd
    // sum) have no representative in the half-open square; they form a
    // single orbit and all reduce to the same corner cell
    let w = best.unwrap_or_else(|| point(z.x.fract(), z.y.fract()));
    let nf = frac(seed.n as i64, 1);
    let x = (w.x * nf).floor() as usize;
    let y = (w.y * nf).floor() as usize;
    seed.get(x.min(seed.n - 1), y.min(seed.n - 1))
}

fn class_frame(class: &TileClass) -> Result<(i64, i64, Point, i64), MotifError> {
    match class {
        TileClass::General1 { p, q, anchor } => Ok((*p, *q, *anchor, 1)),
        TileClass::General2 { p, q } => Ok((*p, *q, Point::ORIGIN, 1)),
        TileClass::General3 { p, q, anchor } => Ok((*p, *q, *anchor, 1)),
        TileClass::General4 { p, q, anchor } => Ok((*p, *q, *anchor, 2)),
        TileClass::Trivial => Ok((1, 0, Point::ORIGIN, 1)),
        other => Err(MotifError::NotAPatternCut(other.to_string())),
    }
}

/// Map a tile-referential point through the class's cutting frame into the
/// pattern referential.
pub fn tile_point_to_pattern(class: &TileClass, w: Point) -> Result<Point, MotifError> {
    let (p, q, anchor, scale) = class_frame(class)?;
    let z = tile_to_pattern(w - anchor, p, q)?;
    Ok(z.scale(frac(1, scale)))
}

/// Cut a square tile from the fourfold extension of `seed` along the class's
/// frame. `resolution` must be a positive multiple of 2 * (p^2+q^2) * N and
/// clear the anchor denominators, so all sampling stays exact and symmetry
/// detection on the result is complete.
pub fn extract_tile(
    seed: &MotifGrid,
    class: &TileClass,
    resolution: usize,
) -> Result<MotifGrid, MotifError> {
    let (p, q, anchor, _) = class_frame(class)?;
    class.validate()?;
    let n = (p * p + q * q) as usize;
    let required = 2 * n * seed.n;
    if resolution == 0 || !resolution.is_multiple_of(required) {
        return Err(MotifError::BadResolution { res: resolution, required });
    }
    let res_f = frac(resolution as i64, 1);
    for d in [anchor.x.denominator(), anchor.y.denominator()] {
        if resolution as i64 % d != 0 {
            return Err(MotifError::BadResolution { res: resolution, required: d as usize });
        }
    }
    let mut out = MotifGrid::filled(resolution, 0);
    for j in 0..resolution {
        for i in 0..resolution {
            let w = point(
                frac(2 * i as i64 + 1, 2) / res_f,
                frac(2 * j as i64 + 1, 2) / res_f,
            );
            let z = tile_point_to_pattern(class, w)?;
            out.set(i, j, pattern_label(seed, z));
        }
    }
    Ok(out)
}

/// Rasterize the fourfold extension of `seed`, viewed through the class's
/// frame, over `units` x `units` tile units. The result is genuinely periodic
/// when `units` tile translations are pattern translations (one unit for
/// families 1..3, two units for family 4).
pub fn rasterize_class_pattern(
    seed: &MotifGrid,
    class: &TileClass,
    units: usize,
    res_per_unit: usize,
) -> Result<PeriodicRaster, MotifError> {
    let (p, q, _, _) = class_frame(class)?;
    let n = (p * p + q * q) as usize;
    let required = 2 * n * seed.n;
    if res_per_unit == 0 || !res_per_unit.is_multiple_of(required) {
        return Err(MotifError::BadResolution { res: res_per_unit, required });
    }
    let m = units * res_per_unit;
    let res_f = frac(res_per_unit as i64, 1);
    let mut cells = vec![0u16; m * m];
    for j in 0..m {
        for i in 0..m {
            let w = point(
                frac(2 * i as i64 + 1, 2) / res_f,
                frac(2 * j as i64 + 1, 2) / res_f,
            );
            let z = tile_point_to_pattern(class, w)?;
            cells[j * m + i] = pattern_label(seed, z);
        }
    }
    Ok(PeriodicRaster { period: m, cells_per_unit: res_per_unit, cells })
}

/// Tiny deterministic PRNG used for motif synthesis and randomized tests.
#[derive(Clone)]
pub struct XorShift64(u64);

impl XorShift64 {
    pub fn new(seed: u64) -> Self {
        XorShift64(seed | 1)
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

/// Generic asymmetric label grid with labels in [base, base + spread).
pub fn random_grid(n: usize, seed: u64, base: u16, spread: u16) -> MotifGrid {
    let mut rng = XorShift64::new(seed);
    let cells = (0..n * n).map(|_| base + rng.below(spread as u64) as u16).collect();
    MotifGrid::new(n, cells)
}

/// Point-group used to symmetrize a quarter drawing about its own center.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuarterSymmetry {
    /// no constraint
    Free,
    /// 180 degree self-rotation
    Half,
    /// main-diagonal mirror
    Diag,
    /// anti-diagonal mirror
    AntiDiag,
    /// 180 degrees plus both diagonal mirrors
    HalfAndDiagonals,
}

/// Quarter drawing symmetrized under the requested point group, with fresh
/// generic labels on each orbit.
pub fn symmetric_quarter(n: usize, sym: QuarterSymmetry, seed: u64, base: u16) -> MotifGrid {
    let mut rng = XorShift64::new(seed);
    let mut grid = MotifGrid::filled(n, u16::MAX);
    let orbit = |x: usize, y: usize| -> Vec<(usize, usize)> {
        let r = (n - 1 - x, n - 1 - y);
        let d = (y, x);
        let ad = (n - 1 - y, n - 1 - x);
        match sym {
            QuarterSymmetry::Free => vec![(x, y)],
            QuarterSymmetry::Half => vec![(x, y), r],
            QuarterSymmetry::Diag => vec![(x, y), d],
            QuarterSymmetry::AntiDiag => vec![(x, y), ad],
            QuarterSymmetry::HalfAndDiagonals => vec![(x, y), r, d, ad],
        }
    };
    let mut next = base;
    for y in 0..n {
        for x in 0..n {
            if grid.get(x, y) != u16::MAX {
                continue;
            }
            // small label alphabet with deterministic jitter
            let label = next + (rng.below(3)) as u16;
            next = next + 3 + (rng.below(2)) as u16;
            for (ox, oy) in orbit(x, y) {
                grid.set(ox, oy, label);
            }
        }
    }
    grid
}

/// The three exception layouts of order-4 centers at edge midpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExceptionVariant {
    /// centers at (1/2, 0) and (0, 1/2)
    Adjacent,
    /// centers at (1/2, 0) and (1/2, 1); diagonal translation invariance
    OppositeTranslation,
    /// centers at (1/2, 0) and (1/2, 1); order-2 centers at quarter points
    OppositeCenters,
}

/// Mirror decoration of an exception tile.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum MirrorVariant {
    Plain,
    /// reflection line through both order-4 centers
    ThroughCenters,
    /// reflection line missing the order-4 centers
    OffCenters,
}

fn compose_quarters(bl: &MotifGrid, br: &MotifGrid, tl: &MotifGrid, tr: &MotifGrid) -> MotifGrid {
    let m = bl.n;
    let n = 2 * m;
    let mut out = MotifGrid::filled(n, 0);
    for (grid, (ox, oy)) in [bl, br, tl, tr].iter().zip([(0, 0), (m, 0), (0, m), (m, m)]) {
        for y in 0..m {
            for x in 0..m {
                out.set(ox + x, oy + y, grid.get(x, y));
            }
        }
    }
    out
}

fn rot(grid: &MotifGrid, k: u8) -> MotifGrid {
    dihedral_transform(grid, Dihedral::rotation(k))
}

fn mirror_h(grid: &MotifGrid) -> MotifGrid {
    dihedral_transform(grid, Dihedral { rot: 0, mirror: true })
}

/// Build an exception tile of size n (n divisible by 4 keeps quarters even).
///
/// The quarter layout realizes the partial rotations that define each
/// exception; the mirror variants add the reflection lines of the decorated
/// versions. Distinct quarters draw from disjoint label ranges so no
/// accidental symmetry can appear.
pub fn exception_motif(
    variant: ExceptionVariant,
    mirror: MirrorVariant,
    n: usize,
    seed: u64,
) -> Result<MotifGrid, MotifError> {
    if !n.is_multiple_of(2) || n == 0 {
        return Err(MotifError::Parse("exception tiles need an even size".into()));
    }
    let m = n / 2;
    let q = |sym, salt: u64, base| symmetric_quarter(m, sym, seed.wrapping_mul(31).wrapping_add(salt), base);
    use QuarterSymmetry::*;
    let tile = match (variant, mirror) {
        (ExceptionVariant::Adjacent, MirrorVariant::Plain) => {
            // chain BR -> BL -> TL of one half-turn-symmetric quarter; TR free-ish
            let a = q(Half, 1, 10);
            let c = q(Half, 2, 500);
            compose_quarters(&rot(&a, 3), &rot(&a, 2), &a, &rot(&c, 3))
        }
        (ExceptionVariant::Adjacent, MirrorVariant::ThroughCenters) => {
            // the Nery layout: diagonal mirror through (0,0)
            let a = q(HalfAndDiagonals, 1, 10);
            let c = q(HalfAndDiagonals, 2, 500);
            compose_quarters(&rot(&a, 3), &rot(&a, 2), &a, &rot(&c, 3))
        }
        (ExceptionVariant::Adjacent, MirrorVariant::OffCenters) => {
            return Err(MotifError::Parse(
                "the adjacent exception has a single mirrored form".into(),
            ));
        }
        (ExceptionVariant::OppositeTranslation, mv) => {
            let sym = match mv {
                MirrorVariant::Plain => Free,
                MirrorVariant::ThroughCenters => Diag,
                MirrorVariant::OffCenters => AntiDiag,
            };
            let a = q(sym, 1, 10);
            compose_quarters(&rot(&a, 3), &rot(&a, 2), &rot(&a, 2), &rot(&a, 3))
        }
        (ExceptionVariant::OppositeCenters, MirrorVariant::Plain) => {
            let a = q(Half, 1, 10);
            let b = q(Half, 2, 500);
            compose_quarters(&rot(&a, 3), &rot(&a, 2), &rot(&b, 3), &b)
        }
        (ExceptionVariant::OppositeCenters, MirrorVariant::ThroughCenters) => {
            let a = q(HalfAndDiagonals, 1, 10);
            let b = q(HalfAndDiagonals, 2, 500);
            compose_quarters(&rot(&a, 3), &rot(&a, 2), &rot(&b, 3), &b)
        }
        (ExceptionVariant::OppositeCenters, MirrorVariant::OffCenters) => {
            // top half is the horizontal mirror of the bottom half
            let a = q(Half, 1, 10);
            let bl = rot(&a, 3);
            let br = rot(&a, 2);
            compose_quarters(&bl, &br, &mirror_h(&bl), &mirror_h(&br))
        }
    };
    Ok(tile)
}

/// The Eduardo Nery tile layout: adjacent exception with the diagonal mirror.
pub fn nery_motif(n: usize, seed: u64) -> Result<MotifGrid, MotifError> {
    exception_motif(ExceptionVariant::Adjacent, MirrorVariant::ThroughCenters, n, seed)
}
