//! The sixteen neighbor-orientation cases around an edge-midpoint order-4
//! center, solved by propagating the rotation over quarter squares, and the
//! exhaustive census of 2x2 block assemblies of the Nery tile.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::exact::{frac, point, Axis, AxisDir, Dihedral, Fraction, Isometry, Point};
use crate::lattice::TileClass;
use crate::motif::{assemble_block, nery_motif, MotifError, MotifGrid, PeriodicRaster};
#[cfg(test)]
use crate::motif::{dihedral_transform, XorShift64};
use crate::symdetect::{
    detect_symmetries, tile_symmetries, wallpaper_group, GlideSpec, TileSummary, WallpaperGroup,
};

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("motif failed the tile-symmetry validation: {0}")]
    MotifValidation(String),
    #[error(transparent)]
    Motif(#[from] MotifError),
}

// ---------------------------------------------------------------------------
// quarter-square germs

/// Oriented quarter drawing: family 0..3 (the quarters a, b, c) in one of
/// four rotational orientations.
type Germ = (u8, u8);

fn germ_id(g: Germ) -> usize {
    (g.0 * 4 + (g.1 % 4)) as usize
}

/// Rotate an oriented germ counterclockwise by `turns` quarter turns.
fn germ_rot(g: Germ, turns: i8) -> Germ {
    (g.0, (g.1 as i8 - turns).rem_euclid(4) as u8)
}

#[derive(Clone)]
pub(crate) struct UnionFind {
    parent: [u8; 12],
}

impl UnionFind {
    fn new() -> Self {
        let mut parent = [0u8; 12];
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i as u8;
        }
        UnionFind { parent }
    }

    fn find(&mut self, i: usize) -> usize {
        let mut i = i;
        while self.parent[i] as usize != i {
            let p = self.parent[i] as usize;
            self.parent[i] = self.parent[p];
            i = p;
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo as u8;
        }
    }

    fn union_oriented(&mut self, a: Germ, b: Germ) {
        for t in 0..4u8 {
            self.union(germ_id((a.0, a.1 + t)), germ_id((b.0, b.1 + t)));
        }
    }

    fn same_oriented(&mut self, a: Germ, b: Germ) -> bool {
        self.find(germ_id(a)) == self.find(germ_id(b))
    }

    fn classes(&mut self) -> usize {
        (0..12).map(|i| self.find(i)).collect::<BTreeSet<_>>().len()
    }

    fn canonical(&mut self) -> [u8; 12] {
        let mut out = [0u8; 12];
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = self.find(i) as u8;
        }
        out
    }
}

/// Germ shown by the home tile at a quarter position: the two bottom
/// quarters are the same drawing in successive orientations (forced by the
/// order-4 center on the bottom edge), the top two are free.
fn tile_germ(pos: (i64, i64)) -> Germ {
    match pos {
        (0, 0) => (0, 1),
        (1, 0) => (0, 2),
        (0, 1) => (1, 1),
        (1, 1) => (2, 1),
        _ => unreachable!(),
    }
}

/// Position permutation of a counterclockwise quarter turn of the cell.
fn pos_rot_ccw(pos: (i64, i64)) -> (i64, i64) {
    match pos {
        (0, 0) => (1, 0),
        (1, 0) => (1, 1),
        (1, 1) => (0, 1),
        (0, 1) => (0, 0),
        _ => unreachable!(),
    }
}

/// Germ at a cell position when the tile is placed with `turns` quarter
/// turns counterclockwise.
fn placement_germ(turns: u8, pos: (i64, i64)) -> Germ {
    let mut p = pos;
    for _ in 0..turns % 4 {
        p = pos_rot_ccw(p);
    }
    // invert the position permutation, then rotate the germ with the tile
    let mut src = pos;
    for _ in 0..(4 - turns % 4) % 4 {
        src = pos_rot_ccw(src);
    }
    let _ = p;
    germ_rot(tile_germ(src), turns as i8)
}

/// Image of a quarter index under the order-4 rotation about the bottom edge
/// midpoint of the home tile, computed through the exact isometry acting on
/// quarter centers (the tile spans two quarters per side, so the center sits
/// at (1, 0) in quarter units).
fn quarter_map(step: i8, q: (i64, i64)) -> (i64, i64) {
    let turns = if step >= 0 { 1 } else { 3 };
    let iso = Isometry::rotation(turns, Point::ints(1, 0));
    let c = point(frac(2 * q.0 + 1, 2), frac(2 * q.1 + 1, 2));
    let img = iso.apply(c);
    let ix = (img.x - frac(1, 2)).floor();
    let iy = (img.y - frac(1, 2)).floor();
    debug_assert_eq!(img.x - frac(1, 2), frac(ix, 1));
    debug_assert_eq!(img.y - frac(1, 2), frac(iy, 1));
    (ix, iy)
}

const CELL_RADIUS: i64 = 2;
const CELL_SIDE: usize = (2 * CELL_RADIUS + 1) as usize;
const QUARTER_SIDE: usize = 2 * CELL_SIDE;

fn in_bounds(q: (i64, i64)) -> bool {
    let cell = (q.0.div_euclid(2), q.1.div_euclid(2));
    cell.0.abs() <= CELL_RADIUS && cell.1.abs() <= CELL_RADIUS
}

fn cell_slot(cell: (i64, i64)) -> usize {
    let x = (cell.0 + CELL_RADIUS) as usize;
    let y = (cell.1 + CELL_RADIUS) as usize;
    y * CELL_SIDE + x
}

fn quarter_slot(q: (i64, i64)) -> usize {
    let x = (q.0 + 2 * CELL_RADIUS) as usize;
    let y = (q.1 + 2 * CELL_RADIUS) as usize;
    y * QUARTER_SIDE + x
}

#[derive(Clone)]
struct SolverState {
    uf: UnionFind,
    placements: [Option<u8>; CELL_SIDE * CELL_SIDE],
    forced: [Option<Germ>; QUARTER_SIDE * QUARTER_SIDE],
}

impl SolverState {
    fn new() -> Self {
        SolverState {
            uf: UnionFind::new(),
            placements: [None; CELL_SIDE * CELL_SIDE],
            forced: [None; QUARTER_SIDE * QUARTER_SIDE],
        }
    }

    fn place(&mut self, cell: (i64, i64), turns: u8, queue: &mut Vec<(i64, i64)>) {
        self.placements[cell_slot(cell)] = Some(turns % 4);
        for pos in [(0, 0), (1, 0), (0, 1), (1, 1)] {
            let q = (2 * cell.0 + pos.0, 2 * cell.1 + pos.1);
            let g = placement_germ(turns % 4, pos);
            match self.forced[quarter_slot(q)] {
                Some(existing) => self.uf.union_oriented(existing, g),
                None => {
                    self.forced[quarter_slot(q)] = Some(g);
                    queue.push(q);
                }
            }
        }
    }

    /// Spread forced germs along the rotation orbit; union whenever a forced
    /// germ lands on an already-forced quarter.
    fn propagate(&mut self, queue: &mut Vec<(i64, i64)>) {
        while let Some(q) = queue.pop() {
            let g = self.forced[quarter_slot(q)].expect("queued quarters are forced");
            for step in [1i8, -1] {
                let q2 = quarter_map(step, q);
                if !in_bounds(q2) {
                    continue;
                }
                let g2 = germ_rot(g, step);
                match self.forced[quarter_slot(q2)] {
                    Some(existing) => self.uf.union_oriented(existing, g2),
                    None => {
                        self.forced[quarter_slot(q2)] = Some(g2);
                        queue.push(q2);
                        let cell = (q2.0.div_euclid(2), q2.1.div_euclid(2));
                        if let Some(turns) = self.placements[cell_slot(cell)] {
                            let pos = (q2.0.rem_euclid(2), q2.1.rem_euclid(2));
                            self.uf.union_oriented(g2, placement_germ(turns, pos));
                        }
                    }
                }
            }
        }
    }

    /// Closest cell carrying a forced germ but no placement yet.
    fn next_pending(&self) -> Option<(i64, i64)> {
        let mut best: Option<(i64, i64)> = None;
        for cy in -CELL_RADIUS..=CELL_RADIUS {
            for cx in -CELL_RADIUS..=CELL_RADIUS {
                let cell = (cx, cy);
                if self.placements[cell_slot(cell)].is_some() {
                    continue;
                }
                let has_forced = [(0, 0), (1, 0), (0, 1), (1, 1)]
                    .into_iter()
                    .any(|pos| self.forced[quarter_slot((2 * cx + pos.0, 2 * cy + pos.1))].is_some());
                if has_forced {
                    let key = (cx.abs().max(cy.abs()), cx, cy);
                    if best.is_none_or(|b| (b.0.abs().max(b.1.abs()), b.0, b.1) > key) {
                        best = Some(cell);
                    }
                }
            }
        }
        best
    }
}

/// Try placements for the undetermined cells and keep the partitions with
/// the fewest forced identifications: the generic tile of the case. When a
/// cell admits placements that match its forced quarters without any new
/// identification, only those are explored; a drawing left unconstrained
/// stays generic.
fn explore(mut state: SolverState, best: &mut Vec<[u8; 12]>, best_classes: &mut usize) {
    if state.uf.classes() < *best_classes {
        return;
    }
    match state.next_pending() {
        None => {
            let classes = state.uf.classes();
            let partition = state.uf.canonical();
            if classes > *best_classes {
                *best_classes = classes;
                best.clear();
            }
            if classes == *best_classes && !best.contains(&partition) {
                best.push(partition);
            }
        }
        Some(cell) => {
            let positions = [(0, 0), (1, 0), (0, 1), (1, 1)];
            let exact: Vec<u8> = (0..4u8)
                .filter(|turns| {
                    let mut probe = state.uf.clone();
                    positions.into_iter().all(|pos| {
                        let q = (2 * cell.0 + pos.0, 2 * cell.1 + pos.1);
                        match state.forced[quarter_slot(q)] {
                            None => true,
                            Some(g) => probe.same_oriented(g, placement_germ(*turns, pos)),
                        }
                    })
                })
                .collect();
            let choices: Vec<u8> = if exact.is_empty() { (0..4).collect() } else { exact };
            // placements pinning equivalent germs behave identically later
            let mut seen: Vec<[usize; 4]> = Vec::new();
            for turns in choices {
                let signature: [usize; 4] = positions
                    .map(|pos| state.uf.find(germ_id(placement_germ(turns, pos))));
                if seen.contains(&signature) {
                    continue;
                }
                seen.push(signature);
                let mut next = state.clone();
                let mut queue = Vec::new();
                next.place(cell, turns, &mut queue);
                next.propagate(&mut queue);
                explore(next, best, best_classes);
            }
        }
    }
}

/// Solve one of the sixteen neighbor-orientation cases. The home tile sits
/// in the unit cell, the cell below it is its half-turn image, and the free
/// neighbors right and left take the given placements (their own images
/// across the center are then forced).
fn solve_case(right_turns: u8, left_turns: u8) -> UnionFind {
    let mut state = SolverState::new();
    let mut queue = Vec::new();
    state.place((0, 0), 0, &mut queue);
    state.place((0, -1), 2, &mut queue);
    state.place((1, 0), right_turns, &mut queue);
    state.place((-1, -1), right_turns + 2, &mut queue);
    state.place((-1, 0), left_turns, &mut queue);
    state.place((1, -1), left_turns + 2, &mut queue);
    state.propagate(&mut queue);
    let mut best: Vec<[u8; 12]> = Vec::new();
    let mut best_classes = 0usize;
    explore(state, &mut best, &mut best_classes);
    assert_eq!(best.len(), 1, "minimal identification set must be unique");
    let mut uf = UnionFind::new();
    for (i, p) in best[0].iter().enumerate() {
        uf.union(i, *p as usize);
    }
    uf
}

#[cfg(test)]
pub(crate) fn case_partition(right: u8, left: u8) -> UnionFind {
    solve_case(right, left)
}

/// The seven outcome classes of the sixteen cases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum ExceptionOutcome {
    /// all quarters one half-turn-symmetric drawing: first family, p=2, q=0
    HalfGrid,
    /// chained quarters also equal the top-left free quarter
    AdjacentViaThird,
    /// all four quarters equal without self-symmetry: diagonal translation
    OppositeTranslation,
    /// all quarters one chain without self-symmetry: first family, p=q=1
    DiagonalChain,
    /// top quarters chained, bottom drawing free: third family, p=1, q=0
    ThirdFamily,
    /// chained quarters also equal the top-right free quarter
    AdjacentViaPair,
    /// top chain and bottom drawing separately half-turn symmetric
    OppositeCenters,
}

impl ExceptionOutcome {
    /// Letter of the case in the seven-way partition, multiplicity order
    /// (6, 2, 1, 3, 1, 2, 1).
    pub fn letter(&self) -> char {
        match self {
            ExceptionOutcome::HalfGrid => 'a',
            ExceptionOutcome::AdjacentViaThird => 'b',
            ExceptionOutcome::OppositeTranslation => 'c',
            ExceptionOutcome::DiagonalChain => 'd',
            ExceptionOutcome::ThirdFamily => 'e',
            ExceptionOutcome::AdjacentViaPair => 'f',
            ExceptionOutcome::OppositeCenters => 'g',
        }
    }

    /// The general family producing the tile, when it is not an exception.
    pub fn general_rule(&self) -> Option<TileClass> {
        let half = frac(1, 2);
        match self {
            ExceptionOutcome::HalfGrid => {
                Some(TileClass::General1 { p: 2, q: 0, anchor: Point::ints(0, 0) })
            }
            ExceptionOutcome::DiagonalChain => Some(TileClass::General1 {
                p: 1,
                q: 1,
                anchor: point(half, Fraction::ZERO),
            }),
            ExceptionOutcome::ThirdFamily => Some(TileClass::General3 {
                p: 1,
                q: 0,
                anchor: point(half, Fraction::ZERO),
            }),
            _ => None,
        }
    }

    /// The exception layout realized by the case, for genuine exceptions.
    pub fn exception_class(&self) -> Option<TileClass> {
        match self {
            ExceptionOutcome::AdjacentViaThird | ExceptionOutcome::AdjacentViaPair => {
                Some(TileClass::ExcAdjacent)
            }
            ExceptionOutcome::OppositeTranslation => Some(TileClass::ExcOppositeTranslation),
            ExceptionOutcome::OppositeCenters => Some(TileClass::ExcOppositeCenters),
            _ => None,
        }
    }
}

fn classify_partition(uf: &mut UnionFind) -> ExceptionOutcome {
    let fam = |uf: &mut UnionFind, x: u8, y: u8| -> bool {
        (0..4u8).any(|s| uf.same_oriented((x, 0), (y, s)))
    };
    let self2 = |uf: &mut UnionFind, x: u8| -> bool { uf.same_oriented((x, 0), (x, 2)) };
    let ab = fam(uf, 0, 1);
    let ac = fam(uf, 0, 2);
    let bc = fam(uf, 1, 2);
    let sa = self2(uf, 0);
    if ab && ac {
        if sa {
            return ExceptionOutcome::HalfGrid;
        }
        let translation = uf.same_oriented(tile_germ((0, 0)), tile_germ((1, 1)));
        return if translation {
            ExceptionOutcome::OppositeTranslation
        } else {
            ExceptionOutcome::DiagonalChain
        };
    }
    if ac {
        return ExceptionOutcome::AdjacentViaThird;
    }
    if ab {
        return ExceptionOutcome::AdjacentViaPair;
    }
    if bc {
        return if sa {
            ExceptionOutcome::OppositeCenters
        } else {
            ExceptionOutcome::ThirdFamily
        };
    }
    panic!("partition matches no outcome class: {:?}", uf.canonical());
}

#[cfg(test)]
fn rot_cell(n: usize, x: usize, y: usize, t: u8) -> (usize, usize) {
    let (mut cx, mut cy) = (x, y);
    for _ in 0..t % 4 {
        let (nx, ny) = (n - 1 - cy, cx);
        cx = nx;
        cy = ny;
    }
    (cx, cy)
}

/// Quarter drawing invariant under exactly the rotations in `stab`.
#[cfg(test)]
fn stabilized_quarter(n: usize, stab: &[u8], seed: u64, base: u16) -> MotifGrid {
    let mut grid = MotifGrid::filled(n, u16::MAX);
    let mut rng = XorShift64::new(seed);
    let mut next = base;
    for y in 0..n {
        for x in 0..n {
            if grid.get(x, y) != u16::MAX {
                continue;
            }
            let label = next + rng.below(2) as u16;
            next += 3;
            for &t in stab {
                let (ox, oy) = rot_cell(n, x, y, t);
                grid.set(ox, oy, label);
            }
        }
    }
    grid
}

/// Build a tile realizing a germ partition, with a fresh generic drawing per
/// linked family, to cross-check outcomes against detected symmetries.
#[cfg(test)]
pub(crate) fn partition_motif(uf: &mut UnionFind, quarter: usize, seed: u64) -> MotifGrid {
    let mut drawings: BTreeMap<u8, MotifGrid> = BTreeMap::new();
    let mut rng = XorShift64::new(seed);
    for f in 0..3u8 {
        if drawings.contains_key(&f) {
            continue;
        }
        let mut link = None;
        'search: for f2 in 0..f {
            for t in 0..4u8 {
                for t2 in 0..4u8 {
                    if uf.same_oriented((f, t), (f2, t2)) {
                        link = Some((f2, (4 + t - t2) % 4));
                        break 'search;
                    }
                }
            }
        }
        let grid = match link {
            Some((f2, delta)) => {
                dihedral_transform(&drawings[&f2], Dihedral::rotation(delta))
            }
            None => {
                let stab: Vec<u8> =
                    (0..4u8).filter(|t| uf.same_oriented((f, 0), (f, *t))).collect();
                stabilized_quarter(
                    quarter,
                    &stab,
                    rng.next_u64() | 1,
                    600 * f as u16 + 10,
                )
            }
        };
        drawings.insert(f, grid);
    }
    let draw = |f: u8, k: u8| -> MotifGrid {
        dihedral_transform(&drawings[&f], Dihedral::rotation((4 - k % 4) % 4))
    };
    let (bl, br, tl, tr) = (draw(0, 1), draw(0, 2), draw(1, 1), draw(2, 1));
    let n = 2 * quarter;
    let mut out = MotifGrid::filled(n, 0);
    for (grid, (ox, oy)) in
        [&bl, &br, &tl, &tr].iter().zip([(0, 0), (quarter, 0), (0, quarter), (quarter, quarter)])
    {
        for y in 0..quarter {
            for x in 0..quarter {
                out.set(ox + x, oy + y, grid.get(x, y));
            }
        }
    }
    out
}

#[derive(Debug, Serialize)]
pub struct ExceptionCase {
    /// placement (quarter turns) of the free neighbor right of the home tile
    pub right_turns: u8,
    /// placement of the free neighbor left of the home tile
    pub left_turns: u8,
    pub outcome: ExceptionOutcome,
    pub letter: char,
    pub reduces_to: Option<TileClass>,
    pub exception: Option<TileClass>,
}

#[derive(Debug, Serialize)]
pub struct ExceptionPartition {
    pub cases: Vec<ExceptionCase>,
    pub multiplicities: BTreeMap<char, usize>,
    /// genuine exception tiles, reflections not considered
    pub chiral_exceptions: usize,
    /// exception tiles counting the mirrored decorations
    pub reflective_variants: usize,
}

/// Partition the sixteen neighbor-orientation cases into their outcome
/// classes by exact germ propagation.
pub fn enumerate_exceptions() -> ExceptionPartition {
    let mut cases = Vec::new();
    let mut multiplicities: BTreeMap<char, usize> = BTreeMap::new();
    for right in 0..4u8 {
        for left in 0..4u8 {
            let mut uf = solve_case(right, left);
            let outcome = classify_partition(&mut uf);
            *multiplicities.entry(outcome.letter()).or_insert(0) += 1;
            cases.push(ExceptionCase {
                right_turns: right,
                left_turns: left,
                outcome,
                letter: outcome.letter(),
                reduces_to: outcome.general_rule(),
                exception: outcome.exception_class(),
            });
        }
    }
    let distinct: BTreeSet<String> = cases
        .iter()
        .filter_map(|c| c.exception.as_ref().map(|e| e.to_string()))
        .collect();
    // mirrored decorations: one for the adjacent layout (the diagonal line),
    // two for each opposite layout (line through or missing the centers)
    let reflective_variants = 3 + distinct
        .iter()
        .map(|c| if c.contains("adjacent") { 1 } else { 2 })
        .sum::<usize>();
    ExceptionPartition {
        cases,
        multiplicities,
        chiral_exceptions: distinct.len(),
        reflective_variants,
    }
}

// ---------------------------------------------------------------------------
// the Nery census

/// The full partial-symmetry summary any valid Nery-structure tile carries:
/// the defining data (order-4 at two adjacent edge midpoints, order-2 at the
/// quarter centers, main-diagonal mirror) together with its forced
/// consequences (quarter-diagonal mirror segments, the half-diagonal
/// translation between the two equal quarters, and the midline glides).
pub fn nery_expected_summary() -> TileSummary {
    let z = Fraction::ZERO;
    let one = Fraction::ONE;
    let h = frac(1, 2);
    let q = frac(1, 4);
    let tq = frac(3, 4);
    TileSummary {
        order4: vec![point(z, h), point(h, z)],
        order2: vec![point(q, q), point(q, tq), point(tq, q), point(tq, tq)],
        mirrors: vec![
            Axis::new(AxisDir::DiagUp, -h),
            Axis::new(AxisDir::DiagUp, z),
            Axis::new(AxisDir::DiagUp, h),
            Axis::new(AxisDir::DiagDown, h),
            Axis::new(AxisDir::DiagDown, frac(3, 2)),
        ],
        glides: vec![
            GlideSpec { axis: Axis::new(AxisDir::Horizontal, q), shift: point(-h, z) },
            GlideSpec { axis: Axis::new(AxisDir::Horizontal, q), shift: point(h, z) },
            GlideSpec { axis: Axis::new(AxisDir::Vertical, q), shift: point(z, -h) },
            GlideSpec { axis: Axis::new(AxisDir::Vertical, q), shift: point(z, h) },
            GlideSpec { axis: Axis::new(AxisDir::DiagDown, one), shift: point(-h, h) },
            GlideSpec { axis: Axis::new(AxisDir::DiagDown, one), shift: point(h, -h) },
        ],
        translations: vec![point(-h, h), point(h, -h)],
    }
}

#[derive(Clone, Debug)]
pub struct CensusConfig {
    /// tile resolution in cells, divisible by 4
    pub tile_size: usize,
    pub seed: u64,
    pub threads: usize,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig { tile_size: 8, seed: 20260808, threads: 1 }
    }
}

#[derive(Debug, Serialize)]
pub struct CensusClass {
    pub placements: [String; 4],
    pub group: WallpaperGroup,
    pub reflective: bool,
}

#[derive(Debug, Serialize)]
pub struct CensusReport {
    pub total: usize,
    pub reflective: usize,
    pub chiral: usize,
    pub mirror_pairs: usize,
    pub reflective_histogram: BTreeMap<String, usize>,
    pub chiral_histogram: BTreeMap<String, usize>,
    pub representatives: Vec<CensusClass>,
}

/// The seed-independent part of a census report.
#[derive(Debug, PartialEq, Eq)]
pub struct CensusStats {
    pub total: usize,
    pub reflective: usize,
    pub chiral: usize,
    pub mirror_pairs: usize,
    pub reflective_histogram: BTreeMap<String, usize>,
    pub chiral_histogram: BTreeMap<String, usize>,
}

impl CensusReport {
    /// The seed-independent part of the report.
    pub fn stats(&self) -> CensusStats {
        CensusStats {
            total: self.total,
            reflective: self.reflective,
            chiral: self.chiral,
            mirror_pairs: self.mirror_pairs,
            reflective_histogram: self.reflective_histogram.clone(),
            chiral_histogram: self.chiral_histogram.clone(),
        }
    }
}

fn read_shifted(raster: &PeriodicRaster, dx: i64, dy: i64) -> Vec<u16> {
    let m = raster.period() as i64;
    let mut out = Vec::with_capacity((m * m) as usize);
    for y in 0..m {
        for x in 0..m {
            out.push(raster.get(x + dx, y + dy));
        }
    }
    out
}

/// Canonical form of a torus raster under quarter turns and translations
/// (proper rigid motions; mirror images stay distinct).
pub fn canonical_raster(raster: &PeriodicRaster) -> Vec<u16> {
    let m = raster.period() as i64;
    let mut best: Option<Vec<u16>> = None;
    let mut rotated = raster.clone();
    for _ in 0..4 {
        for dy in 0..m {
            for dx in 0..m {
                match &best {
                    None => best = Some(read_shifted(&rotated, dx, dy)),
                    Some(b) => {
                        let mut better = false;
                        'cmp: for y in 0..m {
                            for x in 0..m {
                                let v = rotated.get(x + dx, y + dy);
                                let bv = b[(y * m + x) as usize];
                                if v != bv {
                                    better = v < bv;
                                    break 'cmp;
                                }
                            }
                        }
                        if better {
                            best = Some(read_shifted(&rotated, dx, dy));
                        }
                    }
                }
            }
        }
        rotated = rotate_raster(&rotated);
    }
    best.unwrap()
}

fn rotate_raster(raster: &PeriodicRaster) -> PeriodicRaster {
    let m = raster.period() as i64;
    let mut cells = vec![0u16; (m * m) as usize];
    for y in 0..m {
        for x in 0..m {
            // counterclockwise quarter turn of the torus
            cells[(y * m + x) as usize] = raster.get(y, m - 1 - x);
        }
    }
    PeriodicRaster::new(raster.period(), raster.cells_per_unit(), cells)
}

fn mirror_raster(raster: &PeriodicRaster) -> PeriodicRaster {
    let m = raster.period() as i64;
    let mut cells = vec![0u16; (m * m) as usize];
    for y in 0..m {
        for x in 0..m {
            cells[(y * m + x) as usize] = raster.get(x, m - 1 - y);
        }
    }
    PeriodicRaster::new(raster.period(), raster.cells_per_unit(), cells)
}

fn block_placements(id: usize) -> [Dihedral; 4] {
    let all = Dihedral::all();
    [all[id % 8], all[(id / 8) % 8], all[(id / 64) % 8], all[(id / 512) % 8]]
}

fn block_raster(tile: &MotifGrid, id: usize) -> PeriodicRaster {
    let [p0, p1, p2, p3] = block_placements(id);
    assemble_block([(tile, p0), (tile, p1), (tile, p2), (tile, p3)]).expect("equal sizes")
}

/// Enumerate all 8^4 oriented 2x2 blocks of the Nery tile, dedup the
/// resulting tilings up to proper rigid motions, name each class's wallpaper
/// group and count the mirror pairing of the chiral classes.
pub fn nery_census(cfg: &CensusConfig) -> Result<CensusReport, CensusError> {
    let tile = nery_motif(cfg.tile_size, cfg.seed)?;
    census_of_tile(&tile, cfg.threads)
}

fn census_of_tile(tile: &MotifGrid, threads: usize) -> Result<CensusReport, CensusError> {
    let summary = tile_symmetries(tile);
    let expected = nery_expected_summary();
    if summary != expected {
        return Err(CensusError::MotifValidation(format!(
            "got {summary:?}\nexpected {expected:?}"
        )));
    }
    let threads = threads.max(1);
    let chunk = 4096usize.div_ceil(threads);
    let mut results: Vec<(Vec<u16>, usize)> = Vec::with_capacity(4096);
    std::thread::scope(|scope| {
        let handles: Vec<_> = (0..threads)
            .map(|t| {
                scope.spawn(move || {
                    let lo = t * chunk;
                    let hi = ((t + 1) * chunk).min(4096);
                    (lo..hi)
                        .map(|id| (canonical_raster(&block_raster(tile, id)), id))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        for h in handles {
            results.extend(h.join().expect("census worker"));
        }
    });
    let mut classes: BTreeMap<Vec<u16>, usize> = BTreeMap::new();
    for (canon, id) in results {
        classes.entry(canon).and_modify(|e| *e = (*e).min(id)).or_insert(id);
    }
    let mut report = CensusReport {
        total: classes.len(),
        reflective: 0,
        chiral: 0,
        mirror_pairs: 0,
        reflective_histogram: BTreeMap::new(),
        chiral_histogram: BTreeMap::new(),
        representatives: Vec::new(),
    };
    let mut pending_partner: BTreeSet<Vec<u16>> = BTreeSet::new();
    let mut reps: Vec<(usize, Vec<u16>)> = classes.iter().map(|(c, id)| (*id, c.clone())).collect();
    reps.sort();
    for (id, canon) in reps {
        let raster = block_raster(tile, id);
        let group = wallpaper_group(&detect_symmetries(&raster));
        let mirrored = canonical_raster(&mirror_raster(&raster));
        let reflective = mirrored == canon;
        if reflective {
            report.reflective += 1;
            *report.reflective_histogram.entry(group.name().into()).or_insert(0) += 1;
        } else {
            report.chiral += 1;
            *report.chiral_histogram.entry(group.name().into()).or_insert(0) += 1;
            assert!(
                classes.contains_key(&mirrored),
                "mirror image of a chiral class must be enumerated"
            );
            if pending_partner.remove(&canon) {
                report.mirror_pairs += 1;
            } else {
                pending_partner.insert(mirrored);
            }
        }
        report.representatives.push(CensusClass {
            placements: block_placements(id).map(|p| p.name()),
            group,
            reflective,
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::generate_centers;

    #[test]
    fn sixteen_cases_partition_with_the_stated_multiplicities() {
        let partition = enumerate_exceptions();
        assert_eq!(partition.cases.len(), 16);
        let expected: BTreeMap<char, usize> =
            [('a', 6), ('b', 2), ('c', 1), ('d', 3), ('e', 1), ('f', 2), ('g', 1)]
                .into_iter()
                .collect();
        assert_eq!(partition.multiplicities, expected);
        assert_eq!(partition.chiral_exceptions, 3);
        assert_eq!(partition.reflective_variants, 8);
    }

    fn rotate_points(pts: &[Point]) -> Vec<Point> {
        let one = Fraction::ONE;
        let mut out: Vec<Point> =
            pts.iter().map(|p| point(one - p.y, p.x)).collect();
        out.sort();
        out
    }

    #[test]
    fn outcome_tiles_match_their_tagged_center_sets() {
        for right in 0..4u8 {
            for left in 0..4u8 {
                let mut uf = case_partition(right, left);
                let outcome = classify_partition(&mut uf);
                let motif = partition_motif(&mut uf, 4, 4242);
                let summary = tile_symmetries(&motif);
                let tagged = outcome
                    .general_rule()
                    .or_else(|| outcome.exception_class())
                    .expect("every outcome carries a class");
                let centers = generate_centers(&tagged).unwrap();
                let corners = [
                    Point::ints(0, 0),
                    Point::ints(1, 0),
                    Point::ints(0, 1),
                    Point::ints(1, 1),
                ];
                let mut expected: Vec<Point> = centers
                    .centers
                    .iter()
                    .copied()
                    .filter(|c| !corners.contains(c))
                    .collect();
                expected.sort();
                // tile orientation is the solver's, so compare up to rotation
                let mut found = false;
                for _ in 0..4 {
                    if summary.order4 == expected {
                        found = true;
                        break;
                    }
                    expected = rotate_points(&expected);
                }
                assert!(
                    found,
                    "case ({right},{left}) -> {outcome:?}: detected {:?}, class {tagged}",
                    summary.order4
                );
            }
        }
    }

    #[test]
    fn canonical_raster_is_motion_invariant() {
        let tile = nery_motif(4, 9).unwrap();
        let mut rng = XorShift64::new(5);
        for _ in 0..100 {
            let id = rng.below(4096) as usize;
            let raster = block_raster(&tile, id);
            let canon = canonical_raster(&raster);
            let mut moved = raster.clone();
            for _turn in 0..4 {
                moved = rotate_raster(&moved);
                let m = moved.period() as i64;
                let (dx, dy) = (rng.below(m as u64) as i64, rng.below(m as u64) as i64);
                let cells = read_shifted(&moved, dx, dy);
                let shifted = PeriodicRaster::new(moved.period(), moved.cells_per_unit(), cells);
                assert_eq!(canon, canonical_raster(&shifted));
            }
        }
    }

    #[test]
    fn census_counts_match_for_two_seeds() {
        let a = nery_census(&CensusConfig { tile_size: 8, seed: 101, threads: 2 }).unwrap();
        let b = nery_census(&CensusConfig { tile_size: 8, seed: 4242, threads: 1 }).unwrap();
        assert_eq!(a.stats(), b.stats());
        assert_eq!(a.total, 23);
    }
}

