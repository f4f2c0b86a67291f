//! Deterministic SVG output with the drawing conventions used throughout:
//! order-4 centers as small filled squares, order-2 centers as small
//! circles, reflection lines in red, the fundamental-region border in
//! yellow; glide reflections are never drawn.

use std::fmt::Write;

use p4tiles::exact::{Axis, AxisDir, Fraction, Point};
use p4tiles::lattice::CenterSet;
use p4tiles::motif::{MotifGrid, PeriodicRaster};
use p4tiles::symdetect::{SymmetrySummary, TileSummary};

const VIEW: f64 = 512.0;

#[derive(Clone, Debug)]
pub struct RenderStyle {
    pub order4_color: String,
    pub order2_color: String,
    pub mirror_color: String,
    pub border_color: String,
    pub glyph_size: f64,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            order4_color: "black".into(),
            order2_color: "black".into(),
            mirror_color: "red".into(),
            border_color: "yellow".into(),
            glyph_size: 12.0,
        }
    }
}

fn fx(v: f64) -> String {
    format!("{v:.3}")
}

/// Map a point of the unit square (or its multiples) to viewport
/// coordinates, y axis pointing up.
fn map_point(p: Point, units: f64) -> (f64, f64) {
    let scale = VIEW / units;
    (p.x.to_f64() * scale, VIEW - p.y.to_f64() * scale)
}

struct Svg {
    body: String,
}

impl Svg {
    fn new() -> Svg {
        Svg { body: String::new() }
    }

    fn finish(self) -> String {
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-24 -24 560 560\" \
             width=\"560\" height=\"560\">\n{}</svg>\n",
            self.body
        )
    }

    fn rect(&mut self, x: f64, y: f64, w: f64, h: f64, fill: &str) {
        let _ = writeln!(
            self.body,
            "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\"/>",
            fx(x),
            fx(y),
            fx(w),
            fx(h),
            fill
        );
    }

    fn line(&mut self, a: (f64, f64), b: (f64, f64), stroke: &str, width: f64) {
        let _ = writeln!(
            self.body,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"{}\"/>",
            fx(a.0),
            fx(a.1),
            fx(b.0),
            fx(b.1),
            stroke,
            fx(width)
        );
    }

    fn square_glyph(&mut self, c: (f64, f64), size: f64, fill: &str) {
        self.rect(c.0 - size / 2.0, c.1 - size / 2.0, size, size, fill);
    }

    fn circle_glyph(&mut self, c: (f64, f64), r: f64, stroke: &str) {
        let _ = writeln!(
            self.body,
            "<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"white\" stroke=\"{}\" stroke-width=\"2\"/>",
            fx(c.0),
            fx(c.1),
            fx(r),
            stroke
        );
    }

    fn outline(&mut self, units: f64, color: &str) {
        let _ = writeln!(
            self.body,
            "<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"3\"/>",
            fx(VIEW),
            fx(VIEW),
            color
        );
        let _ = units;
    }
}

fn label_fill(label: u16) -> String {
    // deterministic pastel per label
    let hue = (label as u32 * 47) % 360;
    format!("hsl({hue},55%,72%)")
}

fn draw_cells(svg: &mut Svg, n: usize, get: impl Fn(usize, usize) -> u16) {
    let cell = VIEW / n as f64;
    for y in 0..n {
        for x in 0..n {
            let v = get(x, y);
            svg.rect(
                x as f64 * cell,
                VIEW - (y as f64 + 1.0) * cell,
                cell + 0.25,
                cell + 0.25,
                &label_fill(v),
            );
        }
    }
}

/// Clip the axis line to the [0, units] square and draw it.
fn draw_axis(svg: &mut Svg, axis: &Axis, units: f64, style: &RenderStyle, repeat: bool) {
    let offsets: Vec<f64> = if repeat {
        // repeat the axis across the drawing for raster overlays
        (-2 * units as i64..=2 * units as i64)
            .map(|k| axis.offset.to_f64() + k as f64)
            .collect()
    } else {
        vec![axis.offset.to_f64()]
    };
    for o in offsets {
        let seg: Option<((f64, f64), (f64, f64))> = match axis.dir {
            AxisDir::Horizontal => {
                (0.0..=units).contains(&o).then_some(((0.0, o), (units, o)))
            }
            AxisDir::Vertical => {
                (0.0..=units).contains(&o).then_some(((o, 0.0), (o, units)))
            }
            AxisDir::DiagUp => {
                // y = x + o clipped to the square
                let x0 = (-o).max(0.0);
                let x1 = (units - o).min(units);
                (x0 < x1).then_some(((x0, x0 + o), (x1, x1 + o)))
            }
            AxisDir::DiagDown => {
                // y = -x + o
                let x0 = (o - units).max(0.0);
                let x1 = o.min(units);
                (x0 < x1).then_some(((x0, o - x0), (x1, o - x1)))
            }
        };
        if let Some((a, b)) = seg {
            let scale = VIEW / units;
            svg.line(
                (a.0 * scale, VIEW - a.1 * scale),
                (b.0 * scale, VIEW - b.1 * scale),
                &style.mirror_color,
                3.0,
            );
        }
    }
}

fn draw_marks(
    svg: &mut Svg,
    units: f64,
    order4: &[Point],
    order2: &[Point],
    mirrors: &[Axis],
    style: &RenderStyle,
    repeat: bool,
) {
    for m in mirrors {
        draw_axis(svg, m, units, style, repeat);
    }
    let reps: Vec<(i64, i64)> = if repeat {
        (0..units as i64)
            .flat_map(|i| (0..units as i64).map(move |j| (i, j)))
            .collect()
    } else {
        vec![(0, 0)]
    };
    for c in order4 {
        for (dx, dy) in &reps {
            let p = *c + Point::ints(*dx, *dy);
            if p.x >= Fraction::ZERO
                && p.x.to_f64() <= units
                && p.y >= Fraction::ZERO
                && p.y.to_f64() <= units
            {
                svg.square_glyph(map_point(p, units), style.glyph_size, &style.order4_color);
            }
        }
    }
    for c in order2 {
        for (dx, dy) in &reps {
            let p = *c + Point::ints(*dx, *dy);
            if p.x >= Fraction::ZERO
                && p.x.to_f64() <= units
                && p.y >= Fraction::ZERO
                && p.y.to_f64() <= units
            {
                svg.circle_glyph(map_point(p, units), style.glyph_size / 2.0, &style.order2_color);
            }
        }
    }
}

/// Diagram of a center set: unit square border plus one glyph per center.
pub fn render_centers(set: &CenterSet, order2: &[Point], style: &RenderStyle) -> String {
    let mut svg = Svg::new();
    svg.outline(1.0, &style.border_color);
    let order4: Vec<Point> = set.centers.iter().copied().collect();
    draw_marks(&mut svg, 1.0, &order4, order2, &[], style, false);
    svg.finish()
}

/// A tile with an optional overlay of its detected partial symmetries.
pub fn render_tile(tile: &MotifGrid, overlay: Option<&TileSummary>, style: &RenderStyle) -> String {
    let mut svg = Svg::new();
    draw_cells(&mut svg, tile.size(), |x, y| tile.get(x, y));
    svg.outline(1.0, &style.border_color);
    if let Some(s) = overlay {
        draw_marks(&mut svg, 1.0, &s.order4, &s.order2, &s.mirrors, style, false);
    }
    svg.finish()
}

/// One period of a raster with an optional overlay of its symmetries.
pub fn render_raster(
    raster: &PeriodicRaster,
    overlay: Option<&SymmetrySummary>,
    style: &RenderStyle,
) -> String {
    let mut svg = Svg::new();
    let m = raster.period();
    draw_cells(&mut svg, m, |x, y| raster.get(x as i64, y as i64));
    svg.outline(1.0, &style.border_color);
    if let Some(s) = overlay {
        let units = m as f64 / raster.cells_per_unit() as f64;
        draw_marks(&mut svg, units, &s.order4, &s.order2, &s.mirrors, style, true);
    }
    svg.finish()
}
