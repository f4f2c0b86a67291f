//! Command line surface: center-lattice generation and classification, tile
//! extraction and assembly, symmetry detection, coverage verification, the
//! sixteen-case partition, the Nery census, and SVG rendering.

mod svg;

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use p4tiles::census::{enumerate_exceptions, nery_census, CensusConfig};
use p4tiles::closure::coverage::{verify_coverage, CoverageCase};
use p4tiles::exact::{Dihedral, Fraction, Point};
use p4tiles::lattice::{
    classify_centers, generate_centers, weighted_count, CenterSet, TileClass,
};
use p4tiles::motif::{assemble_block, extract_tile, MotifGrid, PeriodicRaster, Placement};
use p4tiles::symdetect::{detect_symmetries, tile_symmetries, wallpaper_group, SymmetrySummary};

#[derive(Parser)]
#[command(
    name = "p4tiles",
    about = "Square tiles of fourfold patterns: lattices, symmetry detection, census",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct ClassArgs {
    /// tile class: general1..general4, trivial, exc-adjacent,
    /// exc-opposite-translation, exc-opposite-centers
    #[arg(long = "type")]
    ty: String,
    #[arg(short, long, allow_hyphen_values = true)]
    p: Option<i64>,
    #[arg(short, long, allow_hyphen_values = true)]
    q: Option<i64>,
    /// anchor point "x,y" with rational components, e.g. "1/2,0"
    #[arg(long, allow_hyphen_values = true)]
    anchor: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate the order-4 center set of a tile class as JSON
    Centers(ClassArgs),
    /// Classify a center-set JSON back to its canonical tile class
    Classify {
        /// input file ("-" for stdin)
        #[arg(long = "in")]
        input: String,
    },
    /// Cut a tile from the fourfold extension of a seed motif
    Extract {
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long)]
        seed: String,
        #[arg(long)]
        resolution: usize,
        #[arg(long)]
        out: String,
    },
    /// Assemble a 2x2 block of placed tiles into a raster file
    Assemble {
        #[arg(long)]
        tile: String,
        /// four placements for positions (0,0),(1,0),(0,1),(1,1):
        /// r0..r3 rotations, m0..m3 mirrored
        #[arg(long)]
        placements: String,
        #[arg(long)]
        out: String,
    },
    /// Detect all symmetries of a raster and name its wallpaper group
    Detect {
        #[arg(long = "in")]
        input: String,
        /// raster cells per tile unit (defaults to the full period)
        #[arg(long)]
        cells_per_unit: Option<usize>,
    },
    /// Verify a coverage statement on the exact grid oracle
    Closure {
        /// case E, F, G or H
        #[arg(long)]
        case: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        resolution: Option<usize>,
    },
    /// Partition the sixteen neighbor-orientation cases
    Exceptions,
    /// Reproduce the census of 2x2 assemblies of the Nery tile
    #[command(name = "nery-census")]
    NeryCensus {
        #[arg(long, default_value_t = 8)]
        size: usize,
        #[arg(long, default_value_t = 20260808)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long, default_value = "json")]
        format: String,
        /// also write the validated tile as a motif file
        #[arg(long)]
        motif_out: Option<String>,
        /// also write every representative block as a motif file here
        #[arg(long)]
        blocks_out: Option<String>,
    },
    /// Render an artifact as deterministic SVG
    Render {
        /// artifact kind: class, centers, tile, raster
        #[arg(long)]
        kind: String,
        /// input file for centers/tile/raster kinds
        #[arg(long = "in")]
        input: Option<String>,
        #[command(flatten)]
        class: RenderClassArgs,
        /// overlay detected symmetries on tiles and rasters
        #[arg(long, default_value_t = false)]
        overlay: bool,
        #[arg(long)]
        cells_per_unit: Option<usize>,
        #[arg(long)]
        out: String,
        #[arg(long, default_value = "black")]
        order4_color: String,
        #[arg(long, default_value = "black")]
        order2_color: String,
        #[arg(long, default_value = "red")]
        mirror_color: String,
        #[arg(long, default_value = "yellow")]
        border_color: String,
    },
}

#[derive(Args)]
struct RenderClassArgs {
    #[arg(long = "type")]
    ty: Option<String>,
    #[arg(short, long, allow_hyphen_values = true)]
    p: Option<i64>,
    #[arg(short, long, allow_hyphen_values = true)]
    q: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    anchor: Option<String>,
}

fn parse_fraction(s: &str) -> Result<Fraction> {
    s.parse::<Fraction>().map_err(|e| anyhow!("bad fraction {s:?}: {e}"))
}

fn parse_anchor(s: &str) -> Result<Point> {
    let (x, y) = s
        .split_once(',')
        .ok_or_else(|| anyhow!("anchor must be \"x,y\" with rational components"))?;
    Ok(Point::new(parse_fraction(x)?, parse_fraction(y)?))
}

fn parse_class(ty: &str, p: Option<i64>, q: Option<i64>, anchor: Option<&str>) -> Result<TileClass> {
    let anchor_pt = anchor.map(parse_anchor).transpose()?;
    let need_pq = || -> Result<(i64, i64)> {
        Ok((
            p.ok_or_else(|| anyhow!("-p is required for general classes"))?,
            q.ok_or_else(|| anyhow!("-q is required for general classes"))?,
        ))
    };
    let class = match ty.to_ascii_lowercase().as_str() {
        "general1" => {
            let (p, q) = need_pq()?;
            TileClass::General1 { p, q, anchor: anchor_pt.unwrap_or(Point::ORIGIN) }
        }
        "general2" => {
            let (p, q) = need_pq()?;
            TileClass::General2 { p, q }
        }
        "general3" => {
            let (p, q) = need_pq()?;
            TileClass::General3 {
                p,
                q,
                anchor: anchor_pt.unwrap_or(Point::new(Fraction::new(1, 2), Fraction::ZERO)),
            }
        }
        "general4" => {
            let (p, q) = need_pq()?;
            TileClass::General4 { p, q, anchor: anchor_pt.unwrap_or(Point::ORIGIN) }
        }
        "trivial" => TileClass::Trivial,
        "exc-adjacent" => TileClass::ExcAdjacent,
        "exc-opposite-translation" => TileClass::ExcOppositeTranslation,
        "exc-opposite-centers" => TileClass::ExcOppositeCenters,
        other => bail!("unknown tile class {other:?}"),
    };
    class.validate()?;
    Ok(class)
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

/// Accept a center set given as a CenterSet object, as the output of the
/// `centers` subcommand, or as a bare array of points.
fn parse_center_set(text: &str) -> Result<CenterSet> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if let Ok(cs) = serde_json::from_value::<CenterSet>(value.clone()) {
        return Ok(cs);
    }
    if let Some(inner) = value.get("centers") {
        if let Ok(cs) = serde_json::from_value::<CenterSet>(inner.clone()) {
            return Ok(cs);
        }
        return Ok(serde_json::from_value(serde_json::json!({ "centers": inner }))?);
    }
    if value.is_array() {
        return Ok(serde_json::from_value(serde_json::json!({ "centers": value }))?);
    }
    bail!("no center set found in input")
}

#[derive(Serialize)]
struct CentersOut {
    class: TileClass,
    centers: CenterSet,
    weighted_count: Fraction,
}

#[derive(Serialize)]
struct DetectOut {
    group: String,
    summary: SymmetrySummary,
}

fn parse_placements(s: &str) -> Result<[Placement; 4]> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        bail!("expected four placements, got {}", parts.len());
    }
    let mut out = [Dihedral::IDENTITY; 4];
    for (slot, part) in out.iter_mut().zip(&parts) {
        *slot = Dihedral::from_name(part)
            .ok_or_else(|| anyhow!("bad placement {part:?}; use r0..r3 or m0..m3"))?;
    }
    Ok(out)
}

fn load_raster(path: &str, cells_per_unit: Option<usize>) -> Result<PeriodicRaster> {
    let grid = MotifGrid::parse(&read_input(path)?)?;
    let period = grid.size();
    let cpu = cells_per_unit.unwrap_or(period);
    Ok(PeriodicRaster::new(period, cpu, grid.cells().to_vec()))
}

fn emit_text(text: &str) -> Result<()> {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = writeln!(out, "{text}") {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        return Err(e.into());
    }
    Ok(())
}

fn emit_json<T: Serialize>(value: &T) -> Result<()> {
    emit_text(&serde_json::to_string_pretty(value)?)
}

fn run(cli: Cli) -> Result<()> {
    match cli.cmd {
        Cmd::Centers(args) => {
            let class = parse_class(&args.ty, args.p, args.q, args.anchor.as_deref())?;
            let centers = generate_centers(&class)?;
            let weighted = weighted_count(&centers);
            emit_json(&CentersOut { class, centers, weighted_count: weighted })
        }
        Cmd::Classify { input } => {
            let centers = parse_center_set(&read_input(&input)?)?;
            let class = classify_centers(&centers)?;
            emit_json(&class)
        }
        Cmd::Extract { class, seed, resolution, out } => {
            let class = parse_class(&class.ty, class.p, class.q, class.anchor.as_deref())?;
            let seed = MotifGrid::parse(&read_input(&seed)?)?;
            let tile = extract_tile(&seed, &class, resolution)?;
            fs::write(&out, tile.emit()).with_context(|| format!("writing {out}"))?;
            Ok(())
        }
        Cmd::Assemble { tile, placements, out } => {
            let grid = MotifGrid::parse(&read_input(&tile)?)?;
            let placements = parse_placements(&placements)?;
            let raster = assemble_block([
                (&grid, placements[0]),
                (&grid, placements[1]),
                (&grid, placements[2]),
                (&grid, placements[3]),
            ])?;
            let as_grid = MotifGrid::new(raster.period(), raster.cells().to_vec());
            fs::write(&out, as_grid.emit()).with_context(|| format!("writing {out}"))?;
            Ok(())
        }
        Cmd::Detect { input, cells_per_unit } => {
            let raster = load_raster(&input, cells_per_unit)?;
            let summary = detect_symmetries(&raster);
            let group = wallpaper_group(&summary);
            emit_json(&DetectOut { group: group.name().into(), summary })
        }
        Cmd::Closure { case, a, b, resolution } => {
            let case = CoverageCase::parse(&case)
                .ok_or_else(|| anyhow!("case must be one of E, F, G, H"))?;
            let report =
                verify_coverage(case, parse_fraction(&a)?, parse_fraction(&b)?, resolution)?;
            emit_json(&report)
        }
        Cmd::Exceptions => emit_json(&enumerate_exceptions()),
        Cmd::NeryCensus { size, seed, threads, format, motif_out, blocks_out } => {
            let report = nery_census(&CensusConfig { tile_size: size, seed, threads })?;
            let tile = p4tiles::motif::nery_motif(size, seed)?;
            if let Some(path) = motif_out {
                fs::write(&path, tile.emit()).with_context(|| format!("writing {path}"))?;
            }
            if let Some(dir) = blocks_out {
                fs::create_dir_all(&dir).with_context(|| format!("creating {dir}"))?;
                for (idx, rep) in report.representatives.iter().enumerate() {
                    let placements: Vec<Placement> = rep
                        .placements
                        .iter()
                        .map(|name| Dihedral::from_name(name).expect("report placements parse"))
                        .collect();
                    let raster = assemble_block([
                        (&tile, placements[0]),
                        (&tile, placements[1]),
                        (&tile, placements[2]),
                        (&tile, placements[3]),
                    ])?;
                    let as_grid = MotifGrid::new(raster.period(), raster.cells().to_vec());
                    let kind = if rep.reflective { "reflective" } else { "chiral" };
                    let path = format!("{dir}/block{idx:02}_{}_{kind}.motif", rep.group.name());
                    fs::write(&path, as_grid.emit()).with_context(|| format!("writing {path}"))?;
                }
            }
            match format.as_str() {
                "json" => emit_json(&report),
                "text" => {
                    let mut lines = vec![format!(
                        "{} tilings: {} reflective, {} chiral ({} mirror pairs)",
                        report.total, report.reflective, report.chiral, report.mirror_pairs
                    )];
                    for (name, count) in &report.reflective_histogram {
                        lines.push(format!("  reflective {name}: {count}"));
                    }
                    for (name, count) in &report.chiral_histogram {
                        lines.push(format!("  chiral {name}: {count}"));
                    }
                    emit_text(&lines.join("\n"))
                }
                other => bail!("unknown format {other:?}"),
            }
        }
        Cmd::Render {
            kind,
            input,
            class,
            overlay,
            cells_per_unit,
            out,
            order4_color,
            order2_color,
            mirror_color,
            border_color,
        } => {
            let style = svg::RenderStyle {
                order4_color,
                order2_color,
                mirror_color,
                border_color,
                ..Default::default()
            };
            let need_input =
                || input.clone().ok_or_else(|| anyhow!("--in is required for this kind"));
            let doc = match kind.as_str() {
                "class" => {
                    let ty = class
                        .ty
                        .as_deref()
                        .ok_or_else(|| anyhow!("--type is required for kind=class"))?;
                    let tc = parse_class(ty, class.p, class.q, class.anchor.as_deref())?;
                    let centers = generate_centers(&tc)?;
                    let q = Fraction::new(1, 4);
                    let tq = Fraction::new(3, 4);
                    let order2: Vec<Point> = match tc {
                        TileClass::ExcAdjacent | TileClass::ExcOppositeCenters => vec![
                            Point::new(q, q),
                            Point::new(q, tq),
                            Point::new(tq, q),
                            Point::new(tq, tq),
                        ],
                        _ => vec![],
                    };
                    svg::render_centers(&centers, &order2, &style)
                }
                "centers" => {
                    let centers = parse_center_set(&read_input(&need_input()?)?)?;
                    svg::render_centers(&centers, &[], &style)
                }
                "tile" => {
                    let tile = MotifGrid::parse(&read_input(&need_input()?)?)?;
                    let summary = overlay.then(|| tile_symmetries(&tile));
                    svg::render_tile(&tile, summary.as_ref(), &style)
                }
                "raster" => {
                    let raster = load_raster(&need_input()?, cells_per_unit)?;
                    let summary = overlay.then(|| detect_symmetries(&raster));
                    svg::render_raster(&raster, summary.as_ref(), &style)
                }
                other => bail!("unknown render kind {other:?}"),
            };
            fs::write(&out, doc).with_context(|| format!("writing {out}"))?;
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct ErrorOut {
    error: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let payload = ErrorOut { error: format!("{e:#}") };
            eprintln!("{}", serde_json::to_string(&payload).unwrap());
            ExitCode::FAILURE
        }
    }
}
