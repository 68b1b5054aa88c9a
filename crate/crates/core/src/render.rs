//! Text and SVG drawings of abaci, cores, bounded partitions and peeling traces.

use std::fmt::Write as _;

use crate::abacus::Abacus;
use crate::cores::{BoxCoord, CorePartition};
use crate::error::{Error, Result};
use crate::peeling::{bounded_partition, peel_trace, residue_filling, BoundedPartition};
use crate::registry::ElementDescriptor;

/// Shown instead of a diagram for the identity.
pub const EMPTY_PLACEHOLDER: &str = "(empty)";

const CELL: usize = 28;
const MARGIN: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Svg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Abacus,
    Core,
    Bounded,
    PeelTrace,
}

impl Target {
    pub const ALL: [Target; 4] = [Target::Abacus, Target::Core, Target::Bounded, Target::PeelTrace];

    pub fn name(self) -> &'static str {
        match self {
            Target::Abacus => "abacus",
            Target::Core => "core",
            Target::Bounded => "bounded",
            Target::PeelTrace => "peel-trace",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RenderOptions {
    /// Print residues inside core boxes.
    pub residues: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions { residues: true }
    }
}

/// Resolves a target and format by name.
pub fn parse_request(target: &str, format: &str) -> Result<(Target, Format)> {
    let bad = || Error::UnrenderableCombination(format!("`{target}` as `{format}`"));
    let t = Target::ALL.into_iter().find(|t| t.name() == target).ok_or_else(bad)?;
    let f = match format {
        "text" => Format::Text,
        "svg" => Format::Svg,
        _ => return Err(bad()),
    };
    Ok((t, f))
}

/// Renders `el` as `target` in `format`.
pub fn render(el: &ElementDescriptor, target: &str, format: &str, opts: RenderOptions) -> Result<String> {
    let (target, format) = parse_request(target, format)?;
    let a = el.abacus()?;
    if a.is_identity() {
        return Ok(match format {
            Format::Text => format!("{EMPTY_PLACEHOLDER}\n"),
            Format::Svg => placeholder_svg(),
        });
    }
    let lam = CorePartition::from_abacus(&a);
    Ok(match (target, format) {
        (Target::Abacus, Format::Text) => abacus_text(&a),
        (Target::Abacus, Format::Svg) => abacus_svg(&a),
        (Target::Core, f) => {
            let grid = core_grid(&lam, opts.residues, &[], None);
            match f {
                Format::Text => grid_text(&grid),
                Format::Svg => svg_document(&[(String::new(), grid)]),
            }
        }
        (Target::Bounded, f) => {
            let beta = bounded_partition(&lam)?;
            let grid = bounded_grid(&beta);
            match f {
                Format::Text => format!("{beta}\n{}", grid_text(&grid)),
                Format::Svg => svg_document(&[(beta.to_string(), grid)]),
            }
        }
        (Target::PeelTrace, f) => {
            let frames: Vec<(String, Grid)> = peel_trace(&lam)?
                .iter()
                .enumerate()
                .map(|(k, step)| {
                    let title = format!(
                        "step {}: s{} removes {} box(es), records ({},{})",
                        k + 1,
                        step.letter,
                        step.removed.len(),
                        step.recorded.i,
                        step.recorded.j
                    );
                    (title, core_grid(&step.before, opts.residues, &step.removed, Some(step.recorded)))
                })
                .collect();
            match f {
                Format::Text => frames
                    .iter()
                    .map(|(title, g)| format!("{title}\n{}", grid_text(g)))
                    .collect::<Vec<_>>()
                    .join("\n"),
                Format::Svg => svg_document(&frames),
            }
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mark {
    Plain,
    Removed,
    Recorded,
}

/// Ragged rows of labelled cells.
type Grid = Vec<Vec<(String, Mark)>>;

fn core_grid(lam: &CorePartition, residues: bool, removed: &[BoxCoord], recorded: Option<BoxCoord>) -> Grid {
    (1..=lam.rows().len())
        .map(|i| {
            (1..=lam.row_len(i))
                .map(|j| {
                    let b = BoxCoord::new(i, j);
                    let label = if residues { lam.residue(b).to_string() } else { String::new() };
                    let mark = if Some(b) == recorded {
                        Mark::Recorded
                    } else if removed.contains(&b) {
                        Mark::Removed
                    } else {
                        Mark::Plain
                    };
                    (label, mark)
                })
                .collect()
        })
        .collect()
}

fn bounded_grid(beta: &BoundedPartition) -> Grid {
    residue_filling(beta)
        .into_iter()
        .map(|row| row.into_iter().map(|r| (r.to_string(), Mark::Plain)).collect())
        .collect()
}

fn grid_text(grid: &Grid) -> String {
    let width = grid.iter().flatten().map(|(l, _)| l.len()).max().unwrap_or(1).max(1);
    let mut out = String::new();
    for row in grid {
        let cells: Vec<String> = row
            .iter()
            .map(|(label, mark)| {
                let label = if label.is_empty() { "#".to_string() } else { label.clone() };
                match mark {
                    Mark::Plain => format!(" {label:>width$} "),
                    Mark::Removed => format!("[{label:>width$}]"),
                    Mark::Recorded => format!("<{label:>width$}>"),
                }
            })
            .collect();
        out.push_str(cells.join("").trim_end());
        out.push('\n');
    }
    out
}

/// Levels shown: every row holding a gap before the last bead or a bead after the first gap.
fn abacus_rows(a: &Abacus) -> (i64, i64) {
    let big_n = a.ctx().modulus();
    let lo = (a.first_gap() - 1).div_euclid(big_n).min(0);
    let hi = a.last_bead().div_euclid(big_n).max(1);
    (lo, hi)
}

fn abacus_text(a: &Abacus) -> String {
    let ctx = a.ctx();
    let big_n = ctx.modulus();
    let (lo, hi) = abacus_rows(a);
    let width = [lo * big_n + 1, hi * big_n + ctx.width() as i64]
        .iter()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    let header: Vec<String> = (1..=ctx.width()).map(|r| format!(" {r:>width$} ")).collect();
    let _ = writeln!(out, "{}", header.join("").trim_end());
    for level in lo..=hi {
        let cells: Vec<String> = (1..=ctx.width() as i64)
            .map(|r| {
                let v = level * big_n + r;
                if a.is_bead(v) {
                    format!("({v:>width$})")
                } else {
                    format!(" {v:>width$} ")
                }
            })
            .collect();
        let _ = writeln!(out, "{}", cells.join("").trim_end());
    }
    out
}

fn svg_open(width: usize, height: usize) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\" font-family=\"monospace\" font-size=\"11\">\n"
    )
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

fn placeholder_svg() -> String {
    let mut out = svg_open(120, 40);
    let _ = writeln!(out, "  <text x=\"60\" y=\"24\" text-anchor=\"middle\">{}</text>", EMPTY_PLACEHOLDER);
    out.push_str("</svg>\n");
    out
}

fn abacus_svg(a: &Abacus) -> String {
    let ctx = a.ctx();
    let big_n = ctx.modulus();
    let (lo, hi) = abacus_rows(a);
    let cols = ctx.width();
    let rows = (hi - lo + 2) as usize;
    let mut out = svg_open(2 * MARGIN + cols * CELL, 2 * MARGIN + rows * CELL);
    for r in 1..=cols {
        let x = MARGIN + (r - 1) * CELL + CELL / 2;
        let _ = writeln!(out, "  <text x=\"{x}\" y=\"{}\" text-anchor=\"middle\" font-weight=\"bold\">{r}</text>", MARGIN + CELL / 2 + 4);
    }
    for (row, level) in (lo..=hi).enumerate() {
        let cy = MARGIN + (row + 1) * CELL + CELL / 2;
        for r in 1..=cols {
            let cx = MARGIN + (r - 1) * CELL + CELL / 2;
            let v = level * big_n + r as i64;
            if a.is_bead(v) {
                let _ = writeln!(out, "  <circle cx=\"{cx}\" cy=\"{cy}\" r=\"{}\" fill=\"none\" stroke=\"black\"/>", CELL / 2 - 2);
            }
            let _ = writeln!(out, "  <text x=\"{cx}\" y=\"{}\" text-anchor=\"middle\">{v}</text>", cy + 4);
        }
    }
    out.push_str("</svg>\n");
    out
}

/// Titled grids stacked vertically.
fn svg_document(frames: &[(String, Grid)]) -> String {
    let title_h = if frames.iter().any(|(t, _)| !t.is_empty()) { CELL } else { 0 };
    let cols = frames.iter().flat_map(|(_, g)| g.iter().map(|r| r.len())).max().unwrap_or(0);
    let heights: Vec<usize> = frames.iter().map(|(_, g)| title_h + g.len() * CELL + MARGIN).collect();
    let width = 2 * MARGIN + cols.max(12) * CELL;
    let height = MARGIN + heights.iter().sum::<usize>();
    let mut out = svg_open(width, height);
    let mut top = MARGIN;
    for ((title, grid), h) in frames.iter().zip(&heights) {
        if !title.is_empty() {
            let _ = writeln!(out, "  <text x=\"{MARGIN}\" y=\"{}\">{}</text>", top + CELL / 2 + 4, escape(title));
        }
        let y0 = top + title_h;
        for (i, row) in grid.iter().enumerate() {
            for (j, (label, mark)) in row.iter().enumerate() {
                let (x, y) = (MARGIN + j * CELL, y0 + i * CELL);
                let fill = match mark {
                    Mark::Plain => "white",
                    Mark::Removed => "#d0d0d0",
                    Mark::Recorded => "#f4b183",
                };
                let _ = writeln!(
                    out,
                    "  <rect x=\"{x}\" y=\"{y}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"{fill}\" stroke=\"black\"/>"
                );
                if !label.is_empty() {
                    let _ = writeln!(
                        out,
                        "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>",
                        x + CELL / 2,
                        y + CELL / 2 + 4,
                        escape(label)
                    );
                }
            }
        }
        top += h;
    }
    out.push_str("</svg>\n");
    out
}
