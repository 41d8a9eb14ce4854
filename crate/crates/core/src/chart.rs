//! Grid charts of unstable sphere verdicts, with TSV and SVG emitters.
//!
//! A chart fixes the sphere `(x, y)` and classifies every `(d, e)` cell of
//! a rectangle. Cells carry short region codes; the six boundary lines
//! separating the regions are part of the chart data and are drawn into
//! the SVG output.

use serde::Serialize;
use std::fmt::Write as _;

use crate::classify::{classify_sphere_unstable, Assumptions, KernelLabel, Verdict, VerdictKind};
use crate::error::{Error, Result};

/// Maximum number of cells a single chart may hold.
pub const CELL_BUDGET: u64 = 1_000_000;

/// A boundary line `a*d + b*e = c` with a human-readable label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundaryLine {
    pub label: String,
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

/// Short region code for a verdict, as used in TSV cells.
///
/// `Z` zero source, `ISO` isomorphism, `BS` isomorphism contingent on the
/// vanishing assumption (split surjective without it), `DIV` zero target
/// with identified divisible kernel, `S-1` the (-1)-stem, `S0` the
/// excluded 0-stem, `NC` not covered.
pub fn region_code(v: &Verdict) -> &'static str {
    match &v.kind {
        VerdictKind::ZeroSource => "Z",
        VerdictKind::Isomorphism => "ISO",
        VerdictKind::SplitSurjective { .. } => "BS",
        VerdictKind::TargetZeroDivisibleKernel { kernel } => match kernel {
            KernelLabel::Divisible { .. } => "S-1",
            _ => "DIV",
        },
        VerdictKind::ExcludedZeroStem => "S0",
        VerdictKind::NotCovered { .. } => "NC",
        VerdictKind::Injective => "INJ",
    }
}

#[derive(Debug, Clone)]
pub struct Chart {
    pub x: i64,
    pub y: i64,
    pub d_min: i64,
    pub d_max: i64,
    pub e_min: i64,
    pub e_max: i64,
    pub assumptions: Assumptions,
    /// Row-major, rows by descending `e`, columns by ascending `d`.
    cells: Vec<Verdict>,
    pub boundary_lines: Vec<BoundaryLine>,
}

/// Classifies every cell of the rectangle `[d0, d1] x [e0, e1]`.
pub fn chart(
    x: i64,
    y: i64,
    d_range: (i64, i64),
    e_range: (i64, i64),
    asm: Assumptions,
) -> Result<Chart> {
    let (d_min, d_max) = d_range;
    let (e_min, e_max) = e_range;
    if d_min > d_max || e_min > e_max {
        return Err(Error::InvalidParameters(format!(
            "empty chart range: d in [{d_min}, {d_max}], e in [{e_min}, {e_max}]"
        )));
    }
    let width = (d_max - d_min + 1) as u128;
    let height = (e_max - e_min + 1) as u128;
    let cells_needed = width * height;
    if cells_needed > CELL_BUDGET as u128 {
        return Err(Error::ChartBudgetExceeded { cells: cells_needed, limit: CELL_BUDGET });
    }

    let mut cells = Vec::with_capacity(cells_needed as usize);
    for e in (e_min..=e_max).rev() {
        for d in d_min..=d_max {
            cells.push(classify_sphere_unstable(x, y, d, e, asm));
        }
    }

    let suspension_limit = (2 * x - 2).min(x + y - 2);
    let boundary_lines = vec![
        BoundaryLine { label: format!("coweight 0: d = {x}"), a: 1, b: 0, c: x },
        BoundaryLine {
            label: format!("suspension limit: d = {suspension_limit}"),
            a: 1,
            b: 0,
            c: suspension_limit,
        },
        BoundaryLine { label: format!("weight -1: e = {}", y - 1), a: 0, b: 1, c: y - 1 },
        BoundaryLine {
            label: format!("stable comparison limit: e = d + {}", y - x + 2),
            a: -1,
            b: 1,
            c: y - x + 2,
        },
        BoundaryLine { label: format!("0-stem: d + e = {}", x + y), a: 1, b: 1, c: x + y },
        BoundaryLine {
            label: format!("-1-stem: d + e = {}", x + y - 1),
            a: 1,
            b: 1,
            c: x + y - 1,
        },
    ];

    Ok(Chart {
        x,
        y,
        d_min,
        d_max,
        e_min,
        e_max,
        assumptions: asm,
        cells,
        boundary_lines,
    })
}

impl Chart {
    pub fn cell(&self, d: i64, e: i64) -> &Verdict {
        assert!(
            (self.d_min..=self.d_max).contains(&d) && (self.e_min..=self.e_max).contains(&e),
            "cell ({d}, {e}) outside the chart"
        );
        let row = (self.e_max - e) as usize;
        let col = (d - self.d_min) as usize;
        &self.cells[row * self.width() + col]
    }

    pub fn code(&self, d: i64, e: i64) -> &'static str {
        region_code(self.cell(d, e))
    }

    fn width(&self) -> usize {
        (self.d_max - self.d_min + 1) as usize
    }

    pub fn iter_cells(&self) -> impl Iterator<Item = (i64, i64, &Verdict)> + '_ {
        let width = self.width() as i64;
        self.cells.iter().enumerate().map(move |(i, v)| {
            let row = i as i64 / width;
            let col = i as i64 % width;
            (self.d_min + col, self.e_max - row, v)
        })
    }

    /// One row per `e` descending, one tab-separated code per `d`
    /// ascending, LF line endings.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        let width = self.width();
        for row in 0..self.cells.len() / width.max(1) {
            let codes: Vec<&str> = self.cells[row * width..(row + 1) * width]
                .iter()
                .map(region_code)
                .collect();
            out.push_str(&codes.join("\t"));
            out.push('\n');
        }
        out
    }

    /// Self-contained SVG: one colored square per cell, the six boundary
    /// lines with labels, and a legend.
    pub fn to_svg(&self) -> String {
        const CELL: i64 = 22;
        const MARGIN_LEFT: i64 = 56;
        const MARGIN_TOP: i64 = 28;
        const MARGIN_BOTTOM: i64 = 44;
        const MARGIN_RIGHT: i64 = 250;

        let grid_w = (self.d_max - self.d_min + 1) * CELL;
        let grid_h = (self.e_max - self.e_min + 1) * CELL;
        let total_w = MARGIN_LEFT + grid_w + MARGIN_RIGHT;
        let total_h = MARGIN_TOP + grid_h + MARGIN_BOTTOM;

        // pixel position of the center of cell (d, e)
        let px = |d: f64| MARGIN_LEFT as f64 + (d - self.d_min as f64 + 0.5) * CELL as f64;
        let py = |e: f64| MARGIN_TOP as f64 + (self.e_max as f64 - e + 0.5) * CELL as f64;

        let mut svg = String::new();
        let _ = write!(
            svg,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{total_w}" height="{total_h}" viewBox="0 0 {total_w} {total_h}">"#
        );
        let _ = write!(
            svg,
            r#"<rect width="{total_w}" height="{total_h}" style="fill:#ffffff"/>"#
        );
        let _ = write!(
            svg,
            r#"<text x="{}" y="16" style="font:13px sans-serif">sphere ({}, {}), assumption bs={}</text>"#,
            MARGIN_LEFT, self.x, self.y, self.assumptions.beilinson_soule
        );

        for (d, e, v) in self.iter_cells() {
            let code = region_code(v);
            let color = code_color(code);
            let cx = px(d as f64) - CELL as f64 / 2.0;
            let cy = py(e as f64) - CELL as f64 / 2.0;
            let _ = write!(
                svg,
                r#"<rect x="{cx}" y="{cy}" width="{CELL}" height="{CELL}" style="fill:{color};stroke:#ffffff;stroke-width:1"><title>(d, e) = ({d}, {e}): {v}</title></rect>"#
            );
        }

        // axis labels on the outer edges
        for d in self.d_min..=self.d_max {
            if (d - self.d_min) % 2 == 0 {
                let _ = write!(
                    svg,
                    r#"<text x="{}" y="{}" style="font:9px sans-serif" text-anchor="middle">{d}</text>"#,
                    px(d as f64),
                    MARGIN_TOP + grid_h + 14
                );
            }
        }
        for e in self.e_min..=self.e_max {
            if (e - self.e_min) % 2 == 0 {
                let _ = write!(
                    svg,
                    r#"<text x="{}" y="{}" style="font:9px sans-serif" text-anchor="end">{e}</text>"#,
                    MARGIN_LEFT - 6,
                    py(e as f64) + 3.0
                );
            }
        }
        let _ = write!(
            svg,
            r#"<text x="{}" y="{}" style="font:11px sans-serif">d</text>"#,
            MARGIN_LEFT + grid_w + 8,
            MARGIN_TOP + grid_h + 14
        );
        let _ = write!(
            svg,
            r#"<text x="{}" y="{}" style="font:11px sans-serif">e</text>"#,
            MARGIN_LEFT - 24,
            MARGIN_TOP + 4
        );

        // boundary lines, clipped to the grid rectangle
        let d_lo = self.d_min as f64 - 0.5;
        let d_hi = self.d_max as f64 + 0.5;
        let e_lo = self.e_min as f64 - 0.5;
        let e_hi = self.e_max as f64 + 0.5;
        for line in &self.boundary_lines {
            if let Some(((d1, e1), (d2, e2))) = clip_line(line, d_lo, d_hi, e_lo, e_hi) {
                let _ = write!(
                    svg,
                    r#"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}" style="stroke:#333333;stroke-width:1.5"/>"#,
                    px(d1),
                    py(e1),
                    px(d2),
                    py(e2)
                );
                let _ = write!(
                    svg,
                    r#"<text x="{:.1}" y="{:.1}" style="font:9px sans-serif;fill:#333333">{}</text>"#,
                    px(d2.min(d_hi)) + 4.0,
                    py(e2.min(e_hi)),
                    xml_escape(&line.label)
                );
            }
        }

        // legend
        let legend = [
            ("Z", "source is zero"),
            ("ISO", "isomorphism"),
            ("BS", "isomorphism under the vanishing assumption"),
            ("DIV", "target zero, divisible kernel"),
            ("S-1", "-1-stem, kernel unidentified"),
            ("S0", "0-stem, excluded"),
            ("NC", "not covered"),
        ];
        let lx = MARGIN_LEFT + grid_w + 16;
        for (i, (code, desc)) in legend.iter().enumerate() {
            let ly = MARGIN_TOP + 24 + i as i64 * 18;
            let _ = write!(
                svg,
                r#"<rect x="{lx}" y="{}" width="12" height="12" style="fill:{};stroke:#999999"/>"#,
                ly - 10,
                code_color(code)
            );
            let _ = write!(
                svg,
                r#"<text x="{}" y="{ly}" style="font:10px sans-serif">{code}: {desc}</text>"#,
                lx + 18
            );
        }

        svg.push_str("</svg>\n");
        svg
    }
}

fn code_color(code: &str) -> &'static str {
    match code {
        "Z" => "#d9d9d9",
        "ISO" => "#8fd19e",
        "BS" => "#d3ecc8",
        "DIV" => "#a8c6e8",
        "S-1" => "#dfc0dc",
        "S0" => "#f5c979",
        "NC" => "#f4f4f4",
        _ => "#ff00ff",
    }
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Intersects `a*d + b*e = c` with the rectangle, returning segment
/// endpoints in `(d, e)` coordinates.
fn clip_line(
    line: &BoundaryLine,
    d_lo: f64,
    d_hi: f64,
    e_lo: f64,
    e_hi: f64,
) -> Option<((f64, f64), (f64, f64))> {
    let (a, b, c) = (line.a as f64, line.b as f64, line.c as f64);
    let mut points: Vec<(f64, f64)> = Vec::new();
    let mut push = |d: f64, e: f64| {
        if (d_lo - 1e-9..=d_hi + 1e-9).contains(&d) && (e_lo - 1e-9..=e_hi + 1e-9).contains(&e)
            && !points.iter().any(|&(pd, pe)| (pd - d).abs() < 1e-9 && (pe - e).abs() < 1e-9) {
                points.push((d, e));
            }
    };
    if b != 0.0 {
        push(d_lo, (c - a * d_lo) / b);
        push(d_hi, (c - a * d_hi) / b);
    }
    if a != 0.0 {
        push((c - b * e_lo) / a, e_lo);
        push((c - b * e_hi) / a, e_hi);
    }
    (points.len() >= 2).then(|| (points[0], points[1]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_cell_chart() {
        let c = chart(8, 9, (5, 5), (5, 5), Assumptions::default()).unwrap();
        assert_eq!(c.to_tsv(), "Z\n");
        assert_eq!(c.code(5, 5), "Z");
    }

    #[test]
    fn rows_run_e_descending() {
        let c = chart(8, 9, (7, 8), (7, 8), Assumptions::default()).unwrap();
        // e = 8 row first: (7,8) -> Z, (8,8) -> S-1; then e = 7: Z, DIV
        assert_eq!(c.to_tsv(), "Z\tS-1\nZ\tDIV\n");
        assert_eq!(c.cell(8, 8), &classify_sphere_unstable(8, 9, 8, 8, Assumptions::default()));
    }

    #[test]
    fn budget_and_range_checks() {
        assert!(matches!(
            chart(8, 9, (0, 2000), (0, 2000), Assumptions::default()),
            Err(Error::ChartBudgetExceeded { .. })
        ));
        assert!(matches!(
            chart(8, 9, (5, 4), (0, 0), Assumptions::default()),
            Err(Error::InvalidParameters(_))
        ));
    }

    #[test]
    fn boundary_lines_of_fig_shape() {
        let c = chart(8, 9, (0, 20), (-2, 20), Assumptions::default()).unwrap();
        let sums: Vec<(i64, i64, i64)> =
            c.boundary_lines.iter().map(|l| (l.a, l.b, l.c)).collect();
        assert_eq!(
            sums,
            vec![(1, 0, 8), (1, 0, 14), (0, 1, 8), (-1, 1, 3), (1, 1, 17), (1, 1, 16)]
        );
    }

    #[test]
    fn svg_is_well_formed_enough() {
        let c = chart(8, 9, (0, 20), (-2, 20), Assumptions::default()).unwrap();
        let svg = c.to_svg();
        assert!(svg.starts_with("<svg"));
        assert!(svg.ends_with("</svg>\n"));
        assert_eq!(svg.matches("<rect").count(), 1 + 21 * 23 + 7);
        assert_eq!(svg.matches("<line").count(), 6);
    }

    #[test]
    fn bs_flag_flips_exactly_the_open_triangle() {
        let plain = chart(8, 9, (0, 20), (-2, 20), Assumptions::default()).unwrap();
        let bs = chart(8, 9, (0, 20), (-2, 20), Assumptions::with_beilinson_soule()).unwrap();
        for (d, e, v) in plain.iter_cells() {
            let v_bs = bs.cell(d, e);
            let in_triangle = d + e > 17 && e < 8 && (8..=14).contains(&d);
            if in_triangle {
                assert_eq!(region_code(v), "BS", "({d},{e})");
                assert_eq!(region_code(v_bs), "ISO", "({d},{e})");
            } else {
                assert_eq!(v, v_bs, "({d},{e})");
            }
        }
    }
}
