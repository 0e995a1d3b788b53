use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use super::{Metric, SummaryRow};
use crate::error::{MarketError, Result};

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 50.0;
const COLOURS: [&str; 10] =
    ["#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"];

fn distinct<'a>(items: impl Iterator<Item = &'a str>) -> Vec<&'a str> {
    let mut out: Vec<&str> = Vec::new();
    for item in items {
        if !out.contains(&item) {
            out.push(item);
        }
    }
    out
}

/// SVG line chart of one metric for one culture: per procedure, the mean as
/// a polyline over `n` and the min–max range as a translucent polygon.
pub fn render_svg(summary: &[SummaryRow], culture: &str, metric: Metric) -> String {
    let rows: Vec<&SummaryRow> = summary.iter().filter(|r| r.culture == culture).collect();
    let (mut x0, mut x1) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY);
    for r in &rows {
        let band = r.band(metric);
        x0 = x0.min(r.n as f64);
        x1 = x1.max(r.n as f64);
        y0 = y0.min(band.min);
        y1 = y1.max(band.max);
    }
    if x0 >= x1 {
        x1 = x0 + 1.0;
    }
    if y0 >= y1 {
        y1 = y0 + 1.0;
    }
    let sx = |x: f64| MARGIN + (x - x0) / (x1 - x0) * (WIDTH - 2.0 * MARGIN);
    let sy = |y: f64| HEIGHT - MARGIN - (y - y0) / (y1 - y0) * (HEIGHT - 2.0 * MARGIN);

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#);
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="20" text-anchor="middle" font-family="sans-serif" font-size="14">{} ({})</text>"#,
        WIDTH / 2.0,
        metric.name(),
        culture
    );
    let (left, bottom, right, top) = (MARGIN, HEIGHT - MARGIN, WIDTH - MARGIN, MARGIN);
    let _ = writeln!(svg, r#"<path d="M{left},{top} L{left},{bottom} L{right},{bottom}" fill="none" stroke="black"/>"#);
    for (value, anchor_x, anchor_y, align) in
        [(x0, left, bottom + 16.0, "middle"), (x1, right, bottom + 16.0, "middle"), (y0, left - 6.0, bottom, "end"), (y1, left - 6.0, top + 4.0, "end")]
    {
        let _ = writeln!(
            svg,
            r#"<text x="{anchor_x}" y="{anchor_y}" text-anchor="{align}" font-family="sans-serif" font-size="11">{}</text>"#,
            super::format_float(value)
        );
    }
    for (i, procedure) in distinct(rows.iter().map(|r| r.procedure.as_str())).into_iter().enumerate() {
        let colour = COLOURS[i % COLOURS.len()];
        let mut series: Vec<&&SummaryRow> = rows.iter().filter(|r| r.procedure == procedure).collect();
        series.sort_by_key(|r| r.n);
        let point = |r: &SummaryRow, y: f64| format!("{:.2},{:.2}", sx(r.n as f64), sy(y));
        let upper = series.iter().map(|r| point(r, r.band(metric).max));
        let lower = series.iter().rev().map(|r| point(r, r.band(metric).min));
        let band: Vec<String> = upper.chain(lower).collect();
        let _ = writeln!(svg, r#"<polygon points="{}" fill="{colour}" fill-opacity="0.15" stroke="none"/>"#, band.join(" "));
        let mean: Vec<String> = series.iter().map(|r| point(r, r.band(metric).mean)).collect();
        let _ = writeln!(svg, r#"<polyline points="{}" fill="none" stroke="{colour}" stroke-width="1.5"/>"#, mean.join(" "));
        let _ = writeln!(
            svg,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="11" fill="{colour}">{procedure}</text>"#,
            right - 90.0,
            top + 14.0 * (i as f64 + 1.0)
        );
    }
    svg.push_str("</svg>\n");
    svg
}

/// Writes one `<culture>_<metric>.svg` file per culture and metric into
/// `dir`, returning the paths written.
pub fn emit_plot(summary: &[SummaryRow], dir: &Path) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).map_err(|e| MarketError::InvalidArgument(format!("{}: {e}", dir.display())))?;
    let mut written = Vec::new();
    for culture in distinct(summary.iter().map(|r| r.culture.as_str())) {
        for metric in Metric::ALL {
            let path = dir.join(format!("{culture}_{}.svg", metric.name()));
            std::fs::write(&path, render_svg(summary, culture, metric))
                .map_err(|e| MarketError::InvalidArgument(format!("{}: {e}", path.display())))?;
            written.push(path);
        }
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiment::Band;

    fn summary_row(procedure: &str, n: usize, mean: f64) -> SummaryRow {
        let band = Band { mean, min: mean - 0.1, max: mean + 0.1 };
        SummaryRow {
            culture: "ic-sp".into(),
            procedure: procedure.into(),
            n,
            count: 1,
            ratio_ark: band,
            ratio_mrk: band,
            num_deals: band,
            max_deal_size: band,
        }
    }

    #[test]
    fn one_polyline_per_procedure() {
        let summary = vec![
            summary_row("ttc", 2, 0.9),
            summary_row("ttc", 4, 0.95),
            summary_row("crawler", 2, 0.8),
            summary_row("crawler", 4, 0.85),
        ];
        let svg = render_svg(&summary, "ic-sp", Metric::RatioArk);
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert_eq!(svg.matches("<polygon").count(), 2);
        assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    }
}
