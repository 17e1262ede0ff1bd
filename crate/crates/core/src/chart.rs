//! Deterministic SVG line charts of an AHP series against a fuzzy series.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::trend::ComparisonSeries;

#[derive(Debug, Clone, PartialEq)]
pub struct ChartSpec {
    pub title: String,
    pub x_labels: Vec<String>,
    pub ahp: Vec<f64>,
    pub fuzzy: Vec<f64>,
    pub width: u32,
    pub height: u32,
    pub ahp_legend: String,
    pub fuzzy_legend: String,
}

impl ChartSpec {
    pub fn from_series(series: &ComparisonSeries) -> Self {
        Self {
            title: format!("AHP weights and fuzzy scores: {}", series.name),
            x_labels: series.labels().to_vec(),
            ahp: series.ahp().to_vec(),
            fuzzy: series.fuzzy().to_vec(),
            width: 800,
            height: 480,
            ahp_legend: "AHP".into(),
            fuzzy_legend: "Fuzzy MCDM".into(),
        }
    }

    /// Upper end of the y axis: 10% above the largest value.
    pub fn y_max(&self) -> f64 {
        let max = self
            .ahp
            .iter()
            .chain(&self.fuzzy)
            .copied()
            .fold(0.0_f64, f64::max);
        if max > 0.0 {
            max * 1.1
        } else {
            1.0
        }
    }
}

const MARGIN_LEFT: f64 = 64.0;
const MARGIN_RIGHT: f64 = 150.0;
const MARGIN_TOP: f64 = 48.0;
const MARGIN_BOTTOM: f64 = 64.0;
const GRID_STEP: f64 = 0.1;

fn escape(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

/// Renders the chart. Identical specs give byte-identical documents.
pub fn render_chart(spec: &ChartSpec) -> Result<String> {
    let n = spec.x_labels.len();
    if n < 2 {
        return Err(Error::SeriesTooShort(n));
    }
    if spec.ahp.len() != n || spec.fuzzy.len() != n {
        return Err(Error::LengthMismatch {
            name: spec.title.clone(),
            what: "chart values",
            expected: n,
            found: if spec.ahp.len() != n {
                spec.ahp.len()
            } else {
                spec.fuzzy.len()
            },
        });
    }

    let (w, h) = (f64::from(spec.width), f64::from(spec.height));
    let plot_w = w - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = h - MARGIN_TOP - MARGIN_BOTTOM;
    let y_max = spec.y_max();
    let x_at = |i: usize| MARGIN_LEFT + plot_w * i as f64 / (n - 1) as f64;
    let y_at = |v: f64| MARGIN_TOP + plot_h * (1.0 - v / y_max);
    let bottom = MARGIN_TOP + plot_h;

    let mut svg = String::new();
    // Writing into a String cannot fail.
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}" font-family="sans-serif" font-size="12">"#,
        spec.width, spec.height, spec.width, spec.height
    );
    let _ = writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{:.2}" y="24" text-anchor="middle" font-size="15">{}</text>"#,
        w / 2.0,
        escape(&spec.title)
    );

    let _ = writeln!(
        svg,
        r##"<g class="grid" stroke="#dddddd" stroke-width="1">"##
    );
    let steps = (y_max / GRID_STEP).floor() as usize;
    for k in 0..=steps {
        let v = k as f64 * GRID_STEP;
        let y = y_at(v);
        let _ = writeln!(
            svg,
            r#"<line x1="{:.2}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}"/>"#,
            MARGIN_LEFT,
            MARGIN_LEFT + plot_w
        );
    }
    let _ = writeln!(svg, "</g>");
    let _ = writeln!(svg, r#"<g class="y-ticks" text-anchor="end">"#);
    for k in 0..=steps {
        let v = k as f64 * GRID_STEP;
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}">{v:.1}</text>"#,
            MARGIN_LEFT - 6.0,
            y_at(v) + 4.0
        );
    }
    let _ = writeln!(svg, "</g>");

    let _ = writeln!(
        svg,
        r#"<g class="axes" stroke="black" stroke-width="1"><line x1="{l:.2}" y1="{t:.2}" x2="{l:.2}" y2="{b:.2}"/><line x1="{l:.2}" y1="{b:.2}" x2="{r:.2}" y2="{b:.2}"/></g>"#,
        l = MARGIN_LEFT,
        t = MARGIN_TOP,
        b = bottom,
        r = MARGIN_LEFT + plot_w
    );

    let _ = writeln!(svg, r#"<g class="x-ticks" text-anchor="middle">"#);
    for (i, label) in spec.x_labels.iter().enumerate() {
        let x = x_at(i);
        let _ = writeln!(
            svg,
            r#"<line x1="{x:.2}" y1="{bottom:.2}" x2="{x:.2}" y2="{:.2}" stroke="black"/><text x="{x:.2}" y="{:.2}">{}</text>"#,
            bottom + 5.0,
            bottom + 20.0,
            escape(label)
        );
    }
    let _ = writeln!(svg, "</g>");

    let points = |values: &[f64]| {
        values
            .iter()
            .enumerate()
            .map(|(i, &v)| format!("{:.2},{:.2}", x_at(i), y_at(v)))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let _ = writeln!(
        svg,
        r##"<polyline class="series-fuzzy" fill="none" stroke="#1f77b4" stroke-width="2" points="{}"/>"##,
        points(&spec.fuzzy)
    );
    let _ = writeln!(
        svg,
        r##"<polyline class="series-ahp" fill="none" stroke="#d62728" stroke-width="2" stroke-dasharray="6 4" points="{}"/>"##,
        points(&spec.ahp)
    );

    let lx = MARGIN_LEFT + plot_w + 16.0;
    let _ = writeln!(
        svg,
        r##"<g class="legend"><line x1="{lx:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#1f77b4" stroke-width="2"/><text x="{:.2}" y="{:.2}">{}</text><line x1="{lx:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="#d62728" stroke-width="2" stroke-dasharray="6 4"/><text x="{:.2}" y="{:.2}">{}</text></g>"##,
        MARGIN_TOP + 10.0,
        lx + 24.0,
        MARGIN_TOP + 10.0,
        lx + 30.0,
        MARGIN_TOP + 14.0,
        escape(&spec.fuzzy_legend),
        MARGIN_TOP + 30.0,
        lx + 24.0,
        MARGIN_TOP + 30.0,
        lx + 30.0,
        MARGIN_TOP + 34.0,
        escape(&spec.ahp_legend),
    );
    svg.push_str("</svg>\n");
    Ok(svg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(labels: &[&str], ahp: &[f64], fuzzy: &[f64]) -> ChartSpec {
        let series = ComparisonSeries::new(
            "test",
            labels.iter().map(|s| s.to_string()).collect(),
            ahp.to_vec(),
            fuzzy.to_vec(),
        )
        .unwrap();
        ChartSpec::from_series(&series)
    }

    fn polyline_points(svg: &str, class: &str) -> Vec<(f64, f64)> {
        let start = svg.find(&format!(r#"class="{class}""#)).unwrap();
        let rest = &svg[start..];
        let p = rest.find("points=\"").unwrap() + 8;
        let end = rest[p..].find('"').unwrap();
        rest[p..p + end]
            .split(' ')
            .map(|xy| {
                let (x, y) = xy.split_once(',').unwrap();
                (x.parse().unwrap(), y.parse().unwrap())
            })
            .collect()
    }

    #[test]
    fn flat_two_point_lines_are_horizontal() {
        let svg = render_chart(&spec(&["A", "B"], &[0.5, 0.5], &[0.5, 0.5])).unwrap();
        let ahp = polyline_points(&svg, "series-ahp");
        let fuzzy = polyline_points(&svg, "series-fuzzy");
        assert_eq!(ahp.len(), 2);
        assert_eq!(ahp[0].1, ahp[1].1);
        assert_eq!(ahp, fuzzy);
    }

    #[test]
    fn y_axis_spans_to_ten_percent_above_max() {
        let s = spec(&["A", "B", "C"], &[0.1, 0.2, 0.3], &[0.6, 0.2, 0.4]);
        assert!((s.y_max() - 0.66).abs() < 1e-12);
        let svg = render_chart(&s).unwrap();
        let fuzzy = polyline_points(&svg, "series-fuzzy");
        // The peak sits below the top margin, not on it.
        assert!(fuzzy[0].1 > MARGIN_TOP);
        assert!(svg.contains(">0.6</text>"));
    }

    #[test]
    fn deterministic_and_escaped() {
        let s = spec(&["A&B", "<C>"], &[0.1, 0.2], &[0.3, 0.4]);
        let a = render_chart(&s).unwrap();
        assert_eq!(a, render_chart(&s).unwrap());
        assert!(a.contains("A&amp;B"));
        assert!(a.contains("&lt;C&gt;"));
    }

    #[test]
    fn too_short() {
        let mut s = spec(&["A", "B"], &[0.1, 0.2], &[0.3, 0.4]);
        s.x_labels.truncate(1);
        assert_eq!(render_chart(&s), Err(Error::SeriesTooShort(1)));
    }
}
