//! Deterministic SVG plots: scatter with error bars, optional fitted line
//! with a slope annotation, log-log axes where the plot spec asks for
//! them. Same input bytes, same output bytes — the plots are golden-file
//! testable.

use glab::fluct::{fit_transversal_exponent, LogCorrection, ProfileCsvRow, PROFILE_CSV_HEADER};
use glab::shape::{ShapeCsvRow, SHAPE_CSV_HEADER};
use glab::stats::least_squares;

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlotSpec {
    /// Median deviation profile on log-log axes with a fitted slope.
    DeviationLogLog,
    /// Per-scale means with error bars and the sqrt(ln n / n) rate curve.
    Convergence,
    /// Estimates against the transverse coordinate q, with error bars.
    ShapePoints,
}

impl PlotSpec {
    pub fn parse(name: &str) -> CliResult<Self> {
        match name {
            "deviation-loglog" => Ok(PlotSpec::DeviationLogLog),
            "convergence" => Ok(PlotSpec::Convergence),
            "shape-points" => Ok(PlotSpec::ShapePoints),
            other => Err(CliError::InvalidConfig(format!(
                "unknown plot spec {other:?} (want deviation-loglog, convergence, shape-points)"
            ))),
        }
    }
}

/// (x, y, optional (err_lo, err_hi) in y units).
type DataPoint = (f64, f64, Option<(f64, f64)>);

struct Series {
    points: Vec<DataPoint>,
    /// Fitted overlay sampled as a polyline.
    fit: Vec<(f64, f64)>,
    annotation: String,
    title: String,
    x_label: String,
    y_label: String,
}

/// Render a CSV into an SVG string. Fails (writing nothing) on schema
/// mismatches or an empty data section.
pub fn emit_plot(csv_text: &str, spec: PlotSpec) -> CliResult<String> {
    let mut lines = csv_text.lines();
    let header = lines.next().unwrap_or("");
    let rows: Vec<&str> = lines.filter(|l| !l.trim().is_empty()).collect();
    if rows.is_empty() {
        return Err(CliError::InvalidConfig("CSV has no data rows".into()));
    }
    let series = match spec {
        PlotSpec::DeviationLogLog => deviation_series(header, &rows)?,
        PlotSpec::Convergence => convergence_series(header, &rows)?,
        PlotSpec::ShapePoints => shape_points_series(header, &rows)?,
    };
    Ok(render(&series))
}

fn check_header(actual: &str, expected: &str) -> CliResult<()> {
    if actual == expected {
        return Ok(());
    }
    let a: Vec<&str> = actual.split(',').collect();
    let e: Vec<&str> = expected.split(',').collect();
    for (i, want) in e.iter().enumerate() {
        match a.get(i) {
            Some(got) if got == want => continue,
            Some(got) => {
                return Err(CliError::InvalidConfig(format!(
                    "CSV column {} is {got:?}, want {want:?}",
                    i + 1
                )))
            }
            None => {
                return Err(CliError::InvalidConfig(format!(
                    "CSV is missing column {} ({want:?})",
                    i + 1
                )))
            }
        }
    }
    Err(CliError::InvalidConfig(format!(
        "CSV has {} extra column(s) beyond {:?}",
        a.len() - e.len(),
        expected
    )))
}

fn deviation_series(header: &str, rows: &[&str]) -> CliResult<Series> {
    check_header(header, PROFILE_CSV_HEADER)?;
    let parsed: Vec<ProfileCsvRow> = rows
        .iter()
        .map(|r| ProfileCsvRow::parse_csv(r).map_err(CliError::from))
        .collect::<CliResult<_>>()?;
    let median: Vec<&ProfileCsvRow> = parsed.iter().filter(|r| r.quantile == 0.5).collect();
    if median.is_empty() {
        return Err(CliError::InvalidConfig(
            "no median (quantile 0.5) rows to plot".into(),
        ));
    }
    let mut points = Vec::new();
    let mut fit_series = Vec::new();
    for row in &median {
        if row.value <= 0.0 {
            continue;
        }
        let x = (row.n as f64).ln();
        let y = row.value.ln();
        let err = if row.ci_lo > 0.0 && row.ci_hi > 0.0 {
            Some((row.ci_lo.ln(), row.ci_hi.ln()))
        } else {
            None
        };
        points.push((x, y, err));
        fit_series.push((row.n, row.value));
    }
    if points.is_empty() {
        return Err(CliError::InvalidConfig(
            "all median deviations are nonpositive; nothing to plot on log axes".into(),
        ));
    }
    let (fit, annotation) = match fit_transversal_exponent(&fit_series, 0.5, LogCorrection::None)
    {
        Ok(f) => {
            let xs: Vec<f64> = points.iter().map(|p| p.0).collect();
            let (lo, hi) = (
                xs.iter().cloned().fold(f64::INFINITY, f64::min),
                xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
            );
            (
                vec![
                    (lo, f.intercept + f.xi_hat * lo),
                    (hi, f.intercept + f.xi_hat * hi),
                ],
                format!("slope = {:.3}", f.xi_hat),
            )
        }
        Err(_) => (Vec::new(), String::new()),
    };
    Ok(Series {
        points,
        fit,
        annotation,
        title: "median max deviation vs scale (log-log)".into(),
        x_label: "ln n".into(),
        y_label: "ln median deviation".into(),
    })
}

fn convergence_series(header: &str, rows: &[&str]) -> CliResult<Series> {
    check_header(header, SHAPE_CSV_HEADER)?;
    let parsed: Vec<ShapeCsvRow> = rows
        .iter()
        .map(|r| ShapeCsvRow::parse_csv(r).map_err(CliError::from))
        .collect::<CliResult<_>>()?;
    let points: Vec<DataPoint> = parsed
        .iter()
        .map(|r| {
            (
                r.n as f64,
                r.mean,
                Some((r.mean - 2.0 * r.stderr, r.mean + 2.0 * r.stderr)),
            )
        })
        .collect();
    // Rate-form overlay: mean(n) = a - b * sqrt(ln n / n).
    let xs: Vec<f64> = parsed
        .iter()
        .map(|r| ((r.n as f64).ln() / r.n as f64).sqrt())
        .collect();
    let ys: Vec<f64> = parsed.iter().map(|r| r.mean).collect();
    let (fit, annotation) = match least_squares(&xs, &ys) {
        Ok(line) => {
            let (a, b) = (line.intercept, -line.slope);
            let n_lo = parsed.iter().map(|r| r.n).min().expect("nonempty") as f64;
            let n_hi = parsed.iter().map(|r| r.n).max().expect("nonempty") as f64;
            let curve: Vec<(f64, f64)> = (0..=100)
                .map(|i| {
                    let n = n_lo + (n_hi - n_lo) * i as f64 / 100.0;
                    (n, a - b * (n.ln() / n).sqrt())
                })
                .collect();
            (curve, format!("a = {a:.4}, b = {b:.3}"))
        }
        Err(_) => (Vec::new(), String::new()),
    };
    Ok(Series {
        points,
        fit,
        annotation,
        title: "normalized diagonal passage time vs scale".into(),
        x_label: "n".into(),
        y_label: "mean T/n".into(),
    })
}

fn shape_points_series(header: &str, rows: &[&str]) -> CliResult<Series> {
    check_header(header, SHAPE_CSV_HEADER)?;
    let parsed: Vec<ShapeCsvRow> = rows
        .iter()
        .map(|r| ShapeCsvRow::parse_csv(r).map_err(CliError::from))
        .collect::<CliResult<_>>()?;
    let points = parsed
        .iter()
        .map(|r| {
            (
                r.direction.as_q(),
                r.mean,
                Some((r.mean - 2.0 * r.stderr, r.mean + 2.0 * r.stderr)),
            )
        })
        .collect();
    Ok(Series {
        points,
        fit: Vec::new(),
        annotation: String::new(),
        title: "normalized passage time vs direction".into(),
        x_label: "q".into(),
        y_label: "mean".into(),
    })
}

const W: f64 = 800.0;
const H: f64 = 600.0;
const ML: f64 = 80.0;
const MR: f64 = 30.0;
const MT: f64 = 50.0;
const MB: f64 = 70.0;

fn render(series: &Series) -> String {
    let xs: Vec<f64> = series
        .points
        .iter()
        .map(|p| p.0)
        .chain(series.fit.iter().map(|p| p.0))
        .collect();
    let mut ys: Vec<f64> = series
        .points
        .iter()
        .map(|p| p.1)
        .chain(series.fit.iter().map(|p| p.1))
        .collect();
    for p in &series.points {
        if let Some((lo, hi)) = p.2 {
            ys.push(lo);
            ys.push(hi);
        }
    }
    let (x_lo, x_hi) = padded_range(&xs);
    let (y_lo, y_hi) = padded_range(&ys);
    let px = |x: f64| ML + (x - x_lo) / (x_hi - x_lo) * (W - ML - MR);
    let py = |y: f64| H - MB - (y - y_lo) / (y_hi - y_lo) * (H - MT - MB);

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{W}\" height=\"{H}\" \
         viewBox=\"0 0 {W} {H}\">\n"
    ));
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    svg.push_str(&format!(
        "<text x=\"{:.2}\" y=\"28\" font-family=\"sans-serif\" font-size=\"18\" \
         text-anchor=\"middle\">{}</text>\n",
        W / 2.0,
        series.title
    ));

    // Axes.
    svg.push_str(&format!(
        "<line x1=\"{ML:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\"/>\n",
        H - MB,
        W - MR,
        H - MB
    ));
    svg.push_str(&format!(
        "<line x1=\"{ML:.2}\" y1=\"{MT:.2}\" x2=\"{ML:.2}\" y2=\"{:.2}\" stroke=\"black\"/>\n",
        H - MB
    ));

    // Ticks: five per axis, inclusive of the ends.
    for i in 0..=4 {
        let t = i as f64 / 4.0;
        let xv = x_lo + t * (x_hi - x_lo);
        let xp = px(xv);
        svg.push_str(&format!(
            "<line x1=\"{xp:.2}\" y1=\"{:.2}\" x2=\"{xp:.2}\" y2=\"{:.2}\" stroke=\"black\"/>\n",
            H - MB,
            H - MB + 6.0
        ));
        svg.push_str(&format!(
            "<text x=\"{xp:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"12\" \
             text-anchor=\"middle\">{}</text>\n",
            H - MB + 22.0,
            fmt_tick(xv)
        ));
        let yv = y_lo + t * (y_hi - y_lo);
        let yp = py(yv);
        svg.push_str(&format!(
            "<line x1=\"{:.2}\" y1=\"{yp:.2}\" x2=\"{ML:.2}\" y2=\"{yp:.2}\" stroke=\"black\"/>\n",
            ML - 6.0
        ));
        svg.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"12\" \
             text-anchor=\"end\">{}</text>\n",
            ML - 10.0,
            yp + 4.0,
            fmt_tick(yv)
        ));
    }

    // Axis labels.
    svg.push_str(&format!(
        "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"14\" \
         text-anchor=\"middle\">{}</text>\n",
        (ML + W - MR) / 2.0,
        H - 18.0,
        series.x_label
    ));
    svg.push_str(&format!(
        "<text x=\"20\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"14\" \
         text-anchor=\"middle\" transform=\"rotate(-90 20 {:.2})\">{}</text>\n",
        (MT + H - MB) / 2.0,
        (MT + H - MB) / 2.0,
        series.y_label
    ));

    // Fitted overlay.
    if series.fit.len() >= 2 {
        let pts: Vec<String> = series
            .fit
            .iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", px(x), py(y)))
            .collect();
        svg.push_str(&format!(
            "<polyline points=\"{}\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\"/>\n",
            pts.join(" ")
        ));
    }
    if !series.annotation.is_empty() {
        svg.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"sans-serif\" font-size=\"14\" \
             fill=\"#d62728\" text-anchor=\"end\">{}</text>\n",
            W - MR - 8.0,
            MT + 18.0,
            series.annotation
        ));
    }

    // Error bars under the markers.
    for &(x, _, err) in &series.points {
        if let Some((lo, hi)) = err {
            let xp = px(x);
            svg.push_str(&format!(
                "<line x1=\"{xp:.2}\" y1=\"{:.2}\" x2=\"{xp:.2}\" y2=\"{:.2}\" \
                 stroke=\"#1f77b4\"/>\n",
                py(lo),
                py(hi)
            ));
        }
    }
    for &(x, y, _) in &series.points {
        svg.push_str(&format!(
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3.5\" fill=\"#1f77b4\"/>\n",
            px(x),
            py(y)
        ));
    }
    svg.push_str("</svg>\n");
    svg
}

fn padded_range(values: &[f64]) -> (f64, f64) {
    let lo = values.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if lo == hi {
        return (lo - 1.0, hi + 1.0);
    }
    let pad = (hi - lo) * 0.05;
    (lo - pad, hi + pad)
}

fn fmt_tick(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    let a = v.abs();
    if v.fract() == 0.0 && a < 1e6 {
        format!("{}", v as i64)
    } else if !(0.01..1e5).contains(&a) {
        format!("{v:.2e}")
    } else {
        format!("{v:.3}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PROFILE_CSV: &str = "n,s,mode,reps,quantile,value,ci_lo,ci_hi,alphabet\n\
        128,0.5,dlpp,100,0.5,22,19,25,\n128,0.5,dlpp,100,0.9,31,28,36,\n\
        256,0.5,dlpp,100,0.5,37,33,41,\n256,0.5,dlpp,100,0.9,52,47,58,\n\
        512,0.5,dlpp,100,0.5,61,55,67,\n512,0.5,dlpp,100,0.9,88,79,95,\n\
        1024,0.5,dlpp,100,0.5,101,92,110,\n1024,0.5,dlpp,100,0.9,150,139,163,\n";

    #[test]
    fn deviation_plot_is_deterministic_and_annotated() {
        let a = emit_plot(PROFILE_CSV, PlotSpec::DeviationLogLog).unwrap();
        let b = emit_plot(PROFILE_CSV, PlotSpec::DeviationLogLog).unwrap();
        assert_eq!(a, b);
        assert!(a.contains("slope ="));
        assert!(a.contains("<circle"));
        assert!(a.contains("<polyline"));
    }

    #[test]
    fn empty_csv_is_an_error() {
        let err = emit_plot("n,s,mode,reps,quantile,value,ci_lo,ci_hi,alphabet\n",
            PlotSpec::DeviationLogLog);
        assert!(err.is_err());
    }

    #[test]
    fn schema_mismatch_names_the_column() {
        let err = emit_plot(
            "n,s,kind,reps,quantile,value,ci_lo,ci_hi,alphabet\n1,2,3,4,5,6,7,8,9\n",
            PlotSpec::DeviationLogLog,
        )
        .unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("column 3"), "{msg}");
        assert!(msg.contains("mode"), "{msg}");
    }

    #[test]
    fn convergence_plot_overlays_the_rate_curve() {
        let csv = "direction_kind,q_or_p_or_xy,n,reps,seed,mean,stderr,normalization\n\
            q,0,64,100,1,1.31,0.004,per-n\nq,0,128,100,2,1.345,0.003,per-n\n\
            q,0,256,100,3,1.37,0.002,per-n\nq,0,512,100,4,1.385,0.0015,per-n\n";
        let svg = emit_plot(csv, PlotSpec::Convergence).unwrap();
        assert!(svg.contains("a = "));
        assert!(svg.contains("<polyline"));
    }

    #[test]
    fn unknown_spec_rejected() {
        assert!(PlotSpec::parse("pie-chart").is_err());
    }
}
