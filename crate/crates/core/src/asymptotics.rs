//! Least-squares fits of `Re QV_r` against `a + b·2π ln(r-2)/(r-2) + c/(r-2)`,
//! the same model with `a` pinned to the hyperbolic volume, and an affine
//! fit of `b` against the genus.
//!
//! All fits go through a Householder QR of the design matrix rather than the
//! normal equations.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// `Re QV_r(M_g)` for increasing odd `r ≥ 5`.
#[derive(Clone, Debug, PartialEq)]
pub struct QvSeries {
    g: u32,
    points: Vec<(u32, f64)>,
}

impl QvSeries {
    pub fn new(g: u32, points: Vec<(u32, f64)>) -> Result<Self> {
        for (i, &(r, qv)) in points.iter().enumerate() {
            if r < 5 || r % 2 == 0 {
                return Err(Error::InvalidSeries(format!(
                    "r = {r} is not an odd level >= 5"
                )));
            }
            if i > 0 && r <= points[i - 1].0 {
                return Err(Error::InvalidSeries(format!("r = {r} does not increase")));
            }
            if !qv.is_finite() {
                return Err(Error::InvalidSeries(format!("non-finite value at r = {r}")));
            }
        }
        Ok(QvSeries { g, points })
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    pub fn points(&self) -> &[(u32, f64)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Keeps the points with `r <= r_max`.
    pub fn truncated(&self, r_max: u32) -> QvSeries {
        QvSeries {
            g: self.g,
            points: self
                .points
                .iter()
                .copied()
                .filter(|&(r, _)| r <= r_max)
                .collect(),
        }
    }

    pub fn r_max(&self) -> Option<u32> {
        self.points.last().map(|p| p.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelTag {
    Free,
    FixedVolume,
    Affine,
}

impl ModelTag {
    pub fn as_str(self) -> &'static str {
        match self {
            ModelTag::Free => "free",
            ModelTag::FixedVolume => "fixed_volume",
            ModelTag::Affine => "affine",
        }
    }
}

impl fmt::Display for ModelTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ModelTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "free" => Ok(ModelTag::Free),
            "fixed_volume" | "fixed-volume" | "fixed" => Ok(ModelTag::FixedVolume),
            "affine" => Ok(ModelTag::Affine),
            other => Err(Error::Parse {
                line: 0,
                message: format!("unknown model {other:?}"),
            }),
        }
    }
}

/// Coefficients of one fit.
///
/// For the affine model `a` is the intercept and `b` the slope, `c` is absent.
/// For the fixed-volume model `a` is the pinned volume.
#[derive(Clone, Debug, PartialEq)]
pub struct FitResult {
    pub g: Option<u32>,
    pub model: ModelTag,
    pub a: f64,
    pub b: f64,
    pub c: Option<f64>,
    pub rss: f64,
    pub r_squared: Option<f64>,
}

impl FitResult {
    pub fn slope(&self) -> f64 {
        self.b
    }

    pub fn intercept(&self) -> f64 {
        self.a
    }

    /// Model value at level `r`, or at genus `r` for the affine model.
    pub fn predict(&self, r: f64) -> f64 {
        if self.model == ModelTag::Affine {
            return self.a + self.b * r;
        }
        let x = r - 2.0;
        self.a + self.b * log_basis(x) + self.c.unwrap_or(0.0) / x
    }
}

fn log_basis(x: f64) -> f64 {
    2.0 * std::f64::consts::PI * x.ln() / x
}

/// Columns `2π ln(r-2)/(r-2)` and `1/(r-2)`, optionally preceded by a column of ones.
pub fn design_matrix(series: &QvSeries, with_constant: bool) -> DMatrix<f64> {
    let cols = if with_constant { 3 } else { 2 };
    let pts = series.points();
    DMatrix::from_fn(pts.len(), cols, |i, j| {
        let x = pts[i].0 as f64 - 2.0;
        match (with_constant, j) {
            (true, 0) => 1.0,
            (true, 1) | (false, 0) => log_basis(x),
            _ => 1.0 / x,
        }
    })
}

/// Minimizes `|X β − y|₂` through `X = QR`, `R β = Qᵀ y`.
fn least_squares(x: DMatrix<f64>, y: &DVector<f64>) -> Result<(DVector<f64>, f64)> {
    let (rows, cols) = x.shape();
    if rows < cols {
        return Err(Error::RankDeficient);
    }
    let qr = x.clone().qr();
    let r = qr.r();
    let scale = r.diagonal().amax();
    if scale == 0.0 || r.diagonal().iter().any(|d| d.abs() <= scale * 1e-12) {
        return Err(Error::RankDeficient);
    }
    let qty = qr.q().transpose() * y;
    let beta = r.solve_upper_triangular(&qty).ok_or(Error::RankDeficient)?;
    let resid = y - x * &beta;
    Ok((beta, resid.norm_squared()))
}

fn values(series: &QvSeries, shift: f64) -> DVector<f64> {
    DVector::from_iterator(series.len(), series.points().iter().map(|p| p.1 - shift))
}

pub fn fit_free(series: &QvSeries) -> Result<FitResult> {
    if series.len() < 3 {
        return Err(Error::NotEnoughData(format!(
            "the free model needs 3 points, got {}",
            series.len()
        )));
    }
    let (beta, rss) = least_squares(design_matrix(series, true), &values(series, 0.0))?;
    Ok(FitResult {
        g: Some(series.g()),
        model: ModelTag::Free,
        a: beta[0],
        b: beta[1],
        c: Some(beta[2]),
        rss,
        r_squared: None,
    })
}

/// Fits `qv − vol` against the two non-constant columns.
pub fn fit_fixed_volume(series: &QvSeries, vol: f64) -> Result<FitResult> {
    if series.len() < 2 {
        return Err(Error::NotEnoughData(format!(
            "the fixed-volume model needs 2 points, got {}",
            series.len()
        )));
    }
    let (beta, rss) = least_squares(design_matrix(series, false), &values(series, vol))?;
    Ok(FitResult {
        g: Some(series.g()),
        model: ModelTag::FixedVolume,
        a: vol,
        b: beta[0],
        c: Some(beta[1]),
        rss,
        r_squared: None,
    })
}

/// Ordinary least squares line `b = intercept + slope · g`.
/// `r_squared` is 1 when all `b` are equal.
pub fn fit_affine(pairs: &[(u32, f64)]) -> Result<FitResult> {
    if pairs.len() < 2 {
        return Err(Error::NotEnoughData(format!(
            "an affine fit needs 2 pairs, got {}",
            pairs.len()
        )));
    }
    if pairs.iter().all(|p| p.0 == pairs[0].0) {
        return Err(Error::RankDeficient);
    }
    let x = DMatrix::from_fn(
        pairs.len(),
        2,
        |i, j| if j == 0 { 1.0 } else { pairs[i].0 as f64 },
    );
    let y = DVector::from_iterator(pairs.len(), pairs.iter().map(|p| p.1));
    let (beta, rss) = least_squares(x, &y)?;
    let mean = y.mean();
    let ss_tot: f64 = y.iter().map(|v| (v - mean).powi(2)).sum();
    let r_squared = if ss_tot == 0.0 {
        1.0
    } else {
        1.0 - rss / ss_tot
    };
    Ok(FitResult {
        g: None,
        model: ModelTag::Affine,
        a: beta[0],
        b: beta[1],
        c: None,
        rss,
        r_squared: Some(r_squared),
    })
}

/// A self-contained gnuplot script: data points, fitted curves and, when
/// known, the volume asymptote `y = Vol(M_g)` for each series.
pub fn gnuplot_script(series: &[QvSeries], fits: &[FitResult], volumes: &[(u32, f64)]) -> String {
    let mut out = String::new();
    out.push_str("set xlabel 'r'\nset ylabel 'Re QV_{r,2}'\nset key bottom right\n");
    for s in series {
        let _ = writeln!(out, "$qv{} << EOD", s.g());
        for (r, v) in s.points() {
            let _ = writeln!(out, "{r} {v:.17e}");
        }
        out.push_str("EOD\n");
    }
    let mut plots = Vec::new();
    for s in series {
        let g = s.g();
        plots.push(format!("$qv{g} using 1:2 with points pt 7 title 'M_{g}'"));
        for f in fits
            .iter()
            .filter(|f| f.g == Some(g) && f.model != ModelTag::Affine)
        {
            plots.push(format!(
                "{:.17e} + ({:.17e})*2*pi*log(x-2)/(x-2) + ({:.17e})/(x-2) with lines title 'M_{g} {}'",
                f.a,
                f.b,
                f.c.unwrap_or(0.0),
                f.model
            ));
        }
        if let Some((_, v)) = volumes.iter().find(|(vg, _)| *vg == g) {
            plots.push(format!("{v:.17e} with lines dt 2 title 'Vol(M_{g})'"));
        }
    }
    let hi = series
        .iter()
        .filter_map(QvSeries::r_max)
        .max()
        .unwrap_or(50);
    let _ = writeln!(out, "set xrange [3:{}]", hi + 2);
    if !plots.is_empty() {
        let _ = writeln!(out, "plot {}", plots.join(", \\\n     "));
    }
    out
}

/// Gnuplot script for the affine fit of `b` against `g`.
pub fn gnuplot_affine_script(pairs: &[(u32, f64)], fit: &FitResult) -> String {
    let mut out = String::from("set xlabel 'g'\nset ylabel 'b'\n$b << EOD\n");
    for (g, b) in pairs {
        let _ = writeln!(out, "{g} {b:.17e}");
    }
    out.push_str("EOD\n");
    let _ = writeln!(
        out,
        "plot $b using 1:2 with points pt 7 title 'b', {:.17e} + ({:.17e})*x with lines title 'R^2 = {:.4}'",
        fit.a,
        fit.b,
        fit.r_squared.unwrap_or(f64::NAN)
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn synthetic(g: u32, a: f64, b: f64, c: f64) -> QvSeries {
        let points = (5..=41)
            .step_by(2)
            .map(|r| {
                let x = r as f64 - 2.0;
                (r, a + b * log_basis(x) + c / x)
            })
            .collect();
        QvSeries::new(g, points).unwrap()
    }

    #[test]
    fn series_validation() {
        assert!(QvSeries::new(2, vec![(5, 1.0), (7, 2.0)]).is_ok());
        assert!(QvSeries::new(2, vec![(4, 1.0)]).is_err());
        assert!(QvSeries::new(2, vec![(3, 1.0)]).is_err());
        assert!(QvSeries::new(2, vec![(7, 1.0), (5, 2.0)]).is_err());
        assert!(QvSeries::new(2, vec![(5, f64::NAN)]).is_err());
    }

    #[test]
    fn exact_model_is_recovered() {
        let fit = fit_free(&synthetic(2, 1.0, 2.0, 3.0)).unwrap();
        assert!((fit.a - 1.0).abs() < 1e-12);
        assert!((fit.b - 2.0).abs() < 1e-12);
        assert!((fit.c.unwrap() - 3.0).abs() < 1e-12);
        assert!(fit.rss < 1e-24);

        let fixed = fit_fixed_volume(&synthetic(2, 12.5, -1.5, 0.25), 12.5).unwrap();
        assert!((fixed.b + 1.5).abs() < 1e-12);
        assert!((fixed.c.unwrap() - 0.25).abs() < 1e-12);
        assert!(fixed.rss < 1e-24);
    }

    #[test]
    fn residuals_are_orthogonal_to_the_basis() {
        let points = (5..=25)
            .step_by(2)
            .map(|r| (r, (r as f64).sqrt() + 0.1 * (r as f64).sin()))
            .collect();
        let series = QvSeries::new(3, points).unwrap();
        let fit = fit_free(&series).unwrap();
        let x = design_matrix(&series, true);
        let y = values(&series, 0.0);
        let beta = DVector::from_vec(vec![fit.a, fit.b, fit.c.unwrap()]);
        let resid = &y - &x * beta;
        for j in 0..3 {
            let col = x.column(j);
            let dot = col.dot(&resid);
            assert!(
                dot.abs() <= 1e-10 * col.norm() * y.norm(),
                "column {j}: {dot}"
            );
        }
    }

    #[test]
    fn constant_shift_moves_only_a() {
        let points: Vec<_> = (5..=21).step_by(2).map(|r| (r, (r as f64).ln())).collect();
        let base = fit_free(&QvSeries::new(2, points.clone()).unwrap()).unwrap();
        let shifted: Vec<_> = points.iter().map(|&(r, v)| (r, v + 7.0)).collect();
        let moved = fit_free(&QvSeries::new(2, shifted).unwrap()).unwrap();
        assert!((moved.a - base.a - 7.0).abs() < 1e-12);
        assert!((moved.b - base.b).abs() < 1e-12);
        assert!((moved.c.unwrap() - base.c.unwrap()).abs() < 1e-12);
    }

    #[test]
    fn too_few_points() {
        let two = QvSeries::new(2, vec![(5, 1.0), (7, 2.0)]).unwrap();
        assert!(matches!(fit_free(&two), Err(Error::NotEnoughData(_))));
        let one = QvSeries::new(2, vec![(5, 1.0)]).unwrap();
        assert!(matches!(
            fit_fixed_volume(&one, 1.0),
            Err(Error::NotEnoughData(_))
        ));
    }

    #[test]
    fn affine_conventions() {
        let two = fit_affine(&[(2, 1.0), (4, 5.0)]).unwrap();
        assert!((two.slope() - 2.0).abs() < 1e-14);
        assert!((two.intercept() + 3.0).abs() < 1e-14);
        assert!((two.r_squared.unwrap() - 1.0).abs() < 1e-14);

        let flat = fit_affine(&[(2, 3.0), (3, 3.0), (4, 3.0)]).unwrap();
        assert!(flat.slope().abs() < 1e-14);
        assert_eq!(flat.r_squared, Some(1.0));

        assert!(fit_affine(&[(2, 1.0)]).is_err());
        assert!(matches!(
            fit_affine(&[(2, 1.0), (2, 2.0)]),
            Err(Error::RankDeficient)
        ));
    }

    #[test]
    fn script_mentions_every_series() {
        let s = synthetic(4, 20.0, -2.0, -6.0);
        let fit = fit_free(&s).unwrap();
        let script = gnuplot_script(&[s], &[fit], &[(4, 23.6)]);
        assert!(script.contains("$qv4 << EOD"));
        assert!(script.contains("Vol(M_4)"));
        assert!(script.contains("plot "));
    }
}
