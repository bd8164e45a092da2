//! Tables of (parameter, deviation) pairs produced by the limit harnesses.

use crate::error::{Error, Result};

/// Rows whose deviation is at or below this floor are treated as exact and
/// left out of the order fit.
pub const FIT_FLOOR: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub parameter: f64,
    /// `None` when the row was skipped (e.g. a resonant parameter value).
    pub deviation: Option<f64>,
}

impl TableRow {
    pub fn skipped(&self) -> bool {
        self.deviation.is_none()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceTable {
    rows: Vec<TableRow>,
    estimated_order: Option<f64>,
}

impl ConvergenceTable {
    /// Builds a table from rows in parameter order. Parameters must be
    /// strictly increasing and deviations finite and nonnegative.
    pub fn new(rows: Vec<TableRow>) -> Result<Self> {
        for pair in rows.windows(2) {
            if pair[0].parameter.partial_cmp(&pair[1].parameter) != Some(std::cmp::Ordering::Less) {
                return Err(Error::Domain(format!(
                    "parameters must be strictly increasing ({} then {})",
                    pair[0].parameter, pair[1].parameter
                )));
            }
        }
        if let Some(row) = rows
            .iter()
            .find(|r| r.deviation.is_some_and(|d| !d.is_finite() || d < 0.0))
        {
            return Err(Error::Domain(format!(
                "deviation at parameter {} is not finite and nonnegative",
                row.parameter
            )));
        }
        let estimated_order = fit_order(&rows);
        Ok(Self {
            rows,
            estimated_order,
        })
    }

    pub fn rows(&self) -> &[TableRow] {
        &self.rows
    }

    /// Slope of `log(deviation)` against `log(1/parameter)`; `None` when
    /// fewer than two rows are usable.
    pub fn estimated_order(&self) -> Option<f64> {
        self.estimated_order
    }

    pub fn deviations(&self) -> Vec<Option<f64>> {
        self.rows.iter().map(|r| r.deviation).collect()
    }

    pub fn first_deviation(&self) -> Option<f64> {
        self.rows.iter().find_map(|r| r.deviation)
    }

    pub fn last_deviation(&self) -> Option<f64> {
        self.rows.iter().rev().find_map(|r| r.deviation)
    }

    /// CSV with header `s,deviation,skipped`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("s,deviation,skipped\n");
        for row in &self.rows {
            match row.deviation {
                Some(d) => out.push_str(&format!("{},{:e},false\n", row.parameter, d)),
                None => out.push_str(&format!("{},,true\n", row.parameter)),
            }
        }
        out
    }
}

fn fit_order(rows: &[TableRow]) -> Option<f64> {
    let points: Vec<(f64, f64)> = rows
        .iter()
        .filter_map(|r| {
            r.deviation
                .filter(|&d| d > FIT_FLOOR)
                .map(|d| ((1.0 / r.parameter).ln(), d.ln()))
        })
        .collect();
    if points.len() < 2 {
        return None;
    }
    let m = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / m;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / m;
    let sxy: f64 = points.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let sxx: f64 = points.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    Some(sxy / sxx)
}
