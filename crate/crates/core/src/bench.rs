//! Wall-clock scaling of the hub pipeline on generated graphs.

use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::generators::Model;
use crate::hubs::control_hubs;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub l: usize,
    pub seconds: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct BenchConfig {
    pub model: Model,
    pub edges_per_node: usize,
    pub seed: u64,
    /// Each size is timed this many times and the fastest run kept.
    pub repeats: usize,
}

/// Times `control_hubs` on one generated graph per size. Generation is not timed.
pub fn run(config: &BenchConfig, sizes: &[usize]) -> Result<Vec<BenchRow>> {
    if sizes.is_empty() {
        return Err(Error::Parameter("size ladder is empty".into()));
    }
    if sizes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Parameter(format!("sizes must be strictly ascending, got {sizes:?}")));
    }
    if config.repeats == 0 || config.edges_per_node == 0 {
        return Err(Error::Parameter("repeats and edges per node must be positive".into()));
    }
    sizes
        .iter()
        .map(|&n| {
            let l = n.checked_mul(config.edges_per_node).ok_or_else(|| Error::Parameter("edge count overflows".into()))?;
            let g = config.model.generate(n, l, config.seed, false)?;
            let mut best = f64::INFINITY;
            for _ in 0..config.repeats {
                let start = Instant::now();
                let report = control_hubs(&g)?;
                best = best.min(start.elapsed().as_secs_f64());
                std::hint::black_box(report);
            }
            Ok(BenchRow { n, l, seconds: best })
        })
        .collect()
}

/// Least-squares slope of `ln(seconds)` against `ln(n)`. `None` with fewer
/// than two rows or a non-positive time.
pub fn log_log_slope(rows: &[BenchRow]) -> Option<f64> {
    if rows.len() < 2 || rows.iter().any(|r| r.seconds <= 0.0) {
        return None;
    }
    let points: Vec<(f64, f64)> = rows.iter().map(|r| ((r.n as f64).ln(), r.seconds.ln())).collect();
    let k = points.len() as f64;
    let mean_x = points.iter().map(|p| p.0).sum::<f64>() / k;
    let mean_y = points.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = points.iter().map(|(x, y)| (x - mean_x) * (y - mean_y)).sum();
    let sxx: f64 = points.iter().map(|(x, _)| (x - mean_x).powi(2)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config() -> BenchConfig {
        BenchConfig { model: Model::ErdosRenyi, edges_per_node: 5, seed: 1, repeats: 1 }
    }

    #[test]
    fn single_size_gives_one_row() {
        let rows = run(&config(), &[100]).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!((rows[0].n, rows[0].l), (100, 500));
    }

    #[test]
    fn descending_ladder_is_rejected() {
        assert!(matches!(run(&config(), &[1000, 100]), Err(Error::Parameter(_))));
        assert!(matches!(run(&config(), &[]), Err(Error::Parameter(_))));
    }

    #[test]
    fn slope_of_exact_power_law() {
        let rows: Vec<BenchRow> =
            [10usize, 100, 1000].iter().map(|&n| BenchRow { n, l: n, seconds: 1e-6 * (n as f64).powf(1.5) }).collect();
        assert!((log_log_slope(&rows).unwrap() - 1.5).abs() < 1e-12);
        assert_eq!(log_log_slope(&rows[..1]), None);
    }
}
