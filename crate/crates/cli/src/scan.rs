//! Parameter sweeps over block braids, written as CSV.
//!
//! Columns, in order:
//!
//! | column          | content                                                  |
//! |-----------------|----------------------------------------------------------|
//! | `n`             | strand count                                             |
//! | `m`             | block count                                              |
//! | `sign`          | `+` or `-`                                               |
//! | `blocks`        | magnitudes, `,` within a block and `;` between blocks    |
//! | `components`    | components of the closure                                |
//! | `sigma`         | signature                                                |
//! | `degree`        | span of the Alexander polynomial                         |
//! | `coeffs`        | coefficients of the polynomial in `s`, space separated   |
//! | `stable_length` | plateau length minus one; empty if not trapezoidal       |
//! | `symmetric`     | `true`/`false`                                           |
//! | `trapezoidal`   | `true`/`false`                                           |
//! | `log_concave`   | `true`/`false`                                           |
//! | `bound_holds`   | `stable_length <= abs(sigma)`; empty if not trapezoidal  |
//!
//! Rows come out sorted by `(m, blocks)` with blocks compared entry by
//! entry, whatever the thread count.

use std::io::Write;
use std::ops::RangeInclusive;

use altbraid::{check_conjecture, BlockBraid, Sign};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::CliError;

pub const HEADER: [&str; 13] = [
    "n",
    "m",
    "sign",
    "blocks",
    "components",
    "sigma",
    "degree",
    "coeffs",
    "stable_length",
    "symmetric",
    "trapezoidal",
    "log_concave",
    "bound_holds",
];

/// Points per parallel batch. Each batch is computed in parallel and then
/// written in order, so memory stays bounded on large grids.
const BATCH: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub strands: usize,
    pub sign: Sign,
    pub parameters: Vec<Vec<u64>>,
    pub components: usize,
    pub sigma: i64,
    pub degree: usize,
    pub coeffs: Vec<BigInt>,
    pub stable_length: Option<usize>,
    pub symmetric: bool,
    pub trapezoidal: bool,
    pub log_concave: bool,
    pub bound_holds: Option<bool>,
}

#[derive(Serialize)]
struct Record {
    n: usize,
    m: usize,
    sign: String,
    blocks: String,
    components: usize,
    sigma: i64,
    degree: usize,
    coeffs: String,
    stable_length: Option<usize>,
    symmetric: bool,
    trapezoidal: bool,
    log_concave: bool,
    bound_holds: Option<bool>,
}

impl ScanRow {
    fn record(&self) -> Record {
        let blocks = self
            .parameters
            .iter()
            .map(|b| b.iter().map(u64::to_string).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join(";");
        let coeffs = self
            .coeffs
            .iter()
            .map(BigInt::to_string)
            .collect::<Vec<_>>()
            .join(" ");
        Record {
            n: self.strands,
            m: self.parameters.len(),
            sign: self.sign.to_string(),
            blocks,
            components: self.components,
            sigma: self.sigma,
            degree: self.degree,
            coeffs,
            stable_length: self.stable_length,
            symmetric: self.symmetric,
            trapezoidal: self.trapezoidal,
            log_concave: self.log_concave,
            bound_holds: self.bound_holds,
        }
    }
}

pub fn evaluate(b: &BlockBraid) -> Result<ScanRow, CliError> {
    let report = check_conjecture(b)?;
    let shape = report.shape.as_ref();
    let trapezoidal = shape.is_some_and(|s| s.is_trapezoidal);
    Ok(ScanRow {
        strands: b.strands(),
        sign: b.sign(),
        parameters: b.magnitudes().to_vec(),
        components: report.components,
        sigma: report.sigma,
        degree: report.alexander.degree,
        coeffs: report.alexander.poly_s.coeffs().to_vec(),
        stable_length: shape.and_then(|s| s.stable_length),
        symmetric: shape.is_some_and(|s| s.is_symmetric),
        trapezoidal,
        log_concave: shape.is_some_and(|s| s.is_log_concave),
        bound_holds: shape.and_then(|s| s.bound_holds),
    })
}

/// Every `m x (n-1)` magnitude matrix with entries in `1..=max`, odometer order.
struct Grid {
    width: usize,
    max: u64,
    next: Option<Vec<u64>>,
}

impl Grid {
    fn new(width: usize, max: u64) -> Self {
        Grid {
            width,
            max,
            next: Some(vec![1; width]),
        }
    }
}

impl Iterator for Grid {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let cur = self.next.take()?;
        let mut succ = cur.clone();
        for k in (0..self.width).rev() {
            if succ[k] < self.max {
                succ[k] += 1;
                self.next = Some(succ);
                break;
            }
            succ[k] = 1;
        }
        Some(cur)
    }
}

#[derive(Debug, Clone)]
pub struct ScanParams {
    pub strands: usize,
    pub blocks: RangeInclusive<usize>,
    pub max: u64,
    pub sign: Sign,
    /// Worker threads; 0 means one per core.
    pub threads: usize,
}

impl ScanParams {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.strands < 2 {
            return Err(CliError::User(format!(
                "--n must be at least 2, got {}",
                self.strands
            )));
        }
        if *self.blocks.start() < 1 || self.blocks.is_empty() {
            return Err(CliError::User(format!(
                "--m must be a nonempty range of positive block counts, got {}..{}",
                self.blocks.start(),
                self.blocks.end()
            )));
        }
        if self.max < 1 {
            return Err(CliError::User("--max must be at least 1".into()));
        }
        Ok(())
    }
}

/// Streams the sweep as CSV into `out`; returns the number of rows.
pub fn run<W: Write>(params: &ScanParams, out: W) -> Result<u64, CliError> {
    params.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(params.threads)
        .build()
        .map_err(|e| CliError::Defect(e.to_string()))?;
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(HEADER)?;
    let width = params.strands - 1;
    let mut rows = 0u64;
    for m in params.blocks.clone() {
        let mut grid = Grid::new(m * width, params.max);
        loop {
            let batch: Vec<Vec<u64>> = grid.by_ref().take(BATCH).collect();
            if batch.is_empty() {
                break;
            }
            let results: Vec<Result<ScanRow, CliError>> = pool.install(|| {
                batch
                    .par_iter()
                    .map(|flat| {
                        let mags = flat.chunks(width).map(<[u64]>::to_vec).collect();
                        let b = BlockBraid::new(params.strands, mags, params.sign)?;
                        evaluate(&b)
                    })
                    .collect()
            });
            for r in results {
                w.serialize(r?.record())?;
                rows += 1;
            }
            w.flush()?;
        }
    }
    w.flush()?;
    Ok(rows)
}
