//! Building directed influence networks out of daily closing prices.
//!
//! The pipeline: each instrument's price series becomes a boolean movement
//! vector (did the price hold or rise the next day), and an edge j -> i is
//! drawn when instrument j's movements correlate with instrument i's
//! movements `lag` days earlier more strongly than a threshold. In other
//! words, j follows i, so a blackhole in the resulting graph is a group that
//! absorbs influence and leads nobody outside itself.

use std::collections::HashSet;
use std::io::BufRead;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{DirectedGraph, GraphBuilder};

/// Daily closing prices for a set of instruments: one equally long, strictly
/// positive series per ticker.
#[derive(Debug, Clone, PartialEq)]
pub struct PriceMatrix {
    tickers: Vec<String>,
    prices: Vec<Vec<f64>>,
}

impl PriceMatrix {
    /// Validates and wraps raw data: tickers must be unique, nonempty, and
    /// whitespace-free (they become graph labels); every series must have
    /// the same length, at least 2 days, and only positive finite values.
    pub fn new(tickers: Vec<String>, prices: Vec<Vec<f64>>) -> Result<Self> {
        if tickers.len() != prices.len() {
            return Err(Error::PriceData(format!(
                "{} tickers but {} price series",
                tickers.len(),
                prices.len()
            )));
        }
        let mut seen = HashSet::new();
        for t in &tickers {
            if t.is_empty() || t.chars().any(char::is_whitespace) {
                return Err(Error::PriceData(format!(
                    "ticker {t:?} is empty or contains whitespace"
                )));
            }
            if !seen.insert(t.as_str()) {
                return Err(Error::PriceData(format!("duplicate ticker {t:?}")));
            }
        }
        let days = prices.first().map_or(0, Vec::len);
        if days < 2 {
            return Err(Error::PriceData(format!(
                "need at least 2 days of prices, got {days}"
            )));
        }
        for (t, series) in tickers.iter().zip(&prices) {
            if series.len() != days {
                return Err(Error::PriceData(format!(
                    "series for {t} has {} days, expected {days}",
                    series.len()
                )));
            }
            if series.iter().any(|p| !(*p > 0.0 && p.is_finite())) {
                return Err(Error::PriceData(format!(
                    "series for {t} contains a nonpositive or non-finite price"
                )));
            }
        }
        Ok(PriceMatrix { tickers, prices })
    }

    pub fn tickers(&self) -> &[String] {
        &self.tickers
    }

    pub fn instrument_count(&self) -> usize {
        self.tickers.len()
    }

    /// Number of trading days per series.
    pub fn days(&self) -> usize {
        self.prices.first().map_or(0, Vec::len)
    }

    pub fn series(&self, instrument: usize) -> &[f64] {
        &self.prices[instrument]
    }
}

/// Boolean movement vectors, one per instrument, each one day shorter than
/// the price series that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MovementMatrix {
    tickers: Vec<String>,
    moves: Vec<Vec<bool>>,
}

impl MovementMatrix {
    pub fn tickers(&self) -> &[String] {
        &self.tickers
    }

    pub fn vector(&self, instrument: usize) -> &[bool] {
        &self.moves[instrument]
    }

    pub fn len(&self) -> usize {
        self.moves.first().map_or(0, Vec::len)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A price CSV row that was skipped rather than loaded, and why.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RejectedRow {
    /// 1-based row number in the file, header included in the count.
    pub row: usize,
    pub ticker: String,
    pub reason: String,
}

/// Result of [`load_prices`]: the usable matrix plus the rows that were
/// dropped on the way.
#[derive(Debug, Clone)]
pub struct PriceLoad {
    pub matrix: PriceMatrix,
    pub rejected: Vec<RejectedRow>,
}

/// Reads a price CSV: header `ticker,<day>,<day>,...`, then one row per
/// instrument with one closing price per day.
///
/// Structural problems fail the whole load with the offending row number:
/// a missing or misshapen header, a ragged row, a duplicate or empty ticker.
/// Problems confined to one instrument's data, a blank cell, an unparsable
/// or nonpositive price, a ticker with embedded whitespace, drop just that
/// row into the rejected list so one bad instrument cannot poison the rest.
pub fn load_prices(reader: impl BufRead) -> Result<PriceLoad> {
    let mut tickers: Vec<String> = Vec::new();
    let mut prices: Vec<Vec<f64>> = Vec::new();
    let mut rejected: Vec<RejectedRow> = Vec::new();
    let mut seen: HashSet<String> = HashSet::new();
    let mut days: Option<usize> = None;

    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let row = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        let Some(expected_days) = days else {
            // Header row.
            if !fields[0].trim().eq_ignore_ascii_case("ticker") {
                return Err(Error::PriceCsv {
                    row,
                    message: "first row must be a header starting with `ticker`".into(),
                });
            }
            let day_count = fields.len() - 1;
            if day_count < 2 {
                return Err(Error::PriceCsv {
                    row,
                    message: format!("need at least 2 day columns, found {day_count}"),
                });
            }
            days = Some(day_count);
            continue;
        };

        if fields.len() != expected_days + 1 {
            return Err(Error::PriceCsv {
                row,
                message: format!(
                    "expected {} fields, found {}",
                    expected_days + 1,
                    fields.len()
                ),
            });
        }
        let ticker = fields[0].trim().to_string();
        if ticker.is_empty() {
            return Err(Error::PriceCsv {
                row,
                message: "empty ticker".into(),
            });
        }
        if !seen.insert(ticker.clone()) {
            return Err(Error::PriceCsv {
                row,
                message: format!("duplicate ticker {ticker:?}"),
            });
        }
        if ticker.chars().any(char::is_whitespace) {
            rejected.push(RejectedRow {
                row,
                ticker,
                reason: "ticker contains whitespace".into(),
            });
            continue;
        }

        let mut series = Vec::with_capacity(expected_days);
        let mut bad: Option<String> = None;
        for (col, cell) in fields[1..].iter().enumerate() {
            let cell = cell.trim();
            let price: Option<f64> = if cell.is_empty() { None } else { cell.parse().ok() };
            match price {
                Some(p) if p > 0.0 && p.is_finite() => series.push(p),
                _ => {
                    bad = Some(format!("column {}: bad price {cell:?}", col + 2));
                    break;
                }
            }
        }
        match bad {
            Some(reason) => rejected.push(RejectedRow {
                row,
                ticker,
                reason,
            }),
            None => {
                tickers.push(ticker);
                prices.push(series);
            }
        }
    }

    if days.is_none() {
        return Err(Error::PriceCsv {
            row: 1,
            message: "file is empty".into(),
        });
    }
    if tickers.is_empty() {
        return Err(Error::PriceCsv {
            row: 1,
            message: "no usable price rows".into(),
        });
    }
    let matrix = PriceMatrix::new(tickers, prices)?;
    Ok(PriceLoad { matrix, rejected })
}

/// Collapses each price series to its movement vector: entry t records
/// whether the price held or rose from day t to day t + 1.
pub fn movements(prices: &PriceMatrix) -> MovementMatrix {
    let moves = (0..prices.instrument_count())
        .map(|i| {
            prices
                .series(i)
                .windows(2)
                .map(|w| w[1] >= w[0])
                .collect()
        })
        .collect();
    MovementMatrix {
        tickers: prices.tickers().to_vec(),
        moves,
    }
}

/// Pearson correlation between `x` and `y` shifted `lag` steps later: pairs
/// are (x[t], y[t + lag]). Returns `None` when either windowed slice has no
/// variance, which also covers overlaps of a single sample.
pub fn lagged_pearson(x: &[f64], y: &[f64], lag: usize) -> Result<Option<f64>> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    if lag == 0 || lag >= x.len() {
        return Err(Error::InvalidLag {
            lag,
            len: x.len(),
        });
    }
    let overlap = x.len() - lag;
    Ok(pearson(&x[..overlap], &y[lag..]))
}

/// The boolean-vector form of [`lagged_pearson`], with true as 1 and false
/// as 0.
pub fn lagged_correlation(x: &[bool], y: &[bool], lag: usize) -> Result<Option<f64>> {
    let xf: Vec<f64> = x.iter().map(|&b| b as u8 as f64).collect();
    let yf: Vec<f64> = y.iter().map(|&b| b as u8 as f64).collect();
    lagged_pearson(&xf, &yf, lag)
}

fn pearson(xs: &[f64], ys: &[f64]) -> Option<f64> {
    debug_assert_eq!(xs.len(), ys.len());
    let n = xs.len() as f64;
    let mean_x = xs.iter().sum::<f64>() / n;
    let mean_y = ys.iter().sum::<f64>() / n;
    let mut cov = 0.0;
    let mut var_x = 0.0;
    let mut var_y = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        let dx = x - mean_x;
        let dy = y - mean_y;
        cov += dx * dy;
        var_x += dx * dx;
        var_y += dy * dy;
    }
    if var_x == 0.0 || var_y == 0.0 {
        return None;
    }
    // Rounding can push a perfect correlation an ulp past the bound.
    Some((cov / (var_x.sqrt() * var_y.sqrt())).clamp(-1.0, 1.0))
}

/// Builds the influence graph from boolean movements: edge j -> i whenever
/// the correlation of i's movements with j's movements `lag` days later
/// exceeds `theta`. Undefined correlations (no variance on either side)
/// never become edges. All edges carry weight 1.
pub fn build_stock_graph(prices: &PriceMatrix, theta: f64, lag: usize) -> Result<DirectedGraph> {
    let mv = movements(prices);
    let rows: Vec<Vec<f64>> = (0..prices.instrument_count())
        .map(|i| mv.vector(i).iter().map(|&b| b as u8 as f64).collect())
        .collect();
    build_from_series(prices.tickers(), &rows, theta, lag)
}

/// Same network construction but correlating the raw price series directly,
/// skipping the movement collapse.
pub fn build_stock_graph_raw(prices: &PriceMatrix, theta: f64, lag: usize) -> Result<DirectedGraph> {
    let rows: Vec<Vec<f64>> = (0..prices.instrument_count())
        .map(|i| prices.series(i).to_vec())
        .collect();
    build_from_series(prices.tickers(), &rows, theta, lag)
}

fn build_from_series(
    tickers: &[String],
    rows: &[Vec<f64>],
    theta: f64,
    lag: usize,
) -> Result<DirectedGraph> {
    if rows.len() < 2 {
        return Err(Error::TooFewInstruments { count: rows.len() });
    }
    let len = rows[0].len();
    if lag == 0 || lag >= len {
        return Err(Error::InvalidLag { lag, len });
    }
    // Row i collects the followers of i; every pair is independent, so the
    // parallel split cannot affect the result.
    let follower_edges: Vec<Vec<usize>> = (0..rows.len())
        .into_par_iter()
        .map(|i| {
            let overlap = len - lag;
            let leader = &rows[i][..overlap];
            (0..rows.len())
                .filter(|&j| j != i)
                .filter(|&j| {
                    pearson(leader, &rows[j][lag..]).is_some_and(|r| r > theta)
                })
                .collect()
        })
        .collect();

    let mut b = GraphBuilder::new();
    for t in tickers {
        b.intern(t);
    }
    for (i, followers) in follower_edges.iter().enumerate() {
        for &j in followers {
            // j's moves echo i's: influence flows from j's perspective
            // toward i, so the edge points j -> i.
            b.add_edge(crate::graph::NodeId(j as u32), crate::graph::NodeId(i as u32), 1.0);
        }
    }
    Ok(b.build().0)
}
