//! Parameter sweeps over `(N, M, r)` and their CSV rendering.
//!
//! Every sweep produces rows with the columns `r,N,M,s_star,q_min,xi` in a
//! fixed grid order, whatever order the parallel workers finish in.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use rayon::prelude::*;

use crate::cloning::{cloning_chernoff, CloneSpec};
use crate::error::{Error, Result};

pub const CSV_HEADER: [&str; 6] = ["r", "N", "M", "s_star", "q_min", "xi"];
pub const DEFAULT_PRECISION: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    FixN,
    FixM,
    FixR,
    Single,
    Simulate,
    Verify,
}

/// Inclusive grid `start, start + step, ..., stop`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RGrid {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl RGrid {
    pub fn single(r: f64) -> Self {
        RGrid {
            start: r,
            stop: r,
            step: 1.0,
        }
    }

    /// Parses `start:stop:step`.
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(':').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::Config(format!("r grid must be start:stop:step, got {text:?}")));
        }
        let num = |s: &str| {
            s.parse::<f64>()
                .map_err(|_| Error::Config(format!("bad number {s:?} in r grid {text:?}")))
        };
        Ok(RGrid {
            start: num(parts[0])?,
            stop: num(parts[1])?,
            step: num(parts[2])?,
        })
    }

    pub fn validate(&self) -> Result<()> {
        let in_unit = |x: f64| (0.0..=1.0).contains(&x);
        if !in_unit(self.start) || !in_unit(self.stop) {
            return Err(Error::Config(format!(
                "r grid {}:{}:{} must lie within [0, 1]",
                self.start, self.stop, self.step
            )));
        }
        if self.stop < self.start {
            return Err(Error::Config("r grid stop is below start".into()));
        }
        if !(self.step > 0.0) || !self.step.is_finite() {
            return Err(Error::Config("r grid step must be positive".into()));
        }
        Ok(())
    }

    pub fn points(&self) -> Vec<f64> {
        let count = ((self.stop - self.start) / self.step + 1e-9).floor() as usize + 1;
        (0..count)
            .map(|i| (self.start + self.step * i as f64).min(self.stop))
            .collect()
    }
}

/// Parses `2,4,10`, `1..20` (inclusive) or a mix such as `1..3,10`.
pub fn parse_list(text: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let bad = || Error::Config(format!("bad list item {item:?}"));
        if let Some((lo, hi)) = item.split_once("..") {
            let lo: usize = lo.trim().parse().map_err(|_| bad())?;
            let hi: usize = hi.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
            if hi < lo {
                return Err(bad());
            }
            out.extend(lo..=hi);
        } else {
            out.push(parse_count(item).ok_or_else(bad)?);
        }
    }
    if out.is_empty() {
        return Err(Error::Config(format!("empty list {text:?}")));
    }
    Ok(out)
}

/// Integer that may be written in float notation, e.g. `1e6`.
pub fn parse_count(text: &str) -> Option<usize> {
    let text = text.trim();
    if let Ok(v) = text.parse::<usize>() {
        return Some(v);
    }
    let v: f64 = text.parse().ok()?;
    (v >= 0.0 && v.fract() == 0.0 && v <= usize::MAX as f64).then_some(v as usize)
}

/// `key = value` lines; blank lines and `#` comments are skipped.
pub fn parse_config_file(text: &str) -> Result<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Error::Config(format!("line {}: expected key = value", lineno + 1)))?;
        map.insert(key.trim().replace('_', "-"), value.trim().to_string());
    }
    Ok(map)
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub mode: Mode,
    pub n_values: Vec<usize>,
    pub m_values: Vec<usize>,
    pub r_grid: RGrid,
    pub output_path: Option<PathBuf>,
    pub precision: usize,
}

impl SweepConfig {
    /// N = 2, M ∈ {5, 10, 50000}, r ∈ [0, 1] step 0.01.
    pub fn fig1() -> Self {
        SweepConfig {
            mode: Mode::FixN,
            n_values: vec![2],
            m_values: vec![5, 10, 50_000],
            r_grid: RGrid {
                start: 0.0,
                stop: 1.0,
                step: 0.01,
            },
            output_path: None,
            precision: DEFAULT_PRECISION,
        }
    }

    /// M = 10^6, N ∈ {2, 4, 10}, r ∈ [0, 1] step 0.01.
    pub fn fig2() -> Self {
        SweepConfig {
            mode: Mode::FixM,
            n_values: vec![2, 4, 10],
            m_values: vec![1_000_000],
            ..Self::fig1()
        }
    }

    /// N, M ∈ [1, 20] at fixed `r`.
    pub fn surface(r: f64) -> Self {
        SweepConfig {
            mode: Mode::FixR,
            n_values: (1..=20).collect(),
            m_values: (1..=20).collect(),
            r_grid: RGrid::single(r),
            output_path: None,
            precision: DEFAULT_PRECISION,
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.r_grid.validate()?;
        if self.n_values.is_empty() || self.m_values.is_empty() {
            return Err(Error::Config("N and M lists must be non-empty".into()));
        }
        if self.n_values.contains(&0) {
            return Err(Error::Config("N must be at least 1".into()));
        }
        if !(1..=17).contains(&self.precision) {
            return Err(Error::Config(format!("precision {} outside [1, 17]", self.precision)));
        }
        match self.mode {
            Mode::FixN if self.n_values.len() != 1 => {
                return Err(Error::Config("fix-n sweep takes exactly one N".into()));
            }
            Mode::FixM if self.m_values.len() != 1 => {
                return Err(Error::Config("fix-m sweep takes exactly one M".into()));
            }
            Mode::Single | Mode::Simulate if self.n_values.len() != 1 || self.m_values.len() != 1 => {
                return Err(Error::Config("single evaluation takes exactly one N and one M".into()));
            }
            _ => {}
        }
        if self.mode != Mode::FixR {
            for &n in &self.n_values {
                for &m in &self.m_values {
                    if m < n {
                        return Err(Error::Config(format!("M = {m} must be >= N = {n}")));
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub r: f64,
    pub n: usize,
    pub m: usize,
    pub s_star: f64,
    pub q_min: f64,
    pub xi: f64,
}

fn evaluate(points: Vec<(f64, usize, usize)>) -> Result<Vec<SweepRow>> {
    points
        .into_par_iter()
        .map(|(r, n, m)| {
            let res = cloning_chernoff(&CloneSpec::new(n, m)?, r)?;
            Ok(SweepRow {
                r,
                n,
                m,
                s_star: res.s_star,
                q_min: res.q_min,
                xi: res.xi,
            })
        })
        .collect()
}

fn expect_mode(config: &SweepConfig, mode: Mode) -> Result<()> {
    if config.mode != mode {
        return Err(Error::Config(format!("expected mode {mode:?}, got {:?}", config.mode)));
    }
    config.validate()
}

/// Fixed N; one curve per M. Rows are r-major, M in list order.
pub fn run_fig1_sweep(config: &SweepConfig) -> Result<Vec<SweepRow>> {
    expect_mode(config, Mode::FixN)?;
    let n = config.n_values[0];
    let points = config
        .r_grid
        .points()
        .into_iter()
        .flat_map(|r| config.m_values.iter().map(move |&m| (r, n, m)))
        .collect();
    evaluate(points)
}

/// Fixed M; one curve per N. Rows are r-major, N in list order.
pub fn run_fig2_sweep(config: &SweepConfig) -> Result<Vec<SweepRow>> {
    expect_mode(config, Mode::FixM)?;
    let m = config.m_values[0];
    let points = config
        .r_grid
        .points()
        .into_iter()
        .flat_map(|r| config.n_values.iter().map(move |&n| (r, n, m)))
        .collect();
    evaluate(points)
}

/// `(N, M)` surface at each grid `r`, keeping only `M >= N`.
pub fn run_fig34_surface(config: &SweepConfig) -> Result<Vec<SweepRow>> {
    expect_mode(config, Mode::FixR)?;
    let mut points = Vec::new();
    for r in config.r_grid.points() {
        for &n in &config.n_values {
            for &m in config.m_values.iter().filter(|&&m| m >= n) {
                points.push((r, n, m));
            }
        }
    }
    evaluate(points)
}

/// One `(N, M)` pair over the r grid.
pub fn run_single(config: &SweepConfig) -> Result<Vec<SweepRow>> {
    expect_mode(config, Mode::Single)?;
    let (n, m) = (config.n_values[0], config.m_values[0]);
    evaluate(config.r_grid.points().into_iter().map(|r| (r, n, m)).collect())
}

/// Rounds to `digits` significant digits and prints the shortest decimal that
/// round-trips the rounded value.
pub fn format_sig(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() { "nan".into() } else if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let rounded: f64 = format!("{:.*e}", digits.saturating_sub(1), x)
        .parse()
        .expect("formatted float parses");
    format!("{rounded}")
}

pub fn write_csv<W: Write>(rows: &[SweepRow], precision: usize, out: W) -> Result<()> {
    let io_err = |e: csv::Error| Error::Config(format!("writing CSV: {e}"));
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    writer.write_record(CSV_HEADER).map_err(io_err)?;
    for row in rows {
        writer
            .write_record([
                format_sig(row.r, precision),
                row.n.to_string(),
                row.m.to_string(),
                format_sig(row.s_star, precision),
                format_sig(row.q_min, precision),
                format_sig(row.xi, precision),
            ])
            .map_err(io_err)?;
    }
    writer
        .flush()
        .map_err(|e| Error::Config(format!("writing CSV: {e}")))
}

pub fn to_csv_string(rows: &[SweepRow], precision: usize) -> Result<String> {
    let mut buf = Vec::new();
    write_csv(rows, precision, &mut buf)?;
    Ok(String::from_utf8(buf).expect("CSV output is ASCII"))
}
