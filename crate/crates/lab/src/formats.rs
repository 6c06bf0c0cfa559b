//! CSV and JSON artifacts.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use anyhow::{Context, Result};
use bohr_core::conjecture::ConstantEstimate;
use bohr_core::functionals::FunctionalValue;
use bohr_core::series::PowerSeries;
use serde::{Deserialize, Serialize};

use crate::theorems::TheoremParams;

/// `gamma,a,k,lambda,r,total,majorant,correction,tail_error`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FunctionalRow {
    pub gamma: f64,
    pub a: f64,
    pub k: Option<f64>,
    pub lambda: Option<f64>,
    pub r: f64,
    pub total: f64,
    pub majorant: f64,
    pub correction: f64,
    pub tail_error: f64,
}

impl FunctionalRow {
    pub fn new(p: &TheoremParams, a: f64, v: &FunctionalValue) -> Self {
        FunctionalRow {
            gamma: p.gamma,
            a,
            k: p.k,
            lambda: p.lambda,
            r: v.r,
            total: v.total,
            majorant: v.majorant,
            correction: v.correction,
            tail_error: v.tail_error,
        }
    }

    pub fn within_one(&self) -> bool {
        self.total + self.tail_error <= 1.0
    }
}

/// `gamma,k,lambda,functional_id,radius,tol`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RadiusRow {
    pub gamma: f64,
    pub k: Option<f64>,
    pub lambda: Option<f64>,
    pub functional_id: String,
    pub radius: f64,
    pub tol: f64,
}

/// `gamma,K_hat,a_witness,r_witness,refinements`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConjectureRow {
    pub gamma: f64,
    #[serde(rename = "K_hat")]
    pub k_hat: f64,
    /// Empty when a random sample is the witness.
    pub a_witness: Option<f64>,
    pub r_witness: f64,
    pub refinements: usize,
}

impl From<&ConstantEstimate> for ConjectureRow {
    fn from(e: &ConstantEstimate) -> Self {
        ConjectureRow {
            gamma: e.gamma,
            k_hat: e.k_hat,
            a_witness: e.a_witness(),
            r_witness: e.r_witness,
            refinements: e.refinements,
        }
    }
}

pub fn write_csv<T: Serialize>(path: &Path, rows: &[T]) -> Result<()> {
    let mut w = csv::Writer::from_path(path).with_context(|| format!("creating {}", path.display()))?;
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<Vec<T>> {
    let mut r = csv::Reader::from_path(path).with_context(|| format!("opening {}", path.display()))?;
    r.deserialize().map(|row| row.map_err(Into::into)).collect()
}

pub fn write_json<T: Serialize + ?Sized>(path: &Path, value: &T) -> Result<()> {
    let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
    let mut w = BufWriter::new(file);
    serde_json::to_writer_pretty(&mut w, value)?;
    w.write_all(b"\n")?;
    w.flush()?;
    Ok(())
}

/// `{"coeffs": [[re, im], ...], "order": N, "tail": {"q": .., "C": ..} | null}`
pub fn series_to_json(p: &PowerSeries) -> Result<String> {
    Ok(serde_json::to_string(p)?)
}

pub fn series_from_json(s: &str) -> Result<PowerSeries> {
    Ok(serde_json::from_str(s)?)
}
