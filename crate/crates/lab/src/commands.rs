//! The five commands. Each prints a summary to `out` and returns whether every
//! assertion it made passed.

use std::io::Write;
use std::path::PathBuf;

use anyhow::Result;
use bohr_core::conjecture::{sweep_conjecture, witness_functional, SearchConfig, WITNESS_MARGIN};
use bohr_core::extremals::{sharpness_a_grid, SHARPNESS_GRID_DEPTH};
use bohr_core::functionals::AREA_CONSTANT;
use bohr_core::series::DEFAULT_ORDER;
use bohr_core::solver::DEFAULT_TOL;
use bohr_core::verify::checks::{check_identity_majorant_vs_phi, merge_reports, CheckReport, IDENTITY_TOL};
use bohr_core::verify::suite::random_identity_params;
use bohr_core::verify::{run_check, BlaschkeSample, SuiteConfig, CHECK_NAMES};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::config::{usage, Command, Settings};
use crate::formats::{write_csv, write_json, ConjectureRow, FunctionalRow, RadiusRow};
use crate::theorems::{functional_grid, radius_grid, theorem_radius, RadiusReport, Theorem, TheoremParams};

/// Radii per member in the admissibility grids.
pub const SWEEP_RADII: usize = 64;

/// Conjectured supremum of the best constant at `γ = 0`.
pub const CONJECTURED_ENDPOINT: f64 = 16.0 / 9.0;

/// Floor below which a constant estimate contradicts the proven constant.
pub const CONSTANT_FLOOR_TOL: f64 = 1e-6;

pub fn default_gamma_grid() -> Vec<f64> {
    (0..10).map(|i| i as f64 / 10.0).collect()
}

pub fn default_conjecture_grid() -> Vec<f64> {
    let mut g = default_gamma_grid();
    g.push(0.99);
    g
}

pub fn run(command: Command, s: &Settings, out: &mut dyn Write) -> Result<bool> {
    if let Some(dir) = &s.out {
        std::fs::create_dir_all(dir)?;
    }
    match command {
        Command::Radius => radius(s, out),
        Command::Verify => verify(s, out),
        Command::Sweep => sweep(s, out),
        Command::Conjecture => conjecture(s, out),
        Command::IdentityCheck => identity_check(s, out),
    }
}

fn artifact(s: &Settings, name: &str) -> Option<PathBuf> {
    s.out.as_deref().map(|d| d.join(name))
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn radius(s: &Settings, out: &mut dyn Write) -> Result<bool> {
    let theorem = s.theorem.ok_or_else(|| usage("radius needs --theorem"))?;
    if theorem == Theorem::A && s.gamma.is_some_and(|g| g != 0.0) {
        return Err(usage("theorem A is the case gamma = 0"));
    }
    let p = TheoremParams::resolve(theorem, s.gamma.unwrap_or(0.0), s.k, s.lambda, s.area_constant);
    let rep = theorem_radius(theorem, &p, s.tol.unwrap_or(DEFAULT_TOL))?;
    writeln!(out, "theorem      {theorem}")?;
    writeln!(out, "gamma        {}", p.gamma)?;
    if let Some(k) = p.k {
        writeln!(out, "k            {k}")?;
    }
    if let Some(l) = p.lambda {
        writeln!(out, "lambda       {l}")?;
    }
    if let Some(k) = p.area_constant {
        writeln!(out, "K            {k}")?;
    }
    writeln!(out, "computed     {:.12}", rep.result.radius)?;
    writeln!(out, "closed_form  {:.12}", rep.closed_form)?;
    writeln!(out, "diff         {:.3e}", rep.diff)?;
    writeln!(out, "witness_a    {}", rep.result.witness.unwrap_or(f64::NAN))?;
    writeln!(out, "tol          {:.3e}", rep.result.combined_tol())?;
    if rep.result.monotone_in_a == Some(false) {
        writeln!(out, "note         per-member radii are not monotone in a")?;
    }
    writeln!(out, "{}", verdict(rep.passed()))?;
    if let Some(path) = artifact(s, "radius.json") {
        write_json(&path, &rep)?;
    }
    if let Some(path) = artifact(s, "radius.csv") {
        write_csv(&path, &[rep.row()])?;
    }
    Ok(rep.passed())
}

pub fn selected_checks(s: &Settings) -> Result<Vec<&'static str>> {
    match (&s.check, s.all) {
        (Some(names), false) => {
            for n in names {
                if !CHECK_NAMES.contains(&n.as_str()) {
                    return Err(usage(format!("unknown check {n}; known: {}", CHECK_NAMES.join(", "))));
                }
            }
            Ok(CHECK_NAMES.iter().copied().filter(|c| names.iter().any(|n| n == c)).collect())
        }
        _ => Ok(CHECK_NAMES.to_vec()),
    }
}

/// Every selected batch, each with its own generator seeded by `seed + position`.
pub fn run_checks(names: &[&str], seed: u64, cfg: &SuiteConfig) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    for name in names {
        let pos = CHECK_NAMES.iter().position(|c| c == name).unwrap_or(0) as u64;
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(pos));
        reports.extend(run_check(name, cfg, &mut rng)?);
    }
    Ok(reports)
}

pub fn verify(s: &Settings, out: &mut dyn Write) -> Result<bool> {
    let names = selected_checks(s)?;
    let reports = run_checks(&names, s.seed(), &SuiteConfig::default())?;
    for r in &reports {
        writeln!(
            out,
            "{} {:<28} samples {:>5} skipped {:>3} worst_slack {:>11.3e} tol {:.0e}",
            verdict(r.passed),
            r.name,
            r.samples,
            r.skipped,
            r.worst_slack,
            r.tolerance
        )?;
    }
    if let Some(path) = artifact(s, "verify.json") {
        write_json(&path, &reports)?;
    }
    Ok(reports.iter().all(|r| r.passed))
}

#[derive(Debug, Serialize)]
struct SweepSummary<'a> {
    radii: &'a [RadiusReport],
    grid_violations: usize,
}

pub fn sweep(s: &Settings, out: &mut dyn Write) -> Result<bool> {
    let gammas = s.grid.clone().unwrap_or_else(default_gamma_grid);
    let theorems = match s.theorem {
        Some(t) => vec![t],
        None => Theorem::ALL.to_vec(),
    };
    let ks = match s.k {
        Some(k) => vec![k],
        None => vec![0.0, 0.25, 0.5, 1.0],
    };
    let tol = s.tol.unwrap_or(DEFAULT_TOL);
    let a_grid = sharpness_a_grid(SHARPNESS_GRID_DEPTH);

    let mut reports = Vec::new();
    let mut violations = 0;
    for th in &theorems {
        let mut rows: Vec<FunctionalRow> = Vec::new();
        for &g in &gammas {
            if *th == Theorem::A && g != 0.0 {
                continue;
            }
            let k_values: Vec<Option<f64>> = if *th == Theorem::Four {
                ks.iter().map(|&k| Some(k)).collect()
            } else {
                vec![s.k]
            };
            for k in k_values {
                let p = TheoremParams::resolve(*th, g, k, s.lambda, s.area_constant);
                let rep = theorem_radius(*th, &p, tol)?;
                let grid = functional_grid(*th, &p, &a_grid, &radius_grid(rep.closed_form, SWEEP_RADII))?;
                let bad = grid.iter().filter(|r| !r.within_one()).count();
                violations += bad;
                writeln!(
                    out,
                    "{} theorem {:<9} gamma {:<5} k {:<5} computed {:.9} closed_form {:.9} diff {:.2e} grid_violations {}",
                    verdict(rep.passed() && bad == 0),
                    th.id(),
                    g,
                    p.k.map_or("-".to_string(), |k| k.to_string()),
                    rep.result.radius,
                    rep.closed_form,
                    rep.diff,
                    bad
                )?;
                rows.extend(grid);
                reports.push(rep);
            }
        }
        if let Some(path) = artifact(s, &format!("functional_{}.csv", th.id())) {
            write_csv(&path, &rows)?;
        }
    }
    let radius_rows: Vec<RadiusRow> = reports.iter().map(RadiusReport::row).collect();
    if let Some(path) = artifact(s, "radius.csv") {
        write_csv(&path, &radius_rows)?;
    }
    if let Some(path) = artifact(s, "sweep.json") {
        write_json(
            &path,
            &SweepSummary {
                radii: &reports,
                grid_violations: violations,
            },
        )?;
    }
    writeln!(out, "grid violations: {violations}")?;
    Ok(violations == 0 && reports.iter().all(RadiusReport::passed))
}

#[derive(Debug, Serialize)]
struct ConjectureArtifact<'a> {
    seed: u64,
    augment_random_samples: usize,
    search: &'a SearchConfig,
    estimates: &'a [bohr_core::conjecture::ConstantEstimate],
    non_monotone: &'a [(usize, usize)],
    witness_valid: &'a [bool],
}

pub fn conjecture(s: &Settings, out: &mut dyn Write) -> Result<bool> {
    let gammas = s.grid.clone().unwrap_or_else(default_conjecture_grid);
    let n_samples = s.augment_random_samples.unwrap_or(0);
    let samples = BlaschkeSample::random_batch(&mut ChaCha8Rng::seed_from_u64(s.seed()), n_samples);
    let cfg = SearchConfig::default();
    let sweep = sweep_conjecture(&gammas, &cfg, &samples)?;

    let mut ok = true;
    let mut valid = Vec::with_capacity(sweep.estimates.len());
    for e in &sweep.estimates {
        let floor = e.k_hat >= AREA_CONSTANT - CONSTANT_FLOOR_TOL;
        let w = witness_functional(e, cfg.order, &samples, WITNESS_MARGIN)?.total > 1.0;
        ok &= floor && w;
        valid.push(w);
        writeln!(
            out,
            "{} gamma {:<5} K_hat {:.9} a_witness {} r_witness {:.9} floor {} witness {}",
            verdict(floor && w),
            e.gamma,
            e.k_hat,
            e.a_witness().map_or("sample".to_string(), |a| format!("{a:.9}")),
            e.r_witness,
            verdict(floor),
            verdict(w)
        )?;
    }
    if let Some(e) = sweep.estimates.iter().find(|e| e.gamma == 0.0) {
        writeln!(
            out,
            "gamma = 0: K_hat {:.9} vs conjectured endpoint 16/9 = {:.9} (deviation {:.3e}, reported only)",
            e.k_hat,
            CONJECTURED_ENDPOINT,
            e.k_hat - CONJECTURED_ENDPOINT
        )?;
    }
    if sweep.non_monotone.is_empty() {
        writeln!(out, "K_hat decreases across the gamma grid")?;
    } else {
        let pairs: Vec<String> = sweep
            .non_monotone
            .iter()
            .map(|&(i, j)| format!("({}, {})", gammas[i], gammas[j]))
            .collect();
        writeln!(out, "K_hat does not decrease between gamma pairs {} (reported only)", pairs.join(" "))?;
    }
    if let Some(path) = artifact(s, "conjecture.csv") {
        let rows: Vec<ConjectureRow> = sweep.estimates.iter().map(ConjectureRow::from).collect();
        write_csv(&path, &rows)?;
    }
    if let Some(path) = artifact(s, "conjecture.json") {
        write_json(
            &path,
            &ConjectureArtifact {
                seed: s.seed(),
                augment_random_samples: n_samples,
                search: &cfg,
                estimates: &sweep.estimates,
                non_monotone: &sweep.non_monotone,
                witness_valid: &valid,
            },
        )?;
    }
    Ok(ok)
}

pub fn identity_check(s: &Settings, out: &mut dyn Write) -> Result<bool> {
    let k = s.k.unwrap_or(0.5);
    let lambda = s.lambda.unwrap_or(1.0);
    if lambda > 1.0 {
        return Err(usage("--lambda must lie in (0, 1] for the harmonic extremal"));
    }
    let triples: Vec<(f64, f64, f64, f64, f64)> = match (s.a, s.gamma, s.r) {
        (Some(a), Some(g), Some(r)) => {
            if a <= g {
                return Err(usage("identity-check needs a > gamma"));
            }
            vec![(a, g, r, k, lambda)]
        }
        (None, None, None) => {
            let mut rng = ChaCha8Rng::seed_from_u64(s.seed());
            (0..s.count.unwrap_or(100)).map(|_| random_identity_params(&mut rng)).collect()
        }
        _ => return Err(usage("give all of --a, --gamma and --r, or none")),
    };
    let mut parts = Vec::with_capacity(triples.len());
    for (a, g, r, k, l) in triples {
        parts.push(check_identity_majorant_vs_phi(a, g, r, k, l, DEFAULT_ORDER)?);
    }
    if parts.len() == 1 {
        for (key, v) in &parts[0].witness {
            writeln!(out, "{key:<18} {v:.6e}")?;
        }
    }
    let merged = merge_reports("identity_majorant_vs_phi", IDENTITY_TOL, &parts);
    writeln!(
        out,
        "{} {} triples, worst |diff| {:.3e} (tol {:.0e})",
        verdict(merged.passed),
        parts.len(),
        -merged.worst_slack,
        IDENTITY_TOL
    )?;
    if let Some(path) = artifact(s, "identity.json") {
        write_json(&path, &parts)?;
    }
    Ok(merged.passed)
}
