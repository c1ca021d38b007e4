//! Builtin figure datasets.
//!
//! Each figure is a fixed parameter sweep emitted as one CSV per panel,
//! plotting-tool friendly. Passing a parameter override marks the files
//! `custom_` so they cannot be confused with the canonical datasets.
//!
//! 1: symmetric dimples, p in {0.5, 1, 2, 4}, s = 0
//! 2: symmetric double wells, p in {-0.3, -0.5, -0.7, -0.9}, s = 0
//! 3: skewed dimples, p = 4, s_hat in {0, 0.9, 0.99, 0.999}
//! 4: skewed double wells, p = -0.9, same s_hat sweep
//! 5: critical-temperature ratio for N = 1e5 over p in [0, 300]
//!
//! Stated skews are the rescaled s_hat (valid box |s_hat| < 1).

use std::path::{Path, PathBuf};

use partnerpot::bec::tc_curve;
use partnerpot::model::{eval_states, partner_potential, Eigenstate, PartnerParams};

use crate::output::{g17, write_atomic, CsvDoc};
use crate::CliError;

const FIG5_ATOMS: u64 = 100_000;
const FIG5_POINTS: usize = 101;
const FIG5_P_MAX: f64 = 300.0;

struct Panel {
    name: &'static str,
    level: Option<i32>, // None = potential panel
}

const PANELS: [Panel; 4] = [
    Panel {
        name: "potentials",
        level: None,
    },
    Panel {
        name: "ground_state",
        level: Some(-1),
    },
    Panel {
        name: "first_excited",
        level: Some(0),
    },
    Panel {
        name: "second_excited",
        level: Some(1),
    },
];

fn curve_figure(
    which: u8,
    outdir: &Path,
    custom: bool,
    sweep: &[(PartnerParams, String)],
    xmin: f64,
    xmax: f64,
    points: usize,
) -> Result<Vec<PathBuf>, CliError> {
    let h = (xmax - xmin) / (points - 1) as f64;
    let states: Vec<Vec<Eigenstate>> = sweep
        .iter()
        .map(|(params, _)| {
            [-1, 0, 1]
                .iter()
                .map(|&k| Eigenstate::new(*params, k))
                .collect::<partnerpot::Result<_>>()
        })
        .collect::<partnerpot::Result<_>>()?;

    // values[param][state][x]
    let mut psi = vec![vec![vec![0.0f64; points]; 3]; sweep.len()];
    let mut pot = vec![vec![0.0f64; points]; sweep.len()];
    for i in 0..points {
        let x = xmin + i as f64 * h;
        for (j, (params, _)) in sweep.iter().enumerate() {
            pot[j][i] = partner_potential(params, x);
            for (si, v) in eval_states(&states[j], x).into_iter().enumerate() {
                psi[j][si][i] = v;
            }
        }
    }

    let prefix = if custom {
        format!("fig{which}_custom")
    } else {
        format!("fig{which}")
    };
    let mut paths = Vec::new();
    for panel in &PANELS {
        let mut doc = CsvDoc::new("figures");
        doc.meta("figure", which);
        doc.meta("panel", panel.name);
        if let Some(k) = panel.level {
            doc.meta("level", k);
        }
        doc.meta_f64("xmin", xmin);
        doc.meta_f64("xmax", xmax);
        doc.meta("points", points);
        for (params, label) in sweep {
            doc.meta(
                &format!("curve_{label}"),
                format!(
                    "p = {}, s_hat = {}, s_raw = {}",
                    g17(params.p()),
                    g17(params.s_hat()),
                    g17(params.s_raw())
                ),
            );
        }
        let mut cols = vec!["x".to_string()];
        let value_prefix = if panel.level.is_some() { "psi" } else { "V" };
        cols.extend(
            sweep
                .iter()
                .map(|(_, label)| format!("{value_prefix}_{label}")),
        );
        doc.columns(cols);
        for i in 0..points {
            let x = xmin + i as f64 * h;
            let mut row = vec![x];
            for j in 0..sweep.len() {
                row.push(match panel.level {
                    None => pot[j][i],
                    Some(-1) => psi[j][0][i],
                    Some(0) => psi[j][1][i],
                    Some(_) => psi[j][2][i],
                });
            }
            doc.row(row);
        }
        let path = outdir.join(format!("{prefix}_{}.csv", panel.name));
        write_atomic(&path, &doc.render())?;
        paths.push(path);
    }
    Ok(paths)
}

fn p_sweep(ps: &[f64]) -> Result<Vec<(PartnerParams, String)>, CliError> {
    ps.iter()
        .map(|&p| Ok((PartnerParams::symmetric(p)?, format!("p{}", g17(p)))))
        .collect()
}

fn s_sweep(p: f64, s_hats: &[f64]) -> Result<Vec<(PartnerParams, String)>, CliError> {
    s_hats
        .iter()
        .map(|&s| Ok((PartnerParams::new(p, s)?, format!("s{}", g17(s)))))
        .collect()
}

/// Emit the dataset of figure `which` into `outdir`; returns the written
/// paths.
pub fn emit_figure(
    which: u8,
    outdir: &Path,
    p_override: Option<f64>,
    n_override: Option<u64>,
) -> Result<Vec<PathBuf>, CliError> {
    std::fs::create_dir_all(outdir)?;
    let skews = [0.0, 0.9, 0.99, 0.999];
    match which {
        1 => {
            let ps = p_override
                .map(|p| vec![p])
                .unwrap_or(vec![0.5, 1.0, 2.0, 4.0]);
            curve_figure(
                1,
                outdir,
                p_override.is_some(),
                &p_sweep(&ps)?,
                -5.0,
                5.0,
                1001,
            )
        }
        2 => {
            let ps = p_override
                .map(|p| vec![p])
                .unwrap_or(vec![-0.3, -0.5, -0.7, -0.9]);
            curve_figure(
                2,
                outdir,
                p_override.is_some(),
                &p_sweep(&ps)?,
                -5.0,
                5.0,
                1001,
            )
        }
        3 => {
            let p = p_override.unwrap_or(4.0);
            curve_figure(
                3,
                outdir,
                p_override.is_some(),
                &s_sweep(p, &skews)?,
                -8.0,
                8.0,
                1601,
            )
        }
        4 => {
            let p = p_override.unwrap_or(-0.9);
            curve_figure(
                4,
                outdir,
                p_override.is_some(),
                &s_sweep(p, &skews)?,
                -8.0,
                8.0,
                1601,
            )
        }
        5 => {
            let n_atoms = n_override.unwrap_or(FIG5_ATOMS);
            let ps: Vec<f64> = (0..FIG5_POINTS)
                .map(|i| FIG5_P_MAX * i as f64 / (FIG5_POINTS - 1) as f64)
                .collect();
            let curve = tc_curve(n_atoms, &ps).map_err(CliError::from)?;
            let mut doc = CsvDoc::new("figures");
            doc.meta("figure", 5);
            doc.meta("panel", "tc_ratio");
            doc.meta("N", n_atoms);
            doc.meta("method", "closedform");
            doc.columns(["p", "Tc_ratio"]);
            for (p, ratio) in curve {
                doc.row(vec![p, ratio]);
            }
            let name = if n_override.is_some() {
                "fig5_custom_tc_ratio.csv"
            } else {
                "fig5_tc_ratio.csv"
            };
            let path = outdir.join(name);
            write_atomic(&path, &doc.render())?;
            Ok(vec![path])
        }
        other => Err(CliError::Usage(format!(
            "unknown figure index {other}; expected 1..=5"
        ))),
    }
}
