//! Implementations of the data-emitting subcommands.

use std::path::Path;

use partnerpot::bec::{critical_temperature, TcMethod, TrapSpec};
use partnerpot::model::{eval_states, partner_potential, Eigenstate, PartnerParams};
use partnerpot::oracle::{integrate, seed_norm_config, verify_family, VerifyConfig};
use partnerpot::report::CheckResult;
use serde_json::json;

use crate::output::{emit, CsvDoc};
use crate::{CliError, Method};

fn grid_env(flag_l: Option<f64>, flag_n: Option<usize>) -> Result<VerifyConfig, CliError> {
    let defaults = VerifyConfig::default();
    let env_l = std::env::var("ARTIFACT_GRID_L")
        .ok()
        .map(|v| {
            v.parse::<f64>()
                .map_err(|_| CliError::Usage(format!("ARTIFACT_GRID_L is not a number: {v}")))
        })
        .transpose()?;
    let env_n = std::env::var("ARTIFACT_GRID_N")
        .ok()
        .map(|v| {
            v.parse::<usize>()
                .map_err(|_| CliError::Usage(format!("ARTIFACT_GRID_N is not an integer: {v}")))
        })
        .transpose()?;
    Ok(VerifyConfig {
        grid_half_width: flag_l.or(env_l).unwrap_or(defaults.grid_half_width),
        grid_points: flag_n.or(env_n).unwrap_or(defaults.grid_points),
    })
}

fn param_meta(doc: &mut CsvDoc, params: &PartnerParams) {
    doc.meta_f64("p", params.p());
    doc.meta_f64("s_hat", params.s_hat());
    doc.meta_f64("s_raw", params.s_raw());
    doc.meta_f64("s_max", params.s_max());
}

fn check_axis(xmin: f64, xmax: f64, points: usize) -> Result<(), CliError> {
    if points < 2 {
        return Err(CliError::Usage(format!(
            "points must be at least 2, got {points}"
        )));
    }
    #[allow(clippy::neg_cmp_op_on_partial_ord)] // rejects NaN bounds
    if !(xmax > xmin) {
        return Err(CliError::Usage(format!(
            "xmax must exceed xmin, got [{xmin}, {xmax}]"
        )));
    }
    Ok(())
}

pub fn potential(
    p: f64,
    s_hat: f64,
    xmin: f64,
    xmax: f64,
    points: usize,
    out: Option<&Path>,
) -> Result<(), CliError> {
    check_axis(xmin, xmax, points)?;
    let params = PartnerParams::new(p, s_hat)?;
    let mut doc = CsvDoc::new("potential");
    param_meta(&mut doc, &params);
    doc.meta_f64("xmin", xmin);
    doc.meta_f64("xmax", xmax);
    doc.meta("points", points);
    doc.columns(["x", "V"]);
    let h = (xmax - xmin) / (points - 1) as f64;
    for i in 0..points {
        let x = xmin + i as f64 * h;
        doc.row(vec![x, partner_potential(&params, x)]);
    }
    emit(out, &doc.render())?;
    Ok(())
}

pub fn eigenstates(
    p: f64,
    s_hat: f64,
    ks: &[i32],
    xmin: f64,
    xmax: f64,
    points: usize,
    out: Option<&Path>,
) -> Result<(), CliError> {
    check_axis(xmin, xmax, points)?;
    if ks.is_empty() {
        return Err(CliError::Usage("at least one level index required".into()));
    }
    if let Some(&bad) = ks.iter().find(|&&k| !(-1..=10).contains(&k)) {
        return Err(CliError::Usage(format!(
            "level indices must lie in -1..=10, got {bad}"
        )));
    }
    let params = PartnerParams::new(p, s_hat)?;
    let states: Vec<Eigenstate> = ks
        .iter()
        .map(|&k| Eigenstate::new(params, k))
        .collect::<partnerpot::Result<_>>()?;
    let mut doc = CsvDoc::new("eigenstates");
    param_meta(&mut doc, &params);
    doc.meta_f64("xmin", xmin);
    doc.meta_f64("xmax", xmax);
    doc.meta("points", points);
    doc.meta(
        "levels",
        ks.iter()
            .map(|k| k.to_string())
            .collect::<Vec<_>>()
            .join(" "),
    );
    let mut cols = vec!["x".to_string()];
    cols.extend(ks.iter().map(|k| format!("psi_{k}")));
    doc.columns(cols);
    let h = (xmax - xmin) / (points - 1) as f64;
    for i in 0..points {
        let x = xmin + i as f64 * h;
        let mut row = vec![x];
        row.extend(eval_states(&states, x));
        doc.row(row);
    }
    emit(out, &doc.render())?;
    Ok(())
}

fn report_json(
    command: &str,
    params: &PartnerParams,
    extra: serde_json::Value,
    checks: &[CheckResult],
) -> serde_json::Value {
    let pass = checks.iter().all(|c| c.pass);
    let mut params_obj = json!({
        "p": params.p(),
        "s_hat": params.s_hat(),
        "s_raw": params.s_raw(),
        "s_max": params.s_max(),
    });
    if let (Some(obj), Some(add)) = (params_obj.as_object_mut(), extra.as_object()) {
        for (k, v) in add {
            obj.insert(k.clone(), v.clone());
        }
    }
    json!({
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "params": params_obj,
        "checks": checks,
        "pass": pass,
    })
}

pub fn verify(
    p: f64,
    s_hat: f64,
    levels: usize,
    grid_l: Option<f64>,
    grid_n: Option<usize>,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let params = PartnerParams::new(p, s_hat)?;
    let config = grid_env(grid_l, grid_n)?;
    let report = verify_family(&params, levels, &config)?;
    let value = report_json(
        "verify",
        &params,
        json!({
            "levels": levels,
            "grid_half_width": config.grid_half_width,
            "grid_points": config.grid_points,
        }),
        &report.checks,
    );
    let mut text = serde_json::to_string_pretty(&value).expect("report serializes");
    text.push('\n');
    emit(out, &text)?;
    if !report.pass {
        return Err(CliError::Failed(
            "one or more verification checks missed tolerance".into(),
        ));
    }
    Ok(())
}

pub fn norm_check(
    p: f64,
    s_hat: f64,
    grid_l: Option<f64>,
    grid_n: Option<usize>,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let params = PartnerParams::new(p, s_hat)?;
    let config = grid_env(grid_l, grid_n)?;
    let (l, n_odd) = seed_norm_config(&config);
    let quad = integrate(
        |x| {
            let v = partnerpot::model::seed_solution(&params, x)
                .recip()
                .to_f64();
            v * v
        },
        -l,
        l,
        n_odd,
    );
    let closed = partnerpot::model::normalization_integral(&params);
    let check = CheckResult::new(
        "normalization_vs_quadrature",
        (quad / closed - 1.0).abs(),
        1e-8,
    );
    let pass = check.pass;
    let value = report_json(
        "norm-check",
        &params,
        json!({
            "grid_half_width": l,
            "grid_points": n_odd,
            "closed_form": closed,
            "quadrature": quad,
        }),
        &[check],
    );
    let mut text = serde_json::to_string_pretty(&value).expect("report serializes");
    text.push('\n');
    emit(out, &text)?;
    if !pass {
        return Err(CliError::Failed(
            "normalization check missed tolerance".into(),
        ));
    }
    Ok(())
}

pub fn bec(
    n_atoms: u64,
    p: f64,
    p_max: Option<f64>,
    p_step: Option<f64>,
    method: Method,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let tc_method = match method {
        Method::Sum => TcMethod::Sum,
        Method::Closedform => TcMethod::ClosedForm,
    };
    let ps: Vec<f64> = match (p_max, p_step) {
        (None, None) => vec![p],
        (Some(pm), step) => {
            let step = step.unwrap_or(3.0);
            #[allow(clippy::neg_cmp_op_on_partial_ord)] // rejects NaN step
            if !(step > 0.0) {
                return Err(CliError::Usage(format!(
                    "p-step must be positive, got {step}"
                )));
            }
            if pm < p {
                return Err(CliError::Usage(format!(
                    "p-max {pm} must not be below p {p}"
                )));
            }
            let count = ((pm - p) / step).floor() as usize + 1;
            (0..count).map(|i| p + i as f64 * step).collect()
        }
        (None, Some(_)) => {
            return Err(CliError::Usage("p-step requires p-max".into()));
        }
    };
    let base = critical_temperature(&TrapSpec::new(n_atoms, 0.0)?, tc_method)?;
    let mut doc = CsvDoc::new("bec");
    doc.meta("N", n_atoms);
    doc.meta(
        "method",
        match method {
            Method::Sum => "sum",
            Method::Closedform => "closedform",
        },
    );
    doc.meta_f64("Tc_at_p0", base);
    doc.columns(["p", "Tc", "Tc_ratio"]);
    for &pv in &ps {
        let tc = critical_temperature(&TrapSpec::new(n_atoms, pv)?, tc_method)?;
        doc.row(vec![pv, tc, tc / base]);
    }
    emit(out, &doc.render())?;
    Ok(())
}
