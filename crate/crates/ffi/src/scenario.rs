use std::ffi::{c_char, CStr, CString};

use uncopy::report::render_json;
use uncopy::scenarios::{run_all, run_scenario, Format, ScenarioConfig};
use uncopy::C64;

use crate::{fail, guard, non_null, out_ptr, OrStatus, UncopyStatus};

/// Scenario parameters; see [`uncopy_config_default`].
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UncopyConfig {
    pub alpha_re: f64,
    pub alpha_im: f64,
    pub beta_re: f64,
    pub beta_im: f64,
    pub tolerance: f64,
    pub seed: u64,
    pub trials: usize,
    pub sigma_index: u8,
}

impl From<&UncopyConfig> for ScenarioConfig {
    fn from(c: &UncopyConfig) -> Self {
        ScenarioConfig {
            alpha: C64::new(c.alpha_re, c.alpha_im),
            beta: C64::new(c.beta_re, c.beta_im),
            tolerance: c.tolerance,
            seed: c.seed,
            trials: c.trials,
            sigma_index: c.sigma_index,
            format: Format::Json,
        }
    }
}

/// `alpha = beta = 1/√2`, tolerance 1e-10, seed 0, 100 trials, `Σ = H`.
#[no_mangle]
pub extern "C" fn uncopy_config_default() -> UncopyConfig {
    let d = ScenarioConfig::default();
    UncopyConfig {
        alpha_re: d.alpha.re,
        alpha_im: d.alpha.im,
        beta_re: d.beta.re,
        beta_im: d.beta.im,
        tolerance: d.tolerance,
        seed: d.seed,
        trials: d.trials,
        sigma_index: d.sigma_index,
    }
}

fn emit_string(out: *mut *mut c_char, s: String) -> Result<(), UncopyStatus> {
    let c = CString::new(s).map_err(|_| fail(UncopyStatus::Panic, "interior NUL in output"))?;
    *out_ptr(out, "out")? = c.into_raw();
    Ok(())
}

/// Runs one scenario and writes the JSON document (same schema as the CLI)
/// to `out_json`, to be released with `uncopy_string_free`. `passed` receives
/// the verdict.
///
/// # Safety
/// `name` must be a NUL-terminated string; `config` valid for one read;
/// `out_json` and `passed` valid for one write each.
#[no_mangle]
pub unsafe extern "C" fn uncopy_run_scenario_json(
    name: *const c_char,
    config: *const UncopyConfig,
    out_json: *mut *mut c_char,
    passed: *mut bool,
) -> UncopyStatus {
    guard(|| {
        non_null(name, "name")?;
        let name = CStr::from_ptr(name)
            .to_str()
            .map_err(|_| fail(UncopyStatus::InvalidArgument, "name is not UTF-8"))?;
        let cfg = ScenarioConfig::from(non_null(config, "config")?);
        let report = run_scenario(name, &cfg).or_status()?;
        *out_ptr(passed, "passed")? = report.passed();
        emit_string(out_json, render_json(std::slice::from_ref(&report), &cfg))
    })
}

/// Runs all scenarios; `exit_code` receives 0 when all pass and 1 otherwise.
///
/// # Safety
/// `config` valid for one read; `out_json` and `exit_code` valid for one write each.
#[no_mangle]
pub unsafe extern "C" fn uncopy_run_all_json(
    config: *const UncopyConfig,
    out_json: *mut *mut c_char,
    exit_code: *mut i32,
) -> UncopyStatus {
    guard(|| {
        let cfg = ScenarioConfig::from(non_null(config, "config")?);
        cfg.validate().or_status()?;
        let (reports, code) = run_all(&cfg);
        *out_ptr(exit_code, "exit_code")? = code;
        emit_string(out_json, render_json(&reports, &cfg))
    })
}
