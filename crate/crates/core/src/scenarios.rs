//! Named scenarios, one per argument about copying and deleting.
//!
//! Each scenario records its metrics and the bound each metric must meet; the
//! verdict is PASS iff every bound holds. The bounds are listed in the README.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hilbert::{
    check_coefficients, haar_random_coefficients, haar_random_ket_with, linear_combination,
    tensor, Ket, SpaceShape, C64, ONE, ZERO,
};
use crate::machines::{
    build_counterexample_machine_with, build_swap_machine_with, cnot_copy_delete_trial,
    mcnot_circuit, orthogonality_residual, pb_constraints, required_ancilla, run_trial,
    verify_uncopy, yuen_clonability, CopyMode, DeletingMachineSpec,
};
use crate::operators::{cnot, gram_feasibility, Operator};

/// Bound on uncopy residuals for sampled coefficients.
pub const UNCOPY_BOUND: f64 = 1e-9;
/// Bound for quantities that are exact up to rounding.
pub const EXACT_BOUND: f64 = 1e-12;
/// How far below 1 a fidelity must sit to count as an imperfect copy.
pub const IMPERFECT_MARGIN: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ScenarioId {
    PbLinearity,
    PbOrthogonality,
    SwapMachine,
    Counterexample,
    CnotBasis,
    CnotSuperposition,
    McnotKnown,
    Yuen,
}

impl ScenarioId {
    /// Fixed run and report order.
    pub const ALL: [ScenarioId; 8] = [
        ScenarioId::PbLinearity,
        ScenarioId::PbOrthogonality,
        ScenarioId::SwapMachine,
        ScenarioId::Counterexample,
        ScenarioId::CnotBasis,
        ScenarioId::CnotSuperposition,
        ScenarioId::McnotKnown,
        ScenarioId::Yuen,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ScenarioId::PbLinearity => "pb-linearity",
            ScenarioId::PbOrthogonality => "pb-orthogonality",
            ScenarioId::SwapMachine => "swap-machine",
            ScenarioId::Counterexample => "counterexample",
            ScenarioId::CnotBasis => "cnot-basis",
            ScenarioId::CnotSuperposition => "cnot-superposition",
            ScenarioId::McnotKnown => "mcnot-known",
            ScenarioId::Yuen => "yuen",
        }
    }

    /// One-line statement of what the scenario establishes.
    pub fn claim(self) -> &'static str {
        match self {
            ScenarioId::PbLinearity => {
                "basis deletions HHA->HSA_H, VVA->VSA_V extend linearly to any psi with ancilla alpha*A_H + beta*A_V"
            }
            ScenarioId::PbOrthogonality => {
                "a deleting machine exists iff <A_H|A_V> = 0; the Gram residual equals |<A_H|A_V>|"
            }
            ScenarioId::SwapMachine => {
                "swapping the second copy with the ancilla deletes with orthogonal A_H = H, A_V = V"
            }
            ScenarioId::Counterexample => {
                "orthogonal A_H = (H+V)/sqrt2, A_V = (H-V)/sqrt2 give a deleting machine that is not a swap"
            }
            ScenarioId::CnotBasis => "C-NOT copies and deletes the basis bits 0 and 1 exactly",
            ScenarioId::CnotSuperposition => {
                "C-NOT neither copies nor deletes a superposition S = alpha*0 + beta*1"
            }
            ScenarioId::McnotKnown => {
                "C-NOT conjugated by rotations built from known alpha, beta copies and deletes S exactly, and no other state"
            }
            ScenarioId::Yuen => "a set of states can be cloned by one device iff they are pairwise orthogonal",
        }
    }
}

impl fmt::Display for ScenarioId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ScenarioId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ScenarioId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownScenario(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub alpha: C64,
    pub beta: C64,
    pub tolerance: f64,
    pub seed: u64,
    pub trials: usize,
    pub sigma_index: u8,
    pub format: Format,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        let s = C64::new(FRAC_1_SQRT_2, 0.0);
        ScenarioConfig {
            alpha: s,
            beta: s,
            tolerance: crate::hilbert::DEFAULT_TOL,
            seed: 0,
            trials: 100,
            sigma_index: 0,
            format: Format::Text,
        }
    }
}

impl ScenarioConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance.is_finite() && self.tolerance > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "tolerance must be positive, got {}",
                self.tolerance
            )));
        }
        if self.trials == 0 {
            return Err(Error::InvalidConfig("trials must be at least 1".into()));
        }
        if self.sigma_index > 1 {
            return Err(Error::InvalidConfig(format!(
                "sigma must be 0 or 1, got {}",
                self.sigma_index
            )));
        }
        check_coefficients(self.alpha, self.beta, self.tolerance)
            .map_err(|e| Error::InvalidConfig(e.to_string()))
    }

    pub fn sigma(&self) -> Ket {
        if self.sigma_index == 0 {
            Ket::h()
        } else {
            Ket::v()
        }
    }
}

fn ser_complex<S: SerializeMap>(map: &mut S, key: &str, c: C64) -> std::result::Result<(), S::Error> {
    map.serialize_entry(key, &ComplexJson(c))
}

struct ComplexJson(C64);

impl Serialize for ComplexJson {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Complex", 2)?;
        st.serialize_field("re", &self.0.re)?;
        st.serialize_field("im", &self.0.im)?;
        st.end()
    }
}

impl Serialize for ScenarioConfig {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(7))?;
        ser_complex(&mut map, "alpha", self.alpha)?;
        ser_complex(&mut map, "beta", self.beta)?;
        map.serialize_entry("tolerance", &self.tolerance)?;
        map.serialize_entry("seed", &self.seed)?;
        map.serialize_entry("trials", &self.trials)?;
        map.serialize_entry("sigma_index", &self.sigma_index)?;
        map.serialize_entry("format", &self.format)?;
        map.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MetricValue {
    Real(f64),
    Complex(C64),
}

impl Serialize for MetricValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            MetricValue::Real(x) => s.serialize_f64(*x),
            MetricValue::Complex(c) => ComplexJson(*c).serialize(s),
        }
    }
}

/// Insertion-ordered metric map.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Metrics(Vec<(String, MetricValue)>);

impl Metrics {
    pub fn get(&self, name: &str) -> Option<MetricValue> {
        self.0.iter().find(|(k, _)| k == name).map(|(_, v)| *v)
    }

    pub fn real(&self, name: &str) -> Option<f64> {
        match self.get(name)? {
            MetricValue::Real(x) => Some(x),
            MetricValue::Complex(_) => None,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &MetricValue)> {
        self.0.iter().map(|(k, v)| (k.as_str(), v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn push(&mut self, name: &str, value: MetricValue) {
        self.0.push((name.to_string(), value));
    }
}

impl Serialize for Metrics {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScenarioReport {
    pub scenario: String,
    pub verdict: Verdict,
    pub expected: String,
    pub metrics: Metrics,
    pub tolerance: f64,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl ScenarioReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Metric recorder; every bounded metric that misses its bound fails the run.
struct Eval {
    metrics: Metrics,
    pass: bool,
}

impl Eval {
    fn new() -> Self {
        Eval {
            metrics: Metrics::default(),
            pass: true,
        }
    }

    fn info(&mut self, name: &str, value: f64) {
        self.metrics.push(name, MetricValue::Real(value));
    }

    fn info_complex(&mut self, name: &str, value: C64) {
        self.metrics.push(name, MetricValue::Complex(value));
    }

    /// `value < bound`
    fn below(&mut self, name: &str, value: f64, bound: f64) {
        self.pass &= value < bound;
        self.info(name, value);
    }

    /// `value > bound`
    fn above(&mut self, name: &str, value: f64, bound: f64) {
        self.pass &= value > bound;
        self.info(name, value);
    }

    /// `|value − target| ≤ tol`
    fn near(&mut self, name: &str, value: f64, target: f64, tol: f64) {
        self.pass &= (value - target).abs() <= tol;
        self.info(name, value);
    }

    /// Boolean metric recorded as 1 or 0.
    fn flag(&mut self, name: &str, value: bool, expected: bool) {
        self.pass &= value == expected;
        self.info(name, if value { 1.0 } else { 0.0 });
    }
}

pub fn run_scenario(name: &str, config: &ScenarioConfig) -> Result<ScenarioReport> {
    let id = ScenarioId::from_str(name)?;
    config.validate()?;
    Ok(run_scenario_id(id, config))
}

/// Runs one scenario; computation errors become a FAIL verdict with an
/// `error` metric.
pub fn run_scenario_id(id: ScenarioId, config: &ScenarioConfig) -> ScenarioReport {
    let outcome = match id {
        ScenarioId::PbLinearity => pb_linearity(config),
        ScenarioId::PbOrthogonality => pb_orthogonality(config),
        ScenarioId::SwapMachine => swap_machine(config),
        ScenarioId::Counterexample => counterexample(config),
        ScenarioId::CnotBasis => cnot_basis(config),
        ScenarioId::CnotSuperposition => cnot_superposition(config),
        ScenarioId::McnotKnown => mcnot_known(config),
        ScenarioId::Yuen => yuen(config),
    };
    let (metrics, verdict, error) = match outcome {
        Ok(e) => (
            e.metrics,
            if e.pass { Verdict::Pass } else { Verdict::Fail },
            None,
        ),
        Err(err) => {
            let mut m = Metrics::default();
            m.push("error", MetricValue::Real(1.0));
            (m, Verdict::Fail, Some(err.to_string()))
        }
    };
    ScenarioReport {
        scenario: id.name().to_string(),
        verdict,
        expected: id.claim().to_string(),
        metrics,
        tolerance: config.tolerance,
        seed: config.seed,
        error,
    }
}

/// Exit code 0 when every scenario passes, 1 otherwise, 2 for an invalid config.
pub fn run_all(config: &ScenarioConfig) -> (Vec<ScenarioReport>, i32) {
    if config.validate().is_err() {
        return (Vec::new(), 2);
    }
    let reports: Vec<ScenarioReport> = std::thread::scope(|scope| {
        let handles: Vec<_> = ScenarioId::ALL
            .iter()
            .map(|&id| scope.spawn(move || run_scenario_id(id, config)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scenario thread panicked"))
            .collect()
    });
    let code = if reports.iter().all(ScenarioReport::passed) { 0 } else { 1 };
    (reports, code)
}

fn rng_for(config: &ScenarioConfig) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(config.seed)
}

fn pb_linearity(cfg: &ScenarioConfig) -> Result<Eval> {
    let mut e = Eval::new();
    let (a, b) = (cfg.alpha, cfg.beta);
    let m = build_counterexample_machine_with(cfg.sigma(), 0)?;
    let constraints = pb_constraints(&m.spec)?;
    let p = constraints.pairs();

    // ΨΨA = α²·x₁ + β²·x₂ + αβ·x₃
    let weights = [a * a, b * b, a * b];
    let input = m.spec.input_state(a, b);
    let expanded_in = linear_combination(&[
        (weights[0], &p[0].0),
        (weights[1], &p[1].0),
        (weights[2], &p[2].0),
    ])?;
    let expanded_out = linear_combination(&[
        (weights[0], &p[0].1),
        (weights[1], &p[1].1),
        (weights[2], &p[2].1),
    ])?;
    e.below("expansion_residual", input.distance(&expanded_in)?, EXACT_BOUND);
    e.below(
        "linearity_residual",
        m.operator.apply(&input)?.distance(&expanded_out)?,
        UNCOPY_BOUND,
    );

    let required = required_ancilla(a, b, m.spec.ancilla_h(), m.spec.ancilla_v())?;
    e.below("required_ancilla_norm_error", (required.norm() - 1.0).abs(), cfg.tolerance);
    e.below("uncopy_residual", verify_uncopy(&m.operator, &m.spec, a, b)?, UNCOPY_BOUND);

    let mut rng = rng_for(cfg);
    let mut worst: f64 = 0.0;
    for _ in 0..cfg.trials {
        let (x, y) = haar_random_coefficients(&mut rng);
        worst = worst.max(verify_uncopy(&m.operator, &m.spec, x, y)?);
    }
    e.below("worst_sampled_uncopy_residual", worst, UNCOPY_BOUND);
    e.info("samples", cfg.trials as f64);
    Ok(e)
}

fn pb_orthogonality(cfg: &ScenarioConfig) -> Result<Eval> {
    let mut e = Eval::new();
    let sigma = cfg.sigma();
    let mut rng = rng_for(cfg);
    let mut mismatches = 0usize;
    let mut identity_error: f64 = 0.0;
    let mut min_overlap = f64::INFINITY;
    let mut orthogonal_feasible = 0usize;

    let mut judge = |ah: Ket, av: Ket| -> Result<bool> {
        let spec = DeletingMachineSpec::new(sigma.clone(), sigma.clone(), ah, av)?;
        let overlap = orthogonality_residual(&spec);
        let gram = gram_feasibility(&pb_constraints(&spec)?, cfg.tolerance);
        if gram.feasible != (overlap < cfg.tolerance) {
            mismatches += 1;
        }
        identity_error = identity_error.max((gram.max_residual - overlap).abs());
        Ok(gram.feasible)
    };

    for _ in 0..cfg.trials {
        let ah = haar_random_ket_with(2, &mut rng).reshape(SpaceShape::qubit())?;
        let av = haar_random_ket_with(2, &mut rng).reshape(SpaceShape::qubit())?;
        min_overlap = min_overlap.min(ah.inner(&av)?.norm());
        judge(ah.clone(), av.clone())?;

        // Gram–Schmidt A_V against A_H: the feasible side of the dichotomy
        let proj = ah.inner(&av)?;
        let av_perp = av.sub(&ah.scale(proj))?.normalize()?;
        if judge(ah, av_perp)? {
            orthogonal_feasible += 1;
        }
    }
    let identical_feasible = judge(Ket::h(), Ket::h())?;

    e.info("cases", (2 * cfg.trials + 1) as f64);
    e.below("mismatches", mismatches as f64, 0.5);
    e.below("max_identity_error", identity_error, EXACT_BOUND);
    e.near("orthogonal_feasible", orthogonal_feasible as f64, cfg.trials as f64, 0.0);
    e.flag("identical_ancillas_feasible", identical_feasible, false);
    e.info("min_random_overlap", min_overlap);
    Ok(e)
}

fn swap_machine(cfg: &ScenarioConfig) -> Result<Eval> {
    let mut e = Eval::new();
    let m = build_swap_machine_with(cfg.sigma())?;
    let r = &m.report;
    e.info_complex("ancilla_overlap", r.ancilla_overlap);
    e.below("ancilla_overlap_abs", r.ancilla_overlap.norm(), EXACT_BOUND);
    e.flag("feasible", r.feasible, true);
    e.flag("is_permutation", m.operator.is_permutation(), true);
    e.below("unitarity_deviation", r.unitarity_deviation, EXACT_BOUND);
    e.below("constraint_residual", r.constraint_residual, cfg.tolerance);
    e.flag("is_swap", r.is_swap, true);
    e.below("swap_deviation", r.swap_deviation, cfg.tolerance);
    e.below(
        "worst_uncopy_residual",
        sampled_uncopy(&m.operator, &m.spec, cfg)?,
        UNCOPY_BOUND,
    );
    Ok(e)
}

fn counterexample(cfg: &ScenarioConfig) -> Result<Eval> {
    let mut e = Eval::new();
    let m = build_counterexample_machine_with(cfg.sigma(), 0)?;
    let r = &m.report;
    e.info_complex("ancilla_overlap", r.ancilla_overlap);
    e.below("ancilla_overlap_abs", r.ancilla_overlap.norm(), EXACT_BOUND);
    e.flag("feasible", r.feasible, true);
    e.below("gram_residual", r.gram_residual, cfg.tolerance);
    e.below("unitarity_deviation", r.unitarity_deviation, cfg.tolerance);
    e.below("constraint_residual", r.constraint_residual, cfg.tolerance);
    e.flag("is_swap", r.is_swap, false);
    // best-phase distance between unit vectors with fidelity 1/2
    let floor = (2.0 - 2f64.sqrt()).sqrt();
    e.above("swap_deviation", r.swap_deviation, floor - cfg.tolerance);
    for (name, f) in ["probe_hh_fidelity", "probe_vv_fidelity"]
        .iter()
        .zip(&r.swap_probe_fidelities)
    {
        e.near(name, *f, 0.5, cfg.tolerance);
    }
    e.below(
        "worst_uncopy_residual",
        sampled_uncopy(&m.operator, &m.spec, cfg)?,
        UNCOPY_BOUND,
    );
    Ok(e)
}

fn sampled_uncopy(u: &Operator, spec: &DeletingMachineSpec, cfg: &ScenarioConfig) -> Result<f64> {
    let mut rng = rng_for(cfg);
    let mut worst = verify_uncopy(u, spec, cfg.alpha, cfg.beta)?;
    for _ in 0..cfg.trials {
        let (a, b) = haar_random_coefficients(&mut rng);
        worst = worst.max(verify_uncopy(u, spec, a, b)?);
    }
    Ok(worst)
}

fn cnot_basis(_cfg: &ScenarioConfig) -> Result<Eval> {
    let mut e = Eval::new();
    let g = cnot();
    let bit = |b: u8| if b == 0 { Ket::h() } else { Ket::v() };
    for (c, t) in [(0u8, 0u8), (0, 1), (1, 0), (1, 1)] {
        let input = tensor(&[bit(c), bit(t)])?;
        let want = tensor(&[bit(c), bit(t ^ c)])?;
        let f = crate::hilbert::fidelity(&g.apply(&input)?, &want)?;
        e.near(&format!("fidelity_{c}{t}_to_{c}{}", t ^ c), f, 1.0, EXACT_BOUND);
    }
    for (name, s) in [("zero", (ONE, ZERO)), ("one", (ZERO, ONE))] {
        let copy = cnot_copy_delete_trial(s.0, s.1, CopyMode::Copy)?;
        let delete = cnot_copy_delete_trial(s.0, s.1, CopyMode::Delete)?;
        e.near(&format!("copy_fidelity_{name}"), copy.fidelity, 1.0, EXACT_BOUND);
        e.near(&format!("delete_fidelity_{name}"), delete.fidelity, 1.0, EXACT_BOUND);
    }
    Ok(e)
}

/// `|conj(α)α² + conj(β)β²|²`: overlap of `α|00⟩ + β|11⟩` with `|SS⟩`.
fn cnot_fidelity_oracle(a: C64, b: C64) -> f64 {
    (a.conj() * a * a + b.conj() * b * b).norm_sqr()
}

fn cnot_superposition(cfg: &ScenarioConfig) -> Result<Eval> {
    let mut e = Eval::new();
    let (a, b) = (cfg.alpha, cfg.beta);
    let copy = cnot_copy_delete_trial(a, b, CopyMode::Copy)?;
    let delete = cnot_copy_delete_trial(a, b, CopyMode::Delete)?;
    let oracle = cnot_fidelity_oracle(a, b);
    e.info("oracle_fidelity", oracle);
    e.near("copy_fidelity", copy.fidelity, oracle, cfg.tolerance);
    e.near("delete_fidelity", delete.fidelity, oracle, cfg.tolerance);
    let product = (a * b).norm();
    e.info("alpha_beta_abs", product);
    if product <= cfg.tolerance {
        e.near("copy_perfect", copy.fidelity, 1.0, EXACT_BOUND);
    } else {
        e.below("copy_imperfect", copy.fidelity, 1.0);
        e.below("delete_imperfect", delete.fidelity, 1.0);
    }
    Ok(e)
}

fn mcnot_known(cfg: &ScenarioConfig) -> Result<Eval> {
    let mut e = Eval::new();
    let (a, b) = (cfg.alpha, cfg.beta);
    let s = Ket::qubit(a, b);

    let (copy_res, delete_res, inverse_dev, unit_dev) = mcnot_residuals(a, b)?;
    e.below("copy_residual", copy_res, cfg.tolerance);
    e.below("delete_residual", delete_res, cfg.tolerance);
    e.below("inverse_deviation", inverse_dev, cfg.tolerance);
    e.below("unitarity_deviation", unit_dev, cfg.tolerance);

    let mut rng = rng_for(cfg);
    let mut worst: f64 = 0.0;
    for _ in 0..cfg.trials {
        let (x, y) = haar_random_coefficients(&mut rng);
        let (c, d, i, u) = mcnot_residuals(x, y)?;
        worst = worst.max(c).max(d).max(i).max(u);
    }
    e.below("worst_sampled_residual", worst, cfg.tolerance);

    // a different, non-orthogonal state through the circuit built for S
    let h_pop = a.norm_sqr();
    let other = if (0.01..=0.99).contains(&h_pop) {
        Ket::h()
    } else {
        Ket::plus()
    };
    e.info("other_state_overlap", s.inner(&other)?.norm());
    let copy = mcnot_circuit(a, b, CopyMode::Copy)?;
    let mismatch = run_trial(&copy, &other, CopyMode::Copy)?;
    e.below("other_state_copy_fidelity", mismatch.fidelity, 1.0 - IMPERFECT_MARGIN);
    Ok(e)
}

/// Copy residual, delete residual, `‖delete·copy − I‖_max`, worst unitarity deviation.
fn mcnot_residuals(a: C64, b: C64) -> Result<(f64, f64, f64, f64)> {
    let s = Ket::qubit(a, b);
    let s0 = tensor(&[s.clone(), Ket::h()])?;
    let ss = tensor(&[s.clone(), s])?;
    let copy = mcnot_circuit(a, b, CopyMode::Copy)?;
    let delete = mcnot_circuit(a, b, CopyMode::Delete)?;
    let copy_res = copy.apply(&s0)?.distance(&ss)?;
    let delete_res = delete.apply(&ss)?.distance(&s0)?;
    let inverse = delete
        .compose(&copy)?
        .max_abs_diff(&Operator::identity(SpaceShape::qubits(2)))?;
    let unit = copy.is_unitary(0.0).1.max(delete.is_unitary(0.0).1);
    Ok((copy_res, delete_res, inverse, unit))
}

fn yuen(cfg: &ScenarioConfig) -> Result<Eval> {
    let mut e = Eval::new();
    let sigma = cfg.sigma();
    let tol = cfg.tolerance;

    let ortho = yuen_clonability(&[Ket::h(), Ket::v()], &sigma, &sigma, tol)?;
    e.flag("orthogonal_clonable", ortho.clonable, true);
    let (witness_res, witness_dev) = match &ortho.witness {
        Some(w) => {
            let mut worst: f64 = 0.0;
            for psi in [Ket::h(), Ket::v()] {
                let x = tensor(&[psi.clone(), sigma.clone(), sigma.clone()])?;
                let y = tensor(&[psi.clone(), psi, sigma.clone()])?;
                worst = worst.max(w.apply(&x)?.distance(&y)?);
            }
            (worst, w.is_unitary(tol).1)
        }
        None => (f64::INFINITY, f64::INFINITY),
    };
    e.below("witness_residual", witness_res, tol);
    e.below("witness_unitarity_deviation", witness_dev, tol);

    let same = yuen_clonability(&[Ket::h(), Ket::h()], &sigma, &sigma, tol)?;
    e.flag("identical_clonable", same.clonable && same.distinct == 1, true);

    let mut rng = rng_for(cfg);
    let mut clonable = 0usize;
    let mut overlap_error: f64 = 0.0;
    for _ in 0..cfg.trials {
        let overlap: f64 = rng.random_range(0.1..0.9);
        let (first, second) = pair_with_overlap(&mut rng, overlap)?;
        let r = yuen_clonability(&[first, second], &sigma, &sigma, tol)?;
        if r.clonable {
            clonable += 1;
        }
        overlap_error = overlap_error.max((r.worst_overlap - overlap).abs());
    }
    e.info("random_pairs", cfg.trials as f64);
    e.below("random_pairs_clonable", clonable as f64, 0.5);
    e.below("max_overlap_error", overlap_error, tol);
    Ok(e)
}

/// Random qubit pair with `|⟨a|b⟩| = overlap`.
pub fn pair_with_overlap<R: Rng + ?Sized>(rng: &mut R, overlap: f64) -> Result<(Ket, Ket)> {
    let (x, y) = haar_random_coefficients(rng);
    let first = Ket::qubit(x, y);
    let perp = Ket::qubit(-y.conj(), x.conj());
    let phase = C64::from_polar(1.0, rng.random_range(0.0..std::f64::consts::TAU));
    let second = linear_combination(&[
        (C64::new(overlap, 0.0), &first),
        (phase * (1.0 - overlap * overlap).sqrt(), &perp),
    ])?;
    Ok((first, second))
}
