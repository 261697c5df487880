//! Text and JSON rendering of scenario reports.

use serde::Serialize;

use crate::scenarios::{Format, ScenarioConfig, ScenarioId, ScenarioReport};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Serialize)]
struct Document<'a> {
    tool_version: &'static str,
    config: &'a ScenarioConfig,
    reports: &'a [ScenarioReport],
}

/// Renders reports in the requested format. Output always ends with a newline.
pub fn render(reports: &[ScenarioReport], config: &ScenarioConfig, format: Format) -> String {
    match format {
        Format::Json => render_json(reports, config),
        Format::Text => render_text(reports),
    }
}

/// `{"tool_version", "config", "reports"}` with fields in declaration order.
///
/// Floats use the shortest representation that parses back to the same
/// `f64`, so no precision is lost.
pub fn render_json(reports: &[ScenarioReport], config: &ScenarioConfig) -> String {
    let doc = Document {
        tool_version: TOOL_VERSION,
        config,
        reports,
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("report serialization is infallible");
    out.push('\n');
    out
}

pub fn render_text(reports: &[ScenarioReport]) -> String {
    let width = ScenarioId::ALL
        .iter()
        .map(|id| id.name().len())
        .chain(reports.iter().map(|r| r.scenario.len()))
        .max()
        .unwrap_or(0);
    let mut out = String::new();
    for r in reports {
        out.push_str(&format!("{:<width$}  {}  {}", r.scenario, r.verdict, r.expected));
        if let Some(err) = &r.error {
            out.push_str(&format!("  [error: {err}]"));
        }
        out.push('\n');
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    out.push_str(&format!("{passed}/{} scenarios passed\n", reports.len()));
    out
}

/// Scenario names and their claims, one per line.
pub fn render_list() -> String {
    let width = ScenarioId::ALL.iter().map(|id| id.name().len()).max().unwrap_or(0);
    ScenarioId::ALL
        .iter()
        .map(|id| format!("{:<width$}  {}\n", id.name(), id.claim()))
        .collect()
}
