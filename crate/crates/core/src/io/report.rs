//! Text and structured rendering of pipeline reports.
//!
//! Text output rounds every number half away from zero to the requested
//! precision. Structured output is JSON at full precision.

use std::fmt::Write as _;

use serde::Serialize;

use super::fixture::{EntryStatus, FixtureComparison, FixtureValue};
use super::format::format_fixed;
use crate::decision::{DecisionReport, ParameterMatrix};
use crate::group::GroupDecisionReport;
use crate::maji::{PropositionReport, PropositionStatus};
use crate::ns::NsSet;

/// Default number of decimals in text output.
pub const DEFAULT_PRECISION: usize = 2;

fn table(out: &mut String, rows: &[Vec<String>]) {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    for row in rows {
        let mut line = String::from("  ");
        for (c, cell) in row.iter().enumerate() {
            let pad = widths[c] - cell.chars().count();
            if c == 0 {
                line.push_str(cell);
                line.push_str(&" ".repeat(pad));
            } else {
                line.push_str("  ");
                line.push_str(&" ".repeat(pad));
                line.push_str(cell);
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
}

fn heading(out: &mut String, title: &str) {
    out.push('\n');
    out.push_str(title);
    out.push('\n');
}

fn header_row(ids: &[String]) -> Vec<String> {
    std::iter::once(String::new())
        .chain(ids.iter().cloned())
        .collect()
}

fn matrix_rows(ids: &[String], rows: &[Vec<f64>], p: usize) -> Vec<Vec<String>> {
    let mut out = vec![header_row(ids)];
    for (id, row) in ids.iter().zip(rows) {
        out.push(
            std::iter::once(id.clone())
                .chain(row.iter().map(|&v| format_fixed(v, p)))
                .collect(),
        );
    }
    out
}

fn labelled_vector(out: &mut String, ids: &[String], values: &[f64], p: usize) {
    let rows: Vec<Vec<String>> = ids
        .iter()
        .zip(values)
        .map(|(id, &v)| vec![id.clone(), format_fixed(v, p)])
        .collect();
    table(out, &rows);
}

fn triple_text(v: [f64; 3], p: usize) -> String {
    format!(
        "<{}, {}, {}>",
        format_fixed(v[0], p),
        format_fixed(v[1], p),
        format_fixed(v[2], p)
    )
}

fn ns_set_table(out: &mut String, f: &NsSet, p: usize) {
    let mut rows = vec![header_row(f.universe().ids())];
    for (k, id) in f.parameters().iter().enumerate() {
        rows.push(
            std::iter::once(id.to_owned())
                .chain(f.row(k).iter().map(|v| triple_text(v.to_array(), p)))
                .collect(),
        );
    }
    table(out, &rows);
}

fn relative_matrix(out: &mut String, title: &str, d: &ParameterMatrix, p: usize) {
    heading(out, title);
    table(out, &matrix_rows(d.parameters().ids(), d.rows(), p));
}

fn pipeline_sections(out: &mut String, r: &DecisionReport, p: usize) {
    let params = r.parameter_weights.parameters.ids();
    let elements = r.decision.universe.ids();
    heading(out, "Row scores");
    labelled_vector(out, params, &r.parameter_weights.scores, p);
    heading(out, "Normalized matrix");
    table(
        out,
        &matrix_rows(params, r.parameter_weights.normalized.rows(), p),
    );
    heading(out, "Parameter weights");
    labelled_vector(out, params, &r.parameter_weights.weights, p);
    for cm in &r.compare_matrices {
        heading(out, &format!("Compare matrix [{}]", cm.parameter));
        table(out, &matrix_rows(elements, &cm.rows, p));
    }
    heading(out, "Element weights");
    let mut rows = vec![header_row(elements)];
    for ew in &r.element_weights {
        rows.push(
            std::iter::once(ew.parameter.clone())
                .chain(ew.weights.iter().map(|&v| format_fixed(v, p)))
                .collect(),
        );
    }
    table(out, &rows);
    heading(out, "Decision set");
    labelled_vector(out, elements, &r.decision.scores, p);
    let _ = writeln!(out, "\nOptimal decision: {}", r.optimum());
}

fn value_text(v: &FixtureValue, p: usize) -> String {
    match v {
        FixtureValue::Number(x) => format_fixed(*x, p),
        FixtureValue::Triple(t) => triple_text(*t, p),
        FixtureValue::Element(id) => id.clone(),
    }
}

fn status_text(s: EntryStatus) -> &'static str {
    match s {
        EntryStatus::Match => "match",
        EntryStatus::Mismatch => "MISMATCH",
        EntryStatus::Erratum => "erratum",
        EntryStatus::ErratumMismatch => "ERRATUM MISMATCH",
        EntryStatus::Missing => "MISSING",
    }
}

fn comparison_section(out: &mut String, c: &FixtureComparison, optimum: &str, p: usize) {
    let title = if c.name.is_empty() {
        "Fixture comparison".to_owned()
    } else {
        format!("Fixture comparison: {}", c.name)
    };
    heading(out, &title);
    let _ = writeln!(out, "  tolerance {}", c.tolerance);
    let mut rows = vec![vec![
        "path".to_owned(),
        "printed".to_owned(),
        "computed".to_owned(),
        "corrected".to_owned(),
        "status".to_owned(),
    ]];
    for e in &c.entries {
        rows.push(vec![
            e.path.clone(),
            value_text(&e.printed, p),
            e.computed.as_ref().map_or("-".into(), |v| value_text(v, p)),
            e.corrected
                .as_ref()
                .map_or("-".into(), |v| value_text(v, p)),
            status_text(e.status).to_owned(),
        ]);
    }
    table(out, &rows);
    let notes: Vec<_> = c
        .entries
        .iter()
        .filter_map(|e| e.note.as_ref().map(|n| (&e.path, n)))
        .collect();
    if !notes.is_empty() {
        heading(out, "Errata notes");
        for (path, note) in notes {
            let _ = writeln!(out, "  {path}: {note}");
        }
    }
    let _ = writeln!(
        out,
        "\n  {} match, {} errata confirmed, {} mismatched, {} errata unconfirmed, {} missing",
        c.count(EntryStatus::Match),
        c.count(EntryStatus::Erratum),
        c.count(EntryStatus::Mismatch),
        c.count(EntryStatus::ErratumMismatch),
        c.count(EntryStatus::Missing),
    );
    match c.optimum_agrees {
        Some(true) => {
            let _ = writeln!(out, "  corrected optimum {optimum} agrees with the fixture");
        }
        Some(false) => {
            let _ = writeln!(
                out,
                "  corrected optimum {optimum} DIFFERS from the fixture"
            );
        }
        None => {}
    }
}

fn warnings_section(out: &mut String, warnings: &[String]) {
    if warnings.is_empty() {
        return;
    }
    heading(out, "Warnings");
    for w in warnings {
        let _ = writeln!(out, "  {w}");
    }
}

pub fn render_decision_text(
    r: &DecisionReport,
    fixture: Option<&FixtureComparison>,
    precision: usize,
) -> String {
    let p = precision;
    let mut out = String::from("Decision report\n");
    heading(&mut out, "Soft set");
    ns_set_table(&mut out, &r.ns_set.0, p);
    relative_matrix(&mut out, "Relative parameter matrix", &r.relative_matrix, p);
    pipeline_sections(&mut out, r, p);
    warnings_section(&mut out, &r.warnings);
    if let Some(c) = fixture {
        comparison_section(&mut out, c, r.optimum(), p);
    }
    out
}

pub fn render_group_text(
    g: &GroupDecisionReport,
    fixture: Option<&FixtureComparison>,
    precision: usize,
) -> String {
    let p = precision;
    let mut out = String::from("Group decision report\n");
    for m in &g.makers {
        heading(&mut out, &format!("Maker {}: soft set", m.id));
        ns_set_table(&mut out, &m.ns_set.0, p);
        relative_matrix(
            &mut out,
            &format!("Maker {}: relative parameter matrix", m.id),
            m.saaty.matrix(),
            p,
        );
    }
    relative_matrix(&mut out, "Mean relative matrix", &g.mean_matrix, p);
    heading(&mut out, "Aggregate soft set");
    ns_set_table(&mut out, &g.aggregate.0, p);
    pipeline_sections(&mut out, &g.report, p);
    warnings_section(&mut out, &g.warnings);
    if let Some(c) = fixture {
        comparison_section(&mut out, c, g.optimum(), p);
    }
    out
}

#[derive(Serialize)]
struct Structured<'a, T: Serialize> {
    kind: &'static str,
    report: &'a T,
    optimum: &'a str,
    fixture: Option<&'a FixtureComparison>,
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("reports always serialize");
    text.push('\n');
    text
}

pub fn render_decision_structured(
    r: &DecisionReport,
    fixture: Option<&FixtureComparison>,
) -> String {
    to_json(&Structured {
        kind: "decision-report",
        report: r,
        optimum: r.optimum(),
        fixture,
    })
}

pub fn render_group_structured(
    g: &GroupDecisionReport,
    fixture: Option<&FixtureComparison>,
) -> String {
    to_json(&Structured {
        kind: "group-decision-report",
        report: g,
        optimum: g.optimum(),
        fixture,
    })
}

pub fn render_propositions_text(r: &PropositionReport) -> String {
    let mut out = String::from("Maji proposition check\n");
    let _ = writeln!(
        out,
        "  seed {}, {} random cases, tolerance {:e}",
        r.seed, r.random_cases, r.tolerance
    );
    out.push('\n');
    let width = r.propositions.iter().map(|o| o.id.len()).max().unwrap_or(0);
    for o in &r.propositions {
        let status = match o.status {
            PropositionStatus::Holds => "HOLDS",
            PropositionStatus::Fails => "FAILS",
        };
        let _ = writeln!(out, "  {:<width$}  {status}  {}", o.id, o.statement);
    }
    for o in &r.propositions {
        if let Some(w) = &o.witness {
            heading(&mut out, &format!("Witness for {} ({})", o.id, w.source));
            let _ = writeln!(out, "  {}", w.detail);
        }
    }
    out
}

pub fn render_propositions_structured(r: &PropositionReport) -> String {
    to_json(r)
}
