//! Markdown rendering of an audit report.

use std::fmt::Write;

use crate::{AuditReport, LawKind};

pub fn render_markdown(report: &AuditReport) -> String {
    let c = &report.config;
    let mut out = String::new();
    let dims: Vec<String> = c.dims.iter().map(usize::to_string).collect();
    let _ = writeln!(out, "# Law audit\n");
    let _ = writeln!(
        out,
        "seed {} · {} samples · dims {} · domain {:?} · orientation {} · abs_eps {:e} · rel_eps {:e} · version {}\n",
        c.seed,
        c.samples,
        dims.join(","),
        c.domain,
        c.orientation,
        c.tolerance.abs_eps,
        c.tolerance.rel_eps,
        report.version
    );
    out.push_str("| law | dim | kind | passes | rate | max dev | resamples | status |\n");
    out.push_str("|---|---:|---|---:|---:|---:|---:|---|\n");
    for r in &report.results {
        let kind = match r.kind() {
            LawKind::Invariant => "invariant",
            LawKind::Hypothesis => "hypothesis",
        };
        let status = match (r.passes == r.samples, r.kind()) {
            (true, _) => "holds",
            (false, LawKind::Invariant) => "VIOLATED",
            (false, LawKind::Hypothesis) => "refuted",
        };
        let _ = writeln!(
            out,
            "| {} | {} | {} | {}/{} | {:.4} | {:.3e} | {} | {} |",
            r.law,
            r.dim,
            kind,
            r.passes,
            r.samples,
            r.pass_rate(),
            r.max_dev,
            r.resamples,
            status
        );
    }
    let failures: Vec<_> = report.results.iter().filter_map(|r| r.counterexample.as_ref().map(|c| (r, c))).collect();
    if !failures.is_empty() {
        out.push_str("\n## First counterexamples\n");
        for (r, cx) in failures {
            let ops = serde_json::to_string(&cx.operands).unwrap_or_default();
            let _ = writeln!(out, "\n### {} (dim {}), sample {}\n", r.law, r.dim, cx.index);
            let _ = writeln!(out, "- check: {}", cx.check);
            let _ = writeln!(out, "- operands: `{ops}`");
            if !cx.params.is_empty() {
                let p: Vec<String> = cx.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                let _ = writeln!(out, "- params: {}", p.join(", "));
            }
            let _ = writeln!(out, "- lhs: {:?}", cx.lhs);
            let _ = writeln!(out, "- rhs: {:?}", cx.rhs);
            let _ = writeln!(out, "- deviation: {:.3e}", cx.deviation);
        }
    }
    out
}
