use std::fmt::Write;

use qball::verify::VerificationReport;

fn sci(x: f64) -> String {
    format!("{x:.2e}")
}

pub fn markdown(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    out.push_str("| series | phases | q | N | relations | orbit | orbit err | decomposition | simple | min gap | bridge | pass |\n");
    out.push_str("|---|---|---|---|---|---|---|---|---|---|---|---|\n");
    for r in reports {
        let relations = r.relations.iter().chain(r.cross_identities.iter().map(|c| &c.numeric));
        let worst = relations.fold(0.0f64, |a, x| a.max(x.residual));
        let phases: Vec<String> = r.phases.iter().map(|p| format!("{p:.4}")).collect();
        let decomposition = match &r.decomposition {
            Some(d) => sci(d.checks().fold(0.0f64, |a, x| a.max(x.residual))),
            None => "n/a".into(),
        };
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} | {} |",
            r.series,
            phases.join(", "),
            r.q,
            r.cutoff,
            sci(worst),
            r.spectrum.orbit,
            sci(r.spectrum.max_error),
            decomposition,
            r.weights.simple,
            r.weights.min_gap.map_or("n/a".into(), sci),
            sci(r.bridge.max_error),
            if r.pass { "yes" } else { "NO" },
        );
    }
    out
}
