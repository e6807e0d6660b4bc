//! Output shaping: the human-readable report listing and the JSON form of a
//! truncated series. Tensor legs become nested arrays in JSON — one array of
//! generator strings per leg, the empty array for the unit — so consumers
//! never have to parse the `(x)⊗(y)` text rendering.

use std::io::{self, Write};

use serde_json::{json, Value};
use svq_core::{CheckStatus, Report, Series};

/// One line per check, indented defect witnesses under failures, then a
/// summary line. Pass lines start with `pass `, failures with `FAIL `.
pub fn write_report_text(w: &mut impl Write, report: &Report) -> io::Result<()> {
    for check in &report.checks {
        let status = match check.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
        };
        write!(w, "{status} {} {}", check.suite, check.name)?;
        for (k, v) in &check.params {
            write!(w, " {k}={v}")?;
        }
        writeln!(w)?;
        if let Some(defect) = &check.defect {
            writeln!(w, "    defect: {defect}")?;
        }
    }
    writeln!(
        w,
        "passed {}, failed {} ({} ms)",
        report.summary.passed, report.summary.failed, report.runtime_ms
    )
}

/// `{"legs": d, "order": N, "coefficients": [{"power": k, "terms": [...]}]}`
/// with zero coefficients omitted. Each term is
/// `{"coeff": "<rational>", "legs": [["L(0)", "L(1)"], []]}`.
pub fn series_json(s: &Series) -> Value {
    let coefficients: Vec<Value> = s
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(power, c)| {
            let terms: Vec<Value> = c
                .terms()
                .map(|(key, coeff)| {
                    let legs: Vec<Value> = key
                        .iter()
                        .map(|m| {
                            Value::from(
                                m.generators()
                                    .iter()
                                    .map(|g| g.to_string())
                                    .collect::<Vec<_>>(),
                            )
                        })
                        .collect();
                    json!({ "coeff": coeff.to_string(), "legs": legs })
                })
                .collect();
            json!({ "power": power, "terms": terms })
        })
        .collect();
    json!({
        "legs": s.degree(),
        "order": s.order(),
        "coefficients": coefficients,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use svq_core::{rat, Generator, Suite, SuiteConfig, TensorElement, UeaElement};

    #[test]
    fn series_json_uses_nested_leg_arrays() {
        let m1 = UeaElement::generator(Generator::m(1));
        let mut s = Series::constant(TensorElement::outer(&[&UeaElement::one(), &m1]), 2);
        s = s.sub(&Series::constant(TensorElement::outer(&[&m1, &m1]), 2).shift_t(1));
        let v = series_json(&s);
        assert_eq!(v["legs"], 2);
        assert_eq!(v["order"], 2);
        let coeffs = v["coefficients"].as_array().unwrap();
        // the zero t^2 coefficient is omitted
        assert_eq!(coeffs.len(), 2);
        assert_eq!(coeffs[0]["power"], 0);
        assert_eq!(coeffs[0]["terms"][0]["legs"], json!([[], ["M(1)"]]));
        assert_eq!(coeffs[1]["terms"][0]["coeff"], "-1");
        assert_eq!(coeffs[1]["terms"][0]["legs"], json!([["M(1)"], ["M(1)"]]));
    }

    #[test]
    fn text_report_counts_match_the_summary() {
        let cfg = SuiteConfig {
            suites: vec![Suite::Bialgebra],
            n0_values: vec![1],
            order: 2,
            index_range: 1,
            a_samples: vec![rat(0)],
            ..SuiteConfig::default()
        };
        let report = svq_core::run_suite(&cfg);
        let mut out = Vec::new();
        write_report_text(&mut out, &report).unwrap();
        let text = String::from_utf8(out).unwrap();
        let passes = text.lines().filter(|l| l.starts_with("pass ")).count();
        let fails = text.lines().filter(|l| l.starts_with("FAIL ")).count();
        assert_eq!(passes, report.summary.passed);
        assert_eq!(fails, report.summary.failed);
        assert!(text.ends_with(&format!(
            "passed {}, failed 0 ({} ms)\n",
            report.summary.passed, report.runtime_ms
        )));
    }
}
