//! Run reports for verification sweeps, in text or JSON-lines form.

use std::io::{self, Write};
use std::time::Duration;

use llt::verify::{Outcome, SweepResult};
use serde_json::json;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// A failed instance with both sides of the comparison.
#[derive(Clone, Debug)]
pub struct Failure {
    pub instance: String,
    pub expected: String,
    pub actual: String,
}

/// Summary of one verification run; `failures` is empty exactly when the exit code is 0.
#[derive(Clone, Debug)]
pub struct RunReport {
    pub command: String,
    pub instances: usize,
    pub failures: Vec<Failure>,
    pub wall_time: Duration,
}

impl RunReport {
    pub fn from_sweep(command: String, sweep: &SweepResult, wall_time: Duration) -> Self {
        let failures = sweep
            .failures()
            .map(|o| Failure { instance: o.instance.clone(), expected: o.expected.clone(), actual: o.actual.clone() })
            .collect();
        RunReport { command, instances: sweep.instances(), failures, wall_time }
    }

    pub fn exit_code(&self) -> u8 {
        if self.failures.is_empty() {
            0
        } else {
            1
        }
    }
}

fn outcome_json(check: &str, o: &Outcome) -> serde_json::Value {
    if o.pass {
        json!({ "check": check, "instance": o.instance, "pass": true })
    } else {
        json!({ "check": check, "instance": o.instance, "pass": false, "expected": o.expected, "actual": o.actual })
    }
}

/// Writes one line per instance followed by the summary.
pub fn write_sweep(out: &mut impl Write, format: Format, sweep: &SweepResult, report: &RunReport) -> io::Result<()> {
    let check = sweep.check.name();
    match format {
        Format::Text => {
            writeln!(out, "# {}", report.command)?;
            for o in &sweep.outcomes {
                if o.pass {
                    writeln!(out, "ok {}", o.instance)?;
                } else {
                    writeln!(out, "FAIL {}", o.instance)?;
                    writeln!(out, "  expected: {}", o.expected)?;
                    writeln!(out, "  actual:   {}", o.actual)?;
                }
            }
            writeln!(out, "instances: {}", report.instances)?;
            writeln!(out, "failures: {}", report.failures.len())?;
            writeln!(out, "wall time: {:.3} s", report.wall_time.as_secs_f64())?;
        }
        Format::Json => {
            for o in &sweep.outcomes {
                writeln!(out, "{}", outcome_json(check, o))?;
            }
            let failures: Vec<_> = report
                .failures
                .iter()
                .map(|f| json!({ "instance": f.instance, "expected": f.expected, "actual": f.actual }))
                .collect();
            let summary = json!({
                "command": report.command,
                "instances": report.instances,
                "failures": failures,
                "wall_time_s": (report.wall_time.as_secs_f64() * 1000.0).round() / 1000.0,
            });
            writeln!(out, "{summary}")?;
        }
    }
    Ok(())
}
