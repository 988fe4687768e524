//! Acceptance criteria, checked end to end through the `llt` binary.
//! Prints one PASS/FAIL line per criterion and exits non-zero on any failure.

use std::cell::RefCell;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

const THREADS: &str = "4";

type Criterion = fn(&Runner) -> Result<(), String>;

struct Runner {
    /// Every sweep run so far, with its normalized JSON report, for the determinism check.
    sweeps: RefCell<Vec<(Vec<String>, Vec<serde_json::Value>)>>,
}

fn llt(args: &[String]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_llt")).args(args).output().expect("binary runs")
}

fn owned(args: &[&str]) -> Vec<String> {
    args.iter().map(|s| s.to_string()).collect()
}

/// JSON lines of a sweep with the timing field removed.
fn normalized(stdout: &[u8]) -> Result<Vec<serde_json::Value>, String> {
    let text = String::from_utf8(stdout.to_vec()).map_err(|e| e.to_string())?;
    let mut lines = text
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).map_err(|e| format!("bad JSON line {l:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    let summary = lines.last_mut().ok_or("empty report")?;
    summary.as_object_mut().ok_or("summary is not an object")?.remove("wall_time_s");
    Ok(lines)
}

fn catalan(k: u64) -> u64 {
    (1..=k).fold(1u64, |c, i| c * (4 * i - 2) / (i + 1))
}

fn catalan_sum(n: u64) -> usize {
    (1..=n).map(catalan).sum::<u64>() as usize
}

/// Number of partitions of `k`, by the standard dynamic program over part sizes.
fn partition_count(k: usize) -> usize {
    let mut p = vec![0usize; k + 1];
    p[0] = 1;
    for part in 1..=k {
        for total in part..=k {
            p[total] += p[total - part];
        }
    }
    p[k]
}

impl Runner {
    /// Runs `llt verify <check> <extra…>` and returns its instance count; fails on
    /// a non-zero exit or any failing instance.
    fn sweep(&self, check: &str, extra: &[&str]) -> Result<usize, String> {
        let mut args = owned(&["verify", check, "--format", "json"]);
        args.extend(owned(extra));
        let mut with_threads = args.clone();
        with_threads.extend(owned(&["--threads", THREADS]));
        let out = llt(&with_threads);
        let lines = normalized(&out.stdout)?;
        let summary = lines.last().expect("normalized checks non-empty");
        let failures = summary["failures"].as_array().map_or(0, Vec::len);
        if out.status.code() != Some(0) || failures > 0 {
            return Err(format!(
                "{check} {}: exit {:?}, {failures} failures; first: {}; stderr: {}",
                extra.join(" "),
                out.status.code(),
                summary["failures"].get(0).map_or(String::new(), |f| f.to_string()),
                String::from_utf8_lossy(&out.stderr).trim()
            ));
        }
        let instances = summary["instances"].as_u64().ok_or("missing instance count")? as usize;
        if instances == 0 {
            return Err(format!("{check} {}: no instances", extra.join(" ")));
        }
        self.sweeps.borrow_mut().push((args, lines));
        Ok(instances)
    }

    fn sweep_count(&self, check: &str, extra: &[&str], expected: usize) -> Result<(), String> {
        let got = self.sweep(check, extra)?;
        if got != expected {
            return Err(format!("{check} {}: {got} instances, expected {expected}", extra.join(" ")));
        }
        Ok(())
    }
}

fn golden(args: &[&str], expected: &str) -> Result<(), String> {
    let start = Instant::now();
    let out = llt(&owned(args));
    let elapsed = start.elapsed();
    let text = String::from_utf8_lossy(&out.stdout);
    if out.status.code() != Some(0) {
        return Err(format!("exit {:?}", out.status.code()));
    }
    if text != expected {
        return Err(format!("output differs:\n{text}"));
    }
    if elapsed >= Duration::from_secs(1) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(())
}

fn criterion_1(_: &Runner) -> Result<(), String> {
    golden(
        &["compute", "llt", "--area", "0,0,1,2", "--basis", "s"],
        "s[1,1,1,1]: q^3\n\
         s[2,1,1]: q + q^2 + q^3\n\
         s[2,2]: q + q^2\n\
         s[3,1]: 1 + q + q^2\n\
         s[4]: 1\n",
    )
}

fn criterion_2(_: &Runner) -> Result<(), String> {
    golden(
        &["compute", "lltc", "--area", "0,1,2,2,2,2", "--strict", "1-4,2-5", "--basis", "e", "--form", "shifted"],
        "e[2,2,1,1]: 1 + 3q + 3q^2 + q^3\n\
         e[3,1,1,1]: q + 3q^2 + 3q^3 + q^4\n\
         e[3,2,1]: 4q + 14q^2 + 18q^3 + 10q^4 + 2q^5\n\
         e[3,3]: 2q^2 + 7q^3 + 9q^4 + 5q^5 + q^6\n\
         e[4,1,1]: q + 8q^2 + 20q^3 + 22q^4 + 11q^5 + 2q^6\n\
         e[4,2]: 2q^2 + 9q^3 + 16q^4 + 14q^5 + 6q^6 + q^7\n\
         e[5,1]: 4q^2 + 22q^3 + 48q^4 + 53q^5 + 31q^6 + 9q^7 + q^8\n\
         e[6]: 4q^3 + 20q^4 + 41q^5 + 44q^6 + 26q^7 + 8q^8 + q^9\n",
    )
}

fn criterion_3(r: &Runner) -> Result<(), String> {
    r.sweep_count("conjecture", &["--n", "6"], catalan_sum(6))?;
    let strips = r.sweep("conjecture", &["--n", "5", "--strict", "all-corners"])?;
    if strips <= catalan_sum(5) {
        return Err(format!("only {strips} vertical-strip instances"));
    }
    Ok(())
}

fn criterion_4(r: &Runner) -> Result<(), String> {
    r.sweep_count("omega", &["--n", "6"], catalan_sum(6))?;
    r.sweep_count("row-col-area", &["--n", "8"], catalan_sum(8))
}

fn criterion_5(r: &Runner) -> Result<(), String> {
    r.sweep("corner", &["--n", "6"])?;
    let lee = r.sweep("lee", &["--n", "6"])?;
    let dual = r.sweep("dual-lee", &["--n", "6"])?;
    r.sweep_count("two-term", &["--n", "6"], lee + dual)
}

fn criterion_6(r: &Runner) -> Result<(), String> {
    r.sweep_count("complete-rec", &["--n", "7"], 2 * 7)?;
    r.sweep_count("q-binomial", &["--n", "7"], 7 * 8 / 2)?;
    r.sweep_count("rectangular", &["--n", "7"], 7 * 8 / 2)?;
    r.sweep_count("line-graph", &["--n", "7"], 7)
}

fn criterion_7(r: &Runner) -> Result<(), String> {
    let total: usize = (1..=7).map(partition_count).sum();
    r.sweep_count("hl-positivity", &["--n", "7"], total)?;
    r.sweep_count("hl-relation", &["--n", "7"], total)
}

fn criterion_8(r: &Runner) -> Result<(), String> {
    r.sweep_count("charge", &["--n", "6"], catalan_sum(6))?;
    r.sweep("family", &["--n", "7"])?;
    r.sweep_count("fixed-tableau", &["--n", "5"], catalan_sum(5))
}

fn criterion_9(r: &Runner) -> Result<(), String> {
    r.sweep_count("plethysm", &["--n", "5"], catalan_sum(5))
}

fn criterion_10(r: &Runner) -> Result<(), String> {
    r.sweep_count("pexpansion", &["--n", "4"], catalan_sum(4))?;
    r.sweep_count("equivalent", &["--n", "4"], catalan_sum(4))?;
    // Every third area sequence of size 5.
    let sampled = catalan_sum(4) + (catalan(5) as usize).div_ceil(3);
    r.sweep_count("pexpansion", &["--n", "5", "--sample-stride", "3"], sampled)?;
    r.sweep_count("equivalent", &["--n", "5", "--sample-stride", "3"], sampled)?;
    r.sweep_count("b-theta", &["--n", "4"], catalan_sum(4))
}

fn criterion_11(r: &Runner) -> Result<(), String> {
    r.sweep("strip-reduce", &["--n", "5"])?;
    r.sweep("abelian-reduce", &["--n", "5"])?;
    // Melting lollipops (m, k, n) with 1 ≤ m, 0 ≤ k < m, m + n ≤ 7.
    let count = (1..=7usize).map(|total| (1..=total).sum::<usize>()).sum();
    r.sweep_count("melting-lollipop", &["--n", "7"], count)
}

fn criterion_12(r: &Runner) -> Result<(), String> {
    let sweeps = r.sweeps.borrow();
    if sweeps.is_empty() {
        return Err("no sweeps recorded".into());
    }
    for (args, parallel) in sweeps.iter() {
        let mut single = args.clone();
        single.extend(owned(&["--threads", "1"]));
        let serial = normalized(&llt(&single).stdout)?;
        if &serial != parallel {
            return Err(format!("`llt {}` differs between 1 and {THREADS} threads", args.join(" ")));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 12] = [
        ("Schur expansion of G_{0012}", criterion_1),
        ("shifted e-expansion of LLTc for a=(0,1,2,2,2,2), s={(1,4),(2,5)}", criterion_2),
        ("G == LLTc: unicellular n <= 6, all vertical strips n <= 5", criterion_3),
        ("omega/transpose identity n <= 6, row/column area multisets n <= 8", criterion_4),
        ("corner identity, Lee and dual-Lee three- and two-term identities n <= 6", criterion_5),
        ("complete-graph recursions, q-binomial lemma, rectangular factorization, line graphs n <= 7", criterion_6),
        ("Hall-Littlewood specialisation, triangularity, h-positivity and Gamma_mu relation n <= 7", criterion_7),
        ("charge theorem n <= 6, G-tilde == G on named families n <= 7, fixed-tableau identity n <= 5", criterion_8),
        ("plethystic relation n <= 5", criterion_9),
        ("power-sum expansion and equivalent form n <= 4, sampled n = 5; chain posets n <= 4", criterion_10),
        ("reduction drivers evaluate exactly n <= 5; melting lollipops reach base cases m+n <= 7", criterion_11),
        ("identical reports at 1 and 4 threads for every sweep above", criterion_12),
    ];
    let runner = Runner { sweeps: RefCell::new(Vec::new()) };
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run(&runner);
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(()) => println!("criterion {:>2}: PASS  {title} ({secs:.2} s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {title} ({secs:.2} s)\n    {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
