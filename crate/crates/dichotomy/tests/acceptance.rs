//! Acceptance criteria 1 to 12. Prints one pass/fail line per criterion and
//! exits nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use dichotomy::repro;

fn end_to_end() -> (bool, String) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_dichotomy")).arg("repro").output().expect("binary runs");
    let secs = start.elapsed().as_secs_f64();
    let stdout = String::from_utf8_lossy(&out.stdout);
    let lines: Vec<&str> = stdout.lines().collect();
    let passed = out.status.success()
        && secs < 300.0
        && lines.len() == 12
        && lines.iter().all(|l| l.starts_with("[PASS]"));
    let line = format!(
        "[{}] 12. end-to-end repro ({secs:.1} s): exit {:?}, {} of 12 lines pass",
        if passed { "PASS" } else { "FAIL" },
        out.status.code(),
        lines.iter().filter(|l| l.starts_with("[PASS]")).count()
    );
    (passed, line)
}

fn main() -> ExitCode {
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let wanted = |id: u8| filter.is_empty() || filter.iter().any(|f| f.parse() == Ok(id));
    let mut failed = 0;
    for &(id, _, _) in &repro::CHECKS {
        if wanted(id) {
            let c = repro::run(id);
            println!("{c}");
            failed += usize::from(!c.passed);
        }
    }
    if wanted(12) {
        let (passed, line) = end_to_end();
        println!("{line}");
        failed += usize::from(!passed);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} acceptance criteria failed");
        ExitCode::FAILURE
    }
}
