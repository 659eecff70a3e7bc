//! Prints one line per acceptance criterion. Criteria 9 to 12 fail on the
//! data as printed; the run fails only if an outcome differs from that.

use cli::acceptance::criteria;
use cli::{run_all, Suites};

const EXPECTED_RED: [usize; 4] = [9, 10, 11, 12];

fn main() {
    let mut s = Suites::new();
    run_all(&mut s, None);
    let report = s.finish(vec!["all".into()]);
    let mut unexpected = Vec::new();
    for c in criteria(&report.checks) {
        let red = EXPECTED_RED.contains(&c.number);
        let note = if red && !c.pass { "  [known red]" } else { "" };
        println!("{}{note}", c.line());
        if c.pass == red {
            unexpected.push(c.number);
        }
    }
    for c in report.failures() {
        eprintln!("  {} [{}]: {}", c.name, c.anchor, c.witness);
    }
    eprintln!("total {} ms", report.timing.total_millis);
    if !unexpected.is_empty() {
        eprintln!("criteria with unexpected outcome: {unexpected:?}");
        std::process::exit(1);
    }
}
