//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Limits are wall-clock and include building every object.

use codesign::repro;

fn main() {
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let mut failed = 0;
    for criterion in repro::CRITERIA.iter() {
        if !filter.is_empty() && !filter.iter().any(|f| criterion.subset.contains(f.as_str())) {
            continue;
        }
        let r = criterion.run();
        let limit = r.limit_ms.map(|l| format!(" (limit {} ms)", l)).unwrap_or_default();
        println!(
            "{} criterion {:>2} [{}] {} in {} ms{}",
            if r.passed { "PASS" } else { "FAIL" },
            r.id,
            r.subset,
            r.title,
            r.elapsed_ms,
            limit
        );
        for line in &r.details {
            println!("       {line}");
        }
        if !r.passed {
            failed += 1;
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
