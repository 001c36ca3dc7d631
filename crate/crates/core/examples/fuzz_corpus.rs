// A seeded constructive fuzz run and its JSONL log.

use spine_linial::harness::{fuzz_run, Check, FuzzConfig, GenParams};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let mut config = FuzzConfig::new(GenParams::spine(5, 3, 0.5, 99), 60, vec![Check::Constructive]);
    config.densities = vec![0.2, 0.5, 0.8];
    let report = fuzz_run(&config)?;

    println!("{} instances, {} (instance, k) checks", report.instances_run, report.observations.len());
    for (case, count) in &report.case_counts {
        println!("  {:<9} {count}", case.as_str());
    }
    println!("violations: {}", report.violations.len());

    let log = report.to_jsonl(&config);
    for line in log.lines().take(2) {
        println!("{line}");
    }
    assert!(report.is_clean());
    assert_eq!(log, fuzz_run(&config)?.to_jsonl(&config));
    Ok(())
}

fn main() {
    run().unwrap();
}
