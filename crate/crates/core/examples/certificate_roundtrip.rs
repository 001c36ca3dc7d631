// Certificates survive JSON and tampering does not.

use spine_linial::{certify, directed_cycle, verify_certificate, Certificate, SpinePartition};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let d = directed_cycle(6);
    let spine = SpinePartition::new(vec![1, 2, 3, 4, 5], vec![0]);
    let cert = certify(&d, &spine, 2)?;
    let json = cert.to_json();
    println!("{json}");

    let back = Certificate::from_json(&json)?;
    assert_eq!(back, cert);
    assert!(verify_certificate(&d, &back).is_ok());

    let mut forged = back.clone();
    forged.coloring[0].push(1);
    forged.weight += 1;
    let violations = verify_certificate(&d, &forged).expect_err("forged certificate");
    for v in &violations {
        println!("rejected: {v}");
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
