// The directed 5-cycle: exact values and a certificate for every k.

use spine_linial::{alpha_k_oracle, certify, directed_cycle, find_spine_partition, pi_k_oracle, verify_certificate};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let c5 = directed_cycle(5);
    let spine = find_spine_partition(&c5)?.ok_or("C5 has a spine partition")?;
    println!("spine: X = {}, Y = {:?}", spine.x_order, spine.y_set);

    for k in 1..=5 {
        let cert = certify(&c5, &spine, k)?;
        verify_certificate(&c5, &cert).map_err(|v| format!("{v:?}"))?;
        let (pi, alpha) = (pi_k_oracle(&c5, k)?, alpha_k_oracle(&c5, k)?);
        println!(
            "k={k}: {:<9} pi_k={pi} <= k_norm={} <= weight={} <= alpha_k={alpha}",
            cert.case_tag.as_str(),
            cert.k_norm,
            cert.weight
        );
        assert!(pi <= cert.k_norm && cert.k_norm <= cert.weight && cert.weight <= alpha);
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
