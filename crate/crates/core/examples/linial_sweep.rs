// Both conjectures checked exactly on a handful of small digraphs.

use spine_linial::harness::{gen_instance, GenParams, InstanceKind};
use spine_linial::{check_dual, check_linial};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for seed in 0..6 {
        let d = gen_instance(&GenParams::order(InstanceKind::General, 6, 6, 0.35, seed))?.digraph;
        let ks: Vec<usize> = (1..=d.n()).collect();
        let linial = check_linial(&d, &ks)?;
        let dual = check_dual(&d, &ks)?;
        let fmt = |c: &[spine_linial::BoundCheck]| {
            c.iter().map(|b| format!("{}<={}", b.lower, b.upper)).collect::<Vec<_>>().join(" ")
        };
        println!("seed {seed} ({} arcs)", d.arc_count());
        println!("  pi_k <= alpha_k : {}", fmt(&linial));
        println!("  chi_k <= lambda_k: {}", fmt(&dual));
        assert!(linial.iter().chain(&dual).all(|b| b.holds));
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
