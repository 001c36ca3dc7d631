// Hamiltonian paths in tournaments by insertion.

use spine_linial::hamiltonian_path_semicomplete;
use spine_linial::harness::{gen_instance, GenParams, InstanceKind};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for (n, seed) in [(6, 1), (12, 2), (40, 3)] {
        let d = gen_instance(&GenParams::order(InstanceKind::Tournament, n, n, 0.5, seed))?.digraph;
        let all: Vec<usize> = d.vertices().collect();
        let path = hamiltonian_path_semicomplete(&d, &all)?;
        assert!(d.is_path(path.vertices()) && path.len() == n);
        if n <= 12 {
            println!("n={n}: {path}");
        } else {
            println!("n={n}: path of {} vertices from {:?} to {:?}", path.len(), path.first(), path.terminal());
        }
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
