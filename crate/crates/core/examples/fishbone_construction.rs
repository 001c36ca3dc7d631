// The fish-bone on a zigzag-free spine where X is tight.

use spine_linial::{certify, fishbone, zigzag_violation, Digraph, SpinePartition, TightnessOutcome};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let arcs = [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (0, 5), (1, 5), (5, 3), (6, 2), (6, 3)];
    let d = Digraph::new(7, &arcs)?;
    let spine = SpinePartition::new(vec![0, 1, 2, 3], vec![4, 5, 6]);
    assert!(zigzag_violation(&d, &spine)?.is_none());

    let k = 2;
    match fishbone(&d, &spine, k)? {
        TightnessOutcome::Fishbone(fb) => {
            println!("P1 = {} (ends in Y at {})", fb.p1, fb.y_terminal);
            println!("P2 = {}", fb.p2);
            println!("|P1| + |P2| = {} = |X| + k + 1", fb.p1.len() + fb.p2.len());
        }
        TightnessOutcome::Loose(w) => println!("loose: {w:?}"),
    }
    let cert = certify(&d, &spine, k)?;
    println!("partition {:?}, coloring {:?}", cert.partition, cert.coloring);
    println!("k_norm {} <= weight {}", cert.k_norm, cert.weight);
    Ok(())
}

fn main() {
    run().unwrap();
}
