// Parse a graph file, find spine and split partitions, look for zigzags.

use spine_linial::cli::parse_graph;
use spine_linial::{find_spine_partition, find_split_partition, zigzag_violation};

const GRAPH: &str = "\
# a path 0-1-2 with two pendant stable vertices
n 5
a 0 1
a 1 2
a 3 0
a 1 3
a 2 4
";

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let d = parse_graph(GRAPH)?.digraph;
    let spine = find_spine_partition(&d)?.ok_or("no spine partition")?;
    println!("spine: X = {}, Y = {:?}", spine.x_order, spine.y_set);
    match zigzag_violation(&d, &spine)? {
        Some(v) => println!("zigzag: {v}"),
        None => println!("the spine path is zigzag-free"),
    }
    match find_split_partition(&d) {
        Some(s) => println!("split: clique {:?}, stable {:?}", s.x_order.vertices(), s.y_set),
        None => println!("not a split digraph"),
    }
    Ok(())
}

fn main() {
    run().unwrap();
}
