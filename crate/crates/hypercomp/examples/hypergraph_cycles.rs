//! Hypergraph cycles in the Berge sense: the counting criterion and a
//! concrete cycle found by brute force on a small instance.

use hypercomp::parse_hypergraph;

fn main() {
    // acyclic: sum of (|e| - 1) equals |V| - #components
    let forest = parse_hypergraph("e a b c\ne c d\ne d e f\n").unwrap();
    println!("loose path acyclic: {}", forest.has_no_cycle());

    let triangle = parse_hypergraph("e a b\ne a c\ne b c\n").unwrap();
    println!("triangle acyclic: {}", triangle.has_no_cycle());
    if let Some(cycle) = triangle.find_cycle_bruteforce().unwrap() {
        println!(
            "  cycle: vertices {} via edges {:?}",
            cycle.vertex_sequence.join(" "),
            cycle.edge_sequence
        );
    }

    // two 3-sets sharing two vertices already form a cycle
    let tight = parse_hypergraph("e a b c\ne b c d\n").unwrap();
    println!("overlapping 3-sets acyclic: {}", tight.has_no_cycle());
}
