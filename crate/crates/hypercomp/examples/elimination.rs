//! Elimination orderings: find one, inspect its certificates, and turn
//! it into a single-added-vertex witness.

use hypercomp::{
    emit_digraph, find_elimination_ordering, parse_hypergraph, verify_witness,
    witness_from_elimination,
};

fn main() {
    // a "tight path" of 3-sets: each new vertex lies in exactly one
    // edge of the prefix, and |E| = |V| - 3 + 1 holds
    let h = parse_hypergraph("e a b c\ne b c d\ne c d e\n").unwrap();

    let ord = find_elimination_ordering(&h).unwrap().expect("ordering exists");
    println!("ordering: {}", ord.sequence.join(" "));
    for (pos, edge) in &ord.certificates {
        println!("  position {pos}: edge {{{}}}", edge.join(","));
    }

    let w = witness_from_elimination(&h, &ord).unwrap();
    assert!(verify_witness(&w).ok());
    println!("witness with k = {}:", w.added.len());
    print!("{}", emit_digraph(&w.digraph));

    // the triangle has no elimination ordering: too many edges, and
    // every vertex keeps degree 2
    let triangle = parse_hypergraph("e a b\ne a c\ne b c\n").unwrap();
    assert!(find_elimination_ordering(&triangle).unwrap().is_none());
    println!("triangle: no elimination ordering");
}
