//! Construct witness digraphs for several hypergraph families and
//! check each one with the verifier.

use hypercomp::{
    construct_auto, emit_digraph, parse_hypergraph, verify_witness, witness_complete_uniform,
};

fn main() {
    // a connected graph: hk = |E| - |V| + 2
    let g = parse_hypergraph("e a b\ne b c\ne c d\ne d a\ne a c\n").unwrap();
    let w = construct_auto(&g);
    assert!(verify_witness(&w).ok());
    println!("connected graph: k = {}", w.added.len());
    print!("{}", emit_digraph(&w.digraph));

    // complete uniform hypergraphs straight from (n, r)
    for (n, r) in [(4, 2), (4, 3), (5, 3), (6, 4)] {
        let w = witness_complete_uniform(n, r).unwrap();
        assert!(verify_witness(&w).ok());
        println!("K({n},{r}): k = {}", w.added.len());
    }

    // a 3-uniform hypergraph without cycles needs a single added vertex
    let acyclic = parse_hypergraph("e a b c\ne c d e\ne e f g\n").unwrap();
    let w = construct_auto(&acyclic);
    assert!(verify_witness(&w).ok());
    println!("acyclic 3-uniform: k = {}", w.added.len());
}
