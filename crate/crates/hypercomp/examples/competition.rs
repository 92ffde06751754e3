//! Build a digraph, compute its competition hypergraph, and print both
//! in the plain text format.

use hypercomp::{competition_hypergraph, emit_digraph, emit_hypergraph, Digraph};

fn main() {
    let mut d = Digraph::new();
    // two predators of c, three of d, one of e
    d.add_arc("a", "c").unwrap();
    d.add_arc("b", "c").unwrap();
    d.add_arc("a", "d").unwrap();
    d.add_arc("b", "d").unwrap();
    d.add_arc("c", "d").unwrap();
    d.add_arc("d", "e").unwrap();

    println!("digraph:");
    print!("{}", emit_digraph(&d));

    let ch = competition_hypergraph(&d);
    println!();
    println!("competition hypergraph:");
    print!("{}", emit_hypergraph(&ch));
    // {a,b} appears once even though it is the in-neighborhood of both
    // c and d; e gets no edge because its only in-neighbor is d
}
