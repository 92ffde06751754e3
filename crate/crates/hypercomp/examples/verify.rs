//! Witness verification: a correct certificate, then the four failure
//! modes in the order the verifier reports them.

use hypercomp::{parse_digraph, parse_hypergraph, verify_witness, Witness};

fn check(label: &str, base: &str, digraph: &str, added: &[&str]) {
    let w = Witness {
        base: parse_hypergraph(base).unwrap(),
        digraph: parse_digraph(digraph).unwrap(),
        added: added.iter().map(|s| s.to_string()).collect(),
    };
    match verify_witness(&w).failure {
        None => println!("{label}: OK k={}", w.added.len()),
        Some(f) => println!("{label}: {f}"),
    }
}

fn main() {
    check(
        "valid",
        "e a b c\n",
        "v a\nv b\nv c\na a z\na b z\na c z\n",
        &["z"],
    );
    check(
        "vertex-mismatch",
        "e a b c\n",
        "a a z\na b z\n", // c missing from the digraph
        &["z"],
    );
    check(
        "cycle",
        "v a\nv b\n",
        "a a b\na b a\n",
        &[],
    );
    check(
        "extra-edge",
        "v a\nv b\nv c\n",
        "a a c\na b c\n", // realizes {a,b}, which the base lacks
        &[],
    );
    check(
        "missing-edge",
        "e a b\n",
        "v a\nv b\n", // arc-free digraph realizes nothing
        &[],
    );
}
