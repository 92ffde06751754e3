//! Lower bounds on the hypercompetition number for a few hypergraphs.

use hypercomp::{best_lower_bound, parse_hypergraph, Hypergraph};

fn report(name: &str, h: &Hypergraph) {
    let b = best_lower_bound(h);
    println!(
        "{name}: sizeBound={} degreeBound={} best={}",
        b.size_bound, b.degree_bound, b.best
    );
}

fn main() {
    let triangle = parse_hypergraph("e a b\ne a c\ne b c\n").unwrap();
    report("triangle", &triangle);

    // complete 3-uniform hypergraph on 5 vertices
    let mut k53 = Hypergraph::new();
    let names = ["v1", "v2", "v3", "v4", "v5"];
    for i in 0..5 {
        for j in i + 1..5 {
            for k in j + 1..5 {
                k53.add_edge(&[names[i], names[j], names[k]]).unwrap();
            }
        }
    }
    report("K(5,3)", &k53);

    // an isolated vertex drops both bounds
    let mut with_isolated = triangle.clone();
    with_isolated.ensure_vertex("x");
    report("triangle + isolated", &with_isolated);
}
