use crate::hypergraph::Hypergraph;

/// The two general lower bounds on the hypercompetition number and
/// their combination. `size_bound` is kept unclamped so a vacuous
/// (negative) bound is distinguishable from a bound of 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundReport {
    pub size_bound: i64,
    pub degree_bound: usize,
    pub best: usize,
}

/// |E(H)| - |V(H)| + min edge size, unclamped. An edge-free hypergraph
/// has hk = 0 (the empty digraph witnesses it), so 0 is returned then.
pub fn lower_bound_size(h: &Hypergraph) -> i64 {
    let min_edge = match h.edges().iter().map(|e| e.len()).min() {
        Some(m) => m as i64,
        None => return 0,
    };
    h.edge_count() as i64 - h.vertex_count() as i64 + min_edge
}

/// Minimum vertex degree; 0 exactly when H has an isolated vertex
/// (or no vertices at all).
pub fn lower_bound_degree(h: &Hypergraph) -> usize {
    (0..h.vertex_count()).map(|v| h.degree_of(v)).min().unwrap_or(0)
}

pub fn best_lower_bound(h: &Hypergraph) -> BoundReport {
    let size_bound = lower_bound_size(h);
    let degree_bound = lower_bound_degree(h);
    let best = size_bound.max(degree_bound as i64).max(0) as usize;
    BoundReport {
        size_bound,
        degree_bound,
        best,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Hypergraph {
        let mut h = Hypergraph::new();
        h.add_edge(&["a", "b"]).unwrap();
        h.add_edge(&["a", "c"]).unwrap();
        h.add_edge(&["b", "c"]).unwrap();
        h
    }

    fn complete_uniform(n: usize, r: usize) -> Hypergraph {
        let mut h = Hypergraph::new();
        let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        for v in &names {
            h.ensure_vertex(v);
        }
        // all r-subsets by bitmask
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize == r {
                let members: Vec<&str> = (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| names[i].as_str())
                    .collect();
                h.add_edge(&members).unwrap();
            }
        }
        h
    }

    #[test]
    fn size_bound_values() {
        assert_eq!(lower_bound_size(&triangle()), 2);

        let mut single = Hypergraph::new();
        single.add_edge(&["a", "b", "c"]).unwrap();
        assert_eq!(lower_bound_size(&single), 1);

        assert_eq!(lower_bound_size(&complete_uniform(5, 3)), 8);
    }

    #[test]
    fn degree_bound_values() {
        assert_eq!(lower_bound_degree(&triangle()), 2);

        let mut h = Hypergraph::new();
        h.add_edge(&["a", "b", "c"]).unwrap();
        h.ensure_vertex("d");
        assert_eq!(lower_bound_degree(&h), 0);

        let mut path = Hypergraph::new();
        path.add_edge(&["a", "b"]).unwrap();
        path.add_edge(&["b", "c"]).unwrap();
        assert_eq!(lower_bound_degree(&path), 1);
    }

    #[test]
    fn best_combines_and_clamps() {
        assert_eq!(best_lower_bound(&triangle()).best, 2);

        let mut edge_free = Hypergraph::new();
        edge_free.ensure_vertex("a");
        edge_free.ensure_vertex("b");
        edge_free.ensure_vertex("c");
        let report = best_lower_bound(&edge_free);
        assert_eq!(report.size_bound, 0);
        assert_eq!(report.best, 0);

        let k43 = complete_uniform(4, 3);
        let report = best_lower_bound(&k43);
        assert_eq!(report.size_bound, 3);
        assert_eq!(report.degree_bound, 3);
        assert_eq!(report.best, 3);
    }

    #[test]
    fn isolated_vertex_shifts_size_bound() {
        let mut h = triangle();
        let before = lower_bound_size(&h);
        h.ensure_vertex("x");
        assert_eq!(lower_bound_size(&h), before - 1);
        assert_eq!(lower_bound_degree(&h), 0);
    }
}
