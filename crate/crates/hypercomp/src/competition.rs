use std::collections::BTreeSet;

use crate::digraph::Digraph;
use crate::hypergraph::Hypergraph;

/// The competition hypergraph of a digraph: same vertex set, and the
/// hyperedges are exactly the in-neighborhoods of size at least 2
/// (collapsed as a set). The digraph need not be acyclic.
pub fn competition_hypergraph(d: &Digraph) -> Hypergraph {
    let mut h = Hypergraph::new();
    for v in d.vertices() {
        h.ensure_vertex(v);
    }
    for v in 0..d.vertex_count() {
        let nbhd = d.in_neighborhood(v);
        if nbhd.len() >= 2 {
            let names: Vec<&str> = nbhd.iter().map(|&u| d.vertex_name(u)).collect();
            h.add_edge(&names).expect("in-neighborhood of size >= 2");
        }
    }
    h
}

/// A digraph claimed to realize a hypergraph: `digraph` should be
/// acyclic and its competition hypergraph should be `base` plus the
/// `added` vertices as isolated vertices. Certifies hk(base) <= |added|.
#[derive(Debug, Clone)]
pub struct Witness {
    pub digraph: Digraph,
    pub base: Hypergraph,
    pub added: Vec<String>,
}

/// First violated witness invariant, with a concrete counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    VertexMismatch(String),
    Cycle(Vec<String>),
    ExtraEdge(Vec<String>),
    MissingEdge(Vec<String>),
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::VertexMismatch(v) => write!(f, "vertex-mismatch {v}"),
            Failure::Cycle(seq) => write!(f, "cycle {}", seq.join(" ")),
            Failure::ExtraEdge(e) => write!(f, "extra-edge {{{}}}", e.join(",")),
            Failure::MissingEdge(e) => write!(f, "missing-edge {{{}}}", e.join(",")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub failure: Option<Failure>,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.failure.is_none()
    }
}

/// Check all witness invariants, in the order vertex-mismatch, cycle,
/// extra-edge, missing-edge, and report the first violation found.
pub fn verify_witness(w: &Witness) -> VerificationReport {
    let fail = |f: Failure| VerificationReport { failure: Some(f) };

    // vertex sets first, so the later diagnostics are well-defined
    let base_vs: BTreeSet<&str> = w.base.vertices().iter().map(|s| s.as_str()).collect();
    let added_vs: BTreeSet<&str> = w.added.iter().map(|s| s.as_str()).collect();
    if added_vs.len() != w.added.len() {
        let mut seen = BTreeSet::new();
        for a in &w.added {
            if !seen.insert(a.as_str()) {
                return fail(Failure::VertexMismatch(a.clone()));
            }
        }
    }
    if let Some(v) = added_vs.intersection(&base_vs).next() {
        return fail(Failure::VertexMismatch(v.to_string()));
    }
    let digraph_vs: BTreeSet<&str> = w.digraph.vertices().iter().map(|s| s.as_str()).collect();
    let expected: BTreeSet<&str> = base_vs.union(&added_vs).copied().collect();
    if let Some(v) = digraph_vs.difference(&expected).next() {
        return fail(Failure::VertexMismatch(v.to_string()));
    }
    if let Some(v) = expected.difference(&digraph_vs).next() {
        return fail(Failure::VertexMismatch(v.to_string()));
    }

    if let Some(cycle) = w.digraph.find_cycle() {
        return fail(Failure::Cycle(cycle));
    }

    let ch = competition_hypergraph(&w.digraph);
    let ch_edges: BTreeSet<Vec<String>> = (0..ch.edge_count()).map(|e| ch.edge_names(e)).collect();
    let base_edges: BTreeSet<Vec<String>> =
        (0..w.base.edge_count()).map(|e| w.base.edge_names(e)).collect();
    if let Some(e) = ch_edges.difference(&base_edges).next() {
        return fail(Failure::ExtraEdge(e.clone()));
    }
    if let Some(e) = base_edges.difference(&ch_edges).next() {
        return fail(Failure::MissingEdge(e.clone()));
    }

    VerificationReport { failure: None }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_digraph() -> Digraph {
        // three prey arcs into a single vertex z
        let mut d = Digraph::new();
        d.ensure_vertex("v1");
        d.ensure_vertex("v2");
        d.ensure_vertex("v3");
        d.add_arc("v1", "z").unwrap();
        d.add_arc("v2", "z").unwrap();
        d.add_arc("v3", "z").unwrap();
        d
    }

    #[test]
    fn single_in_neighborhood_edge() {
        let ch = competition_hypergraph(&example_digraph());
        assert_eq!(ch.edge_count(), 1);
        assert_eq!(ch.edge_names(0), vec!["v1", "v2", "v3"]);
        let z = ch.vertex_id("z").unwrap();
        assert!(ch.is_isolated(z));
    }

    #[test]
    fn arc_free_digraph_has_no_edges() {
        let mut d = Digraph::new();
        d.ensure_vertex("a");
        d.ensure_vertex("b");
        assert_eq!(competition_hypergraph(&d).edge_count(), 0);
    }

    #[test]
    fn duplicate_in_neighborhoods_collapse() {
        let mut d = Digraph::new();
        d.add_arc("a", "c").unwrap();
        d.add_arc("b", "c").unwrap();
        d.add_arc("a", "d").unwrap();
        d.add_arc("b", "d").unwrap();
        let ch = competition_hypergraph(&d);
        assert_eq!(ch.edge_count(), 1);
        assert_eq!(ch.edge_names(0), vec!["a", "b"]);
    }

    #[test]
    fn verify_accepts_example() {
        let mut base = Hypergraph::new();
        base.add_edge(&["v1", "v2", "v3"]).unwrap();
        let w = Witness {
            digraph: example_digraph(),
            base,
            added: vec!["z".into()],
        };
        assert!(verify_witness(&w).ok());
    }

    #[test]
    fn verify_reports_missing_edge() {
        let mut triangle = Hypergraph::new();
        triangle.add_edge(&["v1", "v2"]).unwrap();
        triangle.add_edge(&["v1", "v3"]).unwrap();
        triangle.add_edge(&["v2", "v3"]).unwrap();
        let w = Witness {
            digraph: example_digraph(),
            base: triangle,
            added: vec!["z".into()],
        };
        let report = verify_witness(&w);
        // the digraph realizes the 3-set, not the 2-sets: the 3-set is extra
        assert!(matches!(
            report.failure,
            Some(Failure::ExtraEdge(_)) | Some(Failure::MissingEdge(_))
        ));
    }

    #[test]
    fn verify_reports_cycle() {
        let mut d = Digraph::new();
        d.add_arc("a", "b").unwrap();
        d.add_arc("b", "a").unwrap();
        let mut base = Hypergraph::new();
        base.ensure_vertex("a");
        base.ensure_vertex("b");
        let w = Witness {
            digraph: d,
            base,
            added: vec![],
        };
        assert_eq!(
            verify_witness(&w).failure,
            Some(Failure::Cycle(vec!["a".into(), "b".into(), "a".into()]))
        );
    }

    #[test]
    fn verify_reports_vertex_mismatch_first() {
        let mut d = Digraph::new();
        d.add_arc("a", "b").unwrap();
        d.add_arc("b", "a").unwrap();
        let mut base = Hypergraph::new();
        base.ensure_vertex("a");
        let w = Witness {
            digraph: d,
            base,
            added: vec![],
        };
        assert_eq!(
            verify_witness(&w).failure,
            Some(Failure::VertexMismatch("b".into()))
        );
    }
}
