//! Witness-digraph constructions: each returns a `Witness` that
//! `verify_witness` accepts, realizing the target hypergraph with a
//! known number of added vertices.

use std::collections::{BTreeMap, BTreeSet};

use crate::competition::{verify_witness, Witness};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

pub const DEFAULT_SEARCH_BUDGET: u64 = 1_000_000;

/// An ordering v1..vn of an r-uniform hypergraph where each v_i
/// (r <= i <= n) has degree one in the subhypergraph induced by the
/// first i vertices, together with the unique hyperedge e_i certifying
/// each position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EliminationOrdering {
    pub sequence: Vec<String>,
    /// 1-based position i -> the certificate edge e_i, sorted names.
    pub certificates: BTreeMap<usize, Vec<String>>,
}

/// A spanning subhypergraph H0 of H with an elimination ordering, plus
/// the leftover edges E(H) \ E(H0).
#[derive(Debug, Clone)]
pub struct SpanningCertificate {
    pub subhypergraph: Hypergraph,
    pub ordering: EliminationOrdering,
    pub extra_edges: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SearchStats {
    pub nodes: u64,
    /// true when the greedy first choice stalled somewhere and the
    /// search had to backtrack
    pub backtracked: bool,
    pub budget_exhausted: bool,
}

fn ids_by_name(h: &Hypergraph, ids: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut v: Vec<usize> = ids.collect();
    v.sort_by(|&a, &b| h.vertex_name(a).cmp(h.vertex_name(b)));
    v
}

/// Check an ordering against the elimination-ordering definition.
pub fn validate_elimination_ordering(h: &Hypergraph, ord: &EliminationOrdering) -> Result<()> {
    let r = h.uniformity().ok_or(Error::NotUniform)?;
    let n = h.vertex_count();
    if ord.sequence.len() != n {
        return Err(Error::Precondition(
            "ordering must cover every vertex exactly once".into(),
        ));
    }
    let mut ids = Vec::with_capacity(n);
    let mut seen = BTreeSet::new();
    for name in &ord.sequence {
        let id = h
            .vertex_id(name)
            .ok_or_else(|| Error::UnknownVertex(name.clone()))?;
        if !seen.insert(id) {
            return Err(Error::Precondition(format!("vertex `{name}` repeated in ordering")));
        }
        ids.push(id);
    }
    let keys: Vec<usize> = ord.certificates.keys().copied().collect();
    let expected: Vec<usize> = (r..=n).collect();
    if keys != expected {
        return Err(Error::Precondition(format!(
            "certificates must cover positions {r}..={n}"
        )));
    }
    let mut used_certs = BTreeSet::new();
    for i in r..=n {
        let prefix: BTreeSet<usize> = ids[..i].iter().copied().collect();
        let vi = ids[i - 1];
        let containing: Vec<&Vec<usize>> = h
            .edges()
            .iter()
            .filter(|e| e.contains(&vi) && e.iter().all(|v| prefix.contains(v)))
            .collect();
        if containing.len() != 1 {
            return Err(Error::Precondition(format!(
                "vertex `{}` has degree {} (not 1) in the prefix of length {i}",
                h.vertex_name(vi),
                containing.len()
            )));
        }
        let mut names: Vec<String> = containing[0]
            .iter()
            .map(|&v| h.vertex_name(v).to_string())
            .collect();
        names.sort();
        if ord.certificates[&i] != names {
            return Err(Error::Precondition(format!(
                "certificate at position {i} does not match the unique hyperedge"
            )));
        }
        if !used_certs.insert(names) {
            return Err(Error::Precondition(format!(
                "certificate at position {i} repeats an earlier certificate"
            )));
        }
    }
    Ok(())
}

/// Search for an elimination ordering by reverse peeling: repeatedly
/// remove a vertex of live degree one (lexicographically least first),
/// backtracking over the choice when the greedy path stalls.
pub fn find_elimination_ordering(h: &Hypergraph) -> Result<Option<EliminationOrdering>> {
    Ok(find_elimination_ordering_with_stats(h, DEFAULT_SEARCH_BUDGET)?.0)
}

pub fn find_elimination_ordering_with_stats(
    h: &Hypergraph,
    budget: u64,
) -> Result<(Option<EliminationOrdering>, SearchStats)> {
    let r = h.uniformity().ok_or(Error::NotUniform)?;
    let n = h.vertex_count();
    let mut stats = SearchStats::default();
    // necessary conditions; cheap rejections before any search
    if r >= n || h.edge_count() != n - r + 1 || !h.is_connected() {
        return Ok((None, stats));
    }

    let mut alive = vec![true; n];
    let mut seq = vec![usize::MAX; n];
    let mut certs: Vec<usize> = vec![usize::MAX; n + 1]; // position -> edge id

    fn live_edges_of(h: &Hypergraph, alive: &[bool], v: usize) -> Vec<usize> {
        h.edges()
            .iter()
            .enumerate()
            .filter(|(_, e)| e.contains(&v) && e.iter().all(|&u| alive[u]))
            .map(|(i, _)| i)
            .collect()
    }

    #[allow(clippy::too_many_arguments)]
    fn rec(
        h: &Hypergraph,
        r: usize,
        pos: usize,
        alive: &mut [bool],
        seq: &mut [usize],
        certs: &mut [usize],
        budget: u64,
        stats: &mut SearchStats,
    ) -> bool {
        if pos < r {
            return true;
        }
        stats.nodes += 1;
        if stats.nodes > budget {
            stats.budget_exhausted = true;
            return false;
        }
        let candidates = ids_by_name(
            h,
            (0..h.vertex_count()).filter(|&v| alive[v]).filter(|&v| {
                h.edges()
                    .iter()
                    .filter(|e| e.contains(&v) && e.iter().all(|&u| alive[u]))
                    .count()
                    == 1
            }),
        );
        for (idx, &v) in candidates.iter().enumerate() {
            if idx > 0 {
                stats.backtracked = true;
            }
            let live = live_edges_of(h, alive, v);
            debug_assert_eq!(live.len(), 1);
            alive[v] = false;
            seq[pos - 1] = v;
            certs[pos] = live[0];
            if rec(h, r, pos - 1, alive, seq, certs, budget, stats) {
                return true;
            }
            alive[v] = true;
        }
        false
    }

    let found = rec(h, r, n, &mut alive, &mut seq, &mut certs, budget, &mut stats);
    if !found {
        return Ok((None, stats));
    }
    let rest = ids_by_name(h, (0..n).filter(|&v| alive[v]));
    for (k, &v) in rest.iter().enumerate() {
        seq[k] = v;
    }
    let ordering = EliminationOrdering {
        sequence: seq.iter().map(|&v| h.vertex_name(v).to_string()).collect(),
        certificates: (r..=n).map(|i| (i, h.edge_names(certs[i]))).collect(),
    };
    validate_elimination_ordering(h, &ordering)?;
    Ok((Some(ordering), stats))
}

fn fresh_added(count: usize) -> Vec<String> {
    (1..=count).map(|i| format!("_z{i}")).collect()
}

fn base_digraph(h: &Hypergraph, added: &[String]) -> Digraph {
    let mut d = Digraph::new();
    for v in h.vertices() {
        d.ensure_vertex(v);
    }
    for z in added {
        d.ensure_vertex(z);
    }
    d
}

fn arcs_from_edge(d: &mut Digraph, members: &[String], target: &str) {
    for m in members {
        d.add_arc(m, target).expect("no self-arcs in constructions");
    }
}

fn checked(w: Witness) -> Witness {
    debug_assert!(verify_witness(&w).ok(), "construction produced an invalid witness");
    w
}

/// Single-edge witness: all of e into one fresh vertex.
fn single_edge_witness(h: &Hypergraph) -> Witness {
    debug_assert_eq!(h.edge_count(), 1);
    let added = fresh_added(1);
    let mut d = base_digraph(h, &added);
    arcs_from_edge(&mut d, &h.edge_names(0), &added[0]);
    checked(Witness {
        digraph: d,
        base: h.clone(),
        added,
    })
}

/// Realize a connected r-uniform hypergraph with an elimination
/// ordering using one added vertex: e_i feeds v_{i+1} and the last
/// certificate feeds the fresh vertex.
pub fn witness_from_elimination(h: &Hypergraph, ord: &EliminationOrdering) -> Result<Witness> {
    validate_elimination_ordering(h, ord)?;
    let r = h.uniformity().ok_or(Error::NotUniform)?;
    let n = h.vertex_count();
    if r >= n {
        return Err(Error::Precondition("requires r < |V(H)|".into()));
    }
    if !h.is_connected() {
        return Err(Error::Precondition("requires a connected hypergraph".into()));
    }
    let added = fresh_added(1);
    let mut d = base_digraph(h, &added);
    for i in r..n {
        arcs_from_edge(&mut d, &ord.certificates[&i], &ord.sequence[i]);
    }
    arcs_from_edge(&mut d, &ord.certificates[&n], &added[0]);
    Ok(checked(Witness {
        digraph: d,
        base: h.clone(),
        added,
    }))
}

/// Realize a connected r-uniform hypergraph from a spanning
/// subhypergraph with an elimination ordering: the subhypergraph uses
/// the elimination construction, and every leftover edge feeds its own
/// fresh vertex. Yields |E(H)| - |V(H)| + r added vertices.
pub fn witness_with_extra_edges(h: &Hypergraph, cert: &SpanningCertificate) -> Result<Witness> {
    let r = h.uniformity().ok_or(Error::NotUniform)?;
    let n = h.vertex_count();
    if r >= n {
        return Err(Error::Precondition("requires r < |V(H)|".into()));
    }
    if !h.is_connected() {
        return Err(Error::Precondition("requires a connected hypergraph".into()));
    }
    let h0 = &cert.subhypergraph;
    if h0.vertices() != h.vertices() {
        return Err(Error::Precondition(
            "subhypergraph must span the same vertex set".into(),
        ));
    }
    let h_edges: BTreeSet<Vec<String>> = (0..h.edge_count()).map(|e| h.edge_names(e)).collect();
    let h0_edges: BTreeSet<Vec<String>> = (0..h0.edge_count()).map(|e| h0.edge_names(e)).collect();
    if !h0_edges.is_subset(&h_edges) {
        return Err(Error::Precondition("E(H0) must be a subset of E(H)".into()));
    }
    let expected_extra: BTreeSet<Vec<String>> = h_edges.difference(&h0_edges).cloned().collect();
    let given_extra: BTreeSet<Vec<String>> = cert.extra_edges.iter().cloned().collect();
    if expected_extra != given_extra || given_extra.len() != cert.extra_edges.len() {
        return Err(Error::Precondition(
            "extra edges must be exactly E(H) \\ E(H0)".into(),
        ));
    }

    let inner = witness_from_elimination(h0, &cert.ordering)?;
    let added = fresh_added(1 + cert.extra_edges.len());
    let mut d = base_digraph(h, &added);
    for &(s, t) in inner.digraph.arcs() {
        let sn = inner.digraph.vertex_name(s).to_string();
        let tn = inner.digraph.vertex_name(t);
        let tn = if tn == "_z1" { added[0].clone() } else { tn.to_string() };
        d.add_arc(&sn, &tn).expect("no self-arcs");
    }
    for (i, e) in cert.extra_edges.iter().enumerate() {
        arcs_from_edge(&mut d, e, &added[i + 1]);
    }
    Ok(checked(Witness {
        digraph: d,
        base: h.clone(),
        added,
    }))
}

/// Realize a connected graph with |E| - |V| + 2 added vertices: build a
/// spanning tree, peel pendant vertices into an elimination ordering of
/// the tree, and treat the chords as extra edges.
pub fn witness_connected_graph(g: &Hypergraph) -> Result<Witness> {
    if g.uniformity() != Some(2) {
        return Err(Error::Precondition("requires a 2-uniform hypergraph (graph)".into()));
    }
    if !g.is_connected() || g.vertex_count() < 2 {
        return Err(Error::Precondition(
            "requires a connected graph on at least two vertices".into(),
        ));
    }
    let n = g.vertex_count();
    if n == 2 {
        return Ok(single_edge_witness(g));
    }

    // spanning tree by BFS from the first declared vertex
    let mut in_tree = vec![false; n];
    in_tree[0] = true;
    let mut tree_edges: Vec<usize> = Vec::new();
    let mut queue = vec![0usize];
    while let Some(v) = queue.pop() {
        for (ei, e) in g.edges().iter().enumerate() {
            if !e.contains(&v) {
                continue;
            }
            let &other = e.iter().find(|&&u| u != v).unwrap();
            if !in_tree[other] {
                in_tree[other] = true;
                tree_edges.push(ei);
                queue.push(other);
            }
        }
    }
    let tree = g.spanning_with_edges(&tree_edges);

    // peel pendant vertices, lexicographically least first
    let mut alive = vec![true; n];
    let mut seq = vec![usize::MAX; n];
    let mut certs: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    let live_deg = |alive: &[bool], v: usize, t: &Hypergraph| {
        t.edges()
            .iter()
            .filter(|e| e.contains(&v) && e.iter().all(|&u| alive[u]))
            .count()
    };
    for pos in (2..=n).rev() {
        let pendant = *ids_by_name(
            g,
            (0..n).filter(|&v| alive[v] && live_deg(&alive, v, &tree) == 1),
        )
        .first()
        .expect("a tree always has a pendant vertex");
        let e = tree
            .edges()
            .iter()
            .find(|e| e.contains(&pendant) && e.iter().all(|&u| alive[u]))
            .unwrap();
        let mut names: Vec<String> = e.iter().map(|&u| tree.vertex_name(u).to_string()).collect();
        names.sort();
        certs.insert(pos, names);
        seq[pos - 1] = pendant;
        alive[pendant] = false;
    }
    seq[0] = (0..n).find(|&v| alive[v]).unwrap();

    let ordering = EliminationOrdering {
        sequence: seq.iter().map(|&v| g.vertex_name(v).to_string()).collect(),
        certificates: certs,
    };
    let tree_set: BTreeSet<Vec<String>> =
        (0..tree.edge_count()).map(|e| tree.edge_names(e)).collect();
    let extra: Vec<Vec<String>> = (0..g.edge_count())
        .map(|e| g.edge_names(e))
        .filter(|e| !tree_set.contains(e))
        .collect();
    witness_with_extra_edges(
        g,
        &SpanningCertificate {
            subhypergraph: tree,
            ordering,
            extra_edges: extra,
        },
    )
}

/// The complete r-uniform hypergraph on vertices v1..vn.
pub fn complete_uniform(n: usize, r: usize) -> Result<Hypergraph> {
    if r < 2 || r > n {
        return Err(Error::Precondition("requires 2 <= r <= n".into()));
    }
    let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let mut h = Hypergraph::new();
    for v in &names {
        h.ensure_vertex(v);
    }
    let mut pick: Vec<usize> = (0..r).collect();
    loop {
        let members: Vec<&str> = pick.iter().map(|&i| names[i].as_str()).collect();
        h.add_edge(&members)?;
        // next r-combination
        let mut i = r;
        loop {
            if i == 0 {
                return Ok(h);
            }
            i -= 1;
            if pick[i] != i + n - r {
                pick[i] += 1;
                for j in i + 1..r {
                    pick[j] = pick[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Realize K(n,r) with (n choose r) - n + r added vertices via the
/// consecutive-window spanning subhypergraph.
pub fn witness_complete_uniform(n: usize, r: usize) -> Result<Witness> {
    let h = complete_uniform(n, r)?;
    if r == n {
        return Ok(single_edge_witness(&h));
    }
    let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let mut h0 = Hypergraph::new();
    for v in &names {
        h0.ensure_vertex(v);
    }
    let mut certs: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for i in r..=n {
        let mut window: Vec<String> = (i - r + 1..=i).map(|j| format!("v{j}")).collect();
        let refs: Vec<&str> = window.iter().map(|s| s.as_str()).collect();
        h0.add_edge(&refs)?;
        window.sort();
        certs.insert(i, window);
    }
    let h0_set: BTreeSet<Vec<String>> = (0..h0.edge_count()).map(|e| h0.edge_names(e)).collect();
    let extra: Vec<Vec<String>> = (0..h.edge_count())
        .map(|e| h.edge_names(e))
        .filter(|e| !h0_set.contains(e))
        .collect();
    witness_with_extra_edges(
        &h,
        &SpanningCertificate {
            subhypergraph: h0,
            ordering: EliminationOrdering {
                sequence: names,
                certificates: certs,
            },
            extra_edges: extra,
        },
    )
}

/// Realize a hypergraph whose degree-one vertex count q satisfies
/// q >= |E(H)| - 1, using one added vertex: edges are labeled so that
/// those containing a degree-one vertex come first, and e_i feeds
/// v_{i-1}.
pub fn witness_degree_one(h: &Hypergraph) -> Result<Witness> {
    if !h.isolated_vertices().is_empty() {
        return Err(Error::Precondition("requires no isolated vertex".into()));
    }
    let t = h.edge_count();
    let q_ids = ids_by_name(h, (0..h.vertex_count()).filter(|&v| h.degree_of(v) == 1));
    if q_ids.len() + 1 < t {
        return Err(Error::Precondition(format!(
            "requires at least |E(H)|-1 = {} degree-one vertices, found {}",
            t.saturating_sub(1),
            q_ids.len()
        )));
    }
    let q_set: BTreeSet<usize> = q_ids.iter().copied().collect();

    // edges containing a degree-one vertex first, lex within each group
    let mut with_q: Vec<usize> = Vec::new();
    let mut without_q: Vec<usize> = Vec::new();
    for ei in 0..t {
        if h.edges()[ei].iter().any(|v| q_set.contains(v)) {
            with_q.push(ei);
        } else {
            without_q.push(ei);
        }
    }
    let labeled: Vec<usize> = with_q.iter().chain(without_q.iter()).copied().collect();

    // v_i in e_i for 1 <= i <= l, chosen from the degree-one vertices
    let mut targets: Vec<usize> = Vec::new(); // vertex ids for v_1..v_q
    let mut taken: BTreeSet<usize> = BTreeSet::new();
    for &ei in &with_q {
        let v = *ids_by_name(
            h,
            h.edges()[ei].iter().copied().filter(|v| q_set.contains(v)),
        )
        .first()
        .expect("edge in the first group contains a degree-one vertex");
        targets.push(v);
        taken.insert(v);
    }
    for &v in &q_ids {
        if !taken.contains(&v) {
            targets.push(v);
        }
    }

    let added = fresh_added(1);
    let mut d = base_digraph(h, &added);
    for (i, &ei) in labeled.iter().enumerate() {
        // e_{i+1} -> v_i, where v_0 is the fresh vertex
        let target = if i == 0 {
            added[0].clone()
        } else {
            h.vertex_name(targets[i - 1]).to_string()
        };
        arcs_from_edge(&mut d, &h.edge_names(ei), &target);
    }
    Ok(checked(Witness {
        digraph: d,
        base: h.clone(),
        added,
    }))
}

/// Realize an acyclic r-uniform hypergraph (r >= 3, no isolated
/// vertex) with a single added vertex: each component is realized via
/// the degree-one construction, then later components are folded in by
/// redirecting the arcs aimed at their added vertex onto a source
/// vertex of the accumulated digraph.
pub fn witness_acyclic_uniform(h: &Hypergraph) -> Result<Witness> {
    let r = h.uniformity().ok_or(Error::NotUniform)?;
    if r < 3 {
        return Err(Error::Precondition("requires r >= 3".into()));
    }
    if !h.has_no_cycle() {
        return Err(Error::Precondition("requires an acyclic hypergraph".into()));
    }
    if !h.isolated_vertices().is_empty() {
        return Err(Error::Precondition("requires no isolated vertex".into()));
    }

    let components = h.connected_components();
    let mut acc: Option<Digraph> = None;
    for block in &components {
        let part = h.induced(block);
        let w = witness_degree_one(&part)?;
        match acc.take() {
            None => acc = Some(w.digraph),
            Some(mut d) => {
                let v = *ids_by_name_d(&d, d.sources().into_iter())
                    .first()
                    .expect("an acyclic digraph has a source");
                let v_name = d.vertex_name(v).to_string();
                let z = w.digraph.vertex_id("_z1").unwrap();
                let feeders = w.digraph.in_neighborhood(z);
                for u in w.digraph.vertices() {
                    if u != "_z1" {
                        d.ensure_vertex(u);
                    }
                }
                for &(s, t) in w.digraph.arcs() {
                    if t == z {
                        continue;
                    }
                    d.add_arc(w.digraph.vertex_name(s), w.digraph.vertex_name(t))?;
                }
                for &f in &feeders {
                    d.add_arc(w.digraph.vertex_name(f), &v_name)?;
                }
                acc = Some(d);
            }
        }
    }
    let d = acc.expect("at least one component");
    // rebuild with the base declaration order for deterministic output
    let added = fresh_added(1);
    let mut out = base_digraph(h, &added);
    for &(s, t) in d.arcs() {
        out.add_arc(d.vertex_name(s), d.vertex_name(t))?;
    }
    Ok(checked(Witness {
        digraph: out,
        base: h.clone(),
        added,
    }))
}

// ids_by_name for digraphs
fn ids_by_name_d(d: &Digraph, ids: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut v: Vec<usize> = ids.collect();
    v.sort_by(|&a, &b| d.vertex_name(a).cmp(d.vertex_name(b)));
    v
}

#[derive(Debug, Clone, Default)]
pub struct SpanningSearch {
    pub certificate: Option<SpanningCertificate>,
    pub budget_exhausted: bool,
}

/// Search for a spanning subhypergraph of size |V| - r + 1 with an
/// elimination ordering, enumerating edge subsets in lexicographic
/// order under a shared node budget.
pub fn find_spanning_certificate(h: &Hypergraph, budget: u64) -> Result<SpanningSearch> {
    let r = match h.uniformity() {
        Some(r) => r,
        None => return Ok(SpanningSearch::default()),
    };
    let n = h.vertex_count();
    if r >= n || !h.is_connected() {
        return Ok(SpanningSearch::default());
    }
    let t = h.edge_count();
    let need = n - r + 1;
    if t < need {
        return Ok(SpanningSearch::default());
    }
    let mut spent: u64 = 0;
    let mut pick: Vec<usize> = (0..need).collect();
    loop {
        spent += 1;
        if spent > budget {
            return Ok(SpanningSearch {
                certificate: None,
                budget_exhausted: true,
            });
        }
        let h0 = h.spanning_with_edges(&pick);
        let remaining = budget.saturating_sub(spent);
        let (found, stats) = find_elimination_ordering_with_stats(&h0, remaining)?;
        spent += stats.nodes;
        if let Some(ordering) = found {
            let h0_set: BTreeSet<Vec<String>> =
                (0..h0.edge_count()).map(|e| h0.edge_names(e)).collect();
            let extra: Vec<Vec<String>> = (0..t)
                .map(|e| h.edge_names(e))
                .filter(|e| !h0_set.contains(e))
                .collect();
            return Ok(SpanningSearch {
                certificate: Some(SpanningCertificate {
                    subhypergraph: h0,
                    ordering,
                    extra_edges: extra,
                }),
                budget_exhausted: false,
            });
        }
        if stats.budget_exhausted {
            return Ok(SpanningSearch {
                certificate: None,
                budget_exhausted: true,
            });
        }
        // next combination of `need` out of `t`
        let mut i = need;
        loop {
            if i == 0 {
                return Ok(SpanningSearch::default());
            }
            i -= 1;
            if pick[i] != i + t - need {
                pick[i] += 1;
                for j in i + 1..need {
                    pick[j] = pick[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Universal fallback: one fresh vertex per hyperedge. Always acyclic,
/// always verifies, k = |E(H)|.
pub fn witness_fallback(h: &Hypergraph) -> Witness {
    let added = fresh_added(h.edge_count());
    let mut d = base_digraph(h, &added);
    for (i, z) in added.iter().enumerate() {
        arcs_from_edge(&mut d, &h.edge_names(i), z);
    }
    checked(Witness {
        digraph: d,
        base: h.clone(),
        added,
    })
}

fn dispatch_isolated_free(h: &Hypergraph, budget: u64) -> Witness {
    debug_assert!(h.isolated_vertices().is_empty());
    if h.edge_count() == 0 {
        return checked(Witness {
            digraph: base_digraph(h, &[]),
            base: h.clone(),
            added: vec![],
        });
    }
    if h.uniformity() == Some(2) {
        if h.is_connected() {
            return witness_connected_graph(h).expect("preconditions checked");
        }
        // per-component, renumbering the added vertices
        let mut d = Digraph::new();
        for v in h.vertices() {
            d.ensure_vertex(v);
        }
        let mut added: Vec<String> = Vec::new();
        for block in h.connected_components() {
            let part = h.induced(&block);
            let w = witness_connected_graph(&part).expect("component is connected");
            let mut rename: BTreeMap<String, String> = BTreeMap::new();
            for z in &w.added {
                let fresh = format!("_z{}", added.len() + rename.len() + 1);
                rename.insert(z.clone(), fresh);
            }
            for &(s, t) in w.digraph.arcs() {
                let sn = w.digraph.vertex_name(s);
                let tn = w.digraph.vertex_name(t);
                let sn = rename.get(sn).cloned().unwrap_or_else(|| sn.to_string());
                let tn = rename.get(tn).cloned().unwrap_or_else(|| tn.to_string());
                d.add_arc(&sn, &tn).expect("no self-arcs");
            }
            added.extend(w.added.iter().map(|z| rename[z].clone()));
        }
        return checked(Witness {
            digraph: d,
            base: h.clone(),
            added,
        });
    }
    if let Some(r) = h.uniformity() {
        if r >= 3 && h.has_no_cycle() {
            return witness_acyclic_uniform(h).expect("preconditions checked");
        }
    }
    let q = (0..h.vertex_count()).filter(|&v| h.degree_of(v) == 1).count();
    if q + 1 >= h.edge_count() {
        return witness_degree_one(h).expect("preconditions checked");
    }
    if h.uniformity().is_some() {
        if let Ok(SpanningSearch {
            certificate: Some(cert),
            ..
        }) = find_spanning_certificate(h, budget)
        {
            return witness_with_extra_edges(h, &cert).expect("certificate is valid");
        }
    }
    witness_fallback(h)
}

/// Pick a construction for an arbitrary hypergraph and always return a
/// verified witness. Isolated vertices are stripped first and then
/// reused in place of added vertices, so k drops by one per isolated
/// vertex, floored at zero.
pub fn construct_auto(h: &Hypergraph) -> Witness {
    construct_auto_with_budget(h, DEFAULT_SEARCH_BUDGET)
}

pub fn construct_auto_with_budget(h: &Hypergraph, budget: u64) -> Witness {
    let (core, isolated) = h.without_isolated();
    let w = dispatch_isolated_free(&core, budget);

    // reuse isolated vertices as prey in place of added vertices
    let reuse = isolated.len().min(w.added.len());
    let mut rename: BTreeMap<String, String> = BTreeMap::new();
    for (i, z) in w.added.iter().enumerate() {
        if i < reuse {
            rename.insert(z.clone(), isolated[i].clone());
        } else {
            rename.insert(z.clone(), format!("_z{}", i - reuse + 1));
        }
    }
    let added: Vec<String> = w.added[reuse..]
        .iter()
        .map(|z| rename[z].clone())
        .collect();
    let mut d = base_digraph(h, &added);
    for &(s, t) in w.digraph.arcs() {
        let sn = w.digraph.vertex_name(s);
        let tn = w.digraph.vertex_name(t);
        let sn = rename.get(sn).cloned().unwrap_or_else(|| sn.to_string());
        let tn = rename.get(tn).cloned().unwrap_or_else(|| tn.to_string());
        d.add_arc(&sn, &tn).expect("no self-arcs");
    }
    let out = Witness {
        digraph: d,
        base: h.clone(),
        added,
    };
    assert!(
        verify_witness(&out).ok(),
        "construct_auto must always produce a verified witness"
    );
    out
}
